//! Named small categories used throughout the test suites and as seeds for
//! the default instance pool.

use super::{FinCat, FinCatData};

/// One object, identity only.
pub fn terminal() -> FinCat {
    FinCat::from_data(FinCatData {
        n_objects: 1,
        mor: vec![(0, 0)],
        identity: vec![0],
        compose: vec![(0, 0, 0)],
    })
    .expect("fixture is a category")
}

/// The empty category.
pub fn empty() -> FinCat {
    FinCat::from_data(FinCatData::default()).expect("fixture is a category")
}

/// `n` objects, identities only.
pub fn discrete(n: usize) -> FinCat {
    FinCat::from_data(FinCatData {
        n_objects: n,
        mor: (0..n).map(|x| (x, x)).collect(),
        identity: (0..n).collect(),
        compose: (0..n).map(|x| (x, x, x)).collect(),
    })
    .expect("fixture is a category")
}

/// Two objects 0, 1 and one non-identity arrow 2 : 0 -> 1.
pub fn walking_arrow() -> FinCat {
    FinCat::from_data(FinCatData {
        n_objects: 2,
        mor: vec![(0, 0), (1, 1), (0, 1)],
        identity: vec![0, 1],
        compose: vec![(0, 0, 0), (1, 1, 1), (0, 2, 2), (2, 1, 2)],
    })
    .expect("fixture is a category")
}

/// The cyclic group of order `n` as a one-object groupoid. Morphism `k`
/// is the k-th power of the generator; composition adds indices mod n.
pub fn cyclic_group(n: usize) -> FinCat {
    assert!(n >= 1);
    let mut compose = Vec::new();
    for a in 0..n {
        for b in 0..n {
            compose.push((a, b, (a + b) % n));
        }
    }
    FinCat::from_data(FinCatData {
        n_objects: 1,
        mor: vec![(0, 0); n],
        identity: vec![0],
        compose,
    })
    .expect("fixture is a category")
}

/// The group with two elements as a one-object groupoid.
pub fn z2() -> FinCat {
    cyclic_group(2)
}

/// The free commuting square: product of the walking arrow with itself.
/// 4 objects, 9 morphisms.
pub fn commuting_square() -> FinCat {
    super::product_category(&walking_arrow(), &walking_arrow()).cat
}

/// Two objects and two parallel non-identity arrows 2, 3 : 0 -> 1.
pub fn parallel_pair() -> FinCat {
    FinCat::from_data(FinCatData {
        n_objects: 2,
        mor: vec![(0, 0), (1, 1), (0, 1), (0, 1)],
        identity: vec![0, 1],
        compose: vec![
            (0, 0, 0),
            (1, 1, 1),
            (0, 2, 2),
            (2, 1, 2),
            (0, 3, 3),
            (3, 1, 3),
        ],
    })
    .expect("fixture is a category")
}

/// Two objects joined by a single isomorphism: morphisms 0, 1 identities,
/// 2 : 0 -> 1 and 3 : 1 -> 0 mutually inverse.
pub fn iso_pair() -> FinCat {
    FinCat::from_data(FinCatData {
        n_objects: 2,
        mor: vec![(0, 0), (1, 1), (0, 1), (1, 0)],
        identity: vec![0, 1],
        compose: vec![
            (0, 0, 0),
            (1, 1, 1),
            (0, 2, 2),
            (2, 1, 2),
            (1, 3, 3),
            (3, 0, 3),
            (2, 3, 0),
            (3, 2, 1),
        ],
    })
    .expect("fixture is a category")
}

/// Chain 0 -> 1 -> 2 with the composite filled in: morphisms 0, 1, 2 are
/// identities, 3 : 0 -> 1, 4 : 1 -> 2, 5 : 0 -> 2.
pub fn chain3() -> FinCat {
    FinCat::from_data(FinCatData {
        n_objects: 3,
        mor: vec![(0, 0), (1, 1), (2, 2), (0, 1), (1, 2), (0, 2)],
        identity: vec![0, 1, 2],
        compose: vec![
            (0, 0, 0),
            (1, 1, 1),
            (2, 2, 2),
            (0, 3, 3),
            (3, 1, 3),
            (1, 4, 4),
            (4, 2, 4),
            (0, 5, 5),
            (5, 2, 5),
            (3, 4, 5),
        ],
    })
    .expect("fixture is a category")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::validate_category;

    #[test]
    fn fixtures_are_categories() {
        for c in [
            terminal(),
            empty(),
            discrete(3),
            walking_arrow(),
            z2(),
            cyclic_group(5),
            parallel_pair(),
            chain3(),
            commuting_square(),
            iso_pair(),
        ] {
            assert!(validate_category(&c.to_data()).is_empty());
        }
    }

    #[test]
    fn iso_pair_is_a_connected_groupoid() {
        let c = iso_pair();
        assert!(c.is_groupoid());
        assert_eq!(c.inverse(2), Some(3));
    }

    #[test]
    fn z2_is_a_groupoid_with_two_morphisms() {
        let c = z2();
        assert_eq!(c.n_mor(), 2);
        assert!(c.is_groupoid());
        assert_eq!(c.inverse(1), Some(1));
    }

    #[test]
    fn walking_arrow_is_not_a_groupoid() {
        assert!(!walking_arrow().is_groupoid());
    }
}
