//! Default instance pool: enumerated categories under configurable caps,
//! plus named fixtures for structural variety the small caps lack
//! (parallel arrows, composable chains, a commuting square).

use super::{enumerate_categories, fixtures, FinCat};

/// Caps for the enumerated part of the pool. Fixtures are always included
/// whatever the caps say.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PoolConfig {
    pub max_objects: usize,
    pub max_morphisms: usize,
}

/// Smallest morphism cap the CLI accepts; below this the enumerated pool
/// loses the fixture-sized categories it is meant to subsume.
pub const MIN_POOL_BOUND: usize = 3;

impl Default for PoolConfig {
    // measured: the cubic law suites stay well under a minute at caps
    // (3, 3); morphism cap 4 already costs minutes and cap 6 costs an
    // hour of enumeration alone
    fn default() -> PoolConfig {
        PoolConfig { max_objects: 3, max_morphisms: 3 }
    }
}

impl PoolConfig {
    /// Pool with the morphism cap raised or lowered; objects stay capped.
    pub fn with_morphism_cap(m: usize) -> PoolConfig {
        PoolConfig { max_morphisms: m, ..PoolConfig::default() }
    }
}

/// The category pool: fixtures first, in a stable order, then every
/// enumerated category under the caps not already present. Equality is
/// table identity, so only exact duplicates collapse.
pub fn category_pool(cfg: PoolConfig) -> Vec<FinCat> {
    let mut out = vec![
        fixtures::terminal(),
        fixtures::walking_arrow(),
        fixtures::z2(),
        fixtures::commuting_square(),
        fixtures::parallel_pair(),
        fixtures::cyclic_group(3),
        fixtures::chain3(),
        fixtures::iso_pair(),
    ];
    for c in enumerate_categories(cfg.max_objects, cfg.max_morphisms) {
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::validate_category;

    #[test]
    fn default_pool_is_valid_and_deduplicated() {
        let pool = category_pool(PoolConfig::default());
        for c in &pool {
            assert!(validate_category(&c.to_data()).is_empty());
        }
        for (i, c) in pool.iter().enumerate() {
            assert!(!pool[..i].contains(c));
        }
        // 8 fixtures + 23 enumerated - 4 exact duplicates
        assert_eq!(pool.len(), 27);
    }

    #[test]
    fn pool_has_structural_variety() {
        let pool = category_pool(PoolConfig::default());
        assert!(pool.iter().any(|c| c.n_objects() == 0));
        assert!(pool.iter().any(|c| c.is_groupoid() && c.n_mor() > 1));
        assert!(pool.iter().any(|c| c.is_groupoid() && c.n_objects() == 2 && c.n_mor() == 4));
        assert!(pool.iter().any(|c| !c.is_groupoid()));
        // a category with parallel non-identity arrows
        assert!(pool.iter().any(|c| {
            c.morphisms().any(|f| {
                !c.is_identity(f)
                    && c.morphisms().any(|g| {
                        g != f
                            && !c.is_identity(g)
                            && c.src(f) == c.src(g)
                            && c.tgt(f) == c.tgt(g)
                    })
            })
        }));
    }
}
