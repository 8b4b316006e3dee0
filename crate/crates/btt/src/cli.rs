//! Command-line front end. Placeholder during scaffolding.

pub fn main() -> i32 {
    eprintln!("btt: not yet wired");
    2
}
