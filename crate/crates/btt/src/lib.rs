//! Proof-checking kernel for a small two-dimensional type theory with
//! directed reductions, together with an executable library of finite
//! comprehension-bicategory models and a soundness harness that denotes
//! every structural equality rule into those models and compares the
//! resulting cells exactly.

pub mod bicat;
pub mod cli;
pub mod displayed;
pub mod fincat;
pub mod sexp;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
