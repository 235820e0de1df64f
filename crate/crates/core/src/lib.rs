//! Monogenicity toolkit for trinomials `x^m + A x^(m-1) + B` and their power
//! compositions `F(x^(p^n))`.
//!
//! The crate decides irreducibility (Capelli lifting, mod-4 residue classes,
//! direct factorization over Z), computes trinomial discriminants in closed
//! form (Swan), runs the Dedekind index criterion and the Jakhar-Khanduja-
//! Sangwan trinomial criterion prime by prime, certifies members of the
//! monogenic families parametrized by `(m, p, u, t)`, and estimates the
//! density of prime parameters `t` for which the certifying product
//! `G(t) = B * D` is squarefree.
//!
//! All arithmetic is exact (`num_bigint`); randomized subroutines (equal
//! degree splitting, sampling in self-checks) draw from fixed-seed ChaCha8
//! streams so every run is reproducible.

pub mod disc;
pub mod error;
pub mod families;
pub mod integers;
pub mod monogenic;
pub mod poly;
pub(crate) mod serde_utils;
pub mod zfactor;

pub use error::Error;
