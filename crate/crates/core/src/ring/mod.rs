//! Exact arithmetic in the formal variables `T = p^-s` and `P = p^-1`.

mod poly;
mod rational;
mod univariate;

pub use poly::{BiPoly, Exponent};
pub use rational::{BiRationalFunction, BinomialFactor};
pub use univariate::{is_prime, specialize_poly, UniPoly, UniRational};
