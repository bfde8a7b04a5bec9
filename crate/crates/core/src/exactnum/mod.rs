//! Exact scalars: rationals and cyclotomic field elements.

mod cyclo;
mod poly;
mod rational;

pub use cyclo::{eval_int_poly, nth_roots_of_minus_one, CycloNum, CyclotomicField};
pub use poly::{cyclotomic_polynomial, euler_phi, IntPoly};
pub use rational::{Rational, Rounding};
