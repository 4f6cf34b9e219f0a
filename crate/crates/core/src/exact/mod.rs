//! Exact scalar, polynomial, group-action and linear-algebra substrate.

mod hompoly;
mod mat2;
mod qmatrix;
mod rational;

pub use hompoly::HomPoly;
pub use mat2::Mat2;
pub use qmatrix::QMatrix;
pub use rational::{primitive_form, primitive_scale, rat, rat_big, rat_int, Rational};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
pub fn binom(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut out = BigInt::one();
    for i in 1..=k {
        out = out * BigInt::from(n - k + i) / BigInt::from(i);
    }
    out
}

/// Exact monomial beta integral: the integral over [0,1] of t^a (1-t)^b,
/// which equals a! b! / (a+b+1)!.
pub fn beta_integral(a: u32, b: u32) -> Rational {
    Rational::new(factorial(a) * factorial(b), factorial(a + b + 1))
}

fn factorial(n: u32) -> BigInt {
    let mut out = BigInt::one();
    for i in 2..=u64::from(n) {
        out *= BigInt::from(i);
    }
    out
}
