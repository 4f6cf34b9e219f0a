//! The exact scalar field and primitive-integer vector scaling.

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exact scalar used throughout: an arbitrary-precision fraction, always
/// reduced to lowest terms with a positive denominator (both invariants are
/// maintained by `num-rational`). Zero is represented as 0/1.
pub type Rational = num_rational::BigRational;

/// Rational from a machine-integer pair.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Rational from a machine integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational from a big integer.
pub fn rat_big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Scale a vector in place to primitive integer form: all entries integral,
/// gcd of the entries 1, first nonzero entry positive. Returns the factor the
/// vector was multiplied by. The zero vector is left untouched (factor 1).
pub fn primitive_scale(v: &mut [Rational]) -> Rational {
    if v.iter().all(Zero::is_zero) {
        return Rational::one();
    }
    let mut lcm = BigInt::one();
    for x in v.iter() {
        lcm = lcm.lcm(x.denom());
    }
    let mut gcd = BigInt::zero();
    for x in v.iter() {
        gcd = gcd.gcd(&(x.numer() * &lcm / x.denom()));
    }
    let mut factor = Rational::new(lcm, gcd);
    let first = v.iter().find(|x| !x.is_zero()).expect("nonzero entry");
    if (first * &factor).is_negative() {
        factor = -factor;
    }
    for x in v.iter_mut() {
        *x *= &factor;
    }
    factor
}

/// Primitive-integer form of a vector along with the applied factor.
pub fn primitive_form(v: &[Rational]) -> (Vec<Rational>, Rational) {
    let mut out = v.to_vec();
    let factor = primitive_scale(&mut out);
    (out, factor)
}
