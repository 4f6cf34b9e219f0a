//! Homogeneous bivariate polynomials with exact rational coefficients.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::mat2::Mat2;
use super::rational::{rat_big, Rational};
use crate::error::{Error, Result};

/// A homogeneous polynomial in X and Y of fixed total degree d, stored as a
/// dense vector of d+1 rationals; entry i is the coefficient of X^i Y^(d-i).
/// The zero polynomial of any degree is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomPoly {
    coeffs: Vec<Rational>,
}

impl HomPoly {
    /// The zero polynomial of the given degree.
    pub fn zero(degree: usize) -> HomPoly {
        HomPoly {
            coeffs: vec![Rational::zero(); degree + 1],
        }
    }

    /// Build from a dense coefficient vector (ascending powers of X); the
    /// vector length fixes the degree and must be at least 1.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> HomPoly {
        assert!(
            !coeffs.is_empty(),
            "a homogeneous polynomial needs degree >= 0"
        );
        HomPoly { coeffs }
    }

    /// The monomial c * X^xpow * Y^(degree-xpow).
    pub fn monomial(degree: usize, xpow: usize, coeff: Rational) -> HomPoly {
        assert!(xpow <= degree);
        let mut p = HomPoly::zero(degree);
        p.coeffs[xpow] = coeff;
        p
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of X^xpow Y^(degree-xpow); zero outside the range.
    pub fn coeff(&self, xpow: usize) -> Rational {
        self.coeffs
            .get(xpow)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// True when the polynomial is fixed by swapping X and Y.
    pub fn is_symmetric(&self) -> bool {
        let d = self.degree();
        (0..=d / 2).all(|i| self.coeffs[i] == self.coeffs[d - i])
    }

    /// True when swapping X and Y negates the polynomial.
    pub fn is_antisymmetric(&self) -> bool {
        let d = self.degree();
        (0..=d / 2).all(|i| self.coeffs[i] == -&self.coeffs[d - i])
    }

    pub fn scaled(&self, c: &Rational) -> HomPoly {
        HomPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Product of two homogeneous polynomials; degrees add.
    pub fn mul(&self, other: &HomPoly) -> HomPoly {
        let d = self.degree() + other.degree();
        let mut out = vec![Rational::zero(); d + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        HomPoly::from_coeffs(out)
    }

    /// Multiply by X (degree rises by one).
    pub fn mul_x(&self) -> HomPoly {
        let mut out = vec![Rational::zero(); self.coeffs.len() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[i + 1] = a.clone();
        }
        HomPoly::from_coeffs(out)
    }

    /// Multiply by Y (degree rises by one).
    pub fn mul_y(&self) -> HomPoly {
        let mut out = self.coeffs.clone();
        out.push(Rational::zero());
        HomPoly::from_coeffs(out)
    }

    /// Right action of a matrix: F(X,Y) becomes F(aX+bY, cX+dY). Composition
    /// follows matrix multiplication: p.slash(g).slash(h) == p.slash(g*h).
    pub fn slash(&self, g: &Mat2) -> HomPoly {
        let d = self.degree();
        // powers[0][j] = (aX+bY)^j, powers[1][j] = (cX+dY)^j, as integer rows
        let pow1 = binary_power_rows(g.a, g.b, d);
        let pow2 = binary_power_rows(g.c, g.d, d);
        let mut out = vec![Rational::zero(); d + 1];
        for (i, coeff) in self.coeffs.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let left = &pow1[i];
            let right = &pow2[d - i];
            for (u, lv) in left.iter().enumerate() {
                if lv.is_zero() {
                    continue;
                }
                for (v, rv) in right.iter().enumerate() {
                    if !rv.is_zero() {
                        out[u + v] += coeff * rat_big(lv * rv);
                    }
                }
            }
        }
        HomPoly::from_coeffs(out)
    }

    /// Formal partial derivative in X. The degree drops by one; a degree-zero
    /// input returns the zero polynomial of degree zero.
    pub fn partial_x(&self) -> HomPoly {
        if self.degree() == 0 {
            return HomPoly::zero(0);
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate().skip(1) {
            out[i - 1] = a * rat_big(BigInt::from(i));
        }
        HomPoly::from_coeffs(out)
    }

    /// Homogenize a one-variable coefficient list (ascending powers of x):
    /// the term x^i becomes X^i Y^(target_degree - i).
    pub fn from_univariate(coeffs: &[Rational], target_degree: usize) -> Result<HomPoly> {
        let effective = coeffs.iter().rposition(|c| !c.is_zero()).unwrap_or(0);
        if effective > target_degree {
            return Err(Error::DegreeTooLarge {
                degree: effective,
                target: target_degree,
            });
        }
        let mut out = vec![Rational::zero(); target_degree + 1];
        for (i, c) in coeffs.iter().enumerate().take(target_degree + 1) {
            out[i] = c.clone();
        }
        Ok(HomPoly::from_coeffs(out))
    }

    /// Set Y = 1: returns the one-variable coefficient list, ascending in x.
    pub fn to_univariate(&self) -> Vec<Rational> {
        self.coeffs.clone()
    }
}

/// Rows ((ax+by)^j for j = 0..=d) of integer coefficient vectors; row j has
/// length j+1 with entry u the coefficient of x^u y^(j-u).
fn binary_power_rows(a: i64, b: i64, d: usize) -> Vec<Vec<BigInt>> {
    let a = BigInt::from(a);
    let b = BigInt::from(b);
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(d + 1);
    rows.push(vec![BigInt::one()]);
    for j in 1..=d {
        let prev = &rows[j - 1];
        let mut row = vec![BigInt::zero(); j + 1];
        for (u, c) in prev.iter().enumerate() {
            if !c.is_zero() {
                row[u + 1] += c * &a;
                row[u] += c * &b;
            }
        }
        rows.push(row);
    }
    rows
}

impl Add for &HomPoly {
    type Output = HomPoly;

    fn add(self, rhs: &HomPoly) -> HomPoly {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        HomPoly {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &HomPoly {
    type Output = HomPoly;

    fn sub(self, rhs: &HomPoly) -> HomPoly {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        HomPoly {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &HomPoly {
    type Output = HomPoly;

    fn neg(self) -> HomPoly {
        HomPoly {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for HomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let d = self.degree();
        let mut first = true;
        for i in (0..=d).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            if first {
                if c < &Rational::zero() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < &Rational::zero() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = if c < &Rational::zero() { -c } else { c.clone() };
            let xpow = i;
            let ypow = d - i;
            if mag.is_one() && (xpow > 0 || ypow > 0) {
                write_monomial(f, xpow, ypow)?;
            } else {
                write!(f, "{mag}")?;
                if xpow > 0 || ypow > 0 {
                    write!(f, "*")?;
                    write_monomial(f, xpow, ypow)?;
                }
            }
        }
        Ok(())
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, xpow: usize, ypow: usize) -> fmt::Result {
    match (xpow, ypow) {
        (0, 0) => Ok(()),
        (1, 0) => write!(f, "X"),
        (x, 0) => write!(f, "X^{x}"),
        (0, 1) => write!(f, "Y"),
        (0, y) => write!(f, "Y^{y}"),
        (x, y) => {
            if x == 1 {
                write!(f, "X")?;
            } else {
                write!(f, "X^{x}")?;
            }
            if y == 1 {
                write!(f, "*Y")
            } else {
                write!(f, "*Y^{y}")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{rat, rat_int};

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat_int(x)).collect()
    }

    #[test]
    fn slash_basics() {
        // X^2 under S: F(-Y, X) = Y^2.
        let x2 = HomPoly::monomial(2, 2, rat_int(1));
        assert_eq!(x2.slash(&Mat2::S), HomPoly::monomial(2, 0, rat_int(1)));
        // X under T: X + Y.
        let x = HomPoly::monomial(1, 1, rat_int(1));
        assert_eq!(x.slash(&Mat2::T), HomPoly::from_coeffs(ints(&[1, 1])));
    }

    #[test]
    fn slash_shift_matches_printed_expansion() {
        // p(x) = 4x^9 - 25x^7 + 42x^5 - 25x^3 + 4x homogenized to degree 10;
        // p(x+1) = 4x^9 + 36x^8 + 119x^7 + 161x^6 + 21x^5 - 161x^4 - 144x^3 - 36x^2.
        let p = HomPoly::from_univariate(&ints(&[0, 4, 0, -25, 0, 42, 0, -25, 0, 4]), 10).unwrap();
        let shifted = p.slash(&Mat2::T);
        let expected = ints(&[0, 0, -36, -144, -161, 21, 161, 119, 36, 4, 0]);
        assert_eq!(shifted.coeffs(), &expected[..]);
    }

    #[test]
    fn partial_x_basics() {
        let x2 = HomPoly::monomial(2, 2, rat_int(1));
        assert_eq!(x2.partial_x(), HomPoly::monomial(1, 1, rat_int(2)));

        // X^8 Y^2 - 3X^6 Y^4 + 3X^4 Y^6 - X^2 Y^8
        let p = HomPoly::from_coeffs(ints(&[0, 0, -1, 0, 3, 0, -3, 0, 1, 0, 0]));
        let expected = HomPoly::from_coeffs(ints(&[0, -2, 0, 12, 0, -18, 0, 8, 0, 0]));
        assert_eq!(p.partial_x(), expected);

        // constant in X
        let y3 = HomPoly::monomial(3, 0, rat_int(5));
        assert!(y3.partial_x().is_zero());
        assert!(HomPoly::monomial(0, 0, rat_int(7)).partial_x().is_zero());
    }

    #[test]
    fn homogenize_round_trip() {
        // x^10 - 1 homogenized to degree 10 is X^10 - Y^10.
        let one_var = ints(&[-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]);
        let p = HomPoly::from_univariate(&one_var, 10).unwrap();
        assert_eq!(p.coeffs(), &one_var[..]);
        assert_eq!(p.to_univariate(), one_var);

        assert_eq!(
            HomPoly::from_univariate(&ints(&[1]), 0).unwrap(),
            HomPoly::monomial(0, 0, rat_int(1))
        );
        assert_eq!(
            HomPoly::from_univariate(&ints(&[0, 1]), 3).unwrap(),
            HomPoly::monomial(3, 1, rat_int(1))
        );
        assert_eq!(
            HomPoly::from_univariate(&ints(&[0, 0, 1]), 1),
            Err(Error::DegreeTooLarge {
                degree: 2,
                target: 1
            })
        );
    }

    #[test]
    fn symmetry_predicates() {
        let sym = HomPoly::from_coeffs(ints(&[1, -2, 1]));
        assert!(sym.is_symmetric());
        let anti = HomPoly::from_coeffs(ints(&[-1, 0, 1]));
        assert!(anti.is_antisymmetric());
        assert!(!anti.is_symmetric());
    }

    #[test]
    fn display_form() {
        let p = HomPoly::from_coeffs(vec![rat_int(-1), rat(1, 2), rat_int(0), rat_int(3)]);
        assert_eq!(alloc::format!("{p}"), "3*X^3 + 1/2*X*Y^2 - Y^3");
    }
}
