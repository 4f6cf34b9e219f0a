//! Period-polynomial spaces and the level-one dimension formulas.
//!
//! For even weight k the space W_k sits inside the homogeneous polynomials of
//! degree k-2 and is cut out by the two linear conditions
//! P + P|S = 0 and P + P|U + P|U^2 = 0. It splits into the symmetric part
//! W_k^+ and the antisymmetric part W_k^-, whose dimensions match the
//! dimension formulas for cusp forms and modular forms of level one.

use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{primitive_scale, HomPoly, Mat2, QMatrix, Rational};

/// Eigenvalue of the variable swap on a period polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    /// Symmetric under swapping X and Y.
    Plus,
    /// Antisymmetric under swapping X and Y.
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "plus"),
            Sign::Minus => write!(f, "minus"),
        }
    }
}

/// A normalized basis of W_k^+ or W_k^-.
///
/// Basis vectors are in reduced echelon form with respect to descending
/// powers of X, scaled to primitive integers with the highest X-power
/// coefficient positive. The basis is deterministic for a given input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodBasis {
    pub weight: usize,
    pub sign: Sign,
    pub basis: Vec<HomPoly>,
}

impl PeriodBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Compute a basis of the period-polynomial eigenspace of the given weight.
pub fn period_basis(weight: usize, sign: Sign) -> Result<PeriodBasis> {
    if !weight.is_multiple_of(2) {
        return Err(Error::WeightNotEven(weight));
    }
    if weight < 4 {
        return Err(Error::WeightTooSmall { weight, min: 4 });
    }
    let degree = weight - 2;
    let u2 = Mat2::U * Mat2::U;
    let eps_coeff = match sign {
        Sign::Plus => -1,
        Sign::Minus => 1,
    };
    let blocks = [
        operator_matrix(degree, &[(1, Mat2::IDENTITY), (1, Mat2::S)]),
        operator_matrix(degree, &[(1, Mat2::IDENTITY), (1, Mat2::U), (1, u2)]),
        operator_matrix(degree, &[(1, Mat2::IDENTITY), (eps_coeff, Mat2::EPSILON)]),
    ];
    let mut rows = Vec::with_capacity(3 * (degree + 1));
    for block in &blocks {
        for i in 0..block.rows() {
            rows.push(block.row(i).to_vec());
        }
    }
    let kernel = QMatrix::from_rows(rows).kernel();
    let basis = normalize_basis(kernel)
        .into_iter()
        .map(HomPoly::from_coeffs)
        .collect();
    Ok(PeriodBasis {
        weight,
        sign,
        basis,
    })
}

/// Matrix of the operator P -> sum of c_i * P|g_i on coefficient vectors.
fn operator_matrix(degree: usize, terms: &[(i64, Mat2)]) -> QMatrix {
    let n = degree + 1;
    let mut m = QMatrix::zeros(n, n);
    for j in 0..n {
        let mono = HomPoly::monomial(degree, j, Rational::from_integer(1.into()));
        for (c, g) in terms {
            let img = mono.slash(g);
            for i in 0..n {
                let term = img.coeff(i) * crate::exact::rat_int(*c);
                m[(i, j)] += term;
            }
        }
    }
    m
}

/// Echelonize coefficient vectors with respect to descending X powers and
/// scale each to primitive integers with positive leading coefficient.
fn normalize_basis(vectors: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    if vectors.is_empty() {
        return vectors;
    }
    let reversed: Vec<Vec<Rational>> = vectors
        .into_iter()
        .map(|v| v.into_iter().rev().collect())
        .collect();
    let (reduced, _) = QMatrix::from_rows(reversed).rref();
    let mut out = Vec::new();
    for i in 0..reduced.rows() {
        let mut v = reduced.row(i).to_vec();
        if v.iter().all(Zero::is_zero) {
            continue;
        }
        primitive_scale(&mut v);
        v.reverse();
        out.push(v);
    }
    out
}

/// Whether p satisfies both period relations and has the given eigenvalue
/// under the variable swap. The zero polynomial qualifies for either sign.
pub fn is_period_polynomial(p: &HomPoly, sign: Sign) -> bool {
    let rel_s = &p.slash(&Mat2::S) + p;
    if !rel_s.is_zero() {
        return false;
    }
    let u2 = Mat2::U * Mat2::U;
    let rel_u = &(&p.slash(&Mat2::U) + &p.slash(&u2)) + p;
    if !rel_u.is_zero() {
        return false;
    }
    match sign {
        Sign::Plus => p.is_symmetric(),
        Sign::Minus => p.is_antisymmetric(),
    }
}

/// Dimension of the space of modular forms of level one and even weight >= 4.
pub fn dim_modular_forms(weight: usize) -> Result<usize> {
    if !weight.is_multiple_of(2) {
        return Err(Error::WeightNotEven(weight));
    }
    if weight < 4 {
        return Err(Error::WeightTooSmall { weight, min: 4 });
    }
    Ok(weight / 12 + usize::from(weight % 12 != 2))
}

/// Dimension of the space of cusp forms of level one and even weight >= 4.
pub fn dim_cusp_forms(weight: usize) -> Result<usize> {
    Ok(dim_modular_forms(weight)? - 1)
}
