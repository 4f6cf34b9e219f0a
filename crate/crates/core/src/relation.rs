//! The Type I and Type II relation constructions, the L-operators, and the
//! symmetric-H certificate machinery.
//!
//! Both constructions start from a period polynomial p of even weight k and
//! produce a linear relation among the odd-weight symbols Z_{r,s} up to a
//! rational multiple of Z_N:
//!
//! * Type I: p in W_k^+, q = p|T, f = q*Y - (q|eps)*X; the relation lives in
//!   weight N = k+1 and its coefficients are b_{r,s} - b_{s,r}.
//! * Type II: p in W_k^-, q = (dp/dX)|T, f = q - q|eps; the relation lives in
//!   weight N = k-1 and its coefficients are c_{r,s} - c_{s,r}.
//!
//! In both cases f is fixed by ST' and h = f|S is symmetric, so
//! f - h = h|T' - h certifies the relation: the coefficient of Z_N is
//! (N-1)/2 times the integral of h(t, 1-t) over [0,1], evaluated exactly
//! through monomial beta integrals. The whole identity (including that
//! constant) carries an overall factor 2, divided out before normalization
//! so the b/c coefficient differences appear as stated.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{
    beta_integral, binom, primitive_scale, rat_big, HomPoly, Mat2, QMatrix, Rational,
};
use crate::period::{is_period_polynomial, Sign};

/// How a relation was produced, together with the scalar the raw construction
/// was multiplied by to reach the emitted integral form.
#[derive(Debug, Clone, PartialEq)]
pub enum Provenance {
    TypeOne {
        source_weight: usize,
        scale: Rational,
    },
    TypeTwo {
        source_weight: usize,
        scale: Rational,
    },
    Canonical,
    Custom,
}

/// A linear relation sum_r coeffs[r] * Z_{r,N-r} = lambda * Z_N of odd
/// weight N. Keys of `coeffs` are the first arguments r.
#[derive(Debug, Clone, PartialEq)]
pub struct Relation {
    pub weight: usize,
    pub coeffs: BTreeMap<usize, Rational>,
    pub lambda: Rational,
    pub provenance: Provenance,
}

impl Relation {
    pub fn custom(weight: usize, coeffs: BTreeMap<usize, Rational>, lambda: Rational) -> Relation {
        Relation {
            weight,
            coeffs,
            lambda,
            provenance: Provenance::Custom,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.values().all(Zero::is_zero) && self.lambda.is_zero()
    }

    /// Coefficient of Z_{r,weight-r}; zero when absent.
    pub fn coeff(&self, r: usize) -> Rational {
        self.coeffs.get(&r).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient vector over the given first arguments.
    pub fn coeff_vector(&self, rs: impl IntoIterator<Item = usize>) -> Vec<Rational> {
        rs.into_iter().map(|r| self.coeff(r)).collect()
    }

    /// Generating function A(X,Y) = sum_r C(N-2, r-1) a_r X^{r-1} Y^{N-r-1}.
    pub fn generating_function(&self) -> HomPoly {
        let n = self.weight;
        let mut coeffs = vec![Rational::zero(); n - 1];
        for (&r, a) in &self.coeffs {
            coeffs[r - 1] = a * rat_big(binom(n as u64 - 2, r as i64 - 1));
        }
        HomPoly::from_coeffs(coeffs)
    }
}

/// Which coefficient family a table holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    B,
    C,
}

/// The b- or c-coefficients attached to a period polynomial of weight k.
/// For kind B the entries are indexed by r = 1..k-1 with r+s = k+1; for
/// kind C by r = 1..k-2 with r+s = k-1.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffTable {
    pub kind: TableKind,
    pub weight: usize,
    pub entries: BTreeMap<usize, Rational>,
}

/// Coefficients b_{r,s} defined by expanding p(X+Y, Y) in the binomial basis
/// C(k-1, r-1) X^{r-1} Y^{s-2}.
pub fn b_coeffs(p: &HomPoly) -> Result<CoeffTable> {
    let k = p.degree() + 2;
    if !is_period_polynomial(p, Sign::Plus) {
        return Err(Error::NotPeriodPolynomial(Sign::Plus));
    }
    let shifted = p.slash(&Mat2::T);
    let entries = (1..k)
        .map(|r| {
            let denom = rat_big(binom(k as u64 - 1, r as i64 - 1));
            (r, shifted.coeff(r - 1) / denom)
        })
        .collect();
    Ok(CoeffTable {
        kind: TableKind::B,
        weight: k,
        entries,
    })
}

/// Coefficients c_{r,s} defined by expanding (dp/dX)(X+Y, Y) in the binomial
/// basis C(k-3, r-1) X^{r-1} Y^{s-1}.
pub fn c_coeffs(p: &HomPoly) -> Result<CoeffTable> {
    let k = p.degree() + 2;
    if !is_period_polynomial(p, Sign::Minus) {
        return Err(Error::NotPeriodPolynomial(Sign::Minus));
    }
    let shifted = p.partial_x().slash(&Mat2::T);
    let entries = (1..k - 1)
        .map(|r| {
            let denom = rat_big(binom(k as u64 - 3, r as i64 - 1));
            (r, shifted.coeff(r - 1) / denom)
        })
        .collect();
    Ok(CoeffTable {
        kind: TableKind::C,
        weight: k,
        entries,
    })
}

/// Type I relation of weight k+1 built from p in W_k^+.
pub fn type1_relation(p: &HomPoly) -> Result<Relation> {
    let k = p.degree() + 2;
    if !is_period_polynomial(p, Sign::Plus) {
        return Err(Error::NotPeriodPolynomial(Sign::Plus));
    }
    let q = p.slash(&Mat2::T);
    let f = &q.mul_y() - &q.slash(&Mat2::EPSILON).mul_x();
    finish_relation(f, k, k + 1, k - 1, k - 2, |sw, scale| Provenance::TypeOne {
        source_weight: sw,
        scale,
    })
}

/// Type II relation of weight k-1 built from p in W_k^-.
pub fn type2_relation(p: &HomPoly) -> Result<Relation> {
    let k = p.degree() + 2;
    if !is_period_polynomial(p, Sign::Minus) {
        return Err(Error::NotPeriodPolynomial(Sign::Minus));
    }
    let q = p.partial_x().slash(&Mat2::T);
    let f = &q - &q.slash(&Mat2::EPSILON);
    finish_relation(f, k, k - 1, k - 3, k - 4, |sw, scale| Provenance::TypeTwo {
        source_weight: sw,
        scale,
    })
}

/// Shared tail of the two constructions: verify the structural identities of
/// f, extract the relation from f - f|S, compute lambda through the
/// symmetric polynomial h = f|S, halve, and normalize.
///
/// `binom_top` is the row of binomials dividing the coefficients (k-1 for
/// Type I, k-3 for Type II) and `r_max` the largest admissible even index.
fn finish_relation(
    f: HomPoly,
    source_weight: usize,
    dzv_weight: usize,
    binom_top: usize,
    r_max: usize,
    provenance: impl Fn(usize, Rational) -> Provenance,
) -> Result<Relation> {
    let st_prime = Mat2::S * Mat2::T_PRIME;
    assert!(
        (&f.slash(&st_prime) - &f).is_zero(),
        "construction identity f|ST' = f failed"
    );
    let h = f.slash(&Mat2::S);
    assert!(h.is_symmetric(), "f|S must be symmetric");
    let a = &f - &h;

    // Only odd X-powers r-1 with 4 <= r <= r_max may appear in f - f|S.
    let mut coeffs = BTreeMap::new();
    for i in 0..=a.degree() {
        let r = i + 1;
        let value = a.coeff(i);
        if r % 2 == 0 && r >= 4 && r <= r_max {
            let denom = rat_big(binom(binom_top as u64, r as i64 - 1)) * crate::exact::rat_int(2);
            coeffs.insert(r, value / denom);
        } else {
            assert!(
                value.is_zero(),
                "unexpected term of X-power {i} in the antisymmetrized construction"
            );
        }
    }
    let lambda = lambda_from_h(&h, dzv_weight)? / crate::exact::rat_int(2);

    // Joint primitive normalization over (coefficients, lambda), with the
    // coefficient of the largest first argument positive.
    let mut flat: Vec<Rational> = coeffs.values().rev().cloned().collect();
    flat.push(lambda.clone());
    let scale = primitive_scale(&mut flat);
    let lambda = flat.pop().expect("lambda entry");
    for (slot, value) in coeffs.values_mut().rev().zip(flat) {
        *slot = value;
    }
    Ok(Relation {
        weight: dzv_weight,
        coeffs,
        lambda,
        provenance: provenance(source_weight, scale),
    })
}

/// L1 from the Type I closed formula.
pub fn l1(p: &HomPoly) -> Result<HomPoly> {
    if !is_period_polynomial(p, Sign::Plus) {
        return Err(Error::NotPeriodPolynomial(Sign::Plus));
    }
    let a = p.slash(&Mat2::T).mul_y(); // p(X+Y, Y) * Y
    let b = p.slash(&Mat2::new(1, 1, 1, 0)).mul_x(); // p(X+Y, X) * X
    let c = p.slash(&Mat2::new(-1, 1, 0, 1)).mul_y(); // p(-X+Y, Y) * Y
    let d = p.slash(&Mat2::new(-1, 1, -1, 0)).mul_x(); // p(Y-X, -X) * X
    Ok((&(&a - &b) - &(&c + &d)).scaled(&half()))
}

/// L1 from the alternate formula p(Y,X+Y)(X+Y) - p(Y,-X+Y)(-X+Y), halved.
pub fn l1_alt(p: &HomPoly) -> Result<HomPoly> {
    if !is_period_polynomial(p, Sign::Plus) {
        return Err(Error::NotPeriodPolynomial(Sign::Plus));
    }
    let u = p.slash(&Mat2::new(0, 1, 1, 1)); // p(Y, X+Y)
    let v = p.slash(&Mat2::new(0, 1, -1, 1)); // p(Y, -X+Y)
    let first = &u.mul_x() + &u.mul_y();
    let second = &v.mul_y() - &v.mul_x();
    Ok((&first - &second).scaled(&half()))
}

/// L2 from the Type II closed formula.
pub fn l2(p: &HomPoly) -> Result<HomPoly> {
    if !is_period_polynomial(p, Sign::Minus) {
        return Err(Error::NotPeriodPolynomial(Sign::Minus));
    }
    let dp = p.partial_x();
    let a = dp.slash(&Mat2::T); // p'(X+Y, Y)
    let b = dp.slash(&Mat2::new(1, 1, 1, 0)); // p'(X+Y, X)
    let c = dp.slash(&Mat2::new(-1, 1, 0, 1)); // p'(-X+Y, Y)
    let d = dp.slash(&Mat2::new(-1, 1, -1, 0)); // p'(Y-X, -X)
    Ok((&(&a - &b) - &(&c - &d)).scaled(&half()))
}

/// L2 from the alternate formula (p'(Y,X+Y) - p'(Y,-X+Y)) / 2.
pub fn l2_alt(p: &HomPoly) -> Result<HomPoly> {
    if !is_period_polynomial(p, Sign::Minus) {
        return Err(Error::NotPeriodPolynomial(Sign::Minus));
    }
    let dp = p.partial_x();
    let u = dp.slash(&Mat2::new(0, 1, 1, 1));
    let v = dp.slash(&Mat2::new(0, 1, -1, 1));
    Ok((&u - &v).scaled(&half()))
}

fn half() -> Rational {
    crate::exact::rat(1, 2)
}

/// Find a symmetric homogeneous H with H(X, X+Y) - H(X, Y) = A, if one
/// exists. When the solution space is positive-dimensional the returned H is
/// the reduced-echelon particular solution (free coordinates zero).
pub fn find_symmetric_h(a: &HomPoly) -> Option<HomPoly> {
    let d = a.degree();
    let n_sym = d / 2 + 1;
    let mut cols = Vec::with_capacity(n_sym);
    for i in 0..n_sym {
        let mut e = HomPoly::monomial(d, i, Rational::one());
        if i != d - i {
            e = &e + &HomPoly::monomial(d, d - i, Rational::one());
        }
        let image = &e.slash(&Mat2::T_PRIME) - &e; // H(X, X+Y) - H(X, Y)
        cols.push(image);
    }
    let mut m = QMatrix::zeros(d + 1, n_sym);
    for (j, image) in cols.iter().enumerate() {
        for i in 0..=d {
            m[(i, j)] = image.coeff(i);
        }
    }
    let sol = m.solve(a.coeffs())?;
    let mut h = HomPoly::zero(d);
    for (i, c) in sol.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut e = HomPoly::monomial(d, i, c.clone());
        if i != d - i {
            e = &e + &HomPoly::monomial(d, d - i, c.clone());
        }
        h = &h + &e;
    }
    Some(h)
}

/// The Z_k coefficient certified by a symmetric H of degree k-2:
/// lambda = (k-1)/2 * integral of H(t, 1-t) over [0,1], with k = dzv_weight.
pub fn lambda_from_h(h: &HomPoly, dzv_weight: usize) -> Result<Rational> {
    if !h.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let d = h.degree();
    let mut integral = Rational::zero();
    for i in 0..=d {
        let c = h.coeff(i);
        if !c.is_zero() {
            integral += c * beta_integral(i as u32, (d - i) as u32);
        }
    }
    Ok(crate::exact::rat(dzv_weight as i64 - 1, 2) * integral)
}
