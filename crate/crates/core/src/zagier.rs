//! The evaluation matrix for zeta(even, odd) of odd weight, its left kernel,
//! canonical relations, and the renormalization matrices that tie period
//! polynomials to relation coefficient vectors.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binom, primitive_scale, rat, rat_big, rat_int, HomPoly, QMatrix, Rational};
use crate::period::{is_period_polynomial, period_basis, Sign};
use crate::relation::{type1_relation, type2_relation, Provenance, Relation};

/// The K x K matrix expressing zeta(k-2m-1, 2m+1), k = 2K+1, in products of
/// single zeta values. Rows are ordered by ascending even first argument
/// zeta(2, k-2), ..., zeta(k-1, 1); column n holds the coefficient of
/// zeta(2n+1) zeta(k-2n-1) for n = 1..K, the last column carrying the folded
/// conventional factor zeta(0) = -1/2.
#[derive(Debug, Clone, PartialEq)]
pub struct ZagierMatrix {
    pub big_k: usize,
    pub matrix: QMatrix,
}

/// The bracket [delta_{n,m} + delta_{n,K} - C(2n,2m) - C(2n,2K-2m-1)] before
/// the zeta(0) folding; exposed so the folded entries can be cross-checked.
pub fn unfolded_bracket(big_k: usize, m: usize, n: usize) -> Rational {
    let delta = |a: usize, b: usize| -> Rational {
        if a == b {
            Rational::one()
        } else {
            Rational::zero()
        }
    };
    delta(n, m) + delta(n, big_k)
        - rat_big(binom(2 * n as u64, 2 * m as i64))
        - rat_big(binom(2 * n as u64, 2 * big_k as i64 - 2 * m as i64 - 1))
}

/// Build the evaluation matrix for K >= 2 (weight k = 2K+1).
pub fn zagier_matrix(big_k: usize) -> ZagierMatrix {
    assert!(big_k >= 2, "need K >= 2");
    let mut m = QMatrix::zeros(big_k, big_k);
    for row in 0..big_k {
        // Row `row` holds zeta(2(row+1), k-2(row+1)); its m-index satisfies
        // first argument = k - 2m - 1.
        let m_idx = big_k - 1 - row;
        for col in 0..big_k {
            let n = col + 1;
            let mut entry = unfolded_bracket(big_k, m_idx, n);
            if n == big_k {
                entry *= rat(-1, 2);
            }
            m[(row, col)] = entry;
        }
    }
    ZagierMatrix { big_k, matrix: m }
}

/// The submatrix dropping the zeta(k-1,1) row and the zeta(k) column.
pub fn zagier_submatrix(big_k: usize) -> QMatrix {
    let full = zagier_matrix(big_k);
    let mut sub = QMatrix::zeros(big_k - 1, big_k - 1);
    for i in 0..big_k - 1 {
        for j in 0..big_k - 1 {
            sub[(i, j)] = full.matrix[(i, j)].clone();
        }
    }
    sub
}

impl ZagierMatrix {
    pub fn weight(&self) -> usize {
        2 * self.big_k + 1
    }

    pub fn row_labels(&self) -> Vec<String> {
        let k = self.weight();
        (1..=self.big_k)
            .map(|i| format!("zeta({},{})", 2 * i, k - 2 * i))
            .collect()
    }

    pub fn col_labels(&self) -> Vec<String> {
        let k = self.weight();
        (1..=self.big_k)
            .map(|n| {
                if n == self.big_k {
                    format!("zeta({k})")
                } else {
                    format!("zeta({})*zeta({})", 2 * n + 1, k - 2 * n - 1)
                }
            })
            .collect()
    }
}

/// The canonical relation of odd weight k >= 5:
/// 2(k-2) Z_{k-1,1} + sum over even r in [4, k-3] of (2r-k) Z_{r,k-r}
/// - (k-2) Z_{2,k-2} = -(3/4)(k-3) Z_k.
pub fn canonical_relation(weight: usize) -> Result<Relation> {
    if weight.is_multiple_of(2) {
        return Err(Error::WeightNotOdd(weight));
    }
    if weight < 5 {
        return Err(Error::WeightTooSmall { weight, min: 5 });
    }
    let k = weight as i64;
    let mut coeffs = BTreeMap::new();
    coeffs.insert(weight - 1, rat_int(2 * (k - 2)));
    coeffs.insert(2, rat_int(-(k - 2)));
    let mut r = 4;
    while r <= weight - 3 {
        coeffs.insert(r, rat_int(2 * r as i64 - k));
        r += 2;
    }
    Ok(Relation {
        weight,
        coeffs,
        lambda: rat(-3 * (k - 3), 4),
        provenance: Provenance::Canonical,
    })
}

/// A left-kernel element of the full evaluation matrix, indexed like its
/// rows (ascending even first argument).
#[derive(Debug, Clone, PartialEq)]
pub struct KernelElement {
    pub weight: usize,
    pub entries: Vec<Rational>,
    /// False when the input relation had lambda = 0, in which case the output
    /// is the relation's own vector and no elimination happened.
    pub novel: bool,
}

/// Eliminate Z_k between the canonical relation and `rel`, landing in the
/// left kernel of the full evaluation matrix. The result is scaled to
/// primitive integers with positive first nonzero entry and checked against
/// the matrix; a failed check means `rel` does not actually hold.
pub fn combine_kernel_element(rel: &Relation) -> Result<KernelElement> {
    let weight = rel.weight;
    if weight.is_multiple_of(2) {
        return Err(Error::WeightNotOdd(weight));
    }
    if weight < 5 {
        return Err(Error::WeightTooSmall { weight, min: 5 });
    }
    if rel.coeffs.values().all(Zero::is_zero) {
        return Err(Error::ZeroRelation);
    }
    let canonical = canonical_relation(weight)?;
    let big_k = (weight - 1) / 2;
    let coords: Vec<usize> = (1..=big_k).map(|i| 2 * i).collect();
    let rel_vec = rel.coeff_vector(coords.iter().copied());
    let can_vec = canonical.coeff_vector(coords.iter().copied());
    let mut v: Vec<Rational> = rel_vec
        .iter()
        .zip(&can_vec)
        .map(|(a, c)| a * &canonical.lambda - c * &rel.lambda)
        .collect();
    if v.iter().all(Zero::is_zero) {
        return Err(Error::ZeroRelation);
    }
    primitive_scale(&mut v);
    let product = zagier_matrix(big_k).matrix.left_mul(&v);
    if !product.iter().all(Zero::is_zero) {
        return Err(Error::KernelCheckFailed);
    }
    Ok(KernelElement {
        weight,
        entries: v,
        novel: !rel.lambda.is_zero(),
    })
}

/// Which construction a renormalization pair belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenormKind {
    One,
    Two,
}

/// The diagonal matrix D and upper-triangular matrix B whose product maps a
/// period polynomial's odd-power coefficient vector to relation coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct RenormMatrices {
    pub kind: RenormKind,
    pub weight: usize,
    pub d: QMatrix,
    pub b: QMatrix,
}

impl RenormMatrices {
    /// D * (B * v).
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.d.mul_vec(&self.b.mul_vec(v))
    }
}

/// Build the renormalization pair for even weight k. Kind One is
/// (k-2)/2-dimensional with D^{-1} = diag C(k-1, 2i-1); kind Two is
/// (k-4)/2-dimensional with D^{-1} = diag C(k-3, 2i-1). Both share
/// B_{ij} = C(2j, 2i-1).
pub fn renorm_matrices(weight: usize, kind: RenormKind) -> Result<RenormMatrices> {
    if !weight.is_multiple_of(2) {
        return Err(Error::WeightNotEven(weight));
    }
    let (size, top) = match kind {
        RenormKind::One => (weight.saturating_sub(2) / 2, weight - 1),
        RenormKind::Two => (weight.saturating_sub(4) / 2, weight - 3),
    };
    if size == 0 {
        return Err(Error::WeightTooSmall { weight, min: 6 });
    }
    let diag: Vec<Rational> = (1..=size)
        .map(|i| Rational::new(1.into(), binom(top as u64, 2 * i as i64 - 1)))
        .collect();
    let mut b = QMatrix::zeros(size, size);
    for i in 1..=size {
        for j in 1..=size {
            b[(i - 1, j - 1)] = rat_big(binom(2 * j as u64, 2 * i as i64 - 1));
        }
    }
    Ok(RenormMatrices {
        kind,
        weight,
        d: QMatrix::diagonal(diag),
        b,
    })
}

/// Map a period polynomial to its renormalized coefficient vector
/// D * B * (odd-power coefficients). Entry i corresponds to the coefficient
/// of Z_{2i, N-2i} in the matching relation, up to one overall scalar.
pub fn renormalized_vector(p: &HomPoly, kind: RenormKind) -> Result<Vec<Rational>> {
    let weight = p.degree() + 2;
    let matrices = renorm_matrices(weight, kind)?;
    let vector: Vec<Rational> = match kind {
        RenormKind::One => {
            if !is_period_polynomial(p, Sign::Plus) {
                return Err(Error::NotPeriodPolynomial(Sign::Plus));
            }
            // alpha_j = coefficient of X^{k-1-2j} Y^{2j-1}, ascending odd Y-power
            (1..=matrices.d.rows())
                .map(|j| p.coeff(weight - 1 - 2 * j))
                .collect()
        }
        RenormKind::Two => {
            if !is_period_polynomial(p, Sign::Minus) {
                return Err(Error::NotPeriodPolynomial(Sign::Minus));
            }
            let dp = p.partial_x();
            // beta_j = coefficient of X^{k-3-2j} Y^{2j}, ascending even Y-power
            (1..=matrices.d.rows())
                .map(|j| dp.coeff(weight - 3 - 2 * j))
                .collect()
        }
    };
    Ok(matrices.apply(&vector))
}

/// Rank over the rationals of all Type I and Type II coefficient vectors of
/// odd weight k, taken over bases of the two source spaces. The vectors live
/// on the even first arguments r in [4, k-3].
pub fn relation_rank(weight: usize) -> Result<usize> {
    if weight.is_multiple_of(2) {
        return Err(Error::WeightNotOdd(weight));
    }
    if weight < 7 {
        return Err(Error::WeightTooSmall { weight, min: 7 });
    }
    let coords: Vec<usize> = ((4..=weight - 3).step_by(2)).collect();
    let mut rows = Vec::new();
    for p in &period_basis(weight - 1, Sign::Plus)?.basis {
        rows.push(type1_relation(p)?.coeff_vector(coords.iter().copied()));
    }
    for p in &period_basis(weight + 1, Sign::Minus)?.basis {
        rows.push(type2_relation(p)?.coeff_vector(coords.iter().copied()));
    }
    if rows.is_empty() {
        return Ok(0);
    }
    Ok(QMatrix::from_rows(rows).rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat_int(x)).collect()
    }

    #[test]
    fn printed_weight_eleven_matrix() {
        let z = zagier_matrix(5);
        let expected = [
            vec![
                rat_int(-2),
                rat_int(-4),
                rat_int(-6),
                rat_int(-8),
                rat_int(27),
            ],
            vec![
                rat_int(0),
                rat_int(-4),
                rat_int(-20),
                rat_int(-84),
                rat(329, 2),
            ],
            vec![
                rat_int(0),
                rat_int(0),
                rat_int(-21),
                rat_int(-126),
                rat(461, 2),
            ],
            vec![
                rat_int(0),
                rat_int(-6),
                rat_int(-15),
                rat_int(-36),
                rat_int(82),
            ],
            vec![
                rat_int(-1),
                rat_int(-1),
                rat_int(-1),
                rat_int(-1),
                rat_int(5),
            ],
        ];
        for (i, row) in expected.iter().enumerate() {
            assert_eq!(z.matrix.row(i), &row[..], "row {i}");
        }
        assert_eq!(z.row_labels()[0], "zeta(2,9)");
        assert_eq!(z.col_labels()[0], "zeta(3)*zeta(8)");
        assert_eq!(z.col_labels()[4], "zeta(11)");
    }

    #[test]
    fn submatrix_left_kernel() {
        let sub = zagier_submatrix(5);
        let v = ints(&[0, -42, 20, 28]);
        assert!(sub.left_mul(&v).iter().all(Zero::is_zero));
        let kernel = sub.left_kernel();
        assert_eq!(kernel.len(), 1);
        assert_eq!(kernel[0], ints(&[0, 21, -10, -14]));
        assert!(QMatrix::identity(4).left_kernel().is_empty());
    }

    #[test]
    fn canonical_examples() {
        let r5 = canonical_relation(5).unwrap();
        assert_eq!(r5.coeff_vector([4, 2]), ints(&[6, -3]));
        assert_eq!(r5.lambda, rat(-3, 2));

        let r11 = canonical_relation(11).unwrap();
        assert_eq!(
            r11.coeff_vector([10, 8, 6, 4, 2]),
            ints(&[18, 5, 1, -3, -9])
        );
        assert_eq!(r11.lambda, rat_int(-6));

        let r7 = canonical_relation(7).unwrap();
        assert_eq!(r7.coeff_vector([6, 4, 2]), ints(&[10, 1, -5]));
        assert_eq!(r7.lambda, rat_int(-3));

        assert!(canonical_relation(8).is_err());
        assert!(canonical_relation(3).is_err());
    }

    #[test]
    fn kernel_element_weight_eleven() {
        let p = HomPoly::from_coeffs(ints(&[0, 0, -1, 0, 3, 0, -3, 0, 1, 0, 0]));
        let rel = type2_relation(&p).unwrap();
        let ke = combine_kernel_element(&rel).unwrap();
        assert_eq!(ke.entries, ints(&[3, -27, 13, 17, -6]));
        assert!(ke.novel);

        let zero = Relation::custom(11, BTreeMap::new(), rat_int(0));
        assert_eq!(combine_kernel_element(&zero), Err(Error::ZeroRelation));
    }

    #[test]
    fn renormalization_examples() {
        let two = renorm_matrices(12, RenormKind::Two).unwrap();
        assert_eq!(
            (0..4).map(|i| two.d[(i, i)].clone()).collect::<Vec<_>>(),
            vec![rat(1, 9), rat(1, 84), rat(1, 126), rat(1, 36)]
        );
        let out = two.apply(&ints(&[4, -9, 6, -1]));
        assert_eq!(out, vec![rat_int(0), rat(1, 3), rat(-10, 63), rat(-2, 9)]);

        let one = renorm_matrices(12, RenormKind::One).unwrap();
        let out = one.apply(&ints(&[4, -25, 42, -25, 4]));
        assert_eq!(
            out,
            vec![
                rat_int(0),
                rat(-12, 11),
                rat(-10, 33),
                rat(28, 33),
                rat(8, 11)
            ]
        );
    }

    #[test]
    fn renormalized_vectors_match_matrix_products() {
        let p = HomPoly::from_coeffs(ints(&[0, 0, -1, 0, 3, 0, -3, 0, 1, 0, 0]));
        let v = renormalized_vector(&p, RenormKind::Two).unwrap();
        // Raw derivative coefficients are twice the half-scaled example.
        assert_eq!(v, vec![rat_int(0), rat(2, 3), rat(-20, 63), rat(-4, 9)]);

        let plus = HomPoly::from_coeffs(ints(&[0, 4, 0, -25, 0, 42, 0, -25, 0, 4, 0]));
        let v = renormalized_vector(&plus, RenormKind::One).unwrap();
        assert_eq!(
            v,
            vec![
                rat_int(0),
                rat(-12, 11),
                rat(-10, 33),
                rat(28, 33),
                rat(8, 11)
            ]
        );
    }

    #[test]
    fn ranks_match_dimension_counts() {
        assert_eq!(relation_rank(11).unwrap(), 1);
        assert_eq!(relation_rank(13).unwrap(), 1);
        assert_eq!(relation_rank(17).unwrap(), 2);
    }
}
