//! The formal double zeta space of a fixed weight, as an exact relation
//! matrix, together with the membership oracle used to certify relations.
//!
//! Symbols are ordered Z_1, ..., Z_{k-1} (Z_r stands for Z_{r,k-r}), then the
//! unordered products P_{m,k-m} for m = 1..floor(k/2), then Z_k. The relation
//! matrix has one row for each instance of the two defining families
//!
//!   Z_{r,s} + Z_{s,r} - P_{r,s} + Z_k = 0,
//!   sum_r [C(r-1,i-1) + C(r-1,j-1)] Z_{r,k-r} - P_{i,j} = 0.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binom, rat_big, QMatrix, Rational};
use crate::relation::Relation;

/// The exact relation matrix of the weight-k formal double zeta space.
#[derive(Debug, Clone)]
pub struct FormalSpace {
    weight: usize,
    num_z: usize,
    num_p: usize,
    matrix: QMatrix,
}

/// Result of a membership check: whether the candidate lies in the span of
/// the defining relations for some multiple of Z_k, and that multiple.
/// `lambda_ambiguous` flags the degenerate case where Z_k itself lies in the
/// relation span, so no unique multiplier exists.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub holds: bool,
    pub lambda: Option<Rational>,
    pub lambda_ambiguous: bool,
}

impl FormalSpace {
    /// Assemble the space for weight k >= 3.
    pub fn new(weight: usize) -> Result<FormalSpace> {
        if weight < 3 {
            return Err(Error::WeightTooSmall { weight, min: 3 });
        }
        let num_z = weight - 1;
        let num_p = weight / 2;
        let cols = num_z + num_p + 1;
        let mut rows = Vec::with_capacity(2 * num_p);
        // Z_{r,s} + Z_{s,r} - P_{r,s} + Z_k = 0 over unordered {r,s}
        for m in 1..=num_p {
            let (r, s) = (m, weight - m);
            let mut row = vec![Rational::zero(); cols];
            row[r - 1] += Rational::one();
            row[s - 1] += Rational::one();
            row[num_z + m - 1] = -Rational::one();
            row[cols - 1] = Rational::one();
            rows.push(row);
        }
        // sum_r [C(r-1,i-1) + C(r-1,j-1)] Z_{r,s} - P_{i,j} = 0 over unordered {i,j}
        for m in 1..=num_p {
            let (i, j) = (m, weight - m);
            let mut row = vec![Rational::zero(); cols];
            for r in 1..=num_z {
                let c = binom(r as u64 - 1, i as i64 - 1) + binom(r as u64 - 1, j as i64 - 1);
                row[r - 1] = rat_big(c);
            }
            row[num_z + m - 1] = -Rational::one();
            rows.push(row);
        }
        Ok(FormalSpace {
            weight,
            num_z,
            num_p,
            matrix: QMatrix::from_rows(rows),
        })
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    /// Number of Z_{r,s} symbols (r from 1 to k-1).
    pub fn num_z(&self) -> usize {
        self.num_z
    }

    /// Number of unordered P_{r,s} symbols.
    pub fn num_p(&self) -> usize {
        self.num_p
    }

    /// The relation matrix over (Z_1..Z_{k-1}, P_1..P_{floor(k/2)}, Z_k).
    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }

    /// Decide whether sum_r a_r Z_{r,k-r} = lambda Z_k holds in the space for
    /// some lambda, and solve for that lambda.
    pub fn check_combination(&self, coeffs: &BTreeMap<usize, Rational>) -> CheckOutcome {
        let cols = self.matrix.cols();
        let mut target = vec![Rational::zero(); cols];
        for (&r, a) in coeffs {
            assert!(r >= 1 && r <= self.num_z, "index {r} out of range");
            target[r - 1] = a.clone();
        }
        // Solve x^T * M + lambda * e_{Z_k}^T = target^T for (x, lambda).
        let mut rows: Vec<Vec<Rational>> = (0..self.matrix.rows())
            .map(|i| self.matrix.row(i).to_vec())
            .collect();
        let mut zk_row = vec![Rational::zero(); cols];
        zk_row[cols - 1] = Rational::one();
        rows.push(zk_row.clone());
        let augmented = QMatrix::from_rows(rows);
        match augmented.transpose().solve(&target) {
            None => CheckOutcome {
                holds: false,
                lambda: None,
                lambda_ambiguous: false,
            },
            Some(sol) => {
                let ambiguous = self.matrix.in_row_space(&zk_row);
                CheckOutcome {
                    holds: true,
                    lambda: if ambiguous {
                        None
                    } else {
                        Some(sol[sol.len() - 1].clone())
                    },
                    lambda_ambiguous: ambiguous,
                }
            }
        }
    }

    /// Check a relation object against this space.
    pub fn check_relation(&self, rel: &Relation) -> CheckOutcome {
        assert_eq!(rel.weight, self.weight, "weight mismatch");
        self.check_combination(&rel.coeffs)
    }

    /// Deterministic basis of all pure-Z relations: pairs (a, lambda) with
    /// sum_r a_r Z_{r,k-r} = lambda Z_k holding in the space. The a-vectors
    /// are indexed by r = 1..k-1.
    pub fn pure_z_relations(&self) -> Vec<(Vec<Rational>, Rational)> {
        // Rows of M with vanishing P-part are exactly u^T M for u in the left
        // kernel of the P-column block.
        let mut p_block = QMatrix::zeros(self.matrix.rows(), self.num_p);
        for i in 0..self.matrix.rows() {
            for j in 0..self.num_p {
                p_block[(i, j)] = self.matrix[(i, self.num_z + j)].clone();
            }
        }
        let left = p_block.left_kernel();
        if left.is_empty() {
            return Vec::new();
        }
        let mut rows = Vec::with_capacity(left.len());
        for u in &left {
            let w = self.matrix.left_mul(u);
            // w encodes sum a_r Z_r + mu Z_k = 0, so lambda = -mu.
            let mut row: Vec<Rational> = w[..self.num_z].to_vec();
            row.push(-&w[self.num_z + self.num_p]);
            rows.push(row);
        }
        let (reduced, _) = QMatrix::from_rows(rows).rref();
        let mut out = Vec::new();
        for i in 0..reduced.rows() {
            let row = reduced.row(i);
            if row.iter().all(Zero::is_zero) {
                continue;
            }
            let lambda = row[self.num_z].clone();
            out.push((row[..self.num_z].to_vec(), lambda));
        }
        out
    }
}

/// Verify the two restricted sum identities of even weight: the even-r sum of
/// Z_{r,k-r} equals (3/4) Z_k and the odd-r sum (r >= 3) equals (1/4) Z_k.
pub fn sum_formula_check(weight: usize) -> Result<bool> {
    if !weight.is_multiple_of(2) {
        return Err(Error::WeightNotEven(weight));
    }
    if weight < 4 {
        return Err(Error::WeightTooSmall { weight, min: 4 });
    }
    let space = FormalSpace::new(weight)?;
    let even: BTreeMap<usize, Rational> = (2..weight)
        .step_by(2)
        .map(|r| (r, Rational::one()))
        .collect();
    let odd: BTreeMap<usize, Rational> = (3..weight)
        .step_by(2)
        .map(|r| (r, Rational::one()))
        .collect();
    let even_check = space.check_combination(&even);
    let odd_check = space.check_combination(&odd);
    Ok(even_check.holds
        && even_check.lambda == Some(crate::exact::rat(3, 4))
        && odd_check.holds
        && odd_check.lambda == Some(crate::exact::rat(1, 4)))
}
