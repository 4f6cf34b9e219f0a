//! Floating-point evaluation of single and double zeta values with explicit,
//! guaranteed error bounds.
//!
//! Every value is a finite partial sum plus an Euler-Maclaurin tail with four
//! correction terms; the remainder after the last term is bounded by the
//! first omitted term, which is valid because the summands are completely
//! monotone. Double zeta values are summed as
//!
//!   zeta(r,s) = sum over n of n^{-s} * tau_r(n),  tau_r(n) = sum_{m>n} m^{-r},
//!
//! with tau_r evaluated once at the truncation point by the tail formula and
//! then extended downward exactly; the outer tail reuses the same expansion
//! termwise. The truncation index is chosen per argument pair by doubling
//! until the computed bound meets the target, and a request whose bound
//! cannot be met by f64 summation is refused rather than rounded off.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::relation::Relation;

/// Unit roundoff slack per floating operation used in rounding budgets.
const EPS_UNIT: f64 = 2.3e-16;
/// Truncation indices are doubled up to this cap before refusing.
const MAX_N: usize = 1 << 22;

/// Evaluation context: target absolute error, the realization value assigned
/// to symbols with first argument 1, and an optional fixed truncation index
/// overriding the per-argument choice.
#[derive(Debug, Clone)]
pub struct Precision {
    pub eps: f64,
    pub kappa: f64,
    pub n_override: Option<usize>,
}

impl Default for Precision {
    fn default() -> Precision {
        Precision {
            eps: 1e-12,
            kappa: 0.0,
            n_override: None,
        }
    }
}

impl Precision {
    pub fn with_eps(eps: f64) -> Precision {
        Precision {
            eps,
            ..Precision::default()
        }
    }

    fn budget(&self, share: f64) -> Precision {
        Precision {
            eps: self.eps * share,
            kappa: self.kappa,
            n_override: self.n_override,
        }
    }
}

/// A computed value with a rigorous absolute error bound; `residual` is set
/// by relation checks and carries the same bound semantics.
#[derive(Debug, Clone, PartialEq)]
pub struct NumericReport {
    pub value: f64,
    pub bound: f64,
    pub residual: Option<f64>,
}

impl NumericReport {
    fn plain(value: f64, bound: f64) -> NumericReport {
        NumericReport {
            value,
            bound,
            residual: None,
        }
    }
}

/// x^e by binary exponentiation (no std needed).
fn ipow(x: f64, e: u32) -> f64 {
    let mut base = x;
    let mut e = e;
    let mut acc = 1.0;
    while e > 0 {
        if e & 1 == 1 {
            acc *= base;
        }
        base *= base;
        e >>= 1;
    }
    acc
}

fn inv_pow(n: usize, s: u32) -> f64 {
    1.0 / ipow(n as f64, s)
}

fn abs(x: f64) -> f64 {
    if x < 0.0 {
        -x
    } else {
        x
    }
}

/// Tail sum over m > n of m^{-s} with four correction terms, plus a bound on
/// its absolute error (first omitted term and rounding).
fn em_tail(s: u32, n: usize) -> (f64, f64) {
    debug_assert!(s >= 2 && n >= 1);
    let x = n as f64;
    let sf = f64::from(s);
    let t1 = 1.0 / ((sf - 1.0) * ipow(x, s - 1));
    let t2 = -0.5 * inv_pow(n, s);
    let t3 = sf / 12.0 * inv_pow(n, s + 1);
    let t4 = -sf * (sf + 1.0) * (sf + 2.0) / 720.0 * inv_pow(n, s + 3);
    let value = t1 + t2 + t3 + t4;
    let omitted =
        sf * (sf + 1.0) * (sf + 2.0) * (sf + 3.0) * (sf + 4.0) / 30240.0 * inv_pow(n, s + 5);
    let rounding = 8.0 * EPS_UNIT * (abs(t1) + abs(t2) + abs(t3) + abs(t4));
    (value, omitted + rounding + 1e-300)
}

/// Truncation indices to try, honoring an override.
fn candidate_ns(prec: &Precision) -> Vec<usize> {
    if let Some(n) = prec.n_override {
        return vec![n.max(2)];
    }
    let mut out = Vec::new();
    let mut n = 8usize;
    while n <= MAX_N {
        out.push(n);
        n *= 2;
    }
    out
}

/// The Riemann zeta value at an integer s >= 2.
pub fn zeta(s: u32, prec: &Precision) -> Result<NumericReport> {
    if s < 2 {
        return Err(Error::Divergent {
            name: "s",
            min: 2,
            got: s,
        });
    }
    let mut best = f64::INFINITY;
    for n in candidate_ns(prec) {
        let (tail, tail_bound) = em_tail(s, n);
        // Partial sums stay below zeta(2) < 1.7.
        let rounding = (n as f64 + 20.0) * EPS_UNIT * 1.7;
        let bound = tail_bound + rounding;
        best = best.min(bound);
        if bound <= prec.eps {
            let mut sum = 0.0;
            for m in 1..=n {
                sum += inv_pow(m, s);
            }
            return Ok(NumericReport::plain(sum + tail, bound));
        }
        if tail_bound < rounding / 16.0 {
            break; // rounding-dominated: larger n cannot help
        }
    }
    Err(Error::PrecisionUnattainable {
        requested: prec.eps,
        achievable: best,
    })
}

/// zeta(s) - 1 summed directly from m = 2, avoiding the cancellation of the
/// leading 1. Best effort: when the wanted tolerance is below the f64 floor
/// the tightest achievable truncation is used and its honest bound returned;
/// callers validate their accumulated totals.
fn zeta_minus_one(s: u32, want: f64) -> (f64, f64) {
    debug_assert!(s >= 2);
    let mut best = (f64::INFINITY, 8usize);
    let mut chosen = None;
    let mut n = 8usize;
    while n <= (1 << 12) {
        let (_, tail_bound) = em_tail(s, n);
        let rounding = (n as f64 + 8.0) * EPS_UNIT * 0.7;
        let bound = tail_bound + rounding;
        if bound < best.0 {
            best = (bound, n);
        }
        if bound <= want {
            chosen = Some((bound, n));
            break;
        }
        n *= 2;
    }
    let (bound, n) = chosen.unwrap_or(best);
    let (tail, _) = em_tail(s, n);
    let mut sum = 0.0;
    for m in 2..=n {
        sum += inv_pow(m, s);
    }
    (sum + tail, bound)
}

/// The double zeta value zeta(r, s) = sum over m > n > 0 of m^{-r} n^{-s},
/// requiring r >= 2 and s >= 1.
pub fn double_zeta(r: u32, s: u32, prec: &Precision) -> Result<NumericReport> {
    if r < 2 {
        return Err(Error::Divergent {
            name: "r",
            min: 2,
            got: r,
        });
    }
    if s < 1 {
        return Err(Error::Divergent {
            name: "s",
            min: 1,
            got: s,
        });
    }
    let w = r + s;
    let rf = f64::from(r);
    let mut best = f64::INFINITY;
    for n in candidate_ns(prec) {
        let (value, bound) = double_zeta_at(r, s, w, rf, n);
        best = best.min(bound);
        if bound <= prec.eps {
            return Ok(NumericReport::plain(value, bound));
        }
    }
    Err(Error::PrecisionUnattainable {
        requested: prec.eps,
        achievable: best,
    })
}

fn double_zeta_at(r: u32, s: u32, w: u32, rf: f64, n: usize) -> (f64, f64) {
    // Inner tails tau_r(j) for j = n down to 1, anchored by the tail formula.
    let (anchor, anchor_bound) = em_tail(r, n);
    let mut tau = vec![0.0; n + 1];
    tau[n] = anchor;
    let mut tau_sum = anchor;
    for j in (1..n).rev() {
        tau[j] = tau[j + 1] + inv_pow(j + 1, r);
        tau_sum += tau[j];
    }
    // Main sum in ascending n for reproducibility.
    let mut main = 0.0;
    let mut outer_abs = 0.0;
    for (j, tau_j) in tau.iter().enumerate().skip(1) {
        let weight = inv_pow(j, s);
        main += weight * tau_j;
        outer_abs += weight;
    }
    // Outer tail: expand tau_r termwise through the same four corrections.
    let a1 = 1.0 / (rf - 1.0);
    let a2 = -0.5;
    let a3 = rf / 12.0;
    let a4 = -rf * (rf + 1.0) * (rf + 2.0) / 720.0;
    let c5 = rf * (rf + 1.0) * (rf + 2.0) * (rf + 3.0) * (rf + 4.0) / 30240.0;
    let (t1, b1) = em_tail(w - 1, n);
    let (t2, b2) = em_tail(w, n);
    let (t3, b3) = em_tail(w + 1, n);
    let (t4, b4) = em_tail(w + 3, n);
    let (t5, b5) = em_tail(w + 5, n);
    let tail = a1 * t1 + a2 * t2 + a3 * t3 + a4 * t4;
    let value = main + tail;

    let tau_error = outer_abs * anchor_bound + EPS_UNIT * tau_sum * outer_abs;
    let tail_error = abs(a1) * b1 + abs(a2) * b2 + abs(a3) * b3 + abs(a4) * b4 + c5 * (t5 + b5);
    // All summands of the main double sum are positive, so running partial
    // sums never exceed `main`; the constant covers the power evaluations.
    let rounding = (n as f64 + 52.0) * EPS_UNIT * (main + abs(tail));
    (value, tau_error + tail_error + rounding + 1e-300)
}

/// Evaluate at the wanted tolerance, falling back once to the reported
/// achievable bound when the want is below the f64 floor for that argument.
fn eval_with_fallback(
    f: impl Fn(&Precision) -> Result<NumericReport>,
    want: f64,
    template: &Precision,
) -> Result<NumericReport> {
    let first = Precision {
        eps: want,
        ..template.clone()
    };
    match f(&first) {
        Ok(report) => Ok(report),
        Err(Error::PrecisionUnattainable { achievable, .. }) => f(&Precision {
            eps: achievable * 2.0,
            ..template.clone()
        }),
        Err(e) => Err(e),
    }
}

/// Residual check of a relation under the double zeta realization: reports
/// the left-hand side, a guaranteed bound, and |lhs - lambda * zeta(k)|.
///
/// Each term is evaluated to eps scaled down by the total coefficient mass,
/// or to the tightest f64-achievable bound when that is coarser. When even
/// so the accumulated bound misses the target, the call refuses and reports
/// what it could have guaranteed.
pub fn verify_numeric(rel: &Relation, prec: &Precision) -> Result<NumericReport> {
    let mass = rel
        .coeffs
        .values()
        .map(|c| abs(c.to_f64().expect("coefficient in f64 range")))
        .sum::<f64>()
        + abs(rel.lambda.to_f64().expect("lambda in f64 range"))
        + 1.0;
    let want = prec.eps / (2.0 * mass);
    let mut lhs = 0.0;
    let mut bound = 0.0;
    let mut magnitude = 0.0;
    for (&r, coeff) in &rel.coeffs {
        let a = coeff.to_f64().expect("coefficient in f64 range");
        if a == 0.0 {
            continue;
        }
        let (value, term_bound) = if r == 1 {
            (prec.kappa, 0.0)
        } else {
            let report = eval_with_fallback(
                |p| double_zeta(r as u32, (rel.weight - r) as u32, p),
                want,
                prec,
            )?;
            (report.value, report.bound)
        };
        lhs += a * value;
        magnitude += abs(a * value);
        bound += abs(a) * (term_bound + abs(value) * 4.0 * EPS_UNIT);
    }
    let lambda = rel.lambda.to_f64().expect("lambda in f64 range");
    let zk = eval_with_fallback(|p| zeta(rel.weight as u32, p), want, prec)?;
    let rhs = lambda * zk.value;
    bound += abs(lambda) * (zk.bound + abs(zk.value) * 4.0 * EPS_UNIT);
    bound += (rel.coeffs.len() as f64 + 4.0) * EPS_UNIT * (magnitude + abs(rhs));
    if bound > prec.eps {
        return Err(Error::PrecisionUnattainable {
            requested: prec.eps,
            achievable: bound,
        });
    }
    Ok(NumericReport {
        value: lhs,
        bound,
        residual: Some(abs(lhs - rhs)),
    })
}

/// The restricted-sum constant: the sum of zeta(j) - 1 over j >= 2 with
/// j congruent to i mod d.
pub fn c_constant(d: u32, i: u32, prec: &Precision) -> Result<NumericReport> {
    if d < 1 {
        return Err(Error::ClassOutOfRange {
            index: i,
            modulus: d,
        });
    }
    if i >= d {
        return Err(Error::ClassOutOfRange {
            index: i,
            modulus: d,
        });
    }
    let mut j = if i < 2 {
        i + d * ((2 - i).div_ceil(d))
    } else {
        i
    };
    let mut value = 0.0;
    let mut bound = 0.0;
    loop {
        // Tail of the full series: sum_{j' >= j} (zeta(j') - 1) <= 4 * 2^{-j},
        // valid from j = 3 on; the loop never stops before the third term.
        let tail_bound = 4.0 / ipow(2.0, j);
        if tail_bound <= prec.eps / 4.0 && j > i + 2 * d {
            bound += tail_bound;
            break;
        }
        if j > 4000 {
            return Err(Error::PrecisionUnattainable {
                requested: prec.eps,
                achievable: bound + tail_bound,
            });
        }
        // Accumulate the achieved per-term bounds; the total is checked
        // against the target at the end.
        let (term, term_bound) = zeta_minus_one(j, prec.eps * f64::from(d) / 128.0);
        value += term;
        bound += term_bound;
        j += d;
    }
    if bound > prec.eps {
        return Err(Error::PrecisionUnattainable {
            requested: prec.eps,
            achievable: bound,
        });
    }
    Ok(NumericReport::plain(value, bound))
}

/// Sum of zeta(r, k-r) over 2 <= r <= k-1 with r congruent to i mod d.
pub fn restricted_sum(k: u32, d: u32, i: u32, prec: &Precision) -> Result<NumericReport> {
    if k < 3 {
        return Err(Error::Divergent {
            name: "k",
            min: 3,
            got: k,
        });
    }
    if d < 1 || i >= d {
        return Err(Error::ClassOutOfRange {
            index: i,
            modulus: d,
        });
    }
    let qualifying: Vec<u32> = (2..k).filter(|r| r % d == i).collect();
    let want = prec.eps / (2.0 * qualifying.len().max(1) as f64);
    let mut value = 0.0;
    let mut bound = 0.0;
    for r in qualifying {
        let report = eval_with_fallback(|p| double_zeta(r, k - r, p), want, prec)?;
        value += report.value;
        bound += report.bound + abs(report.value) * 2.0 * EPS_UNIT;
    }
    if bound > prec.eps {
        return Err(Error::PrecisionUnattainable {
            requested: prec.eps,
            achievable: bound,
        });
    }
    Ok(NumericReport::plain(value, bound))
}

/// The normalized restricted sum: restricted_sum divided by zeta(k).
pub fn restricted_ratio(k: u32, d: u32, i: u32, prec: &Precision) -> Result<NumericReport> {
    let numer = restricted_sum(k, d, i, &prec.budget(0.5))?;
    let denom = zeta(k, &prec.budget(0.125))?;
    let ratio = numer.value / denom.value;
    let bound =
        (numer.bound + abs(ratio) * denom.bound) / (denom.value - denom.bound) + 4.0 * EPS_UNIT;
    Ok(NumericReport::plain(ratio, bound))
}

/// One row of a convergence table.
#[derive(Debug, Clone)]
pub struct ConvergenceRow {
    pub weight: u32,
    pub ratio: NumericReport,
}

/// Normalized restricted sums for each listed weight.
pub fn convergence_table(
    d: u32,
    i: u32,
    weights: &[u32],
    prec: &Precision,
) -> Result<Vec<ConvergenceRow>> {
    weights
        .iter()
        .map(|&k| {
            Ok(ConvergenceRow {
                weight: k,
                ratio: restricted_ratio(k, d, i, prec)?,
            })
        })
        .collect()
}
