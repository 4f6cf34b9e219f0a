//! Golden self-test: the printed tables, matrices and identities the library
//! must reproduce, runnable from the installed binary.

use dzv_core::exact::{rat, rat_int};
use dzv_core::numeric::{
    c_constant, double_zeta, restricted_ratio, verify_numeric, zeta, Precision,
};
use dzv_core::relation::Relation;
use dzv_core::zagier::RenormKind;
use dzv_core::{
    b_coeffs, c_coeffs, canonical_relation, combine_kernel_element, dim_cusp_forms,
    find_symmetric_h, lambda_from_h, period_basis, relation_rank, renorm_matrices, type1_relation,
    type2_relation, zagier_matrix, zagier_submatrix, FormalSpace, HomPoly, Mat2, Rational, Sign,
};
type Check = (&'static str, fn() -> Result<(), String>);

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| rat_int(x)).collect()
}

fn ensure(cond: bool, msg: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}

fn relation_equals(rel: &Relation, descending: &[i64], lambda: Rational) -> Result<(), String> {
    let got: Vec<Rational> = rel.coeffs.values().rev().cloned().collect();
    ensure(
        got == ints(descending),
        &format!("coefficients {got:?} != {descending:?}"),
    )?;
    ensure(
        rel.lambda == lambda,
        &format!("lambda {} != {lambda}", rel.lambda),
    )
}

fn period_bases() -> Result<(), String> {
    let plus = period_basis(12, Sign::Plus).map_err(|e| e.to_string())?;
    ensure(plus.dim() == 1, "dim W12+ != 1")?;
    ensure(
        plus.basis[0].coeffs() == &ints(&[0, 4, 0, -25, 0, 42, 0, -25, 0, 4, 0])[..],
        "W12+ generator mismatch",
    )?;
    let minus = period_basis(12, Sign::Minus).map_err(|e| e.to_string())?;
    ensure(
        minus.basis[1].coeffs() == &ints(&[0, 0, -1, 0, 3, 0, -3, 0, 1, 0, 0])[..],
        "W12- second basis vector mismatch",
    )?;
    let minus16 = period_basis(16, Sign::Minus).map_err(|e| e.to_string())?;
    ensure(
        minus16.basis[1].coeffs() == &ints(&[0, 0, -2, 0, 7, 0, -11, 0, 11, 0, -7, 0, 2, 0, 0])[..],
        "W16- second basis vector mismatch",
    )?;
    for k in (4..=24).step_by(2) {
        let cusp = dim_cusp_forms(k).map_err(|e| e.to_string())?;
        ensure(
            period_basis(k, Sign::Plus)
                .map_err(|e| e.to_string())?
                .dim()
                == cusp,
            &format!("dim W{k}+ mismatch"),
        )?;
        ensure(
            period_basis(k, Sign::Minus)
                .map_err(|e| e.to_string())?
                .dim()
                == cusp + 1,
            &format!("dim W{k}- mismatch"),
        )?;
    }
    Ok(())
}

fn coefficient_tables() -> Result<(), String> {
    let plus = period_basis(12, Sign::Plus).map_err(|e| e.to_string())?;
    let b = b_coeffs(&plus.basis[0]).map_err(|e| e.to_string())?;
    let scaled: Vec<Rational> = (3..=10)
        .rev()
        .map(|r| &b.entries[&r] * rat_int(330))
        .collect();
    ensure(
        scaled == ints(&[24, 72, 119, 115, 15, -161, -288, -216]),
        "330*b table mismatch",
    )?;
    let minus = period_basis(12, Sign::Minus).map_err(|e| e.to_string())?;
    let c = c_coeffs(&minus.basis[1]).map_err(|e| e.to_string())?;
    let scaled: Vec<Rational> = (3..=8)
        .rev()
        .map(|r| &c.entries[&r] * rat_int(63))
        .collect();
    ensure(
        scaled == ints(&[14, 42, 75, 95, 84, 42]),
        "63*c table mismatch",
    )?;
    let minus16 = period_basis(16, Sign::Minus).map_err(|e| e.to_string())?;
    let c = c_coeffs(&minus16.basis[1]).map_err(|e| e.to_string())?;
    let scaled: Vec<Rational> = (3..=12)
        .rev()
        .map(|r| &c.entries[&r] * rat(429, 2))
        .collect();
    ensure(
        scaled == ints(&[66, 198, 375, 555, 686, 728, 675, 555, 396, 198]),
        "429/2*c table mismatch",
    )
}

fn generated_relations() -> Result<(), String> {
    let w12p = period_basis(12, Sign::Plus).map_err(|e| e.to_string())?;
    let w12m = period_basis(12, Sign::Minus).map_err(|e| e.to_string())?;
    let w16p = period_basis(16, Sign::Plus).map_err(|e| e.to_string())?;
    let w16m = period_basis(16, Sign::Minus).map_err(|e| e.to_string())?;
    let w18m = period_basis(18, Sign::Minus).map_err(|e| e.to_string())?;
    relation_equals(
        &type2_relation(&w12m.basis[1]).map_err(|e| e.to_string())?,
        &[28, 20, -42],
        rat_int(-3),
    )?;
    relation_equals(
        &type1_relation(&w12p.basis[0]).map_err(|e| e.to_string())?,
        &[24, 28, -10, -36],
        rat_int(-3),
    )?;
    relation_equals(
        &type2_relation(&w16m.basis[1]).map_err(|e| e.to_string())?,
        &[22, 30, 7, -20, -33],
        rat_int(-3),
    )?;
    relation_equals(
        &type1_relation(&w16p.basis[0]).map_err(|e| e.to_string())?,
        &[156, 242, 153, -56, -215, -234],
        rat_int(-23),
    )?;
    relation_equals(
        &type2_relation(&w18m.basis[1]).map_err(|e| e.to_string())?,
        &[4004, 6358, 4347, -1624, -5885, -6006],
        rat_int(-597),
    )
}

fn oracle_and_certificates() -> Result<(), String> {
    for weight in (11..=17usize).step_by(2) {
        let space = FormalSpace::new(weight).map_err(|e| e.to_string())?;
        let mut relations = Vec::new();
        for p in &period_basis(weight - 1, Sign::Plus)
            .map_err(|e| e.to_string())?
            .basis
        {
            relations.push(type1_relation(p).map_err(|e| e.to_string())?);
        }
        for p in &period_basis(weight + 1, Sign::Minus)
            .map_err(|e| e.to_string())?
            .basis
        {
            relations.push(type2_relation(p).map_err(|e| e.to_string())?);
        }
        for rel in relations {
            let outcome = space.check_relation(&rel);
            ensure(outcome.holds, &format!("weight {weight}: oracle rejects"))?;
            ensure(
                outcome.lambda.as_ref() == Some(&rel.lambda),
                &format!("weight {weight}: oracle lambda mismatch"),
            )?;
            let a = rel.generating_function();
            let h = find_symmetric_h(&a).ok_or("missing symmetric certificate")?;
            ensure(
                &h.slash(&Mat2::T_PRIME) - &h == a,
                "certificate does not reproduce the generating function",
            )?;
            ensure(
                lambda_from_h(&h, weight).map_err(|e| e.to_string())? == rel.lambda,
                "certificate lambda mismatch",
            )?;
        }
    }
    Ok(())
}

fn zagier_views() -> Result<(), String> {
    let z5 = zagier_matrix(5);
    ensure(z5.matrix[(1, 4)] == rat(329, 2), "B5 entry (1,4)")?;
    ensure(z5.matrix[(2, 4)] == rat(461, 2), "B5 entry (2,4)")?;
    ensure(z5.matrix[(0, 4)] == rat_int(27), "B5 entry (0,4)")?;
    ensure(z5.matrix[(3, 4)] == rat_int(82), "B5 entry (3,4)")?;
    ensure(z5.matrix[(4, 4)] == rat_int(5), "B5 entry (4,4)")?;
    let sub = zagier_submatrix(5);
    let v = ints(&[0, -42, 20, 28]);
    ensure(
        sub.left_mul(&v).iter().all(|x| x == &rat_int(0)),
        "relation vector not in left kernel of B5^(1)",
    )?;
    let w12m = period_basis(12, Sign::Minus).map_err(|e| e.to_string())?;
    let rel = type2_relation(&w12m.basis[1]).map_err(|e| e.to_string())?;
    let ke = combine_kernel_element(&rel).map_err(|e| e.to_string())?;
    ensure(
        ke.entries == ints(&[3, -27, 13, 17, -6]),
        "combined kernel element mismatch",
    )
}

fn canonical_family() -> Result<(), String> {
    let printed: [(usize, &[i64], Rational); 6] = [
        (5, &[6, -3], rat(-3, 2)),
        (7, &[10, 1, -5], rat_int(-3)),
        (9, &[14, 3, -1, -7], rat(-9, 2)),
        (11, &[18, 5, 1, -3, -9], rat_int(-6)),
        (13, &[22, 7, 3, -1, -5, -11], rat(-15, 2)),
        (15, &[26, 9, 5, 1, -3, -7, -13], rat_int(-9)),
    ];
    for (weight, coeffs, lambda) in printed {
        let rel = canonical_relation(weight).map_err(|e| e.to_string())?;
        relation_equals(&rel, coeffs, lambda)?;
        let outcome = FormalSpace::new(weight)
            .map_err(|e| e.to_string())?
            .check_relation(&rel);
        ensure(
            outcome.holds,
            &format!("canonical weight {weight} rejected"),
        )?;
        ensure(
            outcome.lambda.as_ref() == Some(&rel.lambda),
            &format!("canonical weight {weight} lambda mismatch"),
        )?;
    }
    Ok(())
}

fn renormalization() -> Result<(), String> {
    let two = renorm_matrices(12, RenormKind::Two).map_err(|e| e.to_string())?;
    ensure(
        two.apply(&ints(&[4, -9, 6, -1])) == vec![rat_int(0), rat(1, 3), rat(-10, 63), rat(-2, 9)],
        "D2 B2 example mismatch",
    )?;
    let one = renorm_matrices(12, RenormKind::One).map_err(|e| e.to_string())?;
    ensure(
        one.apply(&ints(&[4, -25, 42, -25, 4]))
            == vec![
                rat_int(0),
                rat(-12, 11),
                rat(-10, 33),
                rat(28, 33),
                rat(8, 11),
            ],
        "D1 B1 example mismatch",
    )?;
    for n in (5..=21usize).step_by(2) {
        let d1 = renorm_matrices(n - 1, RenormKind::One).map_err(|e| e.to_string())?;
        let d2 = renorm_matrices(n + 1, RenormKind::Two).map_err(|e| e.to_string())?;
        ensure(
            d1.d == d2.d && d1.b == d2.b,
            &format!("renorm equality at N={n}"),
        )?;
    }
    Ok(())
}

fn ranks() -> Result<(), String> {
    for (weight, expected) in [(11usize, 1usize), (13, 1), (17, 2)] {
        ensure(
            relation_rank(weight).map_err(|e| e.to_string())? == expected,
            &format!("rank at weight {weight}"),
        )?;
    }
    Ok(())
}

fn numeric_suite() -> Result<(), String> {
    let prec = Precision::default();
    let loose = Precision::with_eps(1e-10);
    let z3 = zeta(3, &prec).map_err(|e| e.to_string())?;
    let dz = double_zeta(2, 1, &prec).map_err(|e| e.to_string())?;
    ensure((dz.value - z3.value).abs() < 1e-10, "zeta(2,1) != zeta(3)")?;

    let a = double_zeta(2, 3, &prec).map_err(|e| e.to_string())?.value;
    let b = double_zeta(3, 2, &prec).map_err(|e| e.to_string())?.value;
    let z2 = zeta(2, &prec).map_err(|e| e.to_string())?.value;
    let z5 = zeta(5, &prec).map_err(|e| e.to_string())?.value;
    ensure(
        (a + b - (z2 * z3.value - z5)).abs() < 1e-10,
        "stuffle (2,3) failed",
    )?;

    let mut sum = 0.0;
    for r in 2..8 {
        sum += double_zeta(r, 8 - r, &prec)
            .map_err(|e| e.to_string())?
            .value;
    }
    let z8 = zeta(8, &prec).map_err(|e| e.to_string())?.value;
    ensure((sum - z8).abs() < 1e-10, "sum formula weight 8 failed")?;

    let c20 = c_constant(2, 0, &prec).map_err(|e| e.to_string())?;
    ensure((c20.value - 0.75).abs() < 1e-10, "C_2^(0) != 3/4")?;
    let total: f64 = (0..4)
        .map(|i| c_constant(4, i, &prec).map(|r| r.value).unwrap_or(f64::NAN))
        .sum();
    ensure((total - 1.0).abs() < 1e-10, "C_4 classes do not sum to 1")?;

    let ratio = restricted_ratio(12, 2, 0, &prec).map_err(|e| e.to_string())?;
    ensure(
        (ratio.value - 0.75).abs() < 1e-10,
        "even restricted ratio at k=12",
    )?;

    let w12m = period_basis(12, Sign::Minus).map_err(|e| e.to_string())?;
    let rel = type2_relation(&w12m.basis[1]).map_err(|e| e.to_string())?;
    let report = verify_numeric(&rel, &loose).map_err(|e| e.to_string())?;
    ensure(
        report.residual.unwrap_or(f64::NAN) < 1e-10,
        "weight-11 residual too large",
    )?;
    let even_weight = Relation::custom(
        12,
        [(9, rat_int(28)), (7, rat_int(150)), (5, rat_int(168))]
            .into_iter()
            .collect(),
        rat(5197, 691),
    );
    let report = verify_numeric(&even_weight, &loose).map_err(|e| e.to_string())?;
    ensure(
        report.residual.unwrap_or(f64::NAN) < 1e-10,
        "weight-12 even identity residual too large",
    )
}

fn trivial_generators() -> Result<(), String> {
    let trivial = HomPoly::from_coeffs(ints(&[-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]));
    let rel = type2_relation(&trivial).map_err(|e| e.to_string())?;
    ensure(rel.is_zero(), "x^10 - 1 must give the zero relation")
}

/// Run the golden suite, printing one line per check. Returns the number of
/// failures.
pub fn run() -> usize {
    let checks: &[Check] = &[
        ("period bases and dimensions", period_bases),
        ("printed coefficient tables", coefficient_tables),
        ("generated relations", generated_relations),
        ("formal oracle and certificates", oracle_and_certificates),
        ("evaluation matrix and left kernel", zagier_views),
        ("canonical relations", canonical_family),
        ("renormalization matrices", renormalization),
        ("relation ranks", ranks),
        ("numeric suite", numeric_suite),
        ("trivial generators", trivial_generators),
    ];
    let mut failures = 0;
    for (name, check) in checks {
        match check() {
            Ok(()) => println!("[ ok ] {name}"),
            Err(msg) => {
                failures += 1;
                println!("[FAIL] {name}: {msg}");
            }
        }
    }
    if failures == 0 {
        println!("selftest: all {} checks passed", checks.len());
    } else {
        println!("selftest: {failures} of {} checks failed", checks.len());
    }
    failures
}
