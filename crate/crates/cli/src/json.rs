//! JSON encoding of the exact types (rationals travel as strings) and the
//! pretty/CSV renderings.

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Map, Value};

use dzv_core::numeric::{ConvergenceRow, NumericReport};
use dzv_core::relation::{Provenance, Relation};
use dzv_core::zagier::KernelElement;
use dzv_core::{CheckOutcome, HomPoly, PeriodBasis, QMatrix, Rational, ZagierMatrix};

pub fn rational_str(x: &Rational) -> String {
    x.to_string()
}

fn parse_rational(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => s
            .trim()
            .parse::<Rational>()
            .map_err(|e| anyhow!("bad rational {s:?}: {e}")),
        Value::Number(n) => {
            let i = n
                .as_i64()
                .ok_or_else(|| anyhow!("non-integer numeric coefficient {n}"))?;
            Ok(Rational::from_integer(i.into()))
        }
        other => bail!("expected rational string, got {other}"),
    }
}

pub fn hompoly_json(p: &HomPoly) -> Value {
    json!({
        "degree": p.degree(),
        "coeffs": p.coeffs().iter().map(rational_str).collect::<Vec<_>>(),
    })
}

pub fn period_basis_json(pb: &PeriodBasis) -> Value {
    json!({
        "weight": pb.weight,
        "sign": pb.sign.to_string(),
        "dimension": pb.dim(),
        "basis": pb.basis.iter().map(hompoly_json).collect::<Vec<_>>(),
    })
}

pub fn relation_json(rel: &Relation) -> Value {
    let mut coeffs = Map::new();
    for (&r, c) in rel.coeffs.iter().rev() {
        coeffs.insert(r.to_string(), Value::String(rational_str(c)));
    }
    let provenance = match &rel.provenance {
        Provenance::TypeOne {
            source_weight,
            scale,
        } => json!({"kind": "type1", "source_weight": source_weight, "scale": rational_str(scale)}),
        Provenance::TypeTwo {
            source_weight,
            scale,
        } => json!({"kind": "type2", "source_weight": source_weight, "scale": rational_str(scale)}),
        Provenance::Canonical => json!({"kind": "canonical"}),
        Provenance::Custom => json!({"kind": "custom"}),
    };
    json!({
        "weight": rel.weight,
        "coeffs": Value::Object(coeffs),
        "lambda": rational_str(&rel.lambda),
        "provenance": provenance,
    })
}

pub fn relation_from_json(v: &Value) -> Result<Relation> {
    let weight = v
        .get("weight")
        .and_then(Value::as_u64)
        .context("relation needs an integer \"weight\"")? as usize;
    if weight < 3 {
        bail!("relation weight must be at least 3");
    }
    let coeffs_obj = v
        .get("coeffs")
        .and_then(Value::as_object)
        .context("relation needs a \"coeffs\" object")?;
    let mut coeffs = std::collections::BTreeMap::new();
    for (key, value) in coeffs_obj {
        let r: usize = key
            .parse()
            .map_err(|_| anyhow!("coefficient key {key:?} is not an index"))?;
        if r == 0 || r >= weight {
            bail!("coefficient index {r} outside 1..={}", weight - 1);
        }
        coeffs.insert(r, parse_rational(value)?);
    }
    let lambda = parse_rational(v.get("lambda").context("relation needs \"lambda\"")?)?;
    Ok(Relation::custom(weight, coeffs, lambda))
}

pub fn check_outcome_json(outcome: &CheckOutcome, stated_lambda: &Rational) -> Value {
    let lambda_matches = outcome
        .lambda
        .as_ref()
        .map(|solved| solved == stated_lambda);
    json!({
        "holds": outcome.holds,
        "lambda": outcome.lambda.as_ref().map(rational_str),
        "lambda_matches": lambda_matches,
        "lambda_ambiguous": outcome.lambda_ambiguous,
    })
}

pub fn report_json(report: &NumericReport) -> Value {
    let mut map = Map::new();
    map.insert("value".into(), json!(report.value));
    map.insert("bound".into(), json!(report.bound));
    if let Some(residual) = report.residual {
        map.insert("residual".into(), json!(residual));
    }
    Value::Object(map)
}

pub fn matrix_entries(m: &QMatrix) -> Value {
    let rows: Vec<Value> = (0..m.rows())
        .map(|i| {
            Value::Array(
                m.row(i)
                    .iter()
                    .map(|x| Value::String(rational_str(x)))
                    .collect(),
            )
        })
        .collect();
    Value::Array(rows)
}

pub fn zagier_json(z: &ZagierMatrix, left_kernel: Option<&[Vec<Rational>]>) -> Value {
    let mut map = Map::new();
    map.insert("K".into(), json!(z.big_k));
    map.insert("weight".into(), json!(z.weight()));
    map.insert("row_labels".into(), json!(z.row_labels()));
    map.insert("col_labels".into(), json!(z.col_labels()));
    map.insert("entries".into(), matrix_entries(&z.matrix));
    if let Some(kernel) = left_kernel {
        map.insert("left_kernel".into(), vectors_json(kernel));
    }
    Value::Object(map)
}

pub fn vectors_json(vs: &[Vec<Rational>]) -> Value {
    Value::Array(
        vs.iter()
            .map(|v| Value::Array(v.iter().map(|x| Value::String(rational_str(x))).collect()))
            .collect(),
    )
}

pub fn kernel_element_json(ke: &KernelElement) -> Value {
    let k = ke.weight;
    let labels: Vec<String> = (1..=(k - 1) / 2)
        .map(|i| format!("zeta({},{})", 2 * i, k - 2 * i))
        .collect();
    json!({
        "weight": ke.weight,
        "labels": labels,
        "entries": ke.entries.iter().map(rational_str).collect::<Vec<_>>(),
        "novel": ke.novel,
    })
}

pub fn convergence_csv(d: u32, i: u32, rows: &[ConvergenceRow]) -> String {
    let mut lines = vec![String::from("d,i,k,ratio,bound")];
    for row in rows {
        lines.push(format!(
            "{d},{i},{},{},{:e}",
            row.weight,
            sig15(row.ratio.value),
            row.ratio.bound
        ));
    }
    lines.join("\n")
}

/// 15 significant digits, for the pretty renderings.
pub fn sig15(x: f64) -> String {
    format!("{x:.14e}")
}

pub fn to_pretty(v: &Value, indent: usize) -> String {
    // Compact human rendering: objects as "key: value" lines, arrays inline
    // when scalar, nested otherwise.
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| match v {
                Value::Object(_) | Value::Array(_) if !is_scalar_array(v) => {
                    format!("{pad}{k}:\n{}", to_pretty(v, indent + 1))
                }
                _ => format!("{pad}{k}: {}", scalar_pretty(v)),
            })
            .collect::<Vec<_>>()
            .join("\n"),
        Value::Array(items) => items
            .iter()
            .map(|item| {
                if is_scalar_array(item) || !matches!(item, Value::Object(_) | Value::Array(_)) {
                    format!("{pad}- {}", scalar_pretty(item))
                } else {
                    format!("{pad}-\n{}", to_pretty(item, indent + 1))
                }
            })
            .collect::<Vec<_>>()
            .join("\n"),
        other => format!("{pad}{}", scalar_pretty(other)),
    }
}

fn is_scalar_array(v: &Value) -> bool {
    matches!(v, Value::Array(items) if items.iter().all(|x| !matches!(x, Value::Object(_) | Value::Array(_))))
}

fn scalar_pretty(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Number(n) => n
            .as_f64()
            .filter(|x| x.fract() != 0.0)
            .map(sig15)
            .unwrap_or_else(|| n.to_string()),
        Value::Array(items) => {
            let inner: Vec<String> = items.iter().map(scalar_pretty).collect();
            format!("[{}]", inner.join(", "))
        }
        other => other.to_string(),
    }
}
