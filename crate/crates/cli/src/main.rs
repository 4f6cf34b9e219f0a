//! Command-line front end: period bases, relation generation, formal and
//! numeric verification, the evaluation-matrix views, and high-precision
//! zeta evaluation, with JSON as the interchange format.

mod json;
mod selftest;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dzv_core::numeric::{
    c_constant, convergence_table, double_zeta, restricted_ratio, restricted_sum, verify_numeric,
    zeta, Precision,
};
use dzv_core::relation::Relation;
use dzv_core::{
    canonical_relation, combine_kernel_element, dim_cusp_forms, find_symmetric_h, lambda_from_h,
    period_basis, relation_rank, type1_relation, type2_relation, zagier_matrix, zagier_submatrix,
    FormalSpace, Sign,
};

#[derive(Parser)]
#[command(
    name = "dzv",
    version,
    about = "Exact relations between double zeta values of odd weight"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format; CSV is only available for convergence tables.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output to a file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, ValueEnum)]
enum SignArg {
    Plus,
    Minus,
}

impl From<SignArg> for Sign {
    fn from(s: SignArg) -> Sign {
        match s {
            SignArg::Plus => Sign::Plus,
            SignArg::Minus => Sign::Minus,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyMode {
    Formal,
    Prop2,
    Numeric,
}

#[derive(Subcommand)]
enum Command {
    /// Basis of the period-polynomial eigenspace of an even weight.
    PeriodBasis {
        #[arg(long)]
        weight: usize,
        #[arg(long, value_enum)]
        sign: SignArg,
    },
    /// Generate Type 1 / Type 2 relations from the eigenspace of the given
    /// (even) source weight; the relation lives in weight k+1 or k-1.
    Relation {
        #[arg(long = "type", value_parser = clap::value_parser!(u8).range(1..=2))]
        kind: u8,
        #[arg(long)]
        weight: usize,
        /// Basis index; omit to emit every relation of the space.
        #[arg(long)]
        index: Option<usize>,
    },
    /// Check a relation file: formally, via the symmetric certificate, or
    /// numerically.
    Verify {
        #[arg(long, value_enum)]
        mode: VerifyMode,
        #[arg(long)]
        relation: PathBuf,
        #[arg(long, default_value_t = 1e-10)]
        prec: f64,
    },
    /// The evaluation matrix for zeta(even, odd) of weight 2K+1.
    Zagier {
        #[arg(long = "K")]
        big_k: usize,
        /// Drop the zeta(k-1,1) row and the zeta(k) column.
        #[arg(long)]
        sub: bool,
        /// Include a left-kernel basis.
        #[arg(long)]
        left_kernel: bool,
    },
    /// The canonical relation of an odd weight.
    Canonical {
        #[arg(long)]
        weight: usize,
    },
    /// Left-kernel element of the full evaluation matrix obtained by
    /// eliminating zeta(k) between a generated relation and the canonical one.
    KernelElement {
        #[arg(long)]
        weight: usize,
        #[arg(long = "type", value_parser = clap::value_parser!(u8).range(1..=2))]
        kind: u8,
        #[arg(long)]
        index: usize,
    },
    /// Rank of all generated relations of an odd weight.
    Rank {
        #[arg(long)]
        weight: usize,
    },
    /// Riemann zeta at an integer argument.
    Zeta {
        #[arg(long)]
        s: u32,
        #[arg(long, default_value_t = 1e-12)]
        prec: f64,
    },
    /// Double zeta value zeta(r, s).
    Dzeta {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        s: u32,
        #[arg(long, default_value_t = 1e-12)]
        prec: f64,
    },
    /// Restricted sum of zeta(r, k-r) over r congruent to i mod d, raw and
    /// normalized by zeta(k). Pass several weights for a convergence table.
    RestrictedSum {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        i: u32,
        #[arg(long, value_delimiter = ',', required = true)]
        k: Vec<u32>,
        #[arg(long, default_value_t = 1e-12)]
        prec: f64,
    },
    /// Restricted-sum constant: sum of zeta(j) - 1 over j congruent to i mod d.
    CConst {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        i: u32,
        #[arg(long, default_value_t = 1e-12)]
        prec: f64,
    },
    /// Run the golden suite of printed tables and identities.
    Selftest,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Command::Selftest = cli.command {
        return if selftest::run() == 0 {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        };
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<()> {
    let rendered = match &cli.command {
        Command::Selftest => unreachable!("handled in main"),
        Command::RestrictedSum { d, i, k, prec } if k.len() > 1 => {
            let rows = convergence_table(*d, *i, k, &Precision::with_eps(*prec))?;
            match cli.format {
                Format::Csv => json::convergence_csv(*d, *i, &rows),
                _ => {
                    let value = json!({
                        "d": d,
                        "i": i,
                        "rows": rows.iter().map(|row| json!({
                            "k": row.weight,
                            "ratio": row.ratio.value,
                            "bound": row.ratio.bound,
                        })).collect::<Vec<_>>(),
                    });
                    render(&value, cli.format)
                }
            }
        }
        other => {
            let value = dispatch(other)?;
            if cli.format == Format::Csv {
                bail!("csv output is only available for multi-weight restricted sums");
            }
            render(&value, cli.format)
        }
    };
    match &cli.output {
        Some(path) => fs::write(path, rendered.as_bytes())
            .with_context(|| format!("writing {}", path.display()))?,
        None => println!("{rendered}"),
    }
    Ok(())
}

fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(value).expect("serializable"),
        Format::Pretty => json::to_pretty(value, 0),
        Format::Csv => unreachable!("csv handled per command"),
    }
}

fn source_basis(kind: u8, weight: usize) -> Result<dzv_core::PeriodBasis> {
    let sign = if kind == 1 { Sign::Plus } else { Sign::Minus };
    Ok(period_basis(weight, sign)?)
}

fn dispatch(cmd: &Command) -> Result<Value> {
    match cmd {
        Command::PeriodBasis { weight, sign } => {
            let pb = period_basis(*weight, (*sign).into())?;
            Ok(json::period_basis_json(&pb))
        }
        Command::Relation {
            kind,
            weight,
            index,
        } => {
            let pb = source_basis(*kind, *weight)?;
            let build = |p| -> Result<Relation> {
                Ok(if *kind == 1 {
                    type1_relation(p)?
                } else {
                    type2_relation(p)?
                })
            };
            match index {
                Some(i) => {
                    let p = pb.basis.get(*i).ok_or_else(|| {
                        anyhow!("index {i} out of range (dimension {})", pb.dim())
                    })?;
                    Ok(json::relation_json(&build(p)?))
                }
                None => {
                    let all: Result<Vec<Value>> = pb
                        .basis
                        .iter()
                        .map(|p| Ok(json::relation_json(&build(p)?)))
                        .collect();
                    Ok(Value::Array(all?))
                }
            }
        }
        Command::Verify {
            mode,
            relation,
            prec,
        } => {
            let text = fs::read_to_string(relation)
                .with_context(|| format!("reading {}", relation.display()))?;
            let value: Value = serde_json::from_str(&text).context("parsing relation JSON")?;
            let rel = json::relation_from_json(&value)?;
            match mode {
                VerifyMode::Formal => {
                    let space = FormalSpace::new(rel.weight)?;
                    let outcome = space.check_relation(&rel);
                    Ok(json::check_outcome_json(&outcome, &rel.lambda))
                }
                VerifyMode::Prop2 => {
                    let generating = rel.generating_function();
                    match find_symmetric_h(&generating) {
                        None => Ok(json!({"holds": false, "lambda": null})),
                        Some(h) => {
                            let lambda = lambda_from_h(&h, rel.weight)?;
                            Ok(json!({
                                "holds": true,
                                "lambda": json::rational_str(&lambda),
                                "lambda_matches": lambda == rel.lambda,
                                "certificate": json::hompoly_json(&h),
                            }))
                        }
                    }
                }
                VerifyMode::Numeric => {
                    let report = verify_numeric(&rel, &Precision::with_eps(*prec))?;
                    let mut out = json::report_json(&report);
                    out.as_object_mut()
                        .expect("object")
                        .insert("weight".into(), json!(rel.weight));
                    Ok(out)
                }
            }
        }
        Command::Zagier {
            big_k,
            sub,
            left_kernel,
        } => {
            if *big_k < 2 {
                bail!("need K >= 2");
            }
            if *sub {
                let m = zagier_submatrix(*big_k);
                let kernel = left_kernel.then(|| m.left_kernel());
                let mut out = json!({
                    "K": big_k,
                    "weight": 2 * big_k + 1,
                    "entries": json::matrix_entries(&m),
                });
                if let Some(kernel) = kernel {
                    out.as_object_mut()
                        .expect("object")
                        .insert("left_kernel".into(), json::vectors_json(&kernel));
                }
                Ok(out)
            } else {
                let z = zagier_matrix(*big_k);
                let kernel = left_kernel.then(|| z.matrix.left_kernel());
                Ok(json::zagier_json(&z, kernel.as_deref()))
            }
        }
        Command::Canonical { weight } => Ok(json::relation_json(&canonical_relation(*weight)?)),
        Command::KernelElement {
            weight,
            kind,
            index,
        } => {
            if *weight < 5 || weight % 2 == 0 {
                bail!("need an odd weight >= 5");
            }
            let source_weight = if *kind == 1 { weight - 1 } else { weight + 1 };
            let pb = source_basis(*kind, source_weight)?;
            let p = pb
                .basis
                .get(*index)
                .ok_or_else(|| anyhow!("index {index} out of range (dimension {})", pb.dim()))?;
            let rel = if *kind == 1 {
                type1_relation(p)?
            } else {
                type2_relation(p)?
            };
            let ke = combine_kernel_element(&rel)?;
            Ok(json::kernel_element_json(&ke))
        }
        Command::Rank { weight } => {
            let rank = relation_rank(*weight)?;
            let below = dim_cusp_forms(weight - 1)?;
            let above = dim_cusp_forms(weight + 1)?;
            Ok(json!({
                "weight": weight,
                "rank": rank,
                "dim_cusp_forms_below": below,
                "dim_cusp_forms_above": above,
                "matches_dimension_sum": rank == below + above,
            }))
        }
        Command::Zeta { s, prec } => {
            let report = zeta(*s, &Precision::with_eps(*prec))?;
            let mut out = json::report_json(&report);
            out.as_object_mut()
                .expect("object")
                .insert("s".into(), json!(s));
            Ok(out)
        }
        Command::Dzeta { r, s, prec } => {
            let report = double_zeta(*r, *s, &Precision::with_eps(*prec))?;
            let mut out = json::report_json(&report);
            let map = out.as_object_mut().expect("object");
            map.insert("r".into(), json!(r));
            map.insert("s".into(), json!(s));
            Ok(out)
        }
        Command::RestrictedSum { d, i, k, prec } => {
            let weight = k[0];
            let precision = Precision::with_eps(*prec);
            let sum = restricted_sum(weight, *d, *i, &precision)?;
            let ratio = restricted_ratio(weight, *d, *i, &precision)?;
            Ok(json!({
                "k": weight,
                "d": d,
                "i": i,
                "sum": json::report_json(&sum),
                "normalized": json::report_json(&ratio),
            }))
        }
        Command::CConst { d, i, prec } => {
            let report = c_constant(*d, *i, &Precision::with_eps(*prec))?;
            let mut out = json::report_json(&report);
            let map = out.as_object_mut().expect("object");
            map.insert("d".into(), json!(d));
            map.insert("i".into(), json!(i));
            Ok(out)
        }
        Command::Selftest => unreachable!("handled in main"),
    }
}
