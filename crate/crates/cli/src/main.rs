use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use symgen_core::families::{family_table, hl_p, schur_bialternant, schur_e, schur_h, schurq, FamilyTag};
use symgen_core::series::Window;
use symgen_core::shifted::{qstar_multivar, shifted_bialternant, shifted_schur, Presentation};
use symgen_core::verify::{run_suite, Suite, VerifyParams};
use symgen_core::{straighten, Element, IntegerVector, Partition, Rational};

#[derive(Parser)]
#[command(name = "symgen", version, about = "Exact coefficient tables, closed forms and operator checks for Schur-type families")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExpandFamily {
    Schur,
    SchurQ,
    HallLittlewood,
    Shifted,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClosedKind {
    Schur,
    SchurE,
    SchurQ,
    ShiftedSchur,
    Straighten,
}

#[derive(Clone, Copy, ValueEnum)]
enum EvalKind {
    Schur,
    ShiftedSchur,
    #[value(alias = "hall-littlewood")]
    Hl,
}

#[derive(Clone, Copy, ValueEnum)]
enum Pres {
    H,
    E,
}

#[derive(Subcommand)]
enum Cmd {
    /// Multivariate coefficient table of a generating function.
    Expand {
        #[arg(long, value_enum)]
        family: ExpandFamily,
        #[arg(long = "l", default_value_t = 2)]
        l: usize,
        #[arg(long = "N", default_value_t = 4)]
        n: u32,
    },
    /// Determinantal closed form for one index vector.
    ClosedForm {
        #[arg(value_enum)]
        kind: ClosedKind,
        /// Comma-separated integers, e.g. `2,-1,3`.
        #[arg(allow_hyphen_values = true)]
        index: String,
        /// Generators used for shifted Schur functions.
        #[arg(long, value_enum, default_value_t = Pres::H)]
        presentation: Pres,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long = "N")]
        n: Option<u32>,
        #[arg(long = "W")]
        w: Option<i64>,
        #[arg(long = "l")]
        l: Option<usize>,
        #[arg(long = "K")]
        k: Option<u32>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Evaluate at explicit rational points.
    Eval {
        #[arg(value_enum)]
        kind: EvalKind,
        lambda: String,
        /// Comma-separated rationals, e.g. `1,2,1/3`.
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
    },
}

enum Outcome {
    Ok,
    Failed,
}

fn usage(msg: impl std::fmt::Display) -> String {
    msg.to_string()
}

fn parse_points(s: &str) -> Result<Vec<Rational>, String> {
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| p.trim().parse::<Rational>().map_err(|e| format!("bad rational {p:?}: {e}")))
        .collect()
}

fn print_table(format: Format, value: Value, rows: Vec<(String, String)>) {
    match format {
        Format::Json => println!("{value}"),
        Format::Text => {
            let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            for (k, v) in rows {
                println!("{k:<width$}  {v}");
            }
        }
    }
}

fn expand(format: Format, family: ExpandFamily, l: usize, n: u32) -> Result<Outcome, String> {
    let window = Window::full(l, n);
    let (value, rows) = match family {
        ExpandFamily::Shifted => {
            let t = qstar_multivar(&window).map_err(usage)?;
            let rows = t.entries().map(|(k, v)| (format!("({k})"), v.to_string())).collect();
            (t.to_json(), rows)
        }
        f => {
            let tag = match f {
                ExpandFamily::Schur => FamilyTag::Schur,
                ExpandFamily::SchurQ => FamilyTag::SchurQ,
                _ => FamilyTag::HallLittlewood,
            };
            let t = family_table(tag, &window).map_err(usage)?;
            let rows = t.entries().map(|(k, v)| (format!("({k})"), v.to_string())).collect();
            let mut value = t.to_json();
            value["family"] = json!(tag.name());
            (value, rows)
        }
    };
    print_table(format, value, rows);
    Ok(Outcome::Ok)
}

fn partition(v: &IntegerVector) -> Result<Partition, String> {
    if v.0.iter().any(|&x| x < 0) {
        return Err(format!("({v}) is not a partition"));
    }
    Partition::new(v.0.iter().map(|&x| x as u32).collect()).map_err(usage)
}

fn closed_form(format: Format, kind: ClosedKind, index: &str, pres: Pres) -> Result<Outcome, String> {
    let v: IntegerVector = index.parse().map_err(usage)?;
    let element: Element = match kind {
        ClosedKind::Straighten => {
            let s = straighten(&v);
            match format {
                Format::Json => {
                    let p = s.partition().map(|p| p.parts().to_vec());
                    println!("{}", json!({"kind": "straighten", "index": v.0, "sign": s.sign(), "partition": p}));
                }
                Format::Text => println!("{s}"),
            }
            return Ok(Outcome::Ok);
        }
        ClosedKind::Schur => schur_h(&v),
        ClosedKind::SchurE => schur_e(&partition(&v)?),
        ClosedKind::SchurQ => schurq(&partition(&v)?).map_err(usage)?,
        ClosedKind::ShiftedSchur => {
            let p = match pres {
                Pres::H => Presentation::H,
                Pres::E => Presentation::E,
            };
            shifted_schur(&v, p)
        }
    };
    match format {
        Format::Json => println!("{}", json!({"index": v.0, "element": element.to_string()})),
        Format::Text => println!("{element}"),
    }
    Ok(Outcome::Ok)
}

fn verify(format: Format, suite: &str, params: VerifyParams) -> Result<Outcome, String> {
    let suite: Suite = suite.parse().map_err(usage)?;
    let rec = run_suite(suite, &params).map_err(usage)?;
    match format {
        Format::Json => println!("{}", serde_json::to_string(&rec).expect("serializable")),
        Format::Text => {
            for s in &rec.suites {
                println!("{}", s.summary());
            }
            println!("{}", rec.summary());
            for f in &rec.failures {
                println!("  {f}");
            }
        }
    }
    Ok(if rec.pass { Outcome::Ok } else { Outcome::Failed })
}

fn eval(format: Format, kind: EvalKind, lambda: &str, x: &str, t: Option<&str>) -> Result<Outcome, String> {
    let lam: Partition = lambda.parse().map_err(usage)?;
    let x = parse_points(x)?;
    let value = match kind {
        EvalKind::Schur => schur_bialternant(&lam, &x).map_err(usage)?,
        EvalKind::ShiftedSchur => shifted_bialternant(&lam, &x).map_err(usage)?,
        EvalKind::Hl => {
            let t = t.ok_or("--t is required for hl")?;
            let t: Rational = t.parse().map_err(|e| format!("bad rational {t:?}: {e}"))?;
            hl_p(&lam, &x, &t).map_err(usage)?
        }
    };
    match format {
        Format::Json => println!("{}", json!({"lambda": lam.parts(), "value": value.to_string()})),
        Format::Text => println!("{value}"),
    }
    Ok(Outcome::Ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("SYMGEN_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    let f = cli.format;
    let res = match cli.cmd {
        Cmd::Expand { family, l, n } => expand(f, family, l, n),
        Cmd::ClosedForm { kind, index, presentation } => closed_form(f, kind, &index, presentation),
        Cmd::Verify { suite, n, w, l, k, seed } => verify(f, &suite, VerifyParams { n, w, l, k, seed }),
        Cmd::Eval { kind, lambda, x, t } => eval(f, kind, &lambda, &x, t.as_deref()),
    };
    match res {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
