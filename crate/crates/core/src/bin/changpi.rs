use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use chang_homotopy::abelian::{snf, IntMatrix};
use chang_homotopy::engine::{compute_pi_traced, replay, DerivationTrace, EngineConfig, EngineError};
use chang_homotopy::spaces::{ExtNat, SpaceId};
use chang_homotopy::tables::{generate, render_markdown, suspension_consistency, CellResult, Which};

#[derive(Parser)]
#[command(name = "changpi", about = "2-local pi_{n+3}, pi_{n+4} of indecomposable A_n^2-complexes")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Markdown,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute one homotopy group.
    Pi {
        /// Space, e.g. S^{5}, M1^{5}, Minf^{4}, Ceta^{6}, C2^{6}, C^{6,3}, C2^{7,3}, C1^{6,inf}.
        #[arg(long)]
        space: String,
        /// Homotopy degree.
        #[arg(long)]
        m: u32,
        /// Print the derivation trace.
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Sign of the Whitehead square of iota_4.
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        sign: i64,
    },
    /// Regenerate a table.
    Table {
        /// 1 for pi_{n+3}, 2 for pi_{n+4}.
        #[arg(long)]
        which: String,
        #[arg(long, default_value = "1,2,3,4,inf")]
        r: String,
        #[arg(long, default_value = "1,2,3,4,inf")]
        s: String,
        #[arg(long, value_enum, default_value = "markdown")]
        format: Format,
    },
    /// Compare regenerated cells with the closed forms.
    Verify {
        #[arg(long)]
        which: String,
        #[arg(long, default_value = "1,2,3,4,inf")]
        r: String,
        #[arg(long, default_value = "1,2,3,4,inf")]
        s: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Smith normal form of a matrix given as JSON {"rows", "cols", "entries"}.
    Snf {
        /// Input file; standard input when absent.
        #[arg(long)]
        input: Option<String>,
    },
    /// Re-run a trace written by `pi --trace --format json`.
    #[command(hide = true)]
    Replay {
        #[arg(long)]
        input: Option<String>,
    },
}

#[derive(Deserialize)]
struct MatrixInput {
    rows: usize,
    cols: usize,
    entries: Vec<serde_json::Value>,
}

/// Integers arrive as JSON numbers or decimal strings.
fn parse_int(v: &serde_json::Value) -> Result<num_bigint::BigInt, String> {
    match v {
        serde_json::Value::Number(n) => n.as_i64().map(Into::into).ok_or_else(|| format!("not an integer: {n}")),
        serde_json::Value::String(s) => s.parse().map_err(|_| format!("not an integer: {s:?}")),
        other => Err(format!("not an integer: {other}")),
    }
}

fn int_json(x: &num_bigint::BigInt) -> serde_json::Value {
    i64::try_from(x).map_or_else(|_| json!(x.to_string()), |v| json!(v))
}

#[derive(Serialize)]
struct GroupOut<'a> {
    space: String,
    dim: u32,
    free_rank: usize,
    torsion: &'a [u32],
    pretty: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<&'a DerivationTrace>,
}

fn read_input(path: &Option<String>) -> Result<String, String> {
    match path {
        Some(p) => std::fs::read_to_string(p).map_err(|e| format!("{p}: {e}")),
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| e.to_string())?;
            Ok(s)
        }
    }
}

fn parse_range(s: &str) -> Result<Vec<ExtNat>, String> {
    s.split(',').filter(|t| !t.trim().is_empty()).map(|t| t.trim().parse::<ExtNat>().map_err(|e| e.to_string())).collect()
}

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

fn engine_exit(e: &EngineError) -> u8 {
    match e {
        EngineError::Ambiguous(_) => 2,
        e if e.is_range() => 3,
        EngineError::Space(_) => 1,
        _ => 3,
    }
}

fn cmd_pi(space: &str, m: u32, trace: bool, format: Format, sign: i64) -> ExitCode {
    let id: SpaceId = match space.parse() {
        Ok(id) => id,
        Err(e) => return fail(1, e),
    };
    let cfg = EngineConfig::default().with_sign(sign);
    let t = match compute_pi_traced(&id, m, &cfg) {
        Ok(t) => t,
        Err(EngineError::Ambiguous(rep)) => {
            let c: Vec<String> = rep.candidates.iter().map(|g| g.pretty()).collect();
            match format {
                Format::Json => println!("{}", json!({ "space": id.to_string(), "dim": m, "ambiguous": *rep })),
                _ => println!("ambiguous: {}", c.join(" | ")),
            }
            eprintln!("{rep}");
            return ExitCode::from(2);
        }
        Err(e) => return fail(engine_exit(&e), e),
    };
    match format {
        Format::Json => {
            let out = GroupOut {
                space: id.to_string(),
                dim: m,
                free_rank: t.result.free_rank,
                torsion: &t.result.torsion_exponents,
                pretty: t.result.pretty(),
                trace: trace.then_some(&t),
            };
            println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
        }
        _ => {
            println!("{}", t.result.pretty());
            if trace {
                print!("{}", t.render());
            }
        }
    }
    ExitCode::SUCCESS
}

fn run_table(which: &str, r: &str, s: &str) -> Result<(Which, Vec<CellResult>), String> {
    let w = Which::parse(which).ok_or_else(|| format!("--which must be 1 or 2, got {which}"))?;
    let rs = parse_range(r)?;
    let ss = parse_range(s)?;
    Ok((w, generate(w, &rs, &ss, &EngineConfig::default())))
}

fn cmd_table(which: &str, r: &str, s: &str, format: Format) -> ExitCode {
    let (w, cells) = match run_table(which, r, s) {
        Ok(x) => x,
        Err(e) => return fail(1, e),
    };
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&cells).expect("serializable")),
        _ => print!("{}", render_markdown(w, &cells)),
    }
    ExitCode::SUCCESS
}

fn cmd_verify(which: &str, r: &str, s: &str, format: Format) -> ExitCode {
    let (w, cells) = match run_table(which, r, s) {
        Ok(x) => x,
        Err(e) => return fail(1, e),
    };
    let bad: Vec<&CellResult> = cells.iter().filter(|c| !c.matches()).collect();
    let derived = cells.iter().filter(|c| !c.is_reference()).count();
    let rs = parse_range(r).unwrap_or_default();
    let consistency = {
        let t1 = generate(Which::One, &rs, &[ExtNat::Fin(1)], &EngineConfig::default());
        let t2 = generate(Which::Two, &rs, &[ExtNat::Fin(1)], &EngineConfig::default());
        suspension_consistency(&t1, &t2)
    };
    match format {
        Format::Json => println!(
            "{}",
            json!({
                "table": w.stem() - 2,
                "derived_cells": derived,
                "mismatches": bad,
                "suspension_consistency": consistency,
            })
        ),
        _ => {
            for c in &bad {
                let exp = c.expected.as_ref().map(|g| g.pretty()).unwrap_or_else(|| "-".into());
                let got = match &c.derived {
                    Some(Ok(g)) => g.pretty(),
                    Some(Err(e)) => format!("error: {e}"),
                    None => "-".into(),
                };
                println!("MISMATCH {} {} ({}) pi_{}: derived {got}, expected {exp}", c.row, c.space, c.params(), c.dim);
            }
            for p in &consistency {
                println!("INCONSISTENT {p}");
            }
            println!("table {}: {}/{} derived cells match", w.stem() - 2, derived - bad.len(), derived);
        }
    }
    if bad.is_empty() && consistency.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(4)
    }
}

fn cmd_snf(input: &Option<String>) -> ExitCode {
    let text = match read_input(input) {
        Ok(t) => t,
        Err(e) => return fail(1, e),
    };
    let parsed: MatrixInput = match serde_json::from_str(&text) {
        Ok(m) => m,
        Err(e) => return fail(1, format!("malformed matrix: {e}")),
    };
    let entries = match parsed.entries.iter().map(parse_int).collect::<Result<Vec<_>, _>>() {
        Ok(e) => e,
        Err(e) => return fail(1, format!("malformed matrix: {e}")),
    };
    let m = match IntMatrix::from_entries(parsed.rows, parsed.cols, entries) {
        Ok(m) => m,
        Err(e) => return fail(1, e),
    };
    let f = snf(&m);
    let check = f.u.mul(&m).and_then(|um| um.mul(&f.v));
    if check.as_ref() != Ok(&f.s) {
        return fail(3, "internal error: U M V != S");
    }
    let mat = |x: &IntMatrix| {
        json!({ "rows": x.rows(), "cols": x.cols(), "entries": x.entries().iter().map(int_json).collect::<Vec<_>>() })
    };
    let diagonal: Vec<_> = f.diagonal().iter().map(int_json).collect();
    println!("{}", json!({ "S": mat(&f.s), "U": mat(&f.u), "V": mat(&f.v), "diagonal": diagonal }));
    ExitCode::SUCCESS
}

fn cmd_replay(input: &Option<String>) -> ExitCode {
    let text = match read_input(input) {
        Ok(t) => t,
        Err(e) => return fail(1, e),
    };
    let value: serde_json::Value = match serde_json::from_str(&text) {
        Ok(v) => v,
        Err(e) => return fail(1, format!("malformed trace: {e}")),
    };
    let raw = value.get("trace").cloned().unwrap_or(value);
    let t: DerivationTrace = match serde_json::from_value(raw) {
        Ok(t) => t,
        Err(e) => return fail(1, format!("malformed trace: {e}")),
    };
    match replay(&t) {
        Ok(g) => {
            println!("replayed: {}", g.pretty());
            ExitCode::SUCCESS
        }
        Err(e) => fail(engine_exit(&e), e),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.cmd {
        Cmd::Pi { space, m, trace, format, sign } => cmd_pi(space, *m, *trace, *format, *sign),
        Cmd::Table { which, r, s, format } => cmd_table(which, r, s, *format),
        Cmd::Verify { which, r, s, format } => cmd_verify(which, r, s, *format),
        Cmd::Snf { input } => cmd_snf(input),
        Cmd::Replay { input } => cmd_replay(input),
    }
}
