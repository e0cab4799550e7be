use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use weilcount::counting::{build_pgn, der_value, d_count, euler_char, GenusMode, Symbolic};
use weilcount::counting::{ATable, CTable};
use weilcount::laurent::{evaluate_at_curve, CurveInput, LaurentPoly};
use weilcount::suites;
use weilcount::{Error, Result};

#[derive(Parser)]
#[command(name = "weilcount", version, about = "Counts of Frobenius-fixed l-adic local systems on curves")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Symbolic A_{n,1} in the symbols C[s,k].
    ASymbolic {
        #[arg(long)]
        n: u32,
        /// Fixed genus; `g − 1` stays symbolic when omitted.
        #[arg(long)]
        genus: Option<u32>,
    },
    /// P_{g,n} with its theorem-level checks.
    Pgn {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        g: u32,
        #[arg(long)]
        a_table: Option<PathBuf>,
    },
    /// Q_{g,n} = P_{g,n} / Pic⁰.
    Qgn {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        g: u32,
        #[arg(long)]
        a_table: Option<PathBuf>,
    },
    /// Euler characteristic Σ_{l|n} μ(l)μ(n/l) l^{2g−3}.
    Euler {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        g: u32,
    },
    /// D_n(d), symbolic or from a C table.
    DCount {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        c_table: Option<PathBuf>,
    },
    /// Exact count on a concrete curve.
    Eval {
        #[arg(long)]
        curve: PathBuf,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long)]
        a_table: Option<PathBuf>,
    },
    /// Run a verification suite, or replay a counterexample.
    Verify {
        suite: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        iterations: Option<usize>,
        #[arg(long)]
        replay: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Argument(format!("cannot read {}: {e}", path.display())))
}

fn load_atable(path: Option<&PathBuf>) -> Result<Option<ATable>> {
    path.map(|p| ATable::from_json_str(&read(p)?)).transpose()
}

/// Text and JSON renderings of a result, plus whether it passed.
struct Output {
    text: String,
    json: Value,
    ok: bool,
}

fn run(cmd: Cmd) -> Result<Output> {
    match cmd {
        Cmd::ASymbolic { n, genus } => {
            let mode = genus.map_or(GenusMode::Symbolic, GenusMode::Numeric);
            let a = der_value(n, mode, &Symbolic)?;
            let text = a.to_string();
            Ok(Output { json: json!({ "n": n, "genus": genus, "a": text }), text, ok: true })
        }
        Cmd::Pgn { n, g, a_table } => {
            let rep = build_pgn(n, g, load_atable(a_table.as_ref())?.as_ref())?;
            let text = format!(
                "P_{{{g},{n}}} = {}\nweil invariant: {}\npositivity: {}\ndominant term: {} ({})\nPic0 divides: {}\nQ(1,...,1) = {} (expected {})\n",
                rep.p,
                rep.weil_invariant,
                rep.positivity,
                rep.dominant,
                if rep.dominant_ok { "ok" } else { "unexpected" },
                rep.divisible(),
                rep.euler_value.as_ref().map_or("-".to_string(), |v| v.to_string()),
                rep.euler_expected,
            );
            Ok(Output { text, json: rep.to_json(), ok: rep.passed() })
        }
        Cmd::Qgn { n, g, a_table } => {
            let rep = build_pgn(n, g, load_atable(a_table.as_ref())?.as_ref())?;
            let q = rep
                .q
                .clone()
                .ok_or_else(|| Error::Violation(format!("Pic0 does not divide P_{{{g},{n}}}")))?;
            Ok(Output {
                text: q.to_string(),
                json: json!({ "n": n, "g": g, "q": q.to_json(), "euler_ok": rep.euler_ok() }),
                ok: rep.euler_ok(),
            })
        }
        Cmd::Euler { n, g } => {
            let chi = euler_char(n, g)?;
            Ok(Output { text: chi.to_string(), json: json!({ "n": n, "g": g, "euler": chi.to_string() }), ok: true })
        }
        Cmd::DCount { n, d, c_table } => {
            let text = match c_table {
                Some(p) => {
                    let v: Value = serde_json::from_str(&read(&p)?)?;
                    d_count(n, d, &CTable::from_json(&v)?)?.to_string()
                }
                None => d_count(n, d, &Symbolic)?.to_string(),
            };
            Ok(Output { json: json!({ "n": n, "d": d, "value": text }), text, ok: true })
        }
        Cmd::Eval { curve, n, k, a_table } => {
            let curve = CurveInput::from_json_str(&read(&curve)?)?;
            let g = curve.g as u32;
            let p = if n == 1 {
                LaurentPoly::pic0(curve.g)
            } else {
                build_pgn(n, g, load_atable(a_table.as_ref())?.as_ref())?.p
            };
            let count = evaluate_at_curve(&p, &curve, k, g as i64 - 1)?;
            Ok(Output {
                text: count.to_string(),
                json: json!({ "n": n, "k": k, "g": g, "count": count.to_string() }),
                ok: true,
            })
        }
        Cmd::Verify { suite, seed, iterations, replay } => {
            let rep = match (replay, suite) {
                (Some(path), suite) => {
                    let doc: Value = serde_json::from_str(&read(&path)?)?;
                    if let Some(s) = suite {
                        if doc["suite"].as_str() != Some(s.as_str()) {
                            return Err(Error::Argument(format!("replay file is not for suite {s:?}")));
                        }
                    }
                    suites::replay(&doc)?
                }
                (None, Some(s)) => {
                    let iters = iterations.unwrap_or_else(|| suites::default_iterations(&s));
                    suites::run_suite(&s, seed, iters)?
                }
                (None, None) => {
                    return Err(Error::Argument(format!(
                        "name a suite ({}) or pass --replay",
                        suites::SUITES.join(", ")
                    )))
                }
            };
            let mut text = format!(
                "{}: {} ({}/{} cases, seed {})\n",
                rep.suite,
                if rep.passed { "pass" } else { "FAIL" },
                rep.passed_cases,
                rep.iterations,
                rep.seed
            );
            for (k, v) in &rep.tallies {
                text.push_str(&format!("  {k}: {v}\n"));
            }
            if let Some(e) = &rep.error {
                text.push_str(&format!("  error: {e}\n"));
            }
            if let Some(c) = &rep.counterexample {
                text.push_str(&format!("  counterexample (replay with --replay FILE):\n{c}\n"));
            }
            let ok = rep.passed;
            Ok(Output { text, json: serde_json::to_value(&rep)?, ok })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("values serialize"));
            } else {
                print!("{}", out.text);
                if !out.text.ends_with('\n') {
                    println!();
                }
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if cli.json {
                println!("{}", json!({ "error": e.to_string(), "exit_code": e.exit_code() }));
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
