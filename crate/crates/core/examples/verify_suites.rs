//! Every randomized verification suite at a small size, as the CLI's
//! `verify` subcommand runs them.

use weilcount::suites::{run_suite, SUITES};

fn main() -> weilcount::Result<()> {
    for s in SUITES {
        let rep = run_suite(s, 0, 20)?;
        println!("{s:<16} {} ({}/{})", if rep.passed { "pass" } else { "FAIL" }, rep.passed_cases, rep.iterations);
        for (k, v) in &rep.tallies {
            println!("    {k}: {v}");
        }
    }
    Ok(())
}
