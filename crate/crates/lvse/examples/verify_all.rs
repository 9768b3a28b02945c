//! Run every verification suite from the library (same code path as
//! `lvse verify`) and print the measured numbers.
//!
//! ```bash
//! cargo run --example verify_all
//! ```

use lvse::scenario::{run_suite, SuiteKind, VerifyConfig};

fn main() -> lvse::Result<()> {
    let cfg = VerifyConfig::default();
    let mut all_pass = true;
    for kind in SuiteKind::ALL {
        let report = run_suite(kind, &cfg)?;
        println!("suite {kind}: {}", if report.pass { "pass" } else { "FAIL" });
        for check in &report.checks {
            println!(
                "  {:<36} {:>12.3e}  ({})  {}",
                check.name,
                check.value,
                check.criterion,
                if check.pass { "pass" } else { "FAIL" }
            );
        }
        all_pass &= report.pass;
    }
    println!();
    println!("overall: {}", if all_pass { "pass" } else { "FAIL" });
    Ok(())
}
