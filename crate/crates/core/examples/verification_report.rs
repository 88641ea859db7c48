//! Runs every verification suite at the small bounds and prints a summary
//! per suite. Pass a suite name to print its records as JSON.

use imbalance::verify::{verify_all, verify_suite, Bounds, SUITES};

fn main() -> imbalance::Result<()> {
    let bounds = Bounds { timing: false, ..Bounds::default() };
    if let Some(name) = std::env::args().nth(1) {
        let records = verify_suite(&name, &bounds)?;
        println!("{}", serde_json::to_string_pretty(&records).expect("records serialize"));
        return Ok(());
    }

    for name in SUITES {
        let records = verify_suite(name, &bounds)?;
        let failed: Vec<_> = records.iter().filter(|r| !r.pass).collect();
        print!("{name:<10} {:>4} records, {:>3} failing", records.len(), failed.len());
        if let Some(r) = failed.first() {
            print!("  first: {} [{}]", r.identity, r.parameter);
        }
        println!();
    }
    let total = verify_all(&bounds)?;
    println!("total: {}/{} pass", total.iter().filter(|r| r.pass).count(), total.len());
    Ok(())
}
