//! Runs every acceptance criterion and prints one line per criterion.

use std::process::ExitCode;

use spinklr::acceptance::{self, CRITERIA};

fn main() -> ExitCode {
    let filter: Vec<u8> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = Vec::new();
    for (id, _) in CRITERIA {
        if !filter.is_empty() && !filter.contains(&id) {
            continue;
        }
        let report = acceptance::run(id).expect("known criterion");
        println!("{}", report.summary_line());
        for f in report.failures.iter().take(5) {
            println!("    {f}");
        }
        if !report.passed() {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
