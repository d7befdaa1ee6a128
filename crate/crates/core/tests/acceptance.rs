//! Runs every acceptance criterion at its stated tolerance and time limit,
//! printing one PASS/FAIL line per criterion. Uses its own harness so the
//! lines are shown without `--nocapture`.

use std::process::ExitCode;

use padic_fft::selftest;

fn main() -> ExitCode {
    let outcomes = selftest::run_all();
    for outcome in &outcomes {
        println!("{outcome}");
    }
    let failed: Vec<u32> = outcomes.iter().filter(|o| !o.passed).map(|o| o.id).collect();
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", outcomes.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
