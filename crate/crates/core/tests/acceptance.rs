//! Runs all thirteen acceptance criteria at full size and prints one line per
//! criterion. The benchmark CSV lands in `target/lr_benchmark.csv`.

use std::path::PathBuf;
use std::process::ExitCode;

use diffschub::suite::{run_criterion, SuiteConfig};

fn main() -> ExitCode {
    let mut cfg = SuiteConfig::full();
    let target = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../target");
    std::fs::create_dir_all(&target).expect("target directory");
    cfg.bench_csv = Some(target.join("lr_benchmark.csv"));
    let mut failed = Vec::new();
    for id in 1..=13 {
        let r = run_criterion(id, &cfg);
        println!("{}", r.line());
        if !r.passed {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all 13 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: criteria failed: {failed:?}");
        ExitCode::FAILURE
    }
}
