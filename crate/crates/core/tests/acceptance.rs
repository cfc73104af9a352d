use std::io::Write;

use gptau_core::regression::{run_criterion, RegressionConfig};

/// Prints one line per criterion. Lines go straight to stderr so they show
/// up without `--nocapture`.
#[test]
fn acceptance() {
    let cfg = RegressionConfig::default();
    let mut err = std::io::stderr().lock();
    let mut failed = Vec::new();
    for n in 1..=9 {
        let r = run_criterion(n, &cfg);
        writeln!(err, "{r}").unwrap();
        if !r.passed() {
            failed.push(n);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
