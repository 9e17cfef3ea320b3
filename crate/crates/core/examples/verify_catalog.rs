//! Runs every applicable check on a few presets and prints one line per
//! check.

use std::sync::Arc;
use std::time::Instant;

use tautilt::catalog::{verify, Check, VerifyOptions};
use tautilt::quiver::presets;

fn main() {
    let names: Vec<String> = std::env::args().skip(1).collect();
    let names = if names.is_empty() { vec!["A3".into(), "D4".into(), "K2".into(), "W4".into()] } else { names };
    for name in names {
        let q = Arc::new(presets::preset(&name).expect("preset"));
        let start = Instant::now();
        let report = verify(q.clone(), &Check::applicable(&q), &VerifyOptions::default()).expect("verify");
        print!("{}", report.summary());
        println!("{name}: {} in {:.2?}", if report.passed() { "all passed" } else { "FAILED" }, start.elapsed());
    }
}
