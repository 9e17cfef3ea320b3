//! Coxeter matrix of the wild quiver `1 <= 2 <- 3 -> 4`, and tau on the
//! bounded pool compared with it.

use std::sync::Arc;
use std::time::Instant;

use tautilt::catalog::{verify, Check, VerifyOptions};
use tautilt::quiver::presets;

fn main() {
    let depth: usize = std::env::args().nth(1).map(|d| d.parse().expect("depth")).unwrap_or(3);
    let q = Arc::new(presets::w4());
    for row in q.coxeter_matrix().rows {
        println!("{row:?}");
    }
    let start = Instant::now();
    let opts = VerifyOptions { depth: Some(depth), ..VerifyOptions::default() };
    let report = verify(q, &[Check::Coxeter, Check::Oracles], &opts).expect("verify");
    print!("{}", report.summary());
    println!("depth {depth}: {:.2?}", start.elapsed());
}
