//! Indecomposable pool of a preset: dims, Loewy labels, tau and tau^-.

use std::sync::Arc;

use tautilt::indec::IndecPool;
use tautilt::quiver::presets;

fn main() {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "K2".into());
    let depth: usize = args.next().map(|d| d.parse().expect("depth")).unwrap_or(3);
    let pool = IndecPool::new(Arc::new(presets::preset(&name).expect("preset")), depth).expect("pool");
    println!("{name}: {} modules ({:?})", pool.len(), pool.kind());
    let dims = |i: Option<usize>| i.map(|j| pool.module(j).dims.to_string()).unwrap_or_else(|| "-".into());
    for (i, m) in pool.modules().iter().enumerate() {
        println!("{:<12} {:<10} tau {:<12} tau- {}", m.dims.to_string(), m.label, dims(pool.tau(i)), dims(pool.tau_inverse(i)));
    }
}
