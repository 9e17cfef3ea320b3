//! Left and right mutations of `A` for a preset, with their exchange
//! sequences.

use std::sync::Arc;

use tautilt::engine::Engine;
use tautilt::quiver::presets;

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "A3".into());
    let e = Engine::for_quiver(Arc::new(presets::preset(&name).expect("preset")), 3).expect("engine");
    let a = e.regular_pair().expect("A is tilting");
    println!("{}: {}", name, e.pair_label(&a));
    for pos in a.summands() {
        match e.mutate(&a, pos) {
            Ok((b, rec)) => {
                let middle: Vec<String> = rec.middle.iter().map(|&(m, k)| format!("{}^{k}", e.pool().module(m).dims)).collect();
                println!("  at {} ({:?}) -> {}   middle [{}]", e.summand_label(pos), rec.direction, e.pair_label(&b), middle.join(" "));
                let (back, _) = e.mutate(&b, rec.added).expect("mutation back");
                assert_eq!(back, a);
            }
            Err(err) => println!("  at {}: {err}", e.summand_label(pos)),
        }
    }
}
