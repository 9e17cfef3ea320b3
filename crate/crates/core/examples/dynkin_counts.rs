//! Enumerates support tau-tilting pairs of Dynkin presets and prints the
//! tilting counts next to the closed forms.

use std::sync::Arc;
use std::time::Instant;

use tautilt::engine::Engine;
use tautilt::quiver::presets;

fn main() {
    let names: Vec<String> = std::env::args().skip(1).collect();
    let names = if names.is_empty() { vec!["A3".into(), "A4".into(), "D4".into(), "D5".into()] } else { names };
    for name in names {
        let start = Instant::now();
        let q = Arc::new(presets::preset(&name).expect("preset"));
        let engine = Engine::for_quiver(q.clone(), 1).expect("Dynkin pool");
        let mq = engine.mutation_quiver().expect("mutation quiver");
        let n = q.n();
        let a_n = mq.vertices.iter().filter(|p| p.projectives.is_empty()).count();
        let a_n1 = mq.vertices.iter().filter(|p| p.modules.len() == n - 1).count();
        let arrows = mq.tilting_subquiver().edges.len();
        println!(
            "{name}: pairs={} tilting={a_n} n-1={a_n1} arrows={arrows} ({:.2?})",
            mq.len(),
            start.elapsed()
        );
    }
}
