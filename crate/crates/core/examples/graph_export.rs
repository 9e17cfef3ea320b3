//! Writes the support tau-tilting quiver of a preset as DOT to stdout.

use std::sync::Arc;

use tautilt::engine::Engine;
use tautilt::io::graph_dot;
use tautilt::quiver::presets;

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "A3".into());
    let e = Engine::for_quiver(Arc::new(presets::preset(&name).expect("preset")), 0).expect("engine");
    let mq = e.mutation_quiver().expect("exhaustive");
    let sat = e.saturation_report(&mq).expect("saturation");
    print!("{}", graph_dot(&e, &mq, &sat));
}
