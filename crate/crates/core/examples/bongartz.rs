//! Bongartz completions of every indecomposable rigid module, computed by
//! the universal extension and by the torsion class.

use std::sync::Arc;

use tautilt::engine::Engine;
use tautilt::quiver::presets;

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "D4".into());
    let e = Engine::for_quiver(Arc::new(presets::preset(&name).expect("preset")), 0).expect("engine");
    for x in (0..e.pool().len()).filter(|&x| e.is_rigid(x)) {
        let ext = e.bongartz_completion_extension(&[x]).expect("extension");
        let tor = e.bongartz_completion_torsion(&[x]).expect("torsion");
        let mark = if ext == tor { "=" } else { "!=" };
        println!("{:<12} {} {mark} {}", e.pool().module(x).dims.to_string(), e.pair_label(&ext), e.pair_label(&tor));
    }
}
