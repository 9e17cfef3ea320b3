//! Almost complete tilting modules, their complements and exchange
//! sequences.

use std::sync::Arc;

use tautilt::engine::{Engine, Pair};
use tautilt::quiver::presets;

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "A3".into());
    let e = Engine::for_quiver(Arc::new(presets::preset(&name).expect("preset")), 0).expect("engine");
    let n = e.rank();
    let almost: Vec<Pair> = e.enumerate_rigid().into_iter().filter(|p| p.projectives.is_empty() && p.modules.len() + 1 == n).collect();
    for m in almost {
        let c = e.complements_of_almost_complete(&m.modules).expect("complements");
        let labels: Vec<String> = c.complements.iter().map(|&x| e.pool().module(x).dims.to_string()).collect();
        print!("{:<28} faithful={:<5} complements {}", e.pair_label(&m), c.faithful, labels.join(", "));
        if let [a, b] = c.complements[..] {
            let s = e.exchange_sequence(a, b, &c.almost).expect("exchange sequence");
            let mid: Vec<String> = s.middle().iter().map(|&(j, k)| format!("{}^{k}", e.pool().module(j).dims)).collect();
            print!("   0 -> {} -> {} -> {} -> 0 valid={}", e.pool().module(s.x).dims, mid.join("+"), e.pool().module(s.y).dims, s.is_valid());
        }
        println!();
    }
}
