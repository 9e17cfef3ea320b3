//! The ball of given radius around `A` in the support tau-tilting quiver of
//! the Kronecker algebra, with saturation verdicts.

use std::sync::Arc;

use tautilt::engine::Engine;
use tautilt::quiver::presets;

fn main() {
    let depth: usize = std::env::args().nth(1).map(|d| d.parse().expect("depth")).unwrap_or(5);
    let e = Engine::for_quiver(Arc::new(presets::kronecker()), depth).expect("engine");
    let mq = e.mutation_ball(&e.regular_pair().expect("A"), depth).expect("ball");
    let sat = e.saturation_report(&mq).expect("saturation");
    for (i, p) in mq.vertices.iter().enumerate() {
        let verdict = sat.iter().find(|r| r.vertex == i).map(|r| format!("{:?}", r.verdict)).unwrap_or_default();
        println!("{i:>2} d={} {:<20} {verdict}", mq.distance[i].unwrap_or(0), e.pair_label(p));
    }
    for ed in &mq.edges {
        println!("{} -> {}", ed.from, ed.to);
    }
    let tilting = mq.tilting_subquiver();
    println!("tilting components: {}", tilting.components().len());
}
