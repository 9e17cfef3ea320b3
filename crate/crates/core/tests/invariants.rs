use std::sync::Arc;

use tautilt::catalog::{closed_form_counts, dynkin_type, enumerated_counts, E_TABLE};
use tautilt::engine::Engine;
use tautilt::quiver::{presets, Quiver};

fn counts(q: Quiver) -> (u64, u64, u64) {
    let name = q.name().to_string();
    let e = Engine::for_quiver(Arc::new(q), 0).unwrap();
    let c = enumerated_counts(&name, e.rank(), &e.mutation_quiver().unwrap());
    (c.a_n, c.a_n_minus_1, c.arrows)
}

#[test]
fn table_is_internally_consistent() {
    for (n, a, b, arrows) in E_TABLE {
        assert_eq!(2 * arrows, n as u64 * a - b, "E{n}");
    }
}

#[test]
fn orientation_independence() {
    for name in ["A3", "D4"] {
        let q = presets::preset(name).unwrap();
        let base = counts(q.clone());
        assert_eq!(counts(q.opposite()), base, "{name} opposite");
        assert_eq!(counts(q.reorient(&[0]).unwrap()), base, "{name} first arrow reversed");
        let (ty, n) = dynkin_type(&q).unwrap();
        let c = closed_form_counts(ty, n).unwrap();
        assert_eq!((c.a_n, c.a_n_minus_1, c.arrows), base);
    }
}

#[test]
fn enumeration_does_not_depend_on_workers() {
    let q = Arc::new(presets::preset("D5").unwrap());
    let one = Engine::for_quiver(q.clone(), 0).unwrap().with_workers(1).enumerate();
    let four = Engine::for_quiver(q, 0).unwrap().with_workers(4).enumerate();
    assert_eq!(one.pairs, four.pairs);
}
