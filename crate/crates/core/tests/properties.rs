use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use tautilt::engine::{Engine, Enumeration};
use tautilt::linalg::{Matrix, Rational};
use tautilt::quiver::{presets, Quiver};
use tautilt::rep::{direct_sum, ext1_dim, hom_dim, tau, tau_inverse, Morphism, Representation};

const SMALL: [&str; 4] = ["A3", "D4", "K2", "W4"];

fn small_quiver(i: usize) -> Arc<Quiver> {
    static QS: OnceLock<Vec<Arc<Quiver>>> = OnceLock::new();
    QS.get_or_init(|| SMALL.iter().map(|n| Arc::new(presets::preset(n).unwrap())).collect())[i].clone()
}

fn d4() -> &'static (Engine, Enumeration) {
    static E: OnceLock<(Engine, Enumeration)> = OnceLock::new();
    E.get_or_init(|| {
        let e = Engine::for_quiver(Arc::new(presets::preset("D4").unwrap()), 0).unwrap();
        let en = e.enumerate();
        (e, en)
    })
}

fn kronecker() -> &'static Engine {
    static E: OnceLock<Engine> = OnceLock::new();
    E.get_or_init(|| Engine::for_quiver(Arc::new(presets::kronecker()), 4).unwrap())
}

/// A representation with small dims and entries, built from a flat pool
/// of integers.
fn build(q: Arc<Quiver>, dims: Vec<usize>, entries: &[i64]) -> Representation {
    let mut it = entries.iter().copied().cycle();
    let maps: Vec<Vec<Vec<i64>>> = q
        .arrows()
        .iter()
        .map(|a| (0..dims[a.target]).map(|_| (0..dims[a.source]).map(|_| it.next().unwrap()).collect()).collect())
        .collect();
    Representation::from_int_maps(q, dims, &maps).unwrap()
}

fn rep() -> impl Strategy<Value = Representation> {
    (0..SMALL.len(), prop::collection::vec(0usize..=2, 4), prop::collection::vec(-2i64..=2, 1..24)).prop_map(|(i, d, e)| {
        let q = small_quiver(i);
        build(q.clone(), d[..q.n()].to_vec(), &e)
    })
}

fn rep_pair() -> impl Strategy<Value = (Representation, Representation)> {
    (0..SMALL.len(), prop::collection::vec(0usize..=2, 8), prop::collection::vec(-2i64..=2, 1..24), prop::collection::vec(-2i64..=2, 1..24))
        .prop_map(|(i, d, e, f)| {
            let q = small_quiver(i);
            let n = q.n();
            (build(q.clone(), d[..n].to_vec(), &e), build(q, d[4..4 + n].to_vec(), &f))
        })
}

fn ints(v: &[usize]) -> Vec<i64> {
    v.iter().map(|&x| x as i64).collect()
}

/// Unit lower times unit upper triangular: always invertible.
fn invertible(n: usize, lower: &[i64], upper: &[i64]) -> Matrix {
    let mut l = Matrix::identity(n);
    let mut u = Matrix::identity(n);
    let mut k = 0;
    for i in 0..n {
        for j in 0..i {
            l.set(i, j, Rational::from_int(lower[k % lower.len()]));
            u.set(j, i, Rational::from_int(upper[k % upper.len()]));
            k += 1;
        }
    }
    l.mul(&u)
}

/// Conjugates every map of `m` by per-vertex base changes.
fn change_basis(m: &Representation, lower: &[i64], upper: &[i64]) -> Representation {
    let q = m.quiver().clone();
    let g: Vec<Matrix> = (0..q.n()).map(|v| invertible(m.dim(v), lower, upper)).collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| g[a.target].mul(m.map(k)).mul(&g[a.source].inverse().unwrap()))
        .collect();
    Representation::new(q, m.dims().to_vec(), maps).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn euler_form_is_hom_minus_ext((m, n) in rep_pair()) {
        let q = m.quiver();
        let euler = q.euler_form(&ints(m.dims()), &ints(n.dims())).unwrap();
        prop_assert_eq!(euler, hom_dim(&m, &n) as i64 - ext1_dim(&m, &n) as i64);
    }

    #[test]
    fn auslander_reiten_formula((m, n) in rep_pair()) {
        prop_assert_eq!(ext1_dim(&m, &n), hom_dim(&n, &tau(&m)));
    }

    #[test]
    fn tau_inverse_tau_drops_projectives(m in rep()) {
        // tau^- tau M is M without its projective summands.
        let back = tau_inverse(&tau(&m));
        prop_assert!(back.dims().iter().zip(m.dims()).all(|(a, b)| a <= b));
        prop_assert_eq!(tau(&back).dim_vector(), tau(&m).dim_vector());
    }

    #[test]
    fn pool_tau_round_trip(i in 0usize..12) {
        let e = kronecker();
        let pool = e.pool();
        let i = i % pool.len();
        let x = e.module_rep(i);
        if let Some(t) = pool.tau(i) {
            prop_assert_eq!(tau(x).dim_vector(), pool.module(t).dims.clone());
            prop_assert_eq!(pool.tau_inverse(t), Some(i));
            prop_assert_eq!(tau_inverse(&tau(x)).dim_vector(), x.dim_vector());
        }
    }

    #[test]
    fn coxeter_matches_tau(i in 0usize..12) {
        let e = kronecker();
        let pool = e.pool();
        let i = i % pool.len();
        let phi = e.quiver().coxeter_matrix();
        if let Some(t) = pool.tau(i) {
            prop_assert_eq!(phi.apply(&ints(&pool.module(i).dims.0)), ints(&pool.module(t).dims.0));
        }
    }

    #[test]
    fn decompose_round_trip(mult in prop::collection::vec(0usize..=2, 12), lower in prop::collection::vec(-2i64..=2, 1..8), upper in prop::collection::vec(-2i64..=2, 1..8)) {
        let (e, _) = d4();
        let pool = e.pool();
        let mult: Vec<usize> = (0..pool.len()).map(|i| mult[i % mult.len()]).collect();
        let parts: Vec<&Representation> = mult.iter().enumerate().flat_map(|(i, &k)| std::iter::repeat_n(e.module_rep(i), k)).collect();
        prop_assume!(!parts.is_empty());
        let sum = change_basis(&direct_sum(&parts).module, &lower, &upper);
        prop_assert_eq!(pool.decompose(&sum).unwrap(), mult);
    }

    #[test]
    fn mutation_is_an_involution(p in 0usize..50, pos in 0usize..4) {
        let (e, en) = d4();
        let pair = &en.pairs[p % en.pairs.len()];
        let at = pair.summands()[pos % pair.len()];
        let (other, rec) = e.mutate(pair, at).unwrap();
        prop_assert!(e.is_support_tau_tilting(&other).unwrap());
        prop_assert_eq!(other.len(), pair.len());
        let (back, _) = e.mutate(&other, rec.added).unwrap();
        prop_assert_eq!(&back, pair);
    }

    #[test]
    fn rank_nullity(rows in 1usize..5, cols in 1usize..5, entries in prop::collection::vec(-3i64..=3, 25)) {
        let m = Matrix::from_ints(rows, cols, &entries[..rows * cols]);
        prop_assert_eq!(m.rank() + m.nullity(), cols);
        let k = m.kernel_basis();
        prop_assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn inverse_of_unitriangular_product(n in 1usize..5, lower in prop::collection::vec(-3i64..=3, 1..10), upper in prop::collection::vec(-3i64..=3, 1..10)) {
        let g = invertible(n, &lower, &upper);
        let inv = g.inverse().unwrap();
        prop_assert_eq!(g.mul(&inv), Matrix::identity(n));
    }
}

#[test]
fn morphism_identity_is_isomorphism() {
    let q = small_quiver(1);
    let p = Representation::projective(q, 2);
    assert!(Morphism::identity(&p).is_isomorphism());
}
