//! Indecomposables of a Dynkin quiver through reflection functors.

use std::sync::Arc;

use crate::linalg::Matrix;
use crate::quiver::{positive_roots_of, Quiver, QuiverError};
use crate::rep::Representation;

/// `S^-_k`: from representations of `q` where `k` is a source to
/// representations of `q.reflect(k)` where it is a sink. The new space at
/// `k` is the cokernel of `V_k -> (+)_{a: k -> j} V_j`.
pub fn reflect_at_source(v: &Representation, k: usize, target: Arc<Quiver>) -> Representation {
    let q = v.quiver();
    debug_assert!(q.is_source(k));
    let out: Vec<usize> = q.arrows().iter().enumerate().filter(|(_, a)| a.source == k).map(|(i, _)| i).collect();
    let width: usize = out.iter().map(|&i| v.dim(q.arrows()[i].target)).sum();
    let stacked = Matrix::vstack(v.dim(k), &out.iter().map(|&i| v.map(i)).collect::<Vec<_>>());
    let proj = if v.dim(k) == 0 { Matrix::identity(width) } else { stacked.cokernel_projection() };
    let new_k = proj.rows();
    let mut dims = v.dims().to_vec();
    dims[k] = new_k;
    let mut maps: Vec<Matrix> = v.maps().to_vec();
    let mut off = 0;
    for &i in &out {
        let d = v.dim(q.arrows()[i].target);
        maps[i] = proj.block(0, off, new_k, d);
        off += d;
    }
    Representation::new(target, dims, maps).expect("reflected shapes")
}

/// All indecomposables of a Dynkin quiver, one per positive root, in the
/// order produced by repeating a sink-admissible sequence.
pub fn dynkin_indecomposables(q: &Arc<Quiver>) -> Result<Vec<Representation>, QuiverError> {
    let roots = positive_roots_of(q)?;
    let n = q.n();
    // Sinks first: every arrow i -> j has j before i.
    let order: Vec<usize> = q.topological_order().iter().rev().copied().collect();
    // quivers[t] is the orientation after reflecting at w_0, ..., w_{t-1}.
    let mut quivers: Vec<Arc<Quiver>> = vec![q.clone()];
    let mut out = Vec::with_capacity(roots.len());
    // Each vertex contributes a tau^- orbit; once every orbit has ended a
    // full round of the sequence produces only zeros.
    let mut misses = 0;
    let mut t = 0;
    while misses < n {
        let w_t = order[t % n];
        let qt = quivers[t].clone();
        debug_assert!(qt.is_sink(w_t));
        let mut rep = Representation::simple(qt, w_t);
        for s in (0..t).rev() {
            rep = reflect_at_source(&rep, order[s % n], quivers[s].clone());
            if rep.is_zero() {
                break;
            }
        }
        if rep.is_zero() {
            misses += 1;
        } else {
            misses = 0;
            out.push(rep.rebase(q.clone()).expect("orientation returns to the original"));
        }
        quivers.push(Arc::new(quivers[t].reflect(w_t)));
        t += 1;
    }
    debug_assert_eq!(out.len(), roots.len());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::presets;

    #[test]
    fn one_module_per_root() {
        for q in [presets::dynkin_a(4), presets::dynkin_d(5), presets::dynkin_e(6)] {
            let q = Arc::new(q);
            let mods = dynkin_indecomposables(&q).unwrap();
            let mut dims: Vec<_> = mods.iter().map(|m| m.dim_vector()).collect();
            dims.sort();
            assert_eq!(dims, positive_roots_of(&q).unwrap(), "{}", q.name());
        }
    }

    #[test]
    fn first_modules_are_simple_projectives() {
        let q = Arc::new(presets::dynkin_a(3));
        let mods = dynkin_indecomposables(&q).unwrap();
        // Vertex 1 is the unique sink, so P_1 = S_1 comes first.
        assert_eq!(mods[0].dims(), &[1, 0, 0]);
    }
}
