use super::presentation::{hom_ext_dims, PathMaps};
use super::{Morphism, Representation};
use crate::linalg::{Matrix, Rational};
use crate::quiver::DimVector;

/// Basis of `Hom(m, n)` from the commuting-square equations
/// `N_a f_i = f_j M_a`, one unknown per entry of each block `f_v`.
pub fn hom_basis(m: &Representation, n: &Representation) -> Vec<Morphism> {
    let q = m.quiver();
    let nv = q.n();
    let mut offsets = Vec::with_capacity(nv);
    let mut total = 0;
    for v in 0..nv {
        offsets.push(total);
        total += n.dim(v) * m.dim(v);
    }
    let var = |v: usize, r: usize, c: usize| offsets[v] + r * m.dim(v) + c;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (k, a) in q.arrows().iter().enumerate() {
        let (i, j) = (a.source, a.target);
        let (na, ma) = (n.map(k), m.map(k));
        for r in 0..n.dim(j) {
            for c in 0..m.dim(i) {
                let mut row = vec![Rational::zero(); total];
                for t in 0..n.dim(i) {
                    let x = na.get(r, t);
                    if !x.is_zero() {
                        row[var(i, t, c)] = &row[var(i, t, c)] + x;
                    }
                }
                for t in 0..m.dim(j) {
                    let x = ma.get(t, c);
                    if !x.is_zero() {
                        row[var(j, r, t)] = &row[var(j, r, t)] - x;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let system = if rows.is_empty() { Matrix::zeros(0, total) } else { Matrix::from_rows(rows) };
    let kernel = system.kernel_basis();
    (0..kernel.cols())
        .map(|col| {
            let x = kernel.column(col);
            let blocks = (0..nv)
                .map(|v| {
                    let (r, c) = (n.dim(v), m.dim(v));
                    let flat: Vec<Rational> = x[offsets[v]..offsets[v] + r * c].to_vec();
                    let mut b = Matrix::zeros(r, c);
                    for (idx, val) in flat.into_iter().enumerate() {
                        b.set(idx / c.max(1), idx % c.max(1), val);
                    }
                    b
                })
                .collect();
            Morphism { blocks }
        })
        .collect()
}

/// `dim Hom(m, n)` through the minimal presentation of `m`.
pub fn hom_dim(m: &Representation, n: &Representation) -> usize {
    hom_ext_dims(m, n).0
}

/// Per-vertex dimensions of the trace of `ts` in `x`, the sum of images
/// of all morphisms from the `ts` to `x`.
pub fn trace_dims(ts: &[&Representation], x: &Representation) -> Vec<usize> {
    let n = x.quiver().n();
    let mut images: Vec<Vec<Matrix>> = vec![Vec::new(); n];
    for t in ts {
        for f in hom_basis(t, x) {
            for (v, b) in f.blocks.into_iter().enumerate() {
                if b.cols() > 0 {
                    images[v].push(b);
                }
            }
        }
    }
    (0..n)
        .map(|v| {
            let refs: Vec<&Matrix> = images[v].iter().collect();
            Matrix::hstack(x.dim(v), &refs).rank()
        })
        .collect()
}

/// Whether `x` is a quotient of a finite direct sum of copies of `t`.
pub fn fac_contains(t: &Representation, x: &Representation) -> bool {
    fac_contains_sum(&[t], x)
}

pub fn fac_contains_sum(ts: &[&Representation], x: &Representation) -> bool {
    trace_dims(ts, x) == x.dims()
}

/// Radical `rad M` as column bases per vertex, and the dimension vector
/// of the top `M / rad M`.
pub fn radical_top(m: &Representation) -> (Vec<Matrix>, DimVector) {
    let q = m.quiver();
    let subs: Vec<Matrix> = (0..q.n()).map(|v| Matrix::identity(m.dim(v))).collect();
    let rad = radical_of(m, &subs);
    let top = (0..q.n()).map(|v| m.dim(v) - rad[v].cols()).collect();
    (rad, DimVector(top))
}

/// Given subspaces `U_v` (column bases) closed under the arrows, the
/// subspace `sum_a M_a(U_i)`.
fn radical_of(m: &Representation, subs: &[Matrix]) -> Vec<Matrix> {
    let q = m.quiver();
    (0..q.n())
        .map(|j| {
            let imgs: Vec<Matrix> = q
                .arrows()
                .iter()
                .enumerate()
                .filter(|(_, a)| a.target == j)
                .map(|(k, a)| m.map(k).mul(&subs[a.source]))
                .collect();
            let refs: Vec<&Matrix> = imgs.iter().collect();
            let span = Matrix::hstack(m.dim(j), &refs);
            span.select_columns(&span.independent_columns())
        })
        .collect()
}

/// Dimension vectors of the layers `rad^k M / rad^(k+1) M`, top first.
pub fn loewy_layers(m: &Representation) -> Vec<DimVector> {
    let q = m.quiver();
    let mut current: Vec<Matrix> = (0..q.n()).map(|v| Matrix::identity(m.dim(v))).collect();
    let mut layers = Vec::new();
    while current.iter().any(|b| b.cols() > 0) {
        let next = radical_of(m, &current);
        layers.push(DimVector((0..q.n()).map(|v| current[v].cols() - next[v].cols()).collect()));
        current = next;
    }
    layers
}

/// No nonzero element of the path algebra annihilates `m`: for each pair
/// of vertices the path maps `s -> t` are linearly independent.
pub fn is_faithful(m: &Representation) -> bool {
    let q = m.quiver();
    let maps = PathMaps::new(m);
    for s in 0..q.n() {
        for t in 0..q.n() {
            let paths = q.paths_between(s, t);
            if paths.is_empty() {
                continue;
            }
            let rows: Vec<Vec<Rational>> = paths.iter().map(|&p| maps.get(p).entries().to_vec()).collect();
            let width = m.dim(s) * m.dim(t);
            if width < paths.len() {
                return false;
            }
            if Matrix::from_rows(rows).rank() < paths.len() {
                return false;
            }
        }
    }
    true
}

pub fn is_sincere(m: &Representation) -> bool {
    m.dims().iter().all(|&d| d > 0)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::quiver::presets;

    #[test]
    fn hom_basis_matches_presentation_route() {
        let q = Arc::new(presets::w4());
        let mods: Vec<Representation> = (0..4)
            .flat_map(|v| {
                [
                    Representation::projective(q.clone(), v),
                    Representation::injective(q.clone(), v),
                    Representation::simple(q.clone(), v),
                ]
            })
            .collect();
        for a in &mods {
            for b in &mods {
                let basis = hom_basis(a, b);
                for f in &basis {
                    f.check(a, b).unwrap();
                }
                assert_eq!(basis.len(), hom_dim(a, b));
            }
        }
    }

    #[test]
    fn a2_fac_and_faithful() {
        let q = Arc::new(presets::dynkin_a(2));
        let p2 = Representation::projective(q.clone(), 1);
        let s1 = Representation::simple(q.clone(), 0);
        let s2 = Representation::simple(q.clone(), 1);
        assert!(fac_contains(&p2, &s2));
        assert!(!fac_contains(&p2, &s1));
        assert!(fac_contains(&s1, &s1));
        assert!(is_faithful(&Representation::regular(q.clone())));
        assert!(is_faithful(&p2));
        assert!(!is_faithful(&s1));
        assert!(!is_faithful(&crate::rep::direct_sum(&[&s1, &s2]).module));
    }

    #[test]
    fn loewy_layers_of_kronecker_modules() {
        let q = Arc::new(presets::kronecker());
        let p2 = Representation::projective(q.clone(), 1);
        assert_eq!(loewy_layers(&p2), vec![DimVector(vec![0, 1]), DimVector(vec![2, 0])]);
        let (_, top) = radical_top(&Representation::injective(q.clone(), 0));
        assert_eq!(top, DimVector(vec![0, 2]));
    }
}
