//! Pools of indecomposable modules with their Hom, Ext and tau tables.
//!
//! For Dynkin quivers the pool is complete. For generalized Kronecker
//! quivers and `W4` it is bounded: `tau^-l P_i` and `tau^l I_i` for
//! `l < depth`.

mod reflection;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::quiver::{DimVector, Quiver};
use crate::rep::{self, loewy_layers, min_projective_presentation, PathMaps, Presentation, Representation};

pub use reflection::{dynkin_indecomposables, reflect_at_source};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PoolError {
    #[error("quiver {0} has no supported indecomposable pool (Dynkin, generalized Kronecker or W4)")]
    Unsupported(String),
    #[error("bounded pools need a depth of at least 1")]
    ZeroDepth,
    #[error("Hom relation on the pool has a cycle")]
    NotDirected,
    #[error("module with dimension vector {0} does not decompose over the pool")]
    NotDecomposable(DimVector),
    #[error("two non-isomorphic pool modules share dimension vector {0}")]
    AmbiguousDims(DimVector),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum PoolKind {
    /// Every indecomposable module.
    Complete,
    /// Preprojective and preinjective modules up to `depth` tau-steps.
    Bounded { depth: usize },
}

/// One indecomposable of the pool.
#[derive(Clone, Debug)]
pub struct IndecModule {
    pub rep: Representation,
    pub dims: DimVector,
    /// Loewy series, e.g. `2/11`.
    pub label: String,
    pub projective_at: Option<usize>,
    pub injective_at: Option<usize>,
    presentation: Presentation,
    maps: PathMaps,
}

impl IndecModule {
    fn new(rep: Representation) -> Self {
        let q = rep.quiver().clone();
        let dims = rep.dim_vector();
        let label = loewy_label(&rep);
        let presentation = min_projective_presentation(&rep);
        let projective_at = (presentation.relations.is_empty() && presentation.generators.len() == 1)
            .then(|| presentation.generators[0].0);
        let injective_at = (0..q.n()).find(|&v| q.injective_dim(v) == dims && rep::tau_inverse(&rep).is_zero());
        let maps = PathMaps::new(&rep);
        IndecModule { rep, dims, label, projective_at, injective_at, presentation, maps }
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn path_maps(&self) -> &PathMaps {
        &self.maps
    }

    /// Vertices where the module is nonzero.
    pub fn support(&self) -> Vec<usize> {
        self.dims.0.iter().enumerate().filter(|(_, &d)| d > 0).map(|(v, _)| v).collect()
    }
}

/// Loewy series as vertex ids repeated by multiplicity, top layer first,
/// layers joined by `/`.
pub fn loewy_label(m: &Representation) -> String {
    let q = m.quiver();
    let sep = if q.vertices().iter().any(|v| v.chars().count() > 1) { "," } else { "" };
    loewy_layers(m)
        .iter()
        .map(|layer| {
            let ids: Vec<&str> =
                layer.0.iter().enumerate().flat_map(|(v, &k)| std::iter::repeat_n(q.vertex_id(v), k)).collect();
            ids.join(sep)
        })
        .collect::<Vec<_>>()
        .join("/")
}

/// The pool with precomputed tables. Modules are ordered so that
/// `hom(i, j) != 0` implies `i <= j`.
#[derive(Clone, Debug)]
pub struct IndecPool {
    quiver: Arc<Quiver>,
    kind: PoolKind,
    modules: Vec<IndecModule>,
    by_dims: HashMap<DimVector, usize>,
    hom: Vec<Vec<usize>>,
    ext: Vec<Vec<usize>>,
    hom_tau: Vec<Vec<usize>>,
    tau: Vec<Option<usize>>,
    tau_inv: Vec<Option<usize>>,
    tau_dims: Vec<DimVector>,
}

impl IndecPool {
    /// Complete pool for Dynkin quivers, bounded pool of the given depth
    /// otherwise.
    pub fn new(quiver: Arc<Quiver>, depth: usize) -> Result<Self, PoolError> {
        if quiver.is_dynkin() {
            Self::dynkin(quiver)
        } else {
            Self::bounded(quiver, depth)
        }
    }

    pub fn dynkin(quiver: Arc<Quiver>) -> Result<Self, PoolError> {
        let reps = dynkin_indecomposables(&quiver).map_err(|_| PoolError::Unsupported(quiver.name().to_string()))?;
        Self::from_reps(quiver, PoolKind::Complete, reps)
    }

    pub fn bounded(quiver: Arc<Quiver>, depth: usize) -> Result<Self, PoolError> {
        let supported = quiver.kronecker_arrows().is_some() || (*quiver).clone().with_name("W4") == crate::quiver::presets::w4();
        if !supported {
            return Err(PoolError::Unsupported(quiver.name().to_string()));
        }
        if depth == 0 {
            return Err(PoolError::ZeroDepth);
        }
        let mut reps = Vec::new();
        for v in 0..quiver.n() {
            let mut p = Representation::projective(quiver.clone(), v);
            let mut i = Representation::injective(quiver.clone(), v);
            for _ in 0..depth {
                reps.push(p.clone());
                reps.push(i.clone());
                p = rep::tau_inverse(&p);
                i = rep::tau(&i);
            }
        }
        Self::from_reps(quiver, PoolKind::Bounded { depth }, reps)
    }

    fn from_reps(quiver: Arc<Quiver>, kind: PoolKind, reps: Vec<Representation>) -> Result<Self, PoolError> {
        let mut seen = BTreeSet::new();
        let reps: Vec<Representation> = reps.into_iter().filter(|r| seen.insert(r.dim_vector())).collect();
        let mods: Vec<IndecModule> = reps.into_par_iter().map(IndecModule::new).collect();
        let raw_hom = hom_ext_table(&mods, &mods, |x, y| x.presentation.hom_ext(&y.maps).0);
        let order = directed_order(&mods, &raw_hom)?;
        let modules: Vec<IndecModule> = order.iter().map(|&i| mods[i].clone()).collect();
        let hom: Vec<Vec<usize>> = order.iter().map(|&i| order.iter().map(|&j| raw_hom[i][j]).collect()).collect();
        let ext = hom_ext_table(&modules, &modules, |x, y| x.presentation.hom_ext(&y.maps).1);
        let by_dims: HashMap<DimVector, usize> = modules.iter().enumerate().map(|(i, m)| (m.dims.clone(), i)).collect();
        let taus: Vec<Representation> = modules.par_iter().map(|m| rep::tau(&m.rep)).collect();
        let tau_maps: Vec<PathMaps> = taus.iter().map(PathMaps::new).collect();
        let hom_tau: Vec<Vec<usize>> = modules
            .par_iter()
            .map(|x| tau_maps.iter().map(|tm| x.presentation.hom_ext(tm).0).collect())
            .collect();
        let tau: Vec<Option<usize>> =
            taus.iter().map(|t| if t.is_zero() { None } else { by_dims.get(&t.dim_vector()).copied() }).collect();
        let mut tau_inv = vec![None; modules.len()];
        for (i, t) in tau.iter().enumerate() {
            if let Some(j) = t {
                tau_inv[*j] = Some(i);
            }
        }
        let tau_dims = taus.iter().map(Representation::dim_vector).collect();
        Ok(IndecPool { quiver, kind, modules, by_dims, hom, ext, hom_tau, tau, tau_inv, tau_dims })
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn kind(&self) -> PoolKind {
        self.kind
    }

    pub fn is_complete(&self) -> bool {
        self.kind == PoolKind::Complete
    }

    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    pub fn modules(&self) -> &[IndecModule] {
        &self.modules
    }

    pub fn module(&self, i: usize) -> &IndecModule {
        &self.modules[i]
    }

    pub fn index_of(&self, dims: &DimVector) -> Option<usize> {
        self.by_dims.get(dims).copied()
    }

    pub fn hom(&self, i: usize, j: usize) -> usize {
        self.hom[i][j]
    }

    pub fn ext(&self, i: usize, j: usize) -> usize {
        self.ext[i][j]
    }

    /// `dim Hom(X_i, tau X_j)`, also when `tau X_j` lies outside the pool.
    pub fn hom_tau(&self, i: usize, j: usize) -> usize {
        self.hom_tau[i][j]
    }

    pub fn tau(&self, i: usize) -> Option<usize> {
        self.tau[i]
    }

    pub fn tau_inverse(&self, i: usize) -> Option<usize> {
        self.tau_inv[i]
    }

    /// Dimension vector of `tau X_i`, zero for projectives.
    pub fn tau_dims(&self, i: usize) -> &DimVector {
        &self.tau_dims[i]
    }

    pub fn projective(&self, v: usize) -> Option<usize> {
        self.modules.iter().position(|m| m.projective_at == Some(v))
    }

    pub fn injective(&self, v: usize) -> Option<usize> {
        self.modules.iter().position(|m| m.injective_at == Some(v))
    }

    /// Multiplicities of the pool modules as summands of `m`. The
    /// triangular Hom table gives a candidate by back-substitution, which
    /// is then checked against `dim m` and against `Hom(m, X_i)` for all
    /// `i`.
    pub fn decompose(&self, m: &Representation) -> Result<Vec<usize>, PoolError> {
        let fail = || PoolError::NotDecomposable(m.dim_vector());
        let mmaps = PathMaps::new(m);
        let h: Vec<i64> = self.modules.par_iter().map(|x| x.presentation.hom_ext(&mmaps).0 as i64).collect();
        let n = self.len();
        let mut mult = vec![0i64; n];
        for i in (0..n).rev() {
            let mut v = h[i];
            for j in i + 1..n {
                v -= mult[j] * self.hom[i][j] as i64;
            }
            if v < 0 {
                return Err(fail());
            }
            mult[i] = v;
        }
        let mut total = vec![0i64; self.quiver.n()];
        for (i, &k) in mult.iter().enumerate() {
            for (t, &d) in total.iter_mut().zip(&self.modules[i].dims.0) {
                *t += k * d as i64;
            }
        }
        if total != m.dim_vector().to_i64() {
            return Err(fail());
        }
        let pres = min_projective_presentation(m);
        for (i, x) in self.modules.iter().enumerate() {
            let expect: i64 = (0..n).map(|j| mult[j] * self.hom[j][i] as i64).sum();
            if pres.hom_ext(&x.maps).0 as i64 != expect {
                return Err(fail());
            }
        }
        Ok(mult.into_iter().map(|k| k as usize).collect())
    }

    /// Pool summary for serialization.
    pub fn to_json(&self) -> serde_json::Value {
        let modules: Vec<serde_json::Value> = self
            .modules
            .iter()
            .enumerate()
            .map(|(i, m)| {
                serde_json::json!({
                    "index": i,
                    "dims": m.dims,
                    "label": m.label,
                    "projective_at": m.projective_at.map(|v| self.quiver.vertex_id(v).to_string()),
                    "injective_at": m.injective_at.map(|v| self.quiver.vertex_id(v).to_string()),
                    "tau": self.tau[i],
                    "tau_inverse": self.tau_inv[i],
                })
            })
            .collect();
        serde_json::json!({
            "quiver": self.quiver.name(),
            "vertices": self.quiver.vertices(),
            "pool": self.kind,
            "modules": modules,
            "hom": self.hom,
            "ext": self.ext,
            "hom_tau": self.hom_tau,
        })
    }
}

impl fmt::Display for IndecPool {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.modules.iter().enumerate() {
            writeln!(f, "{i:>3} {} {}", m.dims, m.label)?;
        }
        Ok(())
    }
}

fn hom_ext_table<F>(xs: &[IndecModule], ys: &[IndecModule], f: F) -> Vec<Vec<usize>>
where
    F: Fn(&IndecModule, &IndecModule) -> usize + Sync,
{
    xs.par_iter().map(|x| ys.iter().map(|y| f(x, y)).collect()).collect()
}

/// Topological order of the relation `Hom(X, Y) != 0`, breaking ties by
/// total dimension and then dimension vector.
fn directed_order(mods: &[IndecModule], hom: &[Vec<usize>]) -> Result<Vec<usize>, PoolError> {
    let n = mods.len();
    let mut indeg = vec![0usize; n];
    for i in 0..n {
        for j in 0..n {
            if i != j && hom[i][j] > 0 {
                indeg[j] += 1;
            }
        }
    }
    let key = |i: usize| (mods[i].dims.total(), mods[i].dims.clone());
    let mut ready: BTreeSet<(usize, DimVector, usize)> =
        (0..n).filter(|&i| indeg[i] == 0).map(|i| (key(i).0, key(i).1, i)).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(first) = ready.iter().next().cloned() {
        ready.remove(&first);
        let i = first.2;
        order.push(i);
        for j in 0..n {
            if i != j && hom[i][j] > 0 {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    ready.insert((key(j).0, key(j).1, j));
                }
            }
        }
    }
    if order.len() == n { Ok(order) } else { Err(PoolError::NotDirected) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::presets;
    use crate::rep::direct_sum;

    #[test]
    fn kronecker_bounded_pool() {
        let q = Arc::new(presets::kronecker());
        let pool = IndecPool::bounded(q, 2).unwrap();
        let dims: BTreeSet<Vec<usize>> = pool.modules().iter().map(|m| m.dims.0.clone()).collect();
        let expected: BTreeSet<Vec<usize>> =
            [[1, 0], [2, 1], [3, 2], [4, 3], [0, 1], [1, 2], [2, 3], [3, 4]].iter().map(|v| v.to_vec()).collect();
        assert_eq!(dims, expected);
        let p2 = pool.index_of(&DimVector(vec![2, 1])).unwrap();
        assert_eq!(pool.module(p2).label, "2/11");
        assert_eq!(pool.module(pool.index_of(&DimVector(vec![3, 2])).unwrap()).label, "22/111");
        assert_eq!(pool.module(pool.index_of(&DimVector(vec![1, 2])).unwrap()).label, "22/1");
        assert_eq!(pool.module(pool.index_of(&DimVector(vec![2, 3])).unwrap()).label, "222/11");
        assert_eq!(pool.projective(1), Some(p2));
    }

    #[test]
    fn hom_table_is_unitriangular() {
        let q = Arc::new(presets::dynkin_d(4));
        let pool = IndecPool::dynkin(q).unwrap();
        assert_eq!(pool.len(), 12);
        for i in 0..pool.len() {
            assert_eq!(pool.hom(i, i), 1);
            assert_eq!(pool.ext(i, i), 0);
            for j in 0..i {
                assert_eq!(pool.hom(i, j), 0);
            }
        }
    }

    #[test]
    fn decompose_direct_sum() {
        let q = Arc::new(presets::dynkin_a(3));
        let pool = IndecPool::dynkin(q).unwrap();
        let a = &pool.module(1).rep;
        let b = &pool.module(4).rep;
        let m = direct_sum(&[a, b, b]).module;
        let mult = pool.decompose(&m).unwrap();
        let mut expect = vec![0; pool.len()];
        expect[1] = 1;
        expect[4] = 2;
        assert_eq!(mult, expect);
    }
}
