//! Support tau-tilting pairs over a pool of indecomposables: enumeration,
//! mutation, Bongartz completion and saturation.

mod approx;
mod bongartz;
mod enumerate;
mod mutation;
mod saturation;

use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use serde::Serialize;
use thiserror::Error;

use crate::indec::{IndecPool, PoolError};
use crate::quiver::{DimVector, Quiver};
use crate::rep::{direct_sum, Representation};

pub use approx::{
    certify_left_minimal, certify_right_minimal, is_left_approximation, is_right_approximation, minimal_left_approximation,
    minimal_right_approximation, Approximation,
};
pub use bongartz::{Complements, ExchangeSequence};
pub use enumerate::Enumeration;
pub use mutation::{Direction, Edge, ExchangeSequenceRecord, MutationQuiver, Neighbor};
pub use saturation::{ComponentReport, SaturationEntry, Verdict};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error(transparent)]
    Pool(#[from] PoolError),
    #[error("unknown module index {0}")]
    UnknownModule(usize),
    #[error("unknown vertex index {0}")]
    UnknownVertex(usize),
    #[error("({0}) is not a support tau-tilting pair")]
    NotSupportTauTilting(String),
    #[error("({0}) is not tau-rigid")]
    NotTauRigid(String),
    #[error("summand {0} is not part of the pair")]
    NotInPair(String),
    #[error("the other completion lies outside the explored pool")]
    OutsidePool,
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

/// One element of a pair: an indecomposable of the pool or a support
/// projective, named by its vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "kind", content = "index", rename_all = "lowercase")]
pub enum Summand {
    Module(usize),
    Projective(usize),
}

/// A support tau-tilting pair `(M, P)`: sorted pool indices and sorted
/// vertex indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Pair {
    pub modules: Vec<usize>,
    pub projectives: Vec<usize>,
}

impl Pair {
    pub fn new(mut modules: Vec<usize>, mut projectives: Vec<usize>) -> Self {
        modules.sort_unstable();
        modules.dedup();
        projectives.sort_unstable();
        projectives.dedup();
        Pair { modules, projectives }
    }

    pub fn len(&self) -> usize {
        self.modules.len() + self.projectives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn summands(&self) -> Vec<Summand> {
        self.modules
            .iter()
            .map(|&m| Summand::Module(m))
            .chain(self.projectives.iter().map(|&v| Summand::Projective(v)))
            .collect()
    }

    pub fn contains(&self, s: Summand) -> bool {
        match s {
            Summand::Module(m) => self.modules.binary_search(&m).is_ok(),
            Summand::Projective(v) => self.projectives.binary_search(&v).is_ok(),
        }
    }

    pub fn without(&self, s: Summand) -> Pair {
        let mut p = self.clone();
        match s {
            Summand::Module(m) => p.modules.retain(|&x| x != m),
            Summand::Projective(v) => p.projectives.retain(|&x| x != v),
        }
        p
    }

    pub fn with(&self, s: Summand) -> Pair {
        let mut modules = self.modules.clone();
        let mut projectives = self.projectives.clone();
        match s {
            Summand::Module(m) => modules.push(m),
            Summand::Projective(v) => projectives.push(v),
        }
        Pair::new(modules, projectives)
    }
}

/// Engine over one pool. The compatibility relation and the torsion
/// generators are precomputed as bitsets.
#[derive(Debug)]
pub struct Engine {
    pool: IndecPool,
    /// Pool modules with `Hom(X, tau X) = 0`.
    rigid: FixedBitSet,
    /// `perp_tau[y]`: modules `X` with `Hom(X, tau Y) = 0`.
    perp_tau: Vec<FixedBitSet>,
    /// `vanish[v]`: modules `X` with `X_v = 0`.
    vanish: Vec<FixedBitSet>,
    regular: Representation,
    workers: Option<usize>,
}

impl Engine {
    pub fn new(pool: IndecPool) -> Self {
        let n = pool.len();
        let nv = pool.quiver().n();
        let mut rigid = FixedBitSet::with_capacity(n);
        let mut perp_tau = vec![FixedBitSet::with_capacity(n); n];
        for x in 0..n {
            if pool.hom_tau(x, x) == 0 {
                rigid.insert(x);
            }
            for (y, set) in perp_tau.iter_mut().enumerate() {
                if pool.hom_tau(x, y) == 0 {
                    set.insert(x);
                }
            }
        }
        let mut vanish = vec![FixedBitSet::with_capacity(n); nv];
        for (x, m) in pool.modules().iter().enumerate() {
            for (v, set) in vanish.iter_mut().enumerate() {
                if m.dims[v] == 0 {
                    set.insert(x);
                }
            }
        }
        let regular = Representation::regular(pool.quiver().clone());
        Engine { pool, rigid, perp_tau, vanish, regular, workers: None }
    }

    /// Builds the pool for a quiver (complete for Dynkin, bounded
    /// otherwise) and the engine on top.
    pub fn for_quiver(quiver: Arc<Quiver>, depth: usize) -> Result<Self, EngineError> {
        Ok(Engine::new(IndecPool::new(quiver, depth)?))
    }

    /// Limits parallel sections to a fixed number of threads.
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = Some(workers.max(1));
        self
    }

    pub(crate) fn run<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        match self.workers {
            Some(w) => rayon::ThreadPoolBuilder::new().num_threads(w).build().expect("thread pool").install(f),
            None => f(),
        }
    }

    pub fn pool(&self) -> &IndecPool {
        &self.pool
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        self.pool.quiver()
    }

    /// Number of vertices.
    pub fn rank(&self) -> usize {
        self.quiver().n()
    }

    pub fn is_exhaustive(&self) -> bool {
        self.pool.is_complete()
    }

    pub fn is_rigid(&self, x: usize) -> bool {
        self.rigid.contains(x)
    }

    /// `(A, 0)`: the projectives of the pool.
    pub fn regular_pair(&self) -> Result<Pair, EngineError> {
        let ps = (0..self.rank())
            .map(|v| self.pool.projective(v).ok_or(EngineError::OutsidePool))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Pair::new(ps, Vec::new()))
    }

    /// `(DA, 0)`.
    pub fn coregular_pair(&self) -> Result<Pair, EngineError> {
        let is = (0..self.rank())
            .map(|v| self.pool.injective(v).ok_or(EngineError::OutsidePool))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Pair::new(is, Vec::new()))
    }

    /// `(0, A)`.
    pub fn zero_pair(&self) -> Pair {
        Pair::new(Vec::new(), (0..self.rank()).collect())
    }

    fn check_ids(&self, modules: &[usize], projectives: &[usize]) -> Result<(), EngineError> {
        if let Some(&m) = modules.iter().find(|&&m| m >= self.pool.len()) {
            return Err(EngineError::UnknownModule(m));
        }
        if let Some(&v) = projectives.iter().find(|&&v| v >= self.rank()) {
            return Err(EngineError::UnknownVertex(v));
        }
        Ok(())
    }

    /// `Hom(X, tau Y) = 0` for all summands and `X_v = 0` for all support
    /// projectives `v`.
    pub fn is_tau_rigid_pair(&self, modules: &[usize], projectives: &[usize]) -> Result<bool, EngineError> {
        self.check_ids(modules, projectives)?;
        let rigid = modules.iter().all(|&x| modules.iter().all(|&y| self.pool.hom_tau(x, y) == 0));
        let support = projectives.iter().all(|&v| modules.iter().all(|&x| self.pool.module(x).dims[v] == 0));
        Ok(rigid && support)
    }

    pub fn is_support_tau_tilting(&self, pair: &Pair) -> Result<bool, EngineError> {
        Ok(self.is_tau_rigid_pair(&pair.modules, &pair.projectives)? && pair.len() == self.rank())
    }

    /// Whether two elements can sit in a common tau-rigid pair.
    pub fn compatible(&self, a: Summand, b: Summand) -> bool {
        match (a, b) {
            (Summand::Module(x), Summand::Module(y)) => {
                self.rigid.contains(x) && self.rigid.contains(y) && self.pool.hom_tau(x, y) == 0 && self.pool.hom_tau(y, x) == 0
            }
            (Summand::Module(x), Summand::Projective(v)) | (Summand::Projective(v), Summand::Module(x)) => {
                self.rigid.contains(x) && self.pool.module(x).dims[v] == 0
            }
            (Summand::Projective(_), Summand::Projective(_)) => true,
        }
    }

    /// `Fac M` intersected with the pool, as
    /// `perp(tau M) cap {X : X_v = 0 for v in P}`.
    pub fn torsion_set(&self, pair: &Pair) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.pool.len());
        set.insert_range(..);
        for &y in &pair.modules {
            set.intersect_with(&self.perp_tau[y]);
        }
        for &v in &pair.projectives {
            set.intersect_with(&self.vanish[v]);
        }
        set
    }

    /// `perp(tau M)` without the support condition.
    pub fn perp_tau(&self, modules: &[usize]) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.pool.len());
        set.insert_range(..);
        for &y in modules {
            set.intersect_with(&self.perp_tau[y]);
        }
        set
    }

    pub fn module_rep(&self, x: usize) -> &Representation {
        &self.pool.module(x).rep
    }

    /// Direct sum of pool modules (the zero module for an empty list).
    pub fn sum_rep(&self, modules: &[usize]) -> Representation {
        if modules.is_empty() {
            return Representation::zero(self.quiver().clone());
        }
        direct_sum(&modules.iter().map(|&m| self.module_rep(m)).collect::<Vec<_>>()).module
    }

    pub fn regular_module(&self) -> &Representation {
        &self.regular
    }

    /// Total dimension vector of the module part.
    pub fn pair_dims(&self, pair: &Pair) -> DimVector {
        pair.modules.iter().fold(DimVector::zero(self.rank()), |acc, &m| acc.add(&self.pool.module(m).dims))
    }

    /// Faithfulness of `M` from the path maps of its summands: for each
    /// pair of vertices the path operators must be independent.
    pub fn is_faithful_set(&self, modules: &[usize]) -> bool {
        let q = self.quiver();
        for s in 0..q.n() {
            for t in 0..q.n() {
                let paths = q.paths_between(s, t);
                if paths.is_empty() {
                    continue;
                }
                let rows: Vec<Vec<crate::linalg::Rational>> = paths
                    .iter()
                    .map(|&p| {
                        modules
                            .iter()
                            .flat_map(|&m| self.pool.module(m).path_maps().get(p).entries().iter().cloned())
                            .collect()
                    })
                    .collect();
                if rows[0].len() < paths.len() {
                    return false;
                }
                if crate::linalg::Matrix::from_rows(rows).rank() < paths.len() {
                    return false;
                }
            }
        }
        true
    }

    /// Tilting in the hereditary sense: no support projectives, `n`
    /// summands and a faithful module.
    pub fn is_tilting(&self, pair: &Pair) -> bool {
        pair.projectives.is_empty() && pair.modules.len() == self.rank() && self.is_faithful_set(&pair.modules)
    }

    pub fn summand_label(&self, s: Summand) -> String {
        match s {
            Summand::Module(m) => self.pool.module(m).dims.to_string(),
            Summand::Projective(v) => format!("P{}", self.quiver().vertex_id(v)),
        }
    }

    pub fn pair_label(&self, pair: &Pair) -> String {
        let mut parts: Vec<String> = pair.modules.iter().map(|&m| self.pool.module(m).dims.to_string()).collect();
        if parts.is_empty() {
            parts.push("0".into());
        }
        let mut s = parts.join("+");
        if !pair.projectives.is_empty() {
            let ids: Vec<&str> = pair.projectives.iter().map(|&v| self.quiver().vertex_id(v)).collect();
            s.push_str(&format!(" | P{{{}}}", ids.join(",")));
        }
        s
    }

    /// Sort key: sorted summand dimension vectors, then support projectives.
    pub fn canonical_key(&self, pair: &Pair) -> (Vec<DimVector>, Vec<usize>) {
        let mut dims: Vec<DimVector> = pair.modules.iter().map(|&m| self.pool.module(m).dims.clone()).collect();
        dims.sort();
        (dims, pair.projectives.clone())
    }

    /// Looks up a pool module by dimension vector.
    pub fn module_by_dims(&self, dims: &DimVector) -> Option<usize> {
        self.pool.index_of(dims)
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M={:?} P={:?}", self.modules, self.projectives)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::presets;

    fn a2() -> Engine {
        Engine::for_quiver(Arc::new(presets::dynkin_a(2)), 1).unwrap()
    }

    #[test]
    fn rigid_pair_examples() {
        let e = a2();
        let a = e.regular_pair().unwrap();
        assert!(e.is_support_tau_tilting(&a).unwrap());
        assert!(e.is_support_tau_tilting(&e.zero_pair()).unwrap());
        let s1 = e.module_by_dims(&DimVector(vec![1, 0])).unwrap();
        let s2 = e.module_by_dims(&DimVector(vec![0, 1])).unwrap();
        assert!(!e.is_tau_rigid_pair(&[s1, s2], &[]).unwrap());
        assert!(e.is_tau_rigid_pair(&[99], &[]).is_err());
    }

    #[test]
    fn torsion_sets_agree_with_trace_test() {
        let e = Engine::for_quiver(Arc::new(presets::dynkin_a(3)), 1).unwrap();
        for pair in e.enumerate().pairs {
            let set = e.torsion_set(&pair);
            let reps: Vec<&Representation> = pair.modules.iter().map(|&m| e.module_rep(m)).collect();
            for x in 0..e.pool().len() {
                let in_fac = !reps.is_empty() && crate::rep::fac_contains_sum(&reps, e.module_rep(x));
                assert_eq!(set.contains(x), in_fac, "{pair} {x}");
            }
        }
    }
}
