//! Quiver representations and their homological toolkit.
//!
//! Convention: an arrow `a: i -> j` acts by a matrix of shape
//! `dim M_j x dim M_i`. The indecomposable projective `P_i` has the paths
//! starting at `i` as basis and the injective `I_i` the duals of paths
//! ending at `i`, so `Hom(P_i, M) = M_i` and `Hom(M, I_i) = D M_i`. With
//! this convention the Coxeter matrix satisfies `Phi dim P_i = -dim I_i`.

mod construct;
mod hom;
mod presentation;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::linalg::{Matrix, Rational};
use crate::quiver::{DimVector, Quiver};

pub use construct::{
    cokernel, direct_sum, kernel, pushout, universal_extension, DirectSum, ShortExactSequence, UniversalExtension,
};
pub use hom::{fac_contains, fac_contains_sum, hom_basis, hom_dim, is_faithful, is_sincere, loewy_layers, radical_top, trace_dims};
pub use presentation::{
    ext1_dim, ext1_dim_euler, hom_ext_dims, min_projective_presentation, tau, tau_inverse, PathMaps, Presentation,
    Relation,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("expected {expected} matrices, got {got}")]
    WrongCount { expected: usize, got: usize },
    #[error("arrow {arrow} has shape {got:?}, expected {expected:?}")]
    WrongShape { arrow: String, expected: (usize, usize), got: (usize, usize) },
    #[error("representations live over different quivers")]
    QuiverMismatch,
    #[error("blocks do not commute with arrow `{0}`")]
    NotAMorphism(String),
}

/// A finite-dimensional representation with exact rational matrices.
#[derive(Clone, PartialEq, Eq)]
pub struct Representation {
    quiver: Arc<Quiver>,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Representation")
            .field("quiver", &self.quiver.name())
            .field("dims", &self.dims)
            .field("maps", &self.maps)
            .finish()
    }
}

impl Representation {
    pub fn new(quiver: Arc<Quiver>, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self, RepError> {
        if dims.len() != quiver.n() {
            return Err(RepError::WrongCount { expected: quiver.n(), got: dims.len() });
        }
        if maps.len() != quiver.arrows().len() {
            return Err(RepError::WrongCount { expected: quiver.arrows().len(), got: maps.len() });
        }
        for (a, m) in quiver.arrows().iter().zip(&maps) {
            let expected = (dims[a.target], dims[a.source]);
            if m.shape() != expected {
                return Err(RepError::WrongShape { arrow: a.label.clone(), expected, got: m.shape() });
            }
        }
        Ok(Representation { quiver, dims, maps })
    }

    /// Builds from integer matrices, each given as rows.
    pub fn from_int_maps(quiver: Arc<Quiver>, dims: Vec<usize>, maps: &[Vec<Vec<i64>>]) -> Result<Self, RepError> {
        let ms = quiver
            .arrows()
            .iter()
            .zip(maps)
            .map(|(a, rows)| {
                let (r, c) = (dims[a.target], dims[a.source]);
                let flat: Vec<i64> = rows.iter().flatten().copied().collect();
                if flat.len() != r * c {
                    return Err(RepError::WrongShape { arrow: a.label.clone(), expected: (r, c), got: (rows.len(), rows.first().map_or(0, Vec::len)) });
                }
                Ok(Matrix::from_ints(r, c, &flat))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Representation::new(quiver, dims, ms)
    }

    pub fn zero(quiver: Arc<Quiver>) -> Self {
        let n = quiver.n();
        let maps = quiver.arrows().iter().map(|_| Matrix::zeros(0, 0)).collect();
        Representation { quiver, dims: vec![0; n], maps }
    }

    pub fn simple(quiver: Arc<Quiver>, v: usize) -> Self {
        let mut dims = vec![0; quiver.n()];
        dims[v] = 1;
        let maps = quiver.arrows().iter().map(|a| Matrix::zeros(dims[a.target], dims[a.source])).collect();
        Representation { quiver, dims, maps }
    }

    /// `P_v`: basis of the space at `t` is the paths `v -> t`; arrows
    /// append themselves to a path.
    pub fn projective(quiver: Arc<Quiver>, v: usize) -> Self {
        let n = quiver.n();
        let dims: Vec<usize> = (0..n).map(|t| quiver.paths_between(v, t).len()).collect();
        let maps = quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let mut m = Matrix::zeros(dims[a.target], dims[a.source]);
                let arrow_path = single_arrow_path(&quiver, k);
                for (c, &p) in quiver.paths_between(v, a.source).iter().enumerate() {
                    let ext = quiver.concat(p, arrow_path).expect("path extends by an outgoing arrow");
                    let r = quiver.paths_between(v, a.target).iter().position(|&x| x == ext).expect("listed");
                    m.set(r, c, Rational::one());
                }
                m
            })
            .collect();
        Representation { quiver, dims, maps }
    }

    /// `I_v`: basis at `t` is the duals of paths `t -> v`; an arrow `a`
    /// sends the dual of `a.r` to the dual of `r` and kills the rest.
    pub fn injective(quiver: Arc<Quiver>, v: usize) -> Self {
        let n = quiver.n();
        let dims: Vec<usize> = (0..n).map(|t| quiver.paths_between(t, v).len()).collect();
        let maps = quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let mut m = Matrix::zeros(dims[a.target], dims[a.source]);
                let arrow_path = single_arrow_path(&quiver, k);
                for (c, &q) in quiver.paths_between(a.source, v).iter().enumerate() {
                    if let Some(r) = quiver.strip_prefix(q, arrow_path) {
                        let row = quiver.paths_between(a.target, v).iter().position(|&x| x == r).expect("listed");
                        m.set(row, c, Rational::one());
                    }
                }
                m
            })
            .collect();
        Representation { quiver, dims, maps }
    }

    /// The regular module `A = P_1 + ... + P_n`.
    pub fn regular(quiver: Arc<Quiver>) -> Self {
        let ps: Vec<Representation> = (0..quiver.n()).map(|v| Representation::projective(quiver.clone(), v)).collect();
        direct_sum(&ps.iter().collect::<Vec<_>>()).module
    }

    /// `DA = I_1 + ... + I_n`.
    pub fn coregular(quiver: Arc<Quiver>) -> Self {
        let is: Vec<Representation> = (0..quiver.n()).map(|v| Representation::injective(quiver.clone(), v)).collect();
        direct_sum(&is.iter().collect::<Vec<_>>()).module
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn dim_vector(&self) -> DimVector {
        DimVector(self.dims.clone())
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    /// The linear map of a path (identity for trivial paths).
    pub fn path_map(&self, path: usize) -> Matrix {
        let p = self.quiver.path(path);
        let mut m = Matrix::identity(self.dims[p.source]);
        for &a in &p.arrows {
            m = self.maps[a].mul(&m);
        }
        m
    }

    /// The dual representation over `target`, which must be the opposite
    /// quiver (same arrow order, reversed directions).
    pub fn dual_over(&self, target: Arc<Quiver>) -> Result<Self, RepError> {
        let matches = target.n() == self.quiver.n()
            && target.arrows().len() == self.quiver.arrows().len()
            && target
                .arrows()
                .iter()
                .zip(self.quiver.arrows())
                .all(|(t, s)| t.source == s.target && t.target == s.source);
        if !matches {
            return Err(RepError::QuiverMismatch);
        }
        let maps = self.maps.iter().map(Matrix::transpose).collect();
        Representation::new(target, self.dims.clone(), maps)
    }

    /// `D M` over the opposite quiver.
    pub fn dual(&self) -> Self {
        self.dual_over(Arc::new(self.quiver.opposite())).expect("opposite quiver matches")
    }

    pub fn same_quiver(&self, other: &Representation) -> bool {
        Arc::ptr_eq(&self.quiver, &other.quiver) || *self.quiver == *other.quiver
    }

    /// Re-attaches to a structurally equal quiver.
    pub fn rebase(self, quiver: Arc<Quiver>) -> Result<Self, RepError> {
        if quiver.n() != self.quiver.n()
            || quiver.arrows().iter().zip(self.quiver.arrows()).any(|(a, b)| a.source != b.source || a.target != b.target)
        {
            return Err(RepError::QuiverMismatch);
        }
        Representation::new(quiver, self.dims, self.maps)
    }
}

pub(crate) fn single_arrow_path(q: &Quiver, arrow: usize) -> usize {
    let a = &q.arrows()[arrow];
    *q.paths_between(a.source, a.target)
        .iter()
        .find(|&&p| q.path(p).arrows == [arrow])
        .expect("every arrow is a path")
}

/// A morphism given by one block per vertex, block `v` of shape
/// `dim N_v x dim M_v`. Source and target are tracked by the caller.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub blocks: Vec<Matrix>,
}

impl Morphism {
    pub fn zero(source: &Representation, target: &Representation) -> Self {
        Morphism { blocks: (0..source.dims.len()).map(|v| Matrix::zeros(target.dims[v], source.dims[v])).collect() }
    }

    pub fn identity(m: &Representation) -> Self {
        Morphism { blocks: m.dims.iter().map(|&d| Matrix::identity(d)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    /// `after . self`.
    pub fn then(&self, after: &Morphism) -> Morphism {
        Morphism { blocks: self.blocks.iter().zip(&after.blocks).map(|(f, g)| g.mul(f)).collect() }
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        Morphism { blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn scale(&self, s: &Rational) -> Morphism {
        Morphism { blocks: self.blocks.iter().map(|b| b.scale(s)).collect() }
    }

    /// Concatenation of all block entries, row-major per vertex.
    pub fn flatten(&self) -> Vec<Rational> {
        self.blocks.iter().flat_map(|b| b.entries().iter().cloned()).collect()
    }

    /// Checks shapes and the commuting-square condition
    /// `N_a f_i = f_j M_a` for every arrow `a: i -> j`.
    pub fn check(&self, source: &Representation, target: &Representation) -> Result<(), RepError> {
        if !source.same_quiver(target) {
            return Err(RepError::QuiverMismatch);
        }
        let q = source.quiver();
        if self.blocks.len() != q.n() {
            return Err(RepError::WrongCount { expected: q.n(), got: self.blocks.len() });
        }
        for (v, b) in self.blocks.iter().enumerate() {
            if b.shape() != (target.dims[v], source.dims[v]) {
                return Err(RepError::WrongShape {
                    arrow: format!("vertex {}", q.vertex_id(v)),
                    expected: (target.dims[v], source.dims[v]),
                    got: b.shape(),
                });
            }
        }
        for (k, a) in q.arrows().iter().enumerate() {
            let lhs = target.maps[k].mul(&self.blocks[a.source]);
            let rhs = self.blocks[a.target].mul(&source.maps[k]);
            if lhs != rhs {
                return Err(RepError::NotAMorphism(a.label.clone()));
            }
        }
        Ok(())
    }

    pub fn is_injective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.rows())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.blocks.iter().all(|b| b.rows() == b.cols() && b.rank() == b.rows())
    }

    pub fn rank_vector(&self) -> Vec<usize> {
        self.blocks.iter().map(Matrix::rank).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::presets;

    #[test]
    fn projective_and_injective_dims() {
        let q = Arc::new(presets::w4());
        for v in 0..4 {
            let p = Representation::projective(q.clone(), v);
            assert_eq!(p.dim_vector(), q.projective_dim(v));
            let i = Representation::injective(q.clone(), v);
            assert_eq!(i.dim_vector(), q.injective_dim(v));
        }
        assert_eq!(Representation::projective(q.clone(), 2).dims(), &[2, 1, 1, 1]);
    }

    #[test]
    fn shape_validation() {
        let q = Arc::new(presets::dynkin_a(2));
        let bad = Representation::new(q.clone(), vec![1, 1], vec![Matrix::zeros(2, 1)]);
        assert!(matches!(bad, Err(RepError::WrongShape { .. })));
        let bad = Representation::new(q.clone(), vec![1], vec![]);
        assert!(matches!(bad, Err(RepError::WrongCount { .. })));
        assert!(Representation::zero(q).is_zero());
    }

    #[test]
    fn identity_is_a_morphism() {
        let q = Arc::new(presets::dynkin_d(4));
        let p = Representation::projective(q, 3);
        assert!(Morphism::identity(&p).check(&p, &p).is_ok());
    }

    #[test]
    fn dual_twice_is_identity() {
        let q = Arc::new(presets::kronecker());
        let p = Representation::projective(q.clone(), 1);
        let back = p.dual().dual_over(q).unwrap();
        assert_eq!(back, p);
    }
}
