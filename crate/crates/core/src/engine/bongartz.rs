use serde::Serialize;

use super::approx::{
    certify_left_minimal, certify_right_minimal, is_left_approximation, is_right_approximation,
    minimal_left_approximation, Approximation,
};
use super::{Engine, EngineError, Pair};
use crate::rep::{cokernel, direct_sum, hom_basis, universal_extension, Representation, ShortExactSequence};

/// Complements of an almost complete tilting module `M`.
#[derive(Clone, Debug, Serialize)]
pub struct Complements {
    pub almost: Vec<usize>,
    pub complements: Vec<usize>,
    pub faithful: bool,
    /// The complement lying in the Bongartz completion.
    pub bongartz: Option<usize>,
}

/// `0 -> X --f--> M' --g--> Y -> 0` between the two complements of `M`.
#[derive(Clone, Debug)]
pub struct ExchangeSequence {
    pub x: usize,
    pub y: usize,
    pub sequence: ShortExactSequence,
    pub left: Approximation,
    pub right: Approximation,
    pub left_minimal: bool,
    pub right_minimal: bool,
    pub nonsplit: bool,
    /// `M'` shares no summand with `X` or `Y`.
    pub disjoint: bool,
}

impl ExchangeSequence {
    pub fn middle(&self) -> Vec<(usize, usize)> {
        self.left.multiplicities()
    }

    pub fn is_valid(&self) -> bool {
        self.left_minimal && self.right_minimal && self.nonsplit && self.disjoint && self.sequence.check().is_ok()
    }
}

impl Engine {
    fn require_rigid(&self, modules: &[usize]) -> Result<(), EngineError> {
        if !self.is_tau_rigid_pair(modules, &[])? {
            let label = self.pair_label(&Pair::new(modules.to_vec(), Vec::new()));
            return Err(EngineError::NotTauRigid(label));
        }
        Ok(())
    }

    /// Ext-projectives of a pool subset: `X` with `Ext^1(X, Z) = 0` for
    /// every `Z` in the subset.
    fn ext_projectives(&self, set: &fixedbitset::FixedBitSet) -> Vec<usize> {
        set.ones().filter(|&x| set.ones().all(|z| self.pool().ext(x, z) == 0)).collect()
    }

    /// Ext-projectives of `Fac M` for a support tau-tilting pair; they
    /// are the summands of `M` again.
    pub fn ext_projectives_of_fac(&self, pair: &Pair) -> Result<Vec<usize>, EngineError> {
        if !self.is_exhaustive() {
            return Err(EngineError::OutsidePool);
        }
        Ok(self.ext_projectives(&self.torsion_set(pair)))
    }

    /// Bongartz completion as the Ext-projectives of `perp(tau M)`.
    /// Needs a complete pool.
    pub fn bongartz_completion_torsion(&self, modules: &[usize]) -> Result<Pair, EngineError> {
        self.require_rigid(modules)?;
        if !self.is_exhaustive() {
            return Err(EngineError::OutsidePool);
        }
        let pair = Pair::new(self.ext_projectives(&self.perp_tau(modules)), Vec::new());
        if !self.is_support_tau_tilting(&pair)? || modules.iter().any(|m| !pair.modules.contains(m)) {
            return Err(EngineError::Inconsistent(format!("Ext-projectives {} do not complete", self.pair_label(&pair))));
        }
        Ok(pair)
    }

    /// Bongartz completion through the universal extension
    /// `0 -> A -> E -> M^s -> 0`: the result is `M + E`. Since
    /// `Ext^1(M, A)` splits over `A = P_1 + ... + P_n`, so does `E`, and it
    /// is built one projective at a time.
    pub fn bongartz_completion_extension(&self, modules: &[usize]) -> Result<Pair, EngineError> {
        self.require_rigid(modules)?;
        if modules.is_empty() {
            return self.regular_pair();
        }
        let m = self.sum_rep(modules);
        let mut all = modules.to_vec();
        for v in 0..self.rank() {
            let p = Representation::projective(self.quiver().clone(), v);
            let ue = universal_extension(&m, &p);
            let mult = self.pool().decompose(&ue.sequence.e).map_err(|_| EngineError::OutsidePool)?;
            all.extend(mult.iter().enumerate().filter(|(_, &k)| k > 0).map(|(i, _)| i));
        }
        let pair = Pair::new(all, Vec::new());
        if !self.is_support_tau_tilting(&pair)? {
            return Err(EngineError::Inconsistent(format!("{} is not tilting", self.pair_label(&pair))));
        }
        Ok(pair)
    }

    /// The universal extension `0 -> A -> E -> M^s -> 0` in one piece.
    pub fn universal_extension_of_regular(&self, modules: &[usize]) -> crate::rep::UniversalExtension {
        universal_extension(&self.sum_rep(modules), self.regular_module())
    }

    /// All indecomposables `X` of the pool with `M + X` tilting, for `M`
    /// with `n - 1` rigid summands.
    pub fn complements_of_almost_complete(&self, modules: &[usize]) -> Result<Complements, EngineError> {
        self.require_rigid(modules)?;
        let almost = Pair::new(modules.to_vec(), Vec::new());
        if almost.len() + 1 != self.rank() {
            return Err(EngineError::Inconsistent(format!(
                "{} has {} summands, expected {}",
                self.pair_label(&almost),
                almost.len(),
                self.rank() - 1
            )));
        }
        let complements: Vec<usize> = self
            .completions_of(&almost)
            .into_iter()
            .filter_map(|s| match s {
                super::Summand::Module(x) => Some(x),
                super::Summand::Projective(_) => None,
            })
            .filter(|&x| self.is_tilting(&almost.with(super::Summand::Module(x))))
            .collect();
        let bongartz = match self.bongartz_completion_extension(&almost.modules) {
            Ok(b) => b.modules.iter().copied().find(|x| !almost.modules.contains(x)),
            Err(EngineError::OutsidePool) => None,
            Err(e) => return Err(e),
        };
        Ok(Complements { faithful: self.is_faithful_set(&almost.modules), almost: almost.modules, complements, bongartz })
    }

    /// Exchange sequence between the two complements `a`, `b` of `M`,
    /// oriented so that `Ext^1(Y, X) != 0`. `f` is a minimal left
    /// add(M)-approximation of `X` and `g` its cokernel, identified with `Y`.
    pub fn exchange_sequence(&self, a: usize, b: usize, modules: &[usize]) -> Result<ExchangeSequence, EngineError> {
        let (x, y) = match (self.pool().ext(b, a), self.pool().ext(a, b)) {
            (e, _) if e > 0 => (a, b),
            (_, e) if e > 0 => (b, a),
            _ => return Err(EngineError::Inconsistent("complements have no extension".into())),
        };
        let xrep = self.module_rep(x);
        let yrep = self.module_rep(y);
        let left = minimal_left_approximation(self, xrep, modules);
        let (c, proj) = cokernel(&left.map, &left.middle);
        if c.dim_vector() != yrep.dim_vector() {
            return Err(EngineError::Inconsistent(format!("cokernel {} is not {}", c.dim_vector(), yrep.dim_vector())));
        }
        let iso = hom_basis(&c, yrep)
            .into_iter()
            .find(|h| h.is_isomorphism())
            .ok_or_else(|| EngineError::Inconsistent("cokernel is not isomorphic to the complement".into()))?;
        let g = proj.then(&iso);
        let idx: Vec<usize> = left.components.iter().map(|c| c.0).collect();
        let parts: Vec<&crate::rep::Representation> = idx.iter().map(|&j| self.module_rep(j)).collect();
        let right_components = if parts.is_empty() {
            Vec::new()
        } else {
            let sum = direct_sum(&parts);
            idx.iter().zip(&sum.inclusions).map(|(&j, inc)| (j, inc.then(&g))).collect()
        };
        let right = Approximation { components: right_components, middle: left.middle.clone(), map: g.clone() };
        let sequence = ShortExactSequence { x: xrep.clone(), e: left.middle.clone(), y: yrep.clone(), f: left.map.clone(), g };
        let left_minimal = certify_left_minimal(self, &left) && is_left_approximation(self, xrep, &left, modules);
        let right_minimal = certify_right_minimal(self, &right) && is_right_approximation(self, yrep, &right, modules);
        let nonsplit = sequence.check().is_ok() && !sequence.splits();
        let disjoint = idx.iter().all(|&j| j != x && j != y);
        Ok(ExchangeSequence { x, y, sequence, left, right, left_minimal, right_minimal, nonsplit, disjoint })
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::quiver::{presets, DimVector};

    fn idx(e: &Engine, d: &[usize]) -> usize {
        e.module_by_dims(&DimVector(d.to_vec())).unwrap()
    }

    #[test]
    fn a2_complements() {
        let e = Engine::for_quiver(Arc::new(presets::dynkin_a(2)), 1).unwrap();
        let (p1, p2, i2) = (idx(&e, &[1, 0]), idx(&e, &[1, 1]), idx(&e, &[0, 1]));
        let c = e.complements_of_almost_complete(&[p2]).unwrap();
        assert_eq!(c.complements.len(), 2);
        assert!(c.faithful);
        assert_eq!(c.bongartz, Some(p1));
        let c = e.complements_of_almost_complete(&[p1]).unwrap();
        assert_eq!(c.complements, vec![p2]);
        assert!(!c.faithful);
        let s = e.exchange_sequence(i2, p1, &[p2]).unwrap();
        assert_eq!((s.x, s.y), (p1, i2));
        assert_eq!(s.middle(), vec![(p2, 1)]);
        assert!(s.is_valid());
    }

    #[test]
    fn s2_bongartz_contains_p2() {
        let e = Engine::for_quiver(Arc::new(presets::dynkin_a(2)), 1).unwrap();
        let s2 = idx(&e, &[0, 1]);
        let a = e.bongartz_completion_extension(&[s2]).unwrap();
        let b = e.bongartz_completion_torsion(&[s2]).unwrap();
        assert_eq!(a, b);
        assert!(a.modules.contains(&idx(&e, &[1, 1])));
    }

    #[test]
    fn kronecker_exchange_sequence() {
        let e = Engine::for_quiver(Arc::new(presets::kronecker()), 3).unwrap();
        let (p1, p2, t) = (idx(&e, &[1, 0]), idx(&e, &[2, 1]), idx(&e, &[3, 2]));
        let s = e.exchange_sequence(p1, t, &[p2]).unwrap();
        assert_eq!(s.middle(), vec![(p2, 2)]);
        assert!(s.is_valid());
        assert_eq!(e.bongartz_completion_extension(&[p2]).unwrap(), Pair::new(vec![p1, p2], vec![]));
    }
}
