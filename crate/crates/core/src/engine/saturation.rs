use serde::Serialize;

use super::mutation::{Direction, MutationQuiver, Neighbor};
use super::{Engine, EngineError};
use crate::quiver::DimVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Saturated,
    NotSaturated,
    /// A mutation of the vertex left the pool.
    Indeterminate,
}

/// Saturation data of one tilting vertex of a mutation quiver.
#[derive(Clone, Debug, Serialize)]
pub struct SaturationEntry {
    pub vertex: usize,
    pub dims: DimVector,
    /// Arrows leaving `T` inside the tilting quiver, `s(T)`.
    pub starts: Option<usize>,
    /// Arrows ending at `T` inside the tilting quiver, `e(T)`.
    pub ends: Option<usize>,
    pub verdict: Verdict,
    /// All coordinates of `dim T` are at least 2.
    pub dims_criterion: bool,
}

impl SaturationEntry {
    /// Degree verdict and dimension criterion agree (indeterminate entries
    /// agree vacuously).
    pub fn consistent(&self) -> bool {
        match self.verdict {
            Verdict::Saturated => self.dims_criterion,
            Verdict::NotSaturated => !self.dims_criterion,
            Verdict::Indeterminate => true,
        }
    }
}

/// One connected component of the tilting subquiver.
#[derive(Clone, Debug, Serialize)]
pub struct ComponentReport {
    /// Vertex indices in the mutation quiver.
    pub vertices: Vec<usize>,
    pub non_saturated: Vec<usize>,
    pub indeterminate: usize,
}

impl Engine {
    /// `s(T)`, `e(T)` and the verdict for every tilting vertex of `mq`. On
    /// exhaustive quivers the degrees are read off the edges; otherwise
    /// each vertex is mutated at every summand.
    pub fn saturation_report(&self, mq: &MutationQuiver) -> Result<Vec<SaturationEntry>, EngineError> {
        let n = self.rank();
        let mut tilting_degrees = vec![(0, 0); mq.len()];
        for e in mq.edges.iter().filter(|e| mq.is_tilting[e.from] && mq.is_tilting[e.to]) {
            tilting_degrees[e.from].0 += 1;
            tilting_degrees[e.to].1 += 1;
        }
        let mut out = Vec::new();
        for v in (0..mq.len()).filter(|&v| mq.is_tilting[v]) {
            let pair = &mq.vertices[v];
            let degrees = if mq.exhaustive {
                Some(tilting_degrees[v])
            } else {
                self.tilting_degrees(pair)?
            };
            let dims = self.pair_dims(pair);
            let dims_criterion = dims.0.iter().all(|&d| d >= 2);
            let verdict = match degrees {
                Some((s, e)) if s + e == n => Verdict::Saturated,
                Some(_) => Verdict::NotSaturated,
                None => Verdict::Indeterminate,
            };
            out.push(SaturationEntry {
                vertex: v,
                dims,
                starts: degrees.map(|d| d.0),
                ends: degrees.map(|d| d.1),
                verdict,
                dims_criterion,
            });
        }
        Ok(out)
    }

    fn tilting_degrees(&self, pair: &super::Pair) -> Result<Option<(usize, usize)>, EngineError> {
        let (mut s, mut e) = (0, 0);
        for pos in pair.summands() {
            match self.other_completion(pair, pos)? {
                Neighbor::Found(p) if self.is_tilting(&p) => match self.direction(pair, &p)? {
                    Direction::Left => s += 1,
                    Direction::Right => e += 1,
                },
                Neighbor::Found(_) => {}
                Neighbor::Unknown => return Ok(None),
            }
        }
        Ok(Some((s, e)))
    }

    /// Components of the tilting subquiver with their non-saturated
    /// vertices.
    pub fn component_analysis(&self, mq: &MutationQuiver, report: &[SaturationEntry]) -> Vec<ComponentReport> {
        let tilting: Vec<usize> = (0..mq.len()).filter(|&v| mq.is_tilting[v]).collect();
        let verdicts: std::collections::HashMap<usize, Verdict> = report.iter().map(|r| (r.vertex, r.verdict)).collect();
        let sub = mq.tilting_subquiver();
        sub.components()
            .into_iter()
            .map(|comp| {
                let vertices: Vec<usize> = comp.iter().map(|&i| tilting[i]).collect();
                let verdict = |v: usize| verdicts.get(&v).copied();
                let non_saturated = vertices.iter().copied().filter(|&v| verdict(v) == Some(Verdict::NotSaturated)).collect();
                let indeterminate = vertices.iter().filter(|&&v| verdict(v) == Some(Verdict::Indeterminate)).count();
                ComponentReport { vertices, non_saturated, indeterminate }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::quiver::presets;

    #[test]
    fn a3_criterion_agrees() {
        let e = Engine::for_quiver(Arc::new(presets::dynkin_a(3)), 1).unwrap();
        let mq = e.mutation_quiver().unwrap();
        let report = e.saturation_report(&mq).unwrap();
        assert_eq!(report.len(), 5);
        assert!(report.iter().all(SaturationEntry::consistent));
        let a = mq.index_of(&e.regular_pair().unwrap()).unwrap();
        assert_eq!(report.iter().find(|r| r.vertex == a).unwrap().verdict, Verdict::NotSaturated);
        let comps = e.component_analysis(&mq, &report);
        assert_eq!(comps.len(), 1);
        assert!(!comps[0].non_saturated.is_empty());
    }
}
