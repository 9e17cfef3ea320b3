use std::collections::{HashMap, VecDeque};

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::Serialize;

use super::approx::{certify_left_minimal, minimal_left_approximation};
use super::{Engine, EngineError, Pair, Summand};
use crate::rep::{cokernel, fac_contains_sum, Representation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// `Fac` shrinks.
    Left,
    /// `Fac` grows.
    Right,
}

/// The exchange sequence `X -> U' -> Y -> 0` behind one mutation. For a
/// right mutation it is the sequence of the inverse left mutation.
#[derive(Clone, Debug, Serialize)]
pub struct ExchangeSequenceRecord {
    pub removed: Summand,
    pub added: Summand,
    /// Source of the left approximation (a pool index).
    pub approximated: usize,
    /// Multiplicities `(pool index, count)` of the middle term `U'`.
    pub middle: Vec<(usize, usize)>,
    /// Multiplicities of the cokernel `Y`; empty when `Y = 0`.
    pub cokernel: Vec<(usize, usize)>,
    pub result: Pair,
    pub direction: Direction,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    /// Summand of `from` replaced along the edge.
    pub removed: Summand,
    /// Summand of `to` that replaces it.
    pub added: Summand,
}

/// Result of mutating at one position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Neighbor {
    Found(Pair),
    /// The other completion needs a module outside a bounded pool.
    Unknown,
}

/// Support tau-tilting quiver, or a ball of it in bounded mode.
#[derive(Clone, Debug, Serialize)]
pub struct MutationQuiver {
    pub vertices: Vec<Pair>,
    pub edges: Vec<Edge>,
    pub exhaustive: bool,
    pub is_tilting: Vec<bool>,
    /// Some mutation at this vertex could not be resolved in the pool.
    pub boundary: Vec<bool>,
    /// BFS distance from the start vertex (bounded mode).
    pub distance: Vec<Option<usize>>,
}

impl MutationQuiver {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, pair: &Pair) -> Option<usize> {
        self.vertices.iter().position(|p| p == pair)
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.from == v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.to == v).count()
    }

    pub fn degrees(&self) -> Vec<(usize, usize)> {
        let mut d = vec![(0, 0); self.len()];
        for e in &self.edges {
            d[e.from].0 += 1;
            d[e.to].1 += 1;
        }
        d
    }

    pub fn sources(&self) -> Vec<usize> {
        self.degrees().iter().enumerate().filter(|(_, d)| d.1 == 0).map(|(i, _)| i).collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        self.degrees().iter().enumerate().filter(|(_, d)| d.0 == 0).map(|(i, _)| i).collect()
    }

    /// Connected components of the underlying undirected graph, each a
    /// sorted list of vertex indices; components ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut adj = vec![Vec::new(); n];
        for e in &self.edges {
            adj[e.from].push(e.to);
            adj[e.to].push(e.from);
        }
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Whether the directed graph has no cycle.
    pub fn is_acyclic(&self) -> bool {
        let n = self.len();
        let mut indeg: Vec<usize> = self.degrees().iter().map(|d| d.1).collect();
        let mut out = vec![Vec::new(); n];
        for e in &self.edges {
            out[e.from].push(e.to);
        }
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop_front() {
            seen += 1;
            for &w in &out[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
        seen == n
    }

    /// Edge set as sorted `(from, to)` pairs.
    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<(usize, usize)> = self.edges.iter().map(|e| (e.from, e.to)).collect();
        v.sort_unstable();
        v
    }

    /// Induced subquiver on the tilting vertices.
    pub fn tilting_subquiver(&self) -> MutationQuiver {
        let keep: Vec<usize> = (0..self.len()).filter(|&v| self.is_tilting[v]).collect();
        let mut remap = HashMap::new();
        for (new, &old) in keep.iter().enumerate() {
            remap.insert(old, new);
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|e| {
                Some(Edge { from: *remap.get(&e.from)?, to: *remap.get(&e.to)?, removed: e.removed, added: e.added })
            })
            .collect();
        MutationQuiver {
            vertices: keep.iter().map(|&v| self.vertices[v].clone()).collect(),
            edges,
            exhaustive: self.exhaustive,
            is_tilting: vec![true; keep.len()],
            boundary: keep.iter().map(|&v| self.boundary[v]).collect(),
            distance: keep.iter().map(|&v| self.distance[v]).collect(),
        }
    }
}

fn difference(a: &Pair, b: &Pair) -> Option<(Summand, Summand)> {
    let removed: Vec<Summand> = a.summands().into_iter().filter(|s| !b.contains(*s)).collect();
    let added: Vec<Summand> = b.summands().into_iter().filter(|s| !a.contains(*s)).collect();
    match (removed.as_slice(), added.as_slice()) {
        ([r], [d]) => Some((*r, *d)),
        _ => None,
    }
}

impl Engine {
    /// Elements outside `pair` that complete `pair - position`, searched
    /// over the pool and the vertices.
    pub fn completions_of(&self, rest: &Pair) -> Vec<Summand> {
        let rest_elems = rest.summands();
        let modules = (0..self.pool().len()).filter(|&m| self.is_rigid(m)).map(Summand::Module);
        let vertices = (0..self.rank()).map(Summand::Projective);
        modules
            .chain(vertices)
            .filter(|s| !rest.contains(*s))
            .filter(|s| rest_elems.iter().all(|r| self.compatible(*s, *r)))
            .collect()
    }

    /// The other completion of `pair - position`, by search.
    pub fn other_completion(&self, pair: &Pair, position: Summand) -> Result<Neighbor, EngineError> {
        if !pair.contains(position) {
            return Err(EngineError::NotInPair(self.summand_label(position)));
        }
        let rest = pair.without(position);
        let others: Vec<Summand> = self.completions_of(&rest).into_iter().filter(|&s| s != position).collect();
        match others.as_slice() {
            [one] => Ok(Neighbor::Found(rest.with(*one))),
            [] if !self.is_exhaustive() => Ok(Neighbor::Unknown),
            _ => Err(EngineError::Inconsistent(format!(
                "{} has {} completions besides {}",
                self.pair_label(&rest),
                others.len(),
                self.summand_label(position)
            ))),
        }
    }

    /// `Fac M_a` contained in `Fac M_b`: by torsion bitsets on complete
    /// pools, by the trace test on bounded ones.
    pub fn fac_subset(&self, a: &Pair, b: &Pair) -> bool {
        if self.is_exhaustive() {
            return self.torsion_set(a).is_subset(&self.torsion_set(b));
        }
        self.fac_subset_by_trace(a, b)
    }

    /// Matrix-level check: every summand of `M_a` is a quotient of a sum of
    /// copies of `M_b`.
    pub fn fac_subset_by_trace(&self, a: &Pair, b: &Pair) -> bool {
        let breps: Vec<&Representation> = b.modules.iter().map(|&m| self.module_rep(m)).collect();
        a.modules.iter().all(|&x| !breps.is_empty() && fac_contains_sum(&breps, self.module_rep(x)))
    }

    /// Direction of the edge between two neighbors: `Left` when `Fac b` is
    /// strictly smaller than `Fac a`.
    pub fn direction(&self, a: &Pair, b: &Pair) -> Result<Direction, EngineError> {
        let (ab, ba) = (self.fac_subset(a, b), self.fac_subset(b, a));
        match (ab, ba) {
            (false, true) => Ok(Direction::Left),
            (true, false) => Ok(Direction::Right),
            _ => Err(EngineError::Inconsistent(format!(
                "neighbors {} and {} are not strictly comparable",
                self.pair_label(a),
                self.pair_label(b)
            ))),
        }
    }

    /// Left mutation at a module summand `x` with `x` not in `Fac U`:
    /// minimal left add(U)-approximation `x -> U'`, cokernel `Y`. When `U`
    /// stops being sincere away from `P` the missed vertex joins `P`,
    /// otherwise `Y = Y_1^k` and `Y_1` replaces `x`.
    pub fn left_mutation(&self, pair: &Pair, x: usize) -> Result<(Pair, ExchangeSequenceRecord), EngineError> {
        let rest = pair.without(Summand::Module(x));
        let xrep = self.module_rep(x);
        let approx = minimal_left_approximation(self, xrep, &rest.modules);
        if !certify_left_minimal(self, &approx) {
            return Err(EngineError::Inconsistent(format!("approximation of {} is not left minimal", self.summand_label(Summand::Module(x)))));
        }
        let (y, _) = cokernel(&approx.map, &approx.middle);
        let y_mult = if y.is_zero() { Some(Vec::new()) } else { self.nonzero_parts(&y) };
        // A support tau-tilting pair (M, P) has M sincere away from P, so a
        // vertex outside P missed by U must join P.
        let missed: Vec<usize> = (0..self.rank())
            .filter(|v| !rest.projectives.contains(v))
            .filter(|&v| rest.modules.iter().all(|&m| self.pool().module(m).dims[v] == 0))
            .collect();
        let (new_pair, added) = match missed.as_slice() {
            [v] => (rest.with(Summand::Projective(*v)), Summand::Projective(*v)),
            [] => {
                let parts = y_mult.clone().ok_or(EngineError::OutsidePool)?;
                let [(y1, _)] = parts.as_slice() else {
                    return Err(EngineError::Inconsistent(format!("cokernel {} is not isotypic", y.dim_vector())));
                };
                (rest.with(Summand::Module(*y1)), Summand::Module(*y1))
            }
            _ => {
                return Err(EngineError::Inconsistent(format!(
                    "{} misses {} vertices",
                    self.pair_label(&rest),
                    missed.len()
                )))
            }
        };
        let cokernel_mult = y_mult.unwrap_or_default();
        let record = ExchangeSequenceRecord {
            removed: Summand::Module(x),
            added,
            approximated: x,
            middle: approx.multiplicities(),
            cokernel: cokernel_mult,
            result: new_pair.clone(),
            direction: Direction::Left,
        };
        Ok((new_pair, record))
    }

    fn nonzero_parts(&self, y: &Representation) -> Option<Vec<(usize, usize)>> {
        let mult = self.pool().decompose(y).ok()?;
        Some(mult.iter().enumerate().filter(|(_, &k)| k > 0).map(|(i, &k)| (i, k)).collect())
    }

    /// Mutation of a support tau-tilting pair at one of its summands. The
    /// result is found by search; when the position is a module outside
    /// `Fac U` it is also computed by the exchange sequence, otherwise the
    /// inverse left mutation is computed, and both must agree.
    pub fn mutate(&self, pair: &Pair, position: Summand) -> Result<(Pair, ExchangeSequenceRecord), EngineError> {
        if !self.is_support_tau_tilting(pair)? {
            return Err(EngineError::NotSupportTauTilting(self.pair_label(pair)));
        }
        let searched = self.other_completion(pair, position)?;
        let rest = pair.without(position);
        let left = match position {
            Summand::Module(x) => {
                let ureps: Vec<&Representation> = rest.modules.iter().map(|&m| self.module_rep(m)).collect();
                ureps.is_empty() || !fac_contains_sum(&ureps, self.module_rep(x))
            }
            Summand::Projective(_) => false,
        };
        if let (true, Summand::Module(x)) = (left, position) {
            let (new_pair, record) = self.left_mutation(pair, x)?;
            if let Neighbor::Found(s) = &searched {
                if *s != new_pair {
                    return Err(EngineError::Inconsistent(format!(
                        "exchange sequence gives {} but search gives {}",
                        self.pair_label(&new_pair),
                        self.pair_label(s)
                    )));
                }
            }
            return Ok((new_pair, record));
        }
        let Neighbor::Found(new_pair) = searched else {
            return Err(EngineError::OutsidePool);
        };
        let (_, added) = difference(pair, &new_pair).ok_or_else(|| EngineError::Inconsistent("not a neighbor".into()))?;
        let Summand::Module(y) = added else {
            return Err(EngineError::Inconsistent("right mutation added a support projective".into()));
        };
        let (back, inverse) = self.left_mutation(&new_pair, y)?;
        if back != *pair {
            return Err(EngineError::Inconsistent(format!(
                "left mutation of {} at {} does not return to {}",
                self.pair_label(&new_pair),
                self.summand_label(added),
                self.pair_label(pair)
            )));
        }
        let record = ExchangeSequenceRecord {
            removed: position,
            added,
            approximated: inverse.approximated,
            middle: inverse.middle,
            cokernel: inverse.cokernel,
            result: new_pair.clone(),
            direction: Direction::Right,
        };
        Ok((new_pair, record))
    }

    /// The whole support tau-tilting quiver of a complete pool. Neighbors
    /// are found by grouping pairs on the `n - 1` elements they share;
    /// every group must have exactly two members.
    pub fn mutation_quiver(&self) -> Result<MutationQuiver, EngineError> {
        if !self.is_exhaustive() {
            return Err(EngineError::OutsidePool);
        }
        let pairs = self.enumerate().pairs;
        self.mutation_quiver_on(pairs)
    }

    pub(crate) fn mutation_quiver_on(&self, pairs: Vec<Pair>) -> Result<MutationQuiver, EngineError> {
        let torsion: Vec<FixedBitSet> = self.run(|| pairs.par_iter().map(|p| self.torsion_set(p)).collect());
        let mut groups: HashMap<Pair, Vec<(usize, Summand)>> = HashMap::new();
        for (i, p) in pairs.iter().enumerate() {
            for s in p.summands() {
                groups.entry(p.without(s)).or_default().push((i, s));
            }
        }
        let mut keys: Vec<&Pair> = groups.keys().collect();
        keys.sort();
        let mut edges = Vec::new();
        for key in keys {
            let g = &groups[key];
            let [(a, sa), (b, sb)] = g.as_slice() else {
                return Err(EngineError::Inconsistent(format!(
                    "almost complete pair {} has {} completions",
                    self.pair_label(key),
                    g.len()
                )));
            };
            let ab = torsion[*a].is_subset(&torsion[*b]);
            let ba = torsion[*b].is_subset(&torsion[*a]);
            let edge = match (ab, ba) {
                (false, true) => Edge { from: *a, to: *b, removed: *sa, added: *sb },
                (true, false) => Edge { from: *b, to: *a, removed: *sb, added: *sa },
                _ => {
                    return Err(EngineError::Inconsistent(format!(
                        "{} and {} have incomparable or equal torsion classes",
                        self.pair_label(&pairs[*a]),
                        self.pair_label(&pairs[*b])
                    )))
                }
            };
            edges.push(edge);
        }
        edges.sort_by_key(|e| (e.from, e.to));
        let is_tilting = self.run(|| pairs.par_iter().map(|p| self.is_tilting(p)).collect());
        let n = pairs.len();
        Ok(MutationQuiver { vertices: pairs, edges, exhaustive: true, is_tilting, boundary: vec![false; n], distance: vec![None; n] })
    }

    /// Breadth-first ball of radius `depth` around `start`, mutating by
    /// search in the pool. Vertices whose mutations leave the pool are
    /// marked as boundary.
    pub fn mutation_ball(&self, start: &Pair, depth: usize) -> Result<MutationQuiver, EngineError> {
        if !self.is_support_tau_tilting(start)? {
            return Err(EngineError::NotSupportTauTilting(self.pair_label(start)));
        }
        let mut vertices = vec![start.clone()];
        let mut index: HashMap<Pair, usize> = HashMap::from([(start.clone(), 0)]);
        let mut distance = vec![Some(0)];
        let mut boundary = vec![false];
        let mut edges: Vec<Edge> = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(v) = queue.pop_front() {
            let d = distance[v].expect("visited");
            let pair = vertices[v].clone();
            for s in pair.summands() {
                let nb = match self.other_completion(&pair, s)? {
                    Neighbor::Found(p) => p,
                    Neighbor::Unknown => {
                        boundary[v] = true;
                        continue;
                    }
                };
                let w = match index.get(&nb) {
                    Some(&w) => w,
                    None if d < depth => {
                        let w = vertices.len();
                        vertices.push(nb.clone());
                        index.insert(nb.clone(), w);
                        distance.push(Some(d + 1));
                        boundary.push(false);
                        queue.push_back(w);
                        w
                    }
                    None => continue,
                };
                if w < v && edges.iter().any(|e| (e.from == w && e.to == v) || (e.from == v && e.to == w)) {
                    continue;
                }
                let (_, added) = difference(&pair, &nb).expect("neighbors differ in one summand");
                let edge = match self.direction(&pair, &nb)? {
                    Direction::Left => Edge { from: v, to: w, removed: s, added },
                    Direction::Right => Edge { from: w, to: v, removed: added, added: s },
                };
                if !edges.contains(&edge) {
                    edges.push(edge);
                }
            }
        }
        edges.sort_by_key(|e| (e.from, e.to));
        let is_tilting = vertices.iter().map(|p| self.is_tilting(p)).collect();
        Ok(MutationQuiver { vertices, edges, exhaustive: false, is_tilting, boundary, distance })
    }

    /// Hasse diagram of the torsion-class order on `pairs`, computed from
    /// the bitsets alone: `U` is covered by `T` when it is maximal among
    /// the pairs with strictly smaller torsion class.
    pub fn hasse_edges(&self, pairs: &[Pair]) -> Vec<(usize, usize)> {
        let sets: Vec<FixedBitSet> = pairs.iter().map(|p| self.torsion_set(p)).collect();
        let sizes: Vec<usize> = sets.iter().map(|s| s.count_ones(..)).collect();
        let mut by_size: Vec<usize> = (0..pairs.len()).collect();
        by_size.sort_by_key(|&i| std::cmp::Reverse(sizes[i]));
        let mut edges: Vec<(usize, usize)> = self.run(|| {
            (0..pairs.len())
                .into_par_iter()
                .flat_map_iter(|t| {
                    let mut maximal: Vec<usize> = Vec::new();
                    for &u in &by_size {
                        if sizes[u] >= sizes[t] || !sets[u].is_subset(&sets[t]) {
                            continue;
                        }
                        if maximal.iter().all(|&m| !sets[u].is_subset(&sets[m])) {
                            maximal.push(u);
                        }
                    }
                    maximal.into_iter().map(move |u| (t, u)).collect::<Vec<_>>()
                })
                .collect()
        });
        edges.sort_unstable();
        edges
    }

    /// Number of tilting neighbors of a tilting pair, i.e. `s(T) + e(T)`
    /// in the tilting quiver; `None` when some mutation leaves the pool.
    pub fn tilting_degree(&self, pair: &Pair) -> Result<Option<usize>, EngineError> {
        let mut count = 0;
        for s in pair.summands() {
            match self.other_completion(pair, s)? {
                Neighbor::Found(p) => {
                    if self.is_tilting(&p) {
                        count += 1;
                    }
                }
                Neighbor::Unknown => return Ok(None),
            }
        }
        Ok(Some(count))
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
    fn a2_pentagon() {
        let e = Engine::for_quiver(Arc::new(presets::dynkin_a(2)), 1).unwrap();
        let mq = e.mutation_quiver().unwrap();
        assert_eq!(mq.len(), 5);
        assert_eq!(mq.edges.len(), 5);
        let a = mq.index_of(&e.regular_pair().unwrap()).unwrap();
        let z = mq.index_of(&e.zero_pair()).unwrap();
        assert_eq!(mq.sources(), vec![a]);
        assert_eq!(mq.sinks(), vec![z]);
        let t = mq.tilting_subquiver();
        assert_eq!((t.len(), t.edges.len()), (2, 1));
        assert_eq!(mq.edge_pairs(), e.hasse_edges(&mq.vertices));
    }

    #[test]
    fn a2_mutation_at_p1() {
        let e = Engine::for_quiver(Arc::new(presets::dynkin_a(2)), 1).unwrap();
        let a = e.regular_pair().unwrap();
        let p1 = idx(&e, &[1, 0]);
        let (new, rec) = e.mutate(&a, Summand::Module(p1)).unwrap();
        assert_eq!(new, Pair::new(vec![idx(&e, &[1, 1]), idx(&e, &[0, 1])], vec![]));
        assert_eq!(rec.direction, Direction::Left);
        assert_eq!(rec.middle, vec![(idx(&e, &[1, 1]), 1)]);
        assert_eq!(rec.cokernel, vec![(idx(&e, &[0, 1]), 1)]);
    }

    #[test]
    fn kronecker_mutations_from_regular() {
        let e = Engine::for_quiver(Arc::new(presets::kronecker()), 4).unwrap();
        let a = e.regular_pair().unwrap();
        let (p1, p2) = (idx(&e, &[1, 0]), idx(&e, &[2, 1]));
        let (n1, r1) = e.mutate(&a, Summand::Module(p2)).unwrap();
        assert_eq!(n1, Pair::new(vec![p1], vec![1]));
        assert_eq!(r1.direction, Direction::Left);
        assert!(r1.cokernel.is_empty());
        let (n2, r2) = e.mutate(&a, Summand::Module(p1)).unwrap();
        assert_eq!(n2, Pair::new(vec![p2, idx(&e, &[3, 2])], vec![]));
        assert_eq!(r2.middle, vec![(p2, 2)]);
        let (back, r3) = e.mutate(&n2, Summand::Module(idx(&e, &[3, 2]))).unwrap();
        assert_eq!(back, a);
        assert_eq!(r3.direction, Direction::Right);
    }
}
