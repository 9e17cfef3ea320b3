use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::Serialize;

use super::{Engine, Pair, Summand};

/// All support tau-tilting pairs found in the pool, in canonical order.
#[derive(Clone, Debug, Serialize)]
pub struct Enumeration {
    pub pairs: Vec<Pair>,
    /// False for bounded pools, where pairs outside the pool are missed.
    pub exhaustive: bool,
}

impl Enumeration {
    /// Pairs with `k` module summands.
    pub fn with_modules(&self, k: usize) -> impl Iterator<Item = &Pair> {
        self.pairs.iter().filter(move |p| p.modules.len() == k)
    }

    pub fn count_with_modules(&self, k: usize) -> usize {
        self.with_modules(k).count()
    }
}

struct Ground {
    /// `compat[i]`: elements `j != i` compatible with `i`.
    compat: Vec<FixedBitSet>,
    eligible: FixedBitSet,
    modules: usize,
}

impl Ground {
    fn decode(&self, i: usize) -> Summand {
        if i < self.modules { Summand::Module(i) } else { Summand::Projective(i - self.modules) }
    }
}

impl Engine {
    fn ground(&self) -> Ground {
        let m = self.pool().len();
        let total = m + self.rank();
        let decode = |i: usize| if i < m { Summand::Module(i) } else { Summand::Projective(i - m) };
        let mut eligible = FixedBitSet::with_capacity(total);
        for i in 0..total {
            if i >= m || self.is_rigid(i) {
                eligible.insert(i);
            }
        }
        let compat = (0..total)
            .map(|i| {
                let mut set = FixedBitSet::with_capacity(total);
                if eligible.contains(i) {
                    for j in eligible.ones() {
                        if j != i && self.compatible(decode(i), decode(j)) {
                            set.insert(j);
                        }
                    }
                }
                set
            })
            .collect();
        Ground { compat, eligible, modules: m }
    }

    /// Backtracking search for all `n`-element compatible sets. The first
    /// level fans out over worker threads; the result is sorted by the
    /// canonical key, so it does not depend on the worker count.
    pub fn enumerate(&self) -> Enumeration {
        let ground = self.ground();
        let n = self.rank();
        let firsts: Vec<usize> = ground.eligible.ones().collect();
        let mut found: Vec<Vec<usize>> = self.run(|| {
            firsts
                .par_iter()
                .flat_map_iter(|&i| {
                    let mut cands = ground.compat[i].clone();
                    cands.set_range(..i + 1, false);
                    let mut out = Vec::new();
                    let mut chosen = vec![i];
                    extend(&ground, n, &mut chosen, &cands, &mut out);
                    out
                })
                .collect()
        });
        found.sort();
        let mut pairs: Vec<Pair> = found
            .into_iter()
            .map(|set| {
                let (mut ms, mut ps) = (Vec::new(), Vec::new());
                for i in set {
                    match ground.decode(i) {
                        Summand::Module(m) => ms.push(m),
                        Summand::Projective(v) => ps.push(v),
                    }
                }
                Pair::new(ms, ps)
            })
            .collect();
        pairs.sort_by_cached_key(|p| self.canonical_key(p));
        Enumeration { pairs, exhaustive: self.is_exhaustive() }
    }

    /// All tau-rigid pairs (any size), including the empty one.
    pub fn enumerate_rigid(&self) -> Vec<Pair> {
        let ground = self.ground();
        let mut out = vec![Pair::new(Vec::new(), Vec::new())];
        let mut stack: Vec<(Vec<usize>, FixedBitSet)> = ground
            .eligible
            .ones()
            .map(|i| {
                let mut c = ground.compat[i].clone();
                c.set_range(..i + 1, false);
                (vec![i], c)
            })
            .collect();
        while let Some((chosen, cands)) = stack.pop() {
            let (mut ms, mut ps) = (Vec::new(), Vec::new());
            for &i in &chosen {
                match ground.decode(i) {
                    Summand::Module(m) => ms.push(m),
                    Summand::Projective(v) => ps.push(v),
                }
            }
            out.push(Pair::new(ms, ps));
            for j in cands.ones() {
                let mut next = cands.clone();
                next.intersect_with(&ground.compat[j]);
                next.set_range(..j + 1, false);
                let mut c = chosen.clone();
                c.push(j);
                stack.push((c, next));
            }
        }
        out.sort_by_cached_key(|p| (p.len(), self.canonical_key(p)));
        out
    }
}

fn extend(ground: &Ground, n: usize, chosen: &mut Vec<usize>, cands: &FixedBitSet, out: &mut Vec<Vec<usize>>) {
    if chosen.len() == n {
        out.push(chosen.clone());
        return;
    }
    if chosen.len() + cands.count_ones(..) < n {
        return;
    }
    for j in cands.ones() {
        let mut next = cands.clone();
        next.intersect_with(&ground.compat[j]);
        next.set_range(..j + 1, false);
        if chosen.len() + 1 + next.count_ones(..) < n {
            continue;
        }
        chosen.push(j);
        extend(ground, n, chosen, &next, out);
        chosen.pop();
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::quiver::presets;

    #[test]
    fn a2_has_five_pairs() {
        let e = Engine::for_quiver(Arc::new(presets::dynkin_a(2)), 1).unwrap();
        let en = e.enumerate();
        assert_eq!(en.pairs.len(), 5);
        assert_eq!(en.count_with_modules(2), 2);
        assert!(en.exhaustive);
    }

    #[test]
    fn a3_counts_by_size() {
        let e = Engine::for_quiver(Arc::new(presets::dynkin_a(3)), 1).unwrap();
        let en = e.enumerate();
        let sizes: Vec<usize> = (0..=3).rev().map(|k| en.count_with_modules(k)).collect();
        assert_eq!(sizes, vec![5, 5, 3, 1]);
    }

    #[test]
    fn worker_count_does_not_change_output() {
        let q = Arc::new(presets::dynkin_d(4));
        let a = Engine::for_quiver(q.clone(), 1).unwrap().with_workers(1).enumerate();
        let b = Engine::for_quiver(q, 1).unwrap().with_workers(4).enumerate();
        assert_eq!(a.pairs, b.pairs);
    }
}
