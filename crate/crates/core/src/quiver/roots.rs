use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use super::{presets, DimVector, Quiver, QuiverError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DynkinType {
    A,
    D,
    E,
}

impl DynkinType {
    pub fn check_rank(self, n: usize) -> Result<(), QuiverError> {
        let ok = match self {
            DynkinType::A => n >= 1,
            DynkinType::D => n >= 4,
            DynkinType::E => (6..=8).contains(&n),
        };
        if ok { Ok(()) } else { Err(QuiverError::UnsupportedType(format!("{self}{n}"))) }
    }

    /// The preset quiver of this type and rank.
    pub fn quiver(self, n: usize) -> Result<Quiver, QuiverError> {
        self.check_rank(n)?;
        Ok(match self {
            DynkinType::A => presets::dynkin_a(n),
            DynkinType::D => presets::dynkin_d(n),
            DynkinType::E => presets::dynkin_e(n),
        })
    }

    /// Number of positive roots.
    pub fn root_count(self, n: usize) -> usize {
        match (self, n) {
            (DynkinType::A, n) => n * (n + 1) / 2,
            (DynkinType::D, n) => n * (n - 1),
            (DynkinType::E, 6) => 36,
            (DynkinType::E, 7) => 63,
            (DynkinType::E, 8) => 120,
            _ => 0,
        }
    }

    /// Splits a name like `"D5"` into type and rank.
    pub fn parse_name(name: &str) -> Option<(DynkinType, usize)> {
        let (head, tail) = name.split_at(1.min(name.len()));
        let ty: DynkinType = head.parse().ok()?;
        let n = tail.parse().ok()?;
        ty.check_rank(n).ok()?;
        Some((ty, n))
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DynkinType::A => "A",
            DynkinType::D => "D",
            DynkinType::E => "E",
        };
        f.write_str(s)
    }
}

impl FromStr for DynkinType {
    type Err = QuiverError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" => Ok(DynkinType::A),
            "D" => Ok(DynkinType::D),
            "E" => Ok(DynkinType::E),
            other => Err(QuiverError::UnsupportedType(other.to_string())),
        }
    }
}

/// Positive roots of the Dynkin diagram in the preset vertex numbering.
pub fn positive_roots(ty: DynkinType, n: usize) -> Result<Vec<DimVector>, QuiverError> {
    positive_roots_of(&ty.quiver(n)?)
}

/// Positive roots of the underlying graph of a Dynkin quiver, by closing
/// the simple roots under simple reflections that stay positive. Sorted.
pub fn positive_roots_of(q: &Quiver) -> Result<Vec<DimVector>, QuiverError> {
    if !q.is_dynkin() {
        return Err(QuiverError::UnsupportedType(format!("{} is not of Dynkin type", q.name())));
    }
    let n = q.n();
    let mult: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| q.edge_multiplicity(i, j) as i64).collect()).collect();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(root) = queue.pop_front() {
        for i in 0..n {
            let pairing: i64 = 2 * root[i] - (0..n).filter(|&j| j != i).map(|j| mult[i][j] * root[j]).sum::<i64>();
            if pairing == 0 {
                continue;
            }
            let mut next = root.clone();
            next[i] -= pairing;
            if next.iter().all(|&x| x >= 0) && next.iter().any(|&x| x > 0) && seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen.into_iter().map(|r| DimVector::from_i64(&r).expect("positive")).collect())
}

/// Applies the simple reflection at `i` to a root of the underlying graph.
#[cfg(test)]
fn reflect_root(q: &Quiver, root: &[i64], i: usize) -> Vec<i64> {
    let n = q.n();
    let pairing: i64 = 2 * root[i] - (0..n).filter(|&j| j != i).map(|j| q.edge_multiplicity(i, j) as i64 * root[j]).sum::<i64>();
    let mut out = root.to_vec();
    out[i] -= pairing;
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_root_systems() {
        let a2 = positive_roots(DynkinType::A, 2).unwrap();
        assert_eq!(a2, vec![DimVector(vec![0, 1]), DimVector(vec![1, 0]), DimVector(vec![1, 1])]);
        assert_eq!(positive_roots(DynkinType::A, 3).unwrap().len(), 6);
    }

    #[test]
    fn counts_match_type() {
        for (ty, n) in [
            (DynkinType::A, 5),
            (DynkinType::D, 4),
            (DynkinType::D, 6),
            (DynkinType::E, 6),
            (DynkinType::E, 7),
            (DynkinType::E, 8),
        ] {
            assert_eq!(positive_roots(ty, n).unwrap().len(), ty.root_count(n), "{ty}{n}");
        }
    }

    #[test]
    fn closed_under_positive_reflections() {
        let q = presets::dynkin_e(6);
        let roots = positive_roots_of(&q).unwrap();
        let set: BTreeSet<_> = roots.iter().cloned().collect();
        for r in &roots {
            for i in 0..q.n() {
                let s = reflect_root(&q, &r.to_i64(), i);
                if let Some(d) = DimVector::from_i64(&s) {
                    if !d.is_zero() {
                        assert!(set.contains(&d), "{r} reflected at {i}");
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_bad_rank_and_non_dynkin() {
        assert!(positive_roots(DynkinType::E, 9).is_err());
        assert!(positive_roots(DynkinType::D, 3).is_err());
        assert!(positive_roots_of(&presets::kronecker()).is_err());
        assert_eq!(DynkinType::parse_name("D5"), Some((DynkinType::D, 5)));
        assert_eq!(DynkinType::parse_name("K2"), None);
    }
}
