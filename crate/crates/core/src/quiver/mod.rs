//! Finite acyclic quivers and the integral data of their path algebras.

mod dsl;
mod forms;
pub mod presets;
mod roots;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use dsl::{parse_quiver, to_dsl};
pub use forms::IntMatrix;
pub use roots::{positive_roots, positive_roots_of, DynkinType};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuiverError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("quiver has an oriented cycle: {}", .0.join(" -> "))]
    Cycle(Vec<String>),
    #[error("duplicate vertex id `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate arrow label `{0}`")]
    DuplicateArrow(String),
    #[error("arrow `{arrow}` refers to unknown vertex `{vertex}`")]
    UnknownVertex { arrow: String, vertex: String },
    #[error("vector has length {got}, expected {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("unsupported Dynkin type {0}")]
    UnsupportedType(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

/// A path `source -> ... -> target` given by its arrow indices in
/// traversal order. Trivial paths have no arrows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }
}

/// A finite quiver without oriented cycles. Parallel arrows are allowed.
///
/// All paths are enumerated at construction; `paths_between(i, j)` returns
/// indices into `paths()` in a fixed order.
#[derive(Clone)]
pub struct Quiver {
    name: String,
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    topo: Vec<usize>,
    paths: Vec<Path>,
    path_index: HashMap<Vec<usize>, usize>,
    trivial: Vec<usize>,
    between: Vec<Vec<Vec<usize>>>,
}

impl PartialEq for Quiver {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.vertices == other.vertices && self.arrows == other.arrows
    }
}

impl Eq for Quiver {}

impl fmt::Debug for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Quiver")
            .field("name", &self.name)
            .field("vertices", &self.vertices)
            .field("arrows", &self.arrows)
            .finish()
    }
}

impl Quiver {
    /// Builds and validates a quiver from vertex ids and
    /// `(label, source id, target id)` triples.
    pub fn new<S: AsRef<str>>(
        name: impl Into<String>,
        vertices: &[S],
        arrows: &[(S, S, S)],
    ) -> Result<Self, QuiverError> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(QuiverError::DuplicateVertex(v.clone()));
            }
        }
        let mut labels = HashMap::new();
        let mut built = Vec::with_capacity(arrows.len());
        for (label, s, t) in arrows {
            let label = label.as_ref().to_string();
            if labels.insert(label.clone(), ()).is_some() {
                return Err(QuiverError::DuplicateArrow(label));
            }
            let lookup = |v: &str| {
                index.get(v).copied().ok_or_else(|| QuiverError::UnknownVertex {
                    arrow: label.clone(),
                    vertex: v.to_string(),
                })
            };
            let source = lookup(s.as_ref())?;
            let target = lookup(t.as_ref())?;
            built.push(Arrow { label: label.clone(), source, target });
        }
        Self::from_parts(name.into(), vertices, built)
    }

    fn from_parts(name: String, vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self, QuiverError> {
        let n = vertices.len();
        let topo = topological_order(n, &arrows).map_err(|cycle| {
            QuiverError::Cycle(cycle.into_iter().map(|v| vertices[v].clone()).collect())
        })?;
        let mut q = Quiver {
            name,
            vertices,
            arrows,
            topo,
            paths: Vec::new(),
            path_index: HashMap::new(),
            trivial: Vec::new(),
            between: vec![vec![Vec::new(); n]; n],
        };
        q.enumerate_paths();
        Ok(q)
    }

    fn enumerate_paths(&mut self) {
        let n = self.vertices.len();
        let mut out_arrows = vec![Vec::new(); n];
        for (k, a) in self.arrows.iter().enumerate() {
            out_arrows[a.source].push(k);
        }
        let mut paths = Vec::new();
        for s in 0..n {
            let mut stack = vec![Path { source: s, target: s, arrows: Vec::new() }];
            while let Some(p) = stack.pop() {
                for &k in out_arrows[p.target].iter().rev() {
                    let mut arrows = p.arrows.clone();
                    arrows.push(k);
                    stack.push(Path { source: s, target: self.arrows[k].target, arrows });
                }
                paths.push(p);
            }
        }
        paths.sort_by(|a, b| (a.source, a.target, a.len(), &a.arrows).cmp(&(b.source, b.target, b.len(), &b.arrows)));
        self.trivial = vec![0; n];
        for (i, p) in paths.iter().enumerate() {
            self.between[p.source][p.target].push(i);
            if p.is_trivial() {
                self.trivial[p.source] = i;
            } else {
                self.path_index.insert(p.arrows.clone(), i);
            }
        }
        self.paths = paths;
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_id(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == id)
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    /// Vertices ordered so every arrow points from an earlier to a later one.
    pub fn topological_order(&self) -> &[usize] {
        &self.topo
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn path(&self, i: usize) -> &Path {
        &self.paths[i]
    }

    /// Indices of all paths from `s` to `t`.
    pub fn paths_between(&self, s: usize, t: usize) -> &[usize] {
        &self.between[s][t]
    }

    pub fn trivial_path(&self, v: usize) -> usize {
        self.trivial[v]
    }

    /// Index of the concatenation of two paths, if they compose.
    pub fn concat(&self, first: usize, second: usize) -> Option<usize> {
        let (p, q) = (&self.paths[first], &self.paths[second]);
        if p.target != q.source {
            return None;
        }
        if p.is_trivial() {
            return Some(second);
        }
        if q.is_trivial() {
            return Some(first);
        }
        let mut arrows = p.arrows.clone();
        arrows.extend_from_slice(&q.arrows);
        self.path_index.get(&arrows).copied()
    }

    /// If `whole = prefix . rest` for some path `rest`, returns `rest`.
    pub fn strip_prefix(&self, whole: usize, prefix: usize) -> Option<usize> {
        let (w, p) = (&self.paths[whole], &self.paths[prefix]);
        if w.source != p.source || !w.arrows.starts_with(&p.arrows) {
            return None;
        }
        let rest = &w.arrows[p.len()..];
        if rest.is_empty() {
            Some(self.trivial[p.target])
        } else {
            self.path_index.get(rest).copied()
        }
    }

    /// If `whole = rest . suffix` for some path `rest`, returns `rest`.
    pub fn strip_suffix(&self, whole: usize, suffix: usize) -> Option<usize> {
        let (w, s) = (&self.paths[whole], &self.paths[suffix]);
        if w.target != s.target || !w.arrows.ends_with(&s.arrows) {
            return None;
        }
        let rest = &w.arrows[..w.len() - s.len()];
        if rest.is_empty() {
            Some(self.trivial[s.source])
        } else {
            self.path_index.get(rest).copied()
        }
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.arrows.iter().all(|a| a.target != v)
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.arrows.iter().all(|a| a.source != v)
    }

    /// The quiver with every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow { label: a.label.clone(), source: a.target, target: a.source })
            .collect();
        Quiver::from_parts(format!("{}^op", self.name), self.vertices.clone(), arrows)
            .expect("opposite of an acyclic quiver is acyclic")
    }

    /// Reverses the listed arrows, keeping labels and arrow order.
    pub fn reorient(&self, reversed: &[usize]) -> Result<Quiver, QuiverError> {
        let arrows = self
            .arrows
            .iter()
            .enumerate()
            .map(|(k, a)| {
                if reversed.contains(&k) {
                    Arrow { label: a.label.clone(), source: a.target, target: a.source }
                } else {
                    a.clone()
                }
            })
            .collect();
        Quiver::from_parts(self.name.clone(), self.vertices.clone(), arrows)
    }

    /// The reflected quiver at `v`: every arrow incident to `v` reversed.
    pub fn reflect(&self, v: usize) -> Quiver {
        let incident: Vec<usize> = self
            .arrows
            .iter()
            .enumerate()
            .filter(|(_, a)| a.source == v || a.target == v)
            .map(|(k, _)| k)
            .collect();
        self.reorient(&incident).expect("reflection at a sink or source keeps the quiver acyclic")
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Quiver {
        self.name = name.into();
        self
    }

    /// Number of arrows between `i` and `j` in either direction.
    pub fn edge_multiplicity(&self, i: usize, j: usize) -> usize {
        self.arrows
            .iter()
            .filter(|a| (a.source == i && a.target == j) || (a.source == j && a.target == i))
            .count()
    }

    /// True when the underlying graph is a disjoint union of simply-laced
    /// Dynkin diagrams, i.e. the symmetrized Tits form is positive definite.
    pub fn is_dynkin(&self) -> bool {
        let n = self.n();
        let mut m = crate::linalg::Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let v = if i == j { 2 } else { -(self.edge_multiplicity(i, j) as i64) };
                m.set(i, j, crate::linalg::Rational::from_int(v));
            }
        }
        // Sylvester: all leading principal minors positive.
        (1..=n).all(|k| {
            let sub = m.block(0, 0, k, k);
            determinant(&sub) > crate::linalg::Rational::zero()
        })
    }

    /// Two vertices joined only by `m >= 2` parallel arrows.
    pub fn kronecker_arrows(&self) -> Option<usize> {
        if self.n() != 2 || self.arrows.len() < 2 {
            return None;
        }
        let s = self.arrows[0].source;
        self.arrows.iter().all(|a| a.source == s && a.target != s).then_some(self.arrows.len())
    }
}

fn determinant(m: &crate::linalg::Matrix) -> crate::linalg::Rational {
    use crate::linalg::Rational;
    let n = m.rows();
    let mut a = m.clone();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a.get(r, col).is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            for c in 0..n {
                let (x, y) = (a.get(col, c).clone(), a.get(p, c).clone());
                a.set(col, c, y);
                a.set(p, c, x);
            }
            det = -det;
        }
        let pivot = a.get(col, col).clone();
        det = &det * &pivot;
        for r in col + 1..n {
            let f = a.get(r, col) / &pivot;
            if f.is_zero() {
                continue;
            }
            for c in col..n {
                let v = a.get(r, c) - &(&f * a.get(col, c));
                a.set(r, c, v);
            }
        }
    }
    det
}

/// Kahn's algorithm; on failure returns one oriented cycle.
fn topological_order(n: usize, arrows: &[Arrow]) -> Result<Vec<usize>, Vec<usize>> {
    let mut indeg = vec![0usize; n];
    let mut out = vec![Vec::new(); n];
    for a in arrows {
        indeg[a.target] += 1;
        out[a.source].push(a.target);
    }
    let mut ready: std::collections::BTreeSet<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = ready.pop_first() {
        order.push(v);
        for &w in &out[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                ready.insert(w);
            }
        }
    }
    if order.len() == n {
        return Ok(order);
    }
    // Walk backwards along remaining arrows until a vertex repeats.
    let remaining: Vec<bool> = (0..n).map(|v| indeg[v] > 0).collect();
    let start = (0..n).find(|&v| remaining[v]).expect("some vertex remains");
    let mut seen = vec![usize::MAX; n];
    let mut walk = vec![start];
    seen[start] = 0;
    let mut cur = start;
    loop {
        let prev = arrows
            .iter()
            .find(|a| a.target == cur && remaining[a.source])
            .map(|a| a.source)
            .expect("a vertex with positive in-degree has a remaining predecessor");
        if seen[prev] != usize::MAX {
            let mut cycle: Vec<usize> = walk[seen[prev]..].to_vec();
            cycle.reverse();
            cycle.push(cycle[0]);
            return Err(cycle);
        }
        seen[prev] = walk.len();
        walk.push(prev);
        cur = prev;
    }
}

/// A dimension vector: one non-negative entry per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DimVector(pub Vec<usize>);

impl DimVector {
    pub fn zero(n: usize) -> Self {
        DimVector(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        DimVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&d| d == 0)
    }

    pub fn is_sincere(&self) -> bool {
        self.0.iter().all(|&d| d > 0)
    }

    pub fn to_i64(&self) -> Vec<i64> {
        self.0.iter().map(|&d| d as i64).collect()
    }

    /// Converts a signed vector, failing on negative entries.
    pub fn from_i64(v: &[i64]) -> Option<Self> {
        v.iter().map(|&x| usize::try_from(x).ok()).collect::<Option<Vec<_>>>().map(DimVector)
    }

    pub fn add(&self, other: &DimVector) -> DimVector {
        DimVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scaled(&self, k: usize) -> DimVector {
        DimVector(self.0.iter().map(|a| a * k).collect())
    }

    /// Parses `"2,1"` style comma separated entries.
    pub fn parse(text: &str) -> Option<DimVector> {
        text.split(',').map(|t| t.trim().parse::<usize>().ok()).collect::<Option<Vec<_>>>().map(DimVector)
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

impl std::ops::Index<usize> for DimVector {
    type Output = usize;
    fn index(&self, i: usize) -> &usize {
        &self.0[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_two_cycle() {
        let err = Quiver::new("C", &["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).unwrap_err();
        match err {
            QuiverError::Cycle(c) => {
                assert_eq!(c.len(), 3);
                assert_eq!(c.first(), c.last());
            }
            other => panic!("expected cycle, got {other:?}"),
        }
    }

    #[test]
    fn rejects_loop() {
        assert!(matches!(
            Quiver::new("L", &["1"], &[("a", "1", "1")]),
            Err(QuiverError::Cycle(_))
        ));
    }

    #[test]
    fn rejects_duplicates() {
        assert_eq!(
            Quiver::new("D", &["1", "1"], &[]).unwrap_err(),
            QuiverError::DuplicateVertex("1".into())
        );
        assert_eq!(
            Quiver::new("D", &["1", "2"], &[("a", "2", "1"), ("a", "2", "1")]).unwrap_err(),
            QuiverError::DuplicateArrow("a".into())
        );
    }

    #[test]
    fn path_enumeration_kronecker() {
        let q = presets::kronecker();
        // e1, e2, a, b
        assert_eq!(q.paths().len(), 4);
        assert_eq!(q.paths_between(1, 0).len(), 2);
        assert_eq!(q.paths_between(0, 1).len(), 0);
    }

    #[test]
    fn path_concat_and_strip() {
        let q = presets::dynkin_a(3);
        // arrows: 2->1 (index 0), 3->2 (index 1); vertex indices 0,1,2
        let p32 = q.paths_between(2, 1)[0];
        let p21 = q.paths_between(1, 0)[0];
        let p31 = q.paths_between(2, 0)[0];
        assert_eq!(q.concat(p32, p21), Some(p31));
        assert_eq!(q.concat(p21, p32), None);
        assert_eq!(q.strip_prefix(p31, p32), Some(p21));
        assert_eq!(q.strip_suffix(p31, p21), Some(p32));
        assert_eq!(q.strip_suffix(p31, p31), Some(q.trivial_path(2)));
    }

    #[test]
    fn dynkin_detection() {
        assert!(presets::dynkin_e(8).is_dynkin());
        assert!(presets::dynkin_d(5).is_dynkin());
        assert!(!presets::kronecker().is_dynkin());
        assert!(!presets::w4().is_dynkin());
        assert_eq!(presets::kronecker().kronecker_arrows(), Some(2));
        assert_eq!(presets::dynkin_a(2).kronecker_arrows(), None);
    }
}
