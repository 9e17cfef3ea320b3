//! Minimal add(U)-approximations between pool modules.

use std::collections::HashMap;

use super::Engine;
use crate::linalg::{Matrix, Rational};
use crate::rep::{hom_basis, Morphism, Representation};

/// A map `X -> U_{j_1} + ... + U_{j_k}` (left) or
/// `U_{j_1} + ... + U_{j_k} -> Y` (right), kept as its components.
#[derive(Clone, Debug)]
pub struct Approximation {
    /// `(pool index, component morphism)` in codomain (resp. domain) order.
    pub components: Vec<(usize, Morphism)>,
    /// The sum `U'` of the component modules.
    pub middle: Representation,
    /// The assembled morphism `X -> U'` (resp. `U' -> Y`).
    pub map: Morphism,
}

impl Approximation {
    /// Multiplicity of each pool module in `U'`, sorted by index.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut m: Vec<(usize, usize)> = Vec::new();
        let mut idx: Vec<usize> = self.components.iter().map(|c| c.0).collect();
        idx.sort_unstable();
        for j in idx {
            match m.last_mut() {
                Some((k, c)) if *k == j => *c += 1,
                _ => m.push((j, 1)),
            }
        }
        m
    }
}

/// Lazily filled Hom bases between pool modules.
pub(crate) struct HomCache<'a> {
    engine: &'a Engine,
    bases: HashMap<(usize, usize), Vec<Morphism>>,
}

impl<'a> HomCache<'a> {
    pub(crate) fn new(engine: &'a Engine) -> Self {
        HomCache { engine, bases: HashMap::new() }
    }

    pub(crate) fn get(&mut self, a: usize, b: usize) -> &[Morphism] {
        let e = self.engine;
        self.bases.entry((a, b)).or_insert_with(|| hom_basis(e.module_rep(a), e.module_rep(b)))
    }
}

fn span_rank(maps: &[Morphism]) -> usize {
    if maps.is_empty() {
        return 0;
    }
    let cols: Vec<Vec<Rational>> = maps.iter().map(Morphism::flatten).collect();
    if cols[0].is_empty() {
        return 0;
    }
    Matrix::from_columns(cols[0].len(), &cols).rank()
}

fn assemble_left(engine: &Engine, x: &Representation, comps: Vec<(usize, Morphism)>) -> Approximation {
    let idx: Vec<usize> = comps.iter().map(|c| c.0).collect();
    let middle = engine.sum_rep(&idx);
    let blocks = (0..x.quiver().n())
        .map(|v| {
            let parts: Vec<&Matrix> = comps.iter().map(|c| &c.1.blocks[v]).collect();
            Matrix::vstack(x.dim(v), &parts)
        })
        .collect();
    Approximation { components: comps, middle, map: Morphism { blocks } }
}

fn assemble_right(engine: &Engine, y: &Representation, comps: Vec<(usize, Morphism)>) -> Approximation {
    let idx: Vec<usize> = comps.iter().map(|c| c.0).collect();
    let middle = engine.sum_rep(&idx);
    let blocks = (0..y.quiver().n())
        .map(|v| {
            let parts: Vec<&Matrix> = comps.iter().map(|c| &c.1.blocks[v]).collect();
            Matrix::hstack(y.dim(v), &parts)
        })
        .collect();
    Approximation { components: comps, middle, map: Morphism { blocks } }
}

/// Every map `x -> U_j` factors through the components.
fn is_left_approx(
    cache: &mut HomCache,
    comps: &[(usize, Morphism)],
    add: &[usize],
    targets: &HashMap<usize, usize>,
) -> bool {
    for &j in add {
        let mut maps = Vec::new();
        for (c, phi) in comps {
            for psi in cache.get(*c, j).to_vec() {
                maps.push(phi.then(&psi));
            }
        }
        if span_rank(&maps) != targets[&j] {
            return false;
        }
    }
    true
}

/// Minimal left `add(U)`-approximation of `x`: start from the map whose
/// components run over bases of all `Hom(x, U_j)`, then drop components
/// while every map `x -> U_j` still factors.
pub fn minimal_left_approximation(engine: &Engine, x: &Representation, add: &[usize]) -> Approximation {
    let mut cache = HomCache::new(engine);
    let mut comps: Vec<(usize, Morphism)> = Vec::new();
    let mut targets = HashMap::new();
    for &j in add {
        let basis = hom_basis(x, engine.module_rep(j));
        targets.insert(j, basis.len());
        comps.extend(basis.into_iter().map(|f| (j, f)));
    }
    let mut k = comps.len();
    while k > 0 {
        k -= 1;
        let removed = comps.remove(k);
        if !is_left_approx(&mut cache, &comps, add, &targets) {
            comps.insert(k, removed);
        }
    }
    assemble_left(engine, x, comps)
}

/// Minimal right `add(U)`-approximation of `y`, dually.
pub fn minimal_right_approximation(engine: &Engine, y: &Representation, add: &[usize]) -> Approximation {
    let mut cache = HomCache::new(engine);
    let mut comps: Vec<(usize, Morphism)> = Vec::new();
    let mut targets = HashMap::new();
    for &j in add {
        let basis = hom_basis(engine.module_rep(j), y);
        targets.insert(j, basis.len());
        comps.extend(basis.into_iter().map(|f| (j, f)));
    }
    let mut k = comps.len();
    while k > 0 {
        k -= 1;
        let removed = comps.remove(k);
        if !is_right_approx(&mut cache, &comps, add, &targets) {
            comps.insert(k, removed);
        }
    }
    assemble_right(engine, y, comps)
}

fn is_right_approx(
    cache: &mut HomCache,
    comps: &[(usize, Morphism)],
    add: &[usize],
    targets: &HashMap<usize, usize>,
) -> bool {
    for &j in add {
        let mut maps = Vec::new();
        for (c, g) in comps {
            for chi in cache.get(j, *c).to_vec() {
                maps.push(chi.then(g));
            }
        }
        if span_rank(&maps) != targets[&j] {
            return false;
        }
    }
    true
}

/// Checks the left approximation property of `approx` for `x` against
/// `add(U)`.
pub fn is_left_approximation(engine: &Engine, x: &Representation, approx: &Approximation, add: &[usize]) -> bool {
    let mut cache = HomCache::new(engine);
    let targets: HashMap<usize, usize> = add.iter().map(|&j| (j, hom_basis(x, engine.module_rep(j)).len())).collect();
    is_left_approx(&mut cache, &approx.components, add, &targets)
}

pub fn is_right_approximation(engine: &Engine, y: &Representation, approx: &Approximation, add: &[usize]) -> bool {
    let mut cache = HomCache::new(engine);
    let targets: HashMap<usize, usize> = add.iter().map(|&j| (j, hom_basis(engine.module_rep(j), y).len())).collect();
    is_right_approx(&mut cache, &approx.components, add, &targets)
}

/// Left minimality: every endomorphism `s` of `U'` with `s f = 0` lies in
/// the radical, i.e. has zero scalar blocks between copies of the same
/// module. Then `h f = f` forces `h = 1 + rad`, an automorphism.
pub fn certify_left_minimal(engine: &Engine, approx: &Approximation) -> bool {
    let mut cache = HomCache::new(engine);
    let comps = &approx.components;
    for &(jd, _) in comps {
        let mut cols = Vec::new();
        let mut same_type = Vec::new();
        for (jc, phi) in comps {
            for psi in cache.get(*jc, jd).to_vec() {
                if *jc == jd {
                    same_type.push(cols.len());
                }
                cols.push(phi.then(&psi).flatten());
            }
        }
        if !kernel_avoids(&cols, &same_type) {
            return false;
        }
    }
    true
}

/// Right minimality, dually: every `s` with `g s = 0` is radical.
pub fn certify_right_minimal(engine: &Engine, approx: &Approximation) -> bool {
    let mut cache = HomCache::new(engine);
    let comps = &approx.components;
    for &(jd, _) in comps {
        let mut cols = Vec::new();
        let mut same_type = Vec::new();
        for (jc, g) in comps {
            for chi in cache.get(jd, *jc).to_vec() {
                if *jc == jd {
                    same_type.push(cols.len());
                }
                cols.push(chi.then(g).flatten());
            }
        }
        if !kernel_avoids(&cols, &same_type) {
            return false;
        }
    }
    true
}

/// Whether every linear relation among `cols` has zero coefficients at
/// the `watched` positions.
fn kernel_avoids(cols: &[Vec<Rational>], watched: &[usize]) -> bool {
    if cols.is_empty() || watched.is_empty() {
        return true;
    }
    let rows = cols[0].len();
    let k = if rows == 0 {
        Matrix::identity(cols.len())
    } else {
        Matrix::from_columns(rows, cols).kernel_basis()
    };
    (0..k.cols()).all(|c| watched.iter().all(|&w| k.get(w, c).is_zero()))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::quiver::{presets, DimVector};

    #[test]
    fn kronecker_left_approximation_of_p1() {
        let e = Engine::for_quiver(Arc::new(presets::kronecker()), 3).unwrap();
        let p1 = e.module_by_dims(&DimVector(vec![1, 0])).unwrap();
        let p2 = e.module_by_dims(&DimVector(vec![2, 1])).unwrap();
        let a = minimal_left_approximation(&e, e.module_rep(p1), &[p2]);
        assert_eq!(a.multiplicities(), vec![(p2, 2)]);
        assert!(certify_left_minimal(&e, &a));
        assert!(is_left_approximation(&e, e.module_rep(p1), &a, &[p2]));
    }

    #[test]
    fn non_minimal_map_fails_certificate() {
        let e = Engine::for_quiver(Arc::new(presets::dynkin_a(2)), 1).unwrap();
        let p1 = e.module_by_dims(&DimVector(vec![1, 0])).unwrap();
        let p2 = e.module_by_dims(&DimVector(vec![1, 1])).unwrap();
        let f = hom_basis(e.module_rep(p1), e.module_rep(p2)).remove(0);
        let doubled = assemble_left(&e, e.module_rep(p1), vec![(p2, f.clone()), (p2, f)]);
        assert!(!certify_left_minimal(&e, &doubled));
        let single = minimal_left_approximation(&e, e.module_rep(p1), &[p2]);
        assert_eq!(single.components.len(), 1);
        assert!(certify_left_minimal(&e, &single));
    }
}
