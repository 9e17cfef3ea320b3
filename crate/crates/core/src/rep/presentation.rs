use std::sync::Arc;

use super::construct::{direct_sum, kernel};
use super::{hom_basis, Morphism, Representation};
use crate::linalg::{Matrix, Rational};
use crate::quiver::Quiver;

/// The linear maps of every path of the quiver in one representation.
#[derive(Clone, Debug)]
pub struct PathMaps {
    maps: Vec<Matrix>,
    dims: Vec<usize>,
}

impl PathMaps {
    pub fn new(m: &Representation) -> Self {
        let q = m.quiver();
        let mut maps: Vec<Option<Matrix>> = vec![None; q.paths().len()];
        // Paths are extended one arrow at a time from their prefixes.
        let mut order: Vec<usize> = (0..q.paths().len()).collect();
        order.sort_by_key(|&p| q.path(p).len());
        for p in order {
            let path = q.path(p);
            let mat = if path.is_trivial() {
                Matrix::identity(m.dim(path.source))
            } else {
                let last = *path.arrows.last().expect("nontrivial");
                let prefix = q.strip_suffix(p, super::single_arrow_path(q, last)).expect("prefix exists");
                m.map(last).mul(maps[prefix].as_ref().expect("shorter paths first"))
            };
            maps[p] = Some(mat);
        }
        PathMaps { maps: maps.into_iter().map(|m| m.expect("all paths")).collect(), dims: m.dims().to_vec() }
    }

    pub fn get(&self, path: usize) -> &Matrix {
        &self.maps[path]
    }
}

/// One generator of the first syzygy: an element of `P_0` at `vertex`,
/// written per top generator `g` of `P_0` as a combination of paths
/// `v(g) -> vertex`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub vertex: usize,
    pub terms: Vec<Vec<(usize, Rational)>>,
}

/// A minimal projective presentation `0 -> P_1 -> P_0 -> M -> 0`.
/// `generators` lists the top of `M` (vertex and element of `M_v`), one
/// summand `P_v` of `P_0` each; `relations` lists the summands of `P_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<(usize, Vec<Rational>)>,
    pub relations: Vec<Relation>,
}

fn sum_of_projectives(q: &Arc<Quiver>, vertices: impl Iterator<Item = usize>) -> Representation {
    let parts: Vec<Representation> = vertices.map(|v| Representation::projective(q.clone(), v)).collect();
    if parts.is_empty() {
        Representation::zero(q.clone())
    } else {
        direct_sum(&parts.iter().collect::<Vec<_>>()).module
    }
}

fn sum_of_injectives(q: &Arc<Quiver>, vertices: impl Iterator<Item = usize>) -> Representation {
    let parts: Vec<Representation> = vertices.map(|v| Representation::injective(q.clone(), v)).collect();
    if parts.is_empty() {
        Representation::zero(q.clone())
    } else {
        direct_sum(&parts.iter().collect::<Vec<_>>()).module
    }
}

/// Morphism `P_{v_1} + ... + P_{v_k} -> n` sending the top of the `k`-th
/// summand to `x_k`.
fn from_projectives(gens: &[(usize, Vec<Rational>)], n: &Representation, nmaps: &PathMaps) -> Morphism {
    let q = n.quiver();
    let blocks = (0..q.n())
        .map(|t| {
            let mut cols = Vec::new();
            for (v, x) in gens {
                for &p in q.paths_between(*v, t) {
                    cols.push(nmaps.get(p).mul_vec(x));
                }
            }
            Matrix::from_columns(n.dim(t), &cols)
        })
        .collect();
    Morphism { blocks }
}

/// Generators of the top of `m`: at each vertex, unit vectors completing
/// the radical (sum of images of incoming arrows) to the whole space.
pub(crate) fn top_generators(m: &Representation) -> Vec<(usize, Vec<Rational>)> {
    let q = m.quiver();
    let mut out = Vec::new();
    for j in 0..q.n() {
        let d = m.dim(j);
        if d == 0 {
            continue;
        }
        let incoming: Vec<&Matrix> = q.arrows().iter().enumerate().filter(|(_, a)| a.target == j).map(|(k, _)| m.map(k)).collect();
        let rad = Matrix::hstack(d, &incoming);
        let aug = Matrix::hstack(d, &[&rad, &Matrix::identity(d)]);
        for c in aug.independent_columns() {
            if c >= rad.cols() {
                let mut e = vec![Rational::zero(); d];
                e[c - rad.cols()] = Rational::one();
                out.push((j, e));
            }
        }
    }
    out
}

pub fn min_projective_presentation(m: &Representation) -> Presentation {
    let q = m.quiver().clone();
    let generators = top_generators(m);
    let pres0 = Presentation { generators, relations: Vec::new() };
    let p0 = pres0.p0(&q);
    let aug = pres0.augmentation(m);
    let (k, iota) = kernel(&aug, &p0);
    let relations = top_generators(&k)
        .into_iter()
        .map(|(u, x)| {
            let coords = iota.blocks[u].mul_vec(&x);
            let mut terms = Vec::with_capacity(pres0.generators.len());
            let mut off = 0;
            for (v, _) in &pres0.generators {
                let paths = q.paths_between(*v, u);
                let t: Vec<(usize, Rational)> = paths
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !coords[off + i].is_zero())
                    .map(|(i, &p)| (p, coords[off + i].clone()))
                    .collect();
                off += paths.len();
                terms.push(t);
            }
            Relation { vertex: u, terms }
        })
        .collect();
    Presentation { generators: pres0.generators, relations }
}

impl Presentation {
    pub fn p0(&self, q: &Arc<Quiver>) -> Representation {
        sum_of_projectives(q, self.generators.iter().map(|g| g.0))
    }

    pub fn p1(&self, q: &Arc<Quiver>) -> Representation {
        sum_of_projectives(q, self.relations.iter().map(|r| r.vertex))
    }

    pub fn top_dims(&self, n: usize) -> Vec<usize> {
        let mut d = vec![0; n];
        for (v, _) in &self.generators {
            d[*v] += 1;
        }
        d
    }

    pub fn p1_top_dims(&self, n: usize) -> Vec<usize> {
        let mut d = vec![0; n];
        for r in &self.relations {
            d[r.vertex] += 1;
        }
        d
    }

    /// `P_0 -> M`.
    pub fn augmentation(&self, m: &Representation) -> Morphism {
        from_projectives(&self.generators, m, &PathMaps::new(m))
    }

    /// `f: P_1 -> P_0`.
    pub fn differential(&self, q: &Arc<Quiver>) -> Morphism {
        let blocks = (0..q.n())
            .map(|t| {
                let row_off: Vec<usize> = self
                    .generators
                    .iter()
                    .scan(0, |acc, (v, _)| {
                        let o = *acc;
                        *acc += q.paths_between(*v, t).len();
                        Some(o)
                    })
                    .collect();
                let rows: usize = self.generators.iter().map(|(v, _)| q.paths_between(*v, t).len()).sum();
                let cols: usize = self.relations.iter().map(|r| q.paths_between(r.vertex, t).len()).sum();
                let mut m = Matrix::zeros(rows, cols);
                let mut col = 0;
                for rel in &self.relations {
                    for &path in q.paths_between(rel.vertex, t) {
                        for (g, terms) in rel.terms.iter().enumerate() {
                            let gv = self.generators[g].0;
                            for (p, c) in terms {
                                let r = q.concat(*p, path).expect("composable");
                                let pos = q.paths_between(gv, t).iter().position(|&x| x == r).expect("listed");
                                let cur = m.get(row_off[g] + pos, col) + c;
                                m.set(row_off[g] + pos, col, cur);
                            }
                        }
                        col += 1;
                    }
                }
                m
            })
            .collect();
        Morphism { blocks }
    }

    /// The matrix of `Hom(P_0, N) -> Hom(P_1, N)` in the bases
    /// `+_g N_{v(g)}` and `+_h N_{v(h)}`.
    pub fn hom_matrix(&self, nmaps: &PathMaps) -> Matrix {
        let dim_at = |v: usize| nmaps.dims[v];
        let rows: usize = self.relations.iter().map(|r| dim_at(r.vertex)).sum();
        let cols: usize = self.generators.iter().map(|(v, _)| dim_at(*v)).sum();
        let mut b = Matrix::zeros(rows, cols);
        let mut r0 = 0;
        for rel in &self.relations {
            let h = dim_at(rel.vertex);
            let mut c0 = 0;
            for (g, terms) in rel.terms.iter().enumerate() {
                let w = dim_at(self.generators[g].0);
                if !terms.is_empty() && h > 0 && w > 0 {
                    let mut block = Matrix::zeros(h, w);
                    for (p, c) in terms {
                        block = block.add(&nmaps.get(*p).scale(c));
                    }
                    b.set_block(r0, c0, &block);
                }
                c0 += w;
            }
            r0 += h;
        }
        b
    }

    /// `(dim Hom(M, N), dim Ext^1(M, N))`.
    pub fn hom_ext(&self, nmaps: &PathMaps) -> (usize, usize) {
        let b = self.hom_matrix(nmaps);
        let r = b.rank();
        (b.cols() - r, b.rows() - r)
    }

    /// The morphism `P_1 -> n` with coordinates in `+_h n_{v(h)}`.
    pub fn morphism_from_p1(&self, coords: &[Rational], n: &Representation, nmaps: &PathMaps) -> Morphism {
        let mut gens = Vec::with_capacity(self.relations.len());
        let mut off = 0;
        for rel in &self.relations {
            let d = n.dim(rel.vertex);
            gens.push((rel.vertex, coords[off..off + d].to_vec()));
            off += d;
        }
        from_projectives(&gens, n, nmaps)
    }
}

pub fn hom_ext_dims(m: &Representation, n: &Representation) -> (usize, usize) {
    min_projective_presentation(m).hom_ext(&PathMaps::new(n))
}

pub fn ext1_dim(m: &Representation, n: &Representation) -> usize {
    hom_ext_dims(m, n).1
}

/// `dim Hom(M, N) - <dim M, dim N>`, with Hom from the commuting-square
/// system. Valid because path algebras are hereditary.
pub fn ext1_dim_euler(m: &Representation, n: &Representation) -> usize {
    let hom = hom_basis(m, n).len() as i64;
    let d: Vec<i64> = m.dims().iter().map(|&x| x as i64).collect();
    let e: Vec<i64> = n.dims().iter().map(|&x| x as i64).collect();
    let euler = m.quiver().euler_form(&d, &e).expect("same quiver");
    usize::try_from(hom - euler).expect("Ext dimension is nonnegative")
}

/// Auslander-Reiten translate: `tau M = ker(nu f)` for the minimal
/// presentation `P_1 --f--> P_0 -> M -> 0`, where `nu` is the Nakayama
/// functor.
pub fn tau(m: &Representation) -> Representation {
    let q = m.quiver().clone();
    let pres = min_projective_presentation(m);
    if pres.relations.is_empty() {
        return Representation::zero(q);
    }
    let nu1 = sum_of_injectives(&q, pres.relations.iter().map(|r| r.vertex));
    let nu0 = sum_of_injectives(&q, pres.generators.iter().map(|g| g.0));
    let blocks = (0..q.n())
        .map(|k| {
            let row_off: Vec<usize> = pres
                .generators
                .iter()
                .scan(0, |acc, (v, _)| {
                    let o = *acc;
                    *acc += q.paths_between(k, *v).len();
                    Some(o)
                })
                .collect();
            let mut mat = Matrix::zeros(nu0.dim(k), nu1.dim(k));
            let mut col = 0;
            for rel in &pres.relations {
                for &qpath in q.paths_between(k, rel.vertex) {
                    for (g, terms) in rel.terms.iter().enumerate() {
                        let gv = pres.generators[g].0;
                        for (p, c) in terms {
                            // delta_q goes to delta_r when q = r p.
                            if let Some(r) = q.strip_suffix(qpath, *p) {
                                let pos = q.paths_between(k, gv).iter().position(|&x| x == r).expect("listed");
                                let cur = mat.get(row_off[g] + pos, col) + c;
                                mat.set(row_off[g] + pos, col, cur);
                            }
                        }
                    }
                    col += 1;
                }
            }
            mat
        })
        .collect();
    kernel(&Morphism { blocks }, &nu1).0
}

/// `tau^- M = D tau D M`, computed over the opposite quiver.
pub fn tau_inverse(m: &Representation) -> Representation {
    let qop = Arc::new(m.quiver().opposite());
    let dm = m.dual_over(qop).expect("opposite quiver");
    tau(&dm).dual_over(m.quiver().clone()).expect("double opposite is the original quiver")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::presets;
    use crate::rep::Morphism;

    #[test]
    fn presentation_is_exact() {
        let q = Arc::new(presets::w4());
        let s3 = Representation::simple(q.clone(), 2);
        let pres = min_projective_presentation(&s3);
        assert_eq!(pres.top_dims(4), vec![0, 0, 1, 0]);
        assert_eq!(pres.p1_top_dims(4), vec![0, 1, 0, 1]);
        let f = pres.differential(&q);
        let p0 = pres.p0(&q);
        let p1 = pres.p1(&q);
        f.check(&p1, &p0).unwrap();
        let aug = pres.augmentation(&s3);
        aug.check(&p0, &s3).unwrap();
        assert!(f.is_injective());
        assert!(aug.is_surjective());
        assert!(f.then(&aug).is_zero());
    }

    #[test]
    fn kronecker_hom_and_ext() {
        let q = Arc::new(presets::kronecker());
        let p1 = Representation::projective(q.clone(), 0);
        let p2 = Representation::projective(q.clone(), 1);
        assert_eq!(hom_ext_dims(&p1, &p2), (2, 0));
        assert_eq!(hom_ext_dims(&p2, &p1), (0, 0));
        let s1 = Representation::simple(q.clone(), 0);
        let s2 = Representation::simple(q.clone(), 1);
        assert_eq!(ext1_dim(&s2, &s1), 2);
        assert_eq!(ext1_dim_euler(&s2, &s1), 2);
    }

    #[test]
    fn kronecker_tau_inverse_of_projectives() {
        let q = Arc::new(presets::kronecker());
        let p1 = Representation::projective(q.clone(), 0);
        let p2 = Representation::projective(q.clone(), 1);
        assert_eq!(tau_inverse(&p1).dims(), &[3, 2]);
        assert_eq!(tau_inverse(&p2).dims(), &[4, 3]);
        assert!(tau(&p1).is_zero());
        assert_eq!(tau(&tau_inverse(&p1)).dims(), &[1, 0]);
    }

    #[test]
    fn w4_tau_of_simple() {
        let q = Arc::new(presets::w4());
        let s3 = Representation::simple(q.clone(), 2);
        let t = tau(&s3);
        assert_eq!(t.dims(), &[0, 1, 1, 1]);
        let id = Morphism::identity(&t);
        id.check(&t, &t).unwrap();
    }
}
