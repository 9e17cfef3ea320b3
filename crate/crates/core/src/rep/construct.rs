use super::presentation::{min_projective_presentation, PathMaps};
use super::{Morphism, RepError, Representation};
use crate::linalg::{Matrix, Rational};

/// A direct sum with its structure maps.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub module: Representation,
    pub inclusions: Vec<Morphism>,
    pub projections: Vec<Morphism>,
}

/// Direct sum of representations over one quiver. The empty sum needs at
/// least one summand to know its quiver, so callers pass a nonempty slice.
pub fn direct_sum(parts: &[&Representation]) -> DirectSum {
    assert!(!parts.is_empty(), "direct sum needs at least one summand");
    let q = parts[0].quiver().clone();
    let n = q.n();
    let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.dim(v)).sum()).collect();
    let maps = (0..q.arrows().len())
        .map(|k| Matrix::block_diagonal(&parts.iter().map(|p| p.map(k)).collect::<Vec<_>>()))
        .collect();
    let module = Representation::new(q, dims.clone(), maps).expect("block diagonal shapes");
    let mut offsets = vec![0usize; n];
    let mut inclusions = Vec::with_capacity(parts.len());
    let mut projections = Vec::with_capacity(parts.len());
    for p in parts {
        let mut inc = Vec::with_capacity(n);
        let mut proj = Vec::with_capacity(n);
        for v in 0..n {
            let mut i = Matrix::zeros(dims[v], p.dim(v));
            i.set_block(offsets[v], 0, &Matrix::identity(p.dim(v)));
            proj.push(i.transpose());
            inc.push(i);
            offsets[v] += p.dim(v);
        }
        inclusions.push(Morphism { blocks: inc });
        projections.push(Morphism { blocks: proj });
    }
    DirectSum { module, inclusions, projections }
}

/// Kernel of `f: source -> target` with its inclusion.
pub fn kernel(f: &Morphism, source: &Representation) -> (Representation, Morphism) {
    let q = source.quiver().clone();
    let bases: Vec<Matrix> = f.blocks.iter().map(Matrix::kernel_basis).collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let rhs = source.map(k).mul(&bases[a.source]);
            bases[a.target].solve_matrix(&rhs).expect("kernel is a subrepresentation")
        })
        .collect();
    let dims = bases.iter().map(Matrix::cols).collect();
    let k = Representation::new(q, dims, maps).expect("kernel shapes");
    (k, Morphism { blocks: bases })
}

/// Cokernel of `f: source -> target` with its projection.
pub fn cokernel(f: &Morphism, target: &Representation) -> (Representation, Morphism) {
    let q = target.quiver().clone();
    let projs: Vec<Matrix> = f
        .blocks
        .iter()
        .zip(target.dims())
        .map(|(b, &d)| if b.cols() == 0 { Matrix::identity(d) } else { b.cokernel_projection() })
        .collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            // C_a pi_i = pi_j N_a, solved through transposes.
            let rhs = projs[a.target].mul(target.map(k));
            projs[a.source]
                .transpose()
                .solve_matrix(&rhs.transpose())
                .expect("image is a subrepresentation")
                .transpose()
        })
        .collect();
    let dims = projs.iter().map(Matrix::rows).collect();
    let c = Representation::new(q, dims, maps).expect("cokernel shapes");
    (c, Morphism { blocks: projs })
}

/// Given an epimorphism `rho: X -> E` and `phi: X -> Y` vanishing on
/// `ker rho`, the unique `psi` with `psi . rho = phi`.
pub(crate) fn factor_through_epi(rho: &Morphism, phi: &Morphism) -> Option<Morphism> {
    let blocks = rho
        .blocks
        .iter()
        .zip(&phi.blocks)
        .map(|(r, p)| r.transpose().solve_matrix(&p.transpose()).map(|m| m.transpose()))
        .collect::<Option<Vec<_>>>()?;
    Some(Morphism { blocks })
}

/// Pushout of `f: A -> B` and `g: A -> C`, returned as the module with
/// the maps `B -> E` and `C -> E`.
pub fn pushout(
    f: &Morphism,
    g: &Morphism,
    b: &Representation,
    c: &Representation,
) -> (Representation, Morphism, Morphism) {
    let sum = direct_sum(&[b, c]);
    let diff = f.then(&sum.inclusions[0]).add(&g.then(&sum.inclusions[1]).scale(&Rational::from_int(-1)));
    let (e, rho) = cokernel(&diff, &sum.module);
    let from_b = sum.inclusions[0].then(&rho);
    let from_c = sum.inclusions[1].then(&rho);
    (e, from_b, from_c)
}

/// `0 -> x --f--> e --g--> y -> 0`.
#[derive(Clone, Debug)]
pub struct ShortExactSequence {
    pub x: Representation,
    pub e: Representation,
    pub y: Representation,
    pub f: Morphism,
    pub g: Morphism,
}

impl ShortExactSequence {
    /// Checks both maps are morphisms, `f` is injective, `g` surjective,
    /// `g f = 0` and the dimensions add up.
    pub fn check(&self) -> Result<(), RepError> {
        self.f.check(&self.x, &self.e)?;
        self.g.check(&self.e, &self.y)?;
        let exact = self.f.is_injective()
            && self.g.is_surjective()
            && self.f.then(&self.g).is_zero()
            && (0..self.e.dims().len()).all(|v| self.x.dim(v) + self.y.dim(v) == self.e.dim(v));
        if exact { Ok(()) } else { Err(RepError::NotAMorphism("sequence is not exact".into())) }
    }

    /// True when `g` has a section, i.e. `Hom(y, e) -> Hom(y, y)` hits the
    /// identity.
    pub fn splits(&self) -> bool {
        let basis = super::hom_basis(&self.y, &self.e);
        if basis.is_empty() {
            return self.y.is_zero();
        }
        let cols: Vec<Vec<Rational>> = basis.iter().map(|s| s.then(&self.g).flatten()).collect();
        let target = Morphism::identity(&self.y).flatten();
        let m = Matrix::from_columns(target.len(), &cols);
        matches!(m.solve(&target), crate::linalg::Solution::Consistent(_))
    }
}

/// The universal extension `0 -> n -> e -> m^s -> 0` with
/// `s = dim Ext^1(m, n)`.
#[derive(Clone, Debug)]
pub struct UniversalExtension {
    pub s: usize,
    pub sequence: ShortExactSequence,
}

/// Builds the universal extension of `m` by `n` as the pushout of
/// `f^s: P_1^s -> P_0^s` along `(eta_1, ..., eta_s): P_1^s -> n`, where
/// `eta_k` runs over a basis of `Ext^1(m, n)` read off the minimal
/// projective presentation `0 -> P_1 --f--> P_0 -> m -> 0`.
pub fn universal_extension(m: &Representation, n: &Representation) -> UniversalExtension {
    let q = m.quiver().clone();
    let pres = min_projective_presentation(m);
    let nmaps = PathMaps::new(n);
    let b = pres.hom_matrix(&nmaps);
    let rows = b.rows();
    // Complement of the image of B in the space of maps P_1 -> n.
    let image_rank = b.rank();
    let aug = Matrix::hstack(rows, &[&b, &Matrix::identity(rows)]);
    let picks: Vec<usize> = aug.independent_columns().into_iter().filter(|&c| c >= b.cols()).map(|c| c - b.cols()).collect();
    let s = picks.len();
    debug_assert_eq!(s, rows - image_rank);
    if s == 0 {
        let x = n.clone();
        let y = Representation::zero(q.clone());
        let seq = ShortExactSequence {
            f: Morphism::identity(&x),
            g: Morphism::zero(&x, &y),
            e: x.clone(),
            x,
            y,
        };
        return UniversalExtension { s, sequence: seq };
    }
    let p0 = pres.p0(&q);
    let p1 = pres.p1(&q);
    let f = pres.differential(&q);
    let aug_map = pres.augmentation(m);
    // eta_k as morphisms P_1 -> n.
    let etas: Vec<Morphism> = picks
        .iter()
        .map(|&unit| {
            let mut coords = vec![Rational::zero(); rows];
            coords[unit] = Rational::one();
            pres.morphism_from_p1(&coords, n, &nmaps)
        })
        .collect();
    let p1s = direct_sum(&vec![&p1; s]);
    let p0s = direct_sum(&vec![&p0; s]);
    let ms = direct_sum(&vec![m; s]);
    let mut fs = Morphism::zero(&p1s.module, &p0s.module);
    let mut h = Morphism::zero(&p1s.module, n);
    let mut pis = Morphism::zero(&p0s.module, &ms.module);
    for k in 0..s {
        fs = fs.add(&p1s.projections[k].then(&f).then(&p0s.inclusions[k]));
        h = h.add(&p1s.projections[k].then(&etas[k]));
        pis = pis.add(&p0s.projections[k].then(&aug_map).then(&ms.inclusions[k]));
    }
    let (e, p0_to_e, n_to_e) = pushout(&fs, &h, &p0s.module, n);
    // e -> m^s is induced by (pi^s, 0) on P_0^s + n.
    let sum = direct_sum(&[&p0s.module, n]);
    let rho_blocks: Vec<Matrix> = (0..q.n())
        .map(|v| Matrix::hstack(e.dim(v), &[&p0_to_e.blocks[v], &n_to_e.blocks[v]]))
        .collect();
    let rho = Morphism { blocks: rho_blocks };
    let phi = sum.projections[0].then(&pis);
    let g = factor_through_epi(&rho, &phi).expect("pushout property");
    let sequence = ShortExactSequence { x: n.clone(), e, y: ms.module, f: n_to_e, g };
    UniversalExtension { s, sequence }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::quiver::presets;

    #[test]
    fn kernel_and_cokernel_of_inclusion() {
        let q = Arc::new(presets::dynkin_a(2));
        // S1 = P1 -> P2 is the inclusion at vertex 1.
        let p1 = Representation::projective(q.clone(), 0);
        let p2 = Representation::projective(q.clone(), 1);
        let basis = super::super::hom_basis(&p1, &p2);
        assert_eq!(basis.len(), 1);
        let (k, _) = kernel(&basis[0], &p1);
        assert!(k.is_zero());
        let (c, proj) = cokernel(&basis[0], &p2);
        assert_eq!(c.dims(), &[0, 1]);
        proj.check(&p2, &c).unwrap();
    }

    #[test]
    fn kronecker_universal_extension() {
        let q = Arc::new(presets::kronecker());
        let s2 = Representation::simple(q.clone(), 1);
        let s1 = Representation::simple(q.clone(), 0);
        let u = universal_extension(&s2, &s1);
        assert_eq!(u.s, 2);
        u.sequence.check().unwrap();
        assert_eq!(u.sequence.e.dims(), &[1, 2]);
        assert!(!u.sequence.splits());
    }

    #[test]
    fn split_sequence_detected() {
        let q = Arc::new(presets::dynkin_a(2));
        let s1 = Representation::simple(q.clone(), 0);
        let s2 = Representation::simple(q.clone(), 1);
        let sum = direct_sum(&[&s1, &s2]);
        let seq = ShortExactSequence {
            x: s1.clone(),
            e: sum.module.clone(),
            y: s2.clone(),
            f: sum.inclusions[0].clone(),
            g: sum.projections[1].clone(),
        };
        seq.check().unwrap();
        assert!(seq.splits());
    }
}
