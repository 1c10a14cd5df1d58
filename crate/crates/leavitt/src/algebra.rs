//! Exact arithmetic on finite sums `Σ r_{μ,ν}·1_{Z(μ,ν)}`, viewed as
//! functions on the graph groupoid.
//!
//! Elements are kept in *normal form*: all ν legs share one length `l`, the
//! `(μ,ν)` keys are distinct (hence the cylinders pairwise disjoint) and no
//! coefficient is zero. The common length is the maximum over the
//! constructing terms; refinement of a shorter term replaces `1_{Z(μ,ν)}` by
//! `Σ_τ 1_{Z(μτ,ντ)}` over all `τ ∈ s(ν)E^{l−|ν|}`, which always exists in a
//! row-finite graph without sources.

use crate::graph::{Graph, VertexId};
use crate::groupoid::{ArrowCylinder, ArrowTriple};
use crate::path::FinPath;
use crate::ring::{CoeffError, RingKind, RingScalar};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("term legs must share a source vertex")]
    SourceMismatch,
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error("element is not diagonal")]
    NotDiagonal,
}

/// Degree of an element of the ℤ-graded algebra.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Degree {
    Homogeneous(i64),
    Mixed,
}

/// An element in normal form. Structural equality (`==`) compares normal
/// forms at their stored ν-lengths; semantic equality across lengths is
/// [`AlgebraElement::equals`], which renormalizes to the larger length first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraElement {
    ring: RingKind,
    nu_len: usize,
    terms: BTreeMap<ArrowCylinder, RingScalar>,
}

fn cadd(a: &RingScalar, b: &RingScalar) -> RingScalar {
    a.add(b).expect("element coefficients share one ring")
}

fn cmul(a: &RingScalar, b: &RingScalar) -> RingScalar {
    a.mul(b).expect("element coefficients share one ring")
}

impl AlgebraElement {
    pub fn zero(ring: RingKind) -> AlgebraElement {
        AlgebraElement { ring, nu_len: 0, terms: BTreeMap::new() }
    }

    /// Builds the normal form of `Σ r·1_{Z(μ,ν)}` from raw terms.
    pub fn from_terms<I>(g: &Graph, ring: RingKind, raw: I) -> Result<AlgebraElement, AlgebraError>
    where
        I: IntoIterator<Item = (FinPath, FinPath, RingScalar)>,
    {
        let mut kept: Vec<(FinPath, FinPath, RingScalar)> = Vec::new();
        for (mu, nu, r) in raw {
            if mu.source() != nu.source() {
                return Err(AlgebraError::SourceMismatch);
            }
            if r.kind() != ring {
                return Err(AlgebraError::Coeff(CoeffError::MixedRings));
            }
            if !r.is_zero() {
                kept.push((mu, nu, r));
            }
        }
        let nu_len = kept.iter().map(|(_, nu, _)| nu.len()).max().unwrap_or(0);
        let mut terms: BTreeMap<ArrowCylinder, RingScalar> = BTreeMap::new();
        for (mu, nu, r) in kept {
            for tau in FinPath::vertex(nu.source()).extensions(g, nu_len - nu.len()) {
                let key = ArrowCylinder::new(
                    mu.concat(g, &tau).expect("extension matches source"),
                    nu.concat(g, &tau).expect("extension matches source"),
                )
                .expect("refined legs share a source");
                match terms.entry(key) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(r.clone());
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let sum = cadd(e.get(), &r);
                        if sum.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = sum;
                        }
                    }
                }
            }
        }
        if terms.is_empty() {
            return Ok(AlgebraElement::zero(ring));
        }
        Ok(AlgebraElement { ring, nu_len, terms })
    }

    /// The indicator `1_{Z(μ,ν)}`.
    pub fn indicator(g: &Graph, ring: RingKind, cyl: &ArrowCylinder) -> AlgebraElement {
        AlgebraElement::from_terms(
            g,
            ring,
            [(cyl.mu().clone(), cyl.nu().clone(), RingScalar::one(ring))],
        )
        .expect("cylinder legs share a source")
    }

    /// The vertex idempotent `p_v = 1_{Z(v)}`.
    pub fn vertex_idem(g: &Graph, ring: RingKind, v: VertexId) -> AlgebraElement {
        AlgebraElement::indicator(g, ring, &ArrowCylinder::unit(FinPath::vertex(v)))
    }

    /// The edge generator `s_e = 1_{Z(e, s(e))}`.
    pub fn edge_gen(g: &Graph, ring: RingKind, e: crate::graph::EdgeId) -> AlgebraElement {
        let mu = FinPath::edge(g, e);
        let nu = FinPath::vertex(g.source(e));
        AlgebraElement::indicator(g, ring, &ArrowCylinder::new(mu, nu).unwrap())
    }

    /// The ghost generator `s_{e*} = 1_{Z(s(e), e)}`.
    pub fn ghost_gen(g: &Graph, ring: RingKind, e: crate::graph::EdgeId) -> AlgebraElement {
        let mu = FinPath::vertex(g.source(e));
        let nu = FinPath::edge(g, e);
        AlgebraElement::indicator(g, ring, &ArrowCylinder::new(mu, nu).unwrap())
    }

    pub fn ring(&self) -> RingKind {
        self.ring
    }

    pub fn nu_len(&self) -> usize {
        self.nu_len
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ArrowCylinder, &RingScalar)> {
        self.terms.iter()
    }

    pub fn support_cylinders(&self) -> Vec<ArrowCylinder> {
        self.terms.keys().cloned().collect()
    }

    /// Renormalizes to a (larger or equal) common ν-length.
    pub fn at_depth(&self, g: &Graph, l: usize) -> AlgebraElement {
        assert!(l >= self.nu_len, "normal forms only refine downward");
        if l == self.nu_len || self.is_zero() {
            return self.clone();
        }
        AlgebraElement::from_terms(
            g,
            self.ring,
            self.terms.iter().flat_map(|(cyl, r)| {
                FinPath::vertex(cyl.nu().source())
                    .extensions(g, l - self.nu_len)
                    .into_iter()
                    .map(move |tau| {
                        (
                            cyl.mu().concat(g, &tau).unwrap(),
                            cyl.nu().concat(g, &tau).unwrap(),
                            r.clone(),
                        )
                    })
            }),
        )
        .expect("refinement preserves validity")
    }

    /// Semantic equality: renormalize both sides to the larger ν-length,
    /// then compare normal forms structurally.
    pub fn equals(&self, g: &Graph, other: &AlgebraElement) -> bool {
        if self.ring != other.ring {
            return false;
        }
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        let l = self.nu_len.max(other.nu_len);
        self.at_depth(g, l).terms == other.at_depth(g, l).terms
    }

    pub fn add(&self, g: &Graph, other: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.ring, other.ring, "operands must share a ring");
        AlgebraElement::from_terms(
            g,
            self.ring,
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(c, r)| (c.mu().clone(), c.nu().clone(), r.clone())),
        )
        .expect("normal forms are valid term lists")
    }

    pub fn neg(&self) -> AlgebraElement {
        AlgebraElement {
            ring: self.ring,
            nu_len: self.nu_len,
            terms: self.terms.iter().map(|(c, r)| (c.clone(), r.neg())).collect(),
        }
    }

    pub fn sub(&self, g: &Graph, other: &AlgebraElement) -> AlgebraElement {
        self.add(g, &other.neg())
    }

    pub fn scalar_mul(&self, r: &RingScalar) -> AlgebraElement {
        assert_eq!(self.ring, r.kind(), "scalar must come from the element ring");
        if r.is_zero() {
            return AlgebraElement::zero(self.ring);
        }
        AlgebraElement {
            ring: self.ring,
            nu_len: self.nu_len,
            terms: self.terms.iter().map(|(c, s)| (c.clone(), cmul(r, s))).collect(),
        }
    }

    /// Convolution: the bilinear extension of
    /// `Z(μ,ν)Z(β,γ) = Z(μβ′,γ)` if `β = νβ′`, `Z(μ,γν′)` if `ν = βν′`,
    /// and `∅` otherwise.
    pub fn mul(&self, g: &Graph, other: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.ring, other.ring, "operands must share a ring");
        let mut raw = Vec::new();
        for (c1, r1) in &self.terms {
            for (c2, r2) in &other.terms {
                if let Some(beta1) = c2.mu().strip_prefix(g, c1.nu()) {
                    raw.push((
                        c1.mu().concat(g, &beta1).unwrap(),
                        c2.nu().clone(),
                        cmul(r1, r2),
                    ));
                } else if let Some(nu1) = c1.nu().strip_prefix(g, c2.mu()) {
                    raw.push((
                        c1.mu().clone(),
                        c2.nu().concat(g, &nu1).unwrap(),
                        cmul(r1, r2),
                    ));
                }
            }
        }
        AlgebraElement::from_terms(g, self.ring, raw).expect("products preserve validity")
    }

    /// Involution: `(μ,ν,r) ↦ (ν,μ, r̄)`, renormalized.
    pub fn star(&self, g: &Graph) -> AlgebraElement {
        AlgebraElement::from_terms(
            g,
            self.ring,
            self.terms
                .iter()
                .map(|(c, r)| (c.nu().clone(), c.mu().clone(), r.conj())),
        )
        .expect("starring preserves validity")
    }

    /// `degree(0)` is reported as `Homogeneous(0)` by convention.
    pub fn degree(&self) -> Degree {
        let mut degrees = self.terms.keys().map(|c| c.degree());
        match degrees.next() {
            None => Degree::Homogeneous(0),
            Some(first) => {
                if degrees.all(|d| d == first) {
                    Degree::Homogeneous(first)
                } else {
                    Degree::Mixed
                }
            }
        }
    }

    /// The degree-`k` part; the zero element belongs to every component.
    pub fn homogeneous_component(&self, k: i64) -> AlgebraElement {
        let terms: BTreeMap<_, _> = self
            .terms
            .iter()
            .filter(|(c, _)| c.degree() == k)
            .map(|(c, r)| (c.clone(), r.clone()))
            .collect();
        if terms.is_empty() {
            AlgebraElement::zero(self.ring)
        } else {
            AlgebraElement { ring: self.ring, nu_len: self.nu_len, terms }
        }
    }

    pub fn is_diagonal(&self) -> bool {
        self.terms.keys().all(|c| c.is_diagonal())
    }

    /// For diagonal elements: the unit-cylinder prefixes with nonzero
    /// coefficient, at the normal form's ν-length.
    pub fn support_units(&self) -> Result<BTreeSet<FinPath>, AlgebraError> {
        if !self.is_diagonal() {
            return Err(AlgebraError::NotDiagonal);
        }
        Ok(self.terms.keys().map(|c| c.mu().clone()).collect())
    }

    /// Evaluates the element as a function at a groupoid arrow. By
    /// disjointness at most one term contains the arrow.
    pub fn evaluate(&self, g: &Graph, arrow: &ArrowTriple) -> RingScalar {
        let mut acc = RingScalar::zero(self.ring);
        for (c, r) in &self.terms {
            if c.contains(g, arrow) {
                acc = cadd(&acc, r);
            }
        }
        acc
    }

    /// Value at the unit arrow of an infinite path.
    pub fn evaluate_unit(&self, g: &Graph, x: &crate::path::LassoPath) -> RingScalar {
        self.evaluate(g, &ArrowTriple::unit(x.clone()))
    }
}

/// The canonical Leavitt family `{1_{Z(v)}, 1_{Z(e,s(e))}, 1_{Z(s(e),e)}}`.
pub fn leavitt_family(
    g: &Graph,
    ring: RingKind,
) -> (Vec<AlgebraElement>, Vec<AlgebraElement>, Vec<AlgebraElement>) {
    let p: Vec<_> = g.vertices().map(|v| AlgebraElement::vertex_idem(g, ring, v)).collect();
    let s: Vec<_> = g.edges().map(|e| AlgebraElement::edge_gen(g, ring, e)).collect();
    let t: Vec<_> = g.edges().map(|e| AlgebraElement::ghost_gen(g, ring, e)).collect();
    (p, s, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn int(n: i64) -> RingScalar {
        RingScalar::from_i64(RingKind::Int, n)
    }

    fn path(g: &Graph, names: &[&str]) -> FinPath {
        if names.is_empty() {
            panic!("use vertex()");
        }
        let edges: Vec<_> = names.iter().map(|n| g.edge_by_name(n).unwrap()).collect();
        FinPath::from_edges(g, &edges).unwrap()
    }

    fn vertex(g: &Graph, name: &str) -> FinPath {
        FinPath::vertex(g.vertex_by_name(name).unwrap())
    }

    fn ind(g: &Graph, mu: FinPath, nu: FinPath) -> AlgebraElement {
        AlgebraElement::indicator(g, RingKind::Int, &ArrowCylinder::new(mu, nu).unwrap())
    }

    #[test]
    fn normal_form_refines_and_merges() {
        // 1_{Z(v)} + 1_{Z(a,a)} normalizes to 2·1_{Z(a,a)} + 1·1_{Z(b,b)}:
        // the vertex term expands along (L4) to Z(a,a) + Z(b,b) first.
        let g = corpus::g_2loop();
        let v = vertex(&g, "v");
        let a = path(&g, &["a"]);
        let f = AlgebraElement::from_terms(
            &g,
            RingKind::Int,
            [
                (v.clone(), v.clone(), int(1)),
                (a.clone(), a.clone(), int(1)),
            ],
        )
        .unwrap();
        assert_eq!(f.nu_len(), 1);
        let b = path(&g, &["b"]);
        let expect: Vec<(FinPath, FinPath, RingScalar)> = vec![
            (a.clone(), a.clone(), int(2)),
            (b.clone(), b.clone(), int(1)),
        ];
        let expect = AlgebraElement::from_terms(&g, RingKind::Int, expect).unwrap();
        assert_eq!(f, expect);
    }

    #[test]
    fn cancellation_gives_zero() {
        let g = corpus::g_2loop();
        let a = path(&g, &["a"]);
        let b = path(&g, &["b"]);
        let f = AlgebraElement::from_terms(
            &g,
            RingKind::Int,
            [
                (a.clone(), b.clone(), int(1)),
                (a.clone(), b.clone(), int(-1)),
            ],
        )
        .unwrap();
        assert!(f.is_zero());
    }

    #[test]
    fn already_normal_is_untouched() {
        let g = corpus::g_loop();
        let e = path(&g, &["e"]);
        let v = vertex(&g, "v");
        let f = ind(&g, e.clone(), v.clone());
        assert_eq!(f.nu_len(), 0);
        assert_eq!(f.term_count(), 1);
    }

    #[test]
    fn source_mismatch_rejected() {
        let g = corpus::g_cycle2();
        let e = path(&g, &["e"]);
        let f = path(&g, &["f"]);
        // s(e) = v, s(f) = u.
        assert_eq!(
            AlgebraElement::from_terms(&g, RingKind::Int, [(e, f, int(1))]),
            Err(AlgebraError::SourceMismatch)
        );
    }

    #[test]
    fn product_rule_cases() {
        let g = corpus::g_2loop();
        let a = path(&g, &["a"]);
        let b = path(&g, &["b"]);
        let v = vertex(&g, "v");
        // 1_{Z(a,b)} * 1_{Z(b,v)} = 1_{Z(a,v)}
        let lhs = ind(&g, a.clone(), b.clone()).mul(&g, &ind(&g, b.clone(), v.clone()));
        assert!(lhs.equals(&g, &ind(&g, a.clone(), v.clone())));
        // 1_{Z(v,a)} * 1_{Z(b,v)} = 0
        let zero = ind(&g, v.clone(), a.clone()).mul(&g, &ind(&g, b.clone(), v.clone()));
        assert!(zero.is_zero());
        // local unit
        let f = ind(&g, a.clone(), b.clone());
        let unit = AlgebraElement::vertex_idem(&g, RingKind::Int, g.vertex_by_name("v").unwrap());
        assert!(f.mul(&g, &unit).equals(&g, &f));
    }

    #[test]
    fn star_formulas() {
        let g = corpus::g_2loop();
        let a = path(&g, &["a"]);
        let b = path(&g, &["b"]);
        let f = ind(&g, a.clone(), b.clone());
        assert!(f.star(&g).equals(&g, &ind(&g, b.clone(), a.clone())));

        let v = vertex(&g, "v");
        let z = AlgebraElement::from_terms(
            &g,
            RingKind::Gauss,
            [(a.clone(), v.clone(), RingScalar::gauss(2, 1))],
        )
        .unwrap();
        let zs = z.star(&g);
        let expect = AlgebraElement::from_terms(
            &g,
            RingKind::Gauss,
            [(v.clone(), a.clone(), RingScalar::gauss(2, -1))],
        )
        .unwrap();
        assert!(zs.equals(&g, &expect));
    }

    #[test]
    fn addition_and_scalars() {
        let g = corpus::g_2loop();
        let a = path(&g, &["a"]);
        let b = path(&g, &["b"]);
        let v = vertex(&g, "v");
        let f = ind(&g, a.clone(), b.clone());
        assert!(f.add(&g, &f.neg()).is_zero());
        assert!(f.scalar_mul(&int(0)).is_zero());
        // 1_{Z(a,a)} + 1_{Z(b,b)} = 1_{Z(v)} after renormalization.
        let sum = ind(&g, a.clone(), a.clone()).add(&g, &ind(&g, b.clone(), b.clone()));
        let unit = ind(&g, v.clone(), v.clone());
        assert!(sum.equals(&g, &unit));
        assert_ne!(sum, unit, "structural forms differ across ν-lengths");
    }

    #[test]
    fn degrees() {
        let g = corpus::g_2loop();
        let a = path(&g, &["a"]);
        let ab = path(&g, &["a", "b"]);
        let v = vertex(&g, "v");
        assert_eq!(ind(&g, ab, a.clone()).degree(), Degree::Homogeneous(1));
        let mixed = ind(&g, a.clone(), v.clone()).add(&g, &ind(&g, v.clone(), a.clone()));
        assert_eq!(mixed.degree(), Degree::Mixed);
        assert_eq!(AlgebraElement::zero(RingKind::Int).degree(), Degree::Homogeneous(0));
        // any diagonal is 0-graded
        let d = ind(&g, a.clone(), a.clone()).scalar_mul(&int(3));
        assert_eq!(d.degree(), Degree::Homogeneous(0));
        // components reassemble
        let f = mixed.add(&g, &d);
        let mut back = AlgebraElement::zero(RingKind::Int);
        for k in -3..=3 {
            back = back.add(&g, &f.homogeneous_component(k));
        }
        assert!(back.equals(&g, &f));
    }

    #[test]
    fn diagonal_and_support() {
        let g = corpus::g_2loop();
        let a = path(&g, &["a"]);
        let b = path(&g, &["b"]);
        let d = ind(&g, a.clone(), a.clone())
            .add(&g, &ind(&g, b.clone(), b.clone()).scalar_mul(&int(2)));
        assert!(d.is_diagonal());
        assert!(!ind(&g, a.clone(), b.clone()).is_diagonal());
        let supp = ind(&g, a.clone(), a.clone()).support_units().unwrap();
        assert_eq!(supp.into_iter().collect::<Vec<_>>(), vec![a.clone()]);
        assert!(AlgebraElement::zero(RingKind::Int).support_units().unwrap().is_empty());
        assert_eq!(
            ind(&g, a, b).support_units(),
            Err(AlgebraError::NotDiagonal)
        );
    }

    #[test]
    fn evaluation() {
        let g = corpus::g_2loop();
        let a = path(&g, &["a"]);
        let b = path(&g, &["b"]);
        let f = ind(&g, a.clone(), b.clone());
        let a_inf = crate::path::LassoPath::cycle_only(&g, a.clone()).unwrap();
        let y = crate::path::LassoPath::new(&g, b.clone(), a.clone()).unwrap();
        let arrow = ArrowTriple::new(&g, a_inf.clone(), 0, y).unwrap();
        assert_eq!(f.evaluate(&g, &arrow), int(1));
        assert_eq!(f.evaluate(&g, &ArrowTriple::unit(a_inf)), int(0));
    }
}
