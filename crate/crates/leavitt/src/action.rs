//! Normalizers of the diagonal and the partial action they induce on the
//! infinite-path space.
//!
//! An element `n` normalizes the diagonal when `n d n*` and `n* d n` stay
//! diagonal for every diagonal `d`. Each normalizer acts on its domain
//! `dom(n) = supp(n*n)` by prefix rewriting: on the cylinder of a ν-leg the
//! action is `x ↦ μ·σ^{|ν|}(x)`. Membership is decided by conjugating unit
//! cylinders at depth `L* = l + 2·max|μ|` with a stabilization re-check at
//! `L*+1`; the acceptance suite cross-validates this bound against deeper
//! brute force.

use crate::algebra::{AlgebraElement, Degree};
use crate::graph::Graph;
use crate::groupoid::{is_singleton_cylinder, sample_tail, ArrowCylinder};
use crate::path::{FinPath, LassoPath};
use crate::ring::{RingKind, RingScalar};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ActionError {
    #[error("element is not a normalizer of the diagonal")]
    NotANormalizer,
    #[error("two terms over ν = `{0}` rewrite a sample path differently")]
    InconsistentAction(String),
    #[error("path lies outside the domain of the partial map")]
    OutsideDomain,
    #[error("compression produced more than one term")]
    MalformedCompression,
    #[error("element is not 0-graded")]
    NotZeroGraded,
}

/// Decides membership in `N(E)`.
pub fn is_normalizer(g: &Graph, n: &AlgebraElement) -> bool {
    if n.is_zero() {
        return true;
    }
    let l = n.nu_len();
    let mu_max = n.terms().map(|(c, _)| c.mu().len()).max().unwrap_or(0);
    let depth = l + 2 * mu_max;
    conjugates_stay_diagonal(g, n, depth) && conjugates_stay_diagonal(g, n, depth + 1)
}

/// Checks `n·1_{Z(τ)}·n* ∈ D` and `n*·1_{Z(τ)}·n ∈ D` for every `τ` of the
/// given length. Only τ extending a ν-leg (resp. μ-leg) can conjugate to a
/// nonzero element, so the enumeration is restricted accordingly.
pub(crate) fn conjugates_stay_diagonal(g: &Graph, n: &AlgebraElement, depth: usize) -> bool {
    let star = n.star(g);
    let mut taus: BTreeSet<FinPath> = BTreeSet::new();
    for (c, _) in n.terms() {
        for t in c.nu().extensions(g, depth - c.nu().len()) {
            taus.insert(t);
        }
        if depth >= c.mu().len() {
            for t in c.mu().extensions(g, depth - c.mu().len()) {
                taus.insert(t);
            }
        }
    }
    for tau in taus {
        let d = AlgebraElement::indicator(g, n.ring(), &ArrowCylinder::unit(tau));
        if !n.mul(g, &d).mul(g, &star).is_diagonal() {
            return false;
        }
        if !star.mul(g, &d).mul(g, n).is_diagonal() {
            return false;
        }
    }
    true
}

/// A checked normalizer. The product and star of normalizers are again
/// normalizers, so those constructions skip the decision procedure.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Normalizer {
    elem: AlgebraElement,
}

impl Normalizer {
    pub fn check(g: &Graph, elem: AlgebraElement) -> Result<Normalizer, ActionError> {
        if is_normalizer(g, &elem) {
            Ok(Normalizer { elem })
        } else {
            Err(ActionError::NotANormalizer)
        }
    }

    /// Cylinder indicators normalize the diagonal: conjugating a unit
    /// cylinder lands on a unit cylinder or vanishes.
    pub fn cylinder(g: &Graph, ring: RingKind, cyl: &ArrowCylinder) -> Normalizer {
        Normalizer { elem: AlgebraElement::indicator(g, ring, cyl) }
    }

    /// Diagonal elements normalize the diagonal.
    pub fn diagonal(elem: AlgebraElement) -> Normalizer {
        debug_assert!(elem.is_diagonal());
        Normalizer { elem }
    }

    pub fn element(&self) -> &AlgebraElement {
        &self.elem
    }

    pub fn into_element(self) -> AlgebraElement {
        self.elem
    }

    pub fn star(&self, g: &Graph) -> Normalizer {
        Normalizer { elem: self.elem.star(g) }
    }

    pub fn mul(&self, g: &Graph, other: &Normalizer) -> Normalizer {
        Normalizer { elem: self.elem.mul(g, &other.elem) }
    }

    pub fn scalar_mul(&self, r: &RingScalar) -> Normalizer {
        Normalizer { elem: self.elem.scalar_mul(r) }
    }

    /// `dom(n) = supp(n*n)` as unit-cylinder prefixes at the normal form's
    /// ν-length of `n*n`.
    pub fn dom(&self, g: &Graph) -> BTreeSet<FinPath> {
        self.elem
            .star(g)
            .mul(g, &self.elem)
            .support_units()
            .expect("n*n is diagonal for a normalizer")
    }

    /// `ran(n) = supp(nn*) = dom(n*)`.
    pub fn ran(&self, g: &Graph) -> BTreeSet<FinPath> {
        self.star(g).dom(g)
    }

    /// The partial prefix-rewriting map realizing `α_n`.
    ///
    /// Emits one rule per ν-leg whose cylinder lies in `dom(n)`, using the
    /// lexicographically first μ over that ν; every other term over the same
    /// ν is re-derived on a sample path and must agree.
    pub fn alpha(&self, g: &Graph) -> Result<PartialMap, ActionError> {
        if self.elem.is_zero() {
            return Ok(PartialMap { rules: Vec::new() });
        }
        let dom = self.dom(g);
        let dom_len = dom.iter().map(|p| p.len()).max().unwrap_or(0);
        let mut rules: Vec<RewriteRule> = Vec::new();
        let mut nus: Vec<FinPath> = self.elem.terms().map(|(c, _)| c.nu().clone()).collect();
        nus.dedup();
        for nu in nus {
            let exts = nu.extensions(g, dom_len.saturating_sub(nu.len()));
            let covered = exts.iter().filter(|t| dom.contains(*t)).count();
            if covered == 0 {
                continue;
            }
            debug_assert_eq!(
                covered,
                exts.len(),
                "a ν-cylinder is either inside dom(n) or disjoint from it"
            );
            let mut over_nu = self
                .elem
                .terms()
                .filter(|(c, _)| c.nu() == &nu)
                .map(|(c, _)| c.mu().clone());
            let mu = over_nu.next().expect("ν came from a term");
            // Consistency guard: a genuine normalizer rewrites every path of
            // Z(ν) the same way regardless of the chosen term.
            let sample = sample_tail(g, nu.source())
                .prepend(g, &nu)
                .expect("ν extends its own source tail");
            let image = prepend_shift(g, &mu, nu.len(), &sample);
            for other in over_nu {
                let other_image = prepend_shift(g, &other, nu.len(), &sample);
                if other_image != image {
                    return Err(ActionError::InconsistentAction(format!("{nu}")));
                }
            }
            rules.push(RewriteRule { input: nu, output: mu });
        }
        Ok(PartialMap { rules })
    }
}

fn prepend_shift(g: &Graph, out: &FinPath, cut: usize, x: &LassoPath) -> LassoPath {
    x.shift(g, cut).prepend(g, out).expect("rule legs share a source")
}

/// A rewrite rule `ν₀ → μ₀`, acting by `x ↦ μ₀·σ^{|ν₀|}(x)` on `Z(ν₀)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RewriteRule {
    input: FinPath,
    output: FinPath,
}

impl RewriteRule {
    pub fn input(&self) -> &FinPath {
        &self.input
    }

    pub fn output(&self) -> &FinPath {
        &self.output
    }

    pub fn lag(&self) -> i64 {
        self.output.len() as i64 - self.input.len() as i64
    }
}

/// A partial prefix-rewriting homeomorphism with pairwise disjoint rule
/// domains.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartialMap {
    rules: Vec<RewriteRule>,
}

impl PartialMap {
    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// The rule whose domain cylinder contains `x`, if any.
    pub fn rule_for(&self, g: &Graph, x: &LassoPath) -> Option<&RewriteRule> {
        self.rules.iter().find(|r| x.extends(g, &r.input))
    }

    /// Applies the map: `x ↦ μ₀·σ^{|ν₀|}(x)` in canonical form.
    pub fn apply(&self, g: &Graph, x: &LassoPath) -> Result<LassoPath, ActionError> {
        let rule = self.rule_for(g, x).ok_or(ActionError::OutsideDomain)?;
        Ok(prepend_shift(g, &rule.output, rule.input.len(), x))
    }

    /// The inverse map (rules reversed); for maps obtained from a normalizer
    /// this realizes `α_{n*} = α_n⁻¹`.
    pub fn inverse(&self) -> PartialMap {
        PartialMap {
            rules: self
                .rules
                .iter()
                .map(|r| RewriteRule { input: r.output.clone(), output: r.input.clone() })
                .collect(),
        }
    }

    /// The composition `d ∘ α` of a diagonal element with the map, as a
    /// diagonal element supported in the map's domain: each unit cylinder of
    /// `d` is pulled back through every rule.
    pub fn pullback_diagonal(&self, g: &Graph, d: &AlgebraElement) -> AlgebraElement {
        let mut raw = Vec::new();
        for (cyl, r) in d.terms() {
            let tau = cyl.mu();
            for rule in &self.rules {
                if let Some(rest) = tau.strip_prefix(g, &rule.output) {
                    // τ = out·τ′: pulls back to Z(in·τ′)
                    let back = rule.input.concat(g, &rest).expect("rule legs compose");
                    raw.push((back.clone(), back, r.clone()));
                } else if rule.output.extends(g, tau) {
                    // Z(out) ⊆ Z(τ): the whole rule domain maps into Z(τ)
                    raw.push((rule.input.clone(), rule.input.clone(), r.clone()));
                }
            }
        }
        AlgebraElement::from_terms(g, d.ring(), raw).expect("pullbacks are diagonal")
    }
}

/// An isolated infinite path together with a witness depth `k` for which
/// `Z(x(0,k)) = {x}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IsolatedPoint {
    point: LassoPath,
    witness: usize,
}

impl IsolatedPoint {
    /// Finds the least witness depth, if the path is isolated. Source
    /// vertices of `x(0,k)` repeat with period `|cycle|` past the prefix, so
    /// scanning `k ≤ |prefix| + |cycle|` is exhaustive.
    pub fn locate(g: &Graph, x: &LassoPath) -> Option<IsolatedPoint> {
        (0..=x.description_size())
            .find(|&k| is_singleton_cylinder(g, &x.unroll(g, k)))
            .map(|witness| IsolatedPoint { point: x.clone(), witness })
    }

    pub fn point(&self) -> &LassoPath {
        &self.point
    }

    pub fn witness(&self) -> usize {
        self.witness
    }

    /// The indicator idempotent `p_x = 1_{Z(x(0,k))}`.
    pub fn indicator(&self, g: &Graph, ring: RingKind) -> AlgebraElement {
        AlgebraElement::indicator(
            g,
            ring,
            &ArrowCylinder::unit(self.point.unroll(g, self.witness)),
        )
    }
}

/// Result of compressing by an isolated-path idempotent.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Compression {
    Zero,
    Single { coeff: RingScalar, degree: i64 },
}

/// Computes `p_x·n·p_x`. For a normalizer this is `r·1_{{(x,k,x)}}` or zero;
/// more than one normal-form term signals an implementation bug upstream.
pub fn compress(
    g: &Graph,
    x: &IsolatedPoint,
    n: &AlgebraElement,
) -> Result<Compression, ActionError> {
    let p = x.indicator(g, n.ring());
    let pnp = p.mul(g, n).mul(g, &p);
    if pnp.is_zero() {
        return Ok(Compression::Zero);
    }
    if pnp.term_count() != 1 {
        return Err(ActionError::MalformedCompression);
    }
    let (cyl, coeff) = pnp.terms().next().expect("one term");
    Ok(Compression::Single { coeff: coeff.clone(), degree: cyl.degree() })
}

/// For 0-graded `a`, the unique `r` with `p_x·a·p_x = r·p_x`.
pub fn compress_scalar(
    g: &Graph,
    x: &IsolatedPoint,
    a: &AlgebraElement,
) -> Result<RingScalar, ActionError> {
    if a.degree() != Degree::Homogeneous(0) {
        return Err(ActionError::NotZeroGraded);
    }
    match compress(g, x, a)? {
        Compression::Zero => Ok(RingScalar::zero(a.ring())),
        Compression::Single { coeff, degree } => {
            if degree != 0 {
                return Err(ActionError::MalformedCompression);
            }
            Ok(coeff)
        }
    }
}
