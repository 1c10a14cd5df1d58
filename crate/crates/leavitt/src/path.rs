//! Finite paths and eventually periodic infinite paths.
//!
//! A [`FinPath`] is a composable edge sequence; length-0 paths carry an
//! explicit anchor vertex so that vertex paths are first-class values.
//! A [`LassoPath`] denotes the infinite path `prefix·cycle·cycle·⋯` and is
//! kept in a canonical form that makes path equality structural: the cycle is
//! primitive (not a power of a shorter word) and the prefix is pulled back as
//! far as possible (its last edge differs from the cycle's last edge).

use crate::graph::{EdgeId, Graph, VertexId};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PathError {
    #[error("source/range mismatch in path composition")]
    Mismatch,
    #[error("edge sequence is not composable")]
    NotComposable,
    #[error("cycle must be nonempty and closed")]
    NotACycle,
}

/// A finite path; empty paths are anchored at a vertex.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FinPath {
    // Field order matters: derived Ord compares edge sequences first, in
    // edge-name order (ids are name-sorted), then anchors.
    edges: Vec<EdgeId>,
    range: VertexId,
    source: VertexId,
}

impl FinPath {
    /// The length-0 path at `v`.
    pub fn vertex(v: VertexId) -> FinPath {
        FinPath { edges: Vec::new(), range: v, source: v }
    }

    /// Builds a path from edges, checking `s(μᵢ) = r(μᵢ₊₁)`.
    pub fn from_edges(g: &Graph, edges: &[EdgeId]) -> Result<FinPath, PathError> {
        if edges.is_empty() {
            return Err(PathError::NotComposable);
        }
        for w in edges.windows(2) {
            if g.source(w[0]) != g.range(w[1]) {
                return Err(PathError::NotComposable);
            }
        }
        Ok(FinPath {
            edges: edges.to_vec(),
            range: g.range(edges[0]),
            source: g.source(edges[edges.len() - 1]),
        })
    }

    /// Single-edge path.
    pub fn edge(g: &Graph, e: EdgeId) -> FinPath {
        FinPath { edges: vec![e], range: g.range(e), source: g.source(e) }
    }

    pub(crate) fn from_parts(edges: Vec<EdgeId>, range: VertexId, source: VertexId) -> FinPath {
        FinPath { edges, range, source }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn range(&self) -> VertexId {
        self.range
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    /// Concatenation `μν`; requires `s(μ) = r(ν)`.
    pub fn concat(&self, g: &Graph, nu: &FinPath) -> Result<FinPath, PathError> {
        if self.source != nu.range {
            return Err(PathError::Mismatch);
        }
        let _ = g;
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&nu.edges);
        Ok(FinPath {
            edges,
            range: if self.is_empty() { nu.range } else { self.range },
            source: nu.source,
        })
    }

    /// First `k` edges (`μ(0,k)`); requires `k ≤ |μ|`.
    pub fn truncate(&self, g: &Graph, k: usize) -> FinPath {
        assert!(k <= self.len());
        if k == 0 {
            return FinPath::vertex(self.range);
        }
        let edges = self.edges[..k].to_vec();
        let source = g.source(edges[k - 1]);
        FinPath { edges, range: self.range, source }
    }

    /// If `self = q·rest`, returns `rest`; otherwise `None`. For empty `q`
    /// the anchors must agree.
    pub fn strip_prefix(&self, g: &Graph, q: &FinPath) -> Option<FinPath> {
        if q.len() > self.len() {
            return None;
        }
        if self.edges[..q.len()] != q.edges[..] {
            return None;
        }
        if q.is_empty() && self.range != q.range {
            return None;
        }
        if q.len() == self.len() {
            return Some(FinPath::vertex(self.source));
        }
        let edges = self.edges[q.len()..].to_vec();
        let range = g.range(edges[0]);
        Some(FinPath { edges, range, source: self.source })
    }

    /// Whether `self` extends `q` (i.e. `q` is an initial segment).
    pub fn extends(&self, g: &Graph, q: &FinPath) -> bool {
        self.strip_prefix(g, q).is_some()
    }

    /// All extensions `μτ` with `τ ∈ s(μ)Eᵏ`, in id order.
    pub fn extensions(&self, g: &Graph, k: usize) -> Vec<FinPath> {
        let mut out = vec![self.clone()];
        for _ in 0..k {
            let mut next = Vec::new();
            for p in &out {
                for &e in g.incoming(p.source()) {
                    let mut edges = p.edges.clone();
                    edges.push(e);
                    next.push(FinPath {
                        edges,
                        range: if p.is_empty() { g.range(e) } else { p.range },
                        source: g.source(e),
                    });
                }
            }
            out = next;
        }
        out
    }

    /// All paths of length `k` with range `v` (`vEᵏ`).
    pub fn all_from(g: &Graph, v: VertexId, k: usize) -> Vec<FinPath> {
        FinPath::vertex(v).extensions(g, k)
    }
}

impl fmt::Display for FinPath {
    /// Debug-ish display using raw ids; name-aware printing lives in `textio`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "v{}", self.range.0)
        } else {
            let ids: Vec<String> = self.edges.iter().map(|e| format!("e{}", e.0)).collect();
            write!(f, "{}", ids.join("."))
        }
    }
}

/// An eventually periodic infinite path in canonical `(prefix, cycle)` form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LassoPath {
    prefix: FinPath,
    cycle: FinPath,
}

impl LassoPath {
    /// Builds the infinite path `prefix·cycle^∞` and canonicalizes.
    ///
    /// Requires the cycle to be a nonempty closed path starting where the
    /// prefix ends: `r(cycle) = s(cycle) = s(prefix)`.
    pub fn new(g: &Graph, prefix: FinPath, cycle: FinPath) -> Result<LassoPath, PathError> {
        if cycle.is_empty() || cycle.range() != cycle.source() {
            return Err(PathError::NotACycle);
        }
        if prefix.source() != cycle.range() {
            return Err(PathError::Mismatch);
        }
        Ok(Self::canonicalize(g, prefix, cycle))
    }

    /// Pure cycle `cycle^∞`.
    pub fn cycle_only(g: &Graph, cycle: FinPath) -> Result<LassoPath, PathError> {
        let anchor = FinPath::vertex(cycle.range());
        LassoPath::new(g, anchor, cycle)
    }

    fn canonicalize(g: &Graph, prefix: FinPath, cycle: FinPath) -> LassoPath {
        // Reduce the cycle to its primitive root.
        let cycle = primitive_root(g, &cycle);
        let mut pre = prefix.edges().to_vec();
        let mut cyc = cycle.edges().to_vec();
        // Pull the prefix back while its last edge agrees with the cycle's
        // last edge; each pullback rotates the cycle right by one.
        while let Some(&last) = pre.last() {
            if last == *cyc.last().unwrap() {
                pre.pop();
                let moved = cyc.pop().unwrap();
                cyc.insert(0, moved);
            } else {
                break;
            }
        }
        let cyc_range = g.range(cyc[0]);
        let cycle = FinPath::from_parts(cyc, cyc_range, cyc_range);
        let prefix = if pre.is_empty() {
            FinPath::vertex(cyc_range)
        } else {
            let range = g.range(pre[0]);
            let source = g.source(*pre.last().unwrap());
            FinPath::from_parts(pre, range, source)
        };
        LassoPath { prefix, cycle }
    }

    pub fn prefix(&self) -> &FinPath {
        &self.prefix
    }

    pub fn cycle(&self) -> &FinPath {
        &self.cycle
    }

    pub fn range(&self) -> VertexId {
        if self.prefix.is_empty() {
            self.cycle.range()
        } else {
            self.prefix.range()
        }
    }

    /// `|prefix| + |cycle|`; the size of the canonical description.
    pub fn description_size(&self) -> usize {
        self.prefix.len() + self.cycle.len()
    }

    /// The edge at position `i` (0-based) of the infinite path.
    pub fn edge_at(&self, g: &Graph, i: usize) -> EdgeId {
        let _ = g;
        if i < self.prefix.len() {
            self.prefix.edges()[i]
        } else {
            self.cycle.edges()[(i - self.prefix.len()) % self.cycle.len()]
        }
    }

    /// The initial segment `x(0,k)` as a finite path.
    pub fn unroll(&self, g: &Graph, k: usize) -> FinPath {
        if k == 0 {
            return FinPath::vertex(self.range());
        }
        let edges: Vec<EdgeId> = (0..k).map(|i| self.edge_at(g, i)).collect();
        FinPath::from_edges(g, &edges).expect("lasso unrolls are composable")
    }

    /// The shifted path `σᵐ(x)`, canonical.
    pub fn shift(&self, g: &Graph, m: usize) -> LassoPath {
        if m == 0 {
            return self.clone();
        }
        if m <= self.prefix.len() {
            let edges = self.prefix.edges()[m..].to_vec();
            let prefix = if edges.is_empty() {
                FinPath::vertex(self.cycle.range())
            } else {
                let range = g.range(edges[0]);
                let source = g.source(*edges.last().unwrap());
                FinPath::from_parts(edges, range, source)
            };
            // Dropping leading edges cannot break canonicality: the prefix's
            // last edge is unchanged (or the prefix becomes empty).
            LassoPath { prefix, cycle: self.cycle.clone() }
        } else {
            let k = (m - self.prefix.len()) % self.cycle.len();
            let mut edges = self.cycle.edges().to_vec();
            edges.rotate_left(k);
            let range = g.range(edges[0]);
            let cycle = FinPath::from_parts(edges, range, range);
            LassoPath { prefix: FinPath::vertex(range), cycle }
        }
    }

    /// Prepends a finite path: `μ·x`; requires `s(μ) = r(x)`.
    pub fn prepend(&self, g: &Graph, mu: &FinPath) -> Result<LassoPath, PathError> {
        if mu.source() != self.range() {
            return Err(PathError::Mismatch);
        }
        let prefix = mu.concat(g, &self.prefix)?;
        LassoPath::new(g, prefix, self.cycle.clone())
    }

    /// Whether the infinite path extends the finite path `q`.
    pub fn extends(&self, g: &Graph, q: &FinPath) -> bool {
        if q.is_empty() {
            return self.range() == q.range();
        }
        (0..q.len()).all(|i| self.edge_at(g, i) == q.edges()[i])
    }
}

impl fmt::Display for LassoPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})^inf", self.prefix, self.cycle)
    }
}

/// The primitive root of a closed path: the shortest `w` with `cycle = wᵏ`.
fn primitive_root(g: &Graph, cycle: &FinPath) -> FinPath {
    let n = cycle.len();
    for d in 1..=n {
        if !n.is_multiple_of(d) {
            continue;
        }
        let w = &cycle.edges()[..d];
        if cycle.edges().chunks(d).all(|c| c == w) {
            let range = g.range(w[0]);
            return FinPath::from_parts(w.to_vec(), range, range);
        }
    }
    unreachable!("every closed path has a primitive root")
}

/// Rotates a closed path left by `k` (σᵏ of the pure cycle).
pub fn rotate_cycle(g: &Graph, cycle: &FinPath, k: usize) -> FinPath {
    let mut edges = cycle.edges().to_vec();
    let n = edges.len();
    edges.rotate_left(k % n);
    let range = g.range(edges[0]);
    FinPath::from_parts(edges, range, range)
}

/// The lexicographically least rotation of a primitive closed path. Used
/// where a rotation-invariant cycle representative is needed.
pub fn least_rotation(g: &Graph, cycle: &FinPath) -> FinPath {
    let n = cycle.len();
    (0..n)
        .map(|k| rotate_cycle(g, cycle, k))
        .min()
        .expect("cycle is nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn path(g: &Graph, names: &[&str]) -> FinPath {
        let edges: Vec<EdgeId> = names.iter().map(|n| g.edge_by_name(n).unwrap()).collect();
        FinPath::from_edges(g, &edges).unwrap()
    }

    /// Oracle: compare two lassos by unrolling to a depth that separates any
    /// two distinct eventually periodic paths of these description sizes.
    fn unroll_eq(g: &Graph, a: &LassoPath, b: &LassoPath, depth: usize) -> bool {
        a.range() == b.range() && (0..depth).all(|i| a.edge_at(g, i) == b.edge_at(g, i))
    }

    #[test]
    fn concat_and_mismatch() {
        let g = corpus::g_2loop();
        let a = path(&g, &["a"]);
        let b = path(&g, &["b"]);
        let ab = a.concat(&g, &b).unwrap();
        assert_eq!(ab.len(), 2);
        let v = g.vertex_by_name("v").unwrap();
        let empty = FinPath::vertex(v);
        assert_eq!(a.concat(&g, &empty).unwrap(), a);

        let c2 = corpus::g_cycle2();
        let e = path(&c2, &["e"]);
        assert_eq!(e.concat(&c2, &e), Err(PathError::Mismatch));
    }

    #[test]
    fn shift_fixed_point_on_loop() {
        let g = corpus::g_loop();
        let e = path(&g, &["e"]);
        let x = LassoPath::cycle_only(&g, e).unwrap();
        assert_eq!(x.shift(&g, 5), x);
    }

    #[test]
    fn shift_drops_prefix() {
        let g = corpus::g_2loop();
        let b = path(&g, &["b"]);
        let a = path(&g, &["a"]);
        let x = LassoPath::new(&g, b, a.clone()).unwrap();
        let shifted = x.shift(&g, 1);
        let a_inf = LassoPath::cycle_only(&g, a).unwrap();
        assert_eq!(shifted, a_inf);
    }

    #[test]
    fn shift_rotates_cycle() {
        // Expected value computed by the depth-10 unrolling oracle.
        let g = corpus::g_cycle2();
        let ef = path(&g, &["e", "f"]);
        let fe = path(&g, &["f", "e"]);
        let x = LassoPath::cycle_only(&g, ef).unwrap();
        let shifted = x.shift(&g, 1);
        let expect = LassoPath::cycle_only(&g, fe).unwrap();
        assert!(unroll_eq(&g, &shifted, &expect, 10));
        assert_eq!(shifted, expect);
    }

    #[test]
    fn canonical_form_pulls_back_and_reduces_powers() {
        let g = corpus::g_2loop();
        let a = path(&g, &["a"]);
        // b·a·(a·a)^∞ canonicalizes to b·a^∞... and further to b(a)^∞.
        let ba = path(&g, &["b", "a"]);
        let aa = path(&g, &["a", "a"]);
        let x = LassoPath::new(&g, ba, aa).unwrap();
        assert_eq!(x.cycle(), &a);
        assert_eq!(x.prefix(), &path(&g, &["b"]));
        // a(b·a)^∞ = (a·b)^∞.
        let ab = path(&g, &["a", "b"]);
        let y = LassoPath::new(&g, a.clone(), path(&g, &["b", "a"])).unwrap();
        let expect = LassoPath::cycle_only(&g, ab).unwrap();
        assert!(unroll_eq(&g, &y, &expect, 12));
        assert_eq!(y, expect);
    }

    #[test]
    fn canonicalization_soundness_exhaustive() {
        // Two lassos are equal iff their unrollings agree to
        // |p1|+|p2|+2·lcm(|c1|,|c2|).
        let g = corpus::g_2loop();
        let lassos = crate::sampling::enumerate_lassos(&g, 4);
        for x in &lassos {
            for y in &lassos {
                let lcm = num_lcm(x.cycle().len(), y.cycle().len());
                let depth = x.prefix().len() + y.prefix().len() + 2 * lcm;
                assert_eq!(
                    x == y,
                    unroll_eq(&g, x, y, depth.max(1)),
                    "structural equality must match unrolling oracle for {x} vs {y}"
                );
            }
        }
    }

    fn num_lcm(a: usize, b: usize) -> usize {
        fn gcd(a: usize, b: usize) -> usize {
            if b == 0 { a } else { gcd(b, a % b) }
        }
        a / gcd(a, b) * b
    }

    #[test]
    fn least_rotation_is_minimal() {
        let g = corpus::g_cycle2();
        let ef = path(&g, &["e", "f"]);
        let fe = path(&g, &["f", "e"]);
        assert_eq!(least_rotation(&g, &ef), ef);
        assert_eq!(least_rotation(&g, &fe), ef);
    }
}
