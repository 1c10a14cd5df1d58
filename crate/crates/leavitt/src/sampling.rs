//! Deterministic sampling for the randomized property suites.
//!
//! A hand-rolled SplitMix64 keeps reports byte-identical across platforms and
//! releases for a fixed seed, which the CLI contract requires.

use crate::algebra::AlgebraElement;
use crate::graph::{Graph, VertexId};
use crate::groupoid::ArrowTriple;
use crate::path::{FinPath, LassoPath};
use crate::ring::{RingKind, RingScalar};

/// SplitMix64 PRNG.
#[derive(Clone, Debug)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound` (bound > 0).
    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }

    /// Uniform in `lo..=hi`.
    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next_u64() % (hi - lo + 1) as u64) as i64
    }

    pub fn pick<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.below(items.len())]
    }

    pub fn chance(&mut self, num: u32, den: u32) -> bool {
        (self.next_u64() % den as u64) < num as u64
    }
}

/// A nonzero scalar with small entries.
pub fn random_scalar(rng: &mut Rng, ring: RingKind) -> RingScalar {
    loop {
        let s = match ring {
            RingKind::Int => RingScalar::from_i64(ring, rng.range_i64(-3, 3)),
            RingKind::Gauss => RingScalar::gauss(rng.range_i64(-2, 2), rng.range_i64(-2, 2)),
        };
        if !s.is_zero() {
            return s;
        }
    }
}

/// A random path of the given length with random range vertex.
pub fn random_path(rng: &mut Rng, g: &Graph, len: usize) -> FinPath {
    let v = VertexId(rng.below(g.vertex_count()) as u32);
    random_path_from(rng, g, v, len)
}

/// A random path of the given length with range `v`.
pub fn random_path_from(rng: &mut Rng, g: &Graph, v: VertexId, len: usize) -> FinPath {
    let mut p = FinPath::vertex(v);
    for _ in 0..len {
        let inc = g.incoming(p.source());
        let e = inc[rng.below(inc.len())];
        let step = FinPath::edge(g, e);
        p = p.concat(g, &step).expect("incoming edges compose");
    }
    p
}

/// A random lasso: a random walk closed off at its first vertex repeat,
/// optionally padded by a random prefix.
pub fn random_lasso(rng: &mut Rng, g: &Graph) -> LassoPath {
    let start = VertexId(rng.below(g.vertex_count()) as u32);
    let pad = rng.below(4);
    let mut edges = Vec::new();
    let mut cur = start;
    for _ in 0..pad {
        let inc = g.incoming(cur);
        let e = inc[rng.below(inc.len())];
        edges.push(e);
        cur = g.source(e);
    }
    // now walk until a vertex repeats past the padding
    let mut seen = vec![cur];
    let cycle_start = edges.len();
    loop {
        let inc = g.incoming(cur);
        let e = inc[rng.below(inc.len())];
        edges.push(e);
        cur = g.source(e);
        if let Some(pos) = seen.iter().position(|&w| w == cur) {
            let prefix_edges = &edges[..cycle_start + pos];
            let cycle_edges = &edges[cycle_start + pos..];
            let prefix = if prefix_edges.is_empty() {
                FinPath::vertex(start)
            } else {
                FinPath::from_edges(g, prefix_edges).unwrap()
            };
            let cycle = FinPath::from_edges(g, cycle_edges).unwrap();
            return LassoPath::new(g, prefix, cycle).unwrap();
        }
        seen.push(cur);
    }
}

/// All canonical lassos of description size `|prefix| + |cycle| ≤ size`.
pub fn enumerate_lassos(g: &Graph, size: usize) -> Vec<LassoPath> {
    let mut out = Vec::new();
    for v in g.vertices() {
        for clen in 1..=size {
            for cycle in FinPath::all_from(g, v, clen) {
                if cycle.source() != cycle.range() {
                    continue;
                }
                // prefixes ending at the cycle's range
                out.push(LassoPath::cycle_only(g, cycle.clone()).unwrap());
                for plen in 1..=(size - clen) {
                    for w in g.vertices() {
                        for prefix in FinPath::all_from(g, w, plen) {
                            if prefix.source() != cycle.range() {
                                continue;
                            }
                            out.push(LassoPath::new(g, prefix, cycle.clone()).unwrap());
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// A random element with a few small terms.
pub fn random_element(rng: &mut Rng, g: &Graph, ring: RingKind) -> AlgebraElement {
    let nterms = 1 + rng.below(3);
    let mut raw = Vec::new();
    for _ in 0..nterms {
        let nu_len = rng.below(3);
        let nu = random_path(rng, g, nu_len);
        let mu_len = rng.below(3);
        let mu = random_path_into(rng, g, nu.source(), mu_len);
        raw.push((mu, nu, random_scalar(rng, ring)));
    }
    AlgebraElement::from_terms(g, ring, raw).expect("generated terms are valid")
}

/// A random 0-graded element (all terms with `|μ| = |ν|`).
pub fn random_zero_graded(rng: &mut Rng, g: &Graph, ring: RingKind) -> AlgebraElement {
    let nterms = 1 + rng.below(3);
    let mut raw = Vec::new();
    for _ in 0..nterms {
        let len = rng.below(3);
        let nu = random_path(rng, g, len);
        let mu = random_path_into(rng, g, nu.source(), len);
        raw.push((mu, nu, random_scalar(rng, ring)));
    }
    AlgebraElement::from_terms(g, ring, raw).expect("generated terms are valid")
}

/// A random diagonal element.
pub fn random_diagonal(rng: &mut Rng, g: &Graph, ring: RingKind) -> AlgebraElement {
    let nterms = 1 + rng.below(3);
    let mut raw = Vec::new();
    for _ in 0..nterms {
        let tau_len = rng.below(3);
        let tau = random_path(rng, g, tau_len);
        raw.push((tau.clone(), tau, random_scalar(rng, ring)));
    }
    AlgebraElement::from_terms(g, ring, raw).expect("generated terms are valid")
}

/// A random path of length `len` whose *source* is `v` (walks backwards
/// through outgoing edges). Used to build terms with matching sources.
pub fn random_path_into(rng: &mut Rng, g: &Graph, v: VertexId, len: usize) -> FinPath {
    // collect edges by source vertex once per call; graphs are tiny
    let mut edges = Vec::new();
    let mut cur = v;
    for _ in 0..len {
        let outgoing: Vec<_> = g.edges().filter(|&e| g.source(e) == cur).collect();
        if outgoing.is_empty() {
            break;
        }
        let e = *rng.pick(&outgoing);
        edges.insert(0, e);
        cur = g.range(e);
    }
    if edges.is_empty() {
        FinPath::vertex(v)
    } else {
        FinPath::from_edges(g, &edges).unwrap()
    }
}

/// A random arrow `(p·t, |p|−|q|, q·t)` over a common random tail.
pub fn random_arrow(rng: &mut Rng, g: &Graph) -> ArrowTriple {
    let tail = random_lasso(rng, g);
    let p_len = rng.below(3);
    let p = random_path_into(rng, g, tail.range(), p_len);
    let q_len = rng.below(3);
    let q = random_path_into(rng, g, tail.range(), q_len);
    let x = tail.prepend(g, &p).unwrap();
    let y = tail.prepend(g, &q).unwrap();
    ArrowTriple::new(g, x, p.len() as i64 - q.len() as i64, y).expect("constructed arrows are valid")
}

/// A random composable pair sharing a common tail.
pub fn random_composable_pair(rng: &mut Rng, g: &Graph) -> (ArrowTriple, ArrowTriple) {
    let tail = random_lasso(rng, g);
    let p_len = rng.below(3);
    let p = random_path_into(rng, g, tail.range(), p_len);
    let q_len = rng.below(3);
    let q = random_path_into(rng, g, tail.range(), q_len);
    let r_len = rng.below(3);
    let r = random_path_into(rng, g, tail.range(), r_len);
    let x = tail.prepend(g, &p).unwrap();
    let y = tail.prepend(g, &q).unwrap();
    let z = tail.prepend(g, &r).unwrap();
    let g1 = ArrowTriple::new(g, x, p.len() as i64 - q.len() as i64, y.clone()).unwrap();
    let g2 = ArrowTriple::new(g, y, q.len() as i64 - r.len() as i64, z).unwrap();
    (g1, g2)
}
