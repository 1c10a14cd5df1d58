//! Candidate diagonal-preserving ring *-isomorphisms between two path
//! algebras, their validation, and the two-way traffic between algebra
//! isomorphisms and groupoid isomorphisms.
//!
//! A candidate π is specified by generator images plus a global coefficient
//! twist (a ring automorphism), with a declared inverse; surjectivity is
//! certified by the two-sided inverse rather than searched for. Everything
//! about π is checked, never assumed: the images must form a Leavitt family,
//! match under the involution, and preserve the diagonal to the requested
//! depth, and the declared inverse must pass the mirror checks with both
//! composites fixing the generators.

use crate::action::Normalizer;
use crate::algebra::AlgebraElement;
use crate::graph::{EdgeId, Graph, VertexId};
use crate::groupoid::{minimal_merge_depth, ArrowCylinder, ArrowTriple};
use crate::path::{FinPath, LassoPath};
use crate::ring::{RingKind, RingScalar};
use crate::stone::{self, DiagonalMap, StoneError};
use crate::textio;
use crate::weyl::{self, WeylClass, WeylError};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IsoError {
    #[error("spec has not passed validation")]
    NotValidated,
    #[error("not a groupoid homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("finite-depth table cannot answer: {0}")]
    Depth(String),
    #[error("spec parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Action(#[from] crate::action::ActionError),
    #[error(transparent)]
    Stone(#[from] StoneError),
}

/// Coefficient twist composed into the generator images; models ring
/// isomorphisms that are not algebra isomorphisms.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Twist {
    Identity,
    Conjugation,
}

impl Twist {
    pub fn apply(&self, r: &RingScalar) -> RingScalar {
        match self {
            Twist::Identity => r.clone(),
            Twist::Conjugation => r.conj(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Twist::Identity => "identity",
            Twist::Conjugation => "conjugation",
        }
    }
}

/// Images of the universal generators of one path algebra inside another.
#[derive(Clone, Debug)]
pub struct GeneratorImages {
    vertex: BTreeMap<VertexId, AlgebraElement>,
    edge: BTreeMap<EdgeId, AlgebraElement>,
    ghost: BTreeMap<EdgeId, AlgebraElement>,
}

impl GeneratorImages {
    pub fn new(
        source: &Graph,
        vertex: BTreeMap<VertexId, AlgebraElement>,
        edge: BTreeMap<EdgeId, AlgebraElement>,
        ghost: BTreeMap<EdgeId, AlgebraElement>,
    ) -> Result<GeneratorImages, IsoError> {
        for v in source.vertices() {
            if !vertex.contains_key(&v) {
                return Err(IsoError::Parse(format!(
                    "missing image for vertex `{}`",
                    source.vertex_name(v)
                )));
            }
        }
        for e in source.edges() {
            if !edge.contains_key(&e) {
                return Err(IsoError::Parse(format!(
                    "missing image for edge `{}`",
                    source.edge_name(e)
                )));
            }
            if !ghost.contains_key(&e) {
                return Err(IsoError::Parse(format!(
                    "missing image for ghost edge `{}`",
                    source.edge_name(e)
                )));
            }
        }
        Ok(GeneratorImages { vertex, edge, ghost })
    }

    /// The identity images of a graph inside its own algebra.
    pub fn identity(g: &Graph, ring: RingKind) -> GeneratorImages {
        GeneratorImages {
            vertex: g
                .vertices()
                .map(|v| (v, AlgebraElement::vertex_idem(g, ring, v)))
                .collect(),
            edge: g
                .edges()
                .map(|e| (e, AlgebraElement::edge_gen(g, ring, e)))
                .collect(),
            ghost: g
                .edges()
                .map(|e| (e, AlgebraElement::ghost_gen(g, ring, e)))
                .collect(),
        }
    }

    pub fn vertex_image(&self, v: VertexId) -> &AlgebraElement {
        &self.vertex[&v]
    }

    pub fn edge_image(&self, e: EdgeId) -> &AlgebraElement {
        &self.edge[&e]
    }

    pub fn ghost_image(&self, e: EdgeId) -> &AlgebraElement {
        &self.ghost[&e]
    }

    /// Image of `s_μ` (a product of edge images; vertex image for `|μ|=0`).
    fn path_image(&self, target: &Graph, mu: &FinPath) -> AlgebraElement {
        if mu.is_empty() {
            return self.vertex[&mu.range()].clone();
        }
        let mut acc = self.edge[&mu.edges()[0]].clone();
        for e in &mu.edges()[1..] {
            acc = acc.mul(target, &self.edge[e]);
        }
        acc
    }

    /// Image of `s_ν*` (ghost images in reverse order).
    fn ghost_path_image(&self, target: &Graph, nu: &FinPath) -> AlgebraElement {
        if nu.is_empty() {
            return self.vertex[&nu.range()].clone();
        }
        let mut acc = self.ghost[&nu.edges()[nu.len() - 1]].clone();
        for e in nu.edges()[..nu.len() - 1].iter().rev() {
            acc = acc.mul(target, &self.ghost[e]);
        }
        acc
    }
}

/// A candidate diagonal-preserving ring *-isomorphism `π: L(E) → L(F)`.
#[derive(Clone, Debug)]
pub struct IsoSpec {
    source: Graph,
    target: Graph,
    ring: RingKind,
    forward: GeneratorImages,
    backward: GeneratorImages,
    twist: Twist,
}

impl IsoSpec {
    pub fn new(
        source: Graph,
        target: Graph,
        ring: RingKind,
        forward: GeneratorImages,
        backward: GeneratorImages,
        twist: Twist,
    ) -> IsoSpec {
        IsoSpec { source, target, ring, forward, backward, twist }
    }

    pub fn source(&self) -> &Graph {
        &self.source
    }

    pub fn target(&self) -> &Graph {
        &self.target
    }

    pub fn ring(&self) -> RingKind {
        self.ring
    }

    pub fn twist(&self) -> Twist {
        self.twist
    }

    /// Term-wise image `Σ r·1_{Z(μ,ν)} ↦ Σ twist(r)·π(s_μ)π(s_ν*)`,
    /// computed in the target normal form. Raw map without validation.
    pub fn map_raw(&self, f: &AlgebraElement) -> AlgebraElement {
        map_with(&self.forward, &self.target, self.ring, self.twist, f)
    }

    /// The declared inverse applied term-wise.
    pub fn map_raw_back(&self, f: &AlgebraElement) -> AlgebraElement {
        map_with(&self.backward, &self.source, self.ring, self.twist, f)
    }

    /// Runs every check at the given diagonal depth and assembles a report.
    pub fn validate(&self, depth: usize) -> IsoReport {
        let mut checks = Vec::new();
        family_checks(
            "forward",
            &self.source,
            &self.target,
            self.ring,
            &self.forward,
            depth,
            &mut checks,
        );
        family_checks(
            "inverse",
            &self.target,
            &self.source,
            self.ring,
            &self.backward,
            depth,
            &mut checks,
        );
        // composites fix the generators
        let mut bad = Vec::new();
        for v in self.source.vertices() {
            let p = AlgebraElement::vertex_idem(&self.source, self.ring, v);
            if !self.map_raw_back(&self.map_raw(&p)).equals(&self.source, &p) {
                bad.push(format!("p_{}", self.source.vertex_name(v)));
            }
        }
        for e in self.source.edges() {
            let s = AlgebraElement::edge_gen(&self.source, self.ring, e);
            if !self.map_raw_back(&self.map_raw(&s)).equals(&self.source, &s) {
                bad.push(format!("s_{}", self.source.edge_name(e)));
            }
        }
        for w in self.target.vertices() {
            let q = AlgebraElement::vertex_idem(&self.target, self.ring, w);
            if !self.map_raw(&self.map_raw_back(&q)).equals(&self.target, &q) {
                bad.push(format!("target p_{}", self.target.vertex_name(w)));
            }
        }
        for f in self.target.edges() {
            let s = AlgebraElement::edge_gen(&self.target, self.ring, f);
            if !self.map_raw(&self.map_raw_back(&s)).equals(&self.target, &s) {
                bad.push(format!("target s_{}", self.target.edge_name(f)));
            }
        }
        checks.push(CheckResult {
            name: "composites-fix-generators".into(),
            pass: bad.is_empty(),
            witness: if bad.is_empty() { None } else { Some(bad.join(", ")) },
        });
        IsoReport { checks }
    }

    /// Validates and, on success, wraps the spec for use by the operations
    /// that require a certified π.
    pub fn validated(self, depth: usize) -> Result<ValidatedIso, Box<IsoReport>> {
        let report = self.validate(depth);
        if report.all_pass() {
            Ok(ValidatedIso { spec: self, depth })
        } else {
            Err(Box::new(report))
        }
    }
}

fn map_with(
    images: &GeneratorImages,
    target: &Graph,
    ring: RingKind,
    twist: Twist,
    f: &AlgebraElement,
) -> AlgebraElement {
    let mut acc = AlgebraElement::zero(ring);
    for (cyl, r) in f.terms() {
        let s_mu = images.path_image(target, cyl.mu());
        let t_nu = images.ghost_path_image(target, cyl.nu());
        let term = s_mu.mul(target, &t_nu).scalar_mul(&twist.apply(r));
        acc = acc.add(target, &term);
    }
    acc
}

/// One verdict of [`IsoSpec::validate`].
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub witness: Option<String>,
}

/// The full validation report; any failure carries a witness term.
#[derive(Clone, Debug)]
pub struct IsoReport {
    pub checks: Vec<CheckResult>,
}

impl IsoReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{} {}{}\n",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                match &c.witness {
                    Some(w) => format!(": {w}"),
                    None => String::new(),
                }
            ));
        }
        out.push_str(if self.all_pass() { "VERDICT pass\n" } else { "VERDICT fail\n" });
        out
    }
}

fn family_checks(
    label: &str,
    source: &Graph,
    target: &Graph,
    ring: RingKind,
    images: &GeneratorImages,
    depth: usize,
    out: &mut Vec<CheckResult>,
) {
    let pr = |el: &AlgebraElement| textio::print_element(target, el);
    // (i) vertex images are orthogonal idempotents
    let mut witness = None;
    for u in source.vertices() {
        for v in source.vertices() {
            let pu = images.vertex_image(u);
            let pv = images.vertex_image(v);
            let prod = pu.mul(target, pv);
            let expect = if u == v { pu.clone() } else { AlgebraElement::zero(ring) };
            if !prod.equals(target, &expect) {
                witness = Some(format!(
                    "p_{}·p_{} = {}",
                    source.vertex_name(u),
                    source.vertex_name(v),
                    pr(&prod)
                ));
            }
        }
    }
    out.push(CheckResult {
        name: format!("{label}:orthogonal-idempotents"),
        pass: witness.is_none(),
        witness,
    });

    // (ii) L1, L2
    let mut witness = None;
    for e in source.edges() {
        let se = images.edge_image(e);
        let te = images.ghost_image(e);
        let pr_e = images.vertex_image(source.range(e));
        let ps_e = images.vertex_image(source.source(e));
        if !pr_e.mul(target, se).equals(target, se) || !se.mul(target, ps_e).equals(target, se) {
            witness = Some(format!("L1 fails at s_{}", source.edge_name(e)));
        }
        if !ps_e.mul(target, te).equals(target, te) || !te.mul(target, pr_e).equals(target, te) {
            witness = Some(format!("L2 fails at t_{}", source.edge_name(e)));
        }
    }
    out.push(CheckResult {
        name: format!("{label}:L1-L2"),
        pass: witness.is_none(),
        witness,
    });

    // (iii) L3
    let mut witness = None;
    for e in source.edges() {
        for f in source.edges() {
            let prod = images.ghost_image(e).mul(target, images.edge_image(f));
            let expect = if e == f {
                images.vertex_image(source.source(e)).clone()
            } else {
                AlgebraElement::zero(ring)
            };
            if !prod.equals(target, &expect) {
                witness = Some(format!(
                    "t_{}·s_{} = {}",
                    source.edge_name(e),
                    source.edge_name(f),
                    pr(&prod)
                ));
            }
        }
    }
    out.push(CheckResult { name: format!("{label}:L3"), pass: witness.is_none(), witness });

    // (iv) L4
    let mut witness = None;
    for v in source.vertices() {
        let mut sum = AlgebraElement::zero(ring);
        for &e in source.incoming(v) {
            sum = sum.add(
                target,
                &images.edge_image(e).mul(target, images.ghost_image(e)),
            );
        }
        if !sum.equals(target, images.vertex_image(v)) {
            witness = Some(format!(
                "Σ s_e·t_e over {}E¹ = {}",
                source.vertex_name(v),
                pr(&sum)
            ));
        }
    }
    out.push(CheckResult { name: format!("{label}:L4"), pass: witness.is_none(), witness });

    // (v) star compatibility
    let mut witness = None;
    for v in source.vertices() {
        let p = images.vertex_image(v);
        if !p.star(target).equals(target, p) {
            witness = Some(format!("p_{} is not self-adjoint", source.vertex_name(v)));
        }
    }
    for e in source.edges() {
        let se_star = images.edge_image(e).star(target);
        if !se_star.equals(target, images.ghost_image(e)) {
            witness = Some(format!(
                "t_{} ≠ (s_{})* = {}",
                source.edge_name(e),
                source.edge_name(e),
                pr(&se_star)
            ));
        }
    }
    out.push(CheckResult {
        name: format!("{label}:star-compatibility"),
        pass: witness.is_none(),
        witness,
    });

    // (vi) diagonal preservation to the requested depth
    let mut witness = None;
    'outer: for v in source.vertices() {
        for l in 0..=depth {
            for mu in FinPath::all_from(source, v, l) {
                let d = AlgebraElement::indicator(source, ring, &ArrowCylinder::unit(mu.clone()));
                let img = map_with(images, target, ring, Twist::Identity, &d);
                if !img.is_diagonal() {
                    witness = Some(format!(
                        "π(1_{{Z({})}}) = {}",
                        textio::print_path(source, &mu),
                        pr(&img)
                    ));
                    break 'outer;
                }
            }
        }
    }
    out.push(CheckResult {
        name: format!("{label}:diagonal-preservation"),
        pass: witness.is_none(),
        witness,
    });
}

/// A spec that passed [`IsoSpec::validate`]; the only door to `extend`,
/// `psi` and κ.
#[derive(Clone, Debug)]
pub struct ValidatedIso {
    spec: IsoSpec,
    depth: usize,
}

impl ValidatedIso {
    pub fn spec(&self) -> &IsoSpec {
        &self.spec
    }

    pub fn validation_depth(&self) -> usize {
        self.depth
    }

    /// `π` on an arbitrary element of the source algebra.
    pub fn extend(&self, f: &AlgebraElement) -> AlgebraElement {
        self.spec.map_raw(f)
    }

    /// `π⁻¹` on an arbitrary element of the target algebra.
    pub fn extend_back(&self, f: &AlgebraElement) -> AlgebraElement {
        self.spec.map_raw_back(f)
    }

    /// `κ(x)` with the spec'd default depth cap.
    pub fn kappa(&self, x: &LassoPath) -> Result<LassoPath, StoneError> {
        stone::induce_kappa(self, x, stone::default_depth_cap(&self.spec.source, x))
    }

    /// `Ψ([(n,x)]) = [(π(n), κ(x))]`.
    pub fn psi(&self, c: &WeylClass) -> Result<WeylClass, IsoError> {
        let img = self.extend(c.normalizer().element());
        let n = Normalizer::check(&self.spec.target, img)?;
        let kx = self.kappa(c.base_point())?;
        Ok(WeylClass::new(&self.spec.target, n, kx)?)
    }
}

impl DiagonalMap for ValidatedIso {
    fn source_graph(&self) -> &Graph {
        &self.spec.source
    }

    fn target_graph(&self) -> &Graph {
        &self.spec.target
    }

    fn ring(&self) -> RingKind {
        self.spec.ring
    }

    fn map_diagonal(&self, d: &AlgebraElement) -> Result<AlgebraElement, StoneError> {
        Ok(self.extend(d))
    }
}

/// A topological groupoid isomorphism given at finite depth: either a graph
/// isomorphism shortcut or a rewrite table on arrow cylinders.
#[derive(Clone, Debug)]
pub enum OmegaMap {
    GraphIso {
        vertex_map: BTreeMap<VertexId, VertexId>,
        edge_map: BTreeMap<EdgeId, EdgeId>,
    },
    Table {
        depth: usize,
        entries: BTreeMap<(FinPath, FinPath), (FinPath, FinPath)>,
    },
}

#[derive(Clone, Debug)]
pub struct GroupoidIsoSpec {
    source: Graph,
    target: Graph,
    map: OmegaMap,
}

impl GroupoidIsoSpec {
    pub fn new(source: Graph, target: Graph, map: OmegaMap) -> GroupoidIsoSpec {
        GroupoidIsoSpec { source, target, map }
    }

    pub fn source(&self) -> &Graph {
        &self.source
    }

    pub fn target(&self) -> &Graph {
        &self.target
    }

    pub fn map(&self) -> &OmegaMap {
        &self.map
    }

    /// From a graph isomorphism: relabel everything.
    pub fn from_graph_iso(
        source: Graph,
        target: Graph,
        vertex_map: BTreeMap<VertexId, VertexId>,
        edge_map: BTreeMap<EdgeId, EdgeId>,
    ) -> Result<GroupoidIsoSpec, IsoError> {
        // bijectivity and structure preservation
        let mut seen_v = BTreeMap::new();
        for v in source.vertices() {
            let w = *vertex_map
                .get(&v)
                .ok_or_else(|| IsoError::Parse(format!("unmapped vertex {}", source.vertex_name(v))))?;
            if seen_v.insert(w, v).is_some() {
                return Err(IsoError::Parse("vertex map is not injective".into()));
            }
        }
        let mut seen_e = BTreeMap::new();
        for e in source.edges() {
            let f = *edge_map
                .get(&e)
                .ok_or_else(|| IsoError::Parse(format!("unmapped edge {}", source.edge_name(e))))?;
            if seen_e.insert(f, e).is_some() {
                return Err(IsoError::Parse("edge map is not injective".into()));
            }
            if target.range(f) != vertex_map[&source.range(e)]
                || target.source(f) != vertex_map[&source.source(e)]
            {
                return Err(IsoError::Parse(format!(
                    "edge map breaks incidence at {}",
                    source.edge_name(e)
                )));
            }
        }
        if seen_v.len() != target.vertex_count() || seen_e.len() != target.edge_count() {
            return Err(IsoError::Parse("graph maps are not onto".into()));
        }
        Ok(GroupoidIsoSpec { source, target, map: OmegaMap::GraphIso { vertex_map, edge_map } })
    }

    /// The identity groupoid isomorphism.
    pub fn identity(g: &Graph) -> GroupoidIsoSpec {
        GroupoidIsoSpec {
            source: g.clone(),
            target: g.clone(),
            map: OmegaMap::GraphIso {
                vertex_map: g.vertices().map(|v| (v, v)).collect(),
                edge_map: g.edges().map(|e| (e, e)).collect(),
            },
        }
    }

    fn relabel_fin(&self, p: &FinPath) -> Result<FinPath, IsoError> {
        match &self.map {
            OmegaMap::GraphIso { vertex_map, edge_map } => {
                if p.is_empty() {
                    return Ok(FinPath::vertex(vertex_map[&p.range()]));
                }
                let edges: Vec<EdgeId> = p.edges().iter().map(|e| edge_map[e]).collect();
                FinPath::from_edges(&self.target, &edges)
                    .map_err(|e| IsoError::Parse(format!("relabeled path broke: {e}")))
            }
            OmegaMap::Table { .. } => Err(IsoError::Depth(
                "tables do not relabel finite paths directly".into(),
            )),
        }
    }

    /// When the diagonal entries at depth ≤ 1 describe a unit-level graph
    /// relabeling, extract it; this is what makes finite tables evaluable on
    /// arbitrary lasso arrows.
    fn unit_relabeling(&self) -> Option<(BTreeMap<VertexId, VertexId>, BTreeMap<EdgeId, EdgeId>)> {
        let OmegaMap::Table { entries, .. } = &self.map else {
            return None;
        };
        let mut vmap = BTreeMap::new();
        for v in self.source.vertices() {
            let key = (FinPath::vertex(v), FinPath::vertex(v));
            let (m, n) = entries.get(&key)?;
            if !m.is_empty() || m != n {
                return None;
            }
            vmap.insert(v, m.range());
        }
        let mut emap = BTreeMap::new();
        for e in self.source.edges() {
            let p = FinPath::from_parts(vec![e], self.source.range(e), self.source.source(e));
            let key = (p.clone(), p);
            let (m, n) = entries.get(&key)?;
            if m.len() != 1 || m != n {
                return None;
            }
            emap.insert(e, m.edges()[0]);
        }
        Some((vmap, emap))
    }

    /// The induced map on infinite paths.
    pub fn apply_path(&self, x: &LassoPath) -> Result<LassoPath, IsoError> {
        match &self.map {
            OmegaMap::GraphIso { .. } => {
                let prefix = self.relabel_fin(x.prefix())?;
                let cycle = self.relabel_fin(x.cycle())?;
                LassoPath::new(&self.target, prefix, cycle)
                    .map_err(|e| IsoError::Parse(format!("relabeled lasso broke: {e}")))
            }
            OmegaMap::Table { .. } => {
                if let Some((vmap, emap)) = self.unit_relabeling() {
                    let map_fin = |p: &FinPath| -> Result<FinPath, IsoError> {
                        if p.is_empty() {
                            return Ok(FinPath::vertex(vmap[&p.range()]));
                        }
                        let edges: Vec<EdgeId> = p.edges().iter().map(|e| emap[e]).collect();
                        FinPath::from_edges(&self.target, &edges)
                            .map_err(|e| IsoError::Parse(format!("table relabeling broke: {e}")))
                    };
                    let prefix = map_fin(x.prefix())?;
                    let cycle = map_fin(x.cycle())?;
                    return LassoPath::new(&self.target, prefix, cycle)
                        .map_err(|e| IsoError::Parse(format!("table relabeling broke: {e}")));
                }
                Err(IsoError::Depth(
                    "table does not determine a unit-level relabeling".into(),
                ))
            }
        }
    }

    /// The table entry (or relabeled pair) for a cylinder.
    pub fn apply_cylinder(&self, mu: &FinPath, nu: &FinPath) -> Result<(FinPath, FinPath), IsoError> {
        match &self.map {
            OmegaMap::GraphIso { .. } => Ok((self.relabel_fin(mu)?, self.relabel_fin(nu)?)),
            OmegaMap::Table { entries, depth } => entries
                .get(&(mu.clone(), nu.clone()))
                .cloned()
                .ok_or_else(|| {
                    IsoError::Depth(format!(
                        "no table entry for ({}, {}) at depth {depth}",
                        textio::print_path(&self.source, mu),
                        textio::print_path(&self.source, nu),
                    ))
                }),
        }
    }

    /// The evaluator on lasso arrows.
    pub fn apply(&self, arrow: &ArrowTriple) -> Result<ArrowTriple, IsoError> {
        let x = self.apply_path(arrow.range_path())?;
        let y = self.apply_path(arrow.source_path())?;
        // a unit-level relabeling preserves lags
        ArrowTriple::new(&self.target, x, arrow.lag(), y)
            .map_err(|e| IsoError::NotAHomomorphism(format!("image is not an arrow: {e}")))
    }

    /// Checks composition, inverses and unit preservation on sampled lasso
    /// arrows.
    pub fn verify_homomorphism(&self, seed: u64, samples: usize) -> Result<(), IsoError> {
        let mut rng = crate::sampling::Rng::new(seed);
        for _ in 0..samples {
            let (g1, g2) = crate::sampling::random_composable_pair(&mut rng, &self.source);
            let lhs = self.apply(&g1.compose(&g2).expect("sampled pair composes"))?;
            let rhs = self.apply(&g1)?.compose(&self.apply(&g2)?).map_err(|e| {
                IsoError::NotAHomomorphism(format!("images fail to compose: {e}"))
            })?;
            if lhs != rhs {
                return Err(IsoError::NotAHomomorphism(format!(
                    "Ω(g₁g₂) ≠ Ω(g₁)Ω(g₂) at {g1} · {g2}"
                )));
            }
            let inv = self.apply(&g1.invert())?;
            if inv != self.apply(&g1)?.invert() {
                return Err(IsoError::NotAHomomorphism(format!(
                    "Ω(g⁻¹) ≠ Ω(g)⁻¹ at {g1}"
                )));
            }
            let unit = ArrowTriple::unit(g1.source_path().clone());
            let unit_img = self.apply(&unit)?;
            if unit_img.lag() != 0 || unit_img.range_path() != unit_img.source_path() {
                return Err(IsoError::NotAHomomorphism(format!(
                    "unit image is not a unit at {unit}"
                )));
            }
        }
        Ok(())
    }
}

/// Materializes `Φ_F⁻¹ ∘ Ψ_π ∘ Φ_E` as a rewrite table on all cylinders up
/// to `depth`, then verifies it is a homomorphism on sampled arrows.
pub fn groupoid_iso_from_pi(
    pi: &ValidatedIso,
    depth: usize,
    seed: u64,
) -> Result<GroupoidIsoSpec, IsoError> {
    let e = pi.spec().source();
    let f = pi.spec().target();
    let ring = pi.spec().ring();
    let mut entries = BTreeMap::new();
    let mut paths: Vec<FinPath> = Vec::new();
    for v in e.vertices() {
        for l in 0..=depth {
            paths.extend(FinPath::all_from(e, v, l));
        }
    }
    for mu in &paths {
        for nu in &paths {
            if mu.source() != nu.source() {
                continue;
            }
            let cyl = ArrowCylinder::new(mu.clone(), nu.clone()).expect("sources agree");
            let sample = cyl.sample_arrow(e);
            let class = weyl::phi(e, ring, &sample);
            let image_class = pi.psi(&class)?;
            let h = weyl::phi_inverse(f, &image_class)?;
            let k = h.lag();
            // entry legs at least as deep as the key legs, starting from the
            // minimal witnessing factorization of the image arrow
            let m_min = minimal_merge_depth(f, h.range_path(), k, h.source_path())
                .expect("image is an arrow") as i64;
            let n_len = (nu.len() as i64).max(m_min - k).max(0);
            let m_len = n_len + k;
            let mu_img = h.range_path().unroll(f, m_len as usize);
            let nu_img = h.source_path().unroll(f, n_len as usize);
            entries.insert((mu.clone(), nu.clone()), (mu_img, nu_img));
        }
    }
    let om = GroupoidIsoSpec {
        source: e.clone(),
        target: f.clone(),
        map: OmegaMap::Table { depth, entries },
    };
    om.verify_homomorphism(seed, 100)?;
    Ok(om)
}

/// Reads a groupoid isomorphism back into generator images:
/// `π(f) = f ∘ Ω⁻¹`, so `p_v ↦ 1_{Z(v)}∘Ω⁻¹` and `s_e ↦ 1_{Z(e,s(e))}∘Ω⁻¹`,
/// re-expressed in normal form over the target; identity twist.
pub fn pi_from_groupoid_iso(
    om: &GroupoidIsoSpec,
    ring: RingKind,
    seed: u64,
) -> Result<IsoSpec, IsoError> {
    om.verify_homomorphism(seed, 100)?;
    let e = om.source();
    let f = om.target();
    let forward = images_through(om, ring, true)?;
    let backward = images_through(om, ring, false)?;
    Ok(IsoSpec::new(e.clone(), f.clone(), ring, forward, backward, Twist::Identity))
}

/// Builds generator images through Ω (forward = true) or Ω⁻¹.
fn images_through(
    om: &GroupoidIsoSpec,
    ring: RingKind,
    forward: bool,
) -> Result<GeneratorImages, IsoError> {
    let (from, to): (&Graph, &Graph) = if forward {
        (om.source(), om.target())
    } else {
        (om.target(), om.source())
    };
    let image_of = |mu: &FinPath, nu: &FinPath| -> Result<(FinPath, FinPath), IsoError> {
        if forward {
            om.apply_cylinder(mu, nu)
        } else {
            // invert: search the forward entry whose image is (mu, nu); for
            // the graph-iso shortcut invert the relabeling directly
            match &om.map {
                OmegaMap::GraphIso { vertex_map, edge_map } => {
                    let vinv: BTreeMap<VertexId, VertexId> =
                        vertex_map.iter().map(|(a, b)| (*b, *a)).collect();
                    let einv: BTreeMap<EdgeId, EdgeId> =
                        edge_map.iter().map(|(a, b)| (*b, *a)).collect();
                    let back = |p: &FinPath| -> Result<FinPath, IsoError> {
                        if p.is_empty() {
                            return Ok(FinPath::vertex(vinv[&p.range()]));
                        }
                        let edges: Vec<EdgeId> = p.edges().iter().map(|e| einv[e]).collect();
                        FinPath::from_edges(om.source(), &edges)
                            .map_err(|e| IsoError::Parse(format!("inverse relabeling broke: {e}")))
                    };
                    Ok((back(mu)?, back(nu)?))
                }
                OmegaMap::Table { entries, depth } => entries
                    .iter()
                    .find(|(_, img)| img.0 == *mu && img.1 == *nu)
                    .map(|(key, _)| key.clone())
                    .ok_or_else(|| {
                        IsoError::Depth(format!(
                            "table at depth {depth} has no preimage for ({}, {})",
                            textio::print_path(om.target(), mu),
                            textio::print_path(om.target(), nu),
                        ))
                    }),
            }
        }
    };
    let mut vertex = BTreeMap::new();
    for v in from.vertices() {
        // Ω±(Z(v)) = ⊔_{e ∈ vE¹} Ω±(Z(e)); read off the depth-1 entries
        let mut img = AlgebraElement::zero(ring);
        for &edge in from.incoming(v) {
            let p = FinPath::edge(from, edge);
            let (m, n) = image_of(&p, &p)?;
            img = img.add(
                to,
                &AlgebraElement::indicator(
                    to,
                    ring,
                    &ArrowCylinder::new(m, n).map_err(|e| IsoError::Parse(e.to_string()))?,
                ),
            );
        }
        vertex.insert(v, img);
    }
    let mut edge = BTreeMap::new();
    let mut ghost = BTreeMap::new();
    for ed in from.edges() {
        let mu = FinPath::edge(from, ed);
        let nu = FinPath::vertex(from.source(ed));
        let (m, n) = image_of(&mu, &nu)?;
        let img = AlgebraElement::indicator(
            to,
            ring,
            &ArrowCylinder::new(m, n).map_err(|e| IsoError::Parse(e.to_string()))?,
        );
        ghost.insert(ed, img.star(to));
        edge.insert(ed, img);
    }
    GeneratorImages::new(from, vertex, edge, ghost)
}

// ---------------------------------------------------------------------------
// spec and omega file formats
// ---------------------------------------------------------------------------

/// Parses the iso-spec file format:
///
/// ```text
/// [source]
/// graph = e.txt
/// [target]
/// graph = f.txt
/// [images]
/// p v = 1*[v|v]
/// s a = 1*[b|v]
/// t a = 1*[v|b]
/// [twist]
/// ring = identity
/// [inverse]
/// p v = 1*[v|v]
/// ...
/// ```
///
/// Graph paths are resolved by the `load` callback so the parser stays free
/// of filesystem policy.
pub fn parse_iso_spec<L>(input: &str, ring: RingKind, load: L) -> Result<IsoSpec, IsoError>
where
    L: Fn(&str) -> Result<Graph, String>,
{
    #[derive(PartialEq)]
    enum Section {
        None,
        Source,
        Target,
        Images,
        Twist,
        Inverse,
    }
    let mut section = Section::None;
    let mut source: Option<Graph> = None;
    let mut target: Option<Graph> = None;
    let mut twist = Twist::Identity;
    let mut fwd_lines: Vec<String> = Vec::new();
    let mut bwd_lines: Vec<String> = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        match line {
            "[source]" => section = Section::Source,
            "[target]" => section = Section::Target,
            "[images]" => section = Section::Images,
            "[twist]" => section = Section::Twist,
            "[inverse]" => section = Section::Inverse,
            _ => {
                let fail = |msg: &str| IsoError::Parse(format!("line {}: {msg}", idx + 1));
                match section {
                    Section::Source | Section::Target => {
                        let path = line
                            .strip_prefix("graph")
                            .map(|r| r.trim_start())
                            .and_then(|r| r.strip_prefix('='))
                            .ok_or_else(|| fail("expected `graph = <file>`"))?
                            .trim();
                        let g = load(path).map_err(IsoError::Parse)?;
                        if section == Section::Source {
                            source = Some(g);
                        } else {
                            target = Some(g);
                        }
                    }
                    Section::Twist => {
                        let value = line
                            .strip_prefix("ring")
                            .map(|r| r.trim_start())
                            .and_then(|r| r.strip_prefix('='))
                            .ok_or_else(|| fail("expected `ring = identity|conjugation`"))?
                            .trim();
                        twist = match value {
                            "identity" => Twist::Identity,
                            "conjugation" => Twist::Conjugation,
                            other => return Err(fail(&format!("unknown twist `{other}`"))),
                        };
                    }
                    Section::Images => fwd_lines.push(line.to_string()),
                    Section::Inverse => bwd_lines.push(line.to_string()),
                    Section::None => return Err(fail("content before any section")),
                }
            }
        }
    }
    let source = source.ok_or_else(|| IsoError::Parse("missing [source] graph".into()))?;
    let target = target.ok_or_else(|| IsoError::Parse("missing [target] graph".into()))?;
    if twist == Twist::Conjugation && ring != RingKind::Gauss {
        return Err(IsoError::Parse(
            "conjugation twist requires the gauss ring".into(),
        ));
    }
    let forward = parse_images(&fwd_lines, &source, &target, ring)?;
    let backward = parse_images(&bwd_lines, &target, &source, ring)?;
    Ok(IsoSpec::new(source, target, ring, forward, backward, twist))
}

fn parse_images(
    lines: &[String],
    from: &Graph,
    to: &Graph,
    ring: RingKind,
) -> Result<GeneratorImages, IsoError> {
    let mut vertex = BTreeMap::new();
    let mut edge = BTreeMap::new();
    let mut ghost = BTreeMap::new();
    for line in lines {
        let mut parts = line.splitn(2, '=');
        let lhs = parts.next().unwrap().trim();
        let rhs = parts
            .next()
            .ok_or_else(|| IsoError::Parse(format!("expected `=` in `{line}`")))?
            .trim();
        let el = textio::parse_element(to, ring, rhs).map_err(|e| IsoError::Parse(e.0))?;
        let mut toks = lhs.split_whitespace();
        let kind = toks.next().unwrap_or("");
        let id = toks
            .next()
            .ok_or_else(|| IsoError::Parse(format!("expected id in `{lhs}`")))?;
        match kind {
            "p" => {
                let v = from
                    .vertex_by_name(id)
                    .ok_or_else(|| IsoError::Parse(format!("unknown vertex `{id}`")))?;
                vertex.insert(v, el);
            }
            "s" => {
                let e = from
                    .edge_by_name(id)
                    .ok_or_else(|| IsoError::Parse(format!("unknown edge `{id}`")))?;
                edge.insert(e, el);
            }
            "t" => {
                let e = from
                    .edge_by_name(id)
                    .ok_or_else(|| IsoError::Parse(format!("unknown edge `{id}`")))?;
                ghost.insert(e, el);
            }
            other => return Err(IsoError::Parse(format!("unknown image kind `{other}`"))),
        }
    }
    GeneratorImages::new(from, vertex, edge, ghost)
}

/// Renders an iso spec in the file format (graph files written by name).
pub fn render_iso_spec(spec: &IsoSpec, source_file: &str, target_file: &str) -> String {
    let mut out = String::new();
    out.push_str(&format!("[source]\ngraph = {source_file}\n[target]\ngraph = {target_file}\n"));
    let section = |images: &GeneratorImages, from: &Graph, to: &Graph, out: &mut String| {
        for v in from.vertices() {
            out.push_str(&format!(
                "p {} = {}\n",
                from.vertex_name(v),
                textio::print_element(to, images.vertex_image(v))
            ));
        }
        for e in from.edges() {
            out.push_str(&format!(
                "s {} = {}\n",
                from.edge_name(e),
                textio::print_element(to, images.edge_image(e))
            ));
        }
        for e in from.edges() {
            out.push_str(&format!(
                "t {} = {}\n",
                from.edge_name(e),
                textio::print_element(to, images.ghost_image(e))
            ));
        }
    };
    out.push_str("[images]\n");
    section(&spec.forward, &spec.source, &spec.target, &mut out);
    out.push_str(&format!("[twist]\nring = {}\n", spec.twist.name()));
    out.push_str("[inverse]\n");
    section(&spec.backward, &spec.target, &spec.source, &mut out);
    out
}

/// Parses the omega file format: `[source]`/`[target]` as in iso specs, then
/// either a `[graphiso]` section with `vertex u -> u'` / `edge e -> e'`
/// lines, or a `[table] depth = N` section with `mu|nu -> mu'|nu'` lines.
pub fn parse_omega<L>(input: &str, load: L) -> Result<GroupoidIsoSpec, IsoError>
where
    L: Fn(&str) -> Result<Graph, String>,
{
    #[derive(PartialEq)]
    enum Section {
        None,
        Source,
        Target,
        GraphIso,
        Table,
    }
    let mut section = Section::None;
    let mut source: Option<Graph> = None;
    let mut target: Option<Graph> = None;
    let mut graphiso_lines: Vec<String> = Vec::new();
    let mut table_lines: Vec<String> = Vec::new();
    let mut depth = 0usize;
    for (idx, raw) in input.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fail = |msg: &str| IsoError::Parse(format!("line {}: {msg}", idx + 1));
        if line == "[source]" {
            section = Section::Source;
        } else if line == "[target]" {
            section = Section::Target;
        } else if line == "[graphiso]" {
            section = Section::GraphIso;
        } else if let Some(rest) = line.strip_prefix("[table]") {
            section = Section::Table;
            let rest = rest.trim();
            if let Some(d) = rest.strip_prefix("depth").map(|r| r.trim_start()) {
                depth = d
                    .strip_prefix('=')
                    .and_then(|v| v.trim().parse().ok())
                    .ok_or_else(|| fail("expected `[table] depth = N`"))?;
            }
        } else {
            match section {
                Section::Source | Section::Target => {
                    let path = line
                        .strip_prefix("graph")
                        .map(|r| r.trim_start())
                        .and_then(|r| r.strip_prefix('='))
                        .ok_or_else(|| fail("expected `graph = <file>`"))?
                        .trim();
                    let g = load(path).map_err(IsoError::Parse)?;
                    if section == Section::Source {
                        source = Some(g);
                    } else {
                        target = Some(g);
                    }
                }
                Section::GraphIso | Section::Table => {
                    if section == Section::GraphIso {
                        graphiso_lines.push(line.to_string());
                    } else {
                        table_lines.push(line.to_string());
                    }
                }
                Section::None => return Err(fail("content before any section")),
            }
        }
    }
    let source = source.ok_or_else(|| IsoError::Parse("missing [source] graph".into()))?;
    let target = target.ok_or_else(|| IsoError::Parse("missing [target] graph".into()))?;
    if !graphiso_lines.is_empty() {
        let mut vmap = BTreeMap::new();
        let mut emap = BTreeMap::new();
        for line in &graphiso_lines {
            let (kind, rest) = line
                .split_once(' ')
                .ok_or_else(|| IsoError::Parse(format!("bad graphiso line `{line}`")))?;
            let (a, b) = rest
                .split_once("->")
                .ok_or_else(|| IsoError::Parse(format!("expected `->` in `{line}`")))?;
            let (a, b) = (a.trim(), b.trim());
            match kind {
                "vertex" => {
                    let va = source
                        .vertex_by_name(a)
                        .ok_or_else(|| IsoError::Parse(format!("unknown vertex `{a}`")))?;
                    let vb = target
                        .vertex_by_name(b)
                        .ok_or_else(|| IsoError::Parse(format!("unknown vertex `{b}`")))?;
                    vmap.insert(va, vb);
                }
                "edge" => {
                    let ea = source
                        .edge_by_name(a)
                        .ok_or_else(|| IsoError::Parse(format!("unknown edge `{a}`")))?;
                    let eb = target
                        .edge_by_name(b)
                        .ok_or_else(|| IsoError::Parse(format!("unknown edge `{b}`")))?;
                    emap.insert(ea, eb);
                }
                other => return Err(IsoError::Parse(format!("unknown graphiso kind `{other}`"))),
            }
        }
        return GroupoidIsoSpec::from_graph_iso(source, target, vmap, emap);
    }
    let mut entries = BTreeMap::new();
    for line in &table_lines {
        let (lhs, rhs) = line
            .split_once("->")
            .ok_or_else(|| IsoError::Parse(format!("expected `->` in `{line}`")))?;
        let parse_pair = |g: &Graph, s: &str| -> Result<(FinPath, FinPath), IsoError> {
            let (m, n) = s
                .trim()
                .split_once('|')
                .ok_or_else(|| IsoError::Parse(format!("expected `mu|nu` in `{s}`")))?;
            Ok((
                textio::parse_path(g, m).map_err(|e| IsoError::Parse(e.0))?,
                textio::parse_path(g, n).map_err(|e| IsoError::Parse(e.0))?,
            ))
        };
        let key = parse_pair(&source, lhs)?;
        let value = parse_pair(&target, rhs)?;
        entries.insert(key, value);
    }
    Ok(GroupoidIsoSpec { source, target, map: OmegaMap::Table { depth, entries } })
}

/// Renders a groupoid iso in the omega file format.
pub fn render_omega(om: &GroupoidIsoSpec, source_file: &str, target_file: &str) -> String {
    let mut out = format!("[source]\ngraph = {source_file}\n[target]\ngraph = {target_file}\n");
    match &om.map {
        OmegaMap::GraphIso { vertex_map, edge_map } => {
            out.push_str("[graphiso]\n");
            for (a, b) in vertex_map {
                out.push_str(&format!(
                    "vertex {} -> {}\n",
                    om.source.vertex_name(*a),
                    om.target.vertex_name(*b)
                ));
            }
            for (a, b) in edge_map {
                out.push_str(&format!(
                    "edge {} -> {}\n",
                    om.source.edge_name(*a),
                    om.target.edge_name(*b)
                ));
            }
        }
        OmegaMap::Table { depth, entries } => {
            out.push_str(&format!("[table] depth = {depth}\n"));
            for ((mu, nu), (m, n)) in entries {
                out.push_str(&format!(
                    "{}|{} -> {}|{}\n",
                    textio::print_path(&om.source, mu),
                    textio::print_path(&om.source, nu),
                    textio::print_path(&om.target, m),
                    textio::print_path(&om.target, n),
                ));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// the shipped spec corpus
// ---------------------------------------------------------------------------

/// The identity spec on a graph.
pub fn identity_spec(g: &Graph, ring: RingKind) -> IsoSpec {
    IsoSpec::new(
        g.clone(),
        g.clone(),
        ring,
        GeneratorImages::identity(g, ring),
        GeneratorImages::identity(g, ring),
        Twist::Identity,
    )
}

fn relabel_images(
    from: &Graph,
    to: &Graph,
    ring: RingKind,
    vmap: &BTreeMap<VertexId, VertexId>,
    emap: &BTreeMap<EdgeId, EdgeId>,
) -> GeneratorImages {
    GeneratorImages {
        vertex: from
            .vertices()
            .map(|v| (v, AlgebraElement::vertex_idem(to, ring, vmap[&v])))
            .collect(),
        edge: from
            .edges()
            .map(|e| (e, AlgebraElement::edge_gen(to, ring, emap[&e])))
            .collect(),
        ghost: from
            .edges()
            .map(|e| (e, AlgebraElement::ghost_gen(to, ring, emap[&e])))
            .collect(),
    }
}

/// A graph-isomorphism spec from explicit name maps.
pub fn relabel_spec(
    source: &Graph,
    target: &Graph,
    ring: RingKind,
    vertex_pairs: &[(&str, &str)],
    edge_pairs: &[(&str, &str)],
) -> IsoSpec {
    let vmap: BTreeMap<VertexId, VertexId> = vertex_pairs
        .iter()
        .map(|(a, b)| {
            (
                source.vertex_by_name(a).expect("vertex exists"),
                target.vertex_by_name(b).expect("vertex exists"),
            )
        })
        .collect();
    let emap: BTreeMap<EdgeId, EdgeId> = edge_pairs
        .iter()
        .map(|(a, b)| {
            (
                source.edge_by_name(a).expect("edge exists"),
                target.edge_by_name(b).expect("edge exists"),
            )
        })
        .collect();
    let vinv: BTreeMap<VertexId, VertexId> = vmap.iter().map(|(a, b)| (*b, *a)).collect();
    let einv: BTreeMap<EdgeId, EdgeId> = emap.iter().map(|(a, b)| (*b, *a)).collect();
    IsoSpec::new(
        source.clone(),
        target.clone(),
        ring,
        relabel_images(source, target, ring, &vmap, &emap),
        relabel_images(target, source, ring, &vinv, &einv),
        Twist::Identity,
    )
}

/// The conjugation-twisted identity over ℤ[i]: a ring *-isomorphism that is
/// not an algebra isomorphism.
pub fn conjugation_twist_spec(g: &Graph) -> IsoSpec {
    IsoSpec::new(
        g.clone(),
        g.clone(),
        RingKind::Gauss,
        GeneratorImages::identity(g, RingKind::Gauss),
        GeneratorImages::identity(g, RingKind::Gauss),
        Twist::Conjugation,
    )
}

/// Negative control: duplicate edge images break (L3); the witness is the
/// nonzero product `t_a·s_b = 1_{Z(v)}`.
pub fn broken_l3_spec() -> IsoSpec {
    let g = crate::corpus::g_2loop();
    let ring = RingKind::Int;
    let a = g.edge_by_name("a").unwrap();
    let b = g.edge_by_name("b").unwrap();
    let mut images = GeneratorImages::identity(&g, ring);
    images.edge.insert(b, AlgebraElement::edge_gen(&g, ring, a));
    images.ghost.insert(b, AlgebraElement::ghost_gen(&g, ring, a));
    IsoSpec::new(
        g.clone(),
        g.clone(),
        ring,
        images,
        GeneratorImages::identity(&g, ring),
        Twist::Identity,
    )
}

/// Negative control: crossed ghost images make the computed image of
/// `1_{Z(a)}` the off-diagonal `1_{Z(a,b)}`, so diagonal preservation fails
/// with that witness.
pub fn broken_diagonal_spec() -> IsoSpec {
    let g = crate::corpus::g_2loop();
    let ring = RingKind::Int;
    let a = g.edge_by_name("a").unwrap();
    let b = g.edge_by_name("b").unwrap();
    let mut images = GeneratorImages::identity(&g, ring);
    images.ghost.insert(a, AlgebraElement::ghost_gen(&g, ring, b));
    images.ghost.insert(b, AlgebraElement::ghost_gen(&g, ring, a));
    IsoSpec::new(
        g.clone(),
        g.clone(),
        ring,
        images,
        GeneratorImages::identity(&g, ring),
        Twist::Identity,
    )
}

/// The positive spec corpus: identity maps on all reference graphs, the
/// relabelings, and the conjugation-twisted identity.
pub fn corpus_specs() -> Vec<(String, IsoSpec)> {
    let mut out = Vec::new();
    for (name, g) in crate::corpus::reference_graphs() {
        out.push((format!("identity-{name}"), identity_spec(&g, RingKind::Int)));
    }
    let g2 = crate::corpus::g_2loop();
    out.push((
        "relabel-G_2LOOP-swap-ab".to_string(),
        relabel_spec(&g2, &g2, RingKind::Int, &[("v", "v")], &[("a", "b"), ("b", "a")]),
    ));
    let c2 = crate::corpus::g_cycle2();
    out.push((
        "relabel-G_CYCLE2-swap-uv".to_string(),
        relabel_spec(
            &c2,
            &c2,
            RingKind::Int,
            &[("u", "v"), ("v", "u")],
            &[("e", "f"), ("f", "e")],
        ),
    ));
    out.push((
        "conjugation-twist-G_2LOOP".to_string(),
        conjugation_twist_spec(&g2),
    ));
    out
}

/// The negative controls with the check each must fail.
pub fn negative_specs() -> Vec<(String, IsoSpec, &'static str)> {
    vec![
        ("broken-L3".to_string(), broken_l3_spec(), "forward:L3"),
        (
            "broken-diagonal".to_string(),
            broken_diagonal_spec(),
            "forward:diagonal-preservation",
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn identity_specs_validate() {
        for (name, spec) in corpus_specs() {
            let report = spec.validate(3);
            assert!(report.all_pass(), "{name} failed:\n{}", report.render());
        }
    }

    #[test]
    fn broken_l3_is_rejected_with_witness() {
        let report = broken_l3_spec().validate(3);
        assert!(!report.all_pass());
        let l3 = report
            .checks
            .iter()
            .find(|c| c.name == "forward:L3")
            .unwrap();
        assert!(!l3.pass);
        let w = l3.witness.as_ref().unwrap();
        assert!(w.contains("t_a·s_b") || w.contains("t_b·s_a"), "witness: {w}");
    }

    #[test]
    fn broken_diagonal_is_rejected_with_nondiagonal_witness() {
        let report = broken_diagonal_spec().validate(3);
        assert!(!report.all_pass());
        let diag = report
            .checks
            .iter()
            .find(|c| c.name == "forward:diagonal-preservation")
            .unwrap();
        assert!(!diag.pass);
        let w = diag.witness.as_ref().unwrap();
        assert!(w.contains("[a|b]") || w.contains("[b|a]"), "witness: {w}");
    }

    #[test]
    fn extend_relabel_moves_cylinders() {
        let g = corpus::g_2loop();
        let spec = relabel_spec(&g, &g, RingKind::Int, &[("v", "v")], &[("a", "b"), ("b", "a")]);
        let v = spec.validated(3).unwrap();
        let a = FinPath::edge(&g, g.edge_by_name("a").unwrap());
        let b = FinPath::edge(&g, g.edge_by_name("b").unwrap());
        let f = AlgebraElement::indicator(
            &g,
            RingKind::Int,
            &ArrowCylinder::new(a.clone(), b.clone()).unwrap(),
        );
        let img = v.extend(&f);
        let expect = AlgebraElement::indicator(
            &g,
            RingKind::Int,
            &ArrowCylinder::new(b, a).unwrap(),
        );
        assert!(img.equals(&g, &expect));
    }

    #[test]
    fn extend_is_multiplicative_and_star_preserving() {
        let g = corpus::g_2loop();
        let spec = identity_spec(&g, RingKind::Int).validated(2).unwrap();
        let mut rng = crate::sampling::Rng::new(17);
        for _ in 0..40 {
            let f = crate::sampling::random_element(&mut rng, &g, RingKind::Int);
            let h = crate::sampling::random_element(&mut rng, &g, RingKind::Int);
            let lhs = spec.extend(&f.mul(&g, &h));
            let rhs = spec.extend(&f).mul(&g, &spec.extend(&h));
            assert!(lhs.equals(&g, &rhs));
            assert!(spec
                .extend(&f.star(&g))
                .equals(&g, &spec.extend(&f).star(&g)));
        }
    }

    #[test]
    fn twist_conjugates_coefficients() {
        // i·1_{Z(a)} maps to −i·1_{Z(a)} under the conjugation twist.
        let g = corpus::g_2loop();
        let spec = conjugation_twist_spec(&g).validated(2).unwrap();
        let a = FinPath::edge(&g, g.edge_by_name("a").unwrap());
        let unit = AlgebraElement::indicator(&g, RingKind::Gauss, &ArrowCylinder::unit(a));
        let f = unit.scalar_mul(&crate::ring::RingScalar::gauss(0, 1));
        let img = spec.extend(&f);
        let expect = unit.scalar_mul(&crate::ring::RingScalar::gauss(0, -1));
        assert!(img.equals(&g, &expect));
    }

    #[test]
    fn groupoid_iso_round_trip_identity() {
        let g = corpus::g_2loop();
        let spec = identity_spec(&g, RingKind::Int).validated(2).unwrap();
        let om = groupoid_iso_from_pi(&spec, 2, 7).unwrap();
        // identity table: every entry maps to itself
        if let OmegaMap::Table { entries, .. } = om.map() {
            for (k, v) in entries {
                assert_eq!(k, v);
            }
        } else {
            panic!("expected table");
        }
        let pi2 = pi_from_groupoid_iso(&om, RingKind::Int, 7).unwrap();
        let report = pi2.validate(3);
        assert!(report.all_pass(), "{}", report.render());
    }

    #[test]
    fn omega_graph_iso_swap_maps_arrows() {
        let c2 = corpus::g_cycle2();
        let om = GroupoidIsoSpec::from_graph_iso(
            c2.clone(),
            c2.clone(),
            [("u", "v"), ("v", "u")]
                .iter()
                .map(|(a, b)| {
                    (
                        c2.vertex_by_name(a).unwrap(),
                        c2.vertex_by_name(b).unwrap(),
                    )
                })
                .collect(),
            [("e", "f"), ("f", "e")]
                .iter()
                .map(|(a, b)| (c2.edge_by_name(a).unwrap(), c2.edge_by_name(b).unwrap()))
                .collect(),
        )
        .unwrap();
        om.verify_homomorphism(7, 50).unwrap();
        let pi = pi_from_groupoid_iso(&om, RingKind::Int, 7).unwrap();
        assert!(pi.validate(4).all_pass());
    }

    #[test]
    fn spec_file_round_trip() {
        let g2 = corpus::g_2loop();
        let spec = relabel_spec(&g2, &g2, RingKind::Int, &[("v", "v")], &[("a", "b"), ("b", "a")]);
        let text = render_iso_spec(&spec, "g2loop.txt", "g2loop.txt");
        let parsed = parse_iso_spec(&text, RingKind::Int, |_| Ok(corpus::g_2loop())).unwrap();
        assert!(parsed.validate(3).all_pass());
    }
}
