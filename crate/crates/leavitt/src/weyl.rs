//! The Weyl groupoid: classes `[(n,x)]` of normalizers anchored at domain
//! points, with the groupoid structure `[(n₁,x₁)][(n₂,x₂)] = [(n₁n₂,x₂)]`,
//! and the isomorphism with the graph groupoid.
//!
//! Two anchored normalizers are identified when they agree as germs at the
//! base point. At a non-isolated point this is decided by lag equality plus
//! agreement of the refined rewrite outputs at the common rule depth; at an
//! isolated point by agreement of the action at the point together with the
//! compression `p_x n^* m p_x` having degree 0. Classes store a live
//! representative; there is no canonical representative, only the decision
//! procedure.

use crate::action::{compress, ActionError, Compression, Normalizer};
use crate::algebra::AlgebraElement;
use crate::graph::Graph;
use crate::groupoid::{minimal_merge_depth, ArrowCylinder, ArrowTriple, GroupoidError};
use crate::path::{least_rotation, rotate_cycle, FinPath, LassoPath};
use crate::ring::RingKind;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WeylError {
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error(transparent)]
    Groupoid(#[from] GroupoidError),
    #[error("classes are not composable")]
    NotComposable,
    #[error("paths do not share an eventually periodic tail")]
    NotEventuallyPeriodic,
}

/// A class `[(n, x)]` given by a live representative.
#[derive(Clone, Debug)]
pub struct WeylClass {
    n: Normalizer,
    x: LassoPath,
}

impl WeylClass {
    /// Anchors a normalizer at a point of its domain.
    pub fn new(g: &Graph, n: Normalizer, x: LassoPath) -> Result<WeylClass, WeylError> {
        let pm = n.alpha(g)?;
        if pm.rule_for(g, &x).is_none() {
            return Err(WeylError::Action(ActionError::OutsideDomain));
        }
        Ok(WeylClass { n, x })
    }

    pub fn normalizer(&self) -> &Normalizer {
        &self.n
    }

    pub fn base_point(&self) -> &LassoPath {
        &self.x
    }

    /// The action image `α_n(x)`.
    pub fn image_point(&self, g: &Graph) -> Result<LassoPath, WeylError> {
        Ok(self.n.alpha(g)?.apply(g, &self.x)?)
    }
}

/// Decides `(n, x) ∼ (m, x′)`.
pub fn equivalent(
    g: &Graph,
    n: &Normalizer,
    x: &LassoPath,
    m: &Normalizer,
    x2: &LassoPath,
) -> Result<bool, WeylError> {
    let pm_n = n.alpha(g)?;
    let pm_m = m.alpha(g)?;
    let rule_n = pm_n.rule_for(g, x).ok_or(ActionError::OutsideDomain)?;
    let rule_m = pm_m.rule_for(g, x2).ok_or(ActionError::OutsideDomain)?;
    if x != x2 {
        return Ok(false);
    }
    match crate::action::IsolatedPoint::locate(g, x) {
        Some(ip) => {
            let img_n = pm_n.apply(g, x)?;
            let img_m = pm_m.apply(g, x)?;
            if img_n != img_m {
                return Ok(false);
            }
            let w = n.element().star(g).mul(g, m.element());
            match compress(g, &ip, &w)? {
                // degree(0) is 0 by convention; with agreeing actions this
                // compression is nonzero for genuine normalizers.
                Compression::Zero => Ok(true),
                Compression::Single { degree, .. } => Ok(degree == 0),
            }
        }
        None => {
            // Germ equality on Z(x(0,D)) at the refined depth D: equal lags
            // and equal rewritten outputs. Validated against the brute-force
            // lasso oracle in the acceptance suite.
            let depth = rule_n.input().len().max(rule_m.input().len());
            let refined_in = x.unroll(g, depth);
            let ext_n = refined_in.strip_prefix(g, rule_n.input()).expect("rule contains x");
            let ext_m = refined_in.strip_prefix(g, rule_m.input()).expect("rule contains x");
            let out_n = rule_n.output().concat(g, &ext_n).expect("rule legs compose");
            let out_m = rule_m.output().concat(g, &ext_m).expect("rule legs compose");
            Ok(rule_n.lag() == rule_m.lag() && out_n == out_m)
        }
    }
}

/// Class-level equality of two Weyl classes.
pub fn class_equivalent(g: &Graph, c1: &WeylClass, c2: &WeylClass) -> Result<bool, WeylError> {
    equivalent(g, &c1.n, &c1.x, &c2.n, &c2.x)
}

/// `[(n₁,x₁)][(n₂,x₂)] = [(n₁n₂,x₂)]`, defined when `α_{n₂}(x₂) = x₁`.
pub fn weyl_compose(g: &Graph, c1: &WeylClass, c2: &WeylClass) -> Result<WeylClass, WeylError> {
    let img = c2.image_point(g)?;
    if img != c1.x {
        return Err(WeylError::NotComposable);
    }
    WeylClass::new(g, c1.n.mul(g, &c2.n), c2.x.clone())
}

/// `[(n,x)]⁻¹ = [(n*, α_n(x))]`.
pub fn weyl_inverse(g: &Graph, c: &WeylClass) -> Result<WeylClass, WeylError> {
    WeylClass::new(g, c.n.star(g), c.image_point(g)?)
}

/// `r([(n,x)]) = [(nn*, α_n(x))]`.
pub fn weyl_range(g: &Graph, c: &WeylClass) -> Result<WeylClass, WeylError> {
    WeylClass::new(g, c.n.mul(g, &c.n.star(g)), c.image_point(g)?)
}

/// `s([(n,x)]) = [(n*n, x)]`.
pub fn weyl_source(g: &Graph, c: &WeylClass) -> Result<WeylClass, WeylError> {
    WeylClass::new(g, c.n.star(g).mul(g, &c.n), c.x.clone())
}

/// `Φ(μz, |μ|−|ν|, νz) = [(1_{Z(μ,ν)}, νz)]`, using the minimal witnessing
/// factorization of the arrow on canonical forms.
pub fn phi(g: &Graph, ring: RingKind, arrow: &ArrowTriple) -> WeylClass {
    let x = arrow.range_path();
    let y = arrow.source_path();
    let k = arrow.lag();
    let m = minimal_merge_depth(g, x, k, y).expect("arrows are shift equivalent");
    let mu = x.unroll(g, m);
    let nu = y.unroll(g, (m as i64 - k) as usize);
    let cyl = ArrowCylinder::new(mu, nu).expect("witness legs share a source");
    WeylClass { n: Normalizer::cylinder(g, ring, &cyl), x: y.clone() }
}

/// Writes a lasso as `stem·η^∞` for a prescribed rotation class `η`:
/// finds `j` with `cycle = rot_left(η, j)` and returns `prefix·η(j..)`.
fn stem_for_cycle(g: &Graph, x: &LassoPath, eta: &FinPath) -> Option<FinPath> {
    let m = eta.len();
    if x.cycle().len() != m {
        return None;
    }
    let j = (0..m).find(|&j| rotate_cycle(g, eta, j) == *x.cycle())?;
    if j == 0 {
        return Some(x.prefix().clone());
    }
    let suffix = FinPath::from_edges(g, &eta.edges()[j..]).expect("cycle edges compose");
    Some(x.prefix().concat(g, &suffix).expect("suffix starts at prefix source"))
}

/// A constructive section of `Φ`: produces an arrow whose class is
/// `[(n, y)]`.
///
/// At a non-isolated base point any normal-form term `(β,γ)` with `y ∈ Z(γ)`
/// already witnesses the germ. At an isolated point (always eventually
/// periodic over a finite graph, with entry-free cycle `η`) the lag must be
/// corrected by the compression degree of `p_y·1_{Z(ν,μ)}·n·p_y`, a multiple
/// of `|η|`.
pub fn phi_inverse(g: &Graph, c: &WeylClass) -> Result<ArrowTriple, WeylError> {
    let y = &c.x;
    let pm = c.n.alpha(g)?;
    let x = pm.apply(g, y)?;
    match crate::action::IsolatedPoint::locate(g, y) {
        None => {
            let rule = pm.rule_for(g, y).expect("checked in apply");
            let lag = rule.lag();
            Ok(ArrowTriple::new(g, x, lag, y.clone())?)
        }
        Some(ip) => {
            let eta = y.cycle().clone();
            let nu = y.prefix().clone();
            let mu = stem_for_cycle(g, &x, &eta).ok_or(WeylError::NotEventuallyPeriodic)?;
            let cyl = ArrowCylinder::new(mu.clone(), nu.clone())
                .expect("stems end at the common cycle range");
            let witness = AlgebraElement::indicator(g, c.n.element().ring(), &cyl);
            let w = witness.star(g).mul(g, c.n.element());
            let degree = match compress(g, &ip, &w)? {
                Compression::Single { degree, .. } => degree,
                Compression::Zero => {
                    // unreachable for y ∈ dom(n); keep the honest error
                    return Err(WeylError::Action(ActionError::MalformedCompression));
                }
            };
            debug_assert_eq!(
                degree.rem_euclid(eta.len() as i64),
                0,
                "compression degree must be a multiple of |η|"
            );
            let lag = cyl.degree() + degree;
            Ok(ArrowTriple::new(g, x, lag, y.clone())?)
        }
    }
}

/// Finds `(i, j)` with `|μ|−|ν| = |λ·ηⁱ| − |κ·ηʲ|` where `νx = κη^∞`,
/// `μx = λη^∞`, `η` is the lexicographically least rotation of the common
/// primitive cycle and `κ, λ` the minimal stems.
pub fn lag_decompose(
    g: &Graph,
    x: &LassoPath,
    mu: &FinPath,
    nu: &FinPath,
) -> Result<(usize, usize), WeylError> {
    let nux = x.prepend(g, nu).map_err(|_| WeylError::NotEventuallyPeriodic)?;
    let mux = x.prepend(g, mu).map_err(|_| WeylError::NotEventuallyPeriodic)?;
    let eta = least_rotation(g, nux.cycle());
    let kappa = stem_for_cycle(g, &nux, &eta).ok_or(WeylError::NotEventuallyPeriodic)?;
    let lambda = stem_for_cycle(g, &mux, &eta).ok_or(WeylError::NotEventuallyPeriodic)?;
    let delta = (mu.len() as i64 - nu.len() as i64) - (lambda.len() as i64 - kappa.len() as i64);
    if delta.rem_euclid(eta.len() as i64) != 0 {
        return Err(WeylError::NotEventuallyPeriodic);
    }
    let d = delta / eta.len() as i64;
    Ok((d.max(0) as usize, (-d).max(0) as usize))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::ring::RingScalar;

    fn path(g: &Graph, names: &[&str]) -> FinPath {
        let edges: Vec<_> = names.iter().map(|n| g.edge_by_name(n).unwrap()).collect();
        FinPath::from_edges(g, &edges).unwrap()
    }

    fn vertex(g: &Graph, name: &str) -> FinPath {
        FinPath::vertex(g.vertex_by_name(name).unwrap())
    }

    fn cyl_norm(g: &Graph, mu: FinPath, nu: FinPath) -> Normalizer {
        Normalizer::cylinder(g, RingKind::Int, &ArrowCylinder::new(mu, nu).unwrap())
    }

    #[test]
    fn loop_degree_zero_classes_agree() {
        // (1_{Z(e,v)}, e^∞) ~ (1_{Z(ee,e)}, e^∞): both fix e^∞ and the
        // compression p_x·1_{Z(v,e)}·1_{Z(ee,e)}·p_x has degree −1+1 = 0.
        let g = corpus::g_loop();
        let e = path(&g, &["e"]);
        let v = vertex(&g, "v");
        let ee = path(&g, &["e", "e"]);
        let e_inf = LassoPath::cycle_only(&g, e.clone()).unwrap();
        let n = cyl_norm(&g, e.clone(), v.clone());
        let m = cyl_norm(&g, ee.clone(), e.clone());
        assert!(equivalent(&g, &n, &e_inf, &m, &e_inf).unwrap());

        // (1_{Z(e,v)}, e^∞) vs (1_{Z(v,v)}, e^∞): compression degree ±1 ≠ 0.
        let unit = cyl_norm(&g, v.clone(), v.clone());
        assert!(!equivalent(&g, &n, &e_inf, &unit, &e_inf).unwrap());
    }

    #[test]
    fn diagonal_representatives_collapse() {
        let g = corpus::g_2loop();
        let a = path(&g, &["a"]);
        let v = vertex(&g, "v");
        let a_inf = LassoPath::cycle_only(&g, a.clone()).unwrap();
        let d1 = Normalizer::diagonal(
            crate::algebra::AlgebraElement::indicator(
                &g,
                RingKind::Int,
                &ArrowCylinder::unit(a.clone()),
            )
            .scalar_mul(&RingScalar::from_i64(RingKind::Int, 2)),
        );
        let d2 = Normalizer::diagonal(crate::algebra::AlgebraElement::indicator(
            &g,
            RingKind::Int,
            &ArrowCylinder::unit(v.clone()),
        ));
        assert!(equivalent(&g, &d1, &a_inf, &d2, &a_inf).unwrap());
    }

    #[test]
    fn compose_squares_the_loop_cylinder() {
        let g = corpus::g_loop();
        let e = path(&g, &["e"]);
        let v = vertex(&g, "v");
        let ee = path(&g, &["e", "e"]);
        let e_inf = LassoPath::cycle_only(&g, e.clone()).unwrap();
        let c = WeylClass::new(&g, cyl_norm(&g, e.clone(), v.clone()), e_inf.clone()).unwrap();
        let sq = weyl_compose(&g, &c, &c).unwrap();
        let expect = WeylClass::new(&g, cyl_norm(&g, ee, v.clone()), e_inf).unwrap();
        assert!(class_equivalent(&g, &sq, &expect).unwrap());
    }

    #[test]
    fn inverse_composes_to_range() {
        let g = corpus::g_2loop();
        let mut rng = crate::sampling::Rng::new(9);
        for _ in 0..25 {
            let arrow = crate::sampling::random_arrow(&mut rng, &g);
            let c = phi(&g, RingKind::Int, &arrow);
            let inv = weyl_inverse(&g, &c).unwrap();
            let prod = weyl_compose(&g, &c, &inv).unwrap();
            let range = weyl_range(&g, &c).unwrap();
            assert!(class_equivalent(&g, &prod, &range).unwrap());
            let src = weyl_source(&g, &c).unwrap();
            let fixed = weyl_compose(&g, &c, &src).unwrap();
            assert!(class_equivalent(&g, &fixed, &c).unwrap());
        }
    }

    #[test]
    fn phi_on_the_loop() {
        let g = corpus::g_loop();
        let e = path(&g, &["e"]);
        let v = vertex(&g, "v");
        let e_inf = LassoPath::cycle_only(&g, e.clone()).unwrap();
        let arrow = ArrowTriple::new(&g, e_inf.clone(), 1, e_inf.clone()).unwrap();
        let c = phi(&g, RingKind::Int, &arrow);
        let expect = WeylClass::new(&g, cyl_norm(&g, e.clone(), v.clone()), e_inf.clone()).unwrap();
        assert!(class_equivalent(&g, &c, &expect).unwrap());

        // unit arrows map to unit classes
        let unit_arrow = ArrowTriple::unit(e_inf.clone());
        let cu = phi(&g, RingKind::Int, &unit_arrow);
        let src = weyl_source(&g, &cu).unwrap();
        assert!(class_equivalent(&g, &cu, &src).unwrap());
    }

    #[test]
    fn phi_inverse_examples() {
        let g = corpus::g_loop();
        let e = path(&g, &["e"]);
        let e_inf = LassoPath::cycle_only(&g, e.clone()).unwrap();
        // [(2·1_{Z(ee,e)}, e^∞)] → (e^∞, 1, e^∞)
        let n = Normalizer::check(
            &g,
            crate::algebra::AlgebraElement::indicator(
                &g,
                RingKind::Int,
                &ArrowCylinder::new(path(&g, &["e", "e"]), e.clone()).unwrap(),
            )
            .scalar_mul(&RingScalar::from_i64(RingKind::Int, 2)),
        )
        .unwrap();
        let c = WeylClass::new(&g, n, e_inf.clone()).unwrap();
        let arrow = phi_inverse(&g, &c).unwrap();
        assert_eq!(arrow.lag(), 1);
        assert_eq!(arrow.range_path(), &e_inf);

        // unit class [(1_{Z(v)}, e^∞)] → (e^∞, 0, e^∞)
        let v = vertex(&g, "v");
        let unit = WeylClass::new(&g, cyl_norm(&g, v.clone(), v), e_inf.clone()).unwrap();
        let u_arrow = phi_inverse(&g, &unit).unwrap();
        assert_eq!(u_arrow, ArrowTriple::unit(e_inf));
    }

    #[test]
    fn phi_round_trip_on_samples() {
        for (_, g) in corpus::reference_graphs() {
            let mut rng = crate::sampling::Rng::new(21);
            for _ in 0..25 {
                let arrow = crate::sampling::random_arrow(&mut rng, &g);
                let c = phi(&g, RingKind::Int, &arrow);
                let back = phi_inverse(&g, &c).unwrap();
                assert_eq!(back, arrow, "Φ must be injective with section Φ⁻¹");
            }
        }
    }

    #[test]
    fn lag_decompose_examples() {
        // Oracle: exhaustive search over i, j ≤ |μ|+|ν|+2|η|.
        fn oracle(
            g: &Graph,
            x: &LassoPath,
            mu: &FinPath,
            nu: &FinPath,
            eta_len: usize,
        ) -> Option<(usize, usize)> {
            let bound = mu.len() + nu.len() + 2 * eta_len;
            let nux = x.prepend(g, nu).unwrap();
            let mux = x.prepend(g, mu).unwrap();
            let eta = least_rotation(g, nux.cycle());
            let kappa = stem_for_cycle(g, &nux, &eta)?;
            let lambda = stem_for_cycle(g, &mux, &eta)?;
            for i in 0..=bound {
                for j in 0..=bound {
                    if mu.len() as i64 - nu.len() as i64
                        == (lambda.len() + i * eta.len()) as i64
                            - (kappa.len() + j * eta.len()) as i64
                    {
                        return Some((i, j));
                    }
                }
            }
            None
        }

        let g = corpus::g_loop();
        let e = path(&g, &["e"]);
        let v = vertex(&g, "v");
        let x = LassoPath::cycle_only(&g, e.clone()).unwrap();
        let mu = path(&g, &["e", "e"]);
        let got = lag_decompose(&g, &x, &mu, &e).unwrap();
        assert_eq!(got, (1, 0));
        assert_eq!(oracle(&g, &x, &mu, &e, 1), Some((1, 0)));

        // μ = ν gives (i, i) with lag 0; minimal choice is (0,0).
        assert_eq!(lag_decompose(&g, &x, &e, &e).unwrap(), (0, 0));

        let c2 = corpus::g_cycle2();
        let ef = path(&c2, &["e", "f"]);
        let u = vertex(&c2, "u");
        let x2 = LassoPath::cycle_only(&c2, ef.clone()).unwrap();
        let got2 = lag_decompose(&c2, &x2, &ef, &u).unwrap();
        assert_eq!(got2, (1, 0));
        assert_eq!(oracle(&c2, &x2, &ef, &u, 2), Some((1, 0)));
        let _ = v;
    }
}
