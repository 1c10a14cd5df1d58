//! The Boolean algebra of diagonal idempotents, the path/ultrafilter
//! correspondence, and the path-space map κ induced by a
//! diagonal-preserving isomorphism.
//!
//! ```bash
//! cargo run -p leavitt --example stone_duality
//! ```

use leavitt::corpus;
use leavitt::iso;
use leavitt::ring::RingKind;
use leavitt::stone::{
    check_kappa_linearity, idempotent_to_set, rho_inverse, set_to_idempotent, FilterChain,
};
use leavitt::textio::{parse_compact_open, parse_element, parse_lasso, print_compact_open,
    print_element, print_lasso};

fn main() {
    let g = corpus::g_2loop();
    let ring = RingKind::Int;

    // compact opens are prefix antichains; joins coarsen maximally
    let a = parse_compact_open(&g, "{a}").unwrap();
    let b = parse_compact_open(&g, "{b}").unwrap();
    println!("Z(a) ∨ Z(b) = {}", print_compact_open(&g, &a.join(&g, &b)));
    let ab = parse_compact_open(&g, "{a.b}").unwrap();
    println!("Z(a) ∧ Z(ab) = {}", print_compact_open(&g, &a.meet(&g, &ab)));
    println!("Z(ab) ≤ Z(a)? {}", ab.leq(&g, &a));

    // idempotents of the diagonal are exactly characteristic functions
    let idem = set_to_idempotent(&g, ring, &a.join(&g, &b));
    println!("1_{{Z(a)∪Z(b)}} = {}", print_element(&g, &idem));
    let back = idempotent_to_set(&g, &idem).unwrap();
    assert_eq!(back, a.join(&g, &b));
    let not_idem = parse_element(&g, ring, "2*[a|a]").unwrap();
    println!("2*[a|a] an idempotent? {:?}", idempotent_to_set(&g, &not_idem).is_ok());

    // ultrafilters of that Boolean algebra are generated by paths
    let x = parse_lasso(&g, "a(b)^inf").unwrap();
    let chain = FilterChain::rho(&x);
    assert_eq!(rho_inverse(&chain), x);
    println!("ρ⁻¹(ρ(x)) = x for x = {}", print_lasso(&g, &x));

    // a diagonal-preserving isomorphism induces κ on the path space; under
    // the a↔b relabeling κ swaps letters
    let spec = iso::relabel_spec(&g, &g, ring, &[("v", "v")], &[("a", "b"), ("b", "a")])
        .validated(4)
        .expect("relabeling validates");
    let x = parse_lasso(&g, "a.b(a)^inf").unwrap();
    let kx = spec.kappa(&x).unwrap();
    println!("κ({}) = {}", print_lasso(&g, &x), print_lasso(&g, &kx));

    // the value-level law π(d)∘κ = d holds exactly when π is
    // coefficient-linear on the diagonal; the conjugation twist is not
    println!(
        "relabeling coefficient-linear? {:?}",
        check_kappa_linearity(&spec, 2, 7).unwrap()
    );
    let twist = iso::conjugation_twist_spec(&g).validated(4).unwrap();
    println!(
        "conjugation twist coefficient-linear? {:?}",
        check_kappa_linearity(&twist, 2, 7).unwrap()
    );
}
