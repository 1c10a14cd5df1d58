//! The Weyl groupoid of anchored normalizers and its isomorphism with the
//! graph groupoid, in both directions.
//!
//! ```bash
//! cargo run -p leavitt --example weyl_groupoid
//! ```

use leavitt::corpus;
use leavitt::groupoid::ArrowTriple;
use leavitt::ring::RingKind;
use leavitt::textio::{parse_element, parse_lasso, print_element, print_lasso};
use leavitt::weyl::{class_equivalent, equivalent, phi, phi_inverse, weyl_compose, WeylClass};
use leavitt::action::Normalizer;

fn main() {
    let g = corpus::g_loop();
    let ring = RingKind::Int;
    let e_inf = parse_lasso(&g, "(e)^inf").unwrap();

    // two anchored normalizers define the same class when they agree as
    // germs; at the isolated point e^∞ the compression degree decides
    let n = Normalizer::check(&g, parse_element(&g, ring, "1*[e|v]").unwrap()).unwrap();
    let m = Normalizer::check(&g, parse_element(&g, ring, "1*[e.e|e]").unwrap()).unwrap();
    println!(
        "([e|v], e^inf) ~ ([e.e|e], e^inf)? {}",
        equivalent(&g, &n, &e_inf, &m, &e_inf).unwrap()
    );
    let unit = Normalizer::check(&g, parse_element(&g, ring, "1*[v|v]").unwrap()).unwrap();
    println!(
        "([e|v], e^inf) ~ ([v|v], e^inf)? {}",
        equivalent(&g, &n, &e_inf, &unit, &e_inf).unwrap()
    );

    // Φ: arrows to classes, with a constructive section back
    let arrow = ArrowTriple::new(&g, e_inf.clone(), 1, e_inf.clone()).unwrap();
    let class = phi(&g, ring, &arrow);
    println!(
        "Φ(e^inf, 1, e^inf) = [{} @ {}]",
        print_element(&g, class.normalizer().element()),
        print_lasso(&g, class.base_point())
    );
    let back = phi_inverse(&g, &class).unwrap();
    assert_eq!(back, arrow);
    println!("Φ⁻¹ recovers the arrow");

    // composition of classes is composition of arrows
    let square = weyl_compose(&g, &class, &class).unwrap();
    let expect = phi(&g, ring, &arrow.compose(&arrow).unwrap());
    assert!(class_equivalent(&g, &square, &expect).unwrap());
    println!("[(n,x)]² = Φ(g²)");

    // the lag correction at a periodic isolated point: a deeper
    // representative of the same class still maps to the degree-1 arrow
    let deep =
        Normalizer::check(&g, parse_element(&g, ring, "2*[e.e|e]").unwrap()).unwrap();
    let c = WeylClass::new(&g, deep, e_inf.clone()).unwrap();
    let arrow2 = phi_inverse(&g, &c).unwrap();
    println!(
        "Φ⁻¹[2·[e.e|e] @ e^inf] = ({}, {}, {})",
        print_lasso(&g, arrow2.range_path()),
        arrow2.lag(),
        print_lasso(&g, arrow2.source_path())
    );
}
