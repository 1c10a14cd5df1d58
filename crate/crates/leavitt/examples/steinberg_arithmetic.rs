//! Exact arithmetic in the path algebra of a graph: normal forms, the
//! convolution product, the involution and the grading.
//!
//! ```bash
//! cargo run -p leavitt --example steinberg_arithmetic
//! ```

use leavitt::algebra::{leavitt_family, AlgebraElement, Degree};
use leavitt::corpus;
use leavitt::groupoid::ArrowCylinder;
use leavitt::ring::{RingKind, RingScalar};
use leavitt::textio::{parse_element, print_element};

fn main() {
    // one vertex v with two loops a, b
    let g = corpus::g_2loop();
    let ring = RingKind::Int;

    // elements parse from the literal syntax and normalize on construction:
    // all right legs get a common length, like keys merge, zeros drop
    let f = parse_element(&g, ring, "1*[v|v]").unwrap();
    println!("1*[v|v] in normal form (display depth 1):");
    println!("  {}", print_element(&g, &f.at_depth(&g, 1)));

    // the product follows the cylinder rule Z(μ,ν)Z(β,γ)
    let x = parse_element(&g, ring, "1*[a|b]").unwrap();
    let y = parse_element(&g, ring, "1*[b|v]").unwrap();
    println!("[a|b] * [b|v] = {}", print_element(&g, &x.mul(&g, &y)));
    let z = parse_element(&g, ring, "1*[v|a]").unwrap();
    println!("[v|a] * [b|v] = {}", print_element(&g, &z.mul(&g, &y)));

    // the involution flips legs and conjugates coefficients
    let w = parse_element(&g, RingKind::Gauss, "2+1i*[a|v]").unwrap();
    println!("(2+i)*[a|v] starred = {}", print_element(&g, &w.star(&g)));

    // grading by |μ| − |ν|
    let graded = parse_element(&g, ring, "1*[a.b|a]").unwrap();
    println!("deg [a.b|a] = {:?}", graded.degree());
    let mixed = x.add(&g, &z);
    assert_eq!(mixed.degree(), Degree::Mixed);

    // the canonical family satisfies the Leavitt relations; spot-check (L4)
    let (p, s, t) = leavitt_family(&g, ring);
    let mut sum = AlgebraElement::zero(ring);
    for i in 0..2 {
        sum = sum.add(&g, &s[i].mul(&g, &t[i]));
    }
    assert!(sum.equals(&g, &p[0]));
    println!("(L4): s_a t_a + s_b t_b = p_v holds");

    // elements are functions on the groupoid: evaluate at an arrow
    let a = leavitt::textio::parse_lasso(&g, "(a)^inf").unwrap();
    let unit = leavitt::groupoid::ArrowTriple::unit(a);
    let idem = AlgebraElement::indicator(
        &g,
        ring,
        &ArrowCylinder::unit(leavitt::textio::parse_path(&g, "a").unwrap()),
    )
    .scalar_mul(&RingScalar::from_i64(ring, 5));
    println!("5*[a|a] evaluated at (a^inf, 0, a^inf) = {}", idem.evaluate(&g, &unit));
}
