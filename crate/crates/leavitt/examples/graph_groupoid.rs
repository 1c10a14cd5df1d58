//! Paths, eventually periodic infinite paths, and the graph groupoid of
//! shift-equivalence arrows with its cylinder basis.
//!
//! ```bash
//! cargo run -p leavitt --example graph_groupoid
//! ```

use leavitt::corpus;
use leavitt::graph::Graph;
use leavitt::groupoid::{
    cycle_has_entry, is_singleton_cylinder, lag_equivalent, ArrowCylinder, ArrowTriple,
};
use leavitt::textio::{parse_lasso, parse_path, print_lasso, print_path};

fn main() {
    // parse the text format and validate (row-finite, no sources)
    let g = Graph::parse_text(
        "vertex u\nvertex v\nedge e range=u source=v\nedge f range=v source=u\n",
    )
    .unwrap();
    println!("parsed G_CYCLE2:\n{g}");

    // lassos denote infinite paths in canonical (prefix, cycle) form;
    // parsing canonicalizes, so f·(ef)^∞ collapses to (fe)^∞
    let x = parse_lasso(&g, "f(e.f)^inf").unwrap();
    println!("f(e.f)^inf canonically = {}", print_lasso(&g, &x));

    // shifting rotates into the cycle
    let ef = parse_lasso(&g, "(e.f)^inf").unwrap();
    println!("σ((e.f)^inf) = {}", print_lasso(&g, &ef.shift(&g, 1)));

    // arrows are shift-equivalent pairs with a lag; lags add under
    // composition and negate under inversion
    let arrow = ArrowTriple::new(&g, ef.clone(), 2, ef.clone()).unwrap();
    let double = arrow.compose(&arrow).unwrap();
    println!("lag of the composed arrow: {}", double.lag());
    assert!(lag_equivalent(&g, &ef, -4, &ef));

    // cylinders Z(μ,ν) are the basic bisections
    let mu = parse_path(&g, "e.f").unwrap();
    let nu = parse_path(&g, "u").unwrap();
    let cyl = ArrowCylinder::new(mu, nu).unwrap();
    println!(
        "Z(e.f, u) contains ((e.f)^inf, 2, (e.f)^inf)? {}",
        cyl.contains(&g, &arrow)
    );

    // the 2-cycle is entry-free, so every cylinder here is a single path
    let e = parse_path(&g, "e").unwrap();
    println!("Z(e) a singleton? {}", is_singleton_cylinder(&g, &e));
    let efc = parse_path(&g, "e.f").unwrap();
    println!("does the cycle ef admit an entrance? {:?}", cycle_has_entry(&g, &efc));

    // contrast with the entered cycle in G_CYCLE2E
    let ge = corpus::g_cycle2e();
    let e2 = parse_path(&ge, "e").unwrap();
    println!(
        "in G_CYCLE2E, Z(e) a singleton? {} (g enters at u)",
        is_singleton_cylinder(&ge, &e2)
    );
    println!(
        "print paths round-trip: {}",
        print_path(&ge, &parse_path(&ge, "f.g.h").unwrap())
    );
}
