//! Diagonal normalizers and the partial action they induce on the
//! infinite-path space, including the isolated-path compression.
//!
//! ```bash
//! cargo run -p leavitt --example normalizers_and_action
//! ```

use leavitt::action::{compress, is_normalizer, Compression, IsolatedPoint, Normalizer};
use leavitt::corpus;
use leavitt::ring::RingKind;
use leavitt::textio::{parse_element, parse_lasso, print_lasso, print_path};

fn main() {
    let g = corpus::g_2loop();
    let ring = RingKind::Int;

    // every cylinder indicator normalizes the diagonal
    let n = parse_element(&g, ring, "1*[a|b]").unwrap();
    println!("[a|b] a normalizer? {}", is_normalizer(&g, &n));

    // a sum with overlapping ranges does not: n n* picks up off-diagonal terms
    let bad = parse_element(&g, ring, "1*[a|v] + 1*[b|v]").unwrap();
    println!("[a|v]+[b|v] a normalizer? {}", is_normalizer(&g, &bad));

    // the induced partial map rewrites prefixes: dom → ran by ν ↦ μ
    let n = Normalizer::check(&g, n).unwrap();
    for p in n.dom(&g) {
        print!("dom contains Z({})  ", print_path(&g, &p));
    }
    for p in n.ran(&g) {
        println!("ran contains Z({})", print_path(&g, &p));
    }
    let pm = n.alpha(&g).unwrap();
    let x = parse_lasso(&g, "b(a)^inf").unwrap();
    let image = pm.apply(&g, &x).unwrap();
    println!("α maps {} to {}", print_lasso(&g, &x), print_lasso(&g, &image));
    let back = n.star(&g).alpha(&g).unwrap().apply(&g, &image).unwrap();
    assert_eq!(back, x);
    println!("α of the starred normalizer undoes it");

    // on the single loop every path is isolated; compressing by p_x turns a
    // normalizer into a single weighted arrow (coefficient, degree)
    let gl = corpus::g_loop();
    let e_inf = parse_lasso(&gl, "(e)^inf").unwrap();
    let ip = IsolatedPoint::locate(&gl, &e_inf).unwrap();
    let shift = parse_element(&gl, ring, "1*[e|v]").unwrap();
    match compress(&gl, &ip, &shift).unwrap() {
        Compression::Single { coeff, degree } => {
            println!("p_x [e|v] p_x = {coeff} at degree {degree}")
        }
        Compression::Zero => unreachable!(),
    }
}
