//! Reference graphs used throughout the test and property suites.

use crate::graph::Graph;

/// One vertex `v` with a single loop `e`.
pub fn g_loop() -> Graph {
    Graph::new(&["v"], &[("e", "v", "v")]).expect("valid graph")
}

/// One vertex `v` with two loops `a`, `b`.
pub fn g_2loop() -> Graph {
    Graph::new(&["v"], &[("a", "v", "v"), ("b", "v", "v")]).expect("valid graph")
}

/// Two vertices `u ⇄ v`: `e` with `r(e)=u, s(e)=v` and `f` with
/// `r(f)=v, s(f)=u`. The 2-cycle `ef` has no entrance.
pub fn g_cycle2() -> Graph {
    Graph::new(&["u", "v"], &[("e", "u", "v"), ("f", "v", "u")]).expect("valid graph")
}

/// The 2-cycle with an entrance: `e,f` as in [`g_cycle2`], plus `g` into `u`
/// from `w` and a loop `h` at `w`.
pub fn g_cycle2e() -> Graph {
    Graph::new(
        &["u", "v", "w"],
        &[
            ("e", "u", "v"),
            ("f", "v", "u"),
            ("g", "u", "w"),
            ("h", "w", "w"),
        ],
    )
    .expect("valid graph")
}

/// All four reference graphs with their conventional names.
pub fn reference_graphs() -> Vec<(&'static str, Graph)> {
    vec![
        ("G_LOOP", g_loop()),
        ("G_2LOOP", g_2loop()),
        ("G_CYCLE2", g_cycle2()),
        ("G_CYCLE2E", g_cycle2e()),
    ]
}
