//! End-to-end CLI checks against the fixture files: golden outputs, exit
//! codes, determinism and print/parse round trips.

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> (i32, String) {
    let argv: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    leavitt::cli::run(&argv)
}

#[test]
fn nf_golden() {
    let g = data("g_2loop.txt");
    let (code, out) = run(&["nf", "1*[v|v]", "--graph", &g]);
    assert_eq!((code, out.as_str()), (0, "1*[a|a] + 1*[b|b]\n"));
}

#[test]
fn mul_golden() {
    let g = data("g_2loop.txt");
    let (code, out) = run(&["mul", "1*[a|b]", "1*[b|v]", "--graph", &g]);
    assert_eq!((code, out.as_str()), (0, "1*[a|v]\n"));
    let (code, out) = run(&["mul", "1*[v|a]", "1*[b|v]", "--graph", &g]);
    assert_eq!((code, out.as_str()), (0, "0\n"));
}

#[test]
fn star_deg_isdiag() {
    let g = data("g_2loop.txt");
    let (code, out) = run(&["star", "2+3i*[a|b]", "--graph", &g, "--ring", "gauss"]);
    assert_eq!((code, out.as_str()), (0, "2-3i*[b|a]\n"));
    let (_, out) = run(&["deg", "1*[a.b|a]", "--graph", &g]);
    assert_eq!(out, "1\n");
    let (_, out) = run(&["deg", "1*[a|v] + 1*[v|a]", "--graph", &g]);
    assert_eq!(out, "mixed\n");
    let (_, out) = run(&["isdiag", "1*[a|a] + 2*[b|b]", "--graph", &g]);
    assert_eq!(out, "true\n");
}

#[test]
fn normalizer_verbs() {
    let g = data("g_2loop.txt");
    let (_, out) = run(&["isnorm", "1*[a|b]", "--graph", &g]);
    assert_eq!(out, "true\n");
    let (_, out) = run(&["isnorm", "1*[a|v] + 1*[b|v]", "--graph", &g]);
    assert_eq!(out, "false\n");
    let (_, out) = run(&["alpha", "1*[a|b]", "--graph", &g]);
    assert_eq!(out, "b -> a\n");
    let (_, out) = run(&["dom", "1*[a|b]", "--graph", &g]);
    assert_eq!(out, "{b}\n");
    let (_, out) = run(&["ran", "1*[a|b]", "--graph", &g]);
    assert_eq!(out, "{a}\n");
}

#[test]
fn compress_golden() {
    let g = data("g_loop.txt");
    let (code, out) = run(&["compress", "(e)^inf", "1*[e|v]", "--graph", &g]);
    assert_eq!((code, out.as_str()), (0, "(1, 1)\n"));
    let (_, out) = run(&["compress", "(e)^inf", "2*[v|v]", "--graph", &g]);
    assert_eq!(out, "(2, 0)\n");
}

#[test]
fn weyl_verbs() {
    let g = data("g_loop.txt");
    let (_, out) = run(&["weyl-eq", "1*[e|v]", "1*[e.e|e]", "(e)^inf", "--graph", &g]);
    assert_eq!(out, "true\n");
    let (_, out) = run(&["weyl-eq", "1*[e|v]", "1*[v|v]", "(e)^inf", "--graph", &g]);
    assert_eq!(out, "false\n");
    let (_, out) = run(&["phi", "(e)^inf", "1", "(e)^inf", "--graph", &g]);
    assert_eq!(out, "[1*[e|v] @ (e)^inf]\n");
    let (_, out) = run(&["phi-inv", "2*[e.e|e]", "(e)^inf", "--graph", &g]);
    assert_eq!(out, "((e)^inf, 1, (e)^inf)\n");
}

#[test]
fn kappa_golden_relabel() {
    // under the a↔b relabeling, κ swaps letters: κ(ab·a^∞) = ba·b^∞
    let spec = data("relabel_ab.spec");
    let (code, out) = run(&["kappa", "ab(a)^inf", "--spec", &spec]);
    assert_eq!((code, out.as_str()), (0, "b.a(b)^inf\n"));
}

#[test]
fn verify_iso_exit_codes() {
    let (code, out) = run(&["verify-iso", "--spec", &data("relabel_ab.spec")]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("VERDICT pass"));
    let (code, out) = run(&["verify-iso", "--spec", &data("twist.spec"), "--ring", "gauss"]);
    assert_eq!(code, 0, "{out}");
    let (code, out) = run(&["verify-iso", "--spec", &data("broken_l3.spec")]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL forward:L3"), "{out}");
    assert!(out.contains("VERDICT fail"));
}

#[test]
fn stone_check_passes_on_relabel() {
    let (code, out) = run(&["stone-check", "--spec", &data("relabel_ab.spec")]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("SUMMARY"));
}

#[test]
fn groupoid_iso_verbs() {
    let (code, out) = run(&[
        "induce-groupoid-iso",
        "--spec",
        &data("relabel_ab.spec"),
        "--depth",
        "1",
    ]);
    assert_eq!(code, 0, "{out}");
    // the letter swap shows up in the depth-1 entries
    assert!(out.contains("a|a -> b|b"), "{out}");
    assert!(out.contains("a|v -> b|v"), "{out}");

    let (code, out) = run(&["pi-from-omega", "--omega", &data("swap_cycle2.omega")]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("s e = 1*[f|u]"), "{out}");
}

#[test]
fn check_props_summary() {
    let (code, out) = run(&[
        "check-props",
        "--suite",
        "stone",
        "--seed",
        "7",
        "--graph",
        &data("g_2loop.txt"),
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.ends_with("SUMMARY pass 3 fail 0\n"), "{out}");
}

#[test]
fn byte_determinism() {
    let g = data("g_cycle2e.txt");
    let args = [
        "check-props", "--suite", "graph", "--seed", "11", "--graph", &g,
    ];
    assert_eq!(run(&args), run(&args));
}

#[test]
fn printed_values_reparse() {
    let g = data("g_cycle2e.txt");
    for elem in ["1*[e.f|f] + 2*[g|g]", "1*[u|u]", "-3*[h.h|h]"] {
        let (code, out) = run(&["nf", elem, "--graph", &g]);
        assert_eq!(code, 0);
        let printed = out.trim().to_string();
        let (code2, out2) = run(&["nf", &printed, "--graph", &g]);
        assert_eq!(code2, 0);
        assert_eq!(out2.trim(), printed);
    }
}

#[test]
fn error_exit_codes() {
    let (code, _) = run(&["nf", "1*[zz|v]", "--graph", &data("g_2loop.txt")]);
    assert_eq!(code, 2);
    let (code, _) = run(&["nf", "1*[v|v]"]);
    assert_eq!(code, 2); // missing --graph
    let (code, _) = run(&["compress", "(a)^inf", "1*[a|a]", "--graph", &data("g_2loop.txt")]);
    assert_eq!(code, 2); // a^∞ is not isolated in G_2LOOP
}
