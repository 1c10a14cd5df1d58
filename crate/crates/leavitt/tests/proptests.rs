//! Property tests for the coefficient rings and path canonicalization.

use leavitt::corpus;
use leavitt::path::LassoPath;
use leavitt::ring::{RingKind, RingScalar};
use proptest::prelude::*;

fn gauss_strategy() -> impl Strategy<Value = RingScalar> {
    (-50i64..=50, -50i64..=50).prop_map(|(a, b)| RingScalar::gauss(a, b))
}

fn int_strategy() -> impl Strategy<Value = RingScalar> {
    (-1000i64..=1000).prop_map(|n| RingScalar::from_i64(RingKind::Int, n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn conj_is_an_involution(r in gauss_strategy()) {
        prop_assert_eq!(r.conj().conj(), r);
    }

    #[test]
    fn conj_is_multiplicative(r in gauss_strategy(), s in gauss_strategy()) {
        prop_assert_eq!(
            r.mul(&s).unwrap().conj(),
            r.conj().mul(&s.conj()).unwrap()
        );
    }

    #[test]
    fn conj_is_additive(r in gauss_strategy(), s in gauss_strategy()) {
        prop_assert_eq!(
            r.add(&s).unwrap().conj(),
            r.conj().add(&s.conj()).unwrap()
        );
    }

    #[test]
    fn int_ring_is_commutative_and_conj_trivial(r in int_strategy(), s in int_strategy()) {
        prop_assert_eq!(r.mul(&s).unwrap(), s.mul(&r).unwrap());
        prop_assert_eq!(r.conj(), r);
    }

    #[test]
    fn scalar_print_parse_round_trip(r in gauss_strategy()) {
        let text = r.to_string();
        prop_assert_eq!(RingScalar::parse(RingKind::Gauss, &text).unwrap(), r);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    /// Shifting a lasso by its cycle length past the prefix is the identity,
    /// and shifts compose: σᵃ(σᵇ(x)) = σᵃ⁺ᵇ(x).
    #[test]
    fn shifts_compose(word in proptest::collection::vec(0usize..2, 1..6),
                      pad in proptest::collection::vec(0usize..2, 0..4),
                      a in 0usize..5, b in 0usize..5) {
        let g = corpus::g_2loop();
        let edges: Vec<_> = word
            .iter()
            .map(|&i| g.edge_by_name(if i == 0 { "a" } else { "b" }).unwrap())
            .collect();
        let cycle = leavitt::path::FinPath::from_edges(&g, &edges).unwrap();
        let prefix_edges: Vec<_> = pad
            .iter()
            .map(|&i| g.edge_by_name(if i == 0 { "a" } else { "b" }).unwrap())
            .collect();
        let x = if prefix_edges.is_empty() {
            LassoPath::cycle_only(&g, cycle).unwrap()
        } else {
            let prefix = leavitt::path::FinPath::from_edges(&g, &prefix_edges).unwrap();
            LassoPath::new(&g, prefix, cycle).unwrap()
        };
        prop_assert_eq!(x.shift(&g, b).shift(&g, a), x.shift(&g, a + b));
        let period = x.cycle().len();
        let deep = x.shift(&g, x.prefix().len());
        prop_assert_eq!(deep.shift(&g, period), deep);
    }
}
