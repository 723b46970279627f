use proptest::prelude::*;

use rprime_core::greedy::{greedy_pair_proof, greedy_pair_remark, pair_proof_guarantee, pair_remark_guarantee};
use rprime_core::{
    max_clique, max_independent, parse_graph6, rho_prime, rho_prime_bruteforce, write_graph6, Graph, VertexRule,
};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let edges: Vec<_> = (1..n)
                .flat_map(|j| (0..j).map(move |i| (i, j)))
                .zip(bits)
                .filter_map(|(e, keep)| keep.then_some(e))
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn rule() -> impl Strategy<Value = VertexRule> {
    prop_oneof![
        Just(VertexRule::LowestIndex),
        Just(VertexRule::HighestDegree),
        any::<u64>().prop_map(VertexRule::SeededRandom),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn graph6_round_trip(g in graph(64)) {
        let text = write_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn complement_is_involution(g in graph(64)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn rho_swaps_under_complement(g in graph(24)) {
        let (omega, _) = max_clique(&g);
        let (alpha, _) = max_independent(&g);
        let h = g.complement();
        prop_assert_eq!(max_clique(&h).0, alpha);
        prop_assert_eq!(max_independent(&h).0, omega);
        prop_assert_eq!(rho_prime(&g).value, rho_prime(&h).value);
    }

    #[test]
    fn rho_matches_bruteforce(g in graph(14)) {
        let w = rho_prime(&g);
        w.validate(&g).unwrap();
        prop_assert_eq!(w.value, rho_prime_bruteforce(&g).unwrap());
    }

    #[test]
    fn greedy_meets_guarantees(g in graph(64), rule in rule()) {
        let n = g.n();
        let (proof, _) = greedy_pair_proof(&g, rule).unwrap();
        proof.validate(&g).unwrap();
        prop_assert!(proof.value >= pair_proof_guarantee(n));
        prop_assert!(proof.value <= rho_prime(&g).value);
        if n >= 2 {
            let (remark, _) = greedy_pair_remark(&g, rule).unwrap();
            remark.validate(&g).unwrap();
            prop_assert!(remark.value >= pair_remark_guarantee(n));
        }
    }
}
