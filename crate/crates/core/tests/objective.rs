mod common;

use common::{all_offset_tuples, all_patterns, brute_total_cost, cost_with_offsets, ham};
use cpat_core::fixtures::example_graph;
use cpat_core::harness::gen_random_instance;
use cpat_core::reduction::reduce;
use cpat_core::solvers::{solve, SolverChoice, SolverKind};
use cpat_core::stringcore::{
    best_offsets, column_majority, hamming, solution_for, total_cost, verify_solution,
    Solution, Symbol,
};
use proptest::prelude::*;

#[test]
fn example_total_costs_match_enumeration() {
    let out = reduce(&example_graph()).unwrap();
    let inst = &out.instance;
    let a = inst.alphabet();
    for (p, expected) in [("$ a d e", 126), ("$ a c e", 127)] {
        let p = a.parse_seq(p).unwrap();
        assert_eq!(brute_total_cost(inst, &p), expected);
        assert_eq!(total_cost(inst, &p).unwrap(), expected);
    }
}

#[test]
fn example_solution_verifies_within_budget() {
    let out = reduce(&example_graph()).unwrap();
    let sol = solution_for(&out.instance, out.instance.alphabet().parse_seq("$ a d e").unwrap()).unwrap();
    assert_eq!(sol.total_cost, 126);
    // vertex strings at 0, gadgets de/ad/ae at their shifted alignment
    assert_eq!(sol.offsets, vec![0, 0, 0, 1, 1, 0, 0, 0, 1]);
    let r = verify_solution(&out.instance, &sol);
    assert!(r.valid);
    assert_eq!(r.within_budget, Some(true));
}

fn arb_seq(sigma: u32, len: usize) -> impl Strategy<Value = Vec<Symbol>> {
    prop::collection::vec((0..sigma).prop_map(Symbol), len)
}

proptest! {
    #[test]
    fn hamming_is_a_metric(
        (a, b, c) in (1usize..8).prop_flat_map(|l| (arb_seq(3, l), arb_seq(3, l), arb_seq(3, l)))
    ) {
        let d = |x: &[Symbol], y: &[Symbol]| hamming(x, y).unwrap();
        prop_assert_eq!(d(&a, &b), d(&b, &a));
        prop_assert_eq!(d(&a, &b) == 0, a == b);
        prop_assert!(d(&a, &c) <= d(&a, &b) + d(&b, &c));
        prop_assert_eq!(d(&a, &b), ham(&a, &b));
    }

    #[test]
    fn total_cost_equals_offset_enumeration(seed in any::<u64>(), pick in any::<u64>()) {
        let inst = gen_random_instance(seed);
        let pats = all_patterns(inst.alphabet().len(), inst.pattern_length());
        let p = &pats[(pick % pats.len() as u64) as usize];
        prop_assert_eq!(total_cost(&inst, p).unwrap(), brute_total_cost(&inst, p));
    }

    #[test]
    fn column_majority_beats_every_pattern(seed in any::<u64>(), pick in any::<u64>()) {
        let inst = gen_random_instance(seed);
        let tuples = all_offset_tuples(&inst);
        let offsets = &tuples[(pick % tuples.len() as u64) as usize];
        let cm = column_majority(&inst, offsets).unwrap();
        let best = all_patterns(inst.alphabet().len(), inst.pattern_length())
            .iter()
            .map(|p| cost_with_offsets(&inst, p, offsets))
            .min()
            .unwrap();
        prop_assert_eq!(cm.cost, best);
        for p in cm.patterns() {
            prop_assert_eq!(cost_with_offsets(&inst, &p, offsets), best);
        }
    }

    #[test]
    fn scaling_weights_scales_cost(seed in any::<u64>(), factor in 1u64..7) {
        let inst = gen_random_instance(seed);
        let scaled = inst.scaled(factor).unwrap();
        for p in all_patterns(inst.alphabet().len(), inst.pattern_length()) {
            prop_assert_eq!(total_cost(&scaled, &p).unwrap(), factor * total_cost(&inst, &p).unwrap());
        }
    }

    #[test]
    fn solver_output_always_verifies(seed in any::<u64>()) {
        let inst = gen_random_instance(seed);
        for kind in [SolverKind::PatternEnum, SolverKind::OffsetEnum] {
            let r = solve(&inst, &SolverChoice::new(kind)).unwrap();
            for s in &r.solutions {
                let rep = verify_solution(&inst, s);
                prop_assert!(rep.valid);
                prop_assert_eq!(rep.recomputed_cost, Some(r.optimum));
            }
        }
    }

    #[test]
    fn tampered_solutions_fail_verification(seed in any::<u64>(), bump in 1u64..5) {
        let inst = gen_random_instance(seed);
        let r = solve(&inst, &SolverChoice::default()).unwrap();
        let s = &r.solutions[0];
        let wrong = Solution { total_cost: s.total_cost + bump, ..s.clone() };
        prop_assert!(!verify_solution(&inst, &wrong).valid);
        let mut offsets = s.offsets.clone();
        offsets[0] = inst.strings()[0].seq().len();
        let out_of_range = Solution { offsets, ..s.clone() };
        prop_assert!(!verify_solution(&inst, &out_of_range).valid);
    }
}

#[test]
fn best_offsets_pick_smallest_on_ties() {
    let inst = gen_random_instance(3);
    for p in all_patterns(inst.alphabet().len(), inst.pattern_length()) {
        let (offsets, _) = best_offsets(&inst, &p).unwrap();
        let l = inst.pattern_length();
        for (ws, &o) in inst.strings().iter().zip(&offsets) {
            let costs: Vec<u64> = (0..=ws.seq().len() - l).map(|j| ham(&p, &ws.seq()[j..j + l])).collect();
            let min = *costs.iter().min().unwrap();
            assert_eq!(o, costs.iter().position(|&c| c == min).unwrap());
        }
    }
}
