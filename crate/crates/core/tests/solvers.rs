mod common;

use common::brute_optima;
use cpat_core::exec::Exec;
use cpat_core::fixtures::example_graph;
use cpat_core::harness::{gen_random_instance, gen_random_instances};
use cpat_core::reduction::reduce;
use cpat_core::solvers::{cross_check, solve, SolverChoice, SolverKind};
use cpat_core::stringcore::{total_cost, verify_solution, PatternInstance, WeightedString};
use proptest::prelude::*;

const KINDS: [SolverKind; 2] = [SolverKind::PatternEnum, SolverKind::OffsetEnum];

#[test]
fn example_optimum_from_both_solvers() {
    let out = reduce(&example_graph()).unwrap();
    let inst = &out.instance;
    for kind in KINDS {
        let r = solve(inst, &SolverChoice::new(kind)).unwrap();
        assert_eq!(r.optimum, 126, "{}", kind.name());
        assert_eq!(inst.alphabet().render(&r.solutions[0].pattern), "$ a d e");
    }
    let c = cross_check(inst, Exec::Parallel).unwrap();
    assert!(c.agree);
    assert_eq!((c.pattern_enum, c.offset_enum), (126, 126));
}

#[test]
fn oracle_equivalence_on_random_instances() {
    for (i, inst) in gen_random_instances(1, 150).iter().enumerate() {
        let c = cross_check(inst, Exec::Sequential).unwrap();
        assert!(c.agree, "instance {i}: {c:?}");
    }
    assert!(cross_check(&gen_random_instance(1), Exec::Parallel).unwrap().agree);
}

#[test]
fn all_optima_match_full_enumeration() {
    for inst in gen_random_instances(2, 120) {
        let (best, arg) = brute_optima(&inst);
        for kind in KINDS {
            for prune in [false, true] {
                let r = solve(&inst, &SolverChoice::new(kind).all_optima(true).pruning(prune)).unwrap();
                assert_eq!(r.optimum, best);
                let pats: Vec<_> = r.solutions.iter().map(|s| s.pattern.to_vec()).collect();
                assert_eq!(pats, arg, "{}", kind.name());
                let single = solve(&inst, &SolverChoice::new(kind).pruning(prune)).unwrap();
                assert_eq!(single.solutions.len(), 1);
                assert_eq!(single.solutions[0].pattern.to_vec(), arg[0]);
                assert_eq!(single.solutions[0], r.solutions[0]);
            }
        }
    }
}

#[test]
fn results_do_not_depend_on_exec() {
    for inst in gen_random_instances(3, 40) {
        for kind in KINDS {
            let choice = SolverChoice::new(kind).all_optima(true);
            let a = solve(&inst, &choice.exec(Exec::Sequential)).unwrap();
            let b = solve(&inst, &choice.exec(Exec::Parallel)).unwrap();
            assert_eq!(a, b);
        }
    }
}

#[test]
fn pruning_explores_fewer_states_on_the_reduction() {
    let out = reduce(&example_graph()).unwrap();
    let full = solve(&out.instance, &SolverChoice::default().pruning(false)).unwrap();
    let pruned = solve(&out.instance, &SolverChoice::default()).unwrap();
    assert_eq!(full.optimum, pruned.optimum);
    assert_eq!(full.solutions, pruned.solutions);
    assert!(pruned.states_explored < full.states_explored);
}

fn with_extra(inst: &PatternInstance, extra: WeightedString) -> PatternInstance {
    let mut strings = inst.strings().to_vec();
    strings.push(extra);
    PatternInstance::new(inst.alphabet().clone(), strings, inst.pattern_length(), None).unwrap()
}

proptest! {
    #[test]
    fn adding_a_string_raises_optimum_by_at_most_w_l(seed in any::<u64>(), donor in any::<u64>(), w in 1u64..6) {
        let inst = gen_random_instance(seed);
        let other = gen_random_instance(donor);
        let l = inst.pattern_length();
        let sigma = inst.alphabet().len();
        // borrow a string from another instance, clipped to this alphabet
        let syms: Vec<_> = other.strings()[0].seq().iter()
            .map(|s| cpat_core::stringcore::Symbol(s.0 % sigma as u32))
            .chain(std::iter::repeat(cpat_core::stringcore::Symbol(0)))
            .take(l.max(other.strings()[0].seq().len()))
            .collect();
        let bigger = with_extra(&inst, WeightedString::new(syms.into(), w).unwrap());
        let before = solve(&inst, &SolverChoice::default()).unwrap().optimum;
        let after = solve(&bigger, &SolverChoice::default()).unwrap();
        prop_assert!(after.optimum >= before);
        prop_assert!(after.optimum <= before + w * l as u64);
        prop_assert_eq!(total_cost(&bigger, &after.solutions[0].pattern).unwrap(), after.optimum);
        prop_assert!(verify_solution(&bigger, &after.solutions[0]).valid);
    }
}
