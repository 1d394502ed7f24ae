//! Property tests pitting the arena-based engine against the naive
//! tree oracle in `support`, plus structural laws that must hold for
//! every form.

mod support;

use partizan::{
    adjoint, conjugate, geq_np, outcome, outcome_partial, parse, render, sum, Arena, Convention,
    OutcomeClass, Side,
};
use proptest::prelude::*;
use support::{
    arb_form, intern_into, naive_conjugate, naive_partial, naive_sum, read_back, NaiveForm,
};

proptest! {
    #[test]
    fn partial_outcomes_match_the_naive_recursion(g in arb_form()) {
        let mut a = Arena::new();
        let id = intern_into(&mut a, &g).unwrap();
        for side in [Side::Left, Side::Right] {
            for convention in [Convention::Normal, Convention::Misere] {
                let fast = outcome_partial(&mut a, id, side, convention).unwrap();
                let slow = naive_partial(&g, side, convention);
                prop_assert_eq!(fast, slow, "side {} convention {}", side, convention);
            }
        }
    }

    #[test]
    fn sum_matches_the_naive_recursion(g in arb_form(), h in arb_form()) {
        let mut a = Arena::new();
        let gid = intern_into(&mut a, &g).unwrap();
        let hid = intern_into(&mut a, &h).unwrap();
        let fast = sum(&mut a, gid, hid).unwrap();
        let slow = intern_into(&mut a, &naive_sum(&g, &h)).unwrap();
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn conjugate_matches_the_naive_recursion_and_involutes(g in arb_form()) {
        let mut a = Arena::new();
        let gid = intern_into(&mut a, &g).unwrap();
        let fast = conjugate(&mut a, gid).unwrap();
        let slow = intern_into(&mut a, &naive_conjugate(&g)).unwrap();
        prop_assert_eq!(fast, slow);
        prop_assert_eq!(conjugate(&mut a, fast).unwrap(), gid);
    }

    #[test]
    fn interning_loses_nothing_but_duplicates(g in arb_form()) {
        let mut a = Arena::new();
        let gid = intern_into(&mut a, &g).unwrap();
        let back = read_back(&a, gid);
        // Interning sorts and deduplicates options, so compare through
        // a second round-trip instead of structurally.
        let mut b = Arena::new();
        let re = intern_into(&mut b, &back).unwrap();
        let orig = intern_into(&mut b, &g).unwrap();
        prop_assert_eq!(re, orig);
    }

    #[test]
    fn render_parse_round_trip(g in arb_form()) {
        let mut a = Arena::new();
        let gid = intern_into(&mut a, &g).unwrap();
        let text = render(&a, gid);
        let re = parse(&mut a, &text).unwrap();
        prop_assert_eq!(re, gid, "text {}", text);
    }

    #[test]
    fn birthdays_add_over_sums(g in arb_form(), h in arb_form()) {
        let mut a = Arena::new();
        let gid = intern_into(&mut a, &g).unwrap();
        let hid = intern_into(&mut a, &h).unwrap();
        let s = sum(&mut a, gid, hid).unwrap();
        prop_assert_eq!(a.birthday(s), a.birthday(gid) + a.birthday(hid));
    }

    #[test]
    fn adjoint_companion_is_a_misere_previous_win(g in arb_form()) {
        let mut a = Arena::new();
        let gid = intern_into(&mut a, &g).unwrap();
        let adj = adjoint(&mut a, gid).unwrap();
        let s = sum(&mut a, gid, adj).unwrap();
        prop_assert_eq!(outcome(&mut a, s, Convention::Misere).unwrap(), OutcomeClass::Previous);
    }

    #[test]
    fn normal_play_order_is_reflexive_and_respects_conjugation(
        g in arb_form(),
        h in arb_form(),
    ) {
        let mut a = Arena::new();
        let gid = intern_into(&mut a, &g).unwrap();
        let hid = intern_into(&mut a, &h).unwrap();
        prop_assert!(geq_np(&mut a, gid, gid).unwrap());
        let fwd = geq_np(&mut a, gid, hid).unwrap();
        let cg = conjugate(&mut a, gid).unwrap();
        let ch = conjugate(&mut a, hid).unwrap();
        let mirrored = geq_np(&mut a, ch, cg).unwrap();
        prop_assert_eq!(fwd, mirrored);
    }

    #[test]
    fn conjugation_mirrors_outcomes(g in arb_form()) {
        let mut a = Arena::new();
        let gid = intern_into(&mut a, &g).unwrap();
        let cid = conjugate(&mut a, gid).unwrap();
        for convention in [Convention::Normal, Convention::Misere] {
            let o = outcome(&mut a, gid, convention).unwrap();
            let oc = outcome(&mut a, cid, convention).unwrap();
            prop_assert_eq!(oc, o.mirror());
        }
    }
}

#[test]
fn naive_strategy_produces_nontrivial_forms() {
    // Guard against the strategy silently collapsing to leaves: over a
    // fixed sample, some tree must reach depth 2.
    use proptest::strategy::ValueTree;
    use proptest::test_runner::TestRunner;
    let mut runner = TestRunner::deterministic();
    let strategy = arb_form();
    let mut best = 0;
    for _ in 0..64 {
        let tree: NaiveForm = strategy.new_tree(&mut runner).unwrap().current();
        best = best.max(tree.birthday());
    }
    assert!(best >= 2, "deepest sampled birthday {best}");
}
