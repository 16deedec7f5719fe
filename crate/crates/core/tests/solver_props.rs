use num_rational::Ratio;
use proptest::prelude::*;

use dsb_core::generators::{random, PriceModel};
use dsb_core::oracle::{brute_force, verify, BruteForce};
use dsb_core::rules::{borda_vector, is_unique_winner, scoring_score};
use dsb_core::solvers::{solve_scoring_unary_prices, solve_scoring_unary_scores};
use dsb_core::{margin, solve, BriberyInstance, Election, RuleSpec, ShiftVector, SolverConfig};

fn rules(m: usize) -> Vec<RuleSpec> {
    vec![
        RuleSpec::plurality(),
        RuleSpec::KApproval(2.min(m)),
        RuleSpec::Borda,
        RuleSpec::Scoring([3, 1, 1, 0, 0][..m].to_vec()),
        RuleSpec::Bucklin,
        RuleSpec::SimplifiedBucklin,
        RuleSpec::Maximin,
        RuleSpec::Copeland(Ratio::from_integer(0)),
        RuleSpec::Copeland(Ratio::new(1, 2)),
        RuleSpec::Copeland(Ratio::from_integer(1)),
    ]
}

fn model() -> impl Strategy<Value = PriceModel> {
    prop_oneof![
        Just(PriceModel::Unit),
        (1u64..=5).prop_map(PriceModel::AllOrNothing),
        (0u64..=5).prop_map(PriceModel::Listed),
    ]
}

/// Random instance with `m <= 5`, `n <= 5`, and its rule.
fn instance() -> impl Strategy<Value = (BriberyInstance, RuleSpec)> {
    (2usize..=5, 1usize..=5, any::<u64>(), model(), 0usize..10, 0u64..12).prop_map(|(m, n, seed, model, r, b)| {
        let rule = rules(m).swap_remove(r);
        (random(m, n, seed, model, &rule, b).unwrap(), rule)
    })
}

/// Cheapest way to stop `d` from winning under Borda, rival by rival: a
/// knapsack over voters where moving `d` back `s` places gains `s` points
/// against every rival, plus one more against a rival it passes.
fn borda_reference(inst: &BriberyInstance) -> Option<u64> {
    let e = &inst.election;
    let (m, d) = (e.num_candidates(), inst.despised);
    let vector = borda_vector(m);
    let score = |c| scoring_score(e, &vector, c).unwrap();
    (0..m)
        .filter(|&c| c != d)
        .filter_map(|c| {
            let gap = score(d).saturating_sub(score(c)) as usize;
            // best[g]: cheapest cost reaching a gain of at least g
            let mut best: Vec<Option<u64>> = vec![None; gap + 1];
            best[0] = Some(0);
            for v in 0..e.num_voters() {
                let mut next = best.clone();
                for s in 1..=e.max_shift(v, d) {
                    let Some(price) = inst.price(v, s).finite() else { continue };
                    let passes = e.pos(v, c) > e.pos(v, d) && e.pos(v, c) <= e.pos(v, d) + s;
                    let gain = s + usize::from(passes);
                    for g in 0..=gap {
                        if let Some(base) = best[g] {
                            let to = (g + gain).min(gap);
                            let total = base + price;
                            if next[to].is_none_or(|x| total < x) {
                                next[to] = Some(total);
                            }
                        }
                    }
                }
                best = next;
            }
            best[gap]
        })
        .min()
}

fn permuted(inst: &BriberyInstance, order: &[usize]) -> BriberyInstance {
    let votes: Vec<Vec<usize>> = order.iter().map(|&v| inst.election.vote(v).to_vec()).collect();
    let election = Election::new(inst.election.names().to_vec(), votes).unwrap();
    let prices = order.iter().map(|&v| inst.prices[v].clone()).collect();
    BriberyInstance::new(election, inst.despised, inst.budget, prices).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn solvers_match_the_oracle((inst, rule) in instance()) {
        let truth = brute_force(&inst, &rule, BruteForce::default()).unwrap();
        let sol = solve(&inst, &rule).unwrap();
        prop_assert_eq!(sol.cost(), truth.cost(), "{}", rule);
        if let Some(shifts) = sol.shifts() {
            prop_assert!(verify(&inst, &rule, shifts).unwrap());
            prop_assert_eq!(inst.cost_of(shifts).finite(), sol.cost());
        }
    }

    #[test]
    fn more_budget_keeps_the_optimum((inst, rule) in instance(), extra in 0u64..20) {
        let low = solve(&inst, &rule).unwrap();
        let high = solve(&inst.with_budget(inst.budget + extra), &rule).unwrap();
        match low.cost() {
            Some(c) => prop_assert_eq!(high.cost(), Some(c)),
            None => prop_assert!(high.cost().is_none_or(|c| c > inst.budget)),
        }
    }

    #[test]
    fn margin_is_the_unbounded_optimum((inst, rule) in instance()) {
        let open = inst.with_budget(1_000);
        let truth = brute_force(&open, &rule, BruteForce::default()).unwrap();
        prop_assert_eq!(margin(&inst, &rule, &SolverConfig::default()).unwrap(), truth.cost());
    }

    #[test]
    fn zero_cost_when_d_already_loses((inst, rule) in instance(), other in 1usize..5) {
        // the generator makes d the winner whenever it can, so look at someone else
        let d = (inst.despised + other) % inst.num_candidates();
        let inst = BriberyInstance::with_unit_prices(inst.election, d, inst.budget).unwrap();
        if is_unique_winner(&inst.election, &rule, d).unwrap() {
            return Ok(());
        }
        let sol = solve(&inst, &rule).unwrap();
        prop_assert_eq!(sol.shifts(), Some(&ShiftVector::zeros(inst.num_voters())));
        prop_assert_eq!(sol.cost(), Some(0));
    }

    #[test]
    fn borda_matches_the_reference((inst, _) in instance()) {
        let vector = borda_vector(inst.num_candidates());
        let open = inst.with_budget(1_000);
        let got = solve_scoring_unary_scores(&open, &vector).unwrap();
        prop_assert_eq!(got.cost(), borda_reference(&open));
    }

    #[test]
    fn the_two_scoring_tables_agree((inst, rule) in instance()) {
        let Some(vector) = rule.scoring_vector(inst.num_candidates()) else { return Ok(()) };
        let by_score = solve_scoring_unary_scores(&inst, &vector).unwrap();
        let by_price = solve_scoring_unary_prices(&inst, &vector).unwrap();
        prop_assert_eq!(by_score.cost(), by_price.cost());
    }

    #[test]
    fn voter_order_does_not_matter((inst, rule) in instance(), rot in 0usize..5) {
        let n = inst.num_voters();
        let mut order: Vec<usize> = (0..n).rev().collect();
        order.rotate_left(rot % n);
        let a = brute_force(&inst, &rule, BruteForce::default()).unwrap();
        let b = brute_force(&permuted(&inst, &order), &rule, BruteForce::default()).unwrap();
        prop_assert_eq!(a.cost(), b.cost());
    }

    #[test]
    fn pruning_does_not_change_the_oracle((inst, rule) in instance()) {
        let full = BruteForce { prune: false, ..BruteForce::default() };
        prop_assert_eq!(
            brute_force(&inst, &rule, BruteForce::default()).unwrap(),
            brute_force(&inst, &rule, full).unwrap()
        );
    }
}
