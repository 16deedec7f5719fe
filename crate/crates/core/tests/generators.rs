use num_rational::Ratio;
use proptest::prelude::*;

use dsb_core::generators::{clique, mcis, partition, random, Graph, McisShape, PriceModel};
use dsb_core::rules::is_unique_winner;
use dsb_core::{solve, RuleSpec};

fn has_equal_split(seq: &[u64]) -> bool {
    let sum: u64 = seq.iter().sum();
    let mut reachable = vec![false; sum as usize / 2 + 1];
    reachable[0] = true;
    for &x in seq {
        for s in (x as usize..reachable.len()).rev() {
            reachable[s] |= reachable[s - x as usize];
        }
    }
    sum.is_multiple_of(2) && reachable[sum as usize / 2]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn partition_answers_the_split_question(seq in prop::collection::vec(1u64..=12, 2..=8)) {
        let sum: u64 = seq.iter().sum();
        let top = *seq.iter().max().unwrap();
        prop_assume!(sum.is_multiple_of(2) && 2 * top < sum);
        let g = partition(&seq).unwrap();
        prop_assert!(is_unique_winner(&g.instance.election, &g.rule, 0).unwrap());
        prop_assert_eq!(g.instance.num_candidates(), seq.len() * seq.len() + seq.len() + 1);
        let sol = solve(&g.instance, &g.rule).unwrap();
        prop_assert_eq!(sol.is_feasible(), has_equal_split(&seq));
    }

    #[test]
    fn generators_are_deterministic(seed in any::<u64>()) {
        let rule = RuleSpec::Maximin;
        prop_assert_eq!(
            random(4, 5, seed, PriceModel::Listed(4), &rule, 3).unwrap(),
            random(4, 5, seed, PriceModel::Listed(4), &rule, 3).unwrap()
        );
    }
}

#[test]
fn partition_sequences_are_checked() {
    assert!(partition(&[]).is_err());
    assert!(partition(&[3, 2]).is_err());
    assert!(partition(&[4, 2, 2]).is_err());
    assert!(partition(&[0, 2, 2]).is_err());
    assert!(partition(&[3, 3, 2, 2]).is_ok());
}

#[test]
fn clique_counts_follow_the_graph() {
    for (nv, edges) in [
        (3, vec![(0, 1), (1, 2), (0, 2)]),
        (5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2)]),
    ] {
        let g = Graph::new(nv, &edges).unwrap();
        for k in [3, 4] {
            let gen = clique(&g, k, Ratio::new(1, 2)).unwrap();
            let e = &gen.instance.election;
            let ne = edges.len();
            let l = nv * ne * 3 * k * (k - 1) / 2;
            let s = k * (k - 1) / 2 + k + 1;
            assert_eq!(e.num_candidates(), 2 + 2 * l + nv + ne + s);
            assert_eq!(e.num_voters(), 2 * ne + 2 * (k - 2) + 1 + 6 * k * k);
            assert_eq!(e.num_voters() % 2, 1);
            assert!(is_unique_winner(e, &gen.rule, 0).unwrap());
            assert_eq!(gen.instance.budget, (3 * k * (k - 1) / 2) as u64);
        }
    }
}

#[test]
fn mcis_budget_stays_below_each_dummy_block() {
    let graphs = [
        Graph::new(4, &[(0, 2), (1, 3)]).unwrap().colored(vec![0, 0, 1, 1]).unwrap(),
        Graph::new(6, &[(0, 2), (0, 4), (1, 5), (3, 4), (2, 5)])
            .unwrap()
            .colored(vec![0, 0, 1, 1, 2, 2])
            .unwrap(),
    ];
    for g in &graphs {
        let shape = McisShape::new(g).unwrap();
        assert!(shape.budget < shape.t as u64);
        let gen = mcis(g, Ratio::new(1, 2)).unwrap();
        assert!(is_unique_winner(&gen.instance.election, &gen.rule, 0).unwrap());
        assert_eq!(gen.instance.num_voters(), 4 * shape.h + 7);
    }
}
