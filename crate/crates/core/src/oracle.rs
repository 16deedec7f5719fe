//! Certificate checking and exhaustive search.

use crate::election::ShiftVector;
use crate::error::{Error, Result};
use crate::pricing::INF;
use crate::rules::{self, RuleSpec};
use crate::solvers::{BriberyInstance, Solution};

/// Whether `shifts` fits the budget and leaves the despised candidate
/// without a unique win. Malformed or impossible shift vectors are rejected.
pub fn verify(inst: &BriberyInstance, rule: &RuleSpec, shifts: &ShiftVector) -> Result<bool> {
    if !inst.cost_of(shifts).within(inst.budget) {
        return Ok(false);
    }
    let shifted = inst.election.apply_shifts(inst.despised, shifts)?;
    Ok(!rules::is_unique_winner(&shifted, rule, inst.despised)?)
}

/// Options for [`brute_force`].
#[derive(Debug, Clone, Copy)]
pub struct BruteForce {
    /// Maximum number of visited search nodes.
    pub node_cap: u64,
    /// Stop extending a vote once the running cost exceeds the budget.
    /// Without it every shift combination is evaluated and the cost is
    /// only checked at the leaves.
    pub prune: bool,
}

impl Default for BruteForce {
    fn default() -> Self {
        Self {
            node_cap: 50_000_000,
            prune: true,
        }
    }
}

/// Cheapest successful shift vector within the budget, by trying them all.
/// Ties go to the lexicographically smallest vector.
pub fn brute_force(inst: &BriberyInstance, rule: &RuleSpec, opts: BruteForce) -> Result<Solution> {
    rule.validate(inst.num_candidates())?;
    let mut walk = Walk {
        inst,
        rule,
        opts,
        shifts: vec![0; inst.num_voters()],
        best: None,
        nodes: 0,
    };
    walk.descend(0, 0)?;
    Ok(match walk.best {
        Some((cost, shifts)) => Solution::Feasible {
            cost,
            shifts: ShiftVector::new(shifts),
        },
        None => Solution::Infeasible,
    })
}

struct Walk<'a> {
    inst: &'a BriberyInstance,
    rule: &'a RuleSpec,
    opts: BruteForce,
    shifts: Vec<usize>,
    best: Option<(u64, Vec<usize>)>,
    nodes: u64,
}

impl Walk<'_> {
    fn descend(&mut self, v: usize, cost: u64) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.opts.node_cap {
            return Err(Error::NodeLimit {
                limit: self.opts.node_cap,
                best: self.best.as_ref().map(|b| b.0),
            });
        }
        if v == self.inst.num_voters() {
            if cost > self.inst.budget || self.best.as_ref().is_some_and(|b| b.0 <= cost) {
                return Ok(());
            }
            let shifted = self
                .inst
                .election
                .apply_shifts(self.inst.despised, &ShiftVector::new(self.shifts.clone()))?;
            if !rules::is_unique_winner(&shifted, self.rule, self.inst.despised)? {
                self.best = Some((cost, self.shifts.clone()));
            }
            return Ok(());
        }
        for s in 0..=self.inst.max_shift(v) {
            let price = self.inst.raw_price(v, s);
            let total = if price == INF { INF } else { cost.saturating_add(price) };
            if self.opts.prune && total > self.inst.budget {
                break;
            }
            if total == INF {
                continue;
            }
            self.shifts[v] = s;
            self.descend(v + 1, total)?;
        }
        self.shifts[v] = 0;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pricing::PriceFunction;
    use crate::solvers::tests::{example_instance, profile};

    #[test]
    fn example_one_certificates() {
        let inst = example_instance(2);
        assert!(verify(&inst, &RuleSpec::Borda, &ShiftVector::new(vec![0, 0, 0, 2])).unwrap());
        assert!(!verify(&inst, &RuleSpec::Borda, &ShiftVector::zeros(4)).unwrap());
        let tight = example_instance(1);
        for v in 1..4 {
            let mut s = ShiftVector::zeros(4);
            s[v] = 1;
            assert!(!verify(&tight, &RuleSpec::Borda, &s).unwrap());
        }
        // over budget
        assert!(!verify(&tight, &RuleSpec::Borda, &ShiftVector::new(vec![0, 0, 0, 2])).unwrap());
        // impossible shift
        assert!(!verify(&inst, &RuleSpec::Borda, &ShiftVector::new(vec![1, 0, 0, 0])).unwrap());
    }

    #[test]
    fn example_one_brute_force() {
        for prune in [true, false] {
            let opts = BruteForce { node_cap: 10_000, prune };
            let sol = brute_force(&example_instance(2), &RuleSpec::Borda, opts).unwrap();
            assert_eq!(sol.cost(), Some(2));
            assert!(!brute_force(&example_instance(1), &RuleSpec::Borda, opts).unwrap().is_feasible());
        }
    }

    #[test]
    fn single_candidate_is_infeasible() {
        let e = profile(&["d"], &["d", "d"]);
        let inst = BriberyInstance::with_unit_prices(e, 0, 9).unwrap();
        let sol = brute_force(&inst, &RuleSpec::plurality(), BruteForce::default()).unwrap();
        assert_eq!(sol, Solution::Infeasible);
    }

    #[test]
    fn node_cap_is_enforced() {
        let err = brute_force(
            &example_instance(9),
            &RuleSpec::Borda,
            BruteForce { node_cap: 3, prune: false },
        )
        .unwrap_err();
        assert!(matches!(err, Error::NodeLimit { limit: 3, .. }));
    }

    #[test]
    fn infinite_prices_are_skipped() {
        let e = profile(&["d", "c"], &["d>c", "d>c", "c>d"]);
        let prices = vec![
            PriceFunction::AllOrNothing(crate::pricing::Cost::Infinite),
            PriceFunction::Unit,
            PriceFunction::Unit,
        ];
        let inst = BriberyInstance::new(e, 0, 5, prices).unwrap();
        let sol = brute_force(&inst, &RuleSpec::plurality(), BruteForce::default()).unwrap();
        assert_eq!(sol.cost(), Some(1));
        assert_eq!(sol.shifts().unwrap().as_slice(), &[0, 1, 0]);
    }
}
