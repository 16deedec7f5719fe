//! Destructive shift bribery solvers.
//!
//! Every solver computes the cheapest shift vector that stops the despised
//! candidate from being the unique winner, and then checks it against the
//! budget. The polynomial algorithms never look at the budget while
//! filling their tables, so the same code also answers margin queries.

mod approval;
mod bucklin;
mod copeland;
mod maximin;
mod scoring;

pub use approval::solve_k_approval;
pub use bucklin::{solve_bucklin, solve_simplified_bucklin};
pub use copeland::{solve_copeland_bnb, solve_copeland_fpt};
pub use maximin::solve_maximin;
pub use scoring::{solve_scoring_unary_prices, solve_scoring_unary_scores};

use rayon::prelude::*;

use crate::election::{Candidate, Election, ShiftVector};
use crate::error::{input, Error, Result};
use crate::pricing::{Cost, PriceFunction, INF};
use crate::rules::{self, RuleSpec};

/// An election, a despised candidate, a budget and one price function per voter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BriberyInstance {
    pub election: Election,
    pub despised: Candidate,
    pub budget: u64,
    pub prices: Vec<PriceFunction>,
}

impl BriberyInstance {
    pub fn new(
        election: Election,
        despised: Candidate,
        budget: u64,
        prices: Vec<PriceFunction>,
    ) -> Result<Self> {
        if despised >= election.num_candidates() {
            return input(format!("unknown despised candidate index {despised}"));
        }
        if prices.len() != election.num_voters() {
            return input(format!(
                "{} price functions for {} voters",
                prices.len(),
                election.num_voters()
            ));
        }
        Ok(Self {
            election,
            despised,
            budget,
            prices,
        })
    }

    /// Same instance with unit prices for every voter.
    pub fn with_unit_prices(election: Election, despised: Candidate, budget: u64) -> Result<Self> {
        let n = election.num_voters();
        Self::new(election, despised, budget, vec![PriceFunction::Unit; n])
    }

    pub fn with_budget(&self, budget: u64) -> Self {
        Self {
            budget,
            ..self.clone()
        }
    }

    pub fn num_voters(&self) -> usize {
        self.election.num_voters()
    }

    pub fn num_candidates(&self) -> usize {
        self.election.num_candidates()
    }

    /// Price of shifting the despised candidate back by `shift` in vote `v`.
    pub fn price(&self, v: usize, shift: usize) -> Cost {
        self.prices[v].price(self.max_shift(v), shift)
    }

    #[inline]
    pub(crate) fn raw_price(&self, v: usize, shift: usize) -> u64 {
        self.price(v, shift).raw()
    }

    /// How far the despised candidate can move back in vote `v`.
    pub fn max_shift(&self, v: usize) -> usize {
        self.election.max_shift(v, self.despised)
    }

    /// Cost of a whole shift vector.
    pub fn cost_of(&self, shifts: &ShiftVector) -> Cost {
        crate::pricing::total_cost(&self.prices, &self.election, self.despised, shifts)
    }
}

/// Outcome of a solver run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    /// A cheapest successful shift vector and its cost (at most the budget).
    Feasible { cost: u64, shifts: ShiftVector },
    /// No shift vector within the budget dethrones the despised candidate.
    Infeasible,
}

impl Solution {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Solution::Feasible { .. })
    }

    pub fn cost(&self) -> Option<u64> {
        match self {
            Solution::Feasible { cost, .. } => Some(*cost),
            Solution::Infeasible => None,
        }
    }

    pub fn shifts(&self) -> Option<&ShiftVector> {
        match self {
            Solution::Feasible { shifts, .. } => Some(shifts),
            Solution::Infeasible => None,
        }
    }

    /// Keeps an unconstrained optimum only if it fits the budget.
    pub(crate) fn from_optimum(opt: Option<Witness>, budget: u64) -> Self {
        match opt {
            Some(w) if w.cost <= budget => Solution::Feasible {
                cost: w.cost,
                shifts: ShiftVector::new(w.shifts),
            },
            _ => Solution::Infeasible,
        }
    }

    pub(crate) fn zero(n: usize) -> Self {
        Solution::Feasible {
            cost: 0,
            shifts: ShiftVector::zeros(n),
        }
    }
}

/// A candidate optimum found by one of the sub-searches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Witness {
    pub cost: u64,
    pub shifts: Vec<usize>,
}

/// Picks the cheapest witness; on equal cost the earliest one wins, which
/// keeps the output independent of whether the sub-searches ran in parallel.
pub(crate) fn cheapest(found: impl IntoIterator<Item = Option<Witness>>) -> Option<Witness> {
    found.into_iter().flatten().fold(None, |best, w| match best {
        Some(b) if b.cost <= w.cost => Some(b),
        _ => Some(w),
    })
}

/// Runs `f` over the rivals of the despised candidate, in parallel if asked.
pub(crate) fn over_rivals<F>(inst: &BriberyInstance, parallel: bool, f: F) -> Option<Witness>
where
    F: Fn(Candidate) -> Option<Witness> + Sync + Send,
{
    let rivals: Vec<Candidate> = (0..inst.num_candidates())
        .filter(|&c| c != inst.despised)
        .collect();
    let found: Vec<Option<Witness>> = if parallel {
        rivals.par_iter().map(|&c| f(c)).collect()
    } else {
        rivals.iter().map(|&c| f(c)).collect()
    };
    cheapest(found)
}

/// Returns the zero solution when the despised candidate is not the unique
/// winner to begin with.
pub(crate) fn already_dethroned(inst: &BriberyInstance, rule: &RuleSpec) -> Result<Option<Solution>> {
    if rules::is_unique_winner(&inst.election, rule, inst.despised)? {
        Ok(None)
    } else {
        Ok(Some(Solution::zero(inst.num_voters())))
    }
}

/// Tuning knobs for [`solve_with`].
#[derive(Debug, Clone)]
pub struct SolverConfig {
    /// Largest `n * alpha_1` for which the score-indexed scoring DP is used,
    /// and largest budget for the price-indexed one.
    pub table_bound: u64,
    /// Node budget of the Copeland branch-and-bound search.
    pub node_limit: u64,
    /// Largest number of enumerated leaves for the Copeland budget regime.
    pub enumeration_limit: u64,
    /// Largest number of bribable voters for the all-or-nothing Copeland regime.
    pub max_subset_voters: usize,
    /// Run independent per-rival sub-searches on the rayon pool.
    pub parallel: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            table_bound: 1_000_000,
            node_limit: 20_000_000,
            enumeration_limit: 2_000_000,
            max_subset_voters: 22,
            parallel: false,
        }
    }
}

/// Solves `inst` under `rule` with the default configuration.
pub fn solve(inst: &BriberyInstance, rule: &RuleSpec) -> Result<Solution> {
    solve_with(inst, rule, &SolverConfig::default())
}

/// Dispatches to the algorithm matching `rule`.
pub fn solve_with(inst: &BriberyInstance, rule: &RuleSpec, cfg: &SolverConfig) -> Result<Solution> {
    rule.validate(inst.num_candidates())?;
    if let Some(zero) = already_dethroned(inst, rule)? {
        return Ok(zero);
    }
    match rule {
        RuleSpec::KApproval(k) => solve_k_approval(inst, *k),
        RuleSpec::Scoring(_) | RuleSpec::Borda => {
            let vector = rule
                .scoring_vector(inst.num_candidates())
                .expect("scoring-type rule");
            let top = vector.first().copied().unwrap_or(0);
            let max_score = top.saturating_mul(inst.num_voters() as u64);
            if max_score <= cfg.table_bound {
                scoring::unary_scores(inst, &vector, cfg.parallel)
            } else if scoring::useful_budget(inst) <= cfg.table_bound {
                scoring::unary_prices(inst, &vector, cfg.parallel)
            } else {
                Err(Error::NotApplicable(format!(
                    "scores up to {max_score} and budget {} both exceed the table bound {}",
                    inst.budget, cfg.table_bound
                )))
            }
        }
        RuleSpec::Bucklin => bucklin::solve(inst, true, cfg.parallel),
        RuleSpec::SimplifiedBucklin => bucklin::solve(inst, false, cfg.parallel),
        RuleSpec::Maximin => maximin::solve(inst, cfg.parallel),
        RuleSpec::Copeland(alpha) => {
            if copeland::fpt_regime(inst, cfg).is_some() {
                copeland::fpt(inst, *alpha, cfg)
            } else {
                copeland::bnb(inst, *alpha, cfg.node_limit)
            }
        }
    }
}

/// The smallest budget that makes the instance feasible, or `None` when no
/// finite budget suffices.
pub fn margin(inst: &BriberyInstance, rule: &RuleSpec, cfg: &SolverConfig) -> Result<Option<u64>> {
    let open = inst.with_budget(INF - 1);
    Ok(solve_with(&open, rule, cfg)?.cost())
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::election::tests::example_one;

    pub(crate) fn example_instance(budget: u64) -> BriberyInstance {
        BriberyInstance::with_unit_prices(example_one(), 3, budget).unwrap()
    }

    pub(crate) fn profile(names: &[&str], votes: &[&str]) -> Election {
        let votes: Vec<Vec<&str>> = votes.iter().map(|v| v.split('>').collect()).collect();
        Election::from_names(names, &votes).unwrap()
    }

    #[test]
    fn instance_validation() {
        let e = example_one();
        assert!(BriberyInstance::new(e.clone(), 4, 1, vec![PriceFunction::Unit; 4]).is_err());
        assert!(BriberyInstance::new(e, 3, 1, vec![PriceFunction::Unit; 3]).is_err());
    }

    #[test]
    fn example_one_dispatch() {
        let yes = solve(&example_instance(2), &RuleSpec::Borda).unwrap();
        assert_eq!(yes.cost(), Some(2));
        assert_eq!(yes.shifts().unwrap().as_slice(), &[0, 0, 0, 2]);
        assert_eq!(solve(&example_instance(1), &RuleSpec::Borda).unwrap(), Solution::Infeasible);
        assert_eq!(margin(&example_instance(0), &RuleSpec::Borda, &SolverConfig::default()).unwrap(), Some(2));
    }

    #[test]
    fn dimension_mismatch_is_an_input_error() {
        let err = solve(&example_instance(2), &RuleSpec::Scoring(vec![1, 0])).unwrap_err();
        assert!(matches!(err, Error::Input(_)));
    }

    #[test]
    fn cheapest_prefers_the_earliest_on_ties() {
        let w = |cost, tag| Some(Witness { cost, shifts: vec![tag] });
        let got = cheapest([None, w(3, 1), w(2, 2), w(2, 3)]).unwrap();
        assert_eq!(got.shifts, vec![2]);
    }
}
