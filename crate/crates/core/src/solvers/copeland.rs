//! Copeland^alpha: exact exponential searches.
//!
//! Shifting `d` only changes the head-to-head contests between `d` and the
//! candidates it passes, so the state of a search is the vector of margins
//! `N(d,c) - N(c,d)`, each dropping by two whenever `d` passes `c`. Scores
//! are kept as integers scaled by the denominator of alpha.

use num_rational::Ratio;

use super::{already_dethroned, BriberyInstance, Solution, SolverConfig, Witness};
use crate::election::Candidate;
use crate::error::{Error, Result};
use crate::pricing::{PriceFunction, INF};
use crate::rules::RuleSpec;

/// Depth-first branch and bound over voters.
pub fn solve_copeland_bnb(inst: &BriberyInstance, alpha: Ratio<u64>, node_limit: u64) -> Result<Solution> {
    let rule = RuleSpec::Copeland(alpha);
    rule.validate(inst.num_candidates())?;
    if let Some(zero) = already_dethroned(inst, &rule)? {
        return Ok(zero);
    }
    bnb(inst, alpha, node_limit)
}

/// Plain enumeration, for few voters with all-or-nothing prices or for few
/// voters and a small budget.
pub fn solve_copeland_fpt(inst: &BriberyInstance, alpha: Ratio<u64>, cfg: &SolverConfig) -> Result<Solution> {
    let rule = RuleSpec::Copeland(alpha);
    rule.validate(inst.num_candidates())?;
    if let Some(zero) = already_dethroned(inst, &rule)? {
        return Ok(zero);
    }
    fpt(inst, alpha, cfg)
}

struct Contest {
    d: Candidate,
    /// Scaled score of every rival from contests not involving `d`.
    rest: Vec<u64>,
    /// `N(d,c) - N(c,d)`.
    margin: Vec<i64>,
    win: u64,
    tie: u64,
}

impl Contest {
    fn new(inst: &BriberyInstance, alpha: Ratio<u64>) -> Self {
        let pm = inst.election.pairwise_matrix();
        let (m, d) = (inst.num_candidates(), inst.despised);
        let (win, tie) = (*alpha.denom(), *alpha.numer());
        let value = |x: i64| match x {
            x if x > 0 => win,
            0 => tie,
            _ => 0,
        };
        let rest = (0..m)
            .map(|c| {
                if c == d {
                    return 0;
                }
                (0..m)
                    .filter(|&o| o != c && o != d)
                    .map(|o| value(pm.margin(c, o)))
                    .sum()
            })
            .collect();
        let margin = (0..m).map(|c| if c == d { 0 } else { pm.margin(d, c) }).collect();
        Self {
            d,
            rest,
            margin,
            win,
            tie,
        }
    }

    fn value(&self, x: i64) -> u64 {
        match x {
            x if x > 0 => self.win,
            0 => self.tie,
            _ => 0,
        }
    }

    fn rivals(&self) -> impl Iterator<Item = Candidate> + '_ {
        (0..self.margin.len()).filter(move |&c| c != self.d)
    }

    /// Whether `d` fails to be the unique winner under the given margins.
    fn dethroned(&self, margin: &[i64]) -> bool {
        let own: u64 = self.rivals().map(|c| self.value(margin[c])).sum();
        self.rivals().any(|c| self.rest[c] + self.value(-margin[c]) >= own)
    }
}

/// Lowers the margins of every candidate `d` passes when moving back `shift` in vote `v`.
fn pass(inst: &BriberyInstance, margin: &mut [i64], v: usize, shift: usize, sign: i64) {
    let vote = inst.election.vote(v);
    let pd = inst.election.pos(v, inst.despised);
    for &c in &vote[pd..pd + shift] {
        margin[c] -= 2 * sign;
    }
}

// ---------------------------------------------------------------------------
// branch and bound

struct Search<'a> {
    inst: &'a BriberyInstance,
    contest: Contest,
    /// `pass_price[v][c]`: price of moving `d` just below `c` in vote `v`, `INF` if `c` is above `d`.
    pass_price: Vec<Vec<u64>>,
    margin: Vec<i64>,
    shifts: Vec<usize>,
    cost: u64,
    best: Option<Witness>,
    /// Strict upper bound on any solution still worth finding.
    incumbent: u64,
    nodes: u64,
    node_limit: u64,
}

pub(super) fn bnb(inst: &BriberyInstance, alpha: Ratio<u64>, node_limit: u64) -> Result<Solution> {
    let (m, n) = (inst.num_candidates(), inst.num_voters());
    let contest = Contest::new(inst, alpha);
    let pass_price = (0..n)
        .map(|v| {
            let pd = inst.election.pos(v, inst.despised);
            (0..m)
                .map(|c| {
                    let pc = inst.election.pos(v, c);
                    if pc > pd {
                        inst.raw_price(v, pc - pd)
                    } else {
                        INF
                    }
                })
                .collect()
        })
        .collect();
    let mut search = Search {
        inst,
        margin: contest.margin.clone(),
        contest,
        pass_price,
        shifts: vec![0; n],
        cost: 0,
        best: None,
        incumbent: inst.budget.saturating_add(1),
        nodes: 0,
        node_limit,
    };
    search.descend(0)?;
    Ok(Solution::from_optimum(search.best, inst.budget))
}

impl Search<'_> {
    /// Per rival, how many of the votes `j..n` can still make `d` pass it.
    fn reachable(&self, j: usize) -> Vec<i64> {
        let spare = self.incumbent.saturating_sub(self.cost + 1);
        let mut r = vec![0i64; self.margin.len()];
        for row in &self.pass_price[j..] {
            for (c, &p) in row.iter().enumerate() {
                if p <= spare {
                    r[c] += 1;
                }
            }
        }
        r
    }

    fn descend(&mut self, j: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            return Err(Error::NodeLimit {
                limit: self.node_limit,
                best: self.best.as_ref().map(|w| w.cost),
            });
        }
        if self.cost >= self.incumbent {
            return Ok(());
        }
        if self.contest.dethroned(&self.margin) {
            self.incumbent = self.cost;
            self.best = Some(Witness {
                cost: self.cost,
                shifts: self.shifts.clone(),
            });
            return Ok(());
        }
        if j == self.inst.num_voters() {
            return Ok(());
        }

        let reach = self.reachable(j);
        let c = &self.contest;
        let floor = |x: Candidate| self.margin[x] - 2 * reach[x];
        let own_min: u64 = c.rivals().map(|x| c.value(floor(x))).sum();
        if !c.rivals().any(|x| c.rest[x] + c.value(-floor(x)) >= own_min) {
            return Ok(());
        }

        let spare = self.incumbent.saturating_sub(self.cost + 1);
        let pd = self.inst.election.pos(j, self.inst.despised);
        let last = self.inst.max_shift(j);
        let mut amounts: Vec<usize> = c
            .rivals()
            .filter(|&x| self.margin[x] >= 0 && floor(x) <= 0)
            .filter(|&x| self.pass_price[j][x] <= spare)
            .map(|x| self.inst.election.pos(j, x) - pd)
            .collect();
        if last > 0 && self.inst.raw_price(j, last) <= spare {
            amounts.push(last);
        }
        amounts.sort_unstable();
        amounts.dedup();

        self.descend(j + 1)?;
        for s in amounts {
            let price = self.inst.raw_price(j, s);
            if self.cost.saturating_add(price) >= self.incumbent {
                break;
            }
            pass(self.inst, &mut self.margin, j, s, 1);
            self.shifts[j] = s;
            self.cost += price;
            let res = self.descend(j + 1);
            self.cost -= price;
            self.shifts[j] = 0;
            pass(self.inst, &mut self.margin, j, s, -1);
            res?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// enumeration regimes

/// Which enumeration applies to an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(super) enum Regime {
    /// All prices are all-or-nothing: enumerate subsets of the bribable voters.
    Subsets,
    /// Enumerate distributions of the budget over the voters.
    Budget,
}

pub(super) fn fpt_regime(inst: &BriberyInstance, cfg: &SolverConfig) -> Option<Regime> {
    let all_or_nothing = inst
        .prices
        .iter()
        .all(|p| matches!(p, PriceFunction::AllOrNothing(_)));
    if all_or_nothing && bribable(inst).len() <= cfg.max_subset_voters {
        return Some(Regime::Subsets);
    }
    if inst.budget < INF - 1 && distributions(inst.num_voters() as u64, inst.budget) <= cfg.enumeration_limit {
        return Some(Regime::Budget);
    }
    None
}

/// `C(n + b, n)`, saturating.
fn distributions(n: u64, b: u64) -> u64 {
    let mut acc: u128 = 1;
    for i in 1..=n.min(b) {
        acc = acc * u128::from(n.max(b) + i) / u128::from(i);
        if acc > u128::from(u64::MAX) {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Voters in which moving `d` to the last position has a finite price.
fn bribable(inst: &BriberyInstance) -> Vec<usize> {
    (0..inst.num_voters())
        .filter(|&v| inst.max_shift(v) > 0 && inst.raw_price(v, inst.max_shift(v)) != INF)
        .collect()
}

pub(super) fn fpt(inst: &BriberyInstance, alpha: Ratio<u64>, cfg: &SolverConfig) -> Result<Solution> {
    let contest = Contest::new(inst, alpha);
    let best = match fpt_regime(inst, cfg) {
        Some(Regime::Subsets) => subsets(inst, &contest),
        Some(Regime::Budget) => {
            let mut e = Enumeration {
                inst,
                contest: &contest,
                margin: contest.margin.clone(),
                shifts: vec![0; inst.num_voters()],
                best: None,
            };
            e.descend(0, 0);
            e.best
        }
        None => {
            return Err(Error::NotApplicable(
                "neither all-or-nothing prices on few voters nor a small budget; use the branch-and-bound solver"
                    .into(),
            ))
        }
    };
    Ok(Solution::from_optimum(best, inst.budget))
}

fn subsets(inst: &BriberyInstance, contest: &Contest) -> Option<Witness> {
    let voters = bribable(inst);
    let mut best: Option<Witness> = None;
    for mask in 0u64..1 << voters.len() {
        let chosen = voters.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1);
        let cost = chosen
            .clone()
            .fold(0u64, |acc, (_, &v)| acc.saturating_add(inst.raw_price(v, inst.max_shift(v))));
        if best.as_ref().is_some_and(|b| b.cost <= cost) {
            continue;
        }
        let mut margin = contest.margin.clone();
        for (_, &v) in chosen.clone() {
            pass(inst, &mut margin, v, inst.max_shift(v), 1);
        }
        if contest.dethroned(&margin) {
            let mut shifts = vec![0; inst.num_voters()];
            for (_, &v) in chosen {
                shifts[v] = inst.max_shift(v);
            }
            best = Some(Witness { cost, shifts });
        }
    }
    best
}

struct Enumeration<'a> {
    inst: &'a BriberyInstance,
    contest: &'a Contest,
    margin: Vec<i64>,
    shifts: Vec<usize>,
    best: Option<Witness>,
}

impl Enumeration<'_> {
    fn descend(&mut self, j: usize, cost: u64) {
        if j == self.inst.num_voters() {
            if self.best.as_ref().is_none_or(|b| cost < b.cost) && self.contest.dethroned(&self.margin) {
                self.best = Some(Witness {
                    cost,
                    shifts: self.shifts.clone(),
                });
            }
            return;
        }
        let spare = self.inst.budget - cost;
        // the largest shift at each price level that still fits
        let mut amounts = vec![0usize];
        for s in 1..=self.inst.max_shift(j) {
            let p = self.inst.raw_price(j, s);
            if p > spare {
                break;
            }
            if s == self.inst.max_shift(j) || self.inst.raw_price(j, s + 1) != p {
                amounts.push(s);
            }
        }
        for s in amounts {
            let price = self.inst.raw_price(j, s);
            pass(self.inst, &mut self.margin, j, s, 1);
            self.shifts[j] = s;
            self.descend(j + 1, cost + price);
            self.shifts[j] = 0;
            pass(self.inst, &mut self.margin, j, s, -1);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pricing::Cost;
    use crate::solvers::tests::{example_instance, profile};

    fn half() -> Ratio<u64> {
        Ratio::new(1, 2)
    }

    #[test]
    fn example_one_under_both_searches() {
        // d beats everyone 3:1; passing a rival in one vote only ties it
        let bnb = solve_copeland_bnb(&example_instance(5), half(), 1_000).unwrap();
        let fpt = solve_copeland_fpt(&example_instance(5), half(), &SolverConfig::default()).unwrap();
        assert_eq!(bnb.cost(), fpt.cost());
        assert!(bnb.is_feasible());
    }

    #[test]
    fn infinite_all_or_nothing_prices_freeze_the_election() {
        let e = profile(&["d", "a", "b"], &["d>a>b", "d>b>a", "a>d>b"]);
        let inst = BriberyInstance::new(e, 0, 100, vec![PriceFunction::AllOrNothing(Cost::Infinite); 3]).unwrap();
        let cfg = SolverConfig::default();
        assert_eq!(fpt_regime(&inst, &cfg), Some(Regime::Subsets));
        assert_eq!(solve_copeland_fpt(&inst, half(), &cfg).unwrap(), Solution::Infeasible);
        assert_eq!(solve_copeland_bnb(&inst, half(), 1_000).unwrap(), Solution::Infeasible);
    }

    #[test]
    fn node_limit_is_reported() {
        let inst = example_instance(5);
        let err = solve_copeland_bnb(&inst, half(), 1).unwrap_err();
        assert!(matches!(err, Error::NodeLimit { limit: 1, .. }));
    }

    #[test]
    fn regime_selection() {
        let cfg = SolverConfig::default();
        assert_eq!(fpt_regime(&example_instance(3), &cfg), Some(Regime::Budget));
        assert_eq!(fpt_regime(&example_instance(INF - 1), &cfg), None);
        let err = solve_copeland_fpt(&example_instance(INF - 1), half(), &cfg).unwrap_err();
        assert!(matches!(err, Error::NotApplicable(_)));
    }

    #[test]
    fn distribution_counts() {
        assert_eq!(distributions(4, 3), 35);
        assert_eq!(distributions(3, 4), 35);
        assert_eq!(distributions(0, 9), 1);
        assert_eq!(distributions(200, 200), u64::MAX);
    }

    #[test]
    fn scaled_scores_follow_alpha() {
        let e = profile(&["d", "a"], &["d>a", "a>d"]);
        let inst = BriberyInstance::with_unit_prices(e, 0, 0).unwrap();
        let contest = Contest::new(&inst, Ratio::new(1, 3));
        assert_eq!((contest.win, contest.tie), (3, 1));
        assert_eq!(contest.margin, vec![0, 0]);
        assert!(contest.dethroned(&contest.margin));
    }
}
