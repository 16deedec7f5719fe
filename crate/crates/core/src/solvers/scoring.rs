//! Positional scoring rules.
//!
//! For a fixed rival `c`, what matters is how much a shift in vote `j`
//! raises `c`'s score relative to the despised candidate `d`: shifting `d`
//! back by `k` positions costs `d` the points between its old and new
//! position, and gives `c` one position's worth of points if `d` passes it.
//! Two tables solve the per-rival problem:
//!
//! * score-indexed: cheapest way to gain at least `k` relative points
//!   (pseudo-polynomial in the score gap);
//! * price-indexed: largest relative gain for total price at most `t`
//!   (pseudo-polynomial in the budget).
//!
//! `d` stops being the unique winner exactly when some rival catches up, so
//! the answer is the cheapest rival.

use super::{already_dethroned, over_rivals, BriberyInstance, Solution, Witness};
use crate::election::Candidate;
use crate::error::Result;
use crate::pricing::INF;
use crate::rules::RuleSpec;

/// Score-indexed table; the score gap must be small.
pub fn solve_scoring_unary_scores(inst: &BriberyInstance, vector: &[u64]) -> Result<Solution> {
    let rule = RuleSpec::Scoring(vector.to_vec());
    rule.validate(inst.num_candidates())?;
    if let Some(zero) = already_dethroned(inst, &rule)? {
        return Ok(zero);
    }
    unary_scores(inst, vector, false)
}

/// Price-indexed table; the budget must be small.
pub fn solve_scoring_unary_prices(inst: &BriberyInstance, vector: &[u64]) -> Result<Solution> {
    let rule = RuleSpec::Scoring(vector.to_vec());
    rule.validate(inst.num_candidates())?;
    if let Some(zero) = already_dethroned(inst, &rule)? {
        return Ok(zero);
    }
    unary_prices(inst, vector, false)
}

pub(super) fn unary_scores(inst: &BriberyInstance, vector: &[u64], parallel: bool) -> Result<Solution> {
    let scores = totals(inst, vector);
    let best = over_rivals(inst, parallel, |c| {
        let gap = scores[inst.despised].saturating_sub(scores[c]);
        cheapest_gain(inst, vector, c, gap as usize)
    });
    Ok(Solution::from_optimum(best, inst.budget))
}

pub(super) fn unary_prices(inst: &BriberyInstance, vector: &[u64], parallel: bool) -> Result<Solution> {
    let scores = totals(inst, vector);
    let budget = useful_budget(inst);
    let best = over_rivals(inst, parallel, |c| {
        let gap = u128::from(scores[inst.despised].saturating_sub(scores[c]));
        largest_gain(inst, vector, c, gap, budget)
    });
    Ok(Solution::from_optimum(best, inst.budget))
}

/// The budget beyond which more money buys nothing: the smaller of the
/// actual budget and the sum of every voter's largest finite price.
pub(super) fn useful_budget(inst: &BriberyInstance) -> u64 {
    let ceiling = (0..inst.num_voters())
        .map(|v| {
            (0..=inst.max_shift(v))
                .map(|s| inst.raw_price(v, s))
                .filter(|&p| p != INF)
                .max()
                .unwrap_or(0)
        })
        .fold(0u64, u64::saturating_add);
    inst.budget.min(ceiling)
}

fn totals(inst: &BriberyInstance, vector: &[u64]) -> Vec<u64> {
    let mut s = vec![0u64; inst.num_candidates()];
    for vote in inst.election.votes() {
        for (i, &c) in vote.iter().enumerate() {
            s[c] += vector[i];
        }
    }
    s
}

/// Relative gain of `c` over `d` when `d` moves back `shift` places in vote `v`.
fn gain(inst: &BriberyInstance, vector: &[u64], c: Candidate, v: usize, shift: usize) -> u64 {
    let e = &inst.election;
    let pd = e.pos(v, inst.despised);
    let pc = e.pos(v, c);
    let mut g = vector[pd - 1] - vector[pd + shift - 1];
    if pd < pc && pc <= pd + shift {
        g += vector[pc - 2] - vector[pc - 1];
    }
    g
}

/// Shifts with a finite price in vote `v`, ascending.
fn options(inst: &BriberyInstance, v: usize) -> impl Iterator<Item = (usize, u64)> + '_ {
    (0..=inst.max_shift(v))
        .map(move |s| (s, inst.raw_price(v, s)))
        .filter(|&(_, p)| p != INF)
}

/// Finite-price options of every voter as `(shift, price, gain)`, ascending by shift.
fn option_table(inst: &BriberyInstance, vector: &[u64], c: Candidate) -> Vec<Vec<(usize, u64, u64)>> {
    (0..inst.num_voters())
        .map(|v| {
            options(inst, v)
                .map(|(s, p)| (s, p, gain(inst, vector, c, v, s)))
                .collect()
        })
        .collect()
}

/// `f(j, k)`: cheapest bribery of voters `j..n` raising `c` by at least `k`
/// relative to `d`. Tables run over suffixes so that the witness can be
/// rebuilt front to back, taking the smallest optimal shift each time; the
/// result is the lexicographically smallest optimal shift vector.
fn cheapest_gain(inst: &BriberyInstance, vector: &[u64], c: Candidate, gap: usize) -> Option<Witness> {
    let n = inst.num_voters();
    let width = gap + 1;
    let opts = option_table(inst, vector, c);
    let clamp = |k: usize, g: u64| k.saturating_sub(usize::try_from(g).unwrap_or(usize::MAX));

    let mut f = vec![INF; (n + 1) * width];
    f[n * width] = 0;
    for v in (0..n).rev() {
        let (row, next) = f[v * width..].split_at_mut(width);
        for k in 0..width {
            for &(_, p, g) in &opts[v] {
                let from = next[clamp(k, g)];
                if from != INF {
                    row[k] = row[k].min(from.saturating_add(p));
                }
            }
        }
    }

    let cost = f[gap];
    if cost == INF {
        return None;
    }
    let mut shifts = vec![0usize; n];
    let mut k = gap;
    for v in 0..n {
        let here = f[v * width + k];
        let &(s, _, g) = opts[v]
            .iter()
            .find(|&&(_, p, g)| {
                let from = f[(v + 1) * width + clamp(k, g)];
                from != INF && from.saturating_add(p) == here
            })
            .expect("an optimal option exists on every reachable row");
        shifts[v] = s;
        k = clamp(k, g);
    }
    Some(Witness { cost, shifts })
}

/// `f(j, t)`: largest relative gain of `c` over `d` from voters `j..n` at
/// total price at most `t`. The optimum is the least `t` whose gain covers
/// the gap; the witness is rebuilt like in [`cheapest_gain`].
fn largest_gain(
    inst: &BriberyInstance,
    vector: &[u64],
    c: Candidate,
    gap: u128,
    budget: u64,
) -> Option<Witness> {
    let n = inst.num_voters();
    let width = budget as usize + 1;
    let opts = option_table(inst, vector, c);

    let mut f = vec![0u128; (n + 1) * width];
    for v in (0..n).rev() {
        let (row, next) = f[v * width..].split_at_mut(width);
        for (t, cell) in row.iter_mut().enumerate() {
            *cell = opts[v]
                .iter()
                .filter(|o| o.1 as usize <= t)
                .map(|&(_, p, g)| next[t - p as usize] + u128::from(g))
                .max()
                .unwrap_or(0);
        }
    }

    let spend = (0..width).find(|&t| f[t] >= gap)?;
    let mut shifts = vec![0usize; n];
    let (mut t, mut need, mut cost) = (spend, gap, 0u64);
    for v in 0..n {
        let &(s, p, g) = opts[v]
            .iter()
            .find(|&&(_, p, g)| p as usize <= t && f[(v + 1) * width + t - p as usize] + u128::from(g) >= need)
            .expect("the gain covering the gap is reachable");
        shifts[v] = s;
        t -= p as usize;
        need = need.saturating_sub(u128::from(g));
        cost += p;
    }
    debug_assert_eq!(cost, spend as u64);
    Some(Witness { cost, shifts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pricing::PriceFunction;
    use crate::rules::borda_vector;
    use crate::solvers::tests::{example_instance, profile};

    #[test]
    fn example_one_through_both_tables() {
        let borda = borda_vector(4);
        for solver in [solve_scoring_unary_scores, solve_scoring_unary_prices] {
            let sol = solver(&example_instance(2), &borda).unwrap();
            assert_eq!(sol.cost(), Some(2));
            assert_eq!(sol.shifts().unwrap().as_slice(), &[0, 0, 0, 2]);
            assert_eq!(solver(&example_instance(1), &borda).unwrap(), Solution::Infeasible);
        }
    }

    #[test]
    fn gains_follow_the_pass_rule() {
        let inst = example_instance(2);
        let borda = borda_vector(4);
        let a = 0;
        // vote 4 is d>a>b>c: shifting by 1 passes a (gain 1 + 1), by 2 also passes b (2 + 1)
        assert_eq!(gain(&inst, &borda, a, 3, 1), 2);
        assert_eq!(gain(&inst, &borda, a, 3, 2), 3);
        // vote 2 is d>b>a>c: a is two below d
        assert_eq!(gain(&inst, &borda, a, 1, 1), 1);
        assert_eq!(gain(&inst, &borda, a, 1, 2), 3);
    }

    #[test]
    fn two_candidate_borda() {
        // d>c three times: gap 3, each shift gives 2 relative points for 1 unit
        let e = profile(&["d", "c"], &["d>c", "d>c", "d>c"]);
        let inst = BriberyInstance::with_unit_prices(e, 0, 5).unwrap();
        let borda = borda_vector(2);
        assert_eq!(solve_scoring_unary_scores(&inst, &borda).unwrap().cost(), Some(2));
        assert_eq!(solve_scoring_unary_prices(&inst, &borda).unwrap().cost(), Some(2));
    }

    #[test]
    fn zero_budget_price_table() {
        let inst = example_instance(0);
        assert_eq!(useful_budget(&inst), 0);
        assert_eq!(
            solve_scoring_unary_prices(&inst, &borda_vector(4)).unwrap(),
            Solution::Infeasible
        );
    }

    #[test]
    fn useful_budget_caps_at_the_price_ceiling() {
        let e = profile(&["d", "c"], &["d>c", "c>d"]);
        let inst = BriberyInstance::new(
            e,
            0,
            1_000,
            vec![PriceFunction::listed(vec![0, 7]).unwrap(), PriceFunction::Unit],
        )
        .unwrap();
        assert_eq!(useful_budget(&inst), 7);
    }
}
