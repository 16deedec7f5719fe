//! Maximin.
//!
//! Fix the rival `w` that ends up level with `d`, and the candidate `t`
//! that realizes `d`'s new score (possibly `w` itself). Only the votes that
//! rank `d` above `w` or `t` matter, and in each of them `d` either stays,
//! moves just below `w`, or moves just below `t`. A table over
//! `(votes seen, passes of w, passes of t)` finds the cheapest such choice.
//!
//! The acceptance test compares `w`'s exact new score with an upper bound
//! on `d`'s new score that ignores the other candidates `d` may pass on
//! the way. The bound is attained by the right choice of `t`, so the
//! minimum over all pairs is exact.

use super::{already_dethroned, cheapest, over_rivals, BriberyInstance, Solution, Witness};
use crate::election::{Candidate, PairwiseMatrix};
use crate::error::{Error, Result};
use crate::pricing::INF;
use crate::rules::RuleSpec;

pub fn solve_maximin(inst: &BriberyInstance) -> Result<Solution> {
    solve(inst, false)
}

pub(super) fn solve(inst: &BriberyInstance, parallel: bool) -> Result<Solution> {
    if inst.num_candidates() < 2 {
        return Err(Error::Domain("Maximin needs at least two candidates".into()));
    }
    if let Some(zero) = already_dethroned(inst, &RuleSpec::Maximin)? {
        return Ok(zero);
    }
    let pm = inst.election.pairwise_matrix();
    let best = over_rivals(inst, parallel, |w| {
        cheapest(
            (0..inst.num_candidates())
                .filter(|&t| t != inst.despised)
                .map(|t| pair_optimum(inst, &pm, w, t)),
        )
    });
    Ok(Solution::from_optimum(best, inst.budget))
}

/// What one vote may do: `(shift, price, passes w, passes t)`.
type Move = (usize, u64, usize, usize);

fn moves(inst: &BriberyInstance, v: usize, w: Candidate, t: Candidate) -> Vec<Move> {
    let e = &inst.election;
    let pd = e.pos(v, inst.despised);
    let mut out = vec![(0, 0, 0, 0)];
    let passes = |c: Candidate, shift: usize| usize::from(e.pos(v, c) > pd && e.pos(v, c) <= pd + shift);
    let mut push = |target: Candidate| {
        let shift = e.pos(v, target) - pd;
        let price = inst.raw_price(v, shift);
        if price != INF {
            out.push((shift, price, passes(w, shift), passes(t, shift)));
        }
    };
    let (above_w, above_t) = (e.pos(v, w) > pd, e.pos(v, t) > pd);
    if above_w {
        push(w);
    }
    if above_t && t != w {
        push(t);
    }
    out
}

fn pair_optimum(inst: &BriberyInstance, pm: &PairwiseMatrix, w: Candidate, t: Candidate) -> Option<Witness> {
    let e = &inst.election;
    let (m, d) = (e.num_candidates(), inst.despised);
    let n = e.num_voters();

    let relevant: Vec<usize> = (0..n)
        .filter(|&v| e.prefers(v, d, w) || e.prefers(v, d, t))
        .collect();
    let table: Vec<Vec<Move>> = relevant.iter().map(|&v| moves(inst, v, w, t)).collect();
    let xs = pm.get(d, w) as usize + 1;
    let ys = pm.get(d, t) as usize + 1;
    let at = |x: usize, y: usize| x * ys + y;

    // w's score against everyone but d, and d's against everyone but w and t
    let w_rest = (0..m)
        .filter(|&c| c != w && c != d)
        .map(|c| pm.get(w, c) as i64)
        .min()
        .unwrap_or(i64::MAX);
    let d_rest = (0..m)
        .filter(|&c| c != w && c != t && c != d)
        .map(|c| pm.get(d, c) as i64)
        .min()
        .unwrap_or(i64::MAX);
    let accepts = |x: usize, y: usize| {
        let score_w = w_rest.min(pm.get(w, d) as i64 + x as i64);
        let bound_d = d_rest
            .min(pm.get(d, w) as i64 - x as i64)
            .min(pm.get(d, t) as i64 - y as i64);
        score_w >= bound_d
    };

    let size = xs * ys;
    let mut cost = vec![INF; size];
    cost[at(0, 0)] = 0;
    let mut via = vec![0u8; relevant.len() * size];
    for (j, opts) in table.iter().enumerate() {
        let mut next = vec![INF; size];
        for x in 0..xs {
            for y in 0..ys {
                let here = cost[at(x, y)];
                if here == INF {
                    continue;
                }
                for (o, &(_, price, pw, pt)) in opts.iter().enumerate() {
                    let (nx, ny) = (x + pw, if t == w { x + pw } else { y + pt });
                    if nx >= xs || ny >= ys {
                        continue;
                    }
                    let total = here.saturating_add(price);
                    if total < next[at(nx, ny)] {
                        next[at(nx, ny)] = total;
                        via[j * size + at(nx, ny)] = o as u8;
                    }
                }
            }
        }
        cost = next;
    }

    let (mut x, mut y, best) = (0..xs)
        .flat_map(|x| (0..ys).map(move |y| (x, y)))
        .filter(|&(x, y)| cost[at(x, y)] != INF && accepts(x, y))
        .map(|(x, y)| (x, y, cost[at(x, y)]))
        .min_by_key(|&(x, y, c)| (c, x, y))?;

    let mut shifts = vec![0usize; n];
    for j in (0..relevant.len()).rev() {
        let (shift, _, pw, pt) = table[j][via[j * size + at(x, y)] as usize];
        shifts[relevant[j]] = shift;
        x -= pw;
        y -= if t == w { pw } else { pt };
    }
    Some(Witness { cost: best, shifts })
}
