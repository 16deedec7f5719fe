//! Bucklin and Simplified Bucklin.
//!
//! The despised candidate `d` is not the unique Bucklin winner exactly when,
//! for some rival `c` and round `k`:
//!
//! * fewer than a majority of voters rank `d` in their top `k - 1`,
//! * at least a majority rank `c` in their top `k`, and
//! * `c` appears in at least as many top-`k` sets as `d`.
//!
//! Simplified Bucklin drops the last condition. For fixed `(c, k)` each vote
//! only contributes three indicator bits after its shift, so a table over
//! the running counts finds the cheapest way to satisfy the conditions.

use super::{already_dethroned, cheapest, over_rivals, BriberyInstance, Solution, Witness};
use crate::election::Candidate;
use crate::error::Result;
use crate::pricing::INF;
use crate::rules::{majority, RuleSpec};

pub fn solve_bucklin(inst: &BriberyInstance) -> Result<Solution> {
    solve(inst, true, false)
}

pub fn solve_simplified_bucklin(inst: &BriberyInstance) -> Result<Solution> {
    solve(inst, false, false)
}

pub(super) fn solve(inst: &BriberyInstance, compare_counts: bool, parallel: bool) -> Result<Solution> {
    let rule = if compare_counts {
        RuleSpec::Bucklin
    } else {
        RuleSpec::SimplifiedBucklin
    };
    if let Some(zero) = already_dethroned(inst, &rule)? {
        return Ok(zero);
    }
    let best = over_rivals(inst, parallel, |c| {
        cheapest((1..=inst.num_candidates()).map(|k| round_optimum(inst, c, k, compare_counts)))
    });
    Ok(Solution::from_optimum(best, inst.budget))
}

const C_TOP_K: u8 = 1;
const D_TOP_K: u8 = 2;
const D_TOP_K1: u8 = 4;

/// Indicator bits of vote `v` after `d` moves back by `shift`.
fn pattern(inst: &BriberyInstance, c: Candidate, k: usize, v: usize, shift: usize) -> u8 {
    let e = &inst.election;
    let pd = e.pos(v, inst.despised);
    let pc = e.pos(v, c);
    let new_d = pd + shift;
    let new_c = if pd < pc && pc <= new_d { pc - 1 } else { pc };
    let mut bits = 0;
    if new_c <= k {
        bits |= C_TOP_K;
    }
    if new_d <= k {
        bits |= D_TOP_K;
    }
    if new_d < k {
        bits |= D_TOP_K1;
    }
    bits
}

/// Cheapest shift per reachable indicator pattern of every vote: `(price, shift)`.
fn pattern_prices(inst: &BriberyInstance, c: Candidate, k: usize) -> Vec<[(u64, usize); 8]> {
    (0..inst.num_voters())
        .map(|v| {
            let mut best = [(INF, 0usize); 8];
            for s in 0..=inst.max_shift(v) {
                let p = inst.raw_price(v, s);
                if p == INF {
                    break;
                }
                let b = pattern(inst, c, k, v, s) as usize;
                if p < best[b].0 {
                    best[b] = (p, s);
                }
            }
            best
        })
        .collect()
}

/// Counts `(p, q, q')`: votes with `c` in the top `k`, `d` in the top `k`,
/// and `d` in the top `k - 1`. `q'` never reaches a majority on a live path.
struct Layout {
    n: usize,
    maj: usize,
    compare_counts: bool,
}

impl Layout {
    fn size(&self) -> usize {
        let q = if self.compare_counts { self.n + 1 } else { 1 };
        (self.n + 1) * q * self.maj
    }

    fn index(&self, p: usize, q: usize, q1: usize) -> usize {
        let q = if self.compare_counts { q } else { 0 };
        let qs = if self.compare_counts { self.n + 1 } else { 1 };
        (p * qs + q) * self.maj + q1
    }

    fn decode(&self, i: usize) -> (usize, usize, usize) {
        let qs = if self.compare_counts { self.n + 1 } else { 1 };
        let q1 = i % self.maj;
        let q = (i / self.maj) % qs;
        let p = i / self.maj / qs;
        (p, q, q1)
    }

    fn accepts(&self, p: usize, q: usize, q1: usize) -> bool {
        q1 < self.maj && p >= self.maj && (!self.compare_counts || p >= q)
    }
}

fn round_optimum(inst: &BriberyInstance, c: Candidate, k: usize, compare_counts: bool) -> Option<Witness> {
    let n = inst.num_voters();
    let layout = Layout {
        n,
        maj: majority(n),
        compare_counts,
    };
    let size = layout.size();
    let options = pattern_prices(inst, c, k);

    let mut cost = vec![INF; size];
    cost[layout.index(0, 0, 0)] = 0;
    // pattern used by voter v to reach each state
    let mut via = vec![0u8; n * size];
    for (v, opts) in options.iter().enumerate() {
        let mut next = vec![INF; size];
        for (i, &here) in cost.iter().enumerate() {
            if here == INF {
                continue;
            }
            let (p, q, q1) = layout.decode(i);
            for (b, &(price, _)) in opts.iter().enumerate() {
                if price == INF {
                    continue;
                }
                let b = b as u8;
                let q1 = q1 + usize::from(b & D_TOP_K1 != 0);
                if q1 >= layout.maj {
                    continue;
                }
                let j = layout.index(
                    p + usize::from(b & C_TOP_K != 0),
                    q + usize::from(b & D_TOP_K != 0),
                    q1,
                );
                let total = here.saturating_add(price);
                if total < next[j] {
                    next[j] = total;
                    via[v * size + j] = b;
                }
            }
        }
        cost = next;
    }

    let (mut state, best) = (0..size)
        .filter(|&i| {
            let (p, q, q1) = layout.decode(i);
            layout.accepts(p, q, q1)
        })
        .map(|i| (i, cost[i]))
        .filter(|&(_, x)| x != INF)
        .min_by_key(|&(i, x)| (x, i))?;

    let mut shifts = vec![0usize; n];
    for v in (0..n).rev() {
        let b = via[v * size + state];
        shifts[v] = options[v][b as usize].1;
        let (p, q, q1) = layout.decode(state);
        state = layout.index(
            p - usize::from(b & C_TOP_K != 0),
            q - usize::from(compare_counts && b & D_TOP_K != 0),
            q1 - usize::from(b & D_TOP_K1 != 0),
        );
    }
    Some(Witness { cost: best, shifts })
}
