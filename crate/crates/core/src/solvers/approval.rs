//! k-Approval: push the despised candidate to position k+1 in the cheapest
//! votes of two groups, for every rival and every pair of group sizes.

use super::{already_dethroned, BriberyInstance, Solution, Witness};
use crate::error::Result;
use crate::pricing::INF;
use crate::rules::RuleSpec;

pub fn solve_k_approval(inst: &BriberyInstance, k: usize) -> Result<Solution> {
    let rule = RuleSpec::KApproval(k);
    rule.validate(inst.num_candidates())?;
    if let Some(zero) = already_dethroned(inst, &rule)? {
        return Ok(zero);
    }
    Ok(Solution::from_optimum(optimum(inst, k), inst.budget))
}

fn optimum(inst: &BriberyInstance, k: usize) -> Option<Witness> {
    let e = &inst.election;
    let (m, n, d) = (e.num_candidates(), e.num_voters(), inst.despised);
    if k >= m {
        return None;
    }

    let mut base = vec![0i64; m];
    for vote in e.votes() {
        for &c in &vote[..k] {
            base[c] += 1;
        }
    }

    // (cost, voter) of moving d to position k+1, for votes that have d in the top k
    let pushes: Vec<(u64, usize)> = (0..n)
        .filter(|&v| e.pos(v, d) <= k)
        .filter_map(|v| {
            let cost = inst.raw_price(v, k + 1 - e.pos(v, d));
            (cost != INF).then_some((cost, v))
        })
        .collect();

    let mut best: Option<Witness> = None;
    for c in (0..m).filter(|&c| c != d) {
        // voters with c at position k+1 (and thus d above it), then the rest
        let (mut behind_c, mut others): (Vec<_>, Vec<_>) =
            pushes.iter().partition(|&&(_, v)| e.at(v, k + 1) == c);
        behind_c.sort_unstable();
        others.sort_unstable();

        let prefix = |g: &[(u64, usize)]| -> Vec<u64> {
            std::iter::once(0)
                .chain(g.iter().scan(0u64, |acc, &(cost, _)| {
                    *acc = acc.saturating_add(cost);
                    Some(*acc)
                }))
                .collect()
        };
        let (pre_c, pre_o) = (prefix(&behind_c), prefix(&others));

        for a in 0..=behind_c.len() {
            for b in 0..=others.len() {
                let cost = pre_c[a].saturating_add(pre_o[b]);
                if best.as_ref().is_some_and(|w| w.cost <= cost) {
                    continue;
                }
                let mut score = base.clone();
                let chosen = behind_c[..a].iter().chain(&others[..b]);
                for &(_, v) in chosen.clone() {
                    score[d] -= 1;
                    score[e.at(v, k + 1)] += 1;
                }
                if (0..m).any(|x| x != d && score[x] >= score[d]) {
                    let mut shifts = vec![0; n];
                    for &(_, v) in chosen {
                        shifts[v] = k + 1 - e.pos(v, d);
                    }
                    best = Some(Witness { cost, shifts });
                }
            }
        }
    }
    best
}
