//! Scoring-protocol instances from Partition.

use super::Generated;
use crate::election::Election;
use crate::error::{input, Result};
use crate::pricing::PriceFunction;
use crate::rules::RuleSpec;
use crate::solvers::BriberyInstance;

/// Builds the scoring instance for `seq` (sorted nonincreasing first).
///
/// Candidates are `d`, `p1..pn` and dummies `c{i}_{j}`. Vote `i` ranks
/// `p{i}` first, `d` at position `i + 1` and its own dummies around it;
/// `d` scores the whole sum, every `p{i}` half of it, and the budget is
/// half the sum.
pub fn partition(seq: &[u64]) -> Result<Generated> {
    let mut s = seq.to_vec();
    s.sort_unstable_by(|a, b| b.cmp(a));
    let n = s.len();
    if n == 0 || s.contains(&0) {
        return input("sequence must be nonempty and positive");
    }
    let sum: u64 = s.iter().sum();
    if sum % 2 == 1 {
        return input(format!("sum {sum} is odd, so no equal split exists"));
    }
    let half = sum / 2;
    if s[0] >= half {
        return input(format!(
            "largest element {} is at least half the sum {sum}; the split question is trivial",
            s[0]
        ));
    }

    let m = n * n + n + 1;
    let p = |i: usize| 1 + i;
    let dummy = |i: usize, j: usize| 1 + n + i * n + j;
    let mut names = vec!["d".to_string()];
    names.extend((1..=n).map(|i| format!("p{i}")));
    for i in 1..=n {
        names.extend((1..=n).map(|j| format!("c{i}_{j}")));
    }

    let mut votes = Vec::with_capacity(n);
    for i in 0..n {
        let mut v = vec![p(i)];
        v.extend((0..i).map(|j| dummy(i, j)));
        v.push(0);
        v.extend((i..n).map(|j| dummy(i, j)));
        let placed = v.clone();
        v.extend((0..m).filter(|c| !placed.contains(c)));
        votes.push(v);
    }
    let election = Election::new(names, votes)?;

    let prices = (0..n)
        .map(|i| {
            let max_shift = m - (i + 2);
            let cheap = n - i;
            let mut table = vec![0u64];
            table.extend((1..=max_shift).map(|t| if t <= cheap { s[i] } else { half + 1 }));
            PriceFunction::listed(table)
        })
        .collect::<Result<Vec<_>>>()?;

    let mut vector = vec![0u64; m];
    vector[0] = half;
    vector[1..=n].copy_from_slice(&s);
    Ok(Generated {
        instance: BriberyInstance::new(election, 0, half, prices)?,
        rule: RuleSpec::Scoring(vector),
    })
}
