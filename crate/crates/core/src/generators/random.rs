//! Seeded random instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::election::Election;
use crate::error::{input, Result};
use crate::pricing::{Cost, PriceFunction};
use crate::rules::{self, RuleSpec};
use crate::solvers::BriberyInstance;

/// How voters' price functions are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PriceModel {
    Unit,
    /// One flat price in `1..=max` per voter.
    AllOrNothing(u64),
    /// Nondecreasing tables with values in `0..=max`.
    Listed(u64),
}

/// Uniform random profile on `m` candidates and `n` voters. The despised
/// candidate is the unique winner under `rule` if there is one, else
/// candidate 0. Candidates are named `c0, c1, ...`.
pub fn random(
    m: usize,
    n: usize,
    seed: u64,
    model: PriceModel,
    rule: &RuleSpec,
    budget: u64,
) -> Result<BriberyInstance> {
    if m < 2 || n < 1 {
        return input(format!("need at least two candidates and one voter, got m={m} n={n}"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let names: Vec<String> = (0..m).map(|c| format!("c{c}")).collect();
    let votes = (0..n)
        .map(|_| {
            let mut v: Vec<usize> = (0..m).collect();
            v.shuffle(&mut rng);
            v
        })
        .collect();
    let election = Election::new(names, votes)?;

    let winners = rules::winners(&election, rule)?;
    let despised = if winners.len() == 1 { winners[0] } else { 0 };

    let prices = (0..n)
        .map(|v| match model {
            PriceModel::Unit => Ok(PriceFunction::Unit),
            PriceModel::AllOrNothing(max) => {
                Ok(PriceFunction::AllOrNothing(Cost::Finite(rng.gen_range(1..=max.max(1)))))
            }
            PriceModel::Listed(max) => {
                let len = election.max_shift(v, despised);
                let mut table: Vec<u64> = (0..len).map(|_| rng.gen_range(0..=max)).collect();
                table.push(0);
                table.sort_unstable();
                PriceFunction::listed(table)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    BriberyInstance::new(election, despised, budget, prices)
}
