//! Fixed workloads shared by the benchmarks.

use dsb_core::generators::{self, PriceModel};
use dsb_core::rules;
use dsb_core::{BriberyInstance, RuleSpec};

/// A seeded random instance whose despised candidate wins under `rule`;
/// seeds from `seed` upward are tried until one has a unique winner.
pub fn random_instance(m: usize, n: usize, seed: u64, model: PriceModel, rule: &RuleSpec) -> BriberyInstance {
    (seed..)
        .map(|s| generators::random(m, n, s, model, rule, u64::MAX - 1).expect("valid sizes"))
        .find(|inst| rules::is_unique_winner(&inst.election, rule, inst.despised).unwrap_or(false))
        .expect("some seed has a unique winner")
}

/// The scoring instance built from a Partition sequence.
pub fn partition_instance(seq: &[u64]) -> (BriberyInstance, RuleSpec) {
    let g = generators::partition(seq).expect("valid sequence");
    (g.instance, g.rule)
}
