//! Instance generators: hardness reductions and random families.

mod clique;
mod graph;
mod mcis;
mod partition;
mod random;

pub use clique::{clique, clique_bribery};
pub use graph::Graph;
pub use mcis::{mcis, mcis_bribery, McisShape};
pub use partition::partition;
pub use random::{random, PriceModel};

use crate::rules::RuleSpec;
use crate::solvers::BriberyInstance;

/// A generated instance together with the rule it is meant for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generated {
    pub instance: BriberyInstance,
    pub rule: RuleSpec,
}
