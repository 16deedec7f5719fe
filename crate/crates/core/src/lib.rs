//! Destructive shift bribery.
//!
//! Given an election, a despised candidate `d`, per-voter prices for moving
//! `d` back in a ranking, and a budget, find the cheapest set of backward
//! shifts after which `d` is no longer the unique winner.
//!
//! ```
//! use dsb_core::{io, solve, BriberyInstance, RuleSpec};
//!
//! let e = io::parse_election("4 4\na b c d\nb a c d\nd b a c\nd c a b\nd a b c\n").unwrap();
//! let d = e.require_candidate("d").unwrap();
//! let inst = BriberyInstance::with_unit_prices(e, d, 2).unwrap();
//! let sol = solve(&inst, &RuleSpec::Borda).unwrap();
//! assert_eq!(sol.cost(), Some(2));
//! assert_eq!(sol.shifts().unwrap().to_string(), "0,0,0,2");
//! ```

pub mod election;
pub mod error;
pub mod generators;
pub mod io;
pub mod oracle;
pub mod pricing;
pub mod rules;
pub mod solvers;

pub use election::{Candidate, Election, PairwiseMatrix, ShiftVector};
pub use error::{Error, Result};
pub use pricing::{Cost, ListedPrices, PriceFunction};
pub use rules::{RuleSpec, Score};
pub use solvers::{margin, solve, solve_with, BriberyInstance, Solution, SolverConfig};
