//! Backward-shift price functions.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use crate::election::{Candidate, Election, ShiftVector};
use crate::error::{input, Result};

/// A price or budget: a nonnegative integer or `+inf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cost {
    Finite(u64),
    Infinite,
}

impl Cost {
    pub const ZERO: Cost = Cost::Finite(0);

    pub fn is_finite(self) -> bool {
        matches!(self, Cost::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Cost::Finite(x) => Some(x),
            Cost::Infinite => None,
        }
    }

    /// Whether this cost fits in a (finite) budget.
    pub fn within(self, budget: u64) -> bool {
        matches!(self, Cost::Finite(x) if x <= budget)
    }

    /// Internal dense encoding: `u64::MAX` stands for infinity.
    #[inline]
    pub(crate) fn raw(self) -> u64 {
        match self {
            Cost::Finite(x) => x.min(INF - 1),
            Cost::Infinite => INF,
        }
    }
}

/// Sentinel used by the dynamic programs for "unreachable".
pub(crate) const INF: u64 = u64::MAX;

impl Ord for Cost {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Cost::Finite(a), Cost::Finite(b)) => a.cmp(b),
            (Cost::Finite(_), Cost::Infinite) => Ordering::Less,
            (Cost::Infinite, Cost::Finite(_)) => Ordering::Greater,
            (Cost::Infinite, Cost::Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Cost {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for Cost {
    type Output = Cost;

    fn add(self, rhs: Cost) -> Cost {
        match (self, rhs) {
            (Cost::Finite(a), Cost::Finite(b)) => a.checked_add(b).map_or(Cost::Infinite, Cost::Finite),
            _ => Cost::Infinite,
        }
    }
}

impl std::iter::Sum for Cost {
    fn sum<I: Iterator<Item = Cost>>(iter: I) -> Cost {
        iter.fold(Cost::ZERO, |a, b| a + b)
    }
}

impl From<u64> for Cost {
    fn from(x: u64) -> Self {
        Cost::Finite(x)
    }
}

impl fmt::Display for Cost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cost::Finite(x) => write!(f, "{x}"),
            Cost::Infinite => f.write_str("inf"),
        }
    }
}

/// A voter's price for moving the despised candidate back.
///
/// Functions only carry their finite part; the infinite tail past the last
/// position is implied by the voter's profile at evaluation time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PriceFunction {
    /// `costs[i]` is the price of shifting back by `i`. Shifts beyond the
    /// table are impossible.
    Listed(ListedPrices),
    /// Shifting back by `i` costs `i`.
    Unit,
    /// Any nonzero shift costs the same amount (possibly infinite).
    AllOrNothing(Cost),
}

/// A validated price table: starts at 0 and never decreases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListedPrices(Vec<u64>);

impl ListedPrices {
    pub fn new(costs: Vec<u64>) -> Result<Self> {
        match costs.first() {
            None => return input("price list is empty"),
            Some(&c) if c != 0 => return input(format!("price of a zero shift must be 0, got {c}")),
            _ => {}
        }
        if let Some(i) = costs.windows(2).position(|w| w[0] > w[1]) {
            return input(format!(
                "price list decreases between shifts {i} and {}",
                i + 1
            ));
        }
        Ok(Self(costs))
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }
}

impl PriceFunction {
    /// Builds a validated listed price function.
    pub fn listed(costs: Vec<u64>) -> Result<Self> {
        ListedPrices::new(costs).map(PriceFunction::Listed)
    }

    /// Price of shifting back by `shift` when at most `max_shift` positions
    /// are available (`m - pos_v(d)`).
    pub fn price(&self, max_shift: usize, shift: usize) -> Cost {
        if shift == 0 {
            return Cost::ZERO;
        }
        if shift > max_shift {
            return Cost::Infinite;
        }
        match self {
            PriceFunction::Unit => Cost::Finite(shift as u64),
            PriceFunction::AllOrNothing(c) => *c,
            PriceFunction::Listed(t) => t.0.get(shift).map_or(Cost::Infinite, |&c| Cost::Finite(c)),
        }
    }
}

/// Total price of a shift vector, saturating at infinity.
pub fn total_cost(
    prices: &[PriceFunction],
    election: &Election,
    despised: Candidate,
    shifts: &ShiftVector,
) -> Cost {
    if prices.len() != shifts.len() || shifts.len() != election.num_voters() {
        return Cost::Infinite;
    }
    shifts
        .iter()
        .enumerate()
        .map(|(v, &s)| prices[v].price(election.max_shift(v, despised), s))
        .sum()
}
