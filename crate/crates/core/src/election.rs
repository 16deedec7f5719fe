//! Preference profiles, pairwise counts, and the backward-shift primitive.
//!
//! Candidates are dense indices `0..m`; names only matter at the I/O
//! boundary. Positions are 1-based: the top candidate of a vote is at
//! position 1 and the last one at position `m`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{input, Error, Result};

/// Dense candidate index.
pub type Candidate = usize;

/// A complete election: `m` named candidates and `n` strict rankings.
///
/// Voters form a list, so identical rankings are distinct voters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Election {
    names: Vec<String>,
    votes: Vec<Vec<Candidate>>,
    // positions[v][c] = 1-based rank of c in vote v
    positions: Vec<Vec<usize>>,
}

impl Election {
    /// Builds an election from candidate names and rankings given as indices
    /// (best first).
    pub fn new(names: Vec<String>, votes: Vec<Vec<Candidate>>) -> Result<Self> {
        let m = names.len();
        if m == 0 {
            return input("an election needs at least one candidate");
        }
        if votes.is_empty() {
            return input("an election needs at least one voter");
        }
        let mut seen = HashMap::with_capacity(m);
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || name.chars().any(char::is_whitespace) {
                return input(format!("candidate name {name:?} is empty or contains whitespace"));
            }
            if seen.insert(name.as_str(), i).is_some() {
                return input(format!("duplicate candidate name {name:?}"));
            }
        }
        let mut positions = Vec::with_capacity(votes.len());
        for (v, vote) in votes.iter().enumerate() {
            if vote.len() != m {
                return input(format!(
                    "voter {} ranks {} candidates, expected {m}",
                    v + 1,
                    vote.len()
                ));
            }
            let mut pos = vec![0usize; m];
            for (rank, &c) in vote.iter().enumerate() {
                if c >= m {
                    return input(format!("voter {} ranks unknown candidate index {c}", v + 1));
                }
                if pos[c] != 0 {
                    return input(format!(
                        "voter {} ranks candidate {} twice",
                        v + 1,
                        names[c]
                    ));
                }
                pos[c] = rank + 1;
            }
            positions.push(pos);
        }
        Ok(Self {
            names,
            votes,
            positions,
        })
    }

    /// Builds an election from rankings given by candidate name.
    pub fn from_names<S: AsRef<str>>(names: &[S], votes: &[Vec<S>]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let index: HashMap<&str, Candidate> = names
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let mut ranked = Vec::with_capacity(votes.len());
        for vote in votes {
            let mut order = Vec::with_capacity(vote.len());
            for s in vote {
                match index.get(s.as_ref()) {
                    Some(&c) => order.push(c),
                    None => return input(format!("unknown candidate {:?}", s.as_ref())),
                }
            }
            ranked.push(order);
        }
        Self::new(names, ranked)
    }

    pub fn num_candidates(&self) -> usize {
        self.names.len()
    }

    pub fn num_voters(&self) -> usize {
        self.votes.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, c: Candidate) -> &str {
        &self.names[c]
    }

    /// Looks a candidate up by name.
    pub fn candidate(&self, name: &str) -> Option<Candidate> {
        self.names.iter().position(|n| n == name)
    }

    /// Like [`Election::candidate`], but reports an unknown name as an error.
    pub fn require_candidate(&self, name: &str) -> Result<Candidate> {
        self.candidate(name)
            .ok_or_else(|| Error::Input(format!("unknown candidate {name:?}")))
    }

    /// The ranking of voter `v`, best first.
    pub fn vote(&self, v: usize) -> &[Candidate] {
        &self.votes[v]
    }

    pub fn votes(&self) -> &[Vec<Candidate>] {
        &self.votes
    }

    /// 1-based position of `c` in vote `v`, with bounds checking.
    pub fn position(&self, v: usize, c: Candidate) -> Result<usize> {
        if v >= self.num_voters() {
            return input(format!("unknown voter index {v}"));
        }
        if c >= self.num_candidates() {
            return input(format!("unknown candidate index {c}"));
        }
        Ok(self.positions[v][c])
    }

    /// 1-based position of `c` in vote `v`. Panics on out-of-range indices.
    #[inline]
    pub fn pos(&self, v: usize, c: Candidate) -> usize {
        self.positions[v][c]
    }

    /// The candidate at 1-based position `p` of vote `v`.
    #[inline]
    pub fn at(&self, v: usize, p: usize) -> Candidate {
        self.votes[v][p - 1]
    }

    /// How far `d` can move back in vote `v`, i.e. `m - pos_v(d)`.
    #[inline]
    pub fn max_shift(&self, v: usize, d: Candidate) -> usize {
        self.num_candidates() - self.positions[v][d]
    }

    /// Whether voter `v` prefers `a` to `b`.
    #[inline]
    pub fn prefers(&self, v: usize, a: Candidate, b: Candidate) -> bool {
        self.positions[v][a] < self.positions[v][b]
    }

    pub fn pairwise_matrix(&self) -> PairwiseMatrix {
        PairwiseMatrix::from_election(self)
    }

    /// Moves `d` back by `shifts[v]` positions in every vote `v`; the
    /// candidates it passes each move up by one.
    pub fn apply_shifts(&self, d: Candidate, shifts: &ShiftVector) -> Result<Election> {
        if d >= self.num_candidates() {
            return input(format!("unknown candidate index {d}"));
        }
        if shifts.len() != self.num_voters() {
            return input(format!(
                "shift vector has {} entries, election has {} voters",
                shifts.len(),
                self.num_voters()
            ));
        }
        let mut out = self.clone();
        for (v, &s) in shifts.iter().enumerate() {
            if s > self.max_shift(v, d) {
                return input(format!(
                    "voter {}: cannot shift {} back by {s} from position {}",
                    v + 1,
                    self.names[d],
                    self.pos(v, d)
                ));
            }
            if s > 0 {
                let from = self.pos(v, d) - 1;
                let vote = &mut out.votes[v];
                vote[from..=from + s].rotate_left(1);
                for (rank, &c) in vote[from..=from + s].iter().enumerate() {
                    out.positions[v][c] = from + rank + 1;
                }
            }
        }
        Ok(out)
    }

    /// Renames candidates through `perm` (candidate `c` becomes `perm[c]`).
    /// Names travel with their candidates.
    pub fn relabel(&self, perm: &[Candidate]) -> Result<Election> {
        let m = self.num_candidates();
        let mut names = vec![String::new(); m];
        for (c, &to) in perm.iter().enumerate() {
            names[to] = self.names[c].clone();
        }
        let votes = self
            .votes
            .iter()
            .map(|vote| vote.iter().map(|&c| perm[c]).collect())
            .collect();
        Election::new(names, votes)
    }
}

/// Head-to-head counts: `get(a, b)` is the number of voters preferring `a` to `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairwiseMatrix {
    m: usize,
    n: usize,
    counts: Vec<u32>,
}

impl PairwiseMatrix {
    fn from_election(e: &Election) -> Self {
        let m = e.num_candidates();
        let mut counts = vec![0u32; m * m];
        for vote in e.votes() {
            for (i, &a) in vote.iter().enumerate() {
                let row = &mut counts[a * m..(a + 1) * m];
                for &b in &vote[i + 1..] {
                    row[b] += 1;
                }
            }
        }
        Self {
            m,
            n: e.num_voters(),
            counts,
        }
    }

    #[inline]
    pub fn get(&self, a: Candidate, b: Candidate) -> u32 {
        self.counts[a * self.m + b]
    }

    /// `N(a,b) - N(b,a)`.
    #[inline]
    pub fn margin(&self, a: Candidate, b: Candidate) -> i64 {
        i64::from(self.get(a, b)) - i64::from(self.get(b, a))
    }

    pub fn num_candidates(&self) -> usize {
        self.m
    }

    pub fn num_voters(&self) -> usize {
        self.n
    }
}

/// Per-voter backward shift amounts of the despised candidate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShiftVector(Vec<usize>);

impl ShiftVector {
    pub fn new(shifts: Vec<usize>) -> Self {
        Self(shifts)
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&s| s == 0)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }
}

impl std::ops::Index<usize> for ShiftVector {
    type Output = usize;
    fn index(&self, i: usize) -> &usize {
        &self.0[i]
    }
}

impl std::ops::IndexMut<usize> for ShiftVector {
    fn index_mut(&mut self, i: usize) -> &mut usize {
        &mut self.0[i]
    }
}

impl From<Vec<usize>> for ShiftVector {
    fn from(v: Vec<usize>) -> Self {
        Self(v)
    }
}

impl fmt::Display for ShiftVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for ShiftVector {
    type Err = Error;

    /// Parses a comma-separated list such as `0,0,0,2`.
    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Input(format!("bad shift amount {t:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }
}
