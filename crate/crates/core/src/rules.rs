//! Scores and winner sets for the supported voting rules.
//!
//! Every rule is evaluated in the unique-winner model: a candidate "wins"
//! only when the winner set is exactly that candidate.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::election::{Candidate, Election};
use crate::error::{input, Error, Result};

/// Exact candidate score. Integral for every rule except Copeland with a
/// fractional tie value.
pub type Score = Ratio<u64>;

/// Voting rule selector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleSpec {
    /// Positional scoring with an explicit nonincreasing vector of length `m`.
    Scoring(Vec<u64>),
    /// `k` ones followed by zeros.
    KApproval(usize),
    /// `(m-1, m-2, ..., 0)`.
    Borda,
    Bucklin,
    SimplifiedBucklin,
    /// Copeland with tie value `alpha` in `[0, 1]`.
    Copeland(Ratio<u64>),
    Maximin,
}

impl RuleSpec {
    pub fn plurality() -> Self {
        RuleSpec::KApproval(1)
    }

    pub fn copeland_half() -> Self {
        RuleSpec::Copeland(Ratio::new(1, 2))
    }

    /// Checks the rule's parameters against an election with `m` candidates.
    pub fn validate(&self, m: usize) -> Result<()> {
        match self {
            RuleSpec::Scoring(vector) => validate_vector(vector, m),
            RuleSpec::KApproval(k) if *k == 0 || *k > m => {
                input(format!("approval threshold {k} outside 1..={m}"))
            }
            RuleSpec::Copeland(alpha) if *alpha > Ratio::from_integer(1) => {
                input(format!("Copeland tie value {alpha} outside [0, 1]"))
            }
            _ => Ok(()),
        }
    }

    /// The positional vector for scoring-type rules, `None` otherwise.
    pub fn scoring_vector(&self, m: usize) -> Option<Vec<u64>> {
        match self {
            RuleSpec::Scoring(v) => Some(v.clone()),
            RuleSpec::KApproval(k) => Some((0..m).map(|i| u64::from(i < *k)).collect()),
            RuleSpec::Borda => Some(borda_vector(m)),
            _ => None,
        }
    }
}

impl fmt::Display for RuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleSpec::Scoring(v) => {
                f.write_str("scoring:")?;
                for (i, x) in v.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
            RuleSpec::KApproval(1) => f.write_str("plurality"),
            RuleSpec::KApproval(k) => write!(f, "approval:{k}"),
            RuleSpec::Borda => f.write_str("borda"),
            RuleSpec::Bucklin => f.write_str("bucklin"),
            RuleSpec::SimplifiedBucklin => f.write_str("simplified-bucklin"),
            RuleSpec::Copeland(a) => write!(f, "copeland:{}/{}", a.numer(), a.denom()),
            RuleSpec::Maximin => f.write_str("maximin"),
        }
    }
}

impl FromStr for RuleSpec {
    type Err = Error;

    /// Accepts `plurality`, `approval:K`, `borda`, `scoring:a1,a2,...`,
    /// `bucklin`, `simplified-bucklin`, `copeland[:P/Q]` (default 1/2) and
    /// `maximin`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, arg) = match s.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (s, None),
        };
        let bad = || Error::Input(format!("unrecognized rule {s:?}"));
        match (head.to_ascii_lowercase().as_str(), arg) {
            ("plurality", None) => Ok(RuleSpec::plurality()),
            ("approval" | "k-approval", Some(k)) => k
                .parse()
                .map(RuleSpec::KApproval)
                .map_err(|_| Error::Input(format!("bad approval threshold {k:?}"))),
            ("borda", None) => Ok(RuleSpec::Borda),
            ("scoring", Some(v)) => v
                .split(',')
                .map(|x| {
                    x.trim()
                        .parse::<u64>()
                        .map_err(|_| Error::Input(format!("bad scoring entry {x:?}")))
                })
                .collect::<Result<Vec<_>>>()
                .map(RuleSpec::Scoring),
            ("bucklin", None) => Ok(RuleSpec::Bucklin),
            ("simplified-bucklin", None) => Ok(RuleSpec::SimplifiedBucklin),
            ("copeland", None) => Ok(RuleSpec::copeland_half()),
            ("copeland", Some(a)) => parse_alpha(a).map(RuleSpec::Copeland),
            ("maximin", None) => Ok(RuleSpec::Maximin),
            _ => Err(bad()),
        }
    }
}

/// Parses a tie value written as `P/Q` or as an integer.
pub fn parse_alpha(s: &str) -> Result<Ratio<u64>> {
    let bad = || Error::Input(format!("bad Copeland tie value {s:?}"));
    let alpha = match s.split_once('/') {
        Some((p, q)) => {
            let p: u64 = p.trim().parse().map_err(|_| bad())?;
            let q: u64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ratio::new(p, q)
        }
        None => Ratio::from_integer(s.trim().parse().map_err(|_| bad())?),
    };
    if alpha > Ratio::from_integer(1) {
        return Err(bad());
    }
    Ok(alpha)
}

pub fn borda_vector(m: usize) -> Vec<u64> {
    (0..m as u64).rev().collect()
}

fn validate_vector(vector: &[u64], m: usize) -> Result<()> {
    if vector.len() != m {
        return input(format!(
            "scoring vector has {} entries, election has {m} candidates",
            vector.len()
        ));
    }
    if vector.windows(2).any(|w| w[0] < w[1]) {
        return input("scoring vector must be nonincreasing");
    }
    Ok(())
}

/// Strict majority threshold `floor(n/2) + 1`.
#[inline]
pub fn majority(n: usize) -> usize {
    n / 2 + 1
}

/// `sum_v vector[pos_v(c)]`.
pub fn scoring_score(e: &Election, vector: &[u64], c: Candidate) -> Result<u64> {
    validate_vector(vector, e.num_candidates())?;
    check_candidate(e, c)?;
    Ok((0..e.num_voters()).map(|v| vector[e.pos(v, c) - 1]).sum())
}

/// Number of voters ranking `c` among their top `k`.
pub fn k_approval_score(e: &Election, k: usize, c: Candidate) -> Result<u64> {
    RuleSpec::KApproval(k).validate(e.num_candidates())?;
    check_candidate(e, c)?;
    Ok((0..e.num_voters()).filter(|&v| e.pos(v, c) <= k).count() as u64)
}

/// The Bucklin winning round: the smallest `l` at which some candidate is
/// ranked in the top `l` by a strict majority.
pub fn bucklin_round(e: &Election) -> usize {
    let maj = majority(e.num_voters());
    let mut approvals = vec![0usize; e.num_candidates()];
    for l in 1..=e.num_candidates() {
        for vote in e.votes() {
            approvals[vote[l - 1]] += 1;
        }
        if approvals.iter().any(|&a| a >= maj) {
            return l;
        }
    }
    unreachable!("every candidate has n approvals at round m")
}

fn approval_counts(e: &Election, k: usize) -> Vec<usize> {
    let mut counts = vec![0usize; e.num_candidates()];
    for vote in e.votes() {
        for &c in &vote[..k] {
            counts[c] += 1;
        }
    }
    counts
}

/// Copeland score of `c`: one point per head-to-head win, `alpha` per tie.
pub fn copeland_score(e: &Election, alpha: Ratio<u64>, c: Candidate) -> Result<Score> {
    check_candidate(e, c)?;
    let pm = e.pairwise_matrix();
    let (mut wins, mut ties) = (0u64, 0u64);
    for other in (0..e.num_candidates()).filter(|&o| o != c) {
        match pm.margin(c, other) {
            x if x > 0 => wins += 1,
            0 => ties += 1,
            _ => {}
        }
    }
    Ok(Ratio::from_integer(wins) + alpha * ties)
}

/// Maximin score of `c`: its weakest head-to-head support.
pub fn maximin_score(e: &Election, c: Candidate) -> Result<u64> {
    check_candidate(e, c)?;
    if e.num_candidates() < 2 {
        return Err(Error::Domain("Maximin needs at least two candidates".into()));
    }
    let pm = e.pairwise_matrix();
    Ok((0..e.num_candidates())
        .filter(|&o| o != c)
        .map(|o| u64::from(pm.get(c, o)))
        .min()
        .unwrap_or(0))
}

/// Scores of all candidates under `rule`. For Bucklin these are the
/// approval counts at the winning round.
pub fn scores(e: &Election, rule: &RuleSpec) -> Result<Vec<Score>> {
    let m = e.num_candidates();
    rule.validate(m)?;
    let int = |v: Vec<u64>| v.into_iter().map(Ratio::from_integer).collect();
    Ok(match rule {
        RuleSpec::Scoring(_) | RuleSpec::KApproval(_) | RuleSpec::Borda => {
            let vector = rule.scoring_vector(m).expect("scoring-type rule");
            let mut s = vec![0u64; m];
            for vote in e.votes() {
                for (i, &c) in vote.iter().enumerate() {
                    s[c] += vector[i];
                }
            }
            int(s)
        }
        RuleSpec::Bucklin | RuleSpec::SimplifiedBucklin => int(approval_counts(e, bucklin_round(e))
            .into_iter()
            .map(|x| x as u64)
            .collect()),
        RuleSpec::Copeland(alpha) => {
            let pm = e.pairwise_matrix();
            (0..m)
                .map(|c| {
                    let (mut wins, mut ties) = (0u64, 0u64);
                    for o in (0..m).filter(|&o| o != c) {
                        match pm.margin(c, o) {
                            x if x > 0 => wins += 1,
                            0 => ties += 1,
                            _ => {}
                        }
                    }
                    Ratio::from_integer(wins) + alpha * ties
                })
                .collect()
        }
        RuleSpec::Maximin => {
            if m < 2 {
                return Err(Error::Domain("Maximin needs at least two candidates".into()));
            }
            let pm = e.pairwise_matrix();
            int((0..m)
                .map(|c| {
                    (0..m)
                        .filter(|&o| o != c)
                        .map(|o| u64::from(pm.get(c, o)))
                        .min()
                        .unwrap_or(0)
                })
                .collect())
        }
    })
}

/// The (sorted, nonempty) set of winners of `e` under `rule`.
pub fn winners(e: &Election, rule: &RuleSpec) -> Result<Vec<Candidate>> {
    let m = e.num_candidates();
    rule.validate(m)?;
    if m == 1 {
        return Ok(vec![0]);
    }
    if let RuleSpec::SimplifiedBucklin = rule {
        let maj = majority(e.num_voters());
        let counts = approval_counts(e, bucklin_round(e));
        return Ok((0..m).filter(|&c| counts[c] >= maj).collect());
    }
    let s = scores(e, rule)?;
    let best = *s.iter().max().expect("m >= 1");
    Ok((0..m).filter(|&c| s[c] == best).collect())
}

/// Whether `c` is the one and only winner of `e` under `rule`.
pub fn is_unique_winner(e: &Election, rule: &RuleSpec, c: Candidate) -> Result<bool> {
    check_candidate(e, c)?;
    Ok(winners(e, rule)? == [c])
}

fn check_candidate(e: &Election, c: Candidate) -> Result<()> {
    if c >= e.num_candidates() {
        return input(format!("unknown candidate index {c}"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::election::tests::example_one;
    use crate::election::ShiftVector;

    fn profile(names: &[&str], votes: &[&str]) -> Election {
        let votes: Vec<Vec<&str>> = votes.iter().map(|v| v.split('>').collect()).collect();
        Election::from_names(names, &votes).unwrap()
    }

    #[test]
    fn borda_scores_of_the_example() {
        let e = example_one();
        let (a, d) = (0, 3);
        let v = borda_vector(4);
        assert_eq!(scoring_score(&e, &v, d).unwrap(), 9);
        assert_eq!(scoring_score(&e, &v, a).unwrap(), 6);
        assert_eq!(scoring_score(&e, &[0, 0, 0, 0], a).unwrap(), 0);
        assert!(scoring_score(&e, &[1, 0, 0], a).is_err());
        assert!(scoring_score(&e, &[0, 1, 0, 0], a).is_err());
    }

    #[test]
    fn approval_scores() {
        let e = example_one();
        assert_eq!(k_approval_score(&e, 1, 3).unwrap(), 3);
        assert_eq!(k_approval_score(&e, 2, 0).unwrap(), 2);
        for c in 0..4 {
            assert_eq!(k_approval_score(&e, 4, c).unwrap(), 4);
        }
        assert!(k_approval_score(&e, 0, 0).is_err());
        assert!(k_approval_score(&e, 5, 0).is_err());
    }

    #[test]
    fn bucklin_rounds() {
        assert_eq!(bucklin_round(&example_one()), 1);
        assert_eq!(bucklin_round(&profile(&["a", "b"], &["b>a"])), 1);
        let e = profile(&["a", "b", "c"], &["a>b>c", "b>a>c", "c>b>a"]);
        assert_eq!(bucklin_round(&e), 2);
        assert_eq!(winners(&e, &RuleSpec::Bucklin).unwrap(), vec![1]);
        // a and b both reach the majority of 2 at round 2
        assert_eq!(winners(&e, &RuleSpec::SimplifiedBucklin).unwrap(), vec![0, 1]);
    }

    #[test]
    fn copeland_scores() {
        let e = example_one();
        let half = Ratio::new(1, 2);
        assert_eq!(copeland_score(&e, half, 3).unwrap(), Ratio::from_integer(3));
        let tie = profile(&["a", "b"], &["a>b", "b>a"]);
        assert_eq!(copeland_score(&tie, half, 0).unwrap(), half);
        assert_eq!(copeland_score(&tie, half, 1).unwrap(), half);
    }

    #[test]
    fn maximin_scores() {
        let e = example_one();
        assert_eq!(maximin_score(&e, 3).unwrap(), 3);
        assert_eq!(maximin_score(&e, 0).unwrap(), 1);
        let unanimous = profile(&["a", "b", "c"], &["a>b>c", "a>c>b", "a>b>c"]);
        assert_eq!(maximin_score(&unanimous, 0).unwrap(), 3);
        let lonely = profile(&["a"], &["a"]);
        assert!(matches!(maximin_score(&lonely, 0), Err(Error::Domain(_))));
    }

    #[test]
    fn winners_and_uniqueness() {
        let e = example_one();
        assert_eq!(winners(&e, &RuleSpec::Borda).unwrap(), vec![3]);
        assert!(is_unique_winner(&e, &RuleSpec::Borda, 3).unwrap());
        let shifted = e.apply_shifts(3, &ShiftVector::new(vec![0, 0, 0, 2])).unwrap();
        assert!(!is_unique_winner(&shifted, &RuleSpec::Borda, 3).unwrap());

        let tie = profile(&["a", "b"], &["a>b", "b>a"]);
        for c in 0..2 {
            assert!(!is_unique_winner(&tie, &RuleSpec::Borda, c).unwrap());
        }
    }

    #[test]
    fn single_voter_elects_its_top_choice_under_every_rule() {
        let e = profile(&["a", "b", "c"], &["b>c>a"]);
        // wider approval sets also elect the runner-up
        for rule in all_rules(3).into_iter().filter(|r| !matches!(r, RuleSpec::KApproval(k) if *k > 1)) {
            assert_eq!(winners(&e, &rule).unwrap(), vec![1], "{rule}");
        }
    }

    #[test]
    fn reversed_pair_ties_everyone_under_copeland() {
        let e = profile(&["a", "b", "c", "x"], &["a>b>c>x", "x>c>b>a"]);
        let rule = RuleSpec::Copeland(Ratio::from_integer(1));
        assert_eq!(winners(&e, &rule).unwrap(), vec![0, 1, 2, 3]);
        assert!(scores(&e, &rule).unwrap().iter().all(|s| *s == Ratio::from_integer(3)));
    }

    #[test]
    fn rule_strings_round_trip() {
        for rule in all_rules(5) {
            assert_eq!(rule.to_string().parse::<RuleSpec>().unwrap(), rule);
        }
        assert_eq!("copeland".parse::<RuleSpec>().unwrap(), RuleSpec::copeland_half());
        assert_eq!("k-approval:2".parse::<RuleSpec>().unwrap(), RuleSpec::KApproval(2));
        assert!("copeland:3/2".parse::<RuleSpec>().is_err());
        assert!("copeland:1/0".parse::<RuleSpec>().is_err());
        assert!("dodgson".parse::<RuleSpec>().is_err());
    }

    pub(crate) fn all_rules(m: usize) -> Vec<RuleSpec> {
        let mut v = vec![3, 1, 1, 0, 0];
        v.resize(m, 0);
        vec![
            RuleSpec::plurality(),
            RuleSpec::KApproval(2.min(m)),
            RuleSpec::Borda,
            RuleSpec::Scoring(v),
            RuleSpec::Bucklin,
            RuleSpec::SimplifiedBucklin,
            RuleSpec::Copeland(Ratio::from_integer(0)),
            RuleSpec::copeland_half(),
            RuleSpec::Copeland(Ratio::from_integer(1)),
            RuleSpec::Maximin,
        ]
    }
}
