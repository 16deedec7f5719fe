//! Copeland instances from Clique.

use num_rational::Ratio;

use super::{Generated, Graph};
use crate::election::{Election, ShiftVector};
use crate::error::{input, Result};
use crate::rules::RuleSpec;
use crate::solvers::BriberyInstance;

fn binom2(k: usize) -> usize {
    k * (k - 1) / 2
}

/// Candidate index blocks of the generated election, in order:
/// `d`, `p`, `L`, `L'`, vertices, edges, `S`.
struct Blocks {
    l: usize,
    s: usize,
    nv: usize,
    ne: usize,
}

impl Blocks {
    const D: usize = 0;
    const P: usize = 1;

    fn l(&self) -> std::ops::Range<usize> {
        2..2 + self.l
    }
    fn l2(&self) -> std::ops::Range<usize> {
        2 + self.l..2 + 2 * self.l
    }
    fn vertex(&self, v: usize) -> usize {
        2 + 2 * self.l + v
    }
    fn vertices(&self) -> std::ops::Range<usize> {
        self.vertex(0)..self.vertex(self.nv)
    }
    fn edge(&self, e: usize) -> usize {
        self.vertex(self.nv) + e
    }
    fn edges(&self) -> std::ops::Range<usize> {
        self.edge(0)..self.edge(self.ne)
    }
    fn s(&self) -> std::ops::Range<usize> {
        self.edge(self.ne)..self.edge(self.ne) + self.s
    }
    fn total(&self) -> usize {
        self.s().end
    }
}

/// Builds the Copeland^alpha instance asking for a `k`-clique in `graph`,
/// with unit prices and budget `3 * C(k, 2)`.
///
/// Every edge gets a pair of mutually reversed votes; the first ranks `d`
/// right above the edge's endpoints and the edge itself.
pub fn clique(graph: &Graph, k: usize, alpha: Ratio<u64>) -> Result<Generated> {
    if k < 3 {
        return input(format!("k must be at least 3, got {k}"));
    }
    if graph.edges().is_empty() {
        return input("graph has no edges");
    }
    let budget = 3 * binom2(k);
    let (nv, ne) = (graph.num_vertices(), graph.edges().len());
    let b = Blocks {
        l: nv * ne * budget,
        s: binom2(k) + k + 1,
        nv,
        ne,
    };

    let mut names = vec!["d".to_string(), "p".to_string()];
    names.extend((1..=b.l).map(|i| format!("l{i}")));
    names.extend((1..=b.l).map(|i| format!("lp{i}")));
    names.extend((0..nv).map(|v| format!("v{v}")));
    names.extend(graph.edges().iter().map(|(u, v)| format!("e{u}_{v}")));
    names.extend((1..=b.s).map(|i| format!("s{i}")));

    let mut votes: Vec<Vec<usize>> = Vec::new();
    for (e, &(u, v)) in graph.edges().iter().enumerate() {
        let mut vote = vec![Blocks::D, b.vertex(u), b.vertex(v), b.edge(e)];
        vote.extend(b.l());
        vote.extend(b.l2());
        vote.push(Blocks::P);
        vote.extend(b.edges().filter(|&x| x != b.edge(e)));
        vote.extend(b.vertices().filter(|&x| x != b.vertex(u) && x != b.vertex(v)));
        vote.extend(b.s());
        let back: Vec<usize> = vote.iter().rev().copied().collect();
        votes.push(vote);
        votes.push(back);
    }

    let join = |parts: Vec<Vec<usize>>| parts.concat();
    let all = |r: std::ops::Range<usize>| r.collect::<Vec<_>>();
    for _ in 0..k - 2 {
        votes.push(join(vec![
            all(b.edges()),
            vec![Blocks::D],
            all(b.l()),
            all(b.s()),
            vec![Blocks::P],
            all(b.l2()),
            all(b.vertices()),
        ]));
    }
    for _ in 0..k - 2 {
        votes.push(join(vec![
            vec![Blocks::P],
            all(b.l2()),
            vec![Blocks::D],
            all(b.l()),
            all(b.vertices()),
            all(b.s()),
            all(b.edges()),
        ]));
    }
    votes.push(join(vec![
        all(b.s()),
        vec![Blocks::P, Blocks::D],
        all(b.l2()),
        all(b.vertices()),
        all(b.l()),
        all(b.edges()),
    ]));

    let rest: Vec<usize> = std::iter::once(Blocks::P)
        .chain(b.vertices())
        .chain(b.edges())
        .chain(b.s())
        .collect();
    let forward = join(vec![vec![Blocks::D], all(b.l()), all(b.l2()), rest.clone()]);
    let backward = join(vec![
        rest.iter().rev().copied().collect(),
        vec![Blocks::D],
        all(b.l2()),
        all(b.l()),
    ]);
    for _ in 0..3 * k * k {
        votes.push(forward.clone());
    }
    for _ in 0..3 * k * k {
        votes.push(backward.clone());
    }
    debug_assert_eq!(votes[0].len(), b.total());

    let election = Election::new(names, votes)?;
    Ok(Generated {
        instance: BriberyInstance::with_unit_prices(election, Blocks::D, budget as u64)?,
        rule: RuleSpec::Copeland(alpha),
    })
}

/// The bribery that exploits a `k`-clique: shift `d` back three positions
/// in the first vote of every clique edge.
pub fn clique_bribery(graph: &Graph, vertices: &[usize]) -> Result<ShiftVector> {
    if !graph.is_clique(vertices) {
        return input("the given vertices do not form a clique");
    }
    let k = vertices.len();
    let n = 2 * graph.edges().len() + 2 * k - 3 + 6 * k * k;
    let mut shifts = ShiftVector::zeros(n);
    for (e, &(u, v)) in graph.edges().iter().enumerate() {
        if vertices.contains(&u) && vertices.contains(&v) {
            shifts[2 * e] = 3;
        }
    }
    Ok(shifts)
}
