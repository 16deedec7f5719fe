//! Copeland instances with few voters, from Multicolored Independent Set.

use std::ops::Range;

use num_rational::Ratio;

use super::{Generated, Graph};
use crate::election::{Candidate, Election, ShiftVector};
use crate::error::{input, Result};
use crate::rules::RuleSpec;
use crate::solvers::BriberyInstance;

/// Sizes and candidate groups of a generated instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct McisShape {
    /// Number of colors.
    pub h: usize,
    /// Vertices per color.
    pub q: usize,
    /// Maximum degree.
    pub delta: usize,
    /// Size of every dummy block.
    pub t: usize,
    pub budget: u64,
    pub vertices: Range<Candidate>,
    pub edges: Range<Candidate>,
    pub fillers: Range<Candidate>,
    /// `D_1, ..., D_h`, one after the other.
    pub dummies: Range<Candidate>,
    pub d1: Range<Candidate>,
    pub d2: Range<Candidate>,
    pub d3: Range<Candidate>,
    /// Vertices of each color in index order.
    by_color: Vec<Vec<usize>>,
    /// Filler block of every graph vertex.
    filler_of: Vec<Range<Candidate>>,
}

const D: Candidate = 0;
const P: Candidate = 1;
const Q: Candidate = 2;

impl McisShape {
    /// Checks the coloring requirements and lays out the candidates.
    pub fn new(graph: &Graph) -> Result<Self> {
        let Some(colors) = graph.colors() else {
            return input("graph has no coloring");
        };
        let h = graph.num_colors();
        if h == 0 {
            return input("graph has no vertices");
        }
        let by_color: Vec<Vec<usize>> = (0..h)
            .map(|c| (0..graph.num_vertices()).filter(|&v| colors[v] == c).collect())
            .collect();
        let q = by_color[0].len();
        if by_color.iter().any(|vs| vs.len() != q) {
            return input("every color needs the same number of vertices");
        }
        if let Some(&(u, v)) = graph.edges().iter().find(|&&(u, v)| colors[u] == colors[v]) {
            return input(format!("edge {u}-{v} joins two vertices of the same color"));
        }
        if let Some(c) = (0..h).find(|&c| by_color[c].iter().all(|&v| graph.degree(v) == 0)) {
            return input(format!("color {c} has no vertex with an incident edge"));
        }

        let delta = graph.max_degree();
        let t = h * q * (delta + 1);
        let nv = graph.num_vertices();
        let vertices = 3..3 + nv;
        let edges = vertices.end..vertices.end + graph.edges().len();
        let mut filler_of = vec![0..0; nv];
        let mut next = edges.end;
        for vs in &by_color {
            for &v in vs {
                let size = delta - graph.degree(v);
                filler_of[v] = next..next + size;
                next += size;
            }
        }
        let fillers = edges.end..next;
        let dummies = next..next + h * t;
        let d1 = dummies.end..dummies.end + t;
        let d2 = d1.end..d1.end + t;
        let d3 = d2.end..d2.end + t;
        Ok(Self {
            h,
            q,
            delta,
            t,
            budget: (h * (q + (q - 1) * delta)) as u64,
            vertices,
            edges,
            fillers,
            dummies,
            d1,
            d2,
            d3,
            by_color,
            filler_of,
        })
    }

    pub fn num_candidates(&self) -> usize {
        self.d3.end
    }

    /// Candidate of the `j`-th vertex of color `i`.
    fn vertex(&self, i: usize, j: usize) -> Candidate {
        self.vertices.start + i * self.q + j
    }

    fn dummy_block(&self, i: usize) -> Range<Candidate> {
        let start = self.dummies.start + i * self.t;
        start..start + self.t
    }

    /// Vertex, incident edges and fillers for every vertex of color `i`.
    fn color_order(&self, graph: &Graph, i: usize) -> Vec<Candidate> {
        let mut out = Vec::new();
        for (j, &v) in self.by_color[i].iter().enumerate() {
            out.push(self.vertex(i, j));
            out.extend(graph.incident(v).into_iter().map(|e| self.edges.start + e));
            out.extend(self.filler_of[v].clone());
        }
        out
    }
}

/// Builds the Copeland^alpha instance asking for a multicolored independent
/// set in a colored graph, with unit prices and budget `h (q + (q - 1) Delta)`.
///
/// Voters come in the order `o_1, o'_1, reverse(o_1), reverse(o'_1), ...`
/// followed by the seven fixed votes.
pub fn mcis(graph: &Graph, alpha: Ratio<u64>) -> Result<Generated> {
    let shape = McisShape::new(graph)?;
    let s = &shape;
    let m = s.num_candidates();

    // vertices are renumbered color by color
    let mut names = vec!["d".to_string(), "p".to_string(), "q".to_string()];
    let mut fill_names = vec![String::new(); s.fillers.len()];
    for i in 0..s.h {
        for (j, &v) in s.by_color[i].iter().enumerate() {
            names.push(format!("v{}_{}", i + 1, j + 1));
            for (x, f) in s.filler_of[v].clone().enumerate() {
                fill_names[f - s.fillers.start] = format!("f{}_{}_{}", i + 1, j + 1, x + 1);
            }
        }
    }
    names.extend(graph.edges().iter().map(|&(u, v)| format!("e{u}_{v}")));
    names.extend(fill_names);
    for i in 1..=s.h {
        names.extend((1..=s.t).map(|x| format!("D{i}_{x}")));
    }
    for tag in ["Da", "Db", "Dc"] {
        names.extend((1..=s.t).map(|x| format!("{tag}{x}")));
    }

    let all = |r: &Range<Candidate>| r.clone().collect::<Vec<_>>();
    let rev = |r: &Range<Candidate>| r.clone().rev().collect::<Vec<_>>();
    let gc: Vec<Candidate> = s.vertices.clone().chain(s.edges.clone()).collect();
    let gc_rev: Vec<Candidate> = gc.iter().rev().copied().collect();
    let tail = [vec![P, Q], all(&s.d1), all(&s.d2), all(&s.d3)].concat();

    let mut votes = Vec::with_capacity(4 * s.h + 7);
    for i in 0..s.h {
        let pi = s.color_order(graph, i);
        let in_pi = |c: &Candidate| pi.contains(c);
        let p_rest: Vec<Candidate> = (s.vertices.start..s.fillers.end).filter(|c| !in_pi(c)).collect();
        let d_rest: Vec<Candidate> = s.dummies.clone().filter(|c| !s.dummy_block(i).contains(c)).collect();
        let pi_rev: Vec<Candidate> = pi.iter().rev().copied().collect();

        let o = [vec![D], pi.clone(), all(&s.dummy_block(i)), d_rest.clone(), p_rest.clone(), tail.clone()].concat();
        let o2 = [vec![D], pi_rev, rev(&s.dummy_block(i)), d_rest, p_rest, tail.clone()].concat();
        let o_back: Vec<Candidate> = o.iter().rev().copied().collect();
        let o2_back: Vec<Candidate> = o2.iter().rev().copied().collect();
        votes.extend([o, o2, o_back, o2_back]);
    }

    let (f, dd) = (all(&s.fillers), all(&s.dummies));
    votes.push([vec![P], f.clone(), dd.clone(), vec![Q], all(&s.d1), rev(&s.d2), gc.clone(), all(&s.d3), vec![D]].concat());
    votes.push([vec![D], rev(&s.d2), gc_rev, all(&s.d3), rev(&s.d1), dd.clone(), vec![Q, P], f.clone()].concat());
    votes.push([vec![P, Q, D], rev(&s.d1), all(&s.d3), dd.clone(), f.clone(), all(&s.d2), gc.clone()].concat());
    votes.push([gc.clone(), vec![D], all(&s.d2), f.clone(), dd.clone(), vec![P, Q], all(&s.d3), all(&s.d1)].concat());
    votes.push([vec![D], all(&s.d3), f.clone(), gc.clone(), all(&s.d2), dd.clone(), vec![P, Q], all(&s.d1)].concat());
    votes.push([vec![Q, P], dd.clone(), all(&s.d2), vec![D], rev(&s.d3), all(&s.d1), f.clone(), gc.clone()].concat());
    votes.push([vec![Q], all(&s.d1), gc, vec![D, P], f, dd, all(&s.d2), all(&s.d3)].concat());
    debug_assert!(votes.iter().all(|v| v.len() == m));

    let election = Election::new(names, votes)?;
    Ok(Generated {
        instance: BriberyInstance::with_unit_prices(election, D, shape.budget)?,
        rule: RuleSpec::Copeland(alpha),
    })
}

/// The bribery that exploits a multicolored independent set, given as one
/// vertex per color (`selection[i]` has color `i`). In `o_i` the despised
/// candidate moves just past the selected vertex; in `o'_i` it moves past
/// every later block.
pub fn mcis_bribery(graph: &Graph, selection: &[usize]) -> Result<ShiftVector> {
    let shape = McisShape::new(graph)?;
    if selection.len() != shape.h {
        return input(format!("need one vertex per color, got {}", selection.len()));
    }
    for (a, &u) in selection.iter().enumerate() {
        if selection[a + 1..].iter().any(|&v| graph.has_edge(u, v)) {
            return input(format!("selected vertex {u} has a selected neighbor"));
        }
    }
    let block = shape.delta + 1;
    let mut shifts = ShiftVector::zeros(4 * shape.h + 7);
    for (i, &v) in selection.iter().enumerate() {
        let Some(j) = shape.by_color[i].iter().position(|&x| x == v) else {
            return input(format!("vertex {v} does not have color {i}"));
        };
        shifts[4 * i] = j * block + 1;
        shifts[4 * i + 1] = (shape.q - 1 - j) * block;
    }
    Ok(shifts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::verify;
    use crate::rules::{is_unique_winner, scores};

    /// Two colors, two vertices each: 0,1 red and 2,3 blue; edges 0-2 and 1-3.
    fn matching() -> Graph {
        Graph::new(4, &[(0, 2), (1, 3)]).unwrap().colored(vec![0, 0, 1, 1]).unwrap()
    }

    #[test]
    fn shape() {
        let g = matching();
        let s = McisShape::new(&g).unwrap();
        assert_eq!((s.h, s.q, s.delta, s.t, s.budget), (2, 2, 1, 8, 6));
        assert_eq!(s.fillers.len(), 0);
        assert_eq!(s.num_candidates(), 3 + 4 + 2 + 5 * 8);
    }

    #[test]
    fn d_row_and_group_margins() {
        let g = matching();
        let gen = mcis(&g, Ratio::new(1, 2)).unwrap();
        let s = McisShape::new(&g).unwrap();
        let e = &gen.instance.election;
        assert_eq!(e.num_voters(), 4 * 2 + 7);

        let sc = scores(e, &gen.rule).unwrap();
        let expected = (s.h + 3) * s.t + 2 + 4 + 1;
        assert_eq!(sc[D], (expected as u64).into());
        assert!(is_unique_winner(e, &gen.rule, D).unwrap());

        let pm = e.pairwise_matrix();
        let margin = |r: &Range<Candidate>| {
            let ms: Vec<i64> = r.clone().map(|c| pm.margin(D, c)).collect();
            assert!(ms.windows(2).all(|w| w[0] == w[1]));
            ms[0]
        };
        // counted from the seven fixed votes; the color votes cancel out
        assert_eq!(margin(&s.vertices), 1);
        assert_eq!(margin(&s.edges), 1);
        assert_eq!(margin(&s.dummies), 3);
        assert_eq!(margin(&s.d1), 3);
        assert_eq!(margin(&s.d2), 3);
        assert_eq!(margin(&s.d3), 5);
    }

    #[test]
    fn fillers_pad_low_degree_vertices() {
        let g = Graph::new(4, &[(0, 2), (0, 3)]).unwrap().colored(vec![0, 0, 1, 1]).unwrap();
        let s = McisShape::new(&g).unwrap();
        assert_eq!(s.delta, 2);
        // vertex 0 has degree 2, the others need 2 + 1 + 1 fillers
        assert_eq!(s.fillers.len(), 4);
        let gen = mcis(&g, Ratio::new(1, 2)).unwrap();
        let pm = gen.instance.election.pairwise_matrix();
        assert!(s.fillers.clone().all(|f| pm.margin(D, f) == 5));
    }

    #[test]
    fn planted_independent_set() {
        let g = matching();
        let gen = mcis(&g, Ratio::new(1, 2)).unwrap();
        let shifts = mcis_bribery(&g, &[0, 3]).unwrap();
        assert_eq!(gen.instance.cost_of(&shifts).finite(), Some(6));
        assert!(verify(&gen.instance, &gen.rule, &shifts).unwrap());
        assert!(mcis_bribery(&g, &[0, 2]).is_err());
    }

    #[test]
    fn coloring_requirements() {
        let plain = Graph::new(2, &[(0, 1)]).unwrap();
        assert!(McisShape::new(&plain).is_err());
        let same = Graph::new(2, &[(0, 1)]).unwrap().colored(vec![0, 0]).unwrap();
        assert!(McisShape::new(&same).is_err());
        let uneven = Graph::new(3, &[(0, 2)]).unwrap().colored(vec![0, 0, 1]).unwrap();
        assert!(McisShape::new(&uneven).is_err());
        let isolated = Graph::new(6, &[(0, 2), (1, 3)]).unwrap().colored(vec![0, 0, 1, 1, 2, 2]).unwrap();
        assert!(McisShape::new(&isolated).is_err());
    }
}
