use crate::error::{input, Result};

/// A simple undirected graph on vertices `0..n`, optionally colored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
    colors: Option<Vec<usize>>,
}

impl Graph {
    /// Vertices are labeled by their index. Edges are stored with the
    /// smaller endpoint first; self-loops and repeated edges are rejected.
    pub fn new(num_vertices: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let labels = (0..num_vertices).map(|v| v.to_string()).collect();
        Self::with_labels(labels, edges)
    }

    pub fn with_labels(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut out: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return input(format!("edge {u}-{v} names a vertex outside 0..{n}"));
            }
            if u == v {
                return input(format!("self-loop at vertex {u}"));
            }
            let e = (u.min(v), u.max(v));
            if out.contains(&e) {
                return input(format!("edge {}-{} listed twice", e.0, e.1));
            }
            out.push(e);
        }
        Ok(Self {
            labels,
            edges: out,
            colors: None,
        })
    }

    /// Attaches a coloring; colors must be `0..h` for some `h`, all used.
    pub fn colored(mut self, colors: Vec<usize>) -> Result<Self> {
        if colors.len() != self.num_vertices() {
            return input(format!(
                "{} colors for {} vertices",
                colors.len(),
                self.num_vertices()
            ));
        }
        let h = colors.iter().max().map_or(0, |&c| c + 1);
        if (0..h).any(|c| !colors.contains(&c)) {
            return input("colors must be exactly 0..h");
        }
        self.colors = Some(colors);
        Ok(self)
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn colors(&self) -> Option<&[usize]> {
        self.colors.as_deref()
    }

    pub fn num_colors(&self) -> usize {
        self.colors
            .as_ref()
            .and_then(|c| c.iter().max())
            .map_or(0, |&c| c + 1)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.num_vertices()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Indices of the edges incident to `v`, in edge order.
    pub fn incident(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&i| self.edges[i].0 == v || self.edges[i].1 == v)
            .collect()
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edges_are_normalized_and_checked() {
        let g = Graph::new(3, &[(1, 0), (2, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(g.degree(1), 2);
        assert_eq!(g.max_degree(), 2);
        assert_eq!(g.incident(2), vec![1]);
        assert!(Graph::new(3, &[(0, 0)]).is_err());
        assert!(Graph::new(3, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn cliques_and_colors() {
        let g = Graph::new(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        assert!(g.is_clique(&[0, 1, 2]));
        assert!(!g.is_clique(&[0, 1, 3]));
        let g = g.colored(vec![0, 1, 0, 1]).unwrap();
        assert_eq!(g.num_colors(), 2);
        let g = Graph::new(2, &[]).unwrap();
        assert!(g.clone().colored(vec![0, 2]).is_err());
        assert!(g.colored(vec![0]).is_err());
    }
}
