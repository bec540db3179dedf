//! Simple undirected graphs on dense vertex ids `0..n`.

mod frucht;
mod search;

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

pub use frucht::{automorphism_group, frucht_realize};
pub use search::{automorphisms, isomorphic, SearchLimits};
pub(crate) use search::automorphisms_colored;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    matrix: Vec<bool>,
    labels: Vec<String>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} vertices, edges {:?})", self.n, self.edges())
    }
}

/// A vertex map between two graphs. Use [`GraphMap::is_homomorphism`] to
/// check that it carries edges to edges.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GraphMap {
    pub vmap: Vec<usize>,
}

impl GraphMap {
    pub fn identity(n: usize) -> Self {
        GraphMap {
            vmap: (0..n).collect(),
        }
    }

    pub fn apply(&self, v: usize) -> usize {
        self.vmap[v]
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &GraphMap) -> GraphMap {
        GraphMap {
            vmap: first.vmap.iter().map(|&v| self.vmap[v]).collect(),
        }
    }

    pub fn inverse(&self) -> GraphMap {
        let mut vmap = vec![0; self.vmap.len()];
        for (v, &w) in self.vmap.iter().enumerate() {
            vmap[w] = v;
        }
        GraphMap { vmap }
    }

    pub fn is_identity(&self) -> bool {
        self.vmap.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_homomorphism(&self, source: &Graph, target: &Graph) -> bool {
        self.vmap.len() == source.vertex_count()
            && self.vmap.iter().all(|&w| w < target.vertex_count())
            && source
                .edges()
                .into_iter()
                .all(|(u, v)| target.has_edge(self.vmap[u], self.vmap[v]))
    }

    /// A bijection carrying edges exactly onto edges.
    pub fn is_isomorphism(&self, source: &Graph, target: &Graph) -> bool {
        let image: BTreeSet<_> = self.vmap.iter().collect();
        source.vertex_count() == target.vertex_count()
            && source.edge_count() == target.edge_count()
            && image.len() == self.vmap.len()
            && self.is_homomorphism(source, target)
    }
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            matrix: vec![false; n * n],
            labels: (0..n).map(|i| i.to_string()).collect(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(n, &edges).expect("valid edges")
    }

    /// Path `0 - 1 - … - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges).expect("valid edges")
    }

    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        Graph::from_edges(n, &edges).expect("valid edges")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::Graph(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        let distinct: BTreeSet<_> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::Graph("duplicate vertex labels".into()));
        }
        self.labels = labels;
        Ok(self)
    }

    /// Adding an existing edge is a no-op; self-loops are rejected.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::UnknownVertex(format!("{}", u.max(v))));
        }
        if u == v {
            return Err(Error::Graph(format!("self-loop at {u}")));
        }
        if !self.matrix[u * self.n + v] {
            self.matrix[u * self.n + v] = true;
            self.matrix[v * self.n + u] = true;
            let pu = self.adj[u].binary_search(&v).unwrap_err();
            self.adj[u].insert(pu, v);
            let pv = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pv, u);
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.matrix[u * self.n + v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| {
                self.adj[u]
                    .iter()
                    .filter(move |&&v| v > u)
                    .map(move |&v| (u, v))
            })
            .collect()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Whether all distinct pairs in `s` are adjacent. The empty set and
    /// singletons are cliques.
    pub fn is_clique(&self, s: &[usize]) -> Result<bool> {
        if let Some(&v) = s.iter().find(|&&v| v >= self.n) {
            return Err(Error::UnknownVertex(v.to_string()));
        }
        Ok(self.is_clique_unchecked(s))
    }

    pub(crate) fn is_clique_unchecked(&self, s: &[usize]) -> bool {
        s.iter().enumerate().all(|(i, &u)| {
            s[i + 1..]
                .iter()
                .all(|&v| u == v || self.matrix[u * self.n + v])
        })
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// All simple graphs on `n` vertices (one per edge subset).
    pub fn all_on(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let count = 1u64 << pairs.len();
        (0..count).map(move |mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::from_edges(n, &edges).expect("valid edges")
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cliques() {
        let k2 = Graph::complete(2);
        assert!(k2.is_clique(&[0]).unwrap());
        assert!(k2.is_clique(&[]).unwrap());
        assert!(k2.is_clique(&[0, 1]).unwrap());
        let e2 = Graph::new(2);
        assert!(!e2.is_clique(&[0, 1]).unwrap());
        assert!(matches!(e2.is_clique(&[0, 5]), Err(Error::UnknownVertex(_))));
        let p3 = Graph::path(3);
        assert!(p3.is_clique(&[0, 1]).unwrap());
        assert!(!p3.is_clique(&[0, 1, 2]).unwrap());
    }

    #[test]
    fn edges_are_simple() {
        let mut g = Graph::new(3);
        g.add_edge(0, 1).unwrap();
        g.add_edge(1, 0).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(g.add_edge(2, 2).is_err());
        assert!(g.add_edge(0, 3).is_err());
        assert_eq!(Graph::complete(4).edge_count(), 6);
        assert_eq!(Graph::cycle(5).edge_count(), 5);
    }

    #[test]
    fn connectivity() {
        assert!(Graph::path(4).is_connected());
        assert!(!Graph::new(2).is_connected());
        assert_eq!(Graph::all_on(3).count(), 8);
    }

    #[test]
    fn maps() {
        let p3 = Graph::path(3);
        let flip = GraphMap { vmap: vec![2, 1, 0] };
        assert!(flip.is_isomorphism(&p3, &p3));
        assert!(flip.after(&flip).is_identity());
        let bad = GraphMap { vmap: vec![1, 0, 2] };
        assert!(!bad.is_homomorphism(&p3, &p3));
        // collapsing onto an edge is a homomorphism but not an isomorphism
        let fold = GraphMap { vmap: vec![0, 1, 0] };
        assert!(fold.is_homomorphism(&p3, &p3));
        assert!(!fold.is_isomorphism(&p3, &p3));
    }
}
