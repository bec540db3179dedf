//! Isomorphism and automorphism search: colour refinement plus
//! individualisation, backtracking over the smallest non-singleton cell.

use std::collections::BTreeMap;

use super::{Graph, GraphMap};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    /// Graphs with more vertices are rejected up front.
    pub max_vertices: usize,
    /// Budget of search-tree nodes.
    pub max_nodes: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_vertices: 512,
            max_nodes: 2_000_000,
        }
    }
}

/// All automorphisms of `g`, sorted, identity first.
pub fn automorphisms(g: &Graph, limits: &SearchLimits) -> Result<Vec<GraphMap>> {
    let colors = vec![0; g.vertex_count()];
    automorphisms_colored(g, &colors, limits)
}

/// Automorphisms preserving the vertex colouring `colors`.
pub(crate) fn automorphisms_colored(
    g: &Graph,
    colors: &[usize],
    limits: &SearchLimits,
) -> Result<Vec<GraphMap>> {
    let mut s = Search::new(g, g, *limits, true)?;
    s.run(colors.to_vec(), colors.to_vec())?;
    let mut out = s.found;
    out.sort();
    Ok(out)
}

/// Some isomorphism `a → b`, verified edge-exactly, or `None`.
pub fn isomorphic(a: &Graph, b: &Graph, limits: &SearchLimits) -> Result<Option<GraphMap>> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return Ok(None);
    }
    let mut s = Search::new(a, b, *limits, false)?;
    s.run(vec![0; a.vertex_count()], vec![0; b.vertex_count()])?;
    Ok(s.found.into_iter().next())
}

struct Search<'a> {
    a: &'a Graph,
    b: &'a Graph,
    limits: SearchLimits,
    find_all: bool,
    nodes: usize,
    found: Vec<GraphMap>,
}

impl<'a> Search<'a> {
    fn new(a: &'a Graph, b: &'a Graph, limits: SearchLimits, find_all: bool) -> Result<Self> {
        let n = a.vertex_count().max(b.vertex_count());
        if n > limits.max_vertices {
            return Err(Error::SearchLimit(format!(
                "{n} vertices exceeds the limit of {}",
                limits.max_vertices
            )));
        }
        Ok(Search {
            a,
            b,
            limits,
            find_all,
            nodes: 0,
            found: Vec::new(),
        })
    }

    fn run(&mut self, mut ca: Vec<usize>, mut cb: Vec<usize>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.limits.max_nodes {
            return Err(Error::SearchLimit(format!(
                "more than {} search nodes",
                self.limits.max_nodes
            )));
        }
        if !refine(self.a, self.b, &mut ca, &mut cb) {
            return Ok(());
        }
        let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
        for &c in &ca {
            *sizes.entry(c).or_default() += 1;
        }
        let cell = sizes
            .iter()
            .filter(|(_, &n)| n > 1)
            .min_by_key(|(&c, &n)| (n, c))
            .map(|(&c, _)| c);
        let Some(cell) = cell else {
            // discrete: colours determine the bijection
            let mut where_b = vec![usize::MAX; cb.iter().max().map_or(0, |m| m + 1)];
            for (w, &c) in cb.iter().enumerate() {
                where_b[c] = w;
            }
            let map = GraphMap {
                vmap: ca.iter().map(|&c| where_b[c]).collect(),
            };
            if map.is_isomorphism(self.a, self.b) {
                self.found.push(map);
            }
            return Ok(());
        };
        let fresh = ca.iter().chain(cb.iter()).max().map_or(0, |m| m + 1);
        let v = ca.iter().position(|&c| c == cell).expect("cell non-empty");
        let targets: Vec<usize> = (0..cb.len()).filter(|&w| cb[w] == cell).collect();
        for w in targets {
            let mut ca2 = ca.clone();
            let mut cb2 = cb.clone();
            ca2[v] = fresh;
            cb2[w] = fresh;
            self.run(ca2, cb2)?;
            if !self.find_all && !self.found.is_empty() {
                break;
            }
        }
        Ok(())
    }
}

/// Refines both colourings in lockstep with shared colour names. Returns
/// false as soon as the colour histograms of the two graphs differ.
fn refine(a: &Graph, b: &Graph, ca: &mut Vec<usize>, cb: &mut Vec<usize>) -> bool {
    let mut classes = count_classes(ca, cb);
    loop {
        let sig = |g: &Graph, c: &[usize], v: usize| {
            let mut s: Vec<usize> = g.neighbors(v).iter().map(|&u| c[u]).collect();
            s.sort_unstable();
            (c[v], s)
        };
        let sa: Vec<_> = (0..a.vertex_count()).map(|v| sig(a, ca, v)).collect();
        let sb: Vec<_> = (0..b.vertex_count()).map(|v| sig(b, cb, v)).collect();
        let mut names: BTreeMap<&(usize, Vec<usize>), usize> = BTreeMap::new();
        for s in sa.iter().chain(sb.iter()) {
            names.insert(s, 0);
        }
        for (i, v) in names.values_mut().enumerate() {
            *v = i;
        }
        *ca = sa.iter().map(|s| names[s]).collect();
        *cb = sb.iter().map(|s| names[s]).collect();
        if histogram(ca) != histogram(cb) {
            return false;
        }
        let now = names.len();
        if now == classes {
            return true;
        }
        classes = now;
    }
}

fn count_classes(ca: &[usize], cb: &[usize]) -> usize {
    let mut all: Vec<usize> = ca.iter().chain(cb.iter()).copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

fn histogram(c: &[usize]) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for &x in c {
        *h.entry(x).or_default() += 1;
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_permutations(n: usize) -> Vec<Vec<usize>> {
        fn go(k: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for i in 0..k {
                if !used[i] {
                    used[i] = true;
                    cur.push(i);
                    go(k, cur, used, out);
                    cur.pop();
                    used[i] = false;
                }
            }
        }
        let mut out = Vec::new();
        go(n, &mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    fn brute_aut_count(g: &Graph) -> usize {
        all_permutations(g.vertex_count())
            .into_iter()
            .filter(|p| GraphMap { vmap: p.clone() }.is_isomorphism(g, g))
            .count()
    }

    #[test]
    fn small_automorphism_groups() {
        let lim = SearchLimits::default();
        assert_eq!(automorphisms(&Graph::complete(2), &lim).unwrap().len(), 2);
        assert_eq!(automorphisms(&Graph::new(1), &lim).unwrap().len(), 1);
        assert_eq!(brute_aut_count(&Graph::path(3)), 2);
        assert_eq!(automorphisms(&Graph::path(3), &lim).unwrap().len(), 2);
        assert_eq!(automorphisms(&Graph::cycle(5), &lim).unwrap().len(), 10);
        assert_eq!(automorphisms(&Graph::complete(4), &lim).unwrap().len(), 24);
        assert_eq!(automorphisms(&Graph::new(3), &lim).unwrap().len(), 6);
    }

    #[test]
    fn matches_brute_force_on_all_four_vertex_graphs() {
        let lim = SearchLimits::default();
        for g in Graph::all_on(4) {
            let auts = automorphisms(&g, &lim).unwrap();
            assert_eq!(auts.len(), brute_aut_count(&g), "{g:?}");
            assert!(auts[0].is_identity());
            for x in &auts {
                assert!(auts.contains(&x.inverse()));
                for y in &auts {
                    assert!(auts.contains(&x.after(y)));
                }
            }
        }
    }

    #[test]
    fn isomorphism_search() {
        let lim = SearchLimits::default();
        let p3 = Graph::path(3);
        let id = isomorphic(&p3, &p3, &lim).unwrap().unwrap();
        assert!(id.is_isomorphism(&p3, &p3));
        assert!(isomorphic(&Graph::complete(2), &Graph::new(2), &lim)
            .unwrap()
            .is_none());
        // centre relabelled to 0
        let p3b = Graph::from_edges(3, &[(0, 1), (0, 2)]).unwrap();
        let f = isomorphic(&p3, &p3b, &lim).unwrap().unwrap();
        assert!(f.is_isomorphism(&p3, &p3b));
        assert!(isomorphic(&p3b, &p3, &lim).unwrap().is_some());
        // same degree sequence, not isomorphic: C6 vs two triangles
        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(isomorphic(&Graph::cycle(6), &two_triangles, &lim)
            .unwrap()
            .is_none());
    }

    #[test]
    fn limits_are_enforced() {
        let lim = SearchLimits {
            max_vertices: 3,
            max_nodes: 10,
        };
        assert!(matches!(
            automorphisms(&Graph::path(5), &lim),
            Err(Error::SearchLimit(_))
        ));
        let tight = SearchLimits {
            max_vertices: 100,
            max_nodes: 3,
        };
        assert!(matches!(
            automorphisms(&Graph::new(6), &tight),
            Err(Error::SearchLimit(_))
        ));
    }
}
