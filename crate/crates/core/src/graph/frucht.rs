//! Graphs with a prescribed automorphism group.
//!
//! For a non-trivial group `H` with generators `g_1..g_k`, start from the
//! coloured Cayley digraph (arc `x → x·g_c` of colour `c`) and replace each
//! arc by the gadget
//!
//! ```text
//!   x ── p ── q ── x·g_c
//!        │    │
//!      tail  tail
//! ```
//!
//! where the tail at `p` has `2c - 1 + 2t` vertices and the tail at `q` has
//! `2c + 2t`. Tail lengths encode both colour and direction, so the only
//! automorphisms left are left translations by `H`. The offset `t` indexes
//! the family; members differ in vertex count and so are pairwise
//! non-isomorphic. The trivial group uses asymmetric spiders instead.
//!
//! Every returned graph is checked: its automorphism group is recomputed and
//! matched against `H` by an explicit table isomorphism.

use super::search::{automorphisms, isomorphic, SearchLimits};
use super::Graph;
use crate::error::{Error, Result};
use crate::fingroup::FinGroup;

/// The automorphism group of `g` as a multiplication table.
pub fn automorphism_group(g: &Graph, limits: &SearchLimits) -> Result<FinGroup> {
    let perms: Vec<Vec<usize>> = automorphisms(g, limits)?
        .into_iter()
        .map(|m| m.vmap)
        .collect();
    FinGroup::from_permutations(&perms)
}

/// `count` pairwise non-isomorphic graphs whose automorphism group is
/// isomorphic to `h`.
pub fn frucht_realize(h: &FinGroup, count: usize, limits: &SearchLimits) -> Result<Vec<Graph>> {
    if count == 0 {
        return Err(Error::Realize("count must be positive".into()));
    }
    let mut out: Vec<Graph> = Vec::with_capacity(count);
    for t in 0..count {
        let g = if h.order() == 1 {
            spider(&[1, 2, 3 + t])
        } else {
            cayley_gadget_graph(h, t)
        };
        let aut = automorphism_group(&g, limits)?;
        if !aut.is_isomorphic(h) {
            return Err(Error::Realize(format!(
                "member {t} has automorphism group of order {} not isomorphic to the target",
                aut.order()
            )));
        }
        for prev in &out {
            if isomorphic(prev, &g, limits)?.is_some() {
                return Err(Error::Realize(format!("member {t} repeats an earlier graph")));
            }
        }
        out.push(g);
    }
    Ok(out)
}

/// A centre with pendant paths of the given (distinct) lengths.
fn spider(legs: &[usize]) -> Graph {
    let n = 1 + legs.iter().sum::<usize>();
    let mut g = Graph::new(n);
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            g.add_edge(prev, next).expect("fresh vertices");
            prev = next;
            next += 1;
        }
    }
    g
}

fn tail(from: usize, len: usize, next: &mut usize, edges: &mut Vec<(usize, usize)>) {
    let mut prev = from;
    for _ in 0..len {
        edges.push((prev, *next));
        prev = *next;
        *next += 1;
    }
}

fn cayley_gadget_graph(h: &FinGroup, offset: usize) -> Graph {
    let gens = h.generators();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut next = h.order();
    for x in h.elements() {
        for (i, &g) in gens.iter().enumerate() {
            let colour = i + 1;
            let y = h.mul(x, g);
            let p = next;
            let q = next + 1;
            next += 2;
            edges.extend([(x, p), (p, q), (q, y)]);
            tail(p, 2 * colour - 1 + 2 * offset, &mut next, &mut edges);
            tail(q, 2 * colour + 2 * offset, &mut next, &mut edges);
        }
    }
    Graph::from_edges(next, &edges).expect("gadget edges are simple")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_group_gives_rigid_graphs() {
        let lim = SearchLimits::default();
        let gs = frucht_realize(&FinGroup::trivial(), 2, &lim).unwrap();
        for g in &gs {
            assert_eq!(automorphisms(g, &lim).unwrap().len(), 1);
        }
    }

    #[test]
    fn cyclic_groups_realized() {
        let lim = SearchLimits::default();
        let z2 = FinGroup::cyclic(2).unwrap();
        let gs = frucht_realize(&z2, 1, &lim).unwrap();
        assert_eq!(automorphisms(&gs[0], &lim).unwrap().len(), 2);

        let z3 = FinGroup::cyclic(3).unwrap();
        let gs = frucht_realize(&z3, 2, &lim).unwrap();
        assert_eq!(gs.len(), 2);
        for g in &gs {
            assert_eq!(automorphisms(g, &lim).unwrap().len(), 3);
        }
        assert!(isomorphic(&gs[0], &gs[1], &lim).unwrap().is_none());
    }

    #[test]
    fn zero_count_rejected() {
        assert!(frucht_realize(&FinGroup::trivial(), 0, &SearchLimits::default()).is_err());
    }
}
