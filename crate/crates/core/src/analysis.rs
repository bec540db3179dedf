//! Invariants of a partial group computed at explicit bounds: orders of
//! elements, maximal finite subgroups, the graph of maximal finite
//! subgroups, recovery of a decorated graph's underlying graph, and the
//! normalizer.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::decpart::{build, DecGraph, MgHandle};
use crate::error::{Error, Result};
use crate::graph::{isomorphic, Graph, GraphMap, SearchLimits};
use crate::morphisms::aut_group;
use crate::partial::{induced_group, is_subgroup, PartialGroup, SubgroupRecord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisBounds {
    /// Elements of at most this size are considered.
    pub max_elem_size: usize,
    /// Powers are followed up to this exponent.
    pub power_bound: usize,
    /// Subgroup closures larger than this are abandoned.
    pub max_subgroup_order: usize,
}

impl Default for AnalysisBounds {
    fn default() -> Self {
        AnalysisBounds {
            max_elem_size: 5,
            power_bound: 12,
            max_subgroup_order: 64,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ElementOrder {
    Finite(usize),
    /// Every power up to the bound is defined and strictly larger than the
    /// previous one.
    Infinite,
    /// Some power is not defined: `(xⁿ⁻¹, x) ∉ D`.
    LeavesDomain,
    /// Powers neither return to the unit nor grow steadily within the bound.
    Indeterminate,
}

/// Follows `x, x², x³, …` through length-2 products `(xⁿ⁻¹, x)`.
pub fn element_order<P: PartialGroup>(p: &P, x: &P::Elem, power_bound: usize) -> ElementOrder {
    let unit = p.unit();
    if *x == unit {
        return ElementOrder::Finite(1);
    }
    let mut acc = x.clone();
    let mut growing = true;
    for n in 2..=power_bound.max(2) {
        let Some(next) = p.try_product(&[acc.clone(), x.clone()]) else {
            return ElementOrder::LeavesDomain;
        };
        if next == unit {
            return ElementOrder::Finite(n);
        }
        growing &= p.size(&next) > p.size(&acc);
        acc = next;
    }
    if growing {
        ElementOrder::Infinite
    } else {
        ElementOrder::Indeterminate
    }
}

/// Every element up to the size bound with its order classification.
pub fn classify_orders<P: PartialGroup>(
    p: &P,
    bounds: &AnalysisBounds,
) -> Vec<(P::Elem, ElementOrder)> {
    p.elements(bounds.max_elem_size)
        .into_iter()
        .map(|e| {
            let o = element_order(p, &e, bounds.power_bound);
            (e, o)
        })
        .collect()
}

/// Elements of finite order (the unit included). Indeterminate elements
/// are left out with a warning.
pub fn finite_order_elements<P: PartialGroup>(
    p: &P,
    bounds: &AnalysisBounds,
) -> BTreeSet<P::Elem> {
    let mut out = BTreeSet::new();
    for (e, o) in classify_orders(p, bounds) {
        match o {
            ElementOrder::Finite(_) => {
                out.insert(e);
            }
            ElementOrder::Indeterminate => log::warn!(
                "order of {} undetermined at power bound {}; excluded",
                p.format_elem(&e),
                bounds.power_bound
            ),
            _ => {}
        }
    }
    out
}

/// Closure of `seed` under inverses and pairwise products, staying inside
/// `allowed`. `None` if a product is undefined or leaves `allowed`.
fn closure_within<P: PartialGroup>(
    p: &P,
    seed: &BTreeSet<P::Elem>,
    allowed: &BTreeSet<P::Elem>,
    max_size: usize,
) -> Option<BTreeSet<P::Elem>> {
    let mut set = seed.clone();
    set.insert(p.unit());
    let mut frontier: Vec<P::Elem> = set.iter().cloned().collect();
    while !frontier.is_empty() {
        let current: Vec<P::Elem> = set.iter().cloned().collect();
        let mut next = Vec::new();
        for x in &frontier {
            let xi = p.inverse(x);
            if !allowed.contains(&xi) {
                return None;
            }
            if set.insert(xi.clone()) {
                next.push(xi);
            }
            for y in &current {
                for w in [[x.clone(), y.clone()], [y.clone(), x.clone()]] {
                    let z = p.try_product(&w)?;
                    if !allowed.contains(&z) {
                        return None;
                    }
                    if set.insert(z.clone()) {
                        next.push(z);
                    }
                }
            }
            if set.len() > max_size {
                return None;
            }
        }
        frontier = next;
    }
    Some(set)
}

/// Maximal finite subgroups found from the finite-order elements: cyclic
/// closures are merged pairwise while the merged closure stays a subgroup
/// of finite-order elements, then non-maximal sets are dropped. Records
/// are sorted by their element lists.
pub fn maximal_finite_subgroups<P: PartialGroup>(
    p: &P,
    bounds: &AnalysisBounds,
) -> Vec<SubgroupRecord<P::Elem>> {
    let finite = finite_order_elements(p, bounds);
    let unit = p.unit();
    let mut candidates: Vec<BTreeSet<P::Elem>> = Vec::new();
    let mut seen: HashSet<Vec<P::Elem>> = HashSet::new();
    let mut push = |s: BTreeSet<P::Elem>, candidates: &mut Vec<BTreeSet<P::Elem>>| {
        if seen.insert(s.iter().cloned().collect()) {
            candidates.push(s);
        }
    };
    for x in finite.iter().filter(|x| **x != unit) {
        let seed = BTreeSet::from([x.clone()]);
        if let Some(s) = closure_within(p, &seed, &finite, bounds.max_subgroup_order) {
            push(s, &mut candidates);
        }
    }
    let mut tried: HashSet<(usize, usize)> = HashSet::new();
    loop {
        let mut added = false;
        let n = candidates.len();
        for i in 0..n {
            for j in i + 1..n {
                if !tried.insert((i, j)) {
                    continue;
                }
                let (a, b) = (&candidates[i], &candidates[j]);
                if a.is_subset(b) || b.is_subset(a) {
                    continue;
                }
                let union: BTreeSet<P::Elem> = a.union(b).cloned().collect();
                if let Some(s) = closure_within(p, &union, &finite, bounds.max_subgroup_order) {
                    let before = candidates.len();
                    push(s, &mut candidates);
                    added |= candidates.len() > before;
                }
            }
        }
        if !added {
            break;
        }
    }
    let mut records: Vec<SubgroupRecord<P::Elem>> = candidates
        .iter()
        .filter(|s| !candidates.iter().any(|t| s.len() < t.len() && s.is_subset(t)))
        .filter(|s| is_subgroup(p, s))
        .filter_map(|s| induced_group(p, s))
        .collect();
    records.sort_by(|a, b| a.elements.cmp(&b.elements));
    records
}

fn record_label<P: PartialGroup>(p: &P, r: &SubgroupRecord<P::Elem>) -> String {
    let parts: Vec<String> = r.elements[1..].iter().map(|e| p.format_elem(e)).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Graph on the records: adjacent when some (`strong`: every) pair of
/// non-unit elements `h₁ ∈ H₁`, `h₂ ∈ H₂` has `(h₁, h₂) ∈ D`.
pub fn maxsub_graph_from<P: PartialGroup>(
    p: &P,
    records: &[SubgroupRecord<P::Elem>],
    strong: bool,
) -> Graph {
    let mut g = Graph::new(records.len());
    for i in 0..records.len() {
        for j in i + 1..records.len() {
            let mut pairs = records[i].elements[1..].iter().flat_map(|x| {
                records[j].elements[1..]
                    .iter()
                    .map(move |y| p.in_domain(&[x.clone(), y.clone()]))
            });
            let adjacent = if strong {
                pairs.all(|b| b)
            } else {
                pairs.any(|b| b)
            };
            if adjacent {
                g.add_edge(i, j).expect("distinct vertices");
            }
        }
    }
    let labels: Vec<String> = records.iter().map(|r| record_label(p, r)).collect();
    g.with_labels(labels)
        .expect("distinct subgroups get distinct labels")
}

pub fn maxsub_graph<P: PartialGroup>(p: &P, bounds: &AnalysisBounds) -> Graph {
    maxsub_graph_from(p, &maximal_finite_subgroups(p, bounds), false)
}

pub fn strong_maxsub_graph<P: PartialGroup>(p: &P, bounds: &AnalysisBounds) -> Graph {
    maxsub_graph_from(p, &maximal_finite_subgroups(p, bounds), true)
}

#[derive(Clone, Debug)]
pub struct Recovery {
    pub records: Vec<SubgroupRecord<crate::words::CrWord>>,
    pub maxsub: Graph,
    /// An isomorphism from the recovered graph to the original one.
    pub iso: Option<GraphMap>,
}

/// Rebuilds the underlying graph of `dg` from its partial group alone and
/// looks for an isomorphism to the original.
pub fn recover_check(
    dg: &DecGraph,
    bounds: &AnalysisBounds,
    limits: &SearchLimits,
) -> Result<Recovery> {
    let h = build(dg.clone());
    let records = maximal_finite_subgroups(&h, bounds);
    let maxsub = maxsub_graph_from(&h, &records, false);
    let iso = isomorphic(&maxsub, dg.graph(), limits)?;
    Ok(Recovery {
        records,
        maxsub,
        iso,
    })
}

/// Elements `η` with `(η, μ, η⁻¹) ∈ D` for every enumerated `μ`. Contains
/// the true normalizer's elements up to the bound.
pub fn normalizer<P: PartialGroup>(p: &P, max_elem_size: usize) -> Vec<P::Elem> {
    let elems = p.elements(max_elem_size);
    elems
        .iter()
        .filter(|eta| {
            let inv = p.inverse(eta);
            elems
                .iter()
                .all(|mu| p.in_domain(&[(*eta).clone(), mu.clone(), inv.clone()]))
        })
        .cloned()
        .collect()
}

/// Order of the group of self-homotopy equivalences, available when the
/// normalizer is trivial at the bound (it then equals the automorphism
/// group's order). Refuses otherwise.
pub fn homotopy_selfequiv_order(
    h: &MgHandle,
    max_elem_size: usize,
    limits: &SearchLimits,
) -> Result<usize> {
    let n = normalizer(h, max_elem_size);
    if n.len() != 1 {
        return Err(Error::NontrivialNormalizer(n.len()));
    }
    Ok(aut_group(h.decgraph(), limits)?.order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decpart::path_partial;
    use crate::fingroup::FinGroup;
    use crate::partial::{colimit_of_groups, from_group, GroupDiagram};

    fn named(g: Graph, names: &[&str]) -> Graph {
        g.with_labels(names.iter().map(|s| s.to_string()).collect())
            .unwrap()
    }

    #[test]
    fn orders_in_the_path_partial_group_of_an_edge() {
        let p = path_partial(named(Graph::complete(2), &["a", "b"]));
        let b = AnalysisBounds::default();
        let fin: Vec<String> = finite_order_elements(&p, &b)
            .iter()
            .map(|e| p.format_elem(e))
            .collect();
        assert_eq!(fin, ["()", "a", "b"]);
        let ab = p.parse_elem("a b").unwrap();
        assert_eq!(element_order(&p, &ab, 12), ElementOrder::Infinite);
        let z3 = from_group(FinGroup::cyclic(3).unwrap());
        assert_eq!(finite_order_elements(&z3, &b).len(), 3);
    }

    #[test]
    fn maximal_subgroups_and_recovery() {
        let b = AnalysisBounds::default();
        let p = path_partial(named(Graph::complete(2), &["a", "b"]));
        let recs = maximal_finite_subgroups(&p, &b);
        assert_eq!(recs.iter().map(|r| r.order()).collect::<Vec<_>>(), [2, 2]);
        let g = maxsub_graph(&p, &b);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(strong_maxsub_graph(&p, &b).edge_count(), 1);

        let dec = vec![FinGroup::cyclic(2).unwrap(), FinGroup::cyclic(3).unwrap()];
        let dg = DecGraph::new(Graph::complete(2), dec).unwrap();
        let m = build(dg.clone());
        let mut orders: Vec<usize> = maximal_finite_subgroups(&m, &b)
            .iter()
            .map(|r| r.order())
            .collect();
        orders.sort();
        assert_eq!(orders, [2, 3]);
        let r = recover_check(&dg, &b, &SearchLimits::default()).unwrap();
        assert!(r.iso.is_some());

        let e2 = path_partial(Graph::new(2));
        assert_eq!(maxsub_graph(&e2, &b).edge_count(), 0);
        assert_eq!(maxsub_graph(&e2, &b).vertex_count(), 2);
    }

    #[test]
    fn dihedral_amalgam_subgroups() {
        let b = AnalysisBounds::default();
        let m = colimit_of_groups(GroupDiagram::dihedral_amalgam()).unwrap();
        let recs = maximal_finite_subgroups(&m, &b);
        assert_eq!(recs.len(), 2);
        assert!(recs.iter().all(|r| r.order() == 4 && r.table.iso_name() == "V4"));
        assert_eq!(maxsub_graph_from(&m, &recs, false).edge_count(), 1);
        assert_eq!(maxsub_graph_from(&m, &recs, true).edge_count(), 0);
    }

    #[test]
    fn normalizers() {
        let p = path_partial(Graph::complete(2));
        assert_eq!(normalizer(&p, 4).len(), 1);
        let z3 = from_group(FinGroup::cyclic(3).unwrap());
        assert_eq!(normalizer(&z3, 1).len(), 3);
        assert_eq!(normalizer(&path_partial(Graph::path(3)), 4).len(), 1);
        let lim = SearchLimits::default();
        assert_eq!(homotopy_selfequiv_order(&p, 4, &lim).unwrap(), 2);
        assert!(matches!(
            homotopy_selfequiv_order(&path_partial(Graph::new(1)), 4, &lim),
            Err(Error::NontrivialNormalizer(2))
        ));
    }
}
