//! Automorphisms of a decorated graph: a graph automorphism `σ` that
//! respects decoration types, with an isomorphism `H_v → H_σ(v)` at every
//! vertex. They form a group sitting in
//! `1 → ∏ Aut(H_v) → Aut → Aut(G)`.

use std::collections::HashMap;

use super::DecMorphism;
use crate::decpart::DecGraph;
use crate::error::{Error, Result};
use crate::fingroup::{FinGroup, GroupMap};
use crate::words::CrWord;
use crate::graph::{automorphism_group, automorphisms_colored, GraphMap, SearchLimits};

/// Groups with more elements are refused; the composition table is
/// validated exhaustively, which is cubic in the order.
pub const MAX_AUT_ELEMENTS: usize = 512;

#[derive(Clone, Debug)]
pub struct AutGroupResult {
    /// Ordered by vertex permutation, then lexicographically by the
    /// family of maps; the identity is first.
    pub elements: Vec<DecMorphism>,
    /// Composition table: entry `(i, j)` is `elements[i] ∘ elements[j]`.
    pub group: FinGroup,
    /// Indices of the elements acting trivially on the graph.
    pub kernel: Vec<usize>,
    /// Distinct vertex permutations that occur, sorted.
    pub image: Vec<GraphMap>,
    /// Automorphism group of the bare graph.
    pub graph_aut: FinGroup,
}

impl AutGroupResult {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, m: &DecMorphism) -> Option<usize> {
        self.elements.binary_search(m).ok()
    }

    pub fn kernel_group(&self) -> FinGroup {
        let set = self.kernel.iter().copied().collect();
        self.group.subgroup(&set).expect("kernel is a subgroup").0
    }

    pub fn image_group(&self) -> FinGroup {
        let perms: Vec<Vec<usize>> = self.image.iter().map(|m| m.vmap.clone()).collect();
        FinGroup::from_permutations(&perms).expect("image is a group")
    }

    /// Whether every graph automorphism lifts.
    pub fn is_surjective(&self) -> bool {
        self.image.len() == self.graph_aut.order()
    }

    /// The lift of a graph automorphism with identity maps on every vertex,
    /// if it is an element (requires `H_v = H_σ(v)` as tables).
    pub fn identity_lift(&self, sigma: &GraphMap) -> Option<usize> {
        let m = DecMorphism {
            gmap: sigma.clone(),
            fam: self.elements[0].fam.clone(),
        };
        self.index_of(&m)
    }

    /// Action of every element on `elements` as image indices, sorted.
    /// `None` if some image falls outside the list.
    pub fn truncated_action(&self, elements: &[CrWord]) -> Option<Vec<Vec<usize>>> {
        let index: HashMap<&CrWord, usize> =
            elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut maps = self
            .elements
            .iter()
            .map(|m| {
                elements
                    .iter()
                    .map(|e| index.get(&m.apply(e)).copied())
                    .collect::<Option<Vec<usize>>>()
            })
            .collect::<Option<Vec<_>>>()?;
        maps.sort();
        Some(maps)
    }

    /// `1 → K → A → Aut(G)` with isomorphism names.
    pub fn sequence(&self) -> String {
        format!(
            "1 → {} → {} → {}",
            self.kernel_group().iso_name(),
            self.group.iso_name(),
            self.graph_aut.iso_name()
        )
    }

    pub fn summary(&self) -> String {
        let image = if self.image.len() == 1 {
            "image in the graph automorphism group trivial".to_string()
        } else {
            format!(
                "image in the graph automorphism group of order {} ({})",
                self.image.len(),
                self.image_group().iso_name()
            )
        };
        let exact = if self.is_surjective() {
            "short exact"
        } else {
            "not surjective onto the graph automorphisms"
        };
        format!(
            "order {}; sequence {}; {}; {}",
            self.order(),
            self.sequence(),
            image,
            exact
        )
    }
}

/// Vertex colours: equal iff the decorations are isomorphic.
fn decoration_types(dg: &DecGraph) -> Vec<usize> {
    let mut reps: Vec<&FinGroup> = Vec::new();
    dg.decorations()
        .iter()
        .map(|g| match reps.iter().position(|r| r.is_isomorphic(g)) {
            Some(i) => i,
            None => {
                reps.push(g);
                reps.len() - 1
            }
        })
        .collect()
}

/// All isomorphisms `a → b`, sorted.
fn isomorphisms(a: &FinGroup, b: &FinGroup) -> Vec<GroupMap> {
    if a.order() != b.order() {
        return Vec::new();
    }
    let mut all: Vec<GroupMap> = a.injective_homs(b);
    all.sort();
    all
}

pub fn aut_group(dg: &DecGraph, limits: &SearchLimits) -> Result<AutGroupResult> {
    let g = dg.graph();
    let dec = dg.decorations();
    let colours = decoration_types(dg);
    let sigmas = automorphisms_colored(g, &colours, limits)?;
    let mut elements: Vec<DecMorphism> = Vec::new();
    let mut iso_cache: HashMap<(usize, usize), Vec<GroupMap>> = HashMap::new();
    for sigma in &sigmas {
        let choices: Vec<Vec<GroupMap>> = (0..g.vertex_count())
            .map(|v| {
                let w = sigma.apply(v);
                iso_cache
                    .entry((v, w))
                    .or_insert_with(|| isomorphisms(&dec[v], &dec[w]))
                    .clone()
            })
            .collect();
        let count = choices
            .iter()
            .try_fold(1usize, |acc, c| acc.checked_mul(c.len()))
            .unwrap_or(usize::MAX);
        if elements.len().saturating_add(count) > MAX_AUT_ELEMENTS {
            return Err(Error::EnumerationLimit(format!(
                "automorphism group has more than {MAX_AUT_ELEMENTS} elements"
            )));
        }
        if count == 0 {
            continue;
        }
        let mut pick = vec![0usize; choices.len()];
        loop {
            elements.push(DecMorphism {
                gmap: sigma.clone(),
                fam: pick
                    .iter()
                    .zip(&choices)
                    .map(|(&i, c)| c[i].clone())
                    .collect(),
            });
            // odometer, last vertex fastest
            let mut i = pick.len();
            let done = loop {
                if i == 0 {
                    break true;
                }
                i -= 1;
                pick[i] += 1;
                if pick[i] < choices[i].len() {
                    break false;
                }
                pick[i] = 0;
            };
            if done {
                break;
            }
        }
    }
    elements.sort();
    debug_assert!(elements.first().is_some_and(DecMorphism::is_identity));
    let index: HashMap<&DecMorphism, usize> =
        elements.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let table: Vec<Vec<usize>> = elements
        .iter()
        .map(|a| {
            elements
                .iter()
                .map(|b| index[&a.after(b)])
                .collect()
        })
        .collect();
    let group = FinGroup::from_table(table)?;
    let kernel: Vec<usize> = (0..elements.len())
        .filter(|&i| elements[i].gmap.is_identity())
        .collect();
    let mut image: Vec<GraphMap> = elements.iter().map(|m| m.gmap.clone()).collect();
    image.dedup();
    let graph_aut = automorphism_group(g, limits)?;
    Ok(AutGroupResult {
        elements,
        group,
        kernel,
        image,
        graph_aut,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn lim() -> SearchLimits {
        SearchLimits::default()
    }

    #[test]
    fn k2_with_z2_and_z3() {
        let dec = vec![FinGroup::cyclic(2).unwrap(), FinGroup::cyclic(3).unwrap()];
        let dg = DecGraph::new(Graph::complete(2), dec).unwrap();
        let r = aut_group(&dg, &lim()).unwrap();
        assert_eq!(r.order(), 2);
        assert_eq!(r.image.len(), 1);
        assert!(!r.is_surjective());
        let m = &r.elements[1];
        assert!(m.gmap.is_identity());
        assert_eq!(m.fam[1].images, vec![0, 2, 1]);
        assert_eq!(r.sequence(), "1 → Z2 → Z2 → Z2");
        assert_eq!(r.kernel, vec![0, 1]);
    }

    #[test]
    fn uniform_decorations_split() {
        let z3 = FinGroup::cyclic(3).unwrap();
        let dg = DecGraph::uniform(Graph::path(3), &z3).unwrap();
        let r = aut_group(&dg, &lim()).unwrap();
        assert_eq!(r.order(), 16);
        assert_eq!(r.kernel.len(), 8);
        assert!(r.is_surjective());
        for s in &r.image {
            let i = r.identity_lift(s).unwrap();
            for t in &r.image {
                let j = r.identity_lift(t).unwrap();
                let st = r.identity_lift(&s.after(t)).unwrap();
                assert_eq!(r.group.mul(i, j), st);
            }
        }
    }

    #[test]
    fn path_groups_match_graph_automorphisms() {
        let z2 = FinGroup::cyclic(2).unwrap();
        for g in [Graph::complete(2), Graph::path(4), Graph::cycle(5), Graph::new(3)] {
            let n = crate::graph::automorphisms(&g, &lim()).unwrap().len();
            let r = aut_group(&DecGraph::uniform(g, &z2).unwrap(), &lim()).unwrap();
            assert_eq!(r.order(), n);
            assert_eq!(r.kernel, vec![0]);
        }
    }

    #[test]
    fn decoration_types_restrict_the_image() {
        // path a - b - c with Z2, Z3, Z2: the flip survives
        let dec = vec![
            FinGroup::cyclic(2).unwrap(),
            FinGroup::cyclic(3).unwrap(),
            FinGroup::cyclic(2).unwrap(),
        ];
        let r = aut_group(&DecGraph::new(Graph::path(3), dec).unwrap(), &lim()).unwrap();
        assert_eq!(r.order(), 4);
        assert!(r.is_surjective());
        // Z2, Z2, Z3: no non-trivial graph automorphism survives
        let dec = vec![
            FinGroup::cyclic(2).unwrap(),
            FinGroup::cyclic(2).unwrap(),
            FinGroup::cyclic(3).unwrap(),
        ];
        let r = aut_group(&DecGraph::new(Graph::path(3), dec).unwrap(), &lim()).unwrap();
        assert_eq!(r.order(), 2);
        assert_eq!(r.image.len(), 1);
    }
}
