//! Colimits of finite acyclic diagrams of injective group homomorphisms.
//!
//! Elements are classes of `(node, element)` pairs under the equivalence
//! generated by `x ∼ f(x)` along every arrow, with all identities identified.
//! A word is in the domain iff all its entries have representatives in one
//! common node; the product is computed there.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::PartialGroup;
use crate::error::{Error, Result};
use crate::fingroup::{FinGroup, GroupMap};

#[derive(Clone, Debug)]
pub struct Arrow {
    pub src: usize,
    pub dst: usize,
    pub map: GroupMap,
}

#[derive(Clone, Debug, Default)]
pub struct GroupDiagram {
    pub nodes: Vec<FinGroup>,
    pub arrows: Vec<Arrow>,
}

impl GroupDiagram {
    pub fn single(g: FinGroup) -> Self {
        GroupDiagram {
            nodes: vec![g],
            arrows: Vec::new(),
        }
    }

    /// Inside the dihedral group of order 8 (`x⁴ = t² = 1`, `txt = x⁻¹`):
    /// the diagram `V ← Z → V′` with `Z = ⟨x²⟩`, `V = ⟨x², t⟩` and
    /// `V′ = ⟨x², xt⟩`. Nodes are `[Z, V, V′]`, labelled as in the ambient
    /// group.
    pub fn dihedral_amalgam() -> Self {
        let d8 = FinGroup::dihedral8();
        let x = 1;
        let t = 4;
        let x2 = d8.mul(x, x);
        let xt = d8.mul(x, t);
        let sub = |gens: &[usize]| {
            d8.subgroup(&d8.subgroup_closure(gens))
                .expect("closures are subgroups")
        };
        let (z, z_in) = sub(&[x2]);
        let (v, v_in) = sub(&[x2, t]);
        let (w, w_in) = sub(&[x2, xt]);
        let through = |inner: &GroupMap, outer: &GroupMap| GroupMap {
            images: inner
                .images
                .iter()
                .map(|y| outer.images.iter().position(|o| o == y).expect("Z ⊂ V, V′"))
                .collect(),
        };
        let to_v = through(&z_in, &v_in);
        let to_w = through(&z_in, &w_in);
        GroupDiagram {
            nodes: vec![z, v, w],
            arrows: vec![
                Arrow {
                    src: 0,
                    dst: 1,
                    map: to_v,
                },
                Arrow {
                    src: 0,
                    dst: 2,
                    map: to_w,
                },
            ],
        }
    }

    fn validate(&self) -> Result<()> {
        if self.nodes.is_empty() {
            return Err(Error::Diagram("diagram has no nodes".into()));
        }
        let n = self.nodes.len();
        for (k, a) in self.arrows.iter().enumerate() {
            if a.src >= n || a.dst >= n {
                return Err(Error::Diagram(format!("arrow {k} names a missing node")));
            }
            let (s, d) = (&self.nodes[a.src], &self.nodes[a.dst]);
            if !a.map.is_homomorphism(s, d) {
                return Err(Error::Diagram(format!("arrow {k} is not a homomorphism")));
            }
            if !a.map.is_injective() {
                return Err(Error::Diagram(format!("arrow {k} is not injective")));
            }
        }
        // Kahn's algorithm for acyclicity
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.dst] += 1;
        }
        let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut done = 0;
        while let Some(v) = ready.pop() {
            done += 1;
            for a in self.arrows.iter().filter(|a| a.src == v) {
                indeg[a.dst] -= 1;
                if indeg[a.dst] == 0 {
                    ready.push(a.dst);
                }
            }
        }
        if done != n {
            return Err(Error::Diagram("diagram has a cycle".into()));
        }
        Ok(())
    }
}

/// An element of a colimit handle. Class 0 is the unit; the other classes
/// are numbered in order of their least `(node, element)` representative.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassId(pub usize);

impl fmt::Debug for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Clone, Debug)]
pub struct ColimitHandle {
    diagram: GroupDiagram,
    class_of: Vec<Vec<usize>>,
    /// `rep[class][node]`: the element of `node` in the class, if any.
    rep: Vec<Vec<Option<usize>>>,
    inverse: Vec<usize>,
    names: Vec<String>,
}

pub fn colimit_of_groups(diagram: GroupDiagram) -> Result<ColimitHandle> {
    diagram.validate()?;
    let offsets: Vec<usize> = diagram
        .nodes
        .iter()
        .scan(0, |acc, g| {
            let o = *acc;
            *acc += g.order();
            Some(o)
        })
        .collect();
    let total: usize = diagram.nodes.iter().map(FinGroup::order).sum();
    let mut uf = UnionFind::new(total);
    for &o in &offsets {
        uf.union(0, o);
    }
    for a in &diagram.arrows {
        for (x, &y) in a.map.images.iter().enumerate() {
            uf.union(offsets[a.src] + x, offsets[a.dst] + y);
        }
    }
    // number classes by least flat index; flat 0 is the identity of node 0
    let mut class_of_root: BTreeMap<usize, usize> = BTreeMap::new();
    let mut class_of: Vec<Vec<usize>> = Vec::with_capacity(diagram.nodes.len());
    for (node, g) in diagram.nodes.iter().enumerate() {
        let mut row = Vec::with_capacity(g.order());
        for x in g.elements() {
            let root = uf.find(offsets[node] + x);
            let next = class_of_root.len();
            row.push(*class_of_root.entry(root).or_insert(next));
        }
        class_of.push(row);
    }
    let classes = class_of_root.len();
    let mut rep = vec![vec![None; diagram.nodes.len()]; classes];
    for (node, row) in class_of.iter().enumerate() {
        for (x, &c) in row.iter().enumerate() {
            match rep[c][node] {
                None => rep[c][node] = Some(x),
                Some(y) => {
                    return Err(Error::Diagram(format!(
                        "elements {y} and {x} of node {node} become identified; \
                         only diagrams whose nodes embed in the colimit are supported"
                    )))
                }
            }
        }
    }
    let inverse: Vec<usize> = (0..classes)
        .map(|c| {
            let (node, x) = first_rep(&rep[c]);
            class_of[node][diagram.nodes[node].inv(x)]
        })
        .collect();
    let mut names: Vec<String> = (0..classes)
        .map(|c| {
            let (node, x) = first_rep(&rep[c]);
            diagram.nodes[node].label(x)
        })
        .collect();
    let distinct: BTreeSet<&String> = names.iter().collect();
    if distinct.len() != names.len() {
        names = (0..classes)
            .map(|c| {
                let (node, x) = first_rep(&rep[c]);
                format!("{node}:{}", diagram.nodes[node].label(x))
            })
            .collect();
    }
    Ok(ColimitHandle {
        diagram,
        class_of,
        rep,
        inverse,
        names,
    })
}

fn first_rep(reps: &[Option<usize>]) -> (usize, usize) {
    reps.iter()
        .enumerate()
        .find_map(|(node, r)| r.map(|x| (node, x)))
        .expect("every class has a representative")
}

impl ColimitHandle {
    pub fn diagram(&self) -> &GroupDiagram {
        &self.diagram
    }

    pub fn class_count(&self) -> usize {
        self.rep.len()
    }

    pub fn class_of(&self, node: usize, elem: usize) -> Option<ClassId> {
        self.class_of.get(node)?.get(elem).map(|&c| ClassId(c))
    }

    pub fn class_by_name(&self, name: &str) -> Option<ClassId> {
        self.names.iter().position(|n| n == name).map(ClassId)
    }

    /// The nodes in which every entry of `w` has a representative.
    pub fn witnesses(&self, w: &[ClassId]) -> Vec<usize> {
        (0..self.diagram.nodes.len())
            .filter(|&node| w.iter().all(|c| self.rep[c.0][node].is_some()))
            .collect()
    }

    /// Product of `w` evaluated inside `node`, if `node` witnesses `w`.
    pub fn product_in(&self, node: usize, w: &[ClassId]) -> Option<ClassId> {
        let g = &self.diagram.nodes[node];
        let mut acc = 0;
        for c in w {
            acc = g.mul(acc, self.rep[c.0][node]?);
        }
        Some(ClassId(self.class_of[node][acc]))
    }
}

impl PartialGroup for ColimitHandle {
    type Elem = ClassId;

    fn unit(&self) -> ClassId {
        ClassId(0)
    }

    fn contains(&self, e: &ClassId) -> bool {
        e.0 < self.rep.len()
    }

    fn try_product(&self, w: &[ClassId]) -> Option<ClassId> {
        (0..self.diagram.nodes.len()).find_map(|node| self.product_in(node, w))
    }

    fn inverse(&self, e: &ClassId) -> ClassId {
        ClassId(self.inverse[e.0])
    }

    fn elements(&self, max_size: usize) -> Vec<ClassId> {
        if max_size == 0 {
            vec![ClassId(0)]
        } else {
            (0..self.rep.len()).map(ClassId).collect()
        }
    }

    fn describe(&self) -> String {
        format!(
            "colimit of {} groups along {} injections ({} elements)",
            self.diagram.nodes.len(),
            self.diagram.arrows.len(),
            self.rep.len()
        )
    }

    fn format_elem(&self, e: &ClassId) -> String {
        self.names[e.0].clone()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        // keep the smaller index as root
        if ra < rb {
            self.parent[rb] = ra;
        } else {
            self.parent[ra] = rb;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partial::{check_axioms, from_group, Bounds};

    fn amalgam() -> ColimitHandle {
        colimit_of_groups(GroupDiagram::dihedral_amalgam()).unwrap()
    }

    #[test]
    fn single_node_is_the_group() {
        let s3 = FinGroup::symmetric3();
        let c = colimit_of_groups(GroupDiagram::single(s3.clone())).unwrap();
        let g = from_group(s3.clone());
        assert_eq!(c.class_count(), 6);
        for x in s3.elements() {
            for y in s3.elements() {
                let p = c.product(&[ClassId(x), ClassId(y)]).unwrap();
                assert_eq!(p, ClassId(g.product(&[x, y]).unwrap()));
            }
        }
    }

    #[test]
    fn amalgam_domain() {
        let m = amalgam();
        // 4 + 4 - 2 shared classes
        assert_eq!(m.class_count(), 6);
        let x2 = m.class_by_name("x2").unwrap();
        let t = m.class_by_name("t").unwrap();
        let d8 = FinGroup::dihedral8();
        let tx = m.class_by_name(&d8.label(d8.mul(4, 1))).unwrap();
        assert!(m.in_domain(&[x2, x2]));
        assert_eq!(m.product(&[x2, x2]).unwrap(), m.unit());
        assert!(!m.in_domain(&[t, tx]));
        assert_eq!(m.witnesses(&[x2]).len(), 3);
    }

    #[test]
    fn products_do_not_depend_on_the_witness() {
        let m = amalgam();
        let elems = m.elements(1);
        let mut checked = 0;
        for a in &elems {
            for b in &elems {
                for c in &elems {
                    let w = [*a, *b, *c];
                    let ps: BTreeSet<_> = m
                        .witnesses(&w)
                        .into_iter()
                        .map(|n| m.product_in(n, &w).unwrap())
                        .collect();
                    assert!(ps.len() <= 1);
                    checked += 1;
                }
            }
        }
        assert_eq!(checked, 216);
    }

    #[test]
    fn amalgam_satisfies_the_axioms() {
        let r = check_axioms(&amalgam(), &Bounds::default());
        assert!(r.all_passed(), "{:?}", r.violations);
        assert!(r.complete);
    }

    #[test]
    fn bad_diagrams_rejected() {
        let z2 = FinGroup::cyclic(2).unwrap();
        let z4 = FinGroup::cyclic(4).unwrap();
        let not_injective = GroupDiagram {
            nodes: vec![z4.clone(), z2.clone()],
            arrows: vec![Arrow {
                src: 0,
                dst: 1,
                map: GroupMap {
                    images: vec![0, 1, 0, 1],
                },
            }],
        };
        assert!(colimit_of_groups(not_injective).is_err());
        let cyclic = GroupDiagram {
            nodes: vec![z2.clone(), z2.clone()],
            arrows: vec![
                Arrow {
                    src: 0,
                    dst: 1,
                    map: GroupMap::identity(2),
                },
                Arrow {
                    src: 1,
                    dst: 0,
                    map: GroupMap::identity(2),
                },
            ],
        };
        assert!(colimit_of_groups(cyclic).is_err());
        // two different embeddings Z2 → V4 collapse V4
        let v4 = FinGroup::klein_four();
        let collapsing = GroupDiagram {
            nodes: vec![z2, v4],
            arrows: vec![
                Arrow {
                    src: 0,
                    dst: 1,
                    map: GroupMap { images: vec![0, 1] },
                },
                Arrow {
                    src: 0,
                    dst: 1,
                    map: GroupMap { images: vec![0, 2] },
                },
            ],
        };
        assert!(matches!(colimit_of_groups(collapsing), Err(Error::Diagram(_))));
    }
}
