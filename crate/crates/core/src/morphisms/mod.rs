//! Morphisms of decorated graphs, the partial-group homomorphisms they
//! induce, and automorphism groups computed two independent ways.

mod aut;
mod oracle;

use crate::decpart::{DecGraph, MgHandle};
use crate::error::{Error, Result};
use crate::fingroup::GroupMap;
use crate::graph::GraphMap;
use crate::partial::{for_each_domain_word, Bounds, PartialGroup};
use crate::words::{CrWord, Letter, Word};

pub use aut::{aut_group, AutGroupResult, MAX_AUT_ELEMENTS};
pub use oracle::{brute_aut_truncated, OracleLimits, TruncatedAuts};

/// A graph homomorphism together with an injective homomorphism
/// `H_v → H'_{gmap(v)}` for every vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DecMorphism {
    pub gmap: GraphMap,
    pub fam: Vec<GroupMap>,
}

impl DecMorphism {
    pub fn identity(dg: &DecGraph) -> Self {
        DecMorphism {
            gmap: GraphMap::identity(dg.graph().vertex_count()),
            fam: dg
                .decorations()
                .iter()
                .map(|g| GroupMap::identity(g.order()))
                .collect(),
        }
    }

    pub fn validate(&self, source: &DecGraph, target: &DecGraph) -> Result<()> {
        let n = source.graph().vertex_count();
        if self.fam.len() != n {
            return Err(Error::Morphism(format!(
                "{} group maps for {n} vertices",
                self.fam.len()
            )));
        }
        if !self.gmap.is_homomorphism(source.graph(), target.graph()) {
            return Err(Error::Morphism("vertex map is not a graph homomorphism".into()));
        }
        for v in 0..n {
            let (s, t) = (source.decoration(v), target.decoration(self.gmap.apply(v)));
            if !self.fam[v].is_homomorphism(s, t) {
                return Err(Error::Morphism(format!(
                    "map at vertex {} is not a group homomorphism",
                    source.graph().label(v)
                )));
            }
            if !self.fam[v].is_injective() {
                return Err(Error::Morphism(format!(
                    "map at vertex {} is not injective",
                    source.graph().label(v)
                )));
            }
        }
        Ok(())
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &DecMorphism) -> DecMorphism {
        DecMorphism {
            gmap: self.gmap.after(&first.gmap),
            fam: first
                .fam
                .iter()
                .enumerate()
                .map(|(v, f)| self.fam[first.gmap.apply(v)].after(f))
                .collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.gmap.is_identity() && self.fam.iter().all(GroupMap::is_identity)
    }

    /// Letterwise image `(v, g) ↦ (gmap(v), fam_v(g))`.
    pub fn apply(&self, w: &CrWord) -> CrWord {
        let letters = w
            .letters()
            .iter()
            .map(|l| {
                Letter::new_unchecked(self.gmap.apply(l.vertex()), self.fam[l.vertex()].apply(l.elem()))
            })
            .collect();
        CrWord::new_unchecked(Word::new(letters))
    }
}

type ElemMap<'a, S, T> =
    Box<dyn Fn(&<S as PartialGroup>::Elem) -> <T as PartialGroup>::Elem + 'a>;

/// A map between the elements of two partial groups, to be checked
/// against H1 (domain words go to domain words) and H2 (products are
/// preserved).
pub struct PartialHom<'a, S: PartialGroup, T: PartialGroup> {
    pub source: &'a S,
    pub target: &'a T,
    map: ElemMap<'a, S, T>,
}

impl<'a, S: PartialGroup, T: PartialGroup> PartialHom<'a, S, T> {
    pub fn new(source: &'a S, target: &'a T, map: impl Fn(&S::Elem) -> T::Elem + 'a) -> Self {
        PartialHom {
            source,
            target,
            map: Box::new(map),
        }
    }

    pub fn apply(&self, e: &S::Elem) -> T::Elem {
        (self.map)(e)
    }

    pub fn apply_word(&self, w: &[S::Elem]) -> Vec<T::Elem> {
        w.iter().map(|e| self.apply(e)).collect()
    }
}

/// The homomorphism induced by a decorated-graph morphism. The morphism is
/// validated first.
pub fn induced_hom<'a>(
    m: &DecMorphism,
    source: &'a MgHandle,
    target: &'a MgHandle,
) -> Result<PartialHom<'a, MgHandle, MgHandle>> {
    m.validate(source.decgraph(), target.decgraph())?;
    let m = m.clone();
    Ok(PartialHom::new(source, target, move |w| m.apply(w)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomCondition {
    /// Domain words map to domain words.
    H1,
    /// `Π₂(φ̄(u)) = φ(Π₁(u))`.
    H2,
}

#[derive(Clone, Debug)]
pub struct HomViolation<E> {
    pub condition: HomCondition,
    pub word: Vec<E>,
    pub detail: String,
}

impl<E> HomViolation<E> {
    /// Re-evaluates the condition on the recorded word; true if it still
    /// fails.
    pub fn replays<S, T>(&self, f: &PartialHom<'_, S, T>) -> bool
    where
        S: PartialGroup<Elem = E>,
        T: PartialGroup,
    {
        let image = f.apply_word(&self.word);
        match self.condition {
            HomCondition::H1 => f.source.in_domain(&self.word) && !f.target.in_domain(&image),
            HomCondition::H2 => match f.source.try_product(&self.word) {
                Some(p) => f.target.try_product(&image) != Some(f.apply(&p)),
                None => false,
            },
        }
    }
}

#[derive(Clone, Debug)]
pub struct HomReport<E> {
    pub words_checked: usize,
    pub complete: bool,
    pub violation: Option<HomViolation<E>>,
}

impl<E> HomReport<E> {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks H1 and H2 on the empty word and on every non-degenerate domain
/// word within `bounds`; stops at the first violation.
pub fn check_hom<S: PartialGroup, T: PartialGroup>(
    f: &PartialHom<'_, S, T>,
    bounds: &Bounds,
) -> HomReport<S::Elem> {
    let src = f.source;
    let tgt = f.target;
    let unit = src.unit();
    let elems: Vec<S::Elem> = src
        .elements(bounds.max_elem_size)
        .into_iter()
        .filter(|e| *e != unit)
        .collect();
    let mut violation: Option<HomViolation<S::Elem>> = None;
    let mut checked = 0usize;
    let mut check = |w: &[S::Elem]| {
        if violation.is_some() {
            return;
        }
        checked += 1;
        let Some(p) = src.try_product(w) else {
            return;
        };
        let image = f.apply_word(w);
        match tgt.try_product(&image) {
            None => {
                violation = Some(HomViolation {
                    condition: HomCondition::H1,
                    word: w.to_vec(),
                    detail: format!(
                        "{} ∈ D but its image {} is not",
                        src.format_word(w),
                        tgt.format_word(&image)
                    ),
                })
            }
            Some(q) => {
                let fp = f.apply(&p);
                if q != fp {
                    violation = Some(HomViolation {
                        condition: HomCondition::H2,
                        word: w.to_vec(),
                        detail: format!(
                            "Π({}) = {} but Π of the image is {}",
                            src.format_word(w),
                            tgt.format_elem(&fp),
                            tgt.format_elem(&q)
                        ),
                    })
                }
            }
        }
    };
    check(&[]);
    let complete = for_each_domain_word(
        src,
        &elems,
        bounds.max_word_len,
        bounds.max_domain_words,
        &mut check,
    );
    HomReport {
        words_checked: checked,
        complete,
        violation,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decpart::{build, path_partial};
    use crate::fingroup::FinGroup;
    use crate::graph::Graph;

    fn named(g: Graph, names: &[&str]) -> Graph {
        g.with_labels(names.iter().map(|s| s.to_string()).collect())
            .unwrap()
    }

    fn k2_z2z3() -> MgHandle {
        let dec = vec![FinGroup::cyclic(2).unwrap(), FinGroup::cyclic(3).unwrap()];
        build(DecGraph::new(named(Graph::complete(2), &["a", "b"]), dec).unwrap())
    }

    #[test]
    fn induced_maps_act_letterwise() {
        let m = k2_z2z3();
        let id = DecMorphism::identity(m.decgraph());
        let f = induced_hom(&id, &m, &m).unwrap();
        for e in m.elements(4) {
            assert_eq!(f.apply(&e), e);
        }
        let square_b = DecMorphism {
            gmap: GraphMap::identity(2),
            fam: vec![GroupMap::identity(2), GroupMap { images: vec![0, 2, 1] }],
        };
        let f = induced_hom(&square_b, &m, &m).unwrap();
        let ab = m.parse_elem("a b").unwrap();
        assert_eq!(m.format_elem(&f.apply(&ab)), "a b.2");
        assert!(check_hom(&f, &Bounds::default()).passed());

        let p = path_partial(named(Graph::complete(2), &["a", "b"]));
        let swap = DecMorphism {
            gmap: GraphMap { vmap: vec![1, 0] },
            fam: vec![GroupMap::identity(2); 2],
        };
        let f = induced_hom(&swap, &p, &p).unwrap();
        let w = p.parse_elem("a b a b").unwrap();
        assert_eq!(p.format_elem(&f.apply(&w)), "b a b a");
    }

    #[test]
    fn invalid_morphisms_rejected() {
        let m = k2_z2z3();
        let not_injective = DecMorphism {
            gmap: GraphMap::identity(2),
            fam: vec![GroupMap::identity(2), GroupMap { images: vec![0, 0, 0] }],
        };
        assert!(induced_hom(&not_injective, &m, &m).is_err());
        let p3 = path_partial(Graph::path(3));
        let fold_edge = DecMorphism {
            gmap: GraphMap { vmap: vec![0, 0, 1] },
            fam: vec![GroupMap::identity(2); 3],
        };
        assert!(induced_hom(&fold_edge, &p3, &p3).is_err());
    }

    #[test]
    fn swapping_ends_of_a_path_breaks_the_domain() {
        // a - b - c with b and c exchanged letterwise: not a graph map
        let p = path_partial(named(Graph::path(3), &["a", "b", "c"]));
        let f = PartialHom::new(&p, &p, |w: &CrWord| {
            let letters = w
                .letters()
                .iter()
                .map(|l| Letter::new_unchecked([0, 2, 1][l.vertex()], l.elem()))
                .collect();
            CrWord::new_unchecked(Word::new(letters))
        });
        let r = check_hom(&f, &Bounds::default());
        let v = r.violation.unwrap();
        assert_eq!(v.condition, HomCondition::H1);
        assert!(v.replays(&f));
        let ab = HomViolation {
            condition: HomCondition::H1,
            word: p.parse_sequence("a | b").unwrap(),
            detail: String::new(),
        };
        assert!(ab.replays(&f));
    }

    #[test]
    fn collapsing_one_letter_breaks_products() {
        let m = k2_z2z3();
        let b = m.parse_elem("b").unwrap();
        let f = PartialHom::new(&m, &m, |w: &CrWord| {
            if *w == b {
                CrWord::empty()
            } else {
                w.clone()
            }
        });
        let r = check_hom(&f, &Bounds::default());
        let v = r.violation.unwrap();
        assert_eq!(v.condition, HomCondition::H2);
        assert!(v.replays(&f));
        let witness = |s: &str| HomViolation {
            condition: HomCondition::H2,
            word: m.parse_sequence(s).unwrap(),
            detail: String::new(),
        };
        // Π(b, b) = b² is fixed, but the image word multiplies to the unit
        assert!(witness("b | b").replays(&f));
        // b³ = 1 on both sides
        assert!(!witness("b | b | b").replays(&f));
    }

    #[test]
    fn induced_homs_are_functorial() {
        let p = path_partial(Graph::path(3));
        let flip = DecMorphism {
            gmap: GraphMap { vmap: vec![2, 1, 0] },
            fam: vec![GroupMap::identity(2); 3],
        };
        let id = DecMorphism::identity(p.decgraph());
        let twice = flip.after(&flip);
        assert_eq!(twice, id);
        let f = induced_hom(&flip, &p, &p).unwrap();
        let ff = induced_hom(&twice, &p, &p).unwrap();
        for e in p.elements(5) {
            assert_eq!(ff.apply(&e), f.apply(&f.apply(&e)));
        }
    }
}
