//! Partial groups as intensional handles: a membership test, a domain test,
//! a product on domain words, an inversion, and bounded enumeration of
//! elements. Nothing here ever materialises the (usually infinite) domain.

mod axioms;
mod colimit;
mod group;
mod subgroup;

use std::fmt::Debug;
use std::hash::Hash;

use crate::error::{Error, Result};

pub use axioms::{
    check_axioms, domain_words, for_each_domain_word, Axiom, AxiomReport, Bounds, Check,
    DomainWords, Violation,
};
pub use colimit::{colimit_of_groups, Arrow, ClassId, ColimitHandle, GroupDiagram};
pub use group::{free_on_one, from_group, FreeElem, FreeOnOne, GroupHandle};
pub use subgroup::{induced_group, is_subgroup, subgroup_closure, SubgroupRecord};

/// A partial group `(M, D, Π, (−)⁻¹)`.
///
/// Implementors provide [`try_product`](PartialGroup::try_product), which
/// returns `None` exactly on words outside the domain `D`.
pub trait PartialGroup {
    type Elem: Clone + Eq + Ord + Hash + Debug;

    fn unit(&self) -> Self::Elem;

    fn contains(&self, e: &Self::Elem) -> bool;

    /// `Π(w)` if `w ∈ D`, else `None`. Entries must satisfy `contains`.
    fn try_product(&self, w: &[Self::Elem]) -> Option<Self::Elem>;

    fn inverse(&self, e: &Self::Elem) -> Self::Elem;

    /// All elements of size at most `max_size`, each once, in a fixed order
    /// starting with the unit.
    fn elements(&self, max_size: usize) -> Vec<Self::Elem>;

    /// Size used for enumeration bounds (word length for word-based
    /// handles). The unit has size 0.
    fn size(&self, e: &Self::Elem) -> usize {
        usize::from(*e != self.unit())
    }

    fn describe(&self) -> String;

    fn format_elem(&self, e: &Self::Elem) -> String {
        format!("{e:?}")
    }

    /// Reads an element back from its [`format_elem`](PartialGroup::format_elem)
    /// text. The default searches the elements of size at most 8.
    fn parse_elem_text(&self, s: &str) -> Result<Self::Elem> {
        let s = s.trim();
        self.elements(8)
            .into_iter()
            .find(|e| self.format_elem(e) == s)
            .ok_or_else(|| Error::NotAnElement(s.to_string()))
    }

    /// Elements separated by `|`; the empty string is the empty word.
    fn parse_word_text(&self, s: &str) -> Result<Vec<Self::Elem>> {
        if s.trim().is_empty() {
            return Ok(Vec::new());
        }
        s.split('|').map(|part| self.parse_elem_text(part)).collect()
    }

    fn in_domain(&self, w: &[Self::Elem]) -> bool {
        self.try_product(w).is_some()
    }

    fn product(&self, w: &[Self::Elem]) -> Result<Self::Elem> {
        self.try_product(w)
            .ok_or_else(|| Error::NotInDomain(self.format_word(w)))
    }

    fn format_word(&self, w: &[Self::Elem]) -> String {
        let parts: Vec<String> = w.iter().map(|e| self.format_elem(e)).collect();
        format!("[{}]", parts.join(" | "))
    }

    /// `u⁻¹`: entries reversed and inverted.
    fn invert_word(&self, w: &[Self::Elem]) -> Vec<Self::Elem> {
        w.iter().rev().map(|e| self.inverse(e)).collect()
    }
}

impl<P: PartialGroup + ?Sized> PartialGroup for &P {
    type Elem = P::Elem;
    fn unit(&self) -> Self::Elem {
        (**self).unit()
    }
    fn contains(&self, e: &Self::Elem) -> bool {
        (**self).contains(e)
    }
    fn try_product(&self, w: &[Self::Elem]) -> Option<Self::Elem> {
        (**self).try_product(w)
    }
    fn inverse(&self, e: &Self::Elem) -> Self::Elem {
        (**self).inverse(e)
    }
    fn elements(&self, max_size: usize) -> Vec<Self::Elem> {
        (**self).elements(max_size)
    }
    fn size(&self, e: &Self::Elem) -> usize {
        (**self).size(e)
    }
    fn describe(&self) -> String {
        (**self).describe()
    }
    fn format_elem(&self, e: &Self::Elem) -> String {
        (**self).format_elem(e)
    }
    fn parse_elem_text(&self, s: &str) -> Result<Self::Elem> {
        (**self).parse_elem_text(s)
    }
    fn in_domain(&self, w: &[Self::Elem]) -> bool {
        (**self).in_domain(w)
    }
}

/// Wraps a handle and replaces the product of one specific word. Used as a
/// negative control for the axiom checker.
#[derive(Clone, Debug)]
pub struct CorruptedProduct<P: PartialGroup> {
    pub base: P,
    pub word: Vec<P::Elem>,
    pub image: P::Elem,
}

impl<P: PartialGroup> PartialGroup for CorruptedProduct<P> {
    type Elem = P::Elem;

    fn unit(&self) -> Self::Elem {
        self.base.unit()
    }
    fn contains(&self, e: &Self::Elem) -> bool {
        self.base.contains(e)
    }
    fn try_product(&self, w: &[Self::Elem]) -> Option<Self::Elem> {
        let p = self.base.try_product(w)?;
        if w == self.word.as_slice() {
            Some(self.image.clone())
        } else {
            Some(p)
        }
    }
    fn inverse(&self, e: &Self::Elem) -> Self::Elem {
        self.base.inverse(e)
    }
    fn elements(&self, max_size: usize) -> Vec<Self::Elem> {
        self.base.elements(max_size)
    }
    fn size(&self, e: &Self::Elem) -> usize {
        self.base.size(e)
    }
    fn describe(&self) -> String {
        format!(
            "{} with the product of {} replaced by {}",
            self.base.describe(),
            self.base.format_word(&self.word),
            self.base.format_elem(&self.image)
        )
    }
    fn parse_elem_text(&self, s: &str) -> Result<Self::Elem> {
        self.base.parse_elem_text(s)
    }
    fn format_elem(&self, e: &Self::Elem) -> String {
        self.base.format_elem(e)
    }
}
