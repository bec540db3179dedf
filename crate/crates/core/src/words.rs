//! Words in a free product of finite groups indexed by vertices.
//!
//! A [`Letter`] is a non-identity element of the group decorating a vertex.
//! A [`Word`] is any finite sequence of letters; [`reduce`] computes its
//! normal form in the free product. [`CrWord`] is a word that has been
//! checked to be cyclically reduced.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::fingroup::FinGroup;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    vertex: usize,
    elem: usize,
}

impl Letter {
    /// Rejects the identity element; range checks need the decoration and
    /// happen in [`validate`].
    pub fn new(vertex: usize, elem: usize) -> Result<Self> {
        if elem == 0 {
            return Err(Error::IdentityLetter(vertex));
        }
        Ok(Letter { vertex, elem })
    }

    #[inline]
    pub(crate) fn new_unchecked(vertex: usize, elem: usize) -> Self {
        debug_assert!(elem != 0);
        Letter { vertex, elem }
    }

    #[inline]
    pub fn vertex(self) -> usize {
        self.vertex
    }

    #[inline]
    pub fn elem(self) -> usize {
        self.elem
    }
}

#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Concatenation `self ∘ other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

/// Checks that every letter names a vertex with a decoration and a valid
/// non-identity element of it.
pub fn validate(w: &Word, dec: &[FinGroup]) -> Result<()> {
    for l in w.letters() {
        let g = dec
            .get(l.vertex)
            .ok_or_else(|| Error::UnknownVertex(l.vertex.to_string()))?;
        if l.elem == 0 {
            return Err(Error::IdentityLetter(l.vertex));
        }
        if l.elem >= g.order() {
            return Err(Error::ElemOutOfRange {
                vertex: l.vertex,
                elem: l.elem,
                order: g.order(),
            });
        }
    }
    Ok(())
}

/// Pushes `l` onto a reduced stack, merging with the top letter when they
/// share a vertex.
#[inline]
pub(crate) fn push_reduced(stack: &mut Vec<Letter>, l: Letter, dec: &[FinGroup]) {
    match stack.last_mut() {
        Some(top) if top.vertex == l.vertex => {
            let m = dec[l.vertex].mul(top.elem, l.elem);
            if m == 0 {
                stack.pop();
            } else {
                top.elem = m;
            }
        }
        _ => stack.push(l),
    }
}

/// Normal form of `w` in the free product of the decorations.
pub fn reduce(w: &Word, dec: &[FinGroup]) -> Result<Word> {
    validate(w, dec)?;
    Ok(reduce_unchecked(w.letters().iter().copied(), dec))
}

pub(crate) fn reduce_unchecked(letters: impl IntoIterator<Item = Letter>, dec: &[FinGroup]) -> Word {
    let mut stack = Vec::new();
    for l in letters {
        push_reduced(&mut stack, l, dec);
    }
    Word(stack)
}

/// No two consecutive letters share a vertex.
pub fn is_reduced(w: &Word) -> bool {
    is_reduced_slice(w.letters())
}

pub(crate) fn is_reduced_slice(w: &[Letter]) -> bool {
    w.windows(2).all(|p| p[0].vertex != p[1].vertex)
}

/// Every cyclic permutation is reduced. For a reduced word this is the
/// same as: length at most one, or first and last vertices differ.
pub fn is_cyclically_reduced(w: &Word) -> bool {
    is_cyclically_reduced_slice(w.letters())
}

pub(crate) fn is_cyclically_reduced_slice(w: &[Letter]) -> bool {
    is_reduced_slice(w) && (w.len() <= 1 || w[0].vertex != w[w.len() - 1].vertex)
}

/// Reverses `w` and inverts each letter.
pub fn invert(w: &Word, dec: &[FinGroup]) -> Result<Word> {
    validate(w, dec)?;
    Ok(invert_unchecked(w, dec))
}

pub(crate) fn invert_unchecked(w: &Word, dec: &[FinGroup]) -> Word {
    Word(
        w.0.iter()
            .rev()
            .map(|l| Letter::new_unchecked(l.vertex, dec[l.vertex].inv(l.elem)))
            .collect(),
    )
}

/// Vertices occurring in `w`.
pub fn support(w: &Word) -> BTreeSet<usize> {
    w.letters().iter().map(|l| l.vertex).collect()
}

/// A cyclically reduced word, valid for the decorations it was checked
/// against.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct CrWord(Word);

impl CrWord {
    pub fn empty() -> Self {
        CrWord(Word::empty())
    }

    /// Rejects words that are not cyclically reduced; never normalises.
    pub fn new(w: Word, dec: &[FinGroup]) -> Result<Self> {
        validate(&w, dec)?;
        if !is_cyclically_reduced(&w) {
            return Err(Error::NotCyclicallyReduced(format!("{:?}", w.letters())));
        }
        Ok(CrWord(w))
    }

    pub(crate) fn new_unchecked(w: Word) -> Self {
        debug_assert!(is_cyclically_reduced(&w));
        CrWord(w)
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn letters(&self) -> &[Letter] {
        self.0.letters()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_word(self) -> Word {
        self.0
    }
}

impl fmt::Debug for CrWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CrWord(")?;
        for (i, l) in self.letters().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}.{}", l.vertex, l.elem)?;
        }
        write!(f, ")")
    }
}

/// Shortlex: shorter words first, then lexicographic on `(vertex, elem)`.
impl Ord for CrWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters().cmp(other.letters()))
    }
}

impl PartialOrd for CrWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Parses the literal syntax `"a.1 b.2 a"`: whitespace-separated letters,
/// each a vertex label optionally followed by `.elem` (default 1). The
/// literal `()` is the empty word.
pub fn parse_word(s: &str, vertex: impl Fn(&str) -> Option<usize>) -> Result<Word> {
    let s = s.trim();
    if s.is_empty() || s == "()" {
        return Ok(Word::empty());
    }
    let mut letters = Vec::new();
    for tok in s.split_whitespace() {
        let (label, elem) = match tok.rsplit_once('.') {
            Some((l, e)) => {
                let e = e
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad element index in {tok:?}")))?;
                (l, e)
            }
            None => (tok, 1),
        };
        let v = vertex(label).ok_or_else(|| Error::UnknownVertex(label.to_string()))?;
        letters.push(Letter::new(v, elem)?);
    }
    Ok(Word(letters))
}

/// Inverse of [`parse_word`]; `.1` is omitted.
pub fn format_word(w: &[Letter], label: impl Fn(usize) -> String) -> String {
    if w.is_empty() {
        return "()".to_string();
    }
    w.iter()
        .map(|l| {
            if l.elem == 1 {
                label(l.vertex)
            } else {
                format!("{}.{}", label(l.vertex), l.elem)
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z2z3() -> Vec<FinGroup> {
        vec![FinGroup::cyclic(2).unwrap(), FinGroup::cyclic(3).unwrap()]
    }

    fn w(spec: &[(usize, usize)]) -> Word {
        Word(spec.iter().map(|&(v, e)| Letter::new(v, e).unwrap()).collect())
    }

    #[test]
    fn reduction_examples() {
        let z2 = vec![FinGroup::cyclic(2).unwrap(); 2];
        assert_eq!(reduce(&Word::empty(), &z2).unwrap(), Word::empty());
        assert_eq!(
            reduce(&w(&[(0, 1), (1, 1), (1, 1), (0, 1)]), &z2).unwrap(),
            Word::empty()
        );
        let dec = z2z3();
        assert_eq!(
            reduce(&w(&[(0, 1), (1, 1), (1, 1)]), &dec).unwrap(),
            w(&[(0, 1), (1, 2)])
        );
        assert!(matches!(
            reduce(&w(&[(2, 1)]), &dec),
            Err(Error::UnknownVertex(_))
        ));
        assert!(matches!(
            reduce(&w(&[(0, 5)]), &dec),
            Err(Error::ElemOutOfRange { .. })
        ));
        assert!(Letter::new(0, 0).is_err());
    }

    #[test]
    fn reducedness_predicates() {
        assert!(is_reduced(&Word::empty()));
        assert!(is_reduced(&w(&[(0, 1), (1, 1), (0, 1)])));
        assert!(!is_reduced(&w(&[(0, 1), (0, 1)])));
        assert!(is_cyclically_reduced(&w(&[(0, 1)])));
        assert!(!is_cyclically_reduced(&w(&[(0, 1), (1, 1), (0, 1)])));
        assert!(is_cyclically_reduced(&w(&[(0, 1), (1, 1), (0, 1), (1, 1)])));
    }

    #[test]
    fn inversion_and_support() {
        let z2 = vec![FinGroup::cyclic(2).unwrap(); 2];
        assert_eq!(invert(&Word::empty(), &z2).unwrap(), Word::empty());
        assert_eq!(invert(&w(&[(0, 1), (1, 1)]), &z2).unwrap(), w(&[(1, 1), (0, 1)]));
        assert_eq!(
            invert(&w(&[(0, 1), (1, 1)]), &z2z3()).unwrap(),
            w(&[(1, 2), (0, 1)])
        );
        assert!(support(&Word::empty()).is_empty());
        assert_eq!(support(&w(&[(0, 1), (1, 1), (0, 1), (1, 1)])), BTreeSet::from([0, 1]));
        assert_eq!(support(&w(&[(0, 1)])), BTreeSet::from([0]));
    }

    #[test]
    fn cr_word_constructor_rejects() {
        let dec = z2z3();
        assert!(CrWord::new(w(&[(1, 1), (0, 1), (1, 2)]), &dec).is_err());
        assert!(CrWord::new(w(&[(0, 1), (1, 2)]), &dec).is_ok());
    }

    #[test]
    fn literal_round_trip() {
        let labels = ["a", "b"];
        let lookup = |s: &str| labels.iter().position(|&l| l == s);
        let parsed = parse_word("a b.2 a", lookup).unwrap();
        assert_eq!(parsed, w(&[(0, 1), (1, 2), (0, 1)]));
        assert_eq!(format_word(parsed.letters(), |v| labels[v].to_string()), "a b.2 a");
        assert_eq!(parse_word("()", lookup).unwrap(), Word::empty());
        assert!(parse_word("c", lookup).is_err());
        assert!(parse_word("a.x", lookup).is_err());
        assert!(parse_word("a.0", lookup).is_err());
    }

    fn dec3() -> Vec<FinGroup> {
        vec![
            FinGroup::cyclic(2).unwrap(),
            FinGroup::cyclic(3).unwrap(),
            FinGroup::symmetric3(),
        ]
    }

    fn arb_word(max: usize) -> impl Strategy<Value = Word> {
        let orders = [2usize, 3, 6];
        prop::collection::vec(
            (0usize..3).prop_flat_map(move |v| (Just(v), 1..orders[v])),
            0..max,
        )
        .prop_map(|ls| Word(ls.into_iter().map(|(v, e)| Letter::new_unchecked(v, e)).collect()))
    }

    proptest! {
        #[test]
        fn reduce_is_idempotent_and_reduced(x in arb_word(12)) {
            let dec = dec3();
            let r = reduce(&x, &dec).unwrap();
            prop_assert!(is_reduced(&r));
            prop_assert_eq!(reduce(&r, &dec).unwrap(), r);
        }

        #[test]
        fn inverse_cancels(x in arb_word(12)) {
            let dec = dec3();
            let inv = invert(&x, &dec).unwrap();
            prop_assert!(reduce(&x.concat(&inv), &dec).unwrap().is_empty());
            prop_assert_eq!(invert(&inv, &dec).unwrap(), x);
        }

        #[test]
        fn inversion_preserves_cyclic_reduction(x in arb_word(10)) {
            let dec = dec3();
            let r = reduce(&x, &dec).unwrap();
            let ri = invert(&r, &dec).unwrap();
            prop_assert!(is_reduced(&ri));
            prop_assert_eq!(is_cyclically_reduced(&r), is_cyclically_reduced(&ri));
        }
    }
}
