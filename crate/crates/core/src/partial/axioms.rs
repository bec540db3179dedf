//! Bounded verification of the partial-group axioms.
//!
//! Domain words are enumerated by extending domain words one entry at a
//! time, so only the prefix-closed part of `D` is visited; D2 is then checked
//! on every split of every visited word. Degenerate words (containing the
//! unit) are not enumerated; unit insertion is covered by the P2 regroupings
//! with an empty middle segment.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::PartialGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    /// Largest element size (word length for word-based handles).
    pub max_elem_size: usize,
    /// Longest domain word checked.
    pub max_word_len: usize,
    /// Cap on visited domain words; hitting it marks the report incomplete.
    pub max_domain_words: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_elem_size: 5,
            max_word_len: 4,
            max_domain_words: 2_000_000,
        }
    }
}

impl Bounds {
    pub fn new(max_elem_size: usize, max_word_len: usize) -> Self {
        Bounds {
            max_elem_size,
            max_word_len,
            ..Bounds::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Axiom {
    D1,
    D2,
    P1,
    P2,
    P3,
}

impl Axiom {
    pub const ALL: [Axiom; 5] = [Axiom::D1, Axiom::D2, Axiom::P1, Axiom::P2, Axiom::P3];

    pub fn statement(self) -> &'static str {
        match self {
            Axiom::D1 => "every element is a length-1 domain word",
            Axiom::D2 => "u∘v ∈ D implies u, v ∈ D",
            Axiom::P1 => "the product of a length-1 word is its entry",
            Axiom::P2 => "Π(u∘v∘w) = Π(u∘Π(v)∘w)",
            Axiom::P3 => "u⁻¹∘u ∈ D with product the unit; inversion is an involution",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// What exactly was tested; determines how a violation is replayed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Check {
    /// `[x]`: `x ∉ D`.
    Singleton,
    /// `[w, part]`: `w ∈ D` but the contiguous part is not.
    Subword,
    /// `[x]`: `Π(x) ≠ x`.
    SingletonProduct,
    /// `[w, regrouped]`: both should be in `D` with equal products.
    Regrouping,
    /// `[w]`: `w⁻¹∘w ∉ D` or its product is not the unit.
    InverseProduct,
    /// `[x]`: `x⁻¹` is not an element or `(x⁻¹)⁻¹ ≠ x`.
    Inversion,
    /// `[]`: the unit is missing or `Π(∅)` is not the unit.
    Unit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation<E> {
    pub axiom: Axiom,
    pub check: Check,
    pub words: Vec<Vec<E>>,
    pub detail: String,
}

impl<E: Clone + Eq> Violation<E> {
    /// Re-runs the failing test against `p`; true if it still fails.
    pub fn replays<P: PartialGroup<Elem = E>>(&self, p: &P) -> bool {
        let w = |i: usize| self.words.get(i).map(Vec::as_slice).unwrap_or(&[]);
        match self.check {
            Check::Singleton => !p.in_domain(w(0)),
            Check::Subword => p.in_domain(w(0)) && !p.in_domain(w(1)),
            Check::SingletonProduct => match w(0) {
                [x] => p.try_product(w(0)).as_ref() != Some(x),
                _ => false,
            },
            Check::Regrouping => {
                let a = p.try_product(w(0));
                a.is_some() && p.try_product(w(1)) != a
            }
            Check::InverseProduct => {
                let mut ww = p.invert_word(w(0));
                ww.extend_from_slice(w(0));
                p.in_domain(w(0)) && p.try_product(&ww) != Some(p.unit())
            }
            Check::Inversion => match w(0) {
                [x] => {
                    let y = p.inverse(x);
                    !p.contains(&y) || p.inverse(&y) != *x
                }
                _ => false,
            },
            Check::Unit => !p.contains(&p.unit()) || p.try_product(&[]) != Some(p.unit()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct AxiomReport<E> {
    pub bounds: Bounds,
    pub elements_checked: usize,
    pub domain_words_checked: usize,
    /// False if the domain-word cap was reached.
    pub complete: bool,
    /// First violation found for each failing axiom.
    pub violations: BTreeMap<Axiom, Violation<E>>,
}

impl<E> AxiomReport<E> {
    pub fn passed(&self, axiom: Axiom) -> bool {
        !self.violations.contains_key(&axiom)
    }

    pub fn all_passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violation(&self, axiom: Axiom) -> Option<&Violation<E>> {
        self.violations.get(&axiom)
    }
}

/// Calls `visit` on every non-degenerate domain word of length
/// `1..=max_len` over `elems` reachable by extending domain words. Returns
/// false if `cap` words were visited before the enumeration finished.
pub fn for_each_domain_word<P: PartialGroup>(
    p: &P,
    elems: &[P::Elem],
    max_len: usize,
    cap: usize,
    mut visit: impl FnMut(&[P::Elem]),
) -> bool {
    let mut seen = 0usize;
    let mut word: Vec<P::Elem> = Vec::with_capacity(max_len);
    // explicit DFS: stack of next-candidate indices per depth
    let mut next: Vec<usize> = vec![0];
    while let Some(&i) = next.last() {
        let depth = next.len();
        if depth > max_len || i >= elems.len() {
            next.pop();
            word.pop();
            continue;
        }
        *next.last_mut().expect("non-empty") += 1;
        word.push(elems[i].clone());
        if p.in_domain(&word) {
            if seen == cap {
                return false;
            }
            seen += 1;
            visit(&word);
            next.push(0);
        } else {
            word.pop();
        }
    }
    true
}

#[derive(Clone, Debug)]
pub struct DomainWords<E> {
    pub words: Vec<Vec<E>>,
    pub complete: bool,
}

/// Collected form of [`for_each_domain_word`].
pub fn domain_words<P: PartialGroup>(
    p: &P,
    elems: &[P::Elem],
    max_len: usize,
    cap: usize,
) -> DomainWords<P::Elem> {
    let mut words = Vec::new();
    let complete = for_each_domain_word(p, elems, max_len, cap, |w| words.push(w.to_vec()));
    DomainWords { words, complete }
}

pub fn check_axioms<P: PartialGroup>(p: &P, bounds: &Bounds) -> AxiomReport<P::Elem> {
    let mut report = AxiomReport {
        bounds: *bounds,
        elements_checked: 0,
        domain_words_checked: 0,
        complete: true,
        violations: BTreeMap::new(),
    };
    let unit = p.unit();
    if !p.contains(&unit) || p.try_product(&[]) != Some(unit.clone()) {
        fail(
            &mut report,
            Axiom::P3,
            Check::Unit,
            vec![vec![]],
            "the unit is not an element or Π(∅) is not the unit".into(),
        );
    }

    let elems = p.elements(bounds.max_elem_size);
    report.elements_checked = elems.len();
    for x in &elems {
        let single = std::slice::from_ref(x);
        match p.try_product(single) {
            None => fail(
                &mut report,
                Axiom::D1,
                Check::Singleton,
                vec![single.to_vec()],
                format!("{} is not in D", p.format_word(single)),
            ),
            Some(y) if y != *x => fail(
                &mut report,
                Axiom::P1,
                Check::SingletonProduct,
                vec![single.to_vec()],
                format!(
                    "Π({}) = {}",
                    p.format_word(single),
                    p.format_elem(&y)
                ),
            ),
            Some(_) => {}
        }
        let y = p.inverse(x);
        if !p.contains(&y) || p.inverse(&y) != *x {
            fail(
                &mut report,
                Axiom::P3,
                Check::Inversion,
                vec![single.to_vec()],
                format!("inversion misbehaves at {}", p.format_elem(x)),
            );
        }
    }

    let letters: Vec<P::Elem> = elems.iter().filter(|e| **e != unit).cloned().collect();
    let mut visited = 0usize;
    let complete = for_each_domain_word(
        p,
        &letters,
        bounds.max_word_len,
        bounds.max_domain_words,
        |w| {
            visited += 1;
            check_word(p, w, &unit, &mut report);
        },
    );
    report.domain_words_checked = visited;
    report.complete = complete;
    report
}

fn fail<E>(report: &mut AxiomReport<E>, axiom: Axiom, check: Check, words: Vec<Vec<E>>, detail: String) {
    report.violations.entry(axiom).or_insert(Violation {
        axiom,
        check,
        words,
        detail,
    });
}

fn check_word<P: PartialGroup>(
    p: &P,
    w: &[P::Elem],
    unit: &P::Elem,
    report: &mut AxiomReport<P::Elem>,
) {
    let n = w.len();
    let Some(total) = p.try_product(w) else {
        return;
    };

    // D2: every contiguous part (covers all u∘v splits and their pieces)
    if !report.violations.contains_key(&Axiom::D2) {
        'd2: for i in 0..n {
            for j in i + 1..=n {
                if (i, j) != (0, n) && !p.in_domain(&w[i..j]) {
                    fail(
                        report,
                        Axiom::D2,
                        Check::Subword,
                        vec![w.to_vec(), w[i..j].to_vec()],
                        format!(
                            "{} ∈ D but its part {} is not",
                            p.format_word(w),
                            p.format_word(&w[i..j])
                        ),
                    );
                    break 'd2;
                }
            }
        }
    }

    // P2: replace w[i..j] by its product; i == j inserts the unit
    if !report.violations.contains_key(&Axiom::P2) {
        'p2: for i in 0..=n {
            for j in i..=n {
                if j == i + 1 {
                    continue;
                }
                let Some(mid) = p.try_product(&w[i..j]) else {
                    continue;
                };
                let mut w2 = Vec::with_capacity(n + 1);
                w2.extend_from_slice(&w[..i]);
                w2.push(mid);
                w2.extend_from_slice(&w[j..]);
                let got = p.try_product(&w2);
                if got.as_ref() != Some(&total) {
                    let detail = match &got {
                        None => format!(
                            "Π({}) = {} but {} ∉ D",
                            p.format_word(w),
                            p.format_elem(&total),
                            p.format_word(&w2)
                        ),
                        Some(g) => format!(
                            "Π({}) = {} but Π({}) = {}",
                            p.format_word(w),
                            p.format_elem(&total),
                            p.format_word(&w2),
                            p.format_elem(g)
                        ),
                    };
                    fail(report, Axiom::P2, Check::Regrouping, vec![w.to_vec(), w2], detail);
                    break 'p2;
                }
            }
        }
    }

    // P3
    if !report.violations.contains_key(&Axiom::P3) {
        let mut ww = p.invert_word(w);
        ww.extend_from_slice(w);
        if p.try_product(&ww).as_ref() != Some(unit) {
            fail(
                report,
                Axiom::P3,
                Check::InverseProduct,
                vec![w.to_vec()],
                format!(
                    "{} ∉ D or its product is not the unit",
                    p.format_word(&ww)
                ),
            );
        }
    }
}
