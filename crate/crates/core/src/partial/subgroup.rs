use std::collections::{BTreeSet, VecDeque};

use super::PartialGroup;
use crate::fingroup::FinGroup;

/// Words over a candidate subgroup longer than 3 are only enumerated while
/// one length stratum stays under this many words.
const WORD_BUDGET: usize = 300_000;

/// A finite subgroup together with its induced multiplication table. Row
/// and column `i` of the table correspond to `elements[i]`; the unit comes
/// first.
#[derive(Clone, Debug)]
pub struct SubgroupRecord<E> {
    pub elements: Vec<E>,
    pub table: FinGroup,
}

impl<E: Ord> SubgroupRecord<E> {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, e: &E) -> bool {
        self.elements.contains(e)
    }

    pub fn element_set(&self) -> BTreeSet<&E> {
        self.elements.iter().collect()
    }
}

/// The group structure induced on `s` by length-2 products, if every pair
/// lies in the domain, products stay in `s`, and the table is a group.
pub fn induced_group<P: PartialGroup>(
    p: &P,
    s: &BTreeSet<P::Elem>,
) -> Option<SubgroupRecord<P::Elem>> {
    let unit = p.unit();
    if !s.contains(&unit) {
        return None;
    }
    let mut elements = vec![unit.clone()];
    elements.extend(s.iter().filter(|e| **e != unit).cloned());
    let index = |e: &P::Elem| elements.iter().position(|x| x == e);
    let mut table = Vec::with_capacity(elements.len());
    for x in &elements {
        let mut row = Vec::with_capacity(elements.len());
        for y in &elements {
            let xy = p.try_product(&[x.clone(), y.clone()])?;
            row.push(index(&xy)?);
        }
        table.push(row);
    }
    let labels: Vec<String> = elements.iter().map(|e| p.format_elem(e)).collect();
    let distinct: BTreeSet<&String> = labels.iter().collect();
    let labels = (distinct.len() == labels.len()).then_some(labels);
    let table = FinGroup::from_table_with_labels(table, labels).ok()?;
    Some(SubgroupRecord { elements, table })
}

/// Whether `s` is a subgroup: closed under inversion, every word over `s`
/// up to length `max(3, |s| + 1)` is in the domain with product in `s`, and
/// the induced table is a group. Lengths above 3 are skipped once a stratum
/// would exceed the word budget.
pub fn is_subgroup<P: PartialGroup>(p: &P, s: &BTreeSet<P::Elem>) -> bool {
    if !s.contains(&p.unit()) || !s.iter().all(|e| p.contains(e) && s.contains(&p.inverse(e))) {
        return false;
    }
    let members: Vec<&P::Elem> = s.iter().collect();
    let k = members.len();
    let max_len = (k + 1).max(3);
    for len in 1..=max_len {
        let count = k.checked_pow(len as u32);
        if len > 3 && count.is_none_or(|c| c > WORD_BUDGET) {
            break;
        }
        let mut digits = vec![0usize; len];
        loop {
            let w: Vec<P::Elem> = digits.iter().map(|&d| members[d].clone()).collect();
            match p.try_product(&w) {
                Some(x) if s.contains(&x) => {}
                _ => return false,
            }
            // odometer
            let mut i = 0;
            while i < len {
                digits[i] += 1;
                if digits[i] < k {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
            if i == len {
                break;
            }
        }
    }
    induced_group(p, s).is_some()
}

/// The smallest set containing `seed` and the unit closed under inverses
/// and pairwise products. `None` if some needed pair is outside the domain
/// or the set grows past `max_size` elements.
pub fn subgroup_closure<P: PartialGroup>(
    p: &P,
    seed: &[P::Elem],
    max_size: usize,
) -> Option<BTreeSet<P::Elem>> {
    let mut set: BTreeSet<P::Elem> = BTreeSet::from([p.unit()]);
    let mut gens: Vec<P::Elem> = Vec::new();
    for g in seed {
        for h in [g.clone(), p.inverse(g)] {
            if set.insert(h.clone()) {
                gens.push(h);
            }
        }
    }
    let mut queue: VecDeque<P::Elem> = set.iter().cloned().collect();
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y = p.try_product(&[x.clone(), g.clone()])?;
            if set.insert(y.clone()) {
                if set.len() > max_size {
                    return None;
                }
                queue.push_back(y);
            }
        }
    }
    Some(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partial::{free_on_one, from_group, FreeElem};

    /// Every word over `s` of length at most 4 is in the domain with
    /// product in `s`.
    fn exhaustive<P: PartialGroup>(p: &P, s: &BTreeSet<P::Elem>) -> bool {
        let members: Vec<_> = s.iter().cloned().collect();
        let mut layer: Vec<Vec<P::Elem>> = vec![vec![]];
        for _ in 0..4 {
            let mut next = Vec::new();
            for w in &layer {
                for m in &members {
                    let mut w2 = w.clone();
                    w2.push(m.clone());
                    match p.try_product(&w2) {
                        Some(x) if s.contains(&x) => next.push(w2),
                        _ => return false,
                    }
                }
            }
            layer = next;
        }
        s.contains(&p.unit())
    }

    fn subsets<T: Clone + Ord>(items: &[T]) -> Vec<BTreeSet<T>> {
        (0..1u32 << items.len())
            .map(|mask| {
                items
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn agrees_with_exhaustive_check_in_small_groups() {
        // S3: trivial, three of order 2, A3, S3; Z6: one per divisor of 6
        for (g, subgroups) in [(FinGroup::symmetric3(), 6), (FinGroup::cyclic(6).unwrap(), 4)] {
            let h = from_group(g.clone());
            let elems: Vec<usize> = g.elements().collect();
            let mut found = 0;
            for s in subsets(&elems) {
                let expect = exhaustive(&h, &s);
                assert_eq!(is_subgroup(&h, &s), expect, "{s:?}");
                found += usize::from(expect);
            }
            assert_eq!(found, subgroups);
        }
    }

    #[test]
    fn free_partial_group_has_only_the_trivial_subgroup() {
        let f = free_on_one();
        use FreeElem::*;
        assert!(is_subgroup(&f, &BTreeSet::from([One])));
        assert!(!is_subgroup(&f, &BTreeSet::from([One, A, AInv])));
        assert!(subgroup_closure(&f, &[A], 10).is_none());
        for s in subsets(&[One, A, AInv]) {
            assert_eq!(is_subgroup(&f, &s), exhaustive(&f, &s));
        }
    }

    #[test]
    fn closure_in_a_group() {
        let d8 = from_group(FinGroup::dihedral8());
        let v = subgroup_closure(&d8, &[2, 4], 8).unwrap();
        assert_eq!(v, BTreeSet::from([0, 2, 4, 6]));
        let rec = induced_group(&d8, &v).unwrap();
        assert_eq!(rec.table.iso_name(), "V4");
        assert!(subgroup_closure(&d8, &[1, 4], 4).is_none());
    }
}
