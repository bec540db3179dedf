//! Finite groups given by explicit multiplication tables.
//!
//! Element `0` is always the identity. Every constructor validates the
//! group axioms exhaustively, so a [`FinGroup`] value is a group.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, GroupTableError, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinGroup {
    order: usize,
    table: Vec<usize>,
    inv: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for FinGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FinGroup")
            .field("order", &self.order)
            .field("labels", &self.labels)
            .finish()
    }
}

/// A map between the element sets of two groups, `images[x]` being the
/// image of element `x`. Whether it is a homomorphism depends on the groups
/// it is checked against; see [`GroupMap::is_homomorphism`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupMap {
    pub images: Vec<usize>,
}

impl GroupMap {
    pub fn identity(order: usize) -> Self {
        GroupMap {
            images: (0..order).collect(),
        }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &GroupMap) -> GroupMap {
        GroupMap {
            images: first.images.iter().map(|&y| self.images[y]).collect(),
        }
    }

    pub fn is_injective(&self) -> bool {
        let set: BTreeSet<_> = self.images.iter().collect();
        set.len() == self.images.len()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Inverse of a bijection.
    pub fn inverse(&self) -> GroupMap {
        let mut images = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        GroupMap { images }
    }

    pub fn is_homomorphism(&self, source: &FinGroup, target: &FinGroup) -> bool {
        if self.images.len() != source.order() || self.images.iter().any(|&y| y >= target.order())
        {
            return false;
        }
        if self.images[0] != 0 {
            return false;
        }
        source.elements().all(|x| {
            source.elements().all(|y| {
                self.images[source.mul(x, y)] == target.mul(self.images[x], self.images[y])
            })
        })
    }
}

impl FinGroup {
    /// Validates `table` (row `x`, column `y` holds `x*y`) and builds the group.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self, GroupTableError> {
        Self::from_table_with_labels(table, None)
    }

    pub fn from_table_with_labels(
        table: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, GroupTableError> {
        let order = table.len();
        if order == 0 {
            return Err(GroupTableError::Empty);
        }
        let mut flat = Vec::with_capacity(order * order);
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != order {
                return Err(GroupTableError::NotSquare {
                    row,
                    len: entries.len(),
                    order,
                });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= order {
                    return Err(GroupTableError::OutOfRange {
                        row,
                        col,
                        value,
                        order,
                    });
                }
                flat.push(value);
            }
        }
        Self::from_flat(order, flat, labels)
    }

    fn from_flat(
        order: usize,
        table: Vec<usize>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, GroupTableError> {
        let at = |x: usize, y: usize| table[x * order + y];
        for x in 0..order {
            if at(0, x) != x || at(x, 0) != x {
                return Err(GroupTableError::NoIdentity(x));
            }
        }
        let mut inv = vec![usize::MAX; order];
        for x in 0..order {
            match (0..order).find(|&y| at(x, y) == 0 && at(y, x) == 0) {
                Some(y) => inv[x] = y,
                None => return Err(GroupTableError::NoInverse(x)),
            }
        }
        for x in 0..order {
            for y in 0..order {
                let xy = at(x, y);
                for z in 0..order {
                    if at(xy, z) != at(x, at(y, z)) {
                        return Err(GroupTableError::NotAssociative(x, y, z));
                    }
                }
            }
        }
        if let Some(labels) = &labels {
            if labels.len() != order {
                return Err(GroupTableError::LabelCount {
                    labels: labels.len(),
                    order,
                });
            }
            let mut seen = BTreeSet::new();
            for l in labels {
                if !seen.insert(l) {
                    return Err(GroupTableError::DuplicateLabel(l.clone()));
                }
            }
        }
        Ok(FinGroup {
            order,
            table,
            inv,
            labels,
        })
    }

    /// ℤ_n with `i*j = (i+j) mod n`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        let table = (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect();
        Ok(Self::from_table(table)?)
    }

    pub fn trivial() -> Self {
        Self::cyclic(1).expect("order 1")
    }

    pub fn klein_four() -> Self {
        let z2 = Self::cyclic(2).expect("order 2");
        Self::direct_product(&z2, &z2)
    }

    /// S₃ as permutations of {0,1,2} in lexicographic order, composed as
    /// functions (`(p*q)(i) = p(q(i))`).
    pub fn symmetric3() -> Self {
        let perms: Vec<Vec<usize>> = vec![
            vec![0, 1, 2],
            vec![0, 2, 1],
            vec![1, 0, 2],
            vec![1, 2, 0],
            vec![2, 0, 1],
            vec![2, 1, 0],
        ];
        let labels = ["()", "(1 2)", "(0 1)", "(0 1 2)", "(0 2 1)", "(0 2)"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        Self::from_permutations(&perms)
            .expect("S3 is a group")
            .with_labels(labels)
            .expect("distinct labels")
    }

    /// The dihedral group of order 8, `⟨x,t | x⁴ = t² = 1, txt = x⁻¹⟩`.
    /// Element `i + 4j` is `xⁱ tʲ`.
    pub fn dihedral8() -> Self {
        let idx = |i: usize, j: usize| (i % 4) + 4 * (j % 2);
        let mut table = vec![vec![0; 8]; 8];
        for a in 0..8 {
            let (i, j) = (a % 4, a / 4);
            for b in 0..8 {
                let (k, l) = (b % 4, b / 4);
                // xⁱ tʲ xᵏ tˡ = x^(i ± k) t^(j+l)
                let k = if j == 1 { (4 - k) % 4 } else { k };
                table[a][b] = idx(i + k, j + l);
            }
        }
        let labels = ["1", "x", "x2", "x3", "t", "xt", "x2t", "x3t"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        Self::from_table_with_labels(table, Some(labels)).expect("D8 is a group")
    }

    /// Resolves the names `Zn`, `V4`, `S3` and `D8`.
    pub fn builtin(name: &str) -> Result<Self> {
        match name {
            "V4" => Ok(Self::klein_four()),
            "S3" => Ok(Self::symmetric3()),
            "D8" => Ok(Self::dihedral8()),
            _ => {
                let n = name
                    .strip_prefix('Z')
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| Error::UnknownGroup(name.to_string()))?;
                Self::cyclic(n)
            }
        }
    }

    /// Builds a group from a list of permutations closed under composition
    /// (`(p*q)(i) = p(q(i))`). The identity permutation must come first.
    pub fn from_permutations(perms: &[Vec<usize>]) -> Result<Self> {
        let index: std::collections::HashMap<&[usize], usize> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.as_slice(), i))
            .collect();
        let mut table = vec![vec![0; perms.len()]; perms.len()];
        for (a, p) in perms.iter().enumerate() {
            for (b, q) in perms.iter().enumerate() {
                let pq: Vec<usize> = q.iter().map(|&i| p[i]).collect();
                table[a][b] = *index.get(pq.as_slice()).ok_or({
                    Error::Group(GroupTableError::OutOfRange {
                        row: a,
                        col: b,
                        value: perms.len(),
                        order: perms.len(),
                    })
                })?;
            }
        }
        Ok(Self::from_table(table)?)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GroupTableError> {
        if labels.len() != self.order {
            return Err(GroupTableError::LabelCount {
                labels: labels.len(),
                order: self.order,
            });
        }
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l) {
                return Err(GroupTableError::DuplicateLabel(l.clone()));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Componentwise product; `(i, j)` has index `i·|b| + j`.
    pub fn direct_product(a: &FinGroup, b: &FinGroup) -> FinGroup {
        let n = a.order * b.order;
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            let (x1, x2) = (x / b.order, x % b.order);
            for y in 0..n {
                let (y1, y2) = (y / b.order, y % b.order);
                table.push(a.mul(x1, y1) * b.order + b.mul(x2, y2));
            }
        }
        let labels = match (&a.labels, &b.labels) {
            (Some(la), Some(lb)) => Some(
                (0..n)
                    .map(|x| format!("({},{})", la[x / b.order], lb[x % b.order]))
                    .collect(),
            ),
            _ => None,
        };
        Self::from_flat(n, table, labels).expect("direct product of groups is a group")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y]
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inv[x]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut p = x;
        while p != 0 {
            p = self.mul(p, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|x| self.elements().all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// Smallest subset containing `seed` and the identity that is closed
    /// under products and inverses.
    pub fn subgroup_closure(&self, seed: &[usize]) -> BTreeSet<usize> {
        let mut set: BTreeSet<usize> = BTreeSet::from([0]);
        let mut queue: VecDeque<usize> = VecDeque::new();
        for &s in seed {
            if set.insert(s) {
                queue.push_back(s);
            }
        }
        let gens: Vec<usize> = set.iter().copied().filter(|&x| x != 0).collect();
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                for y in [self.mul(x, g), self.mul(g, x)] {
                    if set.insert(y) {
                        queue.push_back(y);
                    }
                }
            }
        }
        set
    }

    /// The subgroup on `elements` (which must contain 0 and be closed) as a
    /// group in its own right, with its embedding into `self`.
    pub fn subgroup(&self, elements: &BTreeSet<usize>) -> Result<(FinGroup, GroupMap)> {
        let members: Vec<usize> = elements.iter().copied().collect();
        if members.first() != Some(&0) {
            return Err(Error::Group(GroupTableError::NoIdentity(0)));
        }
        let pos = |x: usize| members.binary_search(&x).ok();
        let mut table = Vec::with_capacity(members.len());
        for &x in &members {
            let mut row = Vec::with_capacity(members.len());
            for &y in &members {
                let p = self.mul(x, y);
                row.push(pos(p).ok_or(Error::Group(GroupTableError::OutOfRange {
                    row: x,
                    col: y,
                    value: p,
                    order: members.len(),
                }))?);
            }
            table.push(row);
        }
        let labels = self
            .labels
            .as_ref()
            .map(|l| members.iter().map(|&x| l[x].clone()).collect());
        let sub = Self::from_table_with_labels(table, labels)?;
        Ok((sub, GroupMap { images: members }))
    }

    /// A generating set chosen greedily in index order.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = BTreeSet::from([0]);
        for x in self.elements() {
            if !span.contains(&x) {
                gens.push(x);
                span = self.subgroup_closure(&gens);
            }
        }
        gens
    }

    /// Extends generator images to a homomorphism `self → target` by walking
    /// the Cayley graph; `None` if the images are inconsistent.
    fn extend_from_generators(
        &self,
        gens: &[usize],
        images: &[usize],
        target: &FinGroup,
    ) -> Option<GroupMap> {
        let mut map = vec![usize::MAX; self.order];
        map[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (&g, &gi) in gens.iter().zip(images) {
                let y = self.mul(x, g);
                let yi = target.mul(map[x], gi);
                if map[y] == usize::MAX {
                    map[y] = yi;
                    queue.push_back(y);
                } else if map[y] != yi {
                    return None;
                }
            }
        }
        debug_assert!(map.iter().all(|&m| m != usize::MAX));
        Some(GroupMap { images: map })
    }

    /// All homomorphisms `self → target` whose generator images satisfy
    /// `accept(generator, image)`, in lexicographic order of images.
    fn homomorphisms_filtered(
        &self,
        target: &FinGroup,
        accept: impl Fn(usize, usize) -> bool,
    ) -> Vec<GroupMap> {
        let gens = self.generators();
        let candidates: Vec<Vec<usize>> = gens
            .iter()
            .map(|&g| {
                let og = self.element_order(g);
                target
                    .elements()
                    .filter(|&y| og.is_multiple_of(target.element_order(y)) && accept(g, y))
                    .collect()
            })
            .collect();
        let mut out = Vec::new();
        let mut choice = vec![0usize; gens.len()];
        let mut images = vec![0usize; gens.len()];
        if candidates.iter().any(|c| c.is_empty()) {
            return out;
        }
        loop {
            for (i, &c) in choice.iter().enumerate() {
                images[i] = candidates[i][c];
            }
            if let Some(m) = self.extend_from_generators(&gens, &images, target) {
                out.push(m);
            }
            // odometer
            let mut i = gens.len();
            loop {
                if i == 0 {
                    out.sort();
                    out.dedup();
                    return out;
                }
                i -= 1;
                choice[i] += 1;
                if choice[i] < candidates[i].len() {
                    break;
                }
                choice[i] = 0;
            }
        }
    }

    /// All homomorphisms `self → target`.
    pub fn homomorphisms(&self, target: &FinGroup) -> Vec<GroupMap> {
        self.homomorphisms_filtered(target, |_, _| true)
    }

    /// All injective homomorphisms `self → target`.
    pub fn injective_homs(&self, target: &FinGroup) -> Vec<GroupMap> {
        if self.order > target.order {
            return Vec::new();
        }
        self.homomorphisms_filtered(target, |g, y| {
            self.element_order(g) == target.element_order(y)
        })
        .into_iter()
        .filter(GroupMap::is_injective)
        .collect()
    }

    /// All automorphisms, the identity first.
    pub fn automorphisms(&self) -> Vec<GroupMap> {
        self.injective_homs(self)
    }

    /// Some isomorphism `self → other`, if the groups are isomorphic.
    pub fn isomorphism_to(&self, other: &FinGroup) -> Option<GroupMap> {
        if self.order != other.order {
            return None;
        }
        self.injective_homs(other).into_iter().next()
    }

    pub fn is_isomorphic(&self, other: &FinGroup) -> bool {
        self.isomorphism_to(other).is_some()
    }

    /// A short name for the isomorphism type when it is one of the small
    /// named groups, otherwise `"order n"`.
    pub fn iso_name(&self) -> String {
        let mut known: Vec<(String, FinGroup)> = Vec::new();
        if self.order == 1 {
            return "1".into();
        }
        known.push((format!("Z{}", self.order), Self::cyclic(self.order).expect("n>0")));
        match self.order {
            4 => known.push(("V4".into(), Self::klein_four())),
            6 => known.push(("S3".into(), Self::symmetric3())),
            8 => {
                known.push(("D8".into(), Self::dihedral8()));
                let z2 = Self::cyclic(2).expect("2");
                let z4 = Self::cyclic(4).expect("4");
                known.push(("Z4xZ2".into(), Self::direct_product(&z4, &z2)));
                known.push((
                    "Z2xZ2xZ2".into(),
                    Self::direct_product(&Self::klein_four(), &z2),
                ));
            }
            _ => {}
        }
        known
            .into_iter()
            .find(|(_, g)| self.is_isomorphic(g))
            .map(|(n, _)| n)
            .unwrap_or_else(|| format!("order {}", self.order))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn assert_group_laws(g: &FinGroup) {
        for x in g.elements() {
            assert_eq!(g.mul(x, 0), x);
            assert_eq!(g.mul(0, x), x);
            assert_eq!(g.mul(x, g.inv(x)), 0);
            for y in g.elements() {
                for z in g.elements() {
                    assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
                }
            }
        }
    }

    #[test]
    fn cyclic_groups() {
        assert_eq!(FinGroup::cyclic(1).unwrap().order(), 1);
        let z2 = FinGroup::cyclic(2).unwrap();
        assert_eq!(z2.mul(1, 1), 0);
        let z3 = FinGroup::cyclic(3).unwrap();
        assert_eq!(z3.inv(1), 2);
        assert!(matches!(FinGroup::cyclic(0), Err(Error::ZeroOrder)));
    }

    #[test]
    fn table_validation() {
        assert!(FinGroup::from_table(vec![vec![0, 1], vec![1, 0]]).is_ok());
        assert_eq!(
            FinGroup::from_table(vec![vec![0, 1], vec![1, 1]]),
            Err(GroupTableError::NoInverse(1))
        );
        assert_eq!(
            FinGroup::from_table(vec![vec![1, 0], vec![0, 1]]),
            Err(GroupTableError::NoIdentity(0))
        );
        assert!(matches!(
            FinGroup::from_table(vec![vec![0, 1], vec![1]]),
            Err(GroupTableError::NotSquare { row: 1, .. })
        ));
        assert!(matches!(
            FinGroup::from_table(vec![vec![0, 2], vec![1, 0]]),
            Err(GroupTableError::OutOfRange { .. })
        ));
        // identity and inverses but not associative (a Latin square loop)
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            FinGroup::from_table(loop5),
            Err(GroupTableError::NotAssociative(..))
        ));
        assert!(matches!(
            FinGroup::from_table_with_labels(
                vec![vec![0, 1], vec![1, 0]],
                Some(vec!["e".into(), "e".into()])
            ),
            Err(GroupTableError::DuplicateLabel(_))
        ));
    }

    #[test]
    fn builtins_are_groups() {
        for name in ["Z1", "Z2", "Z5", "V4", "S3", "D8"] {
            assert_group_laws(&FinGroup::builtin(name).unwrap());
        }
        assert!(FinGroup::builtin("Q8").is_err());
        let d8 = FinGroup::dihedral8();
        assert_eq!(d8.order(), 8);
        assert!(!d8.is_abelian());
        // txt = x⁻¹
        assert_eq!(d8.mul(d8.mul(4, 1), 4), 3);
        assert_eq!(d8.element_order(1), 4);
        assert_eq!(d8.element_order(4), 2);
        assert!(!FinGroup::symmetric3().is_abelian());
    }

    #[test]
    fn direct_products() {
        let z1 = FinGroup::trivial();
        let z2 = FinGroup::cyclic(2).unwrap();
        let z3 = FinGroup::cyclic(3).unwrap();
        assert!(FinGroup::direct_product(&z2, &z1).is_isomorphic(&z2));
        let v4 = FinGroup::direct_product(&z2, &z2);
        assert!(v4.elements().all(|x| v4.inv(x) == x));
        let z6 = FinGroup::direct_product(&z2, &z3);
        assert_eq!(z6.order(), 6);
        assert!(z6.elements().any(|x| z6.element_order(x) == 6));
        assert!(z6.is_isomorphic(&FinGroup::cyclic(6).unwrap()));
    }

    /// Brute force over all bijections fixing the identity.
    fn brute_automorphism_count(g: &FinGroup) -> usize {
        fn perms(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if rest.is_empty() {
                out.push(cur.clone());
                return;
            }
            for i in 0..rest.len() {
                let x = rest.remove(i);
                cur.push(x);
                perms(rest, cur, out);
                cur.pop();
                rest.insert(i, x);
            }
        }
        let mut out = Vec::new();
        perms(&mut (1..g.order()).collect(), &mut vec![0], &mut out);
        out.into_iter()
            .filter(|p| GroupMap { images: p.clone() }.is_homomorphism(g, g))
            .count()
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(FinGroup::cyclic(2).unwrap().automorphisms().len(), 1);
        assert_eq!(FinGroup::cyclic(3).unwrap().automorphisms().len(), 2);
        let v4 = FinGroup::klein_four();
        assert_eq!(brute_automorphism_count(&v4), 6);
        assert_eq!(v4.automorphisms().len(), 6);
        for g in [FinGroup::symmetric3(), FinGroup::dihedral8(), FinGroup::cyclic(5).unwrap()] {
            assert_eq!(g.automorphisms().len(), brute_automorphism_count(&g));
        }
    }

    #[test]
    fn automorphisms_form_a_group() {
        for g in [FinGroup::klein_four(), FinGroup::dihedral8(), FinGroup::symmetric3()] {
            let auts = g.automorphisms();
            assert!(auts[0].is_identity());
            for a in &auts {
                assert!(a.is_homomorphism(&g, &g));
                assert!(auts.contains(&a.inverse()));
                for b in &auts {
                    assert!(auts.contains(&a.after(b)));
                }
            }
        }
    }

    #[test]
    fn injective_homomorphisms() {
        let z2 = FinGroup::cyclic(2).unwrap();
        let z3 = FinGroup::cyclic(3).unwrap();
        let z4 = FinGroup::cyclic(4).unwrap();
        assert!(z3.injective_homs(&z2).is_empty());
        assert_eq!(z2.injective_homs(&z2), vec![GroupMap::identity(2)]);
        let homs = z2.injective_homs(&z4);
        assert_eq!(homs, vec![GroupMap { images: vec![0, 2] }]);
        let d8 = FinGroup::dihedral8();
        for f in z2.injective_homs(&d8) {
            assert!(f.is_homomorphism(&z2, &d8) && f.is_injective());
        }
        // five involutions in D8
        assert_eq!(z2.injective_homs(&d8).len(), 5);
    }

    #[test]
    fn closures() {
        let z4 = FinGroup::cyclic(4).unwrap();
        assert_eq!(z4.subgroup_closure(&[]), BTreeSet::from([0]));
        assert_eq!(z4.subgroup_closure(&[2]), BTreeSet::from([0, 2]));
        let d8 = FinGroup::dihedral8();
        let v = d8.subgroup_closure(&[2, 4]);
        assert_eq!(v, BTreeSet::from([0, 2, 4, 6]));
        let (sub, emb) = d8.subgroup(&v).unwrap();
        assert!(sub.is_isomorphic(&FinGroup::klein_four()));
        assert!(emb.is_homomorphism(&sub, &d8));
        assert_eq!(sub.iso_name(), "V4");
    }

    #[test]
    fn iso_names() {
        assert_eq!(FinGroup::trivial().iso_name(), "1");
        assert_eq!(FinGroup::cyclic(3).unwrap().iso_name(), "Z3");
        assert_eq!(FinGroup::symmetric3().iso_name(), "S3");
        assert_eq!(FinGroup::dihedral8().iso_name(), "D8");
    }

    proptest! {
        #[test]
        fn cyclic_products_are_groups(a in 1usize..6, b in 1usize..6) {
            let g = FinGroup::direct_product(
                &FinGroup::cyclic(a).unwrap(),
                &FinGroup::cyclic(b).unwrap(),
            );
            assert_group_laws(&g);
            let expect_cyclic = num_gcd(a, b) == 1;
            prop_assert_eq!(g.is_isomorphic(&FinGroup::cyclic(a * b).unwrap()), expect_cyclic);
        }
    }

    fn num_gcd(a: usize, b: usize) -> usize {
        if b == 0 { a } else { num_gcd(b, a % b) }
    }
}
