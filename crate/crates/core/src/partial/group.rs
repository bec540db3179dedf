use super::PartialGroup;
use crate::fingroup::FinGroup;

/// A finite group seen as a partial group whose domain is every word.
#[derive(Clone, Debug)]
pub struct GroupHandle {
    group: FinGroup,
}

pub fn from_group(group: FinGroup) -> GroupHandle {
    GroupHandle { group }
}

impl GroupHandle {
    pub fn group(&self) -> &FinGroup {
        &self.group
    }
}

impl PartialGroup for GroupHandle {
    type Elem = usize;

    fn unit(&self) -> usize {
        0
    }

    fn contains(&self, e: &usize) -> bool {
        *e < self.group.order()
    }

    fn try_product(&self, w: &[usize]) -> Option<usize> {
        Some(w.iter().fold(0, |acc, &x| self.group.mul(acc, x)))
    }

    fn inverse(&self, e: &usize) -> usize {
        self.group.inv(*e)
    }

    fn elements(&self, max_size: usize) -> Vec<usize> {
        if max_size == 0 {
            vec![0]
        } else {
            self.group.elements().collect()
        }
    }

    fn describe(&self) -> String {
        format!("group {} of order {}", self.group.iso_name(), self.group.order())
    }

    fn format_elem(&self, e: &usize) -> String {
        self.group.label(*e)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FreeElem {
    One,
    A,
    AInv,
}

/// The free partial group on one generator: elements `1, a, a⁻¹`, domain
/// the words whose non-unit entries alternate between `a` and `a⁻¹`.
#[derive(Clone, Copy, Debug, Default)]
pub struct FreeOnOne;

pub fn free_on_one() -> FreeOnOne {
    FreeOnOne
}

impl PartialGroup for FreeOnOne {
    type Elem = FreeElem;

    fn unit(&self) -> FreeElem {
        FreeElem::One
    }

    fn contains(&self, _: &FreeElem) -> bool {
        true
    }

    fn try_product(&self, w: &[FreeElem]) -> Option<FreeElem> {
        let mut prev = FreeElem::One;
        let mut balance = 0i64;
        for &e in w {
            match e {
                FreeElem::One => continue,
                FreeElem::A => balance += 1,
                FreeElem::AInv => balance -= 1,
            }
            if e == prev {
                return None;
            }
            prev = e;
        }
        Some(match balance {
            0 => FreeElem::One,
            1 => FreeElem::A,
            _ => FreeElem::AInv,
        })
    }

    fn inverse(&self, e: &FreeElem) -> FreeElem {
        match e {
            FreeElem::One => FreeElem::One,
            FreeElem::A => FreeElem::AInv,
            FreeElem::AInv => FreeElem::A,
        }
    }

    fn elements(&self, max_size: usize) -> Vec<FreeElem> {
        if max_size == 0 {
            vec![FreeElem::One]
        } else {
            vec![FreeElem::One, FreeElem::A, FreeElem::AInv]
        }
    }

    fn describe(&self) -> String {
        "free partial group on one generator".into()
    }

    fn format_elem(&self, e: &FreeElem) -> String {
        match e {
            FreeElem::One => "1",
            FreeElem::A => "a",
            FreeElem::AInv => "a^-1",
        }
        .into()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partial::{check_axioms, Bounds};

    #[test]
    fn groups_multiply_everything() {
        let z2 = from_group(FinGroup::cyclic(2).unwrap());
        assert_eq!(z2.product(&[1, 1]).unwrap(), 0);
        let s3 = from_group(FinGroup::symmetric3());
        assert!(s3.in_domain(&[1, 2, 3, 4, 5, 1, 1]));
        assert_eq!(from_group(FinGroup::trivial()).elements(10), vec![0]);
    }

    #[test]
    fn free_partial_group_products() {
        use FreeElem::*;
        let f = free_on_one();
        assert_eq!(f.product(&[A, AInv]).unwrap(), One);
        assert!(!f.in_domain(&[A, A]));
        assert!(!f.in_domain(&[A, One, A]));
        assert_eq!(f.product(&[A, AInv, A]).unwrap(), A);
        assert_eq!(f.product(&[AInv, One, A, AInv]).unwrap(), AInv);
        assert_eq!(f.product(&[]).unwrap(), One);
    }

    #[test]
    fn both_satisfy_the_axioms() {
        let r = check_axioms(&from_group(FinGroup::symmetric3()), &Bounds::new(usize::MAX, 4));
        assert!(r.all_passed() && r.complete);
        // 5 + 25 + 125 + 625 non-degenerate words
        assert_eq!(r.domain_words_checked, 780);
        let r = check_axioms(&free_on_one(), &Bounds::new(1, 6));
        assert!(r.all_passed() && r.complete);
        // exactly two alternating words of each length
        assert_eq!(r.domain_words_checked, 12);
    }
}
