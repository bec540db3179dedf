//! Automorphisms of a truncated partial group found by brute force through
//! the partial-group interface alone.
//!
//! The truncation at `L` consists of the elements of size at most `L` and
//! the non-degenerate domain words over them of total size at most `L`.
//! Candidate maps send size-1 elements bijectively to size-1 elements; the
//! search backtracks over these images, pruning on length-2 domain words,
//! products and inverses among letters. Each complete assignment is extended
//! to larger elements through products of smaller ones and then checked on
//! the whole truncation: unit, sizes, inverses, domain membership and
//! products.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::partial::PartialGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    /// Backtracking nodes.
    pub max_nodes: usize,
    /// Domain words in the truncation.
    pub max_domain_words: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_nodes: 5_000_000,
            max_domain_words: 2_000_000,
        }
    }
}

#[derive(Clone, Debug)]
pub struct TruncatedAuts<E> {
    /// The truncated elements in enumeration order, unit first.
    pub elements: Vec<E>,
    /// Each map lists the image index of every element; sorted.
    pub maps: Vec<Vec<usize>>,
    pub domain_words: usize,
}

impl<E> TruncatedAuts<E> {
    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }
}

const OUTSIDE: u32 = u32::MAX;

struct Truncation {
    /// Product index (or `OUTSIDE`) of every truncated domain word.
    words: HashMap<Vec<u32>, u32>,
    /// For each element of size ≥ 2, a factorisation into two smaller ones.
    split: Vec<Option<(u32, u32)>>,
}

fn truncate<P: PartialGroup>(
    p: &P,
    elems: &[P::Elem],
    sizes: &[usize],
    index: &HashMap<&P::Elem, u32>,
    max_size: usize,
    limit: usize,
) -> Result<Truncation> {
    let mut words: HashMap<Vec<u32>, u32> = HashMap::new();
    let mut stack: Vec<(Vec<u32>, usize)> = vec![(Vec::new(), 0)];
    let mut buf: Vec<P::Elem> = Vec::new();
    while let Some((w, used)) = stack.pop() {
        for i in 1..elems.len() {
            if used + sizes[i] > max_size {
                continue;
            }
            let mut w2 = w.clone();
            w2.push(i as u32);
            buf.clear();
            buf.extend(w2.iter().map(|&k| elems[k as usize].clone()));
            if let Some(prod) = p.try_product(&buf) {
                let pi = index.get(&prod).copied().unwrap_or(OUTSIDE);
                words.insert(w2.clone(), pi);
                if words.len() > limit {
                    return Err(Error::EnumerationLimit(format!(
                        "more than {limit} truncated domain words"
                    )));
                }
                stack.push((w2, used + sizes[i]));
            }
        }
    }
    let mut split = vec![None; elems.len()];
    let mut pairs: Vec<(&Vec<u32>, &u32)> = words.iter().filter(|(w, _)| w.len() == 2).collect();
    pairs.sort();
    for (w, &e) in pairs {
        if e == OUTSIDE {
            continue;
        }
        let (x, y) = (w[0], w[1]);
        let se = sizes[e as usize];
        if sizes[x as usize] < se && sizes[y as usize] < se && split[e as usize].is_none() {
            split[e as usize] = Some((x, y));
        }
    }
    Ok(Truncation { words, split })
}

pub fn brute_aut_truncated<P: PartialGroup>(
    p: &P,
    max_size: usize,
    limits: &OracleLimits,
) -> Result<TruncatedAuts<P::Elem>> {
    let elems = p.elements(max_size);
    let unit = p.unit();
    if elems.first() != Some(&unit) {
        return Err(Error::Morphism("element enumeration must start with the unit".into()));
    }
    let index: HashMap<&P::Elem, u32> = elems
        .iter()
        .enumerate()
        .map(|(i, e)| (e, i as u32))
        .collect();
    let sizes: Vec<usize> = elems.iter().map(|e| p.size(e)).collect();
    let inv: Vec<u32> = elems
        .iter()
        .map(|e| {
            index
                .get(&p.inverse(e))
                .copied()
                .ok_or_else(|| Error::Morphism("inverse leaves the truncation".into()))
        })
        .collect::<Result<_>>()?;
    let trunc = truncate(p, &elems, &sizes, &index, max_size, limits.max_domain_words)?;

    let letters: Vec<u32> = (0..elems.len() as u32)
        .filter(|&i| sizes[i as usize] == 1)
        .collect();
    let mut order: Vec<u32> = (1..elems.len() as u32).collect();
    order.sort_by_key(|&i| (sizes[i as usize], i));
    for &e in &order {
        if sizes[e as usize] >= 2 && trunc.split[e as usize].is_none() {
            return Err(Error::Morphism(format!(
                "{} is not a product of smaller elements; cannot extend maps to it",
                p.format_elem(&elems[e as usize])
            )));
        }
    }
    // letter-level tables from the handle itself, independent of the bound
    let k = letters.len();
    let mut ldom = vec![false; k * k];
    let mut lprod = vec![OUTSIDE; k * k];
    for (a, &x) in letters.iter().enumerate() {
        for (b, &y) in letters.iter().enumerate() {
            let w = [elems[x as usize].clone(), elems[y as usize].clone()];
            if let Some(z) = p.try_product(&w) {
                ldom[a * k + b] = true;
                lprod[a * k + b] = index.get(&z).copied().unwrap_or(OUTSIDE);
            }
        }
    }
    let letter_pos: HashMap<u32, usize> = letters.iter().enumerate().map(|(a, &x)| (x, a)).collect();

    let mut search = Search {
        n: elems.len(),
        letters: &letters,
        letter_pos: &letter_pos,
        ldom: &ldom,
        lprod: &lprod,
        inv: &inv,
        sizes: &sizes,
        order: &order,
        trunc: &trunc,
        assign: vec![OUTSIDE; k],
        used: vec![false; k],
        nodes: 0,
        max_nodes: limits.max_nodes,
        found: Vec::new(),
    };
    search.run(0)?;
    let mut maps = search.found;
    maps.sort();
    Ok(TruncatedAuts {
        elements: elems,
        maps,
        domain_words: trunc.words.len(),
    })
}

struct Search<'a> {
    n: usize,
    letters: &'a [u32],
    letter_pos: &'a HashMap<u32, usize>,
    ldom: &'a [bool],
    lprod: &'a [u32],
    inv: &'a [u32],
    sizes: &'a [usize],
    order: &'a [u32],
    trunc: &'a Truncation,
    /// `assign[a]`: position of the image of letter `a`.
    assign: Vec<u32>,
    used: Vec<bool>,
    nodes: usize,
    max_nodes: usize,
    found: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn run(&mut self, a: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::SearchLimit(format!(
                "more than {} oracle search nodes",
                self.max_nodes
            )));
        }
        let k = self.letters.len();
        if a == k {
            if let Some(map) = self.extend() {
                if self.verify(&map) {
                    self.found.push(map.into_iter().map(|x| x as usize).collect());
                }
            }
            return Ok(());
        }
        for b in 0..k {
            if self.used[b] {
                continue;
            }
            self.assign[a] = b as u32;
            self.used[b] = true;
            if self.consistent(a) {
                self.run(a + 1)?;
            }
            self.used[b] = false;
            self.assign[a] = OUTSIDE;
        }
        Ok(())
    }

    /// Image of an element index if it is an assigned letter (or the unit).
    fn image_of_letter(&self, e: u32) -> Option<u32> {
        if e == 0 {
            return Some(0);
        }
        let &pos = self.letter_pos.get(&e)?;
        let b = self.assign[pos];
        (b != OUTSIDE).then(|| self.letters[b as usize])
    }

    /// Checks letter `a` against every assigned letter.
    fn consistent(&self, a: usize) -> bool {
        let k = self.letters.len();
        let x = self.letters[a];
        let fx = self.letters[self.assign[a] as usize];
        if let Some(fi) = self.image_of_letter(self.inv[x as usize]) {
            if fi != self.inv[fx as usize] {
                return false;
            }
        }
        for c in 0..=a {
            let fa = self.assign[a] as usize;
            let fc = self.assign[c] as usize;
            for (s, t, fs, ft) in [(a, c, fa, fc), (c, a, fc, fa)] {
                if self.ldom[s * k + t] != self.ldom[fs * k + ft] {
                    return false;
                }
                if !self.ldom[s * k + t] {
                    continue;
                }
                let z = self.lprod[s * k + t];
                let fz = self.lprod[fs * k + ft];
                if (z == OUTSIDE) != (fz == OUTSIDE) {
                    return false;
                }
                if z != OUTSIDE {
                    if self.sizes[z as usize] != self.sizes[fz as usize] {
                        return false;
                    }
                    if let Some(g) = self.image_of_letter(z) {
                        if g != fz {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Extends the letter assignment to all truncated elements.
    fn extend(&self) -> Option<Vec<u32>> {
        let mut f = vec![OUTSIDE; self.n];
        f[0] = 0;
        for (a, &x) in self.letters.iter().enumerate() {
            f[x as usize] = self.letters[self.assign[a] as usize];
        }
        for &e in self.order {
            if self.sizes[e as usize] < 2 {
                continue;
            }
            let (x, y) = self.trunc.split[e as usize]?;
            let image = vec![f[x as usize], f[y as usize]];
            let z = *self.trunc.words.get(&image)?;
            if z == OUTSIDE {
                return None;
            }
            f[e as usize] = z;
        }
        Some(f)
    }

    fn verify(&self, f: &[u32]) -> bool {
        let mut hit = vec![false; self.n];
        for e in 0..self.n {
            let y = f[e] as usize;
            if y >= self.n || hit[y] || self.sizes[y] != self.sizes[e] {
                return false;
            }
            hit[y] = true;
            if f[self.inv[e] as usize] != self.inv[y] {
                return false;
            }
        }
        let mut image = Vec::new();
        for (w, &prod) in &self.trunc.words {
            image.clear();
            image.extend(w.iter().map(|&e| f[e as usize]));
            match self.trunc.words.get(&image) {
                Some(&q) => {
                    let expect = if prod == OUTSIDE { OUTSIDE } else { f[prod as usize] };
                    if q != expect {
                        return false;
                    }
                }
                None => return false,
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decpart::{build, path_partial, DecGraph};
    use crate::fingroup::FinGroup;
    use crate::graph::Graph;
    use crate::partial::from_group;

    fn lim() -> OracleLimits {
        OracleLimits::default()
    }

    #[test]
    fn small_path_partial_groups() {
        let p = path_partial(Graph::complete(2));
        let r = brute_aut_truncated(&p, 4, &lim()).unwrap();
        assert_eq!(r.len(), 2);
        assert_eq!(r.maps[0], (0..r.elements.len()).collect::<Vec<_>>());
        let p1 = path_partial(Graph::new(1));
        assert_eq!(brute_aut_truncated(&p1, 4, &lim()).unwrap().len(), 1);
    }

    #[test]
    fn k2_with_z2_and_z3() {
        let dec = vec![FinGroup::cyclic(2).unwrap(), FinGroup::cyclic(3).unwrap()];
        let m = build(DecGraph::new(Graph::complete(2), dec).unwrap());
        let r = brute_aut_truncated(&m, 4, &lim()).unwrap();
        assert_eq!(r.len(), 2);
        // the non-identity map exchanges b and b²
        let b = r.elements.iter().position(|e| m.format_elem(e) == "1").unwrap();
        let b2 = r.elements.iter().position(|e| m.format_elem(e) == "1.2").unwrap();
        assert_eq!(r.maps[1][b], b2);
    }

    #[test]
    fn groups_recover_their_automorphisms() {
        for (g, n) in [
            (FinGroup::klein_four(), 6),
            (FinGroup::cyclic(3).unwrap(), 2),
            (FinGroup::symmetric3(), 6),
            (FinGroup::cyclic(2).unwrap(), 1),
        ] {
            let r = brute_aut_truncated(&from_group(g), 3, &lim()).unwrap();
            assert_eq!(r.len(), n);
        }
    }
}
