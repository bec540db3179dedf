//! The partial group of a decorated graph.
//!
//! Elements are cyclically reduced free-product words whose support is a
//! clique. A sequence of elements is in the domain when the union of the
//! supports is a clique and every contiguous segment reduces to a
//! cyclically reduced word; the product is the reduced concatenation.
//! Cliques are never listed: supports are tested for pairwise adjacency.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::fingroup::FinGroup;
use crate::graph::Graph;
use crate::partial::PartialGroup;
use crate::words::{
    format_word, invert_unchecked, is_cyclically_reduced_slice, parse_word, push_reduced,
    CrWord, Letter, Word,
};

/// A simple graph with a non-trivial finite group on every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecGraph {
    graph: Graph,
    dec: Vec<FinGroup>,
}

impl DecGraph {
    pub fn new(graph: Graph, dec: Vec<FinGroup>) -> Result<Self> {
        if dec.len() != graph.vertex_count() {
            return Err(Error::DecorationCount {
                vertices: graph.vertex_count(),
                decorations: dec.len(),
            });
        }
        if let Some(v) = dec.iter().position(|g| g.order() < 2) {
            return Err(Error::TrivialDecoration(graph.label(v).to_string()));
        }
        Ok(DecGraph { graph, dec })
    }

    /// Every vertex decorated by `g`.
    pub fn uniform(graph: Graph, g: &FinGroup) -> Result<Self> {
        let dec = vec![g.clone(); graph.vertex_count()];
        Self::new(graph, dec)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn decorations(&self) -> &[FinGroup] {
        &self.dec
    }

    pub fn decoration(&self, v: usize) -> &FinGroup {
        &self.dec[v]
    }
}

#[derive(Clone, Debug)]
pub struct MgHandle {
    dg: DecGraph,
}

pub fn build(dg: DecGraph) -> MgHandle {
    MgHandle { dg }
}

/// Every decoration `Z2`.
pub fn path_partial(graph: Graph) -> MgHandle {
    let z2 = FinGroup::cyclic(2).expect("2 > 0");
    build(DecGraph::uniform(graph, &z2).expect("Z2 is non-trivial"))
}

impl MgHandle {
    pub fn decgraph(&self) -> &DecGraph {
        &self.dg
    }

    pub fn graph(&self) -> &Graph {
        &self.dg.graph
    }

    pub fn decorations(&self) -> &[FinGroup] {
        &self.dg.dec
    }

    /// The one-letter element `(v, elem)`.
    pub fn letter(&self, v: usize, elem: usize) -> Result<CrWord> {
        let w = Word::new(vec![Letter::new(v, elem)?]);
        CrWord::new(w, &self.dg.dec)
    }

    /// Parses one element in word-literal syntax (`"a b.2"`, `"()"`) and
    /// checks that it belongs to the partial group.
    pub fn parse_elem(&self, s: &str) -> Result<CrWord> {
        let g = &self.dg.graph;
        let w = parse_word(s, |l| g.vertex_by_label(l))?;
        let c = CrWord::new(w, &self.dg.dec)?;
        if !self.contains(&c) {
            return Err(Error::NotAnElement(s.trim().to_string()));
        }
        Ok(c)
    }

    /// Parses a sequence of elements separated by `|`. An empty string is
    /// the empty sequence.
    pub fn parse_sequence(&self, s: &str) -> Result<Vec<CrWord>> {
        if s.trim().is_empty() {
            return Ok(Vec::new());
        }
        s.split('|').map(|part| self.parse_elem(part)).collect()
    }

    fn support_is_clique<'a>(&self, words: impl IntoIterator<Item = &'a CrWord>) -> bool {
        let support: BTreeSet<usize> = words
            .into_iter()
            .flat_map(|w| w.letters().iter().map(|l| l.vertex()))
            .collect();
        let s: Vec<usize> = support.into_iter().collect();
        self.dg.graph.is_clique_unchecked(&s)
    }
}

impl PartialGroup for MgHandle {
    type Elem = CrWord;

    fn parse_elem_text(&self, s: &str) -> Result<CrWord> {
        self.parse_elem(s)
    }

    fn unit(&self) -> CrWord {
        CrWord::empty()
    }

    fn contains(&self, e: &CrWord) -> bool {
        let valid = e.letters().iter().all(|l| {
            self.dg
                .dec
                .get(l.vertex())
                .is_some_and(|g| l.elem() >= 1 && l.elem() < g.order())
        });
        valid && is_cyclically_reduced_slice(e.letters()) && self.support_is_clique([e])
    }

    fn try_product(&self, w: &[CrWord]) -> Option<CrWord> {
        if !self.support_is_clique(w) {
            return None;
        }
        let dec = &self.dg.dec;
        let mut product = Vec::new();
        for i in 0..w.len() {
            // segment products w[i..=j], extended one entry at a time
            let mut stack: Vec<Letter> = Vec::new();
            for u in &w[i..] {
                for &l in u.letters() {
                    push_reduced(&mut stack, l, dec);
                }
                if !is_cyclically_reduced_slice(&stack) {
                    return None;
                }
            }
            if i == 0 {
                product = stack;
            }
        }
        Some(CrWord::new_unchecked(Word::new(product)))
    }

    fn inverse(&self, e: &CrWord) -> CrWord {
        CrWord::new_unchecked(invert_unchecked(e.word(), &self.dg.dec))
    }

    /// By length, then lexicographically on `(vertex, elem)`.
    fn elements(&self, max_size: usize) -> Vec<CrWord> {
        let g = &self.dg.graph;
        let alphabet: Vec<Letter> = (0..g.vertex_count())
            .flat_map(|v| {
                (1..self.dg.dec[v].order()).map(move |e| Letter::new_unchecked(v, e))
            })
            .collect();
        let mut out = vec![CrWord::empty()];
        let mut word: Vec<Letter> = Vec::new();
        extend_elements(g, &alphabet, max_size, &mut word, &mut out);
        out.sort();
        out
    }

    fn size(&self, e: &CrWord) -> usize {
        e.len()
    }

    fn describe(&self) -> String {
        let names: Vec<String> = (0..self.dg.graph.vertex_count())
            .map(|v| format!("{}:{}", self.dg.graph.label(v), self.dg.dec[v].iso_name()))
            .collect();
        format!(
            "partial group of a decorated graph with {} vertices and {} edges [{}]",
            self.dg.graph.vertex_count(),
            self.dg.graph.edge_count(),
            names.join(", ")
        )
    }

    fn format_elem(&self, e: &CrWord) -> String {
        let g = &self.dg.graph;
        format_word(e.letters(), |v| g.label(v).to_string())
    }
}

/// Depth-first extension of reduced, clique-supported words; records the
/// cyclically reduced ones.
fn extend_elements(
    g: &Graph,
    alphabet: &[Letter],
    max_len: usize,
    word: &mut Vec<Letter>,
    out: &mut Vec<CrWord>,
) {
    if word.len() == max_len {
        return;
    }
    for &l in alphabet {
        if let Some(last) = word.last() {
            if last.vertex() == l.vertex() {
                continue;
            }
        }
        if !word
            .iter()
            .all(|x| x.vertex() == l.vertex() || g.has_edge(x.vertex(), l.vertex()))
        {
            continue;
        }
        word.push(l);
        if is_cyclically_reduced_slice(word) {
            out.push(CrWord::new_unchecked(Word::new(word.clone())));
        }
        extend_elements(g, alphabet, max_len, word, out);
        word.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partial::{check_axioms, Bounds};

    fn k2_z2z3() -> MgHandle {
        let g = Graph::complete(2)
            .with_labels(vec!["a".into(), "b".into()])
            .unwrap();
        let dec = vec![FinGroup::cyclic(2).unwrap(), FinGroup::cyclic(3).unwrap()];
        build(DecGraph::new(g, dec).unwrap())
    }

    fn labelled(g: Graph) -> Graph {
        let labels = ["a", "b", "c", "d", "e", "f", "g", "h"];
        let n = g.vertex_count();
        g.with_labels(labels[..n].iter().map(|s| s.to_string()).collect())
            .unwrap()
    }

    fn elems(h: &MgHandle, max: usize) -> Vec<String> {
        h.elements(max).iter().map(|e| h.format_elem(e)).collect()
    }

    #[test]
    fn membership() {
        let m = k2_z2z3();
        let w = |s: &str| CrWord::new(parse_word(s, |l| m.graph().vertex_by_label(l)).unwrap(), m.decorations());
        assert!(m.contains(&w("a b a b.2").unwrap()));
        // first and last letters on the same vertex
        assert!(w("b a b").is_err());
        assert!(m.parse_elem("b a b").is_err());
        let e2 = path_partial(labelled(Graph::new(2)));
        assert!(matches!(e2.parse_elem("a b"), Err(Error::NotAnElement(_))));
        assert!(DecGraph::new(Graph::new(1), vec![FinGroup::trivial()]).is_err());
    }

    #[test]
    fn path_partial_group_elements() {
        let p = path_partial(labelled(Graph::complete(2)));
        assert_eq!(elems(&p, 2), ["()", "a", "b", "a b", "b a"]);
        assert_eq!(
            elems(&p, 4),
            ["()", "a", "b", "a b", "b a", "a b a b", "b a b a"]
        );
        assert!(p.parse_elem("a b a").is_err());
        assert_eq!(elems(&path_partial(labelled(Graph::new(1))), 6), ["()", "a"]);
        assert_eq!(elems(&p, 0), ["()"]);
        assert_eq!(elems(&k2_z2z3(), 1), ["()", "a", "b", "b.2"]);
    }

    #[test]
    fn element_counts_match_closed_walk_count() {
        // closed non-backtracking sequences of length L ≥ 2 on K_n are the
        // proper colourings of the L-cycle: (n-1)^L + (-1)^L (n-1)
        for n in 1..=4usize {
            let p = path_partial(Graph::complete(n));
            let all = p.elements(6);
            for len in 0..=6usize {
                let got = all.iter().filter(|e| e.len() == len).count();
                let expect = match len {
                    0 => 1,
                    1 => n,
                    _ => {
                        let m = (n as i64) - 1;
                        let sign = if len % 2 == 0 { 1 } else { -1 };
                        (m.pow(len as u32) + sign * m) as usize
                    }
                };
                assert_eq!(got, expect, "K{n} length {len}");
            }
        }
    }

    #[test]
    fn domain_examples() {
        let p = path_partial(labelled(Graph::complete(2)));
        let d = |s: &str| p.in_domain(&p.parse_sequence(s).unwrap());
        assert!(d("a b | a b"));
        assert!(!d("a | b | a"));
        assert!(d("a | b"));
        assert!(d(""));
        let e2 = path_partial(labelled(Graph::new(2)));
        let a = e2.parse_elem("a").unwrap();
        let b = e2.parse_elem("b").unwrap();
        assert!(!e2.in_domain(&[a, b]));
        let seq = p.parse_sequence("a b | b a").unwrap();
        assert_eq!(p.product(&seq).unwrap(), CrWord::empty());
        let m = k2_z2z3();
        let seq = m.parse_sequence("a b | b.2 a").unwrap();
        assert_eq!(m.product(&seq).unwrap(), CrWord::empty());
        assert_eq!(m.product(&[]).unwrap(), CrWord::empty());
        assert!(matches!(
            p.product(&p.parse_sequence("a | b | a").unwrap()),
            Err(Error::NotInDomain(_))
        ));
    }

    #[test]
    fn adjacent_letters_multiply_iff_adjacent() {
        let g = labelled(Graph::path(3));
        let p = path_partial(g.clone());
        for u in 0..3 {
            for v in 0..3 {
                if u != v {
                    let w = [p.letter(u, 1).unwrap(), p.letter(v, 1).unwrap()];
                    assert_eq!(p.in_domain(&w), g.has_edge(u, v));
                }
            }
        }
    }

    #[test]
    fn domain_is_closed_under_contiguous_parts() {
        let p = path_partial(labelled(Graph::complete(3)));
        let elems = p.elements(3);
        for x in &elems {
            for y in &elems {
                for z in &elems {
                    let w = [x.clone(), y.clone(), z.clone()];
                    if p.in_domain(&w) {
                        for i in 0..3 {
                            for j in i..=3 {
                                assert!(p.in_domain(&w[i..j]));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn decorated_graphs_satisfy_the_axioms() {
        for h in [k2_z2z3(), path_partial(labelled(Graph::path(3)))] {
            let r = check_axioms(&h, &Bounds::default());
            assert!(r.all_passed(), "{:?}", r.violations);
            assert!(r.complete);
        }
    }
}
