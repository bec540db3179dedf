//! Truncated nerve: the `k`-simplices are the words of length `k` in the
//! domain, degenerate ones (containing the unit) included. Faces multiply
//! adjacent entries or drop an end; degeneracies insert the unit.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partial::{for_each_domain_word, PartialGroup};

#[derive(Clone, Debug)]
pub struct NerveTruncation<E> {
    pub dim: usize,
    pub max_elem_size: usize,
    /// `simplices[k]` holds the `k`-simplices, sorted.
    pub simplices: Vec<Vec<Vec<E>>>,
}

/// First failure of a simplicial identity or horn filling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NerveViolation {
    pub identity: String,
    pub simplex: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct NerveReport {
    pub identities_checked: usize,
    pub horns_checked: usize,
    pub violation: Option<NerveViolation>,
}

impl NerveReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Builds the nerve up to dimension `dim` from elements of size at most
/// `max_elem_size`; `cap` bounds the number of simplices per dimension.
pub fn nerve<P: PartialGroup>(
    p: &P,
    dim: usize,
    max_elem_size: usize,
    cap: usize,
) -> Result<NerveTruncation<P::Elem>> {
    let elems = p.elements(max_elem_size);
    let mut simplices: Vec<Vec<Vec<P::Elem>>> = vec![Vec::new(); dim + 1];
    simplices[0].push(Vec::new());
    let complete = for_each_domain_word(p, &elems, dim, cap.saturating_mul(dim.max(1)), |w| {
        simplices[w.len()].push(w.to_vec())
    });
    if !complete || simplices.iter().any(|s| s.len() > cap) {
        return Err(Error::EnumerationLimit(format!(
            "nerve exceeds {cap} simplices in some dimension"
        )));
    }
    for s in &mut simplices {
        s.sort();
    }
    Ok(NerveTruncation {
        dim,
        max_elem_size,
        simplices,
    })
}

/// `d_i` of a `k`-simplex. `None` if an inner product is undefined.
pub fn face<P: PartialGroup>(p: &P, s: &[P::Elem], i: usize) -> Option<Vec<P::Elem>> {
    let k = s.len();
    if k == 0 || i > k {
        return None;
    }
    if i == 0 {
        return Some(s[1..].to_vec());
    }
    if i == k {
        return Some(s[..k - 1].to_vec());
    }
    let mut out = s[..i - 1].to_vec();
    out.push(p.try_product(&s[i - 1..=i])?);
    out.extend_from_slice(&s[i + 1..]);
    Some(out)
}

/// `s_i` of a `k`-simplex: the unit inserted at position `i`.
pub fn degeneracy<P: PartialGroup>(p: &P, s: &[P::Elem], i: usize) -> Vec<P::Elem> {
    let mut out = s.to_vec();
    out.insert(i.min(s.len()), p.unit());
    out
}

fn word_text<P: PartialGroup>(p: &P, s: &[P::Elem]) -> String {
    p.format_word(s)
}

impl<E: Clone + Ord> NerveTruncation<E> {
    pub fn count(&self, k: usize) -> usize {
        self.simplices.get(k).map_or(0, Vec::len)
    }

    pub fn index_of(&self, s: &[E]) -> Option<usize> {
        self.simplices.get(s.len())?.binary_search_by(|x| x.as_slice().cmp(s)).ok()
    }

    /// Simplices with no unit entry.
    pub fn nondegenerate_count(&self, k: usize, unit: &E) -> usize {
        self.simplices
            .get(k)
            .map_or(0, |l| l.iter().filter(|s| !s.contains(unit)).count())
    }
}

/// Face and degeneracy identities on every stored simplex, plus closure of
/// the domain under both operators.
pub fn check_simplicial_identities<P: PartialGroup>(
    p: &P,
    n: &NerveTruncation<P::Elem>,
) -> NerveReport {
    let mut report = NerveReport::default();
    let fail = |report: &mut NerveReport, what: String, s: &[P::Elem]| {
        if report.violation.is_none() {
            report.violation = Some(NerveViolation {
                identity: what,
                simplex: word_text(p, s),
            });
        }
    };
    for (k, level) in n.simplices.iter().enumerate() {
        for s in level {
            let faces: Vec<Option<Vec<P::Elem>>> = if k == 0 {
                Vec::new()
            } else {
                (0..=k).map(|i| face(p, s, i)).collect()
            };
            for (i, f) in faces.iter().enumerate() {
                report.identities_checked += 1;
                match f {
                    Some(f) if p.in_domain(f) => {}
                    _ => fail(&mut report, format!("d{i} stays in the domain"), s),
                }
            }
            // d_i d_j = d_{j-1} d_i for i < j
            if k >= 2 {
                for j in 1..=k {
                    for i in 0..j {
                        report.identities_checked += 1;
                        let lhs = faces[j].as_ref().and_then(|f| face(p, f, i));
                        let rhs = faces[i].as_ref().and_then(|f| face(p, f, j - 1));
                        if lhs.is_none() || lhs != rhs {
                            fail(&mut report, format!("d{i} d{j} = d{} d{i}", j - 1), s);
                        }
                    }
                }
            }
            let degens: Vec<Vec<P::Elem>> = (0..=k).map(|i| degeneracy(p, s, i)).collect();
            for (j, sj) in degens.iter().enumerate() {
                report.identities_checked += 1;
                if !p.in_domain(sj) {
                    fail(&mut report, format!("s{j} stays in the domain"), s);
                }
                // s_i s_j = s_{j+1} s_i for i <= j
                for i in 0..=j {
                    report.identities_checked += 1;
                    let lhs = degeneracy(p, sj, i);
                    let rhs = degeneracy(p, &degens[i], j + 1);
                    if lhs != rhs {
                        fail(&mut report, format!("s{i} s{j} = s{} s{i}", j + 1), s);
                    }
                }
                // d_i s_j
                for i in 0..=k + 1 {
                    report.identities_checked += 1;
                    let lhs = face(p, sj, i);
                    let rhs = if i < j {
                        faces[i].as_ref().map(|f| degeneracy(p, f, j - 1))
                    } else if i == j || i == j + 1 {
                        Some(s.clone())
                    } else {
                        faces[i - 1].as_ref().map(|f| degeneracy(p, f, j))
                    };
                    if lhs.is_none() || lhs != rhs {
                        let name = if i < j {
                            format!("d{i} s{j} = s{} d{i}", j - 1)
                        } else if i <= j + 1 {
                            format!("d{i} s{j} = id")
                        } else {
                            format!("d{i} s{j} = s{j} d{}", i - 1)
                        };
                        fail(&mut report, name, s);
                    }
                }
            }
        }
    }
    report
}

/// Inner 2-horns on composable pairs: for stored 1-simplices `x`,
/// `y` with `(x, y) ∈ D` the 2-simplex `(x, y)` is stored and has faces
/// `y`, `xy`, `x`.
pub fn check_inner_horns<P: PartialGroup>(p: &P, n: &NerveTruncation<P::Elem>) -> NerveReport {
    let mut report = NerveReport::default();
    if n.dim < 2 {
        return report;
    }
    for x in &n.simplices[1] {
        for y in &n.simplices[1] {
            let w = [x[0].clone(), y[0].clone()];
            let Some(xy) = p.try_product(&w) else {
                continue;
            };
            report.horns_checked += 1;
            let filled = n.index_of(&w).is_some()
                && face(p, &w, 0).as_deref() == Some(&y[..])
                && face(p, &w, 1) == Some(vec![xy])
                && face(p, &w, 2).as_deref() == Some(&x[..]);
            if !filled && report.violation.is_none() {
                report.violation = Some(NerveViolation {
                    identity: "horn (1 of 2) has a filler".into(),
                    simplex: word_text(p, &w),
                });
            }
        }
    }
    report
}

#[derive(Serialize)]
struct NerveJson {
    max_elem_size: usize,
    simplices: BTreeMap<usize, Vec<String>>,
    /// `faces[k][s][i]`: index of `d_i` of simplex `s` among the
    /// `(k-1)`-simplices, `null` when outside the truncation.
    faces: BTreeMap<usize, Vec<Vec<Option<usize>>>>,
    /// `degeneracies[k][s][i]`: index of `s_i` among the `(k+1)`-simplices.
    degeneracies: BTreeMap<usize, Vec<Vec<Option<usize>>>>,
}

pub fn to_json<P: PartialGroup>(p: &P, n: &NerveTruncation<P::Elem>) -> serde_json::Value {
    let mut out = NerveJson {
        max_elem_size: n.max_elem_size,
        simplices: BTreeMap::new(),
        faces: BTreeMap::new(),
        degeneracies: BTreeMap::new(),
    };
    for (k, level) in n.simplices.iter().enumerate() {
        out.simplices
            .insert(k, level.iter().map(|s| word_text(p, s)).collect());
        if k > 0 {
            let f = level
                .iter()
                .map(|s| {
                    (0..=k)
                        .map(|i| face(p, s, i).and_then(|f| n.index_of(&f)))
                        .collect()
                })
                .collect();
            out.faces.insert(k, f);
        }
        if k < n.dim {
            let d = level
                .iter()
                .map(|s| (0..=k).map(|i| n.index_of(&degeneracy(p, s, i))).collect())
                .collect();
            out.degeneracies.insert(k, d);
        }
    }
    serde_json::to_value(out).expect("plain data")
}
