//! Acceptance suite: each criterion runs at fixed bounds and seeds and
//! reports one PASS/FAIL line.

use std::collections::BTreeSet;
use std::fmt;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::{
    element_order, homotopy_selfequiv_order, maximal_finite_subgroups, maxsub_graph_from,
    normalizer, recover_check, AnalysisBounds, ElementOrder,
};
use crate::decpart::{build, path_partial, DecGraph};
use crate::error::{Error, Result};
use crate::fingroup::FinGroup;
use crate::graph::{automorphisms, frucht_realize, isomorphic, Graph, SearchLimits};
use crate::io::{read_decgraph, read_handle, AnyHandle};
use crate::morphisms::{aut_group, brute_aut_truncated, OracleLimits};
use crate::nerve::{check_inner_horns, check_simplicial_identities, nerve};
use crate::partial::{check_axioms, free_on_one, from_group, Axiom, Bounds, PartialGroup};
use crate::words::{self, CrWord, Letter, Word};

/// Seed of the random decorated graphs compared against the oracle.
pub const ORACLE_SEED: u64 = 0x7061_7468_0003;
/// Seed of the random decorated graphs used for recovery.
pub const RECOVERY_SEED: u64 = 0x7061_7468_0004;
/// Seed of the random words.
pub const WORDS_SEED: u64 = 0x7061_7468_0011;

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub fixtures: PathBuf,
    /// Run only criteria whose name contains this text (or whose number
    /// equals it).
    pub filter: Option<String>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            fixtures: default_fixtures_dir(),
            filter: None,
        }
    }
}

pub fn default_fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub struct Criterion {
    pub id: usize,
    pub name: &'static str,
    pub fixtures: &'static [&'static str],
    run: fn(&Path) -> Result<Checks>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} [{:>2}] {}: {}", self.id, self.name, self.detail)
    }
}

/// Accumulates the facts a criterion establishes and the ones it fails.
#[derive(Default)]
struct Checks {
    notes: Vec<String>,
    failures: Vec<String>,
}

impl Checks {
    fn check(&mut self, ok: bool, what: impl Into<String>) {
        let what = what.into();
        if ok {
            self.notes.push(what);
        } else {
            self.failures.push(what);
        }
    }

    fn within(&mut self, start: Instant, budget: Duration, label: &str) {
        self.check(start.elapsed() < budget, format!("within {label}"));
    }
}

pub const CRITERIA: &[Criterion] = &[
    Criterion {
        id: 1,
        name: "aut-k2-z2-z3",
        fixtures: &["k2_z2z3.json"],
        run: aut_k2_z2_z3,
    },
    Criterion {
        id: 2,
        name: "path-aut-connected-graphs",
        fixtures: &[],
        run: path_aut_connected_graphs,
    },
    Criterion {
        id: 3,
        name: "aut-oracle-random",
        fixtures: &[],
        run: aut_oracle_random,
    },
    Criterion {
        id: 4,
        name: "recover-random",
        fixtures: &[],
        run: recover_random,
    },
    Criterion {
        id: 5,
        name: "path-k2-subgroups",
        fixtures: &["path_k2.json"],
        run: path_k2_subgroups,
    },
    Criterion {
        id: 6,
        name: "d8-amalgam-subgroups",
        fixtures: &["d8_amalgam.json"],
        run: d8_amalgam_subgroups,
    },
    Criterion {
        id: 7,
        name: "axioms",
        fixtures: &["s3.json", "free_on_one.json", "d8_amalgam.json", "corrupted.json"],
        run: axioms,
    },
    Criterion {
        id: 8,
        name: "nerve-normalizer",
        fixtures: &["path_p3.json"],
        run: nerve_normalizer,
    },
    Criterion {
        id: 9,
        name: "frucht-realize",
        fixtures: &[],
        run: frucht,
    },
    Criterion {
        id: 10,
        name: "aut-p3-z3-section",
        fixtures: &["p3_z3.json"],
        run: aut_p3_z3_section,
    },
    Criterion {
        id: 11,
        name: "words-oracle",
        fixtures: &[],
        run: words_oracle,
    },
];

fn selected(c: &Criterion, filter: Option<&str>) -> bool {
    match filter {
        None => true,
        Some(f) => c.name.contains(f) || f.parse::<usize>().ok() == Some(c.id),
    }
}

pub fn run_criterion(c: &Criterion, fixtures: &Path) -> Outcome {
    let missing: Vec<&str> = c
        .fixtures
        .iter()
        .copied()
        .filter(|f| !fixtures.join(f).is_file())
        .collect();
    let (passed, detail) = if !missing.is_empty() {
        (
            false,
            format!("missing fixture {} in {}", missing.join(", "), fixtures.display()),
        )
    } else {
        match (c.run)(fixtures) {
            Ok(ch) if ch.failures.is_empty() => (true, ch.notes.join("; ")),
            Ok(ch) => (false, ch.failures.join("; ")),
            Err(e) => (false, format!("error: {e}")),
        }
    };
    Outcome {
        id: c.id,
        name: c.name,
        passed,
        detail,
    }
}

/// Runs the selected criteria in order, calling `report` after each.
pub fn run_suite(cfg: &SuiteConfig, mut report: impl FnMut(&Outcome)) -> Vec<Outcome> {
    CRITERIA
        .iter()
        .filter(|c| selected(c, cfg.filter.as_deref()))
        .map(|c| {
            let o = run_criterion(c, &cfg.fixtures);
            report(&o);
            o
        })
        .collect()
}

pub fn criterion(id: usize) -> &'static Criterion {
    &CRITERIA[id - 1]
}

fn limits() -> SearchLimits {
    SearchLimits::default()
}

fn z(n: usize) -> FinGroup {
    FinGroup::cyclic(n).expect("positive order")
}

// 1

fn aut_k2_z2_z3(fixtures: &Path) -> Result<Checks> {
    let start = Instant::now();
    let mut ch = Checks::default();
    let dg = read_decgraph(&fixtures.join("k2_z2z3.json"))?;
    let r = aut_group(&dg, &limits())?;
    ch.check(r.order() == 2, format!("order {}", r.order()));
    let b = dg
        .graph()
        .vertex_by_label("b")
        .ok_or_else(|| Error::UnknownVertex("b".into()))?;
    let h = build(dg.clone());
    let Some(nontrivial) = r.elements.get(1) else {
        return Ok(ch);
    };
    let image = nontrivial.apply(&h.letter(b, 1)?);
    ch.check(
        nontrivial.gmap.is_identity() && image == h.letter(b, 2)?,
        format!("non-trivial element fixes the graph and sends b to {}", h.format_elem(&image)),
    );
    let k = r.kernel_group();
    ch.check(
        k.order() == 2 && k.is_isomorphic(&z(2)),
        format!("kernel {}", k.iso_name()),
    );
    ch.check(
        r.image.len() == 1 && !r.is_surjective(),
        "trivial image in the graph automorphisms, so the sequence is not short exact",
    );
    ch.check(r.sequence() == "1 → Z2 → Z2 → Z2", r.sequence());
    ch.within(start, Duration::from_secs(1), "1 s");
    Ok(ch)
}

// 2

/// Connected graphs up to isomorphism on exactly `n` vertices.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    let mut out: Vec<Graph> = Vec::new();
    for g in Graph::all_on(n).filter(Graph::is_connected) {
        let mut new = true;
        for h in &out {
            if h.edge_count() == g.edge_count() && isomorphic(h, &g, &limits())?.is_some() {
                new = false;
                break;
            }
        }
        if new {
            out.push(g);
        }
    }
    Ok(out)
}

fn path_aut_connected_graphs(_: &Path) -> Result<Checks> {
    let start = Instant::now();
    let mut ch = Checks::default();
    let mut counts = Vec::new();
    let mut mismatched = Vec::new();
    let mut total = 0;
    for n in 1..=5 {
        let graphs = connected_graphs(n)?;
        counts.push(graphs.len());
        for g in graphs {
            let auts = automorphisms(&g, &limits())?.len();
            let h = path_partial(g.clone());
            let oracle = brute_aut_truncated(&h, 6, &OracleLimits::default())?;
            let lifts = aut_group(h.decgraph(), &limits())?.truncated_action(&oracle.elements);
            if oracle.len() != auts || lifts.as_ref() != Some(&oracle.maps) {
                mismatched.push(format!("{:?}", g.edges()));
            }
            total += 1;
        }
    }
    ch.check(
        counts == [1, 1, 2, 6, 21],
        format!("connected graphs by order {counts:?}"),
    );
    ch.check(
        mismatched.is_empty(),
        format!(
            "{} of {total} graphs: oracle at element size 6 matches the graph automorphisms map for map{}",
            total - mismatched.len(),
            if mismatched.is_empty() {
                String::new()
            } else {
                format!(" (mismatch on {})", mismatched.join(", "))
            }
        ),
    );
    ch.within(start, Duration::from_secs(300), "5 min");
    Ok(ch)
}

// 3 and 4

/// A graph on `1..=max_vertices` vertices with independent edges of
/// probability 1/2 and decorations drawn from `choices`.
pub fn random_decgraph(rng: &mut impl Rng, max_vertices: usize, choices: &[FinGroup]) -> DecGraph {
    let n = rng.gen_range(1..=max_vertices);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.5) {
                g.add_edge(u, v).expect("distinct vertices");
            }
        }
    }
    let dec = (0..n)
        .map(|_| choices.choose(rng).expect("non-empty").clone())
        .collect();
    DecGraph::new(g, dec).expect("non-trivial decorations")
}

/// Upper bound on `|Aut|`: decoration automorphisms times graph
/// automorphisms.
fn aut_size_bound(dg: &DecGraph) -> Result<usize> {
    let graph = automorphisms(dg.graph(), &limits())?.len();
    Ok(dg
        .decorations()
        .iter()
        .map(|h| h.automorphisms().len())
        .product::<usize>()
        * graph)
}

/// Largest automorphism group admitted into the oracle corpus.
pub const ORACLE_AUT_BOUND: usize = 512;
/// Element size of the oracle comparison.
pub const ORACLE_MAX_SIZE: usize = 3;

/// The oracle corpus: seeded draws on at most 5 vertices with decorations
/// in `{Z2, Z3, V4}`, skipping draws whose automorphism bound exceeds
/// [`ORACLE_AUT_BOUND`].
pub fn oracle_corpus(count: usize) -> Result<Vec<DecGraph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(ORACLE_SEED);
    let choices = [z(2), z(3), FinGroup::klein_four()];
    let mut out = Vec::new();
    while out.len() < count {
        let dg = random_decgraph(&mut rng, 5, &choices);
        if aut_size_bound(&dg)? <= ORACLE_AUT_BOUND {
            out.push(dg);
        }
    }
    Ok(out)
}

fn aut_oracle_random(_: &Path) -> Result<Checks> {
    let mut ch = Checks::default();
    let mut agree = 0;
    let corpus = oracle_corpus(10)?;
    for (i, dg) in corpus.iter().enumerate() {
        let h = build(dg.clone());
        let oracle = brute_aut_truncated(&h, ORACLE_MAX_SIZE, &OracleLimits::default())?;
        let r = aut_group(dg, &limits())?;
        let action = r.truncated_action(&oracle.elements);
        let ok = action.as_ref() == Some(&oracle.maps) && oracle.len() == r.order();
        if ok {
            agree += 1;
        } else {
            ch.failures.push(format!(
                "graph {i}: oracle found {} maps, automorphism group has {}",
                oracle.len(),
                r.order()
            ));
        }
    }
    ch.notes.push(format!(
        "{agree} of {} seeded decorated graphs agree with the oracle at element size {ORACLE_MAX_SIZE}",
        corpus.len()
    ));
    Ok(ch)
}

/// Element size used for recovery: letters and their pairwise products.
pub const RECOVERY_MAX_SIZE: usize = 2;

pub fn recovery_corpus(count: usize) -> Vec<DecGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(RECOVERY_SEED);
    let choices = [z(2), z(3), z(4), FinGroup::klein_four(), FinGroup::symmetric3()];
    (0..count)
        .map(|_| random_decgraph(&mut rng, 8, &choices))
        .collect()
}

pub fn recovery_bounds() -> AnalysisBounds {
    AnalysisBounds {
        max_elem_size: RECOVERY_MAX_SIZE,
        ..AnalysisBounds::default()
    }
}

fn recover_random(_: &Path) -> Result<Checks> {
    let mut ch = Checks::default();
    let corpus = recovery_corpus(20);
    let mut found = 0;
    for (i, dg) in corpus.iter().enumerate() {
        let r = recover_check(dg, &recovery_bounds(), &limits())?;
        if r.iso.is_some() {
            found += 1;
        } else {
            ch.failures.push(format!(
                "graph {i}: no isomorphism ({} subgroups found for {} vertices)",
                r.records.len(),
                dg.graph().vertex_count()
            ));
        }
    }
    ch.notes.push(format!(
        "isomorphism found for {found} of {} seeded decorated graphs at element size {RECOVERY_MAX_SIZE}",
        corpus.len()
    ));
    Ok(ch)
}

// 5

/// Cyclically reduced alternating words over two involutions, up to
/// `max_len`, by length then lexicographically.
fn two_letter_cr_words(max_len: usize) -> Vec<String> {
    let mut out = vec!["()".to_string()];
    for len in 1..=max_len {
        if len >= 2 && len % 2 == 1 {
            continue;
        }
        for first in ["a", "b"] {
            let other = if first == "a" { "b" } else { "a" };
            let w: Vec<&str> = (0..len).map(|i| if i % 2 == 0 { first } else { other }).collect();
            out.push(w.join(" "));
        }
    }
    out
}

fn path_k2_subgroups(fixtures: &Path) -> Result<Checks> {
    let mut ch = Checks::default();
    let AnyHandle::Dec(h) = read_handle(&fixtures.join("path_k2.json"))? else {
        return Err(Error::Parse("path_k2.json must describe a path partial group".into()));
    };
    let listed: Vec<String> = h.elements(6).iter().map(|e| h.format_elem(e)).collect();
    ch.check(
        listed == two_letter_cr_words(6),
        format!("{} elements up to length 6 match the alternating words", listed.len()),
    );
    let b = AnalysisBounds::default();
    let recs = maximal_finite_subgroups(&h, &b);
    ch.check(
        recs.len() == 2 && recs.iter().all(|r| r.order() == 2),
        format!("{} maximal finite subgroups of orders {:?}", recs.len(), recs.iter().map(|r| r.order()).collect::<Vec<_>>()),
    );
    let ab = h.parse_elem("a b")?;
    let order = element_order(&h, &ab, b.power_bound);
    ch.check(
        order == ElementOrder::Infinite,
        format!("a b classified {order:?} at power bound {}", b.power_bound),
    );
    let lengths: Vec<usize> = (1..=5)
        .map(|n| {
            let letters = ab.letters().repeat(n);
            words::reduce(&Word::new(letters), h.decorations()).map(|w| w.len())
        })
        .collect::<Result<_>>()?;
    ch.check(
        lengths == [2, 4, 6, 8, 10],
        format!("reduced powers have lengths {lengths:?}"),
    );
    Ok(ch)
}

// 6

fn names<P: PartialGroup>(p: &P, elems: &[P::Elem]) -> BTreeSet<String> {
    elems.iter().map(|e| p.format_elem(e)).collect()
}

fn d8_amalgam_subgroups(fixtures: &Path) -> Result<Checks> {
    let mut ch = Checks::default();
    let AnyHandle::Colimit(m) = read_handle(&fixtures.join("d8_amalgam.json"))? else {
        return Err(Error::Parse("d8_amalgam.json must describe a group diagram".into()));
    };
    let el = |s: &str| {
        m.class_by_name(s)
            .ok_or_else(|| Error::NotAnElement(s.to_string()))
    };
    let (x2, t, tx) = (el("x2")?, el("t")?, el("x3t")?);
    ch.check(m.in_domain(&[x2, x2]), "(x2, x2) in the domain");
    ch.check(!m.in_domain(&[t, tx]), "(t, tx) outside the domain");
    let recs = maximal_finite_subgroups(&m, &AnalysisBounds::default());
    let found: BTreeSet<BTreeSet<String>> = recs.iter().map(|r| names(&m, &r.elements)).collect();
    let expected: BTreeSet<BTreeSet<String>> = [["1", "x2", "t", "x2t"], ["1", "x2", "xt", "x3t"]]
        .iter()
        .map(|s| s.iter().map(|x| x.to_string()).collect())
        .collect();
    ch.check(found == expected, format!("maximal finite subgroups {found:?}"));
    ch.check(
        maxsub_graph_from(&m, &recs, false).edge_count() == 1,
        "the subgroup graph joins them",
    );
    ch.check(
        maxsub_graph_from(&m, &recs, true).edge_count() == 0,
        "the strong subgroup graph does not",
    );
    Ok(ch)
}

// 7

fn axiom_check<P: PartialGroup>(ch: &mut Checks, name: &str, p: &P, bounds: &Bounds) {
    let r = check_axioms(p, bounds);
    let detail = match r.violations.values().next() {
        Some(v) => format!("{name}: {:?} fails on {}", v.axiom, v.detail),
        None if !r.complete => format!("{name}: enumeration cap reached"),
        None => format!("{name} passes ({} domain words)", r.domain_words_checked),
    };
    ch.check(r.all_passed() && r.complete, detail);
}

/// Path and decorated partial groups checked alongside the fixtures.
pub fn axiom_corpus() -> Vec<(String, DecGraph)> {
    let z2 = z(2);
    let z3 = z(3);
    let mut out = Vec::new();
    for (name, g) in [
        ("path partial group of K1", Graph::complete(1)),
        ("path partial group of K2", Graph::complete(2)),
        ("path partial group of P3", Graph::path(3)),
        ("path partial group of C4", Graph::cycle(4)),
        ("path partial group of two isolated vertices", Graph::new(2)),
    ] {
        out.push((name.to_string(), DecGraph::uniform(g, &z2).expect("Z2")));
    }
    out.push((
        "K2 decorated Z2, Z3".into(),
        DecGraph::new(Graph::complete(2), vec![z2.clone(), z3.clone()]).expect("valid"),
    ));
    out.push((
        "P3 decorated Z2, Z3, Z2".into(),
        DecGraph::new(Graph::path(3), vec![z2.clone(), z3.clone(), z2.clone()]).expect("valid"),
    ));
    out.push((
        "K2 decorated V4, Z2".into(),
        DecGraph::new(Graph::complete(2), vec![FinGroup::klein_four(), z2]).expect("valid"),
    ));
    out
}

fn axioms(fixtures: &Path) -> Result<Checks> {
    let mut ch = Checks::default();
    let bounds = Bounds::default();
    for f in ["s3.json", "free_on_one.json", "d8_amalgam.json"] {
        let h = read_handle(&fixtures.join(f))?;
        crate::with_handle!(&h, p => axiom_check(&mut ch, f, p, &bounds));
    }
    axiom_check(&mut ch, "S3 built in", &from_group(FinGroup::symmetric3()), &bounds);
    axiom_check(&mut ch, "free on one built in", &free_on_one(), &bounds);
    for (name, dg) in axiom_corpus() {
        axiom_check(&mut ch, &name, &build(dg), &bounds);
    }
    // a triangle exceeds the domain-word cap at the default element size
    axiom_check(
        &mut ch,
        "path partial group of K3 at element size 3",
        &path_partial(Graph::complete(3)),
        &Bounds::new(3, 4),
    );
    let AnyHandle::Corrupted(bad) = read_handle(&fixtures.join("corrupted.json"))? else {
        return Err(Error::Parse("corrupted.json must describe a corrupted handle".into()));
    };
    let r = check_axioms(&bad, &bounds);
    match r.violation(Axiom::P2) {
        Some(v) => ch.check(
            v.replays(&bad),
            format!("corrupted fixture fails P2 on {} and the counterexample replays", v.detail),
        ),
        None => ch.check(false, "corrupted fixture passes P2"),
    }
    Ok(ch)
}

// 8

fn nerve_normalizer(fixtures: &Path) -> Result<Checks> {
    let mut ch = Checks::default();
    let AnyHandle::Dec(p3) = read_handle(&fixtures.join("path_p3.json"))? else {
        return Err(Error::Parse("path_p3.json must describe a path partial group".into()));
    };
    let n = nerve(&p3, 3, 4, 1_000_000)?;
    let ids = check_simplicial_identities(&p3, &n);
    let horns = check_inner_horns(&p3, &n);
    ch.check(
        ids.passed() && horns.passed(),
        format!(
            "P3 nerve to dimension 3: {} identities, {} horns ({:?})",
            ids.identities_checked,
            horns.horns_checked,
            ids.violation.or(horns.violation)
        ),
    );
    let z2 = from_group(z(2));
    let n = nerve(&z2, 3, 1, 1_000_000)?;
    let ids = check_simplicial_identities(&z2, &n);
    let horns = check_inner_horns(&z2, &n);
    ch.check(
        ids.passed() && horns.passed(),
        format!(
            "Z2 nerve to dimension 3: {} identities, {} horns",
            ids.identities_checked, horns.horns_checked
        ),
    );
    let mut trivial = 0;
    let mut total = 0;
    for k in 2..=5 {
        for g in connected_graphs(k)? {
            total += 1;
            if normalizer(&path_partial(g), 4).len() == 1 {
                trivial += 1;
            }
        }
    }
    ch.check(
        trivial == total,
        format!("normalizer trivial at element size 4 for {trivial} of {total} connected graphs on 2 to 5 vertices"),
    );
    let k2 = path_partial(Graph::complete(2));
    let e = homotopy_selfequiv_order(&k2, 4, &limits())?;
    ch.check(e == 2, format!("self-equivalences of the K2 path partial group: {e}"));
    Ok(ch)
}

// 9

fn frucht(_: &Path) -> Result<Checks> {
    let start = Instant::now();
    let mut ch = Checks::default();
    for (name, h) in [
        ("trivial", FinGroup::trivial()),
        ("Z2", z(2)),
        ("Z3", z(3)),
        ("S3", FinGroup::symmetric3()),
    ] {
        let graphs = frucht_realize(&h, 3, &limits())?;
        let mut distinct = graphs.len() == 3;
        for i in 0..graphs.len() {
            for j in i + 1..graphs.len() {
                distinct &= isomorphic(&graphs[i], &graphs[j], &limits())?.is_none();
            }
        }
        let mut ok = distinct;
        for g in &graphs {
            ok &= crate::graph::automorphism_group(g, &limits())?.is_isomorphic(&h);
            let dg = DecGraph::uniform(g.clone(), &z(2))?;
            ok &= aut_group(&dg, &limits())?.group.is_isomorphic(&h);
        }
        let sizes: Vec<usize> = graphs.iter().map(Graph::vertex_count).collect();
        ch.check(
            ok,
            format!("{name}: three distinct graphs on {sizes:?} vertices realize it, with their path partial groups"),
        );
    }
    ch.within(start, Duration::from_secs(120), "2 min");
    Ok(ch)
}

// 10

fn aut_p3_z3_section(fixtures: &Path) -> Result<Checks> {
    let mut ch = Checks::default();
    let dg = read_decgraph(&fixtures.join("p3_z3.json"))?;
    let r = aut_group(&dg, &limits())?;
    ch.check(r.order() == 16, format!("order {}", r.order()));
    let mut section = r.is_surjective();
    let mut lifts = Vec::new();
    for s in &r.image {
        match r.identity_lift(s) {
            Some(i) => lifts.push((s, i)),
            None => section = false,
        }
    }
    for (s, i) in &lifts {
        for (t, j) in &lifts {
            section &= r.identity_lift(&s.after(t)) == Some(r.group.mul(*i, *j));
        }
    }
    let lift_set: BTreeSet<usize> = lifts.iter().map(|&(_, i)| i).collect();
    let kernel: BTreeSet<usize> = r.kernel.iter().copied().collect();
    section &= lift_set.intersection(&kernel).count() == 1;
    section &= lift_set.len() * kernel.len() == r.order();
    ch.check(
        section,
        format!("identity lifts split {} over the graph automorphisms", r.sequence()),
    );
    Ok(ch)
}

// 11

/// Cyclically reduced by definition: every rotation is reduced.
fn cyclically_reduced_by_rotation(w: &Word) -> bool {
    let l = w.letters();
    (0..l.len().max(1)).all(|r| {
        let mut rot = l[r.min(l.len())..].to_vec();
        rot.extend_from_slice(&l[..r.min(l.len())]);
        words::is_reduced(&Word::new(rot))
    })
}

fn all_letters(dec: &[FinGroup]) -> Vec<Letter> {
    dec.iter()
        .enumerate()
        .flat_map(|(v, g)| (1..g.order()).map(move |e| Letter::new_unchecked(v, e)))
        .collect()
}

fn random_word(rng: &mut impl Rng, letters: &[Letter], max_len: usize) -> Word {
    let n = rng.gen_range(0..=max_len);
    Word::new((0..n).map(|_| *letters.choose(rng).expect("letters")).collect())
}

fn words_oracle(_: &Path) -> Result<Checks> {
    let mut ch = Checks::default();
    let mut rng = ChaCha8Rng::seed_from_u64(WORDS_SEED);
    let pool = [z(2), z(3), z(4), FinGroup::klein_four(), FinGroup::symmetric3()];
    let mut bad = 0;
    let samples = 10_000;
    for _ in 0..samples {
        let n = rng.gen_range(1..=4);
        let dec: Vec<FinGroup> = (0..n).map(|_| pool.choose(&mut rng).expect("pool").clone()).collect();
        let letters = all_letters(&dec);
        let u = random_word(&mut rng, &letters, 8);
        let v = random_word(&mut rng, &letters, 8);
        let w = random_word(&mut rng, &letters, 8);
        let r = |x: &Word| words::reduce(x, &dec);
        let ru = r(&u)?;
        let idempotent = r(&ru)? == ru && words::is_reduced(&ru);
        let cancels = r(&u.concat(&words::invert(&u, &dec)?))?.is_empty();
        let assoc = r(&r(&u.concat(&v))?.concat(&w))? == r(&u.concat(&r(&v.concat(&w))?))?;
        let cr = CrWord::new(ru.clone(), &dec).is_ok() == words::is_cyclically_reduced(&ru);
        if !(idempotent && cancels && assoc && cr) {
            bad += 1;
        }
    }
    ch.check(
        bad == 0,
        format!("{} of {samples} seeded random words: reduction idempotent, inverses cancel, products associate", samples - bad),
    );
    let mut checked = 0u64;
    let mut disagree = 0u64;
    for z3_count in 0..=3 {
        let dec: Vec<FinGroup> = (0..3).map(|i| if i < z3_count { z(3) } else { z(2) }).collect();
        let letters = all_letters(&dec);
        let mut word: Vec<Letter> = Vec::new();
        let mut idx: Vec<usize> = Vec::new();
        // odometer over all words of length 0..=8
        loop {
            let w = Word::new(word.clone());
            checked += 1;
            if words::is_cyclically_reduced(&w) != cyclically_reduced_by_rotation(&w) {
                disagree += 1;
            }
            if word.len() < 8 {
                idx.push(0);
                word.push(letters[0]);
                continue;
            }
            while let Some(i) = idx.pop() {
                word.pop();
                if i + 1 < letters.len() {
                    idx.push(i + 1);
                    word.push(letters[i + 1]);
                    break;
                }
            }
            if idx.is_empty() {
                break;
            }
        }
    }
    ch.check(
        disagree == 0,
        format!("cyclic-reduction shortcut agrees with all rotations on {checked} words of length at most 8 over 3 vertices"),
    );
    Ok(ch)
}
