//! JSON formats for groups, graphs, decorated graphs and handle specs.
//!
//! Group: a built-in name (`"Z3"`, `"V4"`, `"S3"`, `"D8"`) or
//! `{"order": n, "table": [[..]], "labels": [..]}`.
//!
//! Graph: `{"vertices": [..], "edges": [[u, v], ..]}` or
//! `{"adjacency": {"a": ["b"], ..}}`. Vertex names may be strings or
//! numbers; ids follow sorted name order (numeric when every name is a
//! number).
//!
//! Decorated graph: `{"graph": G, "decorations": {"a": "Z2", ..}}`, or
//! `"decoration": "Z2"` for the same group everywhere.
//!
//! Handle spec: an object with a `"kind"`:
//! - `"group"` with `"group"`;
//! - `"free-on-one"`;
//! - `"group-diagram"` with `"nodes"` (groups) and `"arrows"`
//!   (`{"src", "dst", "map"}`), or `"builtin": "d8-amalgam"`;
//! - `"decorated-graph"` with the decorated-graph fields;
//! - `"path"` with `"graph"`;
//! - `"corrupted"` with `"base"` (a decorated-graph or path spec), and
//!   `"word"`, `"image"` in word-literal syntax.
//!
//! An object without `"kind"` but with `"graph"` and decorations is read as
//! a decorated graph.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::decpart::{build, path_partial, DecGraph, MgHandle};
use crate::error::{Error, Result};
use crate::fingroup::{FinGroup, GroupMap};
use crate::graph::Graph;
use crate::partial::{
    colimit_of_groups, free_on_one, from_group, Arrow, ColimitHandle, CorruptedProduct,
    FreeOnOne, GroupDiagram, GroupHandle,
};

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Name(String),
    Table {
        #[serde(default)]
        order: Option<usize>,
        table: Vec<Vec<usize>>,
        #[serde(default)]
        labels: Option<Vec<String>>,
    },
}

impl GroupSpec {
    pub fn to_group(&self) -> Result<FinGroup> {
        match self {
            GroupSpec::Name(n) => FinGroup::builtin(n),
            GroupSpec::Table {
                order,
                table,
                labels,
            } => {
                if let Some(n) = order {
                    if *n != table.len() {
                        return Err(Error::Parse(format!(
                            "order {n} but the table has {} rows",
                            table.len()
                        )));
                    }
                }
                Ok(FinGroup::from_table_with_labels(
                    table.clone(),
                    labels.clone(),
                )?)
            }
        }
    }

    pub fn from_group(g: &FinGroup) -> Self {
        GroupSpec::Table {
            order: Some(g.order()),
            table: g.table_rows(),
            labels: g.labels().map(<[String]>::to_vec),
        }
    }
}

fn vertex_name(v: &Value) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        other => Err(Error::Parse(format!("vertex name must be a string or number, got {other}"))),
    }
}

/// Sorted order of names: numeric if all parse as integers.
fn sort_names(names: BTreeSet<String>) -> Vec<String> {
    let mut v: Vec<String> = names.into_iter().collect();
    if v.iter().all(|s| s.parse::<i64>().is_ok()) {
        v.sort_by_key(|s| s.parse::<i64>().expect("checked"));
    }
    v
}

pub fn graph_from_value(v: &Value) -> Result<Graph> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("graph must be an object".into()))?;
    let mut names = BTreeSet::new();
    let mut edges: Vec<(String, String)> = Vec::new();
    if let Some(adj) = obj.get("adjacency") {
        let adj = adj
            .as_object()
            .ok_or_else(|| Error::Parse("adjacency must be an object".into()))?;
        for (u, nbrs) in adj {
            names.insert(u.clone());
            let nbrs = nbrs
                .as_array()
                .ok_or_else(|| Error::Parse(format!("neighbours of {u} must be a list")))?;
            for w in nbrs {
                let w = vertex_name(w)?;
                names.insert(w.clone());
                edges.push((u.clone(), w));
            }
        }
    } else {
        let verts = obj
            .get("vertices")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("graph needs \"vertices\" or \"adjacency\"".into()))?;
        for x in verts {
            if !names.insert(vertex_name(x)?) {
                return Err(Error::Parse(format!("duplicate vertex {x}")));
            }
        }
        if let Some(es) = obj.get("edges") {
            let es = es
                .as_array()
                .ok_or_else(|| Error::Parse("edges must be a list".into()))?;
            for e in es {
                match e.as_array().map(Vec::as_slice) {
                    Some([u, w]) => edges.push((vertex_name(u)?, vertex_name(w)?)),
                    _ => return Err(Error::Parse(format!("edge must be a pair, got {e}"))),
                }
            }
        }
        for (u, w) in &edges {
            for x in [u, w] {
                if !names.contains(x) {
                    return Err(Error::UnknownVertex(x.clone()));
                }
            }
        }
    }
    let labels = sort_names(names);
    let id: BTreeMap<&str, usize> = labels
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_str(), i))
        .collect();
    let mut g = Graph::new(labels.len());
    for (u, w) in &edges {
        g.add_edge(id[u.as_str()], id[w.as_str()])?;
    }
    g.with_labels(labels.clone())
}

pub fn graph_to_value(g: &Graph) -> Value {
    let edges: Vec<[&str; 2]> = g
        .edges()
        .into_iter()
        .map(|(u, v)| [g.label(u), g.label(v)])
        .collect();
    serde_json::json!({ "vertices": g.labels(), "edges": edges })
}

pub fn decgraph_from_value(v: &Value) -> Result<DecGraph> {
    let graph = graph_from_value(
        v.get("graph")
            .ok_or_else(|| Error::Parse("decorated graph needs \"graph\"".into()))?,
    )?;
    let dec = if let Some(d) = v.get("decorations") {
        let map: BTreeMap<String, GroupSpec> = serde_json::from_value(d.clone())?;
        for k in map.keys() {
            if graph.vertex_by_label(k).is_none() {
                return Err(Error::UnknownVertex(k.clone()));
            }
        }
        graph
            .labels()
            .iter()
            .map(|l| {
                map.get(l)
                    .ok_or_else(|| Error::Parse(format!("no decoration for vertex {l}")))?
                    .to_group()
            })
            .collect::<Result<Vec<_>>>()?
    } else if let Some(d) = v.get("decoration") {
        let g = serde_json::from_value::<GroupSpec>(d.clone())?.to_group()?;
        vec![g; graph.vertex_count()]
    } else {
        return Err(Error::Parse(
            "decorated graph needs \"decorations\" or \"decoration\"".into(),
        ));
    };
    DecGraph::new(graph, dec)
}

pub fn decgraph_to_value(dg: &DecGraph) -> Value {
    let g = dg.graph();
    let dec: BTreeMap<&str, GroupSpec> = g
        .labels()
        .iter()
        .zip(dg.decorations())
        .map(|(l, h)| {
            let spec = match h.iso_name().as_str() {
                n @ ("V4" | "S3") => GroupSpec::Name(n.to_string()),
                n if n.starts_with('Z') && FinGroup::builtin(n).ok().as_ref() == Some(h) => {
                    GroupSpec::Name(n.to_string())
                }
                _ => GroupSpec::from_group(h),
            };
            (l.as_str(), spec)
        })
        .collect();
    serde_json::json!({ "graph": graph_to_value(g), "decorations": dec })
}

fn diagram_from_value(v: &Value) -> Result<GroupDiagram> {
    if let Some(b) = v.get("builtin") {
        return match b.as_str() {
            Some("d8-amalgam") => Ok(GroupDiagram::dihedral_amalgam()),
            _ => Err(Error::Parse(format!("unknown built-in diagram {b}"))),
        };
    }
    #[derive(Deserialize)]
    struct ArrowSpec {
        src: usize,
        dst: usize,
        map: Vec<usize>,
    }
    let nodes: Vec<GroupSpec> = serde_json::from_value(
        v.get("nodes")
            .cloned()
            .ok_or_else(|| Error::Parse("diagram needs \"nodes\"".into()))?,
    )?;
    let arrows: Vec<ArrowSpec> =
        serde_json::from_value(v.get("arrows").cloned().unwrap_or(Value::Array(vec![])))?;
    Ok(GroupDiagram {
        nodes: nodes.iter().map(GroupSpec::to_group).collect::<Result<_>>()?,
        arrows: arrows
            .into_iter()
            .map(|a| Arrow {
                src: a.src,
                dst: a.dst,
                map: GroupMap { images: a.map },
            })
            .collect(),
    })
}

/// A partial group of any supported kind.
pub enum AnyHandle {
    Group(GroupHandle),
    FreeOnOne(FreeOnOne),
    Colimit(ColimitHandle),
    Dec(MgHandle),
    Corrupted(CorruptedProduct<MgHandle>),
}

/// Runs `$body` with `$h` bound to the concrete handle inside `$any`.
#[macro_export]
macro_rules! with_handle {
    ($any:expr, $h:ident => $body:expr) => {
        match $any {
            $crate::io::AnyHandle::Group($h) => $body,
            $crate::io::AnyHandle::FreeOnOne($h) => $body,
            $crate::io::AnyHandle::Colimit($h) => $body,
            $crate::io::AnyHandle::Dec($h) => $body,
            $crate::io::AnyHandle::Corrupted($h) => $body,
        }
    };
}

impl AnyHandle {
    /// The decorated graph behind the handle, if it has one.
    pub fn decgraph(&self) -> Option<&DecGraph> {
        match self {
            AnyHandle::Dec(h) => Some(h.decgraph()),
            _ => None,
        }
    }
}

fn mg_from_value(v: &Value, kind: &str) -> Result<MgHandle> {
    match kind {
        "decorated-graph" => Ok(build(decgraph_from_value(v)?)),
        "path" => Ok(path_partial(graph_from_value(v.get("graph").ok_or_else(
            || Error::Parse("path spec needs \"graph\"".into()),
        )?)?)),
        other => Err(Error::Parse(format!(
            "expected a decorated-graph or path spec, got kind {other:?}"
        ))),
    }
}

fn kind_of(v: &Value) -> Result<&str> {
    match v.get("kind") {
        Some(Value::String(k)) => Ok(k),
        Some(other) => Err(Error::Parse(format!("\"kind\" must be a string, got {other}"))),
        None if v.get("graph").is_some() => Ok("decorated-graph"),
        None => Err(Error::Parse("handle spec needs a \"kind\"".into())),
    }
}

pub fn handle_from_value(v: &Value) -> Result<AnyHandle> {
    let kind = kind_of(v)?;
    match kind {
        "group" => {
            let g: GroupSpec = serde_json::from_value(
                v.get("group")
                    .cloned()
                    .ok_or_else(|| Error::Parse("group spec needs \"group\"".into()))?,
            )?;
            Ok(AnyHandle::Group(from_group(g.to_group()?)))
        }
        "free-on-one" => Ok(AnyHandle::FreeOnOne(free_on_one())),
        "group-diagram" => Ok(AnyHandle::Colimit(colimit_of_groups(diagram_from_value(v)?)?)),
        "decorated-graph" | "path" => Ok(AnyHandle::Dec(mg_from_value(v, kind)?)),
        "corrupted" => {
            let base_v = v
                .get("base")
                .ok_or_else(|| Error::Parse("corrupted spec needs \"base\"".into()))?;
            let base = mg_from_value(base_v, kind_of(base_v)?)?;
            let text = |key: &str| {
                v.get(key)
                    .and_then(Value::as_str)
                    .ok_or_else(|| Error::Parse(format!("corrupted spec needs string {key:?}")))
            };
            let word = base.parse_sequence(text("word")?)?;
            let image = base.parse_elem(text("image")?)?;
            Ok(AnyHandle::Corrupted(CorruptedProduct { base, word, image }))
        }
        other => Err(Error::Parse(format!("unknown handle kind {other:?}"))),
    }
}

pub fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| {
        Error::Parse(format!(
            "{}: line {}, column {}: {e}",
            path.display(),
            e.line(),
            e.column()
        ))
    })
}

pub fn read_handle(path: &Path) -> Result<AnyHandle> {
    handle_from_value(&read_json(path)?)
}

pub fn read_decgraph(path: &Path) -> Result<DecGraph> {
    let v = read_json(path)?;
    match kind_of(&v)? {
        k @ ("decorated-graph" | "path") => Ok(mg_from_value(&v, k)?.decgraph().clone()),
        other => Err(Error::Parse(format!(
            "expected a decorated graph, got kind {other:?}"
        ))),
    }
}

/// Parses a byte count with an optional `K`, `M` or `G` suffix.
pub fn parse_mem(s: &str) -> Option<usize> {
    let s = s.trim();
    let (digits, mult) = match s.chars().last()?.to_ascii_uppercase() {
        'K' => (&s[..s.len() - 1], 1usize << 10),
        'M' => (&s[..s.len() - 1], 1 << 20),
        'G' => (&s[..s.len() - 1], 1 << 30),
        _ => (s, 1),
    };
    digits.trim().parse::<usize>().ok()?.checked_mul(mult)
}

/// Rough per-item footprint used to turn a memory cap into a count cap.
pub const BYTES_PER_ITEM: usize = 256;

/// Item cap from `PATHPART_MAX_MEM`, or `default` when unset.
pub fn enumeration_cap(default: usize) -> Result<usize> {
    match std::env::var("PATHPART_MAX_MEM") {
        Ok(s) => parse_mem(&s)
            .map(|b| (b / BYTES_PER_ITEM).max(1))
            .ok_or_else(|| Error::Parse(format!("PATHPART_MAX_MEM: cannot parse {s:?}"))),
        Err(_) => Ok(default),
    }
}
