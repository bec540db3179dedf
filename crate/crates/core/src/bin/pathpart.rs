use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pathpart::analysis::{
    classify_orders, maximal_finite_subgroups, maxsub_graph_from, normalizer, recover_check,
    AnalysisBounds,
};
use pathpart::graph::{frucht_realize, Graph, SearchLimits};
use pathpart::io::{
    enumeration_cap, graph_to_value, read_decgraph, read_handle, GroupSpec,
};
use pathpart::morphisms::{aut_group, brute_aut_truncated, OracleLimits};
use pathpart::nerve::{check_inner_horns, check_simplicial_identities, nerve, to_json};
use pathpart::partial::{check_axioms, Bounds, PartialGroup};
use pathpart::suite::{default_fixtures_dir, run_suite, SuiteConfig};
use pathpart::{with_handle, Error};

#[derive(Parser)]
#[command(name = "pathpart", version, about = "Partial groups of decorated graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Largest graph accepted by automorphism and isomorphism searches.
    #[arg(long, global = true, default_value_t = 512)]
    max_vertices: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Build a partial group and optionally list its elements.
    Build {
        #[arg(long)]
        input: PathBuf,
        /// List the elements of size at most this.
        #[arg(long, value_name = "L")]
        list_elems: Option<usize>,
    },
    /// Decide whether a word of elements lies in the domain.
    DomainTest {
        #[arg(long)]
        input: PathBuf,
        /// Elements separated by `|`, e.g. "a b | b".
        #[arg(long)]
        word: String,
    },
    /// Check the partial-group axioms up to the given bounds.
    CheckAxioms {
        #[arg(long)]
        input: PathBuf,
        /// Largest element size.
        #[arg(long, default_value_t = 5)]
        max_len: usize,
        /// Longest domain word.
        #[arg(long, default_value_t = 4)]
        max_word: usize,
    },
    /// Automorphism group of a decorated graph.
    Aut {
        #[arg(long)]
        input: PathBuf,
        /// Compare with the brute-force search over the truncation.
        #[arg(long)]
        oracle: bool,
        /// Element size of the truncation used by the oracle.
        #[arg(long, default_value_t = 3)]
        max_len: usize,
    },
    /// Rebuild the underlying graph from the maximal finite subgroups.
    Recover {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 2)]
        max_len: usize,
        #[arg(long, default_value_t = 12)]
        power_bound: usize,
    },
    /// Maximal finite subgroups and the graph they span.
    Maxsub {
        #[arg(long)]
        input: PathBuf,
        /// Require every pair of non-trivial elements to be composable.
        #[arg(long)]
        strong: bool,
        #[arg(long, default_value_t = 5)]
        max_len: usize,
        #[arg(long, default_value_t = 12)]
        power_bound: usize,
    },
    /// Truncated nerve with simplicial identity and horn checks.
    Nerve {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
    },
    /// Elements conjugating every element into the partial group.
    Normalizer {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
    },
    /// Graphs whose automorphism group is the given group.
    Realize {
        /// Group name (`Z3`, `S3`, ...) or path to a group JSON file.
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 3)]
        count: usize,
    },
    /// Run the acceptance suite.
    Suite {
        /// Run only criteria whose name contains this text.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
}

/// Result of a command: printed output and whether verification passed.
struct Report {
    text: String,
    json: Value,
    ok: bool,
}

impl Report {
    fn new(text: String, json: Value, ok: bool) -> Self {
        Report { text, json, ok }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let limits = SearchLimits {
        max_vertices: cli.max_vertices,
        ..SearchLimits::default()
    };
    match run(&cli, &limits) {
        Ok(r) => {
            match cli.format {
                Format::Text => print!("{}", r.text),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&r.json).expect("plain data")
                ),
            }
            if r.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            if let Error::EnumerationLimit(_) | Error::SearchLimit(_) = e {
                eprintln!("hint: lower the bounds, or raise PATHPART_MAX_MEM / --max-vertices");
            }
            ExitCode::from(2)
        }
    }
}

fn cap_check(n: usize, cap: usize, what: &str) -> pathpart::Result<()> {
    if n > cap {
        return Err(Error::EnumerationLimit(format!(
            "{n} {what} exceed the cap of {cap}"
        )));
    }
    Ok(())
}

fn run(cli: &Cli, limits: &SearchLimits) -> pathpart::Result<Report> {
    let cap = enumeration_cap(2_000_000)?;
    match &cli.command {
        Command::Build { input, list_elems } => {
            let h = read_handle(input)?;
            with_handle!(&h, p => {
                let mut text = format!("{}\n", p.describe());
                let mut j = json!({ "describe": p.describe() });
                if let Some(l) = list_elems {
                    let elems = p.elements(*l);
                    cap_check(elems.len(), cap, "elements")?;
                    let names: Vec<String> = elems.iter().map(|e| p.format_elem(e)).collect();
                    text += &format!("elements of size at most {l}: {}\n", names.len());
                    for n in &names {
                        text += &format!("  {n}\n");
                    }
                    j["max_elem_size"] = json!(l);
                    j["elements"] = json!(names);
                }
                Ok(Report::new(text, j, true))
            })
        }
        Command::DomainTest { input, word } => {
            let h = read_handle(input)?;
            with_handle!(&h, p => {
                let w = p.parse_word_text(word)?;
                let prod = p.try_product(&w);
                let text = match &prod {
                    Some(x) => format!("{} is in the domain; product {}\n", p.format_word(&w), p.format_elem(x)),
                    None => format!("{} is not in the domain\n", p.format_word(&w)),
                };
                let j = json!({
                    "word": p.format_word(&w),
                    "in_domain": prod.is_some(),
                    "product": prod.map(|x| p.format_elem(&x)),
                });
                Ok(Report::new(text, j, true))
            })
        }
        Command::CheckAxioms {
            input,
            max_len,
            max_word,
        } => {
            let h = read_handle(input)?;
            let bounds = Bounds {
                max_elem_size: *max_len,
                max_word_len: *max_word,
                max_domain_words: cap,
            };
            with_handle!(&h, p => {
                let r = check_axioms(p, &bounds);
                if !r.complete {
                    return Err(Error::EnumerationLimit(format!(
                        "more than {} domain words at element size {max_len}, word length {max_word}",
                        bounds.max_domain_words
                    )));
                }
                let mut text = format!(
                    "{}\nbounds: element size {max_len}, word length {max_word}\n{} elements, {} domain words\n",
                    p.describe(), r.elements_checked, r.domain_words_checked
                );
                let mut axioms = serde_json::Map::new();
                for a in pathpart::partial::Axiom::ALL {
                    match r.violation(a) {
                        None => {
                            text += &format!("{a:?} pass\n");
                            axioms.insert(format!("{a:?}"), json!({"passed": true}));
                        }
                        Some(v) => {
                            let words: Vec<String> = v.words.iter().map(|w| p.format_word(w)).collect();
                            text += &format!("{a:?} FAIL: {} (words {})\n", v.detail, words.join(", "));
                            axioms.insert(format!("{a:?}"), json!({
                                "passed": false,
                                "check": format!("{:?}", v.check),
                                "words": words,
                                "detail": v.detail,
                                "replays": v.replays(p),
                            }));
                        }
                    }
                }
                let j = json!({
                    "describe": p.describe(),
                    "bounds": bounds,
                    "elements": r.elements_checked,
                    "domain_words": r.domain_words_checked,
                    "axioms": axioms,
                });
                Ok(Report::new(text, j, r.all_passed()))
            })
        }
        Command::Aut {
            input,
            oracle,
            max_len,
        } => {
            let dg = read_decgraph(input)?;
            let r = aut_group(&dg, limits)?;
            let h = pathpart::decpart::build(dg.clone());
            let mut text = format!("{}\n", r.summary());
            text += "composition table:\n";
            for row in r.group.table_rows() {
                let cells: Vec<String> = row.iter().map(usize::to_string).collect();
                text += &format!("  {}\n", cells.join(" "));
            }
            text += &format!(
                "kernel: {} elements ({}); image: {} graph automorphisms\n",
                r.kernel.len(),
                r.kernel_group().iso_name(),
                r.image.len()
            );
            let mut j = json!({
                "order": r.order(),
                "sequence": r.sequence(),
                "summary": r.summary(),
                "table": r.group.table_rows(),
                "kernel": r.kernel,
                "image": r.image.iter().map(|m| m.vmap.clone()).collect::<Vec<_>>(),
                "surjective": r.is_surjective(),
            });
            let mut ok = true;
            if *oracle {
                let ol = OracleLimits {
                    max_domain_words: cap,
                    ..OracleLimits::default()
                };
                let t = brute_aut_truncated(&h, *max_len, &ol)?;
                let agree = r.truncated_action(&t.elements).as_ref() == Some(&t.maps);
                ok = agree;
                text += &format!(
                    "oracle at element size {max_len}: {} maps over {} elements and {} domain words; {}\n",
                    t.len(),
                    t.elements.len(),
                    t.domain_words,
                    if agree { "agrees" } else { "DISAGREES" }
                );
                j["oracle"] = json!({
                    "max_elem_size": max_len,
                    "maps": t.len(),
                    "agrees": agree,
                });
            }
            Ok(Report::new(text, j, ok))
        }
        Command::Recover {
            input,
            max_len,
            power_bound,
        } => {
            let dg = read_decgraph(input)?;
            let b = AnalysisBounds {
                max_elem_size: *max_len,
                power_bound: *power_bound,
                ..AnalysisBounds::default()
            };
            let r = recover_check(&dg, &b, limits)?;
            let found = r.iso.is_some();
            let mut text = format!(
                "{} maximal finite subgroups at element size {max_len}, power bound {power_bound}\n",
                r.records.len()
            );
            text += if found {
                "isomorphism found\n"
            } else {
                "no isomorphism\n"
            };
            let j = json!({
                "bounds": b,
                "subgroups": r.records.len(),
                "maxsub": graph_to_value(&r.maxsub),
                "isomorphism": r.iso.map(|m| m.vmap),
            });
            Ok(Report::new(text, j, found))
        }
        Command::Maxsub {
            input,
            strong,
            max_len,
            power_bound,
        } => {
            let h = read_handle(input)?;
            let b = AnalysisBounds {
                max_elem_size: *max_len,
                power_bound: *power_bound,
                ..AnalysisBounds::default()
            };
            with_handle!(&h, p => {
                let orders = classify_orders(p, &b);
                cap_check(orders.len(), cap, "elements")?;
                let recs = maximal_finite_subgroups(p, &b);
                let g: Graph = maxsub_graph_from(p, &recs, *strong);
                let mut text = format!(
                    "{} maximal finite subgroups at element size {max_len}, power bound {power_bound}\n",
                    recs.len()
                );
                for (i, r) in recs.iter().enumerate() {
                    text += &format!("  {}: {} of order {}\n", i, g.label(i), r.order());
                }
                text += &format!("{} edges{}:\n", g.edge_count(), if *strong { " (strong)" } else { "" });
                for (u, v) in g.edges() {
                    text += &format!("  {u} - {v}\n");
                }
                let j = json!({
                    "bounds": b,
                    "strong": strong,
                    "subgroups": recs.iter().map(|r| json!({
                        "elements": r.elements.iter().map(|e| p.format_elem(e)).collect::<Vec<_>>(),
                        "iso_type": r.table.iso_name(),
                    })).collect::<Vec<_>>(),
                    "graph": graph_to_value(&g),
                });
                Ok(Report::new(text, j, true))
            })
        }
        Command::Nerve {
            input,
            dim,
            max_len,
        } => {
            let h = read_handle(input)?;
            with_handle!(&h, p => {
                let n = nerve(p, *dim, *max_len, cap)?;
                let ids = check_simplicial_identities(p, &n);
                let horns = check_inner_horns(p, &n);
                let ok = ids.passed() && horns.passed();
                let mut text = format!("nerve to dimension {dim} at element size {max_len}\n");
                for k in 0..=*dim {
                    text += &format!(
                        "  {k}-simplices: {} ({} non-degenerate)\n",
                        n.count(k),
                        n.nondegenerate_count(k, &p.unit())
                    );
                }
                text += &format!(
                    "{} identity checks, {} horns: {}\n",
                    ids.identities_checked,
                    horns.horns_checked,
                    match ids.violation.as_ref().or(horns.violation.as_ref()) {
                        None => "all hold".to_string(),
                        Some(v) => format!("{} fails on {}", v.identity, v.simplex),
                    }
                );
                let mut j = to_json(p, &n);
                j["checks"] = json!({ "identities": ids, "horns": horns });
                Ok(Report::new(text, j, ok))
            })
        }
        Command::Normalizer { input, max_len } => {
            let h = read_handle(input)?;
            with_handle!(&h, p => {
                let n = normalizer(p, *max_len);
                let names: Vec<String> = n.iter().map(|e| p.format_elem(e)).collect();
                let text = format!(
                    "normalizer at element size {max_len}: {} elements\n{}",
                    names.len(),
                    names.iter().map(|s| format!("  {s}\n")).collect::<String>()
                );
                let j = json!({ "max_elem_size": max_len, "elements": names });
                Ok(Report::new(text, j, true))
            })
        }
        Command::Realize { group, count } => {
            let g = if std::path::Path::new(group).is_file() {
                let v = pathpart::io::read_json(std::path::Path::new(group))?;
                serde_json::from_value::<GroupSpec>(v)?.to_group()?
            } else {
                pathpart::fingroup::FinGroup::builtin(group)?
            };
            let graphs = frucht_realize(&g, *count, limits)?;
            let mut text = format!("{count} graphs with automorphism group {}\n", g.iso_name());
            for (i, gr) in graphs.iter().enumerate() {
                text += &format!(
                    "  {i}: {} vertices, {} edges\n",
                    gr.vertex_count(),
                    gr.edge_count()
                );
            }
            let j = json!({
                "group": g.iso_name(),
                "graphs": graphs.iter().map(graph_to_value).collect::<Vec<_>>(),
            });
            Ok(Report::new(text, j, true))
        }
        Command::Suite { filter, fixtures } => {
            let cfg = SuiteConfig {
                fixtures: fixtures.clone().unwrap_or_else(default_fixtures_dir),
                filter: filter.clone(),
            };
            let text_mode = cli.format == Format::Text;
            let outcomes = run_suite(&cfg, |o| {
                if text_mode {
                    println!("{o}");
                }
            });
            let passed = outcomes.iter().filter(|o| o.passed).count();
            let text = format!("{passed} of {} criteria passed\n", outcomes.len());
            let j = json!({
                "criteria": outcomes.iter().map(|o| json!({
                    "id": o.id, "name": o.name, "passed": o.passed, "detail": o.detail,
                })).collect::<Vec<_>>(),
                "passed": passed,
            });
            Ok(Report::new(text, j, passed == outcomes.len()))
        }
    }
}
