//! `gstab` — classify graphs, decide stability/criticality and
//! unfrozenness/frozenness questions for alpha, beta, omega, and chi, verify
//! the fast deciders against the exact oracle, and generate instances.
//!
//! Exit codes: 0 success (all queried properties hold / all checks agree),
//! 1 a queried property fails or a verification disagrees, 2 usage or parse
//! errors, 3 oracle size cap exceeded during verification.

use clap::{Parser, Subcommand};
use gstab_core::classify::classify;
use gstab_core::format::{parse_graph, serialize_graph};
use gstab_core::gen::{generate, parse_spec};
use gstab_core::oracle::{OracleCaps, OracleDecider};
use gstab_core::route::{decide_routed, EngineChoice, EngineKind};
use gstab_core::{Decider, Element, Error, Graph, Parameter, Question, Verdict};
use std::path::PathBuf;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "gstab", version, about = "Graph parameter stability toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the class labels of a graph, one per line.
    Classify { path: PathBuf },
    /// Decide parameter/question pairs and print one JSON record per query.
    Solve {
        path: PathBuf,
        /// alpha | beta | omega | chi | all
        #[arg(long, default_value = "all")]
        param: String,
        /// stability | vertex-stability | criticality | vertex-criticality |
        /// unfrozenness | frozenness | all
        #[arg(long, default_value = "all")]
        question: String,
        /// auto | oracle | empty | complete | path | tree | forest |
        /// bipartite | cograph
        #[arg(long, default_value = "auto")]
        engine: String,
        /// Add the deciding rule and per-element deltas to each record.
        #[arg(long)]
        explain: bool,
        /// Omit timing fields, making output byte-stable across runs.
        #[arg(long)]
        no_timing: bool,
    },
    /// Run every applicable class decider against the oracle on all
    /// parameter/question pairs and print PASS/FAIL per pair.
    Verify {
        path: Option<PathBuf>,
        /// Generator spec such as "cograph n=10 seed=7" instead of a file.
        #[arg(long)]
        gen: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Generate an instance from a spec such as "path n=6" or
    /// "bipartite n=12 p=0.3 seed=1".
    Gen {
        spec: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() {
    // Die quietly when a downstream pipe closes instead of panicking.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let code = match Cli::parse().cmd {
        Cmd::Classify { path } => cmd_classify(&path),
        Cmd::Solve { path, param, question, engine, explain, no_timing } => {
            cmd_solve(&path, &param, &question, &engine, explain, no_timing)
        }
        Cmd::Verify { path, gen, seed } => cmd_verify(path.as_deref(), gen.as_deref(), seed),
        Cmd::Gen { spec, seed, out } => cmd_gen(&spec, seed, out.as_deref()),
    };
    std::process::exit(code);
}

fn oracle_caps() -> OracleCaps {
    match std::env::var("STABILITY_ORACLE_CAP") {
        Ok(v) => match v.parse() {
            Ok(cap) => OracleCaps::uniform(cap),
            Err(_) => {
                eprintln!("error: STABILITY_ORACLE_CAP must be a number, got `{v}`");
                std::process::exit(2);
            }
        },
        Err(_) => OracleCaps::default(),
    }
}

fn load_graph(path: &std::path::Path) -> Result<Graph, i32> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", path.display());
        2
    })?;
    parse_graph(&text).map_err(|e| {
        eprintln!("error: {}: {e}", path.display());
        2
    })
}

fn cmd_classify(path: &std::path::Path) -> i32 {
    let g = match load_graph(path) {
        Ok(g) => g,
        Err(code) => return code,
    };
    for label in classify(&g) {
        println!("{}", label.name());
    }
    0
}

fn parse_params(s: &str) -> Result<Vec<Parameter>, i32> {
    if s == "all" {
        return Ok(Parameter::ALL.to_vec());
    }
    Parameter::ALL
        .into_iter()
        .find(|p| p.name() == s)
        .map(|p| vec![p])
        .ok_or_else(|| {
            eprintln!("error: unknown parameter `{s}`");
            2
        })
}

const CLI_QUESTIONS: [Question; 6] = [
    Question::Stability,
    Question::VertexStability,
    Question::Criticality,
    Question::VertexCriticality,
    Question::Unfrozenness,
    Question::Frozenness,
];

fn parse_questions(s: &str) -> Result<Vec<Question>, i32> {
    if s == "all" {
        return Ok(CLI_QUESTIONS.to_vec());
    }
    CLI_QUESTIONS
        .into_iter()
        .find(|q| q.name() == s)
        .map(|q| vec![q])
        .ok_or_else(|| {
            eprintln!("error: unknown question `{s}`");
            2
        })
}

fn witness_json(w: &Element) -> serde_json::Value {
    match w {
        Element::Vertex(v) => serde_json::json!(v + 1),
        Element::Edge(e) => serde_json::json!([e.u() + 1, e.v() + 1]),
    }
}

fn cmd_solve(
    path: &std::path::Path,
    param: &str,
    question: &str,
    engine: &str,
    explain: bool,
    no_timing: bool,
) -> i32 {
    let g = match load_graph(path) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let params = match parse_params(param) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let questions = match parse_questions(question) {
        Ok(q) => q,
        Err(code) => return code,
    };
    let choice = match engine {
        "auto" => EngineChoice::Auto,
        name => match EngineKind::from_name(name) {
            Some(kind) => EngineChoice::Fixed(kind),
            None => {
                eprintln!("error: unknown engine `{name}`");
                return 2;
            }
        },
    };
    let caps = oracle_caps();

    let labels: Vec<&str> = classify(&g).iter().map(|c| c.name()).collect();
    println!(
        "{}",
        serde_json::json!({ "n": g.n(), "m": g.m(), "class_labels": labels })
    );

    let mut all_hold = true;
    for &p in &params {
        for &q in &questions {
            let started = Instant::now();
            let (verdict, used) = match decide_routed(&g, p, q, choice, caps) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return 2;
                }
            };
            let micros = started.elapsed().as_micros() as u64;
            all_hold &= verdict.holds;

            let witnesses: Vec<serde_json::Value> =
                verdict.witnesses.iter().map(witness_json).collect();
            let mut record = serde_json::json!({
                "parameter": p.name(),
                "question": q.name(),
                "holds": verdict.holds,
                "witnesses": witnesses,
                "engine": used.name(),
            });
            let obj = record.as_object_mut().unwrap();
            if !no_timing {
                obj.insert("micros".into(), serde_json::json!(micros));
            }
            if explain {
                obj.insert("rule".into(), serde_json::json!(explain_rule(used, p, q)));
                let detail: Vec<serde_json::Value> = verdict
                    .detail
                    .iter()
                    .map(|d| {
                        serde_json::json!({
                            "element": witness_json(&d.element),
                            "before": d.before,
                            "after": d.after,
                        })
                    })
                    .collect();
                obj.insert("detail".into(), serde_json::json!(detail));
            }
            println!("{record}");
        }
    }
    if all_hold {
        0
    } else {
        1
    }
}

/// One-line justification of how an engine answers a question.
fn explain_rule(engine: EngineKind, p: Parameter, q: Question) -> String {
    use EngineKind::*;
    use Question::*;
    let body: String = match engine {
        Oracle => "recompute the parameter by definition after every single edit".into(),
        Empty => "closed form for edgeless graphs".into(),
        Complete => "closed form for complete graphs: every edge and vertex is critical, \
                     no nonedges exist"
            .into(),
        Path => "closed form from how a path splits at the edited element".into(),
        Tree | Forest => match q {
            Unfrozenness | Frozenness => match p {
                Parameter::Alpha | Parameter::Beta => {
                    "per-nonedge cover analysis of the bipartite engine".into()
                }
                _ => "a nonedge freezes iff it closes a triangle (omega) or an odd cycle (chi)"
                    .into(),
            },
            _ => "recompute component-wise tree formulas; forests are closed under deletions"
                .into(),
        },
        Bipartite => match (p, q) {
            (Parameter::Chi | Parameter::Omega, Stability | Criticality) => {
                "with two or more edges, any single deletion keeps the value at 2".into()
            }
            (Parameter::Chi | Parameter::Omega, VertexStability | VertexCriticality) => {
                "a vertex is critical iff its degree equals the edge count".into()
            }
            (Parameter::Chi | Parameter::Omega, _) => {
                "a nonedge freezes iff it closes a triangle (omega) or an odd cycle (chi)".into()
            }
            (_, Unfrozenness | Frozenness) => {
                "if the grown graph stays 2-colorable, recompute the matching; otherwise check \
                 whether a minimum cover touches the nonedge"
                    .into()
            }
            _ => "recompute the maximum matching (cover by Koenig, independence by Gallai)".into(),
        },
        Cograph => match (p, q) {
            (Parameter::Chi, Stability | Criticality) => {
                "an edge is chi-critical iff both endpoints are chi-critical, from co-tree labels"
                    .into()
            }
            (Parameter::Omega, Stability | Criticality) => {
                "co-tree walk: critical iff every maximum clique passes through both endpoints"
                    .into()
            }
            (Parameter::Alpha | Parameter::Beta, Stability | Criticality) => {
                "omega-unfrozenness of the same pair in the complement co-tree".into()
            }
            (Parameter::Chi, Unfrozenness | Frozenness) => {
                "co-tree descent to the union node separating the endpoints".into()
            }
            (Parameter::Omega, Unfrozenness | Frozenness) => {
                "compare omega with the largest clique in the endpoints' common neighborhood"
                    .into()
            }
            (Parameter::Alpha | Parameter::Beta, Unfrozenness | Frozenness) => {
                "omega-stability of the same pair in the complement co-tree".into()
            }
            _ => "co-tree labels recomputed after each deletion".into(),
        },
    };
    format!("{}: {}", engine.name(), body)
}

fn cmd_verify(path: Option<&std::path::Path>, gen: Option<&str>, seed: u64) -> i32 {
    let g = match (path, gen) {
        (Some(p), None) => match load_graph(p) {
            Ok(g) => g,
            Err(code) => return code,
        },
        (None, Some(spec)) => match parse_spec(spec, seed) {
            Ok(s) => generate(&s),
            Err(e) => {
                eprintln!("error: {e}");
                return 2;
            }
        },
        _ => {
            eprintln!("error: verify needs a file path or --gen \"<spec>\"");
            return 2;
        }
    };
    let caps = oracle_caps();
    let labels = classify(&g);
    println!(
        "{}",
        serde_json::json!({
            "n": g.n(),
            "m": g.m(),
            "class_labels": labels.iter().map(|c| c.name()).collect::<Vec<_>>(),
        })
    );

    let engines: Vec<EngineKind> = gstab_core::route::applicable_engines(&labels)
        .into_iter()
        .filter(|e| *e != EngineKind::Oracle)
        .collect();
    if engines.is_empty() {
        println!("no class engine applies; nothing to cross-check");
        return 0;
    }

    let oracle = OracleDecider::new(caps);
    let mut all_agree = true;
    for engine in engines {
        let decider = engine.decider(caps);
        for p in Parameter::ALL {
            for q in CLI_QUESTIONS {
                let slow = match oracle.decide(&g, p, q) {
                    Ok(v) => v,
                    Err(e @ Error::CapExceeded { .. }) => {
                        eprintln!("error: {e}");
                        return 3;
                    }
                    Err(e) => {
                        eprintln!("error: {e}");
                        return 2;
                    }
                };
                let fast = match decider.decide(&g, p, q) {
                    Ok(v) => v,
                    Err(e) => {
                        eprintln!("error: {e}");
                        return 2;
                    }
                };
                let agree = fast.same_outcome(&slow);
                all_agree &= agree;
                println!(
                    "{} {} {} {}",
                    if agree { "PASS" } else { "FAIL" },
                    engine.name(),
                    p.name(),
                    q.name()
                );
                if !agree {
                    print_disagreement(&fast, &slow);
                }
            }
        }
    }
    if all_agree {
        0
    } else {
        1
    }
}

fn print_disagreement(fast: &Verdict, slow: &Verdict) {
    println!(
        "  engine: holds={} witnesses={:?}",
        fast.holds, fast.witnesses
    );
    println!(
        "  oracle: holds={} witnesses={:?}",
        slow.holds, slow.witnesses
    );
}

fn cmd_gen(spec: &str, seed: u64, out: Option<&std::path::Path>) -> i32 {
    let parsed = match parse_spec(spec, seed) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let text = serialize_graph(&generate(&parsed));
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 2;
            }
        }
        None => print!("{text}"),
    }
    0
}
