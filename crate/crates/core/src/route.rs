//! Engine selection: classify the graph, then dispatch each query to the
//! cheapest applicable decider, with the exact oracle as the fallback.

use crate::classify::{classify, GraphClass};
use crate::error::Result;
use crate::graph::{Graph, Parameter, Question};
use crate::oracle::{OracleCaps, OracleDecider};
use crate::verdict::{Decider, Verdict};
use std::collections::BTreeSet;

/// The engines a query can be routed to.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum EngineKind {
    Empty,
    Complete,
    Path,
    Tree,
    Forest,
    Bipartite,
    Cograph,
    Oracle,
}

impl EngineKind {
    pub const CLASS_PRECEDENCE: [EngineKind; 7] = [
        EngineKind::Empty,
        EngineKind::Complete,
        EngineKind::Path,
        EngineKind::Tree,
        EngineKind::Forest,
        EngineKind::Bipartite,
        EngineKind::Cograph,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            EngineKind::Empty => "empty",
            EngineKind::Complete => "complete",
            EngineKind::Path => "path",
            EngineKind::Tree => "tree",
            EngineKind::Forest => "forest",
            EngineKind::Bipartite => "bipartite",
            EngineKind::Cograph => "cograph",
            EngineKind::Oracle => "oracle",
        }
    }

    pub fn from_name(name: &str) -> Option<EngineKind> {
        Some(match name {
            "empty" => EngineKind::Empty,
            "complete" => EngineKind::Complete,
            "path" => EngineKind::Path,
            "tree" => EngineKind::Tree,
            "forest" => EngineKind::Forest,
            "bipartite" => EngineKind::Bipartite,
            "cograph" => EngineKind::Cograph,
            "oracle" => EngineKind::Oracle,
            _ => return None,
        })
    }

    fn for_class(class: GraphClass) -> EngineKind {
        match class {
            GraphClass::Empty => EngineKind::Empty,
            GraphClass::Complete => EngineKind::Complete,
            GraphClass::Path => EngineKind::Path,
            GraphClass::Tree => EngineKind::Tree,
            GraphClass::Forest => EngineKind::Forest,
            GraphClass::Bipartite => EngineKind::Bipartite,
            GraphClass::Cograph => EngineKind::Cograph,
        }
    }

    /// The decider behind this engine name. Trees are decided by the forest
    /// machinery.
    pub fn decider(&self, caps: OracleCaps) -> Box<dyn Decider> {
        match self {
            EngineKind::Empty => Box::new(crate::simple::EmptyDecider),
            EngineKind::Complete => Box::new(crate::simple::CompleteDecider),
            EngineKind::Path => Box::new(crate::simple::PathDecider),
            EngineKind::Tree | EngineKind::Forest => Box::new(crate::forest::ForestDecider),
            EngineKind::Bipartite => Box::new(crate::bipartite::BipartiteDecider),
            EngineKind::Cograph => Box::new(crate::cograph::CographDecider),
            EngineKind::Oracle => Box::new(OracleDecider::new(caps)),
        }
    }
}

/// Engines applicable to a graph with the given class labels, in precedence
/// order, always ending with the oracle.
pub fn applicable_engines(labels: &BTreeSet<GraphClass>) -> Vec<EngineKind> {
    let mut out: Vec<EngineKind> = EngineKind::CLASS_PRECEDENCE
        .into_iter()
        .filter(|e| match e {
            EngineKind::Oracle => true,
            other => labels
                .iter()
                .any(|&c| EngineKind::for_class(c) == *other),
        })
        .collect();
    out.push(EngineKind::Oracle);
    out
}

/// The engine `auto` routing picks: cheapest closed form first.
pub fn auto_engine(labels: &BTreeSet<GraphClass>) -> EngineKind {
    applicable_engines(labels)[0]
}

/// How the caller wants the query dispatched.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EngineChoice {
    Auto,
    Fixed(EngineKind),
}

/// Routes and answers one query, reporting the engine used.
pub fn decide_routed(
    g: &Graph,
    p: Parameter,
    q: Question,
    choice: EngineChoice,
    caps: OracleCaps,
) -> Result<(Verdict, EngineKind)> {
    let kind = match choice {
        EngineChoice::Fixed(kind) => kind,
        EngineChoice::Auto => auto_engine(&classify(g)),
    };
    let verdict = kind.decider(caps).decide(g, p, q)?;
    Ok((verdict, kind))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, path_graph, Graph};

    #[test]
    fn precedence_picks_the_cheapest_applicable_engine() {
        assert_eq!(auto_engine(&classify(&Graph::new(6))), EngineKind::Empty);
        assert_eq!(auto_engine(&classify(&complete_graph(5))), EngineKind::Complete);
        assert_eq!(auto_engine(&classify(&path_graph(7))), EngineKind::Path);
        // a two-edge star is a tree but not a path
        let star = crate::graph::complete_bipartite_graph(1, 3);
        assert_eq!(auto_engine(&classify(&star)), EngineKind::Tree);
        // the 4-cycle is bipartite and a co-graph; bipartite wins
        assert_eq!(auto_engine(&classify(&cycle_graph(4))), EngineKind::Bipartite);
        // the 5-cycle is in no special class
        assert_eq!(auto_engine(&classify(&cycle_graph(5))), EngineKind::Oracle);
    }

    #[test]
    fn routed_verdicts_match_oracle() {
        for g in [path_graph(5), cycle_graph(4), complete_graph(4), Graph::new(3)] {
            for p in Parameter::ALL {
                for q in Question::ALL {
                    let (fast, engine) =
                        decide_routed(&g, p, q, EngineChoice::Auto, OracleCaps::default())
                            .unwrap();
                    assert_ne!(engine, EngineKind::Oracle, "{g:?} should have a class engine");
                    let slow = crate::oracle::decide_by_definition(&g, p, q).unwrap();
                    assert!(fast.same_outcome(&slow), "{g:?} {p:?} {q:?}");
                }
            }
        }
    }

    #[test]
    fn fixed_engine_rejects_wrong_class() {
        let err = decide_routed(
            &path_graph(4),
            Parameter::Chi,
            Question::Stability,
            EngineChoice::Fixed(EngineKind::Cograph),
            OracleCaps::default(),
        );
        assert!(matches!(err, Err(crate::error::Error::NotCograph(_))));
    }
}
