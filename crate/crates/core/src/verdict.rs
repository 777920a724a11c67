//! Answers to `(parameter, question)` queries, built from per-element sweeps.
//!
//! Every decider classifies each edge, vertex, or nonedge of a graph as
//! parameter-preserving or parameter-changing under its operation. A
//! [`Verdict`] then aggregates one sweep for one question: stability-style
//! questions hold when no element changes the parameter, criticality-style
//! duals hold when every element does. Each edge and vertex is either stable
//! or critical and each nonedge either unfrozen or frozen, but a graph can
//! satisfy neither pole (or, on an empty element set, both).

use crate::error::Result;
use crate::graph::{EdgeRef, Graph, Parameter, Question};

/// A witness element: a vertex of the queried graph, or an edge of it (for
/// unfrozenness questions, an edge of its complement).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Element {
    Vertex(usize),
    Edge(EdgeRef),
}

/// Parameter values before and after the operation on one element.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Delta {
    pub element: Element,
    pub before: usize,
    pub after: usize,
}

impl Delta {
    pub fn changes(&self) -> bool {
        self.before != self.after
    }
}

/// The per-element classification for one element kind and one parameter.
#[derive(Clone, Debug, Default)]
pub struct Sweep {
    pub entries: Vec<Delta>,
}

impl Sweep {
    pub fn new(mut entries: Vec<Delta>) -> Sweep {
        entries.sort_by_key(|d| d.element);
        Sweep { entries }
    }

    /// Elements whose deletion/addition changes the parameter.
    pub fn changing(&self) -> impl Iterator<Item = &Delta> {
        self.entries.iter().filter(|d| d.changes())
    }

    /// Verdict for "every element preserves the parameter"; witnesses are the
    /// changing elements. Vacuously true on an empty element set.
    pub fn all_preserve(&self) -> Verdict {
        let witnesses: Vec<Element> = self.changing().map(|d| d.element).collect();
        Verdict {
            holds: witnesses.is_empty(),
            witnesses,
            detail: self.entries.clone(),
        }
    }

    /// Verdict for the dual "every element changes the parameter"; witnesses
    /// are the preserving elements. Also vacuously true on an empty set.
    pub fn all_change(&self) -> Verdict {
        let witnesses: Vec<Element> = self
            .entries
            .iter()
            .filter(|d| !d.changes())
            .map(|d| d.element)
            .collect();
        Verdict {
            holds: witnesses.is_empty(),
            witnesses,
            detail: self.entries.clone(),
        }
    }
}

/// The answer to one `(parameter, question)` query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    /// Elements violating the queried property, empty iff `holds`.
    pub witnesses: Vec<Element>,
    /// Per-element parameter values before and after the operation.
    pub detail: Vec<Delta>,
}

impl Verdict {
    pub fn trivially(holds: bool) -> Verdict {
        Verdict {
            holds,
            witnesses: Vec::new(),
            detail: Vec::new(),
        }
    }

    /// `holds` plus witnesses only, ignoring detail. Used when comparing two
    /// deciders that compute deltas along different routes.
    pub fn same_outcome(&self, other: &Verdict) -> bool {
        self.holds == other.holds && self.witnesses == other.witnesses
    }
}

/// A decision engine: produces per-element sweeps for the graphs of its class
/// and answers all questions from them. Vertex-addition questions have
/// constant answers independent of the engine.
pub trait Decider {
    /// Engine name as reported by the command-line tools.
    fn name(&self) -> &'static str;

    /// Per-edge deletion sweep for `p`.
    fn edge_sweep(&self, g: &Graph, p: Parameter) -> Result<Sweep>;

    /// Per-vertex deletion sweep for `p`.
    fn vertex_sweep(&self, g: &Graph, p: Parameter) -> Result<Sweep>;

    /// Per-nonedge addition sweep for `p`.
    fn nonedge_sweep(&self, g: &Graph, p: Parameter) -> Result<Sweep>;

    fn decide(&self, g: &Graph, p: Parameter, q: Question) -> Result<Verdict> {
        Ok(match q {
            Question::Stability => self.edge_sweep(g, p)?.all_preserve(),
            Question::Criticality => self.edge_sweep(g, p)?.all_change(),
            Question::VertexStability => self.vertex_sweep(g, p)?.all_preserve(),
            Question::VertexCriticality => self.vertex_sweep(g, p)?.all_change(),
            Question::Unfrozenness => self.nonedge_sweep(g, p)?.all_preserve(),
            Question::Frozenness => self.nonedge_sweep(g, p)?.all_change(),
            Question::VertexUnfrozenness => crate::oracle::vertex_unfrozenness_constant(g, p),
            Question::VertexFrozenness => crate::oracle::vertex_frozenness_constant(g, p),
        })
    }
}

/// Builds a sweep by recomputing an evaluator on every edited graph.
pub(crate) fn sweep_by_recompute<F>(
    base: usize,
    items: Vec<(Element, Graph)>,
    eval: F,
) -> Result<Sweep>
where
    F: Fn(&Graph) -> Result<usize>,
{
    let mut entries = Vec::with_capacity(items.len());
    for (element, edited) in items {
        entries.push(Delta {
            element,
            before: base,
            after: eval(&edited)?,
        });
    }
    Ok(Sweep::new(entries))
}

/// The three per-element edit lists of a graph, paired with edited graphs.
pub(crate) fn edge_deletions(g: &Graph) -> Vec<(Element, Graph)> {
    g.edges()
        .into_iter()
        .map(|e| (Element::Edge(e), g.delete_edge(e).unwrap()))
        .collect()
}

pub(crate) fn vertex_deletions(g: &Graph) -> Vec<(Element, Graph)> {
    (0..g.n())
        .map(|v| (Element::Vertex(v), g.delete_vertex(v).unwrap()))
        .collect()
}

pub(crate) fn nonedge_additions(g: &Graph) -> Vec<(Element, Graph)> {
    g.nonedges()
        .into_iter()
        .map(|e| (Element::Edge(e), g.add_edge(e).unwrap()))
        .collect()
}
