//! Recognition of the seven special graph classes, used to route queries to
//! the fastest valid decider.

use crate::bitset::BitSet;
use crate::graph::Graph;
use std::collections::BTreeSet;

/// The recognized classes. A graph can belong to several; see
/// [`classify`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GraphClass {
    Empty,
    Complete,
    Path,
    Tree,
    Forest,
    Bipartite,
    Cograph,
}

impl GraphClass {
    pub const ALL: [GraphClass; 7] = [
        GraphClass::Empty,
        GraphClass::Complete,
        GraphClass::Path,
        GraphClass::Tree,
        GraphClass::Forest,
        GraphClass::Bipartite,
        GraphClass::Cograph,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            GraphClass::Empty => "Empty",
            GraphClass::Complete => "Complete",
            GraphClass::Path => "Path",
            GraphClass::Tree => "Tree",
            GraphClass::Forest => "Forest",
            GraphClass::Bipartite => "Bipartite",
            GraphClass::Cograph => "Cograph",
        }
    }
}

/// All class labels that apply to `g`.
///
/// Conventions for the degenerate sizes: the null graph and the one-vertex
/// graph carry every consistent label (they are simultaneously empty,
/// complete, and a path; a single vertex is a tree, the null graph is not).
/// `Tree` means connected and acyclic with at least one vertex; `Forest`
/// means acyclic of any size, so every edgeless graph is a forest of
/// isolated vertices.
pub fn classify(g: &Graph) -> BTreeSet<GraphClass> {
    let n = g.n();
    let m = g.m();
    let mut labels = BTreeSet::new();

    if m == 0 {
        labels.insert(GraphClass::Empty);
    }
    if m == n * n.saturating_sub(1) / 2 {
        labels.insert(GraphClass::Complete);
    }

    let acyclic = !g.has_cycle();
    let connected = g.is_connected();
    if acyclic {
        labels.insert(GraphClass::Forest);
        if connected && n >= 1 {
            labels.insert(GraphClass::Tree);
        }
        let max_degree = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);
        if n == 0 || (connected && max_degree <= 2) {
            labels.insert(GraphClass::Path);
        }
    }
    if bipartition(g).is_some() {
        labels.insert(GraphClass::Bipartite);
    }
    if n == 0 || crate::cograph::build_cotree(g).is_ok() {
        labels.insert(GraphClass::Cograph);
    }
    labels
}

/// Splits the vertices into two independent sets with every edge crossing,
/// or returns `None` when an odd cycle makes that impossible. Isolated
/// vertices, and more generally the first vertex reached in each component,
/// land in the first set.
pub fn bipartition(g: &Graph) -> Option<(BitSet, BitSet)> {
    let n = g.n();
    let mut side = vec![u8::MAX; n];
    for start in 0..n {
        if side[start] != u8::MAX {
            continue;
        }
        side[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u).iter() {
                if side[v] == u8::MAX {
                    side[v] = 1 - side[u];
                    queue.push_back(v);
                } else if side[v] == side[u] {
                    return None;
                }
            }
        }
    }
    let mut left = BitSet::new(n);
    let mut right = BitSet::new(n);
    for (v, &s) in side.iter().enumerate() {
        if s == 0 {
            left.insert(v);
        } else {
            right.insert(v);
        }
    }
    Some((left, right))
}
