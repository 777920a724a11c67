//! The graph value type and the elementary edits and queries every decider
//! builds on.
//!
//! Graphs are undirected, simple, and loop-free. Vertices are contiguous
//! indices `0..n`; deleting a vertex renumbers the ones above it by shifting
//! down. A `Graph` is immutable after construction: every edit returns a new
//! value, so graphs can be shared freely across threads.

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// A normalized unordered vertex pair with `u < v`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeRef {
    u: usize,
    v: usize,
}

impl EdgeRef {
    pub fn new(a: usize, b: usize) -> Result<EdgeRef> {
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        Ok(EdgeRef {
            u: a.min(b),
            v: a.max(b),
        })
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }
}

impl std::fmt::Debug for EdgeRef {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{{}, {}}}", self.u, self.v)
    }
}

/// The four graph parameters under study.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Parameter {
    /// Independence number: size of a maximum independent set.
    Alpha,
    /// Vertex cover number: size of a minimum vertex cover.
    Beta,
    /// Clique number: size of a maximum clique.
    Omega,
    /// Chromatic number: fewest colors in a proper coloring.
    Chi,
}

impl Parameter {
    pub const ALL: [Parameter; 4] = [
        Parameter::Alpha,
        Parameter::Beta,
        Parameter::Omega,
        Parameter::Chi,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Parameter::Alpha => "alpha",
            Parameter::Beta => "beta",
            Parameter::Omega => "omega",
            Parameter::Chi => "chi",
        }
    }
}

/// The decision questions: how a parameter reacts to deleting an edge or a
/// vertex (stable/critical) or to adding a nonedge or a vertex
/// (unfrozen/frozen). A graph satisfies a question when every element of the
/// relevant kind does.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Question {
    Stability,
    VertexStability,
    Criticality,
    VertexCriticality,
    Unfrozenness,
    Frozenness,
    VertexUnfrozenness,
    VertexFrozenness,
}

impl Question {
    pub const ALL: [Question; 8] = [
        Question::Stability,
        Question::VertexStability,
        Question::Criticality,
        Question::VertexCriticality,
        Question::Unfrozenness,
        Question::Frozenness,
        Question::VertexUnfrozenness,
        Question::VertexFrozenness,
    ];

    /// The six questions decided by sweeping an existing element kind.
    pub const ELEMENT_QUESTIONS: [Question; 6] = [
        Question::Stability,
        Question::VertexStability,
        Question::Criticality,
        Question::VertexCriticality,
        Question::Unfrozenness,
        Question::Frozenness,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Question::Stability => "stability",
            Question::VertexStability => "vertex-stability",
            Question::Criticality => "criticality",
            Question::VertexCriticality => "vertex-criticality",
            Question::Unfrozenness => "unfrozenness",
            Question::Frozenness => "frozenness",
            Question::VertexUnfrozenness => "vertex-unfrozenness",
            Question::VertexFrozenness => "vertex-frozenness",
        }
    }
}

/// An undirected simple graph on vertices `0..n` with bitset adjacency rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<BitSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices; `n = 0` gives the null graph.
    pub fn new(n: usize) -> Graph {
        Graph {
            n,
            m: 0,
            adj: vec![BitSet::new(n); n],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (a, b) in edges {
            let e = EdgeRef::new(a, b)?;
            g = g.add_edge(e)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { v, n: self.n })
        }
    }

    pub fn add_edge(&self, e: EdgeRef) -> Result<Graph> {
        self.check_vertex(e.v())?;
        if self.has_edge(e.u(), e.v()) {
            return Err(Error::EdgeExists { u: e.u(), v: e.v() });
        }
        let mut g = self.clone();
        g.adj[e.u()].insert(e.v());
        g.adj[e.v()].insert(e.u());
        g.m += 1;
        Ok(g)
    }

    pub fn delete_edge(&self, e: EdgeRef) -> Result<Graph> {
        self.check_vertex(e.v())?;
        if !self.has_edge(e.u(), e.v()) {
            return Err(Error::EdgeMissing { u: e.u(), v: e.v() });
        }
        let mut g = self.clone();
        g.adj[e.u()].remove(e.v());
        g.adj[e.v()].remove(e.u());
        g.m -= 1;
        Ok(g)
    }

    /// Removes `v`; vertices above it shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let mut keep = BitSet::full(self.n);
        keep.remove(v);
        Ok(self.induced_subgraph(&keep).0)
    }

    /// The graph on the same vertices whose edges are exactly the nonedges.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            let mut row = BitSet::full(self.n).difference(&self.adj[u]);
            row.remove(u);
            g.adj[u] = row;
        }
        g.m = self.n * self.n.saturating_sub(1) / 2 - self.m;
        g
    }

    /// Restriction to the vertices in `keep`, renumbered in increasing order.
    /// Also returns the map from new index to old index.
    pub fn induced_subgraph(&self, keep: &BitSet) -> (Graph, Vec<usize>) {
        let ids: Vec<usize> = keep.iter().filter(|&v| v < self.n).collect();
        let mut back = vec![usize::MAX; self.n];
        for (new, &old) in ids.iter().enumerate() {
            back[old] = new;
        }
        let mut g = Graph::new(ids.len());
        for (new_u, &old_u) in ids.iter().enumerate() {
            for old_v in self.adj[old_u].iter() {
                if old_v > old_u && back[old_v] != usize::MAX {
                    g.adj[new_u].insert(back[old_v]);
                    g.adj[back[old_v]].insert(new_u);
                    g.m += 1;
                }
            }
        }
        (g, ids)
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> Vec<EdgeRef> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push(EdgeRef { u, v });
                }
            }
        }
        out
    }

    /// All nonedges in lexicographic order: exactly the edges of the
    /// complement, so edges and nonedges partition the unordered pairs.
    pub fn nonedges(&self) -> Vec<EdgeRef> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.adj[u].contains(v) {
                    out.push(EdgeRef { u, v });
                }
            }
        }
        out
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = BitSet::new(self.n);
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = vec![start];
            seen.insert(start);
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for v in self.adj[u].iter() {
                    if !seen.contains(v) {
                        seen.insert(v);
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// True when the graph contains a cycle.
    pub fn has_cycle(&self) -> bool {
        // A graph is acyclic iff m = n - #components.
        self.m != self.n - self.connected_components().len()
    }

    /// Some vertex triple inducing exactly a two-edge path, if any.
    /// Returned in path order: the middle vertex is second.
    pub fn find_induced_path3(&self) -> Option<[usize; 3]> {
        for mid in 0..self.n {
            let nb: Vec<usize> = self.adj[mid].to_vec();
            for (i, &a) in nb.iter().enumerate() {
                for &b in &nb[i + 1..] {
                    if !self.adj[a].contains(b) {
                        return Some([a, mid, b]);
                    }
                }
            }
        }
        None
    }

    pub fn has_induced_path3(&self) -> bool {
        self.find_induced_path3().is_some()
    }

    /// Some vertex quadruple inducing exactly a three-edge path, if any.
    /// Returned in path order.
    pub fn find_induced_path4(&self) -> Option<[usize; 4]> {
        // Brute force over quadruples: an induced subgraph on four vertices is
        // a path iff it has three edges with degree sequence (1, 1, 2, 2).
        for a in 0..self.n {
            for b in (a + 1)..self.n {
                for c in (b + 1)..self.n {
                    for d in (c + 1)..self.n {
                        if let Some(path) = induced_path4_order(self, [a, b, c, d]) {
                            return Some(path);
                        }
                    }
                }
            }
        }
        None
    }

    pub fn has_induced_path4(&self) -> bool {
        self.find_induced_path4().is_some()
    }
}

fn induced_path4_order(g: &Graph, vs: [usize; 4]) -> Option<[usize; 4]> {
    let mut degs = [0usize; 4];
    let mut m = 0;
    for i in 0..4 {
        for j in (i + 1)..4 {
            if g.has_edge(vs[i], vs[j]) {
                degs[i] += 1;
                degs[j] += 1;
                m += 1;
            }
        }
    }
    if m != 3 {
        return None;
    }
    let mut sorted = degs;
    sorted.sort_unstable();
    if sorted != [1, 1, 2, 2] {
        return None;
    }
    // Walk from one endpoint to recover path order.
    let start = (0..4).find(|&i| degs[i] == 1).unwrap();
    let mut order = [vs[start], 0, 0, 0];
    let mut prev = usize::MAX;
    let mut cur = vs[start];
    for slot in order.iter_mut().skip(1) {
        let next = vs
            .iter()
            .copied()
            .find(|&w| w != cur && w != prev && g.has_edge(cur, w))
            .unwrap();
        *slot = next;
        prev = cur;
        cur = next;
    }
    Some(order)
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// The `n`-vertex path `0 - 1 - ... - n-1`.
pub fn path_graph(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

/// The `n`-vertex cycle, `n >= 3`.
pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3);
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

/// The complete graph on `n` vertices.
pub fn complete_graph(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// The complete bipartite graph with sides of size `a` and `b`.
pub fn complete_bipartite_graph(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    Graph::from_edges(a + b, edges).unwrap()
}

/// Disjoint union, with the second graph's vertices shifted above the first's.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let mut edges: Vec<(usize, usize)> = a.edges().iter().map(|e| e.endpoints()).collect();
    for e in b.edges() {
        edges.push((e.u() + a.n(), e.v() + a.n()));
    }
    Graph::from_edges(a.n() + b.n(), edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_of_complete_is_empty() {
        let g = complete_graph(3).complement();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 0);
    }

    #[test]
    fn complement_of_empty_is_complete() {
        let g = Graph::new(5).complement();
        assert_eq!(g, complete_graph(5));
    }

    #[test]
    fn complement_of_c4_is_the_two_diagonals() {
        // Enumerating the six pairs of C4 leaves exactly the two diagonals.
        let g = cycle_graph(4).complement();
        assert_eq!(
            g.edges(),
            vec![EdgeRef::new(0, 2).unwrap(), EdgeRef::new(1, 3).unwrap()]
        );
    }

    #[test]
    fn delete_middle_of_p3_leaves_isolated_pair() {
        let g = path_graph(3).delete_vertex(1).unwrap();
        assert_eq!(g, Graph::new(2));
    }

    #[test]
    fn delete_vertex_of_complete() {
        for v in 0..4 {
            assert_eq!(complete_graph(4).delete_vertex(v).unwrap(), complete_graph(3));
        }
    }

    #[test]
    fn delete_vertex_of_c4_gives_p3() {
        for v in 0..4 {
            let g = cycle_graph(4).delete_vertex(v).unwrap();
            assert_eq!(g.m(), 2);
            assert!(!g.has_cycle());
            assert!(g.is_connected());
        }
    }

    #[test]
    fn edge_edits() {
        let e = EdgeRef::new(0, 1).unwrap();
        let g = complete_graph(2).delete_edge(e).unwrap();
        assert_eq!(g, Graph::new(2));
        // closing a path on three vertices yields a triangle
        let ends = EdgeRef::new(0, 2).unwrap();
        assert_eq!(path_graph(3).add_edge(ends).unwrap(), complete_graph(3));
        // removing one cycle edge yields a path
        let c4 = cycle_graph(4);
        for e in c4.edges() {
            let h = c4.delete_edge(e).unwrap();
            assert_eq!(h.m(), 3);
            assert!(h.is_connected() && !h.has_cycle());
        }
    }

    #[test]
    fn edit_errors() {
        let g = path_graph(3);
        assert!(g.delete_edge(EdgeRef::new(0, 2).unwrap()).is_err());
        assert!(g.add_edge(EdgeRef::new(0, 1).unwrap()).is_err());
        assert!(EdgeRef::new(2, 2).is_err());
        assert!(g.delete_vertex(3).is_err());
        assert!(g.add_edge(EdgeRef::new(0, 7).unwrap()).is_err());
    }

    #[test]
    fn nonedges_of_families() {
        assert!(complete_graph(6).nonedges().is_empty());
        assert_eq!(
            Graph::new(3).nonedges(),
            vec![
                EdgeRef::new(0, 1).unwrap(),
                EdgeRef::new(0, 2).unwrap(),
                EdgeRef::new(1, 2).unwrap()
            ]
        );
        // six pairs minus the three path edges
        assert_eq!(
            path_graph(4).nonedges(),
            vec![
                EdgeRef::new(0, 2).unwrap(),
                EdgeRef::new(0, 3).unwrap(),
                EdgeRef::new(1, 3).unwrap()
            ]
        );
    }

    #[test]
    fn degree_and_components() {
        let star = complete_bipartite_graph(1, 3);
        assert_eq!(star.degree(0), 3);
        assert_eq!(Graph::new(4).connected_components().len(), 4);
        let g = disjoint_union(&path_graph(2), &path_graph(3));
        let sizes: Vec<usize> = g.connected_components().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![2, 3]);
    }

    #[test]
    fn induced_path_detection() {
        for n in 1..6 {
            assert!(!complete_graph(n).has_induced_path3());
        }
        assert!(!cycle_graph(4).has_induced_path4());
        assert!(!disjoint_union(&path_graph(2), &path_graph(2)).has_induced_path3());
        assert!(path_graph(3).has_induced_path3());
        let found = path_graph(4).find_induced_path4().unwrap();
        assert!(found == [0, 1, 2, 3] || found == [3, 2, 1, 0]);
        assert!(cycle_graph(5).has_induced_path4());
    }

    #[test]
    fn null_graph_is_legal() {
        let g = Graph::new(0);
        assert_eq!(g.complement(), g);
        assert!(g.edges().is_empty() && g.nonedges().is_empty());
        assert!(g.is_connected());
        assert!(!g.has_cycle());
    }
}
