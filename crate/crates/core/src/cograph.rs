//! Co-tree construction and the co-graph deciders.
//!
//! A co-graph decomposes into single vertices under disjoint union and join;
//! the decomposition tree (co-tree) carries per-node labels for the chromatic
//! number (max under union, sum under join), the independence number (sum
//! under union, max under join), the clique number (max/sum), and the number
//! of maximum cliques (sum over the children attaining the maximum under
//! union, product under join). Chi equals omega at every node, which is the
//! perfection of co-graphs made visible.
//!
//! Recognition runs by the recursive definition itself: split into connected
//! components (union) or complement-connected components (join) until single
//! vertices remain; a graph that is connected both ways contains an induced
//! four-vertex path, which is returned as the rejection witness.
//!
//! Edge-deletion questions walk the tree. An edge is omega-critical iff
//! every maximum clique passes through both endpoints, which decomposes over
//! union nodes (the edge's side must strictly dominate its siblings) and
//! bottoms out at the join node separating the endpoints. An edge is
//! chi-critical iff both endpoints are chi-critical vertices. Nonedge
//! additions go the other way: omega grows iff a clique of size omega - 1
//! lives in the endpoints' common neighborhood, chi-unfrozenness recurses
//! down to the union node separating the endpoints, and the alpha/beta
//! questions are the omega questions on the complement.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{EdgeRef, Graph, Parameter};
use crate::verdict::{Decider, Delta, Element, Sweep, Verdict};

/// Node kind of a co-tree: a single original vertex, or an n-ary combinator.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NodeKind {
    Leaf(usize),
    Union,
    Join,
}

/// A canonical co-tree: internal nodes have at least two children, children
/// of a union are never unions (likewise for joins), and children are
/// ordered by their smallest leaf.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoTree {
    pub kind: NodeKind,
    pub children: Vec<CoTree>,
    pub chi: usize,
    pub alpha: usize,
    pub omega: usize,
    /// Number of maximum cliques below this node (saturating).
    pub max_clique_count: u128,
    /// Original vertex indices below this node, sorted.
    leaves: Vec<usize>,
}

impl CoTree {
    fn leaf(v: usize) -> CoTree {
        CoTree {
            kind: NodeKind::Leaf(v),
            children: Vec::new(),
            chi: 1,
            alpha: 1,
            omega: 1,
            max_clique_count: 1,
            leaves: vec![v],
        }
    }

    fn internal(kind: NodeKind, children: Vec<CoTree>) -> CoTree {
        debug_assert!(matches!(kind, NodeKind::Union | NodeKind::Join));
        let mut flat: Vec<CoTree> = Vec::with_capacity(children.len());
        for c in children {
            if c.kind == kind {
                flat.extend(c.children);
            } else {
                flat.push(c);
            }
        }
        debug_assert!(flat.len() >= 2);
        flat.sort_by_key(|c| c.leaves[0]);

        let (chi, alpha, omega, max_clique_count) = match kind {
            NodeKind::Union => {
                let omega = flat.iter().map(|c| c.omega).max().unwrap();
                let count = flat
                    .iter()
                    .filter(|c| c.omega == omega)
                    .fold(0u128, |acc, c| acc.saturating_add(c.max_clique_count));
                (
                    flat.iter().map(|c| c.chi).max().unwrap(),
                    flat.iter().map(|c| c.alpha).sum(),
                    omega,
                    count,
                )
            }
            NodeKind::Join => (
                flat.iter().map(|c| c.chi).sum(),
                flat.iter().map(|c| c.alpha).max().unwrap(),
                flat.iter().map(|c| c.omega).sum(),
                flat.iter()
                    .fold(1u128, |acc, c| acc.saturating_mul(c.max_clique_count)),
            ),
            NodeKind::Leaf(_) => unreachable!(),
        };
        let mut leaves: Vec<usize> = flat.iter().flat_map(|c| c.leaves.iter().copied()).collect();
        leaves.sort_unstable();
        debug_assert_eq!(chi, omega, "co-graphs are perfect at every node");
        CoTree { kind, children: flat, chi, alpha, omega, max_clique_count, leaves }
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves.len()
    }

    pub fn leaves(&self) -> &[usize] {
        &self.leaves
    }

    pub fn contains_leaf(&self, v: usize) -> bool {
        self.leaves.binary_search(&v).is_ok()
    }

    fn child_index_of(&self, v: usize) -> Option<usize> {
        self.children.iter().position(|c| c.contains_leaf(v))
    }
}

/// Builds the co-tree of `g`, or reports a witness induced four-vertex path.
pub fn build_cotree(g: &Graph) -> Result<CoTree> {
    if g.n() == 0 {
        return Err(Error::NoEngine("the null graph has no co-tree".into()));
    }
    let ids: Vec<usize> = (0..g.n()).collect();
    build_rec(g, &ids)
}

fn build_rec(g: &Graph, ids: &[usize]) -> Result<CoTree> {
    if g.n() == 1 {
        return Ok(CoTree::leaf(ids[0]));
    }
    let comps = g.connected_components();
    if comps.len() > 1 {
        let children = comps
            .into_iter()
            .map(|comp| sub_build(g, ids, &comp))
            .collect::<Result<Vec<_>>>()?;
        return Ok(CoTree::internal(NodeKind::Union, children));
    }
    let co_comps = g.complement().connected_components();
    if co_comps.len() > 1 {
        let children = co_comps
            .into_iter()
            .map(|comp| sub_build(g, ids, &comp))
            .collect::<Result<Vec<_>>>()?;
        return Ok(CoTree::internal(NodeKind::Join, children));
    }
    // Connected and complement-connected on >= 2 vertices: an induced
    // four-vertex path must exist.
    let p4 = g
        .find_induced_path4()
        .expect("a connected, co-connected graph on >= 2 vertices induces a P4");
    Err(Error::NotCograph(p4.map(|v| ids[v])))
}

fn sub_build(g: &Graph, ids: &[usize], comp: &[usize]) -> Result<CoTree> {
    let (sub, sub_ids) = g.induced_subgraph(&comp.iter().copied().collect());
    let mapped: Vec<usize> = sub_ids.iter().map(|&i| ids[i]).collect();
    build_rec(&sub, &mapped)
}

/// Rebuilds the graph a co-tree describes, over `n` vertices. Union nodes
/// contribute no edges across children; join nodes contribute all of them.
pub fn expand(t: &CoTree, n: usize) -> Graph {
    let mut edges = Vec::new();
    collect_edges(t, &mut edges);
    Graph::from_edges(n, edges).unwrap()
}

fn collect_edges(t: &CoTree, edges: &mut Vec<(usize, usize)>) {
    for c in &t.children {
        collect_edges(c, edges);
    }
    if t.kind == NodeKind::Join {
        for (i, a) in t.children.iter().enumerate() {
            for b in &t.children[i + 1..] {
                for &x in a.leaves() {
                    for &y in b.leaves() {
                        edges.push((x, y));
                    }
                }
            }
        }
    }
}

/// `(alpha, beta, omega, chi)` from the root labels; beta via Gallai.
pub fn cotree_params(t: &CoTree) -> (usize, usize, usize, usize) {
    (t.alpha, t.leaf_count() - t.alpha, t.omega, t.chi)
}

/// The co-tree restricted to the leaves in `keep`: other leaves are dropped,
/// single-child nodes are spliced out, and labels are recomputed. `None`
/// when nothing remains.
pub fn restricted(t: &CoTree, keep: &BitSet) -> Option<CoTree> {
    match t.kind {
        NodeKind::Leaf(v) => keep.contains(v).then(|| CoTree::leaf(v)),
        kind => {
            let mut kept: Vec<CoTree> = t
                .children
                .iter()
                .filter_map(|c| restricted(c, keep))
                .collect();
            match kept.len() {
                0 => None,
                1 => Some(kept.pop().unwrap()),
                _ => Some(CoTree::internal(kind, kept)),
            }
        }
    }
}

/// Removes one leaf, splicing out any node left with a single child.
/// Deleting the last leaf yields `None`.
pub fn cotree_delete_vertex(t: &CoTree, v: usize) -> Result<Option<CoTree>> {
    if !t.contains_leaf(v) {
        return Err(Error::VertexOutOfRange { v, n: t.leaf_count() });
    }
    let mut keep = BitSet::new(t.leaves.last().unwrap() + 1);
    for &l in &t.leaves {
        keep.insert(l);
    }
    keep.remove(v);
    Ok(restricted(t, &keep))
}

/// Number of maximum cliques, either of the whole co-tree or of those
/// passing through leaf `v`.
pub fn count_max_cliques_through(t: &CoTree, v: Option<usize>) -> Result<u128> {
    match v {
        None => Ok(t.max_clique_count),
        Some(x) => {
            if !t.contains_leaf(x) {
                return Err(Error::VertexOutOfRange { v: x, n: t.leaf_count() });
            }
            Ok(count_through(t, x))
        }
    }
}

fn count_through(t: &CoTree, x: usize) -> u128 {
    match t.kind {
        NodeKind::Leaf(_) => 1,
        NodeKind::Union => {
            let c = &t.children[t.child_index_of(x).unwrap()];
            if c.omega < t.omega {
                0
            } else {
                count_through(c, x)
            }
        }
        NodeKind::Join => {
            let holder = t.child_index_of(x).unwrap();
            t.children
                .iter()
                .enumerate()
                .fold(1u128, |acc, (i, c)| {
                    acc.saturating_mul(if i == holder {
                        count_through(c, x)
                    } else {
                        c.max_clique_count
                    })
                })
        }
    }
}

/// Explicit maximum-clique enumeration from the co-tree, for use as a test
/// reference; gives up with `None` once more than `cap` cliques accumulate.
pub fn max_cliques(t: &CoTree, cap: usize) -> Option<Vec<Vec<usize>>> {
    let mut cliques = match t.kind {
        NodeKind::Leaf(v) => vec![vec![v]],
        NodeKind::Union => {
            let mut all = Vec::new();
            for c in t.children.iter().filter(|c| c.omega == t.omega) {
                all.extend(max_cliques(c, cap)?);
                if all.len() > cap {
                    return None;
                }
            }
            all
        }
        NodeKind::Join => {
            let mut acc: Vec<Vec<usize>> = vec![Vec::new()];
            for c in &t.children {
                let child_cliques = max_cliques(c, cap)?;
                let mut next = Vec::with_capacity(acc.len() * child_cliques.len());
                for base in &acc {
                    for extension in &child_cliques {
                        let mut merged = base.clone();
                        merged.extend(extension.iter().copied());
                        next.push(merged);
                    }
                }
                if next.len() > cap {
                    return None;
                }
                acc = next;
            }
            acc
        }
    };
    for c in cliques.iter_mut() {
        c.sort_unstable();
    }
    cliques.sort();
    Some(cliques)
}

/// Every maximum clique of `t` passes through leaf `x`; equivalently,
/// deleting `x` lowers omega.
fn all_max_cliques_contain(t: &CoTree, x: usize) -> bool {
    count_through(t, x) == t.max_clique_count
}

/// Whether the edge `{u, v}` is omega-critical: every maximum clique of the
/// whole graph uses both endpoints. Walking down, a union node keeps that
/// possible only when the edge's child strictly dominates its siblings, and
/// the join node separating the endpoints decides.
fn omega_critical_edge(t: &CoTree, u: usize, v: usize) -> bool {
    let mut node = t;
    loop {
        let iu = node.child_index_of(u).unwrap();
        let iv = node.child_index_of(v).unwrap();
        if iu == iv {
            let child = &node.children[iu];
            if node.kind == NodeKind::Union {
                let sibling_max = node
                    .children
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != iu)
                    .map(|(_, c)| c.omega)
                    .max()
                    .unwrap();
                if sibling_max >= child.omega {
                    return false; // a sibling sustains omega without the edge
                }
            }
            node = child;
        } else {
            debug_assert_eq!(node.kind, NodeKind::Join, "edge endpoints split at a union");
            return all_max_cliques_contain(&node.children[iu], u)
                && all_max_cliques_contain(&node.children[iv], v);
        }
    }
}

/// Whether adding the nonedge `e` leaves omega unchanged: the largest clique
/// in the common neighborhood of the endpoints, plus the endpoints
/// themselves, must not beat the current maximum.
pub fn cograph_omega_unfrozen_edge(g: &Graph, e: EdgeRef) -> Result<bool> {
    let t = build_cotree(g)?;
    omega_unfrozen_edge(g, &t, e)
}

fn omega_unfrozen_edge(g: &Graph, t: &CoTree, e: EdgeRef) -> Result<bool> {
    if g.has_edge(e.u(), e.v()) {
        return Err(Error::EdgeExists { u: e.u(), v: e.v() });
    }
    let common = g.neighbors(e.u()).intersection(g.neighbors(e.v()));
    let omega_common = match restricted(t, &common) {
        Some(sub) => sub.omega,
        None => 0,
    };
    Ok(2 + omega_common <= t.omega)
}

/// Whether adding the nonedge `{u, v}` raises chi. Join ancestors pass the
/// question to the child holding both endpoints; a union ancestor answers
/// "unfrozen" early when that child's chi is below a sibling's; the union
/// node separating the endpoints freezes exactly when its whole subgraph is
/// edgeless, since only then do the merged color classes run out.
fn chi_frozen_nonedge(t: &CoTree, u: usize, v: usize) -> bool {
    let mut node = t;
    loop {
        let iu = node.child_index_of(u).unwrap();
        let iv = node.child_index_of(v).unwrap();
        if iu == iv {
            let child = &node.children[iu];
            if node.kind == NodeKind::Union {
                let sibling_max = node
                    .children
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != iu)
                    .map(|(_, c)| c.chi)
                    .max()
                    .unwrap();
                if child.chi < sibling_max {
                    return false; // slack elsewhere absorbs any increase
                }
            }
            node = child;
        } else {
            debug_assert_eq!(node.kind, NodeKind::Union, "nonedge endpoints split at a join");
            return node.chi == 1;
        }
    }
}

/// The chi-critical vertices: those whose deletion lowers the chromatic
/// number, computed by one co-tree restriction per vertex.
pub fn chi_critical_vertices(g: &Graph) -> Result<Vec<usize>> {
    let t = build_cotree(g)?;
    Ok((0..g.n())
        .filter(|&v| chi_after_delete(&t, v) != t.chi)
        .collect())
}

fn label_after_delete(t: &CoTree, v: usize, read: impl Fn(&CoTree) -> usize) -> usize {
    match cotree_delete_vertex(t, v).unwrap() {
        Some(sub) => read(&sub),
        None => 0,
    }
}

fn chi_after_delete(t: &CoTree, v: usize) -> usize {
    label_after_delete(t, v, |s| s.chi)
}

/// The decider for co-graphs.
#[derive(Clone, Copy, Debug, Default)]
pub struct CographDecider;

impl Decider for CographDecider {
    fn name(&self) -> &'static str {
        "cograph"
    }

    fn edge_sweep(&self, g: &Graph, p: Parameter) -> Result<Sweep> {
        if g.n() == 0 {
            return Ok(Sweep::default());
        }
        let t = build_cotree(g)?;
        let entries = match p {
            Parameter::Chi => {
                // an edge is chi-critical iff both endpoints are
                let critical_vertex: Vec<bool> = (0..g.n())
                    .map(|v| chi_after_delete(&t, v) != t.chi)
                    .collect();
                g.edges()
                    .into_iter()
                    .map(|e| {
                        let crit = critical_vertex[e.u()] && critical_vertex[e.v()];
                        Delta {
                            element: Element::Edge(e),
                            before: t.chi,
                            after: t.chi - usize::from(crit),
                        }
                    })
                    .collect()
            }
            Parameter::Omega => g
                .edges()
                .into_iter()
                .map(|e| {
                    let crit = omega_critical_edge(&t, e.u(), e.v());
                    Delta {
                        element: Element::Edge(e),
                        before: t.omega,
                        after: t.omega - usize::from(crit),
                    }
                })
                .collect(),
            Parameter::Alpha | Parameter::Beta => {
                // deleting an edge here adds a nonedge in the complement, so
                // alpha-stability is omega-unfrozenness over there
                let co = g.complement();
                let co_tree = complemented(&t);
                let alpha = t.alpha;
                let beta = g.n() - alpha;
                g.edges()
                    .into_iter()
                    .map(|e| {
                        let crit = !omega_unfrozen_edge(&co, &co_tree, e)?;
                        Ok(match p {
                            Parameter::Alpha => Delta {
                                element: Element::Edge(e),
                                before: alpha,
                                after: alpha + usize::from(crit),
                            },
                            _ => Delta {
                                element: Element::Edge(e),
                                before: beta,
                                after: beta - usize::from(crit),
                            },
                        })
                    })
                    .collect::<Result<Vec<_>>>()?
            }
        };
        Ok(Sweep::new(entries))
    }

    fn vertex_sweep(&self, g: &Graph, p: Parameter) -> Result<Sweep> {
        if g.n() == 0 {
            return Ok(Sweep::default());
        }
        let t = build_cotree(g)?;
        let entries = (0..g.n())
            .map(|v| {
                let (before, after) = match p {
                    Parameter::Chi => (t.chi, chi_after_delete(&t, v)),
                    Parameter::Omega => (t.omega, label_after_delete(&t, v, |s| s.omega)),
                    Parameter::Alpha => (t.alpha, label_after_delete(&t, v, |s| s.alpha)),
                    Parameter::Beta => (
                        g.n() - t.alpha,
                        (g.n() - 1) - label_after_delete(&t, v, |s| s.alpha),
                    ),
                };
                Delta { element: Element::Vertex(v), before, after }
            })
            .collect();
        Ok(Sweep::new(entries))
    }

    fn nonedge_sweep(&self, g: &Graph, p: Parameter) -> Result<Sweep> {
        if g.n() == 0 {
            return Ok(Sweep::default());
        }
        let t = build_cotree(g)?;
        let entries = match p {
            Parameter::Chi => g
                .nonedges()
                .into_iter()
                .map(|e| {
                    let frozen = chi_frozen_nonedge(&t, e.u(), e.v());
                    Delta {
                        element: Element::Edge(e),
                        before: t.chi,
                        after: t.chi + usize::from(frozen),
                    }
                })
                .collect(),
            Parameter::Omega => g
                .nonedges()
                .into_iter()
                .map(|e| {
                    let frozen = !omega_unfrozen_edge(g, &t, e)?;
                    Ok(Delta {
                        element: Element::Edge(e),
                        before: t.omega,
                        after: t.omega + usize::from(frozen),
                    })
                })
                .collect::<Result<Vec<_>>>()?,
            Parameter::Alpha | Parameter::Beta => {
                // adding a nonedge here deletes an edge of the complement,
                // so alpha-unfrozenness is omega-stability over there
                let co_tree = complemented(&t);
                let alpha = t.alpha;
                let beta = g.n() - alpha;
                g.nonedges()
                    .into_iter()
                    .map(|e| {
                        let frozen = omega_critical_edge(&co_tree, e.u(), e.v());
                        match p {
                            Parameter::Alpha => Delta {
                                element: Element::Edge(e),
                                before: alpha,
                                after: alpha - usize::from(frozen),
                            },
                            _ => Delta {
                                element: Element::Edge(e),
                                before: beta,
                                after: beta + usize::from(frozen),
                            },
                        }
                    })
                    .collect()
            }
        };
        Ok(Sweep::new(entries))
    }
}

/// The co-tree of the complement: union and join nodes swap, labels are
/// recomputed.
pub fn complemented(t: &CoTree) -> CoTree {
    match t.kind {
        NodeKind::Leaf(v) => CoTree::leaf(v),
        NodeKind::Union => {
            CoTree::internal(NodeKind::Join, t.children.iter().map(complemented).collect())
        }
        NodeKind::Join => {
            CoTree::internal(NodeKind::Union, t.children.iter().map(complemented).collect())
        }
    }
}

// Spec-level conveniences over the decider.

pub fn cograph_vertex_stability(g: &Graph, p: Parameter) -> Result<Verdict> {
    Ok(CographDecider.vertex_sweep(g, p)?.all_preserve())
}

pub fn cograph_chi_stability(g: &Graph) -> Result<Verdict> {
    Ok(CographDecider.edge_sweep(g, Parameter::Chi)?.all_preserve())
}

pub fn cograph_omega_stability(g: &Graph) -> Result<Verdict> {
    Ok(CographDecider.edge_sweep(g, Parameter::Omega)?.all_preserve())
}

pub fn cograph_alpha_beta_stability(g: &Graph, p: Parameter) -> Result<Verdict> {
    debug_assert!(matches!(p, Parameter::Alpha | Parameter::Beta));
    Ok(CographDecider.edge_sweep(g, p)?.all_preserve())
}

pub fn cograph_unfrozenness(g: &Graph, p: Parameter) -> Result<Verdict> {
    Ok(CographDecider.nonedge_sweep(g, p)?.all_preserve())
}

// ---------------------------------------------------------------------------
// Co-expression text form: leaves `v<k>` (1-based), operators `u` and `j` in
// parenthesized prefix form, e.g. `(j (u v1 v3) (u v2 v4))`.
// ---------------------------------------------------------------------------

pub fn to_coexpr(t: &CoTree) -> String {
    match t.kind {
        NodeKind::Leaf(v) => format!("v{}", v + 1),
        NodeKind::Union | NodeKind::Join => {
            let op = if t.kind == NodeKind::Union { "u" } else { "j" };
            let parts: Vec<String> = t.children.iter().map(to_coexpr).collect();
            format!("({} {})", op, parts.join(" "))
        }
    }
}

pub fn parse_coexpr(text: &str) -> Result<CoTree> {
    let mut tokens = tokenize(text);
    tokens.reverse();
    let tree = parse_node(&mut tokens)?;
    if !tokens.is_empty() {
        return Err(Error::Parse { line: 1, msg: "trailing input after co-expression".into() });
    }
    let mut seen = std::collections::BTreeSet::new();
    for &v in tree.leaves() {
        if !seen.insert(v) {
            return Err(Error::Parse { line: 1, msg: format!("leaf v{} repeated", v + 1) });
        }
    }
    Ok(tree)
}

fn tokenize(text: &str) -> Vec<String> {
    let spaced = text.replace('(', " ( ").replace(')', " ) ");
    spaced.split_whitespace().map(str::to_owned).collect()
}

fn parse_node(tokens: &mut Vec<String>) -> Result<CoTree> {
    let err = |msg: String| Error::Parse { line: 1, msg };
    let tok = tokens.pop().ok_or_else(|| err("unexpected end of co-expression".into()))?;
    if tok == "(" {
        let op = tokens.pop().ok_or_else(|| err("missing operator after `(`".into()))?;
        let kind = match op.as_str() {
            "u" => NodeKind::Union,
            "j" => NodeKind::Join,
            other => return Err(err(format!("expected `u` or `j`, got `{other}`"))),
        };
        let mut children = Vec::new();
        while tokens.last().map(String::as_str) != Some(")") {
            children.push(parse_node(tokens)?);
        }
        tokens.pop();
        if children.len() < 2 {
            return Err(err("operators need at least two operands".into()));
        }
        Ok(CoTree::internal(kind, children))
    } else if let Some(num) = tok.strip_prefix('v') {
        let k: usize = num.parse().map_err(|_| err(format!("bad leaf `{tok}`")))?;
        if k == 0 {
            return Err(err("leaf indices are 1-based".into()));
        }
        Ok(CoTree::leaf(k - 1))
    } else {
        Err(err(format!("unexpected token `{tok}`")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        complete_graph, cycle_graph, disjoint_union, path_graph, Graph, Question,
    };
    use crate::oracle::decide_by_definition;
    use Parameter::*;

    fn union_of_k3_k2() -> Graph {
        disjoint_union(&complete_graph(3), &complete_graph(2))
    }

    #[test]
    fn c4_cotree_matches_worked_example() {
        let t = build_cotree(&cycle_graph(4)).unwrap();
        assert_eq!(t.kind, NodeKind::Join);
        assert_eq!(t.children.len(), 2);
        assert!(t.children.iter().all(|c| c.kind == NodeKind::Union));
        assert_eq!(to_coexpr(&t), "(j (u v1 v3) (u v2 v4))");
        assert_eq!(cotree_params(&t), (2, 2, 2, 2));
        assert_eq!(t.max_clique_count, 4); // the four edges
    }

    #[test]
    fn p4_is_rejected_with_witness() {
        match build_cotree(&path_graph(4)) {
            Err(Error::NotCograph(w)) => {
                assert!(w == [0, 1, 2, 3] || w == [3, 2, 1, 0]);
            }
            other => panic!("expected rejection, got {other:?}"),
        }
    }

    #[test]
    fn complete_graph_cotree() {
        let t = build_cotree(&complete_graph(5)).unwrap();
        assert_eq!(t.kind, NodeKind::Join);
        assert_eq!(t.children.len(), 5);
        assert_eq!(cotree_params(&t), (1, 4, 5, 5));
        assert_eq!(t.max_clique_count, 1);
    }

    #[test]
    fn expansion_round_trips() {
        let mut graphs: Vec<Graph> = vec![
            cycle_graph(4),
            complete_graph(4),
            Graph::new(3),
            union_of_k3_k2(),
        ];
        for seed in 0..40 {
            graphs.push(crate::gen::random_cograph(1 + (seed as usize % 10), seed));
        }
        for g in graphs {
            let t = build_cotree(&g).unwrap();
            assert_eq!(expand(&t, g.n()), g);
        }
    }

    #[test]
    fn union_and_join_labels() {
        let t = build_cotree(&union_of_k3_k2()).unwrap();
        assert_eq!(cotree_params(&t), (2, 3, 3, 3));
        assert_eq!(t.max_clique_count, 1); // only the triangle attains 3
        // all of I2 union I2 joined: ((a u b) j (c u d)) has alpha 2, chi 2
        let t = parse_coexpr("(j (u v1 v2) (u v3 v4))").unwrap();
        assert_eq!(t.alpha, 2);
        assert_eq!(t.chi, 2);
    }

    #[test]
    fn delete_vertex_splices() {
        let k4 = build_cotree(&complete_graph(4)).unwrap();
        let smaller = cotree_delete_vertex(&k4, 3).unwrap().unwrap();
        assert_eq!(smaller, build_cotree(&complete_graph(3)).unwrap());

        // dropping one cycle vertex leaves a two-edge path
        let c4 = build_cotree(&cycle_graph(4)).unwrap();
        let sub = cotree_delete_vertex(&c4, 0).unwrap().unwrap();
        assert_eq!(sub.chi, 2);
        assert_eq!(sub.alpha, 2);
        let expected = cycle_graph(4).delete_vertex(0).unwrap();
        // compare expansions on the surviving labels {1, 2, 3} shifted down
        let shifted: Vec<(usize, usize)> = expand(&sub, 4)
            .edges()
            .iter()
            .map(|e| (e.u() - 1, e.v() - 1))
            .collect();
        assert_eq!(Graph::from_edges(3, shifted).unwrap(), expected);

        let pair = parse_coexpr("(u v1 v2)").unwrap();
        let single = cotree_delete_vertex(&pair, 0).unwrap().unwrap();
        assert_eq!(single, CoTree::leaf(1));
        assert!(cotree_delete_vertex(&pair, 1).unwrap().unwrap().contains_leaf(0));
        assert!(cotree_delete_vertex(&pair, 7).is_err());
        assert_eq!(cotree_delete_vertex(&CoTree::leaf(0), 0).unwrap(), None);
    }

    #[test]
    fn incremental_delete_matches_full_rebuild() {
        for seed in 0..30 {
            let g = crate::gen::random_cograph(9, 500 + seed);
            let t = build_cotree(&g).unwrap();
            for v in 0..g.n() {
                let incremental = cotree_delete_vertex(&t, v).unwrap();
                let rebuilt_graph = g.delete_vertex(v).unwrap();
                if rebuilt_graph.n() == 0 {
                    assert!(incremental.is_none());
                    continue;
                }
                // rebuild from the deleted graph, mapping indices back up
                let rebuilt = build_cotree(&rebuilt_graph).unwrap();
                let expanded = expand(&rebuilt, rebuilt_graph.n());
                let unshifted: Vec<(usize, usize)> = expanded
                    .edges()
                    .iter()
                    .map(|e| {
                        let up = |x: usize| if x >= v { x + 1 } else { x };
                        (up(e.u()), up(e.v()))
                    })
                    .collect();
                let reference = Graph::from_edges(g.n(), unshifted).unwrap();
                assert_eq!(expand(&incremental.unwrap(), g.n()), reference);
            }
        }
    }

    #[test]
    fn clique_counting_examples() {
        let kn = build_cotree(&complete_graph(6)).unwrap();
        assert_eq!(count_max_cliques_through(&kn, Some(2)).unwrap(), 1);
        let c4 = build_cotree(&cycle_graph(4)).unwrap();
        assert_eq!(count_max_cliques_through(&c4, Some(0)).unwrap(), 2);
        let mixed = build_cotree(&union_of_k3_k2()).unwrap();
        assert_eq!(count_max_cliques_through(&mixed, None).unwrap(), 1);
        assert!(count_max_cliques_through(&c4, Some(9)).is_err());
    }

    #[test]
    fn enumerated_cliques_match_counts_and_brute_force() {
        for seed in 0..40 {
            let g = crate::gen::random_cograph(1 + (seed as usize % 11), 900 + seed);
            let t = build_cotree(&g).unwrap();
            let listed = max_cliques(&t, 10_000).unwrap();
            assert_eq!(listed.len() as u128, t.max_clique_count);
            let brute = brute_force_max_cliques(&g);
            assert_eq!(listed, brute);
            for v in 0..g.n() {
                let through = count_max_cliques_through(&t, Some(v)).unwrap();
                let brute_through = brute.iter().filter(|c| c.contains(&v)).count();
                assert_eq!(through, brute_through as u128);
            }
        }
    }

    /// Subset-enumeration reference, independent of the co-tree.
    fn brute_force_max_cliques(g: &Graph) -> Vec<Vec<usize>> {
        let n = g.n();
        assert!(n <= 16);
        let mut best = Vec::new();
        let mut size = 0;
        for mask in 1u32..(1 << n) {
            let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let is_clique = verts
                .iter()
                .enumerate()
                .all(|(i, &u)| verts[i + 1..].iter().all(|&v| g.has_edge(u, v)));
            if is_clique {
                match verts.len().cmp(&size) {
                    std::cmp::Ordering::Greater => {
                        size = verts.len();
                        best = vec![verts];
                    }
                    std::cmp::Ordering::Equal => best.push(verts),
                    std::cmp::Ordering::Less => {}
                }
            }
        }
        best.sort();
        best
    }

    #[test]
    fn counting_survives_exponential_families() {
        // a join of k two-leaf unions has 2^k maximum cliques
        let k = 40;
        let children: Vec<String> = (0..k)
            .map(|i| format!("(u v{} v{})", 2 * i + 1, 2 * i + 2))
            .collect();
        let t = parse_coexpr(&format!("(j {})", children.join(" "))).unwrap();
        assert_eq!(t.max_clique_count, 1u128 << k);
        assert_eq!(max_cliques(&t, 10_000), None);
    }

    #[test]
    fn omega_stability_fixtures() {
        assert!(!cograph_omega_stability(&complete_graph(4)).unwrap().holds);
        assert!(cograph_omega_stability(&cycle_graph(4)).unwrap().holds);
        // star = leaf joined onto two leaves: both edges leave a second
        // maximum clique behind
        let star = complete_bipartite_like_p3();
        assert!(cograph_omega_stability(&star).unwrap().holds);
        // every maximum clique of K4 minus an edge passes through the two
        // vertices of full degree, so their shared edge is critical
        let k4_minus = complete_graph(4)
            .delete_edge(EdgeRef::new(2, 3).unwrap())
            .unwrap();
        let v = cograph_omega_stability(&k4_minus).unwrap();
        assert!(!v.holds);
        assert_eq!(v.witnesses, vec![Element::Edge(EdgeRef::new(0, 1).unwrap())]);
    }

    fn complete_bipartite_like_p3() -> Graph {
        Graph::from_edges(3, [(0, 1), (0, 2)]).unwrap()
    }

    #[test]
    fn chi_stability_fixtures() {
        assert_eq!(chi_critical_vertices(&complete_graph(3)).unwrap(), vec![0, 1, 2]);
        assert!(chi_critical_vertices(&cycle_graph(4)).unwrap().is_empty());
        assert_eq!(chi_critical_vertices(&union_of_k3_k2()).unwrap(), vec![0, 1, 2]);
        assert!(!cograph_chi_stability(&complete_graph(4)).unwrap().holds);
        assert!(cograph_chi_stability(&cycle_graph(4)).unwrap().holds);
        // two disjoint triangles: removing any vertex keeps chi at 3
        let two_triangles = disjoint_union(&complete_graph(3), &complete_graph(3));
        assert!(cograph_chi_stability(&two_triangles).unwrap().holds);
    }

    #[test]
    fn alpha_beta_stability_fixtures() {
        assert!(!cograph_alpha_beta_stability(&complete_graph(3), Alpha).unwrap().holds);
        assert!(cograph_alpha_beta_stability(&cycle_graph(4), Alpha).unwrap().holds);
        let two_edges = disjoint_union(&complete_graph(2), &complete_graph(2));
        assert!(!cograph_alpha_beta_stability(&two_edges, Beta).unwrap().holds);
    }

    #[test]
    fn unfrozenness_fixtures() {
        assert!(!cograph_unfrozenness(&Graph::new(3), Chi).unwrap().holds);
        for p in Parameter::ALL {
            assert!(cograph_unfrozenness(&complete_graph(5), p).unwrap().holds);
        }
        let two_edges = disjoint_union(&complete_graph(2), &complete_graph(2));
        assert!(cograph_unfrozenness(&two_edges, Chi).unwrap().holds);
        // a diagonal of the 4-cycle closes a triangle, so omega jumps
        assert!(!cograph_omega_unfrozen_edge(&cycle_graph(4), EdgeRef::new(0, 2).unwrap()).unwrap());
        // a cross edge between two disjoint edges leaves omega at 2
        assert!(cograph_omega_unfrozen_edge(&two_edges, EdgeRef::new(0, 2).unwrap()).unwrap());
        assert!(
            !cograph_omega_unfrozen_edge(&Graph::new(2), EdgeRef::new(0, 1).unwrap()).unwrap()
        );
        assert!(cograph_omega_unfrozen_edge(&cycle_graph(4), EdgeRef::new(0, 1).unwrap()).is_err());
    }

    #[test]
    fn complement_tree_matches_rebuild() {
        for seed in 0..30 {
            let g = crate::gen::random_cograph(10, 700 + seed);
            let t = build_cotree(&g).unwrap();
            let co = g.complement();
            if co.n() >= 1 {
                assert_eq!(complemented(&t), build_cotree(&co).unwrap());
            }
        }
    }

    #[test]
    fn decider_agrees_with_oracle_on_random_cographs() {
        let d = CographDecider;
        for seed in 0..25 {
            let g = crate::gen::random_cograph(1 + (seed as usize % 9), 1000 + seed);
            for p in Parameter::ALL {
                for q in Question::ELEMENT_QUESTIONS {
                    let fast = d.decide(&g, p, q).unwrap();
                    let slow = decide_by_definition(&g, p, q).unwrap();
                    assert!(fast.same_outcome(&slow), "{g:?} {p:?} {q:?}");
                    assert_eq!(fast.detail, slow.detail, "detail {g:?} {p:?} {q:?}");
                }
            }
        }
    }

    #[test]
    fn coexpr_round_trip() {
        for seed in 0..20 {
            let g = crate::gen::random_cograph(8, 1200 + seed);
            let t = build_cotree(&g).unwrap();
            assert_eq!(parse_coexpr(&to_coexpr(&t)).unwrap(), t);
        }
        assert!(parse_coexpr("(u v1)").is_err());
        assert!(parse_coexpr("(x v1 v2)").is_err());
        assert!(parse_coexpr("(u v1 v1)").is_err());
        assert!(parse_coexpr("(u v1 v2) v3").is_err());
        assert!(parse_coexpr("v0").is_err());
    }
}
