//! Matching-based exact parameters and deciders for bipartite graphs.
//!
//! A maximum matching (Hopcroft-Karp) gives the vertex cover number by
//! König's theorem and the independence number by Gallai's identity. The
//! chromatic and clique numbers are 2 as soon as an edge exists, which
//! collapses their stability questions to degree and reachability
//! characterizations. Unfrozenness of the cover number reduces, per nonedge,
//! either to a matching recomputation (when the grown graph is still
//! 2-colorable) or to membership of an endpoint in some minimum cover.

use crate::bitset::BitSet;
use crate::classify::bipartition;
use crate::error::{Error, Result};
use crate::graph::{EdgeRef, Graph, Parameter};
use crate::verdict::{Decider, Delta, Element, Sweep};

/// Maximum matching, minimum vertex cover, and maximum independent set of a
/// bipartite graph, produced together so that König's and Gallai's
/// identities are visible in the data: `|cover| = |matching|` and
/// `|cover| + |independent| = n`.
#[derive(Clone, Debug)]
pub struct MatchingCover {
    pub matching: Vec<EdgeRef>,
    pub cover: BitSet,
    pub independent: BitSet,
}

/// Computes a [`MatchingCover`] for `g` under the given bipartition.
pub fn max_matching(g: &Graph, parts: &(BitSet, BitSet)) -> Result<MatchingCover> {
    let (left, right) = parts;
    if left.count() + right.count() != g.n() || left.intersects(right) {
        return Err(Error::NotBipartite);
    }
    for e in g.edges() {
        let crosses = (left.contains(e.u()) && right.contains(e.v()))
            || (left.contains(e.v()) && right.contains(e.u()));
        if !crosses {
            return Err(Error::NotBipartite);
        }
    }

    let n = g.n();
    let mut pair = vec![usize::MAX; n];

    // Hopcroft-Karp: BFS layers from free left vertices, then DFS along the
    // layering, until no augmenting path remains.
    loop {
        let mut dist = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        for l in left.iter() {
            if pair[l] == usize::MAX {
                dist[l] = 0;
                queue.push_back(l);
            }
        }
        let mut reachable_free_right = false;
        while let Some(l) = queue.pop_front() {
            for r in g.neighbors(l).iter() {
                let l2 = pair[r];
                if l2 == usize::MAX {
                    reachable_free_right = true;
                } else if dist[l2] == usize::MAX {
                    dist[l2] = dist[l] + 1;
                    queue.push_back(l2);
                }
            }
        }
        if !reachable_free_right {
            break;
        }
        let mut advanced = false;
        let free_left: Vec<usize> = left.iter().filter(|&l| pair[l] == usize::MAX).collect();
        for l in free_left {
            advanced |= augment(g, l, &mut pair, &mut dist);
        }
        if !advanced {
            break;
        }
    }

    // König's construction: alternate from the free left vertices; the cover
    // is the unreached left plus the reached right.
    let mut reached = BitSet::new(n);
    let mut stack: Vec<usize> = left.iter().filter(|&l| pair[l] == usize::MAX).collect();
    for &l in &stack {
        reached.insert(l);
    }
    while let Some(l) = stack.pop() {
        for r in g.neighbors(l).iter() {
            if pair[l] == r || reached.contains(r) {
                continue; // from the left side, travel only non-matching edges
            }
            reached.insert(r);
            let l2 = pair[r];
            if l2 != usize::MAX && !reached.contains(l2) {
                reached.insert(l2);
                stack.push(l2);
            }
        }
    }
    let mut cover = left.difference(&reached);
    for r in right.iter() {
        if reached.contains(r) {
            cover.insert(r);
        }
    }
    let independent = BitSet::full(n).difference(&cover);

    let mut matching: Vec<EdgeRef> = left
        .iter()
        .filter(|&l| pair[l] != usize::MAX)
        .map(|l| EdgeRef::new(l, pair[l]).unwrap())
        .collect();
    matching.sort_unstable();

    let mc = MatchingCover { matching, cover, independent };
    debug_assert!(mc.check(g));
    Ok(mc)
}

fn augment(g: &Graph, l: usize, pair: &mut [usize], dist: &mut [usize]) -> bool {
    let d = std::mem::replace(&mut dist[l], usize::MAX);
    for r in g.neighbors(l).iter() {
        let l2 = pair[r];
        if l2 == usize::MAX || (dist[l2] == d + 1 && augment(g, l2, pair, dist)) {
            pair[l] = r;
            pair[r] = l;
            return true;
        }
    }
    false
}

impl MatchingCover {
    /// Verifies all structural invariants against `g`.
    pub fn check(&self, g: &Graph) -> bool {
        let mut touched = BitSet::new(g.n());
        for e in &self.matching {
            if !g.has_edge(e.u(), e.v()) || touched.contains(e.u()) || touched.contains(e.v()) {
                return false;
            }
            touched.insert(e.u());
            touched.insert(e.v());
        }
        let covers_all = g
            .edges()
            .iter()
            .all(|e| self.cover.contains(e.u()) || self.cover.contains(e.v()));
        let no_inner_edge = g
            .edges()
            .iter()
            .all(|e| !(self.independent.contains(e.u()) && self.independent.contains(e.v())));
        covers_all
            && no_inner_edge
            && self.cover.count() == self.matching.len()
            && self.cover.count() + self.independent.count() == g.n()
            && !self.cover.intersects(&self.independent)
    }
}

fn parts_of(g: &Graph) -> Result<(BitSet, BitSet)> {
    bipartition(g).ok_or(Error::NotBipartite)
}

/// Vertex cover number via matching.
pub fn beta_by_matching(g: &Graph) -> Result<usize> {
    Ok(max_matching(g, &parts_of(g)?)?.matching.len())
}

/// `(alpha, beta, omega, chi)` of a bipartite graph.
pub fn bipartite_params(g: &Graph) -> Result<(usize, usize, usize, usize)> {
    let beta = beta_by_matching(g)?;
    let chi_omega = if g.n() == 0 {
        0
    } else if g.m() == 0 {
        1
    } else {
        2
    };
    Ok((g.n() - beta, beta, chi_omega, chi_omega))
}

/// True iff some minimum vertex cover of `g` contains `u`, equivalently iff
/// deleting `u` lowers the cover number.
pub fn min_cover_through(g: &Graph, u: usize) -> Result<bool> {
    if u >= g.n() {
        return Err(Error::VertexOutOfRange { v: u, n: g.n() });
    }
    Ok(beta_by_matching(&g.delete_vertex(u)?)? == beta_by_matching(g)? - 1)
}

/// Whether adding the nonedge `e` leaves the cover number unchanged.
///
/// Three cases: if the grown graph is still 2-colorable (always true when
/// `e` crosses the bipartition), recompute by matching; otherwise the new
/// odd cycle forces the grown cover to stay put exactly when some minimum
/// cover of `g` already touches `e`.
pub fn beta_unfrozen_edge(g: &Graph, e: EdgeRef) -> Result<bool> {
    let grown = g.add_edge(e)?;
    if bipartition(&grown).is_some() {
        Ok(beta_by_matching(&grown)? == beta_by_matching(g)?)
    } else {
        Ok(min_cover_through(g, e.u())? || min_cover_through(g, e.v())?)
    }
}

/// The decider for bipartite graphs.
#[derive(Clone, Copy, Debug, Default)]
pub struct BipartiteDecider;

impl Decider for BipartiteDecider {
    fn name(&self) -> &'static str {
        "bipartite"
    }

    fn edge_sweep(&self, g: &Graph, p: Parameter) -> Result<Sweep> {
        parts_of(g)?;
        match p {
            Parameter::Chi | Parameter::Omega => {
                // With at least two edges, one deletion keeps an edge around,
                // so the value stays 2; a lone edge drops it to 1.
                let before = if g.m() == 0 { 1 } else { 2 };
                let after_single = if g.n() >= 2 { 1 } else { 0 };
                let entries = g
                    .edges()
                    .into_iter()
                    .map(|e| Delta {
                        element: Element::Edge(e),
                        before,
                        after: if g.m() >= 2 { 2 } else { after_single },
                    })
                    .collect();
                Ok(Sweep::new(entries))
            }
            Parameter::Alpha | Parameter::Beta => {
                let beta = beta_by_matching(g)?;
                let entries = g
                    .edges()
                    .into_iter()
                    .map(|e| {
                        let beta_after = beta_by_matching(&g.delete_edge(e).unwrap())?;
                        Ok(delta_for(p, g.n(), beta, beta_after, Element::Edge(e)))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Sweep::new(entries))
            }
        }
    }

    fn vertex_sweep(&self, g: &Graph, p: Parameter) -> Result<Sweep> {
        parts_of(g)?;
        match p {
            Parameter::Chi | Parameter::Omega => {
                // A vertex is critical exactly when it carries every edge;
                // on an edgeless graph, only a lone vertex is critical.
                let before = match (g.n(), g.m()) {
                    (0, _) => 0,
                    (_, 0) => 1,
                    _ => 2,
                };
                let entries = (0..g.n())
                    .map(|v| {
                        let after = if g.m() == 0 {
                            usize::from(g.n() >= 2)
                        } else if g.degree(v) == g.m() {
                            1
                        } else {
                            2
                        };
                        Delta { element: Element::Vertex(v), before, after }
                    })
                    .collect();
                Ok(Sweep::new(entries))
            }
            Parameter::Alpha | Parameter::Beta => {
                let beta = beta_by_matching(g)?;
                let entries = (0..g.n())
                    .map(|v| {
                        let beta_after = beta_by_matching(&g.delete_vertex(v).unwrap())?;
                        Ok(delta_for(p, g.n() - 1, beta, beta_after, Element::Vertex(v)))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Sweep::new(entries))
            }
        }
    }

    fn nonedge_sweep(&self, g: &Graph, p: Parameter) -> Result<Sweep> {
        let parts = parts_of(g)?;
        match p {
            Parameter::Chi | Parameter::Omega => {
                Ok(chi_omega_growth_sweep(g, &parts, p == Parameter::Chi))
            }
            Parameter::Alpha | Parameter::Beta => {
                let beta = beta_by_matching(g)?;
                let entries = g
                    .nonedges()
                    .into_iter()
                    .map(|e| {
                        let beta_after = if beta_unfrozen_edge(g, e)? { beta } else { beta + 1 };
                        Ok(delta_for(p, g.n(), beta, beta_after, Element::Edge(e)))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Sweep::new(entries))
            }
        }
    }
}

/// Alpha and beta always move together here (the vertex count passed in is
/// the one after the operation, so Gallai's identity fixes alpha).
fn delta_for(p: Parameter, n_after: usize, beta: usize, beta_after: usize, el: Element) -> Delta {
    match p {
        Parameter::Beta => Delta { element: el, before: beta, after: beta_after },
        Parameter::Alpha => Delta {
            element: el,
            // before refers to the unedited graph in all sweeps
            before: match el {
                Element::Vertex(_) => n_after + 1 - beta,
                Element::Edge(_) => n_after - beta,
            },
            after: n_after - beta_after,
        },
        _ => unreachable!(),
    }
}

/// Per-nonedge growth of chi or omega in a graph with a bipartition: adding
/// `{u, v}` raises omega iff the endpoints share a neighbor (a triangle
/// appears), and raises chi iff they lie on the same side of the same
/// component (an odd cycle appears). Edgeless graphs instead jump from 1 to
/// 2 on any addition.
fn chi_omega_growth_sweep(g: &Graph, parts: &(BitSet, BitSet), chi: bool) -> Sweep {
    let before = match (g.n(), g.m()) {
        (0, _) => 0,
        (_, 0) => 1,
        _ => 2,
    };
    let mut comp = vec![usize::MAX; g.n()];
    for (i, c) in g.connected_components().iter().enumerate() {
        for &v in c {
            comp[v] = i;
        }
    }
    let entries = g
        .nonedges()
        .into_iter()
        .map(|e| {
            let (u, v) = e.endpoints();
            let after = if g.m() == 0 {
                2
            } else if chi {
                let same_side = parts.0.contains(u) == parts.0.contains(v);
                if comp[u] == comp[v] && same_side {
                    3
                } else {
                    2
                }
            } else if g.neighbors(u).intersects(g.neighbors(v)) {
                3
            } else {
                2
            };
            Delta { element: Element::Edge(e), before, after }
        })
        .collect();
    Sweep::new(entries)
}
