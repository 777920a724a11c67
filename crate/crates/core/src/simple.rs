//! Constant-time deciders for empty graphs, complete graphs, and paths.
//!
//! All three families admit closed forms for every parameter before and
//! after any single edit, so the sweeps are filled in directly. The path
//! rules rest on how a path splits: deleting the edge after position `i`
//! leaves two paths of `i` and `n-i` vertices, and the floor/ceil formulas
//! `beta = n/2` rounded down, `alpha = n/2` rounded up do the rest. On an
//! odd path the minimum cover consists exactly of the even positions, so a
//! nonedge keeps the cover number iff it touches an even position; on an
//! even path the two alternating covers between them touch every vertex.

use crate::error::{Error, Result};
use crate::graph::{EdgeRef, Graph, Parameter, Question};
use crate::verdict::{Decider, Delta, Element, Sweep, Verdict};

fn path_alpha(k: usize) -> usize {
    k.div_ceil(2)
}

fn path_beta(k: usize) -> usize {
    k / 2
}

fn path_chi_omega(k: usize) -> usize {
    k.min(2)
}

// ---------------------------------------------------------------------------
// Empty graphs
// ---------------------------------------------------------------------------

/// Decider for graphs without edges, parametrized only by the vertex count.
#[derive(Clone, Copy, Debug, Default)]
pub struct EmptyDecider;

fn empty_vertex_sweep(n: usize, p: Parameter) -> Sweep {
    let entries = (0..n)
        .map(|v| {
            let (before, after) = match p {
                Parameter::Alpha => (n, n - 1),
                Parameter::Beta => (0, 0),
                Parameter::Chi | Parameter::Omega => (1, usize::from(n >= 2)),
            };
            Delta { element: Element::Vertex(v), before, after }
        })
        .collect();
    Sweep::new(entries)
}

fn empty_nonedge_sweep(n: usize, p: Parameter) -> Sweep {
    // Any added edge changes all four parameters of an edgeless graph.
    let mut entries = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            let (before, after) = match p {
                Parameter::Alpha => (n, n - 1),
                Parameter::Beta => (0, 1),
                Parameter::Chi | Parameter::Omega => (1, 2),
            };
            entries.push(Delta {
                element: Element::Edge(EdgeRef::new(u, v).unwrap()),
                before,
                after,
            });
        }
    }
    Sweep::new(entries)
}

impl Decider for EmptyDecider {
    fn name(&self) -> &'static str {
        "empty"
    }

    fn edge_sweep(&self, g: &Graph, _p: Parameter) -> Result<Sweep> {
        require(g.m() == 0, Error::NoEngine("empty decider on a graph with edges".into()))?;
        Ok(Sweep::default())
    }

    fn vertex_sweep(&self, g: &Graph, p: Parameter) -> Result<Sweep> {
        require(g.m() == 0, Error::NoEngine("empty decider on a graph with edges".into()))?;
        Ok(empty_vertex_sweep(g.n(), p))
    }

    fn nonedge_sweep(&self, g: &Graph, p: Parameter) -> Result<Sweep> {
        require(g.m() == 0, Error::NoEngine("empty decider on a graph with edges".into()))?;
        Ok(empty_nonedge_sweep(g.n(), p))
    }
}

/// Closed-form answer for the edgeless graph on `n` vertices.
pub fn empty_decide(n: usize, p: Parameter, q: Question) -> Verdict {
    EmptyDecider.decide(&Graph::new(n), p, q).unwrap()
}

// ---------------------------------------------------------------------------
// Complete graphs
// ---------------------------------------------------------------------------

/// Decider for complete graphs.
#[derive(Clone, Copy, Debug, Default)]
pub struct CompleteDecider;

fn complete_edge_sweep(n: usize, p: Parameter) -> Sweep {
    // Every edge is critical for every parameter.
    let mut entries = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            let (before, after) = match p {
                Parameter::Alpha => (1, 2),
                Parameter::Beta => (n - 1, n - 2),
                Parameter::Chi | Parameter::Omega => (n, n - 1),
            };
            entries.push(Delta {
                element: Element::Edge(EdgeRef::new(u, v).unwrap()),
                before,
                after,
            });
        }
    }
    Sweep::new(entries)
}

fn complete_vertex_sweep(n: usize, p: Parameter) -> Sweep {
    let entries = (0..n)
        .map(|v| {
            let (before, after) = match p {
                // removing a vertex from a clique of size >= 2 leaves the
                // independence number at 1, but drops everything else
                Parameter::Alpha => (1, if n == 1 { 0 } else { 1 }),
                Parameter::Beta => (n - 1, n.saturating_sub(2)),
                Parameter::Chi | Parameter::Omega => (n, n - 1),
            };
            Delta { element: Element::Vertex(v), before, after }
        })
        .collect();
    Sweep::new(entries)
}

impl Decider for CompleteDecider {
    fn name(&self) -> &'static str {
        "complete"
    }

    fn edge_sweep(&self, g: &Graph, p: Parameter) -> Result<Sweep> {
        require_complete(g)?;
        Ok(complete_edge_sweep(g.n(), p))
    }

    fn vertex_sweep(&self, g: &Graph, p: Parameter) -> Result<Sweep> {
        require_complete(g)?;
        Ok(complete_vertex_sweep(g.n(), p))
    }

    fn nonedge_sweep(&self, g: &Graph, _p: Parameter) -> Result<Sweep> {
        require_complete(g)?;
        Ok(Sweep::default())
    }
}

fn require_complete(g: &Graph) -> Result<()> {
    require(
        g.m() == g.n() * g.n().saturating_sub(1) / 2,
        Error::NoEngine("complete decider on an incomplete graph".into()),
    )
}

/// Closed-form answer for the complete graph on `n` vertices.
pub fn complete_decide(n: usize, p: Parameter, q: Question) -> Verdict {
    match q {
        Question::Stability => complete_edge_sweep(n, p).all_preserve(),
        Question::Criticality => complete_edge_sweep(n, p).all_change(),
        Question::VertexStability => complete_vertex_sweep(n, p).all_preserve(),
        Question::VertexCriticality => complete_vertex_sweep(n, p).all_change(),
        // no nonedges: both poles hold on an empty quantification domain
        Question::Unfrozenness | Question::Frozenness => Verdict::trivially(true),
        Question::VertexUnfrozenness => {
            crate::oracle::vertex_unfrozenness_constant(&Graph::new(n), p)
        }
        Question::VertexFrozenness => {
            crate::oracle::vertex_frozenness_constant(&Graph::new(n), p)
        }
    }
}

// ---------------------------------------------------------------------------
// Paths
// ---------------------------------------------------------------------------

/// Per-element sweeps for the canonical path on positions `0..n`, with
/// position `k` the `(k+1)`-th vertex along the path.
fn path_edge_sweep(n: usize, p: Parameter) -> Sweep {
    // Edge at 1-based position i joins positions i-1 and i (0-based) and
    // splits the path into P_i and P_{n-i}.
    let entries = (1..n)
        .map(|i| {
            let element = Element::Edge(EdgeRef::new(i - 1, i).unwrap());
            let (before, after) = match p {
                Parameter::Alpha => (path_alpha(n), path_alpha(i) + path_alpha(n - i)),
                Parameter::Beta => (path_beta(n), path_beta(i) + path_beta(n - i)),
                Parameter::Chi | Parameter::Omega => (
                    path_chi_omega(n),
                    path_chi_omega(i).max(path_chi_omega(n - i)),
                ),
            };
            Delta { element, before, after }
        })
        .collect();
    Sweep::new(entries)
}

fn path_vertex_sweep(n: usize, p: Parameter) -> Sweep {
    // Removing the vertex at 1-based position j leaves P_{j-1} and P_{n-j}.
    let entries = (1..=n)
        .map(|j| {
            let element = Element::Vertex(j - 1);
            let (before, after) = match p {
                Parameter::Alpha => (path_alpha(n), path_alpha(j - 1) + path_alpha(n - j)),
                Parameter::Beta => (path_beta(n), path_beta(j - 1) + path_beta(n - j)),
                Parameter::Chi | Parameter::Omega => (
                    path_chi_omega(n),
                    path_chi_omega(j - 1).max(path_chi_omega(n - j)),
                ),
            };
            Delta { element, before, after }
        })
        .collect();
    Sweep::new(entries)
}

fn path_nonedge_sweep(n: usize, p: Parameter) -> Sweep {
    let mut entries = Vec::new();
    // 1-based positions i < j with j >= i + 2; adding {i, j} closes a cycle
    // of length j - i + 1.
    for i in 1..=n {
        for j in (i + 2)..=n {
            let element = Element::Edge(EdgeRef::new(i - 1, j - 1).unwrap());
            let (before, after) = match p {
                Parameter::Omega => (2, if j == i + 2 { 3 } else { 2 }),
                Parameter::Chi => (2, if (j - i) % 2 == 0 { 3 } else { 2 }),
                Parameter::Alpha | Parameter::Beta => {
                    let unfrozen = if n % 2 == 0 {
                        true
                    } else {
                        i % 2 == 0 || j % 2 == 0
                    };
                    match p {
                        Parameter::Beta => {
                            (path_beta(n), path_beta(n) + usize::from(!unfrozen))
                        }
                        _ => (path_alpha(n), path_alpha(n) - usize::from(!unfrozen)),
                    }
                }
            };
            entries.push(Delta { element, before, after });
        }
    }
    Sweep::new(entries)
}

/// Closed-form answer for the canonical path on `n` vertices; witnesses use
/// path positions.
pub fn path_decide(n: usize, p: Parameter, q: Question) -> Verdict {
    match q {
        Question::Stability => path_edge_sweep(n, p).all_preserve(),
        Question::Criticality => path_edge_sweep(n, p).all_change(),
        Question::VertexStability => path_vertex_sweep(n, p).all_preserve(),
        Question::VertexCriticality => path_vertex_sweep(n, p).all_change(),
        Question::Unfrozenness => path_nonedge_sweep(n, p).all_preserve(),
        Question::Frozenness => path_nonedge_sweep(n, p).all_change(),
        Question::VertexUnfrozenness => {
            crate::oracle::vertex_unfrozenness_constant(&crate::graph::path_graph(n), p)
        }
        Question::VertexFrozenness => {
            crate::oracle::vertex_frozenness_constant(&crate::graph::path_graph(n), p)
        }
    }
}

/// Decider for graphs that form a path under some vertex numbering; the
/// closed-form sweeps are computed in position space and witnesses are
/// mapped back to the input numbering.
#[derive(Clone, Copy, Debug, Default)]
pub struct PathDecider;

/// The vertices of `g` in path order, starting from the lower-numbered
/// endpoint, or an error when `g` is not a path.
pub fn path_order(g: &Graph) -> Result<Vec<usize>> {
    let n = g.n();
    if n == 0 {
        return Ok(Vec::new());
    }
    if n == 1 {
        return Ok(vec![0]);
    }
    if g.m() != n - 1 || !g.is_connected() {
        return Err(Error::NotPath);
    }
    let mut ends = (0..n).filter(|&v| g.degree(v) == 1);
    let start = match (ends.next(), (0..n).all(|v| g.degree(v) <= 2)) {
        (Some(s), true) => s,
        _ => return Err(Error::NotPath),
    };
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    for _ in 1..n {
        let next = g
            .neighbors(cur)
            .iter()
            .find(|&w| w != prev)
            .ok_or(Error::NotPath)?;
        order.push(next);
        prev = cur;
        cur = next;
    }
    Ok(order)
}

fn map_sweep(sweep: Sweep, order: &[usize]) -> Sweep {
    let entries = sweep
        .entries
        .into_iter()
        .map(|d| Delta {
            element: match d.element {
                Element::Vertex(pos) => Element::Vertex(order[pos]),
                Element::Edge(e) => {
                    Element::Edge(EdgeRef::new(order[e.u()], order[e.v()]).unwrap())
                }
            },
            ..d
        })
        .collect();
    Sweep::new(entries)
}

impl Decider for PathDecider {
    fn name(&self) -> &'static str {
        "path"
    }

    fn edge_sweep(&self, g: &Graph, p: Parameter) -> Result<Sweep> {
        let order = path_order(g)?;
        Ok(map_sweep(path_edge_sweep(g.n(), p), &order))
    }

    fn vertex_sweep(&self, g: &Graph, p: Parameter) -> Result<Sweep> {
        let order = path_order(g)?;
        Ok(map_sweep(path_vertex_sweep(g.n(), p), &order))
    }

    fn nonedge_sweep(&self, g: &Graph, p: Parameter) -> Result<Sweep> {
        let order = path_order(g)?;
        Ok(map_sweep(path_nonedge_sweep(g.n(), p), &order))
    }
}

fn require(cond: bool, err: Error) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(err)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::oracle::decide_by_definition;
    use Parameter::*;
    use Question::*;

    #[test]
    fn empty_examples() {
        assert!(empty_decide(5, Beta, VertexStability).holds);
        assert!(!empty_decide(1, Alpha, VertexStability).holds);
        assert!(!empty_decide(3, Chi, Unfrozenness).holds);
        assert!(empty_decide(1, Chi, Unfrozenness).holds);
        assert!(empty_decide(0, Chi, VertexStability).holds);
        assert!(empty_decide(2, Omega, VertexStability).holds);
        for p in Parameter::ALL {
            assert!(empty_decide(7, p, Stability).holds);
            // adding any edge to a large empty graph moves every parameter
            assert!(!empty_decide(7, p, Unfrozenness).holds);
            assert!(empty_decide(7, p, Frozenness).holds);
            assert!(empty_decide(1, p, Unfrozenness).holds);
        }
    }

    #[test]
    fn complete_examples() {
        let v = complete_decide(4, Chi, Stability);
        assert!(!v.holds);
        assert_eq!(v.witnesses.len(), 6);
        assert!(complete_decide(3, Alpha, VertexStability).holds);
        assert!(complete_decide(7, Omega, Unfrozenness).holds);
        assert!(complete_decide(4, Chi, VertexCriticality).holds);
        assert!(!complete_decide(1, Alpha, VertexStability).holds);
        assert!(complete_decide(1, Beta, VertexStability).holds);
        for p in Parameter::ALL {
            assert!(complete_decide(1, p, Stability).holds);
            assert!(!complete_decide(2, p, Stability).holds);
            assert!(complete_decide(6, p, Criticality).holds);
        }
    }

    #[test]
    fn path_table_spot_checks() {
        assert!(!path_decide(4, Alpha, Stability).holds);
        assert!(path_decide(5, Beta, Stability).holds);
        assert!(path_decide(6, Beta, Unfrozenness).holds);
        assert!(!path_decide(5, Beta, Unfrozenness).holds);
        assert!(path_decide(3, Chi, Stability).holds);
        assert!(!path_decide(3, Chi, VertexStability).holds);
        assert!(path_decide(3, Omega, Frozenness).holds);
        assert!(path_decide(2, Alpha, VertexStability).holds);
        assert!(!path_decide(2, Beta, VertexStability).holds);
        for n in [4, 5, 6, 7] {
            assert!(path_decide(n, Chi, Stability).holds);
            assert!(path_decide(n, Omega, VertexStability).holds);
            assert!(!path_decide(n, Beta, VertexStability).holds);
            assert!(!path_decide(n, Chi, Unfrozenness).holds);
            assert!(!path_decide(n, Omega, Unfrozenness).holds);
            assert_eq!(path_decide(n, Alpha, Stability).holds, n % 2 == 1);
            assert_eq!(path_decide(n, Alpha, VertexStability).holds, n % 2 == 0);
            assert_eq!(path_decide(n, Alpha, Unfrozenness).holds, n % 2 == 0);
        }
    }

    #[test]
    fn closed_forms_match_oracle_up_to_ten() {
        for n in 0..=10 {
            for p in Parameter::ALL {
                for q in Question::ELEMENT_QUESTIONS {
                    let path = path_decide(n, p, q);
                    let slow =
                        decide_by_definition(&crate::graph::path_graph(n), p, q).unwrap();
                    assert!(path.same_outcome(&slow), "path n={n} {p:?} {q:?}");
                    assert_eq!(path.detail, slow.detail, "path detail n={n} {p:?} {q:?}");

                    let empty = empty_decide(n, p, q);
                    let slow = decide_by_definition(&Graph::new(n), p, q).unwrap();
                    assert!(empty.same_outcome(&slow), "empty n={n} {p:?} {q:?}");
                    assert_eq!(empty.detail, slow.detail, "empty detail n={n} {p:?} {q:?}");

                    let complete = complete_decide(n, p, q);
                    let slow =
                        decide_by_definition(&crate::graph::complete_graph(n), p, q).unwrap();
                    assert!(complete.same_outcome(&slow), "complete n={n} {p:?} {q:?}");
                }
            }
        }
    }

    #[test]
    fn path_decider_maps_witnesses_to_input_numbering() {
        // the path 0 - 2 - 1: center is vertex 2
        let g = Graph::from_edges(3, [(0, 2), (1, 2)]).unwrap();
        let v = PathDecider.decide(&g, Beta, VertexStability).unwrap();
        assert!(!v.holds);
        assert_eq!(v.witnesses, vec![Element::Vertex(2)]);
        let slow = decide_by_definition(&g, Beta, VertexStability).unwrap();
        assert!(v.same_outcome(&slow));
    }

    #[test]
    fn path_order_rejects_non_paths() {
        assert!(path_order(&crate::graph::cycle_graph(4)).is_err());
        assert!(path_order(&Graph::new(3)).is_err());
        assert!(path_order(&crate::graph::complete_bipartite_graph(1, 3)).is_err());
    }
}
