//! Exact (exponential-time) parameter computation and the definitional
//! decider built on it: the ground truth every fast decider is tested
//! against.
//!
//! The independence number is computed by branch and bound over adjacency
//! bitsets; everything else derives from it — the vertex cover number via
//! Gallai's identity `n = alpha + beta`, the clique number via the complement
//! — except for the chromatic number, which is a backtracking search seeded
//! with the clique lower bound and a greedy upper bound. Size caps keep runs
//! bounded and reproducible.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, Parameter, Question};
use crate::verdict::{
    edge_deletions, nonedge_additions, sweep_by_recompute, vertex_deletions, Decider, Sweep,
    Verdict,
};

/// Per-parameter input size caps for the exact routines.
#[derive(Clone, Copy, Debug)]
pub struct OracleCaps {
    /// Cap for the chromatic-number search.
    pub chi: usize,
    /// Cap for the independence/cover/clique routines.
    pub others: usize,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps { chi: 16, others: 24 }
    }
}

impl OracleCaps {
    pub fn uniform(cap: usize) -> Self {
        OracleCaps { chi: cap, others: cap }
    }

    fn check(&self, g: &Graph, p: Parameter) -> Result<()> {
        let (cap, name) = match p {
            Parameter::Chi => (self.chi, "chi"),
            Parameter::Alpha => (self.others, "alpha"),
            Parameter::Beta => (self.others, "beta"),
            Parameter::Omega => (self.others, "omega"),
        };
        if g.n() > cap {
            Err(Error::CapExceeded { n: g.n(), cap, param: name })
        } else {
            Ok(())
        }
    }
}

/// Maximum independent set size by branch and bound.
pub fn alpha_exact(g: &Graph, caps: &OracleCaps) -> Result<usize> {
    caps.check(g, Parameter::Alpha)?;
    let mut best = 0;
    mis_branch(g, BitSet::full(g.n()), 0, &mut best);
    Ok(best)
}

fn mis_branch(g: &Graph, cand: BitSet, cur: usize, best: &mut usize) {
    let count = cand.count();
    if cur + count <= *best {
        return;
    }
    if count == 0 {
        *best = cur;
        return;
    }
    // Find the candidate of maximum degree within the candidate set.
    let (mut pick, mut maxdeg) = (usize::MAX, 0);
    let mut edges_inside = 0;
    for v in cand.iter() {
        let d = g.neighbors(v).intersection(&cand).count();
        edges_inside += d;
        if pick == usize::MAX || d > maxdeg {
            pick = v;
            maxdeg = d;
        }
    }
    if maxdeg <= 1 {
        // Remaining graph is a matching plus isolated vertices: drop one
        // endpoint per edge.
        *best = (*best).max(cur + count - edges_inside / 2);
        return;
    }
    // Branch: take `pick` (discarding its neighborhood) or discard it.
    let mut without_closed = cand.difference(g.neighbors(pick));
    without_closed.remove(pick);
    mis_branch(g, without_closed, cur + 1, best);
    let mut without = cand;
    without.remove(pick);
    mis_branch(g, without, cur, best);
}

/// Minimum vertex cover size, via Gallai's identity from `alpha_exact`.
pub fn beta_exact(g: &Graph, caps: &OracleCaps) -> Result<usize> {
    Ok(g.n() - alpha_exact(g, caps)?)
}

/// Maximum clique size: independence number of the complement.
pub fn omega_exact(g: &Graph, caps: &OracleCaps) -> Result<usize> {
    caps.check(g, Parameter::Omega)?;
    alpha_exact(&g.complement(), caps)
}

/// Chromatic number by backtracking, bounded below by the clique number and
/// above by a greedy coloring.
pub fn chi_exact(g: &Graph, caps: &OracleCaps) -> Result<usize> {
    caps.check(g, Parameter::Chi)?;
    if g.n() == 0 {
        return Ok(0);
    }
    // Vertices in decreasing degree order; helps both bounds and the search.
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));

    let lower = alpha_exact(&g.complement(), &OracleCaps::uniform(g.n()))?.max(1);
    let upper = greedy_coloring_bound(g, &order);
    for k in lower..upper {
        if colorable(g, &order, k) {
            return Ok(k);
        }
    }
    Ok(upper)
}

fn greedy_coloring_bound(g: &Graph, order: &[usize]) -> usize {
    let mut color = vec![usize::MAX; g.n()];
    let mut used = 0;
    for &v in order {
        let mut c = 0;
        while g.neighbors(v).iter().any(|w| color[w] == c) {
            c += 1;
        }
        color[v] = c;
        used = used.max(c + 1);
    }
    used
}

fn colorable(g: &Graph, order: &[usize], k: usize) -> bool {
    let mut color = vec![usize::MAX; g.n()];
    color_rec(g, order, k, 0, 0, &mut color)
}

fn color_rec(
    g: &Graph,
    order: &[usize],
    k: usize,
    idx: usize,
    max_used: usize,
    color: &mut [usize],
) -> bool {
    if idx == order.len() {
        return true;
    }
    let v = order[idx];
    // Trying colors beyond max_used + 1 only relabels color classes.
    for c in 0..k.min(max_used + 1) {
        if g.neighbors(v).iter().all(|w| color[w] != c) {
            color[v] = c;
            if color_rec(g, order, k, idx + 1, max_used.max(c + 1), color) {
                return true;
            }
            color[v] = usize::MAX;
        }
    }
    false
}

/// One exact parameter, dispatched.
pub fn param_exact(g: &Graph, p: Parameter, caps: &OracleCaps) -> Result<usize> {
    match p {
        Parameter::Alpha => alpha_exact(g, caps),
        Parameter::Beta => beta_exact(g, caps),
        Parameter::Omega => omega_exact(g, caps),
        Parameter::Chi => chi_exact(g, caps),
    }
}

/// No graph is alpha-, omega-, or chi-vertex-unfrozen: attaching a suitable
/// new vertex always changes those parameters. Only the null graph is
/// beta-vertex-unfrozen.
pub fn vertex_unfrozenness_constant(g: &Graph, p: Parameter) -> Verdict {
    let holds = match p {
        Parameter::Beta => g.n() == 0,
        _ => false,
    };
    Verdict::trivially(holds)
}

/// The dual constants: every vertex addition to the null graph changes
/// alpha, omega, and chi (each jumps from 0 to 1), while an isolated addition
/// never changes beta and, for nonempty graphs, a universal or isolated
/// addition preserves the other three.
pub fn vertex_frozenness_constant(g: &Graph, p: Parameter) -> Verdict {
    let holds = match p {
        Parameter::Beta => false,
        _ => g.n() == 0,
    };
    Verdict::trivially(holds)
}

/// The definitional decider: recompute the parameter after every single
/// deletion or addition and compare.
#[derive(Clone, Copy, Debug, Default)]
pub struct OracleDecider {
    pub caps: OracleCaps,
}

impl OracleDecider {
    pub fn new(caps: OracleCaps) -> Self {
        OracleDecider { caps }
    }
}

impl Decider for OracleDecider {
    fn name(&self) -> &'static str {
        "oracle"
    }

    fn edge_sweep(&self, g: &Graph, p: Parameter) -> Result<Sweep> {
        let base = param_exact(g, p, &self.caps)?;
        sweep_by_recompute(base, edge_deletions(g), |h| param_exact(h, p, &self.caps))
    }

    fn vertex_sweep(&self, g: &Graph, p: Parameter) -> Result<Sweep> {
        let base = param_exact(g, p, &self.caps)?;
        sweep_by_recompute(base, vertex_deletions(g), |h| param_exact(h, p, &self.caps))
    }

    fn nonedge_sweep(&self, g: &Graph, p: Parameter) -> Result<Sweep> {
        let base = param_exact(g, p, &self.caps)?;
        sweep_by_recompute(base, nonedge_additions(g), |h| param_exact(h, p, &self.caps))
    }
}

/// Convenience entry point with default caps.
pub fn decide_by_definition(g: &Graph, p: Parameter, q: Question) -> Result<Verdict> {
    OracleDecider::default().decide(g, p, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, path_graph, Graph};

    fn caps() -> OracleCaps {
        OracleCaps::default()
    }

    /// Independent reference: maximum independent set by subset enumeration.
    fn alpha_brute(g: &Graph) -> usize {
        let n = g.n();
        assert!(n <= 16);
        let mut best = 0;
        for mask in 0u32..(1 << n) {
            let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let independent = verts
                .iter()
                .enumerate()
                .all(|(i, &u)| verts[i + 1..].iter().all(|&v| !g.has_edge(u, v)));
            if independent {
                best = best.max(verts.len());
            }
        }
        best
    }

    #[test]
    fn alpha_of_families() {
        for n in 1..8 {
            assert_eq!(alpha_exact(&complete_graph(n), &caps()).unwrap(), 1);
        }
        assert_eq!(alpha_exact(&path_graph(7), &caps()).unwrap(), 4);
        assert_eq!(alpha_exact(&cycle_graph(5), &caps()).unwrap(), 2);
        assert_eq!(alpha_exact(&Graph::new(0), &caps()).unwrap(), 0);
    }

    #[test]
    fn alpha_matches_brute_force_on_random_graphs() {
        let mut graphs = crate::gen::test_support::random_graphs(9, 0.4, 60, 0xA1);
        graphs.extend(crate::gen::test_support::random_graphs(6, 0.7, 40, 0xA2));
        for g in graphs {
            assert_eq!(alpha_exact(&g, &caps()).unwrap(), alpha_brute(&g), "{g:?}");
        }
    }

    #[test]
    fn beta_of_families() {
        for n in 1..8 {
            assert_eq!(beta_exact(&complete_graph(n), &caps()).unwrap(), n - 1);
        }
        assert_eq!(beta_exact(&path_graph(10), &caps()).unwrap(), 5);
        assert_eq!(beta_exact(&Graph::new(6), &caps()).unwrap(), 0);
    }

    #[test]
    fn omega_of_families() {
        assert_eq!(omega_exact(&complete_graph(5), &caps()).unwrap(), 5);
        assert_eq!(omega_exact(&path_graph(4), &caps()).unwrap(), 2);
        assert_eq!(omega_exact(&Graph::new(3), &caps()).unwrap(), 1);
    }

    #[test]
    fn chi_of_families() {
        for n in 0..8 {
            assert_eq!(chi_exact(&complete_graph(n), &caps()).unwrap(), n);
        }
        assert_eq!(chi_exact(&path_graph(2), &caps()).unwrap(), 2);
        assert_eq!(chi_exact(&path_graph(1), &caps()).unwrap(), 1);
        // An odd cycle is not 2-colorable; exhaustive check, then freeze 3.
        let c5 = cycle_graph(5);
        for mask in 0u32..(1 << 5) {
            let bad = (0..5).any(|i| {
                let j = (i + 1) % 5;
                (mask >> i & 1) == (mask >> j & 1)
            });
            assert!(bad, "C5 admitted a 2-coloring");
        }
        assert_eq!(chi_exact(&c5, &caps()).unwrap(), 3);
    }

    #[test]
    fn caps_are_enforced() {
        let g = Graph::new(17);
        assert!(matches!(
            chi_exact(&g, &caps()),
            Err(Error::CapExceeded { param: "chi", .. })
        ));
        assert!(alpha_exact(&g, &caps()).is_ok());
        assert!(alpha_exact(&Graph::new(25), &caps()).is_err());
    }

    #[test]
    fn definitional_verdicts() {
        // Every edge of a complete graph is critical for every parameter.
        let v = decide_by_definition(&complete_graph(4), Parameter::Omega, Question::Stability)
            .unwrap();
        assert!(!v.holds);
        assert_eq!(v.witnesses.len(), 6);

        let v = decide_by_definition(&Graph::new(5), Parameter::Beta, Question::VertexStability)
            .unwrap();
        assert!(v.holds);

        let v = decide_by_definition(&path_graph(6), Parameter::Beta, Question::Unfrozenness)
            .unwrap();
        assert!(v.holds);
    }

    #[test]
    fn vertex_addition_constants() {
        use Parameter::*;
        let null = Graph::new(0);
        assert!(!vertex_unfrozenness_constant(&path_graph(5), Alpha).holds);
        assert!(vertex_unfrozenness_constant(&null, Beta).holds);
        assert!(!vertex_unfrozenness_constant(&Graph::new(1), Beta).holds);
        for p in [Alpha, Omega, Chi] {
            assert!(vertex_frozenness_constant(&null, p).holds);
            assert!(!vertex_frozenness_constant(&path_graph(3), p).holds);
        }
        assert!(!vertex_frozenness_constant(&null, Beta).holds);
    }

    #[test]
    fn dual_questions_use_the_same_sweep() {
        // On K4 every edge is critical, so criticality holds and stability
        // fails with all edges as witnesses.
        let g = complete_graph(4);
        let crit = decide_by_definition(&g, Parameter::Chi, Question::Criticality).unwrap();
        assert!(crit.holds && crit.witnesses.is_empty());
        let stab = decide_by_definition(&g, Parameter::Chi, Question::Stability).unwrap();
        assert_eq!(stab.witnesses.len(), 6);
    }
}
