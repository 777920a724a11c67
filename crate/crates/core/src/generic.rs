//! Class-generic deciders: recompute-under-closure sweeps parametrized by a
//! tractable evaluator, the complement dualities between stability and
//! unfrozenness, and the perfect-graph cross-check.

use crate::error::{Error, Result};
use crate::graph::{Graph, Parameter};
use crate::verdict::{
    edge_deletions, nonedge_additions, sweep_by_recompute, vertex_deletions, Element, Sweep,
    Verdict,
};

/// A graph parameter evaluator valid on some class closed under the edits a
/// sweep performs, with an optional input size cap. Evaluators are plain
/// shared functions, safe to use from concurrent sweeps.
pub struct ParamEvaluator<'a> {
    pub name: &'static str,
    pub cap: Option<usize>,
    eval: Box<dyn Fn(&Graph) -> Result<usize> + Sync + 'a>,
}

impl<'a> ParamEvaluator<'a> {
    pub fn new<F>(name: &'static str, cap: Option<usize>, eval: F) -> Self
    where
        F: Fn(&Graph) -> Result<usize> + Sync + 'a,
    {
        ParamEvaluator { name, cap, eval: Box::new(eval) }
    }

    pub fn eval(&self, g: &Graph) -> Result<usize> {
        if let Some(cap) = self.cap {
            if g.n() > cap {
                return Err(Error::CapExceeded { n: g.n(), cap, param: self.name });
            }
        }
        (self.eval)(g)
    }

    /// The oracle's exact evaluator for `p` under the given caps.
    pub fn exact(p: Parameter, caps: crate::oracle::OracleCaps) -> ParamEvaluator<'static> {
        let cap = match p {
            Parameter::Chi => caps.chi,
            _ => caps.others,
        };
        ParamEvaluator::new(p.name(), Some(cap), move |g| {
            crate::oracle::param_exact(g, p, &caps)
        })
    }
}

/// Sweep of `eval` over all single-edge deletions. Valid whenever the
/// evaluator's class is closed under subgraphs.
pub fn closure_edge_sweep(g: &Graph, eval: &ParamEvaluator) -> Result<Sweep> {
    sweep_by_recompute(eval.eval(g)?, edge_deletions(g), |h| eval.eval(h))
}

/// Sweep of `eval` over all single-vertex deletions. Valid whenever the
/// evaluator's class is closed under induced subgraphs.
pub fn closure_vertex_sweep(g: &Graph, eval: &ParamEvaluator) -> Result<Sweep> {
    sweep_by_recompute(eval.eval(g)?, vertex_deletions(g), |h| eval.eval(h))
}

/// Sweep of `eval` over all single-nonedge additions. Valid whenever the
/// evaluator's class is closed under adding one edge.
pub fn closure_nonedge_sweep(g: &Graph, eval: &ParamEvaluator) -> Result<Sweep> {
    sweep_by_recompute(eval.eval(g)?, nonedge_additions(g), |h| eval.eval(h))
}

/// Whole-graph stability verdict by recomputation over edges.
pub fn closure_stability(g: &Graph, eval: &ParamEvaluator) -> Result<Verdict> {
    Ok(closure_edge_sweep(g, eval)?.all_preserve())
}

/// Whole-graph vertex-stability verdict by recomputation over vertices.
pub fn closure_vertex_stability(g: &Graph, eval: &ParamEvaluator) -> Result<Verdict> {
    Ok(closure_vertex_sweep(g, eval)?.all_preserve())
}

/// The two complement dualities between adding-edge and deleting-edge
/// questions on classes closed under complement.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Duality {
    /// A nonedge is omega-unfrozen in G iff, as an edge of the complement,
    /// it is alpha-stable there.
    OmegaUnfrozenViaAlphaStability,
    /// A nonedge is alpha-unfrozen (equivalently beta-unfrozen) in G iff, as
    /// an edge of the complement, it is omega-stable there.
    AlphaBetaUnfrozenViaOmegaStability,
}

/// Answers an unfrozenness question about `g` by asking a stability question
/// about its complement. The nonedges of `g` are the complement's edges and
/// alpha there equals omega here (and vice versa), so the complement's
/// per-edge sweep carries over element for element; witnesses map through
/// the identity on vertex pairs.
pub fn complement_duality(
    g: &Graph,
    which: Duality,
    complement_decider: &dyn crate::verdict::Decider,
) -> Result<Verdict> {
    let dual_param = match which {
        Duality::OmegaUnfrozenViaAlphaStability => Parameter::Alpha,
        Duality::AlphaBetaUnfrozenViaOmegaStability => Parameter::Omega,
    };
    let sweep = complement_decider.edge_sweep(&g.complement(), dual_param)?;
    debug_assert!(sweep.entries.iter().all(|d| matches!(d.element, Element::Edge(_))));
    Ok(sweep.all_preserve())
}

/// For perfect graphs chromatic and clique numbers agree on every induced
/// subgraph, so the two vertex-stability verdicts must coincide. Returns
/// whether they do for the supplied pair of verdicts.
pub fn perfect_cross_check(omega_vs: &Verdict, chi_vs: &Verdict) -> bool {
    omega_vs.holds == chi_vs.holds && omega_vs.witnesses == chi_vs.witnesses
}
