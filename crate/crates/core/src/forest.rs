//! Polynomial deciders for trees and forests.
//!
//! Forests are closed under single deletions, so stability and
//! vertex-stability reduce to recomputing the component-wise parameter
//! formulas: alpha and beta sum over tree components (alpha coming from the
//! bipartite matching engine, beta via Gallai), chi and omega take the
//! component maximum, which is 2 as soon as an edge exists. For additions,
//! a nonedge raises omega iff its endpoints share a neighbor, raises chi iff
//! it closes an odd cycle (same component, even distance), and raises beta
//! iff no minimum cover touches it — the bipartite per-nonedge analysis.

use crate::bipartite::{beta_by_matching, BipartiteDecider};
use crate::classify::bipartition;
use crate::error::{Error, Result};
use crate::generic::{closure_edge_sweep, closure_vertex_sweep, ParamEvaluator};
use crate::graph::{Graph, Parameter};
use crate::verdict::{Decider, Sweep, Verdict};

fn require_forest(g: &Graph) -> Result<()> {
    if g.has_cycle() {
        Err(Error::NotForest)
    } else {
        Ok(())
    }
}

/// `(alpha, beta, omega, chi)` of a forest, by the component-wise formulas.
pub fn forest_params(g: &Graph) -> Result<(usize, usize, usize, usize)> {
    require_forest(g)?;
    let mut alpha = 0;
    let mut beta = 0;
    let mut chi_omega = 0;
    for comp in g.connected_components() {
        let (sub, _) = g.induced_subgraph(&comp.iter().copied().collect());
        let b = beta_by_matching(&sub)?;
        alpha += sub.n() - b;
        beta += b;
        chi_omega = chi_omega.max(if sub.n() > 1 { 2 } else { 1 });
    }
    Ok((alpha, beta, chi_omega, chi_omega))
}

fn forest_evaluator(p: Parameter) -> ParamEvaluator<'static> {
    ParamEvaluator::new(p.name(), None, move |g| {
        let (a, b, o, c) = forest_params(g)?;
        Ok(match p {
            Parameter::Alpha => a,
            Parameter::Beta => b,
            Parameter::Omega => o,
            Parameter::Chi => c,
        })
    })
}

/// Whole-graph stability of a forest for `p`, by recomputation over edges.
pub fn forest_stability(g: &Graph, p: Parameter) -> Result<Verdict> {
    require_forest(g)?;
    Ok(ForestDecider.edge_sweep(g, p)?.all_preserve())
}

/// Whole-graph vertex-stability of a forest for `p`.
pub fn forest_vertex_stability(g: &Graph, p: Parameter) -> Result<Verdict> {
    require_forest(g)?;
    Ok(ForestDecider.vertex_sweep(g, p)?.all_preserve())
}

/// Omega- and chi-unfrozenness of a forest with at least one edge: both hold
/// iff no vertex triple induces a two-edge path. Edgeless forests belong to
/// the empty-graph decider.
pub fn forest_omega_chi_unfrozenness(g: &Graph) -> Result<Verdict> {
    require_forest(g)?;
    if g.m() == 0 {
        return Err(Error::NoEngine(
            "edgeless forests are handled by the empty-graph rules".into(),
        ));
    }
    Ok(ForestDecider.nonedge_sweep(g, Parameter::Omega)?.all_preserve())
}

/// Alpha- or beta-unfrozenness of a forest: the bipartite per-nonedge
/// analysis verbatim, since every forest is bipartite.
pub fn forest_alpha_beta_unfrozenness(g: &Graph, p: Parameter) -> Result<Verdict> {
    require_forest(g)?;
    debug_assert!(matches!(p, Parameter::Alpha | Parameter::Beta));
    Ok(ForestDecider.nonedge_sweep(g, p)?.all_preserve())
}

/// The decider for forests (and thereby trees).
#[derive(Clone, Copy, Debug, Default)]
pub struct ForestDecider;

impl Decider for ForestDecider {
    fn name(&self) -> &'static str {
        "forest"
    }

    fn edge_sweep(&self, g: &Graph, p: Parameter) -> Result<Sweep> {
        require_forest(g)?;
        closure_edge_sweep(g, &forest_evaluator(p))
    }

    fn vertex_sweep(&self, g: &Graph, p: Parameter) -> Result<Sweep> {
        require_forest(g)?;
        closure_vertex_sweep(g, &forest_evaluator(p))
    }

    fn nonedge_sweep(&self, g: &Graph, p: Parameter) -> Result<Sweep> {
        require_forest(g)?;
        debug_assert!(bipartition(g).is_some());
        BipartiteDecider.nonedge_sweep(g, p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        complete_bipartite_graph, cycle_graph, disjoint_union, path_graph, Graph, Question,
    };
    use crate::oracle::{decide_by_definition, param_exact, OracleCaps};
    use Parameter::*;

    #[test]
    fn params_of_fixtures() {
        let star = complete_bipartite_graph(1, 4);
        assert_eq!(forest_params(&star).unwrap(), (4, 1, 2, 2));
        assert_eq!(forest_params(&path_graph(7)).unwrap(), (4, 3, 2, 2));
        let two_paths = disjoint_union(&path_graph(2), &path_graph(3));
        assert_eq!(forest_params(&two_paths).unwrap(), (3, 2, 2, 2));
        assert_eq!(forest_params(&Graph::new(0)).unwrap(), (0, 0, 0, 0));
        assert!(forest_params(&cycle_graph(3)).is_err());
    }

    #[test]
    fn params_match_oracle_on_random_forests() {
        let caps = OracleCaps::default();
        for seed in 0..40 {
            let g = crate::gen::test_support::random_forest(9, seed);
            let (a, b, o, c) = forest_params(&g).unwrap();
            assert_eq!(a, param_exact(&g, Alpha, &caps).unwrap());
            assert_eq!(b, param_exact(&g, Beta, &caps).unwrap());
            assert_eq!(o, param_exact(&g, Omega, &caps).unwrap());
            assert_eq!(c, param_exact(&g, Chi, &caps).unwrap());
        }
    }

    #[test]
    fn stability_fixtures() {
        assert!(forest_stability(&path_graph(3), Chi).unwrap().holds);
        // the center of a two-edge star is the unique cover vertex
        let v = forest_vertex_stability(&path_graph(3), Beta).unwrap();
        assert!(!v.holds);
        // removing one of two disjoint edges keeps omega at 2
        let two_edges = disjoint_union(&path_graph(2), &path_graph(2));
        assert!(forest_stability(&two_edges, Omega).unwrap().holds);
    }

    #[test]
    fn unfrozenness_fixtures() {
        // a perfect matching plus isolated vertices stays at omega = chi = 2
        let matching = Graph::from_edges(8, [(0, 1), (2, 3), (4, 5)]).unwrap();
        assert!(forest_omega_chi_unfrozenness(&matching).unwrap().holds);
        // any tree on >= 3 vertices contains a two-edge path to close
        for seed in 0..10 {
            let t = crate::gen::random_tree(6, seed);
            assert!(!forest_omega_chi_unfrozenness(&t).unwrap().holds);
        }
        let pair_plus_isolated = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(forest_omega_chi_unfrozenness(&pair_plus_isolated).unwrap().holds);
        assert!(forest_omega_chi_unfrozenness(&Graph::new(4)).is_err());

        assert!(forest_alpha_beta_unfrozenness(&path_graph(6), Beta).unwrap().holds);
        assert!(!forest_alpha_beta_unfrozenness(&path_graph(5), Beta).unwrap().holds);
        // the 4-star: its center sits in the unique minimum cover
        let star = complete_bipartite_graph(1, 3);
        let fast = forest_alpha_beta_unfrozenness(&star, Alpha).unwrap();
        let slow = decide_by_definition(&star, Alpha, Question::Unfrozenness).unwrap();
        assert!(fast.same_outcome(&slow));
    }

    #[test]
    fn forest_decider_agrees_with_oracle() {
        let mut graphs: Vec<Graph> = (0..25)
            .map(|seed| crate::gen::test_support::random_forest(8, 100 + seed))
            .collect();
        graphs.push(Graph::new(0));
        graphs.push(Graph::new(3));
        graphs.push(disjoint_union(&path_graph(4), &path_graph(3)));
        let d = ForestDecider;
        for g in graphs {
            for p in Parameter::ALL {
                for q in Question::ELEMENT_QUESTIONS {
                    let fast = d.decide(&g, p, q).unwrap();
                    let slow = decide_by_definition(&g, p, q).unwrap();
                    assert!(fast.same_outcome(&slow), "{g:?} {p:?} {q:?}");
                }
            }
        }
    }

    #[test]
    fn perfection_cross_check_on_forests() {
        let d = ForestDecider;
        for seed in 0..20 {
            let g = crate::gen::test_support::random_forest(8, 300 + seed);
            let omega_vs = d.decide(&g, Omega, Question::VertexStability).unwrap();
            let chi_vs = d.decide(&g, Chi, Question::VertexStability).unwrap();
            assert!(crate::generic::perfect_cross_check(&omega_vs, &chi_vs));
        }
    }
}
