//! Seeded instance generators for the graph families used by the deciders
//! and their test suites. Identical specs and seeds produce identical graphs.

use crate::error::{Error, Result};
use crate::graph::{complete_graph, cycle_graph, path_graph, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A parsed generator spec, e.g. `path n=6` or `cograph n=8 seed=3`.
#[derive(Clone, Debug, PartialEq)]
pub enum GenSpec {
    Empty { n: usize },
    Complete { n: usize },
    Path { n: usize },
    Cycle { n: usize },
    Tree { n: usize, seed: u64 },
    Bipartite { n1: usize, n2: usize, p: f64, seed: u64 },
    Cograph { n: usize, seed: u64 },
}

/// Parses a spec string: a family name followed by `key=value` fields.
/// Recognized keys: `n`, `n1`, `n2`, `p`, `seed`. A missing `seed` falls back
/// to `default_seed`.
pub fn parse_spec(text: &str, default_seed: u64) -> Result<GenSpec> {
    let bad = |msg: String| Error::BadGenSpec(msg);
    let mut fields = text.split_whitespace();
    let family = fields.next().ok_or_else(|| bad("empty spec".into()))?;

    let mut n = None;
    let mut n1 = None;
    let mut n2 = None;
    let mut p = None;
    let mut seed = default_seed;
    for field in fields {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| bad(format!("expected key=value, got `{field}`")))?;
        match key {
            "n" => n = Some(value.parse().map_err(|_| bad(format!("bad n `{value}`")))?),
            "n1" => n1 = Some(value.parse().map_err(|_| bad(format!("bad n1 `{value}`")))?),
            "n2" => n2 = Some(value.parse().map_err(|_| bad(format!("bad n2 `{value}`")))?),
            "p" => p = Some(value.parse().map_err(|_| bad(format!("bad p `{value}`")))?),
            "seed" => seed = value.parse().map_err(|_| bad(format!("bad seed `{value}`")))?,
            other => return Err(bad(format!("unknown key `{other}`"))),
        }
    }

    let need_n = || n.ok_or_else(|| bad(format!("family `{family}` needs n=")));
    Ok(match family {
        "empty" => GenSpec::Empty { n: need_n()? },
        "complete" => GenSpec::Complete { n: need_n()? },
        "path" => GenSpec::Path { n: need_n()? },
        "cycle" => {
            let n = need_n()?;
            if n < 3 {
                return Err(bad("cycle needs n >= 3".into()));
            }
            GenSpec::Cycle { n }
        }
        "tree" => GenSpec::Tree { n: need_n()?, seed },
        "bipartite" => {
            let (n1, n2) = match (n1, n2, n) {
                (Some(a), Some(b), _) => (a, b),
                (None, None, Some(total)) => (total.div_ceil(2), total / 2),
                _ => return Err(bad("bipartite needs n= or both n1= and n2=".into())),
            };
            let p = p.unwrap_or(0.5);
            if !(0.0..=1.0).contains(&p) {
                return Err(bad("p must lie in [0, 1]".into()));
            }
            GenSpec::Bipartite { n1, n2, p, seed }
        }
        "cograph" => {
            let n = need_n()?;
            if n == 0 {
                return Err(bad("cograph needs n >= 1".into()));
            }
            GenSpec::Cograph { n, seed }
        }
        other => return Err(bad(format!("unknown family `{other}`"))),
    })
}

pub fn generate(spec: &GenSpec) -> Graph {
    match *spec {
        GenSpec::Empty { n } => Graph::new(n),
        GenSpec::Complete { n } => complete_graph(n),
        GenSpec::Path { n } => path_graph(n),
        GenSpec::Cycle { n } => cycle_graph(n),
        GenSpec::Tree { n, seed } => random_tree(n, seed),
        GenSpec::Bipartite { n1, n2, p, seed } => random_bipartite(n1, n2, p, seed),
        GenSpec::Cograph { n, seed } => random_cograph(n, seed),
    }
}

/// Uniform random labeled tree via a random Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    if n <= 1 {
        return Graph::new(n);
    }
    if n == 2 {
        return path_graph(2);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    prufer_decode(n, &seq)
}

/// Standard Prüfer decoding: repeatedly join the smallest remaining leaf to
/// the next sequence entry.
fn prufer_decode(n: usize, seq: &[usize]) -> Graph {
    debug_assert_eq!(seq.len(), n - 2);
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut leaf_heap: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    for &v in seq {
        let std::cmp::Reverse(leaf) = leaf_heap.pop().unwrap();
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
        if degree[v] == 1 {
            leaf_heap.push(std::cmp::Reverse(v));
        }
    }
    let std::cmp::Reverse(a) = leaf_heap.pop().unwrap();
    let std::cmp::Reverse(b) = leaf_heap.pop().unwrap();
    edges.push((a, b));
    Graph::from_edges(n, edges).unwrap()
}

/// Random bipartite graph: vertices `0..n1` on one side, `n1..n1+n2` on the
/// other, each cross pair an edge independently with probability `p`.
pub fn random_bipartite(n1: usize, n2: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n1 {
        for v in 0..n2 {
            if rng.gen_bool(p) {
                edges.push((u, n1 + v));
            }
        }
    }
    Graph::from_edges(n1 + n2, edges).unwrap()
}

/// Random co-graph: a random binary combining tree over `n` leaf vertices,
/// each internal node a disjoint union or a join with probability 1/2.
pub fn random_cograph(n: usize, seed: u64) -> Graph {
    assert!(n >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut parts: Vec<Graph> = (0..n).map(|_| Graph::new(1)).collect();
    let mut vertex_sets: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    while parts.len() > 1 {
        let i = rng.gen_range(0..parts.len());
        let a = parts.swap_remove(i);
        let va = vertex_sets.swap_remove(i);
        let j = rng.gen_range(0..parts.len());
        let b = parts.swap_remove(j);
        let vb = vertex_sets.swap_remove(j);
        let join = rng.gen_bool(0.5);
        // Combine on original vertex labels.
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for e in a.edges() {
            edges.push((va[e.u()], va[e.v()]));
        }
        for e in b.edges() {
            edges.push((vb[e.u()], vb[e.v()]));
        }
        if join {
            for &x in &va {
                for &y in &vb {
                    edges.push((x.min(y), x.max(y)));
                }
            }
        }
        let mut verts = va;
        verts.extend(vb);
        verts.sort_unstable();
        let back: std::collections::HashMap<usize, usize> =
            verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let combined = Graph::from_edges(
            verts.len(),
            edges.into_iter().map(|(x, y)| (back[&x], back[&y])),
        )
        .unwrap();
        parts.push(combined);
        vertex_sets.push(verts);
    }
    parts.pop().unwrap()
}

/// Erdős–Rényi graphs for test suites; not exposed through the CLI.
pub mod test_support {
    use super::*;

    pub fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, edges).unwrap()
    }

    pub fn random_graphs(n: usize, p: f64, count: usize, seed: u64) -> Vec<Graph> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count).map(|_| random_graph(n, p, &mut rng)).collect()
    }

    /// Random forest: a random tree on each block of a random partition.
    pub fn random_forest(n: usize, seed: u64) -> Graph {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut g = Graph::new(n);
        if n == 0 {
            return g;
        }
        // Assign each vertex a block, then span each block with a random tree.
        let blocks = rng.gen_range(1..=n);
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); blocks];
        for v in 0..n {
            members[rng.gen_range(0..blocks)].push(v);
        }
        for block in members {
            if block.len() < 2 {
                continue;
            }
            let tree = random_tree(block.len(), rng.gen());
            for e in tree.edges() {
                g = g
                    .add_edge(crate::graph::EdgeRef::new(block[e.u()], block[e.v()]).unwrap())
                    .unwrap();
            }
        }
        g
    }

    /// All labeled graphs on `n` vertices, one per edge-subset bitmask.
    pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        let total: u64 = 1 << pairs.len();
        (0..total).map(move |mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_parsing() {
        assert_eq!(parse_spec("path n=6", 0).unwrap(), GenSpec::Path { n: 6 });
        assert_eq!(parse_spec("cycle n=5", 0).unwrap(), GenSpec::Cycle { n: 5 });
        assert_eq!(
            parse_spec("cograph n=8 seed=3", 0).unwrap(),
            GenSpec::Cograph { n: 8, seed: 3 }
        );
        assert_eq!(
            parse_spec("bipartite n=12 p=0.3 seed=1", 0).unwrap(),
            GenSpec::Bipartite { n1: 6, n2: 6, p: 0.3, seed: 1 }
        );
        assert!(parse_spec("hypercube n=3", 0).is_err());
        assert!(parse_spec("path", 0).is_err());
        assert!(parse_spec("path n=x", 0).is_err());
    }

    #[test]
    fn families_have_expected_shape() {
        assert_eq!(generate(&GenSpec::Path { n: 6 }).m(), 5);
        assert_eq!(generate(&GenSpec::Cycle { n: 5 }).m(), 5);
        assert_eq!(generate(&GenSpec::Empty { n: 4 }).m(), 0);
        assert_eq!(generate(&GenSpec::Complete { n: 5 }).m(), 10);
    }

    #[test]
    fn trees_are_trees_and_deterministic() {
        for n in 1..12 {
            for seed in 0..5 {
                let t = random_tree(n, seed);
                assert_eq!(t.m(), n.saturating_sub(1));
                assert!(t.is_connected());
                assert_eq!(t, random_tree(n, seed));
            }
        }
    }

    #[test]
    fn cographs_are_p4_free() {
        for seed in 0..30 {
            let g = random_cograph(8, seed);
            assert!(!g.has_induced_path4());
            assert_eq!(g, random_cograph(8, seed));
        }
    }

    #[test]
    fn bipartite_generator_respects_sides() {
        let g = random_bipartite(4, 5, 0.6, 7);
        for e in g.edges() {
            assert!(e.u() < 4 && e.v() >= 4);
        }
        assert_eq!(g, random_bipartite(4, 5, 0.6, 7));
    }

    #[test]
    fn random_forests_are_acyclic() {
        for seed in 0..20 {
            assert!(!test_support::random_forest(9, seed).has_cycle());
        }
    }
}
