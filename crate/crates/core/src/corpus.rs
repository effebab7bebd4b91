//! Deterministic graph corpora: exhaustive families up to isomorphism,
//! seeded random graphs, and a fixed mixed corpus for cross-checks.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::graph::{make_pineapple, make_spider, Graph};
use crate::iso::{canonical_form, CanonicalForm};

/// Keeps the first graph of each isomorphism class, in input order.
fn dedup(graphs: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    graphs
        .into_iter()
        .filter(|g| seen.insert(canonical_form(g)))
        .collect()
}

/// Every way of adding a vertex `n` to `g` whose neighbourhood is a subset
/// accepted by `keep`.
fn extensions<'a>(
    g: &'a Graph,
    keep: impl Fn(&[usize]) -> bool + 'a,
) -> impl Iterator<Item = Graph> + 'a {
    let n = g.n();
    (0u64..1 << n).filter_map(move |mask| {
        let nbrs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        keep(&nbrs).then(|| g.with_vertex(&nbrs).expect("neighbours are in range"))
    })
}

/// Grows a hereditary family one vertex at a time, deduplicating each level.
fn grow(
    n: usize,
    keep_nbrs: impl Fn(&Graph, &[usize]) -> bool + Copy,
    keep_graph: impl Fn(&Graph) -> bool + Copy,
) -> Vec<Vec<Graph>> {
    let mut levels = vec![vec![Graph::empty(0)]];
    for _ in 1..=n {
        let prev = levels.last().expect("level 0 exists");
        let next = dedup(
            prev.iter()
                .flat_map(|g| extensions(g, move |nbrs| keep_nbrs(g, nbrs)).filter(keep_graph)),
        );
        levels.push(next);
    }
    levels
}

/// All trees on `n` vertices up to isomorphism (`n >= 1`).
pub fn free_trees(n: usize) -> Vec<Graph> {
    grow(
        n,
        |g, nbrs| nbrs.len() == 1 || g.n() == 0 && nbrs.is_empty(),
        |_| true,
    )
    .pop()
    .expect("top level exists")
}

/// All graphs on `n` vertices up to isomorphism.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    grow(n, |_, _| true, |_| true)
        .pop()
        .expect("top level exists")
}

/// All connected graphs on `n` vertices up to isomorphism. Every connected
/// graph has a vertex whose removal leaves it connected, so extending the
/// connected graphs on `n - 1` vertices reaches them all.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    grow(n, |g, nbrs| g.n() == 0 || !nbrs.is_empty(), |_| true)
        .pop()
        .expect("top level exists")
}

/// A claw centred at the new vertex `v` or using it as a leaf.
fn creates_claw(g: &Graph, nbrs: &[usize]) -> bool {
    // New vertex as the centre: three pairwise non-adjacent neighbours.
    let independent_triple = nbrs.iter().enumerate().any(|(i, &a)| {
        nbrs[i + 1..].iter().enumerate().any(|(j, &b)| {
            !g.has_edge(a, b)
                && nbrs[i + j + 2..]
                    .iter()
                    .any(|&c| !g.has_edge(a, c) && !g.has_edge(b, c))
        })
    });
    if independent_triple {
        return true;
    }
    // New vertex as a leaf of a claw centred at a neighbour `c`: two other
    // neighbours of `c`, non-adjacent to each other and to the new vertex.
    nbrs.iter().any(|&c| {
        let others: Vec<usize> = g
            .neighbors(c)
            .iter()
            .copied()
            .filter(|w| !nbrs.contains(w))
            .collect();
        others
            .iter()
            .enumerate()
            .any(|(i, &a)| others[i + 1..].iter().any(|&b| !g.has_edge(a, b)))
    })
}

/// All claw-free graphs (connected or not) on `n` vertices up to
/// isomorphism. Claw-freeness is inherited by induced subgraphs.
pub fn claw_free_graphs(n: usize) -> Vec<Graph> {
    claw_free_levels(n).pop().expect("top level exists")
}

/// `claw_free_levels(n)[k]` lists the claw-free graphs on `k` vertices.
pub fn claw_free_levels(n: usize) -> Vec<Vec<Graph>> {
    grow(n, |g, nbrs| !creates_claw(g, nbrs), |_| true)
}

/// Connected claw-free graphs on `n` vertices up to isomorphism.
pub fn claw_free_connected(n: usize) -> Vec<Graph> {
    grow(
        n,
        |g, nbrs| (g.n() == 0 || !nbrs.is_empty()) && !creates_claw(g, nbrs),
        |_| true,
    )
    .pop()
    .expect("top level exists")
}

/// `G(n, 1/2)`.
pub fn random_graph(n: usize, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("edges are in range")
}

/// `count` graphs `G(n, 1/2)` with `n` uniform in `lo..=hi`, from a ChaCha8
/// stream seeded with `seed`.
pub fn random_graphs(count: usize, lo: usize, hi: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(lo..=hi);
            random_graph(n, &mut rng)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Graph,
}

impl NamedGraph {
    fn new(name: impl Into<String>, graph: Graph) -> Self {
        NamedGraph {
            name: name.into(),
            graph,
        }
    }
}

/// The fixed corpus of graphs on at most `max_n` vertices: paths, cycles,
/// stars, complete and edgeless graphs, every connected graph on at most 5
/// vertices, every tree on at most `max_n` vertices, small spiders and
/// pineapples, and 40 seeded random graphs.
pub fn standard_corpus(max_n: usize, seed: u64) -> Vec<NamedGraph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.push(NamedGraph::new(format!("P{n}"), Graph::path(n)));
        out.push(NamedGraph::new(format!("K{n}"), Graph::complete(n)));
        out.push(NamedGraph::new(format!("E{n}"), Graph::empty(n)));
        if n >= 3 {
            out.push(NamedGraph::new(format!("C{n}"), Graph::cycle(n)));
        }
        if n >= 2 {
            out.push(NamedGraph::new(format!("K1,{}", n - 1), Graph::star(n - 1)));
        }
    }
    for n in 1..=max_n.min(5) {
        for (i, g) in connected_graphs(n).into_iter().enumerate() {
            out.push(NamedGraph::new(format!("connected{n}#{i}"), g));
        }
    }
    for n in 1..=max_n {
        for (i, g) in free_trees(n).into_iter().enumerate() {
            out.push(NamedGraph::new(format!("tree{n}#{i}"), g));
        }
    }
    for lambda in [
        &[1, 1, 1][..],
        &[2, 1, 1],
        &[2, 2, 1],
        &[3, 2, 2],
        &[1, 1, 1, 1],
        &[2, 1, 1, 1],
    ] {
        if let Ok(g) = make_spider(lambda) {
            if g.n() <= max_n {
                out.push(NamedGraph::new(format!("S{lambda:?}"), g));
            }
        }
    }
    for (n, lambda) in [
        (3, &[1, 1][..]),
        (3, &[2, 1]),
        (4, &[1, 1, 1]),
        (2, &[2, 2, 1]),
    ] {
        if let Ok(g) = make_pineapple(n, lambda) {
            if g.n() <= max_n {
                out.push(NamedGraph::new(format!("Pi({n},{lambda:?})"), g));
            }
        }
    }
    for (i, g) in random_graphs(40, 2, max_n.max(2), seed)
        .into_iter()
        .enumerate()
    {
        out.push(NamedGraph::new(format!("random{i}"), g));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let trees: Vec<usize> = (1..=8).map(|n| free_trees(n).len()).collect();
        assert_eq!(trees, vec![1, 1, 1, 2, 3, 6, 11, 23]);
        let connected: Vec<usize> = (1..=5).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21]);
        let all: Vec<usize> = (0..=6).map(|n| all_graphs(n).len()).collect();
        assert_eq!(all, vec![1, 1, 2, 4, 11, 34, 156]);
        for t in free_trees(7) {
            assert_eq!(t.edge_count(), 6);
            assert!(t.is_connected());
        }
    }

    #[test]
    fn claw_detection_on_extension() {
        for g in claw_free_graphs(6) {
            assert!(g.is_claw_free());
        }
        assert!(claw_free_graphs(4)
            .iter()
            .all(|g| !crate::iso::isomorphic(g, &Graph::star(3))));
    }

    #[test]
    fn random_graphs_are_seeded() {
        let a = random_graphs(5, 3, 9, 7);
        let b = random_graphs(5, 3, 9, 7);
        assert_eq!(a, b);
        assert!(a.iter().all(|g| (3..=9).contains(&g.n())));
        assert_ne!(random_graphs(5, 3, 9, 8), a);
    }

    #[test]
    fn corpus_is_deterministic() {
        assert_eq!(standard_corpus(6, 1), standard_corpus(6, 1));
        assert!(standard_corpus(6, 1).iter().all(|g| g.graph.n() <= 6));
    }
}
