//! Canonical forms for small graphs, used to deduplicate generated
//! corpora, plus a brute-force isomorphism test that serves as its oracle.

use crate::graph::Graph;

/// Largest graph accepted by [`canonical_form`] (rows are `u64` masks).
pub const MAX_CANONICAL_VERTICES: usize = 64;

/// The adjacency rows of `g` under a canonical relabeling; equal exactly
/// for isomorphic graphs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub n: usize,
    pub rows: Vec<u64>,
}

/// Color refinement: each round replaces a vertex color by its old color
/// together with the sorted colors of its neighbours, and renames the
/// signatures by rank. Stops when no cell splits.
fn refine(g: &Graph, colors: &mut [usize]) {
    let n = g.n();
    let mut cells = count_cells(colors);
    loop {
        let mut sigs: Vec<(usize, Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                around.sort_unstable();
                (colors[v], around, v)
            })
            .collect();
        sigs.sort();
        let mut rank = 0;
        for i in 0..n {
            if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                rank += 1;
            }
            colors[sigs[i].2] = rank;
        }
        let now = count_cells(colors);
        if now == cells {
            return;
        }
        cells = now;
    }
}

fn count_cells(colors: &[usize]) -> usize {
    let mut seen: Vec<usize> = colors.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

fn rows_under(g: &Graph, colors: &[usize]) -> Vec<u64> {
    let n = g.n();
    let mut rows = vec![0u64; n];
    for v in 0..n {
        for &w in g.neighbors(v) {
            rows[colors[v]] |= 1 << colors[w];
        }
    }
    rows
}

/// `v` and `w` have the same neighbours apart from each other.
fn twins(g: &Graph, v: usize, w: usize) -> bool {
    let strip = |a: usize, b: usize| g.neighbors(a).iter().copied().filter(move |&x| x != b);
    strip(v, w).eq(strip(w, v))
}

fn search(g: &Graph, colors: Vec<usize>, best: &mut Option<Vec<u64>>) {
    let n = g.n();
    let mut sizes = vec![0usize; n];
    for &c in &colors {
        sizes[c] += 1;
    }
    let Some(target) = (0..n).find(|&c| sizes[c] > 1) else {
        let rows = rows_under(g, &colors);
        if best.as_ref().is_none_or(|b| rows < *b) {
            *best = Some(rows);
        }
        return;
    };
    let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
    // Swapping twins in the same cell is an automorphism that fixes the
    // current coloring, so one representative per twin class suffices.
    let mut reps: Vec<usize> = Vec::new();
    for &v in &cell {
        if !reps.iter().any(|&r| twins(g, r, v)) {
            reps.push(v);
        }
    }
    for v in reps {
        let mut next: Vec<usize> = colors.iter().map(|&c| 2 * c).collect();
        for &w in &cell {
            if w != v {
                next[w] += 1;
            }
        }
        refine(g, &mut next);
        search(g, next, best);
    }
}

/// Canonical form by individualization and refinement.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.n();
    assert!(n <= MAX_CANONICAL_VERTICES, "canonical_form: {n} vertices");
    let mut colors = vec![0; n];
    refine(g, &mut colors);
    let mut best = None;
    search(g, colors, &mut best);
    CanonicalForm {
        n,
        rows: best.unwrap_or_default(),
    }
}

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}

/// Largest graph accepted by [`brute_force_isomorphic`].
pub const BRUTE_FORCE_ISO_VERTICES: usize = 10;

/// Tries every bijection (pruned by degree and by adjacency to the vertices
/// already placed).
pub fn brute_force_isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.n();
    assert!(
        n <= BRUTE_FORCE_ISO_VERTICES,
        "brute_force_isomorphic: {n} vertices"
    );
    if n != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(a, b, 0, &mut map, &mut used)
}

fn extend(a: &Graph, b: &Graph, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if v == a.n() {
        return true;
    }
    for w in 0..b.n() {
        if used[w] || a.degree(v) != b.degree(w) {
            continue;
        }
        if (0..v).all(|u| a.has_edge(u, v) == b.has_edge(map[u], w)) {
            map[v] = w;
            used[w] = true;
            if extend(a, b, v + 1, map, used) {
                return true;
            }
            used[w] = false;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        let edges: Vec<_> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::new(g.n(), &edges).unwrap()
    }

    #[test]
    fn invariant_under_relabeling() {
        let g = crate::make_spider(&[3, 2, 1]).unwrap();
        let perm = [6, 2, 0, 5, 1, 3, 4];
        assert_eq!(canonical_form(&g), canonical_form(&relabel(&g, &perm)));
        assert!(isomorphic(&g, &relabel(&g, &perm)));
        assert!(brute_force_isomorphic(&g, &relabel(&g, &perm)));
    }

    #[test]
    fn separates_small_graphs() {
        let p4 = Graph::path(4);
        let claw = Graph::star(3);
        assert!(!isomorphic(&p4, &claw));
        assert!(!brute_force_isomorphic(&p4, &claw));
        // Same degree sequence: C6 against two triangles.
        let two_k3 = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert!(!isomorphic(&Graph::cycle(6), &two_k3));
        assert!(isomorphic(&crate::make_spider(&[2, 1]).unwrap(), &p4));
        assert!(isomorphic(&Graph::empty(9), &Graph::empty(9)));
        assert!(isomorphic(&Graph::complete(9), &Graph::complete(9)));
        assert_eq!(canonical_form(&Graph::empty(0)).rows, Vec::<u64>::new());
    }
}
