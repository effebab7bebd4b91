//! Two-row Schur projections of chromatic symmetric functions `X_G`, their
//! multicolored versions `X_G^alpha`, and the aggregate `Y_G`.

use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Bipartiteness, Graph, WeightMap};
use crate::poly::{indep_poly, MAX_BRUTE_FORCE_VERTICES};
use crate::scalar::to_rational;
use crate::schur2::{fp_profile, twovar_to_profile, Partition2, Profile, TwoVarPoly};
use crate::{IntProfile, TwoRowProfile};

/// Largest graph accepted by [`two_row_y_oracle`].
pub const ORACLE_MAX_VERTICES: usize = 10;
/// Largest degree accepted by [`two_row_y_oracle`].
pub const ORACLE_MAX_DEGREE: usize = 12;

/// Semi-ordered counts of stable partitions with at most two blocks.
///
/// `by_type[(k, l)]` (with `l >= 1`) counts stable partitions of type
/// `(k, l)`, ordered when `k == l`; `single` is the count for the one-block
/// type `(n)` and is 1 exactly for edgeless graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StableTypeCounts {
    pub n: usize,
    pub by_type: BTreeMap<(usize, usize), u64>,
    pub single: u64,
}

impl StableTypeCounts {
    /// `ã_(k,l)`; `(n, 0)` resolves to the one-block count.
    pub fn get(&self, k: usize, l: usize) -> u64 {
        if l == 0 {
            return if k == self.n { self.single } else { 0 };
        }
        self.by_type.get(&(k, l)).copied().unwrap_or(0)
    }

    /// Builds from `c[s]`, the number of independent sets `S` with `|S| = s`
    /// whose complement is also independent.
    fn from_set_counts(n: usize, c: &[u64]) -> Self {
        let mut by_type = BTreeMap::new();
        for (s, &count) in c.iter().enumerate() {
            let rest = n - s;
            if count > 0 && s >= rest && rest >= 1 {
                by_type.insert((s, rest), count);
            }
        }
        StableTypeCounts {
            n,
            by_type,
            single: c.get(n).copied().unwrap_or(0),
        }
    }
}

fn guard(what: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        Err(Error::TooLarge { what, size, limit })
    } else {
        Ok(())
    }
}

/// Enumerates the independent sets `S` whose complement is independent,
/// by backtracking over vertices in breadth-first order, and tallies them
/// by `|S|`. Unordered partitions with two equal blocks are seen twice,
/// once per block, which is exactly the semi-ordered convention.
pub fn stable_two_block_counts(g: &Graph) -> Result<StableTypeCounts> {
    let n = g.n();
    guard("stable partition enumeration", n, MAX_BRUTE_FORCE_VERTICES)?;
    let order = bfs_order(g);
    let mut side = vec![u8::MAX; n];
    let mut counts = vec![0u64; n + 1];
    extend_coloring(g, &order, 0, 0, &mut side, &mut counts);
    Ok(StableTypeCounts::from_set_counts(n, &counts))
}

fn bfs_order(g: &Graph) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    for root in 0..g.n() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

fn extend_coloring(
    g: &Graph,
    order: &[usize],
    idx: usize,
    in_s: usize,
    side: &mut [u8],
    counts: &mut [u64],
) {
    let Some(&v) = order.get(idx) else {
        counts[in_s] += 1;
        return;
    };
    for color in [0u8, 1] {
        if g.neighbors(v).iter().all(|&w| side[w] != color) {
            side[v] = color;
            extend_coloring(
                g,
                order,
                idx + 1,
                in_s + usize::from(color == 0),
                side,
                counts,
            );
            side[v] = u8::MAX;
        }
    }
}

/// Two-row part of `X_G` from semi-ordered stable partition counts:
/// `[s_(k,l)] = ã_(k,l) - ã_(k+1,l-1)` and `[s_(n)] = ã_(n)`.
pub fn two_row_x(g: &Graph) -> Result<IntProfile> {
    let counts = stable_two_block_counts(g)?;
    Ok(profile_from_counts(&counts))
}

fn profile_from_counts(counts: &StableTypeCounts) -> IntProfile {
    let n = counts.n;
    if n == 0 {
        return Profile::one();
    }
    let mut out = Profile::zero();
    for l in 0..=n / 2 {
        let k = n - l;
        let above = if l == 0 { 0 } else { counts.get(k + 1, l - 1) };
        let v = BigInt::from(counts.get(k, l)) - BigInt::from(above);
        out.add_term(Partition2::new(k, l), v);
    }
    out
}

/// Independent route to the two-row part of `X_G`: evaluate `X_G(x, y)` by
/// summing `x^{#1} y^{#2}` over all proper maps `V -> {1, 2}`, then convert.
pub fn two_row_x_coloring_oracle(g: &Graph) -> Result<IntProfile> {
    let n = g.n();
    guard("two-color enumeration", n, MAX_BRUTE_FORCE_VERTICES)?;
    let edges = g.edges();
    let mut monomials: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
    for colors in 0u32..(1u32 << n) {
        let proper = edges
            .iter()
            .all(|&(u, v)| (colors >> u) & 1 != (colors >> v) & 1);
        if proper {
            let ones = (colors.count_ones()) as usize;
            *monomials
                .entry((n - ones, ones))
                .or_insert_with(BigInt::zero) += 1;
        }
    }
    twovar_to_profile(&TwoVarPoly::from_monomials(monomials)?)
}

/// Two-row part of `X_G` as the product over connected components.
/// Non-bipartite components contribute zero (they have no two-block stable
/// partition); bipartite ones are enumerated.
pub fn two_row_x_by_components(g: &Graph) -> Result<IntProfile> {
    let mut acc = Profile::one();
    for comp in g.connected_components() {
        if let Bipartiteness::OddCycle(_) = comp.graph.bipartition()? {
            return Ok(Profile::zero());
        }
        acc = acc.product(&two_row_x(&comp.graph)?);
    }
    Ok(acc)
}

/// Two-row part of the normalized multicolored function
/// `X_G^alpha = X_{G^alpha} / prod_v alpha(v)!`.
pub fn two_row_x_alpha(g: &Graph, alpha: &WeightMap) -> Result<TwoRowProfile> {
    alpha.check_domain(g)?;
    guard("clan graph", alpha.total(), MAX_BRUTE_FORCE_VERTICES)?;
    let clan = g.clan_graph(alpha)?;
    Ok(normalize(&two_row_x(&clan.graph)?, alpha))
}

/// Same as [`two_row_x_alpha`], computed component by component.
pub fn two_row_x_alpha_by_components(g: &Graph, alpha: &WeightMap) -> Result<TwoRowProfile> {
    let clan = g.clan_graph(alpha)?;
    Ok(normalize(&two_row_x_by_components(&clan.graph)?, alpha))
}

fn normalize(x: &IntProfile, alpha: &WeightMap) -> TwoRowProfile {
    let denom = BigRational::from_integer(BigInt::from(alpha.factorial_product()));
    x.map(to_rational).scale(&denom.recip())
}

/// Largest clan graph accepted by the block-size route (its counts are `u64`).
pub const FAST_MAX_VERTICES: usize = 63;

/// `c[s]` for the clan graph `G^alpha`, read off `G` without building the
/// clan graph. `None` when `G^alpha` has an odd cycle.
///
/// A bipartite `G^alpha` has every weight at most 2, and a weight-2 vertex
/// has no weighted neighbour, so it is an isolated `K_2`. The remaining
/// support induces a bipartite graph whose components each put one of their
/// two blocks into `S`.
fn clan_set_counts(g: &Graph, alpha: &WeightMap) -> Option<Vec<u64>> {
    let n = g.n();
    let total = alpha.total();
    let mut c = vec![0u64; total + 1];
    c[0] = 1;
    let mut deg = 0;
    let mut side = vec![u8::MAX; n];
    let mut queue = Vec::new();
    for root in 0..n {
        let w = alpha[root];
        if w >= 3 {
            return None;
        }
        if w == 0 || side[root] != u8::MAX {
            continue;
        }
        let (mut p, mut q) = (0usize, 0usize);
        side[root] = 0;
        queue.clear();
        queue.push(root);
        while let Some(v) = queue.pop() {
            match (alpha[v], side[v]) {
                (2, _) => {
                    p += 1;
                    q += 1;
                }
                (_, 0) => p += 1,
                _ => q += 1,
            }
            for &x in g.neighbors(v) {
                if alpha[x] == 0 {
                    continue;
                }
                if alpha[x] + alpha[v] >= 3 {
                    return None;
                }
                if side[x] == u8::MAX {
                    side[x] = 1 - side[v];
                    queue.push(x);
                } else if side[x] == side[v] {
                    return None;
                }
            }
        }
        // Multiply by x^p + x^q.
        let mut next = vec![0u64; total + 1];
        for s in 0..=deg {
            if c[s] != 0 {
                next[s + p] += c[s];
                next[s + q] += c[s];
            }
        }
        deg += p.max(q);
        c = next;
    }
    Some(c)
}

/// [`stable_two_block_counts`] of the clan graph `G^alpha`, from the block
/// sizes of its components.
pub fn stable_two_block_counts_alpha(g: &Graph, alpha: &WeightMap) -> Result<StableTypeCounts> {
    alpha.check_domain(g)?;
    let total = alpha.total();
    guard("block-size route", total, FAST_MAX_VERTICES)?;
    let c = clan_set_counts(g, alpha).unwrap_or_else(|| vec![0; total + 1]);
    Ok(StableTypeCounts::from_set_counts(total, &c))
}

/// Same value as [`two_row_x`], through component block sizes.
pub fn two_row_x_fast(g: &Graph) -> Result<IntProfile> {
    Ok(profile_from_counts(&stable_two_block_counts_alpha(
        g,
        &WeightMap::ones(g.n()),
    )?))
}

/// Same value as [`two_row_x_alpha`], without building the clan graph.
pub fn two_row_x_alpha_fast(g: &Graph, alpha: &WeightMap) -> Result<TwoRowProfile> {
    let counts = stable_two_block_counts_alpha(g, alpha)?;
    Ok(normalize(&profile_from_counts(&counts), alpha))
}

/// The full two-row content of `Y_G = prod_i I_G(x_i)`: the entry at
/// `(k, l)` is `i_k i_l - i_{k+1} i_{l-1}`.
pub fn two_row_y_fast(g: &Graph) -> TwoRowProfile {
    let ip = indep_poly(g);
    let d = ip.degree().unwrap_or(0);
    fp_profile(&ip, 2 * d + 2)
        .expect("independence polynomials have constant term 1")
        .map(to_rational)
}

/// Degree-`d` slice of `Y_G` by brute force: the sum of `X_G^alpha` over
/// every weight map with `|alpha| = d`.
pub fn two_row_y_oracle(g: &Graph, d: usize) -> Result<TwoRowProfile> {
    guard("oracle graph", g.n(), ORACLE_MAX_VERTICES)?;
    guard("oracle degree", d, ORACLE_MAX_DEGREE)?;
    sum_over_weight_maps(g, d, |_| true)
}

/// `sum X_G^alpha` over the weight maps of total `d` accepted by `keep`.
/// The sum is exact, so the parallel reduction order does not matter.
pub fn sum_over_weight_maps(
    g: &Graph,
    d: usize,
    keep: impl Fn(&WeightMap) -> bool + Sync,
) -> Result<TwoRowProfile> {
    let maps: Vec<WeightMap> = Compositions::new(g.n(), d).filter(|a| keep(a)).collect();
    maps.par_iter()
        .map(|alpha| two_row_x_alpha(g, alpha))
        .try_reduce(Profile::zero, |a, b| Ok(a.add(&b)))
}

/// Every weight map on `V(g)` with total `d`, each once, in decreasing
/// lexicographic order.
pub fn enumerate_weight_maps(g: &Graph, d: usize) -> Result<Compositions> {
    guard("weight map domain", g.n(), ORACLE_MAX_VERTICES)?;
    guard("weight map total", d, ORACLE_MAX_DEGREE)?;
    Ok(Compositions::new(g.n(), d))
}

/// Weak compositions of `total` into `parts` parts, in decreasing
/// lexicographic order.
#[derive(Clone, Debug)]
pub struct Compositions {
    next: Option<Vec<usize>>,
}

impl Compositions {
    pub fn new(parts: usize, total: usize) -> Self {
        let next = match parts {
            0 => (total == 0).then(Vec::new),
            _ => {
                let mut first = vec![0; parts];
                first[0] = total;
                Some(first)
            }
        };
        Compositions { next }
    }
}

impl Iterator for Compositions {
    type Item = WeightMap;

    fn next(&mut self) -> Option<WeightMap> {
        let current = self.next.take()?;
        let parts = current.len();
        if parts > 1 {
            if let Some(i) = (0..parts - 1).rev().find(|&i| current[i] > 0) {
                let mut succ = current.clone();
                let tail: usize = succ[i + 1..].iter().sum();
                succ[i] -= 1;
                for slot in &mut succ[i + 1..] {
                    *slot = 0;
                }
                succ[i + 1] = tail + 1;
                self.next = Some(succ);
            }
        }
        Some(WeightMap(current))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{ratio, rational};

    fn ip(terms: &[(usize, usize, i64)]) -> IntProfile {
        Profile::from_terms(terms.iter().map(|&(k, l, c)| (k, l, BigInt::from(c))))
    }

    fn rp(terms: &[(usize, usize, i64, i64)]) -> TwoRowProfile {
        Profile::from_terms(terms.iter().map(|&(k, l, n, d)| (k, l, ratio(n, d))))
    }

    #[test]
    fn stable_counts() {
        let claw = stable_two_block_counts(&Graph::star(3)).unwrap();
        assert_eq!(claw.get(3, 1), 1);
        assert_eq!(claw.get(2, 2), 0);
        let p4 = stable_two_block_counts(&Graph::path(4)).unwrap();
        assert_eq!(p4.get(2, 2), 2);
        assert_eq!(p4.get(3, 1), 0);
        let e2 = stable_two_block_counts(&Graph::empty(2)).unwrap();
        assert_eq!(e2.get(1, 1), 2);
        assert_eq!(e2.get(2, 0), 1);
        assert_eq!(e2.single, 1);
        assert!(stable_two_block_counts(&Graph::empty(26)).is_err());
    }

    #[test]
    fn chromatic_two_row_parts() {
        assert_eq!(
            two_row_x(&Graph::star(3)).unwrap(),
            ip(&[(3, 1, 1), (2, 2, -1)])
        );
        assert_eq!(
            two_row_x(&Graph::empty(2)).unwrap(),
            ip(&[(2, 0, 1), (1, 1, 1)])
        );
        assert_eq!(two_row_x(&Graph::path(4)).unwrap(), ip(&[(2, 2, 2)]));
        assert_eq!(two_row_x(&Graph::complete(3)).unwrap(), ip(&[]));
        assert_eq!(two_row_x(&Graph::empty(0)).unwrap(), ip(&[(0, 0, 1)]));
        for g in [
            Graph::star(3),
            Graph::path(4),
            Graph::cycle(6),
            Graph::empty(3),
        ] {
            assert_eq!(
                two_row_x(&g).unwrap(),
                two_row_x_coloring_oracle(&g).unwrap()
            );
            assert_eq!(two_row_x(&g).unwrap(), two_row_x_by_components(&g).unwrap());
        }
    }

    #[test]
    fn multicolored() {
        let claw = Graph::star(3);
        assert_eq!(
            two_row_x_alpha(&claw, &WeightMap::ones(4)).unwrap(),
            two_row_x(&claw).unwrap().map(to_rational)
        );
        let k1 = Graph::empty(1);
        assert_eq!(
            two_row_x_alpha(&k1, &WeightMap(vec![2])).unwrap(),
            rp(&[(1, 1, 1, 1)])
        );
        // The case-(i) image of the all-ones map on the claw.
        let img = WeightMap(vec![0, 2, 1, 1]);
        assert_eq!(
            two_row_x_alpha(&claw, &img).unwrap(),
            rp(&[(3, 1, 1, 1), (2, 2, 1, 1)])
        );
        assert_eq!(
            two_row_x_alpha_by_components(&claw, &img).unwrap(),
            two_row_x_alpha(&claw, &img).unwrap()
        );
        assert!(two_row_x_alpha(&claw, &WeightMap(vec![0, 26, 0, 0])).is_err());
    }

    #[test]
    fn block_size_route() {
        let claw = Graph::star(3);
        for alpha in [
            vec![1, 1, 1, 1],
            vec![0, 2, 1, 1],
            vec![1, 1, 0, 1],
            vec![0, 2, 2, 2],
            vec![2, 1, 0, 0],
            vec![0, 0, 3, 0],
        ] {
            let alpha = WeightMap(alpha);
            assert_eq!(
                two_row_x_alpha_fast(&claw, &alpha).unwrap(),
                two_row_x_alpha(&claw, &alpha).unwrap(),
                "{alpha}"
            );
        }
        for g in [
            Graph::cycle(5),
            Graph::cycle(6),
            Graph::path(5),
            Graph::empty(3),
            Graph::empty(0),
        ] {
            assert_eq!(two_row_x_fast(&g).unwrap(), two_row_x(&g).unwrap());
        }
        assert!(two_row_x_fast(&Graph::empty(64)).is_err());
    }

    #[test]
    fn y_fast_path() {
        let y = two_row_y_fast(&Graph::star(3));
        assert_eq!(y.get(2, 2), rational(5));
        assert_eq!(y.get(2, 1), rational(11));
        assert_eq!(y.get(3, 1), rational(4));
        assert_eq!(y.get(5, 0), rational(0));
        let y = two_row_y_fast(&Graph::empty(1));
        assert_eq!(y.get(1, 1), rational(1));
        assert_eq!(y, rp(&[(0, 0, 1, 1), (1, 0, 1, 1), (1, 1, 1, 1)]));
    }

    #[test]
    fn y_oracle_matches_fast_path() {
        assert_eq!(
            two_row_y_oracle(&Graph::star(3), 0).unwrap(),
            Profile::one()
        );
        for d in 0..=5 {
            assert_eq!(
                two_row_y_oracle(&Graph::star(3), d).unwrap(),
                two_row_y_fast(&Graph::star(3)).slice(d),
                "claw, degree {d}"
            );
        }
        let k2 = two_row_y_oracle(&Graph::complete(2), 2).unwrap();
        assert_eq!(k2.get(1, 1), rational(4));
        assert_eq!(k2, two_row_y_fast(&Graph::complete(2)).slice(2));
        assert!(two_row_y_oracle(&Graph::empty(11), 1).is_err());
        assert!(two_row_y_oracle(&Graph::empty(2), 13).is_err());
    }

    #[test]
    fn compositions() {
        let k1: Vec<_> = enumerate_weight_maps(&Graph::empty(1), 3)
            .unwrap()
            .collect();
        assert_eq!(k1, vec![WeightMap(vec![3])]);
        let k2: Vec<_> = enumerate_weight_maps(&Graph::complete(2), 1)
            .unwrap()
            .collect();
        assert_eq!(k2, vec![WeightMap(vec![1, 0]), WeightMap(vec![0, 1])]);
        assert_eq!(
            enumerate_weight_maps(&Graph::path(3), 2).unwrap().count(),
            6
        );
        assert_eq!(Compositions::new(0, 0).count(), 1);
        assert_eq!(Compositions::new(0, 2).count(), 0);
        assert_eq!(Compositions::new(4, 5).count(), 56);
    }
}
