//! Finite simple graphs with stable integer vertex labels, the graph
//! families used throughout the crate (spiders, pineapples, clan graphs),
//! and the structural predicates the positivity arguments rely on.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An immutable finite simple graph on the vertex set `0..n`.
///
/// Adjacency lists are kept sorted, so two graphs with the same edge set
/// compare equal regardless of how they were built. Display labels are
/// carried along but are not part of the structure; see
/// [`Graph::same_structure`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "GraphJson", try_from = "GraphJson")]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Option<BTreeMap<usize, String>>,
}

/// An induced subgraph together with the map from its vertices back to the
/// vertices of the graph it was cut from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    /// `origin[i]` is the parent vertex that became vertex `i`.
    pub origin: Vec<usize>,
}

/// The unique bipartition of a connected bipartite graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    /// The larger part first.
    pub parts: [Vec<usize>; 2],
}

impl Bipartition {
    /// Block sizes `(k, l)` with `k >= l`.
    pub fn block_type(&self) -> (usize, usize) {
        (self.parts[0].len(), self.parts[1].len())
    }

    /// Balanced means `k <= l + 1`.
    pub fn is_balanced(&self) -> bool {
        let (k, l) = self.block_type();
        k <= l + 1
    }
}

/// Outcome of a bipartiteness test on a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartiteness {
    Bipartite(Bipartition),
    /// Vertices of an odd cycle, in cyclic order.
    OddCycle(Vec<usize>),
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are merged.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::OutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj, labels: None })
    }

    fn from_adj(adj: Vec<Vec<usize>>) -> Self {
        Graph { adj, labels: None }
    }

    pub fn empty(n: usize) -> Self {
        Graph::from_adj(vec![Vec::new(); n])
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).expect("path edges are valid")
    }

    /// The cycle `C_n`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::new(n, &edges).expect("cycle edges are valid")
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).expect("clique edges are valid")
    }

    /// The star `K_{1,k}` with center 0.
    pub fn star(k: usize) -> Self {
        let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
        Graph::new(k + 1, &edges).expect("star edges are valid")
    }

    pub fn with_labels(mut self, labels: BTreeMap<usize, String>) -> Self {
        self.labels = if labels.is_empty() {
            None
        } else {
            Some(labels)
        };
        self
    }

    pub fn labels(&self) -> Option<&BTreeMap<usize, String>> {
        self.labels.as_ref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref()?.get(&v).map(String::as_str)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// `N[v]`, sorted.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut out = self.adj[v].clone();
        let at = out.binary_search(&v).unwrap_err();
        out.insert(at, v);
        out
    }

    /// Structural equality, ignoring labels.
    pub fn same_structure(&self, other: &Graph) -> bool {
        self.adj == other.adj
    }

    /// Induced subgraph on `keep`, relabeled in the order given.
    pub fn induced(&self, keep: &[usize]) -> Subgraph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                let mut list: Vec<usize> = self.adj[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect();
                list.sort_unstable();
                list
            })
            .collect();
        let labels = self.labels.as_ref().map(|labels| {
            keep.iter()
                .enumerate()
                .filter_map(|(i, v)| labels.get(v).map(|s| (i, s.clone())))
                .collect::<BTreeMap<_, _>>()
        });
        Subgraph {
            graph: Graph { adj, labels }.normalize_labels(),
            origin: keep.to_vec(),
        }
    }

    fn normalize_labels(mut self) -> Self {
        if self.labels.as_ref().is_some_and(BTreeMap::is_empty) {
            self.labels = None;
        }
        self
    }

    /// Deletes the vertex set `s`; the survivors keep their relative order.
    pub fn delete_vertices(&self, s: &[usize]) -> Result<Subgraph> {
        let mut gone = vec![false; self.n()];
        for &v in s {
            if v >= self.n() {
                return Err(Error::OutOfRange {
                    vertex: v,
                    n: self.n(),
                });
            }
            gone[v] = true;
        }
        let keep: Vec<usize> = (0..self.n()).filter(|&v| !gone[v]).collect();
        Ok(self.induced(&keep))
    }

    /// Component index of every vertex; components are numbered by their
    /// smallest vertex.
    pub fn component_ids(&self) -> (Vec<usize>, usize) {
        let mut comp = vec![usize::MAX; self.n()];
        let mut count = 0;
        let mut stack = Vec::new();
        for root in 0..self.n() {
            if comp[root] != usize::MAX {
                continue;
            }
            comp[root] = count;
            stack.push(root);
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn is_connected(&self) -> bool {
        self.component_ids().1 == 1
    }

    /// Connected components ordered by smallest original vertex.
    pub fn connected_components(&self) -> Vec<Subgraph> {
        let (comp, count) = self.component_ids();
        let mut members = vec![Vec::new(); count];
        for (v, &c) in comp.iter().enumerate() {
            members[c].push(v);
        }
        members.iter().map(|keep| self.induced(keep)).collect()
    }

    /// The unique bipartition of a connected graph, or an odd cycle.
    pub fn bipartition(&self) -> Result<Bipartiteness> {
        if !self.is_connected() {
            return Err(Error::NotConnected);
        }
        let n = self.n();
        let mut side = vec![u8::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        let mut queue = VecDeque::from([0]);
        side[0] = 0;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    return Ok(Bipartiteness::OddCycle(odd_cycle(&parent, &depth, u, w)));
                }
            }
        }
        let mut parts = [Vec::new(), Vec::new()];
        for v in 0..n {
            parts[side[v] as usize].push(v);
        }
        if parts[0].len() < parts[1].len() {
            parts.swap(0, 1);
        }
        Ok(Bipartiteness::Bipartite(Bipartition { parts }))
    }

    /// True when every component is bipartite.
    pub fn is_bipartite(&self) -> bool {
        self.connected_components()
            .iter()
            .all(|c| matches!(c.graph.bipartition(), Ok(Bipartiteness::Bipartite(_))))
    }

    /// An induced claw `[center, a, b, c]`, if one exists.
    pub fn claw_witness(&self) -> Option<[usize; 4]> {
        for center in 0..self.n() {
            let nb = &self.adj[center];
            for (i, &a) in nb.iter().enumerate() {
                for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                    if self.has_edge(a, b) {
                        continue;
                    }
                    for &c in &nb[j + 1..] {
                        if !self.has_edge(a, c) && !self.has_edge(b, c) {
                            return Some([center, a, b, c]);
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_claw_free(&self) -> bool {
        self.claw_witness().is_none()
    }

    /// Disjoint union; `other`'s vertices are shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|list| list.iter().map(|&w| w + shift).collect()),
        );
        Graph::from_adj(adj)
    }

    /// Adds one vertex adjacent to `nbrs`.
    pub fn with_vertex(&self, nbrs: &[usize]) -> Result<Graph> {
        let n = self.n();
        let mut edges = self.edges();
        edges.extend(nbrs.iter().map(|&u| (u, n)));
        Graph::new(n + 1, &edges)
    }

    /// Replaces each vertex `v` by a clique on `alpha(v)` vertices, joining
    /// the cliques of adjacent vertices completely. Vertices of weight zero
    /// disappear. The new vertices are ordered by parent vertex.
    pub fn clan_graph(&self, alpha: &WeightMap) -> Result<ClanGraph> {
        alpha.check_domain(self)?;
        let mut block = Vec::with_capacity(alpha.total());
        let mut first = Vec::with_capacity(self.n());
        for v in 0..self.n() {
            first.push(block.len());
            block.extend(std::iter::repeat_n(v, alpha[v]));
        }
        let adj = block
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let mut list: Vec<usize> = (first[v]..first[v] + alpha[v])
                    .filter(|&j| j != i)
                    .collect();
                for &w in &self.adj[v] {
                    list.extend(first[w]..first[w] + alpha[w]);
                }
                list.sort_unstable();
                list
            })
            .collect();
        Ok(ClanGraph {
            graph: Graph::from_adj(adj),
            block,
        })
    }
}

fn odd_cycle(parent: &[usize], depth: &[usize], mut u: usize, mut w: usize) -> Vec<usize> {
    let mut left = Vec::new();
    let mut right = Vec::new();
    while depth[u] > depth[w] {
        left.push(u);
        u = parent[u];
    }
    while depth[w] > depth[u] {
        right.push(w);
        w = parent[w];
    }
    while u != w {
        left.push(u);
        right.push(w);
        u = parent[u];
        w = parent[w];
    }
    left.push(u);
    left.extend(right.into_iter().rev());
    left
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

/// A clan graph with its block map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClanGraph {
    pub graph: Graph,
    /// `block[i]` is the original vertex that clan vertex `i` came from.
    pub block: Vec<usize>,
}

/// A map `V(G) -> N`, stored densely by vertex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightMap(pub Vec<usize>);

impl WeightMap {
    pub fn ones(n: usize) -> Self {
        WeightMap(vec![1; n])
    }

    pub fn zeros(n: usize) -> Self {
        WeightMap(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|alpha|`.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// `prod_v alpha(v)!`.
    pub fn factorial_product(&self) -> BigUint {
        let mut acc = BigUint::one();
        for &w in &self.0 {
            for k in 2..=w {
                acc *= k;
            }
        }
        acc
    }

    /// Keeps the weights on `vertices` and zeroes everything else.
    pub fn restrict(&self, vertices: &[usize]) -> WeightMap {
        let mut out = WeightMap::zeros(self.len());
        for &v in vertices {
            out.0[v] = self.0[v];
        }
        out
    }

    pub fn check_domain(&self, g: &Graph) -> Result<()> {
        if self.len() != g.n() {
            return Err(Error::DomainMismatch {
                expected: g.n(),
                got: self.len(),
            });
        }
        Ok(())
    }
}

impl std::ops::Index<usize> for WeightMap {
    type Output = usize;
    fn index(&self, v: usize) -> &usize {
        &self.0[v]
    }
}

impl std::ops::IndexMut<usize> for WeightMap {
    fn index_mut(&mut self, v: usize) -> &mut usize {
        &mut self.0[v]
    }
}

impl fmt::Display for WeightMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Leg lengths of a spider. Vertex 0 is the torso; leg `i` occupies a
/// contiguous run of `lambda[i]` vertices, ordered away from the torso,
/// and legs appear in the order of `lambda`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpiderShape {
    lambda: Vec<usize>,
    starts: Vec<usize>,
}

impl SpiderShape {
    pub fn new(lambda: &[usize]) -> Result<Self> {
        check_partition(lambda)?;
        Ok(Self::from_composition(lambda))
    }

    /// Same layout, but leg lengths need not be sorted (zero-length legs
    /// are allowed and occupy no vertices).
    pub(crate) fn from_composition(lengths: &[usize]) -> Self {
        let mut starts = Vec::with_capacity(lengths.len());
        let mut next = 1;
        for &len in lengths {
            starts.push(next);
            next += len;
        }
        SpiderShape {
            lambda: lengths.to_vec(),
            starts,
        }
    }

    pub fn lambda(&self) -> &[usize] {
        &self.lambda
    }

    pub fn legs(&self) -> usize {
        self.lambda.len()
    }

    pub fn leg_len(&self, leg: usize) -> usize {
        self.lambda[leg]
    }

    pub fn torso(&self) -> usize {
        0
    }

    /// Vertex at 0-based position `pos` of leg `leg`; position 0 is adjacent
    /// to the torso.
    pub fn leg_vertex(&self, leg: usize, pos: usize) -> usize {
        debug_assert!(pos < self.lambda[leg]);
        self.starts[leg] + pos
    }

    pub fn leg_vertices(&self, leg: usize) -> std::ops::Range<usize> {
        self.starts[leg]..self.starts[leg] + self.lambda[leg]
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.lambda.iter().sum::<usize>()
    }

    pub fn graph(&self) -> Graph {
        let mut edges = Vec::new();
        let mut labels = BTreeMap::new();
        labels.insert(0, "v0".to_string());
        for leg in 0..self.legs() {
            let mut prev = 0;
            for pos in 0..self.lambda[leg] {
                let v = self.leg_vertex(leg, pos);
                edges.push((prev, v));
                let name = if pos == 0 {
                    format!("v{}", leg + 1)
                } else {
                    format!("v{}.{}", leg + 1, pos + 1)
                };
                labels.insert(v, name);
                prev = v;
            }
        }
        Graph::new(self.vertex_count(), &edges)
            .expect("spider edges are valid")
            .with_labels(labels)
    }
}

pub fn check_partition(lambda: &[usize]) -> Result<()> {
    let ok = lambda.iter().all(|&p| p >= 1) && lambda.windows(2).all(|w| w[0] >= w[1]);
    if ok {
        Ok(())
    } else {
        Err(Error::NotAPartition(lambda.to_vec()))
    }
}

/// The spider `S(lambda)`.
pub fn make_spider(lambda: &[usize]) -> Result<Graph> {
    Ok(SpiderShape::new(lambda)?.graph())
}

/// The pineapple `Pi(n, lambda)`: `K_n` glued at one vertex to the torso of
/// `S(lambda)`. The torso (`u`) is vertex 0, the legs follow the spider
/// layout, and the other clique vertices `v1..v_{n-1}` come last.
pub fn make_pineapple(n: usize, lambda: &[usize]) -> Result<Graph> {
    if n == 0 {
        return Err(Error::ZeroClique);
    }
    let spider = SpiderShape::new(lambda)?;
    let base = spider.vertex_count();
    let mut edges = spider.graph().edges();
    let clique: Vec<usize> = std::iter::once(0).chain(base..base + n - 1).collect();
    for (i, &a) in clique.iter().enumerate() {
        for &b in &clique[i + 1..] {
            edges.push((a, b));
        }
    }
    let mut labels = BTreeMap::new();
    labels.insert(0, "u".to_string());
    for leg in 0..spider.legs() {
        for pos in 0..spider.leg_len(leg) {
            labels.insert(
                spider.leg_vertex(leg, pos),
                format!("l{}.{}", leg + 1, pos + 1),
            );
        }
    }
    for i in 1..n {
        labels.insert(base + i - 1, format!("v{i}"));
    }
    Ok(Graph::new(base + n - 1, &edges)?.with_labels(labels))
}

/// Wire format `{"n": .., "edges": [[u,v],..], "labels": {"0": ..}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<BTreeMap<String, String>>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            labels: g.labels.as_ref().map(|labels| {
                labels
                    .iter()
                    .map(|(k, v)| (k.to_string(), v.clone()))
                    .collect()
            }),
        }
    }
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> Self {
        GraphJson::from(&g)
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(json: GraphJson) -> Result<Graph> {
        let edges: Vec<_> = json.edges.iter().map(|e| (e[0], e[1])).collect();
        let g = Graph::new(json.n, &edges)?;
        let Some(raw) = json.labels else {
            return Ok(g);
        };
        let mut labels = BTreeMap::new();
        for (k, v) in raw {
            let vertex: usize = k
                .parse()
                .map_err(|_| Error::Parse(format!("bad label key {k:?}")))?;
            if vertex >= json.n {
                return Err(Error::OutOfRange { vertex, n: json.n });
            }
            labels.insert(vertex, v);
        }
        Ok(g.with_labels(labels))
    }
}

impl Graph {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphJson::from(self)).expect("graph serializes")
    }

    pub fn from_json(text: &str) -> Result<Graph> {
        let json: GraphJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Graph::try_from(json)
    }

    /// `"n m"` header followed by one `"u v"` line per edge.
    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n(), edges.len());
        for (u, v) in edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty edge list".into()))?;
        let [n, m] = parse_pair(header)?;
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            let [u, v] = parse_pair(line)?;
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::Parse(format!(
                "header announces {m} edges, found {}",
                edges.len()
            )));
        }
        Graph::new(n, &edges)
    }

    /// Edge set as a set, for order-insensitive comparisons.
    pub fn edge_set(&self) -> BTreeSet<(usize, usize)> {
        self.edges().into_iter().collect()
    }
}

fn parse_pair(line: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse(format!("expected two integers, got {line:?}")));
    }
    let mut out = [0; 2];
    for (slot, field) in out.iter_mut().zip(fields) {
        *slot = field
            .parse()
            .map_err(|_| Error::Parse(format!("not a nonnegative integer: {field:?}")))?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_normalizes_and_rejects() {
        let g = Graph::new(4, &[(1, 0), (0, 1), (2, 1), (2, 3)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert!(g.same_structure(&Graph::path(4)));
        assert_eq!(Graph::new(1, &[]).unwrap().n(), 1);
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(Error::OutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(Error::LoopEdge(1)));
        let claw = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(claw.same_structure(&Graph::star(3)));
    }

    #[test]
    fn spiders() {
        assert!(make_spider(&[1, 1, 1])
            .unwrap()
            .same_structure(&Graph::star(3)));
        let s = make_spider(&[3, 2, 2, 1]).unwrap();
        assert_eq!(s.n(), 9);
        assert_eq!(s.edge_count(), 8);
        assert_eq!(s.degree(0), 4);
        assert_eq!(s.label(0), Some("v0"));
        assert_eq!(s.label(1), Some("v1"));
        assert_eq!(s.label(4), Some("v2"));
        assert_eq!(s.label(8), Some("v4"));
        assert!(make_spider(&[]).unwrap().same_structure(&Graph::empty(1)));
        assert_eq!(make_spider(&[1, 2]), Err(Error::NotAPartition(vec![1, 2])));
        assert_eq!(make_spider(&[2, 0]), Err(Error::NotAPartition(vec![2, 0])));
    }

    #[test]
    fn pineapples() {
        assert!(make_pineapple(1, &[1, 1, 1])
            .unwrap()
            .same_structure(&Graph::star(3)));
        assert!(make_pineapple(2, &[])
            .unwrap()
            .same_structure(&Graph::complete(2)));
        let p = make_pineapple(6, &[3, 2, 2, 1]).unwrap();
        assert_eq!(p.n(), 14);
        assert_eq!(p.edge_count(), 8 + 15);
        assert_eq!(p.degree(0), 4 + 5);
        assert_eq!(p.label(0), Some("u"));
        assert_eq!(p.label(9), Some("v1"));
        assert_eq!(p.label(13), Some("v5"));
        assert_eq!(make_pineapple(0, &[1]), Err(Error::ZeroClique));
    }

    #[test]
    fn clan_graphs() {
        let k2 = Graph::complete(2);
        let c = k2.clan_graph(&WeightMap::ones(2)).unwrap();
        assert!(c.graph.same_structure(&k2));
        let c = k2.clan_graph(&WeightMap(vec![2, 1])).unwrap();
        assert!(c.graph.same_structure(&Graph::complete(3)));
        assert_eq!(c.block, vec![0, 0, 1]);
        let c = Graph::path(3)
            .clan_graph(&WeightMap(vec![1, 0, 1]))
            .unwrap();
        assert!(c.graph.same_structure(&Graph::empty(2)));
        assert!(k2.clan_graph(&WeightMap(vec![1])).is_err());
    }

    #[test]
    fn deletion_and_components() {
        let p3 = Graph::path(4).delete_vertices(&[0]).unwrap();
        assert!(p3.graph.same_structure(&Graph::path(3)));
        assert_eq!(p3.origin, vec![1, 2, 3]);
        let claw = Graph::star(3);
        let gone = claw.delete_vertices(&claw.closed_neighborhood(0)).unwrap();
        assert_eq!(gone.graph.n(), 0);
        assert!(Graph::path(2).delete_vertices(&[2]).is_err());

        let s = make_spider(&[3, 2, 2, 1]).unwrap();
        let legs = s
            .delete_vertices(&[0])
            .unwrap()
            .graph
            .connected_components();
        let sizes: Vec<usize> = legs.iter().map(|c| c.graph.n()).collect();
        assert_eq!(sizes, vec![3, 2, 2, 1]);
        for c in &legs {
            assert!(c.graph.same_structure(&Graph::path(c.graph.n())));
        }

        let g = Graph::path(3).disjoint_union(&Graph::complete(2));
        let comps = g.connected_components();
        assert_eq!(comps.len(), 2);
        assert!(comps[0].graph.same_structure(&Graph::path(3)));
        assert!(comps[1].graph.same_structure(&Graph::complete(2)));
        assert_eq!(comps[1].origin, vec![3, 4]);
        assert_eq!(Graph::empty(1).connected_components().len(), 1);
        assert!(Graph::empty(0).connected_components().is_empty());
    }

    #[test]
    fn bipartitions() {
        let typ = |g: &Graph| match g.bipartition().unwrap() {
            Bipartiteness::Bipartite(b) => Some(b.block_type()),
            Bipartiteness::OddCycle(_) => None,
        };
        assert_eq!(typ(&Graph::star(3)), Some((3, 1)));
        assert_eq!(typ(&Graph::path(4)), Some((2, 2)));
        assert_eq!(typ(&Graph::complete(1)), Some((1, 0)));
        assert_eq!(typ(&Graph::complete(3)), None);
        assert_eq!(Graph::empty(2).bipartition(), Err(Error::NotConnected));

        let Bipartiteness::OddCycle(cycle) = Graph::cycle(7).bipartition().unwrap() else {
            panic!("C7 is not bipartite");
        };
        assert_eq!(cycle.len() % 2, 1);
        let c7 = Graph::cycle(7);
        for i in 0..cycle.len() {
            assert!(c7.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]));
        }
    }

    #[test]
    fn claws() {
        assert!(Graph::path(5).is_claw_free());
        assert_eq!(Graph::star(3).claw_witness(), Some([0, 1, 2, 3]));
        assert!(Graph::cycle(6).is_claw_free());
        assert!(!make_spider(&[2, 2, 1]).unwrap().is_claw_free());
    }

    #[test]
    fn wire_formats() {
        let s = make_spider(&[2, 1, 1]).unwrap();
        let json = s.to_json();
        assert_eq!(Graph::from_json(&json).unwrap(), s);
        assert_eq!(Graph::from_json(&json).unwrap().to_json(), json);
        let text = Graph::cycle(5).to_edge_list();
        assert_eq!(text, "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
        assert_eq!(Graph::from_edge_list(&text).unwrap().to_edge_list(), text);
        assert!(matches!(
            Graph::from_edge_list("3 2\n0 1\n"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(Graph::from_edge_list("x"), Err(Error::Parse(_))));
        assert!(matches!(
            Graph::from_json("{\"n\": 2"),
            Err(Error::Parse(_))
        ));
    }
}
