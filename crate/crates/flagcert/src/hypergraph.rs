//! 3-uniform hypergraphs on small labeled vertex sets.
//!
//! Vertices are 1-based (`1..=n`, n ≤ 9) and an edge is a sorted triple of
//! distinct vertices. A graph stores its edge sequence sorted
//! lexicographically, and graphs are compared by that flattened sequence
//! (shorter prefix first). Isomorphism is decided through canonical forms:
//! the lexicographically minimal relabeling over all n! vertex
//! permutations.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Largest supported vertex count.
pub const MAX_VERTICES: u8 = 9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count {0} exceeds supported maximum {MAX_VERTICES}")]
    TooManyVertices(u8),
    #[error("edge {{{0}, {1}, {2}}} is not a set of 3 distinct vertices in 1..={3}")]
    BadEdge(u8, u8, u8, u8),
    #[error("duplicate edge {{{0}, {1}, {2}}}")]
    DuplicateEdge(u8, u8, u8),
    #[error("vertex subset contains a duplicate or out-of-range vertex {0}")]
    BadSubset(u8),
    #[error("vertex count {0} outside the supported enumeration range 1..={1}")]
    SizeGuard(u8, u8),
    #[error("malformed graph line: {0}")]
    Parse(String),
}

/// A sorted triple of distinct 1-based vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple([u8; 3]);

impl Triple {
    /// Builds a triple, sorting the vertices. Fails on repeats, zeroes, or
    /// vertices above `n`.
    pub fn new(a: u8, b: u8, c: u8, n: u8) -> Result<Triple, GraphError> {
        let mut v = [a, b, c];
        v.sort_unstable();
        if v[0] == 0 || v[2] > n || v[0] == v[1] || v[1] == v[2] {
            return Err(GraphError::BadEdge(a, b, c, n));
        }
        Ok(Triple(v))
    }

    pub fn vertices(&self) -> [u8; 3] {
        self.0
    }

    pub fn contains(&self, v: u8) -> bool {
        self.0.contains(&v)
    }

    pub fn contains_pair(&self, x: u8, y: u8) -> bool {
        self.contains(x) && self.contains(y)
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.0[0], self.0[1], self.0[2])
    }
}

/// Number of triples on `n` vertices, C(n, 3).
pub fn triple_count(n: u8) -> usize {
    let n = n as usize;
    n * n.saturating_sub(1) * n.saturating_sub(2) / 6
}

/// Rank of a sorted triple in the lexicographic order of all triples of
/// `1..=n`: (1,2,3) has rank 0, (1,2,4) rank 1, and so on.
pub fn triple_index(n: u8, t: Triple) -> usize {
    let [a, b, c] = t.vertices();
    let (n, a, b, c) = (n as usize, a as usize, b as usize, c as usize);
    let mut idx = 0;
    for a2 in 1..a {
        idx += (n - a2) * (n - a2 - 1) / 2;
    }
    for b2 in a + 1..b {
        idx += n - b2;
    }
    idx + c - b - 1
}

/// All triples of `1..=n` in lexicographic order.
pub fn all_triples(n: u8) -> Vec<Triple> {
    let mut out = Vec::with_capacity(triple_count(n));
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                out.push(Triple([a, b, c]));
            }
        }
    }
    out
}

/// A 3-graph on the vertex set `1..=n`.
///
/// The edge sequence is strictly increasing in lexicographic order; this is
/// an invariant of every constructed value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ThreeGraph {
    n: u8,
    edges: Vec<Triple>,
}

impl ThreeGraph {
    pub fn new(n: u8, edges: &[(u8, u8, u8)]) -> Result<ThreeGraph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut es = Vec::with_capacity(edges.len());
        for &(a, b, c) in edges {
            es.push(Triple::new(a, b, c, n)?);
        }
        es.sort_unstable();
        for w in es.windows(2) {
            if w[0] == w[1] {
                let [a, b, c] = w[0].vertices();
                return Err(GraphError::DuplicateEdge(a, b, c));
            }
        }
        Ok(ThreeGraph { n, edges: es })
    }

    pub fn from_triples(n: u8, mut edges: Vec<Triple>) -> Result<ThreeGraph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                let [a, b, c] = w[0].vertices();
                return Err(GraphError::DuplicateEdge(a, b, c));
            }
        }
        for t in &edges {
            let [a, b, c] = t.vertices();
            if t.vertices()[2] > n {
                return Err(GraphError::BadEdge(a, b, c, n));
            }
        }
        Ok(ThreeGraph { n, edges })
    }

    pub fn empty(n: u8) -> ThreeGraph {
        assert!(n <= MAX_VERTICES);
        ThreeGraph { n, edges: Vec::new() }
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn edges(&self) -> &[Triple] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, t: Triple) -> bool {
        self.edges.binary_search(&t).is_ok()
    }

    pub fn has_edge_verts(&self, a: u8, b: u8, c: u8) -> bool {
        match Triple::new(a, b, c, self.n) {
            Ok(t) => self.has_edge(t),
            Err(_) => false,
        }
    }

    /// Edge set as a bitmask; bit `triple_index(n, t)` is set iff `t` is an
    /// edge. Only meaningful relative to this graph's `n`.
    pub fn mask(&self) -> u128 {
        let mut m = 0u128;
        for &t in &self.edges {
            m |= 1u128 << triple_index(self.n, t);
        }
        m
    }

    pub fn from_mask(n: u8, mask: u128) -> ThreeGraph {
        let ts = all_triples(n);
        let edges = ts
            .into_iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, t)| t)
            .collect();
        ThreeGraph { n, edges }
    }

    /// True iff no 4 vertices span 3 or more edges.
    pub fn is_k4minus_free(&self) -> bool {
        let n = self.n;
        for a in 1..=n {
            for b in a + 1..=n {
                for c in b + 1..=n {
                    for d in c + 1..=n {
                        let cnt = self.has_edge(Triple([a, b, c])) as u8
                            + self.has_edge(Triple([a, b, d])) as u8
                            + self.has_edge(Triple([a, c, d])) as u8
                            + self.has_edge(Triple([b, c, d])) as u8;
                        if cnt >= 3 {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Applies a vertex permutation: `perm[v - 1]` is the new label of `v`.
    pub fn relabel(&self, perm: &[u8]) -> ThreeGraph {
        debug_assert_eq!(perm.len(), self.n as usize);
        let mut edges: Vec<Triple> = self
            .edges
            .iter()
            .map(|t| {
                let [a, b, c] = t.vertices();
                let mut v = [
                    perm[a as usize - 1],
                    perm[b as usize - 1],
                    perm[c as usize - 1],
                ];
                v.sort_unstable();
                Triple(v)
            })
            .collect();
        edges.sort_unstable();
        ThreeGraph { n: self.n, edges }
    }

    /// Keeps the edges inside `vertices` and relabels the chosen vertices
    /// `1..=|vertices|` in the given order.
    pub fn induced_subgraph(&self, vertices: &[u8]) -> Result<ThreeGraph, GraphError> {
        let mut pos = [0u8; MAX_VERTICES as usize + 1];
        for (i, &v) in vertices.iter().enumerate() {
            if v == 0 || v > self.n {
                return Err(GraphError::BadSubset(v));
            }
            if pos[v as usize] != 0 {
                return Err(GraphError::BadSubset(v));
            }
            pos[v as usize] = i as u8 + 1;
        }
        let mut edges = Vec::new();
        for t in &self.edges {
            let [a, b, c] = t.vertices();
            let (x, y, z) = (pos[a as usize], pos[b as usize], pos[c as usize]);
            if x != 0 && y != 0 && z != 0 {
                let mut v = [x, y, z];
                v.sort_unstable();
                edges.push(Triple(v));
            }
        }
        edges.sort_unstable();
        Ok(ThreeGraph { n: vertices.len() as u8, edges })
    }

    /// Number of edges containing both `x` and `y`.
    pub fn codegree(&self, x: u8, y: u8) -> usize {
        self.edges.iter().filter(|t| t.contains_pair(x, y)).count()
    }

    /// Minimum codegree over all vertex pairs; 0 when n < 2.
    pub fn min_codegree(&self) -> usize {
        let mut min = usize::MAX;
        for x in 1..=self.n {
            for y in x + 1..=self.n {
                min = min.min(self.codegree(x, y));
            }
        }
        if min == usize::MAX {
            0
        } else {
            min
        }
    }

    /// Link of `v` as a 2-graph edge list on the remaining labels.
    pub fn link(&self, v: u8) -> Vec<(u8, u8)> {
        let mut out = Vec::new();
        for t in &self.edges {
            if t.contains(v) {
                let rest: Vec<u8> = t.vertices().iter().copied().filter(|&w| w != v).collect();
                out.push((rest[0], rest[1]));
            }
        }
        out
    }

    /// Lexicographically least relabeling over all n! vertex permutations.
    pub fn canonical_form(&self) -> CanonicalForm {
        let own = self.mask();
        let mut best = own;
        let maps = triple_maps_buf(self.n);
        let mut scratch: Vec<u8> = (1..=self.n).collect();
        for_each_permutation(&mut scratch, &mut |perm| {
            let mapped = apply_perm_mask(self, perm, &maps);
            if seq_less_equal_card(mapped, best) {
                best = mapped;
            }
        });
        CanonicalForm::from_graph(ThreeGraph::from_mask(self.n, best))
    }

    /// True iff the graph equals its own canonical form.
    pub fn is_canonical(&self) -> bool {
        let own = self.mask();
        let maps = triple_maps_buf(self.n);
        let mut scratch: Vec<u8> = (1..=self.n).collect();
        let mut minimal = true;
        for_each_permutation(&mut scratch, &mut |perm| {
            if minimal {
                let mapped = apply_perm_mask(self, perm, &maps);
                if seq_less_equal_card(mapped, own) {
                    minimal = false;
                }
            }
        });
        minimal
    }
}

/// Graphs compare by their flattened edge sequences, shorter prefix first;
/// graphs on fewer vertices come first.
impl Ord for ThreeGraph {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.edges.cmp(&other.edges))
    }
}

impl PartialOrd for ThreeGraph {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ThreeGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.n)?;
        for t in &self.edges {
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl FromStr for ThreeGraph {
    type Err = GraphError;

    /// Parses the graph line format `n:abcabc...`, e.g. `4:123124134`.
    fn from_str(s: &str) -> Result<Self, GraphError> {
        let (head, body) = s
            .split_once(':')
            .ok_or_else(|| GraphError::Parse(format!("missing ':' in {s:?}")))?;
        let n: u8 = head
            .parse()
            .map_err(|_| GraphError::Parse(format!("bad vertex count in {s:?}")))?;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let digits: Vec<u8> = body
            .chars()
            .map(|ch| {
                ch.to_digit(10)
                    .map(|d| d as u8)
                    .ok_or_else(|| GraphError::Parse(format!("bad digit {ch:?} in {s:?}")))
            })
            .collect::<Result<_, _>>()?;
        if digits.len() % 3 != 0 {
            return Err(GraphError::Parse(format!(
                "edge digits not a multiple of 3 in {s:?}"
            )));
        }
        let edges: Vec<(u8, u8, u8)> = digits.chunks(3).map(|c| (c[0], c[1], c[2])).collect();
        let g = ThreeGraph::new(n, &edges)?;
        if g.edges
            != edges
                .iter()
                .map(|&(a, b, c)| Triple([a, b, c]))
                .collect::<Vec<_>>()
        {
            return Err(GraphError::Parse(format!(
                "triples not sorted lexicographically in {s:?}"
            )));
        }
        Ok(g)
    }
}

/// A graph that is lexicographically minimal within its isomorphism class,
/// together with its total-order comparison key.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    graph: ThreeGraph,
    key: (u8, usize, Vec<u8>),
}

impl CanonicalForm {
    fn from_graph(graph: ThreeGraph) -> CanonicalForm {
        let mut flat = Vec::with_capacity(graph.edge_count() * 3);
        for t in graph.edges() {
            flat.extend_from_slice(&t.vertices());
        }
        let key = (graph.n(), graph.edge_count(), flat);
        CanonicalForm { graph, key }
    }

    pub fn graph(&self) -> &ThreeGraph {
        &self.graph
    }

    /// (vertex count, edge count, flattened edge sequence).
    pub fn key(&self) -> &(u8, usize, Vec<u8>) {
        &self.key
    }

    pub fn into_graph(self) -> ThreeGraph {
        self.graph
    }
}

impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key.cmp(&other.key)
    }
}

impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// True iff the two graphs have identical canonical forms.
pub fn are_isomorphic(g1: &ThreeGraph, g2: &ThreeGraph) -> bool {
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return false;
    }
    g1.canonical_form() == g2.canonical_form()
}

/// Sequence order for two edge sets of the same cardinality on the same
/// vertex count: the side owning the smallest differing triple is smaller.
#[inline]
fn seq_less_equal_card(a: u128, b: u128) -> bool {
    let x = a ^ b;
    x != 0 && a & (x & x.wrapping_neg()) != 0
}

/// Calls `f` with every permutation of the scratch slice (Heap's algorithm).
pub fn for_each_permutation(scratch: &mut [u8], f: &mut impl FnMut(&[u8])) {
    fn rec(k: usize, arr: &mut [u8], f: &mut impl FnMut(&[u8])) {
        if k <= 1 {
            f(arr);
            return;
        }
        for i in 0..k {
            rec(k - 1, arr, f);
            if k % 2 == 0 {
                arr.swap(i, k - 1);
            } else {
                arr.swap(0, k - 1);
            }
        }
    }
    let k = scratch.len();
    rec(k, scratch, f);
}

/// All permutations of `1..=n` as explicit vectors.
pub fn permutations(n: u8) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut scratch: Vec<u8> = (1..=n).collect();
    for_each_permutation(&mut scratch, &mut |p| out.push(p.to_vec()));
    out
}

/// triple -> vertex-expanded lookup used when remapping masks.
fn triple_maps_buf(n: u8) -> Vec<Triple> {
    all_triples(n)
}

#[inline]
fn apply_perm_mask(g: &ThreeGraph, perm: &[u8], _triples: &[Triple]) -> u128 {
    let mut m = 0u128;
    for t in g.edges() {
        let [a, b, c] = t.vertices();
        let mut v = [
            perm[a as usize - 1],
            perm[b as usize - 1],
            perm[c as usize - 1],
        ];
        v.sort_unstable();
        m |= 1u128 << triple_index(g.n(), Triple(v));
    }
    m
}

/// Precomputed permutation tables for one vertex count: for permutation `p`
/// and triple index `t`, `map[p][t]` is the index of the relabeled triple.
pub struct PermTables {
    n: u8,
    maps: Vec<Vec<u8>>,
}

impl PermTables {
    pub fn new(n: u8) -> PermTables {
        let ts = all_triples(n);
        let perms = permutations(n);
        let maps = perms
            .iter()
            .map(|perm| {
                ts.iter()
                    .map(|t| {
                        let [a, b, c] = t.vertices();
                        let mut v = [
                            perm[a as usize - 1],
                            perm[b as usize - 1],
                            perm[c as usize - 1],
                        ];
                        v.sort_unstable();
                        triple_index(n, Triple(v)) as u8
                    })
                    .collect()
            })
            .collect();
        PermTables { n, maps }
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    /// True iff no relabeling of the edge set given by `edge_indices` is
    /// lexicographically smaller.
    pub fn is_lex_minimal(&self, mask: u128, edge_indices: &[u8]) -> bool {
        for map in &self.maps {
            let mut mapped = 0u128;
            for &t in edge_indices {
                mapped |= 1u128 << map[t as usize];
            }
            if seq_less_equal_card(mapped, mask) {
                return false;
            }
        }
        true
    }

    /// Mask of the lexicographically least relabeling of the given edge set.
    pub fn canonical_mask(&self, mask: u128, edge_indices: &[u8]) -> u128 {
        let mut best = mask;
        for map in &self.maps {
            let mut mapped = 0u128;
            for &t in edge_indices {
                mapped |= 1u128 << map[t as usize];
            }
            if seq_less_equal_card(mapped, best) {
                best = mapped;
            }
        }
        best
    }
}

/// Enumerates the canonical representatives of all K4⁻-free 3-graphs on
/// `k` vertices, in lexicographic order.
///
/// Each representative on `k − 1` vertices is extended by vertex `k` in
/// every K4⁻-free way; every extension is then canonicalized and the
/// resulting forms are deduplicated. (Filtering extensions down to the
/// lexicographically minimal ones, as one might hope, is not sound for
/// this order: a minimal k-vertex graph may restrict to a non-minimal
/// (k−1)-vertex graph. Canonicalizing every extension is complete, since
/// any graph can be relabeled so that its first k−1 vertices induce a
/// canonical graph.)
pub fn enumerate_free(k: u8) -> Result<Vec<ThreeGraph>, GraphError> {
    if k == 0 || k > 7 {
        return Err(GraphError::SizeGuard(k, 7));
    }
    let mut level: Vec<ThreeGraph> = vec![ThreeGraph::empty(1)];
    for size in 2..=k {
        level = extend_level(&level, size);
    }
    Ok(level)
}

fn extend_level(parents: &[ThreeGraph], k: u8) -> Vec<ThreeGraph> {
    use rayon::prelude::*;
    use std::collections::HashSet;
    let tables = PermTables::new(k);
    let forms: HashSet<u128> = parents
        .par_iter()
        .map(|parent| extensions_of(parent, k, &tables))
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    let mut accepted: Vec<ThreeGraph> =
        forms.into_iter().map(|m| ThreeGraph::from_mask(k, m)).collect();
    accepted.sort_unstable();
    accepted
}

/// Canonical forms of all K4⁻-free extensions of one parent by vertex `k`.
fn extensions_of(parent: &ThreeGraph, k: u8, tables: &PermTables) -> std::collections::HashSet<u128> {
    let m = k - 1;
    let pairs: Vec<(u8, u8)> = (1..=m)
        .flat_map(|i| (i + 1..=m).map(move |j| (i, j)))
        .collect();
    // cnt[t] tracks, for the 4-set {a,b,c,k}, how many of its candidate
    // edges are present so far; reaching 3 violates K4⁻-freeness.
    let mut cnt = vec![0u8; triple_count(m)];
    let parent_triples = all_triples(m);
    for (i, t) in parent_triples.iter().enumerate() {
        if parent.has_edge(*t) {
            cnt[i] = 1;
        }
    }
    let mut chosen: Vec<(u8, u8)> = Vec::new();
    let mut out = std::collections::HashSet::new();
    dfs_extensions(parent, k, &pairs, 0, &mut cnt, &mut chosen, tables, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn dfs_extensions(
    parent: &ThreeGraph,
    k: u8,
    pairs: &[(u8, u8)],
    depth: usize,
    cnt: &mut [u8],
    chosen: &mut Vec<(u8, u8)>,
    tables: &PermTables,
    out: &mut std::collections::HashSet<u128>,
) {
    if depth == pairs.len() {
        let mut edges: Vec<Triple> = parent.edges().to_vec();
        edges.extend(chosen.iter().map(|&(i, j)| Triple([i, j, k])));
        edges.sort_unstable();
        let g = ThreeGraph { n: k, edges };
        let idxs: Vec<u8> = g
            .edges()
            .iter()
            .map(|t| triple_index(k, *t) as u8)
            .collect();
        out.insert(tables.canonical_mask(g.mask(), &idxs));
        return;
    }

    // Branch 1: leave the pair out.
    dfs_extensions(parent, k, pairs, depth + 1, cnt, chosen, tables, out);

    // Branch 2: add edge {i, j, k}; bump every 4-set {i, j, v, k}.
    let (i, j) = pairs[depth];
    let m = k - 1;
    let mut touched: Vec<usize> = Vec::with_capacity(m as usize - 2);
    let mut ok = true;
    for v in 1..=m {
        if v == i || v == j {
            continue;
        }
        let mut s = [i, j, v];
        s.sort_unstable();
        let ti = triple_index(m, Triple(s));
        cnt[ti] += 1;
        touched.push(ti);
        if cnt[ti] >= 3 {
            ok = false;
            break;
        }
    }
    if ok {
        chosen.push((i, j));
        dfs_extensions(parent, k, pairs, depth + 1, cnt, chosen, tables, out);
        chosen.pop();
    }
    for ti in touched {
        cnt[ti] -= 1;
    }
}

/// Iterates over all `k`-element subsets of `1..=n` in lexicographic order.
pub fn for_each_subset(n: u8, k: u8, f: &mut impl FnMut(&[u8])) {
    if k > n {
        return;
    }
    let k = k as usize;
    let mut idx: Vec<u8> = (1..=k as u8).collect();
    loop {
        f(&idx);
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] < n - (k - 1 - i) as u8 {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: canonicalize by relabeling through `relabel` and
    /// keeping the smallest edge vector, no masks involved.
    pub(crate) fn naive_canonical(g: &ThreeGraph) -> ThreeGraph {
        let mut best: Option<ThreeGraph> = None;
        for perm in permutations(g.n()) {
            let h = g.relabel(&perm);
            if best.as_ref().map_or(true, |b| h.edges() < b.edges()) {
                best = Some(h);
            }
        }
        best.unwrap()
    }

    fn g(n: u8, edges: &[(u8, u8, u8)]) -> ThreeGraph {
        ThreeGraph::new(n, edges).unwrap()
    }

    fn k4_minus() -> ThreeGraph {
        g(4, &[(1, 2, 3), (1, 2, 4), (1, 3, 4)])
    }

    #[test]
    fn construction_validates() {
        assert!(ThreeGraph::new(4, &[(1, 1, 2)]).is_err());
        assert!(ThreeGraph::new(4, &[(1, 2, 5)]).is_err());
        assert!(ThreeGraph::new(4, &[(1, 2, 3), (3, 2, 1)]).is_err());
        assert!(ThreeGraph::new(10, &[]).is_err());
        let h = g(4, &[(4, 2, 1), (1, 2, 3)]);
        assert_eq!(h.edges()[0], Triple([1, 2, 3]));
        assert_eq!(h.edges()[1], Triple([1, 2, 4]));
    }

    #[test]
    fn triple_index_is_lex_rank() {
        for n in 3..=MAX_VERTICES {
            for (i, t) in all_triples(n).iter().enumerate() {
                assert_eq!(triple_index(n, *t), i);
            }
            assert_eq!(all_triples(n).len(), triple_count(n));
        }
    }

    #[test]
    fn k4minus_detection() {
        assert!(ThreeGraph::empty(7).is_k4minus_free());
        assert!(!k4_minus().is_k4minus_free());
        // two edges on four vertices stay free
        assert!(g(4, &[(1, 2, 3), (1, 2, 4)]).is_k4minus_free());
    }

    #[test]
    fn canonical_single_edge() {
        let h = g(7, &[(2, 5, 7)]);
        assert_eq!(h.canonical_form().graph(), &g(7, &[(1, 2, 3)]));
    }

    #[test]
    fn canonical_two_edge_configurations_agree() {
        // {abc, abd} and {abc, bcd} on 4 vertices are the same class.
        let a = g(4, &[(1, 2, 3), (1, 2, 4)]);
        let b = g(4, &[(1, 2, 3), (2, 3, 4)]);
        assert_eq!(a.canonical_form(), b.canonical_form());
        assert_eq!(naive_canonical(&a), naive_canonical(&b));
        assert_eq!(a.canonical_form().graph(), &naive_canonical(&a));
    }

    #[test]
    fn canonical_matches_naive_oracle_on_random_graphs() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..=6);
            let ts = all_triples(n);
            let edges: Vec<Triple> = ts.iter().copied().filter(|_| rng.gen_bool(0.3)).collect();
            let h = ThreeGraph::from_triples(n, edges).unwrap();
            assert_eq!(h.canonical_form().graph(), &naive_canonical(&h));
        }
    }

    #[test]
    fn canonicalization_idempotent_and_permutation_invariant() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let n = rng.gen_range(1..=7);
            let ts = all_triples(n);
            let edges: Vec<Triple> = ts.iter().copied().filter(|_| rng.gen_bool(0.25)).collect();
            let h = ThreeGraph::from_triples(n, edges).unwrap();
            let c = h.canonical_form();
            assert_eq!(c.graph().canonical_form(), c);
            let mut perm: Vec<u8> = (1..=n).collect();
            perm.shuffle(&mut rng);
            assert_eq!(h.relabel(&perm).canonical_form(), c);
        }
    }

    #[test]
    fn isomorphism_examples() {
        let h = k4_minus();
        assert!(are_isomorphic(&h, &h));
        assert!(!are_isomorphic(&h, &g(4, &[(1, 2, 3), (1, 2, 4)])));
        // two edges sharing one vertex, differently labeled
        let a = g(5, &[(1, 2, 3), (1, 4, 5)]);
        let b = g(5, &[(1, 2, 3), (2, 4, 5)]);
        assert!(are_isomorphic(&a, &b));
        assert_eq!(naive_canonical(&a), naive_canonical(&b));
    }

    #[test]
    fn induced_subgraph_examples() {
        let h = k4_minus();
        let full: Vec<u8> = (1..=4).collect();
        assert_eq!(h.induced_subgraph(&full).unwrap(), h);
        assert_eq!(
            h.induced_subgraph(&[1, 2, 3]).unwrap(),
            g(3, &[(1, 2, 3)])
        );
        assert!(h.induced_subgraph(&[1, 1, 2]).is_err());
        assert!(h.induced_subgraph(&[1, 2, 9]).is_err());
        // order matters: it defines the relabeling
        let e = g(4, &[(1, 2, 4)]);
        assert_eq!(e.induced_subgraph(&[4, 2, 1]).unwrap(), g(3, &[(1, 2, 3)]));
    }

    #[test]
    fn enumerate_small_counts() {
        assert_eq!(enumerate_free(1).unwrap().len(), 1);
        assert_eq!(enumerate_free(2).unwrap().len(), 1);
        assert_eq!(enumerate_free(3).unwrap().len(), 2);
        assert_eq!(enumerate_free(4).unwrap().len(), 3);
        assert!(enumerate_free(0).is_err());
        assert!(enumerate_free(8).is_err());
    }

    #[test]
    fn enumeration_is_sound_and_sorted() {
        for k in 1..=6 {
            let list = enumerate_free(k).unwrap();
            for w in list.windows(2) {
                assert!(w[0] < w[1]);
            }
            for h in &list {
                assert!(h.is_k4minus_free());
                assert!(h.is_canonical());
            }
        }
    }

    #[test]
    fn enumeration_complete_up_to_five_vertices() {
        // Independent generation: every labeled 3-graph, filtered and
        // bucketed by canonical form.
        for k in 1..=5u8 {
            let ts = all_triples(k);
            let mut classes = std::collections::HashSet::new();
            for mask in 0u32..1 << ts.len() {
                let edges: Vec<Triple> = ts
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, t)| *t)
                    .collect();
                let h = ThreeGraph::from_triples(k, edges).unwrap();
                if h.is_k4minus_free() {
                    classes.insert(naive_canonical(&h));
                }
            }
            assert_eq!(classes.len(), enumerate_free(k).unwrap().len(), "k = {k}");
        }
    }

    #[test]
    fn display_round_trip() {
        let h = k4_minus();
        assert_eq!(h.to_string(), "4:123124134");
        assert_eq!("4:123124134".parse::<ThreeGraph>().unwrap(), h);
        assert_eq!("7:".parse::<ThreeGraph>().unwrap(), ThreeGraph::empty(7));
        assert!("4:123124134x".parse::<ThreeGraph>().is_err());
        assert!("4:124123".parse::<ThreeGraph>().is_err());
    }

    #[test]
    fn subset_iteration() {
        let mut seen = Vec::new();
        for_each_subset(4, 2, &mut |s| seen.push(s.to_vec()));
        assert_eq!(
            seen,
            vec![
                vec![1, 2],
                vec![1, 3],
                vec![1, 4],
                vec![2, 3],
                vec![2, 4],
                vec![3, 4]
            ]
        );
    }
}
