//! Lower-bound constructions: H₆ blow-ups seeded with tournament
//! constructions, vertex deletion from doubly regular tournaments, and
//! reproducible random tournaments.
//!
//! Blow-ups live on up to 200 vertices, beyond the 9-vertex cap of
//! [`ThreeGraph`], so they use their own triple-system type with exact
//! codegree reporting and an exhaustive K4⁻-freeness check (guarded at 60
//! vertices). All randomness comes from ChaCha8 seeded through splitmix64,
//! with per-part seeds derived from the part index path, so every output
//! is a pure function of (n, depth, seed).

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::hypergraph::ThreeGraph;
use crate::tournaments::{cyclic_codegrees, pair_count, Tournament, TournamentError};
use crate::{rat, Rat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("blow-up needs at least 6^depth = {0} vertices, got {1}")]
    TooFewVertices(u64, u16),
    #[error("blow-up size {0} exceeds the memory guard {1}")]
    SizeGuard(u16, u16),
    #[error("exhaustive K4⁻ check is guarded at {1} vertices, got {0}")]
    CheckGuard(u16, u16),
    #[error(transparent)]
    Tournament(#[from] TournamentError),
}

/// The Frankl–Füredi 6-vertex 3-graph whose every link is a 5-cycle.
pub fn h6() -> ThreeGraph {
    ThreeGraph::new(
        6,
        &[
            (1, 2, 3),
            (2, 3, 4),
            (3, 4, 5),
            (1, 4, 5),
            (1, 2, 5),
            (1, 3, 6),
            (3, 5, 6),
            (2, 5, 6),
            (2, 4, 6),
            (1, 4, 6),
        ],
    )
    .unwrap()
}

/// True iff the 2-graph edge list forms a single cycle through `len`
/// vertices.
pub fn is_cycle(edges: &[(u8, u8)], len: usize) -> bool {
    if edges.len() != len {
        return false;
    }
    let mut adj: std::collections::HashMap<u8, Vec<u8>> = std::collections::HashMap::new();
    for &(a, b) in edges {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    if adj.len() != len || adj.values().any(|v| v.len() != 2) {
        return false;
    }
    // walk the cycle
    let start = *adj.keys().min().unwrap();
    let mut prev = start;
    let mut cur = adj[&start][0];
    let mut steps = 1;
    while cur != start {
        let next = if adj[&cur][0] == prev { adj[&cur][1] } else { adj[&cur][0] };
        prev = cur;
        cur = next;
        steps += 1;
        if steps > len {
            return false;
        }
    }
    steps == len
}

/// A 3-graph on up to 200 vertices, for blow-up outputs.
#[derive(Debug, Clone)]
pub struct LargeTripleSystem {
    n: u16,
    edges: Vec<[u16; 3]>,
}

impl LargeTripleSystem {
    pub fn n(&self) -> u16 {
        self.n
    }

    pub fn edges(&self) -> &[[u16; 3]] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Number of edges containing both vertices.
    pub fn codegree(&self, x: u16, y: u16) -> usize {
        self.edges
            .iter()
            .filter(|e| e.contains(&x) && e.contains(&y))
            .count()
    }

    /// Exact minimum codegree over all pairs; 0 when n < 2.
    pub fn min_codegree(&self) -> usize {
        if self.n < 2 {
            return 0;
        }
        let mut pair_counts = vec![0usize; pair_count16(self.n)];
        for e in &self.edges {
            pair_counts[pair_index16(self.n, e[0], e[1])] += 1;
            pair_counts[pair_index16(self.n, e[0], e[2])] += 1;
            pair_counts[pair_index16(self.n, e[1], e[2])] += 1;
        }
        pair_counts.into_iter().min().unwrap_or(0)
    }

    /// Exhaustive check over all 4-subsets; guarded at 60 vertices.
    pub fn is_k4minus_free_exhaustive(&self) -> Result<bool, ConstructionError> {
        if self.n > 60 {
            return Err(ConstructionError::CheckGuard(self.n, 60));
        }
        let mut edge_set = std::collections::HashSet::with_capacity(self.edges.len());
        for e in &self.edges {
            edge_set.insert(*e);
        }
        let has = |a: u16, b: u16, c: u16| {
            let mut t = [a, b, c];
            t.sort_unstable();
            edge_set.contains(&t)
        };
        for a in 1..=self.n {
            for b in a + 1..=self.n {
                for c in b + 1..=self.n {
                    for d in c + 1..=self.n {
                        let cnt = has(a, b, c) as u8
                            + has(a, b, d) as u8
                            + has(a, c, d) as u8
                            + has(b, c, d) as u8;
                        if cnt >= 3 {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }
}

fn pair_index16(n: u16, i: u16, j: u16) -> usize {
    let (n, i, j) = (n as usize, i as usize, j as usize);
    (i - 1) * n - i * (i - 1) / 2 + (j - i) - 1
}

fn pair_count16(n: u16) -> usize {
    n as usize * (n as usize - 1) / 2
}

/// Parameters of the iterated H₆ blow-up.
#[derive(Debug, Clone)]
pub struct BlowupSpec {
    pub n: u16,
    /// Iteration depth t ≥ 0; t = 0 is a bare tournament construction.
    pub depth: u32,
    pub seed: u64,
    /// Use the Paley tournament inside parts whose size is a prime
    /// congruent to 3 mod 4; seeded random tournaments otherwise.
    pub paley: bool,
}

/// Blow-up output with the exact statistics block.
#[derive(Debug, Clone)]
pub struct BlowupResult {
    pub graph: LargeTripleSystem,
    pub edge_count: usize,
    pub min_codegree: usize,
    /// Edge density |E| / C(n, 3), exact.
    pub density: Rat,
    /// (2/7 − (1/28)·6^(−2t)) · C(n, 3): the asymptotic reference value.
    pub reference_edges: Rat,
}

/// Balanced iterated blow-up of H₆ with tournament constructions in the
/// final parts: part sizes differ by at most one, assigned in vertex
/// order; cross-part triples follow H₆; the recursion descends `depth`
/// times and each deepest part receives C(T) for its own deterministic
/// tournament.
pub fn iterated_blowup(spec: &BlowupSpec) -> Result<BlowupResult, ConstructionError> {
    if spec.n > 200 {
        return Err(ConstructionError::SizeGuard(spec.n, 200));
    }
    let min = 6u64.pow(spec.depth);
    if (spec.n as u64) < min {
        return Err(ConstructionError::TooFewVertices(min, spec.n));
    }
    let vertices: Vec<u16> = (1..=spec.n).collect();
    let mut edges = Vec::new();
    blowup_rec(&vertices, spec.depth, spec.seed, spec.paley, &mut edges);
    edges.sort_unstable();
    let graph = LargeTripleSystem { n: spec.n, edges };
    let edge_count = graph.edge_count();
    let min_codegree = graph.min_codegree();
    let n = spec.n as i64;
    let total_triples = n * (n - 1) * (n - 2) / 6;
    let density = rat(edge_count as i64, total_triples.max(1));
    let pow = 36i64.pow(spec.depth);
    // 2/7 − 1/(28·36^t), times C(n,3)
    let reference_edges =
        (rat(2, 7) - rat(1, 28 * pow)) * rat(total_triples, 1);
    Ok(BlowupResult { graph, edge_count, min_codegree, density, reference_edges })
}

fn blowup_rec(vertices: &[u16], depth: u32, seed: u64, paley: bool, edges: &mut Vec<[u16; 3]>) {
    if depth == 0 {
        // cyclic triples of the part tournament, in global labels; parts
        // can exceed the 9-vertex ThreeGraph cap, so no graph is built
        let t = part_tournament(vertices.len() as u8, seed, paley);
        let n = t.n();
        for a in 1..=n {
            for b in a + 1..=n {
                for c in b + 1..=n {
                    if t.is_cyclic_triple(a, b, c) {
                        edges.push([
                            vertices[a as usize - 1],
                            vertices[b as usize - 1],
                            vertices[c as usize - 1],
                        ]);
                    }
                }
            }
        }
        return;
    }
    // balanced parts in vertex order
    let m = vertices.len();
    let (q, r) = (m / 6, m % 6);
    let mut parts: Vec<&[u16]> = Vec::with_capacity(6);
    let mut at = 0;
    for p in 0..6 {
        let size = q + usize::from(p < r);
        parts.push(&vertices[at..at + size]);
        at += size;
    }
    let pattern = h6();
    for e in pattern.edges() {
        let [a, b, c] = e.vertices();
        for &u in parts[a as usize - 1] {
            for &v in parts[b as usize - 1] {
                for &w in parts[c as usize - 1] {
                    let mut t = [u, v, w];
                    t.sort_unstable();
                    edges.push(t);
                }
            }
        }
    }
    for (p, part) in parts.iter().enumerate() {
        if !part.is_empty() {
            blowup_rec(part, depth - 1, splitmix64(seed ^ (p as u64 + 1)), paley, edges);
        }
    }
}

fn part_tournament(n: u8, seed: u64, paley: bool) -> Tournament {
    if paley && n >= 3 && n % 4 == 3 {
        if let Ok(t) = crate::tournaments::paley_tournament(n as u64) {
            return t;
        }
    }
    random_tournament(n, seed)
}

/// splitmix64: the seed-derivation step for per-part generators.
pub fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e3779b97f4a7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}

/// Orients each pair by an independent fair bit from ChaCha8 seeded with
/// `seed`, pairs in lexicographic order; identical (n, seed) give
/// identical tournaments.
pub fn random_tournament(n: u8, seed: u64) -> Tournament {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bits: Vec<bool> = (0..pair_count(n)).map(|_| rng.gen_bool(0.5)).collect();
    Tournament::from_bits(n, bits).unwrap()
}

/// Removes the `count` highest-labeled vertices (count = 1 or 2) and
/// reports the exact δ₂ of the result.
pub fn delete_vertices(t: &Tournament, count: u8) -> Result<(Tournament, usize), TournamentError> {
    if count == 0 || count >= t.n() {
        return Err(TournamentError::BadVertex(count, t.n()));
    }
    let remove: Vec<u8> = (t.n() - count + 1..=t.n()).collect();
    let smaller = t.delete(&remove);
    let d2 = cyclic_codegrees(&smaller).delta2;
    Ok((smaller, d2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tournaments::{ct_construction, delta2, paley_tournament};

    #[test]
    fn h6_shape() {
        let g = h6();
        assert_eq!(g.edge_count(), 10);
        assert!(g.is_k4minus_free());
        for v in 1..=6 {
            assert!(is_cycle(&g.link(v), 5), "link of {v} is not a 5-cycle");
        }
        // any 5 vertices span exactly 5 edges
        for drop in 1..=6u8 {
            let keep: Vec<u8> = (1..=6).filter(|&v| v != drop).collect();
            assert_eq!(g.induced_subgraph(&keep).unwrap().edge_count(), 5);
        }
    }

    #[test]
    fn random_tournament_is_reproducible() {
        assert_eq!(random_tournament(12, 99), random_tournament(12, 99));
        assert_ne!(random_tournament(12, 99), random_tournament(12, 100));
        assert_eq!(random_tournament(1, 7).n(), 1);
    }

    #[test]
    fn blowup_base_case_is_ct() {
        let spec = BlowupSpec { n: 9, depth: 0, seed: 5, paley: false };
        let result = iterated_blowup(&spec).unwrap();
        let t = random_tournament(9, 5);
        let ct = ct_construction(&t);
        assert_eq!(result.edge_count, ct.edge_count());
        assert_eq!(result.min_codegree, delta2(&t));
        assert!(result.graph.is_k4minus_free_exhaustive().unwrap());
    }

    #[test]
    fn blowup_degenerate_is_h6() {
        let spec = BlowupSpec { n: 6, depth: 1, seed: 0, paley: false };
        let result = iterated_blowup(&spec).unwrap();
        assert_eq!(result.edge_count, 10);
        let expect: Vec<[u16; 3]> = h6()
            .edges()
            .iter()
            .map(|t| {
                let [a, b, c] = t.vertices();
                [a as u16, b as u16, c as u16]
            })
            .collect();
        assert_eq!(result.graph.edges(), &expect[..]);
    }

    #[test]
    fn blowup_36_depth_1_is_free() {
        let spec = BlowupSpec { n: 36, depth: 1, seed: 11, paley: false };
        let result = iterated_blowup(&spec).unwrap();
        assert!(result.graph.is_k4minus_free_exhaustive().unwrap());
        // 10 pattern edges fully blown up on 6 parts of 6
        assert!(result.edge_count >= 10 * 6 * 6 * 6);
    }

    #[test]
    fn blowup_guards() {
        assert!(iterated_blowup(&BlowupSpec { n: 30, depth: 2, seed: 0, paley: false }).is_err());
        assert!(iterated_blowup(&BlowupSpec { n: 201, depth: 0, seed: 0, paley: false }).is_err());
    }

    #[test]
    fn paley_substitution() {
        let spec = BlowupSpec { n: 7, depth: 0, seed: 3, paley: true };
        let result = iterated_blowup(&spec).unwrap();
        assert_eq!(result.min_codegree, 2);
        assert_eq!(result.edge_count, 14);
    }

    #[test]
    fn deletion_examples() {
        let p7 = paley_tournament(7).unwrap();
        let (t6, d2) = delete_vertices(&p7, 1).unwrap();
        assert_eq!(t6.n(), 6);
        assert!(d2 >= 1);
        let (t5, d2) = delete_vertices(&p7, 2).unwrap();
        assert_eq!(t5.n(), 5);
        // deletion never increases a surviving pair's codegree
        let before = cyclic_codegrees(&p7);
        let after = cyclic_codegrees(&t5);
        let mut k = 0;
        for i in 1..=5u8 {
            for j in i + 1..=5 {
                assert!(after.c[k] <= before.c[crate::tournaments::pair_index(7, i, j)]);
                let _ = j;
                k += 1;
            }
        }
        let _ = d2;
        // 3-cycle minus one vertex: no triples left, reported as 0
        let p3 = paley_tournament(3).unwrap();
        let (_, d2) = delete_vertices(&p3, 1).unwrap();
        assert_eq!(d2, 0);
        assert!(delete_vertices(&p3, 3).is_err());
    }
}
