//! Exact subgraph and flag-pair densities.
//!
//! All densities are ratios of injection or subset counts and are kept as
//! exact rationals. The flag pair density p̄(F₁,F₂,G) is computed two
//! independent ways: directly, by enumerating root injections into G
//! together with splits of the leftover vertices, and composed, by
//! expanding through an intermediate graph level and lifting with
//! subgraph densities. The two routes agree entry for entry; the
//! verification suite checks this.

use std::collections::HashMap;

use num::BigInt;
use rayon::prelude::*;

use crate::flags::{Flag, FlagError, FlagList, TypeGraph};
use crate::hypergraph::{all_triples, enumerate_free, for_each_subset, GraphError, ThreeGraph};
use crate::{rat, Rat};

/// A canonical graph list 𝓕ₖ with index lookup.
#[derive(Debug, Clone)]
pub struct GraphBasis {
    pub k: u8,
    pub graphs: Vec<ThreeGraph>,
    index: HashMap<ThreeGraph, usize>,
}

impl GraphBasis {
    pub fn new(k: u8) -> Result<GraphBasis, GraphError> {
        let graphs = enumerate_free(k)?;
        let index = graphs
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), i))
            .collect();
        Ok(GraphBasis { k, graphs, index })
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    /// Index of an already canonical graph.
    pub fn index_of_canonical(&self, g: &ThreeGraph) -> Option<usize> {
        self.index.get(g).copied()
    }

    /// Index of an arbitrary graph's isomorphism class.
    pub fn index_of(&self, g: &ThreeGraph) -> Option<usize> {
        // graphs that are already canonical hit the map directly
        self.index_of_canonical(g)
            .or_else(|| self.index_of_canonical(g.canonical_form().graph()))
    }
}

/// Number of v(h)-subsets of V(g) inducing a copy of h, with the total
/// subset count.
pub fn subgraph_count(h: &ThreeGraph, g: &ThreeGraph) -> (u64, u64) {
    if h.n() > g.n() {
        return (0, 1);
    }
    let target = h.canonical_form();
    let mut hits = 0u64;
    let mut total = 0u64;
    for_each_subset(g.n(), h.n(), &mut |s| {
        total += 1;
        let induced = g.induced_subgraph(s).unwrap();
        if induced.edge_count() == h.edge_count() && induced.canonical_form() == target {
            hits += 1;
        }
    });
    (hits, total)
}

/// Probability that a random v(h)-subset of V(g) induces a copy of h;
/// zero when v(h) > v(g).
pub fn density(h: &ThreeGraph, g: &ThreeGraph) -> Rat {
    let (hits, total) = subgraph_count(h, g);
    rat(hits as i64, total as i64)
}

/// p_F^σ: the probability that a random ordered injection of the type's
/// vertices into the flag's graph realizes a σ-flag isomorphic to f.
pub fn root_probability(f: &Flag) -> Rat {
    let v = f.n();
    let s = f.root_size();
    let target = f.canonical_graph();
    let sigma = f.type_graph();
    let mut hits = 0u64;
    let mut total = 0u64;
    crate::flags::for_each_injection(v, s, &mut |m| {
        total += 1;
        if let Ok(cand) = Flag::new(sigma.clone(), f.graph().clone(), m.to_vec()) {
            if cand.canonical_graph() == target {
                hits += 1;
            }
        }
    });
    rat(hits as i64, total as i64)
}

/// Subgraph counts of every mid-level class inside every target-level
/// graph: `counts[g][h]` many of the C(target_k, mid_k) subsets of
/// target graph `g` induce mid graph `h`.
#[derive(Debug, Clone)]
pub struct LiftCounts {
    pub mid_k: u8,
    pub target_k: u8,
    pub denom: u64,
    pub counts: Vec<Vec<u32>>,
}

impl LiftCounts {
    pub fn new(mid: &GraphBasis, target: &GraphBasis) -> LiftCounts {
        let denom = binomial(target.k as u64, mid.k as u64);
        let counts: Vec<Vec<u32>> = target
            .graphs
            .par_iter()
            .map(|g| {
                let mut row = vec![0u32; mid.len()];
                for_each_subset(g.n(), mid.k, &mut |s| {
                    let induced = g.induced_subgraph(s).unwrap();
                    let idx = mid
                        .index_of(&induced)
                        .expect("induced subgraph of a free graph is free");
                    row[idx] += 1;
                });
                row
            })
            .collect();
        LiftCounts { mid_k: mid.k, target_k: target.k, denom, counts }
    }

    /// p(H, G) as an exact rational.
    pub fn value(&self, g: usize, h: usize) -> Rat {
        rat(self.counts[g][h] as i64, self.denom as i64)
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut r = 1u64;
    for i in 0..k.min(n - k) {
        r = r * (n - i) / (i + 1);
    }
    r
}

fn falling(n: u64, k: u64) -> u64 {
    (0..k).map(|i| n - i).product()
}

/// The flag pair densities p̄(F₁, F₂, G) for all flag pairs of one type
/// and every graph of a target basis, as exact counts over a common
/// denominator.
#[derive(Debug)]
pub struct PairDensityTable {
    pub sigma: TypeGraph,
    pub k1: u8,
    pub k2: u8,
    pub target_k: u8,
    pub denom: u64,
    /// per target graph: (flag1 index, flag2 index) -> event count
    pub per_g: Vec<HashMap<(u16, u16), u64>>,
}

impl PairDensityTable {
    /// p̄(F₁, F₂, G) for the flags at indices `a`, `b`.
    pub fn value(&self, g: usize, a: usize, b: usize) -> Rat {
        let c = self.per_g[g].get(&(a as u16, b as u16)).copied().unwrap_or(0);
        rat(c as i64, self.denom as i64)
    }

    /// Σ over all flag pairs: the probability that a random ordered
    /// v(σ)-subset of V(G) induces σ in order.
    pub fn mass(&self, g: usize) -> Rat {
        let total: u64 = self.per_g[g].values().sum();
        rat(total as i64, self.denom as i64)
    }

    /// Direct route: enumerate every ordered injection of the type into G
    /// and every split of the leftover vertices into parts of sizes
    /// k₁−v(σ) and k₂−v(σ) (extra vertices stay unused).
    pub fn direct(
        flags1: &FlagList,
        flags2: &FlagList,
        target: &GraphBasis,
    ) -> Result<PairDensityTable, FlagError> {
        PairDensityTable::direct_for_graphs(flags1, flags2, &target.graphs, target.k)
    }

    /// Direct route over an explicit graph slice (all on `target_k`
    /// vertices); rows follow the slice order.
    pub fn direct_for_graphs(
        flags1: &FlagList,
        flags2: &FlagList,
        graphs: &[ThreeGraph],
        target_k: u8,
    ) -> Result<PairDensityTable, FlagError> {
        let sigma = flags1.type_graph.clone();
        assert_eq!(sigma, flags2.type_graph);
        let (k1, k2) = (flags1.k, flags2.k);
        let s = sigma.n();
        let v = target_k;
        if v < k1 + k2 - s {
            return Err(FlagError::SizeGuard(v, k1 + k2 - s));
        }
        let r = (v - s) as u64;
        let denom =
            falling(v as u64, s as u64) * binomial(r, (k1 - s) as u64)
                * binomial(r - (k1 - s) as u64, (k2 - s) as u64);

        let per_g: Vec<HashMap<(u16, u16), u64>> = graphs
            .par_iter()
            .map(|g| pair_events(&sigma, flags1, flags2, g))
            .collect();
        Ok(PairDensityTable { sigma, k1, k2, target_k: v, denom, per_g })
    }

    /// Composed route: the direct table at level k₁+k₂−v(σ), lifted to the
    /// target basis through subgraph densities.
    pub fn composed(
        flags1: &FlagList,
        flags2: &FlagList,
        mid: &GraphBasis,
        lift: &LiftCounts,
        target: &GraphBasis,
    ) -> Result<PairDensityTable, FlagError> {
        let s = flags1.type_graph.n();
        assert_eq!(mid.k, flags1.k + flags2.k - s);
        assert_eq!(lift.mid_k, mid.k);
        assert_eq!(lift.target_k, target.k);
        let base = PairDensityTable::direct(flags1, flags2, mid)?;
        let per_g: Vec<HashMap<(u16, u16), u64>> = (0..target.len())
            .into_par_iter()
            .map(|g| {
                let mut acc: HashMap<(u16, u16), u64> = HashMap::new();
                for (h, &cnt) in lift.counts[g].iter().enumerate() {
                    if cnt == 0 {
                        continue;
                    }
                    for (&key, &c) in &base.per_g[h] {
                        *acc.entry(key).or_default() += cnt as u64 * c;
                    }
                }
                acc
            })
            .collect();
        Ok(PairDensityTable {
            sigma: base.sigma,
            k1: flags1.k,
            k2: flags2.k,
            target_k: target.k,
            denom: base.denom * lift.denom,
            per_g,
        })
    }
}

/// Event counts for one target graph: every realizing injection of the
/// type, every split of the leftovers.
fn pair_events(
    sigma: &TypeGraph,
    flags1: &FlagList,
    flags2: &FlagList,
    g: &ThreeGraph,
) -> HashMap<(u16, u16), u64> {
    let s = sigma.n();
    let v = g.n();
    let (k1, k2) = (flags1.k, flags2.k);
    let (p1, p2) = ((k1 - s) as usize, (k2 - s) as usize);
    // the type's edge pattern over [s], split into edges and non-edges
    let mut sig_edges = Vec::new();
    let mut sig_non = Vec::new();
    for t in all_triples(s) {
        let [a, b, c] = t.vertices();
        if sigma.underlying().has_edge(t) {
            sig_edges.push([a, b, c]);
        } else {
            sig_non.push([a, b, c]);
        }
    }
    let mut acc: HashMap<(u16, u16), u64> = HashMap::new();
    crate::flags::for_each_injection(v, s, &mut |m| {
        for e in &sig_edges {
            if !g.has_edge_verts(
                m[e[0] as usize - 1],
                m[e[1] as usize - 1],
                m[e[2] as usize - 1],
            ) {
                return;
            }
        }
        for e in &sig_non {
            if g.has_edge_verts(
                m[e[0] as usize - 1],
                m[e[1] as usize - 1],
                m[e[2] as usize - 1],
            ) {
                return;
            }
        }
        let rest: Vec<u8> = (1..=v).filter(|x| !m.contains(x)).collect();
        // split: part1 ⊆ rest of size p1, part2 ⊆ rest∖part1 of size p2
        let mut part1_scratch = Vec::with_capacity(p1);
        split_rec(
            g, m, &rest, p1, p2, 0, &mut part1_scratch, flags1, flags2, &mut acc,
        );
    });
    acc
}

#[allow(clippy::too_many_arguments)]
fn split_rec(
    g: &ThreeGraph,
    root: &[u8],
    rest: &[u8],
    p1: usize,
    p2: usize,
    from: usize,
    part1: &mut Vec<u8>,
    flags1: &FlagList,
    flags2: &FlagList,
    acc: &mut HashMap<(u16, u16), u64>,
) {
    if part1.len() == p1 {
        let a = flag_part_index(g, root, part1, flags1);
        let remaining: Vec<u8> = rest.iter().copied().filter(|x| !part1.contains(x)).collect();
        let mut part2_scratch = Vec::with_capacity(p2);
        part2_rec(g, root, &remaining, p2, 0, &mut part2_scratch, flags2, &mut |b| {
            *acc.entry((a as u16, b as u16)).or_default() += 1;
        });
        return;
    }
    for i in from..rest.len() {
        part1.push(rest[i]);
        split_rec(g, root, rest, p1, p2, i + 1, part1, flags1, flags2, acc);
        part1.pop();
    }
}

fn part2_rec(
    g: &ThreeGraph,
    root: &[u8],
    remaining: &[u8],
    p2: usize,
    from: usize,
    part2: &mut Vec<u8>,
    flags2: &FlagList,
    emit: &mut impl FnMut(usize),
) {
    if part2.len() == p2 {
        emit(flag_part_index(g, root, part2, flags2));
        return;
    }
    for i in from..remaining.len() {
        part2.push(remaining[i]);
        part2_rec(g, root, remaining, p2, from.max(i + 1), part2, flags2, emit);
        part2.pop();
    }
}

/// Index in the flag list of the flag induced by root ∪ part (part sorted
/// ascending gives the root-normalized labeled form).
fn flag_part_index(g: &ThreeGraph, root: &[u8], part: &[u8], flags: &FlagList) -> usize {
    let mut verts: Vec<u8> = root.to_vec();
    let mut p: Vec<u8> = part.to_vec();
    p.sort_unstable();
    verts.extend_from_slice(&p);
    let labeled = g.induced_subgraph(&verts).unwrap();
    flags
        .index_of_labeled(&labeled)
        .expect("induced flag must appear in the generated flag list")
}

/// Exact chain rule check helper: p(h, g) as a pair of counts.
pub fn density_counts(h: &ThreeGraph, g: &ThreeGraph) -> (BigInt, BigInt) {
    let (a, b) = subgraph_count(h, g);
    (BigInt::from(a), BigInt::from(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flags::TypeGraph;

    fn g(n: u8, edges: &[(u8, u8, u8)]) -> ThreeGraph {
        ThreeGraph::new(n, edges).unwrap()
    }

    fn h6() -> ThreeGraph {
        g(
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
    }

    #[test]
    fn density_examples() {
        let e = g(3, &[(1, 2, 3)]);
        let single7 = g(7, &[(1, 2, 3)]);
        assert_eq!(density(&single7, &single7), rat(1, 1));
        assert_eq!(density(&e, &single7), rat(1, 35));
        assert_eq!(density(&e, &h6()), rat(1, 2));
        // degenerate direction
        assert_eq!(density(&single7, &e), rat(0, 1));
    }

    #[test]
    fn root_probability_examples() {
        let tau = TypeGraph::tau();
        // the type itself: both injections into the 2-vertex empty graph
        // give isomorphic flags
        let t_flag = Flag::new(tau.clone(), ThreeGraph::empty(2), vec![1, 2]).unwrap();
        assert_eq!(root_probability(&t_flag), rat(1, 1));
        // E^τ: every pair of the single-edge 3-graph realizes it
        let e_flag = Flag::new(tau.clone(), g(3, &[(1, 2, 3)]), vec![1, 2]).unwrap();
        assert_eq!(root_probability(&e_flag), rat(1, 1));
        // a rooted 4-vertex flag where the root pair is special:
        // {123, 124} rooted at the shared pair vs. at {3, 4}
        let shared = Flag::new(tau.clone(), g(4, &[(1, 2, 3), (1, 2, 4)]), vec![1, 2]).unwrap();
        // injections realizing the shared-pair rooting: (1,2) and (2,1)
        assert_eq!(root_probability(&shared), rat(2, 12));
        // partition of the injection event over all flags on one graph
        let base = g(4, &[(1, 2, 3), (1, 2, 4)]);
        let mut total = rat(0, 1);
        let mut seen = std::collections::HashSet::new();
        crate::flags::for_each_injection(4, 2, &mut |m| {
            let f = Flag::new(tau.clone(), base.clone(), m.to_vec()).unwrap();
            if seen.insert(f.canonical_graph()) {
                total += root_probability(&f);
            }
        });
        assert_eq!(total, rat(1, 1));
    }

    #[test]
    fn pair_density_worked_example() {
        // σ=τ, F₁=F₂=E^τ, G = {123, 124} on 4 vertices: only the root
        // pair {1,2} extends both ways, 4 events of 24.
        let tau = TypeGraph::tau();
        let f3 = FlagList::generate(&tau, 3).unwrap();
        let target = GraphBasis::new(4).unwrap();
        let table = PairDensityTable::direct(&f3, &f3, &target).unwrap();
        let gidx = target
            .index_of(&g(4, &[(1, 2, 3), (1, 2, 4)]))
            .unwrap();
        // flags sort as [N^τ, E^τ]
        assert_eq!(table.value(gidx, 1, 1), rat(1, 6));
        assert_eq!(table.value(gidx, 1, 0), table.value(gidx, 0, 1));
        // every pair of distinct vertices realizes τ
        assert_eq!(table.mass(gidx), rat(1, 1));
    }

    #[test]
    fn direct_and_composed_agree_on_small_case() {
        // τ-flags on 4 vertices, paired to 6, lifted to 7 vs direct at 7
        let tau = TypeGraph::tau();
        let f4 = FlagList::generate(&tau, 4).unwrap();
        let mid = GraphBasis::new(6).unwrap();
        let target = GraphBasis::new(7).unwrap();
        let lift = LiftCounts::new(&mid, &target);
        let direct = PairDensityTable::direct(&f4, &f4, &target).unwrap();
        let composed = PairDensityTable::composed(&f4, &f4, &mid, &lift, &target).unwrap();
        assert_eq!(direct.denom * (composed.denom / direct.denom), composed.denom);
        for gi in (0..target.len()).step_by(409) {
            for a in 0..f4.len() {
                for b in 0..f4.len() {
                    assert_eq!(direct.value(gi, a, b), composed.value(gi, a, b));
                }
            }
        }
    }

    #[test]
    fn lift_rows_sum_to_one() {
        let mid = GraphBasis::new(5).unwrap();
        let target = GraphBasis::new(6).unwrap();
        let lift = LiftCounts::new(&mid, &target);
        for gidx in 0..target.len() {
            let total: u64 = lift.counts[gidx].iter().map(|&c| c as u64).sum();
            assert_eq!(total, lift.denom);
        }
    }
}
