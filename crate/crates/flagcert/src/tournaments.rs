//! Tournaments, their cyclic-triangle 3-graphs, and codegree statistics.
//!
//! A tournament on `1..=n` stores one direction bit per unordered pair, in
//! lexicographic pair order. The Erdős–Hajnal construction C(T) — the
//! 3-graph of cyclically oriented triangles — connects tournaments to
//! K4⁻-free 3-graphs: δ₂(T) = δ₂(C(T)), and C(T) is always K4⁻-free.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::hypergraph::{for_each_permutation, ThreeGraph, Triple};
use crate::Rat;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TournamentError {
    #[error("vertex count {0} outside the supported range (guard {1})")]
    SizeGuard(u8, u8),
    #[error("vertex {0} out of range for n = {1}")]
    BadVertex(u8, u8),
    #[error("tournament is not doubly regular: {0}")]
    NotDoublyRegular(String),
    #[error("{0} is not a prime congruent to 3 mod 4 (or exceeds 1000)")]
    BadPaleyModulus(u64),
    #[error("malformed tournament line: {0}")]
    Parse(String),
}

/// An orientation of the complete graph on `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    n: u8,
    /// bit per pair {i, j}, i < j, in lex pair order; true = arc i→j.
    bits: Vec<bool>,
}

/// Rank of the pair (i, j), i < j, in lex order over `1..=n`.
pub fn pair_index(n: u8, i: u8, j: u8) -> usize {
    debug_assert!(i < j && j <= n);
    let (n, i, j) = (n as usize, i as usize, j as usize);
    (i - 1) * n - i * (i - 1) / 2 + (j - i) - 1
}

pub fn pair_count(n: u8) -> usize {
    let n = n as usize;
    n * n.saturating_sub(1) / 2
}

impl Tournament {
    /// Builds a tournament from per-pair direction bits in lex pair order.
    pub fn from_bits(n: u8, bits: Vec<bool>) -> Result<Tournament, TournamentError> {
        if bits.len() != pair_count(n) {
            return Err(TournamentError::Parse(format!(
                "expected {} direction bits for n = {}, got {}",
                pair_count(n),
                n,
                bits.len()
            )));
        }
        Ok(Tournament { n, bits })
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// True iff the arc between distinct `x` and `y` points x→y.
    pub fn arc(&self, x: u8, y: u8) -> bool {
        debug_assert!(x != y);
        if x < y {
            self.bits[pair_index(self.n, x, y)]
        } else {
            !self.bits[pair_index(self.n, y, x)]
        }
    }

    pub fn out_degree(&self, x: u8) -> usize {
        (1..=self.n).filter(|&y| y != x && self.arc(x, y)).count()
    }

    pub fn in_degree(&self, x: u8) -> usize {
        (1..=self.n).filter(|&y| y != x && self.arc(y, x)).count()
    }

    /// Out-degree of `x` restricted to the set `ys`.
    pub fn out_degree_to(&self, x: u8, ys: &[u8]) -> usize {
        ys.iter().filter(|&&y| y != x && self.arc(x, y)).count()
    }

    pub fn in_degree_to(&self, x: u8, ys: &[u8]) -> usize {
        ys.iter().filter(|&&y| y != x && self.arc(y, x)).count()
    }

    /// True iff {a, b, c} induces a cyclically oriented triangle.
    pub fn is_cyclic_triple(&self, a: u8, b: u8, c: u8) -> bool {
        // a source or sink vertex makes the triangle transitive
        let ab = self.arc(a, b);
        let bc = self.arc(b, c);
        let ca = self.arc(c, a);
        ab == bc && bc == ca
    }

    /// Applies a vertex permutation: `perm[v - 1]` is the new label of `v`.
    pub fn relabel(&self, perm: &[u8]) -> Tournament {
        let mut bits = vec![false; self.bits.len()];
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                let (a, b) = (perm[i as usize - 1], perm[j as usize - 1]);
                let arc_ij = self.arc(i, j);
                let (x, y, dir) = if a < b { (a, b, arc_ij) } else { (b, a, !arc_ij) };
                bits[pair_index(self.n, x, y)] = dir;
            }
        }
        Tournament { n: self.n, bits }
    }

    /// Reverses every arc.
    pub fn reverse(&self) -> Tournament {
        Tournament {
            n: self.n,
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    /// Reverses the single arc between `x` and `y`.
    pub fn reverse_arc(&self, x: u8, y: u8) -> Tournament {
        let mut t = self.clone();
        let (a, b) = if x < y { (x, y) } else { (y, x) };
        let idx = pair_index(self.n, a, b);
        t.bits[idx] = !t.bits[idx];
        t
    }

    /// Removes the given vertices and relabels the rest in order.
    pub fn delete(&self, remove: &[u8]) -> Tournament {
        let keep: Vec<u8> = (1..=self.n).filter(|v| !remove.contains(v)).collect();
        let m = keep.len() as u8;
        let mut bits = vec![false; pair_count(m)];
        for (i2, &i) in keep.iter().enumerate() {
            for (j2, &j) in keep.iter().enumerate().skip(i2 + 1) {
                bits[pair_index(m, i2 as u8 + 1, j2 as u8 + 1)] = self.arc(i, j);
            }
        }
        Tournament { n: m, bits }
    }

    /// Lexicographically least orientation string over all relabelings.
    pub fn canonical(&self) -> Tournament {
        let mut best = self.bits.clone();
        let mut scratch: Vec<u8> = (1..=self.n).collect();
        for_each_permutation(&mut scratch, &mut |perm| {
            let cand = self.relabel(perm);
            if cand.bits < best {
                best = cand.bits;
            }
        });
        Tournament { n: self.n, bits: best }
    }

    pub fn is_isomorphic_to(&self, other: &Tournament) -> bool {
        self.n == other.n && self.canonical() == other.canonical()
    }
}

impl fmt::Display for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.n)?;
        for &b in &self.bits {
            write!(f, "{}", if b { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl FromStr for Tournament {
    type Err = TournamentError;

    /// Parses `n:bits`, e.g. `3:110`.
    fn from_str(s: &str) -> Result<Self, TournamentError> {
        let (head, body) = s
            .split_once(':')
            .ok_or_else(|| TournamentError::Parse(format!("missing ':' in {s:?}")))?;
        let n: u8 = head
            .parse()
            .map_err(|_| TournamentError::Parse(format!("bad vertex count in {s:?}")))?;
        let bits: Vec<bool> = body
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(TournamentError::Parse(format!("bad bit {c:?} in {s:?}"))),
            })
            .collect::<Result<_, _>>()?;
        Tournament::from_bits(n, bits)
    }
}

/// The Erdős–Hajnal construction: edges are the cyclic triples of `t`.
pub fn ct_construction(t: &Tournament) -> ThreeGraph {
    let n = t.n();
    let mut edges = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                if t.is_cyclic_triple(a, b, c) {
                    edges.push(Triple::new(a, b, c, n).unwrap());
                }
            }
        }
    }
    ThreeGraph::from_triples(n, edges).unwrap()
}

/// Per-pair cyclic codegree statistics.
#[derive(Debug, Clone)]
pub struct CodegreeStats {
    pub n: u8,
    /// C_T(x, y) for each pair {x, y} in lex pair order.
    pub c: Vec<usize>,
    /// R_T(x, y) for each pair: cyclic codegree after reversing the arc.
    pub r: Vec<usize>,
    /// min over pairs of C_T(x, y); 0 when n < 2.
    pub delta2: usize,
    /// For every arc x→y, R_T(x,y) = (n−2) − d⁻(x) − d⁺(y) + C_T(x,y).
    pub inclusion_exclusion_ok: bool,
}

/// Computes C_T, R_T, δ₂, and checks the inclusion-exclusion identity.
pub fn cyclic_codegrees(t: &Tournament) -> CodegreeStats {
    let n = t.n();
    let mut c = Vec::with_capacity(pair_count(n));
    let mut r = Vec::with_capacity(pair_count(n));
    let mut ie_ok = true;
    for i in 1..=n {
        for j in i + 1..=n {
            // orient the pair as x→y
            let (x, y) = if t.arc(i, j) { (i, j) } else { (j, i) };
            let mut ct = 0;
            let mut rt = 0;
            for z in 1..=n {
                if z == x || z == y {
                    continue;
                }
                if t.arc(y, z) && t.arc(z, x) {
                    ct += 1;
                }
                if t.arc(x, z) && t.arc(z, y) {
                    rt += 1;
                }
            }
            c.push(ct);
            r.push(rt);
            let rhs = (n as i64 - 2) - t.in_degree(x) as i64 - t.out_degree(y) as i64 + ct as i64;
            if rt as i64 != rhs {
                ie_ok = false;
            }
        }
    }
    let delta2 = c.iter().copied().min().unwrap_or(0);
    CodegreeStats { n, c, r, delta2, inclusion_exclusion_ok: ie_ok }
}

/// Minimum cyclic codegree δ₂(T).
pub fn delta2(t: &Tournament) -> usize {
    cyclic_codegrees(t).delta2
}

/// Number of cyclically oriented triangles.
pub fn cyclic_triangle_count(t: &Tournament) -> usize {
    let n = t.n();
    let mut count = 0;
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                if t.is_cyclic_triple(a, b, c) {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Canonical representatives of all tournaments on `k ≤ 7` vertices, in
/// lexicographic order of their orientation strings. Extensions of every
/// (k−1)-vertex representative are canonicalized and deduplicated.
pub fn enumerate_tournaments(k: u8) -> Result<Vec<Tournament>, TournamentError> {
    if k == 0 || k > 7 {
        return Err(TournamentError::SizeGuard(k, 7));
    }
    let mut level = vec![Tournament { n: 1, bits: Vec::new() }];
    for size in 2..=k {
        let mut forms: HashSet<Vec<bool>> = HashSet::new();
        for parent in &level {
            // vertex `size` joins; each subset of in-arcs is a pattern
            for pattern in 0u32..1 << (size - 1) {
                let mut bits = vec![false; pair_count(size)];
                for i in 1..size {
                    for j in i + 1..size {
                        bits[pair_index(size, i, j)] = parent.arc(i, j);
                    }
                }
                for i in 1..size {
                    bits[pair_index(size, i, size)] = pattern >> (i - 1) & 1 == 1;
                }
                let t = Tournament { n: size, bits };
                forms.insert(t.canonical().bits);
            }
        }
        level = forms
            .into_iter()
            .map(|bits| Tournament { n: size, bits })
            .collect();
        level.sort_by(|a, b| a.bits.cmp(&b.bits));
    }
    Ok(level)
}

/// Searches for a tournament `T` with C(T) = g (as a labeled graph, which
/// suffices up to isomorphism), by orienting pairs in lex order and
/// backtracking whenever a fully decided triple contradicts `g`.
pub fn realize_as_tournament(g: &ThreeGraph) -> Option<Tournament> {
    if g.n() > 7 || !g.is_k4minus_free() {
        return None;
    }
    let n = g.n();
    let pairs: Vec<(u8, u8)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    let mut bits = vec![false; pair_count(n)];

    fn consistent(g: &ThreeGraph, bits: &[bool], n: u8, depth: usize, pairs: &[(u8, u8)]) -> bool {
        // the pair just decided is pairs[depth]; check triples whose three
        // pairs are all decided, i.e. third vertex below the current pair
        let (b, c) = pairs[depth];
        for a in 1..b {
            let x = bits[pair_index(n, a, b)];
            let y = bits[pair_index(n, b, c)];
            let z = bits[pair_index(n, a, c)];
            // cyclic iff x == y and z != x (for a < b < c)
            let cyclic = x == y && z != x;
            let want = g.has_edge_verts(a, b, c);
            if cyclic != want {
                return false;
            }
        }
        true
    }

    fn search(
        g: &ThreeGraph,
        pairs: &[(u8, u8)],
        depth: usize,
        bits: &mut Vec<bool>,
        n: u8,
    ) -> bool {
        if depth == pairs.len() {
            return true;
        }
        for dir in [false, true] {
            bits[pair_index(n, pairs[depth].0, pairs[depth].1)] = dir;
            if consistent(g, bits, n, depth, pairs) && search(g, pairs, depth + 1, bits, n) {
                return true;
            }
        }
        false
    }

    if search(g, &pairs, 0, &mut bits, n) {
        Some(Tournament { n, bits })
    } else {
        None
    }
}

/// All labeled tournaments on `1..=n` whose cyclic triples equal `g`
/// exactly. Exponential in C(n,2); intended for n ≤ 5.
pub fn realizing_tournaments_labeled(g: &ThreeGraph) -> Vec<Tournament> {
    let n = g.n();
    assert!(n <= 5, "labeled realization search is limited to n <= 5");
    let m = pair_count(n);
    let mut out = Vec::new();
    for mask in 0u32..1 << m {
        let bits: Vec<bool> = (0..m).map(|i| mask >> i & 1 == 1).collect();
        let t = Tournament { n, bits };
        if ct_construction(&t) == *g {
            out.push(t);
        }
    }
    out
}

/// Upper bound ⌊3u/(n−1) − (n−2)/2⌋ on t(n), with u = ⌊(n−1)/2⌋⌈(n−1)/2⌉;
/// equals ⌊(n+1)/4⌋.
pub fn t_upper_bound(n: u8) -> Result<i64, TournamentError> {
    if n < 3 {
        return Err(TournamentError::SizeGuard(n, 3));
    }
    let n = n as i64;
    let u = (n - 1) / 2 * ((n - 1) - (n - 1) / 2);
    // 3u/(n−1) − (n−2)/2 as an exact rational floor
    let num = 6 * u - (n - 1) * (n - 2);
    let den = 2 * (n - 1);
    Ok(num.div_euclid(den))
}

/// Exact t(n) = max δ₂ over all tournaments on `n ≤ 7` vertices.
pub fn t_exact(n: u8) -> Result<usize, TournamentError> {
    let reps = enumerate_tournaments(n)?;
    Ok(reps.iter().map(delta2).max().unwrap_or(0))
}

/// The quadratic-residue tournament on a prime `q ≡ 3 (mod 4)`: vertices
/// `1..=q` standing for residues `0..q−1`, arc i→j iff (j−i) is a nonzero
/// square mod q. Doubly regular with every C_T = (q+1)/4.
pub fn paley_tournament(q: u64) -> Result<Tournament, TournamentError> {
    if q > 1000 || q % 4 != 3 || !is_prime(q) {
        return Err(TournamentError::BadPaleyModulus(q));
    }
    let residues: HashSet<u64> = (1..q).map(|x| x * x % q).collect();
    let n = q as u8;
    let mut bits = vec![false; pair_count(n)];
    for i in 1..=n {
        for j in i + 1..=n {
            let diff = (j as u64 + q - i as u64) % q;
            bits[pair_index(n, i, j)] = residues.contains(&diff);
        }
    }
    Ok(Tournament { n, bits })
}

fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Checks the double-regularity preconditions of the Hadamard bridge:
/// all degrees (n−1)/2 and all cyclic codegrees (n+1)/4.
pub fn check_doubly_regular(t: &Tournament) -> Result<(), TournamentError> {
    let n = t.n();
    if n % 4 != 3 {
        return Err(TournamentError::NotDoublyRegular(format!(
            "n = {n} is not congruent to 3 mod 4"
        )));
    }
    let half = (n as usize - 1) / 2;
    for v in 1..=n {
        let (dp, dm) = (t.out_degree(v), t.in_degree(v));
        if dp != half || dm != half {
            return Err(TournamentError::NotDoublyRegular(format!(
                "vertex {v} has out-degree {dp} and in-degree {dm}, expected {half}"
            )));
        }
    }
    let want = (n as usize + 1) / 4;
    let stats = cyclic_codegrees(t);
    let mut k = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            if stats.c[k] != want {
                return Err(TournamentError::NotDoublyRegular(format!(
                    "pair {{{i}, {j}}} has cyclic codegree {}, expected {want}",
                    stats.c[k]
                )));
            }
            k += 1;
        }
    }
    Ok(())
}

/// Prop 4.4 extension: adds a vertex `y` to a doubly regular tournament on
/// 4k+3 vertices, orienting x→y and every other pair {v, y} opposite to
/// {v, x}. The result has δ₂ ≥ k.
pub fn extend_tournament(t: &Tournament, x: u8) -> Result<Tournament, TournamentError> {
    check_doubly_regular(t)?;
    let n = t.n();
    if x == 0 || x > n {
        return Err(TournamentError::BadVertex(x, n));
    }
    let m = n + 1;
    let mut bits = vec![false; pair_count(m)];
    for i in 1..=n {
        for j in i + 1..=n {
            bits[pair_index(m, i, j)] = t.arc(i, j);
        }
    }
    for v in 1..=n {
        // bit true = arc v→y (v < y always since y is the top label)
        let dir = if v == x { true } else { !t.arc(v, x) };
        bits[pair_index(m, v, m)] = dir;
    }
    Ok(Tournament { n: m, bits })
}

/// Max over Y ⊆ V of Σₓ |d⁺(x,Y) − d⁻(x,Y)| divided by n², exact. The
/// defining max over X ⊆ V is attained at X = V because the summands are
/// nonnegative.
pub fn quasirandomness_defect(t: &Tournament) -> Result<Rat, TournamentError> {
    let n = t.n();
    if n > 20 {
        return Err(TournamentError::SizeGuard(n, 20));
    }
    // out-neighborhood bitmask per vertex
    let out_mask: Vec<u32> = (1..=n)
        .map(|x| {
            let mut m = 0u32;
            for y in 1..=n {
                if y != x && t.arc(x, y) {
                    m |= 1 << (y - 1);
                }
            }
            m
        })
        .collect();
    let in_mask: Vec<u32> = (1..=n)
        .map(|x| {
            let mut m = 0u32;
            for y in 1..=n {
                if y != x && t.arc(y, x) {
                    m |= 1 << (y - 1);
                }
            }
            m
        })
        .collect();
    let mut best: i64 = 0;
    for y_set in 0u32..1 << n {
        let mut sum = 0i64;
        for x in 0..n as usize {
            let dp = (out_mask[x] & y_set).count_ones() as i64;
            let dm = (in_mask[x] & y_set).count_ones() as i64;
            sum += (dp - dm).abs();
        }
        best = best.max(sum);
    }
    Ok(crate::rat(best, (n as i64) * (n as i64)))
}

/// Per-type data computed by [`iota_dimensions`].
#[derive(Debug, Clone)]
pub struct IotaDimension {
    /// Rank over the rationals of the extension-distribution span.
    pub dimension: usize,
    /// Labeled tournaments J on [5] with C(J) equal to the type's graph,
    /// one per arc-reversal pair.
    pub realizers_up_to_reversal: usize,
    /// A basis of extension-distribution vectors over 𝓕₆^ι, scaled by 32
    /// to integers.
    pub basis: Vec<Vec<i64>>,
}

/// For each 5-vertex type ι, enumerates the labeled tournaments realizing
/// it, builds the distribution over 𝓕₆^ι of a uniformly random 6th vertex,
/// and reports the rank of the span of those distributions.
///
/// `flag_index` must map a labeled 6-vertex graph (whose restriction to
/// [5] equals the type's graph) to its index in the fixed enumeration of
/// 𝓕₆^ι; `flag_count` is the size of that enumeration.
pub fn iota_dimension(
    iota: &ThreeGraph,
    flag_count: usize,
    flag_index: &dyn Fn(&ThreeGraph) -> usize,
) -> IotaDimension {
    assert_eq!(iota.n(), 5);
    let realizers = realizing_tournaments_labeled(iota);
    // pair J with its global reversal; keep one per pair
    let mut kept: Vec<Tournament> = Vec::new();
    for t in &realizers {
        if !kept.iter().any(|s| *s == t.reverse()) {
            kept.push(t.clone());
        }
    }
    let mut vectors: Vec<Vec<i64>> = Vec::new();
    for j in &realizers {
        let mut dist = vec![0i64; flag_count];
        // 6th vertex with each of the 32 orientation patterns
        for pattern in 0u32..32 {
            let mut bits = vec![false; pair_count(6)];
            for a in 1..=5u8 {
                for b in a + 1..=5 {
                    bits[pair_index(6, a, b)] = j.arc(a, b);
                }
            }
            for a in 1..=5u8 {
                bits[pair_index(6, a, 6)] = pattern >> (a - 1) & 1 == 1;
            }
            let ext = Tournament { n: 6, bits };
            let g6 = ct_construction(&ext);
            dist[flag_index(&g6)] += 1;
        }
        debug_assert_eq!(dist.iter().sum::<i64>(), 32);
        vectors.push(dist);
    }
    let basis = rational_row_basis(vectors);
    IotaDimension {
        dimension: basis.len(),
        realizers_up_to_reversal: kept.len(),
        basis,
    }
}

/// Row basis over the rationals: exact elimination with pivot-normalized
/// rows, keeping the original integer vectors of the independent rows.
fn rational_row_basis(rows: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    use num::{BigRational, Zero};
    // (pivot column, row with pivot scaled to 1)
    let mut basis: Vec<(usize, Vec<BigRational>)> = Vec::new();
    let mut kept: Vec<Vec<i64>> = Vec::new();
    for row in rows {
        let mut r: Vec<BigRational> = row.iter().map(|&x| crate::rat(x, 1)).collect();
        for (lead, b) in &basis {
            if !r[*lead].is_zero() {
                let factor = r[*lead].clone();
                for i in 0..r.len() {
                    r[i] = &r[i] - &factor * &b[i];
                }
            }
        }
        if let Some(lead) = r.iter().position(|x| !x.is_zero()) {
            let pivot = r[lead].clone();
            for x in &mut r {
                *x = &*x / &pivot;
            }
            basis.push((lead, r));
            kept.push(row);
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;

    fn three_cycle() -> Tournament {
        // 1→2, 2→3, 3→1
        Tournament::from_bits(3, vec![true, false, true]).unwrap()
    }

    fn transitive(n: u8) -> Tournament {
        let bits = vec![true; pair_count(n)];
        Tournament::from_bits(n, bits).unwrap()
    }

    fn random_tournament(n: u8, rng: &mut impl Rng) -> Tournament {
        let bits = (0..pair_count(n)).map(|_| rng.gen_bool(0.5)).collect();
        Tournament::from_bits(n, bits).unwrap()
    }

    #[test]
    fn ct_examples() {
        assert_eq!(
            ct_construction(&three_cycle()),
            ThreeGraph::new(3, &[(1, 2, 3)]).unwrap()
        );
        for n in 2..=7 {
            assert_eq!(ct_construction(&transitive(n)), ThreeGraph::empty(n));
        }
        let paley7 = paley_tournament(7).unwrap();
        assert_eq!(ct_construction(&paley7).edge_count(), 14);
    }

    #[test]
    fn ct_is_always_k4minus_free() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let n = rng.gen_range(1..=9);
            let t = random_tournament(n, &mut rng);
            assert!(ct_construction(&t).is_k4minus_free());
        }
    }

    #[test]
    fn codegree_examples() {
        let s = cyclic_codegrees(&three_cycle());
        assert_eq!(s.c, vec![1, 1, 1]);
        assert_eq!(s.delta2, 1);
        assert!(s.inclusion_exclusion_ok);

        let paley7 = paley_tournament(7).unwrap();
        assert_eq!(delta2(&paley7), 2);
        assert_eq!(delta2(&paley_tournament(11).unwrap()), 3);
        assert_eq!(delta2(&paley_tournament(3).unwrap()), 1);
    }

    #[test]
    fn paley_three_is_cyclic() {
        let p3 = paley_tournament(3).unwrap();
        assert!(p3.is_isomorphic_to(&three_cycle()));
        assert!(paley_tournament(5).is_err());
        assert!(paley_tournament(9).is_err());
        assert!(paley_tournament(1003).is_err());
    }

    #[test]
    fn arc_reversal_duality() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let n = rng.gen_range(3..=9);
            let t = random_tournament(n, &mut rng);
            let stats = cyclic_codegrees(&t);
            let mut k = 0;
            for i in 1..=n {
                for j in i + 1..=n {
                    let rev = t.reverse_arc(i, j);
                    let rev_stats = cyclic_codegrees(&rev);
                    assert_eq!(rev_stats.c[k], stats.r[k]);
                    k += 1;
                }
            }
        }
    }

    #[test]
    fn eq3_identity() {
        // 2|C(T)| + C(n,3) = Σ d⁻(x) d⁺(x)
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for _ in 0..500 {
            let n = rng.gen_range(3..=12u64) as u8;
            // build beyond MAX_VERTICES graphs directly from triangle count
            let t = random_tournament(n, &mut rng);
            let cyc = {
                let mut c = 0usize;
                for a in 1..=n {
                    for b in a + 1..=n {
                        for c2 in b + 1..=n {
                            if t.is_cyclic_triple(a, b, c2) {
                                c += 1;
                            }
                        }
                    }
                }
                c
            };
            let lhs = 2 * cyc + (n as usize) * (n as usize - 1) * (n as usize - 2) / 6;
            let rhs: usize = (1..=n).map(|x| t.in_degree(x) * t.out_degree(x)).sum();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_tournaments(1).unwrap().len(), 1);
        assert_eq!(enumerate_tournaments(2).unwrap().len(), 1);
        assert_eq!(enumerate_tournaments(3).unwrap().len(), 2);
        assert_eq!(enumerate_tournaments(4).unwrap().len(), 4);
        assert_eq!(enumerate_tournaments(5).unwrap().len(), 12);
        assert_eq!(enumerate_tournaments(6).unwrap().len(), 56);
        assert!(enumerate_tournaments(8).is_err());
    }

    #[test]
    fn enumeration_complete_up_to_five() {
        // brute force over all orientations, bucketed by canonical form
        for n in 2..=5u8 {
            let m = pair_count(n);
            let mut forms = std::collections::HashSet::new();
            for mask in 0u32..1 << m {
                let bits: Vec<bool> = (0..m).map(|i| mask >> i & 1 == 1).collect();
                let t = Tournament::from_bits(n, bits).unwrap();
                forms.insert(t.canonical().bits);
            }
            assert_eq!(forms.len(), enumerate_tournaments(n).unwrap().len());
        }
    }

    #[test]
    fn realize_examples() {
        let edge = ThreeGraph::new(3, &[(1, 2, 3)]).unwrap();
        let t = realize_as_tournament(&edge).unwrap();
        assert!(t.is_isomorphic_to(&three_cycle()));

        let k4m = ThreeGraph::new(4, &[(1, 2, 3), (1, 2, 4), (1, 3, 4)]).unwrap();
        assert!(realize_as_tournament(&k4m).is_none());

        // soundness on random tournaments: realize(C(T)) reproduces the class
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..50 {
            let n = rng.gen_range(3..=7);
            let t = random_tournament(n, &mut rng);
            let g = ct_construction(&t);
            let t2 = realize_as_tournament(&g).expect("C(T) must be realizable");
            assert_eq!(
                ct_construction(&t2).canonical_form(),
                g.canonical_form()
            );
        }
    }

    #[test]
    fn t_bounds() {
        assert_eq!(t_upper_bound(7).unwrap(), 2);
        assert_eq!(t_upper_bound(6).unwrap(), 1);
        assert_eq!(t_upper_bound(4).unwrap(), 1);
        assert!(t_upper_bound(2).is_err());
        for n in 3..=12u8 {
            assert_eq!(t_upper_bound(n).unwrap(), (n as i64 + 1) / 4);
        }

        assert_eq!(t_exact(3).unwrap(), 1);
        // no 4-vertex tournament covers all six pairs with cyclic
        // triangles: two triangles on four vertices share a pair
        assert_eq!(t_exact(4).unwrap(), 0);
        assert_eq!(t_exact(5).unwrap(), 1);
        assert_eq!(t_exact(6).unwrap(), 1);
        for n in 3..=7u8 {
            assert!((t_exact(n).unwrap() as i64) <= t_upper_bound(n).unwrap());
        }
        assert_eq!(t_exact(7).unwrap(), 2);
    }

    #[test]
    fn extend_paley7() {
        let paley7 = paley_tournament(7).unwrap();
        let ext = extend_tournament(&paley7, 1).unwrap();
        assert_eq!(ext.n(), 8);
        let d2 = delta2(&ext);
        assert!(d2 >= 1);
        // pair {x, y}: C = d⁻(x) = 2k+1 = 3
        let stats = cyclic_codegrees(&ext);
        assert_eq!(stats.c[pair_index(8, 1, 8)], 3);
        // pairs {v, y} with arc x→v carry exactly R_T(x, v) = k = 1
        for v in 2..=7u8 {
            if paley7.arc(1, v) {
                assert_eq!(stats.c[pair_index(8, v, 8)], 1);
            }
        }
        assert!(extend_tournament(&transitive(7), 1).is_err());
    }

    #[test]
    fn quasirandomness_examples() {
        assert_eq!(quasirandomness_defect(&three_cycle()).unwrap(), crate::rat(2, 9));
        // transitive defect at least the Y = V bound
        for n in [5u8, 8, 11] {
            let bound: i64 = (0..n as i64).map(|j| (n as i64 - 1 - 2 * j).abs()).sum();
            let d = quasirandomness_defect(&transitive(n)).unwrap();
            assert!(d >= crate::rat(bound, (n as i64) * (n as i64)));
        }
        let p11 = paley_tournament(11).unwrap();
        assert!(
            quasirandomness_defect(&p11).unwrap() < quasirandomness_defect(&transitive(11)).unwrap()
        );
    }

    #[test]
    fn relabel_round_trip() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..50 {
            let n = rng.gen_range(2..=7);
            let t = random_tournament(n, &mut rng);
            let mut perm: Vec<u8> = (1..=n).collect();
            perm.shuffle(&mut rng);
            assert!(t.relabel(&perm).is_isomorphic_to(&t));
            assert_eq!(ct_construction(&t.relabel(&perm)), ct_construction(&t).relabel(&perm));
        }
    }

    #[test]
    fn parse_round_trip() {
        let t = three_cycle();
        assert_eq!(t.to_string(), "3:101");
        assert_eq!("3:101".parse::<Tournament>().unwrap(), t);
        assert!("3:10".parse::<Tournament>().is_err());
        assert!("3:1x1".parse::<Tournament>().is_err());
    }
}
