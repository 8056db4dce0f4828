//! Types and rooted flags.
//!
//! A type σ is a fully labeled K4⁻-free 3-graph; a σ-flag is a 3-graph
//! with an ordered embedding of σ (the root). Flags are compared up to
//! σ-preserving isomorphism: relabelings that fix the root pointwise.
//!
//! The nine types used in the certificate identity are provided as named
//! constants: the 2-vertex type τ, the 4-vertex types σ₀, σ₁, σ₂ (0, 1 and
//! 2 edges), and the 5-vertex types ι₁..ι₆. The ι edge lists are pinned by
//! two computed signatures: |𝓕₆^ιᵢ| = (191, 173, 148, 135, 124, 95) and
//! the extension-distribution ranks (4, 0, 6, 1, 0, 1).

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::hypergraph::{enumerate_free, for_each_permutation, GraphError, ThreeGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FlagError {
    #[error("type graph is not K4⁻-free")]
    TypeNotFree,
    #[error("flag graph is not K4⁻-free")]
    GraphNotFree,
    #[error("root {0:?} is not an injection into the flag's vertex set")]
    BadRoot(Vec<u8>),
    #[error("root does not induce the type's graph in root order")]
    RootMismatch,
    #[error("flag size {0} outside the supported range {1}..=7")]
    SizeGuard(u8, u8),
    #[error("unknown type name {0:?}")]
    UnknownType(String),
    #[error("tight-path set for sigma{0} does not hit every realizing tournament exactly once")]
    TightPathDerivation(u8),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Edge lists of the six 5-vertex types of the certificate identity.
/// Among the eleven classes of 𝓕₅ these are the unique ones whose flag
/// counts |𝓕₆^ι| are (191, 173, 148, 135, 124, 95); the
/// extension-distribution ranks (4, 0, 6, 1, 0, 1) confirm the match.
const IOTA_EDGES: [&[(u8, u8, u8)]; 6] = [
    &[(1, 2, 3), (1, 2, 4)],
    &[(1, 2, 3), (1, 4, 5)],
    &[(1, 2, 3), (1, 2, 4), (1, 2, 5)],
    &[(1, 2, 3), (1, 2, 4), (1, 3, 5)],
    &[(1, 2, 3), (1, 2, 4), (3, 4, 5)],
    &[(1, 2, 3), (1, 2, 4), (1, 3, 5), (2, 4, 5)],
];

/// A fully labeled K4⁻-free 3-graph serving as a root pattern.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TypeGraph {
    underlying: ThreeGraph,
}

impl TypeGraph {
    pub fn new(underlying: ThreeGraph) -> Result<TypeGraph, FlagError> {
        if !underlying.is_k4minus_free() {
            return Err(FlagError::TypeNotFree);
        }
        Ok(TypeGraph { underlying })
    }

    /// The empty type on 0 vertices.
    pub fn empty() -> TypeGraph {
        TypeGraph { underlying: ThreeGraph::empty(0) }
    }

    /// τ: two labeled vertices, no edges.
    pub fn tau() -> TypeGraph {
        TypeGraph { underlying: ThreeGraph::empty(2) }
    }

    /// σᵢ for i ∈ {0, 1, 2}: the 4-vertex types with i edges.
    pub fn sigma(i: u8) -> TypeGraph {
        let edges: &[(u8, u8, u8)] = match i {
            0 => &[],
            1 => &[(1, 2, 3)],
            2 => &[(1, 2, 3), (1, 2, 4)],
            _ => panic!("sigma index must be 0, 1 or 2"),
        };
        TypeGraph { underlying: ThreeGraph::new(4, edges).unwrap() }
    }

    /// ιᵢ for i ∈ 1..=6: the 5-vertex types of the certificate identity.
    pub fn iota(i: u8) -> TypeGraph {
        assert!((1..=6).contains(&i), "iota index must be in 1..=6");
        TypeGraph {
            underlying: ThreeGraph::new(5, IOTA_EDGES[i as usize - 1]).unwrap(),
        }
    }

    /// Looks a type up by its name: `empty`, `tau`, `sigma0`..`sigma2`,
    /// `iota1`..`iota6`.
    pub fn by_name(name: &str) -> Result<TypeGraph, FlagError> {
        match name {
            "empty" => Ok(TypeGraph::empty()),
            "tau" => Ok(TypeGraph::tau()),
            "sigma0" => Ok(TypeGraph::sigma(0)),
            "sigma1" => Ok(TypeGraph::sigma(1)),
            "sigma2" => Ok(TypeGraph::sigma(2)),
            _ => match name.strip_prefix("iota").and_then(|s| s.parse::<u8>().ok()) {
                Some(i) if (1..=6).contains(&i) => Ok(TypeGraph::iota(i)),
                _ => Err(FlagError::UnknownType(name.to_string())),
            },
        }
    }

    /// Name of the type if it is one of the nine named constants.
    pub fn name(&self) -> Option<String> {
        if self.underlying == ThreeGraph::empty(0) {
            return Some("empty".into());
        }
        if self.underlying == ThreeGraph::empty(2) {
            return Some("tau".into());
        }
        for i in 0..=2 {
            if *self == TypeGraph::sigma(i) {
                return Some(format!("sigma{i}"));
            }
        }
        for i in 1..=6 {
            if *self == TypeGraph::iota(i) {
                return Some(format!("iota{i}"));
            }
        }
        None
    }

    pub fn n(&self) -> u8 {
        self.underlying.n()
    }

    pub fn underlying(&self) -> &ThreeGraph {
        &self.underlying
    }
}

impl fmt::Display for TypeGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.name() {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "type[{}]", self.underlying),
        }
    }
}

/// A 3-graph with a distinguished ordered embedding of a type.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Flag {
    type_graph: TypeGraph,
    graph: ThreeGraph,
    root: Vec<u8>,
}

impl Flag {
    /// Validates that `root` is an injection whose induced subgraph, in
    /// root order, equals the type's graph exactly, and that the flag's
    /// graph is K4⁻-free.
    pub fn new(type_graph: TypeGraph, graph: ThreeGraph, root: Vec<u8>) -> Result<Flag, FlagError> {
        if root.len() != type_graph.n() as usize {
            return Err(FlagError::BadRoot(root));
        }
        let induced = graph
            .induced_subgraph(&root)
            .map_err(|_| FlagError::BadRoot(root.clone()))?;
        if &induced != type_graph.underlying() {
            return Err(FlagError::RootMismatch);
        }
        if !graph.is_k4minus_free() {
            return Err(FlagError::GraphNotFree);
        }
        Ok(Flag { type_graph, graph, root })
    }

    pub fn type_graph(&self) -> &TypeGraph {
        &self.type_graph
    }

    pub fn graph(&self) -> &ThreeGraph {
        &self.graph
    }

    pub fn root(&self) -> &[u8] {
        &self.root
    }

    pub fn n(&self) -> u8 {
        self.graph.n()
    }

    /// Number of root (= type) vertices.
    pub fn root_size(&self) -> u8 {
        self.type_graph.n()
    }

    /// Same flag with root vertices relabeled `1..=s` in root order and the
    /// remaining vertices `s+1..` in increasing original order.
    pub fn normalized(&self) -> Flag {
        let n = self.graph.n();
        let s = self.root_size();
        let mut order: Vec<u8> = self.root.clone();
        for v in 1..=n {
            if !self.root.contains(&v) {
                order.push(v);
            }
        }
        let graph = self.graph.induced_subgraph(&order).unwrap();
        Flag {
            type_graph: self.type_graph.clone(),
            graph,
            root: (1..=s).collect(),
        }
    }

    /// Lexicographically least graph over all relabelings that fix the
    /// root pointwise (after normalization). Two flags are isomorphic as
    /// σ-flags iff their canonical graphs agree.
    pub fn canonical_graph(&self) -> ThreeGraph {
        let norm = self.normalized();
        canonical_rooted(&norm.graph, norm.root_size())
    }

    /// Reorders the root embedding by `perm` (a permutation of `1..=s`):
    /// new root position i points at the old position perm[i-1].
    pub fn with_root_order(&self, perm: &[u8]) -> Result<Flag, FlagError> {
        let root: Vec<u8> = perm
            .iter()
            .map(|&i| self.root[i as usize - 1])
            .collect();
        Flag::new(self.type_graph.clone(), self.graph.clone(), root)
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|root=", self.graph)?;
        for v in &self.root {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Least relabeling of `graph` over the permutations fixing `1..=s`
/// pointwise. `graph` must already have its root at `1..=s`.
pub(crate) fn canonical_rooted(graph: &ThreeGraph, s: u8) -> ThreeGraph {
    let n = graph.n();
    if n - s <= 1 {
        return graph.clone();
    }
    let mut best = graph.clone();
    let mut scratch: Vec<u8> = (s + 1..=n).collect();
    for_each_permutation(&mut scratch, &mut |tail| {
        let mut perm: Vec<u8> = (1..=s).collect();
        perm.extend_from_slice(tail);
        // perm maps vertex v -> perm[v-1]; root stays put
        let cand = graph.relabel(&perm);
        if cand.edges() < best.edges() {
            best = cand;
        }
    });
    best
}

/// The σ-flags on `k` vertices, one canonical representative per
/// σ-preserving isomorphism class, in lexicographic order of their
/// canonical graphs.
#[derive(Debug, Clone)]
pub struct FlagList {
    pub type_graph: TypeGraph,
    pub k: u8,
    pub flags: Vec<Flag>,
    /// every root-normalized labeled form -> index of its class
    index: HashMap<ThreeGraph, usize>,
}

impl FlagList {
    /// Generates 𝓕ₖ^σ by considering all ordered injections of the type
    /// into every element of 𝓕ₖ.
    pub fn generate(type_graph: &TypeGraph, k: u8) -> Result<FlagList, FlagError> {
        let s = type_graph.n();
        if k < s || k > 7 {
            return Err(FlagError::SizeGuard(k, s));
        }
        let graphs = enumerate_free(k).map_err(FlagError::Graph)?;
        let mut canon_set: HashMap<ThreeGraph, ()> = HashMap::new();
        for g in &graphs {
            for_each_injection(k, s, &mut |m| {
                if let Ok(induced) = g.induced_subgraph(m) {
                    if &induced == type_graph.underlying() {
                        let flag = Flag {
                            type_graph: type_graph.clone(),
                            graph: g.clone(),
                            root: m.to_vec(),
                        };
                        canon_set.insert(flag.canonical_graph(), ());
                    }
                }
            });
        }
        let mut canon: Vec<ThreeGraph> = canon_set.into_keys().collect();
        canon.sort_unstable();
        let root: Vec<u8> = (1..=s).collect();
        let flags: Vec<Flag> = canon
            .into_iter()
            .map(|graph| Flag {
                type_graph: type_graph.clone(),
                graph,
                root: root.clone(),
            })
            .collect();

        // index every labeled form reachable by a root-fixing relabeling
        let mut index = HashMap::new();
        for (i, f) in flags.iter().enumerate() {
            let n = f.graph.n();
            if n - s <= 1 {
                index.insert(f.graph.clone(), i);
            } else {
                let mut scratch: Vec<u8> = (s + 1..=n).collect();
                for_each_permutation(&mut scratch, &mut |tail| {
                    let mut perm: Vec<u8> = (1..=s).collect();
                    perm.extend_from_slice(tail);
                    index.insert(f.graph.relabel(&perm), i);
                });
            }
        }
        Ok(FlagList { type_graph: type_graph.clone(), k, flags, index })
    }

    pub fn len(&self) -> usize {
        self.flags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flags.is_empty()
    }

    /// Index of the class of a root-normalized labeled graph (root at
    /// `1..=s`, in order). O(1); no canonicalization.
    pub fn index_of_labeled(&self, graph: &ThreeGraph) -> Option<usize> {
        self.index.get(graph).copied()
    }

    /// Index of the class of an arbitrary flag of this type and size.
    pub fn index_of(&self, flag: &Flag) -> Option<usize> {
        self.index.get(&flag.normalized().graph).copied()
    }
}

/// Calls `f` with every ordered injection of `1..=s` into `1..=k`.
pub fn for_each_injection(k: u8, s: u8, f: &mut impl FnMut(&[u8])) {
    let mut current: Vec<u8> = Vec::with_capacity(s as usize);
    let mut used = vec![false; k as usize + 1];
    fn rec(
        k: u8,
        s: u8,
        current: &mut Vec<u8>,
        used: &mut [bool],
        f: &mut impl FnMut(&[u8]),
    ) {
        if current.len() == s as usize {
            f(current);
            return;
        }
        for v in 1..=k {
            if !used[v as usize] {
                used[v as usize] = true;
                current.push(v);
                rec(k, s, current, used, f);
                current.pop();
                used[v as usize] = false;
            }
        }
    }
    rec(k, s, &mut current, &mut used, f);
}

/// The tight-path flag sets 𝒫₃^{σᵢ} ⊆ 𝓕₅^{σᵢ} for i ∈ {0, 1, 2}.
///
/// Every member connects the root pair {1,2} tightly to {3,4} by a tight
/// path of length exactly 3. The path condition alone is not enough: for
/// the certificate identity to vanish on tournament constructions, every
/// labeled 4-vertex tournament J realizing σᵢ must see exactly one of the
/// 16 one-vertex extensions land in 𝒫₃^{σᵢ}. The sets are therefore
/// derived in two steps:
///
/// 1. filter 𝓕₅^{σᵢ} down to the flags containing a qualifying path;
/// 2. if that set already hits every realizer exactly once, keep it
///    (σ₀, six flags); otherwise keep the flags whose path runs through
///    the unlabeled vertex as its middle — edges {1,2,5} and {3,4,5}
///    present — when such flags exist (σ₁, two flags), and the
///    maximum-edge-count path flags otherwise (σ₂, two flags).
///
/// Both reductions are invariant under the root relabelings that fix the
/// pairs {1,2} and {3,4}, and the exactness property is re-checked on the
/// result.
pub fn tight_path_flag_sets() -> Result<[FlagSubset; 3], FlagError> {
    use crate::tournaments::{ct_construction, pair_count, pair_index, realizing_tournaments_labeled, Tournament};
    let mut out = Vec::new();
    for i in 0..=2u8 {
        let sigma = TypeGraph::sigma(i);
        let list = FlagList::generate(&sigma, 5)?;
        let path: Vec<bool> = list
            .flags
            .iter()
            .map(|f| has_tight_path_length_3(f.graph()))
            .collect();

        // per-realizer extension distribution over the flag classes
        let realizers = realizing_tournaments_labeled(sigma.underlying());
        let mut tables: Vec<Vec<usize>> = Vec::with_capacity(realizers.len());
        for j in &realizers {
            let mut row = vec![0usize; list.len()];
            for pattern in 0u32..16 {
                let mut bits = vec![false; pair_count(5)];
                for a in 1..=4u8 {
                    for b in a + 1..=4 {
                        bits[pair_index(5, a, b)] = j.arc(a, b);
                    }
                }
                for a in 1..=4u8 {
                    bits[pair_index(5, a, 5)] = pattern >> (a - 1) & 1 == 1;
                }
                let ext = Tournament::from_bits(5, bits).unwrap();
                let g = ct_construction(&ext);
                let idx = list
                    .index_of_labeled(&g)
                    .expect("tournament extension must be a known flag");
                row[idx] += 1;
            }
            tables.push(row);
        }
        let exact = |member: &[bool]| {
            tables.iter().all(|row| {
                row.iter()
                    .zip(member)
                    .filter(|(_, &m)| m)
                    .map(|(c, _)| c)
                    .sum::<usize>()
                    == 1
            })
        };

        let member = if exact(&path) {
            path
        } else {
            let star: Vec<bool> = list
                .flags
                .iter()
                .zip(&path)
                .map(|(f, &p)| {
                    p && f.graph().has_edge_verts(1, 2, 5) && f.graph().has_edge_verts(3, 4, 5)
                })
                .collect();
            let candidate = if star.iter().any(|&m| m) {
                star
            } else {
                let max_edges = list
                    .flags
                    .iter()
                    .zip(&path)
                    .filter(|(_, &p)| p)
                    .map(|(f, _)| f.graph().edge_count())
                    .max()
                    .unwrap_or(0);
                list.flags
                    .iter()
                    .zip(&path)
                    .map(|(f, &p)| p && f.graph().edge_count() == max_edges)
                    .collect()
            };
            if !exact(&candidate) {
                return Err(FlagError::TightPathDerivation(i));
            }
            candidate
        };
        out.push(FlagSubset { list, member });
    }
    Ok([out.remove(0), out.remove(0), out.remove(0)])
}

/// A flag list together with a marked subset.
#[derive(Debug, Clone)]
pub struct FlagSubset {
    pub list: FlagList,
    pub member: Vec<bool>,
}

impl FlagSubset {
    pub fn subset_flags(&self) -> Vec<&Flag> {
        self.list
            .flags
            .iter()
            .zip(&self.member)
            .filter(|(_, &m)| m)
            .map(|(f, _)| f)
            .collect()
    }

    pub fn subset_size(&self) -> usize {
        self.member.iter().filter(|&&m| m).count()
    }
}

/// True iff a sequence of 5 distinct vertices v₁..v₅ exists with edges
/// {vᵢ, vᵢ₊₁, vᵢ₊₂} for i = 1..3, {1,2} ⊆ e₁ and {3,4} ⊆ e₃.
fn has_tight_path_length_3(g: &ThreeGraph) -> bool {
    debug_assert_eq!(g.n(), 5);
    let mut found = false;
    let mut scratch: Vec<u8> = (1..=5).collect();
    for_each_permutation(&mut scratch, &mut |v| {
        if found {
            return;
        }
        let e1 = [v[0], v[1], v[2]];
        let e2 = [v[1], v[2], v[3]];
        let e3 = [v[2], v[3], v[4]];
        let has = |e: [u8; 3]| g.has_edge_verts(e[0], e[1], e[2]);
        if has(e1) && has(e2) && has(e3) {
            let in_e1 = e1.contains(&1) && e1.contains(&2);
            let in_e3 = e3.contains(&3) && e3.contains(&4);
            if in_e1 && in_e3 {
                found = true;
            }
        }
    });
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_types_exist_and_are_free() {
        for name in [
            "empty", "tau", "sigma0", "sigma1", "sigma2", "iota1", "iota2", "iota3", "iota4",
            "iota5", "iota6",
        ] {
            let t = TypeGraph::by_name(name).unwrap();
            assert!(t.underlying().is_k4minus_free());
            assert_eq!(t.name().as_deref(), Some(name));
        }
        assert!(TypeGraph::by_name("iota7").is_err());
        assert!(TypeGraph::by_name("bogus").is_err());
    }

    #[test]
    fn flag_validation() {
        let tau = TypeGraph::tau();
        let e = ThreeGraph::new(3, &[(1, 2, 3)]).unwrap();
        assert!(Flag::new(tau.clone(), e.clone(), vec![1, 2]).is_ok());
        assert!(Flag::new(tau.clone(), e.clone(), vec![1]).is_err());
        assert!(Flag::new(tau.clone(), e.clone(), vec![1, 1]).is_err());
        // sigma1's root must induce the single edge in order
        let s1 = TypeGraph::sigma(1);
        let g = ThreeGraph::new(5, &[(1, 2, 3)]).unwrap();
        assert!(Flag::new(s1.clone(), g.clone(), vec![1, 2, 3, 4]).is_ok());
        assert!(Flag::new(s1, g, vec![1, 2, 4, 5]).is_err());
        // non-free graphs are rejected
        let k4m = ThreeGraph::new(4, &[(1, 2, 3), (1, 2, 4), (1, 3, 4)]).unwrap();
        assert!(Flag::new(TypeGraph::tau(), k4m, vec![1, 2]).is_err());
    }

    #[test]
    fn tau_three_vertex_flags() {
        let list = FlagList::generate(&TypeGraph::tau(), 3).unwrap();
        assert_eq!(list.len(), 2);
        assert_eq!(list.flags[0].graph(), &ThreeGraph::empty(3));
        assert_eq!(
            list.flags[1].graph(),
            &ThreeGraph::new(3, &[(1, 2, 3)]).unwrap()
        );
    }

    #[test]
    fn flag_isomorphism_ignores_nonroot_labels() {
        let tau = TypeGraph::tau();
        let a = Flag::new(
            tau.clone(),
            ThreeGraph::new(4, &[(1, 2, 3)]).unwrap(),
            vec![1, 2],
        )
        .unwrap();
        let b = Flag::new(
            tau.clone(),
            ThreeGraph::new(4, &[(1, 2, 4)]).unwrap(),
            vec![1, 2],
        )
        .unwrap();
        assert_eq!(a.canonical_graph(), b.canonical_graph());
        // rooting the same graph at a pair outside the edge differs
        let c = Flag::new(
            tau,
            ThreeGraph::new(4, &[(1, 2, 3)]).unwrap(),
            vec![1, 4],
        )
        .unwrap();
        assert_ne!(a.canonical_graph(), c.canonical_graph());
    }

    #[test]
    fn normalization_reorders_root_first() {
        let tau = TypeGraph::tau();
        let f = Flag::new(
            tau,
            ThreeGraph::new(4, &[(2, 3, 4)]).unwrap(),
            vec![4, 2],
        )
        .unwrap();
        let norm = f.normalized();
        assert_eq!(norm.root(), &[1, 2]);
        // 4 -> 1, 2 -> 2, rest in increasing order: 1 -> 3, 3 -> 4
        assert_eq!(norm.graph(), &ThreeGraph::new(4, &[(1, 2, 4)]).unwrap());
    }

    #[test]
    fn tight_path_sets_have_expected_sizes() {
        let sets = tight_path_flag_sets().unwrap();
        assert_eq!(sets[0].subset_size(), 6);
        assert_eq!(sets[1].subset_size(), 2);
        assert_eq!(sets[2].subset_size(), 2);
    }
}
