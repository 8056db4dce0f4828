//! The expression families of the certificate identity, expanded over 𝓕₇.
//!
//! Everything here is a linear combination of the 8157 canonical
//! K4⁻-free 7-vertex graphs with exact rational coefficients: the target
//! N − 3E, the 905 codegree expressions 𝒟, the three tight-path squares
//! 𝒫₀, 𝒫₁, 𝒫₂, and the quadratic forms attached to the six ι types.

use std::collections::HashMap;

use num::Zero;
use rayon::prelude::*;
use thiserror::Error;

use crate::density::{GraphBasis, LiftCounts, PairDensityTable};
use crate::flags::{tight_path_flag_sets, FlagError, FlagList, FlagSubset, TypeGraph};
use crate::linalg::{LinalgError, RationalMatrix};
use crate::{rat, Rat};

/// |𝓕₆^{ιᵢ}| for i = 1..6.
pub const IOTA_FLAG_COUNTS: [usize; 6] = [191, 173, 148, 135, 124, 95];
/// Extension-distribution ranks dᵢ for i = 1..6.
pub const IOTA_DIMENSIONS: [usize; 6] = [4, 0, 6, 1, 0, 1];
/// Index of N^τ (no edge) in the 3-vertex τ-flag list.
pub const N_TAU: usize = 0;
/// Index of E^τ (one edge) in the 3-vertex τ-flag list.
pub const E_TAU: usize = 1;

#[derive(Debug, Error)]
pub enum ExprError {
    #[error(transparent)]
    Flag(#[from] FlagError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("matrix side {0} does not match the ι{1} flag count {2}")]
    IotaDimension(usize, u8, usize),
    #[error("matrix for ι{0} must be symmetric")]
    IotaNotSymmetric(u8),
}

/// All flag lists and pair-density tables the identity needs; built once,
/// shared by everything downstream.
pub struct FlagContext {
    pub f6: GraphBasis,
    pub f7: GraphBasis,
    pub lift67: LiftCounts,
    pub tau3: FlagList,
    pub tau6: FlagList,
    /// 𝓕₅^{σᵢ} with the tight-path subsets 𝒫₃^{σᵢ} marked.
    pub tight_paths: [FlagSubset; 3],
    pub iota6: [FlagList; 6],
    /// p̄ over (𝓕₆^τ × 𝓕₃^τ), target 𝓕₇; denominator 42·5 = 210.
    pub tau_table: PairDensityTable,
    /// p̄ over (𝓕₆^{ιᵢ})², target 𝓕₇; denominator 2520·2 = 5040.
    pub iota_tables: [PairDensityTable; 6],
}

impl FlagContext {
    pub fn build() -> Result<FlagContext, ExprError> {
        let f6 = GraphBasis::new(6).map_err(FlagError::Graph)?;
        let f7 = GraphBasis::new(7).map_err(FlagError::Graph)?;
        let lift67 = LiftCounts::new(&f6, &f7);
        let tau = TypeGraph::tau();
        let tau3 = FlagList::generate(&tau, 3)?;
        let tau6 = FlagList::generate(&tau, 6)?;
        debug_assert_eq!(tau3.flags[N_TAU].graph().edge_count(), 0);
        debug_assert_eq!(tau3.flags[E_TAU].graph().edge_count(), 1);
        let tight_paths = tight_path_flag_sets()?;
        let iota6: Vec<FlagList> = (1..=6u8)
            .map(|i| FlagList::generate(&TypeGraph::iota(i), 6))
            .collect::<Result<_, _>>()?;
        let tau_table = PairDensityTable::direct(&tau6, &tau3, &f7)?;
        let iota_tables: Vec<PairDensityTable> = iota6
            .iter()
            .map(|list| PairDensityTable::direct(list, list, &f7))
            .collect::<Result<_, _>>()?;
        let iota6: [FlagList; 6] = iota6.try_into().expect("six iota lists");
        let iota_tables: [PairDensityTable; 6] =
            iota_tables.try_into().ok().expect("six iota tables");
        Ok(FlagContext {
            f6,
            f7,
            lift67,
            tau3,
            tau6,
            tight_paths,
            iota6,
            tau_table,
            iota_tables,
        })
    }
}

/// N − 3E over 𝓕₇: the coefficient of G is p(N, G) − 3·p(E, G)
/// = (35 − 4·|G|)/35.
pub fn target_vector(f7: &GraphBasis) -> Vec<Rat> {
    f7.graphs
        .iter()
        .map(|g| rat(35 - 4 * g.edge_count() as i64, 35))
        .collect()
}

/// One codegree expression ⟦F × (3E^τ − N^τ)⟧_τ, merged over the label
/// swap of τ.
#[derive(Debug, Clone)]
pub struct CodegreeExpression {
    /// Stable identifier, `D<rep>` with the smaller source flag index.
    pub id: String,
    /// Source flag index in 𝓕₆^τ (the smaller of the swap pair).
    pub rep: usize,
    /// The label-swapped source flag index (== rep for swap-fixed flags).
    pub partner: usize,
    /// Sparse numerators over 𝓕₇.
    pub numer: Vec<(u32, i64)>,
    pub denom: i64,
}

impl CodegreeExpression {
    pub fn coeff(&self, g: usize) -> Rat {
        match self.numer.binary_search_by_key(&(g as u32), |e| e.0) {
            Ok(i) => rat(self.numer[i].1, self.denom),
            Err(_) => rat(0, 1),
        }
    }

    /// slack ← slack − u · D
    pub fn subtract_scaled(&self, u: &Rat, slack: &mut [Rat]) {
        for &(g, num) in &self.numer {
            slack[g as usize] -= u * rat(num, self.denom);
        }
    }
}

/// The set 𝒟 = { ⟦F × (3E^τ − N^τ)⟧_τ : F ∈ 𝓕₆^τ }, with the label-swap
/// duplicates merged; exactly 905 expressions.
pub fn codegree_expressions(ctx: &FlagContext) -> Vec<CodegreeExpression> {
    let n_flags = ctx.tau6.len();
    // raw numerators per source flag
    let mut raw: Vec<HashMap<u32, i64>> = vec![HashMap::new(); n_flags];
    for (g, events) in ctx.tau_table.per_g.iter().enumerate() {
        for (&(a, b), &c) in events {
            let w = match b as usize {
                E_TAU => 3 * c as i64,
                N_TAU => -(c as i64),
                _ => unreachable!("3-vertex tau flag index"),
            };
            let entry = raw[a as usize].entry(g as u32).or_insert(0);
            *entry += w;
            if *entry == 0 {
                raw[a as usize].remove(&(g as u32));
            }
        }
    }
    // partner under the root label swap
    let partner: Vec<usize> = ctx
        .tau6
        .flags
        .iter()
        .map(|f| {
            let swapped = f.with_root_order(&[2, 1]).expect("swap is a root order");
            ctx.tau6
                .index_of(&swapped)
                .expect("swapped flag stays in the list")
        })
        .collect();

    let denom = ctx.tau_table.denom as i64;
    let mut out = Vec::new();
    for repr in 0..n_flags {
        if partner[repr] < repr {
            // merged into the smaller index; the two expressions agree
            debug_assert_eq!(raw[repr], raw[partner[repr]]);
            continue;
        }
        let mut numer: Vec<(u32, i64)> = raw[repr].iter().map(|(&g, &n)| (g, n)).collect();
        numer.sort_unstable_by_key(|e| e.0);
        out.push(CodegreeExpression {
            id: format!("D{repr:04}"),
            rep: repr,
            partner: partner[repr],
            numer,
            denom,
        });
    }
    out
}

/// ⟦(Σ_F w_F · F)²⟧_σ over 𝓕₇ for 5-vertex flags of a 4-vertex type:
/// expanded over 𝓕₆ by pair densities, then lifted through p(H, G).
pub fn squared_flag_expression(
    list: &FlagList,
    weights: &[i64],
    f6: &GraphBasis,
    lift: &LiftCounts,
    f7: &GraphBasis,
) -> Result<Vec<Rat>, ExprError> {
    assert_eq!(weights.len(), list.len());
    let table = PairDensityTable::direct(list, list, f6)?;
    let num6: Vec<i64> = (0..f6.len())
        .map(|h| {
            table.per_g[h]
                .iter()
                .map(|(&(a, b), &c)| weights[a as usize] * weights[b as usize] * c as i64)
                .sum()
        })
        .collect();
    let denom = (table.denom * lift.denom) as i64;
    Ok((0..f7.len())
        .map(|g| {
            let num: i64 = lift.counts[g]
                .iter()
                .zip(&num6)
                .map(|(&cnt, &n)| cnt as i64 * n)
                .sum();
            rat(num, denom)
        })
        .collect())
}

/// The tight-path expressions 𝒫ᵢ = ⟦(16·Σ_{F∈𝒫₃^{σᵢ}} F − Σ_{F∈𝓕₅^{σᵢ}} F)²⟧
/// for i ∈ {0, 1, 2}, over 𝓕₇.
pub fn tight_path_expressions(ctx: &FlagContext) -> Result<[Vec<Rat>; 3], ExprError> {
    let mut out = Vec::new();
    for subset in &ctx.tight_paths {
        let weights: Vec<i64> = subset
            .member
            .iter()
            .map(|&m| if m { 16 - 1 } else { -1 })
            .collect();
        out.push(squared_flag_expression(
            &subset.list,
            &weights,
            &ctx.f6,
            &ctx.lift67,
            &ctx.f7,
        )?);
    }
    Ok([out.remove(0), out.remove(0), out.remove(0)])
}

/// Σ_G (Σ_{a,b} M_{ab} · p̄(F_a^{ιᵢ}, F_b^{ιᵢ}, G)) · G for a symmetric
/// rational matrix M in the fixed flag enumeration order.
pub fn iota_quadratic_expression(
    ctx: &FlagContext,
    i: u8,
    m: &RationalMatrix,
) -> Result<Vec<Rat>, ExprError> {
    assert!((1..=6).contains(&i));
    let list = &ctx.iota6[i as usize - 1];
    if m.rows() != list.len() || m.cols() != list.len() {
        return Err(ExprError::IotaDimension(m.rows(), i, list.len()));
    }
    if !m.is_symmetric() {
        return Err(ExprError::IotaNotSymmetric(i));
    }
    let table = &ctx.iota_tables[i as usize - 1];
    let denom = rat(table.denom as i64, 1);
    let coeffs: Vec<Rat> = table
        .per_g
        .par_iter()
        .map(|events| {
            let mut acc = Rat::zero();
            for (&(a, b), &c) in events {
                let entry = m.get(a as usize, b as usize);
                if !entry.is_zero() {
                    acc += entry * rat(c as i64, 1);
                }
            }
            acc / &denom
        })
        .collect();
    Ok(coeffs)
}

/// The six extension-distribution dimensions dᵢ with their realizer
/// counts and basis vectors, computed against this context's flag orders.
pub fn iota_dimensions(ctx: &FlagContext) -> [crate::tournaments::IotaDimension; 6] {
    let mut out = Vec::with_capacity(6);
    for i in 1..=6u8 {
        let sigma = TypeGraph::iota(i);
        let list = &ctx.iota6[i as usize - 1];
        out.push(crate::tournaments::iota_dimension(
            sigma.underlying(),
            list.len(),
            &|h| list.index_of_labeled(h).expect("extension is a known flag"),
        ));
    }
    out.try_into().expect("six dimensions")
}

/// Probability that a uniformly random ordered v(σ)-subset of V(g)
/// induces σ in order; the independent side of the mass-conservation
/// check.
pub fn realize_probability(sigma: &TypeGraph, g: &crate::hypergraph::ThreeGraph) -> Rat {
    let s = sigma.n();
    let mut hits = 0i64;
    let mut total = 0i64;
    crate::flags::for_each_injection(g.n(), s, &mut |m| {
        total += 1;
        if let Ok(ind) = g.induced_subgraph(m) {
            if &ind == sigma.underlying() {
                hits += 1;
            }
        }
    });
    rat(hits, total)
}
