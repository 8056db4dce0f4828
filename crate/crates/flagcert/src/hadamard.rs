//! Skew Hadamard matrices and the Reid–Brown bridge to doubly regular
//! tournaments.
//!
//! A skew Hadamard matrix of order n is a ±1 matrix H with H·Hᵀ = n·I and
//! H + Hᵀ = 2·I. A doubly regular tournament on n = 4k+3 vertices yields
//! one of order n+1 by bordering its ±1 adjacency matrix, and the
//! construction runs backwards after sign normalization.

use thiserror::Error;

use crate::tournaments::{check_doubly_regular, pair_count, pair_index, Tournament, TournamentError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HadamardError {
    #[error("order {0} is not a positive multiple of 4")]
    BadOrder(usize),
    #[error("entry at ({0}, {1}) is {2}, not ±1")]
    BadEntry(usize, usize, i64),
    #[error("H·Hᵀ ≠ n·I at ({0}, {1})")]
    NotOrthogonal(usize, usize),
    #[error("H + Hᵀ ≠ 2·I at ({0}, {1})")]
    NotSkew(usize, usize),
    #[error(transparent)]
    Tournament(#[from] TournamentError),
    #[error("malformed matrix file: {0}")]
    Parse(String),
}

/// A ±1 matrix satisfying both skew-Hadamard identities; checked exactly
/// at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewHadamardMatrix {
    order: usize,
    entries: Vec<i64>, // row-major
}

impl SkewHadamardMatrix {
    pub fn new(order: usize, entries: Vec<i64>) -> Result<SkewHadamardMatrix, HadamardError> {
        if order == 0 || order % 4 != 0 && order != 1 && order != 2 {
            return Err(HadamardError::BadOrder(order));
        }
        if entries.len() != order * order {
            return Err(HadamardError::Parse(format!(
                "expected {} entries, got {}",
                order * order,
                entries.len()
            )));
        }
        let m = SkewHadamardMatrix { order, entries };
        for i in 0..order {
            for j in 0..order {
                let e = m.get(i, j);
                if e != 1 && e != -1 {
                    return Err(HadamardError::BadEntry(i, j, e));
                }
            }
        }
        for i in 0..order {
            for j in 0..order {
                let dot: i64 = (0..order).map(|k| m.get(i, k) * m.get(j, k)).sum();
                let want = if i == j { order as i64 } else { 0 };
                if dot != want {
                    return Err(HadamardError::NotOrthogonal(i, j));
                }
                let sym = m.get(i, j) + m.get(j, i);
                let want = if i == j { 2 } else { 0 };
                if sym != want {
                    return Err(HadamardError::NotSkew(i, j));
                }
            }
        }
        Ok(m)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.order + j]
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }
}

/// Borders the ±1 adjacency matrix of a doubly regular tournament on
/// n ≡ 3 (mod 4) vertices with an all-ones row and a −1 column, then adds
/// the identity. Fails with the violated regularity condition otherwise.
pub fn tournament_to_skew_hadamard(
    t: &Tournament,
) -> Result<SkewHadamardMatrix, TournamentError> {
    check_doubly_regular(t)?;
    let n = t.n() as usize;
    let m = n + 1;
    // skew adjacency C bordered by an all-ones row 0 and a −1 column 0
    let mut c = vec![0i64; m * m];
    for j in 1..m {
        c[j] = 1;
        c[j * m] = -1;
    }
    for i in 1..m {
        for j in 1..m {
            if i == j {
                continue;
            }
            c[i * m + j] = if t.arc(i as u8, j as u8) { 1 } else { -1 };
        }
    }
    // H = C + I
    let mut h = c;
    for i in 0..m {
        h[i * m + i] += 1;
    }
    Ok(SkewHadamardMatrix::new(m, h).expect("bordered matrix must satisfy both identities"))
}

/// Reads a doubly regular tournament on m−1 vertices back out of a skew
/// Hadamard matrix of order m, normalizing signs so that the first row of
/// H − I is all ones off the diagonal.
pub fn skew_hadamard_to_tournament(h: &SkewHadamardMatrix) -> Result<Tournament, HadamardError> {
    let m = h.order();
    if m % 4 != 0 {
        return Err(HadamardError::BadOrder(m));
    }
    // C = H − I is skew (C = −Cᵀ); negating row i and column i together
    // preserves both identities, so force row 0 positive.
    let sign: Vec<i64> = (0..m)
        .map(|j| if j == 0 { 1 } else { h.get(0, j) })
        .collect();
    let n = (m - 1) as u8;
    let mut bits = vec![false; pair_count(n)];
    for i in 1..m {
        for j in i + 1..m {
            let c = sign[i] * sign[j] * h.get(i, j); // diagonal untouched
            bits[pair_index(n, i as u8, j as u8)] = c == 1;
        }
    }
    let t = Tournament::from_bits(n, bits)?;
    check_doubly_regular(&t)?;
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tournaments::{delta2, paley_tournament, Tournament};

    fn three_cycle() -> Tournament {
        Tournament::from_bits(3, vec![true, false, true]).unwrap()
    }

    #[test]
    fn paley7_gives_order_8() {
        let h = tournament_to_skew_hadamard(&paley_tournament(7).unwrap()).unwrap();
        assert_eq!(h.order(), 8);
    }

    #[test]
    fn three_cycle_gives_order_4() {
        let h = tournament_to_skew_hadamard(&three_cycle()).unwrap();
        assert_eq!(h.order(), 4);
        let t = skew_hadamard_to_tournament(&h).unwrap();
        assert!(t.is_isomorphic_to(&three_cycle()));
        assert_eq!(delta2(&t), 1);
    }

    #[test]
    fn transitive_rejected_with_reason() {
        let t = Tournament::from_bits(7, vec![true; 21]).unwrap();
        let err = tournament_to_skew_hadamard(&t).unwrap_err();
        assert!(matches!(err, TournamentError::NotDoublyRegular(_)));
    }

    #[test]
    fn round_trip_preserves_class() {
        for q in [3u64, 7, 11, 19] {
            let t = paley_tournament(q).unwrap();
            let h = tournament_to_skew_hadamard(&t).unwrap();
            assert_eq!(h.order() as u64, q + 1);
            let back = skew_hadamard_to_tournament(&h).unwrap();
            if q <= 7 {
                assert!(back.is_isomorphic_to(&t));
            } else {
                // canonical search is 9!-bounded; compare invariants instead
                assert_eq!(delta2(&back), delta2(&t));
            }
        }
    }

    #[test]
    fn normalization_handles_sign_flips() {
        let h = tournament_to_skew_hadamard(&paley_tournament(7).unwrap()).unwrap();
        // flip row 3 and column 3; both identities survive
        let m = h.order();
        let mut e = h.entries().to_vec();
        for j in 0..m {
            if j != 3 {
                e[3 * m + j] = -e[3 * m + j];
                e[j * m + 3] = -e[j * m + 3];
            }
        }
        let flipped = SkewHadamardMatrix::new(m, e).unwrap();
        let t = skew_hadamard_to_tournament(&flipped).unwrap();
        assert_eq!(delta2(&t), 2);
    }

    #[test]
    fn invalid_matrices_rejected() {
        assert!(SkewHadamardMatrix::new(3, vec![1; 9]).is_err());
        assert!(SkewHadamardMatrix::new(4, vec![1; 16]).is_err());
        let mut e = tournament_to_skew_hadamard(&three_cycle())
            .unwrap()
            .entries()
            .to_vec();
        e[1] = -e[1];
        assert!(SkewHadamardMatrix::new(4, e).is_err());
    }
}
