//! Brute-force representation counting and the triangular/square pair
//! correspondence. Nothing here shares code with the recursion: membership is
//! tested by binary search on the raw terms, never through a counting table.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::sequences::ParitySequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairMode {
    /// `{a, b}` counted once regardless of which sequence supplies which
    /// summand. Pairs are stored as `(min, max)`.
    Unordered,
    /// `(a, b)` with `a` from the first sequence and `b` from the second.
    RoleTagged,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentationList {
    pub target: u64,
    pub mode: PairMode,
    pub pairs: Vec<(u64, u64)>,
}

impl RepresentationList {
    pub fn count(&self) -> u64 {
        self.pairs.len() as u64
    }
}

/// Every solution of `x = a + b` with `a ∈ seq_a`, `b ∈ seq_b`.
pub fn brute_count(
    seq_a: &ParitySequence,
    seq_b: &ParitySequence,
    x: u64,
    mode: PairMode,
) -> Result<RepresentationList> {
    let limit = seq_a.limit().min(seq_b.limit());
    if x > limit {
        return Err(Error::LimitExceeded { required: x, limit });
    }
    let b_terms = seq_b.terms();
    let found = seq_a
        .terms()
        .iter()
        .take_while(|&&a| a <= x)
        .filter(|&&a| b_terms.binary_search(&(x - a)).is_ok())
        .map(|&a| (a, x - a));
    let pairs = match mode {
        PairMode::RoleTagged => found.collect(),
        PairMode::Unordered => found
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect(),
    };
    Ok(RepresentationList {
        target: x,
        mode,
        pairs,
    })
}

/// T_k = k(k+1)/2.
pub fn triangular(k: u64) -> u64 {
    k * (k + 1) / 2
}

/// Maps a triangular pair `(a, b)` with `n = T_a + T_b` to the square pair
/// `(a + b + 1, |a − b|)` of `4n + 1`. Returns `n` and the square pair.
pub fn triangular_to_squares(a: u64, b: u64) -> (u64, (u64, u64)) {
    let n = triangular(a) + triangular(b);
    (n, (a + b + 1, a.abs_diff(b)))
}

/// Inverse of [`triangular_to_squares`]: for `x² + y² ≡ 1 (mod 4)` returns
/// `n` with `4n + 1 = x² + y²` and the triangular pair
/// `((x+y−1)/2, (|x−y|−1)/2)`, after putting `x >= y`.
pub fn squares_to_triangular(x: u64, y: u64) -> Result<(u64, (u64, u64))> {
    let (x, y) = (x.max(y), x.min(y));
    // exactly one of x, y must be odd
    if (x + y) % 2 == 0 {
        return Err(Error::InvalidSequence(format!(
            "{x}² + {y}² is not congruent to 1 mod 4"
        )));
    }
    let sum = x * x + y * y;
    let pair = ((x + y - 1) / 2, (x - y - 1) / 2);
    Ok(((sum - 1) / 4, pair))
}

/// T_x + T_{x−1} = x².
pub fn verify_remark_identity(x: u64) -> bool {
    x >= 1 && triangular(x) + triangular(x - 1) == x * x
}

/// Unordered pairs `a <= b` with `T_a + T_b = n`.
pub fn triangular_pairs(n: u64) -> Vec<(u64, u64)> {
    let mut pairs = Vec::new();
    let mut a = 0;
    while 2 * triangular(a) <= n {
        let rest = n - triangular(a);
        let mut b = a;
        while triangular(b) < rest {
            b += 1;
        }
        if triangular(b) == rest {
            pairs.push((a, b));
        }
        a += 1;
    }
    pairs
}

/// Unordered pairs `x >= y >= 0` with `x² + y² = m`.
pub fn square_pairs(m: u64) -> Vec<(u64, u64)> {
    let mut pairs = Vec::new();
    let mut y = 0;
    while 2 * y * y <= m {
        let rest = m - y * y;
        let x = (rest as f64).sqrt() as u64;
        for cand in x.saturating_sub(1)..=x + 1 {
            if cand * cand == rest && cand >= y {
                pairs.push((cand, y));
            }
        }
        y += 1;
    }
    pairs
}
