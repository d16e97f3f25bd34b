//! Named problem instances: Goldbach, Chen, Lemoine-Levy, two squares and two
//! triangular numbers. Each has a dedicated recursion written directly in
//! terms of its counting functions, a generic route through
//! [`RecursionEvaluator`], and a brute-force route through [`crate::oracle`].
//!
//! All series returned here are indexed by `n`, with step 1.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::oracle::{brute_count, PairMode};
use crate::recursion::{choose2, CountSeries, RecursionEvaluator, TheoremKind};
use crate::sequences::closed_form::{even_square_count, odd_square_count, pronic_count};
use crate::sequences::{
    make_sequence, make_sequence_from_tables, Parity, ParitySequence, SequenceKind, SieveTables,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Problem {
    Goldbach,
    ChenOddOdd,
    ChenTotal,
    LemoineLevy,
    TwoSquares,
    TwoTriangular,
}

/// Metadata describing how a problem is indexed and where it comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProblemSpec {
    pub problem: Problem,
    pub slug: &'static str,
    pub theorem: TheoremKind,
    /// Smallest `n`.
    pub first_n: u64,
    /// Human-readable argument map, e.g. `x = 2n`.
    pub argument_map: &'static str,
    pub description: &'static str,
    pub oeis: Option<&'static str>,
}

const GOLDBACH_TERMS: [u64; 30] = [
    0, 0, 1, 1, 2, 1, 2, 2, 2, 2, 3, 3, 3, 2, 3, 2, 4, 4, 2, 3, 4, 3, 4, 5, 4, 3, 5, 3, 4, 6,
];
const CHEN_ODD_ODD_TERMS: [u64; 21] = [0, 0, 1, 1, 2, 2, 3, 3, 3, 4, 5, 4, 6, 6, 4, 6, 6, 6, 8, 7, 7];
const CHEN_TOTAL_TERMS: [u64; 21] = [0, 1, 2, 2, 2, 3, 3, 4, 3, 4, 5, 5, 6, 7, 4, 6, 6, 7, 8, 8, 7];
const LEMOINE_LEVY_TERMS: [u64; 26] = [
    0, 0, 0, 1, 2, 2, 2, 2, 4, 2, 3, 3, 3, 4, 4, 2, 5, 3, 4, 4, 5, 4, 6, 4, 4, 7,
];
const TWO_TRIANGULAR_TERMS: [u64; 26] = [
    1, 1, 1, 1, 1, 0, 2, 1, 0, 1, 1, 1, 1, 1, 0, 1, 2, 0, 1, 0, 1, 2, 1, 0, 1, 1,
];

impl Problem {
    pub const ALL: [Problem; 6] = [
        Problem::Goldbach,
        Problem::ChenOddOdd,
        Problem::ChenTotal,
        Problem::LemoineLevy,
        Problem::TwoSquares,
        Problem::TwoTriangular,
    ];

    pub fn spec(self) -> ProblemSpec {
        match self {
            Problem::Goldbach => ProblemSpec {
                problem: self,
                slug: "goldbach",
                theorem: TheoremKind::OddOdd,
                first_n: 1,
                argument_map: "x = 2n",
                description: "unordered representations 2n = p + q, p and q odd primes",
                oeis: Some("A002375"),
            },
            Problem::ChenOddOdd => ProblemSpec {
                problem: self,
                slug: "chen-odd-odd",
                theorem: TheoremKind::OddOdd,
                first_n: 1,
                argument_map: "x = 2n",
                description: "unordered representations 2n = p + q, p an odd prime, q an odd prime or odd semiprime",
                oeis: None,
            },
            Problem::ChenTotal => ProblemSpec {
                problem: self,
                slug: "chen-total",
                theorem: TheoremKind::OddOdd,
                first_n: 1,
                argument_map: "x = 2n",
                description: "unordered representations 2n = p + q, p prime, q prime or semiprime",
                oeis: None,
            },
            Problem::LemoineLevy => ProblemSpec {
                problem: self,
                slug: "lemoine-levy",
                theorem: TheoremKind::EvenOdd,
                first_n: 1,
                argument_map: "x = 2n - 1",
                description: "representations 2n - 1 = 2q + p, p and q prime",
                oeis: Some("A046927"),
            },
            Problem::TwoSquares => ProblemSpec {
                problem: self,
                slug: "two-squares",
                theorem: TheoremKind::EvenOdd,
                first_n: 0,
                argument_map: "x = 4n + 1",
                description: "unordered representations 4n + 1 = a^2 + b^2, a, b >= 0",
                oeis: Some("A052343"),
            },
            Problem::TwoTriangular => ProblemSpec {
                problem: self,
                slug: "two-triangular",
                theorem: TheoremKind::EvenEven,
                first_n: 0,
                argument_map: "x = 2n (pronic summands), equivalently n = T_a + T_b",
                description: "unordered representations n = T_a + T_b, T_k = k(k + 1)/2, a, b >= 0",
                oeis: Some("A052343"),
            },
        }
    }

    pub fn slug(self) -> &'static str {
        self.spec().slug
    }

    /// Evaluator argument for index `n`.
    pub fn argument(self, n: u64) -> u64 {
        match self {
            Problem::Goldbach | Problem::ChenOddOdd | Problem::ChenTotal | Problem::TwoTriangular => 2 * n,
            Problem::LemoineLevy => 2 * n - 1,
            Problem::TwoSquares => 4 * n + 1,
        }
    }

    /// The first terms listed in the literature, starting at `first_n`.
    pub fn published_terms(self) -> &'static [u64] {
        match self {
            Problem::Goldbach => &GOLDBACH_TERMS,
            Problem::ChenOddOdd => &CHEN_ODD_ODD_TERMS,
            Problem::ChenTotal => &CHEN_TOTAL_TERMS,
            Problem::LemoineLevy => &LEMOINE_LEVY_TERMS,
            Problem::TwoSquares | Problem::TwoTriangular => &TWO_TRIANGULAR_TERMS,
        }
    }

    fn check_range(self, n_max: u64) -> Result<()> {
        let first = self.spec().first_n;
        if n_max < first {
            return Err(Error::OutOfRange {
                value: n_max,
                min: first,
                max: u64::MAX,
            });
        }
        Ok(())
    }

    /// Evaluates the problem's own recursion for `first_n..=n_max`.
    pub fn compute(self, n_max: u64) -> Result<CountSeries> {
        self.check_range(n_max)?;
        match self {
            Problem::TwoSquares => two_squares(n_max),
            Problem::TwoTriangular => two_triangular(n_max),
            _ => {
                let tables = SieveTables::new(2 * n_max)?;
                match self {
                    Problem::Goldbach => goldbach_with(&tables, n_max),
                    Problem::ChenOddOdd => chen_odd_odd_with(&tables, n_max),
                    Problem::ChenTotal => chen_total_with(&tables, n_max),
                    Problem::LemoineLevy => lemoine_levy_with(&tables, n_max),
                    _ => unreachable!(),
                }
            }
        }
    }

    /// Evaluates the same series with the generic evaluator on the problem's
    /// sequences.
    pub fn compute_generic(self, n_max: u64) -> Result<CountSeries> {
        self.check_range(n_max)?;
        let first = self.spec().first_n;
        let x_max = self.argument(n_max);
        let pairs = self.sequence_pairs(x_max)?;
        let mut total: Option<Vec<u64>> = None;
        for (kind, a, b) in &pairs {
            let mut ev = RecursionEvaluator::new(*kind, a, b)?;
            ev.run_to(x_max)?;
            let series = ev.series();
            let values: Vec<u64> = (first..=n_max)
                .map(|n| series.get(self.argument(n)).expect("evaluated through x_max"))
                .collect();
            total = Some(match total {
                None => values,
                Some(acc) => acc.iter().zip(&values).map(|(p, q)| p + q).collect(),
            });
        }
        Ok(CountSeries::from_values(first, 1, total.unwrap_or_default()))
    }

    /// Counts every term by enumeration.
    pub fn compute_oracle(self, n_max: u64) -> Result<CountSeries> {
        self.check_range(n_max)?;
        let first = self.spec().first_n;
        let x_max = self.argument(n_max);
        let pairs = self.sequence_pairs(x_max)?;
        let mut values = Vec::new();
        for n in first..=n_max {
            let x = self.argument(n);
            let mut count = 0;
            for (kind, a, b) in &pairs {
                let mode = match kind {
                    TheoremKind::EvenOdd => PairMode::RoleTagged,
                    _ => PairMode::Unordered,
                };
                count += brute_count(a, b, x, mode)?.count();
            }
            values.push(count);
        }
        Ok(CountSeries::from_values(first, 1, values))
    }

    /// The sequence pairs (and case) whose representation counts add up to
    /// this problem, materialized to `limit`.
    pub fn sequence_pairs(self, limit: u64) -> Result<Vec<(TheoremKind, ParitySequence, ParitySequence)>> {
        let from_sieve = |kind: SequenceKind, tables: &SieveTables| make_sequence_from_tables(kind, tables);
        Ok(match self {
            Problem::Goldbach => {
                let tables = SieveTables::new(limit)?;
                let p1 = from_sieve(SequenceKind::OddPrimes, &tables)?;
                vec![(TheoremKind::OddOdd, p1.clone(), p1)]
            }
            Problem::ChenOddOdd | Problem::ChenTotal => {
                let tables = SieveTables::new(limit)?;
                let p1 = from_sieve(SequenceKind::OddPrimes, &tables)?;
                let t = from_sieve(SequenceKind::PrimeOrOddSemiprime, &tables)?;
                let mut pairs = vec![(TheoremKind::OddOdd, p1, t)];
                if self == Problem::ChenTotal {
                    let (two, m) = chen_even_sequences(&tables)?;
                    pairs.push((TheoremKind::EvenEven, two, m));
                }
                pairs
            }
            Problem::LemoineLevy => {
                let tables = SieveTables::new(limit)?;
                let u = from_sieve(SequenceKind::DoubledPrimes, &tables)?;
                let v = from_sieve(SequenceKind::OddPrimes, &tables)?;
                vec![(TheoremKind::EvenOdd, u, v)]
            }
            Problem::TwoSquares => {
                let u = make_sequence(SequenceKind::EvenSquares, limit)?;
                let v = make_sequence(SequenceKind::OddSquares, limit)?;
                vec![(TheoremKind::EvenOdd, u, v)]
            }
            Problem::TwoTriangular => {
                let l = make_sequence(SequenceKind::Pronic, limit)?;
                vec![(TheoremKind::EvenEven, l.clone(), l)]
            }
        })
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.slug())
    }
}

impl FromStr for Problem {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Problem::ALL
            .into_iter()
            .find(|p| p.slug() == s)
            .ok_or_else(|| format!("unknown problem `{s}`"))
    }
}

/// The even summands of a Chen partition: `{2}` (the even prime) and
/// `{2} ∪ 2P` (even primes and even semiprimes).
fn chen_even_sequences(tables: &SieveTables) -> Result<(ParitySequence, ParitySequence)> {
    let limit = tables.limit();
    let two = ParitySequence::new(Parity::Even, if limit >= 2 { vec![2] } else { vec![] }, limit)?;
    let mut m: Vec<u64> = tables.primes().map(|p| 2 * p).take_while(|&d| d <= limit).collect();
    if limit >= 2 {
        m.insert(0, 2);
    }
    Ok((two, ParitySequence::new(Parity::Even, m, limit)?))
}

fn require_sieve(tables: &SieveTables, needed: u64) -> Result<()> {
    if tables.limit() < needed {
        return Err(Error::LimitExceeded {
            required: needed,
            limit: tables.limit(),
        });
    }
    Ok(())
}

/// Runs `step(n, tail)` for `n = first..=n_max`, where `tail` is the sum of
/// the values already produced, except that `seed` supplies the first value.
fn recurse(
    first: u64,
    n_max: u64,
    seed: u64,
    mut step: impl FnMut(u64) -> Result<i128>,
) -> Result<CountSeries> {
    let mut series = CountSeries::new(first, 1);
    if n_max < first {
        return Ok(series);
    }
    series.push(seed);
    let mut tail = seed as i128;
    for n in first + 1..=n_max {
        let value = step(n)? - tail;
        let value = u64::try_from(value).map_err(|_| Error::NegativeCount { argument: n, value })?;
        series.push(value);
        tail += value as i128;
    }
    Ok(series)
}

/// Number of unordered representations `2n = p + q` with `p`, `q` odd primes,
/// for `1 <= n <= n_max`.
pub fn goldbach(n_max: u64) -> Result<CountSeries> {
    goldbach_with(&SieveTables::new(2 * n_max)?, n_max)
}

/// g(2n) = Σ_{3≤p≤n} π₁(2n−p) − C(π₁(n), 2) − g(2n−2) − ... − g(2), g(2) = 0.
pub fn goldbach_with(tables: &SieveTables, n_max: u64) -> Result<CountSeries> {
    require_sieve(tables, 2 * n_max)?;
    recurse(1, n_max, 0, |n| {
        let sum: u64 = odd_primes_up_to(tables, n).map(|p| tables.pi_odd(2 * n - p)).sum();
        Ok(sum as i128 - choose2(tables.pi_odd(n)).unwrap() as i128)
    })
}

fn odd_primes_up_to(tables: &SieveTables, n: u64) -> impl Iterator<Item = u64> + '_ {
    tables.primes().skip(1).take_while(move |&p| p <= n)
}

/// Chen "odd-odd" counts: `2n = p + q`, `p` an odd prime, `q` an odd prime or
/// odd semiprime.
pub fn chen_odd_odd(n_max: u64) -> Result<CountSeries> {
    chen_odd_odd_with(&SieveTables::new(2 * n_max)?, n_max)
}

/// g₁(2n) = Σ_{3≤p≤n} π₁(2n−p) + Σ_{9≤q≤n} π₁(2n−q) + Σ_{3≤p≤n} π₂,₁(2n−p)
///          − π₁(n)·π₂,₁(n) − C(π₁(n), 2) − g₁(2n−2) − ... − g₁(2),
/// with `q` over odd semiprimes and g₁(2) = 0.
pub fn chen_odd_odd_with(tables: &SieveTables, n_max: u64) -> Result<CountSeries> {
    require_sieve(tables, 2 * n_max)?;
    let odd_semi = tables.semiprime_flags(true);
    let mut pi21 = Vec::with_capacity(odd_semi.len());
    let mut running = 0u64;
    for &flag in &odd_semi {
        running += flag as u64;
        pi21.push(running);
    }
    recurse(1, n_max, 0, |n| {
        let primes_part: u64 = odd_primes_up_to(tables, n)
            .map(|p| tables.pi_odd(2 * n - p) + pi21[(2 * n - p) as usize])
            .sum();
        let semi_part: u64 = (9..=n)
            .step_by(2)
            .filter(|&q| odd_semi[q as usize])
            .map(|q| tables.pi_odd(2 * n - q))
            .sum();
        let p1 = tables.pi_odd(n);
        let cross = p1 * pi21[n as usize] + choose2(p1).unwrap();
        Ok((primes_part + semi_part) as i128 - cross as i128)
    })
}

/// Even-even Chen counts: g₂(2n) = 1 iff n − 1 ∈ P ∪ {1}.
pub fn chen_even_even_with(tables: &SieveTables, n_max: u64) -> Result<CountSeries> {
    require_sieve(tables, n_max)?;
    let values = (1..=n_max)
        .map(|n| (n == 2 || (n >= 3 && tables.is_prime(n - 1))) as u64)
        .collect();
    Ok(CountSeries::from_values(1, 1, values))
}

pub fn chen_total(n_max: u64) -> Result<CountSeries> {
    chen_total_with(&SieveTables::new(2 * n_max)?, n_max)
}

/// g₁(2n) + g₂(2n).
pub fn chen_total_with(tables: &SieveTables, n_max: u64) -> Result<CountSeries> {
    let odd = chen_odd_odd_with(tables, n_max)?;
    let even = chen_even_even_with(tables, n_max)?;
    let values = odd.values().iter().zip(even.values()).map(|(a, b)| a + b).collect();
    Ok(CountSeries::from_values(1, 1, values))
}

/// Representations `2n − 1 = 2q + p` with `p`, `q` prime.
pub fn lemoine_levy(n_max: u64) -> Result<CountSeries> {
    lemoine_levy_with(&SieveTables::new(2 * n_max)?, n_max)
}

/// h(2n−1) = Σ_{3≤p≤n} π(n−(p+1)/2) + Σ_{2≤p≤⌊n/2⌋} π(2(n−p)−1)
///           − π(n)·π(⌊n/2⌋) − h(2n−3) − ... − h(1), h(1) = 0.
///
/// The first sum runs over the odd summand, so `p = 2` never occurs there.
pub fn lemoine_levy_with(tables: &SieveTables, n_max: u64) -> Result<CountSeries> {
    require_sieve(tables, 2 * n_max)?;
    recurse(1, n_max, 0, |n| {
        let odd_part: u64 = odd_primes_up_to(tables, n).map(|p| tables.pi(n - p.div_ceil(2))).sum();
        let doubled_part: u64 = tables
            .primes()
            .take_while(|&p| p <= n / 2)
            .map(|p| tables.pi(2 * (n - p) - 1))
            .sum();
        let cross = tables.pi(n) * tables.pi(n / 2);
        Ok((odd_part + doubled_part) as i128 - cross as i128)
    })
}

/// h(4n+1) = Σ_{even q ≤ 2n} ⌊(1+√(4n−q+1))/2⌋ + Σ_{odd q ≤ 2n+1} ⌊(2+√(4n−q+1))/2⌋
///           − ⌊(1+√(2n+1))/2⌋·⌊(2+√(2n+1))/2⌋ − h(4n−3) − ... − h(1), h(1) = 1,
/// where `q` runs over squares. The terms h(4i−1) vanish, so the tail only
/// holds arguments ≡ 1 (mod 4).
pub fn two_squares(n_max: u64) -> Result<CountSeries> {
    recurse(0, n_max, 1, |n| {
        let x = 4 * n + 1;
        let mid = 2 * n + 1;
        let even_part: u64 = (0..)
            .map(|k: u64| 4 * k * k)
            .take_while(|&q| q <= mid)
            .map(|q| odd_square_count(x - q))
            .sum();
        let odd_part: u64 = (0..)
            .map(|k: u64| (2 * k + 1) * (2 * k + 1))
            .take_while(|&q| q <= mid)
            .map(|q| even_square_count(x - q))
            .sum();
        let cross = odd_square_count(mid) * even_square_count(mid);
        Ok((even_part + odd_part) as i128 - cross as i128)
    })
}

/// t(n) = Σ_{k=1}^{K} ⌊(1+√(1+4(2n−k²+k)))/2⌋ − C(K, 2) − t(n−1) − ... − t(0),
/// K = ⌊(1+√(4n+1))/2⌋, t(0) = 1.
pub fn two_triangular(n_max: u64) -> Result<CountSeries> {
    recurse(0, n_max, 1, |n| {
        let k_max = pronic_count(n);
        let sum: u64 = (1..=k_max).map(|k| pronic_count(2 * n - k * k + k)).sum();
        Ok(sum as i128 - choose2(k_max).unwrap() as i128)
    })
}
