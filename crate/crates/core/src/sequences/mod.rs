//! Increasing integer sequences of uniform parity and their counting
//! functions.

pub mod closed_form;
pub mod sieve;

use std::fmt;

pub use sieve::{build_sieve, pi_hardy_wright, SieveTables, DEFAULT_TABLE_BUDGET};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn of(n: u64) -> Self {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
        })
    }
}

/// A strictly increasing sequence of nonnegative integers of one parity,
/// materialized up to `limit`. Membership (and so the counting function) is
/// known exactly for every `x <= limit`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParitySequence {
    terms: Vec<u64>,
    parity: Parity,
    limit: u64,
    // counts[x] = #{terms <= x}
    counts: Vec<u32>,
}

impl ParitySequence {
    pub fn new(parity: Parity, terms: Vec<u64>, limit: u64) -> Result<Self> {
        Self::with_budget(parity, terms, limit, DEFAULT_TABLE_BUDGET)
    }

    pub fn with_budget(parity: Parity, terms: Vec<u64>, limit: u64, budget: u64) -> Result<Self> {
        let requested = limit.saturating_add(1);
        if requested > budget || requested > u32::MAX as u64 {
            return Err(Error::ResourceLimit { requested, budget });
        }
        validate_terms(parity, &terms, limit)?;

        let mut counts = Vec::with_capacity(requested as usize);
        let mut next = terms.iter().peekable();
        let mut running = 0u32;
        for x in 0..=limit {
            if next.next_if(|&&t| t == x).is_some() {
                running += 1;
            }
            counts.push(running);
        }
        Ok(Self {
            terms,
            parity,
            limit,
            counts,
        })
    }

    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn first(&self) -> Option<u64> {
        self.terms.first().copied()
    }

    /// Counting function: number of terms `<= x`. Panics if `x > limit`.
    #[inline]
    pub fn count(&self, x: u64) -> u64 {
        assert!(
            x <= self.limit,
            "count({x}) beyond sequence limit {}",
            self.limit
        );
        self.counts[x as usize] as u64
    }

    /// Counting function by binary search over the terms, ignoring the
    /// prefix table.
    pub fn count_by_search(&self, x: u64) -> u64 {
        self.terms.partition_point(|&t| t <= x) as u64
    }

    pub fn contains(&self, x: u64) -> bool {
        self.terms.binary_search(&x).is_ok()
    }

    /// Terms `<= x`.
    pub fn terms_up_to(&self, x: u64) -> &[u64] {
        &self.terms[..self.terms.partition_point(|&t| t <= x)]
    }

    /// Ok if every term of `self` is a term of `other`; otherwise the first
    /// missing term.
    pub fn check_subset_of(&self, other: &ParitySequence) -> Result<()> {
        match self.terms.iter().find(|&&t| !other.contains(t)) {
            Some(&witness) => Err(Error::NotSubset { witness }),
            None => Ok(()),
        }
    }
}

/// Common terms of two sequences of the same parity and limit.
pub fn intersect(a: &ParitySequence, b: &ParitySequence) -> Result<ParitySequence> {
    if a.parity != b.parity {
        return Err(Error::ParityMismatch {
            expected: a.parity,
            found: b.parity,
        });
    }
    if a.limit != b.limit {
        return Err(Error::LimitMismatch {
            left: a.limit,
            right: b.limit,
        });
    }
    let (mut i, mut j) = (0, 0);
    let mut common = Vec::new();
    while i < a.terms.len() && j < b.terms.len() {
        match a.terms[i].cmp(&b.terms[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                common.push(a.terms[i]);
                i += 1;
                j += 1;
            }
        }
    }
    ParitySequence::new(a.parity, common, a.limit)
}

/// The built-in sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceKind {
    /// P₁: 3, 5, 7, 11, ...
    OddPrimes,
    /// P₁ ∪ P₂,₁: odd primes and odd semiprimes.
    PrimeOrOddSemiprime,
    /// 2P: 4, 6, 10, 14, ...
    DoubledPrimes,
    /// Q₁: 1, 9, 25, ...
    OddSquares,
    /// Q₂: 0, 4, 16, ...
    EvenSquares,
    /// j(j+1) for j >= 0: 0, 2, 6, 12, ...
    Pronic,
    AllOdd,
    AllEven { include_zero: bool },
    Custom { parity: Parity, terms: Vec<u64> },
}

impl SequenceKind {
    pub fn parity(&self) -> Parity {
        match self {
            SequenceKind::OddPrimes
            | SequenceKind::PrimeOrOddSemiprime
            | SequenceKind::OddSquares
            | SequenceKind::AllOdd => Parity::Odd,
            SequenceKind::DoubledPrimes
            | SequenceKind::EvenSquares
            | SequenceKind::Pronic
            | SequenceKind::AllEven { .. } => Parity::Even,
            SequenceKind::Custom { parity, .. } => *parity,
        }
    }

    fn needs_primes(&self) -> bool {
        matches!(
            self,
            SequenceKind::OddPrimes | SequenceKind::PrimeOrOddSemiprime | SequenceKind::DoubledPrimes
        )
    }
}

/// Builds `kind` up to `limit`, sieving internally when the kind needs primes.
pub fn make_sequence(kind: SequenceKind, limit: u64) -> Result<ParitySequence> {
    if kind.needs_primes() {
        let tables = build_sieve(limit)?;
        make_sequence_from_tables(kind, &tables)
    } else {
        let parity = kind.parity();
        ParitySequence::new(parity, terms_for(kind, limit, None), limit)
    }
}

/// Builds `kind` up to `tables.limit()`, reusing the given sieve.
pub fn make_sequence_from_tables(kind: SequenceKind, tables: &SieveTables) -> Result<ParitySequence> {
    let parity = kind.parity();
    let limit = tables.limit();
    ParitySequence::new(parity, terms_for(kind, limit, Some(tables)), limit)
}

fn terms_for(kind: SequenceKind, limit: u64, tables: Option<&SieveTables>) -> Vec<u64> {
    let tables = || tables.expect("prime-based kinds are built from a sieve");
    match kind {
        SequenceKind::OddPrimes => tables().primes().filter(|&p| p > 2).collect(),
        SequenceKind::PrimeOrOddSemiprime => {
            let t = tables();
            let odd_semi = t.semiprime_flags(true);
            (3..=limit)
                .step_by(2)
                .filter(|&n| t.is_prime(n) || odd_semi[n as usize])
                .collect()
        }
        SequenceKind::DoubledPrimes => tables()
            .primes()
            .map(|p| 2 * p)
            .take_while(|&d| d <= limit)
            .collect(),
        SequenceKind::OddSquares => (0..)
            .map(|k: u64| (2 * k + 1) * (2 * k + 1))
            .take_while(|&q| q <= limit)
            .collect(),
        SequenceKind::EvenSquares => (0..)
            .map(|k: u64| 4 * k * k)
            .take_while(|&q| q <= limit)
            .collect(),
        SequenceKind::Pronic => (0..)
            .map(|j: u64| j * (j + 1))
            .take_while(|&l| l <= limit)
            .collect(),
        SequenceKind::AllOdd => (1..=limit).step_by(2).collect(),
        SequenceKind::AllEven { include_zero } => {
            let start = if include_zero { 0 } else { 2 };
            (start..=limit).step_by(2).collect()
        }
        SequenceKind::Custom { terms, .. } => terms,
    }
}

/// Contents of a sequence file: a `parity: odd|even` header, an optional
/// `limit: N` header, then one integer per line in ascending order. Blank
/// lines and lines starting with `#` are ignored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceFile {
    pub parity: Parity,
    pub limit: Option<u64>,
    pub terms: Vec<u64>,
}

impl SequenceFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut parity = None;
        let mut limit = None;
        let mut terms = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parse_err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            if let Some((key, value)) = line.split_once(':') {
                let value = value.trim();
                match key.trim() {
                    "parity" => {
                        parity = Some(match value {
                            "odd" => Parity::Odd,
                            "even" => Parity::Even,
                            other => return Err(parse_err(format!("unknown parity `{other}`"))),
                        })
                    }
                    "limit" => {
                        limit = Some(
                            value
                                .parse()
                                .map_err(|e| parse_err(format!("bad limit `{value}`: {e}")))?,
                        )
                    }
                    other => return Err(parse_err(format!("unknown header `{other}`"))),
                }
                continue;
            }
            if parity.is_none() {
                return Err(parse_err("`parity:` header must precede the terms".into()));
            }
            let term = line
                .parse()
                .map_err(|e| parse_err(format!("bad term `{line}`: {e}")))?;
            terms.push(term);
        }
        let parity = parity.ok_or(Error::Parse {
            line: 0,
            message: "missing `parity:` header".into(),
        })?;
        let file = SequenceFile {
            parity,
            limit,
            terms,
        };
        let check_limit = file.limit.unwrap_or(u64::MAX);
        validate_terms(file.parity, &file.terms, check_limit)?;
        Ok(file)
    }

    /// Materializes the file. `needed` is the bound the caller will query up
    /// to; a file without `limit:` is taken to list the sequence completely.
    pub fn to_sequence(&self, needed: u64, budget: u64) -> Result<ParitySequence> {
        let limit = match self.limit {
            Some(limit) => limit,
            None => needed.max(self.terms.last().copied().unwrap_or(0)),
        };
        ParitySequence::with_budget(self.parity, self.terms.clone(), limit, budget)
    }
}

fn validate_terms(parity: Parity, terms: &[u64], limit: u64) -> Result<()> {
    for pair in terms.windows(2) {
        if pair[0] == pair[1] {
            return Err(Error::InvalidSequence(format!("duplicate term {}", pair[0])));
        }
        if pair[0] > pair[1] {
            return Err(Error::InvalidSequence(format!(
                "terms not increasing: {} followed by {}",
                pair[0], pair[1]
            )));
        }
    }
    if let Some(&bad) = terms.iter().find(|&&t| Parity::of(t) != parity) {
        return Err(Error::InvalidSequence(format!(
            "term {bad} does not have {parity} parity"
        )));
    }
    match terms.last() {
        Some(&last) if last > limit => Err(Error::InvalidSequence(format!(
            "term {last} lies beyond the limit {limit}"
        ))),
        _ => Ok(()),
    }
}
