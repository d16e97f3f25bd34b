//! Recursive evaluation of representation counts over a pair of parity
//! sequences.
//!
//! Three cases, by the parities of the summands:
//!
//! * `OddOdd`: `g(x)` counts unordered `x = s + t`, `s ∈ S`, `t ∈ T`, both odd,
//!   for even `x >= 2`.
//! * `EvenEven`: `e(x)` counts unordered `x = l + m`, `l ∈ L`, `m ∈ M`, both
//!   even, for even `x >= 0`.
//! * `EvenOdd`: `h(x)` counts `x = u + v`, `u ∈ U` even, `v ∈ V` odd, for odd
//!   `x >= 1`.
//!
//! For the two same-parity cases with `W = S ∩ T` and `m = x/2`,
//!
//! ```text
//! G(x) = Σ_{t∈T, t≤m} S(x−t) + Σ_{s∈S, s≤m} T(x−s) − Σ_{w∈W, w≤m} W(x−w)
//!        − S(m)·T(m) + C(W(m)+1, 2)
//! ```
//!
//! and for the mixed case with `m = (x+1)/2`,
//!
//! ```text
//! H(x) = Σ_{v∈V, v≤m} U(x−v) + Σ_{u∈U, u≤m} V(x−u) − U(m)·V(m).
//! ```
//!
//! `G(x)` (resp. `H(x)`) equals the sum of all counts at arguments `<= x` of
//! the same parity, so each count is the cumulative value minus the running
//! tail of previously computed counts. The evaluator keeps that tail so a
//! series up to `X` costs one cumulative evaluation per step.

use crate::error::{Error, Result};
use crate::sequences::{intersect, Parity, ParitySequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremKind {
    /// Even targets, two odd summands.
    OddOdd,
    /// Even targets, two even summands.
    EvenEven,
    /// Odd targets, an even summand and an odd summand.
    EvenOdd,
}

impl TheoremKind {
    /// Required parities of `(seq_a, seq_b)`.
    pub fn parities(self) -> (Parity, Parity) {
        match self {
            TheoremKind::OddOdd => (Parity::Odd, Parity::Odd),
            TheoremKind::EvenEven => (Parity::Even, Parity::Even),
            TheoremKind::EvenOdd => (Parity::Even, Parity::Odd),
        }
    }

    /// First argument of the series: 2, 0 and 1 respectively.
    pub fn base(self) -> u64 {
        match self {
            TheoremKind::OddOdd => 2,
            TheoremKind::EvenEven => 0,
            TheoremKind::EvenOdd => 1,
        }
    }

    /// Infers the case from the parities of the two sequences.
    pub fn from_parities(a: Parity, b: Parity) -> Option<Self> {
        match (a, b) {
            (Parity::Odd, Parity::Odd) => Some(TheoremKind::OddOdd),
            (Parity::Even, Parity::Even) => Some(TheoremKind::EvenEven),
            (Parity::Even, Parity::Odd) => Some(TheoremKind::EvenOdd),
            (Parity::Odd, Parity::Even) => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TheoremKind::OddOdd => "odd-odd",
            TheoremKind::EvenEven => "even-even",
            TheoremKind::EvenOdd => "even-odd",
        }
    }
}

/// Which algebraic form of the per-step sum to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Formula {
    /// General form with the intersection `W`.
    General,
    /// `seq_a ⊆ seq_b`, so `W = seq_a`.
    Subset,
    /// `seq_a = seq_b`.
    Equal,
}

/// Counts at arguments `start, start + step, start + 2·step, ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountSeries {
    start: u64,
    step: u64,
    values: Vec<u64>,
}

impl CountSeries {
    pub fn new(start: u64, step: u64) -> Self {
        Self::from_values(start, step, Vec::new())
    }

    pub fn from_values(start: u64, step: u64, values: Vec<u64>) -> Self {
        assert!(step > 0, "series step must be positive");
        Self {
            start,
            step,
            values,
        }
    }

    pub fn start(&self) -> u64 {
        self.start
    }

    pub fn step(&self) -> u64 {
        self.step
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn argument(&self, index: usize) -> u64 {
        self.start + self.step * index as u64
    }

    /// Last argument present, if any.
    pub fn last_argument(&self) -> Option<u64> {
        self.values.len().checked_sub(1).map(|i| self.argument(i))
    }

    /// Count at `argument`, if it lies on the lattice and has been computed.
    pub fn get(&self, argument: u64) -> Option<u64> {
        let offset = argument.checked_sub(self.start)?;
        if offset % self.step != 0 {
            return None;
        }
        self.values.get((offset / self.step) as usize).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(|(i, &v)| (self.argument(i), v))
    }

    pub fn push(&mut self, value: u64) {
        self.values.push(value);
    }
}

/// Incremental evaluator of one representation-count series.
#[derive(Debug, Clone)]
pub struct RecursionEvaluator<'a> {
    kind: TheoremKind,
    formula: Formula,
    seq_a: &'a ParitySequence,
    seq_b: &'a ParitySequence,
    seq_w: Option<ParitySequence>,
    computed: CountSeries,
    tail_sum: u64,
}

impl<'a> RecursionEvaluator<'a> {
    /// Sets up the general form and seeds the count at the base argument by
    /// direct membership: `g(2) = [1 ∈ S ∩ T]`, `e(0) = [0 ∈ L ∩ M]`,
    /// `h(1) = [0 ∈ U ∧ 1 ∈ V]`.
    pub fn new(kind: TheoremKind, seq_a: &'a ParitySequence, seq_b: &'a ParitySequence) -> Result<Self> {
        let (pa, pb) = kind.parities();
        for (expected, seq) in [(pa, seq_a), (pb, seq_b)] {
            if seq.parity() != expected {
                return Err(Error::ParityMismatch {
                    expected,
                    found: seq.parity(),
                });
            }
        }
        if seq_a.limit() != seq_b.limit() {
            return Err(Error::LimitMismatch {
                left: seq_a.limit(),
                right: seq_b.limit(),
            });
        }
        let seq_w = match kind {
            TheoremKind::OddOdd | TheoremKind::EvenEven => Some(intersect(seq_a, seq_b)?),
            TheoremKind::EvenOdd => None,
        };
        let seed = match kind {
            TheoremKind::OddOdd => seq_a.contains(1) && seq_b.contains(1),
            TheoremKind::EvenEven => seq_a.contains(0) && seq_b.contains(0),
            TheoremKind::EvenOdd => seq_a.contains(0) && seq_b.contains(1),
        } as u64;
        let mut computed = CountSeries::new(kind.base(), 2);
        computed.push(seed);
        Ok(Self {
            kind,
            formula: Formula::General,
            seq_a,
            seq_b,
            seq_w,
            computed,
            tail_sum: seed,
        })
    }

    /// Switches to the form valid when `seq_a ⊆ seq_b`, after checking the
    /// containment.
    pub fn into_subset_form(mut self) -> Result<Self> {
        if self.kind == TheoremKind::EvenOdd {
            return Err(Error::Unsupported("subset form applies to same-parity cases only"));
        }
        self.seq_a.check_subset_of(self.seq_b)?;
        self.formula = Formula::Subset;
        Ok(self)
    }

    /// Switches to the form valid when `seq_a = seq_b`.
    pub fn into_equal_form(mut self) -> Result<Self> {
        if self.kind == TheoremKind::EvenOdd {
            return Err(Error::Unsupported("equal form applies to same-parity cases only"));
        }
        if self.seq_a.terms() != self.seq_b.terms() {
            return Err(Error::NotEqual);
        }
        self.formula = Formula::Equal;
        Ok(self)
    }

    pub fn kind(&self) -> TheoremKind {
        self.kind
    }

    pub fn formula(&self) -> Formula {
        self.formula
    }

    pub fn series(&self) -> &CountSeries {
        &self.computed
    }

    pub fn into_series(self) -> CountSeries {
        self.computed
    }

    /// Sum of every count computed so far.
    pub fn tail_sum(&self) -> u64 {
        self.tail_sum
    }

    fn midpoint(&self, x: u64) -> u64 {
        match self.kind {
            TheoremKind::EvenOdd => x.div_ceil(2),
            _ => x / 2,
        }
    }

    /// Largest value at which a counting function is consulted when
    /// evaluating the cumulative sum at `x`.
    pub fn required_limit(&self, x: u64) -> u64 {
        let mid = self.midpoint(x);
        let smallest = [self.seq_a.first(), self.seq_b.first()]
            .into_iter()
            .flatten()
            .filter(|&t| t <= mid)
            .min();
        match smallest {
            Some(t) => (x - t).max(mid),
            None => mid,
        }
    }

    fn check_argument(&self, x: u64) -> Result<()> {
        let base = self.kind.base();
        if x < base || !(x - base).is_multiple_of(2) {
            return Err(Error::BadArgument { argument: x, base });
        }
        let required = self.required_limit(x);
        if required > self.seq_a.limit() {
            return Err(Error::LimitExceeded {
                required,
                limit: self.seq_a.limit(),
            });
        }
        Ok(())
    }

    /// The cumulative value at `x` (the sum of all counts at arguments `<= x`
    /// on this series' lattice), evaluated directly from the counting
    /// functions with the current formula.
    pub fn cumulative(&self, x: u64) -> Result<u64> {
        self.check_argument(x)?;
        let a = self.seq_a;
        let b = self.seq_b;
        let mid = self.midpoint(x);
        let overflow = Error::Overflow { argument: x };

        // Σ_{t ∈ outer, t <= mid} inner(x - t)
        let sum = |outer: &ParitySequence, inner: &ParitySequence| -> i128 {
            outer
                .terms_up_to(mid)
                .iter()
                .map(|&t| inner.count(x - t))
                .sum::<u64>() as i128
        };
        let cross = a
            .count(mid)
            .checked_mul(b.count(mid))
            .ok_or(overflow.clone())? as i128;

        let value: i128 = match (self.kind, self.formula) {
            (TheoremKind::EvenOdd, _) => sum(b, a) + sum(a, b) - cross,
            (_, Formula::General) => {
                let w = self.seq_w.as_ref().expect("intersection built for same-parity cases");
                let binom = choose2(w.count(mid) + 1).ok_or(overflow.clone())? as i128;
                sum(b, a) + sum(a, b) - sum(w, w) - cross + binom
            }
            (_, Formula::Subset) => {
                // Σ_{s ≤ mid} (T(x−s) − S(x−s)) = sum(a, b) − sum(a, a)
                let binom = choose2(a.count(mid) + 1).ok_or(overflow.clone())? as i128;
                sum(b, a) + sum(a, b) - sum(a, a) - cross + binom
            }
            (_, Formula::Equal) => {
                let binom = choose2(a.count(mid)).ok_or(overflow)? as i128;
                sum(a, a) - binom
            }
        };
        u64::try_from(value).map_err(|_| Error::NegativeCount { argument: x, value })
    }

    /// Computes the count at the next argument, appends it and returns
    /// `(argument, count)`.
    pub fn next_term(&mut self) -> Result<(u64, u64)> {
        let x = self
            .computed
            .last_argument()
            .expect("series is seeded at construction")
            + 2;
        let cumulative = self.cumulative(x)?;
        let count = cumulative
            .checked_sub(self.tail_sum)
            .ok_or(Error::NegativeCount {
                argument: x,
                value: cumulative as i128 - self.tail_sum as i128,
            })?;
        self.computed.push(count);
        self.tail_sum += count;
        Ok((x, count))
    }

    /// Fills the series through `x_max`. Does nothing if it already reaches
    /// that far.
    pub fn run_to(&mut self, x_max: u64) -> Result<&CountSeries> {
        let base = self.kind.base();
        if x_max < base || !(x_max - base).is_multiple_of(2) {
            return Err(Error::BadArgument { argument: x_max, base });
        }
        while self.computed.last_argument().is_some_and(|last| last < x_max) {
            self.next_term()?;
        }
        Ok(&self.computed)
    }
}

/// C(k, 2) = k(k−1)/2, `None` on overflow.
pub fn choose2(k: u64) -> Option<u64> {
    if k < 2 {
        return Some(0);
    }
    let (even, odd) = if k.is_multiple_of(2) { (k, k - 1) } else { (k - 1, k) };
    (even / 2).checked_mul(odd)
}
