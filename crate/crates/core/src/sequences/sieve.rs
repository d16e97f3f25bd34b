//! Prime tables and the counting functions built on them: π, π₁ (odd primes),
//! π₂ (semiprimes) and π₂,₁ (odd semiprimes).

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Largest number of table entries a single build may allocate unless a
/// different budget is passed explicitly.
pub const DEFAULT_TABLE_BUDGET: u64 = 200_000_000;

/// Upper bound for [`pi_hardy_wright`]; the factorials grow too fast beyond it
/// to be worth evaluating.
pub const HARDY_WRIGHT_MAX: u64 = 40;

/// Sieve of Eratosthenes with a prefix table, so that `pi(x)` is a lookup.
#[derive(Debug, Clone)]
pub struct SieveTables {
    limit: u64,
    prime_flags: Vec<bool>,
    pi_prefix: Vec<u32>,
}

impl SieveTables {
    pub fn new(limit: u64) -> Result<Self> {
        Self::with_budget(limit, DEFAULT_TABLE_BUDGET)
    }

    pub fn with_budget(limit: u64, budget: u64) -> Result<Self> {
        let requested = limit.saturating_add(1);
        if requested > budget || requested > u32::MAX as u64 {
            return Err(Error::ResourceLimit { requested, budget });
        }
        let len = requested as usize;
        let mut prime_flags = vec![true; len];
        prime_flags[0] = false;
        if len > 1 {
            prime_flags[1] = false;
        }
        let mut p = 2usize;
        while p * p < len {
            if prime_flags[p] {
                for m in (p * p..len).step_by(p) {
                    prime_flags[m] = false;
                }
            }
            p += 1;
        }
        let mut pi_prefix = Vec::with_capacity(len);
        let mut running = 0u32;
        for &flag in &prime_flags {
            running += flag as u32;
            pi_prefix.push(running);
        }
        Ok(Self {
            limit,
            prime_flags,
            pi_prefix,
        })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    fn check(&self, x: u64) -> Result<usize> {
        if x > self.limit {
            Err(Error::LimitExceeded {
                required: x,
                limit: self.limit,
            })
        } else {
            Ok(x as usize)
        }
    }

    /// Panics if `n` is beyond the table.
    pub fn is_prime(&self, n: u64) -> bool {
        self.prime_flags[n as usize]
    }

    /// Number of primes `<= x`. Panics if `x` is beyond the table.
    pub fn pi(&self, x: u64) -> u64 {
        self.pi_prefix[x as usize] as u64
    }

    /// Number of odd primes `<= x`.
    pub fn pi_odd(&self, x: u64) -> u64 {
        self.pi(x) - u64::from(x >= 2)
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.prime_flags
            .iter()
            .enumerate()
            .filter(|(_, &f)| f)
            .map(|(n, _)| n as u64)
    }

    /// π₂(x) = Σ_{p ≤ √x} (π(x/p) − π(p) + 1): each semiprime p·q with p ≤ q
    /// is counted once, under its smaller factor.
    pub fn semiprime_count(&self, x: u64) -> Result<u64> {
        self.check(x)?;
        Ok(self.semiprime_sum(x, 2))
    }

    /// Same sum as [`Self::semiprime_count`] restricted to odd prime factors.
    pub fn odd_semiprime_count(&self, x: u64) -> Result<u64> {
        self.check(x)?;
        Ok(self.semiprime_sum(x, 3))
    }

    fn semiprime_sum(&self, x: u64, smallest: u64) -> u64 {
        self.primes()
            .skip_while(|&p| p < smallest)
            .take_while(|&p| p * p <= x)
            .map(|p| self.pi(x / p) - self.pi(p) + 1)
            .sum()
    }

    /// Membership table for semiprimes (with `odd_only`, odd semiprimes)
    /// up to the sieve limit.
    pub fn semiprime_flags(&self, odd_only: bool) -> Vec<bool> {
        let mut flags = vec![false; self.prime_flags.len()];
        let primes: Vec<u64> = self.primes().collect();
        let start = if odd_only { 1 } else { 0 };
        for (i, &p) in primes.iter().enumerate().skip(start) {
            if p * p > self.limit {
                break;
            }
            for &q in &primes[i..] {
                let pq = p * q;
                if pq > self.limit {
                    break;
                }
                flags[pq as usize] = true;
            }
        }
        flags
    }
}

/// Sieve up to `limit` under the default memory budget.
pub fn build_sieve(limit: u64) -> Result<SieveTables> {
    SieveTables::new(limit)
}

/// π(n) = −1 + Σ_{j=3}^{n} ((j−2)! − j·⌊(j−2)!/j⌋), evaluated with exact
/// big-integer factorials. Only defined for `4 <= n <= 40`.
pub fn pi_hardy_wright(n: u64) -> Result<u64> {
    if !(4..=HARDY_WRIGHT_MAX).contains(&n) {
        return Err(Error::OutOfRange {
            value: n,
            min: 4,
            max: HARDY_WRIGHT_MAX,
        });
    }
    // (j-2)! for j = 3 is 1!
    let mut factorial = BigUint::from(1u32);
    let mut total = BigUint::from(0u32);
    for j in 3..=n {
        if j > 3 {
            factorial *= j - 2;
        }
        let quotient = &factorial / j;
        total += &factorial - quotient * j;
    }
    let total = u64::try_from(total).expect("sum of residues fits in u64");
    Ok(total - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division_is_prime(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
    }

    fn prime_factor_count(mut n: u64) -> u32 {
        let mut count = 0;
        let mut d = 2;
        while d * d <= n {
            while n.is_multiple_of(d) {
                n /= d;
                count += 1;
            }
            d += 1;
        }
        if n > 1 {
            count += 1;
        }
        count
    }

    #[test]
    fn pi_matches_trial_division() {
        let tables = build_sieve(2000).unwrap();
        let mut count = 0;
        for x in 0..=2000 {
            count += trial_division_is_prime(x) as u64;
            assert_eq!(tables.pi(x), count, "pi({x})");
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(build_sieve(10).unwrap().pi(10), 4);
        assert_eq!(build_sieve(0).unwrap().pi(0), 0);
        assert_eq!(build_sieve(1).unwrap().pi(1), 0);
        assert_eq!(build_sieve(100).unwrap().pi_odd(100), 24);
        assert_eq!(build_sieve(2).unwrap().pi_odd(2), 0);
    }

    #[test]
    fn semiprime_counts() {
        let tables = build_sieve(100).unwrap();
        assert_eq!(tables.semiprime_count(10), Ok(4));
        assert_eq!(tables.semiprime_count(3), Ok(0));
        assert_eq!(tables.semiprime_count(100), Ok(34));
        assert_eq!(tables.odd_semiprime_count(15), Ok(2));
        assert_eq!(tables.odd_semiprime_count(8), Ok(0));
        // 9, 15, 21, 25, 33, 35, 39, 49
        assert_eq!(tables.odd_semiprime_count(50), Ok(8));
        assert!(matches!(
            tables.semiprime_count(101),
            Err(Error::LimitExceeded { required: 101, limit: 100 })
        ));
    }

    #[test]
    fn semiprime_flags_match_factor_count() {
        let tables = build_sieve(3000).unwrap();
        let all = tables.semiprime_flags(false);
        let odd = tables.semiprime_flags(true);
        for n in 0..=3000u64 {
            let semi = n >= 2 && prime_factor_count(n) == 2;
            assert_eq!(all[n as usize], semi, "{n}");
            assert_eq!(odd[n as usize], semi && n % 2 == 1, "{n}");
        }
    }

    #[test]
    fn hardy_wright_small() {
        assert_eq!(pi_hardy_wright(4), Ok(2));
        assert_eq!(pi_hardy_wright(5), Ok(3));
        assert_eq!(pi_hardy_wright(20), Ok(8));
        assert!(matches!(pi_hardy_wright(3), Err(Error::OutOfRange { .. })));
        assert!(matches!(pi_hardy_wright(41), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn budget_is_enforced() {
        assert_eq!(
            SieveTables::with_budget(1000, 100).unwrap_err(),
            Error::ResourceLimit {
                requested: 1001,
                budget: 100
            }
        );
    }
}
