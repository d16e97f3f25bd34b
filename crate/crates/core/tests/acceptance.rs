//! Exit criteria. Each test prints one `[PASS]`/`[FAIL]` line; run with
//! `cargo test --test acceptance -- --nocapture --test-threads 1` to see them.

use std::time::{Duration, Instant};

use addrep::applications::{chen_odd_odd, chen_total, goldbach, lemoine_levy, two_squares, two_triangular};
use addrep::oracle::{brute_count, PairMode};
use addrep::sequences::{pi_hardy_wright, SieveTables};
use addrep::{Error, Parity, ParitySequence, RecursionEvaluator, TheoremKind};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

// Published first terms, transcribed from the literature tables.
const GOLDBACH: [u64; 30] = [
    0, 0, 1, 1, 2, 1, 2, 2, 2, 2, 3, 3, 3, 2, 3, 2, 4, 4, 2, 3, 4, 3, 4, 5, 4, 3, 5, 3, 4, 6,
];
const CHEN_ODD_ODD: [u64; 21] = [0, 0, 1, 1, 2, 2, 3, 3, 3, 4, 5, 4, 6, 6, 4, 6, 6, 6, 8, 7, 7];
const CHEN_TOTAL: [u64; 21] = [0, 1, 2, 2, 2, 3, 3, 4, 3, 4, 5, 5, 6, 7, 4, 6, 6, 7, 8, 8, 7];
const LEMOINE_LEVY: [u64; 26] = [
    0, 0, 0, 1, 2, 2, 2, 2, 4, 2, 3, 3, 3, 4, 4, 2, 5, 3, 4, 4, 5, 4, 6, 4, 4, 7,
];
const TWO_TRIANGULAR: [u64; 26] = [
    1, 1, 1, 1, 1, 0, 2, 1, 0, 1, 1, 1, 1, 1, 0, 1, 2, 0, 1, 0, 1, 2, 1, 0, 1, 1,
];

fn report(id: u32, name: &str, outcome: Result<String, String>) {
    match outcome {
        Ok(detail) => println!("[PASS] criterion {id}: {name} ({detail})"),
        Err(detail) => {
            println!("[FAIL] criterion {id}: {name} ({detail})");
            panic!("criterion {id} failed: {detail}");
        }
    }
}

fn within(elapsed: Duration, budget: Duration) -> Result<(), String> {
    if elapsed < budget {
        Ok(())
    } else {
        Err(format!("took {elapsed:?}, budget {budget:?}"))
    }
}

fn first_difference(got: &[u64], want: &[u64]) -> Result<(), String> {
    if got.len() != want.len() {
        return Err(format!("length {} vs {}", got.len(), want.len()));
    }
    match got.iter().zip(want).position(|(a, b)| a != b) {
        Some(i) => Err(format!("index {i}: got {}, want {}", got[i], want[i])),
        None => Ok(()),
    }
}

/// Random sequence of the given parity up to `limit`: each candidate is kept
/// with probability `density`. Zero is decided separately for even parity.
fn random_sequence(rng: &mut StdRng, parity: Parity, limit: u64, density: f64, with_zero: bool) -> ParitySequence {
    let start = match parity {
        Parity::Odd => 1,
        Parity::Even => 2,
    };
    let mut terms = Vec::new();
    if parity == Parity::Even && with_zero {
        terms.push(0);
    }
    terms.extend((start..=limit).step_by(2).filter(|_| rng.gen_bool(density)));
    ParitySequence::new(parity, terms, limit).unwrap()
}

fn random_pair(rng: &mut StdRng, kind: TheoremKind, max_limit: u64) -> (ParitySequence, ParitySequence) {
    let limit = rng.gen_range(8..=max_limit);
    let (pa, pb) = kind.parities();
    let da = rng.gen_range(0.1..=0.9);
    let db = rng.gen_range(0.1..=0.9);
    let za = rng.gen_bool(0.5);
    let zb = rng.gen_bool(0.5);
    (
        random_sequence(rng, pa, limit, da, za),
        random_sequence(rng, pb, limit, db, zb),
    )
}

fn pair_mode(kind: TheoremKind) -> PairMode {
    match kind {
        TheoremKind::EvenOdd => PairMode::RoleTagged,
        _ => PairMode::Unordered,
    }
}

/// Runs the evaluator until the sequences' limit stops it, checking every
/// term within the oracle's range against brute force. Returns the number
/// of terms checked.
fn check_against_oracle(kind: TheoremKind, a: &ParitySequence, b: &ParitySequence) -> Result<usize, String> {
    let mut ev = RecursionEvaluator::new(kind, a, b).map_err(|e| e.to_string())?;
    let base = kind.base();
    let seed = brute_count(a, b, base, pair_mode(kind)).unwrap().count();
    if ev.series().values()[0] != seed {
        return Err(format!("seed at {base}: {} vs oracle {seed}", ev.series().values()[0]));
    }
    let mut checked = 1;
    loop {
        match ev.next_term() {
            Ok((x, count)) => {
                if x > a.limit() {
                    break;
                }
                let oracle = brute_count(a, b, x, pair_mode(kind)).unwrap().count();
                if count != oracle {
                    return Err(format!("{kind:?} x = {x}: recursion {count}, oracle {oracle}"));
                }
                checked += 1;
            }
            Err(Error::LimitExceeded { .. }) => break,
            Err(e) => return Err(format!("{kind:?}: {e}")),
        }
    }
    Ok(checked)
}

#[test]
fn criterion_1_goldbach_golden() {
    let start = Instant::now();
    let series = goldbach(30).unwrap();
    let outcome = first_difference(series.values(), &GOLDBACH)
        .and_then(|_| within(start.elapsed(), Duration::from_secs(1)))
        .map(|_| format!("30 terms exact in {:?}", start.elapsed()));
    report(1, "Goldbach g(2n), n = 1..30", outcome);
}

#[test]
fn criterion_2_chen_golden() {
    let start = Instant::now();
    let odd = chen_odd_odd(21).unwrap();
    let total = chen_total(21).unwrap();
    let outcome = first_difference(odd.values(), &CHEN_ODD_ODD)
        .map_err(|e| format!("g1: {e}"))
        .and_then(|_| first_difference(total.values(), &CHEN_TOTAL).map_err(|e| format!("g1+g2: {e}")))
        .and_then(|_| within(start.elapsed(), Duration::from_secs(1)))
        .map(|_| format!("21 + 21 terms exact in {:?}", start.elapsed()));
    report(2, "Chen g1(2n) and g1+g2, n = 1..21", outcome);
}

#[test]
fn criterion_3_lemoine_levy_golden() {
    let series = lemoine_levy(26).unwrap();
    let outcome = first_difference(series.values(), &LEMOINE_LEVY).map(|_| "26 terms exact".to_string());
    report(3, "Lemoine-Levy h(2n-1), n = 1..26", outcome);
}

#[test]
fn criterion_4_two_triangular_and_lemma() {
    let start = Instant::now();
    let t25 = two_triangular(25).unwrap();
    let t = two_triangular(1000).unwrap();
    let h = two_squares(1000).unwrap();
    let outcome = first_difference(t25.values(), &TWO_TRIANGULAR)
        .map_err(|e| format!("t(n): {e}"))
        .and_then(|_| first_difference(h.values(), t.values()).map_err(|e| format!("h(4n+1) vs t(n): {e}")))
        .and_then(|_| within(start.elapsed(), Duration::from_secs(5)))
        .map(|_| format!("26 terms exact, h(4n+1) = t(n) for n <= 1000, {:?}", start.elapsed()));
    report(4, "two-triangular t(n) and two-squares h(4n+1)", outcome);
}

#[test]
fn criterion_5_theorems_match_oracle() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x5eed_0005);
    let mut outcome = Ok(());
    let mut terms = 0;
    'outer: for kind in [TheoremKind::OddOdd, TheoremKind::EvenEven, TheoremKind::EvenOdd] {
        for _ in 0..200 {
            let (a, b) = random_pair(&mut rng, kind, 4000);
            match check_against_oracle(kind, &a, &b) {
                Ok(n) => terms += n,
                Err(e) => {
                    outcome = Err(e);
                    break 'outer;
                }
            }
        }
    }
    let outcome = outcome
        .and_then(|_| within(start.elapsed(), Duration::from_secs(60)))
        .map(|_| format!("600 pairs, {terms} terms, {:?}", start.elapsed()));
    report(5, "recursion equals brute force on random sequence pairs", outcome);
}

fn series_for(ev: RecursionEvaluator<'_>) -> Result<Vec<u64>, String> {
    let mut ev = ev;
    loop {
        match ev.next_term() {
            Ok(_) => {}
            Err(Error::LimitExceeded { .. }) => return Ok(ev.into_series().values().to_vec()),
            Err(e) => return Err(e.to_string()),
        }
    }
}

#[test]
fn criterion_6_corollary_forms() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0006);
    let mut checked = 0;
    let mut run = || -> Result<(), String> {
        for kind in [TheoremKind::OddOdd, TheoremKind::EvenEven] {
            let parity = kind.parities().0;
            for _ in 0..50 {
                let limit = rng.gen_range(8..=2000);
                let dt = rng.gen_range(0.1..=0.9);
                let keep = rng.gen_range(0.1..=0.9);
                let zero = rng.gen_bool(0.5);
                let t = random_sequence(&mut rng, parity, limit, dt, zero);
                let s_terms = t.terms().iter().copied().filter(|_| rng.gen_bool(keep)).collect();
                let s = ParitySequence::new(parity, s_terms, limit).unwrap();

                let general = series_for(RecursionEvaluator::new(kind, &s, &t).unwrap())?;
                let subset = series_for(RecursionEvaluator::new(kind, &s, &t).unwrap().into_subset_form().unwrap())?;
                if general != subset {
                    return Err(format!("{kind:?} subset form differs (limit {limit})"));
                }
                let general_eq = series_for(RecursionEvaluator::new(kind, &t, &t).unwrap())?;
                let equal = series_for(RecursionEvaluator::new(kind, &t, &t).unwrap().into_equal_form().unwrap())?;
                if general_eq != equal {
                    return Err(format!("{kind:?} equal form differs (limit {limit})"));
                }
                checked += general.len() + general_eq.len();
            }
        }
        Ok(())
    };
    let outcome = run().map(|_| format!("{checked} terms over 200 instances"));
    report(6, "corollary forms equal the general form", outcome);
}

fn omega(mut n: u64) -> u32 {
    let mut count = 0;
    let mut d = 2;
    while d * d <= n {
        while n.is_multiple_of(d) {
            n /= d;
            count += 1;
        }
        d += 1;
    }
    count + (n > 1) as u32
}

#[test]
fn criterion_7_counting_functions() {
    let tables = SieveTables::new(10_000).unwrap();
    let run = || -> Result<String, String> {
        let (mut all, mut odd) = (0, 0);
        for x in 0..=10_000u64 {
            if x >= 2 && omega(x) == 2 {
                all += 1;
                odd += x % 2;
            }
            let p2 = tables.semiprime_count(x).unwrap();
            let p21 = tables.odd_semiprime_count(x).unwrap();
            if p2 != all || p21 != odd {
                return Err(format!("x = {x}: pi2 {p2} vs {all}, pi21 {p21} vs {odd}"));
            }
        }
        for n in 4..=40 {
            let hw = pi_hardy_wright(n).unwrap();
            if hw != tables.pi(n) {
                return Err(format!("Hardy-Wright pi({n}) = {hw}, sieve {}", tables.pi(n)));
            }
        }
        Ok("pi2, pi21 for x <= 10^4; Hardy-Wright for 4 <= n <= 40".into())
    };
    report(7, "semiprime counts and explicit prime-counting formula", run());
}

/// Cumulative sum computed straight from its definition, with counting
/// functions by binary search on the raw terms.
fn cumulative_from_definition(kind: TheoremKind, a: &ParitySequence, b: &ParitySequence, x: u64) -> i128 {
    let count = |s: &[u64], y: u64| s.partition_point(|&t| t <= y) as i128;
    let (sa, sb) = (a.terms(), b.terms());
    match kind {
        TheoremKind::EvenOdd => {
            let mid = x.div_ceil(2);
            let first: i128 = sb.iter().filter(|&&v| v <= mid).map(|&v| count(sa, x - v)).sum();
            let second: i128 = sa.iter().filter(|&&u| u <= mid).map(|&u| count(sb, x - u)).sum();
            first + second - count(sa, mid) * count(sb, mid)
        }
        _ => {
            let mid = x / 2;
            let w: Vec<u64> = sa.iter().copied().filter(|t| sb.binary_search(t).is_ok()).collect();
            let first: i128 = sb.iter().filter(|&&t| t <= mid).map(|&t| count(sa, x - t)).sum();
            let second: i128 = sa.iter().filter(|&&s| s <= mid).map(|&s| count(sb, x - s)).sum();
            let third: i128 = w.iter().filter(|&&v| v <= mid).map(|&v| count(&w, x - v)).sum();
            let wm = count(&w, mid);
            first + second - third - count(sa, mid) * count(sb, mid) + (wm + 1) * wm / 2
        }
    }
}

#[test]
fn criterion_8_incremental_identity() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0008);
    let mut steps = 0;
    let mut run = || -> Result<(), String> {
        for kind in [TheoremKind::OddOdd, TheoremKind::EvenOdd] {
            for _ in 0..20 {
                let (a, b) = random_pair(&mut rng, kind, 1500);
                let ev = RecursionEvaluator::new(kind, &a, &b).unwrap();
                let base = kind.base();
                let mut x = base;
                let g0 = brute_count(&a, &b, base, pair_mode(kind)).unwrap().count() as i128;
                if cumulative_from_definition(kind, &a, &b, base) != g0 {
                    return Err(format!("{kind:?}: cumulative at base {base} is not the base count"));
                }
                while x + 2 <= a.limit() && ev.required_limit(x + 2) <= a.limit() {
                    let lower = cumulative_from_definition(kind, &a, &b, x);
                    let upper = cumulative_from_definition(kind, &a, &b, x + 2);
                    let direct = brute_count(&a, &b, x + 2, pair_mode(kind)).unwrap().count() as i128;
                    if upper - lower != direct {
                        return Err(format!(
                            "{kind:?} x = {}: difference {} vs count {direct}",
                            x + 2,
                            upper - lower
                        ));
                    }
                    if ev.cumulative(x + 2).map(i128::from) != Ok(upper) {
                        return Err(format!("{kind:?} x = {}: evaluator cumulative disagrees", x + 2));
                    }
                    steps += 1;
                    x += 2;
                }
            }
        }
        Ok(())
    };
    let outcome = run().map(|_| format!("{steps} consecutive differences over 40 instances"));
    report(8, "cumulative differences equal counts", outcome);
}
