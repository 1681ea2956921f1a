//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Runs without the libtest harness so every line is printed even when a
//! criterion fails. Expected values either come from the published tables or
//! from brute-force enumeration in this file and in `oracle`.

use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use su2_compose::apps::{catalan, count_compositions, dice_probability, riordan, CompositionSpec};
use su2_compose::cgd::hypergeom::{
    catalan_series, lambda_univariate_series, omega_univariate_series, riordan_series, to_integer,
};
use su2_compose::cgd::{
    decompose, lambda_univariate, lambda_zero_range, omega_table, omega_univariate, omega_zero_range,
};
use su2_compose::oracle::{oracle_antisym, oracle_omega, oracle_qbinom, oracle_sym, EnumerationBudget};
use su2_compose::qpoly::{
    phi, q_binomial, q_binomial_convolution, restricted_partitions, sum_phi_equals_p, PartitionCounter,
};
use su2_compose::scalar::binomial;
use su2_compose::symcomp::{
    antisym_decomposition, antisym_omega, inf_antisym_omega, inf_sym_omega, sym_decomposition, sym_omega,
};
use su2_compose::{DecompositionTable, IdenticalSystem, Method, Rational, SpinMultiset};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit_ms: u128) -> Outcome {
    ensure(elapsed.as_millis() < limit_ms, || {
        format!("took {} ms, limit {limit_ms} ms", elapsed.as_millis())
    })
}

fn trimmed(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn random_multiset(rng: &mut ChaCha8Rng, max_count: u64, max_twice: u64) -> SpinMultiset {
    let count = rng.gen_range(1..=max_count);
    let spins: Vec<(u64, u64)> = (0..count).map(|_| (rng.gen_range(1..=max_twice), 1)).collect();
    SpinMultiset::new(spins).unwrap()
}

fn worked_example() -> Outcome {
    let start = Instant::now();
    let spins: SpinMultiset = "1/2^2,1^4".parse().map_err(|e| format!("{e}"))?;
    let omega = omega_table(&spins, Method::Genfunc);
    let table = decompose(&spins, Method::Genfunc).map_err(|e| format!("{e}"))?;
    let elapsed = start.elapsed();
    ensure(omega.values() == ints(&[1, 6, 19, 40, 61, 70, 61, 40, 19, 6, 1]).as_slice(), || {
        format!("omega table {:?}", omega.values())
    })?;
    ensure(table.multiplicities() == ints(&[1, 5, 13, 21, 21, 9]), || {
        format!("multiplicities {:?}", table.multiplicities())
    })?;
    ensure(table.max_twice_j() == Some(10), || "top spin is not 5".into())?;
    ensure(spins.total_dimension() == BigInt::from(324), || "total dimension".into())?;
    ensure(table.dimension() == BigInt::from(324), || "sum of (2J+1) lambda".into())?;
    within(elapsed, 10)
}

fn three_methods() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    for _ in 0..200 {
        let spins = random_multiset(&mut rng, 6, 5);
        let reference = decompose(&spins, Method::Genfunc).map_err(|e| format!("{spins}: {e}"))?;
        for method in [Method::Binomial, Method::Composition] {
            let other = decompose(&spins, method).map_err(|e| format!("{spins}: {e}"))?;
            ensure(other == reference, || {
                format!("{spins}: {} gives {other}, genfunc gives {reference}", method.name())
            })?;
        }
    }
    within(start.elapsed(), 5_000)
}

fn oracle_agreement() -> Outcome {
    let start = Instant::now();
    let budget = EnumerationBudget::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    let mut checked = 0;
    while checked < 50 {
        let spins = random_multiset(&mut rng, 9, 5);
        if spins.total_dimension() > BigInt::from(1_000_000) {
            continue;
        }
        let fast = omega_table(&spins, Method::Genfunc);
        let brute = oracle_omega(&spins, &budget).map_err(|e| format!("{spins}: {e}"))?;
        ensure(fast == brute, || format!("{spins}: omega tables differ"))?;
        checked += 1;
    }
    for twice_j in 1..=5 {
        for count in 1..=5 {
            let s = IdenticalSystem::new(twice_j, count).unwrap();
            let range = 0..=s.twice_j0() as i64;
            let sym = trimmed(range.clone().map(|n| sym_omega(&s, n)).collect());
            let anti = trimmed(range.map(|n| antisym_omega(&s, n)).collect());
            let brute_sym = oracle_sym(twice_j, count, &budget).map_err(|e| e.to_string())?;
            let brute_anti = oracle_antisym(twice_j, count, &budget).map_err(|e| e.to_string())?;
            ensure(brute_sym.values() == sym.as_slice(), || format!("sym 2j={twice_j} N={count}"))?;
            ensure(brute_anti.values() == anti.as_slice(), || format!("antisym 2j={twice_j} N={count}"))?;
        }
    }
    within(start.elapsed(), 60_000)
}

fn ten_spin_one() -> Outcome {
    let start = Instant::now();
    let spins = SpinMultiset::univariate(2, 10).unwrap();
    let table = decompose(&spins, Method::Genfunc).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let mut ascending = table.multiplicities();
    ascending.reverse();
    ensure(
        ascending == ints(&[603, 1585, 2025, 1890, 1398, 837, 405, 155, 45, 9, 1]),
        || format!("got {ascending:?}"),
    )?;
    within(elapsed, 50)
}

fn counting_sequences() -> Outcome {
    let c: Vec<BigInt> = (0..=6).map(catalan).collect();
    ensure(c == ints(&[1, 1, 2, 5, 14, 42, 132]), || format!("catalan {c:?}"))?;
    let r: Vec<BigInt> = (0..=9).map(riordan).collect();
    ensure(r == ints(&[1, 0, 1, 1, 3, 6, 15, 36, 91, 232]), || format!("riordan {r:?}"))
}

fn partition_identities() -> Outcome {
    let start = Instant::now();
    let p = |n: u64, m: u64, k: i64| restricted_partitions(n, m, k);
    ensure(p(3, 4, 5) == BigUint::from(4u8), || "p(3,4,5)".into())?;
    ensure(phi(7, 4, 3, 5) == BigUint::from(2u8), || "phi^{7,4}_{3,5}".into())?;
    let mut counter = PartitionCounter::new();
    for n in 0..=8u64 {
        for m in 0..=8u64 {
            // reference values from the q-Pascal triangle
            let gauss = q_binomial::<BigInt>(n + m, m as i64);
            for k in 0..=(n * m) as i64 + 1 {
                let value = BigInt::from(counter.get(n, m, k));
                ensure(value == gauss.coeff(k as usize), || format!("p({n},{m},{k}) vs q-binomial"))?;
                ensure(sum_phi_equals_p((n + m) as i64, m as i64, k), || {
                    format!("sum of phi at a={}, b={m}, k={k}", n + m)
                })?;
                let mut c = |n: i64, m: i64, k: i64| {
                    if n < 0 || m < 0 {
                        BigUint::zero()
                    } else {
                        counter.get(n as u64, m as u64, k)
                    }
                };
                let (ni, mi) = (n as i64, m as i64);
                let here = c(ni, mi, k);
                ensure(here == c(mi, ni, k), || format!("symmetry at ({n},{m},{k})"))?;
                if n >= 1 && m >= 1 {
                    let r2 = c(ni, mi - 1, k) + c(ni - 1, mi, k - mi);
                    let r3 = c(ni, mi - 1, k - ni) + c(ni - 1, mi, k);
                    ensure(here == r2, || format!("second recurrence at ({n},{m},{k})"))?;
                    ensure(here == r3, || format!("third recurrence at ({n},{m},{k})"))?;
                }
                // sum over the largest part; empty at k = 0, so only k >= 1 is checked
                if m >= 1 && k >= 1 {
                    let r4: BigUint = (1..=ni)
                        .filter(|&m1| k <= mi * m1)
                        .map(|m1| c(m1, mi - 1, k - m1))
                        .sum();
                    ensure(here == r4, || format!("fourth recurrence at ({n},{m},{k})"))?;
                }
            }
        }
    }
    within(start.elapsed(), 5_000)
}

fn qbinomial_routes() -> Outcome {
    let start = Instant::now();
    let budget = EnumerationBudget::default();
    for a in 0..=12u64 {
        for b in 0..=a {
            let pascal = q_binomial::<BigInt>(a, b as i64);
            let conv = q_binomial_convolution(a, b).map_err(|e| e.to_string())?;
            let brute = oracle_qbinom(a, b, &budget).map_err(|e| e.to_string())?;
            ensure(pascal == conv && pascal == brute, || format!("routes differ at ({a},{b})"))?;
            let c = pascal.coeffs();
            let reversed: Vec<BigInt> = c.iter().rev().cloned().collect();
            ensure(c == reversed.as_slice(), || format!("not reciprocal at ({a},{b})"))?;
            let peak = c.len() / 2;
            let unimodal = c[..=peak.min(c.len() - 1)].windows(2).all(|w| w[0] <= w[1])
                && c[peak..].windows(2).all(|w| w[0] >= w[1]);
            ensure(unimodal, || format!("not unimodal at ({a},{b})"))?;
            ensure(pascal.eval_at_one() == binomial(a as i64, b as i64), || {
                format!("q = 1 sum at ({a},{b})")
            })?;
        }
    }
    within(start.elapsed(), 10_000)
}

fn hypergeometric_forms() -> Outcome {
    for twice_j in 1..=4u64 {
        for count in 1..=5u64 {
            let top = (twice_j * count) as i64;
            for n in 0..=top {
                let series = omega_univariate_series(twice_j, count, n)
                    .and_then(|s| s.reduce_and_evaluate())
                    .map_err(|e| format!("omega series 2j={twice_j} N={count} n={n}: {e}"))?;
                let direct = omega_univariate(twice_j, count, n).map_err(|e| e.to_string())?;
                ensure(series == Rational::from_integer(direct.clone()), || {
                    format!("omega 2j={twice_j} N={count} n={n}: series {series}, sum {direct}")
                })?;
            }
            if count < 2 {
                continue;
            }
            let m = (twice_j * count / 2) as i64;
            for kappa in 0..=m {
                let series = lambda_univariate_series(twice_j, count, kappa)
                    .and_then(|s| s.reduce_and_evaluate())
                    .map_err(|e| format!("lambda series 2j={twice_j} N={count} kappa={kappa}: {e}"))?;
                let direct = lambda_univariate(twice_j, count, kappa).map_err(|e| e.to_string())?;
                ensure(series == Rational::from_integer(direct.clone()), || {
                    format!("lambda 2j={twice_j} N={count} kappa={kappa}: series {series}, sum {direct}")
                })?;
            }
        }
    }
    for nu in 0..=8u64 {
        let c = catalan_series(nu)
            .and_then(|s| s.reduce_and_evaluate())
            .and_then(|v| to_integer(&v))
            .map_err(|e| format!("catalan series {nu}: {e}"))?;
        // C(2v, v) / (v + 1)
        let closed = binomial(2 * nu as i64, nu as i64) / BigInt::from(nu + 1);
        ensure(c == closed, || format!("catalan series {nu}: {c} vs {closed}"))?;
        let r = riordan_series(nu)
            .and_then(|s| s.reduce_and_evaluate())
            .and_then(|v| to_integer(&v))
            .map_err(|e| format!("riordan series {nu}: {e}"))?;
        ensure(r == riordan(nu), || format!("riordan series {nu}: {r}"))?;
    }
    Ok(())
}

fn pair_split() -> Outcome {
    for twice_j in 1..=6u64 {
        let s = IdenticalSystem::new(twice_j, 2).unwrap();
        let sym = sym_decomposition(&s).map_err(|e| e.to_string())?;
        let anti = antisym_decomposition(&s).map_err(|e| e.to_string())?;
        let full = decompose(&s.as_multiset(), Method::Genfunc).map_err(|e| e.to_string())?;
        let union: DecompositionTable = sym.union(&anti);
        ensure(union == full, || format!("2j={twice_j}: {sym} + {anti} vs {full}"))?;
    }
    Ok(())
}

fn infinite_spin() -> Outcome {
    for count in 1..=6u64 {
        for n in 0..=12i64 {
            // the spin is large enough that no occupation bound is active
            let twice_j = n.max(1) as u64;
            let limit = omega_zero_range(count, n).map_err(|e| e.to_string())?;
            let finite = omega_univariate(twice_j, count, n).map_err(|e| e.to_string())?;
            ensure(finite == limit, || format!("omega N={count} n={n}"))?;
            ensure(limit == binomial(count as i64 + n - 1, n), || format!("C(N+n-1,n) N={count} n={n}"))?;
            if count >= 2 && n <= (twice_j * count / 2) as i64 {
                let lim = lambda_zero_range(count, n).map_err(|e| e.to_string())?;
                let fin = lambda_univariate(twice_j, count, n).map_err(|e| e.to_string())?;
                ensure(fin == lim, || format!("lambda N={count} kappa={n}"))?;
            }
        }
        let shift = (count * (count - 1) / 2) as i64;
        let big = IdenticalSystem::new(count + 40, count).unwrap();
        for n in 0..=40i64 {
            let anti = inf_antisym_omega(count, n).map_err(|e| e.to_string())?;
            let sym = inf_sym_omega(count, n - shift).unwrap_or_else(|_| BigInt::zero());
            ensure(anti == sym, || format!("shift N={count} n={n}"))?;
            ensure(antisym_omega(&big, n) == anti, || format!("large-spin antisym N={count} n={n}"))?;
            ensure(sym_omega(&big, n) == inf_sym_omega(count, n).unwrap(), || {
                format!("large-spin sym N={count} n={n}")
            })?;
        }
    }
    Ok(())
}

fn dice() -> Outcome {
    for count in 1..=6u64 {
        let total: Rational = (0..=6 * count as i64 + 1)
            .map(|n| dice_probability(count, n).unwrap())
            .sum();
        ensure(total.is_one(), || format!("{count} dice sum to {total}"))?;
    }
    // enumerate the 36 outcomes of two dice
    let sevens = (1..=6).flat_map(|a| (1..=6).map(move |b| a + b)).filter(|&s| s == 7).count();
    let expected = Rational::new(BigInt::from(sevens), BigInt::from(36));
    ensure(dice_probability(2, 7).unwrap() == expected, || "P(2,7)".into())?;
    let spec = CompositionSpec::new([(6, 2)], false).unwrap();
    ensure(count_compositions(&spec, 7) == BigInt::from(6), || "six ways to roll 7".into())
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("worked example 1/2^2,1^4", worked_example),
        ("three-method equivalence", three_methods),
        ("oracle equivalence", oracle_agreement),
        ("ten spin-1 decomposition", ten_spin_one),
        ("catalan and riordan sequences", counting_sequences),
        ("restricted partitions and recurrences", partition_identities),
        ("q-binomial triple agreement", qbinomial_routes),
        ("hypergeometric cross-checks", hypergeometric_forms),
        ("symmetric/antisymmetric pair split", pair_split),
        ("spin-infinity limits", infinite_spin),
        ("dice sums", dice),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let ms = start.elapsed().as_secs_f64() * 1e3;
        match outcome {
            Ok(()) => println!("criterion {:>2} PASS  {name} ({ms:.1} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({ms:.1} ms): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
