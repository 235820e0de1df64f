//! Exact integer arithmetic: deterministic primality, budgeted factorization,
//! squarefreeness, p-adic valuation, a prime sieve, and exact binomials.
//!
//! Primality is deterministic Miller-Rabin for anything that fits in 64 bits
//! (the 12 smallest prime bases decide every n < 3.3e24). Larger inputs get
//! fixed-base strong-pseudoprime rounds plus a strong Lucas test, so a lie
//! would require a Baillie-PSW counterexample.
//!
//! Factorization is trial division by the primes below 10^4 followed by
//! Brent-cycle Pollard rho with a deterministic constant schedule and an
//! explicit iteration budget; running out of budget is reported as
//! `EffortExceeded`, never as a wrong answer.

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::Error;

/// Trial division pulls out every prime factor below this bound before rho runs.
pub const TRIAL_DIVISION_BOUND: u64 = 10_000;

/// Iteration budget for Pollard rho, counted across all attempts within one
/// `factorize` call.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Effort {
    pub rho_iterations: u64,
}

impl Default for Effort {
    fn default() -> Self {
        Effort {
            rho_iterations: 4_000_000,
        }
    }
}

/// One prime power `prime^exponent` of a factorization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimePower {
    #[serde(serialize_with = "crate::serde_utils::bigint_str")]
    pub prime: BigInt,
    pub exponent: u32,
}

/// Complete factorization `value = sign * prod prime^exponent`, primes ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntFactorization {
    #[serde(serialize_with = "crate::serde_utils::bigint_str")]
    pub value: BigInt,
    pub sign: i8,
    pub factors: Vec<PrimePower>,
}

impl IntFactorization {
    /// Multiplies the factorization back together (used by self-checks).
    pub fn recompose(&self) -> BigInt {
        let mut acc = BigInt::from(self.sign);
        for pp in &self.factors {
            acc *= pp.prime.pow(pp.exponent);
        }
        acc
    }

    /// True iff every exponent is 1 (so for |value| = 1 as well).
    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|pp| pp.exponent == 1)
    }

    /// Exponent of `q` in the factorization (0 if absent).
    pub fn exponent_of(&self, q: &BigInt) -> u32 {
        self.factors
            .iter()
            .find(|pp| &pp.prime == q)
            .map_or(0, |pp| pp.exponent)
    }
}

/// All primes <= x, ascending (empty for x < 2). Plain sieve of Eratosthenes.
pub fn primes_up_to(x: u64) -> Vec<u64> {
    if x < 2 {
        return Vec::new();
    }
    let n = x as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

pub(crate) fn small_primes() -> &'static [u64] {
    static CACHE: OnceLock<Vec<u64>> = OnceLock::new();
    CACHE.get_or_init(|| primes_up_to(TRIAL_DIVISION_BOUND))
}

fn mulmod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn powmod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod_u64(acc, base, m);
        }
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit inputs.
///
/// The base set {2, 3, ..., 37} is known to be exact for every n below
/// 3_317_044_064_679_887_385_961_981 > 2^64.
pub fn is_prime_u64(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = powmod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primality of |n|. Deterministic up to 64 bits; Baillie-PSW style beyond
/// (strong pseudoprime to the 12 smallest prime bases plus a strong Lucas test).
pub fn is_prime(n: &BigInt) -> bool {
    let n = n.magnitude();
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    // n > 2^64 here, and trial bases have caught nothing yet
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &BASES {
        if (n % p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().expect("n odd, n-1 nonzero");
    let d = &n_minus_1 >> s;
    'witness: for &a in &BASES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&BigUint::from(2u32), n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    strong_lucas_probable_prime(n)
}

/// Jacobi symbol (a/n) for odd positive n.
fn jacobi(a: &BigInt, n: &BigUint) -> i32 {
    debug_assert!(n.is_odd());
    let n = BigInt::from(n.clone());
    let mut a = a.mod_floor(&n);
    let mut n = n;
    let mut result = 1i32;
    while !a.is_zero() {
        while a.is_even() {
            a /= 2;
            let r = (&n % 8u32).to_u32().unwrap();
            if r == 3 || r == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if (&a % 4u32).to_u32().unwrap() == 3 && (&n % 4u32).to_u32().unwrap() == 3 {
            result = -result;
        }
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        result
    } else {
        0
    }
}

fn is_perfect_square(n: &BigUint) -> bool {
    let r = n.sqrt();
    &r * &r == *n
}

/// Strong Lucas probable-prime test with Selfridge's parameter choice
/// (D = 5, -7, 9, -11, ... with (D/n) = -1; P = 1, Q = (1 - D)/4).
fn strong_lucas_probable_prime(n: &BigUint) -> bool {
    // find D
    let mut d = BigInt::from(5);
    loop {
        match jacobi(&d, n) {
            -1 => break,
            0 => {
                // shares a factor with n; n > |D| here, so composite
                return false;
            }
            _ => {}
        }
        // alternate 5, -7, 9, -11, ...
        d = if d.is_positive() {
            -(d + BigInt::from(2))
        } else {
            -(d - BigInt::from(2))
        };
        if d.magnitude().to_u32() == Some(17) && is_perfect_square(n) {
            return false;
        }
    }
    let nn = BigInt::from(n.clone());
    let q: BigInt = (BigInt::one() - &d) / 4;
    let half: BigInt = (&nn + 1) / 2; // inverse of 2 mod n (n odd)

    let delta = n + 1u32;
    let s = delta.trailing_zeros().expect("delta even");
    let dd = &delta >> s;

    // Lucas ladder for U_dd, V_dd with P = 1
    let mut u = BigInt::one();
    let mut v = BigInt::one();
    let mut qk = q.mod_floor(&nn);
    let bits = dd.bits();
    for i in (0..bits - 1).rev() {
        // double
        u = (&u * &v).mod_floor(&nn);
        v = (&v * &v - (&qk << 1usize)).mod_floor(&nn);
        qk = (&qk * &qk).mod_floor(&nn);
        if dd.bit(i) {
            // advance by one: P = 1
            let u1 = ((&u + &v) * &half).mod_floor(&nn);
            let v1 = ((&d * &u + &v) * &half).mod_floor(&nn);
            u = u1;
            v = v1;
            qk = (&qk * &q).mod_floor(&nn);
        }
    }
    if u.is_zero() || v.is_zero() {
        return true;
    }
    for _ in 1..s {
        v = (&v * &v - (&qk << 1usize)).mod_floor(&nn);
        if v.is_zero() {
            return true;
        }
        qk = (&qk * &qk).mod_floor(&nn);
    }
    false
}

/// Pollard rho (Brent's cycle variant) on u64. Returns a nontrivial factor or
/// None when the budget runs dry. `n` must be odd, composite, > 1.
fn rho_u64(n: u64, budget: &mut u64) -> Option<u64> {
    if n % 2 == 0 {
        return Some(2);
    }
    for c in 1u64.. {
        let f = |x: u64| (mulmod_u64(x, x, n) + c) % n;
        let mut x = 2u64;
        let mut y = 2u64;
        let mut d = 1u64;
        while d == 1 {
            if *budget == 0 {
                return None;
            }
            *budget -= 1;
            x = f(x);
            y = f(f(y));
            d = x.abs_diff(y).gcd(&n);
        }
        if d != n {
            return Some(d);
        }
        // cycle collapsed; retry with the next constant
    }
    unreachable!()
}

fn rho_big(n: &BigUint, budget: &mut u64) -> Option<BigUint> {
    let two = BigUint::from(2u32);
    for c in 1u32.. {
        let cc = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &cc) % n;
        let mut x = two.clone();
        let mut y = two.clone();
        let mut d = BigUint::one();
        while d.is_one() {
            if *budget == 0 {
                return None;
            }
            *budget -= 1;
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            d = diff.gcd(n);
        }
        if &d != n {
            return Some(d);
        }
    }
    unreachable!()
}

fn factor_u64_into(n: u64, budget: &mut u64, out: &mut Vec<BigInt>) -> Result<(), u64> {
    if n == 1 {
        return Ok(());
    }
    if is_prime_u64(n) {
        out.push(BigInt::from(n));
        return Ok(());
    }
    match rho_u64(n, budget) {
        Some(d) => {
            factor_u64_into(d, budget, out)?;
            factor_u64_into(n / d, budget, out)
        }
        None => Err(n),
    }
}

fn factor_big_into(n: &BigUint, budget: &mut u64, out: &mut Vec<BigInt>) -> Result<(), BigUint> {
    if n.is_one() {
        return Ok(());
    }
    if let Some(small) = n.to_u64() {
        return factor_u64_into(small, budget, out).map_err(BigUint::from);
    }
    if is_prime(&BigInt::from(n.clone())) {
        out.push(BigInt::from(n.clone()));
        return Ok(());
    }
    match rho_big(n, budget) {
        Some(d) => {
            factor_big_into(&d, budget, out)?;
            factor_big_into(&(n / &d), budget, out)
        }
        None => Err(n.clone()),
    }
}

/// Complete factorization of n (n != 0), primes ascending with exponents.
///
/// Runs trial division below `TRIAL_DIVISION_BOUND`, then Brent-rho under the
/// given effort budget, certifying every reported prime with `is_prime`.
pub fn factorize(n: &BigInt, effort: Effort) -> Result<IntFactorization, Error> {
    if n.is_zero() {
        return Err(Error::invalid("factorize(0) is undefined"));
    }
    let sign: i8 = if n.sign() == Sign::Minus { -1 } else { 1 };
    let mut rest = n.magnitude().clone();
    let mut primes: Vec<BigInt> = Vec::new();
    for &p in small_primes() {
        if rest.is_one() {
            break;
        }
        let bp = BigUint::from(p);
        while (&rest % &bp).is_zero() {
            rest /= &bp;
            primes.push(BigInt::from(p));
        }
        // stop early once rest < p^2: it is 1 or prime
        if &bp * &bp > rest {
            break;
        }
    }
    if !rest.is_one() {
        let mut budget = effort.rho_iterations;
        factor_big_into(&rest, &mut budget, &mut primes).map_err(|stuck| {
            Error::EffortExceeded {
                value: BigInt::from(stuck),
                budget: effort.rho_iterations,
            }
        })?;
    }
    primes.sort();
    let mut factors: Vec<PrimePower> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some(last) if last.prime == p => last.exponent += 1,
            _ => factors.push(PrimePower {
                prime: p,
                exponent: 1,
            }),
        }
    }
    let out = IntFactorization {
        value: n.clone(),
        sign,
        factors,
    };
    debug_assert_eq!(out.recompose(), *n);
    Ok(out)
}

/// Squarefreeness of n (n != 0); +-1 count as squarefree.
pub fn is_squarefree(n: &BigInt, effort: Effort) -> Result<bool, Error> {
    Ok(factorize(n, effort)?.is_squarefree())
}

/// Exact q-adic valuation of n (n != 0, q >= 2).
pub fn valuation(n: &BigInt, q: &BigInt) -> u32 {
    assert!(!n.is_zero(), "valuation of 0 is infinite");
    assert!(q.magnitude() >= &BigUint::from(2u32), "valuation base must be >= 2");
    let mut v = 0u32;
    let mut rest = n.clone();
    loop {
        let (quot, rem) = rest.div_rem(q);
        if !rem.is_zero() {
            return v;
        }
        v += 1;
        rest = quot;
    }
}

/// Exact binomial coefficient C(n, k).
pub fn binomial(n: u64, k: u64) -> BigUint {
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

/// C(n, k) mod p^e for prime p with p^e in u64 range, without materializing
/// the (possibly astronomically large) binomial: the multiplicative formula
/// prod (n-k+i)/i runs with all factors of p stripped and counted, and the
/// net p-valuation is multiplied back in at the end.
pub fn binomial_mod_prime_power(n: u64, k: u64, p: u64, e: u32) -> u64 {
    assert!(is_prime_u64(p), "modulus base must be prime");
    assert!(e >= 1);
    let m = p.checked_pow(e).expect("p^e must fit in u64");
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    // x^(phi(p^e) - 1) inverts units mod p^e
    let inv_exp = m / p * (p - 1) - 1;
    let mut acc = 1 % m;
    let mut val_num = 0u64;
    let mut val_den = 0u64;
    for i in 1..=k {
        let mut num = n - k + i;
        let mut den = i;
        while num % p == 0 {
            num /= p;
            val_num += 1;
        }
        while den % p == 0 {
            den /= p;
            val_den += 1;
        }
        acc = mulmod_u64(acc, num % m, m);
        acc = mulmod_u64(acc, powmod_u64(den % m, inv_exp, m), m);
    }
    debug_assert!(val_num >= val_den, "binomial coefficients are integers");
    let mut v = val_num - val_den;
    while v > 0 && acc != 0 {
        acc = mulmod_u64(acc, p % m, m);
        v -= 1;
    }
    acc
}

/// x mod q as a u64 in [0, q).
pub(crate) fn mod_u64(x: &BigInt, q: u64) -> u64 {
    x.mod_floor(&BigInt::from(q)).try_into().unwrap()
}

/// -x mod q as a u64 in [0, q).
pub(crate) fn neg_mod(x: &BigInt, q: u64) -> u64 {
    (-x).mod_floor(&BigInt::from(q)).try_into().unwrap()
}

/// Squarefreeness of a u64 by trial division through the small-prime table;
/// `None` when the cofactor is too large for the two-prime-factor argument
/// (only possible beyond 10^15).
pub(crate) fn is_squarefree_u64(mut x: u64) -> Option<bool> {
    if x == 0 {
        return Some(false);
    }
    for &q in small_primes() {
        if q * q > x {
            break;
        }
        if x % q == 0 {
            x /= q;
            if x % q == 0 {
                return Some(false);
            }
        }
    }
    if x == 1 {
        return Some(true);
    }
    if x >= 1_000_000_000_000_000 {
        // could still hide a square of a prime above the table
        return None;
    }
    // at most two prime factors remain, so only an exact square is bad
    let s = x.sqrt();
    Some(s * s != x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Num;

    /// Independent oracle: unoptimized trial division.
    fn is_prime_naive(n: u64) -> bool {
        if n < 2 {
            return false;
        }
        let mut d = 2;
        while d * d <= n {
            if n % d == 0 {
                return false;
            }
            d += 1;
        }
        true
    }

    #[test]
    fn sieve_matches_naive() {
        let primes = primes_up_to(500);
        let naive: Vec<u64> = (0..=500).filter(|&n| is_prime_naive(n)).collect();
        assert_eq!(primes, naive);
        assert!(primes_up_to(1).is_empty());
        assert_eq!(primes_up_to(2), vec![2]);
    }

    #[test]
    fn prime_count_to_1e5() {
        assert_eq!(primes_up_to(100_000).len(), 9592);
    }

    #[test]
    fn miller_rabin_agrees_with_trial_division() {
        for n in 0..3000u64 {
            assert_eq!(is_prime_u64(n), is_prime_naive(n), "n = {n}");
        }
        // classical liars for weaker tests
        assert!(!is_prime_u64(561)); // Carmichael
        assert!(!is_prime_u64(2047)); // strong pseudoprime base 2
        assert!(!is_prime_u64(3215031751)); // spsp to bases 2,3,5,7
        assert!(is_prime_u64(1_000_003));
        assert!(is_prime_u64(2_305_843_009_213_693_951)); // 2^61 - 1
        assert!(!is_prime_u64(u64::MAX)); // 3 * 5 * 17 * 257 * 641 * 65537 * 6700417
    }

    #[test]
    fn bigint_primality_beyond_u64() {
        // 2^89 - 1 is a Mersenne prime
        let m89 = (BigInt::one() << 89) - 1;
        assert!(is_prime(&m89));
        // square of 2^61 - 1
        let m61 = BigInt::from(2_305_843_009_213_693_951u64);
        assert!(!is_prime(&(&m61 * &m61)));
        // 10^25 + 7 = 353 * 28328611898016997175637 (composite)
        let n = BigInt::from_str_radix("10000000000000000000000007", 10).unwrap();
        assert!(!is_prime(&n));
        assert!(is_prime(&BigInt::from(-13)));
    }

    #[test]
    fn factorize_known_values() {
        let f = factorize(&BigInt::from(-93), Effort::default()).unwrap();
        assert_eq!(f.sign, -1);
        assert_eq!(
            f.factors,
            vec![
                PrimePower { prime: 3.into(), exponent: 1 },
                PrimePower { prime: 31.into(), exponent: 1 },
            ]
        );
        let f = factorize(&BigInt::from(9_699_690), Effort::default()).unwrap();
        let primes: Vec<u32> = f.factors.iter().map(|pp| pp.prime.to_u32().unwrap()).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19]);
        assert!(f.factors.iter().all(|pp| pp.exponent == 1));
        let f = factorize(&BigInt::from(1024), Effort::default()).unwrap();
        assert_eq!(f.factors, vec![PrimePower { prime: 2.into(), exponent: 10 }]);
        assert!(factorize(&BigInt::zero(), Effort::default()).is_err());
    }

    #[test]
    fn factorize_recomposes_on_random_inputs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xFAC7);
        for _ in 0..200 {
            let n: i64 = rng.gen_range(-1_000_000_000_000i64..=1_000_000_000_000);
            if n == 0 {
                continue;
            }
            let f = factorize(&BigInt::from(n), Effort::default()).unwrap();
            assert_eq!(f.recompose(), BigInt::from(n));
            for pp in &f.factors {
                assert!(is_prime(&pp.prime));
            }
        }
    }

    #[test]
    fn effort_exhaustion_is_reported() {
        // (2^61 - 1)^2: rho would need ~2^30 iterations to split it
        let m61 = BigInt::from(2_305_843_009_213_693_951u64);
        let n = &m61 * &m61;
        match factorize(&n, Effort { rho_iterations: 50 }) {
            Err(Error::EffortExceeded { budget: 50, .. }) => {}
            other => panic!("expected EffortExceeded, got {other:?}"),
        }
        // a three-prime product beyond 2^64 whose factors rho reaches quickly
        let n = BigInt::from(1_000_000_007u64)
            * BigInt::from(1_000_000_009u64)
            * BigInt::from(1_000_000_021u64);
        let f = factorize(&n, Effort::default()).unwrap();
        let primes: Vec<u64> = f.factors.iter().map(|pp| pp.prime.to_u64().unwrap()).collect();
        assert_eq!(primes, vec![1_000_000_007, 1_000_000_009, 1_000_000_021]);
        assert!(f.is_squarefree());
    }

    #[test]
    fn squarefree_examples() {
        let e = Effort::default();
        assert!(is_squarefree(&BigInt::from(93), e).unwrap());
        assert!(is_squarefree(&BigInt::from(-93), e).unwrap());
        assert!(!is_squarefree(&BigInt::from(12), e).unwrap());
        assert!(is_squarefree(&BigInt::one(), e).unwrap());
        assert!(is_squarefree(&BigInt::from(-1), e).unwrap());
        assert!(!is_squarefree(&BigInt::from(-4), e).unwrap());
        assert!(is_squarefree(&BigInt::from(30), e).unwrap());
        assert!(is_squarefree(&BigInt::from(2 * 3 * 5 * 7 * 11), e).unwrap());
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(valuation(&BigInt::from(48), &BigInt::from(2)), 4);
        assert_eq!(valuation(&BigInt::from(48), &BigInt::from(3)), 1);
        assert_eq!(valuation(&BigInt::from(5), &BigInt::from(7)), 0);
        assert_eq!(valuation(&BigInt::from(-54), &BigInt::from(3)), 3);
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(6, 3), BigUint::from(20u32));
        assert_eq!(binomial(18, 9), BigUint::from(48620u32));
        assert_eq!(&binomial(18, 9) % 9u32, BigUint::from(2u32));
        assert_eq!(binomial(10, 3), binomial(10, 7));
        assert_eq!(binomial(5, 0), BigUint::one());
        assert_eq!(binomial(3, 5), BigUint::zero());
        // Pascal identity on a band of values
        for n in 1..40u64 {
            for k in 1..n {
                assert_eq!(
                    binomial(n, k),
                    binomial(n - 1, k - 1) + binomial(n - 1, k),
                    "Pascal fails at ({n},{k})"
                );
            }
        }
    }

    #[test]
    fn binomial_residues_match_exact_binomials() {
        for p in [2u64, 3, 5, 7] {
            for e in 1..=3u32 {
                let m = p.pow(e);
                for n in 0..=30u64 {
                    for k in 0..=n + 2 {
                        let exact = &binomial(n, k) % m;
                        let exact: u64 = exact.try_into().unwrap();
                        assert_eq!(
                            binomial_mod_prime_power(n, k, p, e),
                            exact,
                            "C({n},{k}) mod {p}^{e}"
                        );
                    }
                }
            }
        }
        // a case whose exact value is still cheap but already 33 digits
        let exact = &binomial(112, 56) % 49u32;
        let exact: u64 = exact.try_into().unwrap();
        assert_eq!(binomial_mod_prime_power(112, 56, 7, 2), exact);
    }

    #[test]
    fn squarefree_u64_matches_bigint_route() {
        let e = Effort::default();
        for x in 1..=3000u64 {
            assert_eq!(
                is_squarefree_u64(x),
                Some(is_squarefree(&BigInt::from(x), e).unwrap()),
                "x = {x}"
            );
        }
        assert_eq!(is_squarefree_u64(0), Some(false));
        // squares and products of primes above the trial table are decided
        // by the square test on the cofactor
        assert_eq!(is_squarefree_u64(1_000_003u64 * 1_000_003), Some(false));
        assert_eq!(is_squarefree_u64(1_000_003u64 * 1_000_033), Some(true));
    }
}
