//! Trinomial shapes `x^m + A x^(m-1) + B`, their power compositions
//! `F(x^(p^n))`, and exact closed-form discriminants.
//!
//! `swan_disc` is the classical closed form for the discriminant of a general
//! trinomial `x^n + A x^m + B`. For the shapes used here it specializes to
//! `+-B^(m-2) * D` with `D = m^m B - (-1)^m (m-1)^(m-1) A^m`, and composition
//! with `x -> x^(p^n)` multiplies in an exact power of p and raises D to the
//! p^n-th power. Everything is checked against the fraction-free resultant in
//! the test suites; the closed forms are what production paths use.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::Error;
use crate::integers::{factorize, is_prime_u64, Effort, IntFactorization, PrimePower};
use crate::poly::{PolyZ, MAX_DEGREE};

/// Monic trinomial x^m + A x^(m-1) + B with m >= 2 and B != 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Trinomial {
    m: u32,
    #[serde(serialize_with = "crate::serde_utils::bigint_str")]
    a: BigInt,
    #[serde(serialize_with = "crate::serde_utils::bigint_str")]
    b: BigInt,
}

impl Trinomial {
    pub fn new(m: u32, a: BigInt, b: BigInt) -> Result<Self, Error> {
        if m < 2 {
            return Err(Error::invalid(format!("trinomial degree m = {m} must be >= 2")));
        }
        if b.is_zero() {
            return Err(Error::invalid("trinomial constant term B must be nonzero"));
        }
        Ok(Trinomial { m, a, b })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn to_poly(&self) -> PolyZ {
        let m = self.m as usize;
        let mut coeffs = vec![BigInt::zero(); m + 1];
        coeffs[0] = self.b.clone();
        coeffs[m - 1] = self.a.clone();
        coeffs[m] = BigInt::one();
        PolyZ::new(coeffs)
    }

    /// D = m^m B - (-1)^m (m-1)^(m-1) A^m.
    pub fn d_value(&self) -> BigInt {
        trinomial_d(self.m, &self.a, &self.b)
    }

    /// Discriminant data of the trinomial itself (no composition).
    pub fn disc_data(&self) -> DiscriminantData {
        // p is irrelevant at n = 0
        let pt = PowerTrinomial::new(self.clone(), 2, 0).expect("n = 0 always in range");
        disc_power(&pt)
    }
}

/// F(x^(p^n)) for a trinomial F; p prime, n >= 0, expanded degree capped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerTrinomial {
    base: Trinomial,
    p: u64,
    n: u32,
}

impl PowerTrinomial {
    pub fn new(base: Trinomial, p: u64, n: u32) -> Result<Self, Error> {
        if !is_prime_u64(p) {
            return Err(Error::invalid(format!("p = {p} is not prime")));
        }
        let mut pn: u64 = 1;
        for _ in 0..n {
            pn = pn
                .checked_mul(p)
                .filter(|&v| v.saturating_mul(base.m as u64) <= MAX_DEGREE as u64)
                .ok_or_else(|| {
                    Error::invalid(format!("expanded degree m * {p}^{n} is out of range"))
                })?;
        }
        Ok(PowerTrinomial { base, p, n })
    }

    pub fn base(&self) -> &Trinomial {
        &self.base
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// p^n.
    pub fn expansion(&self) -> u64 {
        self.p.pow(self.n)
    }

    /// Degree of the expanded polynomial, m p^n.
    pub fn expanded_degree(&self) -> u64 {
        self.base.m as u64 * self.expansion()
    }

    /// Degree of the middle term, (m-1) p^n.
    pub fn middle_degree(&self) -> u64 {
        (self.base.m as u64 - 1) * self.expansion()
    }

    /// The expanded polynomial F(x^(p^n)).
    pub fn to_poly(&self) -> PolyZ {
        self.base.to_poly().expand_power(self.expansion() as u32)
    }
}

/// D = m^m B - (-1)^m (m-1)^(m-1) A^m for x^m + A x^(m-1) + B.
pub fn trinomial_d(m: u32, a: &BigInt, b: &BigInt) -> BigInt {
    assert!(m >= 2);
    let mm = BigInt::from(m).pow(m);
    let mut second = BigInt::from(m - 1).pow(m - 1) * a.pow(m);
    if m % 2 == 1 {
        second = -second;
    }
    mm * b - second
}

/// Parity of N(N-1)/2 computed in arbitrary precision, returned as "is odd".
fn disc_sign_is_negative(n: &BigUint) -> bool {
    let prod = n * (n - 1u32) / 2u32;
    prod.is_odd()
}

/// Closed-form discriminant of the trinomial f = x^n + A x^m + B
/// (0 < m < n, B != 0):
///
/// (-1)^(n(n-1)/2) B^(m-1) (n^(n/d) B^((n-m)/d)
///     - (-1)^(n/d) (n-m)^((n-m)/d) m^(m/d) A^(n/d))^d,  d = gcd(n, m).
pub fn swan_disc(n: u32, m: u32, a: &BigInt, b: &BigInt) -> BigInt {
    assert!(0 < m && m < n, "swan_disc needs 0 < m < n");
    assert!(!b.is_zero(), "swan_disc needs B != 0");
    let d = n.gcd(&m);
    let term1 = BigInt::from(n).pow(n / d) * b.pow((n - m) / d);
    let mut term2 = BigInt::from(n - m).pow((n - m) / d) * BigInt::from(m).pow(m / d) * a.pow(n / d);
    if (n / d) % 2 == 1 {
        term2 = -term2;
    }
    let core = (term1 - term2).pow(d);
    let disc = b.pow(m - 1) * core;
    if disc_sign_is_negative(&BigUint::from(n)) {
        -disc
    } else {
        disc
    }
}

/// Discriminant of F(x^(p^n)) together with the invariant D of the base.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiscriminantData {
    /// D of the base trinomial.
    #[serde(serialize_with = "crate::serde_utils::bigint_str")]
    pub d: BigInt,
    /// Full discriminant of the expanded polynomial.
    #[serde(serialize_with = "crate::serde_utils::bigint_str")]
    pub disc: BigInt,
    /// Whether the leading sign factor (-1)^(N(N-1)/2) is -1, N = m p^n.
    pub sign_negative: bool,
}

/// Exact discriminant of F(x^(p^n)):
/// (-1)^(N(N-1)/2) B^((m-1)p^n - 1) p^(m n p^n) D^(p^n), N = m p^n.
pub fn disc_power(pt: &PowerTrinomial) -> DiscriminantData {
    let m = pt.base.m;
    let pn = pt.expansion();
    let d = pt.base.d_value();
    let sign_negative = disc_sign_is_negative(&BigUint::from(pt.expanded_degree()));
    let b_exp = (m as u64 - 1) * pn - 1;
    let p_exp = m as u64 * pt.n as u64 * pn;
    let mut disc = pt.base.b.pow(u32::try_from(b_exp).expect("exponent fits u32"))
        * BigInt::from(pt.p).pow(u32::try_from(p_exp).expect("exponent fits u32"))
        * d.pow(u32::try_from(pn).expect("exponent fits u32"));
    if sign_negative {
        disc = -disc;
    }
    DiscriminantData {
        d,
        disc,
        sign_negative,
    }
}

/// Factorization of disc(F(x^(p^n))) assembled structurally: factor B and D,
/// then merge exponents from the closed form instead of factoring the (often
/// enormous) discriminant value itself.
pub fn disc_power_factored(
    pt: &PowerTrinomial,
    effort: Effort,
) -> Result<IntFactorization, Error> {
    let data = disc_power(pt);
    let m = pt.base.m as u64;
    let pn = pt.expansion();
    let b_exp = (m - 1) * pn - 1;
    let p_exp = m * pt.n as u64 * pn;

    let mut merged: Vec<(BigInt, u64)> = Vec::new();
    let mut add = |prime: BigInt, e: u64| {
        if e == 0 {
            return;
        }
        match merged.iter_mut().find(|(p, _)| *p == prime) {
            Some((_, tot)) => *tot += e,
            None => merged.push((prime, e)),
        }
    };
    if b_exp > 0 {
        for pp in factorize(&pt.base.b, effort)?.factors {
            add(pp.prime, pp.exponent as u64 * b_exp);
        }
    }
    add(BigInt::from(pt.p), p_exp);
    if !data.d.magnitude().is_one() {
        for pp in factorize(&data.d, effort)?.factors {
            add(pp.prime, pp.exponent as u64 * pn);
        }
    }
    merged.sort_by(|a, b| a.0.cmp(&b.0));
    let factors = merged
        .into_iter()
        .map(|(prime, e)| PrimePower {
            prime,
            exponent: u32::try_from(e).expect("merged exponent fits u32"),
        })
        .collect();
    let out = IntFactorization {
        sign: if data.disc.is_negative() { -1 } else { 1 },
        value: data.disc,
        factors,
    };
    debug_assert_eq!(out.recompose(), out.value);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::disc_resultant;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn tri(m: u32, a: i64, b: i64) -> Trinomial {
        Trinomial::new(m, BigInt::from(a), BigInt::from(b)).unwrap()
    }

    #[test]
    fn constructors_validate() {
        assert!(Trinomial::new(1, BigInt::one(), BigInt::one()).is_err());
        assert!(Trinomial::new(2, BigInt::one(), BigInt::zero()).is_err());
        assert!(PowerTrinomial::new(tri(2, 1, 1), 4, 0).is_err()); // p composite
        assert!(PowerTrinomial::new(tri(2, 1, 1), 3, 40).is_err()); // degree blowup
        let pt = PowerTrinomial::new(tri(3, 1, 3), 3, 1).unwrap();
        assert_eq!(pt.expanded_degree(), 9);
        assert_eq!(pt.middle_degree(), 6);
        assert_eq!(pt.to_poly(), PolyZ::from_i64(&[3, 0, 0, 0, 0, 0, 1, 0, 0, 1]));
    }

    #[test]
    fn d_values() {
        assert_eq!(tri(2, 11, 7).d_value(), BigInt::from(-93)); // 4*7 - 121
        assert_eq!(tri(3, 1, 3).d_value(), BigInt::from(85)); // 27*3 + 4
        assert_eq!(trinomial_d(4, &BigInt::zero(), &BigInt::from(2)), BigInt::from(512)); // m^m B
        assert_eq!(tri(2, 0, -1).d_value(), BigInt::from(-4));
    }

    #[test]
    fn swan_matches_resultant_on_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(51);
        let mut checked = 0;
        while checked < 300 {
            let n = rng.gen_range(2..=9u32);
            let m = rng.gen_range(1..n);
            let a = BigInt::from(rng.gen_range(-20i64..=20));
            let b = BigInt::from(rng.gen_range(-20i64..=20));
            if b.is_zero() {
                continue;
            }
            let mut coeffs = vec![BigInt::zero(); n as usize + 1];
            coeffs[0] = b.clone();
            coeffs[m as usize] += &a; // m may equal 0? no: 1 <= m < n
            coeffs[n as usize] = BigInt::one();
            let f = PolyZ::new(coeffs);
            assert_eq!(
                swan_disc(n, m, &a, &b),
                disc_resultant(&f),
                "mismatch at n={n} m={m} a={a} b={b}"
            );
            checked += 1;
        }
    }

    #[test]
    fn swan_specializes_to_b_power_times_d() {
        let mut rng = ChaCha8Rng::seed_from_u64(52);
        for _ in 0..200 {
            let m = rng.gen_range(2..=9u32);
            let a = BigInt::from(rng.gen_range(-15i64..=15));
            let b = BigInt::from(rng.gen_range(-15i64..=15));
            if b.is_zero() {
                continue;
            }
            let d = trinomial_d(m, &a, &b);
            let expect = {
                let v = b.pow(m - 2) * &d;
                if (m * (m - 1) / 2) % 2 == 1 {
                    -v
                } else {
                    v
                }
            };
            assert_eq!(swan_disc(m, m - 1, &a, &b), expect);
        }
    }

    #[test]
    fn disc_power_frozen_values() {
        // n = 0: disc(x^2 + 11x + 7) = -D = 93
        let t = tri(2, 11, 7);
        let data = t.disc_data();
        assert_eq!(data.d, BigInt::from(-93));
        assert_eq!(data.disc, BigInt::from(93));
        assert!(data.sign_negative);

        // n = 0, m = 3: disc(x^3 + x^2 + 3) = -B * D = -255
        let data = tri(3, 1, 3).disc_data();
        assert_eq!(data.d, BigInt::from(85));
        assert_eq!(data.disc, BigInt::from(-255));

        // (2, 11, 7) composed with p = 3, n = 1:
        // (-1)^15 * 7^2 * 3^6 * (-93)^3 > 0
        let pt = PowerTrinomial::new(tri(2, 11, 7), 3, 1).unwrap();
        let data = disc_power(&pt);
        let expect = BigInt::from(49) * BigInt::from(729) * BigInt::from(804_357i64);
        assert_eq!(data.disc, expect);
        assert!(data.sign_negative);
    }

    #[test]
    fn disc_power_matches_resultant() {
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        for _ in 0..60 {
            let m = rng.gen_range(2..=3u32);
            let a = BigInt::from(rng.gen_range(-10i64..=10));
            let b = BigInt::from(rng.gen_range(-10i64..=10));
            if b.is_zero() {
                continue;
            }
            for n in 0..=1u32 {
                let pt = PowerTrinomial::new(
                    Trinomial::new(m, a.clone(), b.clone()).unwrap(),
                    3,
                    n,
                )
                .unwrap();
                assert_eq!(disc_power(&pt).disc, disc_resultant(&pt.to_poly()));
            }
        }
    }

    #[test]
    fn disc_power_agrees_with_swan_composition() {
        // disc_power(pt) = swan_disc(m p^n, (m-1) p^n, A, B)
        let mut rng = ChaCha8Rng::seed_from_u64(54);
        for _ in 0..100 {
            let m = rng.gen_range(2..=5u32);
            let a = BigInt::from(rng.gen_range(-10i64..=10));
            let b = BigInt::from(rng.gen_range(-10i64..=10));
            if b.is_zero() {
                continue;
            }
            let n = rng.gen_range(0..=2u32);
            let p = *[2u64, 3, 5].iter().filter(|&&p| {
                // keep degrees modest
                m as u64 * p.pow(n) <= 60
            }).next().unwrap_or(&2);
            let pt =
                PowerTrinomial::new(Trinomial::new(m, a.clone(), b.clone()).unwrap(), p, n)
                    .unwrap();
            let expect = swan_disc(
                pt.expanded_degree() as u32,
                pt.middle_degree() as u32,
                &a,
                &b,
            );
            assert_eq!(disc_power(&pt).disc, expect);
        }
    }

    #[test]
    fn structural_factorization() {
        let pt = PowerTrinomial::new(tri(2, 11, 7), 3, 1).unwrap();
        let f = disc_power_factored(&pt, Effort::default()).unwrap();
        assert_eq!(f.sign, 1);
        let expect: Vec<(BigInt, u32)> = vec![
            (3.into(), 9), // 3^6 from p, 3^3 from D^3
            (7.into(), 2),
            (31.into(), 3),
        ];
        let got: Vec<(BigInt, u32)> =
            f.factors.iter().map(|pp| (pp.prime.clone(), pp.exponent)).collect();
        assert_eq!(got, expect);
        assert_eq!(f.recompose(), disc_power(&pt).disc);

        // n = 0 cross-check against direct factorization of the value
        let t = tri(5, 2, 6);
        let data = t.disc_data();
        let pt = PowerTrinomial::new(t, 2, 0).unwrap();
        let structural = disc_power_factored(&pt, Effort::default()).unwrap();
        let direct = factorize(&data.disc, Effort::default()).unwrap();
        assert_eq!(structural, direct);
    }
}
