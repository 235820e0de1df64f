//! Dense polynomials over the prime field F_q, q a u64 prime. Coefficient
//! arithmetic goes through u128 so any prime below 2^63 is safe.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::PolyZ;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyModQ {
    q: u64,
    coeffs: Vec<u64>, // ascending, trimmed, values in [0, q)
}

fn mulmod(a: u64, b: u64, q: u64) -> u64 {
    ((a as u128 * b as u128) % q as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, q: u64) -> u64 {
    let mut acc = 1 % q;
    b %= q;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, q);
        }
        b = mulmod(b, b, q);
        e >>= 1;
    }
    acc
}

/// Inverse mod a prime q (Fermat).
fn invmod(a: u64, q: u64) -> u64 {
    debug_assert!(a % q != 0, "inverse of 0 mod {q}");
    powmod(a, q - 2, q)
}

impl PolyModQ {
    pub fn new(q: u64, mut coeffs: Vec<u64>) -> Self {
        assert!(q >= 2);
        for c in &mut coeffs {
            *c %= q;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PolyModQ { q, coeffs }
    }

    pub fn from_bigints(q: u64, coeffs: &[BigInt]) -> Self {
        let qb = BigInt::from(q);
        PolyModQ::new(
            q,
            coeffs
                .iter()
                .map(|c| c.mod_floor(&qb).to_u64().expect("residue fits u64"))
                .collect(),
        )
    }

    pub fn zero(q: u64) -> Self {
        PolyModQ { q, coeffs: Vec::new() }
    }

    pub fn one(q: u64) -> Self {
        PolyModQ::new(q, vec![1])
    }

    pub fn x(q: u64) -> Self {
        PolyModQ::new(q, vec![0, 1])
    }

    pub fn constant(q: u64, c: u64) -> Self {
        PolyModQ::new(q, vec![c])
    }

    pub fn monomial(q: u64, c: u64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        PolyModQ::new(q, coeffs)
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> u64 {
        *self.coeffs.last().expect("leading of zero polynomial")
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    fn check_same_field(&self, other: &PolyModQ) {
        assert_eq!(self.q, other.q, "mixed moduli");
    }

    pub fn add(&self, other: &PolyModQ) -> PolyModQ {
        self.check_same_field(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        PolyModQ::new(
            self.q,
            (0..n)
                .map(|i| (self.coeff(i) + other.coeff(i)) % self.q)
                .collect(),
        )
    }

    pub fn sub(&self, other: &PolyModQ) -> PolyModQ {
        self.check_same_field(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        PolyModQ::new(
            self.q,
            (0..n)
                .map(|i| (self.coeff(i) + self.q - other.coeff(i)) % self.q)
                .collect(),
        )
    }

    pub fn neg(&self) -> PolyModQ {
        PolyModQ::new(
            self.q,
            self.coeffs.iter().map(|&c| (self.q - c) % self.q).collect(),
        )
    }

    pub fn mul(&self, other: &PolyModQ) -> PolyModQ {
        self.check_same_field(other);
        if self.is_zero() || other.is_zero() {
            return PolyModQ::zero(self.q);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mulmod(a, b, self.q)) % self.q;
            }
        }
        PolyModQ::new(self.q, out)
    }

    pub fn mul_scalar(&self, c: u64) -> PolyModQ {
        PolyModQ::new(
            self.q,
            self.coeffs.iter().map(|&a| mulmod(a, c % self.q, self.q)).collect(),
        )
    }

    pub fn make_monic(&self) -> PolyModQ {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        self.mul_scalar(invmod(self.leading(), self.q))
    }

    /// Division with remainder by any nonzero divisor.
    pub fn divrem(&self, d: &PolyModQ) -> (PolyModQ, PolyModQ) {
        self.check_same_field(d);
        let dd = d.degree().expect("division by zero polynomial");
        let q = self.q;
        if self.coeffs.len() < d.coeffs.len() {
            return (PolyModQ::zero(q), self.clone());
        }
        let inv_lead = invmod(d.leading(), q);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = mulmod(rem[i], inv_lead, q);
            rem[i] = 0;
            if c == 0 {
                continue;
            }
            for (j, &b) in d.coeffs[..dd].iter().enumerate() {
                let sub = mulmod(c, b, q);
                let idx = i - dd + j;
                rem[idx] = (rem[idx] + q - sub) % q;
            }
            quot[i - dd] = c;
        }
        rem.truncate(dd);
        (PolyModQ::new(q, quot), PolyModQ::new(q, rem))
    }

    pub fn rem(&self, d: &PolyModQ) -> PolyModQ {
        self.divrem(d).1
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, other: &PolyModQ) -> PolyModQ {
        self.check_same_field(other);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// Extended gcd: returns (g, s, t) with s*self + t*other = g, g monic.
    pub fn xgcd(&self, other: &PolyModQ) -> (PolyModQ, PolyModQ, PolyModQ) {
        self.check_same_field(other);
        let q = self.q;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (PolyModQ::one(q), PolyModQ::zero(q));
        let (mut t0, mut t1) = (PolyModQ::zero(q), PolyModQ::one(q));
        while !r1.is_zero() {
            let (quot, rem) = r0.divrem(&r1);
            let s2 = s0.sub(&quot.mul(&s1));
            let t2 = t0.sub(&quot.mul(&t1));
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = invmod(r0.leading(), q);
        (r0.mul_scalar(inv), s0.mul_scalar(inv), t0.mul_scalar(inv))
    }

    /// self^e mod m, e arbitrary precision.
    pub fn powmod(&self, e: &BigUint, m: &PolyModQ) -> PolyModQ {
        let mut acc = PolyModQ::one(self.q);
        let mut base = self.rem(m);
        let bits = e.bits();
        for i in 0..bits {
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
            if i + 1 < bits {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }

    pub fn derivative(&self) -> PolyModQ {
        if self.coeffs.len() <= 1 {
            return PolyModQ::zero(self.q);
        }
        PolyModQ::new(
            self.q,
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, &c)| mulmod(c, (i as u64 + 1) % self.q, self.q))
                .collect(),
        )
    }

    pub fn eval(&self, x: u64) -> u64 {
        let x = x % self.q;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (mulmod(acc, x, self.q) + c) % self.q;
        }
        acc
    }

    /// Canonical lift to Z with coefficients in [0, q).
    pub fn lift(&self) -> PolyZ {
        PolyZ::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Lift with coefficients balanced into (-q/2, q/2].
    pub fn lift_balanced(&self) -> PolyZ {
        let half = self.q / 2;
        PolyZ::new(
            self.coeffs
                .iter()
                .map(|&c| {
                    if c > half {
                        BigInt::from(c) - BigInt::from(self.q)
                    } else {
                        BigInt::from(c)
                    }
                })
                .collect(),
        )
    }

    pub fn canonical_cmp(&self, other: &PolyModQ) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl serde::Serialize for PolyModQ {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl fmt::Display for PolyModQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lift())
    }
}

impl fmt::Debug for PolyModQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyModQ[{}]({})", self.q, self.lift())
    }
}
