//! Complete factorization in F_q[x]: squarefree decomposition (char-p aware),
//! distinct-degree splitting, then Cantor-Zassenhaus equal-degree splitting.
//! Randomness comes from a caller-visible ChaCha8 seed so output is stable;
//! factors are reported monic in a canonical order (degree, then coefficient
//! lex from the constant term up).

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{PolyModQ, PolyZ};
use crate::integers::is_prime_u64;

/// Default seed for the equal-degree splitting RNG.
pub const FACTOR_MOD_Q_SEED: u64 = 0x5EED_CA57;

/// Factorization over F_q: `unit * prod factors[i].0 ^ factors[i].1`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct ModFactorization {
    pub modulus: u64,
    pub unit: u64,
    pub factors: Vec<(PolyModQ, u32)>,
}

impl ModFactorization {
    /// Multiplies the factorization back together.
    pub fn recompose(&self) -> PolyModQ {
        let mut acc = PolyModQ::constant(self.modulus, self.unit);
        for (f, e) in &self.factors {
            for _ in 0..*e {
                acc = acc.mul(f);
            }
        }
        acc
    }
}

/// Factors f mod q (q prime, f nonzero mod q) with the default seed.
pub fn factor_mod_q(f: &PolyZ, q: u64) -> ModFactorization {
    factor_mod_q_seeded(f, q, FACTOR_MOD_Q_SEED)
}

/// Factors f mod q with an explicit seed for the splitting RNG. The result
/// does not depend on the seed (factors are sorted canonically); the seed only
/// steers how quickly equal-degree splitting succeeds.
pub fn factor_mod_q_seeded(f: &PolyZ, q: u64, seed: u64) -> ModFactorization {
    assert!(is_prime_u64(q), "factor_mod_q needs a prime modulus, got {q}");
    let fq = f.reduce_mod(q);
    assert!(!fq.is_zero(), "polynomial vanishes mod {q}");
    let unit = fq.leading();
    let monic = fq.make_monic();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ q);
    let mut factors: Vec<(PolyModQ, u32)> = Vec::new();
    for (part, mult) in squarefree_decomposition(&monic) {
        for (prod, d) in distinct_degree_split(&part) {
            for irr in equal_degree_split(&prod, d, &mut rng) {
                factors.push((irr, mult));
            }
        }
    }
    factors.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    let out = ModFactorization {
        modulus: q,
        unit,
        factors,
    };
    debug_assert_eq!(out.recompose(), fq);
    out
}

fn exact_div(a: &PolyModQ, b: &PolyModQ) -> PolyModQ {
    let (quot, rem) = a.divrem(b);
    debug_assert!(rem.is_zero(), "expected exact division");
    quot
}

/// p-th root of f when f' = 0, i.e. f = h(x^p) over the prime field
/// (coefficients are their own p-th roots in F_p).
fn pth_root(f: &PolyModQ) -> PolyModQ {
    let p = f.modulus() as usize;
    let coeffs = f.coeffs();
    let mut out = Vec::with_capacity(coeffs.len() / p + 1);
    for (i, &c) in coeffs.iter().enumerate() {
        if i % p == 0 {
            out.push(c);
        } else {
            debug_assert_eq!(c, 0, "pth_root needs vanishing derivative");
        }
    }
    PolyModQ::new(f.modulus(), out)
}

/// Char-p squarefree decomposition of a monic polynomial:
/// returns pairwise-coprime squarefree parts with their multiplicities.
fn squarefree_decomposition(f: &PolyModQ) -> Vec<(PolyModQ, u32)> {
    let mut out = Vec::new();
    sff_into(f, 1, &mut out);
    out
}

fn sff_into(f: &PolyModQ, scale: u32, out: &mut Vec<(PolyModQ, u32)>) {
    if f.is_constant() {
        return;
    }
    let p = f.modulus() as u32;
    let deriv = f.derivative();
    let mut c = f.gcd(&deriv); // = f itself when deriv = 0
    let mut w = exact_div(f, &c);
    let mut i = 1u32;
    while !w.is_constant() {
        let y = w.gcd(&c);
        let z = exact_div(&w, &y);
        if !z.is_constant() {
            out.push((z, i * scale));
        }
        w = y;
        c = exact_div(&c, &w);
        i += 1;
    }
    if !c.is_constant() {
        sff_into(&pth_root(&c), scale * p, out);
    }
}

/// Distinct-degree factorization of a monic squarefree polynomial: returns
/// (product of all irreducible factors of degree d, d) pairs.
fn distinct_degree_split(f: &PolyModQ) -> Vec<(PolyModQ, usize)> {
    let q = f.modulus();
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = PolyModQ::x(q); // will hold x^(q^d) mod rest
    let mut d = 0usize;
    while rest.degree().map_or(false, |deg| deg >= 2 * (d + 1)) {
        d += 1;
        h = h.powmod(&BigUint::from(q), &rest);
        let g = h.sub(&PolyModQ::x(q)).gcd(&rest);
        if !g.is_constant() {
            out.push((g.clone(), d));
            rest = exact_div(&rest, &g);
            h = h.rem(&rest);
        }
    }
    if let Some(deg) = rest.degree() {
        if deg > 0 {
            // anything left is a single irreducible of full degree
            out.push((rest, deg));
        }
    }
    out
}

/// Cantor-Zassenhaus equal-degree splitting: f is monic squarefree, a product
/// of irreducibles all of degree d.
fn equal_degree_split(f: &PolyModQ, d: usize, rng: &mut ChaCha8Rng) -> Vec<PolyModQ> {
    let deg = f.degree().expect("nonzero");
    if deg == d {
        return vec![f.clone()];
    }
    let q = f.modulus();
    loop {
        let u = PolyModQ::new(q, (0..deg).map(|_| rng.gen_range(0..q)).collect());
        if u.is_constant() {
            continue;
        }
        // a shared factor with u already splits f
        let shared = u.gcd(f);
        let g = if !shared.is_constant() && shared.degree() < f.degree() {
            shared
        } else if q == 2 {
            // trace map u + u^2 + ... + u^(2^(d-1)) lands in F_2 componentwise
            let mut trace = u.clone();
            let mut cur = u.clone();
            for _ in 1..d {
                cur = cur.mul(&cur).rem(f);
                trace = trace.add(&cur);
            }
            trace.gcd(f)
        } else {
            // u^((q^d-1)/2) is +-1 in each component; subtract 1 and gcd
            let e = (BigUint::from(q).pow(d as u32) - BigUint::one()) / 2u32;
            u.powmod(&e, f).sub(&PolyModQ::one(q)).gcd(f)
        };
        if g.is_constant() || g.degree() == f.degree() {
            continue;
        }
        let rest = exact_div(f, &g);
        let mut left = equal_degree_split(&g, d, rng);
        left.extend(equal_degree_split(&rest, d, rng));
        return left;
    }
}
