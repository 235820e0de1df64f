//! Linear Hensel lifting of modular factorizations.
//!
//! Everything here works with monic polynomials: the callers in `zfactor`
//! reduce the general case to monic squarefree inputs first. Lifted
//! polynomials carry nonnegative coefficients below the current modulus;
//! callers balance them into (-M/2, M/2] when they need candidate factors
//! over Z.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::poly::{PolyModQ, PolyZ};

fn reduce_nonneg(f: &PolyZ, modulus: &BigInt) -> PolyZ {
    use num_integer::Integer;
    PolyZ::new(f.coeffs().iter().map(|c| c.mod_floor(modulus)).collect())
}

/// Divide every coefficient by `m`, which must divide exactly.
fn div_coeffs_exact(f: &PolyZ, m: &BigInt) -> PolyZ {
    PolyZ::new(
        f.coeffs()
            .iter()
            .map(|c| {
                debug_assert!((c % m).is_zero());
                c / m
            })
            .collect(),
    )
}

/// Lift a coprime monic split f = g0 h0 (mod q) to f = G H (mod M) where M is
/// the first power q^e >= `target`. Returns (G, H, M); G and H are monic with
/// coefficients in [0, M).
pub(crate) fn lift_pair(
    f: &PolyZ,
    g0: &PolyModQ,
    h0: &PolyModQ,
    target: &BigInt,
) -> (PolyZ, PolyZ, BigInt) {
    let q = g0.modulus();
    debug_assert!(g0.is_monic() && h0.is_monic() && f.is_monic());
    let (one, s, t) = g0.xgcd(h0);
    assert!(one.is_one(), "lift_pair requires coprime factors mod q");

    let mut g = g0.lift();
    let mut h = h0.lift();
    let q_big = BigInt::from(q);
    let mut m = q_big.clone();
    while &m < target {
        // u = (f - G H) / q^i reduced mod q
        let diff = f.sub(&g.mul(&h));
        let u = div_coeffs_exact(&diff, &m).reduce_mod(q);
        // t u = w g0 + g~ with deg g~ < deg g0; then h~ = s u + w h0 satisfies
        // g~ h0 + h~ g0 = u in F_q[x], so the correction closes the gap mod q^(i+1).
        let (w, g_tilde) = t.mul(&u).divrem(g0);
        let h_tilde = s.mul(&u).add(&w.mul(h0));
        g = g.add(&g_tilde.lift().mul_scalar(&m));
        h = h.add(&h_tilde.lift().mul_scalar(&m));
        m *= &q_big;
        debug_assert!(reduce_nonneg(&f.sub(&g.mul(&h)), &m).is_zero());
    }
    (g, h, m)
}

/// Lift all factors of a monic squarefree f from mod q to mod M (the first
/// power q^e >= `target`) by balanced recursive pairwise splitting. The input
/// factors must be monic, distinct and irreducible mod q with product f.
/// Returns the lifted factors (coefficients in [0, M)) and M itself.
pub(crate) fn lift_factors(
    f: &PolyZ,
    factors: &[PolyModQ],
    target: &BigInt,
) -> (Vec<PolyZ>, BigInt) {
    assert!(!factors.is_empty());
    let q = factors[0].modulus();
    // Determine the final modulus once so every branch lifts to the same M.
    let q_big = BigInt::from(q);
    let mut m = q_big.clone();
    while &m < target {
        m *= &q_big;
    }
    let mut out = Vec::with_capacity(factors.len());
    lift_tree(&reduce_nonneg(f, &m), factors, &m, &mut out);
    (out, m)
}

fn lift_tree(f: &PolyZ, factors: &[PolyModQ], m: &BigInt, out: &mut Vec<PolyZ>) {
    if factors.len() == 1 {
        out.push(f.clone());
        return;
    }
    let (left, right) = factors.split_at(factors.len() / 2);
    let q = factors[0].modulus();
    let prod = |fs: &[PolyModQ]| {
        fs.iter()
            .fold(PolyModQ::one(q), |acc, p| acc.mul(p))
    };
    let (g, h, lifted_m) = lift_pair(f, &prod(left), &prod(right), m);
    debug_assert_eq!(&lifted_m, m);
    lift_tree(&g, left, m, out);
    lift_tree(&h, right, m, out);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::factor_mod_q;

    #[test]
    fn pair_lift_recovers_true_factors() {
        // f = (x^2 + 13x + 1)(x^3 - 7x + 3), factored mod 5 and lifted far
        // enough that the balanced lifts are exactly the true factors.
        let a = PolyZ::from_i64(&[1, 13, 1]);
        let b = PolyZ::from_i64(&[3, -7, 0, 1]);
        let f = a.mul(&b);
        let g0 = a.reduce_mod(5);
        let h0 = b.reduce_mod(5);
        let target = BigInt::from(100_000);
        let (g, h, m) = lift_pair(&f, &g0, &h0, &target);
        assert_eq!(m, BigInt::from(5u64.pow(8)));
        let balance = |p: &PolyZ| p.reduce_mod_balanced_big(&m);
        assert_eq!(balance(&g), a);
        assert_eq!(balance(&h), b);
    }

    #[test]
    fn multifactor_lift_recovers_linear_factors() {
        // f = (x-1)(x-2)(x-3)(x-4)(x-5); mod 7 it splits into distinct linears.
        let mut f = PolyZ::one();
        for r in 1..=5i64 {
            f = f.mul(&PolyZ::from_i64(&[-r, 1]));
        }
        let mf = factor_mod_q(&f, 7);
        let factors: Vec<PolyModQ> = mf.factors.iter().map(|(p, e)| {
            assert_eq!(*e, 1);
            p.clone()
        }).collect();
        let (lifted, m) = lift_factors(&f, &factors, &BigInt::from(10_000));
        assert_eq!(m, BigInt::from(7u64.pow(5)));
        let mut roots: Vec<BigInt> = lifted
            .iter()
            .map(|g| {
                let g = g.reduce_mod_balanced_big(&m);
                assert_eq!(g.degree(), Some(1));
                -g.coeff(0)
            })
            .collect();
        roots.sort();
        let expect: Vec<BigInt> = (1..=5).map(BigInt::from).collect();
        assert_eq!(roots, expect);
    }
}
