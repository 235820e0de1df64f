//! Residue classes of (A mod 4, B mod 4) controlling irreducibility of
//! x -> x^(2^n) compositions of x^m + A x^(m-1) + B, plus a fixture of
//! residue classes with explicitly reducible representatives.
//!
//! For m = 2, 3, 4 membership in the class list below certifies that
//! F(x^(2^n)) is irreducible for every n >= 0. For m >= 5 the same lists,
//! chosen by the parity of m, are a conjectural pattern only; nothing in this
//! crate uses them to certify anything, they are merely reported.

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use crate::disc::Trinomial;
use crate::poly::PolyZ;

/// Classes (A mod 4, B mod 4) certifying irreducibility of all 2-power
/// compositions for even m (proven for m in {2, 4}).
pub const GAMMA_EVEN: [(u8, u8); 8] = [
    (0, 1),
    (0, 2),
    (1, 1),
    (1, 3),
    (2, 2),
    (2, 3),
    (3, 1),
    (3, 3),
];

/// Same, for odd m (proven for m = 3).
pub const GAMMA_ODD: [(u8, u8); 6] = [(0, 2), (1, 1), (1, 3), (2, 2), (3, 1), (3, 3)];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GammaStatus {
    /// m in {2, 3, 4}: membership is a theorem.
    Proven,
    /// m >= 5: the parity-based extension is conjectural.
    Conjectural,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GammaInfo {
    /// (A mod 4, B mod 4).
    pub pair: (u8, u8),
    pub in_gamma: bool,
    pub status: GammaStatus,
}

pub fn gamma_class(t: &Trinomial) -> GammaInfo {
    let four = BigInt::from(4);
    let to_u8 = |x: &BigInt| u8::try_from(x.mod_floor(&four)).unwrap();
    let pair = (to_u8(t.a()), to_u8(t.b()));
    let set: &[(u8, u8)] = if t.m() % 2 == 0 {
        &GAMMA_EVEN
    } else {
        &GAMMA_ODD
    };
    GammaInfo {
        pair,
        in_gamma: set.contains(&pair),
        status: if t.m() <= 4 {
            GammaStatus::Proven
        } else {
            GammaStatus::Conjectural
        },
    }
}

/// A residue class (A mod 4, B mod 4) outside the irreducible lists together
/// with a representative trinomial that factors, and its factorization in
/// y. Substituting y = x^k turns the identity into a factorization of every
/// power composition of the representative.
#[derive(Debug, Clone, Copy)]
pub struct ReducibleExample {
    pub m: u32,
    /// (A mod 4, B mod 4) of the representative.
    pub class_mod4: (u8, u8),
    pub a: i64,
    pub b: i64,
    /// Factors of y^m + A y^(m-1) + B, ascending coefficients in y.
    pub base_factors: &'static [&'static [i64]],
}

impl ReducibleExample {
    pub fn trinomial(&self) -> Trinomial {
        Trinomial::new(self.m, BigInt::from(self.a), BigInt::from(self.b)).unwrap()
    }

    pub fn base_factor_polys(&self) -> Vec<PolyZ> {
        self.base_factors.iter().map(|c| PolyZ::from_i64(c)).collect()
    }

    /// (F(x^k), [g_i(x^k)]) — the composed polynomial and its predicted
    /// factors.
    pub fn composed(&self, k: u32) -> (PolyZ, Vec<PolyZ>) {
        let f = self.trinomial().to_poly().expand_power(k);
        let parts = self
            .base_factor_polys()
            .iter()
            .map(|g| g.expand_power(k))
            .collect();
        (f, parts)
    }
}

pub const REDUCIBLE_EXAMPLES: [ReducibleExample; 14] = [
    // m = 2
    ReducibleExample { m: 2, class_mod4: (0, 3), a: 4, b: 3, base_factors: &[&[1, 1], &[3, 1]] },
    ReducibleExample { m: 2, class_mod4: (1, 2), a: 5, b: 6, base_factors: &[&[2, 1], &[3, 1]] },
    ReducibleExample { m: 2, class_mod4: (2, 1), a: 2, b: 1, base_factors: &[&[1, 1], &[1, 1]] },
    ReducibleExample { m: 2, class_mod4: (3, 2), a: 3, b: 2, base_factors: &[&[1, 1], &[2, 1]] },
    // m = 3
    ReducibleExample { m: 3, class_mod4: (0, 1), a: -4, b: 5, base_factors: &[&[1, 1], &[5, -5, 1]] },
    ReducibleExample { m: 3, class_mod4: (0, 3), a: -4, b: 3, base_factors: &[&[-1, 1], &[-3, -3, 1]] },
    ReducibleExample { m: 3, class_mod4: (1, 2), a: -3, b: 2, base_factors: &[&[-1, 1], &[-2, -2, 1]] },
    ReducibleExample { m: 3, class_mod4: (2, 1), a: -2, b: 1, base_factors: &[&[-1, 1], &[-1, -1, 1]] },
    ReducibleExample { m: 3, class_mod4: (2, 3), a: -2, b: 3, base_factors: &[&[1, 1], &[3, -3, 1]] },
    ReducibleExample { m: 3, class_mod4: (3, 2), a: -1, b: 2, base_factors: &[&[1, 1], &[2, -2, 1]] },
    // m = 4
    ReducibleExample { m: 4, class_mod4: (0, 3), a: 4, b: 3, base_factors: &[&[1, 1], &[3, -3, 3, 1]] },
    ReducibleExample { m: 4, class_mod4: (1, 2), a: -3, b: 2, base_factors: &[&[-1, 1], &[-2, -2, -2, 1]] },
    ReducibleExample { m: 4, class_mod4: (2, 1), a: 2, b: 1, base_factors: &[&[1, 1], &[1, -1, 1, 1]] },
    ReducibleExample { m: 4, class_mod4: (3, 2), a: 3, b: 2, base_factors: &[&[1, 1], &[2, -2, 2, 1]] },
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_shape() {
        assert_eq!(GAMMA_EVEN.len(), 8);
        assert_eq!(GAMMA_ODD.len(), 6);
        assert_eq!(REDUCIBLE_EXAMPLES.len(), 14);
        for m in [2u32, 3, 4] {
            let count = REDUCIBLE_EXAMPLES.iter().filter(|r| r.m == m).count();
            assert_eq!(count, if m == 3 { 6 } else { 4 });
        }
    }

    #[test]
    fn representatives_match_their_class_and_avoid_gamma() {
        for row in &REDUCIBLE_EXAMPLES {
            let info = gamma_class(&row.trinomial());
            assert_eq!(info.pair, row.class_mod4, "m={} a={} b={}", row.m, row.a, row.b);
            assert!(!info.in_gamma, "reducible representative inside the class list");
            assert_eq!(info.status, GammaStatus::Proven);
        }
    }

    #[test]
    fn base_factorizations_multiply_out() {
        for row in &REDUCIBLE_EXAMPLES {
            let product = row
                .base_factor_polys()
                .iter()
                .fold(PolyZ::one(), |acc, g| acc.mul(g));
            assert_eq!(
                product,
                row.trinomial().to_poly(),
                "m={} a={} b={}",
                row.m,
                row.a,
                row.b
            );
        }
    }

    #[test]
    fn composition_identity_for_small_k() {
        for row in &REDUCIBLE_EXAMPLES {
            for k in [1u32, 2, 3] {
                let (f, parts) = row.composed(k);
                let product = parts.iter().fold(PolyZ::one(), |acc, g| acc.mul(g));
                assert_eq!(product, f);
            }
        }
    }

    #[test]
    fn frozen_membership_examples() {
        let info = gamma_class(&Trinomial::new(2, 2.into(), 1.into()).unwrap());
        assert_eq!((info.pair, info.in_gamma, info.status), ((2, 1), false, GammaStatus::Proven));
        let info = gamma_class(&Trinomial::new(3, 5.into(), 7.into()).unwrap());
        assert_eq!((info.pair, info.in_gamma, info.status), ((1, 3), true, GammaStatus::Proven));
        let info = gamma_class(&Trinomial::new(6, 4.into(), 1.into()).unwrap());
        assert_eq!(
            (info.pair, info.in_gamma, info.status),
            ((0, 1), true, GammaStatus::Conjectural)
        );
        let info = gamma_class(&Trinomial::new(5, 1.into(), 2.into()).unwrap());
        assert_eq!(
            (info.pair, info.in_gamma, info.status),
            ((1, 2), false, GammaStatus::Conjectural)
        );
        // negative inputs reduce with floor semantics
        let info = gamma_class(&Trinomial::new(3, (-4).into(), 5.into()).unwrap());
        assert_eq!(info.pair, (0, 1));
    }
}
