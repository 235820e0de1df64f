//! Exact factorization over Z and irreducibility of power compositions.
//!
//! `factor_z` is a classical Zassenhaus factorization: squarefree (Yun)
//! decomposition over Z, reduction mod a good prime, Hensel lifting past the
//! Landau-Mignotte coefficient bound, and subset recombination of the lifted
//! factors. It is exact and complete but exponential in the number of modular
//! factors, so degrees are capped (`DEFAULT_DEGREE_CAP`); everything in this
//! crate that needs unconditional factorization stays far below the cap.
//!
//! `irreducible_power_compositional` decides irreducibility of F(x^(p^n)) for
//! a trinomial F without expanding whenever it can: residue-class
//! certificates (`gamma_class`) for p = 2, a Capelli-style lifting criterion
//! when the constant term is squarefree, and direct factorization as the
//! fallback for small degrees.

mod gamma;
mod hensel;

pub use gamma::{
    gamma_class, GammaInfo, GammaStatus, ReducibleExample, GAMMA_EVEN, GAMMA_ODD,
    REDUCIBLE_EXAMPLES,
};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::disc::PowerTrinomial;
use crate::error::Error;
use crate::integers::{factorize, is_squarefree, small_primes, Effort};
use crate::poly::{disc_resultant, factor_mod_q, gcd_z, PolyModQ, PolyZ};

/// Largest degree `factor_z` accepts. Subset recombination is exponential in
/// the number of modular factors, and nothing in this crate needs complete
/// factorizations beyond this.
pub const DEFAULT_DEGREE_CAP: usize = 24;

/// Complete factorization over Z: `value = unit * prod f_i^(e_i)` with every
/// `f_i` primitive, irreducible, positive leading coefficient, in canonical
/// order. The unit is the signed integer content.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorizationZ {
    #[serde(serialize_with = "crate::serde_utils::bigint_str")]
    pub unit: BigInt,
    pub factors: Vec<(PolyZ, u32)>,
}

impl FactorizationZ {
    pub fn recompose(&self) -> PolyZ {
        let mut out = PolyZ::constant(self.unit.clone());
        for (f, e) in &self.factors {
            out = out.mul(&f.pow(*e));
        }
        out
    }

    /// True when the primitive part is irreducible (exactly one factor, to
    /// the first power).
    pub fn primitive_is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

/// Factor a nonzero polynomial over Z with the default degree cap.
pub fn factor_z(f: &PolyZ) -> Result<FactorizationZ, Error> {
    factor_z_with_cap(f, DEFAULT_DEGREE_CAP)
}

pub fn factor_z_with_cap(f: &PolyZ, cap: usize) -> Result<FactorizationZ, Error> {
    let Some(deg) = f.degree() else {
        return Err(Error::invalid("cannot factor the zero polynomial"));
    };
    if deg > cap {
        return Err(Error::DegreeCapExceeded { degree: deg, cap });
    }
    let mut unit = f.content();
    if f.leading().unwrap().is_negative() {
        unit = -unit;
    }
    if deg == 0 {
        return Ok(FactorizationZ {
            unit,
            factors: Vec::new(),
        });
    }
    let pp = f.div_exact(&PolyZ::constant(unit.clone())).unwrap();
    let mut factors = Vec::new();
    for (g, mult) in squarefree_decomposition(&pp) {
        for irr in factor_squarefree(&g) {
            factors.push((irr, mult));
        }
    }
    factors.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    let out = FactorizationZ { unit, factors };
    debug_assert_eq!(out.recompose(), *f);
    Ok(out)
}

/// True when the primitive part of `f` is irreducible over Q.
pub fn is_irreducible_z(f: &PolyZ) -> Result<bool, Error> {
    match f.degree() {
        None | Some(0) => Err(Error::invalid(
            "irreducibility is only defined for polynomials of degree >= 1",
        )),
        Some(_) => Ok(factor_z(f)?.primitive_is_irreducible()),
    }
}

/// Yun's squarefree decomposition of a primitive polynomial with positive
/// leading coefficient: returns pairwise-coprime primitive squarefree parts
/// `(g_i, i)` with `f = prod g_i^i`.
fn squarefree_decomposition(f: &PolyZ) -> Vec<(PolyZ, u32)> {
    debug_assert!(f.content().is_one() && f.leading().unwrap().is_positive());
    let fp = f.derivative();
    let a0 = gcd_z(f, &fp);
    if a0.degree() == Some(0) {
        return vec![(f.clone(), 1)];
    }
    // All the divisions below are exact over Z by Gauss's lemma: the gcds are
    // primitive and divide in Q[x].
    let mut b = f.div_exact(&a0).unwrap();
    let mut d = fp.div_exact(&a0).unwrap().sub(&b.derivative());
    let mut out = Vec::new();
    let mut i = 1u32;
    while b.degree().unwrap() > 0 {
        let p = gcd_z(&b, &d);
        if p.degree().unwrap() > 0 {
            out.push((p.clone(), i));
        }
        b = b.div_exact(&p).unwrap();
        d = d.div_exact(&p).unwrap().sub(&b.derivative());
        i += 1;
    }
    debug_assert!(b.is_one());
    out
}

/// Factor a primitive squarefree polynomial (positive leading coefficient,
/// degree >= 1) into irreducibles.
fn factor_squarefree(g: &PolyZ) -> Vec<PolyZ> {
    let n = g.degree().unwrap();
    if n == 1 {
        return vec![g.clone()];
    }
    if g.is_monic() {
        return factor_monic_squarefree(g);
    }
    // Monicize by y = lc * x: h(y) = lc^(n-1) g(y/lc) is monic with the same
    // factor structure; map factors back through x -> lc * x and take
    // primitive parts.
    let lc = g.leading().unwrap().clone();
    let mut pow = BigInt::one();
    let mut h_coeffs = vec![BigInt::zero(); n + 1];
    h_coeffs[n] = BigInt::one();
    for i in (0..n).rev() {
        h_coeffs[i] = g.coeff(i) * &pow;
        pow *= &lc;
    }
    let h = PolyZ::new(h_coeffs);
    debug_assert!(h.is_monic());
    let mut out = Vec::new();
    for hf in factor_monic_squarefree(&h) {
        let mut pow = BigInt::one();
        let mapped = PolyZ::new(
            hf.coeffs()
                .iter()
                .map(|c| {
                    let v = c * &pow;
                    pow *= &lc;
                    v
                })
                .collect(),
        );
        out.push(mapped.primitive_part());
    }
    debug_assert_eq!(
        out.iter().fold(PolyZ::one(), |acc, f| acc.mul(f)),
        *g
    );
    out
}

fn factor_monic_squarefree(g: &PolyZ) -> Vec<PolyZ> {
    let n = g.degree().unwrap();
    debug_assert!(n >= 2 && g.is_monic());
    let disc = disc_resultant(g);
    debug_assert!(!disc.is_zero());
    let q = *small_primes()
        .iter()
        .find(|&&q| !(&disc % q).is_zero())
        .expect("some small prime keeps a squarefree polynomial squarefree");
    let mf = factor_mod_q(g, q);
    let factors: Vec<PolyModQ> = mf
        .factors
        .iter()
        .map(|(p, e)| {
            debug_assert_eq!(*e, 1);
            p.clone()
        })
        .collect();
    if factors.len() == 1 {
        return vec![g.clone()];
    }
    // Landau-Mignotte: coefficients of any monic factor are bounded by
    // 2^n * ||g||_2, so lifting past 2 * bound + 1 makes balanced lifts exact.
    let sqrt_l2 = BigInt::from(g.l2_norm_sq().sqrt());
    let bound = (BigInt::one() << n) * (sqrt_l2 + 1);
    let target = &bound * 2 + 1;
    let (lifted, m) = hensel::lift_factors(g, &factors, &target);
    recombine(g, lifted, &m)
}

/// Zassenhaus recombination: find the subsets of lifted modular factors whose
/// balanced products divide over Z.
fn recombine(g: &PolyZ, mut avail: Vec<PolyZ>, m: &BigInt) -> Vec<PolyZ> {
    use itertools::Itertools;

    let balance = |x: &BigInt| {
        use num_integer::Integer;
        let mut r = x.mod_floor(m);
        if &r * 2 > *m {
            r -= m;
        }
        r
    };
    let mut remaining = g.clone();
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= avail.len() {
        let mut found = true;
        while found {
            found = false;
            let r0 = remaining.coeff(0);
            'combos: for combo in (0..avail.len()).combinations(size) {
                // Constant-term screen: the constant term of a true monic
                // factor divides the constant term of the cofactor.
                if !r0.is_zero() {
                    let c0 = balance(
                        &combo
                            .iter()
                            .fold(BigInt::one(), |acc, &i| acc * avail[i].coeff(0) % m),
                    );
                    if c0.is_zero() || !(&r0 % &c0).is_zero() {
                        continue;
                    }
                }
                let mut prod = PolyZ::one();
                for &i in &combo {
                    prod = prod.mul(&avail[i]).reduce_mod_balanced_big(m);
                }
                if let Some(quot) = remaining.div_exact_monic(&prod) {
                    out.push(prod);
                    remaining = quot;
                    for &i in combo.iter().rev() {
                        avail.remove(i);
                    }
                    found = true;
                    break 'combos;
                }
            }
        }
        size += 1;
    }
    match remaining.degree().unwrap() {
        0 => debug_assert!(remaining.is_one()),
        _ => out.push(remaining),
    }
    out
}

/// Distinct integer roots of a monic polynomial, ascending. Factors the
/// constant term to enumerate candidate divisors, so it can fail with
/// `EffortExceeded` on adversarial constants.
pub fn rational_roots(f: &PolyZ, effort: Effort) -> Result<Vec<BigInt>, Error> {
    assert!(f.is_monic(), "rational_roots expects a monic polynomial");
    let mut f = f.clone();
    let mut roots = Vec::new();
    while f.coeff(0).is_zero() && f.degree().unwrap() > 0 {
        roots.push(BigInt::zero());
        f = f.div_exact_monic(&PolyZ::x()).unwrap();
    }
    if f.degree().unwrap() == 0 {
        roots.dedup();
        return Ok(roots);
    }
    let c0 = f.coeff(0);
    let mut divisors = vec![BigInt::one()];
    for pp in factorize(&c0, effort)?.factors {
        let mut next = Vec::with_capacity(divisors.len() * (pp.exponent as usize + 1));
        let mut power = BigInt::one();
        for _ in 0..=pp.exponent {
            for d in &divisors {
                next.push(d * &power);
            }
            power *= &pp.prime;
        }
        divisors = next;
    }
    for d in divisors {
        if f.eval(&d).is_zero() {
            roots.push(d.clone());
        }
        let neg = -d;
        if f.eval(&neg).is_zero() {
            roots.push(neg);
        }
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum IrreducibilityMethod {
    /// Residue-class certificate on (A mod 4, B mod 4) for p = 2.
    GammaClass,
    /// Capelli-style lift: irreducible base with squarefree constant term of
    /// absolute value >= 2 stays irreducible under x -> x^k.
    CapelliLift,
    /// Complete factorization of the polynomial (or of its base when the
    /// expansion is out of range but the base already splits).
    DirectFactorization,
    /// Reducibility witnessed through an integer root of the base.
    RationalRoot,
}

#[derive(Debug, Clone, Serialize)]
pub enum IrreducibilityVerdict {
    Irreducible {
        method: IrreducibilityMethod,
    },
    Reducible {
        /// A nontrivial monic factor of the expanded polynomial.
        witness: PolyZ,
        /// Complete factorization of the expanded polynomial when its degree
        /// permitted computing one.
        factorization: Option<FactorizationZ>,
        method: IrreducibilityMethod,
    },
    Unknown {
        reason: String,
    },
}

impl IrreducibilityVerdict {
    /// Some(true)/Some(false) when decided, None when unknown.
    pub fn decided(&self) -> Option<bool> {
        match self {
            IrreducibilityVerdict::Irreducible { .. } => Some(true),
            IrreducibilityVerdict::Reducible { .. } => Some(false),
            IrreducibilityVerdict::Unknown { .. } => None,
        }
    }
}

/// Decide irreducibility of F(x^(p^n)) over Q.
///
/// Order of attack: proven residue-class certificates (p = 2, base degree 2,
/// 3 or 4), then factorization of the base (degree m, almost always tiny) to
/// settle reducible cases and feed the Capelli criterion, then direct
/// factorization of the expansion while its degree fits under the cap.
pub fn irreducible_power_compositional(
    pt: &PowerTrinomial,
    effort: Effort,
) -> IrreducibilityVerdict {
    irreducible_power_compositional_with_cap(pt, effort, DEFAULT_DEGREE_CAP)
}

pub fn irreducible_power_compositional_with_cap(
    pt: &PowerTrinomial,
    effort: Effort,
    cap: usize,
) -> IrreducibilityVerdict {
    let base = pt.base();
    let m = base.m() as usize;
    let n = pt.n();
    let expanded_degree = pt.expanded_degree() as usize;

    let gamma = gamma_class(base);
    if pt.p() == 2 && gamma.status == GammaStatus::Proven && gamma.in_gamma {
        return IrreducibilityVerdict::Irreducible {
            method: IrreducibilityMethod::GammaClass,
        };
    }

    if m > cap {
        return IrreducibilityVerdict::Unknown {
            reason: format!("base degree {m} exceeds the factorization cap {cap}"),
        };
    }
    let base_fac = factor_z_with_cap(&base.to_poly(), cap).expect("degree checked");
    if !base_fac.primitive_is_irreducible() {
        if n == 0 {
            let witness = base_fac.factors[0].0.clone();
            return IrreducibilityVerdict::Reducible {
                witness,
                factorization: Some(base_fac),
                method: IrreducibilityMethod::DirectFactorization,
            };
        }
        if expanded_degree <= cap {
            let full = factor_z_with_cap(&pt.to_poly(), cap).expect("degree checked");
            return IrreducibilityVerdict::Reducible {
                witness: full.factors[0].0.clone(),
                factorization: Some(full),
                method: IrreducibilityMethod::DirectFactorization,
            };
        }
        // Expansion out of range, but composing the base factorization with
        // x^(p^n) still witnesses reducibility.
        let bf = &base_fac.factors[0].0;
        let method = if bf.degree() == Some(1) {
            IrreducibilityMethod::RationalRoot
        } else {
            IrreducibilityMethod::DirectFactorization
        };
        return IrreducibilityVerdict::Reducible {
            witness: bf.expand_power(pt.expansion() as u32),
            factorization: None,
            method,
        };
    }
    if n == 0 {
        return IrreducibilityVerdict::Irreducible {
            method: IrreducibilityMethod::DirectFactorization,
        };
    }

    // Base is irreducible and n >= 1.
    let mut capelli_note = None;
    if base.b().abs() >= BigInt::from(2) {
        match is_squarefree(base.b(), effort) {
            Ok(true) => {
                return IrreducibilityVerdict::Irreducible {
                    method: IrreducibilityMethod::CapelliLift,
                }
            }
            Ok(false) => {}
            Err(e) => capelli_note = Some(format!("squarefreeness of B undecided: {e}")),
        }
    }
    if expanded_degree <= cap {
        let full = factor_z_with_cap(&pt.to_poly(), cap).expect("degree checked");
        if full.primitive_is_irreducible() {
            return IrreducibilityVerdict::Irreducible {
                method: IrreducibilityMethod::DirectFactorization,
            };
        }
        return IrreducibilityVerdict::Reducible {
            witness: full.factors[0].0.clone(),
            factorization: Some(full),
            method: IrreducibilityMethod::DirectFactorization,
        };
    }
    let mut reason = format!(
        "degree {expanded_degree} exceeds the factorization cap {cap} and no irreducibility certificate applies"
    );
    if let Some(note) = capelli_note {
        reason = format!("{reason}; {note}");
    }
    if gamma.in_gamma && gamma.status == GammaStatus::Conjectural && pt.p() == 2 {
        reason = format!(
            "{reason}; (A mod 4, B mod 4) matches the conjectural irreducible residue pattern for m = {}",
            base.m()
        );
    }
    IrreducibilityVerdict::Unknown { reason }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disc::Trinomial;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p(coeffs: &[i64]) -> PolyZ {
        PolyZ::from_i64(coeffs)
    }

    fn factors_of(f: &PolyZ) -> Vec<(PolyZ, u32)> {
        factor_z(f).unwrap().factors
    }

    #[test]
    fn frozen_factorizations() {
        // x^4 + 3x^3 + 2 = (x + 1)(x^3 + 2x^2 - 2x + 2)
        assert_eq!(
            factors_of(&p(&[2, 0, 0, 3, 1])),
            vec![(p(&[1, 1]), 1), (p(&[2, -2, 2, 1]), 1)]
        );
        // x^6 + 2x^3 + 1 = (x + 1)^2 (x^2 - x + 1)^2
        assert_eq!(
            factors_of(&p(&[1, 0, 0, 2, 0, 0, 1])),
            vec![(p(&[1, 1]), 2), (p(&[1, -1, 1]), 2)]
        );
        // x^2 - 5 is irreducible; x^2 - 4 = (x - 2)(x + 2)
        assert_eq!(factors_of(&p(&[-5, 0, 1])), vec![(p(&[-5, 0, 1]), 1)]);
        assert_eq!(
            factors_of(&p(&[-4, 0, 1])),
            vec![(p(&[-2, 1]), 1), (p(&[2, 1]), 1)]
        );
        // Swinnerton-Dyer style: x^4 - 10x^2 + 1 is irreducible but splits
        // mod every prime, forcing real recombination work.
        assert_eq!(
            factors_of(&p(&[1, 0, -10, 0, 1])),
            vec![(p(&[1, 0, -10, 0, 1]), 1)]
        );
    }

    #[test]
    fn units_and_content() {
        let f = p(&[-6, 0, 6]); // -6 + 6x^2 = 6(x-1)(x+1)
        let fac = factor_z(&f).unwrap();
        assert_eq!(fac.unit, BigInt::from(6));
        assert_eq!(fac.factors, vec![(p(&[-1, 1]), 1), (p(&[1, 1]), 1)]);
        let g = p(&[4, -4]); // -4(x - 1)
        let fac = factor_z(&g).unwrap();
        assert_eq!(fac.unit, BigInt::from(-4));
        assert_eq!(fac.factors, vec![(p(&[-1, 1]), 1)]);
        assert_eq!(fac.recompose(), g);
        // pure constant
        let fac = factor_z(&p(&[-7])).unwrap();
        assert_eq!(fac.unit, BigInt::from(-7));
        assert!(fac.factors.is_empty());
    }

    #[test]
    fn non_monic_primitive_factorization() {
        // (2x + 1)(3x - 5) = 6x^2 - 7x - 5
        let fac = factor_z(&p(&[-5, -7, 6])).unwrap();
        assert_eq!(fac.unit, BigInt::one());
        assert_eq!(fac.factors, vec![(p(&[-5, 3]), 1), (p(&[1, 2]), 1)]);
        // (2x + 1)^2 (x - 3)
        let f = p(&[1, 2]).pow(2).mul(&p(&[-3, 1]));
        let fac = factor_z(&f).unwrap();
        assert_eq!(fac.factors, vec![(p(&[-3, 1]), 1), (p(&[1, 2]), 2)]);
    }

    #[test]
    fn random_products_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(71);
        let pool: Vec<PolyZ> = vec![
            p(&[1, 1]),
            p(&[-1, 1]),
            p(&[3, 1]),
            p(&[1, 0, 1]),
            p(&[-2, 0, 1]),
            p(&[1, 1, 1]),
            p(&[1, -1, 0, 1]),
            p(&[2, 0, 1, 1]),
        ];
        for _ in 0..40 {
            let mut f = PolyZ::one();
            let mut degree = 0;
            for _ in 0..rng.gen_range(1..=4) {
                let g = &pool[rng.gen_range(0..pool.len())];
                let e = rng.gen_range(1..=2u32);
                degree += g.degree().unwrap() * e as usize;
                if degree > DEFAULT_DEGREE_CAP {
                    break;
                }
                f = f.mul(&g.pow(e));
            }
            if f.degree().unwrap() == 0 {
                continue;
            }
            let fac = factor_z(&f).unwrap();
            assert_eq!(fac.recompose(), f, "roundtrip failed for {f}");
            for (irr, _) in &fac.factors {
                assert!(is_irreducible_z(irr).unwrap(), "{irr} not irreducible");
            }
        }
    }

    #[test]
    fn degree_cap_is_enforced() {
        let f = PolyZ::monomial(BigInt::one(), DEFAULT_DEGREE_CAP + 1).add(&PolyZ::one());
        match factor_z(&f) {
            Err(Error::DegreeCapExceeded { degree, cap }) => {
                assert_eq!(degree, DEFAULT_DEGREE_CAP + 1);
                assert_eq!(cap, DEFAULT_DEGREE_CAP);
            }
            other => panic!("expected DegreeCapExceeded, got {other:?}"),
        }
        assert!(factor_z_with_cap(&f, 32).is_ok());
    }

    #[test]
    fn rational_roots_examples() {
        let f = p(&[-6, 11, -6, 1]); // (x-1)(x-2)(x-3)
        let roots = rational_roots(&f, Effort::default()).unwrap();
        assert_eq!(roots, vec![1.into(), 2.into(), 3.into()]);
        // x^2 (x + 5)
        let f = p(&[0, 0, 5, 1]);
        let roots = rational_roots(&f, Effort::default()).unwrap();
        assert_eq!(roots, vec![BigInt::from(-5), BigInt::zero()]);
        // no rational roots
        let f = p(&[1, 1, 1]);
        assert!(rational_roots(&f, Effort::default()).unwrap().is_empty());
    }

    fn pt(m: u32, a: i64, b: i64, pp: u64, n: u32) -> PowerTrinomial {
        PowerTrinomial::new(
            Trinomial::new(m, BigInt::from(a), BigInt::from(b)).unwrap(),
            pp,
            n,
        )
        .unwrap()
    }

    #[test]
    fn cascade_gamma_path() {
        // (A, B) = (5, 7): (1, 3) is a proven irreducible class for m = 2.
        let v = irreducible_power_compositional(&pt(2, 5, 7, 2, 3), Effort::default());
        match v {
            IrreducibilityVerdict::Irreducible { method } => {
                assert_eq!(method, IrreducibilityMethod::GammaClass)
            }
            other => panic!("expected gamma certificate, got {other:?}"),
        }
    }

    #[test]
    fn cascade_capelli_path() {
        // B = 7 squarefree, base x^3 + x^2 + 7 irreducible, p = 5 so the
        // gamma route does not apply; degree 375 is far over the cap.
        let v = irreducible_power_compositional(&pt(3, 1, 7, 5, 3), Effort::default());
        match v {
            IrreducibilityVerdict::Irreducible { method } => {
                assert_eq!(method, IrreducibilityMethod::CapelliLift)
            }
            other => panic!("expected capelli certificate, got {other:?}"),
        }
    }

    #[test]
    fn cascade_direct_and_reducible_paths() {
        // x^2 + 2x + 1 composed with x^3: reducible, full factorization fits.
        let v = irreducible_power_compositional(&pt(2, 2, 1, 3, 1), Effort::default());
        match v {
            IrreducibilityVerdict::Reducible {
                witness,
                factorization,
                method,
            } => {
                assert_eq!(method, IrreducibilityMethod::DirectFactorization);
                assert_eq!(witness, p(&[1, 1]));
                let fac = factorization.unwrap();
                // x^6 + 2x^3 + 1 = (x+1)^2 (x^2-x+1)^2
                assert_eq!(
                    fac.factors,
                    vec![(p(&[1, 1]), 2), (p(&[1, -1, 1]), 2)]
                );
            }
            other => panic!("expected reducible with factorization, got {other:?}"),
        }

        // Same base, but p^n too large to expand: witness composed from the
        // linear base factor.
        let v = irreducible_power_compositional(&pt(2, 2, 1, 3, 4), Effort::default());
        match v {
            IrreducibilityVerdict::Reducible {
                witness,
                factorization,
                method,
            } => {
                assert_eq!(method, IrreducibilityMethod::RationalRoot);
                assert!(factorization.is_none());
                let mut expect = vec![BigInt::zero(); 82];
                expect[0] = BigInt::one();
                expect[81] = BigInt::one();
                assert_eq!(witness, PolyZ::new(expect)); // x^81 + 1
            }
            other => panic!("expected composed witness, got {other:?}"),
        }

        // Base x^2 + 4 irreducible, B = 4 not squarefree, and the
        // composition splits: x^4 + 4 = (x^2 - 2x + 2)(x^2 + 2x + 2).
        let v = irreducible_power_compositional(&pt(2, 0, 4, 2, 1), Effort::default());
        match v {
            IrreducibilityVerdict::Reducible {
                factorization,
                method,
                ..
            } => {
                assert_eq!(method, IrreducibilityMethod::DirectFactorization);
                assert_eq!(
                    factorization.unwrap().factors,
                    vec![(p(&[2, -2, 1]), 1), (p(&[2, 2, 1]), 1)]
                );
            }
            other => panic!("expected reducible split, got {other:?}"),
        }
    }

    #[test]
    fn cascade_unknown_when_nothing_applies() {
        // B = 4 is not squarefree and (1, 0) is not in the proven class list,
        // so degree 64 has no certificate either way.
        let v = irreducible_power_compositional(&pt(2, 1, 4, 2, 5), Effort::default());
        match v {
            IrreducibilityVerdict::Unknown { reason } => {
                assert!(reason.contains("exceeds the factorization cap"), "{reason}");
            }
            other => panic!("expected unknown, got {other:?}"),
        }
    }

    #[test]
    fn cascade_n_zero_answers_from_base() {
        let v = irreducible_power_compositional(&pt(3, 1, 3, 3, 0), Effort::default());
        assert_eq!(v.decided(), Some(true));
        let v = irreducible_power_compositional(&pt(2, 2, 1, 3, 0), Effort::default());
        match v {
            IrreducibilityVerdict::Reducible { witness, .. } => assert_eq!(witness, p(&[1, 1])),
            other => panic!("expected reducible base, got {other:?}"),
        }
    }
}
