//! Monogenicity of trinomials and their power compositions.
//!
//! A monic irreducible f with root theta and K = Q(theta) is monogenic when
//! Z_K = Z[theta]. Since disc(f) = [Z_K : Z[theta]]^2 disc(K), only primes q
//! with q^2 | disc(f) can divide the index, and each one is tested with
//! either Dedekind's index criterion (factor f mod q, lift, inspect a gcd) or
//! the closed-form characterization for trinomials x^N + A x^M + B (five
//! residue statements, no factorization of f required). Both are implemented
//! independently and can be cross-checked against each other.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::disc::{disc_power_factored, PowerTrinomial, Trinomial};
use crate::error::Error;
use crate::integers::{
    is_prime_u64, is_squarefree, mod_u64, neg_mod, powmod_u64, Effort, IntFactorization,
};
use crate::poly::{disc_resultant, factor_mod_q, ModFactorization, PolyModQ, PolyZ, MAX_DEGREE};
use crate::zfactor::{
    factor_z, irreducible_power_compositional, IrreducibilityVerdict,
};

/// Evidence from one run of Dedekind's criterion at a prime q.
#[derive(Debug, Clone, Serialize)]
pub struct DedekindTrace {
    pub q: u64,
    /// Factorization of f mod q.
    pub factorization: ModFactorization,
    /// The lift of the radical of f mod q that was used.
    pub g: PolyZ,
    /// The lift of (f mod q) / radical that was used.
    pub h: PolyZ,
    /// (g h - f) / q, exact over Z.
    pub f_quot: PolyZ,
    /// gcd(f_quot, g, h) mod q; the criterion passes iff this is 1.
    pub gcd: PolyModQ,
    pub passes: bool,
}

/// Dedekind's index criterion at q with the canonical nonnegative lifts:
/// passes iff q does not divide [Z_K : Z[theta]].
///
/// Meaningful when f is the minimal polynomial of theta; the pass flag does
/// not depend on the choice of lifts.
pub fn dedekind_prime_check(f: &PolyZ, q: u64) -> DedekindTrace {
    dedekind_with_lifts(f, q, |tau| tau.lift())
}

/// Same criterion, but with seeded random monic lifts. Exists so tests can
/// confirm the pass flag is lift-independent.
pub fn dedekind_prime_check_randomized(f: &PolyZ, q: u64, seed: u64) -> DedekindTrace {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    dedekind_with_lifts(f, q, move |tau| {
        let deg = tau.degree().expect("factors are nonzero");
        let noise = PolyZ::new(
            (0..deg)
                .map(|_| BigInt::from(rng.gen_range(0..4u32)) * q)
                .collect(),
        );
        tau.lift().add(&noise)
    })
}

fn dedekind_with_lifts(
    f: &PolyZ,
    q: u64,
    mut lift: impl FnMut(&PolyModQ) -> PolyZ,
) -> DedekindTrace {
    assert!(f.is_monic(), "Dedekind's criterion needs a monic polynomial");
    let mf = factor_mod_q(f, q);
    let mut g_bar = PolyModQ::one(q);
    let mut h_bar = PolyModQ::one(q);
    for (tau, e) in &mf.factors {
        g_bar = g_bar.mul(tau);
        for _ in 1..*e {
            h_bar = h_bar.mul(tau);
        }
    }
    let mut g = PolyZ::one();
    for (tau, _) in &mf.factors {
        g = g.mul(&lift(tau));
    }
    let h = lift(&h_bar);
    let diff = g.mul(&h).sub(f);
    let f_quot = div_coeffs_exact(&diff, q);
    let gcd = f_quot.reduce_mod(q).gcd(&g_bar).gcd(&h_bar);
    let passes = gcd.is_one();
    DedekindTrace {
        q,
        factorization: mf,
        g,
        h,
        f_quot,
        gcd,
        passes,
    }
}

fn div_coeffs_exact(f: &PolyZ, q: u64) -> PolyZ {
    let qb = BigInt::from(q);
    PolyZ::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let (quot, rem) = c.div_rem(&qb);
                debug_assert!(rem.is_zero(), "coefficient not divisible by q");
                quot
            })
            .collect(),
    )
}

/// Evidence from one evaluation of the closed-form trinomial index criterion
/// at a prime q, for f = x^N + A x^M + B with d0 = gcd(M, N), N = N1 d0,
/// M = M1 d0.
///
/// Exactly one of five statements applies, selected by the pattern of
/// divisibilities (q | A?, q | B?, q | M?); `case` records which. The
/// auxiliary values are the ones the applicable statement inspects; residues
/// are stored instead of the (potentially enormous) exact integers they come
/// from.
#[derive(Debug, Clone, Serialize)]
pub struct JksTrace {
    pub q: u64,
    pub big_n: u64,
    pub big_m: u64,
    pub d0: u64,
    pub n1: u64,
    pub m1: u64,
    /// 1..=5.
    pub case: u8,
    /// Case 2: j with q^j || N.
    pub j: Option<u32>,
    /// Case 3: l with q^l || N - M.
    pub ell: Option<u32>,
    /// Case 2: A2 = A / q.
    #[serde(serialize_with = "crate::serde_utils::opt_bigint_str")]
    pub a2: Option<BigInt>,
    /// Case 3: B2 = B / q.
    #[serde(serialize_with = "crate::serde_utils::opt_bigint_str")]
    pub b2: Option<BigInt>,
    /// Case 2: B1 mod q where B1 = (B + (-B)^(q^j)) / q.
    pub b1_mod_q: Option<u64>,
    /// Case 3: A1 mod q where A1 = (A + (-A)^(q^l)) / q.
    pub a1_mod_q: Option<u64>,
    /// Case 4: k = min(v_q(N), v_q(M)), N = s' q^k, M = s q^k.
    pub k: Option<u32>,
    pub s: Option<u64>,
    pub s_prime: Option<u64>,
    pub passes: bool,
}

/// The closed-form index criterion for f = x^N + A x^M + B at a prime q:
/// passes iff q does not divide [Z_K : Z[theta]].
///
/// Meaningful when f is irreducible and q^2 divides disc(f); in that
/// situation it agrees with `dedekind_prime_check` on the expanded
/// polynomial. Everything is evaluated modulo q or q^2, so N may be large
/// (bounded by the same degree limit as dense polynomials, since case 4
/// materializes polynomials of degree M).
pub fn jks_prime_check(
    big_n: u64,
    big_m: u64,
    a: &BigInt,
    b: &BigInt,
    q: u64,
) -> Result<JksTrace, Error> {
    assert!(is_prime_u64(q), "q must be prime");
    if big_m == 0 || big_m >= big_n {
        return Err(Error::invalid("need 0 < M < N"));
    }
    if big_n > MAX_DEGREE as u64 {
        return Err(Error::invalid(format!("degree N = {big_n} is out of range")));
    }
    if b.is_zero() {
        return Err(Error::invalid("constant term B must be nonzero"));
    }
    let d0 = big_n.gcd(&big_m);
    let n1 = big_n / d0;
    let m1 = big_m / d0;
    let qb = BigInt::from(q);
    let q2 = &qb * &qb;
    let q_div_a = a.mod_floor(&qb).is_zero();
    let q_div_b = b.mod_floor(&qb).is_zero();

    let mut trace = JksTrace {
        q,
        big_n,
        big_m,
        d0,
        n1,
        m1,
        case: 0,
        j: None,
        ell: None,
        a2: None,
        b2: None,
        b1_mod_q: None,
        a1_mod_q: None,
        k: None,
        s: None,
        s_prime: None,
        passes: false,
    };

    match (q_div_a, q_div_b) {
        (true, true) => {
            trace.case = 1;
            trace.passes = !b.mod_floor(&q2).is_zero();
        }
        (true, false) => {
            trace.case = 2;
            let j = vq_u64(big_n, q);
            let a2 = a / &qb;
            let b1_mod = fermat_quotient_mod_q(b, q.pow(j), q);
            let a2m = mod_u64(&a2, q);
            let cond_direct = a2m == 0 && b1_mod != 0;
            // q | A2 ((-B)^M1 A2^N1 - (-B1)^N1) ?
            let lhs = powmod_u64(neg_mod(b, q), m1, q) * powmod_u64(a2m, n1, q) % q;
            let rhs = powmod_u64((q - b1_mod) % q, n1, q);
            let cond_unit = a2m != 0 && lhs != rhs;
            trace.j = Some(j);
            trace.a2 = Some(a2);
            trace.b1_mod_q = Some(b1_mod);
            trace.passes = cond_direct || cond_unit;
        }
        (false, true) => {
            trace.case = 3;
            let ell = vq_u64(big_n - big_m, q);
            let a1_mod = fermat_quotient_mod_q(a, q.pow(ell), q);
            let b2 = b / &qb;
            let b2m = mod_u64(&b2, q);
            let cond_direct = a1_mod == 0 && b2m != 0;
            // q | A1 B2^(M-1) ((-A)^M1 A1^(N1-M1) - (-B2)^(N1-M1)) ?
            let inner = (powmod_u64(neg_mod(a, q), m1, q)
                * powmod_u64(a1_mod, n1 - m1, q)
                + q
                - powmod_u64((q - b2m) % q, n1 - m1, q))
                % q;
            let product = a1_mod as u128 * powmod_u64(b2m, big_m - 1, q) as u128 % q as u128
                * inner as u128
                % q as u128;
            let cond_unit = product != 0;
            trace.ell = Some(ell);
            trace.b2 = Some(b2);
            trace.a1_mod_q = Some(a1_mod);
            trace.passes = cond_direct || cond_unit;
        }
        (false, false) if big_m % q == 0 => {
            trace.case = 4;
            let k = vq_u64(big_n, q).min(vq_u64(big_m, q));
            let qk = q.pow(k);
            let s = big_m / qk;
            let s_prime = big_n / qk;
            trace.k = Some(k);
            trace.s = Some(s);
            trace.s_prime = Some(s_prime);
            if k == 0 {
                // The second polynomial of the statement degenerates to 0,
                // which is never coprime to the first; q^2 cannot divide the
                // discriminant in this configuration, so the branch is inert.
                trace.passes = false;
            } else {
                let mut coeffs1 = vec![0u64; s_prime as usize + 1];
                coeffs1[0] = b.mod_floor(&qb).try_into().unwrap();
                coeffs1[s as usize] = a.mod_floor(&qb).try_into().unwrap();
                coeffs1[s_prime as usize] = 1 % q;
                let poly1 = PolyModQ::new(q, coeffs1);
                let poly2 = case4_companion(s, k, a, b, q);
                trace.passes = poly1.gcd(&poly2).is_one();
            }
        }
        (false, false) => {
            trace.case = 5;
            // q^2 | B^(N1-M1) N1^N1 - (-1)^M1 A^N1 M1^M1 (M1-N1)^(N1-M1) ?
            let term1 = b.mod_floor(&q2).modpow(&BigInt::from(n1 - m1), &q2)
                * BigInt::from(n1).modpow(&BigInt::from(n1), &q2);
            let mut term2 = a.mod_floor(&q2).modpow(&BigInt::from(n1), &q2)
                * BigInt::from(m1).modpow(&BigInt::from(m1), &q2)
                * BigInt::from(m1 as i128 - n1 as i128)
                    .mod_floor(&q2)
                    .modpow(&BigInt::from(n1 - m1), &q2);
            if m1 % 2 == 1 {
                term2 = -term2;
            }
            trace.passes = !(term1 - term2).mod_floor(&q2).is_zero();
        }
    }
    Ok(trace)
}

/// ((x + (-x)^e) / q) mod q, where e is a power of q so the numerator is
/// divisible by q. Evaluated mod q^2, so x and e may be large.
fn fermat_quotient_mod_q(x: &BigInt, e: u64, q: u64) -> u64 {
    let q2 = BigInt::from(q) * q;
    let pw = (-x).mod_floor(&q2).modpow(&BigInt::from(e), &q2);
    let num = (x + pw).mod_floor(&q2);
    let (quot, rem) = num.div_rem(&BigInt::from(q));
    debug_assert!(rem.is_zero());
    quot.try_into().unwrap()
}

/// The second polynomial of statement 4 reduced mod q, for k >= 1:
/// (A x^(s q^k) + B + (-A x^s - B)^(q^k)) / q.
///
/// Expanding the power literally is hopeless for large q^k, but mod q^2 only
/// the binomial coefficients C(q^k, j q^(k-1)) survive, and those are
/// congruent to C(q, j); for 0 < j < q that is q times (-1)^(j-1)/j mod q.
/// The result has at most q + 1 terms regardless of k.
fn case4_companion(s: u64, k: u32, a: &BigInt, b: &BigInt, q: u64) -> PolyModQ {
    debug_assert!(k >= 1);
    let qk = q.pow(k);
    let qk1 = q.pow(k - 1);
    let mut coeffs = vec![0u64; (s * qk) as usize + 1];
    coeffs[0] = fermat_quotient_mod_q(b, qk, q);
    coeffs[(s * qk) as usize] = fermat_quotient_mod_q(a, qk, q);
    let neg_a = neg_mod(a, q);
    let neg_b = neg_mod(b, q);
    for j in 1..q {
        let inv_j = powmod_u64(j, q - 2, q);
        let mut w = inv_j as u128 * powmod_u64(neg_a, j * qk1, q) as u128 % q as u128;
        w = w * powmod_u64(neg_b, (q - j) * qk1, q) as u128 % q as u128;
        let mut w = w as u64;
        if j % 2 == 0 {
            w = (q - w) % q;
        }
        coeffs[(s * j * qk1) as usize] = w;
    }
    PolyModQ::new(q, coeffs)
}

fn vq_u64(mut x: u64, q: u64) -> u32 {
    debug_assert!(x > 0);
    let mut v = 0;
    while x % q == 0 {
        x /= q;
        v += 1;
    }
    v
}

/// What to prove monogenicity of.
#[derive(Debug, Clone, Serialize)]
pub enum MonoInput {
    /// x^m + A x^(m-1) + B itself.
    Trinomial(Trinomial),
    /// F(x^(p^n)).
    Power(PowerTrinomial),
    /// An arbitrary monic polynomial (general Dedekind route).
    Poly(PolyZ),
}

/// Which index criterion to run at each obstructed prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Strategy {
    /// Closed-form trinomial statements. Fast for huge compositions.
    Jks,
    /// Dedekind's criterion on the expanded polynomial. Degree-sensitive.
    Dedekind,
    /// Run both and insist they agree; panics with both traces otherwise.
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Monogenic,
    NotMonogenic {
        #[serde(serialize_with = "crate::serde_utils::bigint_str")]
        q: BigInt,
    },
    Reducible {
        witness: PolyZ,
    },
    Unknown {
        reason: String,
    },
}

/// Outcome of the index criteria at one prime q with q^2 | disc.
#[derive(Debug, Clone, Serialize)]
pub struct PrimeCheckRecord {
    #[serde(serialize_with = "crate::serde_utils::bigint_str")]
    pub q: BigInt,
    pub disc_exponent: u32,
    pub jks: Option<JksTrace>,
    pub dedekind: Option<DedekindTrace>,
    pub passes: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct MonogenicityReport {
    pub verdict: Verdict,
    /// Fully factored discriminant, when it was computed.
    pub disc: Option<IntFactorization>,
    pub irreducibility: Option<IrreducibilityVerdict>,
    /// One record per prime with disc-exponent >= 2, in ascending order,
    /// stopping at the first failure.
    pub checks: Vec<PrimeCheckRecord>,
}

impl MonogenicityReport {
    fn unknown(reason: String) -> Self {
        MonogenicityReport {
            verdict: Verdict::Unknown { reason },
            disc: None,
            irreducibility: None,
            checks: Vec::new(),
        }
    }
}

/// Decide monogenicity. Irreducibility is established first (reducible and
/// undecidable inputs short-circuit), then every prime whose square divides
/// the discriminant is run through the chosen index criterion. Internal
/// failures (factoring effort, degree caps, oversized primes) surface as
/// `Verdict::Unknown` with the reason, never as a wrong answer.
pub fn is_monogenic(input: &MonoInput, strategy: Strategy, effort: Effort) -> MonogenicityReport {
    match input {
        MonoInput::Trinomial(t) => {
            let pt = PowerTrinomial::new(t.clone(), 2, 0).expect("n = 0 is always in range");
            power_path(&pt, strategy, effort)
        }
        MonoInput::Power(pt) => power_path(pt, strategy, effort),
        MonoInput::Poly(f) => poly_path(f, strategy, effort),
    }
}

fn power_path(pt: &PowerTrinomial, strategy: Strategy, effort: Effort) -> MonogenicityReport {
    let irr = irreducible_power_compositional(pt, effort);
    match &irr {
        IrreducibilityVerdict::Reducible { witness, .. } => {
            return MonogenicityReport {
                verdict: Verdict::Reducible {
                    witness: witness.clone(),
                },
                disc: None,
                irreducibility: Some(irr),
                checks: Vec::new(),
            }
        }
        IrreducibilityVerdict::Unknown { reason } => {
            return MonogenicityReport {
                verdict: Verdict::Unknown {
                    reason: format!("irreducibility undecided: {reason}"),
                },
                disc: None,
                irreducibility: Some(irr.clone()),
                checks: Vec::new(),
            }
        }
        IrreducibilityVerdict::Irreducible { .. } => {}
    }
    let disc = match disc_power_factored(pt, effort) {
        Ok(d) => d,
        Err(e) => {
            let mut rep = MonogenicityReport::unknown(format!(
                "discriminant factorization did not complete: {e}"
            ));
            rep.irreducibility = Some(irr);
            return rep;
        }
    };
    // The closed-form statements need the trinomial shape; a zero middle
    // coefficient degenerates to a binomial, which Dedekind handles fine.
    let effective = if pt.base().a().is_zero() && strategy != Strategy::Dedekind {
        Strategy::Dedekind
    } else {
        strategy
    };
    let mut expanded: Option<PolyZ> = None;
    let mut checks = Vec::new();
    let mut verdict = Verdict::Monogenic;
    for pp in &disc.factors {
        if pp.exponent < 2 {
            continue;
        }
        let Ok(q) = u64::try_from(&pp.prime) else {
            let mut rep = MonogenicityReport::unknown(format!(
                "prime {} with squared contribution to the discriminant is too large for residue arithmetic",
                pp.prime
            ));
            rep.disc = Some(disc.clone());
            rep.irreducibility = Some(irr);
            rep.checks = checks;
            return rep;
        };
        let mut record = PrimeCheckRecord {
            q: pp.prime.clone(),
            disc_exponent: pp.exponent,
            jks: None,
            dedekind: None,
            passes: false,
        };
        let needs_jks = matches!(effective, Strategy::Jks | Strategy::Both);
        let needs_dedekind = matches!(effective, Strategy::Dedekind | Strategy::Both);
        if needs_jks {
            match jks_prime_check(
                pt.expanded_degree(),
                pt.middle_degree(),
                pt.base().a(),
                pt.base().b(),
                q,
            ) {
                Ok(tr) => record.jks = Some(tr),
                Err(e) => {
                    let mut rep = MonogenicityReport::unknown(format!(
                        "index criterion failed at q = {q}: {e}"
                    ));
                    rep.disc = Some(disc.clone());
                    rep.irreducibility = Some(irr);
                    rep.checks = checks;
                    return rep;
                }
            }
        }
        if needs_dedekind {
            let poly = expanded.get_or_insert_with(|| pt.to_poly());
            record.dedekind = Some(dedekind_prime_check(poly, q));
        }
        record.passes = match (&record.jks, &record.dedekind) {
            (Some(j), Some(d)) => {
                if j.passes != d.passes {
                    panic!(
                        "index criteria disagree at q = {q} for {:?}:\njks: {:#?}\ndedekind: {:#?}",
                        pt, j, d
                    );
                }
                j.passes
            }
            (Some(j), None) => j.passes,
            (None, Some(d)) => d.passes,
            (None, None) => unreachable!("strategy always selects a criterion"),
        };
        let failed = !record.passes;
        checks.push(record);
        if failed {
            verdict = Verdict::NotMonogenic {
                q: pp.prime.clone(),
            };
            break;
        }
    }
    MonogenicityReport {
        verdict,
        disc: Some(disc),
        irreducibility: Some(irr),
        checks,
    }
}

fn poly_path(f: &PolyZ, strategy: Strategy, effort: Effort) -> MonogenicityReport {
    if !f.is_monic() {
        return MonogenicityReport::unknown("input polynomial must be monic".into());
    }
    let deg = f.degree().expect("monic implies nonzero");
    if deg == 0 {
        return MonogenicityReport::unknown("degree must be at least 1".into());
    }
    if deg == 1 {
        // theta is a rational integer: Z[theta] = Z is the full ring.
        return MonogenicityReport {
            verdict: Verdict::Monogenic,
            disc: None,
            irreducibility: None,
            checks: Vec::new(),
        };
    }
    let fac = match factor_z(f) {
        Ok(fac) => fac,
        Err(e) => return MonogenicityReport::unknown(format!("irreducibility undecided: {e}")),
    };
    if !fac.primitive_is_irreducible() {
        return MonogenicityReport {
            verdict: Verdict::Reducible {
                witness: fac.factors[0].0.clone(),
            },
            disc: None,
            irreducibility: None,
            checks: Vec::new(),
        };
    }
    let disc_value = disc_resultant(f);
    let disc = match crate::integers::factorize(&disc_value, effort) {
        Ok(d) => d,
        Err(e) => {
            return MonogenicityReport::unknown(format!(
                "discriminant factorization did not complete: {e}"
            ))
        }
    };
    let shape = trinomial_shape(f);
    let mut checks = Vec::new();
    let mut verdict = Verdict::Monogenic;
    for pp in &disc.factors {
        if pp.exponent < 2 {
            continue;
        }
        let Ok(q) = u64::try_from(&pp.prime) else {
            let mut rep = MonogenicityReport::unknown(format!(
                "prime {} with squared contribution to the discriminant is too large for residue arithmetic",
                pp.prime
            ));
            rep.disc = Some(disc.clone());
            rep.checks = checks;
            return rep;
        };
        let mut record = PrimeCheckRecord {
            q: pp.prime.clone(),
            disc_exponent: pp.exponent,
            jks: None,
            dedekind: None,
            passes: false,
        };
        match (strategy, &shape) {
            (Strategy::Jks, None) => {
                let mut rep = MonogenicityReport::unknown(
                    "the closed-form criterion needs a monic trinomial x^N + A x^M + B".into(),
                );
                rep.disc = Some(disc.clone());
                rep.checks = checks;
                return rep;
            }
            (Strategy::Jks | Strategy::Both, Some((n, m, a, b))) => {
                match jks_prime_check(*n, *m, a, b, q) {
                    Ok(tr) => record.jks = Some(tr),
                    Err(e) => {
                        let mut rep = MonogenicityReport::unknown(format!(
                            "index criterion failed at q = {q}: {e}"
                        ));
                        rep.disc = Some(disc.clone());
                        rep.checks = checks;
                        return rep;
                    }
                }
            }
            _ => {}
        }
        if matches!(strategy, Strategy::Dedekind | Strategy::Both) {
            record.dedekind = Some(dedekind_prime_check(f, q));
        }
        record.passes = match (&record.jks, &record.dedekind) {
            (Some(j), Some(d)) => {
                if j.passes != d.passes {
                    panic!(
                        "index criteria disagree at q = {q} for {f}:\njks: {:#?}\ndedekind: {:#?}",
                        j, d
                    );
                }
                j.passes
            }
            (Some(j), None) => j.passes,
            (None, Some(d)) => d.passes,
            (None, None) => unreachable!(),
        };
        let failed = !record.passes;
        checks.push(record);
        if failed {
            verdict = Verdict::NotMonogenic {
                q: pp.prime.clone(),
            };
            break;
        }
    }
    MonogenicityReport {
        verdict,
        disc: Some(disc),
        irreducibility: None,
        checks,
    }
}

/// (N, M, A, B) when f = x^N + A x^M + B with three nonzero terms.
fn trinomial_shape(f: &PolyZ) -> Option<(u64, u64, BigInt, BigInt)> {
    if !f.is_monic() || f.term_count() != 3 || f.coeff(0).is_zero() {
        return None;
    }
    let n = f.degree().unwrap();
    let middle = (1..n).find(|&i| !f.coeff(i).is_zero())?;
    Some((n as u64, middle as u64, f.coeff(middle), f.coeff(0)))
}

/// Result of matching a concrete trinomial against the infinite-family
/// hypotheses for a given odd prime p. When every hypothesis holds the
/// conclusion is that F(x^(p^n)) is monogenic for all n >= 0.
#[derive(Debug, Clone, Serialize)]
pub struct HypothesisReport {
    pub m: u32,
    pub p: u64,
    /// Recovered shape parameter: A = 4pu + p^2 + 2 (m = 2) or 4p^2 u + 1.
    #[serde(serialize_with = "crate::serde_utils::opt_bigint_str")]
    pub u: Option<BigInt>,
    /// Recovered shape parameter: B = 2pt + 1 (m = 2) or 2pt + p.
    #[serde(serialize_with = "crate::serde_utils::opt_bigint_str")]
    pub t: Option<BigInt>,
    pub satisfied: bool,
    /// The first hypothesis that failed, by name.
    pub first_failure: Option<String>,
}

/// Check the infinite-family hypotheses for F = x^m + A x^(m-1) + B and odd
/// prime p:
///
/// * m = 2:      A = 4pu + p^2 + 2, B = 2pt + 1, with B, B - 1 and D
///   squarefree and |B| >= 2;
/// * m in {3,4}: A = 4p^2 u + 1, B = 2pt + p, with B and D squarefree and
///   |B| >= 2;
/// * m >= 5:     as for m = 3, plus F irreducible.
///
/// Stops at the first failed hypothesis and names it.
pub fn theorem1_hypotheses(
    t: &Trinomial,
    p: u64,
    effort: Effort,
) -> Result<HypothesisReport, Error> {
    let m = t.m();
    let mut report = HypothesisReport {
        m,
        p,
        u: None,
        t: None,
        satisfied: false,
        first_failure: None,
    };
    let fail = |report: &mut HypothesisReport, name: &str| {
        report.first_failure = Some(name.to_string());
    };

    if p < 3 || !is_prime_u64(p) {
        fail(&mut report, "p is an odd prime");
        return Ok(report);
    }
    let pb = BigInt::from(p);
    let (u, shape_name) = if m == 2 {
        (
            exact_div(&(t.a() - &pb * &pb - 2), &(&pb * 4)),
            "A has the form 4pu + p^2 + 2",
        )
    } else {
        (
            exact_div(&(t.a() - 1), &(&pb * &pb * 4)),
            "A has the form 4p^2u + 1",
        )
    };
    let Some(u) = u else {
        fail(&mut report, shape_name);
        return Ok(report);
    };
    report.u = Some(u);
    let (tt, shape_name) = if m == 2 {
        (exact_div(&(t.b() - 1), &(&pb * 2)), "B has the form 2pt + 1")
    } else {
        (exact_div(&(t.b() - &pb), &(&pb * 2)), "B has the form 2pt + p")
    };
    let Some(tt) = tt else {
        fail(&mut report, shape_name);
        return Ok(report);
    };
    report.t = Some(tt);

    if t.b().abs() < BigInt::from(2) {
        fail(&mut report, "|B| >= 2");
        return Ok(report);
    }
    if !is_squarefree(t.b(), effort)? {
        fail(&mut report, "B is squarefree");
        return Ok(report);
    }
    if m == 2 {
        let b_minus_1 = t.b() - 1;
        // B = 2pt + 1 != 1 here, so B - 1 != 0.
        if !is_squarefree(&b_minus_1, effort)? {
            fail(&mut report, "B - 1 is squarefree");
            return Ok(report);
        }
    }
    let d = t.d_value();
    if d.is_zero() || !is_squarefree(&d, effort)? {
        fail(&mut report, "D is squarefree");
        return Ok(report);
    }
    if m >= 5 {
        let pt = PowerTrinomial::new(t.clone(), p, 0).expect("n = 0 is always in range");
        match irreducible_power_compositional(&pt, effort).decided() {
            Some(true) => {}
            Some(false) => {
                fail(&mut report, "F is irreducible");
                return Ok(report);
            }
            None => {
                fail(&mut report, "F is irreducible (undecided)");
                return Ok(report);
            }
        }
    }
    report.satisfied = true;
    Ok(report)
}

fn exact_div(x: &BigInt, d: &BigInt) -> Option<BigInt> {
    let (q, r) = x.div_rem(d);
    r.is_zero().then_some(q)
}
