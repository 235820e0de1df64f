//! Infinite families of monogenic power-compositional trinomials.
//!
//! For an odd prime p, the two-parameter family
//!
//! * m = 2:      A = 4pu + p^2 + 2,  B = 2pt + 1,
//! * m >= 3:     A = 4p^2 u + 1,     B = 2pt + p,
//!
//! has the property that whenever B and D = m^m B - (-1)^m (m-1)^(m-1) A^m
//! are squarefree (plus B - 1 squarefree when m = 2, |B| >= 2, and F
//! irreducible when m >= 5), every composition F(x^(p^n)) of
//! F = x^m + A x^(m-1) + B is monogenic. `search_t` walks prime values of t
//! and certifies members via `theorem1_hypotheses`.
//!
//! With u fixed, G(t) = B(t) D(t) is a product of a constant and distinct
//! linear polynomials in t, and the heuristic density of prime t with G(t)
//! squarefree is the Euler product of local factors 1 - rho(l) / (l (l - 1)),
//! where rho(l) counts residues r mod l^2 coprime to l with l^2 | G(r). The
//! closed form for rho, an enumeration cross-check, a scan for local
//! obstructions (primes where every residue is ruled out), and an empirical
//! density counter are all here.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::disc::{PowerTrinomial, Trinomial};
use crate::error::Error;
use crate::integers::{
    factorize, is_prime_u64, is_squarefree, is_squarefree_u64, mod_u64, neg_mod, powmod_u64,
    primes_up_to, Effort,
};
use crate::monogenic::{
    is_monogenic, theorem1_hypotheses, HypothesisReport, MonoInput, MonogenicityReport, Strategy,
};

/// The fixed part (m, p, u) of a family; t stays free.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyParams {
    pub m: u32,
    pub p: u64,
    #[serde(serialize_with = "crate::serde_utils::bigint_str")]
    pub u: BigInt,
}

impl FamilyParams {
    pub fn new(m: u32, p: u64, u: BigInt) -> Result<Self, Error> {
        if m < 2 {
            return Err(Error::invalid("family needs m >= 2"));
        }
        if p < 3 || !is_prime_u64(p) {
            return Err(Error::invalid("family needs an odd prime p"));
        }
        Ok(FamilyParams { m, p, u })
    }

    /// The member x^m + A x^(m-1) + B at a concrete t.
    pub fn trinomial_at(&self, t: &BigInt) -> Result<Trinomial, Error> {
        let pb = BigInt::from(self.p);
        let (a, b): (BigInt, BigInt) = if self.m == 2 {
            (&pb * 4 * &self.u + &pb * &pb + 2, &pb * 2 * t + 1)
        } else {
            (&pb * &pb * 4 * &self.u + 1, &pb * 2 * t + &pb)
        };
        Trinomial::new(self.m, a, b)
    }

    /// B(t) and D(t) as raw (leading, constant) pairs of linear polynomials
    /// in t.
    fn linear_parts(&self) -> ((BigInt, BigInt), (BigInt, BigInt)) {
        let pb = BigInt::from(self.p);
        if self.m == 2 {
            // B = 2pt + 1; D = 4B - A^2 = 8pt + 4 - (4pu + p^2 + 2)^2.
            let c = &pb * 4 * &self.u + &pb * &pb + 2;
            ((&pb * 2, BigInt::one()), (&pb * 8, 4 - &c * &c))
        } else {
            // B = 2pt + p; D = m^m B - (-1)^m (m-1)^(m-1) A^m, linear in t.
            let m_pow = BigInt::from(self.m).pow(self.m);
            let a: BigInt = &pb * &pb * 4 * &self.u + 1;
            let lead = (self.m as i64 - 1).pow(self.m - 1);
            let mut tail = BigInt::from(lead) * a.pow(self.m);
            if self.m % 2 == 1 {
                tail = -tail;
            }
            (
                (&pb * 2, pb.clone()),
                (&pb * 2 * &m_pow, &pb * &m_pow - tail),
            )
        }
    }

    /// A prime whose square divides D(t) for every t, if one exists. Such a
    /// prime makes the squarefreeness hypothesis on D unsatisfiable, so the
    /// family has no certifiable member at all. This happens, for example,
    /// when m is a prime dividing A = 4p^2 u + 1: then m^m divides both
    /// terms of D identically (concretely (m, p, u) = (5, 3, -1), where
    /// A = -35).
    pub fn provably_empty(&self, effort: Effort) -> Result<Option<u64>, Error> {
        let (_, (d_lead, d_const)) = self.linear_parts();
        let content = d_lead.gcd(&d_const);
        for pp in &factorize(&content, effort)?.factors {
            if pp.exponent >= 2 {
                return Ok(Some(u64::try_from(&pp.prime).map_err(|_| {
                    Error::invalid("square content factor out of range")
                })?));
            }
        }
        Ok(None)
    }

    /// G(t) = B(t) D(t) in factored normalized form.
    pub fn g_poly(&self) -> GPoly {
        let (b_lin, d_lin) = self.linear_parts();
        let g = GPoly::new(BigInt::one(), vec![b_lin, d_lin])
            .expect("family factors are distinct and nonconstant");
        // The factored form must reproduce B(t) D(t) exactly.
        debug_assert!((0..3).all(|t| {
            let tb = BigInt::from(t);
            let tri = self.trinomial_at(&tb).unwrap();
            g.eval(&tb) == tri.b() * tri.d_value()
        }));
        g
    }
}

/// a t + b with a > 0 and gcd(a, b) = 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinearFactor {
    #[serde(serialize_with = "crate::serde_utils::bigint_str")]
    pub a: BigInt,
    #[serde(serialize_with = "crate::serde_utils::bigint_str")]
    pub b: BigInt,
}

impl LinearFactor {
    pub fn eval(&self, t: &BigInt) -> BigInt {
        &self.a * t + &self.b
    }
}

impl fmt::Display for LinearFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.a.is_one() {
            write!(f, "t")?;
        } else {
            write!(f, "{}t", self.a)?;
        }
        if self.b.is_positive() {
            write!(f, " + {}", self.b)?;
        } else if self.b.is_negative() {
            write!(f, " - {}", self.b.magnitude())?;
        }
        Ok(())
    }
}

/// A product `constant * prod (a_i t + b_i)` of distinct primitive linear
/// polynomials, the shape every family G(t) takes. Contents and signs are
/// normalized into the constant on construction; a repeated factor is
/// rejected (its values are then never squarefree, and the local-density
/// formulas assume distinctness).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GPoly {
    #[serde(serialize_with = "crate::serde_utils::bigint_str")]
    constant: BigInt,
    factors: Vec<LinearFactor>,
}

impl GPoly {
    pub fn new(
        constant: BigInt,
        raw: impl IntoIterator<Item = (BigInt, BigInt)>,
    ) -> Result<Self, Error> {
        if constant.is_zero() {
            return Err(Error::invalid("constant part must be nonzero"));
        }
        let mut c = constant;
        let mut factors = Vec::new();
        for (a, b) in raw {
            if a.is_zero() {
                return Err(Error::invalid("each factor must be genuinely linear"));
            }
            let g = a.gcd(&b);
            let (mut aa, mut bb) = (&a / &g, &b / &g);
            if aa.is_negative() {
                aa = -aa;
                bb = -bb;
                c *= -g;
            } else {
                c *= g;
            }
            factors.push(LinearFactor { a: aa, b: bb });
        }
        factors.sort_by(|x, y| x.a.cmp(&y.a).then_with(|| x.b.cmp(&y.b)));
        if factors.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("repeated linear factor"));
        }
        Ok(GPoly { constant: c, factors })
    }

    pub fn constant(&self) -> &BigInt {
        &self.constant
    }

    pub fn factors(&self) -> &[LinearFactor] {
        &self.factors
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        let mut acc = self.constant.clone();
        for f in &self.factors {
            acc *= f.eval(t);
        }
        acc
    }
}

impl fmt::Display for GPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.constant.is_one() || self.factors.is_empty() {
            write!(f, "{}", self.constant)?;
            if !self.factors.is_empty() {
                write!(f, " * ")?;
            }
        }
        for (i, lin) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            write!(f, "({lin})")?;
        }
        Ok(())
    }
}

/// rho(l): the number of residues r mod l^2 with gcd(r, l) = 1 and
/// l^2 | G(r), in closed form.
///
/// Writing v0 for the l-adic valuation of the constant: if v0 >= 2 every
/// residue qualifies. A factor with l | a_i is a unit at every r and never
/// contributes. The other factors have a single root mod l; only roots that
/// are units matter, grouped into classes. With v0 = 1, any residue over a
/// root class picks up a second factor of l, giving l residues mod l^2 per
/// class. With v0 = 0, a class shared by two factors contributes all l of its
/// residues, while a singleton class needs its factor divisible by l^2, which
/// pins down exactly one residue mod l^2.
pub fn rho(g: &GPoly, ell: u64) -> u64 {
    assert!(is_prime_u64(ell), "rho needs a prime modulus");
    let v0 = crate::integers::valuation(&g.constant, &BigInt::from(ell));
    if v0 >= 2 {
        return ell * (ell - 1);
    }
    let mut classes: BTreeMap<u64, u32> = BTreeMap::new();
    for f in &g.factors {
        let am = mod_u64(&f.a, ell);
        if am == 0 {
            continue;
        }
        let root = neg_mod(&f.b, ell) * powmod_u64(am, ell - 2, ell) % ell;
        if root == 0 {
            continue;
        }
        *classes.entry(root).or_insert(0) += 1;
    }
    if v0 == 1 {
        return ell * classes.len() as u64;
    }
    classes
        .values()
        .map(|&count| if count >= 2 { ell } else { 1 })
        .sum()
}

/// rho(l) by direct counting over all residues mod l^2; the reference
/// implementation `rho` is checked against.
pub fn rho_by_enumeration(g: &GPoly, ell: u64) -> u64 {
    assert!(is_prime_u64(ell));
    let ell2 = BigInt::from(ell) * ell;
    let mut count = 0;
    for r in 0..ell * ell {
        if r % ell == 0 {
            continue;
        }
        if g.eval(&BigInt::from(r)).mod_floor(&ell2).is_zero() {
            count += 1;
        }
    }
    count
}

#[derive(Debug, Clone, Serialize)]
pub struct LocalDensity {
    pub ell: u64,
    pub rho: u64,
    /// l (l - 1), the count of residues mod l^2 coprime to l.
    pub bound: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ObstructionReport {
    pub locals: Vec<LocalDensity>,
    /// The first prime at which every admissible residue is ruled out, if any.
    pub obstruction: Option<u64>,
}

/// True iff every unit residue z mod l^2 has l^2 | G(z): G(t) is then never
/// squarefree over prime t and the density is zero.
pub fn has_local_obstruction(g: &GPoly, ell: u64) -> bool {
    rho(g, ell) == ell * (ell - 1)
}

/// Scans every prime that could possibly rule out all residues: with k
/// factors, a full obstruction at l without help from the constant needs
/// 2 (l - 1) <= k, and any obstruction involving the constant needs l to
/// divide it.
pub fn obstruction_scan(g: &GPoly, effort: Effort) -> Result<ObstructionReport, Error> {
    let k = g.factors.len() as u64;
    let mut candidates: BTreeSet<u64> = primes_up_to((k + 2) / 2).into_iter().collect();
    for pp in &factorize(&g.constant, effort)?.factors {
        let Ok(l) = u64::try_from(&pp.prime) else {
            return Err(Error::invalid(format!(
                "constant factor {} too large for local analysis",
                pp.prime
            )));
        };
        candidates.insert(l);
    }
    let mut locals = Vec::new();
    let mut obstruction = None;
    for &ell in &candidates {
        let r = rho(g, ell);
        let bound = ell * (ell - 1);
        if r == bound && obstruction.is_none() {
            obstruction = Some(ell);
        }
        locals.push(LocalDensity { ell, rho: r, bound });
    }
    Ok(ObstructionReport { locals, obstruction })
}

#[derive(Debug, Clone, Serialize)]
pub struct DensityEstimate {
    pub l_max: u64,
    /// prod over primes l <= l_max of (1 - rho(l) / (l (l - 1))).
    pub c: f64,
    /// The omitted primes change the product by at most this much.
    pub tail_bound: f64,
}

/// The truncated Euler product for the density of prime t with G(t)
/// squarefree. For l beyond every factor discriminant and pairwise
/// resultant, rho(l) <= k, so the truncation error is below
/// sum over l > l_max of k / (l (l - 1)) < k / l_max.
pub fn density_c(g: &GPoly, l_max: u64) -> DensityEstimate {
    let mut c = 1.0f64;
    for ell in primes_up_to(l_max) {
        let r = rho(g, ell) as f64;
        c *= 1.0 - r / (ell as f64 * (ell - 1) as f64);
    }
    DensityEstimate {
        l_max,
        c,
        tail_bound: g.factors.len() as f64 / l_max.max(1) as f64,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EmpiricalDensity {
    pub x_max: u64,
    pub primes_tested: u64,
    pub squarefree_hits: u64,
    pub density: f64,
}

/// Counts prime t <= x_max with G(t) squarefree, exactly: the factored form
/// is squarefree iff the constant and every factor value are individually
/// squarefree and pairwise coprime. Factor values stay small, so each check
/// is trial division through the cube root plus a square test.
pub fn empirical_density(g: &GPoly, x_max: u64, effort: Effort) -> Result<EmpiricalDensity, Error> {
    let constant_sf = is_squarefree(&g.constant, effort)?;
    let c_abs = g.constant.abs();
    let ts = primes_up_to(x_max);
    let primes_tested = ts.len() as u64;
    let mut hits = 0u64;
    if constant_sf {
        'next_t: for &t in &ts {
            let tb = BigInt::from(t);
            let values: Vec<BigInt> = g.factors.iter().map(|f| f.eval(&tb).abs()).collect();
            for v in &values {
                if v.is_zero() || !squarefree_value(v, effort)? {
                    continue 'next_t;
                }
                if !c_abs.gcd(v).is_one() {
                    continue 'next_t;
                }
            }
            for (i, v) in values.iter().enumerate() {
                for w in &values[i + 1..] {
                    if !v.gcd(w).is_one() {
                        continue 'next_t;
                    }
                }
            }
            hits += 1;
        }
    }
    Ok(EmpiricalDensity {
        x_max,
        primes_tested,
        squarefree_hits: hits,
        density: if primes_tested == 0 {
            0.0
        } else {
            hits as f64 / primes_tested as f64
        },
    })
}

fn squarefree_value(v: &BigInt, effort: Effort) -> Result<bool, Error> {
    if let Ok(x) = u64::try_from(v.magnitude()) {
        if let Some(ans) = is_squarefree_u64(x) {
            return Ok(ans);
        }
    }
    is_squarefree(v, effort)
}

/// A family member at a concrete prime t whose hypotheses all check out, so
/// F(x^(p^n)) is monogenic for every n >= 0.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyCertificate {
    pub params: FamilyParams,
    #[serde(serialize_with = "crate::serde_utils::bigint_str")]
    pub t: BigInt,
    #[serde(serialize_with = "crate::serde_utils::bigint_str")]
    pub a: BigInt,
    #[serde(serialize_with = "crate::serde_utils::bigint_str")]
    pub b: BigInt,
    #[serde(serialize_with = "crate::serde_utils::bigint_str")]
    pub d: BigInt,
    pub hypotheses: HypothesisReport,
}

impl FamilyCertificate {
    pub fn trinomial(&self) -> Trinomial {
        Trinomial::new(self.params.m, self.a.clone(), self.b.clone())
            .expect("certificate stores a valid trinomial")
    }

    /// Independent confirmation: run the full monogenicity decision on
    /// F(x^(p^n)) with both index criteria.
    pub fn verify(&self, n: u32, effort: Effort) -> Result<MonogenicityReport, Error> {
        let pt = PowerTrinomial::new(self.trinomial(), self.params.p, n)?;
        Ok(is_monogenic(&MonoInput::Power(pt), Strategy::Both, effort))
    }
}

/// Walks prime t = 2, 3, 5, ... up to t_max and certifies family members
/// until `count` of them are found. Finding fewer is reported as
/// `Error::Exhausted` carrying the partial results.
pub fn search_t(
    params: &FamilyParams,
    count: usize,
    t_max: u64,
    effort: Effort,
) -> Result<Vec<FamilyCertificate>, Error> {
    let mut found = Vec::new();
    for t in primes_up_to(t_max) {
        if found.len() >= count {
            break;
        }
        let tb = BigInt::from(t);
        let tri = params.trinomial_at(&tb)?;
        let rep = theorem1_hypotheses(&tri, params.p, effort)?;
        if rep.satisfied {
            found.push(FamilyCertificate {
                params: params.clone(),
                t: tb,
                a: tri.a().clone(),
                b: tri.b().clone(),
                d: tri.d_value(),
                hypotheses: rep,
            });
        }
    }
    if found.len() >= count {
        Ok(found)
    } else {
        Err(Error::Exhausted {
            t_max,
            requested: count,
            found,
        })
    }
}
