//! Dense polynomials over Z with exact coefficients, plus the mod-q layer
//! (`modq`), factorization over F_q (`factor_modq`), and fraction-free
//! resultants/discriminants (`resultant`).

mod factor_modq;
mod modq;
mod resultant;

pub use factor_modq::{factor_mod_q, factor_mod_q_seeded, ModFactorization, FACTOR_MOD_Q_SEED};
pub use modq::PolyModQ;
pub use resultant::{disc_resultant, resultant};

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Upper bound on degrees accepted by constructors that could otherwise be
/// tricked into absurd allocations (`expand_power`, the parser).
pub const MAX_DEGREE: usize = 1 << 20;

/// Dense polynomial over Z. Coefficients ascending; the vector is trimmed, so
/// the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyZ {
    coeffs: Vec<BigInt>,
}

impl PolyZ {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        PolyZ { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        PolyZ::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        PolyZ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PolyZ::constant(BigInt::one())
    }

    pub fn x() -> Self {
        PolyZ::new(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn constant(c: BigInt) -> Self {
        PolyZ::new(vec![c])
    }

    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        PolyZ::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, |c| c.is_one())
    }

    pub fn add(&self, other: &PolyZ) -> PolyZ {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        PolyZ::new(out)
    }

    pub fn sub(&self, other: &PolyZ) -> PolyZ {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        PolyZ::new(out)
    }

    pub fn neg(&self) -> PolyZ {
        PolyZ::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &PolyZ) -> PolyZ {
        if self.is_zero() || other.is_zero() {
            return PolyZ::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyZ::new(out)
    }

    pub fn mul_scalar(&self, c: &BigInt) -> PolyZ {
        PolyZ::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> PolyZ {
        let mut acc = PolyZ::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn derivative(&self) -> PolyZ {
        if self.coeffs.len() <= 1 {
            return PolyZ::zero();
        }
        PolyZ::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i + 1))
                .collect(),
        )
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// f(x^k); k >= 1.
    pub fn expand_power(&self, k: u32) -> PolyZ {
        assert!(k >= 1, "expand_power needs k >= 1");
        if self.is_zero() || k == 1 {
            return self.clone();
        }
        let deg = self.coeffs.len() - 1;
        let new_deg = deg
            .checked_mul(k as usize)
            .filter(|&d| d <= MAX_DEGREE)
            .expect("expanded degree out of range");
        let mut out = vec![BigInt::zero(); new_deg + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * k as usize] = c.clone();
        }
        PolyZ::new(out)
    }

    /// Long division by a monic divisor: returns (quotient, remainder).
    /// Panics if `d` is not monic.
    pub fn divrem_monic(&self, d: &PolyZ) -> (PolyZ, PolyZ) {
        assert!(d.is_monic(), "divrem_monic requires a monic divisor");
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() < d.coeffs.len() {
            return (PolyZ::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); self.coeffs.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = std::mem::replace(&mut rem[i], BigInt::zero());
            if c.is_zero() {
                continue;
            }
            for (j, b) in d.coeffs[..dd].iter().enumerate() {
                let delta = &c * b;
                rem[i - dd + j] -= delta;
            }
            quot[i - dd] = c;
        }
        rem.truncate(dd);
        (PolyZ::new(quot), PolyZ::new(rem))
    }

    /// Exact division by a monic divisor; None if the remainder is nonzero.
    pub fn div_exact_monic(&self, d: &PolyZ) -> Option<PolyZ> {
        let (q, r) = self.divrem_monic(d);
        r.is_zero().then_some(q)
    }

    /// Exact division by an arbitrary nonzero divisor. Returns None unless
    /// `d` divides `self` in Z[x] (integer quotient coefficients, zero
    /// remainder).
    pub fn div_exact(&self, d: &PolyZ) -> Option<PolyZ> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(PolyZ::zero());
        }
        if d.is_monic() {
            return self.div_exact_monic(d);
        }
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() < d.coeffs.len() {
            return None;
        }
        let lead = d.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); self.coeffs.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = std::mem::replace(&mut rem[i], BigInt::zero());
            if c.is_zero() {
                continue;
            }
            let (q, r) = c.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, b) in d.coeffs[..dd].iter().enumerate() {
                let delta = &q * b;
                rem[i - dd + j] -= delta;
            }
            quot[i - dd] = q;
        }
        rem.truncate(dd);
        PolyZ::new(rem).is_zero().then_some(PolyZ::new(quot))
    }

    /// gcd of all coefficients (non-negative; 0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    pub fn primitive_part(&self) -> PolyZ {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        PolyZ::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    pub fn max_norm(&self) -> BigUint {
        self.coeffs
            .iter()
            .map(|c| c.magnitude().clone())
            .max()
            .unwrap_or_default()
    }

    /// Sum of squared coefficients (square of the l2 norm).
    pub fn l2_norm_sq(&self) -> BigUint {
        self.coeffs
            .iter()
            .map(|c| c.magnitude() * c.magnitude())
            .sum()
    }

    /// Reduction mod q.
    pub fn reduce_mod(&self, q: u64) -> PolyModQ {
        PolyModQ::from_bigints(q, &self.coeffs)
    }

    /// Reduce every coefficient mod `m` (m >= 2) into the balanced range
    /// (-m/2, m/2].
    pub fn reduce_mod_balanced_big(&self, m: &BigInt) -> PolyZ {
        assert!(*m >= BigInt::from(2));
        PolyZ::new(
            self.coeffs
                .iter()
                .map(|c| {
                    let mut r = c.mod_floor(m);
                    if &r * 2 > *m {
                        r -= m;
                    }
                    r
                })
                .collect(),
        )
    }

    /// Total ordering used everywhere a canonical factor order is needed:
    /// degree first, then coefficients lexicographically from the constant up.
    pub fn canonical_cmp(&self, other: &PolyZ) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }

    /// Number of nonzero coefficients.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Parses expressions like `x^2 - 5`, `x^6 + 11*x^3 + 7`, `-2x + 3`.
    pub fn parse(input: &str) -> Result<PolyZ, Error> {
        parse_poly(input)
    }
}

impl serde::Serialize for PolyZ {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl fmt::Display for PolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.magnitude();
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                }
                if i == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{i}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyZ({self})")
    }
}

/// gcd in Z[x] via the primitive pseudo-remainder sequence. The result is
/// primitive with positive leading coefficient (monic whenever the monic
/// common divisor exists), times the gcd of the two contents.
pub fn gcd_z(a: &PolyZ, b: &PolyZ) -> PolyZ {
    if a.is_zero() {
        return normalize_sign(b);
    }
    if b.is_zero() {
        return normalize_sign(a);
    }
    let content = a.content().gcd(&b.content());
    let mut f = a.primitive_part();
    let mut g = b.primitive_part();
    if f.coeffs.len() < g.coeffs.len() {
        std::mem::swap(&mut f, &mut g);
    }
    while !g.is_zero() {
        let r = pseudo_rem(&f, &g);
        f = g;
        g = r.primitive_part();
    }
    normalize_sign(&f).primitive_part().mul_scalar(&content)
}

fn normalize_sign(p: &PolyZ) -> PolyZ {
    match p.leading() {
        Some(lc) if lc.is_negative() => p.neg(),
        _ => p.clone(),
    }
}

/// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g.
pub(crate) fn pseudo_rem(f: &PolyZ, g: &PolyZ) -> PolyZ {
    let dg = g.degree().expect("pseudo_rem by zero");
    let mut r = f.clone();
    let lc_g = g.leading().unwrap().clone();
    while let Some(dr) = r.degree() {
        if dr < dg {
            break;
        }
        let lead = r.leading().unwrap().clone();
        let shift = dr - dg;
        // r <- lc_g * r - lead * x^shift * g
        let mut coeffs: Vec<BigInt> = r.coeffs.iter().map(|c| c * &lc_g).collect();
        for (j, b) in g.coeffs.iter().enumerate() {
            coeffs[shift + j] -= &lead * b;
        }
        r = PolyZ::new(coeffs);
    }
    r
}

fn parse_poly(input: &str) -> Result<PolyZ, Error> {
    #[derive(Debug, Clone, PartialEq)]
    enum Tok {
        Num(BigInt),
        X,
        Caret,
        Plus,
        Minus,
        Star,
    }
    let mut toks = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&ch) = chars.peek() {
        match ch {
            ' ' | '\t' => {
                chars.next();
            }
            '+' => {
                chars.next();
                toks.push(Tok::Plus);
            }
            '-' => {
                chars.next();
                toks.push(Tok::Minus);
            }
            '*' => {
                chars.next();
                toks.push(Tok::Star);
            }
            '^' => {
                chars.next();
                toks.push(Tok::Caret);
            }
            'x' | 'X' => {
                chars.next();
                toks.push(Tok::X);
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                toks.push(Tok::Num(digits.parse().expect("digits parse")));
            }
            other => {
                return Err(Error::invalid(format!(
                    "unexpected character {other:?} in polynomial"
                )))
            }
        }
    }
    if toks.is_empty() {
        return Err(Error::invalid("empty polynomial"));
    }

    let mut acc = PolyZ::zero();
    let mut pos = 0usize;
    loop {
        // sign prefix
        let mut negative = false;
        while pos < toks.len() {
            match toks[pos] {
                Tok::Plus => pos += 1,
                Tok::Minus => {
                    negative = !negative;
                    pos += 1;
                }
                _ => break,
            }
        }
        if pos >= toks.len() {
            return Err(Error::invalid("polynomial ends with a dangling sign"));
        }
        // coefficient
        let mut coeff = BigInt::one();
        let mut saw_coeff = false;
        if let Tok::Num(ref n) = toks[pos] {
            coeff = n.clone();
            saw_coeff = true;
            pos += 1;
            if pos < toks.len() && toks[pos] == Tok::Star {
                pos += 1;
                if pos >= toks.len() || toks[pos] != Tok::X {
                    return Err(Error::invalid("'*' must be followed by x"));
                }
            }
        }
        // variable part
        let mut exp = 0usize;
        if pos < toks.len() && toks[pos] == Tok::X {
            pos += 1;
            exp = 1;
            if pos < toks.len() && toks[pos] == Tok::Caret {
                pos += 1;
                match toks.get(pos) {
                    Some(Tok::Num(n)) => {
                        exp = n
                            .to_biguint()
                            .and_then(|n| {
                                use num_traits::ToPrimitive;
                                n.to_usize()
                            })
                            .filter(|&e| e <= MAX_DEGREE)
                            .ok_or_else(|| Error::invalid("exponent out of range"))?;
                        pos += 1;
                    }
                    _ => return Err(Error::invalid("'^' must be followed by an integer")),
                }
            }
        } else if !saw_coeff {
            return Err(Error::invalid("expected a coefficient or x"));
        }
        if negative {
            coeff = -coeff;
        }
        acc = acc.add(&PolyZ::monomial(coeff, exp));
        if pos >= toks.len() {
            break;
        }
        match toks[pos] {
            Tok::Plus | Tok::Minus => continue,
            ref other => {
                return Err(Error::invalid(format!(
                    "unexpected token {other:?} after term"
                )))
            }
        }
    }
    Ok(acc)
}
