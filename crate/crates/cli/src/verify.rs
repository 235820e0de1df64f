//! The regression suite behind `monotri verify`.
//!
//! Five fixed-seed sections, each returning a failure list instead of
//! panicking: the reducible-class tables, the Gamma irreducibility classes,
//! the central binomial congruence, agreement of the two index criteria on
//! random trinomials, and one end-to-end family certification. The Gamma
//! runner takes its class table as an argument so a corrupted table can be
//! injected in tests.

use std::collections::BTreeMap;

use monotri::families::{search_t, FamilyParams};
use monotri::integers::{
    binomial_mod_prime_power, is_squarefree, primes_up_to, valuation, Effort,
};
use monotri::monogenic::{dedekind_prime_check, jks_prime_check, Verdict};
use monotri::poly::{disc_resultant, PolyZ};
use monotri::zfactor::{factor_z, is_irreducible_z, GAMMA_EVEN, GAMMA_ODD, REDUCIBLE_EXAMPLES};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct SectionReport {
    pub section: &'static str,
    pub checked: u64,
    pub failures: Vec<String>,
}

impl SectionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub const SECTIONS: [&str; 5] = ["tables", "gamma", "binomial", "agreement", "family"];

pub fn run(filter: Option<&str>, effort: Effort) -> Vec<SectionReport> {
    SECTIONS
        .iter()
        .filter(|&&name| filter.is_none() || filter == Some(name))
        .map(|&name| match name {
            "tables" => tables(),
            "gamma" => gamma(),
            "binomial" => binomial_congruences(),
            "agreement" => agreement(),
            "family" => family(effort),
            _ => unreachable!(),
        })
        .collect()
}

/// Every tabulated reducible trinomial, composed with x^(p^n) for
/// (p, n) in {3,5} x {0,1}: the complete factorization must regroup exactly
/// into the tabulated factors.
fn tables() -> SectionReport {
    let mut checked = 0;
    let mut failures = Vec::new();
    for ex in REDUCIBLE_EXAMPLES.iter() {
        for p in [3u32, 5] {
            for n in 0..=1u32 {
                checked += 1;
                let label = format!("m={} A={} B={} p={p} n={n}", ex.m, ex.a, ex.b);
                let (f, parts) = ex.composed(p.pow(n));
                let computed = match factor_z(&f) {
                    Ok(c) => c,
                    Err(e) => {
                        failures.push(format!("{label}: {e}"));
                        continue;
                    }
                };
                if computed.recompose() != f {
                    failures.push(format!("{label}: factor product differs from F"));
                    continue;
                }
                // Refine each displayed factor to irreducibles; the multiset
                // must match the direct factorization exactly.
                let mut refined: BTreeMap<Vec<BigInt>, u32> = BTreeMap::new();
                let mut unit = BigInt::one();
                for part in &parts {
                    match factor_z(part) {
                        Ok(fz) => {
                            unit *= &fz.unit;
                            for (g, e) in fz.factors {
                                *refined.entry(g.coeffs().to_vec()).or_insert(0) += e;
                            }
                        }
                        Err(e) => failures.push(format!("{label}: {e}")),
                    }
                }
                let mut direct: BTreeMap<Vec<BigInt>, u32> = BTreeMap::new();
                for (g, e) in &computed.factors {
                    *direct.entry(g.coeffs().to_vec()).or_insert(0) += *e;
                }
                if direct != refined || computed.unit != unit {
                    failures.push(format!("{label}: factorization does not regroup"));
                }
            }
        }
    }
    SectionReport {
        section: "tables",
        checked,
        failures,
    }
}

fn gamma() -> SectionReport {
    let mut out = SectionReport {
        section: "gamma",
        checked: 0,
        failures: Vec::new(),
    };
    for (m, classes, seed) in [
        (2u32, &GAMMA_EVEN[..], 0x6a01),
        (3, &GAMMA_ODD[..], 0x6a02),
        (4, &GAMMA_EVEN[..], 0x6a03),
    ] {
        let rep = gamma_classes(m, classes, 100, seed);
        out.checked += rep.checked;
        out.failures.extend(rep.failures);
    }
    out
}

/// Sampled irreducibility over the residue classes in `classes`: the class
/// representative itself first (with B shifted to the nearest squarefree
/// |B| >= 2), then `samples` random members per class. Every sampled
/// x^m + Ax^(m-1) + B with B squarefree must be irreducible.
pub fn gamma_classes(m: u32, classes: &[(u8, u8)], samples: u32, seed: u64) -> SectionReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let effort = Effort::default();
    let mut checked = 0;
    let mut failures = Vec::new();
    for &(ca, cb) in classes {
        let rep_b = (0..50)
            .map(|k| BigInt::from(cb as i64 + 4 * k))
            .find(|b| b.abs() >= BigInt::from(2) && is_squarefree(b, effort).unwrap_or(false));
        let mut members: Vec<(BigInt, BigInt)> = match rep_b {
            Some(b) => vec![(BigInt::from(ca), b)],
            None => {
                failures.push(format!(
                    "m={m} class ({ca},{cb}): no squarefree B in the class"
                ));
                continue;
            }
        };
        let mut attempts = 0;
        while members.len() < 1 + samples as usize && attempts < 100 * samples {
            attempts += 1;
            let a = BigInt::from(ca as i64 + 4 * rng.gen_range(-25i64..=25));
            let b = BigInt::from(cb as i64 + 4 * rng.gen_range(-25i64..=25));
            if b.abs() < BigInt::from(2) || !is_squarefree(&b, effort).unwrap() {
                continue;
            }
            members.push((a, b));
        }
        for (a, b) in members {
            checked += 1;
            let mut coeffs = vec![BigInt::zero(); m as usize + 1];
            coeffs[0] = b.clone();
            coeffs[m as usize - 1] = a.clone();
            coeffs[m as usize] = BigInt::one();
            let f = PolyZ::new(coeffs);
            if !is_irreducible_z(&f).unwrap_or(false) {
                failures.push(format!("m={m} class ({ca},{cb}): {f} is not irreducible"));
            }
        }
    }
    SectionReport {
        section: "gamma",
        checked,
        failures,
    }
}

/// C(2 p^k, p^k) == 2 mod p^2 for odd p < 50, k in {1, 2, 3}.
fn binomial_congruences() -> SectionReport {
    let mut checked = 0;
    let mut failures = Vec::new();
    for p in primes_up_to(49) {
        if p == 2 {
            continue;
        }
        for k in 1..=3u32 {
            checked += 1;
            let pk = p.pow(k);
            let got = binomial_mod_prime_power(2 * pk, pk, p, 2);
            if got != 2 {
                failures.push(format!("C(2*{p}^{k}, {p}^{k}) = {got} mod {p}^2, want 2"));
            }
        }
    }
    SectionReport {
        section: "binomial",
        checked,
        failures,
    }
}

/// The closed-form criterion and the Dedekind criterion agree at every prime
/// q <= 100 with q^2 | disc, over a fixed-seed sample of irreducible
/// trinomials x^N + Ax^M + B.
fn agreement() -> SectionReport {
    let mut rng = ChaCha8Rng::seed_from_u64(0x706a);
    let primes = primes_up_to(100);
    let mut samples = 0u32;
    let mut checked = 0;
    let mut failures = Vec::new();
    while samples < 300 {
        let n = rng.gen_range(2..=8u64);
        let m = rng.gen_range(1..n);
        let a = BigInt::from(rng.gen_range(-50i64..=50));
        let b = BigInt::from(rng.gen_range(-50i64..=50));
        if a.is_zero() || b.is_zero() {
            continue;
        }
        let mut coeffs = vec![BigInt::zero(); n as usize + 1];
        coeffs[0] = b.clone();
        coeffs[m as usize] = a.clone();
        coeffs[n as usize] = BigInt::one();
        let f = PolyZ::new(coeffs);
        if !is_irreducible_z(&f).unwrap() {
            continue;
        }
        samples += 1;
        let disc = disc_resultant(&f);
        for &q in &primes {
            if valuation(&disc, &BigInt::from(q)) < 2 {
                continue;
            }
            checked += 1;
            let jt = jks_prime_check(n, m, &a, &b, q).unwrap();
            let dt = dedekind_prime_check(&f, q);
            if jt.passes != dt.passes {
                failures.push(format!("criteria disagree at q={q} on {f}"));
            }
        }
    }
    SectionReport {
        section: "agreement",
        checked,
        failures,
    }
}

/// One end-to-end certification: the first certificate of the (m, p, u) =
/// (2, 3, 0) family is t = 5 with (A, B) = (11, 31), and it verifies as
/// monogenic at n = 0 and n = 1.
fn family(effort: Effort) -> SectionReport {
    let mut checked = 0;
    let mut failures = Vec::new();
    let params = FamilyParams::new(2, 3, BigInt::zero()).unwrap();
    match search_t(&params, 1, 100, effort) {
        Ok(certs) => {
            let cert = &certs[0];
            checked += 1;
            if cert.t != BigInt::from(5)
                || cert.a != BigInt::from(11)
                || cert.b != BigInt::from(31)
            {
                failures.push(format!(
                    "first certificate is t={} (A={}, B={}), want t=5 (11, 31)",
                    cert.t, cert.a, cert.b
                ));
            }
            for n in 0..=1u32 {
                checked += 1;
                match cert.verify(n, effort) {
                    Ok(report) if report.verdict == Verdict::Monogenic => {}
                    Ok(report) => failures.push(format!(
                        "certificate t={} not monogenic at n={n}: {:?}",
                        cert.t, report.verdict
                    )),
                    Err(e) => failures.push(format!("verification at n={n}: {e}")),
                }
            }
        }
        Err(e) => failures.push(format!("family search: {e}")),
    }
    SectionReport {
        section: "family",
        checked,
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sections_pass_on_the_shipped_tables() {
        let reports = run(None, Effort::default());
        assert_eq!(reports.len(), 5);
        for rep in &reports {
            assert!(rep.passed(), "{}: {:?}", rep.section, rep.failures);
            assert!(rep.checked > 0);
        }
        assert_eq!(reports[0].checked, 56);
        assert_eq!(reports[2].checked, 42);
    }

    #[test]
    fn filter_selects_a_single_section() {
        let reports = run(Some("binomial"), Effort::default());
        assert_eq!(reports.len(), 1);
        assert_eq!(reports[0].section, "binomial");
    }

    #[test]
    fn corrupted_gamma_table_is_a_named_failure() {
        // (3, 2) does not belong to the even-degree table: its representative
        // x^2 + 3x + 2 = (x + 1)(x + 2) is already reducible, so the very
        // first sample fails by name.
        let mut corrupted = GAMMA_EVEN.to_vec();
        corrupted[7] = (3, 2);
        let rep = gamma_classes(2, &corrupted, 10, 0x6a01);
        assert!(!rep.passed());
        assert!(
            rep.failures.iter().any(|f| f.contains("(3,2)")),
            "failures not named: {:?}",
            rep.failures
        );

        // The untouched table is clean under the same seed and sample count.
        let rep = gamma_classes(2, &GAMMA_EVEN, 10, 0x6a01);
        assert!(rep.passed(), "{:?}", rep.failures);
    }
}
