//! Resultants and discriminants over Z by fraction-free (Bareiss) elimination
//! on the Sylvester matrix. Exact at every step; no floating point, no
//! modular shortcuts. This is the independent reference that closed-form
//! discriminants are checked against.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::PolyZ;

/// Res(f, g). Zero when either argument is zero; for constants,
/// Res(c, g) = c^deg(g).
pub fn resultant(f: &PolyZ, g: &PolyZ) -> BigInt {
    let (Some(n), Some(m)) = (f.degree(), g.degree()) else {
        return BigInt::zero();
    };
    if n == 0 && m == 0 {
        return BigInt::one();
    }
    if n == 0 {
        return f.coeff(0).pow(m as u32);
    }
    if m == 0 {
        return g.coeff(0).pow(n as u32);
    }
    let size = n + m;
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    for row in 0..m {
        for j in 0..=n {
            mat[row][row + j] = f.coeff(n - j);
        }
    }
    for row in 0..n {
        for j in 0..=m {
            mat[m + row][row + j] = g.coeff(m - j);
        }
    }
    bareiss_det(mat)
}

/// Determinant by Bareiss's fraction-free elimination (all divisions exact).
fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(pivot) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, pivot);
            sign = !sign;
        }
        let pivot_row = m[k].clone();
        for row in m.iter_mut().skip(k + 1) {
            let head = std::mem::replace(&mut row[k], BigInt::zero());
            if head.is_zero() && pivot_row[k].is_one() && prev.is_one() {
                continue;
            }
            for j in k + 1..n {
                let t = &row[j] * &pivot_row[k] - &head * &pivot_row[j];
                row[j] = t / &prev;
            }
        }
        prev = pivot_row[k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}

/// Discriminant of a monic polynomial of degree >= 1:
/// (-1)^(n(n-1)/2) * Res(f, f').
pub fn disc_resultant(f: &PolyZ) -> BigInt {
    let n = f.degree().expect("discriminant of zero polynomial");
    assert!(n >= 1, "discriminant needs degree >= 1");
    assert!(f.is_monic(), "disc_resultant expects a monic polynomial");
    if n == 1 {
        return BigInt::one();
    }
    let r = resultant(f, &f.derivative());
    if (n * (n - 1) / 2) % 2 == 1 {
        -r
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p(coeffs: &[i64]) -> PolyZ {
        PolyZ::from_i64(coeffs)
    }

    #[test]
    fn known_discriminants() {
        assert_eq!(disc_resultant(&p(&[1, 1, 1])), BigInt::from(-3)); // x^2+x+1
        assert_eq!(disc_resultant(&p(&[-5, 0, 1])), BigInt::from(20)); // x^2-5
        assert_eq!(disc_resultant(&p(&[1, 0, 1, 1])), BigInt::from(-31)); // x^3+x^2+1
        assert_eq!(disc_resultant(&p(&[-2, 0, 0, 1])), BigInt::from(-108)); // x^3-2
        assert_eq!(disc_resultant(&p(&[1, 1])), BigInt::one()); // linear
        // quadratic x^2 + Ax + B -> A^2 - 4B
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..50 {
            let a = rng.gen_range(-20i64..=20);
            let b = rng.gen_range(-20i64..=20);
            assert_eq!(disc_resultant(&p(&[b, a, 1])), BigInt::from(a * a - 4 * b));
        }
        // depressed cubic x^3 + px + q -> -4p^3 - 27q^2
        for _ in 0..50 {
            let pp = rng.gen_range(-20i64..=20);
            let qq = rng.gen_range(-20i64..=20);
            assert_eq!(
                disc_resultant(&p(&[qq, pp, 0, 1])),
                BigInt::from(-4 * pp * pp * pp - 27 * qq * qq)
            );
        }
    }

    #[test]
    fn resultant_of_linear_is_evaluation() {
        // Res(x - a, g) = g(a)
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        for _ in 0..100 {
            let a = rng.gen_range(-9i64..=9);
            let g = PolyZ::new((0..=3).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect());
            if g.is_zero() {
                continue;
            }
            let lin = p(&[-a, 1]);
            assert_eq!(resultant(&lin, &g), g.eval(&BigInt::from(a)));
        }
    }

    #[test]
    fn resultant_swap_sign() {
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        for _ in 0..100 {
            let f = PolyZ::new((0..=3).map(|_| BigInt::from(rng.gen_range(-5i64..=5))).collect());
            let g = PolyZ::new((0..=2).map(|_| BigInt::from(rng.gen_range(-5i64..=5))).collect());
            let (Some(n), Some(m)) = (f.degree(), g.degree()) else {
                continue;
            };
            let lhs = resultant(&f, &g);
            let rhs = resultant(&g, &f);
            if (n * m) % 2 == 0 {
                assert_eq!(lhs, rhs);
            } else {
                assert_eq!(lhs, -rhs);
            }
        }
    }

    #[test]
    fn resultant_multiplicative() {
        // Res(f1*f2, g) = Res(f1, g) * Res(f2, g)
        let mut rng = ChaCha8Rng::seed_from_u64(34);
        for _ in 0..100 {
            let f1 = PolyZ::new((0..=2).map(|_| BigInt::from(rng.gen_range(-5i64..=5))).collect());
            let f2 = PolyZ::new((0..=2).map(|_| BigInt::from(rng.gen_range(-5i64..=5))).collect());
            let g = PolyZ::new((0..=2).map(|_| BigInt::from(rng.gen_range(-5i64..=5))).collect());
            if f1.is_zero() || f2.is_zero() || g.is_zero() {
                continue;
            }
            assert_eq!(
                resultant(&f1.mul(&f2), &g),
                resultant(&f1, &g) * resultant(&f2, &g)
            );
        }
    }

    #[test]
    fn disc_of_product() {
        // disc(f*g) = disc(f) * disc(g) * Res(f, g)^2 for coprime monic f, g
        let mut rng = ChaCha8Rng::seed_from_u64(35);
        let mut done = 0;
        while done < 60 {
            let mut fc: Vec<BigInt> =
                (0..2).map(|_| BigInt::from(rng.gen_range(-6i64..=6))).collect();
            fc.push(BigInt::one());
            let mut gc: Vec<BigInt> =
                (0..3).map(|_| BigInt::from(rng.gen_range(-6i64..=6))).collect();
            gc.push(BigInt::one());
            let f = PolyZ::new(fc);
            let g = PolyZ::new(gc);
            let r = resultant(&f, &g);
            if r.is_zero() {
                continue; // not coprime
            }
            let lhs = disc_resultant(&f.mul(&g));
            let rhs = disc_resultant(&f) * disc_resultant(&g) * (&r * &r);
            assert_eq!(lhs, rhs);
            done += 1;
        }
    }
}
