//! Parser for the `--poly` flag.
//!
//! Accepts integer polynomials in `x` with caret powers and optional `*`
//! between coefficient and variable; whitespace is allowed anywhere between
//! tokens but never required: `x^2-5`, `x^6+11x^3+7`, `-2x^3 + x - 1`,
//! `3*x^2+1`, `7`.

use monotri::poly::{PolyZ, MAX_DEGREE};
use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn parse_poly(src: &str) -> Result<PolyZ, String> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    if p.peek().is_none() {
        return Err("empty polynomial".into());
    }
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut first = true;
    loop {
        p.skip_ws();
        let negative = match p.peek() {
            None => break,
            Some(b'+') => {
                p.pos += 1;
                false
            }
            Some(b'-') => {
                p.pos += 1;
                true
            }
            Some(c) if first => {
                let _ = c;
                false
            }
            Some(c) => {
                return Err(format!(
                    "expected '+' or '-' between terms, found '{}' at byte {}",
                    char::from(c),
                    p.pos
                ));
            }
        };
        first = false;
        p.skip_ws();
        let (mut coeff, exp) = p.term()?;
        if negative {
            coeff = -coeff;
        }
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, BigInt::zero());
        }
        coeffs[exp] += coeff;
    }
    Ok(PolyZ::new(coeffs))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek() == Some(b' ') || self.peek() == Some(b'\t') {
            self.pos += 1;
        }
    }

    fn digits(&mut self) -> Result<&str, String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(format!("expected digits at byte {}", start));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    /// One term after its sign: coefficient and/or a power of x.
    fn term(&mut self) -> Result<(BigInt, usize), String> {
        let mut coeff = BigInt::one();
        let mut had_coeff = false;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            coeff = self.digits()?.parse::<BigInt>().unwrap();
            had_coeff = true;
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
                if self.peek() != Some(b'x') {
                    return Err(format!("expected 'x' after '*' at byte {}", self.pos));
                }
            }
        }
        if self.peek() == Some(b'x') {
            self.pos += 1;
            self.skip_ws();
            let exp = if self.peek() == Some(b'^') {
                self.pos += 1;
                self.skip_ws();
                let d = self.digits()?;
                d.parse::<usize>()
                    .ok()
                    .filter(|&e| e <= MAX_DEGREE)
                    .ok_or_else(|| format!("exponent {d} exceeds the degree cap {MAX_DEGREE}"))?
            } else {
                1
            };
            Ok((coeff, exp))
        } else if had_coeff {
            Ok((coeff, 0))
        } else {
            Err(format!(
                "expected a coefficient or 'x' at byte {}",
                self.pos
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(src: &str) -> Vec<i64> {
        parse_poly(src)
            .unwrap()
            .coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn accepts_the_documented_forms() {
        assert_eq!(coeffs("x^2-5"), [-5, 0, 1]);
        assert_eq!(coeffs("x^6+11x^3+7"), [7, 0, 0, 11, 0, 0, 1]);
        assert_eq!(coeffs("-2x^3 + x - 1"), [-1, 1, 0, -2]);
        assert_eq!(coeffs("3*x^2+1"), [1, 0, 3]);
        assert_eq!(coeffs("7"), [7]);
        assert_eq!(coeffs("x"), [0, 1]);
        assert_eq!(coeffs("-x^4+4"), [4, 0, 0, 0, -1]);
        assert_eq!(coeffs(" x ^ 2 "), [0, 0, 1]);
    }

    #[test]
    fn display_round_trips() {
        for src in ["x^6 + 11x^3 + 7", "x^2 - 5", "2x", "x^4 - 2x^2 + 9"] {
            let f = parse_poly(src).unwrap();
            assert_eq!(parse_poly(&f.to_string()).unwrap(), f);
            assert_eq!(f.to_string(), src);
        }
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(parse_poly("").is_err());
        assert!(parse_poly("   ").is_err());
        assert!(parse_poly("x^").is_err());
        assert!(parse_poly("y+1").is_err());
        assert!(parse_poly("x^-2").is_err());
        assert!(parse_poly("3*").is_err());
        assert!(parse_poly("x 5").is_err());
        assert!(parse_poly("x^99999999999").is_err());
    }
}
