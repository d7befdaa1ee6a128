//! Text files for polynomials and evaluation vectors.
//!
//! A polynomial file is `p K` on the first line, the global `p`-power
//! exponent on the second, then one coefficient per line in `[0, p^K)`,
//! constant term first. An evaluation file has `s d` on the first line and
//! `s·d` coefficients, the `d` coefficients of each value in turn.

use std::fmt::Write as _;

use num_bigint::BigUint;
use padic_fft::padic::{ExtensionDescriptor, PadicCtx, ResidueInt, RingElement};
use padic_fft::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyFile {
    pub p: u64,
    pub k: u32,
    pub exponent: i64,
    pub coeffs: Vec<ResidueInt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalFile {
    pub s: usize,
    pub d: usize,
    pub exponent: i64,
    pub coeffs: Vec<BigUint>,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::BadInput(msg.into())
}

fn parse<T: std::str::FromStr>(word: Option<&str>, what: &str) -> Result<T> {
    let word = word.ok_or_else(|| bad(format!("missing {what}")))?;
    word.parse().map_err(|_| bad(format!("cannot parse {what} from {word:?}")))
}

/// Header pair, exponent and the remaining non-empty lines.
fn split(text: &str) -> Result<((u64, u64), i64, Vec<&str>)> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let mut header = lines.next().ok_or_else(|| bad("empty file"))?.split_whitespace();
    let a = parse(header.next(), "first header field")?;
    let b = parse(header.next(), "second header field")?;
    if header.next().is_some() {
        return Err(bad("header has more than two fields"));
    }
    let exponent = parse(lines.next(), "exponent")?;
    Ok(((a, b), exponent, lines.collect()))
}

fn check_range(c: BigUint, ctx: &PadicCtx) -> Result<ResidueInt> {
    if &c >= ctx.modulus() {
        return Err(bad(format!("coefficient {c} is not below {}", ctx.modulus())));
    }
    Ok(ctx.residue(c))
}

impl PolyFile {
    pub fn parse(text: &str) -> Result<Self> {
        let ((p, k), exponent, body) = split(text)?;
        let k = u32::try_from(k).map_err(|_| Error::OutOfRange(k))?;
        let ctx = PadicCtx::new(p, k)?;
        let coeffs = body
            .into_iter()
            .map(|line| check_range(parse(Some(line), "coefficient")?, &ctx))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { p, k, exponent, coeffs: ctx.poly_trim(&coeffs) })
    }

    pub fn render(&self) -> String {
        let mut out = format!("{} {}\n{}\n", self.p, self.k, self.exponent);
        for c in &self.coeffs {
            let _ = writeln!(out, "{c}");
        }
        out
    }
}

impl EvalFile {
    pub fn parse(text: &str) -> Result<Self> {
        let ((s, d), exponent, body) = split(text)?;
        let (s, d) = (s as usize, d as usize);
        if body.len() != s * d {
            return Err(Error::LengthMismatch { expected: s * d, got: body.len() });
        }
        let coeffs = body
            .into_iter()
            .map(|line| parse(Some(line), "coefficient"))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { s, d, exponent, coeffs })
    }

    pub fn from_values(exponent: i64, values: &[RingElement]) -> Self {
        let d = values.first().map_or(0, |v| v.parent().degree());
        let coeffs = values.iter().flat_map(|v| v.coeffs()).map(ResidueInt::into_value).collect();
        Self { s: values.len(), d, exponent, coeffs }
    }

    /// The values as elements of `ring`, rejecting out-of-range digits.
    pub fn values(&self, ring: &std::sync::Arc<ExtensionDescriptor>) -> Result<Vec<RingElement>> {
        if self.d != ring.degree() {
            return Err(bad(format!("file has degree {} but the ring has degree {}", self.d, ring.degree())));
        }
        let ctx = ring.ctx();
        self.coeffs
            .chunks(self.d.max(1))
            .map(|chunk| {
                let coeffs = chunk
                    .iter()
                    .map(|c| check_range(c.clone(), ctx))
                    .collect::<Result<Vec<_>>>()?;
                ring.element(&coeffs)
            })
            .collect()
    }

    pub fn render(&self) -> String {
        let mut out = format!("{} {}\n{}\n", self.s, self.d, self.exponent);
        for c in &self.coeffs {
            let _ = writeln!(out, "{c}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_round_trip() {
        let text = "3 4\n-2\n1\n0\n80\n0\n";
        let file = PolyFile::parse(text).unwrap();
        assert_eq!(file.exponent, -2);
        assert_eq!(file.coeffs.len(), 3);
        assert_eq!(file.render(), "3 4\n-2\n1\n0\n80\n");
    }

    #[test]
    fn rejects_malformed_files() {
        assert!(PolyFile::parse("").is_err());
        assert!(PolyFile::parse("3 4\n").is_err());
        assert!(PolyFile::parse("3 4\n0\n81\n").is_err());
        assert!(PolyFile::parse("4 4\n0\n1\n").is_err());
        assert!(PolyFile::parse("3 4 5\n0\n1\n").is_err());
        assert!(EvalFile::parse("2 2\n0\n1\n2\n3\n").is_err());
    }
}
