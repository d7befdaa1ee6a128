//! Dense polynomials over `Z/p^K` as coefficient slices, constant term
//! first. These are uncounted helpers for the lifting oracle and for
//! boundary conversions, not part of the transform hot path.

use num_bigint::BigUint;
use num_traits::Zero;

use super::{PadicCtx, ResidueInt};
use crate::error::{Error, Result};

impl PadicCtx {
    /// Drops trailing zero coefficients.
    pub fn poly_trim(&self, a: &[ResidueInt]) -> Vec<ResidueInt> {
        let len = a.iter().rposition(|c| !c.is_zero()).map_or(0, |i| i + 1);
        a[..len].to_vec()
    }

    pub fn poly_add(&self, a: &[ResidueInt], b: &[ResidueInt]) -> Vec<ResidueInt> {
        let n = a.len().max(b.len());
        let zero = ResidueInt::zero();
        let out: Vec<ResidueInt> = (0..n)
            .map(|i| self.add(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
            .collect();
        self.poly_trim(&out)
    }

    pub fn poly_sub(&self, a: &[ResidueInt], b: &[ResidueInt]) -> Vec<ResidueInt> {
        let n = a.len().max(b.len());
        let zero = ResidueInt::zero();
        let out: Vec<ResidueInt> = (0..n)
            .map(|i| self.sub(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
            .collect();
        self.poly_trim(&out)
    }

    /// Schoolbook product.
    pub fn poly_mul(&self, a: &[ResidueInt], b: &[ResidueInt]) -> Vec<ResidueInt> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut acc = vec![BigUint::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                acc[i + j] += x.value() * y.value();
            }
        }
        let out: Vec<ResidueInt> = acc.into_iter().map(|c| self.residue(c)).collect();
        self.poly_trim(&out)
    }

    /// Quotient and remainder by a monic divisor.
    pub fn poly_divrem_monic(
        &self,
        a: &[ResidueInt],
        f: &[ResidueInt],
    ) -> Result<(Vec<ResidueInt>, Vec<ResidueInt>)> {
        let f = self.poly_trim(f);
        let Some(d) = f.len().checked_sub(1) else {
            return Err(Error::ZeroInput);
        };
        if f[d] != ResidueInt::one() {
            return Err(Error::BadInput("divisor must be monic".into()));
        }
        let mut r: Vec<ResidueInt> = self.poly_trim(a);
        if r.len() <= d {
            return Ok((Vec::new(), r));
        }
        let mut q = vec![ResidueInt::zero(); r.len() - d];
        for k in (d..r.len()).rev() {
            let c = std::mem::replace(&mut r[k], ResidueInt::zero());
            if c.is_zero() {
                continue;
            }
            for (j, fj) in f[..d].iter().enumerate() {
                let t = self.residue(c.value() * fj.value());
                r[k - d + j] = self.sub(&r[k - d + j], &t);
            }
            q[k - d] = c;
        }
        r.truncate(d);
        Ok((self.poly_trim(&q), self.poly_trim(&r)))
    }

    /// `X^s - 1`.
    pub fn x_pow_minus_one(&self, s: usize) -> Vec<ResidueInt> {
        let mut h = vec![ResidueInt::zero(); s + 1];
        h[0] = self.residue_signed(-1);
        h[s] = ResidueInt::one();
        h
    }

    /// Coefficients reduced into this context.
    pub fn poly_reduce(&self, a: &[ResidueInt]) -> Vec<ResidueInt> {
        let out: Vec<ResidueInt> = a.iter().map(|c| self.residue(c.value().clone())).collect();
        self.poly_trim(&out)
    }
}
