//! Exact arithmetic in `Z/p^K` and in unramified quotient rings
//! `(Z/p^K)[X]/F`.
//!
//! Every value is kept as its canonical representative in `[0, p^K)`. When
//! `p^K < 2^56` the ring kernels run on machine words with lazy `u128`
//! accumulation, otherwise on `BigUint`; the choice is made once per
//! context and is invisible to callers.

mod poly;
mod ring;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::counter::MulCounter;
use crate::cyclotomic::is_prime;
use crate::error::{Error, Result};

pub use ring::{ExtensionDescriptor, RingElement, ScaledElement};

/// Moduli below this bound use the machine-word kernels.
pub(crate) const WORD_LIMIT: u64 = 1 << 56;

/// Prime `p`, precision `K` and the cached modulus `p^K`.
#[derive(Clone)]
pub struct PadicCtx {
    inner: Arc<CtxInner>,
}

struct CtxInner {
    p: u64,
    k: u32,
    pk: BigUint,
    word: Option<u64>,
    counter: MulCounter,
}

impl PadicCtx {
    /// `p` must be an odd prime below `2^32` and `k ≥ 1`.
    pub fn new(p: u64, k: u32) -> Result<Self> {
        Self::with_counter(p, k, MulCounter::new())
    }

    pub fn with_counter(p: u64, k: u32, counter: MulCounter) -> Result<Self> {
        if p == 2 {
            return Err(Error::EvenPrime);
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= 1 << 32 {
            return Err(Error::OutOfRange(p));
        }
        if k == 0 {
            return Err(Error::ZeroPrecision);
        }
        let pk = BigUint::from(p).pow(k);
        let word = pk.to_u64().filter(|&m| m < WORD_LIMIT);
        Ok(Self { inner: Arc::new(CtxInner { p, k, pk, word, counter }) })
    }

    /// Same prime and counter at another precision.
    pub fn with_precision(&self, k: u32) -> Result<Self> {
        Self::with_counter(self.p(), k, self.counter().clone())
    }

    pub fn p(&self) -> u64 {
        self.inner.p
    }

    pub fn precision(&self) -> u32 {
        self.inner.k
    }

    /// `p^K`.
    pub fn modulus(&self) -> &BigUint {
        &self.inner.pk
    }

    pub fn counter(&self) -> &MulCounter {
        &self.inner.counter
    }

    pub(crate) fn word_modulus(&self) -> Option<u64> {
        self.inner.word
    }

    /// Canonical residue of an arbitrary nonnegative integer.
    pub fn residue(&self, x: impl Into<BigUint>) -> ResidueInt {
        ResidueInt(x.into() % self.modulus())
    }

    /// Canonical residue of a signed integer.
    pub fn residue_signed(&self, x: i64) -> ResidueInt {
        let r = self.residue(x.unsigned_abs());
        if x < 0 {
            self.neg(&r)
        } else {
            r
        }
    }

    pub fn add(&self, a: &ResidueInt, b: &ResidueInt) -> ResidueInt {
        self.residue(&a.0 + &b.0)
    }

    pub fn sub(&self, a: &ResidueInt, b: &ResidueInt) -> ResidueInt {
        if a.0 >= b.0 {
            ResidueInt(&a.0 - &b.0)
        } else {
            ResidueInt(self.modulus() - &b.0 + &a.0)
        }
    }

    pub fn neg(&self, a: &ResidueInt) -> ResidueInt {
        if a.0.is_zero() {
            a.clone()
        } else {
            ResidueInt(self.modulus() - &a.0)
        }
    }

    pub fn mul(&self, a: &ResidueInt, b: &ResidueInt) -> ResidueInt {
        self.counter().add(1);
        self.residue(&a.0 * &b.0)
    }

    /// Inverse of a unit: inverse mod `p`, then Newton doubling
    /// `w ← w(2 - uw)` up to `p^K`.
    pub fn residue_inverse(&self, u: &ResidueInt) -> Result<ResidueInt> {
        let p = self.p();
        let low = (&u.0 % p).to_u64().unwrap();
        let w0 = crate::ff::PrimeField::new(p, self.counter().clone())
            .inv_u64(low)
            .ok_or(Error::NonUnit)?;
        let m = self.modulus();
        let two = BigUint::from(2u32);
        let mut w = BigUint::from(w0);
        let mut precision = 1;
        while precision < self.precision() {
            let uw = (&u.0 * &w) % m;
            let correction = (&two + m - uw) % m;
            w = (w * correction) % m;
            precision *= 2;
        }
        Ok(ResidueInt(w))
    }

    /// Factors the smallest valuation out of a batch of `p^{e_i}·c_i`.
    ///
    /// Returns `(e, mantissas)` with `p^e · mantissa_i ≡ p^{e_i} c_i` modulo
    /// `p^{K+e}`. An all-zero batch gives exponent 0.
    pub fn scale_normalize(&self, coeffs: &[(i64, ResidueInt)]) -> (i64, Vec<ResidueInt>) {
        let min = coeffs
            .iter()
            .filter_map(|(e, c)| c.valuation(self.p()).map(|v| e + v as i64))
            .min();
        let Some(min) = min else {
            return (0, vec![ResidueInt::zero(); coeffs.len()]);
        };
        let mantissas = coeffs
            .iter()
            .map(|(e, c)| {
                if c.is_zero() {
                    return ResidueInt::zero();
                }
                let shift = e - min;
                if shift >= 0 {
                    let scale = BigUint::from(self.p()).pow(shift as u32);
                    self.residue(&c.0 * scale)
                } else {
                    let scale = BigUint::from(self.p()).pow((-shift) as u32);
                    self.residue(&c.0 / scale)
                }
            })
            .collect();
        (min, mantissas)
    }
}

impl PartialEq for PadicCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p() == other.p() && self.precision() == other.precision()
    }
}

impl Eq for PadicCtx {}

impl fmt::Debug for PadicCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PadicCtx({}^{})", self.p(), self.precision())
    }
}

/// A canonical element of `Z/p^K`, i.e. an integer in `[0, p^K)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ResidueInt(BigUint);

impl ResidueInt {
    pub fn zero() -> Self {
        Self(BigUint::zero())
    }

    pub fn one() -> Self {
        Self(BigUint::one())
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_value(self) -> BigUint {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `p`-adic valuation, `None` for zero.
    pub fn valuation(&self, p: u64) -> Option<u32> {
        if self.0.is_zero() {
            return None;
        }
        let p = BigUint::from(p);
        let mut x = self.0.clone();
        let mut v = 0;
        loop {
            let (q, r) = x.div_rem(&p);
            if !r.is_zero() {
                return Some(v);
            }
            x = q;
            v += 1;
        }
    }

    pub(crate) fn from_canonical(x: BigUint) -> Self {
        Self(x)
    }
}

impl fmt::Display for ResidueInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<u64> for ResidueInt {
    /// Callers must pass a value already below `p^K`.
    fn from(x: u64) -> Self {
        Self(BigUint::from(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ctx_validation() {
        assert_eq!(PadicCtx::new(2, 3).unwrap_err(), Error::EvenPrime);
        assert_eq!(PadicCtx::new(9, 3).unwrap_err(), Error::NotPrime(9));
        assert_eq!(PadicCtx::new(3, 0).unwrap_err(), Error::ZeroPrecision);
        let ctx = PadicCtx::new(3, 4).unwrap();
        assert_eq!(ctx.modulus(), &BigUint::from(81u32));
        assert_eq!(ctx.word_modulus(), Some(81));
        assert_eq!(PadicCtx::new(19, 32).unwrap().word_modulus(), None);
    }

    #[test]
    fn residue_inverse_examples() {
        let ctx = PadicCtx::new(3, 4).unwrap();
        assert_eq!(ctx.residue_inverse(&1.into()).unwrap(), 1.into());
        assert_eq!(ctx.residue_inverse(&2.into()).unwrap(), 41.into());
        assert_eq!(ctx.residue_inverse(&3.into()).unwrap_err(), Error::NonUnit);
        let ctx = PadicCtx::new(19, 2).unwrap();
        assert_eq!(ctx.residue_inverse(&5.into()).unwrap(), 289.into());
    }

    #[test]
    fn residue_inverse_at_many_precisions() {
        for k in [1, 2, 8, 32] {
            for p in [3u64, 5, 19] {
                let ctx = PadicCtx::new(p, k).unwrap();
                for u in [1u64, 2, 4, 7, 10, 123_456_789] {
                    let u = ctx.residue(u);
                    if u.valuation(p) != Some(0) {
                        continue;
                    }
                    let w = ctx.residue_inverse(&u).unwrap();
                    assert_eq!(ctx.mul(&u, &w), ResidueInt::one(), "p={p} k={k}");
                }
            }
        }
    }

    #[test]
    fn scale_normalize_examples() {
        let ctx = PadicCtx::new(3, 4).unwrap();
        let r = |x: u64| ResidueInt::from(x);
        assert_eq!(ctx.scale_normalize(&[(0, r(1)), (0, r(2))]), (0, vec![r(1), r(2)]));
        assert_eq!(ctx.scale_normalize(&[(1, r(1)), (0, r(1))]), (0, vec![r(3), r(1)]));
        assert_eq!(ctx.scale_normalize(&[(2, r(1)), (3, r(1))]), (2, vec![r(1), r(3)]));
        assert_eq!(ctx.scale_normalize(&[(5, r(0)), (1, r(0))]), (0, vec![r(0), r(0)]));
        // valuation inside the mantissa counts too
        assert_eq!(ctx.scale_normalize(&[(0, r(9)), (0, r(3))]), (1, vec![r(3), r(1)]));
        assert_eq!(ctx.scale_normalize(&[(-2, r(1)), (0, r(1))]), (-2, vec![r(1), r(9)]));
    }

    #[test]
    fn signed_residues() {
        let ctx = PadicCtx::new(3, 4).unwrap();
        assert_eq!(ctx.residue_signed(-1), 80.into());
        assert_eq!(ctx.residue_signed(-82), 80.into());
        assert_eq!(ctx.sub(&1.into(), &2.into()), 80.into());
        assert_eq!(ctx.neg(&0.into()), 0.into());
    }
}
