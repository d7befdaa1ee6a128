//! Dense univariate polynomials over a [`Field`].

use std::fmt;

use num_bigint::BigUint;
use rand::Rng;

use super::{Field, PrimeField};
use crate::error::{Error, Result};

/// Coefficients, constant term first, with no trailing zeros. The zero
/// polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FFPoly<E> {
    coeffs: Vec<E>,
}

impl<E> FFPoly<E> {
    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&E> {
        self.coeffs.last()
    }
}

impl FFPoly<u64> {
    /// Polynomial over `F_p` from residues (reduced mod `p`, trimmed).
    pub fn from_residues(p: u64, coeffs: &[u64]) -> Self {
        let mut coeffs: Vec<u64> = coeffs.iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Reduction mod `p` of an integer polynomial.
    pub fn from_integers(p: u64, coeffs: &[i64]) -> Self {
        let reduced: Vec<u64> = coeffs
            .iter()
            .map(|&c| c.rem_euclid(p as i64) as u64)
            .collect();
        Self::from_residues(p, &reduced)
    }
}

/// Renders highest degree first in the variable `X`, e.g. `X^2 + 5*X + 1`.
impl fmt::Display for FFPoly<u64> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "X")?,
                (1, c) => write!(f, "{c}*X")?,
                (i, 1) => write!(f, "X^{i}")?,
                (i, c) => write!(f, "{c}*X^{i}")?,
            }
        }
        Ok(())
    }
}

/// Polynomial arithmetic over a borrowed field.
#[derive(Clone, Copy, Debug)]
pub struct PolyRing<'a, F: Field> {
    field: &'a F,
}

impl<'a, F: Field> PolyRing<'a, F> {
    pub fn new(field: &'a F) -> Self {
        Self { field }
    }

    pub fn field(&self) -> &'a F {
        self.field
    }

    pub fn from_coeffs(&self, mut coeffs: Vec<F::Elem>) -> FFPoly<F::Elem> {
        while coeffs.last().is_some_and(|c| self.field.is_zero(c)) {
            coeffs.pop();
        }
        FFPoly { coeffs }
    }

    pub fn zero(&self) -> FFPoly<F::Elem> {
        FFPoly { coeffs: Vec::new() }
    }

    pub fn one(&self) -> FFPoly<F::Elem> {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: F::Elem) -> FFPoly<F::Elem> {
        self.from_coeffs(vec![c])
    }

    /// `X^k`.
    pub fn monomial(&self, k: usize) -> FFPoly<F::Elem> {
        let mut coeffs = vec![self.field.zero(); k + 1];
        coeffs[k] = self.field.one();
        FFPoly { coeffs }
    }

    /// `X^k - c`.
    pub fn binomial(&self, k: usize, c: &F::Elem) -> FFPoly<F::Elem> {
        let mut coeffs = vec![self.field.zero(); k + 1];
        coeffs[k] = self.field.one();
        coeffs[0] = self.field.sub(&coeffs[0], c);
        self.from_coeffs(coeffs)
    }

    /// Image of a polynomial over `F_p` under the prime-field embedding.
    pub fn from_prime(&self, poly: &FFPoly<u64>) -> FFPoly<F::Elem> {
        self.from_coeffs(poly.coeffs.iter().map(|&c| self.field.from_int(c)).collect())
    }

    /// Coefficients mapped back to `F_p`, if they all lie there.
    pub fn to_prime(&self, poly: &FFPoly<F::Elem>) -> Option<FFPoly<u64>> {
        let coeffs = poly
            .coeffs
            .iter()
            .map(|c| self.field.as_prime(c))
            .collect::<Option<Vec<_>>>()?;
        Some(FFPoly { coeffs })
    }

    pub fn add(&self, a: &FFPoly<F::Elem>, b: &FFPoly<F::Elem>) -> FFPoly<F::Elem> {
        let n = a.coeffs.len().max(b.coeffs.len());
        let zero = self.field.zero();
        let coeffs = (0..n)
            .map(|i| {
                let x = a.coeffs.get(i).unwrap_or(&zero);
                let y = b.coeffs.get(i).unwrap_or(&zero);
                self.field.add(x, y)
            })
            .collect();
        self.from_coeffs(coeffs)
    }

    pub fn sub(&self, a: &FFPoly<F::Elem>, b: &FFPoly<F::Elem>) -> FFPoly<F::Elem> {
        let n = a.coeffs.len().max(b.coeffs.len());
        let zero = self.field.zero();
        let coeffs = (0..n)
            .map(|i| {
                let x = a.coeffs.get(i).unwrap_or(&zero);
                let y = b.coeffs.get(i).unwrap_or(&zero);
                self.field.sub(x, y)
            })
            .collect();
        self.from_coeffs(coeffs)
    }

    pub fn scale(&self, a: &FFPoly<F::Elem>, c: &F::Elem) -> FFPoly<F::Elem> {
        self.from_coeffs(a.coeffs.iter().map(|x| self.field.mul(x, c)).collect())
    }

    pub fn mul(&self, a: &FFPoly<F::Elem>, b: &FFPoly<F::Elem>) -> FFPoly<F::Elem> {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let mut out = vec![self.field.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.field.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if self.field.is_zero(y) {
                    continue;
                }
                out[i + j] = self.field.add(&out[i + j], &self.field.mul(x, y));
            }
        }
        self.from_coeffs(out)
    }

    /// Quotient and remainder; `b` must be nonzero.
    pub fn divrem(
        &self,
        a: &FFPoly<F::Elem>,
        b: &FFPoly<F::Elem>,
    ) -> (FFPoly<F::Elem>, FFPoly<F::Elem>) {
        let db = b.degree().expect("division by the zero polynomial");
        let lead = b.coeffs[db].clone();
        let lead_inv = if self.field.is_one(&lead) {
            None
        } else {
            Some(self.field.inv(&lead).expect("nonzero leading coefficient"))
        };
        let mut rem = a.coeffs.clone();
        if rem.len() <= db {
            return (self.zero(), self.from_coeffs(rem));
        }
        let mut quot = vec![self.field.zero(); rem.len() - db];
        for k in (db..rem.len()).rev() {
            if self.field.is_zero(&rem[k]) {
                continue;
            }
            let c = match &lead_inv {
                Some(li) => self.field.mul(&rem[k], li),
                None => rem[k].clone(),
            };
            for (j, bj) in b.coeffs[..db].iter().enumerate() {
                if self.field.is_zero(bj) {
                    continue;
                }
                let t = self.field.mul(&c, bj);
                rem[k - db + j] = self.field.sub(&rem[k - db + j], &t);
            }
            rem[k] = self.field.zero();
            quot[k - db] = c;
        }
        rem.truncate(db);
        (self.from_coeffs(quot), self.from_coeffs(rem))
    }

    pub fn rem(&self, a: &FFPoly<F::Elem>, b: &FFPoly<F::Elem>) -> FFPoly<F::Elem> {
        self.divrem(a, b).1
    }

    /// Scales to leading coefficient one; zero stays zero.
    pub fn monic(&self, a: &FFPoly<F::Elem>) -> FFPoly<F::Elem> {
        match a.leading() {
            None => self.zero(),
            Some(l) if self.field.is_one(l) => a.clone(),
            Some(l) => {
                let li = self.field.inv(l).expect("nonzero leading coefficient");
                self.scale(a, &li)
            }
        }
    }

    /// Monic greatest common divisor by Euclid; `gcd(0, 0) = 0`.
    pub fn gcd(&self, a: &FFPoly<F::Elem>, b: &FFPoly<F::Elem>) -> FFPoly<F::Elem> {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = self.rem(&x, &y);
            x = y;
            y = r;
        }
        self.monic(&x)
    }

    /// Returns `(g, u, v)` with `u·a + v·b = g` and `g` the monic gcd.
    pub fn ext_gcd(
        &self,
        a: &FFPoly<F::Elem>,
        b: &FFPoly<F::Elem>,
    ) -> (FFPoly<F::Elem>, FFPoly<F::Elem>, FFPoly<F::Elem>) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut u0, mut u1) = (self.one(), self.zero());
        let (mut v0, mut v1) = (self.zero(), self.one());
        while !r1.is_zero() {
            let (q, r) = self.divrem(&r0, &r1);
            let u2 = self.sub(&u0, &self.mul(&q, &u1));
            let v2 = self.sub(&v0, &self.mul(&q, &v1));
            (r0, r1) = (r1, r);
            (u0, u1) = (u1, u2);
            (v0, v1) = (v1, v2);
        }
        match r0.leading() {
            None => (r0, u0, v0),
            Some(l) => {
                let li = self.field.inv(l).expect("nonzero leading coefficient");
                (self.scale(&r0, &li), self.scale(&u0, &li), self.scale(&v0, &li))
            }
        }
    }

    pub fn mulmod(
        &self,
        a: &FFPoly<F::Elem>,
        b: &FFPoly<F::Elem>,
        f: &FFPoly<F::Elem>,
    ) -> FFPoly<F::Elem> {
        self.rem(&self.mul(a, b), f)
    }

    /// `g^e mod f` by left-to-right square and multiply.
    pub fn modpow(
        &self,
        g: &FFPoly<F::Elem>,
        e: &BigUint,
        f: &FFPoly<F::Elem>,
    ) -> FFPoly<F::Elem> {
        let base = self.rem(g, f);
        let mut acc = self.rem(&self.one(), f);
        for i in (0..e.bits()).rev() {
            acc = self.mulmod(&acc, &acc, f);
            if e.bit(i) {
                acc = self.mulmod(&acc, &base, f);
            }
        }
        acc
    }

    pub fn eval(&self, a: &FFPoly<F::Elem>, x: &F::Elem) -> F::Elem {
        a.coeffs.iter().rev().fold(self.field.zero(), |acc, c| {
            self.field.add(&self.field.mul(&acc, x), c)
        })
    }

    /// Uniform monic polynomial with `1 ≤ deg < deg_bound`: every monic
    /// polynomial in that range is equally likely, so degree `k` is drawn
    /// with weight `q^k`.
    pub fn random_monic<R: Rng + ?Sized>(
        &self,
        deg_bound: usize,
        rng: &mut R,
    ) -> Result<FFPoly<F::Elem>> {
        if deg_bound < 2 {
            return Err(Error::DegreeTooSmall(deg_bound));
        }
        // A uniform polynomial of degree < deg_bound, normalized, hits each
        // monic polynomial of positive degree exactly q - 1 times.
        loop {
            let raw: Vec<F::Elem> = (0..deg_bound).map(|_| self.field.random(rng)).collect();
            let poly = self.from_coeffs(raw);
            if poly.degree().unwrap_or(0) >= 1 {
                return Ok(self.monic(&poly));
            }
        }
    }

    /// Rabin's test: `X^{q^n} ≡ X (mod f)` and `gcd(X^{q^{n/ℓ}} - X, f) = 1`
    /// for each prime `ℓ | n`, where `q` is the field order and `n = deg f`.
    pub fn is_irreducible(&self, f: &FFPoly<F::Elem>) -> bool {
        let Some(n) = f.degree() else { return false };
        if n == 0 {
            return false;
        }
        if n == 1 {
            return true;
        }
        let f = self.monic(f);
        let q = self.field.order();
        let x = self.monomial(1);
        let frob_power = |k: usize| {
            let mut acc = self.rem(&x, &f);
            for _ in 0..k {
                acc = self.modpow(&acc, &q, &f);
            }
            acc
        };
        if self.sub(&frob_power(n), &x).degree().is_some() {
            return false;
        }
        crate::cyclotomic::factorize(n as u64).iter().all(|&(l, _)| {
            let h = self.sub(&frob_power(n / l as usize), &x);
            self.gcd(&h, &f).degree() == Some(0)
        })
    }
}

impl PolyRing<'_, PrimeField> {
    /// Polynomial over `F_p` from plain residues.
    pub fn from_u64(&self, coeffs: &[u64]) -> FFPoly<u64> {
        FFPoly::from_residues(self.field.p(), coeffs)
    }
}
