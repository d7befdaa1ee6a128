use rand::Rng;

use super::poly::{FFPoly, PolyRing};
use super::{Field, PrimeField};
use crate::counter::MulCounter;
use crate::cyclotomic::is_prime;
use crate::error::{Error, Result};

/// The field `F_p[Y]/f` for a monic irreducible `f`.
///
/// Elements are coefficient vectors of length `deg f`, constant term first.
/// Degree one is allowed and gives a copy of `F_p`.
#[derive(Clone, Debug)]
pub struct FField {
    base: PrimeField,
    modulus: FFPoly<u64>,
    /// `p - f_j` for `j < d`, so reduction only adds.
    neg_low: Vec<u64>,
    /// `d² + (d-1)·nnz(neg_low)`, charged per product regardless of data.
    mul_cost: u64,
}

impl FField {
    /// Certifies irreducibility of `modulus` before accepting it.
    pub fn new(p: u64, modulus: FFPoly<u64>, counter: MulCounter) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= 1 << 32 {
            return Err(Error::OutOfRange(p));
        }
        let base = PrimeField::new(p, counter);
        let ring = PolyRing::new(&base);
        let modulus = ring.monic(&FFPoly::from_residues(p, modulus.coeffs()));
        if !ring.is_irreducible(&modulus) {
            return Err(Error::Reducible(p));
        }
        let d = modulus.degree().unwrap();
        let neg_low = modulus.coeffs()[..d].iter().map(|&c| (p - c) % p).collect();
        let nonzero = modulus.coeffs()[..d].iter().filter(|&&c| c != 0).count();
        let mul_cost = (d * d + (d - 1) * nonzero) as u64;
        Ok(Self { base, modulus, neg_low, mul_cost })
    }

    /// `F_p` presented as `F_p[Y]/(Y)`.
    pub fn prime(p: u64, counter: MulCounter) -> Result<Self> {
        Self::new(p, FFPoly::from_residues(p, &[0, 1]), counter)
    }

    pub fn p(&self) -> u64 {
        self.base.p()
    }

    pub fn modulus(&self) -> &FFPoly<u64> {
        &self.modulus
    }

    pub fn prime_field(&self) -> &PrimeField {
        &self.base
    }

    /// The class of `Y`.
    pub fn generator(&self) -> Vec<u64> {
        let mut g = vec![0; self.degree()];
        if self.degree() == 1 {
            g[0] = self.neg_low[0];
        } else {
            g[1] = 1;
        }
        g
    }

    /// Element from an arbitrary polynomial in `Y` (reduced mod `f`).
    pub fn from_poly(&self, poly: &FFPoly<u64>) -> Vec<u64> {
        let ring = PolyRing::new(&self.base);
        let r = ring.rem(poly, &self.modulus);
        let mut out = r.into_coeffs();
        out.resize(self.degree(), 0);
        out
    }

    pub fn to_poly(&self, a: &[u64]) -> FFPoly<u64> {
        FFPoly::from_residues(self.p(), a)
    }
}

impl Field for FField {
    type Elem = Vec<u64>;

    fn characteristic(&self) -> u64 {
        self.p()
    }

    fn degree(&self) -> usize {
        self.neg_low.len()
    }

    fn counter(&self) -> &MulCounter {
        self.base.counter()
    }

    fn zero(&self) -> Vec<u64> {
        vec![0; self.degree()]
    }

    fn one(&self) -> Vec<u64> {
        self.from_int(1)
    }

    fn from_int(&self, x: u64) -> Vec<u64> {
        let mut v = self.zero();
        v[0] = x % self.p();
        v
    }

    fn is_zero(&self, a: &Vec<u64>) -> bool {
        a.iter().all(|&c| c == 0)
    }

    fn add(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| self.base.add(x, y)).collect()
    }

    fn sub(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| self.base.sub(x, y)).collect()
    }

    fn neg(&self, a: &Vec<u64>) -> Vec<u64> {
        a.iter().map(|x| self.base.neg(x)).collect()
    }

    fn mul(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let d = self.degree();
        let p = self.p() as u128;
        let mut acc = vec![0u128; 2 * d - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                acc[i + j] += x as u128 * y as u128;
            }
        }
        for k in (d..2 * d - 1).rev() {
            let c = acc[k] % p;
            if c == 0 {
                continue;
            }
            for (j, &nf) in self.neg_low.iter().enumerate() {
                acc[k - d + j] += c * nf as u128;
            }
        }
        self.counter().add(self.mul_cost);
        acc[..d].iter().map(|&c| (c % p) as u64).collect()
    }

    fn inv(&self, a: &Vec<u64>) -> Option<Vec<u64>> {
        if self.is_zero(a) {
            return None;
        }
        let ring = PolyRing::new(&self.base);
        let (g, u, _) = ring.ext_gcd(&self.to_poly(a), &self.modulus);
        debug_assert_eq!(g.degree(), Some(0));
        Some(self.from_poly(&u))
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<u64> {
        (0..self.degree()).map(|_| self.base.random(rng)).collect()
    }

    fn as_prime(&self, a: &Vec<u64>) -> Option<u64> {
        a[1..].iter().all(|&c| c == 0).then_some(a[0])
    }
}
