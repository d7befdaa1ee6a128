use rand::Rng;

use super::poly::{FFPoly, PolyRing};
use super::Field;
use crate::counter::MulCounter;
use crate::error::{Error, Result};

/// The field `F[X]/g` for a monic irreducible `g` over another field `F`.
#[derive(Clone, Debug)]
pub struct Quotient<F: Field> {
    base: F,
    modulus: FFPoly<F::Elem>,
}

impl<F: Field> Quotient<F> {
    /// Certifies irreducibility of `modulus` over `base`.
    pub fn new(base: F, modulus: FFPoly<F::Elem>) -> Result<Self> {
        let ring = PolyRing::new(&base);
        let modulus = ring.monic(&modulus);
        if !ring.is_irreducible(&modulus) {
            return Err(Error::Reducible(base.characteristic()));
        }
        Ok(Self { base, modulus })
    }

    /// `F[X]/(X - r)`, a copy of `F` in which `r` is the class of `X`.
    pub fn trivial(base: F, root: &F::Elem) -> Self {
        let modulus = PolyRing::new(&base).binomial(1, root);
        Self { base, modulus }
    }

    pub fn base(&self) -> &F {
        &self.base
    }

    pub fn modulus(&self) -> &FFPoly<F::Elem> {
        &self.modulus
    }

    /// Relative degree over the base field.
    pub fn relative_degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    /// The class of `X`.
    pub fn generator(&self) -> Vec<F::Elem> {
        self.from_poly(&PolyRing::new(&self.base).monomial(1))
    }

    pub fn embed(&self, c: &F::Elem) -> Vec<F::Elem> {
        let mut v = self.zero();
        v[0] = c.clone();
        v
    }

    pub fn from_poly(&self, poly: &FFPoly<F::Elem>) -> Vec<F::Elem> {
        let ring = PolyRing::new(&self.base);
        let mut out = ring.rem(poly, &self.modulus).into_coeffs();
        out.resize(self.relative_degree(), self.base.zero());
        out
    }

    pub fn to_poly(&self, a: &[F::Elem]) -> FFPoly<F::Elem> {
        PolyRing::new(&self.base).from_coeffs(a.to_vec())
    }
}

impl<F: Field> Field for Quotient<F> {
    type Elem = Vec<F::Elem>;

    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }

    fn degree(&self) -> usize {
        self.base.degree() * self.relative_degree()
    }

    fn counter(&self) -> &MulCounter {
        self.base.counter()
    }

    fn zero(&self) -> Self::Elem {
        vec![self.base.zero(); self.relative_degree()]
    }

    fn one(&self) -> Self::Elem {
        self.embed(&self.base.one())
    }

    fn from_int(&self, x: u64) -> Self::Elem {
        self.embed(&self.base.from_int(x))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.iter().all(|c| self.base.is_zero(c))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| self.base.add(x, y)).collect()
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| self.base.sub(x, y)).collect()
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|x| self.base.neg(x)).collect()
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let e = self.relative_degree();
        let mut acc = vec![self.base.zero(); 2 * e - 1];
        for (i, x) in a.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if self.base.is_zero(y) {
                    continue;
                }
                acc[i + j] = self.base.add(&acc[i + j], &self.base.mul(x, y));
            }
        }
        let low = &self.modulus.coeffs()[..e];
        for k in (e..2 * e - 1).rev() {
            if self.base.is_zero(&acc[k]) {
                continue;
            }
            let c = std::mem::replace(&mut acc[k], self.base.zero());
            for (j, gj) in low.iter().enumerate() {
                if !self.base.is_zero(gj) {
                    let t = self.base.mul(&c, gj);
                    acc[k - e + j] = self.base.sub(&acc[k - e + j], &t);
                }
            }
        }
        acc.truncate(e);
        acc
    }

    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if self.is_zero(a) {
            return None;
        }
        let ring = PolyRing::new(&self.base);
        let (g, u, _) = ring.ext_gcd(&self.to_poly(a), &self.modulus);
        debug_assert_eq!(g.degree(), Some(0));
        Some(self.from_poly(&u))
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        (0..self.relative_degree()).map(|_| self.base.random(rng)).collect()
    }

    fn as_prime(&self, a: &Self::Elem) -> Option<u64> {
        if a[1..].iter().all(|c| self.base.is_zero(c)) {
            self.base.as_prime(&a[0])
        } else {
            None
        }
    }
}
