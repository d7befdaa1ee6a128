//! Finite fields of odd characteristic.
//!
//! Three concrete fields implement [`Field`]:
//!
//! * [`PrimeField`]: `F_p` with `u64` elements;
//! * [`FField`]: a flat extension `F_p[Y]/f`, elements are dense coefficient
//!   vectors;
//! * [`Quotient`]: `F[X]/g` over any other [`Field`], used for the transient
//!   towers built while adjoining roots of unity.
//!
//! Polynomials over any of them live in [`poly`]. Frobenius orbits and
//! orbit-product minimal polynomials are in [`orbit`].

mod ext;
pub mod orbit;
pub mod poly;
mod quotient;

use std::fmt::Debug;

use num_bigint::BigUint;
use rand::Rng;

use crate::counter::MulCounter;

pub use ext::FField;
pub use orbit::{frobenius_orbit, minimal_poly_from_orbit};
pub use poly::{FFPoly, PolyRing};
pub use quotient::Quotient;

/// A finite field of characteristic `p`, with instrumented multiplication.
pub trait Field: Clone + Debug {
    type Elem: Clone + PartialEq + Eq + Debug;

    fn characteristic(&self) -> u64;
    /// Degree over the prime field.
    fn degree(&self) -> usize;
    fn counter(&self) -> &MulCounter;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    /// Image of an integer under the prime-field embedding.
    fn from_int(&self, x: u64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Uniformly random element.
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    /// The element as a prime-field residue, if it lies in `F_p`.
    fn as_prime(&self, a: &Self::Elem) -> Option<u64>;

    /// Number of elements, `p^degree`.
    fn order(&self) -> BigUint {
        BigUint::from(self.characteristic()).pow(self.degree() as u32)
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, e: &BigUint) -> Self::Elem {
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    fn pow_u64(&self, a: &Self::Elem, e: u64) -> Self::Elem {
        self.pow(a, &BigUint::from(e))
    }

    /// `a ↦ a^p`.
    fn frobenius(&self, a: &Self::Elem) -> Self::Elem {
        self.pow_u64(a, self.characteristic())
    }
}

/// `F_p` for a prime `p < 2^32`.
#[derive(Clone, Debug)]
pub struct PrimeField {
    p: u64,
    counter: MulCounter,
}

impl PrimeField {
    /// `p` must be prime; callers validate.
    pub fn new(p: u64, counter: MulCounter) -> Self {
        assert!((2..1 << 32).contains(&p), "prime field modulus out of range");
        Self { p, counter }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub(crate) fn inv_u64(&self, a: u64) -> Option<u64> {
        let a = a % self.p;
        if a == 0 {
            return None;
        }
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Some(t0.rem_euclid(self.p as i64) as u64)
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn characteristic(&self) -> u64 {
        self.p
    }
    fn degree(&self) -> usize {
        1
    }
    fn counter(&self) -> &MulCounter {
        &self.counter
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_int(&self, x: u64) -> u64 {
        x % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        self.counter.add(1);
        a * b % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        self.inv_u64(*a)
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }
    fn as_prime(&self, a: &u64) -> Option<u64> {
        Some(*a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_basics() {
        let f = PrimeField::new(19, MulCounter::new());
        assert_eq!(f.mul(&5, &4), 1);
        assert_eq!(f.inv(&5), Some(4));
        assert_eq!(f.inv(&0), None);
        assert_eq!(f.sub(&3, &5), 17);
        assert_eq!(f.pow_u64(&4, 2), 16);
        assert_eq!(f.pow_u64(&2, 18), 1);
        assert_eq!(f.order(), BigUint::from(19u32));
    }
}
