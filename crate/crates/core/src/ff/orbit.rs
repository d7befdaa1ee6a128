//! Frobenius orbits and the minimal polynomials they expand to.

use super::poly::{FFPoly, PolyRing};
use super::Field;
use crate::error::{Error, Result};

/// `[β, β^p, β^{p²}, …]`, stopping before the first repeat of `β`.
///
/// The length is the degree of `F_p(β)` over `F_p` and divides the field
/// degree.
pub fn frobenius_orbit<F: Field>(field: &F, beta: &F::Elem) -> Result<Vec<F::Elem>> {
    let mut orbit = vec![beta.clone()];
    loop {
        let next = field.frobenius(orbit.last().unwrap());
        if next == *beta {
            return Ok(orbit);
        }
        if orbit.len() >= field.degree() {
            return Err(Error::OrbitNotClosed);
        }
        orbit.push(next);
    }
}

/// Minimal polynomial of `β` over `F_p`, as `∏ (Y - β^{p^j})` over the orbit.
pub fn minimal_poly_from_orbit<F: Field>(field: &F, beta: &F::Elem) -> Result<FFPoly<u64>> {
    let orbit = frobenius_orbit(field, beta)?;
    let ring = PolyRing::new(field);
    let product = orbit.iter().fold(ring.one(), |acc, root| {
        let linear = ring.from_coeffs(vec![field.neg(root), field.one()]);
        ring.mul(&acc, &linear)
    });
    ring.to_prime(&product).ok_or(Error::OrbitNotClosed)
}
