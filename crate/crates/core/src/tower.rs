//! Primitive roots of unity over `F_p`, built one prime power at a time.
//!
//! For `s = ∏ p_i^{v_i}` the field `F_p(ζ_s)` is reached through the chain
//! `F_p(ζ_a) ⊂ F_p(ζ_a, ζ_{p_i}) ⊂ … ⊂ F_p(ζ_a, ζ_{p_i^{v_i}})`. Each step
//! either splits completely (Cantor–Zassenhaus with `e = 1`), or is taken
//! as a quotient by a factor of the step polynomial. Whenever a step really
//! extends the field, the result is flattened back to a single generator
//! `Y = ζ_a·ζ_{p_i^v}` via its Frobenius orbit.

use num_bigint::BigUint;
use num_integer::Integer;
use rand::Rng;

use crate::counter::MulCounter;
use crate::cyclotomic::{cyclotomic_polynomial, is_prime, tower_step_degree, FactoredOrder};
use crate::error::{Error, Result};
use crate::ff::{minimal_poly_from_orbit, FFPoly, FField, Field, PolyRing, Quotient};

/// One monic irreducible factor of degree `e` of `f`, which must be monic,
/// squarefree and a product of irreducibles of degree `e` over a field of
/// odd order `q`.
///
/// Each round draws a random monic `g` with `0 < deg g < deg f` and tries
/// `gcd(g, f)` and then `gcd(g^{(q^e-1)/2} - 1, f)`; the smaller proper
/// factor replaces `f`.
pub fn cz_split<F: Field, R: Rng + ?Sized>(
    field: &F,
    f: &FFPoly<F::Elem>,
    e: usize,
    rng: &mut R,
) -> Result<FFPoly<F::Elem>> {
    if field.characteristic() == 2 {
        return Err(Error::EvenCharacteristic);
    }
    let ring = PolyRing::new(field);
    let n = f.degree().unwrap_or(0);
    if e == 0 || n == 0 || n % e != 0 {
        return Err(Error::BadInput(format!("degree {n} is not a positive multiple of {e}")));
    }
    let mut current = ring.monic(f);
    let exponent = (field.order().pow(e as u32) - 1u32) / 2u32;
    let cap = 64 * (usize::BITS - (n - 1).leading_zeros()).max(1) as usize;
    let mut failures = 0;
    while current.degree().unwrap() > e {
        let size = current.degree().unwrap();
        let g = ring.random_monic(size, rng)?;
        let mut h = ring.gcd(&g, &current);
        if !is_proper(&h, size) {
            let w = ring.sub(&ring.modpow(&g, &exponent, &current), &ring.one());
            h = ring.gcd(&w, &current);
        }
        if !is_proper(&h, size) {
            failures += 1;
            if failures > cap {
                return Err(Error::RandomnessExhausted(cap));
            }
            continue;
        }
        let (cofactor, _) = ring.divrem(&current, &h);
        current = if h.degree() <= cofactor.degree() { h } else { ring.monic(&cofactor) };
    }
    Ok(current)
}

fn is_proper<E>(h: &FFPoly<E>, size: usize) -> bool {
    matches!(h.degree(), Some(k) if k > 0 && k < size)
}

/// `x^{-1} mod m` for coprime `x, m`; zero when `m = 1`.
fn inv_mod(x: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let eg = (x as i128).extended_gcd(&(m as i128));
    debug_assert_eq!(eg.gcd, 1);
    eg.x.rem_euclid(m as i128) as u64
}

/// A primitive `s`-th root of unity presented as `Y` in `F_p[Y]/f`.
#[derive(Clone, Debug)]
pub struct TowerRoot {
    s: u64,
    field: FField,
    zeta: Vec<u64>,
}

impl TowerRoot {
    pub fn s(&self) -> u64 {
        self.s
    }

    /// The irreducible factor `f` of `Φ_s` over `F_p`.
    pub fn modulus(&self) -> &FFPoly<u64> {
        self.field.modulus()
    }

    pub fn field(&self) -> &FField {
        &self.field
    }

    pub fn zeta(&self) -> &[u64] {
        &self.zeta
    }

    pub fn degree(&self) -> usize {
        self.field.degree()
    }
}

/// Loop state of the tower: `field = F_p(ζ_a)` with `ζ_a` given in it.
pub struct TowerState<R> {
    p: u64,
    field: FField,
    a: u64,
    zeta_a: Vec<u64>,
    rng: R,
}

impl<R: Rng> TowerState<R> {
    /// Starts from `F_p = F_p[Y]/(Y - 1)` and `a = 1`.
    pub fn new(p: u64, counter: MulCounter, rng: R) -> Result<Self> {
        if p == 2 {
            return Err(Error::EvenPrime);
        }
        let field = FField::new(p, FFPoly::from_residues(p, &[p - 1, 1]), counter)?;
        let zeta_a = field.one();
        Ok(Self { p, field, a: 1, zeta_a, rng })
    }

    pub fn field(&self) -> &FField {
        &self.field
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn zeta_a(&self) -> &[u64] {
        &self.zeta_a
    }

    /// Adjoins `ζ_{p0^big_v}` and moves to `a · p0^big_v`.
    pub fn adjoin_prime_power(&mut self, p0: u64, big_v: u32) -> Result<()> {
        let (p, a) = (self.p, self.a);
        if p0 == p {
            return Err(Error::NotCoprime { a: p0, b: p });
        }
        let steps = (1..=big_v)
            .map(|v| tower_step_degree(p, a, p0, v))
            .collect::<Result<Vec<u64>>>()?;
        let mut zeta_a = self.zeta_a.clone();
        let mut zeta_q = self.field.one();
        let mut v = 1;
        while v <= big_v {
            let e = steps[v as usize - 1];
            let field = self.field.clone();
            let ring = PolyRing::new(&field);
            let step_poly = if v == 1 {
                ring.from_prime(&FFPoly::from_integers(p, &cyclotomic_polynomial(p0)?))
            } else {
                ring.binomial(p0 as usize, &zeta_q)
            };
            if e == 1 {
                zeta_q = if v == 1 && p0 == 2 {
                    field.neg(&field.one())
                } else {
                    let linear = cz_split(&field, &step_poly, 1, &mut self.rng)?;
                    field.neg(&linear.coeffs()[0])
                };
                v += 1;
                continue;
            }
            // Every remaining step has full degree p0 exactly when the
            // binomial over the current field is irreducible.
            let span = big_v - v + 1;
            let rest: u64 = steps[v as usize - 1..].iter().product();
            let (quotient, reached) = if v >= 2 && rest == p0.pow(span) {
                let binomial = ring.binomial(p0.pow(span) as usize, &zeta_q);
                (Quotient::new(field.clone(), binomial)?, big_v)
            } else {
                let factor = cz_split(&field, &step_poly, e as usize, &mut self.rng)?;
                (Quotient::new(field.clone(), factor)?, v)
            };
            let q_order = p0.pow(reached);
            let beta = quotient.mul(&quotient.embed(&zeta_a), &quotient.generator());
            let minimal = minimal_poly_from_orbit(&quotient, &beta)?;
            let flat = FField::new(p, minimal, field.counter().clone())?;
            let y = flat.generator();
            zeta_q = flat.pow(&y, &(BigUint::from(a) * inv_mod(a % q_order, q_order)));
            zeta_a = flat.pow(&y, &(BigUint::from(q_order) * inv_mod(q_order % a, a)));
            self.field = flat;
            v = reached + 1;
        }
        self.zeta_a = self.field.mul(&zeta_a, &zeta_q);
        self.a = a * p0.pow(big_v);
        Ok(())
    }

    /// Rebases so that `ζ_a` is the generator `Y`, and checks primitivity.
    pub fn finish(self) -> Result<TowerRoot> {
        let field = if self.field.generator() == self.zeta_a {
            self.field
        } else {
            let minimal = minimal_poly_from_orbit(&self.field, &self.zeta_a)?;
            if minimal.degree() != Some(self.field.degree()) {
                return Err(Error::Internal("ζ_a does not generate the field".into()));
            }
            FField::new(self.p, minimal, self.field.counter().clone())?
        };
        let zeta = field.generator();
        let s = FactoredOrder::new(self.a)?;
        if !field.is_one(&field.pow_u64(&zeta, s.value()))
            || s.primes().any(|q| field.is_one(&field.pow_u64(&zeta, s.value() / q)))
        {
            return Err(Error::Internal(format!("root is not a primitive {}-th root", s.value())));
        }
        Ok(TowerRoot { s: s.value(), field, zeta })
    }
}

/// An irreducible factor `f` of `Φ_s` over `F_p` together with `ζ_s = Y`.
pub fn build_root_of_unity<R: Rng + ?Sized>(
    p: u64,
    s: &FactoredOrder,
    rng: &mut R,
) -> Result<TowerRoot> {
    build_root_of_unity_with_counter(p, s, rng, MulCounter::new())
}

/// As [`build_root_of_unity`], charging all field work to `counter`.
pub fn build_root_of_unity_with_counter<R: Rng + ?Sized>(
    p: u64,
    s: &FactoredOrder,
    rng: &mut R,
    counter: MulCounter,
) -> Result<TowerRoot> {
    if p == 2 {
        return Err(Error::EvenPrime);
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if s.value().is_multiple_of(p) {
        return Err(Error::NotCoprime { a: p, b: s.value() });
    }
    let mut state = TowerState::new(p, counter, rng)?;
    for &(p0, v) in s.factors() {
        state.adjoin_prime_power(p0, v)?;
    }
    state.finish()
}
