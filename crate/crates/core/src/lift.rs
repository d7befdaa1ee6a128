//! Lifting a root of unity from `F_p[Y]/fbar` to `(Z/p^K)[X]/F`.
//!
//! The fast path is Newton's iteration on the sparse polynomial `X^s - 1`,
//! started from `α = X` and doubling the number of correct digits each
//! step. The linear Hensel lift of a factor pair is kept as an independent
//! (and slow) oracle for the expanded factor.

use std::sync::Arc;

use num_bigint::BigUint;

use crate::counter::MulCounter;
use crate::cyclotomic::FactoredOrder;
use crate::error::{Error, Result};
use crate::ff::{FFPoly, PolyRing, PrimeField};
use crate::padic::{ExtensionDescriptor, PadicCtx, ResidueInt, RingElement};

/// A root `α` of `X^s - 1` in `(Z/p^k)[X]/F` reducing to `ζ_s = X mod p`.
#[derive(Clone, Debug)]
pub struct LiftResult {
    descriptor: Arc<ExtensionDescriptor>,
    alpha: RingElement,
    n: u32,
    s: u64,
}

impl LiftResult {
    pub fn descriptor(&self) -> &Arc<ExtensionDescriptor> {
        &self.descriptor
    }

    pub fn alpha(&self) -> &RingElement {
        &self.alpha
    }

    /// Number of Newton doublings performed.
    pub fn doublings(&self) -> u32 {
        self.n
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn precision(&self) -> u32 {
        self.descriptor.ctx().precision()
    }

    /// The same root reduced to a lower precision.
    pub fn truncate(&self, k: u32) -> Result<Self> {
        if k > self.precision() {
            return Err(Error::PrecisionTooLow { have: self.precision(), want: k });
        }
        let descriptor = self.descriptor.with_precision(k)?;
        let alpha = self.alpha.to_ring(&descriptor)?;
        Ok(Self { descriptor, alpha, n: self.n, s: self.s })
    }
}

/// Checks that `fbar` is a monic irreducible factor of `X^s - 1` mod `p`.
fn check_factor(p: u64, fbar: &FFPoly<u64>, s: u64) -> Result<()> {
    if s.is_multiple_of(p) {
        return Err(Error::NotCoprime { a: p, b: s });
    }
    let field = PrimeField::new(p, MulCounter::new());
    let ring = PolyRing::new(&field);
    if fbar.leading() != Some(&1) {
        return Err(Error::BadInput("factor must be monic".into()));
    }
    let x = ring.monomial(1);
    if ring.modpow(&x, &BigUint::from(s), fbar) != ring.rem(&ring.one(), fbar) {
        return Err(Error::NotAFactor(s));
    }
    Ok(())
}

/// `n` Newton doublings of `α ← α - s^{-1}(α^s - 1)·α(2 - α^s)`; step `i`
/// works modulo `p^{2^i}`. The result satisfies `α^s = 1` exactly.
pub fn newton_lift_root(
    fbar: &FFPoly<u64>,
    p: u64,
    s: &FactoredOrder,
    n: u32,
    counter: MulCounter,
) -> Result<LiftResult> {
    newton_lift_root_observed(fbar, p, s, n, counter, |_, _| {})
}

/// As [`newton_lift_root`], calling `observe(i, α)` after step `i` with
/// `α` in the ring modulo `p^{2^i}` (and once with `i = 0` for `α = X`).
pub fn newton_lift_root_observed(
    fbar: &FFPoly<u64>,
    p: u64,
    s: &FactoredOrder,
    n: u32,
    counter: MulCounter,
    observe: impl FnMut(u32, &RingElement),
) -> Result<LiftResult> {
    let modulus: Vec<ResidueInt> = fbar.coeffs().iter().map(|&c| ResidueInt::from(c)).collect();
    newton_lift_with_modulus(&modulus, p, s, n, counter, observe)
}

/// Newton lift in `(Z/p^{2^n})[X]/F` for any monic integer lift `F` of a
/// factor `fbar` of `X^s - 1` mod `p`.
pub fn newton_lift_with_modulus(
    modulus: &[ResidueInt],
    p: u64,
    s: &FactoredOrder,
    n: u32,
    counter: MulCounter,
    mut observe: impl FnMut(u32, &RingElement),
) -> Result<LiftResult> {
    if n >= 32 {
        return Err(Error::OutOfRange(n as u64));
    }
    let s_val = s.value();
    let top = ExtensionDescriptor::new(PadicCtx::with_counter(p, 1 << n, counter)?, modulus)?;
    let fbar = top.residue_field().modulus().clone();
    check_factor(p, &fbar, s_val)?;
    let mut alpha = top.with_precision(1)?.generator();
    observe(0, &alpha);
    for i in 1..=n {
        let digits = 1u32 << i;
        let ring = top.with_precision(digits)?;
        alpha = alpha.to_ring(&ring)?;
        let power = alpha.pow(s_val);
        let defect = power.sub_raw(&ring.one());
        if defect.valuation().is_some_and(|v| v < digits / 2) {
            return Err(Error::Internal(format!("Newton step {i} lost convergence")));
        }
        let two = ring.constant(&ResidueInt::from(2));
        let inv_power = alpha.mul_raw(&two.sub_raw(&power));
        let s_inv = ring.ctx().residue_inverse(&ring.ctx().residue(s_val))?;
        alpha = alpha.sub_raw(&defect.mul_raw(&inv_power).scale(&s_inv));
        observe(i, &alpha);
    }
    let descriptor = alpha.parent().clone();
    if !alpha.pow(s_val).is_one() {
        return Err(Error::Internal("lifted root fails α^s = 1".into()));
    }
    Ok(LiftResult { descriptor, alpha, n, s: s_val })
}

/// Lift to `K` digits: `ceil(log2 K)` doublings, then truncation to `p^K`.
pub fn lift_root(
    fbar: &FFPoly<u64>,
    p: u64,
    s: &FactoredOrder,
    k: u32,
    counter: MulCounter,
) -> Result<LiftResult> {
    if k == 0 {
        return Err(Error::ZeroPrecision);
    }
    let n = u32::BITS - (k - 1).leading_zeros();
    newton_lift_root(fbar, p, s, n, counter)?.truncate(k)
}

/// `α(2 - α^s)` modulo `p^{2k}`, which inverts `α^{s-1}` there whenever
/// `α^s ≡ 1 (mod p^k)`.
pub fn inverse_power_update(alpha: &RingElement, s: u64, k: u32) -> Result<RingElement> {
    let ring = alpha.parent().with_precision(2 * k)?;
    let alpha = alpha.to_ring(&ring)?;
    let power = alpha.pow(s);
    if power.sub_raw(&ring.one()).valuation().is_some_and(|v| v < k) {
        return Err(Error::PreconditionFailed(format!("α^{s} is not 1 modulo p^{k}")));
    }
    let two = ring.constant(&ResidueInt::from(2));
    Ok(alpha.mul_raw(&two.sub_raw(&power)))
}

/// `∏_{j < d} (Y - α^{p^j})`, whose coefficients lie in `Z/p^k`: the monic
/// factor of `X^s - 1` over `Z/p^k` lifting `fbar`. Coefficients are
/// returned constant term first.
pub fn expand_lifted_factor(result: &LiftResult) -> Result<Vec<ResidueInt>> {
    let ring = result.descriptor();
    let p = ring.ctx().p();
    let mut product: Vec<RingElement> = vec![ring.one()];
    let mut conjugate = result.alpha().clone();
    for _ in 0..ring.degree() {
        let mut next = vec![ring.zero(); product.len() + 1];
        for (i, c) in product.iter().enumerate() {
            next[i + 1] = next[i + 1].add_raw(c);
            next[i] = next[i].sub_raw(&c.mul_raw(&conjugate));
        }
        product = next;
        conjugate = conjugate.pow(p);
    }
    product
        .iter()
        .map(|c| c.constant_value().ok_or(Error::CoefficientNotRational))
        .collect()
}

/// One linear Hensel step at precision `k + 1`, from `h ≡ fg (mod p^k)` and
/// `af + bg ≡ 1 (mod p)`; returns `(δ_f, δ_g)` with
/// `h ≡ (f + δ_f)(g + δ_g) (mod p^{k+1})`.
#[allow(clippy::too_many_arguments)]
pub fn linear_hensel_step(
    ctx: &PadicCtx,
    h: &[ResidueInt],
    f: &[ResidueInt],
    g: &[ResidueInt],
    a: &[ResidueInt],
    b: &[ResidueInt],
    k: u32,
) -> Result<(Vec<ResidueInt>, Vec<ResidueInt>)> {
    if k == 0 || k >= ctx.precision() {
        return Err(Error::PreconditionFailed(format!(
            "step {k} needs 1 ≤ k < {}",
            ctx.precision()
        )));
    }
    let low = ctx.with_precision(1)?;
    let bezout = low.poly_add(&low.poly_mul(a, f), &low.poly_mul(b, g));
    if bezout != vec![ResidueInt::one()] {
        return Err(Error::BezoutFailure);
    }
    let work = ctx.with_precision(k + 1)?;
    let error = work.poly_sub(&work.poly_reduce(h), &work.poly_mul(f, g));
    if !ctx.with_precision(k)?.poly_reduce(&error).is_empty() {
        return Err(Error::PreconditionFailed(format!("h is not fg modulo p^{k}")));
    }
    let (_, delta_f) = work.poly_divrem_monic(&work.poly_mul(b, &error), f)?;
    let (_, delta_g) = work.poly_divrem_monic(&work.poly_mul(a, &error), g)?;
    Ok((delta_f, delta_g))
}

/// The unique monic lift of `fbar | h mod p` to a factor of `h` over
/// `Z/p^K`, by `K - 1` linear Hensel steps. Slow; used as an oracle.
pub fn hensel_factor_oracle(
    ctx: &PadicCtx,
    h: &[ResidueInt],
    fbar: &FFPoly<u64>,
) -> Result<Vec<ResidueInt>> {
    let p = ctx.p();
    let field = PrimeField::new(p, MulCounter::new());
    let ring = PolyRing::new(&field);
    let low = ctx.with_precision(1)?;
    let hbar_coeffs: Vec<u64> = low
        .poly_reduce(h)
        .iter()
        .map(|c| c.value().try_into().unwrap())
        .collect();
    let hbar = ring.from_u64(&hbar_coeffs);
    let (gbar, rem) = ring.divrem(&hbar, fbar);
    if !rem.is_zero() {
        return Err(Error::NotAFactor(p));
    }
    let (gcd, u, v) = ring.ext_gcd(fbar, &gbar);
    if gcd.degree() != Some(0) {
        return Err(Error::NotCoprimeFactors);
    }
    let lift = |poly: &FFPoly<u64>| -> Vec<ResidueInt> {
        poly.coeffs().iter().map(|&c| ResidueInt::from(c)).collect()
    };
    let (a, b) = (lift(&u), lift(&v));
    let mut f = lift(fbar);
    let mut g = lift(&gbar);
    for k in 1..ctx.precision() {
        let (df, dg) = linear_hensel_step(ctx, h, &f, &g, &a, &b, k)?;
        f = ctx.poly_add(&f, &df);
        g = ctx.poly_add(&g, &dg);
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: &[u64]) -> Vec<ResidueInt> {
        v.iter().map(|&x| ResidueInt::from(x)).collect()
    }

    fn order(s: u64) -> FactoredOrder {
        FactoredOrder::new(s).unwrap()
    }

    #[test]
    fn gaussian_root_is_a_fixed_point() {
        let fbar = FFPoly::from_residues(3, &[1, 0, 1]);
        let lift = newton_lift_root(&fbar, 3, &order(4), 3, MulCounter::new()).unwrap();
        assert_eq!(lift.precision(), 8);
        assert_eq!(lift.alpha(), &lift.descriptor().generator());
        assert_eq!(expand_lifted_factor(&lift).unwrap(), r(&[1, 0, 1]));
    }

    #[test]
    fn fifth_root_over_361() {
        let fbar = FFPoly::from_residues(19, &[1, 5, 1]);
        let lift = newton_lift_root(&fbar, 19, &order(5), 1, MulCounter::new()).unwrap();
        assert_eq!(lift.precision(), 2);
        assert!(lift.alpha().pow(5).is_one());
        assert_eq!(lift.alpha().residue(), vec![0, 1]);
        assert_eq!(expand_lifted_factor(&lift).unwrap(), r(&[1, 43, 1]));
    }

    #[test]
    fn trivial_order_one() {
        let fbar = FFPoly::from_residues(7, &[6, 1]);
        let lift = newton_lift_root(&fbar, 7, &order(1), 2, MulCounter::new()).unwrap();
        assert!(lift.alpha().is_one());
    }

    #[test]
    fn rejects_non_factor() {
        let fbar = FFPoly::from_residues(19, &[1, 5, 1]);
        let err = newton_lift_root(&fbar, 19, &order(7), 1, MulCounter::new()).unwrap_err();
        assert_eq!(err, Error::NotAFactor(7));
        let err = newton_lift_root(&fbar, 19, &order(38), 1, MulCounter::new()).unwrap_err();
        assert_eq!(err, Error::NotCoprime { a: 19, b: 38 });
    }

    #[test]
    fn lift_to_digits_truncates() {
        let fbar = FFPoly::from_residues(19, &[1, 5, 1]);
        let lift = lift_root(&fbar, 19, &order(5), 3, MulCounter::new()).unwrap();
        assert_eq!(lift.doublings(), 2);
        assert_eq!(lift.precision(), 3);
        assert!(lift.alpha().pow(5).is_one());
    }

    #[test]
    fn inverse_update_examples() {
        let ctx = PadicCtx::new(19, 2).unwrap();
        let ring = ExtensionDescriptor::new(ctx, &r(&[1, 5, 1])).unwrap();
        let x = ring.generator();
        let v = inverse_power_update(&x, 5, 1).unwrap();
        assert!(v.mul(&x.pow(4)).unwrap().is_one());

        let ctx = PadicCtx::new(3, 2).unwrap();
        let ring = ExtensionDescriptor::new(ctx, &r(&[1, 0, 1])).unwrap();
        let x = ring.generator();
        assert_eq!(inverse_power_update(&x, 4, 1).unwrap(), x);
        assert!(matches!(
            inverse_power_update(&ring.element_u64(&[1, 1]).unwrap(), 4, 1),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn hensel_oracle_examples() {
        let ctx = PadicCtx::new(3, 8).unwrap();
        let h = ctx.x_pow_minus_one(4);
        let f = hensel_factor_oracle(&ctx, &h, &FFPoly::from_residues(3, &[1, 0, 1])).unwrap();
        assert_eq!(f, r(&[1, 0, 1]));

        let ctx = PadicCtx::new(19, 2).unwrap();
        let h = ctx.x_pow_minus_one(5);
        let f = hensel_factor_oracle(&ctx, &h, &FFPoly::from_residues(19, &[1, 5, 1])).unwrap();
        assert_eq!(f, r(&[1, 43, 1]));
    }

    #[test]
    fn hensel_step_edge_cases() {
        let ctx = PadicCtx::new(3, 4).unwrap();
        let f = r(&[1, 0, 1]);
        let g = r(&[80, 0, 1]);
        let h = ctx.poly_mul(&f, &g);
        let field = PrimeField::new(3, MulCounter::new());
        let ring = PolyRing::new(&field);
        let (_, u, v) = ring.ext_gcd(&ring.from_u64(&[1, 0, 1]), &ring.from_u64(&[2, 0, 1]));
        let a: Vec<ResidueInt> = u.coeffs().iter().map(|&c| c.into()).collect();
        let b: Vec<ResidueInt> = v.coeffs().iter().map(|&c| c.into()).collect();
        let (df, dg) = linear_hensel_step(&ctx, &h, &f, &g, &a, &b, 2).unwrap();
        assert!(df.is_empty() && dg.is_empty());
        let wrong = ctx.poly_add(&h, &r(&[1]));
        assert!(matches!(
            linear_hensel_step(&ctx, &wrong, &f, &g, &a, &b, 2),
            Err(Error::PreconditionFailed(_))
        ));
        assert_eq!(
            linear_hensel_step(&ctx, &h, &f, &g, &a, &a, 2).unwrap_err(),
            Error::BezoutFailure
        );
    }
}
