//! Mixed-radix Cooley–Tukey transforms of length `s` over
//! `A = (Z/p^K)[X]/F`, evaluating at the powers of a lifted root `α`.
//!
//! The transform is decimation in time. Input is permuted by mixed-radix
//! digit reversal, then stage `j` merges `r_j` adjacent transforms of
//! length `L/r_j` into one of length `L` with twiddles `α^{(s/L)·u·k}` and
//! a direct `r_j × r_j` evaluation at the `r_j`-th roots `α^{s/r_j}`.
//! Output comes out in natural order `f(α^0), f(α^1), …`.

use std::sync::Arc;

use crate::cyclotomic::FactoredOrder;
use crate::error::{Error, Result};
use crate::lift::LiftResult;
use crate::padic::{ExtensionDescriptor, ResidueInt, RingElement};

/// Precomputed data for transforms of one length over one ring.
#[derive(Clone, Debug)]
pub struct FFTPlan {
    s: FactoredOrder,
    radices: Vec<u64>,
    ring: Arc<ExtensionDescriptor>,
    root: RingElement,
    /// `α^e` for every `e < s`.
    powers: Vec<RingElement>,
    inv_s: ResidueInt,
    /// Input index `n` is loaded at `positions[n]`.
    positions: Vec<usize>,
}

/// Builds the plan for `α` from `lift`, truncated to `K` digits.
pub fn make_plan(s: &FactoredOrder, lift: &LiftResult, k: u32) -> Result<FFTPlan> {
    if lift.precision() < k {
        return Err(Error::PrecisionTooLow { have: lift.precision(), want: k });
    }
    if lift.s() != s.value() {
        return Err(Error::BadInput(format!(
            "root has order {} but the plan needs {}",
            lift.s(),
            s.value()
        )));
    }
    let lift = lift.truncate(k)?;
    let ring = lift.descriptor().clone();
    let root = lift.alpha().clone();
    let n = s.value() as usize;
    let one_residue = ring.one().residue();
    if !root.pow(s.value()).is_one() {
        return Err(Error::RootNotPrimitive(s.value()));
    }
    for q in s.primes() {
        if root.pow(s.value() / q).residue() == one_residue {
            return Err(Error::RootNotPrimitive(q));
        }
    }
    let mut powers = Vec::with_capacity(n);
    let mut acc = ring.one();
    for _ in 0..n {
        powers.push(acc.clone());
        acc = acc.mul_raw(&root);
    }
    let ctx = ring.ctx();
    let inv_s = ctx.residue_inverse(&ctx.residue(s.value()))?;
    let radices = s.radices();
    let positions = digit_reversal(n, &radices);
    Ok(FFTPlan { s: s.clone(), radices, ring, root, powers, inv_s, positions })
}

/// `n = Σ u_j·s/(r_1⋯r_j)` is loaded at `Σ u_j·r_1⋯r_{j-1}`.
fn digit_reversal(s: usize, radices: &[u64]) -> Vec<usize> {
    (0..s)
        .map(|n| {
            let (mut rest, mut stride, mut pos, mut weight) = (n, s, 0, 1);
            for &r in radices {
                let r = r as usize;
                stride /= r;
                pos += (rest / stride) * weight;
                rest %= stride;
                weight *= r;
            }
            pos
        })
        .collect()
}

impl FFTPlan {
    pub fn len(&self) -> usize {
        self.s.value() as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn order(&self) -> &FactoredOrder {
        &self.s
    }

    /// Radices in stage order, smallest first.
    pub fn radices(&self) -> &[u64] {
        &self.radices
    }

    pub fn ring(&self) -> &Arc<ExtensionDescriptor> {
        &self.ring
    }

    pub fn root(&self) -> &RingElement {
        &self.root
    }

    /// `s^{-1} mod p^K`.
    pub fn inv_s(&self) -> &ResidueInt {
        &self.inv_s
    }

    /// `α^e` for `e < s`.
    pub fn root_power(&self, e: usize) -> &RingElement {
        &self.powers[e]
    }

    /// `x · α^e`, skipping the multiplication for `e = 0` and `e = s/2`.
    fn twiddle(&self, x: &RingElement, e: usize) -> RingElement {
        let s = self.len();
        if e == 0 {
            x.clone()
        } else if 2 * e == s {
            x.neg()
        } else {
            x.mul_raw(&self.powers[e])
        }
    }

    fn check_input(&self, values: &[RingElement]) -> Result<()> {
        if values.len() != self.len() {
            return Err(Error::LengthMismatch { expected: self.len(), got: values.len() });
        }
        if values.iter().any(|v| v.parent() != &self.ring) {
            return Err(Error::ParentMismatch);
        }
        Ok(())
    }

    fn transform(&self, values: &[RingElement], inverse: bool) -> Vec<RingElement> {
        let s = self.len();
        let exp = |e: usize| if inverse { (s - e) % s } else { e };
        let mut buf = vec![self.ring.zero(); s];
        for (n, v) in values.iter().enumerate() {
            buf[self.positions[n]] = v.clone();
        }
        let mut prev = 1;
        let mut terms = Vec::new();
        for &r in &self.radices {
            let r = r as usize;
            let len = prev * r;
            let stride = s / len;
            let root_step = s / r;
            for base in (0..s).step_by(len) {
                for k1 in 0..prev {
                    terms.clear();
                    terms.extend(
                        (0..r).map(|u| self.twiddle(&buf[base + u * prev + k1], exp(stride * u * k1))),
                    );
                    for k2 in 0..r {
                        let mut sum = terms[0].clone();
                        for (u, t) in terms.iter().enumerate().skip(1) {
                            let e = exp(root_step * ((u * k2) % r));
                            sum = sum.add_raw(&self.twiddle(t, e));
                        }
                        buf[base + k1 + prev * k2] = sum;
                    }
                }
            }
            prev = len;
        }
        buf
    }
}

/// `[f(α^j)]_{j < s}` for `f = Σ coeffs[i]·Y^i`.
pub fn dft(coeffs: &[RingElement], plan: &FFTPlan) -> Result<Vec<RingElement>> {
    plan.check_input(coeffs)?;
    Ok(plan.transform(coeffs, false))
}

/// Inverse of [`dft`]: the transform at `α^{-1}` followed by scaling by
/// `s^{-1}`.
pub fn idft(evals: &[RingElement], plan: &FFTPlan) -> Result<Vec<RingElement>> {
    plan.check_input(evals)?;
    let out = plan.transform(evals, true);
    Ok(out.iter().map(|v| v.scale(&plan.inv_s)).collect())
}

/// Direct `O(s²)` evaluation by Horner's rule at `root^j`.
pub fn naive_dft(coeffs: &[RingElement], root: &RingElement, s: usize) -> Vec<RingElement> {
    let ring = root.parent();
    let mut point = ring.one();
    let mut out = Vec::with_capacity(s);
    for _ in 0..s {
        let value = coeffs
            .iter()
            .rev()
            .fold(ring.zero(), |acc, c| acc.mul_raw(&point).add_raw(c));
        out.push(value);
        point = point.mul_raw(root);
    }
    out
}

/// Product of two polynomials over `Z/p^K` (coefficients constant term
/// first) through `dft`, pointwise products and `idft`.
pub fn poly_multiply(f: &[ResidueInt], g: &[ResidueInt], plan: &FFTPlan) -> Result<Vec<ResidueInt>> {
    let ctx = plan.ring().ctx();
    let (f, g) = (ctx.poly_reduce(f), ctx.poly_reduce(g));
    if f.is_empty() || g.is_empty() {
        return Ok(Vec::new());
    }
    let degree = f.len() + g.len() - 2;
    if degree >= plan.len() {
        return Err(Error::DegreeOverflow { degree, s: plan.len() as u64 });
    }
    let embed = |a: &[ResidueInt]| {
        let mut v: Vec<RingElement> = a.iter().map(|c| plan.ring().constant(c)).collect();
        v.resize(plan.len(), plan.ring().zero());
        v
    };
    let fa = dft(&embed(&f), plan)?;
    let ga = dft(&embed(&g), plan)?;
    let pointwise: Vec<RingElement> = fa.iter().zip(&ga).map(|(x, y)| x.mul_raw(y)).collect();
    let product = idft(&pointwise, plan)?;
    let coeffs = product[..=degree]
        .iter()
        .map(|c| c.constant_value().ok_or(Error::CoefficientNotRational))
        .collect::<Result<Vec<_>>>()?;
    Ok(ctx.poly_trim(&coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counter::MulCounter;
    use crate::ff::FFPoly;
    use crate::lift::lift_root;

    fn gaussian_plan(k: u32) -> FFTPlan {
        let s = FactoredOrder::new(4).unwrap();
        let fbar = FFPoly::from_residues(3, &[1, 0, 1]);
        let lift = lift_root(&fbar, 3, &s, k, MulCounter::new()).unwrap();
        make_plan(&s, &lift, k).unwrap()
    }

    #[test]
    fn digit_reversal_permutations() {
        assert_eq!(digit_reversal(8, &[2, 2, 2]), vec![0, 4, 2, 6, 1, 5, 3, 7]);
        assert_eq!(digit_reversal(6, &[2, 3]), vec![0, 2, 4, 1, 3, 5]);
        assert_eq!(digit_reversal(1, &[]), vec![0]);
    }

    #[test]
    fn small_dft_example() {
        let plan = gaussian_plan(4);
        assert_eq!(plan.radices(), &[2, 2]);
        let ring = plan.ring().clone();
        let input = vec![ring.one(), ring.one(), ring.zero(), ring.zero()];
        let out = dft(&input, &plan).unwrap();
        let expected = vec![
            ring.constant(&2.into()),
            ring.element_u64(&[1, 1]).unwrap(),
            ring.zero(),
            ring.element_u64(&[1, 80]).unwrap(),
        ];
        assert_eq!(out, expected);
        assert_eq!(idft(&out, &plan).unwrap(), input);
        assert_eq!(naive_dft(&input, plan.root(), 4), expected);
    }

    #[test]
    fn constant_evaluations_invert_to_a_constant() {
        let plan = gaussian_plan(4);
        let ring = plan.ring().clone();
        let c = ring.element_u64(&[7, 5]).unwrap();
        let out = idft(&vec![c.clone(); 4], &plan).unwrap();
        assert_eq!(out, vec![c, ring.zero(), ring.zero(), ring.zero()]);
    }

    #[test]
    fn errors() {
        let plan = gaussian_plan(4);
        let ring = plan.ring().clone();
        assert_eq!(
            dft(&[ring.one()], &plan).unwrap_err(),
            Error::LengthMismatch { expected: 4, got: 1 }
        );
        let other = gaussian_plan(5);
        let mixed = vec![other.ring().one(); 4];
        assert_eq!(dft(&mixed, &plan).unwrap_err(), Error::ParentMismatch);
        let long: Vec<ResidueInt> = vec![1u64.into(); 3];
        assert_eq!(
            poly_multiply(&long, &long, &plan).unwrap_err(),
            Error::DegreeOverflow { degree: 4, s: 4 }
        );
    }

    #[test]
    fn squares_binomial() {
        let plan = gaussian_plan(4);
        let one_plus_y: Vec<ResidueInt> = vec![1u64.into(), 1u64.into()];
        let sq = poly_multiply(&one_plus_y, &one_plus_y, &plan).unwrap();
        assert_eq!(sq, vec![1u64.into(), 2u64.into(), 1u64.into()]);
    }

    #[test]
    fn plan_rejects_bad_lift() {
        let s = FactoredOrder::new(4).unwrap();
        let fbar = FFPoly::from_residues(3, &[1, 0, 1]);
        let lift = lift_root(&fbar, 3, &s, 4, MulCounter::new()).unwrap();
        assert_eq!(
            make_plan(&s, &lift, 5).unwrap_err(),
            Error::PrecisionTooLow { have: 4, want: 5 }
        );
        // the root order must match the plan length
        let two = FactoredOrder::new(2).unwrap();
        assert!(make_plan(&two, &lift, 4).is_err());
    }
}
