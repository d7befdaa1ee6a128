use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use super::{PadicCtx, ResidueInt};
use crate::ff::{FFPoly, FField, Field};
use crate::error::{Error, Result};

/// Word kernels accumulate up to `2d` products below `2^112` in a `u128`.
const WORD_MAX_DEGREE: usize = 1 << 14;

/// The unramified ring `A = (Z/p^K)[X]/F` for a monic `F` that is
/// irreducible modulo `p`.
pub struct ExtensionDescriptor {
    ctx: PadicCtx,
    modulus: Vec<ResidueInt>,
    residue_field: FField,
    kernel: Kernel,
    mul_cost: u64,
}

enum Kernel {
    Word { m: u64, neg_low: Vec<u64> },
    Big { neg_low: Vec<BigUint> },
}

impl ExtensionDescriptor {
    /// `modulus` lists the coefficients of `F`, constant term first; it must
    /// be monic and irreducible modulo `p`.
    pub fn new(ctx: PadicCtx, modulus: &[ResidueInt]) -> Result<Arc<Self>> {
        let modulus: Vec<ResidueInt> = modulus.iter().map(|c| ctx.residue(c.value().clone())).collect();
        let d = modulus.len().checked_sub(1).filter(|&d| d >= 1).ok_or_else(|| {
            Error::BadInput("modulus must have degree at least 1".into())
        })?;
        if modulus[d] != ResidueInt::one() {
            return Err(Error::BadInput("modulus must be monic".into()));
        }
        let p = ctx.p();
        let reduced: Vec<u64> = modulus
            .iter()
            .map(|c| (c.value() % p).to_u64().unwrap())
            .collect();
        let residue_field =
            FField::new(p, FFPoly::from_residues(p, &reduced), ctx.counter().clone())?;
        Ok(Self::assemble(ctx, modulus, residue_field))
    }

    fn assemble(ctx: PadicCtx, modulus: Vec<ResidueInt>, residue_field: FField) -> Arc<Self> {
        let d = modulus.len() - 1;
        let neg_low: Vec<ResidueInt> = modulus[..d].iter().map(|c| ctx.neg(c)).collect();
        let nonzero = neg_low.iter().filter(|c| !c.is_zero()).count();
        let mul_cost = (d * d + (d - 1) * nonzero) as u64;
        let kernel = match ctx.word_modulus() {
            Some(m) if d < WORD_MAX_DEGREE => Kernel::Word {
                m,
                neg_low: neg_low.iter().map(|c| c.value().to_u64().unwrap()).collect(),
            },
            _ => Kernel::Big { neg_low: neg_low.into_iter().map(ResidueInt::into_value).collect() },
        };
        Arc::new(Self { ctx, modulus, residue_field, kernel, mul_cost })
    }

    /// The lift of `fbar` with every coefficient in `[0, p)`.
    pub fn lift_of(ctx: PadicCtx, fbar: &FFPoly<u64>) -> Result<Arc<Self>> {
        let coeffs: Vec<ResidueInt> = fbar.coeffs().iter().map(|&c| ResidueInt::from(c)).collect();
        Self::new(ctx, &coeffs)
    }

    /// The same modulus over `Z/p^k`, reduced when `k` is smaller; the
    /// residue field is reused rather than certified again.
    pub fn with_precision(&self, k: u32) -> Result<Arc<Self>> {
        let ctx = self.ctx.with_precision(k)?;
        let modulus = self.modulus.iter().map(|c| ctx.residue(c.value().clone())).collect();
        Ok(Self::assemble(ctx, modulus, self.residue_field.clone()))
    }

    pub fn ctx(&self) -> &PadicCtx {
        &self.ctx
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// Coefficients of `F`, constant term first.
    pub fn modulus(&self) -> &[ResidueInt] {
        &self.modulus
    }

    /// `A / pA = F_p[Y]/(F mod p)`.
    pub fn residue_field(&self) -> &FField {
        &self.residue_field
    }

    /// Base-ring multiplications charged per ring multiplication.
    pub fn mul_cost(&self) -> u64 {
        self.mul_cost
    }

    fn is_word(&self) -> bool {
        matches!(self.kernel, Kernel::Word { .. })
    }

    pub fn zero(self: &Arc<Self>) -> RingElement {
        let d = self.degree();
        let coeffs = if self.is_word() {
            Coeffs::Word(vec![0; d])
        } else {
            Coeffs::Big(vec![BigUint::zero(); d])
        };
        RingElement { parent: self.clone(), coeffs }
    }

    pub fn one(self: &Arc<Self>) -> RingElement {
        self.constant(&ResidueInt::one())
    }

    pub fn constant(self: &Arc<Self>, c: &ResidueInt) -> RingElement {
        let mut coeffs = vec![ResidueInt::zero(); self.degree()];
        coeffs[0] = self.ctx.residue(c.value().clone());
        self.from_canonical(&coeffs)
    }

    /// The class of `X`.
    pub fn generator(self: &Arc<Self>) -> RingElement {
        let mut coeffs = vec![ResidueInt::zero(); self.degree() + 1];
        coeffs[1] = ResidueInt::one();
        self.from_poly(&coeffs)
    }

    /// Element with the given `d` coefficients (reduced mod `p^K`).
    pub fn element(self: &Arc<Self>, coeffs: &[ResidueInt]) -> Result<RingElement> {
        if coeffs.len() != self.degree() {
            return Err(Error::LengthMismatch { expected: self.degree(), got: coeffs.len() });
        }
        let canonical: Vec<ResidueInt> =
            coeffs.iter().map(|c| self.ctx.residue(c.value().clone())).collect();
        Ok(self.from_canonical(&canonical))
    }

    pub fn element_u64(self: &Arc<Self>, coeffs: &[u64]) -> Result<RingElement> {
        let c: Vec<ResidueInt> = coeffs.iter().map(|&x| ResidueInt::from(x)).collect();
        self.element(&c)
    }

    /// Class of an arbitrary-degree polynomial.
    pub fn from_poly(self: &Arc<Self>, coeffs: &[ResidueInt]) -> RingElement {
        let d = self.degree();
        let mut acc: Vec<BigUint> = coeffs.iter().map(|c| c.value().clone()).collect();
        let m = self.ctx.modulus();
        let neg_low: Vec<ResidueInt> = self.modulus[..d].iter().map(|c| self.ctx.neg(c)).collect();
        for k in (d..acc.len()).rev() {
            let c = &acc[k] % m;
            for (j, nf) in neg_low.iter().enumerate() {
                acc[k - d + j] += &c * nf.value();
            }
        }
        acc.resize(d, BigUint::zero());
        let canonical: Vec<ResidueInt> = acc.into_iter().map(|c| self.ctx.residue(c)).collect();
        self.from_canonical(&canonical)
    }

    fn from_canonical(self: &Arc<Self>, coeffs: &[ResidueInt]) -> RingElement {
        let coeffs = if self.is_word() {
            Coeffs::Word(coeffs.iter().map(|c| c.value().to_u64().unwrap()).collect())
        } else {
            Coeffs::Big(coeffs.iter().map(|c| c.value().clone()).collect())
        };
        RingElement { parent: self.clone(), coeffs }
    }

    /// Lift of a residue-field element with coefficients in `[0, p)`.
    pub fn lift_residue(self: &Arc<Self>, residue: &[u64]) -> RingElement {
        let c: Vec<ResidueInt> = residue.iter().map(|&x| ResidueInt::from(x)).collect();
        self.from_canonical(&c)
    }

    fn same_ring(&self, other: &Self) -> bool {
        std::ptr::eq(self, other) || (self.ctx == other.ctx && self.modulus == other.modulus)
    }
}

impl fmt::Debug for ExtensionDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExtensionDescriptor({:?}, {})", self.ctx, render_terms(&self.modulus))
    }
}

impl PartialEq for ExtensionDescriptor {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Coeffs {
    Word(Vec<u64>),
    Big(Vec<BigUint>),
}

/// An element of an [`ExtensionDescriptor`] ring: `d` canonical
/// coefficients, constant term first.
#[derive(Clone)]
pub struct RingElement {
    parent: Arc<ExtensionDescriptor>,
    coeffs: Coeffs,
}

impl RingElement {
    pub fn parent(&self) -> &Arc<ExtensionDescriptor> {
        &self.parent
    }

    pub fn coeffs(&self) -> Vec<ResidueInt> {
        match &self.coeffs {
            Coeffs::Word(v) => v.iter().map(|&c| ResidueInt::from(c)).collect(),
            Coeffs::Big(v) => v.iter().cloned().map(ResidueInt::from_canonical).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.coeffs {
            Coeffs::Word(v) => v.iter().all(|&c| c == 0),
            Coeffs::Big(v) => v.iter().all(Zero::is_zero),
        }
    }

    pub fn is_one(&self) -> bool {
        self.constant_value() == Some(ResidueInt::one())
    }

    /// The value if this element lies in the base ring `Z/p^K`.
    pub fn constant_value(&self) -> Option<ResidueInt> {
        match &self.coeffs {
            Coeffs::Word(v) => v[1..].iter().all(|&c| c == 0).then(|| ResidueInt::from(v[0])),
            Coeffs::Big(v) => v[1..]
                .iter()
                .all(Zero::is_zero)
                .then(|| ResidueInt::from_canonical(v[0].clone())),
        }
    }

    /// Image in the residue field `A/pA`.
    pub fn residue(&self) -> Vec<u64> {
        let p = self.parent.ctx.p();
        match &self.coeffs {
            Coeffs::Word(v) => v.iter().map(|c| c % p).collect(),
            Coeffs::Big(v) => v.iter().map(|c| (c % p).to_u64().unwrap()).collect(),
        }
    }

    /// Smallest `p`-adic valuation among the coefficients; `None` for zero.
    pub fn valuation(&self) -> Option<u32> {
        let p = self.parent.ctx.p();
        self.coeffs().iter().filter_map(|c| c.valuation(p)).min()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.parent.same_ring(&other.parent) {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.add_raw(other))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.sub_raw(other))
    }

    /// Schoolbook product followed by reduction modulo `F`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_raw(other))
    }

    pub(crate) fn add_raw(&self, other: &Self) -> Self {
        let coeffs = match (&self.coeffs, &other.coeffs, &self.parent.kernel) {
            (Coeffs::Word(a), Coeffs::Word(b), Kernel::Word { m, .. }) => {
                Coeffs::Word(a.iter().zip(b).map(|(&x, &y)| word_add(x, y, *m)).collect())
            }
            (Coeffs::Big(a), Coeffs::Big(b), _) => {
                let m = self.parent.ctx.modulus();
                Coeffs::Big(
                    a.iter()
                        .zip(b)
                        .map(|(x, y)| {
                            let s = x + y;
                            if &s >= m {
                                s - m
                            } else {
                                s
                            }
                        })
                        .collect(),
                )
            }
            _ => unreachable!("kernel mismatch inside one ring"),
        };
        Self { parent: self.parent.clone(), coeffs }
    }

    pub(crate) fn sub_raw(&self, other: &Self) -> Self {
        self.add_raw(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let coeffs = match (&self.coeffs, &self.parent.kernel) {
            (Coeffs::Word(a), Kernel::Word { m, .. }) => {
                Coeffs::Word(a.iter().map(|&x| if x == 0 { 0 } else { m - x }).collect())
            }
            (Coeffs::Big(a), _) => {
                let m = self.parent.ctx.modulus();
                Coeffs::Big(a.iter().map(|x| if x.is_zero() { x.clone() } else { m - x }).collect())
            }
            _ => unreachable!("kernel mismatch inside one ring"),
        };
        Self { parent: self.parent.clone(), coeffs }
    }

    pub(crate) fn mul_raw(&self, other: &Self) -> Self {
        self.parent.ctx.counter().add(self.parent.mul_cost);
        let coeffs = match (&self.coeffs, &other.coeffs, &self.parent.kernel) {
            (Coeffs::Word(a), Coeffs::Word(b), Kernel::Word { m, neg_low }) => {
                Coeffs::Word(word_mul(a, b, *m, neg_low))
            }
            (Coeffs::Big(a), Coeffs::Big(b), Kernel::Big { neg_low }) => {
                Coeffs::Big(big_mul(a, b, self.parent.ctx.modulus(), neg_low))
            }
            _ => unreachable!("kernel mismatch inside one ring"),
        };
        Self { parent: self.parent.clone(), coeffs }
    }

    /// Multiplication by a base-ring scalar; charged `d` multiplications.
    pub fn scale(&self, c: &ResidueInt) -> Self {
        let d = self.parent.degree() as u64;
        self.parent.ctx.counter().add(d);
        let coeffs = match (&self.coeffs, &self.parent.kernel) {
            (Coeffs::Word(a), Kernel::Word { m, .. }) => {
                let c = (c.value() % *m).to_u64().unwrap() as u128;
                Coeffs::Word(a.iter().map(|&x| (x as u128 * c % *m as u128) as u64).collect())
            }
            (Coeffs::Big(a), _) => {
                let m = self.parent.ctx.modulus();
                Coeffs::Big(a.iter().map(|x| x * c.value() % m).collect())
            }
            _ => unreachable!("kernel mismatch inside one ring"),
        };
        Self { parent: self.parent.clone(), coeffs }
    }

    /// `self^e` by left-to-right binary exponentiation.
    pub fn pow(&self, e: u64) -> Self {
        let mut acc = self.parent.one();
        for i in (0..u64::BITS - e.leading_zeros()).rev() {
            acc = acc.mul_raw(&acc);
            if e >> i & 1 == 1 {
                acc = acc.mul_raw(self);
            }
        }
        acc
    }

    pub fn pow_big(&self, e: &BigUint) -> Self {
        let mut acc = self.parent.one();
        for i in (0..e.bits()).rev() {
            acc = acc.mul_raw(&acc);
            if e.bit(i) {
                acc = acc.mul_raw(self);
            }
        }
        acc
    }

    /// Inverse of a unit: invert in `A/pA`, then Newton doubling
    /// `w ← w(2 - aw)`.
    pub fn inverse_unit(&self) -> Result<Self> {
        let field = self.parent.residue_field();
        let w0 = field.inv(&self.residue()).ok_or(Error::NonUnit)?;
        let mut w = self.parent.lift_residue(&w0);
        let two = self.parent.constant(&ResidueInt::from(2));
        let mut precision = 1;
        while precision < self.parent.ctx.precision() {
            let aw = self.mul_raw(&w);
            w = w.mul_raw(&two.sub_raw(&aw));
            precision *= 2;
        }
        Ok(w)
    }

    /// Moves the element to a ring with the same prime and a compatible
    /// modulus at another precision, reducing or embedding representatives.
    pub fn to_ring(&self, target: &Arc<ExtensionDescriptor>) -> Result<Self> {
        let (src, dst) = (&self.parent, target);
        if src.ctx.p() != dst.ctx.p() || src.degree() != dst.degree() {
            return Err(Error::ParentMismatch);
        }
        let low = if src.ctx.precision() <= dst.ctx.precision() { &src.ctx } else { &dst.ctx };
        let compatible = src
            .modulus
            .iter()
            .zip(&dst.modulus)
            .all(|(a, b)| low.residue(a.value().clone()) == low.residue(b.value().clone()));
        if !compatible {
            return Err(Error::ParentMismatch);
        }
        let coeffs: Vec<ResidueInt> =
            self.coeffs().into_iter().map(|c| dst.ctx.residue(c.into_value())).collect();
        Ok(dst.from_canonical(&coeffs))
    }
}

impl PartialEq for RingElement {
    fn eq(&self, other: &Self) -> bool {
        self.parent.same_ring(&other.parent) && self.coeffs == other.coeffs
    }
}

impl Eq for RingElement {}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `c0 + c1*X + ... (mod p^K, F)`, every coefficient written out.
impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ctx = &self.parent.ctx;
        write!(
            f,
            "{} (mod {}^{}, {})",
            render_terms(&self.coeffs()),
            ctx.p(),
            ctx.precision(),
            render_terms(&self.parent.modulus)
        )
    }
}

fn render_terms(coeffs: &[ResidueInt]) -> String {
    coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| match i {
            0 => c.to_string(),
            1 => format!("{c}*X"),
            _ => format!("{c}*X^{i}"),
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

#[inline]
fn word_add(x: u64, y: u64, m: u64) -> u64 {
    let s = x + y;
    if s >= m {
        s - m
    } else {
        s
    }
}

fn word_mul(a: &[u64], b: &[u64], m: u64, neg_low: &[u64]) -> Vec<u64> {
    let d = a.len();
    let m128 = m as u128;
    let mut acc = vec![0u128; 2 * d - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        let x = x as u128;
        for (slot, &y) in acc[i..i + d].iter_mut().zip(b) {
            *slot += x * y as u128;
        }
    }
    for k in (d..2 * d - 1).rev() {
        let c = acc[k] % m128;
        if c == 0 {
            continue;
        }
        for (slot, &nf) in acc[k - d..k].iter_mut().zip(neg_low) {
            *slot += c * nf as u128;
        }
    }
    acc.truncate(d);
    acc.into_iter().map(|c| (c % m128) as u64).collect()
}

fn big_mul(a: &[BigUint], b: &[BigUint], m: &BigUint, neg_low: &[BigUint]) -> Vec<BigUint> {
    let d = a.len();
    let mut acc = vec![BigUint::zero(); 2 * d - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            acc[i + j] += x * y;
        }
    }
    for k in (d..2 * d - 1).rev() {
        let c = &acc[k] % m;
        if c.is_zero() {
            continue;
        }
        for (j, nf) in neg_low.iter().enumerate() {
            if !nf.is_zero() {
                acc[k - d + j] += &c * nf;
            }
        }
    }
    acc.truncate(d);
    acc.into_iter().map(|c| c % m).collect()
}

/// `p^exponent · mantissa`, with the exponent holding the smallest
/// coefficient valuation so the mantissa has a unit coefficient (or is zero).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledElement {
    exponent: i64,
    mantissa: RingElement,
}

impl ScaledElement {
    pub fn new(exponent: i64, value: RingElement) -> Self {
        let Some(v) = value.valuation().filter(|&v| v > 0) else {
            return Self { exponent: if value.is_zero() { 0 } else { exponent }, mantissa: value };
        };
        let parent = value.parent().clone();
        let scale = BigUint::from(parent.ctx().p()).pow(v);
        let coeffs: Vec<ResidueInt> = value
            .coeffs()
            .into_iter()
            .map(|c| ResidueInt::from_canonical(c.into_value() / &scale))
            .collect();
        Self { exponent: exponent + v as i64, mantissa: parent.from_canonical(&coeffs) }
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn mantissa(&self) -> &RingElement {
        &self.mantissa
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(p: u64, k: u32, f: &[u64]) -> Arc<ExtensionDescriptor> {
        let ctx = PadicCtx::new(p, k).unwrap();
        let m: Vec<ResidueInt> = f.iter().map(|&c| ResidueInt::from(c)).collect();
        ExtensionDescriptor::new(ctx, &m).unwrap()
    }

    #[test]
    fn descriptor_validation() {
        let ctx = PadicCtx::new(3, 4).unwrap();
        let bad = |f: &[u64]| {
            let m: Vec<ResidueInt> = f.iter().map(|&c| ResidueInt::from(c)).collect();
            ExtensionDescriptor::new(ctx.clone(), &m).unwrap_err()
        };
        assert_eq!(bad(&[1, 0, 2]), Error::BadInput("modulus must be monic".into()));
        assert_eq!(bad(&[2, 0, 1]), Error::Reducible(3));
        assert!(matches!(bad(&[1]), Error::BadInput(_)));
    }

    #[test]
    fn mul_examples() {
        let a = ring(3, 4, &[1, 0, 1]);
        let x = a.generator();
        assert_eq!(a.one().mul(&x).unwrap(), x);
        assert_eq!(x.mul(&x).unwrap(), a.element_u64(&[80, 0]).unwrap());

        let b = ring(19, 2, &[1, 5, 1]);
        let x = b.generator();
        let x5 = b.element_u64(&[5, 1]).unwrap();
        assert_eq!(x.mul(&x5).unwrap(), b.element_u64(&[360, 0]).unwrap());
    }

    #[test]
    fn pow_examples() {
        let a = ring(3, 4, &[1, 0, 1]);
        let x = a.generator();
        assert_eq!(x.pow(0), a.one());
        assert_eq!(x.pow(4), a.one());
        let b = ring(19, 2, &[1, 5, 1]);
        assert_eq!(b.generator().pow(2), b.element_u64(&[360, 356]).unwrap());
    }

    #[test]
    fn inverse_examples() {
        let a = ring(3, 4, &[1, 0, 1]);
        assert_eq!(a.one().inverse_unit().unwrap(), a.one());
        assert_eq!(a.constant(&2.into()).inverse_unit().unwrap(), a.constant(&41.into()));
        assert_eq!(a.generator().inverse_unit().unwrap(), a.element_u64(&[0, 80]).unwrap());
        assert_eq!(a.constant(&3.into()).inverse_unit().unwrap_err(), Error::NonUnit);
    }

    #[test]
    fn big_kernel_matches_word_kernel() {
        // 19^14 > 2^56 forces the BigUint path
        let big = ring(19, 14, &[1, 5, 1]);
        assert!(!big.is_word());
        let small = big.with_precision(6).unwrap();
        assert!(small.is_word());
        let a = big.element_u64(&[123_456_789_012, 987_654_321]).unwrap();
        let b = big.element_u64(&[31_415_926_535, 27_182_818]).unwrap();
        let prod_big = a.mul(&b).unwrap().to_ring(&small).unwrap();
        let prod_small = a.to_ring(&small).unwrap().mul(&b.to_ring(&small).unwrap()).unwrap();
        assert_eq!(prod_big, prod_small);
        let inv = a.inverse_unit().unwrap();
        assert!(a.mul(&inv).unwrap().is_one());
    }

    #[test]
    fn parent_mismatch() {
        let a = ring(3, 4, &[1, 0, 1]);
        let b = ring(3, 5, &[1, 0, 1]);
        assert_eq!(a.one().mul(&b.one()).unwrap_err(), Error::ParentMismatch);
        let c = ring(3, 4, &[2, 1, 1]);
        assert_eq!(a.one().add(&c.one()).unwrap_err(), Error::ParentMismatch);
        assert_eq!(a.one().to_ring(&c).unwrap_err(), Error::ParentMismatch);
        // equal rings built separately are interchangeable
        let a2 = ring(3, 4, &[1, 0, 1]);
        assert_eq!(a.generator().mul(&a2.generator()).unwrap(), a.constant(&80.into()));
    }

    #[test]
    fn counter_charges_fixed_cost() {
        let a = ring(3, 4, &[1, 0, 1]);
        assert_eq!(a.mul_cost(), 4 + 1);
        let c = a.ctx().counter().clone();
        let before = c.get();
        let _ = a.zero().mul(&a.one()).unwrap();
        let _ = a.generator().mul(&a.generator()).unwrap();
        assert_eq!(c.get() - before, 10);
    }

    #[test]
    fn display() {
        let a = ring(3, 4, &[1, 0, 1]);
        let e = a.element_u64(&[1, 80]).unwrap();
        assert_eq!(e.to_string(), "1 + 80*X (mod 3^4, 1 + 0*X + 1*X^2)");
    }

    #[test]
    fn scaled_element_extracts_valuation() {
        let a = ring(3, 4, &[1, 0, 1]);
        let e = a.element_u64(&[9, 18]).unwrap();
        let s = ScaledElement::new(-1, e);
        assert_eq!(s.exponent(), 1);
        assert_eq!(s.mantissa(), &a.element_u64(&[1, 2]).unwrap());
        let z = ScaledElement::new(5, a.zero());
        assert_eq!(z.exponent(), 0);
    }

    #[test]
    fn from_poly_reduces() {
        let a = ring(3, 4, &[1, 0, 1]);
        // X^3 + 2 = -X + 2
        let e = a.from_poly(&[2.into(), 0.into(), 0.into(), 1.into()]);
        assert_eq!(e, a.element_u64(&[2, 80]).unwrap());
    }
}
