//! Number-theoretic support: multiplicative orders, valuations, Euler's
//! totient, integer cyclotomic polynomials and the extension degrees of
//! cyclotomic towers over `F_p` and `Q_p`.
//!
//! Everything here works on machine integers (`u64`, products in `u128`).
//! Factoring is delegated to `num-prime`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use num_prime::nt_funcs::{factorize64, is_prime64};

use crate::error::{Error, Result};

/// Largest index accepted by [`cyclotomic_polynomial`].
pub const MAX_CYCLOTOMIC_INDEX: u64 = 1_000_000;

pub fn is_prime(n: u64) -> bool {
    is_prime64(n)
}

/// Prime factorization as `(prime, exponent)` pairs, primes increasing.
pub fn factorize(n: u64) -> Vec<(u64, u32)> {
    if n <= 1 {
        return Vec::new();
    }
    factorize64(n).into_iter().map(|(q, e)| (q, e as u32)).collect()
}

/// An integer `s` together with its factorization `s = ∏ p_i^{v_i}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FactoredOrder {
    s: u64,
    factors: Vec<(u64, u32)>,
}

impl FactoredOrder {
    pub fn new(s: u64) -> Result<Self> {
        if s == 0 {
            return Err(Error::OutOfRange(0));
        }
        Ok(Self { s, factors: factorize(s) })
    }

    /// Builds from a factorization; primes may come in any order and repeat.
    pub fn from_factors(factors: &[(u64, u32)]) -> Result<Self> {
        let mut merged: Vec<(u64, u32)> = Vec::new();
        let mut sorted = factors.to_vec();
        sorted.sort_unstable();
        let mut s: u64 = 1;
        for (q, e) in sorted {
            if e == 0 {
                continue;
            }
            if !is_prime(q) {
                return Err(Error::NotPrime(q));
            }
            let pw = checked_pow(q, e).ok_or(Error::OutOfRange(q))?;
            s = s.checked_mul(pw).ok_or(Error::OutOfRange(q))?;
            match merged.last_mut() {
                Some((last, le)) if *last == q => *le += e,
                _ => merged.push((q, e)),
            }
        }
        Ok(Self { s, factors: merged })
    }

    pub fn value(&self) -> u64 {
        self.s
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Distinct prime divisors.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(q, _)| q)
    }

    /// Each prime repeated by its multiplicity, nondecreasing.
    pub fn radices(&self) -> Vec<u64> {
        self.factors
            .iter()
            .flat_map(|&(q, e)| std::iter::repeat_n(q, e as usize))
            .collect()
    }

    /// `Σ v_i p_i`, the per-point FFT cost factor.
    pub fn radix_weight(&self) -> u64 {
        self.factors.iter().map(|&(q, e)| q * e as u64).sum()
    }
}

pub(crate) fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn lcm(a: u64, b: u64) -> u64 {
    a / a.gcd(&b) * b
}

/// Carmichael's function from a factorization.
fn carmichael(factors: &[(u64, u32)]) -> u64 {
    factors.iter().fold(1, |acc, &(q, e)| {
        let part = if q == 2 && e >= 3 {
            1u64 << (e - 2)
        } else {
            (q - 1) * q.pow(e - 1)
        };
        lcm(acc, part)
    })
}

/// Least `r ≥ 1` with `p^r ≡ 1 (mod m)`.
///
/// Starts from the Carmichael exponent of `m` and strips prime factors while
/// the congruence survives.
pub fn multiplicative_order(p: u64, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::OutOfRange(0));
    }
    if m == 1 {
        return Ok(1);
    }
    if p.gcd(&m) != 1 {
        return Err(Error::NotCoprime { a: p, b: m });
    }
    let mut order = carmichael(&factorize(m));
    for (q, _) in factorize(order) {
        while order.is_multiple_of(q) && pow_mod(p, order / q, m) == 1 {
            order /= q;
        }
    }
    Ok(order)
}

/// Largest `e` with `q^e | x`.
pub fn padic_valuation(x: i128, q: u64) -> Result<u32> {
    if x == 0 {
        return Err(Error::ZeroInput);
    }
    if q < 2 {
        return Err(Error::OutOfRange(q));
    }
    let q = q as u128;
    let mut x = x.unsigned_abs();
    let mut e = 0;
    while x.is_multiple_of(q) {
        x /= q;
        e += 1;
    }
    Ok(e)
}

pub fn euler_phi(m: u64) -> u64 {
    factorize(m)
        .iter()
        .fold(m.max(1), |acc, &(q, _)| acc / q * (q - 1))
}

/// `[Q_p(ζ_{s p^n}) : Q_p] = ord_s(p) · φ(p^n)` for `p ∤ s`.
pub fn cyclotomic_degree(p: u64, s: u64, n: u32) -> Result<u64> {
    if s == 0 {
        return Err(Error::OutOfRange(0));
    }
    if p.gcd(&s) != 1 {
        return Err(Error::NotCoprime { a: p, b: s });
    }
    let unramified = multiplicative_order(p, s)?;
    let ramified = if n == 0 {
        1
    } else {
        let pn = checked_pow(p, n - 1).ok_or(Error::OutOfRange(p))?;
        pn.checked_mul(p - 1).ok_or(Error::OutOfRange(p))?
    };
    if n == 0 && unramified < ceil_log(p, s + 1) {
        return Err(Error::Internal(format!(
            "degree {unramified} of Q_{p}(zeta_{s}) is below log_p(s+1)"
        )));
    }
    unramified
        .checked_mul(ramified)
        .ok_or(Error::OutOfRange(s))
}

/// Smallest `r` with `base^r ≥ x`.
pub fn ceil_log(base: u64, x: u64) -> u64 {
    let mut r = 0;
    let mut acc: u128 = 1;
    while acc < x as u128 {
        acc *= base as u128;
        r += 1;
    }
    r
}

/// Degree of `F_p(ζ_a, ζ_{p0^v})` over `F_p(ζ_a, ζ_{p0^{v-1}})`, from exact
/// multiplicative orders.
pub fn tower_step_degree(p: u64, a: u64, p0: u64, v: u32) -> Result<u64> {
    if v == 0 {
        return Err(Error::OutOfRange(0));
    }
    if p == p0 || !is_prime(p0) {
        return Err(Error::BadInput(format!("p0 = {p0} must be a prime other than p = {p}")));
    }
    if a.gcd(&(p * p0)) != 1 {
        return Err(Error::NotCoprime { a, b: p * p0 });
    }
    let lower = checked_pow(p0, v - 1)
        .and_then(|x| x.checked_mul(a))
        .ok_or(Error::OutOfRange(p0))?;
    let upper = lower.checked_mul(p0).ok_or(Error::OutOfRange(p0))?;
    Ok(multiplicative_order(p, upper)? / multiplicative_order(p, lower)?)
}

/// The closed-form step degree from the threshold formulas (odd `p0`, and
/// the `p0 = 2` variant). These are known to disagree with
/// [`tower_step_degree`] for `p0 = 2`, `p ≡ 3 (mod 4)` just above
/// `v_2(p - 1)`; callers use them as a cross-check only.
pub fn closed_form_step_degree(p: u64, a: u64, p0: u64, v: u32) -> Result<u64> {
    if v == 0 {
        return Err(Error::OutOfRange(0));
    }
    let base_degree = multiplicative_order(p, a)?;
    let vd = padic_valuation(base_degree as i128, p0)?;
    if p0 == 2 {
        let l = padic_valuation(p as i128 - 1, 2)? + padic_valuation(p as i128 + 1, 2)? + vd - 1;
        return Ok(if v <= l { 1 } else { 2 });
    }
    let o = multiplicative_order(p, p0)?;
    if v == 1 {
        return Ok(o / base_degree.gcd(&o));
    }
    let t = valuation_of_power_minus_one(p, o, p0);
    Ok(if v <= t + vd { 1 } else { p0 })
}

/// `v_q(p^e - 1)` without forming `p^e`.
fn valuation_of_power_minus_one(p: u64, e: u64, q: u64) -> u32 {
    let mut t = 0;
    let mut modulus = q;
    while pow_mod(p, e, modulus) == 1 {
        t += 1;
        match modulus.checked_mul(q) {
            Some(m) => modulus = m,
            None => break,
        }
    }
    t
}

type CyclotomicMemo = Mutex<HashMap<u64, Arc<Vec<i64>>>>;

fn memo() -> &'static CyclotomicMemo {
    static MEMO: OnceLock<CyclotomicMemo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Coefficients of `Φ_s` over the integers, constant term first.
///
/// `Φ_s` is first reduced to the squarefree kernel via
/// `Φ_s(X) = Φ_{rad s}(X^{s / rad s})`; the kernel is computed as the exact
/// quotient `∏_{d | n} (1 - X^d)^{μ(n/d)}`, multiplying and dividing by sparse
/// binomials in `Z[[X]]` truncated past the degree `φ(n)`.
pub fn cyclotomic_polynomial(s: u64) -> Result<Arc<Vec<i64>>> {
    if s == 0 || s > MAX_CYCLOTOMIC_INDEX {
        return Err(Error::OutOfRange(s));
    }
    if let Some(hit) = memo().lock().unwrap().get(&s) {
        return Ok(hit.clone());
    }
    let poly = Arc::new(compute_cyclotomic(s)?);
    memo().lock().unwrap().insert(s, poly.clone());
    Ok(poly)
}

fn compute_cyclotomic(s: u64) -> Result<Vec<i64>> {
    if s == 1 {
        return Ok(vec![-1, 1]);
    }
    let factors = factorize(s);
    let rad: u64 = factors.iter().map(|&(q, _)| q).product();
    let stretch = (s / rad) as usize;
    let kernel = if factors.len() == 1 {
        vec![1; rad as usize]
    } else {
        squarefree_cyclotomic(rad, &factors)?
    };
    let mut out = vec![0i64; (kernel.len() - 1) * stretch + 1];
    for (i, c) in kernel.into_iter().enumerate() {
        out[i * stretch] = c;
    }
    Ok(out)
}

fn squarefree_cyclotomic(n: u64, factors: &[(u64, u32)]) -> Result<Vec<i64>> {
    let degree = euler_phi(n) as usize;
    let mut series = vec![0i64; degree + 1];
    series[0] = 1;
    let primes: Vec<u64> = factors.iter().map(|&(q, _)| q).collect();
    let overflow = || Error::OutOfRange(n);
    // divisors d = n / m over squarefree m, sign μ(m)
    let mut multiply = Vec::new();
    let mut divide = Vec::new();
    for mask in 0u32..(1 << primes.len()) {
        let m: u64 = primes
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, q)| q)
            .product();
        let d = (n / m) as usize;
        if mask.count_ones() % 2 == 0 {
            multiply.push(d);
        } else {
            divide.push(d);
        }
    }
    for d in multiply {
        // series *= (1 - X^d)
        for i in (d..=degree).rev() {
            series[i] = series[i].checked_sub(series[i - d]).ok_or_else(overflow)?;
        }
    }
    for d in divide {
        // series /= (1 - X^d)
        for i in d..=degree {
            series[i] = series[i].checked_add(series[i - d]).ok_or_else(overflow)?;
        }
    }
    Ok(series)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_order(p: u64, m: u64) -> u64 {
        let mut x = p % m;
        let mut r = 1;
        while x != 1 % m {
            x = x * p % m;
            r += 1;
        }
        r
    }

    fn int_poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    #[test]
    fn order_examples() {
        assert_eq!(multiplicative_order(7, 1).unwrap(), 1);
        assert_eq!(multiplicative_order(19, 5).unwrap(), 2);
        assert_eq!(multiplicative_order(3, 104).unwrap(), 6);
        assert!(matches!(multiplicative_order(3, 12), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn order_matches_brute_force() {
        for p in [2u64, 3, 5, 7, 19, 101] {
            for m in 1..2000u64 {
                if p.gcd(&m) == 1 {
                    assert_eq!(multiplicative_order(p, m).unwrap(), brute_order(p, m), "p={p} m={m}");
                }
            }
        }
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(padic_valuation(1, 5).unwrap(), 0);
        assert_eq!(padic_valuation(360, 2).unwrap(), 3);
        assert_eq!(padic_valuation(242, 11).unwrap(), 2);
        assert_eq!(padic_valuation(-243, 3).unwrap(), 5);
        assert_eq!(padic_valuation(0, 3), Err(Error::ZeroInput));
    }

    #[test]
    fn phi_examples() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(9), 6);
        assert_eq!(euler_phi(104), 48);
    }

    #[test]
    fn degree_examples() {
        assert_eq!(cyclotomic_degree(7, 1, 0).unwrap(), 1);
        assert_eq!(cyclotomic_degree(19, 5, 0).unwrap(), 2);
        assert_eq!(cyclotomic_degree(3, 104, 0).unwrap(), 6);
        assert_eq!(cyclotomic_degree(3, 4, 2).unwrap(), 2 * 6);
        assert!(cyclotomic_degree(3, 6, 0).is_err());
    }

    #[test]
    fn step_degree_examples() {
        assert_eq!(tower_step_degree(3, 1, 13, 1).unwrap(), 3);
        assert_eq!(tower_step_degree(19, 1, 5, 1).unwrap(), 2);
        assert_eq!(tower_step_degree(19, 1, 2, 2).unwrap(), 2);
        // the threshold formula says 1 here
        assert_eq!(closed_form_step_degree(19, 1, 2, 2).unwrap(), 1);
        assert!(tower_step_degree(3, 3, 2, 1).is_err());
    }

    #[test]
    fn closed_form_agrees_for_odd_prime_powers() {
        for p in [3u64, 5, 7, 19] {
            for p0 in [3u64, 5, 7, 11, 13] {
                if p0 == p {
                    continue;
                }
                for a in [1u64, 2, 4, 8, 13, 16, 25] {
                    if a.gcd(&(p * p0)) != 1 {
                        continue;
                    }
                    for v in 1..=3 {
                        assert_eq!(
                            tower_step_degree(p, a, p0, v).unwrap(),
                            closed_form_step_degree(p, a, p0, v).unwrap(),
                            "p={p} a={a} p0={p0} v={v}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(*cyclotomic_polynomial(1).unwrap(), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(5).unwrap(), vec![1, 1, 1, 1, 1]);
        assert_eq!(*cyclotomic_polynomial(4).unwrap(), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6).unwrap(), vec![1, -1, 1]);
        // first index with a coefficient of absolute value 2
        assert!(cyclotomic_polynomial(105).unwrap().contains(&-2));
        assert!(cyclotomic_polynomial(0).is_err());
        assert!(cyclotomic_polynomial(MAX_CYCLOTOMIC_INDEX + 1).is_err());
    }

    #[test]
    fn cyclotomic_product_is_binomial() {
        for s in 1..=120u64 {
            let mut acc = vec![1i64];
            for d in (1..=s).filter(|d| s % d == 0) {
                acc = int_poly_mul(&acc, &cyclotomic_polynomial(d).unwrap());
            }
            let mut expected = vec![0i64; s as usize + 1];
            expected[0] = -1;
            expected[s as usize] = 1;
            assert_eq!(acc, expected, "s={s}");
        }
    }

    #[test]
    fn factored_order_roundtrip() {
        let f = FactoredOrder::new(12584).unwrap();
        assert_eq!(f.factors(), &[(2, 3), (11, 2), (13, 1)]);
        assert_eq!(f.radices(), vec![2, 2, 2, 11, 11, 13]);
        assert_eq!(f.radix_weight(), 6 + 22 + 13);
        let g = FactoredOrder::from_factors(&[(13, 1), (2, 1), (2, 2), (11, 2)]).unwrap();
        assert_eq!(f, g);
        assert!(FactoredOrder::from_factors(&[(4, 1)]).is_err());
    }
}
