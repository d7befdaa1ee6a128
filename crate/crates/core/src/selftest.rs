//! The acceptance suite, shared by the `acceptance` test target and the
//! command-line `selftest`.
//!
//! Each criterion checks the library against an oracle that avoids the code
//! path under test: brute-force orders, direct coefficient searches,
//! schoolbook products over plain big integers and the linear Hensel lift.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::counter::MulCounter;
use crate::cyclotomic::{
    closed_form_step_degree, cyclotomic_degree, tower_step_degree,
    FactoredOrder,
};
use crate::ff::{FFPoly, PolyRing, PrimeField};
use crate::fft::{dft, idft, naive_dft, poly_multiply};
use crate::lift::{
    expand_lifted_factor, hensel_factor_oracle, newton_lift_root, newton_lift_root_observed,
    newton_lift_with_modulus,
};
use crate::padic::{PadicCtx, ResidueInt, RingElement};
use crate::pipeline::{build, build_for_length, DEFAULT_SEED};
use crate::planner::{choose_parameters, setup_budget, transform_budget};
use crate::tower::{build_root_of_unity, cz_split};

type Check = fn() -> Verdict;

/// One acceptance criterion with its time limit.
pub struct Criterion {
    pub id: u32,
    pub name: &'static str,
    pub limit: Duration,
    check: Check,
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub elapsed: Duration,
    pub limit: Duration,
    pub detail: String,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} criterion {:>2} {} ({:.2} s, limit {} s): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed.as_secs_f64(),
            self.limit.as_secs(),
            self.detail
        )
    }
}

impl Criterion {
    pub fn run(&self) -> Outcome {
        let start = Instant::now();
        let result = (self.check)();
        let elapsed = start.elapsed();
        let (mut passed, mut detail) = match result {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        if passed && elapsed > self.limit {
            passed = false;
            detail = format!("exceeded time limit; {detail}");
        }
        Outcome { id: self.id, name: self.name, passed, elapsed, limit: self.limit, detail }
    }
}

pub fn criteria() -> Vec<Criterion> {
    let c = |id, name, secs, check| Criterion { id, name, limit: Duration::from_secs(secs), check };
    vec![
        c(1, "phi5 splitting over F_19", 1, phi5_splitting as Check),
        c(2, "lift exactness at 19^2", 1, lift_exactness),
        c(3, "Newton convergence", 5, newton_convergence),
        c(4, "fast lift equals linear Hensel oracle", 30, oracle_equivalence),
        c(5, "degree formulas", 10, degree_formulas),
        c(6, "planner", 10, planner_checks),
        c(7, "transform correctness", 60, transform_correctness),
        c(8, "cost model", 120, cost_model),
        c(9, "end-to-end smoke at N = 10^4, K = 32", 60, end_to_end),
        c(10, "lift-choice independence", 5, lift_choice_independence),
    ]
}

pub fn run_all() -> Vec<Outcome> {
    criteria().iter().map(Criterion::run).collect()
}

type Verdict = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: fmt::Display>(e: E) -> String {
    e.to_string()
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn residues(v: &[u64]) -> Vec<ResidueInt> {
    v.iter().map(|&x| ResidueInt::from(x)).collect()
}

/// Least `r ≥ 1` with `p^r ≡ 1 (mod m)`, by stepping through powers.
fn brute_order(p: u64, m: u64) -> u64 {
    let (mut x, mut r) = (p % m, 1);
    while x != 1 % m {
        x = x * p % m;
        r += 1;
    }
    r
}

/// Big-integer polynomial helpers modulo `m`, written independently of the
/// library's ring kernels.
mod plain {
    use super::*;

    pub fn mul(a: &[BigUint], b: &[BigUint], m: &BigUint) -> Vec<BigUint> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigUint::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = (&out[i + j] + x * y) % m;
            }
        }
        out
    }

    /// Remainder modulo a monic `f`.
    pub fn rem(a: &[BigUint], f: &[BigUint], m: &BigUint) -> Vec<BigUint> {
        let d = f.len() - 1;
        let mut r = a.to_vec();
        while r.len() > d {
            let c = r.pop().unwrap();
            let k = r.len() - d;
            for j in 0..d {
                let t = &c * &f[j] % m;
                r[k + j] = (&r[k + j] + m - t) % m;
            }
        }
        r.resize(d, BigUint::zero());
        r
    }

    /// `a^e mod (f, m)` by right-to-left binary powering.
    pub fn pow(a: &[BigUint], mut e: u64, f: &[BigUint], m: &BigUint) -> Vec<BigUint> {
        let d = f.len() - 1;
        let mut acc = vec![BigUint::zero(); d];
        acc[0] = BigUint::one() % m;
        let mut base = rem(a, f, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = rem(&mul(&acc, &base, m), f, m);
            }
            base = rem(&mul(&base, &base, m), f, m);
            e >>= 1;
        }
        acc
    }

    pub fn to_big(v: &[ResidueInt]) -> Vec<BigUint> {
        v.iter().map(|c| c.value().clone()).collect()
    }
}

/// The monic `X^2 + aX + b` dividing `Φ_5` modulo `361` with
/// `(a, b) ≡ (5, 1) (mod 19)`, found by trying every candidate.
fn phi5_factor_by_search() -> Option<(u64, u64)> {
    let m = BigUint::from(361u32);
    let phi5: Vec<BigUint> = (0..5).map(|_| BigUint::one()).collect();
    let mut found = None;
    for a in (5..361).step_by(19) {
        for b in (1..361).step_by(19) {
            let f = [BigUint::from(b as u32), BigUint::from(a as u32), BigUint::one()];
            if plain::rem(&phi5, &f, &m).iter().all(Zero::is_zero) {
                if found.is_some() {
                    return None;
                }
                found = Some((a, b));
            }
        }
    }
    found
}

fn fbar_for(p: u64, s: u64, seed: u64) -> std::result::Result<(FactoredOrder, FFPoly<u64>), String> {
    let order = FactoredOrder::new(s).map_err(err)?;
    let root = build_root_of_unity(p, &order, &mut rng(seed)).map_err(err)?;
    Ok((order, root.modulus().clone()))
}

fn phi5_splitting() -> Verdict {
    let f19 = PrimeField::new(19, MulCounter::new());
    let ring = PolyRing::new(&f19);
    let phi5 = ring.from_u64(&[1, 1, 1, 1, 1]);
    let first = ring.from_u64(&[1, 5, 1]);
    let second = ring.from_u64(&[1, 15, 1]);
    let (mut a, mut b) = (0, 0);
    for seed in 0..100 {
        let g = cz_split(&f19, &phi5, 2, &mut rng(seed)).map_err(err)?;
        if g == first {
            a += 1;
        } else if g == second {
            b += 1;
        } else {
            return Err(format!("seed {seed} returned {g}"));
        }
    }
    ensure(a > 0 && b > 0, || format!("only one factor seen ({a}/{b})"))?;
    Ok(format!("X^2 + 5*X + 1 x{a}, X^2 + 15*X + 1 x{b}"))
}

fn lift_exactness() -> Verdict {
    let order = FactoredOrder::new(5).map_err(err)?;
    let fbar = FFPoly::from_residues(19, &[1, 5, 1]);
    let lift = newton_lift_root(&fbar, 19, &order, 1, MulCounter::new()).map_err(err)?;
    let fast = expand_lifted_factor(&lift).map_err(err)?;
    let (a, b) = phi5_factor_by_search().ok_or("coefficient search found no unique factor")?;
    let expected = residues(&[b, a, 1]);
    ensure(expected == residues(&[1, 43, 1]), || format!("search found a={a}, b={b}"))?;
    ensure(fast == expected, || format!("expanded factor {fast:?}"))?;
    let ctx = PadicCtx::new(19, 2).map_err(err)?;
    let oracle = hensel_factor_oracle(&ctx, &ctx.x_pow_minus_one(5), &fbar).map_err(err)?;
    ensure(oracle == expected, || format!("Hensel oracle gave {oracle:?}"))?;
    let rendered: Vec<String> = fast.iter().map(ToString::to_string).collect();
    Ok(format!("factor coefficients [{}] mod 361", rendered.join(", ")))
}

fn newton_convergence() -> Verdict {
    let quinary = choose_parameters(5, 1).map_err(err)?.s.value();
    let cases = [(3, 8), (3, 104), (19, 5), (5, quinary)];
    let mut checked = 0;
    for (p, s) in cases {
        let (order, fbar) = fbar_for(p, s, DEFAULT_SEED)?;
        let f: Vec<BigUint> = fbar.coeffs().iter().map(|&c| BigUint::from(c)).collect();
        let mut failure = None;
        newton_lift_root_observed(&fbar, p, &order, 5, MulCounter::new(), |i, alpha| {
            let m = BigUint::from(p).pow(1 << i);
            let a = plain::to_big(&alpha.coeffs());
            let mut power = plain::pow(&a, s, &f, &m);
            power[0] = (&power[0] + &m - 1u32) % &m;
            if !power.iter().all(Zero::is_zero) && failure.is_none() {
                failure = Some(format!("p={p} s={s}: α^s ≠ 1 mod p^{} after step {i}", 1 << i));
            }
            checked += 1;
        })
        .map_err(err)?;
        if let Some(f) = failure {
            return Err(f);
        }
    }
    Ok(format!("{checked} steps checked over (3,8), (3,104), (19,5), (5,{quinary})"))
}

fn oracle_equivalence() -> Verdict {
    let cases: [(u64, u64, u32); 7] =
        [(3, 4, 5), (3, 8, 5), (19, 5, 5), (5, 24, 5), (7, 9, 5), (3, 13, 5), (3, 104, 4)];
    let mut compared = 0;
    for (p, s, max_n) in cases {
        let (order, fbar) = fbar_for(p, s, 1)?;
        for n in 0..=max_n {
            let lift = newton_lift_root(&fbar, p, &order, n, MulCounter::new()).map_err(err)?;
            let fast = expand_lifted_factor(&lift).map_err(err)?;
            let ctx = PadicCtx::new(p, 1 << n).map_err(err)?;
            let slow = hensel_factor_oracle(&ctx, &ctx.x_pow_minus_one(s as usize), &fbar)
                .map_err(err)?;
            ensure(fast == slow, || format!("mismatch at p={p} s={s} n={n}"))?;
            compared += 1;
        }
    }
    Ok(format!("{compared} (p, s, n) configurations agree"))
}

fn degree_formulas() -> Verdict {
    let mut count = 0;
    for p in [3u64, 5, 7, 19] {
        for s in (1..=300u64).filter(|s| s % p != 0) {
            let d = cyclotomic_degree(p, s, 0).map_err(err)?;
            let brute = brute_order(p, s);
            ensure(d == brute, || format!("p={p} s={s}: {d} vs brute force {brute}"))?;
            // telescoping over the last prime power of s
            let order = FactoredOrder::new(s).map_err(err)?;
            if let Some(&(p0, v)) = order.factors().last() {
                let a = s / p0.pow(v);
                let product: u64 = (1..=v)
                    .map(|j| tower_step_degree(p, a, p0, j))
                    .collect::<crate::Result<Vec<_>>>()
                    .map_err(err)?
                    .iter()
                    .product();
                ensure(product * brute_order(p, a) == brute, || {
                    format!("telescoping fails at p={p} a={a} p0={p0} v={v}")
                })?;
            }
            count += 1;
        }
    }
    let anomaly = tower_step_degree(19, 1, 2, 2).map_err(err)?;
    let closed = closed_form_step_degree(19, 1, 2, 2).map_err(err)?;
    ensure(anomaly == 2, || format!("(19, 2, v=2) gave {anomaly}"))?;
    Ok(format!("{count} (p, s) pairs; (19, 2, v=2) step degree {anomaly} (closed form {closed})"))
}

fn planner_checks() -> Verdict {
    let r = choose_parameters(3, 100).map_err(err)?;
    ensure((r.s.value(), r.d) == (104, 6), || format!("N=100 gave {:?}", (r.s.value(), r.d)))?;
    let r = choose_parameters(3, 10_000).map_err(err)?;
    ensure((r.s.value(), r.d) == (12584, 30), || {
        format!("N=10^4 gave {:?}", (r.s.value(), r.d))
    })?;
    let mut ns: Vec<u64> = (0..=50).map(|i| 10f64.powf(i as f64 / 10.0).round() as u64).collect();
    ns.dedup();
    let primes = [2u64, 3, 5, 7, 11, 13, 17, 19, 23];
    let mut count = 0;
    for p in [3u64, 5, 7] {
        for &n in &ns {
            let r = choose_parameters(p, n).map_err(err)?;
            let mut product = BigUint::from(p - 1);
            let mut through = Vec::new();
            for &q in &primes[..r.r] {
                through.push(product.clone());
                product *= (BigUint::from(p).pow(q as u32) - 1u32) / (p - 1);
            }
            ensure(product == BigUint::from(r.s.value()), || format!("p={p} N={n}: s mismatch"))?;
            ensure(product > BigUint::from(n), || format!("p={p} N={n}: s ≤ N"))?;
            ensure(r.r == 1 || through[r.r - 1] <= BigUint::from(n), || {
                format!("p={p} N={n}: r={} is not minimal", r.r)
            })?;
            ensure(r.s.value() % p != 0, || format!("p={p} N={n}: p divides s"))?;
            ensure(r.d == brute_order(p, r.s.value()), || format!("p={p} N={n}: degree"))?;
            ensure(r.degree_matches(), || {
                format!("p={p} N={n}: d={} but p_1⋯p_r={}", r.d, r.expected_d)
            })?;
            count += 1;
        }
    }
    Ok(format!("examples hold; {count} (p, N) cases minimal with p ∤ s"))
}

fn random_vector(ring: &std::sync::Arc<crate::padic::ExtensionDescriptor>, rng: &mut ChaCha8Rng, len: usize) -> Vec<RingElement> {
    let m = ring.ctx().modulus().clone();
    (0..len)
        .map(|_| {
            let coeffs: Vec<ResidueInt> = (0..ring.degree())
                .map(|_| ResidueInt::from(rng.gen::<u64>()))
                .map(|c| ring.ctx().residue(c.into_value() % &m))
                .collect();
            ring.element(&coeffs).unwrap()
        })
        .collect()
}

fn transform_correctness() -> Verdict {
    let mut vectors = 0;
    for s in [2u64, 4, 8, 104] {
        for k in [1u32, 8, 32] {
            let order = FactoredOrder::new(s).map_err(err)?;
            let pipeline = build_for_length(3, &order, k, DEFAULT_SEED).map_err(err)?;
            let plan = &pipeline.plan;
            let mut g = rng(s * 100 + k as u64);
            for _ in 0..50 {
                let x = random_vector(plan.ring(), &mut g, s as usize);
                let y = dft(&x, plan).map_err(err)?;
                ensure(y == naive_dft(&x, plan.root(), s as usize), || {
                    format!("dft differs from naive evaluation at s={s} K={k}")
                })?;
                ensure(idft(&y, plan).map_err(err)? == x, || {
                    format!("round trip fails at s={s} K={k}")
                })?;
                vectors += 1;
            }
        }
    }
    let order = FactoredOrder::new(104).map_err(err)?;
    let pipeline = build_for_length(3, &order, 8, DEFAULT_SEED).map_err(err)?;
    let m = BigUint::from(3u32).pow(8);
    let mut g = rng(7);
    for _ in 0..100 {
        let (df, dg) = (g.gen_range(0..52usize), g.gen_range(0..52usize));
        let f: Vec<u64> = (0..=df).map(|_| g.gen_range(0..6561)).collect();
        let h: Vec<u64> = (0..=dg).map(|_| g.gen_range(0..6561)).collect();
        let fast = poly_multiply(&residues(&f), &residues(&h), &pipeline.plan).map_err(err)?;
        let big = |v: &[u64]| v.iter().map(|&c| BigUint::from(c)).collect::<Vec<_>>();
        let mut slow = plain::mul(&big(&f), &big(&h), &m);
        while slow.last().is_some_and(Zero::is_zero) {
            slow.pop();
        }
        ensure(plain::to_big(&fast) == slow, || "poly_multiply differs from schoolbook".into())?;
    }
    Ok(format!("{vectors} vectors round-trip and match naive evaluation; 100 products match"))
}

fn cost_model() -> Verdict {
    let mut lines = Vec::new();
    for n in [100u64, 1000, 10_000] {
        let (planned, pipeline) = build(3, n, 32, DEFAULT_SEED).map_err(err)?;
        let plan = &pipeline.plan;
        let x = random_vector(plan.ring(), &mut rng(n), plan.len());
        let counter = plan.ring().ctx().counter().clone();
        let (out, count) = counter.measure(|| dft(&x, plan));
        out.map_err(err)?;
        let budget = 8 * transform_budget(planned.d, &planned.s);
        ensure((count as u128) <= budget, || format!("N={n}: dft count {count} > {budget}"))?;
        let setup = pipeline.tower_mults + pipeline.lift_mults;
        let doublings = pipeline.lift.doublings();
        let setup_limit = 32.0 * setup_budget(3, &planned.s, planned.d, doublings);
        ensure(setup as f64 <= setup_limit, || {
            format!("N={n}: setup count {setup} > {setup_limit:.0}")
        })?;
        lines.push(format!(
            "N={n}: dft {count} ≤ {budget}, setup {setup} ≤ {setup_limit:.0}"
        ));
    }
    Ok(lines.join("; "))
}

fn end_to_end() -> Verdict {
    let (planned, pipeline) = build(3, 10_000, 32, DEFAULT_SEED).map_err(err)?;
    let plan = &pipeline.plan;
    let x = random_vector(plan.ring(), &mut rng(9), plan.len());
    let y = dft(&x, plan).map_err(err)?;
    let back = idft(&y, plan).map_err(err)?;
    ensure(back == x, || "round trip is not exact".into())?;
    Ok(format!("s={} d={} round trip exact", planned.s.value(), planned.d))
}

fn lift_choice_independence() -> Verdict {
    let mut compared = 0;
    for (p, s, n) in [(19u64, 5u64, 3u32), (3, 104, 3), (3, 8, 4)] {
        let (order, fbar) = fbar_for(p, s, 3)?;
        let mut g = rng(s);
        let mut outputs = Vec::new();
        for shift in 0..3 {
            // shift every non-leading coefficient by a random multiple of p
            let d = fbar.degree().unwrap();
            let modulus: Vec<ResidueInt> = fbar
                .coeffs()
                .iter()
                .enumerate()
                .map(|(i, &c)| {
                    let extra = if shift == 0 || i == d { 0 } else { g.gen_range(1..1000u64) };
                    ResidueInt::from(c + extra * p)
                })
                .collect();
            let lift =
                newton_lift_with_modulus(&modulus, p, &order, n, MulCounter::new(), |_, _| {})
                    .map_err(err)?;
            outputs.push(expand_lifted_factor(&lift).map_err(err)?);
        }
        ensure(outputs.windows(2).all(|w| w[0] == w[1]), || {
            format!("expanded factors differ for p={p} s={s}")
        })?;
        compared += 1;
    }
    Ok(format!("{compared} factors identical under three lifts each"))
}
