//! Transform-length selection.
//!
//! For a target `N`, the length is `s = Φ_1(p)·Φ_2(p)·Φ_3(p)·Φ_5(p)⋯Φ_{p_r}(p)`
//! over the first `r` primes, with `r ≥ 1` minimal such that `s > N`. Each
//! factor `Φ_q(p) = (p^q - 1)/(p - 1)` is small, so `s` factors cheaply
//! and `p ∤ s`. The extension degree is expected to be `p_1⋯p_r`; it is
//! computed exactly and any disagreement is flagged.

use std::fmt::Write as _;

use crate::cyclotomic::{factorize, is_prime, multiplicative_order, FactoredOrder};
use crate::error::{Error, Result};

/// Largest `Φ_q(p)` we factor.
const FACTOR_LIMIT: u128 = u64::MAX as u128;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlannerResult {
    pub p: u64,
    pub n: u64,
    pub r: usize,
    pub s: FactoredOrder,
    pub d: u64,
    /// `p_1⋯p_r`, the degree the construction predicts.
    pub expected_d: u64,
    pub predicted_mults: u128,
}

impl PlannerResult {
    /// Whether the exact degree agrees with `p_1⋯p_r`.
    pub fn degree_matches(&self) -> bool {
        self.d == self.expected_d
    }

    /// `d < sqrt(s / Σ v_i p_i)`, the regime where the transform dominates
    /// ring-arithmetic overheads. Reported, never enforced.
    pub fn small_degree(&self) -> bool {
        let bound = self.s.value() as f64 / self.s.radix_weight() as f64;
        (self.d as f64) < bound.sqrt()
    }
}

/// `Φ_q(p) = 1 + p + … + p^{q-1}` for prime `q`.
fn phi_at(q: u64, p: u64) -> Option<u128> {
    let pq = (p as u128).checked_pow(q as u32)?;
    Some((pq - 1) / (p as u128 - 1))
}

pub fn choose_parameters(p: u64, n: u64) -> Result<PlannerResult> {
    if p == 2 {
        return Err(Error::EvenPrime);
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 {
        return Err(Error::OutOfRange(0));
    }
    let mut factors = factorize(p - 1);
    let mut s = (p - 1) as u128;
    let mut used = Vec::new();
    for q in (2u64..).filter(|&q| is_prime(q)) {
        let phi = phi_at(q, p)
            .filter(|&v| v <= FACTOR_LIMIT)
            .ok_or_else(|| Error::FactoringFailure(format!("Φ_{q}({p}) is too large")))?;
        s = s
            .checked_mul(phi)
            .filter(|&v| v <= u64::MAX as u128)
            .ok_or_else(|| Error::FactoringFailure(format!("s exceeds 64 bits at Φ_{q}({p})")))?;
        factors.extend(factorize(phi as u64));
        used.push(q);
        if s > n as u128 {
            break;
        }
    }
    let s = FactoredOrder::from_factors(&factors)?;
    let d = multiplicative_order(p, s.value())?;
    let expected_d = used.iter().product();
    let mut result = PlannerResult {
        p,
        n,
        r: used.len(),
        s,
        d,
        expected_d,
        predicted_mults: 0,
    };
    result.predicted_mults = predicted_cost(&result);
    Ok(result)
}

/// `d²·s·Σ v_i p_i`.
pub fn predicted_cost(result: &PlannerResult) -> u128 {
    transform_budget(result.d, &result.s)
}

pub fn transform_budget(d: u64, s: &FactoredOrder) -> u128 {
    (d as u128).pow(2) * s.value() as u128 * s.radix_weight() as u128
}

fn log2_at_least_one(x: f64) -> f64 {
    x.log2().max(1.0)
}

/// Base multiplications the root construction and lift are expected to
/// need: `d²·Σ v_i p_i² log p_i` for the splitting steps, `d³(log p + log d)`
/// per prime for each rebase and for the final expansion, and
/// `d²·n·log s` for `n` Newton doublings.
pub fn setup_budget(p: u64, s: &FactoredOrder, d: u64, doublings: u32) -> f64 {
    let d = d as f64;
    let splitting: f64 = s
        .factors()
        .iter()
        .map(|&(q, v)| v as f64 * (q * q) as f64 * log2_at_least_one(q as f64))
        .sum();
    let rebase = d.powi(3) * (log2_at_least_one(p as f64) + log2_at_least_one(d));
    let newton = d * d * doublings.max(1) as f64 * log2_at_least_one(s.value() as f64);
    d * d * splitting + (s.factors().len() as f64 + 1.0) * rebase + newton
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReportRow {
    pub n: u64,
    pub r: usize,
    pub s: u64,
    pub d: u64,
    pub s_over_n: f64,
    pub predicted: u128,
    pub predicted_per_n: f64,
    pub small_degree: bool,
    pub degree_matches: bool,
    /// Counted base multiplications of one transform, when measured.
    pub measured: Option<u64>,
}

/// One row per `N`: length, degree, `s/N`, predicted cost and cost per
/// input coefficient.
pub fn asymptotic_report(p: u64, ns: &[u64]) -> Result<Vec<ReportRow>> {
    ns.iter()
        .map(|&n| {
            let plan = choose_parameters(p, n)?;
            Ok(ReportRow {
                n,
                r: plan.r,
                s: plan.s.value(),
                d: plan.d,
                s_over_n: plan.s.value() as f64 / n as f64,
                predicted: plan.predicted_mults,
                predicted_per_n: plan.predicted_mults as f64 / n as f64,
                small_degree: plan.small_degree(),
                degree_matches: plan.degree_matches(),
                measured: None,
            })
        })
        .collect()
}

const HEADERS: [&str; 10] =
    ["N", "r", "s", "d", "s/N", "predicted", "predicted/N", "small_d", "d_matches", "measured"];

fn cells(row: &ReportRow) -> [String; 10] {
    [
        row.n.to_string(),
        row.r.to_string(),
        row.s.to_string(),
        row.d.to_string(),
        format!("{:.4}", row.s_over_n),
        row.predicted.to_string(),
        format!("{:.1}", row.predicted_per_n),
        row.small_degree.to_string(),
        row.degree_matches.to_string(),
        row.measured.map_or_else(|| "-".to_string(), |m| m.to_string()),
    ]
}

/// Right-aligned text table.
pub fn render_table(rows: &[ReportRow]) -> String {
    let body: Vec<[String; 10]> = rows.iter().map(cells).collect();
    let widths: Vec<usize> = (0..HEADERS.len())
        .map(|i| body.iter().map(|r| r[i].len()).chain([HEADERS[i].len()]).max().unwrap())
        .collect();
    let mut out = String::new();
    let line = |cols: Vec<&str>, out: &mut String| {
        let padded: Vec<String> =
            cols.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        let _ = writeln!(out, "{}", padded.join("  "));
    };
    line(HEADERS.to_vec(), &mut out);
    for r in &body {
        line(r.iter().map(String::as_str).collect(), &mut out);
    }
    out
}

pub fn render_csv(rows: &[ReportRow]) -> String {
    let mut out = HEADERS.join(",") + "\n";
    for r in rows {
        out += &cells(r).join(",");
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn planner_examples() {
        let r = choose_parameters(3, 1).unwrap();
        assert_eq!((r.r, r.s.value(), r.d), (1, 8, 2));
        let r = choose_parameters(3, 100).unwrap();
        assert_eq!((r.r, r.s.value(), r.d), (2, 104, 6));
        assert_eq!(r.s.radices(), vec![2, 2, 2, 13]);
        let r = choose_parameters(3, 10_000).unwrap();
        assert_eq!((r.r, r.s.value(), r.d), (3, 12584, 30));
        assert_eq!(r.s.factors(), &[(2, 3), (11, 2), (13, 1)]);
        assert!(r.degree_matches());
    }

    #[test]
    fn cost_examples() {
        let r = choose_parameters(3, 1).unwrap();
        assert_eq!(predicted_cost(&r), 192);
        let r = choose_parameters(3, 100).unwrap();
        assert_eq!(predicted_cost(&r), 71136);
        assert_eq!(transform_budget(1, &FactoredOrder::new(2).unwrap()), 4);
    }

    #[test]
    fn report_rows() {
        let rows = asymptotic_report(3, &[100, 10_000]).unwrap();
        assert!((rows[0].s_over_n - 1.04).abs() < 1e-12);
        assert!((rows[1].s_over_n - 1.2584).abs() < 1e-12);
        let csv = render_csv(&rows);
        assert!(csv.starts_with("N,r,s,d,s/N,"));
        assert!(csv.contains("\n100,2,104,6,1.0400,71136,"));
        assert_eq!(render_table(&rows).lines().count(), 3);
    }

    #[test]
    fn rejects_bad_primes() {
        assert_eq!(choose_parameters(2, 10).unwrap_err(), Error::EvenPrime);
        assert_eq!(choose_parameters(9, 10).unwrap_err(), Error::NotPrime(9));
        assert_eq!(choose_parameters(3, 0).unwrap_err(), Error::OutOfRange(0));
    }
}
