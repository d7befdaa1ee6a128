//! The full chain `planner → tower → lift → plan`, seeded and counted.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::counter::MulCounter;
use crate::cyclotomic::FactoredOrder;
use crate::error::Result;
use crate::fft::{make_plan, poly_multiply, FFTPlan};
use crate::lift::{lift_root, LiftResult};
use crate::padic::ResidueInt;
use crate::planner::{choose_parameters, PlannerResult};
use crate::tower::{build_root_of_unity_with_counter, TowerRoot};

/// Seed used when the caller does not pick one.
pub const DEFAULT_SEED: u64 = 0x5eed;

/// Default precision in `p`-adic digits.
pub const DEFAULT_PRECISION: u32 = 32;

/// Everything needed to run transforms of one length.
#[derive(Clone, Debug)]
pub struct Pipeline {
    pub root: TowerRoot,
    pub lift: LiftResult,
    pub plan: FFTPlan,
    /// Base multiplications spent in the tower.
    pub tower_mults: u64,
    /// Base multiplications spent lifting and building the plan.
    pub lift_mults: u64,
}

/// Builds the root, lift and plan for length `s` at `K` digits.
pub fn build_for_length(p: u64, s: &FactoredOrder, k: u32, seed: u64) -> Result<Pipeline> {
    let counter = MulCounter::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (root, tower_mults) =
        counter.measure(|| build_root_of_unity_with_counter(p, s, &mut rng, counter.clone()));
    let root = root?;
    let (lift, lift_mults) = counter.measure(|| -> Result<_> {
        let lift = lift_root(root.modulus(), p, s, k, counter.clone())?;
        let plan = make_plan(s, &lift, k)?;
        Ok((lift, plan))
    });
    let (lift, plan) = lift?;
    Ok(Pipeline { root, lift, plan, tower_mults, lift_mults })
}

/// Chooses `s > N` with the planner and builds the pipeline for it.
pub fn build(p: u64, n: u64, k: u32, seed: u64) -> Result<(PlannerResult, Pipeline)> {
    let planned = choose_parameters(p, n)?;
    let pipeline = build_for_length(p, &planned.s, k, seed)?;
    Ok((planned, pipeline))
}

/// Product over `Z/p^K` with a planner-chosen length.
pub fn multiply(
    f: &[ResidueInt],
    g: &[ResidueInt],
    p: u64,
    k: u32,
    seed: u64,
) -> Result<Vec<ResidueInt>> {
    let degree = (f.len() + g.len()).saturating_sub(2) as u64;
    let (_, pipeline) = build(p, degree.max(1), k, seed)?;
    poly_multiply(f, g, &pipeline.plan)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiply_through_the_planner() {
        let r = |v: &[u64]| v.iter().map(|&x| ResidueInt::from(x)).collect::<Vec<_>>();
        let out = multiply(&r(&[1, 1]), &r(&[1, 1]), 3, 4, DEFAULT_SEED).unwrap();
        assert_eq!(out, r(&[1, 2, 1]));
        let out = multiply(&r(&[5, 0, 7]), &r(&[1]), 19, 2, 1).unwrap();
        assert_eq!(out, r(&[5, 0, 7]));
    }

    #[test]
    fn planned_length_covers_degree() {
        let (planned, pipeline) = build(3, 100, 8, DEFAULT_SEED).unwrap();
        assert_eq!(planned.s.value(), 104);
        assert_eq!(pipeline.plan.len(), 104);
        assert_eq!(pipeline.root.degree(), 6);
        assert!(pipeline.tower_mults > 0 && pipeline.lift_mults > 0);
    }
}
