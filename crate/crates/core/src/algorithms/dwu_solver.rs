use super::{AlgorithmConfig, AlgorithmKind, Engine, RunOutcome};
use crate::dwu::dwu_select;
use crate::error::Result;
use crate::problems::Problem;
use crate::scalar::Scalar;

/// C-DWU: survivors are the greedy cone-penalized DWU subset of `P_t ∪ L_t`,
/// seeded from the lowest penalized front.
pub fn run_c_dwu<T: Scalar>(
    problem: &dyn Problem<T>,
    cfg: &AlgorithmConfig<T>,
) -> Result<RunOutcome<T>> {
    run(problem, cfg, true)
}

/// Unpenalized DWU: plain `w_d`, plain front levels.
pub fn run_dwu<T: Scalar>(
    problem: &dyn Problem<T>,
    cfg: &AlgorithmConfig<T>,
) -> Result<RunOutcome<T>> {
    run(problem, cfg, false)
}

fn run<T: Scalar>(
    problem: &dyn Problem<T>,
    cfg: &AlgorithmConfig<T>,
    penalize: bool,
) -> Result<RunOutcome<T>> {
    let mut engine = Engine::new(problem, cfg, penalize)?;
    let mut pop = engine.initial_population()?;
    if !engine.has_budget_for_generation() {
        return Ok(engine.finish(AlgorithmKind::CDwu, pop, true));
    }
    while engine.has_budget_for_generation() {
        let merged = engine.merged_with_offspring(&pop)?;
        let chosen = dwu_select(&merged.members, cfg.population_size, engine.cone())?;
        pop = engine.advance(merged, &chosen)?;
    }
    Ok(engine.finish(AlgorithmKind::CDwu, pop, false))
}
