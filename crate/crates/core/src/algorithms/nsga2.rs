use super::{crowding_distance, AlgorithmConfig, AlgorithmKind, Engine, RunOutcome};
use crate::domain::Individual;
use crate::error::Result;
use crate::problems::Problem;
use crate::scalar::Scalar;

/// C-NSGAII: NSGA-II ranked on the penalized front level.
pub fn run_c_nsgaii<T: Scalar>(
    problem: &dyn Problem<T>,
    cfg: &AlgorithmConfig<T>,
) -> Result<RunOutcome<T>> {
    run(problem, cfg, true)
}

/// Plain NSGA-II; the cone is only used for reporting angles.
pub fn run_nsgaii<T: Scalar>(
    problem: &dyn Problem<T>,
    cfg: &AlgorithmConfig<T>,
) -> Result<RunOutcome<T>> {
    run(problem, cfg, false)
}

/// Indices of the `n` survivors: whole penalized fronts in ascending order,
/// then the last front by descending crowding distance (ties to the lower
/// index). Writes crowding distances into `members`.
pub fn nsga2_survivors<T: Scalar>(members: &mut [Individual<T>], n: usize) -> Result<Vec<usize>> {
    let mut levels: Vec<usize> = members.iter().map(|m| m.penalized_front_level).collect();
    levels.sort_unstable();
    levels.dedup();
    let mut survivors = Vec::with_capacity(n);
    for level in levels {
        if survivors.len() >= n {
            break;
        }
        let front: Vec<usize> = (0..members.len())
            .filter(|&i| members[i].penalized_front_level == level)
            .collect();
        let objectives: Vec<&[T]> = front
            .iter()
            .map(|&i| members[i].objectives.as_ref())
            .collect();
        let crowding = crowding_distance(&objectives)?;
        for (&i, &c) in front.iter().zip(&crowding) {
            members[i].crowding = c;
        }
        let room = n - survivors.len();
        if front.len() <= room {
            survivors.extend(front);
        } else {
            let mut order: Vec<usize> = (0..front.len()).collect();
            order.sort_by(|&a, &b| {
                crowding[b]
                    .partial_cmp(&crowding[a])
                    .unwrap_or(std::cmp::Ordering::Equal)
                    .then(a.cmp(&b))
            });
            survivors.extend(order.into_iter().take(room).map(|k| front[k]));
        }
    }
    Ok(survivors)
}

fn run<T: Scalar>(
    problem: &dyn Problem<T>,
    cfg: &AlgorithmConfig<T>,
    penalize: bool,
) -> Result<RunOutcome<T>> {
    let mut engine = Engine::new(problem, cfg, penalize)?;
    let mut pop = engine.initial_population()?;
    if !engine.has_budget_for_generation() {
        return Ok(engine.finish(AlgorithmKind::CNsgaii, pop, true));
    }
    while engine.has_budget_for_generation() {
        let mut merged = engine.merged_with_offspring(&pop)?;
        let chosen = nsga2_survivors(&mut merged.members, cfg.population_size)?;
        pop = engine.advance(merged, &chosen)?;
    }
    Ok(engine.finish(AlgorithmKind::CNsgaii, pop, false))
}
