//! The two generational solvers.
//!
//! Both share initialization, bookkeeping and variation and differ only in
//! survival: C-DWU keeps the greedy dominance-weighted-uniformity subset of
//! the merged population, C-NSGAII fills by penalized front and truncates
//! the last front by crowding distance.

mod crowding;
mod dwu_solver;
mod nsga2;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use crowding::crowding_distance;
pub use dwu_solver::{run_c_dwu, run_dwu};
pub use nsga2::{nsga2_survivors, run_c_nsgaii, run_nsgaii};

use crate::cone::{penalized_front_level, PreferenceCone};
use crate::domain::{DecisionVector, Individual, Population};
use crate::dominance::{DominanceTable, FrontPartition};
use crate::error::{Error, Result};
use crate::problems::Problem;
use crate::scalar::Scalar;
use crate::variation::{offspring, VariationConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgorithmKind {
    CDwu,
    CNsgaii,
}

impl AlgorithmKind {
    pub const ALL: [AlgorithmKind; 2] = [AlgorithmKind::CDwu, AlgorithmKind::CNsgaii];

    pub fn as_str(self) -> &'static str {
        match self {
            AlgorithmKind::CDwu => "c-dwu",
            AlgorithmKind::CNsgaii => "c-nsgaii",
        }
    }

    pub fn run<T: Scalar>(
        self,
        problem: &dyn Problem<T>,
        cfg: &AlgorithmConfig<T>,
    ) -> Result<RunOutcome<T>> {
        match self {
            AlgorithmKind::CDwu => run_c_dwu(problem, cfg),
            AlgorithmKind::CNsgaii => run_c_nsgaii(problem, cfg),
        }
    }
}

impl std::fmt::Display for AlgorithmKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for AlgorithmKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "c-dwu" | "cdwu" => Ok(AlgorithmKind::CDwu),
            "c-nsgaii" | "cnsgaii" | "c-nsga2" => Ok(AlgorithmKind::CNsgaii),
            other => Err(Error::InvalidConfig(format!("unknown algorithm `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlgorithmConfig<T> {
    pub population_size: usize,
    pub max_evaluations: usize,
    pub cone: PreferenceCone<T>,
    pub variation: VariationConfig<T>,
    pub seed: u64,
}

impl<T: Scalar> AlgorithmConfig<T> {
    /// Population 100, 10⁵ evaluations and standard variation for `dimension`.
    pub fn standard(dimension: usize, cone: PreferenceCone<T>, seed: u64) -> Self {
        Self {
            population_size: 100,
            max_evaluations: 100_000,
            cone,
            variation: VariationConfig::standard(dimension),
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.population_size < 2 || !self.population_size.is_multiple_of(2) {
            return Err(Error::InvalidConfig(format!(
                "population size must be even and at least 2, got {}",
                self.population_size
            )));
        }
        if self.max_evaluations < self.population_size {
            return Err(Error::InvalidConfig(format!(
                "evaluation budget {} is smaller than the population {}",
                self.max_evaluations, self.population_size
            )));
        }
        self.variation.validate()
    }
}

/// Final state of one solver run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunOutcome<T> {
    pub algorithm: AlgorithmKind,
    /// Final population with bookkeeping computed on it.
    pub population: Population<T>,
    /// Indices into `population.members` of the returned non-dominated set.
    pub reported: Vec<usize>,
    /// Set when the budget did not cover a single generation.
    pub initial_only: bool,
}

impl<T: Scalar> RunOutcome<T> {
    pub fn evaluations(&self) -> usize {
        self.population.evaluations
    }

    pub fn generations(&self) -> usize {
        self.population.generation
    }

    pub fn reported_members(&self) -> impl Iterator<Item = &Individual<T>> {
        self.reported.iter().map(|&i| &self.population.members[i])
    }
}

/// Counts calls into a problem's evaluation map.
pub struct Evaluator<'a, T: Scalar> {
    problem: &'a dyn Problem<T>,
    calls: usize,
}

impl<'a, T: Scalar> Evaluator<'a, T> {
    pub fn new(problem: &'a dyn Problem<T>) -> Self {
        Self { problem, calls: 0 }
    }

    pub fn calls(&self) -> usize {
        self.calls
    }

    pub fn individual(&mut self, decision: DecisionVector<T>) -> Result<Individual<T>> {
        self.calls += 1;
        let objectives = self.problem.evaluate(&decision)?;
        Ok(Individual::new(decision, objectives))
    }
}

impl<T: Scalar> Population<T> {
    /// Recomputes strength, raw dominance, front levels, angular distances
    /// and penalized front levels for the current members. Without a
    /// penalizing cone the penalized level equals the front level; angles
    /// are always measured against `cone`.
    pub fn refresh(&mut self, cone: &PreferenceCone<T>, penalize: bool) -> Result<FrontPartition> {
        if self.members.is_empty() {
            return Err(Error::Empty("population"));
        }
        let table = DominanceTable::new(&self.objectives_ref())?;
        let strength = table.strength();
        let raw = table.raw_dominance(&strength);
        let fronts = table.fronts();
        let levels = fronts.levels();
        for (i, m) in self.members.iter_mut().enumerate() {
            m.strength = strength[i];
            m.raw_dominance = raw[i];
            m.front_level = levels[i];
            m.angular_distance = cone.angular_distance(&m.objectives)?;
            m.penalized_front_level = if penalize {
                penalized_front_level(m.front_level, m.angular_distance, cone)
            } else {
                m.front_level
            };
            m.crowding = T::zero();
        }
        Ok(fronts)
    }

    fn objectives_ref(&self) -> Vec<&[T]> {
        self.members.iter().map(|m| m.objectives.as_ref()).collect()
    }
}

/// Shared generational state: RNG, counters and the current population.
pub(crate) struct Engine<'a, T: Scalar> {
    pub problem: &'a dyn Problem<T>,
    pub cfg: &'a AlgorithmConfig<T>,
    pub rng: ChaCha8Rng,
    pub evaluator: Evaluator<'a, T>,
    pub penalize: bool,
}

impl<'a, T: Scalar> Engine<'a, T> {
    pub fn new(
        problem: &'a dyn Problem<T>,
        cfg: &'a AlgorithmConfig<T>,
        penalize: bool,
    ) -> Result<Self> {
        cfg.validate()?;
        if cfg.cone.axis().len() != problem.num_objectives() {
            return Err(Error::DimensionMismatch {
                expected: problem.num_objectives(),
                found: cfg.cone.axis().len(),
            });
        }
        Ok(Self {
            problem,
            cfg,
            rng: ChaCha8Rng::seed_from_u64(cfg.seed),
            evaluator: Evaluator::new(problem),
            penalize,
        })
    }

    pub fn cone(&self) -> Option<&'a PreferenceCone<T>> {
        self.penalize.then_some(&self.cfg.cone)
    }

    pub fn initial_population(&mut self) -> Result<Population<T>> {
        let bounds = self.problem.bounds();
        let mut members = Vec::with_capacity(self.cfg.population_size);
        for _ in 0..self.cfg.population_size {
            let x: Vec<T> = bounds
                .lower
                .iter()
                .zip(&bounds.upper)
                .map(|(&lo, &hi)| lo + (hi - lo) * T::lit(self.rng.random::<f64>()))
                .collect();
            members.push(self.evaluator.individual(DecisionVector::new(x))?);
        }
        let mut pop = Population::new(members);
        pop.evaluations = self.evaluator.calls();
        pop.refresh(&self.cfg.cone, self.penalize)?;
        Ok(pop)
    }

    pub fn has_budget_for_generation(&self) -> bool {
        self.evaluator.calls() + self.cfg.population_size <= self.cfg.max_evaluations
    }

    /// `P_t ∪ L_t` with bookkeeping refreshed on the union.
    pub fn merged_with_offspring(&mut self, pop: &Population<T>) -> Result<Population<T>> {
        let n = self.cfg.population_size;
        let children = offspring(
            &pop.members,
            n,
            self.problem.bounds(),
            &self.cfg.variation,
            &mut self.rng,
        );
        let mut merged = pop.members.clone();
        merged.reserve(n);
        for child in children {
            merged.push(self.evaluator.individual(child)?);
        }
        let mut merged = Population {
            members: merged,
            generation: pop.generation,
            evaluations: self.evaluator.calls(),
        };
        merged.refresh(&self.cfg.cone, self.penalize)?;
        Ok(merged)
    }

    /// Keeps `chosen` from `merged` as the next generation.
    pub fn advance(&self, merged: Population<T>, chosen: &[usize]) -> Result<Population<T>> {
        let mut slots: Vec<Option<Individual<T>>> = merged.members.into_iter().map(Some).collect();
        let members = chosen
            .iter()
            .map(|&i| slots[i].take().expect("survivor chosen twice"))
            .collect();
        let mut next = Population {
            members,
            generation: merged.generation + 1,
            evaluations: self.evaluator.calls(),
        };
        next.refresh(&self.cfg.cone, self.penalize)?;
        Ok(next)
    }

    pub fn finish(
        &self,
        algorithm: AlgorithmKind,
        population: Population<T>,
        initial_only: bool,
    ) -> RunOutcome<T> {
        let reported = reported_indices(&population);
        RunOutcome {
            algorithm,
            population,
            reported,
            initial_only,
        }
    }
}

/// The final non-dominated set, in population order. Out-of-cone members are
/// kept; membership is reported, not enforced.
pub fn reported_indices<T: Scalar>(population: &Population<T>) -> Vec<usize> {
    (0..population.len())
        .filter(|&i| population.members[i].front_level == 1)
        .collect()
}
