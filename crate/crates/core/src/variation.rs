//! Parent selection and real-coded variation: binary tournament on the
//! penalized front level, simulated binary crossover (SBX) and bounded
//! polynomial mutation.

use rand::Rng;

use crate::domain::{Bounds, DecisionVector, Individual};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VariationConfig<T> {
    pub crossover_probability: T,
    pub crossover_distribution_index: T,
    pub mutation_probability: T,
    pub mutation_distribution_index: T,
}

impl<T: Scalar> VariationConfig<T> {
    /// SBX with probability 1 and index 20, polynomial mutation with
    /// probability `1/n` and index 20.
    pub fn standard(dimension: usize) -> Self {
        Self {
            crossover_probability: T::one(),
            crossover_distribution_index: T::lit(20.0),
            mutation_probability: T::one() / T::from_count(dimension.max(1)),
            mutation_distribution_index: T::lit(20.0),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let unit = |p: T| p >= T::zero() && p <= T::one();
        if !unit(self.crossover_probability) || !unit(self.mutation_probability) {
            return Err(Error::InvalidConfig(
                "variation probabilities must lie in [0, 1]".into(),
            ));
        }
        if !(self.crossover_distribution_index > T::zero())
            || !(self.mutation_distribution_index > T::zero())
        {
            return Err(Error::InvalidConfig(
                "distribution indices must be positive".into(),
            ));
        }
        Ok(())
    }
}

#[inline]
fn unit<T: Scalar, R: Rng + ?Sized>(rng: &mut R) -> T {
    T::lit(rng.random::<f64>())
}

/// Draws two members uniformly with replacement and returns the index of the
/// one with the lower penalized front level. Ties are broken by a fair coin.
pub fn binary_tournament<T: Scalar, R: Rng + ?Sized>(
    members: &[Individual<T>],
    rng: &mut R,
) -> usize {
    let a = rng.random_range(0..members.len());
    let b = rng.random_range(0..members.len());
    let (la, lb) = (
        members[a].penalized_front_level,
        members[b].penalized_front_level,
    );
    match la.cmp(&lb) {
        std::cmp::Ordering::Less => a,
        std::cmp::Ordering::Greater => b,
        std::cmp::Ordering::Equal => {
            if rng.random_bool(0.5) {
                a
            } else {
                b
            }
        }
    }
}

/// SBX spread factor for a uniform draw `u`.
fn sbx_spread<T: Scalar>(u: T, eta: T) -> T {
    let two = T::lit(2.0);
    let exponent = T::one() / (eta + T::one());
    if u <= T::lit(0.5) {
        (two * u).powf(exponent)
    } else {
        (two - two * u).powf(-exponent)
    }
}

/// Simulated binary crossover. When the pair is not selected for crossover
/// the children are exact copies of the parents. Each coordinate takes part
/// with probability one half; the spread factor's sign is random, which
/// swaps the two child values. Children are clipped to `bounds`.
pub fn sbx_crossover<T: Scalar, R: Rng + ?Sized>(
    p1: &DecisionVector<T>,
    p2: &DecisionVector<T>,
    bounds: &Bounds<T>,
    cfg: &VariationConfig<T>,
    rng: &mut R,
) -> (DecisionVector<T>, DecisionVector<T>) {
    let mut c1 = p1.clone();
    let mut c2 = p2.clone();
    if !(unit::<T, R>(rng) < cfg.crossover_probability) {
        return (c1, c2);
    }
    let half = T::lit(0.5);
    let (a, b) = (c1.as_mut_slice(), c2.as_mut_slice());
    for i in 0..a.len() {
        if rng.random_bool(0.5) {
            continue;
        }
        let mut beta = sbx_spread(unit(rng), cfg.crossover_distribution_index);
        if rng.random_bool(0.5) {
            beta = -beta;
        }
        let (x1, x2) = (p1[i], p2[i]);
        let mid = (x1 + x2) * half;
        let spread = beta * (x1 - x2) * half;
        a[i] = mid + spread;
        b[i] = mid - spread;
    }
    bounds.clip(a);
    bounds.clip(b);
    (c1, c2)
}

/// Bounded polynomial mutation of a single coordinate, for a uniform draw
/// `u`. Stays inside `[lower, upper]` for `x` inside it.
pub fn polynomial_perturbation<T: Scalar>(x: T, lower: T, upper: T, u: T, eta: T) -> T {
    let range = upper - lower;
    if !(range > T::zero()) {
        return x;
    }
    let one = T::one();
    let two = T::lit(2.0);
    let power = one / (eta + one);
    let delta = if u <= T::lit(0.5) {
        let gap = (x - lower) / range;
        (two * u + (one - two * u) * (one - gap).powf(eta + one)).powf(power) - one
    } else {
        let gap = (upper - x) / range;
        one - (two * (one - u) + two * (u - T::lit(0.5)) * (one - gap).powf(eta + one)).powf(power)
    };
    (x + delta * range).max(lower).min(upper)
}

/// Mutates each coordinate independently with the configured probability.
pub fn polynomial_mutation<T: Scalar, R: Rng + ?Sized>(
    x: &DecisionVector<T>,
    bounds: &Bounds<T>,
    cfg: &VariationConfig<T>,
    rng: &mut R,
) -> DecisionVector<T> {
    let mut out = x.clone();
    let slice = out.as_mut_slice();
    for (i, v) in slice.iter_mut().enumerate() {
        if unit::<T, R>(rng) < cfg.mutation_probability {
            let u = unit(rng);
            *v = polynomial_perturbation(
                *v,
                bounds.lower[i],
                bounds.upper[i],
                u,
                cfg.mutation_distribution_index,
            );
        }
    }
    out
}

/// Builds `count` offspring decision vectors from tournament-selected pairs.
/// `count` is rounded up to an even number of children internally and the
/// surplus child dropped.
pub fn offspring<T: Scalar, R: Rng + ?Sized>(
    members: &[Individual<T>],
    count: usize,
    bounds: &Bounds<T>,
    cfg: &VariationConfig<T>,
    rng: &mut R,
) -> Vec<DecisionVector<T>> {
    let mut children = Vec::with_capacity(count + 1);
    while children.len() < count {
        let a = binary_tournament(members, rng);
        let b = binary_tournament(members, rng);
        let (c1, c2) = sbx_crossover(&members[a].decision, &members[b].decision, bounds, cfg, rng);
        children.push(polynomial_mutation(&c1, bounds, cfg, rng));
        children.push(polynomial_mutation(&c2, bounds, cfg, rng));
    }
    children.truncate(count);
    children
}
