//! Dominance-weighted uniformity (DWU) and the greedy survivor selection
//! built on it.
//!
//! The selection seeds a representative set `R` with the two best-separated
//! members of the first front, then repeatedly adds the pool member whose
//! smallest weight to `R` is largest, until `|R| = k`. The pairwise weight is
//! the decision-space distance discounted by the gap in raw dominance, and,
//! when a preference cone is supplied, reduced further for pairs with an
//! endpoint outside the cone.

use crate::cone::{dwu_penalty, PreferenceCone};
use crate::domain::Individual;
use crate::error::{Error, Result};
use crate::scalar::{euclidean, Scalar};

/// Smallest pairwise Euclidean distance in `points`.
pub fn uniformity<T: Scalar, V: AsRef<[T]>>(points: &[V]) -> Result<T> {
    if points.len() < 2 {
        return Err(Error::TooFewPoints {
            needed: 2,
            found: points.len(),
        });
    }
    let mut best = T::infinity();
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            let d = euclidean(a.as_ref(), b.as_ref());
            if d < best {
                best = d;
            }
        }
    }
    Ok(best)
}

/// `‖x − x'‖ / (|d(x) − d(x')| + 1)` with the distance taken in decision
/// space.
pub fn w_d<T: Scalar>(x: &Individual<T>, other: &Individual<T>) -> T {
    let gap = x.raw_dominance.abs_diff(other.raw_dominance);
    euclidean(&x.decision, &other.decision) / T::from_count(gap + 1)
}

/// Cone-penalized weight. When either endpoint lies outside the cone the
/// larger of the two angular distances is fed to the penalty. The result may
/// be negative.
pub fn c_w_d<T: Scalar>(x: &Individual<T>, other: &Individual<T>, cone: &PreferenceCone<T>) -> T {
    let base = w_d(x, other);
    let phi = x.angular_distance.max(other.angular_distance);
    if cone.contains_angle(phi) {
        base
    } else {
        base - dwu_penalty(phi, cone)
    }
}

/// `c_w_d` when a cone is given, plain `w_d` otherwise.
#[inline]
pub fn pair_weight<T: Scalar>(
    x: &Individual<T>,
    other: &Individual<T>,
    cone: Option<&PreferenceCone<T>>,
) -> T {
    match cone {
        Some(c) => c_w_d(x, other, c),
        None => w_d(x, other),
    }
}

/// A candidate pool and the subset chosen from it, in selection order.
#[derive(Debug, Clone)]
pub struct SelectionSet<'a, T> {
    pub pool: &'a [Individual<T>],
    /// Pool indices; the first two are the seed pair.
    pub chosen: Vec<usize>,
    pub target_k: usize,
}

impl<'a, T: Scalar> SelectionSet<'a, T> {
    pub fn new(pool: &'a [Individual<T>], target_k: usize) -> Self {
        Self {
            pool,
            chosen: Vec::with_capacity(target_k),
            target_k,
        }
    }

    pub fn members(&self) -> impl Iterator<Item = &'a Individual<T>> + '_ {
        self.chosen.iter().map(|&i| &self.pool[i])
    }

    /// Runs the greedy selection and stores the result in `chosen`.
    pub fn select(&mut self, cone: Option<&PreferenceCone<T>>) -> Result<&[usize]> {
        self.chosen = dwu_select(self.pool, self.target_k, cone)?;
        Ok(&self.chosen)
    }
}

/// Pool members eligible for the seed pair: the first front, or with a cone
/// the lowest penalized front present.
pub fn seed_candidates<T: Scalar>(
    pool: &[Individual<T>],
    cone: Option<&PreferenceCone<T>>,
) -> Vec<usize> {
    let level = |ind: &Individual<T>| match cone {
        Some(_) => ind.penalized_front_level,
        None => ind.front_level,
    };
    let Some(best) = pool.iter().map(level).min() else {
        return Vec::new();
    };
    (0..pool.len())
        .filter(|&i| level(&pool[i]) == best)
        .collect()
}

/// Greedy DWU selection of `k` pool members.
///
/// Expects strength, raw dominance, front levels and (with a cone) angular
/// distances and penalized front levels to be current for the pool. Returns
/// pool indices in the order they were added. Ties go to the lowest index
/// (lowest index pair for the seed).
pub fn dwu_select<T: Scalar>(
    pool: &[Individual<T>],
    k: usize,
    cone: Option<&PreferenceCone<T>>,
) -> Result<Vec<usize>> {
    if k < 2 {
        return Err(Error::InvalidConfig(format!(
            "selection size must be at least 2, got {k}"
        )));
    }
    if pool.len() < k {
        return Err(Error::TooFewPoints {
            needed: k,
            found: pool.len(),
        });
    }
    let weight = |i: usize, j: usize| pair_weight(&pool[i], &pool[j], cone);

    let seeds = seed_candidates(pool, cone);
    let (first, second) = if seeds.len() >= 2 {
        let mut best = (seeds[0], seeds[1]);
        let mut best_w = T::neg_infinity();
        for (a, &i) in seeds.iter().enumerate() {
            for &j in &seeds[a + 1..] {
                let w = weight(i, j);
                if w > best_w {
                    best_w = w;
                    best = (i, j);
                }
            }
        }
        best
    } else {
        let only = seeds[0];
        let mut partner = usize::MAX;
        let mut best_w = T::neg_infinity();
        for j in (0..pool.len()).filter(|&j| j != only) {
            let w = weight(only, j);
            if w > best_w {
                best_w = w;
                partner = j;
            }
        }
        (only, partner)
    };

    let mut chosen = Vec::with_capacity(k);
    let mut taken = vec![false; pool.len()];
    // smallest weight from each unchosen member to the current R
    let mut min_to_chosen = vec![T::infinity(); pool.len()];
    let mut next = Some(first);
    let mut queued = Some(second);
    while let Some(idx) = next {
        chosen.push(idx);
        taken[idx] = true;
        for (c, slot) in min_to_chosen.iter_mut().enumerate() {
            if !taken[c] {
                let w = weight(c, idx);
                if w < *slot {
                    *slot = w;
                }
            }
        }
        next = queued.take();
        if next.is_none() && chosen.len() < k {
            let mut pick = None;
            let mut pick_w = T::neg_infinity();
            for (c, &w) in min_to_chosen.iter().enumerate() {
                if !taken[c] && (pick.is_none() || w > pick_w) {
                    pick = Some(c);
                    pick_w = w;
                }
            }
            next = pick;
        }
    }
    Ok(chosen)
}
