//! Independent reference implementations used as test oracles, and the
//! randomized checks built on them. Shared with the harness acceptance
//! suite.
#![allow(dead_code)]

pub mod checks;
pub mod wfg_ref;

use cone_dwu::{DecisionVector, Individual, ObjectiveVector};

pub fn dominates(a: &[f64], b: &[f64]) -> bool {
    let mut strictly = false;
    for i in 0..a.len() {
        if a[i] > b[i] {
            return false;
        }
        if a[i] < b[i] {
            strictly = true;
        }
    }
    strictly
}

/// Front levels by repeatedly removing the non-dominated subset of what is
/// left.
pub fn strip_levels(points: &[Vec<f64>]) -> Vec<usize> {
    let mut level = vec![0usize; points.len()];
    let mut remaining: Vec<usize> = (0..points.len()).collect();
    let mut current = 1;
    while !remaining.is_empty() {
        let front: Vec<usize> = remaining
            .iter()
            .copied()
            .filter(|&i| !remaining.iter().any(|&j| dominates(&points[j], &points[i])))
            .collect();
        for &i in &front {
            level[i] = current;
        }
        remaining.retain(|i| !front.contains(i));
        current += 1;
    }
    level
}

pub fn strength(points: &[Vec<f64>]) -> Vec<usize> {
    let mut s = vec![0; points.len()];
    for i in 0..points.len() {
        for j in 0..points.len() {
            if dominates(&points[i], &points[j]) {
                s[i] += 1;
            }
        }
    }
    s
}

pub fn raw_dominance(points: &[Vec<f64>]) -> Vec<usize> {
    let s = strength(points);
    let mut d = vec![0; points.len()];
    for i in 0..points.len() {
        for j in 0..points.len() {
            if dominates(&points[j], &points[i]) {
                d[i] += s[j];
            }
        }
    }
    d
}

pub fn distance(a: &[f64], b: &[f64]) -> f64 {
    let mut acc = 0.0;
    for i in 0..a.len() {
        acc += (a[i] - b[i]) * (a[i] - b[i]);
    }
    acc.sqrt()
}

pub fn w_d(xa: &[f64], xb: &[f64], da: usize, db: usize) -> f64 {
    let gap = da.abs_diff(db);
    distance(xa, xb) / (gap as f64 + 1.0)
}

pub fn angle(y: &[f64], v: &[f64]) -> f64 {
    let dot: f64 = y.iter().zip(v).map(|(a, b)| a * b).sum();
    let ny = y.iter().map(|a| a * a).sum::<f64>().sqrt();
    let nv = v.iter().map(|a| a * a).sum::<f64>().sqrt();
    (dot / (ny * nv)).clamp(-1.0, 1.0).acos()
}

/// Cone parameters as plain numbers.
#[derive(Debug, Clone, Copy)]
pub struct Cone {
    pub theta: f64,
    pub alpha: f64,
    pub beta: f64,
}

#[allow(clippy::too_many_arguments)]
pub fn c_w_d(xa: &[f64], xb: &[f64], da: usize, db: usize, pa: f64, pb: f64, cone: Cone) -> f64 {
    let base = w_d(xa, xb, da, db);
    let outside_a = pa > cone.theta;
    let outside_b = pb > cone.theta;
    if !outside_a && !outside_b {
        return base;
    }
    let phi = if pa > pb { pa } else { pb };
    base - (cone.beta * (phi - cone.theta)).exp()
}

/// Flat view of a selection candidate.
#[derive(Debug, Clone)]
pub struct Candidate {
    pub x: Vec<f64>,
    pub d: usize,
    pub level: usize,
    pub phi: f64,
}

pub fn penalized_level(level: usize, phi: f64, cone: Cone) -> usize {
    if phi <= cone.theta {
        level
    } else {
        level + (cone.alpha * (phi - cone.theta)).exp().floor() as usize
    }
}

/// Candidates from objective and decision vectors, bookkeeping computed by
/// the oracles above.
pub fn candidates(
    objectives: &[Vec<f64>],
    decisions: &[Vec<f64>],
    axis: &[f64],
    cone: Option<Cone>,
) -> Vec<Candidate> {
    let levels = strip_levels(objectives);
    let raw = raw_dominance(objectives);
    (0..objectives.len())
        .map(|i| {
            let phi = angle(&objectives[i], axis);
            Candidate {
                x: decisions[i].clone(),
                d: raw[i],
                level: match cone {
                    Some(c) => penalized_level(levels[i], phi, c),
                    None => levels[i],
                },
                phi,
            }
        })
        .collect()
}

/// The same data as library individuals.
pub fn individuals(
    objectives: &[Vec<f64>],
    decisions: &[Vec<f64>],
    axis: &[f64],
    cone: Cone,
) -> Vec<Individual> {
    let levels = strip_levels(objectives);
    let s = strength(objectives);
    let raw = raw_dominance(objectives);
    (0..objectives.len())
        .map(|i| {
            let mut m = Individual::new(
                DecisionVector::new(decisions[i].clone()),
                ObjectiveVector::new(objectives[i].clone()),
            );
            m.strength = s[i];
            m.raw_dominance = raw[i];
            m.front_level = levels[i];
            m.angular_distance = angle(&objectives[i], axis);
            m.penalized_front_level = penalized_level(levels[i], m.angular_distance, cone);
            m
        })
        .collect()
}

pub fn weight(c: &[Candidate], i: usize, j: usize, cone: Option<Cone>) -> f64 {
    match cone {
        Some(k) => c_w_d(&c[i].x, &c[j].x, c[i].d, c[j].d, c[i].phi, c[j].phi, k),
        None => w_d(&c[i].x, &c[j].x, c[i].d, c[j].d),
    }
}

/// Straight-line greedy max-min trace: recompute every minimum from
/// scratch at each step.
pub fn greedy_trace(c: &[Candidate], k: usize, cone: Option<Cone>) -> Vec<usize> {
    let best_level = c.iter().map(|x| x.level).min().unwrap();
    let seeds: Vec<usize> = (0..c.len()).filter(|&i| c[i].level == best_level).collect();
    let mut chosen = Vec::new();
    if seeds.len() == 1 {
        let a = seeds[0];
        let mut b = None;
        for j in 0..c.len() {
            if j == a {
                continue;
            }
            match b {
                None => b = Some(j),
                Some(bb) => {
                    if weight(c, a, j, cone) > weight(c, a, bb, cone) {
                        b = Some(j);
                    }
                }
            }
        }
        chosen.push(a);
        chosen.push(b.unwrap());
    } else {
        let mut pair = (seeds[0], seeds[1]);
        for x in 0..seeds.len() {
            for y in x + 1..seeds.len() {
                if weight(c, seeds[x], seeds[y], cone) > weight(c, pair.0, pair.1, cone) {
                    pair = (seeds[x], seeds[y]);
                }
            }
        }
        chosen.push(pair.0);
        chosen.push(pair.1);
    }
    while chosen.len() < k {
        let mut best: Option<(usize, f64)> = None;
        for i in 0..c.len() {
            if chosen.contains(&i) {
                continue;
            }
            let m = chosen
                .iter()
                .map(|&r| weight(c, i, r, cone))
                .fold(f64::INFINITY, f64::min);
            if best.is_none() || m > best.unwrap().1 {
                best = Some((i, m));
            }
        }
        chosen.push(best.unwrap().0);
    }
    chosen
}

/// Checks that `chosen` is a valid greedy max-min run: the seed pair is
/// weight-maximal among eligible pairs and each later element attains the
/// max-min value, with lowest-index tie-breaking.
pub fn greedy_certificate(
    c: &[Candidate],
    k: usize,
    cone: Option<Cone>,
    chosen: &[usize],
) -> Result<(), String> {
    if chosen.len() != k {
        return Err(format!("chose {} of {k}", chosen.len()));
    }
    let mut seen = vec![false; c.len()];
    for &i in chosen {
        if i >= c.len() || seen[i] {
            return Err(format!("index {i} repeated or out of range"));
        }
        seen[i] = true;
    }
    let best_level = c.iter().map(|x| x.level).min().unwrap();
    let seeds: Vec<usize> = (0..c.len()).filter(|&i| c[i].level == best_level).collect();
    let (a, b) = (chosen[0], chosen[1]);
    let w_seed = weight(c, a, b, cone);
    if seeds.len() >= 2 {
        if !seeds.contains(&a) || !seeds.contains(&b) {
            return Err(format!("seed pair ({a},{b}) not drawn from the best front"));
        }
        for x in 0..seeds.len() {
            for y in x + 1..seeds.len() {
                if weight(c, seeds[x], seeds[y], cone) > w_seed {
                    return Err(format!(
                        "seed pair ({a},{b}) beaten by ({},{})",
                        seeds[x], seeds[y]
                    ));
                }
            }
        }
    } else {
        if a != seeds[0] {
            return Err(format!("lone seed candidate {} not chosen first", seeds[0]));
        }
        for j in 0..c.len() {
            if j != a && weight(c, a, j, cone) > w_seed {
                return Err(format!("partner {b} of lone seed beaten by {j}"));
            }
        }
    }
    for step in 2..k {
        let r = &chosen[..step];
        let value = |i: usize| {
            r.iter()
                .map(|&q| weight(c, i, q, cone))
                .fold(f64::INFINITY, f64::min)
        };
        let pick = chosen[step];
        let v = value(pick);
        for i in (0..c.len()).filter(|i| !r.contains(i)) {
            let vi = value(i);
            if vi > v || (vi == v && i < pick) {
                return Err(format!("step {step}: picked {pick} ({v}) but {i} has {vi}"));
            }
        }
    }
    Ok(())
}

/// Textbook bounded polynomial mutation of one coordinate.
pub fn polynomial_mutation_formula(x: f64, lo: f64, hi: f64, u: f64, eta: f64) -> f64 {
    let d1 = (x - lo) / (hi - lo);
    let d2 = (hi - x) / (hi - lo);
    let mpow = 1.0 / (eta + 1.0);
    let dq = if u <= 0.5 {
        let xy = 1.0 - d1;
        let val = 2.0 * u + (1.0 - 2.0 * u) * xy.powf(eta + 1.0);
        val.powf(mpow) - 1.0
    } else {
        let xy = 1.0 - d2;
        let val = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * xy.powf(eta + 1.0);
        1.0 - val.powf(mpow)
    };
    (x + dq * (hi - lo)).clamp(lo, hi)
}

/// Mean distance from each reference point to its nearest solution.
pub fn igd(reference: &[Vec<f64>], solutions: &[Vec<f64>]) -> f64 {
    let mut total = 0.0;
    for r in reference {
        let mut best = f64::INFINITY;
        for s in solutions {
            best = best.min(distance(r, s));
        }
        total += best;
    }
    total / reference.len() as f64
}
