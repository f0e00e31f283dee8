//! Randomized and constructed checks. Each returns a one-line summary on
//! success and the first discrepancy on failure.

use std::f64::consts::{FRAC_PI_4, LN_2};
use std::time::Instant;

use cone_dwu::cone::{angular_distance, dwu_penalty, front_penalty, penalized_front_level};
use cone_dwu::dominance::{nondominated_sort, raw_dominance, strength};
use cone_dwu::dwu::{c_w_d, dwu_select, uniformity, w_d};
use cone_dwu::metrics::igd;
use cone_dwu::problems::ProblemKind;
use cone_dwu::PreferenceCone;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{candidates, greedy_certificate, greedy_trace, individuals, wfg_ref, Cone};

pub type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Objective vectors mixing continuous values with a coarse integer grid
/// so that duplicates and weak ties occur.
fn objectives(rng: &mut ChaCha8Rng, n: usize, m: usize) -> Vec<Vec<f64>> {
    let coarse = rng.random_bool(0.5);
    (0..n)
        .map(|_| {
            (0..m)
                .map(|_| {
                    if coarse {
                        rng.random_range(0..6) as f64 + 0.5
                    } else {
                        rng.random_range(0.05..1.0)
                    }
                })
                .collect()
        })
        .collect()
}

fn decisions(rng: &mut ChaCha8Rng, n: usize, dim: usize, grid: bool) -> Vec<Vec<f64>> {
    (0..n)
        .map(|_| {
            (0..dim)
                .map(|_| {
                    if grid {
                        rng.random_range(0..3) as f64
                    } else {
                        rng.random::<f64>()
                    }
                })
                .collect()
        })
        .collect()
}

fn close(a: f64, b: f64, scale: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * scale.max(a.abs()).max(b.abs()).max(f64::MIN_POSITIVE)
}

pub fn sort_matches_strip_oracle() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut total = 0;
    for case in 0..100 {
        let n = rng.random_range(1..=200);
        let pts = objectives(&mut rng, n, 2);
        let got = nondominated_sort(&pts).map_err(|e| e.to_string())?.levels();
        let want = super::strip_levels(&pts);
        ensure(got == want, || {
            format!("case {case} (n={n}): levels differ")
        })?;
        total += n;
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 5.0, || format!("took {secs:.2}s"))?;
    Ok(format!("100 populations, {total} points, {secs:.2}s"))
}

pub fn weighting_matches_brute_force() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    let axis = [1.0, 1.0];
    for case in 0..100 {
        let objs = objectives(&mut rng, 30, 2);
        let decs = decisions(&mut rng, 30, 4, false);
        let s = strength(&objs).map_err(|e| e.to_string())?;
        ensure(s == super::strength(&objs), || {
            format!("case {case}: strength differs")
        })?;
        let d = raw_dominance(&objs, &s).map_err(|e| e.to_string())?;
        ensure(d == super::raw_dominance(&objs), || {
            format!("case {case}: raw dominance differs")
        })?;

        let cone = Cone {
            theta: rng.random_range(0.05..0.8),
            alpha: rng.random_range(0.0..2.0),
            beta: rng.random_range(0.0..3.0),
        };
        let lib_cone = PreferenceCone::new(axis.to_vec(), cone.theta, cone.alpha, cone.beta)
            .map_err(|e| e.to_string())?;
        let mut inds = individuals(&objs, &decs, &axis, cone);
        for m in inds.iter_mut() {
            m.angular_distance =
                angular_distance(&m.objectives, &lib_cone).map_err(|e| e.to_string())?;
        }
        for i in 0..30 {
            for j in 0..30 {
                let got = w_d(&inds[i], &inds[j]);
                let want = super::w_d(&decs[i], &decs[j], d[i], d[j]);
                ensure(close(got, want, 0.0, 1e-12), || {
                    format!("case {case}: w_d({i},{j}) {got} vs {want}")
                })?;
                let pi = super::angle(&objs[i], &axis);
                let pj = super::angle(&objs[j], &axis);
                let got = c_w_d(&inds[i], &inds[j], &lib_cone);
                let want = super::c_w_d(&decs[i], &decs[j], d[i], d[j], pi, pj, cone);
                let scale = want
                    .abs()
                    .max((cone.beta * (pi.max(pj) - cone.theta)).exp());
                ensure(close(got, want, scale, 1e-12), || {
                    format!("case {case}: c_w_d({i},{j}) {got} vs {want}")
                })?;
            }
        }
    }
    Ok("100 sets of 30 points, strength/raw exact, weights within 1e-12".into())
}

pub fn greedy_selection_certified() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    let axis = [1.0, 1.0];
    let mut with_cone = 0;
    for case in 0..50 {
        let k = rng.random_range(2..=10);
        let n = rng.random_range(k.max(2)..=40);
        let objs = objectives(&mut rng, n, 2);
        let decs = decisions(&mut rng, n, 3, case % 5 == 0);
        let cone = Cone {
            theta: rng.random_range(0.1..0.6),
            alpha: rng.random_range(0.0..2.0),
            beta: rng.random_range(0.0..3.0),
        };
        let lib_cone = PreferenceCone::new(axis.to_vec(), cone.theta, cone.alpha, cone.beta)
            .map_err(|e| e.to_string())?;
        let penalize = case % 2 == 0;
        let pool = individuals(&objs, &decs, &axis, cone);
        let chosen =
            dwu_select(&pool, k, penalize.then_some(&lib_cone)).map_err(|e| e.to_string())?;
        let view = candidates(&objs, &decs, &axis, penalize.then_some(cone));
        greedy_certificate(&view, k, penalize.then_some(cone), &chosen)
            .map_err(|e| format!("case {case}: {e}"))?;
        with_cone += penalize as usize;
    }
    Ok(format!(
        "50 pools ({with_cone} with a cone), every step certified"
    ))
}

pub fn greedy_matches_straight_line_trace() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    let axis = [1.0, 1.0];
    let cone = Cone {
        theta: 0.3,
        alpha: 0.3,
        beta: 1.0,
    };
    let lib_cone = PreferenceCone::new(axis.to_vec(), 0.3, 0.3, 1.0).map_err(|e| e.to_string())?;
    for case in 0..40 {
        let objs = objectives(&mut rng, 10, 2);
        let decs = decisions(&mut rng, 10, 3, false);
        let pool = individuals(&objs, &decs, &axis, cone);
        for penalize in [false, true] {
            let c = penalize.then_some(cone);
            let got =
                dwu_select(&pool, 4, penalize.then_some(&lib_cone)).map_err(|e| e.to_string())?;
            let want = greedy_trace(&candidates(&objs, &decs, &axis, c), 4, c);
            ensure(got == want, || {
                format!("case {case} penalize={penalize}: {got:?} vs {want:?}")
            })?;
        }
    }
    Ok("40 ten-point pools, k=4, with and without a cone".into())
}

pub fn penalty_values() -> Outcome {
    let c = |theta, alpha, beta| PreferenceCone::new(vec![1.0, 1.0], theta, alpha, beta).unwrap();
    let e = std::f64::consts::E;
    let base = c(0.3, 0.3, 1.0);
    ensure(front_penalty(0.4, &base) == 1, || {
        "front_penalty(0.4) != 1".into()
    })?;
    ensure(front_penalty(0.3 + LN_2 / 0.3 + 1e-9, &base) == 2, || {
        "front_penalty at ln2/alpha != 2".into()
    })?;
    ensure(
        front_penalty(0.3 + 3.5f64.ln(), &c(0.3, 1.0, 1.0)) == 3,
        || "front_penalty at ln 3.5 != 3".into(),
    )?;
    ensure(penalized_front_level(1, 0.3, &base) == 1, || {
        "inside level moved".into()
    })?;
    ensure(penalized_front_level(1, 0.4, &base) == 2, || {
        "front 1 at theta+0.1 not 2".into()
    })?;
    ensure(penalized_front_level(2, 0.4, &base) == 3, || {
        "front 2 at theta+0.1 not 3".into()
    })?;
    for (phi, beta, want) in [(0.3, 1.0, 1.0), (1.3, 1.0, e), (0.8, 2.0, e)] {
        let got = dwu_penalty(phi, &c(0.3, 0.3, beta));
        ensure((got - want).abs() <= 1e-12, || {
            format!("dwu_penalty({phi}, beta={beta}) = {got}")
        })?;
    }
    Ok("front_penalty, penalized_front_level and dwu_penalty examples exact".into())
}

/// Six points: five mutually non-dominated on the unit circle at angular
/// distances 0.75, 0.45, 0, 0.45, 0.75 from the axis, and one point behind
/// the second at distance 0.45. With alpha = 2 the 0.45 points gain one
/// level and the 0.75 points two.
pub fn reclassification_scenario() -> Outcome {
    let cone = PreferenceCone::new(vec![1.0, 1.0], 0.3, 2.0, 1.0).unwrap();
    let at = |offset: f64, r: f64| {
        vec![
            r * (FRAC_PI_4 + offset).cos(),
            r * (FRAC_PI_4 + offset).sin(),
        ]
    };
    let points = vec![
        at(0.75, 1.0),
        at(0.45, 1.0),
        at(0.0, 1.0),
        at(-0.45, 1.0),
        at(-0.75, 1.0),
        at(0.45, 1.2),
    ];
    let levels = nondominated_sort(&points)
        .map_err(|e| e.to_string())?
        .levels();
    ensure(levels == vec![1, 1, 1, 1, 1, 2], || {
        format!("plain levels {levels:?}")
    })?;
    let penalized: Vec<usize> = points
        .iter()
        .zip(&levels)
        .map(|(p, &l)| penalized_front_level(l, angular_distance(p, &cone).unwrap(), &cone))
        .collect();
    ensure(penalized == vec![3, 2, 1, 2, 3, 3], || {
        format!("penalized levels {penalized:?}")
    })?;
    Ok("levels [1,1,1,1,1,2] become [3,2,1,2,3,3]".into())
}

pub fn metric_identities() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    for case in 0..50 {
        let r = rng.random_range(1..30);
        let s = rng.random_range(1..30);
        let reference = decisions(&mut rng, r, 2, false);
        let mut sols = decisions(&mut rng, s, 2, false);
        let zero = igd(&reference, &reference).map_err(|e| e.to_string())?;
        ensure(zero == 0.0, || {
            format!("case {case}: igd(ref, ref) = {zero}")
        })?;
        let before = igd(&reference, &sols).map_err(|e| e.to_string())?;
        ensure(
            close(before, super::igd(&reference, &sols), 0.0, 1e-12),
            || format!("case {case}: igd disagrees with oracle"),
        )?;
        let extra = rng.random_range(1..10);
        sols.extend(decisions(&mut rng, extra, 2, false));
        let after = igd(&reference, &sols).map_err(|e| e.to_string())?;
        ensure(after <= before, || {
            format!("case {case}: igd grew from {before} to {after}")
        })?;
        let mut dup = decisions(&mut rng, 5, 3, false);
        dup.push(dup[2].clone());
        let u = uniformity(&dup).map_err(|e| e.to_string())?;
        ensure(u == 0.0, || {
            format!("case {case}: duplicated set uniformity {u}")
        })?;
    }
    Ok("igd(ref,ref)=0, monotone growth on 50 instances, duplicate uniformity 0".into())
}

pub fn problems_match_references() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    let mut worst: f64 = 0.0;
    for dim in [5, 7, 9] {
        let dtlz = ProblemKind::Dtlz2
            .build::<f64>(dim)
            .map_err(|e| e.to_string())?;
        for _ in 0..100 {
            let mut x = vec![0.5; dim];
            x[0] = rng.random();
            let f = dtlz.evaluate(&x).map_err(|e| e.to_string())?;
            let r = f[0] * f[0] + f[1] * f[1];
            ensure((r - 1.0).abs() <= 1e-9, || {
                format!("dtlz2 D={dim}: radius^2 {r}")
            })?;
        }
        for (kind, reference) in [
            (
                ProblemKind::Wfg4,
                wfg_ref::wfg4 as fn(&[f64], usize) -> [f64; 2],
            ),
            (ProblemKind::Wfg9, wfg_ref::wfg9),
        ] {
            let p = kind.build::<f64>(dim).map_err(|e| e.to_string())?;
            for _ in 0..100 {
                let z: Vec<f64> = (1..=dim)
                    .map(|i| rng.random_range(0.0..=2.0 * i as f64))
                    .collect();
                let got = p.evaluate(&z).map_err(|e| e.to_string())?;
                let want = reference(&z, 1);
                for m in 0..2 {
                    let err = (got[m] - want[m]).abs() / want[m].abs().max(1.0);
                    worst = worst.max(err);
                    ensure(err <= 1e-12, || {
                        format!("{kind} D={dim}: f{} {} vs {}", m + 1, got[m], want[m])
                    })?;
                }
            }
        }
    }
    for kind in ProblemKind::ALL {
        let p = kind.build::<f64>(5).map_err(|e| e.to_string())?;
        let front = p.sample_front(500).map_err(|e| e.to_string())?;
        for a in &front {
            for b in &front {
                ensure(!super::dominates(a, b), || {
                    format!("{kind} front sample dominates another")
                })?;
            }
        }
    }
    Ok(format!("dtlz2 radius within 1e-9, wfg4/wfg9 max rel err {worst:.1e}, fronts mutually non-dominated"))
}
