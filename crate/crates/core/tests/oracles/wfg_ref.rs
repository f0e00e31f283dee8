//! WFG4 and WFG9 for two objectives written directly from the toolkit's
//! definitions, independent of the library transforms.

use std::f64::consts::PI;

fn correct_to_01(a: f64) -> f64 {
    let eps = 1.0e-10;
    let (min, max) = (0.0, 1.0);
    if a <= min && a >= min - eps {
        min
    } else if a >= max && a <= max + eps {
        max
    } else {
        a
    }
}

fn b_param(y: f64, u: f64, a: f64, b: f64, c: f64) -> f64 {
    let v = a - (1.0 - 2.0 * u) * ((0.5 - u).floor() + a).abs();
    correct_to_01(y.powf(b + (c - b) * v))
}

fn s_decept(y: f64, a: f64, b: f64, c: f64) -> f64 {
    let tmp1 = (y - a + b).floor() * (1.0 - c + (a - b) / b) / (a - b);
    let tmp2 = (a + b - y).floor() * (1.0 - c + (1.0 - a - b) / b) / (1.0 - a - b);
    correct_to_01(1.0 + ((y - a).abs() - b) * (tmp1 + tmp2 + 1.0 / b))
}

fn s_multi(y: f64, a: f64, b: f64, c: f64) -> f64 {
    let tmp1 = (y - c).abs() / (2.0 * ((c - y).floor() + c));
    let tmp2 = (4.0 * a + 2.0) * PI * (0.5 - tmp1);
    correct_to_01((1.0 + tmp2.cos() + 4.0 * b * tmp1 * tmp1) / (b + 2.0))
}

fn r_sum(y: &[f64], w: &[f64]) -> f64 {
    let num: f64 = y.iter().zip(w).map(|(a, b)| a * b).sum();
    let den: f64 = w.iter().sum();
    correct_to_01(num / den)
}

fn r_nonsep(y: &[f64], a: usize) -> f64 {
    let n = y.len();
    let mut num = 0.0;
    for j in 0..n {
        num += y[j];
        for k in 0..a.saturating_sub(1) {
            num += (y[j] - y[(j + k + 1) % n]).abs();
        }
    }
    let half = (a as f64 / 2.0).ceil();
    let den = n as f64 / a as f64 * half * (1.0 + 2.0 * a as f64 - 2.0 * half);
    correct_to_01(num / den)
}

/// Concave two-objective shape with scaling (2, 4) and degeneracy 1.
fn shape(t: [f64; 2]) -> [f64; 2] {
    let x_m = t[1];
    let x1 = t[1].max(1.0) * (t[0] - 0.5) + 0.5;
    [
        x_m + 2.0 * (x1 * PI / 2.0).sin(),
        x_m + 4.0 * (x1 * PI / 2.0).cos(),
    ]
}

fn normalise(z: &[f64]) -> Vec<f64> {
    z.iter()
        .enumerate()
        .map(|(i, v)| correct_to_01(v / (2.0 * (i + 1) as f64)))
        .collect()
}

pub fn wfg4(z: &[f64], k: usize) -> [f64; 2] {
    let y: Vec<f64> = normalise(z)
        .iter()
        .map(|&v| s_multi(v, 30.0, 10.0, 0.35))
        .collect();
    let n = y.len();
    let t0 = r_sum(&y[..k], &vec![1.0; k]);
    let t1 = r_sum(&y[k..], &vec![1.0; n - k]);
    shape([t0, t1])
}

pub fn wfg9(z: &[f64], k: usize) -> [f64; 2] {
    let y = normalise(z);
    let n = y.len();
    let mut t1 = y.clone();
    for i in 0..n - 1 {
        let u = r_sum(&y[i + 1..], &vec![1.0; n - i - 1]);
        t1[i] = b_param(y[i], u, 0.98 / 49.98, 0.02, 50.0);
    }
    let t2: Vec<f64> = (0..n)
        .map(|i| {
            if i < k {
                s_decept(t1[i], 0.35, 0.001, 0.05)
            } else {
                s_multi(t1[i], 30.0, 95.0, 0.35)
            }
        })
        .collect();
    let p = r_nonsep(&t2[..k], k);
    let d = r_nonsep(&t2[k..], n - k);
    shape([p, d])
}
