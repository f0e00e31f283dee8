use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Crowding distance of each point within one front.
///
/// Extreme points of every objective get `+∞`; interior points accumulate the
/// gap between their neighbours divided by the front's range in that
/// objective. An objective with zero range contributes nothing.
pub fn crowding_distance<T: Scalar, V: AsRef<[T]>>(front: &[V]) -> Result<Vec<T>> {
    let n = front.len();
    if n == 0 {
        return Err(Error::Empty("front"));
    }
    if n <= 2 {
        return Ok(vec![T::infinity(); n]);
    }
    let m = front[0].as_ref().len();
    let mut distance = vec![T::zero(); n];
    let mut order: Vec<usize> = (0..n).collect();
    for obj in 0..m {
        let value = |i: usize| front[i].as_ref()[obj];
        order.sort_by(|&a, &b| {
            value(a)
                .partial_cmp(&value(b))
                .unwrap_or(std::cmp::Ordering::Equal)
                .then(a.cmp(&b))
        });
        let (lo, hi) = (value(order[0]), value(order[n - 1]));
        distance[order[0]] = T::infinity();
        distance[order[n - 1]] = T::infinity();
        let range = hi - lo;
        if !(range > T::zero()) {
            continue;
        }
        for w in 1..n - 1 {
            let i = order[w];
            distance[i] = distance[i] + (value(order[w + 1]) - value(order[w - 1])) / range;
        }
    }
    Ok(distance)
}
