//! Sector classification of decision vectors for dispersion plots.
//!
//! Each point is assigned to the coordinate axis it makes the smallest angle
//! with. The angle `sigma` and the Euclidean norm `rho` locate it inside that
//! sector.

use crate::error::{Error, Result};
use crate::scalar::{norm, Scalar};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SectorRecord<T> {
    pub index: usize,
    /// 1-based axis index.
    pub sector: usize,
    pub sigma: T,
    pub rho: T,
}

/// Classifies one point. Ties between axes go to the lowest axis.
pub fn sector_classify<T: Scalar>(x: &[T]) -> Result<SectorRecord<T>> {
    let rho = norm(x);
    if x.is_empty() || rho == T::zero() {
        return Err(Error::DegeneratePoint);
    }
    // the smallest angle belongs to the largest coordinate
    let mut sector = 0;
    for (i, &v) in x.iter().enumerate() {
        if v > x[sector] {
            sector = i;
        }
    }
    let cos = (x[sector] / rho).max(-T::one()).min(T::one());
    Ok(SectorRecord {
        index: 0,
        sector: sector + 1,
        sigma: cos.acos(),
        rho,
    })
}

/// One record per point, in input order.
pub fn dispersion_table<T: Scalar, V: AsRef<[T]>>(points: &[V]) -> Result<Vec<SectorRecord<T>>> {
    if points.is_empty() {
        return Err(Error::Empty("solution set"));
    }
    points
        .iter()
        .enumerate()
        .map(|(index, p)| sector_classify(p.as_ref()).map(|r| SectorRecord { index, ..r }))
        .collect()
}
