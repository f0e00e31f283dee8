//! Non-dominated sorting and SPEA-style strength / raw dominance.

use crate::domain::dominates_unchecked;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Ordered partition of a population into non-domination levels.
///
/// `fronts[0]` is the first (non-dominated) front. Indices within a front
/// are ascending.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FrontPartition {
    pub fronts: Vec<Vec<usize>>,
}

impl FrontPartition {
    pub fn len(&self) -> usize {
        self.fronts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fronts.is_empty()
    }

    /// 1-based front level of each index.
    pub fn levels(&self) -> Vec<usize> {
        let n = self.fronts.iter().map(Vec::len).sum();
        let mut levels = vec![0; n];
        for (rank, front) in self.fronts.iter().enumerate() {
            for &i in front {
                levels[i] = rank + 1;
            }
        }
        levels
    }
}

/// Pairwise dominance relation of a point set, computed once.
#[derive(Debug, Clone)]
pub struct DominanceTable {
    /// `dominates[i]` lists every `j` with `F(i) ≺ F(j)`.
    pub dominates: Vec<Vec<usize>>,
    /// `dominated_by[i]` lists every `j` with `F(j) ≺ F(i)`.
    pub dominated_by: Vec<Vec<usize>>,
}

impl DominanceTable {
    pub fn new<T: Scalar, V: AsRef<[T]>>(points: &[V]) -> Result<Self> {
        check_dims(points)?;
        let n = points.len();
        let mut dominates = vec![Vec::new(); n];
        let mut dominated_by = vec![Vec::new(); n];
        for i in 0..n {
            let a = points[i].as_ref();
            for j in (i + 1)..n {
                let b = points[j].as_ref();
                if dominates_unchecked(a, b) {
                    dominates[i].push(j);
                    dominated_by[j].push(i);
                } else if dominates_unchecked(b, a) {
                    dominates[j].push(i);
                    dominated_by[i].push(j);
                }
            }
        }
        Ok(Self {
            dominates,
            dominated_by,
        })
    }

    pub fn len(&self) -> usize {
        self.dominates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dominates.is_empty()
    }

    pub fn strength(&self) -> Vec<usize> {
        self.dominates.iter().map(Vec::len).collect()
    }

    pub fn raw_dominance(&self, strength: &[usize]) -> Vec<usize> {
        self.dominated_by
            .iter()
            .map(|doms| doms.iter().map(|&j| strength[j]).sum())
            .collect()
    }

    /// Fast non-dominated sort from the domination counts and lists.
    pub fn fronts(&self) -> FrontPartition {
        let n = self.len();
        let mut remaining: Vec<usize> = self.dominated_by.iter().map(Vec::len).collect();
        let mut current: Vec<usize> = (0..n).filter(|&i| remaining[i] == 0).collect();
        let mut fronts = Vec::new();
        while !current.is_empty() {
            let mut next = Vec::new();
            for &i in &current {
                for &j in &self.dominates[i] {
                    remaining[j] -= 1;
                    if remaining[j] == 0 {
                        next.push(j);
                    }
                }
            }
            next.sort_unstable();
            fronts.push(current);
            current = next;
        }
        FrontPartition { fronts }
    }
}

fn check_dims<T: Scalar, V: AsRef<[T]>>(points: &[V]) -> Result<()> {
    if let Some(first) = points.first() {
        let m = first.as_ref().len();
        if let Some(bad) = points.iter().find(|p| p.as_ref().len() != m) {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: bad.as_ref().len(),
            });
        }
    }
    Ok(())
}

/// Partitions `points` into non-domination levels.
pub fn nondominated_sort<T: Scalar, V: AsRef<[T]>>(points: &[V]) -> Result<FrontPartition> {
    if points.is_empty() {
        return Err(Error::Empty("population"));
    }
    Ok(DominanceTable::new(points)?.fronts())
}

/// `s(x)`: how many members each point dominates.
pub fn strength<T: Scalar, V: AsRef<[T]>>(points: &[V]) -> Result<Vec<usize>> {
    Ok(DominanceTable::new(points)?.strength())
}

/// `d(x)`: sum of the strengths of the members dominating each point.
pub fn raw_dominance<T: Scalar, V: AsRef<[T]>>(
    points: &[V],
    strength: &[usize],
) -> Result<Vec<usize>> {
    if strength.len() != points.len() {
        return Err(Error::DimensionMismatch {
            expected: points.len(),
            found: strength.len(),
        });
    }
    Ok(DominanceTable::new(points)?.raw_dominance(strength))
}
