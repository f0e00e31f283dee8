//! Seed policy. Each cell gets a stable hash of its identifiers, combined
//! with the run seed, so adding or removing cells never moves the seeds of
//! the others.

use cone_dwu::{AlgorithmKind, ProblemKind};
use sha2::{Digest, Sha256};

/// Directory name of a matrix cell, e.g. `c-dwu_wfg4_d5`.
pub fn cell_name(algorithm: AlgorithmKind, problem: ProblemKind, dim: usize) -> String {
    format!("{}_{}_d{}", algorithm.as_str(), problem.as_str(), dim)
}

pub fn cell_hash(algorithm: AlgorithmKind, problem: ProblemKind, dim: usize) -> u64 {
    let digest = Sha256::digest(cell_name(algorithm, problem, dim).as_bytes());
    let mut head = [0u8; 8];
    head.copy_from_slice(&digest[..8]);
    u64::from_le_bytes(head)
}

/// Solver RNG seed for run seed `run_seed` (= base seed + run index).
pub fn rng_seed(algorithm: AlgorithmKind, problem: ProblemKind, dim: usize, run_seed: u64) -> u64 {
    cell_hash(algorithm, problem, dim) ^ run_seed.wrapping_mul(0x9E37_79B9_7F4A_7C15)
}
