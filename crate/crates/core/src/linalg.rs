//! Row reduction over a finite field, shared by rank checks, dual-basis
//! solving, and the exhaustive RREF sweep.

use alloc::vec;
use alloc::vec::Vec;

use crate::galois::FiniteField;

/// Rank of a rows x cols matrix (row-major) by Gaussian elimination.
pub fn rank(field: &FiniteField, rows: usize, cols: usize, matrix: &[u64]) -> usize {
    let mut m = matrix.to_vec();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let pivot = (rank..rows).find(|&row| m[row * cols + col] != 0);
        let Some(pivot) = pivot else { continue };
        for c in 0..cols {
            m.swap(pivot * cols + c, rank * cols + c);
        }
        let inv = field.inv(m[rank * cols + col]).expect("pivot is nonzero");
        for c in 0..cols {
            m[rank * cols + c] = field.mul(m[rank * cols + c], inv);
        }
        for row in 0..rows {
            if row != rank && m[row * cols + col] != 0 {
                let factor = m[row * cols + col];
                for c in 0..cols {
                    let t = field.mul(factor, m[rank * cols + c]);
                    m[row * cols + c] = field.sub(m[row * cols + c], t);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Inverse of a k x k matrix (row-major), or None when singular.
pub fn invert(field: &FiniteField, k: usize, matrix: &[u64]) -> Option<Vec<u64>> {
    let cols = 2 * k;
    let mut m = vec![0u64; k * cols];
    for i in 0..k {
        for j in 0..k {
            m[i * cols + j] = matrix[i * k + j];
        }
        m[i * cols + k + i] = 1;
    }
    for col in 0..k {
        let pivot = (col..k).find(|&row| m[row * cols + col] != 0)?;
        for c in 0..cols {
            m.swap(pivot * cols + c, col * cols + c);
        }
        let inv = field.inv(m[col * cols + col]).expect("pivot is nonzero");
        for c in 0..cols {
            m[col * cols + c] = field.mul(m[col * cols + c], inv);
        }
        for row in 0..k {
            if row != col && m[row * cols + col] != 0 {
                let factor = m[row * cols + col];
                for c in 0..cols {
                    let t = field.mul(factor, m[col * cols + c]);
                    m[row * cols + c] = field.sub(m[row * cols + c], t);
                }
            }
        }
    }
    let mut out = vec![0u64; k * k];
    for i in 0..k {
        for j in 0..k {
            out[i * k + j] = m[i * cols + k + j];
        }
    }
    Some(out)
}
