//! The b-symbol layer: read vectors, weights, distances, enumerators, and
//! the shift-combination weight oracle.

use alloc::vec;
use alloc::vec::Vec;

use crate::codes::{cyclic_shift, hamming_weight, LinearCode};
use crate::galois::FiniteField;
use crate::Error;

/// Per-call cap on q^b inside the shift-formula oracle.
pub const SHIFT_FORMULA_CAP: u64 = 1 << 20;

fn check_window(b: usize, n: usize) -> Result<(), Error> {
    if b < 1 || b > n {
        return Err(Error::WindowOutOfRange { b, n });
    }
    Ok(())
}

/// The n overlapping length-b windows of v, with cyclic wraparound.
pub fn read_vector(v: &[u64], b: usize) -> Result<Vec<Vec<u64>>, Error> {
    check_window(b, v.len())?;
    let n = v.len();
    Ok((0..n)
        .map(|i| (0..b).map(|j| v[(i + j) % n]).collect())
        .collect())
}

/// wt_b(v): the number of nonzero length-b windows.
pub fn bsymbol_weight(v: &[u64], b: usize) -> Result<usize, Error> {
    check_window(b, v.len())?;
    let n = v.len();
    let count = (0..n)
        .filter(|&i| (0..b).any(|j| v[(i + j) % n] != 0))
        .count();
    Ok(count)
}

/// d_b(u, v): the number of indices whose length-b windows differ. For
/// linear codes this equals wt_b(u - v).
pub fn bsymbol_distance(u: &[u64], v: &[u64], b: usize) -> Result<usize, Error> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    check_window(b, u.len())?;
    let n = u.len();
    let count = (0..n)
        .filter(|&i| (0..b).any(|j| u[(i + j) % n] != v[(i + j) % n]))
        .count();
    Ok(count)
}

/// Independent oracle for `bsymbol_weight`:
/// wt_b(v) = (1 / ((q-1) q^(b-1))) * sum over (a_0..a_{b-1}) in F_q^b of
/// wt_H(a_0 v^0 + ... + a_{b-1} v^{b-1}), where v^j are cyclic shifts.
/// The division must be exact; a remainder signals a bug.
pub fn weight_via_shift_formula(field: &FiniteField, v: &[u64], b: usize) -> Result<usize, Error> {
    check_window(b, v.len())?;
    let q = field.order();
    let combos = (q as u128).pow(b as u32);
    if combos > SHIFT_FORMULA_CAP as u128 {
        return Err(Error::CapExceeded {
            required: combos,
            cap: SHIFT_FORMULA_CAP,
        });
    }
    let shifts: Vec<Vec<u64>> = (0..b).map(|j| cyclic_shift(v, j)).collect();
    let n = v.len();
    let mut total: u128 = 0;
    for combo in 0..combos as u64 {
        let mut t = combo;
        let mut acc = vec![0u64; n];
        for shift in &shifts {
            let a = t % q;
            t /= q;
            if a != 0 {
                for (w, &s) in acc.iter_mut().zip(shift) {
                    *w = field.add(*w, field.mul(a, s));
                }
            }
        }
        total += hamming_weight(&acc) as u128;
    }
    let denom = (q as u128 - 1) * (q as u128).pow(b as u32 - 1);
    if total % denom != 0 {
        return Err(Error::VerificationFailed(
            "shift-formula sum is not divisible by (q-1) q^(b-1)".into(),
        ));
    }
    Ok((total / denom) as usize)
}

/// Exact b-symbol weight distribution A_0..A_n of a code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightEnumerator {
    pub b: usize,
    /// counts[w] = number of codewords of b-symbol weight w; length n+1.
    pub counts: Vec<u64>,
}

impl WeightEnumerator {
    /// Smallest positive weight with a nonzero count.
    pub fn min_distance(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&w| self.counts[w] > 0)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// A_0 = 1 and sum A_i = q^k.
    pub fn check_sanity(&self, code_size: u64) -> Result<(), Error> {
        if self.counts.first() != Some(&1) {
            return Err(Error::VerificationFailed("A_0 != 1".into()));
        }
        if self.total() != code_size {
            return Err(Error::VerificationFailed(
                "enumerator counts do not sum to q^k".into(),
            ));
        }
        Ok(())
    }
}

/// Exact enumerator by full enumeration of the code.
pub fn weight_enumerator(code: &LinearCode, b: usize) -> Result<WeightEnumerator, Error> {
    check_window(b, code.length())?;
    let size = code.size()?;
    code.enumerate_with_cap(crate::ENUMERATION_CAP)?; // cap check
    let counts = weight_counts_range(code, b, 0, size)?;
    let enumerator = WeightEnumerator { b, counts };
    enumerator.check_sanity(size)?;
    Ok(enumerator)
}

/// Partial counts over the message-index range [start, end); partial results
/// merge by element-wise addition regardless of partition order.
pub fn weight_counts_range(
    code: &LinearCode,
    b: usize,
    start: u64,
    end: u64,
) -> Result<Vec<u64>, Error> {
    check_window(b, code.length())?;
    let mut counts = vec![0u64; code.length() + 1];
    for word in code.enumerate_range(start, end) {
        counts[bsymbol_weight(&word, b)?] += 1;
    }
    Ok(counts)
}

/// Minimum b-symbol distance d_b of a code: the smallest positive weight
/// attained by a nonzero codeword.
pub fn min_bsymbol_distance(code: &LinearCode, b: usize) -> Result<usize, Error> {
    check_window(b, code.length())?;
    let mut best = None;
    for (m, word) in code.enumerate()?.enumerate() {
        if m == 0 {
            continue;
        }
        let w = bsymbol_weight(&word, b)?;
        best = Some(best.map_or(w, |cur: usize| cur.min(w)));
    }
    best.ok_or_else(|| Error::Precondition("code has no nonzero codeword".into()))
}
