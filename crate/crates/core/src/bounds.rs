//! Griesmer machinery in the b-symbol metric: bound evaluation, optimality
//! and distance-optimality certificates, the Griesmer gap, the conjectured
//! cyclic-code bound as a checkable predicate, and a capped exhaustive
//! search oracle over binary codes.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::bsymbol::min_bsymbol_distance;
use crate::codes::LinearCode;
use crate::galois::FiniteField;
use crate::Error;

/// Parameters (n, k, d_b)^b_q of a linear code in the b-symbol metric.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeParams {
    pub n: u64,
    pub k: u64,
    pub d_b: u64,
    pub b: u64,
    pub q: u64,
}

fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut t = q;
            while t % p == 0 {
                t /= p;
            }
            return t == 1;
        }
        p += 1;
    }
    true // q itself is prime
}

impl CodeParams {
    pub fn new(n: u64, k: u64, d_b: u64, b: u64, q: u64) -> Result<Self, Error> {
        if k < 1 {
            return Err(Error::Precondition("dimension k must be >= 1".into()));
        }
        if b < 1 || b > n {
            return Err(Error::WindowOutOfRange {
                b: b as usize,
                n: n as usize,
            });
        }
        if d_b < 1 || d_b > n {
            return Err(Error::Precondition("need 1 <= d_b <= n".into()));
        }
        if !is_prime_power(q) {
            return Err(Error::Precondition("q must be a prime power".into()));
        }
        Ok(CodeParams { n, k, d_b, b, q })
    }
}

/// Verdict of the conjectured Griesmer-style bound for cyclic codes whose
/// dimension is a multiple of b. Reported only; a violation on a verified
/// cyclic code would be a potential counterexample, never an assertion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConjectureStatus {
    NotApplicable,
    Holds,
    Violated,
}

/// Full evaluation of the b-symbol Griesmer bound at one parameter set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub params: CodeParams,
    /// (q^b - 1) n / (q - 1); the division is always exact.
    pub lhs: u64,
    /// sum over i < k of ceil(q^(b-1) d_b / q^i).
    pub rhs: u64,
    pub holds: bool,
    /// Bound met with equality.
    pub optimal: bool,
    /// Bound fails at d_b + 1: no code with a larger minimum distance exists.
    pub distance_optimal: bool,
    /// Largest bound-permitted d minus d_b; None when the bound fails.
    pub gap: Option<u64>,
    pub conjecture: ConjectureStatus,
}

fn checked_u64(v: u128) -> Result<u64, Error> {
    u64::try_from(v).map_err(|_| Error::Precondition("bound arithmetic overflows u64".into()))
}

/// Hamming Griesmer sum: sum over i < k of ceil(d / q^i).
pub fn griesmer_hamming_rhs(k: u64, d: u64, q: u64) -> Result<u64, Error> {
    if k < 1 || d < 1 || q < 2 {
        return Err(Error::Precondition("need k >= 1, d >= 1, q >= 2".into()));
    }
    let mut sum: u128 = 0;
    let mut denom: u128 = 1;
    for _ in 0..k {
        sum += (d as u128).div_ceil(denom);
        denom = denom.saturating_mul(q as u128);
    }
    checked_u64(sum)
}

fn bsymbol_lhs(p: &CodeParams) -> Result<u64, Error> {
    let qb = (p.q as u128)
        .checked_pow(p.b as u32)
        .ok_or_else(|| Error::Precondition("q^b overflows".into()))?;
    checked_u64((qb - 1) * p.n as u128 / (p.q as u128 - 1))
}

fn bsymbol_rhs(p: &CodeParams, d: u64) -> Result<u64, Error> {
    let scaled = (p.q as u128)
        .checked_pow(p.b as u32 - 1)
        .and_then(|x| x.checked_mul(d as u128))
        .ok_or_else(|| Error::Precondition("q^(b-1) d overflows".into()))?;
    let mut sum: u128 = 0;
    let mut denom: u128 = 1;
    for _ in 0..p.k {
        sum += scaled.div_ceil(denom);
        denom = denom.saturating_mul(p.q as u128);
    }
    checked_u64(sum)
}

/// The b-symbol Griesmer bound:
/// (q^b - 1) n / (q - 1) >= sum over i < k of ceil(q^(b-1) d_b / q^i).
pub fn bsymbol_griesmer_check(params: &CodeParams) -> Result<BoundReport, Error> {
    let lhs = bsymbol_lhs(params)?;
    let rhs = bsymbol_rhs(params, params.d_b)?;
    let holds = lhs >= rhs;
    let distance_optimal = holds && lhs < bsymbol_rhs(params, params.d_b + 1)?;
    let gap = if holds {
        Some(max_db_by_griesmer(params.n, params.k, params.b, params.q)? - params.d_b)
    } else {
        None
    };
    Ok(BoundReport {
        params: *params,
        lhs,
        rhs,
        holds,
        optimal: holds && lhs == rhs,
        distance_optimal,
        gap,
        conjecture: conjecture_shi_check(params.n, params.k, params.d_b, params.b, params.q),
    })
}

/// Largest d with the bound satisfied at (n, k, b, q); 0 if even d = 1
/// violates it. The rhs is nondecreasing in d, so a linear ascent suffices
/// at desk scale.
pub fn max_db_by_griesmer(n: u64, k: u64, b: u64, q: u64) -> Result<u64, Error> {
    let probe = CodeParams {
        n,
        k,
        d_b: 1,
        b,
        q,
    };
    let lhs = bsymbol_lhs(&probe)?;
    let mut best = 0;
    let mut d = 1;
    loop {
        if bsymbol_rhs(&probe, d)? > lhs {
            break;
        }
        best = d;
        d += 1;
    }
    Ok(best)
}

/// Griesmer gap: the largest bound-permitted minimum distance minus d_b.
/// Errors when the parameters already violate the bound.
pub fn griesmer_gap(params: &CodeParams) -> Result<u64, Error> {
    let report = bsymbol_griesmer_check(params)?;
    report.gap.ok_or_else(|| {
        Error::Precondition("parameters violate the bound; gap undefined".into())
    })
}

/// Conjectured cyclic-code bound: for k = t b, n >= sum over i < t of
/// ceil(d_b / q^(b i)). Not applicable unless b divides k.
pub fn conjecture_shi_check(n: u64, k: u64, d_b: u64, b: u64, q: u64) -> ConjectureStatus {
    if b == 0 || k % b != 0 {
        return ConjectureStatus::NotApplicable;
    }
    let t = k / b;
    let mut sum: u128 = 0;
    let mut denom: u128 = 1;
    let step = (q as u128).saturating_pow(b as u32);
    for _ in 0..t {
        sum += (d_b as u128).div_ceil(denom);
        denom = denom.saturating_mul(step);
    }
    if n as u128 >= sum {
        ConjectureStatus::Holds
    } else {
        ConjectureStatus::Violated
    }
}

/// Hard caps for the exhaustive subspace sweep; subspace counts explode
/// beyond these.
pub const EXHAUSTIVE_MAX_N: u64 = 8;
pub const EXHAUSTIVE_MAX_K: u64 = 3;

/// Best achievable minimum b-symbol distance over all k-dimensional binary
/// codes of length n, by enumerating reduced-row-echelon generator
/// matrices. A desk-scale oracle for distance-optimality; q = 2 only.
pub fn exhaustive_best_db(n: u64, k: u64, q: u64, b: u64) -> Result<u64, Error> {
    if q != 2 {
        return Err(Error::Precondition("exhaustive sweep supports q = 2 only".into()));
    }
    if n > EXHAUSTIVE_MAX_N || k > EXHAUSTIVE_MAX_K || k < 1 || k > n {
        return Err(Error::CapExceeded {
            required: n as u128,
            cap: EXHAUSTIVE_MAX_N,
        });
    }
    if b < 1 || b > n {
        return Err(Error::WindowOutOfRange {
            b: b as usize,
            n: n as usize,
        });
    }
    let field = FiniteField::new(2, 1)?;
    let n = n as usize;
    let k = k as usize;
    let mut best = 0u64;

    let mut pivots = Vec::new();
    enumerate_pivot_sets(n, k, 0, &mut pivots, &mut |pivots| {
        // Free entries: row i may be nonzero at non-pivot columns right of
        // its pivot. Enumerate all assignments.
        let mut free = Vec::new();
        for (i, &p) in pivots.iter().enumerate() {
            for col in p + 1..n {
                if !pivots.contains(&col) {
                    free.push((i, col));
                }
            }
        }
        for mask in 0..(1u64 << free.len()) {
            let mut rows = vec![vec![0u64; n]; k];
            for (i, &p) in pivots.iter().enumerate() {
                rows[i][p] = 1;
            }
            for (bit, &(i, col)) in free.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    rows[i][col] = 1;
                }
            }
            let code = LinearCode::from_generator(field.clone(), &rows)
                .expect("RREF matrix is full rank");
            let d = min_bsymbol_distance(&code, b as usize).expect("in-cap enumeration");
            best = best.max(d as u64);
        }
        Ok(())
    })?;
    Ok(best)
}

fn enumerate_pivot_sets(
    n: usize,
    remaining: usize,
    start: usize,
    acc: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> Result<(), Error>,
) -> Result<(), Error> {
    if remaining == 0 {
        return visit(acc);
    }
    for col in start..=n - remaining {
        acc.push(col);
        enumerate_pivot_sets(n, remaining - 1, col + 1, acc, visit)?;
        acc.pop();
    }
    Ok(())
}

impl ConjectureStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            ConjectureStatus::NotApplicable => "not-applicable",
            ConjectureStatus::Holds => "holds",
            ConjectureStatus::Violated => "violated",
        }
    }
}

impl core::str::FromStr for ConjectureStatus {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "not-applicable" => Ok(ConjectureStatus::NotApplicable),
            "holds" => Ok(ConjectureStatus::Holds),
            "violated" => Ok(ConjectureStatus::Violated),
            other => Err(alloc::format!("unknown conjecture status {other}")),
        }
    }
}
