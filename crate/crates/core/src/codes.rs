//! Linear code core: generator matrices, codeword enumeration, trace
//! representations, simplex generators, Hamming metrics, and cyclic shifts.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::galois::{Extension, FiniteField};
use crate::rng::SplitMix64;
use crate::{Error, ENUMERATION_CAP};

/// A codeword is a vector of element indices over the code's field.
pub type Codeword = Vec<u64>;

/// An [n, k] linear code given by a full-rank k x n generator matrix.
#[derive(Debug, Clone)]
pub struct LinearCode {
    field: Arc<FiniteField>,
    n: usize,
    k: usize,
    /// Row-major k x n generator.
    gen: Vec<u64>,
}

impl LinearCode {
    /// Validates shape, element ranges, and rank = row count.
    pub fn from_generator(field: Arc<FiniteField>, rows: &[Vec<u64>]) -> Result<Self, Error> {
        let k = rows.len();
        if k == 0 {
            return Err(Error::Precondition("generator needs at least one row".into()));
        }
        let n = rows[0].len();
        if n == 0 {
            return Err(Error::Precondition("code length must be >= 1".into()));
        }
        let mut gen = Vec::with_capacity(k * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::LengthMismatch {
                    left: n,
                    right: row.len(),
                });
            }
            for &e in row {
                if !field.contains(e) {
                    return Err(Error::ElementOutOfRange {
                        index: e,
                        order: field.order(),
                    });
                }
            }
            gen.extend_from_slice(row);
        }
        let rank = crate::linalg::rank(&field, k, n, &gen);
        if rank != k {
            return Err(Error::RankDeficient { rows: k, rank });
        }
        Ok(LinearCode { field, n, k, gen })
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    pub fn generator_rows(&self) -> Vec<Vec<u64>> {
        (0..self.k)
            .map(|i| self.gen[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    pub fn generator_entry(&self, row: usize, col: usize) -> u64 {
        self.gen[row * self.n + col]
    }

    /// Column i as a length-k vector.
    pub fn generator_column(&self, col: usize) -> Vec<u64> {
        (0..self.k).map(|r| self.gen[r * self.n + col]).collect()
    }

    /// Number of codewords q^k, or an error when it overflows u64.
    pub fn size(&self) -> Result<u64, Error> {
        let size = (self.field.order() as u128).checked_pow(self.k as u32);
        match size {
            Some(s) if s <= u64::MAX as u128 => Ok(s as u64),
            _ => Err(Error::CapExceeded {
                required: u128::MAX,
                cap: u64::MAX,
            }),
        }
    }

    /// The codeword for an explicit message vector of length k.
    pub fn encode(&self, message: &[u64]) -> Result<Codeword, Error> {
        if message.len() != self.k {
            return Err(Error::LengthMismatch {
                left: self.k,
                right: message.len(),
            });
        }
        let mut word = vec![0u64; self.n];
        for (s, &coef) in message.iter().enumerate() {
            if coef == 0 {
                continue;
            }
            for (i, w) in word.iter_mut().enumerate() {
                *w = self
                    .field
                    .add(*w, self.field.mul(coef, self.gen[s * self.n + i]));
            }
        }
        Ok(word)
    }

    /// Message vector for index m: base-q digits of m, last coordinate
    /// fastest, so message vectors run in lexicographic order as m ascends.
    pub fn message_by_index(&self, m: u64) -> Vec<u64> {
        let q = self.field.order();
        let mut msg = vec![0u64; self.k];
        let mut m = m;
        for s in (0..self.k).rev() {
            msg[s] = m % q;
            m /= q;
        }
        msg
    }

    pub fn codeword_by_index(&self, m: u64) -> Codeword {
        self.encode(&self.message_by_index(m))
            .expect("message length matches by construction")
    }

    /// All q^k codewords, message indices ascending. Errors when q^k exceeds
    /// the default enumeration cap.
    pub fn enumerate(&self) -> Result<CodewordIter<'_>, Error> {
        self.enumerate_with_cap(ENUMERATION_CAP)
    }

    pub fn enumerate_with_cap(&self, cap: u64) -> Result<CodewordIter<'_>, Error> {
        let size = (self.field.order() as u128).pow(self.k as u32);
        if size > cap as u128 {
            return Err(Error::CapExceeded {
                required: size,
                cap,
            });
        }
        Ok(CodewordIter {
            code: self,
            next: 0,
            end: size as u64,
        })
    }

    /// Codewords for the message-index range [start, end), for partitioned
    /// enumeration across workers.
    pub fn enumerate_range(&self, start: u64, end: u64) -> CodewordIter<'_> {
        CodewordIter {
            code: self,
            next: start,
            end,
        }
    }

    /// Minimum Hamming distance, by full enumeration.
    pub fn min_hamming_distance(&self) -> Result<usize, Error> {
        let mut best = None;
        for (m, word) in self.enumerate()?.enumerate() {
            if m == 0 {
                continue;
            }
            let w = hamming_weight(&word);
            best = Some(best.map_or(w, |b: usize| b.min(w)));
        }
        best.ok_or_else(|| Error::Precondition("code has no nonzero codeword".into()))
    }
}

pub struct CodewordIter<'a> {
    code: &'a LinearCode,
    next: u64,
    end: u64,
}

impl Iterator for CodewordIter<'_> {
    type Item = Codeword;

    fn next(&mut self) -> Option<Codeword> {
        if self.next >= self.end {
            return None;
        }
        let word = self.code.codeword_by_index(self.next);
        self.next += 1;
        Some(word)
    }
}

pub fn hamming_weight(v: &[u64]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

pub fn hamming_distance(u: &[u64], v: &[u64]) -> Result<usize, Error> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    Ok(u.iter().zip(v).filter(|(a, b)| a != b).count())
}

/// c^j = (c_j, c_{j+1}, ..., c_{j-1}), subscripts mod n.
pub fn cyclic_shift(v: &[u64], j: usize) -> Codeword {
    let n = v.len();
    (0..n).map(|i| v[(i + j) % n]).collect()
}

/// Generator matrix of the simplex code S_{q,b}: b rows, (q^b-1)/(q-1)
/// columns. Columns are all b-tuples whose first nonzero coordinate is 1,
/// ordered by ascending integer value with the first coordinate as the
/// least significant base-q digit. For (q=2, b=2) this is
/// (1,0), (0,1), (1,1) — the order fixed by the concatenation worked out
/// in the source material.
pub fn simplex_generator(field: &FiniteField, b: u32) -> Vec<Vec<u64>> {
    let q = field.order();
    let width = simplex_length(q, b);
    let mut rows = vec![Vec::with_capacity(width as usize); b as usize];
    for val in 1..q.pow(b) {
        let mut digits = Vec::with_capacity(b as usize);
        let mut t = val;
        for _ in 0..b {
            digits.push(t % q);
            t /= q;
        }
        let first_nonzero = digits.iter().find(|&&d| d != 0).copied().unwrap();
        if first_nonzero != 1 {
            continue;
        }
        for (row, &d) in rows.iter_mut().zip(&digits) {
            row.push(d);
        }
    }
    debug_assert!(rows.iter().all(|r| r.len() == width as usize));
    rows
}

/// (q^b - 1) / (q - 1), the length of S_{q,b}.
pub fn simplex_length(q: u64, b: u32) -> u64 {
    (q.pow(b) - 1) / (q - 1)
}

/// A code presented by defining elements u_i of GF(q^k), per the trace
/// representation: codewords are (Tr(h u_0), ..., Tr(h u_{n-1})) over h.
#[derive(Debug, Clone)]
pub struct TraceCode {
    ext: Arc<Extension>,
    defining: Vec<u64>,
}

impl TraceCode {
    pub fn new(ext: Arc<Extension>, defining: Vec<u64>) -> Result<Self, Error> {
        if defining.is_empty() {
            return Err(Error::Precondition("defining sequence is empty".into()));
        }
        for &u in &defining {
            if !ext.field().contains(u) {
                return Err(Error::ElementOutOfRange {
                    index: u,
                    order: ext.field().order(),
                });
            }
        }
        Ok(TraceCode { ext, defining })
    }

    pub fn extension(&self) -> &Arc<Extension> {
        &self.ext
    }

    pub fn defining(&self) -> &[u64] {
        &self.defining
    }

    pub fn length(&self) -> usize {
        self.defining.len()
    }

    /// Expands to a generator matrix: entry (s, i) is Tr(alpha_s u_i) for the
    /// canonical basis {alpha_s}, so the message (h_1..h_k) of h = sum h_s
    /// alpha_s reproduces the trace codeword. Errors when the induced matrix
    /// has rank < k; `to_linear_code_allow_deficient` instead drops to the
    /// actual rank.
    pub fn to_linear_code(&self) -> Result<LinearCode, Error> {
        let rows = self.expand_rows()?;
        let code = LinearCode::from_generator(self.ext.base().clone(), &rows)?;
        self.verify_expansion(&code)?;
        Ok(code)
    }

    pub fn to_linear_code_allow_deficient(&self) -> Result<LinearCode, Error> {
        let rows = self.expand_rows()?;
        match LinearCode::from_generator(self.ext.base().clone(), &rows) {
            Ok(code) => {
                self.verify_expansion(&code)?;
                Ok(code)
            }
            Err(Error::RankDeficient { .. }) => {
                let independent = independent_rows(self.ext.base(), &rows)?;
                LinearCode::from_generator(self.ext.base().clone(), &independent)
            }
            Err(e) => Err(e),
        }
    }

    fn expand_rows(&self) -> Result<Vec<Vec<u64>>, Error> {
        let field = self.ext.field();
        let mut rows = Vec::with_capacity(self.ext.degree() as usize);
        for &alpha in self.ext.basis() {
            let row = self
                .defining
                .iter()
                .map(|&u| self.ext.trace(field.mul(alpha, u)))
                .collect::<Result<Vec<u64>, Error>>()?;
            rows.push(row);
        }
        Ok(rows)
    }

    /// Spot-check: for random h, the trace codeword equals the matrix
    /// encoding of h's coordinates.
    fn verify_expansion(&self, code: &LinearCode) -> Result<(), Error> {
        let field = self.ext.field();
        let mut rng = SplitMix64::new(0x7ace_c0de);
        let trials = 64.min(field.order());
        for _ in 0..trials {
            let h = rng.below(field.order());
            let direct = self
                .defining
                .iter()
                .map(|&u| self.ext.trace(field.mul(h, u)))
                .collect::<Result<Vec<u64>, Error>>()?;
            let encoded = code.encode(&self.ext.coordinates(h)?)?;
            if direct != encoded {
                return Err(Error::VerificationFailed(format!(
                    "trace expansion mismatch for h = {h}"
                )));
            }
        }
        Ok(())
    }

    /// Inverse of `to_linear_code`: u_i = sum_s G[s][i] beta_s over the dual
    /// basis. The round trip preserves the codeword set.
    pub fn from_linear_code(code: &LinearCode) -> Result<Self, Error> {
        let ext = Extension::new(code.field().clone(), code.dimension() as u32)?;
        Self::from_linear_code_in(code, ext)
    }

    pub fn from_linear_code_in(code: &LinearCode, ext: Arc<Extension>) -> Result<Self, Error> {
        if ext.degree() as usize != code.dimension() || ext.base().id() != code.field().id() {
            return Err(Error::Precondition(
                "extension degree or base field does not match the code".into(),
            ));
        }
        let field = ext.field();
        let emb = ext.embedding();
        let defining = (0..code.length())
            .map(|i| {
                let mut u = 0;
                for (s, &beta) in ext.dual().iter().enumerate() {
                    let coef = emb.embed(code.generator_entry(s, i));
                    u = field.add(u, field.mul(coef, beta));
                }
                u
            })
            .collect();
        TraceCode::new(ext, defining)
    }
}

fn independent_rows(field: &Arc<FiniteField>, rows: &[Vec<u64>]) -> Result<Vec<Vec<u64>>, Error> {
    let mut kept: Vec<Vec<u64>> = Vec::new();
    for row in rows {
        if hamming_weight(row) == 0 {
            continue;
        }
        let mut candidate = kept.clone();
        candidate.push(row.clone());
        let flat: Vec<u64> = candidate.iter().flatten().copied().collect();
        if crate::linalg::rank(field, candidate.len(), row.len(), &flat) == candidate.len() {
            kept = candidate;
        }
    }
    if kept.is_empty() {
        return Err(Error::RankDeficient { rows: rows.len(), rank: 0 });
    }
    Ok(kept)
}
