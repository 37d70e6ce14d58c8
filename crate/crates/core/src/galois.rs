//! Exact finite-field arithmetic GF(p^r), subfield embeddings, trace maps,
//! and dual bases.
//!
//! Elements are stored as integer indices in [0, q-1]; the base-p digits of
//! an index are the polynomial coefficients of the element (constant term in
//! the lowest digit). Index 0 is the additive identity and index 1 the
//! multiplicative identity. Multiplication goes through log/antilog tables
//! built from a primitive modulus; addition is digit-wise mod p (XOR when
//! p = 2).

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::sync::atomic::{AtomicU64, Ordering};

use crate::{Error, FIELD_ORDER_CAP};

static NEXT_FIELD_ID: AtomicU64 = AtomicU64::new(1);

/// A finite field GF(p^r) with precomputed discrete-log tables.
///
/// Immutable after construction and safe to share between threads.
#[derive(Debug)]
pub struct FiniteField {
    p: u64,
    r: u32,
    q: u64,
    /// Monic modulus, coefficients ascending by degree, length r+1.
    modulus: Vec<u64>,
    /// Index of the primitive element (the residue class of x).
    gamma: u64,
    /// antilog[i] = index of gamma^i, length q-1.
    antilog: Vec<u64>,
    /// log[antilog[i]] = i, length q; log[0] is unused.
    log: Vec<u64>,
    id: u64,
}

/// An element index tagged with the identity of its field, for the checked
/// arithmetic entry points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldElement {
    pub index: u64,
    pub field_id: u64,
}

/// Checked binary/unary field operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
    Inv,
    Neg,
    Pow(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FiniteField {
    /// Builds GF(p^r) with the lexicographically smallest primitive monic
    /// modulus of degree r over GF(p). Deterministic across runs.
    pub fn new(p: u64, r: u32) -> Result<Arc<Self>, Error> {
        Self::with_cap(p, r, FIELD_ORDER_CAP)
    }

    pub fn with_cap(p: u64, r: u32, cap: u64) -> Result<Arc<Self>, Error> {
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if r < 1 {
            return Err(Error::Precondition("degree r must be >= 1".into()));
        }
        let order = (p as u128).checked_pow(r).unwrap_or(u128::MAX);
        if order > cap as u128 {
            return Err(Error::OrderExceedsCap { order, cap });
        }
        let q = order as u64;

        // Scan monic moduli x^r + c_{r-1} x^{r-1} + ... + c_0 in ascending
        // order of the integer whose base-p digits are (c_0, ..., c_{r-1}).
        // Primitivity is certified exhaustively: the powers of x must run
        // through q-1 distinct nonzero residues and return to 1.
        for t in 0..q {
            let mut modulus = digits(t, p, r as usize);
            modulus.push(1);
            if let Some((antilog, log, gamma)) = build_tables(p, r, q, &modulus) {
                let id = NEXT_FIELD_ID.fetch_add(1, Ordering::Relaxed);
                return Ok(Arc::new(FiniteField {
                    p,
                    r,
                    q,
                    modulus,
                    gamma,
                    antilog,
                    log,
                    id,
                }));
            }
        }
        // A primitive polynomial exists for every prime power.
        Err(Error::VerificationFailed(format!(
            "no primitive polynomial found for GF({p}^{r})"
        )))
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.r
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    /// Modulus coefficients, ascending degree, length r+1, monic.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// The fixed primitive element: the residue class of the indeterminate.
    pub fn generator(&self) -> u64 {
        self.gamma
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn contains(&self, a: u64) -> bool {
        a < self.q
    }

    fn check(&self, a: u64) -> Result<(), Error> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                index: a,
                order: self.q,
            })
        }
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.p == 2 {
            return a ^ b;
        }
        let mut result = 0;
        let mut scale = 1;
        let (mut a, mut b) = (a, b);
        for _ in 0..self.r {
            let d = (a % self.p + b % self.p) % self.p;
            result += d * scale;
            scale *= self.p;
            a /= self.p;
            b /= self.p;
        }
        result
    }

    pub fn neg(&self, a: u64) -> u64 {
        if self.p == 2 {
            return a;
        }
        let mut result = 0;
        let mut scale = 1;
        let mut a = a;
        for _ in 0..self.r {
            let d = (self.p - a % self.p) % self.p;
            result += d * scale;
            scale *= self.p;
            a /= self.p;
        }
        result
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        let e = (self.log[a as usize] + self.log[b as usize]) % (self.q - 1);
        self.antilog[e as usize]
    }

    pub fn inv(&self, a: u64) -> Result<u64, Error> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let e = (self.q - 1 - self.log[a as usize]) % (self.q - 1);
        Ok(self.antilog[e as usize])
    }

    pub fn div(&self, a: u64, b: u64) -> Result<u64, Error> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// a^e with a^0 = 1 (including 0^0 = 1).
    pub fn pow(&self, a: u64, e: u64) -> u64 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let e = ((self.log[a as usize] as u128 * e as u128) % (self.q - 1) as u128) as u64;
        self.antilog[e as usize]
    }

    /// gamma^e, exponent taken mod q-1.
    pub fn gamma_pow(&self, e: u64) -> u64 {
        self.antilog[(e % (self.q - 1)) as usize]
    }

    /// Discrete log base gamma of a nonzero element.
    pub fn dlog(&self, a: u64) -> Result<u64, Error> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.log[a as usize])
    }

    /// The element c * 1, i.e. the image of the integer c in the prime field.
    pub fn from_int(&self, c: u64) -> u64 {
        c % self.p
    }

    pub fn element(&self, index: u64) -> Result<FieldElement, Error> {
        self.check(index)?;
        Ok(FieldElement {
            index,
            field_id: self.id,
        })
    }

    /// Checked single entry point for element arithmetic. Rejects elements
    /// of other fields and division by zero.
    pub fn apply(
        &self,
        op: FieldOp,
        a: FieldElement,
        b: Option<FieldElement>,
    ) -> Result<FieldElement, Error> {
        if a.field_id != self.id {
            return Err(Error::FieldMismatch);
        }
        self.check(a.index)?;
        let rhs = match b {
            Some(e) => {
                if e.field_id != self.id {
                    return Err(Error::FieldMismatch);
                }
                self.check(e.index)?;
                Some(e.index)
            }
            None => None,
        };
        let need_rhs = matches!(op, FieldOp::Add | FieldOp::Sub | FieldOp::Mul | FieldOp::Div);
        let index = match (op, rhs) {
            (FieldOp::Add, Some(b)) => self.add(a.index, b),
            (FieldOp::Sub, Some(b)) => self.sub(a.index, b),
            (FieldOp::Mul, Some(b)) => self.mul(a.index, b),
            (FieldOp::Div, Some(b)) => self.div(a.index, b)?,
            (FieldOp::Inv, None) => self.inv(a.index)?,
            (FieldOp::Neg, None) => self.neg(a.index),
            (FieldOp::Pow(e), None) => self.pow(a.index, e),
            _ => {
                return Err(Error::Precondition(if need_rhs {
                    "binary operation needs two operands".into()
                } else {
                    "unary operation takes one operand".into()
                }))
            }
        };
        Ok(FieldElement {
            index,
            field_id: self.id,
        })
    }
}

fn digits(mut t: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = vec![0; len];
    for d in out.iter_mut() {
        *d = t % p;
        t /= p;
    }
    out
}

fn digits_to_index(d: &[u64], p: u64) -> u64 {
    let mut index = 0;
    for &c in d.iter().rev() {
        index = index * p + c;
    }
    index
}

/// Attempts to certify `modulus` as primitive and, on success, returns the
/// (antilog, log, gamma) tables. The residue class of x must have
/// multiplicative order exactly q-1 with all powers distinct and nonzero;
/// that simultaneously certifies irreducibility at these sizes.
fn build_tables(p: u64, r: u32, q: u64, modulus: &[u64]) -> Option<(Vec<u64>, Vec<u64>, u64)> {
    let r = r as usize;
    // Residue of x mod the modulus.
    let x_digits = if r == 1 {
        vec![(p - modulus[0] % p) % p]
    } else {
        let mut d = vec![0; r];
        d[1] = 1;
        d
    };
    let gamma = digits_to_index(&x_digits, p);
    if gamma == 0 {
        return None;
    }

    let mut antilog = Vec::with_capacity((q - 1) as usize);
    let mut log = vec![0u64; q as usize];
    let mut seen = vec![false; q as usize];

    let mut cur = vec![0; r];
    cur[0] = 1; // gamma^0 = 1
    for i in 0..q - 1 {
        let idx = digits_to_index(&cur, p);
        if idx == 0 || seen[idx as usize] {
            return None;
        }
        if idx == 1 && i > 0 {
            return None;
        }
        seen[idx as usize] = true;
        antilog.push(idx);
        log[idx as usize] = i;
        cur = mul_by_x(&cur, modulus, p);
    }
    // Order must be exactly q-1: gamma^(q-1) = 1.
    if digits_to_index(&cur, p) != 1 {
        return None;
    }
    Some((antilog, log, gamma))
}

/// Multiplies a residue (digit vector of length r) by x and reduces mod the
/// monic modulus.
fn mul_by_x(d: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let r = d.len();
    let top = d[r - 1];
    let mut out = vec![0; r];
    for i in 1..r {
        out[i] = d[i - 1];
    }
    if top != 0 {
        // x^r = -(c_0 + c_1 x + ... + c_{r-1} x^{r-1})
        for i in 0..r {
            let sub = top * modulus[i] % p;
            out[i] = (out[i] + p - sub) % p;
        }
    }
    out
}

/// An injective ring homomorphism GF(q) -> GF(q^m), verified at construction.
#[derive(Debug)]
pub struct SubfieldEmbedding {
    sub: Arc<FiniteField>,
    ext: Arc<FiniteField>,
    degree: u32,
    forward: Vec<u64>,
    /// inverse[x] = a with forward[a] = x, or u64::MAX if x is not in the image.
    inverse: Vec<u64>,
}

impl SubfieldEmbedding {
    pub fn new(sub: Arc<FiniteField>, ext: Arc<FiniteField>) -> Result<Self, Error> {
        if sub.characteristic() != ext.characteristic() {
            return Err(Error::NoEmbeddingDegree {
                sub_order: sub.order(),
                ext_order: ext.order(),
            });
        }
        let (q, big_q) = (sub.order(), ext.order());
        let mut degree = 0u32;
        let mut pow = 1u128;
        while pow < big_q as u128 {
            pow *= q as u128;
            degree += 1;
        }
        if pow != big_q as u128 || degree == 0 {
            return Err(Error::NoEmbeddingDegree {
                sub_order: q,
                ext_order: big_q,
            });
        }

        // A root of sub's modulus lies in the unique order-q subfield of ext,
        // whose nonzero elements are the powers Gamma^(j (Q-1)/(q-1)).
        let step = (big_q - 1) / (q - 1);
        let mut theta = None;
        for j in 0..q - 1 {
            let cand = ext.gamma_pow(j * step);
            if eval_int_poly(&ext, sub.modulus(), cand) == 0 {
                theta = Some(cand);
                break;
            }
        }
        let theta = theta.ok_or_else(|| {
            Error::VerificationFailed("no root of subfield modulus in extension".into())
        })?;

        // forward(a) = sum a_i theta^i for the base-p digits a_i of a.
        let p = sub.characteristic();
        let mut forward = Vec::with_capacity(q as usize);
        for a in 0..q {
            let mut acc = 0;
            let mut t = a;
            let mut theta_pow = 1;
            for _ in 0..sub.degree() {
                let c = ext.from_int(t % p);
                acc = ext.add(acc, ext.mul(c, theta_pow));
                theta_pow = ext.mul(theta_pow, theta);
                t /= p;
            }
            forward.push(acc);
        }

        let mut inverse = vec![u64::MAX; big_q as usize];
        for (a, &x) in forward.iter().enumerate() {
            if inverse[x as usize] != u64::MAX {
                return Err(Error::VerificationFailed(
                    "subfield embedding is not injective".into(),
                ));
            }
            inverse[x as usize] = a as u64;
        }

        let emb = SubfieldEmbedding {
            sub,
            ext,
            degree,
            forward,
            inverse,
        };
        emb.verify_homomorphism()?;
        Ok(emb)
    }

    /// Exhaustive homomorphism check for small subfields, sampled otherwise.
    fn verify_homomorphism(&self) -> Result<(), Error> {
        let q = self.sub.order();
        let check_pair = |a: u64, b: u64| -> bool {
            self.forward[self.sub.add(a, b) as usize]
                == self.ext.add(self.forward[a as usize], self.forward[b as usize])
                && self.forward[self.sub.mul(a, b) as usize]
                    == self.ext.mul(self.forward[a as usize], self.forward[b as usize])
        };
        let ok = if q <= 64 {
            (0..q).all(|a| (0..q).all(|b| check_pair(a, b)))
        } else {
            let mut rng = crate::rng::SplitMix64::new(0x5a17_f1e1d);
            (0..4096).all(|_| check_pair(rng.below(q), rng.below(q)))
        };
        if ok && self.forward[1] == 1 {
            Ok(())
        } else {
            Err(Error::VerificationFailed(
                "subfield embedding is not a ring homomorphism".into(),
            ))
        }
    }

    pub fn subfield(&self) -> &Arc<FiniteField> {
        &self.sub
    }

    pub fn extension(&self) -> &Arc<FiniteField> {
        &self.ext
    }

    /// m with |ext| = |sub|^m.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn embed(&self, a: u64) -> u64 {
        self.forward[a as usize]
    }

    /// Inverse of `embed`; errors when x is outside the embedded subfield.
    pub fn unembed(&self, x: u64) -> Result<u64, Error> {
        let a = self.inverse[x as usize];
        if a == u64::MAX {
            Err(Error::VerificationFailed(
                "element not in embedded subfield".into(),
            ))
        } else {
            Ok(a)
        }
    }

    /// Tr_{q^m/q}(x) = x + x^q + ... + x^(q^(m-1)), returned as an element of
    /// the subfield.
    pub fn trace(&self, x: u64) -> Result<u64, Error> {
        let q = self.sub.order();
        let mut acc = 0;
        let mut term = x;
        for _ in 0..self.degree {
            acc = self.ext.add(acc, term);
            term = self.ext.pow(term, q);
        }
        self.unembed(acc)
    }
}

/// Evaluates a polynomial with GF(p)-integer coefficients at a point of ext.
fn eval_int_poly(ext: &FiniteField, coeffs: &[u64], x: u64) -> u64 {
    let mut acc = 0;
    for &c in coeffs.iter().rev() {
        acc = ext.mul(acc, x);
        acc = ext.add(acc, ext.from_int(c));
    }
    acc
}

/// Solves for the dual basis {beta_j} of `basis` = {alpha_i}: the unique
/// elements with Tr(alpha_i beta_j) = delta_ij, found as a k x k linear
/// system over the subfield and exhaustively re-verified before return.
pub fn dual_basis(emb: &SubfieldEmbedding, basis: &[u64]) -> Result<Vec<u64>, Error> {
    let k = basis.len();
    if k != emb.degree() as usize {
        return Err(Error::NotABasis);
    }
    let sub = emb.subfield();
    let ext = emb.extension();

    // Gram matrix of the trace bilinear form in the given basis.
    let mut gram = vec![0u64; k * k];
    for i in 0..k {
        for j in 0..k {
            gram[i * k + j] = emb.trace(ext.mul(basis[i], basis[j]))?;
        }
    }
    let inv = crate::linalg::invert(sub, k, &gram).ok_or(Error::NotABasis)?;

    // beta_j = sum_s inv[s][j] alpha_s.
    let mut dual = Vec::with_capacity(k);
    for j in 0..k {
        let mut acc = 0;
        for s in 0..k {
            acc = ext.add(acc, ext.mul(emb.embed(inv[s * k + j]), basis[s]));
        }
        dual.push(acc);
    }

    for i in 0..k {
        for j in 0..k {
            let t = emb.trace(ext.mul(basis[i], dual[j]))?;
            let expected = if i == j { 1 } else { 0 };
            if t != expected {
                return Err(Error::VerificationFailed(
                    "dual basis trace table check failed".into(),
                ));
            }
        }
    }
    Ok(dual)
}

/// A field tower GF(q) < GF(q^k) with its embedding, the canonical basis
/// {1, Gamma, ..., Gamma^(k-1)}, and the dual basis. This is the working
/// context for trace representations of codes.
#[derive(Debug)]
pub struct Extension {
    embedding: SubfieldEmbedding,
    basis: Vec<u64>,
    dual: Vec<u64>,
}

impl Extension {
    /// Builds GF(q^k) directly as GF(p^(r k)) over `base` = GF(p^r).
    pub fn new(base: Arc<FiniteField>, k: u32) -> Result<Arc<Self>, Error> {
        Self::with_cap(base, k, FIELD_ORDER_CAP)
    }

    pub fn with_cap(base: Arc<FiniteField>, k: u32, cap: u64) -> Result<Arc<Self>, Error> {
        if k < 1 {
            return Err(Error::Precondition("extension degree must be >= 1".into()));
        }
        let ext = FiniteField::with_cap(
            base.characteristic(),
            base.degree()
                .checked_mul(k)
                .ok_or(Error::OrderExceedsCap {
                    order: u128::MAX,
                    cap,
                })?,
            cap,
        )?;
        let embedding = SubfieldEmbedding::new(base, ext.clone())?;
        let gamma = ext.generator();
        let mut basis = Vec::with_capacity(k as usize);
        let mut cur = 1;
        for _ in 0..k {
            basis.push(cur);
            cur = ext.mul(cur, gamma);
        }
        let dual = dual_basis(&embedding, &basis)?;
        Ok(Arc::new(Extension {
            embedding,
            basis,
            dual,
        }))
    }

    pub fn base(&self) -> &Arc<FiniteField> {
        self.embedding.subfield()
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        self.embedding.extension()
    }

    pub fn degree(&self) -> u32 {
        self.embedding.degree()
    }

    pub fn embedding(&self) -> &SubfieldEmbedding {
        &self.embedding
    }

    /// Canonical basis {1, Gamma, ..., Gamma^(k-1)} over the base field.
    pub fn basis(&self) -> &[u64] {
        &self.basis
    }

    pub fn dual(&self) -> &[u64] {
        &self.dual
    }

    /// Tr_{q^k/q}(x) as a base-field index.
    pub fn trace(&self, x: u64) -> Result<u64, Error> {
        self.embedding.trace(x)
    }

    /// Coordinates of x with respect to the canonical basis, recovered via
    /// the dual basis: x_s = Tr(x beta_s).
    pub fn coordinates(&self, x: u64) -> Result<Vec<u64>, Error> {
        self.dual
            .iter()
            .map(|&b| self.trace(self.field().mul(x, b)))
            .collect()
    }
}
