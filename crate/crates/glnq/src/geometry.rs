//! Commutator-fiber witnesses over the center.
//!
//! For `n = m·l` and a primitive `n`-th root of unity `ξ`, the diagonal
//! matrix
//!
//! `τ = diag(b_1,…,b_m, ξ^m b_1,…,ξ^m b_m, …, ξ^{(l-1)m} b_1,…,ξ^{(l-1)m} b_m)`
//!
//! together with the `n`-cycle permutation `σ` satisfies
//! `[σ^m, τ] = ξ^m·I`, placing `(σ^m, τ)` in the commutator fiber over
//! the central element `ξ^m`. This module constructs those witnesses —
//! over exact cyclotomic rationals `Q(ζ_n)` or over a finite field
//! containing a primitive `n`-th root — checks the commutator identity
//! on construction, verifies the block-product membership condition
//! cutting out the commutator image inside the centralizer of `τ`, and
//! carries the dimension bookkeeping for the fiber over the center.
//!
//! All checks avoid matrix inversion over the cyclotomic backend by
//! testing `σ^m X = Y σ^m` instead of conjugating.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cyclotomic::CycValue;
use crate::field::{FieldSpec, FqMatrix};
use crate::partitions::Partition;
use crate::{GlnqError, Result};

/// Scalar backend for the witness constructions.
pub trait GeomRing {
    type Elem: Clone + PartialEq + std::fmt::Debug;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// The fixed primitive `n`-th root of unity.
    fn xi(&self) -> Self::Elem;
    fn xi_pow(&self, e: u32) -> Self::Elem {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, &self.xi());
        }
        acc
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }
}

/// Exact `Q(ζ_n)` with `ξ = ζ_n`.
#[derive(Clone, Debug)]
pub struct CycRing {
    pub n: u32,
}

impl GeomRing for CycRing {
    type Elem = CycValue;
    fn zero(&self) -> CycValue {
        CycValue::zero()
    }
    fn one(&self) -> CycValue {
        CycValue::one()
    }
    fn add(&self, a: &CycValue, b: &CycValue) -> CycValue {
        a.add(b)
    }
    fn mul(&self, a: &CycValue, b: &CycValue) -> CycValue {
        a.mul(b)
    }
    fn xi(&self) -> CycValue {
        CycValue::root_of_unity(self.n, 1)
    }
    fn xi_pow(&self, e: u32) -> CycValue {
        CycValue::root_of_unity(self.n, e as i64)
    }
}

/// `F_q` with a chosen element `ξ` of multiplicative order `n`.
#[derive(Clone, Debug)]
pub struct FqRing {
    pub field: Arc<FieldSpec>,
    pub xi: u32,
}

impl FqRing {
    /// Picks the least element of order exactly `n`; requires `n | q-1`.
    pub fn with_order(field: Arc<FieldSpec>, n: u32) -> Result<Self> {
        if (field.q() - 1) % n != 0 {
            return Err(GlnqError::Invalid(format!(
                "F_{} has no element of order {n}",
                field.q()
            )));
        }
        let xi = field
            .units()
            .find(|&x| field.elt_order(x).unwrap() == n)
            .ok_or_else(|| GlnqError::Invalid("unit group is cyclic; unreachable".into()))?;
        Ok(FqRing { field, xi })
    }
}

impl GeomRing for FqRing {
    type Elem = u32;
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        self.field.add(*a, *b)
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        self.field.mul(*a, *b)
    }
    fn xi(&self) -> u32 {
        self.xi
    }
    fn xi_pow(&self, e: u32) -> u32 {
        self.field.pow(self.xi, e as u64)
    }
}

/// Dense square matrix over a [`GeomRing`].
#[derive(Clone, Debug)]
pub struct GMatrix<R: GeomRing> {
    pub n: usize,
    pub data: Vec<R::Elem>,
}

impl<R: GeomRing> PartialEq for GMatrix<R> {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.data == other.data
    }
}

impl<R: GeomRing> GMatrix<R> {
    pub fn zero(ring: &R, n: usize) -> Self {
        GMatrix {
            n,
            data: vec![ring.zero(); n * n],
        }
    }

    pub fn identity(ring: &R, n: usize) -> Self {
        let mut m = Self::zero(ring, n);
        for i in 0..n {
            m.data[i * n + i] = ring.one();
        }
        m
    }

    pub fn diagonal(ring: &R, entries: &[R::Elem]) -> Self {
        let n = entries.len();
        let mut m = Self::zero(ring, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
    }

    /// Permutation matrix of the `n`-cycle raised to the `m`-th power:
    /// row `i` carries a 1 in column `(i + m) mod n`.
    pub fn cycle_power(ring: &R, n: usize, m: usize) -> Self {
        let mut p = Self::zero(ring, n);
        for i in 0..n {
            p.data[i * n + (i + m) % n] = ring.one();
        }
        p
    }

    pub fn get(&self, i: usize, j: usize) -> &R::Elem {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R::Elem) {
        self.data[i * self.n + j] = v;
    }

    pub fn mul(&self, ring: &R, other: &Self) -> Self {
        let n = self.n;
        let mut out = Self::zero(ring, n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if ring.is_zero(a) {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if ring.is_zero(b) {
                        continue;
                    }
                    let cur = out.get(i, j).clone();
                    out.set(i, j, ring.add(&cur, &ring.mul(a, b)));
                }
            }
        }
        out
    }

    pub fn scalar_mul(&self, ring: &R, s: &R::Elem) -> Self {
        GMatrix {
            n: self.n,
            data: self.data.iter().map(|x| ring.mul(s, x)).collect(),
        }
    }
}

/// A constructed witness `(σ^m, τ_n^b(ξ))` with its validated data.
#[derive(Clone, Debug)]
pub struct TauWitness<R: GeomRing> {
    pub n: u32,
    pub m: u32,
    pub l: u32,
    pub b: Vec<R::Elem>,
    /// Block pattern `(m_1,…,m_k)` with `Σ m_i = m`, when declared; the
    /// entries of `b` are then constant on the pattern's blocks.
    pub pattern: Option<Vec<u32>>,
    pub tau: GMatrix<R>,
}

/// Builds `τ_n^b(ξ)` and verifies `[σ^m, τ] = ξ^m·I` on construction
/// (as `σ^m τ = ξ^m τ σ^m`, avoiding inverses).
///
/// With a pattern declared, `b` must be constant on the pattern blocks
/// with block values `β_i` satisfying the non-resonance condition
/// `β_i ≠ ξ^{rm} β_j` for `i ≠ j` and every `r`.
pub fn build_tau<R: GeomRing>(
    ring: &R,
    n: u32,
    m: u32,
    b: &[R::Elem],
    pattern: Option<Vec<u32>>,
) -> Result<TauWitness<R>> {
    if m == 0 || n % m != 0 {
        return Err(GlnqError::Invalid(format!("m = {m} must divide n = {n}")));
    }
    if b.len() != m as usize {
        return Err(GlnqError::SizeMismatch(format!(
            "b has {} entries, expected m = {m}",
            b.len()
        )));
    }
    if b.iter().any(|x| ring.is_zero(x)) {
        return Err(GlnqError::Invalid("b entries must be nonzero".into()));
    }
    let l = n / m;
    if let Some(pat) = &pattern {
        let total: u32 = pat.iter().sum();
        if total != m || pat.iter().any(|&x| x == 0) {
            return Err(GlnqError::Invalid(format!(
                "pattern {pat:?} must consist of positive parts summing to m = {m}"
            )));
        }
        let mut betas = Vec::new();
        let mut off = 0usize;
        for &mi in pat {
            let beta = b[off].clone();
            for t in 0..mi as usize {
                if b[off + t] != beta {
                    return Err(GlnqError::Invalid(
                        "b must be constant on pattern blocks".into(),
                    ));
                }
            }
            betas.push(beta);
            off += mi as usize;
        }
        for i in 0..betas.len() {
            for j in 0..betas.len() {
                if i == j {
                    continue;
                }
                for r in 0..l {
                    let rhs = ring.mul(&ring.xi_pow((r * m) % n), &betas[j]);
                    if betas[i] == rhs {
                        return Err(GlnqError::Invalid(format!(
                            "resonance: β_{i} = ξ^{}·β_{j}",
                            r * m
                        )));
                    }
                }
            }
        }
    }
    let mut entries = Vec::with_capacity(n as usize);
    for r in 0..l {
        let scale = ring.xi_pow((r * m) % n);
        for bi in b {
            entries.push(ring.mul(&scale, bi));
        }
    }
    let tau = GMatrix::diagonal(ring, &entries);
    let witness = TauWitness {
        n,
        m,
        l,
        b: b.to_vec(),
        pattern,
        tau,
    };
    if !commutator_identity_holds(ring, &witness) {
        return Err(GlnqError::Invalid(
            "commutator identity failed on construction".into(),
        ));
    }
    Ok(witness)
}

/// `σ^m τ = ξ^m τ σ^m`, the inverse-free form of `[σ^m, τ] = ξ^m I`.
pub fn commutator_identity_holds<R: GeomRing>(ring: &R, w: &TauWitness<R>) -> bool {
    let n = w.n as usize;
    let sigma_m = GMatrix::cycle_power(ring, n, w.m as usize);
    let lhs = sigma_m.mul(ring, &w.tau);
    let rhs = w
        .tau
        .scalar_mul(ring, &ring.xi_pow(w.m % w.n))
        .mul(ring, &sigma_m);
    lhs == rhs
}

/// Dimension bookkeeping for the fiber over `ξ^m`, at a declared block
/// pattern `(m_1,…,m_k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionLedger {
    pub n: u32,
    pub m: u32,
    pub pattern: Vec<u32>,
    /// `Σ m_i²`: dimension of the stabilizer of `(σ^m, τ)`.
    pub stabilizer_dim: u32,
    /// `n² - Σ m_i²`: dimension of one conjugation orbit.
    pub orbit_dim: u32,
    /// `k + n²`: dimension of the union of orbits with this pattern.
    pub union_dim: u32,
    /// `n² + m`: the fiber dimension, attained at `k = m`.
    pub fiber_dim: u32,
    /// True exactly when the pattern attains the maximum (`k = m`).
    pub maximal: bool,
}

/// Assembles the ledger `stabilizer = Σm_i²`, `orbit = n² - Σm_i²`,
/// `union = k + n²`, `fiber = n² + m`, checking `m | n` and `Σ m_i = m`.
pub fn dimension_ledger(n: u32, m: u32, pattern: &[u32]) -> Result<DimensionLedger> {
    if m == 0 || n % m != 0 {
        return Err(GlnqError::Invalid(format!("m = {m} must divide n = {n}")));
    }
    let total: u32 = pattern.iter().sum();
    if total != m || pattern.iter().any(|&x| x == 0) {
        return Err(GlnqError::Invalid(format!(
            "pattern {pattern:?} must have positive parts summing to m = {m}"
        )));
    }
    let sum_sq: u32 = pattern.iter().map(|&x| x * x).sum();
    let k = pattern.len() as u32;
    Ok(DimensionLedger {
        n,
        m,
        pattern: pattern.to_vec(),
        stabilizer_dim: sum_sq,
        orbit_dim: n * n - sum_sq,
        union_dim: k + n * n,
        fiber_dim: n * n + m,
        maximal: k == m,
    })
}

/// Centralizer structure at a declared pattern:
/// `C(τ) ≅ (GL_{m_1} × ⋯ × GL_{m_k})^l`, of dimension `l·Σ m_i²`.
pub fn centralizer_structure<R: GeomRing>(w: &TauWitness<R>) -> Result<(Vec<u32>, u32)> {
    let pattern = w
        .pattern
        .clone()
        .ok_or_else(|| GlnqError::Invalid("witness has no declared pattern".into()))?;
    let sum_sq: u32 = pattern.iter().map(|&x| x * x).sum();
    Ok((pattern, w.l * sum_sq))
}

/// Counts invertible matrices commuting with `tau` by enumerating the
/// whole matrix space (verification helper for tiny cases).
pub fn commuting_invertible_count(tau: &FqMatrix) -> u64 {
    let n = tau.n;
    let q = tau.field.q();
    let total = (q as u64).pow((n * n) as u32);
    let mut count = 0;
    let mut code = vec![0u32; n * n];
    for counter in 0..total {
        if counter > 0 {
            let mut i = 0;
            loop {
                code[i] += 1;
                if code[i] < q {
                    break;
                }
                code[i] = 0;
                i += 1;
            }
        }
        let m = FqMatrix {
            field: tau.field.clone(),
            n,
            data: code.clone(),
        };
        if m.det() == 0 {
            continue;
        }
        if m.mul(tau) == tau.mul(&m) {
            count += 1;
        }
    }
    count
}

/// Block-diagonal access into the centralizer shape: `l` super-blocks of
/// size `m`, each split by the pattern into `k` diagonal blocks.
pub struct BlockShape {
    pub l: u32,
    pub pattern: Vec<u32>,
    offsets: Vec<usize>,
    m: usize,
}

impl BlockShape {
    pub fn new(l: u32, pattern: &[u32]) -> Self {
        let mut offsets = vec![0usize];
        for &p in pattern {
            offsets.push(offsets.last().unwrap() + p as usize);
        }
        let m = *offsets.last().unwrap();
        BlockShape {
            l,
            pattern: pattern.to_vec(),
            offsets,
            m,
        }
    }

    pub fn n(&self) -> usize {
        self.l as usize * self.m
    }

    /// Extracts block `(r, j)` (super-block `r`, pattern slot `j`).
    pub fn block(&self, a: &FqMatrix, r: usize, j: usize) -> FqMatrix {
        let sz = self.pattern[j] as usize;
        let row0 = r * self.m + self.offsets[j];
        let mut out = FqMatrix::zero(a.field.clone(), sz);
        for i in 0..sz {
            for k in 0..sz {
                out.set(i, k, a.get(row0 + i, row0 + k));
            }
        }
        out
    }

    /// Writes block `(r, j)`.
    pub fn set_block(&self, a: &mut FqMatrix, r: usize, j: usize, blk: &FqMatrix) {
        let sz = self.pattern[j] as usize;
        let row0 = r * self.m + self.offsets[j];
        for i in 0..sz {
            for k in 0..sz {
                a.set(row0 + i, row0 + k, blk.get(i, k));
            }
        }
    }

    /// True when `a` is block-diagonal of this shape with every block
    /// invertible.
    pub fn is_member(&self, a: &FqMatrix) -> bool {
        let n = self.n();
        for i in 0..n {
            for j in 0..n {
                if !self.same_block(i, j) && a.get(i, j) != 0 {
                    return false;
                }
            }
        }
        for r in 0..self.l as usize {
            for j in 0..self.pattern.len() {
                if self.block(a, r, j).det() == 0 {
                    return false;
                }
            }
        }
        true
    }

    fn same_block(&self, i: usize, j: usize) -> bool {
        let (ri, rj) = (i / self.m, j / self.m);
        if ri != rj {
            return false;
        }
        let slot = |x: usize| -> usize {
            let local = x % self.m;
            (0..self.pattern.len())
                .find(|&t| self.offsets[t] <= local && local < self.offsets[t + 1])
                .unwrap()
        };
        slot(i) == slot(j)
    }
}

/// The block-product membership condition cutting out the commutator
/// image inside `C(τ)`: every ordered product down a pattern column is
/// the identity, `A_{1j} A_{2j} ⋯ A_{lj} = I` for all `j`.
pub fn sl_mb_check(a: &FqMatrix, shape: &BlockShape) -> Result<bool> {
    if a.n != shape.n() {
        return Err(GlnqError::SizeMismatch(format!(
            "matrix is {}x{} but the shape needs {}",
            a.n,
            a.n,
            shape.n()
        )));
    }
    if !shape.is_member(a) {
        return Ok(false);
    }
    for j in 0..shape.pattern.len() {
        let sz = shape.pattern[j] as usize;
        let mut prod = FqMatrix::identity(a.field.clone(), sz);
        for r in 0..shape.l as usize {
            prod = prod.mul(&shape.block(a, r, j));
        }
        if prod != FqMatrix::identity(a.field.clone(), sz) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of the sampled closure check over a finite field.
#[derive(Clone, Debug)]
pub struct ClosureReport {
    pub samples: u32,
    pub seed: u64,
    /// Every sampled `[σ^{-m}, B]` landed in `C(τ) ∩ SL^{m̄}`.
    pub commutators_pass: bool,
    /// Every sampled admissible `A` was reproduced from its constructed
    /// preimage `B`.
    pub preimages_pass: bool,
}

fn random_invertible(field: &Arc<FieldSpec>, n: usize, rng: &mut ChaCha8Rng) -> FqMatrix {
    loop {
        let data: Vec<u32> = (0..n * n).map(|_| rng.gen_range(0..field.q())).collect();
        let m = FqMatrix {
            field: field.clone(),
            n,
            data,
        };
        if m.det() != 0 {
            return m;
        }
    }
}

fn random_centralizer_element(
    field: &Arc<FieldSpec>,
    shape: &BlockShape,
    rng: &mut ChaCha8Rng,
) -> FqMatrix {
    let mut b = FqMatrix::zero(field.clone(), shape.n());
    for r in 0..shape.l as usize {
        for j in 0..shape.pattern.len() {
            let blk = random_invertible(field, shape.pattern[j] as usize, rng);
            shape.set_block(&mut b, r, j, &blk);
        }
    }
    b
}

/// Samples both inclusions of the closure claim
/// `[σ^m, C(τ)] = C(τ) ∩ SL^{m̄}`: commutators `[σ^{-m}, B]` must pass
/// [`sl_mb_check`], and every admissible `A` must be hit by its
/// explicitly constructed preimage.
pub fn commutator_closure_check(
    ring: &FqRing,
    w: &TauWitness<FqRing>,
    samples: u32,
    seed: u64,
) -> Result<ClosureReport> {
    let pattern = w
        .pattern
        .clone()
        .ok_or_else(|| GlnqError::Invalid("closure check needs a pattern".into()))?;
    let field = &ring.field;
    let shape = BlockShape::new(w.l, &pattern);
    let n = shape.n();
    let sigma_m = fq_cycle_power(field, n, w.m as usize % n);
    let sigma_m_inv = fq_cycle_power(field, n, (n - w.m as usize % n) % n);
    let tau = fq_matrix_of_witness(ring, w);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut commutators_pass = true;
    let mut preimages_pass = true;
    for _ in 0..samples {
        // forward: A = [σ^{-m}, B] for random B in C(τ)
        let b = random_centralizer_element(field, &shape, &mut rng);
        debug_assert_eq!(b.mul(&tau), tau.mul(&b));
        let a = sigma_m_inv.mul(&b).mul(&sigma_m).mul(&b.inv()?);
        if a.mul(&tau) != tau.mul(&a) || !sl_mb_check(&a, &shape)? {
            commutators_pass = false;
        }
        // backward: a random admissible A is reproduced from its preimage
        let a2 = random_admissible(field, &shape, &mut rng)?;
        let b2 = preimage_of(field, &shape, &a2, &mut rng)?;
        let back = sigma_m_inv.mul(&b2).mul(&sigma_m).mul(&b2.inv()?);
        if back != a2 {
            preimages_pass = false;
        }
    }
    Ok(ClosureReport {
        samples,
        seed,
        commutators_pass,
        preimages_pass,
    })
}

/// A random element of `C(τ) ∩ SL^{m̄}`: fill the first `l-1`
/// super-blocks freely and close each column product to the identity.
fn random_admissible(
    field: &Arc<FieldSpec>,
    shape: &BlockShape,
    rng: &mut ChaCha8Rng,
) -> Result<FqMatrix> {
    let l = shape.l as usize;
    let mut a = FqMatrix::zero(field.clone(), shape.n());
    for j in 0..shape.pattern.len() {
        let sz = shape.pattern[j] as usize;
        let mut partial = FqMatrix::identity(field.clone(), sz);
        for r in 0..l - 1 {
            let blk = random_invertible(field, sz, rng);
            partial = partial.mul(&blk);
            shape.set_block(&mut a, r, j, &blk);
        }
        shape.set_block(&mut a, l - 1, j, &partial.inv()?);
    }
    Ok(a)
}

/// The constructive preimage: `B_{0j}` free and
/// `B_{rj} = A_{rj}^{-1} ⋯ A_{1j}^{-1} B_{0j}`, so that
/// `[σ^{-m}, B] = A` whenever the column products of `A` are trivial.
fn preimage_of(
    field: &Arc<FieldSpec>,
    shape: &BlockShape,
    a: &FqMatrix,
    rng: &mut ChaCha8Rng,
) -> Result<FqMatrix> {
    let l = shape.l as usize;
    let mut b = FqMatrix::zero(field.clone(), shape.n());
    for j in 0..shape.pattern.len() {
        let b0 = random_invertible(field, shape.pattern[j] as usize, rng);
        shape.set_block(&mut b, 0, j, &b0);
        let mut acc = b0;
        for r in 1..l {
            acc = shape.block(a, r, j).inv()?.mul(&acc);
            shape.set_block(&mut b, r, j, &acc);
        }
    }
    Ok(b)
}

fn fq_cycle_power(field: &Arc<FieldSpec>, n: usize, m: usize) -> FqMatrix {
    let mut p = FqMatrix::zero(field.clone(), n);
    for i in 0..n {
        p.set(i, (i + m) % n, 1);
    }
    p
}

fn fq_matrix_of_witness(ring: &FqRing, w: &TauWitness<FqRing>) -> FqMatrix {
    FqMatrix {
        field: ring.field.clone(),
        n: w.n as usize,
        data: w.tau.data.clone(),
    }
}

/// A Jordan-type witness for the fiber over `ξ^m` with `y` not
/// necessarily semisimple: blocks `U_λ(β) = β·(I + N_λ)` (eigenvalue
/// `β`, nilpotent Jordan shape `N_λ`) repeated along the `ξ^{rm}`-orbit.
/// The multiplicative Jordan parts satisfy `[σ^m, y_s] = ξ^m` and
/// `[σ^m, y_u] = 1`, both verified on construction.
#[derive(Clone, Debug)]
pub struct JordanWitness<R: GeomRing> {
    pub n: u32,
    pub m: u32,
    pub l: u32,
    pub partitions: Vec<Partition>,
    pub y: GMatrix<R>,
    pub semisimple_part: GMatrix<R>,
    pub unipotent_part: GMatrix<R>,
}

/// Builds `τ_{λ_1,…,λ_k}^b(ξ)` and verifies both multiplicative-Jordan
/// commutator identities by exact arithmetic.
///
/// Requires `Σ|λ_i| = m`, `m | n`, and non-resonant `b`:
/// `b_i ≠ ξ^{rm} b_j` for `i ≠ j`.
pub fn jordan_witness<R: GeomRing>(
    ring: &R,
    n: u32,
    m: u32,
    partitions: &[Partition],
    b: &[R::Elem],
) -> Result<JordanWitness<R>> {
    if m == 0 || n % m != 0 {
        return Err(GlnqError::Invalid(format!("m = {m} must divide n = {n}")));
    }
    let weight: u32 = partitions.iter().map(|p| p.weight()).sum();
    if weight != m {
        return Err(GlnqError::SizeMismatch(format!(
            "Σ|λ_i| = {weight}, expected m = {m}"
        )));
    }
    if b.len() != partitions.len() {
        return Err(GlnqError::SizeMismatch(
            "one scalar b_i per partition".into(),
        ));
    }
    if b.iter().any(|x| ring.is_zero(x)) {
        return Err(GlnqError::Invalid("b entries must be nonzero".into()));
    }
    let l = n / m;
    for i in 0..b.len() {
        for j in 0..b.len() {
            if i == j {
                continue;
            }
            for r in 0..l {
                if b[i] == ring.mul(&ring.xi_pow((r * m) % n), &b[j]) {
                    return Err(GlnqError::Invalid(format!(
                        "resonance: b_{i} = ξ^{}·b_{j}",
                        r * m
                    )));
                }
            }
        }
    }
    let nu = n as usize;
    let mut y_s = GMatrix::zero(ring, nu);
    let mut y_u = GMatrix::identity(ring, nu);
    let mut off = 0usize;
    for r in 0..l {
        let scale = ring.xi_pow((r * m) % n);
        for (lam, beta) in partitions.iter().zip(b) {
            let eig = ring.mul(&scale, beta);
            for &part in lam.parts() {
                let sz = part as usize;
                for t in 0..sz {
                    y_s.set(off + t, off + t, eig.clone());
                    if t + 1 < sz {
                        y_u.set(off + t, off + t + 1, ring.one());
                    }
                }
                off += sz;
            }
        }
    }
    let y = y_s.mul(ring, &y_u);
    let w = JordanWitness {
        n,
        m,
        l,
        partitions: partitions.to_vec(),
        y,
        semisimple_part: y_s,
        unipotent_part: y_u,
    };
    // [σ^m, y_s] = ξ^m and [σ^m, y_u] = 1, inverse-free forms
    let sigma_m = GMatrix::cycle_power(ring, nu, m as usize % nu);
    let lhs = sigma_m.mul(ring, &w.semisimple_part);
    let rhs = w
        .semisimple_part
        .scalar_mul(ring, &ring.xi_pow(m % n))
        .mul(ring, &sigma_m);
    if lhs != rhs {
        return Err(GlnqError::Invalid(
            "semisimple part fails the commutator identity".into(),
        ));
    }
    if sigma_m.mul(ring, &w.unipotent_part) != w.unipotent_part.mul(ring, &sigma_m) {
        return Err(GlnqError::Invalid(
            "unipotent part does not commute with σ^m".into(),
        ));
    }
    if w.semisimple_part.mul(ring, &w.unipotent_part)
        != w.unipotent_part.mul(ring, &w.semisimple_part)
    {
        return Err(GlnqError::Invalid("Jordan parts do not commute".into()));
    }
    Ok(w)
}
