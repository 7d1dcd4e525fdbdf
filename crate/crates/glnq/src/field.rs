//! Exact arithmetic in `F_{p^e}`, monic polynomials, matrices, and the
//! rational canonical form used as a conjugacy invariant.
//!
//! A [`FieldSpec`] is constructed deterministically: the modulus is the
//! lexicographically least monic irreducible of degree `e` over `F_p`
//! (coefficients compared in the order `a_0, …, a_{e-1}`), and the
//! generator is the least element of full multiplicative order. This
//! pins every discrete logarithm, hence every character value, across
//! runs and machines.
//!
//! Field elements are handled as indices `0..q` packing the coordinate
//! vector in base `p` (`idx = Σ a_i p^i`). For small fields full
//! multiplication tables are precomputed, which is what makes the
//! brute-force group enumeration cheap.

use std::fmt;
use std::sync::{Arc, LazyLock, Mutex};

use std::collections::HashMap;

use crate::{GlnqError, Result};

const TABLE_LIMIT: u32 = 256;

/// A concrete realisation of `F_q`, `q = p^e`.
#[derive(Debug)]
pub struct FieldSpec {
    p: u32,
    e: u32,
    q: u32,
    /// Monic modulus of degree `e` over `F_p`, coefficients `a_0..a_e` (a_e = 1).
    modulus: Vec<u32>,
    /// Index of the fixed primitive element.
    generator: u32,
    /// `dlog[x]` for `x != 0`: exponent of the generator.
    dlog: Vec<u32>,
    /// `exp[i] = generator^i`, length `q-1`.
    exp: Vec<u32>,
    mul_table: Option<Vec<u32>>,
    add_table: Option<Vec<u32>>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q
    }
}
impl Eq for FieldSpec {}

impl FieldSpec {
    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn e(&self) -> u32 {
        self.e
    }
    pub fn q(&self) -> u32 {
        self.q
    }
    pub fn generator(&self) -> u32 {
        self.generator
    }
    /// Modulus coefficients `a_0..a_e` over `F_p`.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Coordinates `(a_0, …, a_{e-1})` of an element index.
    fn coords(&self, idx: u32) -> Vec<u32> {
        let mut v = Vec::with_capacity(self.e as usize);
        let mut x = idx;
        for _ in 0..self.e {
            v.push(x % self.p);
            x /= self.p;
        }
        v
    }

    fn from_coords(&self, coords: &[u32]) -> u32 {
        let mut idx = 0;
        for &c in coords.iter().rev() {
            idx = idx * self.p + c % self.p;
        }
        idx
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if let Some(t) = &self.add_table {
            return t[(a * self.q + b) as usize];
        }
        self.add_slow(a, b)
    }

    fn add_slow(&self, a: u32, b: u32) -> u32 {
        let (ca, cb) = (self.coords(a), self.coords(b));
        let sum: Vec<u32> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % self.p).collect();
        self.from_coords(&sum)
    }

    pub fn neg(&self, a: u32) -> u32 {
        let ca = self.coords(a);
        let n: Vec<u32> = ca.iter().map(|&x| (self.p - x) % self.p).collect();
        self.from_coords(&n)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if let Some(t) = &self.mul_table {
            return t[(a * self.q + b) as usize];
        }
        self.mul_slow(a, b)
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let (ca, cb) = (self.coords(a), self.coords(b));
        let mut prod = vec![0u64; 2 * self.e as usize - 1];
        for (i, &x) in ca.iter().enumerate() {
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] += (x as u64) * (y as u64);
            }
        }
        // reduce modulo the modulus polynomial
        let e = self.e as usize;
        for k in (e..prod.len()).rev() {
            let c = prod[k] % self.p as u64;
            if c != 0 {
                // x^k = x^{k-e} * (-(a_0 + a_1 x + ... + a_{e-1} x^{e-1}))
                for (j, &m) in self.modulus.iter().take(e).enumerate() {
                    let sub = c * m as u64 % self.p as u64;
                    prod[k - e + j] += (self.p as u64 - sub) % self.p as u64;
                }
            }
            prod[k] = 0;
        }
        let coords: Vec<u32> = prod[..e].iter().map(|&x| (x % self.p as u64) as u32).collect();
        self.from_coords(&coords)
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(GlnqError::ZeroElement);
        }
        let d = self.dlog[a as usize];
        Ok(self.exp[((self.q - 1 - d) % (self.q - 1)) as usize])
    }

    pub fn pow(&self, a: u32, mut k: u64) -> u32 {
        if a == 0 {
            return if k == 0 { 1 } else { 0 };
        }
        k %= (self.q - 1) as u64;
        self.exp[((self.dlog[a as usize] as u64 * k) % (self.q - 1) as u64) as usize]
    }

    /// Discrete logarithm base the fixed generator. Errors on 0.
    pub fn dlog(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(GlnqError::ZeroElement);
        }
        Ok(self.dlog[a as usize])
    }

    /// Multiplicative order of a nonzero element.
    pub fn elt_order(&self, a: u32) -> Result<u32> {
        let d = self.dlog(a)?;
        let m = self.q - 1;
        Ok(m / gcd(m, d))
    }

    /// The scalar `v mod p` embedded as a constant (prime-subfield) element.
    pub fn scalar(&self, v: i64) -> u32 {
        (v.rem_euclid(self.p as i64)) as u32
    }

    /// All nonzero element indices, ascending.
    pub fn units(&self) -> impl Iterator<Item = u32> {
        1..self.q
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Builds the deterministic field `F_q`. Errors unless `q` is a prime power.
pub fn make_field(q: u32) -> Result<Arc<FieldSpec>> {
    static CACHE: LazyLock<Mutex<HashMap<u32, Arc<FieldSpec>>>> =
        LazyLock::new(|| Mutex::new(HashMap::new()));
    if let Some(f) = CACHE.lock().unwrap().get(&q) {
        return Ok(f.clone());
    }
    let (p, e) = prime_power(q).ok_or(GlnqError::NotPrimePower(q as u64))?;
    let modulus = least_irreducible_fp(p, e);
    let mut spec = FieldSpec {
        p,
        e,
        q,
        modulus,
        generator: 0,
        dlog: Vec::new(),
        exp: Vec::new(),
        mul_table: None,
        add_table: None,
    };
    if q <= TABLE_LIMIT {
        let mut mt = vec![0u32; (q * q) as usize];
        let mut at = vec![0u32; (q * q) as usize];
        for a in 0..q {
            for b in 0..q {
                mt[(a * q + b) as usize] = spec.mul_slow(a, b);
                at[(a * q + b) as usize] = spec.add_slow(a, b);
            }
        }
        spec.mul_table = Some(mt);
        spec.add_table = Some(at);
    }
    // least element of full multiplicative order
    let mut generator = 0;
    'search: for g in 1..q {
        let mut x = g;
        for k in 1..q {
            if x == 1 {
                if k == q - 1 {
                    generator = g;
                    break 'search;
                }
                continue 'search;
            }
            x = spec.mul(x, g);
        }
    }
    assert!(generator != 0, "no primitive element found");
    spec.generator = generator;
    let mut exp = Vec::with_capacity((q - 1) as usize);
    let mut dlog = vec![0u32; q as usize];
    let mut x = 1u32;
    for i in 0..q - 1 {
        exp.push(x);
        dlog[x as usize] = i;
        x = spec.mul(x, generator);
    }
    spec.exp = exp;
    spec.dlog = dlog;
    let arc = Arc::new(spec);
    CACHE.lock().unwrap().insert(q, arc.clone());
    Ok(arc)
}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 0;
    for d in 2..=q {
        if q % d == 0 {
            p = d;
            break;
        }
    }
    let mut e = 0;
    let mut x = q;
    while x % p == 0 {
        x /= p;
        e += 1;
    }
    if x == 1 {
        Some((p, e))
    } else {
        None
    }
}

/// Lexicographically least monic irreducible of degree `e` over `F_p`,
/// comparing coefficient vectors `(a_0, …, a_{e-1})`.
fn least_irreducible_fp(p: u32, e: u32) -> Vec<u32> {
    if e == 1 {
        return vec![0, 1]; // x itself; F_p[x]/(x) = F_p
    }
    let total = (p as u64).pow(e);
    for code in 0..total {
        let mut coeffs = Vec::with_capacity(e as usize + 1);
        let mut c = code;
        for _ in 0..e {
            coeffs.push((c % p as u64) as u32);
            c /= p as u64;
        }
        coeffs.push(1);
        if fp_poly_irreducible(p, &coeffs) {
            return coeffs;
        }
    }
    unreachable!("an irreducible of every degree exists over F_p")
}

/// Trial-division irreducibility over F_p for a monic polynomial.
fn fp_poly_irreducible(p: u32, f: &[u32]) -> bool {
    let deg = f.len() - 1;
    if deg == 1 {
        return true;
    }
    // divide by every monic polynomial of degree 1..=deg/2
    for d in 1..=deg / 2 {
        let total = (p as u64).pow(d as u32);
        for code in 0..total {
            let mut g = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                g.push((c % p as u64) as u32);
                c /= p as u64;
            }
            g.push(1);
            if fp_poly_rem_is_zero(p, f, &g) {
                return false;
            }
        }
    }
    true
}

fn fp_poly_rem_is_zero(p: u32, f: &[u32], g: &[u32]) -> bool {
    let mut r: Vec<u32> = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let lead = *r.last().unwrap() % p;
        if lead != 0 {
            let shift = r.len() - 1 - dg;
            for (i, &gc) in g.iter().enumerate() {
                let idx = shift + i;
                r[idx] = (r[idx] + p - lead * gc % p) % p;
            }
        }
        r.pop();
        while r.len() > dg && *r.last().unwrap() % p == 0 {
            if r.len() == dg + 1 {
                break;
            }
            r.pop();
        }
    }
    r.iter().all(|&c| c % p == 0)
}

/// A nonzero element of a fixed field, carried with its field.
#[derive(Clone)]
pub struct FqElement {
    pub field: Arc<FieldSpec>,
    pub idx: u32,
}

impl FqElement {
    pub fn new(field: Arc<FieldSpec>, idx: u32) -> Self {
        assert!(idx < field.q());
        FqElement { field, idx }
    }
    pub fn is_zero(&self) -> bool {
        self.idx == 0
    }
    pub fn order(&self) -> Result<u32> {
        self.field.elt_order(self.idx)
    }
}

impl fmt::Debug for FqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#F{}", self.idx, self.field.q())
    }
}

impl fmt::Display for FqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.idx)
    }
}

impl PartialEq for FqElement {
    fn eq(&self, other: &Self) -> bool {
        self.field.q() == other.field.q() && self.idx == other.idx
    }
}
impl Eq for FqElement {}

/// Monic polynomial over `F_q`, coefficients ascending, `coeffs.last() == 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonicPoly {
    pub coeffs: Vec<u32>,
}

impl MonicPoly {
    pub fn new(coeffs: Vec<u32>) -> Self {
        assert!(coeffs.len() >= 2 && *coeffs.last().unwrap() == 1, "monic, degree >= 1");
        MonicPoly { coeffs }
    }

    /// `t - a` for an element index `a`.
    pub fn linear(field: &FieldSpec, a: u32) -> Self {
        MonicPoly {
            coeffs: vec![field.neg(a), 1],
        }
    }

    pub fn degree(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    /// Root of a linear polynomial `t - a`.
    pub fn linear_root(&self, field: &FieldSpec) -> Option<u32> {
        if self.degree() == 1 {
            Some(field.neg(self.coeffs[0]))
        } else {
            None
        }
    }

    pub fn eval(&self, field: &FieldSpec, x: u32) -> u32 {
        let mut acc = 0;
        for &c in self.coeffs.iter().rev() {
            acc = field.add(field.mul(acc, x), c);
        }
        acc
    }
}

impl fmt::Display for MonicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 && i != 0 || (c == 0 && self.coeffs.len() > 1 && i == 0) {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => {
                    if c != 1 {
                        write!(f, "{c}")?;
                    }
                    write!(f, "t")?;
                }
                _ => {
                    if c != 1 {
                        write!(f, "{c}")?;
                    }
                    write!(f, "t^{i}")?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MonicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// ---- polynomial arithmetic over F_q (coefficient vectors, ascending) ----

pub(crate) fn poly_trim(p: &mut Vec<u32>) {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
}

pub(crate) fn poly_deg(p: &[u32]) -> Option<usize> {
    p.iter().rposition(|&c| c != 0)
}

pub(crate) fn poly_mul(f: &FieldSpec, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    poly_trim(&mut out);
    out
}

/// Division with remainder; divisor need not be monic but must be nonzero.
pub(crate) fn poly_divrem(f: &FieldSpec, a: &[u32], b: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let db = poly_deg(b).expect("division by zero polynomial");
    let lead_inv = f.inv(b[db]).unwrap();
    let mut rem: Vec<u32> = a.to_vec();
    poly_trim(&mut rem);
    let mut quo = vec![0u32; rem.len().saturating_sub(db) + 1];
    loop {
        let da = match poly_deg(&rem) {
            Some(d) if d >= db => d,
            _ => break,
        };
        let c = f.mul(rem[da], lead_inv);
        let shift = da - db;
        quo[shift] = c;
        for (j, &bc) in b.iter().enumerate().take(db + 1) {
            rem[shift + j] = f.sub(rem[shift + j], f.mul(c, bc));
        }
    }
    poly_trim(&mut quo);
    poly_trim(&mut rem);
    (quo, rem)
}

pub(crate) fn poly_is_zero(p: &[u32]) -> bool {
    p.iter().all(|&c| c == 0)
}

fn poly_make_monic(f: &FieldSpec, p: &mut [u32]) {
    if let Some(d) = poly_deg(p) {
        let inv = f.inv(p[d]).unwrap();
        for c in p.iter_mut() {
            *c = f.mul(*c, inv);
        }
    }
}

/// All monic irreducibles of degree exactly `d` over `F_q`, in ascending
/// coefficient order. Memoised per `(q, d)`.
pub fn irreducibles(field: &Arc<FieldSpec>, d: u32) -> Arc<Vec<MonicPoly>> {
    static CACHE: LazyLock<Mutex<HashMap<(u32, u32), Arc<Vec<MonicPoly>>>>> =
        LazyLock::new(|| Mutex::new(HashMap::new()));
    let key = (field.q(), d);
    if let Some(v) = CACHE.lock().unwrap().get(&key) {
        return v.clone();
    }
    let q = field.q() as u64;
    let mut out = Vec::new();
    if d == 1 {
        for a in 0..field.q() {
            out.push(MonicPoly {
                coeffs: vec![a, 1],
            });
        }
    } else {
        let lower: Vec<Arc<Vec<MonicPoly>>> =
            (1..=d / 2).map(|k| irreducibles(field, k)).collect();
        let total = q.pow(d);
        'cand: for code in 0..total {
            let mut coeffs = Vec::with_capacity(d as usize + 1);
            let mut c = code;
            for _ in 0..d {
                coeffs.push((c % q) as u32);
                c /= q;
            }
            coeffs.push(1);
            for set in &lower {
                for g in set.iter() {
                    let (_, r) = poly_divrem(field, &coeffs, &g.coeffs);
                    if poly_is_zero(&r) {
                        continue 'cand;
                    }
                }
            }
            out.push(MonicPoly { coeffs });
        }
    }
    let arc = Arc::new(out);
    CACHE.lock().unwrap().insert(key, arc.clone());
    arc
}

/// Exact matrix over `F_q`, entries stored as element indices row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct FqMatrix {
    pub field: Arc<FieldSpec>,
    pub n: usize,
    pub data: Vec<u32>,
}

impl fmt::Debug for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FqMatrix {}x{} over F{}:", self.n, self.n, self.field.q())?;
        for i in 0..self.n {
            writeln!(f, "  {:?}", &self.data[i * self.n..(i + 1) * self.n])?;
        }
        Ok(())
    }
}

impl FqMatrix {
    pub fn zero(field: Arc<FieldSpec>, n: usize) -> Self {
        FqMatrix {
            field,
            n,
            data: vec![0; n * n],
        }
    }

    pub fn identity(field: Arc<FieldSpec>, n: usize) -> Self {
        let mut m = Self::zero(field, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn scalar_matrix(field: Arc<FieldSpec>, n: usize, s: u32) -> Self {
        let mut m = Self::zero(field, n);
        for i in 0..n {
            m.data[i * n + i] = s;
        }
        m
    }

    pub fn diagonal(field: Arc<FieldSpec>, entries: &[u32]) -> Self {
        let n = entries.len();
        let mut m = Self::zero(field, n);
        for i in 0..n {
            m.data[i * n + i] = entries[i];
        }
        m
    }

    pub fn from_rows(field: Arc<FieldSpec>, rows: &[Vec<u32>]) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for r in rows {
            assert_eq!(r.len(), n);
            data.extend_from_slice(r);
        }
        FqMatrix { field, n, data }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.n + j] = v;
    }

    pub fn mul(&self, other: &FqMatrix) -> FqMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let f = &self.field;
        let mut out = FqMatrix::zero(self.field.clone(), n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b != 0 {
                        let cur = out.get(i, j);
                        out.set(i, j, f.add(cur, f.mul(a, b)));
                    }
                }
            }
        }
        out
    }

    pub fn det(&self) -> u32 {
        let n = self.n;
        let f = self.field.clone();
        let mut m = self.data.clone();
        let mut det = 1u32;
        for col in 0..n {
            let pivot = (col..n).find(|&r| m[r * n + col] != 0);
            let pivot = match pivot {
                Some(p) => p,
                None => return 0,
            };
            if pivot != col {
                for j in 0..n {
                    m.swap(pivot * n + j, col * n + j);
                }
                det = f.neg(det);
            }
            let pv = m[col * n + col];
            det = f.mul(det, pv);
            let pv_inv = f.inv(pv).unwrap();
            for r in col + 1..n {
                let factor = f.mul(m[r * n + col], pv_inv);
                if factor == 0 {
                    continue;
                }
                for j in col..n {
                    let s = f.mul(factor, m[col * n + j]);
                    m[r * n + j] = f.sub(m[r * n + j], s);
                }
            }
        }
        det
    }

    pub fn inv(&self) -> Result<FqMatrix> {
        let n = self.n;
        let f = self.field.clone();
        let mut m = self.data.clone();
        let mut inv = FqMatrix::identity(f.clone(), n).data;
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| m[r * n + col] != 0)
                .ok_or(GlnqError::SingularMatrix)?;
            if pivot != col {
                for j in 0..n {
                    m.swap(pivot * n + j, col * n + j);
                    inv.swap(pivot * n + j, col * n + j);
                }
            }
            let pv_inv = f.inv(m[col * n + col])?;
            for j in 0..n {
                m[col * n + j] = f.mul(m[col * n + j], pv_inv);
                inv[col * n + j] = f.mul(inv[col * n + j], pv_inv);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = m[r * n + col];
                if factor == 0 {
                    continue;
                }
                for j in 0..n {
                    let s = f.mul(factor, m[col * n + j]);
                    m[r * n + j] = f.sub(m[r * n + j], s);
                    let s = f.mul(factor, inv[col * n + j]);
                    inv[r * n + j] = f.sub(inv[r * n + j], s);
                }
            }
        }
        Ok(FqMatrix {
            field: f,
            n,
            data: inv,
        })
    }

    /// `xyx⁻¹y⁻¹`.
    pub fn commutator(x: &FqMatrix, y: &FqMatrix) -> Result<FqMatrix> {
        let xi = x.inv()?;
        let yi = y.inv()?;
        Ok(x.mul(y).mul(&xi).mul(&yi))
    }

    /// Packs entries into a `u128` key; requires `n² ≤ 16` and `q ≤ 256`.
    pub fn pack(&self) -> u128 {
        debug_assert!(self.n * self.n <= 16 && self.field.q() <= 256);
        let mut key = 0u128;
        for &v in self.data.iter().rev() {
            key = (key << 8) | v as u128;
        }
        key
    }

    pub fn unpack(field: Arc<FieldSpec>, n: usize, mut key: u128) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for _ in 0..n * n {
            data.push((key & 0xff) as u32);
            key >>= 8;
        }
        FqMatrix { field, n, data }
    }

    /// Companion matrix of a monic polynomial of degree `d`.
    pub fn companion(field: Arc<FieldSpec>, poly: &MonicPoly) -> Self {
        let d = poly.degree() as usize;
        let mut m = Self::zero(field.clone(), d);
        for i in 1..d {
            m.set(i, i - 1, 1);
        }
        for i in 0..d {
            m.set(i, d - 1, field.neg(poly.coeffs[i]));
        }
        m
    }

    /// Block-diagonal assembly.
    pub fn block_diagonal(field: Arc<FieldSpec>, blocks: &[FqMatrix]) -> Self {
        let n: usize = blocks.iter().map(|b| b.n).sum();
        let mut m = Self::zero(field, n);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.n {
                for j in 0..b.n {
                    m.set(off + i, off + j, b.get(i, j));
                }
            }
            off += b.n;
        }
        m
    }

    /// Invariant factors `f_1 | f_2 | … | f_k` of `tI - A` (degrees ≥ 1),
    /// monic, via Smith reduction of the polynomial matrix. Their product
    /// is the characteristic polynomial; they determine the conjugacy
    /// class of `A` completely.
    pub fn rcf(&self) -> Vec<MonicPoly> {
        let n = self.n;
        let f = &self.field;
        // entries of tI - A as ascending coefficient vectors
        let mut m: Vec<Vec<u32>> = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let a = self.get(i, j);
                if i == j {
                    m.push(vec![f.neg(a), 1]);
                } else {
                    m.push(vec![f.neg(a)]);
                }
            }
        }
        let deg = |p: &Vec<u32>| poly_deg(p).map(|d| d as i64).unwrap_or(-1);
        let mut factors = Vec::new();
        let mut size = n;
        let mut mat = m;
        while size > 0 {
            // find the nonzero entry of minimal degree
            let mut best: Option<(usize, usize)> = None;
            for i in 0..size {
                for j in 0..size {
                    if deg(&mat[i * size + j]) >= 0 {
                        match best {
                            None => best = Some((i, j)),
                            Some((bi, bj)) => {
                                if deg(&mat[i * size + j]) < deg(&mat[bi * size + bj]) {
                                    best = Some((i, j));
                                }
                            }
                        }
                    }
                }
            }
            let (pi, pj) = match best {
                Some(b) => b,
                None => break, // all-zero block (cannot happen for tI - A)
            };
            // move pivot to (0, 0)
            if pi != 0 {
                for j in 0..size {
                    mat.swap(j, pi * size + j);
                }
            }
            if pj != 0 {
                for i in 0..size {
                    mat.swap(i * size, i * size + pj);
                }
            }
            loop {
                let mut clean = true;
                // clear first column
                for i in 1..size {
                    if deg(&mat[i * size]) >= 0 {
                        let (q, _) = poly_divrem(f, &mat[i * size], &mat[0]);
                        if !poly_is_zero(&q) {
                            for j in 0..size {
                                let s = poly_mul(f, &q, &mat[j]);
                                mat[i * size + j] = poly_sub(f, &mat[i * size + j], &s);
                            }
                        }
                        if !poly_is_zero(&mat[i * size]) {
                            // remainder has smaller degree: swap rows and restart
                            for j in 0..size {
                                mat.swap(j, i * size + j);
                            }
                            clean = false;
                        }
                    }
                }
                if !clean {
                    continue;
                }
                // clear first row
                for j in 1..size {
                    if deg(&mat[j]) >= 0 {
                        let (q, _) = poly_divrem(f, &mat[j], &mat[0]);
                        if !poly_is_zero(&q) {
                            for i in 0..size {
                                let s = poly_mul(f, &q, &mat[i * size]);
                                mat[i * size + j] = poly_sub(f, &mat[i * size + j], &s);
                            }
                        }
                        if !poly_is_zero(&mat[j]) {
                            for i in 0..size {
                                mat.swap(i * size, i * size + j);
                            }
                            clean = false;
                            break;
                        }
                    }
                }
                if !clean {
                    continue;
                }
                // ensure pivot divides the rest; if not, fold that row in
                let mut fixed = true;
                'scan: for i in 1..size {
                    for j in 1..size {
                        let (_, r) = poly_divrem(f, &mat[i * size + j], &mat[0]);
                        if !poly_is_zero(&r) {
                            for j2 in 0..size {
                                let s = mat[i * size + j2].clone();
                                mat[j2] = poly_add(f, &mat[j2], &s);
                            }
                            fixed = false;
                            break 'scan;
                        }
                    }
                }
                if fixed {
                    break;
                }
            }
            let mut pivot = mat[0].clone();
            poly_make_monic(f, &mut pivot);
            poly_trim(&mut pivot);
            if pivot.len() >= 2 {
                factors.push(MonicPoly { coeffs: pivot });
            }
            // shrink to the trailing (size-1) x (size-1) block
            let mut next = Vec::with_capacity((size - 1) * (size - 1));
            for i in 1..size {
                for j in 1..size {
                    next.push(mat[i * size + j].clone());
                }
            }
            mat = next;
            size -= 1;
        }
        factors
    }
}

fn poly_add(f: &FieldSpec, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = vec![0u32; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = f.add(x, y);
    }
    poly_trim(&mut out);
    out
}

fn poly_sub(f: &FieldSpec, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = vec![0u32; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = f.sub(x, y);
    }
    poly_trim(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_fields() {
        let f4 = make_field(4).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]); // x^2 + x + 1
        let f3 = make_field(3).unwrap();
        assert_eq!(f3.generator(), 2);
        let f5 = make_field(5).unwrap();
        assert_eq!(f5.generator(), 2);
        assert!(make_field(6).is_err());
        assert!(make_field(12).is_err());
    }

    #[test]
    fn field_axioms_small() {
        for q in [2u32, 3, 4, 5, 8, 9, 25] {
            let f = make_field(q).unwrap();
            for a in 0..q {
                for b in 0..q {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.add(a, b), f.add(b, a));
                    if a != 0 {
                        let inv = f.inv(a).unwrap();
                        assert_eq!(f.mul(a, inv), 1);
                    }
                }
            }
            // Frobenius x -> x^p is additive and fixes exactly F_p
            let p = f.p();
            let mut fixed = 0;
            for a in 0..q {
                let fa = f.pow(a, p as u64);
                for b in 0..q {
                    let fb = f.pow(b, p as u64);
                    assert_eq!(f.pow(f.add(a, b), p as u64), f.add(fa, fb));
                }
                if fa == a {
                    fixed += 1;
                }
            }
            assert_eq!(fixed, p, "Frobenius fixed field of F_{q}");
        }
    }

    #[test]
    fn irreducible_enumeration() {
        let f2 = make_field(2).unwrap();
        let deg1 = irreducibles(&f2, 1);
        assert_eq!(deg1.len(), 2); // x, x+1
        let deg2 = irreducibles(&f2, 2);
        assert_eq!(deg2.len(), 1);
        assert_eq!(deg2[0].coeffs, vec![1, 1, 1]);
        // necklace count (1/d) Σ_{r|d} μ(d/r) q^r at (q, d) = (3, 2) is 3
        let f3 = make_field(3).unwrap();
        assert_eq!(irreducibles(&f3, 2).len(), 3);
        // and degree 3 over F_2: (8 - 2)/3 = 2
        assert_eq!(irreducibles(&f2, 3).len(), 2);
    }

    #[test]
    fn rcf_basics() {
        let f3 = make_field(3).unwrap();
        let id = FqMatrix::identity(f3.clone(), 2);
        let factors = id.rcf();
        assert_eq!(factors.len(), 2);
        for fac in &factors {
            assert_eq!(fac.coeffs, vec![2, 1]); // t - 1 = t + 2 over F_3
        }

        let f2 = make_field(2).unwrap();
        let poly = MonicPoly::new(vec![1, 1, 1]);
        let comp = FqMatrix::companion(f2, &poly);
        let factors = comp.rcf();
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0], poly);

        // Jordan block at 1 over F_3 has single invariant factor (t-1)^2
        let jordan = FqMatrix::from_rows(f3.clone(), &[vec![1, 1], vec![0, 1]]);
        let factors = jordan.rcf();
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0].coeffs, vec![1, 1, 1]); // (t-1)^2 = t^2+t+1 mod 3? t^2-2t+1 = t^2+t+1
    }

    #[test]
    fn rcf_conjugation_invariant() {
        let f3 = make_field(3).unwrap();
        // pseudo-random invertible conjugators and targets
        let mats = [
            FqMatrix::from_rows(f3.clone(), &[vec![1, 2, 0], vec![0, 1, 1], vec![2, 0, 1]]),
            FqMatrix::from_rows(f3.clone(), &[vec![2, 1, 1], vec![1, 0, 2], vec![0, 1, 0]]),
        ];
        let conj = FqMatrix::from_rows(f3.clone(), &[vec![1, 1, 0], vec![0, 1, 0], vec![1, 0, 1]]);
        assert_ne!(conj.det(), 0);
        for a in &mats {
            let b = conj.mul(a).mul(&conj.inv().unwrap());
            assert_eq!(a.rcf(), b.rcf());
        }
    }

    #[test]
    fn rcf_separates_classes_exhaustively() {
        // A ~ B iff rcf(A) = rcf(B), checked in GL_2(F_2) by brute conjugation
        let f2 = make_field(2).unwrap();
        let mut invertible = Vec::new();
        for code in 0..16u32 {
            let m = FqMatrix::from_rows(
                f2.clone(),
                &[vec![code & 1, (code >> 1) & 1], vec![(code >> 2) & 1, (code >> 3) & 1]],
            );
            if m.det() != 0 {
                invertible.push(m);
            }
        }
        assert_eq!(invertible.len(), 6);
        for a in &invertible {
            for b in &invertible {
                let conjugate = invertible
                    .iter()
                    .any(|g| g.mul(a).mul(&g.inv().unwrap()) == *b);
                assert_eq!(conjugate, a.rcf() == b.rcf());
            }
        }
    }

    #[test]
    fn rcf_product_is_charpoly() {
        // product of invariant factors has degree n and the right determinant
        let f5 = make_field(5).unwrap();
        let m = FqMatrix::from_rows(f5.clone(), &[vec![1, 2, 3], vec![0, 4, 1], vec![2, 2, 1]]);
        let factors = m.rcf();
        let total: u32 = factors.iter().map(|f| f.degree()).sum();
        assert_eq!(total, 3);
        // char poly constant term = (-1)^n det
        let mut c0 = 1u32;
        for fac in &factors {
            c0 = f5.mul(c0, fac.coeffs[0]);
        }
        let expect = f5.mul(f5.neg(1), m.det()); // (-1)^3 det
        let expect = if 3 % 2 == 1 { expect } else { m.det() };
        assert_eq!(c0, expect);
    }

    #[test]
    fn commutator_identities() {
        let f5 = make_field(5).unwrap();
        let x = FqMatrix::from_rows(f5.clone(), &[vec![1, 2], vec![3, 4]]);
        let y = FqMatrix::from_rows(f5.clone(), &[vec![2, 1], vec![1, 1]]);
        assert_ne!(x.det(), 0);
        assert_ne!(y.det(), 0);
        let id = FqMatrix::identity(f5.clone(), 2);
        assert_eq!(FqMatrix::commutator(&x, &x).unwrap(), id);
        // [x,y] = [y,x]^{-1}
        let c1 = FqMatrix::commutator(&x, &y).unwrap();
        let c2 = FqMatrix::commutator(&y, &x).unwrap();
        assert_eq!(c1.mul(&c2), id);
        assert_eq!(c1.det(), 1);
    }
}
