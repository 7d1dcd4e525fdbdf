//! Canonical exact arithmetic in cyclotomic fields `Q(ζ_M)`.
//!
//! Values are polynomials in `ζ_M` reduced modulo the M-th cyclotomic
//! polynomial `Φ_M`, so equality is a coefficient comparison (after
//! lifting to a common conductor). Conductors stay small here — at most
//! `q - 1` for character values and `n` for the geometry witnesses — so
//! dense reduction is cheap.
//!
//! All character values `θ^κ(ξ)` needed by the formula path live at
//! conductor `q - 1`: the global splitting-field embedding is never
//! constructed, because every evaluation point is reduced to the base
//! field first.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, LazyLock, Mutex};

use num::{BigInt, One, Signed, Zero};

use crate::field::{FieldSpec, FqElement};
use crate::{GlnqError, Rat, Result};

/// Euler's totient.
pub fn euler_phi(m: u32) -> u32 {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// The M-th cyclotomic polynomial, ascending integer coefficients,
/// computed by dividing `x^M - 1` by all `Φ_d`, `d | M`, `d < M`.
pub fn cyclotomic_polynomial(m: u32) -> Arc<Vec<BigInt>> {
    static CACHE: LazyLock<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> =
        LazyLock::new(|| Mutex::new(HashMap::new()));
    if let Some(p) = CACHE.lock().unwrap().get(&m) {
        return p.clone();
    }
    let poly = if m == 1 {
        vec![BigInt::from(-1), BigInt::from(1)]
    } else {
        let mut num = vec![BigInt::zero(); m as usize + 1];
        num[0] = BigInt::from(-1);
        num[m as usize] = BigInt::one();
        let mut rem = num;
        for d in 1..m {
            if m % d == 0 {
                let phi_d = cyclotomic_polynomial(d);
                rem = int_poly_exact_div(&rem, &phi_d);
            }
        }
        rem
    };
    let arc = Arc::new(poly);
    CACHE.lock().unwrap().insert(m, arc.clone());
    arc
}

fn int_poly_exact_div(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let mut rem: Vec<BigInt> = a.to_vec();
    let da = rem.len() - 1;
    let mut quo = vec![BigInt::zero(); da - db + 1];
    for shift in (0..=da - db).rev() {
        let c = rem[shift + db].clone();
        if !c.is_zero() {
            quo[shift] = c.clone();
            for (j, bc) in b.iter().enumerate() {
                rem[shift + j] -= &c * bc;
            }
        }
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()), "non-exact division");
    quo
}

/// An element of `Q(ζ_M)` in canonical reduced form.
#[derive(Clone)]
pub struct CycValue {
    conductor: u32,
    /// Coefficients of `1, ζ, …, ζ^{φ(M)-1}` (length `φ(M)`).
    coeffs: Vec<Rat>,
}

impl CycValue {
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn zero() -> Self {
        CycValue {
            conductor: 1,
            coeffs: vec![Rat::zero()],
        }
    }

    pub fn one() -> Self {
        Self::from_rat(Rat::one())
    }

    pub fn from_rat(r: Rat) -> Self {
        CycValue {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(Rat::from(BigInt::from(n)))
    }

    /// `ζ_M^e` as a canonical value (exponent taken mod M).
    pub fn root_of_unity(m: u32, e: i64) -> Self {
        assert!(m >= 1);
        let e = e.rem_euclid(m as i64) as usize;
        let mut poly = vec![Rat::zero(); e + 1];
        poly[e] = Rat::one();
        Self::reduce(m, poly)
    }

    fn reduce(m: u32, mut poly: Vec<Rat>) -> Self {
        let phi = cyclotomic_polynomial(m);
        let deg = phi.len() - 1;
        // divide by the monic integer polynomial Φ_M, keep the remainder
        while poly.len() > deg {
            let k = poly.len() - 1;
            let c = poly[k].clone();
            if !c.is_zero() {
                for (j, pc) in phi.iter().enumerate().take(deg) {
                    poly[k - deg + j] -= &c * Rat::from(pc.clone());
                }
            }
            poly.pop();
        }
        poly.resize(deg, Rat::zero());
        CycValue {
            conductor: m,
            coeffs: poly,
        }
    }

    /// Rewrites the value at a conductor `target` with `M | target`.
    pub fn lift(&self, target: u32) -> Self {
        if target == self.conductor {
            return self.clone();
        }
        assert_eq!(target % self.conductor, 0, "conductor lift must be a multiple");
        let k = (target / self.conductor) as usize;
        let mut poly = vec![Rat::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[i * k] = c.clone();
        }
        Self::reduce(target, poly)
    }

    fn lcm_pair(&self, other: &Self) -> (Self, Self, u32) {
        let m = num::integer::lcm(self.conductor, other.conductor);
        (self.lift(m), other.lift(m), m)
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b, m) = self.lcm_pair(other);
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| x + y)
            .collect();
        CycValue {
            conductor: m,
            coeffs,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        CycValue {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b, m) = self.lcm_pair(other);
        let mut poly = vec![Rat::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    poly[i + j] += x * y;
                }
            }
        }
        Self::reduce(m, poly)
    }

    pub fn scalar_mul(&self, r: &Rat) -> Self {
        CycValue {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// True when the reduced support is contained in the constant term.
    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(|c| c.is_zero())
    }

    pub fn to_rational(&self) -> Result<Rat> {
        if self.is_rational() {
            Ok(self.coeffs[0].clone())
        } else {
            Err(GlnqError::NotRational(format!("{self}")))
        }
    }

    /// Sparse `{exponent: coefficient}` view for reports.
    pub fn to_report_json(&self) -> serde_json::Value {
        let mut coeffs = BTreeMap::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs.insert(i.to_string(), c.to_string());
            }
        }
        serde_json::json!({ "conductor": self.conductor, "coeffs": coeffs })
    }
}

impl PartialEq for CycValue {
    fn eq(&self, other: &Self) -> bool {
        let (a, b, _) = self.lcm_pair(other);
        a.coeffs == b.coeffs
    }
}
impl Eq for CycValue {}

impl fmt::Debug for CycValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            if i == 0 {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}·")?;
                }
                write!(f, "z{}^{}", self.conductor, i)?;
            }
        }
        Ok(())
    }
}

/// `θ^κ(ξ) = ζ_{q-1}^{κ·dlog(ξ)}` for `ξ ∈ F_q^×`, the fixed embedding of
/// the multiplicative group into `C^×`. Errors on `ξ = 0`.
pub fn theta(kappa: i128, xi: &FqElement) -> Result<CycValue> {
    theta_idx(&xi.field, kappa, xi.idx)
}

/// Index-level variant of [`theta`], used in hot loops.
pub fn theta_idx(field: &FieldSpec, kappa: i128, xi: u32) -> Result<CycValue> {
    let m = field.q() - 1;
    if m == 0 {
        return Err(GlnqError::Invalid("F_1 has no units".into()));
    }
    let d = field.dlog(xi)? as i128;
    if m == 1 {
        return Ok(CycValue::one());
    }
    let e = (kappa.rem_euclid(m as i128) * d).rem_euclid(m as i128) as i64;
    Ok(CycValue::root_of_unity(m, e))
}
