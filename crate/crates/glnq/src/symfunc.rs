//! Symmetric-group characters and Schur functions.
//!
//! `χ^λ_ρ` is computed by the Murnaghan–Nakayama rule (memoised,
//! beta-set formulation). The Schur function `{λ:q}` — the Schur
//! function evaluated at `1, q, q², …` — is available through two
//! independent routes that must agree: Littlewood's hook-style closed
//! form and the power-sum expansion `Σ_ρ χ^λ_ρ β_ρ(q)/z_ρ`.
//!
//! The module also carries the slow reference machinery the test suite
//! leans on: immanants by direct enumeration of `S_n`, and a
//! brute-force `χ^λ_ρ` from the classical Frobenius coefficient formula
//! (coefficient of `x^{λ+δ}` in `p_ρ·Vandermonde`), which shares no
//! code with the Murnaghan–Nakayama path.

use std::collections::HashMap;
use std::sync::{LazyLock, Mutex};

use itertools::Itertools;
use num::{One, Zero};

use crate::partitions::{enumerate_partitions, pow_rat, Partition};
use crate::{GlnqError, Int, Rat, Result};

/// `χ^λ_ρ`, the irreducible character of `S_n` indexed by `λ` evaluated
/// on permutations of cycle type `ρ`. Errors when `|λ| ≠ |ρ|`.
pub fn sn_character(lambda: &Partition, rho: &Partition) -> Result<i64> {
    if lambda.weight() != rho.weight() {
        return Err(GlnqError::SizeMismatch(format!(
            "|λ| = {} but |ρ| = {}",
            lambda.weight(),
            rho.weight()
        )));
    }
    static MEMO: LazyLock<Mutex<HashMap<(Vec<u32>, Vec<u32>), i64>>> =
        LazyLock::new(|| Mutex::new(HashMap::new()));
    Ok(mn_recurse(
        lambda.parts().to_vec(),
        rho.parts().to_vec(),
        &MEMO,
    ))
}

fn mn_recurse(
    lambda: Vec<u32>,
    rho: Vec<u32>,
    memo: &Mutex<HashMap<(Vec<u32>, Vec<u32>), i64>>,
) -> i64 {
    if rho.is_empty() {
        return 1; // both partitions empty
    }
    let key = (lambda.clone(), rho.clone());
    if let Some(&v) = memo.lock().unwrap().get(&key) {
        return v;
    }
    // beta-set B = {λ_i + (l - i)}; removing a k-strip moves some b to b-k
    let k = rho[0];
    let rest: Vec<u32> = rho[1..].to_vec();
    let l = lambda.len();
    let beta: Vec<i64> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i64 + (l - 1 - i) as i64)
        .collect();
    let mut total = 0i64;
    for pos in 0..beta.len() {
        let b = beta[pos];
        let target = b - k as i64;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let height = beta.iter().filter(|&&x| target < x && x < b).count();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        let mut moved = beta.clone();
        moved[pos] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let m = moved.len();
        let parts: Vec<u32> = moved
            .iter()
            .enumerate()
            .map(|(i, &x)| (x - (m - 1 - i) as i64) as u32)
            .filter(|&p| p > 0)
            .collect();
        total += sign * mn_recurse(parts, rest.clone(), memo);
    }
    memo.lock().unwrap().insert(key, total);
    total
}

/// Cycle type of a permutation given in one-line form.
pub fn cycle_type(perm: &[usize]) -> Partition {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut parts = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        parts.push(len);
    }
    Partition::new(parts)
}

/// The full character table of `S_n`: `values[(λ, ρ)] = χ^λ_ρ`.
pub struct CharTableSn {
    pub n: u32,
    pub values: HashMap<(Partition, Partition), i64>,
}

impl CharTableSn {
    pub fn new(n: u32) -> Self {
        let parts = enumerate_partitions(n);
        let mut values = HashMap::new();
        for lam in &parts {
            for rho in &parts {
                values.insert((lam.clone(), rho.clone()), sn_character(lam, rho).unwrap());
            }
        }
        CharTableSn { n, values }
    }

    pub fn get(&self, lambda: &Partition, rho: &Partition) -> i64 {
        self.values[&(lambda.clone(), rho.clone())]
    }
}

/// Immanant `|A|^{(λ)} = Σ_{σ∈S_n} χ^λ_σ ∏_i a_{i,σ(i)}` by direct
/// enumeration of `S_n` (reference use; keep `n ≤ 8`).
pub fn immanant(a: &[Vec<Rat>], lambda: &Partition) -> Result<Rat> {
    let n = a.len();
    if lambda.weight() as usize != n || a.iter().any(|row| row.len() != n) {
        return Err(GlnqError::SizeMismatch(format!(
            "matrix is {n}x{n} but |λ| = {}",
            lambda.weight()
        )));
    }
    let mut total = Rat::zero();
    for perm in (0..n).permutations(n) {
        let chi = sn_character(lambda, &cycle_type(&perm))?;
        if chi == 0 {
            continue;
        }
        let mut prod = Rat::one();
        for (i, &j) in perm.iter().enumerate() {
            if a[i][j].is_zero() {
                prod = Rat::zero();
                break;
            }
            prod *= &a[i][j];
        }
        total += Rat::from(Int::from(chi)) * prod;
    }
    Ok(total)
}

/// `φ_k(q) = (1-q)(1-q²)⋯(1-q^k)`, with `φ_0 = 1`.
pub fn phi(k: u32, q: &Rat) -> Rat {
    let mut acc = Rat::one();
    for i in 1..=k {
        acc *= Rat::one() - pow_rat(q, i);
    }
    acc
}

/// `{λ:q}` by Littlewood's closed form
/// `q^{n_λ} ∏_{r<s}(1 - q^{λ_r-λ_s-r+s}) / ∏_r φ_{λ_r+l-r}(q)`.
pub fn schur_q(lambda: &Partition, q: &Rat) -> Result<Rat> {
    let l = lambda.len();
    if l == 0 {
        return Ok(Rat::one());
    }
    let parts = lambda.parts();
    let mut num = Rat::one();
    for _ in 0..lambda.n_weight() {
        num *= q;
    }
    for r in 0..l {
        for s in r + 1..l {
            let e = parts[r] as i64 - parts[s] as i64 - r as i64 + s as i64;
            debug_assert!(e > 0);
            num *= Rat::one() - pow_rat(q, e as u32);
        }
    }
    let mut den = Rat::one();
    for r in 0..l {
        den *= phi(parts[r] + (l - 1 - r) as u32, q);
    }
    if den.is_zero() {
        return Err(GlnqError::Pole(format!("φ factor vanishes at q = {q}")));
    }
    Ok(num / den)
}

/// `{λ:q}` by the power-sum expansion `Σ_{|ρ|=n} χ^λ_ρ β_ρ(q) / z_ρ`.
/// Must agree with [`schur_q`] wherever both are defined.
pub fn schur_q_powersum(lambda: &Partition, q: &Rat) -> Result<Rat> {
    let n = lambda.weight();
    let mut acc = Rat::zero();
    for rho in enumerate_partitions(n) {
        let chi = sn_character(lambda, &rho)?;
        if chi == 0 {
            continue;
        }
        acc += Rat::from(Int::from(chi)) * rho.beta(q)? / Rat::from(rho.z());
    }
    Ok(acc)
}

/// The literal restriction Gram value
/// `⟨Res χ^λ, Res χ^μ⟩` over the Young subgroup `S_{n_1}×⋯×S_{n_l}`:
/// `Σ_{(ρ_1,…,ρ_l)} χ^λ_{∪ρ_i} χ^μ_{∪ρ_i} / ∏ z_{ρ_i}`.
///
/// Computed from the definition, never replaced by an index formula, so
/// it can audit claims made about restricted inner products.
pub fn restriction_gram(lambda: &Partition, mu: &Partition, parts: &[u32]) -> Result<Int> {
    let n: u32 = parts.iter().sum();
    if lambda.weight() != n || mu.weight() != n {
        return Err(GlnqError::SizeMismatch(format!(
            "|λ| = {}, |μ| = {}, Σ n_i = {n}",
            lambda.weight(),
            mu.weight()
        )));
    }
    let mut acc = Rat::zero();
    let mut tuple: Vec<Partition> = Vec::new();
    gram_recurse(lambda, mu, parts, &mut tuple, &mut acc)?;
    if !acc.is_integer() {
        return Err(GlnqError::NotIntegral(format!("Gram value {acc}")));
    }
    Ok(acc.to_integer())
}

fn gram_recurse(
    lambda: &Partition,
    mu: &Partition,
    parts: &[u32],
    tuple: &mut Vec<Partition>,
    acc: &mut Rat,
) -> Result<()> {
    if tuple.len() == parts.len() {
        let mut joint = Partition::empty();
        let mut zprod = Int::one();
        for rho in tuple.iter() {
            joint = joint.union(rho);
            zprod *= rho.z();
        }
        let a = sn_character(lambda, &joint)?;
        let b = sn_character(mu, &joint)?;
        *acc += Rat::from(Int::from(a * b)) / Rat::from(zprod);
        return Ok(());
    }
    for rho in enumerate_partitions(parts[tuple.len()]) {
        tuple.push(rho);
        gram_recurse(lambda, mu, parts, tuple, acc)?;
        tuple.pop();
    }
    Ok(())
}

/// Slow reference implementations, independent of the production paths.
pub mod reference {
    use super::*;

    /// `χ^λ_ρ` by the Frobenius coefficient formula: the coefficient of
    /// `x^{λ+δ}` in `p_ρ(x)·∏_{i<j}(x_i - x_j)`, expanded as a sparse
    /// multivariate polynomial in `|λ|` variables.
    pub fn sn_character_brute(lambda: &Partition, rho: &Partition) -> i64 {
        assert_eq!(lambda.weight(), rho.weight());
        let n = lambda.weight() as usize;
        if n == 0 {
            return 1;
        }
        // Vandermonde Σ_σ sgn(σ) x^{σ(δ)}, δ = (n-1, n-2, …, 0)
        let mut poly: HashMap<Vec<u32>, i64> = HashMap::new();
        for perm in (0..n).permutations(n) {
            let sign = perm_sign(&perm);
            let expt: Vec<u32> = perm.iter().map(|&i| (n - 1 - i) as u32).collect();
            *poly.entry(expt).or_insert(0) += sign;
        }
        // multiply by each power sum p_k = Σ_i x_i^k
        for &k in rho.parts() {
            let mut next: HashMap<Vec<u32>, i64> = HashMap::new();
            for (expt, coef) in &poly {
                for i in 0..n {
                    let mut e = expt.clone();
                    e[i] += k;
                    *next.entry(e).or_insert(0) += coef;
                }
            }
            next.retain(|_, c| *c != 0);
            poly = next;
        }
        let mut target: Vec<u32> = vec![0; n];
        for (i, &p) in lambda.parts().iter().enumerate() {
            target[i] = p;
        }
        for (i, t) in target.iter_mut().enumerate() {
            *t += (n - 1 - i) as u32;
        }
        poly.get(&target).copied().unwrap_or(0)
    }

    fn perm_sign(perm: &[usize]) -> i64 {
        let mut sign = 1i64;
        for i in 0..perm.len() {
            for j in i + 1..perm.len() {
                if perm[i] > perm[j] {
                    sign = -sign;
                }
            }
        }
        sign
    }

    /// The power-sum matrix of Newton's identities on given variables:
    /// `s_k` filling the lower triangle, constants `1, 2, …, n-1` on the
    /// super-diagonal.
    pub fn power_sum_matrix(alphas: &[Rat]) -> Vec<Vec<Rat>> {
        let n = alphas.len();
        let s = |k: u32| -> Rat { alphas.iter().map(|a| pow_rat(a, k)).sum() };
        let mut m = vec![vec![Rat::zero(); n]; n];
        for i in 0..n {
            for j in 0..=i {
                m[i][j] = s((i - j + 1) as u32);
            }
            if i + 1 < n {
                m[i][i + 1] = Rat::from(Int::from((i + 1) as i64));
            }
        }
        m
    }

    /// Elementary symmetric polynomial `e_k`.
    pub fn elementary_symmetric(alphas: &[Rat], k: usize) -> Rat {
        let mut acc = Rat::zero();
        for combo in (0..alphas.len()).combinations(k) {
            let mut prod = Rat::one();
            for i in combo {
                prod *= &alphas[i];
            }
            acc += prod;
        }
        acc
    }
}
