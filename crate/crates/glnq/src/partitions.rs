//! Integer partitions in descending-parts form.
//!
//! Partitions index both the characters of the symmetric group and the
//! unipotent structure of conjugacy classes, so everything downstream
//! leans on this module. Enumeration is reverse-lexicographic
//! (`{n}` first, `{1^n}` last) to keep every "sum over partitions" loop
//! deterministic.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, One, Zero};

use crate::{GlnqError, Int, Rat, Result};

/// An integer partition, stored as a descending list of positive parts.
///
/// The empty list is the unique partition of 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts in any order; zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "partition parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `|λ|`, the sum of all parts.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts `N_λ`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity view: part size → count.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// `z_ρ = ∏_k k^{r_k} r_k!`, the centralizer order in `S_n` of a
    /// permutation of cycle type `ρ`.
    pub fn z(&self) -> Int {
        let mut z = Int::one();
        for (&k, &r) in &self.multiplicities() {
            z *= Int::from(k).pow(r);
            for j in 1..=r {
                z *= Int::from(j);
            }
        }
        z
    }

    /// `β_ρ(q) = ∏_{k∈ρ} 1/(1 - q^k)`, exact.
    ///
    /// Errors when some `1 - q^k` vanishes.
    pub fn beta(&self, q: &Rat) -> Result<Rat> {
        let mut denom = Rat::one();
        for &k in &self.parts {
            let f = Rat::one() - pow_rat(q, k);
            if f.is_zero() {
                return Err(GlnqError::Pole(format!("1 - q^{k} at q = {q}")));
            }
            denom *= f;
        }
        Ok(Rat::one() / denom)
    }

    /// `n_λ = λ_2 + 2λ_3 + ⋯ + (l-1)λ_l` over descending parts.
    pub fn n_weight(&self) -> u64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u64 * p as u64)
            .sum()
    }

    /// `s·ρ`: every part multiplied by `s ≥ 1`.
    pub fn scale(&self, s: u32) -> Self {
        assert!(s >= 1);
        Partition {
            parts: self.parts.iter().map(|&p| p * s).collect(),
        }
    }

    /// Concatenation of part multisets.
    pub fn union(&self, other: &Partition) -> Self {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// All partitions of `n` in reverse-lexicographic order:
/// `{n}` first, then `{n-1,1}`, …, ending with `{1^n}`.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    descend(n, n, &mut stack, &mut out);
    out
}

fn descend(remaining: u32, max_part: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: stack.clone(),
        });
        return;
    }
    let top = remaining.min(max_part);
    for part in (1..=top).rev() {
        stack.push(part);
        descend(remaining - part, part, stack, out);
        stack.pop();
    }
}

/// The partition number `p(m)`, by the pentagonal-number recurrence.
pub fn partition_number(m: u32) -> Int {
    let m = m as usize;
    let mut table = vec![BigInt::zero(); m + 1];
    table[0] = BigInt::one();
    for i in 1..=m {
        let mut acc = BigInt::zero();
        let mut k: i64 = 1;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > i {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += sign * &table[i - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= i {
                acc += sign * &table[i - g2];
            }
            k += 1;
        }
        table[i] = acc;
    }
    table[m].clone()
}

/// `q^k` for a rational base.
pub(crate) fn pow_rat(q: &Rat, k: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..k {
        acc *= q;
    }
    acc
}

/// Rational from an integer literal, used all over the tests.
#[cfg(test)]
pub(crate) fn rat(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(1), vec![p(&[1])]);
        let four = enumerate_partitions(4);
        assert_eq!(four.len(), 5);
        // reverse-lexicographic order
        assert_eq!(
            four,
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
    }

    #[test]
    fn z_values() {
        assert_eq!(p(&[1, 1]).z(), Int::from(2));
        assert_eq!(p(&[2, 1]).z(), Int::from(2));
        assert_eq!(p(&[3]).z(), Int::from(3));
        assert_eq!(p(&[1, 1, 1]).z(), Int::from(6));
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        // Σ_{|ρ|=n} n!/z_ρ = n!  (class equation of S_n), n ≤ 8
        for n in 1..=8u32 {
            let fact: Int = (1..=n).map(Int::from).product();
            let total: Rat = enumerate_partitions(n)
                .iter()
                .map(|rho| Rat::from(fact.clone()) / Rat::from(rho.z()))
                .sum();
            assert_eq!(total, Rat::from(fact), "n = {n}");
        }
    }

    #[test]
    fn beta_values() {
        assert_eq!(p(&[1]).beta(&rat(2)).unwrap(), rat(-1));
        assert_eq!(p(&[1, 1]).beta(&rat(2)).unwrap(), rat(1));
        // multiplicative over union
        let q = rat(3);
        let lhs = p(&[1]).beta(&q).unwrap() * p(&[2]).beta(&q).unwrap();
        assert_eq!(lhs, p(&[2, 1]).beta(&q).unwrap());
        assert!(p(&[2]).beta(&rat(1)).is_err());
        assert!(p(&[2]).beta(&rat(-1)).is_err());
    }

    #[test]
    fn beta_multiplicative_sweep() {
        for q in [2i64, 3, 5] {
            let q = rat(q);
            for a in 0..=5u32 {
                for b in 0..=5u32 {
                    for nu in enumerate_partitions(a) {
                        for mu in enumerate_partitions(b) {
                            let joint = nu.union(&mu).beta(&q).unwrap();
                            let split = nu.beta(&q).unwrap() * mu.beta(&q).unwrap();
                            assert_eq!(joint, split);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn n_weight_values() {
        assert_eq!(p(&[5]).n_weight(), 0);
        assert_eq!(p(&[1, 1, 1, 1]).n_weight(), 6); // l(l-1)/2 with l = 4
        assert_eq!(p(&[2, 1]).n_weight(), 1);
    }

    #[test]
    fn scale_and_union() {
        assert_eq!(p(&[1, 1]).scale(2), p(&[2, 2]));
        assert_eq!(p(&[1]).union(&p(&[2])), p(&[2, 1]));
        let nu = p(&[2, 1]);
        let mu = p(&[3]);
        assert_eq!(nu.union(&mu).weight(), nu.weight() + mu.weight());
    }

    #[test]
    fn partition_numbers() {
        assert_eq!(partition_number(0), Int::from(1));
        assert_eq!(partition_number(2), Int::from(2));
        assert_eq!(partition_number(5), Int::from(7));
        assert_eq!(
            partition_number(5),
            Int::from(enumerate_partitions(5).len() as u64)
        );
        // enumeration length matches p(n) up to n = 30
        for n in 0..=30u32 {
            assert_eq!(
                partition_number(n),
                Int::from(enumerate_partitions(n).len() as u64),
                "n = {n}"
            );
        }
    }
}
