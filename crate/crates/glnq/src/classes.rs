//! The combinatorial indexing layer of Green's character theory:
//! conjugacy-class labels, simplices, dual classes, types, and
//! substitution modes.
//!
//! A conjugacy class of `GL_n(F_q)` is a map from monic irreducible
//! polynomials `f ≠ t` to partitions `ν(f)` with `Σ d(f)·|ν(f)| = n`.
//! Dually, an `s`-simplex is an orbit `{κ, κq, …, κq^{s-1}}` of size
//! exactly `s` under multiplication by `q` on residues mod `q^s - 1`;
//! a dual class attaches partitions to distinct simplices and indexes an
//! irreducible character. Dual classes sharing partition data and
//! simplex degrees form a type; characters of one type share their
//! degree and their substitution combinatorics.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::cyclotomic::{theta_idx, CycValue};
use crate::field::{irreducibles, FieldSpec, FqElement, FqMatrix, MonicPoly};
use crate::partitions::{enumerate_partitions, Partition};
use crate::{GlnqError, Result};

/// Conjugacy-class label `c = (⋯ f^{ν(f)} ⋯)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ConjClassLabel {
    /// Irreducible-polynomial → partition assignments, sorted by key.
    pub assignments: BTreeMap<MonicPoly, Partition>,
}

impl ConjClassLabel {
    pub fn new(assignments: BTreeMap<MonicPoly, Partition>) -> Self {
        ConjClassLabel { assignments }
    }

    /// Total degree `Σ d(f)·|ν(f)|`.
    pub fn degree(&self) -> u32 {
        self.assignments
            .iter()
            .map(|(f, nu)| f.degree() * nu.weight())
            .sum()
    }

    /// True when every `d(f) = 1` and every `ν(f) = {1^k}`, i.e. the
    /// class is split semisimple.
    pub fn is_split_semisimple(&self) -> bool {
        self.assignments
            .iter()
            .all(|(f, nu)| f.degree() == 1 && nu.parts().iter().all(|&p| p == 1))
    }

    /// Block-diagonal representative built from companion matrices of
    /// `f^{part}` for each part of each `ν(f)`.
    pub fn representative(&self, field: &Arc<FieldSpec>) -> FqMatrix {
        let mut blocks = Vec::new();
        for (f, nu) in &self.assignments {
            for &part in nu.parts() {
                let mut power = f.coeffs.clone();
                for _ in 1..part {
                    power = crate::field::poly_mul(field, &power, &f.coeffs);
                }
                blocks.push(FqMatrix::companion(field.clone(), &MonicPoly::new(power)));
            }
        }
        FqMatrix::block_diagonal(field.clone(), &blocks)
    }
}

impl fmt::Display for ConjClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (poly, nu) in &self.assignments {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "({poly})^{nu}")?;
        }
        Ok(())
    }
}

/// Builds the class label of an invertible matrix by factoring the
/// invariant factors of `tI - A` into irreducible powers.
pub fn class_label(a: &FqMatrix) -> Result<ConjClassLabel> {
    if a.det() == 0 {
        return Err(GlnqError::SingularMatrix);
    }
    let field = &a.field;
    let factors = a.rcf();
    let mut exponents: BTreeMap<MonicPoly, Vec<u32>> = BTreeMap::new();
    for inv_factor in &factors {
        let mut rem = inv_factor.coeffs.clone();
        let mut local: BTreeMap<MonicPoly, u32> = BTreeMap::new();
        let mut d = 1;
        while rem.len() > 1 && (d as usize) < rem.len() {
            let irr = irreducibles(field, d);
            for f in irr.iter() {
                while rem.len() > f.coeffs.len() - 1 {
                    let (q, r) = crate::field::poly_divrem(field, &rem, &f.coeffs);
                    if crate::field::poly_is_zero(&r) {
                        *local.entry(f.clone()).or_insert(0) += 1;
                        rem = q;
                    } else {
                        break;
                    }
                }
                if rem.len() == 1 {
                    break;
                }
            }
            d += 1;
        }
        // a fully factored invariant factor leaves the constant 1
        debug_assert_eq!(rem, vec![1]);
        for (f, e) in local {
            exponents.entry(f).or_default().push(e);
        }
    }
    let mut assignments = BTreeMap::new();
    for (f, parts) in exponents {
        assignments.insert(f, Partition::new(parts));
    }
    let label = ConjClassLabel::new(assignments);
    debug_assert_eq!(label.degree() as usize, a.n);
    Ok(label)
}

/// All class labels of degree `n` over `F_q` (excluding the factor `t`),
/// in deterministic order.
pub fn enumerate_conj_classes(n: u32, field: &Arc<FieldSpec>) -> Vec<ConjClassLabel> {
    let mut polys: Vec<MonicPoly> = Vec::new();
    for d in 1..=n {
        for f in irreducibles(field, d).iter() {
            if d == 1 && f.coeffs[0] == 0 {
                continue; // exclude t: labels must be invertible
            }
            polys.push(f.clone());
        }
    }
    let mut out = Vec::new();
    let mut current: BTreeMap<MonicPoly, Partition> = BTreeMap::new();
    assign_classes(n, 0, &polys, &mut current, &mut out);
    out.sort();
    out
}

fn assign_classes(
    remaining: u32,
    idx: usize,
    polys: &[MonicPoly],
    current: &mut BTreeMap<MonicPoly, Partition>,
    out: &mut Vec<ConjClassLabel>,
) {
    if remaining == 0 {
        out.push(ConjClassLabel::new(current.clone()));
        return;
    }
    if idx >= polys.len() {
        return;
    }
    let f = &polys[idx];
    let d = f.degree();
    // skip f entirely
    assign_classes(remaining, idx + 1, polys, current, out);
    if d <= remaining {
        for w in 1..=remaining / d {
            for nu in enumerate_partitions(w) {
                current.insert(f.clone(), nu);
                assign_classes(remaining - d * w, idx + 1, polys, current, out);
            }
        }
        current.remove(f);
    }
}

/// An `s`-simplex: the orbit of a residue under multiplication by `q`
/// modulo `q^s - 1`, keyed by its least root.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex {
    pub degree: u32,
    pub root: u64,
}

impl Simplex {
    /// All `s` roots `{κ, κq, …, κq^{s-1}}` of the simplex.
    pub fn roots(&self, q: u32) -> Vec<u64> {
        let m = (q as u64).pow(self.degree) - 1;
        if m == 1 {
            return vec![self.root];
        }
        let mut out = Vec::with_capacity(self.degree as usize);
        let mut r = self.root;
        for _ in 0..self.degree {
            out.push(r);
            r = r * q as u64 % m;
            if r == 0 {
                r = m; // residue class of 0 is represented by q^s - 1
            }
        }
        out
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g({};{})", self.root, self.degree)
    }
}

/// All simplices of degree exactly `s` over `F_q` — orbits of size `s`
/// of multiplication by `q` on `Z/(q^s - 1)` — keyed by least root.
/// The union of their root sets is the canonical set `K_s`.
pub fn simplex_set(q: u32, s: u32) -> Vec<Simplex> {
    let m = (q as u64).pow(s) - 1;
    if m == 1 {
        // trivial residue group (q = 2, s = 1): the single 1-simplex
        return vec![Simplex { degree: 1, root: 1 }];
    }
    let mut seen = vec![false; (m + 1) as usize];
    let mut out = Vec::new();
    for start in 1..=m {
        if seen[start as usize] {
            continue;
        }
        let mut len = 0u32;
        let mut r = start;
        loop {
            seen[r as usize] = true;
            len += 1;
            r = r * q as u64 % m;
            if r == 0 {
                r = m;
            }
            if r == start {
                break;
            }
        }
        if len == s {
            out.push(Simplex {
                degree: s,
                root: start,
            });
        }
    }
    out
}

/// The canonical root set `K_s`: all residues in `1..=q^s-1` whose orbit
/// under multiplication by `q` has size exactly `s`, ascending.
pub fn canonical_roots(q: u32, s: u32) -> Vec<u64> {
    let mut out: Vec<u64> = simplex_set(q, s)
        .iter()
        .flat_map(|g| g.roots(q))
        .collect();
    out.sort_unstable();
    out
}

/// A dual class `e = (g_1^{λ_1} ⋯ g_m^{λ_m})` with distinct simplices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct DualClass {
    /// Constituents sorted by (degree, root).
    pub constituents: Vec<(Simplex, Partition)>,
}

impl DualClass {
    pub fn new(mut constituents: Vec<(Simplex, Partition)>) -> Self {
        constituents.sort();
        DualClass { constituents }
    }

    pub fn degree(&self) -> u32 {
        self.constituents
            .iter()
            .map(|(g, nu)| g.degree * nu.weight())
            .sum()
    }

    pub fn is_primary(&self) -> bool {
        self.constituents.len() == 1
    }

    pub fn type_label(&self) -> TypeLabel {
        TypeLabel::new(
            self.constituents
                .iter()
                .map(|(g, nu)| (g.degree, nu.clone()))
                .collect(),
        )
    }

    /// Constituents reordered to match the canonical slot order of the
    /// type label: sorted by (degree, partition, root). Slot `i` of
    /// `type_label().pairs` then corresponds to entry `i` here.
    pub fn aligned_constituents(&self) -> Vec<(Simplex, Partition)> {
        let mut v = self.constituents.clone();
        v.sort_by(|(ga, na), (gb, nb)| {
            (ga.degree, na, ga.root).cmp(&(gb.degree, nb, gb.root))
        });
        v
    }
}

impl fmt::Display for DualClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (g, nu)) in self.constituents.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{g}^{nu}")?;
        }
        Ok(())
    }
}

/// A type `(λ̄, s)`: the canonically sorted list of (simplex degree,
/// partition) pairs shared by a family of dual classes.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypeLabel {
    pub pairs: Vec<(u32, Partition)>,
}

impl TypeLabel {
    pub fn new(mut pairs: Vec<(u32, Partition)>) -> Self {
        pairs.sort();
        TypeLabel { pairs }
    }

    pub fn degree(&self) -> u32 {
        self.pairs.iter().map(|(s, lam)| s * lam.weight()).sum()
    }

    /// True when the simplex degrees `s_i` are pairwise distinct.
    pub fn is_distinct(&self) -> bool {
        let mut degs: Vec<u32> = self.pairs.iter().map(|(s, _)| *s).collect();
        degs.dedup();
        degs.len() == self.pairs.len()
    }

    pub fn is_primary(&self) -> bool {
        self.pairs.len() == 1
    }

    /// All dual classes of this type over `F_q`, each exactly once.
    ///
    /// Within one degree the slots receive pairwise distinct simplices;
    /// repeated `(s, λ)` pairs are deduplicated by forcing strictly
    /// increasing roots across equal slots.
    pub fn dual_classes(&self, q: u32) -> Vec<DualClass> {
        let mut out = Vec::new();
        let mut chosen: Vec<(Simplex, Partition)> = Vec::new();
        self.fill_slots(q, 0, &mut chosen, &mut out);
        out
    }

    fn fill_slots(
        &self,
        q: u32,
        idx: usize,
        chosen: &mut Vec<(Simplex, Partition)>,
        out: &mut Vec<DualClass>,
    ) {
        if idx == self.pairs.len() {
            out.push(DualClass::new(chosen.clone()));
            return;
        }
        let (s, lam) = &self.pairs[idx];
        for g in simplex_set(q, *s) {
            if chosen
                .iter()
                .any(|(h, _)| h.degree == *s && h.root == g.root)
            {
                continue;
            }
            if idx > 0 && self.pairs[idx - 1] == self.pairs[idx] {
                let prev = &chosen[idx - 1].0;
                if g.root <= prev.root {
                    continue;
                }
            }
            chosen.push((g, lam.clone()));
            self.fill_slots(q, idx + 1, chosen, out);
            chosen.pop();
        }
    }

    /// Number of dual classes of this type over `F_q`, without
    /// enumerating them.
    pub fn class_count(&self, q: u32) -> u128 {
        let mut by_degree: BTreeMap<u32, Vec<&Partition>> = BTreeMap::new();
        for (s, lam) in &self.pairs {
            by_degree.entry(*s).or_default().push(lam);
        }
        let mut count: u128 = 1;
        for (s, lams) in by_degree {
            let avail = simplex_set(q, s).len() as u128;
            let k = lams.len() as u128;
            let mut ways: u128 = 1;
            for i in 0..k {
                ways *= avail.saturating_sub(i);
            }
            let mut groups: BTreeMap<&Partition, u128> = BTreeMap::new();
            for lam in lams {
                *groups.entry(lam).or_insert(0) += 1;
            }
            for (_, g) in groups {
                ways /= (1..=g).product::<u128>();
            }
            count *= ways;
        }
        count
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (s, lam)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            write!(f, "{s}^{lam}")?;
        }
        Ok(())
    }
}

/// All types `(λ̄, s)` of degree `n`, canonically ordered.
pub fn enumerate_types(n: u32) -> Vec<TypeLabel> {
    let mut out = Vec::new();
    let mut pairs: Vec<(u32, Partition)> = Vec::new();
    types_recurse(n, 1, &mut pairs, &mut out);
    out.sort();
    out.dedup();
    out
}

fn types_recurse(
    remaining: u32,
    min_s: u32,
    pairs: &mut Vec<(u32, Partition)>,
    out: &mut Vec<TypeLabel>,
) {
    if remaining == 0 {
        out.push(TypeLabel::new(pairs.clone()));
        return;
    }
    for s in min_s..=remaining {
        for w in 1..=remaining / s {
            for lam in enumerate_partitions(w) {
                // non-decreasing partitions within one degree avoid
                // duplicate multisets
                if let Some((ps, plam)) = pairs.last() {
                    if *ps == s && lam < *plam {
                        continue;
                    }
                }
                pairs.push((s, lam));
                types_recurse(remaining - s * w, s, pairs, out);
                pairs.pop();
            }
        }
    }
}

/// All dual classes of degree `n` over `F_q`.
pub fn enumerate_dual_classes(n: u32, q: u32) -> Vec<DualClass> {
    let mut out = Vec::new();
    for ty in enumerate_types(n) {
        out.extend(ty.dual_classes(q));
    }
    out
}

/// `id_s(ξ)`: the largest divisor `r` of `s` with
/// `ξ^{(q^s-1)/(q^r-1)} = 1`, or 0 if none exists. For `ξ ∈ F_q^×` this
/// is `s/ord(ξ)` when `ord(ξ) | s` and 0 otherwise.
pub fn id_s(xi: &FqElement, s: u32) -> Result<u32> {
    if xi.is_zero() {
        return Err(GlnqError::ZeroElement);
    }
    let ord = xi.order()?;
    if s % ord == 0 {
        Ok(s / ord)
    } else {
        Ok(0)
    }
}

/// Möbius function.
pub fn mobius(n: u32) -> i64 {
    let mut n = n;
    let mut mu = 1i64;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

/// `Σ_{κ∈K_s} θ^κ(ξ) = Σ_{r | id_s(ξ)} μ(s/r)(q^r - 1)`, as an integer.
pub fn mobius_root_sum(xi: &FqElement, s: u32) -> Result<i64> {
    let q = xi.field.q() as i64;
    let id = id_s(xi, s)?;
    if id == 0 {
        return Ok(0);
    }
    let mut acc = 0i64;
    for r in 1..=id {
        if id % r == 0 {
            acc += mobius(s / r) * (q.pow(r) - 1);
        }
    }
    Ok(acc)
}

/// Direct evaluation of `Σ_{κ∈K_s} θ^κ(ξ)` for `ξ ∈ F_q^×` by summing
/// over the canonical roots; the independent side of the Möbius lemma.
pub fn root_sum_direct(xi: &FqElement, s: u32) -> Result<CycValue> {
    let field = &xi.field;
    let q = field.q();
    let m = (q - 1) as u64;
    let d = field.dlog(xi.idx)? as u64;
    let mut acc = CycValue::zero();
    for kappa in canonical_roots(q, s) {
        if m <= 1 {
            acc = acc.add(&CycValue::one());
        } else {
            let e = (kappa % m * d % m) as i64;
            acc = acc.add(&CycValue::root_of_unity(m as u32, e));
        }
    }
    Ok(acc)
}

/// `θ^κ(ξ)` with a simplex-root exponent `κ` reduced to the base field;
/// conductor `q - 1`.
pub fn theta_root(field: &FieldSpec, kappa: u64, xi_idx: u32) -> Result<CycValue> {
    let m = (field.q() - 1).max(1) as u64;
    theta_idx(field, (kappa % m) as i128, xi_idx)
}

/// A substitution mode of a partition `ρ` into a row of targets: for
/// each part size `d` of `ρ`, how many of its `r_d` slots go to each
/// target. Equal parts are never distinguished.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mode {
    /// `(part size d, counts per target)`, part sizes descending.
    pub assign: Vec<(u32, Vec<u32>)>,
}

/// A substitution target: `degree` must divide every part it receives,
/// and the received sub-partition (parts divided by `degree`) must have
/// total weight `budget`.
#[derive(Clone, Copy, Debug)]
pub struct ModeTarget {
    pub degree: u32,
    pub budget: u32,
}

impl Mode {
    /// `ρ(m, target_i)`: the sub-partition routed to target `i`, parts
    /// divided by the target's degree.
    pub fn sub_partition(&self, targets: &[ModeTarget], i: usize) -> Partition {
        let mut parts = Vec::new();
        for (d, counts) in &self.assign {
            for _ in 0..counts[i] {
                parts.push(d / targets[i].degree);
            }
        }
        Partition::new(parts)
    }
}

/// All modes of `ρ` into the given targets. Empty when no substitution
/// exists.
pub fn enumerate_modes(rho: &Partition, targets: &[ModeTarget]) -> Vec<Mode> {
    let mult = rho.multiplicities();
    let sizes: Vec<(u32, u32)> = mult.iter().map(|(&d, &r)| (d, r)).rev().collect();
    let mut remaining: Vec<u32> = targets.iter().map(|t| t.budget).collect();
    let mut assign: Vec<(u32, Vec<u32>)> = Vec::new();
    let mut out = Vec::new();
    modes_recurse(&sizes, 0, targets, &mut remaining, &mut assign, &mut out);
    out
}

fn modes_recurse(
    sizes: &[(u32, u32)],
    idx: usize,
    targets: &[ModeTarget],
    remaining: &mut Vec<u32>,
    assign: &mut Vec<(u32, Vec<u32>)>,
    out: &mut Vec<Mode>,
) {
    if idx == sizes.len() {
        if remaining.iter().all(|&r| r == 0) {
            out.push(Mode {
                assign: assign.clone(),
            });
        }
        return;
    }
    let (d, r_d) = sizes[idx];
    let mut counts = vec![0u32; targets.len()];
    let mut place = |counts: &[u32], remaining: &mut Vec<u32>| {
        assign.push((d, counts.to_vec()));
        modes_recurse(sizes, idx + 1, targets, remaining, assign, out);
        assign.pop();
    };
    distribute(d, r_d, 0, targets, remaining, &mut counts, &mut place);
}

fn distribute(
    d: u32,
    left: u32,
    t: usize,
    targets: &[ModeTarget],
    remaining: &mut Vec<u32>,
    counts: &mut Vec<u32>,
    done: &mut dyn FnMut(&[u32], &mut Vec<u32>),
) {
    if t == targets.len() {
        if left == 0 {
            done(counts, remaining);
        }
        return;
    }
    let tg = targets[t];
    let per_slot = if d % tg.degree == 0 { d / tg.degree } else { 0 };
    let max_here = if per_slot > 0 {
        (remaining[t] / per_slot).min(left)
    } else {
        0
    };
    for c in 0..=max_here {
        counts[t] = c;
        remaining[t] -= c * per_slot;
        distribute(d, left - c, t + 1, targets, remaining, counts, done);
        remaining[t] += c * per_slot;
    }
    counts[t] = 0;
}

/// Mode enumeration into a conjugacy-class label.
pub fn modes_into_class(rho: &Partition, c: &ConjClassLabel) -> (Vec<ModeTarget>, Vec<Mode>) {
    let targets: Vec<ModeTarget> = c
        .assignments
        .iter()
        .map(|(f, nu)| ModeTarget {
            degree: f.degree(),
            budget: nu.weight(),
        })
        .collect();
    let modes = enumerate_modes(rho, &targets);
    (targets, modes)
}

/// Mode enumeration into a type (equivalently, any dual class of it).
pub fn modes_into_type(rho: &Partition, ty: &TypeLabel) -> (Vec<ModeTarget>, Vec<Mode>) {
    let targets: Vec<ModeTarget> = ty
        .pairs
        .iter()
        .map(|(s, lam)| ModeTarget {
            degree: *s,
            budget: lam.weight(),
        })
        .collect();
    let modes = enumerate_modes(rho, &targets);
    (targets, modes)
}
