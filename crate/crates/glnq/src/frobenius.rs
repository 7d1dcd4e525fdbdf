//! Frobenius sums and commutator-fiber counts.
//!
//! For a class `c` of `G = GL_n(F_q)` the Frobenius sum
//! `S(c) = Σ_{χ∈Irr G} χ(c)/χ(1)` equals `|[,]^{-1}(c)| / |G|`, so exact
//! character values turn directly into exact fiber counts. Partial sums
//! are grouped by type; every reported total is checked to be rational
//! with `S(c)·|G|` a non-negative integer.
//!
//! The machinery path (sums of [`char_value_semisimple`] over dual
//! classes) is the ground truth here, together with the brute-force
//! oracle. Literature closed forms for primary and central partial sums
//! are computed verbatim as *audit targets* and diffed, never asserted,
//! because their derivation leans on a restriction-inner-product value
//! that direct computation contradicts for more than one eigenvalue
//! block (see [`crate::symfunc::restriction_gram`]).

use num::{One, Signed, Zero};

use crate::classes::{enumerate_types, theta_root, TypeLabel};
use crate::cyclotomic::CycValue;
use crate::field::FqElement;
use crate::green::{char_value_semisimple, degree_of_type, SplitSemisimpleClass};
use crate::partitions::{enumerate_partitions, partition_number, Partition};
use crate::symfunc::{phi, sn_character};
use crate::{general_linear_order, GlnqError, Int, Rat, Result};

/// Per-class Frobenius data: partial sums by type, the total, and the
/// implied fiber size.
#[derive(Clone, Debug)]
pub struct FrobeniusReport {
    pub n: u32,
    pub q: u32,
    pub class_desc: String,
    /// `(type, partial sum)` in canonical type order.
    pub types: Vec<(TypeLabel, Rat)>,
    pub total: Rat,
    /// `S(c)·|G_n|`, a non-negative integer.
    pub fiber: Int,
    pub method: String,
}

impl FrobeniusReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "q": self.q,
            "class": self.class_desc,
            "types": self.types.iter().map(|(ty, v)| {
                serde_json::json!({"type": ty.to_string(), "value": v.to_string()})
            }).collect::<Vec<_>>(),
            "total": self.total.to_string(),
            "fiber": self.fiber.to_string(),
            "method": self.method,
        })
    }
}

/// Frobenius partial sum of one type at a split semisimple class:
/// `Σ_{e∈(λ̄,s)} I_e(c) / I(1)`.
pub fn partial_sum(ty: &TypeLabel, c: &SplitSemisimpleClass) -> Result<Rat> {
    let q = c.field.q();
    let deg = degree_of_type(ty, q)?;
    let mut acc = CycValue::zero();
    for e in ty.dual_classes(q) {
        acc = acc.add(&char_value_semisimple(&e, c)?);
    }
    let total = acc
        .to_rational()
        .map_err(|_| GlnqError::NotRational(format!("partial sum of type {ty} at {c}")))?;
    Ok(total / Rat::from(deg))
}

/// `S(c) = Σ_χ χ(c)/χ(1)` with partial sums grouped by type, plus the
/// fiber count `S(c)·|G_n|`.
pub fn frobenius_sum(c: &SplitSemisimpleClass) -> Result<FrobeniusReport> {
    let n = c.n();
    let q = c.field.q();
    let mut types = Vec::new();
    let mut total = Rat::zero();
    for ty in enumerate_types(n) {
        let value = partial_sum(&ty, c)?;
        total += value.clone();
        types.push((ty, value));
    }
    let fiber = fiber_from_total(&total, n, q)?;
    Ok(FrobeniusReport {
        n,
        q,
        class_desc: c.to_string(),
        types,
        total,
        fiber,
        method: "green".into(),
    })
}

fn fiber_from_total(total: &Rat, n: u32, q: u32) -> Result<Int> {
    let fiber = total.clone() * Rat::from(general_linear_order(n, q));
    if !fiber.is_integer() || fiber.is_negative() {
        return Err(GlnqError::NotIntegral(format!(
            "S(c)·|G| = {fiber} is not a non-negative integer"
        )));
    }
    Ok(fiber.to_integer())
}

/// `|[,]^{-1}(c)| = |G_n|·S(c)` through the character sum.
pub fn fiber_size_via_characters(c: &SplitSemisimpleClass) -> Result<Int> {
    Ok(frobenius_sum(c)?.fiber)
}

/// The literature closed form for a primary partial sum at a split
/// semisimple class, computed verbatim (audit target, not asserted):
///
/// `S_{(λ),(s)}(c) = multinomial · ∏φ_{n_i}(q)/φ_n(q)
///                   · (1/s) Σ_{r | id_s(∏ a_i^{n_i/s})} μ(s/r)(q^r-1)`.
///
/// Requires `s | n_i` for all `i`.
pub fn closed_form_primary_semisimple(
    lambda: &Partition,
    s: u32,
    c: &SplitSemisimpleClass,
) -> Result<Rat> {
    let n = c.n();
    if s * lambda.weight() != n {
        return Err(GlnqError::SizeMismatch(format!(
            "s·|λ| = {} but n = {n}",
            s * lambda.weight()
        )));
    }
    if c.pairs.iter().any(|&(_, m)| m % s != 0) {
        return Err(GlnqError::UnsupportedClass(format!(
            "s = {s} does not divide every block size of {c}"
        )));
    }
    let q = c.field.q();
    let qr = Rat::from(Int::from(q));
    // multinomial (n/s)! / ∏ (n_i/s)!
    let fact = |k: u32| -> Int { (1..=k as u64).map(Int::from).product() };
    let mut multinomial = Rat::from(fact(n / s));
    for &(_, m) in &c.pairs {
        multinomial /= Rat::from(fact(m / s));
    }
    let mut phi_ratio = Rat::one();
    for &(_, m) in &c.pairs {
        phi_ratio *= phi(m, &qr);
    }
    phi_ratio /= phi(n, &qr);
    // ∏ a_i^{n_i/s} and its Möbius root sum
    let f = &c.field;
    let mut prod = 1u32;
    for &(a, m) in &c.pairs {
        prod = f.mul(prod, f.pow(a, (m / s) as u64));
    }
    let elt = FqElement::new(c.field.clone(), prod);
    let root_sum = crate::classes::mobius_root_sum(&elt, s)?;
    Ok(multinomial * phi_ratio * Rat::from(Int::from(root_sum)) / Rat::from(Int::from(s)))
}

/// Central partial sum by direct enumeration over the dual classes of
/// the type: `S_{λ̄,s}(ξ) = Σ_{e∈(λ̄,s)} ∏_{g∈e} θ^{κ_g·|λ_g|}(ξ)`.
pub fn central_partial_sum(ty: &TypeLabel, xi: &FqElement) -> Result<Rat> {
    if xi.is_zero() {
        return Err(GlnqError::ZeroElement);
    }
    let field = &xi.field;
    let q = field.q();
    let m = (q - 1).max(1) as u64;
    let mut acc = CycValue::zero();
    for e in ty.dual_classes(q) {
        let mut prod = CycValue::one();
        for (g, lam) in &e.constituents {
            let exponent = g.root % m * (lam.weight() as u64 % m) % m;
            prod = prod.mul(&theta_root(field, exponent, xi.idx)?);
        }
        acc = acc.add(&prod);
    }
    acc.to_rational()
        .map_err(|_| GlnqError::NotRational(format!("central partial sum of {ty}")))
}

/// Central partial sum of a *distinct* type by the Möbius product
/// `∏_j (1/s_j) Σ_{r | id_{s_j}(ξ^{|λ_j|})} μ(s_j/r)(q^r-1)`.
/// Returns `None` for non-distinct types, where the product form does
/// not apply.
pub fn central_partial_sum_mobius(ty: &TypeLabel, xi: &FqElement) -> Result<Option<Rat>> {
    if !ty.is_distinct() {
        return Ok(None);
    }
    let f = &xi.field;
    let mut acc = Rat::one();
    for (s, lam) in &ty.pairs {
        let power = f.pow(xi.idx, lam.weight() as u64);
        let elt = FqElement::new(xi.field.clone(), power);
        let root_sum = crate::classes::mobius_root_sum(&elt, *s)?;
        acc *= Rat::from(Int::from(root_sum)) / Rat::from(Int::from(*s));
    }
    Ok(Some(acc))
}

/// The vanishing rule for distinct types: `S_{λ̄,s}(ξ) = 0` unless
/// `ord(ξ) | gcd(s_1|λ_1|, …, s_k|λ_k|)`.
pub fn vanishing_rule_allows(ty: &TypeLabel, xi: &FqElement) -> Result<bool> {
    let ord = xi.order()?;
    let mut g = 0u32;
    for (s, lam) in &ty.pairs {
        g = num::integer::gcd(g, s * lam.weight());
    }
    Ok(g % ord == 0)
}

/// Total central Frobenius sum `S(ξ)` over all types, together with the
/// literature's predicted leading coefficient
/// `p(d)·Σ_{|ρ|=n/d} ∏_{τ∈ρ} 1/τ` at `d = ord(ξ)` (audit value: the sum
/// is exact, the prediction is reported for comparison only).
pub fn central_total_and_leading(xi: &FqElement, n: u32) -> Result<(Rat, Rat)> {
    let d = xi.order()?;
    if n % d != 0 {
        return Err(GlnqError::Invalid(format!(
            "ord(ξ) = {d} does not divide n = {n}"
        )));
    }
    let mut total = Rat::zero();
    for ty in enumerate_types(n) {
        total += central_partial_sum(&ty, xi)?;
    }
    let mut coeff = Rat::zero();
    for rho in enumerate_partitions(n / d) {
        let mut prod = Rat::one();
        for &tau in rho.parts() {
            prod /= Rat::from(Int::from(tau));
        }
        coeff += prod;
    }
    coeff *= Rat::from(partition_number(d));
    Ok((total, coeff))
}

/// `S(c)` for split *regular* semisimple `c` by the structural
/// shortcut: only types with every simplex of degree 1 contribute, the
/// only substituting partition is `{1^n}`, and the inner sum is a
/// permanent of `θ` values. Must agree exactly with [`frobenius_sum`].
pub fn regular_semisimple_sum(c: &SplitSemisimpleClass) -> Result<Rat> {
    if !c.is_regular() {
        return Err(GlnqError::UnsupportedClass(format!("{c} is not regular")));
    }
    let n = c.n();
    let q = c.field.q();
    let field = &c.field;
    let eigen: Vec<u32> = c.pairs.iter().map(|&(a, _)| a).collect();
    let mut total = Rat::zero();
    for ty in enumerate_types(n) {
        if ty.pairs.iter().any(|(s, _)| *s != 1) {
            continue;
        }
        let deg = degree_of_type(&ty, q)?;
        // ∏_j χ^{λ_j}(1)/|λ_j|! over the constituents
        let mut chi_coeff = Rat::one();
        for (_, lam) in &ty.pairs {
            let w = lam.weight();
            let dim = sn_character(lam, &Partition::new(vec![1; w as usize]))?;
            let fact: Int = (1..=w as u64).map(Int::from).product();
            chi_coeff *= Rat::from(Int::from(dim)) / Rat::from(fact);
        }
        // Σ_{e∈ty} permanent of θ^{κ_slot}(a_j)
        let mut b_sum = CycValue::zero();
        for e in ty.dual_classes(q) {
            let mut rows: Vec<u64> = Vec::with_capacity(n as usize);
            for (g, lam) in &e.constituents {
                for _ in 0..lam.weight() {
                    rows.push(g.root);
                }
            }
            let mut matrix = vec![vec![CycValue::zero(); n as usize]; n as usize];
            for (i, &kappa) in rows.iter().enumerate() {
                for (j, &a) in eigen.iter().enumerate() {
                    matrix[i][j] = theta_root(field, kappa, a)?;
                }
            }
            b_sum = b_sum.add(&cyc_permanent(&matrix));
        }
        let b = b_sum
            .to_rational()
            .map_err(|_| GlnqError::NotRational(format!("B sum for type {ty}")))?;
        total += chi_coeff * b / Rat::from(deg);
    }
    Ok(total)
}

fn cyc_permanent(m: &[Vec<CycValue>]) -> CycValue {
    fn recurse(m: &[Vec<CycValue>], row: usize, used: &mut Vec<bool>, acc: &mut CycValue, prefix: CycValue) {
        let n = m.len();
        if row == n {
            *acc = acc.add(&prefix);
            return;
        }
        for col in 0..n {
            if used[col] {
                continue;
            }
            used[col] = true;
            recurse(m, row + 1, used, acc, prefix.mul(&m[row][col]));
            used[col] = false;
        }
    }
    let mut acc = CycValue::zero();
    let mut used = vec![false; m.len()];
    recurse(m, 0, &mut used, &mut acc, CycValue::one());
    acc
}

/// One audited line: a type at a class, the machinery value, and the
/// closed-form value when the literature provides one.
#[derive(Clone, Debug)]
pub struct AuditRow {
    pub ty: TypeLabel,
    pub machinery: Rat,
    pub closed_form: Option<Rat>,
    pub closed_form_matches: Option<bool>,
}

/// All audit rows for one class, plus the total and oracle comparison.
#[derive(Clone, Debug)]
pub struct AuditBlock {
    pub class_desc: String,
    pub rows: Vec<AuditRow>,
    pub total: Rat,
    pub fiber: Int,
    pub oracle_fiber: Option<Int>,
    pub oracle_matches: Option<bool>,
}

/// Machinery / closed-form / oracle comparison over a set of split
/// semisimple classes.
#[derive(Debug)]
pub struct AuditReport {
    pub n: u32,
    pub q: u32,
    pub blocks: Vec<AuditBlock>,
}

impl AuditReport {
    /// True when every machinery total matches the oracle fiber (where
    /// the oracle ran). Closed-form deviations never fail an audit.
    pub fn machinery_oracle_consistent(&self) -> bool {
        self.blocks
            .iter()
            .all(|b| b.oracle_matches.unwrap_or(true))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "q": self.q,
            "classes": self.blocks.iter().map(|b| serde_json::json!({
                "class": b.class_desc,
                "rows": b.rows.iter().map(|r| serde_json::json!({
                    "type": r.ty.to_string(),
                    "machinery": r.machinery.to_string(),
                    "closed_form": r.closed_form.as_ref().map(|v| v.to_string()),
                    "match": r.closed_form_matches,
                })).collect::<Vec<_>>(),
                "total": b.total.to_string(),
                "fiber": b.fiber.to_string(),
                "oracle_fiber": b.oracle_fiber.as_ref().map(|v| v.to_string()),
                "oracle_match": b.oracle_matches,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Every split semisimple class of `GL_n(F_q)`, deterministically
/// ordered: all assignments of distinct eigenvalues with multiplicities
/// summing to `n`.
pub fn enumerate_split_semisimple(
    field: &std::sync::Arc<crate::field::FieldSpec>,
    n: u32,
) -> Vec<SplitSemisimpleClass> {
    let mut out = Vec::new();
    let mut pairs: Vec<(u32, u32)> = Vec::new();
    fn recurse(
        field: &std::sync::Arc<crate::field::FieldSpec>,
        next: u32,
        remaining: u32,
        pairs: &mut Vec<(u32, u32)>,
        out: &mut Vec<SplitSemisimpleClass>,
    ) {
        if remaining == 0 {
            out.push(SplitSemisimpleClass::new(field.clone(), pairs.clone()).unwrap());
            return;
        }
        for a in next..field.q() {
            for m in 1..=remaining {
                pairs.push((a, m));
                recurse(field, a + 1, remaining - m, pairs, out);
                pairs.pop();
            }
        }
    }
    recurse(field, 1, n, &mut pairs, &mut out);
    out.sort_by_key(|c| c.pairs.clone());
    out
}

/// Runs the audit over every split semisimple class of `GL_n(F_q)`.
///
/// Closed forms are attached to primary types (whenever `s` divides all
/// block sizes) and, on central classes, to distinct types via the
/// Möbius product. `oracle_cap` bounds the optional brute-force
/// comparison; pass 0 to skip the oracle entirely.
pub fn claims_audit(n: u32, q: u32, oracle_cap: u128) -> Result<AuditReport> {
    let field = crate::field::make_field(q)?;
    let census = if oracle_cap > 0 {
        crate::oracle::census_cached(n, q, oracle_cap).ok()
    } else {
        None
    };
    let mut blocks = Vec::new();
    for c in enumerate_split_semisimple(&field, n) {
        let report = frobenius_sum(&c)?;
        let mut rows = Vec::new();
        for (ty, machinery) in &report.types {
            let closed_form = if ty.is_primary() {
                let (s, lam) = &ty.pairs[0];
                closed_form_primary_semisimple(lam, *s, &c).ok()
            } else if c.is_central() {
                let xi = FqElement::new(field.clone(), c.pairs[0].0);
                central_partial_sum_mobius(ty, &xi)?
            } else {
                None
            };
            let closed_form_matches = closed_form.as_ref().map(|v| v == machinery);
            rows.push(AuditRow {
                ty: ty.clone(),
                machinery: machinery.clone(),
                closed_form,
                closed_form_matches,
            });
        }
        let (oracle_fiber, oracle_matches) = match &census {
            Some(census) => {
                let fiber = census.fiber_count(&c.to_label())?;
                let matches = fiber == report.fiber;
                (Some(fiber), Some(matches))
            }
            None => (None, None),
        };
        blocks.push(AuditBlock {
            class_desc: c.to_string(),
            rows,
            total: report.total,
            fiber: report.fiber,
            oracle_fiber,
            oracle_matches,
        });
    }
    Ok(AuditReport { n, q, blocks })
}

/// Central classes of `SL_n(F_q)`: the scalars `ξ` with `ξ^n = 1`,
/// ascending by element index.
pub fn sl_central_elements(
    field: &std::sync::Arc<crate::field::FieldSpec>,
    n: u32,
) -> Vec<FqElement> {
    let mut out = Vec::new();
    for xi in field.units() {
        if field.pow(xi, n as u64) == 1 {
            out.push(FqElement::new(field.clone(), xi));
        }
    }
    out
}

/// All split regular semisimple classes of `SL_n(F_q)`: distinct
/// eigenvalue sets with product 1.
pub fn sl_regular_classes(
    field: &std::sync::Arc<crate::field::FieldSpec>,
    n: u32,
) -> Vec<SplitSemisimpleClass> {
    enumerate_split_semisimple(field, n)
        .into_iter()
        .filter(|c| c.is_regular() && c.in_special_linear())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;
    use crate::oracle;
    use crate::partitions::rat;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn identity_sum_counts_classes() {
        // S(1) = #Irr = #classes; fiber = |G|·#classes
        let field = make_field(3).unwrap();
        let id = SplitSemisimpleClass::central(field, 1, 2).unwrap();
        let report = frobenius_sum(&id).unwrap();
        assert_eq!(report.total, rat(8));
        assert_eq!(report.fiber, Int::from(48 * 8));
    }

    #[test]
    fn identity_sum_matches_class_count_sweep() {
        for (n, q) in [(2u32, 2u32), (2, 5), (3, 2), (3, 3), (3, 5)] {
            let field = make_field(q).unwrap();
            let id = SplitSemisimpleClass::central(field, 1, n).unwrap();
            let report = frobenius_sum(&id).unwrap();
            let classes = crate::classes::enumerate_dual_classes(n, q).len();
            assert_eq!(report.total, rat(classes as i64), "n={n}, q={q}");
        }
    }

    #[test]
    fn linear_type_partial_sum_on_sl() {
        // S_{({n}),(1)}(c) = q - 1 for c ∈ SL_n
        let field = make_field(5).unwrap();
        let c = SplitSemisimpleClass::regular(field, &[2, 3]).unwrap();
        assert!(c.in_special_linear());
        let lin = TypeLabel::new(vec![(1, p(&[2]))]);
        assert_eq!(partial_sum(&lin, &c).unwrap(), rat(4));
    }

    #[test]
    fn det_ne_one_gives_zero_fiber() {
        let field = make_field(3).unwrap();
        let c = SplitSemisimpleClass::regular(field, &[1, 2]).unwrap();
        let report = frobenius_sum(&c).unwrap();
        assert_eq!(report.total, Rat::zero());
        assert_eq!(report.fiber, Int::from(0));
    }

    #[test]
    fn fiber_matches_oracle_gl2_f3() {
        let field = make_field(3).unwrap();
        let census = oracle::census_cached(2, 3, oracle::DEFAULT_CAP).unwrap();
        for c in enumerate_split_semisimple(&field, 2) {
            let via_chars = fiber_size_via_characters(&c).unwrap();
            let via_oracle = census.fiber_count(&c.to_label()).unwrap();
            assert_eq!(via_chars, via_oracle, "class {c}");
        }
    }

    #[test]
    fn minus_identity_fiber_gl2_f3() {
        // S(-I) = q - 1 = 2 over F_3; fiber = 96
        let field = make_field(3).unwrap();
        let c = SplitSemisimpleClass::central(field, 2, 2).unwrap();
        let report = frobenius_sum(&c).unwrap();
        assert_eq!(report.total, rat(2));
        assert_eq!(report.fiber, Int::from(96));
    }

    #[test]
    fn central_partial_sums_both_paths() {
        // enumeration equals the Möbius product on distinct types
        for q in [3u32, 5, 7] {
            let field = make_field(q).unwrap();
            for n in 1..=3u32 {
                for xi_idx in field.units() {
                    let xi = FqElement::new(field.clone(), xi_idx);
                    for ty in enumerate_types(n) {
                        if let Some(mobius_val) =
                            central_partial_sum_mobius(&ty, &xi).unwrap()
                        {
                            let enumerated = central_partial_sum(&ty, &xi).unwrap();
                            assert_eq!(
                                enumerated, mobius_val,
                                "q={q}, n={n}, ξ={xi_idx}, type {ty}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn central_partial_sum_identity_counts_type() {
        // at ξ = 1 every θ factor is 1: the sum counts the type's size
        let field = make_field(5).unwrap();
        let one = FqElement::new(field, 1);
        for ty in enumerate_types(3) {
            assert_eq!(
                central_partial_sum(&ty, &one).unwrap(),
                Rat::from(Int::from(ty.class_count(5) as u64)),
                "type {ty}"
            );
        }
    }

    #[test]
    fn central_totals_match_full_machinery() {
        // the type-level central formula agrees with the general path
        for (n, q) in [(2u32, 5u32), (2, 7), (3, 4)] {
            let field = make_field(q).unwrap();
            for xi_idx in field.units() {
                if field.pow(xi_idx, n as u64) != 1 {
                    continue;
                }
                let xi = FqElement::new(field.clone(), xi_idx);
                let c = SplitSemisimpleClass::central(field.clone(), xi_idx, n).unwrap();
                let report = frobenius_sum(&c).unwrap();
                let (total, _) = central_total_and_leading(&xi, n).unwrap();
                assert_eq!(report.total, total, "n={n}, q={q}, ξ={xi_idx}");
            }
        }
    }

    #[test]
    fn central_leading_coefficient_values() {
        // the literature's predicted coefficients (audit values)
        let field = make_field(5).unwrap();
        let minus_one = FqElement::new(field.clone(), 4);
        let (_, coeff) = central_total_and_leading(&minus_one, 2).unwrap();
        assert_eq!(coeff, rat(2)); // p(2)·(1/1)
        let one = FqElement::new(field, 1);
        let (_, coeff) = central_total_and_leading(&one, 2).unwrap();
        assert_eq!(coeff, rat(3) / rat(2)); // p(1)·(1/1 + 1/2)
    }

    #[test]
    fn regular_shortcut_equals_machinery() {
        for (n, q, eigen) in [
            (2u32, 3u32, vec![1u32, 2]),
            (2, 5, vec![2, 3]),
            (2, 5, vec![1, 4]),
            (3, 5, vec![1, 2, 3]),
        ] {
            let field = make_field(q).unwrap();
            let c = SplitSemisimpleClass::regular(field, &eigen).unwrap();
            let shortcut = regular_semisimple_sum(&c).unwrap();
            let full = frobenius_sum(&c).unwrap().total;
            assert_eq!(shortcut, full, "n={n}, q={q}, {c}");
        }
        // non-regular input is rejected
        let field = make_field(3).unwrap();
        let central = SplitSemisimpleClass::central(field, 1, 2).unwrap();
        assert!(regular_semisimple_sum(&central).is_err());
    }

    #[test]
    fn closed_form_examples() {
        // central case: (1/2)[μ(2)·2 + μ(1)·8] = 3 at n=2, s=2, ξ=1, q=3
        let field = make_field(3).unwrap();
        let id = SplitSemisimpleClass::central(field.clone(), 1, 2).unwrap();
        let v = closed_form_primary_semisimple(&p(&[1]), 2, &id).unwrap();
        assert_eq!(v, rat(3));
        // and it matches the machinery there (central closed forms hold)
        let ty = TypeLabel::new(vec![(2, p(&[1]))]);
        assert_eq!(partial_sum(&ty, &id).unwrap(), rat(3));
        // s must divide every block size
        let c = SplitSemisimpleClass::regular(field, &[1, 2]).unwrap();
        assert!(closed_form_primary_semisimple(&p(&[1]), 2, &c).is_err());
    }

    #[test]
    fn closed_form_deviates_for_multiple_blocks() {
        // the audit counterpoint: for l ≥ 2 the literature closed form
        // disagrees with the machinery (its restriction step is the
        // Gram-value claim contradicted in symfunc); record the diff
        let field = make_field(5).unwrap();
        let c = SplitSemisimpleClass::regular(field, &[2, 3]).unwrap();
        let st = TypeLabel::new(vec![(1, p(&[1, 1]))]);
        let machinery = partial_sum(&st, &c).unwrap();
        let closed = closed_form_primary_semisimple(&p(&[1, 1]), 1, &c).unwrap();
        // machinery: (q-1)/q; closed form: 2(q-1)/(q+1)
        assert_eq!(machinery, rat(4) / rat(5));
        assert_eq!(closed, rat(8) / rat(6));
        assert_ne!(machinery, closed);
    }

    #[test]
    fn vanishing_rule_on_distinct_types() {
        for q in [3u32, 5, 9] {
            let field = make_field(q).unwrap();
            for n in 1..=4u32 {
                for xi_idx in field.units() {
                    let xi = FqElement::new(field.clone(), xi_idx);
                    if n % xi.order().unwrap() != 0 {
                        continue;
                    }
                    for ty in enumerate_types(n) {
                        if !ty.is_distinct() {
                            continue;
                        }
                        let value = central_partial_sum(&ty, &xi).unwrap();
                        if !vanishing_rule_allows(&ty, &xi).unwrap() {
                            assert!(value.is_zero(), "q={q} n={n} ξ={xi_idx} {ty}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn audit_gl2_f3() {
        let report = claims_audit(2, 3, oracle::DEFAULT_CAP).unwrap();
        assert!(report.machinery_oracle_consistent());
        // identity row: everything agrees including closed forms
        let id_block = report
            .blocks
            .iter()
            .find(|b| b.class_desc == "diag(1^2)")
            .unwrap();
        assert!(id_block.oracle_matches.unwrap());
        for row in &id_block.rows {
            if let Some(m) = row.closed_form_matches {
                assert!(m, "type {} at identity", row.ty);
            }
        }
    }

    #[test]
    fn split_semisimple_enumeration_counts() {
        // q=3, n=2: central ξ∈{1,2} plus diag(1,2): 3 classes
        let field = make_field(3).unwrap();
        assert_eq!(enumerate_split_semisimple(&field, 2).len(), 3);
        // q=5, n=2: 4 central + C(4,2)=6 regular: 10
        let field = make_field(5).unwrap();
        assert_eq!(enumerate_split_semisimple(&field, 2).len(), 10);
    }

    #[test]
    fn sl_helpers() {
        let field = make_field(5).unwrap();
        let centrals = sl_central_elements(&field, 2);
        assert_eq!(
            centrals.iter().map(|e| e.idx).collect::<Vec<_>>(),
            vec![1, 4]
        );
        let regs = sl_regular_classes(&field, 2);
        // diag(a, a^{-1}) with a ∉ {1,4}: {2,3} only
        assert_eq!(regs.len(), 1);
        assert_eq!(regs[0].pairs, vec![(2, 1), (3, 1)]);
    }
}
