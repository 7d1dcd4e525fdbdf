//! Ground-truth enumeration for small `GL_n(F_q)`: the full conjugacy
//! census and exact commutator-fiber counts.
//!
//! The census walks every matrix in `F_q^{n×n}` once, keeps the
//! invertible ones, and buckets them by rational canonical form. Fiber
//! counts then use the standard rearrangement
//! `|{(x,y) : [x,y] = c}| = Σ_y [y ~ c·y]·|C(y)|`,
//! with all class membership resolved through the cached census tables.

use std::collections::HashMap;
use std::sync::Arc;

use crate::classes::{class_label, ConjClassLabel};
use crate::field::{make_field, FieldSpec, FqMatrix};
use crate::{general_linear_order, GlnqError, Int, Result};

/// Complete class data for one group.
pub struct GroupCensus {
    pub n: u32,
    pub q: u32,
    pub field: Arc<FieldSpec>,
    /// `(label, class size, centralizer order)`, deterministic order.
    pub classes: Vec<(ConjClassLabel, u64, u64)>,
    /// `|G_n|`.
    pub order: u64,
    /// Every group element, packed.
    pub elements: Vec<u128>,
    /// Packed element → class index.
    class_of: HashMap<u128, u32>,
}

/// Default cap on `|G_n|` for oracle commands; override per call.
pub const DEFAULT_CAP: u128 = 10_000_000;

/// Cached variant of [`census`]: one enumeration per `(n, q)` per run.
pub fn census_cached(n: u32, q: u32, cap: u128) -> Result<Arc<GroupCensus>> {
    use std::sync::{LazyLock, Mutex};
    static CACHE: LazyLock<Mutex<HashMap<(u32, u32), Arc<GroupCensus>>>> =
        LazyLock::new(|| Mutex::new(HashMap::new()));
    if let Some(c) = CACHE.lock().unwrap().get(&(n, q)) {
        return Ok(c.clone());
    }
    let fresh = Arc::new(census(n, q, cap)?);
    CACHE.lock().unwrap().insert((n, q), fresh.clone());
    Ok(fresh)
}

/// Enumerates `GL_n(F_q)` and buckets it into conjugacy classes.
/// Errors when `|G_n|` exceeds `cap`.
pub fn census(n: u32, q: u32, cap: u128) -> Result<GroupCensus> {
    let field = make_field(q)?;
    let order_big = general_linear_order(n, q);
    let order: u128 = order_big
        .to_string()
        .parse()
        .map_err(|_| GlnqError::CapExceeded { order: u128::MAX, cap })?;
    if order > cap {
        return Err(GlnqError::CapExceeded { order, cap });
    }
    assert!(
        (n * n) <= 16 && q <= 256,
        "census packing requires n^2 <= 16 and q <= 256"
    );
    let nn = (n * n) as usize;
    let total = (q as u128).pow(n * n);
    let mut label_index: HashMap<String, u32> = HashMap::new();
    let mut classes: Vec<(ConjClassLabel, u64, u64)> = Vec::new();
    let mut class_of: HashMap<u128, u32> = HashMap::new();
    let mut elements: Vec<u128> = Vec::with_capacity(order as usize);
    // cache labels by invariant-factor key to skip refactoring
    let mut rcf_key_to_class: HashMap<Vec<u32>, u32> = HashMap::new();
    let mut code = vec![0u32; nn];
    for counter in 0..total {
        if counter > 0 {
            // odometer increment
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
            field: field.clone(),
            n: n as usize,
            data: code.clone(),
        };
        if m.det() == 0 {
            continue;
        }
        let rcf = m.rcf();
        let mut key = Vec::new();
        for f in &rcf {
            key.push(u32::MAX); // separator
            key.extend_from_slice(&f.coeffs);
        }
        let idx = match rcf_key_to_class.get(&key) {
            Some(&i) => i,
            None => {
                let label = class_label(&m)?;
                let label_str = label.to_string();
                let idx = match label_index.get(&label_str) {
                    Some(&i) => i,
                    None => {
                        let i = classes.len() as u32;
                        label_index.insert(label_str, i);
                        classes.push((label, 0, 0));
                        i
                    }
                };
                rcf_key_to_class.insert(key, idx);
                idx
            }
        };
        classes[idx as usize].1 += 1;
        let packed = m.pack();
        class_of.insert(packed, idx);
        elements.push(packed);
    }
    debug_assert_eq!(elements.len() as u128, order);
    // class equation and centralizer orders
    let order = order as u64;
    for (_, size, cent) in classes.iter_mut() {
        assert_eq!(order % *size, 0, "class size must divide |G|");
        *cent = order / *size;
    }
    let mut census = GroupCensus {
        n,
        q,
        field,
        classes,
        order,
        elements,
        class_of,
    };
    census.sort_classes();
    Ok(census)
}

impl GroupCensus {
    fn sort_classes(&mut self) {
        let mut perm: Vec<usize> = (0..self.classes.len()).collect();
        perm.sort_by(|&a, &b| self.classes[a].0.cmp(&self.classes[b].0));
        let mut inverse = vec![0u32; perm.len()];
        for (new_idx, &old_idx) in perm.iter().enumerate() {
            inverse[old_idx] = new_idx as u32;
        }
        let mut sorted = Vec::with_capacity(self.classes.len());
        for &old_idx in &perm {
            sorted.push(self.classes[old_idx].clone());
        }
        self.classes = sorted;
        for v in self.class_of.values_mut() {
            *v = inverse[*v as usize];
        }
    }

    /// Class index of an arbitrary group element.
    pub fn class_index(&self, m: &FqMatrix) -> Option<u32> {
        self.class_of.get(&m.pack()).copied()
    }

    /// Looks up the class index of a label, if the label is realised.
    pub fn class_index_of_label(&self, label: &ConjClassLabel) -> Option<u32> {
        self.classes.iter().position(|(l, _, _)| l == label).map(|i| i as u32)
    }

    /// Exact size of the commutator fiber over the class `c`:
    /// `Σ_y [y ~ c_rep·y]·|C(y)|`.
    pub fn fiber_count(&self, c: &ConjClassLabel) -> Result<Int> {
        if c.degree() != self.n {
            return Err(GlnqError::SizeMismatch(format!(
                "label degree {} vs census n = {}",
                c.degree(),
                self.n
            )));
        }
        let rep = c.representative(&self.field);
        debug_assert!(self.class_index(&rep).is_some());
        let n = self.n as usize;
        let mut total = Int::from(0u32);
        for &packed in &self.elements {
            let y = FqMatrix::unpack(self.field.clone(), n, packed);
            let cy = rep.mul(&y);
            let cls_y = self.class_of[&packed];
            if let Some(&cls_cy) = self.class_of.get(&cy.pack()) {
                if cls_cy == cls_y {
                    total += Int::from(self.classes[cls_y as usize].2);
                }
            }
        }
        Ok(total)
    }

    /// Number of commuting pairs, which must equal `|G|·#classes`.
    pub fn commuting_pairs(&self) -> Int {
        let mut total = Int::from(0u32);
        for (_, size, cent) in &self.classes {
            total += Int::from(*size) * Int::from(*cent);
        }
        total
    }

    /// CSV dump: `label,size,centralizer` per class.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("label,size,centralizer\n");
        for (label, size, cent) in &self.classes {
            out.push_str(&format!("\"{label}\",{size},{cent}\n"));
        }
        out
    }
}

/// Conjugacy test through rational canonical forms.
pub fn conjugate_test(a: &FqMatrix, b: &FqMatrix) -> Result<bool> {
    if a.n != b.n || a.field.q() != b.field.q() {
        return Err(GlnqError::SizeMismatch(
            "conjugacy test needs equal dimension and field".into(),
        ));
    }
    Ok(a.rcf() == b.rcf())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::enumerate_conj_classes;
    use crate::field::make_field;
    use crate::partitions::Partition;
    use std::collections::BTreeMap;

    #[test]
    fn census_small_groups() {
        let c22 = census_cached(2, 2, DEFAULT_CAP).unwrap();
        assert_eq!(c22.order, 6);
        assert_eq!(c22.classes.len(), 3);
        let mut sizes: Vec<u64> = c22.classes.iter().map(|(_, s, _)| *s).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]); // GL_2(F_2) ≅ S_3

        let c23 = census_cached(2, 3, DEFAULT_CAP).unwrap();
        assert_eq!(c23.order, 48);
        assert_eq!(c23.classes.len(), 8);

        let c32 = census_cached(3, 2, DEFAULT_CAP).unwrap();
        assert_eq!(c32.order, 168);
        assert_eq!(c32.classes.len(), 6);
    }

    #[test]
    fn class_equation_holds() {
        for (n, q) in [(2u32, 2u32), (2, 3), (2, 5), (3, 2), (3, 3)] {
            let c = census_cached(n, q, DEFAULT_CAP).unwrap();
            let total: u64 = c.classes.iter().map(|(_, s, _)| *s).sum();
            assert_eq!(total, c.order, "n={n}, q={q}");
            for (_, size, cent) in &c.classes {
                assert_eq!(size * cent, c.order);
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            census(2, 3, 10),
            Err(GlnqError::CapExceeded { .. })
        ));
    }

    #[test]
    fn commuting_pairs_identity_class() {
        // fiber over the identity counts commuting pairs: |G|·#classes
        let c = census_cached(2, 2, DEFAULT_CAP).unwrap();
        let field = make_field(2).unwrap();
        let id_label = {
            let mut m = BTreeMap::new();
            m.insert(
                crate::field::MonicPoly::linear(&field, 1),
                Partition::new(vec![1, 1]),
            );
            ConjClassLabel::new(m)
        };
        let fiber = c.fiber_count(&id_label).unwrap();
        assert_eq!(fiber, Int::from(18)); // commuting pairs in S_3
        assert_eq!(c.commuting_pairs(), Int::from(18));
        assert_eq!(fiber, Int::from(c.order) * Int::from(c.classes.len() as u64));
    }

    #[test]
    fn fiber_vanishes_off_the_derived_subgroup() {
        // commutators have determinant 1: diag(1,2) over F_3 gets fiber 0
        let c = census_cached(2, 3, DEFAULT_CAP).unwrap();
        let field = make_field(3).unwrap();
        let mut m = BTreeMap::new();
        m.insert(
            crate::field::MonicPoly::linear(&field, 1),
            Partition::new(vec![1]),
        );
        m.insert(
            crate::field::MonicPoly::linear(&field, 2),
            Partition::new(vec![1]),
        );
        let label = ConjClassLabel::new(m);
        assert_eq!(c.fiber_count(&label).unwrap(), Int::from(0));
    }

    #[test]
    fn fiber_total_covers_all_pairs() {
        // fibers over conjugate elements have equal size, so summing
        // size(c)·fiber(c_rep) over every class counts all |G|² pairs
        for (n, q) in [(2u32, 2u32), (2, 3)] {
            let c = census_cached(n, q, DEFAULT_CAP).unwrap();
            let field = make_field(q).unwrap();
            let mut total = Int::from(0u32);
            for label in enumerate_conj_classes(n, &field) {
                let idx = c.class_index_of_label(&label).unwrap();
                let size = c.classes[idx as usize].1;
                total += c.fiber_count(&label).unwrap() * Int::from(size);
            }
            assert_eq!(total, Int::from(c.order) * Int::from(c.order), "n={n}, q={q}");
        }
    }

    #[test]
    fn conjugacy_by_rcf() {
        let f3 = make_field(3).unwrap();
        let a = FqMatrix::from_rows(f3.clone(), &[vec![1, 1], vec![0, 2]]);
        let g = FqMatrix::from_rows(f3.clone(), &[vec![1, 2], vec![1, 1]]);
        assert_ne!(g.det(), 0);
        let b = g.mul(&a).mul(&g.inv().unwrap());
        assert!(conjugate_test(&a, &b).unwrap());
        let id = FqMatrix::identity(f3.clone(), 2);
        let jordan = FqMatrix::from_rows(f3.clone(), &[vec![1, 1], vec![0, 1]]);
        assert!(!conjugate_test(&id, &jordan).unwrap());
        // permutation similarity: diag(1,2) ~ diag(2,1)
        let d12 = FqMatrix::diagonal(f3.clone(), &[1, 2]);
        let d21 = FqMatrix::diagonal(f3.clone(), &[2, 1]);
        assert!(conjugate_test(&d12, &d21).unwrap());
    }
}
