//! Property tests for the algebraic invariants that hold on whole input
//! families rather than hand-picked examples.

use proptest::prelude::*;

use glnq::classes::class_label;
use glnq::cyclotomic::CycValue;
use glnq::field::{make_field, FqMatrix};
use glnq::frobenius::{enumerate_split_semisimple, fiber_size_via_characters};
use glnq::oracle::census_cached;
use glnq::partitions::{enumerate_partitions, Partition};
use glnq::symfunc::{reference, sn_character};
use glnq::{Int, Rat};

fn arb_partition(max_n: u32) -> impl Strategy<Value = Partition> {
    (0..=max_n).prop_flat_map(|n| {
        let all = enumerate_partitions(n);
        let len = all.len();
        (0..len).prop_map(move |i| all[i].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn beta_multiplicative_under_union(
        nu in arb_partition(6),
        mu in arb_partition(6),
        qv in 2i64..=7,
    ) {
        let q = Rat::from(Int::from(qv));
        let joint = nu.union(&mu).beta(&q).unwrap();
        let split = nu.beta(&q).unwrap() * mu.beta(&q).unwrap();
        prop_assert_eq!(joint, split);
    }

    #[test]
    fn murnaghan_nakayama_matches_brute_force(
        n in 1u32..=5,
        i in 0usize..1000,
        j in 0usize..1000,
    ) {
        let parts = enumerate_partitions(n);
        let lam = &parts[i % parts.len()];
        let rho = &parts[j % parts.len()];
        prop_assert_eq!(
            sn_character(lam, rho).unwrap(),
            reference::sn_character_brute(lam, rho)
        );
    }

    #[test]
    fn cyclotomic_ring_axioms(
        m1 in 1u32..=24,
        m2 in 1u32..=24,
        e1 in 0i64..24,
        e2 in 0i64..24,
        s in -5i64..=5,
    ) {
        let a = CycValue::root_of_unity(m1, e1).scalar_mul(&Rat::from(Int::from(s)));
        let b = CycValue::root_of_unity(m2, e2);
        let c = CycValue::root_of_unity(m1.max(m2), e1 + e2);
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.sub(&a), CycValue::zero());
    }

    #[test]
    fn root_of_unity_order_divides_conductor(m in 1u32..=30, e in 0i64..30) {
        let z = CycValue::root_of_unity(m, e);
        let mut acc = CycValue::one();
        for _ in 0..m {
            acc = acc.mul(&z);
        }
        prop_assert_eq!(acc, CycValue::one());
    }

    #[test]
    fn field_arithmetic_axioms(
        qi in 0usize..6,
        a in 0u32..25,
        b in 0u32..25,
        c in 0u32..25,
    ) {
        let q = [2u32, 3, 4, 5, 9, 25][qi];
        let field = make_field(q).unwrap();
        let (a, b, c) = (a % q, b % q, c % q);
        prop_assert_eq!(field.mul(a, field.mul(b, c)), field.mul(field.mul(a, b), c));
        prop_assert_eq!(field.mul(a, field.add(b, c)), field.add(field.mul(a, b), field.mul(a, c)));
        if a != 0 {
            prop_assert_eq!(field.mul(a, field.inv(a).unwrap()), 1);
        }
        // Frobenius is additive
        let p = field.p() as u64;
        prop_assert_eq!(
            field.pow(field.add(a, b), p),
            field.add(field.pow(a, p), field.pow(b, p))
        );
    }

    #[test]
    fn rcf_is_a_conjugation_invariant(
        entries in proptest::collection::vec(0u32..5, 9),
        conj in proptest::collection::vec(0u32..5, 9),
    ) {
        let field = make_field(5).unwrap();
        let a = FqMatrix { field: field.clone(), n: 3, data: entries };
        let g = FqMatrix { field: field.clone(), n: 3, data: conj };
        prop_assume!(g.det() != 0);
        let b = g.mul(&a).mul(&g.inv().unwrap());
        prop_assert_eq!(a.rcf(), b.rcf());
        if a.det() != 0 {
            prop_assert_eq!(class_label(&a).unwrap(), class_label(&b).unwrap());
        }
    }
}

#[test]
fn fiber_matches_oracle_including_trivial_unit_groups() {
    // the remaining corners of the supported sweep: GL_2(F_2), GL_3(F_2)
    for (n, q) in [(2u32, 2u32), (3, 2)] {
        let field = make_field(q).unwrap();
        let census = census_cached(n, q, 10_000_000).unwrap();
        for c in enumerate_split_semisimple(&field, n) {
            let via_chars = fiber_size_via_characters(&c).unwrap();
            let via_oracle = census.fiber_count(&c.to_label()).unwrap();
            assert_eq!(via_chars, via_oracle, "n={n}, q={q}, {c}");
        }
    }
}
