//! Exact character theory of the finite general linear groups `GL_n(F_q)`.
//!
//! The crate evaluates irreducible characters of `GL_n(F_q)` on split
//! semisimple classes through Green's character formulas, assembles the
//! Frobenius sum `S(c) = Σ_χ χ(c)/χ(1)` to count fibers of the commutator
//! map `[x,y] = xyx⁻¹y⁻¹`, and cross-checks everything against a
//! brute-force matrix-group oracle. A companion module constructs the
//! diagonal witnesses describing commutator fibers over central elements
//! and verifies their defining identities by exact arithmetic.
//!
//! All computation is exact: rationals are `num::BigRational`, character
//! values live in cyclotomic integer rings `Z[ζ_M]` reduced modulo the
//! M-th cyclotomic polynomial, and finite fields are realised with
//! deterministic moduli and generators so every run is reproducible.
//!
//! The main entry points:
//!
//! - [`partitions`] — integer partitions, `z_ρ`, `β_ρ(q)`, `p(n)`.
//! - [`symfunc`] — `S_n` characters (Murnaghan–Nakayama), immanants,
//!   Schur functions `{λ:q}` by two independent routes.
//! - [`field`] — exact `F_{p^e}` arithmetic, matrices, rational canonical
//!   form.
//! - [`cyclotomic`] — canonical arithmetic in `Q(ζ_M)`.
//! - [`classes`] — conjugacy-class labels, simplices, dual classes,
//!   types, substitution modes.
//! - [`green`] — character degrees and values at split semisimple
//!   classes.
//! - [`frobenius`] — Frobenius sums, fiber counts, closed-form audits.
//! - [`oracle`] — brute-force census and fiber counts for small groups.
//! - [`geometry`] — commutator-fiber witnesses over the center.
//! - [`cli`] — the `glnq` command-line front end.

pub mod classes;
pub mod cli;
pub mod cyclotomic;
pub mod field;
pub mod frobenius;
pub mod geometry;
pub mod green;
pub mod oracle;
pub mod partitions;
pub mod symfunc;

mod error;

pub use error::GlnqError;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, GlnqError>;

/// Exact rational scalar used throughout.
pub type Rat = num::BigRational;

/// Arbitrary-precision integer used for group orders and fiber counts.
pub type Int = num::BigInt;

/// `|GL_n(F_q)| = ∏_{i=0}^{n-1} (q^n - q^i)`.
pub fn general_linear_order(n: u32, q: u32) -> Int {
    let qn = Int::from(q).pow(n);
    let mut order = Int::from(1);
    let mut qi = Int::from(1);
    for _ in 0..n {
        order *= &qn - &qi;
        qi *= q;
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_group_orders() {
        assert_eq!(general_linear_order(2, 2), Int::from(6));
        assert_eq!(general_linear_order(2, 3), Int::from(48));
        assert_eq!(general_linear_order(3, 2), Int::from(168));
        assert_eq!(general_linear_order(3, 4), Int::from(181_440));
    }
}
