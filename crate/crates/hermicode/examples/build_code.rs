//! Building a dual one-point Hermitian code and reading off its data.
//!
//! The code C_m lives on the q³ affine points of the curve: a vector is a
//! codeword exactly when it pairs to zero with every monomial of weight
//! at most m.  This example builds C_18 over GF(16), inspects its
//! parameters and parity-check matrix, and demonstrates the two support
//! queries everything else is built from.
//!
//! Run with: cargo run --example build_code

use std::sync::Arc;

use hermicode::code::{ExactSupportSearch, HermitianCode};
use hermicode::curve::Divisor;
use hermicode::field::FieldContext;

fn main() {
    let ctx = Arc::new(FieldContext::new(2, 2).unwrap());
    let code = HermitianCode::build(ctx.clone(), 18).unwrap();

    println!(
        "C_{} over GF({}): length n = {}, dimension k = {}, distance d = {}",
        code.m(),
        ctx.size(),
        code.n(),
        code.dim(),
        code.distance()
    );
    assert_eq!((code.n(), code.dim(), code.distance()), (64, 51, 8));

    // The parity-check matrix has one row per monomial of weight ≤ m and
    // one column per curve point, in the canonical sorted point order.
    let parity = code.parity_check();
    println!(
        "parity check: {} rows (basis monomials) x {} columns (points)",
        parity.rows(),
        parity.cols()
    );
    assert_eq!(parity.rows(), code.basis_monomials().len());
    assert_eq!(parity.cols(), code.n());
    println!(
        "weighing monomials: {}",
        code.basis_monomials()
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );

    // Dimension is n minus the (always full) row rank.
    assert_eq!(code.dim(), code.n() - parity.rows());

    // Query 1: is there a nonzero codeword supported WITHIN a point set?
    // Two full vertical fibers (8 points) carry one; a single fiber
    // (4 points < d = 8) cannot.
    let points = code.points();
    let two_fibers = Divisor::from_indices(code.ctx(), points, &(0..8).collect::<Vec<_>>()).unwrap();
    let one_fiber = Divisor::from_indices(code.ctx(), points, &(0..4).collect::<Vec<_>>()).unwrap();
    let inside = code.codeword_supported_within(&two_fibers).unwrap();
    assert!(inside.is_some());
    assert!(code.codeword_supported_within(&one_fiber).unwrap().is_none());

    // Every codeword must pair to zero with all parity rows.
    let w = inside.unwrap();
    for i in 0..parity.rows() {
        let mut acc = ctx.zero();
        for (j, &c) in w.coords().iter().enumerate() {
            acc = ctx.add(acc, ctx.mul(c, parity.elem(&ctx, i, j)));
        }
        assert!(acc.is_zero(), "row {i} fails to annihilate the codeword");
    }
    println!("found a codeword inside two fibers; all parity rows annihilate it");

    // Query 2: is there a codeword supported EXACTLY on the set?  For the
    // two fibers the answer is yes — they are a minimum-weight support.
    match code.codeword_supported_exactly(&two_fibers).unwrap() {
        ExactSupportSearch::Found(w) => {
            let weight = w.coords().iter().filter(|c| !c.is_zero()).count();
            println!("exact-support search: found a codeword of weight {weight}");
            assert_eq!(weight as u64, code.distance());
        }
        other => panic!("expected a codeword on two full fibers, got {other:?}"),
    }

    // Labels that are not code labels are rejected with the canonical
    // label of the code they duplicate (10+1 = 11 is a semigroup gap).
    let err = HermitianCode::build(ctx.clone(), 10).unwrap_err();
    println!("building C_10 fails: {err}");

    println!("code construction verified for C_18 over GF(16)");
}
