//! Norm/trace grids: minimum supports cut by two curves.
//!
//! Besides the supports cut by a single curve, certain labels admit
//! minimum-weight supports of a second kind: grids {x : norm(x) = c} ×
//! {y : trace(y) = c}, which are complete intersections of two curves
//! with leading monomials x^q and y^μ.  This example enumerates grids at
//! q = 4, certifies their membership for the label m = 16, and shows the
//! subtlety that motivates exact-support search: C_18 has the same
//! distance 8, yet carries no codeword supported exactly on a grid.
//!
//! Run with: cargo run --example grid_supports

use std::sync::Arc;

use hermicode::code::{ExactSupportSearch, HermitianCode};
use hermicode::field::FieldContext;
use hermicode::minwords::{
    classify_support, construct_type_ii_support, type_ii_label, type_ii_mu, Verdict,
};

fn main() {
    let ctx = Arc::new(FieldContext::new(2, 2).unwrap());
    let q = ctx.q();

    // Which labels admit grids, and with how many rows?  μ rows of q
    // columns give a support of size μq, and the label pairs with μ.
    println!("grid labels at q = {q}:");
    for mu in 1..q {
        let m = type_ii_label(q, mu).unwrap();
        println!("  μ = {mu}: label m = {m}, grid size {}", mu * q);
        assert_eq!(type_ii_mu(q, m), Some(mu));
    }
    assert_eq!(type_ii_label(q, 2), Some(16));

    // Build the canonical grid for μ = 2 at m = 16: pick a nonzero c in
    // GF(4); the defaults take the first q of the q+1 norm preimages and
    // the first μ of the q trace preimages.
    let c16 = HermitianCode::build(ctx.clone(), 16).unwrap();
    let c = ctx
        .elements()
        .find(|&e| !e.is_zero() && ctx.is_in_subfield(e))
        .unwrap();
    let (grid, f1, f2) = construct_type_ii_support(&ctx, 2, c, None, None).unwrap();
    println!(
        "\nm = 16: grid of {} points cut by F1 = {f1} and F2 = {f2}",
        grid.degree()
    );
    assert_eq!(grid.degree() as u64, c16.distance());

    let cert = classify_support(&c16, &grid).unwrap();
    println!("  classifier verdict in C_16: {}", cert.verdict);
    assert_eq!(cert.verdict, Verdict::MinWeightTypeII);
    assert_eq!(cert.witnesses.len(), 2);

    // Custom row/column choices: any 4 of the 5 norm preimages and any
    // 2 of the 4 trace preimages form a grid support as well.
    let norm_pre: Vec<_> = ctx.elements().filter(|&x| ctx.norm(x) == c).collect();
    let trace_pre: Vec<_> = ctx.elements().filter(|&y| ctx.trace(y) == c).collect();
    assert_eq!(norm_pre.len(), (q + 1) as usize);
    assert_eq!(trace_pre.len(), q as usize);
    let alphas = &norm_pre[1..]; // drop the first instead of the last
    let betas = &trace_pre[2..]; // a different pair of rows
    let (other, _, _) = construct_type_ii_support(&ctx, 2, c, Some(alphas), Some(betas)).unwrap();
    let cert = classify_support(&c16, &other).unwrap();
    assert_eq!(cert.verdict, Verdict::MinWeightTypeII);
    println!("  a differently chosen grid is certified too");

    // Count all grids at m = 16: 3 choices of c, C(5,4) column sets,
    // C(4,2) row sets.
    let mut count = 0;
    for c in ctx.subfield_elements() {
        if c.is_zero() {
            continue;
        }
        count += 5 * 6; // C(5,4) · C(4,2)
        let (g, _, _) = construct_type_ii_support(&ctx, 2, c, None, None).unwrap();
        assert_eq!(g.degree(), 8);
    }
    println!("  grids at m = 16 in total: {count}");
    assert_eq!(count, 90);

    // The same 8-point grid supports NO codeword of C_18, even though
    // C_18 also has distance 8: minimum supports are label-specific.
    let c18 = HermitianCode::build(ctx.clone(), 18).unwrap();
    assert_eq!(c18.distance(), 8);
    match c18.codeword_supported_exactly(&grid).unwrap() {
        ExactSupportSearch::ProvenAbsent => {
            println!("\nm = 18: no codeword is supported exactly on the grid (proven)");
        }
        other => panic!("expected a proof of absence, got {other:?}"),
    }
    // Indeed the classifier rules the grid out for C_18 altogether.
    let cert = classify_support(&c18, &grid).unwrap();
    assert_eq!(cert.verdict, Verdict::NotMinimum);

    println!("\ngrid supports verified at q = {q}");
}
