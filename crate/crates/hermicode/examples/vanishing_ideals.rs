//! Vanishing ideals of point sets and their footprints.
//!
//! Given a finite set of curve points, the polynomials vanishing on all
//! of them form an ideal; its Gröbner basis and footprint (the staircase
//! of monomials outside the leading-term ideal) are the algebraic
//! fingerprint this crate uses everywhere: the footprint size equals the
//! number of points, and whether the footprint reaches weight m+1 decides
//! whether the set supports a codeword of C_m.  This example computes
//! both for hand-picked sets over GF(16) and checks the structural facts.
//!
//! Run with: cargo run --example vanishing_ideals

use hermicode::curve::{enumerate_points, points_on_vertical_line};
use hermicode::field::FieldContext;
use hermicode::groebner::vanishing_ideal;

fn main() {
    let ctx = FieldContext::new(2, 2).unwrap();
    let q = ctx.q();
    let points = enumerate_points(&ctx);

    // --- One vertical fiber ------------------------------------------------
    let fiber = points_on_vertical_line(&ctx, ctx.zero());
    let (gb, footprint) = vanishing_ideal(&ctx, fiber.points()).unwrap();
    println!(
        "fiber x = 0 ({} points): Groebner basis {{{}}}",
        fiber.degree(),
        gb.elements()
            .iter()
            .map(|f| f.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );
    println!(
        "  footprint: {}",
        footprint
            .monomials()
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );
    // |footprint| = |points| always.
    assert_eq!(footprint.monomials().len(), fiber.degree());
    // Every basis element really vanishes on every point of the set.
    for f in gb.elements() {
        for &pt in fiber.points() {
            assert!(f.eval(&ctx, pt.x, pt.y).is_zero());
        }
    }
    // The footprint is closed under division: with x^r y^s it contains
    // every x^r' y^s' with r' ≤ r, s' ≤ s.
    let monos = footprint.monomials();
    for t in monos {
        for r in 0..=t.r {
            for s in 0..=t.s {
                assert!(monos.iter().any(|u| u.r == r && u.s == s));
            }
        }
    }

    // --- The full point set --------------------------------------------
    // The ideal of ALL q³ points has the fixed shape ⟨x^{q+1} - ...,
    // x·(y^{q²-q} - ...), y^{q²} - ...⟩; its footprint has q³ monomials.
    let (gb, footprint) = vanishing_ideal(&ctx, &points).unwrap();
    println!(
        "\nall {} points: {} basis elements, footprint size {}",
        points.len(),
        gb.elements().len(),
        footprint.monomials().len()
    );
    assert_eq!(footprint.monomials().len(), points.len());
    let leading: Vec<String> = gb.leading_monomials().iter().map(|t| t.to_string()).collect();
    println!("  leading monomials: {leading:?}");
    assert_eq!(gb.elements().len(), 3);
    let mut leads: Vec<(u32, u32)> = gb.leading_monomials().iter().map(|t| (t.r, t.s)).collect();
    leads.sort();
    assert_eq!(
        leads,
        vec![(0, q * q), (1, q * q - q), (q + 1, 0)],
        "the leading monomials are y^{{q²}}, x*y^{{q²-q}}, x^{{q+1}}"
    );

    // --- Generic sets vs structured sets --------------------------------
    // Eight points on two fibers have the wide, short staircase that
    // minimum supports of C_18 exhibit; eight generic points usually
    // produce a different footprint shape.
    let mut eight: Vec<_> = points[..4].to_vec();
    eight.extend_from_slice(&points[4..8]);
    let (_, fp_structured) = vanishing_ideal(&ctx, &eight).unwrap();
    let structured: Vec<String> = fp_structured.monomials().iter().map(|t| t.to_string()).collect();
    println!("\ntwo fibers: footprint {structured:?}");

    let spread: Vec<_> = points.iter().copied().step_by(9).take(8).collect();
    let (_, fp_generic) = vanishing_ideal(&ctx, &spread).unwrap();
    let generic: Vec<String> = fp_generic.monomials().iter().map(|t| t.to_string()).collect();
    println!("eight spread-out points: footprint {generic:?}");
    assert_eq!(fp_generic.monomials().len(), 8);

    // The maximal footprint weight is what decides codeword support:
    // weight(t) = r·q + s·(q+1) for t = x^r y^s.
    println!(
        "max monomial weight: two fibers {:?}, spread points {:?}",
        fp_structured.max_w_weight(q),
        fp_generic.max_w_weight(q)
    );
    // Two fibers reach exactly weight 19 = m+1 for m = 18: that is why
    // they support a minimum-weight codeword of C_18.
    assert_eq!(fp_structured.max_w_weight(q), Some(19));

    println!("\nvanishing-ideal structure verified over GF(16)");
}
