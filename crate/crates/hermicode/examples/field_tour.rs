//! A tour of the two-level field tower GF(p) ⊂ GF(q) ⊂ GF(q²).
//!
//! Everything downstream — the curve, the codes, the certificates — runs
//! over GF(q²) and constantly asks two questions about its elements: what
//! is the norm down to GF(q), and what is the trace down to GF(q)?  This
//! example builds GF(16) over GF(4), exercises the arithmetic, and checks
//! the classical identities those maps satisfy.
//!
//! Run with: cargo run --example field_tour

use hermicode::field::FieldContext;

fn main() {
    // GF(16) with distinguished subfield GF(4): p = 2, k = 2, q = p^k.
    let ctx = FieldContext::new(2, 2).expect("2 is prime");
    println!(
        "working field GF({}) over subfield GF({}), modulus {}",
        ctx.size(),
        ctx.q(),
        ctx.modulus_string()
    );

    // Elements are packed base-p digit strings; 0..size-1 enumerates all.
    let a = ctx.element(7);
    let b = ctx.element(11);
    println!("a = {a}, b = {b}");
    println!("a + b = {}", ctx.add(a, b));
    println!("a * b = {}", ctx.mul(a, b));
    println!("a^-1  = {}", ctx.inv(a));
    assert!(ctx.mul(a, ctx.inv(a)) == ctx.one());

    // The Frobenius x ↦ x^q generates the Galois group of GF(q²)/GF(q);
    // applying it twice is the identity.
    for e in ctx.elements() {
        assert_eq!(ctx.frobenius(ctx.frobenius(e)), e);
    }

    // norm(x) = x^{q+1} and trace(x) = x + x^q both land in GF(q).
    for e in ctx.elements() {
        assert!(ctx.is_in_subfield(ctx.norm(e)));
        assert!(ctx.is_in_subfield(ctx.trace(e)));
    }

    // The norm is multiplicative and, restricted to nonzero elements,
    // maps onto GF(q)* with fibers of size q + 1.
    for x in ctx.elements() {
        for y in ctx.elements() {
            assert_eq!(ctx.norm(ctx.mul(x, y)), ctx.mul(ctx.norm(x), ctx.norm(y)));
        }
    }
    for target in ctx.subfield_elements() {
        if target.is_zero() {
            continue;
        }
        let fiber = ctx.elements().filter(|&x| ctx.norm(x) == target).count();
        println!("norm fiber over {target}: {fiber} elements");
        assert_eq!(fiber, (ctx.q() + 1) as usize);
    }

    // The trace is additive and each subfield value has exactly q
    // preimages.
    for x in ctx.elements() {
        for y in ctx.elements() {
            assert_eq!(
                ctx.trace(ctx.add(x, y)),
                ctx.add(ctx.trace(x), ctx.trace(y))
            );
        }
    }
    for target in ctx.subfield_elements() {
        let fiber = ctx.elements().filter(|&y| ctx.trace(y) == target).count();
        println!("trace fiber over {target}: {fiber} elements");
        assert_eq!(fiber, ctx.q() as usize);
    }

    // Subfield membership is exactly "fixed by Frobenius".
    for e in ctx.elements() {
        assert_eq!(ctx.is_in_subfield(e), ctx.frobenius(e) == e);
    }
    assert_eq!(ctx.subfield_elements().len(), ctx.q() as usize);

    println!("all identities verified over GF(16)/GF(4)");
}
