//! The Hermitian curve and how lines meet it.
//!
//! The affine Hermitian curve over GF(q²) is the locus norm(x) = trace(y).
//! It has exactly q³ rational affine points, and its intersections with
//! lines are the geometric engine behind every minimum-weight support in
//! this crate: vertical lines always meet it in q points, non-vertical
//! lines in 1 or q+1 points.  This example verifies all of that by direct
//! enumeration for q = 2, 3, 4.
//!
//! Run with: cargo run --example curve_census

use hermicode::curve::{
    enumerate_points, is_on_curve, points_on_horizontal_line, points_on_vertical_line, CurvePoint,
};
use hermicode::field::FieldContext;

fn main() {
    for (p, k) in [(2, 1), (3, 1), (2, 2)] {
        let ctx = FieldContext::new(p, k).unwrap();
        let q = ctx.q() as usize;
        let points = enumerate_points(&ctx);
        println!(
            "q = {q}: the curve norm(x) = trace(y) has {} affine points (q³ = {})",
            points.len(),
            q * q * q
        );
        assert_eq!(points.len(), q * q * q);
        assert!(points.iter().all(|&pt| is_on_curve(&ctx, pt)));

        // Vertical lines x = x₀: the equation trace(y) = norm(x₀) always
        // has exactly q solutions, whatever x₀ is.
        for x0 in ctx.elements() {
            let fiber = points_on_vertical_line(&ctx, x0);
            assert_eq!(fiber.degree(), q);
        }
        println!("  every vertical line meets the curve in exactly q = {q} points");

        // Horizontal lines y = y₀: norm(x) = trace(y₀) has q+1 solutions
        // when trace(y₀) ≠ 0 (a norm fiber) and exactly one (x = 0) when
        // trace(y₀) = 0.
        let mut tangent = 0;
        let mut secant = 0;
        for y0 in ctx.elements() {
            let cut = points_on_horizontal_line(&ctx, y0).degree();
            if ctx.trace(y0).is_zero() {
                assert_eq!(cut, 1);
                tangent += 1;
            } else {
                assert_eq!(cut, q + 1);
                secant += 1;
            }
        }
        println!(
            "  horizontal lines: {tangent} meet it once, {secant} meet it in q+1 = {} points",
            q + 1
        );
        assert_eq!(tangent, q);
        assert_eq!(secant, q * q - q);

        // Sloped lines y = ux + v meet the curve in at most q+1 points,
        // and sloped lines never exceed what horizontal secants achieve.
        let mut histogram = std::collections::BTreeMap::new();
        for u in ctx.elements() {
            for v in ctx.elements() {
                let cut = points
                    .iter()
                    .filter(|pt| pt.y == ctx.add(ctx.mul(u, pt.x), v))
                    .count();
                *histogram.entry(cut).or_insert(0usize) += 1;
                assert!(cut <= q + 1);
            }
        }
        println!("  line intersection histogram (size -> count): {histogram:?}");

        // The points come back sorted, so positions are stable: this
        // canonical order is what codeword coordinates refer to.
        let mut sorted = points.clone();
        sorted.sort();
        assert_eq!(points, sorted);

        // Membership test agrees with the defining equation.
        let off = CurvePoint {
            x: ctx.one(),
            y: ctx.zero(),
        };
        if !points.contains(&off) {
            assert!(!is_on_curve(&ctx, off));
        }
    }
    println!("curve geometry verified for q = 2, 3, 4");
}
