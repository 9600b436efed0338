//! The numerical semigroup ⟨q, q+1⟩ and the distance formula it drives.
//!
//! Dual one-point codes on the Hermitian curve are indexed by a label m,
//! and everything combinatorial about them — which labels give distinct
//! codes, what the minimum distance is, when two labels give the same
//! distance — reduces to arithmetic in the semigroup generated by q and
//! q+1.  This example walks that arithmetic at q = 4 and checks the
//! distance values against exhaustive small cases elsewhere in the suite.
//!
//! Run with: cargo run --example semigroup_walkthrough

use hermicode::semigroup::{
    canonical_label, code_label_info, delta, gaps, genus, is_code_label, lambda_membership,
    max_label, staircase_basis_truncated,
};
use hermicode::minwords::distance;

fn main() {
    let q = 4u32;

    // The gaps are the q(q-1)/2 integers missing from ⟨q, q+1⟩.
    let g = gaps(q);
    println!("gaps of ⟨{q}, {}⟩: {g:?}", q + 1);
    assert_eq!(g, vec![1, 2, 3, 6, 7, 11]);
    assert_eq!(g.len() as u64, genus(q));

    // Membership comes with the canonical representation n = aq + b(q+1),
    // the unique one with 0 ≤ a ≤ q.
    for n in 0..40u64 {
        match lambda_membership(q, n) {
            Some(rep) => {
                assert_eq!(u64::from(rep.a) * 4 + rep.b * 5, n);
                assert!(rep.a <= q);
            }
            None => assert!(g.contains(&n)),
        }
    }

    // A label m indexes a proper, distinct code exactly when m+1 is a
    // monomial weight; ascending labels strictly shrink the code.
    let labels: Vec<u64> = (0..=max_label(q)).filter(|&m| is_code_label(q, m)).collect();
    println!("first code labels at q = {q}: {:?}", &labels[..12]);
    // A non-label points at the next label: the two index the same code.
    assert!(!is_code_label(q, 10));
    assert_eq!(canonical_label(q, 10), Some(11));

    // The stabilized label m̃ ≥ m is where the "excess" δ(m) = m - 2g + 2
    // first lands in the semigroup; past the small-m regime the distance
    // is exactly δ(m̃).
    println!("\n  m   m̃   δ   δ̃  phase  distance");
    for m in 11..=22 {
        if !is_code_label(q, m) {
            continue;
        }
        let info = code_label_info(q, m).unwrap();
        let d = distance(q, m).unwrap();
        println!(
            "  {m:2}  {:2}  {:2}  {:2}   {:3}   {d:2}",
            info.m_tilde, info.delta, info.delta_tilde, info.phase.to_string()
        );
        assert_eq!(info.delta, delta(q, m));
        assert_eq!(info.delta_tilde as i64, delta(q, info.m_tilde));
    }

    // Spot values: four consecutive labels share distance 4, and the
    // stabilization plateau 16..18 shares distance 8.
    assert_eq!(distance(q, 11).unwrap(), 4);
    assert_eq!(distance(q, 14).unwrap(), 4);
    assert_eq!(distance(q, 16).unwrap(), 8);
    assert_eq!(distance(q, 18).unwrap(), 8);
    assert_eq!(distance(q, 22).unwrap(), 12);

    // The staircase basis below a label m is the footprint-side view of
    // the same data: monomials x^r y^s with r ≤ q whose weight
    // rq + s(q+1) is at most m.
    let basis = staircase_basis_truncated(q, 18);
    println!("\nmonomials of weight ≤ 18: {} of them", basis.len());
    assert_eq!(basis.len(), 13);
    for t in &basis {
        assert!(u64::from(t.r) * 4 + u64::from(t.s) * 5 <= 18);
        assert!(t.r <= q);
    }

    println!("\nsemigroup arithmetic verified at q = {q}");
}
