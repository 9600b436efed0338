//! Cross-checking formulas against exhaustive brute force.
//!
//! Every closed-form claim in this crate — distance values, the census of
//! minimum-weight supports, the dependence tests — is backed by a slow,
//! independent oracle that enumerates subsets of curve points directly.
//! This example runs the oracles at small q, where exhaustion is cheap,
//! and confirms they agree with the fast paths.  Budgets keep the
//! combinatorics honest: an oracle refuses up front when the subset count
//! exceeds the limit rather than running forever.
//!
//! Run with: cargo run --example oracle_crosscheck

use std::sync::Arc;

use hermicode::code::HermitianCode;
use hermicode::curve::Divisor;
use hermicode::field::FieldContext;
use hermicode::minwords::distance;
use hermicode::oracle::{
    brute_force_distance, dependence_criteria, enumerate_min_supports, subset_count, Budget,
    OracleError,
};

fn main() {
    // --- Distances at q = 2: every label, exhaustively ------------------
    let ctx2 = Arc::new(FieldContext::new(2, 1).unwrap());
    println!("q = 2: exhaustive distance vs formula");
    for m in [1u64, 2, 3, 4, 5, 6, 8] {
        let code = HermitianCode::build(ctx2.clone(), m).unwrap();
        let formula = distance(2, m).unwrap();
        let brute = brute_force_distance(&code, formula as u32, &Budget::default())
            .unwrap()
            .expect("a dependent subset of size d exists");
        println!("  m = {m}: formula {formula}, exhaustive {brute}");
        assert_eq!(brute, formula);
    }

    // --- Distance at q = 3 ----------------------------------------------
    let ctx3 = Arc::new(FieldContext::new(3, 1).unwrap());
    let code = HermitianCode::build(ctx3.clone(), 9).unwrap();
    let brute = brute_force_distance(&code, 6, &Budget::default()).unwrap();
    println!("q = 3, m = 9: exhaustive {brute:?}, formula {}", code.distance());
    assert_eq!(brute, Some(6));
    // Searching strictly below the distance proves a floor: no dependent
    // 5-subset exists.
    assert_eq!(brute_force_distance(&code, 5, &Budget::default()).unwrap(), None);

    // --- Budget refusal --------------------------------------------------
    let needed = subset_count(code.n(), 6);
    let tiny = Budget::new(1000);
    match brute_force_distance(&code, 6, &tiny) {
        Err(OracleError::BudgetExceeded { required, limit }) => {
            println!("budget refusal: needs {required} subsets, limit {limit}");
            assert_eq!(required, needed);
        }
        other => panic!("expected a budget refusal, got {other:?}"),
    }

    // --- Census of minimum supports at q = 3, m = 8 ----------------------
    // The census enumerates EVERY minimum-weight support and classifies
    // each one through the certifying classifier.
    let code8 = HermitianCode::build(ctx3.clone(), 8).unwrap();
    let report = enumerate_min_supports(&code8, &Budget::default()).unwrap();
    println!(
        "q = 3, m = 8: census finds {} minimum supports, families {:?}",
        report.member_count(),
        report.families
    );
    assert_eq!(report.distance_found, 4);
    assert_eq!(report.member_count(), 54);
    assert_eq!(report.families.get("type-i"), Some(&54));

    // Each census member is a sorted index set of size d.
    for indices in &report.min_supports {
        assert_eq!(indices.len(), 4);
        assert!(indices.windows(2).all(|w| w[0] < w[1]));
    }

    // --- Three independent dependence tests ------------------------------
    // A point set supports a codeword iff its parity columns are
    // dependent iff its vanishing-ideal footprint reaches weight m+1.
    // The three routes must agree on every input.
    let points = code8.points();
    let member = Divisor::from_indices(code8.ctx(), points, &report.min_supports[0]).unwrap();
    let (a, b, c) = dependence_criteria(&code8, &member).unwrap();
    println!("dependence tests on a census member: {a}, {b}, {c}");
    assert!(a && b && c);
    // A full vertical fiber has only q = 3 points, below d = 4: all three
    // routes must call it independent.
    let fiber = Divisor::from_indices(code8.ctx(), points, &[0, 1, 2]).unwrap();
    let (a, b, c) = dependence_criteria(&code8, &fiber).unwrap();
    println!("dependence tests on a 3-point fiber: {a}, {b}, {c}");
    assert!(!a && !b && !c);

    println!("\noracles agree with the formulas at q = 2 and q = 3");
}
