//! The numerical semigroup Λ = ⟨q, q+1⟩ and the combinatorics drawn from it:
//! gap sets, the monomial staircase basis of the coordinate ring of the full
//! point set, code labels, and the derived quantities (m̃, δ, δ̃, phase,
//! μ, λ) that drive the distance formula and the minimum-word constructions.
//!
//! Key facts used throughout:
//!
//! * every n ∈ Λ has a unique representation n = a·q + b·(q+1) with
//!   0 ≤ a ≤ q, recovered arithmetically in O(1);
//! * the coordinate ring of the q³ affine curve points has the monomial
//!   basis 𝓑 = {y^s : s ≤ q²−1} ∪ {x^r y^s : 1 ≤ r ≤ q, s ≤ q²−q−1};
//!   its members carry pairwise distinct weighted degrees, and the monomial
//!   order agrees with the weight order on 𝓑;
//! * m is a *code label* exactly when m+1 is the weight of a basis monomial;
//!   labels are the canonical indices for the codes built in [`crate::code`];
//! * δ(m) = m − (q−2)(q+1), and m̃ ≥ m is the first index where both
//!   m̃+1 is a basis weight and δ(m̃) ∈ Λ; δ̃ = δ(m̃) equals the minimum
//!   distance everywhere past the early labels, and its semigroup
//!   representation δ̃ = μq + λ(q+1) names the curves that cut out
//!   minimum-weight supports.

use std::error::Error;
use std::fmt;

use crate::groebner::Monomial;

/// The unique representation n = a·q + b·(q+1) with 0 ≤ a ≤ q.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LambdaRep {
    pub n: u64,
    pub a: u32,
    pub b: u64,
}

/// Errors from label bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SemigroupError {
    /// m exceeds the largest meaningful label, (q²−1)(q+1) − 1.
    LabelOutOfRange { m: u64, max: u64 },
    /// m is not a code label; `canonical` names the label of the code that
    /// the truncation at m actually produces, when one exists.
    NotACodeLabel { m: u64, canonical: Option<u64> },
}

impl fmt::Display for SemigroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemigroupError::LabelOutOfRange { m, max } => {
                write!(f, "index {m} is out of range; the largest label is {max}")
            }
            SemigroupError::NotACodeLabel { m, canonical } => match canonical {
                Some(c) => write!(f, "{m} is not a code label (the same code is labeled {c})"),
                None => write!(f, "{m} is not a code label"),
            },
        }
    }
}

impl Error for SemigroupError {}

/// Membership test for Λ = ⟨q, q+1⟩ with the canonical representation.
/// Since a·q + b·(q+1) ≡ −a (mod q+1), the only possible a in [0, q] is
/// (q+1 − n mod (q+1)) mod (q+1); n is a member iff a·q ≤ n.
pub fn lambda_membership(q: u32, n: u64) -> Option<LambdaRep> {
    assert!(q >= 2, "q must be at least 2");
    let q1 = q as u64 + 1;
    let a = ((q1 - n % q1) % q1) as u32;
    let aq = a as u64 * q as u64;
    if aq > n {
        return None;
    }
    let b = (n - aq) / q1;
    Some(LambdaRep { n, a, b })
}

/// The genus q(q−1)/2: the number of gaps of Λ.
pub fn genus(q: u32) -> u64 {
    (q as u64) * (q as u64 - 1) / 2
}

/// The positive integers outside Λ, ascending.  The largest is q²−q−1.
pub fn gaps(q: u32) -> Vec<u64> {
    let frobenius = (q as u64) * (q as u64) - (q as u64) - 1;
    (1..=frobenius)
        .filter(|&n| lambda_membership(q, n).is_none())
        .collect()
}

/// The monomial basis 𝓑 of the coordinate ring of the q³ curve points,
/// ascending in the monomial order (equivalently, in weighted degree).
pub fn staircase_basis(q: u32) -> Vec<Monomial> {
    let q = q as u64;
    let mut monos: Vec<Monomial> = Vec::with_capacity((q * q * q) as usize);
    for s in 0..q * q {
        monos.push(Monomial::new(0, s as u32));
    }
    for r in 1..=q {
        for s in 0..q * q - q {
            monos.push(Monomial::new(r as u32, s as u32));
        }
    }
    monos.sort();
    monos
}

/// The truncation 𝓑_m: basis monomials of weighted degree at most m,
/// ascending.  These index the parity-check rows of the code labeled m.
pub fn staircase_basis_truncated(q: u32, m: u64) -> Vec<Monomial> {
    staircase_basis(q)
        .into_iter()
        .filter(|mono| mono.w_weight(q) <= m)
        .collect()
}

/// Is w the weighted degree of some basis monomial?
pub fn weight_in_staircase(q: u32, w: u64) -> bool {
    basis_monomial_of_weight(q, w).is_some()
}

/// The unique basis monomial of weighted degree w, when one exists.  The
/// canonical semigroup representation (a, b) of w gives the candidate
/// x^a y^b; it lies in 𝓑 iff b respects the staircase bounds.
pub fn basis_monomial_of_weight(q: u32, w: u64) -> Option<Monomial> {
    let rep = lambda_membership(q, w)?;
    let q = q as u64;
    let in_basis = if rep.a == 0 {
        rep.b <= q * q - 1
    } else {
        rep.b <= q * q - q - 1
    };
    if in_basis {
        Some(Monomial::new(rep.a, rep.b as u32))
    } else {
        None
    }
}

/// The largest code label, (q²−1)(q+1) − 1 = q³ + q² − q − 2: one less than
/// the top basis weight.
pub fn max_label(q: u32) -> u64 {
    let q = q as u64;
    (q * q - 1) * (q + 1) - 1
}

/// Is m a code label (m+1 a basis weight, within range)?
pub fn is_code_label(q: u32, m: u64) -> bool {
    m <= max_label(q) && weight_in_staircase(q, m + 1)
}

/// The label of the code actually produced by truncating the basis at m:
/// the predecessor of the smallest basis weight exceeding m.  Returns None
/// when m exceeds the largest label (the truncation is then the whole basis
/// and no labeled code matches).
pub fn canonical_label(q: u32, m: u64) -> Option<u64> {
    if m > max_label(q) {
        return None;
    }
    let mut w = m + 1;
    loop {
        if weight_in_staircase(q, w) {
            return Some(w - 1);
        }
        w += 1;
        debug_assert!(w <= max_label(q) + 1, "basis weights are unbounded above only past the top label");
    }
}

/// δ(m) = m − (q−2)(q+1); negative for small m when q > 2.
pub fn delta(q: u32, m: u64) -> i64 {
    m as i64 - ((q as i64 - 2) * (q as i64 + 1))
}

/// The four index regimes, split by the thresholds q²−1, 2q²−2q−2 and q³−1.
/// Later thresholds win when they coincide (which happens at q=2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Phase {
    I,
    II,
    III,
    IV,
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Phase::I => "I",
            Phase::II => "II",
            Phase::III => "III",
            Phase::IV => "IV",
        };
        write!(f, "{s}")
    }
}

/// Everything the rest of the crate wants to know about an index m.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CodeLabelInfo {
    pub m: u64,
    /// The first m′ ≥ m with m′+1 a basis weight and δ(m′) ∈ Λ.
    pub m_tilde: u64,
    pub delta: i64,
    /// δ̃ = δ(m̃).
    pub delta_tilde: u64,
    pub phase: Phase,
    /// μ and λ from the canonical representation δ̃ = μq + λ(q+1).
    pub mu: u32,
    pub lambda: u64,
}

fn phase_of(q: u32, m: u64) -> Phase {
    let q = q as u64;
    if m >= q * q * q - 1 {
        Phase::IV
    } else if m >= 2 * q * q - 2 * q - 2 {
        Phase::III
    } else if m >= q * q - 1 {
        Phase::II
    } else {
        Phase::I
    }
}

/// Compute m̃, δ, δ̃, the phase, and (μ, λ) for 0 ≤ m ≤ max_label(q).
pub fn code_label_info(q: u32, m: u64) -> Result<CodeLabelInfo, SemigroupError> {
    let max = max_label(q);
    if m > max {
        return Err(SemigroupError::LabelOutOfRange { m, max });
    }
    let mut m_tilde = m;
    let (m_tilde, delta_tilde) = loop {
        if weight_in_staircase(q, m_tilde + 1) {
            let d = delta(q, m_tilde);
            if d >= 0 {
                if lambda_membership(q, d as u64).is_some() {
                    break (m_tilde, d as u64);
                }
            }
        }
        m_tilde += 1;
        assert!(
            m_tilde <= max,
            "the stabilisation search always succeeds by the top label"
        );
    };
    let rep = lambda_membership(q, delta_tilde).expect("delta_tilde lies in the semigroup");
    Ok(CodeLabelInfo {
        m,
        m_tilde,
        delta: delta(q, m),
        delta_tilde,
        phase: phase_of(q, m),
        mu: rep.a,
        lambda: rep.b,
    })
}

/// Minimum distance of the code labeled m.  In the early regime
/// (m ≤ q²−2) the label sits in a segment hq−1 ≤ m ≤ h(q+1)−1 and the
/// distance is h+1, where h = a+b for the representation of m+1; from
/// q²−q onward it is δ̃.  On the overlap q²−q ≤ m ≤ q²−2 both formulas
/// apply and are asserted equal.
pub(crate) fn distance_value(q: u32, m: u64) -> Result<u64, SemigroupError> {
    if !is_code_label(q, m) {
        return Err(SemigroupError::NotACodeLabel {
            m,
            canonical: canonical_label(q, m),
        });
    }
    let info = code_label_info(q, m)?;
    let qq = q as u64 * q as u64;
    if m <= qq - 2 {
        let rep = lambda_membership(q, m + 1).expect("label weights lie in the semigroup");
        let h = rep.a as u64 + rep.b;
        let early = h + 1;
        if m >= qq - q as u64 {
            assert_eq!(
                early, info.delta_tilde,
                "the two distance formulas must agree on the overlap range"
            );
        }
        Ok(early)
    } else {
        Ok(info.delta_tilde)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gap_sets_match_known_values() {
        assert_eq!(gaps(2), vec![1]);
        assert_eq!(gaps(3), vec![1, 2, 5]);
        assert_eq!(gaps(4), vec![1, 2, 3, 6, 7, 11]);
        for q in 2..=8 {
            assert_eq!(gaps(q).len() as u64, genus(q), "gap count at q={q}");
        }
    }

    #[test]
    fn representation_is_canonical_and_unique() {
        for q in [2u32, 3, 4, 5] {
            for n in 0..200u64 {
                match lambda_membership(q, n) {
                    Some(rep) => {
                        assert_eq!(rep.a as u64 * q as u64 + rep.b * (q as u64 + 1), n);
                        assert!(rep.a <= q);
                        // Uniqueness: no other a in [0, q] works.
                        let mut count = 0;
                        for a in 0..=q as u64 {
                            let aq = a * q as u64;
                            if aq <= n && (n - aq) % (q as u64 + 1) == 0 {
                                count += 1;
                            }
                        }
                        assert_eq!(count, 1, "q={q}, n={n}");
                    }
                    None => {
                        for a in 0..=q as u64 {
                            let aq = a * q as u64;
                            assert!(
                                aq > n || (n - aq) % (q as u64 + 1) != 0,
                                "missed representation of {n} at q={q}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn membership_zero_and_gap_boundary() {
        assert_eq!(
            lambda_membership(4, 0),
            Some(LambdaRep { n: 0, a: 0, b: 0 })
        );
        assert_eq!(lambda_membership(4, 11), None);
        assert_eq!(
            lambda_membership(4, 12),
            Some(LambdaRep { n: 12, a: 3, b: 0 })
        );
    }

    #[test]
    fn staircase_at_q2_is_the_expected_eight_monomials() {
        let basis = staircase_basis(2);
        let expected: Vec<Monomial> = vec![
            Monomial::new(0, 0),
            Monomial::new(1, 0),
            Monomial::new(0, 1),
            Monomial::new(2, 0),
            Monomial::new(1, 1),
            Monomial::new(0, 2),
            Monomial::new(2, 1),
            Monomial::new(0, 3),
        ];
        assert_eq!(basis, expected);
        let weights: Vec<u64> = basis.iter().map(|m| m.w_weight(2)).collect();
        assert_eq!(weights, vec![0, 2, 3, 4, 5, 6, 7, 9]);
    }

    #[test]
    fn staircase_has_q_cubed_distinct_weights_in_order() {
        for q in [2u32, 3, 4, 5] {
            let basis = staircase_basis(q);
            assert_eq!(basis.len() as u64, (q as u64).pow(3));
            let weights: Vec<u64> = basis.iter().map(|m| m.w_weight(q)).collect();
            for w in weights.windows(2) {
                assert!(w[0] < w[1], "weights strictly increase along the basis");
            }
            // Every weight is recovered by the arithmetic lookup.
            for mono in &basis {
                assert_eq!(
                    basis_monomial_of_weight(q, mono.w_weight(q)),
                    Some(*mono)
                );
            }
        }
    }

    #[test]
    fn truncated_basis_sizes_at_q4() {
        assert_eq!(staircase_basis_truncated(4, 18).len(), 13);
        assert_eq!(staircase_basis_truncated(4, 16).len(), 11);
        assert_eq!(staircase_basis_truncated(4, 14).len(), 9);
        let weights: Vec<u64> = staircase_basis_truncated(4, 18)
            .iter()
            .map(|m| m.w_weight(4))
            .collect();
        assert_eq!(
            weights,
            vec![0, 4, 5, 8, 9, 10, 12, 13, 14, 15, 16, 17, 18]
        );
    }

    #[test]
    fn weight_nineteen_monomial_at_q4_is_x_y_cubed() {
        assert_eq!(basis_monomial_of_weight(4, 19), Some(Monomial::new(1, 3)));
        assert_eq!(basis_monomial_of_weight(4, 11), None);
        // y^{q^2} has weight q^3 + q^2 but is outside the staircase.
        assert_eq!(basis_monomial_of_weight(4, 16 * 5), None);
    }

    #[test]
    fn label_sets_at_small_q() {
        let labels = |q: u32, up_to: u64| -> Vec<u64> {
            (0..=up_to).filter(|&m| is_code_label(q, m)).collect()
        };
        assert_eq!(labels(2, max_label(2)), vec![1, 2, 3, 4, 5, 6, 8]);
        assert_eq!(labels(3, 10), vec![2, 3, 5, 6, 7, 8, 9, 10]);
        assert_eq!(labels(4, 14), vec![3, 4, 7, 8, 9, 11, 12, 13, 14]);
        assert_eq!(max_label(2), 8);
        // (q²−1)(q+1)−1 = q³+q²−q−2
        assert_eq!(max_label(4), 74);
    }

    #[test]
    fn canonical_label_points_at_the_same_truncation() {
        assert_eq!(canonical_label(4, 10), Some(11));
        assert_eq!(canonical_label(4, 0), Some(3));
        assert_eq!(canonical_label(4, 18), Some(18));
        assert_eq!(canonical_label(2, 7), Some(8));
        assert_eq!(canonical_label(2, 9), None);
        // The canonical label really does produce the same truncation.
        for q in [2u32, 3, 4] {
            for m in 0..=max_label(q) {
                let c = canonical_label(q, m).unwrap();
                assert!(is_code_label(q, c));
                assert_eq!(
                    staircase_basis_truncated(q, m),
                    staircase_basis_truncated(q, c),
                    "q={q}, m={m}"
                );
            }
        }
    }

    #[test]
    fn out_of_range_labels_are_rejected() {
        let err = code_label_info(2, 9).unwrap_err();
        assert_eq!(err, SemigroupError::LabelOutOfRange { m: 9, max: 8 });
        assert!(code_label_info(2, 8).is_ok());
    }

    #[test]
    fn stabilised_index_table_at_q4() {
        // The full (m, m̃, δ, δ̃) table for m = 11..22.
        let m_tilde = [14, 14, 14, 14, 15, 18, 18, 18, 19, 20, 22, 22];
        let delta_tilde = [4, 4, 4, 4, 5, 8, 8, 8, 9, 10, 12, 12];
        for (i, m) in (11u64..=22).enumerate() {
            let info = code_label_info(4, m).unwrap();
            assert_eq!(info.m_tilde, m_tilde[i], "m̃ at m={m}");
            assert_eq!(info.delta_tilde, delta_tilde[i], "δ̃ at m={m}");
            assert_eq!(info.delta, m as i64 - 10, "δ at m={m}");
        }
    }

    #[test]
    fn phases_follow_the_thresholds() {
        assert_eq!(code_label_info(4, 11).unwrap().phase, Phase::I);
        assert_eq!(code_label_info(4, 14).unwrap().phase, Phase::I);
        assert_eq!(code_label_info(4, 15).unwrap().phase, Phase::II);
        assert_eq!(code_label_info(4, 21).unwrap().phase, Phase::II);
        assert_eq!(code_label_info(4, 22).unwrap().phase, Phase::III);
        assert_eq!(code_label_info(4, 62).unwrap().phase, Phase::III);
        assert_eq!(code_label_info(4, 63).unwrap().phase, Phase::IV);
        // At q=2 the later threshold wins: 2q²−2q−2 = 2 < q²−1 = 3.
        assert_eq!(code_label_info(2, 1).unwrap().phase, Phase::I);
        assert_eq!(code_label_info(2, 2).unwrap().phase, Phase::III);
    }

    #[test]
    fn mu_lambda_name_the_cutting_curves() {
        let info = code_label_info(4, 18).unwrap();
        assert_eq!((info.mu, info.lambda), (2, 0));
        let info = code_label_info(4, 15).unwrap();
        assert_eq!((info.mu, info.lambda), (0, 1));
        let info = code_label_info(4, 14).unwrap();
        assert_eq!((info.mu, info.lambda), (1, 0));
        let info = code_label_info(3, 9).unwrap();
        assert_eq!((info.mu, info.lambda), (2, 0));
        assert_eq!(info.m_tilde, 10);
        assert_eq!(info.delta_tilde, 6);
    }

    #[test]
    fn distances_at_q2_match_the_exhaustive_expectations() {
        let expected = [(1u64, 2u64), (2, 2), (3, 3), (4, 4), (5, 5), (6, 6), (8, 8)];
        for (m, d) in expected {
            assert_eq!(distance_value(2, m).unwrap(), d, "distance at m={m}");
        }
        assert!(matches!(
            distance_value(2, 7),
            Err(SemigroupError::NotACodeLabel { m: 7, canonical: Some(8) })
        ));
    }

    #[test]
    fn distances_at_q3_and_q4_match_frozen_values() {
        let q3 = [
            (2u64, 2u64),
            (3, 2),
            (5, 3),
            (6, 3),
            (7, 3),
            (8, 4),
            (9, 6),
            (10, 6),
        ];
        for (m, d) in q3 {
            assert_eq!(distance_value(3, m).unwrap(), d, "q=3, m={m}");
        }
        let q4 = [(11u64, 4u64), (14, 4), (16, 8), (18, 8), (21, 12)];
        for (m, d) in q4 {
            assert_eq!(distance_value(4, m).unwrap(), d, "q=4, m={m}");
        }
    }

    #[test]
    fn distance_never_decreases_along_labels() {
        for q in [2u32, 3, 4] {
            let mut last = 0;
            for m in 0..=max_label(q) {
                if is_code_label(q, m) {
                    let d = distance_value(q, m).unwrap();
                    assert!(d >= last, "distance dipped at q={q}, m={m}");
                    last = d;
                }
            }
        }
    }
}
