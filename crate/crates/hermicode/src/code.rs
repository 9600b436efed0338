//! Hermitian one-point dual codes: evaluation parity checks and codeword
//! queries.
//!
//! For a code label m, the code C_m over GF(q²) has length n = q³ (one
//! coordinate per affine rational point of the curve, in the canonical
//! order of [`crate::curve::enumerate_points`]) and is the right kernel of
//! the parity-check matrix whose rows evaluate the weight-truncated
//! staircase monomials 𝓑_m at those points.  A vector is a codeword exactly
//! when every monomial of pole weight ≤ m sums to zero against it.
//!
//! Beyond the basic build/syndrome machinery this module answers the two
//! support questions everything downstream leans on: does any nonzero
//! codeword live *within* a given point set, and does one live on *exactly*
//! that point set?  The first is pure linear algebra.  The second is decided
//! exactly whenever the kernel is small enough to sweep, and otherwise
//! reported honestly as inconclusive after a bounded, seeded search.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::curve::{enumerate_points, CurvePoint, Divisor};
use crate::field::{FieldContext, FieldElement};
use crate::groebner::Monomial;
use crate::linalg::Matrix;
use crate::semigroup::{
    self, code_label_info, is_code_label, max_label, staircase_basis_truncated, CodeLabelInfo,
    SemigroupError,
};

/// Errors from code construction and codeword queries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CodeError {
    /// m+1 is not a pole weight of the staircase basis; `canonical` is the
    /// nearest label defining the same code, when one exists.
    NotACodeLabel { m: u64, canonical: Option<u64> },
    /// m exceeds the largest label for this q.
    LabelOutOfRange { m: u64, max: u64 },
    /// A vector had the wrong length for this code.
    LengthMismatch { expected: usize, got: usize },
    /// The vector fails the parity checks.
    NotACodeword,
    /// A divisor point is missing from the evaluation point set (it was
    /// built against a different field context).
    PointOutsideEvaluationSet { point: String },
}

impl std::fmt::Display for CodeError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CodeError::NotACodeLabel { m, canonical } => match canonical {
                Some(c) => write!(
                    f,
                    "m = {m} is not a code label; the same code has canonical label {c}"
                ),
                None => write!(f, "m = {m} is not a code label and has no canonical label"),
            },
            CodeError::LabelOutOfRange { m, max } => {
                write!(f, "m = {m} is beyond the largest code label {max}")
            }
            CodeError::LengthMismatch { expected, got } => {
                write!(f, "expected a vector of length {expected}, got {got}")
            }
            CodeError::NotACodeword => write!(f, "vector fails the parity checks"),
            CodeError::PointOutsideEvaluationSet { point } => {
                write!(f, "point {point} is not in the evaluation point set")
            }
        }
    }
}

impl std::error::Error for CodeError {}

impl From<SemigroupError> for CodeError {
    fn from(e: SemigroupError) -> Self {
        match e {
            SemigroupError::LabelOutOfRange { m, max } => CodeError::LabelOutOfRange { m, max },
            SemigroupError::NotACodeLabel { m, canonical } => {
                CodeError::NotACodeLabel { m, canonical }
            }
        }
    }
}

/// A validated member of a code: length-n coordinates, parity checks zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Codeword {
    coords: Vec<FieldElement>,
}

impl Codeword {
    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        weight(&self.coords)
    }
}

/// Hamming weight of a coordinate vector.
pub fn weight(coords: &[FieldElement]) -> usize {
    coords.iter().filter(|c| !c.is_zero()).count()
}

/// Outcome of the exact-support search in
/// [`HermitianCode::codeword_supported_exactly`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactSupportSearch {
    /// A codeword whose support is exactly the requested divisor.
    Found(Codeword),
    /// No such codeword exists (decided exactly).
    ProvenAbsent,
    /// The kernel was too large to sweep and the seeded search failed;
    /// existence is undecided.
    Inconclusive { attempts: u64 },
}

/// An Hermitian one-point dual code C_m, frozen at construction.
///
/// The `Debug` form prints the code parameters, not the matrices.
pub struct HermitianCode {
    ctx: Arc<FieldContext>,
    info: CodeLabelInfo,
    points: Vec<CurvePoint>,
    basis: Vec<Monomial>,
    parity: Matrix,
}

impl std::fmt::Debug for HermitianCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("HermitianCode")
            .field("q", &self.q())
            .field("m", &self.info.m)
            .field("n", &self.points.len())
            .field("dim", &self.dim())
            .finish()
    }
}

impl HermitianCode {
    /// Build C_m.  Rejects non-labels, naming the canonical label that
    /// defines the same code when one exists.
    pub fn build(ctx: Arc<FieldContext>, m: u64) -> Result<HermitianCode, CodeError> {
        let q = ctx.q();
        if m > max_label(q) {
            return Err(CodeError::LabelOutOfRange {
                m,
                max: max_label(q),
            });
        }
        if !is_code_label(q, m) {
            return Err(CodeError::NotACodeLabel {
                m,
                canonical: semigroup::canonical_label(q, m),
            });
        }
        let info = code_label_info(q, m)?;
        let points = enumerate_points(&ctx);
        let basis = staircase_basis_truncated(q, m);
        let parity = Matrix::from_fn(basis.len(), points.len(), |i, j| {
            let mono = basis[i];
            let p = points[j];
            ctx.mul_raw(
                ctx.pow_raw(p.x.value(), mono.r as u64),
                ctx.pow_raw(p.y.value(), mono.s as u64),
            )
        });
        // The staircase monomials restrict to linearly independent functions
        // on the point set; anything else means the construction is broken.
        assert_eq!(
            parity.rank(&ctx),
            basis.len(),
            "parity-check rows must be independent"
        );
        Ok(HermitianCode {
            ctx,
            info,
            points,
            basis,
            parity,
        })
    }

    /// Build the code for an arbitrary index m ≤ the largest label by
    /// canonicalizing m to the label that defines the same code (the next
    /// index below a staircase pole weight).
    pub fn build_relaxed(ctx: Arc<FieldContext>, m: u64) -> Result<HermitianCode, CodeError> {
        let q = ctx.q();
        let canonical = semigroup::canonical_label(q, m).ok_or(CodeError::LabelOutOfRange {
            m,
            max: max_label(q),
        })?;
        HermitianCode::build(ctx, canonical)
    }

    pub fn ctx(&self) -> &FieldContext {
        &self.ctx
    }

    pub fn ctx_arc(&self) -> &Arc<FieldContext> {
        &self.ctx
    }

    pub fn q(&self) -> u32 {
        self.ctx.q()
    }

    pub fn m(&self) -> u64 {
        self.info.m
    }

    /// Code length n = q³.
    pub fn n(&self) -> usize {
        self.points.len()
    }

    /// Dimension of the code: n − |𝓑_m|.
    pub fn dim(&self) -> usize {
        self.points.len() - self.basis.len()
    }

    /// Minimum distance, from the closed-form semigroup expression.
    pub fn distance(&self) -> u64 {
        semigroup::distance_value(self.q(), self.info.m)
            .expect("label was validated at construction")
    }

    pub fn info(&self) -> &CodeLabelInfo {
        &self.info
    }

    /// The evaluation points, in canonical order; coordinate i of every
    /// codeword belongs to `points()[i]`.
    pub fn points(&self) -> &[CurvePoint] {
        &self.points
    }

    /// The staircase monomials of pole weight ≤ m, ascending.
    pub fn basis_monomials(&self) -> &[Monomial] {
        &self.basis
    }

    /// The |𝓑_m| × n evaluation parity-check matrix.
    pub fn parity_check(&self) -> &Matrix {
        &self.parity
    }

    fn check_length(&self, len: usize) -> Result<(), CodeError> {
        if len != self.points.len() {
            return Err(CodeError::LengthMismatch {
                expected: self.points.len(),
                got: len,
            });
        }
        Ok(())
    }

    /// Parity-check syndrome of a length-n vector.
    pub fn syndrome(&self, v: &[FieldElement]) -> Result<Vec<FieldElement>, CodeError> {
        self.check_length(v.len())?;
        let raw: Vec<u32> = v.iter().map(|c| c.value()).collect();
        Ok(self
            .parity
            .mul_vector(&self.ctx, &raw)
            .into_iter()
            .map(|r| self.ctx.element(r))
            .collect())
    }

    pub fn is_codeword(&self, v: &[FieldElement]) -> Result<bool, CodeError> {
        Ok(self.syndrome(v)?.iter().all(|c| c.is_zero()))
    }

    /// Wrap a length-n vector as a [`Codeword`], verifying the parity
    /// checks.
    pub fn codeword_from_vec(&self, coords: Vec<FieldElement>) -> Result<Codeword, CodeError> {
        if !self.is_codeword(&coords)? {
            return Err(CodeError::NotACodeword);
        }
        Ok(Codeword { coords })
    }

    /// The set of nonzero positions of a vector, as a divisor.
    pub fn support(&self, v: &[FieldElement]) -> Result<Divisor, CodeError> {
        self.check_length(v.len())?;
        let pts: Vec<CurvePoint> = v
            .iter()
            .zip(self.points.iter())
            .filter(|(c, _)| !c.is_zero())
            .map(|(_, p)| *p)
            .collect();
        Ok(Divisor::new(&self.ctx, pts).expect("evaluation points are on the curve"))
    }

    /// A basis of the code as validated codewords (right kernel of the
    /// parity-check matrix, in the deterministic free-column order).
    pub fn codeword_space_basis(&self) -> Vec<Codeword> {
        self.parity
            .kernel_basis(&self.ctx)
            .into_iter()
            .map(|v| Codeword {
                coords: v.into_iter().map(|r| self.ctx.element(r)).collect(),
            })
            .collect()
    }

    /// Positions of a divisor's points in the canonical point order.
    pub fn indices_of(&self, d: &Divisor) -> Result<Vec<usize>, CodeError> {
        d.points()
            .iter()
            .map(|p| {
                self.points
                    .binary_search(p)
                    .map_err(|_| CodeError::PointOutsideEvaluationSet {
                        point: p.to_string(),
                    })
            })
            .collect()
    }

    /// Embed a short vector given on the divisor's coordinates into a full
    /// length-n coordinate vector.
    fn embed(&self, indices: &[usize], short: &[u32]) -> Vec<FieldElement> {
        let mut coords = vec![self.ctx.zero(); self.points.len()];
        for (&i, &v) in indices.iter().zip(short.iter()) {
            coords[i] = self.ctx.element(v);
        }
        coords
    }

    /// Is there a nonzero codeword whose support is contained in `d`?
    /// Returns the first kernel basis vector of the column submatrix,
    /// embedded at the divisor's coordinates, when one exists.
    pub fn codeword_supported_within(&self, d: &Divisor) -> Result<Option<Codeword>, CodeError> {
        let indices = self.indices_of(d)?;
        let sub = self.parity.submatrix_columns(&indices);
        let kernel = sub.kernel_basis(&self.ctx);
        Ok(kernel.first().map(|v| Codeword {
            coords: self.embed(&indices, v),
        }))
    }

    /// Is there a codeword whose support is *exactly* `d`?
    ///
    /// Decided exactly whenever possible: a trivial kernel, a coordinate at
    /// which every kernel vector vanishes, or a kernel of dimension ≤ 2
    /// (swept exhaustively up to scalar) all settle the question.  For
    /// larger kernels a deterministic seeded search tries 200 random
    /// combinations and reports [`ExactSupportSearch::Inconclusive`] on
    /// failure rather than guessing.
    pub fn codeword_supported_exactly(&self, d: &Divisor) -> Result<ExactSupportSearch, CodeError> {
        let indices = self.indices_of(d)?;
        let sub = self.parity.submatrix_columns(&indices);
        let kernel = sub.kernel_basis(&self.ctx);
        if kernel.is_empty() {
            return Ok(ExactSupportSearch::ProvenAbsent);
        }
        let len = indices.len();
        // A nonzero codeword supported within d has weight ≥ the minimum
        // distance; when |d| equals it, any kernel vector is full-support.
        if len as u64 == self.distance() {
            let v = &kernel[0];
            debug_assert!(v.iter().all(|&c| c != 0));
            return Ok(ExactSupportSearch::Found(Codeword {
                coords: self.embed(&indices, v),
            }));
        }
        // If every kernel vector vanishes at some coordinate, so does every
        // codeword supported within d: nothing has full support.
        for j in 0..len {
            if kernel.iter().all(|v| v[j] == 0) {
                return Ok(ExactSupportSearch::ProvenAbsent);
            }
        }
        let full_support = |v: &[u32]| v.iter().all(|&c| c != 0);
        if kernel.len() <= 2 {
            // Sweep the projectivization: every nonzero combination up to a
            // scalar has a representative with leading coefficient 1.
            let found = if kernel.len() == 1 {
                full_support(&kernel[0]).then(|| kernel[0].clone())
            } else {
                let mut hit = full_support(&kernel[1]).then(|| kernel[1].clone());
                if hit.is_none() {
                    for t in 0..self.ctx.size() {
                        let combo: Vec<u32> = kernel[0]
                            .iter()
                            .zip(kernel[1].iter())
                            .map(|(&a, &b)| self.ctx.add_raw(a, self.ctx.mul_raw(t, b)))
                            .collect();
                        if full_support(&combo) {
                            hit = Some(combo);
                            break;
                        }
                    }
                }
                hit
            };
            return Ok(match found {
                Some(v) => ExactSupportSearch::Found(Codeword {
                    coords: self.embed(&indices, &v),
                }),
                None => ExactSupportSearch::ProvenAbsent,
            });
        }
        // Large kernel: bounded seeded search, deterministic in d.
        let seed = indices.iter().fold(0x9E37_79B9_7F4A_7C15u64, |acc, &i| {
            acc.rotate_left(7) ^ (i as u64).wrapping_mul(0xBF58_476D_1CE4_E5B9)
        });
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        const ATTEMPTS: u64 = 200;
        for _ in 0..ATTEMPTS {
            let coeffs: Vec<u32> = (0..kernel.len())
                .map(|_| rng.gen_range(0..self.ctx.size()))
                .collect();
            if coeffs.iter().all(|&c| c == 0) {
                continue;
            }
            let mut combo = vec![0u32; len];
            for (v, &c) in kernel.iter().zip(coeffs.iter()) {
                if c != 0 {
                    for (acc, &vi) in combo.iter_mut().zip(v.iter()) {
                        *acc = self.ctx.add_raw(*acc, self.ctx.mul_raw(c, vi));
                    }
                }
            }
            if full_support(&combo) {
                return Ok(ExactSupportSearch::Found(Codeword {
                    coords: self.embed(&indices, &combo),
                }));
            }
        }
        Ok(ExactSupportSearch::Inconclusive { attempts: ATTEMPTS })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::points_on_vertical_line;

    fn code(p: u64, k: u32, m: u64) -> HermitianCode {
        let ctx = Arc::new(FieldContext::new(p, k).unwrap());
        HermitianCode::build(ctx, m).unwrap()
    }

    #[test]
    fn q4_m18_has_the_expected_shape() {
        let c = code(2, 2, 18);
        assert_eq!(c.n(), 64);
        assert_eq!(c.basis_monomials().len(), 13);
        assert_eq!(c.parity_check().rows(), 13);
        assert_eq!(c.parity_check().cols(), 64);
        assert_eq!(c.dim(), 51);
        assert_eq!(c.distance(), 8);
        let weights: Vec<u64> = c
            .basis_monomials()
            .iter()
            .map(|b| b.w_weight(c.q()))
            .collect();
        assert_eq!(weights, vec![0, 4, 5, 8, 9, 10, 12, 13, 14, 15, 16, 17, 18]);
    }

    #[test]
    fn q2_m1_is_the_parity_code() {
        let c = code(2, 1, 1);
        assert_eq!(c.n(), 8);
        assert_eq!(c.basis_monomials(), &[Monomial::ONE]);
        // Single all-ones parity row: the sum-zero code of dimension 7.
        assert!((0..8).all(|j| c.parity_check().get(0, j) == 1));
        assert_eq!(c.dim(), 7);
        assert_eq!(c.distance(), 2);
    }

    #[test]
    fn q3_m8_dimension() {
        let c = code(3, 1, 8);
        assert_eq!(c.n(), 27);
        assert_eq!(c.basis_monomials().len(), 6);
        assert_eq!(c.dim(), 21);
        assert_eq!(c.distance(), 4);
    }

    #[test]
    fn parity_rank_is_full_for_every_label_at_small_q() {
        for (p, k) in [(2u64, 1u32), (3, 1), (2, 2)] {
            let ctx = Arc::new(FieldContext::new(p, k).unwrap());
            let q = ctx.q();
            for m in 1..=max_label(q) {
                if !is_code_label(q, m) {
                    continue;
                }
                // build() asserts rank == |basis| internally.
                let c = HermitianCode::build(Arc::clone(&ctx), m).unwrap();
                assert_eq!(c.dim(), c.n() - c.basis_monomials().len());
            }
        }
    }

    #[test]
    fn label_validation_and_relaxed_build() {
        let ctx = Arc::new(FieldContext::new(2, 2).unwrap());
        let err = HermitianCode::build(Arc::clone(&ctx), 10).unwrap_err();
        assert_eq!(
            err,
            CodeError::NotACodeLabel {
                m: 10,
                canonical: Some(11)
            }
        );
        let relaxed = HermitianCode::build_relaxed(Arc::clone(&ctx), 10).unwrap();
        assert_eq!(relaxed.m(), 11);
        // Same truncated basis, so literally the same parity-check matrix.
        let direct = HermitianCode::build(Arc::clone(&ctx), 11).unwrap();
        assert_eq!(relaxed.parity_check(), direct.parity_check());
        let err = HermitianCode::build(Arc::clone(&ctx), 75).unwrap_err();
        assert_eq!(err, CodeError::LabelOutOfRange { m: 75, max: 74 });
        // A label is its own canonicalization.
        let same = HermitianCode::build_relaxed(ctx, 18).unwrap();
        assert_eq!(same.m(), 18);
    }

    #[test]
    fn syndrome_and_membership_basics() {
        let c = code(2, 1, 1);
        let zero = vec![c.ctx().zero(); c.n()];
        assert!(c.is_codeword(&zero).unwrap());
        // A single nonzero coordinate violates the all-ones check.
        let mut e0 = zero.clone();
        e0[0] = c.ctx().one();
        assert!(!c.is_codeword(&e0).unwrap());
        assert_eq!(c.support(&e0).unwrap().degree(), 1);
        assert!(c.codeword_from_vec(e0).is_err());
        // Wrong length is reported as such.
        let err = c.is_codeword(&[c.ctx().one()]).unwrap_err();
        assert_eq!(
            err,
            CodeError::LengthMismatch {
                expected: 8,
                got: 1
            }
        );
    }

    #[test]
    fn kernel_basis_members_are_codewords_of_the_right_count() {
        for (p, k, m) in [(2u64, 1u32, 4u64), (3, 1, 8), (2, 2, 18)] {
            let c = code(p, k, m);
            let basis = c.codeword_space_basis();
            assert_eq!(basis.len(), c.dim());
            for w in &basis {
                assert!(c.is_codeword(w.coords()).unwrap());
            }
            // Every basis codeword clears the distance bound.
            let d = c.distance() as usize;
            assert!(basis.iter().all(|w| w.weight() >= d));
        }
    }

    #[test]
    fn codes_nest_downward_along_labels() {
        // Codewords of C_{m'} are codewords of C_m for labels m < m'.
        let ctx = Arc::new(FieldContext::new(3, 1).unwrap());
        let pairs = [(2u64, 9u64), (5, 8), (8, 9), (9, 10)];
        for (m_small, m_large) in pairs {
            let small = HermitianCode::build(Arc::clone(&ctx), m_small).unwrap();
            let large = HermitianCode::build(Arc::clone(&ctx), m_large).unwrap();
            for w in large.codeword_space_basis() {
                assert!(
                    small.is_codeword(w.coords()).unwrap(),
                    "C_{m_large} ⊄ C_{m_small}"
                );
            }
        }
    }

    #[test]
    fn single_point_and_empty_supports_are_proven_absent() {
        let c = code(2, 2, 14);
        let p = c.points()[5];
        let d = Divisor::new(c.ctx(), vec![p]).unwrap();
        assert_eq!(
            c.codeword_supported_exactly(&d).unwrap(),
            ExactSupportSearch::ProvenAbsent
        );
        assert!(c.codeword_supported_within(&d).unwrap().is_none());
        let empty = Divisor::new(c.ctx(), vec![]).unwrap();
        assert_eq!(
            c.codeword_supported_exactly(&empty).unwrap(),
            ExactSupportSearch::ProvenAbsent
        );
    }

    #[test]
    fn vertical_fiber_carries_a_minimum_weight_codeword_at_q4_m14() {
        let c = code(2, 2, 14);
        assert_eq!(c.distance(), 4);
        let fiber = points_on_vertical_line(c.ctx(), c.ctx().element(3));
        assert_eq!(fiber.degree(), 4);
        match c.codeword_supported_exactly(&fiber).unwrap() {
            ExactSupportSearch::Found(w) => {
                assert_eq!(w.weight(), 4);
                assert!(c.is_codeword(w.coords()).unwrap());
                assert_eq!(c.support(w.coords()).unwrap(), fiber);
            }
            other => panic!("expected a codeword on the fiber, got {other:?}"),
        }
        // C_16 has distance 8, so the same 4-point set supports nothing
        // there.  (Divisors are bound to a field context, so rebuild the
        // fiber from the second code's own context.)
        let c16 = code(2, 2, 16);
        let fiber16 = points_on_vertical_line(c16.ctx(), c16.ctx().element(3));
        assert_eq!(
            c16.codeword_supported_exactly(&fiber16).unwrap(),
            ExactSupportSearch::ProvenAbsent
        );
        assert!(c16.codeword_supported_within(&fiber16).unwrap().is_none());
    }

    #[test]
    fn divisor_from_a_foreign_context_is_rejected() {
        let c = code(2, 2, 14);
        let other = FieldContext::new(2, 2).unwrap();
        let p = enumerate_points(&other)[3];
        let d = Divisor::new(&other, vec![p]).unwrap();
        let err = c.codeword_supported_exactly(&d).unwrap_err();
        assert!(matches!(err, CodeError::PointOutsideEvaluationSet { .. }));
    }
}
