//! Minimum-weight codeword supports: constructions, bounds, and certified
//! classification.
//!
//! The minimum-weight codewords of an Hermitian code C_m live on very
//! constrained point sets.  Writing d for the minimum distance and h = d−1:
//!
//! * for small m (before the corner index q²−q−1), a minimum support is
//!   h+1 points on a single line — always available on a vertical line,
//!   and on a non-vertical line exactly when m = hq−1;
//! * from the corner index up to 2q²−2q−3, a minimum support is the full
//!   rational intersection of the curve with a plane curve {F = 0} whose
//!   leading monomial is x^μy^λ (**type (i)**, where δ̃ = μq+λ(q+1) is the
//!   stable gap value), or — only at the special indices m = (μ'+q−3)(q+1)+1
//!   — a μ'×q grid cut by two curves with leading monomials y^{μ'} and x^q
//!   (**type (ii)**);
//! * these shapes are detectable from the divisor alone: the footprint
//!   (staircase) of its vanishing ideal matches exactly one pattern of
//!   leading monomials.
//!
//! [`classify_support`] runs that detection and *verifies* every claim it
//! makes: the exact-support codeword is found by linear algebra, witness
//! curves are re-evaluated on every rational point of the curve, and a
//! divisor that is provably a minimum support but matches no pattern is
//! reported as a [`MinwordsError::TheoremViolation`] rather than being
//! silently accepted.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::code::{CodeError, Codeword, ExactSupportSearch, HermitianCode};
use crate::curve::{enumerate_points, CurveError, CurvePoint, Divisor};
use crate::field::{FieldContext, FieldElement};
use crate::groebner::{
    minimalize_monomials, vanishing_ideal, Footprint, GroebnerError, Monomial, Polynomial,
};
use crate::semigroup::{self, code_label_info, is_code_label, Phase, SemigroupError};

/// What a [`SupportCertificate`] asserts about its divisor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Minimum-weight support cut out by one curve with leading monomial
    /// x^μy^λ; initial ideal ⟨x^{q+1}, x^μy^λ, y^{λ+q}⟩ (minimalized).
    MinWeightTypeI,
    /// Minimum-weight support that is a grid cut by two curves with leading
    /// monomials x^q and y^μ'; initial ideal ⟨x^q, y^μ'⟩.
    MinWeightTypeII,
    /// Minimum-weight support of the small-m regime: h+1 points on one
    /// line; initial ideal ⟨x, y^{h+1}⟩ or ⟨y, x^{h+1}⟩.
    MinWeightPhaseILine,
    /// Not a minimum-weight support (wrong size, or no codeword lives on
    /// exactly these points).
    NotMinimum,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Verdict::MinWeightTypeI => "min-weight-type-i",
            Verdict::MinWeightTypeII => "min-weight-type-ii",
            Verdict::MinWeightPhaseILine => "min-weight-phase-i-line",
            Verdict::NotMinimum => "not-minimum",
        };
        f.write_str(s)
    }
}

/// The verified outcome of [`classify_support`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportCertificate {
    /// Label of the code the divisor was classified against.
    pub m: u64,
    pub divisor: Divisor,
    pub verdict: Verdict,
    /// Defining curves, straight from the reduced basis of the vanishing
    /// ideal: type (i) the single F; type (ii) the pair (F₁ with LM x^q,
    /// F₂ with LM y^μ'); line verdicts the line polynomial.  Empty for
    /// [`Verdict::NotMinimum`].
    pub witnesses: Vec<Polynomial>,
    /// Footprint (staircase) of the divisor's vanishing ideal.
    pub footprint: Footprint,
    /// A codeword supported on exactly this divisor, when the verdict says
    /// one exists.
    pub codeword: Option<Codeword>,
}

/// Which of the five lower-bound formulas applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundCaseId {
    A,
    B,
    C,
    D,
    E,
}

impl std::fmt::Display for BoundCaseId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            BoundCaseId::A => "a",
            BoundCaseId::B => "b",
            BoundCaseId::C => "c",
            BoundCaseId::D => "d",
            BoundCaseId::E => "e",
        };
        f.write_str(s)
    }
}

/// A case-selected lower bound on the degree of any divisor whose footprint
/// contains the staircase monomial of pole weight m+1+κ.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundCase {
    pub mu: u32,
    pub lambda: u64,
    pub kappa: u32,
    pub case: BoundCaseId,
    pub bound: u64,
}

/// Which line family [`construct_phase1_support`] should draw from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Phase1Mode {
    Vertical,
    NonVertical,
}

/// Errors from the construction and classification operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinwordsError {
    Semigroup(SemigroupError),
    Code(CodeError),
    Curve(CurveError),
    Groebner(GroebnerError),
    /// The operation requires a stable index (m = m̃).
    LabelNotStable { m: u64, m_tilde: u64 },
    /// The label is not in the phase the construction serves.
    PhaseMismatch { m: u64, phase: Phase },
    /// Non-vertical line supports exist only at m = hq−1.
    NonVerticalUnavailable { m: u64, h: u64 },
    /// m outside the range an operation is defined for.
    RangeViolation { m: u64, lo: u64, hi: u64 },
    /// The divisor is a verified minimum-weight support, but its label is
    /// beyond the range where the support shapes are characterized.
    UncharacterizedLabel { m: u64 },
    /// A parameter failed validation (details in the message).
    BadParameter(String),
    /// A verified fact contradicts the characterization — e.g. a certified
    /// minimum support whose footprint matches no pattern.  Never ignore.
    TheoremViolation(String),
}

impl std::fmt::Display for MinwordsError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MinwordsError::Semigroup(e) => e.fmt(f),
            MinwordsError::Code(e) => e.fmt(f),
            MinwordsError::Curve(e) => e.fmt(f),
            MinwordsError::Groebner(e) => e.fmt(f),
            MinwordsError::LabelNotStable { m, m_tilde } => {
                write!(f, "m = {m} is not stable (m̃ = {m_tilde}); use a stable index")
            }
            MinwordsError::PhaseMismatch { m, phase } => {
                write!(f, "m = {m} is in phase {phase}, not the phase this construction serves")
            }
            MinwordsError::NonVerticalUnavailable { m, h } => write!(
                f,
                "no non-vertical line supports at m = {m}: they require m = hq−1 (here h = {h})"
            ),
            MinwordsError::RangeViolation { m, lo, hi } => {
                write!(f, "m = {m} outside the supported range [{lo}, {hi}]")
            }
            MinwordsError::UncharacterizedLabel { m } => write!(
                f,
                "the divisor is a minimum-weight support, but support shapes at m = {m} \
                 are beyond the characterized range"
            ),
            MinwordsError::BadParameter(msg) => write!(f, "bad parameter: {msg}"),
            MinwordsError::TheoremViolation(msg) => write!(f, "THEOREM VIOLATION: {msg}"),
        }
    }
}

impl std::error::Error for MinwordsError {}

impl From<SemigroupError> for MinwordsError {
    fn from(e: SemigroupError) -> Self {
        MinwordsError::Semigroup(e)
    }
}

impl From<CodeError> for MinwordsError {
    fn from(e: CodeError) -> Self {
        MinwordsError::Code(e)
    }
}

impl From<CurveError> for MinwordsError {
    fn from(e: CurveError) -> Self {
        MinwordsError::Curve(e)
    }
}

impl From<GroebnerError> for MinwordsError {
    fn from(e: GroebnerError) -> Self {
        MinwordsError::Groebner(e)
    }
}

/// Minimum distance of C_m, from the closed-form semigroup expression.
pub fn distance(q: u32, m: u64) -> Result<u64, MinwordsError> {
    Ok(semigroup::distance_value(q, m)?)
}

/// The corner index q²−q−1: the smallest stable index, and the boundary
/// between the line regime and the complete-intersection regime.
fn corner_index(q: u32) -> u64 {
    let q = q as u64;
    q * q - q - 1
}

/// Upper end of the range where support shapes are characterized:
/// 2q²−2q−3.
fn characterized_end(q: u32) -> u64 {
    let q = q as u64;
    2 * q * q - 2 * q - 3
}

/// Case-selected lower bound on |D| for divisors D whose footprint contains
/// the staircase monomial of pole weight m+1+κ.  Requires a stable index
/// (m = m̃) and 0 ≤ κ ≤ q.
pub fn lower_bound(q: u32, m: u64, kappa: u32) -> Result<BoundCase, MinwordsError> {
    if kappa > q {
        return Err(MinwordsError::BadParameter(format!(
            "kappa = {kappa} exceeds q = {q}"
        )));
    }
    let info = code_label_info(q, m)?;
    if info.m_tilde != m {
        return Err(MinwordsError::LabelNotStable {
            m,
            m_tilde: info.m_tilde,
        });
    }
    // Stability forces δ(m) ∈ Λ, hence δ(m) ≥ 0, hence m ≥ q²−q−1.
    debug_assert!(m >= corner_index(q));
    let dt = info.delta_tilde;
    let mu = info.mu;
    let lambda = info.lambda;
    let (q64, k64, mu64) = (q as u64, kappa as u64, mu as u64);
    // Signed comparisons: λ can exceed q for large m, emptying the middle
    // ranges.
    let kappa_i = kappa as i64;
    let slack = q as i64 - lambda as i64; // q − λ
    let (case, bound) = if mu == 0 {
        if kappa_i <= slack {
            // bound = δ̃ + κ(q+1−λ−κ); the factor is ≥ 1 here.
            let factor = (q64 + 1) - lambda - k64;
            (BoundCaseId::A, dt + k64 * factor)
        } else {
            (BoundCaseId::B, dt + k64)
        }
    } else if k64 + 1 <= mu64 {
        (BoundCaseId::C, dt + k64)
    } else if kappa_i <= slack {
        // μ ≤ κ ≤ q−λ: bound = δ̃ + (κ−μ)(q−λ−κ) + κ; both factors ≥ 0.
        let factor = (slack - kappa_i) as u64;
        (BoundCaseId::D, dt + (k64 - mu64) * factor + k64)
    } else {
        (BoundCaseId::E, dt + k64)
    };
    Ok(BoundCase {
        mu,
        lambda,
        kappa,
        case,
        bound,
    })
}

/// Points of the affine line y = ux + v that lie on the curve, ascending.
fn points_on_sloped_line(
    ctx: &FieldContext,
    u: FieldElement,
    v: FieldElement,
) -> Vec<CurvePoint> {
    ctx.elements()
        .filter_map(|x| {
            let y = ctx.add(ctx.mul(u, x), v);
            (ctx.norm(x) == ctx.trace(y)).then_some(CurvePoint { x, y })
        })
        .collect()
}

/// A minimum-weight support for a small-m (pre-corner) label: h+1 points on
/// one line, where h+1 = d(m).  Returns the points and the line polynomial.
///
/// Vertical mode takes the first h+1 points of the fiber x = 0;
/// non-vertical mode (available only when m = hq−1) scans lines y = ux+v in
/// ascending coordinate order and takes the first h+1 points of the first
/// line with enough rational curve points.
pub fn construct_phase1_support(
    ctx: &FieldContext,
    m: u64,
    mode: Phase1Mode,
) -> Result<(Divisor, Polynomial), MinwordsError> {
    let q = ctx.q();
    if !is_code_label(q, m) {
        return Err(SemigroupError::NotACodeLabel {
            m,
            canonical: semigroup::canonical_label(q, m),
        }
        .into());
    }
    let info = code_label_info(q, m)?;
    if info.phase != Phase::I {
        return Err(MinwordsError::PhaseMismatch {
            m,
            phase: info.phase,
        });
    }
    let d = semigroup::distance_value(q, m)?;
    let h = d - 1;
    match mode {
        Phase1Mode::Vertical => {
            let fiber = crate::curve::points_on_vertical_line(ctx, ctx.zero());
            debug_assert!(h + 1 <= fiber.degree() as u64);
            let pts = fiber.points()[..(h + 1) as usize].to_vec();
            let line = Polynomial::from_terms(ctx, &[(Monomial::new(1, 0), ctx.one())]);
            Ok((Divisor::new(ctx, pts)?, line))
        }
        Phase1Mode::NonVertical => {
            if m + 1 != h * q as u64 {
                return Err(MinwordsError::NonVerticalUnavailable { m, h });
            }
            for u in ctx.elements() {
                for v in ctx.elements() {
                    let pts = points_on_sloped_line(ctx, u, v);
                    if pts.len() as u64 >= h + 1 {
                        let line = Polynomial::from_terms(
                            ctx,
                            &[
                                (Monomial::new(0, 1), ctx.one()),
                                (Monomial::new(1, 0), ctx.neg(u)),
                                (Monomial::ONE, ctx.neg(v)),
                            ],
                        );
                        let chosen = pts[..(h + 1) as usize].to_vec();
                        return Ok((Divisor::new(ctx, chosen)?, line));
                    }
                }
            }
            // Any horizontal line with nonzero trace has q+1 ≥ h+1 points.
            unreachable!("some line always has enough points");
        }
    }
}

/// A minimum-weight support as a union of μ vertical and λ horizontal
/// lines, for q²−q ≤ m ≤ 2q²−2q−3 (μ, λ from the stable gap value δ̃ of m).
/// Horizontals use y = β with trace(β) ≠ 0 (so each carries q+1 curve
/// points); verticals use x = α with norm(α) avoiding all chosen traces (so
/// no crossing lies on the curve and the degree is exactly δ̃).  Returns
/// the points and F = Π(x−αᵢ)·Π(y−βⱼ).
pub fn construct_line_union_support(
    ctx: &FieldContext,
    m: u64,
) -> Result<(Divisor, Polynomial), MinwordsError> {
    let q = ctx.q();
    let q64 = q as u64;
    let (lo, hi) = (q64 * q64 - q64, characterized_end(q));
    if m < lo || m > hi {
        return Err(MinwordsError::RangeViolation { m, lo, hi });
    }
    let info = code_label_info(q, m)?;
    let (mu, lambda) = (info.mu as usize, info.lambda as usize);
    // In this range δ̃ ≤ q²−q−1, so λ ≤ q−2 and admissible lines abound.
    assert!(lambda <= q as usize - 2, "λ ≤ q−2 in the supported range");
    let betas: Vec<FieldElement> = ctx
        .elements()
        .filter(|&b| !ctx.trace(b).is_zero())
        .take(lambda)
        .collect();
    assert_eq!(betas.len(), lambda, "enough horizontals with nonzero trace");
    let trace_targets: Vec<FieldElement> = betas.iter().map(|&b| ctx.trace(b)).collect();
    let alphas: Vec<FieldElement> = ctx
        .elements()
        .filter(|&a| !trace_targets.contains(&ctx.norm(a)))
        .take(mu)
        .collect();
    assert_eq!(alphas.len(), mu, "enough verticals avoiding the traces");
    let mut pts: Vec<CurvePoint> = Vec::new();
    for &a in &alphas {
        pts.extend_from_slice(crate::curve::points_on_vertical_line(ctx, a).points());
    }
    for &b in &betas {
        pts.extend_from_slice(crate::curve::points_on_horizontal_line(ctx, b).points());
    }
    let mut f = Polynomial::from_terms(ctx, &[(Monomial::ONE, ctx.one())]);
    for &a in &alphas {
        let lin = Polynomial::from_terms(
            ctx,
            &[(Monomial::new(1, 0), ctx.one()), (Monomial::ONE, ctx.neg(a))],
        );
        f = f.mul(ctx, &lin);
    }
    for &b in &betas {
        let lin = Polynomial::from_terms(
            ctx,
            &[(Monomial::new(0, 1), ctx.one()), (Monomial::ONE, ctx.neg(b))],
        );
        f = f.mul(ctx, &lin);
    }
    let divisor = Divisor::new(ctx, pts)?;
    assert_eq!(
        divisor.degree() as u64,
        info.delta_tilde,
        "disjoint lines must contribute full fibers"
    );
    Ok((divisor, f))
}

/// Rejection-sample a type-(i) minimum-weight support for q²−q−1 ≤ m ≤
/// 2q²−2q−3: draw monic F with leading monomial x^μy^λ and random lower
/// terms (x-degree ≤ q), and accept when F cuts exactly δ̃ rational points
/// on the curve.  Deterministic in (seed, attempts); `None` when the
/// attempt budget (default 10q²) is exhausted.
pub fn sample_type_i_support(
    ctx: &FieldContext,
    m: u64,
    seed: u64,
    attempts: Option<u64>,
) -> Result<Option<(Divisor, Polynomial)>, MinwordsError> {
    let q = ctx.q();
    let (lo, hi) = (corner_index(q), characterized_end(q));
    if m < lo || m > hi {
        return Err(MinwordsError::RangeViolation { m, lo, hi });
    }
    let info = code_label_info(q, m)?;
    let lm = Monomial::new(info.mu, info.lambda as u32);
    // All monomials strictly below the leading one with x-degree ≤ q, in
    // ascending order (the draw order, so runs are reproducible).
    let tails: Vec<Monomial> = {
        let mut v: Vec<Monomial> = (0..=q)
            .flat_map(|r| (0..=lm.total_degree()).map(move |s| Monomial::new(r, s)))
            .filter(|t| *t < lm)
            .collect();
        v.sort();
        v
    };
    let points = enumerate_points(ctx);
    let budget = attempts.unwrap_or(10 * q as u64 * q as u64);
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    for _ in 0..budget {
        let mut terms: Vec<(Monomial, FieldElement)> = vec![(lm, ctx.one())];
        for &t in &tails {
            terms.push((t, ctx.element(rng.gen_range(0..ctx.size()))));
        }
        let f = Polynomial::from_terms(ctx, &terms);
        let zeros: Vec<CurvePoint> = points
            .iter()
            .filter(|p| f.eval_point(ctx, p).is_zero())
            .copied()
            .collect();
        if zeros.len() as u64 == info.delta_tilde {
            return Ok(Some((Divisor::new(ctx, zeros)?, f)));
        }
    }
    Ok(None)
}

/// The special label served by the type-(ii) grid construction for a given
/// μ': m = (μ'+q−3)(q+1)+1, defined for 1 ≤ μ' ≤ q−1.
pub fn type_ii_label(q: u32, mu: u32) -> Option<u64> {
    if mu >= 1 && mu <= q - 1 {
        let (q, mu) = (q as u64, mu as u64);
        Some((mu + q - 3) * (q + 1) + 1)
    } else {
        None
    }
}

/// Inverse of [`type_ii_label`]: the μ' for which m is the special label,
/// if any.
pub fn type_ii_mu(q: u32, m: u64) -> Option<u32> {
    let q1 = q as u64 + 1;
    if m < 1 || (m - 1) % q1 != 0 {
        return None;
    }
    let t = ((m - 1) / q1) as i64 + 3 - q as i64;
    if t >= 1 && t <= q as i64 - 1 {
        Some(t as u32)
    } else {
        None
    }
}

/// A type-(ii) grid support at the special label m = (μ'+q−3)(q+1)+1: the
/// μ'·q points {(αᵢ, βⱼ)} with norm(αᵢ) = trace(βⱼ) = c for a shared
/// nonzero subfield target c.  Returns the grid and the two witness curves
/// F₁ = Π(x−αᵢ) (LM x^q) and F₂ = Π(y−βⱼ) (LM y^μ').
///
/// `alphas`/`betas` default to the first q norm-c elements and the first μ'
/// trace-c elements in ascending order; explicit choices are validated.
pub fn construct_type_ii_support(
    ctx: &FieldContext,
    mu: u32,
    c: FieldElement,
    alphas: Option<&[FieldElement]>,
    betas: Option<&[FieldElement]>,
) -> Result<(Divisor, Polynomial, Polynomial), MinwordsError> {
    let q = ctx.q();
    if type_ii_label(q, mu).is_none() {
        return Err(MinwordsError::BadParameter(format!(
            "mu = {mu} outside 1..={}",
            q - 1
        )));
    }
    if c.is_zero() {
        return Err(MinwordsError::BadParameter(
            "c = 0 admits only one x with norm c; pick c in GF(q)*".to_string(),
        ));
    }
    if !ctx.is_in_subfield(c) {
        return Err(MinwordsError::BadParameter(format!(
            "c = {c} is not in the subfield GF(q)"
        )));
    }
    let validate = |given: &[FieldElement],
                    want_len: usize,
                    check: &dyn Fn(FieldElement) -> FieldElement,
                    what: &str|
     -> Result<Vec<FieldElement>, MinwordsError> {
        if given.len() != want_len {
            return Err(MinwordsError::BadParameter(format!(
                "need exactly {want_len} {what}, got {}",
                given.len()
            )));
        }
        let mut sorted = given.to_vec();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(MinwordsError::BadParameter(format!("{what} must be distinct")));
        }
        for &e in given {
            if check(e) != c {
                return Err(MinwordsError::BadParameter(format!(
                    "{what} element {e} has the wrong target"
                )));
            }
        }
        Ok(given.to_vec())
    };
    let alphas = match alphas {
        Some(a) => validate(a, q as usize, &|e| ctx.norm(e), "alphas (norm = c)")?,
        None => ctx.elements().filter(|&a| ctx.norm(a) == c).take(q as usize).collect(),
    };
    let betas = match betas {
        Some(b) => validate(b, mu as usize, &|e| ctx.trace(e), "betas (trace = c)")?,
        None => ctx
            .elements()
            .filter(|&b| ctx.trace(b) == c)
            .take(mu as usize)
            .collect(),
    };
    assert_eq!(alphas.len(), q as usize, "q of the q+1 norm-c elements");
    assert_eq!(betas.len(), mu as usize, "μ' of the q trace-c elements");
    let mut pts = Vec::with_capacity(alphas.len() * betas.len());
    for &a in &alphas {
        for &b in &betas {
            pts.push(CurvePoint { x: a, y: b });
        }
    }
    let mut f1 = Polynomial::from_terms(ctx, &[(Monomial::ONE, ctx.one())]);
    for &a in &alphas {
        let lin = Polynomial::from_terms(
            ctx,
            &[(Monomial::new(1, 0), ctx.one()), (Monomial::ONE, ctx.neg(a))],
        );
        f1 = f1.mul(ctx, &lin);
    }
    let mut f2 = Polynomial::from_terms(ctx, &[(Monomial::ONE, ctx.one())]);
    for &b in &betas {
        let lin = Polynomial::from_terms(
            ctx,
            &[(Monomial::new(0, 1), ctx.one()), (Monomial::ONE, ctx.neg(b))],
        );
        f2 = f2.mul(ctx, &lin);
    }
    Ok((Divisor::new(ctx, pts)?, f1, f2))
}

/// The leading-monomial pattern of a type-(i) initial ideal:
/// minimalize{x^{q+1}, x^μy^λ, y^{λ+q}}.
fn type_i_pattern(q: u32, mu: u32, lambda: u64) -> Vec<Monomial> {
    minimalize_monomials(&[
        Monomial::new(q + 1, 0),
        Monomial::new(mu, lambda as u32),
        Monomial::new(0, lambda as u32 + q),
    ])
}

/// Zeros of f among the rational curve points, ascending.
fn rational_zeros(ctx: &FieldContext, points: &[CurvePoint], f: &Polynomial) -> Vec<CurvePoint> {
    points
        .iter()
        .filter(|p| f.eval_point(ctx, p).is_zero())
        .copied()
        .collect()
}

/// Classify a divisor as a minimum-weight support of the given code, with
/// every claim verified.
///
/// Size or dependence failures give [`Verdict::NotMinimum`].  A verified
/// minimum support must match the pattern its label demands — one of the
/// two line patterns before the corner index q²−q−1 (non-vertical only at
/// m = hq−1), type (i) or type (ii) from there up to 2q²−2q−3 — and the
/// witness curves from its reduced vanishing-ideal basis must cut exactly
/// the divisor out of the rational points; any mismatch is a
/// [`MinwordsError::TheoremViolation`].  Beyond 2q²−2q−3 a genuine minimum
/// support is [`MinwordsError::UncharacterizedLabel`].
pub fn classify_support(
    code: &HermitianCode,
    d: &Divisor,
) -> Result<SupportCertificate, MinwordsError> {
    let ctx = code.ctx();
    let q = code.q();
    let m = code.m();
    let dist = code.distance();
    let search = code.codeword_supported_exactly(d)?;
    let (gb, footprint) = vanishing_ideal(ctx, d.points())?;
    let not_minimum = |footprint: Footprint| SupportCertificate {
        m,
        divisor: d.clone(),
        verdict: Verdict::NotMinimum,
        witnesses: Vec::new(),
        footprint,
        codeword: None,
    };
    if d.degree() as u64 != dist {
        return Ok(not_minimum(footprint));
    }
    let codeword = match search {
        ExactSupportSearch::ProvenAbsent => return Ok(not_minimum(footprint)),
        ExactSupportSearch::Found(w) => w,
        ExactSupportSearch::Inconclusive { .. } => {
            return Err(MinwordsError::TheoremViolation(
                "exact-support search inconclusive although |D| equals the distance".to_string(),
            ));
        }
    };
    // From here on, d provably supports a minimum-weight codeword.
    let lms = gb.leading_monomials();
    let certificate = |verdict, witnesses| SupportCertificate {
        m,
        divisor: d.clone(),
        verdict,
        witnesses,
        footprint: footprint.clone(),
        codeword: Some(codeword.clone()),
    };
    if m < corner_index(q) {
        let h = (dist - 1) as u32;
        let vertical = vec![Monomial::new(1, 0), Monomial::new(0, h + 1)];
        let nonvertical = vec![Monomial::new(0, 1), Monomial::new(h + 1, 0)];
        if lms == vertical {
            let line = gb
                .element_with_leading(&Monomial::new(1, 0))
                .expect("pattern matched")
                .clone();
            let x0 = d.points()[0].x;
            if d.points().iter().any(|p| p.x != x0) {
                return Err(MinwordsError::TheoremViolation(format!(
                    "initial ideal says vertical line, but the support of {} points is not",
                    d.degree()
                )));
            }
            Ok(certificate(Verdict::MinWeightPhaseILine, vec![line]))
        } else if lms == nonvertical {
            if m + 1 != h as u64 * q as u64 {
                return Err(MinwordsError::TheoremViolation(format!(
                    "non-vertical line support found at m = {m}, which is not hq−1 (h = {h})"
                )));
            }
            let line = gb
                .element_with_leading(&Monomial::new(0, 1))
                .expect("pattern matched")
                .clone();
            Ok(certificate(Verdict::MinWeightPhaseILine, vec![line]))
        } else {
            Err(MinwordsError::TheoremViolation(format!(
                "minimum support at m = {m} matches neither line pattern (initial ideal {:?})",
                lms
            )))
        }
    } else if m <= characterized_end(q) {
        let info = code.info();
        let all_points = enumerate_points(ctx);
        if lms == type_i_pattern(q, info.mu, info.lambda) {
            let f = gb
                .element_with_leading(&Monomial::new(info.mu, info.lambda as u32))
                .expect("pattern matched")
                .clone();
            let zeros = rational_zeros(ctx, &all_points, &f);
            if zeros != d.points() {
                return Err(MinwordsError::TheoremViolation(format!(
                    "type-(i) witness cuts {} rational points, support has {}",
                    zeros.len(),
                    d.degree()
                )));
            }
            Ok(certificate(Verdict::MinWeightTypeI, vec![f]))
        } else if let Some(mu2) = type_ii_mu(q, m).filter(|&mu2| {
            lms == vec![Monomial::new(0, mu2), Monomial::new(q, 0)]
        }) {
            let f1 = gb
                .element_with_leading(&Monomial::new(q, 0))
                .expect("pattern matched")
                .clone();
            let f2 = gb
                .element_with_leading(&Monomial::new(0, mu2))
                .expect("pattern matched")
                .clone();
            let common: Vec<CurvePoint> = all_points
                .iter()
                .filter(|p| {
                    f1.eval_point(ctx, p).is_zero() && f2.eval_point(ctx, p).is_zero()
                })
                .copied()
                .collect();
            if common != d.points() {
                return Err(MinwordsError::TheoremViolation(format!(
                    "type-(ii) witnesses cut {} common rational points, support has {}",
                    common.len(),
                    d.degree()
                )));
            }
            Ok(certificate(Verdict::MinWeightTypeII, vec![f1, f2]))
        } else {
            Err(MinwordsError::TheoremViolation(format!(
                "minimum support at m = {m} matches neither characterized pattern \
                 (initial ideal {:?})",
                lms
            )))
        }
    } else {
        Err(MinwordsError::UncharacterizedLabel { m })
    }
}
