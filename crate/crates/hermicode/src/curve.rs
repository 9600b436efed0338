//! Rational points of the affine Hermitian curve x^{q+1} = y^q + y.
//!
//! A point (x, y) ∈ GF(q²)² lies on the curve exactly when norm(x) =
//! trace(y). The curve has q³ affine rational points; [`enumerate_points`]
//! lists them once in a fixed canonical order (lexicographic on the packed
//! coordinates) which labels the coordinates P_1, …, P_n of every codeword
//! downstream, so it is part of the wire contract.
//!
//! Line sections behave asymmetrically: a vertical line x = x₀ always meets
//! the curve in exactly q points (one per trace preimage), while a horizontal
//! line y = y₀ meets it in q+1 points when trace(y₀) ≠ 0 and only in (0, y₀)
//! when trace(y₀) = 0.

use std::fmt;

use crate::field::{FieldContext, FieldElement};

/// A rational point of the Hermitian curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurvePoint {
    pub x: FieldElement,
    pub y: FieldElement,
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Errors building divisors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurveError {
    /// The point does not satisfy norm(x) = trace(y).
    NotOnCurve { x: String, y: String },
    /// The same point appeared twice.
    DuplicatePoint { x: String, y: String },
    /// An index-form divisor referenced a position outside 0..q³.
    IndexOutOfRange(usize),
}

impl fmt::Display for CurveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveError::NotOnCurve { x, y } => {
                write!(f, "point ({x}, {y}) is not on the Hermitian curve")
            }
            CurveError::DuplicatePoint { x, y } => {
                write!(f, "point ({x}, {y}) appears more than once")
            }
            CurveError::IndexOutOfRange(i) => {
                write!(f, "point index {i} is outside the canonical point list")
            }
        }
    }
}

impl std::error::Error for CurveError {}

/// A reduced effective divisor: a duplicate-free set of rational points,
/// stored sorted in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Divisor {
    points: Vec<CurvePoint>,
}

impl Divisor {
    /// Validates that every point is on the curve and none repeats.
    pub fn new(ctx: &FieldContext, mut points: Vec<CurvePoint>) -> Result<Divisor, CurveError> {
        for p in &points {
            if !is_on_curve(ctx, *p) {
                return Err(CurveError::NotOnCurve {
                    x: p.x.to_string(),
                    y: p.y.to_string(),
                });
            }
        }
        points.sort();
        for w in points.windows(2) {
            if w[0] == w[1] {
                return Err(CurveError::DuplicatePoint {
                    x: w[0].x.to_string(),
                    y: w[0].y.to_string(),
                });
            }
        }
        Ok(Divisor { points })
    }

    /// Builds a divisor from positions in the canonical point list.
    pub fn from_indices(
        ctx: &FieldContext,
        all_points: &[CurvePoint],
        indices: &[usize],
    ) -> Result<Divisor, CurveError> {
        let mut pts = Vec::with_capacity(indices.len());
        for &i in indices {
            let p = all_points.get(i).ok_or(CurveError::IndexOutOfRange(i))?;
            pts.push(*p);
        }
        Divisor::new(ctx, pts)
    }

    /// The degree of the divisor (number of points).
    pub fn degree(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Points in canonical order.
    pub fn points(&self) -> &[CurvePoint] {
        &self.points
    }

    pub fn contains(&self, p: CurvePoint) -> bool {
        self.points.binary_search(&p).is_ok()
    }

    /// Positions of the points within the canonical list `all_points`.
    pub fn to_indices(&self, all_points: &[CurvePoint]) -> Vec<usize> {
        self.points
            .iter()
            .map(|p| {
                all_points
                    .binary_search(p)
                    .expect("divisor point missing from the canonical point list")
            })
            .collect()
    }

    pub fn is_subset_of(&self, other: &Divisor) -> bool {
        self.points.iter().all(|&p| other.contains(p))
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// Whether (x, y) satisfies the curve equation norm(x) = trace(y).
pub fn is_on_curve(ctx: &FieldContext, p: CurvePoint) -> bool {
    ctx.norm(p.x) == ctx.trace(p.y)
}

/// All q³ rational points in canonical order: lexicographic on the packed
/// (x, y) coordinate pair. (0, 0) is always first.
pub fn enumerate_points(ctx: &FieldContext) -> Vec<CurvePoint> {
    let mut out = Vec::with_capacity((ctx.q() as usize).pow(3));
    for x in ctx.elements() {
        let target = ctx.norm(x);
        for y in ctx.elements() {
            if ctx.trace(y) == target {
                out.push(CurvePoint { x, y });
            }
        }
    }
    out
}

/// The section of the curve by the vertical line x = x₀: exactly q points,
/// the trace preimages of norm(x₀).
pub fn points_on_vertical_line(ctx: &FieldContext, x0: FieldElement) -> Divisor {
    let target = ctx.norm(x0);
    let pts = ctx
        .elements()
        .filter(|&y| ctx.trace(y) == target)
        .map(|y| CurvePoint { x: x0, y })
        .collect();
    Divisor::new(ctx, pts).expect("vertical sections are distinct curve points")
}

/// The section of the curve by the horizontal line y = y₀: q+1 points when
/// trace(y₀) ≠ 0, and the single point (0, y₀) when trace(y₀) = 0.
pub fn points_on_horizontal_line(ctx: &FieldContext, y0: FieldElement) -> Divisor {
    let target = ctx.trace(y0);
    let pts = ctx
        .elements()
        .filter(|&x| ctx.norm(x) == target)
        .map(|x| CurvePoint { x, y: y0 })
        .collect();
    Divisor::new(ctx, pts).expect("horizontal sections are distinct curve points")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(q: u32) -> FieldContext {
        match q {
            2 => FieldContext::new(2, 1).unwrap(),
            3 => FieldContext::new(3, 1).unwrap(),
            4 => FieldContext::new(2, 2).unwrap(),
            5 => FieldContext::new(5, 1).unwrap(),
            _ => panic!("unsupported q in tests"),
        }
    }

    #[test]
    fn point_counts_are_q_cubed() {
        for q in [2u32, 3, 4, 5] {
            let c = ctx(q);
            let pts = enumerate_points(&c);
            assert_eq!(pts.len(), (q as usize).pow(3));
            // Origin present and first (lex order starts at x=0, y=0).
            assert_eq!(pts[0], CurvePoint { x: c.zero(), y: c.zero() });
            for p in &pts {
                assert!(is_on_curve(&c, *p));
            }
            // Canonical order is sorted and duplicate-free.
            assert!(pts.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn off_curve_points_rejected() {
        let c = ctx(4);
        // (1, 0): norm(1) = 1, trace(0) = 0.
        let bad = CurvePoint { x: c.one(), y: c.zero() };
        assert!(!is_on_curve(&c, bad));
        let err = Divisor::new(&c, vec![bad]).unwrap_err();
        assert!(matches!(err, CurveError::NotOnCurve { .. }));
    }

    #[test]
    fn vertical_fibers_partition_the_curve() {
        for q in [2u32, 3, 4] {
            let c = ctx(q);
            let mut total = 0;
            for x0 in c.elements() {
                let fiber = points_on_vertical_line(&c, x0);
                assert_eq!(fiber.degree(), q as usize);
                total += fiber.degree();
            }
            assert_eq!(total, (q as usize).pow(3));
        }
    }

    #[test]
    fn horizontal_sections_sizes() {
        for q in [2u32, 3, 4] {
            let c = ctx(q);
            for y0 in c.elements() {
                let sec = points_on_horizontal_line(&c, y0);
                if ctx_trace_zero(&c, y0) {
                    assert_eq!(sec.degree(), 1);
                    assert_eq!(sec.points()[0], CurvePoint { x: c.zero(), y: y0 });
                } else {
                    assert_eq!(sec.degree(), q as usize + 1);
                }
            }
        }
    }

    fn ctx_trace_zero(c: &FieldContext, y: FieldElement) -> bool {
        c.trace(y).is_zero()
    }

    #[test]
    fn frozen_horizontal_examples() {
        // q = 4: a y0 with trace 1 gives 5 points.
        let c = ctx(4);
        let y0 = c
            .elements()
            .find(|&y| c.trace(y) == c.one())
            .expect("trace is surjective");
        assert_eq!(points_on_horizontal_line(&c, y0).degree(), 5);
        // q = 3: a y0 with trace 2 gives 4 points.
        let c = ctx(3);
        let two = c.element(2);
        let y0 = c
            .elements()
            .find(|&y| c.trace(y) == two)
            .expect("trace is surjective");
        assert_eq!(points_on_horizontal_line(&c, y0).degree(), 4);
        // trace(y0) = 0 gives exactly {(0, y0)}; y0 = 0 gives the origin.
        let c = ctx(4);
        let sec = points_on_horizontal_line(&c, c.zero());
        assert_eq!(sec.degree(), 1);
        assert_eq!(sec.points()[0], CurvePoint { x: c.zero(), y: c.zero() });
    }

    #[test]
    fn divisor_round_trips_and_validation() {
        let c = ctx(3);
        let all = enumerate_points(&c);
        let d = Divisor::from_indices(&c, &all, &[5, 1, 9]).unwrap();
        assert_eq!(d.degree(), 3);
        assert_eq!(d.to_indices(&all), vec![1, 5, 9]);
        assert!(Divisor::from_indices(&c, &all, &[1, 1]).is_err());
        assert!(Divisor::from_indices(&c, &all, &[27]).is_err());
        let sub = Divisor::from_indices(&c, &all, &[5, 9]).unwrap();
        assert!(sub.is_subset_of(&d));
        assert!(!d.is_subset_of(&sub));
    }
}
