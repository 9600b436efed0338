//! Hermitian codes over GF(q²).
//!
//! The library is organised around the affine Hermitian curve
//! x^{q+1} = y^q + y over GF(q²) and the family of evaluation-dual codes C_m
//! cut out by the monomials of weighted degree at most m:
//!
//! - [`field`] — the tower GF(p) ⊂ GF(q) ⊂ GF(q²) with norm and trace.
//! - [`curve`] — rational points of the curve, line sections, divisors.
//! - [`semigroup`] — the numerical semigroup ⟨q, q+1⟩, the monomial basis of
//!   the coordinate ring, and the code-label invariants (m̃, δ, δ̃, phase).
//! - [`groebner`] — bivariate polynomials in the weighted degree order,
//!   Buchberger, Buchberger–Möller vanishing ideals, and footprints.
//! - [`linalg`] — dense matrices over GF(q²): rank, kernels, solving.
//! - [`code`] — the codes C_m: parity-check construction and codeword
//!   support searches.
//! - [`minwords`] — the minimum distance formula and explicit
//!   minimum-weight codeword supports: line configurations, curve sections,
//!   and grid intersections, with certified classification.
//! - [`oracle`] — brute-force ground truth: exhaustive distance search and
//!   the census of all minimum-weight supports.
//! - [`cli`] — the `hermicode` command-line front end.
//!
//! Start with the runnable tours in `examples/`; each demonstrates one
//! capability end to end.

pub mod cli;
pub mod code;
pub mod curve;
pub mod field;
pub mod groebner;
pub mod linalg;
pub mod minwords;
pub mod oracle;
pub mod semigroup;
