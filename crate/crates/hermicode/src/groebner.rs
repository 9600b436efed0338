//! Bivariate polynomial arithmetic over GF(q²) and Gröbner-basis machinery.
//!
//! Everything here is specialised to the polynomial ring GF(q²)[x, y] under
//! the graded order that compares monomials by total degree first and breaks
//! ties by preferring the smaller power of `y` (degrevlex with y > x, so
//! x² ≺ x·y ≺ y²).  The module provides:
//!
//! * [`Monomial`] and [`cmp_order`] — the order itself, plus the weighted
//!   degree `w(x^r y^s) = r·q + s·(q+1)` used throughout the crate;
//! * [`Polynomial`] — a sparse term map with arithmetic, evaluation, a text
//!   format (`"c*x^r*y^s"` terms, leading term first), and a parser;
//! * [`buchberger`] — a deterministic Buchberger loop returning the reduced
//!   Gröbner basis of an ideal given by generators;
//! * [`vanishing_ideal`] — the Buchberger–Möller algorithm: the reduced
//!   Gröbner basis of all polynomials vanishing on a finite set of distinct
//!   curve points, together with its [`Footprint`];
//! * [`normal_form`] — the unique remainder of division by a Gröbner basis.
//!
//! The footprint (the set of monomials outside the initial ideal, sometimes
//! called the staircase) of the vanishing ideal of n distinct points always
//! has exactly n elements; that fact is what lets the rest of the crate turn
//! statements about divisor degrees into statements about monomials.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::error::Error;
use std::fmt;

use crate::curve::CurvePoint;
use crate::field::{FieldContext, FieldElement};

/// A monomial x^r · y^s.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    /// Exponent of x.
    pub r: u32,
    /// Exponent of y.
    pub s: u32,
}

impl Monomial {
    /// The unit monomial 1 = x⁰y⁰.
    pub const ONE: Monomial = Monomial { r: 0, s: 0 };

    pub fn new(r: u32, s: u32) -> Self {
        Monomial { r, s }
    }

    pub fn is_one(&self) -> bool {
        self.r == 0 && self.s == 0
    }

    pub fn total_degree(&self) -> u32 {
        self.r + self.s
    }

    /// Weighted degree r·q + s·(q+1); the grading induced by the two
    /// generators of the numerical semigroup attached to the curve.
    pub fn w_weight(&self, q: u32) -> u64 {
        self.r as u64 * q as u64 + self.s as u64 * (q as u64 + 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.r <= other.r && self.s <= other.s
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.r + other.r, self.s + other.s)
    }

    /// `other / self` when `self` divides `other`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial::new(other.r - self.r, other.s - self.s))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.r.max(other.r), self.s.max(other.s))
    }
}

/// The monomial order: ascending total degree, ties broken by ascending
/// y-exponent.  Equivalently degrevlex with y > x.
pub fn cmp_order(a: &Monomial, b: &Monomial) -> Ordering {
    (a.total_degree(), a.s).cmp(&(b.total_degree(), b.s))
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_order(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut parts: Vec<String> = Vec::new();
        match self.r {
            0 => {}
            1 => parts.push("x".to_string()),
            r => parts.push(format!("x^{r}")),
        }
        match self.s {
            0 => {}
            1 => parts.push("y".to_string()),
            s => parts.push(format!("y^{s}")),
        }
        write!(f, "{}", parts.join("*"))
    }
}

/// Errors from Gröbner-basis computations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroebnerError {
    /// The same point appeared twice in a vanishing-ideal computation.
    DuplicatePoint { x: String, y: String },
    /// A footprint was requested for an ideal whose quotient ring is not
    /// finite-dimensional (no pure power of x, or of y, leads the basis).
    NotZeroDimensional,
    /// A polynomial string could not be parsed.
    Parse(String),
}

impl fmt::Display for GroebnerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroebnerError::DuplicatePoint { x, y } => {
                write!(f, "duplicate point ({x}, {y}) in vanishing-ideal input")
            }
            GroebnerError::NotZeroDimensional => {
                write!(f, "ideal is not zero-dimensional; footprint is infinite")
            }
            GroebnerError::Parse(msg) => write!(f, "cannot parse polynomial: {msg}"),
        }
    }
}

impl Error for GroebnerError {}

/// A sparse bivariate polynomial: monomial → nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, FieldElement>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The polynomial consisting of the single term `coeff · mono`.
    pub fn term(mono: Monomial, coeff: FieldElement) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mono, coeff);
        }
        Polynomial { terms }
    }

    pub fn constant(c: FieldElement) -> Self {
        Polynomial::term(Monomial::ONE, c)
    }

    /// Build from a list of (monomial, coefficient) pairs, summing repeats
    /// and dropping zeros.
    pub fn from_terms(ctx: &FieldContext, terms: &[(Monomial, FieldElement)]) -> Self {
        let mut p = Polynomial::zero();
        for &(mono, coeff) in terms {
            p.add_term(ctx, mono, coeff);
        }
        p
    }

    /// Iterate terms in ascending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElement)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, mono: &Monomial) -> Option<FieldElement> {
        self.terms.get(mono).copied()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<FieldElement> {
        self.terms.values().next_back().copied()
    }

    /// Largest x-exponent over all terms (0 for the zero polynomial).
    pub fn x_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.r).max().unwrap_or(0)
    }

    fn add_term(&mut self, ctx: &FieldContext, mono: Monomial, coeff: FieldElement) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.remove(&mono) {
            None => {
                self.terms.insert(mono, coeff);
            }
            Some(old) => {
                let sum = ctx.add(old, coeff);
                if !sum.is_zero() {
                    self.terms.insert(mono, sum);
                }
            }
        }
    }

    pub fn add(&self, ctx: &FieldContext, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (&mono, &coeff) in other.terms.iter() {
            out.add_term(ctx, mono, coeff);
        }
        out
    }

    pub fn neg(&self, ctx: &FieldContext) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(&mono, &coeff)| (mono, ctx.neg(coeff)))
            .collect();
        Polynomial { terms }
    }

    pub fn sub(&self, ctx: &FieldContext, other: &Polynomial) -> Polynomial {
        self.add(ctx, &other.neg(ctx))
    }

    pub fn scale(&self, ctx: &FieldContext, c: FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(&mono, &coeff)| (mono, ctx.mul(coeff, c)))
            .collect();
        Polynomial { terms }
    }

    /// Multiply by the single term `c · mono`.
    pub fn mul_term(&self, ctx: &FieldContext, mono: Monomial, c: FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(&m, &coeff)| (m.mul(&mono), ctx.mul(coeff, c)))
            .collect();
        Polynomial { terms }
    }

    pub fn mul(&self, ctx: &FieldContext, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (&m1, &c1) in self.terms.iter() {
            for (&m2, &c2) in other.terms.iter() {
                out.add_term(ctx, m1.mul(&m2), ctx.mul(c1, c2));
            }
        }
        out
    }

    /// Divide by the leading coefficient so the leading term is monic.
    pub fn monic(&self, ctx: &FieldContext) -> Polynomial {
        match self.leading_coeff() {
            None => Polynomial::zero(),
            Some(lc) => self.scale(ctx, ctx.inv(lc)),
        }
    }

    pub fn eval(&self, ctx: &FieldContext, x: FieldElement, y: FieldElement) -> FieldElement {
        let mut acc = ctx.zero();
        for (&mono, &coeff) in self.terms.iter() {
            let xv = ctx.pow(x, mono.r as u64);
            let yv = ctx.pow(y, mono.s as u64);
            acc = ctx.add(acc, ctx.mul(coeff, ctx.mul(xv, yv)));
        }
        acc
    }

    pub fn eval_point(&self, ctx: &FieldContext, p: &CurvePoint) -> FieldElement {
        self.eval(ctx, p.x, p.y)
    }
}

impl fmt::Display for Polynomial {
    /// Terms in descending monomial order, each as `coeff`, `coeff*x^r`,
    /// `coeff*y^s`, or `coeff*x^r*y^s`, joined by ` + `.  Coefficients print
    /// as the decimal value of their packed representation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(mono, coeff)| {
                if mono.is_one() {
                    format!("{coeff}")
                } else {
                    format!("{coeff}*{mono}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Parse the format produced by [`Polynomial`]'s `Display`: terms joined by
/// `+`, each term a decimal coefficient optionally followed by `*x^r` and/or
/// `*y^s` factors (exponent suffix omitted when it is 1).
pub fn parse_polynomial(ctx: &FieldContext, input: &str) -> Result<Polynomial, GroebnerError> {
    let trimmed = input.trim();
    if trimmed.is_empty() {
        return Err(GroebnerError::Parse("empty input".to_string()));
    }
    if trimmed == "0" {
        return Ok(Polynomial::zero());
    }
    let mut poly = Polynomial::zero();
    for raw_term in trimmed.split('+') {
        let term = raw_term.trim();
        if term.is_empty() {
            return Err(GroebnerError::Parse(format!("empty term in \"{input}\"")));
        }
        let mut coeff: Option<FieldElement> = None;
        let mut r: u32 = 0;
        let mut s: u32 = 0;
        for (i, factor) in term.split('*').enumerate() {
            let factor = factor.trim();
            if i == 0 {
                let c = ctx
                    .parse_element(factor)
                    .map_err(|e| GroebnerError::Parse(format!("bad coefficient \"{factor}\": {e}")))?;
                coeff = Some(c);
                continue;
            }
            let (var, exp_str) = match factor.split_once('^') {
                Some((v, e)) => (v, e),
                None => (factor, "1"),
            };
            let exp: u32 = exp_str
                .parse()
                .map_err(|_| GroebnerError::Parse(format!("bad exponent in \"{factor}\"")))?;
            match var {
                "x" => r += exp,
                "y" => s += exp,
                other => {
                    return Err(GroebnerError::Parse(format!("unknown variable \"{other}\"")));
                }
            }
        }
        let coeff = coeff.ok_or_else(|| GroebnerError::Parse(format!("missing coefficient in \"{term}\"")))?;
        poly.add_term(ctx, Monomial::new(r, s), coeff);
    }
    Ok(poly)
}

/// The defining polynomial of the curve: x^{q+1} − y^q − y.
pub fn hermitian_polynomial(ctx: &FieldContext) -> Polynomial {
    let q = ctx.q();
    let one = ctx.one();
    let minus_one = ctx.neg(one);
    Polynomial::from_terms(
        ctx,
        &[
            (Monomial::new(q + 1, 0), one),
            (Monomial::new(0, q), minus_one),
            (Monomial::new(0, 1), minus_one),
        ],
    )
}

/// A reduced Gröbner basis: monic elements, no term of any element divisible
/// by the leading monomial of another, sorted by ascending leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    polys: Vec<Polynomial>,
}

impl GroebnerBasis {
    fn from_reduced(mut polys: Vec<Polynomial>) -> Self {
        polys.sort_by(|a, b| {
            cmp_order(
                &a.leading_monomial().expect("no zero polynomial in a Gröbner basis"),
                &b.leading_monomial().expect("no zero polynomial in a Gröbner basis"),
            )
        });
        GroebnerBasis { polys }
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Leading monomials in ascending order; these generate the initial ideal.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys
            .iter()
            .map(|p| p.leading_monomial().expect("no zero polynomial in a Gröbner basis"))
            .collect()
    }

    /// Does `mono` lie in the initial ideal (is it divisible by some leading
    /// monomial)?
    pub fn monomial_in_initial(&self, mono: &Monomial) -> bool {
        self.polys.iter().any(|p| {
            p.leading_monomial()
                .expect("no zero polynomial in a Gröbner basis")
                .divides(mono)
        })
    }

    /// The element whose leading monomial equals `mono`, if present.
    pub fn element_with_leading(&self, mono: &Monomial) -> Option<&Polynomial> {
        self.polys
            .iter()
            .find(|p| p.leading_monomial().as_ref() == Some(mono))
    }

    /// Enumerate the monomials outside the initial ideal.  Errors when that
    /// set is infinite, i.e. when no pure power of x or of y appears among
    /// the leading monomials.
    pub fn footprint(&self) -> Result<Footprint, GroebnerError> {
        let lms = self.leading_monomials();
        if lms.iter().any(|m| m.is_one()) {
            return Ok(Footprint { monos: Vec::new() });
        }
        let x_bound = lms.iter().filter(|m| m.s == 0).map(|m| m.r).min();
        let y_bound = lms.iter().filter(|m| m.r == 0).map(|m| m.s).min();
        let (x_bound, y_bound) = match (x_bound, y_bound) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(GroebnerError::NotZeroDimensional),
        };
        let mut monos = Vec::new();
        for r in 0..x_bound {
            // Smallest s with x^r·y^s in the initial ideal.
            let s_min = lms
                .iter()
                .filter(|m| m.r <= r)
                .map(|m| m.s)
                .min()
                .unwrap_or(y_bound);
            for s in 0..s_min {
                monos.push(Monomial::new(r, s));
            }
        }
        monos.sort();
        Ok(Footprint { monos })
    }
}

/// The monomials outside the initial ideal of a zero-dimensional ideal,
/// sorted ascending in the monomial order.  Its cardinality equals the
/// dimension of the quotient ring — for a vanishing ideal, the number of
/// points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Footprint {
    monos: Vec<Monomial>,
}

impl Footprint {
    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monos
    }

    pub fn contains(&self, mono: &Monomial) -> bool {
        self.monos.binary_search(mono).is_ok()
    }

    /// Largest weighted degree among the members (None when empty).
    pub fn max_w_weight(&self, q: u32) -> Option<u64> {
        self.monos.iter().map(|m| m.w_weight(q)).max()
    }

    /// True when every divisor of every member is also a member.
    pub fn is_division_closed(&self) -> bool {
        self.monos.iter().all(|m| {
            (m.r == 0 || self.contains(&Monomial::new(m.r - 1, m.s)))
                && (m.s == 0 || self.contains(&Monomial::new(m.r, m.s - 1)))
        })
    }
}

/// Reduce `f` modulo `gens`: repeatedly cancel the leading term of the
/// working polynomial against the first generator whose leading monomial
/// divides it, moving irreducible leading terms to the remainder.
fn reduce_by(ctx: &FieldContext, f: &Polynomial, gens: &[Polynomial]) -> Polynomial {
    let mut work = f.clone();
    let mut remainder = Polynomial::zero();
    'outer: while let Some(lm) = work.leading_monomial() {
        let lc = work.leading_coeff().expect("nonzero polynomial has a leading coefficient");
        for g in gens {
            let glm = match g.leading_monomial() {
                Some(m) => m,
                None => continue,
            };
            if let Some(quot) = glm.checked_div(&lm) {
                let glc = g.leading_coeff().expect("nonzero polynomial has a leading coefficient");
                let factor = ctx.mul(lc, ctx.inv(glc));
                work = work.sub(ctx, &g.mul_term(ctx, quot, factor));
                continue 'outer;
            }
        }
        // Leading term irreducible: move it to the remainder.
        remainder.add_term(ctx, lm, lc);
        work.terms.remove(&lm);
    }
    remainder
}

/// The unique normal form of `f` modulo a Gröbner basis: the remainder is
/// supported on the footprint and depends only on the residue class of `f`.
pub fn normal_form(ctx: &FieldContext, f: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    reduce_by(ctx, f, &gb.polys)
}

/// The S-polynomial of `f` and `g`.
pub fn s_polynomial(ctx: &FieldContext, f: &Polynomial, g: &Polynomial) -> Polynomial {
    let fl = f.leading_monomial().expect("S-polynomial of the zero polynomial");
    let gl = g.leading_monomial().expect("S-polynomial of the zero polynomial");
    let lcm = fl.lcm(&gl);
    let fq = fl.checked_div(&lcm).expect("leading monomial divides the lcm");
    let gq = gl.checked_div(&lcm).expect("leading monomial divides the lcm");
    let fc = ctx.inv(f.leading_coeff().expect("nonzero polynomial has a leading coefficient"));
    let gc = ctx.inv(g.leading_coeff().expect("nonzero polynomial has a leading coefficient"));
    f.mul_term(ctx, fq, fc).sub(ctx, &g.mul_term(ctx, gq, gc))
}

/// Buchberger's algorithm with the normal selection strategy: the pending
/// pair with the smallest lcm (ties broken by creation order) is processed
/// first, pairs with coprime leading monomials are skipped, and the final
/// basis is minimalised, interreduced, and made monic.  The result is the
/// reduced Gröbner basis, which is unique for the ideal and the order, so
/// the whole computation is deterministic.
pub fn buchberger(ctx: &FieldContext, gens: &[Polynomial]) -> GroebnerBasis {
    let mut basis: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic(ctx))
        .collect();

    struct Pair {
        i: usize,
        j: usize,
        lcm: Monomial,
        seq: u64,
    }
    let mut pairs: Vec<Pair> = Vec::new();
    let mut seq: u64 = 0;
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let lcm = basis[i]
                .leading_monomial()
                .expect("basis elements are nonzero")
                .lcm(&basis[j].leading_monomial().expect("basis elements are nonzero"));
            pairs.push(Pair { i, j, lcm, seq });
            seq += 1;
        }
    }

    while !pairs.is_empty() {
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| cmp_order(&a.lcm, &b.lcm).then(a.seq.cmp(&b.seq)))
            .map(|(idx, _)| idx)
            .expect("pairs is nonempty");
        let pair = pairs.swap_remove(best);
        let lm_i = basis[pair.i].leading_monomial().expect("basis elements are nonzero");
        let lm_j = basis[pair.j].leading_monomial().expect("basis elements are nonzero");
        // Coprime leading monomials: the S-polynomial reduces to zero.
        if pair.lcm == lm_i.mul(&lm_j) {
            continue;
        }
        let s = s_polynomial(ctx, &basis[pair.i], &basis[pair.j]);
        let h = reduce_by(ctx, &s, &basis);
        if h.is_zero() {
            continue;
        }
        let h = h.monic(ctx);
        let h_lm = h.leading_monomial().expect("h is nonzero");
        for i in 0..basis.len() {
            let lcm = basis[i]
                .leading_monomial()
                .expect("basis elements are nonzero")
                .lcm(&h_lm);
            pairs.push(Pair { i, j: basis.len(), lcm, seq });
            seq += 1;
        }
        basis.push(h);
    }

    // Minimalise: drop elements whose leading monomial is divisible by the
    // leading monomial of another retained element.
    let lms: Vec<Monomial> = basis
        .iter()
        .map(|p| p.leading_monomial().expect("basis elements are nonzero"))
        .collect();
    let mut keep: Vec<Polynomial> = Vec::new();
    for (i, p) in basis.iter().enumerate() {
        let lm = lms[i];
        let redundant = lms.iter().enumerate().any(|(j, other)| {
            j != i && other.divides(&lm) && (*other != lm || j < i)
        });
        if !redundant {
            keep.push(p.clone());
        }
    }
    keep.sort_by(|a, b| {
        cmp_order(
            &a.leading_monomial().expect("basis elements are nonzero"),
            &b.leading_monomial().expect("basis elements are nonzero"),
        )
    });

    // Interreduce tails until stable.
    loop {
        let mut changed = false;
        for i in 0..keep.len() {
            let others: Vec<Polynomial> = keep
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, p)| p.clone())
                .collect();
            let reduced = reduce_by(ctx, &keep[i], &others).monic(ctx);
            if reduced != keep[i] {
                keep[i] = reduced;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    GroebnerBasis::from_reduced(keep)
}

/// Buchberger–Möller: the reduced Gröbner basis of the ideal of all
/// polynomials vanishing on `points`, plus its footprint.  Candidate
/// monomials are scanned in ascending order; a candidate whose evaluation
/// vector is independent of those seen so far joins the footprint, and one
/// whose evaluation vector is a combination of earlier ones yields a basis
/// element (the candidate minus that combination).
pub fn vanishing_ideal(
    ctx: &FieldContext,
    points: &[CurvePoint],
) -> Result<(GroebnerBasis, Footprint), GroebnerError> {
    let mut sorted = points.to_vec();
    sorted.sort();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(GroebnerError::DuplicatePoint {
                x: w[0].x.to_string(),
                y: w[0].y.to_string(),
            });
        }
    }

    let n = points.len();
    struct Row {
        vec: Vec<u32>,
        pivot: usize,
        comb: Polynomial,
    }
    let mut rows: Vec<Row> = Vec::new();
    let mut footprint: Vec<Monomial> = Vec::new();
    let mut gb: Vec<Polynomial> = Vec::new();
    let mut candidates: BTreeSet<Monomial> = BTreeSet::new();
    candidates.insert(Monomial::ONE);

    while let Some(tau) = candidates.pop_first() {
        if gb
            .iter()
            .any(|g| g.leading_monomial().expect("basis elements are nonzero").divides(&tau))
        {
            continue;
        }
        // Evaluation vector of tau at all points.
        let mut v: Vec<u32> = points
            .iter()
            .map(|p| {
                let xv = ctx.pow_raw(p.x.value(), tau.r as u64);
                let yv = ctx.pow_raw(p.y.value(), tau.s as u64);
                ctx.mul_raw(xv, yv)
            })
            .collect();
        // Reduce against the echelon rows, tracking the combination.
        let mut comb = Polynomial::term(tau, ctx.one());
        for row in &rows {
            let c = v[row.pivot];
            if c != 0 {
                for (vi, ri) in v.iter_mut().zip(row.vec.iter()) {
                    *vi = ctx.sub_raw(*vi, ctx.mul_raw(c, *ri));
                }
                comb = comb.sub(ctx, &row.comb.scale(ctx, ctx.element(c)));
            }
        }
        match v.iter().position(|&c| c != 0) {
            None => {
                // tau reduces to zero on the points: comb vanishes on all of
                // them and has leading monomial tau.
                gb.push(comb);
            }
            Some(pivot) => {
                let inv = ctx.inv_raw(v[pivot]);
                for vi in v.iter_mut() {
                    *vi = ctx.mul_raw(*vi, inv);
                }
                let comb = comb.scale(ctx, ctx.element(inv));
                rows.push(Row { vec: v, pivot, comb });
                footprint.push(tau);
                candidates.insert(Monomial::new(tau.r + 1, tau.s));
                candidates.insert(Monomial::new(tau.r, tau.s + 1));
            }
        }
    }

    debug_assert_eq!(footprint.len(), n);
    footprint.sort();
    Ok((GroebnerBasis::from_reduced(gb), Footprint { monos: footprint }))
}

/// Drop every monomial divisible by another in the list; the survivors are
/// the minimal generators of the monomial ideal the list generates.
/// Returns them sorted ascending.
pub fn minimalize_monomials(monos: &[Monomial]) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    for (i, m) in monos.iter().enumerate() {
        let redundant = monos.iter().enumerate().any(|(j, other)| {
            j != i && other.divides(m) && (*other != *m || j < i)
        });
        if !redundant {
            out.push(*m);
        }
    }
    out.sort();
    out.dedup();
    out
}
