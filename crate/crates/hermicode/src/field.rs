//! Arithmetic in the tower GF(p) ⊂ GF(q) ⊂ GF(q²), q = p^k.
//!
//! A [`FieldContext`] owns one presentation of GF(q²) as GF(p)[t]/(f) where f
//! is the first monic irreducible of degree 2k in a fixed scan order, so the
//! same (p, k) always produces the identical field. Elements are coefficient
//! vectors over GF(p) packed little-endian into a `u32` (the coefficient of
//! t^i is the i-th base-p digit); that packed integer is also the element's
//! string form, e.g. the class of t in GF(4) prints as "2".
//!
//! The distinguished subfield GF(q) is the fixed set of the Frobenius map
//! a ↦ a^q; `norm` (a^{q+1}) and `trace` (a^q + a) land in it.

use std::fmt;
use std::sync::atomic::{AtomicU32, Ordering};

/// Hard cap on |GF(q²)| = p^{2k}; the discrete-log tables are built eagerly.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;

/// Cap below which full size×size add/mul tables are also built.
const DENSE_TABLE_LIMIT: u32 = 256;

static NEXT_CONTEXT_ID: AtomicU32 = AtomicU32::new(1);

/// Errors from field construction and element parsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    /// `p` is not a prime number.
    NotPrime(u64),
    /// `k` must be at least 1.
    ZeroExtensionDegree,
    /// p^{2k} exceeds [`MAX_FIELD_SIZE`].
    TooLarge { p: u64, k: u32 },
    /// A string did not parse as an element of this field.
    BadElement(String),
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NotPrime(p) => write!(f, "{p} is not prime"),
            FieldError::ZeroExtensionDegree => write!(f, "extension degree k must be >= 1"),
            FieldError::TooLarge { p, k } => write!(
                f,
                "field GF({p}^{}) exceeds the supported size of 2^20 elements",
                2 * k
            ),
            FieldError::BadElement(s) => write!(f, "{s:?} is not an element of this field"),
        }
    }
}

impl std::error::Error for FieldError {}

/// An element of GF(q²), valid only with the [`FieldContext`] that made it.
///
/// The packed value doubles as the canonical serialization: `Display` prints
/// it in decimal and [`FieldContext::parse_element`] inverts that.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    val: u32,
    ctx: u32,
}

impl FieldElement {
    /// The packed little-endian base-p coefficient vector.
    pub fn value(self) -> u32 {
        self.val
    }

    pub fn is_zero(self) -> bool {
        self.val == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.val)
    }
}

/// One presentation of GF(q²) with its arithmetic tables.
///
/// Immutable after construction; all operations are pure, so a context can be
/// shared freely across threads.
pub struct FieldContext {
    id: u32,
    p: u32,
    k: u32,
    q: u32,
    size: u32,
    /// Modulus coefficients, little-endian, length 2k+1, leading coefficient 1.
    modulus: Vec<u32>,
    /// exp[i] = g^i for a fixed generator g, i in 0..size-1.
    exp: Vec<u32>,
    /// log[a] = i with g^i = a, for a != 0; log[0] is a sentinel.
    log: Vec<u32>,
    /// frob[a] = a^q.
    frob: Vec<u32>,
    /// Dense size×size tables for small fields (the hot-loop path).
    add_tab: Option<Vec<u32>>,
    mul_tab: Option<Vec<u32>>,
}

impl fmt::Debug for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FieldContext(GF({}^{}) = GF({}), modulus {})",
            self.p,
            2 * self.k,
            self.size,
            self.modulus_string()
        )
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Little-endian base-p digits of `v`, padded to `len`.
fn digits(mut v: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0u32; len];
    for slot in out.iter_mut() {
        *slot = v % p;
        v /= p;
        if v == 0 {
            break;
        }
    }
    out
}

fn pack(ds: &[u32], p: u32) -> u32 {
    let mut v = 0u64;
    for &d in ds.iter().rev() {
        v = v * p as u64 + d as u64;
    }
    v as u32
}

/// Remainder of `a` modulo the monic polynomial `m`, coefficients in GF(p).
fn poly_rem(mut a: Vec<u32>, m: &[u32], p: u32) -> Vec<u32> {
    let dm = m.len() - 1;
    while a.len() > dm {
        let lead = *a.last().unwrap();
        let shift = a.len() - 1 - dm;
        if lead != 0 {
            for i in 0..dm {
                let t = a[shift + i] + (p - (lead * m[i]) % p);
                a[shift + i] = t % p;
            }
        }
        a.pop();
    }
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
    a
}

fn poly_mul_mod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut prod = vec![0u32; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    poly_rem(prod, m, p)
}

/// True iff the monic polynomial `f` (little-endian, leading coeff 1) has no
/// monic factor of degree 1..=deg(f)/2 — trial division over GF(p).
fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for v in 0..count {
            let mut g = digits(v as u32, p, d);
            g.push(1);
            // f mod g == 0 means g divides f.
            let r = poly_rem(f.to_vec(), &g, p);
            if r.iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl FieldContext {
    /// Builds GF(q²) for q = p^k.
    ///
    /// Deterministic: the modulus is the first irreducible among the monic
    /// degree-2k polynomials over GF(p), scanned in increasing order of their
    /// packed integer encoding (highest-degree coefficient most significant),
    /// so e.g. GF(4) gets t²+t+1 and GF(16) gets t⁴+t+1. Cross-tool
    /// comparisons against other presentations require a basis conversion.
    pub fn new(p: u64, k: u32) -> Result<FieldContext, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if k == 0 {
            return Err(FieldError::ZeroExtensionDegree);
        }
        let mut size = 1u64;
        for _ in 0..2 * k {
            size = size.saturating_mul(p);
            if size > MAX_FIELD_SIZE {
                return Err(FieldError::TooLarge { p, k });
            }
        }
        let p = p as u32;
        let size = size as u32;
        let q = (1..=k).fold(1u32, |acc, _| acc * p);

        let deg = (2 * k) as usize;
        let mut modulus = None;
        for v in 0..size {
            let mut f = digits(v, p, deg);
            f.push(1);
            if is_irreducible(&f, p) {
                modulus = Some(f);
                break;
            }
        }
        let modulus = modulus.expect("an irreducible polynomial of every degree exists");

        // Find a generator of the multiplicative group by order testing.
        let group = (size - 1) as u64;
        let factors = prime_factors(group);
        let pow_packed = |base: u32, mut e: u64| -> u32 {
            let mut acc = vec![1u32];
            let mut b = digits(base, p, deg);
            while e > 0 {
                if e & 1 == 1 {
                    acc = poly_mul_mod(&acc, &b, &modulus, p);
                }
                b = poly_mul_mod(&b, &b, &modulus, p);
                e >>= 1;
            }
            pack(&acc, p)
        };
        let mut generator = 0;
        for cand in 2..size {
            if factors.iter().all(|&f| pow_packed(cand, group / f) != 1) {
                generator = cand;
                break;
            }
        }
        assert!(generator != 0, "the multiplicative group is cyclic");

        let mut exp = vec![0u32; (size - 1) as usize];
        let mut log = vec![u32::MAX; size as usize];
        let gdig = digits(generator, p, deg);
        let mut cur = vec![1u32];
        for (i, slot) in exp.iter_mut().enumerate() {
            let v = pack(&cur, p);
            *slot = v;
            log[v as usize] = i as u32;
            cur = poly_mul_mod(&cur, &gdig, &modulus, p);
        }

        let mut ctx = FieldContext {
            id: NEXT_CONTEXT_ID.fetch_add(1, Ordering::Relaxed),
            p,
            k,
            q,
            size,
            modulus,
            exp,
            log,
            frob: Vec::new(),
            add_tab: None,
            mul_tab: None,
        };
        ctx.frob = (0..size).map(|v| ctx.pow_raw(v, q as u64)).collect();
        if size <= DENSE_TABLE_LIMIT {
            let mut add_tab = vec![0u32; (size * size) as usize];
            let mut mul_tab = vec![0u32; (size * size) as usize];
            for a in 0..size {
                for b in 0..size {
                    add_tab[(a * size + b) as usize] = ctx.add_digits(a, b);
                    mul_tab[(a * size + b) as usize] = ctx.mul_logexp(a, b);
                }
            }
            ctx.add_tab = Some(add_tab);
            ctx.mul_tab = Some(mul_tab);
        }
        Ok(ctx)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// The subfield order q = p^k; the curve and code layers key off this.
    pub fn q(&self) -> u32 {
        self.q
    }

    /// |GF(q²)| = q².
    pub fn size(&self) -> u32 {
        self.size
    }

    /// Modulus coefficients, little-endian, leading coefficient included.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Human-readable modulus, e.g. "t^2 + t + 1".
    pub fn modulus_string(&self) -> String {
        let mut terms = Vec::new();
        for (i, &c) in self.modulus.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let t = match (i, c) {
                (0, c) => format!("{c}"),
                (1, 1) => "t".to_string(),
                (1, c) => format!("{c}*t"),
                (i, 1) => format!("t^{i}"),
                (i, c) => format!("{c}*t^{i}"),
            };
            terms.push(t);
        }
        terms.join(" + ")
    }

    #[inline]
    fn check(&self, a: FieldElement) -> u32 {
        assert!(
            a.ctx == self.id,
            "field element used with a context it does not belong to"
        );
        a.val
    }

    #[inline]
    fn wrap(&self, v: u32) -> FieldElement {
        FieldElement { val: v, ctx: self.id }
    }

    /// The element with the given packed value. Panics if out of range.
    pub fn element(&self, v: u32) -> FieldElement {
        assert!(v < self.size, "value {v} out of range for this field");
        self.wrap(v)
    }

    pub fn zero(&self) -> FieldElement {
        self.wrap(0)
    }

    pub fn one(&self) -> FieldElement {
        self.wrap(1)
    }

    /// All elements in canonical (packed-value) order: 0, 1, 2, ...
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.size).map(move |v| self.wrap(v))
    }

    /// The q elements fixed by Frobenius, in canonical order.
    pub fn subfield_elements(&self) -> Vec<FieldElement> {
        self.elements().filter(|&a| self.is_in_subfield(a)).collect()
    }

    pub fn parse_element(&self, s: &str) -> Result<FieldElement, FieldError> {
        let v: u32 = s
            .trim()
            .parse()
            .map_err(|_| FieldError::BadElement(s.to_string()))?;
        if v >= self.size {
            return Err(FieldError::BadElement(s.to_string()));
        }
        Ok(self.wrap(v))
    }

    #[inline]
    fn add_digits(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let mut out = 0u32;
        let mut mult = 1u32;
        let (mut a, mut b) = (a, b);
        while a != 0 || b != 0 {
            out += ((a + b) % self.p) * mult;
            a /= self.p;
            b /= self.p;
            mult *= self.p;
        }
        out
    }

    #[inline]
    fn mul_logexp(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = (self.size - 1) as u64;
        let i = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % n;
        self.exp[i as usize]
    }

    #[inline]
    pub(crate) fn add_raw(&self, a: u32, b: u32) -> u32 {
        match &self.add_tab {
            Some(t) => t[(a * self.size + b) as usize],
            None => self.add_digits(a, b),
        }
    }

    #[inline]
    pub(crate) fn mul_raw(&self, a: u32, b: u32) -> u32 {
        match &self.mul_tab {
            Some(t) => t[(a * self.size + b) as usize],
            None => self.mul_logexp(a, b),
        }
    }

    #[inline]
    pub(crate) fn neg_raw(&self, a: u32) -> u32 {
        if self.p == 2 || a == 0 {
            return a;
        }
        let mut out = 0u32;
        let mut mult = 1u32;
        let mut a = a;
        while a != 0 {
            let d = a % self.p;
            out += if d == 0 { 0 } else { self.p - d } * mult;
            a /= self.p;
            mult *= self.p;
        }
        out
    }

    #[inline]
    pub(crate) fn sub_raw(&self, a: u32, b: u32) -> u32 {
        self.add_raw(a, self.neg_raw(b))
    }

    #[inline]
    pub(crate) fn inv_raw(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero");
        let n = self.size - 1;
        self.exp[((n - self.log[a as usize]) % n) as usize]
    }

    pub(crate) fn pow_raw(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = (self.size - 1) as u64;
        let i = (self.log[a as usize] as u64 * (e % n)) % n;
        self.exp[i as usize]
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let r = self.add_raw(self.check(a), self.check(b));
        self.wrap(r)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let r = self.sub_raw(self.check(a), self.check(b));
        self.wrap(r)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let r = self.neg_raw(self.check(a));
        self.wrap(r)
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let r = self.mul_raw(self.check(a), self.check(b));
        self.wrap(r)
    }

    /// Multiplicative inverse. Panics on zero — callers guard the pivot.
    pub fn inv(&self, a: FieldElement) -> FieldElement {
        let r = self.inv_raw(self.check(a));
        self.wrap(r)
    }

    pub fn try_inv(&self, a: FieldElement) -> Option<FieldElement> {
        if self.check(a) == 0 {
            None
        } else {
            Some(self.inv(a))
        }
    }

    /// a^e, with pow(a, 0) = 1 for every a (including zero).
    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        let r = self.pow_raw(self.check(a), e);
        self.wrap(r)
    }

    /// Frobenius a ↦ a^q; an involution on GF(q²).
    pub fn frobenius(&self, a: FieldElement) -> FieldElement {
        let v = self.check(a);
        self.wrap(self.frob[v as usize])
    }

    /// The norm a^{q+1} into GF(q); on GF(q²)* it is a surjective group map
    /// onto GF(q)* with fibers of size q+1.
    pub fn norm(&self, a: FieldElement) -> FieldElement {
        let v = self.check(a);
        self.wrap(self.mul_raw(self.frob[v as usize], v))
    }

    /// The trace a^q + a into GF(q); GF(q)-linear, surjective, fibers of
    /// size q.
    pub fn trace(&self, a: FieldElement) -> FieldElement {
        let v = self.check(a);
        self.wrap(self.add_raw(self.frob[v as usize], v))
    }

    pub fn is_in_subfield(&self, a: FieldElement) -> bool {
        let v = self.check(a);
        self.frob[v as usize] == v
    }
}
