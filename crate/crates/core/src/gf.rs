//! Exact arithmetic in finite fields.
//!
//! Two families are supported: prime fields `F_p` with `3 <= p <= 65521`,
//! and binary extension fields `GF(2^m)` with `2 <= m <= 16` represented as
//! polynomials over `GF(2)` modulo an irreducible reduction polynomial. Every
//! element is a plain integer in `[0, q)`; for binary fields bit `i` is the
//! coefficient of `x^i`.
//!
//! A [`Field`] carries a primitive element `alpha` and eagerly built
//! log/antilog tables relative to it, so multiplication, inversion and
//! discrete logarithms are table lookups.
//!
//! ```
//! use rsic::gf::{Fe, Field};
//!
//! let f = Field::prime(7)?.with_alpha(Fe(5))?;
//! assert_eq!(f.add(Fe(4), Fe(5)), Fe(2));
//! assert_eq!(f.mul(Fe(5), Fe(5)), Fe(4));
//! assert_eq!(f.dlog(Fe(2))?, 4);
//! # Ok::<(), rsic::Error>(())
//! ```

use std::cell::Cell;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported prime characteristic.
pub const MAX_PRIME: u32 = 65521;
/// Largest supported binary extension degree.
pub const MAX_BINARY_DEGREE: u32 = 16;
/// The usual GF(256) reduction polynomial `x^8 + x^4 + x^3 + x^2 + 1`.
pub const GF256_REDUCTION: u32 = 0x11D;

thread_local! {
    static MUL_COUNT: Cell<u64> = const { Cell::new(0) };
}

/// Number of field multiplications (including divisions) performed on the
/// current thread so far. Take the difference of two readings to measure a
/// computation.
pub fn mul_count() -> u64 {
    MUL_COUNT.with(Cell::get)
}

#[inline]
fn count_mul() {
    MUL_COUNT.with(|c| c.set(c.get() + 1));
}

/// A field element, stored as its canonical integer representative.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fe(pub u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Prime,
    BinaryExtension,
}

/// Default irreducible (in fact primitive) reduction polynomials for
/// `GF(2^m)`, indexed by `m`.
pub fn default_reduction(m: u32) -> Option<u32> {
    let mask = match m {
        2 => 0x7,
        3 => 0xB,
        4 => 0x13,
        5 => 0x25,
        6 => 0x43,
        7 => 0x89,
        8 => GF256_REDUCTION,
        9 => 0x211,
        10 => 0x409,
        11 => 0x805,
        12 => 0x1053,
        13 => 0x201B,
        14 => 0x4443,
        15 => 0x8003,
        16 => 0x1100B,
        _ => return None,
    };
    Some(mask)
}

/// A finite field `F_q` together with a primitive element.
#[derive(Clone)]
pub struct Field {
    kind: FieldKind,
    p: u32,
    m: u32,
    q: u32,
    reduction: u32,
    alpha: Fe,
    // log[x] for x in 1..q; log[0] is unused.
    log: Vec<u32>,
    // exp[i] = alpha^i for i in 0..2(q-1), doubled so that log sums never wrap.
    exp: Vec<u32>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = f.debug_struct("Field");
        s.field("kind", &self.kind).field("q", &self.q);
        if self.kind == FieldKind::BinaryExtension {
            s.field("reduction", &format_args!("{:#x}", self.reduction));
        }
        s.field("alpha", &self.alpha.0).finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
            && self.q == other.q
            && self.reduction == other.reduction
            && self.alpha == other.alpha
    }
}

impl Eq for Field {}

impl Field {
    /// The prime field `F_p`, with the smallest primitive element as `alpha`.
    pub fn prime(p: u32) -> Result<Field> {
        if !(3..=MAX_PRIME).contains(&p) {
            return Err(Error::UnsupportedField(format!(
                "prime fields need 3 <= p <= {MAX_PRIME}, got {p}"
            )));
        }
        if !is_prime(p) {
            return Err(Error::UnsupportedField(format!("{p} is not prime")));
        }
        Ok(Field::raw(FieldKind::Prime, p, 1, p, 0).finish())
    }

    /// `GF(2^m)` reduced by `reduction`, given as a bit mask including the
    /// leading `x^m` term.
    pub fn binary(m: u32, reduction: u32) -> Result<Field> {
        if !(2..=MAX_BINARY_DEGREE).contains(&m) {
            return Err(Error::UnsupportedField(format!(
                "binary fields need 2 <= m <= {MAX_BINARY_DEGREE}, got {m}"
            )));
        }
        if poly2_degree(reduction) != Some(m) {
            return Err(Error::UnsupportedField(format!(
                "reduction {reduction:#x} does not have degree {m}"
            )));
        }
        if !is_irreducible2(reduction) {
            return Err(Error::UnsupportedField(format!(
                "reduction {reduction:#x} is reducible over GF(2)"
            )));
        }
        Ok(Field::raw(FieldKind::BinaryExtension, 2, m, 1 << m, reduction).finish())
    }

    /// `GF(256)` with reduction `0x11D`.
    pub fn gf256() -> Field {
        Field::binary(8, GF256_REDUCTION).expect("0x11D is irreducible")
    }

    /// The field of order `q`: a prime field when `q` is prime, `GF(2^m)`
    /// with the default reduction when `q = 2^m`.
    pub fn from_order(q: u32) -> Result<Field> {
        if q >= 4 && q.is_power_of_two() {
            let m = q.trailing_zeros();
            let reduction = default_reduction(m).ok_or_else(|| {
                Error::UnsupportedField(format!("GF(2^{m}) is not supported"))
            })?;
            return Field::binary(m, reduction);
        }
        if q >= 3 && is_prime(q) {
            return Field::prime(q);
        }
        Err(Error::UnsupportedField(format!(
            "{q} is not a supported field order (prime or 2^m)"
        )))
    }

    /// The same field with `alpha` as its primitive element.
    pub fn with_alpha(mut self, alpha: Fe) -> Result<Field> {
        self.check(alpha.0 as u64)?;
        if !self.is_primitive(alpha) {
            return Err(Error::NotPrimitive(alpha.0));
        }
        self.alpha = alpha;
        self.build_tables();
        Ok(self)
    }

    fn raw(kind: FieldKind, p: u32, m: u32, q: u32, reduction: u32) -> Field {
        Field {
            kind,
            p,
            m,
            q,
            reduction,
            alpha: Fe::ONE,
            log: Vec::new(),
            exp: Vec::new(),
        }
    }

    fn finish(mut self) -> Field {
        self.alpha = self.find_primitive();
        self.build_tables();
        self
    }

    fn build_tables(&mut self) {
        let n = self.n();
        let mut log = vec![0u32; self.q as usize];
        let mut exp = vec![0u32; 2 * n];
        let mut x = 1u32;
        for i in 0..n {
            exp[i] = x;
            exp[i + n] = x;
            log[x as usize] = i as u32;
            x = self.raw_mul(x, self.alpha.0);
        }
        debug_assert_eq!(x, 1);
        self.log = log;
        self.exp = exp;
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    /// Field order `q`.
    pub fn order(&self) -> u32 {
        self.q
    }

    /// Size of the multiplicative group, `q - 1`.
    pub fn n(&self) -> usize {
        self.q as usize - 1
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    /// Reduction polynomial mask, for binary extension fields.
    pub fn reduction(&self) -> Option<u32> {
        match self.kind {
            FieldKind::Prime => None,
            FieldKind::BinaryExtension => Some(self.reduction),
        }
    }

    pub fn alpha(&self) -> Fe {
        self.alpha
    }

    fn check(&self, value: u64) -> Result<()> {
        if value < self.q as u64 {
            Ok(())
        } else {
            Err(Error::NotAnElement {
                value,
                order: self.q,
            })
        }
    }

    /// Checked conversion from an integer representative.
    pub fn elem(&self, value: u64) -> Result<Fe> {
        self.check(value)?;
        Ok(Fe(value as u32))
    }

    /// All `q` elements in increasing representative order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.q).map(Fe)
    }

    /// The `q - 1` nonzero elements in increasing representative order.
    pub fn nonzero_elements(&self) -> impl Iterator<Item = Fe> {
        (1..self.q).map(Fe)
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        match self.kind {
            FieldKind::Prime => {
                let s = a.0 + b.0;
                Fe(if s >= self.p { s - self.p } else { s })
            }
            FieldKind::BinaryExtension => Fe(a.0 ^ b.0),
        }
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        match self.kind {
            FieldKind::Prime if a.0 != 0 => Fe(self.p - a.0),
            _ => a,
        }
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        count_mul();
        if a.0 == 0 || b.0 == 0 {
            return Fe::ZERO;
        }
        let e = self.log[a.0 as usize] + self.log[b.0 as usize];
        Fe(self.exp[e as usize])
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let l = self.log[a.0 as usize] as usize;
        Ok(Fe(self.exp[(self.n() - l) % self.n()]))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e` by square-and-multiply; negative exponents invert first.
    pub fn pow(&self, a: Fe, e: i64) -> Result<Fe> {
        let base = if e < 0 { self.inv(a)? } else { a };
        let mut e = e.unsigned_abs();
        let mut acc = Fe::ONE;
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            e >>= 1;
            if e > 0 {
                sq = self.mul(sq, sq);
            }
        }
        Ok(acc)
    }

    /// `alpha^i` for any integer `i`, by table lookup.
    #[inline]
    pub fn alpha_pow(&self, i: i64) -> Fe {
        let n = self.n() as i64;
        Fe(self.exp[i.rem_euclid(n) as usize])
    }

    /// The unique `i` in `[0, q-2]` with `alpha^i = x`.
    pub fn dlog(&self, x: Fe) -> Result<usize> {
        if x.0 == 0 {
            return Err(Error::DlogOfZero);
        }
        Ok(self.log[x.0 as usize] as usize)
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: Fe) -> Result<usize> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let n = self.n() as u64;
        let mut order = n;
        for r in distinct_prime_factors(n) {
            while order % r == 0 && self.raw_pow(a.0, order / r) == 1 {
                order /= r;
            }
        }
        Ok(order as usize)
    }

    /// Whether `a` generates the multiplicative group. Does not depend on
    /// the current `alpha` or its tables.
    pub fn is_primitive(&self, a: Fe) -> bool {
        if a.0 == 0 || a.0 >= self.q {
            return false;
        }
        let n = self.n() as u64;
        distinct_prime_factors(n)
            .into_iter()
            .all(|r| self.raw_pow(a.0, n / r) != 1)
    }

    /// The smallest nonzero representative of multiplicative order `q - 1`.
    pub fn find_primitive(&self) -> Fe {
        (1..self.q)
            .map(Fe)
            .find(|&a| self.is_primitive(a))
            .expect("the multiplicative group of a finite field is cyclic")
    }

    // Table-free arithmetic, used before the tables exist.
    fn raw_mul(&self, a: u32, b: u32) -> u32 {
        match self.kind {
            FieldKind::Prime => ((a as u64 * b as u64) % self.p as u64) as u32,
            FieldKind::BinaryExtension => {
                let mut prod = clmul(a, b);
                let m = self.m;
                for bit in (m..2 * m).rev() {
                    if prod & (1 << bit) != 0 {
                        prod ^= (self.reduction as u64) << (bit - m);
                    }
                }
                prod as u32
            }
        }
    }

    fn raw_pow(&self, a: u32, mut e: u64) -> u32 {
        let mut acc = 1;
        let mut sq = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.raw_mul(acc, sq);
            }
            sq = self.raw_mul(sq, sq);
            e >>= 1;
        }
        acc
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
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

// Carry-less product of two polynomials over GF(2).
fn clmul(a: u32, b: u32) -> u64 {
    let mut acc = 0u64;
    for i in 0..32 {
        if b & (1 << i) != 0 {
            acc ^= (a as u64) << i;
        }
    }
    acc
}

fn poly2_degree(a: u32) -> Option<u32> {
    (a != 0).then(|| 31 - a.leading_zeros())
}

fn poly2_rem(mut a: u32, b: u32) -> u32 {
    let db = poly2_degree(b).expect("nonzero divisor");
    while let Some(da) = poly2_degree(a) {
        if da < db {
            break;
        }
        a ^= b << (da - db);
    }
    a
}

// Exhaustive trial division by every polynomial of degree 1..=m/2.
fn is_irreducible2(f: u32) -> bool {
    let m = match poly2_degree(f) {
        Some(m) if m >= 1 => m,
        _ => return false,
    };
    let limit = 1u32 << (m / 2 + 1);
    (2..limit).all(|d| poly2_rem(f, d) != 0)
}
