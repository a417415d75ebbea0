//! Dense univariate polynomials over a [`Field`].

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Fe, Field};

/// Degree of a polynomial. The zero polynomial has degree
/// [`Degree::NegInfinity`], which orders below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }

    /// `self < bound`, where every finite bound exceeds `NegInfinity`.
    pub fn is_below(self, bound: usize) -> bool {
        self < Degree::Finite(bound)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A polynomial `c_0 + c_1 x + ... + c_d x^d`, stored low degree first with
/// trailing zero coefficients trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Fe>,
}

impl From<Vec<Fe>> for Poly {
    fn from(coeffs: Vec<Fe>) -> Self {
        Poly::from_coeffs(coeffs)
    }
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(Fe::ONE)
    }

    pub fn constant(c: Fe) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    /// `c x^d`.
    pub fn monomial(c: Fe, d: usize) -> Poly {
        let mut coeffs = vec![Fe::ZERO; d + 1];
        coeffs[d] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Fe>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Builds a polynomial from integer coefficients, low degree first,
    /// checking each against the field.
    pub fn from_values(f: &Field, values: &[u32]) -> Result<Poly> {
        let coeffs = values
            .iter()
            .map(|&v| f.elem(v as u64))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_coeffs(coeffs))
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Fe> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Fe {
        self.coeffs.get(i).copied().unwrap_or(Fe::ZERO)
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            len => Degree::Finite(len - 1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<Fe> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(Fe::ONE)
    }

    fn zip_with(&self, other: &Poly, op: impl Fn(Fe, Fe) -> Fe) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs(
            (0..len)
                .map(|i| op(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn add(&self, other: &Poly, f: &Field) -> Poly {
        self.zip_with(other, |a, b| f.add(a, b))
    }

    pub fn sub(&self, other: &Poly, f: &Field) -> Poly {
        self.zip_with(other, |a, b| f.sub(a, b))
    }

    pub fn neg(&self, f: &Field) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn scale(&self, s: Fe, f: &Field) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|&c| f.mul(c, s)).collect())
    }

    /// Schoolbook product.
    pub fn mul(&self, other: &Poly, f: &Field) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Fe::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::from_coeffs(out)
    }

    /// Long division: returns `(quot, rem)` with `self = den * quot + rem`
    /// and `deg rem < deg den`.
    pub fn divrem(&self, den: &Poly, f: &Field) -> Result<(Poly, Poly)> {
        let lead = den.leading().ok_or(Error::DivisionByZeroPoly)?;
        let dd = den.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let lead_inv = f.inv(lead)?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Fe::ZERO; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let c = f.mul(top, lead_inv);
            quot[i] = c;
            for (j, &d) in den.coeffs.iter().enumerate() {
                rem[i + j] = f.sub(rem[i + j], f.mul(c, d));
            }
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    /// Horner evaluation.
    pub fn eval(&self, x: Fe, f: &Field) -> Fe {
        self.coeffs
            .iter()
            .rev()
            .fold(Fe::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Splits into the terms of degree `< k` and the terms of degree `>= k`.
    pub fn split_at(&self, k: usize) -> (Poly, Poly) {
        let cut = k.min(self.coeffs.len());
        let low = Poly::from_coeffs(self.coeffs[..cut].to_vec());
        let mut high = self.coeffs.clone();
        high[..cut].fill(Fe::ZERO);
        (low, Poly::from_coeffs(high))
    }

    /// All nonzero roots, by evaluating at every nonzero field element.
    /// Returned in increasing representative order.
    pub fn roots_nonzero(&self, f: &Field) -> Vec<Fe> {
        f.nonzero_elements()
            .filter(|&x| self.eval(x, f).is_zero())
            .collect()
    }
}

impl fmt::Display for Poly {
    /// Highest degree first, e.g. `4x^5 + 6x^4 + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, c.0) {
                (0, v) => write!(f, "{v}")?,
                (1, 1) => f.write_str("x")?,
                (1, v) => write!(f, "{v}x")?,
                (d, 1) => write!(f, "x^{d}")?,
                (d, v) => write!(f, "{v}x^{d}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f7() -> Field {
        Field::prime(7).unwrap().with_alpha(Fe(5)).unwrap()
    }

    fn p(f: &Field, v: &[u32]) -> Poly {
        Poly::from_values(f, v).unwrap()
    }

    #[test]
    fn degree_sentinel_orders_below_everything() {
        assert!(Degree::NegInfinity < Degree::Finite(0));
        assert_eq!(Poly::zero().degree(), Degree::NegInfinity);
        assert!(Poly::zero().degree().is_below(0));
        assert_eq!(Poly::from_coeffs(vec![Fe(1), Fe(0), Fe(0)]).degree(), Degree::Finite(0));
    }

    #[test]
    fn add_sub_scale() {
        let f = f7();
        let a = p(&f, &[1, 1]);
        assert!(a.sub(&a, &f).is_zero());
        let fu = p(&f, &[3, 0, 3, 2, 6, 4]);
        let quot = p(&f, &[5, 1, 3, 2, 6, 4]);
        assert_eq!(fu.sub(&quot, &f), p(&f, &[5, 6]));
        assert_eq!(a.scale(Fe(2), &f), p(&f, &[2, 2]));
        assert!(a.scale(Fe(0), &f).is_zero());
    }

    #[test]
    fn products_from_worked_example() {
        let f = f7();
        let fu = p(&f, &[3, 0, 3, 2, 6, 4]);
        let lu = p(&f, &[2, 1]);
        assert_eq!(lu.mul(&fu, &f), p(&f, &[6, 3, 6, 0, 0, 0, 4]));
        let fw = p(&f, &[2, 2, 2, 2, 6]);
        let lw = p(&f, &[6, 2, 1]);
        assert_eq!(lw.mul(&fw, &f), p(&f, &[5, 2, 4, 4, 0, 0, 6]));
        assert_eq!(fu.mul(&Poly::one(), &f), fu);
        assert!(fu.mul(&Poly::zero(), &f).is_zero());
    }

    #[test]
    fn division_examples() {
        let f = f7();
        // 4x^6 - 4 = 4x^6 + 3
        let num = p(&f, &[3, 0, 0, 0, 0, 0, 4]);
        let (q, r) = num.divrem(&p(&f, &[2, 1]), &f).unwrap();
        assert_eq!(q, p(&f, &[5, 1, 3, 2, 6, 4]));
        assert!(r.is_zero());

        let a = p(&f, &[3, 2, 1]);
        assert_eq!(a.divrem(&a, &f).unwrap(), (Poly::one(), Poly::zero()));

        let (q, r) = p(&f, &[0, 1]).divrem(&p(&f, &[1, 1]), &f).unwrap();
        assert_eq!((q, r), (Poly::one(), Poly::constant(Fe(6))));

        assert_eq!(a.divrem(&Poly::zero(), &f), Err(Error::DivisionByZeroPoly));
        let (q, r) = p(&f, &[4]).divrem(&a, &f).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, p(&f, &[4]));
    }

    #[test]
    fn evaluation() {
        let f = f7();
        let u = p(&f, &[3, 4, 2, 6, 5]);
        assert_eq!(u.eval(Fe(5), &f), Fe(0));
        assert_eq!(u.eval(Fe(4), &f), Fe(0));
        assert_eq!(u.eval(Fe(0), &f), Fe(3));
        assert_eq!(Poly::zero().eval(Fe(3), &f), Fe(0));
    }

    #[test]
    fn split_examples() {
        let f = f7();
        let fu = p(&f, &[3, 0, 3, 2, 6, 4]);
        let (low, high) = fu.split_at(2);
        assert_eq!(low, p(&f, &[3]));
        assert_eq!(high, p(&f, &[0, 0, 3, 2, 6, 4]));
        let (low, high) = Poly::zero().split_at(2);
        assert!(low.is_zero() && high.is_zero());
        let fw = p(&f, &[2, 2, 2, 2, 6]);
        let (low, high) = fw.split_at(2);
        assert_eq!(low, p(&f, &[2, 2]));
        assert_eq!(high, p(&f, &[0, 0, 2, 2, 6]));
        let (low, high) = fw.split_at(10);
        assert_eq!((low, high), (fw.clone(), Poly::zero()));
    }

    #[test]
    fn root_sweep() {
        let f = f7();
        assert_eq!(p(&f, &[2, 1]).roots_nonzero(&f), vec![Fe(5)]);
        assert_eq!(p(&f, &[6, 2, 1]).roots_nonzero(&f), vec![Fe(2), Fe(3)]);
        assert!(Poly::one().roots_nonzero(&f).is_empty());
    }

    #[test]
    fn display() {
        let f = f7();
        assert_eq!(p(&f, &[3, 0, 3, 2, 6, 4]).to_string(), "4x^5 + 6x^4 + 2x^3 + 3x^2 + 3");
        assert_eq!(p(&f, &[6, 2, 1]).to_string(), "x^2 + 2x + 6");
        assert_eq!(p(&f, &[0, 1]).to_string(), "x");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    fn field_and_polys() -> impl Strategy<Value = (u32, Vec<u32>, Vec<u32>, Vec<u32>, u32)> {
        prop_oneof![Just(7u32), Just(13), Just(256), Just(65521)].prop_flat_map(|q| {
            let coeffs = || proptest::collection::vec(0..q, 0..=13);
            (Just(q), coeffs(), coeffs(), coeffs(), 0..q)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn ring_laws((q, a, b, c, x) in field_and_polys()) {
            let f = Field::from_order(q).unwrap();
            let (a, b, c) = (p(&f, &a), p(&f, &b), p(&f, &c));
            let x = Fe(x);
            prop_assert_eq!(a.mul(&b.add(&c, &f), &f), a.mul(&b, &f).add(&a.mul(&c, &f), &f));
            prop_assert_eq!(a.mul(&b, &f).eval(x, &f), f.mul(a.eval(x, &f), b.eval(x, &f)));
            prop_assert_eq!(a.add(&b, &f).sub(&b, &f), a.clone());
            if !b.is_zero() {
                let (quot, rem) = a.divrem(&b, &f).unwrap();
                prop_assert!(rem.degree() < b.degree());
                prop_assert_eq!(b.mul(&quot, &f).add(&rem, &f), a.clone());
            }
            if let (Some(da), Some(db)) = (a.degree().finite(), b.degree().finite()) {
                prop_assert_eq!(a.mul(&b, &f).degree(), Degree::Finite(da + db));
            }
        }

        #[test]
        fn split_then_add_is_identity(v in proptest::collection::vec(0u32..7, 0..=12), k in 0usize..15) {
            let f = f7();
            let a = p(&f, &v);
            let (low, high) = a.split_at(k);
            prop_assert!(low.degree().is_below(k));
            prop_assert!(high.coeffs().iter().take(k).all(|c| c.is_zero()));
            prop_assert_eq!(low.add(&high, &f), a);
        }
    }
}
