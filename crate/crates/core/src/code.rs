//! Reed-Solomon codes `RS_{q,alpha}(k)` of full length `n = q - 1`.
//!
//! A message `m = (m_0, ..., m_{k-1})` is encoded as the evaluations of
//! `m(x) = m_0 + m_1 x + ... + m_{k-1} x^{k-1}` at `1, alpha, ..., alpha^{n-1}`,
//! which is the product `m G` with the Vandermonde generator matrix
//! `G[i][j] = alpha^{ij}`. Encoding is not systematic.
//!
//! A received word `u` is read as the polynomial `u(x) = sum u_i x^i`. Its
//! evaluations at `alpha, ..., alpha^{n-k}` are the syndromes, and its
//! evaluations at all of `alpha, ..., alpha^n` give the interpolation
//! polynomial directly: the coefficient of `x^i` in `f_u` is
//! `-u(alpha^{n-i})`.

use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};
use crate::gf::{Fe, Field};
use crate::matrix::Matrix;
use crate::poly::Poly;

/// A vector of field symbols: a received word, codeword, error pattern or
/// message, depending on context.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Fe>);

impl Word {
    pub fn new(symbols: Vec<Fe>) -> Word {
        Word(symbols)
    }

    pub fn zeros(len: usize) -> Word {
        Word(vec![Fe::ZERO; len])
    }

    /// Checked construction from integer symbols.
    pub fn from_values(f: &Field, values: &[u32]) -> Result<Word> {
        values
            .iter()
            .map(|&v| f.elem(v as u64))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    /// Parses a word written as a string of single decimal digits, the way
    /// words over small prime fields are usually printed (`"421632"`).
    pub fn from_digits(f: &Field, digits: &str) -> Result<Word> {
        let values: Vec<u32> = digits
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| {
                c.to_digit(10).ok_or(Error::NotAnElement {
                    value: c as u64,
                    order: f.order(),
                })
            })
            .collect::<Result<_>>()?;
        Word::from_values(f, &values)
    }

    pub fn symbols(&self) -> &[Fe] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<Fe> {
        self.0
    }

    /// Number of nonzero symbols.
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|s| !s.is_zero()).count()
    }

    /// `u(x) = sum u_i x^i`.
    pub fn to_poly(&self) -> Poly {
        Poly::from_coeffs(self.0.clone())
    }

    pub fn add(&self, other: &Word, f: &Field) -> Result<Word> {
        self.zip(other, |a, b| f.add(a, b))
    }

    pub fn sub(&self, other: &Word, f: &Field) -> Result<Word> {
        self.zip(other, |a, b| f.sub(a, b))
    }

    fn zip(&self, other: &Word, op: impl Fn(Fe, Fe) -> Fe) -> Result<Word> {
        check_len(self.len(), other.len())?;
        Ok(Word(
            self.0.iter().zip(&other.0).map(|(&a, &b)| op(a, b)).collect(),
        ))
    }
}

impl Deref for Word {
    type Target = [Fe];

    fn deref(&self) -> &[Fe] {
        &self.0
    }
}

impl From<Vec<Fe>> for Word {
    fn from(v: Vec<Fe>) -> Word {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // digit strings for small fields, space separated otherwise
        let compact = self.0.iter().all(|s| s.0 < 10);
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 && !compact {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

fn check_len(expected: usize, actual: usize) -> Result<()> {
    if expected == actual {
        Ok(())
    } else {
        Err(Error::LengthMismatch { expected, actual })
    }
}

/// Syndrome vector `(u(alpha), ..., u(alpha^{n-k}))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Syndromes(Vec<Fe>);

impl Syndromes {
    pub fn new(values: Vec<Fe>) -> Syndromes {
        Syndromes(values)
    }

    pub fn values(&self) -> &[Fe] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|s| s.is_zero())
    }
}

impl Deref for Syndromes {
    type Target = [Fe];

    fn deref(&self) -> &[Fe] {
        &self.0
    }
}

/// Parameters of `RS_{q,alpha}(k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RsCode {
    field: Field,
    k: usize,
    n: usize,
}

impl RsCode {
    /// Requires `1 <= k < n = q - 1`.
    pub fn new(field: Field, k: usize) -> Result<RsCode> {
        let n = field.n();
        if k == 0 || k >= n {
            return Err(Error::InvalidCode(format!(
                "dimension k = {k} must satisfy 1 <= k < n = {n}"
            )));
        }
        Ok(RsCode { field, k, n })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn alpha(&self) -> Fe {
        self.field.alpha()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of syndromes, `n - k`.
    pub fn redundancy(&self) -> usize {
        self.n - self.k
    }

    /// Minimum distance `n - k + 1`; Reed-Solomon codes are MDS.
    pub fn min_distance(&self) -> usize {
        self.n - self.k + 1
    }

    /// Correction capability `floor((n - k) / 2)`.
    pub fn tau(&self) -> usize {
        (self.n - self.k) / 2
    }

    /// The evaluation points `1, alpha, ..., alpha^{n-1}`.
    pub fn points(&self) -> Vec<Fe> {
        (0..self.n as i64).map(|i| self.field.alpha_pow(i)).collect()
    }

    /// `k x n` matrix with `G[i][j] = alpha^{ij}`.
    pub fn generator_matrix(&self) -> Matrix {
        Matrix::vandermonde(&self.points(), self.k, &self.field)
    }

    /// `(n - k) x n` matrix with `H[i][j] = alpha^{(i+1)j}`.
    pub fn parity_check_matrix(&self) -> Matrix {
        let f = &self.field;
        Matrix::from_fn(self.redundancy(), self.n, |i, j| {
            f.alpha_pow(((i + 1) * j) as i64)
        })
    }

    fn check_word(&self, u: &[Fe]) -> Result<()> {
        check_len(self.n, u.len())?;
        for s in u {
            self.field.elem(s.0 as u64)?;
        }
        Ok(())
    }

    /// `msg * G`, computed by evaluating the message polynomial at each
    /// power of alpha.
    pub fn encode(&self, msg: &[Fe]) -> Result<Word> {
        check_len(self.k, msg.len())?;
        for s in msg {
            self.field.elem(s.0 as u64)?;
        }
        Ok(self.evaluate(&Poly::from_coeffs(msg.to_vec())))
    }

    /// `(g(1), g(alpha), ..., g(alpha^{n-1}))`.
    pub fn evaluate(&self, g: &Poly) -> Word {
        let f = &self.field;
        Word((0..self.n as i64).map(|i| g.eval(f.alpha_pow(i), f)).collect())
    }

    /// `u(alpha^j)` for `j = 1..=n`; entry `j - 1` holds `u(alpha^j)`. The
    /// first `n - k` entries are the syndromes.
    pub fn power_evaluations(&self, u: &[Fe]) -> Result<Vec<Fe>> {
        self.check_word(u)?;
        Ok(self.evaluations_range(u, 1, self.n))
    }

    // u(alpha^j) for j in from..=to.
    pub(crate) fn evaluations_range(&self, u: &[Fe], from: usize, to: usize) -> Vec<Fe> {
        let f = &self.field;
        let poly = Poly::from_coeffs(u.to_vec());
        (from..=to)
            .map(|j| poly.eval(f.alpha_pow(j as i64), f))
            .collect()
    }

    pub fn syndromes(&self, u: &[Fe]) -> Result<Syndromes> {
        self.check_word(u)?;
        Ok(Syndromes(self.evaluations_range(u, 1, self.redundancy())))
    }

    /// The unique polynomial of degree `< n` with `f_u(alpha^i) = u_i`,
    /// read off the evaluations `u(alpha^1), ..., u(alpha^n)`.
    pub fn interpolate(&self, u: &[Fe]) -> Result<Poly> {
        let evals = self.power_evaluations(u)?;
        Ok(self.interpolate_from_evaluations(&evals))
    }

    /// Interpolation from precomputed `power_evaluations`.
    pub fn interpolate_from_evaluations(&self, evals: &[Fe]) -> Poly {
        assert_eq!(evals.len(), self.n, "need u(alpha^j) for j = 1..=n");
        let f = &self.field;
        let n = self.n;
        Poly::from_coeffs((0..n).map(|i| f.neg(evals[n - i - 1])).collect())
    }

    /// The Lagrange basis polynomial for position `i`, in closed form
    /// `-(alpha^i x^{n-1} + alpha^{2i} x^{n-2} + ... + alpha^{ni})`.
    pub fn lagrange_basis(&self, i: usize) -> Result<Poly> {
        if i >= self.n {
            return Err(Error::PositionOutOfRange {
                position: i,
                len: self.n,
            });
        }
        let f = &self.field;
        let n = self.n;
        // coefficient of x^{n-j} is -alpha^{ij}, j = 1..=n
        let mut coeffs = vec![Fe::ZERO; n];
        for j in 1..=n {
            coeffs[n - j] = f.neg(f.alpha_pow((i * j) as i64));
        }
        Ok(Poly::from_coeffs(coeffs))
    }

    /// Membership by syndromes: all of `u(alpha), ..., u(alpha^{n-k})`
    /// vanish.
    pub fn is_codeword(&self, u: &[Fe]) -> Result<bool> {
        Ok(self.syndromes(u)?.is_zero())
    }

    /// Membership by interpolation degree: `deg f_u < k`.
    pub fn is_codeword_by_degree(&self, u: &[Fe]) -> Result<bool> {
        Ok(self.interpolate(u)?.degree().is_below(self.k))
    }

    /// Recovers the message of a codeword: the `k` low coefficients of its
    /// interpolation polynomial.
    pub fn message_of(&self, codeword: &[Fe]) -> Result<Vec<Fe>> {
        let g = self.interpolate(codeword)?;
        if !g.degree().is_below(self.k) {
            return Err(Error::InvalidCode(
                "word is not a codeword (interpolation degree >= k)".into(),
            ));
        }
        Ok((0..self.k).map(|i| g.coeff(i)).collect())
    }
}
