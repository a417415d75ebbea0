//! Interpolation-based decoding.
//!
//! 1. The number of errors `t` is the smallest value for which the
//!    `(n-k-t) x t` syndrome Hankel matrix and its `(n-k-t) x (t+1)`
//!    extension have equal rank. The search ascends from `t = 0`, so a word
//!    with few errors costs few rank computations.
//! 2. The error locator `lambda` comes from the `t x t` Hankel system.
//! 3. `f_u` is obtained from the evaluations `u(alpha), ..., u(alpha^n)`,
//!    whose first `n - k` entries are the syndromes already computed.
//! 4. With `zeta_i` the coefficients of `lambda f_u` and
//!    `mu = zeta_n + zeta_{n+1} x + ...`, the message polynomial is
//!    `g_c = f_u - (x^n - 1) mu / lambda`, the division being exact.
//! 5. The codeword is `(g_c(1), g_c(alpha), ..., g_c(alpha^{n-1}))`.
//!
//! Every result is verified before it is returned.
//!
//! ```
//! use rsic::{Field, Fe, RsCode, Word, interp};
//!
//! let code = RsCode::new(Field::prime(7)?.with_alpha(Fe(5))?, 2)?;
//! let u = Word::from_digits(code.field(), "421632")?;
//! let out = interp::decode(&code, &u).unwrap();
//! assert_eq!(out.codeword.to_string(), "401632");
//! assert_eq!(out.t, 1);
//! # Ok::<(), rsic::Error>(())
//! ```

use crate::code::{RsCode, Syndromes, Word};
use crate::decode::{
    error_positions, error_values, outcome_from_error, solve_locator, verify, DecodeError,
    DecodeOutcome, DecodeTrace, ErrorCount,
};
use crate::gf::Fe;
use crate::matrix::Matrix;
use crate::poly::{Degree, Poly};

/// Smallest `t <= tau` satisfying the rank condition, together with the
/// number of rank comparisons made (`t + 1` when found).
pub fn detect_t(code: &RsCode, s: &Syndromes) -> (ErrorCount, usize) {
    let f = code.field();
    let r = s.len();
    let mut checks = 0;
    for t in 0..=code.tau() {
        let rows = r - t;
        let narrow = Matrix::hankel(s, rows, t);
        let wide = Matrix::hankel(s, rows, t + 1);
        checks += 1;
        if narrow.rank(f) == wide.rank(f) {
            return (ErrorCount::Found(t), checks);
        }
    }
    (ErrorCount::TooManyErrors, checks)
}

/// Intermediate values of the polynomial recovery step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recovery {
    /// Polynomial of degree `< k` whose evaluations are the codeword.
    pub g_c: Poly,
    pub mu: Poly,
    /// `zeta_n, ..., zeta_{d_u + t}`.
    pub zeta_high: Vec<Fe>,
    pub f_u_degree: Degree,
}

/// Recovers `g_c` from a received word and its error locator.
pub fn recover_codeword(code: &RsCode, u: &[Fe], locator: &Poly) -> Result<Recovery, DecodeError> {
    let f_u = code.interpolate(u)?;
    recover_from_interpolation(code, &f_u, locator)
}

/// As [`recover_codeword`], from a precomputed interpolation polynomial.
pub fn recover_from_interpolation(
    code: &RsCode,
    f_u: &Poly,
    locator: &Poly,
) -> Result<Recovery, DecodeError> {
    let f = code.field();
    let n = code.n();
    let product = locator.mul(f_u, f);
    let zeta_high: Vec<Fe> = product.coeffs().get(n..).unwrap_or_default().to_vec();
    let mu = Poly::from_coeffs(zeta_high.clone());
    // (x^n - 1) mu = x^n mu - mu
    let mut shifted = vec![Fe::ZERO; n];
    shifted.extend_from_slice(mu.coeffs());
    let numerator = Poly::from_coeffs(shifted).sub(&mu, f);
    let (quot, rem) = numerator.divrem(locator, f)?;
    if !rem.is_zero() {
        return Err(DecodeError::InexactDivision);
    }
    let g_c = f_u.sub(&quot, f);
    if !g_c.degree().is_below(code.k()) {
        return Err(DecodeError::DegreeTooHigh);
    }
    Ok(Recovery {
        g_c,
        mu,
        zeta_high,
        f_u_degree: f_u.degree(),
    })
}

/// Decodes `u` by polynomial recovery.
pub fn decode(code: &RsCode, u: &[Fe]) -> Result<DecodeOutcome, DecodeError> {
    crate::decode::Decoder::Interp.decode(code, u)
}

/// Decodes `u` by locating the errors at the roots of the locator and
/// solving for their values.
pub fn decode_via_positions(code: &RsCode, u: &[Fe]) -> Result<DecodeOutcome, DecodeError> {
    crate::decode::Decoder::InterpPositions.decode(code, u)
}

// Steps 1 and 2, shared by both variants. Ok(None) means no errors.
fn locate(
    code: &RsCode,
    s: &Syndromes,
    trace: &mut DecodeTrace,
) -> Result<Option<(usize, Poly)>, DecodeError> {
    let (count, checks) = detect_t(code, s);
    trace.rank_checks = checks;
    match count {
        ErrorCount::TooManyErrors => Err(DecodeError::TooManyErrors),
        ErrorCount::Found(0) => Ok(None),
        ErrorCount::Found(t) => Ok(Some((t, solve_locator(code, s, t)?))),
    }
}

pub(crate) fn unchanged(code: &RsCode, u: &[Fe]) -> Result<DecodeOutcome, DecodeError> {
    verify(code, u, u, 0)?;
    Ok(DecodeOutcome {
        codeword: Word::new(u.to_vec()),
        error: Word::zeros(code.n()),
        t: 0,
        locator: Poly::one(),
        trace: DecodeTrace::default(),
    })
}

pub(crate) fn decode_into(
    code: &RsCode,
    u: &[Fe],
    trace: &mut DecodeTrace,
) -> Result<DecodeOutcome, DecodeError> {
    let s = code.syndromes(u)?;
    let Some((t, locator)) = locate(code, &s, trace)? else {
        return unchanged(code, u);
    };
    let mut evals = s.values().to_vec();
    evals.extend(code.evaluations_range(u, code.redundancy() + 1, code.n()));
    let f_u = code.interpolate_from_evaluations(&evals);
    trace.f_u_degree = Some(f_u.degree());
    let rec = recover_from_interpolation(code, &f_u, &locator)?;
    trace.mu = Some(rec.mu);
    trace.zeta_high = rec.zeta_high;

    let f = code.field();
    let codeword = code.evaluate(&rec.g_c);
    let received = Word::new(u.to_vec());
    let error = received.sub(&codeword, f)?;
    verify(code, u, &codeword, t)?;
    Ok(DecodeOutcome {
        codeword,
        error,
        t,
        locator,
        trace: DecodeTrace::default(),
    })
}

pub(crate) fn decode_via_positions_into(
    code: &RsCode,
    u: &[Fe],
    trace: &mut DecodeTrace,
) -> Result<DecodeOutcome, DecodeError> {
    let s = code.syndromes(u)?;
    let Some((t, locator)) = locate(code, &s, trace)? else {
        return unchanged(code, u);
    };
    let positions = error_positions(code, &locator, t)?;
    let values = error_values(code, &s, &positions)?;
    outcome_from_error(code, u, &positions, &values, locator)
}
