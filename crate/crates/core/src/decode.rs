//! Types and steps shared by the decoders.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::code::{RsCode, Syndromes, Word};
use crate::error::Error;
use crate::gf::Fe;
use crate::matrix::{Matrix, Solution};
use crate::poly::{Degree, Poly};
use crate::{interp, pgz};

/// Why a received word could not be decoded.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecodeError {
    #[error("invalid input: {0}")]
    Invalid(#[from] Error),
    #[error("more errors than the code can correct")]
    TooManyErrors,
    #[error("error-locator system has no usable solution")]
    SingularLocatorSystem,
    #[error("locator does not divide (x^n - 1) mu")]
    InexactDivision,
    #[error("recovered polynomial has degree >= k")]
    DegreeTooHigh,
    #[error("locator of degree {expected} has {found} distinct nonzero roots")]
    RootCountMismatch { expected: usize, found: usize },
    #[error("decoded word failed verification")]
    VerifyFailed,
}

impl DecodeError {
    /// Short machine-readable name.
    pub fn name(&self) -> &'static str {
        match self {
            DecodeError::Invalid(_) => "invalid_input",
            DecodeError::TooManyErrors => "too_many_errors",
            DecodeError::SingularLocatorSystem => "singular_locator_system",
            DecodeError::InexactDivision => "inexact_division",
            DecodeError::DegreeTooHigh => "degree_too_high",
            DecodeError::RootCountMismatch { .. } => "root_count_mismatch",
            DecodeError::VerifyFailed => "verify_failed",
        }
    }
}

/// Result of the error-count search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCount {
    Found(usize),
    TooManyErrors,
}

/// Per-call instrumentation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DecodeTrace {
    /// Rank comparisons made while searching for the error count.
    pub rank_checks: usize,
    /// Determinants evaluated while searching for the error count.
    pub det_checks: usize,
    /// Degree of the interpolation polynomial of the received word, when the
    /// decoder computed it.
    pub f_u_degree: Option<Degree>,
    /// `mu`, the quotient of `lambda * f_u` by `x^n - 1` read from its high
    /// coefficients.
    pub mu: Option<Poly>,
    /// Coefficients `zeta_n, ..., zeta_{d_u + t}` of `lambda * f_u`.
    pub zeta_high: Vec<Fe>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeOutcome {
    pub codeword: Word,
    /// `received - codeword`.
    pub error: Word,
    /// Number of corrected errors.
    pub t: usize,
    /// Monic error locator of degree `t`, vanishing at `alpha^i` exactly for
    /// the error positions `i`.
    pub locator: Poly,
    pub trace: DecodeTrace,
}

/// The available decoding procedures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Decoder {
    /// Rank search, locator solve, then codeword recovery by polynomial
    /// division.
    Interp,
    /// Rank search and locator solve, then error positions from the
    /// locator's roots and error values from a linear system.
    InterpPositions,
    /// Peterson-Gorenstein-Zierler: descending determinant search, then the
    /// same position/value steps.
    Pgz,
}

impl Decoder {
    pub const ALL: [Decoder; 3] = [Decoder::Interp, Decoder::InterpPositions, Decoder::Pgz];

    pub fn name(self) -> &'static str {
        match self {
            Decoder::Interp => "interp",
            Decoder::InterpPositions => "interp_positions",
            Decoder::Pgz => "pgz",
        }
    }

    pub fn decode(self, code: &RsCode, u: &[Fe]) -> Result<DecodeOutcome, DecodeError> {
        self.decode_traced(code, u).0
    }

    /// Decodes and also returns the counters, which are meaningful on
    /// failure too.
    pub fn decode_traced(
        self,
        code: &RsCode,
        u: &[Fe],
    ) -> (Result<DecodeOutcome, DecodeError>, DecodeTrace) {
        let mut trace = DecodeTrace::default();
        let result = match self {
            Decoder::Interp => interp::decode_into(code, u, &mut trace),
            Decoder::InterpPositions => interp::decode_via_positions_into(code, u, &mut trace),
            Decoder::Pgz => pgz::decode_into(code, u, &mut trace),
        };
        let result = result.map(|mut out| {
            out.trace = trace.clone();
            out
        });
        (result, trace)
    }
}

impl fmt::Display for Decoder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Decoder {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "interp" => Ok(Decoder::Interp),
            "interp-pos" | "interp_pos" | "interp_positions" => Ok(Decoder::InterpPositions),
            "pgz" => Ok(Decoder::Pgz),
            _ => Err(format!("unknown decoder {s:?} (expected interp, interp-pos or pgz)")),
        }
    }
}

/// Solves the `t x t` Hankel system
/// `[s_{i+j}] (l_0, ..., l_{t-1})^T = -(s_t, ..., s_{2t-1})^T` (0-indexed
/// syndromes) and returns the monic locator
/// `x^t + l_{t-1} x^{t-1} + ... + l_0`.
///
/// A singular system or `l_0 = 0` means the word is beyond the code's
/// correction capability.
pub fn solve_locator(code: &RsCode, s: &Syndromes, t: usize) -> Result<Poly, DecodeError> {
    if t == 0 {
        return Ok(Poly::one());
    }
    if 2 * t > s.len() {
        return Err(DecodeError::TooManyErrors);
    }
    let f = code.field();
    let a = Matrix::hankel(s, t, t);
    let rhs: Vec<Fe> = (0..t).map(|i| f.neg(s[t + i])).collect();
    let mut coeffs = match a.solve(&rhs, f)? {
        Solution::Unique(l) => l,
        Solution::NoSolution | Solution::Underdetermined => {
            return Err(DecodeError::SingularLocatorSystem)
        }
    };
    if coeffs[0].is_zero() {
        return Err(DecodeError::SingularLocatorSystem);
    }
    coeffs.push(Fe::ONE);
    Ok(Poly::from_coeffs(coeffs))
}

/// Error positions `i` with `locator(alpha^i) = 0`, in increasing order.
/// The locator must have exactly `t` distinct nonzero roots.
pub fn error_positions(code: &RsCode, locator: &Poly, t: usize) -> Result<Vec<usize>, DecodeError> {
    let f = code.field();
    let mut positions = locator
        .roots_nonzero(f)
        .into_iter()
        .map(|r| f.dlog(r))
        .collect::<Result<Vec<_>, _>>()?;
    if positions.len() != t {
        return Err(DecodeError::RootCountMismatch {
            expected: t,
            found: positions.len(),
        });
    }
    positions.sort_unstable();
    Ok(positions)
}

/// Error values at known positions from the system
/// `[alpha^{(r+1) i_j}] (e_{i_1}, ..., e_{i_t})^T = (s_0, ..., s_{t-1})^T`.
pub fn error_values(code: &RsCode, s: &Syndromes, positions: &[usize]) -> Result<Vec<Fe>, DecodeError> {
    let f = code.field();
    let t = positions.len();
    let a = Matrix::from_fn(t, t, |r, j| f.alpha_pow(((r + 1) * positions[j]) as i64));
    match a.solve(&s[..t], f)? {
        Solution::Unique(v) => Ok(v),
        _ => Err(DecodeError::SingularLocatorSystem),
    }
}

/// Builds the outcome for an error pattern at known positions, then
/// verifies it.
pub(crate) fn outcome_from_error(
    code: &RsCode,
    u: &[Fe],
    positions: &[usize],
    values: &[Fe],
    locator: Poly,
) -> Result<DecodeOutcome, DecodeError> {
    let f = code.field();
    let mut error = vec![Fe::ZERO; code.n()];
    for (&i, &v) in positions.iter().zip(values) {
        error[i] = v;
    }
    let error = Word::new(error);
    let received = Word::new(u.to_vec());
    let codeword = received.sub(&error, f)?;
    let t = positions.len();
    verify(code, &received, &codeword, t)?;
    Ok(DecodeOutcome {
        codeword,
        error,
        t,
        locator,
        trace: DecodeTrace::default(),
    })
}

/// Final check applied to every decode: the output is a codeword at
/// distance exactly `t <= tau` from the input.
pub fn verify(code: &RsCode, received: &[Fe], codeword: &[Fe], t: usize) -> Result<(), DecodeError> {
    if t > code.tau() || !code.is_codeword(codeword)? {
        return Err(DecodeError::VerifyFailed);
    }
    let distance = received.iter().zip(codeword).filter(|(a, b)| a != b).count();
    if distance != t {
        return Err(DecodeError::VerifyFailed);
    }
    Ok(())
}
