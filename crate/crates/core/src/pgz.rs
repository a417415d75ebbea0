//! Peterson-Gorenstein-Zierler decoding.
//!
//! The error count is the largest `h <= tau` whose `h x h` syndrome Hankel
//! matrix `A_h = [s_{i+j}]` is nonsingular, found by scanning `h` downward
//! from `tau` and recomputing each determinant from scratch. Location and
//! error values then follow the same steps as
//! [`interp::decode_via_positions`](crate::interp::decode_via_positions).

use crate::code::{RsCode, Syndromes};
use crate::decode::{
    error_positions, error_values, outcome_from_error, solve_locator, DecodeError, DecodeOutcome,
    DecodeTrace, Decoder, ErrorCount,
};
use crate::gf::Fe;
use crate::interp::unchanged;
use crate::matrix::Matrix;

/// Error count by descending determinant scan, with the number of
/// determinants evaluated. Zero syndromes short-circuit to `Found(0)`
/// without any determinant.
pub fn pgz_detect_t(code: &RsCode, s: &Syndromes) -> (ErrorCount, usize) {
    if s.is_zero() {
        return (ErrorCount::Found(0), 0);
    }
    let f = code.field();
    let mut checks = 0;
    for h in (1..=code.tau()).rev() {
        checks += 1;
        let det = Matrix::hankel(s, h, h).det(f).expect("Hankel block is square");
        if !det.is_zero() {
            return (ErrorCount::Found(h), checks);
        }
    }
    (ErrorCount::TooManyErrors, checks)
}

pub fn pgz_decode(code: &RsCode, u: &[Fe]) -> Result<DecodeOutcome, DecodeError> {
    Decoder::Pgz.decode(code, u)
}

pub(crate) fn decode_into(
    code: &RsCode,
    u: &[Fe],
    trace: &mut DecodeTrace,
) -> Result<DecodeOutcome, DecodeError> {
    let s = code.syndromes(u)?;
    let (count, checks) = pgz_detect_t(code, &s);
    trace.det_checks = checks;
    let t = match count {
        ErrorCount::TooManyErrors => return Err(DecodeError::TooManyErrors),
        ErrorCount::Found(0) => return unchanged(code, u),
        ErrorCount::Found(t) => t,
    };
    let locator = solve_locator(code, &s, t)?;
    let positions = error_positions(code, &locator, t)?;
    let values = error_values(code, &s, &positions)?;
    outcome_from_error(code, u, &positions, &values, locator)
}
