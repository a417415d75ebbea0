//! Exhaustive reference computations for small codes.
//!
//! These enumerate all `q^k` codewords and are only meant as ground truth in
//! tests; enumeration is refused above [`MAX_ENUMERATION`] codewords.

use crate::code::{RsCode, Word};
use crate::error::{Error, Result};
use crate::gf::Fe;

/// Upper bound on `q^k` for exhaustive enumeration.
pub const MAX_ENUMERATION: u128 = 1_000_000;

/// Nearest codeword to a received word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub nearest: Word,
    pub distance: usize,
    /// Whether no other codeword is at the same distance.
    pub unique: bool,
}

/// Number of positions at which `a` and `b` differ.
pub fn hamming(a: &[Fe], b: &[Fe]) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            expected: a.len(),
            actual: b.len(),
        });
    }
    Ok(a.iter().zip(b).filter(|(x, y)| x != y).count())
}

fn codeword_count(code: &RsCode) -> Result<u128> {
    let count = (code.field().order() as u128).pow(code.k() as u32);
    if count > MAX_ENUMERATION {
        return Err(Error::TooLargeToEnumerate(count));
    }
    Ok(count)
}

/// Visits every codeword, in lexicographic order of the messages
/// (`m_{k-1}` varying fastest).
///
/// Stepping the message odometer adds one generator row per increment;
/// after `q` increments a digit wraps to zero and, because the
/// characteristic divides `q`, its row has been added a multiple of `p`
/// times, so the codeword stays in sync without subtraction.
pub fn for_each_codeword(code: &RsCode, mut visit: impl FnMut(&[Fe], &[Fe])) -> Result<()> {
    let count = codeword_count(code)?;
    let f = code.field();
    let (n, k, q) = (code.n(), code.k(), f.order());
    let g = code.generator_matrix();
    let mut msg = vec![Fe::ZERO; k];
    let mut cw = vec![Fe::ZERO; n];
    for step in 0..count {
        visit(&msg, &cw);
        if step + 1 == count {
            break;
        }
        let mut digit = k - 1;
        loop {
            msg[digit].0 += 1;
            for (c, &gj) in cw.iter_mut().zip(g.row(digit)) {
                *c = f.add(*c, gj);
            }
            if msg[digit].0 < q {
                break;
            }
            msg[digit] = Fe::ZERO;
            digit -= 1;
        }
    }
    Ok(())
}

/// Exhaustive nearest-codeword decoding. Ties resolve to the codeword of the
/// lexicographically smallest message and are reported via `unique`.
pub fn brute_nearest(code: &RsCode, u: &[Fe]) -> Result<OracleResult> {
    if u.len() != code.n() {
        return Err(Error::LengthMismatch {
            expected: code.n(),
            actual: u.len(),
        });
    }
    let mut best: Option<(usize, Vec<Fe>)> = None;
    let mut ties = 0usize;
    for_each_codeword(code, |_, cw| {
        let d = u.iter().zip(cw).filter(|(a, b)| a != b).count();
        match &best {
            Some((bd, _)) if d > *bd => {}
            Some((bd, _)) if d == *bd => ties += 1,
            _ => {
                best = Some((d, cw.to_vec()));
                ties = 0;
            }
        }
    })?;
    let (distance, nearest) = best.expect("a code has at least one codeword");
    Ok(OracleResult {
        nearest: Word::new(nearest),
        distance,
        unique: ties == 0,
    })
}

/// Minimum weight over all nonzero codewords.
pub fn brute_min_distance(code: &RsCode) -> Result<usize> {
    let mut min = usize::MAX;
    for_each_codeword(code, |msg, cw| {
        if msg.iter().any(|m| !m.is_zero()) {
            min = min.min(cw.iter().filter(|c| !c.is_zero()).count());
        }
    })?;
    Ok(min)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;

    fn code(q: u32, alpha: Option<u32>, k: usize) -> RsCode {
        let mut f = Field::prime(q).unwrap();
        if let Some(a) = alpha {
            f = f.with_alpha(Fe(a)).unwrap();
        }
        RsCode::new(f, k).unwrap()
    }

    fn w(c: &RsCode, digits: &str) -> Word {
        Word::from_digits(c.field(), digits).unwrap()
    }

    #[test]
    fn hamming_examples() {
        let c = code(7, Some(5), 2);
        assert_eq!(hamming(&w(&c, "265034"), &w(&c, "231546")).unwrap(), 5);
        assert_eq!(hamming(&w(&c, "111111"), &w(&c, "265034")).unwrap(), 6);
        assert_eq!(hamming(&w(&c, "265034"), &w(&c, "265034")).unwrap(), 0);
        assert!(hamming(&w(&c, "26503"), &w(&c, "265034")).is_err());
    }

    #[test]
    fn enumeration_matches_encoding() {
        let c = code(5, None, 2);
        let mut seen = Vec::new();
        for_each_codeword(&c, |m, cw| {
            assert_eq!(c.encode(m).unwrap().symbols(), cw);
            seen.push(m.to_vec());
        })
        .unwrap();
        assert_eq!(seen.len(), 25);
        let mut sorted = seen.clone();
        sorted.sort();
        assert_eq!(seen, sorted);
    }

    #[test]
    fn nearest_examples() {
        let c = code(7, Some(5), 2);
        let r = brute_nearest(&c, &w(&c, "421632")).unwrap();
        assert_eq!((r.nearest, r.distance, r.unique), (w(&c, "401632"), 1, true));
        let r = brute_nearest(&c, &w(&c, "025606")).unwrap();
        assert_eq!((r.nearest, r.distance, r.unique), (w(&c, "025641"), 2, true));
        let r = brute_nearest(&c, &w(&c, "342650")).unwrap();
        assert_eq!((r.nearest, r.distance), (w(&c, "342650"), 0));
    }

    #[test]
    fn ties_are_reported() {
        // 265146 is at distance 3 from both 265034 and 231546
        let c = code(7, Some(5), 2);
        let u = w(&c, "265146");
        assert_eq!(hamming(&u, &w(&c, "265034")).unwrap(), 3);
        assert_eq!(hamming(&u, &w(&c, "231546")).unwrap(), 3);
        let r = brute_nearest(&c, &u).unwrap();
        assert!(r.distance <= 3);
        if r.distance == 3 {
            assert!(!r.unique);
        }
    }

    #[test]
    fn min_distance_examples() {
        assert_eq!(brute_min_distance(&code(7, Some(5), 2)).unwrap(), 5);
        assert_eq!(brute_min_distance(&code(7, Some(5), 5)).unwrap(), 2);
        assert_eq!(brute_min_distance(&code(5, None, 2)).unwrap(), 3);
    }

    #[test]
    fn enumeration_guard() {
        let c = RsCode::new(Field::gf256(), 3).unwrap();
        assert_eq!(brute_min_distance(&c), Err(Error::TooLargeToEnumerate(256u128.pow(3))));
    }
}
