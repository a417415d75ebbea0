#![allow(dead_code)]

use rand::Rng;
use rsic::bench::random_error_pattern;
use rsic::{Fe, Field, Poly, RsCode, Word};

pub fn toy_code() -> RsCode {
    RsCode::new(Field::prime(7).unwrap().with_alpha(Fe(5)).unwrap(), 2).unwrap()
}

pub fn word(code: &RsCode, digits: &str) -> Word {
    Word::from_digits(code.field(), digits).unwrap()
}

pub fn poly(code: &RsCode, low_first: &[u32]) -> Poly {
    Poly::from_values(code.field(), low_first).unwrap()
}

/// Lagrange basis polynomial in product form,
/// `prod_{j != i} (x - alpha^j) / (alpha^i - alpha^j)`.
pub fn lagrange_product(code: &RsCode, i: usize) -> Poly {
    let f = code.field();
    let points = code.points();
    let mut acc = Poly::one();
    for (j, &xj) in points.iter().enumerate() {
        if j == i {
            continue;
        }
        let denom = f.inv(f.sub(points[i], xj)).unwrap();
        let factor = Poly::from_coeffs(vec![f.neg(xj), Fe::ONE]).scale(denom, f);
        acc = acc.mul(&factor, f);
    }
    acc
}

pub fn random_message(rng: &mut impl Rng, code: &RsCode) -> Vec<Fe> {
    (0..code.k())
        .map(|_| Fe(rng.gen_range(0..code.field().order())))
        .collect()
}

/// A random codeword and a copy with exactly `t` symbol errors.
pub fn corrupted_codeword(rng: &mut impl Rng, code: &RsCode, t: usize) -> (Word, Word) {
    let f = code.field();
    let sent = code.encode(&random_message(rng, code)).unwrap();
    let mut received = sent.clone().into_symbols();
    for (pos, v) in random_error_pattern(rng, code.n(), f.order(), t) {
        received[pos] = f.add(received[pos], v);
    }
    (sent, Word::new(received))
}

/// Every prime field and binary field of order at most `max_q`.
pub fn fields_up_to(max_q: u32) -> Vec<Field> {
    (3..=max_q)
        .filter_map(|q| Field::from_order(q).ok())
        .collect()
}
