#![allow(dead_code)]

use macwilliams::{FiniteField, HomoPoly, LinearCode, MatrixGF, Rational};
use num_bigint::BigInt;
use rand::Rng;

pub const FIELD_ORDERS: [u64; 6] = [2, 3, 4, 5, 8, 9];

/// Largest codebook brute-forced for either side of a random pair.
pub const MAX_CODEBOOK: u64 = 1 << 18;

/// A random full-rank `k x n` generator over GF(q).
pub fn random_code<R: Rng>(rng: &mut R, field: &FiniteField, n: usize, k: usize) -> LinearCode {
    loop {
        let data = (0..n * k).map(|_| rng.gen_range(0..field.q())).collect();
        let g = MatrixGF::new(field, k, n, data).unwrap();
        if let Ok(code) = LinearCode::from_generator(g) {
            return code;
        }
    }
}

/// Random `(q, n, k)` with `q ∈ FIELD_ORDERS`, `n <= 10`, `k <= 6`, such that
/// both the code and its dual can be enumerated.
pub fn random_parameters<R: Rng>(rng: &mut R) -> (u64, usize, usize) {
    loop {
        let q = FIELD_ORDERS[rng.gen_range(0..FIELD_ORDERS.len())];
        let n = rng.gen_range(1..=10usize);
        let k = rng.gen_range(0..=n.min(6));
        let big = k.max(n - k) as u32;
        if q.checked_pow(big).is_some_and(|c| c <= MAX_CODEBOOK) {
            return (q, n, k);
        }
    }
}

pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    let num = rng.gen_range(-50i64..=50);
    let den = rng.gen_range(1i64..=12);
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn random_homo_poly<R: Rng>(rng: &mut R, max_degree: u32) -> HomoPoly {
    let degree = rng.gen_range(0..=max_degree);
    HomoPoly::new((0..=degree).map(|_| random_rational(rng)).collect())
}
