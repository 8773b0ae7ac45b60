//! Linear codes, brute-force codeword enumeration and weight distributions.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::gf::{FiniteField, GfError};
use crate::linalg::{LinalgError, MatrixGF};
use crate::poly::{HomoPoly, Rational};

/// Default upper bound on `q^k` for enumeration.
pub const DEFAULT_ENUM_CAP: u64 = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("code length must be positive")]
    ZeroLength,
    #[error("generator rows are rank-deficient: {rows} rows but rank {rank}")]
    RankDeficient { rows: usize, rank: usize },
    #[error("enumerating {count} codewords exceeds the cap of {cap}")]
    CapExceeded { count: u128, cap: u64 },
    #[error(transparent)]
    Matrix(#[from] LinalgError),
    #[error(transparent)]
    Field(#[from] GfError),
}

/// An `[n, k]` linear code over GF(q), given by a full-rank `k x n` generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    generator: MatrixGF,
}

impl LinearCode {
    pub fn new<R: AsRef<[u32]>>(
        field: &FiniteField,
        n: usize,
        rows: &[R],
    ) -> Result<Self, CodeError> {
        if n == 0 {
            return Err(CodeError::ZeroLength);
        }
        Self::from_generator(MatrixGF::from_rows(field, n, rows)?)
    }

    pub fn from_generator(generator: MatrixGF) -> Result<Self, CodeError> {
        let rank = generator.rank();
        if rank != generator.rows() {
            return Err(CodeError::RankDeficient {
                rows: generator.rows(),
                rank,
            });
        }
        Ok(LinearCode { generator })
    }

    pub fn field(&self) -> &FiniteField {
        self.generator.field()
    }

    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn q(&self) -> u32 {
        self.field().q()
    }

    pub fn generator(&self) -> &MatrixGF {
        &self.generator
    }

    /// Number of codewords, `q^k`.
    pub fn size(&self) -> u128 {
        (self.q() as u128).saturating_pow(self.k() as u32)
    }

    /// The dual code; its generator is the null space of this generator.
    pub fn dual(&self) -> LinearCode {
        LinearCode {
            generator: self
                .generator
                .dual_generator()
                .expect("generator has full rank by construction"),
        }
    }

    /// All codewords in lexicographic order of their message vectors.
    pub fn codewords(&self, cap: u64) -> Result<Codewords<'_>, CodeError> {
        self.check_cap(cap)?;
        Ok(Codewords::new(self))
    }

    pub fn weight_distribution(&self, cap: u64) -> Result<WeightDistribution, CodeError> {
        self.check_cap(cap)?;
        let mut counts = vec![0u64; self.n() + 1];
        let mut words = Codewords::new(self);
        while let Some(word) = words.next_ref() {
            counts[word.iter().filter(|&&c| c != 0).count()] += 1;
        }
        Ok(WeightDistribution::from_counts(&counts))
    }

    fn check_cap(&self, cap: u64) -> Result<(), CodeError> {
        let count = self.size();
        if count > cap as u128 {
            return Err(CodeError::CapExceeded { count, cap });
        }
        Ok(())
    }

    /// The `[n, 1]` repetition code.
    pub fn repetition(field: &FiniteField, n: usize) -> Result<Self, CodeError> {
        Self::new(field, n, &[vec![1; n]])
    }

    /// The `[n, n-1]` code of words whose coordinates sum to zero.
    pub fn zero_sum(field: &FiniteField, n: usize) -> Result<Self, CodeError> {
        Ok(Self::repetition(field, n)?.dual())
    }

    pub fn full_space(field: &FiniteField, n: usize) -> Result<Self, CodeError> {
        if n == 0 {
            return Err(CodeError::ZeroLength);
        }
        Self::from_generator(MatrixGF::identity(field, n))
    }

    pub fn zero_code(field: &FiniteField, n: usize) -> Result<Self, CodeError> {
        if n == 0 {
            return Err(CodeError::ZeroLength);
        }
        Self::from_generator(MatrixGF::empty(field, n))
    }

    /// Binary simplex code of length `2^r - 1`: columns are all nonzero vectors of F_2^r.
    pub fn simplex(r: u32) -> Result<Self, CodeError> {
        let field = FiniteField::prime(2)?;
        let n = (1usize << r) - 1;
        let rows: Vec<Vec<u32>> = (0..r)
            .map(|bit| (1..=n).map(|col| ((col >> bit) & 1) as u32).collect())
            .collect();
        Self::new(&field, n, &rows)
    }

    /// Binary Hamming code of length `2^r - 1`, the dual of the simplex code.
    pub fn hamming(r: u32) -> Result<Self, CodeError> {
        Ok(Self::simplex(r)?.dual())
    }

    /// The systematic `[7,4]` Hamming generator.
    pub fn hamming74() -> Self {
        let field = FiniteField::prime(2).expect("2 is prime");
        Self::new(
            &field,
            7,
            &[
                [1, 0, 0, 0, 0, 1, 1],
                [0, 1, 0, 0, 1, 0, 1],
                [0, 0, 1, 0, 1, 1, 0],
                [0, 0, 0, 1, 1, 1, 1],
            ],
        )
        .expect("Hamming generator has full rank")
    }
}

/// Streams the codewords of a [`LinearCode`].
///
/// Keeps one partial sum per message position so that advancing the
/// odometer only recomputes the suffix that changed.
pub struct Codewords<'a> {
    code: &'a LinearCode,
    message: Vec<u32>,
    /// `partial[i]` is the codeword contribution of message positions `< i`.
    partial: Vec<Vec<u32>>,
    started: bool,
    done: bool,
}

impl<'a> Codewords<'a> {
    fn new(code: &'a LinearCode) -> Self {
        let (k, n) = (code.k(), code.n());
        Codewords {
            code,
            message: vec![0; k],
            partial: vec![vec![0; n]; k + 1],
            started: false,
            done: false,
        }
    }

    fn refresh_from(&mut self, pos: usize) {
        let f = self.code.field();
        let g = self.code.generator();
        for i in pos..self.message.len() {
            let (head, tail) = self.partial.split_at_mut(i + 1);
            let (src, dst) = (&head[i], &mut tail[0]);
            let m = self.message[i];
            for (c, (d, s)) in dst.iter_mut().zip(src).enumerate() {
                *d = if m == 0 {
                    *s
                } else {
                    f.add_raw(*s, f.mul_raw(m, g.raw(i, c)))
                };
            }
        }
    }

    /// Advances and borrows the next codeword without allocating.
    pub fn next_ref(&mut self) -> Option<&[u32]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return self.partial.last().map(Vec::as_slice);
        }
        let q = self.code.q();
        let mut pos = self.message.len();
        loop {
            if pos == 0 {
                self.done = true;
                return None;
            }
            pos -= 1;
            self.message[pos] += 1;
            if self.message[pos] < q {
                break;
            }
            self.message[pos] = 0;
        }
        self.refresh_from(pos);
        self.partial.last().map(Vec::as_slice)
    }

    /// Message vector of the codeword most recently returned.
    pub fn message(&self) -> &[u32] {
        &self.message
    }
}

impl Iterator for Codewords<'_> {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        self.next_ref().map(<[u32]>::to_vec)
    }
}

/// Counts `W^0, ..., W^n` of codewords by Hamming weight.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeightDistribution {
    counts: Vec<BigUint>,
}

impl WeightDistribution {
    /// Panics on an empty list; a distribution has `n + 1` entries.
    pub fn new(counts: Vec<BigUint>) -> Self {
        assert!(!counts.is_empty(), "a weight distribution has n+1 entries");
        WeightDistribution { counts }
    }

    pub fn from_counts(counts: &[u64]) -> Self {
        Self::new(counts.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn n(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn count(&self, weight: usize) -> &BigUint {
        &self.counts[weight]
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// Counts as `u64` where they fit.
    pub fn to_u64(&self) -> Option<Vec<u64>> {
        self.counts.iter().map(ToPrimitive::to_u64).collect()
    }

    /// Smallest nonzero weight, if the code has a nonzero codeword.
    pub fn minimum_distance(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&w| !self.counts[w].is_zero())
    }

    /// Adds one to the count at `weight`.
    pub fn bump(&mut self, weight: usize) {
        self.counts[weight] += BigUint::one();
    }

    /// `W(x, y) = Σ_j W^j x^(n-j) y^j`.
    pub fn enumerator_poly(&self) -> HomoPoly {
        HomoPoly::new(
            self.counts
                .iter()
                .map(|c| Rational::from_integer(c.clone().into()))
                .collect(),
        )
    }
}

impl fmt::Debug for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightDistribution{self}")
    }
}

/// `[c0, c1, ..., cn]`
impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(BigUint::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}
