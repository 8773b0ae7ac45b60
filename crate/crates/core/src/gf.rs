//! Arithmetic in GF(q), q = p^m.
//!
//! An element is stored as the integer `rep = d_0 + d_1 p + ... + d_{m-1} p^{m-1}`,
//! where `d_0 + d_1 t + ... + d_{m-1} t^{m-1}` is its polynomial residue modulo the
//! field's defining polynomial. Text I/O uses `rep` directly, so `0..q` is the whole field.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Fields above this size are outside the supported range.
pub const MAX_ORDER: u64 = 1 << 16;

/// Operation tables are precomputed up to this order.
const TABLE_ORDER: u32 = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error("characteristic {0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {0} exceeds the supported maximum {MAX_ORDER}")]
    TooLarge(u128),
    #[error("modulus must have {expected} coefficients (degree {degree}), got {got}")]
    ModulusLength {
        expected: usize,
        degree: u32,
        got: usize,
    },
    #[error("modulus coefficient {0} is not in [0, p)")]
    ModulusCoefficient(u32),
    #[error("modulus is not monic")]
    NotMonic,
    #[error("modulus {0} is reducible over GF({1})")]
    Reducible(String, u32),
    #[error("no built-in modulus for q = {0}; supply one explicitly")]
    NoBuiltinModulus(u64),
    #[error("{0} is not an element of GF({1})")]
    OutOfRange(u64, u32),
    #[error("operands belong to different fields ({0} vs {1})")]
    MixedFields(String, String),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
}

/// Canonical defining polynomials (ascending coefficients) for the small
/// extension fields that may be requested without an explicit modulus.
const BUILTIN_MODULI: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (5, 2, &[2, 4, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
];

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` as `p^m` with `p` prime, if possible.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut rest, mut m) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

struct Inner {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    tables: Option<Tables>,
}

struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

/// A finite field GF(p^m) with an explicit, validated defining polynomial.
///
/// Cloning is cheap; clones share the same tables.
#[derive(Clone)]
pub struct FiniteField(Arc<Inner>);

impl FiniteField {
    /// Builds GF(p^m). With `modulus` omitted, prime fields need nothing and
    /// extension fields fall back to the built-in table.
    pub fn new(p: u64, m: u32, modulus: Option<&[u32]>) -> Result<Self, GfError> {
        if !is_prime(p) {
            return Err(GfError::NotPrime(p));
        }
        if m == 0 {
            return Err(GfError::ZeroDegree);
        }
        let q = (p as u128).checked_pow(m).unwrap_or(u128::MAX);
        if q > MAX_ORDER as u128 {
            return Err(GfError::TooLarge(q));
        }
        let (p, q) = (p as u32, q as u32);

        let modulus: Vec<u32> = match modulus {
            Some(coeffs) => coeffs.to_vec(),
            None if m == 1 => vec![0, 1],
            None => BUILTIN_MODULI
                .iter()
                .find(|(bp, bm, _)| *bp == p && *bm == m)
                .map(|(_, _, c)| c.to_vec())
                .ok_or(GfError::NoBuiltinModulus(q as u64))?,
        };
        if modulus.len() != m as usize + 1 {
            return Err(GfError::ModulusLength {
                expected: m as usize + 1,
                degree: m,
                got: modulus.len(),
            });
        }
        if let Some(&c) = modulus.iter().find(|&&c| c >= p) {
            return Err(GfError::ModulusCoefficient(c));
        }
        if modulus[m as usize] != 1 {
            return Err(GfError::NotMonic);
        }
        if !is_irreducible(&modulus, p) {
            return Err(GfError::Reducible(render_modulus(&modulus), p));
        }

        let mut inner = Inner {
            p,
            m,
            q,
            modulus,
            tables: None,
        };
        if q <= TABLE_ORDER {
            inner.tables = Some(Tables::build(&inner));
        }
        Ok(FiniteField(Arc::new(inner)))
    }

    /// The prime field GF(p).
    pub fn prime(p: u64) -> Result<Self, GfError> {
        Self::new(p, 1, None)
    }

    /// GF(q) for a prime power `q`, using the built-in modulus when `q` is not prime.
    pub fn with_order(q: u64) -> Result<Self, GfError> {
        let (p, m) = prime_power(q).ok_or(GfError::NotPrimePower(q))?;
        Self::new(p, m, None)
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn m(&self) -> u32 {
        self.0.m
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// Defining polynomial, ascending coefficients, length m+1.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn element(&self, rep: u64) -> Result<FieldElement, GfError> {
        if rep >= self.q() as u64 {
            return Err(GfError::OutOfRange(rep, self.q()));
        }
        Ok(FieldElement {
            field: self.clone(),
            rep: rep as u32,
        })
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            rep: 0,
        }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            rep: 1,
        }
    }

    /// All q elements in ascending `rep` order, starting with zero.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q()).map(move |rep| FieldElement {
            field: self.clone(),
            rep,
        })
    }

    fn check(&self, a: &FieldElement) -> Result<(), GfError> {
        if &a.field == self {
            Ok(())
        } else {
            Err(GfError::MixedFields(self.to_string(), a.field.to_string()))
        }
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, GfError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.wrap(self.add_raw(a.rep, b.rep)))
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, GfError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.wrap(self.sub_raw(a.rep, b.rep)))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, GfError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.wrap(self.mul_raw(a.rep, b.rep)))
    }

    pub fn neg(&self, a: &FieldElement) -> Result<FieldElement, GfError> {
        self.check(a)?;
        Ok(self.wrap(self.neg_raw(a.rep)))
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement, GfError> {
        self.check(a)?;
        self.inv_raw(a.rep).map(|r| self.wrap(r))
    }

    pub fn pow(&self, a: &FieldElement, e: u64) -> Result<FieldElement, GfError> {
        self.check(a)?;
        Ok(self.wrap(self.pow_raw(a.rep, e)))
    }

    fn wrap(&self, rep: u32) -> FieldElement {
        FieldElement {
            field: self.clone(),
            rep,
        }
    }

    // Raw operations on `rep` values. Callers guarantee operands are < q.

    pub(crate) fn add_raw(&self, a: u32, b: u32) -> u32 {
        match &self.0.tables {
            Some(t) => t.add[(a * self.q() + b) as usize],
            None => self.digitwise(a, b, |x, y, p| (x + y) % p),
        }
    }

    pub(crate) fn neg_raw(&self, a: u32) -> u32 {
        match &self.0.tables {
            Some(t) => t.neg[a as usize],
            None => self.digitwise(a, 0, |x, _, p| (p - x) % p),
        }
    }

    pub(crate) fn sub_raw(&self, a: u32, b: u32) -> u32 {
        self.add_raw(a, self.neg_raw(b))
    }

    pub(crate) fn mul_raw(&self, a: u32, b: u32) -> u32 {
        match &self.0.tables {
            Some(t) => t.mul[(a * self.q() + b) as usize],
            None => self.mul_slow(a, b),
        }
    }

    pub(crate) fn inv_raw(&self, a: u32) -> Result<u32, GfError> {
        if a == 0 {
            return Err(GfError::ZeroInverse);
        }
        Ok(match &self.0.tables {
            Some(t) => t.inv[a as usize],
            None => self.pow_raw(a, self.q() as u64 - 2),
        })
    }

    pub(crate) fn pow_raw(&self, a: u32, mut e: u64) -> u32 {
        let (mut base, mut acc) = (a, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_raw(acc, base);
            }
            base = self.mul_raw(base, base);
            e >>= 1;
        }
        acc
    }

    fn digitwise(&self, a: u32, b: u32, op: impl Fn(u32, u32, u32) -> u32) -> u32 {
        let p = self.p();
        let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
        for _ in 0..self.m() {
            out += op(a % p, b % p, p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let (p, m) = (self.p() as u64, self.m() as usize);
        let da = digits(a, self.p(), m);
        let db = digits(b, self.p(), m);
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // Reduce by the monic modulus from the top down.
        for top in (m..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            for (i, &mc) in self.modulus()[..m].iter().enumerate() {
                let idx = top - m + i;
                prod[idx] = (prod[idx] + (p - c) * mc as u64) % p;
            }
            prod[top] = 0;
        }
        prod[..m].iter().rev().fold(0u64, |acc, &d| acc * p + d) as u32
    }
}

impl Tables {
    fn build(inner: &Inner) -> Self {
        // A temporary table-less field to drive the slow paths.
        let slow = FiniteField(Arc::new(Inner {
            p: inner.p,
            m: inner.m,
            q: inner.q,
            modulus: inner.modulus.clone(),
            tables: None,
        }));
        let q = inner.q;
        let mut add = Vec::with_capacity((q * q) as usize);
        let mut mul = Vec::with_capacity((q * q) as usize);
        for a in 0..q {
            for b in 0..q {
                add.push(slow.add_raw(a, b));
                mul.push(slow.mul_raw(a, b));
            }
        }
        let neg = (0..q).map(|a| slow.neg_raw(a)).collect();
        let mut inv = vec![0; q as usize];
        for a in 1..q {
            inv[a as usize] = (1..q)
                .find(|&b| mul[(a * q + b) as usize] == 1)
                .expect("nonzero element of a field has an inverse");
        }
        Tables { add, mul, neg, inv }
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FiniteField {}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteField")
            .field("p", &self.0.p)
            .field("m", &self.0.m)
            .field("modulus", &self.0.modulus)
            .finish()
    }
}

impl fmt::Display for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m() == 1 {
            write!(f, "GF({})", self.q())
        } else {
            write!(f, "GF({}) mod {}", self.q(), render_modulus(self.modulus()))
        }
    }
}

/// An element of a specific [`FiniteField`].
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: FiniteField,
    rep: u32,
}

impl FieldElement {
    pub fn rep(&self) -> u32 {
        self.rep
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.rep == 0
    }

    /// Base-p digits of the residue polynomial, ascending, length m.
    pub fn coefficients(&self) -> Vec<u32> {
        digits(self.rep, self.field.p(), self.field.m() as usize)
    }

    pub fn from_coefficients(field: &FiniteField, coeffs: &[u32]) -> Result<Self, GfError> {
        let p = field.p() as u64;
        if coeffs.len() > field.m() as usize {
            return Err(GfError::ModulusLength {
                expected: field.m() as usize,
                degree: field.m(),
                got: coeffs.len(),
            });
        }
        if let Some(&c) = coeffs.iter().find(|&&c| c as u64 >= p) {
            return Err(GfError::OutOfRange(c as u64, field.p()));
        }
        let rep = coeffs.iter().rev().fold(0u64, |acc, &d| acc * p + d as u64);
        field.element(rep)
    }

    pub fn inv(&self) -> Result<Self, GfError> {
        self.field.inv(self)
    }

    pub fn pow(&self, e: u64) -> Self {
        self.field.wrap(self.field.pow_raw(self.rep, e))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@GF({})", self.rep, self.field.q())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $field_op:ident) => {
        impl std::ops::$trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;

            /// Panics on mixed-field operands; use the `FiniteField` methods
            /// for a checked variant.
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.field
                    .$field_op(self, rhs)
                    .expect("mixed-field arithmetic")
            }
        }

        impl std::ops::$trait for FieldElement {
            type Output = FieldElement;

            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, add);
binop!(Sub, sub, sub);
binop!(Mul, mul, mul);

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;

    fn neg(self) -> FieldElement {
        self.field.wrap(self.field.neg_raw(self.rep))
    }
}

impl std::ops::Neg for FieldElement {
    type Output = FieldElement;

    fn neg(self) -> FieldElement {
        -&self
    }
}

fn digits(mut rep: u32, p: u32, m: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(m);
    for _ in 0..m {
        out.push(rep % p);
        rep /= p;
    }
    out
}

fn render_modulus(coeffs: &[u32]) -> String {
    let mut terms = Vec::new();
    for (deg, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match deg {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{deg}"),
        };
        terms.push(match (c, deg) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => format!("{c}*{mono}"),
        });
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

/// Polynomials over GF(p) as ascending coefficient vectors with no trailing zeros.
fn trim(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn poly_rem(num: &[u32], den: &[u32], p: u32) -> Vec<u32> {
    let den = trim(den.to_vec());
    let mut rem = trim(num.to_vec());
    let p64 = p as u64;
    let lead_inv = (1..p)
        .find(|&x| (x as u64 * *den.last().unwrap() as u64) % p64 == 1)
        .unwrap();
    while rem.len() >= den.len() {
        let shift = rem.len() - den.len();
        let factor = (*rem.last().unwrap() as u64 * lead_inv as u64) % p64;
        for (i, &d) in den.iter().enumerate() {
            let sub = (factor * d as u64) % p64;
            rem[shift + i] = ((rem[shift + i] as u64 + p64 - sub) % p64) as u32;
        }
        rem = trim(rem);
    }
    rem
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let deg = modulus.len() - 1;
    for d in 1..=deg / 2 {
        // Enumerate the p^d choices of lower coefficients.
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut divisor = Vec::with_capacity(d + 1);
            let mut rest = idx;
            for _ in 0..d {
                divisor.push((rest % p as u64) as u32);
                rest /= p as u64;
            }
            divisor.push(1);
            if poly_rem(modulus, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_test_fields() -> Vec<FiniteField> {
        [2u64, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32]
            .iter()
            .map(|&q| FiniteField::with_order(q).unwrap())
            .collect()
    }

    #[test]
    fn builds_prime_field() {
        let f = FiniteField::new(2, 1, None).unwrap();
        assert_eq!(f.q(), 2);
        assert_eq!(f.modulus(), &[0, 1]);
    }

    #[test]
    fn builds_gf4_with_explicit_modulus() {
        let f = FiniteField::new(2, 2, Some(&[1, 1, 1])).unwrap();
        assert_eq!(f.q(), 4);
    }

    #[test]
    fn rejects_reducible_modulus() {
        let err = FiniteField::new(2, 2, Some(&[0, 0, 1])).unwrap_err();
        assert!(matches!(err, GfError::Reducible(..)));
        // t^2 + 1 = (t + 1)^2 over GF(2)
        assert!(FiniteField::new(2, 2, Some(&[1, 0, 1])).is_err());
        // t^2 + 1 is irreducible over GF(3) but not over GF(5)
        assert!(FiniteField::new(3, 2, Some(&[1, 0, 1])).is_ok());
        assert!(FiniteField::new(5, 2, Some(&[1, 0, 1])).is_err());
    }

    #[test]
    fn rejects_bad_construction_inputs() {
        assert_eq!(
            FiniteField::new(4, 1, None).unwrap_err(),
            GfError::NotPrime(4)
        );
        assert_eq!(
            FiniteField::new(2, 0, None).unwrap_err(),
            GfError::ZeroDegree
        );
        assert_eq!(
            FiniteField::new(2, 2, Some(&[1, 1, 2])).unwrap_err(),
            GfError::ModulusCoefficient(2)
        );
        assert_eq!(
            FiniteField::new(3, 2, Some(&[1, 1, 2])).unwrap_err(),
            GfError::NotMonic
        );
        assert!(matches!(
            FiniteField::new(2, 2, Some(&[1, 1])).unwrap_err(),
            GfError::ModulusLength { .. }
        ));
        assert_eq!(
            FiniteField::new(7, 2, None).unwrap_err(),
            GfError::NoBuiltinModulus(49)
        );
        assert!(matches!(
            FiniteField::new(2, 17, None).unwrap_err(),
            GfError::TooLarge(_)
        ));
    }

    #[test]
    fn builtin_table_covers_small_extensions() {
        for q in [4u64, 8, 9, 16, 25, 27, 32] {
            let f = FiniteField::with_order(q).unwrap();
            assert_eq!(f.q() as u64, q);
        }
    }

    #[test]
    fn gf2_addition_is_xor() {
        let f = FiniteField::prime(2).unwrap();
        let one = f.one();
        assert_eq!(f.add(&one, &one).unwrap(), f.zero());
    }

    #[test]
    fn gf4_alpha_squared_is_alpha_plus_one() {
        let f = FiniteField::new(2, 2, Some(&[1, 1, 1])).unwrap();
        let alpha = f.element(2).unwrap();
        assert_eq!(f.mul(&alpha, &alpha).unwrap().rep(), 3);
    }

    #[test]
    fn inverses() {
        let gf5 = FiniteField::prime(5).unwrap();
        assert_eq!(gf5.element(2).unwrap().inv().unwrap().rep(), 3);
        assert_eq!(gf5.one().inv().unwrap(), gf5.one());
        assert_eq!(gf5.zero().inv().unwrap_err(), GfError::ZeroInverse);

        // Exhaustive search oracle over the nonzero elements of GF(4).
        let gf4 = FiniteField::new(2, 2, Some(&[1, 1, 1])).unwrap();
        let two = gf4.element(2).unwrap();
        let by_search: Vec<u64> = (1..4u64)
            .filter(|&b| gf4.mul(&two, &gf4.element(b).unwrap()).unwrap().rep() == 1)
            .collect();
        assert_eq!(by_search, vec![3]);
        assert_eq!(two.inv().unwrap().rep(), 3);
    }

    #[test]
    fn element_listing() {
        for q in [2u64, 3, 4] {
            let f = FiniteField::with_order(q).unwrap();
            let reps: Vec<u32> = f.elements().map(|e| e.rep()).collect();
            assert_eq!(reps, (0..q as u32).collect::<Vec<_>>());
        }
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let gf2 = FiniteField::prime(2).unwrap();
        let gf3 = FiniteField::prime(3).unwrap();
        let err = gf2.add(&gf2.one(), &gf3.one()).unwrap_err();
        assert!(matches!(err, GfError::MixedFields(..)));
        assert!(gf2.element(2).is_err());
    }

    #[test]
    fn times_zero_is_zero() {
        for f in all_test_fields() {
            for a in f.elements() {
                assert!(f.mul(&a, &f.zero()).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for f in all_test_fields() {
            let q = f.q();
            for a in 0..q {
                for b in 0..q {
                    assert_eq!(f.add_raw(a, b), f.add_raw(b, a));
                    assert_eq!(f.mul_raw(a, b), f.mul_raw(b, a));
                    assert_eq!(f.sub_raw(f.add_raw(a, b), b), a);
                    for c in 0..q {
                        assert_eq!(f.add_raw(f.add_raw(a, b), c), f.add_raw(a, f.add_raw(b, c)));
                        assert_eq!(f.mul_raw(f.mul_raw(a, b), c), f.mul_raw(a, f.mul_raw(b, c)));
                        assert_eq!(
                            f.mul_raw(a, f.add_raw(b, c)),
                            f.add_raw(f.mul_raw(a, b), f.mul_raw(a, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_and_fermat_exhaustive() {
        for f in all_test_fields() {
            let (p, q) = (f.p() as u64, f.q());
            for a in 0..q {
                if a != 0 {
                    assert_eq!(f.pow_raw(a, q as u64 - 1), 1, "{f}: {a}^(q-1)");
                    assert_eq!(f.mul_raw(a, f.inv_raw(a).unwrap()), 1);
                }
                for b in 0..q {
                    let lhs = f.pow_raw(f.add_raw(a, b), p);
                    let rhs = f.add_raw(f.pow_raw(a, p), f.pow_raw(b, p));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn slow_path_matches_tables() {
        let f = FiniteField::with_order(32).unwrap();
        for a in 0..32 {
            for b in 0..32 {
                assert_eq!(f.mul_raw(a, b), f.mul_slow(a, b));
                assert_eq!(f.add_raw(a, b), f.digitwise(a, b, |x, y, p| (x + y) % p));
            }
        }
    }

    #[test]
    fn large_field_without_tables() {
        // t^2 + t + 3 is irreducible over GF(17): discriminant 1 - 12 = 6 is a non-residue.
        let f = FiniteField::new(17, 2, Some(&[3, 1, 1])).unwrap();
        assert_eq!(f.q(), 289);
        for a in [1u32, 2, 17, 100, 288] {
            let inv = f.inv_raw(a).unwrap();
            assert_eq!(f.mul_raw(a, inv), 1);
        }
    }

    #[test]
    fn coefficient_round_trip() {
        let f = FiniteField::with_order(27).unwrap();
        for e in f.elements() {
            let back = FieldElement::from_coefficients(&f, &e.coefficients()).unwrap();
            assert_eq!(back, e);
        }
    }

    #[test]
    fn prime_power_split() {
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }
}
