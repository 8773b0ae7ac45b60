//! Exact bivariate polynomials in `x` and `y` with rational coefficients.
//!
//! [`HomoPoly`] stores a homogeneous polynomial densely: `coeffs[j]` is the
//! coefficient of `x^(n-j) y^j`, so a weight enumerator is literally its
//! weight distribution. [`Poly`] is a sparse general polynomial, used for
//! derivatives and anything whose degree is not fixed up front.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `a (a-1) ... (a-k+1)`, zero when `k > a`.
fn falling(a: u32, k: u32) -> BigInt {
    if k > a {
        return BigInt::zero();
    }
    (a - k + 1..=a).fold(BigInt::one(), |acc, v| acc * v)
}

/// A linear form `a x + b y`.
pub type Linear = (Rational, Rational);

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HomoPoly {
    coeffs: Vec<Rational>,
}

impl HomoPoly {
    /// Builds a polynomial of degree `coeffs.len() - 1`.
    ///
    /// Panics on an empty coefficient list.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a homogeneous polynomial needs n+1 coefficients"
        );
        HomoPoly { coeffs }
    }

    pub fn from_integers<I: Into<BigInt> + Clone>(coeffs: &[I]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|c| Rational::from_integer(c.clone().into()))
                .collect(),
        )
    }

    pub fn zero(degree: u32) -> Self {
        HomoPoly {
            coeffs: vec![Rational::zero(); degree as usize + 1],
        }
    }

    pub fn one() -> Self {
        HomoPoly {
            coeffs: vec![Rational::one()],
        }
    }

    /// `c x^(degree-j) y^j`.
    pub fn monomial(degree: u32, j: u32, c: Rational) -> Self {
        let mut p = Self::zero(degree);
        p.coeffs[j as usize] = c;
        p
    }

    /// `a x + b y`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        HomoPoly { coeffs: vec![a, b] }
    }

    pub fn x() -> Self {
        Self::linear(rat(1), rat(0))
    }

    pub fn y() -> Self {
        Self::linear(rat(0), rat(1))
    }

    pub fn degree(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    /// Coefficient of `x^(n-j) y^j`.
    pub fn coeff(&self, j: u32) -> &Rational {
        &self.coeffs[j as usize]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        HomoPoly {
            coeffs: self.coeffs.iter().map(|v| v * c).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `p(a x + b y, c x + d y)` for `x_to = (a, b)` and `y_to = (c, d)`.
    pub fn substitute_linear(&self, x_to: &Linear, y_to: &Linear) -> Self {
        let n = self.degree();
        let lx = Self::linear(x_to.0.clone(), x_to.1.clone());
        let ly = Self::linear(y_to.0.clone(), y_to.1.clone());
        let mut x_pows = vec![Self::one()];
        let mut y_pows = vec![Self::one()];
        for i in 1..=n as usize {
            x_pows.push(&x_pows[i - 1] * &lx);
            y_pows.push(&y_pows[i - 1] * &ly);
        }
        let mut out = Self::zero(n);
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = &x_pows[n as usize - j] * &y_pows[j];
            for (slot, v) in out.coeffs.iter_mut().zip(term.coeffs) {
                *slot += c * v;
            }
        }
        out
    }

    pub fn eval(&self, x0: &Rational, y0: &Rational) -> Rational {
        let n = self.degree();
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| {
                c * num_traits::pow(x0.clone(), (n as usize) - j) * num_traits::pow(y0.clone(), j)
            })
            .fold(Rational::zero(), |acc, t| acc + t)
    }

    pub fn to_poly(&self) -> Poly {
        Poly::from(self)
    }

    pub fn partial_x(&self) -> Poly {
        self.mixed_partial(1, 0)
    }

    pub fn partial_y(&self) -> Poly {
        self.mixed_partial(0, 1)
    }

    /// `∂^(dx+dy) p / ∂x^dx ∂y^dy`.
    pub fn mixed_partial(&self, dx: u32, dy: u32) -> Poly {
        self.to_poly().mixed_partial(dx, dy)
    }
}

impl From<&HomoPoly> for Poly {
    fn from(p: &HomoPoly) -> Self {
        let n = p.degree();
        let mut terms = BTreeMap::new();
        for (j, c) in p.coeffs.iter().enumerate() {
            if !c.is_zero() {
                terms.insert((n - j as u32, j as u32), c.clone());
            }
        }
        Poly { terms }
    }
}

impl Add for &HomoPoly {
    type Output = HomoPoly;

    /// Panics if the degrees differ; the sum would not be homogeneous.
    fn add(self, rhs: &HomoPoly) -> HomoPoly {
        assert_eq!(
            self.degree(),
            rhs.degree(),
            "adding homogeneous polynomials of different degree"
        );
        HomoPoly {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &HomoPoly {
    type Output = HomoPoly;

    fn sub(self, rhs: &HomoPoly) -> HomoPoly {
        self + &(-rhs)
    }
}

impl Neg for &HomoPoly {
    type Output = HomoPoly;

    fn neg(self) -> HomoPoly {
        HomoPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &HomoPoly {
    type Output = HomoPoly;

    fn mul(self, rhs: &HomoPoly) -> HomoPoly {
        let mut out = HomoPoly::zero(self.degree() + rhs.degree());
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }
}

impl fmt::Debug for HomoPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HomoPoly[deg {}]({})", self.degree(), self)
    }
}

impl fmt::Display for HomoPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| ((n - j as u32, j as u32), c));
        render_terms(f, terms)
    }
}

/// A sparse polynomial in `x`, `y`; keys are `(x-exponent, y-exponent)`.
/// Zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c x^a y^b`.
    pub fn monomial(c: Rational, a: u32, b: u32) -> Self {
        let mut p = Self::zero();
        p.add_term((a, b), c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending `(x-exponent, y-exponent)` order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &Rational)> {
        self.terms.iter().map(|(&k, v)| (k, v))
    }

    pub fn coeff(&self, a: u32, b: u32) -> Rational {
        self.terms
            .get(&(a, b))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, key: (u32, u32), c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Total degree of the highest term; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(a, b)| a + b).max()
    }

    /// Converts to a [`HomoPoly`] of the given degree if every term has that total degree.
    /// The zero polynomial converts to the zero of any degree.
    pub fn to_homogeneous(&self, degree: u32) -> Option<HomoPoly> {
        let mut out = HomoPoly::zero(degree);
        for (&(a, b), c) in &self.terms {
            if a + b != degree {
                return None;
            }
            out.coeffs[b as usize] = c.clone();
        }
        Some(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    pub fn partial_x(&self) -> Self {
        self.mixed_partial(1, 0)
    }

    pub fn partial_y(&self) -> Self {
        self.mixed_partial(0, 1)
    }

    pub fn mixed_partial(&self, dx: u32, dy: u32) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            if a < dx || b < dy {
                continue;
            }
            let factor = Rational::from_integer(falling(a, dx) * falling(b, dy));
            out.add_term((a - dx, b - dy), c * factor);
        }
        out
    }

    pub fn eval(&self, x0: &Rational, y0: &Rational) -> Rational {
        self.terms
            .iter()
            .map(|(&(a, b), c)| {
                c * num_traits::pow(x0.clone(), a as usize)
                    * num_traits::pow(y0.clone(), b as usize)
            })
            .fold(Rational::zero(), |acc, t| acc + t)
    }

    /// `p(a x + b y, c x + d y)`.
    pub fn substitute_linear(&self, x_to: &Linear, y_to: &Linear) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            let mono = HomoPoly::monomial(a + b, b, c.clone());
            out = &out + &mono.substitute_linear(x_to, y_to).to_poly();
        }
        out
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (&k, v) in &rhs.terms {
            out.add_term(k, v.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (&k, v) in &rhs.terms {
            out.add_term(k, -v);
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(&k, v)| (k, -v)).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_terms(f, self.terms.iter().rev().map(|(&k, v)| (k, v)))
    }
}

/// Writes `c*x^a*y^b` terms joined by ` + ` / ` - `, skipping zeros.
/// Unit coefficients are left implicit except on constants; `0` for an empty sum.
fn render_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = ((u32, u32), &'a Rational)>,
) -> fmt::Result {
    let mut first = true;
    for ((a, b), c) in terms {
        if c.is_zero() {
            continue;
        }
        let mut factors = Vec::new();
        match a {
            0 => {}
            1 => factors.push("x".to_string()),
            _ => factors.push(format!("x^{a}")),
        }
        match b {
            0 => {}
            1 => factors.push("y".to_string()),
            _ => factors.push(format!("y^{b}")),
        }
        let mag = c.abs();
        let body = if factors.is_empty() {
            mag.to_string()
        } else if mag.is_one() {
            factors.join("*")
        } else {
            format!("{}*{}", mag, factors.join("*"))
        };
        match (first, c.is_negative()) {
            (true, false) => write!(f, "{body}")?,
            (true, true) => write!(f, "-{body}")?,
            (false, false) => write!(f, " + {body}")?,
            (false, true) => write!(f, " - {body}")?,
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}
