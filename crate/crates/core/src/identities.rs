//! The MacWilliams transform and its equivalent forms, evaluated exactly.
//!
//! Conventions used throughout:
//! * `W(x, y) = Σ_j W^j x^(n-j) y^j`, so `y` tracks weight.
//! * `C(a, b) = 0` whenever `b < 0` or `b > a`.
//! * A checker never errors on a failing identity; it reports nonzero residuals.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::codes::WeightDistribution;
use crate::poly::{rat, HomoPoly, Linear, Poly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("field size q = {0} is not at least 2")]
    FieldSize(u64),
    #[error("parameter {name} = {value} outside 0..={max}")]
    OutOfRange {
        name: &'static str,
        value: usize,
        max: usize,
    },
    #[error("distributions have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("dimension k = {k} exceeds length n = {n}")]
    Dimension { k: usize, n: usize },
    #[error("dual distribution sums to {got}, expected q^(n-k) = {expected}")]
    DualSize { expected: BigUint, got: BigUint },
    #[error("coefficient {value} at weight {weight} is not divisible by {divisor}")]
    NotDivisible {
        weight: usize,
        value: BigInt,
        divisor: BigInt,
    },
    #[error("transform produced negative count {value} at weight {weight}")]
    NegativeCount { weight: usize, value: BigInt },
    #[error("expected {expected} derivative values, got {got}")]
    ValueCount { expected: usize, got: usize },
}

/// `C(a, b)` with the zero convention outside `0 <= b <= a`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    (0..b).fold(BigInt::one(), |acc, i| acc * (a - i) / (i + 1))
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, v| acc * v)
}

fn int(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

fn signed_pow(base: i64, e: usize) -> BigInt {
    num_traits::pow(BigInt::from(base), e)
}

/// `q^e` for possibly negative `e`.
fn q_pow(q: u64, e: i64) -> Rational {
    let mag = num_traits::pow(BigInt::from(q), e.unsigned_abs() as usize);
    if e >= 0 {
        int(mag)
    } else {
        Rational::new(BigInt::one(), mag)
    }
}

fn check_q(q: u64) -> Result<(), IdentityError> {
    if q < 2 {
        Err(IdentityError::FieldSize(q))
    } else {
        Ok(())
    }
}

/// Krawtchouk value `K_r(j) = Σ_i (-1)^i (q-1)^(r-i) C(j, i) C(n-j, r-i)`.
pub fn krawtchouk(r: usize, j: usize, n: usize, q: u64) -> Result<BigInt, IdentityError> {
    check_q(q)?;
    for (name, value) in [("r", r), ("j", j)] {
        if value > n {
            return Err(IdentityError::OutOfRange {
                name,
                value,
                max: n,
            });
        }
    }
    Ok(krawtchouk_unchecked(r, j, n, q))
}

fn krawtchouk_unchecked(r: usize, j: usize, n: usize, q: u64) -> BigInt {
    let (r, j, n) = (r as i64, j as i64, n as i64);
    (0..=r)
        .map(|i| {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            sign * signed_pow(q as i64 - 1, (r - i) as usize)
                * binomial(j, i)
                * binomial(n - j, r - i)
        })
        .sum()
}

/// The substitution `x -> x + (q-1) y`, `y -> x - y`.
pub fn macwilliams_substitution(q: u64) -> (Linear, Linear) {
    ((rat(1), rat(q as i64 - 1)), (rat(1), rat(-1)))
}

/// `(1 / q^(n-k)) · W(x + (q-1)y, x - y)` with exact rational coefficients.
pub fn macwilliams_image(w_dual: &WeightDistribution, k: usize, q: u64) -> HomoPoly {
    let n = w_dual.n();
    let (sx, sy) = macwilliams_substitution(q);
    w_dual
        .enumerator_poly()
        .substitute_linear(&sx, &sy)
        .scale(&q_pow(q, k as i64 - n as i64))
}

fn validate_dual(w_dual: &WeightDistribution, k: usize, q: u64) -> Result<BigInt, IdentityError> {
    check_q(q)?;
    let n = w_dual.n();
    if k > n {
        return Err(IdentityError::Dimension { k, n });
    }
    let divisor = num_traits::pow(BigUint::from(q), n - k);
    let total = w_dual.total();
    if total != divisor {
        return Err(IdentityError::DualSize {
            expected: divisor,
            got: total,
        });
    }
    Ok(BigInt::from(divisor))
}

fn to_counts(values: Vec<BigInt>, divisor: &BigInt) -> Result<WeightDistribution, IdentityError> {
    let mut counts = Vec::with_capacity(values.len());
    for (weight, value) in values.into_iter().enumerate() {
        let (quot, rem) = value.div_rem(divisor);
        if !rem.is_zero() {
            return Err(IdentityError::NotDivisible {
                weight,
                value,
                divisor: divisor.clone(),
            });
        }
        if quot.is_negative() {
            return Err(IdentityError::NegativeCount {
                weight,
                value: quot,
            });
        }
        counts.push(quot.to_biguint().expect("nonnegative"));
    }
    Ok(WeightDistribution::new(counts))
}

/// Signature shared by [`transform_eq1`] and [`transform_eq2`].
pub type Transform =
    fn(&WeightDistribution, usize, u64) -> Result<WeightDistribution, IdentityError>;

/// Weight distribution of `C` from that of `C⊥`, by expanding the substituted
/// dual enumerator polynomial. `k` is the dimension of `C`.
pub fn transform_eq1(
    w_dual: &WeightDistribution,
    k: usize,
    q: u64,
) -> Result<WeightDistribution, IdentityError> {
    let divisor = validate_dual(w_dual, k, q)?;
    let (sx, sy) = macwilliams_substitution(q);
    let expanded = w_dual.enumerator_poly().substitute_linear(&sx, &sy);
    let values = expanded
        .into_coeffs()
        .into_iter()
        .map(|c| {
            debug_assert!(c.is_integer());
            c.to_integer()
        })
        .collect();
    to_counts(values, &divisor)
}

/// Same map as [`transform_eq1`], computed coefficient-wise from Krawtchouk values.
pub fn transform_eq2(
    w_dual: &WeightDistribution,
    k: usize,
    q: u64,
) -> Result<WeightDistribution, IdentityError> {
    let divisor = validate_dual(w_dual, k, q)?;
    let n = w_dual.n();
    let values = (0..=n)
        .map(|r| {
            (0..=n)
                .map(|j| BigInt::from(w_dual.count(j).clone()) * krawtchouk_unchecked(r, j, n, q))
                .sum()
        })
        .collect();
    to_counts(values, &divisor)
}

/// Which identity a report covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    Eq1,
    Eq2,
    Eq3,
    Eq4,
    Eq5,
    D2,
    D3,
    D4,
    D5,
}

impl IdentityId {
    pub const ALL: [IdentityId; 9] = [
        IdentityId::Eq1,
        IdentityId::Eq2,
        IdentityId::Eq3,
        IdentityId::Eq4,
        IdentityId::Eq5,
        IdentityId::D2,
        IdentityId::D3,
        IdentityId::D4,
        IdentityId::D5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Eq1 => "eq1",
            IdentityId::Eq2 => "eq2",
            IdentityId::Eq3 => "eq3",
            IdentityId::Eq4 => "eq4",
            IdentityId::Eq5 => "eq5",
            IdentityId::D2 => "eq2'",
            IdentityId::D3 => "eq3'",
            IdentityId::D4 => "eq4'",
            IdentityId::D5 => "eq5'",
        }
    }

    pub fn derivative_form(self) -> Option<DerivativeForm> {
        match self {
            IdentityId::D2 => Some(DerivativeForm::YAtOneZero),
            IdentityId::D3 => Some(DerivativeForm::YAtOneOne),
            IdentityId::D4 => Some(DerivativeForm::XAtOneOne),
            IdentityId::D5 => Some(DerivativeForm::MixedAtOneOne),
            _ => None,
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One evaluated instance of an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportRow {
    pub r: usize,
    pub t: Option<usize>,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl ReportRow {
    pub fn residual(&self) -> Rational {
        &self.lhs - &self.rhs
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub rows: Vec<ReportRow>,
}

impl IdentityReport {
    /// True iff every residual is exactly zero.
    pub fn passed(&self) -> bool {
        self.rows.iter().all(ReportRow::holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportRow> {
        self.rows.iter().filter(|r| !r.holds())
    }

    pub fn row(&self, r: usize, t: Option<usize>) -> Option<&ReportRow> {
        self.rows.iter().find(|row| row.r == r && row.t == t)
    }
}

/// One line per row, then a summary line.
impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            write!(f, "{} r={}", self.id, row.r)?;
            if let Some(t) = row.t {
                write!(f, " t={t}")?;
            }
            writeln!(
                f,
                " lhs={} rhs={} residual={} {}",
                row.lhs,
                row.rhs,
                row.residual(),
                if row.holds() { "ok" } else { "FAIL" }
            )?;
        }
        let bad = self.failures().count();
        if bad == 0 {
            writeln!(f, "{}: pass ({} rows)", self.id, self.rows.len())
        } else {
            writeln!(
                f,
                "{}: FAIL ({} of {} rows nonzero)",
                self.id,
                bad,
                self.rows.len()
            )
        }
    }
}

/// Derivative conditions evaluated on `W_C` and on the transformed dual enumerator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DerivativeForm {
    /// `∂^r/∂y^r` at `(1, 0)`.
    YAtOneZero,
    /// `∂^r/∂y^r` at `(1, 1)`.
    YAtOneOne,
    /// `∂^r/∂x^r` at `(1, 1)`.
    XAtOneOne,
    /// `∂^r/∂x^(r-t)∂y^t` at `(1, 1)`, all `0 <= t <= r`.
    MixedAtOneOne,
}

impl DerivativeForm {
    pub fn id(self) -> IdentityId {
        match self {
            DerivativeForm::YAtOneZero => IdentityId::D2,
            DerivativeForm::YAtOneOne => IdentityId::D3,
            DerivativeForm::XAtOneOne => IdentityId::D4,
            DerivativeForm::MixedAtOneOne => IdentityId::D5,
        }
    }
}

/// A row of Eq. (5) that disagrees with the Eq. (3)/(4) row it should reduce to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionMismatch {
    pub r: usize,
    pub t: usize,
    pub against: IdentityId,
}

/// Weight distributions of a code and its dual, with the code's dimension and field size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributionPair {
    pub code: WeightDistribution,
    pub dual: WeightDistribution,
    pub k: usize,
    pub q: u64,
}

impl DistributionPair {
    pub fn new(
        code: WeightDistribution,
        dual: WeightDistribution,
        k: usize,
        q: u64,
    ) -> Result<Self, IdentityError> {
        check_q(q)?;
        if code.n() != dual.n() {
            return Err(IdentityError::LengthMismatch(code.n(), dual.n()));
        }
        if k > code.n() {
            return Err(IdentityError::Dimension { k, n: code.n() });
        }
        Ok(DistributionPair { code, dual, k, q })
    }

    pub fn n(&self) -> usize {
        self.code.n()
    }

    fn w(&self, j: usize) -> Rational {
        int(self.code.count(j).clone())
    }

    fn wd(&self, j: usize) -> Rational {
        int(self.dual.count(j).clone())
    }

    fn qm1(&self) -> i64 {
        self.q as i64 - 1
    }

    /// Coefficients of `W_C` against the transformed dual enumerator.
    pub fn check_eq1(&self) -> IdentityReport {
        let g = macwilliams_image(&self.dual, self.k, self.q);
        let rows = (0..=self.n())
            .map(|r| ReportRow {
                r,
                t: None,
                lhs: self.w(r),
                rhs: g.coeff(r as u32).clone(),
            })
            .collect();
        IdentityReport {
            id: IdentityId::Eq1,
            rows,
        }
    }

    /// `W_C^r = q^(k-n) Σ_j W_⊥^j K_r(j)`.
    pub fn check_eq2(&self) -> IdentityReport {
        let n = self.n();
        let scale = q_pow(self.q, self.k as i64 - n as i64);
        let rows = (0..=n)
            .map(|r| {
                let sum: Rational = (0..=n)
                    .map(|j| self.wd(j) * int(krawtchouk_unchecked(r, j, n, self.q)))
                    .sum();
                ReportRow {
                    r,
                    t: None,
                    lhs: self.w(r),
                    rhs: &scale * sum,
                }
            })
            .collect();
        IdentityReport {
            id: IdentityId::Eq2,
            rows,
        }
    }

    /// `Σ_j C(j,r) W_C^j = q^(k-r) Σ_{j<=r} (-1)^j (q-1)^(r-j) C(n-j, r-j) W_⊥^j`.
    pub fn check_eq3(&self) -> IdentityReport {
        let n = self.n() as i64;
        let rows = (0..=n)
            .map(|r| {
                let lhs: Rational = (0..=n)
                    .map(|j| int(binomial(j, r)) * self.w(j as usize))
                    .sum();
                let sum: Rational = (0..=r)
                    .map(|j| {
                        let sign = if j % 2 == 0 { 1 } else { -1 };
                        int(sign
                            * signed_pow(self.qm1(), (r - j) as usize)
                            * binomial(n - j, r - j))
                            * self.wd(j as usize)
                    })
                    .sum();
                ReportRow {
                    r: r as usize,
                    t: None,
                    lhs,
                    rhs: q_pow(self.q, self.k as i64 - r) * sum,
                }
            })
            .collect();
        IdentityReport {
            id: IdentityId::Eq3,
            rows,
        }
    }

    /// `Σ_j C(n-j, r) W_C^j = q^(k-r) Σ_{j<=r} C(n-j, r-j) W_⊥^j`.
    pub fn check_eq4(&self) -> IdentityReport {
        let n = self.n() as i64;
        let rows = (0..=n)
            .map(|r| {
                let lhs: Rational = (0..=n)
                    .map(|j| int(binomial(n - j, r)) * self.w(j as usize))
                    .sum();
                let sum: Rational = (0..=r)
                    .map(|j| int(binomial(n - j, r - j)) * self.wd(j as usize))
                    .sum();
                ReportRow {
                    r: r as usize,
                    t: None,
                    lhs,
                    rhs: q_pow(self.q, self.k as i64 - r) * sum,
                }
            })
            .collect();
        IdentityReport {
            id: IdentityId::Eq4,
            rows,
        }
    }

    /// The two-parameter moment identity over the full triangle `0 <= t <= r <= n`:
    /// `Σ_j C(j,t) C(n-j,r-t) W_C^j =
    ///  q^(k-r) Σ_{i<=t} (-1)^i (q-1)^(t-i) Σ_{j<=r} C(n-j,r-j) C(j,i) C(r-j,t-i) W_⊥^j`.
    pub fn check_eq5(&self) -> IdentityReport {
        let n = self.n() as i64;
        let mut rows = Vec::new();
        for r in 0..=n {
            for t in 0..=r {
                let lhs: Rational = (0..=n)
                    .map(|j| int(binomial(j, t) * binomial(n - j, r - t)) * self.w(j as usize))
                    .sum();
                let sum: Rational = (0..=t)
                    .map(|i| {
                        let sign = if i % 2 == 0 { 1 } else { -1 };
                        let inner: Rational = (0..=r)
                            .map(|j| {
                                int(binomial(n - j, r - j)
                                    * binomial(j, i)
                                    * binomial(r - j, t - i))
                                    * self.wd(j as usize)
                            })
                            .sum();
                        int(sign * signed_pow(self.qm1(), (t - i) as usize)) * inner
                    })
                    .sum();
                rows.push(ReportRow {
                    r: r as usize,
                    t: Some(t as usize),
                    lhs,
                    rhs: q_pow(self.q, self.k as i64 - r) * sum,
                });
            }
        }
        IdentityReport {
            id: IdentityId::Eq5,
            rows,
        }
    }

    /// Rows of Eq. (5) at `t = 0` must equal Eq. (4) and at `t = r` must equal
    /// Eq. (3), both sides value for value. Returns every disagreement.
    pub fn eq5_reduction_mismatches(&self) -> Vec<ReductionMismatch> {
        let (eq3, eq4, eq5) = (self.check_eq3(), self.check_eq4(), self.check_eq5());
        let same = |a: &ReportRow, b: Option<&ReportRow>| {
            b.is_some_and(|b| a.lhs == b.lhs && a.rhs == b.rhs)
        };
        let mut out = Vec::new();
        for r in 0..=self.n() {
            let at_zero = eq5.row(r, Some(0)).expect("t=0 row exists");
            if !same(at_zero, eq4.row(r, None)) {
                out.push(ReductionMismatch {
                    r,
                    t: 0,
                    against: IdentityId::Eq4,
                });
            }
            let at_r = eq5.row(r, Some(r)).expect("t=r row exists");
            if !same(at_r, eq3.row(r, None)) {
                out.push(ReductionMismatch {
                    r,
                    t: r,
                    against: IdentityId::Eq3,
                });
            }
        }
        out
    }

    /// Evaluates one derivative condition on `f = W_C` and
    /// `g = q^(k-n) W_⊥(x + (q-1)y, x - y)` using symbolic differentiation.
    pub fn check_derivative_form(&self, form: DerivativeForm) -> IdentityReport {
        let f = self.code.enumerator_poly().to_poly();
        let g = macwilliams_image(&self.dual, self.k, self.q).to_poly();
        let one = rat(1);
        let zero = rat(0);
        let mut rows = Vec::new();
        let n = self.n() as u32;
        let mut push = |r: u32, t: Option<u32>, dx: u32, dy: u32, at: (&Rational, &Rational)| {
            rows.push(ReportRow {
                r: r as usize,
                t: t.map(|t| t as usize),
                lhs: f.mixed_partial(dx, dy).eval(at.0, at.1),
                rhs: g.mixed_partial(dx, dy).eval(at.0, at.1),
            });
        };
        for r in 0..=n {
            match form {
                DerivativeForm::YAtOneZero => push(r, None, 0, r, (&one, &zero)),
                DerivativeForm::YAtOneOne => push(r, None, 0, r, (&one, &one)),
                DerivativeForm::XAtOneOne => push(r, None, r, 0, (&one, &one)),
                DerivativeForm::MixedAtOneOne => {
                    for t in 0..=r {
                        push(r, Some(t), r - t, t, (&one, &one));
                    }
                }
            }
        }
        IdentityReport {
            id: form.id(),
            rows,
        }
    }

    pub fn check(&self, id: IdentityId) -> IdentityReport {
        match id {
            IdentityId::Eq1 => self.check_eq1(),
            IdentityId::Eq2 => self.check_eq2(),
            IdentityId::Eq3 => self.check_eq3(),
            IdentityId::Eq4 => self.check_eq4(),
            IdentityId::Eq5 => self.check_eq5(),
            other => self.check_derivative_form(other.derivative_form().expect("derivative id")),
        }
    }

    pub fn check_all(&self) -> Vec<IdentityReport> {
        IdentityId::ALL.iter().map(|&id| self.check(id)).collect()
    }
}

/// Which variable a derivative is taken with respect to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variable {
    X,
    Y,
}

/// `coeff · X^x_exp · Y^y_exp` with `X = x + (q-1)y`, `Y = x - y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct XYTerm {
    pub coeff: Rational,
    pub x_exp: u32,
    pub y_exp: u32,
}

/// A formal sum of [`XYTerm`]s; exponent pairs are unique and coefficients nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct XYTermSum {
    q: u64,
    terms: Vec<XYTerm>,
}

impl XYTermSum {
    /// Merges duplicate exponent pairs and drops zero coefficients.
    pub fn new(q: u64, terms: impl IntoIterator<Item = XYTerm>) -> Self {
        let mut merged: Vec<XYTerm> = Vec::new();
        for term in terms {
            match merged
                .iter_mut()
                .find(|t| t.x_exp == term.x_exp && t.y_exp == term.y_exp)
            {
                Some(existing) => existing.coeff += term.coeff,
                None => merged.push(term),
            }
        }
        merged.retain(|t| !t.coeff.is_zero());
        XYTermSum { q, terms: merged }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn terms(&self) -> &[XYTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Expands every `X^a Y^b` into monomials in `x`, `y`.
    pub fn expand_to_xy(&self) -> Poly {
        let (sx, sy) = macwilliams_substitution(self.q);
        self.terms.iter().fold(Poly::zero(), |acc, term| {
            let mono = HomoPoly::monomial(term.x_exp + term.y_exp, term.y_exp, term.coeff.clone());
            &acc + &mono.substitute_linear(&sx, &sy).to_poly()
        })
    }
}

impl fmt::Display for XYTermSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, term) in self.terms.iter().enumerate() {
            let negative = term.coeff.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write!(f, "{}*X^{}*Y^{}", term.coeff.abs(), term.x_exp, term.y_exp)?;
        }
        Ok(())
    }
}

/// Closed-form `l`-th derivative (`l = order`) of `X^s Y^t` with respect to `wrt`:
///
/// * x: `Σ_i l! C(s, l-i) C(t, i) X^(s-l+i) Y^(t-i)`
/// * y: `Σ_i (-1)^i (q-1)^(l-i) l! C(s, l-i) C(t, i) X^(s-l+i) Y^(t-i)`
///
/// Terms whose binomial factors vanish are omitted.
pub fn lemma1_expand(s: u32, t: u32, order: u32, wrt: Variable, q: u64) -> XYTermSum {
    let fact = factorial(order as usize);
    let (s, t, l) = (s as i64, t as i64, order as i64);
    let terms = (0..=l).filter_map(|i| {
        let binoms = binomial(s, l - i) * binomial(t, i);
        if binoms.is_zero() {
            return None;
        }
        let mut coeff = &fact * binoms;
        if wrt == Variable::Y {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            coeff *= sign * signed_pow(q as i64 - 1, (l - i) as usize);
        }
        Some(XYTerm {
            coeff: int(coeff),
            x_exp: (s - l + i) as u32,
            y_exp: (t - i) as u32,
        })
    });
    XYTermSum::new(q, terms)
}

/// Evaluation point at which derivative values pin down a homogeneous polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Anchor {
    /// `(x, y) = (1, 0)`, sampled with y-derivatives.
    OneZero,
    /// `(x, y) = (0, 1)`, sampled with x-derivatives.
    ZeroOne,
    /// `(x, y) = (1, 1)`, sampled with y-derivatives.
    OneOne,
}

impl Anchor {
    pub const ALL: [Anchor; 3] = [Anchor::OneZero, Anchor::ZeroOne, Anchor::OneOne];

    pub fn point(self) -> (Rational, Rational) {
        match self {
            Anchor::OneZero => (rat(1), rat(0)),
            Anchor::ZeroOne => (rat(0), rat(1)),
            Anchor::OneOne => (rat(1), rat(1)),
        }
    }

    /// The variable whose derivatives are sampled at this anchor.
    ///
    /// At `(0, 1)` every y-derivative of a homogeneous polynomial sees only the
    /// `y^n` coefficient, so that anchor is sampled with x-derivatives instead.
    pub fn variable(self) -> Variable {
        match self {
            Anchor::ZeroOne => Variable::X,
            Anchor::OneZero | Anchor::OneOne => Variable::Y,
        }
    }

    /// `values[r]` = r-th derivative of `p` (w.r.t. [`Anchor::variable`]) at the anchor, `r = 0..=n`.
    pub fn sample(self, p: &HomoPoly) -> Vec<Rational> {
        sample_derivatives(p, self.variable(), self)
    }
}

/// r-th derivatives of `p` with respect to `wrt` at `anchor`, for `r = 0..=deg p`.
pub fn sample_derivatives(p: &HomoPoly, wrt: Variable, anchor: Anchor) -> Vec<Rational> {
    let (x0, y0) = anchor.point();
    let mut current = p.to_poly();
    let mut out = Vec::with_capacity(p.degree() as usize + 1);
    for _ in 0..=p.degree() {
        out.push(current.eval(&x0, &y0));
        current = match wrt {
            Variable::X => current.partial_x(),
            Variable::Y => current.partial_y(),
        };
    }
    out
}

/// Recovers the degree-`n` homogeneous polynomial from its sampled derivative values
/// (see [`Anchor::sample`]).
pub fn lemma2_reconstruct(
    n: u32,
    anchor: Anchor,
    values: &[Rational],
) -> Result<HomoPoly, IdentityError> {
    let len = n as usize + 1;
    if values.len() != len {
        return Err(IdentityError::ValueCount {
            expected: len,
            got: values.len(),
        });
    }
    let scaled: Vec<Rational> = values
        .iter()
        .enumerate()
        .map(|(r, v)| v / int(factorial(r)))
        .collect();
    let coeffs = match anchor {
        // r! f_r
        Anchor::OneZero => scaled,
        // r! f_(n-r)
        Anchor::ZeroOne => scaled.into_iter().rev().collect(),
        // r! Σ_{i>=r} C(i, r) f_i, triangular; solve from r = n down.
        Anchor::OneOne => {
            let mut f = vec![Rational::zero(); len];
            for r in (0..len).rev() {
                let tail: Rational = (r + 1..len)
                    .map(|i| int(binomial(i as i64, r as i64)) * &f[i])
                    .sum();
                f[r] = &scaled[r] - tail;
            }
            f
        }
    };
    Ok(HomoPoly::new(coeffs))
}

/// Signed integer view of a rational, if it is one.
pub fn as_integer(v: &Rational) -> Option<BigInt> {
    v.is_integer().then(|| v.to_integer())
}

/// Whether a rational is a nonnegative integer that fits in `u64`.
pub fn as_count(v: &Rational) -> Option<u64> {
    as_integer(v)
        .filter(|i| i.sign() != Sign::Minus)
        .and_then(|i| i.to_u64())
}
