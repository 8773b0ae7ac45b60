//! Exact weight enumerators of linear codes over GF(q), the MacWilliams
//! transform, and checkers for its equivalent forms.
//!
//! Everything on the identity side runs in exact rational arithmetic: a check
//! passes only when its residual is identically zero.

pub mod cli;
pub mod codes;
pub mod gf;
pub mod identities;
pub mod linalg;
pub mod poly;

pub use codes::{CodeError, LinearCode, WeightDistribution, DEFAULT_ENUM_CAP};
pub use gf::{FieldElement, FiniteField, GfError};
pub use identities::{
    krawtchouk, lemma1_expand, lemma2_reconstruct, transform_eq1, transform_eq2, Anchor,
    DerivativeForm, DistributionPair, IdentityError, IdentityId, IdentityReport, Variable,
    XYTermSum,
};
pub use linalg::{LinalgError, MatrixGF};
pub use poly::{HomoPoly, Poly, Rational};
