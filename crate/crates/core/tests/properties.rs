//! Randomized algebraic invariants, checked exactly.

mod common;

use macwilliams::identities::{binomial, macwilliams_substitution};
use macwilliams::poly::{rat, ratio};
use macwilliams::{
    krawtchouk, transform_eq1, transform_eq2, FiniteField, HomoPoly, LinearCode, Poly, Rational,
    DEFAULT_ENUM_CAP,
};
use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=9).prop_map(|(n, d)| ratio(n, d))
}

fn homo_poly(max_degree: usize) -> impl Strategy<Value = HomoPoly> {
    prop::collection::vec(rational(), 1..=max_degree + 1).prop_map(HomoPoly::new)
}

/// A random code whose codebook and dual codebook are both enumerable.
fn code() -> impl Strategy<Value = LinearCode> {
    any::<u64>().prop_map(|seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (q, n, k) = common::random_parameters(&mut rng);
        let field = FiniteField::with_order(q).unwrap();
        common::random_code(&mut rng, &field, n, k)
    })
}

fn field_order() -> impl Strategy<Value = u64> {
    prop::sample::select(common::FIELD_ORDERS.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn identity_substitution_is_trivial(p in homo_poly(10)) {
        let x = (rat(1), rat(0));
        let y = (rat(0), rat(1));
        prop_assert_eq!(p.substitute_linear(&x, &y), p);
    }

    #[test]
    fn macwilliams_substitution_squares_to_q(p in homo_poly(10), q in field_order()) {
        // The matrix [[1, q-1], [1, -1]] squares to q times the identity.
        let (sx, sy) = macwilliams_substitution(q);
        let twice = p.substitute_linear(&sx, &sy).substitute_linear(&sx, &sy);
        let q_pow = Rational::from_integer(BigInt::from(q).pow(p.degree()));
        prop_assert_eq!(twice, p.scale(&q_pow));
    }

    #[test]
    fn substitution_commutes_with_evaluation(
        p in homo_poly(8), q in field_order(), x0 in rational(), y0 in rational()
    ) {
        let (sx, sy) = macwilliams_substitution(q);
        let qm1 = rat(q as i64 - 1);
        let direct = p.eval(&(&x0 + &qm1 * &y0), &(&x0 - &y0));
        prop_assert_eq!(p.substitute_linear(&sx, &sy).eval(&x0, &y0), direct);
    }

    #[test]
    fn euler_identity(p in homo_poly(10)) {
        let x = Poly::monomial(rat(1), 1, 0);
        let y = Poly::monomial(rat(1), 0, 1);
        let lhs = &(&x * &p.partial_x()) + &(&y * &p.partial_y());
        let d = rat(p.degree() as i64);
        prop_assert_eq!(lhs, p.to_poly().scale(&d));
    }

    #[test]
    fn mixed_partials_commute(p in homo_poly(10), a in 0u32..4, b in 0u32..4) {
        let poly = p.to_poly();
        let mut xy = poly.clone();
        for _ in 0..a { xy = xy.partial_x(); }
        for _ in 0..b { xy = xy.partial_y(); }
        let mut yx = poly;
        for _ in 0..b { yx = yx.partial_y(); }
        for _ in 0..a { yx = yx.partial_x(); }
        prop_assert_eq!(&xy, &yx);
        prop_assert_eq!(p.mixed_partial(a, b), xy);
    }

    #[test]
    fn product_degree_adds(p in homo_poly(6), r in homo_poly(6)) {
        let prod = &p * &r;
        prop_assert_eq!(prod.degree(), p.degree() + r.degree());
        let (x0, y0) = (ratio(3, 2), ratio(-5, 7));
        prop_assert_eq!(prod.eval(&x0, &y0), p.eval(&x0, &y0) * r.eval(&x0, &y0));
    }

    #[test]
    fn dual_dimensions_and_orthogonality(c in code()) {
        let dual = c.dual();
        prop_assert_eq!(c.k() + dual.k(), c.n());
        prop_assert!(c.generator().is_orthogonal_to(dual.generator()).unwrap());
        prop_assert!(dual.dual().generator().same_row_space(c.generator()));
    }

    #[test]
    fn weight_distribution_basics(c in code()) {
        let w = c.weight_distribution(DEFAULT_ENUM_CAP).unwrap();
        let size = BigUint::from(c.q()).pow(c.k() as u32);
        prop_assert_eq!(w.counts()[0].clone(), BigUint::from(1u32));
        prop_assert_eq!(w.total(), size.clone());
        let at_one = w.enumerator_poly().eval(&rat(1), &rat(1));
        prop_assert_eq!(at_one, Rational::from_integer(BigInt::from(size)));
        // Nonzero counts come in multiples of q - 1 (scalar multiples of a word).
        let unit = BigUint::from(c.q() - 1);
        for count in &w.counts()[1..] {
            prop_assert_eq!(count % &unit, BigUint::from(0u32));
        }
    }

    #[test]
    fn transforms_agree_and_invert(c in code()) {
        let q = c.q() as u64;
        let w = c.weight_distribution(DEFAULT_ENUM_CAP).unwrap();
        let w_dual = c.dual().weight_distribution(DEFAULT_ENUM_CAP).unwrap();
        let via1 = transform_eq1(&w_dual, c.k(), q).unwrap();
        let via2 = transform_eq2(&w_dual, c.k(), q).unwrap();
        prop_assert_eq!(&via1, &w);
        prop_assert_eq!(&via2, &w);
        prop_assert_eq!(transform_eq2(&via1, c.n() - c.k(), q).unwrap(), w_dual);
    }

    #[test]
    fn krawtchouk_orthogonality(n in 0usize..9, q in 2u64..8, r in 0usize..9, s in 0usize..9) {
        prop_assume!(r <= n && s <= n);
        let qm1 = BigInt::from(q - 1);
        let sum: BigInt = (0..=n)
            .map(|j| {
                binomial(n as i64, j as i64)
                    * qm1.pow(j as u32)
                    * krawtchouk(r, j, n, q).unwrap()
                    * krawtchouk(s, j, n, q).unwrap()
            })
            .sum();
        let expected = if r == s {
            BigInt::from(q).pow(n as u32) * qm1.pow(r as u32) * binomial(n as i64, r as i64)
        } else {
            BigInt::from(0)
        };
        prop_assert_eq!(sum, expected);
    }
}
