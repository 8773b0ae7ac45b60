//! Closed-form derivatives of X^s Y^t and reconstruction from derivative samples.
//!
//! cargo run --example derivative_lemmas

use macwilliams::identities::macwilliams_substitution;
use macwilliams::poly::{rat, ratio};
use macwilliams::{lemma1_expand, lemma2_reconstruct, Anchor, HomoPoly, Variable};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // X = x + 2y, Y = x - y over a ternary alphabet.
    let q = 3;
    let (sx, sy) = macwilliams_substitution(q);
    let (s, t) = (3, 2);
    let base = HomoPoly::monomial(s + t, t, rat(1)).substitute_linear(&sx, &sy);
    println!("X^{s} Y^{t} = {base}");

    for wrt in [Variable::X, Variable::Y] {
        let mut direct = base.to_poly();
        for order in 0..=3 {
            let closed = lemma1_expand(s, t, order, wrt, q);
            println!("d^{order}/d{wrt:?}^{order}: {closed}");
            println!("    expands to {}", closed.expand_to_xy());
            println!(
                "    agrees with direct differentiation: {}",
                closed.expand_to_xy() == direct
            );
            direct = match wrt {
                Variable::X => direct.partial_x(),
                Variable::Y => direct.partial_y(),
            };
        }
    }

    // A degree-5 form is determined by its derivatives at any of the three anchors.
    let p = HomoPoly::new(vec![
        rat(2),
        ratio(-1, 3),
        rat(0),
        rat(7),
        ratio(5, 2),
        rat(-4),
    ]);
    println!("p = {p}");
    for anchor in Anchor::ALL {
        let samples = anchor.sample(&p);
        let back = lemma2_reconstruct(p.degree(), anchor, &samples)?;
        let shown: Vec<String> = samples.iter().map(|v| v.to_string()).collect();
        println!(
            "{anchor:?} ({:?}-derivatives): [{}]",
            anchor.variable(),
            shown.join(", ")
        );
        println!("    reconstructed {back} (exact: {})", back == p);
    }
    Ok(())
}
