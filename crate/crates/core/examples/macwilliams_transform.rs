//! Recovering a code's weight distribution from its dual's.
//!
//! cargo run --example macwilliams_transform

use macwilliams::identities::{macwilliams_image, macwilliams_substitution};
use macwilliams::{transform_eq1, transform_eq2, FiniteField, LinearCode, DEFAULT_ENUM_CAP};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let hamming = LinearCode::hamming74();
    let simplex = hamming.dual();
    let w_dual = simplex.weight_distribution(DEFAULT_ENUM_CAP)?;
    println!("simplex enumerator   {}", w_dual.enumerator_poly());

    // Substitute x -> x + (q-1)y, y -> x - y and divide by |C^perp|.
    let (sx, sy) = macwilliams_substitution(2);
    println!(
        "after substitution   {}",
        w_dual.enumerator_poly().substitute_linear(&sx, &sy)
    );
    println!("divided by 2^3       {}", macwilliams_image(&w_dual, 4, 2));

    // The same result through the polynomial route and the Krawtchouk sum.
    println!("polynomial route     {}", transform_eq1(&w_dual, 4, 2)?);
    println!("Krawtchouk route     {}", transform_eq2(&w_dual, 4, 2)?);
    println!(
        "enumerated           {}",
        hamming.weight_distribution(DEFAULT_ENUM_CAP)?
    );

    // Over GF(5): a [6,2] code and back again.
    let gf5 = FiniteField::prime(5)?;
    let code = LinearCode::new(&gf5, 6, &[[1, 0, 1, 2, 3, 4], [0, 1, 1, 1, 1, 1]])?;
    let w = code.weight_distribution(DEFAULT_ENUM_CAP)?;
    let w_dual = code.dual().weight_distribution(DEFAULT_ENUM_CAP)?;
    let there = transform_eq2(&w_dual, code.k(), 5)?;
    let back = transform_eq1(&there, code.n() - code.k(), 5)?;
    println!("GF(5) [6,2]: {w} -> dual {w_dual}");
    println!("  transform of dual {there} (matches: {})", there == w);
    println!("  and back          {back} (matches: {})", back == w_dual);

    // A distribution that no dual code could have is rejected.
    let bogus = macwilliams::WeightDistribution::from_counts(&[1, 3, 0, 0]);
    match transform_eq1(&bogus, 1, 2) {
        Ok(w) => println!("unexpected: {w}"),
        Err(e) => println!("bogus input {bogus}: {e}"),
    }
    Ok(())
}
