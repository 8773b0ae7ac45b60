//! Brute-force weight distributions and enumerator polynomials.
//!
//! cargo run --example weight_enumerators

use macwilliams::{FiniteField, LinearCode, DEFAULT_ENUM_CAP};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let gf2 = FiniteField::prime(2)?;
    let gf3 = FiniteField::prime(3)?;
    let codes = [
        ("repetition [5,1]", LinearCode::repetition(&gf2, 5)?),
        ("even weight [5,4]", LinearCode::zero_sum(&gf2, 5)?),
        ("Hamming [7,4]", LinearCode::hamming74()),
        ("simplex [15,4]", LinearCode::simplex(4)?),
        (
            "ternary [4,2]",
            LinearCode::new(&gf3, 4, &[[1, 0, 1, 1], [0, 1, 1, 2]])?,
        ),
    ];
    for (name, code) in &codes {
        let w = code.weight_distribution(DEFAULT_ENUM_CAP)?;
        println!(
            "{name}: {} codewords, d = {:?}",
            w.total(),
            w.minimum_distance()
        );
        println!("  weights    {w}");
        println!("  enumerator {}", w.enumerator_poly());
    }

    // Enumeration is capped; large codes report an error instead of running away.
    let big = LinearCode::full_space(&gf3, 20)?;
    match big.weight_distribution(1 << 20) {
        Ok(_) => println!("unexpected: GF(3)^20 enumerated"),
        Err(e) => println!("GF(3)^20: {e}"),
    }
    Ok(())
}
