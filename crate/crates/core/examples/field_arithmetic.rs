//! Arithmetic in GF(8) and GF(9): tables, inverses and the Frobenius map.
//!
//! cargo run --example field_arithmetic

use macwilliams::FiniteField;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // GF(8) = GF(2)[t] / (t^3 + t + 1); elements are coefficient vectors packed base 2.
    let gf8 = FiniteField::new(2, 3, Some(&[1, 1, 0, 1]))?;
    println!("{gf8}");
    let t = gf8.element(2)?;
    for e in 0..8 {
        println!(
            "t^{e} = {} (coefficients {:?})",
            t.pow(e),
            t.pow(e).coefficients()
        );
    }

    println!("multiplication table of {gf8}:");
    for a in gf8.elements() {
        let row: Vec<String> = gf8
            .elements()
            .map(|b| (a.clone() * b).to_string())
            .collect();
        println!("  {}", row.join(" "));
    }

    // GF(9) from its built-in modulus; every nonzero element has an inverse.
    let gf9 = FiniteField::with_order(9)?;
    println!("{gf9}, modulus {:?}", gf9.modulus());
    for a in gf9.elements().filter(|a| !a.is_zero()) {
        let inv = a.inv()?;
        println!("  {a} * {inv} = {}", a.clone() * inv.clone());
    }

    // Frobenius x -> x^3 is additive in characteristic 3.
    let (a, b) = (gf9.element(4)?, gf9.element(7)?);
    let lhs = (a.clone() + b.clone()).pow(3);
    let rhs = a.pow(3) + b.pow(3);
    println!("(a+b)^3 = {lhs}, a^3 + b^3 = {rhs}");

    // A reducible modulus is rejected.
    match FiniteField::new(2, 2, Some(&[1, 0, 1])) {
        Ok(_) => println!("unexpected: t^2 + 1 accepted"),
        Err(e) => println!("t^2 + 1 over GF(2): {e}"),
    }
    Ok(())
}
