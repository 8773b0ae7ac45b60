//! Row reduction, nullspaces and dual codes over GF(2) and GF(4).
//!
//! cargo run --example dual_codes

use macwilliams::{FiniteField, LinearCode, MatrixGF};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let hamming = LinearCode::hamming74();
    println!("Hamming [7,4] generator:\n{}", hamming.generator());
    let rref = hamming.generator().rref();
    println!("rank {} pivots {:?}", rref.rank, rref.pivots);

    let dual = hamming.dual();
    println!(
        "dual [{}, {}] generator:\n{}",
        dual.n(),
        dual.k(),
        dual.generator()
    );
    println!(
        "orthogonal: {}, double dual spans the original: {}",
        hamming.generator().is_orthogonal_to(dual.generator())?,
        dual.dual().generator().same_row_space(hamming.generator()),
    );

    // A [3,2] code over GF(4); inner products use field arithmetic.
    let gf4 = FiniteField::with_order(4)?;
    let code = LinearCode::new(&gf4, 3, &[[1, 0, 2], [0, 1, 3]])?;
    let dual = code.dual();
    println!(
        "GF(4) code:\n{}dual:\n{}",
        code.generator(),
        dual.generator()
    );
    println!(
        "inner products {:?}",
        code.generator().inner_products(dual.generator())?
    );

    // Dependent rows are rejected when building a code.
    let dependent = MatrixGF::from_rows(&gf4, 3, &[[1, 2, 3], [2, 3, 1]])?;
    println!("rank of dependent pair: {}", dependent.rank());
    match LinearCode::from_generator(dependent) {
        Ok(_) => println!("unexpected: dependent generator accepted"),
        Err(e) => println!("from_generator: {e}"),
    }
    Ok(())
}
