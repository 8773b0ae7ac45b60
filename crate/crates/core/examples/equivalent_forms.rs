//! Checking every equivalent form of the identity, with exact residuals.
//!
//! cargo run --example equivalent_forms

use macwilliams::{DistributionPair, FiniteField, IdentityId, LinearCode, DEFAULT_ENUM_CAP};

fn pair_for(code: &LinearCode) -> Result<DistributionPair, Box<dyn std::error::Error>> {
    let w = code.weight_distribution(DEFAULT_ENUM_CAP)?;
    let w_dual = code.dual().weight_distribution(DEFAULT_ENUM_CAP)?;
    Ok(DistributionPair::new(w, w_dual, code.k(), code.q() as u64)?)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let gf4 = FiniteField::with_order(4)?;
    let code = LinearCode::new(&gf4, 3, &[[1, 0, 2], [0, 1, 3]])?;
    let pair = pair_for(&code)?;
    println!("GF(4) [3,2]: weights {} dual {}", pair.code, pair.dual);

    // Full report for the binomial-moment form.
    print!("{}", pair.check(IdentityId::Eq3));

    // One summary line per form.
    for report in pair.check_all() {
        println!(
            "{:<5} rows={:<3} passed={}",
            report.id.name(),
            report.rows.len(),
            report.passed()
        );
    }

    // The two-parameter form contains the one-parameter moment forms as its edges.
    println!("edge mismatches: {:?}", pair.eq5_reduction_mismatches());

    // Perturbing a single count is caught.
    let mut bad = pair.code.clone();
    bad.bump(2);
    let broken = DistributionPair::new(bad, pair.dual.clone(), pair.k, pair.q)?;
    for report in broken.check_all() {
        let failures = report.failures().count();
        println!(
            "{:<5} after perturbation: {failures} nonzero residuals",
            report.id.name()
        );
    }
    Ok(())
}
