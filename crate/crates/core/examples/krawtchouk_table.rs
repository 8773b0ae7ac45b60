//! Krawtchouk values and their orthogonality relation.
//!
//! cargo run --example krawtchouk_table

use macwilliams::identities::binomial;
use macwilliams::krawtchouk;
use num_bigint::BigInt;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (n, q) = (6, 3u64);
    println!("K_r(j) for n={n}, q={q}");
    for r in 0..=n {
        let row = (0..=n)
            .map(|j| krawtchouk(r, j, n, q).map(|v| format!("{v:>5}")))
            .collect::<Result<Vec<_>, _>>()?;
        println!("r={r}: {}", row.join(""));
    }

    // sum_j C(n,j) (q-1)^j K_r(j) K_s(j) = q^n (q-1)^r C(n,r) [r = s]
    let qm1 = BigInt::from(q - 1);
    for (r, s) in [(2, 2), (2, 3), (4, 4)] {
        let mut sum = BigInt::from(0);
        for j in 0..=n {
            let weight = binomial(n as i64, j as i64) * qm1.pow(j as u32);
            sum += weight * krawtchouk(r, j, n, q)? * krawtchouk(s, j, n, q)?;
        }
        println!("<K_{r}, K_{s}> = {sum}");
    }
    Ok(())
}
