//! Empirical sigma(K5-C4, n) next to 4n-4.

use potentially_bowtie::{sigma, sigma_closed_form, sigma_empirical};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 5..=8 {
        let r = sigma_empirical(n)?;
        println!(
            "n={n}  empirical {:>2}  4n-4 {:>2}  largest rejected {} (sum {})",
            r.bound,
            sigma_closed_form(n)?,
            r.witness,
            sigma(&r.witness)
        );
    }
    Ok(())
}
