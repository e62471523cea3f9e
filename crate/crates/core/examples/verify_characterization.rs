//! Compare the six-condition checker with the brute-force oracle on every
//! graphic sequence of each length up to 8.

use potentially_bowtie::verify_characterization;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!(
        "{:>2} {:>8} {:>8} {:>10}",
        "n", "graphic", "accepted", "mismatches"
    );
    for n in 5..=8 {
        let s = verify_characterization(n)?;
        println!(
            "{:>2} {:>8} {:>8} {:>10}",
            n,
            s.sequences_tested,
            s.potentially_count,
            s.mismatches.len()
        );
        for m in &s.mismatches {
            println!(
                "   {}: checker {} oracle {}",
                m.sequence, m.checker, m.oracle
            );
        }
    }
    Ok(())
}
