//! Walk every labeled realization of a small sequence and count those that
//! contain K5-C4.

use potentially_bowtie::graphkit::{contains_bowtie, enumerate_realizations};
use potentially_bowtie::parse_sequence;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "4^2,3^2,2^3".into());
    let seq = parse_sequence(&text)?;
    let mut total = 0;
    let mut first = None;
    let mut with_bowtie = 0;
    for g in enumerate_realizations(&seq, 0)? {
        total += 1;
        if let Some(w) = contains_bowtie(&g) {
            with_bowtie += 1;
            first.get_or_insert((g, w));
        }
    }
    println!("{seq}: {total} labeled realizations, {with_bowtie} contain K5-C4");
    if let Some((g, w)) = first {
        let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
        println!("first: {}", edges.join(" "));
        println!(
            "witness: center {} wings {:?} {:?}",
            w.center, w.wing1, w.wing2
        );
    }
    Ok(())
}
