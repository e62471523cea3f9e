//! Repeatedly lay off the smallest term and show each step.

use potentially_bowtie::{check_potentially, is_graphic, lay_off, parse_sequence};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "5^2,4^4,3^2,2^3".into());
    let mut seq = parse_sequence(&text)?;
    println!(
        "{:<22} graphic={} potentially={}",
        seq,
        is_graphic(&seq),
        check_potentially(&seq).potentially
    );
    while seq.len() > 1 {
        let t = lay_off(&seq)?;
        println!(
            "  remove {} from {:?} -> {:<14} graphic={} potentially={}",
            t.removed_degree,
            t.decremented_positions,
            t.child,
            is_graphic(&t.child),
            check_potentially(&t.child).potentially
        );
        if t.child.is_empty() {
            break;
        }
        seq = t.child;
    }
    Ok(())
}
