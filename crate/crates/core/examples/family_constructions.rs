//! Direct constructions for the families whose lay-off leaves the accepted
//! set, one instance of each.

use potentially_bowtie::graphkit::degree_sequence;
use potentially_bowtie::{construct_family, contains_bowtie, FamilyPattern};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    use FamilyPattern::*;
    let patterns = [
        ThreeFoursThrees { n: 13 },
        TwoFoursThrees { n: 12 },
        OneFourThrees { n: 11 },
        TwoFoursThreesTwos { a: 4, b: 5 },
        OneFourThreesTwos { a: 6, b: 3 },
        OneFourThreesTwosOnes { a: 3, b: 4, c: 3 },
        OneFourThreesOnes { a: 5, c: 3 },
        NearStarTail { n: 12 },
        TwoFoursTwos { n: 11 },
        OneFourTwos { n: 12 },
        OneFourTwosOnes { a: 6, c: 4 },
    ];
    for p in patterns {
        let g = construct_family(&p)?;
        let w = contains_bowtie(&g).expect("constructions contain a bowtie");
        println!(
            "{:<34} {:<22} {:>2} edges, center {}",
            p.to_string(),
            degree_sequence(&g)?,
            g.edge_count(),
            w.center
        );
    }
    Ok(())
}
