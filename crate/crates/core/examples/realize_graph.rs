//! Build a realization containing K5-C4 and print it as DOT or an edge list.
//!
//!     cargo run --example realize_graph -- "4^3,3^6" dot

use potentially_bowtie::graphkit::{to_dot, to_edge_list};
use potentially_bowtie::{parse_sequence, realize_detailed, RealizationBase};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let seq = parse_sequence(&args.next().unwrap_or_else(|| "4^3,3^6".into()))?;
    let format = args.next().unwrap_or_else(|| "edges".into());

    let r = realize_detailed(&seq)?;
    let w = r.witness;
    eprintln!(
        "{seq}: {} vertices, {} edges, bowtie at {} with wings {:?} {:?}",
        r.graph.vertex_count(),
        r.graph.edge_count(),
        w.center,
        w.wing1,
        w.wing2
    );
    match r.base {
        RealizationBase::Search => {
            eprintln!("base graph found by search, {} lay-offs undone", r.layoffs)
        }
        RealizationBase::Family(f) => {
            eprintln!("base graph from family {f}, {} lay-offs undone", r.layoffs)
        }
    }
    if format == "dot" {
        print!("{}", to_dot(&r.graph));
    } else {
        print!("{}", to_edge_list(&r.graph));
    }
    Ok(())
}
