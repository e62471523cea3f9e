//! Decide sequences given on the command line, or a built-in sample.
//!
//!     cargo run --example check_sequence -- "4,3^4" "4^2,2^3"

use potentially_bowtie::{check_potentially, parse_sequence};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if args.is_empty() {
        ["4,3^4", "4,2^5", "4^2,2^3", "3^2,1^2", "6^2,2^6", "5^3,4^4"]
            .map(String::from)
            .to_vec()
    } else {
        args
    };
    for text in &inputs {
        match parse_sequence(text) {
            Ok(seq) => {
                let report = check_potentially(&seq);
                match report.failure {
                    None => println!("{seq:<16} accepted"),
                    Some(f) => println!("{seq:<16} rejected: {f}"),
                }
            }
            Err(e) => println!("{text:<16} invalid: {e}"),
        }
    }
}
