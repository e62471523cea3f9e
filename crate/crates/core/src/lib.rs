//! Potentially (K5-C4)-graphic degree sequences.
//!
//! K5-C4 is K5 with the edges of a 4-cycle removed: two triangles sharing a
//! vertex. A graphic sequence is potentially (K5-C4)-graphic when some
//! realization contains it as a subgraph. This crate
//!
//! - decides that property with a six-condition test ([`characterize`]),
//! - builds a witnessing realization for every accepted sequence
//!   ([`realizer`]),
//! - and cross-checks both against exhaustive search over labeled graphs,
//!   including the extremal value sigma(K5-C4, n) = 4n - 4 ([`verify`]).
//!
//! ```
//! use potentially_bowtie::{check_potentially, parse_sequence, realize_with_bowtie, contains_bowtie};
//!
//! let seq = parse_sequence("4,3^4").unwrap();
//! assert!(check_potentially(&seq).potentially);
//! let g = realize_with_bowtie(&seq).unwrap();
//! assert!(contains_bowtie(&g).is_some());
//! ```

pub mod characterize;
pub mod cli;
pub mod error;
pub mod graphkit;
pub mod realizer;
pub mod seqcore;
pub mod verify;

pub use characterize::{
    check_potentially, matches_cond3, matches_cond4, sigma_closed_form, sigma_witness, CheckReport,
    Failure,
};
pub use error::{Error, Result};
pub use graphkit::{
    contains_bowtie, degree_sequence, enumerate_realizations, havel_hakimi_realize,
    oracle_has_bowtie_realization, BowtieWitness, SimpleGraph,
};
pub use realizer::{
    construct_family, realize_detailed, realize_with_bowtie, reattach, FamilyPattern, Realization,
    RealizationBase,
};
pub use seqcore::{
    format_sequence, is_graphic, lay_off, parse_sequence, sigma, DegreeSequence, LayoffTrace,
};
pub use verify::{
    enumerate_graphic_sequences, sigma_empirical, verify_characterization, SigmaReport,
    VerificationSummary,
};
