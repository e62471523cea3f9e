//! Exhaustive cross-validation of the checker against the brute-force
//! oracle, and the empirical value of sigma(K5-C4, n).

use rayon::prelude::*;

use crate::characterize::check_potentially;
use crate::error::{Error, Result};
use crate::graphkit::{oracle_has_bowtie_realization, ENUMERATION_LIMIT};
use crate::seqcore::{is_graphic, sigma, DegreeSequence};

/// Default upper bound on `n` for oracle-backed runs.
pub const DEFAULT_MAX_N: usize = 8;

/// Nonincreasing sequences of `n` terms in `1..=n-1`, in decreasing
/// lexicographic order.
#[derive(Debug, Clone)]
struct Candidates {
    current: Option<Vec<u32>>,
}

impl Candidates {
    fn new(n: usize) -> Self {
        let current = (n >= 2).then(|| vec![(n - 1) as u32; n]);
        Candidates { current }
    }
}

impl Iterator for Candidates {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let out = self.current.take()?;
        if let Some(j) = out.iter().rposition(|&d| d > 1) {
            let mut succ = out.clone();
            let value = succ[j] - 1;
            succ[j..].fill(value);
            self.current = Some(succ);
        }
        Some(out)
    }
}

/// Every graphic sequence of exactly `n` positive terms, in decreasing
/// lexicographic order.
pub fn enumerate_graphic_sequences(n: usize) -> impl Iterator<Item = DegreeSequence> {
    Candidates::new(n).filter_map(|terms| {
        let even = terms.iter().map(|&d| u64::from(d)).sum::<u64>() % 2 == 0;
        if !even {
            return None;
        }
        let seq = DegreeSequence::new(terms).ok()?;
        is_graphic(&seq).then_some(seq)
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub sequence: DegreeSequence,
    pub checker: bool,
    pub oracle: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationSummary {
    pub n: usize,
    pub sequences_tested: usize,
    pub potentially_count: usize,
    pub mismatches: Vec<Mismatch>,
}

impl VerificationSummary {
    pub fn agrees(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn require_range(n: usize, max: usize) -> Result<()> {
    if n < 5 || n > max {
        return Err(Error::Domain { n, min: 5, max });
    }
    Ok(())
}

fn compare(seq: &DegreeSequence) -> Result<Mismatch> {
    Ok(Mismatch {
        sequence: seq.clone(),
        checker: check_potentially(seq).potentially,
        oracle: oracle_has_bowtie_realization(seq)?,
    })
}

/// Compares the checker with the oracle on every graphic sequence of
/// length `n`, for `5 <= n <= 8`.
pub fn verify_characterization(n: usize) -> Result<VerificationSummary> {
    verify_characterization_up_to(n, DEFAULT_MAX_N)
}

/// As [`verify_characterization`] with a caller-chosen bound (at most 10).
pub fn verify_characterization_up_to(n: usize, max_n: usize) -> Result<VerificationSummary> {
    require_range(n, max_n.min(ENUMERATION_LIMIT))?;
    let seqs: Vec<DegreeSequence> = enumerate_graphic_sequences(n).collect();
    let verdicts: Vec<Mismatch> = seqs.par_iter().map(compare).collect::<Result<_>>()?;
    Ok(VerificationSummary {
        n,
        sequences_tested: verdicts.len(),
        potentially_count: verdicts.iter().filter(|m| m.checker).count(),
        mismatches: verdicts
            .into_iter()
            .filter(|m| m.checker != m.oracle)
            .collect(),
    })
}

/// Empirical sigma(K5-C4, n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaReport {
    pub n: usize,
    /// Smallest even `s` such that every graphic sequence with sum `>= s`
    /// is accepted.
    pub bound: u64,
    /// First rejected sequence (decreasing-lex) with sum `bound - 2`.
    pub witness: DegreeSequence,
    /// Sequences with sum `bound - 2` or `bound` re-checked by the oracle.
    pub boundary_checked: usize,
    pub boundary_mismatches: Vec<Mismatch>,
}

/// Scans all graphic sequences of length `n` (`5 <= n <= 8`) with the
/// checker, then confirms the boundary sums with the oracle.
pub fn sigma_empirical(n: usize) -> Result<SigmaReport> {
    sigma_empirical_up_to(n, DEFAULT_MAX_N)
}

pub fn sigma_empirical_up_to(n: usize, max_n: usize) -> Result<SigmaReport> {
    require_range(n, max_n.min(ENUMERATION_LIMIT))?;
    let seqs: Vec<DegreeSequence> = enumerate_graphic_sequences(n).collect();
    let rejected_max = seqs
        .iter()
        .filter(|s| !check_potentially(s).potentially)
        .map(sigma)
        .max()
        .ok_or(Error::Domain {
            n,
            min: 5,
            max: max_n,
        })?;
    let bound = rejected_max + 2;
    let witness = seqs
        .iter()
        .find(|s| sigma(s) == rejected_max && !check_potentially(s).potentially)
        .cloned()
        .expect("maximum is attained");
    let boundary: Vec<&DegreeSequence> = seqs
        .iter()
        .filter(|s| sigma(s) == rejected_max || sigma(s) == bound)
        .collect();
    let verdicts: Vec<Mismatch> = boundary
        .par_iter()
        .map(|s| compare(s))
        .collect::<Result<_>>()?;
    Ok(SigmaReport {
        n,
        bound,
        witness,
        boundary_checked: verdicts.len(),
        boundary_mismatches: verdicts
            .into_iter()
            .filter(|m| m.checker != m.oracle)
            .collect(),
    })
}
