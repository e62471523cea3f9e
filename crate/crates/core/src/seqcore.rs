//! Degree sequences, the run-length text format, the lay-off operator and
//! graphicality.
//!
//! Sequences are kept nonincreasing with positive terms. The text format is a
//! comma-separated list of items, each either `d` or `d^y` (`y` copies of
//! `d`), e.g. `4^2,2^3` for `(4,4,2,2,2)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Longest sequence the parser will expand.
pub const MAX_PARSED_TERMS: usize = 1 << 20;

/// A nonincreasing sequence of positive degrees.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence {
    terms: Vec<u32>,
}

impl DegreeSequence {
    /// Builds a sequence from terms in any order. Terms are sorted
    /// nonincreasing; zero terms and empty input are rejected.
    pub fn new(mut terms: Vec<u32>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::Parse("empty sequence".into()));
        }
        if terms.contains(&0) {
            return Err(Error::Parse("degree sequences have positive terms".into()));
        }
        terms.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { terms })
    }

    /// Drops zeros and sorts. May produce the empty sequence, which only
    /// arises as the residual of an all-ones sequence.
    pub(crate) fn from_residual(mut terms: Vec<u32>) -> Self {
        terms.retain(|&d| d > 0);
        terms.sort_unstable_by(|a, b| b.cmp(a));
        Self { terms }
    }

    /// `count` copies of each `(degree, count)` run, in the given order.
    pub fn from_runs(runs: &[(u32, usize)]) -> Result<Self> {
        let terms = runs
            .iter()
            .flat_map(|&(d, y)| std::iter::repeat_n(d, y))
            .collect();
        Self::new(terms)
    }

    pub fn terms(&self) -> &[u32] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `d_i` with 1-based indexing, matching the usual notation.
    pub fn d(&self, i: usize) -> Option<u32> {
        i.checked_sub(1).and_then(|j| self.terms.get(j)).copied()
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.first().copied().unwrap_or(0)
    }

    pub fn min_degree(&self) -> u32 {
        self.terms.last().copied().unwrap_or(0)
    }

    /// Number of terms equal to `degree`.
    pub fn count_of(&self, degree: u32) -> usize {
        self.terms.iter().filter(|&&d| d == degree).count()
    }

    /// Maximal runs `(degree, count)` in descending degree order.
    pub fn runs(&self) -> Vec<(u32, usize)> {
        let mut runs: Vec<(u32, usize)> = Vec::new();
        for &d in &self.terms {
            match runs.last_mut() {
                Some((value, count)) if *value == d => *count += 1,
                _ => runs.push((d, 1)),
            }
        }
        runs
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&format_sequence(self))
    }
}

impl FromStr for DegreeSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_sequence(s)
    }
}

fn parse_positive(token: &str, what: &str, item: &str) -> Result<u64> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("malformed {what} in item {item:?}")));
    }
    let value: u64 = token
        .parse()
        .map_err(|_| Error::Parse(format!("{what} out of range in item {item:?}")))?;
    if value == 0 {
        return Err(Error::Parse(format!(
            "{what} must be positive in item {item:?}"
        )));
    }
    Ok(value)
}

/// Parses run-length text such as `4,3^4` into a sorted sequence.
pub fn parse_sequence(text: &str) -> Result<DegreeSequence> {
    if text.trim().is_empty() {
        return Err(Error::Parse("empty sequence".into()));
    }
    let mut terms = Vec::new();
    for raw in text.split(',') {
        let item = raw.trim();
        if item.is_empty() {
            return Err(Error::Parse("empty item".into()));
        }
        let (degree, count) = match item.split_once('^') {
            Some((d, y)) => (
                parse_positive(d, "degree", item)?,
                parse_positive(y, "run count", item)?,
            ),
            None => (parse_positive(item, "degree", item)?, 1),
        };
        let degree = u32::try_from(degree)
            .map_err(|_| Error::Parse(format!("degree out of range in item {item:?}")))?;
        if terms.len() as u64 + count > MAX_PARSED_TERMS as u64 {
            return Err(Error::Parse(format!(
                "sequence longer than {MAX_PARSED_TERMS} terms"
            )));
        }
        terms.extend(std::iter::repeat_n(degree, count as usize));
    }
    DegreeSequence::new(terms)
}

/// Canonical run-length form: maximal runs, descending, no whitespace.
pub fn format_sequence(seq: &DegreeSequence) -> String {
    seq.runs()
        .into_iter()
        .map(|(d, y)| {
            if y == 1 {
                d.to_string()
            } else {
                format!("{d}^{y}")
            }
        })
        .collect::<Vec<_>>()
        .join(",")
}

/// Sum of the terms.
pub fn sigma(seq: &DegreeSequence) -> u64 {
    seq.terms.iter().map(|&d| u64::from(d)).sum()
}

/// Record of one lay-off step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayoffTrace {
    pub parent: DegreeSequence,
    /// The removed last term `d_n`.
    pub removed_degree: u32,
    /// Indices into the parent (last term removed) that were decremented.
    /// Always `0..removed_degree`.
    pub decremented_positions: Vec<usize>,
    pub child: DegreeSequence,
}

impl LayoffTrace {
    /// Degrees `d_i - 1` the removed vertex's neighbours have in the child.
    pub fn decremented_degrees(&self) -> Vec<u32> {
        self.decremented_positions
            .iter()
            .map(|&i| self.parent.terms[i] - 1)
            .collect()
    }
}

/// Removes the last term `d_n` and decrements the first `d_n` of the rest.
/// Zeros produced by decrementing ones are dropped.
pub fn lay_off(seq: &DegreeSequence) -> Result<LayoffTrace> {
    let n = seq.len();
    let last = seq.min_degree();
    if n == 0 || last as usize > n - 1 {
        return Err(Error::LayoffImpossible {
            degree: last,
            len: n,
        });
    }
    let k = last as usize;
    let mut rest = seq.terms[..n - 1].to_vec();
    for d in &mut rest[..k] {
        *d -= 1;
    }
    Ok(LayoffTrace {
        parent: seq.clone(),
        removed_degree: last,
        decremented_positions: (0..k).collect(),
        child: DegreeSequence::from_residual(rest),
    })
}

/// Graphicality by repeated lay-off. Accepts zeros in `terms` (they are
/// ignored) and any order.
pub(crate) fn terms_are_graphic(terms: &[u32]) -> bool {
    let mut work: Vec<u32> = terms.iter().copied().filter(|&d| d > 0).collect();
    let total: u64 = work.iter().map(|&d| u64::from(d)).sum();
    if total % 2 == 1 {
        return false;
    }
    work.sort_unstable_by(|a, b| b.cmp(a));
    while let Some(last) = work.pop() {
        let k = last as usize;
        if k > work.len() {
            return false;
        }
        for d in &mut work[..k] {
            *d -= 1;
        }
        work.retain(|&d| d > 0);
        work.sort_unstable_by(|a, b| b.cmp(a));
    }
    true
}

/// True iff some simple graph has exactly this degree sequence.
pub fn is_graphic(seq: &DegreeSequence) -> bool {
    let n = seq.len();
    if n > 0 && seq.max_degree() as usize >= n {
        return false;
    }
    terms_are_graphic(&seq.terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(t: &[u32]) -> DegreeSequence {
        DegreeSequence::new(t.to_vec()).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_sequence("4^2,2^3").unwrap().terms(), &[4, 4, 2, 2, 2]);
        assert_eq!(parse_sequence("5").unwrap().terms(), &[5]);
        assert_eq!(parse_sequence("2,4,3").unwrap().terms(), &[4, 3, 2]);
        assert_eq!(
            parse_sequence(" 4 , 3^4 ").unwrap().terms(),
            &[4, 3, 3, 3, 3]
        );
    }

    #[test]
    fn parse_rejects_malformed() {
        for bad in [
            "", " ", "4,,3", "0", "3^0", "-1", "4^", "^2", "a", "4^2^3", "4 ^2", "+4", "4,",
        ] {
            assert!(
                matches!(parse_sequence(bad), Err(Error::Parse(_))),
                "{bad:?} should not parse"
            );
        }
    }

    #[test]
    fn format_examples() {
        assert_eq!(format_sequence(&seq(&[4, 4, 2, 2, 2])), "4^2,2^3");
        assert_eq!(format_sequence(&seq(&[4, 3, 3, 3, 3])), "4,3^4");
        assert_eq!(format_sequence(&seq(&[5])), "5");
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(&seq(&[4, 4, 2, 2, 2])), 14);
        assert_eq!(sigma(&seq(&[5, 5, 2, 2, 2, 2])), 4 * 6 - 6);
        assert_eq!(sigma(&seq(&[4, 2, 2, 2, 2])), 12);
    }

    #[test]
    fn lay_off_examples() {
        let t = lay_off(&seq(&[5, 3, 2, 2, 2, 2, 2])).unwrap();
        assert_eq!(format_sequence(&t.child), "4,2^5");
        assert_eq!(t.removed_degree, 2);
        assert_eq!(t.decremented_positions, vec![0, 1]);

        let t = lay_off(&seq(&[2, 1, 1])).unwrap();
        assert_eq!(t.child.terms(), &[1, 1]);
        assert_eq!(t.removed_degree, 1);

        let t = lay_off(&seq(&[4, 3, 2, 2, 1])).unwrap();
        assert_eq!(t.child.terms(), &[3, 3, 2, 2]);
        assert_eq!(t.decremented_degrees(), vec![3]);
    }

    #[test]
    fn lay_off_impossible() {
        assert!(matches!(
            lay_off(&seq(&[3, 3])),
            Err(Error::LayoffImpossible { degree: 3, len: 2 })
        ));
        assert!(lay_off(&seq(&[1])).is_err());
    }

    #[test]
    fn lay_off_all_ones_drops_zero() {
        let t = lay_off(&seq(&[1, 1])).unwrap();
        assert!(t.child.is_empty());
        let t = lay_off(&seq(&[1, 1, 1, 1])).unwrap();
        assert_eq!(t.child.terms(), &[1, 1]);
    }

    #[test]
    fn graphic_examples() {
        assert!(is_graphic(&seq(&[2, 2, 2])));
        assert!(!is_graphic(&seq(&[3, 3, 1, 1])));
        assert!(is_graphic(&seq(&[4, 4, 2, 2, 2])));
        assert!(!is_graphic(&seq(&[3, 1, 1])));
        assert!(!is_graphic(&seq(&[2, 2, 1])));
        assert!(!is_graphic(&seq(&[1])));
    }

    #[test]
    fn d_is_one_based() {
        let s = seq(&[4, 3, 2]);
        assert_eq!(s.d(1), Some(4));
        assert_eq!(s.d(3), Some(2));
        assert_eq!(s.d(0), None);
        assert_eq!(s.d(4), None);
    }
}
