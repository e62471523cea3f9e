//! The six-condition test for potentially (K5-C4)-graphic sequences, and the
//! closed form of sigma(K5-C4, n).
//!
//! A graphic sequence `(d_1,...,d_n)` with `n >= 5` is potentially
//! (K5-C4)-graphic iff all of:
//!
//! 1. `d_1 >= 4`
//! 2. `d_5 >= 2`
//! 3. for `n >= 6`, it is not `((n-2)^2, 2^(n-2))`
//! 4. it is not `(n-k, k+i, 2^i, 1^(n-i-2))` for `1 <= k <= floor((n-1)/2) - 1`
//!    and `3 <= i <= n-2k`
//! 5. for `n = 6`, it is not `(4, 2^5)`
//! 6. for `n = 7`, it is not `(4, 2^6)`

use std::fmt;

use crate::error::{Error, Result};
use crate::seqcore::{is_graphic, DegreeSequence};

/// Why a sequence is not potentially (K5-C4)-graphic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Failure {
    NotGraphic,
    /// Fewer than five terms.
    TooShort,
    Cond1,
    Cond2,
    Cond3,
    Cond4 {
        k: usize,
        i: usize,
    },
    Cond5,
    Cond6,
}

impl Failure {
    /// The numbered condition, if this is one of (1)-(6).
    pub fn condition(&self) -> Option<u8> {
        match self {
            Failure::Cond1 => Some(1),
            Failure::Cond2 => Some(2),
            Failure::Cond3 => Some(3),
            Failure::Cond4 { .. } => Some(4),
            Failure::Cond5 => Some(5),
            Failure::Cond6 => Some(6),
            Failure::NotGraphic | Failure::TooShort => None,
        }
    }

    /// Stable machine-readable token.
    pub fn code(&self) -> String {
        match self {
            Failure::NotGraphic => "not-graphic".into(),
            Failure::TooShort => "too-short".into(),
            Failure::Cond4 { k, i } => format!("cond4(k={k},i={i})"),
            other => format!("cond{}", other.condition().unwrap_or(0)),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::NotGraphic => f.write_str("not graphic"),
            Failure::TooShort => f.write_str("fewer than 5 terms"),
            Failure::Cond4 { k, i } => write!(f, "condition 4, k={k}, i={i}"),
            other => write!(f, "condition {}", other.condition().unwrap_or(0)),
        }
    }
}

/// Verdict of [`check_potentially`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckReport {
    pub graphic: bool,
    pub potentially: bool,
    /// The first failed check, `None` when the sequence is accepted.
    pub failure: Option<Failure>,
}

/// Condition (3): `n >= 6` and the sequence is exactly `((n-2)^2, 2^(n-2))`.
pub fn matches_cond3(seq: &DegreeSequence) -> bool {
    let n = seq.len();
    if n < 6 {
        return false;
    }
    let top = (n - 2) as u32;
    let t = seq.terms();
    t[0] == top && t[1] == top && t[2..].iter().all(|&d| d == 2)
}

/// Condition (4): the `(k, i)` with `seq == (n-k, k+i, 2^i, 1^(n-i-2))`.
///
/// `d_1` fixes `k` and `d_2` then fixes `i`, so at most one pair matches.
pub fn matches_cond4(seq: &DegreeSequence) -> Option<(usize, usize)> {
    let n = seq.len();
    if n < 5 {
        return None;
    }
    let t = seq.terms();
    let k = n.checked_sub(t[0] as usize)?;
    let i = (t[1] as usize).checked_sub(k)?;
    let k_max = ((n - 1) / 2).saturating_sub(1);
    if k < 1 || k > k_max || i < 3 || i + 2 * k > n {
        return None;
    }
    let twos = &t[2..2 + i];
    let ones = &t[2 + i..];
    (twos.iter().all(|&d| d == 2) && ones.iter().all(|&d| d == 1)).then_some((k, i))
}

fn is_four_then_twos(seq: &DegreeSequence, n: usize) -> bool {
    seq.len() == n && seq.terms()[0] == 4 && seq.terms()[1..].iter().all(|&d| d == 2)
}

/// Decides whether `seq` is potentially (K5-C4)-graphic. Checks run in the
/// order graphic, length, (1), (2), (3), (4), (5), (6); the first failure
/// is reported.
pub fn check_potentially(seq: &DegreeSequence) -> CheckReport {
    let graphic = is_graphic(seq);
    let failure = if !graphic {
        Some(Failure::NotGraphic)
    } else if seq.len() < 5 {
        Some(Failure::TooShort)
    } else if seq.terms()[0] < 4 {
        Some(Failure::Cond1)
    } else if seq.terms()[4] < 2 {
        Some(Failure::Cond2)
    } else if matches_cond3(seq) {
        Some(Failure::Cond3)
    } else if let Some((k, i)) = matches_cond4(seq) {
        Some(Failure::Cond4 { k, i })
    } else if is_four_then_twos(seq, 6) {
        Some(Failure::Cond5)
    } else if is_four_then_twos(seq, 7) {
        Some(Failure::Cond6)
    } else {
        None
    };
    CheckReport {
        graphic,
        potentially: failure.is_none(),
        failure,
    }
}

fn require_domain(n: usize) -> Result<()> {
    if n < 5 {
        return Err(Error::Domain {
            n,
            min: 5,
            max: usize::MAX,
        });
    }
    Ok(())
}

/// sigma(K5-C4, n) = 4n - 4.
pub fn sigma_closed_form(n: usize) -> Result<u64> {
    require_domain(n)?;
    Ok(4 * n as u64 - 4)
}

/// `((n-1)^2, 2^(n-2))`: graphic, sum `4n-6`, rejected by condition (4)
/// with `k = 1`, `i = n-2`.
pub fn sigma_witness(n: usize) -> Result<DegreeSequence> {
    require_domain(n)?;
    DegreeSequence::from_runs(&[((n - 1) as u32, 2), (2, n - 2)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seqcore::{parse_sequence, sigma};

    fn seq(s: &str) -> DegreeSequence {
        parse_sequence(s).unwrap()
    }

    /// Literal enumeration of every `(k, i)` in range.
    fn cond4_by_enumeration(s: &DegreeSequence) -> Option<(usize, usize)> {
        let n = s.len();
        let k_max = ((n as i64 - 1) / 2 - 1).max(0) as usize;
        for k in 1..=k_max {
            for i in 3..=n.saturating_sub(2 * k) {
                let mut pattern = vec![(n - k) as u32, (k + i) as u32];
                pattern.extend(std::iter::repeat_n(2, i));
                pattern.extend(std::iter::repeat_n(1, n - i - 2));
                if pattern == s.terms() {
                    return Some((k, i));
                }
            }
        }
        None
    }

    #[test]
    fn cond3_examples() {
        assert!(matches_cond3(&seq("4^2,2^4")));
        assert!(!matches_cond3(&seq("4^2,2^3")));
        assert!(matches_cond3(&seq("5^2,2^5")));
    }

    #[test]
    fn cond4_examples() {
        assert_eq!(matches_cond4(&seq("4^2,2^3")), Some((1, 3)));
        assert_eq!(matches_cond4(&seq("5,4,2^3,1")), Some((1, 3)));
        assert_eq!(matches_cond4(&seq("4,3^4")), None);
    }

    #[test]
    fn cond4_matches_enumeration() {
        for n in 5..=14usize {
            for k in 0..n {
                for i in 0..=n {
                    if n < k + 1 || n < i + 2 || k + i == 0 {
                        continue;
                    }
                    let mut terms = vec![(n - k) as u32, (k + i) as u32];
                    terms.extend(std::iter::repeat_n(2, i));
                    terms.extend(std::iter::repeat_n(1, n - i - 2));
                    let Ok(s) = DegreeSequence::new(terms) else {
                        continue;
                    };
                    assert_eq!(matches_cond4(&s), cond4_by_enumeration(&s), "{s}");
                }
            }
        }
    }

    #[test]
    fn check_examples() {
        assert!(check_potentially(&seq("4,3^4")).potentially);
        assert_eq!(
            check_potentially(&seq("4,2^5")).failure,
            Some(Failure::Cond5)
        );
        assert_eq!(
            check_potentially(&seq("3,2^3,1")).failure,
            Some(Failure::Cond1)
        );
        assert_eq!(
            check_potentially(&seq("4,2^6")).failure,
            Some(Failure::Cond6)
        );
        assert_eq!(
            check_potentially(&seq("4^2,2^3")).failure,
            Some(Failure::Cond4 { k: 1, i: 3 })
        );
        assert_eq!(
            check_potentially(&seq("4^2,2^4")).failure,
            Some(Failure::Cond3)
        );
        assert_eq!(
            check_potentially(&seq("3,3,1,1")).failure,
            Some(Failure::NotGraphic)
        );
        assert_eq!(
            check_potentially(&seq("2^3")).failure,
            Some(Failure::TooShort)
        );
        assert_eq!(
            check_potentially(&seq("4,1^4")).failure,
            Some(Failure::Cond2)
        );
    }

    #[test]
    fn report_invariant() {
        let r = check_potentially(&seq("4,2^4"));
        assert!(r.graphic && r.potentially && r.failure.is_none());
        let r = check_potentially(&seq("5,5"));
        assert!(!r.graphic && !r.potentially);
    }

    #[test]
    fn closed_form() {
        assert_eq!(sigma_closed_form(5).unwrap(), 16);
        assert_eq!(sigma_closed_form(6).unwrap(), 20);
        assert_eq!(sigma_closed_form(10).unwrap(), 36);
        assert!(matches!(
            sigma_closed_form(4),
            Err(Error::Domain { n: 4, .. })
        ));
    }

    #[test]
    fn witness() {
        assert_eq!(sigma_witness(5).unwrap().terms(), &[4, 4, 2, 2, 2]);
        assert_eq!(sigma_witness(6).unwrap().terms(), &[5, 5, 2, 2, 2, 2]);
        let w7 = sigma_witness(7).unwrap();
        assert_eq!(w7.terms(), &[6, 6, 2, 2, 2, 2, 2]);
        assert_eq!(sigma(&w7), 22);
        assert!(sigma_witness(3).is_err());
        for n in 5..=12 {
            let w = sigma_witness(n).unwrap();
            let r = check_potentially(&w);
            assert!(r.graphic);
            assert_eq!(r.failure, Some(Failure::Cond4 { k: 1, i: n - 2 }));
        }
    }

    #[test]
    fn failure_rendering() {
        assert_eq!(
            Failure::Cond4 { k: 1, i: 3 }.to_string(),
            "condition 4, k=1, i=3"
        );
        assert_eq!(Failure::Cond5.to_string(), "condition 5");
        assert_eq!(Failure::Cond4 { k: 2, i: 3 }.code(), "cond4(k=2,i=3)");
        assert_eq!(Failure::Cond1.code(), "cond1");
    }
}
