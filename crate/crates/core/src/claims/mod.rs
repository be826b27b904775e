//! Registry of verifiable claims about A000975 and the exhaustive checker
//! for each one.
//!
//! Every claim runs against a [`Subject`]. [`Reference`] is the library
//! itself; [`Mutant`] plants one fault per claim so the checkers can be
//! shown to catch a broken implementation.

mod subject;
mod verifiers;

use std::fmt;
use std::str::FromStr;

pub use subject::{Mutant, Reference, Subject};
pub use verifiers::*;

use crate::error::{domain, Error, Result};
use crate::report::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClaimId {
    /// The five evaluation routes for A(n) agree.
    CharEquiv,
    /// A(n) and n have the same parity.
    Parity,
    /// P(n) = n * 2^k + Rev(n).
    Lemma3_1,
    /// T(n) = P(n)/3 exactly when n is a term of A.
    Theorem3_2,
    /// B(A(k)) is 1 for odd k and 2 for even k.
    Lemma4_1,
    /// B(A(k) + 1) = 0 for k >= 2.
    Lemma4_2,
    /// B(2^k) = 2^k.
    Lemma4_3,
    /// B vanishes on [A(k)+1, 2^k - 1], and these are the record runs.
    Theorem4_4,
    /// B(n) = 0 iff some prefix after the leading 1 has more ones than zeros.
    Lemma4_6,
    /// Zero runs start exactly at 1w1 and 1w10, w a Catalan word.
    Lemma4_7,
    /// The n-th record run has length A(n) and ordinal A155051(n - 1).
    Theorem4_8,
    /// S(n) + S(n+1) = 2^n.
    Lemma5_1,
    /// Based and unbased bubbles of arity n number A(n - 1).
    Theorem5_2,
    /// Partitions and based bubbles correspond one to one.
    Bijection,
    /// Chinese Rings: the state graph is a path; solving takes A(n) moves.
    Occurrence1,
    /// 1^n sits at position A(n) in the reflected Gray code.
    Occurrence2,
    /// n + 2 people split into three affinity groups in A(n) ways.
    Occurrence3,
    /// 2^n - 1 linear AB-strings split into partitions of n+2 and n+1 people.
    Lossers,
}

impl ClaimId {
    pub const ALL: [ClaimId; 18] = [
        ClaimId::CharEquiv,
        ClaimId::Parity,
        ClaimId::Lemma3_1,
        ClaimId::Theorem3_2,
        ClaimId::Lemma4_1,
        ClaimId::Lemma4_2,
        ClaimId::Lemma4_3,
        ClaimId::Theorem4_4,
        ClaimId::Lemma4_6,
        ClaimId::Lemma4_7,
        ClaimId::Theorem4_8,
        ClaimId::Lemma5_1,
        ClaimId::Theorem5_2,
        ClaimId::Bijection,
        ClaimId::Occurrence1,
        ClaimId::Occurrence2,
        ClaimId::Occurrence3,
        ClaimId::Lossers,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::CharEquiv => "char-equiv",
            ClaimId::Parity => "parity",
            ClaimId::Lemma3_1 => "lemma-3-1",
            ClaimId::Theorem3_2 => "theorem-3-2",
            ClaimId::Lemma4_1 => "lemma-4-1",
            ClaimId::Lemma4_2 => "lemma-4-2",
            ClaimId::Lemma4_3 => "lemma-4-3",
            ClaimId::Theorem4_4 => "theorem-4-4",
            ClaimId::Lemma4_6 => "lemma-4-6",
            ClaimId::Lemma4_7 => "lemma-4-7",
            ClaimId::Theorem4_8 => "theorem-4-8",
            ClaimId::Lemma5_1 => "lemma-5-1",
            ClaimId::Theorem5_2 => "theorem-5-2",
            ClaimId::Bijection => "bijection",
            ClaimId::Occurrence1 => "occurrence-1",
            ClaimId::Occurrence2 => "occurrence-2",
            ClaimId::Occurrence3 => "occurrence-3",
            ClaimId::Lossers => "lossers",
        }
    }

    /// Default (max_n, max_bits). `max_n` is the claim's size parameter:
    /// an index, exponent, rank, arity or head count; `max_bits` bounds the
    /// B scans and the Gray round trip.
    pub fn default_bounds(self) -> Bounds {
        let (n, bits) = match self {
            ClaimId::CharEquiv | ClaimId::Parity => (200, None),
            ClaimId::Lemma3_1 => (100_000, None),
            ClaimId::Theorem3_2 => (65_536, None),
            ClaimId::Lemma4_1 | ClaimId::Lemma4_2 | ClaimId::Lemma4_3 => (20, None),
            ClaimId::Theorem4_4 | ClaimId::Lemma4_6 | ClaimId::Lemma4_7 => (0, Some(20)),
            ClaimId::Theorem4_8 => (10, Some(22)),
            ClaimId::Lemma5_1 => (40, None),
            ClaimId::Theorem5_2 => (16, None),
            ClaimId::Bijection | ClaimId::Occurrence1 => (12, None),
            ClaimId::Occurrence2 => (30, Some(16)),
            ClaimId::Occurrence3 => (14, None),
            ClaimId::Lossers => (10, None),
        };
        Bounds {
            max_n: (n > 0).then_some(n),
            max_bits: bits,
        }
    }

    /// Inclusive (min, max) accepted for the size parameter.
    fn n_limits(self) -> (u64, u64) {
        match self {
            ClaimId::CharEquiv | ClaimId::Parity => (1, 20_000),
            ClaimId::Lemma3_1 | ClaimId::Theorem3_2 => (1, 10_000_000),
            ClaimId::Lemma4_1 | ClaimId::Lemma4_3 => (1, 62),
            ClaimId::Lemma4_2 => (2, 62),
            ClaimId::Theorem4_4 | ClaimId::Lemma4_6 | ClaimId::Lemma4_7 => (0, 0),
            ClaimId::Theorem4_8 => (1, 31),
            ClaimId::Lemma5_1 => (1, 2_000),
            ClaimId::Theorem5_2 => (2, 22),
            ClaimId::Bijection | ClaimId::Occurrence3 => (3, 18),
            ClaimId::Occurrence1 => (1, 18),
            ClaimId::Occurrence2 => (1, 4_096),
            ClaimId::Lossers => (1, 16),
        }
    }

    fn bits_limits(self) -> Option<(u32, u32)> {
        match self {
            ClaimId::Theorem4_4 | ClaimId::Lemma4_7 => Some((2, 28)),
            ClaimId::Lemma4_6 => Some((1, 28)),
            ClaimId::Theorem4_8 => Some((2, 28)),
            ClaimId::Occurrence2 => Some((1, 20)),
            _ => None,
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClaimId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| domain(format!("unknown claim `{s}`")))
    }
}

/// Per-claim limits. `None` means the claim's default.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Bounds {
    pub max_n: Option<u64>,
    pub max_bits: Option<u32>,
}

impl Bounds {
    /// Fill unset fields from the claim defaults and check them.
    pub fn resolve(self, claim: ClaimId) -> Result<(u64, u32)> {
        let d = claim.default_bounds();
        let n = self.max_n.or(d.max_n).unwrap_or(0);
        let bits = self.max_bits.or(d.max_bits).unwrap_or(0);
        let (lo, hi) = claim.n_limits();
        if d.max_n.is_some() && !(lo..=hi).contains(&n) {
            return Err(domain(format!(
                "{claim}: --max-n must lie in {lo}..={hi}, got {n}"
            )));
        }
        if d.max_n.is_none() && self.max_n.is_some() {
            return Err(domain(format!("{claim} takes --max-bits, not --max-n")));
        }
        match claim.bits_limits() {
            Some((lo, hi)) if !(lo..=hi).contains(&bits) => Err(domain(format!(
                "{claim}: --max-bits must lie in {lo}..={hi}, got {bits}"
            ))),
            None if self.max_bits.is_some() => {
                Err(domain(format!("{claim} takes --max-n, not --max-bits")))
            }
            _ => Ok((n, bits)),
        }
    }
}

/// Runs one claim against `subject`.
pub fn run_claim(claim: ClaimId, subject: &dyn Subject, bounds: Bounds) -> Result<Report> {
    let (n, bits) = bounds.resolve(claim)?;
    Ok(match claim {
        ClaimId::CharEquiv => verify_char_equiv(subject, n),
        ClaimId::Parity => verify_parity(subject, n),
        ClaimId::Lemma3_1 => verify_palindrome_formula(subject, n),
        ClaimId::Theorem3_2 => verify_triangular_palindromes(subject, n),
        ClaimId::Lemma4_1 => verify_b_at_a(subject, n as u32),
        ClaimId::Lemma4_2 => verify_b_after_a(subject, n as u32),
        ClaimId::Lemma4_3 => verify_b_at_powers(subject, n as u32),
        ClaimId::Theorem4_4 => verify_zero_run_spans(subject, bits),
        ClaimId::Lemma4_6 => verify_zero_predicate(subject, bits),
        ClaimId::Lemma4_7 => verify_run_starts(subject, bits),
        ClaimId::Theorem4_8 => {
            if n >= bits as u64 {
                return Err(Error::Range(format!(
                    "{claim}: only {} record runs lie below 2^{bits}; raise --max-bits above {n}",
                    bits - 1
                )));
            }
            verify_record_numbering(subject, n, bits)
        }
        ClaimId::Lemma5_1 => verify_string_count(subject, n),
        ClaimId::Theorem5_2 => verify_bubble_counts(subject, n as usize),
        ClaimId::Bijection => verify_bijection(subject, n as usize),
        ClaimId::Occurrence1 => verify_chinese_rings(subject, n as usize),
        ClaimId::Occurrence2 => verify_gray_code(subject, n as usize, bits as usize),
        ClaimId::Occurrence3 => verify_partition_counts(subject, n as usize),
        ClaimId::Lossers => verify_linear_strings(subject, n as usize),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for c in ClaimId::ALL {
            assert_eq!(c.as_str().parse::<ClaimId>().unwrap(), c);
        }
        assert!("theorem-9-9".parse::<ClaimId>().is_err());
    }

    #[test]
    fn bounds_resolution() {
        assert_eq!(
            Bounds::default().resolve(ClaimId::Theorem3_2).unwrap(),
            (65_536, 0)
        );
        assert_eq!(
            Bounds::default().resolve(ClaimId::Theorem4_8).unwrap(),
            (10, 22)
        );
        let b = Bounds {
            max_n: Some(5),
            max_bits: None,
        };
        assert!(b.resolve(ClaimId::Theorem4_4).is_err());
        let b = Bounds {
            max_n: None,
            max_bits: Some(5),
        };
        assert!(b.resolve(ClaimId::Parity).is_err());
        let b = Bounds {
            max_n: Some(0),
            max_bits: None,
        };
        assert!(b.resolve(ClaimId::Parity).is_err());
    }

    #[test]
    fn small_bounds_pass() {
        for c in ClaimId::ALL {
            let d = c.default_bounds();
            let (lo, _) = c.n_limits();
            let bounds = Bounds {
                max_n: d.max_n.map(|n| n.min(lo.max(8))),
                max_bits: d.max_bits.map(|b| b.min(10)),
            };
            let r = run_claim(c, &Reference, bounds).unwrap();
            assert!(r.passed(), "{c}: {r:?}");
            assert_eq!(r.claim_id, c.as_str());
        }
    }

    #[test]
    fn mutants_fail_their_claim() {
        for c in ClaimId::ALL {
            let r = run_claim(c, &Mutant::for_claim(c), Bounds::default()).unwrap();
            assert!(!r.passed(), "{c} did not detect its mutant");
            assert!(!r.counterexamples.is_empty());
        }
    }

    #[test]
    fn theorem_4_8_needs_enough_bits() {
        let b = Bounds {
            max_n: Some(10),
            max_bits: Some(10),
        };
        assert!(matches!(
            run_claim(ClaimId::Theorem4_8, &Reference, b),
            Err(Error::Range(_))
        ));
    }
}
