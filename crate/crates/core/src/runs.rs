//! Maximal runs of zeros in B (A265158), their lengths (A264784), and the
//! record-length runs.

use serde::Serialize;

use crate::claims::{self, Reference};
use crate::error::{domain, Error, Result};
use crate::report::Report;
use crate::seq::{self, Nat};

/// Largest scan bound accepted: 2^MAX_SCAN_BITS indices.
pub const MAX_SCAN_BITS: u32 = 32;

/// A maximal block of consecutive indices where B is zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Run {
    pub start: u64,
    pub length: u64,
    /// 1-based position among all runs ordered by start.
    pub ordinal: u64,
}

impl Run {
    /// Last index of the run.
    pub fn end(&self) -> u64 {
        self.start + self.length - 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RecordEntry {
    pub rank: u64,
    pub run: Run,
}

/// Runs strictly longer than every earlier run, ranked from 1.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RecordTable {
    pub records: Vec<RecordEntry>,
}

impl RecordTable {
    pub fn from_runs(runs: &[Run]) -> Self {
        let mut records = Vec::new();
        let mut best = 0;
        for run in runs {
            if run.length > best {
                best = run.length;
                records.push(RecordEntry {
                    rank: records.len() as u64 + 1,
                    run: *run,
                });
            }
        }
        RecordTable { records }
    }

    pub fn rank(&self, rank: u64) -> Option<&Run> {
        self.records
            .get(rank.checked_sub(1)? as usize)
            .map(|e| &e.run)
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }
}

fn check_bits(max_bits: u32) -> Result<()> {
    if (2..=MAX_SCAN_BITS).contains(&max_bits) {
        Ok(())
    } else {
        Err(domain(format!(
            "max_bits must lie in 2..={MAX_SCAN_BITS}, got {max_bits}"
        )))
    }
}

/// All maximal zero runs of B within 1 <= n < 2^max_bits, ordered by start.
///
/// The index 2^max_bits is inspected to decide whether a run reaching the
/// bound is complete; a run that would continue past it is dropped.
pub fn extract_runs(max_bits: u32) -> Result<Vec<Run>> {
    check_bits(max_bits)?;
    Ok(extract_runs_with(max_bits, seq::seq_b_fast))
}

pub(crate) fn extract_runs_with(max_bits: u32, b: impl Fn(u64) -> u64) -> Vec<Run> {
    let bound = 1u64 << max_bits;
    let mut runs = Vec::new();
    let mut open: Option<u64> = None;
    for n in 1..=bound {
        let zero = b(n) == 0;
        match (zero, open) {
            (true, None) if n < bound => open = Some(n),
            (false, Some(start)) => {
                runs.push(Run {
                    start,
                    length: n - start,
                    ordinal: runs.len() as u64 + 1,
                });
                open = None;
            }
            _ => {}
        }
    }
    runs
}

/// The first `count` runs, scanning as far as needed.
pub fn runs_through_ordinal(count: u64) -> Result<Vec<Run>> {
    for bits in 2..=MAX_SCAN_BITS.min(28) {
        let runs = extract_runs(bits)?;
        if runs.len() as u64 >= count {
            return Ok(runs);
        }
    }
    Err(Error::Range(format!("run #{count} lies beyond 2^28")))
}

/// R(i): length of the i-th run, scanning below 2^max_bits.
pub fn run_length_seq(i: u64, max_bits: u32) -> Result<u64> {
    let runs = extract_runs(max_bits)?;
    nth_run(&runs, i, max_bits).map(|r| r.length)
}

fn nth_run(runs: &[Run], i: u64, max_bits: u32) -> Result<&Run> {
    i.checked_sub(1)
        .and_then(|k| runs.get(k as usize))
        .ok_or_else(|| {
            Error::Range(format!(
                "run #{i} requested but only {} runs lie below 2^{max_bits}",
                runs.len()
            ))
        })
}

/// Record-length runs below 2^max_bits.
pub fn records(max_bits: u32) -> Result<RecordTable> {
    Ok(RecordTable::from_runs(&extract_runs(max_bits)?))
}

/// Ordinal of the r-th record run (A155051(r - 1)) from Catalan partial
/// sums: 2(C(0) + ... + C(j-1)) + C(j) for r = 2j + 1, and
/// 2(C(0) + ... + C(j)) for r = 2j + 2.
pub fn record_run_number(r: u64) -> Result<Nat> {
    if r == 0 {
        return Err(domain("record ranks start at 1"));
    }
    let j = (r - 1) / 2;
    let below: Nat = (0..j).map(seq::catalan).sum();
    Ok(if r % 2 == 1 {
        below * 2u32 + seq::catalan(j)
    } else {
        (below + seq::catalan(j)) * 2u32
    })
}

/// Zero runs on [A(k)+1, 2^k - 1] for 2 <= k <= max_k, and nothing else
/// sets a record.
pub fn verify_theorem_4_4(max_k: u32) -> Report {
    claims::verify_zero_run_spans(&Reference, max_k)
}

/// R(A155051(n - 1)) = A(n) for n <= max_rank.
pub fn verify_theorem_4_8(max_rank: u64, max_bits: u32) -> Result<Report> {
    check_bits(max_bits)?;
    if max_rank >= max_bits as u64 {
        return Err(Error::Range(format!(
            "only {} record runs lie below 2^{max_bits}; need {max_rank}",
            max_bits - 1
        )));
    }
    Ok(claims::verify_record_numbering(
        &Reference, max_rank, max_bits,
    ))
}
