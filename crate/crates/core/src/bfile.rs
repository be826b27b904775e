//! OEIS b-file reading and writing: one `index value` pair per line,
//! `#` comment lines, indices consecutive from the declared offset.

use std::fmt::Write as _;

use crate::error::{domain, Error, Result};
use crate::report::{self, Report, ReportBuilder};
use crate::seq::{Nat, SeqId};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BFile {
    pub entries: Vec<(u64, Nat)>,
}

impl BFile {
    /// `count` terms of `seq` starting at index `offset`.
    pub fn export(seq: SeqId, offset: u64, count: u64) -> Result<Self> {
        if count == 0 {
            return Err(domain("a b-file needs at least one term"));
        }
        let last = offset
            .checked_add(count - 1)
            .ok_or_else(|| domain("index range overflows"))?;
        Ok(Self {
            entries: seq.terms(offset, last)?,
        })
    }

    /// Index of the first entry.
    pub fn offset(&self) -> Option<u64> {
        self.entries.first().map(|e| e.0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Lines `index value\n`, no header.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, v) in &self.entries {
            writeln!(out, "{i} {v}").unwrap();
        }
        out
    }

    /// Like [`render`](Self::render) with `#` header lines naming the
    /// sequence.
    pub fn render_with_header(&self, seq: SeqId) -> String {
        let name = match seq.oeis() {
            Some(a) => format!("{a} ({seq})"),
            None => seq.to_string(),
        };
        format!(
            "# {name}\n# offset {}\n{}",
            self.offset().unwrap_or(0),
            self.render()
        )
    }

    /// Parses b-file text. Blank lines and lines starting with `#` are
    /// skipped; indices must increase by exactly one.
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries: Vec<(u64, Nat)> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::Parse {
                line: lineno + 1,
                message,
            };
            let mut fields = line.split_whitespace();
            let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next())
            else {
                return Err(err(format!("expected `index value`, got `{line}`")));
            };
            let index: u64 = index
                .parse()
                .map_err(|_| err(format!("bad index `{index}`")))?;
            let value = value
                .parse::<Nat>()
                .map_err(|_| err(format!("bad value `{value}`")))?;
            if let Some(&(prev, _)) = entries.last() {
                if prev.checked_add(1) != Some(index) {
                    return Err(err(format!("index {index} does not follow {prev}")));
                }
            }
            entries.push((index, value));
        }
        Ok(Self { entries })
    }

    /// Recomputes every entry and reports mismatches.
    pub fn verify(&self, seq: SeqId) -> Result<Report> {
        let claim = format!("bfile:{seq}");
        let (Some(first), Some(&(last, _))) = (self.offset(), self.entries.last()) else {
            return Ok(report::skipped(claim, "empty", "the b-file has no entries"));
        };
        let expected = seq.terms(first, last)?;
        let mut b = ReportBuilder::new(claim, format!("{first} <= n <= {last}"));
        for ((i, got), (_, want)) in self.entries.iter().zip(&expected) {
            b.check_eq(format!("{seq}({i})"), want, got);
        }
        Ok(b.finish())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn export_table_one() {
        let f = BFile::export(SeqId::A, 1, 10).unwrap();
        let text = f.render();
        assert_eq!(text.lines().count(), 10);
        assert_eq!(text.lines().next(), Some("1 1"));
        assert!(text.ends_with("10 682\n"));
        assert!(BFile::export(SeqId::A, 0, 3).is_err());
        assert!(BFile::export(SeqId::A, 1, 0).is_err());
    }

    #[test]
    fn parse_skips_comments() {
        let f = BFile::parse("# A000975\n\n1 1\r\n2 2\n3\t5\n").unwrap();
        assert_eq!(f.offset(), Some(1));
        assert_eq!(f.len(), 3);
        assert_eq!(f.entries[2].1, Nat::from(5u32));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let e = BFile::parse("1 1\n2 2\n4 10\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e}");
        let e = BFile::parse("# c\n1 x\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        let e = BFile::parse("1 1 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }));
        let e = BFile::parse("1 -1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn mismatch_is_reported() {
        let f = BFile::parse("1 1\n2 2\n3 5\n4 10\n5 20\n").unwrap();
        let r = f.verify(SeqId::A).unwrap();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.counterexamples.len(), 1);
        assert_eq!(r.counterexamples[0].input, "A(5)");
        assert_eq!(r.counterexamples[0].expected, "21");
        assert_eq!(r.counterexamples[0].actual, "20");
    }

    #[test]
    fn round_trip_b() {
        let f = BFile::export(SeqId::B, 1, 1024).unwrap();
        let back = BFile::parse(&f.render_with_header(SeqId::B)).unwrap();
        assert_eq!(back, f);
        let r = back.verify(SeqId::B).unwrap();
        assert!(r.passed());
        assert_eq!(r.checked, 1024);
    }

    #[test]
    fn empty_file_is_skipped() {
        let r = BFile::parse("# nothing\n")
            .unwrap()
            .verify(SeqId::A)
            .unwrap();
        assert_eq!(r.status, Status::Skipped);
    }
}
