//! `seqlab`: print sequences, replay claims, dump enumerations, and move
//! terms in and out of OEIS b-files.
//!
//! Exit codes: 0 pass, 1 claim failure, 2 usage or parse error.

mod enumerate;

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use seqlab_core::claims::{self, Bounds, ClaimId, Mutant, Reference, Subject};
use seqlab_core::{seq, BFile, Error, Method, Report, SeqId};

use crate::enumerate::{EnumArgs, Object};

#[derive(Parser, Debug)]
#[command(name = "seqlab", version, about = "A000975 sequence lab")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print terms `FROM..TO` (inclusive) of a sequence.
    Seq {
        #[arg(value_parser = parse_seq)]
        seq: SeqId,
        /// Inclusive index range, e.g. `1..10`.
        #[arg(value_parser = parse_range)]
        range: (u64, u64),
        /// Evaluation route for A: rec, binary, complement, gap, closed.
        #[arg(long, value_parser = parse_method)]
        method: Option<Method>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Replay a claim (or `all`) and print a JSON report.
    Verify(VerifyArgs),
    /// Dump a combinatorial family in a fixed order.
    Enumerate {
        #[arg(value_enum)]
        object: Object,
        #[command(flatten)]
        args: EnumArgs,
    },
    /// Read or write OEIS b-files.
    #[command(subcommand)]
    Bfile(BfileCommand),
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// A claim id, or `all`.
    claim: String,
    #[arg(long)]
    max_n: Option<u64>,
    #[arg(long)]
    max_bits: Option<u32>,
    /// Run against a subject with one planted fault for the claim.
    #[arg(long)]
    inject_fault: bool,
}

#[derive(Subcommand, Debug)]
enum BfileCommand {
    /// Write `COUNT` terms starting at `OFFSET`.
    Export {
        #[arg(value_parser = parse_seq)]
        seq: SeqId,
        #[arg(long)]
        offset: Option<u64>,
        #[arg(long)]
        count: u64,
        /// Prepend `#` lines naming the sequence.
        #[arg(long)]
        header: bool,
        /// Output file; stdout when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check every entry of a b-file against the sequence.
    Import {
        path: PathBuf,
        #[arg(value_parser = parse_seq)]
        seq: SeqId,
        /// Required index of the first entry.
        #[arg(long)]
        offset: Option<u64>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub(crate) enum Format {
    Text,
    Json,
    Dot,
}

/// Failure that ends the process with a nonzero code.
#[derive(Debug)]
pub(crate) enum Fail {
    Usage(String),
    Claim,
    Core(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Core(e)
    }
}

pub(crate) type CliResult<T> = std::result::Result<T, Fail>;

fn parse_seq(s: &str) -> Result<SeqId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_range(s: &str) -> Result<(u64, u64), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected FROM..TO, got `{s}`"))?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo = lo
        .trim()
        .parse()
        .map_err(|_| format!("bad range start `{lo}`"))?;
    let hi = hi
        .trim()
        .parse()
        .map_err(|_| format!("bad range end `{hi}`"))?;
    Ok((lo, hi))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Claim) => ExitCode::from(1),
        Err(Fail::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Fail::Core(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::Inversion(_) | Error::Internal(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(command: Command) -> CliResult<()> {
    match command {
        Command::Seq {
            seq,
            range,
            method,
            format,
        } => cmd_seq(seq, range, method, format),
        Command::Verify(args) => cmd_verify(args),
        Command::Enumerate { object, args } => emit(&enumerate::run(object, &args)?),
        Command::Bfile(BfileCommand::Export {
            seq,
            offset,
            count,
            header,
            output,
        }) => {
            let f = BFile::export(seq, offset.unwrap_or(seq.offset()), count)?;
            let text = if header {
                f.render_with_header(seq)
            } else {
                f.render()
            };
            match output {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| Fail::Usage(format!("cannot write {}: {e}", path.display()))),
                None => emit(&text),
            }
        }
        Command::Bfile(BfileCommand::Import { path, seq, offset }) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Fail::Usage(format!("cannot read {}: {e}", path.display())))?;
            let f = BFile::parse(&text)?;
            if let (Some(want), Some(got)) = (offset, f.offset()) {
                if want != got {
                    return Err(Fail::Usage(format!(
                        "{}: first index is {got}, expected offset {want}",
                        path.display()
                    )));
                }
            }
            let report = f.verify(seq)?;
            emit(&(report.to_json() + "\n"))?;
            if report.passed() || report.status == seqlab_core::Status::Skipped {
                Ok(())
            } else {
                Err(Fail::Claim)
            }
        }
    }
}

#[derive(Serialize)]
struct Term {
    index: u64,
    value: String,
}

fn cmd_seq(
    seq: SeqId,
    (from, to): (u64, u64),
    method: Option<Method>,
    format: Format,
) -> CliResult<()> {
    let terms = match method {
        None => seq.terms(from, to)?,
        Some(m) if seq == SeqId::A => {
            if from > to || from < 1 {
                return Err(Fail::Usage(format!("bad range {from}..{to} for A")));
            }
            (from..=to)
                .map(|i| seq::a_of(i, m).map(|v| (i, v)))
                .collect::<Result<_, _>>()?
        }
        Some(_) => {
            return Err(Fail::Usage(format!(
                "--method applies only to A, not {seq}"
            )))
        }
    };
    let out = match format {
        Format::Text => {
            let mut s = String::new();
            for (i, v) in &terms {
                writeln!(s, "{i} {v}").unwrap();
            }
            s
        }
        Format::Json => {
            let rows: Vec<Term> = terms
                .iter()
                .map(|(i, v)| Term {
                    index: *i,
                    value: v.to_string(),
                })
                .collect();
            serde_json::to_string_pretty(&rows).unwrap() + "\n"
        }
        Format::Dot => {
            return Err(Fail::Usage(
                "dot output is only for `enumerate ring-path`".into(),
            ))
        }
    };
    emit(&out)
}

fn claim_report(claim: ClaimId, bounds: Bounds, inject: bool) -> CliResult<Report> {
    let mutant;
    let subject: &dyn Subject = if inject {
        mutant = Mutant::for_claim(claim);
        &mutant
    } else {
        &Reference
    };
    Ok(claims::run_claim(claim, subject, bounds)?)
}

fn cmd_verify(args: VerifyArgs) -> CliResult<()> {
    let bounds = Bounds {
        max_n: args.max_n,
        max_bits: args.max_bits,
    };
    if args.claim == "all" {
        if bounds != Bounds::default() {
            return Err(Fail::Usage(
                "`verify all` runs default bounds; drop --max-n/--max-bits".into(),
            ));
        }
        let start = Instant::now();
        let reports: Vec<Report> = ClaimId::ALL
            .par_iter()
            .map(|&c| claim_report(c, bounds, args.inject_fault))
            .collect::<CliResult<_>>()?;
        emit(&(serde_json::to_string_pretty(&reports).unwrap() + "\n"))?;
        let failed: Vec<&str> = reports
            .iter()
            .filter(|r| !r.passed())
            .map(|r| r.claim_id.as_str())
            .collect();
        eprintln!(
            "{} claims, {} failed, {} ms",
            reports.len(),
            failed.len(),
            start.elapsed().as_millis()
        );
        return if failed.is_empty() {
            Ok(())
        } else {
            Err(Fail::Claim)
        };
    }
    let claim: ClaimId = args
        .claim
        .parse()
        .map_err(|e: Error| Fail::Usage(e.to_string()))?;
    let report = claim_report(claim, bounds, args.inject_fault)?;
    emit(&(report.to_json() + "\n"))?;
    if report.passed() {
        Ok(())
    } else {
        Err(Fail::Claim)
    }
}

/// Writes the whole buffer at once; a closed pipe is not an error.
pub(crate) fn emit(text: &str) -> CliResult<()> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
            Err(Fail::Usage(format!("cannot write output: {e}")))
        }
        _ => Ok(()),
    }
}
