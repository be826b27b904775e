//! `enumerate` dumps. Every object has a size cap so output stays bounded.

use std::fmt::Write as _;

use clap::{Args, ValueEnum};
use serde::Serialize;

use seqlab_core::{colorings, puzzles, words, BitWord};

use crate::{CliResult, Fail, Format};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub(crate) enum Object {
    /// Catalan words of length SIZE (even), lexicographic.
    CatalanWords,
    /// Affinity partitions of SIZE people.
    Partitions,
    /// Bubbles of arity SIZE.
    Bubbles,
    /// Reflected Gray code on SIZE bits.
    Gray,
    /// Chinese Rings solution path for SIZE rings.
    RingPath,
    /// Zero-run starts of B below 2^max-bits.
    RunStarts,
}

#[derive(Args, Debug)]
pub(crate) struct EnumArgs {
    size: Option<usize>,
    /// Bit bound for run-starts.
    #[arg(long)]
    max_bits: Option<u32>,
    /// Bubbles with an uncolored base.
    #[arg(long)]
    unbased: bool,
    /// Run starts in numeric order instead of by generating word.
    #[arg(long)]
    sorted: bool,
    /// Print at most this many items.
    #[arg(long)]
    limit: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

impl Object {
    /// Largest accepted SIZE.
    pub(crate) fn cap(self) -> usize {
        match self {
            Object::CatalanWords => 24,
            Object::Partitions => 20,
            Object::Bubbles => 20,
            Object::Gray => 20,
            Object::RingPath => 20,
            Object::RunStarts => 32,
        }
    }
}

#[derive(Serialize)]
struct RunStartRow {
    n: u64,
    binary: String,
    word: String,
}

pub(crate) fn run(object: Object, args: &EnumArgs) -> CliResult<String> {
    if args.format == Format::Dot && object != Object::RingPath {
        return Err(Fail::Usage("dot output is only for ring-path".into()));
    }
    if args.unbased && object != Object::Bubbles {
        return Err(Fail::Usage("--unbased applies only to bubbles".into()));
    }
    if args.sorted && object != Object::RunStarts {
        return Err(Fail::Usage("--sorted applies only to run-starts".into()));
    }
    if object == Object::RunStarts {
        if args.size.is_some() {
            return Err(Fail::Usage(
                "run-starts takes --max-bits, not a size".into(),
            ));
        }
        let bits = args
            .max_bits
            .ok_or_else(|| Fail::Usage("run-starts needs --max-bits".into()))?;
        if bits as usize > object.cap() {
            return Err(over_cap(object, bits as usize));
        }
        return run_starts(bits, args);
    }
    if args.max_bits.is_some() {
        return Err(Fail::Usage("--max-bits applies only to run-starts".into()));
    }
    let size = args
        .size
        .ok_or_else(|| Fail::Usage(format!("{object:?} needs a size")))?;
    if size > object.cap() {
        return Err(over_cap(object, size));
    }
    let items: Vec<String> = match object {
        Object::CatalanWords => words::enum_catalan(size)?
            .iter()
            .map(|w| w.to_string())
            .collect(),
        Object::Partitions => colorings::enum_partitions(size)?
            .iter()
            .map(|p| p.to_string())
            .collect(),
        Object::Bubbles => colorings::enum_bubbles(size, !args.unbased)?
            .iter()
            .map(|b| b.to_string())
            .collect(),
        Object::Gray => puzzles::gray_code(size)?
            .iter()
            .map(|w| w.to_string())
            .collect(),
        Object::RingPath if args.format == Format::Dot => {
            return Ok(puzzles::state_graph_dot(size)?);
        }
        Object::RingPath => puzzles::ring_path(size)?
            .iter()
            .map(|s| s.to_string())
            .collect(),
        Object::RunStarts => unreachable!(),
    };
    let items = &items[..items.len().min(args.limit.unwrap_or(usize::MAX))];
    Ok(match args.format {
        Format::Json => serde_json::to_string_pretty(items).unwrap() + "\n",
        _ if matches!(object, Object::Gray | Object::RingPath) => {
            let mut s = String::new();
            for (i, item) in items.iter().enumerate() {
                writeln!(s, "{i} {item}").unwrap();
            }
            s
        }
        _ => items.iter().map(|i| format!("{i}\n")).collect(),
    })
}

fn over_cap(object: Object, size: usize) -> Fail {
    Fail::Usage(format!(
        "{object:?} size {size} is over the cap of {}",
        object.cap()
    ))
}

fn run_starts(bits: u32, args: &EnumArgs) -> CliResult<String> {
    let mut rows = Vec::new();
    for f in words::run_start_families(bits)? {
        let word = f.word.to_string();
        for n in std::iter::once(f.odd).chain(f.even) {
            rows.push(RunStartRow {
                n,
                binary: BitWord::from_u64(n).to_string(),
                word: word.clone(),
            });
        }
    }
    if args.sorted {
        rows.sort_by_key(|r| r.n);
    }
    rows.truncate(args.limit.unwrap_or(usize::MAX));
    Ok(match args.format {
        Format::Json => serde_json::to_string_pretty(&rows).unwrap() + "\n",
        _ => rows
            .iter()
            .map(|r| format!("{} {} {}\n", r.n, r.binary, r.word))
            .collect(),
    })
}
