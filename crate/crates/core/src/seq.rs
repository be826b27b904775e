//! Exact evaluators for A000975 and the companion sequences.
//!
//! A(n) has five independent evaluation routes ([`Method`]) plus two
//! further closed forms kept as internal cross-checks. Everything is
//! 1-indexed except the Catalan numbers and the record-run numbering,
//! which start at 0.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{domain, Error, Result};
use crate::{runs, words::BitWord};

/// Arbitrary-precision natural number.
pub type Nat = BigUint;

pub(crate) fn pow2(k: u64) -> Nat {
    Nat::one() << k
}

fn require_positive(n: u64, what: &str) -> Result<()> {
    if n == 0 {
        Err(domain(format!("{what} is defined for n >= 1, got 0")))
    } else {
        Ok(())
    }
}

/// Evaluation route for A(n).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// A(1) = 1, A(2n) = 2A(2n-1), A(2n+1) = 2A(2n) + 1.
    Rec,
    /// The length-n word 1010... read in base 2.
    Binary,
    /// A(n) = (2^n - 1) - A(n-1).
    Complement,
    /// A(n) = A(n-2) + 2^(n-1).
    Gap,
    /// (2^(n+2) - 3 - (-1)^n) / 6.
    Closed,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Rec,
        Method::Binary,
        Method::Complement,
        Method::Gap,
        Method::Closed,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Rec => "rec",
            Method::Binary => "binary",
            Method::Complement => "complement",
            Method::Gap => "gap",
            Method::Closed => "closed",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| domain(format!("unknown method `{s}`")))
    }
}

/// A(n), the n-th term of A000975.
pub fn a_of(n: u64, method: Method) -> Result<Nat> {
    require_positive(n, "A(n)")?;
    Ok(match method {
        Method::Rec => a_rec(n),
        Method::Binary => BitWord::alternating(n as usize).to_nat()?,
        Method::Complement => a_complement(n),
        Method::Gap => a_gap(n),
        Method::Closed => a_closed(n)?,
    })
}

fn a_rec(n: u64) -> Nat {
    let mut a = Nat::one();
    for i in 2..=n {
        a <<= 1;
        if i % 2 == 1 {
            a += 1u32;
        }
    }
    a
}

fn a_complement(n: u64) -> Nat {
    let mut a = Nat::one();
    for i in 2..=n {
        a = (pow2(i) - 1u32) - a;
    }
    a
}

fn a_gap(n: u64) -> Nat {
    let (mut older, mut newer) = (Nat::one(), Nat::from(2u32));
    if n == 1 {
        return older;
    }
    for i in 3..=n {
        let next = &older + pow2(i - 1);
        older = std::mem::replace(&mut newer, next);
    }
    newer
}

fn exact_div(num: Nat, den: u32, what: &str) -> Result<Nat> {
    let (q, r) = num.div_rem(&Nat::from(den));
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::Internal(format!(
            "{what}: division by {den} left remainder {r}"
        )))
    }
}

fn a_closed(n: u64) -> Result<Nat> {
    // 3 + (-1)^n is 4 for even n and 2 for odd n.
    let offset = if n % 2 == 0 { 4u32 } else { 2u32 };
    exact_div(pow2(n + 2) - offset, 6, "closed form")
}

/// The parity-split closed form: (2^(n+1) - 1)/3 for odd n,
/// (2^(n+1) - 2)/3 for even n. Cross-check only.
pub fn a_parity_split(n: u64) -> Result<Nat> {
    require_positive(n, "A(n)")?;
    let offset = if n % 2 == 0 { 2u32 } else { 1u32 };
    exact_div(pow2(n + 1) - offset, 3, "parity-split form")
}

/// floor((2/3) * 2^n). Cross-check only.
pub fn a_floor_two_thirds(n: u64) -> Result<Nat> {
    require_positive(n, "A(n)")?;
    Ok(pow2(n + 1) / 3u32)
}

/// T(n) = n(n+1)/2.
pub fn triangular(n: u64) -> Result<Nat> {
    require_positive(n, "T(n)")?;
    Ok(Nat::from(n) * (n + 1) / 2u32)
}

/// Number of binary digits of `n`.
pub fn bit_length(n: u64) -> Result<u32> {
    require_positive(n, "bit_length")?;
    Ok(u64::BITS - n.leading_zeros())
}

/// Binary reversal (A030101): reverse the digits of `n`; leading zeros of
/// the result vanish.
pub fn reverse_bits(n: u64) -> Result<Nat> {
    let k = bit_length(n)?;
    Ok(Nat::from(n.reverse_bits() >> (u64::BITS - k)))
}

/// P(n) = n * 2^k + Rev(n): the even-length palindrome whose left half is
/// the binary form of `n` (A048701).
pub fn palindrome_p(n: u64) -> Result<Nat> {
    let k = bit_length(n)?;
    Ok((Nat::from(n) << k) + reverse_bits(n)?)
}

/// P(n) / 3 (A048702).
pub fn palindrome_p_div3(n: u64) -> Result<Nat> {
    exact_div(palindrome_p(n)?, 3, "P(n)/3")
}

/// B(n) of A265158 by its defining recursion, in arbitrary precision.
pub fn seq_b(n: u64) -> Result<Nat> {
    require_positive(n, "B(n)")?;
    fn go(n: u64) -> Nat {
        match n {
            1 => Nat::one(),
            _ if n % 2 == 0 => go(n / 2) << 1,
            _ => go(n / 2) >> 1,
        }
    }
    Ok(go(n))
}

/// Machine-word fast path for B(n); B(n) <= n so this never overflows.
/// Returns 0 for n = 0, which is outside the sequence.
pub fn seq_b_fast(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let top = u64::BITS - 1 - n.leading_zeros();
    let mut value = 1u64;
    for i in (0..top).rev() {
        if (n >> i) & 1 == 0 {
            value <<= 1;
        } else {
            value >>= 1;
            if value == 0 {
                return 0;
            }
        }
    }
    value
}

/// B(n) by reading the binary form of `n` left to right: the leading 1
/// sets the value to 1, each further 0 doubles it, each 1 halves it with
/// floor (so 1 becomes 0, which then sticks).
pub fn seq_b_scan(n: u64) -> Result<Nat> {
    require_positive(n, "B(n)")?;
    let word = BitWord::from_u64(n);
    let mut value = Nat::one();
    for bit in word.iter().skip(1) {
        if bit {
            value >>= 1;
        } else if !value.is_zero() {
            value <<= 1;
        }
    }
    Ok(value)
}

/// Binomial coefficient C(n, k), exact.
pub fn binomial(n: u64, k: u64) -> Nat {
    if k > n {
        return Nat::zero();
    }
    let k = k.min(n - k);
    let mut acc = Nat::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// C(n) = binomial(2n, n) / (n + 1), 0-indexed (A000108).
pub fn catalan(n: u64) -> Nat {
    binomial(2 * n, n) / (n + 1)
}

/// S(n): the number of length-n words over {b, u} whose count of b is
/// congruent to 2n + 1 modulo 3.
pub fn s_count(n: u64) -> Result<Nat> {
    require_positive(n, "S(n)")?;
    let residue = (2 * n + 1) % 3;
    Ok((residue..=n).step_by(3).map(|k| binomial(n, k)).sum())
}

/// Names for every sequence the tool can print or exchange as a b-file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeqId {
    A,
    T,
    P,
    PDiv3,
    Rev,
    B,
    C,
    S,
    RunLen,
    RunStart,
    RecordRunNo,
}

impl SeqId {
    pub const ALL: [SeqId; 11] = [
        SeqId::A,
        SeqId::T,
        SeqId::P,
        SeqId::PDiv3,
        SeqId::Rev,
        SeqId::B,
        SeqId::C,
        SeqId::S,
        SeqId::RunLen,
        SeqId::RunStart,
        SeqId::RecordRunNo,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SeqId::A => "A",
            SeqId::T => "T",
            SeqId::P => "P",
            SeqId::PDiv3 => "P_div3",
            SeqId::Rev => "Rev",
            SeqId::B => "B",
            SeqId::C => "C",
            SeqId::S => "S",
            SeqId::RunLen => "RunLen",
            SeqId::RunStart => "RunStart",
            SeqId::RecordRunNo => "RecordRunNo",
        }
    }

    /// OEIS A-number, where the sequence has one.
    pub fn oeis(self) -> Option<&'static str> {
        match self {
            SeqId::A => Some("A000975"),
            SeqId::T => Some("A000217"),
            SeqId::P => Some("A048701"),
            SeqId::PDiv3 => Some("A048702"),
            SeqId::Rev => Some("A030101"),
            SeqId::B => Some("A265158"),
            SeqId::C => Some("A000108"),
            SeqId::RunLen => Some("A264784"),
            SeqId::RecordRunNo => Some("A155051"),
            SeqId::S | SeqId::RunStart => None,
        }
    }

    /// Index of the first term.
    pub fn offset(self) -> u64 {
        match self {
            SeqId::C | SeqId::RecordRunNo => 0,
            _ => 1,
        }
    }

    /// A single term.
    pub fn term(self, index: u64) -> Result<Nat> {
        Ok(self.terms(index, index)?.pop().expect("one term").1)
    }

    /// Terms `from..=to` as (index, value) pairs.
    pub fn terms(self, from: u64, to: u64) -> Result<Vec<(u64, Nat)>> {
        if from > to {
            return Err(domain(format!("inverted range {from}..{to}")));
        }
        if from < self.offset() {
            return Err(domain(format!(
                "{} starts at index {}, got {from}",
                self.as_str(),
                self.offset()
            )));
        }
        let idx = from..=to;
        match self {
            SeqId::A => idx.map(|i| Ok((i, a_of(i, Method::Rec)?))).collect(),
            SeqId::T => idx.map(|i| Ok((i, triangular(i)?))).collect(),
            SeqId::P => idx.map(|i| Ok((i, palindrome_p(i)?))).collect(),
            SeqId::PDiv3 => idx.map(|i| Ok((i, palindrome_p_div3(i)?))).collect(),
            SeqId::Rev => idx.map(|i| Ok((i, reverse_bits(i)?))).collect(),
            SeqId::B => idx.map(|i| Ok((i, seq_b(i)?))).collect(),
            SeqId::C => Ok(idx.map(|i| (i, catalan(i))).collect()),
            SeqId::S => idx.map(|i| Ok((i, s_count(i)?))).collect(),
            SeqId::RecordRunNo => idx
                .map(|i| Ok((i, runs::record_run_number(i + 1)?)))
                .collect(),
            SeqId::RunLen | SeqId::RunStart => {
                let found = runs::runs_through_ordinal(to)?;
                Ok(found[(from - 1) as usize..to as usize]
                    .iter()
                    .map(|r| {
                        let v = if self == SeqId::RunLen {
                            r.length
                        } else {
                            r.start
                        };
                        (r.ordinal, Nat::from(v))
                    })
                    .collect())
            }
        }
    }
}

impl fmt::Display for SeqId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SeqId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SeqId::ALL
            .into_iter()
            .find(|id| {
                id.as_str().eq_ignore_ascii_case(s)
                    || id.oeis().is_some_and(|a| a.eq_ignore_ascii_case(s))
            })
            .ok_or_else(|| domain(format!("unknown sequence `{s}`")))
    }
}

/// Convert a small Nat to u64 for index arithmetic.
pub(crate) fn nat_to_u64(v: &Nat) -> Result<u64> {
    v.to_u64()
        .ok_or_else(|| Error::Range(format!("{v} does not fit a machine index")))
}
