//! Words over {0, 1}, Catalan words, and the run-start generator for B.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{domain, Error, Result};
use crate::seq::{self, Nat};

/// A finite word over {0, 1}. Leading zeros are significant.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitWord {
    bits: Vec<bool>,
}

impl BitWord {
    /// The null word.
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    /// `n` bits of the pattern 1010...
    pub fn alternating(n: usize) -> Self {
        Self::from_bits((0..n).map(|i| i % 2 == 0).collect())
    }

    pub fn repeat(bit: bool, n: usize) -> Self {
        Self::from_bits(vec![bit; n])
    }

    /// Binary form of `n` without leading zeros ("0" for zero).
    pub fn from_u64(n: u64) -> Self {
        if n == 0 {
            return Self::from_bits(vec![false]);
        }
        let len = u64::BITS - n.leading_zeros();
        Self::from_bits((0..len).rev().map(|i| (n >> i) & 1 == 1).collect())
    }

    /// Binary form of `n` without leading zeros ("0" for zero).
    pub fn from_nat(n: &Nat) -> Self {
        if n.is_zero() {
            return Self::from_bits(vec![false]);
        }
        let len = n.bits();
        Self::from_bits((0..len).rev().map(|i| n.bit(i)).collect())
    }

    /// Numeric value. Only words starting with 1, or the single word "0",
    /// name a number.
    pub fn to_nat(&self) -> Result<Nat> {
        match self.bits.first() {
            None => Err(domain("the null word has no numeric value")),
            Some(false) if self.bits.len() > 1 => Err(domain(format!(
                "word {self} has a leading zero and is not a binary numeral"
            ))),
            _ => Ok(self.value_with_leading_zeros()),
        }
    }

    pub fn to_u64(&self) -> Result<u64> {
        seq::nat_to_u64(&self.to_nat()?)
    }

    /// Read as a base-2 number, ignoring leading zeros.
    pub(crate) fn value_with_leading_zeros(&self) -> Nat {
        let mut v = Nat::zero();
        for &b in &self.bits {
            v <<= 1;
            if b {
                v += 1u32;
            }
        }
        v
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = bool> + ExactSizeIterator + '_ {
        self.bits.iter().copied()
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn push(&mut self, bit: bool) {
        self.bits.push(bit);
    }

    pub fn concat(&self, other: &BitWord) -> BitWord {
        let mut bits = self.bits.clone();
        bits.extend_from_slice(&other.bits);
        BitWord { bits }
    }

    /// Flip the bit at position `i` (0 = leftmost).
    pub fn toggled(&self, i: usize) -> BitWord {
        let mut w = self.clone();
        w.bits[i] = !w.bits[i];
        w
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BitWord {
    type Err = Error;

    /// Parses a string of `0`/`1` characters; `""` and `"λ"` give the
    /// null word.
    fn from_str(s: &str) -> Result<Self> {
        if s == "λ" {
            return Ok(Self::empty());
        }
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(domain(format!("`{other}` is not a bit"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::from_bits)
    }
}

/// A word with equally many zeros and ones in which no prefix has more ones
/// than zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CatalanWord(BitWord);

impl CatalanWord {
    pub fn word(&self) -> &BitWord {
        &self.0
    }

    pub fn into_word(self) -> BitWord {
        self.0
    }

    /// Half the length: the number of ones.
    pub fn order(&self) -> usize {
        self.0.len() / 2
    }
}

impl TryFrom<BitWord> for CatalanWord {
    type Error = Error;

    fn try_from(w: BitWord) -> Result<Self> {
        if is_catalan(&w) {
            Ok(CatalanWord(w))
        } else {
            Err(domain(format!("{w} is not a Catalan word")))
        }
    }
}

impl fmt::Display for CatalanWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("λ")
        } else {
            self.0.fmt(f)
        }
    }
}

pub fn is_catalan(w: &BitWord) -> bool {
    let mut excess = 0i64;
    for b in w.iter() {
        excess += if b { 1 } else { -1 };
        if excess > 0 {
            return false;
        }
    }
    excess == 0
}

/// All Catalan words of the given even length, lexicographic with 0 < 1.
pub fn enum_catalan(length: usize) -> Result<Vec<CatalanWord>> {
    if length % 2 != 0 {
        return Err(domain(format!(
            "Catalan words have even length, got {length}"
        )));
    }
    let half = length / 2;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(length);
    extend_catalan(&mut cur, 0, 0, half, &mut out);
    Ok(out)
}

fn extend_catalan(
    cur: &mut Vec<bool>,
    zeros: usize,
    ones: usize,
    half: usize,
    out: &mut Vec<CatalanWord>,
) {
    if ones == half {
        out.push(CatalanWord(BitWord::from_bits(cur.clone())));
        return;
    }
    if zeros < half {
        cur.push(false);
        extend_catalan(cur, zeros + 1, ones, half, out);
        cur.pop();
    }
    if ones < zeros {
        cur.push(true);
        extend_catalan(cur, zeros, ones + 1, half, out);
        cur.pop();
    }
}

/// Whether B(n) = 0, decided from the binary form of `n` alone: after the
/// leading 1, some prefix holds more ones than zeros.
pub fn b_is_zero(n: u64) -> Result<bool> {
    if n == 0 {
        return Err(domain("B(n) is defined for n >= 1, got 0"));
    }
    let word = BitWord::from_u64(n);
    let mut excess = 0i64;
    for b in word.iter().skip(1) {
        excess += if b { 1 } else { -1 };
        if excess > 0 {
            return Ok(true);
        }
    }
    Ok(false)
}

/// A Catalan word w with the run starts it generates: 1w1 and, when it
/// fits under the bound, 1w10.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunStartFamily {
    pub word: CatalanWord,
    pub odd: u64,
    pub even: Option<u64>,
}

/// Run starts grouped by generating word, words taken by length and then
/// lexicographically: 3, 6 (w = λ), 11, 22 (w = 01), 39, 78 (w = 0011), ...
pub fn run_start_families(max_bits: u32) -> Result<Vec<RunStartFamily>> {
    if !(2..=63).contains(&max_bits) {
        return Err(domain(format!(
            "max_bits must lie in 2..=63, got {max_bits}"
        )));
    }
    let max_bits = max_bits as usize;
    let mut out = Vec::new();
    // 1w1 has |w| + 2 bits, 1w10 has |w| + 3.
    for half in 0..=(max_bits - 2) / 2 {
        for word in enum_catalan(2 * half)? {
            let mut core = BitWord::from_bits(vec![true]).concat(word.word());
            core.push(true);
            let odd = core.to_u64()?;
            let even = (core.len() < max_bits).then_some(odd << 1);
            out.push(RunStartFamily { word, odd, even });
        }
    }
    Ok(out)
}

/// Every n < 2^max_bits at which a run of zeros of B begins, ascending.
/// These are the numbers written 1w1 or 1w10 with w a (possibly null)
/// Catalan word.
pub fn run_start_indices(max_bits: u32) -> Result<Vec<u64>> {
    let mut out: Vec<u64> = run_start_families(max_bits)?
        .into_iter()
        .flat_map(|f| std::iter::once(f.odd).chain(f.even))
        .collect();
    out.sort_unstable();
    Ok(out)
}
