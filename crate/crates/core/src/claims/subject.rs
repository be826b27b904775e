//! The operations a verifier exercises, behind a trait so that a verifier
//! can be pointed at a deliberately broken implementation.

use crate::colorings::{self, AffinityPartition, Bubble, Group};
use crate::error::Result;
use crate::puzzles::{self, GrayWord, RingState};
use crate::seq::{self, Method, Nat};
use crate::{runs, words};

use super::ClaimId;

/// Operations under test. Every method defaults to the library
/// implementation.
pub trait Subject: Sync {
    fn a_of(&self, n: u64, method: Method) -> Result<Nat> {
        seq::a_of(n, method)
    }

    fn triangular(&self, n: u64) -> Result<Nat> {
        seq::triangular(n)
    }

    fn bit_length(&self, n: u64) -> Result<u32> {
        seq::bit_length(n)
    }

    fn reverse_bits(&self, n: u64) -> Result<Nat> {
        seq::reverse_bits(n)
    }

    fn palindrome_p(&self, n: u64) -> Result<Nat> {
        seq::palindrome_p(n)
    }

    fn palindrome_p_div3(&self, n: u64) -> Result<Nat> {
        seq::palindrome_p_div3(n)
    }

    /// B(n) on machine words.
    fn seq_b(&self, n: u64) -> u64 {
        seq::seq_b_fast(n)
    }

    fn b_is_zero(&self, n: u64) -> Result<bool> {
        words::b_is_zero(n)
    }

    fn run_start_indices(&self, max_bits: u32) -> Result<Vec<u64>> {
        words::run_start_indices(max_bits)
    }

    fn record_run_number(&self, r: u64) -> Result<Nat> {
        runs::record_run_number(r)
    }

    fn s_count(&self, n: u64) -> Result<Nat> {
        seq::s_count(n)
    }

    fn legal_moves(&self, s: &RingState) -> Vec<RingState> {
        puzzles::legal_moves(s)
    }

    fn ring_distance(&self, a: &RingState, b: &RingState) -> Result<Nat> {
        puzzles::ring_distance(a, b)
    }

    fn gray_encode(&self, i: u64, n: usize) -> Result<GrayWord> {
        puzzles::gray_encode(i, n)
    }

    fn gray_index(&self, w: &GrayWord) -> Nat {
        puzzles::gray_index(w)
    }

    fn enum_partitions(&self, people: usize) -> Result<Vec<AffinityPartition>> {
        colorings::enum_partitions(people)
    }

    fn enum_linear_strings(&self, len: usize) -> Result<Vec<Vec<Group>>> {
        colorings::enum_linear_strings(len)
    }

    fn enum_bubbles(&self, arity: usize, based: bool) -> Result<Vec<Bubble>> {
        colorings::enum_bubbles(arity, based)
    }

    fn partition_to_bubble(&self, p: &AffinityPartition) -> Result<Bubble> {
        colorings::partition_to_bubble(p)
    }

    fn bubble_to_partition(&self, b: &Bubble) -> Result<AffinityPartition> {
        colorings::bubble_to_partition(b)
    }
}

/// The library as shipped.
#[derive(Debug, Clone, Copy, Default)]
pub struct Reference;

impl Subject for Reference {}

/// The library with one planted fault aimed at a single claim. Running
/// that claim against it must fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mutant {
    target: ClaimId,
}

impl Mutant {
    pub fn for_claim(target: ClaimId) -> Self {
        Self { target }
    }

    pub fn target(&self) -> ClaimId {
        self.target
    }

    fn is(&self, claim: ClaimId) -> bool {
        self.target == claim
    }
}

impl Subject for Mutant {
    fn a_of(&self, n: u64, method: Method) -> Result<Nat> {
        let v = seq::a_of(n, method)?;
        Ok(match (self.target, method) {
            (ClaimId::CharEquiv, Method::Closed) if n == 100 => v + 1u32,
            (ClaimId::Parity, Method::Rec) if n == 77 => v + 1u32,
            _ => v,
        })
    }

    fn triangular(&self, n: u64) -> Result<Nat> {
        if self.is(ClaimId::Theorem3_2) && n == 7 {
            // P(7)/3: a spurious agreement at a non-member of A.
            return Ok(Nat::from(21u32));
        }
        seq::triangular(n)
    }

    fn palindrome_p(&self, n: u64) -> Result<Nat> {
        let v = seq::palindrome_p(n)?;
        Ok(if self.is(ClaimId::Lemma3_1) && n == 777 {
            v + 3u32
        } else {
            v
        })
    }

    fn seq_b(&self, n: u64) -> u64 {
        let v = seq::seq_b_fast(n);
        match self.target {
            ClaimId::Lemma4_1 if n == 42 => 4,
            ClaimId::Lemma4_2 if n == 43 => 1,
            ClaimId::Lemma4_3 if n == 1024 => 0,
            ClaimId::Theorem4_4 if n == 5 => 0,
            _ => v,
        }
    }

    fn b_is_zero(&self, n: u64) -> Result<bool> {
        let v = words::b_is_zero(n)?;
        Ok(if self.is(ClaimId::Lemma4_6) && n == 18 {
            true
        } else {
            v
        })
    }

    fn run_start_indices(&self, max_bits: u32) -> Result<Vec<u64>> {
        let mut v = words::run_start_indices(max_bits)?;
        if self.is(ClaimId::Lemma4_7) {
            v.retain(|&n| n != 39);
        }
        Ok(v)
    }

    fn record_run_number(&self, r: u64) -> Result<Nat> {
        if self.is(ClaimId::Theorem4_8) && r == 8 {
            // 2C(0) + 2C(1) + 2C(3) + 2C(4): a skipped Catalan index.
            let c = seq::catalan;
            return Ok((c(0) + c(1) + c(3) + c(4)) * 2u32);
        }
        runs::record_run_number(r)
    }

    fn s_count(&self, n: u64) -> Result<Nat> {
        let v = seq::s_count(n)?;
        Ok(if self.is(ClaimId::Lemma5_1) && n == 20 {
            v + 1u32
        } else {
            v
        })
    }

    fn legal_moves(&self, s: &RingState) -> Vec<RingState> {
        let mut moves = puzzles::legal_moves(s);
        let n = s.len();
        if self.is(ClaimId::Occurrence1) && n >= 3 {
            // Join the two ends of the path into a cycle.
            let (zero, end) = (RingState::all_off(n), RingState::far_end(n));
            if *s == zero {
                moves.push(end);
            } else if *s == end {
                moves.push(zero);
            }
        }
        moves
    }

    fn gray_encode(&self, i: u64, n: usize) -> Result<GrayWord> {
        if self.is(ClaimId::Occurrence2) && i == 1000 {
            return Ok(GrayWord(RingState::from_index(n, i).rings().clone()));
        }
        puzzles::gray_encode(i, n)
    }

    fn enum_partitions(&self, people: usize) -> Result<Vec<AffinityPartition>> {
        let mut v = colorings::enum_partitions(people)?;
        if self.is(ClaimId::Occurrence3) && people == 9 {
            v.pop();
        }
        Ok(v)
    }

    fn enum_linear_strings(&self, len: usize) -> Result<Vec<Vec<Group>>> {
        let mut v = colorings::enum_linear_strings(len)?;
        if self.is(ClaimId::Lossers) {
            // Admit the two-letter string ABAB...
            v.push(
                (0..len)
                    .map(|i| if i % 2 == 0 { Group::A } else { Group::B })
                    .collect(),
            );
        }
        Ok(v)
    }

    fn enum_bubbles(&self, arity: usize, based: bool) -> Result<Vec<Bubble>> {
        let mut v = colorings::enum_bubbles(arity, based)?;
        if self.is(ClaimId::Theorem5_2) && arity == 7 {
            v.pop();
        }
        Ok(v)
    }

    fn partition_to_bubble(&self, p: &AffinityPartition) -> Result<Bubble> {
        let mut b = colorings::partition_to_bubble(p)?;
        if self.is(ClaimId::Bijection) && p.people() == 6 {
            let last = b.border.last_mut().expect("arity >= 2");
            *last = last.swapped();
        }
        Ok(b)
    }
}
