//! Chinese Rings (baguenaudier) and the binary reflected Gray code.
//!
//! States are written with ring n leftmost and ring 1 rightmost, so the
//! solved-to-fully-loaded path runs 0^n, ..., 1^n, ..., 10^(n-1).
//! Ring 1 can always be toggled; ring k >= 2 can be toggled exactly when
//! ring k-1 is on and rings 1..k-2 are off.

use std::collections::VecDeque;
use std::fmt::{self, Write as _};

use num_traits::Zero;

use crate::error::{domain, Result};
use crate::seq::Nat;
use crate::words::BitWord;

/// Positions of n rings; bit value 1 means the ring is on the bar.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingState {
    rings: BitWord,
}

impl RingState {
    pub fn new(rings: BitWord) -> Result<Self> {
        if rings.is_empty() {
            return Err(domain("a ring state needs at least one ring"));
        }
        Ok(Self { rings })
    }

    pub fn all_off(n: usize) -> Self {
        Self {
            rings: BitWord::repeat(false, n.max(1)),
        }
    }

    pub fn all_on(n: usize) -> Self {
        Self {
            rings: BitWord::repeat(true, n.max(1)),
        }
    }

    /// 1 followed by n-1 zeros: the far end of the state path.
    pub fn far_end(n: usize) -> Self {
        Self::all_off(n).toggle_ring(n.max(1))
    }

    /// State of n rings whose bits spell `index` in binary, ring n as the
    /// most significant bit.
    pub fn from_index(n: usize, index: u64) -> Self {
        let bits = (0..n)
            .rev()
            .map(|i| i < 64 && (index >> i) & 1 == 1)
            .collect();
        Self {
            rings: BitWord::from_bits(bits),
        }
    }

    pub fn index(&self) -> u64 {
        self.rings
            .iter()
            .fold(0, |acc, b| (acc << 1) | u64::from(b))
    }

    pub fn rings(&self) -> &BitWord {
        &self.rings
    }

    pub fn len(&self) -> usize {
        self.rings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rings.is_empty()
    }

    /// Whether ring `k` (1-based, ring 1 rightmost) is on.
    pub fn is_on(&self, k: usize) -> bool {
        self.rings.bits()[self.len() - k]
    }

    pub fn toggle_ring(&self, k: usize) -> Self {
        Self {
            rings: self.rings.toggled(self.len() - k),
        }
    }

    /// Position of this state along the path that starts at 0^n.
    pub fn path_position(&self) -> Nat {
        gray_index(&GrayWord(self.rings.clone()))
    }
}

impl fmt::Display for RingState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.rings.fmt(f)
    }
}

/// Every state one legal move away from `s`.
pub fn legal_moves(s: &RingState) -> Vec<RingState> {
    let mut out = vec![s.toggle_ring(1)];
    if let Some(lowest_on) = (1..=s.len()).find(|&k| s.is_on(k)) {
        if lowest_on < s.len() {
            out.push(s.toggle_ring(lowest_on + 1));
        }
    }
    out
}

/// Number of moves between two states of the same puzzle.
pub fn ring_distance(a: &RingState, b: &RingState) -> Result<Nat> {
    if a.len() != b.len() {
        return Err(domain(format!(
            "states have different ring counts ({} and {})",
            a.len(),
            b.len()
        )));
    }
    let (pa, pb) = (a.path_position(), b.path_position());
    Ok(if pa >= pb { pa - pb } else { pb - pa })
}

/// Breadth-first distance in the graph generated by `moves`, or `None` if
/// `to` is unreachable.
pub fn bfs_distance(
    from: &RingState,
    to: &RingState,
    moves: impl Fn(&RingState) -> Vec<RingState>,
) -> Option<u64> {
    let n = from.len();
    let mut dist = vec![u64::MAX; 1usize << n];
    let mut queue = VecDeque::from([from.clone()]);
    dist[from.index() as usize] = 0;
    while let Some(s) = queue.pop_front() {
        let d = dist[s.index() as usize];
        if &s == to {
            return Some(d);
        }
        for t in moves(&s) {
            let slot = &mut dist[t.index() as usize];
            if *slot == u64::MAX {
                *slot = d + 1;
                queue.push_back(t);
            }
        }
    }
    None
}

/// The states of the n-ring puzzle in path order from 0^n.
pub fn ring_path(n: usize) -> Result<Vec<RingState>> {
    if !(1..=20).contains(&n) {
        return Err(domain(format!(
            "ring path is listed for 1..=20 rings, got {n}"
        )));
    }
    let mut path = vec![RingState::all_off(n)];
    let mut prev: Option<RingState> = None;
    loop {
        let cur = path.last().expect("nonempty");
        let next = legal_moves(cur)
            .into_iter()
            .find(|t| Some(t) != prev.as_ref());
        match next {
            Some(t) if path.len() < 1 << n => {
                prev = Some(cur.clone());
                path.push(t);
            }
            _ => return Ok(path),
        }
    }
}

/// Graphviz rendering of the n-ring state graph.
pub fn state_graph_dot(n: usize) -> Result<String> {
    if !(1..=6).contains(&n) {
        return Err(domain(format!("DOT export supports 1..=6 rings, got {n}")));
    }
    let mut out = format!("graph rings{n} {{\n");
    for i in 0..1u64 << n {
        let s = RingState::from_index(n, i);
        writeln!(out, "  \"{s}\";").unwrap();
    }
    for i in 0..1u64 << n {
        let s = RingState::from_index(n, i);
        for t in legal_moves(&s) {
            if s.index() < t.index() {
                writeln!(out, "  \"{s}\" -- \"{t}\";").unwrap();
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}

/// A codeword of the n-bit binary reflected Gray code. Every n-bit word is
/// one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GrayWord(pub BitWord);

impl GrayWord {
    pub fn word(&self) -> &BitWord {
        &self.0
    }
}

impl fmt::Display for GrayWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The n-bit reflected code in order, built by reflection: prefix 0 to the
/// (n-1)-bit list, then prefix 1 to its reverse.
pub fn gray_code(n: usize) -> Result<Vec<GrayWord>> {
    if !(1..=20).contains(&n) {
        return Err(domain(format!(
            "Gray code lists are built for 1..=20 bits, got {n}"
        )));
    }
    let mut list = vec![BitWord::empty()];
    for _ in 0..n {
        let zero = BitWord::from_bits(vec![false]);
        let one = BitWord::from_bits(vec![true]);
        let mut next: Vec<BitWord> = list.iter().map(|w| zero.concat(w)).collect();
        next.extend(list.iter().rev().map(|w| one.concat(w)));
        list = next;
    }
    Ok(list.into_iter().map(GrayWord).collect())
}

/// The i-th n-bit codeword, i XOR (i >> 1).
pub fn gray_encode(i: u64, n: usize) -> Result<GrayWord> {
    if !(1..=64).contains(&n) || (n < 64 && i >> n != 0) {
        return Err(domain(format!("{i} has no {n}-bit Gray codeword")));
    }
    Ok(GrayWord(RingState::from_index(n, i ^ (i >> 1)).rings))
}

/// Position of `w` in the reflected code: bit j of the index is the parity
/// of the codeword's bits at or above j.
pub fn gray_index(w: &GrayWord) -> Nat {
    let mut parity = false;
    let mut index = Nat::zero();
    for b in w.0.iter() {
        parity ^= b;
        index <<= 1;
        if parity {
            index += 1u32;
        }
    }
    index
}
