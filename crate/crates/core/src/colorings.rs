//! Circular affinity partitions (proper 3-colorings of a cycle with two
//! adjacent seats fixed to A and B) and two-colored bubbles, with the
//! step-direction bijection between them.
//!
//! Walking the seats in index order, a step A->B, B->C or C->A is
//! "forward" and becomes a blue edge; A->C, B->A or C->B is "backward" and
//! becomes an uncolored edge. The A->B step from seat 0 to seat 1 is the
//! (blue) base, and the remaining steps, ending with the wrap back to
//! seat 0, form the border.

use std::fmt;
use std::str::FromStr;

use crate::claims::{self, Reference};
use crate::error::{domain, Error, Result};
use crate::report::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Group {
    A,
    B,
    C,
}

impl Group {
    pub const ALL: [Group; 3] = [Group::A, Group::B, Group::C];

    fn index(self) -> u8 {
        self as u8
    }

    fn from_index(i: u8) -> Self {
        Self::ALL[(i % 3) as usize]
    }

    pub fn forward(self) -> Self {
        Self::from_index(self.index() + 1)
    }

    pub fn backward(self) -> Self {
        Self::from_index(self.index() + 2)
    }

    pub fn as_char(self) -> char {
        match self {
            Group::A => 'A',
            Group::B => 'B',
            Group::C => 'C',
        }
    }
}

/// Seats around a circular table assigned to three groups; seat 0 is in A,
/// seat 1 in B, neighbours differ (cyclically) and every group is used.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinityPartition {
    seats: Vec<Group>,
}

impl AffinityPartition {
    pub fn new(seats: Vec<Group>) -> Result<Self> {
        let m = seats.len();
        if m < 3 {
            return Err(domain(format!(
                "a partition needs at least 3 seats, got {m}"
            )));
        }
        if seats[0] != Group::A || seats[1] != Group::B {
            return Err(domain("seats 0 and 1 must be in groups A and B"));
        }
        if let Some(i) = (0..m).find(|&i| seats[i] == seats[(i + 1) % m]) {
            return Err(domain(format!(
                "seats {i} and {} are neighbours in the same group",
                (i + 1) % m
            )));
        }
        if !seats.contains(&Group::C) {
            return Err(domain("group C is empty"));
        }
        Ok(Self { seats })
    }

    pub fn seats(&self) -> &[Group] {
        &self.seats
    }

    pub fn people(&self) -> usize {
        self.seats.len()
    }
}

impl fmt::Display for AffinityPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.seats
            .iter()
            .try_for_each(|g| write!(f, "{}", g.as_char()))
    }
}

impl FromStr for AffinityPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let seats = s
            .chars()
            .map(|c| match c {
                'A' => Ok(Group::A),
                'B' => Ok(Group::B),
                'C' => Ok(Group::C),
                other => Err(domain(format!("`{other}` is not a group"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(seats)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeColor {
    Blue,
    Uncolored,
}

impl EdgeColor {
    pub fn as_char(self) -> char {
        match self {
            EdgeColor::Blue => 'b',
            EdgeColor::Uncolored => 'u',
        }
    }

    pub fn swapped(self) -> Self {
        match self {
            EdgeColor::Blue => EdgeColor::Uncolored,
            EdgeColor::Uncolored => EdgeColor::Blue,
        }
    }
}

/// A polygon reduced to its colors: a base edge (blue when `based`) and a
/// border of `arity` further edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bubble {
    pub based: bool,
    pub border: Vec<EdgeColor>,
}

impl Bubble {
    pub fn arity(&self) -> usize {
        self.border.len()
    }

    fn base_color(&self) -> EdgeColor {
        if self.based {
            EdgeColor::Blue
        } else {
            EdgeColor::Uncolored
        }
    }

    /// Membership in the suboperad generated by the two arity-2 triangles:
    /// the number of border edges matching the base color is congruent to
    /// 2 * arity + 1 (mod 3), and two consecutive border edges agree.
    pub fn is_admissible(&self) -> bool {
        let n = self.arity();
        if n < 2 {
            return false;
        }
        let matching = self
            .border
            .iter()
            .filter(|&&c| c == self.base_color())
            .count();
        matching % 3 == (2 * n + 1) % 3 && self.border.windows(2).any(|p| p[0] == p[1])
    }
}

/// Text form: base color, `|`, then the border, e.g. `b|bub`.
impl fmt::Display for Bubble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|", self.base_color().as_char())?;
        self.border
            .iter()
            .try_for_each(|c| write!(f, "{}", c.as_char()))
    }
}

impl FromStr for Bubble {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let color = |c| match c {
            'b' => Ok(EdgeColor::Blue),
            'u' => Ok(EdgeColor::Uncolored),
            other => Err(domain(format!("`{other}` is not an edge color"))),
        };
        let (base, border) = s
            .split_once('|')
            .ok_or_else(|| domain(format!("bubble `{s}` lacks the `|` base marker")))?;
        let mut base_chars = base.chars();
        let based = match (base_chars.next().map(color), base_chars.next()) {
            (Some(Ok(c)), None) => c == EdgeColor::Blue,
            _ => return Err(domain(format!("bad base color `{base}`"))),
        };
        let border = border.chars().map(color).collect::<Result<Vec<_>>>()?;
        Ok(Bubble { based, border })
    }
}

/// Every affinity partition of `people` seats, lexicographic in A < B < C.
pub fn enum_partitions(people: usize) -> Result<Vec<AffinityPartition>> {
    if people < 3 {
        return Err(domain(format!(
            "partitions need at least 3 people, got {people}"
        )));
    }
    let mut out = Vec::new();
    let mut seats = vec![Group::A, Group::B];
    extend_seats(&mut seats, people, true, &mut out);
    Ok(out)
}

/// Depth-first extension of a proper seat string. With `circular` the last
/// seat must also differ from seat 0.
fn extend_seats(
    seats: &mut Vec<Group>,
    len: usize,
    circular: bool,
    out: &mut Vec<AffinityPartition>,
) {
    if seats.len() == len {
        let closes = !circular || seats[len - 1] != seats[0];
        if closes && seats.contains(&Group::C) {
            out.push(AffinityPartition {
                seats: seats.clone(),
            });
        }
        return;
    }
    let last = *seats.last().expect("seeded with AB");
    for g in Group::ALL {
        if g != last {
            seats.push(g);
            extend_seats(seats, len, circular, out);
            seats.pop();
        }
    }
}

/// Linear strings of `len` letters starting AB, with no two adjacent letters
/// equal and all three letters present.
pub fn enum_linear_strings(len: usize) -> Result<Vec<Vec<Group>>> {
    if len < 3 {
        return Err(domain(format!(
            "linear strings need at least 3 letters, got {len}"
        )));
    }
    let mut out = Vec::new();
    let mut seats = vec![Group::A, Group::B];
    extend_seats(&mut seats, len, false, &mut out);
    Ok(out.into_iter().map(|p| p.seats).collect())
}

/// Every admissible bubble of the given arity, lexicographic in
/// blue < uncolored.
pub fn enum_bubbles(arity: usize, based: bool) -> Result<Vec<Bubble>> {
    if !(2..=24).contains(&arity) {
        return Err(domain(format!(
            "bubble arity must lie in 2..=24, got {arity}"
        )));
    }
    Ok((0u32..1 << arity)
        .map(|mask| Bubble {
            based,
            border: (0..arity)
                .rev()
                .map(|i| {
                    if (mask >> i) & 1 == 0 {
                        EdgeColor::Blue
                    } else {
                        EdgeColor::Uncolored
                    }
                })
                .collect(),
        })
        .filter(Bubble::is_admissible)
        .collect())
}

/// Colors each seat-to-seat step by its direction in the cycle A->B->C->A.
pub fn partition_to_bubble(p: &AffinityPartition) -> Result<Bubble> {
    let p = AffinityPartition::new(p.seats.clone())?;
    let m = p.people();
    let step = |i: usize| {
        let (from, to) = (p.seats[i], p.seats[(i + 1) % m]);
        if to == from.forward() {
            EdgeColor::Blue
        } else {
            EdgeColor::Uncolored
        }
    };
    Ok(Bubble {
        based: true,
        border: (1..m).map(step).collect(),
    })
}

/// Rebuilds the seats from a based bubble by walking forward on blue and
/// backward on uncolored edges, starting from A across the base.
pub fn bubble_to_partition(b: &Bubble) -> Result<AffinityPartition> {
    if !b.based {
        return Err(Error::Inversion(format!("{b} is not based")));
    }
    let mut seats = vec![Group::A];
    let mut cur = Group::A;
    let steps = std::iter::once(&EdgeColor::Blue).chain(&b.border);
    for color in steps {
        cur = match color {
            EdgeColor::Blue => cur.forward(),
            EdgeColor::Uncolored => cur.backward(),
        };
        seats.push(cur);
    }
    if seats.pop() != Some(Group::A) {
        return Err(Error::Inversion(format!(
            "{b} does not close the cycle at A"
        )));
    }
    AffinityPartition::new(seats).map_err(|e| Error::Inversion(format!("{b}: {e}")))
}

/// Exhaustive check that the two maps are inverse bijections between
/// partitions of m people and based bubbles of arity m - 1, 3 <= m <= people_max.
pub fn verify_bijection(people_max: usize) -> Report {
    claims::verify_bijection(&Reference, people_max)
}
