use std::collections::{BTreeSet, HashSet};
use std::fmt::Display;

use num_integer::Integer;
use num_traits::Zero;

use crate::colorings::{AffinityPartition, Bubble, Group};
use crate::error::Result;
use crate::puzzles::{self, GrayWord, RingState};
use crate::report::{Report, ReportBuilder};
use crate::runs::{self, RecordTable};
use crate::seq::{self, pow2, Method, Nat};
use crate::words::{self, BitWord};

use super::{ClaimId, Subject};

/// Unwraps `r`, logging an error as a failed check.
fn got<T>(b: &mut ReportBuilder, input: impl Display, r: Result<T>) -> Option<T> {
    match r {
        Ok(v) => Some(v),
        Err(e) => {
            b.fail(input, "a value", format!("error: {e}"));
            None
        }
    }
}

fn small(v: &Nat) -> u64 {
    seq::nat_to_u64(v).expect("value fits a machine word at the supported bounds")
}

/// Terms A(1..) that do not exceed `limit`, via the `rec` route.
fn a_terms_up_to(s: &dyn Subject, limit: u64) -> Vec<u64> {
    (1..)
        .map(|k| {
            s.a_of(k, Method::Rec)
                .map(|v| small(&v))
                .unwrap_or(u64::MAX)
        })
        .take_while(|&v| v <= limit)
        .collect()
}

fn a_small(s: &dyn Subject, k: u64) -> u64 {
    s.a_of(k, Method::Rec)
        .map(|v| small(&v))
        .unwrap_or(u64::MAX)
}

pub fn verify_char_equiv(s: &dyn Subject, max_n: u64) -> Report {
    let mut b = ReportBuilder::new(ClaimId::CharEquiv.as_str(), format!("1 <= n <= {max_n}"));
    let mut prev: Option<Nat> = None;
    let mut prev2: Option<Nat> = None;
    for n in 1..=max_n {
        let Some(rec) = got(&mut b, format!("A({n}) rec"), s.a_of(n, Method::Rec)) else {
            continue;
        };
        for m in &Method::ALL[1..] {
            if let Some(v) = got(&mut b, format!("A({n}) {m}"), s.a_of(n, *m)) {
                b.check_eq(format!("A({n}) {m} vs rec"), &rec, &v);
            }
        }
        if let Some(v) = got(
            &mut b,
            format!("A({n}) parity-split"),
            seq::a_parity_split(n),
        ) {
            b.check_eq(format!("A({n}) parity-split vs rec"), &rec, &v);
        }
        if let Some(v) = got(&mut b, format!("A({n}) floor"), seq::a_floor_two_thirds(n)) {
            b.check_eq(format!("A({n}) floor(2^(n+1)/3) vs rec"), &rec, &v);
        }
        if let Some(p) = &prev {
            b.check_eq(format!("A({n}) + A({})", n - 1), pow2(n) - 1u32, &rec + p);
        }
        if let Some(p2) = &prev2 {
            b.check_eq(format!("A({n}) - A({})", n - 2), pow2(n - 1), &rec - p2);
        }
        prev2 = prev.replace(rec);
    }
    b.finish()
}

pub fn verify_parity(s: &dyn Subject, max_n: u64) -> Report {
    let mut b = ReportBuilder::new(ClaimId::Parity.as_str(), format!("1 <= n <= {max_n}"));
    for n in 1..=max_n {
        if let Some(v) = got(&mut b, format!("A({n})"), s.a_of(n, Method::Rec)) {
            let parity = if v.is_odd() { "odd" } else { "even" };
            let want = if n % 2 == 1 { "odd" } else { "even" };
            b.check_eq(format!("A({n}) = {v}"), want, parity);
        }
    }
    b.finish()
}

/// P(n) = n * 2^k + Rev(n) against concatenating the binary form of n with
/// its mirror image.
pub fn verify_palindrome_formula(s: &dyn Subject, max_n: u64) -> Report {
    let mut b = ReportBuilder::new(ClaimId::Lemma3_1.as_str(), format!("1 <= n <= {max_n}"));
    for n in 1..=max_n {
        let digits = format!("{n:b}");
        let mirrored: String = digits.chars().rev().collect();
        let palindrome = format!("{digits}{mirrored}");
        let oracle = Nat::parse_bytes(palindrome.as_bytes(), 2).expect("binary digits");
        if let Some(k) = got(&mut b, format!("bit_length({n})"), s.bit_length(n)) {
            b.check_eq(format!("bit_length({n})"), digits.len() as u32, k);
        }
        if let Some(r) = got(&mut b, format!("Rev({n})"), s.reverse_bits(n)) {
            let want = Nat::parse_bytes(mirrored.as_bytes(), 2).expect("binary digits");
            b.check_eq(format!("Rev({n})"), want, r);
        }
        if let Some(p) = got(&mut b, format!("P({n})"), s.palindrome_p(n)) {
            b.check((&p % 3u32).is_zero(), format!("P({n}) mod 3"), 0, &p % 3u32);
            b.check_eq(format!("P({n})"), oracle, p);
        }
    }
    b.finish()
}

/// T(n) = P(n)/3 holds exactly on the terms of A, with the four cases of the
/// argument checked individually.
pub fn verify_triangular_palindromes(s: &dyn Subject, max_n: u64) -> Report {
    let mut b = ReportBuilder::new(ClaimId::Theorem3_2.as_str(), format!("1 <= n <= {max_n}"));
    let members = a_terms_up_to(s, max_n);
    let member_set: HashSet<u64> = members.iter().copied().collect();
    let mut agreements = Vec::new();
    for n in 1..=max_n {
        let (Some(t), Some(p3), Some(rev)) = (
            got(&mut b, format!("T({n})"), s.triangular(n)),
            got(&mut b, format!("P({n})/3"), s.palindrome_p_div3(n)),
            got(&mut b, format!("Rev({n})"), s.reverse_bits(n)),
        ) else {
            continue;
        };
        if t == p3 {
            agreements.push(n);
        }
        let is_member = member_set.contains(&n);
        b.check(
            (t == p3) == is_member,
            format!("n = {n}"),
            if is_member {
                "T(n) = P(n)/3"
            } else {
                "T(n) != P(n)/3"
            },
            format!("T(n) = {t}, P(n)/3 = {p3}"),
        );
        // Case split on k = bit length of n: A(k) <= ... compared to n.
        let k = 64 - n.leading_zeros() as u64;
        let ak = a_small(s, k);
        let nat_n = Nat::from(n);
        if n == ak {
            let want_rev = if k % 2 == 1 {
                nat_n.clone()
            } else {
                &nat_n / 2u32
            };
            b.check_eq(format!("Rev(A({k})) = Rev({n})"), want_rev, rev);
        } else if n < ak {
            b.check(
                p3 > t,
                format!("2^{} <= n = {n} < A({k})", k - 1),
                "P(n)/3 > T(n)",
                format!("{p3} vs {t}"),
            );
        } else {
            b.check(
                p3 < t,
                format!("A({k}) < n = {n} < 2^{k}"),
                "P(n)/3 < T(n)",
                format!("{p3} vs {t}"),
            );
        }
    }
    let shown: Vec<String> = agreements.iter().take(24).map(u64::to_string).collect();
    b.note(format!(
        "T(n) = P(n)/3 at {} indices: {}{}",
        agreements.len(),
        shown.join(", "),
        if agreements.len() > shown.len() {
            ", ..."
        } else {
            ""
        }
    ));
    b.finish()
}

pub fn verify_b_at_a(s: &dyn Subject, max_k: u32) -> Report {
    let mut b = ReportBuilder::new(ClaimId::Lemma4_1.as_str(), format!("1 <= k <= {max_k}"));
    for k in 1..=max_k as u64 {
        let a = a_small(s, k);
        b.check_eq(
            format!("B(A({k})) = B({a})"),
            if k % 2 == 1 { 1 } else { 2 },
            s.seq_b(a),
        );
    }
    b.finish()
}

pub fn verify_b_after_a(s: &dyn Subject, max_k: u32) -> Report {
    let mut b = ReportBuilder::new(ClaimId::Lemma4_2.as_str(), format!("2 <= k <= {max_k}"));
    for k in 2..=max_k as u64 {
        let n = a_small(s, k) + 1;
        b.check_eq(format!("B(A({k}) + 1) = B({n})"), 0, s.seq_b(n));
    }
    b.finish()
}

pub fn verify_b_at_powers(s: &dyn Subject, max_k: u32) -> Report {
    let mut b = ReportBuilder::new(ClaimId::Lemma4_3.as_str(), format!("0 <= k <= {max_k}"));
    for k in 0..=max_k {
        b.check_eq(format!("B(2^{k})"), 1u64 << k, s.seq_b(1 << k));
    }
    b.finish()
}

/// B vanishes on [A(k)+1, 2^k - 1] with nonzero neighbours, the run has
/// length A(k-1), and the record runs are exactly these spans.
pub fn verify_zero_run_spans(s: &dyn Subject, max_k: u32) -> Report {
    let mut b = ReportBuilder::new(ClaimId::Theorem4_4.as_str(), format!("2 <= k <= {max_k}"));
    let runs = runs::extract_runs_with(max_k, |n| s.seq_b(n));
    let mut expected_records = Vec::new();
    for k in 2..=max_k as u64 {
        let (ak, top) = (a_small(s, k), (1u64 << k) - 1);
        let nonzero = (ak + 1..=top).find(|&n| s.seq_b(n) != 0);
        let input = format!("B on [{}, {top}], k = {k}", ak + 1);
        match nonzero {
            Some(n) => b.check(false, input, 0, format!("B({n}) = {}", s.seq_b(n))),
            None => b.check(true, input, 0, 0),
        };
        b.check(
            s.seq_b(ak) != 0,
            format!("B(A({k})) = B({ak})"),
            "nonzero",
            0,
        );
        b.check_eq(format!("B(2^{k})"), top + 1, s.seq_b(top + 1));
        b.check_eq(
            format!("span length for k = {k}"),
            a_small(s, k - 1),
            top - ak,
        );
        expected_records.push((ak + 1, top - ak));
    }
    let found: Vec<(u64, u64)> = RecordTable::from_runs(&runs)
        .records
        .iter()
        .map(|e| (e.run.start, e.run.length))
        .collect();
    for i in 0..found.len().max(expected_records.len()) {
        let show = |r: Option<&(u64, u64)>| match r {
            Some((start, len)) => format!("run at {start} of length {len}"),
            None => "no record".to_string(),
        };
        let (want, have) = (expected_records.get(i), found.get(i));
        b.check(
            want == have,
            format!("record rank {}", i + 1),
            show(want),
            show(have),
        );
    }
    b.finish()
}

/// The bit-scan zero test agrees with B, and the machine-word B agrees with
/// the arbitrary-precision recursion and the word-form scan.
pub fn verify_zero_predicate(s: &dyn Subject, max_bits: u32) -> Report {
    let routes_bits = max_bits.min(16);
    let mut b = ReportBuilder::new(
        ClaimId::Lemma4_6.as_str(),
        format!("1 <= n < 2^{max_bits} (B routes cross-checked below 2^{routes_bits})"),
    );
    for n in 1..1u64 << max_bits {
        if let Some(z) = got(&mut b, format!("n = {n}"), s.b_is_zero(n)) {
            let v = s.seq_b(n);
            b.check(
                z == (v == 0),
                format!("n = {n} ({:b})", n),
                format!("B(n) = 0 is {}", v == 0),
                format!("predicate says {z}"),
            );
        }
    }
    for n in 1..1u64 << routes_bits {
        let fast = Nat::from(s.seq_b(n));
        if let Some(v) = got(&mut b, format!("B({n})"), seq::seq_b(n)) {
            b.check_eq(format!("B({n}) recursion vs machine word"), v, fast.clone());
        }
        if let Some(v) = got(&mut b, format!("B({n})"), seq::seq_b_scan(n)) {
            b.check_eq(format!("B({n}) word scan vs machine word"), v, fast);
        }
    }
    b.finish()
}

fn join(v: &[u64]) -> String {
    v.iter().map(u64::to_string).collect::<Vec<_>>().join(", ")
}

/// Run starts from the 1w1 / 1w10 generator equal the starts found by
/// scanning B.
pub fn verify_run_starts(s: &dyn Subject, max_bits: u32) -> Report {
    let mut b = ReportBuilder::new(ClaimId::Lemma4_7.as_str(), format!("2 <= n < 2^{max_bits}"));
    let Some(generated) = got(&mut b, "generator", s.run_start_indices(max_bits)) else {
        return b.finish();
    };
    let scanned: Vec<u64> = (2..1u64 << max_bits)
        .filter(|&n| s.seq_b(n) == 0 && s.seq_b(n - 1) != 0)
        .collect();
    b.check(
        generated.windows(2).all(|p| p[0] < p[1]),
        "generator order",
        "strictly increasing",
        "unsorted",
    );
    let (g, sc): (BTreeSet<u64>, BTreeSet<u64>) = (
        generated.iter().copied().collect(),
        scanned.iter().copied().collect(),
    );
    for n in sc.difference(&g) {
        b.fail(
            format!("n = {n} ({n:b})"),
            "generated (run starts here)",
            "missing",
        );
    }
    for n in g.difference(&sc) {
        b.fail(
            format!("n = {n} ({n:b})"),
            "not generated (no run starts here)",
            "generated",
        );
    }
    b.check(
        g == sc,
        "generator vs scan",
        "equal sets",
        format!("{} vs {}", g.len(), sc.len()),
    );
    // Listed by generating word (λ, 01, 0011), not numerically.
    let prefix = [3u64, 6, 11, 22, 39, 78];
    let shown = prefix.iter().take_while(|&&n| n < 1 << max_bits).count();
    let by_word: Vec<u64> = words::run_start_families(max_bits)
        .unwrap_or_default()
        .into_iter()
        .flat_map(|f| std::iter::once(f.odd).chain(f.even))
        .take(shown)
        .collect();
    b.check_eq(
        "first run starts by generating word",
        join(&prefix[..shown]),
        join(&by_word),
    );
    for n in &prefix[..shown] {
        b.check(g.contains(n), format!("n = {n}"), "generated", "missing");
    }
    for len in 2..=max_bits {
        // 1w1 has 2j + 2 bits and 1w10 has 2j + 3, with C(j) choices of w.
        let j = (len as u64 - 2) / 2;
        let count = generated
            .iter()
            .filter(|&&n| 64 - n.leading_zeros() == len)
            .count();
        b.check_eq(
            format!("run starts with {len} bits"),
            seq::catalan(j),
            Nat::from(count),
        );
    }
    b.finish()
}

/// The r-th record run is run number A155051(r - 1) and has length A(r).
pub fn verify_record_numbering(s: &dyn Subject, max_rank: u64, max_bits: u32) -> Report {
    let mut b = ReportBuilder::new(
        ClaimId::Theorem4_8.as_str(),
        format!("1 <= rank <= {max_rank}, runs below 2^{max_bits}"),
    );
    let runs = runs::extract_runs_with(max_bits, |n| s.seq_b(n));
    let table = RecordTable::from_runs(&runs);
    for r in 1..=max_rank {
        let Some(ord) = got(
            &mut b,
            format!("A155051({})", r - 1),
            s.record_run_number(r),
        ) else {
            continue;
        };
        let Some(record) = table.rank(r) else {
            b.fail(
                format!("record rank {r}"),
                "a record run",
                "none below bound",
            );
            continue;
        };
        b.check_eq(
            format!("ordinal of record rank {r}"),
            Nat::from(record.ordinal),
            ord.clone(),
        );
        let length = usize::try_from(&ord)
            .ok()
            .and_then(|i| runs.get(i.checked_sub(1)?))
            .map(|run| run.length);
        match length {
            Some(len) => {
                let want = s.a_of(r, Method::Rec).map(|v| small(&v)).unwrap_or(0);
                b.check_eq(format!("R(A155051({})) = R({ord})", r - 1), want, len);
            }
            None => b.fail(format!("R({ord})"), "a run", "none below bound"),
        }
    }
    let listed = [1u64, 2, 3, 4, 6, 8, 13, 18];
    let have: Vec<u64> = table
        .records
        .iter()
        .take(listed.len())
        .map(|e| e.run.ordinal)
        .collect();
    if have.len() == listed.len() {
        b.check_eq("record ordinals, ranks 1..8", join(&listed), join(&have));
    }
    let c = seq::catalan;
    b.note(format!(
        "rank 8 is run {} = 2C(0)+2C(1)+2C(2)+2C(3); the expression 2C(0)+2C(1)+2C(3)+2C(4) evaluates to {} instead",
        (c(0) + c(1) + c(2) + c(3)) * 2u32,
        (c(0) + c(1) + c(3) + c(4)) * 2u32
    ));
    b.finish()
}

/// S(n) + S(n+1) = 2^n, S against brute force, and exactly one alternating
/// admissible string for odd n (none for even n).
pub fn verify_string_count(s: &dyn Subject, max_n: u64) -> Report {
    let mut b = ReportBuilder::new(ClaimId::Lemma5_1.as_str(), format!("1 <= n <= {max_n}"));
    for n in 1..=max_n {
        if let (Some(a), Some(c)) = (
            got(&mut b, format!("S({n})"), s.s_count(n)),
            got(&mut b, format!("S({})", n + 1), s.s_count(n + 1)),
        ) {
            b.check_eq(format!("S({n}) + S({})", n + 1), pow2(n), a + c);
        }
    }
    for n in 1..=max_n.min(16) as u32 {
        let residue = (2 * n + 1) % 3;
        let admissible = |w: &u64| w.count_ones() % 3 == residue;
        let brute = (0u64..1 << n).filter(admissible).count();
        if let Some(v) = got(&mut b, format!("S({n})"), s.s_count(n as u64)) {
            b.check_eq(format!("S({n}) vs brute force"), Nat::from(brute), v);
        }
        let alternating = [0x5555_5555u64, 0xAAAA_AAAA]
            .iter()
            .map(|m| m & ((1 << n) - 1))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .filter(admissible)
            .count();
        b.check_eq(
            format!("alternating admissible strings, n = {n}"),
            (n % 2) as usize,
            alternating,
        );
    }
    b.finish()
}

/// Based and unbased bubble counts equal A(n - 1) and S(n) minus the
/// alternating string.
pub fn verify_bubble_counts(s: &dyn Subject, max_arity: usize) -> Report {
    let mut b = ReportBuilder::new(
        ClaimId::Theorem5_2.as_str(),
        format!("2 <= arity <= {max_arity}"),
    );
    let mut counts = Vec::new();
    for n in 2..=max_arity {
        let (Some(based), Some(unbased)) = (
            got(&mut b, format!("based, arity {n}"), s.enum_bubbles(n, true)),
            got(
                &mut b,
                format!("unbased, arity {n}"),
                s.enum_bubbles(n, false),
            ),
        ) else {
            continue;
        };
        for bubble in based.iter().chain(&unbased) {
            b.check(
                bubble.is_admissible() && bubble.arity() == n,
                bubble,
                "admissible",
                "inadmissible",
            );
        }
        let distinct: HashSet<&Bubble> = based.iter().chain(&unbased).collect();
        b.check_eq(
            format!("distinct bubbles, arity {n}"),
            based.len() + unbased.len(),
            distinct.len(),
        );
        if let Ok(a) = s.a_of(n as u64 - 1, Method::Rec) {
            b.check_eq(
                format!("based bubbles of arity {n}"),
                a.clone(),
                Nat::from(based.len()),
            );
            b.check_eq(
                format!("unbased bubbles of arity {n}"),
                a,
                Nat::from(unbased.len()),
            );
        }
        if let Some(sn) = got(&mut b, format!("S({n})"), s.s_count(n as u64)) {
            let alternating = Nat::from(n % 2);
            b.check_eq(
                format!("S({n}) - alternating, arity {n}"),
                sn - alternating,
                Nat::from(based.len()),
            );
        }
        counts.push(based.len() as u64);
    }
    for (i, pair) in counts.windows(2).enumerate() {
        let n = i as u32 + 2;
        b.check_eq(
            format!("bubbles of arity {n} and {}", n + 1),
            (1u64 << n) - 1,
            pair[0] + pair[1],
        );
    }
    b.finish()
}

/// partition_to_bubble and bubble_to_partition are mutually inverse
/// bijections between partitions of m people and based bubbles of arity
/// m - 1.
pub fn verify_bijection(s: &dyn Subject, people_max: usize) -> Report {
    let mut b = ReportBuilder::new(
        ClaimId::Bijection.as_str(),
        format!("3 <= people <= {people_max}"),
    );
    for m in 3..=people_max {
        let (Some(parts), Some(bubbles)) = (
            got(&mut b, format!("partitions of {m}"), s.enum_partitions(m)),
            got(
                &mut b,
                format!("bubbles of arity {}", m - 1),
                s.enum_bubbles(m - 1, true),
            ),
        ) else {
            continue;
        };
        let mut images = BTreeSet::new();
        for p in &parts {
            let Some(img) = got(&mut b, p, s.partition_to_bubble(p)) else {
                continue;
            };
            b.check(
                img.based && img.arity() == m - 1 && img.is_admissible(),
                format!("image of {p}"),
                "admissible based bubble",
                &img,
            );
            if let Some(back) = got(
                &mut b,
                format!("inverse of {img}"),
                s.bubble_to_partition(&img),
            ) {
                b.check_eq(
                    format!("{p} -> {img} -> back"),
                    p.to_string(),
                    back.to_string(),
                );
            }
            b.check(
                images.insert(img.clone()),
                format!("image of {p}"),
                "unused bubble",
                format!("{img} already hit"),
            );
        }
        let target: BTreeSet<Bubble> = bubbles.iter().cloned().collect();
        b.check(
            images == target,
            format!("image for {m} people"),
            format!("{} bubbles", target.len()),
            format!(
                "{} bubbles, {} shared",
                images.len(),
                images.intersection(&target).count()
            ),
        );
        for bubble in &bubbles {
            if let Some(p) = got(
                &mut b,
                format!("inverse of {bubble}"),
                s.bubble_to_partition(bubble),
            ) {
                if let Some(img) = got(&mut b, &p, s.partition_to_bubble(&p)) {
                    b.check_eq(
                        format!("{bubble} -> {p} -> back"),
                        bubble.to_string(),
                        img.to_string(),
                    );
                }
            }
        }
        if let Ok(a) = s.a_of(m as u64 - 2, Method::Rec) {
            b.check_eq(
                format!("partitions of {m}"),
                a.clone(),
                Nat::from(parts.len()),
            );
            b.check_eq(
                format!("based bubbles of arity {}", m - 1),
                a,
                Nat::from(bubbles.len()),
            );
        }
        if m == 6 {
            b.note(format!(
                "6 people: {} partitions <-> {} bubbles of arity 5",
                parts.len(),
                bubbles.len()
            ));
        }
    }
    b.finish()
}

/// The n-ring state graph is a simple path from 0^n to 10^(n-1), and the
/// move counts between 0^n, 1^n and 10^(n-1) are A(n) and A(n-1).
pub fn verify_chinese_rings(s: &dyn Subject, max_n: usize) -> Report {
    let mut b = ReportBuilder::new(
        ClaimId::Occurrence1.as_str(),
        format!("1 <= rings <= {max_n}"),
    );
    for n in 1..=max_n {
        let states = 1u64 << n;
        let mut edges = 0u64;
        let mut ends = Vec::new();
        for i in 0..states {
            let st = RingState::from_index(n, i);
            let moves = s.legal_moves(&st);
            for t in &moves {
                b.check_eq(
                    format!("move {st} -> {t}: bits changed"),
                    1,
                    (st.index() ^ t.index()).count_ones(),
                );
                b.check(
                    s.legal_moves(t).contains(&st),
                    format!("move {st} -> {t}"),
                    "reversible",
                    "one-way",
                );
            }
            let distinct: HashSet<&RingState> = moves.iter().collect();
            b.check_eq(
                format!("parallel moves at {st}"),
                moves.len(),
                distinct.len(),
            );
            match moves.len() {
                1 => ends.push(st.to_string()),
                2 => {}
                d => b.fail(format!("degree of {st}"), "1 or 2", d),
            }
            edges += moves.len() as u64;
        }
        let (zero, ones, end) = (
            RingState::all_off(n),
            RingState::all_on(n),
            RingState::far_end(n),
        );
        b.check_eq(format!("edges, {n} rings"), 2 * (states - 1), edges);
        b.check_eq(
            format!("path ends, {n} rings"),
            format!("{zero}, {end}"),
            ends.join(", "),
        );
        let reach = bfs_reach(s, &zero);
        b.check_eq(format!("states reachable from {zero}"), states, reach);

        let a_n = s.a_of(n as u64, Method::Rec).ok();
        let bfs = puzzles::bfs_distance(&zero, &ones, |t| s.legal_moves(t)).map(Nat::from);
        b.check_eq(
            format!("BFS moves {zero} -> {ones}"),
            show(&a_n),
            show(&bfs),
        );
        if let Some(d) = got(
            &mut b,
            format!("dist({zero}, {ones})"),
            s.ring_distance(&zero, &ones),
        ) {
            b.check_eq(
                format!("moves {zero} -> {ones}"),
                show(&a_n),
                show(&Some(d)),
            );
        }
        if n >= 2 {
            let a_prev = s.a_of(n as u64 - 1, Method::Rec).ok();
            let bfs = puzzles::bfs_distance(&ones, &end, |t| s.legal_moves(t)).map(Nat::from);
            b.check_eq(
                format!("BFS moves {ones} -> {end}"),
                show(&a_prev),
                show(&bfs),
            );
            if let Some(d) = got(
                &mut b,
                format!("dist({ones}, {end})"),
                s.ring_distance(&ones, &end),
            ) {
                b.check_eq(
                    format!("moves {ones} -> {end}"),
                    show(&a_prev),
                    show(&Some(d)),
                );
            }
        }
    }
    b.finish()
}

fn show(v: &Option<Nat>) -> String {
    v.as_ref()
        .map_or_else(|| "none".to_string(), Nat::to_string)
}

fn bfs_reach(s: &dyn Subject, from: &RingState) -> u64 {
    let mut seen = HashSet::from([from.index()]);
    let mut stack = vec![from.clone()];
    while let Some(st) = stack.pop() {
        for t in s.legal_moves(&st) {
            if seen.insert(t.index()) {
                stack.push(t);
            }
        }
    }
    seen.len() as u64
}

/// 1^n sits at index A(n) of the reflected Gray code; encode and decode are
/// inverse and consecutive codewords differ in one bit.
pub fn verify_gray_code(s: &dyn Subject, max_n: usize, round_trip_bits: usize) -> Report {
    let mut b = ReportBuilder::new(
        ClaimId::Occurrence2.as_str(),
        format!("1 <= n <= {max_n}; round trip for i < 2^{round_trip_bits}"),
    );
    for n in 1..=max_n {
        let ones = GrayWord(BitWord::repeat(true, n));
        let zeros = GrayWord(BitWord::repeat(false, n));
        if let Some(a) = got(&mut b, format!("A({n})"), s.a_of(n as u64, Method::Rec)) {
            b.check_eq(format!("index of {ones}"), a, s.gray_index(&ones));
        }
        b.check_eq(
            format!("index of {zeros}"),
            Nat::zero(),
            s.gray_index(&zeros),
        );
    }
    let n = round_trip_bits;
    let listed = puzzles::gray_code(n).unwrap_or_default();
    let mut prev: Option<GrayWord> = None;
    for i in 0..1u64 << n {
        let Some(w) = got(&mut b, format!("encode({i})"), s.gray_encode(i, n)) else {
            continue;
        };
        b.check_eq(
            format!("decode(encode({i}))"),
            Nat::from(i),
            s.gray_index(&w),
        );
        if let Some(l) = listed.get(i as usize) {
            b.check_eq(
                format!("codeword {i} vs reflected list"),
                l.to_string(),
                w.to_string(),
            );
        }
        if let Some(p) = &prev {
            let flips = p
                .word()
                .iter()
                .zip(w.word().iter())
                .filter(|(x, y)| x != y)
                .count();
            b.check_eq(
                format!("Hamming distance between codewords {} and {i}", i - 1),
                1,
                flips,
            );
        }
        prev = Some(w);
    }
    b.finish()
}

fn valid_linear(seq: &[Group]) -> bool {
    seq.len() >= 3
        && seq[0] == Group::A
        && seq[1] == Group::B
        && seq.windows(2).all(|p| p[0] != p[1])
        && Group::ALL.iter().all(|g| seq.contains(g))
}

pub fn verify_partition_counts(s: &dyn Subject, max_m: usize) -> Report {
    let mut b = ReportBuilder::new(
        ClaimId::Occurrence3.as_str(),
        format!("3 <= people <= {max_m}"),
    );
    for m in 3..=max_m {
        let Some(parts) = got(&mut b, format!("partitions of {m}"), s.enum_partitions(m)) else {
            continue;
        };
        for p in &parts {
            b.check(
                AffinityPartition::new(p.seats().to_vec()).is_ok() && p.people() == m,
                p,
                "valid partition",
                "invalid",
            );
        }
        let distinct: HashSet<&AffinityPartition> = parts.iter().collect();
        b.check_eq(
            format!("distinct partitions of {m}"),
            parts.len(),
            distinct.len(),
        );
        if let Ok(a) = s.a_of(m as u64 - 2, Method::Rec) {
            b.check_eq(
                format!("partitions of {m} people"),
                a,
                Nat::from(parts.len()),
            );
        }
    }
    b.finish()
}

/// Linear AB-strings of length n + 2 number 2^n - 1; those ending in B or C
/// are the partitions of n + 2 people, and those ending in A shorten to the
/// partitions of n + 1.
pub fn verify_linear_strings(s: &dyn Subject, max_n: usize) -> Report {
    let mut b = ReportBuilder::new(ClaimId::Lossers.as_str(), format!("1 <= n <= {max_n}"));
    let render = |v: &[Group]| v.iter().map(|g| g.as_char()).collect::<String>();
    for n in 1..=max_n {
        let Some(strings) = got(
            &mut b,
            format!("strings of length {}", n + 2),
            s.enum_linear_strings(n + 2),
        ) else {
            continue;
        };
        b.check_eq(
            format!("strings of length {}", n + 2),
            (1u64 << n) - 1,
            strings.len() as u64,
        );
        for st in &strings {
            b.check(
                valid_linear(st) && st.len() == n + 2,
                render(st),
                "proper AB-string using A, B, C",
                "invalid",
            );
        }
        let (ends_a, circular): (Vec<&Vec<Group>>, Vec<&Vec<Group>>) =
            strings.iter().partition(|st| st.last() == Some(&Group::A));
        let circular: BTreeSet<String> = circular.iter().map(|st| render(st)).collect();
        let shortened: BTreeSet<String> = ends_a
            .iter()
            .map(|st| render(&st[..st.len() - 1]))
            .collect();
        if let Some(parts) = got(
            &mut b,
            format!("partitions of {}", n + 2),
            s.enum_partitions(n + 2),
        ) {
            let want: BTreeSet<String> = parts.iter().map(ToString::to_string).collect();
            b.check(
                circular == want,
                format!("strings of length {} ending in B or C", n + 2),
                format!("{} partitions of {}", want.len(), n + 2),
                format!("{} strings", circular.len()),
            );
        }
        let want_short: BTreeSet<String> = if n + 1 >= 3 {
            s.enum_partitions(n + 1)
                .map(|v| v.iter().map(ToString::to_string).collect())
                .unwrap_or_default()
        } else {
            BTreeSet::new()
        };
        b.check(
            shortened == want_short,
            format!("strings of length {} ending in A, shortened", n + 2),
            format!("{} partitions of {}", want_short.len(), n + 1),
            format!("{} strings", shortened.len()),
        );
    }
    b.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::claims::{Mutant, Reference};
    use crate::colorings::EdgeColor;

    #[test]
    fn agreements_are_terms_of_a() {
        let r = verify_triangular_palindromes(&Reference, 1000);
        assert!(r.passed(), "{:?}", r.counterexamples);
        assert_eq!(
            r.notes,
            ["T(n) = P(n)/3 at 10 indices: 1, 2, 5, 10, 21, 42, 85, 170, 341, 682"]
        );
    }

    #[test]
    fn zero_run_verifier_smallest_case() {
        let r = verify_zero_run_spans(&Reference, 2);
        assert!(r.passed());
    }

    #[test]
    fn zero_run_verifier_catches_b5() {
        let r = verify_zero_run_spans(&Mutant::for_claim(ClaimId::Theorem4_4), 20);
        assert!(!r.passed());
        assert!(r
            .counterexamples
            .iter()
            .any(|c| c.input.contains("record rank 2")));
    }

    #[test]
    fn bijection_notes_ten_to_ten() {
        let r = verify_bijection(&Reference, 6);
        assert!(r.passed());
        assert_eq!(
            r.notes,
            ["6 people: 10 partitions <-> 10 bubbles of arity 5"]
        );
    }

    #[test]
    fn record_numbering_notes_discrepancy() {
        let r = verify_record_numbering(&Reference, 10, 22);
        assert!(r.passed(), "{:?}", r.counterexamples);
        assert!(r.notes[0].contains("run 18"));
        assert!(r.notes[0].contains("evaluates to 42"));
    }

    #[test]
    fn unbased_bubbles_swap_the_colors() {
        let b = Bubble {
            based: false,
            border: vec![EdgeColor::Uncolored; 2],
        };
        assert!(b.is_admissible());
        let b = Bubble {
            based: false,
            border: vec![EdgeColor::Blue; 2],
        };
        assert!(!b.is_admissible());
    }
}
