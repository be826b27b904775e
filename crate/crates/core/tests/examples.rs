//! Worked values for every public operation, each checked against an
//! independent oracle where one exists.

use std::collections::BTreeSet;

use seqlab_core::claims::{self, ClaimId, Mutant, Reference};
use seqlab_core::colorings::{self, AffinityPartition, Bubble, EdgeColor};
use seqlab_core::puzzles::{self, GrayWord, RingState};
use seqlab_core::runs;
use seqlab_core::seq::{self, Method, Nat};
use seqlab_core::words::{self, BitWord, CatalanWord};
use seqlab_core::Status;

fn nat(v: u64) -> Nat {
    Nat::from(v)
}

fn bits(s: &str) -> BitWord {
    s.parse().unwrap()
}

#[test]
fn a_values() {
    assert_eq!(seq::a_of(1, Method::Rec).unwrap(), nat(1));
    assert_eq!(seq::a_of(10, Method::Closed).unwrap(), nat(682));
    let a7 = seq::a_of(7, Method::Binary).unwrap();
    assert_eq!(a7, nat(85));
    assert_eq!(BitWord::from_nat(&a7).to_string(), "1010101");
    assert_eq!(
        seq::a_of(200, Method::Rec).unwrap(),
        seq::a_of(200, Method::Closed).unwrap()
    );
}

#[test]
fn palindrome_pieces() {
    assert_eq!(seq::triangular(5).unwrap(), nat(15));
    assert_eq!(seq::triangular(1).unwrap(), nat(1));
    assert_eq!(seq::triangular(10).unwrap(), nat(55));

    assert_eq!(seq::bit_length(12).unwrap(), 4);
    assert_eq!(seq::bit_length(1).unwrap(), 1);
    assert_eq!(seq::bit_length(1 << 40).unwrap(), 41);

    assert_eq!(seq::reverse_bits(12).unwrap(), nat(3));
    assert_eq!(seq::reverse_bits(1).unwrap(), nat(1));
    let rev22: String = format!("{:b}", 22).chars().rev().collect();
    let rev22 = u64::from_str_radix(&rev22, 2).unwrap();
    assert_eq!(seq::reverse_bits(22).unwrap(), nat(rev22));
    assert_eq!(rev22, 13);

    assert_eq!(seq::palindrome_p(12).unwrap(), nat(195));
    assert_eq!(seq::palindrome_p(5).unwrap(), nat(45));
    assert_eq!(seq::palindrome_p(1).unwrap(), nat(3));

    assert_eq!(seq::palindrome_p_div3(10).unwrap(), nat(55));
    assert_eq!(seq::palindrome_p_div3(8).unwrap(), nat(43));
    assert_eq!(seq::palindrome_p_div3(2).unwrap(), nat(3));
}

#[test]
fn b_values() {
    for (n, v) in [(18, 4), (22, 0), (32, 32), (19, 1)] {
        assert_eq!(seq::seq_b(n).unwrap(), nat(v), "B({n})");
        assert_eq!(seq::seq_b_fast(n), v);
        assert_eq!(seq::seq_b_scan(n).unwrap(), nat(v));
    }
}

#[test]
fn catalan_and_string_counts() {
    assert_eq!(seq::catalan(0), nat(1));
    assert_eq!(seq::catalan(3), nat(5));
    assert_eq!(seq::catalan(3), nat(words::enum_catalan(6).unwrap().len() as u64));
    assert_eq!(seq::catalan(2), nat(2));

    // Strings over {b, u} of length n whose count of b is 2n+1 mod 3.
    let brute = |n: u32| {
        (0..1u32 << n)
            .filter(|w| w.count_ones() % 3 == (2 * n + 1) % 3)
            .count() as u64
    };
    assert_eq!(seq::s_count(2).unwrap(), nat(1));
    assert_eq!(brute(2), 1);
    assert_eq!(seq::s_count(3).unwrap(), nat(3));
    assert_eq!(brute(3), 3);
    assert_eq!(seq::s_count(4).unwrap() + seq::s_count(5).unwrap(), nat(16));
}

#[test]
fn catalan_words() {
    assert!(words::is_catalan(&bits("0101")));
    assert!(words::is_catalan(&BitWord::empty()));
    assert!(words::is_catalan(&bits("λ")));
    assert!(!words::is_catalan(&bits("10")));
    assert!(CatalanWord::try_from(bits("10")).is_err());

    let show = |len| -> Vec<String> {
        words::enum_catalan(len)
            .unwrap()
            .iter()
            .map(|w| w.to_string())
            .collect()
    };
    assert_eq!(show(4), ["0011", "0101"]);
    assert_eq!(show(0), ["λ"]);
    assert_eq!(show(6), ["000111", "001011", "001101", "010011", "010101"]);
}

#[test]
fn zero_predicate() {
    assert!(words::b_is_zero(22).unwrap());
    assert!(!words::b_is_zero(18).unwrap());
    for k in 0..=20 {
        assert!(!words::b_is_zero(1 << k).unwrap());
    }
}

#[test]
fn run_start_generator() {
    let listed: Vec<u64> = words::run_start_families(8)
        .unwrap()
        .iter()
        .flat_map(|f| std::iter::once(f.odd).chain(f.even))
        .take(6)
        .collect();
    assert_eq!(listed, [3, 6, 11, 22, 39, 78]);

    let starts = words::run_start_indices(16).unwrap();
    for &n in &starts {
        assert_eq!(seq::seq_b_fast(n), 0);
        assert_ne!(seq::seq_b_fast(n - 1), 0);
    }
    let scanned: Vec<u64> = (1..1u64 << 16)
        .filter(|&n| seq::seq_b_fast(n) == 0 && seq::seq_b_fast(n - 1) != 0)
        .collect();
    assert_eq!(starts, scanned);
    for k in 1..=8u32 {
        let with_2k_bits = starts
            .iter()
            .filter(|&&n| 64 - n.leading_zeros() == 2 * k)
            .count();
        assert_eq!(nat(with_2k_bits as u64), seq::catalan(k as u64 - 1), "k = {k}");
    }
}

#[test]
fn runs_and_records() {
    let all = runs::extract_runs(12).unwrap();
    assert_eq!((all[0].start, all[0].length, all[0].ordinal), (3, 1, 1));
    let lengths: Vec<u64> = all.iter().take(8).map(|r| r.length).collect();
    assert_eq!(lengths, [1, 2, 5, 10, 1, 21, 2, 42]);
    let r11 = all.iter().find(|r| r.start == 11).unwrap();
    assert_eq!(r11.length, 5);
    assert_eq!(seq::seq_b_fast(16), 16);

    assert_eq!(runs::run_length_seq(4, 12).unwrap(), 10);
    assert_eq!(runs::run_length_seq(13, 12).unwrap(), 85);
    assert_eq!(runs::run_length_seq(18, 12).unwrap(), 170);

    let table = runs::records(20).unwrap();
    let third = table.rank(3).unwrap();
    assert_eq!((third.start, third.end(), third.length), (11, 15, 5));
    let first = table.rank(1).unwrap();
    assert_eq!((first.start, first.length), (3, 1));
    for e in &table.records {
        assert_eq!(e.run.end(), (1 << (e.rank + 1)) - 1);
    }

    assert_eq!(runs::record_run_number(5).unwrap(), nat(6));
    assert_eq!(runs::record_run_number(7).unwrap(), nat(13));
    assert_eq!(runs::record_run_number(1).unwrap(), nat(1));
    let table = runs::records(22).unwrap();
    for e in &table.records {
        assert_eq!(runs::record_run_number(e.rank).unwrap(), nat(e.run.ordinal));
    }
}

#[test]
fn run_theorems() {
    let two = runs::verify_theorem_4_4(2);
    assert!(two.passed());
    assert_eq!(two.checked, 5);
    assert!(runs::verify_theorem_4_4(20).passed());
    let broken = claims::verify_zero_run_spans(&Mutant::for_claim(ClaimId::Theorem4_4), 20);
    assert_eq!(broken.status, Status::Fail);
    assert!(!broken.counterexamples.is_empty());

    assert_eq!(runs::run_length_seq(6, 12).unwrap(), 21);
    assert_eq!(runs::run_length_seq(1, 12).unwrap(), 1);
    assert!(runs::verify_theorem_4_8(10, 22).unwrap().passed());
}

#[test]
fn chinese_rings() {
    let path = puzzles::ring_path(4).unwrap();
    assert_eq!(path.len(), 16);
    assert_eq!(path[0].to_string(), "0000");
    assert_eq!(path[15].to_string(), "1000");
    let distinct: BTreeSet<&RingState> = path.iter().collect();
    assert_eq!(distinct.len(), 16);
    for w in path.windows(2) {
        assert!(puzzles::legal_moves(&w[0]).contains(&w[1]));
    }
    for n in 1..=12 {
        for i in 0..1u64 << n {
            let d = puzzles::legal_moves(&RingState::from_index(n, i)).len();
            assert!(d == 1 || d == 2);
        }
        let off = RingState::all_off(n);
        let on = RingState::all_on(n);
        let a = seq::a_of(n as u64, Method::Rec).unwrap();
        assert_eq!(puzzles::ring_distance(&off, &on).unwrap(), a);
        let bfs = puzzles::bfs_distance(&off, &on, puzzles::legal_moves).unwrap();
        assert_eq!(nat(bfs), seq::a_of(n as u64, Method::Rec).unwrap());
        if n >= 2 {
            let far = RingState::far_end(n);
            let a1 = seq::a_of(n as u64 - 1, Method::Rec).unwrap();
            assert_eq!(puzzles::ring_distance(&on, &far).unwrap(), a1);
        }
        assert_eq!(puzzles::ring_distance(&on, &on).unwrap(), nat(0));
    }
}

#[test]
fn gray_code() {
    let two: Vec<String> = puzzles::gray_code(2)
        .unwrap()
        .iter()
        .map(|w| w.to_string())
        .collect();
    assert_eq!(two, ["00", "01", "11", "10"]);
    let three = puzzles::gray_code(3).unwrap();
    let pos = three.iter().position(|w| w.to_string() == "111").unwrap();
    assert_eq!(nat(pos as u64), seq::a_of(3, Method::Rec).unwrap());
    for n in 1..=30 {
        let ones = GrayWord(BitWord::repeat(true, n));
        assert_eq!(
            puzzles::gray_index(&ones),
            seq::a_of(n as u64, Method::Rec).unwrap()
        );
        assert_eq!(puzzles::gray_index(&GrayWord(BitWord::repeat(false, n))), nat(0));
    }
    for i in 0..1u64 << 16 {
        let w = puzzles::gray_encode(i, 16).unwrap();
        assert_eq!(puzzles::gray_index(&w), nat(i));
    }
}

#[test]
fn partitions_and_bubbles() {
    assert_eq!(colorings::enum_partitions(6).unwrap().len(), 10);
    let three = colorings::enum_partitions(3).unwrap();
    assert_eq!(three.len(), 1);
    assert_eq!(three[0].to_string(), "ABC");
    assert_eq!(colorings::enum_partitions(14).unwrap().len(), 2730);

    let counts: Vec<usize> = (2..=5)
        .map(|n| colorings::enum_bubbles(n, true).unwrap().len())
        .collect();
    assert_eq!(counts, [1, 2, 5, 10]);
    for n in 2..=12 {
        assert_eq!(
            colorings::enum_bubbles(n, true).unwrap().len(),
            colorings::enum_bubbles(n, false).unwrap().len()
        );
    }
}

#[test]
fn partition_bubble_maps() {
    let p: AffinityPartition = "ABCABC".parse().unwrap();
    let b = colorings::partition_to_bubble(&p).unwrap();
    assert!(b.based);
    assert!(b.border.iter().all(|&c| c == EdgeColor::Blue));
    assert_eq!(b.arity(), 5);
    assert!(b.is_admissible());

    let abc: AffinityPartition = "ABC".parse().unwrap();
    let bb = colorings::partition_to_bubble(&abc).unwrap();
    assert_eq!(bb.to_string(), "b|bb");
    assert_eq!(colorings::bubble_to_partition(&bb).unwrap(), abc);

    let six = colorings::enum_partitions(6).unwrap();
    let images: BTreeSet<Bubble> = six
        .iter()
        .map(|p| colorings::partition_to_bubble(p).unwrap())
        .collect();
    assert_eq!(images.len(), 10);
    assert!(images.iter().all(|b| b.arity() == 5));

    for m in 3..=12 {
        for p in colorings::enum_partitions(m).unwrap() {
            let b = colorings::partition_to_bubble(&p).unwrap();
            assert_eq!(colorings::bubble_to_partition(&b).unwrap(), p);
        }
    }
    let back: BTreeSet<AffinityPartition> = colorings::enum_bubbles(5, true)
        .unwrap()
        .iter()
        .map(|b| colorings::bubble_to_partition(b).unwrap())
        .collect();
    assert_eq!(back, six.into_iter().collect());
}

#[test]
fn bijection_verifier() {
    let six = colorings::verify_bijection(6);
    assert!(six.passed());
    assert!(six.notes.iter().any(|n| n.contains("10 partitions <-> 10 bubbles")));
    assert!(colorings::verify_bijection(12).passed());
    for m in 3..=12u64 {
        let parts = colorings::enum_partitions(m as usize).unwrap().len();
        let bubbles = colorings::enum_bubbles(m as usize - 1, true).unwrap().len();
        let a = seq::a_of(m - 2, Method::Rec).unwrap();
        assert_eq!((nat(parts as u64), nat(bubbles as u64)), (a.clone(), a));
    }
}

#[test]
fn every_claim_passes_and_every_planted_fault_is_caught() {
    for claim in ClaimId::ALL {
        let bounds = claims::Bounds::default();
        let good = claims::run_claim(claim, &Reference, bounds).unwrap();
        assert_eq!(good.status, Status::Pass, "{claim}: {:?}", good.counterexamples);
        assert!(good.counterexamples.is_empty());
        let bad = claims::run_claim(claim, &Mutant::for_claim(claim), bounds).unwrap();
        assert_eq!(bad.status, Status::Fail, "{claim}");
        assert!(!bad.counterexamples.is_empty() && bad.counterexamples.len() <= 10);
    }
}
