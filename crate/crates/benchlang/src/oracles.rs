//! Ground-truth membership predicates for the benchmark languages.
//!
//! Each oracle works on symbol ids in the order the language's alphabet
//! declares them (`a` is 0, `b` is 1, and so on; bracket alphabets list the
//! opening symbol of each pair before its closing partner).  Oracles are
//! total over well-formed words; id-range checks live in the catalog layer.

use crasp_core::Word;

fn count_id(w: &Word, id: u8) -> usize {
    w.ids().iter().filter(|&&s| s == id).count()
}

/// Run-length encoding as (id, length) blocks.
fn runs(w: &Word) -> Vec<(u8, usize)> {
    let mut out: Vec<(u8, usize)> = Vec::new();
    for &s in w.ids() {
        match out.last_mut() {
            Some((id, n)) if *id == s => *n += 1,
            _ => out.push((s, 1)),
        }
    }
    out
}

/// Balanced strings over one bracket pair (open 0, close 1).
pub fn dyck1(w: &Word) -> bool {
    dyck(w, 1)
}

/// Balanced strings over two bracket pairs.
pub fn d2(w: &Word) -> bool {
    dyck(w, 2)
}

/// Balanced strings over three bracket pairs.
pub fn d3(w: &Word) -> bool {
    dyck(w, 3)
}

/// Balanced strings over four bracket pairs.
pub fn d4(w: &Word) -> bool {
    dyck(w, 4)
}

/// Balanced strings over `pairs` bracket pairs; opener of pair t is id 2t,
/// its closer 2t+1.
fn dyck(w: &Word, pairs: u8) -> bool {
    debug_assert!(pairs >= 1);
    let mut stack: Vec<u8> = Vec::new();
    for &s in w.ids() {
        if s % 2 == 0 {
            stack.push(s / 2);
        } else {
            match stack.pop() {
                Some(t) if t == s / 2 => {}
                _ => return false,
            }
        }
    }
    stack.is_empty()
}

/// Any number of a's followed by any number of b's.
pub fn astar_bstar(w: &Word) -> bool {
    let mut seen_b = false;
    for &s in w.ids() {
        if s == 1 {
            seen_b = true;
        } else if seen_b {
            return false;
        }
    }
    true
}

/// a^n b^n c^n.
pub fn anbncn(w: &Word) -> bool {
    if w.len() % 3 != 0 {
        return false;
    }
    let n = w.len() / 3;
    w.ids()
        .iter()
        .enumerate()
        .all(|(i, &s)| s as usize == i / n.max(1))
}

/// Even-length words over the single letter a.
pub fn aastar(w: &Word) -> bool {
    w.len() % 2 == 0
}

/// Words containing ab as a factor.
pub fn contains_ab(w: &Word) -> bool {
    w.ids().windows(2).any(|p| p == [0, 1])
}

/// At least as many a's as b's.
pub fn majority(w: &Word) -> bool {
    count_id(w, 0) >= count_id(w, 1)
}

/// The reference program's orientation: at least as many b's as a's.
pub fn majority_fixture(w: &Word) -> bool {
    count_id(w, 0) <= count_id(w, 1)
}

/// Words containing at least one a.
pub fn existential(w: &Word) -> bool {
    w.ids().contains(&0)
}

/// The reference program's orientation: words containing at least one b.
pub fn existential_fixture(w: &Word) -> bool {
    w.ids().contains(&1)
}

/// An even number of a's.
pub fn parity(w: &Word) -> bool {
    count_id(w, 0) % 2 == 0
}

/// a strictly before b: some a occurs, and later some b.
pub fn pt2(w: &Word) -> bool {
    subsequence_chain(w, 2)
}

/// a, then b, then c, in order (as a subsequence).
pub fn pt3(w: &Word) -> bool {
    subsequence_chain(w, 3)
}

/// a through e in order (as a subsequence).
pub fn pt5(w: &Word) -> bool {
    subsequence_chain(w, 5)
}

/// Does w contain the subsequence 0, 1, ..., k-1?
fn subsequence_chain(w: &Word, k: u8) -> bool {
    let mut next = 0u8;
    for &s in w.ids() {
        if s == next {
            next += 1;
            if next == k {
                return true;
            }
        }
    }
    false
}

/// a*.
pub fn tomita1(w: &Word) -> bool {
    !w.ids().contains(&1)
}

/// (ab)*.
pub fn tomita2(w: &Word) -> bool {
    w.len() % 2 == 0 && w.ids().iter().enumerate().all(|(i, &s)| s as usize == i % 2)
}

/// Rejects words whose run-length encoding contains, consecutively, an
/// a-run, an odd b-run, an odd a-run, and a b-run.
pub fn tomita3(w: &Word) -> bool {
    let r = runs(w);
    for i in 0..r.len() {
        if i + 3 < r.len() && r[i].0 == 0 && r[i + 1].1 % 2 == 1 && r[i + 2].1 % 2 == 1 {
            return false;
        }
    }
    true
}

/// No three consecutive a's.
pub fn tomita4(w: &Word) -> bool {
    !w.ids().windows(3).any(|p| p == [0, 0, 0])
}

/// An even number of a's and an even number of b's.
pub fn tomita5(w: &Word) -> bool {
    count_id(w, 0) % 2 == 0 && count_id(w, 1) % 2 == 0
}

/// The difference between the number of a's and b's is divisible by 3.
pub fn tomita6(w: &Word) -> bool {
    (count_id(w, 0) as i64 - count_id(w, 1) as i64).rem_euclid(3) == 0
}

/// a* b* a* b*.
pub fn tomita7(w: &Word) -> bool {
    let mut phase = 0usize;
    for &s in w.ids() {
        phase = match (phase, s) {
            (0, 0) | (2, 0) => phase,
            (0, 1) | (1, 1) => 1,
            (1, 0) => 2,
            (2, 1) | (3, 1) => 3,
            _ => return false,
        };
    }
    true
}

/// Each letter follows its predecessor's most frequent successor so far:
/// at every position i > 1, the transition (w[i-1], w[i]) is among the most
/// frequent transitions out of w[i-1] within the prefix w[1..i-1].
pub fn next_argmax(w: &Word) -> bool {
    let ids = w.ids();
    let mut counts = [[0usize; 3]; 3];
    for i in 1..ids.len() {
        let prev = ids[i - 1] as usize;
        let cur = ids[i] as usize;
        let best = *counts[prev].iter().max().expect("nonempty row");
        if counts[prev][cur] < best {
            return false;
        }
        counts[prev][cur] += 1;
    }
    true
}

/// The reference program's predicate: some position is an a, follows an a,
/// and the running transition counts out of a (including this position) are
/// maximised at a.
pub fn next_argmax_fixture(w: &Word) -> bool {
    let ids = w.ids();
    let (mut c2, mut c3, mut c4) = (0usize, 0usize, 0usize);
    for i in 0..ids.len() {
        let prev_a = i >= 1 && ids[i - 1] == 0;
        if prev_a {
            match ids[i] {
                0 => c2 += 1,
                1 => c3 += 1,
                _ => c4 += 1,
            }
        }
        let b8 = ids[i] == 0 && prev_a && c2 + c3 + c4 >= 1 && c3 <= c2 && c4 <= c2;
        if b8 {
            return true;
        }
    }
    false
}
