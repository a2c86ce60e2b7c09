//! Brute-force reference implementations for cross-checking.
//!
//! Everything here is written as a literal transcription of the defining
//! conditions, with no shortcuts: orientation by rotation search, linkage by
//! explicit decomposition, enumeration by exhaustive double loops, cyclic
//! canonical forms by comparing all rotations.  The main crate's fast paths
//! are tested against these in `tests/`.
//!
//! Words are compared through their text form so that no canonicalization
//! code is shared with the implementation under test.

use std::collections::BTreeMap;

use goldman_turaev::orientation::SurfaceSymbol;
use goldman_turaev::words::{CyclicWord, Letter, Occurrence};

/// Letters of the cyclic word starting at `start`, `len` of them, wrapping.
fn take_cyclic(w: &CyclicWord, start: usize, len: usize) -> Vec<Letter> {
    (0..len).map(|i| w.letter_at(start + i)).collect()
}

fn text_of(letters: &[Letter]) -> String {
    letters.iter().map(|x| x.to_string()).collect()
}

/// Text of the least rotation, computed by comparing every rotation.
pub fn naive_cyclic_text(letters: &[Letter]) -> String {
    let n = letters.len();
    let rotation = |k: usize| -> Vec<Letter> { (0..n).map(|i| letters[(k + i) % n]).collect() };
    let best = (0..n).map(rotation).min().expect("non-empty");
    text_of(&best)
}

fn linear_reduced(letters: &[Letter]) -> bool {
    letters.windows(2).all(|w| w[1] != w[0].inverse())
}

fn cyclic_reduced(letters: &[Letter]) -> bool {
    let n = letters.len();
    !letters.is_empty() && (0..n).all(|i| letters[(i + 1) % n] != letters[i].inverse())
}

/// Orientation value by rotation search: `+1` if some rotation of the
/// position sequence is strictly increasing, `-1` if some rotation is
/// strictly decreasing, `0` otherwise (or when the word is not reduced, has
/// repeated letters, or mentions letters outside the symbol).
pub fn orientation(letters: &[Letter], o: &SurfaceSymbol) -> i8 {
    let k = letters.len();
    if !cyclic_reduced(letters) {
        return 0;
    }
    let symbol = o.word().letters();
    let mut pos = Vec::with_capacity(k);
    for &x in letters {
        match symbol.iter().position(|&y| y == x) {
            Some(p) => pos.push(p),
            None => return 0,
        }
    }
    for i in 0..k {
        for j in (i + 1)..k {
            if pos[i] == pos[j] {
                return 0;
            }
        }
    }
    let increasing =
        (0..k).any(|r| (0..k - 1).all(|i| pos[(r + i) % k] < pos[(r + i + 1) % k]));
    let decreasing =
        (0..k).any(|r| (0..k - 1).all(|i| pos[(r + i) % k] > pos[(r + i + 1) % k]));
    match (increasing, decreasing) {
        (true, false) => 1,
        (false, true) => -1,
        _ => 0,
    }
}

/// Literal transcription of the linkage definition.  Returns the type code
/// and sign, with types 2 and 3 admitted whenever their two orientation
/// values agree (including both zero).
pub fn is_linked(p: &[Letter], q: &[Letter], o: &SurfaceSymbol) -> Option<(u8, i8)> {
    if p.len() < 2 || q.len() < 2 || !linear_reduced(p) || !linear_reduced(q) {
        return None;
    }
    if p.len() == 2 && q.len() == 2 {
        let w = [p[0].inverse(), q[0].inverse(), p[1], q[1]];
        let s = orientation(&w, o);
        if s != 0 {
            return Some((1, s));
        }
        return None;
    }
    if p.len() >= 3 && p.len() == q.len() {
        let middle_p = &p[1..p.len() - 1];
        let middle_q = &q[1..q.len() - 1];
        let (p1, p2) = (p[0], p[p.len() - 1]);
        let (q1, q2) = (q[0], q[q.len() - 1]);
        let x1 = middle_p[0];
        let x2 = middle_p[middle_p.len() - 1];
        if middle_p == middle_q && p1 != q1 && p2 != q2 {
            let oa = orientation(&[p1.inverse(), q1.inverse(), x1], o);
            let ob = orientation(&[p2, q2, x2.inverse()], o);
            if oa == ob {
                return Some((2, oa));
            }
            return None;
        }
        let middle_p_inv: Vec<Letter> =
            middle_p.iter().rev().map(|x| x.inverse()).collect();
        if middle_q == middle_p_inv && p1 != q2.inverse() && p2 != q1.inverse() {
            let oa = orientation(&[q2, p1.inverse(), x1], o);
            let ob = orientation(&[q1.inverse(), p2, x2.inverse()], o);
            if oa == ob {
                return Some((3, oa));
            }
            return None;
        }
    }
    None
}

/// A linked pair found by brute force, identified by realized data only.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct FoundPair {
    pub p: Occurrence,
    pub q: Occurrence,
    pub kind: u8,
    pub sign: i8,
}

/// All linked pairs of occurrences within one word, by exhaustive loops over
/// every start and every window length up to `l(w)`.
pub fn lp1(w: &CyclicWord, o: &SurfaceSymbol) -> Vec<FoundPair> {
    let l = w.len();
    let mut out = Vec::new();
    for ps in 0..l {
        for pl in 2..=l {
            let pw = take_cyclic(w, ps, pl);
            for qs in 0..l {
                for ql in 2..=l {
                    if (ps, pl) == (qs, ql) {
                        continue;
                    }
                    let qw = take_cyclic(w, qs, ql);
                    if let Some((kind, sign)) = is_linked(&pw, &qw, o) {
                        out.push(FoundPair {
                            p: Occurrence::new(ps, pl),
                            q: Occurrence::new(qs, ql),
                            kind,
                            sign,
                        });
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// All linked pairs between two words with exponents up to
/// `2 + l(w)/l(v) + margin` (and symmetrically), by exhaustive loops with
/// independently chosen window lengths.
pub fn lp2(v: &CyclicWord, w: &CyclicWord, o: &SurfaceSymbol, margin: usize) -> Vec<FoundPair> {
    let lv = v.len();
    let lw = w.len();
    let jcap = 2 + lw / lv + margin;
    let kcap = 2 + lv / lw + margin;
    let mut out = Vec::new();
    for ps in 0..lv {
        for pl in 2..=jcap * lv {
            let pw = take_cyclic(v, ps, pl);
            for qs in 0..lw {
                for ql in 2..=kcap * lw {
                    if pl != ql {
                        // linked words always have equal length
                        continue;
                    }
                    let qw = take_cyclic(w, qs, ql);
                    if let Some((kind, sign)) = is_linked(&pw, &qw, o) {
                        out.push(FoundPair {
                            p: Occurrence::new(ps, pl),
                            q: Occurrence::new(qs, ql),
                            kind,
                            sign,
                        });
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// The two cut halves of a pair from `lp1`, as raw letter vectors, built by
/// walking indices one step at a time.
pub fn cut_halves(w: &CyclicWord, pair: &FoundPair) -> (Vec<Letter>, Vec<Letter>) {
    let l = w.len();
    let p_last = (pair.p.start + pair.p.length - 1) % l;
    let q_last = (pair.q.start + pair.q.length - 1) % l;
    let walk = |from: usize, until: usize, inclusive: bool| -> Vec<Letter> {
        let mut out = Vec::new();
        let mut i = from;
        loop {
            if !inclusive && i == until {
                break;
            }
            out.push(w.letter_at(i));
            if inclusive && i == until {
                break;
            }
            i = (i + 1) % l;
        }
        out
    };
    match pair.kind {
        1 | 2 => (walk(p_last, q_last, false), walk(q_last, p_last, false)),
        3 => {
            let p_first = pair.p.start;
            let q_first = pair.q.start;
            (walk(p_last, q_first, true), walk(q_last, p_first, true))
        }
        _ => unreachable!("kind is 1..=3"),
    }
}

/// The merged word of a pair from `lp2`, as a raw letter vector.
pub fn merge_word(
    v: &CyclicWord,
    w: &CyclicWord,
    pair: &FoundPair,
) -> Vec<Letter> {
    let lv = v.len();
    let lw = w.len();
    let p_last = (pair.p.start + pair.p.length - 1) % lv;
    let q_last = (pair.q.start + pair.q.length - 1) % lw;
    let mut out = Vec::new();
    match pair.kind {
        1 | 2 => {
            out.extend((0..lv).map(|i| v.letter_at(p_last + i)));
            out.extend((0..lw).map(|i| w.letter_at(q_last + i)));
        }
        3 => {
            let p_first = pair.p.start % lv;
            let q_first = pair.q.start % lw;
            let mut i = p_last;
            loop {
                out.push(v.letter_at(i));
                if i == p_first {
                    break;
                }
                i = (i + 1) % lv;
            }
            let mut i = q_last;
            loop {
                out.push(w.letter_at(i));
                if i == q_first {
                    break;
                }
                i = (i + 1) % lw;
            }
        }
        _ => unreachable!("kind is 1..=3"),
    }
    out
}

/// The cobracket as a map from text pairs to coefficients, built from the
/// brute-force enumeration and cuts.  Also asserts the structural facts the
/// construction relies on: both halves non-empty and cyclically reduced.
pub fn cobracket(w: &CyclicWord, o: &SurfaceSymbol) -> BTreeMap<(String, String), i64> {
    let mut out = BTreeMap::new();
    for pair in lp1(w, o) {
        if pair.sign == 0 {
            continue;
        }
        let (h1, h2) = cut_halves(w, &pair);
        assert!(cyclic_reduced(&h1), "first half of {pair:?} in {w} not reduced");
        assert!(cyclic_reduced(&h2), "second half of {pair:?} in {w} not reduced");
        let key = (naive_cyclic_text(&h1), naive_cyclic_text(&h2));
        let c = out.entry(key).or_insert(0i64);
        *c += i64::from(pair.sign);
    }
    out.retain(|_, c| *c != 0);
    out
}

/// The bracket as a map from text to coefficients.
pub fn bracket(v: &CyclicWord, w: &CyclicWord, o: &SurfaceSymbol) -> BTreeMap<String, i64> {
    let mut out = BTreeMap::new();
    for pair in lp2(v, w, o, 0) {
        if pair.sign == 0 {
            continue;
        }
        let joined = merge_word(v, w, &pair);
        assert!(cyclic_reduced(&joined), "merge of {pair:?} not reduced");
        let c = out.entry(naive_cyclic_text(&joined)).or_insert(0i64);
        *c += i64::from(pair.sign);
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Text form of a formal sum from the main crate, for comparisons.
pub fn sum_as_map(sum: &goldman_turaev::FormalSum) -> BTreeMap<String, i64> {
    sum.iter().map(|(word, c)| (word.text(), c)).collect()
}

/// Text form of a two-tensor from the main crate, for comparisons.
pub fn tensor2_as_map(
    t: &goldman_turaev::Tensor2,
) -> BTreeMap<(String, String), i64> {
    t.iter().map(|((x, y), c)| ((x.text(), y.text()), c)).collect()
}
