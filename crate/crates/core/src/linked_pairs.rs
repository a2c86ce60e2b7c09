//! The linked-pair predicate and enumeration of linked-pair sets.
//!
//! An ordered pair `(P, Q)` of reduced words of length at least two is linked
//! when the two subword strands cross transversally on the surface.  Three
//! shapes occur:
//!
//! * type 1: both words have length two and the four endpoint letters embed
//!   monotonically into the symbol's cyclic order;
//! * type 2: `P` and `Q` share their middle segment and diverge at both ends;
//! * type 3: the middle of `Q` is the inverse of the middle of `P`.
//!
//! For types 2 and 3 the definition compares the orientations of two short
//! words built from the divergence letters.  The comparison is implemented as
//! literal equality of the two orientation values, so pairs whose orientation
//! words both degenerate to `0` count as linked with sign `0`.  Such pairs are
//! kept in enumeration output (the sign field marks them) but contribute
//! nothing to any bracket or cobracket sum.

use alloc::vec::Vec;

use crate::orientation::SurfaceSymbol;
use crate::words::{CyclicWord, Letter, LinearWord, Occurrence};

/// Shape of a linked pair, printed as `type=1|2|3`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum PairKind {
    Type1,
    Type2,
    Type3,
}

impl PairKind {
    pub fn code(self) -> u8 {
        match self {
            PairKind::Type1 => 1,
            PairKind::Type2 => 2,
            PairKind::Type3 => 3,
        }
    }
}

/// An ordered pair of subword occurrences together with its shape and sign.
///
/// For pairs from `LP1` both exponents are `1` and both occurrences index the
/// same word; for pairs from `LP2(V, W)` the first occurrence lives in `V`
/// (realizing a subword of `V^j`) and the second in `W`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LinkedPair {
    pub p: Occurrence,
    pub q: Occurrence,
    pub kind: PairKind,
    pub sign: i8,
    pub exponents: (u32, u32),
}

impl LinkedPair {
    /// The same crossing with the roles of `P` and `Q` exchanged.
    pub fn swapped(&self) -> LinkedPair {
        LinkedPair {
            p: self.q,
            q: self.p,
            kind: self.kind,
            sign: -self.sign,
            exponents: (self.exponents.1, self.exponents.0),
        }
    }
}

/// Classifies a pair of letter slices; `None` when not linked.
///
/// Both slices must already be freely reduced — enumeration windows always
/// are.  The public [`is_linked`] wrapper checks reducedness first.
pub(crate) fn classify(p: &[Letter], q: &[Letter], o: &SurfaceSymbol) -> Option<(PairKind, i8)> {
    let m = p.len();
    if m < 2 || q.len() != m {
        return None;
    }
    let (p1, p2) = (p[0], p[m - 1]);
    let (q1, q2) = (q[0], q[m - 1]);
    if m == 2 {
        // type 1: a single orientation word on the four endpoints
        let w = [p1.inverse(), q1.inverse(), p2, q2];
        let sign = o.orientation_of(&w).expect("length 4").value();
        return if sign != 0 { Some((PairKind::Type1, sign)) } else { None };
    }
    let (x1, x2) = (p[1], p[m - 2]);
    if p[1..m - 1] == q[1..m - 1] {
        // type 2: shared middle, same direction
        if p1 == q1 || p2 == q2 {
            return None;
        }
        let wa = [p1.inverse(), q1.inverse(), x1];
        let wb = [p2, q2, x2.inverse()];
        let oa = o.orientation_of(&wa).expect("length 3").value();
        let ob = o.orientation_of(&wb).expect("length 3").value();
        return if oa == ob { Some((PairKind::Type2, oa)) } else { None };
    }
    let mid_is_inverse = (1..m - 1).all(|i| q[i] == p[m - 1 - i].inverse());
    if mid_is_inverse {
        // type 3: shared middle, opposite direction
        if p1 == q2.inverse() || p2 == q1.inverse() {
            return None;
        }
        let wa = [q2, p1.inverse(), x1];
        let wb = [q1.inverse(), p2, x2.inverse()];
        let oa = o.orientation_of(&wa).expect("length 3").value();
        let ob = o.orientation_of(&wb).expect("length 3").value();
        return if oa == ob { Some((PairKind::Type3, oa)) } else { None };
    }
    None
}

/// Tests whether the ordered pair `(p, q)` is linked with respect to `o`,
/// returning its shape and sign.  Words that are not freely reduced or are
/// shorter than two letters are never linked.
pub fn is_linked(p: &LinearWord, q: &LinearWord, o: &SurfaceSymbol) -> Option<(PairKind, i8)> {
    if !p.is_reduced() || !q.is_reduced() {
        return None;
    }
    classify(p.letters(), q.letters(), o)
}

/// Exponent of the power a window of this length reaches into: the unique
/// `j` with `(j-1)*base < len <= j*base`.
pub(crate) fn window_exponent(len: usize, base: usize) -> u32 {
    (len.div_ceil(base)) as u32
}

fn repeated_letters(w: &CyclicWord, copies: usize) -> Vec<Letter> {
    let mut out = Vec::with_capacity(w.len() * copies);
    for _ in 0..copies {
        out.extend_from_slice(w.letters());
    }
    out
}

/// Enumerates the linked pairs of subword occurrences within one word.
///
/// Windows range over `start in [0, l)` and `length in [2, l]`; the two
/// occurrences must differ.  Output is sorted by `(p, q)`.
pub fn enumerate_lp1(w: &CyclicWord, o: &SurfaceSymbol) -> Vec<LinkedPair> {
    enumerate_lp1_windows(w, o, w.len())
}

/// [`enumerate_lp1`] with windows extended up to length `2*l(w)`, the
/// experimentation switch.  Not part of the standard linked-pair set.
pub fn enumerate_lp1_extended(w: &CyclicWord, o: &SurfaceSymbol) -> Vec<LinkedPair> {
    enumerate_lp1_windows(w, o, 2 * w.len())
}

fn enumerate_lp1_windows(w: &CyclicWord, o: &SurfaceSymbol, max_len: usize) -> Vec<LinkedPair> {
    let l = w.len();
    let ext = repeated_letters(w, max_len / l + 2);
    let mut out = Vec::new();
    if max_len < 2 {
        return out;
    }
    for ps in 0..l {
        for plen in 2..=max_len {
            let pw = &ext[ps..ps + plen];
            for qs in 0..l {
                for qlen in 2..=max_len {
                    if ps == qs && plen == qlen {
                        continue;
                    }
                    let qw = &ext[qs..qs + qlen];
                    if let Some((kind, sign)) = classify(pw, qw, o) {
                        out.push(LinkedPair {
                            p: Occurrence::new(ps, plen),
                            q: Occurrence::new(qs, qlen),
                            kind,
                            sign,
                            exponents: (window_exponent(plen, l), window_exponent(qlen, l)),
                        });
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Exponent caps for `LP2(V, W)`: `j <= 2 + l(W)/l(V)` and symmetrically.
pub fn lp2_exponent_caps(v: &CyclicWord, w: &CyclicWord) -> (u32, u32) {
    let j = 2 + w.len() / v.len();
    let k = 2 + v.len() / w.len();
    (j as u32, k as u32)
}

/// Enumerates the linked pairs between two words, with `P` ranging over
/// cyclic windows of `V` that realize subwords of the powers `V^j` and `Q`
/// likewise over `W`.  Output is sorted by `(p, q)`.
pub fn enumerate_lp2(v: &CyclicWord, w: &CyclicWord, o: &SurfaceSymbol) -> Vec<LinkedPair> {
    enumerate_lp2_with_margin(v, w, o, 0)
}

/// [`enumerate_lp2`] with both exponent caps raised by `margin`; used to
/// check that the caps lose nothing.
pub fn enumerate_lp2_with_margin(
    v: &CyclicWord,
    w: &CyclicWord,
    o: &SurfaceSymbol,
    margin: u32,
) -> Vec<LinkedPair> {
    let (jcap, kcap) = lp2_exponent_caps(v, w);
    let (jcap, kcap) = (jcap + margin, kcap + margin);
    let lv = v.len();
    let lw = w.len();
    let p_max = jcap as usize * lv;
    let q_max = kcap as usize * lw;
    // linked pairs always have equal realized lengths
    let max_len = p_max.min(q_max);
    let mut out = Vec::new();
    if max_len < 2 {
        return out;
    }
    let ext_v = repeated_letters(v, max_len / lv + 2);
    let ext_w = repeated_letters(w, max_len / lw + 2);
    for len in 2..=max_len {
        let (je, ke) = (window_exponent(len, lv), window_exponent(len, lw));
        for ps in 0..lv {
            let pw = &ext_v[ps..ps + len];
            for qs in 0..lw {
                let qw = &ext_w[qs..qs + len];
                if let Some((kind, sign)) = classify(pw, qw, o) {
                    out.push(LinkedPair {
                        p: Occurrence::new(ps, len),
                        q: Occurrence::new(qs, len),
                        kind,
                        sign,
                        exponents: (je, ke),
                    });
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Re-classifies occurrence windows inside one word, returning the full pair.
/// `None` when the occurrences are equal, out of range, or not linked.
pub fn locate_lp1(
    w: &CyclicWord,
    p: Occurrence,
    q: Occurrence,
    o: &SurfaceSymbol,
) -> Option<LinkedPair> {
    let l = w.len();
    if p == q || p.start >= l || q.start >= l {
        return None;
    }
    if p.length < 2 || p.length > l || q.length < 2 || q.length > l {
        return None;
    }
    let pw = w.window(p).ok()?;
    let qw = w.window(q).ok()?;
    let (kind, sign) = classify(pw.letters(), qw.letters(), o)?;
    Some(LinkedPair {
        p,
        q,
        kind,
        sign,
        exponents: (window_exponent(p.length, l), window_exponent(q.length, l)),
    })
}

/// Re-classifies occurrence windows across two words (the `LP2` setting).
pub fn locate_lp2(
    v: &CyclicWord,
    w: &CyclicWord,
    p: Occurrence,
    q: Occurrence,
    o: &SurfaceSymbol,
) -> Option<LinkedPair> {
    if p.start >= v.len() || q.start >= w.len() || p.length < 2 || q.length < 2 {
        return None;
    }
    let (jcap, kcap) = lp2_exponent_caps(v, w);
    let je = window_exponent(p.length, v.len());
    let ke = window_exponent(q.length, w.len());
    if je > jcap || ke > kcap {
        return None;
    }
    let pw = v.window(p).ok()?;
    let qw = w.window(q).ok()?;
    let (kind, sign) = classify(pw.letters(), qw.letters(), o)?;
    Some(LinkedPair { p, q, kind, sign, exponents: (je, ke) })
}
