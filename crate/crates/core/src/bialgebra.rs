//! Formal sums, the cut and merge constructions, bracket and cobracket.
//!
//! The module `V` is the free abelian group on non-empty reduced cyclic
//! words.  A linked pair inside one word cuts it into an ordered pair of
//! shorter words (the cobracket terms); a linked pair between two words
//! merges them into one longer word (the bracket terms).  All coefficients
//! are exact integers: every crossing contributes `-1`, `0` or `+1`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::linked_pairs::{enumerate_lp1, enumerate_lp2, locate_lp1, locate_lp2};
use crate::linked_pairs::{LinkedPair, PairKind};
use crate::orientation::SurfaceSymbol;
use crate::words::{least_rotation, CyclicWord, LinearWord, Occurrence};

/// A finitely supported integer combination, keyed by `K`.
///
/// Zero coefficients are never stored, so equality is term-wise equality.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SparseSum<K: Ord + Clone> {
    terms: BTreeMap<K, i64>,
}

/// An element of `V`: a combination of cyclic words.
pub type FormalSum = SparseSum<CyclicWord>;
/// An element of `V (x) V`.
pub type Tensor2 = SparseSum<(CyclicWord, CyclicWord)>;
/// An element of `V (x) V (x) V`.
pub type Tensor3 = SparseSum<(CyclicWord, CyclicWord, CyclicWord)>;

impl<K: Ord + Clone> SparseSum<K> {
    pub fn zero() -> Self {
        SparseSum { terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> i64 {
        self.terms.get(key).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, i64)> {
        self.terms.iter().map(|(k, &c)| (k, c))
    }

    /// Adds `coeff * key`, pruning the term when it cancels.
    pub fn add_term(&mut self, key: K, coeff: i64) {
        use alloc::collections::btree_map::Entry;
        if coeff == 0 {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let total = *o.get() + coeff;
                if total == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = total;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.iter() {
            out.add_term(k.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.iter() {
            out.add_term(k.clone(), -c);
        }
        out
    }

    pub fn negate(&self) -> Self {
        SparseSum { terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect() }
    }

    pub fn scale(&self, factor: i64) -> Self {
        if factor == 0 {
            return Self::zero();
        }
        SparseSum { terms: self.terms.iter().map(|(k, c)| (k.clone(), c * factor)).collect() }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (K, i64)>) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }
}

impl FormalSum {
    pub fn single(word: CyclicWord) -> Self {
        Self::from_terms([(word, 1)])
    }
}

impl Tensor2 {
    /// The flip `s(x (x) y) = y (x) x`.
    pub fn swap(&self) -> Self {
        Self::from_terms(self.iter().map(|((x, y), c)| ((y.clone(), x.clone()), c)))
    }
}

impl Tensor3 {
    /// The cyclic rotation `e(x (x) y (x) z) = z (x) x (x) y`.
    pub fn rotate(&self) -> Self {
        Self::from_terms(
            self.iter().map(|((x, y, z), c)| ((z.clone(), x.clone(), y.clone()), c)),
        )
    }
}

fn fmt_coeff(c: i64) -> String {
    if c >= 0 {
        alloc::format!("+{c}")
    } else {
        alloc::format!("{c}")
    }
}

/// Sorted text lines for a sum; `["0"]` when empty.  Terms are ordered by
/// the text of their components, coefficient printed first.
fn sum_lines<K: Ord + Clone>(
    sum: &SparseSum<K>,
    components: impl Fn(&K) -> Vec<String>,
) -> Vec<String> {
    if sum.is_zero() {
        return alloc::vec![String::from("0")];
    }
    let mut lines: Vec<(Vec<String>, i64)> = sum.iter().map(|(k, c)| (components(k), c)).collect();
    lines.sort();
    lines
        .into_iter()
        .map(|(parts, c)| alloc::format!("{} {}", fmt_coeff(c), parts.join(" | ")))
        .collect()
}

impl FormalSum {
    /// Output lines in the `<+|-><coeff> <word>` format; `0` when empty.
    pub fn lines(&self) -> Vec<String> {
        sum_lines(self, |w| alloc::vec![w.text()])
    }
}

impl Tensor2 {
    /// Output lines in the `<+|-><coeff> <word> | <word>` format.
    pub fn lines(&self) -> Vec<String> {
        sum_lines(self, |(x, y)| alloc::vec![x.text(), y.text()])
    }
}

impl Tensor3 {
    /// Output lines with two `|` separators.
    pub fn lines(&self) -> Vec<String> {
        sum_lines(self, |(x, y, z)| alloc::vec![x.text(), y.text(), z.text()])
    }
}

impl fmt::Display for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lines().join("\n"))
    }
}

impl fmt::Display for Tensor2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lines().join("\n"))
    }
}

impl fmt::Display for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lines().join("\n"))
    }
}

/// Which half of a cut to continue with.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CutIndex {
    First,
    Second,
}

/// One half of a cut, with the position in the parent word of every letter
/// of the canonical representative.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CutPart {
    pub word: CyclicWord,
    /// `positions[i]` is the parent position of canonical letter `i`.
    pub positions: Vec<usize>,
    parent_len: usize,
}

impl CutPart {
    fn from_window(parent: &CyclicWord, start: usize, length: usize) -> Result<Self, Error> {
        let letters: Vec<_> = (0..length).map(|i| parent.letter_at(start + i)).collect();
        let word = CyclicWord::from_reduced(&LinearWord::new(letters.clone()))?;
        let rot = least_rotation(&letters);
        let positions =
            (0..length).map(|i| (start + (rot + i) % length) % parent.len()).collect();
        Ok(CutPart { word, positions, parent_len: parent.len() })
    }

    /// Maps an occurrence inside this part back into the parent word, when
    /// its letters sit at consecutive parent positions (it does not straddle
    /// a cut point).
    pub fn lift(&self, occ: Occurrence) -> Option<Occurrence> {
        let n = self.positions.len();
        if occ.start >= n || occ.length == 0 || occ.length > n {
            return None;
        }
        let first = self.positions[occ.start];
        for i in 1..occ.length {
            let here = self.positions[(occ.start + i) % n];
            if here != (first + i) % self.parent_len {
                return None;
            }
        }
        Some(Occurrence::new(first, occ.length))
    }

    /// Maps a parent occurrence into this part, when all its letters lie in
    /// the part at consecutive part positions.
    pub fn project(&self, occ: Occurrence) -> Option<Occurrence> {
        let n = self.positions.len();
        if occ.length == 0 || occ.length > n {
            return None;
        }
        let idx_of = |parent_pos: usize| self.positions.iter().position(|&p| p == parent_pos);
        let first = idx_of(occ.start % self.parent_len)?;
        for i in 1..occ.length {
            let here = idx_of((occ.start + i) % self.parent_len)?;
            if here != (first + i) % n {
                return None;
            }
        }
        Some(Occurrence::new(first, occ.length))
    }
}

/// The two cut windows as `(start, length)` in the parent word.
///
/// For types 1 and 2 the word is cut immediately before the last letter of
/// each strand, splitting it into two complementary arcs.  For type 3 the
/// first part runs from the last letter of `P` to the first letter of `Q`
/// inclusive, the second from the last letter of `Q` to the first letter of
/// `P`.
fn cut_windows(w: &CyclicWord, pair: &LinkedPair) -> ((usize, usize), (usize, usize)) {
    let l = w.len();
    let p_last = (pair.p.start + pair.p.length - 1) % l;
    let q_last = (pair.q.start + pair.q.length - 1) % l;
    match pair.kind {
        PairKind::Type1 | PairKind::Type2 => {
            let len1 = (q_last + l - p_last) % l;
            let len2 = l - len1;
            ((p_last, len1), (q_last, len2))
        }
        PairKind::Type3 => {
            let p_first = pair.p.start % l;
            let q_first = pair.q.start % l;
            let len1 = (q_first + l - p_last) % l + 1;
            let len2 = (p_first + l - q_last) % l + 1;
            ((p_last, len1), (q_last, len2))
        }
    }
}

fn validate_lp1_pair(w: &CyclicWord, pair: &LinkedPair, o: &SurfaceSymbol) -> Result<(), Error> {
    match locate_lp1(w, pair.p, pair.q, o) {
        Some(found) if found == *pair => Ok(()),
        _ => Err(Error::InvalidPair),
    }
}

/// Cuts `w` along a pair from `LP1(w)` into the ordered pair of cyclic
/// words.  The pair is re-validated against `o`; both outputs are non-empty
/// reduced words.
pub fn cut(
    w: &CyclicWord,
    pair: &LinkedPair,
    o: &SurfaceSymbol,
) -> Result<(CyclicWord, CyclicWord), Error> {
    validate_lp1_pair(w, pair, o)?;
    cut_unchecked(w, pair)
}

/// Like [`cut`] but also reporting the parent positions of each output letter.
pub fn cut_parts(
    w: &CyclicWord,
    pair: &LinkedPair,
    o: &SurfaceSymbol,
) -> Result<(CutPart, CutPart), Error> {
    validate_lp1_pair(w, pair, o)?;
    let (a, b) = cut_windows(w, pair);
    Ok((CutPart::from_window(w, a.0, a.1)?, CutPart::from_window(w, b.0, b.1)?))
}

/// Cut without re-validating the pair (enumeration output is always valid).
pub fn cut_unchecked(w: &CyclicWord, pair: &LinkedPair) -> Result<(CyclicWord, CyclicWord), Error> {
    let (a, b) = cut_windows(w, pair);
    let realize = |(start, len): (usize, usize)| {
        let letters: Vec<_> = (0..len).map(|i| w.letter_at(start + i)).collect();
        CyclicWord::from_reduced(&LinearWord::new(letters))
    };
    Ok((realize(a)?, realize(b)?))
}

/// Cuts the half `index` of the outer cut again along `inner`, which must be
/// a linked pair of that half; returns both inner cut results.
pub fn iterated_cut(
    w: &CyclicWord,
    outer: &LinkedPair,
    index: CutIndex,
    inner: &LinkedPair,
    o: &SurfaceSymbol,
) -> Result<(CyclicWord, CyclicWord), Error> {
    let (first, second) = cut(w, outer, o)?;
    let target = match index {
        CutIndex::First => first,
        CutIndex::Second => second,
    };
    cut(&target, inner, o)
}

/// The Turaev cobracket: the signed sum of cut pairs over all linked pairs
/// of `w`.  Sign-zero pairs contribute nothing.
pub fn cobracket(w: &CyclicWord, o: &SurfaceSymbol) -> Tensor2 {
    let mut out = Tensor2::zero();
    for pair in enumerate_lp1(w, o) {
        if pair.sign == 0 {
            continue;
        }
        let (d1, d2) = cut_unchecked(w, &pair).expect("cut of a linked pair is reduced");
        out.add_term((d1, d2), i64::from(pair.sign));
    }
    out
}

/// Merges `v` and `w` along a pair from `LP2(v, w)` into one cyclic word.
///
/// For types 1 and 2 this concatenates the full representatives of `v` and
/// `w` cut immediately before the last letters of the strands; for type 3 it
/// concatenates the two arcs outside the shared middle segment.
pub fn merge(
    v: &CyclicWord,
    w: &CyclicWord,
    pair: &LinkedPair,
    o: &SurfaceSymbol,
) -> Result<CyclicWord, Error> {
    match locate_lp2(v, w, pair.p, pair.q, o) {
        Some(found) if found == *pair => {}
        _ => return Err(Error::InvalidPair),
    }
    merge_unchecked(v, w, pair)
}

/// Merge without re-validating the pair.
pub fn merge_unchecked(
    v: &CyclicWord,
    w: &CyclicWord,
    pair: &LinkedPair,
) -> Result<CyclicWord, Error> {
    let p_last = (pair.p.start + pair.p.length - 1) % v.len();
    let q_last = (pair.q.start + pair.q.length - 1) % w.len();
    let joined = match pair.kind {
        PairKind::Type1 | PairKind::Type2 => {
            v.rotation_from(p_last).concat(&w.rotation_from(q_last))
        }
        PairKind::Type3 => {
            let p_first = pair.p.start % v.len();
            let q_first = pair.q.start % w.len();
            let len_v = (p_first + v.len() - p_last) % v.len() + 1;
            let len_w = (q_first + w.len() - q_last) % w.len() + 1;
            let mut letters = Vec::with_capacity(len_v + len_w);
            letters.extend((0..len_v).map(|i| v.letter_at(p_last + i)));
            letters.extend((0..len_w).map(|i| w.letter_at(q_last + i)));
            LinearWord::new(letters)
        }
    };
    CyclicWord::from_reduced(&joined)
}

/// The Goldman bracket of two basis words: the signed sum of merged words
/// over the linked pairs between them.
pub fn bracket(v: &CyclicWord, w: &CyclicWord, o: &SurfaceSymbol) -> FormalSum {
    let mut out = FormalSum::zero();
    for pair in enumerate_lp2(v, w, o) {
        if pair.sign == 0 {
            continue;
        }
        let merged = merge_unchecked(v, w, &pair).expect("merge of a linked pair is reduced");
        out.add_term(merged, i64::from(pair.sign));
    }
    out
}

/// Bilinear extension of [`bracket`] to formal sums.
pub fn bracket_sums(a: &FormalSum, b: &FormalSum, o: &SurfaceSymbol) -> FormalSum {
    let mut out = FormalSum::zero();
    for (v, cv) in a.iter() {
        for (w, cw) in b.iter() {
            for (word, c) in bracket(v, w, o).iter() {
                out.add_term(word.clone(), c * cv * cw);
            }
        }
    }
    out
}

/// Linear extension of [`cobracket`] to formal sums.
pub fn cobracket_sum(a: &FormalSum, o: &SurfaceSymbol) -> Tensor2 {
    let mut out = Tensor2::zero();
    for (w, c) in a.iter() {
        for (key, d) in cobracket(w, o).iter() {
            out.add_term(key.clone(), c * d);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Alphabet;

    fn symbol(text: &str) -> SurfaceSymbol {
        SurfaceSymbol::parse(text).unwrap()
    }
    fn word(text: &str, n: u32) -> CyclicWord {
        CyclicWord::parse(text, Alphabet::new(n)).unwrap().unwrap()
    }

    #[test]
    fn sum_ops_are_exact() {
        let x = word("a1", 2);
        let y = word("a2", 2);
        let s = FormalSum::from_terms([(x.clone(), 2), (y.clone(), -1)]);
        assert_eq!(s.add(&s.negate()), FormalSum::zero());
        assert_eq!(s.scale(3).coeff(&x), 6);
        assert!(s.sub(&s).is_zero());

        let t = Tensor2::from_terms([((x.clone(), y.clone()), 1), ((y.clone(), x.clone()), 4)]);
        assert_eq!(t.swap().swap(), t);

        let u = Tensor3::from_terms([((x.clone(), y.clone(), x.clone()), 7)]);
        assert_eq!(u.rotate().rotate().rotate(), u);
    }

    #[test]
    fn display_formats_are_sorted_and_signed() {
        let x = word("a1", 2);
        let y = word("A1", 2);
        let s = FormalSum::from_terms([(x.clone(), 1), (y.clone(), -2)]);
        // "A1" sorts before "a1" in text order
        assert_eq!(s.lines(), vec!["-2 A1", "+1 a1"]);
        assert_eq!(FormalSum::zero().lines(), vec!["0"]);
        let t = Tensor2::from_terms([((x.clone(), y.clone()), 1)]);
        assert_eq!(t.lines(), vec!["+1 a1 | A1"]);
    }

    #[test]
    fn type1_cut_index_contract() {
        // a positive 6-letter word has no inverse letters, so any two
        // occurrences ending at positions 1 and 4 cut it into 3 + 3
        let o = symbol("a1a2A1A2");
        let w = word("a1a1a2a2a1a2", 2);
        let pairs = enumerate_lp1(&w, &o);
        let pair = pairs
            .iter()
            .find(|c| c.sign != 0 && c.kind == PairKind::Type1)
            .expect("nonzero type-1 pair");
        let (d1, d2) = cut(&w, pair, &o).unwrap();
        assert_eq!(d1.len() + d2.len(), w.len());
    }

    #[test]
    fn cut_halves_swap_with_the_pair() {
        let o = symbol("a1a2A1A2");
        for text in ["A1A1A2A2", "a1a1a2a2a1a2", "a1a2a1A2"] {
            let w = word(text, 2);
            for pair in enumerate_lp1(&w, &o) {
                let (d1, d2) = cut(&w, &pair, &o).unwrap();
                let (e1, e2) = cut(&w, &pair.swapped(), &o).unwrap();
                assert_eq!((d1, d2), (e2, e1));
            }
        }
    }

    #[test]
    fn cut_rejects_foreign_pairs() {
        let o = symbol("a1a2A1A2");
        let w = word("A1A1A2A2", 2);
        let pair = enumerate_lp1(&w, &o)
            .into_iter()
            .find(|c| c.sign != 0)
            .expect("nonzero pair");
        // tampered sign
        let mut bad = pair;
        bad.sign = -bad.sign;
        assert!(matches!(cut(&w, &bad, &o), Err(Error::InvalidPair)));
        // occurrence outside the word
        let mut out_of_range = pair;
        out_of_range.p.start = w.len() + 3;
        assert!(matches!(cut(&w, &out_of_range, &o), Err(Error::InvalidPair)));
        // unlinked occurrences
        let unlinked = locate_lp1(&w, pair.p, pair.p, &o);
        assert!(unlinked.is_none());
    }

    #[test]
    fn cobracket_of_short_words_vanishes() {
        let o = symbol("a1a2A1A2");
        assert!(cobracket(&word("a1", 2), &o).is_zero());
        assert!(cobracket(&word("a1a2", 2), &o).is_zero());
    }

    #[test]
    fn bracket_of_the_two_generators() {
        let o = symbol("a1a2A1A2");
        let b = bracket(&word("a1", 2), &word("a2", 2), &o);
        assert_eq!(b, FormalSum::single(word("a1a2", 2)));
    }

    #[test]
    fn cobracket_with_one_essential_crossing() {
        // value confirmed by the brute-force oracle: the single nonzero
        // crossing splits the word into a1a2 and its square
        let o = symbol("a1a2A1A2");
        let d = cobracket(&word("a1a1a2a2a1a2", 2), &o);
        let expected = Tensor2::from_terms([
            ((word("a1a2", 2), word("a1a2a1a2", 2)), 1),
            ((word("a1a2a1a2", 2), word("a1a2", 2)), -1),
        ]);
        assert_eq!(d, expected);
    }

    #[test]
    fn bracket_of_the_power_pair_cancels() {
        // every linked pair between these two words has sign 0, so the
        // bracket is the zero sum (confirmed by the brute-force oracle)
        let o = symbol("a1a2A1A2");
        let b = bracket(&word("a1a1a2", 2), &word("a1a1a2a1a1a2a1", 2), &o);
        assert!(b.is_zero());
    }

    #[test]
    fn bracket_with_itself_vanishes() {
        let o = symbol("a1a2A1A2");
        for text in ["a1", "a1a2", "a1a1a2", "A1A1A2A2"] {
            let w = word(text, 2);
            assert!(bracket(&w, &w, &o).is_zero(), "[{w}, {w}] != 0");
        }
    }

    #[test]
    fn merge_between_single_letters() {
        let o = symbol("a1a2A1A2");
        let v = word("a1", 2);
        let w = word("a2", 2);
        let pair = enumerate_lp2(&v, &w, &o)[0];
        assert_eq!(merge(&v, &w, &pair, &o).unwrap(), word("a1a2", 2));
        // swapped pair lives in LP2(w, v), same merged word
        assert_eq!(merge(&w, &v, &pair.swapped(), &o).unwrap(), word("a1a2", 2));
        // foreign pair rejected
        assert!(matches!(merge(&w, &w, &pair, &o), Err(Error::InvalidPair)));
    }

    #[test]
    fn iterated_cut_validates_the_chain() {
        let o = symbol("a1a2A1A2");
        let w = word("a1a1a2a2a1a2", 2);
        let outer = enumerate_lp1(&w, &o)
            .into_iter()
            .find(|c| c.sign != 0)
            .expect("nonzero pair");
        let (d1, _) = cut(&w, &outer, &o).unwrap();
        match enumerate_lp1(&d1, &o).first() {
            Some(inner) => {
                iterated_cut(&w, &outer, CutIndex::First, inner, &o).unwrap();
            }
            None => {
                // no inner pair: any pair of w itself must be rejected
                assert!(matches!(
                    iterated_cut(&w, &outer, CutIndex::First, &outer, &o),
                    Err(Error::InvalidPair)
                ));
            }
        }
    }

    #[test]
    fn cut_parts_positions_lift_back() {
        let o = symbol("a1a2A1A2");
        let w = word("A1A1A2A2", 2);
        for pair in enumerate_lp1(&w, &o) {
            let (p1, p2) = cut_parts(&w, &pair, &o).unwrap();
            for part in [&p1, &p2] {
                // each letter of the part matches the parent letter it maps to
                for (i, &pos) in part.positions.iter().enumerate() {
                    assert_eq!(part.word.letters()[i], w.letters()[pos]);
                }
                // a window of length 1..=part len that does not wrap lifts
                let occ = Occurrence::new(0, part.word.len());
                if let Some(lifted) = part.lift(occ) {
                    assert_eq!(
                        w.window(lifted).unwrap().letters(),
                        part.word.letters()
                    );
                    // and projects back
                    assert_eq!(part.project(lifted), Some(occ));
                }
            }
        }
    }
}
