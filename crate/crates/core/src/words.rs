//! Letters, linear words and reduced cyclic words.
//!
//! A word is built from the `2n` symbols `a1, ..., an, A1, ..., An`, where the
//! uppercase form is the inverse of the lowercase one.  Cyclic words are kept
//! in a canonical rotation (the lexicographically least one under the letter
//! order `a1 < A1 < a2 < A2 < ...`), so two cyclic words are equal exactly
//! when their stored representatives are equal.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

/// One symbol of the alphabet: a generator index plus an inverse flag.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    index: u32,
    barred: bool,
}

impl Letter {
    /// A plain or barred letter. `index` is 1-based.
    pub fn new(index: u32, barred: bool) -> Self {
        assert!(index >= 1, "letter index must be >= 1");
        Letter { index, barred }
    }

    /// The generator `a<index>`.
    pub fn plain(index: u32) -> Self {
        Letter::new(index, false)
    }

    /// The inverse generator `A<index>`.
    pub fn barred(index: u32) -> Self {
        Letter::new(index, true)
    }

    pub fn index(self) -> u32 {
        self.index
    }

    pub fn is_barred(self) -> bool {
        self.barred
    }

    /// The inverse letter; an involution.
    pub fn inverse(self) -> Self {
        Letter { index: self.index, barred: !self.barred }
    }

    /// Dense code `2*(index-1) + barred`, used for position tables.
    pub fn code(self) -> usize {
        2 * (self.index as usize - 1) + usize::from(self.barred)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = if self.barred { 'A' } else { 'a' };
        write!(f, "{c}{}", self.index)
    }
}

/// The alphabet with generators `1..=n`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Alphabet {
    n: u32,
}

impl Alphabet {
    pub fn new(n: u32) -> Self {
        assert!(n >= 1, "alphabet needs at least one generator");
        Alphabet { n }
    }

    pub fn size(self) -> u32 {
        self.n
    }

    pub fn contains(self, letter: Letter) -> bool {
        letter.index >= 1 && letter.index <= self.n
    }

    /// All `2n` letters in the order `a1, A1, a2, A2, ...`.
    pub fn letters(self) -> impl Iterator<Item = Letter> {
        (1..=self.n).flat_map(|i| [Letter::plain(i), Letter::barred(i)])
    }
}

/// A finite, possibly empty sequence of letters.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct LinearWord {
    letters: Vec<Letter>,
}

impl LinearWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        LinearWord { letters }
    }

    pub fn empty() -> Self {
        LinearWord { letters: Vec::new() }
    }

    /// Parses text in the grammar `(([aA])([1-9][0-9]*))*`.
    ///
    /// Indices outside `1..=n` give [`Error::InvalidLetter`]; anything not
    /// matching the grammar gives [`Error::Parse`].  No reduction is applied.
    pub fn parse(text: &str, alphabet: Alphabet) -> Result<Self, Error> {
        let bytes = text.as_bytes();
        let mut letters = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let barred = match bytes[i] {
                b'a' => false,
                b'A' => true,
                _ => return Err(Error::Parse { position: i }),
            };
            let start = i + 1;
            let mut end = start;
            while end < bytes.len() && bytes[end].is_ascii_digit() {
                end += 1;
            }
            if end == start {
                return Err(Error::Parse { position: start });
            }
            if bytes[start] == b'0' && end > start + 1 {
                // leading zero is outside the grammar
                return Err(Error::Parse { position: start });
            }
            let digits = &text[start..end];
            let index: u32 = digits.parse().map_err(|_| Error::Parse { position: start })?;
            if index == 0 || index > alphabet.size() {
                return Err(Error::InvalidLetter { index, alphabet: alphabet.size() });
            }
            letters.push(Letter::new(index, barred));
            i = end;
        }
        Ok(LinearWord { letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Letter> {
        self.letters.iter()
    }

    /// Reverses the word and bars every letter; an involution.
    pub fn inverse(&self) -> Self {
        LinearWord {
            letters: self.letters.iter().rev().map(|x| x.inverse()).collect(),
        }
    }

    /// True when no two adjacent letters are mutually inverse.
    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[1] != w[0].inverse())
    }

    /// The unique freely reduced word obtained by cancelling adjacent
    /// inverse pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &x in &self.letters {
            if stack.last() == Some(&x.inverse()) {
                stack.pop();
            } else {
                stack.push(x);
            }
        }
        LinearWord { letters: stack }
    }

    /// Concatenation.
    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        LinearWord { letters }
    }
}

impl fmt::Display for LinearWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.letters {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl From<Vec<Letter>> for LinearWord {
    fn from(letters: Vec<Letter>) -> Self {
        LinearWord { letters }
    }
}

/// Index of the lexicographically least rotation of `s` (Booth's algorithm).
///
/// Runs in linear time; the unit tests check it against the quadratic scan.
pub fn least_rotation(s: &[Letter]) -> usize {
    let n = s.len();
    if n <= 1 {
        return 0;
    }
    const NONE: usize = usize::MAX;
    let at = |i: usize| s[i % n];
    let mut fail = alloc::vec![NONE; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = at(j);
        let mut i = fail[j - k - 1];
        while i != NONE && sj != at(k + i + 1) {
            if sj < at(k + i + 1) {
                k = j - i - 1;
            }
            i = fail[i];
        }
        if i == NONE && sj != at(k) {
            if sj < at(k) {
                k = j;
            }
            fail[j - k] = NONE;
        } else {
            fail[j - k] = i.wrapping_add(1);
        }
    }
    k
}

/// A subword occurrence: a start position in the canonical representative
/// plus a length.  The realized letters are read cyclically, so the length
/// may exceed the word length (subwords of powers).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Occurrence {
    pub start: usize,
    pub length: usize,
}

impl Occurrence {
    pub fn new(start: usize, length: usize) -> Self {
        Occurrence { start, length }
    }
}

impl fmt::Display for Occurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}", self.start, self.length)
    }
}

/// A non-empty reduced cyclic word, stored as its canonical rotation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CyclicWord {
    canonical: LinearWord,
}

impl CyclicWord {
    /// Freely reduces `w`, cancels inverse first/last pairs until the result
    /// is cyclically reduced, and canonicalizes the rotation.  Returns `None`
    /// when everything cancels: the empty class is not a `CyclicWord`.
    pub fn reduce(w: &LinearWord) -> Option<Self> {
        let reduced = w.free_reduce();
        let v = reduced.letters();
        let mut lo = 0;
        let mut hi = v.len();
        while hi - lo >= 2 && v[hi - 1] == v[lo].inverse() {
            lo += 1;
            hi -= 1;
        }
        if lo == hi {
            return None;
        }
        Some(Self::from_reduced_slice(&v[lo..hi]))
    }

    /// Wraps an already cyclically reduced, non-empty word, canonicalizing
    /// only the rotation.  Errors with [`Error::NotReduced`] otherwise.
    pub fn from_reduced(w: &LinearWord) -> Result<Self, Error> {
        let v = w.letters();
        if v.is_empty() || !w.is_reduced() || v[0] == v[v.len() - 1].inverse() {
            return Err(Error::NotReduced);
        }
        Ok(Self::from_reduced_slice(v))
    }

    fn from_reduced_slice(v: &[Letter]) -> Self {
        let k = least_rotation(v);
        let mut letters = Vec::with_capacity(v.len());
        letters.extend_from_slice(&v[k..]);
        letters.extend_from_slice(&v[..k]);
        CyclicWord { canonical: LinearWord::new(letters) }
    }

    /// Parses and reduces; `Ok(None)` when the text reduces to the empty class.
    pub fn parse(text: &str, alphabet: Alphabet) -> Result<Option<Self>, Error> {
        Ok(Self::reduce(&LinearWord::parse(text, alphabet)?))
    }

    pub fn len(&self) -> usize {
        self.canonical.len()
    }

    /// The canonical linear representative.
    pub fn canonical(&self) -> &LinearWord {
        &self.canonical
    }

    pub fn letters(&self) -> &[Letter] {
        self.canonical.letters()
    }

    /// The letter at cyclic position `i` (any `i`, wrapped).
    pub fn letter_at(&self, i: usize) -> Letter {
        self.letters()[i % self.len()]
    }

    /// The inverse cyclic word.
    pub fn inverse(&self) -> Self {
        Self::from_reduced(&self.canonical.inverse()).expect("inverse of reduced is reduced")
    }

    /// The canonical representative repeated `m` times.
    pub fn repeat(&self, m: u32) -> Result<LinearWord, Error> {
        if m < 1 {
            return Err(Error::InvalidExponent { exponent: m as i64 });
        }
        let mut letters = Vec::with_capacity(self.len() * m as usize);
        for _ in 0..m {
            letters.extend_from_slice(self.letters());
        }
        Ok(LinearWord::new(letters))
    }

    /// The linear representative starting at cyclic position `start`.
    pub fn rotation_from(&self, start: usize) -> LinearWord {
        let v = self.letters();
        let k = start % v.len();
        let mut letters = Vec::with_capacity(v.len());
        letters.extend_from_slice(&v[k..]);
        letters.extend_from_slice(&v[..k]);
        LinearWord::new(letters)
    }

    /// Realizes the subword at `occ`, reading cyclically and wrapping as
    /// needed.  The start must lie inside the word; the length is free.
    pub fn window(&self, occ: Occurrence) -> Result<LinearWord, Error> {
        if occ.start >= self.len() || occ.length == 0 {
            return Err(Error::InvalidOccurrence {
                start: occ.start,
                len: occ.length,
                word_len: self.len(),
            });
        }
        let v = self.letters();
        let letters = (0..occ.length).map(|i| v[(occ.start + i) % v.len()]).collect();
        Ok(LinearWord::new(letters))
    }

    /// Writes `self = root^r` with `r` maximal.  `r == 1` exactly when the
    /// word is primitive.
    pub fn primitive_root(&self) -> (CyclicWord, u32) {
        let v = self.letters();
        let n = v.len();
        let border = kmp_border(v);
        let p = n - border;
        if n % p == 0 && p < n {
            let root = CyclicWord { canonical: LinearWord::new(v[..p].to_vec()) };
            debug_assert_eq!(least_rotation(root.letters()), 0);
            (root, (n / p) as u32)
        } else {
            (self.clone(), 1)
        }
    }

    /// Canonical text form, e.g. `a1a1a2`.
    pub fn text(&self) -> String {
        alloc::format!("{self}")
    }
}

/// Length of the longest proper border of `s` (KMP failure value at the end).
fn kmp_border(s: &[Letter]) -> usize {
    let n = s.len();
    let mut pi = alloc::vec![0usize; n];
    for i in 1..n {
        let mut k = pi[i - 1];
        while k > 0 && s[i] != s[k] {
            k = pi[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        pi[i] = k;
    }
    pi[n - 1]
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical)
    }
}
