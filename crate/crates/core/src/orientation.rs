//! Surface symbols and the cyclic orientation map.
//!
//! A surface symbol is a reduced cyclic word in which every letter of the
//! alphabet appears exactly once; it encodes an oriented surface with
//! boundary.  The orientation map sends a short cyclic word to `+1` when its
//! letters embed into the symbol's cyclic order preserving orientation, `-1`
//! when reversing, and `0` otherwise.

use alloc::vec::Vec;

use crate::error::{Error, SurfaceDefect};
use crate::words::{Alphabet, CyclicWord, Letter, LinearWord};

/// Value of the orientation map: `-1`, `0` or `+1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Orientation {
    Reversing,
    None,
    Preserving,
}

impl Orientation {
    pub fn value(self) -> i8 {
        match self {
            Orientation::Reversing => -1,
            Orientation::None => 0,
            Orientation::Preserving => 1,
        }
    }

    pub fn from_value(v: i8) -> Self {
        match v {
            0 => Orientation::None,
            v if v < 0 => Orientation::Reversing,
            _ => Orientation::Preserving,
        }
    }
}

/// A validated surface symbol with an O(1) letter-position table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SurfaceSymbol {
    word: CyclicWord,
    alphabet: Alphabet,
    position: Vec<u32>,
}

impl SurfaceSymbol {
    /// Validates that `word` uses every letter of the alphabet exactly once.
    /// Reducedness is inherited from [`CyclicWord`].
    pub fn new(word: CyclicWord, alphabet: Alphabet) -> Result<Self, Error> {
        let n = alphabet.size() as usize;
        if word.len() != 2 * n {
            return Err(Error::NotASurfaceSymbol { reason: SurfaceDefect::WrongLength });
        }
        let mut position = alloc::vec![u32::MAX; 2 * n];
        for (i, &x) in word.letters().iter().enumerate() {
            if !alphabet.contains(x) {
                return Err(Error::NotASurfaceSymbol { reason: SurfaceDefect::MissingLetter });
            }
            let slot = &mut position[x.code()];
            if *slot != u32::MAX {
                return Err(Error::NotASurfaceSymbol { reason: SurfaceDefect::DuplicateLetter });
            }
            *slot = i as u32;
        }
        if position.iter().any(|&p| p == u32::MAX) {
            return Err(Error::NotASurfaceSymbol { reason: SurfaceDefect::MissingLetter });
        }
        Ok(SurfaceSymbol { word, alphabet, position })
    }

    /// Builds a symbol from a linear word without performing any reduction:
    /// a non-reduced input is rejected rather than silently reduced.
    pub fn from_linear(word: &LinearWord, alphabet: Alphabet) -> Result<Self, Error> {
        let cyclic = CyclicWord::from_reduced(word)
            .map_err(|_| Error::NotASurfaceSymbol { reason: SurfaceDefect::NotReduced })?;
        Self::new(cyclic, alphabet)
    }

    /// Parses symbol text; infers the alphabet size from the length.
    pub fn parse(text: &str) -> Result<Self, Error> {
        // Parse with a permissive alphabet first, then validate coverage.
        let probe = Alphabet::new(u32::MAX / 4);
        let word = LinearWord::parse(text, probe)?;
        if word.len() < 2 || word.len() % 2 != 0 {
            return Err(Error::NotASurfaceSymbol { reason: SurfaceDefect::WrongLength });
        }
        let n = (word.len() / 2) as u32;
        Self::from_linear(&word, Alphabet::new(n))
    }

    pub fn word(&self) -> &CyclicWord {
        &self.word
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// Position of `x` in the canonical rotation of the symbol.
    pub fn position_of(&self, x: Letter) -> Option<u32> {
        if self.alphabet.contains(x) {
            Some(self.position[x.code()])
        } else {
            None
        }
    }

    /// Euler characteristic of the encoded surface, `1 - n`.
    pub fn euler_characteristic(&self) -> i64 {
        1 - i64::from(self.alphabet.size())
    }

    /// Orientation of the cyclic word spelled by `letters`.
    ///
    /// `+1` when the word is cyclically reduced, its letters are pairwise
    /// distinct and they trace the symbol's cyclic order forwards; `-1` when
    /// backwards; `0` in every other case.  Words shorter than three letters
    /// are rejected: their cyclic orientation is not well defined.
    pub fn orientation_of(&self, letters: &[Letter]) -> Result<Orientation, Error> {
        let k = letters.len();
        if k < 3 {
            return Err(Error::UnsupportedLength { len: k });
        }
        // cyclically reduced
        for i in 0..k {
            if letters[(i + 1) % k] == letters[i].inverse() {
                return Ok(Orientation::None);
            }
        }
        // pairwise distinct letters with known positions
        let mut pos = [0u32; 8];
        let mut buf: Vec<u32>;
        let pos: &mut [u32] = if k <= 8 {
            &mut pos[..k]
        } else {
            buf = alloc::vec![0; k];
            &mut buf
        };
        for (i, &x) in letters.iter().enumerate() {
            match self.position_of(x) {
                Some(p) => pos[i] = p,
                None => return Ok(Orientation::None),
            }
        }
        for i in 0..k {
            for j in (i + 1)..k {
                if pos[i] == pos[j] {
                    return Ok(Orientation::None);
                }
            }
        }
        // one descent around the cycle = a single ascending run; one ascent
        // = a single descending run
        let mut descents = 0usize;
        for i in 0..k {
            if pos[i] > pos[(i + 1) % k] {
                descents += 1;
            }
        }
        Ok(if descents == 1 {
            Orientation::Preserving
        } else if descents == k - 1 {
            Orientation::Reversing
        } else {
            Orientation::None
        })
    }

    /// Orientation of a linear word read cyclically.
    pub fn orientation(&self, w: &LinearWord) -> Result<Orientation, Error> {
        self.orientation_of(w.letters())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(i: u32) -> Letter {
        Letter::plain(i)
    }
    fn b(i: u32) -> Letter {
        Letter::barred(i)
    }
    fn symbol(text: &str) -> SurfaceSymbol {
        SurfaceSymbol::parse(text).unwrap()
    }

    #[test]
    fn accepts_the_torus_symbol() {
        let o = symbol("a1a2A1A2");
        assert_eq!(o.word().text(), "a1a2A1A2");
        assert_eq!(o.alphabet().size(), 2);
        assert_eq!(o.position_of(a(1)), Some(0));
        assert_eq!(o.position_of(b(2)), Some(3));
    }

    #[test]
    fn rejects_non_reduced_and_incomplete_symbols() {
        assert!(matches!(
            SurfaceSymbol::parse("a1A1a2A2"),
            Err(Error::NotASurfaceSymbol { reason: SurfaceDefect::NotReduced })
        ));
        // A2 missing and odd length
        assert!(matches!(
            SurfaceSymbol::parse("a1a2A1"),
            Err(Error::NotASurfaceSymbol { .. })
        ));
        // duplicate letter
        assert!(matches!(
            SurfaceSymbol::parse("a1a2a1A2"),
            Err(Error::NotASurfaceSymbol { .. })
        ));
        // wrong alphabet size via the validating constructor
        let w = CyclicWord::parse("a1a2A1A2", Alphabet::new(2)).unwrap().unwrap();
        assert!(matches!(
            SurfaceSymbol::new(w, Alphabet::new(3)),
            Err(Error::NotASurfaceSymbol { reason: SurfaceDefect::WrongLength })
        ));
    }

    #[test]
    fn orientation_examples() {
        let o = symbol("a1a2a3A1A2A3");
        let val = |letters: &[Letter]| o.orientation_of(letters).unwrap().value();
        assert_eq!(val(&[a(1), a(2), a(3)]), 1);
        assert_eq!(val(&[a(1), a(3), a(2)]), -1);
        assert_eq!(val(&[a(1), a(1), a(2)]), 0);

        let torus = symbol("a1a2A1A2");
        assert_eq!(torus.orientation_of(&[b(2), b(1), a(1)]).unwrap().value(), 0);
        // the symbol itself traces its own order
        assert_eq!(torus.orientation_of(&[a(1), a(2), b(1), b(2)]).unwrap().value(), 1);
        assert_eq!(torus.orientation_of(&[b(2), b(1), a(2), a(1)]).unwrap().value(), -1);
    }

    #[test]
    fn orientation_rejects_short_words() {
        let o = symbol("a1a2A1A2");
        assert!(matches!(
            o.orientation_of(&[a(1), a(2)]),
            Err(Error::UnsupportedLength { len: 2 })
        ));
        assert!(matches!(o.orientation_of(&[]), Err(Error::UnsupportedLength { len: 0 })));
    }

    #[test]
    fn orientation_is_rotation_invariant_and_flips_under_inverse() {
        let o = symbol("a1a2a3A1A2A3");
        let alphabet = o.alphabet();
        let letters: Vec<Letter> = alphabet.letters().collect();
        // every 3-letter word over A_3
        for &x in &letters {
            for &y in &letters {
                for &z in &letters {
                    let w = LinearWord::new(vec![x, y, z]);
                    let v = o.orientation(&w).unwrap().value();
                    for k in 1..3 {
                        let rot: Vec<Letter> =
                            (0..3).map(|i| w.letters()[(k + i) % 3]).collect();
                        assert_eq!(o.orientation_of(&rot).unwrap().value(), v);
                    }
                    let inv = w.inverse();
                    let vi = o.orientation(&inv).unwrap().value();
                    if v != 0 {
                        assert_eq!(vi, -v, "inverse must flip orientation of {w}");
                    }
                }
            }
        }
    }

    #[test]
    fn euler_characteristic_is_one_minus_n() {
        assert_eq!(symbol("a1a2A1A2").euler_characteristic(), -1);
        assert_eq!(symbol("a1a2a3A1A2A3").euler_characteristic(), -2);
    }
}
