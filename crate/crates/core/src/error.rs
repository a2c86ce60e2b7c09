use core::fmt;

/// Errors reported by the word, orientation and bialgebra operations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Error {
    /// A letter index is zero or exceeds the alphabet size.
    InvalidLetter { index: u32, alphabet: u32 },
    /// Word text does not match the `a<k>`/`A<k>` grammar.
    Parse { position: usize },
    /// Power exponent below one.
    InvalidExponent { exponent: i64 },
    /// Occurrence start lies outside the word.
    InvalidOccurrence { start: usize, len: usize, word_len: usize },
    /// The cyclic word is not a surface symbol over the given alphabet.
    NotASurfaceSymbol { reason: SurfaceDefect },
    /// Orientation queried on a word shorter than three letters.
    UnsupportedLength { len: usize },
    /// A linear word handed to a reduced-only constructor was not
    /// cyclically reduced, or was empty.
    NotReduced,
    /// A pair does not belong to the linked-pair set it was used with.
    InvalidPair,
    /// A structure-constant table is missing entries.
    IncompleteTable { missing: usize },
}

/// Why a word failed surface-symbol validation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SurfaceDefect {
    WrongLength,
    MissingLetter,
    DuplicateLetter,
    NotReduced,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidLetter { index, alphabet } => {
                write!(f, "letter index {index} outside alphabet of size {alphabet}")
            }
            Error::Parse { position } => write!(f, "malformed word text at byte {position}"),
            Error::InvalidExponent { exponent } => write!(f, "exponent {exponent} must be >= 1"),
            Error::InvalidOccurrence { start, len, word_len } => write!(
                f,
                "occurrence {start}+{len} invalid for word of length {word_len}"
            ),
            Error::NotASurfaceSymbol { reason } => {
                let why = match reason {
                    SurfaceDefect::WrongLength => "wrong length",
                    SurfaceDefect::MissingLetter => "missing letter",
                    SurfaceDefect::DuplicateLetter => "duplicate letter",
                    SurfaceDefect::NotReduced => "not reduced",
                };
                write!(f, "not a surface symbol: {why}")
            }
            Error::UnsupportedLength { len } => {
                write!(f, "orientation undefined for words of length {len} (< 3)")
            }
            Error::NotReduced => write!(f, "word is not a non-empty reduced cyclic word"),
            Error::InvalidPair => write!(f, "pair is not a linked pair of the given word(s)"),
            Error::IncompleteTable { missing } => {
                write!(f, "structure-constant table incomplete: {missing} entries missing")
            }
        }
    }
}

impl core::error::Error for Error {}
