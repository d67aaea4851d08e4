use std::fmt;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Alphabet sizes below two are not allowed.
    AlphabetTooSmall { q: u32 },
    /// A letter is not a residue modulo the alphabet size.
    LetterOutOfRange { letter: u32, q: u32 },
    /// Two words that must share an alphabet do not.
    AlphabetMismatch { left: u32, right: u32 },
    /// Failed to parse a word from its text form.
    ParseWord { text: String },
    /// A rule was applied to a word shorter than it requires.
    WordTooShort { len: usize, needed: usize },
    /// A length parameter that must be at least one was zero.
    ZeroLength,
    /// A factor span with `start > end` or `start == 0` (indices are 1-based).
    BadSpan { start: usize, end: usize },
    /// A span does not fit inside the host word.
    SpanOutOfBounds {
        start: usize,
        len: usize,
        word_len: usize,
    },
    /// The two halves of the requested factor differ.
    NotASquare { start: usize, len: usize },
    /// The allowed-length set is empty.
    EmptyLengthSet,
    /// Allowed lengths must be at least one.
    ZeroInLengthSet,
    /// The separation requirement `l >= 2*l'` fails for a pair in L.
    SeparationViolation { shorter: usize, longer: usize },
    /// A corruption trace violates its declared model's structure.
    InvalidTrace(String),
    /// The gaps and blocks of a plan do not reassemble to the corrupted word.
    MalformedPlan,
    /// The requested number of disjoint blocks cannot fit in the word.
    InfeasiblePlan { word_len: usize, requested: usize },
    /// A configured size or search budget was exceeded.
    ResourceLimit { cap: usize },
    /// The rate of an empty code is undefined.
    EmptyCode,
    /// A parameter combination outside an operation's domain.
    InvalidArgument(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::AlphabetTooSmall { q } => write!(f, "alphabet size {} is below 2", q),
            Error::LetterOutOfRange { letter, q } => {
                write!(f, "letter {} is not a residue mod {}", letter, q)
            }
            Error::AlphabetMismatch { left, right } => {
                write!(f, "alphabet sizes differ: {} vs {}", left, right)
            }
            Error::ParseWord { text } => write!(f, "cannot parse word from {:?}", text),
            Error::WordTooShort { len, needed } => {
                write!(
                    f,
                    "word of length {} is shorter than required {}",
                    len, needed
                )
            }
            Error::ZeroLength => write!(f, "length parameter must be at least 1"),
            Error::BadSpan { start, end } => {
                write!(
                    f,
                    "invalid span [{}, {}] (1-based, start <= end)",
                    start, end
                )
            }
            Error::SpanOutOfBounds {
                start,
                len,
                word_len,
            } => write!(
                f,
                "span of length {} at position {} exceeds word length {}",
                len, start, word_len
            ),
            Error::NotASquare { start, len } => write!(
                f,
                "factor at position {} is not a square of half-length {}",
                start, len
            ),
            Error::EmptyLengthSet => write!(f, "length set must be nonempty"),
            Error::ZeroInLengthSet => write!(f, "length set members must be at least 1"),
            Error::SeparationViolation { shorter, longer } => write!(
                f,
                "lengths {} and {} violate the separation requirement {} >= 2*{}",
                shorter, longer, longer, shorter
            ),
            Error::InvalidTrace(msg) => write!(f, "invalid trace: {}", msg),
            Error::MalformedPlan => {
                write!(
                    f,
                    "plan gaps and blocks do not reassemble to the input word"
                )
            }
            Error::InfeasiblePlan {
                word_len,
                requested,
            } => write!(
                f,
                "{} disjoint blocks cannot fit in a word of length {}",
                requested, word_len
            ),
            Error::ResourceLimit { cap } => write!(f, "configured budget of {} exceeded", cap),
            Error::EmptyCode => write!(f, "rate of an empty code is undefined"),
            Error::InvalidArgument(msg) => write!(f, "{}", msg),
        }
    }
}

impl std::error::Error for Error {}
