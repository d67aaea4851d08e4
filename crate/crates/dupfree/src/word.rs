//! Words over `Z_q`, factor spans, and tandem-duplication primitives.
//!
//! Letters are residues `0..q`. Positions in the public API are 1-based
//! throughout, and factor midpoints are kept as doubled integers
//! (`start + end`) so that even-length factors need no fractional values.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Error;

/// A set of duplication or forbidden lengths.
pub type LenSet = BTreeSet<usize>;

/// Builds a [`LenSet`] from a slice.
pub fn lenset(lengths: &[usize]) -> LenSet {
    lengths.iter().copied().collect()
}

/// The alphabet `Z_q`, `q >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Alphabet {
    q: u32,
}

impl Alphabet {
    pub fn new(q: u32) -> Result<Self, Error> {
        if q < 2 {
            return Err(Error::AlphabetTooSmall { q });
        }
        Ok(Alphabet { q })
    }

    pub fn size(self) -> u32 {
        self.q
    }

    /// `(a + b) mod q`.
    pub fn add(self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.q as u64) as u32
    }

    /// `(a - b) mod q`.
    pub fn sub(self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.q as u64 - b as u64) % self.q as u64) as u32
    }
}

/// A finite sequence of letters over a fixed alphabet.
///
/// The empty word is a valid value. Equality and ordering require equal
/// alphabets; ordering on words of one alphabet is lexicographic with
/// shorter prefixes first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    alphabet: Alphabet,
    letters: Vec<u32>,
}

impl Word {
    pub fn new(alphabet: Alphabet, letters: Vec<u32>) -> Result<Self, Error> {
        for &c in &letters {
            if c >= alphabet.size() {
                return Err(Error::LetterOutOfRange {
                    letter: c,
                    q: alphabet.size(),
                });
            }
        }
        Ok(Word { alphabet, letters })
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Word {
            alphabet,
            letters: Vec::new(),
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub(crate) fn from_raw(alphabet: Alphabet, letters: Vec<u32>) -> Self {
        debug_assert!(letters.iter().all(|&c| c < alphabet.size()));
        Word { alphabet, letters }
    }

    /// Parses the word text format: a string of decimal digits when
    /// `q <= 10`, comma-separated integers otherwise. The empty string is
    /// the empty word.
    pub fn parse(text: &str, alphabet: Alphabet) -> Result<Self, Error> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Word::empty(alphabet));
        }
        let parse_err = || Error::ParseWord {
            text: text.to_string(),
        };
        let letters: Vec<u32> = if alphabet.size() <= 10 {
            text.chars()
                .map(|c| c.to_digit(10).ok_or_else(parse_err))
                .collect::<Result<_, _>>()?
        } else {
            text.split(',')
                .map(|part| part.trim().parse::<u32>().map_err(|_| parse_err()))
                .collect::<Result<_, _>>()?
        };
        Word::new(alphabet, letters)
    }

    /// The inverse of [`Word::parse`]; round-trips bit-exactly.
    pub fn to_text(&self) -> String {
        if self.alphabet.size() <= 10 {
            self.letters
                .iter()
                .map(|&c| char::from_digit(c, 10).expect("letter below 10"))
                .collect()
        } else {
            self.letters
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// A 1-based position interval `[start, end]` inside a host word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FactorSpan {
    start: usize,
    end: usize,
}

impl FactorSpan {
    pub fn new(start: usize, end: usize) -> Result<Self, Error> {
        if start == 0 || start > end {
            return Err(Error::BadSpan { start, end });
        }
        Ok(FactorSpan { start, end })
    }

    pub fn start(self) -> usize {
        self.start
    }

    pub fn end(self) -> usize {
        self.end
    }

    /// Spans are never empty: `start <= end` holds by construction.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(self) -> usize {
        self.end - self.start + 1
    }

    /// Twice the midpoint, always an integer: `start + end`.
    pub fn midpoint2(self) -> usize {
        self.start + self.end
    }

    /// Whether this span mid-covers `inner`: the midpoint of `inner` lies
    /// within this span's positions. Reflexive, not symmetric. Both spans
    /// must refer to the same host word.
    pub fn midcovers(self, inner: FactorSpan) -> bool {
        let m2 = inner.midpoint2();
        2 * self.start <= m2 && m2 <= 2 * self.end
    }

    /// Whether the two position sets do not intersect.
    pub fn disjoint(self, other: FactorSpan) -> bool {
        self.end < other.start || other.end < self.start
    }
}

/// One tandem duplication: duplicate the factor of length `dup_len` that
/// follows a prefix of length `prefix_len`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DupEvent {
    pub prefix_len: usize,
    pub dup_len: usize,
}

impl DupEvent {
    pub fn new(prefix_len: usize, dup_len: usize) -> Self {
        DupEvent {
            prefix_len,
            dup_len,
        }
    }
}

/// Applies one tandem duplication: `uvw -> uvvw` with `|u| = prefix_len`
/// and `|v| = dup_len`. Undefined (an error) on words shorter than
/// `prefix_len + dup_len`.
pub fn apply_duplication(x: &Word, event: DupEvent) -> Result<Word, Error> {
    let (i, l) = (event.prefix_len, event.dup_len);
    if l == 0 {
        return Err(Error::ZeroLength);
    }
    if i > x.len() || l > x.len() - i {
        return Err(Error::WordTooShort {
            len: x.len(),
            needed: i.saturating_add(l),
        });
    }
    let mut letters = Vec::with_capacity(x.len() + l);
    letters.extend_from_slice(&x.letters[..i + l]);
    letters.extend_from_slice(&x.letters[i..]);
    Ok(Word::from_raw(x.alphabet, letters))
}

/// Removes one copy of a square: the factor `vv` with `|v| = dup_len`
/// whose left copy begins at the 1-based position `span_start` is replaced
/// by `v`. Errors when the two halves differ.
pub fn remove_duplication(z: &Word, span_start: usize, dup_len: usize) -> Result<Word, Error> {
    if dup_len == 0 {
        return Err(Error::ZeroLength);
    }
    if span_start == 0
        || span_start > z.len()
        || dup_len > z.len()
        || span_start + 2 * dup_len - 1 > z.len()
    {
        return Err(Error::SpanOutOfBounds {
            start: span_start,
            len: dup_len.saturating_mul(2),
            word_len: z.len(),
        });
    }
    let s = span_start - 1;
    if z.letters[s..s + dup_len] != z.letters[s + dup_len..s + 2 * dup_len] {
        return Err(Error::NotASquare {
            start: span_start,
            len: dup_len,
        });
    }
    let mut letters = Vec::with_capacity(z.len() - dup_len);
    letters.extend_from_slice(&z.letters[..s + dup_len]);
    letters.extend_from_slice(&z.letters[s + 2 * dup_len..]);
    Ok(Word::from_raw(z.alphabet, letters))
}

/// Lists every square `vv` with `|v| in lengths`: pairs of (1-based start
/// of the left copy, half-length), in lexicographic `(start, len)` order.
/// The result is empty iff the word is duplication-free for `lengths`.
pub fn find_squares(z: &Word, lengths: &LenSet) -> Vec<(usize, usize)> {
    let n = z.len();
    let letters = &z.letters;
    let mut out = Vec::new();
    for start in 1..=n {
        let s = start - 1;
        for &l in lengths {
            if l == 0 {
                continue;
            }
            if l > (n - s) / 2 {
                break; // lengths ascend, nothing larger fits either
            }
            if letters[s..s + l] == letters[s + l..s + 2 * l] {
                out.push((start, l));
            }
        }
    }
    out
}

/// Early-exit variant of [`find_squares`] used on hot paths.
pub(crate) fn has_square(letters: &[u32], lengths: &LenSet) -> bool {
    let n = letters.len();
    for &l in lengths {
        if l == 0 || l > n / 2 {
            continue;
        }
        for s in 0..=(n - 2 * l) {
            if letters[s..s + l] == letters[s + l..s + 2 * l] {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn word(text: &str, q: u32) -> Word {
        Word::parse(text, Alphabet::new(q).unwrap()).unwrap()
    }

    #[test]
    fn values_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Alphabet>();
        assert_send_sync::<Word>();
        assert_send_sync::<FactorSpan>();
        assert_send_sync::<DupEvent>();
    }

    #[test]
    fn alphabet_rejects_small_q() {
        assert_eq!(
            Alphabet::new(0).unwrap_err(),
            Error::AlphabetTooSmall { q: 0 }
        );
        assert_eq!(
            Alphabet::new(1).unwrap_err(),
            Error::AlphabetTooSmall { q: 1 }
        );
        assert!(Alphabet::new(2).is_ok());
    }

    #[test]
    fn word_rejects_out_of_range_letters() {
        let a = Alphabet::new(3).unwrap();
        assert_eq!(
            Word::new(a, vec![0, 3]).unwrap_err(),
            Error::LetterOutOfRange { letter: 3, q: 3 }
        );
    }

    #[test]
    fn text_format_round_trips() {
        let w = word("054213", 6);
        assert_eq!(w.to_text(), "054213");
        assert_eq!(w.len(), 6);

        let big = Alphabet::new(16).unwrap();
        let w = Word::new(big, vec![0, 12, 5]).unwrap();
        assert_eq!(w.to_text(), "0,12,5");
        assert_eq!(Word::parse("0,12,5", big).unwrap(), w);

        // The empty word round-trips in both formats.
        assert_eq!(Word::parse("", big).unwrap(), Word::empty(big));
        assert_eq!(Word::empty(big).to_text(), "");
    }

    #[test]
    fn parse_rejects_garbage() {
        let a = Alphabet::new(6).unwrap();
        assert!(matches!(
            Word::parse("05x", a).unwrap_err(),
            Error::ParseWord { .. }
        ));
        assert!(matches!(
            Word::parse("9", a).unwrap_err(),
            Error::LetterOutOfRange { .. }
        ));
    }

    #[test]
    fn duplication_matches_worked_chain() {
        let x = word("054213", 6);
        let z1 = apply_duplication(&x, DupEvent::new(1, 2)).unwrap();
        assert_eq!(z1, word("05454213", 6));
        let z2 = apply_duplication(&z1, DupEvent::new(6, 2)).unwrap();
        assert_eq!(z2, word("0545421313", 6));

        // Duplicating the first letter.
        assert_eq!(
            apply_duplication(&x, DupEvent::new(0, 1)).unwrap(),
            word("0054213", 6)
        );
    }

    #[test]
    fn duplication_needs_room() {
        let x = word("01", 2);
        assert_eq!(
            apply_duplication(&x, DupEvent::new(1, 2)).unwrap_err(),
            Error::WordTooShort { len: 2, needed: 3 }
        );
    }

    #[test]
    fn removal_reverses_duplication() {
        let z = word("05454213", 6);
        assert_eq!(remove_duplication(&z, 2, 2).unwrap(), word("054213", 6));
        assert_eq!(
            remove_duplication(&word("0545421313", 6), 7, 2).unwrap(),
            word("05454213", 6)
        );
        assert_eq!(
            remove_duplication(&word("00", 2), 1, 1).unwrap(),
            word("0", 2)
        );
    }

    #[test]
    fn removal_rejects_non_squares() {
        let z = word("054213", 6);
        assert_eq!(
            remove_duplication(&z, 1, 2).unwrap_err(),
            Error::NotASquare { start: 1, len: 2 }
        );
        assert!(matches!(
            remove_duplication(&z, 4, 2).unwrap_err(),
            Error::SpanOutOfBounds { .. }
        ));
    }

    #[test]
    fn removal_round_trips_duplication() {
        let x = word("0545421313", 6);
        for i in 0..x.len() {
            for l in 1..=(x.len() - i) {
                let e = DupEvent::new(i, l);
                let z = apply_duplication(&x, e).unwrap();
                assert_eq!(z.len(), x.len() + l);
                assert_eq!(remove_duplication(&z, i + 1, l).unwrap(), x);
            }
        }
    }

    #[test]
    fn squares_of_the_three_underlined_duplications() {
        // a b a b c a b a b c a b c a a b c b c a over {a,b,c} -> {0,1,2}
        let w = word("01012010120120012120", 3);
        let found = find_squares(&w, &lenset(&[2, 3, 5]));
        assert!(found.contains(&(2, 5)));
        assert!(found.contains(&(8, 3)));
        assert!(found.contains(&(16, 2)));
        // Full list, frozen against a naive scan.
        assert_eq!(
            found,
            vec![
                (1, 2),
                (1, 5),
                (2, 5),
                (3, 5),
                (6, 2),
                (8, 3),
                (9, 3),
                (16, 2)
            ]
        );
    }

    #[test]
    fn square_free_scan_is_empty() {
        assert_eq!(find_squares(&word("054331", 6), &lenset(&[2])), vec![]);
        assert_eq!(find_squares(&word("00", 2), &lenset(&[1])), vec![(1, 1)]);
    }

    #[test]
    fn midcover_on_the_worked_example() {
        let first = FactorSpan::new(2, 11).unwrap();
        let second = FactorSpan::new(8, 13).unwrap();
        let third = FactorSpan::new(16, 19).unwrap();
        assert!(first.midcovers(second));
        assert!(!second.midcovers(first));
        assert!(first.disjoint(third));
        assert!(second.disjoint(third));
        assert!(!first.disjoint(second));
        // Reflexive.
        let s = FactorSpan::new(1, 4).unwrap();
        assert!(s.midcovers(s));
        assert!(!s.disjoint(s));
        // Adjacent spans do not overlap.
        assert!(FactorSpan::new(1, 1)
            .unwrap()
            .disjoint(FactorSpan::new(2, 2).unwrap()));
    }

    #[test]
    fn span_validation() {
        assert!(FactorSpan::new(0, 3).is_err());
        assert!(FactorSpan::new(4, 3).is_err());
        let s = FactorSpan::new(2, 5).unwrap();
        assert_eq!(s.len(), 4);
        assert_eq!(s.midpoint2(), 7);
    }
}
