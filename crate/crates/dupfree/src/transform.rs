//! The difference transform over `Z_q` and its zero-run machinery.
//!
//! For a length `l`, the transform keeps the `l`-prefix and replaces every
//! later letter by its difference with the letter `l` positions earlier.
//! A tandem duplication of length `l` in the original word becomes an
//! insertion of the factor `0^l` in the transformed word, which reduces
//! de-duplication to deleting zero blocks.

use crate::error::Error;
use crate::word::{FactorSpan, Word};

/// The forward transform: `y_i = x_i` for `i <= l`, else
/// `y_i = x_i - x_{i-l} (mod q)`. Requires `|x| >= l >= 1`.
pub fn phi(x: &Word, l: usize) -> Result<Word, Error> {
    if l == 0 {
        return Err(Error::ZeroLength);
    }
    if x.len() < l {
        return Err(Error::WordTooShort {
            len: x.len(),
            needed: l,
        });
    }
    let a = x.alphabet();
    let src = x.letters();
    let mut letters = Vec::with_capacity(src.len());
    letters.extend_from_slice(&src[..l]);
    for i in l..src.len() {
        letters.push(a.sub(src[i], src[i - l]));
    }
    Ok(Word::from_raw(a, letters))
}

/// The inverse transform: the unique `x` with `phi(x, l) = y`.
pub fn phi_inverse(y: &Word, l: usize) -> Result<Word, Error> {
    if l == 0 {
        return Err(Error::ZeroLength);
    }
    if y.len() < l {
        return Err(Error::WordTooShort {
            len: y.len(),
            needed: l,
        });
    }
    let a = y.alphabet();
    let src = y.letters();
    let mut letters = Vec::with_capacity(src.len());
    letters.extend_from_slice(&src[..l]);
    for i in l..src.len() {
        let prev = letters[i - l];
        letters.push(a.add(src[i], prev));
    }
    Ok(Word::from_raw(a, letters))
}

/// The parse of a transformed word after its `l`-prefix: alternating
/// maximal zero runs and blocks free of the letter zero.
///
/// `zero_runs()` has exactly one more entry than `blocks()`; the first and
/// last runs may be empty, interior runs are at least one by maximality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroRunDecomposition {
    prefix: Word,
    zero_runs: Vec<usize>,
    blocks: Vec<Word>,
}

impl ZeroRunDecomposition {
    pub fn prefix(&self) -> &Word {
        &self.prefix
    }

    pub fn zero_runs(&self) -> &[usize] {
        &self.zero_runs
    }

    pub fn blocks(&self) -> &[Word] {
        &self.blocks
    }

    /// Rebuilds the parsed word exactly.
    pub fn reassemble(&self) -> Word {
        self.assemble_with(|run| run)
    }

    fn assemble_with(&self, map_run: impl Fn(usize) -> usize) -> Word {
        let a = self.prefix.alphabet();
        let mut letters = self.prefix.letters().to_vec();
        for (i, &run) in self.zero_runs.iter().enumerate() {
            letters.extend(std::iter::repeat_n(0, map_run(run)));
            if let Some(block) = self.blocks.get(i) {
                letters.extend_from_slice(block.letters());
            }
        }
        Word::from_raw(a, letters)
    }
}

/// Parses `y` into its `l`-prefix followed by maximal zero runs and
/// zero-free blocks. Requires `|y| >= l >= 1`.
pub fn zero_run_decompose(y: &Word, l: usize) -> Result<ZeroRunDecomposition, Error> {
    if l == 0 {
        return Err(Error::ZeroLength);
    }
    if y.len() < l {
        return Err(Error::WordTooShort {
            len: y.len(),
            needed: l,
        });
    }
    let a = y.alphabet();
    let prefix = Word::from_raw(a, y.letters()[..l].to_vec());
    let tail = &y.letters()[l..];

    let mut zero_runs = Vec::new();
    let mut blocks = Vec::new();
    let mut i = 0;
    loop {
        let run_start = i;
        while i < tail.len() && tail[i] == 0 {
            i += 1;
        }
        zero_runs.push(i - run_start);
        if i == tail.len() {
            break;
        }
        let block_start = i;
        while i < tail.len() && tail[i] != 0 {
            i += 1;
        }
        blocks.push(Word::from_raw(a, tail[block_start..i].to_vec()));
        if i == tail.len() {
            // A trailing block closes with an empty final run.
            zero_runs.push(0);
            break;
        }
    }
    Ok(ZeroRunDecomposition {
        prefix,
        zero_runs,
        blocks,
    })
}

/// Reassembles a decomposition with every zero-run length taken mod `l`.
///
/// Panics if `l == 0`.
pub fn reduce_runs_mod(d: &ZeroRunDecomposition, l: usize) -> Word {
    assert!(l >= 1, "run reduction needs a positive length");
    d.assemble_with(|run| run % l)
}

/// Greedy left-to-right extraction of disjoint duplications of length `l`.
///
/// Scans the transform of `z` after its `l`-prefix; each factor `0^l`
/// found at 1-based positions `[p, p+l-1]` marks the square occupying
/// `[p-l, p+l-1]` in `z`, after which the scan skips the `l` positions
/// following the factor. If `z` was produced by `t` duplications of
/// length `l`, at least `ceil(t/2)` spans are returned; they are pairwise
/// disjoint and each is a genuine square in `z`.
pub fn extract_disjoint_duplications(z: &Word, l: usize) -> Result<Vec<FactorSpan>, Error> {
    let y = phi(z, l)?;
    let letters = y.letters();
    let mut spans = Vec::new();
    let mut p = l; // 0-based; the window [p, p+l) sits after the prefix
    while p + l <= letters.len() {
        if letters[p..p + l].iter().all(|&c| c == 0) {
            let span = FactorSpan::new(p - l + 1, p + l).expect("p >= l");
            debug_assert_eq!(
                z.letters()[p - l..p],
                z.letters()[p..p + l],
                "declared span must be a square"
            );
            spans.push(span);
            p += 2 * l;
        } else {
            p += 1;
        }
    }
    Ok(spans)
}
