//! Construction and enumeration of F-duplication-free codes.
//!
//! A code of length `n` over `Z_q` consists of all words containing no
//! factor `vv` with `|v|` in the forbidden set F. The forbidden set is
//! derived from the allowed duplication lengths L depending on the
//! corruption model: `F = L ∪ L^Δ` for disjoint errors, `F = L` for
//! equal-length and disjoint equal-length errors.

use std::fmt::Write as _;
use std::io::{self, Write};

use crate::error::Error;
use crate::model::ChannelModel;
use crate::word::{has_square, Alphabet, LenSet, Word};

/// Default cap on materialized code members.
pub const DEFAULT_MEMBER_CAP: usize = 10_000_000;

/// The difference set `{ |l - l'| : l, l' in L, l != l' }`.
pub fn length_delta(lengths: &LenSet) -> LenSet {
    let mut delta = LenSet::new();
    for &a in lengths {
        for &b in lengths {
            if a > b {
                delta.insert(a - b);
            }
        }
    }
    delta
}

/// Allowed duplication lengths L, their difference set, and the forbidden
/// set F chosen for a corruption model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthSpec {
    lengths: LenSet,
    delta: LenSet,
    forbidden: LenSet,
    model: ChannelModel,
}

impl LengthSpec {
    /// Validates L and derives F for the model.
    ///
    /// Equal-length mode additionally requires that any two lengths
    /// `l > l'` in L satisfy `l >= 2*l'`; singletons satisfy this
    /// vacuously. The unrestricted model has no construction and is
    /// rejected.
    pub fn new(lengths: LenSet, model: ChannelModel) -> Result<Self, Error> {
        if lengths.is_empty() {
            return Err(Error::EmptyLengthSet);
        }
        if lengths.contains(&0) {
            return Err(Error::ZeroInLengthSet);
        }
        let forbidden = match model {
            ChannelModel::Disjoint => {
                let mut f = lengths.clone();
                f.extend(length_delta(&lengths));
                f
            }
            ChannelModel::EqualLength => {
                let sorted: Vec<usize> = lengths.iter().copied().collect();
                for pair in sorted.windows(2) {
                    if pair[1] < 2 * pair[0] {
                        return Err(Error::SeparationViolation {
                            shorter: pair[0],
                            longer: pair[1],
                        });
                    }
                }
                lengths.clone()
            }
            ChannelModel::DisjointEqualLength => lengths.clone(),
            ChannelModel::Unrestricted => {
                return Err(Error::InvalidArgument(
                    "no code construction for the unrestricted model".into(),
                ))
            }
        };
        let delta = length_delta(&lengths);
        Ok(LengthSpec {
            lengths,
            delta,
            forbidden,
            model,
        })
    }

    pub fn lengths(&self) -> &LenSet {
        &self.lengths
    }

    pub fn delta(&self) -> &LenSet {
        &self.delta
    }

    pub fn forbidden(&self) -> &LenSet {
        &self.forbidden
    }

    pub fn model(&self) -> ChannelModel {
        self.model
    }
}

/// Whether `x` belongs to the F-duplication-free code for its length.
pub fn is_codeword(x: &Word, forbidden: &LenSet) -> bool {
    !has_square(x.letters(), forbidden)
}

/// A materialized code: all members sorted lexicographically.
#[derive(Debug, Clone)]
pub struct Code {
    n: usize,
    alphabet: Alphabet,
    forbidden: LenSet,
    members: Vec<Word>,
}

impl Code {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn forbidden(&self) -> &LenSet {
        &self.forbidden
    }

    pub fn members(&self) -> &[Word] {
        &self.members
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// Writes the codeword file format: a `# n=.. q=.. F=..` header, then
    /// one word per line.
    pub fn write_to(&self, w: &mut impl Write) -> io::Result<()> {
        writeln!(
            w,
            "# n={} q={} F={}",
            self.n,
            self.alphabet.size(),
            format_lenset(&self.forbidden)
        )?;
        for m in &self.members {
            writeln!(w, "{}", m.to_text())?;
        }
        Ok(())
    }
}

/// Comma list used in headers and reports; empty set formats as "".
pub fn format_lenset(set: &LenSet) -> String {
    let mut out = String::new();
    for (i, l) in set.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "{}", l);
    }
    out
}

/// Depth-first enumeration over prefixes. Appending a letter only
/// requires checking squares whose right copy ends at the new position;
/// a forbidden square in a prefix persists in every extension, so pruning
/// is sound and the traversal emits members in lexicographic order.
fn dfs_codewords(
    n: usize,
    q: u32,
    forbidden: &LenSet,
    prefix: &mut Vec<u32>,
    emit: &mut impl FnMut(&[u32]) -> Result<(), Error>,
) -> Result<(), Error> {
    if prefix.len() == n {
        return emit(prefix);
    }
    for c in 0..q {
        prefix.push(c);
        if !suffix_square(prefix, forbidden) {
            dfs_codewords(n, q, forbidden, prefix, emit)?;
        }
        prefix.pop();
    }
    Ok(())
}

/// Whether some forbidden square ends exactly at the last position.
fn suffix_square(p: &[u32], forbidden: &LenSet) -> bool {
    let k = p.len();
    for &l in forbidden {
        if l == 0 {
            continue;
        }
        if l > k / 2 {
            break;
        }
        if p[k - 2 * l..k - l] == p[k - l..k] {
            return true;
        }
    }
    false
}

/// Enumerates the F-duplication-free code of length `n` over `Z_q` in
/// lexicographic order, erroring once more than `cap` members are found.
pub fn enumerate_code(
    n: usize,
    alphabet: Alphabet,
    forbidden: &LenSet,
    cap: usize,
) -> Result<Code, Error> {
    let mut members = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    dfs_codewords(n, alphabet.size(), forbidden, &mut prefix, &mut |letters| {
        if members.len() >= cap {
            return Err(Error::ResourceLimit { cap });
        }
        members.push(Word::from_raw(alphabet, letters.to_vec()));
        Ok(())
    })?;
    Ok(Code {
        n,
        alphabet,
        forbidden: forbidden.clone(),
        members,
    })
}

/// Counts `|C_F|` without materializing members.
pub fn count_code(n: usize, alphabet: Alphabet, forbidden: &LenSet) -> u64 {
    let mut count = 0u64;
    let mut prefix = Vec::with_capacity(n);
    dfs_codewords(n, alphabet.size(), forbidden, &mut prefix, &mut |_| {
        count += 1;
        Ok(())
    })
    .expect("counting emits no errors");
    count
}

/// The code rate `(1/n) log_q |C|`.
pub fn rate(code_size: u64, n: usize, q: u32) -> Result<f64, Error> {
    if code_size == 0 {
        return Err(Error::EmptyCode);
    }
    if n == 0 {
        return Err(Error::InvalidArgument("rate undefined for n = 0".into()));
    }
    Ok((code_size as f64).ln() / (n as f64 * (q as f64).ln()))
}

/// The one-line count/rate record; rate prints as `-` for an empty code.
pub fn count_rate_record(n: usize, q: u32, forbidden: &LenSet, count: u64) -> String {
    let rate_text = match rate(count, n, q) {
        Ok(r) => format!("{}", r),
        Err(_) => "-".to_string(),
    };
    format!(
        "n={} q={} F={} count={} rate={}",
        n,
        q,
        format_lenset(forbidden),
        count,
        rate_text
    )
}
