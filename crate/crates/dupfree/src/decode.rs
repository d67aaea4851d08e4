//! Decoders for the three corruption settings.
//!
//! Equal-length corruption with a known length decodes in linear time by
//! reducing zero runs of the transformed word; with an unknown length the
//! decoder tries every candidate length, of which at most one can succeed
//! for a validated length spec. The disjoint settings have no efficient
//! decoder and fall back to an exhaustive de-duplication search whose
//! answer is unique whenever the code construction applies.

use std::collections::BTreeSet;

use crate::code::{is_codeword, LengthSpec};
use crate::error::Error;
use crate::model::ChannelModel;
use crate::transform::{phi, phi_inverse, reduce_runs_mod, zero_run_decompose};
use crate::word::{lenset, LenSet, Word};

/// The outcome of a decode attempt.
///
/// `Unique` carries the single candidate, whose length always equals the
/// requested code length. `Ambiguous` reports every distinct candidate
/// found; for validated length specs it signals an invariant violation
/// rather than an expected outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecodeResult {
    Unique {
        codeword: Word,
        length_used: Option<usize>,
    },
    Ambiguous {
        candidates: Vec<Word>,
    },
    NoCandidate,
}

impl DecodeResult {
    pub fn codeword(&self) -> Option<&Word> {
        match self {
            DecodeResult::Unique { codeword, .. } => Some(codeword),
            _ => None,
        }
    }

    pub fn is_unique(&self) -> bool {
        matches!(self, DecodeResult::Unique { .. })
    }

    pub fn status(&self) -> &'static str {
        match self {
            DecodeResult::Unique { .. } => "unique",
            DecodeResult::Ambiguous { .. } => "ambiguous",
            DecodeResult::NoCandidate => "no-candidate",
        }
    }
}

/// Decodes a word corrupted by duplications of one known length `l`:
/// transform, reduce every zero run mod `l`, invert. Succeeds iff the
/// result has length `n` and is itself free of `l`-duplications. Runs in
/// time linear in `|z|`.
pub fn decode_uniform(z: &Word, l: usize, n: usize) -> Result<DecodeResult, Error> {
    let y = phi(z, l)?;
    let parse = zero_run_decompose(&y, l)?;
    let reduced = reduce_runs_mod(&parse, l);
    let x = phi_inverse(&reduced, l)?;
    if x.len() == n && is_codeword(&x, &lenset(&[l])) {
        Ok(DecodeResult::Unique {
            codeword: x,
            length_used: Some(l),
        })
    } else {
        Ok(DecodeResult::NoCandidate)
    }
}

/// Decodes under the equal-length model by trying every `l` in L with
/// `l <= n`, returning the first candidate that lands in the code. At
/// most one `l` can succeed for a validated spec, so the first success
/// is the answer.
pub fn decode_equal_length(z: &Word, spec: &LengthSpec, n: usize) -> Result<DecodeResult, Error> {
    require_model(spec, ChannelModel::EqualLength)?;
    for &l in spec.lengths() {
        if l > n || l > z.len() {
            continue;
        }
        if let DecodeResult::Unique { codeword, .. } = decode_uniform(z, l, n)? {
            if is_codeword(&codeword, spec.forbidden()) {
                return Ok(DecodeResult::Unique {
                    codeword,
                    length_used: Some(l),
                });
            }
        }
    }
    Ok(DecodeResult::NoCandidate)
}

/// Verification-mode variant of [`decode_equal_length`]: tries every
/// candidate length and reports ambiguity if two distinct codewords
/// emerge, which a validated spec rules out.
pub fn decode_equal_length_exhaustive(
    z: &Word,
    spec: &LengthSpec,
    n: usize,
) -> Result<DecodeResult, Error> {
    require_model(spec, ChannelModel::EqualLength)?;
    let mut found: Vec<(Word, usize)> = Vec::new();
    for &l in spec.lengths() {
        if l > n || l > z.len() {
            continue;
        }
        if let DecodeResult::Unique { codeword, .. } = decode_uniform(z, l, n)? {
            if is_codeword(&codeword, spec.forbidden())
                && !found.iter().any(|(w, _)| *w == codeword)
            {
                found.push((codeword, l));
            }
        }
    }
    Ok(match found.len() {
        0 => DecodeResult::NoCandidate,
        1 => {
            let (codeword, l) = found.pop().expect("one element");
            DecodeResult::Unique {
                codeword,
                length_used: Some(l),
            }
        }
        _ => DecodeResult::Ambiguous {
            candidates: found.into_iter().map(|(w, _)| w).collect(),
        },
    })
}

/// Exhaustive ancestor search for the disjoint settings.
///
/// Enumerates every set of pairwise-disjoint squares in `z` with
/// half-lengths from L (a single shared length under the combined model)
/// whose removal reaches length `n`, keeping the results that land in the
/// code. Each explored search node counts against `budget`.
pub fn decode_bruteforce(
    z: &Word,
    spec: &LengthSpec,
    n: usize,
    model: ChannelModel,
    budget: usize,
) -> Result<DecodeResult, Error> {
    match model {
        ChannelModel::Disjoint | ChannelModel::DisjointEqualLength => require_model(spec, model)?,
        _ => {
            return Err(Error::InvalidArgument(
                "brute-force decoding covers the disjoint models only".into(),
            ))
        }
    }
    if z.len() < n {
        return Ok(DecodeResult::NoCandidate);
    }
    let excess = z.len() - n;
    let mut candidates: BTreeSet<Word> = BTreeSet::new();
    let mut nodes = 0usize;
    match model {
        ChannelModel::Disjoint => {
            let lengths: Vec<usize> = spec.lengths().iter().copied().collect();
            search_spans(
                z,
                &lengths,
                excess,
                spec.forbidden(),
                budget,
                &mut nodes,
                &mut candidates,
            )?;
        }
        ChannelModel::DisjointEqualLength => {
            for &l in spec.lengths() {
                if !excess.is_multiple_of(l) {
                    continue;
                }
                search_spans(
                    z,
                    &[l],
                    excess,
                    spec.forbidden(),
                    budget,
                    &mut nodes,
                    &mut candidates,
                )?;
            }
        }
        _ => unreachable!(),
    }
    let mut candidates: Vec<Word> = candidates.into_iter().collect();
    Ok(match candidates.len() {
        0 => DecodeResult::NoCandidate,
        1 => DecodeResult::Unique {
            codeword: candidates.pop().expect("one element"),
            length_used: None,
        },
        _ => DecodeResult::Ambiguous { candidates },
    })
}

fn require_model(spec: &LengthSpec, model: ChannelModel) -> Result<(), Error> {
    if spec.model() != model {
        return Err(Error::InvalidArgument(format!(
            "length spec was built for the {} model, not {}",
            spec.model(),
            model
        )));
    }
    Ok(())
}

/// Chooses disjoint square spans left to right. A chosen square of
/// half-length `l` occupies `2l` positions and removes `l`; once the
/// removal budget hits zero the chosen set determines one ancestor.
fn search_spans(
    z: &Word,
    lengths: &[usize],
    excess: usize,
    forbidden: &LenSet,
    budget: usize,
    nodes: &mut usize,
    out: &mut BTreeSet<Word>,
) -> Result<(), Error> {
    let letters = z.letters();
    let mut chosen: Vec<(usize, usize)> = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn rec(
        letters: &[u32],
        z: &Word,
        lengths: &[usize],
        pos: usize,
        remaining: usize,
        chosen: &mut Vec<(usize, usize)>,
        budget: usize,
        nodes: &mut usize,
        forbidden: &LenSet,
        out: &mut BTreeSet<Word>,
    ) -> Result<(), Error> {
        *nodes += 1;
        if *nodes > budget {
            return Err(Error::ResourceLimit { cap: budget });
        }
        if remaining == 0 {
            let candidate = remove_right_copies(z, chosen);
            if is_codeword(&candidate, forbidden) {
                out.insert(candidate);
            }
            return Ok(());
        }
        // Every removal occupies twice its length, so the tail must hold it.
        if 2 * remaining > letters.len() - pos {
            return Ok(());
        }
        for start in pos..letters.len() {
            for &l in lengths {
                if l > remaining || start + 2 * l > letters.len() {
                    continue;
                }
                if letters[start..start + l] == letters[start + l..start + 2 * l] {
                    chosen.push((start, l));
                    rec(
                        letters,
                        z,
                        lengths,
                        start + 2 * l,
                        remaining - l,
                        chosen,
                        budget,
                        nodes,
                        forbidden,
                        out,
                    )?;
                    chosen.pop();
                }
            }
        }
        Ok(())
    }

    rec(
        letters,
        z,
        lengths,
        0,
        excess,
        &mut chosen,
        budget,
        nodes,
        forbidden,
        out,
    )
}

/// Removes the right copy of each chosen square; spans are disjoint and
/// listed left to right as 0-based `(start, half_len)` pairs.
fn remove_right_copies(z: &Word, chosen: &[(usize, usize)]) -> Word {
    let letters = z.letters();
    let mut kept = Vec::with_capacity(letters.len());
    let mut pos = 0;
    for &(start, l) in chosen {
        kept.extend_from_slice(&letters[pos..start + l]);
        pos = start + 2 * l;
    }
    kept.extend_from_slice(&letters[pos..]);
    Word::from_raw(z.alphabet(), kept)
}
