//! Corruption processes: event traces, simultaneous disjoint plans, and
//! seeded random sampling.
//!
//! Sampling uses the ChaCha8 generator (`rand_chacha`), seeded explicitly;
//! every emitted artifact records the seed so corruptions are reproducible
//! bit-exactly.

use std::io::{self, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::code::format_lenset;
use crate::error::Error;
use crate::model::ChannelModel;
use crate::word::{apply_duplication, DupEvent, LenSet, Word};

/// An ordered list of duplication events under a declared model.
///
/// For the disjoint models the events must be listed in right-to-left
/// position order with non-overlapping blocks, which is exactly the event
/// form of a simultaneous plan: applying the rightmost duplication first
/// leaves the offsets of the remaining ones unchanged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorruptionTrace {
    pub model: ChannelModel,
    pub lengths: LenSet,
    pub events: Vec<DupEvent>,
}

impl CorruptionTrace {
    pub fn new(model: ChannelModel, lengths: LenSet, events: Vec<DupEvent>) -> Result<Self, Error> {
        let trace = CorruptionTrace {
            model,
            lengths,
            events,
        };
        trace.validate()?;
        Ok(trace)
    }

    pub fn validate(&self) -> Result<(), Error> {
        for e in &self.events {
            if !self.lengths.contains(&e.dup_len) {
                return Err(Error::InvalidTrace(format!(
                    "duplication length {} is not in L",
                    e.dup_len
                )));
            }
        }
        if self.model.requires_equal_lengths() {
            if let Some(first) = self.events.first() {
                if self.events.iter().any(|e| e.dup_len != first.dup_len) {
                    return Err(Error::InvalidTrace(
                        "events must share a single duplication length".into(),
                    ));
                }
            }
        }
        if self.model.is_disjoint() {
            for pair in self.events.windows(2) {
                if pair[1].prefix_len + pair[1].dup_len > pair[0].prefix_len {
                    return Err(Error::InvalidTrace(
                        "disjoint events must be listed right to left over \
                         non-overlapping blocks"
                            .into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Total length added by the trace.
    pub fn added_len(&self) -> usize {
        self.events.iter().map(|e| e.dup_len).sum()
    }
}

/// Applies a trace as a sequential left fold of single duplications.
/// The empty trace is the identity.
pub fn apply_trace(x: &Word, trace: &CorruptionTrace) -> Result<Word, Error> {
    trace.validate()?;
    let mut w = x.clone();
    for &e in &trace.events {
        w = apply_duplication(&w, e)?;
    }
    Ok(w)
}

/// The simultaneous decomposition `x = x_1 v_1 x_2 v_2 ... x_t v_t x_{t+1}`
/// whose application squares every block: `z = x_1 v_1^2 ... x_t v_t^2 x_{t+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisjointPlan {
    gaps: Vec<Word>,
    blocks: Vec<Word>,
}

impl DisjointPlan {
    /// Requires one more gap than blocks and nonempty blocks; gaps may be
    /// empty words.
    pub fn new(gaps: Vec<Word>, blocks: Vec<Word>) -> Result<Self, Error> {
        if gaps.len() != blocks.len() + 1 {
            return Err(Error::MalformedPlan);
        }
        if blocks.iter().any(|b| b.is_empty()) {
            return Err(Error::MalformedPlan);
        }
        let alphabet = gaps[0].alphabet();
        if let Some(other) = gaps
            .iter()
            .chain(blocks.iter())
            .find(|w| w.alphabet() != alphabet)
        {
            return Err(Error::AlphabetMismatch {
                left: alphabet.size(),
                right: other.alphabet().size(),
            });
        }
        Ok(DisjointPlan { gaps, blocks })
    }

    pub fn gaps(&self) -> &[Word] {
        &self.gaps
    }

    pub fn blocks(&self) -> &[Word] {
        &self.blocks
    }

    /// Number of duplications.
    pub fn t(&self) -> usize {
        self.blocks.len()
    }

    /// Total length added on application.
    pub fn added_len(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }

    /// The word the plan decomposes: `x_1 v_1 x_2 ... x_t v_t x_{t+1}`.
    pub fn source(&self) -> Word {
        let a = self.gaps[0].alphabet();
        let mut letters = Vec::new();
        for (i, gap) in self.gaps.iter().enumerate() {
            letters.extend_from_slice(gap.letters());
            if let Some(block) = self.blocks.get(i) {
                letters.extend_from_slice(block.letters());
            }
        }
        Word::from_raw(a, letters)
    }

    /// 0-based offsets of the blocks within the source word.
    pub fn block_offsets(&self) -> Vec<usize> {
        let mut offsets = Vec::with_capacity(self.blocks.len());
        let mut pos = 0;
        for (i, gap) in self.gaps.iter().enumerate() {
            pos += gap.len();
            if let Some(block) = self.blocks.get(i) {
                offsets.push(pos);
                pos += block.len();
            }
        }
        offsets
    }

    /// The equivalent event trace: blocks in right-to-left order, so the
    /// sequential fold reproduces the simultaneous application.
    pub fn to_trace(&self, model: ChannelModel, lengths: LenSet) -> Result<CorruptionTrace, Error> {
        let offsets = self.block_offsets();
        let events = offsets
            .iter()
            .zip(self.blocks.iter())
            .rev()
            .map(|(&o, b)| DupEvent::new(o, b.len()))
            .collect();
        CorruptionTrace::new(model, lengths, events)
    }
}

/// Applies a plan to `x`. Errors unless the concatenation of gaps and
/// blocks equals `x` exactly.
pub fn apply_disjoint(x: &Word, plan: &DisjointPlan) -> Result<Word, Error> {
    if plan.source() != *x {
        return Err(Error::MalformedPlan);
    }
    let mut letters = Vec::with_capacity(x.len() + plan.added_len());
    for (i, gap) in plan.gaps.iter().enumerate() {
        letters.extend_from_slice(gap.letters());
        if let Some(block) = plan.blocks.get(i) {
            letters.extend_from_slice(block.letters());
            letters.extend_from_slice(block.letters());
        }
    }
    Ok(Word::from_raw(x.alphabet(), letters))
}

/// A sampled corruption: sequential models yield a trace, disjoint models
/// a plan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Corruption {
    Trace(CorruptionTrace),
    Plan(DisjointPlan),
}

impl Corruption {
    /// Number of duplication events.
    pub fn event_count(&self) -> usize {
        match self {
            Corruption::Trace(t) => t.events.len(),
            Corruption::Plan(p) => p.t(),
        }
    }

    /// Re-applies the corruption to a word; reproduces the sampled output
    /// bit-exactly on the word it was sampled for.
    pub fn apply(&self, x: &Word) -> Result<Word, Error> {
        match self {
            Corruption::Trace(t) => apply_trace(x, t),
            Corruption::Plan(p) => apply_disjoint(x, p),
        }
    }
}

/// Draws a corruption with `t` duplications under `model` and applies it.
/// Deterministic in `(x, model, lengths, t, seed)`.
pub fn sample_corruption(
    x: &Word,
    model: ChannelModel,
    lengths: &LenSet,
    t: usize,
    seed: u64,
) -> Result<(Word, Corruption), Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_corruption_with(x, model, lengths, t, &mut rng)
}

/// As [`sample_corruption`] but drawing from a caller-owned generator,
/// which lets batch drivers assign one stream per word.
pub fn sample_corruption_with<R: Rng>(
    x: &Word,
    model: ChannelModel,
    lengths: &LenSet,
    t: usize,
    rng: &mut R,
) -> Result<(Word, Corruption), Error> {
    if lengths.is_empty() {
        return Err(Error::EmptyLengthSet);
    }
    if lengths.contains(&0) {
        return Err(Error::ZeroInLengthSet);
    }
    let sorted: Vec<usize> = lengths.iter().copied().collect();
    match model {
        ChannelModel::Unrestricted => {
            let mut w = x.clone();
            let mut events = Vec::with_capacity(t);
            for _ in 0..t {
                let feasible: Vec<usize> =
                    sorted.iter().copied().filter(|&l| l <= w.len()).collect();
                if feasible.is_empty() {
                    return Err(Error::InfeasiblePlan {
                        word_len: x.len(),
                        requested: t,
                    });
                }
                let l = feasible[rng.random_range(0..feasible.len())];
                let i = rng.random_range(0..=w.len() - l);
                let e = DupEvent::new(i, l);
                w = apply_duplication(&w, e)?;
                events.push(e);
            }
            let trace = CorruptionTrace::new(model, lengths.clone(), events)?;
            Ok((w, Corruption::Trace(trace)))
        }
        ChannelModel::EqualLength => {
            let feasible: Vec<usize> = sorted.iter().copied().filter(|&l| l <= x.len()).collect();
            if t > 0 && feasible.is_empty() {
                return Err(Error::InfeasiblePlan {
                    word_len: x.len(),
                    requested: t,
                });
            }
            let mut events = Vec::with_capacity(t);
            let mut w = x.clone();
            if t > 0 {
                let l = feasible[rng.random_range(0..feasible.len())];
                for _ in 0..t {
                    let i = rng.random_range(0..=w.len() - l);
                    let e = DupEvent::new(i, l);
                    w = apply_duplication(&w, e)?;
                    events.push(e);
                }
            }
            let trace = CorruptionTrace::new(model, lengths.clone(), events)?;
            Ok((w, Corruption::Trace(trace)))
        }
        ChannelModel::Disjoint => {
            let block_lens = draw_disjoint_lengths(&sorted, t, x.len(), rng)?;
            let plan = place_blocks(x, &block_lens, rng);
            let z = apply_disjoint(x, &plan)?;
            Ok((z, Corruption::Plan(plan)))
        }
        ChannelModel::DisjointEqualLength => {
            let feasible: Vec<usize> = sorted
                .iter()
                .copied()
                .filter(|&l| t * l <= x.len())
                .collect();
            if t > 0 && feasible.is_empty() {
                return Err(Error::InfeasiblePlan {
                    word_len: x.len(),
                    requested: t,
                });
            }
            let block_lens: Vec<usize> = if t == 0 {
                Vec::new()
            } else {
                let l = feasible[rng.random_range(0..feasible.len())];
                vec![l; t]
            };
            let plan = place_blocks(x, &block_lens, rng);
            let z = apply_disjoint(x, &plan)?;
            Ok((z, Corruption::Plan(plan)))
        }
    }
}

/// Draws `t` block lengths uniformly from L, rejecting draws whose sum
/// exceeds the word length. Fails fast when even all-minimal blocks
/// cannot fit.
fn draw_disjoint_lengths<R: Rng>(
    sorted: &[usize],
    t: usize,
    word_len: usize,
    rng: &mut R,
) -> Result<Vec<usize>, Error> {
    let min_l = sorted[0];
    if t * min_l > word_len {
        return Err(Error::InfeasiblePlan {
            word_len,
            requested: t,
        });
    }
    for _ in 0..10_000 {
        let draw: Vec<usize> = (0..t)
            .map(|_| sorted[rng.random_range(0..sorted.len())])
            .collect();
        if draw.iter().sum::<usize>() <= word_len {
            return Ok(draw);
        }
    }
    Err(Error::InfeasiblePlan {
        word_len,
        requested: t,
    })
}

/// Places blocks of the given lengths left to right, each at a uniformly
/// random feasible offset. Feasible by construction when the lengths sum
/// to at most `|x|`.
fn place_blocks<R: Rng>(x: &Word, block_lens: &[usize], rng: &mut R) -> DisjointPlan {
    let a = x.alphabet();
    let letters = x.letters();
    let mut gaps = Vec::with_capacity(block_lens.len() + 1);
    let mut blocks = Vec::with_capacity(block_lens.len());
    let mut pos = 0;
    let mut remaining: usize = block_lens.iter().sum();
    for &l in block_lens {
        // The block must leave room for all later blocks.
        let hi = letters.len() - remaining;
        let offset = rng.random_range(pos..=hi);
        gaps.push(Word::from_raw(a, letters[pos..offset].to_vec()));
        blocks.push(Word::from_raw(a, letters[offset..offset + l].to_vec()));
        pos = offset + l;
        remaining -= l;
    }
    gaps.push(Word::from_raw(a, letters[pos..].to_vec()));
    DisjointPlan::new(gaps, blocks).expect("construction is well-formed")
}

/// Writes the trace file body: a `# model=.. L=.. seed=..` header, then
/// one `i,l` pair per line in application order.
pub fn write_trace(w: &mut impl Write, trace: &CorruptionTrace, seed: u64) -> io::Result<()> {
    writeln!(
        w,
        "# model={} L={} seed={}",
        trace.model,
        format_lenset(&trace.lengths),
        seed
    )?;
    for e in &trace.events {
        writeln!(w, "{},{}", e.prefix_len, e.dup_len)?;
    }
    Ok(())
}

/// Writes a plan with the shared header, then alternating `gap:`/`dup:`
/// lines.
pub fn write_plan(
    w: &mut impl Write,
    plan: &DisjointPlan,
    model: ChannelModel,
    lengths: &LenSet,
    seed: u64,
) -> io::Result<()> {
    writeln!(
        w,
        "# model={} L={} seed={}",
        model,
        format_lenset(lengths),
        seed
    )?;
    for (i, gap) in plan.gaps().iter().enumerate() {
        writeln!(w, "gap:{}", gap.to_text())?;
        if let Some(block) = plan.blocks().get(i) {
            writeln!(w, "dup:{}", block.to_text())?;
        }
    }
    Ok(())
}
