//! Brute-force ground truth: bounded descendant cones, confusability
//! checks, and exhaustive verification of the code constructions on small
//! parameter grids.
//!
//! Descendant cones are infinite, so every cone here is truncated at a
//! configurable maximum length (and optionally a maximum event count).
//! For the constructions under test no collision exists at any depth, so
//! a collision found at bounded depth refutes; absence corroborates but
//! does not prove.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use crate::code::{enumerate_code, format_lenset, length_delta, LengthSpec};
use crate::error::Error;
use crate::model::ChannelModel;
use crate::word::{
    apply_duplication, find_squares, remove_duplication, Alphabet, DupEvent, FactorSpan, LenSet,
    Word,
};

/// Bounds for cone construction and pairwise checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConeOptions {
    /// Truncation length; members never exceed it.
    pub max_len: usize,
    /// Optional cap on the number of duplication events per derivation.
    pub max_events: Option<usize>,
    /// Cap on the member count of a single cone.
    pub member_cap: usize,
}

impl ConeOptions {
    pub fn new(max_len: usize) -> Self {
        ConeOptions {
            max_len,
            max_events: None,
            member_cap: crate::code::DEFAULT_MEMBER_CAP,
        }
    }

    pub fn with_max_events(mut self, max_events: Option<usize>) -> Self {
        self.max_events = max_events;
        self
    }

    pub fn with_member_cap(mut self, cap: usize) -> Self {
        self.member_cap = cap;
        self
    }
}

/// A bounded descendant cone. The root is always a member.
#[derive(Debug, Clone)]
pub struct DescendantSet {
    pub root: Word,
    pub model: ChannelModel,
    pub lengths: LenSet,
    pub max_len: usize,
    pub members: BTreeSet<Word>,
}

/// Computes the bounded descendant cone of `x` under a model.
///
/// Sequential models close breadth-first under single duplications; the
/// equal-length model closes separately per length and unions the
/// results. Disjoint models enumerate simultaneous plans on `x` directly
/// rather than iterating steps, matching their one-shot definition.
pub fn descendants(
    x: &Word,
    model: ChannelModel,
    lengths: &LenSet,
    opts: &ConeOptions,
) -> Result<DescendantSet, Error> {
    if lengths.is_empty() {
        return Err(Error::EmptyLengthSet);
    }
    if lengths.contains(&0) {
        return Err(Error::ZeroInLengthSet);
    }
    if opts.max_len < x.len() {
        return Err(Error::InvalidArgument(format!(
            "max_len {} is below the root length {}",
            opts.max_len,
            x.len()
        )));
    }
    let mut members = BTreeSet::new();
    members.insert(x.clone());
    match model {
        ChannelModel::Unrestricted => {
            bfs_closure(x, lengths, opts, &mut members)?;
        }
        ChannelModel::EqualLength => {
            for &l in lengths {
                let single: LenSet = [l].into_iter().collect();
                let mut cone = BTreeSet::new();
                cone.insert(x.clone());
                bfs_closure(x, &single, opts, &mut cone)?;
                members.extend(cone);
                if members.len() > opts.member_cap {
                    return Err(Error::ResourceLimit {
                        cap: opts.member_cap,
                    });
                }
            }
        }
        ChannelModel::Disjoint => {
            let lens: Vec<usize> = lengths.iter().copied().collect();
            enumerate_plan_outputs(x, &lens, opts, &mut members)?;
        }
        ChannelModel::DisjointEqualLength => {
            for &l in lengths {
                enumerate_plan_outputs(x, &[l], opts, &mut members)?;
            }
        }
    }
    Ok(DescendantSet {
        root: x.clone(),
        model,
        lengths: lengths.clone(),
        max_len: opts.max_len,
        members,
    })
}

/// Breadth-first closure under single duplications with lengths from the
/// given set, truncated at `max_len` (and `max_events` rounds, if set).
fn bfs_closure(
    x: &Word,
    lengths: &LenSet,
    opts: &ConeOptions,
    members: &mut BTreeSet<Word>,
) -> Result<(), Error> {
    let mut frontier = vec![x.clone()];
    let mut rounds = 0usize;
    while !frontier.is_empty() {
        if let Some(limit) = opts.max_events {
            if rounds >= limit {
                break;
            }
        }
        rounds += 1;
        let mut next = Vec::new();
        for w in &frontier {
            for &l in lengths {
                if l > w.len() || w.len() + l > opts.max_len {
                    continue;
                }
                for i in 0..=w.len() - l {
                    let z = apply_duplication(w, DupEvent::new(i, l))?;
                    if members.insert(z.clone()) {
                        if members.len() > opts.member_cap {
                            return Err(Error::ResourceLimit {
                                cap: opts.member_cap,
                            });
                        }
                        next.push(z);
                    }
                }
            }
        }
        frontier = next;
    }
    Ok(())
}

/// Applies every simultaneous plan on `x` with block lengths from the
/// given list, bounded by added length and block count.
fn enumerate_plan_outputs(
    x: &Word,
    lengths: &[usize],
    opts: &ConeOptions,
    members: &mut BTreeSet<Word>,
) -> Result<(), Error> {
    let budget = opts.max_len - x.len();
    let letters = x.letters();
    let max_t = opts.max_events.unwrap_or(usize::MAX);

    #[allow(clippy::too_many_arguments)]
    fn rec(
        letters: &[u32],
        alphabet: Alphabet,
        lengths: &[usize],
        pos: usize,
        t: usize,
        budget: usize,
        max_t: usize,
        prefix: &mut Vec<u32>,
        members: &mut BTreeSet<Word>,
        cap: usize,
    ) -> Result<(), Error> {
        // Closing the plan here makes the rest of the word the final gap.
        let mut output = prefix.clone();
        output.extend_from_slice(&letters[pos..]);
        if members.insert(Word::from_raw(alphabet, output)) && members.len() > cap {
            return Err(Error::ResourceLimit { cap });
        }
        if t >= max_t {
            return Ok(());
        }
        for offset in pos..letters.len() {
            for &l in lengths {
                if l > budget || offset + l > letters.len() {
                    continue;
                }
                let keep = prefix.len();
                prefix.extend_from_slice(&letters[pos..offset]);
                prefix.extend_from_slice(&letters[offset..offset + l]);
                prefix.extend_from_slice(&letters[offset..offset + l]);
                rec(
                    letters,
                    alphabet,
                    lengths,
                    offset + l,
                    t + 1,
                    budget - l,
                    max_t,
                    prefix,
                    members,
                    cap,
                )?;
                prefix.truncate(keep);
            }
        }
        Ok(())
    }

    let mut prefix = Vec::with_capacity(opts.max_len);
    rec(
        letters,
        x.alphabet(),
        lengths,
        0,
        0,
        budget,
        max_t,
        &mut prefix,
        members,
        opts.member_cap,
    )
}

/// Whether two equal-length words share a bounded-cone descendant;
/// returns a minimal-length (then lexicographically least) witness.
pub fn confusable(
    x: &Word,
    y: &Word,
    model: ChannelModel,
    lengths: &LenSet,
    opts: &ConeOptions,
) -> Result<Option<Word>, Error> {
    if x.len() != y.len() {
        return Err(Error::InvalidArgument(
            "confusability is defined on words of equal length".into(),
        ));
    }
    let dx = descendants(x, model, lengths, opts)?;
    let dy = descendants(y, model, lengths, opts)?;
    Ok(min_common(&dx.members, &dy.members))
}

/// Minimal common element by (length, letters); `None` when disjoint.
fn min_common(a: &BTreeSet<Word>, b: &BTreeSet<Word>) -> Option<Word> {
    let mut best: Option<&Word> = None;
    for w in a.intersection(b) {
        let better = match best {
            None => true,
            Some(b) => (w.len(), w.letters()) < (b.len(), b.letters()),
        };
        if better {
            best = Some(w);
        }
    }
    best.cloned()
}

/// What a verification run checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    /// One of the three construction theorems.
    Theorem(u8),
    /// The harness sanity check: the full space must collide.
    NegativeControl,
}

/// A confusable codeword pair and a shared descendant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Collision {
    pub x: Word,
    pub y: Word,
    pub witness: Word,
}

/// Tally of an exhaustive lemma suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct LemmaTally {
    pub cases: u64,
    pub failures: u64,
}

/// Outcome of one verification run, serializable as stable structured
/// text for CI diffing. Elapsed time is carried separately from the
/// stable fields.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub kind: CheckKind,
    pub n: usize,
    pub q: u32,
    pub lengths: LenSet,
    pub forbidden: LenSet,
    pub model: ChannelModel,
    pub max_len: usize,
    pub max_events: Option<usize>,
    pub code_size: usize,
    pub pairs_checked: u64,
    pub collisions: Vec<Collision>,
    pub lemma_checks: Vec<(String, LemmaTally)>,
    pub seed: u64,
    pub elapsed: Duration,
}

impl VerificationReport {
    /// A theorem check passes with zero collisions; the negative control
    /// passes by finding at least one.
    pub fn passed(&self) -> bool {
        match self.kind {
            CheckKind::Theorem(_) => {
                self.collisions.is_empty() && self.lemma_checks.iter().all(|(_, t)| t.failures == 0)
            }
            CheckKind::NegativeControl => !self.collisions.is_empty(),
        }
    }

    /// Stable text form; every field except the trailing `#`-prefixed
    /// elapsed line is identical across runs.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let kind = match self.kind {
            CheckKind::Theorem(k) => format!("theorem-{}", k),
            CheckKind::NegativeControl => "negative-control".to_string(),
        };
        let _ = writeln!(s, "check: {}", kind);
        let _ = writeln!(s, "n: {}", self.n);
        let _ = writeln!(s, "q: {}", self.q);
        let _ = writeln!(s, "L: {}", format_lenset(&self.lengths));
        let _ = writeln!(s, "F: {}", format_lenset(&self.forbidden));
        let _ = writeln!(s, "model: {}", self.model);
        let _ = writeln!(s, "max_len: {}", self.max_len);
        match self.max_events {
            Some(t) => {
                let _ = writeln!(s, "max_events: {}", t);
            }
            None => {
                let _ = writeln!(s, "max_events: -");
            }
        }
        let _ = writeln!(s, "code_size: {}", self.code_size);
        let _ = writeln!(s, "pairs_checked: {}", self.pairs_checked);
        let _ = writeln!(s, "collisions: {}", self.collisions.len());
        for c in &self.collisions {
            let _ = writeln!(
                s,
                "collision: x={} y={} z={}",
                c.x.to_text(),
                c.y.to_text(),
                c.witness.to_text()
            );
        }
        for (name, tally) in &self.lemma_checks {
            let _ = writeln!(
                s,
                "lemma: {} cases={} failures={}",
                name, tally.cases, tally.failures
            );
        }
        let _ = writeln!(s, "result: {}", if self.passed() { "pass" } else { "fail" });
        let _ = writeln!(
            s,
            "note: cones truncated at max_len={}; absence of collisions at this \
             bound corroborates the construction, it does not prove it",
            self.max_len
        );
        let _ = writeln!(s, "seed: {}", self.seed);
        let _ = writeln!(s, "# elapsed_ms: {}", self.elapsed.as_millis());
        s
    }
}

/// Exhaustively checks one construction theorem at a bounded scale:
/// builds the code, computes every codeword's bounded cone, and
/// intersects all unordered pairs. The theorem's hypotheses on L are
/// enforced (in particular the equal-length separation requirement).
pub fn verify_theorem(
    theorem: u8,
    n: usize,
    alphabet: Alphabet,
    lengths: &LenSet,
    opts: &ConeOptions,
    seed: u64,
) -> Result<VerificationReport, Error> {
    let model = match theorem {
        1 => ChannelModel::Disjoint,
        2 => ChannelModel::EqualLength,
        3 => ChannelModel::DisjointEqualLength,
        other => {
            return Err(Error::InvalidArgument(format!(
                "no theorem {} to verify",
                other
            )))
        }
    };
    let spec = LengthSpec::new(lengths.clone(), model)?;
    pairwise_check(
        CheckKind::Theorem(theorem),
        n,
        alphabet,
        lengths,
        spec.forbidden(),
        model,
        opts,
        seed,
    )
}

/// Runs the disjoint-model pairwise check over the full space `Σ^n`
/// (forbidden set empty). The harness is sound only if it finds
/// collisions here.
pub fn negative_control(
    n: usize,
    alphabet: Alphabet,
    lengths: &LenSet,
    opts: &ConeOptions,
    seed: u64,
) -> Result<VerificationReport, Error> {
    pairwise_check(
        CheckKind::NegativeControl,
        n,
        alphabet,
        lengths,
        &LenSet::new(),
        ChannelModel::Disjoint,
        opts,
        seed,
    )
}

#[allow(clippy::too_many_arguments)]
fn pairwise_check(
    kind: CheckKind,
    n: usize,
    alphabet: Alphabet,
    lengths: &LenSet,
    forbidden: &LenSet,
    model: ChannelModel,
    opts: &ConeOptions,
    seed: u64,
) -> Result<VerificationReport, Error> {
    let start = Instant::now();
    let code = enumerate_code(n, alphabet, forbidden, opts.member_cap)?;
    let mut cones = Vec::with_capacity(code.size());
    for x in code.members() {
        cones.push(descendants(x, model, lengths, opts)?.members);
    }
    let mut collisions = Vec::new();
    let mut pairs_checked = 0u64;
    for i in 0..cones.len() {
        for j in i + 1..cones.len() {
            pairs_checked += 1;
            if let Some(witness) = min_common(&cones[i], &cones[j]) {
                collisions.push(Collision {
                    x: code.members()[i].clone(),
                    y: code.members()[j].clone(),
                    witness,
                });
            }
        }
    }
    Ok(VerificationReport {
        kind,
        n,
        q: alphabet.size(),
        lengths: lengths.clone(),
        forbidden: forbidden.clone(),
        model,
        max_len: opts.max_len,
        max_events: opts.max_events,
        code_size: code.size(),
        pairs_checked,
        collisions,
        lemma_checks: Vec::new(),
        seed,
        elapsed: start.elapsed(),
    })
}

/// All squares of a word as spans paired with their half-length.
fn all_square_spans(w: &Word) -> Vec<(FactorSpan, usize)> {
    let all: LenSet = (1..=w.len() / 2).collect();
    find_squares(w, &all)
        .into_iter()
        .map(|(start, l)| {
            (
                FactorSpan::new(start, start + 2 * l - 1).expect("square span"),
                l,
            )
        })
        .collect()
}

/// Exhaustive suite for the equal-length mid-cover property: over every
/// ternary host word up to the given length, any two equal-length squares
/// that mid-cover each other de-duplicate to the same string. Binary
/// hosts are letter subsets of the ternary ones, so they are covered.
pub fn check_lemma_eqmidcover(max_host_len: usize) -> LemmaTally {
    let mut tally = LemmaTally::default();
    for_each_ternary_word(max_host_len, |z| {
        let spans = all_square_spans(z);
        for (i, &(a, la)) in spans.iter().enumerate() {
            for &(b, lb) in &spans[i..] {
                if la != lb || !a.midcovers(b) || !b.midcovers(a) {
                    continue;
                }
                tally.cases += 1;
                let left = remove_duplication(z, a.start(), la).expect("square");
                let right = remove_duplication(z, b.start(), lb).expect("square");
                if left != right {
                    tally.failures += 1;
                }
            }
        }
    });
    tally
}

/// Exhaustive suite for the unequal-length mid-cover property: removing
/// the shorter of two mutually mid-covering squares leaves a square whose
/// half-length is the difference of the two.
pub fn check_lemma_neqmidcover(max_host_len: usize) -> LemmaTally {
    let mut tally = LemmaTally::default();
    for_each_ternary_word(max_host_len, |z| {
        let spans = all_square_spans(z);
        for &(a, la) in &spans {
            for &(b, lb) in &spans {
                if la <= lb || !a.midcovers(b) || !b.midcovers(a) {
                    continue;
                }
                tally.cases += 1;
                let reduced = remove_duplication(z, b.start(), lb).expect("square");
                let expect: LenSet = [la - lb].into_iter().collect();
                if find_squares(&reduced, &expect).is_empty() {
                    tally.failures += 1;
                }
            }
        }
    });
    tally
}

fn for_each_ternary_word(max_len: usize, mut visit: impl FnMut(&Word)) {
    let alphabet = Alphabet::new(3).expect("q = 3");
    for len in 0..=max_len {
        let mut letters = vec![0u32; len];
        'words: loop {
            visit(&Word::from_raw(alphabet, letters.clone()));
            // Odometer increment in base 3; wrapping past the last word
            // moves on to the next length.
            let mut i = len;
            loop {
                if i == 0 {
                    break 'words;
                }
                i -= 1;
                if letters[i] == 2 {
                    letters[i] = 0;
                } else {
                    letters[i] += 1;
                    break;
                }
            }
        }
    }
}

/// The default cone bound: three rounds of the largest duplication.
pub fn default_max_len(n: usize, lengths: &LenSet) -> usize {
    let max_l = lengths.iter().next_back().copied().unwrap_or(1);
    n + 2 * max_l * 3
}

/// Convenience: `F = L ∪ L^Δ`, the forbidden set of the disjoint
/// construction.
pub fn disjoint_forbidden(lengths: &LenSet) -> LenSet {
    let mut f = lengths.clone();
    f.extend(length_delta(lengths));
    f
}
