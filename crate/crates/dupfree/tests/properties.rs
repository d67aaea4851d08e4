//! Randomized invariants over wider parameter ranges than the exhaustive
//! sweeps cover.

mod common;

use common::naive_squares;
use dupfree::verify::ConeOptions;
use dupfree::{
    apply_duplication, descendants, extract_disjoint_duplications, find_squares, lenset, phi,
    phi_inverse, remove_duplication, sample_corruption, zero_run_decompose, Alphabet, ChannelModel,
    Corruption, DupEvent, FactorSpan, LenSet, Word,
};
use proptest::prelude::*;

/// The uniform decoder is linear in the input: doubling a 10^5-letter
/// input must not much more than double the time. Minimum over several
/// runs damps scheduler noise.
#[test]
fn uniform_decoder_scales_linearly() {
    use dupfree::decode_uniform;
    use std::time::{Duration, Instant};

    let alphabet = Alphabet::new(3).unwrap();
    let pattern = [0u32, 0, 1, 1, 2, 2];
    let build = |n: usize| {
        let letters: Vec<u32> = pattern.iter().cycle().take(n).copied().collect();
        Word::new(alphabet, letters).unwrap()
    };
    let small = build(99_996);
    let large = build(199_998);

    let time_decode = |z: &Word| -> Duration {
        let mut best = Duration::MAX;
        for _ in 0..7 {
            let start = Instant::now();
            let result = decode_uniform(z, 2, z.len()).unwrap();
            let elapsed = start.elapsed();
            assert!(result.is_unique());
            best = best.min(elapsed);
        }
        best
    };

    // Warm up allocator and caches.
    let _ = time_decode(&small);
    let t_small = time_decode(&small);
    let t_large = time_decode(&large);
    let ratio = t_large.as_secs_f64() / t_small.as_secs_f64();
    assert!(
        ratio <= 2.5,
        "doubling the input scaled time by {:.2} ({:?} -> {:?})",
        ratio,
        t_small,
        t_large
    );
}

fn arb_word(max_len: usize, max_q: u32) -> impl Strategy<Value = Word> {
    (2..=max_q).prop_flat_map(move |q| {
        prop::collection::vec(0..q, 0..=max_len)
            .prop_map(move |letters| Word::new(Alphabet::new(q).unwrap(), letters).unwrap())
    })
}

fn arb_nonempty_word(max_len: usize, max_q: u32) -> impl Strategy<Value = Word> {
    (2..=max_q).prop_flat_map(move |q| {
        prop::collection::vec(0..q, 1..=max_len)
            .prop_map(move |letters| Word::new(Alphabet::new(q).unwrap(), letters).unwrap())
    })
}

fn arb_lenset() -> impl Strategy<Value = LenSet> {
    prop::collection::btree_set(1..6usize, 1..4)
}

proptest! {
    #[test]
    fn duplication_round_trips((x, i, l) in arb_nonempty_word(24, 8)
        .prop_flat_map(|x| {
            let n = x.len();
            (Just(x), 0..n, 1..=n)
        })
        .prop_filter("event must fit", |(x, i, l)| i + l <= x.len()))
    {
        let e = DupEvent::new(i, l);
        let z = apply_duplication(&x, e).unwrap();
        prop_assert_eq!(z.len(), x.len() + l);
        prop_assert_eq!(remove_duplication(&z, i + 1, l).unwrap(), x);
    }

    #[test]
    fn square_scan_matches_naive(w in arb_word(30, 6), lengths in arb_lenset()) {
        let found = find_squares(&w, &lengths);
        prop_assert_eq!(&found, &naive_squares(&w, &lengths));
        // Removing a found square and re-duplicating restores the word.
        for &(start, l) in &found {
            let reduced = remove_duplication(&w, start, l).unwrap();
            let back = apply_duplication(&reduced, DupEvent::new(start - 1, l)).unwrap();
            prop_assert_eq!(&back, &w);
        }
    }

    #[test]
    fn text_format_round_trips(w in arb_word(30, 40)) {
        let text = w.to_text();
        prop_assert_eq!(Word::parse(&text, w.alphabet()).unwrap(), w);
    }

    #[test]
    fn transform_round_trips((x, l) in arb_nonempty_word(30, 8)
        .prop_flat_map(|x| { let n = x.len(); (Just(x), 1..=n) }))
    {
        let y = phi(&x, l).unwrap();
        prop_assert_eq!(y.len(), x.len());
        prop_assert_eq!(&y.letters()[..l], &x.letters()[..l]);
        prop_assert_eq!(phi_inverse(&y, l).unwrap(), x.clone());
        prop_assert_eq!(phi(&phi_inverse(&x, l).unwrap(), l).unwrap(), x.clone());

        let d = zero_run_decompose(&y, l).unwrap();
        prop_assert_eq!(d.reassemble(), y);
        prop_assert_eq!(d.zero_runs().len(), d.blocks().len() + 1);
        // Interior runs are maximal, hence nonzero; blocks are zero-free.
        let runs = d.zero_runs();
        if runs.len() >= 2 {
            for &run in &runs[1..runs.len() - 1] {
                prop_assert!(run >= 1);
            }
        }
        for block in d.blocks() {
            prop_assert!(block.letters().iter().all(|&c| c != 0));
        }
    }

    #[test]
    fn extracted_spans_are_disjoint_squares((z, l) in arb_nonempty_word(24, 6)
        .prop_flat_map(|z| { let n = z.len(); (Just(z), 1..=n) }))
    {
        let spans = extract_disjoint_duplications(&z, l).unwrap();
        for (i, span) in spans.iter().enumerate() {
            prop_assert_eq!(span.len(), 2 * l);
            let s = span.start() - 1;
            prop_assert_eq!(&z.letters()[s..s + l], &z.letters()[s + l..s + 2 * l]);
            for later in &spans[i + 1..] {
                prop_assert!(span.disjoint(*later));
            }
        }
    }

    #[test]
    fn span_relations((a, b) in (1..30usize, 1..14usize, 1..30usize, 1..14usize)
        .prop_map(|(s1, l1, s2, l2)| {
            (FactorSpan::new(s1, s1 + l1).unwrap(), FactorSpan::new(s2, s2 + l2).unwrap())
        }))
    {
        // Mid-covering is reflexive; disjointness is symmetric and
        // irreflexive for nonempty spans.
        prop_assert!(a.midcovers(a));
        prop_assert_eq!(a.disjoint(b), b.disjoint(a));
        prop_assert!(!a.disjoint(a));
    }

    #[test]
    fn sampled_corruptions_are_reproducible_members(
        x in arb_nonempty_word(8, 3),
        model_pick in 0..4usize,
        t in 0..3usize,
        seed in 0..1000u64,
    ) {
        let model = [
            ChannelModel::Unrestricted,
            ChannelModel::Disjoint,
            ChannelModel::EqualLength,
            ChannelModel::DisjointEqualLength,
        ][model_pick];
        let lengths = lenset(&[1, 2]);
        let sampled = sample_corruption(&x, model, &lengths, t, seed);
        let (z, corruption) = match sampled {
            Ok(pair) => pair,
            // Disjoint draws may not fit; that is a legitimate outcome.
            Err(_) => return Ok(()),
        };
        // Reproducible bit-exactly from the trace or plan.
        prop_assert_eq!(corruption.apply(&x).unwrap(), z.clone());
        let (z2, corruption2) = sample_corruption(&x, model, &lengths, t, seed).unwrap();
        prop_assert_eq!(&z2, &z);
        prop_assert_eq!(corruption2, corruption.clone());

        // Length accounting.
        let added: usize = match &corruption {
            Corruption::Trace(trace) => trace.added_len(),
            Corruption::Plan(plan) => plan.added_len(),
        };
        prop_assert_eq!(z.len(), x.len() + added);

        // Membership in the matching bounded cone.
        let opts = ConeOptions::new(z.len().max(x.len()));
        let cone = descendants(&x, model, &lengths, &opts).unwrap();
        prop_assert!(cone.members.contains(&z));

        // A plan's duplications occupy pairwise disjoint spans of z.
        if let Corruption::Plan(plan) = &corruption {
            let mut shift = 0;
            let mut spans = Vec::new();
            for (offset, block) in plan.block_offsets().iter().zip(plan.blocks()) {
                let start = offset + shift + 1;
                spans.push(FactorSpan::new(start, start + 2 * block.len() - 1).unwrap());
                shift += block.len();
            }
            for (i, a) in spans.iter().enumerate() {
                for b in &spans[i + 1..] {
                    prop_assert!(a.disjoint(*b));
                }
                let s = a.start() - 1;
                let half = a.len() / 2;
                prop_assert_eq!(
                    &z.letters()[s..s + half],
                    &z.letters()[s + half..s + 2 * half]
                );
            }
        }
    }
}
