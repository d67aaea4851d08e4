//! Naive reference oracles, kept independent of the library's own
//! algorithms: plain double loops, recursive set composition, and direct
//! filtering of the full word space.

#![allow(dead_code)]

use std::collections::BTreeSet;

use dupfree::{Alphabet, LenSet, Word};

pub fn word(text: &str, q: u32) -> Word {
    Word::parse(text, Alphabet::new(q).unwrap()).unwrap()
}

/// Every word of length `n` over `Z_q`, in lexicographic order.
pub fn all_words(n: usize, q: u32) -> Vec<Word> {
    let alphabet = Alphabet::new(q).unwrap();
    let mut out = Vec::new();
    let mut letters = vec![0u32; n];
    loop {
        out.push(Word::new(alphabet, letters.clone()).unwrap());
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if letters[i] + 1 == q {
                letters[i] = 0;
            } else {
                letters[i] += 1;
                break;
            }
        }
    }
}

/// Every word of length at most `max_len`.
pub fn all_words_up_to(max_len: usize, q: u32) -> Vec<Word> {
    (0..=max_len).flat_map(|n| all_words(n, q)).collect()
}

/// Square scan as a plain double loop over lengths and starts.
pub fn naive_squares(w: &Word, lengths: &LenSet) -> Vec<(usize, usize)> {
    let s = w.letters();
    let mut found = Vec::new();
    for &l in lengths {
        if l == 0 {
            continue;
        }
        let mut start = 0;
        while start + 2 * l <= s.len() {
            let mut equal = true;
            for k in 0..l {
                if s[start + k] != s[start + l + k] {
                    equal = false;
                    break;
                }
            }
            if equal {
                found.push((start + 1, l));
            }
            start += 1;
        }
    }
    found.sort();
    found
}

pub fn naive_is_codeword(w: &Word, forbidden: &LenSet) -> bool {
    naive_squares(w, forbidden).is_empty()
}

/// The code as a filter over the full space.
pub fn naive_code(n: usize, q: u32, forbidden: &LenSet) -> Vec<Word> {
    all_words(n, q)
        .into_iter()
        .filter(|w| naive_is_codeword(w, forbidden))
        .collect()
}

fn concat(a: &[u32], b: &[u32], alphabet: Alphabet) -> Word {
    let mut letters = a.to_vec();
    letters.extend_from_slice(b);
    Word::new(alphabet, letters).unwrap()
}

/// One duplication step applied at every position, as string surgery.
fn naive_step(w: &Word, lengths: &LenSet) -> Vec<Word> {
    let s = w.letters();
    let mut out = Vec::new();
    for &l in lengths {
        if l == 0 || l > s.len() {
            continue;
        }
        for i in 0..=s.len() - l {
            let mut letters = s[..i + l].to_vec();
            letters.extend_from_slice(&s[i..]);
            out.push(Word::new(w.alphabet(), letters).unwrap());
        }
    }
    out
}

/// Iterated closure by repeated scanning, bounded by length and steps.
pub fn naive_cone_sequential(
    x: &Word,
    lengths: &LenSet,
    max_len: usize,
    max_steps: Option<usize>,
) -> BTreeSet<Word> {
    let mut cone: BTreeSet<Word> = BTreeSet::new();
    cone.insert(x.clone());
    let mut level = vec![x.clone()];
    let mut steps = 0;
    while !level.is_empty() && max_steps.is_none_or(|m| steps < m) {
        steps += 1;
        let mut next = Vec::new();
        for w in &level {
            for z in naive_step(w, lengths) {
                if z.len() <= max_len && cone.insert(z.clone()) {
                    next.push(z);
                }
            }
        }
        level = next;
    }
    cone
}

/// Equal-length cone: union over single-length sequential cones.
pub fn naive_cone_equal_length(
    x: &Word,
    lengths: &LenSet,
    max_len: usize,
    max_steps: Option<usize>,
) -> BTreeSet<Word> {
    let mut cone = BTreeSet::new();
    for &l in lengths {
        let single: LenSet = [l].into_iter().collect();
        cone.extend(naive_cone_sequential(x, &single, max_len, max_steps));
    }
    cone.insert(x.clone());
    cone
}

/// Disjoint cone by suffix composition: a word's descendants are itself,
/// plus every choice of a leftmost squared block composed with the
/// descendants of the remaining suffix.
pub fn naive_cone_disjoint(
    x: &Word,
    lengths: &LenSet,
    max_len: usize,
    max_t: Option<usize>,
) -> BTreeSet<Word> {
    let budget = max_len.saturating_sub(x.len());
    let t_cap = max_t.unwrap_or(usize::MAX);
    let alphabet = x.alphabet();
    let outputs = suffix_compose(x.letters(), lengths, budget, t_cap);
    outputs
        .into_iter()
        .map(|letters| Word::new(alphabet, letters).unwrap())
        .collect()
}

fn suffix_compose(s: &[u32], lengths: &LenSet, budget: usize, t_cap: usize) -> BTreeSet<Vec<u32>> {
    let mut out = BTreeSet::new();
    out.insert(s.to_vec());
    if t_cap == 0 {
        return out;
    }
    for i in 0..s.len() {
        for &l in lengths {
            if l == 0 || l > budget || i + l > s.len() {
                continue;
            }
            let rest = suffix_compose(&s[i + l..], lengths, budget - l, t_cap - 1);
            for tail in rest {
                let mut letters = s[..i].to_vec();
                letters.extend_from_slice(&s[i..i + l]);
                letters.extend_from_slice(&s[i..i + l]);
                letters.extend_from_slice(&tail);
                out.insert(letters);
            }
        }
    }
    out
}

/// Combined cone: disjoint plans with one shared length.
pub fn naive_cone_combined(
    x: &Word,
    lengths: &LenSet,
    max_len: usize,
    max_t: Option<usize>,
) -> BTreeSet<Word> {
    let mut cone = BTreeSet::new();
    for &l in lengths {
        let single: LenSet = [l].into_iter().collect();
        cone.extend(naive_cone_disjoint(x, &single, max_len, max_t));
    }
    cone.insert(x.clone());
    cone
}

/// All duplication-offset sequences of exactly `t` steps from `x`, each
/// of one fixed length; calls `visit` on every intermediate word with the
/// number of steps applied so far.
pub fn for_all_offset_chains(
    x: &Word,
    l: usize,
    max_t: usize,
    visit: &mut impl FnMut(&Word, usize),
) {
    fn rec(w: &Word, l: usize, t: usize, max_t: usize, visit: &mut impl FnMut(&Word, usize)) {
        visit(w, t);
        if t == max_t || l > w.len() {
            return;
        }
        for i in 0..=w.len() - l {
            let z = dupfree::apply_duplication(w, dupfree::DupEvent::new(i, l)).unwrap();
            rec(&z, l, t + 1, max_t, visit);
        }
    }
    rec(x, l, 0, max_t, visit);
}
