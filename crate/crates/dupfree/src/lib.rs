//! Duplication-free codes for tandem-duplication channels.
//!
//! A tandem duplication copies a factor of a word and inserts the copy
//! immediately after the original (`uvw -> uvvw`). This crate builds the
//! codes that survive such corruption — words containing no square `vv`
//! with `|v|` in a forbidden set — together with the corruption models
//! themselves, decoders for each setting, and a brute-force verification
//! harness that exhaustively corroborates the constructions at small
//! scale.
//!
//! Indices in the public API are 1-based where they denote positions in a
//! word; prefix lengths and counts are plain sizes.
//!
//! ```
//! use dupfree::{
//!     decode_equal_length, enumerate_code, sample_corruption, Alphabet, ChannelModel,
//!     LengthSpec, DEFAULT_MEMBER_CAP,
//! };
//!
//! // Words over Z_3 of length 5 with no squared factor of half-length 2.
//! let spec = LengthSpec::new([2].into(), ChannelModel::EqualLength)?;
//! let alphabet = Alphabet::new(3)?;
//! let code = enumerate_code(5, alphabet, spec.forbidden(), DEFAULT_MEMBER_CAP)?;
//!
//! // Corrupt a codeword with three equal-length duplications and decode.
//! let x = &code.members()[17];
//! let (z, _trace) = sample_corruption(x, ChannelModel::EqualLength, spec.lengths(), 3, 7)?;
//! assert_eq!(z.len(), x.len() + 6);
//! let decoded = decode_equal_length(&z, &spec, 5)?;
//! assert_eq!(decoded.codeword(), Some(x));
//! # Ok::<(), dupfree::Error>(())
//! ```

pub mod channel;
pub mod code;
pub mod decode;
pub mod error;
pub mod model;
pub mod transform;
pub mod verify;
pub mod word;

pub use channel::{
    apply_disjoint, apply_trace, sample_corruption, sample_corruption_with, Corruption,
    CorruptionTrace, DisjointPlan,
};
pub use code::{
    count_code, enumerate_code, is_codeword, length_delta, rate, Code, LengthSpec,
    DEFAULT_MEMBER_CAP,
};
pub use decode::{
    decode_bruteforce, decode_equal_length, decode_equal_length_exhaustive, decode_uniform,
    DecodeResult,
};
pub use error::Error;
pub use model::ChannelModel;
pub use transform::{
    extract_disjoint_duplications, phi, phi_inverse, reduce_runs_mod, zero_run_decompose,
    ZeroRunDecomposition,
};
pub use verify::{
    check_lemma_eqmidcover, check_lemma_neqmidcover, confusable, descendants, negative_control,
    verify_theorem, CheckKind, Collision, ConeOptions, DescendantSet, LemmaTally,
    VerificationReport,
};
pub use word::{
    apply_duplication, find_squares, lenset, remove_duplication, Alphabet, DupEvent, FactorSpan,
    LenSet, Word,
};
