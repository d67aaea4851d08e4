//! Command-line front end: enumeration, corruption sampling, decoding,
//! transform inspection, and exhaustive verification as batch commands.
//!
//! Exit codes: 0 success/pass, 1 decode-or-verify failure, 2 invalid
//! configuration, 3 resource cap exceeded.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use dupfree::channel::{write_plan, write_trace, Corruption};
use dupfree::code::{count_rate_record, enumerate_code, DEFAULT_MEMBER_CAP};
use dupfree::decode::{decode_bruteforce, decode_equal_length, decode_uniform, DecodeResult};
use dupfree::transform::{phi, phi_inverse, zero_run_decompose};
use dupfree::verify::{
    check_lemma_eqmidcover, check_lemma_neqmidcover, default_max_len, negative_control,
    verify_theorem, ConeOptions,
};
use dupfree::{sample_corruption_with, Alphabet, ChannelModel, Error, LenSet, LengthSpec, Word};

#[derive(Parser)]
#[command(
    name = "dupfree",
    version,
    about = "Duplication-free codes for tandem-duplication channels"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate a duplication-free code and report its count and rate.
    Enumerate(EnumerateArgs),
    /// Corrupt words with seeded tandem duplications, recording traces.
    Corrupt(CorruptArgs),
    /// Decode corrupted words back to codewords.
    Decode(DecodeArgs),
    /// Exhaustively verify a construction, or run the negative control.
    Verify(VerifyArgs),
    /// Apply the difference transform, its inverse, or the zero-run parse.
    Transform(TransformArgs),
}

/// Corruption model named on the command line; `uniform` selects the
/// known-length decoder and is only meaningful for `decode`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    #[value(name = "unrestricted")]
    Unrestricted,
    #[value(name = "disjoint")]
    Disjoint,
    #[value(name = "equal_length")]
    EqualLength,
    #[value(name = "disjoint_equal_length")]
    DisjointEqualLength,
    #[value(name = "uniform")]
    Uniform,
}

impl ModeArg {
    fn channel_model(self) -> Option<ChannelModel> {
        match self {
            ModeArg::Unrestricted => Some(ChannelModel::Unrestricted),
            ModeArg::Disjoint => Some(ChannelModel::Disjoint),
            ModeArg::EqualLength => Some(ChannelModel::EqualLength),
            ModeArg::DisjointEqualLength => Some(ChannelModel::DisjointEqualLength),
            ModeArg::Uniform => None,
        }
    }
}

fn parse_len_set(s: &str) -> Result<LenSet, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(LenSet::new());
    }
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| format!("invalid length {:?}", part))
        })
        .collect()
}

#[derive(Args)]
struct EnumerateArgs {
    /// Codeword length.
    #[arg(long)]
    n: usize,
    /// Alphabet size.
    #[arg(long)]
    q: u32,
    /// Allowed duplication lengths (comma list); F is derived via --mode.
    #[arg(long = "L", value_parser = parse_len_set)]
    lengths: Option<LenSet>,
    /// Forbidden square half-lengths (comma list); overrides --L/--mode.
    #[arg(long = "F", value_parser = parse_len_set)]
    forbidden: Option<LenSet>,
    /// Corruption model that picks F from L.
    #[arg(long)]
    mode: Option<ModeArg>,
    /// Cap on materialized codewords.
    #[arg(long, default_value_t = DEFAULT_MEMBER_CAP)]
    cap: usize,
    /// Output file for the codeword list (stdout when absent).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CorruptArgs {
    /// Alphabet size.
    #[arg(long)]
    q: u32,
    /// Corruption model.
    #[arg(long)]
    mode: ModeArg,
    /// Allowed duplication lengths (comma list).
    #[arg(long = "L", value_parser = parse_len_set)]
    lengths: LenSet,
    /// Number of duplications per word.
    #[arg(long, default_value_t = 1)]
    t: usize,
    /// Generator seed; word k draws from stream k of this seed.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Input words, one per line (stdin when absent).
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Output file for corrupted words (stdout when absent).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Trace file (defaults to <out>.trace, or stderr without --out).
    #[arg(long)]
    trace: Option<PathBuf>,
}

#[derive(Args)]
struct DecodeArgs {
    /// Alphabet size.
    #[arg(long)]
    q: u32,
    /// Code length to decode to.
    #[arg(long)]
    n: usize,
    /// Decoder: uniform (known length), equal_length, disjoint, or
    /// disjoint_equal_length.
    #[arg(long)]
    mode: ModeArg,
    /// Known duplication length (uniform mode).
    #[arg(long)]
    l: Option<usize>,
    /// Allowed duplication lengths (comma list; non-uniform modes).
    #[arg(long = "L", value_parser = parse_len_set)]
    lengths: Option<LenSet>,
    /// Search budget for the brute-force modes.
    #[arg(long, default_value_t = DEFAULT_MEMBER_CAP)]
    cap: usize,
    /// Input words, one per line (stdin when absent).
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Output file (stdout when absent).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which construction to verify: 1 (disjoint), 2 (equal-length),
    /// 3 (disjoint equal-length).
    #[arg(long, conflicts_with = "negative_control")]
    theorem: Option<u8>,
    /// Check that the harness finds collisions over the full space.
    #[arg(long)]
    negative_control: bool,
    /// Codeword length.
    #[arg(long)]
    n: usize,
    /// Alphabet size.
    #[arg(long)]
    q: u32,
    /// Allowed duplication lengths (comma list).
    #[arg(long = "L", value_parser = parse_len_set)]
    lengths: LenSet,
    /// Cone truncation length (default n + 6 * max(L)).
    #[arg(long = "max-len")]
    max_len: Option<usize>,
    /// Cap on duplication events per derivation.
    #[arg(long)]
    t: Option<usize>,
    /// Cap on code members and cone members.
    #[arg(long, default_value_t = DEFAULT_MEMBER_CAP)]
    cap: usize,
    /// Also run the mid-cover lemma suites up to this host length.
    #[arg(long)]
    lemmas: Option<usize>,
    /// Seed recorded in the report.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Report file (stdout when absent).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("op").required(true).args(["phi", "inverse", "parse"]))]
struct TransformArgs {
    /// Apply the forward transform.
    #[arg(long)]
    phi: bool,
    /// Apply the inverse transform.
    #[arg(long)]
    inverse: bool,
    /// Print the zero-run parse.
    #[arg(long)]
    parse: bool,
    /// Transform length.
    #[arg(long)]
    l: usize,
    /// Alphabet size.
    #[arg(long)]
    q: u32,
    /// Input words, one per line (stdin when absent).
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Output file (stdout when absent).
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            exit_code_for(&e)
        }
    };
    ExitCode::from(code)
}

fn exit_code_for(e: &CliError) -> u8 {
    match e {
        CliError::Lib(Error::ResourceLimit { .. }) => 3,
        _ => 2,
    }
}

#[derive(Debug)]
enum CliError {
    Lib(Error),
    Io(io::Error),
    Usage(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{}", e),
            CliError::Io(e) => write!(f, "{}", e),
            CliError::Usage(m) => write!(f, "{}", m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Corrupt(args) => cmd_corrupt(args),
        Command::Decode(args) => cmd_decode(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Transform(args) => cmd_transform(args),
    }
}

/// Reads words one per line, skipping blanks and `#` comments.
fn read_words(input: &Option<PathBuf>, alphabet: Alphabet) -> Result<Vec<Word>, CliError> {
    let reader: Box<dyn BufRead> = match input {
        Some(path) => Box::new(BufReader::new(File::open(path)?)),
        None => Box::new(BufReader::new(io::stdin())),
    };
    let mut words = Vec::new();
    for line in reader.lines() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        words.push(Word::parse(line, alphabet)?);
    }
    Ok(words)
}

fn open_out(out: &Option<PathBuf>) -> Result<Box<dyn Write>, CliError> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<u8, CliError> {
    let alphabet = Alphabet::new(args.q)?;
    let forbidden = match (&args.forbidden, &args.lengths) {
        (Some(f), _) => f.clone(),
        (None, Some(lengths)) => {
            let mode = args.mode.ok_or_else(|| {
                CliError::Usage("--L needs --mode to derive F (or pass --F directly)".into())
            })?;
            let model = mode
                .channel_model()
                .ok_or_else(|| CliError::Usage("--mode uniform does not derive F".into()))?;
            LengthSpec::new(lengths.clone(), model)?.forbidden().clone()
        }
        (None, None) => {
            return Err(CliError::Usage(
                "pass --F, or --L with --mode, to fix the forbidden set".into(),
            ))
        }
    };
    let code = enumerate_code(args.n, alphabet, &forbidden, args.cap)?;
    let mut out = open_out(&args.out)?;
    code.write_to(&mut out)?;
    out.flush()?;
    let record = count_rate_record(args.n, args.q, &forbidden, code.size() as u64);
    println!("{}", record);
    Ok(0)
}

fn cmd_corrupt(args: CorruptArgs) -> Result<u8, CliError> {
    let alphabet = Alphabet::new(args.q)?;
    let model = args
        .mode
        .channel_model()
        .ok_or_else(|| CliError::Usage("corrupt needs a channel model, not uniform".into()))?;
    let words = read_words(&args.input, alphabet)?;

    let mut out = open_out(&args.out)?;
    let mut trace_out: Box<dyn Write> = match (&args.trace, &args.out) {
        (Some(path), _) => Box::new(BufWriter::new(File::create(path)?)),
        (None, Some(out_path)) => {
            let mut name = out_path.as_os_str().to_owned();
            name.push(".trace");
            Box::new(BufWriter::new(File::create(PathBuf::from(name))?))
        }
        (None, None) => Box::new(BufWriter::new(io::stderr())),
    };

    for (k, x) in words.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
        rng.set_stream(k as u64);
        let (z, corruption) = sample_corruption_with(x, model, &args.lengths, args.t, &mut rng)
            .map_err(|e| CliError::Usage(format!("word {}: {}", k, e)))?;
        writeln!(out, "{}", z.to_text())?;
        writeln!(trace_out, "# word={}", k)?;
        match &corruption {
            Corruption::Trace(trace) => write_trace(&mut trace_out, trace, args.seed)?,
            Corruption::Plan(plan) => {
                write_plan(&mut trace_out, plan, model, &args.lengths, args.seed)?
            }
        }
    }
    out.flush()?;
    trace_out.flush()?;
    Ok(0)
}

fn cmd_decode(args: DecodeArgs) -> Result<u8, CliError> {
    let alphabet = Alphabet::new(args.q)?;
    let words = read_words(&args.input, alphabet)?;

    enum Decoder {
        Uniform(usize),
        EqualLength(LengthSpec),
        BruteForce(LengthSpec, ChannelModel),
    }
    let decoder = match args.mode {
        ModeArg::Uniform => {
            let l = args
                .l
                .ok_or_else(|| CliError::Usage("uniform decoding needs --l".into()))?;
            Decoder::Uniform(l)
        }
        ModeArg::EqualLength => {
            let lengths = args
                .lengths
                .clone()
                .ok_or_else(|| CliError::Usage("equal_length decoding needs --L".into()))?;
            Decoder::EqualLength(LengthSpec::new(lengths, ChannelModel::EqualLength)?)
        }
        ModeArg::Disjoint | ModeArg::DisjointEqualLength => {
            let model = args.mode.channel_model().expect("channel mode");
            let lengths = args
                .lengths
                .clone()
                .ok_or_else(|| CliError::Usage("brute-force decoding needs --L".into()))?;
            Decoder::BruteForce(LengthSpec::new(lengths, model)?, model)
        }
        ModeArg::Unrestricted => {
            return Err(CliError::Usage(
                "no decoder exists for the unrestricted model".into(),
            ))
        }
    };

    let mut out = open_out(&args.out)?;
    let mut all_unique = true;
    for (k, z) in words.iter().enumerate() {
        let result = match &decoder {
            Decoder::Uniform(l) => decode_uniform(z, *l, args.n),
            Decoder::EqualLength(spec) => decode_equal_length(z, spec, args.n),
            Decoder::BruteForce(spec, model) => {
                decode_bruteforce(z, spec, args.n, *model, args.cap)
            }
        };
        match result {
            Ok(DecodeResult::Unique { codeword, .. }) => {
                writeln!(out, "{}", codeword.to_text())?;
            }
            Ok(other) => {
                all_unique = false;
                writeln!(out, "# word {}: {}", k, other.status())?;
            }
            Err(e @ Error::ResourceLimit { .. }) => return Err(e.into()),
            Err(e) => {
                all_unique = false;
                writeln!(out, "# word {}: error: {}", k, e)?;
            }
        }
    }
    out.flush()?;
    Ok(if all_unique { 0 } else { 1 })
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, CliError> {
    let alphabet = Alphabet::new(args.q)?;
    let max_len = args
        .max_len
        .unwrap_or_else(|| default_max_len(args.n, &args.lengths));
    let opts = ConeOptions::new(max_len)
        .with_max_events(args.t)
        .with_member_cap(args.cap);

    let mut report = if args.negative_control {
        negative_control(args.n, alphabet, &args.lengths, &opts, args.seed)?
    } else {
        let theorem = args.theorem.ok_or_else(|| {
            CliError::Usage("pass --theorem {1,2,3} or --negative-control".into())
        })?;
        verify_theorem(theorem, args.n, alphabet, &args.lengths, &opts, args.seed)?
    };

    if let Some(budget) = args.lemmas {
        report
            .lemma_checks
            .push(("eq-midcover".to_string(), check_lemma_eqmidcover(budget)));
        report
            .lemma_checks
            .push(("neq-midcover".to_string(), check_lemma_neqmidcover(budget)));
    }

    let mut out = open_out(&args.out)?;
    write!(out, "{}", report.to_text())?;
    out.flush()?;
    Ok(if report.passed() { 0 } else { 1 })
}

fn cmd_transform(args: TransformArgs) -> Result<u8, CliError> {
    let alphabet = Alphabet::new(args.q)?;
    let words = read_words(&args.input, alphabet)?;
    let mut out = open_out(&args.out)?;
    for w in &words {
        if args.phi {
            writeln!(out, "{}", phi(w, args.l)?.to_text())?;
        } else if args.inverse {
            writeln!(out, "{}", phi_inverse(w, args.l)?.to_text())?;
        } else {
            let d = zero_run_decompose(w, args.l)?;
            let runs = d
                .zero_runs()
                .iter()
                .map(|m| m.to_string())
                .collect::<Vec<_>>()
                .join(",");
            let blocks = d
                .blocks()
                .iter()
                .map(|b| b.to_text())
                .collect::<Vec<_>>()
                .join("|");
            writeln!(
                out,
                "prefix={} runs={} blocks={}",
                d.prefix().to_text(),
                runs,
                blocks
            )?;
        }
    }
    out.flush()?;
    Ok(0)
}
