//! Command-line front end. [`run`] returns the process exit code: 0 on
//! success, 1 when decoding fails, 2 for usage, input or configuration errors.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Deserialize;
use serde_json::json;

use crate::analysis::{
    bound_chain, falsely_decodable_stats, EvaluationCode, StatsMode, ENUMERATION_BUDGET,
};
use crate::codebook::{cp_encode, grs_encode, rs_encode_dim, to_complex, CodeParams, ComplexWord, FieldCodeword};
use crate::error::Error;
use crate::harness::{run_table, write_csv, Baseline, ExperimentConfig};
use crate::list::{cp_list_decode_with, gs_params, ListBackend, ListOptions, ListReport};
use crate::poly::Polynomial;
use crate::subspace::{
    chordal_distance, code_min_subspace_distance, cp_codebook_subspaces, subspace_distance, Subspace,
};
use crate::unique::{cp_decode_with, DecodeReport, Preprocessing};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DECODE_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "cpcode", version, about = "Character-polynomial codes: encode, decode, analyse, simulate")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct CodeArgs {
    /// Field order (prime or prime power).
    #[arg(long)]
    q: u32,
    /// Message degree bound.
    #[arg(long)]
    k: usize,
}

impl CodeArgs {
    fn params(&self) -> Result<CodeParams, Error> {
        CodeParams::new(self.q, self.k)
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum CodeKind {
    Cp,
    Rs,
    Grs,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum BackendArg {
    Auto,
    Interpolation,
    Covering,
}

impl From<BackendArg> for ListBackend {
    fn from(b: BackendArg) -> Self {
        match b {
            BackendArg::Auto => ListBackend::Auto,
            BackendArg::Interpolation => ListBackend::Interpolation,
            BackendArg::Covering => ListBackend::ErasureCovering,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Encode message coefficients as a CP, RS or GRS codeword (JSON).
    Encode {
        #[command(flatten)]
        code: CodeArgs,
        /// Coefficients, constant term first.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        coeffs: Vec<i64>,
        #[arg(long, value_enum, default_value = "cp")]
        kind: CodeKind,
        /// RS dimension (defaults to k + 1 so that any CP message fits).
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Unique decoding of a received word.
    Decode {
        #[command(flatten)]
        code: CodeArgs,
        /// JSON file with the received word; `-` reads standard input.
        #[arg(long, default_value = "-")]
        input: PathBuf,
        /// Decode phi(m) directly as an RS word of dimension k + 1.
        #[arg(long)]
        unscaled: bool,
    },
    /// List decoding of a received word.
    ListDecode {
        #[command(flatten)]
        code: CodeArgs,
        /// JSON file with the received word; `-` reads standard input
        #[arg(long, default_value = "-")]
        input: PathBuf,
        /// Interpolation multiplicity.
        #[arg(long, default_value_t = 1)]
        s: usize,
        #[arg(long, value_enum, default_value = "auto")]
        backend: BackendArg,
        /// Decode in a larger GRS code before filtering to the message space.
        #[arg(long)]
        ambient_dim: Option<usize>,
    },
    /// Minimum distance by exhaustive enumeration.
    Mindist {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value = "cp")]
        kind: CodeKind,
        #[arg(long, default_value_t = ENUMERATION_BUDGET)]
        budget: u128,
    },
    /// List-size bounds and measured falsely-decodable counts as CSV.
    Bounds {
        /// Block length; only q - 1 is accepted
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        code: CodeArgs,
        /// Error weight.
        #[arg(long)]
        w: usize,
        /// Multiplicity fixing the radius t_s.
        #[arg(long, default_value_t = 1)]
        s: usize,
        /// Samples used when exhaustive enumeration exceeds its budget.
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long, env = "CPCODE_SEED", default_value_t = crate::harness::DEFAULT_SEED)]
        seed: u64,
    },
    /// Monte Carlo list-size table.
    Simulate {
        /// JSON configuration; flags override its values.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Comma-separated primes q >= 7
        #[arg(long, value_delimiter = ',')]
        primes: Option<Vec<u32>>,
        /// Messages drawn per q
        #[arg(long)]
        messages: Option<usize>,
        /// Trials per message
        #[arg(long)]
        trials: Option<usize>,
        /// analysis-consistent, own-radius or scaled
        #[arg(long)]
        baseline: Option<String>,
        #[arg(long, value_enum)]
        backend: Option<BackendArg>,
        #[arg(long, env = "CPCODE_SEED")]
        seed: Option<u64>,
        /// Worker threads; 0 uses all cores
        #[arg(long)]
        threads: Option<usize>,
        /// Append the extra per-path columns.
        #[arg(long)]
        detailed: bool,
        /// Write the CSV here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Subspace distances.
    #[command(subcommand)]
    Subspace(SubspaceCommand),
}

#[derive(Subcommand, Debug)]
enum SubspaceCommand {
    /// Chordal and subspace distance between two spans given as JSON
    /// `{"a": [[[re, im], ...], ...], "b": ...}`.
    Distance {
        #[arg(long, default_value = "-")]
        input: PathBuf,
    },
    /// Minimum subspace distance of the CP codebook viewed as lines.
    Codebook {
        #[command(flatten)]
        code: CodeArgs,
    },
}

/// Failure carrying its exit code.
struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::DecodingFailure(_) => EXIT_DECODE_FAILURE,
            _ => EXIT_USAGE,
        };
        Failure(code, e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure(EXIT_USAGE, msg.into())
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| usage(format!("reading stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| usage(format!("reading {}: {e}", path.display())))
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum WordJson {
    Field(Vec<u32>),
    Complex(Vec<Complex64>),
    Wrapped { word: Box<WordJson> },
}

/// A received word as a complex vector; integer words are mapped through the character.
fn parse_word(text: &str, params: &CodeParams) -> Result<ComplexWord, Failure> {
    let parsed: WordJson =
        serde_json::from_str(text).map_err(|e| usage(format!("received word: {e}")))?;
    let mut w = parsed;
    loop {
        match w {
            WordJson::Wrapped { word } => w = *word,
            WordJson::Complex(v) => return Ok(ComplexWord(v)),
            WordJson::Field(v) => {
                let fw = FieldCodeword(v);
                fw.check(params)?;
                return Ok(to_complex(&fw, params));
            }
        }
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<String, Failure> {
    serde_json::to_string(v).map_err(|e| Failure(EXIT_USAGE, format!("json output: {e}")))
}

fn line(out: &mut dyn Write, s: &str) -> Result<(), Failure> {
    writeln!(out, "{s}").map_err(|e| usage(format!("writing output: {e}")))
}

fn cmd_encode(code: CodeArgs, coeffs: &[i64], kind: CodeKind, dim: Option<usize>, out: &mut dyn Write) -> Result<(), Failure> {
    let params = code.params()?;
    let f = Polynomial::from_ints(params.field(), coeffs);
    let word = match kind {
        CodeKind::Cp => json!(cp_encode(&f, &params)?),
        CodeKind::Rs => json!(rs_encode_dim(&f, &params, dim.unwrap_or(params.k() + 1))?),
        CodeKind::Grs => json!(grs_encode(&f, &params)?),
    };
    let kind = format!("{kind:?}").to_lowercase();
    line(out, &to_json(&json!({"kind": kind, "q": code.q, "k": code.k, "word": word}))?)
}

fn cmd_decode(code: CodeArgs, input: &Path, unscaled: bool, out: &mut dyn Write) -> Result<(), Failure> {
    let params = code.params()?;
    let word = parse_word(&read_input(input)?, &params)?;
    let pre = if unscaled { Preprocessing::Unscaled } else { Preprocessing::Scaled };
    let result = cp_decode_with(&word, &params, pre);
    let report = DecodeReport::from_result(&result);
    line(out, &to_json(&report)?)?;
    result.map(|_| ()).map_err(Failure::from)
}

fn cmd_list_decode(
    code: CodeArgs,
    input: &Path,
    s: usize,
    backend: BackendArg,
    ambient_dim: Option<usize>,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let params = code.params()?;
    let word = parse_word(&read_input(input)?, &params)?;
    let opts = ListOptions { backend: backend.into(), ambient_dim };
    let res = cp_list_decode_with(&word, s, &params, &opts)?;
    line(out, &to_json(&ListReport::from(&res))?)?;
    if res.list.is_empty() {
        return Err(Failure(EXIT_DECODE_FAILURE, "no codeword within the decoding radius".into()));
    }
    Ok(())
}

fn cmd_mindist(code: CodeArgs, kind: CodeKind, budget: u128, out: &mut dyn Write) -> Result<(), Failure> {
    let params = code.params()?;
    let c = match kind {
        CodeKind::Cp => EvaluationCode::cp_code(&params),
        CodeKind::Rs => EvaluationCode::rs(&params, params.k()),
        CodeKind::Grs => EvaluationCode::grs(&params),
    };
    line(out, &c.min_distance(budget)?.to_string())
}

#[allow(clippy::too_many_arguments)]
fn cmd_bounds(
    n: Option<usize>,
    code: CodeArgs,
    w: usize,
    s: usize,
    samples: u64,
    seed: u64,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), Failure> {
    let params = code.params()?;
    let n = n.unwrap_or(params.n());
    if n != params.n() {
        return Err(usage(format!("n must equal q - 1 = {} for the full-length code", params.n())));
    }
    let dim = params.message_dim();
    let t = gs_params(n, dim, s)?.t;
    if t < 0 {
        return Err(usage(format!("radius t_s = {t} is negative for s = {s}")));
    }
    let t = t as usize;
    let chain = bound_chain(w, t, n, dim, code.q)?;
    let cp = EvaluationCode::cp_code(&params);
    let stats = match falsely_decodable_stats(w, t, &cp, StatsMode::Exact) {
        Err(Error::BudgetExceeded { .. }) => falsely_decodable_stats(w, t, &cp, StatsMode::Sampled { samples, seed }),
        other => other,
    };
    let (d, l_bar, exact) = match stats {
        Ok(st) => (
            st.d_exact.map_or_else(|| st.d.to_string(), |x| x.to_string()),
            st.l_bar.to_string(),
            st.exact.to_string(),
        ),
        Err(e) => {
            let _ = writeln!(err, "note: list-size statistics unavailable: {e}");
            ("NA".into(), "NA".into(), "NA".into())
        }
    };
    let chern = chain.chern.map_or("NA".to_string(), |c| c.to_string());
    line(out, "q,p,n,k,w,t,D,L_bar,m1,chern,jensen,exact_flag,seed")?;
    line(
        out,
        &format!(
            "{},{},{n},{dim},{w},{t},{d},{l_bar},{},{chern},{},{exact},{seed}",
            code.q,
            params.p(),
            chain.m1,
            chain.jensen
        ),
    )
}

#[allow(clippy::too_many_arguments)]
fn cmd_simulate(
    config: Option<&Path>,
    primes: Option<Vec<u32>>,
    messages: Option<usize>,
    trials: Option<usize>,
    baseline: Option<&str>,
    backend: Option<BackendArg>,
    seed: Option<u64>,
    threads: Option<usize>,
    detailed: bool,
    output: Option<&Path>,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let mut cfg = match config {
        Some(p) => ExperimentConfig::from_json(&read_input(p)?)?,
        None => ExperimentConfig::default(),
    };
    if let Some(v) = primes {
        cfg.primes = v;
    }
    if let Some(v) = messages {
        cfg.messages_per_q = v;
    }
    if let Some(v) = trials {
        cfg.trials_per_message = v;
    }
    if let Some(v) = baseline {
        cfg.baseline = v.parse::<Baseline>()?;
    }
    if let Some(v) = backend {
        cfg.backend = v.into();
    }
    if let Some(v) = seed {
        cfg.seed = v;
    }
    if let Some(v) = threads {
        cfg.threads = v;
    }
    let rows = run_table(&cfg)?;
    match output {
        Some(p) => {
            let file = fs::File::create(p).map_err(|e| usage(format!("creating {}: {e}", p.display())))?;
            write_csv(&rows, file, detailed)?;
        }
        None => write_csv(&rows, out, detailed)?,
    }
    Ok(())
}

#[derive(Deserialize)]
struct SpanPair {
    a: Vec<Vec<Complex64>>,
    b: Vec<Vec<Complex64>>,
}

fn cmd_subspace(cmd: SubspaceCommand, out: &mut dyn Write) -> Result<(), Failure> {
    match cmd {
        SubspaceCommand::Distance { input } => {
            let pair: SpanPair = serde_json::from_str(&read_input(&input)?)
                .map_err(|e| usage(format!("subspace input: {e}")))?;
            let ambient = pair.a.first().or(pair.b.first()).map_or(0, |r| r.len());
            let a = Subspace::span(&pair.a, ambient)?;
            let b = Subspace::span(&pair.b, ambient)?;
            let v = json!({
                "dim_a": a.dim(),
                "dim_b": b.dim(),
                "chordal": chordal_distance(&a, &b)?,
                "subspace": subspace_distance(&a, &b)?,
            });
            line(out, &to_json(&v)?)
        }
        SubspaceCommand::Codebook { code } => {
            let params = code.params()?;
            let book = cp_codebook_subspaces(&params)?;
            let v = json!({
                "codewords": book.len(),
                "min_subspace_distance": code_min_subspace_distance(&book)?,
            });
            line(out, &to_json(&v)?)
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    match cli.command {
        Command::Encode { code, coeffs, kind, dim } => cmd_encode(code, &coeffs, kind, dim, out),
        Command::Decode { code, input, unscaled } => cmd_decode(code, &input, unscaled, out),
        Command::ListDecode { code, input, s, backend, ambient_dim } => {
            cmd_list_decode(code, &input, s, backend, ambient_dim, out)
        }
        Command::Mindist { code, kind, budget } => cmd_mindist(code, kind, budget, out),
        Command::Bounds { n, code, w, s, samples, seed } => cmd_bounds(n, code, w, s, samples, seed, out, err),
        Command::Simulate { config, primes, messages, trials, baseline, backend, seed, threads, detailed, output } => {
            cmd_simulate(
                config.as_deref(),
                primes,
                messages,
                trials,
                baseline.as_deref(),
                backend,
                seed,
                threads,
                detailed,
                output.as_deref(),
                out,
            )
        }
        Command::Subspace(cmd) => cmd_subspace(cmd, out),
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match dispatch(cli, out, err) {
        Ok(()) => EXIT_OK,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "cpcode: {msg}");
            code
        }
    }
}
