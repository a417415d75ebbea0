//! The `rsic` command line.
//!
//! Exit status: 0 on success, 1 on I/O failure, 2 for bad usage or code
//! parameters, 3 for malformed input data, 4 when `decode --strict` meets
//! an uncorrectable block.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::bench::{report_to_json, run_sweep, TrialConfig};
use crate::decode::Decoder;
use crate::stream::{
    build_code, corrupt_stream, decode_stream, encode_payload, format_symbols, parse_symbols,
    read_stream, write_stream, Format, StreamError,
};

#[derive(Debug, Parser)]
#[command(name = "rsic", version, about = "Reed-Solomon block codec with interpolation and PGZ decoders")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Encode a symbol file into RS codeword blocks.
    Encode(EncodeArgs),
    /// Decode a block stream back to the payload symbols.
    Decode(DecodeArgs),
    /// Add a fixed number of symbol errors to every block.
    Corrupt(CorruptArgs),
    /// Compare the decoders' operation counts over t = 0..=tau.
    Compare(CompareArgs),
}

#[derive(Debug, Args)]
pub struct Io {
    /// Input path, `-` for stdin.
    #[arg(long = "in", default_value = "-")]
    pub input: PathBuf,
    /// Output path, `-` for stdout.
    #[arg(long = "out", default_value = "-")]
    pub output: PathBuf,
}

#[derive(Debug, Args)]
pub struct EncodeArgs {
    /// Field order: a prime or a power of two.
    #[arg(long)]
    pub q: u32,
    /// Message symbols per block.
    #[arg(long)]
    pub k: usize,
    /// Primitive element; defaults to the smallest one.
    #[arg(long)]
    pub alpha: Option<u32>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[command(flatten)]
    pub io: Io,
}

#[derive(Debug, Args)]
pub struct DecodeArgs {
    /// interp, interp-pos or pgz.
    #[arg(long, default_value = "interp")]
    pub decoder: Decoder,
    /// Write per-block JSON lines here.
    #[arg(long)]
    pub stats: Option<PathBuf>,
    /// Fail if any block is uncorrectable.
    #[arg(long)]
    pub strict: bool,
    #[command(flatten)]
    pub io: Io,
}

#[derive(Debug, Args)]
pub struct CorruptArgs {
    /// Exact number of symbol errors per block.
    #[arg(long)]
    pub errors: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub io: Io,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[arg(long)]
    pub q: u32,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub alpha: Option<u32>,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Also measure wall time (makes the output nondeterministic).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Data(String),
    #[error("{0} block(s) could not be corrected")]
    Uncorrectable(usize),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => 1,
            CliError::Usage(_) => 2,
            CliError::Data(_) => 3,
            CliError::Uncorrectable(_) => 4,
        }
    }
}

impl From<StreamError> for CliError {
    fn from(e: StreamError) -> Self {
        match e {
            StreamError::Parameter(m) => CliError::Usage(m),
            StreamError::Data(m) => CliError::Data(m),
        }
    }
}

fn is_std(path: &Path) -> bool {
    path.as_os_str() == "-"
}

fn read_input(path: &Path) -> Result<Vec<u8>, CliError> {
    let io_err = |source| CliError::Io {
        path: path.display().to_string(),
        source,
    };
    if is_std(path) {
        let mut buf = Vec::new();
        io::stdin().read_to_end(&mut buf).map_err(io_err)?;
        Ok(buf)
    } else {
        fs::read(path).map_err(io_err)
    }
}

fn write_output(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let io_err = |source| CliError::Io {
        path: path.display().to_string(),
        source,
    };
    if is_std(path) {
        let mut out = io::stdout().lock();
        out.write_all(bytes).and_then(|_| out.flush()).map_err(io_err)
    } else {
        fs::write(path, bytes).map_err(io_err)
    }
}

pub fn encode(args: &EncodeArgs) -> Result<(), CliError> {
    let code = build_code(args.q, args.k, args.alpha)?;
    if args.format == Format::Binary && args.q > 256 {
        return Err(CliError::Usage(format!("binary format needs q <= 256, got {}", args.q)));
    }
    let input = read_input(&args.io.input)?;
    let payload = parse_symbols(&input, args.format, args.q)?;
    let stream = encode_payload(&code, args.format, &payload)?;
    write_output(&args.io.output, &write_stream(&stream))
}

pub fn decode(args: &DecodeArgs) -> Result<(), CliError> {
    let input = read_input(&args.io.input)?;
    let stream = read_stream(&input)?;
    let (payload, stats) = decode_stream(&stream, args.decoder)?;
    if let Some(path) = &args.stats {
        let lines: String = stats.iter().map(|s| s.to_json() + "\n").collect();
        write_output(path, lines.as_bytes())?;
    }
    let failed = stats.iter().filter(|s| s.outcome.is_err()).count();
    if args.strict && failed > 0 {
        return Err(CliError::Uncorrectable(failed));
    }
    write_output(&args.io.output, &format_symbols(&payload, stream.format))
}

pub fn corrupt(args: &CorruptArgs) -> Result<(), CliError> {
    let input = read_input(&args.io.input)?;
    let stream = read_stream(&input)?;
    let corrupted = corrupt_stream(&stream, args.errors, args.seed)?;
    if args.errors == 0 {
        return write_output(&args.io.output, &input);
    }
    write_output(&args.io.output, &write_stream(&corrupted))
}

pub fn compare(args: &CompareArgs) -> Result<(), CliError> {
    let code = build_code(args.q, args.k, args.alpha)?;
    let mut cfg = TrialConfig::full_sweep(code, args.trials, args.seed);
    cfg.measure_time = args.timing;
    let report = run_sweep(&cfg).map_err(|e| CliError::Usage(e.to_string()))?;
    write_output(Path::new("-"), report_to_json(&report).as_bytes())
}

pub fn execute(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Encode(a) => encode(a),
        Command::Decode(a) => decode(a),
        Command::Corrupt(a) => corrupt(a),
        Command::Compare(a) => compare(a),
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("rsic: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn bad_parameters_exit_2() {
        assert_eq!(run(["rsic", "compare", "--q", "9", "--k", "2"]), 2);
        assert_eq!(run(["rsic", "compare", "--q", "7", "--k", "6"]), 2);
        assert_eq!(run(["rsic", "compare", "--q", "7", "--k", "2", "--alpha", "2"]), 2);
        assert_eq!(run(["rsic", "decode", "--decoder", "bm"]), 2);
        assert_eq!(run(["rsic", "bogus"]), 2);
    }
}
