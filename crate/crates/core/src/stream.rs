//! Block framing for symbol streams.
//!
//! An encoded stream is a header followed by `n`-symbol codeword blocks. The
//! payload is split into blocks of `k` symbols, the last one zero-padded, and
//! the header records the original payload length so that padding can be
//! stripped after decoding.
//!
//! Binary layout (little endian), one byte per symbol, `q <= 256` only:
//!
//! ```text
//! magic "RSIC" (4) | version u8 | q u32 | k u32 | alpha u32 | payload_len u64
//! ```
//!
//! Text layout, symbols in decimal:
//!
//! ```text
//! RSIC 1 <q> <k> <alpha> <payload_len>
//! <n symbols separated by spaces>      one line per block
//! ```

use std::fmt::Write as _;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::bench::random_error_pattern;
use crate::code::RsCode;
use crate::decode::{DecodeError, Decoder};
use crate::gf::{Fe, Field};

pub const MAGIC: &[u8; 4] = b"RSIC";
pub const VERSION: u8 = 1;
/// Size of the binary header in bytes.
pub const HEADER_LEN: usize = 25;

#[derive(Debug, Error)]
pub enum StreamError {
    /// Bad code or command parameters.
    #[error("{0}")]
    Parameter(String),
    /// Malformed input data.
    #[error("{0}")]
    Data(String),
}

type Result<T> = std::result::Result<T, StreamError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Format {
    Text,
    #[value(name = "bin")]
    Binary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StreamHeader {
    pub q: u32,
    pub k: u32,
    pub alpha: u32,
    pub payload_len: u64,
}

impl StreamHeader {
    pub fn to_bytes(&self) -> [u8; HEADER_LEN] {
        let mut out = [0u8; HEADER_LEN];
        out[..4].copy_from_slice(MAGIC);
        out[4] = VERSION;
        out[5..9].copy_from_slice(&self.q.to_le_bytes());
        out[9..13].copy_from_slice(&self.k.to_le_bytes());
        out[13..17].copy_from_slice(&self.alpha.to_le_bytes());
        out[17..25].copy_from_slice(&self.payload_len.to_le_bytes());
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<StreamHeader> {
        if bytes.len() < HEADER_LEN || &bytes[..4] != MAGIC {
            return Err(StreamError::Data("missing RSIC header".into()));
        }
        if bytes[4] != VERSION {
            return Err(StreamError::Data(format!("unsupported stream version {}", bytes[4])));
        }
        let u32_at = |i: usize| u32::from_le_bytes(bytes[i..i + 4].try_into().unwrap());
        Ok(StreamHeader {
            q: u32_at(5),
            k: u32_at(9),
            alpha: u32_at(13),
            payload_len: u64::from_le_bytes(bytes[17..25].try_into().unwrap()),
        })
    }

    /// The code this header describes.
    pub fn code(&self) -> Result<RsCode> {
        build_code(self.q, self.k as usize, Some(self.alpha))
    }
}

/// Builds `RS_{q,alpha}(k)`, defaulting `alpha` to the smallest primitive
/// element.
pub fn build_code(q: u32, k: usize, alpha: Option<u32>) -> Result<RsCode> {
    let param = |e: crate::Error| StreamError::Parameter(e.to_string());
    let mut field = Field::from_order(q).map_err(param)?;
    if let Some(a) = alpha {
        field = field.with_alpha(Fe(a)).map_err(param)?;
    }
    RsCode::new(field, k).map_err(param)
}

/// A header plus its codeword blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodedStream {
    pub header: StreamHeader,
    pub format: Format,
    pub blocks: Vec<Vec<Fe>>,
}

/// Parses a plain symbol file: decimal integers separated by whitespace, or
/// one byte per symbol.
pub fn parse_symbols(input: &[u8], format: Format, q: u32) -> Result<Vec<Fe>> {
    let values: Vec<u64> = match format {
        Format::Binary => input.iter().map(|&b| b as u64).collect(),
        Format::Text => std::str::from_utf8(input)
            .map_err(|_| StreamError::Data("text input is not UTF-8".into()))?
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u64>()
                    .map_err(|_| StreamError::Data(format!("{tok:?} is not a symbol")))
            })
            .collect::<Result<_>>()?,
    };
    values
        .into_iter()
        .map(|v| {
            if v < q as u64 {
                Ok(Fe(v as u32))
            } else {
                Err(StreamError::Data(format!("symbol {v} is not below q = {q}")))
            }
        })
        .collect()
}

/// Inverse of [`parse_symbols`]. Text output is space separated with a
/// trailing newline, or empty for no symbols.
pub fn format_symbols(symbols: &[Fe], format: Format) -> Vec<u8> {
    match format {
        Format::Binary => symbols.iter().map(|s| s.0 as u8).collect(),
        Format::Text => {
            if symbols.is_empty() {
                return Vec::new();
            }
            let mut s = join(symbols);
            s.push('\n');
            s.into_bytes()
        }
    }
}

fn join(symbols: &[Fe]) -> String {
    let mut s = String::new();
    for (i, x) in symbols.iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        write!(s, "{}", x.0).unwrap();
    }
    s
}

fn check_binary(q: u32) -> Result<()> {
    if q > 256 {
        return Err(StreamError::Parameter(format!(
            "binary format needs q <= 256, got {q}"
        )));
    }
    Ok(())
}

/// Splits `payload` into `k`-symbol blocks (zero-padding the last) and
/// encodes each.
pub fn encode_payload(code: &RsCode, format: Format, payload: &[Fe]) -> Result<EncodedStream> {
    if format == Format::Binary {
        check_binary(code.field().order())?;
    }
    let k = code.k();
    let blocks = payload
        .chunks(k)
        .map(|chunk| {
            let mut msg = chunk.to_vec();
            msg.resize(k, Fe::ZERO);
            code.encode(&msg)
                .map(|w| w.into_symbols())
                .map_err(|e| StreamError::Data(e.to_string()))
        })
        .collect::<Result<_>>()?;
    Ok(EncodedStream {
        header: StreamHeader {
            q: code.field().order(),
            k: k as u32,
            alpha: code.alpha().0,
            payload_len: payload.len() as u64,
        },
        format,
        blocks,
    })
}

pub fn write_stream(stream: &EncodedStream) -> Vec<u8> {
    let h = &stream.header;
    match stream.format {
        Format::Binary => {
            let mut out = h.to_bytes().to_vec();
            for b in &stream.blocks {
                out.extend(b.iter().map(|s| s.0 as u8));
            }
            out
        }
        Format::Text => {
            let mut out = format!("RSIC {} {} {} {} {}\n", VERSION, h.q, h.k, h.alpha, h.payload_len);
            for b in &stream.blocks {
                out.push_str(&join(b));
                out.push('\n');
            }
            out.into_bytes()
        }
    }
}

/// Parses an encoded stream, detecting text or binary layout from the byte
/// after the magic.
pub fn read_stream(bytes: &[u8]) -> Result<EncodedStream> {
    if bytes.len() < 5 || &bytes[..4] != MAGIC {
        return Err(StreamError::Data("missing RSIC header".into()));
    }
    let (header, format, body) = if bytes[4] == VERSION {
        let header = StreamHeader::from_bytes(bytes)?;
        (header, Format::Binary, &bytes[HEADER_LEN..])
    } else {
        let text = std::str::from_utf8(bytes)
            .map_err(|_| StreamError::Data("text stream is not UTF-8".into()))?;
        let (line, rest) = text.split_once('\n').unwrap_or((text, ""));
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 6 || fields[0] != "RSIC" {
            return Err(StreamError::Data("malformed text header".into()));
        }
        let num = |s: &str| {
            s.parse::<u64>()
                .map_err(|_| StreamError::Data(format!("bad header field {s:?}")))
        };
        if num(fields[1])? != VERSION as u64 {
            return Err(StreamError::Data(format!("unsupported stream version {}", fields[1])));
        }
        let narrow = |v: u64| {
            u32::try_from(v).map_err(|_| StreamError::Data(format!("header field {v} too large")))
        };
        let header = StreamHeader {
            q: narrow(num(fields[2])?)?,
            k: narrow(num(fields[3])?)?,
            alpha: narrow(num(fields[4])?)?,
            payload_len: num(fields[5])?,
        };
        (header, Format::Text, rest.as_bytes())
    };
    let code = header.code().map_err(|e| StreamError::Data(format!("bad header: {e}")))?;
    if format == Format::Binary {
        check_binary(header.q).map_err(|e| StreamError::Data(e.to_string()))?;
    }
    let symbols = parse_symbols(body, format, header.q)?;
    let n = code.n();
    if symbols.len() % n != 0 {
        return Err(StreamError::Data(format!(
            "stream body has {} symbols, not a multiple of n = {n}",
            symbols.len()
        )));
    }
    let blocks: Vec<Vec<Fe>> = symbols.chunks(n).map(<[Fe]>::to_vec).collect();
    if header.payload_len > (blocks.len() * code.k()) as u64 {
        return Err(StreamError::Data(format!(
            "payload length {} exceeds {} blocks of {} symbols",
            header.payload_len,
            blocks.len(),
            code.k()
        )));
    }
    Ok(EncodedStream {
        header,
        format,
        blocks,
    })
}

/// What happened to one block during decoding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockStat {
    pub block: usize,
    pub t: Option<usize>,
    pub outcome: std::result::Result<(), DecodeError>,
    pub rank_checks: usize,
    pub det_checks: usize,
}

impl BlockStat {
    pub fn to_json(&self) -> String {
        let t = self.t.map_or("null".to_string(), |t| t.to_string());
        let outcome = match &self.outcome {
            Ok(()) => "ok",
            Err(e) => e.name(),
        };
        format!(
            "{{\"block\":{},\"t\":{},\"outcome\":\"{}\",\"rank_checks\":{},\"det_checks\":{}}}",
            self.block, t, outcome, self.rank_checks, self.det_checks
        )
    }
}

/// Decodes every block and returns the payload with padding removed.
///
/// A block that cannot be decoded contributes the low `k` coefficients of
/// its own interpolation polynomial, i.e. the message it would carry if it
/// were error free; its stat records the failure.
pub fn decode_stream(stream: &EncodedStream, decoder: Decoder) -> Result<(Vec<Fe>, Vec<BlockStat>)> {
    let code = stream
        .header
        .code()
        .map_err(|e| StreamError::Data(format!("bad header: {e}")))?;
    let data = |e: crate::Error| StreamError::Data(e.to_string());
    let mut payload = Vec::with_capacity(stream.blocks.len() * code.k());
    let mut stats = Vec::with_capacity(stream.blocks.len());
    for (i, block) in stream.blocks.iter().enumerate() {
        let (result, trace) = decoder.decode_traced(&code, block);
        let (msg, t, outcome) = match result {
            Ok(out) => (code.message_of(&out.codeword).map_err(data)?, Some(out.t), Ok(())),
            Err(e) => {
                let g = code.interpolate(block).map_err(data)?;
                ((0..code.k()).map(|j| g.coeff(j)).collect(), None, Err(e))
            }
        };
        payload.extend(msg);
        stats.push(BlockStat {
            block: i,
            t,
            outcome,
            rank_checks: trace.rank_checks,
            det_checks: trace.det_checks,
        });
    }
    payload.truncate(stream.header.payload_len as usize);
    Ok((payload, stats))
}

/// Adds exactly `errors` symbol errors to every block, positions and values
/// drawn from a ChaCha8 stream seeded with `seed ^ block_index`.
pub fn corrupt_stream(stream: &EncodedStream, errors: usize, seed: u64) -> Result<EncodedStream> {
    let q = stream.header.q;
    let field = Field::from_order(q).map_err(|e| StreamError::Data(e.to_string()))?;
    let n = field.n();
    if errors >= n {
        return Err(StreamError::Parameter(format!(
            "cannot place {errors} errors in blocks of length {n}"
        )));
    }
    let mut out = stream.clone();
    for (i, block) in out.blocks.iter_mut().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ i as u64);
        for (pos, v) in random_error_pattern(&mut rng, n, q, errors) {
            block[pos] = field.add(block[pos], v);
        }
    }
    Ok(out)
}
