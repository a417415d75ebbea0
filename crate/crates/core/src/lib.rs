//! Reed-Solomon codes over prime fields and `GF(2^m)`, with two decoders
//! that share the same exact linear algebra:
//!
//! * an interpolation-based decoder ([`interp`]) that finds the number of
//!   errors by an ascending rank search and recovers the codeword by one
//!   exact polynomial division, and
//! * the Peterson-Gorenstein-Zierler decoder ([`pgz`]), which finds the
//!   number of errors by a descending determinant search.
//!
//! [`oracle`] holds brute-force references for small codes and [`bench`]
//! counts the work each decoder does as a function of the error weight.
//!
//! ```
//! use rsic::{Decoder, Fe, Field, RsCode, Word};
//!
//! let code = RsCode::new(Field::prime(7)?.with_alpha(Fe(5))?, 2)?;
//! let sent = code.encode(&[Fe(5), Fe(6)])?;
//! assert_eq!(sent.to_string(), "401632");
//!
//! let received = Word::from_digits(code.field(), "421632")?;
//! for decoder in Decoder::ALL {
//!     let out = decoder.decode(&code, &received).unwrap();
//!     assert_eq!(out.codeword, sent);
//! }
//! # Ok::<(), rsic::Error>(())
//! ```

pub mod bench;
pub mod cli;
pub mod code;
pub mod decode;
pub mod error;
pub mod gf;
pub mod interp;
pub mod matrix;
pub mod oracle;
pub mod pgz;
pub mod poly;
pub mod stream;

pub use code::{RsCode, Syndromes, Word};
pub use decode::{DecodeError, DecodeOutcome, DecodeTrace, Decoder, ErrorCount};
pub use error::{Error, Result};
pub use gf::{Fe, Field, FieldKind};
pub use matrix::{Matrix, Solution};
pub use poly::{Degree, Poly};
