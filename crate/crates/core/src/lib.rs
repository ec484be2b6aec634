//! Signal processing over finite fields.
//!
//! Arithmetic in GF(p), the Galoisian integers GL(p) = GF(p)[j] for
//! p ≡ 3 (mod 4) with their polar form, extension fields GF(p^k),
//! Cesàro summation of eventually periodic series, the finite-field
//! discrete-time Fourier transform (FFDTFT) and its inverse, the
//! complex-kernel finite-field Fourier transform (FFFT), and FIR/IIR
//! filtering built on top of them.
//!
//! ```
//! use galois_dsp::{cesaro_sum_sequence, PrimeModulus, Sequence};
//!
//! let p = PrimeModulus::new(7).unwrap();
//! let seq = Sequence::exponential(p.one(), p.elem(3)).unwrap();
//! let sigma = cesaro_sum_sequence(&seq).unwrap().convergent().unwrap();
//! assert_eq!(sigma, p.elem(3));
//! ```
//!
//! With the default `parallel` feature, transforms that take an [`Exec`]
//! spread independent outputs over rayon's pool. Building with
//! `--no-default-features` keeps everything on the calling thread.

pub mod arith;
pub mod cesaro;
pub mod complex_field;
pub mod error;
pub mod exec;
pub mod extension_field;
pub mod ffdtft;
pub mod ffft;
pub mod filters;
pub mod prime_field;
pub mod sequences;

pub use cesaro::{cesaro_sum, cesaro_sum_sequence, cesaro_sum_stream, CesaroResult, Divergence, TermStream};
pub use complex_field::{GlElement, PolarContext, PolarForm};
pub use error::{Error, Result};
pub use exec::Exec;
pub use extension_field::{ComplexExt, Embedding, ExtElement, ExtField};
pub use ffdtft::{fdtft, fdtft_with, inverse_fdtft, inverse_fdtft_with, Spectrum, SpectrumEntry};
pub use ffft::{ffft, ffft_with, iffft, iffft_with, length_catalogue, FfftPlan, LengthClass};
pub use filters::{FirFilter, IirFilter};
pub use prime_field::{FpElement, PrimeModulus};
pub use sequences::{Sequence, SequenceSpec, Window};
