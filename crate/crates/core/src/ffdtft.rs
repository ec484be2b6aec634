//! Discrete-time Fourier transform over GF(p).
//!
//! `X(ε^θ) = Σ_n x[n] ε^(−nθ)` for `θ ∈ [0, 2(p+1))`, with infinite sums taken
//! in the Cesàro sense. The inverse is a finite sum over the phase group:
//! `x[n] = (2(p+1))⁻¹ Σ_θ X(ε^θ) ε^(θn)`.

use crate::arith;
use crate::cesaro::{cesaro_sum_stream, CesaroResult, TermStream};
use crate::complex_field::{GlElement, PolarContext};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::prime_field::FpElement;
use crate::sequences::{Sequence, Window};

/// One spectral value; divergence is data, not an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumEntry {
    Value(GlElement),
    Divergent,
}

impl SpectrumEntry {
    pub fn value(self) -> Option<GlElement> {
        match self {
            SpectrumEntry::Value(v) => Some(v),
            SpectrumEntry::Divergent => None,
        }
    }
}

/// `X(ε^θ)` for every phase index `θ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    values: Vec<SpectrumEntry>,
    context: PolarContext,
}

impl Spectrum {
    pub fn new(values: Vec<SpectrumEntry>, context: PolarContext) -> Result<Self> {
        let expected = context.phase_count();
        if values.len() != expected {
            return Err(Error::SpectrumLength {
                expected,
                got: values.len(),
            });
        }
        if let Some(v) = values.iter().filter_map(|e| e.value()).find(|v| v.modulus() != context.modulus()) {
            return Err(Error::ModulusMismatch {
                left: context.modulus().get(),
                right: v.modulus().get(),
            });
        }
        Ok(Spectrum { values, context })
    }

    /// `X ≡ 1`.
    pub fn plane(context: PolarContext) -> Self {
        let one = GlElement::one(context.modulus());
        Spectrum {
            values: vec![SpectrumEntry::Value(one); context.phase_count()],
            context,
        }
    }

    pub fn values(&self) -> &[SpectrumEntry] {
        &self.values
    }

    pub fn context(&self) -> &PolarContext {
        &self.context
    }

    pub fn get(&self, theta: usize) -> SpectrumEntry {
        self.values[theta]
    }

    pub fn divergent_phases(&self) -> Vec<usize> {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, e)| **e == SpectrumEntry::Divergent)
            .map(|(t, _)| t)
            .collect()
    }
}

fn check_context(seq_p: u64, ctx: &PolarContext) -> Result<()> {
    if seq_p != ctx.modulus().get() {
        return Err(Error::ModulusMismatch {
            left: seq_p,
            right: ctx.modulus().get(),
        });
    }
    Ok(())
}

/// Forward transform with the default execution policy.
pub fn fdtft(seq: &Sequence, ctx: &PolarContext) -> Result<Spectrum> {
    fdtft_with(seq, ctx, Exec::default())
}

/// Forward transform. Finite supports are summed directly; one-sided
/// periodic sequences go through the Cesàro engine on `x[n] ε^(−nθ)`.
/// Two-sided periodic sequences are rejected.
pub fn fdtft_with(seq: &Sequence, ctx: &PolarContext, exec: Exec) -> Result<Spectrum> {
    check_context(seq.modulus().get(), ctx)?;
    let one_sided = seq.one_sided()?;
    let n_phases = ctx.phase_count();
    let eps: Vec<GlElement> = (0..n_phases as i64).map(|k| ctx.epsilon_pow(k)).collect();
    let kernel = |n: i64, theta: usize| eps[(-n * theta as i64).rem_euclid(n_phases as i64) as usize];
    let term = |x: FpElement, n: i64, theta: usize| kernel(n, theta).scale(x);

    let is_finite = one_sided.period.iter().all(|v| v.is_zero());
    let t_len = one_sided.transient.len();
    // ε^(−nθ) repeats every 2(p+1) steps, so this block is a period of the product
    let block = if is_finite {
        1
    } else {
        arith::lcm(one_sided.period.len() as u64, n_phases as u64) as usize
    };
    let zero = GlElement::zero(ctx.modulus());

    let values = exec.map(n_phases, |theta| {
        if is_finite {
            let sum = one_sided
                .transient
                .iter()
                .enumerate()
                .fold(zero, |acc, (i, &x)| acc + term(x, one_sided.index_of(i), theta));
            return SpectrumEntry::Value(sum);
        }
        let transient: Vec<GlElement> = one_sided
            .transient
            .iter()
            .enumerate()
            .map(|(i, &x)| term(x, one_sided.index_of(i), theta))
            .collect();
        let period: Vec<GlElement> = (0..block)
            .map(|i| {
                let x = one_sided.period[i % one_sided.period.len()];
                term(x, one_sided.index_of(t_len + i), theta)
            })
            .collect();
        let stream = TermStream::new(transient, period).expect("block is nonempty");
        match cesaro_sum_stream(&stream) {
            CesaroResult::Convergent(v) => SpectrumEntry::Value(v),
            CesaroResult::Divergent(_) => SpectrumEntry::Divergent,
        }
    });
    Spectrum::new(values, *ctx)
}

/// `A / (1 − a ε^(−θ))`, divergent where `a ε^(−θ) = 1`. `A = 0` gives the
/// zero spectrum.
pub fn fdtft_closed_form_exponential(
    amplitude: FpElement,
    ratio: FpElement,
    ctx: &PolarContext,
) -> Result<Spectrum> {
    check_context(amplitude.modulus().get(), ctx)?;
    check_context(ratio.modulus().get(), ctx)?;
    if ratio.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let p = ctx.modulus();
    let one = GlElement::one(p);
    let values = (0..ctx.phase_count() as i64)
        .map(|theta| {
            if amplitude.is_zero() {
                return SpectrumEntry::Value(GlElement::zero(p));
            }
            let w = ctx.epsilon_pow(-theta).scale(ratio);
            match (one - w).inv() {
                Ok(d) => SpectrumEntry::Value(d.scale(amplitude)),
                Err(_) => SpectrumEntry::Divergent,
            }
        })
        .collect();
    Spectrum::new(values, *ctx)
}

/// `Σ_θ ε^(θk)`: `2(p+1)` when `k ≡ 0 (mod 2(p+1))`, zero otherwise.
pub fn orthogonality_sum(k: i64, ctx: &PolarContext) -> GlElement {
    (0..ctx.phase_count() as i64)
        .map(|theta| ctx.epsilon_pow(theta * k))
        .fold(GlElement::zero(ctx.modulus()), |a, b| a + b)
}

pub fn inverse_fdtft(spectrum: &Spectrum) -> Result<Window> {
    inverse_fdtft_with(spectrum, Exec::default())
}

/// Recovers `x[n]` on the window `[0, 2(p+1))`. Sequences supported wider
/// than one window come back periodized.
pub fn inverse_fdtft_with(spectrum: &Spectrum, exec: Exec) -> Result<Window> {
    let ctx = spectrum.context();
    let n_phases = ctx.phase_count();
    let values: Vec<GlElement> = spectrum
        .values
        .iter()
        .enumerate()
        .map(|(theta, e)| e.value().ok_or(Error::DivergentSpectrum(theta)))
        .collect::<Result<_>>()?;
    let p = ctx.modulus();
    // 2(p+1) ≡ 2 (mod p)
    let norm = p.from_u64(n_phases as u64).inv()?;
    let eps: Vec<GlElement> = (0..n_phases as i64).map(|k| ctx.epsilon_pow(k)).collect();
    let out = exec.try_map(n_phases, |n| {
        let sum = values
            .iter()
            .enumerate()
            .fold(GlElement::zero(p), |acc, (theta, &x)| acc + x * eps[theta * n % n_phases]);
        let v = sum.scale(norm);
        if v.is_real() {
            Ok(v.re())
        } else {
            Err(Error::NonRealResult(n))
        }
    })?;
    Window::new(0, out)
}
