//! FIR and IIR filtering of GF(p) sequences.
//!
//! IIR filters are described by their impulse response as a sum of right
//! exponentials `Σ A_i a_i^n u[n]`, whose spectra have the closed form
//! `Σ A_i / (1 − a_i ε^(−θ))`.

use crate::arith;
use crate::complex_field::{GlElement, PolarContext};
use crate::error::{Error, Result};
use crate::ffdtft::{Spectrum, SpectrumEntry};
use crate::ffft::{convolve_via_transform, FfftPlan};
use crate::prime_field::{FpElement, PrimeModulus};
use crate::sequences::{Sequence, Window};

fn same_modulus(p: PrimeModulus, other: PrimeModulus) -> Result<()> {
    if p == other {
        Ok(())
    } else {
        Err(Error::ModulusMismatch {
            left: p.get(),
            right: other.get(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FirFilter {
    taps: Vec<FpElement>,
}

impl FirFilter {
    pub fn new(taps: Vec<FpElement>) -> Result<Self> {
        let first = taps.first().ok_or(Error::Empty("taps"))?;
        for t in &taps {
            same_modulus(first.modulus(), t.modulus())?;
        }
        Ok(FirFilter { taps })
    }

    pub fn taps(&self) -> &[FpElement] {
        &self.taps
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.taps[0].modulus()
    }

    /// Linear convolution `y[n] = Σ h[k] x[n−k]`; the output starts where
    /// the input does and has `len(h) + len(x) − 1` samples.
    pub fn apply_time(&self, x: &Window) -> Result<Window> {
        same_modulus(self.modulus(), x.modulus())?;
        let len = self.taps.len() + x.len() - 1;
        let mut y = vec![self.modulus().zero(); len];
        for (k, &h) in self.taps.iter().enumerate() {
            for (i, &v) in x.values.iter().enumerate() {
                y[k + i] = y[k + i] + h * v;
            }
        }
        Window::new(x.start, y)
    }

    /// Same output as [`apply_time`](Self::apply_time), computed as a cyclic
    /// convolution through the complex-kernel transform. The plan must be at
    /// least as long as the linear convolution.
    pub fn apply_ffft(&self, x: &Window, plan: &FfftPlan) -> Result<Window> {
        same_modulus(self.modulus(), x.modulus())?;
        same_modulus(self.modulus(), plan.field().prime())?;
        let needed = self.taps.len() + x.len() - 1;
        let n = plan.len();
        if needed > n {
            return Err(Error::PlanTooShort { needed, n });
        }
        let pad = |v: &[FpElement]| {
            let mut out: Vec<_> = v.iter().map(|e| plan.lift(e.value() as i64)).collect();
            out.resize(n, plan.lift(0));
            out
        };
        let y = convolve_via_transform(&pad(&self.taps), &pad(&x.values), plan)?;
        let p = self.modulus();
        let values = y[..needed]
            .iter()
            .enumerate()
            .map(|(i, v)| v.as_prime().map(|c| p.from_u64(c)).ok_or(Error::NonRealResult(i)))
            .collect::<Result<Vec<_>>>()?;
        Window::new(x.start, values)
    }
}

/// Impulse response `h[n] = Σ A_i a_i^n u[n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IirFilter {
    modulus: PrimeModulus,
    poles: Vec<(FpElement, FpElement)>,
}

impl IirFilter {
    /// `poles` are `(A, a)` pairs; every `a` must be nonzero.
    pub fn new(modulus: PrimeModulus, poles: Vec<(FpElement, FpElement)>) -> Result<Self> {
        for &(amp, a) in &poles {
            same_modulus(modulus, amp.modulus())?;
            same_modulus(modulus, a.modulus())?;
            if a.is_zero() {
                return Err(Error::ZeroArgument);
            }
        }
        Ok(IirFilter { modulus, poles })
    }

    pub fn poles(&self) -> &[(FpElement, FpElement)] {
        &self.poles
    }

    /// Terms with the same pole merged and vanishing amplitudes dropped,
    /// ordered by pole.
    pub fn combined_poles(&self) -> Vec<(FpElement, FpElement)> {
        let mut merged: Vec<(FpElement, FpElement)> = Vec::new();
        for &(amp, a) in &self.poles {
            match merged.iter_mut().find(|(_, b)| *b == a) {
                Some(entry) => entry.0 = entry.0 + amp,
                None => merged.push((amp, a)),
            }
        }
        merged.retain(|(amp, _)| !amp.is_zero());
        merged.sort_by_key(|(_, a)| a.value());
        merged
    }

    /// `h[n]` as a right-sided periodic sequence starting at 0.
    pub fn impulse_response(&self) -> Sequence {
        let poles = self.combined_poles();
        let period = poles.iter().fold(1u64, |acc, (_, a)| {
            arith::lcm(acc, a.multiplicative_order().expect("nonzero pole"))
        });
        let block = (0..period)
            .map(|n| {
                poles
                    .iter()
                    .fold(self.modulus.zero(), |acc, &(amp, a)| acc + amp * a.pow_u(n))
            })
            .collect();
        Sequence::right_periodic(self.modulus, 0, Vec::new(), block).expect("nonempty block")
    }

    /// The first `len` output samples, starting at the input's first index.
    pub fn apply(&self, x: &Window, len: usize) -> Result<Window> {
        same_modulus(self.modulus, x.modulus())?;
        let h = self.impulse_response();
        let values = (0..len as i64)
            .map(|n| {
                x.values
                    .iter()
                    .enumerate()
                    .fold(self.modulus.zero(), |acc, (k, &v)| acc + v * h.eval(n - k as i64))
            })
            .collect();
        Window::new(x.start, values)
    }

    /// `Σ A_i / (1 − a_i ε^(−θ))`, divergent wherever a surviving pole hits
    /// `a_i ε^(−θ) = 1`.
    pub fn frequency_response(&self, ctx: &PolarContext) -> Result<Spectrum> {
        same_modulus(self.modulus, ctx.modulus())?;
        let poles = self.combined_poles();
        let one = GlElement::one(self.modulus);
        let values = (0..ctx.phase_count() as i64)
            .map(|theta| {
                let eps = ctx.epsilon_pow(-theta);
                poles
                    .iter()
                    .try_fold(GlElement::zero(self.modulus), |acc, &(amp, a)| {
                        let d = (one - eps.scale(a)).inv().ok()?;
                        Some(acc + d.scale(amp))
                    })
                    .map_or(SpectrumEntry::Divergent, SpectrumEntry::Value)
            })
            .collect();
        Spectrum::new(values, *ctx)
    }
}
