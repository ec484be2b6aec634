//! Reference computations with known results, used by the `examples`
//! subcommand.

use galois_dsp::cesaro::{partial_sum_profile, TermStream};
use galois_dsp::ffdtft::fdtft_closed_form_exponential;
use galois_dsp::{
    cesaro_sum_sequence, fdtft, inverse_fdtft, GlElement, PolarContext, PrimeModulus, Sequence, Spectrum,
    SpectrumEntry,
};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub expected: Value,
    pub got: Value,
    pub pass: bool,
}

fn check(name: &'static str, expected: Value, got: Value) -> Check {
    Check {
        name,
        pass: expected == got,
        expected,
        got,
    }
}

fn failed(name: &'static str, expected: Value, e: impl std::fmt::Display) -> Check {
    Check {
        name,
        expected,
        got: json!({ "error": e.to_string() }),
        pass: false,
    }
}

pub fn run_all() -> Vec<Check> {
    vec![periods(), cesaro_powers_of_3(), exponential_spectrum(), plane_spectrum_inverse()]
}

fn gf(p: u64) -> PrimeModulus {
    PrimeModulus::new(p).expect("odd prime")
}

/// Periods of 3^n over GF(7), 1^n over GF(5), and the GF(3) run 000111222.
pub fn periods() -> Check {
    let expected = json!([6, 1, 9]);
    let blocks = |p: u64, v: &[i64]| v.iter().map(|&x| gf(p).elem(x)).collect::<Vec<_>>();
    let seqs = [
        Sequence::exponential(gf(7).one(), gf(7).elem(3)),
        Sequence::exponential(gf(5).one(), gf(5).one()),
        Sequence::two_sided(gf(3), blocks(3, &[0, 0, 0, 1, 1, 1, 2, 2, 2]), 0),
    ];
    let mut got = Vec::new();
    for s in seqs {
        match s {
            Ok(s) => got.push(json!(s.period())),
            Err(e) => return failed("periods", expected, e),
        }
    }
    check("periods", expected, json!(got))
}

/// Cesàro sum of 3^n over GF(7): partial sums 1 4 6 5 2 0, sigma = 3.
pub fn cesaro_powers_of_3() -> Check {
    let expected = json!({ "partial_sums": [1, 4, 6, 5, 2, 0], "sigma": 3 });
    let p = gf(7);
    let run = || -> galois_dsp::Result<Value> {
        let seq = Sequence::exponential(p.one(), p.elem(3))?;
        let os = seq.one_sided()?;
        let sums = partial_sum_profile(&TermStream::new(os.transient, os.period)?)
            .ok()
            .map(|pr| pr.period_sums.iter().map(|s| s.value()).collect::<Vec<_>>());
        let sigma = cesaro_sum_sequence(&seq)?.convergent().map(|s| s.value());
        Ok(json!({ "partial_sums": sums, "sigma": sigma }))
    };
    match run() {
        Ok(got) => check("cesaro_sum_of_powers_of_3", expected, got),
        Err(e) => failed("cesaro_sum_of_powers_of_3", expected, e),
    }
}

/// 3^n u[n] over GF(7): the summed transform matches 1/(1 − 3ε^(−θ)),
/// never diverges, and equals 1/(1 − 3) = 3 at θ = 0.
pub fn exponential_spectrum() -> Check {
    let expected = json!({ "matches_closed_form": true, "divergent_phases": [], "theta_0": [3, 0] });
    let run = || -> galois_dsp::Result<Value> {
        let p = PrimeModulus::complex(7)?;
        let ctx = PolarContext::new(p)?;
        let engine = fdtft(&Sequence::exponential(p.one(), p.elem(3))?, &ctx)?;
        let closed = fdtft_closed_form_exponential(p.one(), p.elem(3), &ctx)?;
        let theta_0 = engine.get(0).value().map(|z| json!([z.re().value(), z.im().value()]));
        Ok(json!({
            "matches_closed_form": engine == closed,
            "divergent_phases": engine.divergent_phases(),
            "theta_0": theta_0,
        }))
    };
    match run() {
        Ok(got) => check("exponential_spectrum", expected, got),
        Err(e) => failed("exponential_spectrum", expected, e),
    }
}

/// The plane spectrum X = 1 over GF(3) inverts to the Galois impulse.
pub fn plane_spectrum_inverse() -> Check {
    let expected = json!([1, 0, 0, 0, 0, 0, 0, 0]);
    let run = || -> galois_dsp::Result<Value> {
        let p = PrimeModulus::complex(3)?;
        let ctx = PolarContext::new(p)?;
        let plane = Spectrum::new(vec![SpectrumEntry::Value(GlElement::one(p)); ctx.phase_count()], ctx)?;
        Ok(json!(inverse_fdtft(&plane)?.raw()))
    };
    match run() {
        Ok(got) => check("plane_spectrum_inverse", expected, got),
        Err(e) => failed("plane_spectrum_inverse", expected, e),
    }
}
