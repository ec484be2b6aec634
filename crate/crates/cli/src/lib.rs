//! Command-line front end for `galois-dsp`.
//!
//! Every subcommand prints one JSON document on stdout. Domain errors print
//! `{"code", "message"}` and exit with 1; malformed arguments or payloads
//! exit with 2.

pub mod replay;
pub mod schema;

use clap::{Parser, Subcommand};
use galois_dsp::cesaro::{cesaro_sum, partial_sum_profile, CesaroResult, Divergence, TermStream};
use galois_dsp::complex_field::{group_order, phase_order, radial_order};
use galois_dsp::ffft::{convolve_via_transform, cyclic_convolution};
use galois_dsp::{
    fdtft, ffft, iffft, inverse_fdtft, length_catalogue, ComplexExt, Error, ExtField, FfftPlan,
    FirFilter, IirFilter, PolarContext, PrimeModulus, Sequence, Window,
};
use schema::*;
use serde::de::DeserializeOwned;
use serde_json::{json, Value};
use std::io::Read;

#[derive(Debug, Parser)]
#[command(name = "galois-dsp", version, about = "Fourier analysis over finite fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Describe GF(p), GL(p) and optionally the extension used by the FFFT.
    FieldInfo {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
    },
    /// Norm and modulus of a GL(p) element given as [re, im].
    Modulus {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        z: String,
    },
    /// Polar decomposition of a nonzero GL(p) element.
    Polar {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        z: String,
    },
    /// Cesàro sum of a one-sided sequence.
    Cesaro {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        seq: String,
    },
    /// Finite-field DTFT of a sequence.
    Fdtft {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        seq: String,
    },
    /// Inverse DTFT of a spectrum of 2(p+1) samples.
    Ifdtft {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        spectrum: String,
    },
    /// Complex-kernel FFT of a vector over GF(p^r).
    Ffft {
        #[command(flatten)]
        plan: PlanArgs,
        #[arg(long)]
        input: String,
    },
    /// Inverse complex-kernel FFT.
    Iffft {
        #[command(flatten)]
        plan: PlanArgs,
        #[arg(long)]
        input: String,
    },
    /// Cyclic convolution through the transform, checked against the direct sum.
    Conv {
        #[command(flatten)]
        plan: PlanArgs,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
    /// FIR/IIR filtering: {filter, input, mode, plan?, len?}.
    Filter {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        spec: String,
    },
    /// Valid FFFT lengths, classified as classic, new or mixed.
    Lengths {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        r: u32,
        #[arg(long, default_value_t = 1)]
        m: u32,
    },
    /// Recompute the reference results and report pass/fail.
    Examples,
}

#[derive(Debug, Clone, Copy, clap::Args)]
pub struct PlanArgs {
    #[arg(long)]
    p: u64,
    #[arg(long, default_value_t = 1)]
    r: usize,
    #[arg(long, default_value_t = 1)]
    m: usize,
    #[arg(long = "N", short = 'n')]
    n: u64,
    /// Accept inputs outside GF(p^r).
    #[arg(long)]
    relaxed: bool,
}

#[derive(Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type CmdResult = std::result::Result<(Value, i32), Failure>;

/// Reads a JSON argument: a literal, `@path`, or `-` for stdin.
fn load<T: DeserializeOwned>(arg: &str, what: &str, stdin: &mut dyn Read) -> std::result::Result<T, Failure> {
    let text = if arg == "-" {
        let mut s = String::new();
        stdin
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("{what}: reading stdin: {e}")))?;
        s
    } else if let Some(path) = arg.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{what}: {path}: {e}")))?
    } else {
        arg.to_string()
    };
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{what}: {e}")))
}

pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 { (text, String::new()) } else { (String::new(), text) };
            return Outcome { code, stdout, stderr };
        }
    };
    match dispatch(cli.command, stdin) {
        Ok((v, code)) => Outcome {
            code,
            stdout: format!("{v}\n"),
            stderr: String::new(),
        },
        Err(Failure::Domain(e)) => Outcome {
            code: 1,
            stdout: format!("{}\n", json!({ "code": e.code(), "message": e.to_string() })),
            stderr: format!("error: {e}\n"),
        },
        Err(Failure::Usage(msg)) => Outcome {
            code: 2,
            stdout: format!("{}\n", json!({ "code": "invalid_input", "message": msg })),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn dispatch(cmd: Command, stdin: &mut dyn Read) -> CmdResult {
    let v = match cmd {
        Command::FieldInfo { p, r, m } => field_info(p, r, m)?,
        Command::Modulus { p, z } => {
            let p = PrimeModulus::complex(p)?;
            let z = load::<GlJson>(&z, "z", stdin)?.to_gl(p)?;
            json!({
                "p": p.get(),
                "z": gl_json(z),
                "norm": fp_json(z.quadratic_norm()),
                "modulus": fp_json(z.gl_modulus()),
            })
        }
        Command::Polar { p, z } => {
            let p = PrimeModulus::complex(p)?;
            let z = load::<GlJson>(&z, "z", stdin)?.to_gl(p)?;
            let ctx = PolarContext::new(p)?;
            let polar = ctx.to_polar(z)?;
            json!({
                "z": gl_json(z),
                "r": fp_json(polar.r),
                "theta": polar.theta,
                "context": context_json(&ctx),
            })
        }
        Command::Cesaro { p, seq } => {
            let p = PrimeModulus::new(p)?;
            let seq = load::<SequenceJson>(&seq, "seq", stdin)?.build(p)?;
            cesaro(&seq)?
        }
        Command::Fdtft { p, seq } => {
            let p = PrimeModulus::complex(p)?;
            let seq = load::<SequenceJson>(&seq, "seq", stdin)?.build(p)?;
            spectrum_json(&fdtft(&seq, &PolarContext::new(p)?)?)
        }
        Command::Ifdtft { p, spectrum } => {
            let p = PrimeModulus::complex(p)?;
            let ctx = PolarContext::new(p)?;
            let spectrum = load::<SpectrumJson>(&spectrum, "spectrum", stdin)?.build(&ctx)?;
            window_json(&inverse_fdtft(&spectrum)?)
        }
        Command::Ffft { plan, input } => {
            let built = build_plan(plan)?;
            let x = load::<Vec<ElemJson>>(&input, "input", stdin)?;
            let x = if plan.relaxed {
                x.iter().map(|e| e.to_ext(built.field().carrier())).collect()
            } else {
                let coeffs: Vec<Vec<u64>> = x.iter().map(|e| e.coeffs(built.field().prime())).collect();
                built.embed_input(&coeffs)?
            };
            let out = ffft(&x, &built)?;
            transform_json(plan, &built, &out)
        }
        Command::Iffft { plan, input } => {
            let built = build_plan(plan)?;
            let big_x = load::<Vec<ElemJson>>(&input, "input", stdin)?;
            let big_x: Vec<_> = big_x.iter().map(|e| e.to_ext(built.field().carrier())).collect();
            let out = iffft(&big_x, &built)?;
            transform_json(plan, &built, &out)
        }
        Command::Conv { plan, f, g } => {
            let built = build_plan(plan)?;
            let carrier = built.field().carrier().clone();
            let f: Vec<_> = load::<Vec<ElemJson>>(&f, "f", stdin)?.iter().map(|e| e.to_ext(&carrier)).collect();
            let g: Vec<_> = load::<Vec<ElemJson>>(&g, "g", stdin)?.iter().map(|e| e.to_ext(&carrier)).collect();
            let via = convolve_via_transform(&f, &g, &built)?;
            let direct = cyclic_convolution(&f, &g)?;
            json!({
                "plan": plan_json(plan),
                "output": via.iter().map(ext_json).collect::<Vec<_>>(),
                "matches_direct": via == direct,
            })
        }
        Command::Filter { p, spec } => {
            let p = PrimeModulus::new(p)?;
            filter(p, &load::<FilterRequest>(&spec, "spec", stdin)?)?
        }
        Command::Lengths { p, r, m } => {
            let p = PrimeModulus::complex(p)?;
            let lengths: Vec<Value> = length_catalogue(p, r, m)?
                .into_iter()
                .map(|(n, class)| json!({ "N": n, "class": class.as_str() }))
                .collect();
            let q = p.get().checked_pow(r).ok_or(Error::TooLarge)?;
            json!({ "p": p.get(), "r": r, "m": m, "q": q, "lengths": lengths })
        }
        Command::Examples => {
            let report = replay::run_all();
            let code = if report.iter().all(|c| c.pass) { 0 } else { 1 };
            let all_pass = code == 0;
            return Ok((json!({ "examples": report, "all_pass": all_pass }), code));
        }
    };
    Ok((v, 0))
}

fn field_info(p: u64, r: Option<usize>, m: Option<usize>) -> std::result::Result<Value, Failure> {
    let p = PrimeModulus::new(p)?;
    let mut out = json!({ "p": p.get(), "complex": p.supports_complex() });
    if p.supports_complex() {
        let ctx = PolarContext::new(p)?;
        out["gl"] = json!({
            "group_order": group_order(p),
            "radial_order": radial_order(p),
            "phase_order": phase_order(p),
            "generator": gl_json(ctx.generator()),
            "epsilon": gl_json(ctx.epsilon()),
            "g_r": fp_json(ctx.g_r()),
        });
    }
    if r.is_some() || m.is_some() {
        let field = ComplexExt::build(p, r.unwrap_or(1), m.unwrap_or(1))?;
        let describe = |f: &ExtField| json!({ "degree": f.degree(), "size": f.size(), "modulus_poly": f.modulus_poly() });
        out["extension"] = json!({
            "r": field.r(),
            "m": field.m(),
            "q": field.q(),
            "alphabet": describe(field.alphabet()),
            "base": describe(field.base()),
            "carrier": describe(field.carrier()),
            "j": ext_json(field.j()),
            "group_order": field.group_order(),
            "cartesian_split": field.cartesian(field.j()).is_some(),
        });
    }
    Ok(out)
}

fn cesaro(seq: &Sequence) -> std::result::Result<Value, Failure> {
    let one_sided = seq.one_sided()?;
    let stream = TermStream::new(one_sided.transient, one_sided.period)?;
    let mut out = json!({ "p": seq.modulus().get() });
    let sigma = match partial_sum_profile(&stream) {
        Ok(profile) => {
            out["period"] = json!(profile.period);
            cesaro_sum(&profile)
        }
        Err(d) => CesaroResult::Divergent(d),
    };
    match sigma {
        CesaroResult::Convergent(s) => out["sigma"] = fp_json(s),
        CesaroResult::Divergent(Divergence::PeriodDivisibleByP) => {
            out["sigma"] = json!("div");
            out["divergence"] = json!("period_divisible_by_p");
        }
    }
    Ok(out)
}

fn window_json(w: &Window) -> Value {
    json!({ "p": w.modulus().get(), "start": w.start, "values": w.raw() })
}

fn build_plan(a: PlanArgs) -> std::result::Result<FfftPlan, Failure> {
    let p = PrimeModulus::complex(a.p)?;
    let plan = FfftPlan::new(p, a.r, a.m, a.n)?;
    Ok(if a.relaxed { plan.relaxed() } else { plan })
}

fn plan_json(a: PlanArgs) -> Value {
    json!({ "p": a.p, "r": a.r, "m": a.m, "N": a.n })
}

fn transform_json(a: PlanArgs, plan: &FfftPlan, out: &[galois_dsp::ExtElement]) -> Value {
    json!({
        "plan": plan_json(a),
        "zeta": ext_json(plan.zeta()),
        "output": out.iter().map(ext_json).collect::<Vec<_>>(),
        "all_real": out.iter().all(|x| plan.field().is_real(x)),
    })
}

fn filter(p: PrimeModulus, req: &FilterRequest) -> std::result::Result<Value, Failure> {
    let input = |req: &FilterRequest| -> std::result::Result<Window, Failure> {
        let i = req
            .input
            .as_ref()
            .ok_or_else(|| Failure::Usage("spec: this mode needs \"input\"".into()))?;
        Ok(Window::new(i.start, to_fp_vec(&i.values, p)?)?)
    };
    match (&req.filter, req.mode) {
        (FilterJson::Fir { taps }, mode) => {
            let fir = FirFilter::new(to_fp_vec(taps, p)?)?;
            match mode {
                FilterMode::Time => Ok(window_json(&fir.apply_time(&input(req)?)?)),
                FilterMode::Ffft => {
                    let x = input(req)?;
                    let plan = match req.plan {
                        Some(pl) => FfftPlan::new(PrimeModulus::complex(p.get())?, pl.r, pl.m, pl.n)?,
                        None => smallest_plan(p, fir.taps().len() + x.len() - 1)?,
                    };
                    let mut out = window_json(&fir.apply_ffft(&x, &plan)?);
                    out["N"] = json!(plan.len());
                    Ok(out)
                }
                FilterMode::Response => {
                    let p = PrimeModulus::complex(p.get())?;
                    let seq = Sequence::finite(p, 0, fir.taps().to_vec())?;
                    Ok(spectrum_json(&fdtft(&seq, &PolarContext::new(p)?)?))
                }
            }
        }
        (FilterJson::Iir { poles }, mode) => {
            let poles = poles
                .iter()
                .map(|pl| Ok((pl.amplitude.to_fp(p)?, pl.ratio.to_fp(p)?)))
                .collect::<galois_dsp::Result<Vec<_>>>()?;
            let iir = IirFilter::new(p, poles)?;
            match mode {
                FilterMode::Time => {
                    let x = input(req)?;
                    let len = req.len.unwrap_or(x.len());
                    Ok(window_json(&iir.apply(&x, len)?))
                }
                FilterMode::Ffft => Err(Failure::Usage("spec: mode \"ffft\" applies to FIR filters only".into())),
                FilterMode::Response => {
                    let ctx = PolarContext::new(PrimeModulus::complex(p.get())?)?;
                    Ok(spectrum_json(&iir.frequency_response(&ctx)?))
                }
            }
        }
    }
}

/// The shortest single-extension plan over GF(p) that holds `needed` samples.
fn smallest_plan(p: PrimeModulus, needed: usize) -> galois_dsp::Result<FfftPlan> {
    let p = PrimeModulus::complex(p.get())?;
    let lengths = length_catalogue(p, 1, 1)?;
    let n = lengths
        .iter()
        .map(|(n, _)| *n)
        .find(|&n| n as usize >= needed)
        .ok_or(Error::PlanTooShort {
            needed,
            n: lengths.last().map_or(0, |(n, _)| *n as usize),
        })?;
    FfftPlan::new(p, 1, 1, n)
}
