//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fail.

use galois_dsp::cesaro::{cesaro_oracle, cesaro_sum_stream, partial_sum_profile, reduce_rational, TermStream};
use galois_dsp::ffdtft::orthogonality_sum;
use galois_dsp::ffft::{convolve_via_transform, cyclic_convolution, pointwise_mul, pollard_special_case};
use galois_dsp::{
    cesaro_sum_sequence, fdtft, ffft, iffft, inverse_fdtft, CesaroResult, ComplexExt, Error, FfftPlan, FirFilter,
    GlElement, PolarContext, PrimeModulus, Sequence, Spectrum, SpectrumEntry, Window,
};
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn complex(p: u64) -> PrimeModulus {
    PrimeModulus::complex(p).unwrap()
}

fn ac1() -> Outcome {
    let p = PrimeModulus::new(7).unwrap();
    let seq = Sequence::exponential(p.one(), p.elem(3)).unwrap();
    let start = Instant::now();
    let sigma = cesaro_sum_sequence(&seq).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let os = seq.one_sided().unwrap();
    let profile = partial_sum_profile(&TermStream::new(os.transient, os.period).unwrap())
        .map_err(|d| format!("{d:?}"))?;
    let sums: Vec<u64> = profile.period_sums.iter().map(|s| s.value()).collect();
    ensure(sums == [1, 4, 6, 5, 2, 0], || format!("partial sums {sums:?}"))?;
    ensure(sigma == CesaroResult::Convergent(p.elem(3)), || format!("sigma {sigma:?}"))?;
    ensure(elapsed < Duration::from_millis(1), || format!("took {elapsed:?}"))?;
    Ok(format!("sigma = 3, partial sums {sums:?}, {elapsed:?}"))
}

fn ac2() -> Outcome {
    let g = |p: u64| PrimeModulus::new(p).unwrap();
    let run: Vec<_> = [0, 0, 0, 1, 1, 1, 2, 2, 2].iter().map(|&v| g(3).elem(v)).collect();
    let periods = [
        Sequence::exponential(g(7).one(), g(7).elem(3)).unwrap().period(),
        Sequence::exponential(g(5).one(), g(5).one()).unwrap().period(),
        Sequence::two_sided(g(3), run, 0).unwrap().period(),
    ];
    ensure(periods == [Some(6), Some(1), Some(9)], || format!("periods {periods:?}"))?;
    Ok("periods 6, 1, 9".into())
}

fn ac3() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for q in [3u64, 7, 11, 19] {
        let p = complex(q);
        let ctx = PolarContext::new(p).unwrap();
        let one = GlElement::one(p);
        for a in 1..q as i64 {
            let a = p.elem(a);
            let spectrum = fdtft(&Sequence::exponential(p.one(), a).unwrap(), &ctx).map_err(|e| e.to_string())?;
            for theta in 0..ctx.phase_count() {
                let pole = ctx.epsilon().pow(-(theta as i64)).unwrap().scale(a);
                let expected = if pole == one {
                    SpectrumEntry::Divergent
                } else {
                    SpectrumEntry::Value((one - pole).inv().unwrap())
                };
                ensure(spectrum.get(theta) == expected, || {
                    format!("p={q} a={} theta={theta}: {:?} vs {expected:?}", a.value(), spectrum.get(theta))
                })?;
                checked += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("{checked} (p, a, theta) samples, {elapsed:?}"))
}

fn ac4() -> Outcome {
    for q in [3u64, 7, 11, 19] {
        let p = complex(q);
        let ctx = PolarContext::new(p).unwrap();
        let period = 2 * (q as i64 + 1);
        for k in 0..2 * period {
            let expected = if k % period == 0 {
                GlElement::real(p.elem(period))
            } else {
                GlElement::zero(p)
            };
            let got = orthogonality_sum(k, &ctx);
            ensure(got == expected, || format!("p={q} k={k}: {got:?}"))?;
        }
    }
    Ok("k in [0, 4(p+1)), p in {3, 7, 11, 19}".into())
}

fn ac5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for q in [3u64, 7, 11] {
        let p = complex(q);
        let ctx = PolarContext::new(p).unwrap();
        let len = 2 * (q as usize + 1);
        for trial in 0..1000 {
            let x: Vec<_> = (0..len).map(|_| p.elem(rng.gen_range(0..q as i64))).collect();
            let spectrum = fdtft(&Sequence::finite(p, 0, x.clone()).unwrap(), &ctx).unwrap();
            let back = inverse_fdtft(&spectrum).map_err(|e| format!("p={q} trial {trial}: {e}"))?;
            ensure(back.values == x, || format!("p={q} trial {trial}: {:?}", back.raw()))?;
        }
        let plane = Spectrum::plane(ctx);
        let impulse = inverse_fdtft(&plane).unwrap().raw();
        let mut expected = vec![0; len];
        expected[0] = 1;
        ensure(impulse == expected, || format!("p={q} plane spectrum gave {impulse:?}"))?;
    }
    Ok("3000 round trips; plane spectrum gives the impulse".into())
}

fn ac6() -> Outcome {
    let mut count = 0;
    for q in [3u64, 7, 11, 19, 23] {
        let p = complex(q);
        for z in GlElement::all(p).filter(|z| !z.is_zero()) {
            let norm = z.re() * z.re() + z.im() * z.im();
            let lhs = z.pow(q as i64 + 1).unwrap();
            ensure(lhs == GlElement::real(norm), || format!("p={q} z={z:?}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} nonzero elements"))
}

fn ac7() -> Outcome {
    for q in [3u64, 7, 11, 19] {
        let p = complex(q);
        let ctx = PolarContext::new(p).unwrap();
        let mut seen = HashSet::new();
        for z in GlElement::all(p).filter(|z| !z.is_zero()) {
            let polar = ctx.to_polar(z).map_err(|e| e.to_string())?;
            ensure(polar.to_cartesian() == z, || format!("p={q} z={z:?} does not round-trip"))?;
            ensure(polar.r == z.gl_modulus(), || format!("p={q} z={z:?} r={:?}", polar.r))?;
            seen.insert((polar.r.value(), polar.theta));
        }
        ensure(seen.len() as u64 == q * q - 1, || format!("p={q}: {} distinct polar pairs", seen.len()))?;
    }
    Ok("bijective, r = |z| for p in {3, 7, 11, 19}".into())
}

fn ac8() -> Outcome {
    let p = complex(7);
    for n in [8u64, 16] {
        ensure(6 % n != 0, || format!("{n} divides 6"))?;
        FfftPlan::new(p, 1, 1, n).map_err(|e| format!("N={n}: {e}"))?;
    }
    match FfftPlan::new(p, 1, 1, 5) {
        Err(Error::InvalidLength { .. }) => {}
        other => return Err(format!("N=5 gave {other:?}")),
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for n in [4u64, 8, 16] {
        let plan = FfftPlan::new(p, 1, 1, n).unwrap();
        let random = |rng: &mut ChaCha8Rng| -> Vec<_> { (0..n).map(|_| plan.lift(rng.gen_range(0..7))).collect() };
        for _ in 0..50 {
            let f = random(&mut rng);
            let g = random(&mut rng);
            let big_f = ffft(&f, &plan).unwrap();
            ensure(iffft(&big_f, &plan).unwrap() == f, || format!("N={n}: round trip failed"))?;
            let lhs = ffft(&cyclic_convolution(&f, &g).unwrap(), &plan).unwrap();
            let rhs = pointwise_mul(&big_f, &ffft(&g, &plan).unwrap()).unwrap();
            ensure(lhs == rhs, || format!("N={n}: convolution theorem failed"))?;
            ensure(convolve_via_transform(&f, &g, &plan).unwrap() == cyclic_convolution(&f, &g).unwrap(), || {
                format!("N={n}: transform convolution differs")
            })?;
        }
    }
    Ok("N = 8, 16 accepted; N = 5 rejected; 150 vectors round-trip and convolve".into())
}

fn ac9() -> Outcome {
    let field = ComplexExt::build(complex(7), 1, 1).unwrap();
    let a = field.base().element_of_order(6).unwrap();
    let zeta = field.base_embedding().map(&a).unwrap();
    let plan = FfftPlan::with_kernel(field.clone(), zeta).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for trial in 0..100 {
        let f: Vec<_> = (0..6).map(|_| field.alphabet().constant(rng.gen_range(0..7))).collect();
        let real = pollard_special_case(&field, &f, &a).unwrap();
        let lifted: Vec<_> = f.iter().map(|x| field.alphabet_embedding().map(x).unwrap()).collect();
        let full = ffft(&lifted, &plan).unwrap();
        for (k, (r, c)) in real.iter().zip(&full).enumerate() {
            let (re, im) = field.cartesian(c).ok_or("no cartesian split")?;
            ensure(im.is_zero(), || format!("trial {trial} k={k}: nonzero imaginary part"))?;
            let r = field.base_embedding().map(r).unwrap();
            ensure(re == r && r == *c, || {
                format!("trial {trial} k={k}: components differ")
            })?;
        }
    }
    Ok("100 vectors, GF(7), N = 6".into())
}

fn ac10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let primes = [3u64, 5, 7, 11, 13, 19];
    let mut convergent = 0;
    let mut attempts = 0;
    while convergent < 500 {
        attempts += 1;
        ensure(attempts < 100_000, || format!("only {convergent} convergent sequences generated"))?;
        let q = primes[rng.gen_range(0..primes.len())];
        let p = PrimeModulus::new(q).unwrap();
        let len = rng.gen_range(1..12);
        let mut block: Vec<i64> = (0..len).map(|_| rng.gen_range(0..q as i64)).collect();
        let drift: i64 = block.iter().sum();
        block[len - 1] = (block[len - 1] - drift).rem_euclid(q as i64);
        let stream = TermStream::new(Vec::new(), block.iter().map(|&v| p.elem(v)).collect()).unwrap();
        let CesaroResult::Convergent(sigma) = cesaro_sum_stream(&stream) else {
            continue;
        };
        let oracle = cesaro_oracle(&[], &block, q, 5000);
        ensure(reduce_rational(&oracle, p) == Some(sigma), || {
            format!("p={q} block {block:?}: oracle {oracle} vs {}", sigma.value())
        })?;
        convergent += 1;
    }
    let grandi = cesaro_oracle(&[], &[1, -1], 3, 1000);
    ensure(grandi == Ratio::new(1, 2), || format!("1 - 1 + 1 - ... gave {grandi}"))?;
    Ok(format!("500 sequences ({attempts} drawn); 1 - 1 + 1 - ... = 1/2"))
}

fn ac11() -> Outcome {
    let p = complex(7);
    let plans: Vec<_> = [8u64, 16, 24, 48].iter().map(|&n| FfftPlan::new(p, 1, 1, n).unwrap()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for trial in 0..200 {
        let h: Vec<_> = (0..rng.gen_range(1..10)).map(|_| p.elem(rng.gen_range(0..7))).collect();
        let x: Vec<_> = (0..rng.gen_range(1..30)).map(|_| p.elem(rng.gen_range(0..7))).collect();
        let needed = h.len() + x.len() - 1;
        let plan = plans.iter().find(|pl| pl.len() >= needed).unwrap();
        let fir = FirFilter::new(h).unwrap();
        let x = Window::new(rng.gen_range(-5..5), x).unwrap();
        let via = fir.apply_ffft(&x, plan).map_err(|e| format!("trial {trial}: {e}"))?;
        ensure(via == fir.apply_time(&x).unwrap(), || format!("trial {trial}: outputs differ"))?;
    }
    Ok("200 random (h, x) pairs over GF(7)".into())
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("AC1", "Cesaro sum of 3^n over GF(7)", ac1),
        ("AC2", "periods of basic sequences", ac2),
        ("AC3", "exponential spectrum matches closed form", ac3),
        ("AC4", "phase orthogonality", ac4),
        ("AC5", "inverse DTFT round trip", ac5),
        ("AC6", "z^(p+1) equals the norm", ac6),
        ("AC7", "polar form bijection", ac7),
        ("AC8", "FFFT lengths, round trip, convolution", ac8),
        ("AC9", "real-kernel special case", ac9),
        ("AC10", "Cesaro engine agrees with integer oracle", ac10),
        ("AC11", "FIR via FFFT equals direct convolution", ac11),
    ];
    let mut failed = 0;
    for (id, name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS {id} {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {id} {name}: {why}");
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
