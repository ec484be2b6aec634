//! Cesàro summation of eventually periodic series over GF(p) and GL(p).
//!
//! For a series whose partial sums `S[k]` are periodic with period `P`, the
//! mean `σ_n = (1/n) Σ S[k]` tends to `(1/P) Σ_{one period} S[k]` over the
//! integers. Only then is the value reduced mod p, which requires
//! `P ≢ 0 (mod p)`. When one period of terms sums to `c ≠ 0`, the partial
//! sums drift by `c` each period and only repeat after `P·p` terms, so the
//! series diverges.

use num_rational::Ratio;

use crate::complex_field::GlElement;
use crate::error::{Error, Result};
use crate::prime_field::{FpElement, PrimeModulus};
use crate::sequences::Sequence;

/// Scalars the engine can sum: a fixed number of GF(p) lanes.
pub trait CesaroScalar: Copy + PartialEq + std::fmt::Debug {
    const LANES: usize;

    fn prime(&self) -> PrimeModulus;
    fn lane(&self, i: usize) -> FpElement;
    fn from_lanes(lanes: &[FpElement]) -> Self;

    fn zero_like(&self) -> Self {
        let z = self.prime().zero();
        Self::from_lanes(&vec![z; Self::LANES])
    }

    fn plus(&self, rhs: &Self) -> Self {
        let lanes: Vec<FpElement> = (0..Self::LANES).map(|i| self.lane(i) + rhs.lane(i)).collect();
        Self::from_lanes(&lanes)
    }

    fn is_zero(&self) -> bool {
        (0..Self::LANES).all(|i| self.lane(i).is_zero())
    }
}

impl CesaroScalar for FpElement {
    const LANES: usize = 1;

    fn prime(&self) -> PrimeModulus {
        self.modulus()
    }

    fn lane(&self, _: usize) -> FpElement {
        *self
    }

    fn from_lanes(lanes: &[FpElement]) -> Self {
        lanes[0]
    }
}

impl CesaroScalar for GlElement {
    const LANES: usize = 2;

    fn prime(&self) -> PrimeModulus {
        self.modulus()
    }

    fn lane(&self, i: usize) -> FpElement {
        if i == 0 {
            self.re()
        } else {
            self.im()
        }
    }

    fn from_lanes(lanes: &[FpElement]) -> Self {
        GlElement::new(lanes[0], lanes[1]).expect("lanes share a complex prime")
    }
}

/// Terms of a right-sided series in summation order: a transient followed by
/// a block repeated forever.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermStream<T> {
    transient: Vec<T>,
    period: Vec<T>,
}

impl<T: CesaroScalar> TermStream<T> {
    pub fn new(transient: Vec<T>, period: Vec<T>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::Empty("period"));
        }
        Ok(TermStream { transient, period })
    }

    pub fn transient(&self) -> &[T] {
        &self.transient
    }

    pub fn period(&self) -> &[T] {
        &self.period
    }
}

/// Why a series has no Cesàro limit in GF(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Divergence {
    /// The partial sums repeat only with a period divisible by p.
    PeriodDivisibleByP,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CesaroResult<T> {
    Convergent(T),
    Divergent(Divergence),
}

impl<T> CesaroResult<T> {
    pub fn convergent(self) -> Option<T> {
        match self {
            CesaroResult::Convergent(v) => Some(v),
            CesaroResult::Divergent(_) => None,
        }
    }
}

/// One period of the (eventually periodic) partial sums `S[k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialSumProfile<T> {
    pub transient_sums: Vec<T>,
    pub period_sums: Vec<T>,
    pub period: usize,
}

/// Partial sums of `stream`, or the reason they never settle into a period
/// coprime to p.
pub fn partial_sum_profile<T: CesaroScalar>(
    stream: &TermStream<T>,
) -> std::result::Result<PartialSumProfile<T>, Divergence> {
    let block = &stream.period[..crate::arith::minimal_period(&stream.period)];
    let drift = block.iter().fold(block[0].zero_like(), |acc, t| acc.plus(t));
    if !drift.is_zero() {
        return Err(Divergence::PeriodDivisibleByP);
    }
    let mut running = block[0].zero_like();
    let transient_sums: Vec<T> = stream
        .transient
        .iter()
        .map(|t| {
            running = running.plus(t);
            running
        })
        .collect();
    let sums: Vec<T> = block
        .iter()
        .map(|t| {
            running = running.plus(t);
            running
        })
        .collect();
    let period = crate::arith::minimal_period(&sums);
    Ok(PartialSumProfile {
        transient_sums,
        period_sums: sums[..period].to_vec(),
        period,
    })
}

/// `σ = (P mod p)⁻¹ · Σ_{k=1}^{P} S[k]`, the one-period sum taken over the
/// integers before reduction.
pub fn cesaro_sum<T: CesaroScalar>(profile: &PartialSumProfile<T>) -> CesaroResult<T> {
    let p = profile.period_sums[0].prime();
    let pv = p.get();
    if (profile.period as u64).is_multiple_of(pv) {
        return CesaroResult::Divergent(Divergence::PeriodDivisibleByP);
    }
    let scale = p.from_u64(profile.period as u64).inv().expect("P coprime to p");
    let lanes: Vec<FpElement> = (0..T::LANES)
        .map(|i| {
            let total: u128 = profile
                .period_sums
                .iter()
                .map(|s| s.lane(i).value() as u128)
                .sum();
            p.from_u64((total % pv as u128) as u64) * scale
        })
        .collect();
    CesaroResult::Convergent(T::from_lanes(&lanes))
}

/// Profile and sum in one step.
pub fn cesaro_sum_stream<T: CesaroScalar>(stream: &TermStream<T>) -> CesaroResult<T> {
    match partial_sum_profile(stream) {
        Ok(profile) => cesaro_sum(&profile),
        Err(d) => CesaroResult::Divergent(d),
    }
}

/// Cesàro sum of `Σ x[n]` over the support of a one-sided sequence.
pub fn cesaro_sum_sequence(seq: &Sequence) -> Result<CesaroResult<FpElement>> {
    let one = seq.one_sided()?;
    let stream = TermStream::new(one.transient, one.period)?;
    Ok(cesaro_sum_stream(&stream))
}

/// Brute-force Cesàro mean over the integers.
///
/// The terms are integers; `S[k]` is the running sum reduced into `[0, p)`
/// and read back as an integer, and `σ_n = (1/n) Σ_{k≤n} S[k]` is returned as
/// an exact rational at the largest multiple `n ≤ n_max` of the block length
/// (at least one block). No field arithmetic is involved.
pub fn cesaro_oracle(transient: &[i64], period: &[i64], p: u64, n_max: u64) -> Ratio<i128> {
    assert!(!period.is_empty(), "period must be nonempty");
    let block = period.len() as u64;
    let n = (n_max / block).max(1) * block;
    let mut running: i128 = 0;
    let mut acc: i128 = 0;
    for k in 0..n as usize {
        let term = if k < transient.len() {
            transient[k]
        } else {
            period[(k - transient.len()) % period.len()]
        };
        running = (running + term as i128).rem_euclid(p as i128);
        acc += running;
    }
    Ratio::new(acc, n as i128)
}

/// `num · den⁻¹ mod p`, or `None` when p divides the denominator.
pub fn reduce_rational(r: &Ratio<i128>, p: PrimeModulus) -> Option<FpElement> {
    let pv = p.get() as i128;
    let num = r.numer().rem_euclid(pv) as u64;
    let den = r.denom().rem_euclid(pv) as u64;
    let den = p.from_u64(den).inv().ok()?;
    Some(p.from_u64(num) * den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    fn stream(p: u64, t: &[i64], v: &[i64]) -> TermStream<FpElement> {
        let f = gf(p);
        TermStream::new(
            t.iter().map(|&x| f.elem(x)).collect(),
            v.iter().map(|&x| f.elem(x)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn example_two() {
        let s = stream(7, &[], &[1, 3, 2, 6, 4, 5]);
        let profile = partial_sum_profile(&s).unwrap();
        let sums: Vec<u64> = profile.period_sums.iter().map(|x| x.value()).collect();
        assert_eq!(sums, vec![1, 4, 6, 5, 2, 0]);
        assert_eq!(profile.period, 6);
        assert_eq!(cesaro_sum(&profile), CesaroResult::Convergent(gf(7).elem(3)));
        // closed form 1/(1 - 3) = inv(5) = 3
        assert_eq!(gf(7).elem(1 - 3).inv().unwrap().value(), 3);
    }

    #[test]
    fn constant_ones_diverge() {
        let s = stream(5, &[], &[1]);
        assert_eq!(partial_sum_profile(&s), Err(Divergence::PeriodDivisibleByP));
        assert_eq!(
            cesaro_sum_stream(&s),
            CesaroResult::Divergent(Divergence::PeriodDivisibleByP)
        );
    }

    #[test]
    fn zero_series() {
        let s = stream(7, &[], &[0]);
        let profile = partial_sum_profile(&s).unwrap();
        assert_eq!(profile.period, 1);
        assert_eq!(cesaro_sum(&profile), CesaroResult::Convergent(gf(7).zero()));
    }

    #[test]
    fn period_multiple_of_p_diverges() {
        // terms sum to zero over the block but S = 1, 0, 0 has period 3 in GF(3)
        let s = stream(3, &[], &[1, 2, 0]);
        let profile = partial_sum_profile(&s).unwrap();
        assert_eq!(profile.period, 3);
        assert_eq!(
            cesaro_sum(&profile),
            CesaroResult::Divergent(Divergence::PeriodDivisibleByP)
        );
    }

    #[test]
    fn non_minimal_block_is_reduced_before_the_drift_test() {
        // block [1,1,1,1,1,1,1] over GF(7) sums to 0 but the true period is
        // [1], which drifts
        let s = stream(7, &[], &[1; 7]);
        assert_eq!(partial_sum_profile(&s), Err(Divergence::PeriodDivisibleByP));
    }

    #[test]
    fn transient_does_not_change_the_limit() {
        let a = cesaro_sum_stream(&stream(7, &[], &[1, 3, 2, 6, 4, 5]));
        let b = cesaro_sum_stream(&stream(7, &[5, 2], &[1, 3, 2, 6, 4, 5]));
        assert_eq!(a, b);
        // a finite series sums to its ordinary sum
        let fin = cesaro_sum_stream(&stream(7, &[2, 3, 6], &[0]));
        assert_eq!(fin, CesaroResult::Convergent(gf(7).elem(11)));
    }

    #[test]
    fn sequences_through_the_engine() {
        let p = gf(7);
        let threes = Sequence::exponential(p.one(), p.elem(3)).unwrap();
        assert_eq!(cesaro_sum_sequence(&threes).unwrap(), CesaroResult::Convergent(p.elem(3)));
        let step = Sequence::unit_step(gf(5));
        assert_eq!(
            cesaro_sum_sequence(&step).unwrap(),
            CesaroResult::Divergent(Divergence::PeriodDivisibleByP)
        );
        assert!(cesaro_sum_sequence(&Sequence::impulse(p).unwrap()).is_err());
    }

    #[test]
    fn gl_terms_are_summed_componentwise() {
        let p = PrimeModulus::complex(7).unwrap();
        let j = GlElement::j(p);
        // powers of j: 1, j, -1, -j; S = 1, 1+j, j, 0; mean (2+2j)/4
        let block: Vec<GlElement> = (0..4).map(|k| j.pow_u(k)).collect();
        let s = TermStream::new(vec![], block).unwrap();
        let expected = (GlElement::one(p) - j).inv().unwrap();
        assert_eq!(cesaro_sum_stream(&s), CesaroResult::Convergent(expected));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(cesaro_oracle(&[], &[1, -1], 7, 1000), Ratio::new(1, 2));
        assert_eq!(cesaro_oracle(&[], &[1, 3, 2, 6, 4, 5], 7, 1000), Ratio::new(18, 6));
        assert_eq!(cesaro_oracle(&[], &[0], 7, 10), Ratio::from_integer(0));
        assert_eq!(reduce_rational(&Ratio::new(1, 2), gf(7)).unwrap().value(), 4);
        assert_eq!(reduce_rational(&Ratio::new(1, 7), gf(7)), None);
    }

    #[test]
    fn truncation_identity() {
        // sum_{k=1}^{floor(n/P)P} S[k] = floor(n/P) * sum_{k=1}^{P} S[k] over Z
        let s = stream(11, &[], &[3, 5, 10, 4]);
        let profile = partial_sum_profile(&s).unwrap();
        let one_period: u64 = profile.period_sums.iter().map(|x| x.value()).sum();
        let sums: Vec<u64> = profile.period_sums.iter().map(|x| x.value()).collect();
        for n in [1usize, 5, 17, 123, 1000] {
            let full = n / profile.period * profile.period;
            let lhs: u64 = (0..full).map(|k| sums[k % profile.period]).sum();
            assert_eq!(lhs, (n / profile.period) as u64 * one_period);
        }
    }

    fn zero_sum_block(p: u64, raw: &[i64]) -> Vec<i64> {
        let mut v = raw.to_vec();
        let s: i64 = v.iter().sum();
        let last = v.last_mut().unwrap();
        *last = (*last - s).rem_euclid(p as i64);
        v
    }

    proptest! {
        #[test]
        fn engine_agrees_with_oracle(
            idx in 0usize..4,
            raw in proptest::collection::vec(0i64..19, 1..10),
        ) {
            let p = [3u64, 7, 11, 19][idx];
            let block = zero_sum_block(p, &raw);
            let s = stream(p, &[], &block);
            if let CesaroResult::Convergent(sigma) = cesaro_sum_stream(&s) {
                let r = cesaro_oracle(&[], &block, p, 5000);
                prop_assert_eq!(reduce_rational(&r, gf(p)), Some(sigma));
            }
        }

        #[test]
        fn coprime_period_converges(
            idx in 0usize..4,
            raw in proptest::collection::vec(0i64..19, 1..10),
        ) {
            let p = [3u64, 7, 11, 19][idx];
            let s = stream(p, &[], &zero_sum_block(p, &raw));
            // a block of p copies of a drifting block also sums to zero
            let profile = match partial_sum_profile(&s) {
                Ok(profile) => profile,
                Err(_) => return Ok(()),
            };
            let converges = cesaro_sum(&profile).convergent().is_some();
            prop_assert_eq!(converges, !(profile.period as u64).is_multiple_of(p));
        }

        #[test]
        fn linearity(
            idx in 0usize..3,
            x in proptest::collection::vec(0i64..11, 1..6),
            y in proptest::collection::vec(0i64..11, 1..6),
            alpha in 0i64..11,
            beta in 0i64..11,
        ) {
            let p = [7u64, 11, 19][idx];
            let f = gf(p);
            // align both blocks on a common length
            let len = x.len() * y.len();
            let xb: Vec<i64> = zero_sum_block(p, &x).into_iter().cycle().take(len).collect();
            let yb: Vec<i64> = zero_sum_block(p, &y).into_iter().cycle().take(len).collect();
            let comb: Vec<i64> = xb.iter().zip(&yb).map(|(a, b)| alpha * a + beta * b).collect();
            let sx = cesaro_sum_stream(&stream(p, &[], &xb)).convergent();
            let sy = cesaro_sum_stream(&stream(p, &[], &yb)).convergent();
            let sc = cesaro_sum_stream(&stream(p, &[], &comb)).convergent();
            if let (Some(a), Some(b), Some(c)) = (sx, sy, sc) {
                prop_assert_eq!(c, f.elem(alpha) * a + f.elem(beta) * b);
            }
        }
    }
}
