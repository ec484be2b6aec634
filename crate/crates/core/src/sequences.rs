//! Symbolic sequences over GF(p).
//!
//! Infinite sequences are never materialized: each variant is a finite
//! description (support edge, transient, one period) and evaluation at any
//! integer index is total.

use crate::arith;
use crate::complex_field::phase_order;
use crate::error::{Error, Result};
use crate::prime_field::{FpElement, PrimeModulus};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceSpec {
    /// `values[i]` at index `start + i`, zero elsewhere.
    FiniteSupport { start: i64, values: Vec<FpElement> },
    /// Zero before `start`; then the transient, then `period_values` repeated.
    RightSidedPeriodic {
        start: i64,
        transient: Vec<FpElement>,
        period_values: Vec<FpElement>,
    },
    /// Mirror image of `RightSidedPeriodic`: zero after `end`, the transient
    /// runs from `end` downwards, then `period_values` repeats leftwards.
    LeftSidedPeriodic {
        end: i64,
        transient: Vec<FpElement>,
        period_values: Vec<FpElement>,
    },
    /// `period_values[(n - phase) mod P]`.
    TwoSidedPeriodic {
        period_values: Vec<FpElement>,
        phase: i64,
    },
    /// `A · a^n · u[n]`.
    ExponentialRight {
        amplitude: FpElement,
        ratio: FpElement,
    },
}

/// A sequence together with the field it lives in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sequence {
    modulus: PrimeModulus,
    spec: SequenceSpec,
}

/// Smallest `d | values.len()` for which `values` is `d`-periodic.
pub fn minimal_period(values: &[FpElement]) -> usize {
    arith::minimal_period(values)
}

fn reduce_period(values: Vec<FpElement>) -> Result<Vec<FpElement>> {
    if values.is_empty() {
        return Err(Error::Empty("period"));
    }
    let d = minimal_period(&values);
    Ok(values[..d].to_vec())
}

fn check_all(p: PrimeModulus, values: &[FpElement]) -> Result<()> {
    match values.iter().find(|v| v.modulus() != p) {
        Some(v) => Err(Error::ModulusMismatch {
            left: p.get(),
            right: v.modulus().get(),
        }),
        None => Ok(()),
    }
}

impl Sequence {
    pub fn finite(p: PrimeModulus, start: i64, values: Vec<FpElement>) -> Result<Self> {
        check_all(p, &values)?;
        Ok(Sequence {
            modulus: p,
            spec: SequenceSpec::FiniteSupport { start, values },
        })
    }

    pub fn right_periodic(
        p: PrimeModulus,
        start: i64,
        transient: Vec<FpElement>,
        period_values: Vec<FpElement>,
    ) -> Result<Self> {
        check_all(p, &transient)?;
        check_all(p, &period_values)?;
        Ok(Sequence {
            modulus: p,
            spec: SequenceSpec::RightSidedPeriodic {
                start,
                transient,
                period_values: reduce_period(period_values)?,
            },
        })
    }

    pub fn left_periodic(
        p: PrimeModulus,
        end: i64,
        transient: Vec<FpElement>,
        period_values: Vec<FpElement>,
    ) -> Result<Self> {
        check_all(p, &transient)?;
        check_all(p, &period_values)?;
        Ok(Sequence {
            modulus: p,
            spec: SequenceSpec::LeftSidedPeriodic {
                end,
                transient,
                period_values: reduce_period(period_values)?,
            },
        })
    }

    pub fn two_sided(p: PrimeModulus, period_values: Vec<FpElement>, phase: i64) -> Result<Self> {
        check_all(p, &period_values)?;
        let period_values = reduce_period(period_values)?;
        let phase = phase.rem_euclid(period_values.len() as i64);
        Ok(Sequence {
            modulus: p,
            spec: SequenceSpec::TwoSidedPeriodic {
                period_values,
                phase,
            },
        })
    }

    /// `A · a^n · u[n]`; `a` must be nonzero.
    pub fn exponential(amplitude: FpElement, ratio: FpElement) -> Result<Self> {
        if amplitude.modulus() != ratio.modulus() {
            return Err(Error::ModulusMismatch {
                left: amplitude.modulus().get(),
                right: ratio.modulus().get(),
            });
        }
        if ratio.is_zero() {
            return Err(Error::ZeroArgument);
        }
        Ok(Sequence {
            modulus: ratio.modulus(),
            spec: SequenceSpec::ExponentialRight { amplitude, ratio },
        })
    }

    /// The Galois impulse: 1 at multiples of `2(p+1)`, 0 elsewhere.
    pub fn impulse(p: PrimeModulus) -> Result<Self> {
        p.require_complex()?;
        let mut values = vec![p.zero(); phase_order(p) as usize];
        values[0] = p.one();
        Self::two_sided(p, values, 0)
    }

    /// `u[n]`.
    pub fn unit_step(p: PrimeModulus) -> Self {
        Self::right_periodic(p, 0, Vec::new(), vec![p.one()]).expect("nonempty period")
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn spec(&self) -> &SequenceSpec {
        &self.spec
    }

    pub fn eval(&self, n: i64) -> FpElement {
        let zero = self.modulus.zero();
        let periodic = |vals: &[FpElement], k: i64| vals[k.rem_euclid(vals.len() as i64) as usize];
        match &self.spec {
            SequenceSpec::FiniteSupport { start, values } => {
                let i = n - start;
                if i < 0 || i >= values.len() as i64 {
                    zero
                } else {
                    values[i as usize]
                }
            }
            SequenceSpec::RightSidedPeriodic {
                start,
                transient,
                period_values,
            } => {
                let i = n - start;
                if i < 0 {
                    zero
                } else if i < transient.len() as i64 {
                    transient[i as usize]
                } else {
                    periodic(period_values, i - transient.len() as i64)
                }
            }
            SequenceSpec::LeftSidedPeriodic {
                end,
                transient,
                period_values,
            } => {
                let i = end - n;
                if i < 0 {
                    zero
                } else if i < transient.len() as i64 {
                    transient[i as usize]
                } else {
                    periodic(period_values, i - transient.len() as i64)
                }
            }
            SequenceSpec::TwoSidedPeriodic {
                period_values,
                phase,
            } => periodic(period_values, n - phase),
            SequenceSpec::ExponentialRight { amplitude, ratio } => {
                if n < 0 {
                    zero
                } else {
                    let ord = ratio.multiplicative_order().expect("ratio is nonzero");
                    *amplitude * ratio.pow_u(n as u64 % ord)
                }
            }
        }
    }

    /// Period of the repeating part; `None` for finite support.
    pub fn period(&self) -> Option<u64> {
        match &self.spec {
            SequenceSpec::FiniteSupport { .. } => None,
            SequenceSpec::RightSidedPeriodic { period_values, .. }
            | SequenceSpec::LeftSidedPeriodic { period_values, .. }
            | SequenceSpec::TwoSidedPeriodic { period_values, .. } => {
                Some(period_values.len() as u64)
            }
            SequenceSpec::ExponentialRight { ratio, .. } => ratio.multiplicative_order().ok(),
        }
    }

    /// Materializes `length` consecutive values from `start`. Panics if
    /// `length` is zero.
    pub fn window(&self, start: i64, length: usize) -> Window {
        assert!(length >= 1, "window length must be positive");
        Window {
            start,
            values: (0..length as i64).map(|i| self.eval(start + i)).collect(),
        }
    }

    /// The terms in summation order, starting from the edge of the support.
    ///
    /// Two-sided periodic sequences have no edge and are rejected.
    pub fn one_sided(&self) -> Result<OneSided> {
        let zero = self.modulus.zero();
        Ok(match &self.spec {
            SequenceSpec::FiniteSupport { start, values } => OneSided {
                first_index: *start,
                step: 1,
                transient: values.clone(),
                period: vec![zero],
            },
            SequenceSpec::RightSidedPeriodic {
                start,
                transient,
                period_values,
            } => OneSided {
                first_index: *start,
                step: 1,
                transient: transient.clone(),
                period: period_values.clone(),
            },
            SequenceSpec::LeftSidedPeriodic {
                end,
                transient,
                period_values,
            } => OneSided {
                first_index: *end,
                step: -1,
                transient: transient.clone(),
                period: period_values.clone(),
            },
            SequenceSpec::ExponentialRight { amplitude, ratio } => {
                let ord = ratio.multiplicative_order()?;
                OneSided {
                    first_index: 0,
                    step: 1,
                    transient: Vec::new(),
                    period: (0..ord).map(|i| *amplitude * ratio.pow_u(i)).collect(),
                }
            }
            SequenceSpec::TwoSidedPeriodic { .. } => {
                return Err(Error::UnsupportedSequence(
                    "two-sided periodic sequences have no one-sided partial sums",
                ))
            }
        })
    }
}

/// An eventually periodic one-sided sequence written in summation order:
/// term `i` sits at index `first_index + step·i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneSided {
    pub first_index: i64,
    /// `+1` for right-sided, `-1` for left-sided.
    pub step: i64,
    pub transient: Vec<FpElement>,
    pub period: Vec<FpElement>,
}

impl OneSided {
    pub fn index_of(&self, i: usize) -> i64 {
        self.first_index + self.step * i as i64
    }
}

/// A finite view `values[i]` at index `start + i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    pub start: i64,
    pub values: Vec<FpElement>,
}

impl Window {
    pub fn new(start: i64, values: Vec<FpElement>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Empty("window"));
        }
        check_all(values[0].modulus(), &values)?;
        Ok(Window { start, values })
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.values[0].modulus()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn raw(&self) -> Vec<u64> {
        self.values.iter().map(|v| v.value()).collect()
    }
}
