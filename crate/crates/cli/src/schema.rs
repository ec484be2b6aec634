//! JSON request payloads and their conversions into library types.
//!
//! Every payload type serializes back to a form that parses to an equal
//! value, so requests can be echoed and replayed.

use galois_dsp::{
    ExtElement, ExtField, FpElement, GlElement, PolarContext, PrimeModulus, Result, Sequence, Spectrum, SpectrumEntry,
};
use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize, Serializer};
use serde_json::{json, Value};
use std::sync::Arc;

/// A GF(p) value given as an integer or an `"r/s"` string.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Scalar {
    pub num: i64,
    pub den: i64,
}

impl Scalar {
    pub fn int(v: i64) -> Self {
        Scalar { num: v, den: 1 }
    }

    pub fn to_fp(self, p: PrimeModulus) -> Result<FpElement> {
        p.from_ratio(self.num, self.den)
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.den == 1 {
            s.serialize_i64(self.num)
        } else {
            s.serialize_str(&format!("{}/{}", self.num, self.den))
        }
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match Value::deserialize(d)? {
            Value::Number(n) => n
                .as_i64()
                .map(Scalar::int)
                .ok_or_else(|| de::Error::custom(format!("expected an integer, got {n}"))),
            Value::String(s) => {
                let parse = |t: &str| t.trim().parse::<i64>().ok();
                let parsed = match s.split_once('/') {
                    Some((n, d)) => parse(n).zip(parse(d)),
                    None => parse(&s).map(|n| (n, 1)),
                };
                match parsed {
                    Some((_, 0)) => Err(de::Error::custom("zero denominator")),
                    Some((num, den)) => Ok(Scalar { num, den }),
                    None => Err(de::Error::custom(format!("expected \"r/s\", got {s:?}"))),
                }
            }
            other => Err(de::Error::custom(format!("expected a number or \"r/s\", got {other}"))),
        }
    }
}

pub fn to_fp_vec(values: &[Scalar], p: PrimeModulus) -> Result<Vec<FpElement>> {
    values.iter().map(|v| v.to_fp(p)).collect()
}

fn is_zero(v: &i64) -> bool {
    *v == 0
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SequenceJson {
    Finite {
        #[serde(default, skip_serializing_if = "is_zero")]
        start: i64,
        values: Vec<Scalar>,
    },
    RightPeriodic {
        #[serde(default, skip_serializing_if = "is_zero")]
        start: i64,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        transient: Vec<Scalar>,
        period: Vec<Scalar>,
    },
    LeftPeriodic {
        #[serde(default, skip_serializing_if = "is_zero")]
        end: i64,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        transient: Vec<Scalar>,
        period: Vec<Scalar>,
    },
    TwoSided {
        period: Vec<Scalar>,
        #[serde(default, skip_serializing_if = "is_zero")]
        phase: i64,
    },
    Exponential {
        #[serde(rename = "A")]
        amplitude: Scalar,
        #[serde(rename = "a")]
        ratio: Scalar,
    },
    Impulse {},
    UnitStep {},
}

impl SequenceJson {
    pub fn build(&self, p: PrimeModulus) -> Result<Sequence> {
        match self {
            SequenceJson::Finite { start, values } => Sequence::finite(p, *start, to_fp_vec(values, p)?),
            SequenceJson::RightPeriodic {
                start,
                transient,
                period,
            } => Sequence::right_periodic(p, *start, to_fp_vec(transient, p)?, to_fp_vec(period, p)?),
            SequenceJson::LeftPeriodic { end, transient, period } => {
                Sequence::left_periodic(p, *end, to_fp_vec(transient, p)?, to_fp_vec(period, p)?)
            }
            SequenceJson::TwoSided { period, phase } => Sequence::two_sided(p, to_fp_vec(period, p)?, *phase),
            SequenceJson::Exponential { amplitude, ratio } => {
                Sequence::exponential(amplitude.to_fp(p)?, ratio.to_fp(p)?)
            }
            SequenceJson::Impulse {} => Sequence::impulse(p),
            SequenceJson::UnitStep {} => Ok(Sequence::unit_step(p)),
        }
    }
}

/// A GL(p) value: `[re, im]`, or a bare scalar for a real element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GlJson {
    Pair([Scalar; 2]),
    Real(Scalar),
}

impl GlJson {
    pub fn to_gl(self, p: PrimeModulus) -> Result<GlElement> {
        match self {
            GlJson::Pair([re, im]) => GlElement::new(re.to_fp(p)?, im.to_fp(p)?),
            GlJson::Real(v) => Ok(GlElement::real(v.to_fp(p)?)),
        }
    }
}

/// One spectrum sample: a GL(p) value or the marker `"div"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntryJson {
    Value(GlJson),
    Divergent,
}

impl Serialize for EntryJson {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            EntryJson::Value(v) => v.serialize(s),
            EntryJson::Divergent => s.serialize_str("div"),
        }
    }
}

impl<'de> Deserialize<'de> for EntryJson {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        if v.as_str() == Some("div") {
            return Ok(EntryJson::Divergent);
        }
        GlJson::deserialize(v)
            .map(EntryJson::Value)
            .map_err(|_| de::Error::custom("expected [re, im], a scalar, or \"div\""))
    }
}

/// A spectrum as a bare array or as the object printed by `fdtft`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SpectrumJson {
    Object { spectrum: Vec<EntryJson> },
    Bare(Vec<EntryJson>),
}

impl SpectrumJson {
    pub fn build(&self, ctx: &PolarContext) -> Result<Spectrum> {
        let entries = match self {
            SpectrumJson::Object { spectrum } | SpectrumJson::Bare(spectrum) => spectrum,
        };
        let p = ctx.modulus();
        let values = entries
            .iter()
            .map(|e| match e {
                EntryJson::Divergent => Ok(SpectrumEntry::Divergent),
                EntryJson::Value(v) => v.to_gl(p).map(SpectrumEntry::Value),
            })
            .collect::<Result<_>>()?;
        Spectrum::new(values, *ctx)
    }
}

/// An extension-field element: an integer for a prime-field constant,
/// otherwise its coefficient array, constant term first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElemJson {
    Int(i64),
    Coeffs(Vec<i64>),
}

impl ElemJson {
    pub fn coeffs(&self, p: PrimeModulus) -> Vec<u64> {
        match self {
            ElemJson::Int(v) => vec![p.elem(*v).value()],
            ElemJson::Coeffs(c) => c.iter().map(|&v| p.elem(v).value()).collect(),
        }
    }

    pub fn to_ext(&self, field: &Arc<ExtField>) -> ExtElement {
        field.element(&self.coeffs(field.prime()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PoleJson {
    #[serde(rename = "A")]
    pub amplitude: Scalar,
    #[serde(rename = "a")]
    pub ratio: Scalar,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum FilterJson {
    Fir { taps: Vec<Scalar> },
    Iir { poles: Vec<PoleJson> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FilterMode {
    Time,
    Ffft,
    Response,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputJson {
    #[serde(default, skip_serializing_if = "is_zero")]
    pub start: i64,
    pub values: Vec<Scalar>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlanJson {
    #[serde(default = "one")]
    pub r: usize,
    #[serde(default = "one")]
    pub m: usize,
    #[serde(rename = "N")]
    pub n: u64,
}

fn one() -> usize {
    1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FilterRequest {
    pub filter: FilterJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<InputJson>,
    pub mode: FilterMode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plan: Option<PlanJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub len: Option<usize>,
}

pub fn fp_json(x: FpElement) -> Value {
    json!(x.value())
}

pub fn gl_json(z: GlElement) -> Value {
    json!([z.re().value(), z.im().value()])
}

pub fn ext_json(x: &ExtElement) -> Value {
    match x.as_prime() {
        Some(c) => json!(c),
        None => json!(x.coeffs()),
    }
}

pub fn context_json(ctx: &PolarContext) -> Value {
    json!({
        "p": ctx.modulus().get(),
        "epsilon": gl_json(ctx.epsilon()),
        "g_r": fp_json(ctx.g_r()),
    })
}

pub fn spectrum_json(s: &Spectrum) -> Value {
    let entries: Vec<Value> = s
        .values()
        .iter()
        .map(|e| match e {
            SpectrumEntry::Value(z) => gl_json(*z),
            SpectrumEntry::Divergent => json!("div"),
        })
        .collect();
    json!({ "context": context_json(s.context()), "spectrum": entries })
}
