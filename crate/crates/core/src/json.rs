//! Wire formats shared with the command-line tool.
//!
//! Big integers always cross the boundary as decimal strings: the 86-digit
//! values in play exceed what JSON numbers can carry losslessly.
//!
//! Input shapes, mutually exclusive:
//!   {"variables": h, "generators": [[e1, …, eh], …]}   monomial ideal
//!   {"ci_degrees": [m1, …]}                            complete intersection
//!   {"c": {"-2": "2", "-4": "-1"}}                     raw coefficients

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::approx::ApproxSequence;
use crate::error::{Error, Result};
use crate::lcbc::{ci_numerator, CoeffVector};
use crate::monomial::{hilbert_numerator, Monomial, MonomialIdeal};
use crate::unilex::GammaSpec;

/// An ideal shape, as accepted everywhere a `--spec` input is.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealSpec {
    Monomial(MonomialIdeal),
    CompleteIntersection(Vec<i64>),
    Coefficients(CoeffVector),
}

impl IdealSpec {
    pub fn from_json_str(text: &str) -> Result<IdealSpec> {
        let value: Value = serde_json::from_str(text)
            .map_err(|e| Error::InvalidArgument(format!("spec is not valid JSON: {e}")))?;
        Self::from_json(&value)
    }

    pub fn from_json(value: &Value) -> Result<IdealSpec> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::InvalidArgument("spec must be a JSON object".into()))?;
        let has_monomial = obj.contains_key("variables") || obj.contains_key("generators");
        let has_ci = obj.contains_key("ci_degrees");
        let has_coeffs = obj.contains_key("c");
        match (has_monomial, has_ci, has_coeffs) {
            (true, false, false) => Ok(IdealSpec::Monomial(ideal_from_json(value)?)),
            (false, true, false) => {
                let degrees = obj["ci_degrees"]
                    .as_array()
                    .ok_or_else(|| Error::InvalidArgument("ci_degrees must be an array".into()))?
                    .iter()
                    .map(|d| {
                        d.as_i64().ok_or_else(|| {
                            Error::InvalidArgument("ci_degrees entries must be integers".into())
                        })
                    })
                    .collect::<Result<Vec<i64>>>()?;
                Ok(IdealSpec::CompleteIntersection(degrees))
            }
            (false, false, true) => Ok(IdealSpec::Coefficients(coeffs_from_json(&obj["c"])?)),
            _ => Err(Error::InvalidArgument(
                "spec must contain exactly one of {variables, generators}, {ci_degrees}, {c}"
                    .into(),
            )),
        }
    }

    /// Route the spec to its extended-Hilbert-function coefficients.
    pub fn coeff_vector(&self) -> Result<CoeffVector> {
        match self {
            IdealSpec::Monomial(ideal) => Ok(hilbert_numerator(ideal)),
            IdealSpec::CompleteIntersection(degrees) => ci_numerator(degrees),
            IdealSpec::Coefficients(c) => Ok(c.clone()),
        }
    }

    /// The underlying monomial ideal, where the spec names one.
    pub fn as_ideal(&self) -> Option<&MonomialIdeal> {
        match self {
            IdealSpec::Monomial(ideal) => Some(ideal),
            _ => None,
        }
    }
}

pub fn ideal_from_json(value: &Value) -> Result<MonomialIdeal> {
    let obj = value
        .as_object()
        .ok_or_else(|| Error::InvalidArgument("ideal must be a JSON object".into()))?;
    let variables = obj
        .get("variables")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::InvalidArgument("ideal needs a positive \"variables\" count".into()))?
        as usize;
    let generators = obj
        .get("generators")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::InvalidArgument("ideal needs a \"generators\" array".into()))?;
    let mut gens = Vec::with_capacity(generators.len());
    for g in generators {
        let exps = g
            .as_array()
            .ok_or_else(|| Error::InvalidArgument("each generator is an exponent array".into()))?
            .iter()
            .map(|e| {
                e.as_u64()
                    .and_then(|x| u32::try_from(x).ok())
                    .ok_or_else(|| {
                        Error::InvalidArgument("exponents must be small nonnegative integers".into())
                    })
            })
            .collect::<Result<Vec<u32>>>()?;
        gens.push(Monomial::new(exps));
    }
    MonomialIdeal::new(variables, gens)
}

pub fn ideal_to_json(ideal: &MonomialIdeal) -> Value {
    json!({
        "variables": ideal.num_vars(),
        "generators": ideal
            .generators()
            .iter()
            .map(|g| g.padded_exponents(ideal.num_vars()))
            .collect::<Vec<_>>(),
    })
}

pub fn coeffs_from_json(value: &Value) -> Result<CoeffVector> {
    let obj = value
        .as_object()
        .ok_or_else(|| Error::InvalidArgument("\"c\" must be an object of shift -> value".into()))?;
    let mut pairs = Vec::with_capacity(obj.len());
    for (key, val) in obj {
        let shift: i64 = key
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("bad shift key {key:?}")))?;
        let coeff = match val {
            Value::String(s) => s
                .parse::<BigInt>()
                .map_err(|_| Error::InvalidArgument(format!("bad coefficient {s:?}")))?,
            Value::Number(n) => n
                .as_i64()
                .map(BigInt::from)
                .ok_or_else(|| Error::InvalidArgument(format!("bad coefficient {n}")))?,
            _ => {
                return Err(Error::InvalidArgument(
                    "coefficients must be decimal strings".into(),
                ))
            }
        };
        pairs.push((shift, coeff));
    }
    Ok(CoeffVector::from_pairs(pairs))
}

pub fn coeffs_to_json(c: &CoeffVector) -> Value {
    let mut map = Map::new();
    for (s, coeff) in c.iter() {
        map.insert(s.to_string(), Value::String(coeff.to_string()));
    }
    json!({ "c": map })
}

pub fn gamma_from_json_str(text: &str) -> Result<GammaSpec> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| Error::InvalidArgument(format!("gamma is not valid JSON: {e}")))?;
    let pairs = value
        .get("gamma")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::InvalidArgument("expected {\"gamma\": [[d, alpha], …]}".into()))?;
    let mut out = Vec::with_capacity(pairs.len());
    for p in pairs {
        let pair = p.as_array().filter(|a| a.len() == 2).ok_or_else(|| {
            Error::InvalidArgument("each gamma entry is a [degree, count] pair".into())
        })?;
        let d = pair[0]
            .as_i64()
            .ok_or_else(|| Error::InvalidArgument("gamma degree must be an integer".into()))?;
        let alpha = pair[1]
            .as_u64()
            .ok_or_else(|| Error::InvalidArgument("gamma count must be a positive integer".into()))?
            as usize;
        out.push((d, alpha));
    }
    GammaSpec::new(out)
}

/// Samples file for `fit`: a JSON array of [N, t, "value"] triples.
pub fn samples_from_json_str(text: &str) -> Result<Vec<(i64, i64, BigInt)>> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| Error::InvalidArgument(format!("samples are not valid JSON: {e}")))?;
    let rows = value
        .as_array()
        .ok_or_else(|| Error::InvalidArgument("samples must be an array of [N, t, value]".into()))?;
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        let triple = row.as_array().filter(|a| a.len() == 3).ok_or_else(|| {
            Error::InvalidArgument("each sample is a [N, t, value] triple".into())
        })?;
        let n = triple[0]
            .as_i64()
            .ok_or_else(|| Error::InvalidArgument("sample N must be an integer".into()))?;
        let t = triple[1]
            .as_i64()
            .ok_or_else(|| Error::InvalidArgument("sample t must be an integer".into()))?;
        let v = match &triple[2] {
            Value::String(s) => s
                .parse::<BigInt>()
                .map_err(|_| Error::InvalidArgument(format!("bad sample value {s:?}")))?,
            Value::Number(n) => n
                .as_i64()
                .map(BigInt::from)
                .ok_or_else(|| Error::InvalidArgument(format!("bad sample value {n}")))?,
            _ => {
                return Err(Error::InvalidArgument(
                    "sample values must be decimal strings".into(),
                ))
            }
        };
        out.push((n, t, v));
    }
    Ok(out)
}

pub fn approx_to_json(seq: &ApproxSequence) -> Value {
    json!({
        "a": seq.a_seq().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "b": seq.b_seq().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
    })
}
