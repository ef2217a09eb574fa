//! The modespec document format: a JSON description of a mode sum.
//!
//! Top-level fields: `name` (optional), `dim`, `domain` (optional `[a, b]`),
//! and `modes`. Every rational is a `"num/den"` string so exactness survives
//! the file boundary; plain integers like `"3"` are accepted on input and
//! normalized to `"3/1"` on output.
//!
//! ```json
//! {
//!   "name": "two-line counterexample",
//!   "dim": 1,
//!   "domain": [-10.0, 10.0],
//!   "modes": [
//!     { "kind": "trig-exp", "coeff": "1/1", "m": 0, "trig": "sin",
//!       "freq": "1/1", "direction": ["1/1"] }
//!   ]
//! }
//! ```
//!
//! A polynomial-harmonic mode carries `poly`, a map from space-separated
//! monomial exponents (one per coordinate) to coefficients:
//! `{ "kind": "poly-harm", "coeff": "1/1", "m": 1, "poly": { "1": "1/1" } }`
//! is `t * y1`. Harmonicity of `poly` is enforced at load time.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::mode::{Mode, ModeKind, ModeSum, Trig};
use crate::multipoly::MultiPoly;
use crate::pi::PiScalar;
use crate::rational::{frac_string, parse_rational};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModeSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub domain: Option<[f64; 2]>,
    pub modes: Vec<ModeDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ModeDoc {
    TrigExp {
        coeff: String,
        m: u32,
        trig: String,
        freq: String,
        direction: Vec<String>,
    },
    PolyHarm {
        coeff: String,
        m: u32,
        poly: BTreeMap<String, String>,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub enum SpecError {
    Parse(String),
    /// Structurally valid but violating a mode invariant.
    Invariant(String),
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecError::Parse(msg) => write!(f, "parse error: {msg}"),
            SpecError::Invariant(msg) => write!(f, "invariant violation: {msg}"),
        }
    }
}

impl std::error::Error for SpecError {}

/// Parses a modespec document into an exact mode sum plus its metadata.
pub fn parse_modespec(text: &str) -> Result<(ModeSum, ModeSpec), SpecError> {
    let spec: ModeSpec =
        serde_json::from_str(text).map_err(|e| SpecError::Parse(e.to_string()))?;
    let sum = spec_to_modesum(&spec)?;
    Ok((sum, spec))
}

fn spec_to_modesum(spec: &ModeSpec) -> Result<ModeSum, SpecError> {
    if spec.dim == 0 {
        return Err(SpecError::Invariant("dim must be at least 1".into()));
    }
    let mut modes = Vec::with_capacity(spec.modes.len());
    for (i, doc) in spec.modes.iter().enumerate() {
        let at = |msg: String| SpecError::Parse(format!("mode {i}: {msg}"));
        match doc {
            ModeDoc::TrigExp {
                coeff,
                m,
                trig,
                freq,
                direction,
            } => {
                let coeff = parse_rational(coeff).map_err(at)?;
                let trig = match trig.as_str() {
                    "sin" => Trig::Sin,
                    "cos" => Trig::Cos,
                    other => return Err(at(format!("unknown trig {other:?}"))),
                };
                let freq = parse_rational(freq).map_err(at)?;
                if direction.len() != spec.dim {
                    return Err(SpecError::Invariant(format!(
                        "mode {i}: direction has {} components, dim is {}",
                        direction.len(),
                        spec.dim
                    )));
                }
                let direction = direction
                    .iter()
                    .map(|s| parse_rational(s))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(at)?;
                let mode = Mode::trig_exp(PiScalar::from_rational(coeff), *m, trig, freq, direction)
                    .map_err(|e| SpecError::Invariant(format!("mode {i}: {e}")))?;
                modes.push(mode);
            }
            ModeDoc::PolyHarm { coeff, m, poly } => {
                let coeff = parse_rational(coeff).map_err(at)?;
                let mut terms = Vec::new();
                for (mono, c) in poly {
                    let exps = mono
                        .split_whitespace()
                        .map(|tok| {
                            tok.parse::<u32>()
                                .map_err(|e| at(format!("bad exponent {tok:?}: {e}")))
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    if exps.len() != spec.dim {
                        return Err(SpecError::Invariant(format!(
                            "mode {i}: monomial {mono:?} has {} exponents, dim is {}",
                            exps.len(),
                            spec.dim
                        )));
                    }
                    terms.push((exps, parse_rational(c).map_err(at)?));
                }
                let h = MultiPoly::from_terms(spec.dim, terms);
                let mode = Mode::poly_harm(PiScalar::from_rational(coeff), *m, h)
                    .map_err(|e| SpecError::Invariant(format!("mode {i}: {e}")))?;
                modes.push(mode);
            }
        }
    }
    ModeSum::new(spec.dim, modes).map_err(|e| SpecError::Invariant(e.to_string()))
}

/// Serializes an exact mode sum back to a (normalized) document. Fails when
/// a coefficient carries pi powers, which the rational file format cannot
/// hold.
pub fn modespec_from(
    sum: &ModeSum,
    name: Option<String>,
    domain: Option<[f64; 2]>,
) -> Result<ModeSpec, SpecError> {
    let mut modes = Vec::new();
    for mode in sum.modes() {
        let coeff = mode.coeff.as_rational().ok_or_else(|| {
            SpecError::Invariant(format!(
                "coefficient {} is outside the rational file format",
                mode.coeff
            ))
        })?;
        let doc = match &mode.kind {
            ModeKind::TrigExp {
                trig,
                freq,
                direction,
            } => ModeDoc::TrigExp {
                coeff: frac_string(&coeff),
                m: mode.m,
                trig: trig.to_string(),
                freq: frac_string(freq),
                direction: direction.components().iter().map(frac_string).collect(),
            },
            ModeKind::PolyHarm { h } => ModeDoc::PolyHarm {
                coeff: frac_string(&coeff),
                m: mode.m,
                poly: h
                    .terms()
                    .map(|(mono, c)| {
                        let key = mono
                            .iter()
                            .map(u32::to_string)
                            .collect::<Vec<_>>()
                            .join(" ");
                        (key, frac_string(c))
                    })
                    .collect(),
            },
        };
        modes.push(doc);
    }
    Ok(ModeSpec {
        name,
        dim: sum.dim(),
        domain,
        modes,
    })
}

pub fn serialize_modespec(spec: &ModeSpec) -> String {
    let mut s = serde_json::to_string_pretty(spec).expect("modespec serialization");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    const COUNTEREXAMPLE: &str = r#"{
        "name": "two-line counterexample",
        "dim": 1,
        "domain": [-10.0, 10.0],
        "modes": [
            {"kind": "trig-exp", "coeff": "1", "m": 0, "trig": "sin",
             "freq": "1", "direction": ["1"]}
        ]
    }"#;

    #[test]
    fn parses_counterexample() {
        let (sum, spec) = parse_modespec(COUNTEREXAMPLE).unwrap();
        assert_eq!(sum.modes().len(), 1);
        assert_eq!(spec.name.as_deref(), Some("two-line counterexample"));
        assert!((sum.eval(std::f64::consts::FRAC_PI_2, &[0.0]) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn axis_direction_in_two_dims() {
        let text = r#"{
            "dim": 2,
            "modes": [
                {"kind": "trig-exp", "coeff": "1/1", "m": 0, "trig": "sin",
                 "freq": "1/1", "direction": ["1/1", "0/1"]}
            ]
        }"#;
        assert!(parse_modespec(text).is_ok());
    }

    #[test]
    fn rejects_nonharmonic_polynomial() {
        // y1^2 in d = 2 has Laplacian 2
        let text = r#"{
            "dim": 2,
            "modes": [
                {"kind": "poly-harm", "coeff": "1/1", "m": 0,
                 "poly": {"2 0": "1/1"}}
            ]
        }"#;
        match parse_modespec(text) {
            Err(SpecError::Invariant(msg)) => assert!(msg.contains("harmonic")),
            other => panic!("expected invariant violation, got {other:?}"),
        }
    }

    #[test]
    fn rejects_direction_norm_mismatch() {
        let text = r#"{
            "dim": 2,
            "modes": [
                {"kind": "trig-exp", "coeff": "1/1", "m": 0, "trig": "sin",
                 "freq": "1/1", "direction": ["1/1", "1/1"]}
            ]
        }"#;
        assert!(matches!(parse_modespec(text), Err(SpecError::Invariant(_))));
    }

    #[test]
    fn round_trip_is_normal_form() {
        let (sum, spec) = parse_modespec(COUNTEREXAMPLE).unwrap();
        let normalized = modespec_from(&sum, spec.name.clone(), spec.domain).unwrap();
        let text = serialize_modespec(&normalized);
        let (sum2, spec2) = parse_modespec(&text).unwrap();
        assert_eq!(sum, sum2);
        let text2 = serialize_modespec(&modespec_from(&sum2, spec2.name, spec2.domain).unwrap());
        assert_eq!(text, text2);
        // integers were normalized to explicit fractions
        assert!(text.contains("\"1/1\""));
    }

    #[test]
    fn parse_error_is_reported() {
        assert!(matches!(
            parse_modespec("{not json"),
            Err(SpecError::Parse(_))
        ));
        let bad_rational = r#"{
            "dim": 1,
            "modes": [
                {"kind": "trig-exp", "coeff": "x", "m": 0, "trig": "sin",
                 "freq": "1", "direction": ["1"]}
            ]
        }"#;
        assert!(matches!(
            parse_modespec(bad_rational),
            Err(SpecError::Parse(_))
        ));
    }
}
