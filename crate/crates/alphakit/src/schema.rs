//! JSON wire formats for boundaries, spectra, and verification reports.
//!
//! Boundary documents are tagged by `"type"`:
//!
//! ```json
//! {"type":"step","arcs":[{"phi":0.0,"theta":0.0}, ...]}
//! {"type":"trigpoly","coeffs":{"1":[re,im], "-2":[re,im]}}
//! {"type":"sampled","values":[[re,im], ...]}
//! ```
//!
//! Spectrum documents carry the weight exponent and stringified indices:
//!
//! ```json
//! {"alpha":1.0,"coeffs":{"1":[1.0,0.0],"-2":[0.3,0.0]}}
//! ```

use std::collections::BTreeMap;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::boundary::BoundaryFunction;
use crate::error::{Error, Result};
use crate::specfun::AlphaParameter;
use crate::spectrum::CoefficientSpectrum;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArcSchema {
    pub phi: f64,
    pub theta: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum BoundarySchema {
    Step { arcs: Vec<ArcSchema> },
    Trigpoly { coeffs: BTreeMap<String, [f64; 2]> },
    Sampled { values: Vec<[f64; 2]> },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpectrumSchema {
    pub alpha: f64,
    pub coeffs: BTreeMap<String, [f64; 2]>,
}

fn parse_index(key: &str) -> Result<i32> {
    key.parse::<i32>()
        .map_err(|_| Error::Domain(format!("coefficient key {key:?} is not an integer")))
}

impl BoundarySchema {
    pub fn to_boundary(&self) -> Result<BoundaryFunction<f64>> {
        match self {
            Self::Step { arcs } => {
                BoundaryFunction::step(arcs.iter().map(|a| (a.phi, a.theta)).collect())
            }
            Self::Trigpoly { coeffs } => {
                let mut map = BTreeMap::new();
                for (k, v) in coeffs {
                    map.insert(parse_index(k)?, Complex::new(v[0], v[1]));
                }
                Ok(BoundaryFunction::TrigPoly { coeffs: map })
            }
            Self::Sampled { values } => {
                BoundaryFunction::sampled(values.iter().map(|v| Complex::new(v[0], v[1])).collect())
            }
        }
    }

    pub fn from_boundary(b: &BoundaryFunction<f64>) -> Self {
        match b {
            BoundaryFunction::StepPhase { arcs } => Self::Step {
                arcs: arcs
                    .iter()
                    .map(|a| ArcSchema { phi: a.phi_start, theta: a.theta })
                    .collect(),
            },
            BoundaryFunction::TrigPoly { coeffs } => Self::Trigpoly {
                coeffs: coeffs
                    .iter()
                    .map(|(&k, &c)| (k.to_string(), [c.re, c.im]))
                    .collect(),
            },
            BoundaryFunction::Sampled { values } => Self::Sampled {
                values: values.iter().map(|v| [v.re, v.im]).collect(),
            },
        }
    }
}

impl SpectrumSchema {
    pub fn to_spectrum(&self) -> Result<CoefficientSpectrum<f64>> {
        let alpha = AlphaParameter::new(self.alpha)?;
        let mut entries = Vec::with_capacity(self.coeffs.len());
        let mut k_max = 1u32;
        for (key, v) in &self.coeffs {
            let k = parse_index(key)?;
            k_max = k_max.max(k.unsigned_abs());
            entries.push((k, Complex::new(v[0], v[1])));
        }
        CoefficientSpectrum::from_entries(alpha, k_max, entries)
    }

    pub fn from_spectrum(s: &CoefficientSpectrum<f64>) -> Self {
        Self {
            alpha: s.alpha().get(),
            coeffs: s.iter().map(|(k, c)| (k.to_string(), [c.re, c.im])).collect(),
        }
    }
}

/// Either kind of input document, distinguished by shape: boundaries carry a
/// `"type"` tag, spectra carry `"alpha"` + `"coeffs"`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum InputDocument {
    Boundary(BoundarySchema),
    Spectrum(SpectrumSchema),
}
