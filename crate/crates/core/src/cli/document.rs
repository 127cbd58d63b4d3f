//! JSON form of a decomposition, as written by `hvbox decompose`.
//!
//! Floats are written as shortest round-trip decimals, so parsing a document
//! and writing it again reproduces the same bytes.

use serde::{Deserialize, Serialize};

use crate::decompose::{DecomposeConfig, Decomposition, Diagnostics};
use crate::error::{Error, Result};
use crate::front::ParetoFront;
use crate::geometry::{HyperRectangle, Point};
use crate::hvimprove::nondominated_volume;

pub const MODE_PAPER_SENTINEL: &str = "paper_sentinel";
pub const MODE_REFERENCE_CLIPPED: &str = "reference_clipped";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecompositionDocument {
    pub meta: Meta,
    pub h_all: f64,
    pub h_tol: f64,
    /// Sum of the box volumes.
    pub volume_sum: f64,
    pub bounds: BoxRecord,
    pub front: Vec<Vec<f64>>,
    pub boxes: Vec<BoxRecord>,
    pub diagnostics: DiagnosticsRecord,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Meta {
    pub alpha: f64,
    pub mode: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reference: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<Vec<f64>>,
    #[serde(rename = "M")]
    pub m: usize,
    #[serde(rename = "N")]
    pub n: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoxRecord {
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagnosticsRecord {
    pub iterations: usize,
    pub accepted: usize,
    pub pruned_dominated: usize,
    pub pruned_resolution: usize,
    pub pruned_volume: usize,
    pub splits: usize,
    pub max_depth: usize,
}

impl From<&Diagnostics> for DiagnosticsRecord {
    fn from(d: &Diagnostics) -> Self {
        Self {
            iterations: d.iterations,
            accepted: d.accepted,
            pruned_dominated: d.pruned_dominated,
            pruned_resolution: d.pruned_resolution,
            pruned_volume: d.pruned_volume,
            splits: d.splits,
            max_depth: d.max_depth,
        }
    }
}

impl From<DiagnosticsRecord> for Diagnostics {
    fn from(d: DiagnosticsRecord) -> Self {
        Self {
            iterations: d.iterations,
            accepted: d.accepted,
            pruned_dominated: d.pruned_dominated,
            pruned_resolution: d.pruned_resolution,
            pruned_volume: d.pruned_volume,
            splits: d.splits,
            max_depth: d.max_depth,
        }
    }
}

fn record(b: &HyperRectangle) -> BoxRecord {
    BoxRecord {
        lower: b.lower().coords().to_vec(),
        upper: b.upper().coords().to_vec(),
    }
}

impl DecompositionDocument {
    pub fn from_decomposition(d: &Decomposition) -> Self {
        let config = d.config();
        let mode = match config.reference() {
            None => MODE_PAPER_SENTINEL,
            Some(_) => MODE_REFERENCE_CLIPPED,
        };
        Self {
            meta: Meta {
                alpha: config.alpha,
                mode: mode.to_string(),
                reference: config.reference().map(|r| r.coords().to_vec()),
                ideal: config.ideal.as_ref().map(|p| p.coords().to_vec()),
                m: d.dim(),
                n: d.front().len(),
            },
            h_all: d.h_all(),
            h_tol: d.h_tol(),
            volume_sum: nondominated_volume(d),
            bounds: BoxRecord {
                lower: d.lower_corner().coords().to_vec(),
                upper: d.upper_corner().coords().to_vec(),
            },
            front: d
                .front()
                .points()
                .iter()
                .map(|p| p.coords().to_vec())
                .collect(),
            boxes: d.boxes().iter().map(record).collect(),
            diagnostics: d.diagnostics().into(),
        }
    }

    /// Rebuilds the in-memory decomposition, re-checking the stored bounds.
    pub fn to_decomposition(&self) -> Result<Decomposition> {
        let mut config = DecomposeConfig::new(self.meta.alpha);
        match (self.meta.mode.as_str(), &self.meta.reference) {
            (MODE_PAPER_SENTINEL, None) => {}
            (MODE_REFERENCE_CLIPPED, Some(r)) => {
                config = config.with_reference(Point::new(r.clone())?);
            }
            (mode, _) => {
                return Err(Error::InconsistentDecomposition(format!(
                    "mode '{mode}' does not match the reference field"
                )))
            }
        }
        if let Some(ideal) = &self.meta.ideal {
            config = config.with_ideal(Point::new(ideal.clone())?);
        }
        let points = self
            .front
            .iter()
            .map(|c| Point::new(c.clone()))
            .collect::<Result<Vec<_>>>()?;
        let front = ParetoFront::from_antichain(points)?;
        if front.dim() != self.meta.m || front.len() != self.meta.n {
            return Err(Error::InconsistentDecomposition(
                "front size does not match meta".into(),
            ));
        }
        let boxes = self
            .boxes
            .iter()
            .map(|b| {
                HyperRectangle::new(Point::new(b.lower.clone())?, Point::new(b.upper.clone())?)
            })
            .collect::<Result<Vec<_>>>()?;
        let decomp = Decomposition::from_parts(front, config, boxes, self.diagnostics.into())?;
        if decomp.lower_corner().coords() != self.bounds.lower.as_slice()
            || decomp.upper_corner().coords() != self.bounds.upper.as_slice()
            || decomp.h_all() != self.h_all
        {
            return Err(Error::InconsistentDecomposition(
                "bounds do not match the front and mode".into(),
            ));
        }
        Ok(decomp)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}
