//! Hypervolume-improvement and volume queries over a finished decomposition.

use crate::decompose::Decomposition;
use crate::error::{Error, Result};
use crate::geometry::{HyperRectangle, Point};

/// Improvement gained by adding `y_new` to the front.
///
/// Sums, over every box, the volume of the part of the box that `y_new`
/// dominates. Boxes are visited in decomposition order.
pub fn hvi(decomp: &Decomposition, y_new: &Point) -> Result<f64> {
    if y_new.dim() != decomp.dim() {
        return Err(Error::DimensionMismatch {
            expected: decomp.dim(),
            found: y_new.dim(),
        });
    }
    Ok(clipped_sum(decomp.boxes(), y_new.coords()))
}

fn clipped_sum(boxes: &[HyperRectangle], y: &[f64]) -> f64 {
    boxes
        .iter()
        .map(|b| {
            let (l, u) = (b.lower().coords(), b.upper().coords());
            (0..y.len()).fold(1.0, |acc, m| acc * (u[m] - l[m].max(y[m])).max(0.0))
        })
        .sum()
}

/// Values from [`hvi_batch`], in candidate order.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct HviBatch {
    pub values: Vec<f64>,
    /// Set for candidates with some coordinate below the decomposition's
    /// lower corner. Their values miss the improvement outside the
    /// bounding box.
    pub below_bound: Vec<bool>,
}

impl HviBatch {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// [`hvi`] for many candidates; the whole batch fails on the first
/// candidate of the wrong dimension.
pub fn hvi_batch(decomp: &Decomposition, candidates: &[Point]) -> Result<HviBatch> {
    let dim = decomp.dim();
    if let Some((index, c)) = candidates.iter().enumerate().find(|(_, c)| c.dim() != dim) {
        return Err(Error::CandidateDimension {
            index,
            expected: dim,
            found: c.dim(),
        });
    }
    let lower = decomp.lower_corner().coords();
    let mut out = HviBatch::default();
    for c in candidates {
        out.values.push(clipped_sum(decomp.boxes(), c.coords()));
        out.below_bound
            .push(c.coords().iter().zip(lower).any(|(y, lo)| y < lo));
    }
    Ok(out)
}

/// Total volume of the accepted boxes.
pub fn nondominated_volume(decomp: &Decomposition) -> f64 {
    decomp.boxes().iter().map(HyperRectangle::volume).sum()
}

/// Dominated hypervolume with respect to the upper corner; exact mode only.
pub fn dominated_hv(decomp: &Decomposition) -> Result<f64> {
    if !decomp.config().is_exact() {
        return Err(Error::ApproximateDominatedHv);
    }
    Ok(decomp.h_all() - nondominated_volume(decomp))
}
