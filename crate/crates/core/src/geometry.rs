//! Points, axis-aligned boxes and the three order relations used throughout
//! the crate (minimization convention).
//!
//! Comparisons are exact: coordinates are finite `f64` values and no epsilon
//! is ever applied.

use std::fmt;

use crate::error::{Error, Result};

/// An objective vector. Lower is better in every coordinate.
#[derive(Debug, Clone, PartialEq)]
pub struct Point {
    coords: Vec<f64>,
}

impl Point {
    /// Creates a point, rejecting empty or non-finite input.
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyPoint);
        }
        if let Some(index) = coords.iter().position(|c| !c.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        Ok(Self { coords })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.coords
    }
}

impl std::ops::Index<usize> for Point {
    type Output = f64;

    fn index(&self, m: usize) -> &f64 {
        &self.coords[m]
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (m, c) in self.coords.iter().enumerate() {
            if m > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Axis-aligned box `[lower, upper]`.
#[derive(Debug, Clone, PartialEq)]
pub struct HyperRectangle {
    lower: Point,
    upper: Point,
}

impl HyperRectangle {
    pub fn new(lower: Point, upper: Point) -> Result<Self> {
        check_dims(&lower, &upper)?;
        if let Some(index) = (0..lower.dim()).find(|&m| lower[m] > upper[m]) {
            return Err(Error::InvertedBox { index });
        }
        Ok(Self { lower, upper })
    }

    pub fn lower(&self) -> &Point {
        &self.lower
    }

    pub fn upper(&self) -> &Point {
        &self.upper
    }

    pub fn dim(&self) -> usize {
        self.lower.dim()
    }

    /// Product of side lengths, multiplied from the first objective to the last.
    pub fn volume(&self) -> f64 {
        volume_between(self.lower.coords(), self.upper.coords())
    }

    /// Volume of the intersection with `other`; zero when they only touch.
    pub fn intersection_volume(&self, other: &HyperRectangle) -> f64 {
        let mut vol = 1.0;
        for m in 0..self.dim() {
            let lo = self.lower[m].max(other.lower[m]);
            let hi = self.upper[m].min(other.upper[m]);
            vol *= (hi - lo).max(0.0);
        }
        vol
    }
}

fn check_dims(a: &Point, b: &Point) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    Ok(())
}

/// `a ≺ b`: `a ≤ b` componentwise and `a ≠ b`.
pub fn strictly_dominates(a: &Point, b: &Point) -> Result<bool> {
    check_dims(a, b)?;
    Ok(dominates_raw(a.coords(), b.coords()))
}

/// `a ⪯ b`: `a ≤ b` componentwise.
pub fn weakly_dominates(a: &Point, b: &Point) -> Result<bool> {
    check_dims(a, b)?;
    Ok(weakly_raw(a.coords(), b.coords()))
}

/// `a < b` in every coordinate.
///
/// A box with upper corner `u` has an interior point dominated by the front
/// exactly when some front point is strictly below `u`.
pub fn strictly_below(a: &Point, b: &Point) -> Result<bool> {
    check_dims(a, b)?;
    Ok(below_raw(a.coords(), b.coords()))
}

pub fn box_volume(b: &HyperRectangle) -> f64 {
    b.volume()
}

pub(crate) fn dominates_raw(a: &[f64], b: &[f64]) -> bool {
    let mut strict = false;
    for (x, y) in a.iter().zip(b) {
        if x > y {
            return false;
        }
        strict |= x < y;
    }
    strict
}

pub(crate) fn weakly_raw(a: &[f64], b: &[f64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub(crate) fn below_raw(a: &[f64], b: &[f64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x < y)
}

pub(crate) fn volume_between(lower: &[f64], upper: &[f64]) -> f64 {
    lower
        .iter()
        .zip(upper)
        .fold(1.0, |acc, (l, u)| acc * (u - l))
}
