//! Brute-force hypervolume ground truth and seeded random fronts for tests
//! and benchmarks.
//!
//! Nothing here shares code with the decomposition: the hypervolume is the
//! inclusion–exclusion sum over all non-empty subsets of the point set.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::front::ParetoFront;
use crate::geometry::{below_raw, dominates_raw, weakly_raw, Point};

/// Largest point set accepted by [`hv_inclusion_exclusion`].
pub const ORACLE_LIMIT: usize = 20;

/// Dominated hypervolume of `points` bounded by `r`.
///
/// `Σ_{S ≠ ∅} (-1)^(|S|+1) Π_m (r_m - max_{p∈S} p_m)_+`, costing `2^N`.
pub fn hv_inclusion_exclusion(points: &[Point], r: &Point) -> Result<f64> {
    if points.len() > ORACLE_LIMIT {
        return Err(Error::OracleLimit {
            count: points.len(),
            limit: ORACLE_LIMIT,
        });
    }
    for (index, p) in points.iter().enumerate() {
        if p.dim() != r.dim() {
            return Err(Error::DimensionMismatch {
                expected: r.dim(),
                found: p.dim(),
            });
        }
        if !weakly_raw(p.coords(), r.coords()) {
            return Err(Error::OutsideReference { index });
        }
    }

    let mut total = 0.0;
    let mut scratch = vec![vec![f64::NEG_INFINITY; r.dim()]; points.len() + 1];
    add_subsets(points, r.coords(), 0, 0, &mut scratch, &mut total);
    Ok(total)
}

// Visits every subset as an increasing index sequence; scratch[depth] holds
// the coordinatewise max of the subset chosen so far.
fn add_subsets(
    points: &[Point],
    r: &[f64],
    start: usize,
    depth: usize,
    scratch: &mut [Vec<f64>],
    total: &mut f64,
) {
    for i in start..points.len() {
        let (done, rest) = scratch.split_at_mut(depth + 1);
        let worst = &mut rest[0];
        for ((w, prev), c) in worst.iter_mut().zip(&done[depth]).zip(points[i].coords()) {
            *w = prev.max(*c);
        }
        let vol: f64 = worst
            .iter()
            .zip(r)
            .map(|(w, rm)| (rm - w).max(0.0))
            .product();
        // size of the subset is depth + 1
        if depth.is_multiple_of(2) {
            *total += vol;
        } else {
            *total -= vol;
        }
        add_subsets(points, r, i + 1, depth + 1, scratch, total);
    }
}

/// `H(front ∪ {y_new}, r) - H(front, r)` from two oracle evaluations.
///
/// A candidate weakly dominated by a front point, or not strictly below `r`,
/// adds nothing; those return exactly zero instead of the rounding residue
/// of the two sums.
pub fn hvi_oracle(front: &[Point], y_new: &Point, r: &Point) -> Result<f64> {
    let dominated = front
        .iter()
        .any(|p| p.dim() == y_new.dim() && weakly_raw(p.coords(), y_new.coords()));
    let degenerate = y_new.dim() == r.dim() && !below_raw(y_new.coords(), r.coords());
    if dominated || degenerate {
        // still validate the inputs
        hv_inclusion_exclusion(front, r)?;
        hv_inclusion_exclusion(std::slice::from_ref(y_new), r)?;
        return Ok(0.0);
    }
    let mut extended = front.to_vec();
    extended.push(y_new.clone());
    let after = hv_inclusion_exclusion(&extended, r)?;
    let before = hv_inclusion_exclusion(front, r)?;
    Ok((after - before).max(0.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FrontShape {
    /// Points on the positive part of the unit sphere.
    SphereLike,
    /// Points on the unit simplex.
    Linear,
    /// Uniform points in the unit cube, rejected when comparable.
    RandomAntichain,
}

impl FrontShape {
    pub const ALL: [FrontShape; 3] = [
        FrontShape::SphereLike,
        FrontShape::Linear,
        FrontShape::RandomAntichain,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FrontShape::SphereLike => "sphere_like",
            FrontShape::Linear => "linear",
            FrontShape::RandomAntichain => "random_antichain",
        }
    }
}

impl std::str::FromStr for FrontShape {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        FrontShape::ALL
            .into_iter()
            .find(|shape| shape.name() == s)
            .ok_or_else(|| format!("unknown front shape '{s}'"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomFrontSpec {
    pub n_points: usize,
    pub dim: usize,
    pub seed: u64,
    pub shape: FrontShape,
}

impl RandomFrontSpec {
    pub fn new(n_points: usize, dim: usize, seed: u64, shape: FrontShape) -> Self {
        Self {
            n_points,
            dim,
            seed,
            shape,
        }
    }

    fn budget(&self) -> usize {
        1000 * self.n_points + 1000
    }
}

/// Draws a seeded anti-chain of exactly `spec.n_points` points.
///
/// Candidates comparable to (or equal to) an already accepted point are
/// redrawn. Output depends only on `spec`.
pub fn generate_front(spec: &RandomFrontSpec) -> Result<ParetoFront> {
    if spec.n_points == 0 || spec.dim == 0 {
        return Err(Error::InvalidFrontSpec);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let budget = spec.budget();
    let mut accepted: Vec<Vec<f64>> = Vec::with_capacity(spec.n_points);
    let mut draws = 0;
    while accepted.len() < spec.n_points {
        if draws == budget {
            return Err(Error::ResampleBudget {
                requested: spec.n_points,
                reached: accepted.len(),
                budget,
            });
        }
        draws += 1;
        let candidate = draw(&mut rng, spec);
        let comparable = accepted.iter().any(|a| {
            a == &candidate || dominates_raw(a, &candidate) || dominates_raw(&candidate, a)
        });
        if !comparable {
            accepted.push(candidate);
        }
    }
    let points = accepted
        .into_iter()
        .map(Point::new)
        .collect::<Result<Vec<_>>>()?;
    ParetoFront::from_antichain(points)
}

fn draw(rng: &mut ChaCha8Rng, spec: &RandomFrontSpec) -> Vec<f64> {
    // open interval keeps every normalization well defined
    let mut v: Vec<f64> = (0..spec.dim).map(|_| rng.gen_range(1e-6..1.0)).collect();
    match spec.shape {
        FrontShape::SphereLike => {
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            v.iter_mut().for_each(|x| *x /= norm);
        }
        FrontShape::Linear => {
            let sum: f64 = v.iter().sum();
            v.iter_mut().for_each(|x| *x /= sum);
        }
        FrontShape::RandomAntichain => {}
    }
    v
}
