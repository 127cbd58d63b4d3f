//! Stack-driven bisection of the non-dominated space into boxes with
//! volume-based pruning.
//!
//! Each window is a set of per-objective index ranges `(i_m, j_m)` into the
//! sorted grids. A window whose upper corner has no front point strictly
//! below it is accepted whole. Otherwise it is discarded when its lower corner
//! is weakly dominated, when no objective has more than one grid cell left, or
//! when its volume is at most `alpha * h_all`. Remaining windows are split in
//! half along the widest index range.

use crate::error::{Error, Result};
use crate::front::{Grids, ParetoFront};
use crate::geometry::{below_raw, volume_between, weakly_raw, HyperRectangle, Point};

/// Where the upper end of every grid sits.
#[derive(Debug, Clone, PartialEq)]
pub enum UpperBound {
    /// One unit above the worst front value in each objective.
    PaperSentinel,
    /// Replace the upper sentinel with this reference point.
    ReferenceClipped(Point),
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecomposeConfig {
    /// Relative volume tolerance; zero gives the exact decomposition.
    pub alpha: f64,
    pub upper_bound: UpperBound,
    /// Replaces the lower sentinel when set.
    pub ideal: Option<Point>,
}

impl DecomposeConfig {
    pub fn new(alpha: f64) -> Self {
        Self {
            alpha,
            upper_bound: UpperBound::PaperSentinel,
            ideal: None,
        }
    }

    pub fn exact() -> Self {
        Self::new(0.0)
    }

    pub fn with_reference(mut self, reference: Point) -> Self {
        self.upper_bound = UpperBound::ReferenceClipped(reference);
        self
    }

    pub fn with_ideal(mut self, ideal: Point) -> Self {
        self.ideal = Some(ideal);
        self
    }

    pub fn is_exact(&self) -> bool {
        self.alpha == 0.0
    }

    pub fn reference(&self) -> Option<&Point> {
        match &self.upper_bound {
            UpperBound::PaperSentinel => None,
            UpperBound::ReferenceClipped(r) => Some(r),
        }
    }

    /// Checks `alpha` and the optional corners against `front`.
    pub fn validate(&self, front: &ParetoFront) -> Result<()> {
        if !(0.0..1.0).contains(&self.alpha) {
            return Err(Error::InvalidAlpha(self.alpha));
        }
        if let Some(r) = self.reference() {
            check_dim(front, r)?;
            let worst = front.worst_corner();
            if let Some(index) = (0..r.dim()).find(|&m| r[m] < worst[m]) {
                return Err(Error::InvalidReference { index });
            }
        }
        if let Some(ideal) = &self.ideal {
            check_dim(front, ideal)?;
            let best = front.best_corner();
            if let Some(index) = (0..ideal.dim()).find(|&m| ideal[m] > best[m]) {
                return Err(Error::InvalidIdeal { index });
            }
        }
        Ok(())
    }
}

fn check_dim(front: &ParetoFront, p: &Point) -> Result<()> {
    if p.dim() != front.dim() {
        return Err(Error::DimensionMismatch {
            expected: front.dim(),
            found: p.dim(),
        });
    }
    Ok(())
}

/// Per-objective grid index ranges `(i_m, j_m)` with `i_m < j_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexWindow {
    bounds: Vec<(usize, usize)>,
}

impl IndexWindow {
    fn full(dim: usize, n: usize) -> Self {
        Self {
            bounds: vec![(0, n + 1); dim],
        }
    }

    pub fn bounds(&self) -> &[(usize, usize)] {
        &self.bounds
    }

    /// Widest objective, lowest index on ties, with its width.
    fn widest(&self) -> (usize, usize) {
        let mut best = (0, 0);
        for (m, &(i, j)) in self.bounds.iter().enumerate() {
            if j - i > best.1 {
                best = (m, j - i);
            }
        }
        best
    }

    fn split(&self, m: usize) -> (Self, Self) {
        let (i, j) = self.bounds[m];
        let mid = (i + j) / 2;
        let mut low = self.clone();
        let mut high = self.clone();
        low.bounds[m].1 = mid;
        high.bounds[m].0 = mid;
        (low, high)
    }
}

/// Counters collected during one decomposition run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Diagnostics {
    /// Windows popped from the stack.
    pub iterations: usize,
    pub accepted: usize,
    pub pruned_dominated: usize,
    pub pruned_resolution: usize,
    pub pruned_volume: usize,
    pub splits: usize,
    /// Number of splits between the root window and the deepest popped one.
    pub max_depth: usize,
}

/// Result of [`decompose`]: accepted boxes plus bookkeeping.
#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition {
    boxes: Vec<HyperRectangle>,
    h_all: f64,
    h_tol: f64,
    lower: Point,
    upper: Point,
    front: ParetoFront,
    config: DecomposeConfig,
    diagnostics: Diagnostics,
}

impl Decomposition {
    pub fn boxes(&self) -> &[HyperRectangle] {
        &self.boxes
    }

    /// Volume of the bounding box `[lower_corner, upper_corner]`.
    pub fn h_all(&self) -> f64 {
        self.h_all
    }

    /// Pruning threshold `alpha * h_all`.
    pub fn h_tol(&self) -> f64 {
        self.h_tol
    }

    pub fn lower_corner(&self) -> &Point {
        &self.lower
    }

    pub fn upper_corner(&self) -> &Point {
        &self.upper
    }

    pub fn front(&self) -> &ParetoFront {
        &self.front
    }

    pub fn config(&self) -> &DecomposeConfig {
        &self.config
    }

    pub fn diagnostics(&self) -> &Diagnostics {
        &self.diagnostics
    }

    pub fn dim(&self) -> usize {
        self.front.dim()
    }

    /// Reassembles a decomposition from stored parts, checking that the
    /// boxes are consistent with the front and config.
    pub fn from_parts(
        front: ParetoFront,
        config: DecomposeConfig,
        boxes: Vec<HyperRectangle>,
        diagnostics: Diagnostics,
    ) -> Result<Self> {
        config.validate(&front)?;
        let grids = bounded_grids(&front, &config);
        let n = front.len();
        let lower: Vec<f64> = grids.iter().map(|g| g[0]).collect();
        let upper: Vec<f64> = grids.iter().map(|g| g[n + 1]).collect();
        if boxes.len() != diagnostics.accepted {
            return Err(Error::InconsistentDecomposition(format!(
                "{} boxes but {} accepted",
                boxes.len(),
                diagnostics.accepted
            )));
        }
        for (k, b) in boxes.iter().enumerate() {
            if b.dim() != front.dim() {
                return Err(Error::DimensionMismatch {
                    expected: front.dim(),
                    found: b.dim(),
                });
            }
            let inside =
                weakly_raw(&lower, b.lower().coords()) && weakly_raw(b.upper().coords(), &upper);
            if !inside {
                return Err(Error::InconsistentDecomposition(format!(
                    "box {k} leaves the bounding box"
                )));
            }
        }
        let h_all = volume_between(&lower, &upper);
        Ok(Self {
            boxes,
            h_all,
            h_tol: config.alpha * h_all,
            lower: Point::new(lower)?,
            upper: Point::new(upper)?,
            front,
            config,
            diagnostics,
        })
    }
}

fn bounded_grids(front: &ParetoFront, config: &DecomposeConfig) -> Grids {
    let n = front.len();
    let mut grids = front.grids().clone();
    if let Some(r) = config.reference() {
        for (m, g) in grids.iter_mut().enumerate() {
            g[n + 1] = r[m];
        }
    }
    if let Some(ideal) = &config.ideal {
        for (m, g) in grids.iter_mut().enumerate() {
            g[0] = ideal[m];
        }
    }
    grids
}

/// Splits the non-dominated part of the bounding box into disjoint boxes.
///
/// Boxes come out in stack order: low children are pushed before high ones,
/// so high halves are explored first. Identical inputs give identical output.
pub fn decompose(front: &ParetoFront, config: &DecomposeConfig) -> Result<Decomposition> {
    config.validate(front)?;
    let dim = front.dim();
    let n = front.len();
    let grids = bounded_grids(front, config);
    let lower: Vec<f64> = grids.iter().map(|g| g[0]).collect();
    let upper: Vec<f64> = grids.iter().map(|g| g[n + 1]).collect();
    let h_all = volume_between(&lower, &upper);
    let h_tol = config.alpha * h_all;

    let points: Vec<&[f64]> = front.points().iter().map(Point::coords).collect();
    let mut diag = Diagnostics::default();
    let mut boxes = Vec::new();
    let mut stack = vec![(IndexWindow::full(dim, n), 0usize)];
    let mut l = vec![0.0; dim];
    let mut u = vec![0.0; dim];

    while let Some((window, depth)) = stack.pop() {
        diag.iterations += 1;
        diag.max_depth = diag.max_depth.max(depth);
        for (m, &(i, j)) in window.bounds().iter().enumerate() {
            l[m] = grids[m][i];
            u[m] = grids[m][j];
        }

        if !points.iter().any(|p| below_raw(p, &u)) {
            diag.accepted += 1;
            boxes.push(HyperRectangle::new(
                Point::new(l.clone())?,
                Point::new(u.clone())?,
            )?);
            continue;
        }

        let (split_dim, width) = window.widest();
        let volume = volume_between(&l, &u);
        if points.iter().any(|p| weakly_raw(p, &l)) {
            diag.pruned_dominated += 1;
            continue;
        }
        if width <= 1 {
            diag.pruned_resolution += 1;
            continue;
        }
        if volume <= h_tol {
            diag.pruned_volume += 1;
            continue;
        }

        diag.splits += 1;
        let (low, high) = window.split(split_dim);
        stack.push((low, depth + 1));
        stack.push((high, depth + 1));
    }

    Ok(Decomposition {
        boxes,
        h_all,
        h_tol,
        lower: Point::new(lower)?,
        upper: Point::new(upper)?,
        front: front.clone(),
        config: config.clone(),
        diagnostics: diag,
    })
}

/// Upper bound `⌈2 / alpha⌉` on the number of accepted boxes.
pub fn count_bound(alpha: f64) -> Result<usize> {
    if alpha == 0.0 {
        return Err(Error::UnboundedExactMode);
    }
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::InvalidAlpha(alpha));
    }
    Ok((2.0 / alpha).ceil() as usize)
}

/// `M * (⌈log2(N + 1)⌉ + 1)`, the split-depth ceiling checked by the bench.
pub fn depth_bound(n: usize, dim: usize) -> usize {
    let log = (n + 1).next_power_of_two().trailing_zeros() as usize;
    dim * (log + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::front::pareto_filter;
    use crate::oracle::{generate_front, hv_inclusion_exclusion, FrontShape, RandomFrontSpec};
    use proptest::prelude::*;

    fn p(c: &[f64]) -> Point {
        Point::new(c.to_vec()).unwrap()
    }

    fn figure_front() -> ParetoFront {
        pareto_filter(&[p(&[2.0, 8.0]), p(&[6.0, 4.0]), p(&[8.0, 2.0])]).unwrap()
    }

    fn volume_sum(d: &Decomposition) -> f64 {
        d.boxes().iter().map(HyperRectangle::volume).sum()
    }

    fn rect(l: &[f64], u: &[f64]) -> HyperRectangle {
        HyperRectangle::new(p(l), p(u)).unwrap()
    }

    #[test]
    fn figure_trace_with_alpha_tenth() {
        let d = decompose(&figure_front(), &DecomposeConfig::new(0.1)).unwrap();
        assert_eq!(d.h_all(), 64.0);
        assert_eq!(d.h_tol(), 6.4);
        assert!(d.boxes().contains(&rect(&[6.0, 1.0], &[8.0, 4.0])));
        assert!(d.diagnostics().pruned_volume >= 1);
        // hand trace: root, [6,9]x[1,9], [6,9]x[4,9] (dominated),
        // [6,9]x[1,4], [8,9]x[1,4] (volume 3), then [6,8]x[1,4] accepted first
        assert_eq!(d.boxes()[0], rect(&[6.0, 1.0], &[8.0, 4.0]));
        assert!(d.boxes().len() <= count_bound(0.1).unwrap());
    }

    #[test]
    fn single_point_exact() {
        let front = pareto_filter(&[p(&[5.0])]).unwrap();
        let d = decompose(&front, &DecomposeConfig::exact()).unwrap();
        assert_eq!(d.boxes(), &[rect(&[4.0], &[5.0])]);
    }

    #[test]
    fn figure_exact_volumes() {
        let front = figure_front();
        let sentinel = decompose(&front, &DecomposeConfig::exact()).unwrap();
        assert_eq!(volume_sum(&sentinel), 43.0);
        let clipped = decompose(
            &front,
            &DecomposeConfig::exact().with_reference(p(&[10.0, 10.0])),
        )
        .unwrap();
        assert_eq!(clipped.h_all(), 81.0);
        assert_eq!(volume_sum(&clipped), 45.0);
    }

    #[test]
    fn tied_upper_corner_cell_is_kept_in_exact_mode() {
        let d = decompose(&figure_front(), &DecomposeConfig::exact()).unwrap();
        let cell = rect(&[2.0, 4.0], &[6.0, 8.0]);
        let covered: f64 = d.boxes().iter().map(|b| b.intersection_volume(&cell)).sum();
        assert_eq!(covered, cell.volume());
    }

    #[test]
    fn config_validation() {
        let front = figure_front();
        for alpha in [1.5, 1.0, -0.1, f64::NAN] {
            assert!(matches!(
                decompose(&front, &DecomposeConfig::new(alpha)),
                Err(Error::InvalidAlpha(_))
            ));
        }
        let bad_ref = DecomposeConfig::exact().with_reference(p(&[10.0, 7.0]));
        assert_eq!(
            decompose(&front, &bad_ref).unwrap_err(),
            Error::InvalidReference { index: 1 }
        );
        let bad_ideal = DecomposeConfig::exact().with_ideal(p(&[3.0, 0.0]));
        assert_eq!(
            decompose(&front, &bad_ideal).unwrap_err(),
            Error::InvalidIdeal { index: 0 }
        );
        let wrong_dim = DecomposeConfig::exact().with_reference(p(&[10.0]));
        assert!(matches!(
            decompose(&front, &wrong_dim),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn reference_equal_to_worst_values_is_allowed() {
        let front = figure_front();
        let d = decompose(
            &front,
            &DecomposeConfig::exact().with_reference(p(&[8.0, 8.0])),
        )
        .unwrap();
        let hv = hv_inclusion_exclusion(front.points(), &p(&[8.0, 8.0])).unwrap();
        assert_eq!(volume_sum(&d), d.h_all() - hv);
    }

    #[test]
    fn ideal_override_moves_lower_corner() {
        let front = figure_front();
        let config = DecomposeConfig::exact()
            .with_reference(p(&[10.0, 10.0]))
            .with_ideal(p(&[0.0, 0.0]));
        let d = decompose(&front, &config).unwrap();
        assert_eq!(d.lower_corner(), &p(&[0.0, 0.0]));
        assert_eq!(d.h_all(), 100.0);
        assert_eq!(volume_sum(&d), 100.0 - 36.0);
    }

    #[test]
    fn count_bound_values() {
        assert_eq!(count_bound(0.1), Ok(20));
        assert_eq!(count_bound(0.5), Ok(4));
        assert_eq!(count_bound(1e-3), Ok(2000));
        assert_eq!(count_bound(0.0), Err(Error::UnboundedExactMode));
    }

    #[test]
    fn depth_bound_values() {
        assert_eq!(depth_bound(1, 1), 2);
        assert_eq!(depth_bound(3, 2), 6);
        assert_eq!(depth_bound(4, 2), 8);
    }

    #[test]
    fn duplicate_coordinates_keep_exactness() {
        let front = pareto_filter(&[
            p(&[1.0, 2.0, 3.0]),
            p(&[1.0, 3.0, 2.0]),
            p(&[2.0, 1.0, 1.0]),
        ])
        .unwrap();
        let d = decompose(&front, &DecomposeConfig::exact()).unwrap();
        let hv = hv_inclusion_exclusion(front.points(), d.upper_corner()).unwrap();
        assert!((volume_sum(&d) - (d.h_all() - hv)).abs() < 1e-12);
    }

    fn random_front(n: usize, m: usize, seed: u64, shape: u8) -> ParetoFront {
        // a one-objective anti-chain has a single point
        let n = if m == 1 { 1 } else { n };
        let shape = match shape % 3 {
            0 => FrontShape::SphereLike,
            1 => FrontShape::Linear,
            _ => FrontShape::RandomAntichain,
        };
        generate_front(&RandomFrontSpec::new(n, m, seed, shape)).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn diagnostics_add_up(n in 1usize..30, m in 1usize..5, seed in 0u64..1000, shape in 0u8..3, a in 0usize..4) {
            let alpha = [0.0, 0.5, 0.1, 0.01][a];
            let front = random_front(n, m, seed, shape);
            let d = decompose(&front, &DecomposeConfig::new(alpha)).unwrap();
            let g = d.diagnostics();
            prop_assert_eq!(
                g.accepted + g.pruned_dominated + g.pruned_resolution + g.pruned_volume + g.splits,
                g.iterations
            );
            prop_assert_eq!(g.accepted, d.boxes().len());
            prop_assert!(g.iterations >= g.accepted);
            prop_assert!(g.max_depth <= depth_bound(front.len(), m));
        }

        #[test]
        fn boxes_stay_in_bounding_box(n in 1usize..15, m in 1usize..5, seed in 0u64..1000, shape in 0u8..3) {
            let front = random_front(n, m, seed, shape);
            let d = decompose(&front, &DecomposeConfig::new(0.01)).unwrap();
            for b in d.boxes() {
                prop_assert!(weakly_raw(d.lower_corner().coords(), b.lower().coords()));
                prop_assert!(weakly_raw(b.upper().coords(), d.upper_corner().coords()));
            }
        }

        #[test]
        fn output_is_deterministic(n in 1usize..20, m in 1usize..5, seed in 0u64..1000, shape in 0u8..3) {
            let front = random_front(n, m, seed, shape);
            let config = DecomposeConfig::new(0.01);
            prop_assert_eq!(decompose(&front, &config).unwrap(), decompose(&front, &config).unwrap());
        }
    }
}
