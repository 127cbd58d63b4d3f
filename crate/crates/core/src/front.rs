//! Validated Pareto fronts and their per-objective sorted coordinate grids.

use crate::error::{Error, Result};
use crate::geometry::{dominates_raw, Point};

/// Per-objective sorted coordinates with one sentinel at each end.
///
/// `grids[m]` has length `N + 2`: `grids[m][1..=N]` are the `m`-th
/// coordinates of the front sorted ascending (duplicates kept),
/// `grids[m][0]` is one unit below the smallest and `grids[m][N + 1]` one
/// unit above the largest.
pub type Grids = Vec<Vec<f64>>;

/// A non-empty anti-chain of points sharing one dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct ParetoFront {
    points: Vec<Point>,
    dim: usize,
    grids: Grids,
}

impl ParetoFront {
    /// Wraps points that are already mutually non-dominated.
    ///
    /// Fails if any point strictly dominates another. Exact duplicates are
    /// accepted as-is; use [`pareto_filter`] to collapse them.
    pub fn from_antichain(points: Vec<Point>) -> Result<Self> {
        let dim = check_uniform(&points)?;
        for (i, a) in points.iter().enumerate() {
            for (j, b) in points.iter().enumerate() {
                if i != j && dominates_raw(a.coords(), b.coords()) {
                    return Err(Error::NotAntichain {
                        dominating: i,
                        dominated: j,
                    });
                }
            }
        }
        let grids = sorted_grids(&points, dim);
        Ok(Self { points, dim, grids })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// Number of objectives `M`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of points `N`.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn grids(&self) -> &Grids {
        &self.grids
    }

    /// Largest value of each objective over the front.
    pub fn worst_corner(&self) -> Vec<f64> {
        self.grids.iter().map(|g| g[self.len()]).collect()
    }

    /// Smallest value of each objective over the front.
    pub fn best_corner(&self) -> Vec<f64> {
        self.grids.iter().map(|g| g[1]).collect()
    }
}

fn check_uniform(points: &[Point]) -> Result<usize> {
    let first = points.first().ok_or(Error::EmptyFront)?;
    let dim = first.dim();
    for p in points {
        if p.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: p.dim(),
            });
        }
    }
    Ok(dim)
}

fn sorted_grids(points: &[Point], dim: usize) -> Grids {
    (0..dim)
        .map(|m| {
            let mut column: Vec<f64> = points.iter().map(|p| p[m]).collect();
            // stable, so ties keep input order
            column.sort_by(f64::total_cmp);
            let lo = column[0] - 1.0;
            let hi = column[column.len() - 1] + 1.0;
            let mut grid = Vec::with_capacity(column.len() + 2);
            grid.push(lo);
            grid.extend(column);
            grid.push(hi);
            grid
        })
        .collect()
}

/// Keeps the non-dominated points of `points`, in input order.
///
/// Exact duplicates collapse onto their first occurrence.
pub fn pareto_filter(points: &[Point]) -> Result<ParetoFront> {
    check_uniform(points)?;
    let mut kept: Vec<Point> = Vec::new();
    for (i, candidate) in points.iter().enumerate() {
        let dominated = points
            .iter()
            .any(|other| dominates_raw(other.coords(), candidate.coords()));
        if dominated {
            continue;
        }
        let duplicate = points[..i].iter().any(|other| other == candidate);
        if !duplicate {
            kept.push(candidate.clone());
        }
    }
    ParetoFront::from_antichain(kept)
}

/// Sorted grids with paper sentinels for `front`.
pub fn build_grids(front: &ParetoFront) -> Grids {
    front.grids.clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::hv_inclusion_exclusion;
    use proptest::prelude::*;

    fn pts(rows: &[&[f64]]) -> Vec<Point> {
        rows.iter()
            .map(|r| Point::new(r.to_vec()).unwrap())
            .collect()
    }

    #[test]
    fn filter_drops_dominated() {
        let front = pareto_filter(&pts(&[&[1.0, 1.0], &[2.0, 2.0]])).unwrap();
        assert_eq!(front.points(), pts(&[&[1.0, 1.0]]).as_slice());
    }

    #[test]
    fn filter_keeps_figure_fixture() {
        let raw = pts(&[&[2.0, 8.0], &[6.0, 4.0], &[8.0, 2.0]]);
        let front = pareto_filter(&raw).unwrap();
        assert_eq!(front.points(), raw.as_slice());
    }

    #[test]
    fn filter_collapses_duplicates() {
        let front = pareto_filter(&pts(&[&[3.0], &[3.0]])).unwrap();
        assert_eq!(front.len(), 1);
    }

    #[test]
    fn filter_errors() {
        assert_eq!(pareto_filter(&[]), Err(Error::EmptyFront));
        assert!(matches!(
            pareto_filter(&pts(&[&[1.0, 2.0], &[1.0]])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn from_antichain_rejects_dominated_pairs() {
        let err = ParetoFront::from_antichain(pts(&[&[2.0, 2.0], &[1.0, 1.0]])).unwrap_err();
        assert_eq!(
            err,
            Error::NotAntichain {
                dominating: 1,
                dominated: 0
            }
        );
    }

    #[test]
    fn figure_grids() {
        let front = pareto_filter(&pts(&[&[2.0, 8.0], &[6.0, 4.0], &[8.0, 2.0]])).unwrap();
        let grids = build_grids(&front);
        assert_eq!(grids[0], vec![1.0, 2.0, 6.0, 8.0, 9.0]);
        assert_eq!(grids[1], vec![1.0, 2.0, 4.0, 8.0, 9.0]);
    }

    #[test]
    fn single_point_grid() {
        let front = pareto_filter(&pts(&[&[5.0]])).unwrap();
        assert_eq!(build_grids(&front)[0], vec![4.0, 5.0, 6.0]);
    }

    #[test]
    fn filter_runs_before_grid_build() {
        let front = pareto_filter(&pts(&[&[1.0, 5.0], &[2.0, 5.0]])).unwrap();
        assert_eq!(front.len(), 1);
        assert_eq!(front.grids()[0], vec![0.0, 1.0, 2.0]);
    }

    #[test]
    fn repeated_coordinates_stay_in_grid() {
        let front = pareto_filter(&pts(&[
            &[1.0, 2.0, 3.0],
            &[1.0, 3.0, 2.0],
            &[2.0, 1.0, 1.0],
        ]))
        .unwrap();
        assert_eq!(front.len(), 3);
        assert_eq!(front.grids()[0], vec![0.0, 1.0, 1.0, 2.0, 3.0]);
    }

    fn raw_points() -> impl Strategy<Value = Vec<Point>> {
        (1usize..4).prop_flat_map(|d| {
            prop::collection::vec(prop::collection::vec(0i32..6, d), 1..10).prop_map(|rows| {
                rows.into_iter()
                    .map(|r| Point::new(r.into_iter().map(f64::from).collect()).unwrap())
                    .collect()
            })
        })
    }

    proptest! {
        #[test]
        fn grids_are_sorted_with_padded_ends(raw in raw_points()) {
            let front = pareto_filter(&raw).unwrap();
            let n = front.len();
            for g in front.grids() {
                prop_assert_eq!(g.len(), n + 2);
                prop_assert!(g.windows(2).all(|w| w[0] <= w[1]));
                prop_assert!(g[0] < g[1]);
                prop_assert!(g[n] < g[n + 1]);
            }
        }

        #[test]
        fn filter_is_idempotent(raw in raw_points()) {
            let once = pareto_filter(&raw).unwrap();
            let twice = pareto_filter(once.points()).unwrap();
            prop_assert_eq!(once, twice);
        }

        #[test]
        fn filter_preserves_dominated_hypervolume(raw in raw_points()) {
            let front = pareto_filter(&raw).unwrap();
            prop_assume!(raw.len() <= 12);
            let r = Point::new(vec![7.0; raw[0].dim()]).unwrap();
            let full = hv_inclusion_exclusion(&raw, &r).unwrap();
            let filtered = hv_inclusion_exclusion(front.points(), &r).unwrap();
            prop_assert!((full - filtered).abs() <= 1e-9 * full.max(1.0));
        }
    }
}
