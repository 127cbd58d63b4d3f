//! Box decomposition of the non-dominated space of a Pareto front, for fast
//! hypervolume-improvement (HVI) queries.
//!
//! [`decompose`] splits the region between a front and its bounding box into
//! disjoint hyperrectangles. Boxes whose volume falls below `alpha` times the
//! bounding-box volume are dropped, which caps the box count at `2 / alpha`;
//! `alpha = 0` keeps everything and is exact. [`hvi`] then answers each
//! improvement query with one pass over the boxes.
//!
//! ```
//! use hvbox::{decompose, hvi, pareto_filter, DecomposeConfig, Point};
//!
//! let front = pareto_filter(&[
//!     Point::new(vec![2.0, 8.0]).unwrap(),
//!     Point::new(vec![6.0, 4.0]).unwrap(),
//!     Point::new(vec![8.0, 2.0]).unwrap(),
//! ])
//! .unwrap();
//! let config = DecomposeConfig::exact().with_reference(Point::new(vec![10.0, 10.0]).unwrap());
//! let decomp = decompose(&front, &config).unwrap();
//! assert_eq!(hvi(&decomp, &Point::new(vec![1.0, 1.0]).unwrap()).unwrap(), 45.0);
//! ```

pub mod cli;
pub mod decompose;
pub mod error;
pub mod front;
pub mod geometry;
pub mod hvimprove;
pub mod oracle;

pub use decompose::{
    count_bound, decompose, depth_bound, DecomposeConfig, Decomposition, Diagnostics, IndexWindow,
    UpperBound,
};
pub use error::{Error, Result};
pub use front::{build_grids, pareto_filter, Grids, ParetoFront};
pub use geometry::{
    box_volume, strictly_below, strictly_dominates, weakly_dominates, HyperRectangle, Point,
};
pub use hvimprove::{dominated_hv, hvi, hvi_batch, nondominated_volume, HviBatch};
pub use oracle::{
    generate_front, hv_inclusion_exclusion, hvi_oracle, FrontShape, RandomFrontSpec, ORACLE_LIMIT,
};
