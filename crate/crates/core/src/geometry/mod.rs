//! Exact integer geometry: points, polytopes, hulls, volumes, regions and
//! rational affine maps.

mod affine;
mod hull;
pub mod linalg;
mod point;
mod polytope;
mod region;

pub use affine::RationalAffineMap;
pub use hull::convex_hull_2d;
pub use point::{orient2d, LatticePoint};
pub use polytope::{affine_rank, dilate, normalized_volume, simplex_determinant, Facet, LatticePolytope};
pub use region::{count_lattice_points, lattice_points_of, LatticePointSource, Region, RegionKind};
