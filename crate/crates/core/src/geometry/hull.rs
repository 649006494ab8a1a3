use super::point::{orient2d, LatticePoint};
use super::polytope::LatticePolytope;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Strictly convex hull vertices of planar points, counterclockwise, starting
/// at the lexicographically smallest point. Points on edges are dropped.
pub(crate) fn hull_vertices_2d<T: Scalar>(points: &[LatticePoint<T>]) -> Vec<LatticePoint<T>> {
    let mut pts: Vec<LatticePoint<T>> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    // Andrew's monotone chain; `<= 0` pops collinear points.
    let mut lower: Vec<LatticePoint<T>> = Vec::with_capacity(pts.len());
    for p in &pts {
        while lower.len() >= 2 && !orient2d(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive() {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<LatticePoint<T>> = Vec::with_capacity(pts.len());
    for p in pts.iter().rev() {
        while upper.len() >= 2 && !orient2d(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive() {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Convex hull of a planar point set as a lattice polygon.
///
/// Fails with [`Error::DegenerateInput`] when fewer than three distinct
/// points are given or all of them are collinear.
pub fn convex_hull_2d<T: Scalar>(points: &[LatticePoint<T>]) -> Result<LatticePolytope<T>> {
    if let Some(p) = points.iter().find(|p| p.dim() != 2) {
        return Err(Error::DimensionMismatch { expected: 2, found: p.dim() });
    }
    let hull = hull_vertices_2d(points);
    if hull.len() < 3 {
        return Err(Error::DegenerateInput("fewer than three distinct points or all points collinear".into()));
    }
    Ok(LatticePolytope::from_ccw_unchecked(hull))
}
