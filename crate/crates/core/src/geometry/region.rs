use std::fmt;

use num_traits::Signed;

use super::point::LatticePoint;
use super::polytope::LatticePolytope;
use crate::scalar::{Rat, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RegionKind {
    /// `x · x <= r²`
    Ball,
    /// `0 <= x_i <= side`
    Box,
    /// `x · x <= r²` and every `x_i >= 0`
    OrthantBall,
}

/// A bounded region anchored at the origin. Balls carry their squared
/// radius so irrational radii stay exact.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Region<T: Scalar> {
    pub kind: RegionKind,
    pub dim: usize,
    /// Squared radius for balls, side length for boxes.
    pub bound: Rat<T>,
}

impl<T: Scalar> Region<T> {
    pub fn ball(dim: usize, radius: T) -> Self {
        Self::ball_r2(dim, Rat::from_integer(radius.clone() * radius))
    }

    pub fn ball_r2(dim: usize, r2: Rat<T>) -> Self {
        assert!(!r2.is_negative(), "squared radius must be nonnegative");
        Region { kind: RegionKind::Ball, dim, bound: r2 }
    }

    pub fn orthant_ball(dim: usize, r2: Rat<T>) -> Self {
        assert!(!r2.is_negative(), "squared radius must be nonnegative");
        Region { kind: RegionKind::OrthantBall, dim, bound: r2 }
    }

    pub fn cube(dim: usize, side: T) -> Self {
        assert!(!side.is_negative(), "side must be nonnegative");
        Region { kind: RegionKind::Box, dim, bound: Rat::from_integer(side) }
    }

    pub fn contains(&self, p: &LatticePoint<T>) -> bool {
        match self.kind {
            RegionKind::Ball => self.in_ball(p),
            RegionKind::OrthantBall => p.coords().iter().all(|c| !c.is_negative()) && self.in_ball(p),
            RegionKind::Box => {
                p.coords().iter().all(|c| !c.is_negative() && Rat::from_integer(c.clone()) <= self.bound)
            }
        }
    }

    fn in_ball(&self, p: &LatticePoint<T>) -> bool {
        p.norm_sq() * self.bound.denom().clone() <= self.bound.numer().clone()
    }

    /// Largest integer `m >= 0` with every point of the region inside
    /// `[-m, m]^d`.
    fn coordinate_bound(&self) -> T {
        match self.kind {
            RegionKind::Box => self.bound.floor().to_integer(),
            RegionKind::Ball | RegionKind::OrthantBall => {
                let mut m = T::zero();
                loop {
                    let next = m.clone() + T::one();
                    if Rat::from_integer(next.clone() * next.clone()) > self.bound {
                        return m;
                    }
                    m = next;
                }
            }
        }
    }

    /// All lattice points of the region in lexicographic order.
    pub fn lattice_points(&self) -> Vec<LatticePoint<T>> {
        let m = self.coordinate_bound();
        let lo = match self.kind {
            RegionKind::Ball => -m.clone(),
            RegionKind::Box | RegionKind::OrthantBall => T::zero(),
        };
        let ranges = vec![(lo, m); self.dim];
        box_points(&ranges).into_iter().filter(|p| self.contains(p)).collect()
    }
}

impl<T: Scalar> fmt::Display for Region<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            RegionKind::Ball => write!(f, "ball(d={}, r^2={})", self.dim, self.bound),
            RegionKind::OrthantBall => write!(f, "orthant-ball(d={}, r^2={})", self.dim, self.bound),
            RegionKind::Box => write!(f, "box(d={}, side={})", self.dim, self.bound),
        }
    }
}

/// Every integer point of an axis-aligned box, lexicographically.
pub(crate) fn box_points<T: Scalar>(ranges: &[(T, T)]) -> Vec<LatticePoint<T>> {
    let mut out: Vec<Vec<T>> = vec![Vec::new()];
    for (lo, hi) in ranges {
        let mut next = Vec::new();
        for prefix in &out {
            let mut c = lo.clone();
            while c <= *hi {
                let mut v = prefix.clone();
                v.push(c.clone());
                next.push(v);
                c = c + T::one();
            }
        }
        out = next;
    }
    if ranges.is_empty() {
        return Vec::new();
    }
    out.into_iter().map(LatticePoint::new).collect()
}

/// Anything with a finite set of lattice points.
pub trait LatticePointSource<T> {
    fn lattice_points(&self) -> Vec<LatticePoint<T>>;
}

impl<T: Scalar> LatticePointSource<T> for Region<T> {
    fn lattice_points(&self) -> Vec<LatticePoint<T>> {
        Region::lattice_points(self)
    }
}

impl<T: Scalar> LatticePointSource<T> for LatticePolytope<T> {
    fn lattice_points(&self) -> Vec<LatticePoint<T>> {
        let facets = self.facets();
        box_points(&self.bounds()).into_iter().filter(|p| facets.iter().all(|f| !f.eval(p).is_negative())).collect()
    }
}

/// Integer points inside or on the boundary of `target`, lexicographically.
pub fn lattice_points_of<T: Scalar, S: LatticePointSource<T>>(target: &S) -> Vec<LatticePoint<T>> {
    target.lattice_points()
}

/// Number of lattice points without materializing them (polytopes only).
pub fn count_lattice_points<T: Scalar>(p: &LatticePolytope<T>) -> usize {
    lattice_points_of(p).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_ball_has_five_points() {
        let pts = Region::<i64>::ball(2, 1).lattice_points();
        let expect: Vec<_> =
            [(-1, 0), (0, -1), (0, 0), (0, 1), (1, 0)].iter().map(|&(x, y)| LatticePoint::from_i64s(&[x, y])).collect();
        assert_eq!(pts, expect);
    }

    #[test]
    fn zero_ball_is_origin() {
        assert_eq!(Region::<i64>::ball(2, 0).lattice_points(), vec![LatticePoint::origin(2)]);
    }

    #[test]
    fn ball_counts() {
        assert_eq!(Region::<i64>::ball(2, 2).lattice_points().len(), 13);
        assert_eq!(Region::<i64>::ball_r2(2, Rat::new(5, 1)).lattice_points().len(), 21);
        assert_eq!(Region::<i64>::ball_r2(2, Rat::new(9, 4)).lattice_points().len(), 9);
        assert_eq!(Region::<i64>::orthant_ball(2, Rat::from_integer(4)).lattice_points().len(), 6);
        assert_eq!(Region::<i64>::ball(3, 1).lattice_points().len(), 7);
    }

    #[test]
    fn unit_box_corners() {
        assert_eq!(Region::<i64>::cube(2, 1).lattice_points().len(), 4);
    }

    #[test]
    fn triangle_points() {
        let t = LatticePolytope::<i64>::polygon(&[(0, 0), (2, 0), (0, 2)]).unwrap();
        assert_eq!(lattice_points_of(&t).len(), 6);
        let sq = LatticePolytope::<i64>::polygon(&[(0, 0), (3, 0), (3, 3), (0, 3)]).unwrap();
        assert_eq!(count_lattice_points(&sq), 16);
    }

    #[test]
    fn tetrahedron_points() {
        let t = LatticePolytope::<i64>::new(
            3,
            vec![
                LatticePoint::from_i64s(&[0, 0, 0]),
                LatticePoint::from_i64s(&[2, 0, 0]),
                LatticePoint::from_i64s(&[0, 2, 0]),
                LatticePoint::from_i64s(&[0, 0, 2]),
            ],
        )
        .unwrap();
        // points with x+y+z <= 2, all >= 0: C(5,3)
        assert_eq!(lattice_points_of(&t).len(), 10);
    }
}
