use std::collections::{BTreeSet, HashSet};
use std::fmt;

use itertools::Itertools;
use num_traits::{Signed, Zero};

use super::hull::hull_vertices_2d;
use super::linalg::{cross_normal, det, rank};
use super::point::{orient2d, LatticePoint};
use crate::error::{Error, Result};
use crate::scalar::{gcd_all, Scalar};

/// A full-dimensional convex lattice polytope given by its vertices.
///
/// Planar polytopes always store their vertices counterclockwise, starting at
/// the lexicographically smallest vertex. In dimension three and higher the
/// vertex list is kept in the caller's order; convex position is not
/// verified there, only distinctness and full dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePolytope<T> {
    dim: usize,
    vertices: Vec<LatticePoint<T>>,
}

/// A facet hyperplane `normal · x + offset >= 0` (inward, primitive normal)
/// together with the indices of the vertices lying on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet<T> {
    pub vertices: Vec<usize>,
    pub normal: Vec<T>,
    pub offset: T,
}

impl<T: Scalar> Facet<T> {
    pub fn eval(&self, p: &LatticePoint<T>) -> T {
        p.dot(&self.normal) + self.offset.clone()
    }
}

/// Affine dimension of a point set (`-1` is reported as 0 for the empty set).
pub fn affine_rank<T: Scalar>(points: &[&LatticePoint<T>]) -> usize {
    match points.split_first() {
        None => 0,
        Some((first, rest)) => {
            let rows: Vec<Vec<T>> = rest.iter().map(|p| p.sub(first)).collect();
            rank(&rows)
        }
    }
}

impl<T: Scalar> LatticePolytope<T> {
    /// Validates a vertex list. In the plane the points must be in strictly
    /// convex position; they are reordered counterclockwise.
    pub fn new(dim: usize, vertices: Vec<LatticePoint<T>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DegenerateInput("dimension must be at least 1".into()));
        }
        if let Some(p) = vertices.iter().find(|p| p.dim() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: p.dim() });
        }
        let distinct: HashSet<&LatticePoint<T>> = vertices.iter().collect();
        if distinct.len() != vertices.len() {
            return Err(Error::DegenerateInput("repeated vertex".into()));
        }
        if dim == 2 {
            let hull = hull_vertices_2d(&vertices);
            if hull.len() < 3 {
                return Err(Error::DegenerateInput("points are collinear".into()));
            }
            if hull.len() != vertices.len() {
                return Err(Error::DegenerateInput("points are not in strictly convex position".into()));
            }
            return Ok(Self::from_ccw_unchecked(hull));
        }
        if vertices.len() < dim + 1 {
            return Err(Error::DegenerateInput(format!("{} points cannot span dimension {dim}", vertices.len())));
        }
        let refs: Vec<&LatticePoint<T>> = vertices.iter().collect();
        if affine_rank(&refs) != dim {
            return Err(Error::DegenerateInput("vertices are not full-dimensional".into()));
        }
        let poly = LatticePolytope { dim, vertices };
        if poly.extreme_points().len() != poly.vertices.len() {
            return Err(Error::DegenerateInput("points are not in convex position".into()));
        }
        Ok(poly)
    }

    /// Indices of the stored points that are vertices of their hull: the
    /// normals of the facets through a vertex span `R^d`.
    fn extreme_points(&self) -> Vec<usize> {
        let facets = self.facets();
        (0..self.vertices.len())
            .filter(|i| {
                let normals: Vec<Vec<T>> =
                    facets.iter().filter(|f| f.vertices.contains(i)).map(|f| f.normal.clone()).collect();
                rank(&normals) == self.dim
            })
            .collect()
    }

    /// Planar polygon from points in strictly convex position. Accepts either
    /// orientation and any starting vertex.
    pub fn polygon(points: &[(i64, i64)]) -> Result<Self> {
        Self::new(2, points.iter().map(|&(x, y)| LatticePoint::from_i64s(&[x, y])).collect())
    }

    /// Caller guarantees a strictly convex counterclockwise cycle; the start
    /// is rotated to the lexicographically smallest vertex.
    pub(crate) fn from_ccw_unchecked(mut vertices: Vec<LatticePoint<T>>) -> Self {
        let start = vertices.iter().enumerate().min_by(|a, b| a.1.cmp(b.1)).map_or(0, |(i, _)| i);
        vertices.rotate_left(start);
        LatticePolytope { dim: 2, vertices }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[LatticePoint<T>] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, p: &LatticePoint<T>) -> Option<usize> {
        self.vertices.iter().position(|v| v == p)
    }

    pub fn facets(&self) -> Vec<Facet<T>> {
        if self.dim == 2 {
            let n = self.vertices.len();
            return (0..n)
                .map(|i| {
                    let j = (i + 1) % n;
                    let (a, b) = (&self.vertices[i], &self.vertices[j]);
                    let mut normal = vec![a[1].clone() - b[1].clone(), b[0].clone() - a[0].clone()];
                    let g = gcd_all(&normal);
                    normal.iter_mut().for_each(|c| *c = c.clone() / g.clone());
                    let offset = -a.dot(&normal);
                    Facet { vertices: vec![i, j], normal, offset }
                })
                .collect();
        }
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut facets = Vec::new();
        for combo in (0..self.vertices.len()).combinations(self.dim) {
            let base = &self.vertices[combo[0]];
            let rows: Vec<Vec<T>> = combo[1..].iter().map(|&i| self.vertices[i].sub(base)).collect();
            let mut normal = cross_normal(&rows, self.dim);
            let g = gcd_all(&normal);
            if g.is_zero() {
                continue;
            }
            normal.iter_mut().for_each(|c| *c = c.clone() / g.clone());
            let mut offset = -base.dot(&normal);
            let values: Vec<T> = self.vertices.iter().map(|v| v.dot(&normal) + offset.clone()).collect();
            let has_pos = values.iter().any(Signed::is_positive);
            let has_neg = values.iter().any(Signed::is_negative);
            if has_pos && has_neg {
                continue;
            }
            if has_neg {
                normal.iter_mut().for_each(|c| *c = -c.clone());
                offset = -offset;
            }
            let on: Vec<usize> = values.iter().positions(Zero::is_zero).collect();
            if seen.insert(on.clone()) {
                facets.push(Facet { vertices: on, normal, offset });
            }
        }
        facets
    }

    pub fn contains(&self, p: &LatticePoint<T>) -> bool {
        if self.dim == 2 {
            let n = self.vertices.len();
            return (0..n).all(|i| !orient2d(&self.vertices[i], &self.vertices[(i + 1) % n], p).is_negative());
        }
        self.facets().iter().all(|f| !f.eval(p).is_negative())
    }

    /// A triangulation using only vertices (pulling from the smallest vertex
    /// index, recursively through the face lattice). Each simplex lists
    /// `d + 1` vertex indices.
    pub fn triangulation(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        if self.dim == 2 {
            return (1..n - 1).map(|i| vec![0, i, i + 1]).collect();
        }
        let facets: Vec<Vec<usize>> = self.facets().into_iter().map(|f| f.vertices).collect();
        let mut out = Vec::new();
        let all: Vec<usize> = (0..n).collect();
        self.pull(&all, self.dim, &facets, &mut Vec::new(), &mut out);
        out
    }

    fn pull(
        &self,
        face: &[usize],
        k: usize,
        facets: &[Vec<usize>],
        prefix: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if face.len() == k + 1 {
            let mut s = prefix.clone();
            s.extend_from_slice(face);
            out.push(s);
            return;
        }
        let apex = face[0];
        let mut subfaces: BTreeSet<Vec<usize>> = BTreeSet::new();
        for f in facets {
            let inter: Vec<usize> = face.iter().copied().filter(|i| f.contains(i)).collect();
            if inter.len() < k || inter.contains(&apex) || inter.len() == face.len() {
                continue;
            }
            let pts: Vec<&LatticePoint<T>> = inter.iter().map(|&i| &self.vertices[i]).collect();
            if affine_rank(&pts) + 1 == k {
                subfaces.insert(inter);
            }
        }
        prefix.push(apex);
        for sub in &subfaces {
            self.pull(sub, k - 1, facets, prefix, out);
        }
        prefix.pop();
    }

    /// `d!` times the Euclidean volume; always a positive integer.
    pub fn normalized_volume(&self) -> T {
        self.triangulation()
            .iter()
            .map(|s| {
                let pts: Vec<&LatticePoint<T>> = s.iter().map(|&i| &self.vertices[i]).collect();
                simplex_determinant(&pts).abs()
            })
            .fold(T::zero(), |a, b| a + b)
    }

    pub fn dilate(&self, k: &T) -> Self {
        assert!(k.is_positive(), "dilation factor must be positive");
        LatticePolytope { dim: self.dim, vertices: self.vertices.iter().map(|v| v.scale(k)).collect() }
    }

    pub fn translate(&self, by: &[T]) -> Self {
        LatticePolytope { dim: self.dim, vertices: self.vertices.iter().map(|v| v.translate(by)).collect() }
    }

    /// Convex hull of arbitrary points: the extreme points become the
    /// vertices (counterclockwise in the plane, sorted otherwise).
    pub fn from_points(dim: usize, points: Vec<LatticePoint<T>>) -> Result<Self> {
        if dim == 2 {
            return super::hull::convex_hull_2d(&points);
        }
        let mut points = points;
        points.sort();
        points.dedup();
        let refs: Vec<&LatticePoint<T>> = points.iter().collect();
        if points.len() < dim + 1 || affine_rank(&refs) != dim {
            return Err(Error::DegenerateInput("points are not full-dimensional".into()));
        }
        let all = LatticePolytope { dim, vertices: points };
        let keep = all.extreme_points();
        Ok(LatticePolytope { dim, vertices: keep.into_iter().map(|i| all.vertices[i].clone()).collect() })
    }

    pub fn convert<U: Scalar>(&self) -> Option<LatticePolytope<U>> {
        Some(LatticePolytope {
            dim: self.dim,
            vertices: self.vertices.iter().map(LatticePoint::convert).collect::<Option<_>>()?,
        })
    }

    /// Vertex coordinates as one flat list; used as a total-order key.
    pub fn serialized(&self) -> Vec<T> {
        self.vertices.iter().flat_map(|v| v.coords().iter().cloned()).collect()
    }

    /// Bounding box of the vertices, per coordinate.
    pub fn bounds(&self) -> Vec<(T, T)> {
        (0..self.dim)
            .map(|c| {
                let lo = self.vertices.iter().map(|v| v[c].clone()).min().expect("nonempty");
                let hi = self.vertices.iter().map(|v| v[c].clone()).max().expect("nonempty");
                (lo, hi)
            })
            .collect()
    }
}

impl<T: fmt::Display> fmt::Display for LatticePolytope<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Signed determinant of the bordered `(d+1) × (d+1)` matrix whose columns
/// are `(1, p_i)`. Zero iff the points are affinely dependent.
pub fn simplex_determinant<T: Scalar>(points: &[&LatticePoint<T>]) -> T {
    let Some((first, rest)) = points.split_first() else {
        return T::one();
    };
    assert_eq!(rest.len(), first.dim(), "need exactly d + 1 points");
    if first.dim() == 2 {
        return orient2d(first, rest[0], rest[1]);
    }
    // Subtracting the first column leaves the matrix of differences, taken
    // column-wise (transpose does not change the determinant).
    let rows: Vec<Vec<T>> = rest.iter().map(|p| p.sub(first)).collect();
    det(rows)
}

pub fn normalized_volume<T: Scalar>(p: &LatticePolytope<T>) -> T {
    p.normalized_volume()
}

pub fn dilate<T: Scalar>(p: &LatticePolytope<T>, k: &T) -> LatticePolytope<T> {
    p.dilate(k)
}
