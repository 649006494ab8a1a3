//! Integer lattices generated by polytope vertices.
//!
//! The affine sublattice generated by a polytope is anchored at its first
//! vertex and spanned by the vertex differences `v_i - v_1`. Its index in
//! `Z^d` is the product of the Hermite normal form pivots. A polytope has
//! minimum volume within its affine class exactly when that index is 1, and
//! any polytope can be shrunk to such a representative by the inverse of the
//! HNF basis.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::geometry::linalg::det;
use crate::geometry::{lattice_points_of, LatticePoint, LatticePolytope, RationalAffineMap};
use crate::scalar::{ext_gcd, Rat, Scalar};

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegerMatrix<T> {
    rows: Vec<Vec<T>>,
    cols: usize,
}

impl<T: Scalar> IntegerMatrix<T> {
    pub fn new(rows: Vec<Vec<T>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntegerMatrix { rows, cols }
    }

    pub fn from_i64s(rows: &[&[i64]]) -> Self {
        Self::new(rows.iter().map(|r| r.iter().map(|&v| T::from_i64(v).expect("fits")).collect()).collect())
    }

    pub fn identity(n: usize) -> Self {
        Self::new((0..n).map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect()).collect())
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.rows[r][c]
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.num_rows());
        Self::new(
            self.rows
                .iter()
                .map(|row| {
                    (0..other.cols)
                        .map(|j| {
                            row.iter().zip(&other.rows).fold(T::zero(), |acc, (a, r)| acc + a.clone() * r[j].clone())
                        })
                        .collect()
                })
                .collect(),
        )
    }

    pub fn det(&self) -> T {
        assert_eq!(self.rows.len(), self.cols, "determinant of a non-square matrix");
        det(self.rows.clone())
    }

    fn combine_rows(&mut self, r: usize, i: usize, coeffs: [T; 4]) {
        let [a, b, c, d] = coeffs;
        let (ri, rr) = (self.rows[i].clone(), self.rows[r].clone());
        self.rows[r] = rr.iter().zip(&ri).map(|(x, y)| a.clone() * x.clone() + b.clone() * y.clone()).collect();
        self.rows[i] = rr.iter().zip(&ri).map(|(x, y)| c.clone() * x.clone() + d.clone() * y.clone()).collect();
    }

    fn axpy_row(&mut self, target: usize, q: &T, source: usize) {
        let src = self.rows[source].clone();
        for (t, s) in self.rows[target].iter_mut().zip(src) {
            *t = t.clone() - q.clone() * s;
        }
    }

    fn negate_row(&mut self, r: usize) {
        self.rows[r].iter_mut().for_each(|x| *x = -x.clone());
    }
}

impl<T: fmt::Display> fmt::Display for IntegerMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(|r| r.iter().join(", ")).collect();
        write!(f, "[[{}]]", rows.join("], ["))
    }
}

/// Row-style Hermite normal form `H = U · M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HnfResult<T> {
    pub h: IntegerMatrix<T>,
    pub u: IntegerMatrix<T>,
    /// Column of each pivot, one per nonzero row of `h`.
    pub pivots: Vec<usize>,
}

impl<T: Scalar> HnfResult<T> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Upper triangular, positive pivots, entries above each pivot reduced into
/// `[0, pivot)`, zero rows last.
pub fn hnf<T: Scalar>(m: &IntegerMatrix<T>) -> HnfResult<T> {
    let nrows = m.num_rows();
    let mut h = m.clone();
    let mut u = IntegerMatrix::identity(nrows);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.num_cols() {
        if r == nrows {
            break;
        }
        for i in r + 1..nrows {
            if h.rows[i][c].is_zero() {
                continue;
            }
            let a = h.rows[r][c].clone();
            let b = h.rows[i][c].clone();
            let (g, s, t) = ext_gcd(&a, &b);
            // [[s, t], [-b/g, a/g]] has determinant 1.
            let coeffs = [s, t, -(b / g.clone()), a / g];
            h.combine_rows(r, i, coeffs.clone());
            u.combine_rows(r, i, coeffs);
        }
        if h.rows[r][c].is_zero() {
            continue;
        }
        if h.rows[r][c].is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let q = h.rows[i][c].div_floor(&h.rows[r][c]);
            if !q.is_zero() {
                h.axpy_row(i, &q, r);
                u.axpy_row(i, &q, r);
            }
        }
        pivots.push(c);
        r += 1;
    }
    HnfResult { h, u, pivots }
}

/// The lattice spanned by the vertex differences of a polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SublatticeInfo<T> {
    /// HNF basis, one row per basis vector.
    pub basis: IntegerMatrix<T>,
    /// `[Z^d : L(P)]`
    pub index: T,
}

fn difference_lattice<T: Scalar>(
    anchor: &LatticePoint<T>,
    points: &[LatticePoint<T>],
    dim: usize,
) -> Result<SublatticeInfo<T>> {
    let diffs: Vec<Vec<T>> = points.iter().filter(|p| *p != anchor).map(|p| p.sub(anchor)).collect();
    if diffs.len() < dim {
        return Err(Error::DegenerateInput("differences are not full rank".into()));
    }
    let res = hnf(&IntegerMatrix::new(diffs));
    if res.rank() != dim {
        return Err(Error::DegenerateInput("differences are not full rank".into()));
    }
    let basis = IntegerMatrix::new(res.h.rows[..dim].to_vec());
    let index = (0..dim).fold(T::one(), |acc, i| acc * basis.rows[i][i].clone());
    Ok(SublatticeInfo { basis, index })
}

pub fn sublattice_info<T: Scalar>(p: &LatticePolytope<T>) -> Result<SublatticeInfo<T>> {
    difference_lattice(&p.vertices()[0], p.vertices(), p.dim())
}

/// Same as [`sublattice_info`] but generated by every lattice point of the
/// polytope rather than its vertices. The two can differ, e.g. for
/// `conv{(0,0),(2,0),(0,2)}` (vertex index 4, point index 1).
pub fn point_sublattice_info<T: Scalar>(p: &LatticePolytope<T>) -> Result<SublatticeInfo<T>> {
    difference_lattice(&p.vertices()[0], &lattice_points_of(p), p.dim())
}

/// True iff the vertices generate `Z^d` affinely, i.e. the polytope attains
/// the minimum volume of its affine class.
pub fn attains_vmin<T: Scalar>(p: &LatticePolytope<T>) -> bool {
    sublattice_info(p).is_ok_and(|s| s.index.is_one())
}

/// Maps the generated sublattice onto `Z^d`: translate the first vertex to
/// the origin, then apply the inverse HNF basis. The identity is returned for
/// polytopes that already have index 1.
pub fn shrink_to_vmin<T: Scalar>(p: &LatticePolytope<T>) -> Result<(LatticePolytope<T>, RationalAffineMap<T>)> {
    let info = sublattice_info(p)?;
    let d = p.dim();
    if info.index.is_one() {
        return Ok((p.clone(), RationalAffineMap::identity(d)));
    }
    let basis = RationalAffineMap::from_integers(info.basis.rows(), &vec![T::zero(); d])?;
    let inv = basis.inverse();
    let shift: Vec<T> = p.vertices()[0].coords().iter().map(|c| -c.clone()).collect();
    let map = RationalAffineMap::from_integers(&IntegerMatrix::<T>::identity(d).rows, &shift)?.then(&inv);
    let images =
        p.vertices().iter().map(|v| map.apply_lattice(v).expect("vertices lie in the generated lattice")).collect();
    Ok((LatticePolytope::from_points(d, images)?, map))
}

/// `d` vertex differences forming a basis of `Z^d`, if any exist.
pub fn unimodular_difference_basis<T: Scalar>(p: &LatticePolytope<T>) -> Option<Vec<(usize, usize)>> {
    let n = p.num_vertices();
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    pairs.into_iter().combinations(p.dim()).find(|chosen| {
        let rows: Vec<Vec<T>> = chosen.iter().map(|&(i, j)| p.vertices()[j].sub(&p.vertices()[i])).collect();
        det(rows).abs().is_one()
    })
}

/// Determinant of the shrink map as an exact rational: `1 / index`.
pub fn shrink_factor<T: Scalar>(info: &SublatticeInfo<T>) -> Rat<T> {
    Rat::new(T::one(), info.index.clone())
}
