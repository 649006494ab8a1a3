use std::fmt;

use num_traits::{One, Signed, Zero};

use super::linalg::{det_rational, solve_rational};
use super::point::LatticePoint;
use crate::error::{Error, Result};
use crate::scalar::{Rat, Scalar};

/// An invertible affine map acting on row vectors: `x ↦ x·A + v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalAffineMap<T: Scalar> {
    matrix: Vec<Vec<Rat<T>>>,
    translation: Vec<Rat<T>>,
}

impl<T: Scalar> RationalAffineMap<T> {
    pub fn new(matrix: Vec<Vec<Rat<T>>>, translation: Vec<Rat<T>>) -> Result<Self> {
        let d = translation.len();
        if matrix.len() != d || matrix.iter().any(|r| r.len() != d) {
            return Err(Error::DimensionMismatch { expected: d, found: matrix.len() });
        }
        if det_rational(&matrix).is_zero() {
            return Err(Error::DegenerateInput("affine map matrix is singular".into()));
        }
        Ok(RationalAffineMap { matrix, translation })
    }

    pub fn from_integers(matrix: &[Vec<T>], translation: &[T]) -> Result<Self> {
        Self::new(
            matrix.iter().map(|r| r.iter().cloned().map(Rat::from_integer).collect()).collect(),
            translation.iter().cloned().map(Rat::from_integer).collect(),
        )
    }

    pub fn identity(dim: usize) -> Self {
        let matrix =
            (0..dim).map(|i| (0..dim).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect()).collect();
        RationalAffineMap { matrix, translation: vec![Rat::zero(); dim] }
    }

    /// The unique affine map sending `src[i]` to `dst[i]` for `d + 1`
    /// affinely independent source points. `None` if the source is
    /// degenerate or the target is (the map would be singular).
    pub fn from_simplices(src: &[&LatticePoint<T>], dst: &[&LatticePoint<T>]) -> Option<Self> {
        let d = src.first()?.dim();
        if src.len() != d + 1 || dst.len() != d + 1 {
            return None;
        }
        let rows = |pts: &[&LatticePoint<T>]| -> Vec<Vec<Rat<T>>> {
            pts[1..].iter().map(|p| p.sub(pts[0]).into_iter().map(Rat::from_integer).collect()).collect()
        };
        let matrix = solve_rational(&rows(src), &rows(dst))?;
        if det_rational(&matrix).is_zero() {
            return None;
        }
        let mut map = RationalAffineMap { matrix, translation: vec![Rat::zero(); d] };
        let image = map.apply(src[0]);
        map.translation = dst[0].coords().iter().zip(image).map(|(t, s)| Rat::from_integer(t.clone()) - s).collect();
        Some(map)
    }

    pub fn dim(&self) -> usize {
        self.translation.len()
    }

    pub fn matrix(&self) -> &[Vec<Rat<T>>] {
        &self.matrix
    }

    pub fn translation(&self) -> &[Rat<T>] {
        &self.translation
    }

    pub fn apply(&self, p: &LatticePoint<T>) -> Vec<Rat<T>> {
        let d = self.dim();
        (0..d)
            .map(|j| {
                (0..d).fold(self.translation[j].clone(), |acc, i| {
                    acc + self.matrix[i][j].clone() * Rat::from_integer(p[i].clone())
                })
            })
            .collect()
    }

    /// Image of a lattice point, if it is a lattice point.
    pub fn apply_lattice(&self, p: &LatticePoint<T>) -> Option<LatticePoint<T>> {
        let img = self.apply(p);
        if img.iter().all(Rat::is_integer) {
            Some(LatticePoint::new(img.into_iter().map(|r| r.to_integer()).collect()))
        } else {
            None
        }
    }

    pub fn determinant(&self) -> Rat<T> {
        det_rational(&self.matrix)
    }

    pub fn is_integral(&self) -> bool {
        self.matrix.iter().flatten().chain(&self.translation).all(Rat::is_integer)
    }

    /// Integer matrix with determinant ±1 and integer translation.
    pub fn is_unimodular(&self) -> bool {
        self.is_integral() && self.determinant().abs().is_one()
    }

    /// `self` followed by `then`.
    pub fn then(&self, then: &Self) -> Self {
        let d = self.dim();
        let matrix = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        (0..d).fold(Rat::zero(), |acc, k| acc + self.matrix[i][k].clone() * then.matrix[k][j].clone())
                    })
                    .collect()
            })
            .collect();
        let translation = (0..d)
            .map(|j| {
                (0..d).fold(then.translation[j].clone(), |acc, k| {
                    acc + self.translation[k].clone() * then.matrix[k][j].clone()
                })
            })
            .collect();
        RationalAffineMap { matrix, translation }
    }

    pub fn inverse(&self) -> Self {
        let d = self.dim();
        let ident: Vec<Vec<Rat<T>>> = Self::identity(d).matrix;
        let inv = solve_rational(&self.matrix, &ident).expect("affine maps are invertible");
        let translation = (0..d)
            .map(|j| -(0..d).fold(Rat::zero(), |acc, k| acc + self.translation[k].clone() * inv[k][j].clone()))
            .collect();
        RationalAffineMap { matrix: inv, translation }
    }

    /// Largest squared Euclidean row norm of the matrix.
    pub fn max_row_norm_sq(&self) -> Rat<T> {
        self.matrix
            .iter()
            .map(|row| row.iter().fold(Rat::zero(), |acc, a| acc + a.clone() * a.clone()))
            .max()
            .unwrap_or_else(Rat::zero)
    }
}

impl<T: Scalar> fmt::Display for RationalAffineMap<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A = [")?;
        for (i, row) in self.matrix.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "{}", cells.join(", "))?;
        }
        let t: Vec<String> = self.translation.iter().map(ToString::to_string).collect();
        write!(f, "], v = ({})", t.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(c: &[i64]) -> LatticePoint<i64> {
        LatticePoint::from_i64s(c)
    }

    #[test]
    fn remark_pair_map() {
        let (a, b, c) = (pt(&[0, 0]), pt(&[9, 0]), pt(&[0, 10]));
        let (x, y, z) = (pt(&[0, 0]), pt(&[6, 0]), pt(&[0, 15]));
        let m = RationalAffineMap::from_simplices(&[&a, &b, &c], &[&x, &y, &z]).unwrap();
        assert_eq!(m.matrix()[0], vec![Rat::new(2, 3), Rat::from_integer(0)]);
        assert_eq!(m.matrix()[1], vec![Rat::from_integer(0), Rat::new(3, 2)]);
        assert_eq!(m.determinant(), Rat::from_integer(1));
        assert!(!m.is_integral());
        assert_eq!(m.apply_lattice(&b), Some(y));
    }

    #[test]
    fn shear_is_unimodular() {
        let m = RationalAffineMap::from_integers(&[vec![1i64, 0], vec![1, 1]], &[2, -1]).unwrap();
        assert!(m.is_unimodular());
        assert_eq!(m.apply_lattice(&pt(&[1, 1])), Some(pt(&[4, 0])));
        let back = m.inverse();
        assert_eq!(back.apply_lattice(&pt(&[4, 0])), Some(pt(&[1, 1])));
        assert_eq!(m.then(&back), RationalAffineMap::identity(2));
    }

    #[test]
    fn degenerate_simplex_has_no_map() {
        let (a, b, c) = (pt(&[0, 0]), pt(&[1, 1]), pt(&[2, 2]));
        let (x, y, z) = (pt(&[0, 0]), pt(&[1, 0]), pt(&[0, 1]));
        assert!(RationalAffineMap::from_simplices(&[&a, &b, &c], &[&x, &y, &z]).is_none());
        assert!(RationalAffineMap::from_simplices(&[&x, &y, &z], &[&a, &b, &c]).is_none());
    }

    #[test]
    fn singular_matrix_rejected() {
        assert!(RationalAffineMap::from_integers(&[vec![1i64, 2], vec![2, 4]], &[0, 0]).is_err());
    }
}
