use std::fmt;
use std::ops::Index;

use crate::scalar::{int, Scalar};

/// A point of `Z^d`. Ordering is lexicographic on coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint<T>(Vec<T>);

impl<T: Scalar> LatticePoint<T> {
    pub fn new(coords: Vec<T>) -> Self {
        assert!(!coords.is_empty(), "lattice points need dimension >= 1");
        LatticePoint(coords)
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn origin(dim: usize) -> Self {
        Self::new(vec![T::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[T] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<T> {
        self.0
    }

    pub fn sub(&self, other: &Self) -> Vec<T> {
        self.0.iter().zip(&other.0).map(|(a, b)| a.clone() - b.clone()).collect()
    }

    pub fn translate(&self, by: &[T]) -> Self {
        LatticePoint(self.0.iter().zip(by).map(|(a, b)| a.clone() + b.clone()).collect())
    }

    pub fn scale(&self, k: &T) -> Self {
        LatticePoint(self.0.iter().map(|a| a.clone() * k.clone()).collect())
    }

    pub fn dot(&self, w: &[T]) -> T {
        self.0.iter().zip(w).fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    pub fn norm_sq(&self) -> T {
        self.dot(&self.0)
    }

    /// Converts to another scalar type, if every coordinate fits.
    pub fn convert<U: Scalar>(&self) -> Option<LatticePoint<U>> {
        self.0.iter().map(|c| c.to_i128().and_then(U::from_i128)).collect::<Option<Vec<U>>>().map(LatticePoint)
    }
}

impl<T> Index<usize> for LatticePoint<T> {
    type Output = T;

    fn index(&self, i: usize) -> &T {
        &self.0[i]
    }
}

impl<T: fmt::Display> fmt::Display for LatticePoint<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// `(a - o) × (b - o)` for planar points; positive for a left turn.
pub fn orient2d<T: Scalar>(o: &LatticePoint<T>, a: &LatticePoint<T>, b: &LatticePoint<T>) -> T {
    (a[0].clone() - o[0].clone()) * (b[1].clone() - o[1].clone())
        - (a[1].clone() - o[1].clone()) * (b[0].clone() - o[0].clone())
}
