//! Volume vectors and lattice height vectors of ordered point sets.
//!
//! Both vectors are indexed by index combinations in lexicographic order
//! (0-based here; the CLI serializes the same manifest). A volume vector
//! entry is the bordered determinant of a `(d+1)`-subset; a lattice height
//! entry is the value of the primitive equation of the hyperplane through a
//! `d`-subset at one of the remaining points.

use itertools::Itertools;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::linalg::cross_normal;
use crate::geometry::{simplex_determinant, LatticePoint};
use crate::scalar::{gcd_all, Scalar};

/// Lexicographic `k`-combinations of `0..n`.
pub fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).combinations(k)
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Position of a sorted combination in the lexicographic order of
/// `k`-subsets of `0..n`.
pub fn combination_rank(n: usize, combo: &[usize]) -> usize {
    let k = combo.len();
    let mut rank = 0;
    let mut prev = 0;
    for (pos, &c) in combo.iter().enumerate() {
        for skipped in prev..c {
            rank += binomial(n - 1 - skipped, k - 1 - pos);
        }
        prev = c + 1;
    }
    rank
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VolumeVector<T> {
    pub n: usize,
    pub d: usize,
    pub entries: Vec<T>,
}

impl<T: Scalar> VolumeVector<T> {
    /// Index manifest: the combination behind each entry.
    pub fn manifest(&self) -> Vec<Vec<usize>> {
        combinations(self.n, self.d + 1).collect()
    }

    pub fn entry(&self, combo: &[usize]) -> &T {
        &self.entries[combination_rank(self.n, combo)]
    }

    /// Sorted absolute values; invariant under reordering the points and
    /// under unimodular maps.
    pub fn abs_multiset(&self) -> Vec<T> {
        let mut v: Vec<T> = self.entries.iter().map(Signed::abs).collect();
        v.sort();
        v
    }
}

/// `w = content · direction` with `gcd(direction) = 1` and the first nonzero
/// entry of `direction` positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimitiveVolumeVector<T> {
    pub content: T,
    pub direction: Vec<T>,
}

/// Volume vector of an ordered point set in `Z^d`.
pub fn volume_vector<T: Scalar>(points: &[LatticePoint<T>], d: usize) -> Result<VolumeVector<T>> {
    let n = points.len();
    if let Some(p) = points.iter().find(|p| p.dim() != d) {
        return Err(Error::DimensionMismatch { expected: d, found: p.dim() });
    }
    if n < d + 1 {
        return Err(Error::DegenerateInput(format!("{n} points cannot span dimension {d}")));
    }
    let entries: Vec<T> = combinations(n, d + 1)
        .map(|c| {
            let pts: Vec<&LatticePoint<T>> = c.iter().map(|&i| &points[i]).collect();
            simplex_determinant(&pts)
        })
        .collect();
    if entries.iter().all(Zero::is_zero) {
        return Err(Error::DegenerateInput("point set is not full-dimensional".into()));
    }
    Ok(VolumeVector { n, d, entries })
}

pub fn primitive_decomposition<T: Scalar>(w: &VolumeVector<T>) -> Result<PrimitiveVolumeVector<T>> {
    primitive_parts(&w.entries)
}

pub(crate) fn primitive_parts<T: Scalar>(entries: &[T]) -> Result<PrimitiveVolumeVector<T>> {
    let g = gcd_all(entries);
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    let lead_negative = entries.iter().find(|e| !e.is_zero()).is_some_and(Signed::is_negative);
    let content = if lead_negative { -g } else { g };
    let direction = entries.iter().map(|e| e.clone() / content.clone()).collect();
    Ok(PrimitiveVolumeVector { content, direction })
}

/// Hyperplane `normal · x + offset = 0` with a primitive integer normal whose
/// first nonzero entry is positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimitiveHyperplane<T> {
    pub normal: Vec<T>,
    pub offset: T,
}

impl<T: Scalar> PrimitiveHyperplane<T> {
    pub fn eval(&self, p: &LatticePoint<T>) -> T {
        p.dot(&self.normal) + self.offset.clone()
    }
}

/// The hyperplane through `d` points of `Z^d`.
pub fn primitive_hyperplane<T: Scalar>(points: &[&LatticePoint<T>]) -> Result<PrimitiveHyperplane<T>> {
    let Some((base, rest)) = points.split_first() else {
        return Err(Error::DegenerateInput("no points".into()));
    };
    let d = base.dim();
    if points.len() != d {
        return Err(Error::DegenerateInput(format!("need {d} points to define a hyperplane in dimension {d}")));
    }
    let rows: Vec<Vec<T>> = rest.iter().map(|p| p.sub(base)).collect();
    let mut normal = cross_normal(&rows, d);
    let g = gcd_all(&normal);
    if g.is_zero() {
        return Err(Error::DegenerateInput("points do not span a hyperplane".into()));
    }
    let flip = normal.iter().find(|c| !c.is_zero()).is_some_and(Signed::is_negative);
    let scale = if flip { -g } else { g };
    normal.iter_mut().for_each(|c| *c = c.clone() / scale.clone());
    let offset = -base.dot(&normal);
    Ok(PrimitiveHyperplane { normal, offset })
}

/// Block `i` holds, for each `d`-subset of the other points (lexicographic),
/// the height of point `i` over the hyperplane they span; `None` where the
/// subset does not span a hyperplane.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeHeightVector<T> {
    pub n: usize,
    pub d: usize,
    pub blocks: Vec<Vec<Option<T>>>,
}

impl<T: Scalar> LatticeHeightVector<T> {
    /// The `d`-subsets behind block `i`, in entry order.
    pub fn block_manifest(&self, i: usize) -> Vec<Vec<usize>> {
        block_combinations(self.n, self.d, i)
    }

    /// All `|height|` values, sorted; undefined entries are dropped.
    pub fn abs_multiset(&self) -> Vec<T> {
        let mut v: Vec<T> = self.blocks.iter().flatten().flatten().map(Signed::abs).collect();
        v.sort();
        v
    }

    /// Entrywise absolute values, keeping the block layout.
    pub fn abs(&self) -> Vec<Vec<Option<T>>> {
        self.blocks.iter().map(|b| b.iter().map(|e| e.as_ref().map(Signed::abs)).collect()).collect()
    }
}

fn block_combinations(n: usize, d: usize, skip: usize) -> Vec<Vec<usize>> {
    (0..n).filter(|&j| j != skip).combinations(d).collect()
}

pub fn lattice_height_vector<T: Scalar>(points: &[LatticePoint<T>], d: usize) -> Result<LatticeHeightVector<T>> {
    let n = points.len();
    if let Some(p) = points.iter().find(|p| p.dim() != d) {
        return Err(Error::DimensionMismatch { expected: d, found: p.dim() });
    }
    if n < d + 1 {
        return Err(Error::DegenerateInput(format!("{n} points cannot span dimension {d}")));
    }
    let hyperplanes: Vec<Option<PrimitiveHyperplane<T>>> = combinations(n, d)
        .map(|c| {
            let pts: Vec<&LatticePoint<T>> = c.iter().map(|&i| &points[i]).collect();
            primitive_hyperplane(&pts).ok()
        })
        .collect();
    let blocks = (0..n)
        .map(|i| {
            block_combinations(n, d, i)
                .iter()
                .map(|c| hyperplanes[combination_rank(n, c)].as_ref().map(|h| h.eval(&points[i])))
                .collect()
        })
        .collect();
    Ok(LatticeHeightVector { n, d, blocks })
}

/// Heights of each vertex of a simplex over its opposite facet, with the
/// normal pointing into the simplex (so every value is positive).
pub fn simplex_inward_heights<T: Scalar>(points: &[LatticePoint<T>]) -> Result<Vec<T>> {
    let d = points.first().map_or(0, LatticePoint::dim);
    if points.len() != d + 1 {
        return Err(Error::DegenerateInput("simplex needs d + 1 points".into()));
    }
    (0..points.len())
        .map(|i| {
            let others: Vec<&LatticePoint<T>> =
                points.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p).collect();
            let h = primitive_hyperplane(&others)?.eval(&points[i]);
            if h.is_zero() {
                Err(Error::DegenerateInput("simplex is flat".into()))
            } else {
                Ok(h.abs())
            }
        })
        .collect()
}

/// True iff the volume vector content is ±1.
pub fn is_primitive<T: Scalar>(w: &VolumeVector<T>) -> bool {
    gcd_all(&w.entries).is_one()
}
