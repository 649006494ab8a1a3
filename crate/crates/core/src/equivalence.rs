//! Affine, unimodular and determinant-one equivalence of lattice polytopes,
//! with canonical forms for lattice triangles and polygons.
//!
//! The deciders match primitive volume vectors: an equivalence carries every
//! `(d+1)`-subset of `P` to a subset of `Q` whose primitive entry has the same
//! absolute value. One anchor simplex of `P` is tried against every matching
//! simplex of `Q` in every order; each attempt fixes a unique affine map,
//! which is accepted only if it carries the vertex set onto the vertex set.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::geometry::{affine_rank, simplex_determinant, LatticePoint, LatticePolytope, RationalAffineMap};
use crate::invariants::{combinations, lattice_height_vector, primitive_parts, volume_vector};
use crate::scalar::{ext_gcd, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Any invertible affine map.
    Affine,
    /// Integer matrix with determinant ±1 and integer translation.
    Unimodular,
    /// Determinant exactly +1, matrix possibly rational.
    DetOne,
}

impl Mode {
    pub fn accepts<T: Scalar>(self, map: &RationalAffineMap<T>) -> bool {
        match self {
            Mode::Affine => true,
            Mode::Unimodular => map.is_unimodular(),
            Mode::DetOne => map.determinant().is_one(),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Affine => "affine",
            Mode::Unimodular => "unimodular",
            Mode::DetOne => "det-one",
        })
    }
}

/// `map` sends point `i` of the source to point `bijection[i]` of the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceWitness<T: Scalar> {
    pub bijection: Vec<usize>,
    pub map: RationalAffineMap<T>,
}

impl<T: Scalar> EquivalenceWitness<T> {
    /// Re-evaluates the map on every source point.
    pub fn verify(&self, src: &[LatticePoint<T>], dst: &[LatticePoint<T>]) -> bool {
        src.len() == dst.len()
            && self.bijection.len() == src.len()
            && src.iter().zip(&self.bijection).all(|(p, &j)| self.map.apply_lattice(p).as_ref() == Some(&dst[j]))
    }
}

fn check_dims<T: Scalar>(p: &LatticePolytope<T>, q: &LatticePolytope<T>) -> Result<()> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch { expected: p.dim(), found: q.dim() });
    }
    Ok(())
}

/// Builds the witness for `map` if it carries `src` bijectively onto `dst`.
fn witness_for<T: Scalar>(
    map: RationalAffineMap<T>,
    src: &[LatticePoint<T>],
    lookup: &HashMap<&LatticePoint<T>, usize>,
) -> Option<EquivalenceWitness<T>> {
    let mut bijection = Vec::with_capacity(src.len());
    let mut used = vec![false; src.len()];
    for p in src {
        let img = map.apply_lattice(p)?;
        let &j = lookup.get(&img)?;
        if std::mem::replace(&mut used[j], true) {
            return None;
        }
        bijection.push(j);
    }
    Some(EquivalenceWitness { bijection, map })
}

fn sorted_abs<T: Scalar>(v: &[T]) -> Vec<T> {
    let mut out: Vec<T> = v.iter().map(Signed::abs).collect();
    out.sort();
    out
}

/// Equivalence search between two finite point sets of `Z^d`, each spanning
/// `R^d`. Returns the witness from the lowest-ranked candidate.
pub fn find_point_set_equivalence<T: Scalar>(
    a: &[LatticePoint<T>],
    b: &[LatticePoint<T>],
    d: usize,
    mode: Mode,
) -> Result<Option<EquivalenceWitness<T>>> {
    let wa = volume_vector(a, d)?;
    let wb = volume_vector(b, d)?;
    if a.len() != b.len() {
        return Ok(None);
    }
    let pa = primitive_parts(&wa.entries)?;
    let pb = primitive_parts(&wb.entries)?;
    if sorted_abs(&pa.direction) != sorted_abs(&pb.direction) {
        return Ok(None);
    }
    if mode != Mode::Affine {
        if pa.content.abs() != pb.content.abs() {
            return Ok(None);
        }
        if mode == Mode::Unimodular && d == 2 {
            let ha = lattice_height_vector(a, d)?.abs_multiset();
            let hb = lattice_height_vector(b, d)?.abs_multiset();
            if ha != hb {
                return Ok(None);
            }
        }
    }

    let n = a.len();
    let combos: Vec<Vec<usize>> = combinations(n, d + 1).collect();
    let mut freq: HashMap<T, usize> = HashMap::new();
    for e in &pa.direction {
        if !e.is_zero() {
            *freq.entry(e.abs()).or_default() += 1;
        }
    }
    // Rarest nonzero |entry|; `min_by_key` keeps the first of equals.
    let (anchor_rank, anchor_value) = pa
        .direction
        .iter()
        .enumerate()
        .filter(|(_, e)| !e.is_zero())
        .min_by_key(|(_, e)| freq[&e.abs()])
        .map(|(i, e)| (i, e.abs()))
        .expect("volume vector is nonzero");
    let anchor: Vec<&LatticePoint<T>> = combos[anchor_rank].iter().map(|&i| &a[i]).collect();
    let lookup: HashMap<&LatticePoint<T>, usize> = b.iter().enumerate().map(|(i, p)| (p, i)).collect();

    for (rank, combo) in combos.iter().enumerate() {
        if pb.direction[rank].abs() != anchor_value {
            continue;
        }
        for order in combo.iter().permutations(d + 1) {
            let target: Vec<&LatticePoint<T>> = order.iter().map(|&&i| &b[i]).collect();
            let Some(map) = RationalAffineMap::from_simplices(&anchor, &target) else {
                continue;
            };
            if !mode.accepts(&map) {
                continue;
            }
            if let Some(w) = witness_for(map, a, &lookup) {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

pub fn find_equivalence<T: Scalar>(
    p: &LatticePolytope<T>,
    q: &LatticePolytope<T>,
    mode: Mode,
) -> Result<Option<EquivalenceWitness<T>>> {
    check_dims(p, q)?;
    if p.num_vertices() != q.num_vertices() {
        return Ok(None);
    }
    find_point_set_equivalence(p.vertices(), q.vertices(), p.dim(), mode)
}

pub fn affine_equivalent<T: Scalar>(
    p: &LatticePolytope<T>,
    q: &LatticePolytope<T>,
) -> Result<Option<EquivalenceWitness<T>>> {
    find_equivalence(p, q, Mode::Affine)
}

pub fn unimodular_equivalent<T: Scalar>(
    p: &LatticePolytope<T>,
    q: &LatticePolytope<T>,
) -> Result<Option<EquivalenceWitness<T>>> {
    find_equivalence(p, q, Mode::Unimodular)
}

pub fn unimodular_affine_equivalent<T: Scalar>(
    p: &LatticePolytope<T>,
    q: &LatticePolytope<T>,
) -> Result<Option<EquivalenceWitness<T>>> {
    find_equivalence(p, q, Mode::DetOne)
}

/// Every witness between two point sets in `mode`, one per distinct map.
/// Used for the census of affine maps; exhaustive over anchor images.
pub fn all_witnesses<T: Scalar>(
    a: &[LatticePoint<T>],
    b: &[LatticePoint<T>],
    d: usize,
    mode: Mode,
) -> Result<Vec<EquivalenceWitness<T>>> {
    if a.len() != b.len() {
        return Ok(Vec::new());
    }
    let anchor_idx = combinations(a.len(), d + 1)
        .find(|c| affine_rank(&c.iter().map(|&i| &a[i]).collect::<Vec<_>>()) == d)
        .ok_or_else(|| Error::DegenerateInput("point set is not full-dimensional".into()))?;
    let anchor: Vec<&LatticePoint<T>> = anchor_idx.iter().map(|&i| &a[i]).collect();
    let lookup: HashMap<&LatticePoint<T>, usize> = b.iter().enumerate().map(|(i, p)| (p, i)).collect();
    // Every bordered determinant scales by the same |det A|.
    let content_a = primitive_parts(&volume_vector(a, d)?.entries)?.content.abs();
    let content_b = primitive_parts(&volume_vector(b, d)?.entries)?.content.abs();
    let anchor_det = simplex_determinant(&anchor).abs();
    let mut out: Vec<EquivalenceWitness<T>> = Vec::new();
    for image in (0..b.len()).permutations(d + 1) {
        let target: Vec<&LatticePoint<T>> = image.iter().map(|&i| &b[i]).collect();
        if simplex_determinant(&target).abs() * content_a.clone() != anchor_det.clone() * content_b.clone() {
            continue;
        }
        let Some(map) = RationalAffineMap::from_simplices(&anchor, &target) else {
            continue;
        };
        if mode.accepts(&map) {
            out.extend(witness_for(map, a, &lookup));
        }
    }
    Ok(out)
}

/// Brute force over all `n!` vertex bijections. Authoritative on small
/// inputs and independent of the volume-vector machinery.
pub fn oracle_equivalent<T: Scalar>(
    p: &LatticePolytope<T>,
    q: &LatticePolytope<T>,
    mode: Mode,
) -> Result<Option<EquivalenceWitness<T>>> {
    oracle_equivalent_capped(p, q, mode, 8)
}

pub fn oracle_equivalent_capped<T: Scalar>(
    p: &LatticePolytope<T>,
    q: &LatticePolytope<T>,
    mode: Mode,
    cap: usize,
) -> Result<Option<EquivalenceWitness<T>>> {
    check_dims(p, q)?;
    let n = p.num_vertices();
    if n > cap || q.num_vertices() > cap {
        return Err(Error::TooLarge { vertices: n.max(q.num_vertices()), cap });
    }
    if n != q.num_vertices() {
        return Ok(None);
    }
    let d = p.dim();
    let (src, dst) = (p.vertices(), q.vertices());
    let basis = combinations(n, d + 1)
        .find(|c| affine_rank(&c.iter().map(|&i| &src[i]).collect::<Vec<_>>()) == d)
        .expect("polytope is full-dimensional");
    let from: Vec<&LatticePoint<T>> = basis.iter().map(|&i| &src[i]).collect();
    for perm in (0..n).permutations(n) {
        let to: Vec<&LatticePoint<T>> = basis.iter().map(|&i| &dst[perm[i]]).collect();
        let Some(map) = RationalAffineMap::from_simplices(&from, &to) else {
            continue;
        };
        let witness = EquivalenceWitness { bijection: perm, map };
        if mode.accepts(&witness.map) && witness.verify(src, dst) {
            return Ok(Some(witness));
        }
    }
    Ok(None)
}

/// Whether two ordered planar point sets have the same volume vector and
/// entrywise equal `|lattice height|` vectors. This is necessary for a
/// unimodular equivalence respecting the order up to an orientation sign,
/// but not sufficient: `(0,0),(1,0),(2,7)` and `(0,0),(1,0),(3,7)` agree on
/// both and are not unimodularly equivalent.
pub fn same_volume_and_heights<T: Scalar>(a: &[LatticePoint<T>], b: &[LatticePoint<T>]) -> Result<bool> {
    let d = 2;
    let (wa, wb) = (volume_vector(a, d)?, volume_vector(b, d)?);
    if wa.n != wb.n {
        return Ok(false);
    }
    let same_vv = wa.entries == wb.entries || wa.entries.iter().zip(&wb.entries).all(|(x, y)| *x == -y.clone());
    Ok(same_vv && lattice_height_vector(a, d)?.abs() == lattice_height_vector(b, d)?.abs())
}

/// Normal form `(0,0), (g,0), (a,b)` of a lattice triangle up to unimodular
/// maps. Fields are ordered so that the derived order compares `(g, b, a)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalTriangle<T> {
    pub g: T,
    pub b: T,
    pub a: T,
}

impl<T: Scalar> CanonicalTriangle<T> {
    pub fn vertices(&self) -> [LatticePoint<T>; 3] {
        [
            LatticePoint::origin(2),
            LatticePoint::new(vec![self.g.clone(), T::zero()]),
            LatticePoint::new(vec![self.a.clone(), self.b.clone()]),
        ]
    }

    pub fn polytope(&self) -> LatticePolytope<T> {
        LatticePolytope::new(2, self.vertices().to_vec()).expect("canonical triangle is nondegenerate")
    }

    pub fn normalized_volume(&self) -> T {
        self.g.clone() * self.b.clone()
    }
}

impl<T: Scalar> fmt::Display for CanonicalTriangle<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(0,0),({},0),({},{})", self.g, self.a, self.b)
    }
}

/// The unimodular map fixing `origin`, sending `along` onto the positive
/// x-axis and `side` into the upper half plane, with `side`'s image sheared
/// to `0 <= x < y`. Returned as a function on difference vectors.
struct EdgeFrame<T> {
    m: [[T; 2]; 2],
    flip: bool,
    shear: T,
}

impl<T: Scalar> EdgeFrame<T> {
    fn new(along: &[T], side: &[T]) -> Option<Self> {
        let (u1, u2) = (&along[0], &along[1]);
        let (g, s, t) = ext_gcd(u1, u2);
        if g.is_zero() {
            return None;
        }
        // Row-vector action x ↦ x·M with columns (s,t) and (-u2/g, u1/g).
        let m = [[s, -(u2.clone() / g.clone())], [t, u1.clone() / g.clone()]];
        let mut frame = EdgeFrame { m, flip: false, shear: T::zero() };
        let [x, y] = frame.rotate(side);
        if y.is_zero() {
            return None;
        }
        frame.flip = y.is_negative();
        let y = y.abs();
        frame.shear = x.div_floor(&y);
        Some(frame)
    }

    fn rotate(&self, v: &[T]) -> [T; 2] {
        let m = &self.m;
        [
            v[0].clone() * m[0][0].clone() + v[1].clone() * m[1][0].clone(),
            v[0].clone() * m[0][1].clone() + v[1].clone() * m[1][1].clone(),
        ]
    }

    fn apply(&self, v: &[T]) -> [T; 2] {
        let [x, y] = self.rotate(v);
        let y = if self.flip { -y } else { y };
        [x - self.shear.clone() * y.clone(), y]
    }
}

/// Unimodular normal form of a lattice triangle: the labeling minimizing the
/// key `(g, b, a)`.
pub fn canonical_triangle<T: Scalar>(t: &LatticePolytope<T>) -> Result<CanonicalTriangle<T>> {
    if t.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: t.dim() });
    }
    if t.num_vertices() != 3 {
        return Err(Error::DegenerateInput(format!("expected a triangle, got {} vertices", t.num_vertices())));
    }
    canonical_triangle_of(t.vertices())
}

pub(crate) fn canonical_triangle_of<T: Scalar>(v: &[LatticePoint<T>]) -> Result<CanonicalTriangle<T>> {
    (0..3)
        .permutations(3)
        .map(|l| {
            let (o, p, q) = (&v[l[0]], &v[l[1]], &v[l[2]]);
            let frame = EdgeFrame::new(&p.sub(o), &q.sub(o))
                .ok_or_else(|| Error::DegenerateInput("triangle is degenerate".into()))?;
            let [g, _] = frame.apply(&p.sub(o));
            let [a, b] = frame.apply(&q.sub(o));
            Ok(CanonicalTriangle { g, b, a })
        })
        .process_results(|keys| keys.min().expect("six labelings"))
}

/// The lexicographically smallest normalized vertex cycle over all anchor
/// edges and both traversal directions. Each cycle is placed with the anchor
/// edge along the positive x-axis and the anchor's other neighbor sheared to
/// `0 <= x < y`, so triangles reduce exactly as in [`canonical_triangle`].
/// Equal keys ⇔ unimodularly equivalent.
pub fn canonical_polygon_key<T: Scalar>(p: &LatticePolytope<T>) -> Result<Vec<T>> {
    if p.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: p.dim() });
    }
    let v = p.vertices();
    let n = v.len();
    let mut best: Option<Vec<T>> = None;
    for start in 0..n {
        for step in [1, n - 1] {
            let cycle: Vec<&LatticePoint<T>> = (0..n).map(|k| &v[(start + k * step) % n]).collect();
            let o = cycle[0];
            let frame = EdgeFrame::new(&cycle[1].sub(o), &cycle[n - 1].sub(o))
                .ok_or_else(|| Error::DegenerateInput("polygon has collinear consecutive vertices".into()))?;
            let key: Vec<T> = cycle.iter().flat_map(|p| frame.apply(&p.sub(o))).collect();
            if best.as_ref().is_none_or(|b| key < *b) {
                best = Some(key);
            }
        }
    }
    best.ok_or_else(|| Error::DegenerateInput("empty polygon".into()))
}

/// Canonical unimodular representative of a lattice polygon, built from
/// [`canonical_polygon_key`].
pub fn canonical_polygon<T: Scalar>(p: &LatticePolytope<T>) -> Result<LatticePolytope<T>> {
    let key = canonical_polygon_key(p)?;
    let vertices = key.chunks(2).map(|c| LatticePoint::new(c.to_vec())).collect();
    LatticePolytope::new(2, vertices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    fn poly(v: &[(i64, i64)]) -> LatticePolytope<i64> {
        LatticePolytope::polygon(v).unwrap()
    }

    fn remark_pair() -> (LatticePolytope<i64>, LatticePolytope<i64>) {
        (poly(&[(0, 0), (9, 0), (0, 10)]), poly(&[(0, 0), (6, 0), (0, 15)]))
    }

    #[test]
    fn remark_pair_modes() {
        let (p1, p2) = remark_pair();
        let w = affine_equivalent(&p1, &p2).unwrap().unwrap();
        assert!(w.verify(p1.vertices(), p2.vertices()));
        assert!(unimodular_equivalent(&p1, &p2).unwrap().is_none());
        let w = unimodular_affine_equivalent(&p1, &p2).unwrap().unwrap();
        assert_eq!(w.map.determinant(), Rat::one());
        let expect = vec![vec![Rat::new(2, 3), Rat::from_integer(0)], vec![Rat::from_integer(0), Rat::new(3, 2)]];
        assert_eq!(w.map.matrix(), expect.as_slice());
    }

    #[test]
    fn self_is_identity() {
        let p = poly(&[(0, 0), (3, 1), (1, 2)]);
        let w = affine_equivalent(&p, &p).unwrap().unwrap();
        assert_eq!(w.map, RationalAffineMap::identity(2));
        assert_eq!(w.bijection, vec![0, 1, 2]);
        let o = oracle_equivalent(&p, &p, Mode::Unimodular).unwrap().unwrap();
        assert_eq!(o.map, RationalAffineMap::identity(2));
    }

    #[test]
    fn square_and_rectangle() {
        let sq = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let rect = poly(&[(0, 0), (2, 0), (2, 1), (0, 1)]);
        assert!(affine_equivalent(&sq, &rect).unwrap().is_some());
        assert!(unimodular_equivalent(&sq, &rect).unwrap().is_none());
    }

    #[test]
    fn shear_between_unit_triangles() {
        let a = poly(&[(0, 0), (1, 0), (0, 1)]);
        let b = poly(&[(0, 0), (1, 0), (1, 1)]);
        let w = unimodular_equivalent(&a, &b).unwrap().unwrap();
        assert!(w.map.is_unimodular());
        assert!(w.verify(a.vertices(), b.vertices()));
    }

    #[test]
    fn mirror_and_dilation() {
        let t = poly(&[(0, 0), (2, 0), (1, 3)]);
        let mirror = poly(&[(0, 0), (0, 2), (3, 1)]);
        assert!(unimodular_affine_equivalent(&t, &mirror).unwrap().is_some());
        let u = poly(&[(0, 0), (1, 0), (0, 1)]);
        assert!(unimodular_affine_equivalent(&u, &u.dilate(&2)).unwrap().is_none());
        assert!(affine_equivalent(&u, &u.dilate(&2)).unwrap().is_some());
    }

    #[test]
    fn vertex_count_mismatch() {
        let t = poly(&[(0, 0), (1, 0), (0, 1)]);
        let sq = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        assert!(affine_equivalent(&t, &sq).unwrap().is_none());
        assert!(oracle_equivalent(&t, &sq, Mode::Affine).unwrap().is_none());
    }

    #[test]
    fn dimension_mismatch() {
        let t = poly(&[(0, 0), (1, 0), (0, 1)]);
        let tet = LatticePolytope::<i64>::new(
            3,
            vec![
                LatticePoint::from_i64s(&[0, 0, 0]),
                LatticePoint::from_i64s(&[1, 0, 0]),
                LatticePoint::from_i64s(&[0, 1, 0]),
                LatticePoint::from_i64s(&[0, 0, 1]),
            ],
        )
        .unwrap();
        assert!(matches!(affine_equivalent(&t, &tet), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn oracle_rejects_large_input() {
        let pts: Vec<(i64, i64)> = vec![(0, 0), (3, 0), (5, 1), (6, 3), (6, 5), (5, 7), (3, 8), (0, 8), (-2, 5)];
        let p = poly(&pts);
        assert_eq!(p.num_vertices(), 9);
        assert!(matches!(oracle_equivalent(&p, &p, Mode::Affine), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn canonical_triangle_examples() {
        let k = canonical_triangle(&poly(&[(0, 0), (2, 0), (1, 2)])).unwrap();
        assert_eq!((k.g, k.b, k.a), (1, 4, 2));
        let k = canonical_triangle(&poly(&[(0, 0), (1, 0), (0, 1)])).unwrap();
        assert_eq!((k.g, k.b, k.a), (1, 1, 0));
    }

    #[test]
    fn canonical_triangle_is_invariant() {
        let t = poly(&[(-1, 2), (3, 0), (2, 5)]);
        let u = RationalAffineMap::from_integers(&[vec![2, 1], vec![1, 1]], &[4, -7]).unwrap();
        let img: Vec<_> = t.vertices().iter().map(|p| u.apply_lattice(p).unwrap()).collect();
        let t2 = LatticePolytope::new(2, img).unwrap();
        assert_eq!(canonical_triangle(&t).unwrap(), canonical_triangle(&t2).unwrap());
    }

    #[test]
    fn canonical_polygon_examples() {
        let sq = canonical_polygon(&poly(&[(0, 0), (1, 0), (1, 1), (0, 1)])).unwrap();
        assert_eq!(sq, poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]));
        let diamond = poly(&[(1, 0), (0, 1), (-1, 0), (0, -1)]);
        let c = canonical_polygon(&diamond).unwrap();
        assert_eq!(canonical_polygon(&c).unwrap(), c);
        let u = RationalAffineMap::from_integers(&[vec![1, 3], vec![0, -1]], &[2, 2]).unwrap();
        let img: Vec<_> = diamond.vertices().iter().map(|p| u.apply_lattice(p).unwrap()).collect();
        assert_eq!(canonical_polygon(&LatticePolytope::new(2, img).unwrap()).unwrap(), c);
        assert_eq!(c.normalized_volume(), 4);
    }

    #[test]
    fn heights_do_not_determine_triangles() {
        let a = [(0, 0), (1, 0), (2, 7)].map(|(x, y)| LatticePoint::<i64>::from_i64s(&[x, y]));
        let b = [(0, 0), (1, 0), (3, 7)].map(|(x, y)| LatticePoint::<i64>::from_i64s(&[x, y]));
        assert!(same_volume_and_heights(&a, &b).unwrap());
        let (pa, pb) = (LatticePolytope::new(2, a.to_vec()).unwrap(), LatticePolytope::new(2, b.to_vec()).unwrap());
        assert!(oracle_equivalent(&pa, &pb, Mode::Unimodular).unwrap().is_none());
        assert!(unimodular_equivalent(&pa, &pb).unwrap().is_none());
        assert_ne!(canonical_triangle(&pa).unwrap(), canonical_triangle(&pb).unwrap());
    }

    #[test]
    fn all_witnesses_of_square() {
        let sq = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let ws = all_witnesses(sq.vertices(), sq.vertices(), 2, Mode::Unimodular).unwrap();
        // dihedral group of order 8
        assert_eq!(ws.len(), 8);
    }
}
