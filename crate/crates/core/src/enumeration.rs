//! Exhaustive experiments on lattice polygons: enumeration in a region,
//! class censuses, classes of fixed volume, the `L_V` family, the
//! `Q_r`/`S_r` construction with shaving, and scans over the enumerated sets.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::equivalence::{affine_equivalent, all_witnesses, canonical_polygon_key, canonical_triangle, Mode};
use crate::error::{Error, Result};
use crate::geometry::{convex_hull_2d, lattice_points_of, orient2d, LatticePoint, LatticePolytope, Region, RegionKind};
use crate::invariants::{primitive_parts, volume_vector};
use crate::lattice::{attains_vmin, sublattice_info};
use crate::scalar::{int, Rat, Scalar};

/// Size limits for the exhaustive routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub region_points: usize,
    pub oracle_vertices: usize,
    pub max_volume: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { region_points: 40, oracle_vertices: 8, max_volume: 12 }
    }
}

impl FromStr for Caps {
    type Err = Error;

    /// Comma-separated `key=value` overrides of the defaults, e.g.
    /// `region_points=80,volume=16`.
    fn from_str(s: &str) -> Result<Self> {
        let mut caps = Caps::default();
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::Unsupported(format!("cap override `{item}` is not key=value")))?;
            let n: u64 = value
                .trim()
                .parse()
                .map_err(|_| Error::Unsupported(format!("cap `{key}` needs a nonnegative integer")))?;
            match key.trim() {
                "region_points" => caps.region_points = n as usize,
                "oracle_vertices" => caps.oracle_vertices = n as usize,
                "volume" | "max_volume" => caps.max_volume = n,
                other => return Err(Error::Unsupported(format!("unknown cap `{other}`"))),
            }
        }
        Ok(caps)
    }
}

fn check_planar<T: Scalar>(region: &Region<T>) -> Result<()> {
    if region.dim != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: region.dim });
    }
    Ok(())
}

fn region_points<T: Scalar>(region: &Region<T>, caps: &Caps) -> Result<Vec<LatticePoint<T>>> {
    check_planar(region)?;
    let pts = region.lattice_points();
    if pts.len() > caps.region_points {
        return Err(Error::RegionTooLarge { points: pts.len(), cap: caps.region_points });
    }
    Ok(pts)
}

/// Limits applied while growing a polygon.
#[derive(Clone, Debug, Default)]
struct Search<T> {
    max_vertices: Option<usize>,
    max_volume: Option<T>,
}

/// Every convex polygon with vertices in `points` whose lexicographically
/// smallest vertex is `points[start]`.
fn polygons_from<T: Scalar>(points: &[LatticePoint<T>], start: usize, search: &Search<T>) -> Vec<LatticePolytope<T>> {
    let s = &points[start];
    let mut cands: Vec<&LatticePoint<T>> = points.iter().filter(|p| *p > s).collect();
    // Every candidate lies in the half plane `x > s.x or (x = s.x, y > s.y)`,
    // so angle around `s` is a total order; collinear points by distance.
    cands.sort_by(|a, b| {
        let o = orient2d(s, a, b);
        if o.is_zero() {
            LatticePoint::new(a.sub(s)).norm_sq().cmp(&LatticePoint::new(b.sub(s)).norm_sq())
        } else if o.is_positive() {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    });
    let mut out = Vec::new();
    let mut chain: Vec<usize> = Vec::new();
    for first in 0..cands.len() {
        chain.push(first);
        grow(s, &cands, &mut chain, T::zero(), search, &mut out);
        chain.pop();
    }
    out
}

fn grow<T: Scalar>(
    s: &LatticePoint<T>,
    cands: &[&LatticePoint<T>],
    chain: &mut Vec<usize>,
    area: T,
    search: &Search<T>,
    out: &mut Vec<LatticePolytope<T>>,
) {
    let last = *chain.last().expect("chain is nonempty");
    let prev = if chain.len() >= 2 { cands[chain[chain.len() - 2]] } else { s };
    let c_last = cands[last];
    if chain.len() >= 2 && orient2d(prev, c_last, s).is_positive() {
        let mut vertices = Vec::with_capacity(chain.len() + 1);
        vertices.push(s.clone());
        vertices.extend(chain.iter().map(|&i| cands[i].clone()));
        out.push(LatticePolytope::from_ccw_unchecked(vertices));
    }
    if search.max_vertices.is_some_and(|m| chain.len() + 1 >= m) {
        return;
    }
    for next in last + 1..cands.len() {
        let c = cands[next];
        let wedge = orient2d(s, c_last, c);
        if !wedge.is_positive() || !orient2d(prev, c_last, c).is_positive() {
            continue;
        }
        let area = area.clone() + wedge;
        if search.max_volume.as_ref().is_some_and(|m| area > *m) {
            continue;
        }
        chain.push(next);
        grow(s, cands, chain, area, search, out);
        chain.pop();
    }
}

/// Sort key for the deterministic output order: vertex count, then the
/// counterclockwise vertex cycle from the lexicographically smallest vertex.
fn order_key<T: Scalar>(p: &LatticePolytope<T>) -> (usize, Vec<T>) {
    (p.num_vertices(), p.serialized())
}

fn polygons_on<T: Scalar>(
    points: &[LatticePoint<T>],
    starts: impl IntoParallelIterator<Item = usize>,
    search: &Search<T>,
) -> Vec<LatticePolytope<T>> {
    let mut all: Vec<LatticePolytope<T>> =
        starts.into_par_iter().flat_map_iter(|i| polygons_from(points, i, search)).collect();
    all.par_sort_by_cached_key(order_key);
    all
}

/// All convex lattice polygons whose vertices are lattice points of
/// `region`, each exactly once, ordered by vertex count and then vertex
/// cycle. Parallel over start vertices; the result does not depend on the
/// thread count.
pub fn enumerate_convex_polygons<T: Scalar>(
    region: &Region<T>,
    max_vertices: Option<usize>,
    caps: &Caps,
) -> Result<Vec<LatticePolytope<T>>> {
    let pts = region_points(region, caps)?;
    let search = Search { max_vertices, max_volume: None };
    Ok(polygons_on(&pts, 0..pts.len(), &search))
}

/// `|H| >= |K| >= |A|` for the polygons of a region.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCensus<T: Scalar> {
    pub region: Region<T>,
    pub h: usize,
    pub k: usize,
    pub a: usize,
    /// Normalized volume to number of polygons.
    pub volume_histogram: BTreeMap<T, usize>,
}

/// Representatives of the unimodular classes among `polys`, keyed by
/// canonical form, in first-seen order.
pub fn unimodular_representatives<T: Scalar>(polys: &[LatticePolytope<T>]) -> Result<Vec<LatticePolytope<T>>> {
    let keys: Vec<Vec<T>> = polys.par_iter().map(canonical_polygon_key).collect::<Result<_>>()?;
    let mut seen = HashSet::new();
    Ok(polys.iter().zip(keys).filter(|(_, k)| seen.insert(k.clone())).map(|(p, _)| p.clone()).collect())
}

/// Representatives of the affine classes among `polys`: polygons are
/// bucketed by vertex count and primitive volume multiset, then compared
/// pairwise with the affine decider inside each bucket.
pub fn affine_representatives<T: Scalar>(polys: &[LatticePolytope<T>]) -> Result<Vec<LatticePolytope<T>>> {
    let mut buckets: HashMap<(usize, Vec<T>), Vec<usize>> = HashMap::new();
    let mut reps: Vec<usize> = Vec::new();
    for (i, p) in polys.iter().enumerate() {
        let bucket = buckets.entry(affine_bucket(p)?).or_default();
        let mut found = false;
        for &j in bucket.iter() {
            if affine_equivalent(&polys[j], p)?.is_some() {
                found = true;
                break;
            }
        }
        if !found {
            bucket.push(i);
            reps.push(i);
        }
    }
    Ok(reps.into_iter().map(|i| polys[i].clone()).collect())
}

/// Vertex count and sorted `|primitive volume vector|`; equal for affinely
/// equivalent polytopes.
fn affine_bucket<T: Scalar>(p: &LatticePolytope<T>) -> Result<(usize, Vec<T>)> {
    let w = volume_vector(p.vertices(), p.dim())?;
    let mut dir: Vec<T> = primitive_parts(&w.entries)?.direction.iter().map(Signed::abs).collect();
    dir.sort();
    Ok((p.num_vertices(), dir))
}

pub fn census<T: Scalar>(region: &Region<T>, caps: &Caps) -> Result<ClassCensus<T>> {
    let polys = enumerate_convex_polygons(region, None, caps)?;
    census_of(region.clone(), &polys)
}

pub fn census_of<T: Scalar>(region: Region<T>, polys: &[LatticePolytope<T>]) -> Result<ClassCensus<T>> {
    let uni = unimodular_representatives(polys)?;
    let aff = affine_representatives(&uni)?;
    let mut volume_histogram = BTreeMap::new();
    for p in polys {
        *volume_histogram.entry(p.normalized_volume()).or_default() += 1;
    }
    Ok(ClassCensus { region, h: polys.len(), k: uni.len(), a: aff.len(), volume_histogram })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    Triangles,
    All,
}

impl FromStr for Shape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "triangles" => Ok(Shape::Triangles),
            "all" => Ok(Shape::All),
            other => Err(Error::Unsupported(format!("unknown shape `{other}`"))),
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Shape::Triangles => "triangles",
            Shape::All => "all",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VolumeClasses<T> {
    pub volume: T,
    pub shape: Shape,
    /// Side of the search box `[0, side]^2`; `None` for the box-free
    /// triangle generation.
    pub box_side: Option<T>,
    /// Whether the search provably found every class.
    pub complete: bool,
    /// One canonical polygon per unimodular class.
    pub representatives: Vec<LatticePolytope<T>>,
}

impl<T> VolumeClasses<T> {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }
}

/// Box side that contains a representative of every class of normalized
/// volume `v`: put an edge on the x-axis and shear the highest vertex
/// `(a, h)` to `0 <= a < h`. Every triangle on three vertices has normalized
/// volume at most `v`, which confines all vertices to `0 <= y <= h <= v` and
/// `-v <= x <= v`.
pub fn complete_box_side<T: Scalar>(v: &T) -> T {
    int::<T>(2) * v.clone()
}

/// Unimodular classes of lattice polygons with normalized volume exactly `v`.
/// Triangles come from direct key generation and are always complete; all
/// shapes are searched in the box `[0, side]^2`, which is complete once
/// `side >= 2v` (see [`complete_box_side`]). The default side is `2v`.
pub fn classes_by_volume<T: Scalar>(
    v: &T,
    shape: Shape,
    box_side: Option<&T>,
    caps: &Caps,
) -> Result<VolumeClasses<T>> {
    if !v.is_positive() {
        return Err(Error::DegenerateInput("volume must be positive".into()));
    }
    match shape {
        Shape::Triangles => Ok(VolumeClasses {
            volume: v.clone(),
            shape,
            box_side: None,
            complete: true,
            representatives: triangle_classes(v)?,
        }),
        Shape::All => {
            let vv = v.to_u64().unwrap_or(u64::MAX);
            if vv > caps.max_volume {
                return Err(Error::CapExceeded { what: "volume", value: vv, cap: caps.max_volume });
            }
            let side = box_side.cloned().unwrap_or_else(|| complete_box_side(v));
            let reps = polygon_classes_in_box(v, &side)?;
            Ok(VolumeClasses {
                volume: v.clone(),
                shape,
                complete: side >= complete_box_side(v),
                box_side: Some(side),
                representatives: reps,
            })
        }
    }
}

fn divisors<T: Scalar>(v: &T) -> Vec<T> {
    let mut out = Vec::new();
    let mut g = T::one();
    while g <= *v {
        if (v.clone() % g.clone()).is_zero() {
            out.push(g.clone());
        }
        g = g + T::one();
    }
    out
}

fn triangle_classes<T: Scalar>(v: &T) -> Result<Vec<LatticePolytope<T>>> {
    let mut keys = BTreeSet::new();
    for g in divisors(v) {
        let b = v.clone() / g.clone();
        let mut a = T::zero();
        while a < b {
            let t = LatticePolytope::new(
                2,
                vec![
                    LatticePoint::origin(2),
                    LatticePoint::new(vec![g.clone(), T::zero()]),
                    LatticePoint::new(vec![a.clone(), b.clone()]),
                ],
            )?;
            keys.insert(canonical_triangle(&t)?);
            a = a + T::one();
        }
    }
    Ok(keys.into_iter().map(|k| k.polytope()).collect())
}

fn polygon_classes_in_box<T: Scalar>(v: &T, side: &T) -> Result<Vec<LatticePolytope<T>>> {
    let region = Region::cube(2, side.clone());
    let pts = region.lattice_points();
    // Translation invariance: the lexicographically smallest vertex can be
    // taken on the line x = 0.
    let starts: Vec<usize> = (0..pts.len()).filter(|&i| pts[i][0].is_zero()).collect();
    let search = Search { max_vertices: None, max_volume: Some(v.clone()) };
    let polys: Vec<LatticePolytope<T>> =
        polygons_on(&pts, starts, &search).into_iter().filter(|p| p.normalized_volume() == *v).collect();
    let keys: BTreeSet<Vec<T>> = polys.par_iter().map(canonical_polygon_key).collect::<Result<_>>()?;
    keys.into_iter()
        .map(|k| LatticePolytope::new(2, k.chunks(2).map(|c| LatticePoint::new(c.to_vec())).collect()))
        .collect()
}

/// Index-one representatives of the affine classes whose minimum normalized
/// volume is `m`.
pub fn vmin_classes<T: Scalar>(m: &T, caps: &Caps) -> Result<Vec<LatticePolytope<T>>> {
    let side = complete_box_side(m);
    let classes = classes_by_volume(m, Shape::All, Some(&side), caps)?;
    let index_one: Vec<LatticePolytope<T>> = classes.representatives.into_iter().filter(attains_vmin).collect();
    affine_representatives(&index_one)
}

/// `L_V`: for every divisor `i` of `V`, the index-one classes of volume
/// `V / i` under `(x, y) -> (i x, y)`. All members have normalized volume
/// `V`; the member built from divisor `i` has sublattice index `i`.
pub fn build_lv<T: Scalar>(v: &T, caps: &Caps) -> Result<Vec<LatticePolytope<T>>> {
    let mut out = Vec::new();
    for i in divisors(v) {
        let m = v.clone() / i.clone();
        for p in vmin_classes(&m, caps)? {
            out.push(stretch_first_axis(&p, &i)?);
        }
    }
    Ok(out)
}

fn stretch_first_axis<T: Scalar>(p: &LatticePolytope<T>, k: &T) -> Result<LatticePolytope<T>> {
    let pts = p
        .vertices()
        .iter()
        .map(|x| {
            let mut c = x.coords().to_vec();
            c[0] = c[0].clone() * k.clone();
            LatticePoint::new(c)
        })
        .collect();
    LatticePolytope::new(p.dim(), pts)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConstructionCase {
    /// The rightmost column of `Q'_r` holds only `(p, 0)`.
    One,
    /// The rightmost column also holds `(p, 1)`.
    Two,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionReport<T: Scalar> {
    pub r2: Rat<T>,
    pub p: T,
    pub case: ConstructionCase,
    pub q_prime: LatticePolytope<T>,
    pub q: LatticePolytope<T>,
    pub s: LatticePolytope<T>,
    pub b: Vec<LatticePoint<T>>,
    /// `normalized_volume(S_r) - normalized_volume(Q_r)`
    pub volume_delta: T,
    /// Lattice points of `S_r` not in `Q_r`, lexicographically.
    pub new_points: Vec<LatticePoint<T>>,
    /// The difference predicted by the case formula: `B` without its first
    /// element.
    pub predicted_new_points: Vec<LatticePoint<T>>,
    pub identity_holds: bool,
    pub s_contains_q: bool,
    pub b_are_vertices: bool,
}

/// The planar construction `Q_r = 2 conv(B_r ∩ R_+^2 ∩ Z^2)` and its
/// extension `S_r` by the two-point set `B` at the right end.
pub fn construct_qs<T: Scalar>(r2: &Rat<T>) -> Result<ConstructionReport<T>> {
    if *r2 < Rat::from_integer(T::one()) {
        return Err(Error::DegenerateInput("construction needs r >= 1".into()));
    }
    let pts = Region::orthant_ball(2, r2.clone()).lattice_points();
    let q_prime = convex_hull_2d(&pts)?;
    let p = pts.iter().map(|x| x[0].clone()).max().expect("origin is in the region");
    let column_height = pts.iter().filter(|x| x[0] == p).map(|x| x[1].clone()).max().expect("nonempty column");
    let case = if column_height.is_zero() { ConstructionCase::One } else { ConstructionCase::Two };
    let two = int::<T>(2);
    let q = q_prime.dilate(&two);
    let bx = match case {
        ConstructionCase::One => two.clone() * p.clone(),
        ConstructionCase::Two => two.clone() * p.clone() + T::one(),
    };
    let b = vec![LatticePoint::new(vec![bx.clone(), T::zero()]), LatticePoint::new(vec![bx, T::one()])];
    let mut s_pts = q.vertices().to_vec();
    s_pts.extend(b.iter().cloned());
    let s = convex_hull_2d(&s_pts)?;

    let q_lattice: HashSet<LatticePoint<T>> = lattice_points_of(&q).into_iter().collect();
    let s_lattice = lattice_points_of(&s);
    let new_points: Vec<LatticePoint<T>> = s_lattice.iter().filter(|x| !q_lattice.contains(*x)).cloned().collect();
    let predicted_new_points = b[1..].to_vec();
    Ok(ConstructionReport {
        r2: r2.clone(),
        p,
        case,
        volume_delta: s.normalized_volume() - q.normalized_volume(),
        identity_holds: new_points == predicted_new_points,
        s_contains_q: q.vertices().iter().all(|v| s.contains(v)),
        b_are_vertices: b.iter().all(|x| s.vertex_index(x).is_some()),
        q_prime,
        q,
        s,
        b,
        new_points,
        predicted_new_points,
    })
}

/// `conv((Q ∩ Z^2) \ W)` and the normalized volume removed.
pub fn delta_shave<T: Scalar>(q: &LatticePolytope<T>, w: &[LatticePoint<T>]) -> Result<(LatticePolytope<T>, T)> {
    if let Some(x) = w.iter().find(|x| q.vertex_index(x).is_none()) {
        return Err(Error::NotAVertex(x.to_string()));
    }
    let removed: HashSet<&LatticePoint<T>> = w.iter().collect();
    let rest: Vec<LatticePoint<T>> = lattice_points_of(q).into_iter().filter(|x| !removed.contains(x)).collect();
    let shaved = match q.dim() {
        2 => convex_hull_2d(&rest).map_err(|_| Error::DegenerateResult)?,
        d => LatticePolytope::from_points(d, rest).map_err(|_| Error::DegenerateResult)?,
    };
    let delta = q.normalized_volume() - shaved.normalized_volume();
    Ok((shaved, delta))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitivityReport<T> {
    pub examined: usize,
    pub index_one: usize,
    /// Index-one polygons whose volume vector has content `|k| > 1`.
    pub counterexamples: Vec<LatticePolytope<T>>,
}

pub fn primitivity_scan<T: Scalar>(region: &Region<T>, caps: &Caps) -> Result<PrimitivityReport<T>> {
    let polys = enumerate_convex_polygons(region, None, caps)?;
    primitivity_scan_of(&polys)
}

pub fn primitivity_scan_of<T: Scalar>(polys: &[LatticePolytope<T>]) -> Result<PrimitivityReport<T>> {
    let mut index_one = 0;
    let mut counterexamples = Vec::new();
    for p in polys {
        if !sublattice_info(p)?.index.is_one() {
            continue;
        }
        index_one += 1;
        let w = volume_vector(p.vertices(), p.dim())?;
        if primitive_parts(&w.entries)?.content.abs() > T::one() {
            counterexamples.push(p.clone());
        }
    }
    Ok(PrimitivityReport { examined: polys.len(), index_one, counterexamples })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMapCensus<T: Scalar> {
    pub region: Region<T>,
    pub pairs_examined: usize,
    pub budget_exhausted: bool,
    /// Distinct linear parts.
    pub distinct_matrices: usize,
    /// Distinct maps (linear part and translation).
    pub distinct_maps: usize,
    pub max_row_norm_sq: Rat<T>,
    /// Lattice triangles in the region.
    pub triangles: usize,
    /// `6 · triangles²`: a map between two polygons of the region is fixed by
    /// the image of one triangle of source vertices, labeled in one of six
    /// ways.
    pub map_bound: u128,
    pub contains_identity: bool,
    /// Linear parts, sorted, for inspection.
    pub matrices: Vec<Vec<Vec<Rat<T>>>>,
}

impl<T: Scalar> AffineMapCensus<T> {
    /// `sqrt(max row norm²) / r^2`, expected to stay bounded as `r` grows.
    /// `None` for boxes.
    pub fn empirical_constant(&self) -> Option<f64> {
        if self.region.kind == RegionKind::Box {
            return None;
        }
        let f = |r: &Rat<T>| Some(r.numer().to_f64()? / r.denom().to_f64()?);
        let norm = f(&self.max_row_norm_sq)?.sqrt();
        let r2 = f(&self.region.bound)?;
        (r2 > 0.0).then(|| norm / r2)
    }
}

/// Affine maps between pairs of polygons in a region, up to `budget` ordered
/// pairs with equal vertex counts.
pub fn affine_map_census<T: Scalar>(region: &Region<T>, budget: usize, caps: &Caps) -> Result<AffineMapCensus<T>> {
    let polys = enumerate_convex_polygons(region, None, caps)?;
    let triangles = polys.iter().filter(|p| p.num_vertices() == 3).count();
    let keys: Vec<(usize, Vec<T>)> = polys.par_iter().map(affine_bucket).collect::<Result<_>>()?;
    // Pairs in different buckets admit no map; they still count toward the budget.
    let pairs: Vec<(usize, usize)> = (0..polys.len())
        .flat_map(|i| (0..polys.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| polys[i].num_vertices() == polys[j].num_vertices())
        .collect();
    let budget_exhausted = pairs.len() > budget;
    let pairs = &pairs[..pairs.len().min(budget)];
    let maps: Vec<_> = pairs
        .par_iter()
        .filter(|&&(i, j)| keys[i] == keys[j])
        .map(|&(i, j)| all_witnesses(polys[i].vertices(), polys[j].vertices(), 2, Mode::Affine))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .map(|w| w.map)
        .collect();
    let distinct: HashSet<_> = maps.iter().collect();
    let matrices: BTreeSet<Vec<Vec<Rat<T>>>> = maps.iter().map(|m| m.matrix().to_vec()).collect();
    let max_row_norm_sq = maps.iter().map(|m| m.max_row_norm_sq()).max().unwrap_or_else(Rat::zero);
    let t = triangles as u128;
    Ok(AffineMapCensus {
        region: region.clone(),
        pairs_examined: pairs.len(),
        budget_exhausted,
        distinct_matrices: matrices.len(),
        distinct_maps: distinct.len(),
        max_row_norm_sq,
        triangles,
        map_bound: 6 * t * t,
        contains_identity: maps.iter().any(|m| *m == crate::geometry::RationalAffineMap::identity(2)),
        matrices: matrices.into_iter().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equivalence::{oracle_equivalent, unimodular_equivalent};
    use num_traits::One;

    fn poly(v: &[(i64, i64)]) -> LatticePolytope<i64> {
        LatticePolytope::polygon(v).unwrap()
    }

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn caps_parse() {
        let c: Caps = "region_points=80, volume=20".parse().unwrap();
        assert_eq!(c, Caps { region_points: 80, oracle_vertices: 8, max_volume: 20 });
        assert!("region_points".parse::<Caps>().is_err());
        assert!("speed=3".parse::<Caps>().is_err());
    }

    #[test]
    fn unit_ball_polygons() {
        let polys = enumerate_convex_polygons(&Region::<i64>::ball(2, 1), None, &caps()).unwrap();
        assert_eq!(polys.len(), 9);
        assert_eq!(polys.iter().filter(|p| p.num_vertices() == 3).count(), 8);
        assert_eq!(polys[8], poly(&[(-1, 0), (0, -1), (1, 0), (0, 1)]));
    }

    #[test]
    fn unit_box_and_empty() {
        let polys = enumerate_convex_polygons(&Region::<i64>::cube(2, 1), None, &caps()).unwrap();
        assert_eq!(polys.len(), 5);
        assert!(enumerate_convex_polygons(&Region::<i64>::ball(2, 0), None, &caps()).unwrap().is_empty());
        let tri_only = enumerate_convex_polygons(&Region::<i64>::cube(2, 1), Some(3), &caps()).unwrap();
        assert_eq!(tri_only.len(), 4);
    }

    #[test]
    fn region_cap() {
        let err = enumerate_convex_polygons(&Region::<i64>::ball(2, 4), None, &caps()).unwrap_err();
        assert!(matches!(err, Error::RegionTooLarge { points: 49, cap: 40 }));
    }

    #[test]
    fn enumeration_matches_subset_scan() {
        // independent count: subsets of the 3x3 box whose hull keeps them all
        let pts = Region::<i64>::cube(2, 2).lattice_points();
        let mut expect = 0;
        for mask in 1u32..(1 << pts.len()) {
            let sub: Vec<_> = (0..pts.len()).filter(|i| mask >> i & 1 == 1).map(|i| pts[i].clone()).collect();
            if sub.len() >= 3 {
                if let Ok(h) = convex_hull_2d(&sub) {
                    if h.num_vertices() == sub.len() {
                        expect += 1;
                    }
                }
            }
        }
        let polys = enumerate_convex_polygons(&Region::<i64>::cube(2, 2), None, &caps()).unwrap();
        assert_eq!(polys.len(), expect);
    }

    #[test]
    fn census_examples() {
        let c = census(&Region::<i64>::ball(2, 1), &caps()).unwrap();
        assert_eq!((c.h, c.k, c.a), (9, 3, 2));
        let c = census(&Region::<i64>::cube(2, 1), &caps()).unwrap();
        assert_eq!((c.h, c.k, c.a), (5, 2, 2));
        let c = census(&Region::<i64>::ball(2, 0), &caps()).unwrap();
        assert_eq!((c.h, c.k, c.a), (0, 0, 0));
    }

    #[test]
    fn triangle_classes_small() {
        let c = |v: i64| classes_by_volume(&v, Shape::Triangles, None, &caps()).unwrap();
        assert_eq!(c(1).count(), 1);
        assert_eq!(c(2).count(), 1);
        let reps = c(90).representatives;
        let p1 = canonical_triangle(&poly(&[(0, 0), (9, 0), (0, 10)])).unwrap().polytope();
        let p2 = canonical_triangle(&poly(&[(0, 0), (6, 0), (0, 15)])).unwrap().polytope();
        assert_ne!(p1, p2);
        assert!(reps.contains(&p1) && reps.contains(&p2));
    }

    #[test]
    fn all_shapes_small_volumes() {
        let c = |v: i64| classes_by_volume(&v, Shape::All, Some(&(2 * v)), &caps()).unwrap();
        assert_eq!(c(1).count(), 1);
        assert_eq!(c(2).count(), 2);
        assert!(c(2).complete);
        let counts: Vec<usize> =
            (1..=6).map(|v| classes_by_volume(&v, Shape::All, None, &caps()).unwrap().count()).collect();
        assert_eq!(counts, [1, 2, 3, 7, 6, 13]);
        assert!(!classes_by_volume(&4i64, Shape::All, Some(&4), &caps()).unwrap().complete);
        assert!(matches!(classes_by_volume(&13i64, Shape::All, None, &caps()), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn lv_small() {
        let lv = build_lv(&2i64, &caps()).unwrap();
        let sq = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let t2 = poly(&[(0, 0), (2, 0), (0, 1)]);
        assert_eq!(lv.len(), 2);
        assert!(lv.iter().all(|p| p.normalized_volume() == 2));
        assert!(lv.iter().any(|p| unimodular_equivalent(p, &sq).unwrap().is_some()));
        assert!(lv.iter().any(|p| unimodular_equivalent(p, &t2).unwrap().is_some()));
        assert_eq!(build_lv(&1i64, &caps()).unwrap(), vec![poly(&[(0, 0), (1, 0), (0, 1)])]);
    }

    #[test]
    fn construction_r2() {
        let rep = construct_qs::<i64>(&Rat::from_integer(4)).unwrap();
        // (2,2) is a boundary point of Q_2, not a vertex
        assert_eq!(rep.q, poly(&[(0, 0), (4, 0), (0, 4)]));
        assert!(lattice_points_of(&rep.q).contains(&LatticePoint::from_i64s(&[2, 2])));
        assert_eq!(rep.p, 2);
        assert_eq!(rep.case, ConstructionCase::One);
        assert_eq!(rep.b, vec![LatticePoint::from_i64s(&[4, 0]), LatticePoint::from_i64s(&[4, 1])]);
        assert!(rep.s.vertex_index(&LatticePoint::from_i64s(&[4, 1])).is_some());
        assert!(rep.identity_holds && rep.s_contains_q && rep.b_are_vertices);
        assert!(rep.volume_delta >= 0);
    }

    #[test]
    fn construction_r1() {
        let rep = construct_qs::<i64>(&Rat::one()).unwrap();
        assert_eq!(rep.q_prime, poly(&[(0, 0), (1, 0), (0, 1)]));
        assert_eq!(rep.p, 1);
        assert_eq!(rep.case, ConstructionCase::One);
    }

    #[test]
    fn construction_case_two_adds_all_of_b() {
        // r^2 = 5: the column x = 2 of Q'_r holds (2,0) and (2,1)
        let rep = construct_qs::<i64>(&Rat::from_integer(5)).unwrap();
        assert_eq!((rep.p, rep.case), (2, ConstructionCase::Two));
        assert_eq!(rep.new_points, rep.b);
        assert!(!rep.identity_holds);
        assert!(rep.s_contains_q && rep.b_are_vertices);
    }

    #[test]
    fn integer_radius_is_case_one() {
        for r in 1..=10i64 {
            let rep = construct_qs::<i64>(&Rat::from_integer(r * r)).unwrap();
            assert_eq!((rep.p, rep.case), (r, ConstructionCase::One));
            assert!(rep.identity_holds);
        }
    }

    #[test]
    fn shaving() {
        let q = poly(&[(0, 0), (2, 0), (0, 2)]);
        let (s, removed) = delta_shave(&q, &[LatticePoint::from_i64s(&[2, 0])]).unwrap();
        assert_eq!(s, poly(&[(0, 0), (1, 0), (1, 1), (0, 2)]));
        assert_eq!(removed, 1);
        assert_eq!(delta_shave(&q, &[]).unwrap(), (q.clone(), 0));
        let unit = poly(&[(0, 0), (1, 0), (0, 1)]);
        assert!(matches!(delta_shave(&unit, &[LatticePoint::from_i64s(&[1, 0])]), Err(Error::DegenerateResult)));
        assert!(matches!(delta_shave(&q, &[LatticePoint::from_i64s(&[1, 0])]), Err(Error::NotAVertex(_))));
    }

    #[test]
    fn primitivity_small() {
        let rep = primitivity_scan(&Region::<i64>::ball(2, 1), &caps()).unwrap();
        assert_eq!(rep.examined, 9);
        assert!(rep.counterexamples.is_empty());
        let rep = primitivity_scan_of(&[poly(&[(0, 0), (1, 0), (0, 1)])]).unwrap();
        assert_eq!((rep.index_one, rep.counterexamples.len()), (1, 0));
    }

    #[test]
    fn map_census_r2() {
        let c = affine_map_census(&Region::<i64>::ball(2, 2), usize::MAX, &caps()).unwrap();
        assert!(c.contains_identity);
        let diag2 = vec![vec![Rat::from_integer(2), Rat::zero()], vec![Rat::zero(), Rat::from_integer(2)]];
        assert!(c.matrices.contains(&diag2));
        assert!((c.distinct_maps as u128) <= c.map_bound);
        assert!(c.empirical_constant().is_some());
    }

    #[test]
    fn census_dedup_matches_oracle_on_unit_ball() {
        let polys = enumerate_convex_polygons(&Region::<i64>::ball(2, 1), None, &caps()).unwrap();
        let classes = |mode| {
            let mut reps: Vec<&LatticePolytope<i64>> = Vec::new();
            for p in &polys {
                if !reps.iter().any(|r| oracle_equivalent(r, p, mode).unwrap().is_some()) {
                    reps.push(p);
                }
            }
            reps.len()
        };
        assert_eq!(classes(Mode::Unimodular), 3);
        assert_eq!(classes(Mode::Affine), 2);
    }
}
