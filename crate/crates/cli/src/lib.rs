//! Command-line front end for `lattice-equiv`.
//!
//! Exit codes: 0 success, 1 "not equivalent" or "not found", 2 usage error,
//! 3 input error. Diagnostics go to the error stream only.

pub mod census_csv;
pub mod document;
pub mod error;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use lattice_equiv::enumeration::{self, Caps, ConstructionCase, Shape};
use lattice_equiv::equivalence::{self, EquivalenceWitness, Mode};
use lattice_equiv::geometry::{LatticePoint, RationalAffineMap, Region};
use lattice_equiv::invariants::{lattice_height_vector, primitive_decomposition, volume_vector};
use lattice_equiv::lattice::{point_sublattice_info, shrink_to_vmin, sublattice_info};
use lattice_equiv::{Rat, Scalar};
use serde_json::{json, Value};

pub use census_csv::{emit_census_csv, CensusRow};
pub use document::{document, parse_polytope, ParsedPolytope};
pub use error::CliError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

/// Environment variable with cap overrides, e.g. `region_points=80,volume=16`.
pub const CAPS_ENV: &str = "LATTICE_EQUIV_CAPS";

#[derive(Debug, Parser)]
#[command(
    name = "lattice-equiv",
    version,
    about = "Classify convex lattice polytopes up to affine and unimodular maps"
)]
pub struct Cli {
    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Affine,
    Unimodular,
    DetOne,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Affine => Mode::Affine,
            ModeArg::Unimodular => Mode::Unimodular,
            ModeArg::DetOne => Mode::DetOne,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ShapeArg {
    Triangles,
    All,
}

#[derive(Debug, clap::Args)]
#[group(required = true, multiple = false)]
struct RegionArgs {
    /// Disc radius (repeat or comma-separate for several regions).
    #[arg(long = "ball-r", value_delimiter = ',')]
    ball_r: Vec<i64>,
    /// Box side `s` for the square [0, s]^2.
    #[arg(long = "box", value_delimiter = ',')]
    box_side: Vec<i64>,
}

impl RegionArgs {
    fn regions(&self) -> Result<Vec<(String, Region<i64>)>, CliError> {
        if let Some(v) = self.ball_r.iter().chain(&self.box_side).find(|v| **v < 0) {
            return Err(CliError::Usage(format!("region parameter {v} is negative")));
        }
        let balls = self.ball_r.iter().map(|&r| (r.to_string(), Region::ball(2, r)));
        let boxes = self.box_side.iter().map(|&s| (s.to_string(), Region::cube(2, s)));
        Ok(balls.chain(boxes).collect())
    }

    fn single(&self) -> Result<(String, Region<i64>), CliError> {
        let mut all = self.regions()?;
        if all.len() != 1 {
            return Err(CliError::Usage("give exactly one region".into()));
        }
        Ok(all.remove(0))
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Volume vector, primitive decomposition, lattice heights and sublattice index.
    Invariants { file: PathBuf },
    /// Decide equivalence of two polytopes (exit 1 if not equivalent).
    Equiv {
        #[arg(long, value_enum, default_value = "affine")]
        mode: ModeArg,
        /// Print the witness map as JSON.
        #[arg(long)]
        witness: bool,
        a: PathBuf,
        b: PathBuf,
    },
    /// Canonical unimodular representative of a polygon.
    Canon {
        /// Report the triangle normal form (g, b, a).
        #[arg(long)]
        triangle: bool,
        file: PathBuf,
    },
    /// Sublattice index and shrink map to the minimum volume of the class.
    Vmin { file: PathBuf },
    /// Count polygons (H), unimodular classes (K) and affine classes (A).
    Census {
        #[command(flatten)]
        region: RegionArgs,
        #[arg(long)]
        csv: bool,
        /// Include the normalized volume histogram (JSON output only).
        #[arg(long)]
        histogram: bool,
    },
    /// Unimodular classes of polygons with a given normalized volume.
    ClassesByVolume {
        #[arg(long)]
        volume: i64,
        #[arg(long, value_enum, default_value = "all")]
        shape: ShapeArg,
        /// Side of the search box (default: twice the volume, which is complete).
        #[arg(long)]
        box_side: Option<i64>,
    },
    /// The family L_V of pairwise non-equivalent polygons of volume V.
    BuildLv {
        #[arg(long)]
        volume: i64,
    },
    /// The Q_r / S_r construction, optionally followed by shaving vertices.
    Barany {
        /// Radius (integer).
        #[arg(long, conflicts_with = "r2", required_unless_present = "r2")]
        r: Option<i64>,
        /// Squared radius as `p` or `p/q`.
        #[arg(long)]
        r2: Option<String>,
        /// Vertex `x,y` of S_r to shave off (repeatable).
        #[arg(long)]
        shave: Vec<String>,
    },
    /// Index-one polygons with non-primitive volume vector (exit 1 if none).
    ScanPrimitivity {
        #[command(flatten)]
        region: RegionArgs,
    },
    /// Distinct affine maps between polygons of a region.
    MapCensus {
        #[command(flatten)]
        region: RegionArgs,
        /// Maximum number of ordered polygon pairs to examine.
        #[arg(long, default_value_t = 1_000_000)]
        budget: usize,
    },
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match execute(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn caps() -> Result<Caps, CliError> {
    match std::env::var(CAPS_ENV) {
        Ok(s) => Caps::from_str(&s).map_err(|e| CliError::Usage(format!("{CAPS_ENV}: {e}"))),
        Err(_) => Ok(Caps::default()),
    }
}

fn read_polytope(path: &Path, err: &mut dyn Write) -> Result<ParsedPolytope, CliError> {
    let mut text = String::new();
    if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text).map_err(|source| CliError::Io { path: path.into(), source })?;
    } else {
        text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
    }
    let parsed = parse_polytope(&text)?;
    if parsed.hull_taken() {
        let _ = writeln!(
            err,
            "warning: {}: {} input point(s) are not vertices; using the convex hull",
            path.display(),
            parsed.dropped_points
        );
    }
    Ok(parsed)
}

/// `"p/q"` with `q >= 1`, also for integers.
pub fn rational<T: Scalar>(r: &Rat<T>) -> Value {
    Value::String(format!("{}/{}", r.numer(), r.denom()))
}

pub fn map_value<T: Scalar>(m: &RationalAffineMap<T>) -> Value {
    json!({
        "convention": "x -> x*A + v (row vectors)",
        "matrix": m.matrix().iter().map(|r| r.iter().map(rational).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "translation": m.translation().iter().map(rational).collect::<Vec<_>>(),
        "determinant": rational(&m.determinant()),
    })
}

fn witness_value<T: Scalar>(w: &EquivalenceWitness<T>) -> Value {
    json!({ "bijection": w.bijection, "map": map_value(&w.map) })
}

fn emit(out: &mut dyn Write, v: &Value) -> Result<(), CliError> {
    let text = serde_json::to_string(v).expect("JSON values serialize");
    writeln!(out, "{text}").map_err(|source| CliError::Io { path: "<stdout>".into(), source })
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    if let Some(n) = cli.threads {
        // A second call in the same process (tests) keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match cli.command {
        Command::Invariants { file } => {
            let p = read_polytope(&file, err)?;
            emit(out, &invariants_value(&p)?)?;
            Ok(EXIT_OK)
        }
        Command::Equiv { mode, witness, a, b } => {
            let (pa, pb) = (read_polytope(&a, err)?, read_polytope(&b, err)?);
            let mode = Mode::from(mode);
            let found = equivalence::find_equivalence(&pa.polytope, &pb.polytope, mode)?;
            let verdict = if found.is_some() { "equivalent" } else { "not-equivalent" };
            if witness {
                let mut v = json!({ "result": verdict, "mode": mode.to_string() });
                if let Some(w) = &found {
                    v["witness"] = witness_value(w);
                }
                emit(out, &v)?;
            } else {
                let _ = writeln!(out, "{verdict}");
            }
            Ok(if found.is_some() { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Canon { triangle, file } => {
            let p = read_polytope(&file, err)?;
            if p.polytope.dim() != 2 {
                return Err(lattice_equiv::Error::Unsupported("canonical forms are planar only".into()).into());
            }
            let v = if triangle {
                let k = equivalence::canonical_triangle(&p.polytope)?;
                json!({
                    "g": document::number(&k.g),
                    "b": document::number(&k.b),
                    "a": document::number(&k.a),
                    "canonical": document(&k.polytope()),
                })
            } else {
                json!({ "canonical": document(&equivalence::canonical_polygon(&p.polytope)?) })
            };
            emit(out, &v)?;
            Ok(EXIT_OK)
        }
        Command::Vmin { file } => {
            let p = read_polytope(&file, err)?;
            let info = sublattice_info(&p.polytope)?;
            let (q, map) = shrink_to_vmin(&p.polytope)?;
            let basis: Vec<Value> =
                info.basis.rows().iter().map(|r| Value::Array(r.iter().map(document::number).collect())).collect();
            emit(
                out,
                &json!({
                    "index": document::number(&info.index),
                    "attains_vmin": info.index == 1.into(),
                    "basis": basis,
                    "point_lattice_index": document::number(&point_sublattice_info(&p.polytope)?.index),
                    "normalized_volume": document::number(&p.polytope.normalized_volume()),
                    "shrunk": document(&q),
                    "shrunk_volume": document::number(&q.normalized_volume()),
                    "map": map_value(&map),
                }),
            )?;
            Ok(EXIT_OK)
        }
        Command::Census { region, csv, histogram } => {
            let caps = caps()?;
            let mut rows = Vec::new();
            let mut values = Vec::new();
            for (param, r) in region.regions()? {
                let c = enumeration::census(&r, &caps)?;
                let mut v = json!({ "param": param, "region": r.to_string(), "H": c.h, "K": c.k, "A": c.a });
                if histogram {
                    v["volume_histogram"] =
                        c.volume_histogram.iter().map(|(vol, n)| (vol.to_string(), json!(n))).collect();
                }
                values.push(v);
                rows.push(CensusRow { param, h: c.h, k: c.k, a: c.a });
            }
            if csv {
                let _ = write!(out, "{}", emit_census_csv(&rows));
            } else {
                emit(out, &Value::Array(values))?;
            }
            Ok(EXIT_OK)
        }
        Command::ClassesByVolume { volume, shape, box_side } => {
            let shape = match shape {
                ShapeArg::Triangles => Shape::Triangles,
                ShapeArg::All => Shape::All,
            };
            if volume < 1 || box_side.is_some_and(|s| s < 0) {
                return Err(CliError::Usage("volume must be positive and the box side nonnegative".into()));
            }
            let c = enumeration::classes_by_volume(&volume, shape, box_side.as_ref(), &caps()?)?;
            emit(
                out,
                &json!({
                    "volume": volume,
                    "shape": shape.to_string(),
                    "box_side": c.box_side,
                    "complete": c.complete,
                    "count": c.count(),
                    "representatives": c.representatives.iter().map(document).collect::<Vec<_>>(),
                }),
            )?;
            Ok(EXIT_OK)
        }
        Command::BuildLv { volume } => {
            if volume < 1 {
                return Err(CliError::Usage("volume must be positive".into()));
            }
            let lv = enumeration::build_lv(&volume, &caps()?)?;
            let members = lv
                .iter()
                .map(|p| {
                    Ok(json!({
                        "polytope": document(p),
                        "normalized_volume": p.normalized_volume(),
                        "index": sublattice_info(p)?.index,
                    }))
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            emit(out, &json!({ "volume": volume, "count": lv.len(), "members": members }))?;
            Ok(EXIT_OK)
        }
        Command::Barany { r, r2, shave } => {
            let r2: Rat<i64> = match (r, r2) {
                (Some(r), _) => Rat::from_integer(r * r),
                (None, Some(text)) => parse_rational(&text)?,
                (None, None) => unreachable!("clap requires one of --r, --r2"),
            };
            let rep = enumeration::construct_qs(&r2)?;
            let pts = |v: &[LatticePoint<i64>]| v.iter().map(document::point_value).collect::<Vec<_>>();
            let mut v = json!({
                "r2": rational(&rep.r2),
                "p": rep.p,
                "case": match rep.case { ConstructionCase::One => 1, ConstructionCase::Two => 2 },
                "q_prime": document(&rep.q_prime),
                "q": document(&rep.q),
                "s": document(&rep.s),
                "b": pts(&rep.b),
                "volume_delta": rep.volume_delta,
                "new_points": pts(&rep.new_points),
                "predicted_new_points": pts(&rep.predicted_new_points),
                "identity_holds": rep.identity_holds,
                "s_contains_q": rep.s_contains_q,
                "b_are_vertices": rep.b_are_vertices,
            });
            if !shave.is_empty() {
                let w = shave.iter().map(|s| parse_point(s)).collect::<Result<Vec<_>, _>>()?;
                let (shaved, removed) = enumeration::delta_shave(&rep.s, &w)?;
                v["shave"] = json!({
                    "removed_vertices": pts(&w),
                    "polytope": document(&shaved),
                    "removed_volume": removed,
                });
            }
            emit(out, &v)?;
            Ok(EXIT_OK)
        }
        Command::ScanPrimitivity { region } => {
            let (param, r) = region.single()?;
            let rep = enumeration::primitivity_scan(&r, &caps()?)?;
            emit(
                out,
                &json!({
                    "param": param,
                    "region": r.to_string(),
                    "examined": rep.examined,
                    "index_one": rep.index_one,
                    "counterexamples": rep.counterexamples.iter().map(document).collect::<Vec<_>>(),
                }),
            )?;
            Ok(if rep.counterexamples.is_empty() { EXIT_NEGATIVE } else { EXIT_OK })
        }
        Command::MapCensus { region, budget } => {
            let (param, r) = region.single()?;
            let c = enumeration::affine_map_census(&r, budget, &caps()?)?;
            emit(
                out,
                &json!({
                    "param": param,
                    "region": r.to_string(),
                    "pairs_examined": c.pairs_examined,
                    "budget_exhausted": c.budget_exhausted,
                    "distinct_maps": c.distinct_maps,
                    "distinct_matrices": c.distinct_matrices,
                    "map_bound": c.map_bound.to_string(),
                    "max_row_norm_sq": rational(&c.max_row_norm_sq),
                    "empirical_constant": c.empirical_constant(),
                    "contains_identity": c.contains_identity,
                }),
            )?;
            Ok(EXIT_OK)
        }
    }
}

fn invariants_value(p: &ParsedPolytope) -> Result<Value, CliError> {
    let poly = &p.polytope;
    let d = poly.dim();
    let w = volume_vector(poly.vertices(), d)?;
    let prim = primitive_decomposition(&w)?;
    let heights = lattice_height_vector(poly.vertices(), d)?;
    let blocks: Vec<Value> = heights
        .blocks
        .iter()
        .enumerate()
        .map(|(i, b)| {
            json!({
                "point": i,
                "manifest": heights.block_manifest(i),
                "heights": b.iter().map(|h| h.as_ref().map_or(Value::Null, document::number)).collect::<Vec<_>>(),
            })
        })
        .collect();
    let num = |v: &[lattice_equiv::Int]| v.iter().map(document::number).collect::<Vec<_>>();
    Ok(json!({
        "label": p.label,
        "dim": d,
        "vertices": poly.vertices().iter().map(document::point_value).collect::<Vec<_>>(),
        "normalized_volume": document::number(&poly.normalized_volume()),
        "volume_vector": { "manifest": w.manifest(), "entries": num(&w.entries) },
        "primitive": { "content": document::number(&prim.content), "direction": num(&prim.direction) },
        "lattice_heights": blocks,
        "sublattice_index": document::number(&sublattice_info(poly)?.index),
    }))
}

fn parse_rational(text: &str) -> Result<Rat<i64>, CliError> {
    let bad = || CliError::Usage(format!("`{text}` is not a rational p or p/q"));
    let (p, q) = match text.split_once('/') {
        Some((p, q)) => (p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?),
        None => (text.trim().parse().map_err(|_| bad())?, 1),
    };
    if q == 0 {
        return Err(bad());
    }
    Ok(Rat::new(p, q))
}

fn parse_point(text: &str) -> Result<LatticePoint<i64>, CliError> {
    let coords: Vec<i64> = text
        .split(',')
        .map(|c| c.trim().parse())
        .collect::<Result<_, _>>()
        .map_err(|_| CliError::Usage(format!("`{text}` is not an integer point x,y")))?;
    if coords.len() != 2 {
        return Err(CliError::Usage(format!("`{text}` is not a planar point")));
    }
    Ok(LatticePoint::new(coords))
}
