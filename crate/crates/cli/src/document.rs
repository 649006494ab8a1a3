//! Polytope files: `{"dim": 2, "points": [[0,0],[1,0],[0,1]], "label": "..."}`.

use std::str::FromStr;

use lattice_equiv::geometry::{LatticePoint, LatticePolytope};
use lattice_equiv::{Int, Polytope, Scalar};
use serde::Deserialize;
use serde_json::{Number, Value};

use crate::error::CliError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    dim: usize,
    points: Vec<Vec<Number>>,
    #[serde(default)]
    label: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedPolytope {
    pub polytope: Polytope,
    pub label: Option<String>,
    /// Input points that are not vertices of their hull (including repeats).
    pub dropped_points: usize,
}

impl ParsedPolytope {
    pub fn hull_taken(&self) -> bool {
        self.dropped_points > 0
    }
}

fn integer(n: &Number) -> Result<Int, CliError> {
    // With arbitrary precision the textual form is kept verbatim, so
    // `1.0` and `1e3` are rejected here rather than silently rounded.
    let text = n.to_string();
    Int::from_str(&text).map_err(|_| CliError::Parse(format!("coordinate `{text}` is not an integer")))
}

/// Parses and validates a polytope document. Points not in convex position
/// are replaced by their hull and reported in `dropped_points`.
pub fn parse_polytope(text: &str) -> Result<ParsedPolytope, CliError> {
    let raw: RawDocument = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    let points = raw
        .points
        .iter()
        .map(|p| {
            if p.len() != raw.dim {
                return Err(CliError::Core(lattice_equiv::Error::DimensionMismatch {
                    expected: raw.dim,
                    found: p.len(),
                }));
            }
            Ok(LatticePoint::new(p.iter().map(integer).collect::<Result<Vec<_>, _>>()?))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if raw.dim < 2 {
        return Err(CliError::Core(lattice_equiv::Error::Unsupported(format!(
            "dimension {} is not supported; use 2 or more",
            raw.dim
        ))));
    }
    let given = points.len();
    let polytope = LatticePolytope::from_points(raw.dim, points)?;
    Ok(ParsedPolytope { dropped_points: given - polytope.num_vertices(), polytope, label: raw.label })
}

/// A JSON number carrying the exact decimal text of `x`.
pub fn number<T: std::fmt::Display>(x: &T) -> Value {
    serde_json::from_str(&x.to_string()).expect("integers print as JSON numbers")
}

pub fn point_value<T: Scalar>(p: &LatticePoint<T>) -> Value {
    Value::Array(p.coords().iter().map(number).collect())
}

/// The document form of a polytope; [`parse_polytope`] reads it back.
pub fn document<T: Scalar>(p: &LatticePolytope<T>) -> Value {
    serde_json::json!({
        "dim": p.dim(),
        "points": p.vertices().iter().map(point_value).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_triangle() {
        let p = parse_polytope(r#"{"dim":2,"points":[[0,0],[1,0],[0,1]]}"#).unwrap();
        assert_eq!(p.polytope, Polytope::polygon(&[(0, 0), (1, 0), (0, 1)]).unwrap());
        assert!(!p.hull_taken());
    }

    #[test]
    fn edge_point_is_dropped_with_warning() {
        let p = parse_polytope(r#"{"dim":2,"points":[[0,0],[2,0],[0,2],[1,1]],"label":"t"}"#).unwrap();
        assert_eq!(p.polytope.num_vertices(), 3);
        assert_eq!(p.dropped_points, 1);
        assert_eq!(p.label.as_deref(), Some("t"));
    }

    #[test]
    fn degenerate_and_malformed() {
        let err = parse_polytope(r#"{"dim":2,"points":[[0,0],[1,1]]}"#).unwrap_err();
        assert!(matches!(err, CliError::Core(lattice_equiv::Error::DegenerateInput(_))));
        assert!(matches!(parse_polytope(r#"{"dim":2,"points":[[0,0],[1.0,0],[0,1]]}"#), Err(CliError::Parse(_))));
        assert!(matches!(parse_polytope(r#"{"dim":2,"points":[[0,0],[1e2,0],[0,1]]}"#), Err(CliError::Parse(_))));
        assert!(matches!(parse_polytope(r#"{"dim":2,"pts":[]}"#), Err(CliError::Parse(_))));
        assert!(matches!(parse_polytope("not json"), Err(CliError::Parse(_))));
        assert!(parse_polytope(r#"{"dim":2,"points":[[0,0,1],[1,0],[0,1]]}"#).is_err());
    }

    #[test]
    fn big_coordinates_are_exact() {
        let big = "123456789012345678901234567890";
        let text = format!(r#"{{"dim":2,"points":[[0,0],[{big},0],[0,1]]}}"#);
        let p = parse_polytope(&text).unwrap();
        assert_eq!(p.polytope.normalized_volume().to_string(), big);
        let round = parse_polytope(&document(&p.polytope).to_string()).unwrap();
        assert_eq!(round.polytope, p.polytope);
    }

    #[test]
    fn three_dimensional() {
        let p = parse_polytope(r#"{"dim":3,"points":[[0,0,0],[1,0,0],[0,1,0],[0,0,1]]}"#).unwrap();
        assert_eq!(p.polytope.normalized_volume(), Int::from(1));
    }
}
