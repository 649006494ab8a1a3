use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use lattice_equiv_cli::parse_polytope;
use serde_json::Value;
use tempfile::TempDir;

struct Files {
    dir: TempDir,
}

impl Files {
    fn new() -> Self {
        Files { dir: tempfile::tempdir().unwrap() }
    }

    fn put(&self, name: &str, text: &str) -> PathBuf {
        let path = self.dir.path().join(name);
        std::fs::write(&path, text).unwrap();
        path
    }

    fn polygon(&self, name: &str, pts: &[(i64, i64)]) -> PathBuf {
        let pts: Vec<String> = pts.iter().map(|(x, y)| format!("[{x},{y}]")).collect();
        self.put(name, &format!(r#"{{"dim":2,"points":[{}]}}"#, pts.join(",")))
    }
}

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_lattice-equiv"));
    c.env_remove(lattice_equiv_cli::CAPS_ENV);
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn remark_pair(f: &Files) -> (String, String) {
    let a = f.polygon("p1.json", &[(0, 0), (9, 0), (0, 10)]);
    let b = f.polygon("p2.json", &[(0, 0), (6, 0), (0, 15)]);
    (a.to_str().unwrap().into(), b.to_str().unwrap().into())
}

#[test]
fn remark_pair_modes() {
    let f = Files::new();
    let (a, b) = remark_pair(&f);
    let o = run(&["equiv", "--mode", "affine", &a, &b]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(0), "equivalent"));
    let o = run(&["equiv", "--mode", "unimodular", &a, &b]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(1), "not-equivalent"));
    assert!(o.stderr.is_empty());
    let o = run(&["equiv", "--mode", "det-one", "--witness", &a, &b]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["result"], "equivalent");
    assert_eq!(v["witness"]["map"]["determinant"], "1/1");
}

#[test]
fn witness_entries_are_exact_strings() {
    let f = Files::new();
    let (a, b) = remark_pair(&f);
    let v = json(&run(&["equiv", "--witness", &a, &b]));
    let m = &v["witness"]["map"]["matrix"];
    let mut diag = [m[0][0].as_str().unwrap(), m[1][1].as_str().unwrap()];
    diag.sort();
    assert_eq!(diag, ["2/3", "3/2"]);
    assert_eq!(m[0][1], "0/1");
    assert_eq!(v["witness"]["map"]["translation"], serde_json::json!(["0/1", "0/1"]));
}

#[test]
fn census_csv_rows() {
    let o = run(&["census", "--ball-r", "1", "--csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "param,H,K,A,logK_over_logH,logA_over_logH\n1,9,3,2,0.500000,0.315465\n");
    let o = run(&["census", "--box", "1"]);
    let v = json(&o);
    assert_eq!((v[0]["H"].as_u64(), v[0]["K"].as_u64(), v[0]["A"].as_u64()), (Some(5), Some(2), Some(2)));
}

#[test]
fn census_csv_is_byte_identical_across_runs_and_threads() {
    let args = ["census", "--ball-r", "0,1,2", "--csv"];
    let first = run(&args).stdout;
    assert_eq!(run(&args).stdout, first);
    let single = bin().args(["--threads", "1"]).args(args).output().unwrap().stdout;
    assert_eq!(single, first);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["equiv", "--mode", "projective", "a", "b"]).status.code(), Some(2));
    assert_eq!(run(&["census"]).status.code(), Some(2));
    assert_eq!(run(&["census", "--ball-r", "1", "--box", "1"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn input_errors_exit_3() {
    let f = Files::new();
    let good = f.polygon("good.json", &[(0, 0), (1, 0), (0, 1)]);
    let cases = [
        f.put("float.json", r#"{"dim":2,"points":[[0,0],[1.5,0],[0,1]]}"#),
        f.put("flat.json", r#"{"dim":2,"points":[[0,0],[1,1],[2,2]]}"#),
        f.put("broken.json", "{"),
        f.put("ragged.json", r#"{"dim":2,"points":[[0,0],[1],[0,1]]}"#),
        f.dir.path().join("missing.json"),
    ];
    for bad in &cases {
        let o = run(&["equiv", good.to_str().unwrap(), bad.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(3), "{}", bad.display());
        assert!(o.stdout.is_empty());
        assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    }
}

#[test]
fn caps_come_from_the_environment() {
    let o =
        bin().env(lattice_equiv_cli::CAPS_ENV, "region_points=5").args(["census", "--ball-r", "2"]).output().unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = bin().env(lattice_equiv_cli::CAPS_ENV, "nonsense").args(["census", "--ball-r", "1"]).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn hull_warning_goes_to_stderr() {
    let f = Files::new();
    let p = f.put("t.json", r#"{"dim":2,"points":[[0,0],[2,0],[0,2],[1,1],[0,0]]}"#);
    let o = run(&["canon", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
    let canon = parse_polytope(&json(&o)["canonical"].to_string()).unwrap();
    assert_eq!(canon.polytope.num_vertices(), 3);
}

#[test]
fn reads_stdin() {
    let f = Files::new();
    let sq = f.polygon("sq.json", &[(0, 0), (1, 0), (1, 1), (0, 1)]);
    let mut child = bin()
        .args(["equiv", "--mode", "unimodular", "-", sq.to_str().unwrap()])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(br#"{"dim":2,"points":[[0,0],[1,0],[2,1],[1,1]]}"#).unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(0), "equivalent"));
}

#[test]
fn invariants_and_vmin_of_remark_triangle() {
    let f = Files::new();
    let (a, _) = remark_pair(&f);
    let v = json(&run(&["invariants", &a]));
    assert_eq!(v["volume_vector"]["entries"], serde_json::json!([90]));
    assert_eq!(v["sublattice_index"], 90);
    let v = json(&run(&["vmin", &a]));
    assert_eq!(v["attains_vmin"], false);
    assert_eq!(v["shrunk_volume"], 1);
    assert_eq!(v["map"]["determinant"], "1/90");
}

#[test]
fn canon_triangle_key() {
    let f = Files::new();
    let key = |name: &str, pts: &[(i64, i64)]| {
        let v = json(&run(&["canon", "--triangle", f.polygon(name, pts).to_str().unwrap()]));
        (v["g"].as_i64().unwrap(), v["b"].as_i64().unwrap(), v["a"].as_i64().unwrap())
    };
    assert_eq!(key("a.json", &[(0, 0), (1, 0), (2, 7)]), (1, 7, 2));
    assert_eq!(key("b.json", &[(3, 1), (4, 1), (6, 8)]), (1, 7, 3));
}

#[test]
fn volume_families() {
    let v = json(&run(&["classes-by-volume", "--volume", "4"]));
    assert_eq!((v["count"].as_u64(), v["complete"].as_bool()), (Some(7), Some(true)));
    let v = json(&run(&["build-lv", "--volume", "2"]));
    assert_eq!(v["count"], 2);
    assert!(v["members"].as_array().unwrap().iter().all(|m| m["normalized_volume"] == 2));
    let o = run(&["classes-by-volume", "--volume", "13"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn construction_and_scan() {
    let v = json(&run(&["barany", "--r", "2"]));
    assert_eq!(v["case"], 1);
    assert_eq!(v["new_points"], serde_json::json!([[4, 1]]));
    let o = run(&["barany", "--r", "2", "--shave", "0,4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(run(&["barany", "--r", "2", "--shave", "1,1"]).status.code(), Some(3));
    let o = run(&["scan-primitivity", "--ball-r", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["counterexamples"], serde_json::json!([]));
}

#[test]
fn square_invariants() {
    let f = Files::new();
    let sq = f.polygon("sq.json", &[(0, 0), (1, 0), (1, 1), (0, 1)]);
    let v = json(&run(&["invariants", sq.to_str().unwrap()]));
    assert_eq!(v["volume_vector"]["entries"], serde_json::json!([1, 1, 1, 1]));
    assert_eq!(v["volume_vector"]["manifest"], serde_json::json!([[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]));
    assert_eq!(v["primitive"]["content"], 1);
}

#[test]
fn documents_round_trip() {
    use lattice_equiv::enumeration::{enumerate_convex_polygons, Caps};
    use lattice_equiv::equivalence::canonical_polygon;
    use lattice_equiv::geometry::Region;
    use lattice_equiv::lattice::shrink_to_vmin;
    use lattice_equiv_cli::document;

    let polys =
        enumerate_convex_polygons(&Region::<lattice_equiv::Int>::ball(2, 2.into()), None, &Caps::default()).unwrap();
    for p in &polys {
        for q in [p.clone(), canonical_polygon(p).unwrap(), shrink_to_vmin(p).unwrap().0] {
            let back = parse_polytope(&document(&q).to_string()).unwrap();
            assert_eq!(back.polytope, q);
            assert!(!back.hull_taken());
        }
    }
}
