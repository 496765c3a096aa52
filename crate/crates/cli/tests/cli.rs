//! End-to-end runs of the `fddof` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fddof"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

/// Writes a scenario with all four arrays of half-length `l`, forward sets
/// `fwd` and backscatter sets `back` (JSON fragments).
fn symmetric(dir: &Path, name: &str, l: &str, fwd: &str, back: &str) -> PathBuf {
    scenario(
        dir,
        name,
        &format!(r#"{{"l_t1": "{l}", "l_r1": "{l}", "l_t2": "{l}", "l_r2": "{l}"}}"#),
        &format!(
            r#"{{"t11": {fwd}, "r11": {fwd}, "t22": {fwd}, "r22": {fwd}, "t12": {back}, "r12": {back}}}"#
        ),
    )
}

fn scenario(dir: &Path, name: &str, lengths: &str, intervals: &str) -> PathBuf {
    let path = dir.join(format!("{name}.json"));
    let text = format!(r#"{{"name": "{name}", "lengths": {lengths}, "intervals": {intervals}}}"#);
    std::fs::write(&path, text).unwrap();
    path
}

fn fully_spread(dir: &Path, l_bs: u32, l_usr: u32) -> PathBuf {
    let full = r#"[["-1", "1"]]"#;
    scenario(
        dir,
        &format!("spread_{l_bs}_{l_usr}"),
        &format!(r#"{{"l_t1": {l_usr}, "l_r1": {l_bs}, "l_t2": {l_bs}, "l_r2": {l_usr}}}"#),
        &format!(
            r#"{{"t11": {full}, "r11": {full}, "t22": {full}, "r22": {full}, "t12": {full}, "r12": {full}}}"#
        ),
    )
}

const FWD: &str = r#"[["0", "1"]]"#;
const BACK_3_4: &str = r#"[["-1/4", "3/4"]]"#;

fn overlap_3_4(dir: &Path) -> PathBuf {
    symmetric(dir, "overlap_3_4", "1", FWD, BACK_3_4)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn region_of_symmetric_overlap_three_quarters() {
    let dir = TempDir::new().unwrap();
    let path = overlap_3_4(dir.path());
    let csv = dir.path().join("v.csv");
    let svg = dir.path().join("v.svg");
    let o = run(&["region", s(&path), "--csv", s(&csv), "--svg", s(&svg)]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("d1_max   = 2"));
    assert!(out.contains("d2_max   = 2"));
    assert!(out.contains("dsum_max = 3"));
    assert!(out.contains("corner P'  = (2, 1)"));
    assert!(out.contains("corner P'' = (1, 2)"));
    assert!(out.contains("rectangular = false"));
    assert_eq!(
        std::fs::read_to_string(&csv).unwrap(),
        "d1,d2\n0,0\n2,0\n2,1\n1,2\n0,2\n"
    );
    let plot = std::fs::read_to_string(&svg).unwrap();
    assert!(plot.contains(r#"viewBox="0 0 640 480""#));
    assert_eq!(plot.matches("<polygon").count(), 1);
}

#[test]
fn region_without_backscatter_is_rectangular() {
    let dir = TempDir::new().unwrap();
    let path = symmetric(dir.path(), "empty_back", "1", FWD, "[]");
    let o = run(&["region", s(&path)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("rectangular = true"));
}

#[test]
fn region_fully_spread() {
    let dir = TempDir::new().unwrap();
    let o = run(&["region", s(&fully_spread(dir.path(), 2, 1))]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("d1_max   = 4"));
    assert!(out.contains("d2_max   = 4"));
    assert!(out.contains("dsum_max = 8"));
}

#[test]
fn compare_relations() {
    let dir = TempDir::new().unwrap();
    let aligned = symmetric(dir.path(), "aligned", "1", FWD, FWD);
    let o = run(&["compare", s(&aligned)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("relation: equal"));

    let o = run(&["compare", s(&fully_spread(dir.path(), 2, 1))]);
    assert!(stdout(&o).contains("relation: HD strictly inside FD"));
    assert!(stdout(&o).contains("area gain FD/HD: 2"));

    let o = run(&["compare", s(&fully_spread(dir.path(), 3, 3))]);
    assert!(stdout(&o).contains("relation: equal"));
    assert!(stdout(&o).contains("area gain FD/HD: 1 "));
}

#[test]
fn compare_plots_both_regions() {
    let dir = TempDir::new().unwrap();
    let svg = dir.path().join("c.svg");
    let o = run(&["compare", s(&overlap_3_4(dir.path())), "--svg", s(&svg)]);
    assert_eq!(code(&o), 0);
    let plot = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(plot.matches("<polygon").count(), 2);
    assert!(plot.contains(">full duplex</text>") && plot.contains(">half duplex</text>"));
}

#[test]
fn sweep_reproduces_the_three_shapes() {
    let dir = TempDir::new().unwrap();
    let csv = dir.path().join("sweep.csv");
    let svg = dir.path().join("sweep.svg");
    let o = run(&[
        "sweep",
        s(&overlap_3_4(dir.path())),
        "--grid",
        "1,3/4,1/2",
        "--csv",
        s(&csv),
        "--svg",
        s(&svg),
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(
        std::fs::read_to_string(&csv).unwrap(),
        "overlap,d1_cap,d2_cap,dsum_cap,rectangular\n\
         1,2,2,2,false\n0.75,2,2,3,false\n0.5,2,2,4,true\n"
    );
    let out = stdout(&o);
    assert!(out.contains("(0, 0) (2, 0) (0, 2)\n"), "triangle");
    assert!(
        out.contains("(0, 0) (2, 0) (2, 1) (1, 2) (0, 2)\n"),
        "pentagon"
    );
    assert!(out.contains("(0, 0) (2, 0) (2, 2) (0, 2)\n"), "rectangle");
    assert!(out.contains("dsum_cap non-increasing in overlap: yes"));

    let plot = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(plot.matches("<polygon").count(), 3);
    for label in ["overlap 1", "overlap 3/4", "overlap 1/2"] {
        assert!(plot.contains(&format!(">{label}</text>")));
    }
}

#[test]
fn sweep_disjoint_overlap_gives_square() {
    let dir = TempDir::new().unwrap();
    let path = symmetric(dir.path(), "l3", "3", FWD, BACK_3_4);
    let o = run(&["sweep", s(&path), "--grid", "0"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("(0, 0) (6, 0) (6, 6) (0, 6)\n"));
}

#[test]
fn sweep_default_grid_has_five_points() {
    let dir = TempDir::new().unwrap();
    let csv = dir.path().join("sweep.csv");
    let o = run(&["sweep", s(&overlap_3_4(dir.path())), "--csv", s(&csv)]);
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(&csv).unwrap();
    let overlaps: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').next().unwrap())
        .collect();
    assert_eq!(overlaps, ["1", "0.75", "0.5", "0.25", "0"]);
}

#[test]
fn sweep_rejects_bad_bases_and_grids() {
    let dir = TempDir::new().unwrap();
    let o = run(&["sweep", s(&fully_spread(dir.path(), 2, 1))]);
    assert_eq!(code(&o), 5);
    assert!(stderr(&o).contains("symmetric"));

    let o = run(&["sweep", s(&overlap_3_4(dir.path())), "--grid", "5/4"]);
    assert_eq!(code(&o), 5);
    let o = run(&["sweep", s(&overlap_3_4(dir.path())), "--grid", "-1/4"]);
    assert_eq!(code(&o), 5);
}

#[test]
fn verify_symmetric_with_auto_rescale() {
    let dir = TempDir::new().unwrap();
    let path = overlap_3_4(dir.path());
    let o = run(&["verify", s(&path), "--auto-rescale", "--seeds", "20"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("scale: 2"));
    assert!(out.contains("corner        = (4, 2)"));
    assert_eq!(out.matches(" (4,2) ").count(), 20);
    assert!(!out.contains("FAIL"));
    assert!(out.contains("verdict: PASS (20 of 20 seeds passed"));
}

#[test]
fn verify_without_rescale_reports_quantization() {
    let dir = TempDir::new().unwrap();
    let o = run(&["verify", s(&overlap_3_4(dir.path()))]);
    assert_eq!(code(&o), 6);
    assert!(stderr(&o).contains("--auto-rescale"));
}

#[test]
fn verify_without_interference_reaches_both_caps() {
    let dir = TempDir::new().unwrap();
    let path = symmetric(dir.path(), "clean", "2", FWD, "[]");
    let o = run(&["verify", s(&path), "--seeds", "5"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert_eq!(stdout(&o).matches(" (4,4) ").count(), 5);
}

#[test]
fn verify_fails_on_corrupted_support() {
    let dir = TempDir::new().unwrap();
    let path = overlap_3_4(dir.path());
    let o = run(&[
        "verify",
        s(&path),
        "--auto-rescale",
        "--seeds",
        "3",
        "--corrupt-support",
    ]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.contains("FAIL"));
    assert!(out.contains("verdict: FAIL"));
}

#[test]
fn verify_rank_tolerance_from_flag_and_file() {
    let dir = TempDir::new().unwrap();
    let path = overlap_3_4(dir.path());
    let o = run(&[
        "verify",
        s(&path),
        "--auto-rescale",
        "--seeds",
        "2",
        "--rank-tol",
        "1e-7",
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("rank tolerance: 1e-7"));

    let o = run(&["verify", s(&path), "--auto-rescale", "--rank-tol", "2"]);
    assert_eq!(code(&o), 3);

    let with_oracle = dir.path().join("oracle.json");
    let text = std::fs::read_to_string(&path).unwrap().replacen(
        r#""intervals""#,
        r#""oracle": {"seeds": 4, "rank_tol": 1e-8}, "intervals""#,
        1,
    );
    std::fs::write(&with_oracle, text).unwrap();
    let o = run(&["verify", s(&with_oracle), "--auto-rescale"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("rank tolerance: 1e-8, seeds: 0..4"));
}

#[test]
fn missing_file_exits_2() {
    for cmd in ["region", "compare", "sweep", "verify"] {
        let o = run(&[cmd, "/nonexistent/scenario.json"]);
        assert_eq!(code(&o), 2, "{cmd}");
    }
}

#[test]
fn schema_error_exits_3_with_field_path() {
    let dir = TempDir::new().unwrap();
    let path = scenario(
        dir.path(),
        "bad",
        r#"{"l_t1": "1", "l_r1": "1", "l_t2": "x/2", "l_r2": "1"}"#,
        "{}",
    );
    let o = run(&["region", s(&path)]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("lengths.l_t2"), "{}", stderr(&o));

    let path = dir.path().join("broken.json");
    std::fs::write(&path, "{ not json").unwrap();
    assert_eq!(code(&run(&["compare", s(&path)])), 3);
}

#[test]
fn invariant_violation_exits_4() {
    let dir = TempDir::new().unwrap();
    let outside = symmetric(dir.path(), "outside", "1", r#"[["0", "2"]]"#, "[]");
    let o = run(&["region", s(&outside)]);
    assert_eq!(code(&o), 4);
    assert!(stderr(&o).contains("intervals.t11"));

    let reversed = symmetric(dir.path(), "reversed", "1", r#"[["1/2", "0"]]"#, "[]");
    assert_eq!(code(&run(&["region", s(&reversed)])), 4);

    let negative = symmetric(dir.path(), "negative", "-1", FWD, "[]");
    assert_eq!(code(&run(&["region", s(&negative)])), 4);
}

#[test]
fn angle_input_matches_direction_input() {
    let dir = TempDir::new().unwrap();
    let by_angle = symmetric(
        dir.path(),
        "angles",
        "1",
        r#"{"angles_deg": [[0, 90]]}"#,
        r#"{"angles_deg": [[60, 90]]}"#,
    );
    let by_direction = symmetric(dir.path(), "dirs", "1", FWD, r#"[["0", "1/2"]]"#);
    let a = stdout(&run(&["region", s(&by_angle)]));
    let b = stdout(&run(&["region", s(&by_direction)]));
    assert_eq!(
        a.lines().skip(1).collect::<Vec<_>>(),
        b.lines().skip(1).collect::<Vec<_>>()
    );
}

#[test]
fn svg_output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let path = overlap_3_4(dir.path());
    let (a, b) = (dir.path().join("a.svg"), dir.path().join("b.svg"));
    run(&["sweep", s(&path), "--svg", s(&a)]);
    run(&["sweep", s(&path), "--svg", s(&b)]);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn unwritable_output_is_reported() {
    let dir = TempDir::new().unwrap();
    let path = overlap_3_4(dir.path());
    let o = run(&["region", s(&path), "--csv", "/nonexistent/dir/v.csv"]);
    assert_ne!(code(&o), 0);
    assert!(stderr(&o).contains("cannot write"));
}

#[test]
fn help_exits_cleanly() {
    assert_eq!(code(&run(&["--help"])), 0);
    assert_eq!(code(&run(&["region", "--help"])), 0);
    assert!(!stdout(&run(&["verify", "--help"])).contains("corrupt"));
    assert_ne!(code(&run(&["frobnicate"])), 0);
}
