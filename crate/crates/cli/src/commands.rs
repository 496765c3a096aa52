//! The four subcommands. Each returns its report text; files named in
//! [`OutputPaths`] are written once all results are gathered.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use fddof::oracle::{
    allocate_basis, integer_rescale, report_for, run_trials, sample_channel, TrialReport,
    LEAKAGE_TOL,
};
use fddof::rational::{self, int, Rational};
use fddof::region::corners_from_caps;
use fddof::{
    corner_points, fd_caps, fd_region, hd_region, is_rectangular, region_relate, DirectionSet,
    DofRegion, Relation, ScatteringGeometry,
};

use crate::error::CliError;
use crate::output::{self, SweepRow};
use crate::scenario::Scenario;

#[derive(Debug, Clone, Default)]
pub struct OutputPaths {
    pub csv: Option<PathBuf>,
    pub svg: Option<PathBuf>,
}

/// A finished command: its report and whether every check passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub report: String,
    pub success: bool,
}

impl Outcome {
    fn ok(report: String) -> Self {
        Outcome {
            report,
            success: true,
        }
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|source| CliError::Output {
        path: path.to_owned(),
        source,
    })
}

fn write_region_files(
    out: &OutputPaths,
    title: &str,
    csv_region: &DofRegion,
    plotted: &[(String, &DofRegion)],
) -> Result<(), CliError> {
    if let Some(path) = &out.csv {
        write_file(path, &output::vertices_csv(csv_region))?;
    }
    if let Some(path) = &out.svg {
        write_file(path, &output::regions_svg(title, plotted))?;
    }
    Ok(())
}

fn fmt(x: &Rational) -> String {
    rational::format(x)
}

fn vertex_list(r: &DofRegion) -> String {
    r.vertices
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Caps, corner points and rectangularity of the full-duplex region.
pub fn region(s: &Scenario, out: &OutputPaths) -> Result<Outcome, CliError> {
    let g = s.geometry()?;
    let caps = fd_caps(&g);
    let corners = corner_points(&g);
    let fd = fd_region(&g);

    let mut r = String::new();
    let _ = writeln!(r, "scenario: {}", s.name);
    let _ = writeln!(r, "d1_max   = {}", fmt(&caps.d1_max));
    let _ = writeln!(r, "d2_max   = {}", fmt(&caps.d2_max));
    let _ = writeln!(r, "dsum_max = {}", fmt(&caps.dsum_max));
    let _ = writeln!(r, "corner P'  = {}", corners.p_prime);
    let _ = writeln!(r, "corner P'' = {}", corners.p_double_prime);
    let _ = writeln!(r, "rectangular = {}", is_rectangular(&g));
    let _ = writeln!(r, "vertices: {}", vertex_list(&fd));

    write_region_files(out, &s.name, &fd, &[("full duplex".into(), &fd)])?;
    Ok(Outcome::ok(r))
}

/// Human-readable relation of the half-duplex region to the full-duplex one.
pub fn relation_text(hd_vs_fd: Relation) -> &'static str {
    match hd_vs_fd {
        Relation::Equal => "equal",
        Relation::StrictSubset => "HD strictly inside FD",
        Relation::StrictSuperset => "FD strictly inside HD",
        Relation::Incomparable => "incomparable",
    }
}

/// Full duplex against time-shared half duplex.
pub fn compare(s: &Scenario, out: &OutputPaths) -> Result<Outcome, CliError> {
    let g = s.geometry()?;
    let fd = fd_region(&g);
    let hd = hd_region(&g);
    let relation = region_relate(&hd, &fd);
    let (fd_area, hd_area) = (fd.area(), hd.area());

    let mut r = String::new();
    let _ = writeln!(r, "scenario: {}", s.name);
    let _ = writeln!(
        r,
        "FD region: d1 <= {}, d2 <= {}, d1 + d2 <= {}",
        fmt(&fd.d1_cap),
        fmt(&fd.d2_cap),
        fmt(&fd.dsum_cap)
    );
    let _ = writeln!(r, "FD vertices: {}", vertex_list(&fd));
    if hd.d1_cap == rational::zero() || hd.d2_cap == rational::zero() {
        let _ = writeln!(
            r,
            "HD region: d1 <= {}, d2 <= {}",
            fmt(&hd.d1_cap),
            fmt(&hd.d2_cap)
        );
    } else {
        let _ = writeln!(
            r,
            "HD region: d1/{} + d2/{} <= 1",
            fmt(&hd.d1_cap),
            fmt(&hd.d2_cap)
        );
    }
    let _ = writeln!(r, "HD vertices: {}", vertex_list(&hd));
    let _ = writeln!(r, "relation: {}", relation_text(relation));
    if hd_area == rational::zero() {
        let _ = writeln!(r, "area gain FD/HD: undefined (HD area is 0)");
    } else {
        let gain = &fd_area / &hd_area;
        let _ = writeln!(
            r,
            "area gain FD/HD: {} ({})",
            fmt(&gain),
            output::format_sig(rational::to_f64(&gain), 6)
        );
    }

    write_region_files(
        out,
        &s.name,
        &fd,
        &[("full duplex".into(), &fd), ("half duplex".into(), &hd)],
    )?;
    Ok(Outcome::ok(r))
}

/// Symmetric geometry with contiguous forward and backscatter intervals of
/// widths `fwd` and `back` that share `overlap`:
/// `fwd = [-1, -1 + fwd)`, `back = [-1 + fwd - overlap, -1 + fwd - overlap + back)`.
pub fn overlap_geometry(
    l: &Rational,
    fwd: &Rational,
    back: &Rational,
    overlap: &Rational,
) -> Result<ScatteringGeometry, CliError> {
    let bad = |why: String| CliError::BadSweep(format!("overlap {}: {why}", fmt(overlap)));
    if *overlap < rational::zero() || overlap > fwd || overlap > back {
        return Err(bad(format!(
            "must lie in [0, {}]",
            fmt(&rational::min(fwd.clone(), back.clone()))
        )));
    }
    let lo = fwd - overlap - int(1);
    let hi = &lo + back;
    if hi > int(1) {
        return Err(bad(format!(
            "backscatter interval [{}, {}) leaves [-1, 1]",
            fmt(&lo),
            fmt(&hi)
        )));
    }
    let set = |a: Rational, b: Rational| {
        DirectionSet::canonicalize([(a, b)].into_iter().filter(|(a, b)| a < b))
            .map_err(|e| bad(e.to_string()))
    };
    let fwd_set = set(int(-1), fwd - int(1))?;
    let back_set = set(lo, hi)?;
    ScatteringGeometry::symmetric(l.clone(), fwd_set, back_set).map_err(|e| bad(e.to_string()))
}

/// Five overlaps evenly spaced from `max` down to zero.
pub fn default_grid(max: &Rational) -> Vec<Rational> {
    (0..5).rev().map(|k| max * int(k) / int(4)).collect()
}

/// Full-duplex regions of the symmetric base scenario as the overlap between
/// forward and backscatter intervals varies.
pub fn sweep(
    s: &Scenario,
    grid: Option<&[Rational]>,
    out: &OutputPaths,
) -> Result<Outcome, CliError> {
    let g = s.geometry()?;
    let (l, fwd, back) = g.as_symmetric().ok_or_else(|| {
        CliError::BadSweep(
            "all four arrays must share one length, t11 = r11 = t22 = r22, and t12 = r12".into(),
        )
    })?;
    let (f, b) = (fwd.measure(), back.measure());
    let grid = match grid {
        Some(values) => values.to_vec(),
        None => default_grid(&rational::min(f.clone(), b.clone())),
    };
    if grid.is_empty() {
        return Err(CliError::BadSweep("the overlap grid is empty".into()));
    }

    let mut rows = Vec::with_capacity(grid.len());
    let mut regions = Vec::with_capacity(grid.len());
    for o in &grid {
        let gg = overlap_geometry(l, &f, &b, o)?;
        rows.push(SweepRow {
            overlap: o.clone(),
            caps: fd_caps(&gg),
            rectangular: is_rectangular(&gg),
        });
        regions.push((format!("overlap {}", fmt(o)), fd_region(&gg)));
    }

    let mut sorted: Vec<&SweepRow> = rows.iter().collect();
    sorted.sort_by(|a, b| a.overlap.cmp(&b.overlap));
    let monotone = sorted
        .windows(2)
        .all(|w| w[1].caps.dsum_max <= w[0].caps.dsum_max);

    let mut r = String::new();
    let _ = writeln!(r, "scenario: {}", s.name);
    let _ = writeln!(
        r,
        "L = {}, |fwd| = {}, |back| = {}",
        fmt(l),
        fmt(&f),
        fmt(&b)
    );
    let _ = writeln!(
        r,
        "overlap  d1_cap  d2_cap  dsum_cap  rectangular  vertices"
    );
    for (row, (_, region)) in rows.iter().zip(&regions) {
        let _ = writeln!(
            r,
            "{:<8} {:<7} {:<7} {:<9} {:<12} {}",
            fmt(&row.overlap),
            fmt(&row.caps.d1_max),
            fmt(&row.caps.d2_max),
            fmt(&row.caps.dsum_max),
            row.rectangular,
            vertex_list(region)
        );
    }
    let _ = writeln!(
        r,
        "dsum_cap non-increasing in overlap: {}",
        if monotone { "yes" } else { "NO" }
    );

    if let Some(path) = &out.csv {
        write_file(path, &output::sweep_csv(&rows))?;
    }
    if let Some(path) = &out.svg {
        let plotted: Vec<(String, &DofRegion)> =
            regions.iter().map(|(name, r)| (name.clone(), r)).collect();
        write_file(path, &output::regions_svg(&s.name, &plotted))?;
    }
    Ok(Outcome {
        report: r,
        success: monotone,
    })
}

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    /// Number of seeds, `0..seeds`; falls back to the scenario's setting.
    pub seeds: Option<u64>,
    pub auto_rescale: bool,
    pub rank_tol: Option<f64>,
    /// Fill the zero blocks of `s12` before checking (negative control).
    pub corrupt_support: bool,
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

/// Discretized-operator checks over several random channels.
pub fn verify(s: &Scenario, opts: &VerifyOptions, out: &OutputPaths) -> Result<Outcome, CliError> {
    let g = s.geometry()?;
    let settings = s.oracle_settings();
    let seeds = opts.seeds.unwrap_or(settings.seeds);
    let rank_tol = opts.rank_tol.unwrap_or(settings.rank_tol);
    if !(rank_tol > 0.0 && rank_tol < 1.0) {
        return Err(CliError::Usage(format!(
            "rank tolerance {rank_tol} must lie in (0, 1)"
        )));
    }
    if seeds == 0 {
        return Err(CliError::Usage("at least one seed is required".into()));
    }

    let mut r = String::new();
    let _ = writeln!(r, "scenario: {}", s.name);
    let g = match allocate_basis(&g) {
        Ok(_) => {
            if opts.auto_rescale {
                let _ = writeln!(r, "scale: 1 (already integral)");
            }
            g
        }
        Err(e @ fddof::Error::Quantization { .. }) if !opts.auto_rescale => {
            return Err(CliError::Quantization(e));
        }
        Err(fddof::Error::Quantization { .. }) => {
            let (scaled, scale) = integer_rescale(&g);
            let _ = writeln!(r, "scale: {scale} (array lengths multiplied by {scale})");
            scaled
        }
        Err(e) => return Err(CliError::Quantization(e)),
    };
    let basis = allocate_basis(&g).map_err(CliError::Quantization)?;
    let _ = writeln!(
        r,
        "dimensions: T1 {}, T2 {}, R1 {}, R2 {}",
        basis.t1.dim(),
        basis.t2.dim(),
        basis.r1.dim(),
        basis.r2.dim()
    );
    let _ = writeln!(r, "rank tolerance: {rank_tol:e}, seeds: 0..{seeds}");

    let seed_list: Vec<u64> = (0..seeds).collect();
    let trials: Vec<TrialReport> = if opts.corrupt_support {
        seed_list
            .iter()
            .map(|&seed| {
                let mut ch = sample_channel(&g, seed)?.with_rank_tol(rank_tol)?;
                ch.corrupt_support();
                Ok(report_for(&ch, &g))
            })
            .collect::<fddof::Result<_>>()
    } else {
        run_trials(&g, &seed_list, rank_tol)
    }
    .map_err(|e| CliError::Usage(e.to_string()))?;

    // identity names come from the first trial; every trial checks the same set
    let names: Vec<&str> = trials[0].operators.checks.iter().map(|c| c.name).collect();
    let expected: Vec<String> = trials[0]
        .operators
        .checks
        .iter()
        .map(|c| fmt(&c.expected))
        .collect();
    let _ = writeln!(r, "expected:");
    for (name, value) in names.iter().zip(&expected) {
        let _ = writeln!(r, "  {name:<13} = {value}");
    }
    let corners = corner_points(&g);
    let _ = writeln!(
        r,
        "  corner        = {} (d1 = d1_max, d2 = min(dsum_max - d1_max, d2_max))",
        corners.p_prime
    );

    let mut header = format!("{:<6}", "seed");
    for name in &names {
        let _ = write!(header, " {name:>13}");
    }
    let _ = write!(
        header,
        " {:>9} {:>10} {:>11}",
        "corner", "leakage", "certificate"
    );
    let _ = writeln!(r, "{header}");

    let mut all_passed = true;
    let mut ill: Vec<u64> = Vec::new();
    for t in &trials {
        let mut line = format!("{:<6}", t.seed);
        for c in &t.operators.checks {
            let cell = if c.passed() {
                "pass".to_string()
            } else {
                format!("FAIL({})", c.measured)
            };
            let _ = write!(line, " {cell:>13}");
        }
        let (d1, d2) = t.zero_forcing.corner();
        let corner = format!("({d1},{d2})");
        let corner = if t.corner_matches() {
            corner
        } else {
            format!("{corner}!")
        };
        let _ = write!(
            line,
            " {:>9} {:>10.1e} {:>11}",
            corner,
            t.zero_forcing.leakage,
            pass(t.certificate_holds())
        );
        let _ = writeln!(r, "{line}");
        all_passed &= t.passed();
        if !t.operators.ill_conditioned.is_empty() {
            ill.push(t.seed);
        }
    }

    let from_caps = corners_from_caps(&fd_caps(&g));
    let identity = corners == from_caps;
    all_passed &= identity;
    let _ = writeln!(
        r,
        "corner identity: P' = {}, P'' = {} against caps {}, {}: {}",
        corners.p_prime,
        corners.p_double_prime,
        from_caps.p_prime,
        from_caps.p_double_prime,
        pass(identity)
    );
    if !ill.is_empty() {
        let _ = writeln!(
            r,
            "warning: rank decisions near the tolerance for seeds {ill:?}; results there are less reliable"
        );
    }
    let failed = trials.iter().filter(|t| !t.passed()).count();
    let _ = writeln!(
        r,
        "verdict: {} ({} of {} seeds passed; leakage tolerance {LEAKAGE_TOL:e})",
        if all_passed { "PASS" } else { "FAIL" },
        trials.len() - failed,
        trials.len()
    );

    if out.csv.is_some() || out.svg.is_some() {
        let fd = fd_region(&g);
        write_region_files(out, &s.name, &fd, &[("full duplex".into(), &fd)])?;
    }
    Ok(Outcome {
        report: r,
        success: all_passed,
    })
}
