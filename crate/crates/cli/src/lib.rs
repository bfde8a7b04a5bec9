//! Command-line front end: builds configurations, computes their singular
//! points and Harbourne data, runs the searches, and prints tables, CSV or JSON.

pub mod input;
mod render;

use std::io::{self, Write};
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, ValueEnum};
use serde::Serialize;
use surface_lines::catalog::{
    bauer_profile, cubic_profile, fermat_lines, fermat_profile, max_lines_bound, on_surface,
    rams_profile, schur_profile, Arrangement, IncidenceProfile,
};
use surface_lines::harbourne::{
    self, bauer_search_with_points, extremal_profile_search, harbourne_linear, main_theorem_bound,
    miyaoka_check, strict_bound_check, HarbourneReport,
};
use surface_lines::incidence::{
    incidence_count, profile_from_arrangement, singular_points, squared_point_count,
    valency_consistent, verify_identities, weighted_point_count, SingularPoint,
};
use surface_lines::{Rational, Rounding};
use thiserror::Error;

use input::{load_custom_lines, load_custom_profile, LinesFile};
use render::{key_values, Table};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error(transparent)]
    Domain(#[from] surface_lines::Error),
    #[error("check failed: {0}")]
    CheckFailed(String),
    #[error("output: {0}")]
    Output(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    /// 1 for usage and input problems, 2 for domain and inapplicability errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Input(_) | CliError::Output(_) | CliError::Io(_) => 1,
            CliError::Domain(_) | CliError::CheckFailed(_) => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// List the lines or the incidence profile of a configuration.
    Catalog,
    /// Linear Harbourne constant and bounds.
    Analyze,
    /// Incidence profile (t_k counts), optionally with singular points.
    Profile,
    /// Counting identities and the valency check.
    Verify,
    /// Miyaoka's inequality and the lower bound for H_L (n >= 4).
    Bound,
    /// One row per degree (or Eckardt count for cubics).
    Sweep,
    /// Sub-arrangements whose singular points are all quadruple points.
    SearchBauer,
    /// Abstract t-vectors passing Miyaoka's inequality, ranked by H_L.
    SearchExtremal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Surface {
    Fermat,
    Rams,
    Schur,
    Cubic,
    Bauer,
    Custom,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RoundingMode {
    Truncate,
    Nearest,
}

impl From<RoundingMode> for Rounding {
    fn from(m: RoundingMode) -> Self {
        match m {
            RoundingMode::Truncate => Rounding::Truncate,
            RoundingMode::Nearest => Rounding::Nearest,
        }
    }
}

/// Inclusive integer range written `a:b`, or a single value `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub start: u32,
    pub end: u32,
}

impl Span {
    fn single(&self) -> Option<u32> {
        (self.start == self.end).then_some(self.start)
    }
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<u32>().map_err(|_| format!("bad range bound {t:?}"));
        let (start, end) = match s.split_once(':') {
            Some((a, b)) => (num(a)?, num(b)?),
            None => (num(s)?, num(s)?),
        };
        if start > end {
            return Err(format!("empty range {s}"));
        }
        Ok(Span { start, end })
    }
}

#[derive(Parser, Debug, Clone)]
#[command(name = "surface-lines", version, about = "Line configurations on smooth surfaces in P^3 and their linear Harbourne constants")]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Surface::Fermat)]
    pub surface: Surface,
    /// Surface degree n.
    #[arg(long)]
    pub degree: Option<u32>,
    /// Degree range a:b for sweeps.
    #[arg(long)]
    pub degrees: Option<Span>,
    /// Number of Eckardt points on a cubic, or a range a:b for sweeps.
    #[arg(long)]
    pub eckardt: Option<Span>,
    /// Profile JSON {n, d, t: {k: count}} for --surface custom.
    #[arg(long)]
    pub profile: Option<PathBuf>,
    /// Lines JSON {n, lines: [[point, point], ...]} for --surface custom.
    #[arg(long)]
    pub lines: Option<PathBuf>,
    /// Compute Fermat profiles from the explicit lines instead of the closed form.
    #[arg(long)]
    pub geometric: bool,
    /// Check that every line meets exactly this many others.
    #[arg(long)]
    pub valency: Option<u64>,
    /// Number of lines in a Bauer sub-arrangement.
    #[arg(long, default_value_t = 16)]
    pub size: usize,
    /// Stop after this many Bauer solutions; 0 for all.
    #[arg(long, default_value_t = 1)]
    pub max_solutions: usize,
    /// Number of lines d for the extremal search.
    #[arg(long)]
    pub line_count: Option<u64>,
    /// Largest multiplicity in the extremal search.
    #[arg(long, default_value_t = 4)]
    pub k_max: u32,
    /// Rows of extremal output to print; 0 for all.
    #[arg(long, default_value_t = 20)]
    pub top: usize,
    /// Include the singular points in `profile` output.
    #[arg(long)]
    pub points: bool,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Digits after the decimal point in rounded renderings.
    #[arg(long, default_value_t = 3)]
    pub places: usize,
    #[arg(long, value_enum, default_value_t = RoundingMode::Truncate)]
    pub rounding: RoundingMode,
    /// Write the report here instead of stdout.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Worker threads for the pair scan; output does not depend on it.
    #[arg(long)]
    pub threads: Option<usize>,
}

impl RunConfig {
    fn usage(msg: impl Into<String>) -> CliError {
        CliError::Usage(msg.into())
    }

    fn decimal(&self, r: &Rational) -> String {
        r.to_decimal(self.places, self.rounding.into())
    }

    fn degree(&self) -> Result<u32, CliError> {
        self.degree
            .or_else(|| self.degrees.and_then(|s| s.single()))
            .ok_or_else(|| Self::usage(format!("--surface {:?} needs --degree", self.surface).to_lowercase()))
    }

    fn eckardt(&self) -> Result<u32, CliError> {
        match self.eckardt {
            None => Ok(18),
            Some(s) => s
                .single()
                .ok_or_else(|| Self::usage("--eckardt takes a single value outside sweeps")),
        }
    }

    /// Checks surface/command compatibility before any work is done.
    pub fn validate(&self) -> Result<(), CliError> {
        if self.surface == Surface::Custom && self.profile.is_none() && self.lines.is_none() {
            return Err(Self::usage("--surface custom needs --profile or --lines"));
        }
        if self.profile.is_some() && self.lines.is_some() {
            return Err(Self::usage("give either --profile or --lines, not both"));
        }
        if self.threads == Some(0) {
            return Err(Self::usage("--threads must be at least 1"));
        }
        match self.command {
            Command::SearchBauer => {
                let explicit = self.surface == Surface::Fermat
                    || (self.surface == Surface::Custom && self.lines.is_some());
                if !explicit {
                    return Err(Self::usage(
                        "search-bauer needs explicit lines: --surface fermat or --surface custom --lines",
                    ));
                }
            }
            Command::Sweep => {
                if !matches!(self.surface, Surface::Fermat | Surface::Rams | Surface::Cubic) {
                    return Err(Self::usage("sweep supports --surface fermat, rams or cubic"));
                }
                if self.surface != Surface::Cubic && self.degrees.is_none() {
                    return Err(Self::usage("sweep needs --degrees a:b"));
                }
            }
            Command::SearchExtremal if self.degree.is_none() || self.line_count.is_none() => {
                return Err(Self::usage("search-extremal needs --degree and --line-count"));
            }
            _ => {}
        }
        Ok(())
    }
}

/// Runs one command, writing its report to `out`. The report is written even
/// when a verification check fails.
pub fn run(config: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    config.validate()?;
    let mut buf = Vec::new();
    let result = match config.threads {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| CliError::Usage(e.to_string()))?;
            pool.install(|| dispatch(config, &mut buf))
        }
        None => dispatch(config, &mut buf),
    };
    out.write_all(&buf)?;
    out.flush()?;
    result
}

fn dispatch(cfg: &RunConfig, out: &mut Vec<u8>) -> Result<(), CliError> {
    match cfg.command {
        Command::Catalog => catalog(cfg, out),
        Command::Analyze => analyze(cfg, out),
        Command::Profile => profile(cfg, out),
        Command::Verify => verify(cfg, out),
        Command::Bound => bound(cfg, out),
        Command::Sweep => sweep(cfg, out),
        Command::SearchBauer => search_bauer(cfg, out),
        Command::SearchExtremal => search_extremal(cfg, out),
    }
}

/// An explicit arrangement, when the configuration has one.
fn explicit_arrangement(cfg: &RunConfig) -> Result<Option<Arrangement>, CliError> {
    match cfg.surface {
        Surface::Fermat => Ok(Some(fermat_lines(cfg.degree()?)?)),
        Surface::Custom => cfg.lines.as_deref().map(load_custom_lines).transpose(),
        _ => Ok(None),
    }
}

fn abstract_profile(cfg: &RunConfig) -> Result<IncidenceProfile, CliError> {
    Ok(match cfg.surface {
        Surface::Fermat => fermat_profile(cfg.degree()?)?,
        Surface::Rams => rams_profile(cfg.degree()?)?,
        Surface::Schur => schur_profile(),
        Surface::Cubic => cubic_profile(cfg.eckardt()?)?,
        Surface::Bauer => bauer_profile(),
        Surface::Custom => match (&cfg.profile, &cfg.lines) {
            (Some(p), _) => load_custom_profile(p)?,
            (None, Some(l)) => profile_from_arrangement(&load_custom_lines(l)?),
            (None, None) => return Err(RunConfig::usage("--surface custom needs --profile or --lines")),
        },
    })
}

/// The profile to analyze: from explicit geometry for custom lines or
/// `--geometric`, otherwise from the catalog.
fn resolve_profile(cfg: &RunConfig) -> Result<IncidenceProfile, CliError> {
    if cfg.geometric && cfg.surface == Surface::Fermat {
        return Ok(profile_from_arrangement(&fermat_lines(cfg.degree()?)?));
    }
    abstract_profile(cfg)
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_else(|| "n/a".into())
}

#[derive(Serialize)]
struct LineRow {
    index: usize,
    label: String,
    p01: String,
    p02: String,
    p03: String,
    p12: String,
    p13: String,
    p23: String,
}

fn catalog(cfg: &RunConfig, out: &mut Vec<u8>) -> Result<(), CliError> {
    let Some(arr) = explicit_arrangement(cfg)? else {
        return profile(cfg, out);
    };
    match cfg.format {
        Format::Json => render::json(&LinesFile::from_arrangement(&arr), out),
        Format::Csv | Format::Table => {
            let rows: Vec<LineRow> = arr
                .lines()
                .iter()
                .zip(arr.labels())
                .enumerate()
                .map(|(index, (l, label))| {
                    let p = l.plucker().clone().map(|c| c.to_string());
                    let [p01, p02, p03, p12, p13, p23] = p;
                    LineRow { index, label: label.clone(), p01, p02, p03, p12, p13, p23 }
                })
                .collect();
            if cfg.format == Format::Csv {
                return render::csv(&rows, out);
            }
            writeln!(out, "{} lines on a surface of degree {}", arr.len(), arr.surface_degree())?;
            let mut t = Table::new(["#", "label", "p01", "p02", "p03", "p12", "p13", "p23"]);
            for r in rows {
                t.row([r.index.to_string(), r.label, r.p01, r.p02, r.p03, r.p12, r.p13, r.p23]);
            }
            t.write(out)
        }
    }
}

#[derive(Serialize)]
struct ProfileView<'a> {
    profile: &'a IncidenceProfile,
    s: u64,
    incidence_count: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    singular_points: Option<&'a [SingularPoint]>,
}

#[derive(Serialize)]
struct CountRow {
    k: u32,
    t_k: u64,
}

fn profile(cfg: &RunConfig, out: &mut Vec<u8>) -> Result<(), CliError> {
    let explicit = if cfg.points || cfg.geometric || (cfg.surface == Surface::Custom && cfg.lines.is_some()) {
        explicit_arrangement(cfg)?
    } else {
        None
    };
    let (profile, points) = match &explicit {
        Some(arr) => {
            let pts = singular_points(arr);
            (profile_from_arrangement(arr), Some(pts))
        }
        None => (abstract_profile(cfg)?, None),
    };
    let view = ProfileView {
        profile: &profile,
        s: profile.singular_points(),
        incidence_count: incidence_count(&profile),
        singular_points: points.as_deref().filter(|_| cfg.points),
    };
    match cfg.format {
        Format::Json => render::json(&view, out),
        Format::Csv => {
            let rows: Vec<CountRow> = profile.t().iter().map(|(&k, &t_k)| CountRow { k, t_k }).collect();
            render::csv(&rows, out)
        }
        Format::Table => {
            key_values(
                &[
                    ("n", profile.surface_degree().to_string()),
                    ("d", profile.lines().to_string()),
                    ("s", view.s.to_string()),
                    ("I_d", view.incidence_count.to_string()),
                ],
                out,
            )?;
            let mut t = Table::new(["k", "t_k"]);
            for (k, c) in profile.t() {
                t.row([k.to_string(), c.to_string()]);
            }
            writeln!(out)?;
            t.write(out)?;
            if let Some(points) = view.singular_points {
                writeln!(out)?;
                let mut t = Table::new(["point", "mult", "lines"]);
                for p in points {
                    let lines: Vec<String> = p.incident_line_indices.iter().map(|i| i.to_string()).collect();
                    t.row([p.location.to_string(), p.multiplicity.to_string(), lines.join(",")]);
                }
                t.write(out)?;
            }
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct ReportView<'a> {
    #[serde(flatten)]
    report: &'a HarbourneReport,
    h_linear_decimal: String,
    main_bound_decimal: Option<String>,
}

#[derive(Serialize)]
struct FlatReport {
    n: u32,
    d: u64,
    s: u64,
    t_vector: String,
    incidence_count: u64,
    strict_transform_sq: String,
    h_linear: String,
    h_linear_decimal: String,
    miyaoka_lhs: Option<i64>,
    miyaoka_rhs: Option<i64>,
    miyaoka_holds: Option<bool>,
    main_bound: Option<String>,
    main_bound_decimal: Option<String>,
    main_bound_holds: Option<bool>,
    strict_bound_holds: Option<bool>,
}

fn flatten(cfg: &RunConfig, r: &HarbourneReport) -> FlatReport {
    FlatReport {
        n: r.n,
        d: r.d,
        s: r.s,
        t_vector: r.profile.t_vector_string(),
        incidence_count: r.incidence_count,
        strict_transform_sq: r.strict_transform_sq.to_fraction_string(),
        h_linear: r.h_linear.to_fraction_string(),
        h_linear_decimal: cfg.decimal(&r.h_linear),
        miyaoka_lhs: r.miyaoka.map(|m| m.lhs as i64),
        miyaoka_rhs: r.miyaoka.map(|m| m.rhs as i64),
        miyaoka_holds: r.miyaoka.map(|m| m.holds),
        main_bound: r.main_bound.as_ref().map(Rational::to_fraction_string),
        main_bound_decimal: r.main_bound.as_ref().map(|b| cfg.decimal(b)),
        main_bound_holds: r.main_bound_holds,
        strict_bound_holds: r.strict_bound.as_ref().map(|s| s.holds),
    }
}

fn analyze(cfg: &RunConfig, out: &mut Vec<u8>) -> Result<(), CliError> {
    let p = resolve_profile(cfg)?;
    let report = harbourne::analyze(&p)?;
    match cfg.format {
        Format::Json => render::json(
            &ReportView {
                report: &report,
                h_linear_decimal: cfg.decimal(&report.h_linear),
                main_bound_decimal: report.main_bound.as_ref().map(|b| cfg.decimal(b)),
            },
            out,
        ),
        Format::Csv => render::csv(&[flatten(cfg, &report)], out),
        Format::Table => {
            let f = flatten(cfg, &report);
            let inapplicable = || "n/a (requires n >= 4)".to_string();
            let mut rows = vec![
                ("n", f.n.to_string()),
                ("d", f.d.to_string()),
                ("s", f.s.to_string()),
                ("t", f.t_vector),
                ("I_d", f.incidence_count.to_string()),
                ("L~^2", report.strict_transform_sq.to_string()),
                ("H_L", format!("{} ({})", report.h_linear, f.h_linear_decimal)),
            ];
            match (&report.miyaoka, &report.main_bound) {
                (Some(m), Some(b)) => {
                    rows.push(("Miyaoka", format!("{} <= {}: {}", m.lhs, m.rhs, m.holds)));
                    rows.push(("H_L bound", format!("{} ({}): {}", b, cfg.decimal(b), opt(report.main_bound_holds))));
                    if let Some(s) = &report.strict_bound {
                        rows.push(("L~^2 > -4s-2n(n-1)^2", format!("{} > {}: {}", s.strict_transform_sq, s.lower, s.holds)));
                    }
                }
                _ => {
                    rows.push(("Miyaoka", inapplicable()));
                    rows.push(("H_L bound", inapplicable()));
                }
            }
            key_values(&rows, out)
        }
    }
}

#[derive(Serialize)]
struct Check {
    name: String,
    lhs: String,
    rhs: String,
    holds: bool,
}

impl Check {
    fn new(name: impl Into<String>, lhs: impl ToString, rhs: impl ToString, holds: bool) -> Self {
        Check { name: name.into(), lhs: lhs.to_string(), rhs: rhs.to_string(), holds }
    }
}

fn profile_checks(cfg: &RunConfig, p: &IncidenceProfile) -> Vec<Check> {
    let n = p.surface_degree() as i128;
    let d = p.lines() as i128;
    let long = (2 - n) * d + incidence_count(p) as i128 - squared_point_count(p) as i128;
    let short = (2 - n) * d - weighted_point_count(p) as i128;
    let mut checks = vec![
        Check::new("(2-n)d + I_d - sum k^2 t_k = (2-n)d - sum k t_k", long, short, long == short),
        Check::new("d <= n(7n-12)", p.lines(), max_lines_bound(p.surface_degree()), p.lines() <= max_lines_bound(p.surface_degree())),
    ];
    if p.surface_degree() == 3 && p.lines() == 27 && p.t().keys().all(|&k| k <= 3) {
        let lhs = p.t_k(2) + 3 * p.t_k(3);
        checks.push(Check::new("t_2 + 3 t_3 = 135", lhs, 135, lhs == 135));
    }
    if let Some(v) = cfg.valency {
        checks.push(Check::new(
            format!("I_d = d * {v} (every line meets {v} others)"),
            incidence_count(p),
            p.lines() * v,
            valency_consistent(p, v),
        ));
    }
    checks
}

#[derive(Serialize)]
struct VerifyView {
    profile: IncidenceProfile,
    checks: Vec<Check>,
    all_hold: bool,
}

fn verify(cfg: &RunConfig, out: &mut Vec<u8>) -> Result<(), CliError> {
    let (profile, mut checks) = match explicit_arrangement(cfg)? {
        Some(arr) => {
            let report = verify_identities(&arr);
            let mut checks: Vec<Check> = report
                .checks
                .iter()
                .map(|c| Check::new(c.name, c.lhs, c.rhs, c.holds))
                .collect();
            if cfg.surface == Surface::Fermat {
                let n = arr.surface_degree();
                let on = arr.lines().iter().filter(|l| on_surface(l, n)).count();
                checks.push(Check::new("lines on x^n+y^n+z^n+w^n = 0", on, arr.len(), on == arr.len()));
                let closed = fermat_profile(n)?;
                checks.push(Check::new(
                    "computed profile = (3n^2, t_2 = 3n^3, t_n = 6n)",
                    &report.profile,
                    &closed,
                    report.profile == closed,
                ));
            }
            (report.profile, checks)
        }
        None => (abstract_profile(cfg)?, Vec::new()),
    };
    checks.extend(profile_checks(cfg, &profile));
    let all_hold = checks.iter().all(|c| c.holds);
    let view = VerifyView { profile, checks, all_hold };
    match cfg.format {
        Format::Json => render::json(&view, out)?,
        Format::Csv => render::csv(&view.checks, out)?,
        Format::Table => {
            writeln!(out, "{}", view.profile)?;
            let mut t = Table::new(["check", "lhs", "rhs", "holds"]);
            for c in &view.checks {
                t.row([c.name.clone(), c.lhs.clone(), c.rhs.clone(), c.holds.to_string()]);
            }
            t.write(out)?;
        }
    }
    if all_hold {
        Ok(())
    } else {
        let failed: Vec<&str> = view.checks.iter().filter(|c| !c.holds).map(|c| c.name.as_str()).collect();
        Err(CliError::CheckFailed(failed.join("; ")))
    }
}

#[derive(Serialize)]
struct BoundView {
    profile: IncidenceProfile,
    miyaoka_lhs: i64,
    miyaoka_rhs: i64,
    miyaoka_holds: bool,
    h_linear: Rational,
    h_linear_decimal: String,
    main_bound: Rational,
    main_bound_decimal: String,
    main_bound_holds: bool,
    strict_transform_sq: Rational,
    strict_lower: Rational,
    strict_bound_holds: bool,
}

fn bound(cfg: &RunConfig, out: &mut Vec<u8>) -> Result<(), CliError> {
    let p = resolve_profile(cfg)?;
    let m = miyaoka_check(&p)?;
    let b = main_theorem_bound(&p)?;
    let h = harbourne_linear(&p)?;
    let strict = strict_bound_check(&p)?;
    let view = BoundView {
        miyaoka_lhs: m.lhs as i64,
        miyaoka_rhs: m.rhs as i64,
        miyaoka_holds: m.holds,
        h_linear_decimal: cfg.decimal(&h),
        main_bound_decimal: cfg.decimal(&b),
        main_bound_holds: h >= b,
        h_linear: h,
        main_bound: b,
        strict_transform_sq: strict.strict_transform_sq,
        strict_lower: strict.lower,
        strict_bound_holds: strict.holds,
        profile: p,
    };
    match cfg.format {
        Format::Json => render::json(&view, out),
        Format::Csv => render::csv(&[flatten(cfg, &harbourne::analyze(&view.profile)?)], out),
        Format::Table => key_values(
            &[
                ("profile", view.profile.to_string()),
                ("Miyaoka", format!("{} <= {}: {}", view.miyaoka_lhs, view.miyaoka_rhs, view.miyaoka_holds)),
                ("H_L", format!("{} ({})", view.h_linear, view.h_linear_decimal)),
                ("H_L bound", format!("{} ({})", view.main_bound, view.main_bound_decimal)),
                ("H_L >= bound", view.main_bound_holds.to_string()),
                ("L~^2 > -4s-2n(n-1)^2", format!("{} > {}: {}", view.strict_transform_sq, view.strict_lower, view.strict_bound_holds)),
            ],
            out,
        ),
    }
}

#[derive(Serialize)]
struct SweepRow {
    n: u32,
    d: u64,
    s: u64,
    t_vector: String,
    h_linear: String,
    h_linear_decimal: String,
    miyaoka_lhs: Option<i64>,
    miyaoka_rhs: Option<i64>,
    main_bound: Option<String>,
    main_bound_decimal: Option<String>,
}

fn sweep(cfg: &RunConfig, out: &mut Vec<u8>) -> Result<(), CliError> {
    let profiles: Vec<IncidenceProfile> = match cfg.surface {
        Surface::Cubic => {
            let span = cfg.eckardt.unwrap_or(Span { start: 0, end: 18 });
            (span.start..=span.end).map(cubic_profile).collect::<Result<_, _>>()?
        }
        Surface::Fermat if cfg.geometric => {
            let span = cfg.degrees.expect("validated");
            (span.start..=span.end)
                .map(|n| fermat_lines(n).map(|a| profile_from_arrangement(&a)))
                .collect::<Result<_, _>>()?
        }
        Surface::Fermat => {
            let span = cfg.degrees.expect("validated");
            (span.start..=span.end).map(fermat_profile).collect::<Result<_, _>>()?
        }
        Surface::Rams => {
            let span = cfg.degrees.expect("validated");
            (span.start..=span.end).map(rams_profile).collect::<Result<_, _>>()?
        }
        _ => unreachable!("validated"),
    };
    let rows: Vec<SweepRow> = profiles
        .iter()
        .map(|p| {
            let r = harbourne::analyze(p)?;
            let f = flatten(cfg, &r);
            Ok(SweepRow {
                n: f.n,
                d: f.d,
                s: f.s,
                t_vector: f.t_vector,
                h_linear: f.h_linear,
                h_linear_decimal: f.h_linear_decimal,
                miyaoka_lhs: f.miyaoka_lhs,
                miyaoka_rhs: f.miyaoka_rhs,
                main_bound: f.main_bound,
                main_bound_decimal: f.main_bound_decimal,
            })
        })
        .collect::<Result<_, CliError>>()?;
    match cfg.format {
        Format::Csv => render::csv(&rows, out),
        Format::Json => render::json(&rows, out),
        Format::Table => {
            let mut t = Table::new(["n", "d", "s", "t", "H_L", "H_L ~", "Miyaoka", "bound", "bound ~"]);
            for r in rows {
                let miyaoka = match (r.miyaoka_lhs, r.miyaoka_rhs) {
                    (Some(l), Some(rhs)) => format!("{l} <= {rhs}"),
                    _ => "n/a".into(),
                };
                t.row([
                    r.n.to_string(),
                    r.d.to_string(),
                    r.s.to_string(),
                    r.t_vector,
                    r.h_linear,
                    r.h_linear_decimal,
                    miyaoka,
                    opt(r.main_bound),
                    opt(r.main_bound_decimal),
                ]);
            }
            t.write(out)
        }
    }
}

#[derive(Serialize)]
struct BauerView {
    line_indices: Vec<usize>,
    labels: Vec<String>,
    point_indices: Vec<usize>,
    profile: IncidenceProfile,
    /// Profile recomputed from scratch on the sub-arrangement.
    recomputed_profile: IncidenceProfile,
    h_linear: Option<Rational>,
    main_bound: Option<Rational>,
}

fn search_bauer(cfg: &RunConfig, out: &mut Vec<u8>) -> Result<(), CliError> {
    let arr = explicit_arrangement(cfg)?.expect("validated");
    let points = singular_points(&arr);
    let cap = (cfg.max_solutions > 0).then_some(cfg.max_solutions);
    let found = bauer_search_with_points(&arr, &points, cfg.size, cap);
    let views: Vec<BauerView> = found
        .into_iter()
        .map(|sol| {
            let sub = arr.subset(&sol.line_indices)?;
            Ok(BauerView {
                labels: sub.labels().to_vec(),
                recomputed_profile: profile_from_arrangement(&sub),
                h_linear: harbourne_linear(&sol.profile).ok(),
                main_bound: main_theorem_bound(&sol.profile).ok(),
                line_indices: sol.line_indices,
                point_indices: sol.point_indices,
                profile: sol.profile,
            })
        })
        .collect::<Result<_, CliError>>()?;
    match cfg.format {
        Format::Json => render::json(&views, out),
        Format::Csv | Format::Table => {
            #[derive(Serialize)]
            struct Row {
                solution: usize,
                lines: String,
                t_vector: String,
                h_linear: String,
                main_bound: String,
            }
            let rows: Vec<Row> = views
                .iter()
                .enumerate()
                .map(|(i, v)| Row {
                    solution: i,
                    lines: v.labels.join(" "),
                    t_vector: v.recomputed_profile.t_vector_string(),
                    h_linear: opt(v.h_linear.as_ref()),
                    main_bound: opt(v.main_bound.as_ref()),
                })
                .collect();
            if cfg.format == Format::Csv {
                return render::csv(&rows, out);
            }
            writeln!(out, "{} solution(s) with {} lines among {} lines", rows.len(), cfg.size, arr.len())?;
            let mut t = Table::new(["#", "t", "H_L", "bound", "lines"]);
            for r in rows {
                t.row([r.solution.to_string(), r.t_vector, r.h_linear, r.main_bound, r.lines]);
            }
            t.write(out)
        }
    }
}

const EXTREMAL_CAVEAT: &str = "abstract t-vectors passing Miyaoka's inequality; not necessarily realized by lines on a surface";

#[derive(Serialize)]
struct ExtremalRow {
    rank: usize,
    n: u32,
    d: u64,
    s: u64,
    t_vector: String,
    h_linear: Option<String>,
    h_linear_decimal: Option<String>,
    miyaoka_lhs: i64,
    miyaoka_rhs: i64,
}

#[derive(Serialize)]
struct ExtremalView {
    caveat: &'static str,
    total: usize,
    rows: Vec<ExtremalRow>,
}

fn search_extremal(cfg: &RunConfig, out: &mut Vec<u8>) -> Result<(), CliError> {
    let n = cfg.degree.expect("validated");
    let d = cfg.line_count.expect("validated");
    let found = extremal_profile_search(n, d, cfg.k_max)?;
    let total = found.len();
    let take = if cfg.top == 0 { total } else { cfg.top.min(total) };
    let rows = found
        .into_iter()
        .take(take)
        .enumerate()
        .map(|(rank, c)| {
            let m = miyaoka_check(&c.profile)?;
            Ok(ExtremalRow {
                rank,
                n,
                d,
                s: c.profile.singular_points(),
                t_vector: c.profile.t_vector_string(),
                h_linear_decimal: c.h_linear.as_ref().map(|h| cfg.decimal(h)),
                h_linear: c.h_linear.as_ref().map(Rational::to_fraction_string),
                miyaoka_lhs: m.lhs as i64,
                miyaoka_rhs: m.rhs as i64,
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let view = ExtremalView { caveat: EXTREMAL_CAVEAT, total, rows };
    match cfg.format {
        Format::Json => render::json(&view, out),
        Format::Csv => render::csv(&view.rows, out),
        Format::Table => {
            writeln!(out, "{total} profiles; {EXTREMAL_CAVEAT}")?;
            let mut t = Table::new(["#", "t", "s", "H_L", "H_L ~", "Miyaoka"]);
            for r in view.rows {
                t.row([
                    r.rank.to_string(),
                    r.t_vector,
                    r.s.to_string(),
                    opt(r.h_linear),
                    opt(r.h_linear_decimal),
                    format!("{} <= {}", r.miyaoka_lhs, r.miyaoka_rhs),
                ]);
            }
            t.write(out)
        }
    }
}
