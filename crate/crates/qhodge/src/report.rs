//! Run configuration, report assembly and emission (JSON, CSV, text).
//!
//! Every report carries the configuration it was produced from, including the
//! seed, an overall verdict and the names of failing checks. Progress goes to
//! the diagnostic stream; reports contain no timings so that a fixed
//! configuration always yields byte-identical output.

use crate::complex::{Calculi, CheckItem, ComplexError, DualityReport, HodgeRow, WeakIsoReport};
use crate::field::{Field, FieldSpec, PrimeField, SymMode, SymbolicField};
use crate::partition::{Family, GenPartition, GroupSpec, Window};
use crate::spectral::{
    cohomology_prediction, eigen_a, eigen_bcd, limit_checks, predicted_root_of_unity_zeros, recursion_check, zero_scan, Evaluator, Regime,
    SpectralError, SpectralParams, Tau, ZSpec,
};
use serde::Serialize;
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Spectrum,
    Regularity,
    RootOfUnity,
    Poincare,
    Exterior,
    Hodge,
    BraidCheck,
    DualityCheck,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Spectrum => "spectrum",
            Command::Regularity => "regularity",
            Command::RootOfUnity => "root-of-unity",
            Command::Poincare => "poincare",
            Command::Exterior => "exterior",
            Command::Hodge => "hodge",
            Command::BraidCheck => "braid-check",
            Command::DualityCheck => "duality-check",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            _ => Err(format!("unknown format '{s}' (expected json, csv or text)")),
        }
    }
}

/// Parses `+`, `-` or `both`.
pub fn parse_signs(s: &str) -> Result<Vec<Tau>, String> {
    match s {
        "+" | "plus" => Ok(vec![Tau::Plus]),
        "-" | "minus" => Ok(vec![Tau::Minus]),
        "both" => Ok(vec![Tau::Plus, Tau::Minus]),
        _ => Err(format!("expected +, - or both, got '{s}'")),
    }
}

/// Everything one invocation needs.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub group: GroupSpec,
    /// `None`: symbolic for the A series, z = 1 for B, C, D.
    pub z: Option<ZSpec>,
    /// `None`: chosen from the group and N (see [`RunConfig::resolved_field`]).
    pub field: Option<FieldSpec>,
    pub max_degree: Option<usize>,
    pub max_boxes: Option<u32>,
    pub window: Option<i32>,
    pub m: Option<u32>,
    pub lambda: Option<GenPartition>,
    pub degree: Option<usize>,
    pub signs: Vec<Tau>,
    pub taus: Vec<Tau>,
    pub seed: u64,
}

impl RunConfig {
    pub fn new(command: Command, group: GroupSpec) -> Self {
        RunConfig {
            command,
            group,
            z: None,
            field: None,
            max_degree: None,
            max_boxes: None,
            window: None,
            m: None,
            lambda: None,
            degree: None,
            signs: vec![Tau::Plus, Tau::Minus],
            taus: vec![Tau::Plus, Tau::Minus],
            seed: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.group.n
    }

    /// The matrix engine runs symbolically for N = 2 and over a seeded random
    /// prime field otherwise, unless a field is given explicitly.
    pub fn resolved_field(&self) -> Result<FieldSpec, RunError> {
        let sl = match self.group.family {
            Family::Gl => false,
            Family::Sl => true,
            _ => return Err(RunError::Usage("the matrix engine supports glq and slq only".into())),
        };
        let n = self.n() as u32;
        match &self.field {
            None if n <= 2 => Ok(if sl { FieldSpec::SlSymbolic { n } } else { FieldSpec::GlSymbolic }),
            None => Ok(FieldSpec::Numeric { p: 0, seed: self.seed }),
            Some(FieldSpec::GlSymbolic) if sl => Err(RunError::Usage("gl-symbolic requires --group glq".into())),
            Some(FieldSpec::SlSymbolic { .. }) if !sl => Err(RunError::Usage("sl-w requires --group slq".into())),
            Some(FieldSpec::SlSymbolic { .. }) => Ok(FieldSpec::SlSymbolic { n }),
            Some(other) => Ok(other.clone()),
        }
    }

    fn sym_mode(&self) -> SymMode {
        if self.group.family == Family::Sl {
            SymMode::Sl { n: self.n() as u32 }
        } else {
            SymMode::Gl
        }
    }

    fn check_degree(&self, k: usize) -> Result<(), RunError> {
        let top = self.n() * self.n();
        if k > top {
            return Err(RunError::Usage(format!("degree {k} exceeds N^2 = {top}")));
        }
        Ok(())
    }
}

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    /// Invalid flags or combinations; exit status 2.
    #[error("usage error: {0}")]
    Usage(String),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Usage(_) | RunError::Spectral(SpectralError::Params(_) | SpectralError::NotAdmissible(_) | SpectralError::WrongFamily(_) | SpectralError::Length { .. }) => 2,
            _ => 1,
        }
    }
}

/// Column-oriented view of a report, used by the CSV and text emitters.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    fn new(header: &[&str]) -> Self {
        Table { header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }
}

/// Echo of the configuration inside every report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigEcho {
    pub group: String,
    pub n: usize,
    pub z: String,
    pub field: Option<String>,
    pub seed: u64,
    pub max_degree: Option<usize>,
    pub window: Option<String>,
    pub signs: Vec<&'static str>,
    pub taus: Vec<&'static str>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumEntry {
    pub tau: &'static str,
    pub lambda: GenPartition,
    pub eigenvalue: String,
    pub recursion_ok: Option<bool>,
    pub limits_ok: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZeroSetResult {
    pub pairs_scanned: usize,
    pub zeros: Vec<(GenPartition, GenPartition)>,
    pub zeros_parity_filtered: Option<Vec<(GenPartition, GenPartition)>>,
    pub expected: Vec<(GenPartition, GenPartition)>,
    pub branches_agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExteriorRow {
    pub tau: &'static str,
    pub degree: usize,
    pub binomial: u64,
    pub rank_plus: Vec<usize>,
    pub rank_minus: Vec<usize>,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TaggedHodgeRow {
    pub tau: &'static str,
    #[serde(flatten)]
    pub row: HodgeRow,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TaggedDuality {
    pub tau: &'static str,
    pub sign: &'static str,
    #[serde(flatten)]
    pub report: DualityReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualityResult {
    pub pairings: Vec<TaggedDuality>,
    pub weak_isomorphism: WeakIsoReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Results {
    Spectrum(Vec<SpectrumEntry>),
    ZeroSet(ZeroSetResult),
    Poincare(crate::spectral::Prediction),
    Exterior(Vec<ExteriorRow>),
    Hodge(Vec<TaggedHodgeRow>),
    Checks(Vec<CheckItem>),
    Duality(DualityResult),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub config: ConfigEcho,
    pub ok: bool,
    pub failing_checks: Vec<String>,
    pub warnings: Vec<String>,
    pub results: Results,
    #[serde(skip)]
    pub table: Table,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        if self.ok {
            0
        } else {
            1
        }
    }
}

/// Emits a report in the requested format.
pub fn emit(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
            w.write_record(&report.table.header).expect("in-memory write");
            for r in &report.table.rows {
                w.write_record(r).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
        }
        Format::Text => {
            let mut s = String::new();
            let c = &report.config;
            let _ = writeln!(s, "{} {} N={} z={} seed={}", report.command, c.group, c.n, c.z, c.seed);
            if let Some(f) = &c.field {
                let _ = writeln!(s, "field: {f}");
            }
            let _ = writeln!(s, "status: {}", if report.ok { "PASS" } else { "FAIL" });
            for f in &report.failing_checks {
                let _ = writeln!(s, "failing: {f}");
            }
            for w in &report.warnings {
                let _ = writeln!(s, "warning: {w}");
            }
            let t = &report.table;
            let widths: Vec<usize> = (0..t.header.len())
                .map(|j| t.rows.iter().map(|r| r[j].chars().count()).chain([t.header[j].chars().count()]).max().unwrap_or(0))
                .collect();
            let line = |cells: &[String]| {
                let parts: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
                parts.join("  ").trim_end().to_string()
            };
            let _ = writeln!(s, "{}", line(&t.header));
            for r in &t.rows {
                let _ = writeln!(s, "{}", line(r));
            }
            s
        }
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

fn pair_str(p: &(GenPartition, GenPartition)) -> String {
    format!("({}, {})", p.0, p.1)
}

fn progress(msg: &str) {
    eprintln!("[qhodge] {msg}");
}

fn field_name(f: &FieldSpec) -> String {
    match f {
        FieldSpec::GlSymbolic => "gl-symbolic".into(),
        FieldSpec::SlSymbolic { .. } => "sl-w".into(),
        FieldSpec::Numeric { p, seed } => format!("fp:{p}:{seed}"),
        FieldSpec::Rational { q0, z0 } => format!("q={q0},z={z0}"),
    }
}

fn default_z(g: &GroupSpec) -> ZSpec {
    if g.family.is_a_series() {
        ZSpec::Symbolic
    } else {
        ZSpec::Value(num_rational::BigRational::from_integer(1.into()))
    }
}

fn z_name(z: &Option<ZSpec>) -> String {
    match z {
        None => "symbolic".into(),
        Some(ZSpec::Symbolic) => "symbolic".into(),
        Some(ZSpec::Value(v)) => v.to_string(),
        Some(ZSpec::RootOfUnity(m)) => format!("root-of-unity:{m}"),
    }
}

/// Runs one configuration to a complete report.
pub fn run(cfg: &RunConfig) -> Result<Report, RunError> {
    let mut echo = ConfigEcho {
        group: cfg.group.family_name().to_string(),
        n: cfg.n(),
        z: z_name(&cfg.z.clone().or(Some(default_z(&cfg.group)))),
        field: None,
        seed: cfg.seed,
        max_degree: cfg.max_degree,
        window: None,
        signs: cfg.signs.iter().map(|t| t.symbol()).collect(),
        taus: cfg.taus.iter().map(|t| t.symbol()).collect(),
    };
    if let Some(k) = cfg.max_degree {
        cfg.check_degree(k)?;
    }
    if let Some(k) = cfg.degree {
        cfg.check_degree(k)?;
    }
    let mut warnings = Vec::new();
    let (results, failing, table) = match cfg.command {
        Command::Spectrum => run_spectrum(cfg)?,
        Command::Regularity => {
            let (w, desc) = match (cfg.max_boxes, cfg.window) {
                (None, None) => (Window::boxes(6), "max-boxes 6".to_string()),
                (b, p) => (Window { max_boxes: b, max_abs_part: p }, format!("max-boxes {b:?}, parts {p:?}")),
            };
            if w.max_boxes == Some(0) || w.max_abs_part.is_some_and(|p| p <= 0) {
                return Err(RunError::Usage("window bounds must be positive".into()));
            }
            echo.window = Some(desc);
            run_regularity(cfg, &w)?
        }
        Command::RootOfUnity => {
            let m = cfg.m.ok_or_else(|| RunError::Usage("root-of-unity requires --m".into()))?;
            if m == 0 {
                return Err(RunError::Usage("--m must be positive".into()));
            }
            let p = cfg.window.unwrap_or(2 * m as i32);
            if p <= 0 {
                return Err(RunError::Usage("window bounds must be positive".into()));
            }
            echo.window = Some(format!("parts in [-{p}, {p}]"));
            echo.z = format!("root-of-unity:{m}");
            run_root_of_unity(cfg, m, p)?
        }
        Command::Poincare => run_poincare(cfg)?,
        Command::Exterior | Command::Hodge | Command::BraidCheck | Command::DualityCheck => {
            let fs = cfg.resolved_field()?;
            echo.field = Some(field_name(&fs));
            echo.z = match fs {
                FieldSpec::GlSymbolic => "symbolic".into(),
                FieldSpec::SlSymbolic { .. } => "w^2 with q = w^N".into(),
                _ => "random point of the prime field".into(),
            };
            run_matrix(cfg, &fs, &mut warnings)?
        }
    };
    Ok(Report { command: cfg.command.name(), config: echo, ok: failing.is_empty(), failing_checks: failing, warnings, results, table })
}

type Outcome = (Results, Vec<String>, Table);

fn run_spectrum(cfg: &RunConfig) -> Result<Outcome, RunError> {
    let g = &cfg.group;
    let lambda = match &cfg.lambda {
        Some(l) => l.clone(),
        None if g.family.is_a_series() => GenPartition::adjoint(g.n),
        None => return Err(RunError::Usage("spectrum requires --lambda for this group".into())),
    };
    if lambda.len() != g.n {
        return Err(RunError::Usage(format!("--lambda needs {} parts", g.n)));
    }
    let z = cfg.z.clone().unwrap_or_else(|| default_z(&g));
    let ev = Evaluator::for_params(g, &z)?;
    let mut out = Vec::new();
    let mut failing = Vec::new();
    let mut table = Table::new(&["tau", "lambda", "E"]);
    for &tau in &cfg.taus {
        let (poly, rec, lim) = if g.family.is_a_series() {
            let p = eigen_a(&lambda, tau, g)?;
            let rec = recursion_check(&lambda, tau);
            let lim = limit_checks(&lambda).ok;
            (p, Some(rec), Some(lim))
        } else {
            (eigen_bcd(&lambda, g)?, None, None)
        };
        if rec == Some(false) {
            failing.push(format!("shift recursion tau={}", tau.symbol()));
        }
        if lim == Some(false) {
            failing.push(format!("t->1 limit identities tau={}", tau.symbol()));
        }
        let e = ev.render(&ev.eval(&poly));
        table.push(vec![tau.symbol().into(), lambda.to_string(), e.clone()]);
        out.push(SpectrumEntry { tau: tau.symbol(), lambda: lambda.clone(), eigenvalue: e, recursion_ok: rec, limits_ok: lim });
    }
    Ok((Results::Spectrum(out), failing, table))
}

fn zero_table(scan: &crate::spectral::ZeroScan) -> Table {
    let mut t = Table::new(&["lambda", "mu", "E", "is_zero"]);
    for r in &scan.records {
        t.push(vec![r.lambda.to_string(), r.mu.to_string(), r.e.clone(), r.is_zero.to_string()]);
    }
    t
}

fn sorted(mut v: Vec<(GenPartition, GenPartition)>) -> Vec<(GenPartition, GenPartition)> {
    v.sort();
    v
}

fn run_regularity(cfg: &RunConfig, w: &Window) -> Result<Outcome, RunError> {
    let g = cfg.group;
    let z = cfg.z.clone().unwrap_or_else(|| default_z(&g));
    if matches!(z, ZSpec::RootOfUnity(_)) {
        return Err(RunError::Usage("use the root-of-unity subcommand for roots of unity".into()));
    }
    progress(&format!("scanning {} partitions squared", g.enumerate(w).len()));
    let scan = zero_scan(&SpectralParams::new(g, z), w, true)?;
    let zero = GenPartition::zero(g.n);
    let origin = vec![(zero.clone(), zero.clone())];
    let mut failing = Vec::new();
    let expected = match g.family {
        Family::Gl | Family::Sl => {
            if sorted(scan.zeros.clone()) != origin {
                failing.push(format!("zero set is {:?}, expected only ((0),(0))", scan.zeros.iter().map(pair_str).collect::<Vec<_>>()));
            }
            origin
        }
        Family::OOdd | Family::OEven => {
            let det = GenPartition::rectangle(g.n, 1);
            let allowed: Vec<_> = [&zero, &det].iter().flat_map(|a| [&zero, &det].map(|b| ((*a).clone(), b.clone()))).collect();
            let filt = scan.zeros_parity_filtered.clone().unwrap_or_default();
            if !filt.iter().all(|p| allowed.contains(p)) || !filt.contains(&origin[0]) {
                failing.push("parity-filtered zero set is not within {(0),(1^N)}^2".into());
            }
            sorted(allowed.into_iter().filter(|(a, b)| (a.size() - b.size()) % 2 == 0 && g.admits(a) && g.admits(b)).collect())
        }
        _ => {
            if scan.zeros_parity_filtered.clone().map(sorted) != Some(origin.clone()) {
                failing.push("parity-filtered zero set differs from ((0),(0))".into());
            }
            origin
        }
    };
    let table = zero_table(&scan);
    let res = ZeroSetResult {
        pairs_scanned: scan.pairs_scanned,
        zeros: scan.zeros.clone(),
        zeros_parity_filtered: scan.zeros_parity_filtered.clone(),
        expected,
        branches_agree: scan.branches_agree,
    };
    Ok((Results::ZeroSet(res), failing, table))
}

fn run_root_of_unity(cfg: &RunConfig, m: u32, p: i32) -> Result<Outcome, RunError> {
    let g = cfg.group;
    if g.family != Family::Gl {
        return Err(RunError::Usage("the root-of-unity classification is for glq".into()));
    }
    let w = Window::parts(p);
    progress(&format!("scanning {} partitions squared over {} branches", g.enumerate(&w).len(), g.n));
    let scan = zero_scan(&SpectralParams::new(g, ZSpec::RootOfUnity(m)), &w, true)?;
    let expected = sorted(predicted_root_of_unity_zeros(&g, m, &w));
    let mut failing = Vec::new();
    if sorted(scan.zeros.clone()) != expected {
        failing.push("zero set differs from the rectangles ((n^N),(k^N)), n,k in mZ".into());
    }
    if !scan.branches_agree {
        failing.push("the N choices of z give different zero sets".into());
    }
    let table = zero_table(&scan);
    let res = ZeroSetResult { pairs_scanned: scan.pairs_scanned, zeros: scan.zeros.clone(), zeros_parity_filtered: None, expected, branches_agree: scan.branches_agree };
    Ok((Results::ZeroSet(res), failing, table))
}

fn run_poincare(cfg: &RunConfig) -> Result<Outcome, RunError> {
    let regime = match cfg.z {
        Some(ZSpec::RootOfUnity(m)) => Regime::RootOfUnity { m },
        _ => Regime::Regular,
    };
    let pred = cohomology_prediction(&cfg.group, regime, cfg.max_degree)?;
    let n2 = (cfg.n() * cfg.n()) as u64;
    let mut failing = Vec::new();
    let mut table = Table::new(&["degree", "dim_exterior", "coinvariant_dim", "product_coefficient", "predicted_h"]);
    for d in &pred.degrees {
        if d.coinvariant_dim != d.product_coefficient {
            failing.push(format!("coinvariant dimension differs from the product formula at degree {}", d.degree));
        }
        if d.dim_exterior as u64 != binomial(n2, d.degree as u64) {
            failing.push(format!("dim of degree {} differs from the binomial coefficient", d.degree));
        }
        table.push(vec![d.degree.to_string(), d.dim_exterior.to_string(), d.coinvariant_dim.to_string(), d.product_coefficient.to_string(), d.predicted_h.clone()]);
    }
    Ok((Results::Poincare(pred), failing, table))
}

fn run_matrix(cfg: &RunConfig, fs: &FieldSpec, warnings: &mut Vec<String>) -> Result<Outcome, RunError> {
    match fs {
        FieldSpec::GlSymbolic => matrix_job(cfg, &[SymbolicField::gl()], warnings),
        FieldSpec::SlSymbolic { n } => matrix_job(cfg, &[SymbolicField::sl(*n)], warnings),
        FieldSpec::Numeric { p, seed } => {
            // exterior ranks use three independent primes / evaluation points
            let count = if cfg.command == Command::Exterior { 3 } else { 1 };
            let fields: Vec<PrimeField> = (0..count).map(|i| PrimeField::from_spec(*p, seed.wrapping_add(i), cfg.sym_mode())).collect();
            for f in &fields {
                progress(&format!("prime field p = {}", f.p));
            }
            matrix_job(cfg, &fields, warnings)
        }
        FieldSpec::Rational { .. } => Err(RunError::Usage("rational specializations are not supported by the matrix engine".into())),
    }
}

/// Highest degree the checks of a command reach by default.
fn default_degree(cfg: &RunConfig) -> usize {
    let n2 = cfg.n() * cfg.n();
    match cfg.command {
        Command::Exterior | Command::Hodge => if cfg.n() <= 2 { n2 } else { 3 },
        Command::BraidCheck => if cfg.n() <= 2 { n2 } else { 2 },
        _ => if cfg.n() <= 2 { n2 - 1 } else { 2 },
    }
}

fn matrix_job<F: Field + Sync>(cfg: &RunConfig, fields: &[F], warnings: &mut Vec<String>) -> Result<Outcome, RunError> {
    let n = cfg.n();
    let top = cfg.degree.or(cfg.max_degree).unwrap_or_else(|| default_degree(cfg));
    // levels needed beyond the top degree
    let extra = match cfg.command {
        Command::Exterior => 0,
        Command::BraidCheck => 2,
        _ => 1,
    };
    let mut calcs = Vec::new();
    for f in fields {
        progress(&format!("building exterior levels 0..={} for N = {n}", top + extra));
        calcs.push(Calculi::build(f, n, top + extra, cfg.command == Command::Exterior)?);
    }
    let c0 = &calcs[0];
    let built = c0.towers.iter().map(|t| t.levels.len()).min().unwrap_or(0).saturating_sub(1);
    if built < top + extra {
        warnings.push(format!("levels above {built} exceed the ambient-size cap and were not materialized"));
    }
    let usable = built.saturating_sub(extra).min(top);
    let mut failing = Vec::new();
    match cfg.command {
        Command::Exterior => {
            let mut rows = Vec::new();
            let mut table = Table::new(&["tau", "degree", "binomial", "rank_plus", "rank_minus", "ok"]);
            for &tau in &cfg.taus {
                for k in 0..=usable {
                    let rp: Vec<usize> = calcs.iter().map(|c| c.dim(tau, k)).collect::<Result<_, _>>()?;
                    let rm: Vec<usize> = calcs.iter().map(|c| c.tower(tau).levels[k].rank_minus.unwrap_or(0)).collect();
                    let b = binomial((n * n) as u64, k as u64);
                    let ok = rp.iter().chain(&rm).all(|&r| r as u64 == b);
                    if !ok {
                        failing.push(format!("rank A_{k} differs from C(N^2,{k}) on Gamma{}", tau.symbol()));
                    }
                    let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(";");
                    table.push(vec![tau.symbol().into(), k.to_string(), b.to_string(), join(&rp), join(&rm), ok.to_string()]);
                    rows.push(ExteriorRow { tau: tau.symbol(), degree: k, binomial: b, rank_plus: rp, rank_minus: rm, ok });
                }
            }
            Ok((Results::Exterior(rows), failing, table))
        }
        Command::Hodge => {
            let degrees: Vec<usize> = match cfg.degree {
                Some(k) if k <= usable => vec![k],
                Some(k) => return Err(RunError::Usage(format!("degree {k} is beyond the materialized levels"))),
                None => (0..=usable).collect(),
            };
            let jobs: Vec<(Tau, usize)> = cfg.taus.iter().flat_map(|&t| degrees.iter().map(move |&k| (t, k))).collect();
            let computed: Vec<Result<HodgeRow, ComplexError>> = std::thread::scope(|s| {
                let handles: Vec<_> = jobs.iter().map(|&(t, k)| s.spawn(move || c0.hodge_check(t, k))).collect();
                handles.into_iter().map(|h| h.join().expect("hodge worker panicked")).collect()
            });
            let mut rows = Vec::new();
            let mut table = Table::new(&[
                "tau", "degree", "dim", "rank_d_prev", "rank_d", "rank_del_next_plus", "rank_del_next_minus", "dim_harmonic_plus", "dim_harmonic_minus",
                "dim_coinvariant", "hodge_ok", "harmonic_is_coinvariant", "spectrum_ok",
            ]);
            for ((tau, k), r) in jobs.into_iter().zip(computed) {
                let r = r?;
                let t = tau.symbol();
                if !r.hodge_ok {
                    failing.push(format!("Hodge decomposition Gamma{t} degree {k}"));
                }
                if !r.harmonic_is_coinvariant {
                    failing.push(format!("harmonic != coinvariant Gamma{t} degree {k}"));
                }
                if !r.spectrum_ok {
                    failing.push(format!("spectrum cross-check Gamma{t} degree {k}"));
                }
                table.push(vec![
                    t.into(),
                    k.to_string(),
                    r.dim.to_string(),
                    r.rank_d_prev.to_string(),
                    r.rank_d.to_string(),
                    r.rank_del_next_plus.to_string(),
                    r.rank_del_next_minus.to_string(),
                    r.dim_harmonic_plus.to_string(),
                    r.dim_harmonic_minus.to_string(),
                    r.dim_coinvariant.to_string(),
                    r.hodge_ok.to_string(),
                    r.harmonic_is_coinvariant.to_string(),
                    r.spectrum_ok.to_string(),
                ]);
                rows.push(TaggedHodgeRow { tau: t, row: r });
            }
            Ok((Results::Hodge(rows), failing, table))
        }
        Command::BraidCheck => {
            let mut items = c0.structural_checks(usable)?;
            for &tau in &cfg.taus {
                for &sign in &cfg.signs {
                    if usable >= 2 {
                        items.push(CheckItem {
                            name: format!("contraction associativity{} Gamma{} (1,1;2)", sign.symbol(), tau.symbol()),
                            ok: c0.contraction_associative(tau, sign, 1, 1, 2)?,
                        });
                    }
                }
            }
            let mut table = Table::new(&["check", "ok"]);
            for it in &items {
                if !it.ok {
                    failing.push(it.name.clone());
                }
                table.push(vec![it.name.clone(), it.ok.to_string()]);
            }
            Ok((Results::Checks(items), failing, table))
        }
        Command::DualityCheck => {
            let mut pairings = Vec::new();
            let mut table = Table::new(&["tau", "sign", "degree", "adjoint_ok", "pairing_rank", "dim", "nondegenerate"]);
            for &tau in &cfg.taus {
                for &sign in &cfg.signs {
                    for k in 0..=usable {
                        let r = c0.duality_check(tau, sign, k)?;
                        let (t, s) = (tau.symbol(), sign.symbol());
                        if !r.adjoint_ok {
                            failing.push(format!("<d rho, zeta> = <rho, del zeta> sign {s} Gamma{t} degree {k}"));
                        }
                        if !r.nondegenerate {
                            failing.push(format!("degenerate pairing sign {s} Gamma{t} degree {k}"));
                        }
                        table.push(vec![t.into(), s.into(), k.to_string(), r.adjoint_ok.to_string(), r.pairing_rank.to_string(), r.dim.to_string(), r.nondegenerate.to_string()]);
                        pairings.push(TaggedDuality { tau: t, sign: s, report: r });
                    }
                }
            }
            let weak = c0.weak_isomorphism_check()?;
            if !weak.ok {
                failing.push("weak isomorphism Gamma+ -> Gamma-".into());
            }
            table.push(vec!["+->-".into(), "".into(), "".into(), weak.intertwines.to_string(), "".into(), "".into(), weak.invertible.to_string()]);
            Ok((Results::Duality(DualityResult { pairings, weak_isomorphism: weak }), failing, table))
        }
        _ => unreachable!("not a matrix command"),
    }
}
