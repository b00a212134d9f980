//! The five subcommands. Each one builds a serializable report, a CSV table
//! with the same content, and hands both to [`output::emit`].

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use scatbench::levinson::{self, Source, Theorem};
use scatbench::numeric::{self, PhaseParity};
use scatbench::{analytic, BoundState64, LevinsonAudit64, Parity, PhaseShiftCurve64, Potential64, ScatteringResult64, Table64};

use crate::cli::{Command, Method, PotentialSelector, SourceArg, TheoremArg};
use crate::config::RunConfig;
use crate::output::{self, num, opt, Table};
use crate::Failure;

/// Largest energy gap at which the two routes count as agreeing.
pub const ENERGY_AGREEMENT: f64 = 1e-6;

pub fn dispatch(command: &Command, cfg: RunConfig) -> Result<(), Failure> {
    match command {
        Command::PhaseShift { potential, method, sweep } => {
            let cfg = cfg.with_sweep(sweep)?;
            let target = Target::load(potential, &cfg)?;
            let method = target.method(method.or(cfg.method))?;
            let report = phase_shift(&target, method, &cfg)?;
            let shown = report.scaled(angle_scale(&cfg));
            output::emit(&cfg, &shown.table(), &shown)
        }
        Command::BoundStates { potential, method } => {
            let target = Target::load(potential, &cfg)?;
            let method = target.method(method.or(cfg.method))?;
            let report = bound_states(&target, method, &cfg)?;
            output::emit(&cfg, &report.table(), &report)
        }
        Command::Audit { ell, ell_range, theorem, source } => {
            let ells = match (ell, ell_range) {
                (Some(l), _) => vec![*l],
                (None, Some(range)) => parse_range(range)?,
                (None, None) => return Err(Failure::usage("audit needs --ell or --ell-range")),
            };
            let theorems = match theorem.or(cfg.theorem).unwrap_or(TheoremArg::Both) {
                TheoremArg::Direct => vec![Theorem::DirectRestriction],
                TheoremArg::Parity => vec![Theorem::Parity],
                TheoremArg::Both => vec![Theorem::DirectRestriction, Theorem::Parity],
            };
            let source = match source.or(cfg.source).unwrap_or(SourceArg::Analytic) {
                SourceArg::Analytic => Source::Analytic,
                SourceArg::Numeric => Source::Numeric,
                SourceArg::Both => Source::Both,
            };
            let audits = audit(&ells, &theorems, source, &cfg)?;
            let shown: Vec<LevinsonAudit64> = audits.iter().map(|a| scale_audit(a, angle_scale(&cfg))).collect();
            output::emit(&cfg, &audit_table(&shown), &shown)
        }
        Command::PlotData { potential, method, sweep } => {
            let cfg = cfg.with_sweep(sweep)?;
            let dir = cfg.out.clone().ok_or_else(|| Failure::usage("plot-data needs --out DIR"))?;
            let target = Target::load(potential, &cfg)?;
            let method = target.method(method.or(cfg.method))?;
            let report = phase_shift(&target, method, &cfg)?;
            plot_data(&report, &dir)
        }
        Command::Scatter { potential, method, k } => {
            let target = Target::load(potential, &cfg)?;
            let method = target.method(method.or(cfg.method))?;
            let rows = scatter(&target, method, *k, &cfg)?;
            let shown: Vec<ScatterRow> = rows
                .iter()
                .map(|r| {
                    let mut r = *r;
                    r.result.delta *= angle_scale(&cfg);
                    r
                })
                .collect();
            output::emit(&cfg, &scatter_table(&shown), &shown)
        }
    }
}

/// Degrees only on standard output; files always hold radians.
fn angle_scale(cfg: &RunConfig) -> f64 {
    if cfg.degrees && cfg.out.is_none() {
        180.0 / std::f64::consts::PI
    } else {
        1.0
    }
}

/// `A..B`, both ends included.
pub fn parse_range(text: &str) -> Result<Vec<u32>, Failure> {
    let bad = || Failure::usage(format!("--ell-range expects A..B with A <= B, got `{text}`"));
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let (a, b): (u32, u32) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
    if a > b {
        return Err(bad());
    }
    Ok((a..=b).collect())
}

/// The potential a command works on.
pub struct Target {
    pub label: String,
    pub ell: Option<u32>,
    pub potential: Potential64,
}

impl Target {
    pub fn load(sel: &PotentialSelector, cfg: &RunConfig) -> Result<Self, Failure> {
        match (&sel.ell, &sel.potential_file) {
            (Some(ell), None) => Ok(Self { label: format!("ell{ell}"), ell: Some(*ell), potential: Potential64::reflectionless(*ell) }),
            (None, Some(path)) => Self::from_file(path, cfg),
            _ => Err(Failure::usage("give exactly one of --ell and --potential-file")),
        }
    }

    fn from_file(path: &Path, cfg: &RunConfig) -> Result<Self, Failure> {
        let file = fs::File::open(path).map_err(|e| Failure::io(format!("cannot open {}: {e}", path.display())))?;
        let table = Table64::from_csv(file)?;
        let extent = table.xs().iter().fold(0.0f64, |m, x| m.max(x.abs()));
        let potential = Potential64::tabulated(table).with_domain_halfwidth(extent.max(cfg.solver.x_max))?;
        let label = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "table".into());
        Ok(Self { label, ell: None, potential })
    }

    /// Tables have no closed form, so only the numeric route applies.
    pub fn method(&self, requested: Option<Method>) -> Result<Method, Failure> {
        match (self.ell, requested) {
            (Some(_), m) => Ok(m.unwrap_or(Method::Both)),
            (None, None | Some(Method::Numeric)) => Ok(Method::Numeric),
            (None, Some(_)) => Err(Failure::usage("tabulated potentials support --method numeric only")),
        }
    }
}

fn analytic_on(method: Method) -> bool {
    matches!(method, Method::Analytic | Method::Both)
}

fn numeric_on(method: Method) -> bool {
    matches!(method, Method::Numeric | Method::Both)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhaseRow {
    /// 0 on the footer row, which carries `delta(0)`.
    pub k: f64,
    pub delta_analytic: Option<f64>,
    pub delta_numeric: Option<f64>,
    pub abs_r: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhaseShiftReport {
    pub potential: String,
    pub method: Method,
    /// Ascending in `k`, followed by the `k = 0` footer.
    pub rows: Vec<PhaseRow>,
    pub curves: Vec<PhaseShiftCurve64>,
}

impl PhaseShiftReport {
    fn scaled(&self, s: f64) -> Self {
        let mut out = self.clone();
        for r in &mut out.rows {
            r.delta_analytic = r.delta_analytic.map(|d| d * s);
            r.delta_numeric = r.delta_numeric.map(|d| d * s);
        }
        for c in &mut out.curves {
            c.delta_samples.iter_mut().for_each(|d| *d *= s);
            c.delta_zero_extrapolated *= s;
        }
        out
    }

    fn table(&self) -> Table {
        let mut header = vec!["k"];
        let (a, n) = (analytic_on(self.method), numeric_on(self.method));
        if a {
            header.push("delta_analytic");
        }
        if n {
            header.push("delta_numeric");
        }
        header.push("abs_R");
        let mut t = Table::new(header);
        for r in &self.rows {
            let mut row = vec![num(r.k)];
            if a {
                row.push(opt(r.delta_analytic));
            }
            if n {
                row.push(opt(r.delta_numeric));
            }
            row.push(opt(r.abs_r));
            t.push(row);
        }
        t
    }

    pub fn curve(&self, method: Method) -> Option<&PhaseShiftCurve64> {
        let i = match (self.method, method) {
            (Method::Both, Method::Analytic) | (Method::Analytic, Method::Analytic) | (Method::Numeric, Method::Numeric) => 0,
            (Method::Both, Method::Numeric) => 1,
            _ => return None,
        };
        self.curves.get(i)
    }
}

pub fn phase_shift(target: &Target, method: Method, cfg: &RunConfig) -> Result<PhaseShiftReport, Failure> {
    let ks = cfg.k_grid();
    let mut curves = Vec::new();
    let mut abs_r: Vec<Option<f64>> = vec![None; ks.len()];
    if analytic_on(method) {
        let ell = target.ell.expect("checked by Target::method");
        let deltas = ks.iter().map(|&k| analytic::phase_shift(ell, k)).collect::<scatbench::Result<Vec<f64>>>()?;
        curves.push(PhaseShiftCurve64 {
            parity: PhaseParity::Total,
            k_samples: ks.clone(),
            delta_samples: deltas,
            delta_zero_extrapolated: analytic::phase_shift_zero(ell),
        });
        for (slot, &k) in abs_r.iter_mut().zip(&ks) {
            *slot = Some(analytic::coefficients(ell, k)?.reflection_amplitude().norm());
        }
    }
    if numeric_on(method) {
        curves.push(numeric::phase_curve_on(&target.potential, &ks, &cfg.solver, PhaseParity::Total)?);
        let results = numeric::scattering_sweep(&target.potential, &ks, &cfg.solver)?;
        for (slot, r) in abs_r.iter_mut().zip(&results) {
            *slot = Some(r.coefficients.reflection_amplitude().norm());
        }
    }
    let pick = |c: Option<&PhaseShiftCurve64>, i: usize| c.map(|c| c.delta_samples[i]);
    let (ac, nc) = match method {
        Method::Analytic => (curves.first(), None),
        Method::Numeric => (None, curves.first()),
        Method::Both => (curves.first(), curves.get(1)),
    };
    let mut rows: Vec<PhaseRow> = ks
        .iter()
        .enumerate()
        .map(|(i, &k)| PhaseRow { k, delta_analytic: pick(ac, i), delta_numeric: pick(nc, i), abs_r: abs_r[i] })
        .collect();
    rows.push(PhaseRow {
        k: 0.0,
        delta_analytic: ac.map(|c| c.delta_zero_extrapolated),
        delta_numeric: nc.map(|c| c.delta_zero_extrapolated),
        abs_r: None,
    });
    Ok(PhaseShiftReport { potential: target.label.clone(), method, rows, curves })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumRow {
    pub n: usize,
    /// Exact energy when the analytic route ran, numeric otherwise.
    pub energy: f64,
    pub energy_numeric: Option<f64>,
    pub parity: Parity,
    pub node_count: usize,
    pub agrees: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub potential: String,
    pub method: Method,
    pub rows: Vec<SpectrumRow>,
}

impl SpectrumReport {
    fn table(&self) -> Table {
        let both = self.method == Method::Both;
        let mut t = Table::new(if both {
            vec!["n", "energy", "energy_numeric", "parity", "node_count", "agrees"]
        } else {
            vec!["n", "energy", "parity", "node_count"]
        });
        for r in &self.rows {
            let mut row = vec![r.n.to_string(), num(r.energy)];
            if both {
                row.push(opt(r.energy_numeric));
            }
            row.push(r.parity.to_string());
            row.push(r.node_count.to_string());
            if both {
                row.push(r.agrees.map(|a| a.to_string()).unwrap_or_default());
            }
            t.push(row);
        }
        t
    }
}

fn spectrum_row(s: &BoundState64) -> SpectrumRow {
    SpectrumRow { n: s.n, energy: s.energy, energy_numeric: None, parity: s.parity, node_count: s.node_count, agrees: None }
}

pub fn bound_states(target: &Target, method: Method, cfg: &RunConfig) -> Result<SpectrumReport, Failure> {
    let exact = target.ell.filter(|_| analytic_on(method)).map(analytic::bound_spectrum::<f64>);
    let solved =
        if numeric_on(method) { Some(numeric::find_bound_states(&target.potential, &cfg.solver)?) } else { None };
    let rows = match (exact, solved) {
        (Some(a), Some(n)) => {
            if a.len() != n.len() {
                return Err(Failure::solver(format!(
                    "{}: {} exact bound states but {} numeric ones",
                    target.label,
                    a.len(),
                    n.len()
                )));
            }
            a.iter()
                .zip(&n)
                .map(|(a, n)| {
                    let agrees = (a.energy - n.energy).abs() <= ENERGY_AGREEMENT
                        && a.parity == n.parity
                        && a.node_count == n.node_count;
                    SpectrumRow { energy_numeric: Some(n.energy), agrees: Some(agrees), ..spectrum_row(a) }
                })
                .collect()
        }
        (Some(a), None) => a.iter().map(spectrum_row).collect(),
        (None, Some(n)) => n.iter().map(spectrum_row).collect(),
        (None, None) => unreachable!("every method selects a route"),
    };
    Ok(SpectrumReport { potential: target.label.clone(), method, rows })
}

pub fn audit(ells: &[u32], theorems: &[Theorem], source: Source, cfg: &RunConfig) -> Result<Vec<LevinsonAudit64>, Failure> {
    let mut all = Vec::new();
    for &ell in ells {
        all.extend(levinson::audit(ell, theorems, source, &cfg.solver)?);
    }
    Ok(all)
}

fn scale_audit(a: &LevinsonAudit64, s: f64) -> LevinsonAudit64 {
    let mut a = a.clone();
    let p = &mut a.prediction;
    for v in [&mut p.predicted_delta_even, &mut p.predicted_delta_odd, &mut p.predicted_delta_direct, &mut a.analytic_delta_zero, &mut a.numeric_delta_zero] {
        *v = v.map(|d| d * s);
    }
    a.actual_delta_zero *= s;
    a.discrepancy *= s;
    a
}

fn audit_table(audits: &[LevinsonAudit64]) -> Table {
    let mut t = Table::new(vec![
        "ell",
        "theorem",
        "n_total",
        "n_even",
        "n_odd",
        "critical_even",
        "critical_odd",
        "predicted_delta_direct",
        "predicted_delta_even",
        "predicted_delta_odd",
        "actual_delta_zero",
        "actual_source",
        "analytic_delta_zero",
        "numeric_delta_zero",
        "verdict",
        "discrepancy",
        "notes",
    ]);
    for a in audits {
        let p = &a.prediction;
        let c = &p.inputs;
        t.push(vec![
            a.ell.to_string(),
            p.theorem.to_string(),
            c.n_total.to_string(),
            c.n_even.to_string(),
            c.n_odd.to_string(),
            c.critical_even.to_string(),
            c.critical_odd.to_string(),
            opt(p.predicted_delta_direct),
            opt(p.predicted_delta_even),
            opt(p.predicted_delta_odd),
            num(a.actual_delta_zero),
            serde_json::to_value(a.actual_source).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default(),
            opt(a.analytic_delta_zero),
            opt(a.numeric_delta_zero),
            a.verdict.to_string(),
            num(a.discrepancy),
            a.notes.join("; "),
        ]);
    }
    t
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesEntry {
    pub name: String,
    /// Relative to the manifest.
    pub path: PathBuf,
    pub points: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlotManifest {
    pub potential: String,
    pub columns: [String; 2],
    pub series: Vec<SeriesEntry>,
}

pub fn plot_data(report: &PhaseShiftReport, dir: &Path) -> Result<(), Failure> {
    fs::create_dir_all(dir).map_err(|e| Failure::io(format!("cannot create {}: {e}", dir.display())))?;
    let mut series = Vec::new();
    for method in [Method::Analytic, Method::Numeric] {
        let Some(curve) = report.curve(method) else { continue };
        let tag = if method == Method::Analytic { "analytic" } else { "numeric" };
        let name = format!("{}_{tag}", report.potential);
        let path = PathBuf::from(format!("{name}.dat"));
        let body: String =
            curve.k_samples.iter().zip(&curve.delta_samples).map(|(&k, &d)| format!("{} {}\n", num(k), num(d))).collect();
        output::write_file(&dir.join(&path), body.as_bytes())?;
        series.push(SeriesEntry { name, path, points: curve.k_samples.len() });
    }
    let manifest = PlotManifest { potential: report.potential.clone(), columns: ["k".into(), "delta".into()], series };
    output::write_file(&dir.join("manifest.json"), &output::to_json(&manifest)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScatterRow {
    pub method: Method,
    pub result: ScatteringResult64,
}

pub fn scatter(target: &Target, method: Method, k: f64, cfg: &RunConfig) -> Result<Vec<ScatterRow>, Failure> {
    let mut rows = Vec::new();
    if analytic_on(method) {
        let c = analytic::coefficients(target.ell.expect("checked by Target::method"), k)?;
        let one = num_complex::Complex::new(1.0, 0.0);
        let coefficients = analytic::ScatteringCoefficients {
            k,
            incident: one,
            reflected: c.reflection_amplitude(),
            transmitted: c.transmission_amplitude(),
        };
        rows.push(ScatterRow {
            method: Method::Analytic,
            result: ScatteringResult64 {
                k,
                coefficients,
                delta: coefficients.half_arg(),
                reflection_probability: coefficients.reflection_probability(),
                transmission_probability: coefficients.transmission_probability(),
            },
        });
    }
    if numeric_on(method) {
        let result = numeric::solve_scattering(&target.potential, k, &cfg.solver)?;
        rows.push(ScatterRow { method: Method::Numeric, result });
    }
    Ok(rows)
}

fn scatter_table(rows: &[ScatterRow]) -> Table {
    let mut t = Table::new(vec![
        "method",
        "k",
        "incident_re",
        "incident_im",
        "reflected_re",
        "reflected_im",
        "transmitted_re",
        "transmitted_im",
        "delta",
        "reflection_probability",
        "transmission_probability",
    ]);
    for r in rows {
        let c = &r.result.coefficients;
        t.push(vec![
            if r.method == Method::Analytic { "analytic".into() } else { "numeric".into() },
            num(r.result.k),
            num(c.incident.re),
            num(c.incident.im),
            num(c.reflected.re),
            num(c.reflected.im),
            num(c.transmitted.re),
            num(c.transmitted.im),
            num(r.result.delta),
            num(r.result.reflection_probability),
            num(r.result.transmission_probability),
        ]);
    }
    t
}
