//! Batch front end behind the `suris` binary.
//!
//! Settings merge as defaults < `--config` file < environment < flags. Every
//! sweep cell runs on a worker pool; rows are assembled in configuration order
//! so output is byte-identical for identical input.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Deserialize;

use crate::connection::ConnectionMap;
use crate::heteroclinic::{lobe_area_numeric, FinderOptions};
use crate::melnikov::{anti_integrable_offset, melnikov_profile};
use crate::numerics::{gamma_asymptotic, gamma_eval, gamma_series};
use crate::surismap::{invariant, MapParams, PhasePoint};
use crate::{Error, Precision, Real, Result};

pub const DIGITS_ENV: &str = "SURIS_DIGITS";
pub const WORKERS_ENV: &str = "SURIS_WORKERS";

const DEFAULT_DIGITS: u32 = 40;
const DEFAULT_GRID: usize = 101;
const DEFAULT_EPS: &str = "0.00001";

#[derive(Parser, Debug)]
#[command(
    name = "suris",
    version,
    about = "Lobe areas and Melnikov data for the perturbed Suris map"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Gamma,
    Melnikov,
    Phase,
    Lobe,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Gamma(nu) by series, elliptic identity and asymptotic form, per delta.
    Gamma(SweepArgs),
    /// Melnikov profile on a theta grid plus its critical values, per delta.
    Melnikov(SweepArgs),
    /// Invariant samples on a (theta, r) grid and the separatrices, per delta.
    Phase(SweepArgs),
    /// Numerically measured lobe area, per (delta, eps).
    Lobe(SweepArgs),
}

impl Command {
    pub fn split(&self) -> (Kind, &SweepArgs) {
        match self {
            Command::Gamma(a) => (Kind::Gamma, a),
            Command::Melnikov(a) => (Kind::Melnikov, a),
            Command::Phase(a) => (Kind::Phase, a),
            Command::Lobe(a) => (Kind::Lobe, a),
        }
    }
}

#[derive(ValueEnum, Deserialize, Debug, Clone, Copy, PartialEq, Eq, Default)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Args, Debug, Clone, Default)]
pub struct SweepArgs {
    /// Values of delta in (0, 1); comma separated or repeated. An empty string
    /// gives an empty list.
    #[arg(long, value_delimiter = ',')]
    pub delta: Option<Vec<String>>,
    /// Values of eps >= 0; comma separated or repeated.
    #[arg(long, value_delimiter = ',')]
    pub eps: Option<Vec<String>>,
    /// Decimal digits of working precision, at least 30.
    #[arg(long)]
    pub digits: Option<u32>,
    /// Symmetry-residual tolerance of the orbit finder.
    #[arg(long)]
    pub tol: Option<String>,
    /// Number of grid points per axis.
    #[arg(long)]
    pub grid: Option<usize>,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// JSON file with any of the fields above.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Worker threads.
    #[arg(long)]
    pub workers: Option<usize>,
}

/// A decimal given either as a JSON string or a JSON number; numbers keep
/// their source text.
#[derive(Deserialize, Debug, Clone)]
#[serde(untagged)]
enum DecimalText {
    Text(String),
    Number(serde_json::Number),
}

impl DecimalText {
    fn into_string(self) -> String {
        match self {
            DecimalText::Text(s) => s,
            DecimalText::Number(n) => n.to_string(),
        }
    }
}

#[derive(Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    #[serde(alias = "delta")]
    deltas: Option<Vec<DecimalText>>,
    #[serde(alias = "eps_list")]
    eps: Option<Vec<DecimalText>>,
    digits: Option<u32>,
    tol: Option<DecimalText>,
    grid: Option<usize>,
    out: Option<PathBuf>,
    format: Option<Format>,
    workers: Option<usize>,
}

fn texts(values: Vec<DecimalText>) -> Vec<String> {
    values.into_iter().map(DecimalText::into_string).collect()
}

/// Fully merged settings, still as text.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub deltas: Vec<String>,
    pub eps_list: Vec<String>,
    pub digits: u32,
    pub tol: Option<String>,
    pub grid: usize,
    pub out: Option<PathBuf>,
    pub format: Format,
    pub workers: Option<usize>,
}

fn config_error(detail: impl Into<String>) -> Error {
    Error::Config {
        detail: detail.into(),
    }
}

fn env_number<T: FromStr>(env: &dyn Fn(&str) -> Option<String>, name: &str) -> Result<Option<T>> {
    match env(name) {
        None => Ok(None),
        Some(text) => text
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| config_error(format!("{name}={text:?} is not a non-negative integer"))),
    }
}

fn non_empty(list: Vec<String>) -> Vec<String> {
    list.into_iter()
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect()
}

impl SweepConfig {
    /// Merges defaults, the config file, the environment and the flags.
    pub fn resolve(args: &SweepArgs, env: &dyn Fn(&str) -> Option<String>) -> Result<SweepConfig> {
        let file = match &args.config {
            None => ConfigFile::default(),
            Some(path) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| config_error(format!("reading {}: {e}", path.display())))?;
                serde_json::from_str(&text)
                    .map_err(|e| config_error(format!("parsing {}: {e}", path.display())))?
            }
        };

        let mut cfg = SweepConfig {
            deltas: Vec::new(),
            eps_list: vec![DEFAULT_EPS.to_string()],
            digits: DEFAULT_DIGITS,
            tol: None,
            grid: DEFAULT_GRID,
            out: None,
            format: Format::Csv,
            workers: None,
        };

        if let Some(v) = file.deltas {
            cfg.deltas = texts(v);
        }
        if let Some(v) = file.eps {
            cfg.eps_list = texts(v);
        }
        cfg.digits = file.digits.unwrap_or(cfg.digits);
        cfg.tol = file.tol.map(DecimalText::into_string);
        cfg.grid = file.grid.unwrap_or(cfg.grid);
        cfg.out = file.out;
        cfg.format = file.format.unwrap_or(cfg.format);
        cfg.workers = file.workers;

        if let Some(d) = env_number(env, DIGITS_ENV)? {
            cfg.digits = d;
        }
        if let Some(w) = env_number(env, WORKERS_ENV)? {
            cfg.workers = Some(w);
        }

        if let Some(v) = &args.delta {
            cfg.deltas = v.clone();
        }
        if let Some(v) = &args.eps {
            cfg.eps_list = v.clone();
        }
        cfg.digits = args.digits.unwrap_or(cfg.digits);
        if args.tol.is_some() {
            cfg.tol = args.tol.clone();
        }
        cfg.grid = args.grid.unwrap_or(cfg.grid);
        if args.out.is_some() {
            cfg.out = args.out.clone();
        }
        cfg.format = args.format.unwrap_or(cfg.format);
        if args.workers.is_some() {
            cfg.workers = args.workers;
        }

        cfg.deltas = non_empty(cfg.deltas);
        cfg.eps_list = non_empty(cfg.eps_list);
        Ok(cfg)
    }

    /// Parses and range-checks every value. Errors here abort the run before
    /// any output is written.
    pub fn validate(&self) -> Result<Sweep> {
        let precision = Precision::new(self.digits)?;
        let deltas = self
            .deltas
            .iter()
            .map(|text| {
                let d = precision.parse(text)?;
                if d <= 0 || d >= 1 {
                    return Err(config_error(format!("delta {text} is outside (0, 1)")));
                }
                Ok(d)
            })
            .collect::<Result<Vec<_>>>()?;
        let eps_list = self
            .eps_list
            .iter()
            .map(|text| {
                let e = precision.parse(text)?;
                if e < 0 {
                    return Err(config_error(format!("eps {text} is negative")));
                }
                Ok(e)
            })
            .collect::<Result<Vec<_>>>()?;
        let rho = match &self.tol {
            None => None,
            Some(text) => {
                let t = precision.parse(text)?;
                if t <= 0 {
                    return Err(config_error(format!("tol {text} is not positive")));
                }
                Some(t)
            }
        };
        if self.grid < 2 {
            return Err(config_error(format!(
                "grid {} has fewer than 2 points",
                self.grid
            )));
        }
        if self.workers == Some(0) {
            return Err(config_error("workers must be at least 1"));
        }
        Ok(Sweep {
            precision,
            deltas,
            eps_list,
            finder: FinderOptions {
                rho,
                ..FinderOptions::default()
            },
            grid: self.grid,
            workers: self.workers,
        })
    }
}

/// Validated, parsed sweep.
#[derive(Debug, Clone)]
pub struct Sweep {
    pub precision: Precision,
    pub deltas: Vec<Real>,
    pub eps_list: Vec<Real>,
    pub finder: FinderOptions,
    pub grid: usize,
    pub workers: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Real(Real),
    Int(u64),
    Text(&'static str),
    Empty,
}

impl From<Real> for Cell {
    fn from(value: Real) -> Self {
        Cell::Real(value)
    }
}

impl From<&Real> for Cell {
    fn from(value: &Real) -> Self {
        Cell::Real(value.clone())
    }
}

impl From<Option<Real>> for Cell {
    fn from(value: Option<Real>) -> Self {
        value.map_or(Cell::Empty, Cell::Real)
    }
}

/// One output row; `cells` excludes the trailing status column.
#[derive(Debug, Clone)]
pub struct Row {
    pub cells: Vec<Cell>,
    pub status: &'static str,
}

impl Row {
    fn ok(cells: Vec<Cell>) -> Row {
        Row {
            cells,
            status: "ok",
        }
    }

    /// A row carrying only the leading key cells and the error code.
    fn failed(mut cells: Vec<Cell>, width: usize, err: &Error) -> Row {
        cells.resize(width, Cell::Empty);
        Row {
            cells,
            status: err.code(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Table {
    /// Column names, `status` last.
    pub header: &'static [&'static str],
    pub rows: Vec<Row>,
    pub digits: u32,
}

pub const GAMMA_HEADER: &[&str] = &[
    "delta",
    "nu",
    "gamma_series",
    "gamma_elliptic",
    "gamma_asymptotic",
    "anti_integrable_minus_eps",
    "status",
];
pub const MELNIKOV_HEADER: &[&str] = &["delta", "nu", "kind", "theta", "value", "status"];
pub const PHASE_HEADER: &[&str] = &["delta", "kind", "theta", "r", "value", "status"];
pub const LOBE_HEADER: &[&str] = &[
    "delta",
    "nu",
    "epsilon",
    "area_numeric",
    "area_over_eps",
    "gamma_series",
    "gamma_asymptotic",
    "anti_integrable",
    "rel_err",
    "digits",
    "status",
];

impl Table {
    pub fn all_ok(&self) -> bool {
        self.rows.iter().all(|r| r.status == "ok")
    }

    fn render_cell(&self, cell: &Cell) -> String {
        match cell {
            Cell::Real(x) => x.to_decimal(self.digits),
            Cell::Int(n) => n.to_string(),
            Cell::Text(s) => (*s).to_string(),
            Cell::Empty => String::new(),
        }
    }

    pub fn to_csv(&self) -> Result<Vec<u8>> {
        let io = |e: csv::Error| config_error(format!("writing CSV: {e}"));
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(self.header).map_err(io)?;
        for row in &self.rows {
            let mut record: Vec<String> = row.cells.iter().map(|c| self.render_cell(c)).collect();
            record.push(row.status.to_string());
            w.write_record(&record).map_err(io)?;
        }
        w.into_inner()
            .map_err(|e| config_error(format!("writing CSV: {e}")))
    }

    /// An array of objects with keys in header order. Reals are emitted as
    /// JSON numbers carrying the same decimal text as the CSV.
    pub fn to_json(&self) -> Result<Vec<u8>> {
        let mut out = String::from("[");
        for (i, row) in self.rows.iter().enumerate() {
            out.push_str(if i == 0 { "\n  {" } else { ",\n  {" });
            let values = row
                .cells
                .iter()
                .map(|c| self.json_value(c))
                .chain(std::iter::once(Ok(serde_json::Value::from(row.status))));
            for (j, (key, value)) in self.header.iter().zip(values).enumerate() {
                if j > 0 {
                    out.push_str(", ");
                }
                out.push_str(&serde_json::to_string(key).expect("string key"));
                out.push_str(": ");
                out.push_str(&value?.to_string());
            }
            out.push('}');
        }
        out.push_str(if self.rows.is_empty() { "]\n" } else { "\n]\n" });
        Ok(out.into_bytes())
    }

    fn json_value(&self, cell: &Cell) -> Result<serde_json::Value> {
        Ok(match cell {
            Cell::Real(x) => {
                let text = x.to_decimal(self.digits);
                serde_json::Number::from_str(&text)
                    .map(serde_json::Value::Number)
                    .map_err(|e| config_error(format!("encoding {text}: {e}")))?
            }
            Cell::Int(n) => serde_json::Value::from(*n),
            Cell::Text(s) => serde_json::Value::from(*s),
            Cell::Empty => serde_json::Value::Null,
        })
    }

    pub fn render(&self, format: Format) -> Result<Vec<u8>> {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }
}

fn gamma_rows(sweep: &Sweep, delta: &Real) -> Vec<Row> {
    let width = GAMMA_HEADER.len() - 1;
    let compute = || -> Result<Row> {
        let m = MapParams::new(delta.clone(), sweep.precision.zero())?;
        let g = gamma_eval(m.nu())?;
        Ok(Row::ok(vec![
            delta.into(),
            g.nu.into(),
            g.gamma.into(),
            g.gamma_elliptic.into(),
            g.gamma_asymptotic.into(),
            anti_integrable_offset(&m)?.into(),
        ]))
    };
    vec![compute().unwrap_or_else(|e| Row::failed(vec![delta.into()], width, &e))]
}

fn melnikov_rows(sweep: &Sweep, delta: &Real) -> Vec<Row> {
    let width = MELNIKOV_HEADER.len() - 1;
    let compute = || -> Result<Vec<Row>> {
        let m = MapParams::new(delta.clone(), sweep.precision.zero())?;
        let profile = melnikov_profile(m.nu(), sweep.grid)?;
        let row = |kind, theta: Cell, value: &Real| {
            Row::ok(vec![
                delta.into(),
                m.nu().into(),
                Cell::Text(kind),
                theta,
                value.into(),
            ])
        };
        let mut rows: Vec<Row> = profile
            .thetas
            .iter()
            .zip(&profile.values)
            .map(|(t, v)| row("profile", t.into(), v))
            .collect();
        rows.push(row("theta_q", (&profile.theta_q).into(), &profile.l_q));
        rows.push(row("theta_p", (&profile.theta_p).into(), &profile.l_p));
        rows.push(row("gap", Cell::Empty, &profile.gap));
        Ok(rows)
    };
    compute().unwrap_or_else(|e| vec![Row::failed(vec![delta.into()], width, &e)])
}

fn phase_rows(sweep: &Sweep, delta: &Real) -> Vec<Row> {
    let width = PHASE_HEADER.len() - 1;
    let compute = || -> Result<Vec<Row>> {
        let p = sweep.precision;
        let m = MapParams::new(delta.clone(), p.zero())?;
        let h = ConnectionMap::from_params(&m);
        let n = sweep.grid as i64;
        let thetas: Vec<Real> = (0..n).map(|i| p.ratio(i, n - 1) - p.ratio(1, 2)).collect();
        let rs: Vec<Real> = (0..n).map(|j| p.ratio(2 * j, n - 1) - 1).collect();
        let row = |kind, theta: &Real, r: &Real| {
            let level = invariant(&m, &PhasePoint::new(theta.clone(), r.clone()));
            Row::ok(vec![
                delta.into(),
                Cell::Text(kind),
                theta.into(),
                r.into(),
                level.into(),
            ])
        };
        let mut rows = Vec::with_capacity(thetas.len() * (rs.len() + 2) + 1);
        for theta in &thetas {
            for r in &rs {
                rows.push(row("grid", theta, r));
            }
        }
        for theta in &thetas {
            rows.push(row("chi_plus", theta, &h.chi_plus(theta)?));
        }
        for theta in &thetas {
            rows.push(row("chi_minus", theta, &h.chi_minus(theta)?));
        }
        rows.push(Row::ok(vec![
            delta.into(),
            Cell::Text("saddle_level"),
            Cell::Empty,
            Cell::Empty,
            (1 - delta).into(),
        ]));
        Ok(rows)
    };
    compute().unwrap_or_else(|e| vec![Row::failed(vec![delta.into()], width, &e)])
}

fn lobe_row(sweep: &Sweep, delta: &Real, eps: &Real) -> Row {
    let width = LOBE_HEADER.len() - 1;
    let digits = Cell::Int(sweep.precision.digits() as u64);
    let compute = || -> Result<Row> {
        let m = MapParams::new(delta.clone(), eps.clone())?;
        let rec = lobe_area_numeric(&m, &sweep.finder)?;
        let gamma = gamma_series(m.nu())?;
        let asymptotic = gamma_asymptotic(m.nu())?;
        let area_over_eps = rec.area_over_eps();
        Ok(Row::ok(vec![
            delta.into(),
            (&rec.nu).into(),
            eps.into(),
            (&rec.area_numeric).into(),
            area_over_eps.into(),
            gamma.into(),
            asymptotic.into(),
            (&rec.anti_integrable_area).into(),
            rec.rel_err.clone().into(),
            digits.clone(),
        ]))
    };
    compute().unwrap_or_else(|e| {
        let mut cells = vec![delta.into(), Cell::Empty, eps.into()];
        if let Ok(m) = MapParams::new(delta.clone(), eps.clone()) {
            cells[1] = m.nu().into();
        }
        cells.resize(width - 1, Cell::Empty);
        cells.push(digits.clone());
        Row::failed(cells, width, &e)
    })
}

/// Runs one subcommand over a validated sweep.
pub fn run_sweep(kind: Kind, sweep: &Sweep) -> Result<Table> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(w) = sweep.workers {
        builder = builder.num_threads(w);
    }
    let pool = builder
        .build()
        .map_err(|e| config_error(format!("worker pool: {e}")))?;

    let (header, groups): (&'static [&'static str], Vec<Vec<Row>>) = pool.install(|| match kind {
        Kind::Gamma => (
            GAMMA_HEADER,
            sweep
                .deltas
                .par_iter()
                .map(|d| gamma_rows(sweep, d))
                .collect(),
        ),
        Kind::Melnikov => (
            MELNIKOV_HEADER,
            sweep
                .deltas
                .par_iter()
                .map(|d| melnikov_rows(sweep, d))
                .collect(),
        ),
        Kind::Phase => (
            PHASE_HEADER,
            sweep
                .deltas
                .par_iter()
                .map(|d| phase_rows(sweep, d))
                .collect(),
        ),
        Kind::Lobe => {
            let cells: Vec<(&Real, &Real)> = sweep
                .deltas
                .iter()
                .flat_map(|d| sweep.eps_list.iter().map(move |e| (d, e)))
                .collect();
            (
                LOBE_HEADER,
                cells
                    .par_iter()
                    .map(|(d, e)| vec![lobe_row(sweep, d, e)])
                    .collect(),
            )
        }
    });

    Ok(Table {
        header,
        rows: groups.into_iter().flatten().collect(),
        digits: sweep.precision.digits(),
    })
}

/// Resolves, validates, computes and writes. Returns whether every row is ok.
pub fn execute(command: &Command, env: &dyn Fn(&str) -> Option<String>) -> Result<bool> {
    let (kind, args) = command.split();
    let config = SweepConfig::resolve(args, env)?;
    let sweep = config.validate()?;
    let table = run_sweep(kind, &sweep)?;
    let bytes = table.render(config.format)?;
    match &config.out {
        Some(path) => fs::write(path, &bytes)
            .map_err(|e| config_error(format!("writing {}: {e}", path.display())))?,
        None => std::io::stdout()
            .lock()
            .write_all(&bytes)
            .map_err(|e| config_error(format!("writing output: {e}")))?,
    }
    Ok(table.all_ok())
}

/// Process exit code: 0 when every row is ok, 1 when some row failed, 2 when
/// the configuration is invalid or output could not be written.
pub fn main_with_env(cli: Cli, env: &dyn Fn(&str) -> Option<String>) -> i32 {
    match execute(&cli.command, env) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("suris: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn no_env(_: &str) -> Option<String> {
        None
    }

    fn args(deltas: &[&str]) -> SweepArgs {
        SweepArgs {
            delta: Some(deltas.iter().map(|s| s.to_string()).collect()),
            ..SweepArgs::default()
        }
    }

    #[test]
    fn defaults() {
        let cfg = SweepConfig::resolve(&SweepArgs::default(), &no_env).unwrap();
        assert!(cfg.deltas.is_empty());
        assert_eq!(cfg.eps_list, vec![DEFAULT_EPS]);
        assert_eq!(cfg.digits, 40);
        assert_eq!(cfg.format, Format::Csv);
    }

    #[test]
    fn flags_override_environment() {
        let env = |name: &str| (name == DIGITS_ENV).then(|| "50".to_string());
        let cfg = SweepConfig::resolve(&SweepArgs::default(), &env).unwrap();
        assert_eq!(cfg.digits, 50);
        let flagged = SweepArgs {
            digits: Some(35),
            ..SweepArgs::default()
        };
        assert_eq!(SweepConfig::resolve(&flagged, &env).unwrap().digits, 35);
    }

    #[test]
    fn bad_environment_is_a_config_error() {
        let env = |name: &str| (name == WORKERS_ENV).then(|| "many".to_string());
        let err = SweepConfig::resolve(&SweepArgs::default(), &env).unwrap_err();
        assert_eq!(err.code(), "config");
    }

    #[test]
    fn empty_strings_give_an_empty_list() {
        let cfg = SweepConfig::resolve(&args(&[""]), &no_env).unwrap();
        assert!(cfg.deltas.is_empty());
    }

    #[test]
    fn validation_rejects_out_of_range_values() {
        for bad in ["1.5", "0", "1", "-0.2", "abc"] {
            let cfg = SweepConfig::resolve(&args(&[bad]), &no_env).unwrap();
            assert!(cfg.validate().is_err(), "{bad}");
        }
        let mut cfg = SweepConfig::resolve(&args(&["0.5"]), &no_env).unwrap();
        cfg.digits = 20;
        assert!(cfg.validate().is_err());
        cfg.digits = 40;
        cfg.eps_list = vec!["-1".into()];
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn gamma_row_at_delta_half() {
        let sweep = SweepConfig::resolve(&args(&["0.5"]), &no_env)
            .unwrap()
            .validate()
            .unwrap();
        let table = run_sweep(Kind::Gamma, &sweep).unwrap();
        assert_eq!(table.rows.len(), 1);
        match &table.rows[0].cells[2] {
            Cell::Real(g) => assert!((g.to_f64() - 0.18813).abs() < 1e-5),
            other => panic!("{other:?}"),
        }
        assert!(table.all_ok());
    }

    #[test]
    fn empty_table_renders_header_only() {
        let table = Table {
            header: GAMMA_HEADER,
            rows: Vec::new(),
            digits: 40,
        };
        let csv = String::from_utf8(table.to_csv().unwrap()).unwrap();
        assert_eq!(csv, format!("{}\n", GAMMA_HEADER.join(",")));
        assert_eq!(table.to_json().unwrap(), b"[]\n");
    }
}
