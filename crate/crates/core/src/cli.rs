//! The `cornell-eigen` command-line tool.
//!
//! Exit status: 0 on success, 1 when a computation fails, 2 on a usage error.

use std::ffi::OsString;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::closed_forms::{
    cornell_eigenvalue, lambda_linear, lambda_linear_expanded, wkb_linear, CornellFitConstants,
    DeltaConstants,
};
use crate::eigensolve::{
    coulomb_eigenvalue, solve_sho_basis_state, solve_shooting, BasisOptions, ShootingOptions,
};
use crate::series::{
    coefficients_by_recurrence, ode_residual, radial_wavefunction, SeriesParams, DEFAULT_TERMS,
};
use crate::spectrum::{
    bottomonium_table, eigenvalue_to_energy, meson_mass, scale_to_dimensionless, PotentialParams,
};

#[derive(Debug, Parser)]
#[command(
    name = "cornell-eigen",
    version,
    about = "Eigenvalues of the linear and Cornell potentials"
)]
struct Cli {
    /// Output layout.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// `key = value` file with potential parameters and defaults.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Significant digits for dimensionless eigenvalues.
    #[arg(long, global = true, value_parser = clap::value_parser!(u8).range(1..=17))]
    precision: Option<u8>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute a single eigenvalue.
    Eigen(EigenArgs),
    /// Reproduce one of the reference tables.
    Table {
        #[arg(value_enum)]
        which: TableId,
    },
    /// Compare methods over a grid of (a, n, l).
    Scan(ScanArgs),
    /// Sample the radial wavefunction of a bound state.
    Wavefunction(WaveArgs),
}

#[derive(Debug, Args)]
struct EigenArgs {
    #[arg(long, value_enum)]
    method: Option<MethodArg>,
    /// Dimensionless Coulomb strength (derived from the potential when one is given).
    #[arg(long, allow_negative_numbers = true)]
    a: Option<f64>,
    #[arg(long, default_value_t = 0)]
    n: u32,
    #[arg(long, default_value_t = 0)]
    l: u32,
    /// Named potential parameter set, e.g. `bottomonium-table3`.
    #[arg(long)]
    preset: Option<String>,
}

#[derive(Debug, Args)]
struct ScanArgs {
    /// Comma list (`0,1,2.5`) or inclusive range `start:stop:step`.
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    #[arg(long)]
    n_max: u32,
    #[arg(long)]
    l_max: u32,
    #[arg(long, value_enum, value_delimiter = ',', required = true)]
    methods: Vec<MethodArg>,
}

#[derive(Debug, Args)]
struct WaveArgs {
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    a: f64,
    #[arg(long, default_value_t = 0)]
    n: u32,
    #[arg(long, default_value_t = 0)]
    l: u32,
    #[arg(long, default_value_t = 6.0, allow_negative_numbers = true)]
    xi_max: f64,
    #[arg(long, default_value_t = 201)]
    samples: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableId {
    Tab1,
    Tab2,
    Tab3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Formula,
    Expanded,
    Wkb,
    Shooting,
    Sho,
    CornellFit,
    Coulomb,
}

impl MethodArg {
    fn name(self) -> &'static str {
        match self {
            MethodArg::Formula => "formula",
            MethodArg::Expanded => "expanded",
            MethodArg::Wkb => "wkb",
            MethodArg::Shooting => "shooting",
            MethodArg::Sho => "sho",
            MethodArg::CornellFit => "cornell-fit",
            MethodArg::Coulomb => "coulomb",
        }
    }

    fn check(self, a: f64, n: u32) -> Result<(), CliError> {
        if !(a >= 0.0) || !a.is_finite() {
            return Err(usage(format!("a must be finite and >= 0, got {a}")));
        }
        match self {
            MethodArg::Formula | MethodArg::Expanded | MethodArg::Wkb if a != 0.0 => {
                Err(usage(format!(
                    "method {} applies to the pure linear potential (a = 0)",
                    self.name()
                )))
            }
            MethodArg::Coulomb if a <= 0.0 => Err(usage("method coulomb requires a > 0")),
            MethodArg::Sho if n as usize >= BasisOptions::default().n_basis => Err(usage(format!(
                "method sho resolves n < {}",
                BasisOptions::default().n_basis
            ))),
            _ => Ok(()),
        }
    }

    fn eigenvalue(self, a: f64, n: u32, l: u32) -> crate::Result<f64> {
        let delta = DeltaConstants::default();
        match self {
            MethodArg::Formula => lambda_linear(n, l, &delta),
            MethodArg::Expanded => Ok(lambda_linear_expanded(n, l, delta.delta)),
            MethodArg::Wkb => Ok(wkb_linear(n, l)),
            MethodArg::Shooting => Ok(solve_shooting(a, n, l, &ShootingOptions::default())?.lambda),
            MethodArg::Sho => Ok(solve_sho_basis_state(a, n, l, &BasisOptions::default())?.lambda),
            MethodArg::CornellFit => {
                cornell_eigenvalue(a, n, l, &delta, &CornellFitConstants::PUBLISHED)
            }
            MethodArg::Coulomb => coulomb_eigenvalue(a, n, l),
        }
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Compute(String),
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        CliError::Compute(e.to_string())
    }
}

/// Settings read from `--config`; command-line flags take precedence.
#[derive(Debug, Default)]
struct FileConfig {
    preset: Option<String>,
    mu: Option<f64>,
    b: Option<f64>,
    alpha: Option<f64>,
    c: Option<f64>,
    quark_mass: Option<f64>,
    method: Option<MethodArg>,
    format: Option<Format>,
    precision: Option<u8>,
}

impl FileConfig {
    fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    fn parse(text: &str) -> Result<Self, CliError> {
        let mut cfg = FileConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |what: &str| usage(format!("config line {}: {what}", lineno + 1));
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| bad("expected key = value"))?;
            let (key, value) = (key.trim(), value.trim());
            let number = || value.parse::<f64>().map_err(|_| bad("expected a number"));
            match key {
                "preset" => cfg.preset = Some(value.to_string()),
                "mu" => cfg.mu = Some(number()?),
                "b" => cfg.b = Some(number()?),
                "alpha" => cfg.alpha = Some(number()?),
                "C" | "c" => cfg.c = Some(number()?),
                "quark_mass" => cfg.quark_mass = Some(number()?),
                "method" => {
                    cfg.method =
                        Some(MethodArg::from_str(value, true).map_err(|_| bad("unknown method"))?)
                }
                "format" => {
                    cfg.format =
                        Some(Format::from_str(value, true).map_err(|_| bad("unknown format"))?)
                }
                "precision" => {
                    cfg.precision = Some(
                        value
                            .parse::<u8>()
                            .ok()
                            .filter(|p| (1..=17).contains(p))
                            .ok_or_else(|| bad("precision must be 1..=17"))?,
                    )
                }
                other => return Err(bad(&format!("unknown key '{other}'"))),
            }
        }
        Ok(cfg)
    }

    fn has_parameters(&self) -> bool {
        [self.mu, self.b, self.alpha, self.c, self.quark_mass]
            .iter()
            .any(Option::is_some)
    }

    /// Potential from an optional preset overlaid with explicit keys.
    fn potential(&self, preset_flag: Option<&str>) -> Result<Option<PotentialParams>, CliError> {
        let preset = preset_flag.or(self.preset.as_deref());
        if preset.is_none() && !self.has_parameters() {
            return Ok(None);
        }
        let base = match preset {
            Some(name) => Some(PotentialParams::preset(name).map_err(|e| usage(e.to_string()))?),
            None => None,
        };
        let pick = |v: Option<f64>, from_base: Option<f64>, key: &str| {
            v.or(from_base)
                .ok_or_else(|| usage(format!("config is missing '{key}'")))
        };
        let quark_mass = pick(self.quark_mass, base.map(|p| p.quark_mass), "quark_mass")?;
        let p = PotentialParams {
            mu: self.mu.or(base.map(|p| p.mu)).unwrap_or(quark_mass / 2.0),
            b: pick(self.b, base.map(|p| p.b), "b")?,
            alpha: pick(self.alpha, base.map(|p| p.alpha), "alpha")?,
            c: pick(self.c, base.map(|p| p.c), "C")?,
            quark_mass,
        };
        p.validate().map_err(|e| usage(e.to_string()))?;
        Ok(Some(p))
    }
}

struct Settings {
    format: Format,
    precision: usize,
}

impl Settings {
    fn lambda(&self, x: f64) -> String {
        significant(x, self.precision)
    }
}

/// Fixed-point rendering with `digits` significant digits.
fn significant(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
    let out = format!("{x:.decimals$}");
    // rounding up may have gained a digit, e.g. 9.9999996 -> 10.000000
    let rounded: f64 = out.parse().unwrap_or(x);
    if decimals > 0 && rounded.abs().log10().floor() as i64 > magnitude {
        return format!("{x:.prec$}", prec = decimals - 1);
    }
    out
}

fn gev(x: f64) -> String {
    format!("{x:.4}")
}

struct Grid {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Grid {
    fn new(header: &[&str]) -> Self {
        Self {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Csv => {
                for row in std::iter::once(&self.header).chain(&self.rows) {
                    out.push_str(&row.join(","));
                    out.push('\n');
                }
            }
            Format::Table => {
                let widths: Vec<usize> = (0..self.header.len())
                    .map(|i| {
                        std::iter::once(&self.header)
                            .chain(&self.rows)
                            .map(|r| r[i].chars().count())
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                let line = |row: &Vec<String>| {
                    let cells: Vec<String> = row
                        .iter()
                        .zip(&widths)
                        .map(|(c, w)| format!("{c:>w$}"))
                        .collect();
                    cells.join("  ").trim_end().to_string() + "\n"
                };
                out.push_str(&line(&self.header));
                let rule: usize = widths.iter().sum::<usize>() + 2 * widths.len().saturating_sub(1);
                out.push_str(&"-".repeat(rule));
                out.push('\n');
                for row in &self.rows {
                    out.push_str(&line(row));
                }
            }
        }
        out
    }
}

/// Output text plus whether any cell failed.
struct Report {
    text: String,
    failed: bool,
}

/// Parses `args` (including the program name), runs the command, and
/// returns the process exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(report) => {
            if let Err(e) = emit(cli.output.as_deref(), &report.text) {
                eprintln!("error: {e}");
                return 1;
            }
            if report.failed {
                eprintln!("error: one or more cells failed to compute (marked ERR)");
                1
            } else {
                0
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CliError::Compute(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

fn emit(path: Option<&Path>, text: &str) -> std::io::Result<()> {
    match path {
        Some(p) => fs::write(p, text),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}

fn execute(cli: &Cli) -> Result<Report, CliError> {
    let file = match &cli.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };
    let settings = Settings {
        format: cli.format.or(file.format).unwrap_or(Format::Csv),
        precision: cli.precision.or(file.precision).unwrap_or(6) as usize,
    };
    match &cli.command {
        Command::Eigen(args) => cmd_eigen(args, &file, &settings),
        Command::Table { which } => cmd_table(*which, &settings),
        Command::Scan(args) => cmd_scan(args, &settings),
        Command::Wavefunction(args) => cmd_wavefunction(args, &settings),
    }
}

fn cmd_eigen(args: &EigenArgs, file: &FileConfig, s: &Settings) -> Result<Report, CliError> {
    let method = args.method.or(file.method).unwrap_or(MethodArg::Shooting);
    let potential = file.potential(args.preset.as_deref())?;
    let scaled = potential
        .as_ref()
        .map(scale_to_dimensionless)
        .transpose()
        .map_err(|e| usage(e.to_string()))?;
    let a = match (args.a, scaled) {
        (Some(_), Some(_)) => {
            return Err(usage("--a is derived from the potential; do not pass both"))
        }
        (Some(a), None) => a,
        (None, Some(sc)) => sc.a,
        (None, None) => 0.0,
    };
    method.check(a, args.n)?;
    let lambda = method.eigenvalue(a, args.n, args.l)?;

    let mut header = vec!["method", "a", "n", "l", "lambda"];
    let mut row = vec![
        method.name().to_string(),
        significant(a, s.precision),
        args.n.to_string(),
        args.l.to_string(),
        s.lambda(lambda),
    ];
    if let (Some(p), Some(sc)) = (potential, scaled) {
        let energy = eigenvalue_to_energy(lambda, &sc, &p);
        header.extend(["energy_gev", "mass_gev"]);
        row.extend([gev(energy), gev(meson_mass(energy, &p))]);
    }
    let mut grid = Grid::new(&header);
    grid.rows.push(row);
    Ok(Report {
        text: grid.render(s.format),
        failed: false,
    })
}

/// Renders a computed cell, or `ERR` on failure.
fn cell(value: &crate::Result<f64>, render: impl Fn(f64) -> String, failed: &mut bool) -> String {
    match value {
        Ok(v) => render(*v),
        Err(_) => {
            *failed = true;
            "ERR".to_string()
        }
    }
}

fn cmd_table(which: TableId, s: &Settings) -> Result<Report, CliError> {
    let delta = DeltaConstants::default();
    let fit = CornellFitConstants::PUBLISHED;
    let shoot = |a: f64, n: u32, l: u32| -> crate::Result<f64> {
        Ok(solve_shooting(a, n, l, &ShootingOptions::default())?.lambda)
    };
    let mut failed = false;
    let grid = match which {
        TableId::Tab1 => {
            let mut specs = Vec::new();
            for l in 0..=10 {
                specs.push(("lambda_0l_a0", 0.0, 0, l));
            }
            for l in 0..=10 {
                specs.push(("lambda_0l_a1", 1.0, 0, l));
            }
            for n in 0..=10 {
                specs.push(("lambda_n0_a1", 1.0, n, 0));
            }
            let cells: Vec<_> = specs
                .par_iter()
                .map(|&(_, a, n, l)| {
                    let formula = if a == 0.0 {
                        lambda_linear(n, l, &delta)
                    } else {
                        cornell_eigenvalue(a, n, l, &delta, &fit)
                    };
                    (formula, shoot(a, n, l))
                })
                .collect();
            let mut grid = Grid::new(&["block", "a", "n", "l", "formula", "wkb", "numerical"]);
            for (&(block, a, n, l), (formula, numerical)) in specs.iter().zip(&cells) {
                let wkb = if a == 0.0 {
                    s.lambda(wkb_linear(n, l))
                } else {
                    String::new()
                };
                grid.rows.push(vec![
                    block.to_string(),
                    format!("{a}"),
                    n.to_string(),
                    l.to_string(),
                    cell(formula, |v| s.lambda(v), &mut failed),
                    wkb,
                    cell(numerical, |v| s.lambda(v), &mut failed),
                ]);
            }
            grid
        }
        TableId::Tab2 => {
            let specs: Vec<(u32, u32)> = [1, 8, 14]
                .iter()
                .flat_map(|&l| (1..=14).map(move |n| (n, l)))
                .collect();
            let cells: Vec<_> = specs
                .par_iter()
                .map(|&(n, l)| (lambda_linear(n, l, &delta), shoot(0.0, n, l)))
                .collect();
            let mut grid = Grid::new(&["n", "l", "formula", "wkb", "numerical"]);
            for (&(n, l), (formula, numerical)) in specs.iter().zip(&cells) {
                grid.rows.push(vec![
                    n.to_string(),
                    l.to_string(),
                    cell(formula, |v| s.lambda(v), &mut failed),
                    s.lambda(wkb_linear(n, l)),
                    cell(numerical, |v| s.lambda(v), &mut failed),
                ]);
            }
            grid
        }
        TableId::Tab3 => {
            let rows = bottomonium_table()?;
            let mut grid = Grid::new(&[
                "state",
                "n",
                "formula_gev",
                "numerical_gev",
                "experiment_gev",
            ]);
            for r in rows {
                grid.rows.push(vec![
                    r.label.to_string(),
                    r.n.to_string(),
                    gev(r.formula_mass),
                    gev(r.numerical_mass),
                    gev(r.experiment),
                ]);
            }
            grid
        }
    };
    Ok(Report {
        text: grid.render(s.format),
        failed,
    })
}

fn parse_a_values(spec: &str) -> Result<Vec<f64>, CliError> {
    let bad = || usage(format!("invalid --a value '{spec}'"));
    let values: Vec<f64> = if spec.contains(':') {
        let parts: Vec<f64> = spec
            .split(':')
            .map(|p| p.trim().parse::<f64>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?;
        let [start, stop, step] = parts[..] else {
            return Err(bad());
        };
        if !(step > 0.0) || !start.is_finite() || !stop.is_finite() {
            return Err(bad());
        }
        let count = ((stop - start) / step + 1e-9).floor();
        if count < 0.0 {
            Vec::new()
        } else {
            (0..=count as usize)
                .map(|i| start + i as f64 * step)
                .collect()
        }
    } else {
        spec.split(',')
            .filter(|p| !p.trim().is_empty())
            .map(|p| p.trim().parse::<f64>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?
    };
    if values.is_empty() {
        return Err(usage("the --a range is empty"));
    }
    Ok(values)
}

fn cmd_scan(args: &ScanArgs, s: &Settings) -> Result<Report, CliError> {
    let a_values = parse_a_values(&args.a)?;
    let methods = &args.methods;
    let mut points = Vec::new();
    for &a in &a_values {
        for n in 0..=args.n_max {
            for l in 0..=args.l_max {
                for m in methods {
                    m.check(a, n)?;
                }
                points.push((a, n, l));
            }
        }
    }
    let values: Vec<Vec<crate::Result<f64>>> = points
        .par_iter()
        .map(|&(a, n, l)| methods.iter().map(|m| m.eigenvalue(a, n, l)).collect())
        .collect();

    let mut header: Vec<String> = ["a", "n", "l"].iter().map(|s| s.to_string()).collect();
    header.extend(methods.iter().map(|m| m.name().to_string()));
    let pairs: Vec<(usize, usize)> = (0..methods.len())
        .flat_map(|i| (i + 1..methods.len()).map(move |j| (i, j)))
        .collect();
    for &(i, j) in &pairs {
        header.push(format!("rel_{}_{}", methods[i].name(), methods[j].name()));
    }
    let mut grid = Grid {
        header,
        rows: Vec::new(),
    };
    let mut failed = false;
    for (&(a, n, l), vals) in points.iter().zip(&values) {
        let mut row = vec![format!("{a}"), n.to_string(), l.to_string()];
        for v in vals {
            row.push(cell(v, |x| s.lambda(x), &mut failed));
        }
        for &(i, j) in &pairs {
            let rel = match (&vals[i], &vals[j]) {
                (Ok(x), Ok(y)) => format!("{:.3e}", ((x - y) / y).abs()),
                _ => "ERR".to_string(),
            };
            row.push(rel);
        }
        grid.rows.push(row);
    }
    Ok(Report {
        text: grid.render(s.format),
        failed,
    })
}

const MAX_SERIES_TERMS: usize = 4000;

fn cmd_wavefunction(args: &WaveArgs, s: &Settings) -> Result<Report, CliError> {
    if args.samples < 2 {
        return Err(usage("--samples must be at least 2"));
    }
    if !(args.xi_max > 0.0) || !args.xi_max.is_finite() {
        return Err(usage("--xi-max must be positive"));
    }
    MethodArg::Shooting.check(args.a, args.n)?;
    let lambda = solve_shooting(args.a, args.n, args.l, &ShootingOptions::default())?.lambda;
    let params = SeriesParams::new(args.a, args.l, lambda)?;

    let mut count = DEFAULT_TERMS;
    let coeffs = loop {
        let c = coefficients_by_recurrence(params, count)?;
        if radial_wavefunction(&c, args.xi_max)?.converged() {
            break c;
        }
        count *= 2;
        if count > MAX_SERIES_TERMS {
            return Err(CliError::Compute(format!(
                "series does not converge at xi = {} within {MAX_SERIES_TERMS} terms",
                args.xi_max
            )));
        }
    };

    let last = (args.samples - 1) as f64;
    let mut samples = Vec::with_capacity(args.samples);
    for k in 0..args.samples {
        let xi = args.xi_max * k as f64 / last;
        // regular solution vanishes at the origin
        let (r, residual) = if xi > 0.0 {
            (
                radial_wavefunction(&coeffs, xi)?.value,
                ode_residual(&coeffs, xi)?,
            )
        } else {
            (0.0, 0.0)
        };
        samples.push((xi, r, residual));
    }
    let peak = samples.iter().map(|(_, r, _)| r.abs()).fold(0.0, f64::max);
    if !(peak > 0.0) || !peak.is_finite() {
        return Err(CliError::Compute(
            "wavefunction vanishes on the sample grid".into(),
        ));
    }

    let mut grid = Grid::new(&["xi", "R", "residual"]);
    for (xi, r, res) in samples {
        grid.rows.push(vec![
            format!("{xi}"),
            significant(r / peak, s.precision.max(10)),
            format!("{:.3e}", res / peak),
        ]);
    }
    Ok(Report {
        text: grid.render(s.format),
        failed: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(significant(2.338107410459767, 6), "2.33811");
        assert_eq!(significant(22.18453, 6), "22.1845");
        assert_eq!(significant(-0.0123456789, 3), "-0.0123");
        assert_eq!(significant(9.9999996, 6), "10.0000");
        assert_eq!(significant(123456.7, 3), "123457");
    }

    #[test]
    fn a_ranges() {
        assert_eq!(parse_a_values("0,1,2.5").unwrap(), vec![0.0, 1.0, 2.5]);
        assert_eq!(
            parse_a_values("1:5:1").unwrap(),
            vec![1.0, 2.0, 3.0, 4.0, 5.0]
        );
        assert!(parse_a_values("").is_err());
        assert!(parse_a_values("5:1:1").is_err());
        assert!(parse_a_values("1:2").is_err());
        assert!(parse_a_values("x").is_err());
    }

    #[test]
    fn config_file() {
        let cfg =
            FileConfig::parse("# bb\npreset = bottomonium-table3\nC = 0.3 # shifted\n").unwrap();
        let p = cfg.potential(None).unwrap().unwrap();
        assert_eq!(p.c, 0.3);
        assert_eq!(p.b, 0.18);
        assert!(FileConfig::parse("bogus = 1").is_err());
        assert!(FileConfig::parse("b 1").is_err());
        let partial = FileConfig::parse("b = 0.2").unwrap();
        assert!(partial.potential(None).is_err());
        assert!(FileConfig::parse("")
            .unwrap()
            .potential(None)
            .unwrap()
            .is_none());
    }

    #[test]
    fn method_preconditions() {
        assert!(MethodArg::Coulomb.check(0.0, 0).is_err());
        assert!(MethodArg::Formula.check(1.0, 0).is_err());
        assert!(MethodArg::Shooting.check(-1.0, 0).is_err());
        assert!(MethodArg::Sho.check(0.0, 20).is_err());
        assert!(MethodArg::CornellFit.check(2.0, 3).is_ok());
    }

    #[test]
    fn csv_and_table_layouts() {
        let mut g = Grid::new(&["x", "value"]);
        g.rows.push(vec!["1".into(), "2.5".into()]);
        assert_eq!(g.render(Format::Csv), "x,value\n1,2.5\n");
        let t = g.render(Format::Table);
        assert!(t.starts_with("x  value\n"));
        assert!(t.ends_with("1    2.5\n"));
    }
}
