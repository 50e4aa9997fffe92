use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use johnson_search::analysis::{
    default_gamma, gamma_c_formula_k3, gamma_c_numeric, perturbation_report, predicted_peak_time,
    run_verification,
};
use johnson_search::linalg::OverlapRecord;
use johnson_search::reduced::search_hamiltonian;
use johnson_search::{JohnsonParams, DEFAULT_VERTEX_CAP};
use rayon::prelude::*;

use crate::error::{usage, CliError};
use crate::svg::{write_svg, Chart, Series};
use crate::table::{write_csv, Cell, Table};

/// Largest deviation `verify` accepts between the full and reduced walks.
pub const VERIFY_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Parser)]
#[command(
    name = "jsearch",
    version,
    about = "Quantum walk search on Johnson graphs J(n, k)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Success probability of the marked vertex over time.
    Simulate(SimulateArgs),
    /// Overlaps of the start and marked states with each eigenvector across a γ grid.
    SweepGamma(SweepArgs),
    /// Critical jumping rate: closed form (k = 3) and numeric search.
    CriticalGamma(GraphArgs),
    /// Eigenvalues of the reduced Hamiltonian with both overlaps.
    Spectrum(SpectrumArgs),
    /// Compare the brute-force walk on all C(n, k) vertices with the reduced model.
    Verify(VerifyArgs),
    /// Perturbation-theory report for J(n, 3).
    AnalyzePt(PtArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Svg,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    /// Output file; stdout when omitted.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    /// Jumping rate; defaults to the critical rate.
    #[arg(long)]
    pub gamma: Option<f64>,
    /// End of the time grid; defaults to 1.5 times the predicted peak.
    #[arg(long)]
    pub t_max: Option<f64>,
    /// Number of grid points on `[0, t_max]`.
    #[arg(long, default_value_t = 1000)]
    pub steps: usize,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    /// Defaults to 0.
    #[arg(long)]
    pub gamma_min: Option<f64>,
    /// Defaults to 2/(kn).
    #[arg(long)]
    pub gamma_max: Option<f64>,
    #[arg(long, default_value_t = 201)]
    pub points: usize,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[arg(long)]
    pub gamma: Option<f64>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[arg(long)]
    pub gamma: Option<f64>,
    /// Defaults to 2π√N.
    #[arg(long)]
    pub t_max: Option<f64>,
    #[arg(long, default_value_t = 200)]
    pub steps: usize,
    /// Largest vertex count the brute-force model may allocate.
    #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
    pub cap: usize,
}

#[derive(Debug, Args)]
pub struct PtArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 3)]
    pub k: usize,
    /// Defaults to 1/(3n) + 7/(6n²).
    #[arg(long)]
    pub gamma: Option<f64>,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

/// Parses arguments and runs the command. Usage errors exit with 2,
/// computation errors with 1.
pub fn run<I, T>(args: I) -> std::process::ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return std::process::ExitCode::from(e.exit_code() as u8);
        }
    };
    match dispatch(cli.command) {
        Ok(()) => std::process::ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("jsearch: {e}");
            e.exit_code()
        }
    }
}

pub fn dispatch(command: Command) -> Result<(), CliError> {
    match command {
        Command::Simulate(a) => simulate(a),
        Command::SweepGamma(a) => sweep_gamma(a),
        Command::CriticalGamma(a) => critical_gamma(a),
        Command::Spectrum(a) => spectrum(a),
        Command::Verify(a) => verify(a),
        Command::AnalyzePt(a) => analyze_pt(a),
    }
}

fn params(n: usize, k: usize) -> Result<JohnsonParams, CliError> {
    if k == 0 || 2 * k > n {
        return usage(format!("need 1 <= k and 2k <= n, got n={n}, k={k}"));
    }
    JohnsonParams::new(n, k).map_err(|e| CliError::Usage(e.to_string()))
}

fn check_gamma(gamma: f64) -> Result<f64, CliError> {
    if !gamma.is_finite() || gamma < 0.0 {
        return usage(format!(
            "--gamma must be finite and non-negative, got {gamma}"
        ));
    }
    Ok(gamma)
}

fn check_time(t: f64) -> Result<f64, CliError> {
    if !t.is_finite() || t < 0.0 {
        return usage(format!("--t-max must be finite and non-negative, got {t}"));
    }
    Ok(t)
}

fn gamma_or_default(p: JohnsonParams, gamma: Option<f64>) -> Result<f64, CliError> {
    match gamma {
        Some(g) => check_gamma(g),
        None => Ok(default_gamma::<f64>(p)?.gamma),
    }
}

fn csv_only(format: Format, command: &str) -> Result<(), CliError> {
    match format {
        Format::Csv => Ok(()),
        Format::Svg => usage(format!("{command} only writes csv")),
    }
}

fn simulate(a: SimulateArgs) -> Result<(), CliError> {
    let p = params(a.graph.n, a.graph.k)?;
    if a.steps < 2 {
        return usage("--steps must be at least 2");
    }
    let t_max = match a.t_max {
        Some(t) => check_time(t)?,
        None => 1.5 * predicted_peak_time::<f64>(p)?,
    };
    let gamma = gamma_or_default(p, a.gamma)?;
    let curve = search_hamiltonian(p, gamma)?.success_curve(t_max, a.steps)?;
    match a.graph.format {
        Format::Csv => {
            let mut t = Table::new(["time", "probability"]);
            for (&time, &prob) in curve.times.iter().zip(&curve.probabilities) {
                t.push(vec![time.into(), prob.into()]);
            }
            write_csv(&t, a.graph.output.as_deref())
        }
        Format::Svg => {
            let points = curve
                .times
                .iter()
                .copied()
                .zip(curve.probabilities.iter().copied());
            let chart = Chart {
                title: format!("J({}, {}), γ = {gamma:.6}", p.n(), p.k()),
                x_label: "time".into(),
                y_label: "success probability".into(),
                series: vec![Series::new("probability", points.collect())],
            };
            write_svg(&chart, a.graph.output.as_deref())
        }
    }
}

fn overlaps_at(p: JohnsonParams, gamma: f64) -> Result<Vec<OverlapRecord<f64>>, CliError> {
    let model = search_hamiltonian(p, gamma)?;
    Ok(model
        .propagator()?
        .overlap_spectrum(&model.initial_state(), model.marked_index())?)
}

fn sweep_gamma(a: SweepArgs) -> Result<(), CliError> {
    let p = params(a.graph.n, a.graph.k)?;
    let lo = check_gamma(a.gamma_min.unwrap_or(0.0))?;
    let hi = check_gamma(a.gamma_max.unwrap_or(2.0 / (p.k() * p.n()) as f64))?;
    if a.points == 0 {
        return usage("--points must be at least 1");
    }
    if hi < lo || (a.points > 1 && hi == lo) {
        return usage(format!("need --gamma-min < --gamma-max, got {lo} and {hi}"));
    }
    let grid: Vec<f64> = if a.points == 1 {
        vec![lo]
    } else {
        (0..a.points)
            .map(|i| lo + (hi - lo) * i as f64 / (a.points - 1) as f64)
            .collect()
    };
    // Ordered collect keeps grid order whatever the completion order.
    let sweep: Vec<(f64, Vec<OverlapRecord<f64>>)> = grid
        .par_iter()
        .map(|&g| overlaps_at(p, g).map(|o| (g, o)))
        .collect::<Result<_, _>>()?;

    match a.graph.format {
        Format::Csv => {
            let mut t = Table::new(["gamma", "eig_index", "energy", "overlap_s", "overlap_w"]);
            for (g, records) in &sweep {
                for r in records {
                    t.push(vec![
                        (*g).into(),
                        r.index.into(),
                        r.energy.into(),
                        r.overlap_s.into(),
                        r.overlap_w.into(),
                    ]);
                }
            }
            write_csv(&t, a.graph.output.as_deref())
        }
        Format::Svg => {
            let series = (0..p.reduced_dim())
                .map(|j| {
                    let pts = sweep.iter().map(|(g, r)| (*g, r[j].overlap_s)).collect();
                    Series::new(format!("|⟨s|ψ{j}⟩|²"), pts)
                })
                .collect();
            let chart = Chart {
                title: format!("J({}, {}) start-state overlaps", p.n(), p.k()),
                x_label: "γ".into(),
                y_label: "|⟨s|ψ⟩|²".into(),
                series,
            };
            write_svg(&chart, a.graph.output.as_deref())
        }
    }
}

fn critical_gamma(a: GraphArgs) -> Result<(), CliError> {
    csv_only(a.format, "critical-gamma")?;
    let p = params(a.n, a.k)?;
    let mut t = Table::new(["method", "gamma", "residual"]);
    if p.k() == 3 {
        let f = gamma_c_formula_k3::<f64>(p.n())?;
        t.push(vec![
            f.method.as_str().into(),
            f.gamma.into(),
            f.residual.into(),
        ]);
    }
    let num = gamma_c_numeric::<f64>(p)?;
    t.push(vec![
        num.method.as_str().into(),
        num.gamma.into(),
        num.residual.into(),
    ]);
    write_csv(&t, a.output.as_deref())
}

fn spectrum(a: SpectrumArgs) -> Result<(), CliError> {
    let p = params(a.graph.n, a.graph.k)?;
    let gamma = gamma_or_default(p, a.gamma)?;
    let records = overlaps_at(p, gamma)?;
    match a.graph.format {
        Format::Csv => {
            let mut t = Table::new(["eig_index", "energy", "overlap_s", "overlap_w"]);
            for r in &records {
                t.push(vec![
                    r.index.into(),
                    r.energy.into(),
                    r.overlap_s.into(),
                    r.overlap_w.into(),
                ]);
            }
            write_csv(&t, a.graph.output.as_deref())
        }
        Format::Svg => {
            let s = records.iter().map(|r| (r.energy, r.overlap_s)).collect();
            let w = records.iter().map(|r| (r.energy, r.overlap_w)).collect();
            let chart = Chart {
                title: format!("J({}, {}), γ = {gamma:.6}", p.n(), p.k()),
                x_label: "energy".into(),
                y_label: "overlap".into(),
                series: vec![
                    Series::new("start state", s),
                    Series::new("marked state", w),
                ],
            };
            write_svg(&chart, a.graph.output.as_deref())
        }
    }
}

fn verify(a: VerifyArgs) -> Result<(), CliError> {
    let p = params(a.graph.n, a.graph.k)?;
    if a.steps < 2 {
        return usage("--steps must be at least 2");
    }
    if a.cap == 0 {
        return usage("--cap must be positive");
    }
    let gamma = gamma_or_default(p, a.gamma)?;
    let t_max = match a.t_max {
        Some(t) => check_time(t)?,
        None => 2.0 * std::f64::consts::PI * (p.vertex_count() as f64).sqrt(),
    };
    let v = run_verification(p, gamma, t_max, a.steps, a.cap)?;
    match a.graph.format {
        Format::Csv => {
            let mut t = Table::new(["key", "value"]);
            t.push(vec!["n".into(), p.n().into()]);
            t.push(vec!["k".into(), p.k().into()]);
            t.push(vec!["gamma".into(), gamma.into()]);
            t.push(vec!["t_max".into(), t_max.into()]);
            t.push(vec!["steps".into(), a.steps.into()]);
            t.push(vec!["max_deviation".into(), v.max_deviation.into()]);
            write_csv(&t, a.graph.output.as_deref())?;
        }
        Format::Svg => {
            let series = |label: &str, c: &johnson_search::TimeSeries64| {
                Series::new(
                    label,
                    c.times
                        .iter()
                        .copied()
                        .zip(c.probabilities.iter().copied())
                        .collect(),
                )
            };
            let chart = Chart {
                title: format!("J({}, {}): full graph vs reduced model", p.n(), p.k()),
                x_label: "time".into(),
                y_label: "success probability".into(),
                series: vec![series("full", &v.full), series("reduced", &v.reduced)],
            };
            write_svg(&chart, a.graph.output.as_deref())?;
        }
    }
    if v.max_deviation > VERIFY_TOLERANCE {
        return Err(CliError::Check(format!(
            "max deviation {:e} exceeds {VERIFY_TOLERANCE:e}",
            v.max_deviation
        )));
    }
    Ok(())
}

fn analyze_pt(a: PtArgs) -> Result<(), CliError> {
    csv_only(a.format, "analyze-pt")?;
    if a.k != 3 {
        return usage(format!("analyze-pt supports k = 3 only, got k={}", a.k));
    }
    let p = params(a.n, a.k)?;
    let gamma = match a.gamma {
        Some(g) if g > 0.0 => check_gamma(g)?,
        Some(g) => return usage(format!("--gamma must be positive, got {g}")),
        None => gamma_c_formula_k3::<f64>(p.n())?.gamma,
    };
    let r = perturbation_report(p.n(), gamma)?;
    let mut t = Table::new(["key", "value"]);
    let mut kv = |k: &str, v: Cell| t.push(vec![k.into(), v]);
    kv("n", r.n.into());
    kv("gamma", r.gamma.into());
    for (i, c) in r.cubic_coefficients.iter().enumerate() {
        kv(&format!("cubic_{}", 3 - i), (*c).into());
    }
    kv("lambda_u", r.lambda_u.into());
    kv("e_r", r.e_r.into());
    kv("u_d0", r.u[0].into());
    kv("u_r1", r.u[1].into());
    kv("u_r2", r.u[2].into());
    kv("h_rr", r.effective_2x2[(0, 0)].into());
    kv("h_ru", r.effective_2x2[(0, 1)].into());
    kv("h_ur", r.effective_2x2[(1, 0)].into());
    kv("h_uu", r.effective_2x2[(1, 1)].into());
    kv("e_plus", r.e_plus.into());
    kv("e_minus", r.e_minus.into());
    kv("predicted_gap", r.predicted_gap.into());
    kv("predicted_runtime", r.predicted_runtime.into());
    write_csv(&t, a.output.as_deref())
}
