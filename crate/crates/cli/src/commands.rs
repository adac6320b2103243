use std::fmt;
use std::fs;
use std::path::Path;

use serde::Serialize;

use ndl_core::graph6::{encode_graph6, parse_corpus, parse_graph6};
use ndl_core::rayleigh::{
    condition_check, objective_report, transmission_condition_epsilon, ConditionCheck,
    ObjectiveReport,
};
use ndl_core::search::{
    barbell_sweep, bound_audit, diameter_lower_bound_report, enumerate_verify_with,
    fit_gap_constant, hill_climb, verify_graphs, BoundAudit, Candidate, DiameterReportEntry,
    EnumerationSummary, SweepMode, SweepRecord, MIN_SWEEP_N,
};
use ndl_core::spectral::{build_ndl, harmonic, kernel_residual, ndl_spectrum};
use ndl_core::{BarbellParams, Error, Graph};

use crate::args::{
    ClimbArgs, Command, Family, Format, InputArgs, ObjectivesArgs, SweepArgs, VerifyArgs,
};
use crate::output::{snap, sweep_csv, to_json};

pub const EXIT_CONFIG: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DISCONNECTED: i32 = 3;
pub const EXIT_VIOLATION: i32 = 4;

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn config(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_CONFIG,
            message: message.into(),
        }
    }

    fn parse(source: &str, err: Error) -> Self {
        Self {
            code: EXIT_PARSE,
            message: format!("{source}: {err}"),
        }
    }

    /// Maps a library error raised while analysing `label`.
    fn from_core(label: &str, err: Error) -> Self {
        let code = match err {
            Error::Disconnected { .. } => EXIT_DISCONNECTED,
            _ => EXIT_CONFIG,
        };
        Self {
            code,
            message: format!("{label}: {err}"),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

/// Rendered output plus the process exit code it should be reported with.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, code: 0 }
    }
}

pub struct LabeledGraph {
    pub label: String,
    pub graph: Graph,
}

/// Treats the file as a graph6 corpus when its first non-blank line is a
/// single printable graph6 token, otherwise as an edge list.
fn read_input_file(path: &Path) -> Result<Vec<LabeledGraph>, CliError> {
    let name = path.display().to_string();
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::config(format!("{name}: cannot read input: {e}")))?;
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    let is_graph6 = first
        .is_some_and(|l| l.starts_with(">>graph6<<") || l.bytes().all(|b| (63..=126).contains(&b)));
    if is_graph6 {
        let graphs = parse_corpus(&text).map_err(|e| CliError::parse(&name, e))?;
        let lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, _)| i + 1);
        Ok(graphs
            .into_iter()
            .zip(lines)
            .map(|(graph, line)| LabeledGraph {
                label: format!("{name}:{line}"),
                graph,
            })
            .collect())
    } else {
        let graph = Graph::parse_edge_list(&text).map_err(|e| CliError::parse(&name, e))?;
        Ok(vec![LabeledGraph { label: name, graph }])
    }
}

pub fn resolve_input(input: &InputArgs) -> Result<Vec<LabeledGraph>, CliError> {
    let generated = |label: String, g: Result<Graph, Error>| {
        g.map(|graph| {
            vec![LabeledGraph {
                label: label.clone(),
                graph,
            }]
        })
        .map_err(|e| CliError::config(format!("{label}: {e}")))
    };
    if let Some(path) = &input.input {
        read_input_file(path)
    } else if let Some(token) = &input.graph6 {
        let graph =
            parse_graph6(token).map_err(|e| CliError::parse(&format!("graph6 `{token}`"), e))?;
        Ok(vec![LabeledGraph {
            label: token.clone(),
            graph,
        }])
    } else if let Some(n) = input.complete {
        generated(format!("complete({n})"), Graph::complete(n))
    } else if let Some(n) = input.path {
        generated(format!("path({n})"), Graph::path(n))
    } else if let Some(n) = input.cycle {
        generated(format!("cycle({n})"), Graph::cycle(n))
    } else if let Some(spec) = &input.barbell {
        let params = BarbellParams::parse(spec)
            .map_err(|e| CliError::config(format!("--barbell {spec}: {e}")))?;
        generated(format!("barbell({spec})"), Graph::barbell(params))
    } else {
        Err(CliError::config("no input graph given"))
    }
}

fn require_json(format: Format, command: &str) -> Result<(), CliError> {
    match format {
        Format::Json => Ok(()),
        Format::Csv => Err(CliError::config(format!(
            "`{command}` only supports --format json"
        ))),
    }
}

#[derive(Debug, Serialize)]
pub struct SpectrumReport {
    pub label: String,
    pub n: usize,
    pub diameter: u32,
    pub eigenvalues: Vec<f64>,
    pub second_eigenvalue: f64,
    pub spectral_radius: f64,
    pub gap: f64,
    pub kernel_residual: f64,
}

pub fn spectrum_report(lg: &LabeledGraph) -> Result<SpectrumReport, CliError> {
    let err = |e| CliError::from_core(&lg.label, e);
    if lg.graph.n() < 2 {
        return Err(CliError::config(format!(
            "{}: need at least 2 vertices",
            lg.label
        )));
    }
    let (spec, dd) = ndl_spectrum(&lg.graph).map_err(err)?;
    let a = build_ndl(&dd).map_err(err)?;
    let eig: Vec<f64> = spec.eigenvalues().iter().map(|&x| snap(x)).collect();
    Ok(SpectrumReport {
        label: lg.label.clone(),
        n: dd.n(),
        diameter: dd.diameter(),
        second_eigenvalue: eig[1],
        spectral_radius: spec.max(),
        gap: 2.0 - spec.max(),
        kernel_residual: kernel_residual(&a, &dd),
        eigenvalues: eig,
    })
}

fn cmd_spectrum(input: &InputArgs, format: Format) -> Result<Outcome, CliError> {
    require_json(format, "spectrum")?;
    let reports = resolve_input(input)?
        .iter()
        .map(spectrum_report)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Outcome::ok(to_json(
        &serde_json::json!({ "graphs": reports }),
    )))
}

fn cmd_verify(args: &VerifyArgs, format: Format) -> Result<Outcome, CliError> {
    require_json(format, "verify")?;
    if args.tol.is_nan() || args.tol <= 0.0 {
        return Err(CliError::config(format!(
            "--tol {} must be positive",
            args.tol
        )));
    }
    let summaries: Vec<EnumerationSummary> = if let Some(path) = &args.input {
        let graphs: Vec<Graph> = read_input_file(path)?
            .into_iter()
            .map(|lg| lg.graph)
            .collect();
        if let Some(bad) = graphs.iter().find(|g| !g.is_connected()) {
            return Err(CliError {
                code: EXIT_DISCONNECTED,
                message: format!(
                    "{}: corpus contains a disconnected graph ({})",
                    path.display(),
                    encode_graph6(bad).unwrap_or_default()
                ),
            });
        }
        verify_graphs(&graphs, args.tol).map_err(|e| CliError::config(e.to_string()))?
    } else {
        let n = args.n.expect("clap requires --n without --input");
        let max = if args.unsafe_large { 8 } else { 7 };
        if !(2..=max).contains(&n) {
            return Err(CliError::config(format!(
                "--n {n} is out of range (2..={max}{})",
                if args.unsafe_large {
                    ""
                } else {
                    "; 8 needs --unsafe-large"
                }
            )));
        }
        let summary = enumerate_verify_with(n, args.tol, args.unsafe_large, |done, total| {
            if done % 32 == 0 || done == total {
                eprintln!("verify n={n}: {done}/{total} batches");
            }
        })
        .map_err(|e| CliError::config(e.to_string()))?;
        vec![summary]
    };
    let clean = summaries.iter().all(EnumerationSummary::is_clean);
    let text = if args.input.is_some() {
        to_json(&summaries)
    } else {
        to_json(&summaries[0])
    };
    Ok(Outcome {
        text,
        code: if clean { 0 } else { EXIT_VIOLATION },
    })
}

pub fn sweep_records(args: &SweepArgs) -> Result<Vec<SweepRecord>, CliError> {
    let mode = match args.family {
        Family::Paper => SweepMode::PaperFamily,
        Family::All => SweepMode::AllCompositions,
    };
    let mut records = Vec::new();
    for &n in &args.n {
        if n < MIN_SWEEP_N {
            return Err(CliError::config(format!("--n {n} is below {MIN_SWEEP_N}")));
        }
        records.extend(barbell_sweep(n, mode).map_err(|e| CliError::config(e.to_string()))?);
    }
    Ok(records)
}

fn cmd_sweep(args: &SweepArgs, format: Format) -> Result<Outcome, CliError> {
    let records = sweep_records(args)?;
    let text = match format {
        Format::Csv => sweep_csv(&records),
        Format::Json => {
            let series = fit_gap_constant(&records).ok();
            to_json(&serde_json::json!({
                "records": records,
                "scaled_gap_series": series,
            }))
        }
    };
    Ok(Outcome::ok(text))
}

#[derive(Debug, Serialize)]
struct ClimbReport {
    n: usize,
    seed: u64,
    max_steps: usize,
    steps: usize,
    plateau: usize,
    accepted: usize,
    start_spectral_radius: f64,
    spectral_radius: f64,
    graph6: Option<String>,
    edges: Vec<(usize, usize)>,
    audit: BoundAudit,
    best_barbell: Option<SweepRecord>,
    diameter_report: Vec<DiameterReportEntry>,
}

fn cmd_climb(args: &ClimbArgs, format: Format) -> Result<Outcome, CliError> {
    require_json(format, "climb")?;
    let out =
        hill_climb(args.n, args.seed, args.steps).map_err(|e| CliError::config(e.to_string()))?;
    let best = out.best();
    let label = format!("climb(n={}, seed={})", args.n, args.seed);
    let audit = bound_audit(best).map_err(|e| CliError::from_core(&label, e))?;
    let mut candidates =
        vec![Candidate::from_climb(label.clone(), &out)
            .map_err(|e| CliError::from_core(&label, e))?];
    let best_barbell = if args.n >= MIN_SWEEP_N {
        let rec = barbell_sweep(args.n, SweepMode::AllCompositions)
            .map_err(|e| CliError::config(e.to_string()))?
            .remove(0);
        candidates.push(Candidate::from_sweep(&rec));
        Some(rec)
    } else {
        None
    };
    let report = ClimbReport {
        n: args.n,
        seed: args.seed,
        max_steps: args.steps,
        steps: out.state.steps,
        plateau: out.state.plateau,
        accepted: out.accepted,
        start_spectral_radius: out.start_spectral_radius,
        spectral_radius: out.state.spectral_radius,
        graph6: encode_graph6(best).ok(),
        edges: best.edges().collect(),
        audit,
        best_barbell,
        diameter_report: diameter_lower_bound_report(&candidates),
    };
    Ok(Outcome::ok(to_json(&report)))
}

#[derive(Debug, Serialize)]
struct AuditEntry {
    label: String,
    #[serde(flatten)]
    audit: BoundAudit,
}

fn cmd_audit(input: &InputArgs, format: Format) -> Result<Outcome, CliError> {
    require_json(format, "audit")?;
    let audits = resolve_input(input)?
        .into_iter()
        .map(|lg| {
            bound_audit(&lg.graph)
                .map(|audit| AuditEntry {
                    label: lg.label.clone(),
                    audit,
                })
                .map_err(|e| CliError::from_core(&lg.label, e))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Outcome::ok(to_json(
        &serde_json::json!({ "audits": audits }),
    )))
}

#[derive(Debug, Serialize)]
pub struct ObjectivesEntry {
    pub label: String,
    pub n: usize,
    pub spectral_radius: f64,
    pub harmonic_vector: Vec<f64>,
    pub objectives: ObjectiveReport,
    pub conditions: ConditionCheck,
    /// Conditions re-evaluated at ε = 1/√n.
    pub conditions_scaled: ConditionCheck,
}

pub fn objectives_entry(lg: &LabeledGraph, epsilon: f64) -> Result<ObjectivesEntry, CliError> {
    let err = |e| CliError::from_core(&lg.label, e);
    let (spec, dd) = ndl_spectrum(&lg.graph).map_err(err)?;
    let top = harmonic(&spec, &dd, dd.n() - 1).map_err(err)?;
    Ok(ObjectivesEntry {
        label: lg.label.clone(),
        n: dd.n(),
        spectral_radius: spec.max(),
        objectives: objective_report(&lg.graph, &dd, &top.y).map_err(err)?,
        conditions: condition_check(&lg.graph, &dd, &top.y, epsilon).map_err(err)?,
        conditions_scaled: condition_check(
            &lg.graph,
            &dd,
            &top.y,
            transmission_condition_epsilon(dd.n()),
        )
        .map_err(err)?,
        harmonic_vector: top.y,
    })
}

fn cmd_objectives(args: &ObjectivesArgs, format: Format) -> Result<Outcome, CliError> {
    require_json(format, "objectives")?;
    if args.epsilon.is_nan() || args.epsilon <= 0.0 {
        return Err(CliError::config(format!(
            "--epsilon {} must be positive",
            args.epsilon
        )));
    }
    let entries = resolve_input(&args.input)?
        .iter()
        .map(|lg| objectives_entry(lg, args.epsilon))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Outcome::ok(to_json(
        &serde_json::json!({ "graphs": entries }),
    )))
}

pub fn run(command: &Command, format: Format) -> Result<Outcome, CliError> {
    match command {
        Command::Spectrum(input) => cmd_spectrum(input, format),
        Command::Verify(args) => cmd_verify(args, format),
        Command::Sweep(args) => cmd_sweep(args, format),
        Command::Climb(args) => cmd_climb(args, format),
        Command::Audit(input) => cmd_audit(input, format),
        Command::Objectives(args) => cmd_objectives(args, format),
    }
}
