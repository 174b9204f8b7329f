//! Command-line front end: argument parsing and the `run` dispatcher.
//!
//! Every command returns a JSON report and an exit code: 0 when all checks
//! pass, 1 when a mathematical check fails, 2 for usage or input errors.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use foldcube::boolean_group::folded_cube;
use foldcube::graph::{automorphisms_with, find_disjoint_pair_with};
use foldcube::so_twist::{
    abelian_points, classical_action_sweep_with, lemma_p_check_with, lemma_so_bruteforce_with,
    lemma_sumzero_check_with, twisted_relation_check_with, CheckReport, Model,
};
use foldcube::spectral::{numeric_spectrum, verify_spectrum_with};
use foldcube::star_algebra::{
    build_witness, certify_witness_with, recovery_products_with, rep_free_product,
};
use foldcube::{Config, Error, Graph};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "foldcube",
    version,
    about = "Quantum symmetry checks for folded cube graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Override every pass/fail tolerance.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form spectrum of FQ_n against a dense eigensolver.
    Spectra(Subject),
    /// Enumerate the automorphism group.
    Autos(Subject),
    /// Find two non-trivial automorphisms with disjoint supports.
    Disjoint(Subject),
    /// Build and certify the magic-unitary witness from a disjoint pair.
    Witness(WitnessArgs),
    /// List the classical points of SO_n^{-1}.
    SoPoints(NArgs),
    /// Exhaustive and sampled checks of the SO_n^{-1} lemmas and the
    /// classical action on FQ_n.
    SoCheck(SoCheckArgs),
    /// Verify the twisted relations of SO_{2m+1}^{-1} on sampled points.
    TwistCheck(TwistArgs),
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct Subject {
    /// Use the folded n-cube FQ_n.
    #[arg(long)]
    pub n: Option<u32>,
    /// Read a graph from a JSON file `{"n": .., "edges": [[a, b], ..]}`.
    #[arg(long)]
    pub graph: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct Sampling {
    #[arg(long, env = "QSYM_SEED", default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = 50)]
    pub samples: usize,
}

#[derive(Debug, Clone, Args)]
pub struct WitnessArgs {
    #[command(flatten)]
    pub subject: Subject,
    #[arg(long, env = "QSYM_SEED", default_value_t = 42)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args)]
pub struct NArgs {
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Clone, Args)]
pub struct SoCheckArgs {
    #[arg(long)]
    pub n: usize,
    /// Tuple length for the tau-product lemma.
    #[arg(long, default_value_t = 2)]
    pub l: usize,
    #[command(flatten)]
    pub sampling: Sampling,
}

#[derive(Debug, Clone, Args)]
pub struct TwistArgs {
    #[arg(long, default_value_t = 1)]
    pub m: usize,
    #[command(flatten)]
    pub sampling: Sampling,
}

/// Result of one command.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub report: Value,
    pub summary: String,
}

impl Outcome {
    fn new(pass: bool, report: impl Serialize, summary: impl Into<String>) -> Self {
        Outcome {
            code: if pass { EXIT_PASS } else { EXIT_FAIL },
            report: serde_json::to_value(report).expect("reports serialize"),
            summary: summary.into(),
        }
    }

    fn usage(err: &Error) -> Self {
        Outcome {
            code: EXIT_USAGE,
            report: json!({ "error": err.to_string() }),
            summary: format!("error: {err}"),
        }
    }

    /// Pretty JSON with a trailing newline, as written to standard output.
    pub fn json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.report).expect("values serialize");
        s.push('\n');
        s
    }
}

pub fn config_for(cli: &Cli) -> Config {
    match cli.tol {
        Some(t) => Config::default().with_tolerance(t),
        None => Config::default(),
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let cfg = config_for(cli);
    if let Some(t) = cli.tol {
        if !(t.is_finite() && t >= 0.0) {
            return Outcome::usage(&Error::Usage(format!(
                "--tol must be a finite non-negative number, got {t}"
            )));
        }
    }
    let result = match &cli.command {
        Command::Spectra(s) => spectra(s, &cfg),
        Command::Autos(s) => autos(s, &cfg),
        Command::Disjoint(s) => disjoint(s, &cfg),
        Command::Witness(w) => witness(w, &cfg),
        Command::SoPoints(a) => so_points(a.n),
        Command::SoCheck(a) => so_check(a, &cfg),
        Command::TwistCheck(a) => twist_check(a, &cfg),
    };
    result.unwrap_or_else(|e| Outcome::usage(&e))
}

fn load_graph(s: &Subject) -> Result<Graph, Error> {
    match (s.n, &s.graph) {
        (Some(n), None) => folded_cube(n),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
            Graph::from_json(&text)
        }
        _ => Err(Error::Usage("give exactly one of --n and --graph".into())),
    }
}

fn spectra(s: &Subject, cfg: &Config) -> Result<Outcome, Error> {
    match s.n {
        Some(n) => {
            let report = verify_spectrum_with(n, cfg)?;
            let table: Vec<String> = report
                .levels
                .iter()
                .map(|l| format!("{}:{}", l.lambda, l.multiplicity))
                .collect();
            let pass = report.pass();
            Ok(Outcome::new(
                pass,
                &report,
                format!("spectra FQ_{n}: {} {}", table.join(" "), verdict(pass)),
            ))
        }
        None => {
            let g = load_graph(s)?;
            let levels = numeric_spectrum(&g, cfg)?;
            let summary = format!(
                "spectra: {} distinct eigenvalues on {} vertices",
                levels.len(),
                g.n_vertices()
            );
            Ok(Outcome::new(
                true,
                json!({ "n_vertices": g.n_vertices(), "levels": levels }),
                summary,
            ))
        }
    }
}

fn autos(s: &Subject, cfg: &Config) -> Result<Outcome, Error> {
    let g = load_graph(s)?;
    let autos = automorphisms_with(&g, cfg)?;
    let summary = format!(
        "autos: {} automorphisms on {} vertices",
        autos.len(),
        g.n_vertices()
    );
    Ok(Outcome::new(
        true,
        json!({ "n_vertices": g.n_vertices(), "count": autos.len(), "automorphisms": autos }),
        summary,
    ))
}

fn disjoint(s: &Subject, cfg: &Config) -> Result<Outcome, Error> {
    let g = load_graph(s)?;
    Ok(match find_disjoint_pair_with(&g, cfg)? {
        Some((sigma, tau)) => {
            let summary = format!("disjoint: sigma = {sigma}, tau = {tau} PASS");
            Outcome::new(
                true,
                json!({
                    "found": true,
                    "sigma": sigma,
                    "tau": tau,
                    "sigma_cycles": sigma.to_string(),
                    "tau_cycles": tau.to_string(),
                }),
                summary,
            )
        }
        None => Outcome::new(false, json!({ "found": false }), "disjoint: no pair FAIL"),
    })
}

fn witness(a: &WitnessArgs, cfg: &Config) -> Result<Outcome, Error> {
    let g = load_graph(&a.subject)?;
    let Some((sigma, tau)) = find_disjoint_pair_with(&g, cfg)? else {
        return Ok(Outcome::new(
            false,
            json!({ "found": false }),
            "witness: no disjoint pair FAIL",
        ));
    };
    let model = rep_free_product(sigma.order() as usize, tau.order() as usize, a.seed)?;
    let u = build_witness(&g, &sigma, &tau, &model.p, &model.q)?;
    let report = certify_witness_with(&g, &u, cfg)?.with_seed(Some(a.seed));
    let recovery = recovery_products_with(&u, &sigma, &tau, &model.p, &model.q, cfg)?;
    let quantum = report.certifies_quantum_symmetry(cfg);
    let pass = quantum && recovery.pass;
    let summary = format!(
        "witness: defects {:.1e}/{:.1e}/{:.1e}/{:.1e}, c = {:.4} {}",
        report.projection_defect,
        report.rowsum_defect,
        report.colsum_defect,
        report.commutation_defect,
        report.noncomm_certificate,
        verdict(pass)
    );
    Ok(Outcome::new(
        pass,
        json!({
            "sigma": sigma,
            "tau": tau,
            "algebra_dim": model.dim(),
            "report": report,
            "recovery": recovery,
            "quantum_symmetry": quantum,
        }),
        summary,
    ))
}

fn so_points(n: usize) -> Result<Outcome, Error> {
    let points = abelian_points(n)?;
    let summary = format!("so-points: {} classical points for n = {n}", points.len());
    Ok(Outcome::new(
        true,
        json!({ "n": n, "count": points.len(), "points": points }),
        summary,
    ))
}

fn so_check(a: &SoCheckArgs, cfg: &Config) -> Result<Outcome, Error> {
    let n = a.n;
    let twisted = Model::Twisted {
        samples: a.sampling.samples,
        seed: a.sampling.seed,
    };
    let lemma_so = lemma_so_bruteforce_with(n, cfg)?;
    let mut checks: CheckReport = lemma_sumzero_check_with(n, &Model::Abelian, cfg)?;
    checks.checks.insert(0, lemma_so.to_check());
    checks.pass &= lemma_so.holds;
    let mut action = None;
    if n % 2 == 1 && n >= 3 {
        checks = checks
            .merge(lemma_sumzero_check_with(n, &twisted, cfg)?)
            .merge(lemma_p_check_with(n, a.l, &Model::Abelian, cfg)?)
            .merge(lemma_p_check_with(n, a.l, &twisted, cfg)?);
        action = Some(classical_action_sweep_with(n, cfg)?);
    }
    let pass = checks.pass && action.as_ref().is_none_or(|r| r.pass);
    let summary = format!(
        "so-check n = {n}: {} {}",
        checks
            .checks
            .iter()
            .map(|c| format!("{}[{}]={}", c.relation, c.model, verdict(c.pass)))
            .collect::<Vec<_>>()
            .join(" "),
        verdict(pass)
    );
    Ok(Outcome::new(
        pass,
        json!({ "n": n, "lemma_so": lemma_so, "checks": checks, "action": action }),
        summary,
    ))
}

fn twist_check(a: &TwistArgs, cfg: &Config) -> Result<Outcome, Error> {
    let report = twisted_relation_check_with(a.m, a.sampling.samples, a.sampling.seed, cfg)?;
    let summary = format!(
        "twist-check m = {}: {} {}",
        a.m,
        report
            .checks
            .iter()
            .map(|c| format!("{}={}", c.relation, verdict(c.pass)))
            .collect::<Vec<_>>()
            .join(" "),
        verdict(report.pass)
    );
    Ok(Outcome::new(report.pass, &report, summary))
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}
