//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Tolerances are pinned here, independent of library defaults.

use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::Instant;

use foldcube::boolean_group::{fourier, inverse_fourier, Basis, FunctionVector, GroupWord};
use foldcube::fixtures;
use foldcube::graph::{automorphisms, find_disjoint_pair, Graph};
use foldcube::so_twist::{
    classical_action_sweep, lemma_p_check, lemma_so_bruteforce, lemma_sumzero_check,
    twisted_relation_check, Model,
};
use foldcube::spectral::verify_spectrum;
use foldcube::star_algebra::{build_witness, certify_witness, recovery_products, rep_free_product};

const SPECTRUM_TOL: f64 = 1e-9;
const FOURIER_TOL: f64 = 1e-12;
const ALGEBRA_TOL: f64 = 1e-10;
const CERTIFICATE_FLOOR: f64 = 0.01;
const SAMPLED_TOL: f64 = 1e-9;
const SEED: u64 = 42;
const SAMPLES: usize = 50;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn ensure(ok: bool, detail: String) -> Verdict {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn ac1_spectra() -> Verdict {
    let mut parts = Vec::new();
    for n in [3u32, 5, 7, 9, 11] {
        let r = verify_spectrum(n).map_err(|e| e.to_string())?;
        let closed_form = r.levels.iter().all(|l| {
            l.lambda == n as i64 - 2 * l.k as i64
                && l.multiplicity as u64 == binom(n as u64, l.k as u64)
        });
        let ok = closed_form && r.numeric_match && r.max_residual() <= SPECTRUM_TOL;
        if !ok {
            return Err(format!(
                "n={n}: closed_form={closed_form} numeric={} residual={:.1e}",
                r.numeric_match,
                r.max_residual()
            ));
        }
        parts.push(format!("n={n}:{}", r.levels.len()));
    }
    Ok(format!("levels {}", parts.join(" ")))
}

fn ac2_fourier() -> Verdict {
    let mut worst: f64 = 0.0;
    for width in 0..=12u32 {
        for g in GroupWord::all(width) {
            for basis in [Basis::Point, Basis::Group] {
                let e = FunctionVector::basis_vector(g, basis);
                let back = match basis {
                    Basis::Point => inverse_fourier(&fourier(&e).unwrap()).unwrap(),
                    Basis::Group => fourier(&inverse_fourier(&e).unwrap()).unwrap(),
                };
                worst = worst.max(back.max_abs_diff(&e));
            }
        }
    }
    ensure(
        worst <= FOURIER_TOL,
        format!("widths 0..=12, max error {worst:.1e}"),
    )
}

struct Witnessed {
    graph: Graph,
    sigma: foldcube::Permutation,
    tau: foldcube::Permutation,
    model: foldcube::star_algebra::FreeProductModel,
}

fn witness_for(graph: Graph) -> Result<Witnessed, String> {
    let (sigma, tau) = find_disjoint_pair(&graph)
        .map_err(|e| e.to_string())?
        .ok_or("no disjoint pair")?;
    let model = rep_free_product(sigma.order() as usize, tau.order() as usize, SEED)
        .map_err(|e| e.to_string())?;
    Ok(Witnessed {
        graph,
        sigma,
        tau,
        model,
    })
}

fn ac3_clebsch_witness() -> Verdict {
    let w = witness_for(fixtures::clebsch())?;
    let u = build_witness(&w.graph, &w.sigma, &w.tau, &w.model.p, &w.model.q)
        .map_err(|e| e.to_string())?;
    let r = certify_witness(&w.graph, &u).map_err(|e| e.to_string())?;
    let defects = [
        r.projection_defect,
        r.rowsum_defect,
        r.colsum_defect,
        r.commutation_defect,
    ];
    let worst = defects.iter().copied().fold(0.0, f64::max);
    ensure(
        worst <= ALGEBRA_TOL && r.noncomm_certificate > CERTIFICATE_FLOOR,
        format!(
            "sigma={} tau={} max defect {worst:.1e}, c={:.4} (seed {SEED})",
            w.sigma, w.tau, r.noncomm_certificate
        ),
    )
}

fn ac4_recovery() -> Verdict {
    let mut parts = Vec::new();
    for (name, graph) in [("clebsch", fixtures::clebsch()), ("k4", fixtures::k4())] {
        let w = witness_for(graph)?;
        let u = build_witness(&w.graph, &w.sigma, &w.tau, &w.model.p, &w.model.q)
            .map_err(|e| e.to_string())?;
        let r = recovery_products(&u, &w.sigma, &w.tau, &w.model.p, &w.model.q)
            .map_err(|e| e.to_string())?;
        let count = r.sigma_residuals.len() + r.tau_residuals.len();
        if r.max_residual > ALGEBRA_TOL || count != (w.sigma.order() + w.tau.order()) as usize {
            return Err(format!(
                "{name}: residual {:.1e} over {count} projections",
                r.max_residual
            ));
        }
        parts.push(format!(
            "{name}: {count} projections, residual {:.1e}",
            r.max_residual
        ));
    }
    Ok(parts.join("; "))
}

fn ac5_negative_control() -> Verdict {
    let c5 = fixtures::c5();
    let autos = automorphisms(&c5).map_err(|e| e.to_string())?.len();
    let pair = find_disjoint_pair(&c5).map_err(|e| e.to_string())?;
    ensure(
        autos == 10 && pair.is_none(),
        format!("C5: {autos} automorphisms, pair found: {}", pair.is_some()),
    )
}

fn ac6_lemma_so() -> Verdict {
    let r = lemma_so_bruteforce(3).map_err(|e| e.to_string())?;
    ensure(
        r.holds && r.matrices == 48 && r.determinant_positive == 24,
        format!(
            "{} matrices, {} with determinant 1, {} disagreements",
            r.matrices, r.determinant_positive, r.disagreements
        ),
    )
}

fn ac7_sumzero_and_p() -> Verdict {
    let twisted = Model::Twisted {
        samples: SAMPLES,
        seed: SEED,
    };
    let mut parts = Vec::new();
    for (label, model, tol) in [
        ("abelian", Model::Abelian, 0.0),
        ("twisted", twisted, SAMPLED_TOL),
    ] {
        let reports = [
            lemma_sumzero_check(3, &model).map_err(|e| e.to_string())?,
            lemma_p_check(3, 2, &model).map_err(|e| e.to_string())?,
            lemma_p_check(3, 3, &model).map_err(|e| e.to_string())?,
        ];
        for c in reports.iter().flat_map(|r| &r.checks) {
            if c.max_defect > tol {
                return Err(format!(
                    "{label} {}: defect {:.1e}",
                    c.relation, c.max_defect
                ));
            }
        }
        let worst = reports
            .iter()
            .flat_map(|r| &r.checks)
            .map(|c| c.max_defect)
            .fold(0.0, f64::max);
        parts.push(format!("{label} max {worst:.1e}"));
    }
    Ok(parts.join(", "))
}

fn ac8_twist() -> Verdict {
    let mut parts = Vec::new();
    for m in [1, 2] {
        let r = twisted_relation_check(m, SAMPLES, SEED).map_err(|e| e.to_string())?;
        let failing: Vec<&str> = r
            .checks
            .iter()
            .filter(|c| {
                let tol = if c.relation == "twist_signs" {
                    0.0
                } else {
                    SAMPLED_TOL
                };
                c.max_defect > tol
            })
            .map(|c| c.relation.as_str())
            .collect();
        if !failing.is_empty() {
            return Err(format!("m={m}: failing {}", failing.join(", ")));
        }
        let control = r
            .check("determinant_control")
            .map(|c| c.max_defect)
            .unwrap_or(f64::NAN);
        parts.push(format!(
            "m={m}: {} relations, control |det+1| {control:.1e}",
            r.checks.len()
        ));
    }
    Ok(parts.join("; "))
}

fn ac9_action() -> Verdict {
    let r3 = classical_action_sweep(3).map_err(|e| e.to_string())?;
    if !(r3.pass && r3.points == 24 && r3.automorphism_group_order == 24) {
        return Err(format!("n=3: {r3:?}"));
    }
    let start = Instant::now();
    let r5 = classical_action_sweep(5).map_err(|e| e.to_string())?;
    let secs = start.elapsed().as_secs_f64();
    ensure(
        r5.all_automorphisms && r5.all_preserve_eigenspaces && r5.bijective && secs < 60.0,
        format!(
            "n=3: 24 points onto |Aut(K4)|=24; n=5: {} points, {} distinct, |Aut|={}, eigenspace defect {:.1e}, {secs:.2}s",
            r5.points, r5.distinct_images, r5.automorphism_group_order, r5.max_eigenspace_defect
        ),
    )
}

fn ac10_determinism() -> Verdict {
    let fixture = |f: &str| {
        PathBuf::from(env!("CARGO_MANIFEST_DIR"))
            .join("fixtures")
            .join(f)
            .to_string_lossy()
            .into_owned()
    };
    let clebsch = fixture("clebsch.json");
    let c5 = fixture("c5.json");
    let cases: Vec<Vec<&str>> = vec![
        vec!["spectra", "--n", "9"],
        vec!["spectra", "--graph", &c5],
        vec!["autos", "--graph", &clebsch],
        vec!["disjoint", "--graph", &clebsch],
        vec!["disjoint", "--graph", &c5],
        vec!["witness", "--graph", &clebsch, "--seed", "42"],
        vec!["so-points", "--n", "5"],
        vec!["so-check", "--n", "5", "--seed", "42"],
        vec!["twist-check", "--m", "1", "--samples", "50", "--seed", "42"],
        vec!["twist-check", "--m", "2", "--samples", "50", "--seed", "7"],
    ];
    for args in &cases {
        let run = || {
            Command::new(env!("CARGO_BIN_EXE_foldcube"))
                .args(args)
                .env_remove("QSYM_SEED")
                .output()
                .map_err(|e| e.to_string())
        };
        let (a, b) = (run()?, run()?);
        if a.stdout != b.stdout || a.status.code() != b.status.code() || a.stdout.is_empty() {
            return Err(format!("`{}` differs between runs", args.join(" ")));
        }
    }
    Ok(format!(
        "{} commands byte-identical across two runs",
        cases.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("AC1 spectra", ac1_spectra),
        ("AC2 fourier round-trip", ac2_fourier),
        ("AC3 clebsch witness", ac3_clebsch_witness),
        ("AC4 recovery products", ac4_recovery),
        ("AC5 negative control", ac5_negative_control),
        ("AC6 determinant equivalence", ac6_lemma_so),
        ("AC7 sum-zero and tau-product", ac7_sumzero_and_p),
        ("AC8 twist certification", ac8_twist),
        ("AC9 classical-point action", ac9_action),
        ("AC10 determinism", ac10_determinism),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let start = Instant::now();
        let verdict = f();
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("PASS {name}: {detail} [{secs:.2}s]"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name}: {detail} [{secs:.2}s]");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
