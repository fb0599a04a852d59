//! End-to-end acceptance checks for the capacity toolkit.
//!
//! Each test covers one shipping criterion and prints a single verdict
//! line (`acceptance NN <name>: PASS|FAIL (details)`); run with
//! `cargo test --test acceptance -- --nocapture` to see the lines as they
//! pass. Timed criteria hold a global lock so wall-clock budgets are not
//! disturbed by sibling tests.

use std::collections::BTreeMap;
use std::sync::Mutex;
use std::time::Instant;

use caplab::capacity::{capacity_sweep, compute_ce, compute_one_shot_c1, OptimizerConfig};
use caplab::channels::{
    amplitude_damping, dephasing, depolarizing, erasure, family_parameter, identity_channel,
    standard_channel, tensor, QuantumChannel,
};
use caplab::entropy::{mutual_information, von_neumann_entropy};
use caplab::qmat::{purify, ComplexMatrix, DensityMatrix};
use caplab::verify::{random_channel, random_density, run_suite, SuiteId};
use num_complex::Complex64;

static GATE: Mutex<()> = Mutex::new(());

fn gate() -> std::sync::MutexGuard<'static, ()> {
    GATE.lock().unwrap_or_else(|poisoned| poisoned.into_inner())
}

fn verdict(num: u32, name: &str, ok: bool, details: &str) {
    let word = if ok { "PASS" } else { "FAIL" };
    println!("acceptance {num:02} {name}: {word} ({details})");
    assert!(ok, "acceptance {num:02} {name}: {details}");
}

#[test]
fn criterion_01_identity_qubit_ce() {
    let _g = gate();
    let started = Instant::now();
    let ch = identity_channel(2).unwrap();
    let value = compute_ce(&ch, &OptimizerConfig::default()).value_bits;
    let elapsed = started.elapsed().as_secs_f64();
    let err = (value - 2.0).abs();
    verdict(
        1,
        "identity-qubit-ce",
        err <= 1e-6 && elapsed < 5.0,
        &format!("C_E = {value:.6} bits, err {err:.2e}, {elapsed:.2} s"),
    );
}

#[test]
fn criterion_02_fully_depolarizing_ce() {
    let _g = gate();
    let ch = depolarizing(1.0, 2).unwrap();
    let value = compute_ce(&ch, &OptimizerConfig::default()).value_bits;
    verdict(
        2,
        "fully-depolarizing-ce",
        value.abs() <= 1e-6,
        &format!("C_E = {value:.6} bits"),
    );
}

fn bloch_state(r: f64, theta: f64) -> DensityMatrix {
    // (I + r sin(theta) X + r cos(theta) Z)/2; the azimuthal angle is
    // irrelevant for a unitarily covariant family.
    let x = 0.5 * r * theta.sin();
    let z = 0.5 * r * theta.cos();
    let m = ComplexMatrix::from_row_slice(
        2,
        2,
        &[
            Complex64::new(0.5 + z, 0.0),
            Complex64::new(x, 0.0),
            Complex64::new(x, 0.0),
            Complex64::new(0.5 - z, 0.0),
        ],
    );
    DensityMatrix::new(m).unwrap()
}

/// Grid maximum of the mutual information over the Bloch ball, step 0.02
/// in the radius and in the polar angle (as a fraction of pi). This is an
/// exhaustive-search oracle, independent of the ascent optimizer.
fn bloch_grid_max_mi(ch: &QuantumChannel) -> f64 {
    let mut best = f64::NEG_INFINITY;
    for i in 0..=50 {
        let r = 0.02 * i as f64;
        for j in 0..=50 {
            let theta = std::f64::consts::PI * 0.02 * j as f64;
            let mi = mutual_information(ch, &bloch_state(r, theta))
                .unwrap()
                .bits();
            best = best.max(mi);
        }
    }
    best
}

#[test]
fn criterion_03_depolarizing_sweep_matches_grid_oracle() {
    let _g = gate();
    let started = Instant::now();
    let grid: Vec<f64> = (0..21).map(|i| i as f64 / 20.0).collect();
    let points = capacity_sweep("depolarizing", &grid, &OptimizerConfig::default()).unwrap();
    let mut worst_oracle_dev: f64 = 0.0;
    let mut worst_step: f64 = f64::NEG_INFINITY;
    for (k, point) in points.iter().enumerate() {
        let oracle = bloch_grid_max_mi(&depolarizing(point.param, 2).unwrap());
        worst_oracle_dev = worst_oracle_dev.max((point.ce_bits - oracle).abs());
        if k > 0 {
            worst_step = worst_step.max(point.ce_bits - points[k - 1].ce_bits);
        }
    }
    let elapsed = started.elapsed().as_secs_f64();
    verdict(
        3,
        "depolarizing-sweep-oracle",
        worst_oracle_dev <= 1e-4 && worst_step <= 1e-6 && elapsed < 120.0,
        &format!(
            "21 points, worst oracle dev {worst_oracle_dev:.2e} bits, \
             worst upward step {worst_step:.2e} bits, {elapsed:.1} s"
        ),
    );
}

#[test]
fn criterion_04_erasure_fixed_points() {
    let _g = gate();
    let cfg = OptimizerConfig::default();
    let mut worst: f64 = 0.0;
    for (p, expected) in [(0.0, 2.0), (0.5, 1.0), (1.0, 0.0)] {
        let value = compute_ce(&erasure(p, 2).unwrap(), &cfg).value_bits;
        worst = worst.max((value - expected).abs());
    }
    verdict(
        4,
        "erasure-fixed-points",
        worst <= 1e-3,
        &format!("C_E at p in {{0, 0.5, 1}}, worst err {worst:.2e} bits"),
    );
}

#[test]
fn criterion_05_additivity_over_catalog_pairs() {
    let _g = gate();
    let started = Instant::now();
    let catalog = [
        dephasing(0.3).unwrap(),
        depolarizing(0.25, 2).unwrap(),
        amplitude_damping(0.4).unwrap(),
    ];
    let cfg = OptimizerConfig::default();
    let singles: Vec<f64> = catalog
        .iter()
        .map(|ch| compute_ce(ch, &cfg).value_bits)
        .collect();
    let mut worst: f64 = 0.0;
    for i in 0..catalog.len() {
        for j in 0..catalog.len() {
            if i == j {
                continue;
            }
            let joint = tensor(&catalog[i], &catalog[j]).unwrap();
            let ce_joint = compute_ce(&joint, &cfg).value_bits;
            worst = worst.max((ce_joint - singles[i] - singles[j]).abs());
        }
    }
    let elapsed = started.elapsed().as_secs_f64();
    verdict(
        5,
        "additivity-catalog-pairs",
        worst <= 1e-3 && elapsed < 600.0,
        &format!("6 ordered pairs, worst additivity gap {worst:.2e} bits, {elapsed:.1} s"),
    );
}

#[test]
fn criterion_06_data_processing_suite() {
    let _g = gate();
    let report = run_suite(SuiteId::DataProcessing, 100, 42);
    verdict(
        6,
        "data-processing-suite",
        report.failures == 0,
        &format!(
            "100 trials, {} failures, worst slack {:.6} bits",
            report.failures, report.worst_slack_bits
        ),
    );
}

#[test]
fn criterion_07_convexity_suite() {
    let _g = gate();
    let report = run_suite(SuiteId::Convexity, 100, 42);
    verdict(
        7,
        "convexity-suite",
        report.failures == 0,
        &format!(
            "100 trials, {} failures, worst slack {:.6} bits",
            report.failures, report.worst_slack_bits
        ),
    );
}

#[test]
fn criterion_08_entropy_inequality_suites() {
    let _g = gate();
    let ssa = run_suite(SuiteId::StrongSubadditivity, 1000, 42);
    let jsa = run_suite(SuiteId::JointSubadditivity, 500, 42);
    verdict(
        8,
        "ssa-and-joint-subadditivity",
        ssa.failures == 0 && jsa.failures == 0,
        &format!(
            "ssa 1000 trials worst {:.6} bits, jsa 500 trials worst {:.6} bits",
            ssa.worst_slack_bits, jsa.worst_slack_bits
        ),
    );
}

#[test]
fn criterion_09_entropy_exchange_route_equivalence() {
    let _g = gate();
    let shapes = [(2, 2, 2), (2, 3, 2), (3, 2, 3), (3, 3, 2)];
    let mut worst: f64 = 0.0;
    for t in 0..200u64 {
        let (dim_in, dim_out, rank) = shapes[(t % 4) as usize];
        let ch = random_channel(dim_in, dim_out, rank, 1000 + t);
        let rho = random_density(dim_in, 2000 + t);
        let via_extension = von_neumann_entropy(&ch.apply_extended(&purify(&rho)).unwrap()).bits();
        let via_complement = von_neumann_entropy(&ch.complementary().apply(&rho).unwrap()).bits();
        worst = worst.max((via_extension - via_complement).abs());
    }
    verdict(
        9,
        "entropy-exchange-routes",
        worst <= 1e-8,
        &format!("200 pairs, worst route gap {worst:.2e} bits"),
    );
}

#[test]
fn criterion_10_mutual_information_relative_entropy_form() {
    let _g = gate();
    let report = run_suite(SuiteId::Eq3, 200, 42);
    verdict(
        10,
        "mutual-information-relative-entropy",
        report.failures == 0 && report.worst_slack_bits >= -1e-8,
        &format!(
            "200 pairs, {} failures, worst route gap {:.2e} bits",
            report.failures, -report.worst_slack_bits
        ),
    );
}

#[test]
fn criterion_11_exchange_bound_and_concavity_suites() {
    let _g = gate();
    let exchange = run_suite(SuiteId::ExchangeBound, 200, 42);
    let concavity = run_suite(SuiteId::Concavity, 200, 42);
    verdict(
        11,
        "exchange-bound-and-concavity",
        exchange.failures == 0 && concavity.failures == 0,
        &format!(
            "exchange-bound worst {:.6} bits, concavity worst {:.6} bits",
            exchange.worst_slack_bits, concavity.worst_slack_bits
        ),
    );
}

#[test]
fn criterion_12_decomposition_invariance_suite() {
    let _g = gate();
    let report = run_suite(SuiteId::Decomposition, 100, 42);
    verdict(
        12,
        "decomposition-invariance",
        report.failures == 0,
        &format!(
            "100 trials, {} failures, worst deviation {:.2e} bits",
            report.failures, -report.worst_slack_bits
        ),
    );
}

#[test]
fn criterion_13_bound_chain_on_catalog() {
    let _g = gate();
    let families = [
        "identity",
        "depolarizing",
        "dephasing",
        "amplitude_damping",
        "erasure",
    ];
    let settings = [0.1, 0.5, 0.9];
    let cfg = OptimizerConfig::default();
    let mut ok = true;
    let mut worst_slack = f64::INFINITY;
    for family in families {
        for setting in settings {
            let mut params = BTreeMap::new();
            if let Some(key) = family_parameter(family).unwrap() {
                params.insert(key.to_string(), setting);
            }
            let ch = standard_channel(family, &params).unwrap();
            let ce = compute_ce(&ch, &cfg).value_bits;
            let c1 = compute_one_shot_c1(&ch, &cfg).value_bits;
            let lower = ce - (c1 - 1e-3);
            let upper = 1.0 + c1 + 1e-3 - ce;
            ok &= lower >= 0.0 && upper >= 0.0;
            worst_slack = worst_slack.min(lower.min(upper));
        }
    }
    verdict(
        13,
        "bound-chain-catalog",
        ok,
        &format!("15 channel settings, tightest chain slack {worst_slack:.2e} bits"),
    );
}

#[test]
fn criterion_14_verify_reports_are_byte_identical() {
    let _g = gate();
    let exe = env!("CARGO_BIN_EXE_caplab");
    let dir = tempfile::tempdir().unwrap();
    let mut bodies = Vec::new();
    for name in ["first.json", "second.json"] {
        let path = dir.path().join(name);
        let output = std::process::Command::new(exe)
            .args([
                "verify", "--suite", "all", "--trials", "50", "--seed", "42", "--report",
            ])
            .arg(&path)
            .output()
            .expect("verify run");
        assert!(
            output.status.success(),
            "verify exited with {:?}: {}",
            output.status.code(),
            String::from_utf8_lossy(&output.stderr)
        );
        bodies.push(std::fs::read(&path).unwrap());
    }
    verdict(
        14,
        "verify-report-determinism",
        !bodies[0].is_empty() && bodies[0] == bodies[1],
        &format!("two runs, {} bytes each, identical", bodies[0].len()),
    );
}
