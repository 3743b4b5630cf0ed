//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

mod common;

use std::time::Instant;

use common::{max_abs_diff, naive_power, rotated_diagonal, taylor_exp_minus_i};
use rayon::prelude::*;
use zeno_trotter::evolutions::{
    block_diagonal_part, pulsed_error, theorem1_bound, BoundConstants, ControlledSystem,
    KickOperator, ScalingSchedule,
};
use zeno_trotter::experiments::{
    beta_curve, fit_all, fit_points, random_hermitian, random_hermitian_stream, resonance_demo,
    sweep, ExperimentConfig, Parity, PotentialSpec, Protocol,
};
use zeno_trotter::matcore::{expm_hermitian, unitary_power};
use zeno_trotter::qubit::qubit_diff;
use zeno_trotter::ComplexMatrix;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: String) -> Outcome {
    Outcome { passed, detail }
}

fn slope_config() -> ExperimentConfig {
    let mut config = ExperimentConfig::paper_fig4();
    config.seeds = vec![0, 1, 2];
    config.potential = PotentialSpec::Diagonal(vec![1.0, 1.0, 0.0, 0.0, 0.0]);
    config
}

fn zeno_slopes() -> Outcome {
    let config = slope_config();
    let series = sweep(&config, Protocol::Zeno).unwrap();
    let mut worst = 0.0_f64;
    let mut failures = 0;
    for row in fit_all(&series, config.fit_window).unwrap() {
        match row.beta() {
            Some(b) => {
                let dev = (b + row.alpha).abs();
                worst = worst.max(dev);
                failures += usize::from(dev > 0.15);
            }
            None => failures += 1,
        }
    }
    outcome(
        failures == 0,
        format!("{} fits, max |beta + alpha| = {worst:.3} (tolerance 0.15)", series.len()),
    )
}

fn trotter_slopes() -> Outcome {
    let config = slope_config();
    let series = sweep(&config, Protocol::Trotter).unwrap();
    let mut worst = 0.0_f64;
    let mut failures = 0;
    for row in fit_all(&series, config.fit_window).unwrap() {
        match row.beta() {
            Some(b) => {
                worst = worst.max((b + 1.0).abs());
                failures += usize::from((b + 1.0).abs() > 0.15);
            }
            None => failures += 1,
        }
    }
    outcome(
        failures == 0,
        format!("{} fits, max |beta + 1| = {worst:.3} (tolerance 0.15)", series.len()),
    )
}

fn beta_curve_plateau() -> Outcome {
    let config = ExperimentConfig::paper_fig6();
    let rows = beta_curve(&config).unwrap();
    let mut lines = Vec::new();
    let mut passed = true;
    for &alpha in config.alphas.iter().filter(|&&a| a >= 0.3 - 1e-12) {
        let betas: Vec<f64> = rows.iter().filter(|r| r.alpha == alpha).filter_map(|r| r.beta()).collect();
        let mean = betas.iter().sum::<f64>() / betas.len().max(1) as f64;
        let ok = betas.len() == config.seeds.len() && (-1.1..=-0.9).contains(&mean);
        passed &= ok;
        lines.push(mean);
    }
    let lo = lines.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = lines.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    outcome(
        passed,
        format!("{} alphas >= 0.3, seed-mean beta in [{lo:.3}, {hi:.3}] (required [-1.1, -0.9])", lines.len()),
    )
}

fn kicked_bound() -> Outcome {
    let grid: Vec<u64> = (2..=12).map(|k| 10f64.powf(k as f64 / 2.0).round() as u64).collect();
    let qubit_kick =
        KickOperator::from_unitary(&expm_hermitian(&ComplexMatrix::pauli_z(), std::f64::consts::FRAC_PI_2).unwrap()).unwrap();
    let mut cases: Vec<(KickOperator, ComplexMatrix)> = vec![
        (qubit_kick.clone(), ComplexMatrix::pauli_x()),
        (qubit_kick, &ComplexMatrix::pauli_x() + &ComplexMatrix::pauli_z().scale_real(0.5)),
    ];
    for seed in 0..5 {
        let v = random_hermitian_stream(seed, 1, 5);
        cases.push((KickOperator::from_generator(&v, 1.0).unwrap(), random_hermitian(seed, 5)));
    }
    let mut worst_ratio = 0.0_f64;
    for (kick, h) in &cases {
        let bc = BoundConstants::for_kick(kick, h, 1.0).unwrap();
        for &n in &grid {
            let eps = pulsed_error(kick, h, 1.0, n).unwrap();
            worst_ratio = worst_ratio.max(eps / theorem1_bound(&bc, n));
        }
    }
    outcome(
        worst_ratio <= 1.0,
        format!("{} instances x {} n in [10, 1e6], max eps/bound = {worst_ratio:.2e}", cases.len(), grid.len()),
    )
}

fn strong_coupling_rate() -> Outcome {
    let ks: Vec<u64> = (10..=20).map(|k| 1u64 << k).collect();
    let mut ratios = Vec::new();
    for seed in 0..3 {
        let h = random_hermitian(seed, 5);
        for v in [
            ComplexMatrix::from_real_diagonal(&[1.0, 1.0, 0.0, 0.0, 0.0]),
            random_hermitian_stream(seed, 1, 5),
        ] {
            let sys = ControlledSystem::new(&h, &v).unwrap();
            let points: Vec<(u64, f64)> = ks
                .iter()
                .map(|&k| (k, sys.strong_coupling_error(k as f64, 1.0).unwrap()))
                .collect();
            let fit = fit_points(&points, (ks[0], ks[ks.len() - 1])).unwrap();
            ratios.push(2f64.powf(fit.slope));
        }
    }
    let passed = ratios.iter().all(|r| (r - 0.5).abs() <= 0.1);
    let lo = ratios.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = ratios.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    outcome(
        passed,
        format!("{} instances, fitted eps(2K)/eps(K) over K = 2^10..2^20 in [{lo:.3}, {hi:.3}] (required 0.5 +- 0.1)", ratios.len()),
    )
}

fn qubit_asymptotics() -> Outcome {
    let mut passed = true;
    let mut parts = Vec::new();
    for alpha in [0.3, 0.5, 0.8] {
        let d = qubit_diff(1_000_000, alpha).unwrap();
        let phase = d.scaled_phase_gap() * 6.0;
        let axis = d.scaled_axis_gap()[1];
        let residual = d.leading_residual();
        passed &= (phase - 1.0).abs() <= 0.05 && (axis - 1.0).abs() <= 0.05 && residual <= 0.1;
        parts.push(format!("a={alpha}: 6*phase {phase:.4}, axis {axis:.4}, residual {residual:.1e}"));
    }
    outcome(passed, format!("n = 1e6; {}", parts.join("; ")))
}

fn resonance() -> Outcome {
    let n_list: Vec<u64> = (1..=1000).collect();
    let mut max_even = 0.0_f64;
    let mut min_odd = f64::INFINITY;
    for seed in 0..5 {
        for row in resonance_demo(&random_hermitian(seed, 4), &n_list).unwrap() {
            match row.parity {
                Parity::Even => max_even = max_even.max(row.deviation),
                Parity::Odd => min_odd = min_odd.min(row.deviation),
            }
        }
    }
    outcome(
        max_even <= 1e-10 && min_odd >= 0.05,
        format!("5 seeds, n <= 1000: max even {max_even:.2e} (<= 1e-10), min odd {min_odd:.3} (>= 0.05)"),
    )
}

fn oracle_agreement() -> Outcome {
    let mut worst_exp = 0.0_f64;
    for seed in 0..100u64 {
        let h = random_hermitian(1000 + seed, 5);
        let s = 0.25 + (seed % 8) as f64 * 0.5;
        let d = (&expm_hermitian(&h, s).unwrap() - &taylor_exp_minus_i(&h, s)).hs_norm();
        worst_exp = worst_exp.max(d);
    }
    let mut worst_pow = 0.0_f64;
    for seed in 0..4u64 {
        let u = expm_hermitian(&random_hermitian(seed, 5), 0.7).unwrap();
        for n in [1u64, 2, 5, 10, 33, 100, 128, 257, 500, 999, 1000] {
            let d = (&unitary_power(&u, n).unwrap() - &naive_power(&u, n)).hs_norm();
            worst_pow = worst_pow.max(d);
        }
    }
    outcome(
        worst_exp <= 1e-12 && worst_pow <= 1e-12,
        format!("HS distance, expm vs Taylor on 100 5x5 matrices: {worst_exp:.1e}; U^n vs naive (n <= 1000): {worst_pow:.1e}"),
    )
}

fn structural_invariants() -> Outcome {
    const CASES: u64 = 1000;
    let patterns: [&[f64]; 5] = [
        &[1.0, 0.0],
        &[1.0, 1.0, 0.0],
        &[2.0, -1.0, -1.0, 0.5],
        &[1.0, 1.0, 0.0, 0.0, 0.0],
        &[0.0, 1.0, 2.0, 3.0, 4.0],
    ];
    let worst = (0..CASES)
        .into_par_iter()
        .map(|case| {
            let diag = patterns[(case % 5) as usize];
            let dim = diag.len();
            let h = random_hermitian(case, dim);
            let repeat = if random_hermitian(case, dim) == h { 0.0 } else { 1.0 };
            let v = rotated_diagonal(case, diag);
            let sys = ControlledSystem::new(&h, &v).unwrap();
            let hz = sys.zeno_hamiltonian();
            let n = 10 + case * 97;
            let k = ScalingSchedule::power(0.1 + 0.8 * (case % 9) as f64 / 8.0).evaluate(n).unwrap();
            let commute = v.commutator(hz).hs_norm();
            let idem = max_abs_diff(&block_diagonal_part(hz, sys.decomposition().projectors()).unwrap(), hz);
            let axioms = sys.decomposition().axiom_defect();
            // roundoff in U^n grows linearly in n
            let unit = sys.trotter_step_power(k, 1.0, n).unwrap().unitarity_defect() / (1e-12 + 1e-13 * n as f64);
            let zeno = sys.zeno_error_at(k, 1.0, n).unwrap();
            let trotter = sys.trotter_error_at(k, 1.0, n).unwrap();
            let strong = sys.strong_coupling_error(k, 1.0).unwrap();
            let triangle = (zeno - trotter - strong).max(0.0);
            [commute, idem, axioms, unit, triangle, repeat]
        })
        .reduce(|| [0.0; 6], |a, b| std::array::from_fn(|i| a[i].max(b[i])));
    let names = ["[V,H_Z]", "H_Z idempotence", "projector axioms", "unitarity / (1e-12 + 1e-13 n)", "triangle", "random_hermitian nondeterminism"];
    let detail = names
        .iter()
        .zip(worst)
        .map(|(n, w)| format!("{n} {w:.1e}"))
        .collect::<Vec<_>>()
        .join(", ");
    outcome(worst[3] <= 1.0 && worst.iter().enumerate().all(|(i, &w)| i == 3 || w <= 1e-9), format!("{CASES} cases; max defects: {detail}"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("intermediate Zeno slopes beta = -alpha", zeno_slopes),
        ("generalized Trotter slopes beta = -1", trotter_slopes),
        ("beta(alpha) plateau at -1 for alpha >= 0.3", beta_curve_plateau),
        ("kicked-limit error bound", kicked_bound),
        ("strong-coupling 1/K rate", strong_coupling_rate),
        ("qubit closed-form asymptotics", qubit_asymptotics),
        ("K_n = n^2 resonance parity split", resonance),
        ("expm and power against independent oracles", oracle_agreement),
        ("structural invariants on random instances", structural_invariants),
    ];
    let start = Instant::now();
    let results: Vec<(Outcome, f64)> = criteria
        .par_iter()
        .map(|(_, f)| {
            let t = Instant::now();
            (f(), t.elapsed().as_secs_f64())
        })
        .collect();
    let mut failed = 0;
    for (i, ((name, _), (o, secs))) in criteria.iter().zip(&results).enumerate() {
        let tag = if o.passed { "PASS" } else { "FAIL" };
        failed += usize::from(!o.passed);
        println!("criterion {} {tag}: {name}: {} [{secs:.1}s]", i + 1, o.detail);
    }
    println!(
        "acceptance: {} of {} criteria passed in {:.1}s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
