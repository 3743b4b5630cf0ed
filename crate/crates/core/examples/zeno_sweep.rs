//! Intermediate Zeno scaling `K_n = n^alpha`: the error decays like `n^{-alpha}`.
//! Runs the 5-level preset for one seed and prints the fitted exponents.

use zeno_trotter::experiments::{fit_all, sweep, ExperimentConfig, Protocol};

fn main() -> zeno_trotter::Result<()> {
    let mut config = ExperimentConfig::paper_fig4();
    config.seeds = vec![0];
    let series = sweep(&config, Protocol::Zeno)?;
    for s in &series {
        let tail: Vec<String> = s.points.iter().rev().step_by(25).map(|(n, e)| format!("eps({n}) = {e:.3e}")).collect();
        println!("alpha {}: {}", s.alpha, tail.join(", "));
    }
    for row in fit_all(&series, config.fit_window)? {
        println!("alpha {} -> beta {:.3}", row.alpha, row.beta().unwrap_or(f64::NAN));
    }
    Ok(())
}
