//! Fitted Trotter exponent as a function of alpha, averaged over ten random instances.

use zeno_trotter::experiments::{beta_curve, ExperimentConfig};

fn main() -> zeno_trotter::Result<()> {
    let config = ExperimentConfig::paper_fig6();
    let rows = beta_curve(&config)?;
    for &alpha in &config.alphas {
        let betas: Vec<f64> = rows.iter().filter(|r| r.alpha == alpha).filter_map(|r| r.beta()).collect();
        let mean = betas.iter().sum::<f64>() / betas.len() as f64;
        let spread = betas.iter().map(|b| (b - mean).powi(2)).sum::<f64>().sqrt() / betas.len() as f64;
        let bar = "#".repeat((mean.abs() * 40.0).round() as usize);
        println!("alpha {alpha:>4.2}  beta {mean:>7.3} +- {spread:.3}  {bar}");
    }
    Ok(())
}
