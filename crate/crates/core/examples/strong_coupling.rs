//! Strong continuous coupling: `e^{itKV} e^{-it(H + KV)} -> e^{-itH_Z}` like `1/K`.

use zeno_trotter::evolutions::ControlledSystem;
use zeno_trotter::experiments::{fit_points, random_hermitian, random_hermitian_stream};

fn main() -> zeno_trotter::Result<()> {
    let sys = ControlledSystem::new(&random_hermitian(1, 4), &random_hermitian_stream(1, 1, 4))?;
    let points: Vec<(u64, f64)> = (4..=20)
        .map(|k| {
            let coupling = 1u64 << k;
            sys.strong_coupling_error(coupling as f64, 1.0).map(|e| (coupling, e))
        })
        .collect::<Result<_, _>>()?;
    for (k, e) in &points {
        println!("K = {k:>8}  eps = {e:.4e}  K*eps = {:.4}", *k as f64 * e);
    }
    let fit = fit_points(&points, (1 << 10, 1 << 20))?;
    println!("fitted slope {:.3}, per-doubling ratio {:.3}", fit.slope, 2f64.powf(fit.slope));
    Ok(())
}
