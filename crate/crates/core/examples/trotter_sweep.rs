//! Generalized Trotter error `|| (e^{-i(t/n)K_nV} e^{-i(t/n)H})^n - e^{-it(K_nV + H)} ||`
//! for `K_n = n^alpha` decays like `1/n` regardless of alpha.

use zeno_trotter::evolutions::{theorem4_bound, ControlledSystem, ScalingSchedule};
use zeno_trotter::experiments::{random_hermitian, random_hermitian_stream};

fn main() -> zeno_trotter::Result<()> {
    let h = random_hermitian(0, 5);
    let v = random_hermitian_stream(0, 1, 5);
    let sys = ControlledSystem::new(&h, &v)?;
    println!("{:>6} {:>9} {:>12} {:>14}", "alpha", "n", "eps_T", "leading bound");
    for alpha in [0.3, 0.5, 0.8, 1.0] {
        let schedule = ScalingSchedule::power(alpha);
        for n in [1_000u64, 10_000, 100_000, 1_000_000] {
            let k = schedule.evaluate(n)?;
            let eps = sys.trotter_error(&schedule, 1.0, n)?;
            println!("{alpha:>6} {n:>9} {eps:>12.4e} {:>14.4e}", theorem4_bound(v.hs_norm(), h.hs_norm(), k, n));
        }
    }
    Ok(())
}
