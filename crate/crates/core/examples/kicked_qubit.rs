//! Bang-bang kicks: a qubit with `H = X + Z/2` kicked by `U_k = e^{-i pi Z / 2}`.
//! The kicks average the transverse field away, so `U_k^{dagger n} (U_k e^{-itH/n})^n`
//! converges to `e^{-itH_Z}` with `H_Z = Z/2` at rate `1/n`, inside the explicit bound.

use std::f64::consts::FRAC_PI_2;

use zeno_trotter::evolutions::{pulsed_error, theorem1_bound, BoundConstants, KickOperator};
use zeno_trotter::matcore::expm_hermitian;
use zeno_trotter::ComplexMatrix;

fn main() -> zeno_trotter::Result<()> {
    let kick = KickOperator::from_unitary(&expm_hermitian(&ComplexMatrix::pauli_z(), FRAC_PI_2)?)?;
    let h = &ComplexMatrix::pauli_x() + &ComplexMatrix::pauli_z().scale_real(0.5);
    let bc = BoundConstants::for_kick(&kick, &h, 1.0)?;
    println!("kick phases {:?}, C = {:.3}, m = {}", kick.phases(), bc.c, bc.m);
    println!("{:>9} {:>12} {:>12} {:>10}", "n", "error", "bound", "n*error");
    for n in [10u64, 100, 1_000, 10_000, 100_000, 1_000_000] {
        let eps = pulsed_error(&kick, &h, 1.0, n)?;
        println!("{n:>9} {eps:>12.4e} {:>12.4e} {:>10.5}", theorem1_bound(&bc, n), n as f64 * eps);
    }
    Ok(())
}
