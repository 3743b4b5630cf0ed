use zeno_trotter::qubit::qubit_diff;

/// Closed-form qubit step against its target: the rotation angles differ by
/// `~ K_n^2 / (6 n^2)`, the rotation axes by `~ 1/n`.
fn main() -> zeno_trotter::Result<()> {
    for alpha in [0.3, 0.5, 0.8] {
        println!("alpha = {alpha}");
        for n in [1_000u64, 10_000, 100_000, 1_000_000] {
            let d = qubit_diff(n, alpha)?;
            println!(
                "  n = {n:>8}  ||U-V|| = {:.3e}  6*(phi - n theta) n^2/K = {:.5}  n(u-v)_y = {:.5}",
                d.norm,
                6.0 * d.scaled_phase_gap(),
                d.scaled_axis_gap()[1]
            );
        }
    }
    Ok(())
}
