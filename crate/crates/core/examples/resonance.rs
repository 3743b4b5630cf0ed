//! With `K_n = n^2` and an involutive control (`V^2 = 1`), the kick `e^{-inV}` is periodic
//! in `n` modulo 4 and the product formula converges only along even `n`.

use zeno_trotter::experiments::{random_hermitian, resonance_demo, Parity};

fn main() -> zeno_trotter::Result<()> {
    let h = random_hermitian(7, 4);
    let n_list: Vec<u64> = (1..=20).chain([99, 100, 999, 1000]).collect();
    for row in resonance_demo(&h, &n_list)? {
        let mark = if row.parity == Parity::Even { "" } else { "  <- no convergence" };
        println!("n = {:>4} ({})  deviation {:.3e}{mark}", row.n, row.parity.as_str(), row.deviation);
    }
    Ok(())
}
