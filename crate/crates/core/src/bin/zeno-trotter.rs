fn main() {
    let code = zeno_trotter::cli::run(std::env::args_os(), &mut std::io::stdout().lock());
    std::process::exit(code);
}
