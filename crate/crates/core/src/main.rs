fn main() {
    std::process::exit(jacobi_mcg::cli::main_entry());
}
