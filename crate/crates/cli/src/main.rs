fn main() {
    std::process::exit(scatbench_cli::run(std::env::args_os()));
}
