fn main() {
    std::process::exit(altexp_cli::run(std::env::args_os()));
}
