fn main() {
    std::process::exit(oddzeta_cli::run(std::env::args_os()));
}
