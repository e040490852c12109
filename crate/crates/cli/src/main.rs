fn main() {
    std::process::exit(bsv_cli::run(std::env::args_os()));
}
