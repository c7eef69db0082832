fn main() {
    std::process::exit(twostab_cli::run(std::env::args_os()));
}
