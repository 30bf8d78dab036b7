fn main() {
    std::process::exit(toric_deform::cli::run(std::env::args_os()));
}
