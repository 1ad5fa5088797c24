fn main() {
    std::process::exit(cornell_eigen::cli::run(std::env::args_os()));
}
