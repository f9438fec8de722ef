fn main() {
    std::process::exit(pareto_kit::cli::run());
}
