fn main() {
    std::process::exit(weylcalc::cli::main());
}
