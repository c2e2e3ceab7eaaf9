fn main() {
    std::process::exit(fracineq::harness::run(std::env::args_os()));
}
