fn main() {
    std::process::exit(relgw::cli::run());
}
