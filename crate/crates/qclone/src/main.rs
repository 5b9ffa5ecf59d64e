fn main() {
    std::process::exit(qclone::cli::run());
}
