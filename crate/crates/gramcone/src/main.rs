fn main() -> std::process::ExitCode {
    gramcone::cli::run()
}
