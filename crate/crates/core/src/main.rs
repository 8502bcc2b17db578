fn main() -> std::process::ExitCode {
    pappus::cli::main_with(std::env::args_os())
}
