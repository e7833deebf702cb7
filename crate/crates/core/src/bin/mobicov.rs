fn main() -> std::process::ExitCode {
    mobicov::cli::main()
}
