fn main() -> std::process::ExitCode {
    cyclotomic_hecke::cli::main()
}
