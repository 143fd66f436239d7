fn main() { std::process::exit(fallcolor::cli::main()) }
