fn main() {
    std::process::exit(connective::cli::main_entry());
}
