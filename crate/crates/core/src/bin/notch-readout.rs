fn main() {
    std::process::exit(notch_readout::cli::main_with_args(std::env::args_os()));
}
