use std::process::exit;

fn main() {
    exit(strange_duality::cli::run(std::env::args()));
}
