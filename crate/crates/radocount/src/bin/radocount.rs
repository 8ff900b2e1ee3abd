use std::process::exit;

fn main() {
    exit(radocount::cli::run(std::env::args()));
}
