fn main() {
    let (code, out) = globcoal_cli::run(std::env::args());
    print!("{out}");
    std::process::exit(code);
}
