fn main() {
    std::process::exit(orbkin::run(std::env::args_os()));
}
