fn main() {
    std::process::exit(gqchar::run(std::env::args_os()));
}
