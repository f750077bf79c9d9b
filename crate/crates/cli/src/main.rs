fn main() {
    std::process::exit(punctual::run(std::env::args_os()));
}
