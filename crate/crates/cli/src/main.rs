fn main() {
    std::process::exit(pillai_verify::run(std::env::args_os()));
}
