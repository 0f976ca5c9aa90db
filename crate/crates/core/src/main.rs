fn main() {
    std::process::exit(sensor_mcda::cli::run(std::env::args_os()));
}
