use std::process::ExitCode;

fn main() -> ExitCode {
    let result = sphere_gauge::cli::run(std::env::args_os().skip(1));
    if result.exit_code == 0 || result.json_mode {
        println!("{}", result.output());
    } else {
        eprintln!("{}", result.output());
    }
    ExitCode::from(result.exit_code as u8)
}
