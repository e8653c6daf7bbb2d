use std::process::ExitCode;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let (code, report) = flagbundles::cli::run(&argv);
    println!("{report}");
    ExitCode::from(code as u8)
}
