use std::process::ExitCode;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let (code, report) = leavitt::cli::run(&argv);
    print!("{report}");
    ExitCode::from(code as u8)
}
