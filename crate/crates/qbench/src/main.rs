use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let config = match qbench::parse_args(std::env::args_os()) {
        Ok(config) => config,
        Err(qbench::ConfigError::Usage(e)) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
        Err(e) => {
            eprintln!("qbench: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match qbench::run_bench(&config) {
        Ok(report) => {
            let text = qbench::emit_report(&report, config.format);
            let mut out = std::io::stdout().lock();
            if out
                .write_all(text.as_bytes())
                .and_then(|()| out.flush())
                .is_err()
            {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("qbench: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
