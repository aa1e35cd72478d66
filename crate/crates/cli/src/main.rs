use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use comat_cli::{run, RunConfig};

fn main() -> ExitCode {
    let config = match RunConfig::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let outcome = run(&config);
    if outcome.code == 2 {
        eprint!("{}", outcome.output);
    } else {
        let mut out = std::io::stdout().lock();
        let _ = out.write_all(outcome.output.as_bytes());
    }
    ExitCode::from(outcome.code as u8)
}
