use std::io::{self, Write};
use std::process::ExitCode;

use maclane::cli::{run, BUDGET_VAR, EXIT_BUDGET};

fn main() -> ExitCode {
    // searches are not cancellable mid-flight, so an interrupt ends the
    // process with the budget-exhausted code
    if let Err(e) = ctrlc::set_handler(|| {
        eprintln!("interrupted");
        std::process::exit(EXIT_BUDGET.into());
    }) {
        eprintln!("warning: cannot install interrupt handler: {e}");
    }
    let budget = std::env::var(BUDGET_VAR).ok();
    // collected in memory rather than holding the stdio locks, which the
    // interrupt handler needs
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::env::args_os(), budget.as_deref(), &mut out, &mut err);
    let _ = io::stdout().write_all(&out);
    let _ = io::stderr().write_all(&err);
    ExitCode::from(code)
}
