use clap::Parser;
use nullwave::config::Cli;

fn main() {
    // clap exits 2 on usage errors; 2 is reserved for numerical failures here.
    let cli = Cli::try_parse().unwrap_or_else(|e| {
        let code = if e.use_stderr() { 1 } else { 0 };
        let _ = e.print();
        std::process::exit(code);
    });
    if let Err(e) = nullwave::commands::run(cli) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
