use std::process::exit;

use clap::Parser;

fn main() {
    if let Ok(threads) = std::env::var("PARGAP_THREADS") {
        if let Ok(n) = threads.trim().parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
    let cli = match pargap_cli::Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = i32::from(e.use_stderr());
            let _ = e.print();
            exit(code);
        }
    };
    let mut stdout = std::io::stdout().lock();
    if let Err(err) = pargap_cli::dispatch(&cli, &mut stdout) {
        eprintln!("error: {err}");
        exit(pargap_cli::exit_code(&err));
    }
}
