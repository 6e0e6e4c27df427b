use std::process::ExitCode;

use clap::Parser;

use ararank_cli::{run, Cli, EXIT_USAGE};

fn main() -> ExitCode {
    if let Some(n) = std::env::var("ARARANK_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("ararank: cannot size the thread pool: {e}");
        }
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if let Some(r) = &out.report {
                if cli.machine {
                    print!("{}", r.to_machine());
                } else {
                    print!("{}", r.render_text());
                }
            }
            if !cli.machine {
                print!("{}", out.text);
            }
            for n in &out.notes {
                eprintln!("{n}");
            }
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("ararank: {e}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
