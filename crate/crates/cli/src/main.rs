mod algebra;
mod args;
mod combinatorics;
mod report;
mod suite;

use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use args::{Cli, Command};
use report::{emit, read_input, CliResult};

fn run(cli: &Cli) -> CliResult<i32> {
    let started = Instant::now();
    let g = &cli.global;
    let out = match &cli.command {
        Command::Snf => algebra::snf(&read_input(g)?)?,
        Command::Solve => algebra::solve_cmd(&read_input(g)?)?,
        Command::NormalForm => algebra::normal_form(&read_input(g)?)?,
        Command::Dk(cmd) => algebra::dk(cmd, g, &read_input(g)?)?,
        Command::K0(cmd) => algebra::k0(cmd, &read_input(g)?)?,
        Command::Twocat(cmd) => combinatorics::twocat(cmd, g, || read_input(g))?,
        Command::Groth(cmd) => combinatorics::groth(cmd, g, &read_input(g)?)?,
        Command::Suite(args) => suite::suite(args, g)?,
    };
    emit(g, out, started)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("dkk: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
