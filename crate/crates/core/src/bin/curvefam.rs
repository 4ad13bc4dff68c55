use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand};
use curvefam::cli::{self, AnalysisRequest, Mode, Options};
use curvefam::Rational;

#[derive(Parser)]
#[command(name = "curvefam", version, about = "Topology types of families of real plane algebraic curves")]
struct Args {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decompose the parameter plane of a family given in a file.
    Analyze {
        /// Curve variables, in the order x,y.
        #[arg(long, default_value = "x,y", value_delimiter = ',')]
        vars: Vec<String>,
        /// Parameter names, in the order t,s.
        #[arg(long, default_value = "t,s", value_delimiter = ',')]
        params: Vec<String>,
        /// Analyze a one-parameter family in this parameter instead.
        #[arg(long)]
        one_param: Option<String>,
        /// Input file with one polynomial expression.
        #[arg(short, long)]
        input: PathBuf,
        /// JSON output file; standard output when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Label cells with the topology type at their sample.
        #[arg(long)]
        topology: bool,
        /// Also draw the decomposition into this SVG file.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Drawing window tmin,tmax,smin,smax.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        window: Option<Vec<Rational>>,
        /// Width below which isolating intervals are refined in the output.
        #[arg(long, default_value = "1/1024")]
        refine_width: Rational,
        /// Print diagnostics to standard error.
        #[arg(short, long)]
        verbose: bool,
    },
}

fn main() -> ExitCode {
    let Cmd::Analyze {
        vars,
        params,
        one_param,
        input,
        output,
        topology,
        svg,
        window,
        refine_width,
        verbose,
    } = Args::parse().cmd;
    if vars.len() != 2 {
        return usage_error("--vars takes exactly two names, as in x,y");
    }
    if window.as_ref().is_some_and(|w| w.len() != 4) {
        return usage_error("--window takes four numbers tmin,tmax,smin,smax");
    }
    let input_text = match std::fs::read_to_string(&input) {
        Ok(t) => t,
        Err(e) => {
            let err = curvefam::Error::Io(format!("{}: {e}", input.display()));
            eprintln!("{}", cli::error_json(&err));
            return ExitCode::from(cli::exit_code(&err) as u8);
        }
    };
    let mut options = Options {
        topology,
        json: output,
        svg,
        refine_width,
        verbose,
        ..Options::default()
    };
    if let Some(w) = window {
        options.window = [w[0].clone(), w[1].clone(), w[2].clone(), w[3].clone()];
    }
    let (mode, param_vars) = match one_param {
        Some(p) => (Mode::OneParam, vec![p]),
        None => (Mode::TwoParam, params),
    };
    let req = AnalysisRequest {
        mode,
        curve_vars: [vars[0].clone(), vars[1].clone()],
        param_vars,
        input_text,
        options,
    };
    ExitCode::from(cli::run(&req) as u8)
}

fn usage_error(message: &str) -> ExitCode {
    Args::command().error(ErrorKind::WrongNumberOfValues, message).exit()
}
