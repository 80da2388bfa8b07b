use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use koszul_hecke::dg::Window;
use koszul_hecke::expr::eval_str;
use koszul_hecke::hecke::HeckeAlgebra;
use koszul_hecke::suites::{run_suite, SuiteParams};

#[derive(Parser)]
#[command(version, about = "Affine Hecke algebra and linear Koszul duality checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite: hecke, koszul, convolution or all.
    Verify(VerifyArgs),
    /// Hecke algebra arithmetic.
    Hecke {
        #[command(subcommand)]
        command: HeckeCommand,
    },
}

#[derive(Subcommand)]
enum HeckeCommand {
    /// Evaluate an expression and print its Bernstein normal form.
    Eval {
        expr: String,
        #[arg(long = "type")]
        label: String,
    },
}

#[derive(Args)]
struct VerifyArgs {
    suite: String,
    /// Root datum labels, comma separated.
    #[arg(long = "type", value_delimiter = ',')]
    types: Vec<String>,
    #[arg(long, default_value_t = 3)]
    weight_bound: i64,
    #[arg(long)]
    dim: Option<usize>,
    #[arg(long)]
    fdim: Option<usize>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Internal-degree window `a,b`.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_window)]
    window: Option<Window>,
    /// Write the JSON report here.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Generator images to check instead of the built-in suite.
    #[arg(long)]
    spec: Option<String>,
}

fn parse_window(s: &str) -> Result<Window, String> {
    let (a, b) = s.split_once(',').ok_or("expected a,b")?;
    let a: i64 = a.trim().parse().map_err(|e| format!("{a}: {e}"))?;
    let b: i64 = b.trim().parse().map_err(|e| format!("{b}: {e}"))?;
    if a > b {
        return Err(format!("empty window {a},{b}"));
    }
    Ok(Window::bounded(a, b))
}

fn verify(a: VerifyArgs) -> ExitCode {
    let mut p = SuiteParams { weight_bound: a.weight_bound, dim: a.dim, fdim: a.fdim, trials: a.trials, spec: a.spec, ..Default::default() };
    if !a.types.is_empty() {
        p.types = a.types;
    }
    if let Some(w) = a.window {
        p.window = w;
    }
    let report = match run_suite(&a.suite, &p, a.seed) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    print!("{}", report.summary());
    if let Some(path) = a.json {
        if let Err(e) = std::fs::write(&path, report.to_json() + "\n") {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn eval(expr: &str, label: &str) -> ExitCode {
    let h = match HeckeAlgebra::from_label(label) {
        Ok(h) => h,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match eval_str(expr, &h) {
        Ok(x) => {
            println!("{x}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            if let Some(o) = e.offset() {
                eprintln!("  {expr}\n  {}^", " ".repeat(expr[..o.min(expr.len())].chars().count()));
            }
            ExitCode::from(2)
        }
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Verify(a) => verify(a),
        Command::Hecke { command: HeckeCommand::Eval { expr, label } } => eval(&expr, &label),
    }
}
