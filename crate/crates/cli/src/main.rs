use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use qschubert::Shape;
use qschubert_cli::commands::{self, Output, EXIT_USAGE, MAX_TABLE_BASIS};
use qschubert_cli::{CliError, Method, Mode};

/// Exact Schubert calculus on the Grassmannian G(n-k, n) of (n-k)-dimensional
/// subspaces of C^n. Schubert classes are written s[a_1,...,a_{n-k}] with
/// k >= a_1 >= ... >= 0; s[a] is the special class.
#[derive(Parser, Debug)]
#[command(name = "qschubert", version)]
struct Cli {
    /// Ambient dimension n.
    #[arg(long, global = true)]
    n: Option<i64>,

    /// Codimension k; subspaces have dimension n-k and parts are at most k.
    #[arg(long, global = true)]
    k: Option<i64>,

    /// Product used by `*` and by `table`.
    #[arg(long, global = true, value_enum, default_value_t = Mode::Quantum)]
    mode: Mode,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate an expression such as "s[1,0]*s[2,1] + 2*q".
    Mult {
        /// Expression; read from stdin when absent.
        expr: Vec<String>,
    },
    /// Gromov-Witten number of a list of Schubert classes.
    Gw {
        /// Insertions like s[2,1], [2,1] or 2,1; a suffix ^m repeats one m times.
        insertions: Vec<String>,
        /// Degree d; defaults to the one forced by the dimension rule.
        #[arg(long)]
        degree: Option<u32>,
        #[arg(long, value_enum, default_value_t = Method::Pieri)]
        method: Method,
    },
    /// Table of all pairwise products of basis classes.
    Table {
        /// Refuse shapes with more basis classes than this.
        #[arg(long, default_value_t = MAX_TABLE_BASIS)]
        max_basis: u64,
    },
    /// Run the ring consistency checks.
    Verify,
    /// Evaluate the residue formula and show the raw complex sum.
    Vi {
        insertions: Vec<String>,
        #[arg(long)]
        degree: Option<u32>,
    },
}

fn read_args_or_stdin(args: &[String]) -> Result<String, CliError> {
    if !args.is_empty() {
        return Ok(args.join(" "));
    }
    let mut buf = String::new();
    std::io::stdin()
        .read_to_string(&mut buf)
        .map_err(|e| CliError::Usage(format!("reading stdin: {e}")))?;
    Ok(buf)
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    let (Some(n), Some(k)) = (cli.n, cli.k) else {
        return Err(CliError::Usage("both --n and --k are required".into()));
    };
    let shape = Shape::new(n, k)?;
    match &cli.command {
        Command::Mult { expr } => commands::mult(&shape, cli.mode, &read_args_or_stdin(expr)?),
        Command::Gw { insertions, degree, method } => {
            let text = read_args_or_stdin(insertions)?;
            let ins = commands::parse_insertions(&shape, &[text])?;
            commands::gw(&shape, &ins, *degree, *method)
        }
        Command::Table { max_basis } => commands::table(&shape, cli.mode, *max_basis),
        Command::Verify => commands::verify(&shape),
        Command::Vi { insertions, degree } => {
            let text = read_args_or_stdin(insertions)?;
            let ins = commands::parse_insertions(&shape, &[text])?;
            commands::vi(&shape, &ins, *degree)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.render(cli.json));
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
