use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lambdd::{
    parse_expr, run_bench, translate_letter, BenchConfig, BinOp, Combinator, FuncHandle, Letter, Manager, ModelSpec,
    TruthTable, CSV_HEADER,
};
use serde_json::json;

#[derive(Parser)]
#[command(name = "lambdd", version, about = "Canonical decision diagrams with typed-variable edge labels")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compile a function and print its signature, statistics or DOT graph.
    Compile {
        #[arg(long, default_value = "o-nucx")]
        model: ModelSpec,
        #[command(flatten)]
        input: Input,
        /// Write Graphviz DOT to PATH (`-` for stdout).
        #[arg(long, value_name = "PATH")]
        dot: Option<String>,
        #[arg(long)]
        sig: bool,
        /// Print size statistics as key=value lines.
        #[arg(long)]
        stats: bool,
        /// Print signature and statistics as one JSON object.
        #[arg(long)]
        json: bool,
    },
    /// Answer a query about a function.
    Query {
        kind: QueryKind,
        #[arg(long, default_value = "o-nucx")]
        model: ModelSpec,
        #[command(flatten)]
        input: Input,
    },
    /// List every satisfying valuation, one per line, bits x0..x{n-1}.
    Allsat {
        #[arg(long, default_value = "o-nucx")]
        model: ModelSpec,
        #[command(flatten)]
        input: Input,
    },
    /// Decide whether two expressions denote the same function.
    Equiv {
        #[arg(long, default_value = "o-nucx")]
        model: ModelSpec,
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        second: Second,
    },
    /// Combine functions with a connective and print the result's signature.
    Apply {
        op: ApplyOp,
        #[arg(long, default_value = "o-nucx")]
        model: ModelSpec,
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        second: Second,
        /// Print the result as a hex truth table instead.
        #[arg(long)]
        hex: bool,
    },
    /// Print one size row per model as CSV.
    Compare {
        #[arg(long, value_delimiter = ',', required = true)]
        models: Vec<ModelSpec>,
        #[command(flatten)]
        input: Input,
    },
    /// Measure random functions under several models and check the size bounds.
    Bench {
        #[arg(long)]
        arity: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Defaults to every preset.
        #[arg(long, value_delimiter = ',')]
        models: Vec<ModelSpec>,
        /// Flush operation caches beyond this many entries.
        #[arg(long)]
        memo_limit: Option<usize>,
    },
    /// Map a letter between the Shannon and Davio columns.
    Translate {
        #[arg(long)]
        from: Combinator,
        #[arg(long)]
        to: Combinator,
        #[arg(long)]
        letter: Letter,
    },
}

#[derive(Args)]
struct Input {
    /// Boolean expression over x0..x{n-1}.
    #[arg(long, required_unless_present = "tt", conflicts_with = "tt")]
    expr: Option<String>,
    /// Truth table in hex, x0 most significant.
    #[arg(long)]
    tt: Option<String>,
    #[arg(long)]
    arity: usize,
}

#[derive(Args)]
struct Second {
    #[arg(long, conflicts_with = "tt2")]
    expr2: Option<String>,
    #[arg(long)]
    tt2: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum QueryKind {
    Sat,
    Taut,
    Anysat,
    Count,
}

#[derive(Clone, Copy, ValueEnum)]
enum ApplyOp {
    And,
    Or,
    Xor,
    Implies,
    Not,
}

enum Failure {
    Usage(String),
    Violation(String),
}

impl From<lambdd::Error> for Failure {
    fn from(e: lambdd::Error) -> Self {
        match e {
            lambdd::Error::Certification { .. } => Failure::Violation(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn table(expr: Option<&str>, tt: Option<&str>, arity: usize) -> Result<TruthTable, Failure> {
    match (expr, tt) {
        (Some(src), None) => Ok(parse_expr(src, arity)?.to_truth_table(arity)?),
        (None, Some(hex)) => Ok(TruthTable::from_hex(arity, hex)?),
        _ => Err(Failure::Usage("give exactly one of --expr or --tt".into())),
    }
}

fn build(mgr: &mut Manager, model: ModelSpec, input: &Input) -> Result<FuncHandle, Failure> {
    match &input.expr {
        Some(src) => Ok(mgr.build_expr(model, &parse_expr(src, input.arity)?, input.arity)?),
        None => Ok(mgr.compile(model, &table(None, input.tt.as_deref(), input.arity)?)?),
    }
}

fn build_second(mgr: &mut Manager, model: ModelSpec, second: &Second, arity: usize) -> Result<FuncHandle, Failure> {
    let f = table(second.expr2.as_deref(), second.tt2.as_deref(), arity)
        .map_err(|_| Failure::Usage("give exactly one of --expr2 or --tt2".into()))?;
    Ok(mgr.compile(model, &f)?)
}

fn bits(v: &[bool]) -> String {
    v.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    let mut mgr = Manager::new();
    match cli.command {
        Command::Compile {
            model,
            input,
            dot,
            sig,
            stats,
            json,
        } => {
            let h = build(&mut mgr, model, &input)?;
            let report = mgr.measure(&h)?;
            let signature = mgr.signature(&h);
            if sig || !(stats || json || dot.is_some()) {
                writeln!(out, "{signature}")?;
            }
            if stats {
                writeln!(out, "model={}", report.model)?;
                writeln!(out, "arity={}", report.arity)?;
                writeln!(out, "diamonds={}", report.diamonds)?;
                writeln!(out, "terminals={}", report.terminals)?;
                writeln!(out, "nodes={}", report.nodes())?;
                writeln!(out, "letters={}", report.letters)?;
                writeln!(out, "neg_letters={}", report.neg_letters)?;
                writeln!(out, "s_size={}", report.s_size)?;
            }
            if json {
                let value = json!({
                    "model": report.model,
                    "arity": report.arity,
                    "diamonds": report.diamonds,
                    "terminals": report.terminals,
                    "nodes": report.nodes(),
                    "letters": report.letters,
                    "neg_letters": report.neg_letters,
                    "s_size": report.s_size,
                    "signature": signature,
                });
                writeln!(out, "{value}")?;
            }
            match dot.as_deref() {
                Some("-") => write!(out, "{}", mgr.dot(&h))?,
                Some(path) => fs::write(path, mgr.dot(&h))?,
                None => {}
            }
        }
        Command::Query { kind, model, input } => {
            let h = build(&mut mgr, model, &input)?;
            match kind {
                QueryKind::Sat => writeln!(out, "{}", mgr.is_sat(&h)?)?,
                QueryKind::Taut => writeln!(out, "{}", mgr.is_taut(&h)?)?,
                QueryKind::Count => writeln!(out, "{}", mgr.count_sat(&h)?)?,
                QueryKind::Anysat => match mgr.any_sat(&h)? {
                    Some(v) => writeln!(out, "{}", bits(&v))?,
                    None => writeln!(out, "unsat")?,
                },
            }
        }
        Command::Allsat { model, input } => {
            let h = build(&mut mgr, model, &input)?;
            for v in mgr.all_sat(&h)? {
                writeln!(out, "{}", bits(&v))?;
            }
        }
        Command::Equiv { model, input, second } => {
            let a = build(&mut mgr, model, &input)?;
            let b = build_second(&mut mgr, model, &second, input.arity)?;
            writeln!(out, "{}", mgr.equiv(&a, &b)?)?;
        }
        Command::Apply {
            op,
            model,
            input,
            second,
            hex,
        } => {
            let a = build(&mut mgr, model, &input)?;
            let r = match op {
                ApplyOp::Not => mgr.negb(&a)?,
                _ => {
                    let b = build_second(&mut mgr, model, &second, input.arity)?;
                    let op = match op {
                        ApplyOp::And => BinOp::And,
                        ApplyOp::Or => BinOp::Or,
                        ApplyOp::Xor => BinOp::Xor,
                        _ => BinOp::Implies,
                    };
                    mgr.apply(op, &a, &b)?
                }
            };
            if hex {
                writeln!(out, "{}", mgr.to_truth_table(&r)?.to_hex())?;
            } else {
                writeln!(out, "{}", mgr.signature(&r))?;
            }
        }
        Command::Compare { models, input } => {
            let f = table(input.expr.as_deref(), input.tt.as_deref(), input.arity)?;
            writeln!(out, "{CSV_HEADER}")?;
            for m in models {
                let h = mgr.compile(m, &f)?;
                writeln!(out, "{}", mgr.measure(&h)?.csv_row(None))?;
            }
        }
        Command::Bench {
            arity,
            samples,
            seed,
            models,
            memo_limit,
        } => {
            let models = if models.is_empty() {
                ModelSpec::PRESETS.iter().map(|p| p.1).collect()
            } else {
                models
            };
            let outcome = run_bench(&BenchConfig {
                arity,
                samples,
                seed,
                models,
                memo_limit,
            })?;
            writeln!(out, "{CSV_HEADER}")?;
            for row in &outcome.rows {
                writeln!(out, "{row}")?;
            }
            for v in &outcome.violations {
                eprintln!("violation: {v}");
            }
            eprintln!("violations={}", outcome.violations.len());
            if !outcome.violations.is_empty() {
                return Err(Failure::Violation(format!(
                    "{} bound violations",
                    outcome.violations.len()
                )));
            }
        }
        Command::Translate { from, to, letter } => {
            let l = translate_letter(from, to, letter)?;
            writeln!(out, "{}", l.token().to_ascii_lowercase())?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Violation(msg)) => {
            eprintln!("invariant violation: {msg}");
            ExitCode::from(2)
        }
    }
}
