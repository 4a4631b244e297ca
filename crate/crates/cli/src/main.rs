use clap::{Parser, ValueEnum};
use pairdepth_cli::exec::{self, Options};
use pairdepth_cli::request::{self, Command, Request, Value};
use pairdepth_core::pair::PrimeScope;
use pairdepth_core::{Error, Field};
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

/// Depth of a module with respect to a pair of monomial ideals, and related
/// invariants.
///
/// Example: pairdepth 'Q[x,y]; depth I=(x,y) J=(x) M=(1)/(0)'
#[derive(Parser, Debug)]
#[command(name = "pairdepth", version)]
struct Args {
    /// The request; read from --file or stdin when absent.
    request: Option<String>,
    /// Read the request from a file.
    #[arg(long, conflicts_with = "request")]
    file: Option<PathBuf>,
    /// Print JSON instead of aligned text.
    #[arg(long)]
    json: bool,
    /// Override the coefficient field: Q or Fp for a prime p.
    #[arg(long, value_parser = parse_field)]
    field: Option<Field>,
    /// Worker threads (default: all cores).
    #[arg(long)]
    threads: Option<usize>,
    /// Seed for sampled verification.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Which primes the depth infimum ranges over.
    #[arg(long, value_enum, default_value_t = Scope::Local)]
    scope: Scope,
    /// Census bounds for verify, e.g. `n=2,exp=2`; overrides the request.
    #[arg(long)]
    census: Option<String>,
    /// Laws for verify: `all` or a comma-separated list of law ids.
    #[arg(long)]
    laws: Option<String>,
    /// Cap on law evaluations for verify.
    #[arg(long)]
    budget: Option<usize>,
    /// Also write the JSON document to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Scope {
    Local,
    Monomial,
}

fn parse_field(s: &str) -> Result<Field, String> {
    match s {
        "Q" | "QQ" => Ok(Field::Rationals),
        _ => {
            let p = s
                .strip_prefix('F')
                .and_then(|p| p.parse::<u64>().ok())
                .ok_or_else(|| format!("expected Q or Fp, got {s:?}"))?;
            Field::prime(p).map_err(|e| e.to_string())
        }
    }
}

fn run(args: Args) -> Result<ExitCode, (u8, String)> {
    let src = match (&args.request, &args.file) {
        (Some(r), _) => r.clone(),
        (None, Some(path)) => std::fs::read_to_string(path).map_err(|e| (2, format!("{}: {e}", path.display())))?,
        (None, None) => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| (2, e.to_string()))?;
            s
        }
    };
    let src = src.trim();
    let mut req = request::parse(src).map_err(|e| (2, render_parse(src, &e)))?;
    apply_verify_flags(&mut req, &args).map_err(|msg| (2, msg))?;
    if let (Some(field), Some(ring)) = (args.field, &req.ring) {
        req.ring = Some(ring.with_field(field));
    }
    if let Some(n) = args.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| (1, e.to_string()))?;
    }
    let opts = Options {
        scope: match args.scope {
            Scope::Local => PrimeScope::Local,
            Scope::Monomial => PrimeScope::Monomial,
        },
        seed: args.seed,
        budget: args.budget,
    };
    let outcome = exec::execute(&req, &opts).map_err(|e| match e {
        Error::Parse { .. } => (2, e.to_string()),
        _ => (1, e.to_string()),
    })?;
    let json = serde_json::to_string_pretty(&outcome.doc).expect("documents serialize");
    if let Some(path) = &args.out {
        std::fs::write(path, format!("{json}\n")).map_err(|e| (1, format!("{}: {e}", path.display())))?;
    }
    if args.json {
        println!("{json}");
    } else {
        print!("{}", exec::plain(&outcome.doc));
    }
    Ok(if outcome.failures { ExitCode::from(3) } else { ExitCode::SUCCESS })
}

/// `--census k=v,...` and `--laws` set the corresponding request keys.
fn apply_verify_flags(req: &mut Request, args: &Args) -> Result<(), String> {
    if args.census.is_none() && args.laws.is_none() {
        return Ok(());
    }
    if req.command != Command::Verify {
        return Err("--census and --laws only apply to verify".into());
    }
    for pair in args.census.iter().flat_map(|c| c.split(',')).filter(|p| !p.trim().is_empty()) {
        let (key, value) = pair
            .split_once('=')
            .ok_or_else(|| format!("--census expects key=value pairs, got {pair:?}"))?;
        let (key, value) = (key.trim(), value.trim());
        let parsed = match key {
            "modules" => Value::Words(vec![value.to_string()]),
            "n" | "exp" | "gens" | "samples" => {
                Value::Int(value.parse().map_err(|_| format!("--census {key}: not an integer: {value:?}"))?)
            }
            _ => return Err(format!("--census takes n, exp, gens, modules, samples; not {key:?}")),
        };
        req.set(key, parsed);
    }
    if let Some(laws) = &args.laws {
        req.set("laws", Value::Words(laws.split(',').map(|l| l.trim().to_string()).collect()));
    }
    Ok(())
}

/// The message plus a caret under the offending column.
fn render_parse(src: &str, e: &Error) -> String {
    match e {
        Error::Parse { pos, .. } if *pos <= src.len() && !src.contains('\n') => {
            let col = src[..*pos].chars().count();
            format!("{e}\n  {src}\n  {}^", " ".repeat(col))
        }
        _ => e.to_string(),
    }
}

fn main() -> ExitCode {
    match run(Args::parse()) {
        Ok(code) => code,
        Err((code, msg)) => {
            eprintln!("pairdepth: {msg}");
            ExitCode::from(code)
        }
    }
}
