//! `tsaudit` — audit Theorem 1 of Turyn and Storer's "On Binary Sequences"
//! on concrete sequences, search for counterexamples to its claim (iv),
//! and exhaustively enumerate Barker sequences.
//!
//! Exit codes are a function of the report status:
//!
//! * `verify`:  0 all claims hold, 1 falsified or premise failed, 2 usage;
//! * `falsify`: 0 counterexamples emitted, 1 none found or record
//!   mismatch, 2 usage;
//! * `barker`:  0 search ran, 2 usage/capacity;
//! * `rle`:     0 converted, 2 parse error.

mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use report::{RunReport, Status};
use tsaudit_core::{
    barker_search_threaded, catalog, derived_sequence, family_counterexample,
    odd_nonexistence_scan, parse_with_default_sign, search, tabular_export, theorem1_audit,
    verify_record, BarkerSearchResult, BinarySequence, CounterexampleRecord, Error, SearchConfig,
    Sign,
};

const THREADS_ENV: &str = "TSAUDIT_THREADS";

#[derive(Parser)]
#[command(name = "tsaudit", version, about = "Binary sequence toolkit: Theorem 1 audits, counterexample search, Barker search")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Audit the Theorem 1 premise and claims (i)-(iv) on one sequence
    Verify(VerifyArgs),
    /// Emit counterexamples to Theorem 1 (iv): exhaustive search, the
    /// run-length family, or the catalog of known records
    Falsify(FalsifyArgs),
    /// Exhaustive Barker sequence search
    Barker(BarkerArgs),
    /// Convert between sequence literals and run-length text
    Rle(RleArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Run-length text, e.g. +3,3,6,3,2,2 (sign defaults to +)
    #[arg(long, conflicts_with = "seq")]
    rle: Option<String>,
    /// Sequence literal, e.g. +++---++
    #[arg(long)]
    seq: Option<String>,
    /// Equation bound t of the premise
    #[arg(long)]
    t: usize,
    /// Pad the sequence with +1 up to this length before auditing
    #[arg(long)]
    pad: Option<usize>,
    /// Emit the structured JSON report
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct FalsifyArgs {
    /// Leading run length p (>= 3)
    #[arg(long)]
    p: Option<usize>,
    /// Equation bound t
    #[arg(long)]
    t: Option<usize>,
    /// Emit the four known counterexample records instead of searching
    #[arg(long, conflicts_with_all = ["family", "t"])]
    catalog: bool,
    /// Emit the (p,p,2p,p,p-1,p-1) family member for --p
    #[arg(long, conflicts_with = "t")]
    family: bool,
    /// Stop after this many search results
    #[arg(long)]
    max_results: Option<usize>,
    /// Worker threads (default: TSAUDIT_THREADS or all cores)
    #[arg(long)]
    threads: Option<usize>,
    /// Write records to a file in the tabular format
    #[arg(long)]
    out: Option<PathBuf>,
    /// Emit the structured JSON report
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BarkerArgs {
    /// Search one length exhaustively
    #[arg(long, conflicts_with = "odd_scan")]
    n: Option<usize>,
    /// Search every odd length 13 < n <= this bound and tabulate counts
    #[arg(long)]
    odd_scan: Option<usize>,
    /// Worker threads (default: TSAUDIT_THREADS or all cores)
    #[arg(long)]
    threads: Option<usize>,
    /// Write sequences (--n) or the count table (--odd-scan) to a file
    #[arg(long)]
    out: Option<PathBuf>,
    /// Emit the structured JSON report
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct RleArgs {
    #[command(subcommand)]
    direction: RleCommand,
}

#[derive(Subcommand)]
enum RleCommand {
    /// Sequence literal -> run-length text
    Encode { literal: String },
    /// Run-length text -> sequence literal (sign defaults to +)
    Decode { text: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Falsify(args) => cmd_falsify(args),
        Command::Barker(args) => cmd_barker(args),
        Command::Rle(args) => cmd_rle(args),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("tsaudit: error: {message}");
            ExitCode::from(2)
        }
    }
}

fn resolve_threads(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var(THREADS_ENV)
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|p| p.get())
            .unwrap_or(1)
    })
    .max(1)
}

/// Parses the sequence input of `verify`: exactly one of --rle/--seq,
/// optionally padded with +1.
fn parse_verify_input(args: &VerifyArgs) -> Result<BinarySequence, String> {
    let decoded = match (&args.rle, &args.seq) {
        (Some(text), None) => parse_with_default_sign(text, Sign::Plus)
            .map(|rle| rle.decode())
            .map_err(|e| e.to_string())?,
        (None, Some(literal)) => literal.parse().map_err(|e: Error| e.to_string())?,
        _ => return Err("provide exactly one of --rle or --seq".to_string()),
    };
    match args.pad {
        Some(target) => decoded
            .padded_to(target, Sign::Plus)
            .map_err(|e| e.to_string()),
        None => Ok(decoded),
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    if args.t == 0 {
        return Err("--t must be at least 1".to_string());
    }
    let x = parse_verify_input(&args)?;
    let report = theorem1_audit(&x, args.t);
    let z = report
        .p
        .filter(|_| report.premise_ok)
        .map(|p| derived_sequence(&x, p).expect("p < n").to_string());

    let status = if report.all_claims_hold() {
        Status::Ok
    } else if report.falsified() {
        Status::Falsified
    } else {
        Status::Error
    };
    let run = RunReport::new(
        "verify",
        json!({
            "rle": args.rle,
            "seq": args.seq,
            "t": args.t,
            "pad": args.pad,
            "sequence": x.to_string(),
            "n": x.len(),
        }),
        json!({ "report": report, "z": z }),
        status,
    );

    if args.json {
        println!("{}", run.to_json());
    } else {
        println!("command    : verify");
        println!("sequence   : {} (n={})", x, x.len());
        println!("t          : {}", args.t);
        if report.premise_ok {
            println!("premise    : satisfied (p={})", report.p.expect("premise ok"));
            print_claim("claim (i)  ", report.claim_i_ok, &report.failing_i);
            println!(
                "claim (ii) : {}",
                if report.claim_ii_ok == Some(true) { "holds" } else { "FAILS" }
            );
            let iii: Vec<String> = report
                .failing_iii
                .iter()
                .map(|(j, r)| format!("(j={j},r={r})"))
                .collect();
            if iii.is_empty() {
                println!("claim (iii): holds");
            } else {
                println!("claim (iii): FAILS at {}", iii.join(", "));
            }
            print_claim("claim (iv) ", report.claim_iv_ok, &report.failing_iv_k);
            if let Some(z) = &z {
                println!("derived z  : {z}");
            }
        } else {
            println!(
                "premise    : FAILS — {}",
                report.premise_failure.as_ref().expect("failure recorded")
            );
            println!("claims     : not applicable");
        }
        println!("status     : {status}");
    }

    Ok(match status {
        Status::Ok => ExitCode::SUCCESS,
        _ => ExitCode::from(1),
    })
}

fn print_claim(label: &str, verdict: Option<bool>, failing: &[usize]) {
    if verdict == Some(true) {
        println!("{label}: holds");
    } else {
        let ks: Vec<String> = failing.iter().map(|k| format!("k={k}")).collect();
        println!("{label}: FAILS at {}", ks.join(", "));
    }
}

fn cmd_falsify(args: FalsifyArgs) -> Result<ExitCode, String> {
    let (records, mode, mismatch): (Vec<CounterexampleRecord>, String, Option<String>) =
        if args.catalog {
            let records = catalog();
            let mismatch = records
                .iter()
                .find_map(|r| verify_record(r).err().map(|e| e.to_string()));
            (records, "catalog".to_string(), mismatch)
        } else if args.family {
            let p = args.p.ok_or("--family needs --p")?;
            match family_counterexample(p) {
                Ok(record) => (vec![record], format!("family p={p}"), None),
                Err(Error::InvalidFamilyParameter { p }) => {
                    return Err(Error::InvalidFamilyParameter { p }.to_string());
                }
                Err(err) => (vec![], format!("family p={p}"), Some(err.to_string())),
            }
        } else {
            let p = args.p.ok_or("search needs --p and --t")?;
            let t = args.t.ok_or("search needs --p and --t")?;
            let mut config = SearchConfig::new(p, t)
                .map_err(|e| e.to_string())?
                .with_threads(resolve_threads(args.threads));
            if let Some(max) = args.max_results {
                config = config.with_max_results(max);
            }
            (search(&config), format!("search p={p} t={t}"), None)
        };

    let status = if mismatch.is_some() {
        Status::Mismatch
    } else if records.is_empty() {
        Status::Ok
    } else {
        Status::Falsified
    };

    if let Some(path) = &args.out {
        std::fs::write(path, tabular_export(&records))
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }

    let run = RunReport::new(
        "falsify",
        json!({
            "mode": mode,
            "p": args.p,
            "t": args.t,
            "max_results": args.max_results,
        }),
        json!({
            "records": records,
            "count": records.len(),
            "mismatch": mismatch,
        }),
        status,
    );

    if args.json {
        println!("{}", run.to_json());
    } else {
        println!("command    : falsify ({mode})");
        print!("{}", tabular_export(&records));
        println!("records    : {}", records.len());
        if let Some(m) = &mismatch {
            println!("mismatch   : {m}");
        }
        println!("status     : {status}");
    }

    Ok(match status {
        Status::Falsified => ExitCode::SUCCESS,
        _ => ExitCode::from(1),
    })
}

fn cmd_barker(args: BarkerArgs) -> Result<ExitCode, String> {
    let threads = resolve_threads(args.threads);
    match (args.n, args.odd_scan) {
        (Some(n), None) => {
            let result = barker_search_threaded(n, threads).map_err(|e| e.to_string())?;
            if let Some(path) = &args.out {
                std::fs::write(path, sequence_listing(&result))
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            }
            let run = RunReport::new(
                "barker",
                json!({ "n": n }),
                json!({ "result": result }),
                Status::Ok,
            );
            if args.json {
                println!("{}", run.to_json());
            } else {
                println!("command    : barker (n={n})");
                println!("count      : {}", result.count);
                println!("elapsed    : {:.2?}", result.elapsed);
                for seq in &result.sequences {
                    println!("{seq}");
                }
                println!("status     : ok");
            }
            Ok(ExitCode::SUCCESS)
        }
        (None, Some(n_max)) => {
            let table = odd_nonexistence_scan(n_max).map_err(|e| e.to_string())?;
            let findings: Vec<usize> = table
                .iter()
                .filter(|(_, count)| *count > 0)
                .map(|(n, _)| *n)
                .collect();
            if let Some(path) = &args.out {
                let mut text = String::from("# n\tcount\n");
                for (n, count) in &table {
                    text.push_str(&format!("{n}\t{count}\n"));
                }
                std::fs::write(path, text)
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            }
            let run = RunReport::new(
                "barker",
                json!({ "odd_scan": n_max }),
                json!({ "scan": table, "findings": findings }),
                Status::Ok,
            );
            if args.json {
                println!("{}", run.to_json());
            } else {
                println!("command    : barker (odd-scan up to {n_max})");
                println!("n\tcount");
                for (n, count) in &table {
                    println!("{n}\t{count}");
                }
                if findings.is_empty() {
                    println!("all counts zero");
                } else {
                    println!("FINDING    : Barker sequences of odd length > 13 at n = {findings:?}");
                }
                println!("status     : ok");
            }
            Ok(ExitCode::SUCCESS)
        }
        _ => Err("provide exactly one of --n or --odd-scan".to_string()),
    }
}

fn sequence_listing(result: &BarkerSearchResult) -> String {
    let mut text = String::new();
    for seq in &result.sequences {
        text.push_str(&seq.to_string());
        text.push('\n');
    }
    text.push_str(&format!("# n={} count={}\n", result.n, result.count));
    text
}

fn cmd_rle(args: RleArgs) -> Result<ExitCode, String> {
    match args.direction {
        RleCommand::Encode { literal } => {
            let x: BinarySequence = literal.parse().map_err(|e: Error| e.to_string())?;
            println!("{}", tsaudit_core::rle_encode(&x));
        }
        RleCommand::Decode { text } => {
            let rle = parse_with_default_sign(&text, Sign::Plus).map_err(|e| e.to_string())?;
            println!("{}", rle.decode());
        }
    }
    Ok(ExitCode::SUCCESS)
}
