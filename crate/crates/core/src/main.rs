use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_integer::Integer;

use neron_jumps::catalog::{self, format_jumps, TableReport, TABLE_ROWS};
use neron_jumps::character::{h1_character, trace_breakdown, CharacterPoly};
use neron_jumps::cyclotomic::verify_edge_trace_report;
use neron_jumps::dual_graph::DualGraph;
use neron_jumps::error::Error;
use neron_jumps::graph_file::parse_graph;
use neron_jumps::hj::{resolve, SingularityParams};
use neron_jumps::jumps::{jump_spectrum, DEFAULT_N_MIN, DEFAULT_SAMPLES};

#[derive(Parser)]
#[command(name = "neron-jumps", version, about = "Jumps of the Néron filtration from SNC fiber data")]
struct Cli {
    /// Emit line-oriented key=value records.
    #[arg(long, global = true)]
    machine: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal resolution of the singularity (m1, m2, n).
    Resolve { m1: u64, m2: u64, n: u64 },
    /// Per-component and per-intersection traces at degree n.
    Trace { graph: String, n: u64 },
    /// Exponents of the H^1 character at degree n.
    Character { graph: String, n: u64 },
    /// Jump spectrum of a fiber.
    Jumps {
        graph: String,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_N_MIN)]
        nmin: u64,
    },
    /// Compare the closed edge trace with the fixed-point summation at every primitive root.
    Verify { m1: u64, m2: u64, n: u64 },
    /// List the catalog, or check one fiber type against its table row.
    Catalog { name: Option<String> },
    /// Regression over all encoded fiber types of a genus.
    RunTable { genus: u32 },
}

enum Failure {
    Regression,
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::FitFailed { .. }
            | Error::DenominatorViolation { .. }
            | Error::Overflow(_)
            | Error::NegativeCoefficient { .. }
            | Error::WrongDegree { .. } => Failure::Internal(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn read_graph(path: &str) -> Result<DualGraph, Failure> {
    let mut text = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Failure::Input(format!("{path}: {e}")))?;
    parse_graph(&text).map_err(|e| Failure::Input(format!("{path}: {e}")))
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn print_terms(p: &CharacterPoly) {
    for (e, c) in p.terms() {
        println!("term exponent={e} coeff={c}");
    }
}

fn cmd_resolve(m1: u64, m2: u64, n: u64) -> Outcome {
    let chain = resolve(&SingularityParams::new(m1, m2, n)?)?;
    println!("m1={m1}");
    println!("m2={m2}");
    println!("n={n}");
    println!("r={}", chain.rotation());
    println!("L={}", chain.len());
    println!("b={}", join(&chain.b_seq));
    println!("mu={}", join(&chain.mu_seq));
    println!("r_seq={}", join(&chain.r_seq));
    println!("alpha1={}", chain.alpha1);
    println!("shape_regular={}", chain.is_shape_regular());
    for l in 1..=chain.len() + 1 {
        let (z, w) = chain.action_exponents(l)?;
        println!("chart{l}={z},{w}");
    }
    Ok(())
}

fn cmd_trace(path: &str, n: u64, machine: bool) -> Outcome {
    let g = read_graph(path)?;
    let t = trace_breakdown(&g, n)?;
    let header = |kind: &str, what: String| {
        if machine {
            println!("contribution={kind} id={what}");
        } else {
            println!("{kind} {what}");
        }
    };
    for (v, p) in &t.vertices {
        header("vertex", g.vertex(*v).id.clone());
        print_terms(p);
    }
    for (o, p) in &t.edges {
        let prm = o.params(&g, n)?;
        let what = format!("{}-{}", g.vertex(o.source).id, g.vertex(o.target).id);
        if machine {
            println!("contribution=edge id={what} m1={} m2={} n={}", prm.m1, prm.m2, prm.n);
        } else {
            header("edge", format!("{what} ({}, {}, {})", prm.m1, prm.m2, prm.n));
        }
        print_terms(p);
    }
    if machine {
        println!("contribution=total");
    } else {
        println!("total {}", t.total);
    }
    print_terms(&t.total);
    Ok(())
}

fn cmd_character(path: &str, n: u64, machine: bool) -> Outcome {
    let g = read_graph(path)?;
    let exps = h1_character(&g, n)?;
    if machine {
        println!("n={n}");
        println!("genus={}", exps.len());
        println!("exponents={}", join(&exps));
    } else {
        let terms: Vec<String> = exps.iter().map(|e| format!("x^{e}")).collect();
        println!("H1 character at n={n}: {}", terms.join(" + "));
    }
    Ok(())
}

fn cmd_jumps(path: &str, samples: usize, nmin: u64, machine: bool) -> Outcome {
    let g = read_graph(path)?;
    let s = jump_spectrum(&g, samples, nmin)?;
    let den = s.predicted_denominator;
    let mut nums = s.numerators();
    nums.dedup();
    for (num, (_, k)) in nums.into_iter().zip(s.with_multiplicity()) {
        if machine {
            let d = num.gcd(&den);
            println!("jump {}/{} mult={k}", num / d, den / d);
        } else {
            println!("jump {num}/{den} (multiplicity {k})");
        }
    }
    if machine {
        println!("denominator={den}");
        println!("samples={}", join(&s.samples));
    } else {
        println!("samples: {}", join(&s.samples));
    }
    Ok(())
}

fn cmd_verify(m1: u64, m2: u64, n: u64, machine: bool) -> Outcome {
    let report = verify_edge_trace_report(&SingularityParams::new(m1, m2, n)?)?;
    for (j, ok) in &report.per_root {
        let status = if *ok { "PASS" } else { "FAIL" };
        if machine {
            println!("root j={j} status={status}");
        } else {
            println!("{status} zeta^{j}");
        }
    }
    let passed = report.per_root.iter().filter(|(_, ok)| *ok).count();
    let total = report.per_root.len();
    if machine {
        println!("passed={passed} total={total}");
    } else {
        println!("summary: {passed}/{total} PASS for ({m1}, {m2}, {n})");
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Regression)
    }
}

fn print_report(report: &TableReport, machine: bool) {
    for r in &report.results {
        if machine {
            let computed = match &r.computed {
                Ok(s) => format_jumps(&s.jumps),
                Err(e) => format!("error:{e}"),
            };
            println!(
                "entry={} status={} expected={} computed={}",
                r.entry.key(),
                if r.passed() { "PASS" } else { "FAIL" },
                format_jumps(&r.entry.expected_jumps),
                computed.replace(' ', "")
            );
        } else {
            println!("{r}");
        }
    }
    if machine {
        println!("passed={} total={}", report.passed(), report.results.len());
    } else {
        println!("summary: {}", report.summary());
    }
}

fn cmd_catalog(name: Option<String>, machine: bool) -> Outcome {
    match name {
        Some(name) => {
            let report = TableReport {
                results: vec![catalog::catalog_jumps(&name)?],
            };
            print_report(&report, machine);
            if report.all_passed() {
                Ok(())
            } else {
                Err(Failure::Regression)
            }
        }
        None => {
            let encoded = catalog::catalog_list();
            for row in TABLE_ROWS {
                let key = row.key();
                let has_graph = encoded.contains(&key);
                let jumps = format_jumps(&row.expected_jumps());
                if machine {
                    println!("entry={key} genus={} graph={has_graph} expected={}", row.genus(), jumps.replace(' ', ""));
                } else {
                    let mark = if has_graph { "graph" } else { "table only" };
                    println!("{key:<22} {jumps:<16} {mark}");
                }
            }
            Ok(())
        }
    }
}

fn cmd_run_table(genus: u32, machine: bool) -> Outcome {
    let report = catalog::run_table(genus)?;
    print_report(&report, machine);
    if report.all_passed() {
        Ok(())
    } else {
        Err(Failure::Regression)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let m = cli.machine;
    let outcome = match cli.command {
        Command::Resolve { m1, m2, n } => cmd_resolve(m1, m2, n),
        Command::Trace { graph, n } => cmd_trace(&graph, n, m),
        Command::Character { graph, n } => cmd_character(&graph, n, m),
        Command::Jumps { graph, samples, nmin } => cmd_jumps(&graph, samples, nmin, m),
        Command::Verify { m1, m2, n } => cmd_verify(m1, m2, n, m),
        Command::Catalog { name } => cmd_catalog(name, m),
        Command::RunTable { genus } => cmd_run_table(genus, m),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Regression) => ExitCode::from(1),
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
