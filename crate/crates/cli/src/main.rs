mod args;

use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::Parser;
use serde::Serialize;
use serde_json::json;

use args::{Cli, Command, SimulateArgs, TableArgs, VariantArg, VerifyArgs};
use lessnoisy::code::DistanceSource;
use lessnoisy::noise::{self, NoiseModel, SimulationReport};
use lessnoisy::suites::{self, Status, SuiteConfig};
use lessnoisy::{catalog_get, ea_parameters, singleton_slack, ClassicalCode, Error, Scheme, SyndromeTable, CATALOG};

const SCHEMA_VERSION: u32 = 1;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Codes => codes(cli),
        Command::Build => build(cli),
        Command::Verify(args) => verify(cli, args),
        Command::Table(args) => table(cli, args),
        Command::Simulate(args) => simulate(cli, args),
        Command::Params => params(cli),
    }
}

/// Code plus the name it was given on the command line.
struct Loaded {
    name: String,
    code: ClassicalCode,
}

fn load_code(cli: &Cli) -> Result<Loaded> {
    let Some(source) = &cli.code else {
        bail!("--code is required for this command");
    };
    if let Some(name) = source.strip_prefix("catalog:") {
        return Ok(Loaded {
            name: name.to_string(),
            code: catalog_get(name)?,
        });
    }
    let text = fs::read_to_string(source).with_context(|| format!("reading code file {source}"))?;
    let code = ClassicalCode::parse(&text).with_context(|| format!("parsing {source}"))?;
    let code = if code.distance().is_some() {
        code
    } else {
        match code.clone().with_computed_distance() {
            Ok(c) => c,
            Err(Error::EnumerationCap { .. }) => {
                eprintln!("warning: code is too large to compute its distance; declare it with `d <int>`");
                code
            }
            Err(e) => return Err(e.into()),
        }
    };
    Ok(Loaded {
        name: source.clone(),
        code,
    })
}

fn load_scheme(cli: &Cli) -> Result<(Loaded, Scheme)> {
    let loaded = load_code(cli)?;
    let code = loaded.code.clone();
    let scheme = match cli.variant {
        None => Scheme::build(code)?,
        Some(VariantArg::Q4) => Scheme::build_quaternary(code)?,
        Some(VariantArg::Q2) => Scheme::build_binary(code)?,
        Some(VariantArg::Dual) => Scheme::build(code)?.dualize(),
        Some(VariantArg::DualQ4) => Scheme::build_quaternary(code)?.dualize(),
        Some(VariantArg::DualQ2) => Scheme::build_binary(code)?.dualize(),
    };
    Ok((loaded, scheme))
}

fn emit_json<T: Serialize>(value: &T) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn matrix_rows(m: &impl ToString) -> Vec<String> {
    m.to_string().lines().map(str::to_string).collect()
}

fn codes(cli: &Cli) -> Result<ExitCode> {
    let mut rows = Vec::new();
    for entry in CATALOG {
        let code = entry.code();
        rows.push(json!({
            "name": entry.name,
            "label": code.label(),
            "q": code.field().order(),
            "n": code.n(),
            "k": code.k(),
            "d": code.d()?,
            "mds": code.is_mds()?,
            "description": entry.description,
        }));
        if !cli.json {
            let mds = if code.is_mds()? { "MDS" } else { "" };
            println!(
                "{:<12} {:<10} {:<4} {}",
                entry.name,
                code.label(),
                mds,
                entry.description
            );
        }
    }
    if cli.json {
        emit_json(&json!({ "schema_version": SCHEMA_VERSION, "codes": rows }))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn build(cli: &Cli) -> Result<ExitCode> {
    let (loaded, scheme) = load_scheme(cli)?;
    let code = scheme.code();
    let d = code.distance().map(|d| d.value);
    if cli.json {
        let trace = scheme.trace_check().map(|t| {
            json!({
                "h_q": matrix_rows(&t.h_q),
                "h_z": matrix_rows(&t.h_z),
                "h_x": matrix_rows(&t.h_x),
            })
        });
        emit_json(&json!({
            "schema_version": SCHEMA_VERSION,
            "code": loaded.name,
            "variant": scheme.name(),
            "q": code.field().order(),
            "n": code.n(),
            "k": code.k(),
            "d": d,
            "column_order": code.col_perm(),
            "h": matrix_rows(code.parity_check()),
            "trace_blocks": trace,
            "h_z_prime": matrix_rows(scheme.h_zp()),
            "h_x_prime": matrix_rows(scheme.h_xp()),
            "ancillas": scheme.n_anc(),
            "data_qubits": scheme.k(),
        }))?;
        return Ok(ExitCode::SUCCESS);
    }
    println!("code {} {} variant {}", loaded.name, code.label(), scheme.name());
    println!("{} ancillas, {} data qubits", scheme.n_anc(), scheme.k());
    println!("column order (standard form <- input): {:?}", code.col_perm());
    let block = |title: &str, body: String| {
        println!("\n{title}:");
        for line in body.lines() {
            println!("  {line}");
        }
    };
    block("H (standard form)", code.parity_check().to_string());
    if let Some(t) = scheme.trace_check() {
        block("H_Q", t.h_q.to_string());
        block("H_Z", t.h_z.to_string());
        block("H_X", t.h_x.to_string());
    }
    block("H_Z'", scheme.h_zp().to_string());
    block("H_X'", scheme.h_xp().to_string());
    Ok(ExitCode::SUCCESS)
}

fn verify(cli: &Cli, args: &VerifyArgs) -> Result<ExitCode> {
    let (loaded, scheme) = load_scheme(cli)?;
    let config = SuiteConfig {
        seed: cli.seed,
        random_vectors: args.random_vectors,
        random_errors: args.random_errors,
        states_per_error: args.states_per_error,
        negative_cases: args.negative_cases,
    };
    let reports = suites::run_all(&scheme, &config)?;
    let passed = !reports.iter().any(|r| r.failed());
    if cli.json {
        emit_json(&json!({
            "schema_version": SCHEMA_VERSION,
            "code": loaded.name,
            "variant": scheme.name(),
            "seed": cli.seed,
            "passed": passed,
            "suites": reports,
        }))?;
    } else {
        println!(
            "code {} {} variant {}",
            loaded.name,
            scheme.code().label(),
            scheme.name()
        );
        for r in &reports {
            let tag = match r.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            println!("{tag} {:<24} {} cases", r.name, r.cases);
            if r.status == Status::Fail {
                println!("     claim: {}", r.statement);
                println!("     counterexample: {}", r.detail.as_deref().unwrap_or(""));
            } else if let Some(detail) = &r.detail {
                println!("     {detail}");
            }
        }
    }
    if passed {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("verification failed");
        Ok(ExitCode::from(1))
    }
}

fn table(cli: &Cli, args: &TableArgs) -> Result<ExitCode> {
    let (loaded, scheme) = load_scheme(cli)?;
    let t = match args.radius {
        Some(t) => t,
        None => scheme.code().radius()?,
    };
    let table = SyndromeTable::build(&scheme, t)?;
    if let Some(path) = &args.out {
        fs::write(path, table.to_bytes()).with_context(|| format!("writing {}", path.display()))?;
    }
    if cli.json {
        emit_json(&json!({
            "schema_version": SCHEMA_VERSION,
            "code": loaded.name,
            "variant": scheme.name(),
            "t": t,
            "entries": table.len(),
            "out": args.out.as_ref().map(|p| p.display().to_string()),
        }))?;
    } else {
        println!(
            "syndrome table for {} ({}), t={t}: {} entries",
            loaded.name,
            scheme.name(),
            table.len()
        );
        if let Some(path) = &args.out {
            println!("wrote {}", path.display());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn simulate(cli: &Cli, args: &SimulateArgs) -> Result<ExitCode> {
    let (loaded, scheme) = load_scheme(cli)?;
    let model = match (args.adversarial, args.iid) {
        (Some(t), None) => NoiseModel::adversarial(t, cli.seed),
        (None, Some(p)) => NoiseModel::iid(p, args.p_anc.unwrap_or(p), cli.seed)?,
        _ => unreachable!("clap enforces exactly one noise model"),
    };
    let table = match &args.table {
        Some(path) => {
            let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
            let table = SyndromeTable::from_bytes(&bytes).with_context(|| format!("loading {}", path.display()))?;
            table.check_matches(&scheme)?;
            table
        }
        None => SyndromeTable::build(&scheme, scheme.code().radius()?)?,
    };
    let report = match args.threads {
        Some(0) => bail!("--threads must be at least 1"),
        Some(n) => noise::monte_carlo_with_threads(&scheme, &table, &model, args.trials, n)?,
        None => noise::monte_carlo(&scheme, &table, &model, args.trials)?,
    };
    let out = SimulationReport::new(&loaded.name, &scheme, &model, &report);
    if cli.json {
        emit_json(&out)?;
    } else {
        let noise = match (out.t, out.p, out.p_anc) {
            (Some(t), _, _) => format!("adversarial t={t}"),
            (_, Some(p), Some(pa)) => format!("iid p={p} p_anc={pa}"),
            _ => unreachable!(),
        };
        println!(
            "code={} variant={} noise={noise} seed={} table_t={}",
            out.code,
            out.variant,
            out.seed,
            table.t()
        );
        println!(
            "trials={} failures={} rate={} ci95=[{:.3e}, {:.3e}]",
            out.trials, out.failures, out.rate, out.ci95[0], out.ci95[1]
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn params(cli: &Cli) -> Result<ExitCode> {
    let loaded = load_code(cli)?;
    let code = &loaded.code;
    let p = ea_parameters(code)?;
    let check = singleton_slack(&p);
    let mds = code.is_mds()?;
    let declared = code.distance().map(|d| d.source) == Some(DistanceSource::Declared);
    if cli.json {
        emit_json(&json!({
            "schema_version": SCHEMA_VERSION,
            "code": loaded.name,
            "label": code.label(),
            "distance_declared": declared,
            "parameters": p,
            "display": p.to_string(),
            "singleton": check,
            "saturates": check.saturates(),
            "mds": mds,
        }))?;
        return Ok(ExitCode::SUCCESS);
    }
    let status = if check.saturates() { "saturates" } else { "strict" };
    println!("{p} slack={} ({status})", check.slack);
    println!("k_e - c = {} <= n_e - 2d_e + 2 = {}", check.lhs, check.rhs);
    println!(
        "hypothesis n_e >= 2(d_e - 1): {}",
        if check.hypothesis_holds {
            "holds"
        } else {
            "does not hold"
        }
    );
    println!(
        "classical code {} is {}MDS",
        code.label(),
        if mds { "" } else { "not " }
    );
    Ok(ExitCode::SUCCESS)
}
