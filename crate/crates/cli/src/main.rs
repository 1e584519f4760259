//! `clutterlab`: property checks, invariants, conjecture batches and examples.
//!
//! Exit codes: 0 the property holds, 1 it fails, 2 undecided (budget),
//! 64 usage error, 70 internal error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use clutterlab::certificate::{
    check, conjecture_batch, example_certificate, example_instances, invariants, Certificate,
    InstanceFile, Property, Verdict, DEFAULT_POWER_BOUND,
};
use clutterlab::families::{Family, Instance};
use clutterlab::{Error, Limits};

const EXIT_USAGE: u8 = 64;
const EXIT_INTERNAL: u8 = 70;

#[derive(Parser)]
#[command(
    name = "clutterlab",
    version,
    about = "Ehrhart rings, TDI systems and clique clutters"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide one property of an instance file.
    Check {
        /// ehrhart | ideal | mfmc | tdi | meyniel | perfect | unmixed | uniform | konig | ntf | normal
        property: String,
        #[arg(long)]
        input: PathBuf,
        /// Emit the JSON certificate instead of a summary.
        #[arg(long)]
        json: bool,
        /// Power bound for ntf and normal.
        #[arg(long, default_value_t = DEFAULT_POWER_BOUND)]
        r: u32,
        /// Record wall-clock time in the certificate (breaks byte stability).
        #[arg(long)]
        timing: bool,
    },
    /// h-vector, a-invariant, regularity and bounds of a clutter (or clique clutter).
    Invariants {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        timing: bool,
    },
    /// Check "ideal implies MFMC" on seeded perfect-graph families.
    Conjecture {
        /// Comma-separated: bipartite, chordal, meyniel-closure, line-of-bipartite, complements
        #[arg(long, value_delimiter = ',', default_value = "bipartite,chordal")]
        families: Vec<String>,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Instances per family.
        #[arg(long, default_value_t = 20)]
        count: u64,
        /// Emit all certificates as a JSON array.
        #[arg(long)]
        json: bool,
    },
    /// Write a registered example instance and its certificate.
    Examples {
        /// line-k24, triangle, four-cycle, c5, k4, example-3-10 or sharpness-D-G
        #[arg(long)]
        name: String,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
}

fn read_instance(path: &Path) -> Result<Instance> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Usage(format!("{}: {e}", path.display())))?;
    let file = InstanceFile::parse(&text).map_err(|e| match e {
        Error::Usage(m) => Error::Usage(format!("{}: {m}", path.display())),
        other => other,
    })?;
    Ok(file.to_instance()?)
}

fn summary(c: &Certificate) -> String {
    let mut out = format!("{}: {}\n", c.command, verdict_word(c.verdict));
    for (k, v) in &c.invariants {
        out.push_str(&format!("  {k}: {v}\n"));
    }
    for (k, v) in &c.witnesses {
        if k == "faces" {
            let n = v.as_array().map_or(0, Vec::len);
            out.push_str(&format!("  faces checked: {n}\n"));
        } else {
            out.push_str(&format!("  witness {k}: {v}\n"));
        }
    }
    for note in &c.budget.notes {
        out.push_str(&format!("  budget: {note}\n"));
    }
    out
}

fn verdict_word(v: Verdict) -> &'static str {
    match v {
        Verdict::Holds => "holds",
        Verdict::Fails => "fails",
        Verdict::Undecided => "undecided",
    }
}

fn emit(c: &Certificate, json: bool) -> u8 {
    if json {
        print!("{}", c.emit());
    } else {
        print!("{}", summary(c));
    }
    c.verdict.exit_code() as u8
}

fn timed(
    timing: bool,
    f: impl FnOnce() -> clutterlab::Result<Certificate>,
) -> clutterlab::Result<Certificate> {
    let start = Instant::now();
    let mut c = f()?;
    if timing {
        c.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(c)
}

fn run(cli: Cli) -> Result<u8> {
    let limits = Limits::from_env();
    match cli.command {
        Command::Check {
            property,
            input,
            json,
            r,
            timing,
        } => {
            let prop = Property::parse(&property)?;
            let inst = read_instance(&input)?;
            let c = timed(timing, || check(prop, &inst, r, &limits))?;
            Ok(emit(&c, json))
        }
        Command::Invariants {
            input,
            json,
            timing,
        } => {
            let inst = read_instance(&input)?;
            let c = timed(timing, || invariants(&inst, &limits))?;
            Ok(emit(&c, json))
        }
        Command::Conjecture {
            families,
            max_n,
            seed,
            count,
            json,
        } => {
            let fams = families
                .iter()
                .map(|f| Family::parse(f.trim()))
                .collect::<clutterlab::Result<Vec<_>>>()?;
            let rows = conjecture_batch(&fams, max_n, seed, count, &limits)?;
            if json {
                let certs: Vec<&Certificate> = rows.iter().map(|r| &r.certificate).collect();
                println!("{}", serde_json::to_string_pretty(&certs)?);
            } else {
                println!(
                    "{:<18} {:>5}  {:<16} {:<6} {:<10}",
                    "family", "index", "digest", "ideal", "verdict"
                );
                for r in &rows {
                    let ideal = r
                        .certificate
                        .invariants
                        .get("ideal")
                        .map_or("-".into(), |v| v.to_string());
                    println!(
                        "{:<18} {:>5}  {:<16} {:<6} {:<10}",
                        r.family,
                        r.index,
                        &r.certificate.instance_digest[..16],
                        ideal,
                        verdict_word(r.certificate.verdict)
                    );
                }
                for r in rows.iter().filter(|r| r.is_counterexample()) {
                    println!(
                        "COUNTEREXAMPLE: ideal but not MFMC: {}",
                        r.instance.to_json()
                    );
                    print!("{}", r.certificate.emit());
                }
                let undecided = rows
                    .iter()
                    .filter(|r| r.certificate.verdict == Verdict::Undecided)
                    .count();
                let bad = rows.iter().filter(|r| r.is_counterexample()).count();
                println!(
                    "{} instances, {} counterexamples, {} undecided",
                    rows.len(),
                    bad,
                    undecided
                );
            }
            Ok(if rows.iter().any(|r| r.is_counterexample()) {
                1
            } else if rows
                .iter()
                .any(|r| r.certificate.verdict == Verdict::Undecided)
            {
                2
            } else {
                0
            })
        }
        Command::Examples { name, out } => {
            let instances = example_instances(&name)?;
            std::fs::create_dir_all(&out).with_context(|| format!("creating {}", out.display()))?;
            for (stem, inst) in &instances {
                let file = InstanceFile::from_instance(inst)?;
                let path = out.join(format!("{stem}.json"));
                std::fs::write(&path, format!("{}\n", file.to_json()))
                    .with_context(|| format!("writing {}", path.display()))?;
                let cert = example_certificate(inst, &limits)?;
                let cpath = out.join(format!("{stem}.cert.json"));
                std::fs::write(&cpath, cert.emit())
                    .with_context(|| format!("writing {}", cpath.display()))?;
                println!("{}\n{}", path.display(), cpath.display());
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("clutterlab: {e:#}");
            let code = match e.downcast_ref::<Error>() {
                Some(Error::Usage(_)) => EXIT_USAGE,
                Some(e) if e.is_budget() => 2,
                _ => EXIT_INTERNAL,
            };
            ExitCode::from(code)
        }
    }
}
