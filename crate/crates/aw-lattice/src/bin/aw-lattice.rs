//! Command-line front end.
//!
//! Subcommands:
//!   build        construct a module and check the defining relations
//!   lattice      full pipeline: build, pull back, lattice, identify, verdict
//!   sample       emit seeded parameter instances as JSON
//!   verify-paper run the verification batteries and print a summary table
//!
//! Exit codes: 0 success/CONFIRMED, 1 invalid arguments, 2 relation failure,
//! 3 lattice MISMATCH, 4 INCONCLUSIVE.

use std::fs;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use aw_lattice::daha::build;
use aw_lattice::error::Error;
use aw_lattice::lattice::{full_lattice, t0_eigen, DeltaModule};
use aw_lattice::report::{
    lattice_dot, matrix_json, status_exit_code, EigenJson, InstanceSpec, Report,
};
use aw_lattice::sample::{sample_many, SampleMode};
use aw_lattice::scalar::{parse_scalar, QContext};
use aw_lattice::verdict::verify_instance;
use aw_lattice::verify::{run_verification, Scope};

#[derive(Parser)]
#[command(
    name = "aw-lattice",
    about = "Exact construction and submodule-lattice analysis of Askey-Wilson \
             algebra modules pulled back from DAHA modules of type (C1v, C1)",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SpecArgs {
    /// Deformation parameter as a rational "n" or "n/d"; |q| not 0 or 1.
    #[arg(long, default_value = "2")]
    q: String,
    /// Module family: E (odd d), O (even d), or VD (standalone bidiagonal).
    #[arg(long)]
    family: String,
    /// Degree: the module has dimension d + 1.
    #[arg(long)]
    d: usize,
    /// Comma-separated rationals: k0,k1,k2,k3 for E/O or a,b,c for VD.
    #[arg(long)]
    params: String,
    /// Twist index: 0..3 for E/O, 0..1 for VD.
    #[arg(long, default_value_t = 0)]
    twist: u8,
}

impl SpecArgs {
    fn to_spec(&self) -> InstanceSpec {
        InstanceSpec {
            family: self.family.clone(),
            d: self.d,
            parameters: self.params.split(',').map(|s| s.trim().to_string()).collect(),
            twist: self.twist,
            q: self.q.clone(),
            seed: None,
        }
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Write the JSON report to this path.
    #[arg(long, value_name = "PATH")]
    json: Option<String>,
    /// Write a Graphviz DOT rendering of the Hasse diagram to this path.
    #[arg(long, value_name = "PATH")]
    dot: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Build a module and verify the defining relations exactly.
    Build {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Print the generator matrices as exact rationals.
        #[arg(long)]
        show_matrices: bool,
    },
    /// Compute the full submodule lattice and the conformance verdict.
    Lattice {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Print the generator matrices as exact rationals.
        #[arg(long)]
        show_matrices: bool,
    },
    /// Emit seeded parameter instances as JSON.
    Sample {
        /// Family: E, O, or VD.
        #[arg(long)]
        family: String,
        /// Degree of the sampled modules.
        #[arg(long)]
        d: usize,
        /// Twist recorded in the emitted specs.
        #[arg(long, default_value_t = 0)]
        twist: u8,
        /// Number of instances.
        #[arg(long, default_value_t = 10)]
        count: usize,
        /// generic, k0..k3 (pin that parameter to +-1), or violate.
        #[arg(long, default_value = "generic")]
        mode: String,
        /// Sampler seed, recorded in each instance for replay.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "2")]
        q: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the verification batteries and print one line per criterion.
    VerifyPaper {
        /// all, relations, casimir, shapes, factors, irreducibility,
        /// corollaries, twists, or properties.
        #[arg(long, default_value = "all")]
        scope: String,
        /// Largest degree exercised by the corpora.
        #[arg(long, default_value_t = 7)]
        dmax: usize,
        /// Samples per corpus case.
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "2")]
        q: String,
    },
}

fn write_outputs(output: &OutputArgs, json: Option<&str>, dot: Option<&str>) -> Result<(), Error> {
    if let Some(path) = &output.json {
        let body = json.ok_or_else(|| Error::Argument("no JSON produced".into()))?;
        fs::write(path, body).map_err(|e| Error::Argument(format!("writing {path}: {e}")))?;
    }
    if let Some(path) = &output.dot {
        let body = dot.ok_or_else(|| {
            Error::Argument("no lattice to render; --dot applies to the lattice command".into())
        })?;
        fs::write(path, body).map_err(|e| Error::Argument(format!("writing {path}: {e}")))?;
    }
    Ok(())
}

fn print_matrices(labels: &[&str], mats: &[&aw_lattice::Matrix]) {
    for (label, m) in labels.iter().zip(mats) {
        println!("{label} =");
        for row in matrix_json(m) {
            println!("  [{}]", row.join(", "));
        }
    }
}

fn cmd_build(spec_args: &SpecArgs, output: &OutputArgs, show: bool) -> Result<u8, Error> {
    let spec = spec_args.to_spec();
    let ctx = spec.context()?;
    let mut report = Report::new(spec.clone());
    let t = Instant::now();
    let relations_ok;
    if spec.is_vd() {
        let params = spec.vd_params()?;
        let m = aw_lattice::aw::build_vd(&params, &ctx)?;
        let action = if spec.twist == 1 {
            m.action.twist_z2(&ctx)
        } else {
            m.action
        };
        let rel = action.check_relations(&ctx);
        relations_ok = rel.ok;
        report.aw_relations = Some(rel);
        if show {
            print_matrices(
                &["A", "B", "C", "alpha", "beta", "gamma"],
                &[
                    &action.a,
                    &action.b,
                    &action.c,
                    &action.alpha,
                    &action.beta,
                    &action.gamma,
                ],
            );
        }
    } else {
        let params = spec.h_params(&ctx)?;
        let h = build(&params, &ctx)?.twist_z4(spec.twist);
        let hrel = h.check_relations(&ctx);
        let pullback = h.pullback(&ctx);
        let awrel = pullback.check_relations(&ctx);
        relations_ok = hrel.ok && awrel.ok;
        report.h_relations = Some(hrel);
        report.aw_relations = Some(awrel);
        report.eigen = Some(EigenJson::from(&t0_eigen(&h)?));
        if show {
            print_matrices(
                &["t0", "t1", "t2", "t3", "A", "B", "C"],
                &[
                    &h.t[0], &h.t[1], &h.t[2], &h.t[3], &pullback.a, &pullback.b, &pullback.c,
                ],
            );
        }
    }
    report.timing_ms = t.elapsed().as_millis();
    report.status = Some(if relations_ok { "PASS" } else { "FAIL" }.into());
    let json = report.to_json();
    write_outputs(output, Some(&json), None)?;
    println!(
        "relations: {}",
        if relations_ok { "PASS" } else { "FAIL" }
    );
    Ok(if relations_ok { 0 } else { 2 })
}

fn cmd_lattice(spec_args: &SpecArgs, output: &OutputArgs, show: bool) -> Result<u8, Error> {
    let spec = spec_args.to_spec();
    let ctx = spec.context()?;
    if spec.is_vd() {
        // Standalone bidiagonal modules have no conformance verdict; compute
        // the lattice and report its shape.
        let params = spec.vd_params()?;
        let m = aw_lattice::aw::build_vd(&params, &ctx)?;
        let candidates = m.candidate_eigenvalues(&ctx);
        let action = if spec.twist == 1 {
            m.action.twist_z2(&ctx)
        } else {
            m.action
        };
        let module = DeltaModule::from_action(action, candidates);
        let t = Instant::now();
        let lat = full_lattice(&module)?;
        let mut report = Report::new(spec);
        report.lattice = Some(aw_lattice::report::LatticeJson::from(&lat));
        report.timing_ms = t.elapsed().as_millis();
        let json = report.to_json();
        let dot = lattice_dot(&lat, None);
        write_outputs(output, Some(&json), Some(&dot))?;
        println!(
            "shape: {} ({} submodules)",
            lat.shape,
            lat.nodes.len()
        );
        return Ok(0);
    }
    let params = spec.h_params(&ctx)?;
    let h = build(&params, &ctx)?.twist_z4(spec.twist);
    if show {
        let pullback = h.pullback(&ctx);
        print_matrices(
            &["t0", "A", "B", "C"],
            &[&h.t[0], &pullback.a, &pullback.b, &pullback.c],
        );
    }
    let t = Instant::now();
    let verdict = verify_instance(&h, &ctx)?;
    let mut report = Report::new(spec).with_verdict(&verdict);
    report.eigen = Some(EigenJson::from(&t0_eigen(&h)?));
    report.timing_ms = t.elapsed().as_millis();
    let json = report.to_json();
    let dot = lattice_dot(&verdict.lattice, Some(&verdict.factors));
    write_outputs(output, Some(&json), Some(&dot))?;
    println!(
        "shape: {} ({} submodules), verdict: {}",
        verdict.lattice.shape,
        verdict.lattice.nodes.len(),
        verdict.status
    );
    for f in &verdict.factors {
        println!(
            "  factor {:?} -> {} (traces {}, intertwiner {})",
            f.role,
            f.model_string(),
            if f.traces_match { "ok" } else { "MISMATCH" },
            if f.intertwiner_found { "ok" } else { "MISSING" },
        );
    }
    Ok(status_exit_code(verdict.status) as u8)
}

#[allow(clippy::too_many_arguments)]
fn cmd_sample(
    family: &str,
    d: usize,
    twist: u8,
    count: usize,
    mode: &str,
    seed: u64,
    q: &str,
    output: &OutputArgs,
) -> Result<u8, Error> {
    let ctx = QContext::new(parse_scalar(q)?)?;
    let mode = SampleMode::parse(mode)?;
    let specs = sample_many(family, d, twist, count, mode, seed, &ctx)?;
    let json = serde_json::to_string_pretty(&specs).expect("spec serialization cannot fail");
    write_outputs(output, Some(&json), None)?;
    println!("{json}");
    Ok(0)
}

fn cmd_verify_paper(scope: &str, dmax: usize, count: usize, seed: u64, q: &str) -> Result<u8, Error> {
    let ctx = QContext::new(parse_scalar(q)?)?;
    let scope = Scope::parse(scope)?;
    let results = run_verification(scope, count, dmax, seed, &ctx);
    let mut all_ok = true;
    for r in &results {
        println!("{}", r.line());
        all_ok &= r.passed;
    }
    println!("overall: {}", if all_ok { "PASS" } else { "FAIL" });
    Ok(if all_ok { 0 } else { 3 })
}

fn run() -> Result<u8, Error> {
    // clap exits with code 2 on usage errors by default; the contract here
    // reserves 2 for relation failures, so map usage errors to 1 by hand.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            eprintln!("{e}");
            return Ok(1);
        }
        Err(e) => {
            // --help / --version
            print!("{e}");
            return Ok(0);
        }
    };
    match &cli.command {
        Command::Build {
            spec,
            output,
            show_matrices,
        } => cmd_build(spec, output, *show_matrices),
        Command::Lattice {
            spec,
            output,
            show_matrices,
        } => cmd_lattice(spec, output, *show_matrices),
        Command::Sample {
            family,
            d,
            twist,
            count,
            mode,
            seed,
            q,
            output,
        } => cmd_sample(family, *d, *twist, *count, mode, *seed, q, output),
        Command::VerifyPaper {
            scope,
            dmax,
            count,
            seed,
            q,
        } => cmd_verify_paper(scope, *dmax, *count, *seed, q),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Argument(_) | Error::Irrational(_) => 1,
                Error::Inconclusive(_) => 4,
            };
            ExitCode::from(code)
        }
    }
}
