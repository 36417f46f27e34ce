//! Command-line front end: loads a spec file, builds the requested bracket
//! structure, and runs the identity engine against it.
//!
//! Exit codes: 0 when every check passed, 1 when a violation or witness was
//! found, 2 for input or usage errors.

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser as ClapParser, Subcommand};

use superalg::{
    builtin_catalog, search_counterexample, verify, Derivation, EvalStructure, IdentityTemplate,
    SamplerConfig, SearchBounds, SearchOutcome, SlotKind, TPStructure, Value, VerificationReport,
    VerificationStatus,
};

use superalg_cli::parser::{parse_expression, parse_spec, SpecModel};

#[derive(ClapParser)]
#[command(
    name = "superalg",
    about = "Exact verification of graded bracket identities over free commutative superalgebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify one catalog identity on seeded random homogeneous inputs.
    Verify {
        /// Identity name from `superalg catalog`.
        identity: String,
        #[arg(long)]
        spec: PathBuf,
        /// Bracket derivation, optionally with a ternary derivation:
        /// "<bracket>[,<ternary>]".
        #[arg(long)]
        structure: Option<String>,
        /// Odd derivation generating the vector-field module.
        #[arg(long)]
        delta: Option<String>,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Polynomial degree bound for sampled monomials.
        #[arg(long = "max-degree", default_value_t = 2)]
        max_degree: u32,
        #[arg(long = "max-monomials", default_value_t = 2)]
        max_monomials: u32,
        #[arg(long = "coeff-bound", default_value_t = 3)]
        coeff_bound: u32,
        /// Emit the machine-readable report on stdout.
        #[arg(long)]
        json: bool,
    },
    /// Exhaustively search monomial tuples for a violating witness.
    Search {
        identity: String,
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        structure: Option<String>,
        #[arg(long)]
        delta: Option<String>,
        /// Total-degree bound for the enumerated monomials.
        #[arg(long = "degree-bound", default_value_t = 2)]
        degree_bound: u32,
        #[arg(long)]
        json: bool,
    },
    /// Parse and canonicalize an expression against the spec file.
    Eval {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        expr: String,
    },
    /// List the built-in identities.
    Catalog,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Verify {
            identity,
            spec,
            structure,
            delta,
            samples,
            seed,
            max_degree,
            max_monomials,
            coeff_bound,
            json,
        } => {
            let model = load_spec(&spec)?;
            let template = find_template(&identity)?;
            let (eval_structure, delta_name) =
                build_structure(&model, structure.as_deref(), delta.as_deref())?;
            let mut config = SamplerConfig::new(seed).with_samples(samples);
            config.max_even_degree = max_degree;
            config.max_monomials = max_monomials;
            config.coefficient_bound = coeff_bound;
            let report =
                verify(&template, &eval_structure, &config).map_err(|e| e.to_string())?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report_json(&report, &delta_name)).unwrap()
                );
            } else {
                print_report(&report, &delta_name);
            }
            Ok(match report.status {
                VerificationStatus::HoldsOnSamples => ExitCode::SUCCESS,
                VerificationStatus::Violated => ExitCode::from(1),
            })
        }
        Command::Search {
            identity,
            spec,
            structure,
            delta,
            degree_bound,
            json,
        } => {
            let model = load_spec(&spec)?;
            let template = find_template(&identity)?;
            let (eval_structure, delta_name) =
                build_structure(&model, structure.as_deref(), delta.as_deref())?;
            let bounds = SearchBounds {
                max_total_degree: degree_bound,
            };
            let outcome = search_counterexample(&template, &eval_structure, &bounds)
                .map_err(|e| e.to_string())?;
            let report = search_report(&template, &eval_structure, &bounds, &outcome);
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report_json(&report, &delta_name)).unwrap()
                );
            } else {
                print_report(&report, &delta_name);
            }
            Ok(match outcome {
                SearchOutcome::Witness { .. } => ExitCode::from(1),
                SearchOutcome::NoneFound { .. } => ExitCode::SUCCESS,
            })
        }
        Command::Eval { spec, expr } => {
            let model = load_spec(&spec)?;
            let element = parse_expression(&expr, &model).map_err(|e| e.to_string())?;
            println!("{element}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Catalog => {
            for t in builtin_catalog() {
                let slots: Vec<String> = t
                    .slots
                    .iter()
                    .map(|s| {
                        let kind = match s.kind {
                            SlotKind::Element => "element",
                            SlotKind::VectorField => "vector field",
                        };
                        match s.parity {
                            Some(p) => format!("{}: {} ({})", s.label, kind, p),
                            None => format!("{}: {}", s.label, kind),
                        }
                    })
                    .collect();
                println!("{}", t.name);
                println!("  slots: {}", slots.join(", "));
                println!("  {}", t.description);
                for note in &t.notes {
                    println!("  note: {note}");
                }
                if t.requires_square_zero_delta {
                    println!("  requires: square-zero odd derivation");
                }
                println!();
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn load_spec(path: &PathBuf) -> Result<SpecModel, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_spec(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn find_template(name: &str) -> Result<IdentityTemplate, String> {
    let catalog = builtin_catalog();
    catalog
        .iter()
        .find(|t| t.name == name)
        .cloned()
        .ok_or_else(|| {
            let names: Vec<&str> = catalog.iter().map(|t| t.name.as_str()).collect();
            format!(
                "unknown identity `{name}`; available: {}",
                names.join(", ")
            )
        })
}

/// Builds the evaluation structure from `--structure "<bracket>[,<ternary>]"`
/// and `--delta <name>`. Returns it with the module derivation's display
/// name for report rendering.
fn build_structure(
    model: &SpecModel,
    structure: Option<&str>,
    delta: Option<&str>,
) -> Result<(EvalStructure, String), String> {
    let lookup = |name: &str| -> Result<Arc<Derivation>, String> {
        model
            .derivation(name)
            .cloned()
            .ok_or_else(|| format!("unknown derivation `{name}`"))
    };

    let mut description = Vec::new();
    let tp = match structure {
        None => None,
        Some(spec) => {
            let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
            let tp = match parts.as_slice() {
                [bracket] => {
                    description.push(format!("bracket={bracket}"));
                    TPStructure::new(lookup(bracket)?)
                }
                [bracket, ternary] => {
                    description.push(format!("bracket={bracket}"));
                    description.push(format!("ternary={ternary}"));
                    TPStructure::with_ternary(lookup(bracket)?, lookup(ternary)?)
                }
                _ => return Err("--structure takes \"<bracket>[,<ternary>]\"".into()),
            };
            Some(tp.map_err(|e| e.to_string())?)
        }
    };

    let delta_name = delta.unwrap_or("delta").to_string();
    let delta_derivation = match delta {
        None => None,
        Some(name) => {
            description.push(format!("delta={name}"));
            Some(lookup(name)?)
        }
    };

    let structure = EvalStructure::new(tp, delta_derivation)
        .map_err(|e| format!("{e} (pass --structure and/or --delta)"))?
        .with_description(description.join(", "));
    Ok((structure, delta_name))
}

fn render_value(value: &Value, delta_name: &str) -> String {
    match value {
        Value::Element(e) => e.to_string(),
        Value::VectorField(v) => format!("({})*{delta_name}", v.coefficient()),
    }
}

fn report_json(report: &VerificationReport, delta_name: &str) -> serde_json::Value {
    serde_json::json!({
        "identity": report.identity,
        "structure": report.structure,
        "samples": report.samples,
        "seed": report.seed,
        "parity_sweeps": report.parity_sweeps,
        "status": match report.status {
            VerificationStatus::HoldsOnSamples => "holds",
            VerificationStatus::Violated => "violated",
        },
        "violations": report.violations.iter().map(|v| serde_json::json!({
            "inputs": v.inputs.iter().map(|i| render_value(i, delta_name)).collect::<Vec<_>>(),
            "residual": render_value(&v.residual, delta_name),
        })).collect::<Vec<_>>(),
        "notes": report.notes,
    })
}

fn print_report(report: &VerificationReport, delta_name: &str) {
    println!("identity:      {}", report.identity);
    println!("structure:     {}", report.structure);
    println!(
        "samples:       {}   seed: {}   parity sweeps: {}",
        report.samples, report.seed, report.parity_sweeps
    );
    println!(
        "status:        {}",
        match report.status {
            VerificationStatus::HoldsOnSamples => "holds",
            VerificationStatus::Violated => "violated",
        }
    );
    for note in &report.notes {
        println!("note:          {note}");
    }
    for v in report.violations.iter().take(5) {
        println!("violation at draw {}:", v.draw_index);
        for (i, input) in v.inputs.iter().enumerate() {
            println!("  input {i}: {}", render_value(input, delta_name));
        }
        println!("  residual: {}", render_value(&v.residual, delta_name));
    }
    if report.violations.len() > 5 {
        println!("... and {} more violations", report.violations.len() - 5);
    }
}

/// Wraps a search outcome in the same report shape the verifier emits, so
/// both commands share one JSON schema.
fn search_report(
    template: &IdentityTemplate,
    structure: &EvalStructure,
    bounds: &SearchBounds,
    outcome: &SearchOutcome,
) -> VerificationReport {
    let mut notes = template.notes.clone();
    notes.push(format!(
        "exhaustive search over monomial tuples of total degree <= {}",
        bounds.max_total_degree
    ));
    match outcome {
        SearchOutcome::Witness {
            index,
            inputs,
            residual,
        } => VerificationReport {
            identity: template.name.clone(),
            structure: structure.description().to_string(),
            samples: index + 1,
            seed: 0,
            parity_sweeps: 0,
            status: VerificationStatus::Violated,
            violations: vec![superalg::Violation {
                draw_index: *index,
                inputs: inputs.clone(),
                residual: residual.clone(),
            }],
            notes,
        },
        SearchOutcome::NoneFound { examined } => {
            notes.push("no witness within the bounds".into());
            VerificationReport {
                identity: template.name.clone(),
                structure: structure.description().to_string(),
                samples: *examined,
                seed: 0,
                parity_sweeps: 0,
                status: VerificationStatus::HoldsOnSamples,
                violations: vec![],
                notes,
            }
        }
    }
}
