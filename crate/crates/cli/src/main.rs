//! Command-line front end: enumerate, verify, explain, parse, export.
//!
//! Exit codes: 0 on success, 1 on a verification mismatch, 2 on usage or
//! code parse errors.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sextic_schemes::catalog::{closure_check, ground_truth, verify};
use sextic_schemes::codes::{parse_forest, parse_pair};
use sextic_schemes::export::{export_ambient, AmbientExport};
use sextic_schemes::restrictions::RuleSet;
use sextic_schemes::schemes::Scheme;
use sextic_schemes::surfaces::CubicAmbient;

#[derive(Parser)]
#[command(
    name = "sextic-schemes",
    version,
    about = "Topological arrangements of nonsingular degree-6 curves on real cubic surfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the candidate schemes of an ambient and classify them
    Enumerate {
        /// Cubic surface type (RP2+S2, RP2, 3RP2, 5RP2, 7RP2) or "all"
        #[arg(long)]
        ambient: String,
        /// Write the classification as JSON to this path
        #[arg(long)]
        json: Option<PathBuf>,
        /// Which schemes to print
        #[arg(long, value_enum, default_value_t = Show::All)]
        show: Show,
    },
    /// Check the classifier against the embedded catalog and the
    /// construction closure
    Verify {
        /// Cubic surface type or "all"
        #[arg(long, default_value = "all")]
        ambient: String,
    },
    /// Evaluate one scheme code against every applicable restriction
    Explain {
        /// Cubic surface type the code lives on
        #[arg(long)]
        ambient: String,
        /// Scheme code, e.g. "<0 u S2_4, 3 u 7RP2_1>" or "<1<1<1>>>"
        code: String,
    },
    /// Echo the canonical form of a code with its basic invariants
    Parse {
        /// A forest code, a half-pair code, or a tagged scheme code
        code: String,
    },
    /// Print the ground-truth catalog of an ambient
    Catalog {
        /// Cubic surface type or "all"
        #[arg(long)]
        ambient: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Show {
    Admitted,
    Excluded,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

fn ambient_list(text: &str) -> Result<Vec<CubicAmbient>, String> {
    if text == "all" {
        return Ok(CubicAmbient::ALL.to_vec());
    }
    text.parse::<CubicAmbient>().map(|a| vec![a]).map_err(|e| e.to_string())
}

fn run_enumerate(ambients: &[CubicAmbient], json: Option<&PathBuf>, show: Show) -> Result<(), String> {
    let rules = RuleSet::standard();

    if let Some(path) = json {
        let exports: Vec<AmbientExport> =
            ambients.iter().map(|&a| export_ambient(a, &rules)).collect();
        let payload = if exports.len() == 1 {
            serde_json::to_string_pretty(&exports[0])
        } else {
            serde_json::to_string_pretty(&exports)
        }
        .map_err(|e| e.to_string())?;
        std::fs::write(path, payload + "\n").map_err(|e| format!("{}: {e}", path.display()))?;
    }

    for &ambient in ambients {
        let export = export_ambient(ambient, &rules);
        let admitted = export.schemes.iter().filter(|s| s.status == "admitted").count();
        println!(
            "{ambient} (chi = {}): {} candidates, {} admitted, {} excluded",
            export.chi,
            export.schemes.len(),
            admitted,
            export.schemes.len() - admitted
        );
        for scheme in &export.schemes {
            let wanted = match show {
                Show::All => true,
                Show::Admitted => scheme.status == "admitted",
                Show::Excluded => scheme.status == "excluded",
            };
            if !wanted {
                continue;
            }
            let params = scheme
                .params
                .as_ref()
                .map(|p| format!("({},{},{})", p.alpha, p.beta, p.gamma))
                .unwrap_or_default();
            let rules_str = scheme.rules.join(",");
            println!(
                "  {:<8} b0={} {:<12} {:<8} {:<28} {}",
                scheme.status, scheme.b0, scheme.family, params, rules_str, scheme.code
            );
        }
    }
    Ok(())
}

fn run_verify(ambients: &[CubicAmbient]) -> Result<bool, String> {
    let rules = RuleSet::standard();
    let mut all_pass = true;
    let mut total_actual = 0;
    let mut total_expected = 0;
    for &ambient in ambients {
        let report = verify(ambient, &rules);
        all_pass &= report.pass();
        total_actual += if report.pass() { report.actual } else { 0 };
        total_expected += report.expected;
        println!("{report}");
        if let Some(closure) = closure_check(ambient) {
            all_pass &= closure.pass();
            println!("{closure}");
        }
    }
    if ambients.len() > 1 {
        println!("{total_actual}/{total_expected} admitted types match");
    }
    Ok(all_pass)
}

fn run_explain(ambient: CubicAmbient, code: &str) -> Result<(), String> {
    let scheme = Scheme::parse(ambient, code).map_err(|e| e.to_string())?;
    let explanation = RuleSet::standard().explain(&scheme);
    print!("{explanation}");
    Ok(())
}

fn run_parse(code: &str) -> Result<(), String> {
    if code.contains(',') {
        let pair = parse_pair(code).map_err(|e| e.to_string())?;
        println!("canonical: {pair}");
        println!("kind: half-pair code");
        println!("b0: {}", pair.plus_boundaries());
        println!("chi+: {}", pair.chi_plus());
        println!("chi-: {}", pair.chi_minus());
        println!("chi total: {}", pair.chi_plus() + pair.chi_minus());
    } else if code.contains('@') {
        let mut canonical_parts = Vec::new();
        let mut b0 = 0;
        for part in code.split('|') {
            let part = part.trim();
            let (body, tag) = part
                .rsplit_once('@')
                .ok_or_else(|| format!("part {part:?} lacks an @RP2 or @S2 tag"))?;
            let forest = parse_forest(body.trim()).map_err(|e| e.to_string())?;
            b0 += forest.oval_count();
            canonical_parts.push(format!("{forest}@{tag}"));
        }
        println!("canonical: {}", canonical_parts.join(" | "));
        println!("kind: tagged scheme code");
        println!("b0: {b0}");
    } else {
        let forest = parse_forest(code).map_err(|e| e.to_string())?;
        println!("canonical: {forest}");
        println!("kind: oval forest");
        println!("b0: {}", forest.oval_count());
        println!("nesting pairs: {}", forest.nesting_pairs());
    }
    Ok(())
}

fn run_catalog(ambients: &[CubicAmbient], format: Format) -> Result<(), String> {
    let rules = RuleSet::standard();
    match format {
        Format::Json => {
            let exports: Vec<AmbientExport> = ambients
                .iter()
                .map(|&a| {
                    let mut export = export_ambient(a, &rules);
                    export.schemes.retain(|s| s.status == "admitted");
                    export
                })
                .collect();
            let payload = if exports.len() == 1 {
                serde_json::to_string_pretty(&exports[0])
            } else {
                serde_json::to_string_pretty(&exports)
            }
            .map_err(|e| e.to_string())?;
            println!("{payload}");
        }
        Format::Table => {
            for &ambient in ambients {
                let entries = ground_truth(ambient);
                println!("{ambient}: {} admitted types", entries.len());
                for entry in entries {
                    let mut line = String::new();
                    write!(
                        line,
                        "  {:<12} {:<26} {}",
                        entry.family,
                        entry.construction.method.to_string(),
                        entry.scheme.code()
                    )
                    .unwrap();
                    if let Some(source) = &entry.construction.source {
                        write!(line, "   [{source}]").unwrap();
                    }
                    println!("{line}");
                }
            }
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Enumerate { ambient, json, show } => {
            run_enumerate(&ambient_list(&ambient)?, json.as_ref(), show)?;
            Ok(true)
        }
        Command::Verify { ambient } => run_verify(&ambient_list(&ambient)?),
        Command::Explain { ambient, code } => {
            let ambients = ambient_list(&ambient)?;
            if ambients.len() != 1 {
                return Err("explain wants a single ambient".to_string());
            }
            run_explain(ambients[0], &code)?;
            Ok(true)
        }
        Command::Parse { code } => {
            run_parse(&code)?;
            Ok(true)
        }
        Command::Catalog { ambient, format } => {
            run_catalog(&ambient_list(&ambient)?, format)?;
            Ok(true)
        }
    }
}

/// Die quietly when the output pipe closes (e.g. `... | head`).
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() -> ExitCode {
    reset_sigpipe();
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        // A verification mismatch exits 1; usage and parse errors exit 2.
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

// Smoke coverage lives in tests/cli.rs; the library crate carries the logic.
