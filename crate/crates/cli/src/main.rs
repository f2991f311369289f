//! Command-line surface. Exit codes: 0 pass, 1 assertion failure,
//! 2 usage or validation error.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use semilocal::locality::{is_local, product_decompose, Budget, FieldProduct};
use semilocal::module::FdModule;
use semilocal::Morphism;

use semilocal_cli::format::{self, InstanceFile};
use semilocal_cli::generate;
use semilocal_cli::suites::{self, SuiteConfig, SUITE_IDS};

#[derive(Parser)]
#[command(
    name = "semilocal",
    about = "Exact computational algebra over prime fields: radicals, Wedderburn data, Goldie dimensions, endomorphism algebras, and locality of ring morphisms",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate every instance in a file.
    Validate { file: PathBuf },
    /// Jacobson radical of each algebra in a file.
    Radical { file: PathBuf },
    /// Wedderburn block data of each algebra's semisimple quotient.
    Decompose { file: PathBuf },
    /// Endomorphism algebra data of each module in a file.
    Endo { file: PathBuf },
    /// Goldie and dual Goldie dimensions of each module in a file.
    Dims { file: PathBuf },
    /// Locality verdict for each morphism in a file.
    CheckLocal {
        file: PathBuf,
        #[arg(long, default_value_t = 1 << 20)]
        budget: u64,
    },
    /// Support-induction decomposition of each morphism in a file; the
    /// codomain must reduce to a product of field blocks.
    Producte {
        file: PathBuf,
        #[arg(long, default_value_t = 1 << 20)]
        budget: u64,
    },
    /// Emit instances of a generator family as an instance file.
    Gen {
        family: String,
        /// key=value parameters of the family
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run one verification suite.
    Verify {
        suite_id: String,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1 << 20)]
        budget: u64,
        #[arg(long)]
        fail_fast: bool,
    },
    /// Run every suite and write the combined report.
    Report {
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 25)]
        count: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1 << 20)]
        budget: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &PathBuf) -> Result<InstanceFile, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    format::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Validate { file } => {
            let parsed = load(&file)?;
            let realized = format::realize(&parsed)?;
            println!(
                "ok: {} algebras, {} modules, {} maps, {} homs",
                realized.algebras.len(),
                realized.modules.len(),
                realized.maps.len(),
                realized.homs.len()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Radical { file } => {
            let realized = format::realize(&load(&file)?)?;
            for (name, a) in &realized.algebras {
                let r = a.radical().map_err(|e| e.to_string())?;
                println!(
                    "algebra {} p={} dim={} radical_dim={} nilpotency_index={} method={}",
                    name,
                    a.modulus(),
                    a.dim(),
                    r.radical.dim(),
                    r.nilpotency_index,
                    r.method
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Decompose { file } => {
            let realized = format::realize(&load(&file)?)?;
            for (name, a) in &realized.algebras {
                let w = a.wedderburn().map_err(|e| e.to_string())?;
                let blocks: Vec<String> = w
                    .blocks
                    .iter()
                    .map(|b| format!("(n={},k={})", b.matrix_size, b.field_degree))
                    .collect();
                println!(
                    "algebra {} blocks={} codim={} {}",
                    name,
                    w.block_count(),
                    a.ring_codim().map_err(|e| e.to_string())?,
                    blocks.join(" ")
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Endo { file } => {
            let realized = format::realize(&load(&file)?)?;
            for (name, m) in &realized.modules {
                let endo = m.endo_algebra().map_err(|e| e.to_string())?;
                let codim = endo.algebra.ring_codim().map_err(|e| e.to_string())?;
                let blocks = endo.algebra.wedderburn().map_err(|e| e.to_string())?;
                println!(
                    "module {} dim={} end_dim={} end_codim={} end_blocks={}",
                    name,
                    m.dim(),
                    endo.dim(),
                    codim,
                    blocks.block_count()
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Dims { file } => {
            let realized = format::realize(&load(&file)?)?;
            for (name, m) in &realized.modules {
                let (dim, codim) = m.goldie_dims().map_err(|e| e.to_string())?;
                let s = m.structural_series().map_err(|e| e.to_string())?;
                println!(
                    "module {} dim={} goldie={} cogoldie={} socle_dim={} radical_dim={}",
                    name,
                    m.dim(),
                    dim,
                    codim,
                    s.socle.dim(),
                    s.radical_sub.dim()
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::CheckLocal { file, budget } => {
            let realized = format::realize(&load(&file)?)?;
            let b = Budget {
                enumeration: budget,
                ..Budget::default()
            };
            let mut any_witness = false;
            for (name, phi) in &realized.maps {
                let rep = is_local(phi, &b);
                let witness = rep
                    .witness
                    .as_ref()
                    .map(|w| format!(" witness={:?}", w.coords()))
                    .unwrap_or_default();
                println!(
                    "map {} verdict={} checked={}{}",
                    name, rep.verdict, rep.elements_checked, witness
                );
                if rep.witness.is_some() {
                    any_witness = true;
                }
            }
            Ok(if any_witness {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Producte { file, budget } => {
            let realized = format::realize(&load(&file)?)?;
            let b = Budget {
                enumeration: budget,
                ..Budget::default()
            };
            for (name, phi) in &realized.maps {
                let (phi2, product) = reduce_to_field_product(phi)?;
                let dec = product_decompose(&phi2, &product, &b).map_err(|e| e.to_string())?;
                println!(
                    "map {} k={} m={} indices={:?} kernel_is_radical={} blocks_match={}",
                    name,
                    product.block_count(),
                    dec.m,
                    dec.indices,
                    dec.kernel_is_radical,
                    dec.block_count_matches
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen {
            family,
            params,
            seed,
            out,
        } => {
            let mut map = BTreeMap::new();
            for p in &params {
                let (k, v) = p
                    .split_once('=')
                    .ok_or_else(|| format!("parameter '{p}' is not key=value"))?;
                map.insert(k.to_string(), v.to_string());
            }
            let instances = generate::build_family(&family, &map, seed)?;
            let text = format::serialize(&InstanceFile { instances });
            match out {
                Some(path) => std::fs::write(&path, text).map_err(|e| e.to_string())?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite_id,
            count,
            seed,
            budget,
            fail_fast,
        } => {
            if !SUITE_IDS.contains(&suite_id.as_str())
                && !matches!(suite_id.as_str(), "R.radical" | "R.idem")
            {
                return Err(format!(
                    "unknown suite '{}'; available: {}",
                    suite_id,
                    SUITE_IDS.join(", ")
                ));
            }
            let cfg = SuiteConfig {
                count,
                seed,
                budget,
                fail_fast,
            };
            let report = suites::run_suite(&suite_id, &cfg)?;
            print!("{}", report.render());
            Ok(if report.ok() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Report {
            out,
            count,
            seed,
            budget,
        } => {
            let cfg = SuiteConfig {
                count,
                seed,
                budget,
                fail_fast: false,
            };
            let mut all_ok = true;
            let mut text = String::new();
            for id in SUITE_IDS {
                let report = suites::run_suite(id, &cfg)?;
                all_ok &= report.ok();
                text.push_str(&report.render());
                text.push('\n');
                println!(
                    "suite {} pass={} fail={}",
                    id, report.passes, report.failures
                );
            }
            std::fs::write(&out, text).map_err(|e| e.to_string())?;
            println!("report written to {}", out.display());
            Ok(if all_ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

/// Composes with the canonical projection when the codomain has a
/// radical, then reads the semisimple codomain as a field product.
fn reduce_to_field_product(phi: &Morphism) -> Result<(Morphism, FieldProduct), String> {
    let s = phi.codomain();
    let phi2 = if s.radical().map_err(|e| e.to_string())?.radical.is_zero() {
        phi.clone()
    } else {
        let q = s.semisimple_quotient().map_err(|e| e.to_string())?;
        phi.compose(&q.projection).map_err(|e| e.to_string())?
    };
    let product =
        FieldProduct::from_semisimple(phi2.codomain()).map_err(|e| e.to_string())?;
    Ok((phi2, product))
}

// referenced by integration tests to keep module types in scope
#[allow(dead_code)]
fn _type_anchors(_: &FdModule) {}
