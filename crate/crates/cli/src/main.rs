//! `ybe`: verify finite braces and their deformed Yang-Baxter solutions.
//!
//! Exit codes: 0 pass, 1 property failure, 2 input error, 3 search budget refusal.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ybe_core::brace::{verify_weak_brace, Level, WeakBrace};
use ybe_core::catalog::catalog;
use ybe_core::deform::{
    deformation_report, deformed_solution, distributor_structure, regularity_identities,
    right_distributor, star_rewriting_failure,
};
use ybe_core::io::{
    expect_brace, expect_pair_map, expect_retraction, parse_structure, render, render_value,
    to_doc, Structure,
};
use ybe_core::table::classify;
use ybe_core::truss::{near_truss_solution, restriction_check};
use ybe_core::ybe::{check_braid, find_equivalence, properties, DEFAULT_BUDGET};
use ybe_core::Error;

#[derive(Parser)]
#[command(
    name = "ybe",
    version,
    about = "Finite braces and deformed Yang-Baxter solutions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the axioms of a structure document.
    Verify {
        file: PathBuf,
        /// Minimum weak brace level: weak, dual_weak, skew or brace.
        #[arg(long)]
        level: Option<String>,
    },
    /// Print the right distributor as a sorted index list.
    Distributor {
        file: PathBuf,
        /// Also report its closure properties.
        #[arg(long)]
        structure: bool,
    },
    /// Emit the deformed map r_z as a pair_map document.
    Deform {
        file: PathBuf,
        #[arg(long)]
        z: usize,
        /// Check the braid relation, the completely regular partner and the rewriting through lambda and rho.
        #[arg(long)]
        check: bool,
    },
    /// Tabulate r_z for every z and check that it is a solution exactly on the distributor.
    Solutions {
        file: PathBuf,
        #[arg(long, required = true)]
        all_z: bool,
    },
    /// Search for a bijection intertwining two maps.
    Equiv {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Emit the solution r^z of a retraction and check its restriction.
    NtSolve {
        file: PathBuf,
        #[arg(long)]
        z: usize,
    },
    /// Write the catalog of built-in structures.
    Catalog {
        /// Comma-separated names, or `all`.
        #[arg(long, default_value = "all")]
        builders: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
}

/// A command outcome other than success.
enum Failure {
    /// A checked property does not hold.
    Property(String),
    Error(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

type Outcome = Result<(), Failure>;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Axiom { .. } | Error::Precondition { .. } => 1,
        Error::Budget { .. } => 3,
        Error::Input(_) | Error::Unsupported(_) | Error::Parse { .. } => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = std::io::stdout().lock();
    let result = match cli.command {
        Command::Verify { file, level } => verify(&mut out, &file, level.as_deref()),
        Command::Distributor { file, structure } => distributor(&mut out, &file, structure),
        Command::Deform { file, z, check } => deform(&mut out, &file, z, check),
        Command::Solutions { file, .. } => solutions(&mut out, &file),
        Command::Equiv {
            first,
            second,
            budget,
        } => equiv(&mut out, &first, &second, budget),
        Command::NtSolve { file, z } => nt_solve(&mut out, &file, z),
        Command::Catalog {
            builders,
            out: path,
            budget,
        } => write_catalog(&mut out, &builders, path.as_deref(), budget),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Property(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Error(e)) => {
            eprintln!("{e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn load(path: &Path) -> Result<Structure, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    parse_structure(&text)
}

fn load_brace(path: &Path) -> Result<WeakBrace, Error> {
    expect_brace(load(path)?)
}

fn check_z(w: &WeakBrace, z: usize) -> Result<(), Error> {
    if z >= w.size() {
        return Err(Error::Input(format!(
            "z = {z} out of range for size {}",
            w.size()
        )));
    }
    Ok(())
}

fn io_err(e: std::io::Error) -> Failure {
    Failure::Error(Error::Input(format!("write failed: {e}")))
}

fn indices(v: &[usize]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn verify(out: &mut impl Write, path: &Path, level: Option<&str>) -> Outcome {
    let required = match level {
        Some(l) => Some(Level::parse(l).ok_or_else(|| {
            Error::Input(format!(
                "unknown level `{l}`; expected weak, dual_weak, skew or brace"
            ))
        })?),
        None => None,
    };
    let s = load(path)?;
    if required.is_some() && !matches!(s, Structure::WeakBrace(_)) {
        return Err(Error::Input(format!(
            "--level applies to weak braces, got a {}",
            s.kind()
        ))
        .into());
    }
    match &s {
        Structure::WeakBrace(w) => {
            if let Some(req) = required {
                verify_weak_brace(w.add_table().clone(), w.mul_table().clone(), req)?;
            }
            writeln!(
                out,
                "ok weak_brace n={} level={}",
                w.size(),
                w.level().as_str()
            )
            .map_err(io_err)?;
        }
        Structure::Table(t) => {
            let p = classify(t);
            if let Some(w) = t.associativity_failure() {
                return Err(Error::Axiom {
                    axiom: "associativity".into(),
                    witness: w.to_vec(),
                }
                .into());
            }
            let class = if p.group {
                "group"
            } else if p.clifford {
                "clifford"
            } else if p.inverse_map.is_some() {
                "inverse"
            } else {
                "semigroup"
            };
            writeln!(out, "ok table n={} class={class}", t.size()).map_err(io_err)?;
        }
        Structure::PairMap(r) => {
            let b = check_braid(r);
            if let Some(w) = b.witness {
                return Err(Failure::Property(format!("braid relation fails at {w:?}")));
            }
            writeln!(out, "ok pair_map n={} solution", r.size()).map_err(io_err)?;
        }
        Structure::Heap(h) => writeln!(out, "ok heap n={}", h.size()).map_err(io_err)?,
        Structure::NearTruss(t) => writeln!(out, "ok near_truss n={}", t.size()).map_err(io_err)?,
        Structure::Retraction(r) => writeln!(
            out,
            "ok retraction n={} brace={} kernel={}",
            r.truss().size(),
            r.brace().size(),
            r.kernel().len()
        )
        .map_err(io_err)?,
    }
    Ok(())
}

fn distributor(out: &mut impl Write, path: &Path, structure: bool) -> Outcome {
    let w = load_brace(path)?;
    let d = right_distributor(&w);
    writeln!(out, "{}", indices(&d)).map_err(io_err)?;
    if structure {
        let s = distributor_structure(&w);
        write!(out, "{}", s.checks).map_err(io_err)?;
        if !s.additive_commutative {
            writeln!(
                out,
                "info D_r closed under + and - (not asserted, + not commutative): {}",
                s.additive_closed
            )
            .map_err(io_err)?;
        }
        if !s.checks.all_hold() {
            return Err(Failure::Property("distributor closure check failed".into()));
        }
    }
    Ok(())
}

fn deform(out: &mut impl Write, path: &Path, z: usize, check: bool) -> Outcome {
    let w = load_brace(path)?;
    check_z(&w, z)?;
    let r = deformed_solution(&w, z);
    out.write_all(render(&to_doc(&Structure::PairMap(r.clone()))).as_bytes())
        .map_err(io_err)?;
    if check {
        let mut failed = Vec::new();
        let braid = check_braid(&r);
        eprintln!("braid: {}", if braid.holds { "ok" } else { "FAIL" });
        if let Some(t) = braid.witness {
            failed.push(format!("braid relation fails at {t:?}"));
        }
        let reg = regularity_identities(&w, z);
        eprint!("{reg}");
        if !reg.all_hold() {
            failed.push("completely regular partner check failed".into());
        }
        let star = star_rewriting_failure(&w, z);
        eprintln!(
            "lambda/rho rewriting: {}",
            if star.is_none() { "ok" } else { "FAIL" }
        );
        if let Some(p) = star {
            failed.push(format!("lambda/rho rewriting differs at {p:?}"));
        }
        if !failed.is_empty() {
            return Err(Failure::Property(failed.join("\n")));
        }
    }
    Ok(())
}

fn solutions(out: &mut impl Write, path: &Path) -> Outcome {
    let w = load_brace(path)?;
    let rep = deformation_report(&w);
    let flag = |b: bool| if b { "1" } else { "0" };
    writeln!(
        out,
        "z\tlabel\tin_D_r\tbraid\tbijective\tleft_nondeg\tright_nondeg\tinvolutive"
    )
    .map_err(io_err)?;
    for e in &rep.per_z {
        let p = properties(&e.r_z);
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            e.z,
            w.label(e.z),
            flag(e.in_distributor),
            flag(e.is_solution),
            flag(p.bijective),
            flag(p.left_nondeg),
            flag(p.right_nondeg),
            flag(p.involutive)
        )
        .map_err(io_err)?;
    }
    if !rep.theorem_holds {
        let bad: Vec<usize> = rep
            .per_z
            .iter()
            .filter(|e| e.in_distributor != e.is_solution)
            .map(|e| e.z)
            .collect();
        return Err(Failure::Property(format!(
            "solution iff z in D_r fails for z in {bad:?}"
        )));
    }
    Ok(())
}

fn equiv(out: &mut impl Write, first: &Path, second: &Path, budget: u128) -> Outcome {
    let r = expect_pair_map(load(first)?)?;
    let s = expect_pair_map(load(second)?)?;
    match find_equivalence(&r, &s, budget)? {
        Some(phi) => {
            writeln!(out, "{}", indices(&phi)).map_err(io_err)?;
            Ok(())
        }
        None => {
            writeln!(out, "none").map_err(io_err)?;
            Err(Failure::Property("no equivalence exists".into()))
        }
    }
}

fn nt_solve(out: &mut impl Write, path: &Path, z: usize) -> Outcome {
    let r = expect_retraction(load(path)?)?;
    if z >= r.truss().size() {
        return Err(Error::Input(format!(
            "z = {z} out of range for size {}",
            r.truss().size()
        ))
        .into());
    }
    let sol = near_truss_solution(&r, z)?;
    out.write_all(render(&to_doc(&Structure::PairMap(sol.clone()))).as_bytes())
        .map_err(io_err)?;
    let braid = check_braid(&sol);
    let rc = restriction_check(&r, z)?;
    eprintln!("braid: {}", if braid.holds { "ok" } else { "FAIL" });
    eprintln!(
        "restriction to gamma(B) equivalent via pi: {}",
        if rc.pi_intertwines { "ok" } else { "FAIL" }
    );
    if let Some(w) = braid.witness {
        return Err(Failure::Property(format!("braid relation fails at {w:?}")));
    }
    if !rc.pi_intertwines {
        return Err(Failure::Property(
            "restriction is not equivalent via pi".into(),
        ));
    }
    Ok(())
}

fn write_catalog(
    out: &mut impl Write,
    builders: &str,
    path: Option<&Path>,
    budget: u128,
) -> Outcome {
    let names: Vec<String> = builders
        .split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect();
    let text = render_value(&catalog(&names, budget)?);
    match path {
        Some(p) => fs::write(p, text.as_bytes())
            .map_err(|e| Error::Input(format!("cannot write {}: {e}", p.display())))?,
        None => out.write_all(text.as_bytes()).map_err(io_err)?,
    }
    Ok(())
}
