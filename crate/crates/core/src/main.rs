use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use cvtk::cheb::ChebCache;
use cvtk::error::Error;
use cvtk::{fixtures, intersect, knotgrp, report, trace, variety, verify};

#[derive(Parser)]
#[command(name = "cvtk", version, about = "Character varieties of the two-bridge knots J(2n,2n)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Pretty,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    F,
    G,
    #[value(name = "G")]
    BigG,
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    X,
    D,
}

#[derive(Subcommand)]
enum Command {
    /// The sequences f_j, g_j and G_j.
    Cheb {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        j: usize,
        #[arg(long, value_enum, default_value = "pretty")]
        format: Format,
    },
    /// Defining polynomial of the X or D model.
    Variety {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, ignore_case = true)]
        model: Model,
        /// Split the D model into the line r = t and its complement.
        #[arg(long)]
        split: bool,
        #[arg(long, value_enum, default_value = "pretty")]
        format: Format,
    },
    /// Intersection loci and meridian data.
    Intersect {
        #[arg(long)]
        n: u32,
        /// Also write the report as JSON to this path.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Full pipeline through the slope verdict.
    Detect {
        #[arg(long)]
        n: u32,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Numeric representation at an intersection point.
    Rep {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        locus: usize,
        #[arg(long, default_value_t = 0)]
        root: usize,
        /// 0 for the principal mu, 1 for its inverse.
        #[arg(long, default_value_t = 0)]
        branch: usize,
    },
    /// Normal-form word of the two-bridge knot (p, q).
    Word {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
    },
    /// Alexander polynomial and its discriminant.
    Alexander {
        #[arg(long)]
        n: u32,
    },
    /// Candidate boundary slopes with their continued fractions.
    Slopes {
        #[arg(long)]
        n: u32,
    },
    /// Replay the printed data and the identity suite.
    VerifyPaper {
        /// Read fixtures from this JSON file instead of the built-in ones.
        #[arg(long)]
        fixtures: Option<PathBuf>,
        /// Print the built-in fixtures as JSON and exit.
        #[arg(long)]
        dump_fixtures: bool,
        /// Run only the checks for this n.
        #[arg(long)]
        n: Option<u32>,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidN(_)
            | Error::InvalidNormalForm { .. }
            | Error::IndexOutOfRange { .. }
            | Error::NegativeIndex(_)
            | Error::Parse(_) => Failure::Usage(e.to_string()),
            Error::Verification(_) => Failure::Verification(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn print_json(v: &impl serde::Serialize) -> Outcome {
    print!("{}", report::to_canonical_json(v)?);
    Ok(())
}

fn cheb(kind: Kind, j: usize, format: Format) -> Outcome {
    let cache = ChebCache::new();
    let (name, p) = match kind {
        Kind::F => ("f", cache.f(j)),
        Kind::G => ("g", cache.g(j)?),
        Kind::BigG => ("G", cache.big_g(j)?),
    };
    match format {
        Format::Pretty => println!("{name}_{j} = {p}"),
        Format::Json => print_json(&json!({ "kind": name, "j": j, "poly": p }))?,
    }
    Ok(())
}

fn variety_cmd(n: u32, model: Model, split: bool, format: Format) -> Outcome {
    match (model, split) {
        (Model::D, true) => {
            let s = variety::d_split(n)?;
            match format {
                Format::Pretty => println!("D0 = {}\nD1 = {}", s.d0, s.d1),
                Format::Json => print_json(&s)?,
            }
        }
        (Model::X, true) => {
            return Err(Failure::Usage("--split applies to the D model only".into()));
        }
        (m, false) => {
            let v = match m {
                Model::X => variety::x_variety_poly(n)?,
                Model::D => variety::d_variety_poly(n)?,
            };
            match format {
                Format::Pretty => println!("{}", v.poly),
                Format::Json => print_json(&v)?,
            }
        }
    }
    Ok(())
}

fn intersect_cmd(n: u32, path: Option<PathBuf>) -> Outcome {
    let r = intersect::build_intersection_report(n)?;
    print!("{}", report::render_report_text(&r));
    if let Some(p) = path {
        std::fs::write(&p, report::to_canonical_json(&r)?)
            .map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
    }
    Ok(())
}

fn detect_cmd(n: u32, as_json: bool) -> Outcome {
    let r = trace::run_pipeline(n)?;
    if as_json {
        print_json(&r)
    } else {
        print!("{}", report::render_report_text(&r));
        Ok(())
    }
}

fn rep_cmd(n: u32, locus: usize, root: usize, branch: usize) -> Outcome {
    let rep = knotgrp::locus_rep(n, locus, root, branch)?;
    let s = knotgrp::summarize(&rep)?;
    let (p, q) = knotgrp::family_normal_form(n);
    println!("mu = {}", s.mu);
    println!("r = {}", s.r);
    println!("relator residual |A W^n - W^n B| = {:.3e}", s.relator_residual);
    println!("normal form ({p},{q}) residual |w A - B w| = {:.3e}", s.normal_form_residual);
    println!("tr s1 = {}", s.tr_s1);
    println!("tr s2 = {}", s.tr_s2);
    println!("tr longitude = {}", s.tr_longitude);
    Ok(())
}

fn verify_cmd(path: Option<PathBuf>, dump: bool, n: Option<u32>) -> Outcome {
    if dump {
        println!("{}", fixtures::to_json(&fixtures::builtin()));
        return Ok(());
    }
    let fx = match path {
        Some(p) => fixtures::load(&p)?,
        None => fixtures::builtin(),
    };
    let checks = match n {
        Some(n) if n < 2 => return Err(Error::InvalidN(n as i64).into()),
        Some(n) => verify::n_checks(n, &fx),
        None => verify::paper_checks(&fx, verify::max_n_from_env()),
    };
    let outcomes = verify::run_checks(&checks);
    print!("{}", verify::render_table(&outcomes));
    let failed: Vec<&str> = outcomes.iter().filter(|o| !o.passed).map(|o| o.name.as_str()).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(format!("failed checks: {}", failed.join(", "))))
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Cheb { kind, j, format } => cheb(kind, j, format),
        Command::Variety { n, model, split, format } => variety_cmd(n, model, split, format),
        Command::Intersect { n, json } => intersect_cmd(n, json),
        Command::Detect { n, json } => detect_cmd(n, json),
        Command::Rep { n, locus, root, branch } => rep_cmd(n, locus, root, branch),
        Command::Word { p, q } => {
            let w = knotgrp::two_bridge_word(p, q)?;
            println!("{w}");
            println!("length {}", w.len());
            Ok(())
        }
        Command::Alexander { n } => {
            let (p, d) = trace::alexander_poly(n)?;
            println!("Delta = {p}");
            println!("discriminant = {d}");
            Ok(())
        }
        Command::Slopes { n } => {
            for s in trace::boundary_slope_candidates(n)? {
                let e: Vec<String> = s.expansion.iter().map(|v| v.to_string()).collect();
                println!("{:>5}  [{}]  {}", s.slope, e.join(","), s.pattern);
            }
            Ok(())
        }
        Command::VerifyPaper { fixtures, dump_fixtures, n } => verify_cmd(fixtures, dump_fixtures, n),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(m)) => {
            eprintln!("cvtk: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Internal(m)) => {
            eprintln!("cvtk: internal error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("cvtk: {m}");
            ExitCode::from(2)
        }
    }
}
