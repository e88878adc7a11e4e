//! `qgw`: command-line front end to the quantum group workbench.

mod commands;
mod config;
mod expr;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use config::{Format, Settings};
use qgw_core::Error;

#[derive(Parser, Debug)]
#[command(name = "qgw", version, about = "Exact computations for SU_q(2), finite Hopf algebras and K-theory")]
struct Cli {
    /// Degree bound; overrides the verb's default.
    #[arg(long, global = true)]
    degree: Option<String>,
    /// Spin bound, e.g. `3/2`.
    #[arg(long, global = true)]
    spin: Option<String>,
    /// Specialize q to this rational number.
    #[arg(long, global = true)]
    q: Option<String>,
    /// `json` or `text`.
    #[arg(long, global = true)]
    format: Option<String>,
    /// `key = value` settings file.
    #[arg(long, global = true, env = "QGW_CONFIG")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// PBW normal form of an expression in a, as, g, gs.
    Normalize { expr: String },
    /// Hopf axioms of C[SU_q(2)] on all words up to the degree bound.
    HopfCheck,
    /// Haar state of an expression.
    Haar { expr: String },
    /// Matrix coefficients of the spin-l corepresentation.
    Corep {
        #[arg(value_name = "SPIN")]
        l: String,
    },
    /// Fusion of two spins, cross-checked against intertwiner dimensions.
    Fuse { l1: String, l2: String },
    /// Isotypic profile and generators of the line bundle of weight k.
    Podles {
        #[arg(allow_negative_numbers = true)]
        k: i64,
    },
    /// Yetter-Drinfeld compatibility of an adjoint action.
    YdCheck {
        /// Zoo name or FinHopf JSON path; SU_q(2) when omitted.
        #[arg(long)]
        hopf: Option<String>,
    },
    /// Drinfeld codouble of a finite-dimensional Hopf algebra.
    Double {
        #[arg(long)]
        hopf: String,
    },
    /// Braided tensor product of the adjoint Yetter-Drinfeld algebra with the regular comodule algebra.
    Braid {
        #[arg(long)]
        hopf: Option<String>,
        /// Use the Z2-graded function algebra over C[Z2].
        #[arg(long)]
        graded: bool,
        /// Give the second factor the trivial coaction.
        #[arg(long)]
        trivial: bool,
    },
    /// Smith normal form of an integer matrix (JSON rows, or @file).
    Snf { matrix: String },
    /// K-groups from the boundary map of a five-term sequence.
    Ktheory {
        #[arg(long)]
        boundary: String,
    },
    /// Pimsner-Voiculescu sequence for a crossed product by Z.
    Pv {
        #[arg(long)]
        alpha0: String,
        #[arg(long)]
        alpha1: Option<String>,
    },
    /// Relations of the quantum automorphism algebra of M_n.
    Qaut {
        n: usize,
        /// Include every relation in the output.
        #[arg(long)]
        relations: bool,
        /// Also test the second multiplicativity family against the derived relations.
        #[arg(long)]
        family2: bool,
    },
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::DivisionByZero => "division_by_zero",
        Error::Pole { .. } => "pole",
        Error::Domain(_) => "domain",
        Error::Syntax { .. } => "syntax",
        Error::UnknownSymbol { .. } => "unknown_symbol",
        Error::ResourceBound(_) => "resource_bound",
        Error::Shape(_) => "shape",
        Error::Precondition(_) => "precondition",
        Error::Verification(_) => "verification",
    }
}

fn fail(kind: &str, message: String, code: u8) -> ExitCode {
    let doc = json!({"error": {"kind": kind, "message": message}});
    println!("{}", serde_json::to_string_pretty(&doc).expect("plain data serializes"));
    ExitCode::from(code)
}

fn settings(cli: &Cli) -> qgw_core::Result<Settings> {
    let env: BTreeMap<String, String> = std::env::vars().filter(|(k, _)| k.starts_with("QGW_")).collect();
    let mut flags = BTreeMap::new();
    for (key, v) in [("degree", &cli.degree), ("spin", &cli.spin), ("q", &cli.q), ("format", &cli.format)] {
        if let Some(v) = v {
            flags.insert(key, v.clone());
        }
    }
    Settings::resolve(cli.config.as_deref(), &env, &flags)
}

fn dispatch(verb: &Verb, s: &Settings) -> qgw_core::Result<commands::Report> {
    match verb {
        Verb::Normalize { expr } => commands::normalize(expr, s),
        Verb::HopfCheck => commands::hopf_check(s),
        Verb::Haar { expr } => commands::haar(expr, s),
        Verb::Corep { l } => commands::corep(l, s),
        Verb::Fuse { l1, l2 } => commands::fuse(l1, l2, s),
        Verb::Podles { k } => commands::podles(*k, s),
        Verb::YdCheck { hopf } => commands::yd_check(hopf.as_deref(), s),
        Verb::Double { hopf } => commands::double(hopf),
        Verb::Braid { hopf, graded, trivial } => commands::braid(hopf.as_deref(), *graded, *trivial),
        Verb::Snf { matrix } => commands::snf(matrix),
        Verb::Ktheory { boundary } => commands::ktheory(boundary),
        Verb::Pv { alpha0, alpha1 } => commands::pv(alpha0, alpha1.as_deref()),
        Verb::Qaut { n, relations, family2 } => commands::qaut(*n, *relations, *family2, s),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => return fail("usage", e.to_string().trim_end().to_string(), 1),
    };
    let s = match settings(&cli) {
        Ok(s) => s,
        Err(e) => return fail(error_kind(&e), e.to_string(), 1),
    };
    match dispatch(&cli.verb, &s) {
        Ok(r) => {
            match s.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&r.json).expect("plain data serializes")),
                Format::Text => println!("{}", r.text),
            }
            if r.verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e @ Error::Verification(_)) => fail(error_kind(&e), e.to_string(), 2),
        Err(e) => fail(error_kind(&e), e.to_string(), 1),
    }
}
