//! `wittkit`: command-line access to Witt vectors, endomorphism classes, the
//! Burnside ring of `Z` and crystallographic group tools.

mod commands;
mod input;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use witt_core::Error;

const FORMATS: &str = "\
JSON formats (numbers as decimal strings):
  ring     {\"kind\":\"int\"} | {\"kind\":\"rat\"} | {\"kind\":\"mod\",\"modulus\":\"6\"}
  series   {\"ring\":R,\"trunc\":N,\"coeffs\":[\"a1\",..,\"aN\"]}  for 1 + a1 t + .. + aN t^N
  ghost    {\"ring\":R,\"trunc\":N,\"ghost\":[..]}  (likewise \"orbit\", \"binom\")
  matrix   {\"ring\":R,\"dim\":d,\"rows\":[[..],..]}
  burnside {\"orbits\":{\"2\":1,\"3\":-1}}
  group    {\"order\":q,\"table\":[[..]],\"rank\":n,\"rep\":{\"g\":[[..]]},
            \"cocycle\":{\"f,g\":[..]},\"translations\":{\"g\":[\"p/q\",..]}}

Inputs are read from the listed files, or as a stream of JSON documents
on stdin when fewer files are given. `-` names stdin explicitly.

Exit status: 0 success, 2 invalid input, 3 no integral solution.";

#[derive(Parser, Debug)]
#[command(name = "wittkit", version, about, after_help = FORMATS)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Truncated big Witt vectors, given as unit power series.
    #[command(after_help = FORMATS)]
    Witt(WittArgs),
    /// Endomorphisms of free modules.
    #[command(after_help = FORMATS)]
    Endo(EndoArgs),
    /// Virtual finite sets with an action of Z.
    #[command(after_help = FORMATS)]
    Burnside(BurnsideArgs),
    /// Crystallographic groups.
    #[command(after_help = FORMATS)]
    Crysto(CrystoArgs),
}

#[derive(Args, Debug)]
pub struct WittArgs {
    /// Truncation N: inputs are cut down to N; shorter inputs are rejected.
    #[arg(long, global = true)]
    pub trunc: Option<usize>,
    /// Algorithm for `mul`.
    #[arg(long, value_enum, default_value_t = Engine::Orbit, global = true)]
    pub engine: Engine,
    #[command(subcommand)]
    pub op: WittOp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Orbit,
    Universal,
}

#[derive(Subcommand, Debug)]
pub enum WittOp {
    /// Witt sum (series product) of two vectors.
    Add { files: Vec<String> },
    /// Additive inverse.
    Neg { files: Vec<String> },
    /// Witt product of two vectors.
    Mul { files: Vec<String> },
    /// Ghost components.
    Ghost { files: Vec<String> },
    /// Vector from ghost components; fails with exit 3 if not integral.
    Unghost { files: Vec<String> },
    /// Coordinates b_i with u = prod (1 - b_i t^i).
    Orbit { files: Vec<String> },
    /// Vector from orbit coordinates.
    Unorbit { files: Vec<String> },
    /// Coordinates c_i with u = prod (1 - t^i)^(c_i); binomial rings only.
    Binom { files: Vec<String> },
    /// Frobenius F_n, to truncation N / n.
    Frob { n: usize, files: Vec<String> },
    /// Verschiebung V_n.
    Versch { n: usize, files: Vec<String> },
    /// Exterior power lambda_n, to truncation N / n.
    Lambda { n: usize, files: Vec<String> },
}

#[derive(Args, Debug)]
pub struct EndoArgs {
    /// Truncation of `charpoly` output; defaults to the dimension.
    #[arg(long, global = true)]
    pub trunc: Option<usize>,
    #[command(subcommand)]
    pub op: EndoOp,
}

#[derive(Subcommand, Debug)]
pub enum EndoOp {
    /// det(1 - t f) as a series.
    Charpoly { files: Vec<String> },
    /// Traces of f, f^2, .., f^N as a ghost vector.
    Traces { n: usize, files: Vec<String> },
    /// Tensor product of two matrices.
    Tensor { files: Vec<String> },
    /// Companion matrix of the polynomial 1 + a1 t + .. + ak t^k, given as a
    /// series.
    Companion { files: Vec<String> },
}

#[derive(Args, Debug)]
pub struct BurnsideArgs {
    #[command(subcommand)]
    pub op: BurnsideOp,
}

#[derive(Subcommand, Debug)]
pub enum BurnsideOp {
    /// Fixed-point counts |X^(kZ)| for k = 1..N.
    Ghost { n: usize, files: Vec<String> },
    /// Product of two virtual sets.
    Mul { files: Vec<String> },
    /// Restriction to nZ.
    Frob { n: u64, files: Vec<String> },
    /// Induction from nZ.
    Versch { n: u64, files: Vec<String> },
    /// Image in the Witt ring over Z at truncation N.
    Embed { n: usize, files: Vec<String> },
    /// Virtual set with the given fixed-point counts; exit 3 if none exists.
    Invert { files: Vec<String> },
}

#[derive(Args, Debug)]
pub struct CrystoArgs {
    #[command(subcommand)]
    pub op: CrystoOp,
}

#[derive(Subcommand, Debug)]
pub enum CrystoOp {
    /// Short linear form (S, T) whose kernel mod p is the line through
    /// (gx, gy).
    Lattice {
        p: u64,
        #[arg(allow_hyphen_values = true)]
        gx: i64,
        #[arg(allow_hyphen_values = true)]
        gy: i64,
    },
    /// s-expansive endomorphism and, with translations, the equivariant
    /// affine map x -> s x + u.
    Expansive {
        file: String,
        #[arg(allow_hyphen_values = true)]
        s: String,
    },
    /// H^k of the holonomy group with coefficients in the lattice.
    Cohomology { file: String, k: usize },
    /// Smallest prime p <= bound with p = 3 mod 4 and p, p - 1 prime to the
    /// odd part of the order.
    Prime { order: u64, bound: u64 },
    /// Basis of the lattice vectors fixed by the holonomy.
    Fixed { file: String },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NonIntegral { .. } | Error::NoIntegralSolution(_) | Error::NotFound(_) => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("wittkit: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
