//! Command-line front end. [`run`] returns the process exit code: `0` for
//! success or EQUAL, `1` for DISTINCT, `2` for usage and input errors.

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::free_algebra::{enumerate_atoms, export_tree, stats, TreeFormat};
use crate::models::{oracle_distinguish, witness};
use crate::normal_forms::{normalize, NormalForm};
use crate::partitions::{PointedPartition, Universe};
use crate::terms::{self, elementary_term, evaluate, random};
use crate::Error;

const DEFAULT_SEED: u64 = 0x5b1a;

#[derive(Parser, Debug)]
#[command(
    name = "sbia",
    version,
    about = "Free left-handed skew Boolean intersection algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Vars {
    /// Number of generators x1 … xN.
    #[arg(long = "vars", short = 'n', value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the normal form of a term.
    Normalize {
        #[command(flatten)]
        vars: Vars,
        term: String,
        #[arg(long)]
        json: bool,
        /// Print the normal form as a join of elementary terms.
        #[arg(long, conflicts_with = "json")]
        term_form: bool,
    },
    /// Decide whether two terms are equal via normal forms.
    Eq {
        #[command(flatten)]
        vars: Vars,
        lhs: String,
        rhs: String,
    },
    /// Decide whether two terms are equal by evaluating in (N+1)_L.
    Oracle {
        #[command(flatten)]
        vars: Vars,
        lhs: String,
        rhs: String,
    },
    /// List the atoms as pointed partitions.
    Atoms {
        #[command(flatten)]
        vars: Vars,
        #[arg(long)]
        count_only: bool,
    },
    /// Print the counting data of the free algebra.
    Stats {
        #[command(flatten)]
        vars: Vars,
        #[arg(long)]
        json: bool,
    },
    /// Split an atom over a larger generator set.
    Decompose {
        #[command(flatten)]
        vars: Vars,
        #[arg(long)]
        target: u32,
        pointed: String,
    },
    /// Show the witness assignment of an atom and its value.
    Witness {
        pointed: String,
        #[arg(long = "vars", short = 'n')]
        n: Option<u32>,
    },
    /// Export the partition tree.
    Tree {
        #[arg(long)]
        depth: u32,
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Compare normal-form equality with the oracle on random term pairs.
    Selfcheck {
        #[command(flatten)]
        vars: Vars,
        #[arg(long, default_value_t = 200)]
        pairs: u32,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

enum Outcome {
    Ok,
    Distinct,
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::Distinct) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn parse_term(text: &str) -> Result<terms::Term, Error> {
    terms::parse(text)
}

fn io(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome, Error> {
    match cmd {
        Command::Normalize {
            vars,
            term,
            json,
            term_form,
        } => {
            let nf = normalize(&parse_term(&term)?, Universe::new(vars.n))?;
            if json {
                writeln!(out, "{}", nf.to_json()).map_err(io)?;
            } else if term_form {
                writeln!(out, "{}", nf.to_term()).map_err(io)?;
            } else {
                writeln!(out, "{nf}").map_err(io)?;
            }
            Ok(Outcome::Ok)
        }
        Command::Eq { vars, lhs, rhs } => {
            let u = Universe::new(vars.n);
            let a = normalize(&parse_term(&lhs)?, u)?;
            let b = normalize(&parse_term(&rhs)?, u)?;
            verdict(out, a == b)
        }
        Command::Oracle { vars, lhs, rhs } => {
            if vars.n > 4 {
                let _ = writeln!(
                    err,
                    "warning: the oracle evaluates {}^{} assignments per term",
                    vars.n + 1,
                    vars.n
                );
            }
            let found = oracle_distinguish(&parse_term(&lhs)?, &parse_term(&rhs)?, vars.n)?;
            if let Some(a) = &found {
                let _ = writeln!(err, "distinguished by {a}");
            }
            verdict(out, found.is_none())
        }
        Command::Atoms { vars, count_only } => {
            let atoms = enumerate_atoms(vars.n);
            if count_only {
                writeln!(out, "{}", atoms.len()).map_err(io)?;
            } else {
                for a in atoms {
                    writeln!(out, "{a}").map_err(io)?;
                }
            }
            Ok(Outcome::Ok)
        }
        Command::Stats { vars, json } => {
            let s = stats(vars.n)?;
            if json {
                writeln!(out, "{}", s.to_json()).map_err(io)?;
            } else {
                writeln!(out, "{s}").map_err(io)?;
            }
            Ok(Outcome::Ok)
        }
        Command::Decompose {
            vars,
            target,
            pointed,
        } => {
            let pp = PointedPartition::parse(&pointed, Universe::new(vars.n))?;
            let nf = NormalForm::atom(&pp)?.extend_support(Universe::new(target))?;
            for clause in nf.clauses() {
                writeln!(out, "{clause}").map_err(io)?;
            }
            Ok(Outcome::Ok)
        }
        Command::Witness { pointed, n } => {
            let pp = match n {
                Some(n) => PointedPartition::parse(&pointed, Universe::new(n))?,
                None => PointedPartition::parse_inferred(&pointed)?,
            };
            let (model, assignment) = witness(&pp);
            let term = elementary_term(&pp);
            let value = evaluate(&term, &model, &assignment)?;
            writeln!(out, "model {model}").map_err(io)?;
            writeln!(out, "term {term}").map_err(io)?;
            writeln!(out, "assignment {assignment}").map_err(io)?;
            writeln!(out, "value {value}").map_err(io)?;
            Ok(Outcome::Ok)
        }
        Command::Tree { depth, dot, json } => {
            if depth > 7 {
                let _ = writeln!(err, "warning: depth {depth} produces a very large tree");
            }
            let format = if json && !dot {
                TreeFormat::Json
            } else {
                TreeFormat::Dot
            };
            write!(out, "{}", export_tree(depth, format)).map_err(io)?;
            if format == TreeFormat::Json {
                writeln!(out).map_err(io)?;
            }
            Ok(Outcome::Ok)
        }
        Command::Selfcheck { vars, pairs, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let u = Universe::new(vars.n);
            let mut disagreements = 0;
            let mut equal = 0;
            for i in 0..pairs {
                let lhs = random::random_term(&mut rng, vars.n, 4);
                let rhs = if i % 2 == 0 {
                    random::equivalent_variant(&mut rng, &lhs, vars.n, 3)
                } else {
                    random::random_term(&mut rng, vars.n, 4)
                };
                let by_nf = normalize(&lhs, u)? == normalize(&rhs, u)?;
                let by_oracle = oracle_distinguish(&lhs, &rhs, vars.n)?.is_none();
                equal += u32::from(by_nf);
                if by_nf != by_oracle {
                    disagreements += 1;
                    let _ = writeln!(err, "disagreement: {lhs}  vs  {rhs}");
                }
            }
            writeln!(
                out,
                "pairs {pairs} equal {equal} disagreements {disagreements} seed {seed}"
            )
            .map_err(io)?;
            Ok(if disagreements == 0 {
                Outcome::Ok
            } else {
                Outcome::Distinct
            })
        }
    }
}

fn verdict(out: &mut dyn Write, equal: bool) -> Result<Outcome, Error> {
    if equal {
        writeln!(out, "EQUAL").map_err(io)?;
        Ok(Outcome::Ok)
    } else {
        writeln!(out, "DISTINCT").map_err(io)?;
        Ok(Outcome::Distinct)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("sbia").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn eq_and_distinct() {
        assert_eq!(call(&["eq", "--vars", "2", "x1 ^ x2 ^ x1", "x1 ^ x2"]).0, 0);
        let (code, out, _) = call(&["eq", "--vars", "2", "x1 ^ x2", "x2 ^ x1"]);
        assert_eq!((code, out.trim()), (1, "DISTINCT"));
    }

    #[test]
    fn parse_errors_exit_two() {
        let (code, _, err) = call(&["normalize", "--vars", "2", "x1 +"]);
        assert_eq!(code, 2);
        assert!(err.contains("at 3"), "{err}");
        assert_eq!(call(&["frobnicate"]).0, 2);
    }

    #[test]
    fn decompose_lists_clauses() {
        let (code, out, _) = call(&["decompose", "--vars", "2", "--target", "3", "1|2*0"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines, ["1|2*0", "13|2*0", "1|23*0", "1|2|3*0"]);
    }
}
