use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use roundtwin::groups::{mu_prime, verify_presentation, AnnularWord, CactusSolver, CactusWord, Presentation, TwinWord};
use roundtwin::{
    betti_agree, collapse, enumerate_cells, euler_consistency, expected_betti, known_facts, ComplexError,
    CubicalComplex, GroupError, HomologyError, HomologyReport, SpaceKind, SpaceSpec, Strategy,
};
use serde_json::json;
use thiserror::Error;

#[derive(Parser)]
#[command(name = "roundtwin", version, about = "Cubical complexes and word problems for round twin groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cell counts, or the cells of one dimension.
    Cells {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Integral homology report.
    Homology {
        #[command(flatten)]
        space: OptionalSpaceArgs,
        /// Compare against the catalog; exit 1 on a mismatch.
        #[arg(long)]
        check: bool,
        #[arg(long)]
        json: bool,
        /// Every space in the catalog, in catalog order.
        #[arg(long, conflicts_with_all = ["space", "n"])]
        all: bool,
    },
    /// Greedy free-face collapse.
    Collapse {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long)]
        json: bool,
    },
    /// Euler characteristic identity between round and line spaces.
    Euler {
        #[arg(long, value_parser = clap::value_parser!(u64).range(3..))]
        n: u64,
        #[arg(long)]
        json: bool,
    },
    /// Operations on words.
    Word(WordArgs),
    /// Relator audit of a presentation.
    Verify {
        #[arg(long)]
        group: Group,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = roundtwin::groups::DEFAULT_MAX_NODES)]
        max_nodes: usize,
    },
    /// Known Betti numbers as JSON.
    Catalog,
}

#[derive(Args)]
struct SpaceArgs {
    #[arg(long, value_enum)]
    space: Kind,
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct OptionalSpaceArgs {
    #[arg(long, value_enum, required_unless_present = "all")]
    space: Option<Kind>,
    #[arg(long, required_unless_present = "all")]
    n: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Round,
    Line,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Group {
    Twin,
    Cactus,
    Annular,
}

#[derive(Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["trivial", "equal", "perm", "kappa", "mu"])))]
struct WordArgs {
    #[arg(long)]
    group: Group,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    trivial: bool,
    #[arg(long)]
    equal: bool,
    #[arg(long)]
    perm: bool,
    #[arg(long)]
    kappa: bool,
    #[arg(long)]
    mu: bool,
    #[arg(long, default_value_t = roundtwin::groups::DEFAULT_MAX_NODES)]
    max_nodes: usize,
    #[arg(required = true, num_args = 1..=2)]
    words: Vec<String>,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("{0}")]
    Check(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Check(_) | CliError::Homology(_) => 1,
            CliError::Group(GroupError::BudgetExceeded { .. }) => 3,
            CliError::Usage(_) | CliError::Complex(_) | CliError::Group(_) => 2,
        }
    }
}

fn spec(kind: Kind, n: usize) -> Result<SpaceSpec, CliError> {
    let kind = match kind {
        Kind::Round => SpaceKind::Round,
        Kind::Line => SpaceKind::Line,
    };
    Ok(SpaceSpec::new(kind, n)?)
}

fn to_json<T: serde::Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("output types serialize")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    match run(cli.command, &mut out) {
        Ok(()) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            print!("{out}");
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(command: Command, out: &mut String) -> Result<(), CliError> {
    match command {
        Command::Cells { space, dim, json } => cells(spec(space.space, space.n)?, dim, json, out),
        Command::Homology {
            space,
            check,
            json,
            all,
        } => {
            let spaces = if all {
                known_facts().iter().map(|f| f.space).collect()
            } else {
                let (kind, n) = space.space.zip(space.n).expect("clap enforces both");
                vec![spec(kind, n)?]
            };
            homology(&spaces, check, json, out)
        }
        Command::Collapse { space, json } => {
            let complex = CubicalComplex::build(spec(space.space, space.n)?);
            let result = collapse(&complex, Strategy::GreedyDescending);
            if json {
                out.push_str(&to_json(&result.to_json()));
                out.push('\n');
            } else {
                out.push_str(&format!("before: {}\n", join(&complex.counts())));
                out.push_str(&format!("after: {}\n", join(&result.complex.counts())));
                out.push_str(&format!("steps: {}\n", result.log.len()));
            }
            Ok(())
        }
        Command::Euler { n, json } => {
            let c = euler_consistency(n as usize);
            if json {
                let value = json!({ "n": c.n, "round": c.round, "line_prev": c.line_prev,
                    "line_prev2": c.line_prev2, "rhs": c.rhs(), "holds": c.holds() });
                out.push_str(&to_json(&value));
                out.push('\n');
            } else {
                out.push_str(&format!(
                    "chi(Q{n}) = {}\nchi(M{}) - {}*chi(M{}) = {} - {}*({}) = {}\nholds: {}\n",
                    c.round,
                    n - 1,
                    n - 1,
                    n - 2,
                    c.line_prev,
                    n - 1,
                    c.line_prev2,
                    c.rhs(),
                    c.holds()
                ));
            }
            if c.holds() {
                Ok(())
            } else {
                Err(CliError::Check(format!("Euler identity fails for n = {n}")))
            }
        }
        Command::Word(args) => word(args, out),
        Command::Verify { group, n, max_nodes } => {
            let presentation = match group {
                Group::Twin => Presentation::Twin,
                Group::Cactus => Presentation::Cactus,
                Group::Annular => Presentation::Annular,
            };
            let report = verify_presentation(presentation, n, &CactusSolver::new(max_nodes))?;
            for c in &report.checks {
                let solver = match c.solver_ok {
                    Some(true) => "trivial",
                    Some(false) => "NOT TRIVIAL",
                    None => "-",
                };
                let perm = if c.permutation_ok { "identity" } else { "NOT IDENTITY" };
                out.push_str(&format!("{}\t{perm}\t{solver}\n", c.relator));
            }
            let failures = report.failures().len();
            out.push_str(&format!("relators: {}, failures: {failures}\n", report.checks.len()));
            if failures == 0 {
                Ok(())
            } else {
                Err(CliError::Check(format!("{failures} relators failed")))
            }
        }
        Command::Catalog => {
            out.push_str(&to_json(known_facts()));
            out.push('\n');
            Ok(())
        }
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn cells(space: SpaceSpec, dim: Option<usize>, json: bool, out: &mut String) -> Result<(), CliError> {
    match (dim, json) {
        (Some(k), false) => {
            for cell in enumerate_cells(space, k) {
                out.push_str(&format!("{cell}\n"));
            }
        }
        (Some(k), true) => {
            let cells: Vec<String> = enumerate_cells(space, k).iter().map(ToString::to_string).collect();
            out.push_str(&to_json(&json!({ "space": space.kind(), "n": space.n(), "dim": k, "cells": cells })));
            out.push('\n');
        }
        (None, false) => {
            let counts: Vec<usize> = (0..=space.max_dim()).map(|k| enumerate_cells(space, k).len()).collect();
            let top = counts.iter().rposition(|&c| c > 0).map_or(0, |i| i + 1);
            out.push_str(&join(&counts[..top]));
            out.push('\n');
        }
        (None, true) => {
            out.push_str(&to_json(&CubicalComplex::build(space).to_json()));
            out.push('\n');
        }
    }
    Ok(())
}

fn homology(spaces: &[SpaceSpec], check: bool, json: bool, out: &mut String) -> Result<(), CliError> {
    let reports: Vec<Result<HomologyReport, HomologyError>> = std::thread::scope(|scope| {
        let handles: Vec<_> = spaces
            .iter()
            .map(|&space| scope.spawn(move || HomologyReport::compute(&CubicalComplex::build(space))))
            .collect();
        handles.into_iter().map(|h| h.join().expect("homology worker panicked")).collect()
    });
    let reports = reports.into_iter().collect::<Result<Vec<_>, _>>()?;
    let mut problems = Vec::new();
    let mut verdicts = Vec::new();
    for (space, report) in spaces.iter().zip(&reports) {
        if !report.is_torsion_free() {
            problems.push(format!("{space} has torsion {:?}", report.torsion));
        }
        let verdict = match expected_betti(*space) {
            _ if !check => None,
            None => Some("unknown".to_string()),
            Some(expected) if betti_agree(expected, &report.betti) => Some("ok".to_string()),
            Some(expected) => {
                problems.push(format!("{space}: computed {:?}, catalog {:?}", report.betti, expected));
                Some(format!("mismatch (catalog {})", join(expected)))
            }
        };
        verdicts.push(verdict);
    }
    if json {
        if spaces.len() == 1 && !reports.is_empty() {
            out.push_str(&to_json(&reports[0]));
        } else {
            out.push_str(&to_json(&reports));
        }
        out.push('\n');
    } else {
        for (i, (report, verdict)) in reports.iter().zip(&verdicts).enumerate() {
            if i > 0 {
                out.push('\n');
            }
            let torsion = if report.is_torsion_free() {
                "none".to_string()
            } else {
                format!("{:?}", report.torsion)
            };
            out.push_str(&format!(
                "space: {}\nn: {}\nbetti: {}\ntorsion: {torsion}\neuler: {}\n",
                report.space.name(),
                report.n,
                join(&report.betti),
                report.euler
            ));
            if let Some(v) = verdict {
                out.push_str(&format!("check: {v}\n"));
            }
        }
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(CliError::Check(problems.join("; ")))
    }
}

enum Parsed {
    Twin(TwinWord),
    Cactus(CactusWord),
    Annular(AnnularWord),
}

fn parse_word(group: Group, n: usize, text: &str) -> Result<Parsed, CliError> {
    Ok(match group {
        Group::Twin => Parsed::Twin(TwinWord::parse(n, text)?),
        Group::Cactus => Parsed::Cactus(CactusWord::parse(n, text)?),
        Group::Annular => Parsed::Annular(AnnularWord::parse(n, text)?),
    })
}

fn word(args: WordArgs, out: &mut String) -> Result<(), CliError> {
    let solver = CactusSolver::new(args.max_nodes);
    let expected_words = if args.equal { 2 } else { 1 };
    if args.words.len() != expected_words {
        return Err(CliError::Usage(format!("expected {expected_words} word(s), got {}", args.words.len())));
    }
    let words = args
        .words
        .iter()
        .map(|w| parse_word(args.group, args.n, w))
        .collect::<Result<Vec<_>, _>>()?;
    let undecided = |out: &mut String, key: &str, err: GroupError| {
        if matches!(err, GroupError::BudgetExceeded { .. }) {
            out.push_str(&format!("{key}: undecided\n"));
        }
        CliError::Group(err)
    };
    if args.trivial {
        let verdict = match &words[0] {
            Parsed::Twin(w) => solver.twin_is_trivial(w),
            Parsed::Cactus(w) => solver.is_trivial(w),
            Parsed::Annular(_) => return Err(CliError::Usage("no word solver for annular words".into())),
        };
        let verdict = verdict.map_err(|e| undecided(out, "trivial", e))?;
        out.push_str(&format!("trivial: {verdict}\n"));
    } else if args.equal {
        let verdict = match (&words[0], &words[1]) {
            (Parsed::Twin(u), Parsed::Twin(v)) => solver.twin_equal(u, v),
            (Parsed::Cactus(u), Parsed::Cactus(v)) => solver.equal(u, v),
            _ => return Err(CliError::Usage("no word solver for annular words".into())),
        };
        let verdict = verdict.map_err(|e| undecided(out, "equal", e))?;
        out.push_str(&format!("equal: {verdict}\n"));
    } else if args.perm {
        let p = match &words[0] {
            Parsed::Twin(w) => w.permutation(),
            Parsed::Cactus(w) => w.permutation(),
            Parsed::Annular(w) => w.permutation(),
        };
        out.push_str(&format!("perm: {p}\npure: {}\n", p.is_identity()));
    } else if args.kappa {
        let Parsed::Twin(w) = &words[0] else {
            return Err(CliError::Usage("--kappa takes a twin word".into()));
        };
        out.push_str(&format!("kappa: {}\n", w.kappa()?));
    } else {
        let Parsed::Cactus(w) = &words[0] else {
            return Err(CliError::Usage("--mu takes a cactus word".into()));
        };
        let full = roundtwin::mu(w)?;
        let (prime, k) = mu_prime(w)?;
        out.push_str(&format!("mu: {full}\nmu_prime: {prime}\nk: {k}\nexpanded: {}\n", full.expand()));
    }
    Ok(())
}
