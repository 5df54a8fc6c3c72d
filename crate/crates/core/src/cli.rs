//! The `jmcg` command line: every subcommand prints one JSON document.
//!
//! Exit status is 0 on success, 1 when a verification fails and 2 on usage
//! or parse errors.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::abgrp::IntMatrix;
use crate::cocyc::{cocycle_check, verify_cocycles, CheckMode, CocycleName};
use crate::cohom::{
    cyclic_cohomology, h2_with_cyclic_coefficients, lhs_h2_gm, mv_gamma, mv_h2_sl2, uct_homology, CyclicAction,
};
use crate::error::{Error, Result};
use crate::group::eval_word;
use crate::jacobi::{
    abelianization_of, gammaj_generators, verify_amalgam, verify_lemma1, verify_lemma6, Builtin, JacobiEl,
};
use crate::mcg::{
    element_order, eval_mcg_word, verify_claim3, verify_eq7, verify_mu, verify_sdiff_h28, verify_theorem3,
};
use crate::report::Report;
use crate::sl2::{abelianize, decompose, eval_matrix_word, render_syllables};
use crate::syntax::{parse_presentation, parse_word, Alphabet};
use crate::words::{eval_composition, eval_diffeo_word, induced_h3_matrix, verify_claim1, verify_identities};

#[derive(Parser, Debug)]
#[command(
    name = "jmcg",
    version,
    about = "Exact computations in the Jacobi group and the mapping class group of S3 x S3"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate words in one of the group models.
    Word {
        #[command(subcommand)]
        action: WordCmd,
    },
    /// Run verification suites.
    Verify(VerifyArgs),
    /// Abelianization of a presentation file or a built-in presentation.
    Abelianize {
        /// Path, or one of gammaJ, G2, G4, G6, amalgam, H28, E(m,n).
        target: String,
    },
    /// Cohomology groups.
    Cohomology {
        #[command(subcommand)]
        which: CohomCmd,
    },
    /// Cocycle identity checks.
    Cocycle {
        #[command(subcommand)]
        action: CocycleCmd,
    },
    /// Arithmetic in the mapping class group model.
    Mcg {
        #[command(subcommand)]
        action: McgCmd,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GroupKind {
    Sl2,
    Jacobi,
    Mcg,
    Diffeo,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DiffeoOrder {
    /// Rightmost map applied first, as in a product of group elements.
    Composition,
    /// Leftmost map applied first.
    Application,
}

#[derive(Subcommand, Debug)]
pub enum WordCmd {
    Eval {
        #[arg(long, value_enum)]
        group: GroupKind,
        /// Reading order for diffeomorphism words.
        #[arg(long, value_enum, default_value = "composition")]
        order: DiffeoOrder,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Lemma1,
    Lemma6,
    Amalgam,
    Claim1,
    Claim3,
    Theorem3,
    #[value(name = "sdiff-h28")]
    SdiffH28,
    Eq7,
    Cocycles,
    Mu,
    Identities,
    All,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Lemma1,
        Suite::Lemma6,
        Suite::Amalgam,
        Suite::Claim1,
        Suite::Claim3,
        Suite::Theorem3,
        Suite::SdiffH28,
        Suite::Eq7,
        Suite::Cocycles,
        Suite::Mu,
        Suite::Identities,
    ];
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum, required_unless_present = "all")]
    pub suite: Option<Suite>,
    /// Same as `--suite all`.
    #[arg(long)]
    pub all: bool,
    /// Samples for the randomized checks.
    #[arg(long, default_value_t = 500)]
    pub samples: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Subcommand, Debug)]
pub enum CohomCmd {
    /// H^2 and H^3 of SL2(Z).
    #[command(name = "sl2-h2")]
    Sl2H2,
    /// H^1, H^2, H^3 of the Jacobi group and H_2 by universal coefficients.
    Gamma,
    /// H^2 of the Jacobi group with Z/28 coefficients.
    #[command(name = "gamma-z28")]
    GammaZ28,
    /// H^2 of G_m for m in {2, 4, 6}.
    Gm {
        #[arg(long)]
        m: u32,
    },
    /// Cohomology of Z/m acting on Z^r through sigma (row-major, r^2 entries).
    Cyclic {
        #[arg(long)]
        m: usize,
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
        sigma: Vec<i64>,
    },
}

#[derive(Subcommand, Debug)]
pub enum CocycleCmd {
    Check {
        /// fm, fsl2, g, phi, omega1, omega2 or omega3.
        #[arg(long)]
        name: String,
        #[arg(long)]
        m: Option<i64>,
        #[arg(long, conflicts_with = "samples")]
        exhaustive_bound: Option<u64>,
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum McgCmd {
    /// Product of a word in Y, U, A, B, S.
    Mul {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Order of the element, searched up to the bound.
    Order {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long, default_value_t = 1000)]
        bound: u64,
    },
}

/// Exit status and the text written to stdout and stderr.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn json(value: &impl Serialize, pass: bool) -> Self {
        let text = serde_json::to_string_pretty(value).expect("serializable");
        Outcome { code: if pass { 0 } else { 1 }, stdout: text + "\n", stderr: String::new() }
    }

    fn usage(message: String) -> Self {
        Outcome { code: 2, stdout: String::new(), stderr: message }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => match dispatch(cli.command) {
            Ok(out) => out,
            Err(e) => Outcome::usage(format!("error: {e}\n")),
        },
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome::usage(text)
            }
        }
    }
}

/// Runs with the process arguments, prints, and returns the exit code.
pub fn main_entry() -> i32 {
    let out = run(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}

fn dispatch(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Word { action: WordCmd::Eval { group, order, word } } => word_eval(group, order, &word),
        Command::Verify(args) => {
            let suite = if args.all { Suite::All } else { args.suite.unwrap_or(Suite::All) };
            Ok(verify(suite, args.samples, args.seed))
        }
        Command::Abelianize { target } => {
            let g = match Builtin::parse(&target) {
                Some(_) => abelianization_of(&target)?,
                None => {
                    let text = std::fs::read_to_string(&target)
                        .map_err(|e| Error::InvalidParameter(format!("cannot read `{target}`: {e}")))?;
                    parse_presentation(&text)?.abelianization()
                }
            };
            Ok(Outcome::json(&g, true))
        }
        Command::Cohomology { which } => cohomology(which),
        Command::Cocycle { action: CocycleCmd::Check { name, m, exhaustive_bound, samples, seed } } => {
            let name = CocycleName::parse(&name, m)?;
            let mode = match (exhaustive_bound, samples) {
                (Some(b), _) => CheckMode::Exhaustive(b),
                (None, Some(trials)) => CheckMode::Sampled { trials, seed },
                (None, None) if matches!(name, CocycleName::Fm(_)) => CheckMode::Exhaustive(0),
                (None, None) => CheckMode::Sampled { trials: 500, seed },
            };
            let c = cocycle_check(name, mode);
            let mut v = serde_json::to_value(&c).expect("serializable");
            v["cocycle"] = json!(name.label());
            Ok(Outcome::json(&v, c.pass))
        }
        Command::Mcg { action } => match action {
            McgCmd::Mul { word } => Ok(Outcome::json(&eval_mcg_word(&word)?, true)),
            McgCmd::Order { word, bound } => {
                let g = eval_mcg_word(&word)?;
                Ok(Outcome::json(&json!({"element": g, "order": element_order(&g, bound), "bound": bound}), true))
            }
        },
    }
}

fn word_eval(group: GroupKind, order: DiffeoOrder, word: &str) -> Result<Outcome> {
    let v = match group {
        GroupKind::Sl2 => {
            let m = eval_matrix_word(word)?;
            let normal = render_syllables(&decompose(&m));
            json!({"matrix": m, "ab": abelianize(&m).value(), "normal_form": normal})
        }
        GroupKind::Jacobi => {
            let names = ["Y", "U", "A", "B", "y", "u", "a", "b"];
            let [y, u, a, b] = gammaj_generators();
            let gens = [y.clone(), u.clone(), a.clone(), b.clone(), y, u, a, b];
            let w = parse_word(word, &Alphabet::new(&names))?;
            json!(eval_word(&gens, &w, &JacobiEl::identity()))
        }
        GroupKind::Mcg => json!(eval_mcg_word(word)?),
        GroupKind::Diffeo => {
            let d = match order {
                DiffeoOrder::Composition => eval_composition(word)?,
                DiffeoOrder::Application => eval_diffeo_word(word)?,
            };
            let h3 = induced_h3_matrix(&d).ok();
            json!({"s": d.w1.to_string(), "t": d.w2.to_string(), "h3": h3})
        }
    };
    Ok(Outcome::json(&v, true))
}

pub fn run_suite(suite: Suite, samples: u64, seed: u64) -> Report {
    match suite {
        Suite::Lemma1 => verify_lemma1(),
        Suite::Lemma6 => verify_lemma6(),
        Suite::Amalgam => verify_amalgam(),
        Suite::Claim1 => verify_claim1(),
        Suite::Claim3 => verify_claim3(),
        Suite::Theorem3 => verify_theorem3(),
        Suite::SdiffH28 => verify_sdiff_h28(samples.clamp(1, 100), seed),
        Suite::Eq7 => verify_eq7(),
        Suite::Cocycles => verify_cocycles(samples, seed),
        Suite::Mu => verify_mu(),
        Suite::Identities => verify_identities(16, seed),
        Suite::All => unreachable!("expanded by the caller"),
    }
}

fn verify(suite: Suite, samples: u64, seed: u64) -> Outcome {
    if suite != Suite::All {
        let r = run_suite(suite, samples, seed);
        return Outcome::json(&r, r.pass);
    }
    let reports: Vec<Report> = Suite::ALL.iter().map(|&s| run_suite(s, samples, seed)).collect();
    let pass = reports.iter().all(|r| r.pass);
    let failed: Vec<&str> = reports.iter().filter(|r| !r.pass).map(|r| r.suite.as_str()).collect();
    Outcome::json(&json!({"pass": pass, "failed": failed, "suites": reports}), pass)
}

fn cohomology(which: CohomCmd) -> Result<Outcome> {
    let v: Value = match which {
        CohomCmd::Sl2H2 => json!(mv_h2_sl2()?),
        CohomCmd::Gamma => {
            let g = mv_gamma()?;
            let h_2 = uct_homology(&g.h2, &g.h3, &abelianization_of("gammaJ")?)?;
            let mut v = json!(g);
            v["H_2"] = json!(h_2);
            v
        }
        CohomCmd::GammaZ28 => json!(h2_with_cyclic_coefficients(28)?.total),
        CohomCmd::Gm { m } => json!(lhs_h2_gm(m)?),
        CohomCmd::Cyclic { m, sigma } => {
            let r = (sigma.len() as f64).sqrt().round() as usize;
            if r == 0 || r * r != sigma.len() {
                return Err(Error::Dimension(format!("--sigma needs r^2 entries, got {}", sigma.len())));
            }
            let rows: Vec<Vec<BigInt>> =
                sigma.chunks(r).map(|c| c.iter().map(|&x| BigInt::from(x)).collect()).collect();
            let act = CyclicAction::new(m, IntMatrix::from_big_rows(rows, r)?)?;
            json!(cyclic_cohomology(&act)?)
        }
    };
    Ok(Outcome::json(&v, true))
}
