//! The `permeq` command line.
//!
//! Exit codes: 0 success, 2 input error, 3 guard exceeded, 4 internal
//! verification failure.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::certifier::{certify_all, Certificate, Failure};
use crate::constructor::{b1_construct, b2_parameters, b2_solution, transport_solution};
use crate::enumerator::{
    solve_conjugate, solve_star, square_root_obstruction, square_roots_all, Guards, Strategy,
};
use crate::error::{Error, Result};
use crate::perm::{format_cycles, parse_cycles_inferred, Permutation};
use crate::survey::{survey, write_survey, SurveyFormat};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_GUARD: i32 = 3;
pub const EXIT_VERIFICATION: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "permeq",
    version,
    about = "Solve and certify α∘y∘α⁻¹ = y² in S_n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Find every solution of an equation for a given alpha.
    Solve {
        /// alpha in cycle notation, e.g. "(1,2,3)(4,5)".
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        /// Degree; defaults to the largest point mentioned.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long = "eq", value_enum, default_value_t = EqArg::Starstar)]
        eq: EqArg,
        /// Exponent in α∘y∘α⁻¹ = y^k.
        #[arg(long, default_value_t = 2)]
        k: u32,
        #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
        strategy: StrategyArg,
        #[arg(long)]
        json: bool,
    },
    /// Print triviality certificates.
    Certify {
        #[arg(long, conflicts_with = "cyclic", required_unless_present = "cyclic")]
        alpha: Option<String>,
        #[arg(long, requires = "alpha")]
        n: Option<usize>,
        /// Certify the n-cycle (every applicable certificate).
        #[arg(long)]
        cyclic: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Build the explicit n-cycle with a solution made of p-cycles.
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        /// Also build the cyclic-case solution with this parameter s on (1,…,n).
        #[arg(long)]
        s: Option<usize>,
        /// Transport the solution to this alpha.
        #[arg(long)]
        target: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// All square roots of sigma.
    Roots {
        sigma: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Solution counts for every cycle type of S_n, written to a file.
    Survey {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        /// Worker threads; 0 uses all cores.
        #[arg(long, default_value_t = 0)]
        workers: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EqArg {
    /// α∘x = x∘α∘x∘α
    Star,
    /// α∘y∘α⁻¹ = y^k
    Starstar,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StrategyArg {
    Naive,
    Pruned,
    Constructed,
    Auto,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Naive => Strategy::Naive,
            StrategyArg::Pruned => Strategy::Pruned,
            StrategyArg::Constructed => Strategy::Constructed,
            StrategyArg::Auto => Strategy::Auto,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::GuardExceeded { .. } => EXIT_GUARD,
        Error::Verification(_) => EXIT_VERIFICATION,
        _ => EXIT_INPUT,
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes())
        .and_then(|_| {
            if text.ends_with('\n') {
                Ok(())
            } else {
                out.write_all(b"\n")
            }
        })
        .map_err(|e| Error::Io {
            path: "<stdout>".into(),
            reason: e.to_string(),
        })
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value)
        .map_err(|e| Error::Verification(format!("JSON serialization failed: {e}")))
}

fn execute(command: Command, out: &mut dyn Write) -> Result<()> {
    match command {
        Command::Solve {
            alpha,
            n,
            eq,
            k,
            strategy,
            json,
        } => {
            let guards = Guards::from_env()?;
            let alpha = parse_cycles_inferred(&alpha, n)?;
            let set = match eq {
                EqArg::Starstar => solve_conjugate(&alpha, k, strategy.into(), &guards)?,
                EqArg::Star if k == 2 => solve_star(&alpha, strategy.into(), &guards)?,
                EqArg::Star => {
                    return Err(Error::InvalidArgument(
                        "--k only applies to --eq starstar".into(),
                    ))
                }
            };
            if json {
                emit(out, &to_json(&set)?)
            } else {
                emit(out, &set.to_table())
            }
        }
        Command::Certify {
            alpha,
            n,
            cyclic,
            json,
        } => {
            let certs = match (alpha, cyclic) {
                (_, Some(n)) => {
                    if n == 0 {
                        return Err(Error::InvalidArgument("--cyclic needs n >= 1".into()));
                    }
                    certify_all(&Permutation::from_cycles(
                        n,
                        &[(1..=n).collect::<Vec<_>>()],
                    )?)
                }
                (Some(text), None) => certify_all(&parse_cycles_inferred(&text, n)?),
                (None, None) => {
                    return Err(Error::InvalidArgument("give --alpha or --cyclic".into()))
                }
            };
            for c in &certs {
                c.replay()?;
            }
            if json {
                emit(out, &to_json(&certs)?)
            } else {
                emit(out, &certificates_text(&certs))
            }
        }
        Command::Construct {
            n,
            p,
            s,
            target,
            json,
        } => {
            let inst = b1_construct(n, p)?;
            let mut report = json!({
                "n": inst.n,
                "p": inst.p,
                "q": inst.q,
                "beta": inst.beta,
                "y": inst.y,
                "verified": true,
            });
            let mut text = format!(
                "n = {}, p = {}, q = {}\nbeta = {}\ny = {}\nverified: beta∘y = y²∘beta, beta is one {}-cycle, y has {} {}-cycles\n",
                inst.n, inst.p, inst.q, inst.beta, inst.y, inst.n, inst.q, inst.p
            );
            if let Some(s) = s {
                let params = b2_parameters(n)?;
                if params.p != p {
                    return Err(Error::Precondition(format!(
                        "the cyclic construction for n = {n} uses p = {}, not {p}",
                        params.p
                    )));
                }
                let alpha = Permutation::from_cycles(n, &[(1..=n).collect::<Vec<_>>()])?;
                let y = b2_solution(&alpha, 1, s)?;
                text.push_str(&format!(
                    "cyclic solution for {alpha}, a = 1, s = {s}: {y}\n"
                ));
                report["s"] = json!(s);
                report["cyclic"] = json!({ "alpha": alpha, "a": 1, "y": y });
            }
            if let Some(target) = target {
                let alpha = parse_cycles_inferred(&target, Some(n))?;
                let z = transport_solution(&inst.beta, &inst.y, &alpha)?;
                text.push_str(&format!("transported to {alpha}: {z}\n"));
                report["target"] = json!(alpha);
                report["transported"] = json!(z);
            }
            if json {
                emit(out, &to_json(&report)?)
            } else {
                emit(out, &text)
            }
        }
        Command::Roots { sigma, n, json } => {
            let guards = Guards::from_env()?;
            let sigma = parse_cycles_inferred(&sigma, n)?;
            let roots = square_roots_all(&sigma, &guards)?;
            let obstruction = square_root_obstruction(&sigma);
            let explanation = obstruction.map(|(len, count)| {
                format!(
                    "no square root: {count} cycle(s) of even length {len}; the square of any permutation has an even number of cycles of each even length"
                )
            });
            if json {
                let report = json!({
                    "sigma": sigma,
                    "exists": obstruction.is_none(),
                    "obstruction": obstruction.map(|(length, count)| json!({"length": length, "count": count})),
                    "count": roots.len(),
                    "roots": roots.solutions(),
                });
                emit(out, &to_json(&report)?)
            } else {
                let mut text = format!("{} square root(s) of {sigma}\n", roots.len());
                for r in roots.iter() {
                    text.push_str(&format_cycles(r));
                    text.push('\n');
                }
                if let Some(e) = explanation {
                    text.push_str(&e);
                    text.push('\n');
                }
                emit(out, &text)
            }
        }
        Command::Survey {
            n,
            output,
            format,
            workers,
        } => {
            let guards = Guards::from_env()?;
            let rows = survey(n, workers, &guards)?;
            let format = match format {
                FormatArg::Json => SurveyFormat::Json,
                FormatArg::Csv => SurveyFormat::Csv,
            };
            let io_err = |e: std::io::Error| Error::Io {
                path: output.display().to_string(),
                reason: e.to_string(),
            };
            let file = File::create(&output).map_err(io_err)?;
            let mut writer = BufWriter::new(file);
            write_survey(&rows, format, &mut writer)?;
            writer.flush().map_err(io_err)?;
            let nontrivial = rows.iter().filter(|r| r.solution_count > 1).count();
            emit(
                out,
                &format!(
                    "wrote {} rows for n = {n} to {} ({nontrivial} types with non-trivial solutions)",
                    rows.len(),
                    output.display()
                ),
            )
        }
    }
}

fn certificates_text(certs: &[Certificate]) -> String {
    let mut text = String::new();
    for c in certs {
        text.push_str(&format!(
            "{:?}: {:?} for type {:?} (n = {})\n",
            c.theorem, c.verdict, c.partition, c.degree
        ));
        if c.vacuous {
            text.push_str("  vacuous: no condition to check\n");
        }
        for pair in &c.pairs {
            text.push_str(&format!(
                "  d = {}, r = {}: g_d = {}, gcd(2^d - 1, r) = {}, witness {:?}\n",
                pair.d, pair.r, pair.gd, pair.gcd, pair.witness
            ));
        }
        for m in &c.mersenne_checks {
            text.push_str(&format!(
                "  length {}: {} {} 2^{} - 1\n",
                m.length,
                m.p,
                if m.divisible {
                    "divides"
                } else {
                    "does not divide"
                },
                m.exponent
            ));
        }
        if let Some(f) = &c.failure {
            text.push_str(&format!("  fails: {}\n", failure_text(f)));
        }
    }
    text
}

fn failure_text(f: &Failure) -> String {
    match f {
        Failure::Pair { d, r, gd, gcd } => {
            format!("pair d = {d}, r = {r} has g_d = {gd}, gcd(2^d - 1, r) = {gcd}")
        }
        Failure::FixedPoints { g1 } => format!("{g1} fixed point(s)"),
        Failure::NotCoprime { a, b } => format!("lengths {a} and {b} are not coprime"),
        Failure::Multiplicity { length, count } => {
            format!("length {length} occurs {count} times")
        }
        Failure::Mersenne {
            length,
            p,
            exponent,
        } => format!("length {length}: {p} divides 2^{exponent} - 1"),
    }
}
