//! Command-line front end. Results go to standard output, diagnostics and
//! progress to standard error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use plethysm_core::plethystic::{enumerate_pssyt, enumerate_pssyt_weight, maximal_weights, sort_pssyt};
use plethysm_core::{Composition, Partition, PlethysmModel};
use serde_json::json;

use crate::cache::Cache;
use crate::compute::{coefficient, decompose};
use crate::error::{Error, Result};
use crate::format::{
    hwv_to_text, pssyt_to_text, schur_to_json, schur_to_text, weight_counts, weight_counts_to_text, HwVectorJson,
    PssytJson,
};
use crate::theorems::{
    verify_theorem1, verify_theorem1_twisted, verify_theorem2, verify_theorem3, verify_theorem5, VerificationReport,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

/// Plethysm coefficients of Schur functions, via plethystic tableaux and
/// highest-weight vectors.
#[derive(Debug, Parser)]
#[command(name = "plethysm", version)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    /// Maximum number of worker threads.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Directory for cached decompositions (default: $PLETHYSM_CACHE_DIR).
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Schur expansion of s_nu o s_mu, restricted to at most d rows.
    Decompose {
        #[arg(long)]
        nu: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        d: Option<usize>,
    },
    /// A single coefficient <s_nu o s_mu, s_lambda>.
    Coeff {
        #[arg(long)]
        nu: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        lambda: Partition,
    },
    /// Dominance-maximal constituents with multiplicities.
    Maximal {
        #[arg(long)]
        nu: Partition,
        #[arg(long)]
        mu: Partition,
    },
    /// Plethystic semistandard tableaux of shape mu^nu.
    Pssyt {
        #[arg(long)]
        nu: Partition,
        #[arg(long)]
        mu: Partition,
        /// Restrict to one weight.
        #[arg(long)]
        weight: Option<Composition>,
        /// Largest letter (default |mu||nu|, ignored with --weight).
        #[arg(long)]
        d: Option<usize>,
        /// Print at most this many tableaux; the count covers all of them.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Basis of highest-weight vectors of weight lambda.
    Hwv {
        #[arg(long)]
        nu: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        lambda: Partition,
        /// Number of letters (default: length of lambda).
        #[arg(long)]
        d: Option<usize>,
    },
    /// Check one instance of a stability or monotonicity result.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TheoremId {
    #[value(name = "1")]
    One,
    #[value(name = "1t")]
    OneTwisted,
    #[value(name = "2")]
    Two,
    #[value(name = "3")]
    Three,
    #[value(name = "5")]
    Five,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub theorem: TheoremId,
    #[arg(long)]
    pub nu: Option<Partition>,
    #[arg(long)]
    pub mu: Option<Partition>,
    #[arg(long)]
    pub lambda: Option<Partition>,
    #[arg(long)]
    pub r: Option<usize>,
    /// Last N for theorem 2.
    #[arg(long, default_value_t = 3)]
    pub n_max: usize,
    /// Theorem 3: degree of the first factor.
    #[arg(long)]
    pub n: Option<usize>,
    /// Theorem 3: degree of the second factor.
    #[arg(long)]
    pub n_star: Option<usize>,
    /// Theorem 3: weight of the second factor.
    #[arg(long)]
    pub lambda_star: Option<Partition>,
}

fn need<T: Clone>(v: &Option<T>, flag: &str, theorem: &str) -> Result<T> {
    v.clone()
        .ok_or_else(|| Error::Usage(format!("verify --theorem {theorem} needs --{flag}")))
}

fn verify(a: &VerifyArgs) -> Result<VerificationReport> {
    let name = a.theorem.to_possible_value().expect("no skipped variants").get_name().to_string();
    let t = name.as_str();
    match a.theorem {
        TheoremId::One | TheoremId::OneTwisted | TheoremId::Two => {
            let (nu, mu, lambda, r) = (need(&a.nu, "nu", t)?, need(&a.mu, "mu", t)?, need(&a.lambda, "lambda", t)?, need(&a.r, "r", t)?);
            match a.theorem {
                TheoremId::One => verify_theorem1(&nu, &mu, &lambda, r),
                TheoremId::OneTwisted => verify_theorem1_twisted(&nu, &mu, &lambda, r),
                _ => verify_theorem2(&nu, &mu, &lambda, r, a.n_max),
            }
        }
        TheoremId::Three => verify_theorem3(
            need(&a.n, "n", t)?,
            need(&a.n_star, "n-star", t)?,
            &need(&a.mu, "mu", t)?,
            &need(&a.lambda, "lambda", t)?,
            &need(&a.lambda_star, "lambda-star", t)?,
        ),
        TheoremId::Five => verify_theorem5(&need(&a.nu, "nu", t)?, &need(&a.mu, "mu", t)?),
    }
}

fn json_line(v: serde_json::Value) -> String {
    let mut s = serde_json::to_string(&v).expect("plain data serializes");
    s.push('\n');
    s
}

fn execute(cli: &Cli, progress: &mut Vec<String>) -> Result<String> {
    let text = cli.format == OutputFormat::Text;
    let out = match &cli.command {
        Command::Decompose { nu, mu, d } => {
            let d = d.unwrap_or(mu.size() * nu.size());
            let cache = cli.cache.clone().map(Cache::new).or_else(Cache::from_env);
            let v = match &cache {
                Some(c) => {
                    if c.load_raw(nu, mu, d)?.is_some() {
                        progress.push(format!("cache hit: {}", c.path(nu, mu, d).display()));
                    }
                    c.get_or_compute(nu, mu, d, || decompose(nu, mu, Some(d)))?
                }
                None => decompose(nu, mu, Some(d))?,
            };
            if text {
                schur_to_text(&v)
            } else {
                format!("{}\n", schur_to_json(&v))
            }
        }
        Command::Coeff { nu, mu, lambda } => {
            let c = coefficient(nu, mu, lambda)?;
            if text {
                format!("{c}\n")
            } else {
                json_line(json!({"nu": nu.parts(), "mu": mu.parts(), "lambda": lambda.parts(), "coeff": c}))
            }
        }
        Command::Maximal { nu, mu } => {
            let list = weight_counts(&maximal_weights(mu, nu));
            if text {
                weight_counts_to_text(&list)
            } else {
                json_line(json!({"nu": nu.parts(), "mu": mu.parts(), "weights": list}))
            }
        }
        Command::Pssyt { nu, mu, weight, d, limit } => {
            let mut all = match weight {
                Some(beta) => enumerate_pssyt_weight(mu, nu, beta),
                None => enumerate_pssyt(mu, nu, d.unwrap_or(mu.size() * nu.size())),
            };
            sort_pssyt(&mut all);
            let shown: Vec<PssytJson> = all.iter().take(limit.unwrap_or(usize::MAX)).map(PssytJson::from).collect();
            if text {
                format!("count {}\n{}", all.len(), pssyt_to_text(&shown))
            } else {
                json_line(json!({"nu": nu.parts(), "mu": mu.parts(), "count": all.len(), "tableaux": shown}))
            }
        }
        Command::Hwv { nu, mu, lambda, d } => {
            let d = d.unwrap_or(lambda.len());
            if d < lambda.len() {
                return Err(Error::Usage(format!("--d {d} is smaller than the length of lambda = {lambda}")));
            }
            if lambda.size() != mu.size() * nu.size() {
                return Err(plethysm_core::Error::DegreeMismatch {
                    left: mu.size() * nu.size(),
                    right: lambda.size(),
                }
                .into());
            }
            let vs = PlethysmModel::new(mu.clone(), nu.clone(), d).hwv_space(lambda)?;
            if text {
                let mut s = format!("dimension {}\n", vs.len());
                for v in &vs {
                    s.push_str(&hwv_to_text(v));
                }
                s
            } else {
                let vectors: Vec<HwVectorJson> = vs.iter().map(HwVectorJson::from).collect();
                json_line(json!({"dimension": vs.len(), "vectors": vectors}))
            }
        }
        Command::Verify(a) => {
            let rep = verify(a)?;
            if text {
                format!(
                    "theorem {}: {} lhs={} rhs={} ({:.1} ms)\n",
                    rep.theorem,
                    serde_json::to_value(rep.verdict).expect("verdict").as_str().unwrap_or("?"),
                    rep.lhs,
                    rep.rhs,
                    rep.ms
                )
            } else {
                format!("{}\n", rep.to_json_line())
            }
        }
    };
    Ok(out)
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code: 0 on success, 1 for usage errors, 2 for computation errors.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let msg = e.to_string();
            let _ = writeln!(err, "{}", msg.lines().next().unwrap_or("invalid arguments"));
            return 1;
        }
    };
    let mut progress = Vec::new();
    let result = match cli.threads {
        Some(0) => Err(Error::Usage("--threads must be positive".into())),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| execute(&cli, &mut progress)),
            Err(e) => Err(Error::Usage(format!("cannot start {n} threads: {e}"))),
        },
        None => execute(&cli, &mut progress),
    };
    for line in progress {
        let _ = writeln!(err, "{line}");
    }
    match result {
        Ok(s) => {
            if out.write_all(s.as_bytes()).and_then(|_| out.flush()).is_err() {
                return 2;
            }
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_usage() {
                1
            } else {
                2
            }
        }
    }
}

/// [`run_with`] on the process's standard streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run_with(std::iter::once("plethysm").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn coeff_brion() {
        let (code, out, _) = call(&["coeff", "--nu", "2", "--mu", "3,2,1", "--lambda", "5,4,2,1"]);
        assert_eq!(code, 0);
        assert_eq!(out, "{\"nu\":[2],\"mu\":[3,2,1],\"lambda\":[5,4,2,1],\"coeff\":2}\n");
        let (_, out, _) = call(&["coeff", "--nu", "2", "--mu", "3,2,1", "--lambda", "5,4,2,1", "--format", "text"]);
        assert_eq!(out, "2\n");
    }

    #[test]
    fn exit_codes() {
        let (code, out, err) = call(&["coeff", "--nu", "1,2", "--mu", "2", "--lambda", "2"]);
        assert_eq!((code, out.as_str()), (1, ""));
        assert_eq!(err.lines().count(), 1);
        assert_eq!(call(&["coeff", "--nu", "2", "--mu", "2", "--lambda", "3"]).0, 1);
        assert_eq!(call(&["frobnicate"]).0, 1);
        assert_eq!(call(&["verify", "--theorem", "1", "--nu", "2"]).0, 1);
        assert_eq!(call(&["--help"]).0, 0);
        assert_eq!(call(&["--version"]).0, 0);
        assert_eq!(call(&["--threads", "0", "coeff", "--nu", "2", "--mu", "2", "--lambda", "4"]).0, 1);
    }

    #[test]
    fn exponent_grammar() {
        let (code, out, _) = call(&["maximal", "--nu", "1^3", "--mu", "1^3", "--format", "text"]);
        assert_eq!(code, 0);
        assert_eq!(out, "1  [3,3,1,1,1]\n1  [3,2,2,2]\n");
    }

    #[test]
    fn verify_text() {
        let (code, out, _) = call(&["verify", "--theorem", "2", "--nu", "2", "--mu", "2,1,1", "--lambda", "3,2,2,1", "--r", "2", "--format", "text"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("theorem 2: pass lhs=[1,2,2,2]"), "{out}");
    }
}
