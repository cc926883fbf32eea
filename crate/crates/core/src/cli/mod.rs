//! The `popwilf` command line.
//!
//! Every subcommand produces one UTF-8 document and a verdict. The exit
//! status is 0 when the verdict holds, 1 when it fails and 2 when the
//! arguments (a POP string, a family tag, a budget) are rejected.

use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::bijections::{
    verify_theorem12, verify_theorem13, verify_theorem14, verify_theorem16, verify_west, BijectionReport,
    Theorem12Pair, Theorem13Pair, Theorem14Triple, WestPair,
};
use crate::classify::{
    dimitrov_check_with_budget, emit_tables, generate_family, wilf_classes_with_budget, FamilyTag, Format,
    DEFAULT_HORIZON,
};
use crate::error::{Error, Result};
use crate::permutation::count_avoiders_with_budget;
use crate::poset::LabeledPoset;

pub mod theorems;

pub use theorems::{run_check, Budget, CheckReport, TheoremId};

/// Environment variable consulted when `--workers` is absent.
pub const WORKERS_ENV: &str = "POPWILF_WORKERS";

#[derive(Debug, Parser)]
#[command(name = "popwilf", version, about = "Partially ordered pattern avoidance and Wilf classes")]
pub struct RunConfig {
    /// Worker threads for parallel enumeration
    #[arg(long, global = true, env = WORKERS_ENV, value_parser = clap::value_parser!(u16).range(1..))]
    pub workers: Option<u16>,
    /// Lift the default size caps (lengths above 9, boards above 6)
    #[arg(long, global = true)]
    pub unsafe_budget: bool,
    /// Write the document here instead of standard output
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count avoiders of a POP for n = 1..=N
    Enumerate {
        #[arg(long)]
        pop: String,
        #[arg(long)]
        n: usize,
        /// csv or json
        #[arg(long, default_value = "csv")]
        format: String,
    },
    /// Partition a family into classes of equal counts
    Classify {
        /// size3, size3-connected, size3-2chain, t4-ii, t4-iii, t5-i .. t5-iv, or all
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = DEFAULT_HORIZON)]
        horizon: usize,
        /// md, csv or json
        #[arg(long, default_value = "md")]
        format: String,
    },
    /// Check a theorem or lemma exhaustively at small sizes
    Check {
        /// 1.1 .. 1.6, lemma-2.1, lemma-3.1 or gk-5.1
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        nmax: Option<usize>,
        /// text or json
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Sweep a bijection and its inverse over all small inputs
    VerifyBijection {
        /// west, f13, t12, t14 or t16
        map: String,
        #[arg(long)]
        nmax: Option<usize>,
        /// source POP (west, f13, t12) or left summand (t14)
        #[arg(long)]
        p: Option<String>,
        /// target POP (west, f13, t12)
        #[arg(long)]
        p_prime: Option<String>,
        /// summand q of t14
        #[arg(long)]
        q: Option<String>,
        /// replacement q′ of t14
        #[arg(long)]
        q_prime: Option<String>,
        /// json or text
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Test an open conjecture at finite horizon
    Conjecture {
        /// only `dimitrov` is known
        name: String,
        #[arg(long, default_value_t = 8)]
        horizon: usize,
        /// json or text
        #[arg(long, default_value = "json")]
        format: String,
    },
}

/// A finished run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub verdict: bool,
    pub document: String,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.verdict {
            0
        } else {
            1
        }
    }
}

fn pop_arg(s: &str) -> Result<LabeledPoset> {
    s.parse()
}

fn text_or_json(format: &str) -> Result<bool> {
    match format.to_ascii_lowercase().as_str() {
        "json" => Ok(true),
        "text" | "md" => Ok(false),
        _ => Err(Error::Unknown { kind: "format", value: format.into() }),
    }
}

fn bijection_outcome(r: BijectionReport, json: bool) -> Outcome {
    Outcome { verdict: r.verdict, document: if json { r.to_json() + "\n" } else { r.summary() } }
}

/// Executes a parsed configuration on the current rayon pool.
pub fn run(config: &RunConfig) -> Result<Outcome> {
    let budget = if config.unsafe_budget { Budget::UNSAFE } else { Budget::DEFAULT };
    match &config.command {
        Command::Enumerate { pop, n, format } => {
            let p = pop_arg(pop)?;
            let seq = count_avoiders_with_budget(&p, *n, budget.length)?;
            let document = match format.parse::<Format>()? {
                Format::Csv => seq.to_csv(),
                Format::Json => seq.to_json() + "\n",
                Format::Md => return Err(Error::Unknown { kind: "format", value: format.clone() }),
            };
            Ok(Outcome { verdict: true, document })
        }
        Command::Classify { family, horizon, format } => {
            let format: Format = format.parse()?;
            let limit = if config.unsafe_budget { budget.length } else { DEFAULT_HORIZON };
            let tags: Vec<FamilyTag> = if family.eq_ignore_ascii_case("all") {
                crate::classify::ALL_TABLES.iter().map(|t| t.family).collect()
            } else {
                vec![family.parse()?]
            };
            let mut reports = Vec::with_capacity(tags.len());
            for tag in tags {
                reports.push(wilf_classes_with_budget(&generate_family(tag), *horizon, limit)?);
            }
            let verdict = reports.iter().all(|r| r.agrees_with_printed() != Some(false));
            Ok(Outcome { verdict, document: emit_tables(&reports, format) })
        }
        Command::Check { theorem, nmax, format } => {
            let json = text_or_json(format)?;
            let r = run_check(theorem.parse()?, *nmax, budget)?;
            Ok(Outcome { verdict: r.verdict, document: if json { r.to_json() } else { r.summary() } })
        }
        Command::VerifyBijection { map, nmax, p, p_prime, q, q_prime, format } => {
            let json = text_or_json(format)?;
            let given = |s: &Option<String>, default: LabeledPoset| s.as_deref().map_or(Ok(default), pop_arg);
            let perm_n = |default: usize| -> Result<usize> {
                let n = nmax.unwrap_or(default);
                if n > budget.length {
                    return Err(Error::BudgetExceeded { what: "permutation length", requested: n, limit: budget.length });
                }
                Ok(n)
            };
            let report = match map.to_ascii_lowercase().as_str() {
                "west" => {
                    let a = given(p, pop_arg("pop 4: c[3>4>1>2]")?)?;
                    let b = given(p_prime, pop_arg("pop 4: c[4>3>1>2]")?)?;
                    verify_west(&WestPair::new(a, b)?, perm_n(6)?)
                }
                "f13" => {
                    let (da, db) = theorems::top_swap_example();
                    verify_theorem13(&Theorem13Pair::new(given(p, da)?, given(p_prime, db)?)?, perm_n(6)?)
                }
                "t12" => {
                    let (da, db) = theorems::coloring_example();
                    verify_theorem12(&Theorem12Pair::new(given(p, da)?, given(p_prime, db)?)?, perm_n(6)?)?
                }
                "t14" => {
                    let (dp, dq, dq2) = theorems::disjoint_sum_example();
                    let t = Theorem14Triple::new(given(p, dp)?, given(q, dq)?, given(q_prime, dq2)?)?;
                    verify_theorem14(&t, perm_n(6)?)?
                }
                "t16" => {
                    let n = nmax.unwrap_or(5);
                    if n > budget.board {
                        return Err(Error::BudgetExceeded { what: "board size", requested: n, limit: budget.board });
                    }
                    verify_theorem16(n)
                }
                other => return Err(Error::Unknown { kind: "map", value: other.into() }),
            };
            Ok(bijection_outcome(report, json))
        }
        Command::Conjecture { name, horizon, format } => {
            let json = text_or_json(format)?;
            if !name.eq_ignore_ascii_case("dimitrov") {
                return Err(Error::Unknown { kind: "conjecture", value: name.clone() });
            }
            let limit = if config.unsafe_budget { budget.length } else { 8 };
            let r = dimitrov_check_with_budget(*horizon, limit)?;
            let document = if json {
                serde_json::to_string_pretty(&r).expect("reports serialize") + "\n"
            } else {
                let mut out = String::new();
                for c in &r.chains {
                    out.push_str(&format!(
                        "{}: {} ({})\n",
                        c.patterns.join(" = "),
                        if c.equal { "equal" } else { "DIFFERENT" },
                        c.counts.first().map(|s| s.iter().map(u64::to_string).collect::<Vec<_>>().join(",")).unwrap_or_default()
                    ));
                }
                out.push_str(&format!("verdict: {}\n", if r.verdict { "pass" } else { "fail" }));
                out
            };
            Ok(Outcome { verdict: r.verdict, document })
        }
    }
}

fn pool(workers: Option<u16>) -> std::result::Result<rayon::ThreadPool, rayon::ThreadPoolBuildError> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(w) = workers {
        b = b.num_threads(usize::from(w));
    }
    b.build()
}

/// Parses arguments, runs on a pool of the requested size, writes the
/// document and returns the exit status.
pub fn main_from_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let pool = match pool(config.workers) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let outcome = match pool.install(|| run(&config)) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            let body = json!({ "error": e.to_string() });
            if let Some(path) = &config.output {
                let _ = fs::write(path, body.to_string() + "\n");
            }
            return 2;
        }
    };
    match &config.output {
        Some(path) => {
            if let Err(e) = fs::write(path, &outcome.document) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 2;
            }
        }
        None => print!("{}", outcome.document),
    }
    outcome.exit_code()
}

pub fn main_from_env() -> i32 {
    main_from_args(std::env::args_os())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<Outcome> {
        let mut full = vec!["popwilf"];
        full.extend_from_slice(args);
        run(&RunConfig::try_parse_from(full).unwrap())
    }

    #[test]
    fn enumerate_csv() {
        let o = run_args(&["enumerate", "--pop", "pop 3: c[2>3], i[1]", "--n", "4"]).unwrap();
        assert_eq!(o.document, "n,count\n1,1\n2,2\n3,3\n4,4\n");
        assert!(o.verdict);
    }

    #[test]
    fn parse_errors_exit_2() {
        assert!(matches!(run_args(&["enumerate", "--pop", "pop 3: c[2>4]", "--n", "4"]), Err(Error::Parse { .. })));
        assert_eq!(main_from_args(["popwilf", "enumerate", "--pop", "pop 3: c[2>", "--n", "3"]), 2);
        assert_eq!(main_from_args(["popwilf", "frobnicate"]), 2);
    }

    #[test]
    fn budget_needs_opt_in() {
        assert!(matches!(
            run_args(&["enumerate", "--pop", "pop 2: c[2>1]", "--n", "10"]),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(run_args(&["--unsafe-budget", "enumerate", "--pop", "pop 2: c[2>1]", "--n", "10"]).is_ok());
    }

    #[test]
    fn classify_t4_ii_passes() {
        let o = run_args(&["classify", "--family", "t4-ii", "--horizon", "6"]).unwrap();
        assert!(o.verdict);
        assert!(o.document.contains("1,2,6,20,71,264"));
    }
}
