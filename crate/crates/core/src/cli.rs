//! Command-line driver.
//!
//! Exit codes: 0 on success, 1 for bad input or a failed precondition, 2
//! when a mathematical check fails (invalid certificate, defect violation).
//! Output files are written once the run is complete, via a temporary file
//! and a rename.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::closure::seifert_matrix;
use crate::error::Error;
use crate::norms::{
    biinvariant_lower, biinvariant_upper, cl_lower, cl_upper, nu_lower, nu_upper, Certificate,
};
use crate::quasi::{defect_experiment, format_rational, stable_growth, witness_search};
use crate::signature::link_signature;
use crate::word::{parse_braid_word, BraidWord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "braidnorm", version, about = "Braid signatures and certified norm bounds on B_∞")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct WordArg {
    /// Braid word: whitespace-separated signed generator indices, e.g. "1 -2 1"
    #[arg(allow_hyphen_values = true)]
    word: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the signature of the closure
    Signature {
        #[command(flatten)]
        word: WordArg,
        #[arg(long)]
        strands: Option<usize>,
        /// Also print the Seifert matrix, one row per line
        #[arg(long)]
        emit_matrix: bool,
    },
    /// Bounds for the biinvariant word norm and for ν_n
    Norm {
        #[command(flatten)]
        word: WordArg,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Write the certificates (a JSON array) here
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Bounds for the (ν_n, p, q)-commutator length
    Cl {
        #[command(flatten)]
        word: WordArg,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        p: u32,
        #[arg(long, default_value_t = 1)]
        q: u32,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Re-validate a certificate file (a single certificate or an array)
    Verify { path: PathBuf },
    /// Sample the signature defect against the bound n
    Defects {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 5)]
        m: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 8)]
        len: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Exact σ(h^k) for k = 1..kmax
    Growth {
        #[command(flatten)]
        word: WordArg,
        #[arg(long, default_value_t = 12)]
        kmax: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Exhaustive search for a zero-exponent-sum h with nonzero growth rate
    Search {
        /// Maximal word length
        #[arg(long, default_value_t = 8)]
        len: usize,
        #[arg(long, default_value_t = 4)]
        strands: usize,
        #[arg(long, default_value_t = 8)]
        kmax: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Run {
    stdout: String,
    files: Vec<(PathBuf, String)>,
}

enum Failure {
    Input(String),
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_verification_failure() {
            Failure::Verify(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

fn word(arg: &WordArg) -> Result<BraidWord, Failure> {
    Ok(parse_braid_word(&arg.word)?)
}

fn write_atomically(path: &Path, contents: &str) -> std::io::Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, path)
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { exit_code: code, stdout: text, stderr: String::new() }
            } else {
                Outcome { exit_code: code, stdout: String::new(), stderr: text }
            };
        }
    };
    let mut run = Run {
        stdout: String::new(),
        files: Vec::new(),
    };
    let result = dispatch(cli.command, &mut run);
    for (path, contents) in &run.files {
        if let Err(e) = write_atomically(path, contents) {
            return Outcome {
                exit_code: EXIT_INPUT,
                stdout: run.stdout,
                stderr: format!("cannot write {}: {e}\n", path.display()),
            };
        }
    }
    match result {
        Ok(()) => Outcome {
            exit_code: EXIT_OK,
            stdout: run.stdout,
            stderr: String::new(),
        },
        Err(Failure::Input(msg)) => Outcome {
            exit_code: EXIT_INPUT,
            stdout: run.stdout,
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Verify(msg)) => Outcome {
            exit_code: EXIT_VERIFY,
            stdout: run.stdout,
            stderr: format!("verification failed: {msg}\n"),
        },
    }
}

fn dispatch(command: Command, run: &mut Run) -> Result<(), Failure> {
    let out = &mut run.stdout;
    match command {
        Command::Signature {
            word: w,
            strands,
            emit_matrix,
        } => {
            let w = word(&w)?;
            let s = link_signature(&w, strands)?;
            writeln!(out, "{s}").unwrap();
            if emit_matrix {
                let v = seifert_matrix(&w, strands.unwrap_or_else(|| w.width()))?;
                out.push_str(&v.to_string());
            }
        }
        Command::Norm { word: w, n, cert } => {
            let w = word(&w)?;
            let letters = biinvariant_upper(&w);
            let nu = nu_upper(&w, n)?;
            letters.validate()?;
            nu.validate()?;
            writeln!(out, "word_norm_upper {}", letters.len()).unwrap();
            writeln!(out, "word_norm_lower {}", biinvariant_lower(&w)).unwrap();
            writeln!(out, "nu_n {n}").unwrap();
            writeln!(out, "nu_upper {}", nu.len()).unwrap();
            writeln!(out, "nu_lower {}", nu_lower(&w)?).unwrap();
            if let Some(path) = cert {
                let bundle: Vec<Certificate> = vec![letters.into(), nu.into()];
                let text = serde_json::to_string_pretty(&bundle).expect("certificates serialize");
                run.files.push((path, text));
            }
        }
        Command::Cl { word: w, n, p, q, cert } => {
            let w = word(&w)?;
            let upper = cl_upper(&w, n, p, q)?;
            let lower = cl_lower(&w, n, p, q)?;
            writeln!(out, "n {n}\np {p}\nq {q}").unwrap();
            writeln!(out, "cl_upper {}", upper.len()).unwrap();
            writeln!(out, "cl_lower {}", lower.bound).unwrap();
            writeln!(out, "constant {}", lower.constant).unwrap();
            writeln!(out, "sigma {}", lower.sigma).unwrap();
            if let Some(path) = cert {
                run.files.push((path, Certificate::from(upper).to_json()));
            }
        }
        Command::Verify { path } => {
            let text = fs::read_to_string(&path)
                .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
            let certs = parse_certificates(&text)?;
            for (i, c) in certs.iter().enumerate() {
                c.validate()?;
                let kind = match c {
                    Certificate::ConjugatedLetters(_) => "conjugated_letters",
                    Certificate::NuWitness(_) => "nu_witness",
                    Certificate::Commutators(_) => "commutators",
                };
                writeln!(out, "valid {i} {kind} factors {}", c.len()).unwrap();
            }
        }
        Command::Defects {
            n,
            m,
            samples,
            len,
            seed,
            csv,
        } => {
            let report = defect_experiment(n, m, samples, len, seed)?;
            writeln!(
                out,
                "n {n}\nm {m}\nsamples {samples}\nlen {len}\nseed {seed}\nmax_defect {}\nbound {}\nviolations {}",
                report.max_defect,
                report.bound,
                report.violations.len()
            )
            .unwrap();
            if let Some(path) = csv {
                run.files.push((path, report.to_csv()));
            }
            if let Some(v) = report.violations.first() {
                return Err(Failure::Verify(format!(
                    "defect {} > {} at sample {} (alpha \"{}\", beta \"{}\")",
                    v.defect, report.bound, v.index, v.alpha, v.beta
                )));
            }
        }
        Command::Growth { word: w, kmax, csv } => {
            let h = word(&w)?;
            let g = stable_growth(&h, kmax)?;
            out.push_str(&g.to_csv());
            writeln!(out, "tail_rate {}", format_rational(g.tail_rate)).unwrap();
            writeln!(out, "slope_rate {}", format_rational(g.slope_rate)).unwrap();
            if let Some(path) = csv {
                run.files.push((path, g.to_csv()));
            }
        }
        Command::Search {
            len,
            strands,
            kmax,
            csv,
        } => {
            let r = witness_search(len, strands, kmax)?;
            writeln!(out, "h {}", r.h).unwrap();
            writeln!(out, "rate {}", format_rational(r.rate)).unwrap();
            if let Some(g) = &r.growth {
                writeln!(out, "slope_rate {}", format_rational(g.slope_rate)).unwrap();
            }
            writeln!(out, "candidates {}", r.candidates).unwrap();
            if let (Some(path), Some(g)) = (csv, &r.growth) {
                run.files.push((path, g.to_csv()));
            }
        }
    }
    Ok(())
}

/// A certificate file holds one certificate object or an array of them.
pub fn parse_certificates(text: &str) -> Result<Vec<Certificate>, Error> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    let items = match value {
        serde_json::Value::Array(items) => items,
        other => vec![other],
    };
    items
        .into_iter()
        .map(|v| serde_json::from_value(v).map_err(|e| Error::Format(e.to_string())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> Outcome {
        run(std::iter::once("braidnorm").chain(args.iter().copied()))
    }

    #[test]
    fn signature_of_trefoil() {
        let o = go(&["signature", "1 1 1"]);
        assert_eq!(o.exit_code, 0);
        assert_eq!(o.stdout, "-2\n");
        let o = go(&["signature", "-1 -1 -1", "--emit-matrix"]);
        assert_eq!(o.stdout, "2\n1 -1\n0 1\n");
    }

    #[test]
    fn bad_word_is_input_error() {
        let o = go(&["signature", "1 x"]);
        assert_eq!(o.exit_code, EXIT_INPUT);
        assert!(o.stderr.contains("token 2"));
        assert_eq!(go(&["signature", "2", "--strands", "2"]).exit_code, EXIT_INPUT);
        assert_eq!(go(&["frobnicate"]).exit_code, EXIT_INPUT);
        assert_eq!(go(&["cl", "1"]).exit_code, EXIT_INPUT);
    }

    #[test]
    fn help_is_success() {
        assert_eq!(go(&["--help"]).exit_code, EXIT_OK);
    }
}
