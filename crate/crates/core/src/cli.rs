//! The `ans` command line.
//!
//! Exit codes: 0 on success or `YES`, 2 for a domain-negative answer (word
//! not in the language, `NO`), 1 for usage and input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;

use crate::ans::AnsSystem;
use crate::automata::{dfa_to_dot, parse_automaton, write_dfa, Dfa, OrderedAlphabet};
use crate::congruence::{
    congruence_dfa, congruence_dfa_unambiguous, recognizable_set_dfa, CongruenceSpec,
    RecognizableSetSpec,
};
use crate::decision::{is_enumerating_series, Rejection, Verdict, DEFAULT_WITNESS_DEPTH};
use crate::error::Error;
use crate::series::LinearRepresentation;
use crate::systems::Bundled;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_NEGATIVE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "ans", version, about = "Rational abstract numeration systems")]
pub struct Cli {
    #[command(flatten)]
    source: SourceArgs,

    /// Token standing for the empty word, in input and output.
    #[arg(long, global = true, default_value = "\"\"")]
    epsilon: String,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct SourceArgs {
    /// Regular expression of the language (needs --alphabet).
    #[arg(long, global = true)]
    regex: Option<String>,

    /// Ordered alphabet, e.g. `ab` for a < b.
    #[arg(long, global = true)]
    alphabet: Option<String>,

    /// Automaton file describing the language.
    #[arg(long, global = true, value_name = "FILE")]
    automaton: Option<PathBuf>,

    /// One of the bundled systems: even-b, binary, fibonacci.
    #[arg(long, global = true, value_name = "NAME")]
    system: Option<String>,

    /// Use the automaton file as given (it must be unambiguous) instead of
    /// its minimal DFA.
    #[arg(long, global = true)]
    as_given: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Value of a word of the language.
    Value {
        word: String,
        /// Print the α/β/γ table.
        #[arg(long)]
        trace: bool,
    },
    /// Representation of a number.
    Repr { n: String },
    /// Representations of start, start+1, …, one per line.
    Enum { start: String, count: usize },
    /// Enumerating series of the system.
    #[command(subcommand)]
    Series(SeriesCommand),
    /// Automaton of the representations of a recognisable set of numbers.
    Congruence {
        /// Modulus of a progression; pair each with --residue.
        #[arg(long = "mod", value_name = "P")]
        moduli: Vec<u64>,
        #[arg(long = "residue", value_name = "R")]
        residues: Vec<u64>,
        /// Extra numbers to accept.
        #[arg(long, value_delimiter = ',')]
        include: Vec<String>,
        /// Numbers to reject.
        #[arg(long, value_delimiter = ',')]
        exclude: Vec<String>,
        /// Minimise a single-progression automaton.
        #[arg(long)]
        minimize: bool,
        /// Write the automaton in Graphviz format.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
        /// Write the automaton file.
        #[arg(long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
    /// Decide whether a series file holds an enumerating series.
    DecideEnum {
        series: PathBuf,
        /// Longest witness word searched for.
        #[arg(long, default_value_t = DEFAULT_WITNESS_DEPTH)]
        depth: usize,
    },
    /// Graphviz rendering of the system's minimal DFA.
    ExportDot {
        #[arg(long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum SeriesCommand {
    /// Build the enumerating series; prints its dimension before trimming.
    Build {
        #[arg(long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
    /// Coefficient of a word in the enumerating series (or in --series).
    Coeff {
        word: String,
        #[arg(long, value_name = "PATH")]
        series: Option<PathBuf>,
    },
}

enum Failure {
    Negative(String),
    Error(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotInLanguage(_) => Failure::Negative(e.to_string()),
            other => Failure::Error(other.to_string()),
        }
    }
}

type Outcome = std::result::Result<i32, Failure>;

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure::Error(format!("{}: {e}", path.display()))
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| io_failure(path, e))
}

fn write_file(path: &Path, text: &str) -> std::result::Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| io_failure(path, e))
}

fn parse_number(text: &str) -> std::result::Result<BigUint, Failure> {
    text.trim()
        .parse()
        .map_err(|_| Failure::Error(format!("not a natural number: {text:?}")))
}

impl Cli {
    fn word<'a>(&self, text: &'a str) -> &'a str {
        if text == self.epsilon {
            ""
        } else {
            text
        }
    }

    fn show(&self, word: &str) -> String {
        if word.is_empty() {
            self.epsilon.clone()
        } else {
            word.to_string()
        }
    }

    fn system(&self) -> std::result::Result<AnsSystem, Failure> {
        let s = &self.source;
        let given = [s.regex.is_some(), s.automaton.is_some(), s.system.is_some()]
            .iter()
            .filter(|x| **x)
            .count();
        if given != 1 {
            return Err(Failure::Error(
                "give exactly one of --regex (with --alphabet), --automaton or --system".into(),
            ));
        }
        if let Some(pattern) = &s.regex {
            let alphabet = s
                .alphabet
                .as_deref()
                .ok_or_else(|| Failure::Error("--regex needs --alphabet".into()))?;
            return Ok(AnsSystem::from_regex(
                pattern,
                &OrderedAlphabet::parse(alphabet)?,
            )?);
        }
        let text = match (&s.automaton, &s.system) {
            (Some(path), _) => read(path)?,
            (_, Some(name)) => name.parse::<Bundled>()?.automaton_text().to_string(),
            _ => unreachable!("one source is present"),
        };
        let nfa = parse_automaton(&text)?;
        if let Some(alphabet) = &s.alphabet {
            if OrderedAlphabet::parse(alphabet)? != *nfa.alphabet() {
                return Err(Failure::Error(format!(
                    "--alphabet {alphabet} disagrees with the automaton alphabet {}",
                    nfa.alphabet()
                )));
            }
        }
        Ok(if s.as_given {
            AnsSystem::from_unambiguous(&nfa)?
        } else {
            AnsSystem::new(&nfa)?
        })
    }

    fn execute(&self, out: &mut dyn Write) -> Outcome {
        let w = |out: &mut dyn Write, line: String| {
            writeln!(out, "{line}").map_err(|e| Failure::Error(e.to_string()))
        };
        match &self.command {
            Command::Value { word, trace } => {
                let sys = self.system()?;
                let word = self.word(word);
                if *trace {
                    let t = sys.value_trace(word)?;
                    write!(out, "{}", t.table()).map_err(|e| Failure::Error(e.to_string()))?;
                }
                w(out, sys.value(word)?.to_string())?;
            }
            Command::Repr { n } => {
                let sys = self.system()?;
                w(out, self.show(&sys.representation(&parse_number(n)?)?))?;
            }
            Command::Enum { start, count } => {
                let sys = self.system()?;
                for word in sys.enumerate(&parse_number(start)?, *count)? {
                    w(out, self.show(&word))?;
                }
            }
            Command::Series(SeriesCommand::Build { output }) => {
                let e = self.system()?.enumerating_series()?;
                if let Some(path) = output {
                    write_file(path, &e.final_rep.to_json())?;
                }
                w(out, format!("dimension: {}", e.pre_trim_dimension()))?;
            }
            Command::Series(SeriesCommand::Coeff { word, series }) => {
                let rep = match series {
                    Some(path) => LinearRepresentation::from_json(&read(path)?)?,
                    None => self.system()?.enumerating_series()?.final_rep,
                };
                w(out, rep.coefficient(self.word(word))?.to_string())?;
            }
            Command::Congruence {
                moduli,
                residues,
                include,
                exclude,
                minimize,
                dot,
                output,
            } => {
                if moduli.len() != residues.len() {
                    return Err(Failure::Error(
                        "each --mod needs a matching --residue".into(),
                    ));
                }
                let progressions = moduli
                    .iter()
                    .zip(residues)
                    .map(|(&p, &r)| CongruenceSpec::new(p, r))
                    .collect::<Result<Vec<_>, _>>()?;
                let include = include
                    .iter()
                    .map(|n| parse_number(n))
                    .collect::<Result<Vec<_>, _>>()?;
                let exclude = exclude
                    .iter()
                    .map(|n| parse_number(n))
                    .collect::<Result<Vec<_>, _>>()?;
                let sys = self.system()?;
                let dfa: Dfa =
                    if progressions.len() == 1 && include.is_empty() && exclude.is_empty() {
                        let raw = if sys.is_deterministic() {
                            congruence_dfa(&sys, progressions[0])?
                        } else {
                            congruence_dfa_unambiguous(&sys, progressions[0])?
                        };
                        if *minimize {
                            raw.minimize()
                        } else {
                            raw
                        }
                    } else {
                        recognizable_set_dfa(
                            &sys,
                            &RecognizableSetSpec::new(progressions, include, exclude)?,
                        )?
                    };
                if let Some(path) = output {
                    write_file(path, &write_dfa(&dfa))?;
                }
                if let Some(path) = dot {
                    write_file(path, &dfa_to_dot(&dfa))?;
                }
                w(out, format!("states: {}", dfa.states()))?;
            }
            Command::DecideEnum { series, depth } => {
                let rep = LinearRepresentation::from_json(&read(series)?)?;
                return match is_enumerating_series(&rep, *depth)? {
                    Verdict::Yes => {
                        w(out, "YES".into())?;
                        Ok(EXIT_OK)
                    }
                    Verdict::No(reason) => {
                        let line = match reason {
                            Rejection::Mismatch {
                                word,
                                expected,
                                actual,
                            } => {
                                format!(
                                    "NO {} expected={expected} actual={actual}",
                                    self.show(&word)
                                )
                            }
                            Rejection::FiniteSupport => "NO finite-support".into(),
                            Rejection::BeyondDepth { depth } => format!("NO beyond-depth={depth}"),
                        };
                        w(out, line)?;
                        Ok(EXIT_NEGATIVE)
                    }
                };
            }
            Command::ExportDot { output } => {
                let dot = dfa_to_dot(&self.system()?.language_dfa());
                match output {
                    Some(path) => write_file(path, &dot)?,
                    None => write!(out, "{dot}").map_err(|e| Failure::Error(e.to_string()))?,
                }
            }
        }
        Ok(EXIT_OK)
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<'a, I, T>(args: I, out: &'a mut dyn Write, err: &'a mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let stream = if e.use_stderr() { err } else { out };
            let _ = write!(stream, "{}", e.render());
            return code;
        }
    };
    match cli.execute(out) {
        Ok(code) => code,
        Err(Failure::Negative(message)) => {
            let _ = writeln!(err, "{message}");
            EXIT_NEGATIVE
        }
        Err(Failure::Error(message)) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_ERROR
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("ans").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn value_and_errors() {
        let l1 = ["--regex", "a*(ba*ba*)*", "--alphabet", "ab"];
        let (code, out, _) = call(&[&l1[..], &["value", "bbabb"]].concat());
        assert_eq!((code, out.as_str()), (0, "29\n"));
        let (code, _, err) = call(&[&l1[..], &["value", "ba"]].concat());
        assert_eq!(code, 2);
        assert!(err.contains("not in the language"));
        let (code, _, _) = call(&["value", "ba"]);
        assert_eq!(code, 1);
        let (code, _, _) = call(&["--system", "binary", "frobnicate"]);
        assert_eq!(code, 1);
    }

    #[test]
    fn epsilon_token() {
        let (code, out, _) = call(&["--system", "even-b", "repr", "0"]);
        assert_eq!((code, out.as_str()), (0, "\"\"\n"));
        let (_, out, _) = call(&["--system", "even-b", "--epsilon", "E", "enum", "0", "2"]);
        assert_eq!(out, "E\na\n");
        let (_, out, _) = call(&["--system", "even-b", "--epsilon", "E", "value", "E"]);
        assert_eq!(out, "0\n");
    }
}
