//! Command-line front end. Exit status: 0 success, 1 input error, 2 internal invariant failure.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand};

use crate::bisim::{auto_bisimulation_partition, bisimilarity_degree, greatest_bisimulation};
use crate::concepts::{eval_concept, parse_concept};
use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::format::{parse_interpretation, write_interpretation};
use crate::genbench::{format_csv, format_table, generate, run_bench, GeneratorParams};
use crate::minimize::{minimize_with_partition, MinimizeParams};
use crate::model::{Features, FuzzyInterpretation};

#[derive(Parser, Debug)]
#[command(name = "fuzzymin", version, about = "Minimize finite fuzzy interpretations under Goedel semantics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct FeatureArgs {
    /// Enable inverse roles
    #[arg(long = "with-i")]
    with_i: bool,
    /// Enable nominals
    #[arg(long = "with-o")]
    with_o: bool,
}

impl FeatureArgs {
    fn features(self, i: &FuzzyInterpretation) -> Features {
        i.signature().features().union(Features::new(self.with_i, self.with_o))
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimize an interpretation while preserving concept assertions up to gamma
    Minimize {
        #[arg(long, default_value = "1")]
        gamma: String,
        #[command(flatten)]
        features: FeatureArgs,
        /// Print the step-by-step run to stderr
        #[arg(long)]
        verbose: bool,
        #[arg(long = "in", default_value = "-")]
        input: String,
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Greatest bisimulation between two interpretations
    Bisim {
        #[arg(long)]
        other: String,
        #[command(flatten)]
        features: FeatureArgs,
        #[arg(long = "in", default_value = "-")]
        input: String,
    },
    /// Compact fuzzy partition of the greatest auto-bisimulation
    Partition {
        #[command(flatten)]
        features: FeatureArgs,
        #[arg(long = "in", default_value = "-")]
        input: String,
    },
    /// Evaluate a concept at every element
    Eval {
        #[arg(long)]
        concept: String,
        #[command(flatten)]
        features: FeatureArgs,
        #[arg(long = "in", default_value = "-")]
        input: String,
    },
    /// Generate a random instance: k n' m' o p l sCN sRN acyclic withI withO
    Gen {
        #[arg(num_args = 11, required = true, value_name = "PARAM")]
        params: Vec<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Run the benchmark rows listed in a spec file
    Bench {
        #[arg(long)]
        spec: String,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
        #[arg(long, default_value = "1")]
        gamma: String,
        /// Emit CSV instead of an aligned table
        #[arg(long)]
        csv: bool,
    },
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

impl Io<'_> {
    fn read(&mut self, path: &str) -> Result<String> {
        if path == "-" {
            let mut s = String::new();
            self.stdin.read_to_string(&mut s)?;
            Ok(s)
        } else {
            Ok(std::fs::read_to_string(path)?)
        }
    }

    fn load(&mut self, path: &str) -> Result<FuzzyInterpretation> {
        let text = self.read(path)?;
        parse_interpretation(&text).map_err(|e| {
            let mut e = e;
            if path != "-" {
                e.message = format!("{path}: {}", e.message);
            }
            Error::Format(e)
        })
    }

    fn write(&mut self, path: &str, text: &str) -> Result<()> {
        if path == "-" {
            self.stdout.write_all(text.as_bytes())?;
        } else {
            std::fs::write(path, text)?;
        }
        Ok(())
    }
}

fn gamma(s: &str) -> Result<Degree> {
    let d: Degree = s.parse()?;
    if d.is_zero() {
        return Err(Error::InvalidGamma(s.to_string()));
    }
    Ok(d)
}

fn execute(cmd: Command, io: &mut Io) -> Result<()> {
    match cmd {
        Command::Minimize { gamma: g, features, verbose, input, out } => {
            let i = io.load(&input)?;
            let params = MinimizeParams::new(features.features(&i), gamma(&g)?)?;
            let mut p = auto_bisimulation_partition(&i, params.features);
            if verbose {
                let names = |x: usize| i.element_name(x).to_string();
                writeln!(io.stderr, "partition {}", p.render(names))?;
            }
            let res = minimize_with_partition(&i, &mut p, params)?;
            let v = res.reduced.validate();
            if !v.is_empty() {
                return Err(Error::Invariant(format!("reduced interpretation fails validation: {v:?}")));
            }
            if verbose {
                io.stderr.write_all(res.trace.narrative(&i, &p).as_bytes())?;
                writeln!(
                    io.stderr,
                    "result: {} of {} elements kept, {} role instances",
                    res.stats.n1, res.stats.n, res.stats.m1
                )?;
            }
            io.write(&out, &write_interpretation(&res.reduced))
        }
        Command::Bisim { other, features, input } => {
            let i = io.load(&input)?;
            let j = io.load(&other)?;
            let phi = features.features(&i).union(features.features(&j));
            let z = greatest_bisimulation(&i, &j, phi)?.z;
            let mut s = String::new();
            for (x, y, d) in z.iter() {
                s.push_str(&format!("{} {} {d}\n", i.element_name(x), j.element_name(y)));
            }
            s.push_str(&format!("bisimilarity {}\n", bisimilarity_degree(&i, &j, phi)?));
            io.write("-", &s)
        }
        Command::Partition { features, input } => {
            let i = io.load(&input)?;
            let p = auto_bisimulation_partition(&i, features.features(&i));
            let text = p.render(|x| i.element_name(x).to_string());
            io.write("-", &format!("{text}\n"))
        }
        Command::Eval { concept, features, input } => {
            let i = io.load(&input)?;
            let sig = i.signature().with_features(features.features(&i));
            let c = parse_concept(&concept, &sig)?;
            let v = eval_concept(&c, &i);
            let s: String = (0..i.len()).map(|x| format!("{}:{}\n", i.element_name(x), v.get(x))).collect();
            io.write("-", &s)
        }
        Command::Gen { params, seed, out } => {
            let p = GeneratorParams::from_values(&params, seed)?;
            io.write(&out, &write_interpretation(&generate(&p)?))
        }
        Command::Bench { spec, repeats, gamma: g, csv } => {
            let text = io.read(&spec)?;
            let rows: Vec<GeneratorParams> = text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(str::parse)
                .collect::<Result<_>>()?;
            let res = run_bench(&rows, gamma(&g)?, repeats)?;
            io.write("-", &if csv { format_csv(&res) } else { format_table(&res) })
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Invariant(_) | Error::TraceMismatch(_) => 2,
        _ => 1,
    }
}

/// Runs the command line `args` (including the program name) against the given streams.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut io = Io { stdin, stdout, stderr };
    match execute(cli.command, &mut io) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(io.stderr, "error: {e}");
            exit_code(&e)
        }
    }
}
