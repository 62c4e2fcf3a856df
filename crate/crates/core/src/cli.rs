//! Command-line front end. Data goes to `out`, progress and errors to `err`.

use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};

use crate::cartan::{full_cartan_with, CartanMatrix, FillPolicy, Method};
use crate::characters::{decompose, mn_character, ClassFunction};
use crate::error::Error;
use crate::oracle::{BuildOptions, Oracle, DEFAULT_GUARD};
use crate::partitions::Partition;
use crate::quiver::quiver;
use crate::surjections::hom_permutation_character;
use crate::tableaux::{lr_coefficient, lr_expand};
use crate::verify::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_REFUSED: i32 = 2;
pub const EXIT_CERTIFICATE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "surjalg", version, about = "Representation theory of the category of finite surjections")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Build the algebra even above the size guard.
    #[arg(long, global = true, env = "SURJALG_FORCE", value_parser = clap::builder::BoolishValueParser::new(), default_value_t = false)]
    pub force: bool,

    /// Largest n built without --force.
    #[arg(long, global = true, default_value_t = DEFAULT_GUARD)]
    pub guard: usize,

    /// Progress messages on stderr.
    #[arg(short, long, global = true)]
    pub verbose: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Dot,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum CliMethod {
    Character,
    #[value(name = "closed_form", alias = "closed-form")]
    ClosedForm,
    Oracle,
}

impl From<CliMethod> for Method {
    fn from(m: CliMethod) -> Self {
        match m {
            CliMethod::Character => Method::Character,
            CliMethod::ClosedForm => Method::ClosedForm,
            CliMethod::Oracle => Method::Oracle,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Fill {
    Strict,
    Unknown,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Cartan matrix, rows beta and columns alpha in the global order.
    Cartan {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "character")]
        method: CliMethod,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Closed form only: how to treat entries beyond the second superdiagonal.
        #[arg(long, value_enum, default_value = "strict")]
        fill: Fill,
    },
    /// The quiver, arrows one level down.
    Quiver {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// Global dimension from minimal resolutions of all simples.
    Gdim {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Minimal projective resolution of one simple.
    Resolve {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        partition: Partition,
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Littlewood-Richardson coefficients of lambda times delta.
    Lr {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        delta: Partition,
        #[arg(long)]
        gamma: Option<Partition>,
    },
    /// Irreducible character value chi^lambda(mu).
    Char {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
    },
    /// Permutation character of S_k x S_r on hom(r, k).
    Homchar {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        decompose: bool,
    },
    /// Decomposes a class function given as JSON (`-` reads stdin).
    Decompose {
        #[arg(default_value = "-")]
        payload: String,
    },
    /// Cross-method consistency table; exits 3 on any disagreement.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Refused { .. } => EXIT_REFUSED,
        Error::Certificate(_) => EXIT_CERTIFICATE,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I, input: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => run(&config, input, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            code
        }
    }
}

pub fn run(config: &RunConfig, input: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(config, input, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn json_line(out: &mut dyn Write, value: &impl serde::Serialize) -> Result<(), Error> {
    let text = serde_json::to_string(value).map_err(|e| Error::Parse(e.to_string()))?;
    writeln!(out, "{text}").map_err(io)
}

fn io(e: std::io::Error) -> Error {
    Error::Parse(format!("write failed: {e}"))
}

fn unsupported(format: Format, command: &str) -> Error {
    Error::Parse(format!("format {format:?} is not available for {command}"))
}

fn cartan_text(m: &CartanMatrix) -> String {
    let labels: Vec<String> = m.index().iter().map(ToString::to_string).collect();
    let width = labels.iter().map(String::len).max().unwrap_or(0);
    let mut s = String::new();
    for (label, row) in labels.iter().zip(m.rows()) {
        let cells: Vec<String> = row.iter().map(|e| e.map_or("?".into(), |v| v.to_string())).collect();
        s.push_str(&format!("{label:>width$} | {}\n", cells.join(" ")));
    }
    s
}

fn dispatch(config: &RunConfig, input: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Error> {
    let options = BuildOptions {
        guard: config.guard,
        force: config.force,
    };
    let verbose = config.verbose;
    let mut progress = |msg: &str| {
        if verbose {
            let _ = writeln!(err, "{msg}");
        }
    };
    match &config.command {
        Command::Cartan { n, method, format, fill } => {
            let policy = match fill {
                Fill::Strict => FillPolicy::Strict,
                Fill::Unknown => FillPolicy::Unknown,
            };
            let method = Method::from(*method);
            let m = full_cartan_with(*n, method, policy, options)?;
            match format {
                Format::Json => json_line(out, &m.to_json(method))?,
                Format::Csv => write!(out, "{}", m.to_csv()).map_err(io)?,
                Format::Text => write!(out, "{}", cartan_text(&m)).map_err(io)?,
                Format::Dot => return Err(unsupported(*format, "cartan")),
            }
        }
        Command::Quiver { n, format } => {
            let q = quiver(*n);
            match format {
                Format::Dot => write!(out, "{}", q.to_dot()).map_err(io)?,
                Format::Json => json_line(out, &q.to_json())?,
                Format::Text => {
                    for (&(s, t), &mult) in q.arrows() {
                        writeln!(out, "{} -> {} x{mult}", q.vertices()[s], q.vertices()[t]).map_err(io)?;
                    }
                }
                Format::Csv => return Err(unsupported(*format, "quiver")),
            }
        }
        Command::Gdim { n, format } => {
            let oracle = Oracle::build_with(*n, options, &mut progress)?;
            progress("resolving simples");
            let g = oracle.global_dimension()?;
            match format {
                Format::Text => writeln!(out, "{g}").map_err(io)?,
                Format::Json => json_line(out, &serde_json::json!({ "n": n, "global_dimension": g }))?,
                _ => return Err(unsupported(*format, "gdim")),
            }
        }
        Command::Resolve { n, partition, max_len } => {
            let oracle = Oracle::build_with(*n, options, &mut progress)?;
            let len = max_len.unwrap_or_else(|| oracle.default_max_len());
            let res = oracle.minimal_resolution(partition, len)?;
            json_line(out, &res)?;
        }
        Command::Lr { lambda, delta, gamma } => {
            let map: serde_json::Map<String, serde_json::Value> = match gamma {
                Some(g) => [(g.to_string(), lr_coefficient(lambda, delta, g)?.into())].into_iter().collect(),
                None => lr_expand(lambda, delta)
                    .into_iter()
                    .map(|(g, c)| (g.to_string(), c.into()))
                    .collect(),
            };
            json_line(out, &map)?;
        }
        Command::Char { lambda, mu } => {
            writeln!(out, "{}", mn_character(lambda, mu)?).map_err(io)?;
        }
        Command::Homchar { r, k, decompose: split } => {
            let chi = hom_permutation_character(*r, *k);
            if *split {
                json_line(out, &decompose(&chi)?)?;
            } else {
                json_line(out, &chi)?;
            }
        }
        Command::Decompose { payload } => {
            let text = if payload == "-" {
                let mut s = String::new();
                input.read_to_string(&mut s).map_err(|e| Error::Parse(e.to_string()))?;
                s
            } else {
                payload.clone()
            };
            let chi: ClassFunction = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
            json_line(out, &decompose(&chi)?)?;
        }
        Command::Verify { n, format } => {
            let checks = verify(*n, options, &mut progress)?;
            match format {
                Format::Text => {
                    for c in &checks {
                        let mark = if c.passed { "PASS" } else { "FAIL" };
                        writeln!(out, "{mark}  {:<36} {}", c.name, c.detail).map_err(io)?;
                    }
                }
                Format::Json => json_line(out, &checks)?,
                _ => return Err(unsupported(*format, "verify")),
            }
            if checks.iter().any(|c| !c.passed) {
                return Ok(EXIT_CERTIFICATE);
            }
        }
    }
    Ok(EXIT_OK)
}
