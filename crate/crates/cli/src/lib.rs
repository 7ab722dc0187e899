//! Command dispatch for the `a1pic` binary.
//!
//! [`run`] never prints; it returns a [`Report`] whose `stdout` and `stderr`
//! the binary writes verbatim, so every command is testable in-process.

pub mod render;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use a1pic::checks::{self, CheckResult};
use a1pic::{
    builtin, dual, is_invertible, joker_power, loop_power, margolis_report, parse_module,
    picard_coordinates, serialize_module, tensor, A1Module, Error,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::render::Format;

/// Exit status: the property holds or the computation succeeded.
pub const EXIT_OK: i32 = 0;
/// Exit status: a decision procedure answered no.
pub const EXIT_FALSE: i32 = 1;
/// Exit status: bad arguments, unreadable input, or an invalid module.
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "a1pic",
    version,
    about = "Stable module category of C-motivic A(1)"
)]
struct Cli {
    /// Print the raw JSON payload instead of a table.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the A(1) relations.
    Validate { module: String },
    /// Basis, degrees and M2-rank.
    Info { module: String },
    /// Q0, Q1 and Sq2 homology of M/τ.
    Margolis { module: String },
    /// Decide whether the module is projective.
    Projective { module: String },
    /// Decide whether the module is invertible.
    Invertible { module: String },
    /// Picard coordinates (a, b, c, d) of an invertible module.
    Coords { module: String },
    /// M ⊗ N.
    Tensor {
        left: String,
        right: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The dual DM.
    Dual {
        module: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Ω^k M.
    Loop {
        module: String,
        #[arg(short, default_value_t = 1, allow_negative_numbers = true)]
        k: i32,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// J^d.
    JokerPower {
        #[arg(allow_negative_numbers = true)]
        d: i32,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Cell diagram.
    Render {
        module: String,
        #[arg(long, value_enum, default_value_t = RenderFormat::Ascii)]
        format: RenderFormat,
    },
    /// Run every acceptance check and print a table.
    CheckTheorems,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RenderFormat {
    Ascii,
    Svg,
}

/// The outcome of one invocation.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<String>,
    pub payload: Value,
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Report {
    fn failure(command: &str, inputs: Vec<String>, message: String) -> Report {
        Report {
            command: command.to_string(),
            inputs,
            payload: json!({ "error": message }),
            status: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

/// Failure that ends a command with exit status 2.
struct InputError(String);

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

type Outcome = std::result::Result<Output, InputError>;

struct Output {
    payload: Value,
    status: i32,
    table: String,
    stderr: String,
}

impl Output {
    fn new(payload: Value, status: i32, table: String) -> Self {
        Output {
            payload,
            status,
            table,
            stderr: String::new(),
        }
    }
}

/// Reads `builtin:<name>` or a module file without checking relations.
fn load_unchecked(input: &str) -> std::result::Result<A1Module, InputError> {
    if let Some(name) = input.strip_prefix("builtin:") {
        return Ok(builtin(name)?);
    }
    let text = std::fs::read_to_string(input).map_err(|e| InputError(format!("{input}: {e}")))?;
    parse_module(&text).map_err(|e| InputError(format!("{input}: {e}")))
}

fn load(input: &str) -> std::result::Result<A1Module, InputError> {
    let m = load_unchecked(input)?;
    if let Err(violations) = m.validate() {
        let lines: Vec<String> = violations.iter().map(|v| format!("  {v}")).collect();
        return Err(InputError(format!(
            "{input} is not an A(1)-module:\n{}",
            lines.join("\n")
        )));
    }
    Ok(m)
}

/// Left-aligned columns separated by two spaces.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &mut dyn Iterator<Item = &str>| {
        let parts: Vec<String> = cells
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        writeln!(out, "{}", parts.join("  ").trim_end()).unwrap();
    };
    line(&mut header.iter().copied());
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    line(&mut rule.iter().map(String::as_str));
    for row in rows {
        line(&mut row.iter().map(String::as_str));
    }
    out
}

fn pairs(kv: &[(&str, String)]) -> String {
    let rows: Vec<Vec<String>> = kv
        .iter()
        .map(|(k, v)| vec![k.to_string(), v.clone()])
        .collect();
    table(&["field", "value"], &rows)
}

fn validate(input: &str) -> Outcome {
    let m = load_unchecked(input)?;
    let violations = m.violations();
    let payload = json!({
        "module": m.name(),
        "valid": violations.is_empty(),
        "violations": violations,
    });
    let table = pairs(&[
        ("module", m.name().to_string()),
        ("valid", violations.is_empty().to_string()),
        ("violations", violations.len().to_string()),
    ]);
    if violations.is_empty() {
        Ok(Output::new(payload, EXIT_OK, table))
    } else {
        let mut out = Output::new(payload, EXIT_INPUT, table);
        for v in &violations {
            writeln!(out.stderr, "{input}: {v}").unwrap();
        }
        Ok(out)
    }
}

fn info(input: &str) -> Outcome {
    let m = load(input)?;
    let b = m.basis();
    let basis: Vec<Value> = b
        .generators()
        .iter()
        .map(|g| json!({ "id": g.id, "bidegree": [g.degree.s, g.degree.w] }))
        .collect();
    let payload = json!({
        "module": m.name(),
        "rank": m.rank(),
        "basis": basis,
        "sq1_edges": m.sq1().num_entries(),
        "sq2_edges": m.sq2().num_entries(),
    });
    let rows: Vec<Vec<String>> = b
        .generators()
        .iter()
        .map(|g| vec![g.id.clone(), g.degree.s.to_string(), g.degree.w.to_string()])
        .collect();
    let mut text = format!("module {}  rank {}\n", m.name(), m.rank());
    text.push_str(&table(&["generator", "s", "w"], &rows));
    Ok(Output::new(payload, EXIT_OK, text))
}

fn margolis(input: &str) -> Outcome {
    let m = load(input)?;
    let report = margolis_report(&m)?;
    let payload = report.to_json(m.basis());
    let mut rows = Vec::new();
    for h in report.iter() {
        let name = serde_json::to_value(h.differential)
            .ok()
            .and_then(|v| v.as_str().map(str::to_string))
            .unwrap_or_default();
        if h.is_zero() {
            rows.push(vec![name, "-".into(), "0".into(), String::new()]);
            continue;
        }
        for (deg, dim) in &h.dims {
            let reps: Vec<String> = h
                .representatives
                .iter()
                .filter(|(d, _)| d == deg)
                .map(|(_, cycle)| {
                    let ids: Vec<&str> = cycle.iter().map(|&i| m.basis().id(i)).collect();
                    ids.join("+")
                })
                .collect();
            rows.push(vec![
                name.clone(),
                deg.to_string(),
                dim.to_string(),
                reps.join(", "),
            ]);
        }
    }
    Ok(Output::new(
        payload,
        EXIT_OK,
        table(
            &["differential", "bidegree", "dim", "representatives"],
            &rows,
        ),
    ))
}

fn projective(input: &str) -> Outcome {
    let m = load(input)?;
    let report = margolis_report(&m)?;
    let answer = report.iter().all(|h| h.is_zero());
    let dims: Vec<usize> = report.iter().map(|h| h.total_dim()).collect();
    let payload = json!({
        "module": m.name(),
        "projective": answer,
        "homology_dims": { "Q0": dims[0], "Q1": dims[1], "Sq2": dims[2] },
    });
    let table = pairs(&[
        ("module", m.name().to_string()),
        ("projective", answer.to_string()),
        ("dim H(Q0)", dims[0].to_string()),
        ("dim H(Q1)", dims[1].to_string()),
        ("dim H(Sq2)", dims[2].to_string()),
    ]);
    Ok(Output::new(
        payload,
        if answer { EXIT_OK } else { EXIT_FALSE },
        table,
    ))
}

fn invertible(input: &str) -> Outcome {
    let m = load(input)?;
    let sig = is_invertible(&m)?;
    let payload = json!({
        "module": m.name(),
        "invertible": sig.is_some(),
        "signature": sig,
    });
    let table = pairs(&[
        ("module", m.name().to_string()),
        ("invertible", sig.is_some().to_string()),
        (
            "signature",
            sig.map_or_else(|| "-".to_string(), |s| s.to_string()),
        ),
    ]);
    Ok(Output::new(
        payload,
        if sig.is_some() { EXIT_OK } else { EXIT_FALSE },
        table,
    ))
}

fn coords(input: &str) -> Outcome {
    let m = load(input)?;
    match picard_coordinates(&m) {
        Ok(p) => {
            let payload = serde_json::to_value(p).expect("coordinates serialize");
            let table = table(
                &["a", "b", "c", "d"],
                &[vec![
                    p.a.to_string(),
                    p.b.to_string(),
                    p.c.to_string(),
                    p.d.to_string(),
                ]],
            );
            Ok(Output::new(payload, EXIT_OK, table))
        }
        Err(Error::NotInvertible) => {
            let mut out = Output::new(
                json!({ "module": m.name(), "invertible": false }),
                EXIT_FALSE,
                pairs(&[
                    ("module", m.name().to_string()),
                    ("invertible", "false".into()),
                ]),
            );
            writeln!(out.stderr, "{input} is not invertible").unwrap();
            Ok(out)
        }
        Err(e) => Err(e.into()),
    }
}

/// Writes `m` to `output`, or returns its text as the table.
fn emit(m: &A1Module, inputs: &[String], output: Option<PathBuf>) -> Outcome {
    let text = serialize_module(m);
    let path = output.as_ref().map(|p| p.display().to_string());
    if let Some(p) = &output {
        std::fs::write(p, &text).map_err(|e| InputError(format!("{}: {e}", p.display())))?;
    }
    let payload = json!({
        "module": m.name(),
        "inputs": inputs,
        "rank": m.rank(),
        "output": path,
    });
    let shown = match &path {
        Some(p) => pairs(&[
            ("module", m.name().to_string()),
            ("rank", m.rank().to_string()),
            ("written", p.clone()),
        ]),
        None => text,
    };
    Ok(Output::new(payload, EXIT_OK, shown))
}

fn check_theorems() -> Outcome {
    let results: Vec<CheckResult> = checks::run_all();
    let passed = results.iter().all(|r| r.passed);
    let rows: Vec<Vec<String>> = results
        .iter()
        .map(|r| {
            vec![
                r.id.to_string(),
                r.name.to_string(),
                if r.passed { "PASS" } else { "FAIL" }.to_string(),
                r.detail.clone(),
            ]
        })
        .collect();
    let payload = json!({ "passed": passed, "checks": results });
    Ok(Output::new(
        payload,
        if passed { EXIT_OK } else { EXIT_FALSE },
        table(&["#", "check", "result", "detail"], &rows),
    ))
}

fn dispatch(command: Command) -> (String, Vec<String>, Outcome) {
    match command {
        Command::Validate { module } => {
            ("validate".into(), vec![module.clone()], validate(&module))
        }
        Command::Info { module } => ("info".into(), vec![module.clone()], info(&module)),
        Command::Margolis { module } => {
            ("margolis".into(), vec![module.clone()], margolis(&module))
        }
        Command::Projective { module } => (
            "projective".into(),
            vec![module.clone()],
            projective(&module),
        ),
        Command::Invertible { module } => (
            "invertible".into(),
            vec![module.clone()],
            invertible(&module),
        ),
        Command::Coords { module } => ("coords".into(), vec![module.clone()], coords(&module)),
        Command::Tensor {
            left,
            right,
            output,
        } => {
            let inputs = vec![left.clone(), right.clone()];
            let out = (|| {
                let m = tensor(&load(&left)?, &load(&right)?)?;
                emit(&m, &inputs, output)
            })();
            ("tensor".into(), inputs, out)
        }
        Command::Dual { module, output } => {
            let inputs = vec![module.clone()];
            let out = load(&module).and_then(|m| emit(&dual(&m), &inputs, output));
            ("dual".into(), inputs, out)
        }
        Command::Loop { module, k, output } => {
            let inputs = vec![module.clone()];
            let out = (|| emit(&loop_power(&load(&module)?, k)?, &inputs, output))();
            ("loop".into(), inputs, out)
        }
        Command::JokerPower { d, output } => {
            let out = (|| emit(&joker_power(d)?, &[], output))();
            ("joker-power".into(), vec![], out)
        }
        Command::Render { module, format } => {
            let out = load(&module).map(|m| {
                let format = match format {
                    RenderFormat::Ascii => Format::Ascii,
                    RenderFormat::Svg => Format::Svg,
                };
                let text = render::render(&m, format);
                Output::new(
                    json!({ "module": m.name(), "diagram": text }),
                    EXIT_OK,
                    text,
                )
            });
            ("render".into(), vec![module], out)
        }
        Command::CheckTheorems => ("check-theorems".into(), vec![], check_theorems()),
    }
}

/// Runs one invocation; `argv` excludes the program name.
pub fn run<I, T>(argv: I) -> Report
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = std::iter::once(OsString::from("a1pic")).chain(argv.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Report {
                    stderr: text,
                    ..Report::failure("", vec![], e.kind().to_string())
                }
            } else {
                Report {
                    command: String::new(),
                    inputs: vec![],
                    payload: Value::Null,
                    status: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let json_mode = cli.json;
    let (command, inputs, outcome) = dispatch(cli.command);
    match outcome {
        Ok(out) => {
            let stdout = if json_mode {
                let mut s = serde_json::to_string_pretty(&out.payload).expect("payload serializes");
                s.push('\n');
                s
            } else {
                out.table
            };
            Report {
                command,
                inputs,
                payload: out.payload,
                status: out.status,
                stdout,
                stderr: out.stderr,
            }
        }
        Err(InputError(message)) => Report::failure(&command, inputs, message),
    }
}
