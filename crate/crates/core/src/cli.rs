//! Command-line front end: `check`, `realize`, `verify` and `sigma`.
//!
//! Commands render into a [`CmdOutput`] so they can be driven without a
//! process. Exit codes: 0 accept, 1 reject, 2 usage or input error, 3 the
//! checker disagreed with the oracle or the closed form.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};

use crate::characterize::{check_potentially, sigma_closed_form, CheckReport};
use crate::error::Error;
use crate::graphkit::{contains_bowtie, degree_sequence, to_dot, to_edge_list, BowtieWitness};
use crate::realizer::{realize_detailed, RealizationBase};
use crate::seqcore::{parse_sequence, sigma, DegreeSequence};
use crate::verify::{sigma_empirical, verify_characterization};

pub const EXIT_ACCEPT: i32 = 0;
pub const EXIT_REJECT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_FALSIFIED: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputMode {
    #[default]
    Text,
    /// `key=value` lines.
    Structured,
    Dot,
    Edges,
}

impl OutputMode {
    fn name(self) -> &'static str {
        match self {
            OutputMode::Text => "text",
            OutputMode::Structured => "structured",
            OutputMode::Dot => "dot",
            OutputMode::Edges => "edges",
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "bowtie",
    version,
    about = "Potentially (K5-C4)-graphic degree sequences"
)]
pub struct Cli {
    #[arg(long, short, value_enum, default_value_t = OutputMode::Text, global = true)]
    pub output: OutputMode,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether SEQ (e.g. `4,3^4`) is potentially (K5-C4)-graphic
    Check { seq: String },
    /// Print a realization of SEQ that contains K5-C4
    Realize { seq: String },
    /// Compare the checker with brute force on every graphic sequence of length N (5..=8)
    Verify { n: usize },
    /// Compute sigma(K5-C4, N) by exhaustive scan and compare with 4N-4 (5..=8)
    Sigma { n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CmdOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CmdOutput {
    fn usage(message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        stderr.push('\n');
        CmdOutput {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr,
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn unsupported(mode: OutputMode, command: &str) -> CmdOutput {
    CmdOutput::usage(format!(
        "output mode {} is not supported by {command}",
        mode.name()
    ))
}

fn verdict_line(report: &CheckReport) -> String {
    match report.failure {
        None => "potentially: yes".to_string(),
        Some(f) => format!("potentially: no ({f})"),
    }
}

fn structured_check(out: &mut String, command: &str, seq: &DegreeSequence, report: &CheckReport) {
    let _ = writeln!(out, "command={command}");
    let _ = writeln!(out, "sequence={seq}");
    let _ = writeln!(out, "n={}", seq.len());
    let _ = writeln!(out, "sum={}", sigma(seq));
    let _ = writeln!(out, "graphic={}", report.graphic);
    let _ = writeln!(out, "potentially={}", report.potentially);
    let failure = report
        .failure
        .map_or_else(|| "none".to_string(), |f| f.code());
    let _ = writeln!(out, "failure={failure}");
}

fn parse_or_usage(seq_text: &str) -> Result<DegreeSequence, CmdOutput> {
    parse_sequence(seq_text)
        .map_err(|e| CmdOutput::usage(format!("invalid sequence {seq_text:?}: {e}")))
}

pub fn cmd_check(seq_text: &str, mode: OutputMode) -> CmdOutput {
    if matches!(mode, OutputMode::Dot | OutputMode::Edges) {
        return unsupported(mode, "check");
    }
    let seq = match parse_or_usage(seq_text) {
        Ok(s) => s,
        Err(out) => return out,
    };
    let report = check_potentially(&seq);
    let mut stdout = String::new();
    match mode {
        OutputMode::Structured => structured_check(&mut stdout, "check", &seq, &report),
        _ => {
            let _ = writeln!(stdout, "sequence: {seq}");
            let _ = writeln!(stdout, "graphic: {}", yes_no(report.graphic));
            let _ = writeln!(stdout, "{}", verdict_line(&report));
        }
    }
    CmdOutput {
        code: if report.potentially {
            EXIT_ACCEPT
        } else {
            EXIT_REJECT
        },
        stdout,
        stderr: String::new(),
    }
}

fn witness_text(w: &BowtieWitness) -> String {
    format!(
        "bowtie center={} wing1={},{} wing2={},{}",
        w.center, w.wing1.0, w.wing1.1, w.wing2.0, w.wing2.1
    )
}

pub fn cmd_realize(seq_text: &str, mode: OutputMode) -> CmdOutput {
    let seq = match parse_or_usage(seq_text) {
        Ok(s) => s,
        Err(out) => return out,
    };
    let report = check_potentially(&seq);
    if !report.potentially {
        let mut out = CmdOutput {
            code: EXIT_REJECT,
            ..CmdOutput::default()
        };
        match mode {
            OutputMode::Structured => structured_check(&mut out.stdout, "realize", &seq, &report),
            OutputMode::Text => {
                out.stdout = format!("sequence: {seq}\n{}\n", verdict_line(&report))
            }
            OutputMode::Dot | OutputMode::Edges => {
                out.stderr = format!("sequence: {seq}\n{}\n", verdict_line(&report))
            }
        }
        return out;
    }
    let realization = match realize_detailed(&seq) {
        Ok(r) => r,
        Err(e @ Error::InternalExhaustion(_)) => {
            return CmdOutput {
                code: EXIT_FALSIFIED,
                stdout: String::new(),
                stderr: format!("{e}\n"),
            }
        }
        Err(e) => return CmdOutput::usage(e.to_string()),
    };
    let g = &realization.graph;
    let construction = match realization.base {
        RealizationBase::Search => "search".to_string(),
        RealizationBase::Family(f) => format!("family {f}"),
    };
    let witness = contains_bowtie(g);
    let verified = degree_sequence(g).is_ok_and(|d| d == seq) && witness.is_some();
    let Some(witness) = witness.filter(|_| verified) else {
        return CmdOutput {
            code: EXIT_FALSIFIED,
            stdout: String::new(),
            stderr: format!("realization of {seq} failed verification\n"),
        };
    };
    let mut stdout = String::new();
    match mode {
        OutputMode::Edges => {
            let _ = writeln!(stdout, "# {}", witness_text(&witness));
            stdout.push_str(&to_edge_list(g));
        }
        OutputMode::Dot => {
            let _ = writeln!(stdout, "// {}", witness_text(&witness));
            stdout.push_str(&to_dot(g));
        }
        OutputMode::Text => {
            let _ = writeln!(stdout, "sequence: {seq}");
            let _ = writeln!(stdout, "potentially: yes");
            let _ = writeln!(stdout, "vertices: {}", g.vertex_count());
            let _ = writeln!(stdout, "edges: {}", g.edge_count());
            let _ = writeln!(
                stdout,
                "construction: {construction}, {} lay-off steps",
                realization.layoffs
            );
            let _ = writeln!(stdout, "# {}", witness_text(&witness));
            stdout.push_str(&to_edge_list(g));
        }
        OutputMode::Structured => {
            structured_check(&mut stdout, "realize", &seq, &report);
            let _ = writeln!(stdout, "vertices={}", g.vertex_count());
            let _ = writeln!(stdout, "edge_count={}", g.edge_count());
            let _ = writeln!(stdout, "construction={construction}");
            let _ = writeln!(stdout, "layoffs={}", realization.layoffs);
            let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
            let _ = writeln!(stdout, "edges={}", edges.join(","));
            let _ = writeln!(stdout, "bowtie_center={}", witness.center);
            let _ = writeln!(
                stdout,
                "bowtie_wing1={},{}",
                witness.wing1.0, witness.wing1.1
            );
            let _ = writeln!(
                stdout,
                "bowtie_wing2={},{}",
                witness.wing2.0, witness.wing2.1
            );
            let _ = writeln!(stdout, "degrees_verified=true");
        }
    }
    CmdOutput {
        code: EXIT_ACCEPT,
        stdout,
        stderr: String::new(),
    }
}

pub fn cmd_verify(n: usize, mode: OutputMode) -> CmdOutput {
    if matches!(mode, OutputMode::Dot | OutputMode::Edges) {
        return unsupported(mode, "verify");
    }
    let summary = match verify_characterization(n) {
        Ok(s) => s,
        Err(e) => return CmdOutput::usage(e.to_string()),
    };
    let mut stdout = String::new();
    let sep = if mode == OutputMode::Structured {
        "="
    } else {
        ": "
    };
    let _ = writeln!(stdout, "n{sep}{}", summary.n);
    let _ = writeln!(stdout, "sequences_tested{sep}{}", summary.sequences_tested);
    let _ = writeln!(
        stdout,
        "potentially_count{sep}{}",
        summary.potentially_count
    );
    let _ = writeln!(stdout, "mismatches{sep}{}", summary.mismatches.len());
    for m in &summary.mismatches {
        let _ = writeln!(
            stdout,
            "mismatch{sep}{} checker={} oracle={}",
            m.sequence, m.checker, m.oracle
        );
    }
    CmdOutput {
        code: if summary.agrees() {
            EXIT_ACCEPT
        } else {
            EXIT_FALSIFIED
        },
        stdout,
        stderr: String::new(),
    }
}

pub fn cmd_sigma(n: usize, mode: OutputMode) -> CmdOutput {
    if matches!(mode, OutputMode::Dot | OutputMode::Edges) {
        return unsupported(mode, "sigma");
    }
    let (report, closed) = match sigma_empirical(n).and_then(|r| Ok((sigma_closed_form(n)?, r))) {
        Ok((closed, r)) => (r, closed),
        Err(e) => return CmdOutput::usage(e.to_string()),
    };
    let agree = report.bound == closed && report.boundary_mismatches.is_empty();
    let mut stdout = String::new();
    if mode == OutputMode::Structured {
        let _ = writeln!(stdout, "n={n}");
        let _ = writeln!(stdout, "empirical={}", report.bound);
        let _ = writeln!(stdout, "closed_form={closed}");
        let _ = writeln!(stdout, "agree={agree}");
        let _ = writeln!(stdout, "witness={}", report.witness);
        let _ = writeln!(stdout, "witness_sum={}", sigma(&report.witness));
        let _ = writeln!(stdout, "boundary_checked={}", report.boundary_checked);
        let _ = writeln!(
            stdout,
            "boundary_mismatches={}",
            report.boundary_mismatches.len()
        );
    } else {
        let _ = writeln!(stdout, "n: {n}");
        let _ = writeln!(
            stdout,
            "empirical: {}, closed-form: {closed}, agree: {}",
            report.bound,
            yes_no(agree)
        );
        let _ = writeln!(
            stdout,
            "witness: {} (sum {})",
            report.witness,
            sigma(&report.witness)
        );
        let _ = writeln!(
            stdout,
            "boundary: {} sequences confirmed by brute force, {} mismatches",
            report.boundary_checked,
            report.boundary_mismatches.len()
        );
    }
    CmdOutput {
        code: if agree { EXIT_ACCEPT } else { EXIT_FALSIFIED },
        stdout,
        stderr: String::new(),
    }
}

pub fn run(cli: &Cli) -> CmdOutput {
    match &cli.command {
        Command::Check { seq } => cmd_check(seq, cli.output),
        Command::Realize { seq } => cmd_realize(seq, cli.output),
        Command::Verify { n } => cmd_verify(*n, cli.output),
        Command::Sigma { n } => cmd_sigma(*n, cli.output),
    }
}
