//! Command-line front end for `sconn`.
//!
//! Every command writes plain `key: value` text (or JSON with `--json`) and
//! exits with one of the [`exit`] codes. [`run`] does all the work and
//! returns the output so it can be driven from tests without a process.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use sconn::{
    beats_digraph, bounds, brute_force_min_extension, certify, extend, find_complete_dicut,
    gen_bipartite_plus_isolated, gen_cycles, gen_tt_minus_path, is_balanced, is_strong,
    parse_certificate, parse_dice, parse_edge_list, search_balanced_realization,
    strong_components, verify_certificate, BoundsReport, Certificate, DiceError, DicutCertificate,
    EdgeConvention, Error, ExtensionPlan, MinExtension, StrictDigraph, Verdict, WinMatrix,
};

pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const NEGATIVE: i32 = 1;
    pub const INPUT: i32 = 2;
    pub const BUDGET: i32 = 3;
}

#[derive(Debug, Parser)]
#[command(name = "sconn", version, about = "Strong connectability of strict digraphs")]
struct Cli {
    /// Emit JSON instead of key: value text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide strong connectability and report structure, plan, and bounds.
    Analyze { file: PathBuf },
    /// Print a certificate, or check one with --verify.
    Certify {
        file: PathBuf,
        #[arg(long, value_name = "CERT")]
        verify: Option<PathBuf>,
    },
    /// Print a strong extension.
    Extend {
        file: PathBuf,
        /// Use the exhaustive minimum instead of the constructive plan.
        #[arg(long)]
        minimize: bool,
        /// Print the resulting digraph as DOT.
        #[arg(long)]
        dot: bool,
    },
    /// Print lower and upper bounds on the edges a strong extension needs.
    Bounds { file: PathBuf },
    /// Evaluate dice or search for dice realizing a digraph.
    #[command(subcommand)]
    Dice(DiceCommand),
    /// Generate example digraphs in edge-list format.
    Gen {
        #[command(subcommand)]
        family: Family,
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Debug, Subcommand)]
enum DiceCommand {
    /// Win matrix, balance, and beats-digraph of a dice file.
    Eval {
        file: PathBuf,
        /// Point beats-digraph edges from loser to winner.
        #[arg(long)]
        loser_to_winner: bool,
    },
    /// Find balanced non-transitive dice whose beats-digraph contains a digraph.
    Realize {
        file: PathBuf,
        #[arg(short = 'k', value_name = "SIDES")]
        k: usize,
        #[arg(long)]
        loser_to_winner: bool,
    },
}

#[derive(Debug, Subcommand)]
enum Family {
    /// Transitive tournament on r vertices minus its spanning path.
    TtMinusPath { r: usize },
    /// K_{p,q} oriented one way plus an isolated vertex.
    Bipartite { p: usize, q: usize },
    /// m disjoint directed k-cycles.
    Cycles { k: usize, m: usize },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self::with_code(stdout, exit::SUCCESS)
    }

    fn with_code(stdout: String, code: i32) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            code,
        }
    }

    fn fail(stderr: impl Into<String>, code: i32) -> Self {
        Self {
            stdout: String::new(),
            stderr: stderr.into(),
            code,
        }
    }
}

/// Parses arguments (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::INPUT } else { exit::SUCCESS };
            let text = e.render().to_string();
            return if code == exit::SUCCESS {
                Output::ok(text)
            } else {
                Output::fail(text, code)
            };
        }
    };
    let json = cli.json;
    let result = match cli.command {
        Command::Analyze { file } => cmd_analyze(&file, json),
        Command::Certify { file, verify } => cmd_certify(&file, verify.as_deref(), json),
        Command::Extend {
            file,
            minimize,
            dot,
        } => cmd_extend(&file, minimize, dot, json),
        Command::Bounds { file } => cmd_bounds(&file, json),
        Command::Dice(DiceCommand::Eval {
            file,
            loser_to_winner,
        }) => cmd_dice_eval(&file, convention(loser_to_winner), json),
        Command::Dice(DiceCommand::Realize {
            file,
            k,
            loser_to_winner,
        }) => cmd_dice_realize(&file, k, convention(loser_to_winner), json),
        Command::Gen { family, dot } => cmd_gen(&family, dot, json),
    };
    result.unwrap_or_else(|f| Output::fail(format!("error: {}\n", f.message), f.code))
}

struct Failure {
    message: String,
    code: i32,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
            code: exit::INPUT,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Budget(_) => exit::BUDGET,
            Error::HasCompleteDicut(_) | Error::NotStrong => exit::NEGATIVE,
            _ => exit::INPUT,
        };
        Self {
            message: e.to_string(),
            code,
        }
    }
}

impl From<DiceError> for Failure {
    fn from(e: DiceError) -> Self {
        let code = match e {
            DiceError::Budget { .. } => exit::BUDGET,
            _ => exit::INPUT,
        };
        Self {
            message: e.to_string(),
            code,
        }
    }
}

type CmdResult = Result<Output, Failure>;

fn convention(loser_to_winner: bool) -> EdgeConvention {
    if loser_to_winner {
        EdgeConvention::LoserToWinner
    } else {
        EdgeConvention::WinnerToLoser
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<StrictDigraph, Failure> {
    parse_edge_list(&read(path)?).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

/// Strong-component counts of a digraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StructureSummary {
    pub r: usize,
    pub s: usize,
    pub t: usize,
    pub c: usize,
    pub c_prime: usize,
    pub u: usize,
}

impl StructureSummary {
    pub fn of(g: &StrictDigraph) -> Self {
        let cond = strong_components(g);
        Self {
            r: cond.r(),
            s: cond.s(),
            t: cond.t(),
            c: cond.c(),
            c_prime: cond.c_prime(),
            u: cond.u(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AnalysisVerdict {
    StronglyConnectable,
    NotConnectable,
    AlreadyStrong,
    TooSmall,
}

impl AnalysisVerdict {
    fn as_str(self) -> &'static str {
        match self {
            AnalysisVerdict::StronglyConnectable => "strongly-connectable",
            AnalysisVerdict::NotConnectable => "not-connectable",
            AnalysisVerdict::AlreadyStrong => "already-strong",
            AnalysisVerdict::TooSmall => "too-small",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            AnalysisVerdict::StronglyConnectable | AnalysisVerdict::AlreadyStrong => exit::SUCCESS,
            AnalysisVerdict::NotConnectable => exit::NEGATIVE,
            AnalysisVerdict::TooSmall => exit::INPUT,
        }
    }
}

/// Everything `analyze` reports about one digraph.
///
/// The certificate is present exactly for `not-connectable`; the plan and
/// bounds exactly for `strongly-connectable`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub verdict: AnalysisVerdict,
    pub n: usize,
    pub structure: StructureSummary,
    pub certificate: Option<DicutCertificate>,
    pub plan: Option<ExtensionPlan>,
    pub bounds: Option<BoundsReport>,
}

impl AnalysisReport {
    pub fn build(g: &StrictDigraph) -> Result<Self, Error> {
        if g.n() == 0 {
            return Err(Error::InvalidInput("empty digraph".into()));
        }
        let structure = StructureSummary::of(g);
        let mut report = Self {
            verdict: AnalysisVerdict::TooSmall,
            n: g.n(),
            structure,
            certificate: None,
            plan: None,
            bounds: None,
        };
        if g.n() < 3 {
            return Ok(report);
        }
        if let Some(cert) = find_complete_dicut(g) {
            report.verdict = AnalysisVerdict::NotConnectable;
            report.certificate = Some(cert);
        } else if is_strong(g) {
            report.verdict = AnalysisVerdict::AlreadyStrong;
        } else {
            report.verdict = AnalysisVerdict::StronglyConnectable;
            report.plan = Some(extend(g)?);
            report.bounds = Some(bounds(g)?);
        }
        Ok(report)
    }

    pub fn to_text(&self) -> String {
        let s = &self.structure;
        let mut out = String::new();
        let _ = writeln!(out, "verdict: {}", self.verdict.as_str());
        let _ = writeln!(out, "n: {}", self.n);
        let _ = writeln!(out, "r: {}", s.r);
        let _ = writeln!(out, "s: {}", s.s);
        let _ = writeln!(out, "t: {}", s.t);
        let _ = writeln!(out, "c: {}", s.c);
        let _ = writeln!(out, "c_prime: {}", s.c_prime);
        let _ = writeln!(out, "u: {}", s.u);
        if let Some(cert) = &self.certificate {
            let _ = writeln!(out, "{cert}");
        }
        if let Some(plan) = &self.plan {
            let _ = writeln!(out, "added: {}", plan.len());
            for (u, v) in &plan.added {
                let _ = writeln!(out, "+ {u} {v}");
            }
        }
        if let Some(b) = &self.bounds {
            out.push_str(&b.to_string());
        }
        out
    }
}

/// `analyze <file>`.
fn cmd_analyze(path: &Path, json: bool) -> CmdResult {
    let g = read_graph(path)?;
    let report = AnalysisReport::build(&g)?;
    let text = if json { to_json(&report) } else { report.to_text() };
    Ok(Output::with_code(text, report.verdict.exit_code()))
}

/// `certify <file> [--verify <cert>]`.
fn cmd_certify(path: &Path, verify: Option<&Path>, json: bool) -> CmdResult {
    let g = read_graph(path)?;
    if let Some(cert_path) = verify {
        let cert = parse_certificate(&read(cert_path)?)
            .map_err(|e| Failure::input(format!("{}: {e}", cert_path.display())))?;
        let verdict = verify_certificate(&g, &cert);
        let (label, reason) = match &verdict {
            Verdict::Valid => ("valid", None),
            Verdict::Invalid(r) => ("invalid", Some(r.as_str())),
        };
        let text = if json {
            to_json(&json!({ "verification": label, "reason": reason }))
        } else {
            match reason {
                Some(r) => format!("verification: invalid\nreason: {r}\n"),
                None => "verification: valid\n".to_string(),
            }
        };
        let code = if verdict.is_valid() { exit::SUCCESS } else { exit::NEGATIVE };
        return Ok(Output::with_code(text, code));
    }
    let cert = certify(&g)?;
    let code = match cert {
        Certificate::Dicut(_) => exit::NEGATIVE,
        Certificate::Extension { .. } => exit::SUCCESS,
    };
    let text = if json {
        let kind = match cert {
            Certificate::Dicut(_) => "dicut",
            Certificate::Extension { .. } => "extension",
        };
        to_json(&json!({ "kind": kind, "certificate": cert.to_string() }))
    } else {
        cert.to_string()
    };
    Ok(Output::with_code(text, code))
}

fn dicut_output(cert: &DicutCertificate, json: bool) -> Output {
    let text = if json {
        to_json(&json!({ "verdict": "not-connectable", "dicut": cert }))
    } else {
        format!("verdict: not-connectable\n{cert}\n")
    };
    Output::with_code(text, exit::NEGATIVE)
}

/// `extend <file> [--minimize] [--dot]`.
fn cmd_extend(path: &Path, minimize: bool, dot: bool, json: bool) -> CmdResult {
    let g = read_graph(path)?;
    let plan = if minimize {
        match brute_force_min_extension(&g)? {
            MinExtension::Found(plan) => plan,
            MinExtension::Impossible(cert) => return Ok(dicut_output(&cert, json)),
        }
    } else {
        match extend(&g) {
            Ok(plan) => plan,
            Err(Error::HasCompleteDicut(cert)) => return Ok(dicut_output(&cert, json)),
            Err(e) => return Err(e.into()),
        }
    };
    let text = if json {
        to_json(&json!({ "minimized": minimize, "plan": plan }))
    } else if dot {
        let mut s = String::new();
        for (u, v) in &plan.added {
            let _ = writeln!(s, "# + {u} {v}");
        }
        s.push_str(&plan.resulting.to_dot());
        s
    } else {
        plan.to_string()
    };
    Ok(Output::ok(text))
}

/// `bounds <file>`.
fn cmd_bounds(path: &Path, json: bool) -> CmdResult {
    let g = read_graph(path)?;
    match bounds(&g) {
        Ok(report) => Ok(Output::ok(if json {
            to_json(&report)
        } else {
            report.to_string()
        })),
        Err(Error::HasCompleteDicut(cert)) => Ok(dicut_output(&cert, json)),
        Err(e) => Err(e.into()),
    }
}

fn convention_name(c: EdgeConvention) -> &'static str {
    match c {
        EdgeConvention::WinnerToLoser => "winner-to-loser",
        EdgeConvention::LoserToWinner => "loser-to-winner",
    }
}

/// `dice eval <file>`.
fn cmd_dice_eval(path: &Path, conv: EdgeConvention, json: bool) -> CmdResult {
    let dice = parse_dice(&read(path)?)
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let matrix = WinMatrix::of(&dice);
    let balance = if dice.len() >= 2 { is_balanced(&dice)? } else { None };
    let beats = beats_digraph(&dice, conv);
    let non_transitive = dice.len() >= 2 && is_strong(&beats);
    if json {
        return Ok(Output::ok(to_json(&json!({
            "dice": dice,
            "win_matrix": matrix,
            "balanced": balance.is_some(),
            "p": balance,
            "strong": non_transitive,
            "convention": conv,
            "beats_digraph": beats,
        }))));
    }
    let mut out = String::from("dice:\n");
    out.push_str(&dice.to_string());
    out.push_str("win_matrix:\n");
    out.push_str(&matrix.to_string());
    match balance {
        Some(p) => {
            let _ = writeln!(out, "balanced: yes");
            let _ = writeln!(out, "p: {p}");
        }
        None => {
            let _ = writeln!(out, "balanced: no");
            let _ = writeln!(out, "p: none");
        }
    }
    let _ = writeln!(out, "strong: {}", if non_transitive { "yes" } else { "no" });
    let _ = writeln!(out, "convention: {}", convention_name(conv));
    out.push_str("beats_digraph:\n");
    out.push_str(&beats.to_edge_list());
    Ok(Output::ok(out))
}

/// `dice realize <file> -k <k>`.
fn cmd_dice_realize(path: &Path, k: usize, conv: EdgeConvention, json: bool) -> CmdResult {
    let h = read_graph(path)?;
    let found = match search_balanced_realization(&h, k, conv) {
        Ok(found) => found,
        Err(DiceError::Budget { count, max }) => {
            // A complete dicut settles the question without searching.
            if let Some(cert) = find_complete_dicut(&h) {
                return Ok(impossible(&cert, json));
            }
            return Err(Failure {
                message: format!("search budget exceeded: {count} partitions > {max}"),
                code: exit::BUDGET,
            });
        }
        Err(e) => return Err(e.into()),
    };
    match found {
        Some(dice) => {
            let p = is_balanced(&dice)?.expect("search returns balanced dice");
            let text = if json {
                to_json(&json!({ "realizable": true, "dice": dice, "p": p, "convention": conv }))
            } else {
                format!(
                    "realizable: yes\np: {p}\nconvention: {}\ndice:\n{dice}",
                    convention_name(conv)
                )
            };
            Ok(Output::ok(text))
        }
        None => match find_complete_dicut(&h) {
            Some(cert) => Ok(impossible(&cert, json)),
            None => {
                let text = if json {
                    to_json(&json!({ "realizable": false, "sides": k, "dicut": null }))
                } else {
                    format!("realizable: no\nreason: no balanced non-transitive set with {k} sides\n")
                };
                Ok(Output::with_code(text, exit::NEGATIVE))
            }
        },
    }
}

fn impossible(cert: &DicutCertificate, json: bool) -> Output {
    let text = if json {
        to_json(&json!({ "realizable": false, "dicut": cert }))
    } else {
        format!("realizable: no\nreason: complete dicut\n{cert}\n")
    };
    Output::with_code(text, exit::NEGATIVE)
}

/// `gen <family> <params...>`.
fn cmd_gen(family: &Family, dot: bool, json: bool) -> CmdResult {
    let g = match *family {
        Family::TtMinusPath { r } => gen_tt_minus_path(r),
        Family::Bipartite { p, q } => gen_bipartite_plus_isolated(p, q),
        Family::Cycles { k, m } => gen_cycles(k, m),
    }
    .map_err(|e| Failure::input(e.to_string()))?;
    let text = if json {
        to_json(&g)
    } else if dot {
        g.to_dot()
    } else {
        g.to_edge_list()
    };
    Ok(Output::ok(text))
}
