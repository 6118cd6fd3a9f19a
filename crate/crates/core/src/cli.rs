//! Command-line surface: argument parsing, rendering and exit codes.
//!
//! Exit codes: 0 success, 1 usage error, 2 infeasible premises (`deduce`),
//! 3 self-test mismatch.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::catalog::{
    cell_name, compare, enumerate_all, golden_tables, medieval_name, premises_of, solve_problem, Catalog,
    CatalogEntry, DeductionKind, Figure, GoldenTables, MoodLabel, Problem,
};
use crate::deduce::{deduce_general, DeductionResult, CRITERIA};
use crate::lp::{self, Epsilon, Sense};
use crate::model::{Literal, Model, Rational};
use crate::statements::{
    parse_query, parse_statement, translate, CategoricalStatement, CodeSet, RelationCode,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INFEASIBLE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Csv,
    Json,
}

/// Worker count: a positive integer or `auto`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Jobs {
    #[default]
    Auto,
    Fixed(usize),
}

impl Jobs {
    pub fn as_option(self) -> Option<usize> {
        match self {
            Jobs::Auto => None,
            Jobs::Fixed(n) => Some(n),
        }
    }
}

fn parse_jobs(s: &str) -> Result<Jobs, String> {
    if s == "auto" {
        return Ok(Jobs::Auto);
    }
    match s.parse::<usize>() {
        Ok(n) if n > 0 => Ok(Jobs::Fixed(n)),
        _ => Err(format!("expected a positive integer or `auto`, got `{s}`")),
    }
}

fn parse_code(s: &str) -> Result<RelationCode, String> {
    s.parse::<RelationCode>().map_err(|e| e.to_string())
}

fn parse_epsilon(s: &str) -> Result<Epsilon, String> {
    s.parse::<Epsilon>().map_err(|e| e.to_string())
}

fn parse_figure(s: &str) -> Result<Figure, String> {
    s.parse::<Figure>().map_err(|e| e.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub epsilon: Epsilon,
    pub format: OutputFormat,
    pub jobs: Jobs,
}

#[derive(Debug, Parser)]
#[command(
    name = "syllogistic",
    version,
    about = "Categorical syllogisms by exact linear programming over a probability table"
)]
struct Cli {
    /// Threshold for strict inequalities, as p/q or a decimal.
    #[arg(long, global = true, default_value = "1/100", value_parser = parse_epsilon)]
    epsilon: Epsilon,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Worker threads for enumeration: a positive integer or `auto`.
    #[arg(long, global = true, default_value = "auto", value_parser = parse_jobs)]
    jobs: Jobs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve one figure problem.
    Solve(ProblemArgs),
    /// Deduce from arbitrary premises over a shared term set.
    Deduce {
        /// Premise statement such as `BeA` or `Ai~C`; repeatable.
        #[arg(short = 'p', long = "premise")]
        premises: Vec<String>,
        /// Query such as `A?C` (predicate, `?`, subject).
        #[arg(short = 'q', long = "query")]
        query: String,
        /// Comma-separated term names; inferred from the statements if absent.
        #[arg(long, value_delimiter = ',')]
        terms: Option<Vec<String>>,
    },
    /// Solve all 196 figure problems and print the result tables.
    Enumerate,
    /// Show constraints, optimizations and criteria behind one problem.
    Explain(ProblemArgs),
    /// Compare enumeration against the reference tables.
    Selftest {
        /// Second threshold for the stability check.
        #[arg(long, default_value = "1/1000", value_parser = parse_epsilon)]
        second_epsilon: Epsilon,
        /// Reference tables in the enumerate csv layout, replacing the shipped ones.
        #[arg(long)]
        golden: Option<std::path::PathBuf>,
    },
}

#[derive(Debug, clap::Args)]
struct ProblemArgs {
    /// Figure number 1..4.
    #[arg(value_parser = parse_figure)]
    figure: Figure,
    /// Major premise code (a, á or a+, e, é or e+, i, o, u).
    #[arg(value_parser = parse_code)]
    major: RelationCode,
    /// Minor premise code.
    #[arg(value_parser = parse_code)]
    minor: RelationCode,
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let config = RunConfig {
        epsilon: cli.epsilon,
        format: cli.format,
        jobs: cli.jobs,
    };
    match dispatch(cli.command, &config) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command, config: &RunConfig) -> Result<(String, i32), String> {
    match command {
        Command::Solve(p) => {
            let problem = Problem::new(p.figure, p.major, p.minor);
            Ok((cmd_solve(&problem, config)?, EXIT_OK))
        }
        Command::Deduce {
            premises,
            query,
            terms,
        } => cmd_deduce(&premises, &query, terms.as_deref(), config),
        Command::Enumerate => Ok((cmd_enumerate(config)?, EXIT_OK)),
        Command::Explain(p) => {
            let problem = Problem::new(p.figure, p.major, p.minor);
            Ok((cmd_explain(&problem, config)?, EXIT_OK))
        }
        Command::Selftest {
            second_epsilon,
            golden,
        } => {
            let golden = match golden {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| format!("reading {}: {e}", path.display()))?;
                    GoldenTables::from_csv(&text).map_err(|e| e.to_string())?
                }
                None => golden_tables(),
            };
            let report = cmd_selftest(config, &golden, &second_epsilon)?;
            let code = if report.mismatches.is_empty() {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            };
            Ok((report.text, code))
        }
    }
}

/// Exact rendering with a decimal hint, e.g. `1/100 (≈0.01)`.
pub fn approx(value: &Rational) -> String {
    if value.is_integer() {
        return value.to_string();
    }
    let decimal = value.to_f64().unwrap_or(f64::NAN);
    let short = format!("{decimal:.4}");
    let short = short.trim_end_matches('0').trim_end_matches('.');
    format!("{value} (≈{short})")
}

fn set_or_none(set: &CodeSet) -> String {
    if set.is_empty() {
        "(none)".to_string()
    } else {
        set.to_string()
    }
}

/// One problem's result in the json layout.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellRecord {
    pub figure: u8,
    pub major: String,
    pub minor: String,
    pub classical: Vec<String>,
    pub complementary: Vec<String>,
    pub feasible: bool,
    pub alpha: Vec<String>,
    pub beta: Vec<String>,
}

impl CellRecord {
    pub fn from_entry(entry: &CatalogEntry) -> Self {
        let codes = |set: &CodeSet| set.cell_order().iter().map(|c| c.symbol().to_string()).collect();
        let (alpha, beta) = match entry.result.profile() {
            Some(p) => (
                p.alpha.iter().map(ToString::to_string).collect(),
                p.beta.iter().map(ToString::to_string).collect(),
            ),
            None => (Vec::new(), Vec::new()),
        };
        CellRecord {
            figure: entry.problem.figure.id(),
            major: entry.problem.major.symbol().to_string(),
            minor: entry.problem.minor.symbol().to_string(),
            classical: codes(&entry.result.classical),
            complementary: codes(&entry.result.complementary),
            feasible: entry.result.feasible(),
            alpha,
            beta,
        }
    }
}

pub fn render_json(records: &[CellRecord]) -> String {
    let mut text = serde_json::to_string_pretty(records).expect("records serialize");
    text.push('\n');
    text
}

pub fn parse_json(text: &str) -> Result<Vec<CellRecord>, serde_json::Error> {
    serde_json::from_str(text)
}

fn csv_row(problem: &Problem, kind: DeductionKind, codes: &CodeSet) -> String {
    format!(
        "{},{},{},{},\"{}\"\n",
        problem.figure,
        kind.name(),
        problem.major,
        problem.minor,
        codes.join(";")
    )
}

pub const CSV_HEADER: &str = "figure,kind,major,minor,deductions\n";

pub fn render_csv(entries: &[CatalogEntry]) -> String {
    let mut out = String::from(CSV_HEADER);
    for entry in entries {
        for kind in DeductionKind::BOTH {
            out.push_str(&csv_row(&entry.problem, kind, entry.codes(kind)));
        }
    }
    out
}

/// A 7×7 grid with major codes as rows and minor codes as columns.
fn render_grid(catalog: &Catalog, figure: Figure, kind: DeductionKind) -> String {
    let cell = |major: RelationCode, minor: RelationCode| {
        catalog
            .get(&Problem::new(figure, major, minor))
            .map(|e| e.codes(kind).join(", "))
            .unwrap_or_default()
    };
    let header = "m\\n";
    let mut widths = [0usize; 8];
    widths[0] = header.chars().count();
    for (c, minor) in RelationCode::ALL.iter().enumerate() {
        widths[c + 1] = RelationCode::ALL
            .iter()
            .map(|major| cell(*major, *minor).chars().count())
            .max()
            .unwrap_or(0)
            .max(1);
    }
    let pad = |s: &str, w: usize| format!("{s}{}", " ".repeat(w - s.chars().count()));
    let mut out = String::new();
    let mut line = format!("| {} ", pad(header, widths[0]));
    for (c, minor) in RelationCode::ALL.iter().enumerate() {
        line.push_str(&format!("| {} ", pad(minor.symbol(), widths[c + 1])));
    }
    out.push_str(&line);
    out.push_str("|\n");
    for w in widths {
        out.push_str(&format!("|{}", "-".repeat(w + 2)));
    }
    out.push_str("|\n");
    for major in RelationCode::ALL {
        let mut line = format!("| {} ", pad(major.symbol(), widths[0]));
        for (c, minor) in RelationCode::ALL.iter().enumerate() {
            line.push_str(&format!("| {} ", pad(&cell(major, *minor), widths[c + 1])));
        }
        out.push_str(&line);
        out.push_str("|\n");
    }
    out
}

fn shape_text(figure: Figure) -> String {
    let (mp, ms) = figure.major_shape();
    let (np, ns) = figure.minor_shape();
    format!("major {mp}m{ms}, minor {np}n{ns}")
}

pub fn render_tables_text(catalog: &Catalog) -> String {
    let mut out = String::new();
    for figure in Figure::ALL {
        for (part, kind, query) in [
            ("a", DeductionKind::Classical, "AsC"),
            ("b", DeductionKind::Complementary, "As~C"),
        ] {
            let _ = writeln!(
                out,
                "Figure {figure} ({part}) {} syllogism ({query}); {}",
                kind.name(),
                shape_text(figure)
            );
            out.push_str(&render_grid(catalog, figure, kind));
            out.push('\n');
        }
    }
    out
}

fn mood_lines(problem: &Problem, set: &CodeSet, kind: DeductionKind) -> Vec<String> {
    set.cell_order()
        .into_iter()
        .map(|code| {
            let mood = MoodLabel::new(problem, code, kind);
            match medieval_name(&mood) {
                Some(name) => format!("{mood} ({name})"),
                None => mood.to_string(),
            }
        })
        .collect()
}

fn objective_labels(predicate: &Literal, subject: &Literal) -> [String; 4] {
    let (p, np) = (predicate.to_string(), predicate.negated().to_string());
    let (s, ns) = (subject.to_string(), subject.negated().to_string());
    [
        format!("P({s},{p})"),
        format!("P({s},{np})"),
        format!("P({ns},{p})"),
        format!("P({ns},{np})"),
    ]
}

fn render_bounds_text(result: &DeductionResult) -> String {
    let mut out = String::new();
    let Some(profile) = result.profile() else {
        return out;
    };
    let labels = objective_labels(&result.predicate, &result.subject);
    out.push_str("Bounds:\n");
    for (j, label) in labels.iter().enumerate() {
        let _ = writeln!(
            out,
            "  {:<10} α{} = {:<20} β{} = {}",
            label,
            j + 1,
            approx(&profile.alpha[j]),
            j + 1,
            approx(&profile.beta[j])
        );
    }
    out
}

pub fn cmd_solve(problem: &Problem, config: &RunConfig) -> Result<String, String> {
    let result = solve_problem(problem, &config.epsilon).map_err(|e| e.to_string())?;
    let entry = CatalogEntry {
        problem: *problem,
        result,
    };
    Ok(match config.format {
        OutputFormat::Json => render_json(&[CellRecord::from_entry(&entry)]),
        OutputFormat::Csv => render_csv(std::slice::from_ref(&entry)),
        OutputFormat::Text => {
            let (major, minor) = premises_of(problem);
            let mut out = String::new();
            let _ = writeln!(
                out,
                "Figure {} problem: {major}, {minor}  (ε = {})",
                problem.figure, config.epsilon
            );
            for (kind, query) in [
                (DeductionKind::Classical, "AsC"),
                (DeductionKind::Complementary, "As~C"),
            ] {
                let set = entry.codes(kind);
                let _ = writeln!(out, "{} ({query}): {}", capitalize(kind.name()), set_or_none(set));
                for line in mood_lines(problem, set, kind) {
                    let _ = writeln!(out, "  {line}");
                }
            }
            out.push_str(&render_bounds_text(&entry.result));
            out
        }
    })
}

fn capitalize(s: &str) -> String {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) => c.to_uppercase().chain(chars).collect(),
        None => String::new(),
    }
}

/// Term names mentioned in statement texts: an uppercase ASCII letter
/// followed by digits or underscores, in order of first appearance.
pub fn infer_terms<'a>(texts: impl IntoIterator<Item = &'a str>) -> Vec<String> {
    let mut names: Vec<String> = Vec::new();
    for text in texts {
        let chars: Vec<char> = text.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            if chars[i].is_ascii_uppercase() {
                let mut name = chars[i].to_string();
                i += 1;
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '_') {
                    name.push(chars[i]);
                    i += 1;
                }
                if !names.contains(&name) {
                    names.push(name);
                }
            } else {
                i += 1;
            }
        }
    }
    names
}

#[derive(Debug, Serialize)]
struct DeduceRecord {
    premises: Vec<String>,
    predicate: String,
    subject: String,
    feasible: bool,
    classical: Vec<String>,
    complementary: Vec<String>,
    alpha: Vec<String>,
    beta: Vec<String>,
}

/// Runs a general deduction; returns the rendering and exit code.
pub fn cmd_deduce(
    premises: &[String],
    query: &str,
    terms: Option<&[String]>,
    config: &RunConfig,
) -> Result<(String, i32), String> {
    let names = match terms {
        Some(t) => t.iter().map(|s| s.trim().to_string()).collect(),
        None => infer_terms(premises.iter().map(String::as_str).chain([query])),
    };
    let model = Model::new(&names).map_err(|e| e.to_string())?;
    let statements: Vec<CategoricalStatement> = premises
        .iter()
        .map(|p| parse_statement(&model, p).map_err(|e| format!("premise `{p}`: {e}")))
        .collect::<Result<_, _>>()?;
    let (predicate, subject) = parse_query(&model, query).map_err(|e| format!("query `{query}`: {e}"))?;
    let result = deduce_general(&model, &statements, &predicate, &subject, &config.epsilon)
        .map_err(|e| e.to_string())?;
    let code = if result.feasible() { EXIT_OK } else { EXIT_INFEASIBLE };
    let neg_subject = subject.negated();
    let codes = |set: &CodeSet| -> Vec<String> { set.cell_order().iter().map(|c| c.symbol().to_string()).collect() };

    let text = match config.format {
        OutputFormat::Json => {
            let (alpha, beta) = match result.profile() {
                Some(p) => (
                    p.alpha.iter().map(ToString::to_string).collect(),
                    p.beta.iter().map(ToString::to_string).collect(),
                ),
                None => (Vec::new(), Vec::new()),
            };
            let record = DeduceRecord {
                premises: statements.iter().map(ToString::to_string).collect(),
                predicate: predicate.to_string(),
                subject: subject.to_string(),
                feasible: result.feasible(),
                classical: codes(&result.classical),
                complementary: codes(&result.complementary),
                alpha,
                beta,
            };
            let mut s = serde_json::to_string_pretty(&record).expect("record serializes");
            s.push('\n');
            s
        }
        OutputFormat::Csv => {
            let mut s = String::from("kind,query,feasible,deductions\n");
            let _ = writeln!(
                s,
                "classical,{predicate}?{subject},{},\"{}\"",
                result.feasible(),
                result.classical.join(";")
            );
            let _ = writeln!(
                s,
                "complementary,{predicate}?{neg_subject},{},\"{}\"",
                result.feasible(),
                result.complementary.join(";")
            );
            s
        }
        OutputFormat::Text => {
            let mut s = String::new();
            let listed: Vec<String> = statements.iter().map(ToString::to_string).collect();
            let _ = writeln!(
                s,
                "Premises: {}",
                if listed.is_empty() { "(none)".to_string() } else { listed.join(", ") }
            );
            let _ = writeln!(s, "Query: {predicate}?{subject}  (ε = {})", config.epsilon);
            if !result.feasible() {
                s.push_str("INFEASIBLE: the premises are inconsistent\n");
            } else {
                let fmt_set = |set: &CodeSet, subj: &Literal| {
                    if set.is_empty() {
                        "(none)".to_string()
                    } else {
                        set.cell_order()
                            .iter()
                            .map(|c| format!("{predicate}{c}{subj}"))
                            .collect::<Vec<_>>()
                            .join(", ")
                    }
                };
                let _ = writeln!(s, "Classical: {}", fmt_set(&result.classical, &subject));
                let _ = writeln!(s, "Complementary: {}", fmt_set(&result.complementary, &neg_subject));
                s.push_str(&render_bounds_text(&result));
            }
            s
        }
    };
    Ok((text, code))
}

pub fn cmd_enumerate(config: &RunConfig) -> Result<String, String> {
    let catalog = enumerate_all(&config.epsilon, config.jobs.as_option()).map_err(|e| e.to_string())?;
    Ok(match config.format {
        OutputFormat::Text => render_tables_text(&catalog),
        OutputFormat::Csv => render_csv(&catalog.entries),
        OutputFormat::Json => {
            let records: Vec<CellRecord> = catalog.entries.iter().map(CellRecord::from_entry).collect();
            render_json(&records)
        }
    })
}

/// Step-by-step derivation of one problem; always rendered as text.
pub fn cmd_explain(problem: &Problem, config: &RunConfig) -> Result<String, String> {
    let model = Model::standard();
    let eps = &config.epsilon;
    let (major, minor) = premises_of(problem);
    let result = solve_problem(problem, eps).map_err(|e| e.to_string())?;
    let mut out = String::new();
    let _ = writeln!(out, "Figure {} problem: {major}, {minor}  (ε = {eps})", problem.figure);

    out.push_str("\nConstraints:\n");
    let mut constraints = Vec::new();
    for stmt in [&major, &minor] {
        let translated = translate(&model, stmt).map_err(|e| e.to_string())?;
        for c in &translated {
            let _ = writeln!(out, "  {stmt}: {c}");
        }
        constraints.extend(translated);
    }
    out.push_str("\nAfter ε-reformulation:\n");
    for row in lp::premise_rows(&constraints, eps) {
        let _ = writeln!(out, "  {row}");
    }
    let _ = writeln!(
        out,
        "  0 <= xi <= 1 (i = 1..{0}), {1} = 1",
        model.param_count(),
        model.normalization()
    );

    let Some(bounds) = &result.bounds else {
        out.push_str("\nINFEASIBLE: the premises are inconsistent\n");
        return Ok(out);
    };
    let labels = objective_labels(&result.predicate, &result.subject);
    out.push_str("\nOptimizations:\n");
    for solve in &bounds.solves {
        let symbol = match solve.sense {
            Sense::Min => "α",
            Sense::Max => "β",
        };
        let verb = match solve.sense {
            Sense::Min => "minimize",
            Sense::Max => "maximize",
        };
        let _ = writeln!(
            out,
            "  {symbol}{} = {verb} {} [{}] = {}",
            solve.objective + 1,
            solve.problem.objective(),
            labels[solve.objective],
            approx(&solve.value)
        );
        let _ = writeln!(out, "      at x = {}", solve.witness);
    }

    for (kind, first, subject) in [
        (DeductionKind::Classical, 0, "C"),
        (DeductionKind::Complementary, 2, "~C"),
    ] {
        let _ = writeln!(out, "\n{} criteria:", capitalize(kind.name()));
        for criterion in CRITERIA.iter() {
            let fired = criterion.fires(&bounds.profile, first, eps);
            let _ = writeln!(
                out,
                "  [{}] {} ⇒ A{}{subject}",
                if fired { "x" } else { " " },
                criterion.condition(first),
                criterion.code
            );
        }
    }
    out.push('\n');
    for kind in DeductionKind::BOTH {
        let set = match kind {
            DeductionKind::Classical => &result.classical,
            DeductionKind::Complementary => &result.complementary,
        };
        let moods = mood_lines(problem, set, kind);
        let _ = writeln!(
            out,
            "{}: {}",
            capitalize(kind.name()),
            if moods.is_empty() { "(none)".to_string() } else { moods.join(", ") }
        );
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct SelftestReport {
    pub mismatches: Vec<crate::catalog::Mismatch>,
    pub unstable: Vec<(Problem, DeductionKind)>,
    pub text: String,
}

/// Enumerates at the configured ε, compares with `golden`, then repeats at
/// `second` and lists cells whose deduction sets change.
pub fn cmd_selftest(config: &RunConfig, golden: &GoldenTables, second: &Epsilon) -> Result<SelftestReport, String> {
    let jobs = config.jobs.as_option();
    let catalog = enumerate_all(&config.epsilon, jobs).map_err(|e| e.to_string())?;
    let mismatches = compare(&catalog, golden);
    let bad_problems: std::collections::BTreeSet<Problem> = mismatches.iter().map(|m| m.problem).collect();
    let other = enumerate_all(second, jobs).map_err(|e| e.to_string())?;
    let unstable = catalog.diff(&other);

    let closed = golden
        .cells
        .iter()
        .flat_map(|c| DeductionKind::BOTH.map(|k| c.codes(k)))
        .filter(|set| set.closure() != **set)
        .count();

    let mut text = String::new();
    for m in &mismatches {
        let _ = writeln!(text, "MISMATCH {m}");
    }
    for (problem, kind) in &unstable {
        let _ = writeln!(text, "CHANGED at ε = {second}: {}", cell_name(problem, *kind));
    }
    let _ = writeln!(
        text,
        "{}/{} problems match; ε-stability: {} cells changed",
        Problem::all().len() - bad_problems.len(),
        Problem::all().len(),
        unstable.len()
    );
    let _ = writeln!(
        text,
        "(ε = {} vs {second}; {closed} reference cells compared after implication closure)",
        config.epsilon
    );
    Ok(SelftestReport {
        mismatches,
        unstable,
        text,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("syllogistic").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn term_inference() {
        assert_eq!(infer_terms(["BeA", "BiC", "A?C"]), vec!["B", "A", "C"]);
        assert_eq!(infer_terms(["A1a~B_", "A1?A1"]), vec!["A1", "B_"]);
    }

    #[test]
    fn approx_rendering() {
        assert_eq!(approx(&crate::model::rat(1, 100)), "1/100 (≈0.01)");
        assert_eq!(approx(&crate::model::rat(1, 1)), "1");
        assert_eq!(approx(&crate::model::rat(1, 3)), "1/3 (≈0.3333)");
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(run_str(&["solve", "2", "x", "i"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["solve", "7", "e", "i"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["--epsilon", "2", "solve", "2", "e", "i"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["--jobs", "0", "enumerate"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["bogus"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["deduce", "-p", "AxB", "-q", "A?B"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn ascii_alias_codes() {
        let (code, out, _) = run_str(&["solve", "1", "e", "a+"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("Classical (AsC): é, e, o"), "{out}");
        assert!(out.contains("eáé-1 (Celárént)"), "{out}");
    }
}
