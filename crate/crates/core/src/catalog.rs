//! The four figures, the 196 figure problems, mood labels and the shipped
//! reference tables.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::deduce::{deduce_general, DeduceError, DeductionResult};
use crate::lp::Epsilon;
use crate::model::Model;
use crate::statements::{CategoricalStatement, CodeSet, RelationCode, StatementError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("figure must be 1..=4, got {0}")]
    Figure(String),
    #[error("malformed mood label `{0}`")]
    Mood(String),
    #[error("golden table line {line}: {reason}")]
    Golden { line: usize, reason: String },
    #[error(transparent)]
    Deduce(#[from] DeduceError),
    #[error("failed to start worker pool: {0}")]
    Pool(String),
}

/// Which way round each premise is stated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Figure(u8);

impl Figure {
    pub const ALL: [Figure; 4] = [Figure(1), Figure(2), Figure(3), Figure(4)];

    pub fn new(id: u8) -> Result<Self, CatalogError> {
        if (1..=4).contains(&id) {
            Ok(Figure(id))
        } else {
            Err(CatalogError::Figure(id.to_string()))
        }
    }

    pub fn id(self) -> u8 {
        self.0
    }

    /// `(predicate, subject)` of the major premise.
    pub fn major_shape(self) -> (&'static str, &'static str) {
        match self.0 {
            1 | 3 => ("A", "B"),
            _ => ("B", "A"),
        }
    }

    /// `(predicate, subject)` of the minor premise.
    pub fn minor_shape(self) -> (&'static str, &'static str) {
        match self.0 {
            1 | 2 => ("B", "C"),
            _ => ("C", "B"),
        }
    }
}

impl FromStr for Figure {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.trim()
            .parse::<u8>()
            .map_err(|_| CatalogError::Figure(s.to_string()))
            .and_then(Figure::new)
    }
}

impl fmt::Display for Figure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Problem {
    pub figure: Figure,
    pub major: RelationCode,
    pub minor: RelationCode,
}

impl Problem {
    pub fn new(figure: Figure, major: RelationCode, minor: RelationCode) -> Self {
        Problem { figure, major, minor }
    }

    /// All 196 problems: by figure, then major code, then minor code.
    pub fn all() -> Vec<Problem> {
        let mut out = Vec::with_capacity(196);
        for figure in Figure::ALL {
            for major in RelationCode::ALL {
                for minor in RelationCode::ALL {
                    out.push(Problem::new(figure, major, minor));
                }
            }
        }
        out
    }
}

/// Instantiates the figure's premise shapes over the standard model.
pub fn premises_of(problem: &Problem) -> (CategoricalStatement, CategoricalStatement) {
    let model = Model::standard();
    let lit = |name: &str| model.literal(name, true).expect("standard term");
    let (mp, ms) = problem.figure.major_shape();
    let (np, ns) = problem.figure.minor_shape();
    (
        CategoricalStatement::new(lit(mp), problem.major, lit(ms)),
        CategoricalStatement::new(lit(np), problem.minor, lit(ns)),
    )
}

/// Runs the standard query `A ? C` on one figure problem.
pub fn solve_problem(problem: &Problem, eps: &Epsilon) -> Result<DeductionResult, DeduceError> {
    let model = Model::standard();
    let (major, minor) = premises_of(problem);
    let a = model.literal("A", true)?;
    let c = model.literal("C", true)?;
    deduce_general(&model, &[major, minor], &a, &c, eps)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DeductionKind {
    Classical,
    Complementary,
}

impl DeductionKind {
    pub const BOTH: [DeductionKind; 2] = [DeductionKind::Classical, DeductionKind::Complementary];

    pub fn name(self) -> &'static str {
        match self {
            DeductionKind::Classical => "classical",
            DeductionKind::Complementary => "complementary",
        }
    }
}

impl FromStr for DeductionKind {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "classical" => Ok(DeductionKind::Classical),
            "complementary" => Ok(DeductionKind::Complementary),
            other => Err(CatalogError::Golden {
                line: 0,
                reason: format!("unknown kind `{other}`"),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub problem: Problem,
    pub result: DeductionResult,
}

impl CatalogEntry {
    pub fn codes(&self, kind: DeductionKind) -> &CodeSet {
        match kind {
            DeductionKind::Classical => &self.result.classical,
            DeductionKind::Complementary => &self.result.complementary,
        }
    }
}

/// Results for all 196 problems in [`Problem::all`] order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    pub epsilon: Epsilon,
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn get(&self, problem: &Problem) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.problem == *problem)
    }

    /// Cells whose deduction sets differ from `other`.
    pub fn diff(&self, other: &Catalog) -> Vec<(Problem, DeductionKind)> {
        let mut out = Vec::new();
        for entry in &self.entries {
            let Some(theirs) = other.get(&entry.problem) else {
                continue;
            };
            for kind in DeductionKind::BOTH {
                if entry.codes(kind) != theirs.codes(kind) {
                    out.push((entry.problem, kind));
                }
            }
        }
        out
    }
}

/// Solves every figure problem. `jobs = Some(1)` runs on the calling
/// thread; otherwise problems fan out over a worker pool of the given size
/// (or rayon's default). Output order never depends on scheduling.
pub fn enumerate_all(eps: &Epsilon, jobs: Option<usize>) -> Result<Catalog, CatalogError> {
    let problems = Problem::all();
    let run = |p: &Problem| {
        solve_problem(p, eps).map(|result| CatalogEntry {
            problem: *p,
            result,
        })
    };
    let entries: Result<Vec<_>, DeduceError> = match jobs {
        Some(1) => problems.iter().map(run).collect(),
        _ => {
            let mut builder = rayon::ThreadPoolBuilder::new();
            if let Some(n) = jobs {
                builder = builder.num_threads(n);
            }
            let pool = builder.build().map_err(|e| CatalogError::Pool(e.to_string()))?;
            pool.install(|| problems.par_iter().map(run).collect())
        }
    };
    Ok(Catalog {
        epsilon: eps.clone(),
        entries: entries?,
    })
}

type Grid = [[&'static str; 7]; 7];

// Rows are major-premise codes, columns minor-premise codes, both in
// a, á, e, é, i, o, u order. Cells are copied as printed.
const FIGURE_1_CLASSICAL: Grid = [
    ["a", "á, a, i", "", "", "i", "", "i"],
    ["a", "á, a, i", "", "", "i", "", "i"],
    ["e", "é, e, o", "", "", "o", "", "o"],
    ["e", "é, e, o", "", "", "o", "", "o"],
    ["", "", "", "", "", "", ""],
    ["", "", "", "", "", "", ""],
    ["", "", "", "", "", "", ""],
];
const FIGURE_1_COMPLEMENTARY: Grid = [
    ["", "", "", "", "", "", ""],
    ["", "", "i", "i", "", "", ""],
    ["", "", "", "", "", "", ""],
    ["", "", "o", "o", "", "", ""],
    ["", "", "i", "i", "", "", ""],
    ["", "", "o", "o", "", "", ""],
    ["", "", "u", "u", "", "", ""],
];
const FIGURE_2_CLASSICAL: Grid = [
    ["", "", "e", "é, e, o", "", "o", "o"],
    ["", "", "e", "é, e, o", "", "o", "o"],
    ["e", "é, e, o", "", "", "o", "", "o"],
    ["e", "é, e, o", "", "", "o", "", "o"],
    ["", "", "", "", "", "", ""],
    ["", "", "", "", "", "", ""],
    ["", "", "", "", "", "", ""],
];
const FIGURE_2_COMPLEMENTARY: Grid = [
    ["", "", "", "", "", "", ""],
    ["", "", "i", "i", "", "", ""],
    ["", "", "", "", "", "", ""],
    ["i", "i", "", "", "", "", ""],
    ["", "", "i", "i", "", "", ""],
    ["i", "i", "", "", "", "", ""],
    ["i", "i", "i", "i", "", "", ""],
];
const FIGURE_3_CLASSICAL: Grid = [
    ["", "i", "", "", "i", "", "i"],
    ["i", "i", "", "", "i", "", "i"],
    ["", "o", "", "", "o", "", "o"],
    ["o", "o", "", "", "o", "", "o"],
    ["i", "i", "", "", "", "", ""],
    ["o", "o", "", "", "", "", ""],
    ["u", "u", "", "", "", "", ""],
];
const FIGURE_3_COMPLEMENTARY: Grid = [
    ["", "", "", "i", "", "i", "i"],
    ["", "", "i", "i", "", "i", "i"],
    ["", "", "", "o", "", "o", "o"],
    ["", "", "o", "o", "", "o", "o"],
    ["", "", "i", "i", "", "", ""],
    ["", "", "o", "o", "", "", ""],
    ["", "", "u", "u", "", "", ""],
];
const FIGURE_4_CLASSICAL: Grid = [
    ["", "", "e", "e", "", "", ""],
    ["i", "i", "e", "e", "", "", ""],
    ["", "o", "", "", "o", "", "o"],
    ["", "o", "", "", "o", "", "o"],
    ["i", "i", "", "", "", "", ""],
    ["", "", "", "", "", "", ""],
    ["i", "i", "", "", "", "", ""],
];
const FIGURE_4_COMPLEMENTARY: Grid = [
    ["e", "e", "", "", "", "", ""],
    ["e", "e", "i", "i", "", "", ""],
    ["", "", "", "o", "", "o", "o"],
    ["", "", "", "o", "", "o", "o"],
    ["", "", "i", "i", "", "", ""],
    ["", "", "", "", "", "", ""],
    ["", "", "i", "i", "", "", ""],
];

const GRIDS: [(Grid, Grid); 4] = [
    (FIGURE_1_CLASSICAL, FIGURE_1_COMPLEMENTARY),
    (FIGURE_2_CLASSICAL, FIGURE_2_COMPLEMENTARY),
    (FIGURE_3_CLASSICAL, FIGURE_3_COMPLEMENTARY),
    (FIGURE_4_CLASSICAL, FIGURE_4_COMPLEMENTARY),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenCell {
    pub problem: Problem,
    pub classical: CodeSet,
    pub complementary: CodeSet,
}

impl GoldenCell {
    pub fn codes(&self, kind: DeductionKind) -> &CodeSet {
        match kind {
            DeductionKind::Classical => &self.classical,
            DeductionKind::Complementary => &self.complementary,
        }
    }
}

/// Reference deduction sets for all 196 problems.
///
/// The printed tables list `u` on its own although the criteria that put
/// `u` in a cell also put `i` and `o` there. Comparisons therefore close
/// each reference cell under implication (`á ⇒ a, i`; `é ⇒ e, o`;
/// `u ⇒ i, o`) before checking it; cells are stored exactly as printed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenTables {
    pub cells: Vec<GoldenCell>,
}

/// The shipped reference tables.
pub fn golden_tables() -> GoldenTables {
    let mut cells = Vec::with_capacity(196);
    for (figure, (classical, complementary)) in Figure::ALL.iter().zip(GRIDS.iter()) {
        for (r, major) in RelationCode::ALL.iter().enumerate() {
            for (c, minor) in RelationCode::ALL.iter().enumerate() {
                cells.push(GoldenCell {
                    problem: Problem::new(*figure, *major, *minor),
                    classical: CodeSet::parse_list(classical[r][c]).expect("shipped table parses"),
                    complementary: CodeSet::parse_list(complementary[r][c]).expect("shipped table parses"),
                });
            }
        }
    }
    GoldenTables { cells }
}

impl GoldenTables {
    pub fn get(&self, problem: &Problem) -> Option<&GoldenCell> {
        self.cells.iter().find(|c| c.problem == *problem)
    }

    /// Reads tables in the `figure,kind,major,minor,deductions` layout
    /// (header optional, deductions `;`-joined and optionally quoted).
    /// Every problem must be covered in both kinds.
    pub fn from_csv(text: &str) -> Result<GoldenTables, CatalogError> {
        let mut golden = GoldenTables {
            cells: Problem::all()
                .into_iter()
                .map(|problem| GoldenCell {
                    problem,
                    classical: CodeSet::new(),
                    complementary: CodeSet::new(),
                })
                .collect(),
        };
        let mut seen = std::collections::HashSet::new();
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            let err = |reason: String| CatalogError::Golden { line: line_no, reason };
            let line = line.trim();
            if line.is_empty() || line.starts_with("figure,") {
                continue;
            }
            let fields: Vec<&str> = line.splitn(5, ',').collect();
            if fields.len() != 5 {
                return Err(err("expected 5 fields".into()));
            }
            let figure: Figure = fields[0].parse().map_err(|e: CatalogError| err(e.to_string()))?;
            let kind: DeductionKind = fields[1].parse().map_err(|e: CatalogError| err(e.to_string()))?;
            let parse_code = |s: &str| s.trim().parse::<RelationCode>().map_err(|e: StatementError| err(e.to_string()));
            let problem = Problem::new(figure, parse_code(fields[2])?, parse_code(fields[3])?);
            let codes = CodeSet::parse_list(fields[4].trim().trim_matches('"')).map_err(|e| err(e.to_string()))?;
            if !seen.insert((problem, kind)) {
                return Err(err(format!("duplicate cell {}", cell_name(&problem, kind))));
            }
            let cell = golden
                .cells
                .iter_mut()
                .find(|c| c.problem == problem)
                .expect("all problems present");
            match kind {
                DeductionKind::Classical => cell.classical = codes,
                DeductionKind::Complementary => cell.complementary = codes,
            }
        }
        if seen.len() != 2 * 196 {
            return Err(CatalogError::Golden {
                line: text.lines().count(),
                reason: format!("covers {} of 392 cells", seen.len()),
            });
        }
        Ok(golden)
    }
}

/// `(figure, row, column)` name of a cell, e.g. `(1,e,á) classical`.
pub fn cell_name(problem: &Problem, kind: DeductionKind) -> String {
    format!(
        "({},{},{}) {}",
        problem.figure,
        problem.major,
        problem.minor,
        kind.name()
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub problem: Problem,
    pub kind: DeductionKind,
    /// Reference cell as stored.
    pub expected: CodeSet,
    pub computed: CodeSet,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: expected {{{}}}, computed {{{}}}",
            cell_name(&self.problem, self.kind),
            self.expected,
            self.computed
        )
    }
}

/// Cell-by-cell comparison of computed results against the reference,
/// with reference cells closed under implication.
pub fn compare(catalog: &Catalog, golden: &GoldenTables) -> Vec<Mismatch> {
    let mut out = Vec::new();
    for cell in &golden.cells {
        let computed = catalog.get(&cell.problem);
        for kind in DeductionKind::BOTH {
            let computed = computed.map(|e| e.codes(kind).clone()).unwrap_or_default();
            if cell.codes(kind).closure() != computed {
                out.push(Mismatch {
                    problem: cell.problem,
                    kind,
                    expected: cell.codes(kind).clone(),
                    computed,
                });
            }
        }
    }
    out
}

/// `mns-k` for classical moods, `mns-~k` for complementary ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MoodLabel {
    pub major: RelationCode,
    pub minor: RelationCode,
    pub conclusion: RelationCode,
    pub figure: Figure,
    pub complementary: bool,
}

impl MoodLabel {
    pub fn new(problem: &Problem, conclusion: RelationCode, kind: DeductionKind) -> Self {
        MoodLabel {
            major: problem.major,
            minor: problem.minor,
            conclusion,
            figure: problem.figure,
            complementary: kind == DeductionKind::Complementary,
        }
    }

    pub fn codes(&self) -> [RelationCode; 3] {
        [self.major, self.minor, self.conclusion]
    }

    pub fn is_accented(&self) -> bool {
        self.codes().iter().any(|c| c.is_existential())
    }

    /// Renders with `a+`/`e+` in place of accented letters.
    pub fn ascii(&self) -> String {
        let bar = if self.complementary { "~" } else { "" };
        format!(
            "{}{}{}-{bar}{}",
            self.major.ascii(),
            self.minor.ascii(),
            self.conclusion.ascii(),
            self.figure
        )
    }
}

impl fmt::Display for MoodLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bar = if self.complementary { "~" } else { "" };
        write!(f, "{}{}{}-{bar}{}", self.major, self.minor, self.conclusion, self.figure)
    }
}

/// Accepts `eio-2`, `iei-~1`, `iei-1̄` (combining overline), `ea+e+-1`.
impl FromStr for MoodLabel {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CatalogError::Mood(s.to_string());
        let (codes, fig) = s.trim().rsplit_once('-').ok_or_else(bad)?;
        let mut parsed = Vec::with_capacity(3);
        let mut rest = codes;
        while !rest.is_empty() {
            let (code, used) = RelationCode::parse_prefix(rest).ok_or_else(bad)?;
            parsed.push(code);
            rest = &rest[used..];
        }
        let [major, minor, conclusion] = parsed[..] else {
            return Err(bad());
        };
        let (complementary, digits) = if let Some(d) = fig.strip_prefix('~') {
            (true, d)
        } else if let Some(d) = fig.strip_suffix('\u{305}') {
            (true, d)
        } else {
            (false, fig)
        };
        let figure: Figure = digits.parse().map_err(|_| bad())?;
        Ok(MoodLabel {
            major,
            minor,
            conclusion,
            figure,
            complementary,
        })
    }
}

/// Traditional names keyed by unaccented mood and figure.
const TRADITIONAL_NAMES: [(&str, u8, &str, bool); 24] = [
    // (codes, figure, name, valid without existential import)
    ("aaa", 1, "Barbara", true),
    ("aii", 1, "Darii", true),
    ("eae", 1, "Celarent", true),
    ("eio", 1, "Ferio", true),
    ("aai", 1, "Barbari", false),
    ("eao", 1, "Celaront", false),
    ("aee", 2, "Camestres", true),
    ("aoo", 2, "Baroco", true),
    ("eae", 2, "Cesare", true),
    ("eio", 2, "Festino", true),
    ("eao", 2, "Cesaro", false),
    ("aeo", 2, "Camestros", false),
    ("aii", 3, "Datisi", true),
    ("eio", 3, "Ferison", true),
    ("iai", 3, "Disamis", true),
    ("oao", 3, "Bocardo", true),
    ("aai", 3, "Darapti", false),
    ("eao", 3, "Felapton", false),
    ("aee", 4, "Camenes", true),
    ("eio", 4, "Fresison", true),
    ("iai", 4, "Dimaris", true),
    ("aai", 4, "Bramantip", false),
    ("eao", 4, "Fesapo", false),
    ("aeo", 4, "Calemos", false),
];

/// A medieval mnemonic, possibly with accented vowels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MedievalName {
    base: &'static str,
    /// Which of the first three vowels carry an acute accent.
    accents: [bool; 3],
}

impl MedievalName {
    pub fn base(&self) -> &'static str {
        self.base
    }

    fn render(&self, accent: impl Fn(char) -> String) -> String {
        let mut vowel = 0;
        let mut out = String::new();
        for ch in self.base.chars() {
            if "aeiouAEIOU".contains(ch) {
                if vowel < 3 && self.accents[vowel] {
                    out.push_str(&accent(ch));
                } else {
                    out.push(ch);
                }
                vowel += 1;
            } else {
                out.push(ch);
            }
        }
        out
    }

    /// TeX-style rendering, e.g. `Cel\'ar\'ent`.
    pub fn latex(&self) -> String {
        self.render(|c| format!("\\'{c}"))
    }
}

/// UTF-8 rendering, e.g. `Celárént`.
impl fmt::Display for MedievalName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = self.render(|c| match c {
            'a' => "á".to_string(),
            'e' => "é".to_string(),
            other => format!("{other}\u{301}"),
        });
        f.write_str(&text)
    }
}

/// The medieval name of a classical mood.
///
/// Unaccented moods are named only when valid under the material reading
/// of their premises (the fifteen classical modes). Accented moods borrow
/// the traditional name of their unaccented form and copy each accent onto
/// the matching vowel. Complementary moods have no name.
pub fn medieval_name(mood: &MoodLabel) -> Option<MedievalName> {
    if mood.complementary {
        return None;
    }
    let key: String = mood.codes().iter().map(|c| c.base().symbol()).collect();
    let accents = mood.codes().map(|c| c.is_existential());
    let accented = accents.iter().any(|&a| a);
    TRADITIONAL_NAMES
        .iter()
        .find(|(codes, fig, _, valid)| {
            *codes == key && *fig == mood.figure.id() && (accented || *valid)
        })
        .map(|(_, _, name, _)| MedievalName { base: name, accents })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(s: &str) -> RelationCode {
        s.parse().unwrap()
    }

    fn problem(fig: u8, major: &str, minor: &str) -> Problem {
        Problem::new(Figure::new(fig).unwrap(), code(major), code(minor))
    }

    #[test]
    fn premise_shapes() {
        let (maj, min) = premises_of(&problem(2, "e", "i"));
        assert_eq!((maj.to_string(), min.to_string()), ("BeA".into(), "BiC".into()));
        let (maj, min) = premises_of(&problem(1, "a", "a"));
        assert_eq!((maj.to_string(), min.to_string()), ("AaB".into(), "BaC".into()));
        let (maj, min) = premises_of(&problem(4, "i", "a"));
        assert_eq!((maj.to_string(), min.to_string()), ("BiA".into(), "CaB".into()));
        let (maj, min) = premises_of(&problem(3, "o", "á"));
        assert_eq!((maj.to_string(), min.to_string()), ("AoB".into(), "CáB".into()));
    }

    #[test]
    fn problem_order() {
        let all = Problem::all();
        assert_eq!(all.len(), 196);
        assert_eq!(all[0], problem(1, "a", "a"));
        assert_eq!(all[1], problem(1, "a", "á"));
        assert_eq!(all[7], problem(1, "á", "a"));
        assert_eq!(all[195], problem(4, "u", "u"));
        assert!(Figure::new(0).is_err() && Figure::new(5).is_err());
    }

    #[test]
    fn golden_lookups() {
        let g = golden_tables();
        assert_eq!(g.cells.len(), 196);
        assert_eq!(g.get(&problem(2, "a", "é")).unwrap().classical.join(", "), "é, e, o");
        assert_eq!(g.get(&problem(2, "u", "a")).unwrap().complementary.join(", "), "i");
        assert!(g.get(&problem(1, "i", "i")).unwrap().classical.is_empty());
    }

    #[test]
    fn golden_csv_round_trip() {
        let g = golden_tables();
        let mut csv = String::from("figure,kind,major,minor,deductions\n");
        for cell in &g.cells {
            for kind in DeductionKind::BOTH {
                let p = cell.problem;
                csv.push_str(&format!(
                    "{},{},{},{},\"{}\"\n",
                    p.figure,
                    kind.name(),
                    p.major,
                    p.minor,
                    cell.codes(kind).join(";")
                ));
            }
        }
        assert_eq!(GoldenTables::from_csv(&csv).unwrap(), g);
        let truncated: String = csv.lines().take(10).map(|l| format!("{l}\n")).collect();
        assert!(GoldenTables::from_csv(&truncated).is_err());
        assert!(GoldenTables::from_csv("1,classical,a,x,\"\"").is_err());
    }

    #[test]
    fn mood_labels() {
        let m: MoodLabel = "eio-2".parse().unwrap();
        assert_eq!(m.to_string(), "eio-2");
        let bar: MoodLabel = "iei-~1".parse().unwrap();
        assert!(bar.complementary);
        assert_eq!(bar.to_string(), "iei-~1");
        assert_eq!("iei-1\u{305}".parse::<MoodLabel>().unwrap(), bar);
        let acc: MoodLabel = "ea+e+-1".parse().unwrap();
        assert_eq!(acc.to_string(), "eáé-1");
        assert_eq!(acc.ascii(), "ea+e+-1");
        assert!("ei-2".parse::<MoodLabel>().is_err());
        assert!("eio-5".parse::<MoodLabel>().is_err());
        assert!("eio2".parse::<MoodLabel>().is_err());
    }

    #[test]
    fn medieval_names() {
        let name = |s: &str| medieval_name(&s.parse().unwrap()).map(|n| n.to_string());
        assert_eq!(name("eio-2").as_deref(), Some("Festino"));
        assert_eq!(name("aaa-1").as_deref(), Some("Barbara"));
        assert_eq!(name("iai-4").as_deref(), Some("Dimaris"));
        assert_eq!(name("eáé-1").as_deref(), Some("Celárént"));
        let latex = |s: &str| medieval_name(&s.parse().unwrap()).map(|n| n.latex());
        assert_eq!(latex("eáé-1").as_deref(), Some("Cel\\'ar\\'ent"));
        assert_eq!(latex("eáe-1").as_deref(), Some("Cel\\'arent"));
        assert_eq!(latex("eáo-1").as_deref(), Some("Cel\\'aront"));
        assert_eq!(latex("áai-3").as_deref(), Some("D\\'arapti"));
        assert_eq!(latex("ááí-3".replace('í', "i").as_str()).as_deref(), Some("D\\'ar\\'apti"));
        assert_eq!(latex("éáo-4").as_deref(), Some("F\\'es\\'apo"));
        assert_eq!(latex("áai-4").as_deref(), Some("Br\\'amantip"));
        // invalid without existential import
        assert_eq!(name("aai-3"), None);
        assert_eq!(name("eao-1"), None);
        assert_eq!(name("iei-~1"), None);
        assert_eq!(name("uuu-1"), None);
    }
}
