//! Categorical statements and their translation into linear constraints.
//!
//! A statement `PsQ` relates a predicate literal `P` to a subject literal `Q`
//! through one of seven composite relation codes. Each code is a disjunction
//! of the four mutually exclusive primary relations, which are stated in
//! terms of the unconditioned probabilities `J = P(Q, P)` and `S = P(Q)`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::model::{Literal, LinearForm, Model, ModelError, ModelPoint, Rational};

/// The seven composite relation codes, declared in the canonical
/// `a, á, e, é, i, o, u` order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelationCode {
    /// `a`: universal-affirmative-material.
    A,
    /// `á`: universal-affirmative-existential.
    AExist,
    /// `e`: universal-negative-material.
    E,
    /// `é`: universal-negative-existential.
    EExist,
    /// `i`: particular-affirmative.
    I,
    /// `o`: particular-negative.
    O,
    /// `u`: particular-intermediate.
    U,
}

impl RelationCode {
    pub const ALL: [RelationCode; 7] = [
        RelationCode::A,
        RelationCode::AExist,
        RelationCode::E,
        RelationCode::EExist,
        RelationCode::I,
        RelationCode::O,
        RelationCode::U,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            RelationCode::A => "a",
            RelationCode::AExist => "á",
            RelationCode::E => "e",
            RelationCode::EExist => "é",
            RelationCode::I => "i",
            RelationCode::O => "o",
            RelationCode::U => "u",
        }
    }

    pub fn ascii(self) -> &'static str {
        match self {
            RelationCode::AExist => "a+",
            RelationCode::EExist => "e+",
            other => other.symbol(),
        }
    }

    /// Position in the canonical order.
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn is_existential(self) -> bool {
        matches!(self, RelationCode::AExist | RelationCode::EExist)
    }

    /// The unaccented code letter (`á` becomes `a`).
    pub fn base(self) -> RelationCode {
        match self {
            RelationCode::AExist => RelationCode::A,
            RelationCode::EExist => RelationCode::E,
            other => other,
        }
    }

    /// Ordering used inside result cells: existential subtypes ahead of
    /// their material counterparts (`á, a, i`).
    pub fn cell_rank(self) -> usize {
        match self {
            RelationCode::AExist => 0,
            RelationCode::A => 1,
            RelationCode::EExist => 2,
            RelationCode::E => 3,
            RelationCode::I => 4,
            RelationCode::O => 5,
            RelationCode::U => 6,
        }
    }

    /// Longest-prefix parse of a code from `text`; returns the code and the
    /// number of bytes consumed.
    pub fn parse_prefix(text: &str) -> Option<(RelationCode, usize)> {
        const TABLE: [(&str, RelationCode); 11] = [
            ("a+", RelationCode::AExist),
            ("e+", RelationCode::EExist),
            ("á", RelationCode::AExist),
            ("é", RelationCode::EExist),
            // decomposed forms: base letter plus combining acute
            ("a\u{301}", RelationCode::AExist),
            ("e\u{301}", RelationCode::EExist),
            ("a", RelationCode::A),
            ("e", RelationCode::E),
            ("i", RelationCode::I),
            ("o", RelationCode::O),
            ("u", RelationCode::U),
        ];
        TABLE
            .iter()
            .filter(|(s, _)| text.starts_with(s))
            .max_by_key(|(s, _)| s.len())
            .map(|(s, c)| (*c, s.len()))
    }
}

impl fmt::Display for RelationCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for RelationCode {
    type Err = StatementError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match RelationCode::parse_prefix(s) {
            Some((code, len)) if len == s.len() => Ok(code),
            _ => Err(StatementError::UnknownCode(s.to_string())),
        }
    }
}

/// A set of relation codes.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CodeSet(BTreeSet<RelationCode>);

impl CodeSet {
    pub fn new() -> Self {
        CodeSet::default()
    }

    pub fn insert(&mut self, code: RelationCode) {
        self.0.insert(code);
    }

    pub fn contains(&self, code: RelationCode) -> bool {
        self.0.contains(&code)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_superset(&self, other: &CodeSet) -> bool {
        self.0.is_superset(&other.0)
    }

    /// Codes in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = RelationCode> + '_ {
        self.0.iter().copied()
    }

    /// Codes in cell order (`á, a, é, e, i, o, u`).
    pub fn cell_order(&self) -> Vec<RelationCode> {
        let mut codes: Vec<_> = self.iter().collect();
        codes.sort_by_key(|c| c.cell_rank());
        codes
    }

    /// Adds every code implied by one already present:
    /// `á ⇒ a, i`; `é ⇒ e, o`; `u ⇒ i, o`.
    pub fn closure(&self) -> CodeSet {
        let mut out = self.clone();
        for code in self.iter() {
            let implied: &[RelationCode] = match code {
                RelationCode::AExist => &[RelationCode::A, RelationCode::I],
                RelationCode::EExist => &[RelationCode::E, RelationCode::O],
                RelationCode::U => &[RelationCode::I, RelationCode::O],
                _ => &[],
            };
            for &c in implied {
                out.insert(c);
            }
        }
        out
    }

    /// Joins the codes in cell order with `sep`.
    pub fn join(&self, sep: &str) -> String {
        self.cell_order()
            .iter()
            .map(|c| c.symbol())
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Parses codes separated by commas, semicolons or whitespace.
    pub fn parse_list(text: &str) -> Result<CodeSet, StatementError> {
        text.split(|c: char| c == ',' || c == ';' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(str::parse)
            .collect()
    }
}

impl FromIterator<RelationCode> for CodeSet {
    fn from_iter<T: IntoIterator<Item = RelationCode>>(iter: T) -> Self {
        CodeSet(iter.into_iter().collect())
    }
}

impl fmt::Display for CodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.join(", "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PrimaryRelation {
    /// `P(Q) = 0`.
    ImpossibleSubject,
    /// `P(Q,P) = P(Q)` and `P(Q) > 0`.
    UniversalAffirmativeExistential,
    /// `P(Q,P) = 0` and `P(Q) > 0`.
    UniversalNegativeExistential,
    /// `0 < P(Q,P) < P(Q)`.
    ParticularIntermediate,
}

impl PrimaryRelation {
    pub fn numeral(self) -> &'static str {
        match self {
            PrimaryRelation::ImpossibleSubject => "I",
            PrimaryRelation::UniversalAffirmativeExistential => "II",
            PrimaryRelation::UniversalNegativeExistential => "III",
            PrimaryRelation::ParticularIntermediate => "IV",
        }
    }

    /// The primary relation holding between `joint = P(Q,P)` and
    /// `subject = P(Q)`. Exactly one always applies.
    pub fn classify(joint: &Rational, subject: &Rational) -> PrimaryRelation {
        if subject.is_zero() {
            PrimaryRelation::ImpossibleSubject
        } else if joint == subject {
            PrimaryRelation::UniversalAffirmativeExistential
        } else if joint.is_zero() {
            PrimaryRelation::UniversalNegativeExistential
        } else {
            PrimaryRelation::ParticularIntermediate
        }
    }
}

/// The primary relations whose disjunction defines `code`.
pub fn composite_definition(code: RelationCode) -> &'static [PrimaryRelation] {
    use PrimaryRelation::*;
    match code {
        RelationCode::A => &[ImpossibleSubject, UniversalAffirmativeExistential],
        RelationCode::AExist => &[UniversalAffirmativeExistential],
        RelationCode::E => &[ImpossibleSubject, UniversalNegativeExistential],
        RelationCode::EExist => &[UniversalNegativeExistential],
        RelationCode::I => &[UniversalAffirmativeExistential, ParticularIntermediate],
        RelationCode::O => &[UniversalNegativeExistential, ParticularIntermediate],
        RelationCode::U => &[ParticularIntermediate],
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StatementError {
    #[error("unknown relation code `{0}`")]
    UnknownCode(String),
    #[error("malformed literal in `{0}`")]
    MalformedLiteral(String),
    #[error("unknown term `{0}`")]
    UnknownTerm(String),
    #[error("statement term `{0}` is not part of the model")]
    ForeignTerm(String),
    #[error(transparent)]
    Model(#[from] ModelError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CategoricalStatement {
    pub predicate: Literal,
    pub subject: Literal,
    pub relation: RelationCode,
}

impl CategoricalStatement {
    pub fn new(predicate: Literal, relation: RelationCode, subject: Literal) -> Self {
        CategoricalStatement {
            predicate,
            subject,
            relation,
        }
    }

    /// Checks that both literals belong to `model`.
    pub fn check_model(&self, model: &Model) -> Result<(), StatementError> {
        for lit in [&self.predicate, &self.subject] {
            if !model.contains(lit.term()) {
                return Err(StatementError::ForeignTerm(lit.term().name().to_string()));
            }
        }
        Ok(())
    }
}

/// Renders with the UTF-8 code symbol and `~` for negation, e.g. `Ai~C`.
impl fmt::Display for CategoricalStatement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.predicate, self.relation, self.subject)
    }
}

pub fn format_statement(stmt: &CategoricalStatement) -> String {
    stmt.to_string()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConstraintKind {
    EqZero,
    GtZero,
}

/// `form = 0` or `form > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Constraint {
    pub form: LinearForm,
    pub kind: ConstraintKind,
}

impl Constraint {
    pub fn eq_zero(form: LinearForm) -> Self {
        Constraint {
            form,
            kind: ConstraintKind::EqZero,
        }
    }

    pub fn gt_zero(form: LinearForm) -> Self {
        Constraint {
            form,
            kind: ConstraintKind::GtZero,
        }
    }

    pub fn is_satisfied(&self, point: &ModelPoint) -> Result<bool, ModelError> {
        let value = self.form.eval(point)?;
        Ok(match self.kind {
            ConstraintKind::EqZero => value.is_zero(),
            ConstraintKind::GtZero => value.is_positive(),
        })
    }

    /// Scales the form so its first nonzero coefficient has magnitude 1
    /// (and sign +1 for equalities). Forms without coefficients are left as
    /// they are.
    pub fn normalized(&self) -> Constraint {
        let lead = self
            .form
            .coefficients()
            .iter()
            .find(|c| !c.is_zero())
            .cloned();
        match lead {
            None => self.clone(),
            Some(lead) => {
                let divisor = match self.kind {
                    ConstraintKind::EqZero => lead,
                    ConstraintKind::GtZero => lead.abs(),
                };
                Constraint {
                    form: self.form.scale(&(Rational::one() / divisor)),
                    kind: self.kind,
                }
            }
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.kind {
            ConstraintKind::EqZero => "=",
            ConstraintKind::GtZero => ">",
        };
        write!(f, "{} {op} 0", self.form)
    }
}

/// Normalized, deduplicated view of a constraint list, for set comparison.
pub fn constraint_set(constraints: &[Constraint]) -> BTreeSet<Constraint> {
    constraints.iter().map(Constraint::normalized).collect()
}

/// Compiles a statement into constraints over `model`.
///
/// With `J = P(Q,P)` and `S = P(Q)`: `a ↦ S−J = 0`; `á ↦ S−J = 0, S > 0`;
/// `e ↦ J = 0`; `é ↦ J = 0, S > 0`; `i ↦ J > 0`; `o ↦ S−J > 0`;
/// `u ↦ J > 0, S−J > 0`.
pub fn translate(
    model: &Model,
    stmt: &CategoricalStatement,
) -> Result<Vec<Constraint>, StatementError> {
    stmt.check_model(model)?;
    let joint = model.joint(&stmt.predicate, &stmt.subject)?;
    let subject = model.prob_of_event(std::slice::from_ref(&stmt.subject))?;
    let remainder = &subject - &joint;
    Ok(match stmt.relation {
        RelationCode::A => vec![Constraint::eq_zero(remainder)],
        RelationCode::AExist => vec![Constraint::eq_zero(remainder), Constraint::gt_zero(subject)],
        RelationCode::E => vec![Constraint::eq_zero(joint)],
        RelationCode::EExist => vec![Constraint::eq_zero(joint), Constraint::gt_zero(subject)],
        RelationCode::I => vec![Constraint::gt_zero(joint)],
        RelationCode::O => vec![Constraint::gt_zero(remainder)],
        RelationCode::U => vec![Constraint::gt_zero(joint), Constraint::gt_zero(remainder)],
    })
}

/// Truth of `stmt` at `point`, evaluated from the primary relations by
/// summing table rows directly rather than through [`translate`].
pub fn holds(
    model: &Model,
    stmt: &CategoricalStatement,
    point: &ModelPoint,
) -> Result<bool, StatementError> {
    stmt.check_model(model)?;
    if point.dim() != model.param_count() {
        return Err(ModelError::Dimension {
            expected: model.param_count(),
            found: point.dim(),
        }
        .into());
    }
    let mut subject = Rational::zero();
    let mut joint = Rational::zero();
    for (param, value) in point.values().iter().enumerate() {
        let assignment = model.assignment(param);
        if stmt.subject.holds_in(&assignment) {
            subject += value;
            if stmt.predicate.holds_in(&assignment) {
                joint += value;
            }
        }
    }
    let primary = PrimaryRelation::classify(&joint, &subject);
    Ok(composite_definition(stmt.relation).contains(&primary))
}

/// Parses one literal at the start of `text` against the model's term names
/// (longest match wins). Returns the literal and bytes consumed.
fn parse_literal_prefix(model: &Model, text: &str) -> Result<(Literal, usize), StatementError> {
    let (positive, skip) = if let Some(rest) = text.strip_prefix('~') {
        (false, text.len() - rest.len())
    } else if let Some(rest) = text.strip_prefix('¬') {
        (false, text.len() - rest.len())
    } else {
        (true, 0)
    };
    let rest = &text[skip..];
    let term = model
        .terms()
        .iter()
        .filter(|t| rest.starts_with(t.name()))
        .max_by_key(|t| t.name().len())
        .ok_or_else(|| {
            let word: String = rest.chars().take_while(|c| c.is_ascii_alphanumeric()).collect();
            if word.is_empty() {
                StatementError::MalformedLiteral(text.to_string())
            } else {
                StatementError::UnknownTerm(word)
            }
        })?;
    Ok((Literal::new(term.clone(), positive), skip + term.name().len()))
}

/// Parses a literal such as `A` or `~C`.
pub fn parse_literal(model: &Model, text: &str) -> Result<Literal, StatementError> {
    let text = text.trim();
    let (lit, used) = parse_literal_prefix(model, text)?;
    if used != text.len() {
        return Err(StatementError::MalformedLiteral(text.to_string()));
    }
    Ok(lit)
}

/// Parses `<literal><code><literal>`, e.g. `AaB`, `Ae+C`, `Ai~C`.
pub fn parse_statement(model: &Model, text: &str) -> Result<CategoricalStatement, StatementError> {
    let text = text.trim();
    let (predicate, used) = parse_literal_prefix(model, text)?;
    let rest = &text[used..];
    let (relation, code_len) = RelationCode::parse_prefix(rest).ok_or_else(|| {
        StatementError::UnknownCode(rest.chars().take(2).collect())
    })?;
    let subject = parse_literal(model, &rest[code_len..]).map_err(|e| match e {
        StatementError::MalformedLiteral(_) => StatementError::MalformedLiteral(text.to_string()),
        other => other,
    })?;
    Ok(CategoricalStatement::new(predicate, relation, subject))
}

/// Parses a query `<literal>?<literal>`, e.g. `A?C`; returns
/// `(predicate, subject)`.
pub fn parse_query(model: &Model, text: &str) -> Result<(Literal, Literal), StatementError> {
    let text = text.trim();
    let (predicate, used) = parse_literal_prefix(model, text)?;
    let rest = text[used..]
        .strip_prefix('?')
        .ok_or_else(|| StatementError::MalformedLiteral(text.to_string()))?;
    let subject = parse_literal(model, rest)?;
    Ok((predicate, subject))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{rat, LinearForm};

    fn stmt(m: &Model, s: &str) -> CategoricalStatement {
        parse_statement(m, s).unwrap()
    }

    #[test]
    fn composite_table() {
        use PrimaryRelation::*;
        assert_eq!(
            composite_definition(RelationCode::A),
            &[ImpossibleSubject, UniversalAffirmativeExistential]
        );
        assert_eq!(composite_definition(RelationCode::U), &[ParticularIntermediate]);
        assert_eq!(
            composite_definition(RelationCode::I),
            &[UniversalAffirmativeExistential, ParticularIntermediate]
        );
    }

    #[test]
    fn translate_examples() {
        let m = Model::standard();
        let aab = translate(&m, &stmt(&m, "AáB")).unwrap();
        assert_eq!(
            constraint_set(&aab),
            constraint_set(&[
                Constraint::eq_zero(LinearForm::from_params(8, &[5, 6])),
                Constraint::gt_zero(LinearForm::from_params(8, &[1, 2, 5, 6])),
            ])
        );
        assert_eq!(aab[0].to_string(), "x5 + x6 = 0");

        let bea = translate(&m, &stmt(&m, "BeA")).unwrap();
        assert_eq!(bea, vec![Constraint::eq_zero(LinearForm::from_params(8, &[1, 2]))]);

        let bic = translate(&m, &stmt(&m, "BiC")).unwrap();
        assert_eq!(bic, vec![Constraint::gt_zero(LinearForm::from_params(8, &[1, 5]))]);

        let aoa = translate(&m, &stmt(&m, "AoA")).unwrap();
        assert_eq!(aoa, vec![Constraint::gt_zero(LinearForm::zero(8))]);
    }

    #[test]
    fn holds_examples() {
        let m = Model::standard();
        // all mass on x4 = (T, F, F): P(B) = 0
        let no_b = ModelPoint::vertex(8, 3);
        assert!(holds(&m, &stmt(&m, "AaB"), &no_b).unwrap());
        assert!(!holds(&m, &stmt(&m, "AáB"), &no_b).unwrap());
        assert!(holds(&m, &stmt(&m, "AiB"), &ModelPoint::uniform(8)).unwrap());
    }

    #[test]
    fn parse_examples() {
        let m = Model::standard();
        let s = stmt(&m, "AaB");
        assert_eq!(s.predicate, m.literal("A", true).unwrap());
        assert_eq!(s.subject, m.literal("B", true).unwrap());
        assert_eq!(s.relation, RelationCode::A);

        let s = stmt(&m, "Ae+C");
        assert_eq!(s.relation, RelationCode::EExist);
        assert_eq!(s.subject, m.literal("C", true).unwrap());

        let s = stmt(&m, "Ai~C");
        assert_eq!(s.relation, RelationCode::I);
        assert_eq!(s.subject, m.literal("C", false).unwrap());
        assert_eq!(s.to_string(), "Ai~C");

        assert_eq!(stmt(&m, "Aa\u{301}B").relation, RelationCode::AExist);
        assert_eq!(stmt(&m, "¬AéC").predicate, m.literal("A", false).unwrap());
    }

    #[test]
    fn parse_errors() {
        let m = Model::standard();
        assert!(matches!(parse_statement(&m, "AxB"), Err(StatementError::UnknownCode(_))));
        assert!(matches!(parse_statement(&m, "AaD"), Err(StatementError::UnknownTerm(_))));
        assert!(matches!(parse_statement(&m, "Aa~"), Err(StatementError::MalformedLiteral(_))));
        assert!(matches!(parse_statement(&m, "AaBC"), Err(StatementError::MalformedLiteral(_))));
        assert!(parse_statement(&m, "").is_err());
        assert!(parse_query(&m, "A?").is_err());
        assert_eq!(
            parse_query(&m, "A?~C").unwrap(),
            (m.literal("A", true).unwrap(), m.literal("C", false).unwrap())
        );
    }

    #[test]
    fn multi_letter_terms() {
        let m = Model::new(&["Dog", "Do", "Cat"]).unwrap();
        let s = parse_statement(&m, "DogeCat").unwrap();
        assert_eq!(s.predicate.term().name(), "Dog");
        assert_eq!(s.relation, RelationCode::E);
        assert_eq!(parse_statement(&m, &s.to_string()).unwrap(), s);
    }

    #[test]
    fn code_sets() {
        let set: CodeSet = [RelationCode::I, RelationCode::A, RelationCode::AExist]
            .into_iter()
            .collect();
        assert_eq!(set.join(", "), "á, a, i");
        assert_eq!(CodeSet::parse_list("é;e;o").unwrap().join(", "), "é, e, o");
        let u: CodeSet = [RelationCode::U].into_iter().collect();
        assert_eq!(u.closure().join(","), "i,o,u");
        assert_eq!("e+".parse::<RelationCode>().unwrap(), RelationCode::EExist);
        assert!("x".parse::<RelationCode>().is_err());
    }

    #[test]
    fn constraint_normalization() {
        let f = LinearForm::from_params(8, &[1, 2]).scale(&rat(-3, 1));
        let c = Constraint::eq_zero(f.clone()).normalized();
        assert_eq!(c.form, LinearForm::from_params(8, &[1, 2]));
        let g = Constraint::gt_zero(f).normalized();
        assert_eq!(g.form, -&LinearForm::from_params(8, &[1, 2]));
    }
}
