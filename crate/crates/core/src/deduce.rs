//! Bounds on the four extreme-term joint probabilities and the criteria
//! that turn them into deductions.
//!
//! For a query with predicate `A` and subject `C` the four objectives are
//! `P(C,A)`, `P(C,~A)`, `P(~C,A)` and `P(~C,~A)`. Their exact minima
//! `alpha[j]` and maxima `beta[j]` under the premises decide which relation
//! codes are necessary: the first pair drives classical deductions about
//! `C`, the second pair complementary deductions about `~C`.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::lp::{self, Epsilon, LpError, LpOutcome, LpProblem, Sense};
use crate::model::{Literal, LinearForm, Model, ModelError, ModelPoint, Rational};
use crate::statements::{translate, CategoricalStatement, CodeSet, Constraint, RelationCode, StatementError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeduceError {
    #[error(transparent)]
    Statement(#[from] StatementError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Lp(#[from] LpError),
}

/// Labels of the four objectives, in `j = 1..4` order.
pub const OBJECTIVE_LABELS: [&str; 4] = ["P(C,A)", "P(C,~A)", "P(~C,A)", "P(~C,~A)"];

/// The four objectives for predicate `predicate` and subject `subject`:
/// `P(S,P)`, `P(S,~P)`, `P(~S,P)`, `P(~S,~P)`.
pub fn query_objectives(
    model: &Model,
    predicate: &Literal,
    subject: &Literal,
) -> Result<[LinearForm; 4], ModelError> {
    let not_p = predicate.negated();
    let not_s = subject.negated();
    Ok([
        model.joint(predicate, subject)?,
        model.joint(&not_p, subject)?,
        model.joint(predicate, &not_s)?,
        model.joint(&not_p, &not_s)?,
    ])
}

/// The standard objectives `x1+x3`, `x5+x7`, `x2+x4`, `x6+x8` over a model
/// containing terms `A` (major) and `C` (minor).
pub fn objective_forms(model: &Model) -> Result<[LinearForm; 4], ModelError> {
    query_objectives(model, &model.literal("A", true)?, &model.literal("C", true)?)
}

/// Exact minimum `alpha[j]` and maximum `beta[j]` of each objective.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoundsProfile {
    pub alpha: [Rational; 4],
    pub beta: [Rational; 4],
}

impl BoundsProfile {
    /// Bounds with no information: every `alpha = 0`, every `beta = 1`.
    pub fn trivial() -> Self {
        BoundsProfile {
            alpha: std::array::from_fn(|_| Rational::zero()),
            beta: std::array::from_fn(|_| crate::model::rat(1, 1)),
        }
    }
}

impl fmt::Display for BoundsProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..4 {
            if j > 0 {
                f.write_str("; ")?;
            }
            write!(f, "α{}={} β{}={}", j + 1, self.alpha[j], j + 1, self.beta[j])?;
        }
        Ok(())
    }
}

/// One of the eight optimizations behind a [`BoundsProfile`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundSolve {
    /// 0-based objective index.
    pub objective: usize,
    pub sense: Sense,
    pub problem: LpProblem,
    pub value: Rational,
    pub witness: ModelPoint,
}

/// Bounds together with the LP runs that produced them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    pub profile: BoundsProfile,
    pub solves: Vec<BoundSolve>,
}

/// Min and max of each objective subject to `constraints`, or `None` when
/// the constraints are inconsistent.
pub fn bounds_for(
    objectives: &[LinearForm; 4],
    constraints: &[Constraint],
    eps: &Epsilon,
) -> Result<Option<Bounds>, DeduceError> {
    let mut solves = Vec::with_capacity(8);
    for (j, objective) in objectives.iter().enumerate() {
        for sense in [Sense::Min, Sense::Max] {
            let problem = LpProblem::from_constraints(objective.clone(), sense, constraints, eps)?;
            match lp::solve(&problem)? {
                // one infeasible LP means the shared constraint set is
                LpOutcome::Infeasible => return Ok(None),
                LpOutcome::Optimal { value, witness } => solves.push(BoundSolve {
                    objective: j,
                    sense,
                    problem,
                    value,
                    witness,
                }),
            }
        }
    }
    let pick = |j: usize, sense: Sense| {
        solves
            .iter()
            .find(|s| s.objective == j && s.sense == sense)
            .map(|s| s.value.clone())
            .expect("every objective solved in both senses")
    };
    let profile = BoundsProfile {
        alpha: std::array::from_fn(|j| pick(j, Sense::Min)),
        beta: std::array::from_fn(|j| pick(j, Sense::Max)),
    };
    Ok(Some(Bounds { profile, solves }))
}

/// Bounds of the standard objectives over the `(A, B, C)` model.
pub fn compute_bounds(constraints: &[Constraint], eps: &Epsilon) -> Result<Option<Bounds>, DeduceError> {
    let model = Model::standard();
    bounds_for(&objective_forms(&model)?, constraints, eps)
}

/// One row of the criteria schema, instantiated for a bound pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Criterion {
    pub code: RelationCode,
    /// Condition on the first objective of the pair, if any.
    pub first: Option<Test>,
    /// Condition on the second objective of the pair, if any.
    pub second: Option<Test>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Test {
    /// The maximum is exactly zero.
    MaxIsZero,
    /// The minimum is at least epsilon, read as strictly positive.
    MinIsPositive,
}

/// The seven criteria rows, in canonical code order.
pub const CRITERIA: [Criterion; 7] = [
    Criterion { code: RelationCode::A, first: None, second: Some(Test::MaxIsZero) },
    Criterion { code: RelationCode::AExist, first: Some(Test::MinIsPositive), second: Some(Test::MaxIsZero) },
    Criterion { code: RelationCode::E, first: Some(Test::MaxIsZero), second: None },
    Criterion { code: RelationCode::EExist, first: Some(Test::MaxIsZero), second: Some(Test::MinIsPositive) },
    Criterion { code: RelationCode::I, first: Some(Test::MinIsPositive), second: None },
    Criterion { code: RelationCode::O, first: None, second: Some(Test::MinIsPositive) },
    Criterion { code: RelationCode::U, first: Some(Test::MinIsPositive), second: Some(Test::MinIsPositive) },
];

impl Test {
    fn passes(self, min: &Rational, max: &Rational, eps: &Epsilon) -> bool {
        match self {
            Test::MaxIsZero => max.is_zero(),
            Test::MinIsPositive => min >= eps.value(),
        }
    }

    /// e.g. `β₂ = 0` or `α₁ > 0` for the 1-based objective `j`.
    pub fn describe(self, j: usize) -> String {
        let sub = ['₀', '₁', '₂', '₃', '₄'][j];
        match self {
            Test::MaxIsZero => format!("β{sub} = 0"),
            Test::MinIsPositive => format!("α{sub} > 0"),
        }
    }
}

impl Criterion {
    /// Whether the row fires for the objective pair starting at 0-based
    /// index `first` (0 for classical, 2 for complementary).
    pub fn fires(&self, profile: &BoundsProfile, first: usize, eps: &Epsilon) -> bool {
        let check = |test: Option<Test>, j: usize| {
            test.is_none_or(|t| t.passes(&profile.alpha[j], &profile.beta[j], eps))
        };
        check(self.first, first) && check(self.second, first + 1)
    }

    /// Condition text for the pair starting at 0-based index `first`.
    pub fn condition(&self, first: usize) -> String {
        let parts: Vec<String> = [(self.first, first), (self.second, first + 1)]
            .iter()
            .filter_map(|(t, j)| t.map(|t| t.describe(j + 1)))
            .collect();
        parts.join(" ∧ ")
    }
}

fn apply_criteria(profile: &BoundsProfile, first: usize, eps: &Epsilon) -> CodeSet {
    CRITERIA
        .iter()
        .filter(|c| c.fires(profile, first, eps))
        .map(|c| c.code)
        .collect()
}

/// Codes `s` such that `AsC` is necessary, from `alpha/beta` 1 and 2.
pub fn classical_deductions(profile: &BoundsProfile, eps: &Epsilon) -> CodeSet {
    apply_criteria(profile, 0, eps)
}

/// Codes `s` such that `As~C` is necessary, from `alpha/beta` 3 and 4.
pub fn complementary_deductions(profile: &BoundsProfile, eps: &Epsilon) -> CodeSet {
    apply_criteria(profile, 2, eps)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeductionResult {
    pub predicate: Literal,
    pub subject: Literal,
    pub classical: CodeSet,
    pub complementary: CodeSet,
    /// `None` when the premises are inconsistent.
    pub bounds: Option<Bounds>,
}

impl DeductionResult {
    pub fn feasible(&self) -> bool {
        self.bounds.is_some()
    }

    pub fn profile(&self) -> Option<&BoundsProfile> {
        self.bounds.as_ref().map(|b| &b.profile)
    }

    /// Witness points of all LP solves, for spot checks and explanations.
    pub fn witnesses(&self) -> impl Iterator<Item = &ModelPoint> {
        self.bounds.iter().flat_map(|b| b.solves.iter().map(|s| &s.witness))
    }
}

/// Translates every premise over `model`, bounds the four objectives of the
/// query `predicate ? subject`, and applies the criteria.
pub fn deduce_general(
    model: &Model,
    premises: &[CategoricalStatement],
    predicate: &Literal,
    subject: &Literal,
    eps: &Epsilon,
) -> Result<DeductionResult, DeduceError> {
    let mut constraints = Vec::new();
    for premise in premises {
        constraints.extend(translate(model, premise)?);
    }
    for lit in [predicate, subject] {
        if !model.contains(lit.term()) {
            return Err(StatementError::ForeignTerm(lit.term().name().to_string()).into());
        }
    }
    let objectives = query_objectives(model, predicate, subject)?;
    let bounds = bounds_for(&objectives, &constraints, eps)?;
    let (classical, complementary) = match &bounds {
        Some(b) => (
            classical_deductions(&b.profile, eps),
            complementary_deductions(&b.profile, eps),
        ),
        None => (CodeSet::new(), CodeSet::new()),
    };
    Ok(DeductionResult {
        predicate: predicate.clone(),
        subject: subject.clone(),
        classical,
        complementary,
        bounds,
    })
}
