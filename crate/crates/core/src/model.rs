//! Parametric joint-probability table over boolean terms.
//!
//! A model over `n` terms has `2^n` parameters `x1 .. x(2^n)`, one per full
//! truth assignment. Assignments are enumerated with the first term most
//! significant and `T` before `F`, so for `(A, B, C)` the row `TTT` is `x1`
//! and `FFF` is `x8`. Every event probability is a sum of parameters, which
//! makes it a [`LinearForm`].

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = num_rational::BigRational;

/// Largest number of terms a model may hold.
pub const MAX_TERMS: usize = 10;

/// Builds the rational `numer / denom`.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("a model needs between 1 and {MAX_TERMS} terms, got {0}")]
    TermCount(usize),
    #[error("duplicate term name `{0}`")]
    DuplicateTerm(String),
    #[error("invalid term name `{0}`")]
    InvalidTermName(String),
    #[error("unknown term `{0}`")]
    UnknownTerm(String),
    #[error("two literals on term `{0}`")]
    RepeatedTerm(String),
    #[error("dimension mismatch: expected {expected}, got {found}")]
    Dimension { expected: usize, found: usize },
    #[error("parameter value {0} outside [0, 1]")]
    OutOfRange(Rational),
    #[error("parameter values sum to {0}, not 1")]
    NotNormalized(Rational),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term {
    name: String,
    index: usize,
}

impl Term {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn index(&self) -> usize {
        self.index
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// A term asserted true (`positive`) or false.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    term: Term,
    positive: bool,
}

impl Literal {
    pub fn new(term: Term, positive: bool) -> Self {
        Literal { term, positive }
    }

    pub fn term(&self) -> &Term {
        &self.term
    }

    pub fn is_positive(&self) -> bool {
        self.positive
    }

    pub fn negated(&self) -> Literal {
        Literal {
            term: self.term.clone(),
            positive: !self.positive,
        }
    }

    /// Whether this literal is true under `assignment`.
    pub fn holds_in(&self, assignment: &[bool]) -> bool {
        assignment[self.term.index] == self.positive
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.positive {
            f.write_str("~")?;
        }
        f.write_str(&self.term.name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Model {
    terms: Vec<Term>,
}

impl Model {
    /// Builds a model over the given term names, in order.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self, ModelError> {
        if names.is_empty() || names.len() > MAX_TERMS {
            return Err(ModelError::TermCount(names.len()));
        }
        let mut terms: Vec<Term> = Vec::with_capacity(names.len());
        for (index, name) in names.iter().enumerate() {
            let name = name.as_ref();
            if !is_valid_term_name(name) {
                return Err(ModelError::InvalidTermName(name.to_string()));
            }
            if terms.iter().any(|t| t.name == name) {
                return Err(ModelError::DuplicateTerm(name.to_string()));
            }
            terms.push(Term {
                name: name.to_string(),
                index,
            });
        }
        Ok(Model { terms })
    }

    /// The three-term model `(A, B, C)` used by every figure problem.
    pub fn standard() -> Self {
        Model::new(&["A", "B", "C"]).expect("standard term set is valid")
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn param_count(&self) -> usize {
        1 << self.terms.len()
    }

    pub fn term(&self, name: &str) -> Result<&Term, ModelError> {
        self.terms
            .iter()
            .find(|t| t.name == name)
            .ok_or_else(|| ModelError::UnknownTerm(name.to_string()))
    }

    pub fn literal(&self, name: &str, positive: bool) -> Result<Literal, ModelError> {
        Ok(Literal::new(self.term(name)?.clone(), positive))
    }

    /// Whether `term` belongs to this model (same name at the same index).
    pub fn contains(&self, term: &Term) -> bool {
        self.terms.get(term.index) == Some(term)
    }

    /// Truth values of the assignment behind the 0-based parameter `param`.
    pub fn assignment(&self, param: usize) -> Vec<bool> {
        let n = self.terms.len();
        (0..n).map(|t| (param >> (n - 1 - t)) & 1 == 0).collect()
    }

    /// 0-based parameter index of a full assignment.
    pub fn param_of(&self, assignment: &[bool]) -> Result<usize, ModelError> {
        if assignment.len() != self.terms.len() {
            return Err(ModelError::Dimension {
                expected: self.terms.len(),
                found: assignment.len(),
            });
        }
        Ok(assignment
            .iter()
            .fold(0usize, |acc, &truth| (acc << 1) | usize::from(!truth)))
    }

    /// Probability of the conjunction of `literals` as a sum of parameters.
    pub fn prob_of_event(&self, literals: &[Literal]) -> Result<LinearForm, ModelError> {
        for (i, lit) in literals.iter().enumerate() {
            if !self.contains(&lit.term) {
                return Err(ModelError::UnknownTerm(lit.term.name.clone()));
            }
            if literals[..i].iter().any(|l| l.term == lit.term) {
                return Err(ModelError::RepeatedTerm(lit.term.name.clone()));
            }
        }
        let coefficients = (0..self.param_count())
            .map(|param| {
                let assignment = self.assignment(param);
                if literals.iter().all(|l| l.holds_in(&assignment)) {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        Ok(LinearForm {
            constant: Rational::zero(),
            coefficients,
        })
    }

    /// `P(p, q)` for any two literals, including two on the same term.
    pub fn joint(&self, p: &Literal, q: &Literal) -> Result<LinearForm, ModelError> {
        if p.term == q.term {
            if p.positive == q.positive {
                self.prob_of_event(std::slice::from_ref(q))
            } else if self.contains(&q.term) {
                Ok(LinearForm::zero(self.param_count()))
            } else {
                Err(ModelError::UnknownTerm(q.term.name.clone()))
            }
        } else {
            self.prob_of_event(&[p.clone(), q.clone()])
        }
    }

    /// `x1 + ... + x(2^n)`.
    pub fn normalization(&self) -> LinearForm {
        self.prob_of_event(&[]).expect("empty event is always valid")
    }
}

/// Term names are an ASCII letter followed by letters, digits or `_`.
pub fn is_valid_term_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// An affine function `constant + sum(coefficients[i] * x(i+1))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm {
    constant: Rational,
    coefficients: Vec<Rational>,
}

impl LinearForm {
    pub fn new(constant: Rational, coefficients: Vec<Rational>) -> Self {
        LinearForm {
            constant,
            coefficients,
        }
    }

    pub fn zero(dim: usize) -> Self {
        LinearForm {
            constant: Rational::zero(),
            coefficients: vec![Rational::zero(); dim],
        }
    }

    /// The single parameter `x(index+1)`.
    pub fn param(dim: usize, index: usize) -> Self {
        let mut form = LinearForm::zero(dim);
        form.coefficients[index] = Rational::one();
        form
    }

    /// Sum of the given 1-based parameters, e.g. `from_params(8, &[5, 7])`
    /// is `x5 + x7`.
    pub fn from_params(dim: usize, params: &[usize]) -> Self {
        let mut form = LinearForm::zero(dim);
        for &p in params {
            form.coefficients[p - 1] += Rational::one();
        }
        form
    }

    pub fn dim(&self) -> usize {
        self.coefficients.len()
    }

    pub fn constant(&self) -> &Rational {
        &self.constant
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.coefficients.iter().all(Zero::is_zero)
    }

    /// 1-based indices of parameters with a nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i + 1)
            .collect()
    }

    fn check_dim(&self, other: usize) -> Result<(), ModelError> {
        if self.dim() == other {
            Ok(())
        } else {
            Err(ModelError::Dimension {
                expected: self.dim(),
                found: other,
            })
        }
    }

    pub fn checked_add(&self, other: &LinearForm) -> Result<LinearForm, ModelError> {
        self.check_dim(other.dim())?;
        Ok(LinearForm {
            constant: &self.constant + &other.constant,
            coefficients: self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &LinearForm) -> Result<LinearForm, ModelError> {
        self.check_dim(other.dim())?;
        Ok(LinearForm {
            constant: &self.constant - &other.constant,
            coefficients: self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, factor: &Rational) -> LinearForm {
        LinearForm {
            constant: &self.constant * factor,
            coefficients: self.coefficients.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn eval(&self, point: &ModelPoint) -> Result<Rational, ModelError> {
        self.eval_values(point.values())
    }

    /// Evaluates at raw parameter values without the simplex checks of
    /// [`ModelPoint`].
    pub fn eval_values(&self, values: &[Rational]) -> Result<Rational, ModelError> {
        self.check_dim(values.len())?;
        Ok(self
            .coefficients
            .iter()
            .zip(values)
            .filter(|(c, _)| !c.is_zero())
            .fold(self.constant.clone(), |acc, (c, v)| acc + c * v))
    }
}

impl Add for &LinearForm {
    type Output = LinearForm;

    /// Panics on dimension mismatch; see [`LinearForm::checked_add`].
    fn add(self, rhs: &LinearForm) -> LinearForm {
        self.checked_add(rhs).expect("linear form dimensions differ")
    }
}

impl Sub for &LinearForm {
    type Output = LinearForm;

    /// Panics on dimension mismatch; see [`LinearForm::checked_sub`].
    fn sub(self, rhs: &LinearForm) -> LinearForm {
        self.checked_sub(rhs).expect("linear form dimensions differ")
    }
}

impl Neg for &LinearForm {
    type Output = LinearForm;

    fn neg(self) -> LinearForm {
        self.scale(&-Rational::one())
    }
}

/// Formats as `x1 + x2`, `-x5 - x6`, `1/2 x3 + 1/100` or `0`.
impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut write_term = |f: &mut fmt::Formatter<'_>, c: &Rational, var: Option<usize>| {
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let magnitude = c.abs();
            match var {
                Some(i) if magnitude.is_one() => write!(f, "x{i}"),
                Some(i) => write!(f, "{magnitude} x{i}"),
                None => write!(f, "{magnitude}"),
            }
        };
        for (i, c) in self.coefficients.iter().enumerate() {
            if !c.is_zero() {
                write_term(f, c, Some(i + 1))?;
            }
        }
        if !self.constant.is_zero() {
            write_term(f, &self.constant, None)?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// A point of the probability simplex: every value in `[0, 1]`, summing to 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModelPoint {
    values: Vec<Rational>,
}

impl ModelPoint {
    pub fn new(values: Vec<Rational>) -> Result<Self, ModelError> {
        let one = Rational::one();
        if let Some(v) = values.iter().find(|v| v.is_negative() || **v > one) {
            return Err(ModelError::OutOfRange(v.clone()));
        }
        let total: Rational = values.iter().sum();
        if total != one {
            return Err(ModelError::NotNormalized(total));
        }
        Ok(ModelPoint { values })
    }

    /// Every parameter equal to `1 / dim`.
    pub fn uniform(dim: usize) -> Self {
        ModelPoint {
            values: vec![rat(1, dim as i64); dim],
        }
    }

    /// All mass on the 0-based parameter `index`.
    pub fn vertex(dim: usize, index: usize) -> Self {
        let mut values = vec![Rational::zero(); dim];
        values[index] = Rational::one();
        ModelPoint { values }
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

impl fmt::Display for ModelPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}
