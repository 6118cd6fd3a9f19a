//! Exact linear programming over the probability simplex.
//!
//! Every problem lives inside `{x : 0 <= x_i <= 1, sum x_i = 1}` on top of
//! its own premise rows, so the feasible region is always bounded. Strict
//! premise constraints `f > 0` are weakened to `f >= eps` before solving.
//!
//! [`solve`] runs a dense two-phase primal simplex on `BigRational` with
//! Bland's rule. [`vertex_oracle`] enumerates basic feasible solutions by
//! brute force and exists to cross-check the simplex on small problems.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::model::{rat, LinearForm, ModelError, ModelPoint, Rational};
use crate::statements::{Constraint, ConstraintKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LpError {
    #[error("epsilon must lie strictly between 0 and 1, got {0}")]
    InvalidEpsilon(String),
    #[error("objective has {objective} parameters but row {row} has {found}")]
    Dimension {
        objective: usize,
        row: usize,
        found: usize,
    },
    #[error("problem too large for the vertex oracle ({0})")]
    ScaleExceeded(String),
    #[error("internal solver error: {0}")]
    Internal(String),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Threshold used to weaken strict inequalities; `0 < eps < 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Epsilon(Rational);

impl Epsilon {
    pub fn new(value: Rational) -> Result<Self, LpError> {
        if value.is_positive() && value < Rational::one() {
            Ok(Epsilon(value))
        } else {
            Err(LpError::InvalidEpsilon(value.to_string()))
        }
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }
}

impl Default for Epsilon {
    fn default() -> Self {
        Epsilon(rat(1, 100))
    }
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Accepts `p/q`, an integer, or a finite decimal such as `0.01`.
impl FromStr for Epsilon {
    type Err = LpError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || LpError::InvalidEpsilon(s.to_string());
        Epsilon::new(parse_rational(s).ok_or_else(bad)?)
    }
}

/// Parses `p/q`, `p`, or a decimal literal into an exact rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        let num: BigInt = num.trim().parse().ok()?;
        let den: BigInt = den.trim().parse().ok()?;
        if den.is_zero() {
            return None;
        }
        return Some(Rational::new(num, den));
    }
    if let Some((int, frac)) = text.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
            return None;
        }
        let negative = int.starts_with('-');
        let int_part: BigInt = match int.trim_start_matches(['-', '+']) {
            "" => BigInt::zero(),
            digits => digits.parse().ok()?,
        };
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let frac_part: BigInt = frac.parse().ok()?;
        let magnitude = Rational::new(int_part * &scale + frac_part, scale);
        return Some(if negative { -magnitude } else { magnitude });
    }
    text.parse::<BigInt>().ok().map(Rational::from_integer)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sense {
    Min,
    Max,
}

impl fmt::Display for Sense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sense::Min => "min",
            Sense::Max => "max",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RowRelation {
    Eq,
    Ge,
    Le,
}

/// `coefficients · x  (= | >= | <=)  rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearRow {
    pub coefficients: Vec<Rational>,
    pub relation: RowRelation,
    pub rhs: Rational,
}

impl LinearRow {
    pub fn new(coefficients: Vec<Rational>, relation: RowRelation, rhs: Rational) -> Self {
        LinearRow {
            coefficients,
            relation,
            rhs,
        }
    }

    /// `form >= threshold` or `form = 0`, moving the form's constant to the
    /// right-hand side.
    fn from_form(form: &LinearForm, relation: RowRelation, threshold: &Rational) -> Self {
        LinearRow {
            coefficients: form.coefficients().to_vec(),
            relation,
            rhs: threshold - form.constant(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coefficients.len()
    }

    pub fn lhs(&self, values: &[Rational]) -> Rational {
        self.coefficients
            .iter()
            .zip(values)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, v)| c * v)
            .sum()
    }

    pub fn is_satisfied(&self, values: &[Rational]) -> bool {
        let lhs = self.lhs(values);
        match self.relation {
            RowRelation::Eq => lhs == self.rhs,
            RowRelation::Ge => lhs >= self.rhs,
            RowRelation::Le => lhs <= self.rhs,
        }
    }
}

impl fmt::Display for LinearRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let form = LinearForm::new(Rational::zero(), self.coefficients.clone());
        let op = match self.relation {
            RowRelation::Eq => "=",
            RowRelation::Ge => ">=",
            RowRelation::Le => "<=",
        };
        write!(f, "{form} {op} {}", self.rhs)
    }
}

/// Premise constraints with every `f > 0` replaced by `f >= eps`.
pub fn premise_rows(constraints: &[Constraint], eps: &Epsilon) -> Vec<LinearRow> {
    constraints
        .iter()
        .map(|c| match c.kind {
            ConstraintKind::EqZero => LinearRow::from_form(&c.form, RowRelation::Eq, &Rational::zero()),
            ConstraintKind::GtZero => LinearRow::from_form(&c.form, RowRelation::Ge, eps.value()),
        })
        .collect()
}

/// Box rows `x_i >= 0`, `x_i <= 1` for every parameter, then `sum x_i = 1`.
pub fn simplex_rows(dim: usize) -> Vec<LinearRow> {
    let mut rows = Vec::with_capacity(2 * dim + 1);
    for i in 0..dim {
        let unit = LinearForm::param(dim, i).coefficients().to_vec();
        rows.push(LinearRow::new(unit.clone(), RowRelation::Ge, Rational::zero()));
        rows.push(LinearRow::new(unit, RowRelation::Le, Rational::one()));
    }
    rows.push(LinearRow::new(vec![Rational::one(); dim], RowRelation::Eq, Rational::one()));
    rows
}

/// The full weak-constraint system: weakened premises followed by the box
/// and normalization rows.
pub fn reformulate(constraints: &[Constraint], eps: &Epsilon, dim: usize) -> Vec<LinearRow> {
    let mut rows = premise_rows(constraints, eps);
    rows.extend(simplex_rows(dim));
    rows
}

/// Optimize `objective` subject to `rows` plus the implicit simplex rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpProblem {
    objective: LinearForm,
    sense: Sense,
    rows: Vec<LinearRow>,
}

impl LpProblem {
    pub fn new(objective: LinearForm, sense: Sense, rows: Vec<LinearRow>) -> Result<Self, LpError> {
        for (i, row) in rows.iter().enumerate() {
            if row.dim() != objective.dim() {
                return Err(LpError::Dimension {
                    objective: objective.dim(),
                    row: i,
                    found: row.dim(),
                });
            }
        }
        Ok(LpProblem {
            objective,
            sense,
            rows,
        })
    }

    pub fn from_constraints(
        objective: LinearForm,
        sense: Sense,
        constraints: &[Constraint],
        eps: &Epsilon,
    ) -> Result<Self, LpError> {
        LpProblem::new(objective, sense, premise_rows(constraints, eps))
    }

    pub fn objective(&self) -> &LinearForm {
        &self.objective
    }

    pub fn sense(&self) -> Sense {
        self.sense
    }

    /// Premise rows only.
    pub fn rows(&self) -> &[LinearRow] {
        &self.rows
    }

    /// Premise rows followed by the box and normalization rows.
    pub fn all_rows(&self) -> Vec<LinearRow> {
        let mut rows = self.rows.clone();
        rows.extend(simplex_rows(self.dim()));
        rows
    }

    pub fn dim(&self) -> usize {
        self.objective.dim()
    }

    pub fn with_sense(&self, sense: Sense) -> LpProblem {
        LpProblem {
            sense,
            ..self.clone()
        }
    }

    /// Re-checks a candidate optimum by exact substitution.
    fn certify(&self, values: Vec<Rational>) -> Result<LpOutcome, LpError> {
        let witness = ModelPoint::new(values)
            .map_err(|e| LpError::Internal(format!("witness off the simplex: {e}")))?;
        if let Some(row) = self.rows.iter().find(|r| !r.is_satisfied(witness.values())) {
            return Err(LpError::Internal(format!("witness violates `{row}`")));
        }
        let value = self.objective.eval(&witness)?;
        Ok(LpOutcome::Optimal { value, witness })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Rational, witness: ModelPoint },
    Infeasible,
}

impl LpOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, LpOutcome::Optimal { .. })
    }

    pub fn value(&self) -> Option<&Rational> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            LpOutcome::Infeasible => None,
        }
    }

    pub fn witness(&self) -> Option<&ModelPoint> {
        match self {
            LpOutcome::Optimal { witness, .. } => Some(witness),
            LpOutcome::Infeasible => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ColumnKind {
    Structural,
    Slack,
    Artificial,
}

/// Dense simplex tableau. The last column of every row holds the
/// right-hand side; `cost` holds reduced costs with `-z` in its last slot.
struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    cost: Vec<Rational>,
    kinds: Vec<ColumnKind>,
}

impl Tableau {
    fn build(dim: usize, rows: &[LinearRow]) -> Tableau {
        let mut kinds = vec![ColumnKind::Structural; dim];
        // (coefficients, rhs, relation) with rhs made nonnegative
        let normalized: Vec<(Vec<Rational>, Rational, RowRelation)> = rows
            .iter()
            .map(|r| {
                if r.rhs.is_negative() {
                    let flipped = match r.relation {
                        RowRelation::Eq => RowRelation::Eq,
                        RowRelation::Ge => RowRelation::Le,
                        RowRelation::Le => RowRelation::Ge,
                    };
                    (r.coefficients.iter().map(|c| -c).collect(), -&r.rhs, flipped)
                } else {
                    (r.coefficients.clone(), r.rhs.clone(), r.relation)
                }
            })
            .collect();

        let slack_count = normalized
            .iter()
            .filter(|(_, _, rel)| *rel != RowRelation::Eq)
            .count();
        let artificial_count = normalized
            .iter()
            .filter(|(_, _, rel)| *rel != RowRelation::Le)
            .count();
        kinds.extend(std::iter::repeat_n(ColumnKind::Slack, slack_count));
        kinds.extend(std::iter::repeat_n(ColumnKind::Artificial, artificial_count));
        let width = kinds.len() + 1;

        let mut tableau_rows = Vec::with_capacity(normalized.len());
        let mut basis = Vec::with_capacity(normalized.len());
        let mut next_slack = dim;
        let mut next_artificial = dim + slack_count;
        for (coefficients, rhs, relation) in normalized {
            let mut row = vec![Rational::zero(); width];
            row[..dim].clone_from_slice(&coefficients);
            row[width - 1] = rhs;
            match relation {
                RowRelation::Le => {
                    row[next_slack] = Rational::one();
                    basis.push(next_slack);
                    next_slack += 1;
                }
                RowRelation::Ge => {
                    row[next_slack] = -Rational::one();
                    next_slack += 1;
                    row[next_artificial] = Rational::one();
                    basis.push(next_artificial);
                    next_artificial += 1;
                }
                RowRelation::Eq => {
                    row[next_artificial] = Rational::one();
                    basis.push(next_artificial);
                    next_artificial += 1;
                }
            }
            tableau_rows.push(row);
        }

        Tableau {
            rows: tableau_rows,
            basis,
            cost: vec![Rational::zero(); width],
            kinds,
        }
    }

    fn rhs_col(&self) -> usize {
        self.kinds.len()
    }

    /// Installs reduced costs for column costs `costs` under the current basis.
    fn price(&mut self, costs: &[Rational]) {
        let mut reduced: Vec<Rational> = costs.to_vec();
        reduced.push(Rational::zero());
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            let cb = &costs[b];
            if cb.is_zero() {
                continue;
            }
            for (r, a) in reduced.iter_mut().zip(row) {
                if !a.is_zero() {
                    *r -= cb * a;
                }
            }
        }
        self.cost = reduced;
    }

    fn pivot(&mut self, pivot_row: usize, col: usize) {
        let inv = Rational::one() / &self.rows[pivot_row][col];
        for v in self.rows[pivot_row].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        let pivot = std::mem::take(&mut self.rows[pivot_row]);
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != pivot_row {
                eliminate(row, &pivot, col);
            }
        }
        eliminate(&mut self.cost, &pivot, col);
        self.rows[pivot_row] = pivot;
        self.basis[pivot_row] = col;
    }

    /// Runs Bland-rule iterations until optimal. Returns `false` if the
    /// problem is unbounded in the current phase.
    fn iterate(&mut self, allow_artificial: bool) -> bool {
        let rhs = self.rhs_col();
        loop {
            let entering = (0..rhs).find(|&j| {
                (allow_artificial || self.kinds[j] != ColumnKind::Artificial)
                    && self.cost[j].is_negative()
            });
            let Some(col) = entering else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[col].is_positive() {
                    continue;
                }
                let ratio = &row[rhs] / &row[col];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                Some((row, _)) => self.pivot(row, col),
                None => return false,
            }
        }
    }

    /// Pivots zero-valued artificials out of the basis, dropping rows that
    /// turn out to be redundant.
    fn expel_artificials(&mut self) {
        let mut i = 0;
        while i < self.rows.len() {
            if self.kinds[self.basis[i]] != ColumnKind::Artificial {
                i += 1;
                continue;
            }
            let col = (0..self.rhs_col())
                .find(|&j| self.kinds[j] != ColumnKind::Artificial && !self.rows[i][j].is_zero());
            match col {
                Some(col) => {
                    self.pivot(i, col);
                    i += 1;
                }
                None => {
                    self.rows.remove(i);
                    self.basis.remove(i);
                }
            }
        }
    }

    fn structural_values(&self, dim: usize) -> Vec<Rational> {
        let mut values = vec![Rational::zero(); dim];
        let rhs = self.rhs_col();
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            if b < dim {
                values[b] = row[rhs].clone();
            }
        }
        values
    }
}

fn eliminate(row: &mut [Rational], pivot: &[Rational], col: usize) {
    let factor = row[col].clone();
    if factor.is_zero() {
        return;
    }
    for (v, p) in row.iter_mut().zip(pivot) {
        if !p.is_zero() {
            *v -= &factor * p;
        }
    }
}

/// Exact optimum of `problem` by two-phase simplex with Bland's rule.
pub fn solve(problem: &LpProblem) -> Result<LpOutcome, LpError> {
    let dim = problem.dim();
    let mut rows = problem.rows.clone();
    // box rows x_i <= 1 are kept explicit; x_i >= 0 is the standard form
    for i in 0..dim {
        rows.push(LinearRow::new(
            LinearForm::param(dim, i).coefficients().to_vec(),
            RowRelation::Le,
            Rational::one(),
        ));
    }
    rows.push(LinearRow::new(vec![Rational::one(); dim], RowRelation::Eq, Rational::one()));

    let mut tableau = Tableau::build(dim, &rows);
    let phase_one: Vec<Rational> = tableau
        .kinds
        .iter()
        .map(|k| match k {
            ColumnKind::Artificial => Rational::one(),
            _ => Rational::zero(),
        })
        .collect();
    tableau.price(&phase_one);
    if !tableau.iterate(true) {
        return Err(LpError::Internal("phase one reported unbounded".into()));
    }
    let infeasibility = -&tableau.cost[tableau.rhs_col()];
    if infeasibility.is_positive() {
        return Ok(LpOutcome::Infeasible);
    }
    tableau.expel_artificials();

    let sign = match problem.sense {
        Sense::Min => Rational::one(),
        Sense::Max => -Rational::one(),
    };
    let mut phase_two = vec![Rational::zero(); tableau.kinds.len()];
    for (c, o) in phase_two.iter_mut().zip(problem.objective.coefficients()) {
        *c = o * &sign;
    }
    tableau.price(&phase_two);
    if !tableau.iterate(false) {
        return Err(LpError::Internal("unbounded objective on the simplex".into()));
    }
    problem.certify(tableau.structural_values(dim))
}

/// Largest parameter count the vertex oracle accepts.
pub const ORACLE_MAX_DIM: usize = 8;
/// Largest premise row count the vertex oracle accepts.
pub const ORACLE_MAX_ROWS: usize = 8;

/// Optimum by enumerating basic feasible solutions.
///
/// At a vertex, every parameter outside the support sits at its lower bound
/// and an upper bound can only be active when the support is a single
/// parameter (where the normalization row already pins it). So each vertex
/// is the unique solution, restricted to its support, of the equality rows
/// plus some subset of inequality rows held tight. The oracle tries every
/// such subset and every support small enough to be determined by it.
pub fn vertex_oracle(problem: &LpProblem) -> Result<LpOutcome, LpError> {
    let dim = problem.dim();
    if dim > ORACLE_MAX_DIM {
        return Err(LpError::ScaleExceeded(format!("{dim} parameters")));
    }
    if problem.rows.len() > ORACLE_MAX_ROWS {
        return Err(LpError::ScaleExceeded(format!("{} rows", problem.rows.len())));
    }
    let normalization = LinearRow::new(vec![Rational::one(); dim], RowRelation::Eq, Rational::one());
    let equalities: Vec<&LinearRow> = problem
        .rows
        .iter()
        .filter(|r| r.relation == RowRelation::Eq)
        .chain(std::iter::once(&normalization))
        .collect();
    let inequalities: Vec<&LinearRow> = problem
        .rows
        .iter()
        .filter(|r| r.relation != RowRelation::Eq)
        .collect();
    let all_rows = problem.all_rows();

    let mut best: Option<(Rational, Vec<Rational>)> = None;
    for tight_mask in 0u32..(1 << inequalities.len()) {
        let mut active: Vec<&LinearRow> = equalities.clone();
        active.extend(
            inequalities
                .iter()
                .enumerate()
                .filter(|(k, _)| tight_mask & (1 << k) != 0)
                .map(|(_, r)| *r),
        );
        for support_mask in 1u32..(1 << dim) {
            let support: Vec<usize> = (0..dim).filter(|j| support_mask & (1 << j) != 0).collect();
            if support.len() > active.len() {
                continue;
            }
            let Some(solution) = solve_restricted(&active, &support) else {
                continue;
            };
            let mut values = vec![Rational::zero(); dim];
            for (&j, v) in support.iter().zip(solution) {
                values[j] = v;
            }
            if !all_rows.iter().all(|r| r.is_satisfied(&values)) {
                continue;
            }
            let value = problem.objective.eval_values(&values)?;
            let improves = match (&best, problem.sense) {
                (None, _) => true,
                (Some((b, _)), Sense::Min) => value < *b,
                (Some((b, _)), Sense::Max) => value > *b,
            };
            if improves {
                best = Some((value, values));
            }
        }
    }
    match best {
        None => Ok(LpOutcome::Infeasible),
        Some((_, values)) => problem.certify(values),
    }
}

/// Unique solution of `rows` (as equalities) restricted to the `columns`,
/// or `None` when the restricted system is inconsistent or underdetermined.
fn solve_restricted(rows: &[&LinearRow], columns: &[usize]) -> Option<Vec<Rational>> {
    let n = columns.len();
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| {
            let mut row: Vec<Rational> = columns.iter().map(|&j| r.coefficients[j].clone()).collect();
            row.push(r.rhs.clone());
            row
        })
        .collect();
    let mut rank = 0;
    for col in 0..n {
        let pivot = (rank..m.len()).find(|&i| !m[i][col].is_zero())?;
        m.swap(rank, pivot);
        let inv = Rational::one() / &m[rank][col];
        for v in m[rank].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank {
                eliminate(row, &pivot_row, col);
            }
        }
        rank += 1;
    }
    // leftover rows must read 0 = 0
    if m[rank..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    Some(m[..n].iter().map(|row| row[n].clone()).collect())
}
