//! Aristotelian syllogistic by exact linear programming.
//!
//! Premises about boolean terms become linear constraints over the
//! parameters of a joint probability table ([`model`], [`statements`]).
//! Exact minima and maxima of the four extreme-term joint probabilities
//! ([`lp`], [`deduce`]) then decide which categorical conclusions are
//! necessary. [`catalog`] runs this over all 196 figure problems and
//! [`cli`] renders the results.
//!
//! ```
//! use syllogistic::{deduce_general, parse_statement, Epsilon, Model};
//!
//! let model = Model::standard();
//! let premises = vec![
//!     parse_statement(&model, "BeA").unwrap(),
//!     parse_statement(&model, "BiC").unwrap(),
//! ];
//! let a = model.literal("A", true).unwrap();
//! let c = model.literal("C", true).unwrap();
//! let result = deduce_general(&model, &premises, &a, &c, &Epsilon::default()).unwrap();
//! assert_eq!(result.classical.to_string(), "o");
//! assert!(result.complementary.is_empty());
//! ```

pub mod catalog;
pub mod cli;
pub mod deduce;
pub mod lp;
pub mod model;
pub mod statements;

pub use catalog::{enumerate_all, golden_tables, medieval_name, premises_of, Figure, MoodLabel, Problem};
pub use deduce::{
    classical_deductions, complementary_deductions, compute_bounds, deduce_general, objective_forms,
    BoundsProfile, DeductionResult,
};
pub use lp::{reformulate, solve, vertex_oracle, Epsilon, LpOutcome, LpProblem, Sense};
pub use model::{LinearForm, Literal, Model, ModelPoint, Rational, Term};
pub use statements::{
    composite_definition, format_statement, holds, parse_statement, translate, CategoricalStatement, CodeSet,
    Constraint, ConstraintKind, PrimaryRelation, RelationCode,
};
