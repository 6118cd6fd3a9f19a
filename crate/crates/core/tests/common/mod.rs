#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use syllogistic::lp::{LinearRow, RowRelation};
use syllogistic::model::rat;
use syllogistic::{CategoricalStatement, LinearForm, Literal, Model, ModelPoint, Rational, RelationCode};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random rational point on the simplex. Roughly a third of the weights
/// are zero so boundary cases (empty subjects, zero joints) come up often.
pub fn random_point(rng: &mut impl Rng, dim: usize) -> ModelPoint {
    loop {
        let weights: Vec<i64> = (0..dim)
            .map(|_| if rng.gen_bool(0.35) { 0 } else { rng.gen_range(1..=12) })
            .collect();
        let total: i64 = weights.iter().sum();
        if total == 0 {
            continue;
        }
        return ModelPoint::new(weights.iter().map(|w| rat(*w, total)).collect()).unwrap();
    }
}

/// The 8 vertices followed by `count` random points.
pub fn point_suite(seed: u64, count: usize) -> Vec<ModelPoint> {
    let mut r = rng(seed);
    let mut points: Vec<ModelPoint> = (0..8).map(|i| ModelPoint::vertex(8, i)).collect();
    points.extend((0..count).map(|_| random_point(&mut r, 8)));
    points
}

pub fn literals(model: &Model) -> Vec<Literal> {
    model
        .terms()
        .iter()
        .flat_map(|t| [Literal::new(t.clone(), true), Literal::new(t.clone(), false)])
        .collect()
}

/// Every code applied to every ordered pair of literals, including pairs
/// over the same term.
pub fn all_statements(model: &Model) -> Vec<CategoricalStatement> {
    let lits = literals(model);
    let mut out = Vec::new();
    for p in &lits {
        for s in &lits {
            for code in RelationCode::ALL {
                out.push(CategoricalStatement::new(p.clone(), code, s.clone()));
            }
        }
    }
    out
}

fn small_coefficient(rng: &mut impl Rng) -> Rational {
    match rng.gen_range(0..10) {
        0..=4 => rat(0, 1),
        5..=7 => rat(1, 1),
        8 => rat(-1, 1),
        _ => rat(rng.gen_range(-3..=3), rng.gen_range(1..=3)),
    }
}

pub fn random_form(rng: &mut impl Rng, dim: usize) -> LinearForm {
    LinearForm::new(rat(0, 1), (0..dim).map(|_| small_coefficient(rng)).collect())
}

/// Up to `max_rows` premise-like rows over the 8-parameter simplex.
pub fn random_rows(rng: &mut impl Rng, dim: usize, max_rows: usize) -> Vec<LinearRow> {
    let count = rng.gen_range(0..=max_rows);
    (0..count)
        .map(|_| {
            let coefficients = (0..dim).map(|_| small_coefficient(rng)).collect();
            let (relation, rhs) = match rng.gen_range(0..6) {
                0 | 1 => (RowRelation::Eq, rat(0, 1)),
                2 | 3 => (RowRelation::Ge, rat(1, 100)),
                4 => (RowRelation::Ge, rat(rng.gen_range(0..=4), 10)),
                _ => (RowRelation::Le, rat(rng.gen_range(1..=9), 10)),
            };
            LinearRow::new(coefficients, relation, rhs)
        })
        .collect()
}
