mod common;

use proptest::prelude::*;
use syllogistic::model::rat;
use syllogistic::{LinearForm, Model, ModelPoint};

fn lit(model: &Model, name: &str, positive: bool) -> syllogistic::Literal {
    model.literal(name, positive).unwrap()
}

#[test]
fn output_tables_reproduced() {
    let m = Model::standard();
    let cases: &[(&str, bool, &str, bool, &[usize])] = &[
        ("A", true, "B", true, &[1, 2]),
        ("A", true, "B", false, &[3, 4]),
        ("A", false, "B", true, &[5, 6]),
        ("A", false, "B", false, &[7, 8]),
        ("B", true, "C", true, &[1, 5]),
        ("B", true, "C", false, &[2, 6]),
        ("B", false, "C", true, &[3, 7]),
        ("B", false, "C", false, &[4, 8]),
        ("C", true, "A", true, &[1, 3]),
        ("C", true, "A", false, &[5, 7]),
        ("C", false, "A", true, &[2, 4]),
        ("C", false, "A", false, &[6, 8]),
    ];
    for (p, pp, q, qp, params) in cases {
        let form = m.prob_of_event(&[lit(&m, p, *pp), lit(&m, q, *qp)]).unwrap();
        assert_eq!(form, LinearForm::from_params(8, params), "P({p}{pp},{q}{qp})");
    }
    let marginals: &[(&str, bool, &[usize])] = &[
        ("A", true, &[1, 2, 3, 4]),
        ("A", false, &[5, 6, 7, 8]),
        ("B", true, &[1, 2, 5, 6]),
        ("B", false, &[3, 4, 7, 8]),
        ("C", true, &[1, 3, 5, 7]),
        ("C", false, &[2, 4, 6, 8]),
    ];
    for (p, pp, params) in marginals {
        let form = m.prob_of_event(&[lit(&m, p, *pp)]).unwrap();
        assert_eq!(form, LinearForm::from_params(8, params), "P({p}{pp})");
    }
}

#[test]
fn full_events_are_single_parameters_in_order() {
    let m = Model::standard();
    let mut seen = Vec::new();
    for param in 0..8 {
        let assignment = m.assignment(param);
        let lits: Vec<_> = m
            .terms()
            .iter()
            .zip(&assignment)
            .map(|(t, v)| syllogistic::Literal::new(t.clone(), *v))
            .collect();
        let form = m.prob_of_event(&lits).unwrap();
        assert_eq!(form, LinearForm::param(8, param));
        assert_eq!(m.param_of(&assignment).unwrap(), param);
        seen.push(assignment);
    }
    assert_eq!(seen[0], vec![true, true, true]);
    assert_eq!(seen[7], vec![false, false, false]);
}

fn point_strategy(dim: usize) -> impl Strategy<Value = ModelPoint> {
    prop::collection::vec(0i64..=10, dim)
        .prop_filter("nonzero mass", |w| w.iter().any(|x| *x > 0))
        .prop_map(|w| {
            let total: i64 = w.iter().sum();
            ModelPoint::new(w.iter().map(|x| rat(*x, total)).collect()).unwrap()
        })
}

fn form_strategy(dim: usize) -> impl Strategy<Value = LinearForm> {
    (
        -5i64..=5,
        prop::collection::vec((-6i64..=6, 1i64..=4), dim),
    )
        .prop_map(|(c, coeffs)| {
            LinearForm::new(
                rat(c, 1),
                coeffs.into_iter().map(|(n, d)| rat(n, d)).collect(),
            )
        })
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn literal_and_negation_partition_the_rest(
        terms in 1usize..=4,
        others in prop::collection::vec(prop::option::of(any::<bool>()), 4),
        which in 0usize..4,
        point_seed in any::<u64>(),
    ) {
        let names: Vec<String> = (0..terms).map(|i| format!("T{i}")).collect();
        let m = Model::new(&names).unwrap();
        let which = which % terms;
        let lits: Vec<_> = (0..terms)
            .filter(|i| *i != which)
            .filter_map(|i| others[i].map(|p| m.literal(&names[i], p).unwrap()))
            .collect();
        let mut with_pos = lits.clone();
        with_pos.push(m.literal(&names[which], true).unwrap());
        let mut with_neg = lits.clone();
        with_neg.push(m.literal(&names[which], false).unwrap());
        let base = m.prob_of_event(&lits).unwrap();
        let pos = m.prob_of_event(&with_pos).unwrap();
        let neg = m.prob_of_event(&with_neg).unwrap();
        prop_assert_eq!(&pos + &neg, base);
        let mut r = common::rng(point_seed);
        let point = common::random_point(&mut r, m.param_count());
        let v = pos.eval(&point).unwrap();
        prop_assert!(v >= rat(0, 1) && v <= rat(1, 1));
    }

    #[test]
    fn marginals_sum_joints(point in point_strategy(8), p_pos in any::<bool>(), q_pos in any::<bool>()) {
        let m = Model::standard();
        for (p, q) in [("A", "B"), ("B", "C"), ("C", "A"), ("A", "C")] {
            let pl = lit(&m, p, p_pos);
            let joint_t = m.joint(&pl, &lit(&m, q, true)).unwrap();
            let joint_f = m.joint(&pl, &lit(&m, q, false)).unwrap();
            let marginal = m.prob_of_event(&[pl]).unwrap();
            prop_assert_eq!(&joint_t + &joint_f, marginal.clone());
            let q_marg = m.prob_of_event(&[lit(&m, q, q_pos)]).unwrap();
            prop_assert!(joint_t.eval(&point).unwrap() <= marginal.eval(&point).unwrap());
            let qj = m.joint(&lit(&m, p, true), &lit(&m, q, q_pos)).unwrap();
            prop_assert!(qj.eval(&point).unwrap() <= q_marg.eval(&point).unwrap());
        }
        prop_assert_eq!(m.normalization().eval(&point).unwrap(), rat(1, 1));
    }

    #[test]
    fn eval_is_linear(
        f in form_strategy(8),
        g in form_strategy(8),
        k in (-4i64..=4, 1i64..=5),
        point in point_strategy(8),
    ) {
        let k = rat(k.0, k.1);
        let lhs = (&f.scale(&k) + &g).eval(&point).unwrap();
        let rhs = &k * f.eval(&point).unwrap() + g.eval(&point).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!((&f - &f).eval(&point).unwrap(), rat(0, 1));
        prop_assert_eq!((-&f).eval(&point).unwrap(), -f.eval(&point).unwrap());
    }
}
