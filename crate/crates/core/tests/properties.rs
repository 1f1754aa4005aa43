use proptest::prelude::*;

use w0_core::cli::{run_query, Query, Record, WeightInput};
use w0_core::linalg::Vector;
use w0_core::realforms::lookup;
use w0_core::reducer::{reducer, w0_action, Verdict, W0Action};
use w0_core::so1n::{invariant_tableau, so1n_sign, So1nWeight};
use w0_core::subalg::build_s;

const SMALL_FORMS: &[&str] = &[
    "sl(3,R)", "sl(4,R)", "su(1,2)", "su(1,3)", "su(2,2)", "so(2,3)", "so(1,5)", "so(2,4)", "so(1,6)",
    "sp(2·2,R)", "sp(2·,1,2)", "so*(8)", "sl(2,H)", "G",
];

fn star(n: usize, l1: i64, l2: i64) -> Vector {
    let dim = w0_core::so1n::so1n_system(n).unwrap().ambient_dim;
    let mut v = vec![0; dim];
    v[0] = l1;
    if dim > 1 {
        v[1] = l2;
    }
    Vector::from_ints(&v)
}

/// `(l1, l2)` with `l1 ≥ l2 ≥ 0` and `l1 + l2` even; `l2 = 0` when `n = 2`.
fn pair(n: usize, a: i64, b: i64) -> (i64, i64) {
    if n == 2 {
        return (a, 0);
    }
    let (l1, l2) = (a.max(b), a.min(b));
    (l1 + (l1 + l2) % 2, l2)
}

fn star_strategy() -> impl Strategy<Value = (usize, i64, i64)> {
    (2usize..=9, 0i64..=8, 0i64..=8).prop_map(|(n, a, b)| {
        let (l1, l2) = pair(n, a, b);
        (n, l1, l2)
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn sign_is_multiplicative(n in 2usize..=9, a in (0i64..=6, 0i64..=6), b in (0i64..=6, 0i64..=6)) {
        let (a1, a2) = pair(n, a.0, a.1);
        let (b1, b2) = pair(n, b.0, b.1);
        let (x, y) = (star(n, a1, a2), star(n, b1, b2));
        let name = format!("so(1,{n})");
        let sx = w0_action(&name, &x).unwrap();
        let sy = w0_action(&name, &y).unwrap();
        let sxy = w0_action(&name, &(&x + &y)).unwrap();
        prop_assert_eq!((sx.dim(), sy.dim(), sxy.dim()), (1, 1, 1));
        let sign = |a: &W0Action| if a.plus == 1 { 1 } else { -1 };
        prop_assert_eq!(sign(&sxy), sign(&sx) * sign(&sy));
    }

    #[test]
    fn closed_form_sign_matches_reducer((n, l1, l2) in star_strategy()) {
        let v = star(n, l1, l2);
        let w = So1nWeight::new(n, v.clone()).unwrap();
        let a = w0_action(&format!("so(1,{n})"), &v).unwrap();
        match so1n_sign(&w) {
            Ok(s) => prop_assert_eq!(a.verdict(), if s > 0 { Verdict::PlusId } else { Verdict::MinusId }),
            Err(_) => prop_assert_eq!(a.dim(), 0),
        }
    }

    #[test]
    fn tableau_is_valid(l1 in 0i64..40, l2 in 0i64..40) {
        let (l1, l2) = (l1.max(l2), l1.min(l2));
        prop_assume!((l1 + l2) % 2 == 0);
        let t = invariant_tableau(l1, l2).unwrap();
        prop_assert!(t.check(l1, l2).is_ok());
        let [r1, r2] = t.rows();
        prop_assert_eq!((r1.len() as i64, r2.len() as i64), (2 * l1, 2 * l2));
    }

    #[test]
    fn reducer_paths_agree(f in 0..SMALL_FORMS.len(), labels in proptest::collection::vec(0i64..=2, 4)) {
        let name = SMALL_FORMS[f];
        let r = reducer(name).unwrap();
        let sys = r.system();
        let lambda = sys.from_int_labels(&labels[..sys.rank()]);
        let pruned = r.w0_action(&lambda).unwrap();
        prop_assert_eq!(pruned, r.w0_action_unpruned(&lambda).unwrap());
        prop_assert_eq!(pruned.dim(), r.l_invariant_dim(&lambda).unwrap());
    }

    #[test]
    fn branching_preserves_dimension(f in 0..SMALL_FORMS.len(), labels in proptest::collection::vec(0i64..=2, 4)) {
        let r = reducer(SMALL_FORMS[f]).unwrap();
        let sys = r.system();
        let lambda = sys.from_int_labels(&labels[..sys.rank()]);
        let total: u128 = r
            .branch(&lambda)
            .unwrap()
            .iter()
            .map(|c| r.constituent_dim(c).unwrap() * c.multiplicity as u128)
            .sum();
        prop_assert_eq!(Some(total), sys.weyl_dimension(&lambda));
    }

    #[test]
    fn records_round_trip(f in 0..SMALL_FORMS.len(), labels in proptest::collection::vec(0i64..=3, 4)) {
        let form = lookup(SMALL_FORMS[f]).unwrap();
        let rank = form.datum().unwrap().complex_system.rank();
        let report = run_query(&Query {
            algebra: SMALL_FORMS[f].into(),
            weight: WeightInput::Fund(labels[..rank].to_vec()),
            witness: false,
        })
        .unwrap();
        let rec = report.record();
        let text = serde_json::to_string(&rec).unwrap();
        prop_assert_eq!(serde_json::from_str::<Record>(&text).unwrap(), rec.clone());
        prop_assert_eq!(rec.dim, rec.plus + rec.minus);
        let back = run_query(&Query {
            algebra: SMALL_FORMS[f].into(),
            weight: WeightInput::Eps(report.weight_eps.0.clone()),
            witness: false,
        })
        .unwrap();
        prop_assert_eq!(back.weight_fund, labels[..rank].to_vec());
    }

    #[test]
    fn tensor_counts(a in 0u64..5, b in 0u64..5, c in 0u64..5, d in 0u64..5) {
        let t = W0Action::new(a, b).tensor(&W0Action::new(c, d));
        prop_assert_eq!(t.dim(), (a + b) * (c + d));
        prop_assert_eq!(t.plus, a * c + b * d);
    }
}

#[test]
fn decompositions_are_consistent() {
    for name in w0_core::realforms::instances(6) {
        let form = lookup(&name).unwrap();
        if form.is_compact() {
            continue;
        }
        let dec = build_s(&form).unwrap();
        dec.check(form.datum().unwrap()).unwrap();
    }
}
