use idealprox::arithmetic::{
    counting, height_class, height_ideal, proximity, sample_points, truncated_counting,
    weil_height, weil_local, LogSum, Place, PlaceSet,
};
use idealprox::polyhedra::{HomogeneousMonomialIdeal, MonomialIdeal};
use idealprox::RationalPoint;
use proptest::prelude::*;

fn hideal_strategy() -> impl Strategy<Value = HomogeneousMonomialIdeal> {
    prop::collection::vec(prop::collection::vec(0u32..=3, 3), 1..=3).prop_map(|g| {
        HomogeneousMonomialIdeal::new(MonomialIdeal::from_vecs(g).unwrap()).unwrap()
    })
}

fn point_strategy() -> impl Strategy<Value = RationalPoint> {
    prop::collection::vec(-60i64..=60, 3)
        .prop_filter_map("primitive", |c| RationalPoint::normalized(c).ok())
}

fn place_strategy() -> impl Strategy<Value = Place> {
    prop_oneof![
        Just(Place::Infinite),
        prop::sample::select(vec![2u64, 3, 5, 7, 11, 13]).prop_map(Place::Finite),
    ]
}

fn coefficient_min(a: &LogSum, b: &LogSum, v: Place) -> LogSum {
    let less = match v {
        Place::Infinite => a.to_f64() <= b.to_f64(),
        Place::Finite(p) => a.coefficient(p) <= b.coefficient(p),
    };
    if less { a.clone() } else { b.clone() }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn min_rule(a in hideal_strategy(), b in hideal_strategy(), p in point_strategy(), v in place_strategy()) {
        let sum = a.sum(&b).unwrap();
        match (weil_local(&a, &p, v), weil_local(&b, &p, v), weil_local(&sum, &p, v)) {
            (Ok(x), Ok(y), Ok(z)) => prop_assert_eq!(z.value, coefficient_min(&x.value, &y.value, v)),
            (Err(_), Ok(y), Ok(z)) => prop_assert_eq!(z.value, y.value),
            (Ok(x), Err(_), Ok(z)) => prop_assert_eq!(z.value, x.value),
            (Err(_), Err(_), Err(_)) => {}
            other => prop_assert!(false, "inconsistent zero loci: {:?}", other),
        }
    }

    #[test]
    fn smaller_ideal_is_closer(a in hideal_strategy(), b in hideal_strategy(), p in point_strategy(), v in place_strategy()) {
        // a·b ⊆ a
        let prod = HomogeneousMonomialIdeal::new(a.ideal().product(b.ideal()).unwrap()).unwrap();
        if let (Ok(big), Ok(small)) = (weil_local(&a, &p, v), weil_local(&prod, &p, v)) {
            prop_assert!(small.value.to_f64() >= big.value.to_f64() - 1e-12);
            if let Place::Finite(q) = v {
                prop_assert!(small.value.coefficient(q) >= big.value.coefficient(q));
            }
        }
    }

    #[test]
    fn split_independence(a in hideal_strategy(), p in point_strategy(), extra in prop::collection::vec(prop::sample::select(vec![2u64, 3, 5, 7]), 0..3)) {
        let s = PlaceSet::new(std::iter::once(Place::Infinite).chain(extra.into_iter().map(Place::Finite))).unwrap();
        if let Ok(h) = height_ideal(&a, &p) {
            let m = proximity(&a, &p, &s).unwrap();
            let n = counting(&a, &p, &s).unwrap();
            prop_assert_eq!(m + n.clone(), h);
            let n1 = truncated_counting(&a, &p, &s).unwrap();
            prop_assert!(n1.to_f64() <= n.to_f64() + 1e-12);
            prop_assert!((n - n1).has_nonnegative_coefficients());
        }
    }

    #[test]
    fn values_are_nonnegative(a in hideal_strategy(), p in point_strategy(), v in place_strategy()) {
        if let Ok(x) = weil_local(&a, &p, v) {
            prop_assert!(x.value.to_f64() >= -1e-12);
            if let Place::Finite(q) = v {
                prop_assert!(x.value.has_integer_coefficients());
                prop_assert!(x.value.terms().all(|(r, _)| r == q));
            }
        }
    }
}

#[test]
fn coordinate_divisor_height() {
    for e in [vec![1, 0, 0], vec![0, 2, 1], vec![3, 1, 1]] {
        let deg: i64 = e.iter().map(|&x| i64::from(x)).sum();
        let d = HomogeneousMonomialIdeal::new(MonomialIdeal::from_vecs(vec![e.clone()]).unwrap()).unwrap();
        for p in sample_points(2, 500, 100, 9).unwrap() {
            if e.iter().zip(p.coords()).any(|(&k, &x)| k > 0 && x == 0) {
                continue;
            }
            assert_eq!(height_ideal(&d, &p).unwrap(), height_class(deg, &p));
        }
    }
}

#[test]
fn squarefree_support_truncation_is_exact() {
    let a = HomogeneousMonomialIdeal::new(MonomialIdeal::from_vecs(vec![vec![0, 1, 0], vec![0, 0, 1]]).unwrap()).unwrap();
    let s = PlaceSet::archimedean();
    // gcd(x1, x2) = 30 is squarefree
    let p = RationalPoint::new(vec![7, 30, 90]).unwrap();
    assert_eq!(counting(&a, &p, &s).unwrap(), truncated_counting(&a, &p, &s).unwrap());
    assert_eq!(weil_height(&p), LogSum::log_integer(90));
}
