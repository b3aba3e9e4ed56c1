use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use idealprox::arithmetic::{factorize, proximity, sample_points, weil_local};
use idealprox::multiplier::{jumping_numbers, multiplier_ideal, multiplier_ideal_minus};
use idealprox::nevanlinna::{characteristic, roots, Polynomial};
use idealprox::polyhedra::homogenize;
use idealprox::rational::{int, rat};
use idealprox::{MonomialIdeal, NewtonPolyhedron, Place, PlaceSet, PolynomialCurve, Quadrature};

fn ideal(gens: Vec<Vec<u32>>) -> MonomialIdeal {
    MonomialIdeal::from_vecs(gens).unwrap()
}

fn polyhedra(c: &mut Criterion) {
    let mut g = c.benchmark_group("newton_polyhedron");
    let cases = [
        ("plane", ideal(vec![vec![5, 0], vec![2, 2], vec![0, 7]])),
        ("space", ideal(vec![vec![4, 0, 0], vec![0, 3, 1], vec![1, 1, 1], vec![0, 0, 5]])),
        ("four", ideal(vec![vec![3, 0, 0, 0], vec![0, 3, 0, 0], vec![0, 0, 3, 0], vec![0, 0, 0, 3], vec![1, 1, 1, 1]])),
    ];
    for (name, a) in &cases {
        g.bench_with_input(BenchmarkId::new("facets", name), a, |b, a| {
            b.iter(|| NewtonPolyhedron::new(black_box(a)).unwrap())
        });
    }
    g.finish();
}

fn multiplier(c: &mut Criterion) {
    let mut g = c.benchmark_group("multiplier");
    let a = ideal(vec![vec![4, 0, 0], vec![0, 3, 1], vec![1, 1, 1], vec![0, 0, 5]]);
    g.bench_function("interior", |b| b.iter(|| multiplier_ideal(black_box(&a), &rat(7, 3)).unwrap()));
    g.bench_function("left_limit", |b| b.iter(|| multiplier_ideal_minus(black_box(&a), &rat(7, 3)).unwrap()));
    g.bench_function("jumping_numbers", |b| b.iter(|| jumping_numbers(black_box(&a), &int(2)).unwrap()));
    g.finish();
}

fn arithmetic(c: &mut Criterion) {
    let mut g = c.benchmark_group("arithmetic");
    g.bench_function("factorize_semiprime", |b| {
        b.iter(|| factorize(black_box(1_000_000_007u64 * 998_244_353)))
    });
    let a = homogenize(&ideal(vec![vec![2, 0], vec![1, 1], vec![0, 3]]));
    let points = sample_points(2, 1_000_000, 64, 1).unwrap();
    let s = PlaceSet::parse("inf,2,3,5,7").unwrap();
    g.bench_function("weil_archimedean_64", |b| {
        b.iter(|| points.iter().filter_map(|p| weil_local(&a, p, Place::Infinite).ok()).count())
    });
    g.bench_function("proximity_64", |b| {
        b.iter(|| points.iter().filter_map(|p| proximity(&a, p, &s).ok()).count())
    });
    g.finish();
}

fn nevanlinna(c: &mut Criterion) {
    let mut g = c.benchmark_group("nevanlinna");
    let wilkinson = (1..=10).fold(Polynomial::one(), |acc, k| acc.mul(&Polynomial::from_real(vec![int(-k), int(1)])));
    g.bench_function("roots_wilkinson_10", |b| b.iter(|| roots(black_box(&wilkinson))));
    let p = |cs: &[i64]| Polynomial::from_real(cs.iter().map(|&x| int(x)).collect());
    let f = PolynomialCurve::new(vec![p(&[1]), p(&[-1, 0, 1]), p(&[0, -1, 0, 1])]).unwrap();
    let q = Quadrature::default();
    for r in [2.0, 100.0] {
        g.bench_with_input(BenchmarkId::new("characteristic", r), &r, |b, &r| {
            b.iter(|| characteristic(&f, r, &q).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, polyhedra, multiplier, arithmetic, nevanlinna);
criterion_main!(benches);
