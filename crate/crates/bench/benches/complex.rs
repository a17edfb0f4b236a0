use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ybh::complex::h3_summary;
use ybh::deformation::extend_to_quadratic;
use ybh::differential::{ybh_d1, ybh_d2};
use ybh::{ComplexSlice, DimensionGuard, Fixture, PrimeField, Rationals, TensorMap, Ybh2Cochain};

fn differentials(c: &mut Criterion) {
    let f = PrimeField::new(101).unwrap();
    let mut group = c.benchmark_group("differentials");
    for fx in [Fixture::Z2Adjoint, Fixture::Z3Adjoint, Fixture::HeapZ2] {
        let b = fx.braided(&f).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let phi = TensorMap::random(&f, b.dim(), 1, 1, &mut rng);
        let x = Ybh2Cochain::random(&f, b.dim(), &mut rng);
        group.bench_with_input(BenchmarkId::new("d1", fx.name()), &phi, |bn, phi| bn.iter(|| ybh_d1(b.mu(), b.r(), black_box(phi)).unwrap()));
        group.bench_with_input(BenchmarkId::new("d2", fx.name()), &x, |bn, x| bn.iter(|| ybh_d2(b.mu(), b.r(), black_box(x)).unwrap()));
    }
    group.finish();
}

fn cohomology(c: &mut Criterion) {
    let mut group = c.benchmark_group("cohomology");
    group.sample_size(10);
    let f2 = PrimeField::new(2).unwrap();
    for fx in [Fixture::DualNumbersTrivial, Fixture::Z3Adjoint, Fixture::HeapZ2] {
        let b = fx.braided(&f2).unwrap();
        group.bench_function(BenchmarkId::new("h2_f2", fx.name()), |bn| {
            bn.iter(|| ComplexSlice::new(b.clone(), &DimensionGuard::default()).unwrap().summary())
        });
    }
    let b = Fixture::Z3Adjoint.braided(&Rationals).unwrap();
    group.bench_function("h2_q/z3_adjoint", |bn| bn.iter(|| ComplexSlice::new(b.clone(), &DimensionGuard::default()).unwrap().summary()));
    let b = Fixture::DualNumbersTrivial.braided(&f2).unwrap();
    group.bench_function("h3_f2/dual_numbers_trivial", |bn| bn.iter(|| h3_summary(&b, &DimensionGuard::default()).unwrap()));
    group.finish();
}

fn quadratic(c: &mut Criterion) {
    let f2 = PrimeField::new(2).unwrap();
    let b = Fixture::DualNumbersTrivial.braided(&f2).unwrap();
    let slice = ComplexSlice::new(b, &DimensionGuard::default()).unwrap();
    let basis = slice.cocycle_basis().unwrap();
    c.bench_function("extend_to_quadratic/dual_numbers_trivial", |bn| {
        bn.iter(|| basis.iter().map(|z| extend_to_quadratic(&slice, z).unwrap()).count())
    });
}

criterion_group!(benches, differentials, cohomology, quadratic);
criterion_main!(benches);
