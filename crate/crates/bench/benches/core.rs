use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use sympchar_core::grp::{build_generators, enumerate_group, random_elements, Aux, GroupLabel};
use sympchar_core::permchar::{char_inner_product, Bounds, Case, DEFAULT_PRODUCT_BOUND};
use sympchar_core::{DomainKind, FieldContext, FieldElement, FormType};

fn field(c: &mut Criterion) {
    let k = FieldContext::new(8).unwrap();
    let elements: Vec<FieldElement> = k.elements().collect();
    c.bench_function("gf256 mul table, all pairs", |b| {
        b.iter(|| elements.iter().fold(0u8, |acc, &x| elements.iter().fold(acc, |acc, &y| acc ^ k.mul(x, y).0)))
    });
    c.bench_function("gf256 mul reference, all pairs", |b| {
        b.iter(|| elements.iter().fold(0u8, |acc, &x| elements.iter().fold(acc, |acc, &y| acc ^ k.mul_reference(x, y).0)))
    });
}

fn groups(c: &mut Criterion) {
    let case = Case::new(2, 2, Bounds::default()).unwrap();
    let space = case.space();
    let o_plus = build_generators(space, GroupLabel::OPlus, &Aux::Standard, u128::MAX).unwrap();
    c.bench_function("enumerate O+(4, 4)", |b| b.iter(|| enumerate_group(space, black_box(&o_plus), u128::MAX).unwrap().len()));

    let sp = build_generators(space, GroupLabel::Sp, &Aux::Standard, 0).unwrap();
    let sample = random_elements(space, &sp, 64, 1).unwrap();
    let vectors = case.domain(DomainKind::Vectors).unwrap();
    let plus = case.forms(FormType::Plus).unwrap();
    c.bench_function("fixed vectors, 64 elements of Sp(4, 4)", |b| {
        b.iter(|| sample.iter().map(|g| vectors.fixed_points(g)).sum::<usize>())
    });
    c.bench_function("fixed + forms, 64 elements of Sp(4, 4)", |b| {
        b.iter(|| sample.iter().map(|g| plus.fixed_points(g)).sum::<usize>())
    });
}

fn inner_products(c: &mut Criterion) {
    let case = Case::new(2, 3, Bounds::default()).unwrap();
    let sp = build_generators(case.space(), GroupLabel::Sp, &Aux::Standard, 0).unwrap();
    let plus = case.forms(FormType::Plus).unwrap();
    let minus = case.forms(FormType::Minus).unwrap();
    let mut group = c.benchmark_group("product orbits");
    group.sample_size(10);
    group.bench_function("<pi+,pi-> at q = 8", |b| {
        b.iter(|| char_inner_product(plus, minus, &sp, DEFAULT_PRODUCT_BOUND).unwrap())
    });
    group.finish();
}

criterion_group!(benches, field, groups, inner_products);
criterion_main!(benches);
