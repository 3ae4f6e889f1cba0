use criterion::{black_box, criterion_group, criterion_main, Criterion};
use cremona_bench::{generic_foliation, geo, poly};
use cremona_core::birmap::{builtins, compose_reduce};
use cremona_core::exactalg::{gcd, resultant};
use cremona_core::foliation::{degree_sequence, pullback_foliation, singular_points};
use cremona_core::paperlab::obstructions::{geometric_monomial, monomial_div_obstructions};
use cremona_core::paperlab::general_quadratic_form;
use cremona_core::SymbolTable;

fn polynomials(c: &mut Criterion) {
    let p = poly("(x + 2*y - z)^4 * (x*y - 3*z^2)");
    let q = poly("(x + 2*y - z)^3 * (x^2 + y*z)");
    c.bench_function("mul_degree5", |b| b.iter(|| black_box(&p) * black_box(&q)));
    c.bench_function("gcd_homogeneous", |b| b.iter(|| gcd(black_box(&p), black_box(&q)).unwrap()));
    let f = poly("x^3 - 2*x*y^2 + y - 1");
    let g = poly("x^2*y + y^3 - x");
    c.bench_function("resultant_in_y", |b| b.iter(|| resultant(black_box(&f), black_box(&g), 1).unwrap()));
}

fn pullbacks(c: &mut Criterion) {
    let t = geo();
    let f = generic_foliation();
    let sigma = builtins::sigma(&t);
    c.bench_function("pullback_sigma", |b| b.iter(|| pullback_foliation(&sigma, black_box(&f)).unwrap()));
    let l = builtins::named_map("rho_l2", &t).unwrap();
    let composite = compose_reduce(&sigma, &l).unwrap();
    c.bench_function("pullback_full_reduction", |b| {
        b.iter(|| pullback_foliation(&composite, black_box(&f)).unwrap())
    });
    let word = builtins::word("tau_word", &t).unwrap();
    c.bench_function("degree_sequence_tau_word", |b| b.iter(|| degree_sequence(&word, black_box(&f)).unwrap()));
    c.bench_function("singular_points", |b| b.iter(|| singular_points(black_box(&f)).unwrap()));
}

fn obstructions(c: &mut Criterion) {
    let t = SymbolTable::standard();
    let w = general_quadratic_form();
    let sigma = builtins::sigma(&t);
    let m = geometric_monomial(&t, [2, 1, 1]);
    c.bench_function("obstructions_sigma_x2yz", |b| {
        b.iter(|| monomial_div_obstructions(&sigma, black_box(&w), &m).unwrap())
    });
}

criterion_group!(benches, polynomials, pullbacks, obstructions);
criterion_main!(benches);
