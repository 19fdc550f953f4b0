use biqp_core::oracle::{small_biwords, sweep_classify, sweep_thm1_on, SweepConfig};
use biqp_core::{f_table, Word};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn pools() -> Vec<(&'static str, Option<usize>)> {
    if biqp_core::par::is_parallel() {
        vec![("sequential", Some(1)), ("parallel", None)]
    } else {
        vec![("sequential", Some(1))]
    }
}

#[cfg(feature = "parallel")]
fn with_threads<R: Send>(threads: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        b = b.num_threads(n);
    }
    b.build().expect("thread pool").install(f)
}

#[cfg(not(feature = "parallel"))]
fn with_threads<R: Send>(_threads: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    f()
}

fn couple_sweep(c: &mut Criterion) {
    let cfg = SweepConfig {
        max_len: 5,
        ..SweepConfig::default()
    };
    let mut g = c.benchmark_group("classify-sweep");
    g.sample_size(10);
    for (name, threads) in pools() {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| with_threads(threads, || sweep_classify(&cfg)))
        });
    }
    g.finish();
}

fn rule_sweep(c: &mut Criterion) {
    let cfg = SweepConfig::default();
    let words = small_biwords(2, 3);
    let mut g = c.benchmark_group("local-rule-sweep");
    g.sample_size(10);
    for (name, threads) in pools() {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| with_threads(threads, || sweep_thm1_on(&cfg, words.clone(), 4)))
        });
    }
    g.finish();
}

fn long_table(c: &mut Criterion) {
    let fib = |n: usize| {
        let (mut a, mut b) = (String::from("a"), String::from("ab"));
        while b.len() < n {
            let next = format!("{b}{a}");
            a = b;
            b = next;
        }
        b[..n].to_string()
    };
    let q: Word = fib(200).parse().unwrap();
    let mut r = q.clone().into_letters();
    r.swap(198, 199);
    let r = Word::new(r);
    c.bench_function("f-table-200", |b| b.iter(|| f_table(&q, &r).unwrap()));
}

criterion_group!(benches, couple_sweep, rule_sweep, long_table);
criterion_main!(benches);
