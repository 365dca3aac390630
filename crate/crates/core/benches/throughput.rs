use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ctt_core::backends::OracleBackend;
use ctt_core::chain::{synthesize, ChainConfig};
use ctt_core::corpus::{bundled_seed_dir, generate, load_seeds};
use ctt_core::eval::{aggregate, ctt_records};
use ctt_core::par::{par_map, Strategy};
use ctt_core::prompts::PromptSet;
use ctt_core::sandbox::InProcessSandbox;
use ctt_core::TaskId;

const STRATEGIES: [(&str, Strategy); 2] = [("sequential", Strategy::Sequential), ("parallel", Strategy::Parallel)];

fn corpus_generation(c: &mut Criterion) {
    let seeds = load_seeds(&bundled_seed_dir()).unwrap();
    let mut group = c.benchmark_group("corpus_generation");
    group.sample_size(20);
    for (name, strategy) in STRATEGIES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &strategy, |b, &s| {
            b.iter(|| generate(&seeds, &TaskId::ALL, s).unwrap())
        });
    }
    group.finish();
}

fn synthesize_and_score(c: &mut Criterion) {
    let corpus = generate(&load_seeds(&bundled_seed_dir()).unwrap(), &TaskId::ALL, Strategy::Parallel).unwrap();
    let sandbox = InProcessSandbox::default();
    let prompts = PromptSet::default();
    let cfg = ChainConfig::default();
    let mut group = c.benchmark_group("synthesize_and_score");
    group.sample_size(20);
    for (name, strategy) in STRATEGIES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &strategy, |b, &s| {
            b.iter(|| {
                let records: Vec<_> = par_map(s, &TaskId::ALL, |&task| {
                    let t = synthesize(task, &corpus, &OracleBackend { task }, &sandbox, &prompts, &cfg).unwrap();
                    ctt_records(task, 0, &corpus, t.outcome.candidate(), &sandbox, cfg.timeout_ms).unwrap()
                })
                .into_iter()
                .flatten()
                .collect();
                aggregate("ctt", &records, &[]).unwrap()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, corpus_generation, synthesize_and_score);
criterion_main!(benches);
