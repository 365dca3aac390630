use std::fs;
use std::path::{Path, PathBuf};

use ctt_core::corpus::{
    bundled_seed_dir, generate, generate_corpus, lines_of_code, load_corpus, load_seeds, write_corpus,
    CorpusError, Seed, Split, PER_SPLIT,
};
use ctt_core::par::Strategy;
use ctt_core::{apply_oracle, TaskId};

fn committed_corpus() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn seeds() -> Vec<Seed> {
    load_seeds(&bundled_seed_dir()).unwrap()
}

#[test]
fn every_task_gets_ten_examples_per_split() {
    let corpus = generate(&seeds(), &TaskId::ALL, Strategy::Parallel).unwrap();
    assert_eq!(corpus.examples.len(), 16);
    for task in TaskId::ALL {
        for split in Split::ALL {
            assert_eq!(corpus.split(task, split).len(), PER_SPLIT, "{task} {split:?}");
        }
        assert_eq!(corpus.eval_set(task).len(), 2 * PER_SPLIT);
    }
    assert_eq!(corpus.manifest.example_count(), 480);
}

#[test]
fn positives_change_and_negatives_do_not() {
    let corpus = generate(&seeds(), &TaskId::ALL, Strategy::Parallel).unwrap();
    for e in corpus.all() {
        let input = e.input_tree();
        assert_eq!(apply_oracle(e.task, &input), e.expected_tree());
        assert_eq!(e.split == Split::Negative, input == e.expected_tree(), "{}/{}", e.task, e.id);
    }
}

#[test]
fn public_and_hidden_positives_come_from_the_task_directory() {
    let corpus = generate(&seeds(), &TaskId::ALL, Strategy::Parallel).unwrap();
    for e in corpus.all().filter(|e| e.split != Split::Negative) {
        assert!(e.seed.starts_with(&format!("{}/p", e.task)), "{}", e.seed);
    }
}

#[test]
fn mean_input_length_is_about_eleven_lines() {
    let corpus = generate(&seeds(), &TaskId::ALL, Strategy::Parallel).unwrap();
    let mean = corpus.mean_input_loc();
    assert!((7.0..=15.0).contains(&mean), "mean LOC {mean}");
}

#[test]
fn lines_of_code_skips_blank_and_comment_lines() {
    assert_eq!(lines_of_code("x = 1\n\n# note\n  # probe: x\ny = 2\n"), 2);
}

#[test]
fn sequential_and_parallel_generation_agree() {
    let s = seeds();
    let a = generate(&s, &TaskId::ALL, Strategy::Sequential).unwrap();
    let b = generate(&s, &TaskId::ALL, Strategy::Parallel).unwrap();
    assert_eq!(a, b);
}

#[test]
fn write_then_load_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = generate(&seeds(), &TaskId::ALL, Strategy::Parallel).unwrap();
    write_corpus(&corpus, dir.path()).unwrap();
    assert_eq!(load_corpus(dir.path()).unwrap(), corpus);
}

#[test]
fn tampered_files_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    generate_corpus(&seeds(), &[TaskId::AddSubZero], dir.path(), Strategy::Sequential).unwrap();
    let victim = dir.path().join("add_sub_zero/hidden_03.out.py");
    let mut text = fs::read_to_string(&victim).unwrap();
    text.push_str("x = 1\n");
    fs::write(&victim, text).unwrap();
    let err = load_corpus(dir.path()).unwrap_err();
    assert!(matches!(err, CorpusError::Corrupt(ref m) if m.contains("hidden_03")), "{err}");
}

#[test]
fn missing_manifest_is_corrupt() {
    let dir = tempfile::tempdir().unwrap();
    assert!(matches!(load_corpus(dir.path()), Err(CorpusError::Corrupt(_))));
}

#[test]
fn too_few_positives_is_reported() {
    let few: Vec<Seed> = seeds()
        .into_iter()
        .filter(|s| s.group != "add_sub_zero" || s.name.as_str() < "p15")
        .collect();
    match generate(&few, &[TaskId::AddSubZero], Strategy::Sequential) {
        Err(CorpusError::InsufficientSeeds { task, needed, found, .. }) => {
            assert_eq!(task, TaskId::AddSubZero);
            assert_eq!(needed, 20);
            assert_eq!(found, 14);
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn unparsable_seed_is_an_oracle_mismatch() {
    let mut s = seeds();
    s.push(Seed {
        group: "add_sub_zero".into(),
        name: "p99_broken".into(),
        text: "def f(:\n".into(),
    });
    let err = generate(&s, &[TaskId::AddSubZero], Strategy::Sequential).unwrap_err();
    assert!(matches!(err, CorpusError::OracleMismatch { ref seed, .. } if seed == "add_sub_zero/p99_broken"));
}

/// The checked-in corpus is exactly what the seeds regenerate. Set
/// `CTT_BLESS=1` to rewrite it after changing seeds or oracles.
#[test]
fn committed_corpus_matches_regeneration() {
    let fresh = generate(&seeds(), &TaskId::ALL, Strategy::Parallel).unwrap();
    if std::env::var_os("CTT_BLESS").is_some() {
        write_corpus(&fresh, &committed_corpus()).unwrap();
    }
    let committed = load_corpus(&committed_corpus()).expect("corpus/ is checked in");
    assert_eq!(committed, fresh, "run with CTT_BLESS=1 to regenerate corpus/");
}
