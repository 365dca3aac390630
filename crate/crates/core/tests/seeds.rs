use ctt_core::corpus::{bundled_seed_dir, load_seeds, Seed};
use ctt_core::semantics::compare_behavior;
use ctt_core::{apply_oracle, TaskId};
use ctt_pyast::{parse, render};

fn seeds() -> Vec<Seed> {
    load_seeds(&bundled_seed_dir()).expect("seed dir readable")
}

fn own_task(seed: &Seed) -> Option<TaskId> {
    seed.group.parse().ok()
}

#[test]
fn every_seed_parses_and_renders_stably() {
    let mut bad = Vec::new();
    for s in seeds() {
        match parse(&s.text) {
            Ok(tree) => {
                let again = parse(&render(&tree)).expect("rendered output parses");
                if again != tree {
                    bad.push(format!("{}: render is not stable", s.id()));
                }
            }
            Err(e) => bad.push(format!("{}: {e}", s.id())),
        }
    }
    assert!(bad.is_empty(), "{}", bad.join("\n"));
}

#[test]
fn seed_prefix_matches_applicability() {
    let mut bad = Vec::new();
    for s in seeds() {
        let Some(task) = own_task(&s) else { continue };
        let tree = parse(&s.text).unwrap();
        let applies = apply_oracle(task, &tree) != tree;
        let positive = s.name.starts_with('p');
        if applies != positive {
            bad.push(format!("{}: applies={applies}", s.id()));
        }
    }
    assert!(bad.is_empty(), "{}", bad.join("\n"));
}

#[test]
fn oracles_are_idempotent_on_seeds() {
    let mut bad = Vec::new();
    for s in seeds() {
        let tree = parse(&s.text).unwrap();
        for task in TaskId::ALL {
            let once = apply_oracle(task, &tree);
            if apply_oracle(task, &once) != once {
                bad.push(format!("{} under {task}", s.id()));
            }
        }
    }
    assert!(bad.is_empty(), "{}", bad.join("\n"));
}

#[test]
fn executable_positives_keep_behavior() {
    let mut bad = Vec::new();
    for s in seeds() {
        let Some(task) = own_task(&s) else { continue };
        if !task.executable() || task == TaskId::LoopDupe || !s.name.starts_with('p') {
            continue;
        }
        let out = render(&apply_oracle(task, &parse(&s.text).unwrap()));
        let check = compare_behavior(&s.text, &out).unwrap();
        if !check.input_runs_cleanly() {
            bad.push(format!("{}: input fails: {}", s.id(), check.explain()));
        } else if !check.same {
            bad.push(format!("{}: {}", s.id(), check.explain()));
        }
    }
    assert!(bad.is_empty(), "{}", bad.join("\n"));
}

#[test]
fn executable_seeds_have_probes_and_run() {
    let mut bad = Vec::new();
    for s in seeds() {
        let Some(task) = own_task(&s) else { continue };
        if !task.executable() {
            continue;
        }
        if !s.text.contains("# probe:") && !s.text.contains("print(") {
            bad.push(format!("{}: nothing observable", s.id()));
            continue;
        }
        let check = compare_behavior(&s.text, &s.text).unwrap();
        if !check.input_runs_cleanly() {
            bad.push(format!("{}: {}", s.id(), check.explain()));
        }
    }
    assert!(bad.is_empty(), "{}", bad.join("\n"));
}
