//! Benchmark examples: seed programs, split selection, on-disk layout.

use std::collections::{BTreeMap, HashSet};
use std::fs;
use std::path::{Path, PathBuf};

use ctt_pyast::{parse, render, sha256_hex, PyModuleAst};
use serde::{Deserialize, Serialize};

use crate::par::{par_map, Strategy};
use crate::transforms::{apply_oracle, TaskClass, TaskId};

pub const CORPUS_VERSION: &str = "1";
pub const PER_SPLIT: usize = 10;
pub const MANIFEST_FILE: &str = "manifest.json";

/// Directory holding the bundled seed programs.
pub fn bundled_seed_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("seeds")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Split {
    Public,
    Hidden,
    Negative,
}

impl Split {
    pub const ALL: [Split; 3] = [Split::Public, Split::Hidden, Split::Negative];

    pub fn as_str(self) -> &'static str {
        match self {
            Split::Public => "public",
            Split::Hidden => "hidden",
            Split::Negative => "negative",
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CorpusError {
    #[error("InsufficientSeeds: task {task} needs {needed} {what} seeds, found {found}")]
    InsufficientSeeds {
        task: TaskId,
        what: &'static str,
        needed: usize,
        found: usize,
    },
    #[error("OracleMismatch: seed {seed}: {detail}")]
    OracleMismatch { seed: String, detail: String },
    #[error("CorruptCorpus: {0}")]
    Corrupt(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> CorpusError + '_ {
    move |source| CorpusError::Io {
        path: path.to_path_buf(),
        source,
    }
}

/// One seed program. `group` is the directory it came from, normally a task id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seed {
    pub group: String,
    pub name: String,
    pub text: String,
}

impl Seed {
    pub fn id(&self) -> String {
        format!("{}/{}", self.group, self.name)
    }
}

/// Reads `<dir>/<group>/<name>.py` seed files.
pub fn load_seeds(dir: &Path) -> Result<Vec<Seed>, CorpusError> {
    let mut seeds = Vec::new();
    let groups = fs::read_dir(dir).map_err(io_err(dir))?;
    for group in groups {
        let group = group.map_err(io_err(dir))?.path();
        if !group.is_dir() {
            continue;
        }
        for file in fs::read_dir(&group).map_err(io_err(&group))? {
            let path = file.map_err(io_err(&group))?.path();
            if path.extension().and_then(|e| e.to_str()) != Some("py") {
                continue;
            }
            let text = fs::read_to_string(&path).map_err(io_err(&path))?;
            seeds.push(Seed {
                group: file_stem(&group),
                name: file_stem(&path),
                text,
            });
        }
    }
    seeds.sort_by(|a, b| (&a.group, &a.name).cmp(&(&b.group, &b.name)));
    Ok(seeds)
}

fn file_stem(p: &Path) -> String {
    p.file_stem().and_then(|s| s.to_str()).unwrap_or_default().to_string()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExamplePair {
    pub task: TaskId,
    pub split: Split,
    pub id: String,
    pub seed: String,
    pub input_source: String,
    pub expected_source: String,
}

impl ExamplePair {
    pub fn input_tree(&self) -> PyModuleAst {
        parse(&self.input_source).expect("corpus inputs are validated on load")
    }

    pub fn expected_tree(&self) -> PyModuleAst {
        parse(&self.expected_source).expect("corpus outputs are validated on load")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestExample {
    pub id: String,
    pub split: Split,
    pub seed: String,
    #[serde(rename = "in")]
    pub input: String,
    #[serde(rename = "out")]
    pub output: String,
    pub sha256_in: String,
    pub sha256_out: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestTask {
    pub id: TaskId,
    pub class: TaskClass,
    pub examples: Vec<ManifestExample>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusManifest {
    pub version: String,
    pub tasks: Vec<ManifestTask>,
}

impl CorpusManifest {
    pub fn example_count(&self) -> usize {
        self.tasks.iter().map(|t| t.examples.len()).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    pub manifest: CorpusManifest,
    pub examples: BTreeMap<TaskId, Vec<ExamplePair>>,
}

impl Corpus {
    pub fn tasks(&self) -> impl Iterator<Item = TaskId> + '_ {
        self.examples.keys().copied()
    }

    pub fn task(&self, task: TaskId) -> &[ExamplePair] {
        self.examples.get(&task).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn split(&self, task: TaskId, split: Split) -> Vec<&ExamplePair> {
        self.task(task).iter().filter(|e| e.split == split).collect()
    }

    /// Hidden positives plus negatives: the examples that get scored.
    pub fn eval_set(&self, task: TaskId) -> Vec<&ExamplePair> {
        self.task(task)
            .iter()
            .filter(|e| e.split != Split::Public)
            .collect()
    }

    pub fn all(&self) -> impl Iterator<Item = &ExamplePair> {
        self.examples.values().flatten()
    }

    /// Mean count of non-blank, non-comment input lines.
    pub fn mean_input_loc(&self) -> f64 {
        let n = self.all().count();
        if n == 0 {
            return 0.0;
        }
        self.all().map(|e| lines_of_code(&e.input_source)).sum::<usize>() as f64 / n as f64
    }
}

pub fn lines_of_code(source: &str) -> usize {
    source
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .count()
}

fn example_id(split: Split, k: usize) -> String {
    format!("{}_{k:02}", split.as_str())
}

struct ParsedSeed<'a> {
    seed: &'a Seed,
    tree: PyModuleAst,
    class: Option<TaskClass>,
}

/// Selects splits for `tasks` from `seeds` and computes expected outputs.
///
/// Positives come from the task's own seed group in name order: the first ten
/// form the public split, the next ten the hidden split. Negatives are the
/// first ten seeds the transform leaves unchanged, taken from the task's own
/// group, then groups of the same class, then everything else.
pub fn generate(seeds: &[Seed], tasks: &[TaskId], strategy: Strategy) -> Result<Corpus, CorpusError> {
    let trees = par_map(strategy, seeds, |s| parse(&s.text));
    let mut parsed = Vec::with_capacity(seeds.len());
    for (s, tree) in seeds.iter().zip(trees) {
        let tree = tree.map_err(|e| CorpusError::OracleMismatch {
            seed: s.id(),
            detail: e.to_string(),
        })?;
        parsed.push(ParsedSeed {
            seed: s,
            tree,
            class: s.group.parse::<TaskId>().ok().map(TaskId::class),
        });
    }

    let per_task = par_map(strategy, tasks, |&t| select(t, &parsed));
    let mut examples = BTreeMap::new();
    for (task, pairs) in tasks.iter().zip(per_task) {
        examples.insert(*task, pairs?);
    }
    let manifest = manifest_for(&examples);
    Ok(Corpus { manifest, examples })
}

fn select(task: TaskId, seeds: &[ParsedSeed]) -> Result<Vec<ExamplePair>, CorpusError> {
    let rank = |s: &ParsedSeed| {
        if s.seed.group == task.as_str() {
            0
        } else if s.class == Some(task.class()) {
            1
        } else {
            2
        }
    };
    let mut ordered: Vec<&ParsedSeed> = seeds.iter().collect();
    ordered.sort_by(|a, b| {
        (rank(a), &a.seed.group, &a.seed.name).cmp(&(rank(b), &b.seed.group, &b.seed.name))
    });

    let mut seen = HashSet::new();
    let mut positives = Vec::new();
    let mut negatives = Vec::new();
    for s in ordered {
        if positives.len() == 2 * PER_SPLIT && negatives.len() == PER_SPLIT {
            break;
        }
        let out = apply_oracle(task, &s.tree);
        let applicable = out != s.tree;
        let own = rank(s) == 0;
        let wanted = if applicable {
            own && positives.len() < 2 * PER_SPLIT
        } else {
            negatives.len() < PER_SPLIT
        };
        if !wanted || !seen.insert(s.seed.text.trim().to_string()) {
            continue;
        }
        if applicable {
            positives.push((s, out));
        } else {
            negatives.push((s, out));
        }
    }
    if positives.len() < 2 * PER_SPLIT {
        return Err(CorpusError::InsufficientSeeds {
            task,
            what: "applicable",
            needed: 2 * PER_SPLIT,
            found: positives.len(),
        });
    }
    if negatives.len() < PER_SPLIT {
        return Err(CorpusError::InsufficientSeeds {
            task,
            what: "inapplicable",
            needed: PER_SPLIT,
            found: negatives.len(),
        });
    }

    let splits = positives
        .into_iter()
        .enumerate()
        .map(|(k, p)| if k < PER_SPLIT { (Split::Public, k, p) } else { (Split::Hidden, k - PER_SPLIT, p) })
        .chain(negatives.into_iter().enumerate().map(|(k, p)| (Split::Negative, k, p)));
    Ok(splits
        .map(|(split, k, (s, out))| ExamplePair {
            task,
            split,
            id: example_id(split, k),
            seed: s.seed.id(),
            input_source: s.seed.text.clone(),
            expected_source: render(&out),
        })
        .collect())
}

fn rel_path(task: TaskId, id: &str, side: &str) -> String {
    format!("{task}/{id}.{side}.py")
}

fn manifest_for(examples: &BTreeMap<TaskId, Vec<ExamplePair>>) -> CorpusManifest {
    CorpusManifest {
        version: CORPUS_VERSION.to_string(),
        tasks: examples
            .iter()
            .map(|(task, pairs)| ManifestTask {
                id: *task,
                class: task.class(),
                examples: pairs
                    .iter()
                    .map(|e| ManifestExample {
                        id: e.id.clone(),
                        split: e.split,
                        seed: e.seed.clone(),
                        input: rel_path(*task, &e.id, "in"),
                        output: rel_path(*task, &e.id, "out"),
                        sha256_in: sha256_hex(&e.input_source),
                        sha256_out: sha256_hex(&e.expected_source),
                    })
                    .collect(),
            })
            .collect(),
    }
}

/// Writes the corpus as one directory per task plus `manifest.json`.
pub fn write_corpus(corpus: &Corpus, dir: &Path) -> Result<(), CorpusError> {
    fs::create_dir_all(dir).map_err(io_err(dir))?;
    for (task, pairs) in &corpus.examples {
        let task_dir = dir.join(task.as_str());
        if task_dir.exists() {
            fs::remove_dir_all(&task_dir).map_err(io_err(&task_dir))?;
        }
        fs::create_dir_all(&task_dir).map_err(io_err(&task_dir))?;
        for e in pairs {
            for (side, text) in [("in", &e.input_source), ("out", &e.expected_source)] {
                let path = dir.join(rel_path(*task, &e.id, side));
                fs::write(&path, text).map_err(io_err(&path))?;
            }
        }
    }
    let path = dir.join(MANIFEST_FILE);
    let mut json = serde_json::to_string_pretty(&corpus.manifest)
        .map_err(|e| CorpusError::Corrupt(e.to_string()))?;
    json.push('\n');
    fs::write(&path, json).map_err(io_err(&path))
}

/// Generates the corpus from seeds and writes it to `out`.
pub fn generate_corpus(
    seeds: &[Seed],
    tasks: &[TaskId],
    out: &Path,
    strategy: Strategy,
) -> Result<CorpusManifest, CorpusError> {
    let corpus = generate(seeds, tasks, strategy)?;
    write_corpus(&corpus, out)?;
    Ok(corpus.manifest)
}

/// Loads a corpus directory and re-checks every invariant.
pub fn load_corpus(dir: &Path) -> Result<Corpus, CorpusError> {
    let corrupt = |msg: String| CorpusError::Corrupt(msg);
    let manifest_path = dir.join(MANIFEST_FILE);
    let text = fs::read_to_string(&manifest_path)
        .map_err(|e| corrupt(format!("{}: {e}", manifest_path.display())))?;
    let manifest: CorpusManifest =
        serde_json::from_str(&text).map_err(|e| corrupt(format!("manifest: {e}")))?;

    let mut examples = BTreeMap::new();
    for mt in &manifest.tasks {
        if mt.class != mt.id.class() {
            return Err(corrupt(format!("{}: class {} is wrong", mt.id, mt.class)));
        }
        let mut pairs = Vec::with_capacity(mt.examples.len());
        for me in &mt.examples {
            let read = |rel: &str, want: &str| -> Result<String, CorpusError> {
                let path = dir.join(rel);
                let text = fs::read_to_string(&path)
                    .map_err(|e| corrupt(format!("{}/{}: {}: {e}", mt.id, me.id, path.display())))?;
                if sha256_hex(&text) != want {
                    return Err(corrupt(format!("{}/{}: hash mismatch for {rel}", mt.id, me.id)));
                }
                Ok(text)
            };
            pairs.push(ExamplePair {
                task: mt.id,
                split: me.split,
                id: me.id.clone(),
                seed: me.seed.clone(),
                input_source: read(&me.input, &me.sha256_in)?,
                expected_source: read(&me.output, &me.sha256_out)?,
            });
        }
        if examples.insert(mt.id, pairs).is_some() {
            return Err(corrupt(format!("{} listed twice", mt.id)));
        }
    }
    let corpus = Corpus { manifest, examples };
    validate(&corpus)?;
    Ok(corpus)
}

/// Checks split quotas, disjointness and oracle agreement.
pub fn validate(corpus: &Corpus) -> Result<(), CorpusError> {
    let corrupt = |msg: String| CorpusError::Corrupt(msg);
    for (task, pairs) in &corpus.examples {
        for split in Split::ALL {
            let n = pairs.iter().filter(|e| e.split == split).count();
            if n != PER_SPLIT {
                return Err(corrupt(format!("{task}: {} split has {n} examples, expected {PER_SPLIT}", split.as_str())));
            }
        }
        let mut seen = HashSet::new();
        for e in pairs {
            if !seen.insert(e.input_source.trim()) {
                return Err(corrupt(format!("{task}/{}: input appears twice", e.id)));
            }
            let input = parse(&e.input_source).map_err(|err| corrupt(format!("{task}/{}: {err}", e.id)))?;
            let expected =
                parse(&e.expected_source).map_err(|err| corrupt(format!("{task}/{}: {err}", e.id)))?;
            if apply_oracle(*task, &input) != expected {
                return Err(corrupt(format!("{task}/{}: expected output disagrees with the oracle", e.id)));
            }
            let positive = expected != input;
            if positive != (e.split != Split::Negative) {
                return Err(corrupt(format!("{task}/{}: split {} does not match applicability", e.id, e.split.as_str())));
            }
        }
    }
    Ok(())
}
