//! Corpus assembly: pair deduplication and the repo-disjoint
//! train/validation/test split.

use std::collections::{BTreeMap, HashSet};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::SplitError;
use crate::pair::MappedPair;

/// How duplicate pairs are keyed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum DedupMode {
    /// Whitespace-collapsed (test body, focal body) key.
    #[default]
    Normalized,
    /// Byte-exact (test body, focal body) key.
    Raw,
}

fn collapse_whitespace(text: &str) -> String {
    text.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Drop pairs whose (test body, focal body) key repeats, keeping the first
/// occurrence; order otherwise preserved. Idempotent.
pub fn deduplicate(pairs: Vec<MappedPair>, mode: DedupMode) -> Vec<MappedPair> {
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(pairs.len());
    for pair in pairs {
        let key = match mode {
            DedupMode::Normalized => (
                collapse_whitespace(&pair.test_case.body),
                collapse_whitespace(&pair.focal_method.body),
            ),
            DedupMode::Raw => (pair.test_case.body.clone(), pair.focal_method.body.clone()),
        };
        if seen.insert(key) {
            out.push(pair);
        }
    }
    out
}

/// A repo-disjoint partition: every pair of one repository lands in exactly
/// one of the three sets.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorpusSplit {
    pub fractions: [f64; 3],
    pub seed: u64,
    pub train: Vec<MappedPair>,
    pub validation: Vec<MappedPair>,
    pub test: Vec<MappedPair>,
}

impl CorpusSplit {
    pub fn sets(&self) -> [&[MappedPair]; 3] {
        [&self.train, &self.validation, &self.test]
    }

    pub fn total_pairs(&self) -> usize {
        self.train.len() + self.validation.len() + self.test.len()
    }

    /// Achieved pair fractions, in train/validation/test order.
    pub fn achieved_fractions(&self) -> [f64; 3] {
        let total = self.total_pairs() as f64;
        if total == 0.0 {
            return [0.0; 3];
        }
        [
            self.train.len() as f64 / total,
            self.validation.len() as f64 / total,
            self.test.len() as f64 / total,
        ]
    }
}

pub fn validate_fractions(fractions: &[f64]) -> Result<[f64; 3], SplitError> {
    if fractions.len() != 3
        || fractions.iter().any(|f| *f <= 0.0)
        || (fractions.iter().sum::<f64>() - 1.0).abs() > 1e-9
    {
        return Err(SplitError::BadFractions(fractions.to_vec()));
    }
    Ok([fractions[0], fractions[1], fractions[2]])
}

/// Split pairs into train/validation/test without ever separating a
/// repository. Repositories are shuffled by a seeded PRNG, then each is
/// greedily assigned: an empty split with the largest target takes priority,
/// otherwise the repo goes to the split whose fill ratio relative to its
/// target pair count stays lowest after the assignment.
pub fn split_by_repo(
    pairs: Vec<MappedPair>,
    fractions: &[f64],
    seed: u64,
) -> Result<CorpusSplit, SplitError> {
    let fractions = validate_fractions(fractions)?;

    let mut repo_sizes: BTreeMap<String, usize> = BTreeMap::new();
    for pair in &pairs {
        *repo_sizes.entry(pair.repo_id.clone()).or_insert(0) += 1;
    }
    if repo_sizes.len() < 3 {
        return Err(SplitError::TooFewRepos(repo_sizes.len()));
    }

    let total: usize = pairs.len();
    let targets = [
        fractions[0] * total as f64,
        fractions[1] * total as f64,
        fractions[2] * total as f64,
    ];

    let mut repo_order: Vec<&String> = repo_sizes.keys().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    repo_order.shuffle(&mut rng);

    let mut assigned: [usize; 3] = [0; 3];
    let mut empty: [bool; 3] = [true; 3];
    let mut destination: BTreeMap<&str, usize> = BTreeMap::new();

    for repo in repo_order {
        let size = repo_sizes[repo];
        let split = if empty.iter().any(|e| *e) {
            // Fill empty splits first so every set ends up nonempty.
            (0..3)
                .filter(|&s| empty[s])
                .max_by(|&a, &b| {
                    targets[a]
                        .partial_cmp(&targets[b])
                        .unwrap_or(std::cmp::Ordering::Equal)
                        .then(b.cmp(&a))
                })
                .unwrap()
        } else {
            (0..3)
                .min_by(|&a, &b| {
                    let ra = (assigned[a] + size) as f64 / targets[a];
                    let rb = (assigned[b] + size) as f64 / targets[b];
                    ra.partial_cmp(&rb)
                        .unwrap_or(std::cmp::Ordering::Equal)
                        .then(a.cmp(&b))
                })
                .unwrap()
        };
        assigned[split] += size;
        empty[split] = false;
        destination.insert(repo.as_str(), split);
    }

    let mut sets: [Vec<MappedPair>; 3] = [Vec::new(), Vec::new(), Vec::new()];
    for pair in pairs {
        let split = destination[pair.repo_id.as_str()];
        sets[split].push(pair);
    }
    let [train, validation, test] = sets;

    Ok(CorpusSplit {
        fractions,
        seed,
        train,
        validation,
        test,
    })
}
