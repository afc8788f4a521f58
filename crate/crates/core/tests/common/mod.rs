#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use runs_core::{compute_runs, diff_against_oracle, gen_random, OrderSpec, Text};

/// The 35-symbol text with the decreasing run ⟨5, 31, 7⟩ rooted at 8.
pub fn fig1_text() -> Text {
    let mut s = String::from("aaaa");
    s.push_str(&"abcabab".repeat(3));
    s.push_str("abcaba");
    s.push_str("aaaa");
    Text::from(s.as_str())
}

pub const RANDOM_CORPUS_SIZE: usize = 10_000;
pub const PERMUTATIONS_PER_TEXT: usize = 20;

/// Fixed-seed random texts: alphabet sizes cycle through 2, 4, 26 and
/// lengths are uniform in `0..=256`.
pub fn random_corpus() -> Vec<Text> {
    let mut lens = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    (0..RANDOM_CORPUS_SIZE)
        .map(|k| {
            let sigma = [2, 4, 26][k % 3];
            let len = lens.gen_range(0..=256);
            gen_random(len, sigma, 1_000 + k as u64).unwrap()
        })
        .collect()
}

pub fn random_permutation(seed: u64) -> OrderSpec {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ranks: Vec<u8> = (0..=255).collect();
    ranks.shuffle(&mut rng);
    OrderSpec::permutation(ranks.try_into().unwrap()).unwrap()
}

/// Runs the production pipeline under `order` and compares everything
/// (both NSS arrays, all four LCE tables, runs, directions, roots, pass
/// partition) with the oracles. Returns the total comparison count.
pub fn check_against_oracle(text: &Text, order: &OrderSpec) -> Result<u64, String> {
    let computed = compute_runs(text, order);
    let diff = diff_against_oracle(text, order, &computed).map_err(|e| e.to_string())?;
    if !diff.is_empty() {
        let lines: Vec<String> = diff.iter().take(5).map(|m| m.to_string()).collect();
        return Err(format!("{text:?} under {order:?}:\n  {}", lines.join("\n  ")));
    }
    if !text.is_empty() && computed.runs.len() >= text.len() {
        return Err(format!("{text:?}: {} runs for n = {}", computed.runs.len(), text.len()));
    }
    Ok(computed.comparisons)
}
