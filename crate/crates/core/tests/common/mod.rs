#![allow(dead_code)]

use std::path::PathBuf;

/// A document whose per-sentence lexical scores (under the tiny lexicon)
/// follow `6 cos(2 pi t)`: high, a deep hole in the middle, high again.
/// Each sentence has six scored words plus fillers; only the mix of
/// positive and negative words changes.
pub fn man_in_hole_text(n: usize) -> String {
    const POS: [&str; 6] = ["good", "happy", "joy", "love", "kind", "calm"];
    const NEG: [&str; 6] = ["bad", "sad", "grief", "hate", "cruel", "dark"];
    let mut out = String::new();
    for i in 0..n {
        let t = i as f64 / (n - 1) as f64;
        let k = (3.0 + 3.0 * (2.0 * std::f64::consts::PI * t).cos()).round() as usize;
        let mut words = vec!["The".to_owned(), "day".to_owned()];
        for j in 0..6 {
            let w = if j < k { POS[(i + j) % 6] } else { NEG[(i + j) % 6] };
            words.push(w.to_owned());
            words.push("and".to_owned());
        }
        words.pop();
        out.push_str(&words.join(" "));
        out.push_str(". ");
    }
    out
}

/// The expected lexical score of sentence `i` of [`man_in_hole_text`].
pub fn man_in_hole_score(i: usize, n: usize) -> f64 {
    let t = i as f64 / (n - 1) as f64;
    let k = (3.0 + 3.0 * (2.0 * std::f64::consts::PI * t).cos()).round();
    2.0 * k - 6.0
}

/// Path of a local copy of the reference novel, if one is configured.
pub fn novel_path() -> Option<PathBuf> {
    let candidates = [
        std::env::var_os("ARCLENS_NOVEL").map(PathBuf::from),
        Some(PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/data/fixtures/to_the_lighthouse.txt"))),
    ];
    candidates.into_iter().flatten().find(|p| p.is_file())
}

/// Lines to drop from the start of the novel file.
pub fn novel_strip_lines() -> usize {
    std::env::var("ARCLENS_NOVEL_STRIP_LINES")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0)
}

/// Deterministic series generator for oracle tests.
pub fn noisy_series(n: usize, seed: u64) -> Vec<f64> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|i| {
            let t = i as f64 / n as f64;
            (6.0 * t).sin() * 2.0 + rng.gen_range(-1.0..1.0)
        })
        .collect()
}
