use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::corpus::{Document, SentenceRecord, Token};
use crate::error::{Error, Result};
use crate::lexicon::Lexicon;
use crate::numeric::exact_sum;

/// Shuffles every token of the document (across sentence boundaries) and
/// deals them back out with the original per-sentence token counts.
///
/// Sentences without tokens keep their original text. The shuffle is a
/// seeded ChaCha8 stream, so a seed always yields the same salad.
pub fn word_salad(doc: &Document, seed: u64) -> Result<Document> {
    let mut pool: Vec<Token> = doc.sentences.iter().flat_map(|s| s.tokens.iter().cloned()).collect();
    if pool.len() < 2 {
        return Err(Error::param("word salad needs at least 2 tokens"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    pool.shuffle(&mut rng);

    let mut pool = pool.into_iter();
    let mut sentences = Vec::with_capacity(doc.len());
    let mut offset = 0;
    for s in &doc.sentences {
        let tokens: Vec<Token> = pool.by_ref().take(s.tokens.len()).collect();
        let text = if tokens.is_empty() {
            s.text.clone()
        } else {
            render(&tokens)
        };
        if offset > 0 {
            offset += 1;
        }
        let len = text.chars().count();
        sentences.push(SentenceRecord {
            index: s.index,
            start_char: offset,
            end_char: offset + len,
            char_length: len,
            text,
            tokens,
        });
        offset += len;
    }
    Ok(Document {
        source_id: format!("{}#salad-{seed}", doc.source_id),
        raw_length: offset,
        sentences,
    })
}

/// The pseudo-sentence text: surfaces joined by spaces, with each token's
/// trailing exclamation marks restored.
fn render(tokens: &[Token]) -> String {
    let mut out = String::new();
    for (i, t) in tokens.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push_str(&t.surface);
        for _ in 0..t.trailing_exclaims {
            out.push('!');
        }
    }
    out
}

/// Lexical valence of the whole document, summed exactly over tokens so the
/// total does not depend on token order.
pub fn document_lexical_total(doc: &Document, lexicon: &Lexicon) -> f64 {
    exact_sum(
        doc.sentences
            .iter()
            .flat_map(|s| s.tokens.iter())
            .map(|t| lexicon.lookup(&t.folded)),
    )
}
