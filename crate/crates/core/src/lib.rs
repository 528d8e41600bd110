//! Emotional arcs of narrative text.
//!
//! The pipeline runs in stages, each in its own module:
//!
//! * [`corpus`] normalizes plaintext and splits it into sentences and tokens.
//! * [`lexicon`] loads `word<TAB>score` valence tables.
//! * [`engines`] scores every sentence, either by plain lexical summation or
//!   with negation, booster, capitalization and exclamation rules.
//! * [`smoothing`] turns the per-sentence series into arcs with a centered
//!   rolling mean, a DCT low-pass filter, or LOESS.
//! * [`arcs`] finds inflection points, compares arcs, and builds word-salad
//!   null bands.
//! * [`report`] audits long sentences and writes CSV, JSON and SVG output.

pub mod corpus;
pub mod engines;
pub mod error;
pub mod lexicon;
pub mod numeric;
pub mod arcs;
pub mod report;
pub mod smoothing;

pub use corpus::{Document, SentenceRecord, Token};
pub use engines::{EngineId, RuleConfig, SentimentSeries};
pub use error::{Error, Result};
pub use lexicon::Lexicon;
pub use report::{RunConfig, RunReport};
pub use smoothing::{Arc, SmootherId, SmootherParams};
