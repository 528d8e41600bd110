//! Analysis of smoothed arcs: inflection points with reading context,
//! cross-model agreement, word-salad null bands and distribution statistics.

mod compare;
mod context;
mod extrema;
mod null;
mod salad;
mod stats;

pub use compare::{compare_arcs, pearson, AgreementReport, DEFAULT_GRID, DEFAULT_POS_TOLERANCE};
pub use context::{context_for_sentence, extract_context, ContextWindow, DEFAULT_CONTEXT};
pub use extrema::{
    default_min_prominence, find_extrema, Extrema, ExtremumKind, GlobalExtremum, InflectionPoint,
    DEFAULT_PROMINENCE_FRACTION,
};
pub use null::{band_from_arcs, null_band, separation, NullBand, Pipeline, DEFAULT_SEED, DEFAULT_TRIALS};
pub use salad::{document_lexical_total, word_salad};
pub use stats::{distribution_stats, DistributionStats};
