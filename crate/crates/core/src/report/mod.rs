//! Long-sentence audit, SVG plots, and the full-run report with its file
//! export.

mod audit;
mod export;
mod run;
mod svg;

pub use audit::{audit_long_sentences, AuditReport, LongSentence, DEFAULT_THRESHOLD};
pub use export::{arc_csv, band_csv, export_run, load_report, read_arc_csv, series_csv, ExportedFiles, SERIES_HEADER};
pub use run::{
    default_smoothers, point_reports, run, sha256_digest, ArcReport, Distributions, DocumentInfo, LexiconInfo, PointReport,
    RunConfig, RunReport, TOOL_NAME, TOOL_VERSION,
};
pub use svg::{render_arc_svg, SvgOptions};
