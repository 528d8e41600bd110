use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use arclens::arcs::{self, DEFAULT_CONTEXT, DEFAULT_GRID, DEFAULT_SEED, DEFAULT_TRIALS};
use arclens::engines::{score_document, sentence_scores};
use arclens::report::{self, RunConfig, SvgOptions, DEFAULT_THRESHOLD};
use arclens::smoothing::{DEFAULT_LOESS_DEGREE, DEFAULT_LOW_PASS, DEFAULT_SPAN, DEFAULT_WINDOW_PCT};
use arclens::{Document, EngineId, Error, Lexicon, Result, RuleConfig, SmootherParams};

#[derive(Parser)]
#[command(name = "arclens", version, about = "Emotional arcs of narrative text")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normalize and split a text; prints the document as JSON.
    Ingest {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Per-sentence scores under both engines, as CSV.
    Score {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        engine: EngineArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Smooth the chosen engine's series into an arc (position,value CSV).
    Smooth {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        engine: EngineArgs,
        #[command(flatten)]
        smooth: SmoothArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Inflection points of an arc with surrounding sentences, as JSON.
    Arc {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        engine: EngineArgs,
        #[command(flatten)]
        smooth: SmoothArgs,
        /// Defaults to 5% of the arc's range.
        #[arg(long)]
        min_prominence: Option<f64>,
        #[arg(long, default_value_t = DEFAULT_CONTEXT)]
        context: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Word-salad null band around the arc (grid,lower,upper,original CSV).
    Nullmodel {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        engine: EngineArgs,
        #[command(flatten)]
        smooth: SmoothArgs,
        #[command(flatten)]
        null: NullArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List sentences longer than the threshold for manual review, as JSON.
    Audit {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = DEFAULT_THRESHOLD)]
        threshold: usize,
        /// Splitting errors found on review; fills in the percent error.
        #[arg(long)]
        reviewed_errors: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render an SVG plot, from arc CSVs or from a text.
    Plot {
        #[arg(long)]
        out: PathBuf,
        /// position,value CSV files to superimpose.
        #[arg(long = "arc", conflicts_with = "text")]
        arcs: Vec<PathBuf>,
        #[arg(long)]
        text: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        strip_lines: usize,
        #[arg(long, default_value = "builtin:general")]
        lexicon: String,
        #[command(flatten)]
        engine: EngineArgs,
        #[command(flatten)]
        smooth: SmoothArgs,
        /// Draw a null band with this many trials.
        #[arg(long)]
        band: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        title: Option<String>,
    },
    /// Full pipeline; writes report.json, series.csv, arcs/, band.csv, plot.svg.
    Run {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        engine: EngineArgs,
        #[arg(long, default_value_t = DEFAULT_WINDOW_PCT)]
        window_pct: f64,
        #[arg(long, default_value_t = DEFAULT_LOW_PASS)]
        low_pass: usize,
        #[arg(long, default_value_t = DEFAULT_SPAN)]
        span: f64,
        #[arg(long)]
        no_scale_range: bool,
        #[arg(long)]
        min_prominence: Option<f64>,
        #[arg(long, default_value_t = DEFAULT_CONTEXT)]
        context: usize,
        #[command(flatten)]
        null: NullArgs,
        #[arg(long, default_value_t = DEFAULT_THRESHOLD)]
        threshold: usize,
        /// Recorded verbatim in the report; omitted by default.
        #[arg(long)]
        timestamp: Option<String>,
        #[arg(long)]
        out_dir: PathBuf,
    },
}

#[derive(Args)]
struct InputArgs {
    #[arg(long)]
    text: PathBuf,
    /// Drop this many lines (e.g. a license header) after normalization.
    #[arg(long, default_value_t = 0)]
    strip_lines: usize,
    /// builtin:general, builtin:tiny, or a word<TAB>score file.
    #[arg(long, default_value = "builtin:general")]
    lexicon: String,
}

#[derive(Args)]
struct EngineArgs {
    #[arg(long, value_enum, default_value_t = Engine::Lexical)]
    engine: Engine,
    /// JSON file overriding the rule constants.
    #[arg(long)]
    rule_config: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Engine {
    Lexical,
    Rules,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Rolling,
    Dct,
    Loess,
}

#[derive(Args)]
struct SmoothArgs {
    #[arg(long, value_enum, default_value_t = Method::Rolling)]
    method: Method,
    #[arg(long, default_value_t = DEFAULT_WINDOW_PCT)]
    window_pct: f64,
    #[arg(long, default_value_t = DEFAULT_LOW_PASS)]
    low_pass: usize,
    #[arg(long, default_value_t = DEFAULT_SPAN)]
    span: f64,
    #[arg(long, default_value_t = DEFAULT_LOESS_DEGREE)]
    degree: usize,
    #[arg(long)]
    no_scale_range: bool,
}

#[derive(Args)]
struct NullArgs {
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    trials: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_GRID)]
    grid: usize,
}

impl EngineArgs {
    fn id(&self) -> EngineId {
        match self.engine {
            Engine::Lexical => EngineId::Lexical,
            Engine::Rules => EngineId::Rules,
        }
    }

    fn rules(&self) -> Result<RuleConfig> {
        match &self.rule_config {
            None => Ok(RuleConfig::default()),
            Some(path) => RuleConfig::from_json(&read_text(path)?),
        }
    }
}

impl SmoothArgs {
    fn params(&self) -> SmootherParams {
        match self.method {
            Method::Rolling => SmootherParams::Rolling {
                window_pct: self.window_pct,
            },
            Method::Dct => SmootherParams::Dct {
                low_pass: self.low_pass,
                scale_range: !self.no_scale_range,
            },
            Method::Loess => SmootherParams::Loess {
                span: self.span,
                degree: self.degree,
            },
        }
    }
}

fn read_bytes(path: &Path) -> Result<Vec<u8>> {
    fs::read(path).map_err(|e| Error::io(path, e))
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

fn source_id(path: &Path) -> String {
    path.file_name().map_or_else(|| path.display().to_string(), |n| n.to_string_lossy().into_owned())
}

fn load_doc(text: &Path, strip_lines: usize) -> Result<Document> {
    Document::ingest(source_id(text), &read_bytes(text)?, strip_lines)
}

fn emit(out: Option<&Path>, contents: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, contents).map_err(|e| Error::io(path, e)),
        None => match io::stdout().lock().write_all(contents.as_bytes()) {
            Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(Error::io("<stdout>", e)),
            _ => Ok(()),
        },
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn arc_for(doc: &Document, lexicon: &Lexicon, engine: &EngineArgs, smooth: &SmoothArgs) -> Result<arclens::Arc> {
    let series = score_document(doc, lexicon, engine.id(), &engine.rules()?)?;
    smooth.params().apply(&series.values)
}

fn execute(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Ingest { input, out } => {
            let doc = load_doc(&input.text, input.strip_lines)?;
            emit(out.as_deref(), &to_json(&doc))
        }
        Command::Score { input, engine, out } => {
            let doc = load_doc(&input.text, input.strip_lines)?;
            if doc.is_empty() {
                return Err(Error::NoSentences);
            }
            let lexicon = Lexicon::resolve(&input.lexicon)?;
            let rows = sentence_scores(&doc, &lexicon, &engine.rules()?);
            let column: Vec<f64> = rows
                .iter()
                .map(|r| match engine.id() {
                    EngineId::Lexical => r.lexical,
                    EngineId::Rules => r.rules_raw,
                })
                .collect();
            if let Ok(stats) = arcs::distribution_stats(&column) {
                eprintln!(
                    "{}: n={} mean={} variance={} skewness={}",
                    engine.id(),
                    stats.n,
                    stats.mean,
                    stats.variance,
                    stats.skewness.map_or("undefined".to_owned(), |s| s.to_string())
                );
            }
            emit(out.as_deref(), &report::series_csv(&rows)?)
        }
        Command::Smooth { input, engine, smooth, out } => {
            let doc = load_doc(&input.text, input.strip_lines)?;
            let arc = arc_for(&doc, &Lexicon::resolve(&input.lexicon)?, &engine, &smooth)?;
            emit(out.as_deref(), &report::arc_csv(&arc)?)
        }
        Command::Arc {
            input,
            engine,
            smooth,
            min_prominence,
            context,
            out,
        } => {
            let doc = load_doc(&input.text, input.strip_lines)?;
            let arc = arc_for(&doc, &Lexicon::resolve(&input.lexicon)?, &engine, &smooth)?;
            let prominence = min_prominence.unwrap_or_else(|| arcs::default_min_prominence(&arc));
            if prominence.is_nan() || prominence < 0.0 {
                return Err(Error::param("min-prominence must be >= 0"));
            }
            let extrema = arcs::find_extrema(&arc, prominence);
            let value = serde_json::json!({
                "arc": arc.label(),
                "min_prominence": prominence,
                "global_max": extrema.global_max,
                "global_min": extrema.global_min,
                "points": report::point_reports(&doc, &extrema, context),
            });
            emit(out.as_deref(), &to_json(&value))
        }
        Command::Nullmodel {
            input,
            engine,
            smooth,
            null,
            out,
        } => {
            let doc = load_doc(&input.text, input.strip_lines)?;
            let lexicon = Lexicon::resolve(&input.lexicon)?;
            let rules = engine.rules()?;
            let pipeline = arcs::Pipeline {
                lexicon: &lexicon,
                engine: engine.id(),
                rules: &rules,
                smoother: smooth.params(),
            };
            let band = arcs::null_band(&doc, &pipeline, null.trials, null.seed, null.grid)?;
            eprintln!("separation={}", band.separation);
            emit(out.as_deref(), &report::band_csv(&band)?)
        }
        Command::Audit {
            input,
            threshold,
            reviewed_errors,
            out,
        } => {
            let doc = load_doc(&input.text, input.strip_lines)?;
            let mut audit = report::audit_long_sentences(&doc, threshold)?;
            if let Some(n) = reviewed_errors {
                audit.record_review(n)?;
            }
            emit(out.as_deref(), &to_json(&audit))
        }
        Command::Plot {
            out,
            arcs: arc_files,
            text,
            strip_lines,
            lexicon,
            engine,
            smooth,
            band,
            seed,
            title,
        } => {
            let mut options = SvgOptions {
                title,
                ..SvgOptions::default()
            };
            let (arcs_, band_) = if let Some(text) = text {
                let doc = load_doc(&text, strip_lines)?;
                let lexicon = Lexicon::resolve(&lexicon)?;
                let rules = engine.rules()?;
                let pipeline = arcs::Pipeline {
                    lexicon: &lexicon,
                    engine: engine.id(),
                    rules: &rules,
                    smoother: smooth.params(),
                };
                let band = match band {
                    Some(trials) => Some(arcs::null_band(&doc, &pipeline, trials, seed, DEFAULT_GRID)?),
                    None => None,
                };
                (vec![pipeline.arc(&doc)?], band)
            } else {
                if arc_files.is_empty() {
                    return Err(Error::param("plot needs --text or at least one --arc CSV"));
                }
                let mut loaded = Vec::new();
                for path in &arc_files {
                    let rows = read_text(path)?.lines().count().saturating_sub(1);
                    loaded.push(report::read_arc_csv(path, smooth.params(), rows)?);
                    options.legend.push(
                        path.file_stem()
                            .map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned()),
                    );
                }
                (loaded, None)
            };
            let extrema: Vec<_> = arcs_
                .iter()
                .map(|a| arcs::find_extrema(a, arcs::default_min_prominence(a)))
                .collect();
            let svg = report::render_arc_svg(&arcs_, &extrema, band_.as_ref(), &options)?;
            emit(Some(&out), &svg)
        }
        Command::Run {
            input,
            engine,
            window_pct,
            low_pass,
            span,
            no_scale_range,
            min_prominence,
            context,
            null,
            threshold,
            timestamp,
            out_dir,
        } => {
            let config = RunConfig {
                source_id: source_id(&input.text),
                strip_lines: input.strip_lines,
                lexicon: input.lexicon.clone(),
                engine: engine.id(),
                rules: engine.rules()?,
                smoothers: report::default_smoothers(window_pct, low_pass, span, !no_scale_range),
                min_prominence,
                context,
                trials: null.trials,
                seed: null.seed,
                grid: null.grid,
                audit_threshold: threshold,
                timestamp,
            };
            let run = report::run(&read_bytes(&input.text)?, &config)?;
            let files = report::export_run(&run, &out_dir)?;
            println!(
                "{} sentences, {} arcs, null-band separation {}",
                run.document.sentence_count,
                run.arcs.len(),
                arclens::numeric::fmt_sig9(run.null_band.separation)
            );
            println!("wrote {}", files.report.display());
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("arclens: error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
