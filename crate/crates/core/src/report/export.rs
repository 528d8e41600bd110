use std::fs;
use std::path::{Path, PathBuf};

use super::run::RunReport;
use super::svg::{render_arc_svg, SvgOptions};
use crate::engines::SentenceScores;
use crate::error::{Error, Result};
use crate::numeric::fmt_sig9;
use crate::smoothing::Arc;

pub const SERIES_HEADER: [&str; 7] = ["index", "start_char", "end_char", "n_tokens", "lexical", "rules_raw", "rules_compound"];

/// Paths written by [`export_run`].
#[derive(Debug, Clone, PartialEq)]
pub struct ExportedFiles {
    pub report: PathBuf,
    pub series: PathBuf,
    pub arcs: Vec<PathBuf>,
    pub band: PathBuf,
    pub plot: PathBuf,
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    let err = |e: csv::Error| Error::param(format!("csv encoding: {e}"));
    w.write_record(header).map_err(err)?;
    for row in rows {
        w.write_record(&row).map_err(err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::param(format!("csv encoding: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn series_csv(rows: &[SentenceScores]) -> Result<String> {
    csv_text(
        &SERIES_HEADER,
        rows.iter().map(|s| {
            vec![
                s.index.to_string(),
                s.start_char.to_string(),
                s.end_char.to_string(),
                s.n_tokens.to_string(),
                fmt_sig9(s.lexical),
                fmt_sig9(s.rules_raw),
                fmt_sig9(s.rules_compound),
            ]
        }),
    )
}

pub fn arc_csv(arc: &Arc) -> Result<String> {
    csv_text(
        &["position", "value"],
        arc.positions.iter().zip(&arc.values).map(|(&p, &v)| vec![fmt_sig9(p), fmt_sig9(v)]),
    )
}

pub fn band_csv(band: &crate::arcs::NullBand) -> Result<String> {
    let rows = (0..band.grid.len()).map(|i| {
        vec![
            fmt_sig9(band.grid[i]),
            fmt_sig9(band.lower[i]),
            fmt_sig9(band.upper[i]),
            fmt_sig9(band.original[i]),
        ]
    });
    csv_text(&["grid", "lower", "upper", "original"], rows)
}

/// Reads a `position,value` CSV back into an arc with the given parameters.
pub fn read_arc_csv(path: &Path, params: crate::smoothing::SmootherParams, source_len: usize) -> Result<Arc> {
    let mut reader = csv::Reader::from_path(path).map_err(|source| Error::Csv {
        path: path.to_owned(),
        source,
    })?;
    let (mut positions, mut values) = (Vec::new(), Vec::new());
    for (line, rec) in reader.records().enumerate() {
        let rec = rec.map_err(|source| Error::Csv {
            path: path.to_owned(),
            source,
        })?;
        let field = |i: usize| -> Result<f64> {
            rec.get(i)
                .and_then(|s| s.trim().parse::<f64>().ok())
                .filter(|v| v.is_finite())
                .ok_or_else(|| Error::param(format!("{}: row {}: expected position,value", path.display(), line + 2)))
        };
        positions.push(field(0)?);
        values.push(field(1)?);
    }
    if positions.len() < 2 {
        return Err(Error::param(format!("{}: an arc needs at least 2 rows", path.display())));
    }
    if positions.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::param(format!("{}: positions must increase", path.display())));
    }
    Ok(Arc::new(params, source_len, positions, values))
}

fn write(path: PathBuf, contents: &str) -> Result<PathBuf> {
    fs::write(&path, contents).map_err(|e| Error::io(&path, e))?;
    Ok(path)
}

/// Writes `report.json`, `series.csv`, `arcs/<label>.csv`, `band.csv` and
/// `plot.svg` under `dir`. Floats are rounded to 9 significant digits;
/// parsing `report.json` yields exactly [`RunReport::rounded`].
pub fn export_run(report: &RunReport, dir: &Path) -> Result<ExportedFiles> {
    let report = report.rounded();
    let arcs_dir = dir.join("arcs");
    fs::create_dir_all(&arcs_dir).map_err(|e| Error::io(&arcs_dir, e))?;

    let json_path = dir.join("report.json");
    let mut json = serde_json::to_string_pretty(&report).map_err(|source| Error::Json {
        path: json_path.clone(),
        source,
    })?;
    json.push('\n');
    let report_path = write(json_path, &json)?;
    let series = write(dir.join("series.csv"), &series_csv(&report.sentences)?)?;
    let mut arc_paths = Vec::with_capacity(report.arcs.len());
    for a in &report.arcs {
        arc_paths.push(write(arcs_dir.join(format!("{}.csv", a.label)), &arc_csv(&a.arc)?)?);
    }
    let band = write(dir.join("band.csv"), &band_csv(&report.null_band)?)?;

    let arcs: Vec<Arc> = report.arcs.iter().map(|a| a.arc.clone()).collect();
    let extrema: Vec<_> = report.arcs.iter().map(|a| a.extrema.clone()).collect();
    let options = SvgOptions {
        title: Some(report.document.source_id.clone()),
        ..SvgOptions::default()
    };
    let svg = render_arc_svg(&arcs, &extrema, Some(&report.null_band), &options)?;
    let plot = write(dir.join("plot.svg"), &svg)?;

    Ok(ExportedFiles {
        report: report_path,
        series,
        arcs: arc_paths,
        band,
        plot,
    })
}

/// Parses a `report.json` written by [`export_run`].
pub fn load_report(path: &Path) -> Result<RunReport> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    serde_json::from_str(&text).map_err(|source| Error::Json {
        path: path.to_owned(),
        source,
    })
}
