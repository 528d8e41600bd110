//! Runs every example under `examples/` as a test.

#[allow(dead_code)]
#[path = "../examples/ingest_and_split.rs"]
mod ingest_and_split;
#[allow(dead_code)]
#[path = "../examples/score_engines.rs"]
mod score_engines;
#[allow(dead_code)]
#[path = "../examples/smooth_arcs.rs"]
mod smooth_arcs;
#[allow(dead_code)]
#[path = "../examples/inflection_points.rs"]
mod inflection_points;
#[allow(dead_code)]
#[path = "../examples/audit_long_sentences.rs"]
mod audit_long_sentences;
#[allow(dead_code)]
#[path = "../examples/plot_svg.rs"]
mod plot_svg;
#[allow(dead_code)]
#[path = "../examples/full_run.rs"]
mod full_run;

const SAMPLE: &str = include_str!("../data/sample.txt");

#[test]
fn ingest_example() {
    let doc = ingest_and_split::run_example(SAMPLE.as_bytes()).unwrap();
    assert_eq!(doc.len(), 55);
    assert!(doc.sentences.iter().any(|s| s.text.starts_with("Mrs. Penhallow gave")));
}

#[test]
fn score_example() {
    let shown = score_engines::run_example().unwrap();
    let good = shown[0].1;
    assert!((shown[1].1 - good * -0.74).abs() < 1e-12);
    assert!((shown[2].1 - (good + 0.293)).abs() < 1e-12);
    assert!(shown[3].1 > shown[2].1);
}

#[test]
fn smooth_example() {
    let arcs = smooth_arcs::run_example().unwrap();
    assert_eq!(arcs.len(), 3);
    assert!(arcs[0].len() < arcs[1].len());
}

#[test]
fn inflection_example() {
    let e = inflection_points::run_example().unwrap();
    assert!(!e.points.is_empty());
    assert!(e.global_min.position > 0.3 && e.global_min.position < 0.6);
}

#[test]
fn null_model_example() {
    let band = null_model::run_example().unwrap();
    assert_eq!(band.n_trials, 10);
    assert!(band.separation > 0.0);
}

#[test]
fn audit_example() {
    let a = audit_long_sentences::run_example().unwrap();
    assert_eq!(a.long_count, 1);
    assert_eq!(a.upper_bound_percent_error, Some(0.0));
}

#[test]
fn plot_example() {
    let svg = plot_svg::run_example().unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("class=\"null-band\"").count(), 1);
}

#[test]
fn full_run_example() {
    let dir = tempfile::tempdir().unwrap();
    let files = full_run::run_example(dir.path()).unwrap();
    assert!(files.report.is_file() && files.plot.is_file());
    assert_eq!(files.arcs.len(), 4);
}
