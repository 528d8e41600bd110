mod common;

use std::fs;

use arclens::arcs::{find_extrema, null_band, Pipeline};
use arclens::numeric::round_sig9;
use arclens::report::{export_run, load_report, render_arc_svg, run, RunConfig, SvgOptions, SERIES_HEADER};
use arclens::{Document, EngineId, Error, Lexicon, RuleConfig, SmootherParams};

fn config() -> RunConfig {
    RunConfig {
        source_id: "mih".into(),
        lexicon: "builtin:tiny".into(),
        trials: 10,
        ..RunConfig::default()
    }
}

fn raw() -> Vec<u8> {
    common::man_in_hole_text(240).into_bytes()
}

#[test]
fn svg_is_well_formed_xml_with_expected_structure() {
    let doc = Document::from_normalized("mih", 0, &common::man_in_hole_text(300));
    let (lex, rules) = (Lexicon::tiny(), RuleConfig::default());
    let p = Pipeline {
        lexicon: &lex,
        engine: EngineId::Lexical,
        rules: &rules,
        smoother: SmootherParams::Rolling { window_pct: 0.1 },
    };
    let arc = p.arc(&doc).unwrap();
    let extrema = find_extrema(&arc, 0.5);
    let band = null_band(&doc, &p, 10, 42, 100).unwrap();
    let options = SvgOptions {
        title: Some("man <in> hole & co".into()),
        ..SvgOptions::default()
    };
    let svg = render_arc_svg(std::slice::from_ref(&arc), std::slice::from_ref(&extrema), Some(&band), &options).unwrap();
    let xml = roxmltree::Document::parse(&svg).expect("valid XML");
    let root = xml.root_element();
    assert_eq!(root.tag_name().name(), "svg");
    let has_class = |n: &roxmltree::Node, c: &str| n.attribute("class") == Some(c);
    let polygons: Vec<_> = xml.descendants().filter(|n| n.tag_name().name() == "polygon").collect();
    assert_eq!(polygons.len(), 1);
    assert!(has_class(&polygons[0], "null-band"));
    let band_points = polygons[0].attribute("points").unwrap().split(' ').count();
    assert_eq!(band_points, 2 * band.grid.len());
    let zero_lines = xml.descendants().filter(|n| has_class(n, "zero-line")).count();
    assert_eq!(zero_lines, 1);
    // the man-in-hole arc crosses zero twice: positive, negative, positive runs
    let pos = xml.descendants().filter(|n| has_class(n, "arc-positive")).count();
    let neg = xml.descendants().filter(|n| has_class(n, "arc-negative")).count();
    assert_eq!((pos, neg), (1, 1));
    let subpaths = xml
        .descendants()
        .filter(|n| has_class(n, "arc-positive"))
        .flat_map(|g| g.children().filter_map(|c| c.attribute("d")))
        .map(|d| d.matches('M').count())
        .sum::<usize>();
    assert_eq!(subpaths, 2);
    let labels: Vec<_> = xml
        .descendants()
        .filter(|n| has_class(n, "p-label"))
        .filter_map(|n| n.text())
        .collect();
    assert_eq!(labels.len(), extrema.points.len());
    assert!(labels.iter().enumerate().all(|(k, l)| *l == format!("P{}", k + 1)));
    assert!(xml.descendants().any(|n| n.text() == Some("man <in> hole & co")));

    let again = render_arc_svg(&[arc], &[extrema], Some(&band), &options).unwrap();
    assert_eq!(svg, again);
}

#[test]
fn export_writes_all_files_and_round_trips() {
    let report = run(&raw(), &config()).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let files = export_run(&report, dir.path()).unwrap();
    for p in [&files.report, &files.series, &files.band, &files.plot] {
        assert!(p.is_file(), "{}", p.display());
    }
    assert_eq!(files.arcs.len(), report.arcs.len());

    let back = load_report(&files.report).unwrap();
    assert_eq!(back, report.rounded());
    assert_eq!(back.sentences.len(), report.sentences.len());
    for (a, b) in back.sentences.iter().zip(&report.sentences) {
        assert_eq!(a.lexical, round_sig9(b.lexical));
        assert_eq!(a.rules_compound, round_sig9(b.rules_compound));
    }

    let mut rdr = csv::Reader::from_path(&files.series).unwrap();
    assert_eq!(rdr.headers().unwrap().iter().collect::<Vec<_>>(), SERIES_HEADER);
    let rows: Vec<csv::StringRecord> = rdr.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), report.sentences.len());
    for (row, s) in rows.iter().zip(&back.sentences) {
        assert_eq!(row[0].parse::<usize>().unwrap(), s.index);
        assert_eq!(row[4].parse::<f64>().unwrap(), s.lexical);
        assert_eq!(row[6].parse::<f64>().unwrap(), s.rules_compound);
    }

    for (path, a) in files.arcs.iter().zip(&back.arcs) {
        let mut rdr = csv::Reader::from_path(path).unwrap();
        let values: Vec<f64> = rdr.records().map(|r| r.unwrap()[1].parse().unwrap()).collect();
        assert_eq!(values, a.arc.values);
    }

    let band_text = fs::read_to_string(&files.band).unwrap();
    assert!(band_text.starts_with("grid,lower,upper,original\n"));
    assert_eq!(band_text.lines().count(), 1 + back.null_band.grid.len());
    roxmltree::Document::parse(&fs::read_to_string(&files.plot).unwrap()).unwrap();
}

#[test]
fn re_export_is_byte_identical() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let fa = export_run(&run(&raw(), &config()).unwrap(), a.path()).unwrap();
    let fb = export_run(&run(&raw(), &config()).unwrap(), b.path()).unwrap();
    let pairs = [(fa.report, fb.report), (fa.series, fb.series), (fa.band, fb.band), (fa.plot, fb.plot)]
        .into_iter()
        .chain(fa.arcs.into_iter().zip(fb.arcs));
    for (x, y) in pairs {
        assert_eq!(fs::read(&x).unwrap(), fs::read(&y).unwrap(), "{}", x.display());
    }
}

#[test]
fn rerun_from_recorded_config_reproduces_report() {
    let report = run(&raw(), &config()).unwrap();
    let again = run(&raw(), &report.config).unwrap();
    assert_eq!(again, report);
}

#[test]
fn unwritable_path_error_names_path() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("not-a-dir");
    fs::write(&blocker, "x").unwrap();
    let target = blocker.join("out");
    let report = run(&raw(), &config()).unwrap();
    let err = export_run(&report, &target).unwrap_err();
    assert!(matches!(err, Error::Io { .. }));
    assert_eq!(err.exit_code(), 1);
    assert!(err.to_string().contains("not-a-dir"), "{err}");
}
