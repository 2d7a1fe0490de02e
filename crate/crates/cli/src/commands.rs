use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use serde::Serialize;

use bmlab_core::graph::write_edge_list;
use bmlab_core::{poles as pole_report, run_all, sharpness_report, CheckError, CheckOptions, Graph, Verdict};

use crate::input::{load, InputMode};
use crate::{CliError, CurvatureFormat};

fn emit(text: &str) -> Result<(), CliError> {
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

fn summary_line(g: &Graph) -> String {
    let degree = g.regular_degree().map_or_else(|| "irregular".to_string(), |d| d.to_string());
    format!("n={} m={} D={} L={}", g.vertex_count(), g.edge_count(), degree, g.diameter())
}

pub fn build(spec: &str, mode: InputMode, output: Option<&Path>) -> Result<(), CliError> {
    let loaded = load(spec, mode)?;
    let text = write_edge_list(&loaded.graph);
    match output {
        Some(path) => {
            std::fs::write(path, text)?;
            emit(&format!("{}\n", summary_line(&loaded.graph)))
        }
        None => {
            eprintln!("{}", summary_line(&loaded.graph));
            emit(&text)
        }
    }
}

pub fn curvature(input: &str, mode: InputMode, format: CurvatureFormat) -> Result<(), CliError> {
    let loaded = load(input, mode)?;
    let report = sharpness_report(&loaded.graph)?;
    let text = match format {
        CurvatureFormat::Json => serde_json::to_string(&report).expect("report serializes") + "\n",
        CurvatureFormat::Tsv => {
            let mut s = String::from("# u\tv\tkappa\tflag\n");
            for e in &report.edges {
                let flag = if e.kappa == report.min_curvature { "min" } else { "-" };
                let _ = writeln!(s, "{}\t{}\t{}\t{flag}", e.u, e.v, e.kappa);
            }
            let _ = writeln!(
                s,
                "# min_kappa={} min_edge={}-{} target={} D={} L={} sharp={}",
                report.min_curvature,
                report.min_edge.0,
                report.min_edge.1,
                report.target(),
                report.degree,
                report.diameter,
                report.is_sharp
            );
            s
        }
    };
    emit(&text)
}

pub fn sharpness(input: &str, mode: InputMode) -> Result<(), CliError> {
    let loaded = load(input, mode)?;
    let report = sharpness_report(&loaded.graph)?.without_edges();
    emit(&(serde_json::to_string(&report).expect("report serializes") + "\n"))
}

pub fn poles(input: &str, mode: InputMode) -> Result<(), CliError> {
    let loaded = load(input, mode)?;
    emit(&(serde_json::to_string(&pole_report(&loaded.graph)).expect("report serializes") + "\n"))
}

#[derive(Serialize)]
struct Footer<'a> {
    graph: &'a str,
    checks: usize,
    pass: usize,
    fail: usize,
    vacuous: usize,
    skipped: usize,
    configurations: u64,
    samples: usize,
    seed: u64,
}

#[derive(Serialize)]
struct NotSharpLine<'a> {
    graph: &'a str,
    error: &'static str,
    sharpness: &'a bmlab_core::SharpnessReport,
}

pub fn verify(input: &str, mode: InputMode, opts: &CheckOptions) -> Result<(), CliError> {
    let loaded = load(input, mode)?;
    let reports = match run_all(&loaded.graph, &loaded.label, opts) {
        Ok(r) => r,
        Err(CheckError::NotSharp(report)) => {
            let line = NotSharpLine { graph: &loaded.label, error: "not_sharp", sharpness: &report };
            emit(&(serde_json::to_string(&line).expect("serializes") + "\n"))?;
            return Err(CheckError::NotSharp(report).into());
        }
        Err(e) => return Err(e.into()),
    };

    let mut text = String::new();
    for r in &reports {
        text.push_str(&serde_json::to_string(r).expect("report serializes"));
        text.push('\n');
    }
    let count = |v: Verdict| reports.iter().filter(|r| r.verdict == v).count();
    let footer = Footer {
        graph: &loaded.label,
        checks: reports.len(),
        pass: count(Verdict::Pass),
        fail: count(Verdict::Fail),
        vacuous: count(Verdict::Vacuous),
        skipped: count(Verdict::Skipped),
        configurations: reports.iter().map(|r| r.configurations).sum(),
        samples: opts.samples,
        seed: opts.seed,
    };
    let _ = writeln!(text, "{{\"summary\":{}}}", serde_json::to_string(&footer).expect("serializes"));
    emit(&text)?;
    if footer.fail > 0 {
        return Err(CliError::Failed(format!("{} of {} checks failed", footer.fail, footer.checks)));
    }
    Ok(())
}
