//! Output formats. Everything here writes to the data stream only.

use std::collections::BTreeSet;
use std::io::{self, Write};

use nulla_core::nulla::{CensusRow, CensusTable, DegreeReport, NullaDegree};
use nulla_core::pathcover::ObstructionWitness;
use nulla_core::poly::Certificate;
use serde_json::{json, Value};

use crate::Format;

/// A single-graph result as shown by `analyze` and `hajos`.
pub struct Analysis {
    pub report: DegreeReport,
    pub edges: usize,
    pub is_4critical: bool,
    pub obstruction: Option<ObstructionWitness>,
}

fn degree_value(d: Option<NullaDegree>) -> Value {
    match d {
        Some(NullaDegree::Exact(d)) => json!(d),
        Some(NullaDegree::AboveCap(_)) => json!("above-cap"),
        None => Value::Null,
    }
}

fn degree_cell(d: Option<NullaDegree>) -> String {
    d.map(|d| d.to_string()).unwrap_or_default()
}

fn wall_ms(r: &DegreeReport, timings: bool) -> Option<f64> {
    timings.then(|| (r.elapsed.as_secs_f64() * 1e6).round() / 1e3)
}

fn certificate_json(c: &Certificate) -> Value {
    let multipliers: Vec<Value> = c
        .multipliers
        .iter()
        .map(|(k, a)| json!({"generator": k.to_string(), "multiplier": a.to_string()}))
        .collect();
    json!({"degree": c.degree, "size": c.size(), "multipliers": multipliers})
}

/// The fixed CSV/JSON row shared by all commands.
fn row_json(r: &DegreeReport, is_4critical: bool, timings: bool) -> Value {
    json!({
        "n": r.n,
        "graph6": r.graph6,
        "is_4critical": is_4critical,
        "nulla_degree": degree_value(r.degree),
        "certificate_size": r.certificate.as_ref().map(Certificate::size),
        "wall_ms": wall_ms(r, timings),
    })
}

const ROW_HEADER: [&str; 6] = [
    "n",
    "graph6",
    "is_4critical",
    "nulla_degree",
    "certificate_size",
    "wall_ms",
];

fn row_record(r: &DegreeReport, is_4critical: bool, timings: bool) -> [String; 6] {
    [
        r.n.to_string(),
        r.graph6.clone().unwrap_or_default(),
        is_4critical.to_string(),
        degree_cell(r.degree),
        r.certificate.as_ref().map(|c| c.size().to_string()).unwrap_or_default(),
        wall_ms(r, timings).map(|t| format!("{t:.3}")).unwrap_or_default(),
    ]
}

fn analysis_json(a: &Analysis, timings: bool) -> Value {
    let r = &a.report;
    let mut v = row_json(r, a.is_4critical, timings);
    let obj = v.as_object_mut().expect("row is an object");
    obj.insert("edges".into(), json!(a.edges));
    obj.insert("colorable".into(), json!(r.colorable));
    obj.insert("coloring".into(), json!(r.coloring));
    obj.insert("degrees_tried".into(), json!(r.tried));
    obj.insert(
        "certificate".into(),
        r.certificate.as_ref().map_or(Value::Null, certificate_json),
    );
    obj.insert("path_cover".into(), json!(r.path_cover));
    obj.insert(
        "obstruction_edge".into(),
        a.obstruction.map_or(Value::Null, |w| json!([w.edge.u, w.edge.v])),
    );
    v
}

fn csv_error(e: csv::Error) -> io::Error {
    io::Error::other(e)
}

fn write_json(out: &mut dyn Write, v: &Value) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, v)?;
    writeln!(out)
}

pub fn analyses(out: &mut dyn Write, items: &[Analysis], format: Format, timings: bool) -> io::Result<()> {
    match format {
        Format::Json => write_json(
            out,
            &Value::Array(items.iter().map(|a| analysis_json(a, timings)).collect()),
        ),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(ROW_HEADER).map_err(csv_error)?;
            for a in items {
                w.write_record(row_record(&a.report, a.is_4critical, timings))
                    .map_err(csv_error)?;
            }
            w.flush()
        }
        Format::Table => {
            for (i, a) in items.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                analysis_text(out, a, timings)?;
            }
            Ok(())
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn analysis_text(out: &mut dyn Write, a: &Analysis, timings: bool) -> io::Result<()> {
    let r = &a.report;
    writeln!(out, "graph6        {}", r.graph6.as_deref().unwrap_or("-"))?;
    writeln!(out, "vertices      {}", r.n)?;
    writeln!(out, "edges         {}", a.edges)?;
    match &r.coloring {
        Some(c) => {
            let colors: Vec<String> = c.0.iter().map(u8::to_string).collect();
            writeln!(out, "3-colorable   yes, coloring {}", colors.join(" "))?;
        }
        None => writeln!(out, "3-colorable   no")?,
    }
    writeln!(out, "4-critical    {}", yes_no(a.is_4critical))?;
    if let Some(d) = r.degree {
        let tried: Vec<String> = r.tried.iter().map(usize::to_string).collect();
        match d {
            NullaDegree::Exact(d) => writeln!(out, "degree        {d} (tried {})", tried.join(", "))?,
            NullaDegree::AboveCap(cap) => writeln!(out, "degree        above cap {cap} (tried {})", tried.join(", "))?,
        }
    }
    if let Some(c) = &r.certificate {
        writeln!(
            out,
            "certificate   {} terms across {} multipliers, verified",
            c.size(),
            c.multipliers.len()
        )?;
    }
    if let Some(cover) = &r.path_cover {
        let paths: Vec<String> = cover
            .paths
            .iter()
            .map(|p| format!("{}-{}-{}", p.a, p.mid, p.b))
            .collect();
        writeln!(out, "path cover    {} paths: {}", cover.len(), paths.join(" "))?;
    }
    if !r.colorable {
        match a.obstruction {
            Some(w) => writeln!(out, "obstruction   edge {}", w.edge)?,
            None => writeln!(out, "obstruction   none")?,
        }
    }
    if timings {
        writeln!(out, "wall ms       {:.3}", r.elapsed.as_secs_f64() * 1e3)?;
    }
    Ok(())
}

/// Degrees shown as columns: 1 and 4 always, plus any other that occurs.
fn degree_columns(t: &CensusTable) -> Vec<usize> {
    let mut ds: BTreeSet<usize> = [1, 4].into();
    for r in t.rows.values() {
        ds.extend(r.by_degree.keys());
    }
    ds.into_iter().collect()
}

fn totals(t: &CensusTable) -> CensusRow {
    let mut sum = CensusRow::default();
    for r in t.rows.values() {
        sum.graphs += r.graphs;
        sum.four_critical += r.four_critical;
        sum.above_cap += r.above_cap;
        sum.failures += r.failures;
        for (&d, &c) in &r.by_degree {
            *sum.by_degree.entry(d).or_default() += c;
        }
    }
    sum
}

fn census_row_json(r: &CensusRow, degrees: &[usize]) -> Value {
    let by_degree: serde_json::Map<String, Value> = degrees
        .iter()
        .map(|&d| (d.to_string(), json!(r.with_degree(d))))
        .collect();
    json!({
        "n": r.n,
        "graphs": r.graphs,
        "four_critical": r.four_critical,
        "by_degree": by_degree,
        "above_cap": r.above_cap,
        "failures": r.failures,
    })
}

pub fn census(out: &mut dyn Write, t: &CensusTable, format: Format, timings: bool) -> io::Result<()> {
    let degrees = degree_columns(t);
    match format {
        Format::Json => {
            let rows: Vec<Value> = t.rows.values().map(|r| census_row_json(r, &degrees)).collect();
            let graphs: Vec<Value> = t.critical.iter().map(|e| row_json(&e.report, true, timings)).collect();
            let failures: Vec<Value> = t
                .failures
                .iter()
                .map(|f| json!({"index": f.index, "n": f.n, "graph6": f.graph6, "error": f.error.to_string()}))
                .collect();
            let mut total = census_row_json(&totals(t), &degrees);
            total.as_object_mut().expect("object").remove("n");
            write_json(
                out,
                &json!({"rows": rows, "total": total, "graphs": graphs, "failures": failures}),
            )
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let mut header = vec!["n".to_string()];
            header.extend(degrees.iter().map(|d| format!("degree_{d}")));
            header.extend(["above_cap", "four_critical", "graphs", "failures"].map(String::from));
            w.write_record(&header).map_err(csv_error)?;
            for r in t.rows.values() {
                let mut rec = vec![r.n.to_string()];
                rec.extend(degrees.iter().map(|&d| r.with_degree(d).to_string()));
                rec.extend([r.above_cap, r.four_critical, r.graphs, r.failures].map(|x| x.to_string()));
                w.write_record(&rec).map_err(csv_error)?;
            }
            w.flush()
        }
        Format::Table => {
            let mut header: Vec<String> = vec!["|V|".into()];
            header.extend(degrees.iter().map(|d| format!("N={d}")));
            header.extend(["above cap", "total 4-critical", "graphs", "failures"].map(String::from));
            let line = |label: String, r: &CensusRow| {
                let mut cells = vec![label];
                cells.extend(degrees.iter().map(|&d| r.with_degree(d).to_string()));
                cells.extend([r.above_cap, r.four_critical, r.graphs, r.failures].map(|x| x.to_string()));
                cells
            };
            let mut body: Vec<Vec<String>> = t.rows.values().map(|r| line(r.n.to_string(), r)).collect();
            body.push(line("total".into(), &totals(t)));
            let widths: Vec<usize> = (0..header.len())
                .map(|c| {
                    body.iter()
                        .map(|r| r[c].len())
                        .chain([header[c].len()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let fmt = |cells: &[String]| {
                cells
                    .iter()
                    .zip(&widths)
                    .map(|(s, w)| format!("{s:>w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
            };
            writeln!(out, "{}", fmt(&header))?;
            for (i, r) in body.iter().enumerate() {
                if i + 1 == body.len() {
                    writeln!(
                        out,
                        "{}",
                        "-".repeat(widths.iter().sum::<usize>() + 2 * (widths.len() - 1))
                    )?;
                }
                writeln!(out, "{}", fmt(r))?;
            }
            Ok(())
        }
    }
}
