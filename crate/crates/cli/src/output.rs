//! Text, JSON and CSV renderings of reports and tables.

use std::fmt::Write as _;
use std::io::{self, Write};
use std::str::FromStr;

use qtrunc_core::{IntSeries, Params, Witness};
use serde_json::{json, Map, Value};

use crate::grid::{usage, UsageError};
use crate::suites::{Outcome, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = UsageError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(usage!("unknown format {other:?}; expected text, json or csv")),
        }
    }
}

pub fn series_json(s: &IntSeries) -> Value {
    Value::Array(s.to_vec().iter().map(|c| Value::String(c.to_string())).collect())
}

pub fn params_json(p: &Params) -> Value {
    let mut m = Map::new();
    let fields = [
        ("R", p.r.map(u64::from)),
        ("S", p.s.map(u64::from)),
        ("k", p.k.map(u64::from)),
        ("m", p.m.map(u64::from)),
        ("n", p.n),
        ("N", p.order.map(|v| v as u64)),
    ];
    for (name, v) in fields {
        if let Some(v) = v {
            m.insert(name.to_string(), json!(v));
        }
    }
    Value::Object(m)
}

pub fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::Degree(d) => json!({ "kind": "degree", "degree": d }),
        Witness::Term { series, degree } => {
            json!({ "kind": "term", "series": series, "degree": degree })
        }
        Witness::Partition { parts, j } => json!({ "kind": "partition", "parts": parts, "j": j }),
        Witness::Label(l) => json!({ "kind": "label", "label": l }),
    }
}

pub fn outcome_json(o: &Outcome) -> Value {
    let r = &o.report;
    let violations: Vec<Value> = r
        .violations
        .iter()
        .map(|v| json!({ "witness": witness_json(&v.witness), "expected": v.expected, "actual": v.actual }))
        .collect();
    let mut obj = json!({
        "suite": r.suite,
        "params": params_json(&r.params),
        "pass": r.pass(),
        "violations": violations,
        "notes": r.notes,
    });
    if !o.values.is_empty() {
        let values: Map<String, Value> =
            o.values.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect();
        obj["values"] = Value::Object(values);
    }
    obj
}

fn csv_writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out)
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

pub fn write_outcomes<W: Write>(outcomes: &[Outcome], format: Format, mut out: W) -> io::Result<()> {
    match format {
        Format::Text => {
            let mut text = String::new();
            for o in outcomes {
                let r = &o.report;
                writeln!(text, "{r}").unwrap();
                for (k, v) in &o.values {
                    writeln!(text, "  {k} = {v}").unwrap();
                }
                for v in &r.violations {
                    writeln!(text, "  {}: expected {}, actual {}", v.witness, v.expected, v.actual).unwrap();
                }
            }
            let failed = outcomes.iter().filter(|o| !o.report.pass()).count();
            if failed == 0 {
                writeln!(text, "all {} checks passed", outcomes.len()).unwrap();
            } else {
                writeln!(text, "{failed} of {} checks failed", outcomes.len()).unwrap();
            }
            out.write_all(text.as_bytes())
        }
        Format::Json => {
            let all: Vec<Value> = outcomes.iter().map(outcome_json).collect();
            let pass = outcomes.iter().all(|o| o.report.pass());
            let doc = json!({ "pass": pass, "reports": all });
            serde_json::to_writer_pretty(&mut out, &doc)?;
            out.write_all(b"\n")
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["suite", "R", "S", "k", "n", "expected", "actual", "pass"])?;
            for o in outcomes {
                let r = &o.report;
                let p = &r.params;
                let k = opt(p.k.or(p.m));
                let (rr, ss) = (opt(p.r), opt(p.s));
                if r.pass() {
                    w.write_record([&r.suite, &rr, &ss, &k, &opt(p.n), "", "", "true"])?;
                }
                for v in &r.violations {
                    let n = v.witness.degree().map(|d| d as u64).or(p.n);
                    w.write_record([&r.suite, &rr, &ss, &k, &opt(n), &v.expected, &v.actual, "false"])?;
                }
            }
            w.flush()
        }
    }
}

pub fn write_table<W: Write>(table: &Table, format: Format, mut out: W) -> io::Result<()> {
    match format {
        Format::Text => {
            let widths: Vec<usize> = (0..table.columns.len())
                .map(|i| {
                    table.rows.iter().map(|r| r[i].len()).chain([table.columns[i].len()]).max().unwrap()
                })
                .collect();
            let mut text = String::new();
            let mut line = |cells: &[String]| {
                let padded: Vec<String> =
                    cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
                writeln!(text, "{}", padded.join("  ").trim_end()).unwrap();
            };
            line(&table.columns);
            for row in &table.rows {
                line(row);
            }
            out.write_all(text.as_bytes())
        }
        Format::Json => {
            let doc = if table.series.is_empty() {
                let rows: Vec<Value> = table
                    .rows
                    .iter()
                    .map(|row| {
                        let obj: Map<String, Value> = table
                            .columns
                            .iter()
                            .zip(row)
                            .map(|(c, v)| (c.clone(), Value::String(v.clone())))
                            .collect();
                        Value::Object(obj)
                    })
                    .collect();
                json!({ "table": table.name, "columns": table.columns, "rows": rows })
            } else {
                let series: Vec<Value> = table
                    .series
                    .iter()
                    .map(|(p, s)| json!({ "params": params_json(p), "coefficients": series_json(s) }))
                    .collect();
                json!({ "table": table.name, "series": series })
            };
            serde_json::to_writer_pretty(&mut out, &doc)?;
            out.write_all(b"\n")
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(&table.columns)?;
            for row in &table.rows {
                w.write_record(row)?;
            }
            w.flush()
        }
    }
}
