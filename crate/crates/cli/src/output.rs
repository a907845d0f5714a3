//! JSON lines, aligned tables and CSV.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use anyhow::{Context, Result};
use clap::ValueEnum;
use dompack::construct::DomPackCertificate;
use dompack::rational::format;
use serde::Serialize;

use crate::campaign::Summary;
use crate::lemma::{LemmaRecord, LemmaSummary};
use crate::record::CampaignRecord;
use crate::search::SearchOutcome;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
    Csv,
}

pub trait Tabular {
    fn header() -> Vec<&'static str>;
    fn row(&self) -> Vec<String>;
}

fn list(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(T::to_string).unwrap_or_default()
}

impl Tabular for CampaignRecord {
    fn header() -> Vec<&'static str> {
        vec![
            "index", "graph6", "n", "m", "gamma", "rho", "gamma_f", "gamma_x", "rho_x", "D", "P", "bound", "pass",
            "violations",
        ]
    }

    fn row(&self) -> Vec<String> {
        vec![
            opt(&self.index),
            self.graph6.clone(),
            self.n.to_string(),
            self.m.to_string(),
            self.gamma.to_string(),
            self.rho.to_string(),
            opt(&self.gamma_f),
            opt(&self.gamma_x),
            opt(&self.rho_x),
            list(&self.dominating_set),
            list(&self.packing),
            opt(&self.bound),
            self.pass.to_string(),
            self.violations.join("; "),
        ]
    }
}

impl Tabular for LemmaRecord {
    fn header() -> Vec<&'static str> {
        vec!["index", "seed", "n", "graph6", "pass", "detail"]
    }

    fn row(&self) -> Vec<String> {
        vec![
            self.index.to_string(),
            self.seed.to_string(),
            self.n.to_string(),
            self.graph6.clone(),
            self.pass.to_string(),
            self.detail.clone(),
        ]
    }
}

impl Tabular for SearchOutcome {
    fn header() -> Vec<&'static str> {
        vec!["target", "found", "best_ratio", "restart", "iterations", "graph6", "gamma", "rho"]
    }

    fn row(&self) -> Vec<String> {
        vec![
            self.target.clone(),
            self.found.to_string(),
            self.best_ratio.clone(),
            self.restart.to_string(),
            self.iterations.to_string(),
            self.best.graph6.clone(),
            self.best.gamma.to_string(),
            self.best.rho.to_string(),
        ]
    }
}

impl Tabular for DomPackCertificate {
    fn header() -> Vec<&'static str> {
        vec!["class", "D", "P", "bound", "valid"]
    }

    fn row(&self) -> Vec<String> {
        vec![
            self.class().as_str().to_string(),
            list(&self.d().to_vec()),
            list(&self.p().to_vec()),
            format(self.bound()),
            self.valid().to_string(),
        ]
    }
}

/// Output destination: a file when given, stdout otherwise.
pub fn sink(out: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("cannot create {}", p.display()))?,
        )),
        None => Box::new(io::stdout().lock()),
    })
}

pub fn write_records<T: Serialize + Tabular>(w: &mut dyn Write, format: Format, records: &[T]) -> Result<()> {
    match format {
        Format::Json => {
            for r in records {
                serde_json::to_writer(&mut *w, r)?;
                writeln!(w)?;
            }
        }
        Format::Csv => {
            let mut csv = csv::Writer::from_writer(&mut *w);
            csv.write_record(T::header())?;
            for r in records {
                csv.write_record(r.row())?;
            }
            csv.flush()?;
        }
        Format::Table => {
            let header: Vec<String> = T::header().into_iter().map(String::from).collect();
            let rows: Vec<Vec<String>> = records.iter().map(T::row).collect();
            let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
            for row in &rows {
                for (w, cell) in width.iter_mut().zip(row) {
                    *w = (*w).max(cell.chars().count());
                }
            }
            for row in std::iter::once(&header).chain(&rows) {
                let cells: Vec<String> = row
                    .iter()
                    .zip(&width)
                    .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                    .collect();
                writeln!(w, "{}", cells.join("  ").trim_end())?;
            }
        }
    }
    w.flush()?;
    Ok(())
}

pub fn summary_line(s: &Summary) -> String {
    let class = serde_json::to_value(s.class).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
    let mut line = format!(
        "verify {class}: {} instances, {} violations of γ ≤ {}·ρ, max γ/ρ = {}",
        s.instances, s.violations, s.bound, s.max_ratio
    );
    if let Some(rx) = &s.max_ratio_x {
        line.push_str(&format!(", max γ_X/ρ_X = {rx}"));
    }
    line.push_str(&format!(", {:.2}s", s.wall_s));
    line
}

pub fn lemma_line(s: &LemmaSummary) -> String {
    let name = serde_json::to_value(s.lemma).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
    format!("lemmacheck {name}: {} instances, {} failures", s.instances, s.failures)
}

#[cfg(test)]
mod tests {
    use super::*;
    use dompack::generators::gen_cycle;

    fn render(format: Format) -> String {
        let r = CampaignRecord::measure(&gen_cycle(4).unwrap(), None, None, true).unwrap();
        let mut buf = Vec::new();
        write_records(&mut buf, format, &[r]).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn formats() {
        let json = render(Format::Json);
        let v: serde_json::Value = serde_json::from_str(json.trim()).unwrap();
        assert_eq!(v["gamma"], 2);
        let csv = render(Format::Csv);
        let mut rd = csv::Reader::from_reader(csv.as_bytes());
        let row = rd.records().next().unwrap().unwrap();
        assert_eq!(&row[4], "2");
        assert_eq!(&row[6], "4/3");
        let table = render(Format::Table);
        assert_eq!(table.lines().count(), 2);
        assert!(table.starts_with("index"));
    }
}
