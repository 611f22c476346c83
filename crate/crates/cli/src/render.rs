use std::io::{self, Write};

use jordan_core::jordan::{is_standard, BlockPair, JordanSolver, Prime};
use jordan_core::oracle::OracleRun;
use jordan_core::verify::VerifyReport;
use jordan_core::JordanError;
use serde::{Deserialize, Serialize};

use crate::OutputFormat;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityEntry {
    pub multiplicity: u64,
    pub part: u64,
}

/// One `compute` result; also one `table` row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComputeRecord {
    pub m: u64,
    pub n: u64,
    pub p: u64,
    pub composition: Vec<u64>,
    pub partition: Vec<u64>,
    pub multiplicity_form: Vec<MultiplicityEntry>,
    pub standard: bool,
}

impl ComputeRecord {
    pub fn new(
        solver: &JordanSolver<u64>,
        pair: BlockPair<u64>,
        p: Prime<u64>,
    ) -> Result<Self, JordanError> {
        let dec = solver.jordan_partition(pair, p)?;
        Ok(ComputeRecord {
            m: pair.m(),
            n: pair.n(),
            p: p.get(),
            composition: dec.composition().into_parts(),
            partition: dec.expanded(),
            multiplicity_form: entries(dec.pairs()),
            standard: is_standard(&dec, pair.m(), pair.n()),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleRecord {
    pub m: u64,
    pub n: u64,
    pub p: u64,
    pub partition: Vec<u64>,
    pub multiplicity_form: Vec<MultiplicityEntry>,
    pub ranks: Vec<u64>,
}

impl OracleRecord {
    pub fn new(pair: BlockPair<u64>, p: Prime<u64>, run: &OracleRun<u64>) -> Self {
        OracleRecord {
            m: pair.m(),
            n: pair.n(),
            p: p.get(),
            partition: run.decomposition.expanded(),
            multiplicity_form: entries(run.decomposition.pairs()),
            ranks: run.ranks.ranks().iter().map(|&r| r as u64).collect(),
        }
    }
}

fn entries(pairs: &[(u64, u64)]) -> Vec<MultiplicityEntry> {
    pairs
        .iter()
        .map(|&(multiplicity, part)| MultiplicityEntry { multiplicity, part })
        .collect()
}

fn joined(xs: &[u64], sep: &str) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(sep)
}

fn mult_form(es: &[MultiplicityEntry]) -> String {
    es.iter()
        .map(|e| format!("{}*{}", e.multiplicity, e.part))
        .collect::<Vec<_>>()
        .join(" ")
}

fn json_line<T: Serialize + ?Sized>(out: &mut dyn Write, value: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}

const COMPUTE_CSV_HEADER: &str = "m,n,p,composition,partition,standard";

fn compute_csv_row(r: &ComputeRecord) -> String {
    format!(
        "{},{},{},\"{}\",\"{}\",{}",
        r.m,
        r.n,
        r.p,
        joined(&r.composition, "+"),
        joined(&r.partition, " "),
        r.standard
    )
}

pub fn compute(out: &mut dyn Write, r: &ComputeRecord, format: OutputFormat) -> io::Result<()> {
    match format {
        OutputFormat::Text => {
            writeln!(out, "m = {}, n = {}, p = {}", r.m, r.n, r.p)?;
            writeln!(out, "composition: {}", joined(&r.composition, "+"))?;
            writeln!(
                out,
                "multiplicity form: {}",
                mult_form(&r.multiplicity_form)
            )?;
            writeln!(out, "partition: {}", joined(&r.partition, " "))?;
            writeln!(out, "standard: {}", r.standard)
        }
        OutputFormat::Json => json_line(out, r),
        OutputFormat::Csv => {
            writeln!(out, "{COMPUTE_CSV_HEADER}")?;
            writeln!(out, "{}", compute_csv_row(r))
        }
    }
}

pub fn table(out: &mut dyn Write, rows: &[ComputeRecord], format: OutputFormat) -> io::Result<()> {
    match format {
        OutputFormat::Text => {
            let comps: Vec<String> = rows.iter().map(|r| joined(&r.composition, "+")).collect();
            let parts: Vec<String> = rows.iter().map(|r| joined(&r.partition, " ")).collect();
            let wc = comps
                .iter()
                .map(String::len)
                .max()
                .unwrap_or(0)
                .max("composition".len());
            let wp = parts
                .iter()
                .map(String::len)
                .max()
                .unwrap_or(0)
                .max("partition".len());
            writeln!(
                out,
                "{:>5} {:>5} {:>3}  {:<wc$}  {:<wp$}  standard",
                "m", "n", "p", "composition", "partition"
            )?;
            for ((r, c), part) in rows.iter().zip(&comps).zip(&parts) {
                writeln!(
                    out,
                    "{:>5} {:>5} {:>3}  {c:<wc$}  {part:<wp$}  {}",
                    r.m, r.n, r.p, r.standard
                )?;
            }
            Ok(())
        }
        OutputFormat::Json => json_line(out, rows),
        OutputFormat::Csv => {
            writeln!(out, "{COMPUTE_CSV_HEADER}")?;
            for r in rows {
                writeln!(out, "{}", compute_csv_row(r))?;
            }
            Ok(())
        }
    }
}

pub fn oracle(out: &mut dyn Write, r: &OracleRecord, format: OutputFormat) -> io::Result<()> {
    match format {
        OutputFormat::Text => {
            writeln!(out, "m = {}, n = {}, p = {}", r.m, r.n, r.p)?;
            writeln!(out, "ranks: {}", joined(&r.ranks, " "))?;
            writeln!(
                out,
                "multiplicity form: {}",
                mult_form(&r.multiplicity_form)
            )?;
            writeln!(out, "partition: {}", joined(&r.partition, " "))
        }
        OutputFormat::Json => json_line(out, r),
        OutputFormat::Csv => {
            writeln!(out, "m,n,p,partition,ranks")?;
            writeln!(
                out,
                "{},{},{},\"{}\",\"{}\"",
                r.m,
                r.n,
                r.p,
                joined(&r.partition, " "),
                joined(&r.ranks, " ")
            )
        }
    }
}

pub fn report(out: &mut dyn Write, r: &VerifyReport, format: OutputFormat) -> io::Result<()> {
    match format {
        OutputFormat::Text => write!(out, "{r}"),
        OutputFormat::Json => json_line(out, r),
        OutputFormat::Csv => {
            writeln!(out, "suite,cases_checked,failures,elapsed_ms")?;
            writeln!(
                out,
                "{},{},{},{}",
                r.suite,
                r.cases_checked,
                r.failures.len(),
                r.elapsed.as_millis()
            )
        }
    }
}
