//! Serialization of count series: OEIS b-files, CSV and JSON.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use serde_json::json;

use crate::error::{Error, Result};
use crate::recursion::CountSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Bfile,
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "bfile" => Ok(OutputFormat::Bfile),
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("unknown format `{other}` (expected bfile, csv or json)")),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Bfile => "bfile",
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        })
    }
}

/// What a series counts and how its index is read.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesHeader {
    pub name: String,
    pub description: String,
    /// e.g. `n >= 1, x = 2n`
    pub argument: String,
    pub oeis: Option<String>,
}

pub fn write_series<W: Write + ?Sized>(
    out: &mut W,
    format: OutputFormat,
    header: &SeriesHeader,
    series: &CountSeries,
) -> io::Result<()> {
    match format {
        OutputFormat::Bfile => write_bfile(out, header, series),
        OutputFormat::Csv => write_csv(out, series),
        OutputFormat::Json => write_json(out, header, series),
    }
}

/// `# ` comment lines, then one `index value` line per term.
pub fn write_bfile<W: Write + ?Sized>(out: &mut W, header: &SeriesHeader, series: &CountSeries) -> io::Result<()> {
    writeln!(out, "# {}: {}", header.name, header.description)?;
    writeln!(out, "# index: {}", header.argument)?;
    if let Some(oeis) = &header.oeis {
        writeln!(out, "# OEIS: {oeis}")?;
    }
    for (index, value) in series.iter() {
        writeln!(out, "{index} {value}")?;
    }
    Ok(())
}

pub fn write_csv<W: Write + ?Sized>(out: &mut W, series: &CountSeries) -> io::Result<()> {
    writeln!(out, "index,count")?;
    for (index, value) in series.iter() {
        writeln!(out, "{index},{value}")?;
    }
    Ok(())
}

pub fn write_json<W: Write + ?Sized>(out: &mut W, header: &SeriesHeader, series: &CountSeries) -> io::Result<()> {
    let doc = json!({
        "name": header.name,
        "description": header.description,
        "argument": header.argument,
        "oeis": header.oeis,
        "start": series.start(),
        "step": series.step(),
        "values": series.values(),
    });
    serde_json::to_writer_pretty(&mut *out, &doc)?;
    writeln!(out)
}

/// Reads a b-file back. Indices must advance by a constant step.
pub fn parse_bfile(text: &str) -> Result<CountSeries> {
    let mut entries = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse {
            line: idx + 1,
            message,
        };
        let mut fields = line.split_whitespace();
        let (Some(i), Some(v), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(err(format!("expected `index value`, got `{line}`")));
        };
        let i: u64 = i.parse().map_err(|e| err(format!("bad index `{i}`: {e}")))?;
        let v: u64 = v.parse().map_err(|e| err(format!("bad value `{v}`: {e}")))?;
        entries.push((idx + 1, i, v));
    }
    let Some(&(_, start, _)) = entries.first() else {
        return Ok(CountSeries::new(0, 1));
    };
    let step = match entries.get(1) {
        Some(&(_, second, _)) if second > start => second - start,
        Some(&(line, _, _)) => {
            return Err(Error::Parse {
                line,
                message: "indices must increase".into(),
            })
        }
        None => 1,
    };
    for (k, &(line, index, _)) in entries.iter().enumerate() {
        if index != start + step * k as u64 {
            return Err(Error::Parse {
                line,
                message: format!("expected index {}, found {index}", start + step * k as u64),
            });
        }
    }
    Ok(CountSeries::from_values(
        start,
        step,
        entries.into_iter().map(|(_, _, v)| v).collect(),
    ))
}
