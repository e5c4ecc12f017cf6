//! JSON and CSV encodings of [`SampleField`](super::SampleField) and
//! [`CoefficientMap`](super::CoefficientMap).
//!
//! JSON: `{"n": 2, "N": 4, "entries": [{"key": [1, 3], "re": 0.5, "im": -0.25}]}`.
//! CSV: header `key_1,…,key_n,re,im`, one row per entry; `N` travels
//! out of band. Floats use shortest round-trip formatting in both.

use std::collections::BTreeSet;
use std::io::{Read, Write};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::field::{FieldKind, KeyedValues};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Serialize, Deserialize)]
struct FileEntry {
    key: Vec<i64>,
    re: f64,
    im: f64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FieldFile {
    n: usize,
    #[serde(rename = "N")]
    density: usize,
    entries: Vec<FileEntry>,
}

fn check_finite(key: &[i64], v: Complex64) -> Result<()> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(())
    } else {
        Err(Error::Schema(format!("non-finite value at key {key:?}")))
    }
}

pub fn to_json<K: FieldKind>(field: &KeyedValues<K>) -> Result<String> {
    let entries = field
        .iter()
        .map(|(k, v)| {
            check_finite(k, *v)?;
            Ok(FileEntry {
                key: k.clone(),
                re: v.re,
                im: v.im,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let file = FieldFile {
        n: field.dimension(),
        density: field.density(),
        entries,
    };
    Ok(serde_json::to_string_pretty(&file).expect("plain data serializes"))
}

pub fn from_json<K: FieldKind>(text: &str) -> Result<KeyedValues<K>> {
    let file: FieldFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    let mut seen = BTreeSet::new();
    let mut entries = Vec::with_capacity(file.entries.len());
    for (i, e) in file.entries.into_iter().enumerate() {
        if e.key.len() != file.n {
            return Err(Error::Schema(format!(
                "entry {i}: key {:?} has length {}, expected n = {}",
                e.key,
                e.key.len(),
                file.n
            )));
        }
        if !seen.insert(e.key.clone()) {
            return Err(Error::Schema(format!("entry {i}: duplicate key {:?}", e.key)));
        }
        entries.push((e.key, Complex64::new(e.re, e.im)));
    }
    Ok(KeyedValues::from_entries(file.n, file.density, entries))
}

pub fn write_csv<K: FieldKind, W: Write>(field: &KeyedValues<K>, writer: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    let n = field.dimension();
    let mut header: Vec<String> = (1..=n).map(|i| format!("key_{i}")).collect();
    header.push("re".into());
    header.push("im".into());
    w.write_record(&header).map_err(csv_error)?;
    for (k, v) in field.iter() {
        check_finite(k, *v)?;
        let mut row: Vec<String> = k.iter().map(|x| x.to_string()).collect();
        row.push(v.re.to_string());
        row.push(v.im.to_string());
        w.write_record(&row).map_err(csv_error)?;
    }
    w.flush()?;
    Ok(())
}

/// Reads a CSV field; the grid density is not part of the CSV schema.
pub fn read_csv<K: FieldKind, R: Read>(reader: R, density: usize) -> Result<KeyedValues<K>> {
    let mut r = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let header = r.headers().map_err(csv_error)?.clone();
    let cols: Vec<&str> = header.iter().collect();
    let n = cols.len().checked_sub(2).filter(|&n| n >= 1).ok_or_else(|| Error::Parse {
        line: 1,
        message: format!("header {cols:?} needs key columns followed by re, im"),
    })?;
    let expected: Vec<String> = (1..=n)
        .map(|i| format!("key_{i}"))
        .chain(["re".to_string(), "im".to_string()])
        .collect();
    if cols != expected {
        return Err(Error::Parse {
            line: 1,
            message: format!("header {cols:?}, expected {expected:?}"),
        });
    }
    let mut seen = BTreeSet::new();
    let mut entries = Vec::new();
    for record in r.records() {
        let record = record.map_err(csv_error)?;
        let line = record.position().map(|p| p.line() as usize).unwrap_or(0);
        let bad = |message: String| Error::Parse { line, message };
        let key = record
            .iter()
            .take(n)
            .map(|f| f.parse::<i64>().map_err(|e| bad(format!("key {f:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        let re: f64 = record[n].parse().map_err(|e| bad(format!("re {:?}: {e}", &record[n])))?;
        let im: f64 = record[n + 1]
            .parse()
            .map_err(|e| bad(format!("im {:?}: {e}", &record[n + 1])))?;
        if !seen.insert(key.clone()) {
            return Err(bad(format!("duplicate key {key:?}")));
        }
        entries.push((key, Complex64::new(re, im)));
    }
    Ok(KeyedValues::from_entries(n, density, entries))
}

fn csv_error(e: csv::Error) -> Error {
    let line = e.position().map(|p| p.line() as usize).unwrap_or(0);
    Error::Parse {
        line,
        message: e.to_string(),
    }
}
