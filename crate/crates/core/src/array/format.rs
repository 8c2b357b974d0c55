//! The `moa v1` text format.
//!
//! ```text
//! moa v1
//! runs 4
//! levels 2 2
//! kind hadamard
//! strength 1
//! rows:
//! 0 0
//! ...
//! ```
//!
//! `kind` and `strength` are optional and may appear in any order after
//! `levels`. Lines starting with `#` and blank lines are ignored before
//! `rows:`. Serialization is canonical.

use std::fmt::Write as _;
use std::str::FromStr;

use super::MixedArray;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArrayKind {
    /// A difference scheme over a group of order `d` with strength `t`.
    DifferenceScheme { d: u32, t: usize },
    Hadamard,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoaDocument {
    pub array: MixedArray,
    pub kind: Option<ArrayKind>,
    /// Advisory only; never trusted without verification.
    pub strength: Option<usize>,
}

impl MoaDocument {
    pub fn plain(array: MixedArray) -> Self {
        Self { array, kind: None, strength: None }
    }
}

fn perr<T>(line: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, message: message.into() })
}

fn number<T: FromStr>(tok: &str, line: usize) -> Result<T> {
    tok.parse().or_else(|_| perr(line, format!("expected an integer, found {tok:?}")))
}

pub fn parse_moa(text: &str) -> Result<MoaDocument> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim_end_matches('\r')));
    let mut header = lines
        .by_ref()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));

    let (n, first) = header.next().map_or_else(|| perr(1, "empty document"), Ok)?;
    if first.trim() != "moa v1" {
        return perr(n, format!("expected `moa v1`, found {first:?}"));
    }

    let mut runs = None;
    let mut levels: Option<Vec<u32>> = None;
    let mut kind = None;
    let mut strength = None;
    loop {
        let Some((n, line)) = header.next() else {
            return perr(n, "missing `rows:` line");
        };
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.as_slice() {
            ["rows:"] => break,
            ["runs", r] => runs = Some(number::<usize>(r, n)?),
            ["levels", ds @ ..] if !ds.is_empty() => {
                levels = Some(ds.iter().map(|t| number(t, n)).collect::<Result<_>>()?)
            }
            ["strength", k] => strength = Some(number(k, n)?),
            ["kind", "hadamard"] => kind = Some(ArrayKind::Hadamard),
            ["kind", "ds", d, t] => {
                kind = Some(ArrayKind::DifferenceScheme { d: number(d, n)?, t: number(t, n)? })
            }
            _ => return perr(n, format!("unrecognized header line {line:?}")),
        }
    }
    drop(header);
    let runs = runs.map_or_else(|| perr(0, "missing `runs` line"), Ok)?;
    let levels = levels.map_or_else(|| perr(0, "missing `levels` line"), Ok)?;

    let mut cells = Vec::with_capacity(runs * levels.len());
    let mut seen = 0;
    let mut last = 0;
    for (n, line) in lines {
        last = n;
        if line.trim().is_empty() {
            continue;
        }
        if seen == runs {
            return perr(n, format!("more than {runs} rows"));
        }
        let before = cells.len();
        for tok in line.split_whitespace() {
            cells.push(number::<u16>(tok, n)?);
        }
        if cells.len() - before != levels.len() {
            return perr(n, format!("row has {} entries, expected {}", cells.len() - before, levels.len()));
        }
        seen += 1;
    }
    if seen != runs {
        return perr(last, format!("found {seen} rows, header says {runs}"));
    }
    let array = MixedArray::new(levels, cells)?;
    Ok(MoaDocument { array, kind, strength })
}

pub fn serialize_moa(doc: &MoaDocument) -> String {
    let a = &doc.array;
    let mut out = String::with_capacity(a.cells().len() * 3 + 64);
    out.push_str("moa v1\n");
    let _ = writeln!(out, "runs {}", a.runs());
    let levels: Vec<String> = a.levels().iter().map(u32::to_string).collect();
    let _ = writeln!(out, "levels {}", levels.join(" "));
    match doc.kind {
        Some(ArrayKind::DifferenceScheme { d, t }) => {
            let _ = writeln!(out, "kind ds {d} {t}");
        }
        Some(ArrayKind::Hadamard) => out.push_str("kind hadamard\n"),
        None => {}
    }
    if let Some(k) = doc.strength {
        let _ = writeln!(out, "strength {k}");
    }
    out.push_str("rows:\n");
    out.push_str(&a.to_string());
    out
}

impl MixedArray {
    pub fn to_moa_string(&self) -> String {
        serialize_moa(&MoaDocument::plain(self.clone()))
    }

    pub fn from_moa_str(text: &str) -> Result<Self> {
        parse_moa(text).map(|d| d.array)
    }
}
