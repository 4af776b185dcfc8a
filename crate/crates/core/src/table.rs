//! Rectangular tables of exact counts indexed by `(k, n)`.
//!
//! CSV layout: a header line `k\n,1,2,...,N` followed by one line
//! `k=K,v1,...,vN` per row. JSON layout:
//! `{"tau":..,"mode":..,"rows":[{"k":K,"counts":[..]}]}` with counts as bare
//! integers of unbounded size.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::CycleMode;

/// Which computation filled a table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Source {
    Oracle,
    Recurrence,
    Genfun,
}

impl Source {
    pub fn as_str(self) -> &'static str {
        match self {
            Source::Oracle => "oracle",
            Source::Recurrence => "recurrence",
            Source::Genfun => "genfun",
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Source {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "oracle" => Ok(Source::Oracle),
            "recurrence" => Ok(Source::Recurrence),
            "genfun" | "gf" => Ok(Source::Genfun),
            other => Err(Error::Parse(format!("unknown table source {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub k: usize,
    /// `counts[n - 1]` for `n = 1..=n_max`.
    pub counts: Vec<BigUint>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub tau: String,
    pub mode: CycleMode,
    pub source: Source,
    pub rows: Vec<TableRow>,
}

impl CountTable {
    pub fn zeros(tau: String, mode: CycleMode, source: Source, ks: RangeInclusive<usize>, n_max: usize) -> Self {
        CountTable {
            tau,
            mode,
            source,
            rows: ks
                .map(|k| TableRow {
                    k,
                    counts: vec![BigUint::default(); n_max],
                })
                .collect(),
        }
    }

    pub fn n_max(&self) -> usize {
        self.rows.first().map_or(0, |r| r.counts.len())
    }

    pub fn ks(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r.k)
    }

    pub fn row(&self, k: usize) -> Option<&[BigUint]> {
        self.rows.iter().find(|r| r.k == k).map(|r| r.counts.as_slice())
    }

    pub fn get(&self, k: usize, n: usize) -> Option<&BigUint> {
        self.row(k).and_then(|r| r.get(n.checked_sub(1)?))
    }

    pub fn set(&mut self, k: usize, n: usize, value: BigUint) {
        let row = self.rows.iter_mut().find(|r| r.k == k).expect("row k present");
        row.counts[n - 1] = value;
    }

    /// Same shape and entries, ignoring provenance.
    pub fn same_counts(&self, other: &CountTable) -> bool {
        self.rows == other.rows
    }

    /// First cell `(k, n)` where the two tables disagree.
    pub fn first_difference(&self, other: &CountTable) -> Option<(usize, usize)> {
        for (a, b) in self.rows.iter().zip(&other.rows) {
            if a.k != b.k {
                return Some((a.k, 0));
            }
            if let Some(i) = a.counts.iter().zip(&b.counts).position(|(x, y)| x != y) {
                return Some((a.k, i + 1));
            }
            if a.counts.len() != b.counts.len() {
                return Some((a.k, a.counts.len().min(b.counts.len()) + 1));
            }
        }
        (self.rows.len() != other.rows.len()).then(|| (self.rows.len().min(other.rows.len()), 0))
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("k\\n");
        for n in 1..=self.n_max() {
            out.push_str(&format!(",{n}"));
        }
        out.push('\n');
        for row in &self.rows {
            out.push_str(&format!("k={}", row.k));
            for v in &row.counts {
                out.push_str(&format!(",{v}"));
            }
            out.push('\n');
        }
        out
    }

    pub fn from_csv(text: &str, tau: &str, mode: CycleMode, source: Source) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty CSV".into()))?;
        let mut cells = header.split(',');
        if cells.next() != Some("k\\n") {
            return Err(Error::Parse("CSV header must start with k\\n".into()));
        }
        for (i, cell) in cells.enumerate() {
            if cell.trim().parse::<usize>().ok() != Some(i + 1) {
                return Err(Error::Parse(format!("bad CSV column header {cell:?}")));
            }
        }
        let mut rows = Vec::new();
        for line in lines {
            let mut cells = line.split(',');
            let label = cells.next().unwrap_or_default();
            let k = label
                .strip_prefix("k=")
                .and_then(|k| k.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad row label {label:?}")))?;
            let counts = cells
                .map(|c| c.trim().parse::<BigUint>().map_err(|_| Error::Parse(format!("bad count {c:?}"))))
                .collect::<Result<Vec<_>>>()?;
            rows.push(TableRow { k, counts });
        }
        Ok(CountTable {
            tau: tau.to_string(),
            mode,
            source,
            rows,
        })
    }

    pub fn to_json(&self) -> String {
        let doc = JsonTable {
            tau: self.tau.clone(),
            mode: self.mode.as_str().to_string(),
            rows: self
                .rows
                .iter()
                .map(|r| JsonRow {
                    k: r.k,
                    counts: r.counts.iter().map(big_to_number).collect(),
                })
                .collect(),
        };
        serde_json::to_string(&doc).expect("table serializes")
    }

    pub fn from_json(text: &str, source: Source) -> Result<Self> {
        let doc: JsonTable = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let rows = doc
            .rows
            .into_iter()
            .map(|r| {
                let counts = r
                    .counts
                    .iter()
                    .map(|n| {
                        n.to_string()
                            .parse::<BigUint>()
                            .map_err(|_| Error::Parse(format!("count {n} is not a nonnegative integer")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(TableRow { k: r.k, counts })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CountTable {
            tau: doc.tau,
            mode: doc.mode.parse()?,
            source,
            rows,
        })
    }
}

pub(crate) fn big_to_number(v: &BigUint) -> serde_json::Number {
    v.to_string().parse().expect("decimal integer is a JSON number")
}

#[derive(Serialize, Deserialize)]
struct JsonTable {
    tau: String,
    mode: String,
    rows: Vec<JsonRow>,
}

#[derive(Serialize, Deserialize)]
struct JsonRow {
    k: usize,
    counts: Vec<serde_json::Number>,
}

impl fmt::Display for CountTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .rows
            .iter()
            .flat_map(|r| r.counts.iter().map(|v| v.to_string().len()))
            .chain(std::iter::once(self.n_max().to_string().len()))
            .max()
            .unwrap_or(1);
        write!(f, "k\\n |")?;
        for n in 1..=self.n_max() {
            write!(f, " {n:>width$}")?;
        }
        writeln!(f)?;
        writeln!(f, "----+{}", "-".repeat((width + 1) * self.n_max()))?;
        for row in &self.rows {
            write!(f, "{:>3} |", row.k)?;
            for v in &row.counts {
                write!(f, " {:>width$}", v.to_string())?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
