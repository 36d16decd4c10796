//! Group records: prime sets, prime graph complements, fixed-point rows and
//! Brauer rows, plus the bundled dataset.

use crate::graph::PrimeGraph;
use crate::primes::Prime;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};
use thiserror::Error;

pub const BUNDLED_JSON: &str = include_str!("../data/groups.json");
pub const DATA_ENV: &str = "GKGRAPH_DATA";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DataError {
    #[error("cannot parse dataset: {0}")]
    ParseError(String),
    #[error("record {record}: {clause}")]
    ValidationError { record: String, clause: String },
    #[error("unknown group {0:?}")]
    UnknownGroup(String),
    #[error("{group}: {what} not available")]
    DataUnavailable { group: String, what: String },
}

/// Rows inherited from another record, each extended by `extend_by`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowsFrom {
    pub group: String,
    #[serde(default)]
    pub extend_by: BTreeSet<Prime>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupData {
    pub name: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub aliases: Vec<String>,
    pub pi: BTreeSet<Prime>,
    pub schur: Option<u64>,
    pub out: Option<u64>,
    pub pgc: PrimeGraph,
    #[serde(default)]
    pub fixed_rows: Vec<BTreeSet<Prime>>,
    #[serde(default)]
    pub brauer: BTreeMap<Prime, Vec<BTreeSet<Prime>>>,
    pub simple: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rows_from: Option<RowsFrom>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
}

impl GroupData {
    /// Checks the record on its own (cross-record references are checked by
    /// the dataset).
    pub fn validate(&self) -> Result<(), DataError> {
        let fail = |clause: String| Err(DataError::ValidationError { record: self.name.clone(), clause });
        if self.name.trim().is_empty() {
            return fail("name is empty".into());
        }
        if self.pgc.vertex_set() != self.pi {
            return fail("pgc vertex set differs from pi".into());
        }
        for (what, v) in [("schur", self.schur), ("out", self.out)] {
            if v == Some(0) {
                return fail(format!("{what} must be positive"));
            }
        }
        for row in &self.fixed_rows {
            if !row.is_subset(&self.pi) {
                return fail(format!("fixed-point row {} is not contained in pi", fmt_set(row)));
            }
            if self.simple && !row.iter().any(|p| p.get() == 2) {
                return fail(format!("fixed-point row {} of a simple group lacks 2", fmt_set(row)));
            }
        }
        for (p, rows) in &self.brauer {
            if !self.pi.contains(p) {
                return fail(format!("Brauer characteristic {p} is not in pi"));
            }
            for row in rows {
                if row.contains(p) {
                    return fail(format!("Brauer row {} contains its own characteristic {p}", fmt_set(row)));
                }
                if !row.is_subset(&self.pi) {
                    return fail(format!("Brauer row {} is not contained in pi", fmt_set(row)));
                }
            }
        }
        Ok(())
    }

    pub fn matches(&self, name: &str) -> bool {
        self.name == name || self.aliases.iter().any(|a| a == name)
    }
}

pub fn fmt_set(s: &BTreeSet<Prime>) -> String {
    let v: Vec<String> = s.iter().map(|p| p.to_string()).collect();
    format!("[{}]", v.join(","))
}

#[derive(Serialize, Deserialize)]
struct DatasetWire {
    version: String,
    records: Vec<GroupData>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dataset {
    pub version: String,
    pub records: BTreeMap<String, GroupData>,
}

impl Dataset {
    pub fn bundled() -> Dataset {
        Self::from_json(BUNDLED_JSON).expect("bundled dataset is valid")
    }

    pub fn from_json(s: &str) -> Result<Dataset, DataError> {
        let wire: DatasetWire = serde_json::from_str(s).map_err(|e| DataError::ParseError(e.to_string()))?;
        Self::from_records(wire.version, wire.records)
    }

    pub fn from_records(version: String, list: Vec<GroupData>) -> Result<Dataset, DataError> {
        let mut records = BTreeMap::new();
        let mut names = BTreeSet::new();
        for r in list {
            r.validate()?;
            for n in std::iter::once(&r.name).chain(&r.aliases) {
                if !names.insert(n.clone()) {
                    return Err(DataError::ValidationError {
                        record: r.name.clone(),
                        clause: format!("name {n:?} is not unique"),
                    });
                }
            }
            records.insert(r.name.clone(), r);
        }
        let d = Dataset { version, records };
        for r in d.records.values() {
            if let Some(src) = &r.rows_from {
                let fail = |clause: String| DataError::ValidationError { record: r.name.clone(), clause };
                let base = d
                    .records
                    .get(&src.group)
                    .ok_or_else(|| fail(format!("rows_from names unknown group {:?}", src.group)))?;
                if base.rows_from.is_some() {
                    return Err(fail("rows_from must point at a record with its own rows".into()));
                }
                if base.pi != r.pi || !src.extend_by.is_subset(&r.pi) {
                    return Err(fail("rows_from must share the prime set".into()));
                }
            }
        }
        Ok(d)
    }

    pub fn load(path: &Path) -> Result<Dataset, DataError> {
        let s = std::fs::read_to_string(path).map_err(|e| DataError::ParseError(format!("{}: {e}", path.display())))?;
        Self::from_json(&s)
    }

    /// Explicit path, then the `GKGRAPH_DATA` variable, then the bundled set.
    pub fn resolve(explicit: Option<&Path>) -> Result<Dataset, DataError> {
        let env = std::env::var_os(DATA_ENV).map(PathBuf::from);
        match explicit.map(Path::to_path_buf).or(env) {
            Some(p) => Self::load(&p),
            None => Ok(Self::bundled()),
        }
    }

    /// Canonical serialization: records sorted by name, two-space indent.
    pub fn save(&self) -> String {
        let wire = DatasetWire { version: self.version.clone(), records: self.records.values().cloned().collect() };
        let mut s = serde_json::to_string_pretty(&wire).expect("serializable");
        s.push('\n');
        s
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn get(&self, name: &str) -> Result<&GroupData, DataError> {
        self.records.values().find(|r| r.matches(name)).ok_or_else(|| DataError::UnknownGroup(name.to_string()))
    }

    pub fn get_pgc(&self, name: &str) -> Result<&PrimeGraph, DataError> {
        Ok(&self.get(name)?.pgc)
    }

    /// Fixed-point rows, following `rows_from` when the record has none of its own.
    pub fn fixed_rows(&self, name: &str) -> Result<Vec<BTreeSet<Prime>>, DataError> {
        let r = self.get(name)?;
        let rows = match &r.rows_from {
            Some(src) if r.fixed_rows.is_empty() => self
                .get(&src.group)?
                .fixed_rows
                .iter()
                .map(|row| crate::character::extend_profile(row, &src.extend_by))
                .collect(),
            _ => r.fixed_rows.clone(),
        };
        if rows.is_empty() {
            return Err(DataError::DataUnavailable { group: r.name.clone(), what: "fixed-point rows".into() });
        }
        Ok(rows)
    }

    /// The record with inherited rows filled in.
    pub fn resolved(&self, name: &str) -> Result<GroupData, DataError> {
        let mut r = self.get(name)?.clone();
        if let Ok(rows) = self.fixed_rows(name) {
            r.fixed_rows = rows;
        }
        Ok(r)
    }

    pub fn brauer_rows(&self, name: &str, p: Prime) -> Result<&[BTreeSet<Prime>], DataError> {
        let r = self.get(name)?;
        r.brauer.get(&p).map(Vec::as_slice).ok_or_else(|| DataError::DataUnavailable {
            group: r.name.clone(),
            what: format!("Brauer rows in characteristic {p}"),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{new_graph, p, primes};

    #[test]
    fn bundled_loads() {
        let d = Dataset::bundled();
        assert_eq!(d.len(), 20);
        assert_eq!(d.save(), BUNDLED_JSON, "bundled file is in canonical form");
        assert_eq!(Dataset::from_json(&d.save()).unwrap(), d);
    }

    #[test]
    fn lookups() {
        let d = Dataset::bundled();
        assert_eq!(d.get_pgc("2.PSL(2,13)").unwrap(), &new_graph(&[2, 3, 7, 13], &[(3, 7), (3, 13), (7, 13)]).unwrap());
        assert_eq!(
            d.get_pgc("F_3^36 ⋊ 2.PSL(2,13)").unwrap(),
            &new_graph(&[2, 3, 7, 13], &[(3, 13), (7, 13)]).unwrap()
        );
        assert_eq!(d.get_pgc("F_3^36 : 2.PSL(2,13)").unwrap().edge_count(), 2);
        assert_eq!(d.get_pgc("Monster"), Err(DataError::UnknownGroup("Monster".into())));
        assert!(matches!(d.brauer_rows("HS", p(7)), Err(DataError::DataUnavailable { .. })));
        assert_eq!(d.brauer_rows("PSL(2,13)", p(13)).unwrap(), &[primes(&[2, 3, 7])]);
        assert_eq!(d.fixed_rows("A_15").unwrap(), d.fixed_rows("A_13").unwrap());
        assert_eq!(d.fixed_rows("C_3 × 2.PSL(2,13)").unwrap(), d.fixed_rows("2.PSL(2,13)").unwrap());
    }

    #[test]
    fn validation_errors() {
        assert!(matches!(Dataset::from_json(""), Err(DataError::ParseError(_))));
        let mut r = Dataset::bundled().get("PSL(2,13)").unwrap().clone();
        r.brauer.insert(p(13), vec![primes(&[2, 13])]);
        let err = Dataset::from_records("x".into(), vec![r]).unwrap_err();
        match err {
            DataError::ValidationError { record, clause } => {
                assert_eq!(record, "PSL(2,13)");
                assert!(clause.contains("own characteristic"), "{clause}");
            }
            e => panic!("{e:?}"),
        }
        let mut s = Dataset::bundled().get("A_11").unwrap().clone();
        s.fixed_rows.push(primes(&[3, 5]));
        assert!(matches!(s.validate(), Err(DataError::ValidationError { .. })));
        let dup = Dataset::bundled().get("HS").unwrap().clone();
        assert!(Dataset::from_records("x".into(), vec![dup.clone(), dup]).is_err());
    }
}
