//! JSON file format for complexes.
//!
//! ```json
//! {
//!   "modulus": 4,
//!   "convention": "homological",
//!   "support": { "periodic": { "period": 1 } },
//!   "cells": { "0": { "factors": [4] } },
//!   "diffs": { "0": [[2]] }
//! }
//! ```
//!
//! Cells are keyed by degree and are either `{"factors": [d, …]}` (cyclic
//! orders, `0` for ℤ) or `{"rank": k}` (free of rank `k`). Missing cells are
//! zero. Differentials are keyed by source degree and list rows; a missing
//! one is the zero map.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use tatebal::abgroup::FpGroup;
use tatebal::complex::{Complex, Convention, Support};
use tatebal::snf::IntMatrix;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConventionSpec {
    Homological,
    Cohomological,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SupportSpec {
    Window {
        lo: i64,
        hi: i64,
        #[serde(default = "default_true", skip_serializing_if = "is_true")]
        zero_outside: bool,
    },
    Periodic {
        period: usize,
    },
}

fn default_true() -> bool {
    true
}

fn is_true(b: &bool) -> bool {
    *b
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CellSpec {
    Factors(Vec<i64>),
    Rank(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    pub modulus: u64,
    pub convention: ConventionSpec,
    pub support: SupportSpec,
    #[serde(default)]
    pub cells: BTreeMap<i64, CellSpec>,
    #[serde(default)]
    pub diffs: BTreeMap<i64, Vec<Vec<i64>>>,
}

fn format_error(location: impl Into<String>, message: impl Into<String>) -> CliError {
    CliError::Format {
        location: location.into(),
        message: message.into(),
    }
}

impl ComplexFile {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| format_error(format!("line {}, column {}", e.line(), e.column()), e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }

    fn stored_degrees(&self) -> Vec<i64> {
        match self.support {
            SupportSpec::Window { lo, hi, .. } => (lo..=hi).collect(),
            SupportSpec::Periodic { period } => (0..period as i64).collect(),
        }
    }

    pub fn to_complex(&self) -> Result<Complex, CliError> {
        let m = self.modulus;
        if m == 1 {
            return Err(format_error("modulus", "modulus must be 0 (for Z) or at least 2"));
        }
        let degrees = self.stored_degrees();
        if let Some(n) = self.cells.keys().find(|n| !degrees.contains(n)) {
            return Err(format_error(format!("cells.{n}"), "degree outside the support"));
        }
        let cells: Vec<Arc<FpGroup>> = degrees
            .iter()
            .map(|n| {
                Arc::new(match self.cells.get(n) {
                    None => FpGroup::zero(m),
                    Some(CellSpec::Rank(k)) => FpGroup::free(m, *k),
                    Some(CellSpec::Factors(f)) => FpGroup::cyclic(m, f),
                })
            })
            .collect();
        let rank = |n: i64| {
            let k = degrees.iter().position(|&d| d == n).unwrap_or(0);
            cells.get(k).map_or(0, |c| c.ambient_rank())
        };
        let step = match self.convention {
            ConventionSpec::Homological => -1,
            ConventionSpec::Cohomological => 1,
        };
        let mut diffs = BTreeMap::new();
        for (&n, rows) in &self.diffs {
            let at = format!("diffs.{n}");
            let target = match self.support {
                SupportSpec::Periodic { period } => (n + step).rem_euclid(period as i64),
                SupportSpec::Window { .. } => n + step,
            };
            if !degrees.contains(&n) || !degrees.contains(&target) {
                return Err(format_error(at, "differential leaves the support"));
            }
            let (r, c) = (rank(target), rank(n));
            if rows.len() != r || rows.iter().any(|row| row.len() != c) {
                return Err(format_error(at, format!("expected a {r}×{c} matrix")));
            }
            diffs.insert(n, IntMatrix::from_rows(rows, c));
        }
        let convention = match self.convention {
            ConventionSpec::Homological => Convention::Homological,
            ConventionSpec::Cohomological => Convention::Cohomological,
        };
        let support = match self.support {
            SupportSpec::Window { lo, hi, zero_outside } => Support::Window { lo, hi, zero_outside },
            SupportSpec::Periodic { period } => Support::Periodic { period },
        };
        Ok(Complex::new(convention, m, support, cells, diffs)?)
    }

    /// Writes every cell as its invariant factors and rewrites the
    /// differentials in the matching cyclic bases.
    pub fn from_complex(c: &Complex) -> Result<Self, CliError> {
        let small = |x: &BigInt| i64::try_from(x).map_err(|_| format_error("serialize", format!("entry {x} exceeds 64 bits")));
        let support = match c.support() {
            Support::Window { lo, hi, zero_outside } => SupportSpec::Window { lo, hi, zero_outside },
            Support::Periodic { period } => SupportSpec::Periodic { period },
        };
        let degrees: Vec<i64> = c.stored_degrees().collect();
        let cells = degrees
            .iter()
            .zip(c.stored_cells())
            .filter(|(_, g)| !g.is_trivial())
            .map(|(&n, g)| Ok((n, CellSpec::Factors(g.invariant_factors().iter().map(small).collect::<Result<_, _>>()?))))
            .collect::<Result<_, CliError>>()?;
        let mut diffs = BTreeMap::new();
        for (n, matrix) in c.stored_diffs() {
            let (Ok(src), Ok(f)) = (c.cell(n), c.diff(n)) else { continue };
            if matrix.is_zero() || src.is_trivial() || f.target().is_trivial() {
                continue;
            }
            let cols: Vec<Vec<BigInt>> = (0..src.cyclic_rank())
                .map(|k| f.target().to_cyclic(&f.apply_coords(&src.cyclic_generator(k))))
                .collect();
            let m = IntMatrix::from_columns(f.target().cyclic_rank(), &cols);
            if !m.is_zero() {
                let rows = (0..m.rows()).map(|r| m.row(r).iter().map(small).collect()).collect::<Result<_, _>>()?;
                diffs.insert(n, rows);
            }
        }
        Ok(ComplexFile {
            modulus: c.modulus(),
            convention: match c.convention() {
                Convention::Homological => ConventionSpec::Homological,
                Convention::Cohomological => ConventionSpec::Cohomological,
            },
            support,
            cells,
            diffs,
        })
    }
}

/// Comma list of cyclic orders, e.g. `2,2,4`. Over `ℤ/m` each order must divide `m`.
pub fn parse_module(spec: &str, m: u64) -> Result<Arc<FpGroup>, CliError> {
    let orders = spec
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<u64>().map_err(|_| format_error(format!("module '{spec}'"), format!("'{s}' is not an order"))))
        .collect::<Result<Vec<_>, _>>()?;
    if m >= 2 {
        if let Some(&d) = orders.iter().find(|&&d| d == 0 || m % d != 0) {
            return Err(tatebal::Error::NotAModule { factor: BigInt::from(d), modulus: m }.into());
        }
    }
    Ok(Arc::new(FpGroup::cyclic(m, &orders)))
}

/// Inclusive range `lo..hi`; a single integer is a one-element range.
pub fn parse_range(spec: &str) -> Result<(i64, i64), CliError> {
    let bad = || format_error(format!("range '{spec}'"), "expected lo..hi");
    let (lo, hi) = match spec.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().trim_start_matches('=').parse().map_err(|_| bad())?),
        None => {
            let n = spec.trim().parse().map_err(|_| bad())?;
            (n, n)
        }
    };
    if hi < lo {
        return Err(bad());
    }
    Ok((lo, hi))
}

/// Bidegree `i,j`.
pub fn parse_bidegree(spec: &str) -> Result<(i64, i64), CliError> {
    let bad = || format_error(format!("cell '{spec}'"), "expected i,j");
    let (a, b) = spec.split_once(',').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

#[cfg(test)]
mod tests {
    use super::*;

    const STRAND: &str = r#"{"modulus": 4, "convention": "homological",
        "support": {"periodic": {"period": 1}},
        "cells": {"0": {"factors": [4]}}, "diffs": {"0": [[2]]}}"#;

    #[test]
    fn parses_strand() {
        let c = ComplexFile::from_json(STRAND).unwrap().to_complex().unwrap();
        assert!(c.is_exact().unwrap());
        assert_eq!(c.diff(5).unwrap().matrix(), &IntMatrix::from_rows(&[vec![2]], 1));
    }

    #[test]
    fn reports_locations() {
        let err = ComplexFile::from_json(r#"{"modulus": 4, "convention": "sideways"}"#).unwrap_err();
        assert!(matches!(err, CliError::Format { .. }));
        let wrong_shape = STRAND.replace("[[2]]", "[[2, 1]]");
        let err = ComplexFile::from_json(&wrong_shape).unwrap().to_complex().unwrap_err();
        assert!(err.to_string().contains("diffs.0"), "{err}");
    }

    #[test]
    fn ranges_and_modules() {
        assert_eq!(parse_range("-3..3").unwrap(), (-3, 3));
        assert_eq!(parse_range("2").unwrap(), (2, 2));
        assert!(parse_range("3..1").is_err());
        assert_eq!(parse_bidegree("0,-1").unwrap(), (0, -1));
        assert_eq!(parse_module("2,2,4", 8).unwrap().ambient_rank(), 3);
        assert!(parse_module("2,x", 8).is_err());
        assert!(matches!(parse_module("3", 4), Err(CliError::Algebra(tatebal::Error::NotAModule { .. }))));
    }
}
