//! Vendored reference data: known series fixtures, characteristic-degree
//! tables and Cartan matrices, in a line-oriented tab-separated format.
//!
//! Record format: `key<TAB>json-payload<TAB>citation[<TAB>note]`, one record
//! per line, UTF-8. A `manifest.tsv` carries an FNV-1a content hash per
//! file, checked on every load. Data is embedded in the binary; the
//! environment variable [`DATA_DIR_ENV`] overrides it with an on-disk
//! directory (which then must carry its own coherent manifest).
//!
//! Where the printed source of a record shows a visible typo, the record
//! keeps a `raw:` note spelling out exactly what was printed and how it was
//! read; corrections are never silent.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::weylgroups::{Family, GroupSpec};

/// Environment variable naming a directory that overrides the embedded
/// data files.
pub const DATA_DIR_ENV: &str = "COMSPACE_DATA_DIR";

const EMBEDDED: &[(&str, &str)] = &[
    ("fixtures.tsv", include_str!("../data/fixtures.tsv")),
    ("degrees.tsv", include_str!("../data/degrees.tsv")),
    ("cartan.tsv", include_str!("../data/cartan.tsv")),
    ("manifest.tsv", include_str!("../data/manifest.tsv")),
];

/// A series fixture: exact coefficient list as printed in the source table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureSeries {
    pub key: String,
    pub coefficients: Vec<u64>,
    pub source: String,
    pub note: Option<String>,
}

/// A Cartan matrix record for an exceptional label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanSpec {
    pub label: String,
    pub matrix: Vec<Vec<i64>>,
}

fn read_file(name: &str) -> Result<String> {
    if let Ok(dir) = std::env::var(DATA_DIR_ENV) {
        let path = std::path::Path::new(&dir).join(name);
        return std::fs::read_to_string(&path).map_err(|e| {
            Error::ValidationFailure(format!("cannot read {}: {}", path.display(), e))
        });
    }
    EMBEDDED
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, c)| c.to_string())
        .ok_or_else(|| Error::UnknownKey(name.to_string()))
}

/// FNV-1a 64-bit content hash, used by the integrity manifest.
pub fn content_hash(data: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in data {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

fn checked_file(name: &str) -> Result<String> {
    let manifest = read_file("manifest.tsv")?;
    let content = read_file(name)?;
    let expect = manifest
        .lines()
        .filter(|l| !l.is_empty())
        .map(|l| l.split('\t').collect::<Vec<_>>())
        .find(|fields| fields.first() == Some(&name))
        .ok_or_else(|| {
            Error::ValidationFailure(format!("manifest has no entry for {}", name))
        })?;
    let expect_hash = expect
        .get(1)
        .and_then(|h| u64::from_str_radix(h, 16).ok())
        .ok_or_else(|| {
            Error::ValidationFailure(format!("manifest entry for {} is malformed", name))
        })?;
    let got = content_hash(content.as_bytes());
    if got != expect_hash {
        return Err(Error::ValidationFailure(format!(
            "integrity check failed for {}: manifest {:016x}, file {:016x}",
            name, expect_hash, got
        )));
    }
    Ok(content)
}

fn split_record(line: &str) -> Vec<&str> {
    line.split('\t').collect()
}

fn parse_fixture_line(line: &str) -> Result<FixtureSeries> {
    let fields = split_record(line);
    if fields.len() < 3 {
        return Err(Error::ValidationFailure(format!(
            "fixture record needs at least 3 fields: {:?}",
            line
        )));
    }
    let coefficients: Vec<i64> = serde_json::from_str(fields[1]).map_err(|e| {
        Error::ValidationFailure(format!("fixture {}: bad coefficient array: {}", fields[0], e))
    })?;
    if coefficients.iter().any(|&c| c < 0) {
        return Err(Error::ValidationFailure(format!(
            "fixture {}: negative coefficient",
            fields[0]
        )));
    }
    let coefficients: Vec<u64> = coefficients.into_iter().map(|c| c as u64).collect();
    if coefficients.first() != Some(&1) {
        return Err(Error::ValidationFailure(format!(
            "fixture {}: constant term must be 1",
            fields[0]
        )));
    }
    Ok(FixtureSeries {
        key: fields[0].to_string(),
        coefficients,
        source: fields[2].to_string(),
        note: fields.get(3).map(|s| s.to_string()),
    })
}

pub fn load_fixtures() -> Result<Vec<FixtureSeries>> {
    checked_file("fixtures.tsv")?
        .lines()
        .filter(|l| !l.is_empty())
        .map(parse_fixture_line)
        .collect()
}

/// Fixture by key, e.g. `SU2/m2` or `G2/m2`.
pub fn load_fixture(key: &str) -> Result<FixtureSeries> {
    load_fixtures()?
        .into_iter()
        .find(|f| f.key == key)
        .ok_or_else(|| Error::UnknownKey(key.to_string()))
}

/// Serialize fixture records back to the on-disk format; `parse ∘
/// serialize` is the identity on parsed records and `serialize ∘ parse` is
/// the identity on well-formed files.
pub fn serialize_fixtures(records: &[FixtureSeries]) -> String {
    let mut out = String::new();
    for r in records {
        let arr = serde_json::to_string(&r.coefficients).expect("serializable");
        out.push_str(&r.key);
        out.push('\t');
        out.push_str(&arr);
        out.push('\t');
        out.push_str(&r.source);
        if let Some(note) = &r.note {
            out.push('\t');
            out.push_str(note);
        }
        out.push('\n');
    }
    out
}

/// Characteristic degrees. Classical families are rank-parameterized and
/// computed; exceptional labels come from the vendored table, which is
/// validated against `|W| = prod d_i`.
pub fn load_degrees(spec: &GroupSpec) -> Result<Vec<u32>> {
    let n = spec.rank_param;
    match spec.family {
        Family::U => Ok((1..=n).collect()),
        Family::SU => Ok((2..=n).collect()),
        Family::Sp | Family::SOOdd => Ok((1..=n).map(|i| 2 * i).collect()),
        Family::SOEven => {
            if n == 1 {
                Ok(vec![1])
            } else {
                let mut ds: Vec<u32> = (1..n).map(|i| 2 * i).collect();
                ds.push(n);
                Ok(ds)
            }
        }
        _ => {
            let label = spec.family.exceptional_label().unwrap();
            let content = checked_file("degrees.tsv")?;
            for line in content.lines().filter(|l| !l.is_empty()) {
                let fields = split_record(line);
                if fields.first() != Some(&label) {
                    continue;
                }
                let ds: Vec<u32> = serde_json::from_str(fields[1]).map_err(|e| {
                    Error::ValidationFailure(format!("degrees {}: {}", label, e))
                })?;
                let order: BigUint = fields[2].parse().map_err(|_| {
                    Error::ValidationFailure(format!("degrees {}: bad order", label))
                })?;
                let prod = ds
                    .iter()
                    .fold(BigUint::one(), |acc, &d| acc * BigUint::from(d));
                if prod != order {
                    return Err(Error::ValidationFailure(format!(
                        "degrees {}: prod(d_i) = {} but |W| = {}",
                        label, prod, order
                    )));
                }
                return Ok(ds);
            }
            Err(Error::UnknownKey(label.to_string()))
        }
    }
}

/// Cartan matrix for an exceptional label.
pub fn load_cartan(label: &str) -> Result<CartanSpec> {
    let content = checked_file("cartan.tsv")?;
    for line in content.lines().filter(|l| !l.is_empty()) {
        let fields = split_record(line);
        if fields.first() != Some(&label) {
            continue;
        }
        let matrix: Vec<Vec<i64>> = serde_json::from_str(fields[1])
            .map_err(|e| Error::ValidationFailure(format!("cartan {}: {}", label, e)))?;
        let n = matrix.len();
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return Err(Error::ValidationFailure(format!(
                    "cartan {}: not square",
                    label
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                let ok = if i == j { v == 2 } else { v <= 0 };
                if !ok {
                    return Err(Error::ValidationFailure(format!(
                        "cartan {}: entry ({}, {}) = {} violates Cartan axioms",
                        label, i, j, v
                    )));
                }
                if i != j && (v == 0) != (matrix[j][i] == 0) {
                    return Err(Error::ValidationFailure(format!(
                        "cartan {}: zero pattern not symmetric at ({}, {})",
                        label, i, j
                    )));
                }
            }
        }
        return Ok(CartanSpec {
            label: label.to_string(),
            matrix,
        });
    }
    Err(Error::UnknownKey(label.to_string()))
}

/// Parse a JSON integer array; the CLI emits coefficient arrays in exactly
/// this shape, so its output round-trips through here.
pub fn parse_coeff_array(s: &str) -> Result<Vec<u64>> {
    let v: Vec<i64> = serde_json::from_str(s)
        .map_err(|e| Error::ValidationFailure(format!("bad coefficient array: {}", e)))?;
    if v.iter().any(|&c| c < 0) {
        return Err(Error::ValidationFailure(
            "coefficient array has negative entries".into(),
        ));
    }
    Ok(v.into_iter().map(|c| c as u64).collect())
}
