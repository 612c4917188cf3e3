//! Poincaré series of small groups, keyed by isomorphism type.
//!
//! One entry per line: `label | num: c0 c1 … | den: c0 c1 …`, where the label
//! is a group spec and coefficients are integers or `p/q`. Blank lines and
//! lines starting with `#` are ignored.

use std::fs;
use std::path::Path;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use super::{evaluate_at_one, PoincareError, Polynomial, RationalFunction};
use crate::group::{is_isomorphic, make_group, FiniteGroup, GroupInvolution};
use crate::h1::{fixed_subgroup, h1};

const BUILTIN: &str = include_str!("catalog.txt");

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub label: String,
    pub group: FiniteGroup,
    pub num: Polynomial,
    pub den: Polynomial,
}

impl CatalogEntry {
    pub fn function(&self) -> Result<RationalFunction, PoincareError> {
        RationalFunction::new(self.num.clone(), self.den.clone())
    }
}

#[derive(Clone, Debug)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

fn parse_coeffs(s: &str, line: usize) -> Result<Polynomial, PoincareError> {
    let coeffs = s
        .split_whitespace()
        .map(|t| {
            t.parse::<BigRational>().map_err(|_| PoincareError::Catalog {
                line,
                reason: format!("bad coefficient {t:?}"),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    if coeffs.is_empty() {
        return Err(PoincareError::Catalog {
            line,
            reason: "no coefficients".into(),
        });
    }
    Ok(Polynomial::new(coeffs))
}

impl Catalog {
    /// The entries shipped with the library.
    pub fn builtin() -> Self {
        Self::parse(BUILTIN).expect("built-in catalog parses")
    }

    pub fn from_file(path: &Path) -> Result<Self, PoincareError> {
        let text = fs::read_to_string(path).map_err(|e| PoincareError::Io {
            path: path.display().to_string(),
            reason: e.to_string(),
        })?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, PoincareError> {
        let mut entries = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let bad = |reason: String| PoincareError::Catalog { line, reason };
            let fields: Vec<&str> = trimmed.split('|').map(str::trim).collect();
            let [label, num, den] = fields.as_slice() else {
                return Err(bad("expected `label | num: … | den: …`".into()));
            };
            let num = num
                .strip_prefix("num:")
                .ok_or_else(|| bad("second field must start with `num:`".into()))?;
            let den = den
                .strip_prefix("den:")
                .ok_or_else(|| bad("third field must start with `den:`".into()))?;
            let group = make_group(label).map_err(|e| bad(e.to_string()))?;
            let entry = CatalogEntry {
                label: label.to_string(),
                group,
                num: parse_coeffs(num, line)?,
                den: parse_coeffs(den, line)?,
            };
            if entry.den.is_zero() {
                return Err(bad("zero denominator".into()));
            }
            entries.push(entry);
        }
        Ok(Catalog { entries })
    }

    /// Serialises in the file format; parsing the output gives the same catalog.
    pub fn to_text(&self) -> String {
        self.entries
            .iter()
            .map(|e| format!("{} | num: {} | den: {}\n", e.label, e.num.to_tokens(), e.den.to_tokens()))
            .collect()
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn extend(&mut self, other: Catalog) {
        self.entries.extend(other.entries);
    }

    /// The first entry whose group is isomorphic to `g`.
    pub fn lookup_entry(&self, g: &FiniteGroup) -> Result<&CatalogEntry, PoincareError> {
        for e in &self.entries {
            if is_isomorphic(&e.group, g)? {
                return Ok(e);
            }
        }
        Err(PoincareError::NotInCatalog {
            label: g.label().to_string(),
        })
    }

    pub fn lookup(&self, g: &FiniteGroup) -> Result<RationalFunction, PoincareError> {
        self.lookup_entry(g)?.function()
    }
}

fn as_string<S: Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RatioRow {
    pub representative: String,
    pub fixed_subgroup: String,
    /// Catalog label the fixed subgroup matched.
    pub catalog_key: String,
    #[serde(serialize_with = "as_string")]
    pub ratio: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct H1RatioSum {
    #[serde(serialize_with = "as_string")]
    pub total: BigRational,
    pub rows: Vec<RatioRow>,
}

/// `Σ_[γ] P_{Γ^{σ_γ}}(1) / P_Γ(1)` over the classes of `H¹`, each ratio
/// evaluated after cancelling its poles at `t = 1`.
pub fn sum_h1_ratios(
    g: &FiniteGroup,
    s: &GroupInvolution,
    catalog: &Catalog,
) -> Result<H1RatioSum, PoincareError> {
    let p = catalog.lookup(g)?;
    let classes = h1(g, s);
    let mut rows = Vec::with_capacity(classes.len());
    let mut total = BigRational::zero();
    for &gamma in &classes.representatives {
        let sub = fixed_subgroup(g, s, gamma)?;
        let entry = catalog.lookup_entry(&sub.group)?;
        let ratio_fn = entry.function()?.div(&p)?;
        let ratio = evaluate_at_one(&ratio_fn).map_err(|e| match e {
            PoincareError::PoleAtOne { order } => PoincareError::RatioPole {
                class: g.name(gamma).to_string(),
                order,
            },
            other => other,
        })?;
        total += &ratio;
        rows.push(RatioRow {
            representative: g.name(gamma).to_string(),
            fixed_subgroup: sub.group.label().to_string(),
            catalog_key: entry.label.clone(),
            ratio,
        });
    }
    Ok(H1RatioSum { total, rows })
}
