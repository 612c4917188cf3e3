//! The group-spec mini-language and the Cayley-table text format.
//!
//! ```text
//! atom := "C" n | "S" n | "D" m        cyclic, symmetric (n <= 7), dihedral of order m
//! expr := atom ("x" atom)*             direct product, left to right
//!       | "table:" path               explicit Cayley table file
//! ```
//!
//! A Cayley table file holds the order `n` on its first line followed by `n`
//! lines of `n` whitespace-separated element indices; index 0 is the identity.

use std::fs;
use std::path::Path;

use super::build::{cyclic, dihedral, direct_product, symmetric};
use super::{FiniteGroup, GroupError};
use crate::limits::Limits;

const MAX_SYMMETRIC_DEGREE: usize = 7;

enum Atom {
    Cyclic(usize),
    Symmetric(usize),
    Dihedral(usize),
}

impl Atom {
    fn order(&self) -> usize {
        match *self {
            Atom::Cyclic(n) | Atom::Dihedral(n) => n,
            Atom::Symmetric(n) => (1..=n).product(),
        }
    }

    fn build(&self) -> Result<FiniteGroup, GroupError> {
        match *self {
            Atom::Cyclic(n) => cyclic(n),
            Atom::Symmetric(n) => symmetric(n),
            Atom::Dihedral(n) => dihedral(n),
        }
    }
}

/// Parses and builds a group under the process-wide caps.
pub fn make_group(spec: &str) -> Result<FiniteGroup, GroupError> {
    make_group_with(spec, Limits::global())
}

pub fn make_group_with(spec: &str, limits: &Limits) -> Result<FiniteGroup, GroupError> {
    let trimmed = spec.trim();
    if let Some(path) = trimmed.strip_prefix("table:") {
        let group = read_table_file(Path::new(path.trim()))?.with_label(trimmed);
        if group.order() > limits.group_order {
            return Err(GroupError::TooLarge {
                order: group.order(),
                cap: limits.group_order,
            });
        }
        return Ok(group);
    }
    let canonical: String = trimmed.chars().filter(|c| !c.is_whitespace()).collect();
    let parse_err = |reason: String| GroupError::Parse {
        spec: spec.to_string(),
        reason,
    };
    if canonical.is_empty() {
        return Err(parse_err("empty spec".into()));
    }
    let atoms = canonical
        .split('x')
        .map(|tok| parse_atom(tok).map_err(&parse_err))
        .collect::<Result<Vec<_>, _>>()?;
    let order = atoms
        .iter()
        .try_fold(1usize, |acc, a| acc.checked_mul(a.order()))
        .unwrap_or(usize::MAX);
    if order > limits.group_order {
        return Err(GroupError::TooLarge {
            order,
            cap: limits.group_order,
        });
    }
    let mut group = atoms[0].build()?;
    for atom in &atoms[1..] {
        group = direct_product(&group, &atom.build()?)?;
    }
    Ok(group.with_label(canonical))
}

fn parse_atom(tok: &str) -> Result<Atom, String> {
    let mut chars = tok.chars();
    let kind = chars.next().ok_or_else(|| "empty factor".to_string())?;
    let digits = chars.as_str();
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return Err(format!("factor {tok:?} must be a letter followed by a number"));
    }
    let n: usize = digits
        .parse()
        .map_err(|_| format!("number in {tok:?} is too large"))?;
    if n == 0 {
        return Err(format!("factor {tok:?} has size 0"));
    }
    match kind {
        'C' => Ok(Atom::Cyclic(n)),
        'S' if n <= MAX_SYMMETRIC_DEGREE => Ok(Atom::Symmetric(n)),
        'S' => Err(format!("symmetric degree {n} exceeds {MAX_SYMMETRIC_DEGREE}")),
        'D' if n.is_multiple_of(2) => Ok(Atom::Dihedral(n)),
        'D' => Err(format!("dihedral order {n} must be even")),
        other => Err(format!("unknown group family {other:?}")),
    }
}

/// Parses Cayley-table text.
pub fn parse_table(text: &str, label: &str) -> Result<FiniteGroup, GroupError> {
    let bad = |reason: String| GroupError::Validation(reason);
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| bad("empty table file".into()))?;
    let n: usize = header
        .trim()
        .parse()
        .map_err(|_| bad(format!("first line must be the order, found {header:?}")))?;
    let mut table = Vec::with_capacity(n * n);
    for row in 0..n {
        let line = lines
            .next()
            .ok_or_else(|| bad(format!("missing row {row}")))?;
        let before = table.len();
        for tok in line.split_whitespace() {
            table.push(
                tok.parse::<usize>()
                    .map_err(|_| bad(format!("row {row}: bad entry {tok:?}")))?,
            );
        }
        if table.len() - before != n {
            return Err(bad(format!(
                "row {row} has {} entries, expected {n}",
                table.len() - before
            )));
        }
    }
    if lines.next().is_some() {
        return Err(bad("trailing content after the table".into()));
    }
    FiniteGroup::from_table(n, table, label)
}

pub fn read_table_file(path: &Path) -> Result<FiniteGroup, GroupError> {
    let text = fs::read_to_string(path).map_err(|e| GroupError::Io {
        path: path.display().to_string(),
        reason: e.to_string(),
    })?;
    parse_table(&text, &format!("table:{}", path.display()))
}

/// Serialises the table in the file format above.
pub fn write_table(group: &FiniteGroup) -> String {
    let n = group.order();
    let mut out = format!("{n}\n");
    for a in 0..n {
        let row: Vec<String> = (0..n).map(|b| group.mul(a, b).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_atoms_and_products() {
        assert_eq!(make_group("S4").unwrap().order(), 24);
        let v = make_group("C2xC2").unwrap();
        assert_eq!((v.order(), v.label()), (4, "C2xC2"));
        assert_eq!(make_group(" C2 x S3 ").unwrap().order(), 12);
        assert_eq!(make_group("C1").unwrap().order(), 1);
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "S8", "D7", "Q8", "C", "C2x", "xC2", "C-1", "C0", "C2*C3"] {
            assert!(
                matches!(make_group(bad), Err(GroupError::Parse { .. })),
                "{bad:?} should not parse"
            );
        }
    }

    #[test]
    fn order_cap() {
        let limits = Limits {
            group_order: 100,
            ..Limits::default()
        };
        assert!(matches!(
            make_group_with("S5", &limits),
            Err(GroupError::TooLarge { order: 120, cap: 100 })
        ));
        assert!(matches!(
            make_group("C100xC101"),
            Err(GroupError::TooLarge { .. })
        ));
    }

    #[test]
    fn table_round_trip() {
        let g = make_group("D6").unwrap();
        let text = write_table(&g);
        assert!(text.starts_with("6\n0 1 2 3 4 5\n"));
        let back = parse_table(&text, "x").unwrap();
        assert_eq!(back.table(), g.table());
        assert_eq!(write_table(&back), text);
    }

    #[test]
    fn table_file_spec() {
        let dir = std::env::temp_dir().join(format!("involut-table-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("c3.txt");
        fs::write(&path, "3\n0 1 2\n1 2 0\n2 0 1\n").unwrap();
        let g = make_group(&format!("table:{}", path.display())).unwrap();
        assert_eq!(g.order(), 3);
        assert!(g.label().starts_with("table:"));
        fs::write(&path, "2\n0 1\n1 1\n").unwrap();
        assert!(matches!(
            make_group(&format!("table:{}", path.display())),
            Err(GroupError::Validation(_))
        ));
        assert!(matches!(
            make_group(&format!("table:{}", dir.join("missing").display())),
            Err(GroupError::Io { .. })
        ));
        fs::remove_dir_all(&dir).ok();
    }
}
