//! Plain-text dump of a groupoid, optionally with an involution.
//!
//! ```text
//! objects <n> arrows <m>
//! <i> <source> <target> <inverse>        one line per arrow, i = 0..m
//! <j> <i> <k>                            k = j ∘ i, ordered by i then j
//! sigma_obj <σ(0)> <σ(1)> ...            optional
//! sigma_arr <σ(0)> <σ(1)> ...            optional
//! ```
//!
//! Identities are not written; on reading, the identity at `x` is the unique
//! idempotent loop at `x`. Writing a parsed dump reproduces it byte for byte.

use std::fmt::Write;

use super::{Arrow, FiniteGroupoid, GroupoidError};

/// A parsed dump: the groupoid and, if present, the involution maps.
#[derive(Clone, Debug)]
pub struct Dump {
    pub groupoid: FiniteGroupoid,
    pub sigma: Option<(Vec<usize>, Vec<usize>)>,
}

pub fn write_groupoid(x: &FiniteGroupoid) -> String {
    let mut out = format!("objects {} arrows {}\n", x.object_count(), x.arrow_count());
    for (i, a) in x.arrows().iter().enumerate() {
        writeln!(out, "{i} {} {} {}", a.source, a.target, x.inverse(i)).unwrap();
    }
    for (j, i, k) in x.composition_triples() {
        writeln!(out, "{j} {i} {k}").unwrap();
    }
    out
}

pub fn write_instance(x: &FiniteGroupoid, object_map: &[usize], arrow_map: &[usize]) -> String {
    let join = |v: &[usize]| {
        v.iter()
            .map(|k| format!(" {k}"))
            .collect::<String>()
    };
    let mut out = write_groupoid(x);
    writeln!(out, "sigma_obj{}", join(object_map)).unwrap();
    writeln!(out, "sigma_arr{}", join(arrow_map)).unwrap();
    out
}

fn numbers(line: &str, lineno: usize) -> Result<Vec<usize>, GroupoidError> {
    line.split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| GroupoidError::Parse(format!("line {lineno}: bad number {t:?}")))
        })
        .collect()
}

/// Parses a dump. The groupoid is assembled but not validated.
pub fn parse_dump(text: &str) -> Result<Dump, GroupoidError> {
    let err = |m: String| GroupoidError::Parse(m);
    let mut lines = text.lines().enumerate().map(|(k, l)| (k + 1, l.trim()));
    let (_, header) = lines.next().ok_or_else(|| err("empty dump".into()))?;
    let h: Vec<&str> = header.split_whitespace().collect();
    let (n, m) = match h.as_slice() {
        ["objects", n, "arrows", m] => (
            n.parse::<usize>().map_err(|_| err("bad object count".into()))?,
            m.parse::<usize>().map_err(|_| err("bad arrow count".into()))?,
        ),
        _ => return Err(err(format!("bad header {header:?}"))),
    };
    let mut arrows = Vec::with_capacity(m);
    let mut inverse = Vec::with_capacity(m);
    for i in 0..m {
        let (no, line) = lines
            .next()
            .ok_or_else(|| err(format!("missing line for arrow {i}")))?;
        match numbers(line, no)?.as_slice() {
            &[k, s, t, inv] if k == i => {
                arrows.push(Arrow { source: s, target: t });
                inverse.push(inv);
            }
            _ => return Err(err(format!("line {no}: expected \"{i} s t inv\""))),
        }
    }
    let mut triples = Vec::new();
    let mut sigma_obj = None;
    let mut sigma_arr = None;
    for (no, line) in lines {
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("sigma_obj") {
            sigma_obj = Some(numbers(rest, no)?);
        } else if let Some(rest) = line.strip_prefix("sigma_arr") {
            sigma_arr = Some(numbers(rest, no)?);
        } else {
            match numbers(line, no)?.as_slice() {
                &[j, i, k] if j < m && i < m => triples.push((j, i, k)),
                _ => return Err(err(format!("line {no}: expected \"j i k\""))),
            }
        }
    }
    let sigma = match (sigma_obj, sigma_arr) {
        (Some(o), Some(a)) => Some((o, a)),
        (None, None) => None,
        _ => return Err(err("sigma_obj and sigma_arr must appear together".into())),
    };
    let mut identity = vec![usize::MAX; n];
    for &(j, i, k) in &triples {
        if j == i && i == k && arrows[i].source == arrows[i].target && arrows[i].source < n {
            let x = arrows[i].source;
            if identity[x] != usize::MAX {
                return Err(err(format!("object {x} has two idempotent loops")));
            }
            identity[x] = i;
        }
    }
    if let Some(x) = identity.iter().position(|&e| e == usize::MAX) {
        return Err(err(format!("object {x} has no identity")));
    }
    let groupoid = FiniteGroupoid::from_triples(n, arrows, identity, inverse, triples)?;
    Ok(Dump { groupoid, sigma })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::GroupAction;
    use crate::group::make_group;
    use crate::groupoid::{action_groupoid, classifying_groupoid, discrete_groupoid};

    #[test]
    fn c2_golden() {
        let b = classifying_groupoid(&make_group("C2").unwrap());
        let text = write_groupoid(&b);
        assert_eq!(
            text,
            "objects 1 arrows 2\n0 0 0 0\n1 0 0 1\n0 0 0\n1 0 1\n0 1 1\n1 1 0\n"
        );
        let back = parse_dump(&text).unwrap();
        assert_eq!(back.groupoid, b);
        assert!(back.sigma.is_none());
    }

    #[test]
    fn round_trip_with_sigma() {
        let a = GroupAction::natural_symmetric(make_group("S3").unwrap(), 3).unwrap();
        let x = action_groupoid(&a).unwrap();
        let objs: Vec<usize> = (0..3).collect();
        let arrs: Vec<usize> = (0..x.arrow_count()).collect();
        let text = write_instance(&x, &objs, &arrs);
        let back = parse_dump(&text).unwrap();
        assert_eq!(back.groupoid, x);
        assert_eq!(back.sigma, Some((objs.clone(), arrs.clone())));
        assert_eq!(write_instance(&back.groupoid, &objs, &arrs), text);
        let empty = discrete_groupoid(0);
        assert_eq!(write_groupoid(&parse_dump(&write_groupoid(&empty)).unwrap().groupoid), "objects 0 arrows 0\n");
    }

    #[test]
    fn malformed() {
        for bad in [
            "",
            "objects 1\n",
            "objects 1 arrows 1\n",
            "objects 1 arrows 1\n0 0 0 0\n",
            "objects 1 arrows 1\n0 0 0 0\n0 0 0\nsigma_obj 0\n",
            "objects 1 arrows 1\n0 0 0 0\n0 0 x\n",
        ] {
            assert!(parse_dump(bad).is_err(), "{bad:?}");
        }
    }
}
