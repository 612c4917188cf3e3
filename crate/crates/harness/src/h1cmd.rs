//! The `h1` command: `H¹` of a single group with an involution.

use std::fmt::Write;

use involut_core::group::{enumerate_involutive_automorphisms, make_group, FiniteGroup, GroupInvolution};
use involut_core::h1::{fixed_subgroup, h1, sawin_report, z1, SawinReport};
use serde::Serialize;

use crate::HarnessError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct H1Class {
    pub representative: String,
    pub size: usize,
    pub fixed_subgroup_order: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct H1Report {
    pub group: String,
    pub involution: String,
    pub order: usize,
    pub cocycles: usize,
    pub classes: Vec<H1Class>,
    pub sawin: SawinReport,
}

impl H1Report {
    pub fn h1(&self) -> usize {
        self.classes.len()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let s = &self.sawin;
        writeln!(out, "group {} (order {}), involution {}", self.group, self.order, self.involution).unwrap();
        writeln!(out, "#Z1 = {}", self.cocycles).unwrap();
        writeln!(out, "#H1 = {}", self.h1()).unwrap();
        for c in &self.classes {
            writeln!(
                out,
                "  [{}] size {}, fixed subgroup order {}",
                c.representative, c.size, c.fixed_subgroup_order
            )
            .unwrap();
        }
        writeln!(
            out,
            "chain {} <= {} = {} <= {}: {}",
            s.h1, s.twisted_classes, s.stable_classes, s.conjugacy_classes, s.chain
        )
        .unwrap();
        writeln!(
            out,
            "stabilizer sum {}: twisted identity {}, stable identity {}",
            s.stabilizer_sum, s.twisted_identity, s.stable_identity
        )
        .unwrap();
        out
    }
}

/// Parses `trivial`, `inner:<element>` (a name or an index) or `index:<k>`,
/// the latter counting from zero in the enumeration order.
pub fn parse_involution(g: &FiniteGroup, spec: &str) -> Result<GroupInvolution, HarnessError> {
    let bad = || HarnessError::BadInvolution(spec.to_string());
    if spec == "trivial" {
        return Ok(GroupInvolution::trivial(g));
    }
    if let Some(name) = spec.strip_prefix("inner:") {
        let a = g
            .element_named(name)
            .or_else(|| name.parse().ok().filter(|&i| i < g.order()))
            .ok_or_else(bad)?;
        return Ok(GroupInvolution::inner(g, a)?);
    }
    if let Some(k) = spec.strip_prefix("index:") {
        let index: usize = k.parse().map_err(|_| bad())?;
        let all = enumerate_involutive_automorphisms(g)?;
        let count = all.len();
        return all
            .into_iter()
            .nth(index)
            .ok_or(HarnessError::InvolutionIndex { index, count });
    }
    Err(bad())
}

pub fn cmd_h1(group_spec: &str, involution_spec: &str) -> Result<H1Report, HarnessError> {
    let g = make_group(group_spec)?;
    let s = parse_involution(&g, involution_spec)?;
    let set = h1(&g, &s);
    let mut classes = Vec::with_capacity(set.len());
    for (k, &rep) in set.representatives.iter().enumerate() {
        classes.push(H1Class {
            representative: g.name(rep).to_string(),
            size: set.classes[k].len(),
            fixed_subgroup_order: fixed_subgroup(&g, &s, rep)?.order(),
        });
    }
    Ok(H1Report {
        group: group_spec.to_string(),
        involution: involution_spec.to_string(),
        order: g.order(),
        cocycles: z1(&g, &s).len(),
        classes,
        sawin: sawin_report(&g, &s),
    })
}
