//! Finite groups given by exact Cayley tables.
//!
//! Elements are the dense indices `0..order`; the identity is always `0`.

mod auto;
mod build;
mod spec;

use std::fmt;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use thiserror::Error;

use crate::limits::MAX_REPRESENTABLE_ORDER;
use crate::partition::Partition;

pub use auto::{
    enumerate_involutive_automorphisms, enumerate_involutive_automorphisms_with, is_isomorphic,
    is_isomorphic_with, GroupAutomorphism, GroupInvolution,
};
pub use build::{cyclic, dihedral, direct_product, symmetric, trivial, unrank_permutation};
pub use spec::{make_group, make_group_with, parse_table, read_table_file, write_table};

/// Associativity is checked on every triple up to this order, sampled above it.
const EXHAUSTIVE_ASSOCIATIVITY_ORDER: usize = 64;
const SAMPLED_TRIPLES: usize = 100_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("cannot parse group spec {spec:?}: {reason}")]
    Parse { spec: String, reason: String },
    #[error("invalid Cayley table: {0}")]
    Validation(String),
    #[error("group order {order} exceeds the cap {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("group order {order} exceeds the enumeration cap {cap}")]
    EnumerationCap { order: usize, cap: usize },
    #[error("{map} is not an automorphism: {reason}")]
    NotAutomorphism { map: String, reason: String },
    #[error("element {0} is out of range")]
    ElementOutOfRange(usize),
    #[error("cannot read Cayley table file {path}: {reason}")]
    Io { path: String, reason: String },
}

/// A finite group with an exact multiplication table.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u16>,
    inverse: Vec<u16>,
    label: String,
    names: Vec<String>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("label", &self.label)
            .field("order", &self.order)
            .finish()
    }
}

impl FiniteGroup {
    /// Validates `table` (row-major, `table[a * n + b] = a·b`) and builds the group.
    ///
    /// The identity must sit at index 0.
    pub fn from_table(
        order: usize,
        table: Vec<usize>,
        label: impl Into<String>,
    ) -> Result<Self, GroupError> {
        if order == 0 {
            return Err(GroupError::Validation("a group has at least one element".into()));
        }
        if order > MAX_REPRESENTABLE_ORDER {
            return Err(GroupError::TooLarge {
                order,
                cap: MAX_REPRESENTABLE_ORDER,
            });
        }
        if table.len() != order * order {
            return Err(GroupError::Validation(format!(
                "expected {} entries, found {}",
                order * order,
                table.len()
            )));
        }
        if let Some((pos, &v)) = table.iter().enumerate().find(|(_, &v)| v >= order) {
            return Err(GroupError::Validation(format!(
                "entry {v} at ({}, {}) is not closed in [0, {order})",
                pos / order,
                pos % order
            )));
        }
        let table: Vec<u16> = table.into_iter().map(|v| v as u16).collect();
        let group = Self::assemble(order, table, label.into(), None)?;
        group.check_associativity()?;
        Ok(group)
    }

    /// Builds a group from a table that is already known to be a group table
    /// (identity row/column and inverses are still checked).
    pub(crate) fn trusted(
        order: usize,
        table: Vec<u16>,
        label: String,
        names: Vec<String>,
    ) -> Result<Self, GroupError> {
        let group = Self::assemble(order, table, label, Some(names))?;
        debug_assert!(group.check_associativity().is_ok());
        Ok(group)
    }

    fn assemble(
        order: usize,
        table: Vec<u16>,
        label: String,
        names: Option<Vec<String>>,
    ) -> Result<Self, GroupError> {
        for a in 0..order {
            if table[a] as usize != a || table[a * order] as usize != a {
                return Err(GroupError::Validation(format!(
                    "index 0 is not a two-sided identity (fails at {a})"
                )));
            }
        }
        let mut inverse = vec![u16::MAX; order];
        for a in 0..order {
            let row = &table[a * order..(a + 1) * order];
            let Some(b) = row.iter().position(|&v| v == 0) else {
                return Err(GroupError::Validation(format!("element {a} has no right inverse")));
            };
            if table[b * order + a] != 0 {
                return Err(GroupError::Validation(format!(
                    "right inverse {b} of {a} is not a left inverse"
                )));
            }
            inverse[a] = b as u16;
        }
        let names = names.unwrap_or_else(|| (0..order).map(|i| i.to_string()).collect());
        Ok(FiniteGroup {
            order,
            table,
            inverse,
            label,
            names,
        })
    }

    fn check_associativity(&self) -> Result<(), GroupError> {
        let n = self.order;
        let fail = |a, b, c| {
            Err(GroupError::Validation(format!(
                "associativity fails on ({a}, {b}, {c})"
            )))
        };
        if n <= EXHAUSTIVE_ASSOCIATIVITY_ORDER {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return fail(a, b, c);
                        }
                    }
                }
            }
        } else {
            let mut rng = SplitMix64::seed_from_u64(n as u64);
            let mut pick = || ((rng.next_u64() as u128 * n as u128) >> 64) as usize;
            for _ in 0..SAMPLED_TRIPLES {
                let (a, b, c) = (pick(), pick(), pick());
                if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                    return fail(a, b, c);
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub const fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// `a · b · a⁻¹`.
    pub fn conjugate(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.inv(a))
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Human-readable element name (cycle notation for symmetric groups).
    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Finds an element by its display name.
    pub fn element_named(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn check_element(&self, a: usize) -> Result<(), GroupError> {
        if a < self.order {
            Ok(())
        } else {
            Err(GroupError::ElementOutOfRange(a))
        }
    }

    /// Row-major copy of the Cayley table.
    pub fn table(&self) -> Vec<usize> {
        self.table.iter().map(|&v| v as usize).collect()
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        self.elements().map(|a| self.element_order(a)).collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        self.element_orders().into_iter().fold(1, lcm)
    }

    /// Orbits of the conjugation action, with minimal-index representatives.
    pub fn conjugacy_classes(&self) -> Partition {
        let gens = self.generating_set();
        Partition::from_pairs(
            self.order,
            self.elements()
                .flat_map(|x| gens.iter().map(move |&g| (x, g)))
                .map(|(x, g)| (x, self.conjugate(g, x))),
        )
    }

    /// Elements of the subgroup generated by `gens`, sorted ascending.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        (0..self.order).filter(|&i| seen[i]).collect()
    }

    /// A small generating set, chosen greedily by scanning elements in order of
    /// decreasing element order and keeping those outside the current span.
    pub fn generating_set(&self) -> Vec<usize> {
        let orders = self.element_orders();
        let mut by_order: Vec<usize> = (1..self.order).collect();
        by_order.sort_by(|&a, &b| orders[b].cmp(&orders[a]).then(a.cmp(&b)));
        let mut gens = Vec::new();
        let mut span = vec![false; self.order];
        span[0] = true;
        let mut covered = 1;
        for x in by_order {
            if covered == self.order {
                break;
            }
            if span[x] {
                continue;
            }
            gens.push(x);
            let elems = self.closure(&gens);
            covered = elems.len();
            for e in elems {
                span[e] = true;
            }
        }
        gens
    }

    /// `{h : h·x = x·h}` with its embedding.
    pub fn centralizer(&self, x: usize) -> Result<Subgroup, GroupError> {
        self.check_element(x)?;
        let elems: Vec<usize> = self
            .elements()
            .filter(|&h| self.mul(h, x) == self.mul(x, h))
            .collect();
        Subgroup::from_elements(self, elems, format!("C_{}({})", self.label, self.name(x)))
    }
}

/// A subgroup realised as a standalone group, together with the inclusion map.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub group: FiniteGroup,
    /// `embedding[i]` is the parent element corresponding to subgroup element `i`.
    pub embedding: Vec<usize>,
}

impl Subgroup {
    /// `elements` must contain the identity and be closed under multiplication.
    pub fn from_elements(
        parent: &FiniteGroup,
        mut elements: Vec<usize>,
        label: String,
    ) -> Result<Self, GroupError> {
        elements.sort_unstable();
        elements.dedup();
        if elements.first() != Some(&0) {
            return Err(GroupError::Validation("subgroup must contain the identity".into()));
        }
        let mut local = vec![usize::MAX; parent.order()];
        for (i, &e) in elements.iter().enumerate() {
            parent.check_element(e)?;
            local[e] = i;
        }
        let m = elements.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in &elements {
            for &b in &elements {
                let p = local[parent.mul(a, b)];
                if p == usize::MAX {
                    return Err(GroupError::Validation(format!(
                        "subset not closed: {}·{} leaves it",
                        parent.name(a),
                        parent.name(b)
                    )));
                }
                table.push(p as u16);
            }
        }
        let names = elements.iter().map(|&e| parent.name(e).to_string()).collect();
        let group = FiniteGroup::trusted(m, table, label, names)?;
        Ok(Subgroup {
            group,
            embedding: elements,
        })
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn contains(&self, parent_element: usize) -> bool {
        self.embedding.binary_search(&parent_element).is_ok()
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}
