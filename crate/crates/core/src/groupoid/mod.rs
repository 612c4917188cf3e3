//! Finite groupoids `[R ⇉ U]` with an indexed arrow pool.
//!
//! Objects are `0..object_count` and arrows `0..arrow_count`. Composition is
//! written `j ∘ i` ("first `i`, then `j`") and is defined when
//! `target(i) = source(j)`.

mod construct;
pub mod dump;
mod functor;

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::Serialize;
use thiserror::Error;

use crate::limits::Limits;
use crate::partition::Partition;

pub use construct::{
    action_groupoid, automorphism_group_at, classifying_groupoid, discrete_groupoid,
    disjoint_union, full_subgroupoid, skeleton, LoopGroup, Subgroupoid,
};
pub use functor::{are_equivalent, are_equivalent_with, Equivalence, GroupoidFunctor};

/// Marks an undefined composition in raw input.
pub const UNDEFINED: usize = usize::MAX;

/// Composable triples checked exhaustively up to this count, sampled above it.
const EXHAUSTIVE_TRIPLE_BUDGET: usize = 1_000_000;
const SAMPLED_TRIPLES: usize = 100_000;
const MAX_REPORTED_VIOLATIONS: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupoidError {
    #[error("malformed groupoid data: {0}")]
    Structure(String),
    #[error("groupoid with {arrows} arrows exceeds the cap {cap}")]
    TooLarge { arrows: usize, cap: usize },
    #[error("invalid functor: {}", .0.join("; "))]
    InvalidFunctor(Vec<String>),
    #[error("groupoid axioms fail: {}", join_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("cannot parse dump: {0}")]
    Parse(String),
}

fn join_violations(v: &[Violation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Axiom {
    IdentityEndpoint,
    InverseEndpoint,
    CompositionUndefined,
    CompositionRange,
    CompositionEndpoint,
    IdentityUnit,
    InverseLaw,
    Associativity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::IdentityEndpoint => "identity endpoint",
            Axiom::InverseEndpoint => "inverse endpoint",
            Axiom::CompositionUndefined => "composition undefined",
            Axiom::CompositionRange => "composition range",
            Axiom::CompositionEndpoint => "composition endpoint",
            Axiom::IdentityUnit => "identity unit",
            Axiom::InverseLaw => "inverse",
            Axiom::Associativity => "associativity",
        })
    }
}

/// A failed axiom with the indices that witness it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {:?}", self.axiom, self.witness)
    }
}

#[derive(Clone)]
pub struct FiniteGroupoid {
    object_count: usize,
    arrows: Vec<Arrow>,
    identity: Vec<usize>,
    inverse: Vec<usize>,
    /// Arrows leaving each object, ascending.
    out: Vec<Vec<usize>>,
    /// Position of each arrow within `out[source]`.
    out_pos: Vec<usize>,
    /// `compose[i][p] = out[target(i)][p] ∘ i`.
    compose: Vec<Vec<usize>>,
    hom: OnceLock<HashMap<(usize, usize), Vec<usize>>>,
}

impl fmt::Debug for FiniteGroupoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroupoid")
            .field("objects", &self.object_count)
            .field("arrows", &self.arrows.len())
            .finish()
    }
}

impl PartialEq for FiniteGroupoid {
    fn eq(&self, other: &Self) -> bool {
        self.object_count == other.object_count
            && self.arrows == other.arrows
            && self.identity == other.identity
            && self.inverse == other.inverse
            && self.compose == other.compose
    }
}

impl FiniteGroupoid {
    /// Assembles a groupoid from its structure maps without checking the axioms
    /// (use [`validate`](Self::validate) for that). Only index ranges needed to
    /// store the data are checked here. `compose(j, i)` is queried for every
    /// composable pair and may return `None` for an undefined entry.
    pub fn from_parts(
        object_count: usize,
        arrows: Vec<Arrow>,
        identity: Vec<usize>,
        inverse: Vec<usize>,
        mut compose: impl FnMut(usize, usize) -> Option<usize>,
    ) -> Result<Self, GroupoidError> {
        let cap = Limits::global().arrows;
        if arrows.len() > cap {
            return Err(GroupoidError::TooLarge {
                arrows: arrows.len(),
                cap,
            });
        }
        let m = arrows.len();
        let structure = |msg: String| Err(GroupoidError::Structure(msg));
        if let Some((i, a)) = arrows
            .iter()
            .enumerate()
            .find(|(_, a)| a.source >= object_count || a.target >= object_count)
        {
            return structure(format!("arrow {i} has endpoints {a:?} outside {object_count} objects"));
        }
        if identity.len() != object_count || identity.iter().any(|&e| e >= m) {
            return structure("identity map has the wrong length or range".into());
        }
        if inverse.len() != m || inverse.iter().any(|&e| e >= m) {
            return structure("inverse map has the wrong length or range".into());
        }
        let mut out = vec![Vec::new(); object_count];
        let mut out_pos = vec![0; m];
        for (i, a) in arrows.iter().enumerate() {
            out_pos[i] = out[a.source].len();
            out[a.source].push(i);
        }
        let compose_table = arrows
            .iter()
            .enumerate()
            .map(|(i, a)| {
                out[a.target]
                    .iter()
                    .map(|&j| compose(j, i).unwrap_or(UNDEFINED))
                    .collect()
            })
            .collect();
        Ok(FiniteGroupoid {
            object_count,
            arrows,
            identity,
            inverse,
            out,
            out_pos,
            compose: compose_table,
            hom: OnceLock::new(),
        })
    }

    /// Same as [`from_parts`](Self::from_parts) with composition given as
    /// `(j, i, j∘i)` triples.
    pub fn from_triples(
        object_count: usize,
        arrows: Vec<Arrow>,
        identity: Vec<usize>,
        inverse: Vec<usize>,
        triples: impl IntoIterator<Item = (usize, usize, usize)>,
    ) -> Result<Self, GroupoidError> {
        let table: HashMap<(usize, usize), usize> =
            triples.into_iter().map(|(j, i, k)| ((j, i), k)).collect();
        Self::from_parts(object_count, arrows, identity, inverse, |j, i| {
            table.get(&(j, i)).copied()
        })
    }

    /// Assembles and validates; used by the constructions in this crate.
    pub(crate) fn build(
        object_count: usize,
        arrows: Vec<Arrow>,
        identity: Vec<usize>,
        inverse: Vec<usize>,
        compose: impl FnMut(usize, usize) -> Option<usize>,
    ) -> Result<Self, GroupoidError> {
        let x = Self::from_parts(object_count, arrows, identity, inverse, compose)?;
        x.validate().map_err(GroupoidError::Invalid)?;
        Ok(x)
    }

    pub fn object_count(&self) -> usize {
        self.object_count
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    #[inline]
    pub fn source(&self, f: usize) -> usize {
        self.arrows[f].source
    }

    #[inline]
    pub fn target(&self, f: usize) -> usize {
        self.arrows[f].target
    }

    #[inline]
    pub fn identity(&self, x: usize) -> usize {
        self.identity[x]
    }

    #[inline]
    pub fn inverse(&self, f: usize) -> usize {
        self.inverse[f]
    }

    pub fn identities(&self) -> &[usize] {
        &self.identity
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inverse
    }

    /// Arrows with source `x`, ascending.
    pub fn out_arrows(&self, x: usize) -> &[usize] {
        &self.out[x]
    }

    /// Position of `f` within `out_arrows(source(f))`.
    pub fn out_position(&self, f: usize) -> usize {
        self.out_pos[f]
    }

    /// `j ∘ i`, or `None` when the pair is not composable or the entry is undefined.
    pub fn try_compose(&self, j: usize, i: usize) -> Option<usize> {
        if self.arrows[i].target != self.arrows[j].source {
            return None;
        }
        let k = self.compose[i][self.out_pos[j]];
        (k < self.arrows.len()).then_some(k)
    }

    /// `j ∘ i`. Panics unless `target(i) = source(j)`.
    #[inline]
    pub fn compose(&self, j: usize, i: usize) -> usize {
        debug_assert_eq!(self.arrows[i].target, self.arrows[j].source, "{j} ∘ {i}");
        self.compose[i][self.out_pos[j]]
    }

    /// Every `(j, i, j∘i)` triple, ordered by `i` then `j`.
    pub fn composition_triples(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.compose.iter().enumerate().flat_map(move |(i, row)| {
            let t = self.arrows[i].target;
            self.out[t].iter().zip(row).map(move |(&j, &k)| (j, i, k))
        })
    }

    fn hom_index(&self) -> &HashMap<(usize, usize), Vec<usize>> {
        self.hom.get_or_init(|| {
            let mut map: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
            for (f, a) in self.arrows.iter().enumerate() {
                map.entry((a.source, a.target)).or_default().push(f);
            }
            map
        })
    }

    /// `Hom(x, y)`, ascending. Materialised on first use.
    pub fn hom(&self, x: usize, y: usize) -> &[usize] {
        self.hom_index().get(&(x, y)).map_or(&[], Vec::as_slice)
    }

    /// Loops at `x`, ascending.
    pub fn loops(&self, x: usize) -> &[usize] {
        self.hom(x, x)
    }

    /// `|𝔛| = U/≅`: objects joined by at least one arrow.
    pub fn coarse_space(&self) -> Partition {
        Partition::from_pairs(
            self.object_count,
            self.arrows.iter().map(|a| (a.source, a.target)),
        )
    }

    fn composable_triple_count(&self) -> usize {
        self.arrows
            .iter()
            .map(|a| {
                self.out[a.target]
                    .iter()
                    .map(|&j| self.out[self.arrows[j].target].len())
                    .sum::<usize>()
            })
            .sum()
    }

    /// Checks the groupoid axioms, returning every violation found (up to a
    /// reporting cap). Associativity is exhaustive up to a budget of composable
    /// triples and sampled beyond it.
    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        let mut v = Vec::new();
        let push = |v: &mut Vec<Violation>, axiom, witness: Vec<usize>| {
            if v.len() < MAX_REPORTED_VIOLATIONS {
                v.push(Violation { axiom, witness });
            }
        };
        let m = self.arrows.len();

        for (x, &e) in self.identity.iter().enumerate() {
            if self.source(e) != x || self.target(e) != x {
                push(&mut v, Axiom::IdentityEndpoint, vec![x, e]);
            }
        }
        for f in 0..m {
            let g = self.inverse[f];
            if self.source(g) != self.target(f) || self.target(g) != self.source(f) {
                push(&mut v, Axiom::InverseEndpoint, vec![f, g]);
            }
        }
        for (j, i, k) in self.composition_triples() {
            if k == UNDEFINED {
                push(&mut v, Axiom::CompositionUndefined, vec![j, i]);
            } else if k >= m {
                push(&mut v, Axiom::CompositionRange, vec![j, i, k]);
            } else if self.source(k) != self.source(i) || self.target(k) != self.target(j) {
                push(&mut v, Axiom::CompositionEndpoint, vec![j, i, k]);
            }
        }
        if !v.is_empty() {
            // later checks rely on a total, well-typed composition
            return Err(v);
        }

        for f in 0..m {
            let left = self.identity[self.target(f)];
            let right = self.identity[self.source(f)];
            if self.compose(left, f) != f || self.compose(f, right) != f {
                push(&mut v, Axiom::IdentityUnit, vec![f]);
            }
            let g = self.inverse[f];
            if self.compose(g, f) != right || self.compose(f, g) != left {
                push(&mut v, Axiom::InverseLaw, vec![f, g]);
            }
        }

        let check = |f: usize, g: usize, h: usize, v: &mut Vec<Violation>| {
            let lhs = self.compose(h, self.compose(g, f));
            let rhs = self.compose(self.compose(h, g), f);
            if lhs != rhs {
                push(v, Axiom::Associativity, vec![h, g, f]);
            }
        };
        if self.composable_triple_count() <= EXHAUSTIVE_TRIPLE_BUDGET {
            for f in 0..m {
                for &g in &self.out[self.target(f)] {
                    for &h in &self.out[self.target(g)] {
                        check(f, g, h, &mut v);
                    }
                }
            }
        } else {
            let mut rng = SplitMix64::seed_from_u64(m as u64);
            let mut below = |n: usize| ((rng.next_u64() as u128 * n as u128) >> 64) as usize;
            for _ in 0..SAMPLED_TRIPLES {
                let f = below(m);
                let outs = &self.out[self.target(f)];
                let g = outs[below(outs.len())];
                let outs = &self.out[self.target(g)];
                let h = outs[below(outs.len())];
                check(f, g, h, &mut v);
            }
        }

        if v.is_empty() {
            Ok(())
        } else {
            Err(v)
        }
    }
}
