//! Left actions of a finite group on a finite set.

use thiserror::Error;

use crate::group::{unrank_permutation, FiniteGroup, GroupError, Subgroup};
use crate::partition::Partition;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ActionError {
    #[error("{g}·{x} = {value} is not a point of a {points}-point set")]
    OutOfRange {
        g: usize,
        x: usize,
        value: usize,
        points: usize,
    },
    #[error("the identity moves point {x}")]
    IdentityMoves { x: usize },
    #[error("(g·h)·x ≠ g·(h·x) for g = {g}, h = {h}, x = {x}")]
    NotCompatible { g: usize, h: usize, x: usize },
    #[error("actions in a disjoint union must share the acting group")]
    GroupMismatch,
    #[error("point {0} is out of range")]
    PointOutOfRange(usize),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A validated left action `Γ × X → X`, stored as a table indexed by
/// `g * points + x`.
#[derive(Clone, Debug)]
pub struct GroupAction {
    group: FiniteGroup,
    points: usize,
    table: Vec<usize>,
}

impl GroupAction {
    pub fn new(
        group: FiniteGroup,
        points: usize,
        act: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, ActionError> {
        let table = group
            .elements()
            .flat_map(|g| (0..points).map(move |x| (g, x)))
            .map(|(g, x)| act(g, x))
            .collect();
        Self::from_table(group, points, table)
    }

    pub fn from_table(
        group: FiniteGroup,
        points: usize,
        table: Vec<usize>,
    ) -> Result<Self, ActionError> {
        assert_eq!(table.len(), group.order() * points, "action table size");
        for g in group.elements() {
            for x in 0..points {
                let value = table[g * points + x];
                if value >= points {
                    return Err(ActionError::OutOfRange { g, x, value, points });
                }
            }
        }
        if let Some(x) = (0..points).find(|&x| table[x] != x) {
            return Err(ActionError::IdentityMoves { x });
        }
        for g in group.elements() {
            for h in group.elements() {
                let gh = group.mul(g, h);
                for x in 0..points {
                    if table[gh * points + x] != table[g * points + table[h * points + x]] {
                        return Err(ActionError::NotCompatible { g, h, x });
                    }
                }
            }
        }
        Ok(GroupAction {
            group,
            points,
            table,
        })
    }

    /// Γ acting trivially on `points` points.
    pub fn trivial(group: FiniteGroup, points: usize) -> Self {
        GroupAction::new(group, points, |_, x| x).expect("trivial action")
    }

    /// Left translation of Γ on itself.
    pub fn regular(group: FiniteGroup) -> Self {
        let n = group.order();
        let table = group
            .elements()
            .flat_map(|g| (0..n).map(move |x| (g, x)))
            .map(|(g, x)| group.mul(g, x))
            .collect();
        GroupAction {
            group,
            points: n,
            table,
        }
    }

    /// Γ acting on the left cosets `aH`, numbered by their minimal element.
    pub fn on_cosets(group: FiniteGroup, subgroup: &Subgroup) -> Self {
        let n = group.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut count = 0;
        for a in group.elements() {
            if coset_of[a] != usize::MAX {
                continue;
            }
            for &h in &subgroup.embedding {
                coset_of[group.mul(a, h)] = count;
            }
            count += 1;
        }
        let mut rep = vec![0; count];
        for a in (0..n).rev() {
            rep[coset_of[a]] = a;
        }
        let table = group
            .elements()
            .flat_map(|g| (0..count).map(move |c| (g, c)))
            .map(|(g, c)| coset_of[group.mul(g, rep[c])])
            .collect();
        GroupAction {
            group,
            points: count,
            table,
        }
    }

    /// `S_n` permuting `0..n`.
    pub fn natural_symmetric(group: FiniteGroup, degree: usize) -> Result<Self, ActionError> {
        let perms: Vec<Vec<usize>> = group
            .elements()
            .map(|g| unrank_permutation(degree, g))
            .collect();
        GroupAction::new(group, degree, |g, x| perms[g][x])
    }

    /// Disjoint union of actions of the same group; points are offset in order.
    pub fn disjoint_union(parts: &[GroupAction]) -> Result<Self, ActionError> {
        let Some(first) = parts.first() else {
            return Err(ActionError::GroupMismatch);
        };
        if parts.iter().any(|p| p.group != first.group) {
            return Err(ActionError::GroupMismatch);
        }
        let points: usize = parts.iter().map(|p| p.points).sum();
        let mut table = Vec::with_capacity(first.group.order() * points);
        for g in first.group.elements() {
            let mut offset = 0;
            for p in parts {
                table.extend((0..p.points).map(|x| p.act(g, x) + offset));
                offset += p.points;
            }
        }
        Ok(GroupAction {
            group: first.group.clone(),
            points,
            table,
        })
    }

    #[inline]
    pub fn act(&self, g: usize, x: usize) -> usize {
        self.table[g * self.points + x]
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn orbits(&self) -> Partition {
        let gens = self.group.generating_set();
        Partition::from_pairs(
            self.points,
            (0..self.points).flat_map(|x| gens.iter().map(move |&g| (x, self.act(g, x)))),
        )
    }

    /// `Stab_Γ(x)` with its embedding into Γ.
    pub fn stabilizer(&self, x: usize) -> Result<Subgroup, ActionError> {
        if x >= self.points {
            return Err(ActionError::PointOutOfRange(x));
        }
        let elems = self
            .group
            .elements()
            .filter(|&g| self.act(g, x) == x)
            .collect();
        Ok(Subgroup::from_elements(
            &self.group,
            elems,
            format!("Stab({x})"),
        )?)
    }
}
