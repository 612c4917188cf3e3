//! Involutions on finite groupoids and the groupoids built from them.

mod family;
mod fibers;
mod lifted;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::action::{ActionError, GroupAction};
use crate::group::{GroupError, GroupInvolution};
use crate::groupoid::{FiniteGroupoid, GroupoidError};
use crate::h1::H1Error;

pub use family::{family_h1, FamilyClass, FamilyH1, FiniteGroupFamily};
pub use fibers::{
    fixed_decomposition_check, fixed_functor, h1_fiber, h1_fiber_with, inertia_fiber, smith_thom_check,
    DecompositionReport, DecompositionRow, FixedFunctor, H1Fiber, InertiaFiber, SmithThomRecord,
};
pub use lifted::{fixed_class_count_direct, fixed_groupoid, inertia_groupoid, PairGroupoid};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvolutionError {
    #[error("expected maps on {expected_objects} objects and {expected_arrows} arrows, got {objects} and {arrows}")]
    Arity {
        expected_objects: usize,
        expected_arrows: usize,
        objects: usize,
        arrows: usize,
    },
    #[error("involution is not compatible with the groupoid: {}", join(.0))]
    Incompatible(Vec<InvolutionViolation>),
    #[error("σ_X(g·x) ≠ σ_Γ(g)·σ_X(x) at g = {g}, x = {x}")]
    NotEquivariantAction { g: usize, x: usize },
    #[error("functor does not commute with the involutions at {kind} {index}")]
    NotEquivariantFunctor { kind: &'static str, index: usize },
    #[error("{0}")]
    Precondition(String),
    #[error("internal consistency failure: {0}")]
    Bug(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Groupoid(#[from] GroupoidError),
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error(transparent)]
    H1(#[from] H1Error),
}

fn join(v: &[InvolutionViolation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Compatibility {
    Range,
    Involutive,
    Source,
    Target,
    Identity,
    Inverse,
    Composition,
}

impl fmt::Display for Compatibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Compatibility::Range => "range",
            Compatibility::Involutive => "involutivity",
            Compatibility::Source => "s-compatibility",
            Compatibility::Target => "t-compatibility",
            Compatibility::Identity => "e-compatibility",
            Compatibility::Inverse => "i-compatibility",
            Compatibility::Composition => "c-compatibility",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvolutionViolation {
    pub kind: Compatibility,
    /// Object or arrow indices (arrow pairs for composition).
    pub witness: Vec<usize>,
}

impl fmt::Display for InvolutionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {:?}", self.kind, self.witness)
    }
}

/// A validated involutive automorphism of a groupoid. The maps are stored on
/// their own; pass the groupoid they were validated against alongside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupoidInvolution {
    object_map: Vec<usize>,
    arrow_map: Vec<usize>,
}

const MAX_REPORTED: usize = 64;

/// Validates `σ` eagerly: arity, range, involutivity, then compatibility with
/// source, target, identity, inverse and composition.
pub fn make_involution(
    x: &FiniteGroupoid,
    object_map: Vec<usize>,
    arrow_map: Vec<usize>,
) -> Result<GroupoidInvolution, InvolutionError> {
    let (n, m) = (x.object_count(), x.arrow_count());
    if object_map.len() != n || arrow_map.len() != m {
        return Err(InvolutionError::Arity {
            expected_objects: n,
            expected_arrows: m,
            objects: object_map.len(),
            arrows: arrow_map.len(),
        });
    }
    let mut v = Vec::new();
    let push = |v: &mut Vec<InvolutionViolation>, kind, witness| {
        if v.len() < MAX_REPORTED {
            v.push(InvolutionViolation { kind, witness });
        }
    };
    for (k, &y) in object_map.iter().enumerate().filter(|(_, &y)| y >= n) {
        push(&mut v, Compatibility::Range, vec![k, y]);
    }
    for (k, &y) in arrow_map.iter().enumerate().filter(|(_, &y)| y >= m) {
        push(&mut v, Compatibility::Range, vec![k, y]);
    }
    if !v.is_empty() {
        return Err(InvolutionError::Incompatible(v));
    }
    for o in 0..n {
        if object_map[object_map[o]] != o {
            push(&mut v, Compatibility::Involutive, vec![o]);
        }
    }
    for f in 0..m {
        if arrow_map[arrow_map[f]] != f {
            push(&mut v, Compatibility::Involutive, vec![f]);
        }
    }
    for f in 0..m {
        let g = arrow_map[f];
        if x.source(g) != object_map[x.source(f)] {
            push(&mut v, Compatibility::Source, vec![f]);
        }
        if x.target(g) != object_map[x.target(f)] {
            push(&mut v, Compatibility::Target, vec![f]);
        }
    }
    for o in 0..n {
        if arrow_map[x.identity(o)] != x.identity(object_map[o]) {
            push(&mut v, Compatibility::Identity, vec![o]);
        }
    }
    if !v.is_empty() {
        return Err(InvolutionError::Incompatible(v));
    }
    for f in 0..m {
        if arrow_map[x.inverse(f)] != x.inverse(arrow_map[f]) {
            push(&mut v, Compatibility::Inverse, vec![f]);
        }
    }
    for (j, i, k) in x.composition_triples() {
        if x.compose(arrow_map[j], arrow_map[i]) != arrow_map[k] {
            push(&mut v, Compatibility::Composition, vec![j, i]);
        }
    }
    if !v.is_empty() {
        return Err(InvolutionError::Incompatible(v));
    }
    Ok(GroupoidInvolution {
        object_map,
        arrow_map,
    })
}

impl GroupoidInvolution {
    pub fn trivial(x: &FiniteGroupoid) -> Self {
        GroupoidInvolution {
            object_map: (0..x.object_count()).collect(),
            arrow_map: (0..x.arrow_count()).collect(),
        }
    }

    /// `σ` on the classifying groupoid of a group with an involution.
    pub fn classifying(s: &GroupInvolution) -> Self {
        GroupoidInvolution {
            object_map: vec![0],
            arrow_map: s.map().to_vec(),
        }
    }

    #[inline]
    pub fn object(&self, x: usize) -> usize {
        self.object_map[x]
    }

    #[inline]
    pub fn arrow(&self, f: usize) -> usize {
        self.arrow_map[f]
    }

    pub fn object_map(&self) -> &[usize] {
        &self.object_map
    }

    pub fn arrow_map(&self) -> &[usize] {
        &self.arrow_map
    }

    pub fn is_trivial(&self) -> bool {
        self.object_map.iter().enumerate().all(|(k, &y)| k == y)
            && self.arrow_map.iter().enumerate().all(|(k, &y)| k == y)
    }
}

/// The involution `(g, x) ↦ (σ_Γ(g), σ_X(x))` on the action groupoid, valid
/// when `σ_X(g·x) = σ_Γ(g)·σ_X(x)` for all `g` and `x`.
pub fn equivariant_action_involution(
    action: &GroupAction,
    sigma_x: &[usize],
    sigma_g: &GroupInvolution,
) -> Result<GroupoidInvolution, InvolutionError> {
    let (g, p) = (action.group(), action.points());
    if sigma_x.len() != p || sigma_g.map().len() != g.order() {
        return Err(InvolutionError::Arity {
            expected_objects: p,
            expected_arrows: g.order() * p,
            objects: sigma_x.len(),
            arrows: sigma_g.map().len() * sigma_x.len(),
        });
    }
    if let Some(x) = (0..p).find(|&x| sigma_x[x] >= p || sigma_x[sigma_x[x]] != x) {
        return Err(InvolutionError::Incompatible(vec![InvolutionViolation {
            kind: Compatibility::Involutive,
            witness: vec![x],
        }]));
    }
    for a in g.elements() {
        for x in 0..p {
            if sigma_x[action.act(a, x)] != action.act(sigma_g.apply(a), sigma_x[x]) {
                return Err(InvolutionError::NotEquivariantAction { g: a, x });
            }
        }
    }
    let arrow_map = g
        .elements()
        .flat_map(|a| (0..p).map(move |x| (a, x)))
        .map(|(a, x)| sigma_g.apply(a) * p + sigma_x[x])
        .collect();
    Ok(GroupoidInvolution {
        object_map: sigma_x.to_vec(),
        arrow_map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_group;
    use crate::groupoid::{action_groupoid, classifying_groupoid, disjoint_union};

    fn swap_c2() -> GroupAction {
        GroupAction::new(make_group("C2").unwrap(), 2, |g, x| if g == 0 { x } else { 1 - x })
            .unwrap()
    }

    fn kinds(e: InvolutionError) -> Vec<String> {
        match e {
            InvolutionError::Incompatible(v) => v.iter().map(|x| x.kind.to_string()).collect(),
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn trivial_and_swap() {
        let b = classifying_groupoid(&make_group("C2").unwrap());
        let t = GroupoidInvolution::trivial(&b);
        assert_eq!(make_involution(&b, t.object_map.clone(), t.arrow_map.clone()).unwrap(), t);
        let u = disjoint_union([&b, &b]);
        assert!(make_involution(&u, vec![1, 0], vec![2, 3, 0, 1]).is_ok());
    }

    #[test]
    fn object_swap_alone_fails_source() {
        let b = classifying_groupoid(&make_group("C2").unwrap());
        let u = disjoint_union([&b, &b]);
        let err = make_involution(&u, vec![1, 0], vec![0, 1, 2, 3]).unwrap_err();
        assert_eq!(kinds(err)[0], "s-compatibility");
    }

    #[test]
    fn detects_each_failure() {
        let c3 = make_group("C3").unwrap();
        let b = classifying_groupoid(&c3);
        // arity
        assert!(matches!(
            make_involution(&b, vec![0], vec![0, 1]),
            Err(InvolutionError::Arity { .. })
        ));
        // 1 -> 2 -> 0 is not involutive
        let err = make_involution(&b, vec![0], vec![1, 2, 0]).unwrap_err();
        assert!(kinds(err).contains(&"involutivity".to_string()));
        // swapping the identity with a generator breaks units
        let c4 = classifying_groupoid(&make_group("C4").unwrap());
        let err = make_involution(&c4, vec![0], vec![1, 0, 2, 3]).unwrap_err();
        assert!(kinds(err).contains(&"e-compatibility".to_string()));
        // a ↦ a, a² ↦ a³ is a bijective involution but not a homomorphism
        let err = make_involution(&c4, vec![0], vec![0, 1, 3, 2]).unwrap_err();
        let k = kinds(err);
        assert!(k.contains(&"i-compatibility".to_string()) || k.contains(&"c-compatibility".to_string()));
        // inversion on C3 is fine
        assert!(make_involution(&b, vec![0], vec![0, 2, 1]).is_ok());
    }

    #[test]
    fn action_involutions() {
        let a = swap_c2();
        let x = action_groupoid(&a).unwrap();
        let id = GroupInvolution::trivial(a.group());
        let t = equivariant_action_involution(&a, &[0, 1], &id).unwrap();
        assert!(t.is_trivial());
        let s = equivariant_action_involution(&a, &[1, 0], &id).unwrap();
        assert!(make_involution(&x, s.object_map.clone(), s.arrow_map.clone()).is_ok());
        assert!(matches!(
            equivariant_action_involution(&a, &[1, 0, 2], &id),
            Err(InvolutionError::Arity { .. })
        ));
        // C3 on itself: inversion of points is not compatible with the trivial σ_Γ
        let c3 = make_group("C3").unwrap();
        let r = GroupAction::regular(c3.clone());
        assert!(matches!(
            equivariant_action_involution(&r, &[0, 2, 1], &GroupInvolution::trivial(&c3)),
            Err(InvolutionError::NotEquivariantAction { .. })
        ));
        let inv = GroupInvolution::new(&c3, vec![0, 2, 1]).unwrap();
        assert!(equivariant_action_involution(&r, &[0, 2, 1], &inv).is_ok());
    }
}
