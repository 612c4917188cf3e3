//! Automorphisms, involutions and isomorphism testing by generator-image
//! backtracking.

use std::ops::ControlFlow;

use super::{FiniteGroup, GroupError};
use crate::limits::Limits;

const UNMAPPED: usize = usize::MAX;

/// A bijective homomorphism of a group onto itself, stored as an element map.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupAutomorphism {
    map: Vec<usize>,
}

impl GroupAutomorphism {
    /// Checks bijectivity, `map[0] = 0` and multiplicativity on all pairs.
    pub fn new(group: &FiniteGroup, map: Vec<usize>) -> Result<Self, GroupError> {
        let fail = |reason: String| {
            Err(GroupError::NotAutomorphism {
                map: format!("{map:?}"),
                reason,
            })
        };
        let n = group.order();
        if map.len() != n {
            return fail(format!("has {} entries for a group of order {n}", map.len()));
        }
        let mut hit = vec![false; n];
        for &v in &map {
            if v >= n || hit[v] {
                return fail("not a bijection".into());
            }
            hit[v] = true;
        }
        if map[0] != 0 {
            return fail("does not fix the identity".into());
        }
        for a in 0..n {
            for b in 0..n {
                if map[group.mul(a, b)] != group.mul(map[a], map[b]) {
                    return fail(format!("not multiplicative on ({a}, {b})"));
                }
            }
        }
        Ok(GroupAutomorphism { map })
    }

    pub fn identity(group: &FiniteGroup) -> Self {
        GroupAutomorphism {
            map: group.elements().collect(),
        }
    }

    /// `x ↦ a·x·a⁻¹`.
    pub fn inner(group: &FiniteGroup, a: usize) -> Result<Self, GroupError> {
        group.check_element(a)?;
        Ok(GroupAutomorphism {
            map: group.elements().map(|x| group.conjugate(a, x)).collect(),
        })
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GroupAutomorphism) -> GroupAutomorphism {
        GroupAutomorphism {
            map: other.map.iter().map(|&x| self.map[x]).collect(),
        }
    }

    pub fn is_involutive(&self) -> bool {
        self.map.iter().enumerate().all(|(x, &y)| self.map[y] == x)
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(x, &y)| x == y)
    }
}

/// An automorphism whose square is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupInvolution(GroupAutomorphism);

impl GroupInvolution {
    pub fn new(group: &FiniteGroup, map: Vec<usize>) -> Result<Self, GroupError> {
        Self::from_automorphism(GroupAutomorphism::new(group, map)?)
    }

    pub fn from_automorphism(auto: GroupAutomorphism) -> Result<Self, GroupError> {
        if auto.is_involutive() {
            Ok(GroupInvolution(auto))
        } else {
            Err(GroupError::NotAutomorphism {
                map: format!("{:?}", auto.map),
                reason: "its square is not the identity".into(),
            })
        }
    }

    pub fn trivial(group: &FiniteGroup) -> Self {
        GroupInvolution(GroupAutomorphism::identity(group))
    }

    /// Conjugation by `a`; an involution exactly when `a²` is central.
    pub fn inner(group: &FiniteGroup, a: usize) -> Result<Self, GroupError> {
        Self::from_automorphism(GroupAutomorphism::inner(group, a)?)
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0.apply(x)
    }

    pub fn map(&self) -> &[usize] {
        self.0.map()
    }

    pub fn automorphism(&self) -> &GroupAutomorphism {
        &self.0
    }

    pub fn is_trivial(&self) -> bool {
        self.0.is_identity()
    }
}

/// Extends `gens[i] ↦ images[i]` to the subgroup generated by `gens` by a walk
/// on its Cayley graph. Returns `None` when the assignment is not a
/// homomorphism; unreached elements stay `UNMAPPED`.
fn extend_homomorphism(
    src: &FiniteGroup,
    gens: &[usize],
    images: &[usize],
    tgt: &FiniteGroup,
) -> Option<Vec<usize>> {
    let mut map = vec![UNMAPPED; src.order()];
    map[0] = 0;
    let mut stack = vec![0];
    while let Some(x) = stack.pop() {
        let fx = map[x];
        for (&g, &img) in gens.iter().zip(images) {
            let y = src.mul(x, g);
            let fy = tgt.mul(fx, img);
            if map[y] == UNMAPPED {
                map[y] = fy;
                stack.push(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    Some(map)
}

fn injective_on_domain(map: &[usize], target_order: usize) -> bool {
    let mut hit = vec![false; target_order];
    for &v in map.iter().filter(|&&v| v != UNMAPPED) {
        if hit[v] {
            return false;
        }
        hit[v] = true;
    }
    true
}

/// Visits every isomorphism `src → tgt` (as element maps), pruning generator
/// images by element order and by partial injectivity.
fn for_each_isomorphism(
    src: &FiniteGroup,
    tgt: &FiniteGroup,
    visit: &mut dyn FnMut(Vec<usize>) -> ControlFlow<()>,
) {
    if src.order() != tgt.order() {
        return;
    }
    let gens = src.generating_set();
    if gens.is_empty() {
        let _ = visit(vec![0]);
        return;
    }
    let tgt_orders = tgt.element_orders();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            let k = src.element_order(g);
            tgt.elements().filter(|&h| tgt_orders[h] == k).collect()
        })
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    let _ = descend(src, tgt, &gens, &candidates, &mut images, visit);
}

fn descend(
    src: &FiniteGroup,
    tgt: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
    visit: &mut dyn FnMut(Vec<usize>) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let level = images.len();
    for &c in &candidates[level] {
        images.push(c);
        if let Some(map) = extend_homomorphism(src, &gens[..=level], images, tgt) {
            if injective_on_domain(&map, tgt.order()) {
                if level + 1 == gens.len() {
                    debug_assert!(map.iter().all(|&v| v != UNMAPPED));
                    visit(map)?;
                } else {
                    descend(src, tgt, gens, candidates, images, visit)?;
                }
            }
        }
        images.pop();
    }
    ControlFlow::Continue(())
}

/// All involutive automorphisms under the process-wide enumeration cap.
pub fn enumerate_involutive_automorphisms(
    group: &FiniteGroup,
) -> Result<Vec<GroupInvolution>, GroupError> {
    enumerate_involutive_automorphisms_with(group, Limits::global())
}

/// All automorphisms `σ` with `σ² = id`, sorted lexicographically by their
/// element map. The identity automorphism always comes first.
pub fn enumerate_involutive_automorphisms_with(
    group: &FiniteGroup,
    limits: &Limits,
) -> Result<Vec<GroupInvolution>, GroupError> {
    if group.order() > limits.enumeration {
        return Err(GroupError::EnumerationCap {
            order: group.order(),
            cap: limits.enumeration,
        });
    }
    let mut found = Vec::new();
    for_each_isomorphism(group, group, &mut |map| {
        let auto = GroupAutomorphism { map };
        if auto.is_involutive() {
            found.push(GroupInvolution(auto));
        }
        ControlFlow::Continue(())
    });
    found.sort();
    found.dedup();
    Ok(found)
}

pub fn is_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> Result<bool, GroupError> {
    is_isomorphic_with(a, b, Limits::global())
}

/// Invariant pre-screen (order, commutativity, element-order census,
/// class sizes) followed by backtracking when the invariants agree.
pub fn is_isomorphic_with(
    a: &FiniteGroup,
    b: &FiniteGroup,
    limits: &Limits,
) -> Result<bool, GroupError> {
    if a.order() != b.order() || a.is_abelian() != b.is_abelian() {
        return Ok(false);
    }
    if a.table == b.table {
        return Ok(true);
    }
    let census = |g: &FiniteGroup| {
        let mut v = g.element_orders();
        v.sort_unstable();
        v
    };
    if census(a) != census(b) {
        return Ok(false);
    }
    let class_sizes = |g: &FiniteGroup| {
        let mut v = g.conjugacy_classes().sizes();
        v.sort_unstable();
        v
    };
    if class_sizes(a) != class_sizes(b) {
        return Ok(false);
    }
    if a.order() > limits.enumeration {
        return Err(GroupError::EnumerationCap {
            order: a.order(),
            cap: limits.enumeration,
        });
    }
    let mut found = false;
    for_each_isomorphism(a, b, &mut |_| {
        found = true;
        ControlFlow::Break(())
    });
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::super::make_group;
    use super::*;

    /// Every bijection fixing 0, checked for multiplicativity.
    fn brute_isomorphisms(a: &FiniteGroup, b: &FiniteGroup) -> Vec<Vec<usize>> {
        fn rec(
            a: &FiniteGroup,
            b: &FiniteGroup,
            map: &mut Vec<usize>,
            used: &mut Vec<bool>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if map.len() == a.order() {
                let hom = (0..a.order())
                    .all(|x| (0..a.order()).all(|y| map[a.mul(x, y)] == b.mul(map[x], map[y])));
                if hom {
                    out.push(map.clone());
                }
                return;
            }
            for v in 1..b.order() {
                if !used[v] {
                    used[v] = true;
                    map.push(v);
                    rec(a, b, map, used, out);
                    map.pop();
                    used[v] = false;
                }
            }
        }
        let mut out = Vec::new();
        if a.order() != b.order() {
            return out;
        }
        let mut used = vec![false; b.order()];
        used[0] = true;
        rec(a, b, &mut vec![0], &mut used, &mut out);
        out
    }

    fn brute_involutions(g: &FiniteGroup) -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> = brute_isomorphisms(g, g)
            .into_iter()
            .filter(|m| m.iter().enumerate().all(|(x, &y)| m[y] == x))
            .collect();
        v.sort();
        v
    }

    fn maps(v: &[GroupInvolution]) -> Vec<Vec<usize>> {
        v.iter().map(|s| s.map().to_vec()).collect()
    }

    #[test]
    fn involution_counts_small_groups() {
        let c2 = make_group("C2").unwrap();
        let inv = enumerate_involutive_automorphisms(&c2).unwrap();
        assert_eq!(inv.len(), 1);
        assert!(inv[0].is_trivial());

        let c3 = make_group("C3").unwrap();
        let inv = enumerate_involutive_automorphisms(&c3).unwrap();
        assert_eq!(maps(&inv), vec![vec![0, 1, 2], vec![0, 2, 1]]);

        let v4 = make_group("C2xC2").unwrap();
        let inv = enumerate_involutive_automorphisms(&v4).unwrap();
        assert_eq!(inv.len(), 4);
        assert!(inv[0].is_trivial());
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for spec in ["C4", "C2xC2", "C5", "C6", "S3", "C7", "C8", "D8", "C2xC4", "C2xC2xC2"] {
            let g = make_group(spec).unwrap();
            let fast = maps(&enumerate_involutive_automorphisms(&g).unwrap());
            assert_eq!(fast, brute_involutions(&g), "{spec}");
        }
    }

    #[test]
    fn enumeration_cap() {
        let s5 = make_group("S5").unwrap();
        assert!(matches!(
            enumerate_involutive_automorphisms(&s5),
            Err(GroupError::EnumerationCap { order: 120, cap: 24 })
        ));
    }

    #[test]
    fn outputs_are_valid_involutions() {
        for spec in ["S4", "D12", "C2xC2xC2xC2", "C4xC4"] {
            let g = make_group(spec).unwrap();
            let inv = enumerate_involutive_automorphisms(&g).unwrap();
            assert!(inv[0].is_trivial());
            for s in &inv {
                let checked = GroupInvolution::new(&g, s.map().to_vec()).unwrap();
                assert_eq!(&checked, s);
            }
        }
    }

    #[test]
    fn isomorphism_examples() {
        let s4 = make_group("S4").unwrap();
        let c = s4.centralizer(s4.element_named("(12)(34)").unwrap()).unwrap();
        assert!(is_isomorphic(&c.group, &make_group("D8").unwrap()).unwrap());
        let c = s4.centralizer(s4.element_named("(12)").unwrap()).unwrap();
        assert!(is_isomorphic(&c.group, &make_group("C2xC2").unwrap()).unwrap());
        assert!(!is_isomorphic(&make_group("C4").unwrap(), &make_group("C2xC2").unwrap()).unwrap());
        assert!(is_isomorphic(&s4, &s4).unwrap());
        assert!(is_isomorphic(&make_group("C2xS3").unwrap(), &make_group("D12").unwrap()).unwrap());
        assert!(is_isomorphic(&make_group("C2xC3").unwrap(), &make_group("C6").unwrap()).unwrap());
        assert!(!is_isomorphic(&make_group("S3").unwrap(), &make_group("C6").unwrap()).unwrap());
    }

    #[test]
    fn isomorphism_agrees_with_brute_force_up_to_order_8() {
        let family = [
            "C1", "C2", "C3", "C4", "C2xC2", "D4", "C5", "C6", "S3", "D6", "C2xC3", "C7", "C8",
            "C2xC4", "C4xC2", "C2xC2xC2", "D8",
        ];
        let groups: Vec<FiniteGroup> = family.iter().map(|s| make_group(s).unwrap()).collect();
        for a in &groups {
            for b in &groups {
                let fast = is_isomorphic(a, b).unwrap();
                let slow = !brute_isomorphisms(a, b).is_empty();
                assert_eq!(fast, slow, "{} vs {}", a.label(), b.label());
                assert_eq!(fast, is_isomorphic(b, a).unwrap());
            }
        }
    }

    #[test]
    fn inner_involutions() {
        let s4 = make_group("S4").unwrap();
        let t = s4.element_named("(12)").unwrap();
        let s = GroupInvolution::inner(&s4, t).unwrap();
        assert!(!s.is_trivial());
        let c = s4.element_named("(123)").unwrap();
        assert!(GroupInvolution::inner(&s4, c).is_err());
    }

    #[test]
    fn automorphism_validation() {
        let c3 = make_group("C3").unwrap();
        assert!(GroupAutomorphism::new(&c3, vec![0, 1]).is_err());
        assert!(GroupAutomorphism::new(&c3, vec![1, 0, 2]).is_err());
        assert!(GroupAutomorphism::new(&c3, vec![0, 1, 1]).is_err());
        let c4 = make_group("C4").unwrap();
        // a ↦ a² is not injective; a ↦ a³ is the inversion
        assert!(GroupAutomorphism::new(&c4, vec![0, 2, 0, 2]).is_err());
        assert!(GroupInvolution::new(&c4, vec![0, 3, 2, 1]).is_ok());
    }
}
