//! Families of finite groups over a finite base with an involution, and their
//! nonabelian `H¹`.

use serde::Serialize;

use super::lifted::fixed_groupoid;
use super::{make_involution, InvolutionError};
use crate::group::{FiniteGroup, GroupInvolution};
use crate::groupoid::{classifying_groupoid, disjoint_union};
use crate::h1::h1;

/// Groups `H_u` over base points `u`, with isomorphisms `H_u → H_{σu}` whose
/// round trips are identities.
#[derive(Clone, Debug)]
pub struct FiniteGroupFamily {
    base_involution: Vec<usize>,
    fibers: Vec<FiniteGroup>,
    fiber_maps: Vec<Vec<usize>>,
}

impl FiniteGroupFamily {
    pub fn new(
        base_involution: Vec<usize>,
        fibers: Vec<FiniteGroup>,
        fiber_maps: Vec<Vec<usize>>,
    ) -> Result<Self, InvolutionError> {
        let n = base_involution.len();
        let bad = |m: String| Err(InvolutionError::Precondition(m));
        if fibers.len() != n || fiber_maps.len() != n {
            return bad("base, fibers and fiber maps differ in length".into());
        }
        if let Some(u) = (0..n).find(|&u| base_involution[u] >= n || base_involution[base_involution[u]] != u) {
            return bad(format!("base map is not an involution at {u}"));
        }
        for u in 0..n {
            let (a, b) = (&fibers[u], &fibers[base_involution[u]]);
            let map = &fiber_maps[u];
            if map.len() != a.order() || a.order() != b.order() || map.iter().any(|&y| y >= b.order()) {
                return bad(format!("fiber map at {u} has the wrong shape"));
            }
            let mut seen = vec![false; b.order()];
            for &y in map {
                seen[y] = true;
            }
            if seen.contains(&false) {
                return bad(format!("fiber map at {u} is not a bijection"));
            }
            for p in a.elements() {
                for q in a.elements() {
                    if map[a.mul(p, q)] != b.mul(map[p], map[q]) {
                        return bad(format!("fiber map at {u} is not a homomorphism"));
                    }
                }
            }
        }
        for u in 0..n {
            let back = &fiber_maps[base_involution[u]];
            if fiber_maps[u].iter().enumerate().any(|(h, &y)| back[y] != h) {
                return bad(format!("round trip over {u} is not the identity"));
            }
        }
        Ok(FiniteGroupFamily {
            base_involution,
            fibers,
            fiber_maps,
        })
    }

    /// The constant family with fiber `group` and fiber maps `s`.
    pub fn constant(base_involution: Vec<usize>, group: &FiniteGroup, s: &GroupInvolution) -> Result<Self, InvolutionError> {
        let n = base_involution.len();
        Self::new(
            base_involution,
            vec![group.clone(); n],
            vec![s.map().to_vec(); n],
        )
    }

    pub fn base_size(&self) -> usize {
        self.base_involution.len()
    }

    pub fn fibers(&self) -> &[FiniteGroup] {
        &self.fibers
    }

    /// Base points fixed by the involution.
    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.base_size())
            .filter(|&u| self.base_involution[u] == u)
            .collect()
    }

    /// The involution on the fiber over a fixed point.
    pub fn fiber_involution(&self, u: usize) -> Option<GroupInvolution> {
        (self.base_involution[u] == u)
            .then(|| GroupInvolution::new(&self.fibers[u], self.fiber_maps[u].clone()).ok())
            .flatten()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyClass {
    pub base_point: usize,
    /// Minimal cocycle in the class, as an element of the fiber.
    pub representative: usize,
    pub size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyH1 {
    /// All classes, grouped by base point.
    pub classes: Vec<FamilyClass>,
    /// `(u, #H¹(G, H_u))` for each fixed base point.
    pub per_point: Vec<(usize, usize)>,
}

impl FamilyH1 {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Image of each class under the projection to the base.
    pub fn projection(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.base_point).collect()
    }
}

/// Pairs `(u, g)` with `σu = u` and `g·σ_u(g) = e`, up to `g ~ h·g·σ_u(h)⁻¹`.
///
/// Each fiber is also recounted as the coarse classes of the fixed groupoid of
/// the bundle `[⊔ H_u ⇉ U]` lying over `u`.
pub fn family_h1(fam: &FiniteGroupFamily) -> Result<FamilyH1, InvolutionError> {
    let mut classes = Vec::new();
    let mut per_point = Vec::new();
    for u in fam.fixed_points() {
        let s = fam
            .fiber_involution(u)
            .ok_or_else(|| InvolutionError::Bug(format!("fiber map over {u} is not an involution")))?;
        let set = h1(&fam.fibers[u], &s);
        per_point.push((u, set.len()));
        classes.extend(set.classes.iter().map(|c| FamilyClass {
            base_point: u,
            representative: c[0],
            size: c.len(),
        }));
    }

    let parts: Vec<_> = fam.fibers.iter().map(classifying_groupoid).collect();
    let bundle = disjoint_union(&parts);
    let mut offset = Vec::with_capacity(parts.len());
    let mut total = 0;
    for g in &fam.fibers {
        offset.push(total);
        total += g.order();
    }
    let arrow_map = (0..fam.base_size())
        .flat_map(|u| {
            let v = fam.base_involution[u];
            fam.fiber_maps[u].iter().map(move |&h| (v, h))
        })
        .map(|(v, h)| offset[v] + h)
        .collect();
    let s = make_involution(&bundle, fam.base_involution.clone(), arrow_map)?;
    let fixed = fixed_groupoid(&bundle, &s)?;
    let mut counted = vec![0; fam.base_size()];
    for k in fixed.coarse_space().representatives() {
        counted[fixed.base_object(k)] += 1;
    }
    for &(u, n) in &per_point {
        if counted[u] != n {
            return Err(InvolutionError::Bug(format!(
                "fiber over {u}: {n} classes, bundle groupoid gives {}",
                counted[u]
            )));
        }
    }
    if let Some(u) = (0..fam.base_size()).find(|&u| fam.base_involution[u] != u && counted[u] != 0) {
        return Err(InvolutionError::Bug(format!("fixed classes over the moved point {u}")));
    }
    Ok(FamilyH1 { classes, per_point })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_group;

    #[test]
    fn constant_families() {
        let s4 = make_group("S4").unwrap();
        let t = GroupInvolution::trivial(&s4);
        let fam = FiniteGroupFamily::constant(vec![0, 1, 2], &s4, &t).unwrap();
        let r = family_h1(&fam).unwrap();
        assert_eq!(r.per_point, vec![(0, 3), (1, 3), (2, 3)]);
        assert_eq!(r.projection(), vec![0, 0, 0, 1, 1, 1, 2, 2, 2]);

        let swapped = FiniteGroupFamily::constant(vec![1, 0], &s4, &t).unwrap();
        assert!(family_h1(&swapped).unwrap().is_empty());

        let one = FiniteGroupFamily::constant(vec![0], &s4, &t).unwrap();
        assert_eq!(family_h1(&one).unwrap().len(), 3);
    }

    #[test]
    fn twisted_swap() {
        // C3 over two swapped points, glued by inversion one way and back
        let c3 = make_group("C3").unwrap();
        let fam = FiniteGroupFamily::new(
            vec![1, 0, 2],
            vec![c3.clone(), c3.clone(), c3.clone()],
            vec![vec![0, 2, 1], vec![0, 2, 1], vec![0, 2, 1]],
        )
        .unwrap();
        let r = family_h1(&fam).unwrap();
        assert_eq!(r.per_point, vec![(2, 1)]);
    }

    #[test]
    fn rejects_bad_families() {
        let c3 = make_group("C3").unwrap();
        // round trip inversion then identity is not the identity
        assert!(FiniteGroupFamily::new(
            vec![1, 0],
            vec![c3.clone(), c3.clone()],
            vec![vec![0, 2, 1], vec![0, 1, 2]],
        )
        .is_err());
        // not a homomorphism
        assert!(FiniteGroupFamily::new(vec![0], vec![c3.clone()], vec![vec![1, 0, 2]]).is_err());
        assert!(FiniteGroupFamily::new(vec![1], vec![c3], vec![vec![0, 1, 2]]).is_err());
    }
}
