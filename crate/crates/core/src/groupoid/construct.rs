use super::{Arrow, FiniteGroupoid, GroupoidError};
use crate::action::GroupAction;
use crate::group::FiniteGroup;

/// `[Γ ⇉ pt]`: one object whose loops are the group elements.
pub fn classifying_groupoid(group: &FiniteGroup) -> FiniteGroupoid {
    let n = group.order();
    FiniteGroupoid::from_parts(
        1,
        vec![Arrow { source: 0, target: 0 }; n],
        vec![group.identity()],
        group.elements().map(|g| group.inv(g)).collect(),
        |j, i| Some(group.mul(j, i)),
    )
    .expect("classifying groupoid fits the arrow cap")
}

/// Objects `0..n` with identity arrows only.
pub fn discrete_groupoid(n: usize) -> FiniteGroupoid {
    FiniteGroupoid::from_parts(
        n,
        (0..n).map(|x| Arrow { source: x, target: x }).collect(),
        (0..n).collect(),
        (0..n).collect(),
        |j, _| Some(j),
    )
    .expect("discrete groupoid fits the arrow cap")
}

/// The action groupoid `[X/Γ]`. Arrow `(g, x)` has index `g·|X| + x`, source
/// `x` and target `g·x`; `(h, g·x) ∘ (g, x) = (hg, x)`.
pub fn action_groupoid(action: &GroupAction) -> Result<FiniteGroupoid, GroupoidError> {
    let group = action.group();
    let p = action.points();
    let arrows = group
        .elements()
        .flat_map(|g| (0..p).map(move |x| (g, x)))
        .map(|(g, x)| Arrow {
            source: x,
            target: action.act(g, x),
        })
        .collect();
    let inverse = group
        .elements()
        .flat_map(|g| (0..p).map(move |x| (g, x)))
        .map(|(g, x)| group.inv(g) * p + action.act(g, x))
        .collect();
    FiniteGroupoid::from_parts(p, arrows, (0..p).collect(), inverse, |j, i| {
        Some(group.mul(j / p, i / p) * p + i % p)
    })
}

/// Coproduct; objects and arrows are offset in input order.
pub fn disjoint_union<'a>(parts: impl IntoIterator<Item = &'a FiniteGroupoid>) -> FiniteGroupoid {
    let parts: Vec<&FiniteGroupoid> = parts.into_iter().collect();
    let mut arrows = Vec::new();
    let mut identity = Vec::new();
    let mut inverse = Vec::new();
    let mut arrow_offset = Vec::with_capacity(parts.len());
    let mut owner = Vec::new();
    let mut objects = 0;
    for (k, x) in parts.iter().enumerate() {
        let a0 = arrows.len();
        arrow_offset.push(a0);
        arrows.extend(x.arrows().iter().map(|a| Arrow {
            source: a.source + objects,
            target: a.target + objects,
        }));
        identity.extend(x.identities().iter().map(|&e| e + a0));
        inverse.extend(x.inverses().iter().map(|&f| f + a0));
        owner.extend(std::iter::repeat_n(k, x.arrow_count()));
        objects += x.object_count();
    }
    FiniteGroupoid::from_parts(objects, arrows, identity, inverse, |j, i| {
        let k = owner[i];
        let off = arrow_offset[k];
        parts[k].try_compose(j - off, i - off).map(|c| c + off)
    })
    .unwrap_or_else(|e| panic!("disjoint union: {e}"))
}

/// The automorphism group at an object, with the loop realising each element.
#[derive(Clone, Debug)]
pub struct LoopGroup {
    pub group: FiniteGroup,
    /// `arrows[g]` is the loop for group element `g`; `arrows[0]` is the identity.
    pub arrows: Vec<usize>,
}

impl LoopGroup {
    /// Group element of a loop at the object.
    pub fn element_of(&self, arrow: usize) -> Option<usize> {
        self.arrows.iter().position(|&a| a == arrow)
    }
}

/// `Aut(x)` as a [`FiniteGroup`], identity re-indexed to 0.
pub fn automorphism_group_at(x: &FiniteGroupoid, object: usize) -> LoopGroup {
    let e = x.identity(object);
    let mut arrows = vec![e];
    arrows.extend(x.loops(object).iter().copied().filter(|&f| f != e));
    let index: std::collections::HashMap<usize, usize> =
        arrows.iter().enumerate().map(|(k, &a)| (a, k)).collect();
    let n = arrows.len();
    let mut table = Vec::with_capacity(n * n);
    for &a in &arrows {
        for &b in &arrows {
            table.push(index[&x.compose(a, b)] as u16);
        }
    }
    let names = arrows.iter().map(|a| format!("#{a}")).collect();
    let group = FiniteGroup::trusted(n, table, format!("Aut({object})"), names)
        .expect("loops at an object form a group");
    LoopGroup { group, arrows }
}

/// A full subgroupoid together with its embedding into the ambient groupoid.
#[derive(Clone, Debug)]
pub struct Subgroupoid {
    pub groupoid: FiniteGroupoid,
    pub object_map: Vec<usize>,
    pub arrow_map: Vec<usize>,
}

/// The full subgroupoid on the given objects, in the given order.
pub fn full_subgroupoid(x: &FiniteGroupoid, objects: &[usize]) -> Subgroupoid {
    let mut local = vec![usize::MAX; x.object_count()];
    for (k, &o) in objects.iter().enumerate() {
        local[o] = k;
    }
    let mut arrow_map = Vec::new();
    let mut arrows = Vec::new();
    for &o in objects {
        for &f in x.out_arrows(o) {
            let t = local[x.target(f)];
            if t != usize::MAX {
                arrow_map.push(f);
                arrows.push(Arrow {
                    source: local[o],
                    target: t,
                });
            }
        }
    }
    let mut local_arrow = std::collections::HashMap::with_capacity(arrow_map.len());
    for (k, &f) in arrow_map.iter().enumerate() {
        local_arrow.insert(f, k);
    }
    let identity = objects.iter().map(|&o| local_arrow[&x.identity(o)]).collect();
    let inverse = arrow_map.iter().map(|&f| local_arrow[&x.inverse(f)]).collect();
    let groupoid = FiniteGroupoid::from_parts(objects.len(), arrows, identity, inverse, |j, i| {
        Some(local_arrow[&x.compose(arrow_map[j], arrow_map[i])])
    })
    .expect("a subgroupoid is no larger than its ambient groupoid");
    Subgroupoid {
        groupoid,
        object_map: objects.to_vec(),
        arrow_map,
    }
}

/// One object per coarse class (its minimal member) with all of its loops.
pub fn skeleton(x: &FiniteGroupoid) -> Subgroupoid {
    full_subgroupoid(x, &x.coarse_space().representatives())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{is_isomorphic, make_group};

    fn swap_c2() -> GroupAction {
        GroupAction::new(make_group("C2").unwrap(), 2, |g, x| if g == 0 { x } else { 1 - x })
            .unwrap()
    }

    #[test]
    fn classifying() {
        for (spec, n) in [("C1", 1), ("C2", 2), ("S4", 24)] {
            let b = classifying_groupoid(&make_group(spec).unwrap());
            assert_eq!((b.object_count(), b.arrow_count()), (1, n));
            assert!(b.validate().is_ok());
        }
    }

    #[test]
    fn swap_action() {
        let x = action_groupoid(&swap_c2()).unwrap();
        assert_eq!((x.object_count(), x.arrow_count()), (2, 4));
        assert!(x.validate().is_ok());
        assert_eq!(x.coarse_space().len(), 1);
        assert_eq!(automorphism_group_at(&x, 0).group.order(), 1);
    }

    #[test]
    fn point_action_is_classifying() {
        let g = make_group("D8").unwrap();
        let x = action_groupoid(&GroupAction::trivial(g.clone(), 1)).unwrap();
        assert_eq!(x, classifying_groupoid(&g));
    }

    #[test]
    fn natural_s3() {
        let s3 = make_group("S3").unwrap();
        let x = action_groupoid(&GroupAction::natural_symmetric(s3, 3).unwrap()).unwrap();
        assert_eq!(x.coarse_space().len(), 1);
        for p in 0..3 {
            assert_eq!(automorphism_group_at(&x, p).group.order(), 2);
        }
    }

    #[test]
    fn aut_of_classifying_is_the_group() {
        let g = make_group("S3").unwrap();
        let aut = automorphism_group_at(&classifying_groupoid(&g), 0);
        assert!(is_isomorphic(&aut.group, &g).unwrap());
        assert_eq!(automorphism_group_at(&discrete_groupoid(2), 1).group.order(), 1);
    }

    #[test]
    fn unions() {
        let b = classifying_groupoid(&make_group("C2").unwrap());
        let u = disjoint_union([&b, &b]);
        assert_eq!((u.object_count(), u.coarse_space().len()), (2, 2));
        assert!(u.validate().is_ok());
        let empty = disjoint_union([]);
        assert_eq!((empty.object_count(), empty.arrow_count()), (0, 0));
        let d = discrete_groupoid(1);
        let mixed = disjoint_union([&b, &d]);
        assert_eq!(mixed.coarse_space().len(), 2);
        let orders: Vec<_> = (0..2)
            .map(|o| automorphism_group_at(&mixed, o).group.order())
            .collect();
        assert_eq!(orders, vec![2, 1]);
    }

    #[test]
    fn skeleton_of_torsor() {
        let x = action_groupoid(&GroupAction::regular(make_group("S3").unwrap())).unwrap();
        let s = skeleton(&x);
        assert_eq!((s.groupoid.object_count(), s.groupoid.arrow_count()), (1, 1));
        assert!(s.groupoid.validate().is_ok());
    }
}
