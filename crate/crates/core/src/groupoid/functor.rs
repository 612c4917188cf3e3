use serde::Serialize;

use super::{automorphism_group_at, FiniteGroupoid, GroupoidError};
use crate::group::{is_isomorphic_with, GroupError};
use crate::limits::Limits;

const MAX_REPORTED: usize = 64;

/// A validated functor between finite groupoids.
#[derive(Clone, Debug)]
pub struct GroupoidFunctor<'a> {
    source: &'a FiniteGroupoid,
    target: &'a FiniteGroupoid,
    object_map: Vec<usize>,
    arrow_map: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Equivalence {
    pub holds: bool,
    pub reason: String,
}

impl<'a> GroupoidFunctor<'a> {
    /// Checks compatibility with source, target, identity, inverse and
    /// composition, reporting each failure with its witness.
    pub fn new(
        source: &'a FiniteGroupoid,
        target: &'a FiniteGroupoid,
        object_map: Vec<usize>,
        arrow_map: Vec<usize>,
    ) -> Result<Self, GroupoidError> {
        let fail = |m: String| Err(GroupoidError::InvalidFunctor(vec![m]));
        if object_map.len() != source.object_count() || arrow_map.len() != source.arrow_count() {
            return fail("object or arrow map has the wrong length".into());
        }
        if let Some(x) = object_map.iter().position(|&y| y >= target.object_count()) {
            return fail(format!("object {x} maps outside the target"));
        }
        if let Some(f) = arrow_map.iter().position(|&g| g >= target.arrow_count()) {
            return fail(format!("arrow {f} maps outside the target"));
        }
        let mut errs = Vec::new();
        let push = |errs: &mut Vec<String>, m: String| {
            if errs.len() < MAX_REPORTED {
                errs.push(m);
            }
        };
        for (f, &g) in arrow_map.iter().enumerate() {
            if object_map[source.source(f)] != target.source(g) {
                push(&mut errs, format!("source: arrow {f}"));
            }
            if object_map[source.target(f)] != target.target(g) {
                push(&mut errs, format!("target: arrow {f}"));
            }
        }
        for x in 0..source.object_count() {
            if arrow_map[source.identity(x)] != target.identity(object_map[x]) {
                push(&mut errs, format!("identity: object {x}"));
            }
        }
        if errs.is_empty() {
            for (f, &g) in arrow_map.iter().enumerate() {
                if arrow_map[source.inverse(f)] != target.inverse(g) {
                    push(&mut errs, format!("inverse: arrow {f}"));
                }
            }
            for (j, i, k) in source.composition_triples() {
                if target.try_compose(arrow_map[j], arrow_map[i]) != Some(arrow_map[k]) {
                    push(&mut errs, format!("composition: arrows {j} ∘ {i}"));
                }
            }
        }
        if !errs.is_empty() {
            return Err(GroupoidError::InvalidFunctor(errs));
        }
        Ok(GroupoidFunctor {
            source,
            target,
            object_map,
            arrow_map,
        })
    }

    pub fn identity(x: &'a FiniteGroupoid) -> Self {
        GroupoidFunctor {
            source: x,
            target: x,
            object_map: (0..x.object_count()).collect(),
            arrow_map: (0..x.arrow_count()).collect(),
        }
    }

    pub fn source(&self) -> &'a FiniteGroupoid {
        self.source
    }

    pub fn target(&self) -> &'a FiniteGroupoid {
        self.target
    }

    pub fn object_map(&self) -> &[usize] {
        &self.object_map
    }

    pub fn arrow_map(&self) -> &[usize] {
        &self.arrow_map
    }

    /// Induced map on coarse spaces, by block index.
    pub fn coarse_map(&self) -> Vec<usize> {
        let src = self.source.coarse_space();
        let tgt = self.target.coarse_space();
        src.representatives()
            .iter()
            .map(|&x| tgt.block_of(self.object_map[x]))
            .collect()
    }

    /// Fully faithful and essentially surjective.
    ///
    /// Hom sets between source objects in one coarse class are compared
    /// directly. For objects in different classes the source hom set is empty,
    /// so fullness there amounts to the induced coarse map being injective.
    pub fn is_equivalence(&self) -> Equivalence {
        let no = |reason: String| Equivalence {
            holds: false,
            reason,
        };
        let (s, t) = (self.source, self.target);
        let mut seen_pairs = std::collections::HashSet::new();
        for a in s.arrows() {
            if !seen_pairs.insert((a.source, a.target)) {
                continue;
            }
            let (x, y) = (a.source, a.target);
            let hom = s.hom(x, y);
            let (fx, fy) = (self.object_map[x], self.object_map[y]);
            let mut images: Vec<usize> = hom.iter().map(|&f| self.arrow_map[f]).collect();
            images.sort_unstable();
            images.dedup();
            if images.len() != hom.len() {
                return no(format!("not faithful on Hom({x}, {y})"));
            }
            if images.len() != t.hom(fx, fy).len() {
                return no(format!(
                    "not full on Hom({x}, {y}): {} arrows onto {}",
                    hom.len(),
                    t.hom(fx, fy).len()
                ));
            }
        }
        let coarse = self.coarse_map();
        let mut hit = vec![false; t.coarse_space().len()];
        for (c, &d) in coarse.iter().enumerate() {
            if hit[d] {
                let src = s.coarse_space();
                let other = coarse.iter().position(|&e| e == d).unwrap();
                return no(format!(
                    "not full: objects {} and {} are unrelated but their images are isomorphic",
                    src.blocks()[other][0],
                    src.blocks()[c][0]
                ));
            }
            hit[d] = true;
        }
        if let Some(d) = hit.iter().position(|&h| !h) {
            return no(format!(
                "not essentially surjective: object {} is not reached",
                t.coarse_space().blocks()[d][0]
            ));
        }
        Equivalence {
            holds: true,
            reason: "fully faithful and essentially surjective".into(),
        }
    }
}

/// Finite groupoids are equivalent exactly when their coarse classes can be
/// matched so that matched automorphism groups are isomorphic.
pub fn are_equivalent(a: &FiniteGroupoid, b: &FiniteGroupoid) -> Result<bool, GroupError> {
    are_equivalent_with(a, b, Limits::global())
}

pub fn are_equivalent_with(
    a: &FiniteGroupoid,
    b: &FiniteGroupoid,
    limits: &Limits,
) -> Result<bool, GroupError> {
    let ca = a.coarse_space().representatives();
    let cb = b.coarse_space().representatives();
    if ca.len() != cb.len() {
        return Ok(false);
    }
    let ga: Vec<_> = ca.iter().map(|&x| automorphism_group_at(a, x).group).collect();
    let mut gb: Vec<Option<_>> = cb
        .iter()
        .map(|&x| Some(automorphism_group_at(b, x).group))
        .collect();
    // isomorphism is an equivalence relation, so greedy matching is exact
    for g in &ga {
        let mut matched = None;
        for (k, h) in gb.iter().enumerate() {
            if let Some(h) = h {
                if is_isomorphic_with(g, h, limits)? {
                    matched = Some(k);
                    break;
                }
            }
        }
        match matched {
            Some(k) => gb[k] = None,
            None => return Ok(false),
        }
    }
    Ok(true)
}
