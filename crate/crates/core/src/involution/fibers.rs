//! Checks comparing fixed-point and inertia groupoids with group-level
//! formulas.

use serde::Serialize;

use super::lifted::{fixed_groupoid, inertia_groupoid, PairGroupoid};
use super::{GroupoidInvolution, InvolutionError};
use crate::action::GroupAction;
use crate::group::{FiniteGroup, GroupInvolution};
use crate::groupoid::{
    action_groupoid, are_equivalent, automorphism_group_at, classifying_groupoid,
    disjoint_union, full_subgroupoid, Equivalence, FiniteGroupoid, GroupoidFunctor,
};
use crate::h1::{fixed_subgroup, h1};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionRow {
    /// Name of the cocycle representing the class.
    pub cocycle: String,
    /// `|Γ^{σ_γ}|`.
    pub subgroup_order: usize,
    /// Order of the automorphism group of the matching fixed-groupoid class.
    pub fixed_aut_order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub holds: bool,
    pub fixed_classes: usize,
    pub h1_classes: usize,
    pub rows: Vec<DecompositionRow>,
}

/// Compares the fixed groupoid of `BΓ` with the disjoint union of
/// `B(Γ^{σ_γ})` over representatives `γ` of `H¹`.
pub fn fixed_decomposition_check(
    g: &FiniteGroup,
    s: &GroupInvolution,
) -> Result<DecompositionReport, InvolutionError> {
    let b = classifying_groupoid(g);
    let fixed = fixed_groupoid(&b, &GroupoidInvolution::classifying(s))?;
    let classes = h1(g, s);
    let mut parts = Vec::with_capacity(classes.len());
    let mut rows = Vec::with_capacity(classes.len());
    for &gamma in &classes.representatives {
        let sub = fixed_subgroup(g, s, gamma)?;
        let k = fixed
            .object_index(0, gamma)
            .ok_or_else(|| InvolutionError::Bug(format!("cocycle {gamma} is not an object")))?;
        rows.push(DecompositionRow {
            cocycle: g.name(gamma).to_string(),
            subgroup_order: sub.order(),
            fixed_aut_order: automorphism_group_at(&fixed.groupoid, k).group.order(),
        });
        parts.push(classifying_groupoid(&sub.group));
    }
    let union = disjoint_union(&parts);
    let holds = are_equivalent(&fixed.groupoid, &union)?
        && rows.iter().all(|r| r.subgroup_order == r.fixed_aut_order);
    Ok(DecompositionReport {
        holds,
        fixed_classes: fixed.coarse_space().len(),
        h1_classes: classes.len(),
        rows,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InertiaFiber {
    /// Coarse classes of the inertia groupoid lying over the orbit.
    pub brute_force: usize,
    /// Conjugacy classes of the stabilizer of the orbit's minimal point.
    pub formula: usize,
    /// The same count for every point of the orbit, in orbit order.
    pub per_point: Vec<usize>,
}

/// Inertia classes over one orbit versus `#(Γ_y/Γ_y)` for `y` in the orbit.
pub fn inertia_fiber(action: &GroupAction, orbit: &[usize]) -> Result<InertiaFiber, InvolutionError> {
    let mut sorted = orbit.to_vec();
    sorted.sort_unstable();
    let orbits = action.orbits();
    let is_orbit = sorted
        .first()
        .filter(|&&y| y < action.points())
        .is_some_and(|&y| orbits.blocks()[orbits.block_of(y)] == sorted);
    if !is_orbit {
        return Err(InvolutionError::Precondition(format!(
            "{orbit:?} is not an orbit of the action"
        )));
    }
    let x = action_groupoid(action)?;
    let sub = full_subgroupoid(&x, &sorted);
    let brute_force = inertia_groupoid(&sub.groupoid)?.coarse_space().len();
    let per_point = sorted
        .iter()
        .map(|&y| Ok(action.stabilizer(y)?.group.conjugacy_classes().len()))
        .collect::<Result<Vec<_>, InvolutionError>>()?;
    let formula = per_point[0];
    if per_point.iter().any(|&c| c != formula) {
        return Err(InvolutionError::Bug(format!(
            "stabilizer class counts differ along the orbit: {per_point:?}"
        )));
    }
    if brute_force != formula {
        return Err(InvolutionError::Bug(format!(
            "inertia fiber has {brute_force} classes, stabilizer has {formula}"
        )));
    }
    Ok(InertiaFiber {
        brute_force,
        formula,
        per_point,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct H1Fiber {
    /// Fixed-groupoid classes lying over the chosen class.
    pub brute_force: usize,
    /// `#H¹(G, Aut(x), τ)` for `τ(g) = φ⁻¹∘σ(g)∘φ`; 0 for an empty fiber.
    pub h1: usize,
    /// The same count with `φ∘σ(h)∘φ⁻¹` on `Aut(σx)`.
    pub h1_alternative: usize,
    /// The cocycle `(x, φ)` used, if the fiber is nonempty.
    pub witness: Option<(usize, usize)>,
}

/// Fixed-groupoid classes over the coarse class of `object`, versus the
/// nonabelian `H¹` of its automorphism group under the induced involution.
pub fn h1_fiber(
    x: &FiniteGroupoid,
    s: &GroupoidInvolution,
    object: usize,
) -> Result<H1Fiber, InvolutionError> {
    let fixed = fixed_groupoid(x, s)?;
    h1_fiber_with(x, s, &fixed, object)
}

/// [`h1_fiber`] against an already built fixed groupoid of `(x, s)`.
pub fn h1_fiber_with(
    x: &FiniteGroupoid,
    s: &GroupoidInvolution,
    fixed: &PairGroupoid,
    object: usize,
) -> Result<H1Fiber, InvolutionError> {
    let coarse = x.coarse_space();
    if object >= x.object_count() {
        return Err(InvolutionError::Precondition(format!("object {object} out of range")));
    }
    let class = coarse.block_of(object);
    if coarse.block_of(s.object(object)) != class {
        return Err(InvolutionError::Precondition(format!(
            "the class of object {object} is not preserved by the involution"
        )));
    }
    let fixed_coarse = fixed.coarse_space();
    let brute_force = fixed_coarse
        .representatives()
        .iter()
        .filter(|&&k| coarse.block_of(fixed.base_object(k)) == class)
        .count();
    let Some(&(w, phi)) = fixed
        .objects
        .iter()
        .find(|&&(y, _)| coarse.block_of(y) == class)
    else {
        return Ok(H1Fiber {
            brute_force,
            h1: 0,
            h1_alternative: 0,
            witness: None,
        });
    };

    let phi_inv = x.inverse(phi);
    let aut = automorphism_group_at(x, w);
    let tau = aut
        .arrows
        .iter()
        .map(|&g| loop_element(&aut.arrows, x.compose(phi_inv, x.compose(s.arrow(g), phi))))
        .collect::<Result<Vec<_>, _>>()?;
    let tau = GroupInvolution::new(&aut.group, tau)
        .map_err(|e| InvolutionError::Bug(format!("τ is not an involution: {e}")))?;
    let count = h1(&aut.group, &tau).len();

    let aut_s = automorphism_group_at(x, s.object(w));
    let tau_s = aut_s
        .arrows
        .iter()
        .map(|&h| loop_element(&aut_s.arrows, x.compose(phi, x.compose(s.arrow(h), phi_inv))))
        .collect::<Result<Vec<_>, _>>()?;
    let tau_s = GroupInvolution::new(&aut_s.group, tau_s)
        .map_err(|e| InvolutionError::Bug(format!("alternative τ is not an involution: {e}")))?;
    let alternative = h1(&aut_s.group, &tau_s).len();

    if brute_force != count || count != alternative {
        return Err(InvolutionError::Bug(format!(
            "fiber over object {object}: {brute_force} fixed classes, H¹ counts {count} and {alternative}"
        )));
    }
    Ok(H1Fiber {
        brute_force,
        h1: count,
        h1_alternative: alternative,
        witness: Some((w, phi)),
    })
}

fn loop_element(loops: &[usize], arrow: usize) -> Result<usize, InvolutionError> {
    loops
        .iter()
        .position(|&a| a == arrow)
        .ok_or_else(|| InvolutionError::Bug(format!("arrow {arrow} is not a loop at the base")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmithThomRecord {
    pub fixed_classes: usize,
    pub inertia_classes: usize,
    pub holds: bool,
}

/// Compares the number of components of the fixed locus with that of the
/// inertia groupoid.
pub fn smith_thom_check(
    x: &FiniteGroupoid,
    s: &GroupoidInvolution,
) -> Result<SmithThomRecord, InvolutionError> {
    let fixed_classes = fixed_groupoid(x, s)?.coarse_space().len();
    let inertia_classes = inertia_groupoid(x)?.coarse_space().len();
    Ok(SmithThomRecord {
        fixed_classes,
        inertia_classes,
        holds: fixed_classes <= inertia_classes,
    })
}

/// The functor induced on fixed groupoids, with both fixed groupoids.
#[derive(Clone, Debug)]
pub struct FixedFunctor {
    pub source: PairGroupoid,
    pub target: PairGroupoid,
    pub object_map: Vec<usize>,
    pub arrow_map: Vec<usize>,
    /// Whether the original functor is an equivalence.
    pub original: Equivalence,
    pub induced: Equivalence,
    /// Whether the induced map on fixed coarse classes is a bijection.
    pub coarse_bijection: bool,
}

impl FixedFunctor {
    pub fn functor(&self) -> GroupoidFunctor<'_> {
        GroupoidFunctor::new(
            &self.source.groupoid,
            &self.target.groupoid,
            self.object_map.clone(),
            self.arrow_map.clone(),
        )
        .expect("validated on construction")
    }
}

/// `F^G: (x, φ) ↦ (Fx, Fφ)`, `(f, (x, φ)) ↦ (Ff, (Fx, Fφ))`, for `F`
/// commuting with the involutions on its source and target. When `F` is an
/// equivalence, so must `F^G` be, and its coarse map must be bijective.
pub fn fixed_functor(
    f: &GroupoidFunctor<'_>,
    s_source: &GroupoidInvolution,
    s_target: &GroupoidInvolution,
) -> Result<FixedFunctor, InvolutionError> {
    let (a, b) = (f.source(), f.target());
    if let Some(o) = (0..a.object_count())
        .find(|&o| f.object_map()[s_source.object(o)] != s_target.object(f.object_map()[o]))
    {
        return Err(InvolutionError::NotEquivariantFunctor {
            kind: "object",
            index: o,
        });
    }
    if let Some(g) = (0..a.arrow_count())
        .find(|&g| f.arrow_map()[s_source.arrow(g)] != s_target.arrow(f.arrow_map()[g]))
    {
        return Err(InvolutionError::NotEquivariantFunctor {
            kind: "arrow",
            index: g,
        });
    }
    let source = fixed_groupoid(a, s_source)?;
    let target = fixed_groupoid(b, s_target)?;
    let image = |k: usize| -> Result<usize, InvolutionError> {
        let (o, phi) = source.objects[k];
        target
            .object_index(f.object_map()[o], f.arrow_map()[phi])
            .ok_or_else(|| InvolutionError::Bug(format!("cocycle {k} has no image")))
    };
    let object_map = (0..source.objects.len())
        .map(image)
        .collect::<Result<Vec<_>, _>>()?;
    let arrow_map = source
        .arrow_origin
        .iter()
        .map(|&(g, k)| {
            let tk = object_map[k];
            let fg = f.arrow_map()[g];
            // arrows out of a pair follow the base arrows out of its object
            let t = target.groupoid.out_arrows(tk)[b.out_position(fg)];
            if target.arrow_origin[t] == (fg, tk) {
                Ok(t)
            } else {
                Err(InvolutionError::Bug(format!("arrow {g} has no image")))
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    let induced_functor = GroupoidFunctor::new(
        &source.groupoid,
        &target.groupoid,
        object_map.clone(),
        arrow_map.clone(),
    )
    .map_err(|e| InvolutionError::Bug(format!("induced functor: {e}")))?;
    let induced = induced_functor.is_equivalence();
    let coarse = induced_functor.coarse_map();
    let mut sorted = coarse.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let coarse_bijection =
        sorted.len() == coarse.len() && coarse.len() == target.coarse_space().len();
    let original = f.is_equivalence();
    if original.holds && !(induced.holds && coarse_bijection) {
        return Err(InvolutionError::Bug(format!(
            "equivalence not preserved on fixed points: {}",
            induced.reason
        )));
    }
    Ok(FixedFunctor {
        source,
        target,
        object_map,
        arrow_map,
        original,
        induced,
        coarse_bijection,
    })
}
