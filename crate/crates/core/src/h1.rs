//! Twisted conjugacy and nonabelian first cohomology of a finite group with an
//! involution.
//!
//! For an involution `σ` of `Γ`, the cocycles are `Z¹ = {γ : γ·σ(γ) = e}` and
//! `Γ` acts on itself by `β · γ = β·γ·σ(β)⁻¹`. This action preserves `Z¹`, and
//! `H¹ = Z¹ / Γ`.

use serde::Serialize;
use thiserror::Error;

use crate::group::{FiniteGroup, GroupAutomorphism, GroupError, GroupInvolution, Subgroup};
use crate::partition::Partition;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum H1Error {
    #[error("element {element} is not a cocycle: γ·σ(γ) = {product}")]
    NotCocycle { element: usize, product: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Twisted-conjugacy classes of cocycles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct H1ClassSet {
    /// `Z¹`, sorted ascending.
    pub cocycles: Vec<usize>,
    /// Orbits of the twisted action on `Z¹`, each sorted, ordered by minimum.
    pub classes: Vec<Vec<usize>>,
    /// Minimal element of each class; the identity's class comes first.
    pub representatives: Vec<usize>,
}

impl H1ClassSet {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Index of the class containing the cocycle `gamma`.
    pub fn class_of(&self, gamma: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.binary_search(&gamma).is_ok())
    }
}

/// `β·γ·σ(β)⁻¹`.
#[inline]
pub fn twisted_conjugate(g: &FiniteGroup, s: &GroupInvolution, beta: usize, gamma: usize) -> usize {
    g.mul(g.mul(beta, gamma), g.inv(s.apply(beta)))
}

pub fn z1(g: &FiniteGroup, s: &GroupInvolution) -> Vec<usize> {
    g.elements()
        .filter(|&x| g.mul(x, s.apply(x)) == 0)
        .collect()
}

/// Orbits of the twisted action on all of `Γ`.
///
/// Only the generators of `Γ` are used as moves: orbits of a group action are
/// the connected components of its Schreier graph on any generating set.
pub fn twisted_classes(g: &FiniteGroup, s: &GroupInvolution) -> Partition {
    let gens = g.generating_set();
    Partition::from_pairs(
        g.order(),
        g.elements()
            .flat_map(|x| gens.iter().map(move |&b| (x, b)))
            .map(|(x, b)| (x, twisted_conjugate(g, s, b, x))),
    )
}

pub fn h1(g: &FiniteGroup, s: &GroupInvolution) -> H1ClassSet {
    let cocycles = z1(g, s);
    let all = twisted_classes(g, s);
    let mut classes: Vec<Vec<usize>> = all
        .blocks()
        .iter()
        .filter(|b| g.mul(b[0], s.apply(b[0])) == 0)
        .cloned()
        .collect();
    classes.sort_by_key(|c| c[0]);
    let representatives = classes.iter().map(|c| c[0]).collect();
    H1ClassSet {
        cocycles,
        classes,
        representatives,
    }
}

fn require_cocycle(g: &FiniteGroup, s: &GroupInvolution, gamma: usize) -> Result<(), H1Error> {
    g.check_element(gamma)?;
    let product = g.mul(gamma, s.apply(gamma));
    if product == 0 {
        Ok(())
    } else {
        Err(H1Error::NotCocycle {
            element: gamma,
            product,
        })
    }
}

/// `σ_γ(x) = γ·σ(x)·γ⁻¹`, an involution whenever `γ ∈ Z¹`.
pub fn twisted_involution(
    g: &FiniteGroup,
    s: &GroupInvolution,
    gamma: usize,
) -> Result<GroupInvolution, H1Error> {
    require_cocycle(g, s, gamma)?;
    let inner = GroupAutomorphism::inner(g, gamma)?;
    Ok(GroupInvolution::from_automorphism(
        inner.compose(s.automorphism()),
    )?)
}

/// `Γ^{σ_γ} = {x : γ·σ(x) = x·γ}`.
pub fn fixed_subgroup(
    g: &FiniteGroup,
    s: &GroupInvolution,
    gamma: usize,
) -> Result<Subgroup, H1Error> {
    let twisted = twisted_involution(g, s, gamma)?;
    let elems: Vec<usize> = g.elements().filter(|&x| twisted.apply(x) == x).collect();
    Ok(Subgroup::from_elements(
        g,
        elems,
        format!("{}^σ[{}]", g.label(), g.name(gamma)),
    )?)
}

/// The counts in `#H¹ ≤ #(Γ/σ-conj) = #(Γ/Γ)^G ≤ #(Γ/Γ)` together with the two
/// orbit-stabilizer evaluations of `Σ_g #Stab_σ(g)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SawinReport {
    pub order: usize,
    pub h1: usize,
    pub twisted_classes: usize,
    pub stable_classes: usize,
    pub conjugacy_classes: usize,
    /// `Σ_g #{h : h·g·σ(h)⁻¹ = g}`, counted directly.
    pub stabilizer_sum: usize,
    /// `stabilizer_sum == order · twisted_classes`.
    pub twisted_identity: bool,
    /// `stabilizer_sum == stable_classes · order`.
    pub stable_identity: bool,
    pub chain: bool,
}

impl SawinReport {
    pub fn holds(&self) -> bool {
        self.chain && self.twisted_identity && self.stable_identity
    }
}

pub fn sawin_report(g: &FiniteGroup, s: &GroupInvolution) -> SawinReport {
    let n = g.order();
    let h1_count = h1(g, s).len();
    let twisted = twisted_classes(g, s).len();
    let conj = g.conjugacy_classes();
    let stable = conj
        .blocks()
        .iter()
        .filter(|block| conj.block_of(s.apply(block[0])) == conj.block_of(block[0]))
        .count();
    let stabilizer_sum: usize = g
        .elements()
        .map(|x| {
            g.elements()
                .filter(|&h| twisted_conjugate(g, s, h, x) == x)
                .count()
        })
        .sum();
    SawinReport {
        order: n,
        h1: h1_count,
        twisted_classes: twisted,
        stable_classes: stable,
        conjugacy_classes: conj.len(),
        stabilizer_sum,
        twisted_identity: stabilizer_sum == n * twisted,
        stable_identity: stabilizer_sum == stable * n,
        chain: h1_count <= twisted && twisted == stable && stable <= conj.len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{enumerate_involutive_automorphisms, is_isomorphic, make_group};

    fn setup(spec: &str) -> (FiniteGroup, GroupInvolution) {
        let g = make_group(spec).unwrap();
        let s = GroupInvolution::trivial(&g);
        (g, s)
    }

    fn inversion_c3() -> (FiniteGroup, GroupInvolution) {
        let g = make_group("C3").unwrap();
        let s = GroupInvolution::new(&g, vec![0, 2, 1]).unwrap();
        (g, s)
    }

    /// Orbit of `gamma` under all of Γ, without generating-set shortcuts.
    fn brute_orbit(g: &FiniteGroup, s: &GroupInvolution, gamma: usize) -> Vec<usize> {
        let mut v: Vec<usize> = g
            .elements()
            .map(|b| twisted_conjugate(g, s, b, gamma))
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    #[test]
    fn z1_examples() {
        let (g, s) = setup("S4");
        let z = z1(&g, &s);
        assert_eq!(z.len(), 10);
        assert!(z.iter().all(|&x| g.element_order(x) <= 2));
        assert_eq!(z1(&make_group("C3").unwrap(), &setup("C3").1), vec![0]);
        let (c3, inv) = inversion_c3();
        assert_eq!(z1(&c3, &inv), vec![0, 1, 2]);
    }

    #[test]
    fn h1_of_s4_trivial() {
        let (g, s) = setup("S4");
        let set = h1(&g, &s);
        assert_eq!(set.len(), 3);
        assert_eq!(set.representatives[0], 0);
        let conj = g.conjugacy_classes();
        let targets = ["e", "(12)", "(12)(34)"].map(|n| conj.block_of(g.element_named(n).unwrap()));
        let mut got: Vec<usize> = set.representatives.iter().map(|&r| conj.block_of(r)).collect();
        got.sort_unstable();
        let mut want = targets.to_vec();
        want.sort_unstable();
        assert_eq!(got, want);
    }

    #[test]
    fn h1_small_cases() {
        let (g, s) = setup("C2");
        assert_eq!(h1(&g, &s).len(), 2);
        let (g, s) = inversion_c3();
        assert_eq!(h1(&g, &s).len(), 1);
        let (g, s) = setup("C1");
        assert_eq!(h1(&g, &s).len(), 1);
    }

    #[test]
    fn classes_match_brute_force_orbits() {
        for spec in ["S4", "D8", "C2xC4", "S3", "C3xS3", "D10"] {
            let g = make_group(spec).unwrap();
            for s in enumerate_involutive_automorphisms(&g).unwrap() {
                let set = h1(&g, &s);
                for class in &set.classes {
                    assert_eq!(class, &brute_orbit(&g, &s, class[0]), "{spec}");
                }
                let covered: usize = set.classes.iter().map(Vec::len).sum();
                assert_eq!(covered, set.cocycles.len());
            }
        }
    }

    #[test]
    fn twisted_involution_examples() {
        let (g, s) = setup("S4");
        assert_eq!(twisted_involution(&g, &s, 0).unwrap(), s);
        let t = g.element_named("(12)").unwrap();
        assert_eq!(
            twisted_involution(&g, &s, t).unwrap(),
            GroupInvolution::inner(&g, t).unwrap()
        );
        let (c3, inv) = inversion_c3();
        for gamma in 0..3 {
            assert_eq!(twisted_involution(&c3, &inv, gamma).unwrap(), inv);
        }
        let c = g.element_named("(123)").unwrap();
        assert!(matches!(
            twisted_involution(&g, &s, c),
            Err(H1Error::NotCocycle { .. })
        ));
    }

    #[test]
    fn fixed_subgroups_of_s4() {
        let (g, s) = setup("S4");
        assert_eq!(fixed_subgroup(&g, &s, 0).unwrap().order(), 24);
        let t = fixed_subgroup(&g, &s, g.element_named("(12)").unwrap()).unwrap();
        assert_eq!(t.order(), 4);
        assert!(is_isomorphic(&t.group, &make_group("C2xC2").unwrap()).unwrap());
        let mut names: Vec<&str> = t.embedding.iter().map(|&x| g.name(x)).collect();
        names.sort_unstable();
        assert_eq!(names, ["(12)", "(12)(34)", "(34)", "e"]);
        let d = fixed_subgroup(&g, &s, g.element_named("(12)(34)").unwrap()).unwrap();
        assert_eq!(d.order(), 8);
        assert!(is_isomorphic(&d.group, &make_group("D8").unwrap()).unwrap());
    }

    #[test]
    fn sawin_examples() {
        let (g, s) = setup("S4");
        let r = sawin_report(&g, &s);
        assert_eq!(
            (r.h1, r.twisted_classes, r.stable_classes, r.conjugacy_classes),
            (3, 5, 5, 5)
        );
        assert!(r.holds());

        let (g, s) = setup("C2");
        let r = sawin_report(&g, &s);
        assert_eq!(
            (r.h1, r.twisted_classes, r.stable_classes, r.conjugacy_classes),
            (2, 2, 2, 2)
        );
        assert!(r.holds());

        // Inversion on C3: β·γ·σ(β)⁻¹ = γ + 2β, which is transitive.
        let (g, s) = inversion_c3();
        let r = sawin_report(&g, &s);
        assert_eq!(
            (r.h1, r.twisted_classes, r.stable_classes, r.conjugacy_classes),
            (1, 1, 1, 3)
        );
        assert_eq!(r.stabilizer_sum, 3);
        assert!(r.holds());

        let (g, s) = setup("C1");
        let r = sawin_report(&g, &s);
        assert_eq!(
            (r.h1, r.twisted_classes, r.stable_classes, r.conjugacy_classes),
            (1, 1, 1, 1)
        );
    }

    #[test]
    fn rebasing_along_a_cocycle() {
        for spec in ["S4", "D8", "C4xC2", "D12"] {
            let g = make_group(spec).unwrap();
            for s in enumerate_involutive_automorphisms(&g).unwrap() {
                let base = h1(&g, &s);
                for &gamma in &base.cocycles {
                    let tw = twisted_involution(&g, &s, gamma).unwrap();
                    assert!(tw.automorphism().compose(tw.automorphism()).is_identity());
                    let rebased = h1(&g, &tw);
                    // δ ↦ δγ maps Z¹(σ_γ) onto Z¹(σ) ...
                    let mut moved: Vec<usize> =
                        rebased.cocycles.iter().map(|&d| g.mul(d, gamma)).collect();
                    moved.sort_unstable();
                    assert_eq!(moved, base.cocycles, "{spec}");
                    // ... sending classes to classes, with e landing in γ's class.
                    assert_eq!(rebased.len(), base.len());
                    for class in &rebased.classes {
                        let images: Vec<usize> = class
                            .iter()
                            .map(|&d| base.class_of(g.mul(d, gamma)).unwrap())
                            .collect();
                        assert!(images.windows(2).all(|w| w[0] == w[1]));
                    }
                    assert_eq!(
                        base.class_of(g.mul(0, gamma)),
                        base.class_of(gamma)
                    );
                    let fixed = fixed_subgroup(&g, &s, gamma).unwrap();
                    assert_eq!(g.order() % fixed.order(), 0);
                }
            }
        }
    }
}
