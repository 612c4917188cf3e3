//! Randomised invariants over small action groupoids with involutions.

use std::collections::BTreeSet;

use involut_core::action::GroupAction;
use involut_core::group::{enumerate_involutive_automorphisms, is_isomorphic, make_group, FiniteGroup, GroupInvolution, Subgroup};
use involut_core::groupoid::dump::{parse_dump, write_groupoid, write_instance};
use involut_core::groupoid::{action_groupoid, automorphism_group_at, disjoint_union, FiniteGroupoid};
use involut_core::h1::{h1, z1};
use involut_core::involution::{
    equivariant_action_involution, fixed_class_count_direct, fixed_groupoid, inertia_groupoid,
    GroupoidInvolution,
};
use involut_core::poincare::{series_coefficients, Polynomial, RationalFunction};
use num_rational::BigRational;
use proptest::prelude::*;

const GROUPS: &[&str] = &["C1", "C2", "C3", "C4", "C2xC2", "S3", "C6", "D8", "C2xC4", "D10", "D12"];

fn subgroup(g: &FiniteGroup, gens: &[usize]) -> Subgroup {
    let gens: Vec<usize> = gens.iter().map(|&a| a % g.order()).collect();
    Subgroup::from_elements(g, g.closure(&gens), "H".into()).unwrap()
}

/// `Y ⊔ Ȳ` with `σ_X` swapping the copies; `Ȳ` is twisted by `σ_Γ`.
fn doubled(g: &FiniteGroup, pieces: &[Vec<usize>], pick: usize) -> (GroupAction, Vec<usize>, GroupInvolution) {
    let parts: Vec<GroupAction> =
        pieces.iter().map(|gens| GroupAction::on_cosets(g.clone(), &subgroup(g, gens))).collect();
    let y = GroupAction::disjoint_union(&parts).unwrap();
    let invs = enumerate_involutive_automorphisms(g).unwrap();
    let s = invs[pick % invs.len()].clone();
    let y_bar = GroupAction::new(g.clone(), y.points(), |a, p| y.act(s.apply(a), p)).unwrap();
    let n = y.points();
    let action = GroupAction::disjoint_union(&[y, y_bar]).unwrap();
    let sigma_x = (n..2 * n).chain(0..n).collect();
    (action, sigma_x, s)
}

fn instance() -> impl Strategy<Value = (FiniteGroupoid, GroupoidInvolution)> {
    (0..GROUPS.len(), prop::collection::vec(prop::collection::vec(0usize..64, 0..3), 1..3), 0usize..64)
        .prop_map(|(gi, pieces, pick)| {
            let g = make_group(GROUPS[gi]).unwrap();
            let (action, sx, s) = doubled(&g, &pieces, pick);
            let x = action_groupoid(&action).unwrap();
            let inv = equivariant_action_involution(&action, &sx, &s).unwrap();
            (x, inv)
        })
}

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-4i64..5, 1..5).prop_map(|c| Polynomial::from_ints(&c))
}

/// Orbits of `β·γ = βγσ(β)⁻¹` on `Z¹`, straight from the definition.
fn naive_h1(g: &FiniteGroup, s: &GroupInvolution) -> usize {
    let cocycles: Vec<usize> = g.elements().filter(|&c| g.mul(c, s.apply(c)) == 0).collect();
    let orbits: BTreeSet<BTreeSet<usize>> = cocycles
        .iter()
        .map(|&c| g.elements().map(|b| g.mul(g.mul(b, c), g.inv(s.apply(b)))).collect())
        .collect();
    orbits.len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn constructions_validate((x, s) in instance()) {
        prop_assert!(x.validate().is_ok());
        prop_assert!(fixed_groupoid(&x, &s).unwrap().groupoid.validate().is_ok());
        prop_assert!(inertia_groupoid(&x).unwrap().groupoid.validate().is_ok());
    }

    #[test]
    fn dump_round_trip((x, s) in instance()) {
        let text = write_instance(&x, s.object_map(), s.arrow_map());
        let d = parse_dump(&text).unwrap();
        prop_assert_eq!(write_groupoid(&d.groupoid), write_groupoid(&x));
        prop_assert_eq!(d.sigma, Some((s.object_map().to_vec(), s.arrow_map().to_vec())));
    }

    #[test]
    fn coarse_counts_add((a, _) in instance(), (b, _) in instance()) {
        let u = disjoint_union([&a, &b]);
        prop_assert_eq!(u.coarse_space().len(), a.coarse_space().len() + b.coarse_space().len());
    }

    #[test]
    fn automorphism_groups_agree_within_classes((x, _) in instance()) {
        for block in x.coarse_space().blocks() {
            let first = automorphism_group_at(&x, block[0]).group;
            for &o in &block[1..] {
                prop_assert!(is_isomorphic(&first, &automorphism_group_at(&x, o).group).unwrap());
            }
        }
    }

    #[test]
    fn fixed_classes_match_direct_quotient((x, s) in instance()) {
        let fixed = fixed_groupoid(&x, &s).unwrap();
        prop_assert_eq!(fixed.coarse_space().len(), fixed_class_count_direct(&x, &s));
        let inertia = inertia_groupoid(&x).unwrap();
        prop_assert!(fixed.coarse_space().len() <= inertia.coarse_space().len());
    }

    #[test]
    fn h1_matches_definition(gi in 0..GROUPS.len(), pick in 0usize..64) {
        let g = make_group(GROUPS[gi]).unwrap();
        let invs = enumerate_involutive_automorphisms(&g).unwrap();
        let s = &invs[pick % invs.len()];
        let set = h1(&g, s);
        prop_assert_eq!(set.len(), naive_h1(&g, s));
        prop_assert_eq!(set.classes.iter().map(Vec::len).sum::<usize>(), z1(&g, s).len());
    }

    #[test]
    fn division_then_multiplication(a in poly(), b in poly(), c in poly(), d in poly()) {
        prop_assume!(!b.is_zero() && !d.is_zero() && !c.is_zero());
        let f = RationalFunction::new(a, b).unwrap();
        let g = RationalFunction::new(c, d).unwrap();
        prop_assert_eq!(f.div(&g).unwrap().mul(&g), f);
    }

    #[test]
    fn series_of_product_is_convolution(a in poly(), b in poly()) {
        let one = Polynomial::from_ints(&[1]);
        let den = Polynomial::from_ints(&[1, -1]);
        let f = RationalFunction::new(a, one.clone()).unwrap().div(&RationalFunction::new(den.clone(), one).unwrap()).unwrap();
        let g = RationalFunction::new(b, den).unwrap();
        let n = 12;
        let (sf, sg) = (series_coefficients(&f, n).unwrap(), series_coefficients(&g, n).unwrap());
        let sp = series_coefficients(&f.mul(&g), n).unwrap();
        for k in 0..=n {
            let conv: BigRational = (0..=k).map(|i| &sf[i] * &sg[k - i]).sum();
            prop_assert_eq!(&sp[k], &conv);
        }
    }
}
