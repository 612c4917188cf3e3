//! Seeded random action groupoids with compatible involutions.
//!
//! An instance picks a group from the family, then an involution strategy;
//! the strategy builds a Γ-set out of coset spaces `Γ/H` (each `H` the closure
//! of a few random elements) and an involution `σ_X` compatible with some
//! involutive automorphism `σ_Γ`.

use std::fmt::Write;

use involut_core::action::GroupAction;
use involut_core::group::{GroupInvolution, Subgroup};
use involut_core::groupoid::dump::write_instance;
use involut_core::groupoid::{action_groupoid, FiniteGroupoid};
use involut_core::involution::{equivariant_action_involution, make_involution, GroupoidInvolution};
use sha2::{Digest, Sha256};

use crate::config::SweepConfig;
use crate::family::{Family, FamilyGroup};
use crate::rng::Rng;
use crate::HarnessError;

/// Largest Γ-set the exhaustive strategy searches.
pub const EXHAUSTIVE_MAX_POINTS: usize = 8;

/// A Γ-set with an involution compatible with `sigma_g`.
#[derive(Clone, Debug)]
pub struct Attached {
    pub action: GroupAction,
    pub sigma_x: Vec<usize>,
    pub sigma_g: GroupInvolution,
}

pub trait InvolutionStrategy: Send + Sync {
    fn name(&self) -> &'static str;
    /// Builds a Γ-set of at most `budget` points (at least one) with an involution.
    fn attach(&self, g: &FamilyGroup, budget: usize, rng: &mut Rng) -> Attached;
}

/// Trivial involution on both the set and the group.
pub struct Trivial;

/// `Y ⊔ Ȳ ⊔ Z`: `Ȳ` is `Y` with the action twisted by `σ_Γ`, `σ_X` swaps the
/// two copies, and `Z` is a handful of points fixed by everything.
pub struct Doubling;

/// A random point involution among all those compatible with a random `σ_Γ`,
/// found by listing every involution of a set of at most eight points.
pub struct Exhaustive;

static STRATEGIES: [&dyn InvolutionStrategy; 3] = [&Trivial, &Doubling, &Exhaustive];

pub fn strategies() -> &'static [&'static dyn InvolutionStrategy] {
    &STRATEGIES
}

pub fn strategy(name: &str) -> Option<&'static dyn InvolutionStrategy> {
    STRATEGIES.iter().copied().find(|s| s.name() == name)
}

fn random_subgroup(g: &FamilyGroup, rng: &mut Rng) -> Subgroup {
    let group = &g.group;
    let gens: Vec<usize> = (0..rng.below(3)).map(|_| rng.below(group.order())).collect();
    let elems = group.closure(&gens);
    Subgroup::from_elements(group, elems, "H".into()).expect("a closure is a subgroup")
}

/// One to three coset spaces, at most `budget` points in total.
fn random_coset_space(g: &FamilyGroup, budget: usize, rng: &mut Rng) -> GroupAction {
    let group = &g.group;
    let pieces = rng.between(1, 3);
    let mut parts = Vec::new();
    let mut used = 0;
    for _ in 0..pieces {
        let h = random_subgroup(g, rng);
        let index = group.order() / h.order();
        if used + index <= budget {
            parts.push(GroupAction::on_cosets(group.clone(), &h));
            used += index;
        } else if used < budget {
            parts.push(GroupAction::trivial(group.clone(), 1));
            used += 1;
        }
    }
    if parts.is_empty() {
        parts.push(GroupAction::trivial(group.clone(), 1));
    }
    GroupAction::disjoint_union(&parts).expect("parts share the group")
}

fn random_group_involution(g: &FamilyGroup, rng: &mut Rng) -> GroupInvolution {
    match &g.involutions {
        Ok(list) => rng.pick(list).clone(),
        Err(_) => GroupInvolution::trivial(&g.group),
    }
}

impl InvolutionStrategy for Trivial {
    fn name(&self) -> &'static str {
        "trivial"
    }

    fn attach(&self, g: &FamilyGroup, budget: usize, rng: &mut Rng) -> Attached {
        let action = random_coset_space(g, budget, rng);
        Attached {
            sigma_x: (0..action.points()).collect(),
            sigma_g: GroupInvolution::trivial(&g.group),
            action,
        }
    }
}

impl InvolutionStrategy for Doubling {
    fn name(&self) -> &'static str {
        "doubling"
    }

    fn attach(&self, g: &FamilyGroup, budget: usize, rng: &mut Rng) -> Attached {
        let group = &g.group;
        if budget < 2 {
            return Trivial.attach(g, budget, rng);
        }
        let fixed = rng.below(3.min(budget - 1));
        let y = random_coset_space(g, (budget - fixed) / 2, rng);
        let sigma_g = random_group_involution(g, rng);
        let y_bar = GroupAction::new(group.clone(), y.points(), |a, p| y.act(sigma_g.apply(a), p))
            .expect("twisting by an automorphism preserves the action");
        let n = y.points();
        let action = GroupAction::disjoint_union(&[
            y,
            y_bar,
            GroupAction::trivial(group.clone(), fixed),
        ])
        .expect("parts share the group");
        let sigma_x = (0..n)
            .map(|p| p + n)
            .chain(0..n)
            .chain(2 * n..2 * n + fixed)
            .collect();
        Attached {
            action,
            sigma_x,
            sigma_g,
        }
    }
}

fn compatible(action: &GroupAction, sigma_x: &[usize], sigma_g: &GroupInvolution) -> bool {
    action.group().elements().all(|a| {
        (0..action.points())
            .all(|p| sigma_x[action.act(a, p)] == action.act(sigma_g.apply(a), sigma_x[p]))
    })
}

/// Every involution of `0..n`, as permutations.
pub fn point_involutions(n: usize) -> Vec<Vec<usize>> {
    fn go(perm: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some(i) = perm.iter().position(|&p| p == usize::MAX) else {
            out.push(perm.clone());
            return;
        };
        perm[i] = i;
        go(perm, out);
        for j in i + 1..perm.len() {
            if perm[j] == usize::MAX {
                perm[i] = j;
                perm[j] = i;
                go(perm, out);
                perm[j] = usize::MAX;
            }
        }
        perm[i] = usize::MAX;
    }
    let mut out = Vec::new();
    go(&mut vec![usize::MAX; n], &mut out);
    out
}

impl InvolutionStrategy for Exhaustive {
    fn name(&self) -> &'static str {
        "exhaustive"
    }

    fn attach(&self, g: &FamilyGroup, budget: usize, rng: &mut Rng) -> Attached {
        let action = random_coset_space(g, budget.min(EXHAUSTIVE_MAX_POINTS), rng);
        let all = point_involutions(action.points());
        let mut sigma_g = random_group_involution(g, rng);
        let mut found: Vec<&Vec<usize>> =
            all.iter().filter(|s| compatible(&action, s, &sigma_g)).collect();
        if found.is_empty() {
            // the identity is compatible with the trivial σ_Γ
            sigma_g = GroupInvolution::trivial(&g.group);
            found = all.iter().filter(|s| compatible(&action, s, &sigma_g)).collect();
        }
        let sigma_x = rng.pick(&found).to_vec();
        Attached {
            action,
            sigma_x,
            sigma_g,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub seed: u64,
    pub group_spec: String,
    pub strategy: &'static str,
    pub action: GroupAction,
    pub sigma_g: GroupInvolution,
    pub groupoid: FiniteGroupoid,
    pub involution: GroupoidInvolution,
    pub dump: String,
    /// SHA-256 of the dump, lowercase hex.
    pub hash: String,
}

pub fn sha256_hex(text: &str) -> String {
    Sha256::digest(text.as_bytes())
        .iter()
        .fold(String::with_capacity(64), |mut s, b| {
            write!(s, "{b:02x}").unwrap();
            s
        })
}

/// Regenerates the instance with the given seed.
pub fn random_instance(seed: u64, cfg: &SweepConfig) -> Result<Instance, HarnessError> {
    random_instance_in(seed, cfg, &Family::from_config(cfg)?)
}

pub fn random_instance_in(
    seed: u64,
    cfg: &SweepConfig,
    family: &Family,
) -> Result<Instance, HarnessError> {
    let mut rng = Rng::new(seed);
    let g = rng.pick(&family.groups);
    let strategy = *rng.pick(strategies());
    let Attached {
        action,
        sigma_x,
        sigma_g,
    } = strategy.attach(g, cfg.max_set_size, &mut rng);
    let groupoid = action_groupoid(&action)?;
    let involution = equivariant_action_involution(&action, &sigma_x, &sigma_g)?;
    // both are correct by construction; a failure here is a bug
    if let Err(v) = groupoid.validate() {
        return Err(HarnessError::Bug(format!("action groupoid invalid: {v:?}")));
    }
    make_involution(
        &groupoid,
        involution.object_map().to_vec(),
        involution.arrow_map().to_vec(),
    )
    .map_err(|e| HarnessError::Bug(format!("attached involution invalid: {e}")))?;
    let dump = write_instance(&groupoid, involution.object_map(), involution.arrow_map());
    let hash = sha256_hex(&dump);
    Ok(Instance {
        seed,
        group_spec: g.spec.clone(),
        strategy: strategy.name(),
        action,
        sigma_g,
        groupoid,
        involution,
        dump,
        hash,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn involution_counts() {
        // telephone numbers
        let counts: Vec<usize> = (0..=8).map(|n| point_involutions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 10, 26, 76, 232, 764]);
    }

    #[test]
    fn sha256_known_value() {
        assert_eq!(
            sha256_hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }
}
