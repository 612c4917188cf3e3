//! The verification checks, registered by name.

use std::collections::{BTreeMap, HashMap};

use involut_core::group::{GroupError, GroupInvolution};
use involut_core::groupoid::{full_subgroupoid, GroupoidError, GroupoidFunctor};
use involut_core::h1::{h1, sawin_report};
use involut_core::involution::{
    family_h1, fixed_class_count_direct, fixed_decomposition_check, fixed_functor,
    fixed_groupoid, h1_fiber_with, inertia_fiber, make_involution, smith_thom_check,
    FiniteGroupFamily, InvolutionError,
};
use involut_core::poincare::{sum_h1_ratios, Catalog, PoincareError};
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::SweepConfig;
use crate::family::Family;
use crate::instance::{random_instance_in, Instance};
use crate::rng::{instance_seeds, Rng};
use crate::HarnessError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub index: usize,
    pub subject: String,
    pub seed: Option<u64>,
    pub hash: Option<String>,
    pub outcome: Outcome,
    pub values: BTreeMap<String, Value>,
    pub detail: Option<String>,
    /// Enough to rerun this single case; present on failures.
    pub replay: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WorkItem {
    /// A family group with one of its involutive automorphisms, or `None`
    /// when the automorphism search hit a cap.
    Group {
        index: usize,
        group: usize,
        involution: Option<usize>,
    },
    Instance {
        index: usize,
        seed: u64,
    },
}

impl WorkItem {
    pub fn index(&self) -> usize {
        match *self {
            WorkItem::Group { index, .. } | WorkItem::Instance { index, .. } => index,
        }
    }
}

pub trait Check: Send + Sync {
    fn name(&self) -> &'static str;
    fn plan(&self, cfg: &SweepConfig, family: &Family) -> Vec<WorkItem>;
    fn run(&self, item: &WorkItem, cfg: &SweepConfig, family: &Family) -> Record;
}

pub struct Sawin;
pub struct SmithThom;
pub struct Decomposition;
pub struct Fibers;
pub struct Series;

static CHECKS: [&dyn Check; 5] = [&Sawin, &SmithThom, &Decomposition, &Fibers, &Series];

pub fn checks() -> &'static [&'static dyn Check] {
    &CHECKS
}

pub fn check(name: &str) -> Option<&'static dyn Check> {
    CHECKS.iter().copied().find(|c| c.name() == name)
}

pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.name()).collect()
}

/// Every family group paired with each of its involutive automorphisms.
fn group_plan(family: &Family) -> Vec<WorkItem> {
    let mut items = Vec::new();
    for (group, g) in family.groups.iter().enumerate() {
        match &g.involutions {
            Ok(list) => {
                let start = items.len();
                items.extend((0..list.len()).map(|k| WorkItem::Group {
                    index: start + k,
                group,
                    involution: Some(k),
                }))
            }
            Err(_) => items.push(WorkItem::Group {
                index: items.len(),
                group,
                involution: None,
            }),
        }
    }
    items
}

fn instance_plan(cfg: &SweepConfig) -> Vec<WorkItem> {
    instance_seeds(cfg.seed, cfg.instance_count)
        .into_iter()
        .enumerate()
        .map(|(index, seed)| WorkItem::Instance { index, seed })
        .collect()
}

fn values_of<T: Serialize>(v: &T) -> BTreeMap<String, Value> {
    match serde_json::to_value(v).expect("serialisable") {
        Value::Object(m) => m.into_iter().collect(),
        other => BTreeMap::from([("value".to_string(), other)]),
    }
}

fn is_cap(e: &HarnessError) -> bool {
    matches!(
        e,
        HarnessError::Skip(_)
            | HarnessError::Group(GroupError::EnumerationCap { .. } | GroupError::TooLarge { .. })
            | HarnessError::Groupoid(GroupoidError::TooLarge { .. })
            | HarnessError::Involution(InvolutionError::Groupoid(GroupoidError::TooLarge { .. }))
            | HarnessError::Involution(InvolutionError::Group(GroupError::EnumerationCap { .. }))
            | HarnessError::Poincare(PoincareError::Group(GroupError::EnumerationCap { .. }))
    )
}

/// Outcome of a check body: measured values and whether they pass.
type Measured = Result<(BTreeMap<String, Value>, bool), HarnessError>;

fn finish(base: Record, measured: Measured) -> Record {
    let mut r = base;
    match measured {
        Ok((values, holds)) => {
            r.values = values;
            r.outcome = if holds { Outcome::Pass } else { Outcome::Fail };
        }
        Err(e) if is_cap(&e) => {
            r.outcome = Outcome::Skip;
            r.detail = Some(e.to_string());
        }
        Err(e) => {
            r.outcome = Outcome::Fail;
            r.detail = Some(e.to_string());
        }
    }
    if r.outcome != Outcome::Fail {
        r.replay = None;
    }
    r
}

fn run_group_item(
    item: &WorkItem,
    family: &Family,
    body: impl FnOnce(&involut_core::group::FiniteGroup, &GroupInvolution) -> Measured,
) -> Record {
    let WorkItem::Group {
        index,
        group,
        involution,
    } = *item
    else {
        panic!("group check given {item:?}");
    };
    let g = &family.groups[group];
    let mut base = Record {
        index,
        subject: g.spec.clone(),
        seed: None,
        hash: None,
        outcome: Outcome::Skip,
        values: BTreeMap::new(),
        detail: None,
        replay: None,
    };
    let (Some(k), Ok(list)) = (involution, &g.involutions) else {
        base.detail = g.involutions.as_ref().err().map(ToString::to_string);
        return base;
    };
    let s = &list[k];
    base.subject = format!("{} σ#{k}", g.spec);
    base.replay = Some(format!("group {} involution {:?}", g.spec, s.map()));
    finish(base, body(&g.group, s))
}

fn run_instance_item(
    item: &WorkItem,
    cfg: &SweepConfig,
    family: &Family,
    body: impl FnOnce(&Instance) -> Measured,
) -> Record {
    let WorkItem::Instance { index, seed } = *item else {
        panic!("instance check given {item:?}");
    };
    let mut base = Record {
        index,
        subject: format!("instance {seed}"),
        seed: Some(seed),
        hash: None,
        outcome: Outcome::Skip,
        values: BTreeMap::new(),
        detail: None,
        replay: None,
    };
    let inst = match random_instance_in(seed, cfg, family) {
        Ok(inst) => inst,
        Err(e) => return finish(base, Err(e)),
    };
    base.subject = format!("{} {} |X|={}", inst.group_spec, inst.strategy, inst.action.points());
    base.hash = Some(inst.hash.clone());
    base.replay = Some(inst.dump.clone());
    finish(base, body(&inst))
}

impl Check for Sawin {
    fn name(&self) -> &'static str {
        "sawin"
    }

    fn plan(&self, _cfg: &SweepConfig, family: &Family) -> Vec<WorkItem> {
        group_plan(family)
    }

    fn run(&self, item: &WorkItem, _cfg: &SweepConfig, family: &Family) -> Record {
        run_group_item(item, family, |g, s| {
            let r = sawin_report(g, s);
            Ok((values_of(&r), r.holds()))
        })
    }
}

impl Check for Decomposition {
    fn name(&self) -> &'static str {
        "decomposition"
    }

    fn plan(&self, _cfg: &SweepConfig, family: &Family) -> Vec<WorkItem> {
        group_plan(family)
    }

    fn run(&self, item: &WorkItem, _cfg: &SweepConfig, family: &Family) -> Record {
        run_group_item(item, family, |g, s| {
            let r = fixed_decomposition_check(g, s)?;
            Ok((values_of(&r), r.holds))
        })
    }
}

impl Check for Series {
    fn name(&self) -> &'static str {
        "series"
    }

    fn plan(&self, _cfg: &SweepConfig, family: &Family) -> Vec<WorkItem> {
        group_plan(family)
    }

    fn run(&self, item: &WorkItem, _cfg: &SweepConfig, family: &Family) -> Record {
        run_group_item(item, family, |g, s| match sum_h1_ratios(g, s, &Catalog::builtin()) {
            Ok(sum) => Ok((values_of(&sum), true)),
            Err(PoincareError::NotInCatalog { label }) => {
                Err(HarnessError::Skip(format!("{label} is not in the catalog")))
            }
            Err(e) => Err(e.into()),
        })
    }
}

impl Check for SmithThom {
    fn name(&self) -> &'static str {
        "smith-thom"
    }

    fn plan(&self, cfg: &SweepConfig, _family: &Family) -> Vec<WorkItem> {
        instance_plan(cfg)
    }

    fn run(&self, item: &WorkItem, cfg: &SweepConfig, family: &Family) -> Record {
        run_instance_item(item, cfg, family, |inst| {
            let r = smith_thom_check(&inst.groupoid, &inst.involution)?;
            let direct = fixed_class_count_direct(&inst.groupoid, &inst.involution);
            let mut values = values_of(&r);
            values.insert("fixed_classes_direct".into(), json!(direct));
            Ok((values, r.holds && direct == r.fixed_classes))
        })
    }
}

impl Check for Fibers {
    fn name(&self) -> &'static str {
        "fibers"
    }

    fn plan(&self, cfg: &SweepConfig, _family: &Family) -> Vec<WorkItem> {
        instance_plan(cfg)
    }

    fn run(&self, item: &WorkItem, cfg: &SweepConfig, family: &Family) -> Record {
        run_instance_item(item, cfg, family, fiber_checks)
    }
}

fn fiber_checks(inst: &Instance) -> Measured {
    let (x, s, action) = (&inst.groupoid, &inst.involution, &inst.action);
    let mut values = BTreeMap::new();

    let mut inertia = Vec::new();
    for orbit in action.orbits().blocks() {
        let r = inertia_fiber(action, orbit)?;
        inertia.push(json!([r.brute_force, r.formula]));
    }
    values.insert("inertia_fibers".into(), Value::Array(inertia));

    let fixed = fixed_groupoid(x, s)?;
    let coarse = x.coarse_space();
    let mut fibers = Vec::new();
    for rep in coarse.representatives() {
        if coarse.block_of(s.object(rep)) != coarse.block_of(rep) {
            continue;
        }
        let r = h1_fiber_with(x, s, &fixed, rep)?;
        fibers.push(json!([rep, r.brute_force, r.h1, r.h1_alternative]));
    }
    values.insert("h1_fibers".into(), Value::Array(fibers));

    let (objects, ok) = skeleton_functor_check(inst)?;
    values.insert("skeleton_objects".into(), json!(objects));
    values.insert("fixed_functor_equivalence".into(), json!(ok));

    let (per_point, family_ok) = stabilizer_family_check(inst)?;
    values.insert("family_h1".into(), json!(per_point));
    values.insert("family_matches_fibers".into(), json!(family_ok));

    values.insert("fixed_classes".into(), json!(fixed.coarse_space().len()));
    Ok((values, ok && family_ok))
}

/// Inclusion of a σ-stable full subgroupoid meeting every coarse class, with
/// representatives drawn at random; it is an equivariant equivalence, so the
/// induced functor on fixed groupoids must be one too.
fn skeleton_functor_check(inst: &Instance) -> Result<(Vec<usize>, bool), HarnessError> {
    let (x, s) = (&inst.groupoid, &inst.involution);
    let mut rng = Rng::new(inst.seed ^ 0x5bd1_e995);
    let mut objects = Vec::new();
    for block in x.coarse_space().blocks() {
        let r = *rng.pick(block);
        objects.push(r);
        objects.push(s.object(r));
    }
    objects.sort_unstable();
    objects.dedup();
    let sub = full_subgroupoid(x, &objects);
    let local_object: HashMap<usize, usize> =
        objects.iter().enumerate().map(|(k, &o)| (o, k)).collect();
    let local_arrow: HashMap<usize, usize> =
        sub.arrow_map.iter().enumerate().map(|(k, &f)| (f, k)).collect();
    let s_sub = make_involution(
        &sub.groupoid,
        objects.iter().map(|&o| local_object[&s.object(o)]).collect(),
        sub.arrow_map.iter().map(|&f| local_arrow[&s.arrow(f)]).collect(),
    )?;
    let inclusion = GroupoidFunctor::new(&sub.groupoid, x, sub.object_map.clone(), sub.arrow_map.clone())?;
    let ff = fixed_functor(&inclusion, &s_sub, s)?;
    Ok((objects, ff.original.holds && ff.induced.holds && ff.coarse_bijection))
}

/// The family of stabilizers `Stab(x)` over `X`, glued by `σ_Γ`.
fn stabilizer_family_check(inst: &Instance) -> Result<(Vec<(usize, usize)>, bool), HarnessError> {
    let (action, sg) = (&inst.action, &inst.sigma_g);
    let sx = inst.involution.object_map();
    let stabs = (0..action.points())
        .map(|p| action.stabilizer(p))
        .collect::<Result<Vec<_>, _>>()?;
    let maps = (0..action.points())
        .map(|p| {
            let target = &stabs[sx[p]];
            stabs[p]
                .embedding
                .iter()
                .map(|&h| {
                    target
                        .embedding
                        .binary_search(&sg.apply(h))
                        .map_err(|_| HarnessError::Bug(format!("σ_Γ does not map Stab({p}) into Stab(σ{p})")))
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let fibers = stabs.iter().map(|h| h.group.clone()).collect();
    let fam = FiniteGroupFamily::new(sx.to_vec(), fibers, maps)?;
    let r = family_h1(&fam)?;
    let mut ok = true;
    for &(u, n) in &r.per_point {
        let inv = fam
            .fiber_involution(u)
            .ok_or_else(|| HarnessError::Bug(format!("no fiber involution at {u}")))?;
        ok &= h1(&fam.fibers()[u], &inv).len() == n;
    }
    Ok((r.per_point, ok))
}
