//! Groupoids whose objects are pairs `(x, φ)` of an object and an arrow out of
//! it, transported along arrows `f` of the base: the fixed-point groupoid and
//! the inertia groupoid.

use std::collections::HashMap;

use super::{GroupoidInvolution, InvolutionError};
use crate::groupoid::{Arrow, FiniteGroupoid};
use crate::partition::Partition;

/// A groupoid over pairs `(x, φ)`. Its arrows are `(f, k)` with `f` leaving
/// the base object of pair `k`.
#[derive(Clone, Debug)]
pub struct PairGroupoid {
    pub groupoid: FiniteGroupoid,
    /// Pairs `(x, φ)`, sorted.
    pub objects: Vec<(usize, usize)>,
    /// `(f, k)` for each arrow.
    pub arrow_origin: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
}

impl PairGroupoid {
    pub fn object_index(&self, x: usize, phi: usize) -> Option<usize> {
        self.index.get(&(x, phi)).copied()
    }

    /// Base object under pair `k`.
    pub fn base_object(&self, k: usize) -> usize {
        self.objects[k].0
    }

    pub fn coarse_space(&self) -> Partition {
        self.groupoid.coarse_space()
    }
}

/// Builds the pair groupoid; `transport(f, φ)` is the pair data at `t(f)`.
fn transport_groupoid(
    base: &FiniteGroupoid,
    objects: Vec<(usize, usize)>,
    transport: impl Fn(usize, usize) -> usize,
) -> Result<PairGroupoid, InvolutionError> {
    let index: HashMap<(usize, usize), usize> =
        objects.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let mut offset = Vec::with_capacity(objects.len());
    let mut arrows = Vec::new();
    let mut arrow_origin = Vec::new();
    for (k, &(x, phi)) in objects.iter().enumerate() {
        offset.push(arrows.len());
        for &f in base.out_arrows(x) {
            let target = index[&(base.target(f), transport(f, phi))];
            arrows.push(Arrow { source: k, target });
            arrow_origin.push((f, k));
        }
    }
    let at = |f: usize, k: usize| offset[k] + base.out_position(f);
    let identity = objects
        .iter()
        .enumerate()
        .map(|(k, &(x, _))| at(base.identity(x), k))
        .collect();
    let inverse = arrow_origin
        .iter()
        .zip(&arrows)
        .map(|(&(f, _), a)| at(base.inverse(f), a.target))
        .collect();
    let groupoid = FiniteGroupoid::build(objects.len(), arrows, identity, inverse, |j, i| {
        let (g, _) = arrow_origin[j];
        let (f, k) = arrow_origin[i];
        Some(at(base.compose(g, f), k))
    })?;
    Ok(PairGroupoid {
        groupoid,
        objects,
        arrow_origin,
        index,
    })
}

/// Cocycles `(x, φ)` with `φ: x → σx` and `σ(φ)∘φ = e_x`, in `(x, φ)` order.
fn cocycles(x: &FiniteGroupoid, s: &GroupoidInvolution) -> Vec<(usize, usize)> {
    (0..x.object_count())
        .flat_map(|o| {
            x.hom(o, s.object(o))
                .iter()
                .filter(move |&&phi| x.compose(s.arrow(phi), phi) == x.identity(o))
                .map(move |&phi| (o, phi))
        })
        .collect()
}

/// The groupoid of fixed points: objects are cocycles `(x, φ)`; the arrow
/// `(f, (x, φ))` goes to `(t f, σ(f)∘φ∘f⁻¹)`.
pub fn fixed_groupoid(
    x: &FiniteGroupoid,
    s: &GroupoidInvolution,
) -> Result<PairGroupoid, InvolutionError> {
    transport_groupoid(x, cocycles(x, s), |f, phi| {
        x.compose(s.arrow(f), x.compose(phi, x.inverse(f)))
    })
}

/// Objects are loops `φ`; the arrow `(f, φ)` goes to `f∘φ∘f⁻¹`.
pub fn inertia_groupoid(x: &FiniteGroupoid) -> Result<PairGroupoid, InvolutionError> {
    let loops = (0..x.object_count())
        .flat_map(|o| x.loops(o).iter().map(move |&phi| (o, phi)))
        .collect();
    transport_groupoid(x, loops, |f, phi| {
        x.compose(f, x.compose(phi, x.inverse(f)))
    })
}

/// Coarse classes of the fixed groupoid counted without building it: cocycles
/// modulo `(x, φ) ~ (y, φ')` whenever some `f: x → y` has `σ(f)∘φ = φ'∘f`.
pub fn fixed_class_count_direct(x: &FiniteGroupoid, s: &GroupoidInvolution) -> usize {
    let z = cocycles(x, s);
    let mut pairs = Vec::new();
    for (a, &(o, phi)) in z.iter().enumerate() {
        for (b, &(p, psi)) in z.iter().enumerate().skip(a + 1) {
            let related = x
                .hom(o, p)
                .iter()
                .any(|&f| x.compose(s.arrow(f), phi) == x.compose(psi, f));
            if related {
                pairs.push((a, b));
            }
        }
    }
    Partition::from_pairs(z.len(), pairs).len()
}
