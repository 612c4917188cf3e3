//! Size caps shared by the constructions.
//!
//! Defaults can be overridden through environment variables:
//! `INVOLUT_MAX_GROUP_ORDER`, `INVOLUT_ENUM_CAP` and `INVOLUT_MAX_ARROWS`.

use std::env;
use std::sync::OnceLock;

/// Hard ceiling on group order: elements are stored as `u16` in Cayley tables.
pub const MAX_REPRESENTABLE_ORDER: usize = u16::MAX as usize + 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest group accepted by the group constructors.
    pub group_order: usize,
    /// Largest group on which automorphism or isomorphism backtracking is run.
    pub enumeration: usize,
    /// Largest arrow pool a groupoid construction may produce.
    pub arrows: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            group_order: 10_000,
            enumeration: 24,
            arrows: 100_000,
        }
    }
}

impl Limits {
    /// Process-wide limits, read from the environment once.
    pub fn global() -> &'static Limits {
        static GLOBAL: OnceLock<Limits> = OnceLock::new();
        GLOBAL.get_or_init(Limits::from_env)
    }

    /// Defaults with any environment overrides applied. Unparseable values are ignored.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(v) = read_var("INVOLUT_MAX_GROUP_ORDER") {
            limits.group_order = v.min(MAX_REPRESENTABLE_ORDER);
        }
        if let Some(v) = read_var("INVOLUT_ENUM_CAP") {
            limits.enumeration = v;
        }
        if let Some(v) = read_var("INVOLUT_MAX_ARROWS") {
            limits.arrows = v;
        }
        limits
    }
}

fn read_var(name: &str) -> Option<usize> {
    env::var(name).ok()?.trim().parse().ok()
}
