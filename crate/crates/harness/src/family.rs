use involut_core::group::{enumerate_involutive_automorphisms, make_group, FiniteGroup, GroupError, GroupInvolution};

use crate::config::SweepConfig;
use crate::HarnessError;

#[derive(Clone, Debug)]
pub struct FamilyGroup {
    pub spec: String,
    pub group: FiniteGroup,
    /// Involutive automorphisms, identity first, or the cap that stopped the search.
    pub involutions: Result<Vec<GroupInvolution>, GroupError>,
}

/// The configured groups within the order cap, in configuration order.
#[derive(Clone, Debug)]
pub struct Family {
    pub groups: Vec<FamilyGroup>,
}

impl Family {
    pub fn from_config(cfg: &SweepConfig) -> Result<Self, HarnessError> {
        let mut groups = Vec::new();
        for spec in &cfg.group_family {
            let group = make_group(spec)?;
            if group.order() > cfg.max_group_order {
                continue;
            }
            let involutions = enumerate_involutive_automorphisms(&group);
            groups.push(FamilyGroup {
                spec: spec.clone(),
                group,
                involutions,
            });
        }
        if groups.is_empty() {
            return Err(HarnessError::Config(format!(
                "no group in the family has order at most {}",
                cfg.max_group_order
            )));
        }
        Ok(Family { groups })
    }
}
