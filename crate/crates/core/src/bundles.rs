//! Principal `G`-bundles over `M_{l,m}`.
//!
//! For `pi_6(G) = 0` the bundles are classified by `Z_m` (with `Z_0 = Z`);
//! over `M_{l,1} ≃ S^7` they are classified by `pi_6(G)` for every `G`.

use serde::Serialize;

use crate::abelian::AbGroup;
use crate::error::{out_of_scope, Result};
use crate::manifold::ManifoldSpec;
use crate::tables::{pi6, LieGroupId};

/// The classifying set of bundles, presented as a group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub set: AbGroup,
    /// `None` when the set is countably infinite.
    pub size: Option<u64>,
}

fn require_pi6_vanishes(g: LieGroupId) -> Result<()> {
    if g.pi6_vanishes() {
        Ok(())
    } else {
        Err(out_of_scope(format!(
            "π₆({g}) = {} ≠ 0",
            pi6(g).to_unicode()
        )))
    }
}

pub fn classify_bundles(g: LieGroupId, spec: &ManifoldSpec) -> Result<Classification> {
    let set = match spec.m() {
        1 => pi6(g),
        m => {
            require_pi6_vanishes(g)?;
            AbGroup::cyclic(m)
        }
    };
    let size = set.order();
    Ok(Classification { set, size })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InducedMapKind {
    Bijection,
    Surjection,
    NotCovered,
}

/// What the bundle projection induces on `[-, BG]` from `S^4` to `M_{l,m}`.
pub fn projection_induced_map_kind(m: u64) -> InducedMapKind {
    match m {
        0 => InducedMapKind::Bijection,
        1 => InducedMapKind::NotCovered,
        _ => InducedMapKind::Surjection,
    }
}

/// A bundle over `M_{l,m}` with its class stored in reduced form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BundleClass {
    pub base: ManifoldSpec,
    pub group: LieGroupId,
    pub k: i64,
}

impl BundleClass {
    /// Modulus of the class: `None` for `m = 0`, else the size of the classifying set.
    pub fn modulus(&self) -> Option<u64> {
        match self.base.m() {
            0 => None,
            1 => Some(pi6(self.group).order().unwrap_or(1)),
            m => Some(m),
        }
    }
}

pub fn reduce_class(g: LieGroupId, spec: &ManifoldSpec, k_raw: i64) -> Result<BundleClass> {
    let classes = classify_bundles(g, spec)?;
    let k = match (spec.m(), classes.size) {
        (0, _) => k_raw,
        (_, Some(n)) => (k_raw as i128).rem_euclid(n as i128) as i64,
        (_, None) => unreachable!("only m = 0 has infinitely many classes"),
    };
    Ok(BundleClass {
        base: *spec,
        group: g,
        k,
    })
}
