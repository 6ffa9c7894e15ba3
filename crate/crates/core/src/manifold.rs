//! The total spaces `M_{l,m}` of `S^3`-bundles over `S^4`.
//!
//! `M_{l,m}` is homeomorphic to `M_{-l,-m}` and to `M_{l+m,-m}`. Composing the
//! two, for fixed `m >= 0` the parameters `l` and `-l-m` give the same
//! manifold, so a spec is stored with `m >= 0` and the member of
//! `{l, -l-m}` of least absolute value (nonnegative on a tie).

use std::fmt;

use serde::Serialize;

use crate::abelian::{gcd, vp, AbGroup, Prime};
use crate::error::{invalid, Result};
use crate::expr::{Atom, SpaceExpr};

#[derive(Debug, Clone, Copy, Serialize)]
pub struct ManifoldSpec {
    l: i64,
    m: u64,
    original: (i64, i64),
}

impl PartialEq for ManifoldSpec {
    fn eq(&self, other: &Self) -> bool {
        (self.l, self.m) == (other.l, other.m)
    }
}

impl Eq for ManifoldSpec {}

const PARAM_BOUND: i64 = 1 << 62;

/// Normalize `(l, m)` under the homeomorphism relations.
///
/// Parameters are limited to `|l|, |m| < 2^62` so every representative fits
/// in an `i64`.
pub fn normalize(l: i64, m: i64) -> Result<ManifoldSpec> {
    if l.unsigned_abs() >= PARAM_BOUND as u64 || m.unsigned_abs() >= PARAM_BOUND as u64 {
        return Err(invalid(format!(
            "parameters ({l}, {m}) exceed 2^62 in absolute value"
        )));
    }
    let original = (l, m);
    let (l1, m1) = if m < 0 { (-l, -m) } else { (l, m) };
    let other = -l1 - m1;
    let l = match l1.abs().cmp(&other.abs()) {
        std::cmp::Ordering::Less => l1,
        std::cmp::Ordering::Greater => other,
        std::cmp::Ordering::Equal => l1.max(other),
    };
    Ok(ManifoldSpec {
        l,
        m: m1 as u64,
        original,
    })
}

impl ManifoldSpec {
    pub fn l(&self) -> i64 {
        self.l
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    /// The parameters as first supplied.
    pub fn original(&self) -> (i64, i64) {
        self.original
    }

    /// Class of `l` under `l ~ -l (mod 12)`, as a number in `0..=6`.
    pub fn twist_class(&self) -> u8 {
        let r = self.l.rem_euclid(12);
        r.min(12 - r) as u8
    }
}

impl fmt::Display for ManifoldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M_{{{},{}}}", self.l, self.m)
    }
}

/// Integral homology in degrees `0..=7`.
pub fn homology(spec: &ManifoldSpec) -> [AbGroup; 8] {
    let mut h: [AbGroup; 8] = Default::default();
    h[0] = AbGroup::z();
    h[7] = AbGroup::z();
    match spec.m {
        0 => {
            h[3] = AbGroup::z();
            h[4] = AbGroup::z();
        }
        1 => {}
        m => h[3] = AbGroup::cyclic(m),
    }
    h
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub equivalent: bool,
    pub reason: String,
}

/// Homotopy equivalence of two manifolds (James-Whitehead for `m = 0`,
/// Crowley-Escher for `m > 0`).
pub fn is_homotopy_equivalent(a: &ManifoldSpec, b: &ManifoldSpec) -> Verdict {
    if a.m != b.m {
        return Verdict {
            equivalent: false,
            reason: format!("m differs ({} vs {}), so H_3 or pi_3 differ", a.m, b.m),
        };
    }
    match a.m {
        0 => {
            let (x, y) = (a.l.rem_euclid(12), b.l.rem_euclid(12));
            let equivalent = x == y || (x + y) % 12 == 0;
            Verdict {
                equivalent,
                reason: if equivalent {
                    "l ≡ ±l' mod 12".into()
                } else {
                    "l ≢ ±l' mod 12".into()
                },
            }
        }
        1 => Verdict {
            equivalent: true,
            reason: "both are homotopy equivalent to S^7".into(),
        },
        m => {
            let d = gcd(m, 12) as i64;
            let (x, y) = (a.l.rem_euclid(d), b.l.rem_euclid(d));
            let alpha = (0..d).find(|&al| (al * al) % d == 1 % d && (al * x) % d == y);
            match alpha {
                Some(al) => Verdict {
                    equivalent: true,
                    reason: format!("l' ≡ {al}·l mod {d} with {al}² ≡ 1 mod {d}"),
                },
                None => Verdict {
                    equivalent: false,
                    reason: format!("no α with α² ≡ 1 mod {d} and l' ≡ α·l mod {d}"),
                },
            }
        }
    }
}

/// The 4-skeleton: `S^3 v S^4`, a point, or `P^4(m)`.
pub fn skeleton4(spec: &ManifoldSpec) -> SpaceExpr {
    match spec.m {
        0 => SpaceExpr::wedge([SpaceExpr::sphere(3), SpaceExpr::sphere(4)]),
        m => SpaceExpr::moore(4, m),
    }
}

/// Integral homotopy type of the suspension.
///
/// For `m = 0` this is `Susp(Y_t) v S^5` with `t` the class of `l` mod `±12`,
/// and `S^4 v S^5 v S^8` when `t = 0`. For `m = 1`, `M ≃ S^7` gives `S^8`.
/// For `m >= 2` only a `p`-local answer exists; see [`suspension_plocal`].
pub fn suspension(spec: &ManifoldSpec) -> Result<SpaceExpr> {
    match spec.m {
        0 => Ok(match spec.twist_class() {
            0 => SpaceExpr::wedge([4, 5, 8].map(SpaceExpr::sphere)),
            t => SpaceExpr::wedge([Atom::SuspendedCofibre { t }.into(), SpaceExpr::sphere(5)]),
        }),
        1 => Ok(SpaceExpr::sphere(8)),
        m => Err(crate::error::out_of_scope(format!(
            "no integral splitting of the suspension is known for m = {m}; use the p-local form"
        ))),
    }
}

/// `p`-local suspension `P^5(p^r) v S^8` for `m >= 2`, `p >= 5`, `r = v_p(m)`.
pub fn suspension_plocal(spec: &ManifoldSpec, p: Prime) -> Result<SpaceExpr> {
    if p.value() < 5 {
        return Err(invalid(format!("prime {p} must be at least 5")));
    }
    if spec.m < 2 {
        return Err(invalid(format!(
            "p-local suspension needs m >= 2, got m = {}",
            spec.m
        )));
    }
    let r = vp(spec.m, p)?;
    Ok(SpaceExpr::localized(
        p,
        SpaceExpr::wedge([SpaceExpr::moore(5, p.pow(r)?), SpaceExpr::sphere(8)]),
    ))
}

/// Cofibre of the inclusion of the bottom cell, `S^4 v S^7` for `m != 1`.
pub fn cofibre_of_bottom_cell(spec: &ManifoldSpec) -> Result<SpaceExpr> {
    if spec.m == 1 {
        return Err(crate::error::out_of_scope(
            "the bottom-cell cofibre splitting is only established for m != 1",
        ));
    }
    Ok(SpaceExpr::wedge([
        SpaceExpr::sphere(4),
        SpaceExpr::sphere(7),
    ]))
}
