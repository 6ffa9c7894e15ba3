//! Gauge groups of principal `G`-bundles over `M_{l,m}` and over `S^7`.
//!
//! Decompositions are returned as canonical [`SpaceExpr`]s. Pieces the
//! theory leaves undetermined (`G^k(S^4)`, `Map_*(Y_l, G)` for `l ≢ 0 mod 12`,
//! and the fibre `X_k`) stay opaque atoms and are always reported in
//! `caveats`.
//!
//! Homotopy groups with coefficients follow the convention
//! `pi_i(G; Z_q) = pi_i(G) ⊗ Z_q ⊕ Tor(pi_{i-1}(G), Z_q)`, and the
//! `n`-th homotopy group of `O^j[G]{q}` is `pi_{n+j}(G; Z_q)`.

use std::fmt;

use serde::Serialize;

use crate::abelian::{gcd, vp, AbGroup, Locality, Prime};
use crate::error::{invalid, out_of_scope, Error, Result};
use crate::expr::{Atom, SpaceExpr};
use crate::tables::{self, pi6, Family, LieGroupId, SpaceKey, TableEntry};

pub mod tags {
    pub const UNPOINTED_TORSION_FREE: &str = "unpointed-splitting-torsion-free";
    pub const POINTED_TORSION_FREE: &str = "pointed-splitting-torsion-free";
    pub const UNPOINTED_PLOCAL: &str = "unpointed-splitting-p-local";
    pub const POINTED_PLOCAL: &str = "pointed-splitting-p-local";
    pub const PI_POINTED_TORSION_FREE: &str = "pointed-homotopy-groups-torsion-free";
    pub const PI_POINTED_PLOCAL: &str = "pointed-homotopy-groups-p-local";
    pub const PI0_TORSION_FREE: &str = "path-components-torsion-free";
    pub const PI0_PLOCAL: &str = "path-components-p-local";
    pub const COEFFICIENTS: &str = "universal-coefficients-for-homotopy";
    pub const S7: &str = "gauge-groups-over-s7";
    pub const SU5: &str = "su5-gauge-groups-torsion-free";
}

/// Where a homotopy equivalence is asserted to hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Localization {
    Integral,
    Rational,
    AtPrime(Prime),
}

impl fmt::Display for Localization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Localization::Integral => write!(f, "integral"),
            Localization::Rational => write!(f, "rational"),
            Localization::AtPrime(p) => write!(f, "p={p}"),
        }
    }
}

impl Serialize for Localization {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl std::str::FromStr for Localization {
    type Err = Error;

    /// `integral`, `rational`, or a prime such as `3` or `p=3`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        match t.as_str() {
            "integral" | "z" => Ok(Localization::Integral),
            "rational" | "q" => Ok(Localization::Rational),
            _ => {
                let digits = t.strip_prefix("p=").unwrap_or(&t);
                let p: u64 = digits
                    .parse()
                    .map_err(|_| Error::Parse(format!("unknown locality '{s}'")))?;
                Ok(Localization::AtPrime(Prime::new(p)?))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionResult {
    pub expr: SpaceExpr,
    pub pointed: bool,
    /// Number of loopings of the gauge group the expression describes.
    pub looped: u32,
    pub caveats: Vec<String>,
    pub theorem: &'static str,
    pub statement: String,
}

impl DecompositionResult {
    fn new(
        expr: SpaceExpr,
        pointed: bool,
        looped: u32,
        theorem: &'static str,
        statement: String,
    ) -> Self {
        let caveats = caveats_for(&expr);
        DecompositionResult {
            expr,
            pointed,
            looped,
            caveats,
            theorem,
            statement,
        }
    }
}

fn caveats_for(expr: &SpaceExpr) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for atom in expr.atoms() {
        let c = match atom {
            Atom::GaugeS4 { k, group } => format!(
                "G^{k}(S^4) is the gauge group over S^4 of the {group}-bundle with class {k}; its homotopy type is not computed here"
            ),
            Atom::MapStar { t, group } => format!(
                "Map*(Y_{t},{group}) is left symbolic; it depends only on l mod ±12"
            ),
            Atom::OpaqueFiber { k, m, group } => format!(
                "X_{k} is known only as the total space of a fibration O^4_0[{group}]{{{m}}} -> X_{k} -> O^1[{group}]"
            ),
            _ => continue,
        };
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
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

fn require_prime_at_least_5(p: Prime) -> Result<()> {
    if p.value() < 5 {
        Err(invalid(format!("prime {p} must be at least 5")))
    } else {
        Ok(())
    }
}

fn twist_class(l: i64) -> u8 {
    let r = l.rem_euclid(12);
    r.min(12 - r) as u8
}

fn lp(n: u32, g: LieGroupId) -> SpaceExpr {
    Atom::loop_space(n, g).into()
}

/// `O^n[G]{q}`, contractible when `q = 1`.
fn mod_loop(n: u32, g: LieGroupId, q: u64) -> SpaceExpr {
    if q == 1 {
        SpaceExpr::Point
    } else {
        Atom::mod_loop(n, g, q).into()
    }
}

/// `G^k(M_{l,0}) ≃ G^k(S^4) x Map*(Y_l, G)`, expanded when `l ≡ 0 mod 12`.
pub fn decompose_unpointed_m0(g: LieGroupId, l: i64, k: i64) -> Result<DecompositionResult> {
    require_pi6_vanishes(g)?;
    let gauge_s4: SpaceExpr = Atom::GaugeS4 { k, group: g }.into();
    let expr = match twist_class(l) {
        0 => SpaceExpr::product([gauge_s4, lp(3, g), lp(7, g)]),
        t => SpaceExpr::product([gauge_s4, Atom::MapStar { t, group: g }.into()]),
    };
    Ok(DecompositionResult::new(
        expr,
        false,
        0,
        tags::UNPOINTED_TORSION_FREE,
        "G^k(M_{l,0}) ≃ G^k(S^4) × Map*(Y_l,G); Map*(Y_l,G) ≃ Ω³G × Ω⁷G if l ≡ 0 mod 12".into(),
    ))
}

/// `G^k_*(M_{l,0}) ≃ O^4[G] x Map*(Y_l, G)`, independent of `k`.
pub fn decompose_pointed_m0(g: LieGroupId, l: i64, _k: i64) -> Result<DecompositionResult> {
    require_pi6_vanishes(g)?;
    let expr = match twist_class(l) {
        0 => SpaceExpr::product([lp(3, g), lp(4, g), lp(7, g)]),
        t => SpaceExpr::product([lp(4, g), Atom::MapStar { t, group: g }.into()]),
    };
    Ok(DecompositionResult::new(
        expr,
        true,
        0,
        tags::POINTED_TORSION_FREE,
        "G^k_*(M_{l,0}) ≃ Ω⁴G × Map*(Y_l,G) for all k".into(),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PlocalVariant {
    /// `G^k(M_{l,m})`; the result is looped once when `v_p(m) >= 1`.
    Unpointed,
    /// `G^0_*(M_{l,m})`.
    Pointed,
    /// `O G^k_*(M_{l,m})` for any `k`.
    PointedLooped,
}

/// `p`-local decompositions over `M_{l,m}` for `m >= 2` and `p >= 5`.
pub fn decompose_plocal(
    g: LieGroupId,
    l: i64,
    m: u64,
    k: i64,
    p: Prime,
    variant: PlocalVariant,
) -> Result<DecompositionResult> {
    let _ = l;
    require_pi6_vanishes(g)?;
    require_prime_at_least_5(p)?;
    if m < 2 {
        return Err(invalid(format!(
            "p-local decompositions need m >= 2, got m = {m}"
        )));
    }
    let k = (k as i128).rem_euclid(m as i128) as u64;
    let r = vp(m, p)?;
    let q = p.pow(r)?;
    let (inner, looped, pointed, theorem, statement) = match variant {
        PlocalVariant::Unpointed if r == 0 => {
            if k != 0 {
                return Err(out_of_scope(format!(
                    "with v_{p}(m) = 0 only the trivial bundle is covered, got k = {k}"
                )));
            }
            (
                SpaceExpr::product([lp(7, g), SpaceExpr::lie(g)]),
                0,
                false,
                tags::UNPOINTED_PLOCAL,
                "G^0(M_{l,m}) ≃_(p) Ω⁷G × G when v_p(m) = 0".to_string(),
            )
        }
        PlocalVariant::Unpointed => {
            let base: SpaceExpr = Atom::loop_component0(8, g).into();
            let fibre = if k.is_multiple_of(q) {
                SpaceExpr::product([lp(1, g), Atom::mod_loop_component0(4, g, m).into()])
            } else {
                Atom::OpaqueFiber { k, m, group: g }.into()
            };
            (
                SpaceExpr::product([base, fibre]),
                1,
                false,
                tags::UNPOINTED_PLOCAL,
                "ΩG^k(M_{l,m}) ≃_(p) Ω⁸₀G × X_k; X_k ≃_(p) ΩG × Ω⁴₀G{m} when p^r | k".to_string(),
            )
        }
        PlocalVariant::Pointed => {
            if k != 0 {
                return Err(out_of_scope(format!(
                    "for k = {k} ≠ 0 only the loop space of the pointed gauge group is described"
                )));
            }
            (
                SpaceExpr::product([mod_loop(3, g, q), lp(7, g)]),
                0,
                true,
                tags::POINTED_PLOCAL,
                "G^0_*(M_{l,m}) ≃_(p) Ω³G{p^r} × Ω⁷G".to_string(),
            )
        }
        PlocalVariant::PointedLooped => (
            SpaceExpr::product([mod_loop(4, g, q), lp(8, g)]),
            1,
            true,
            tags::POINTED_PLOCAL,
            "ΩG^k_*(M_{l,m}) ≃_(p) Ω⁴G{p^r} × Ω⁸G for all k".to_string(),
        ),
    };
    Ok(DecompositionResult::new(
        SpaceExpr::localized(p, inner),
        pointed,
        looped,
        theorem,
        statement,
    ))
}

/// A computed homotopy group, with any summand that can only be named.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PiResult {
    pub group: AbGroup,
    /// Summands left symbolic, e.g. `π_1(Map*(Y_7,SU(4)))`.
    pub symbolic: Vec<String>,
    pub extension_assumed_split: bool,
    pub provenance: Vec<TableEntry>,
    pub theorem: &'static str,
}

impl PiResult {
    pub fn is_complete(&self) -> bool {
        self.symbolic.is_empty()
    }

    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        if !self.group.is_trivial() || self.symbolic.is_empty() {
            parts.push(self.group.to_string());
        }
        parts.extend(self.symbolic.iter().cloned());
        parts.join(" + ")
    }
}

fn lookup(g: LieGroupId, i: u32) -> Result<TableEntry> {
    tables::active()?.lookup(SpaceKey::Lie(g), i)
}

/// `pi_n(G^k_*(M_{l,0})) = pi_{n+4}(G) ⊕ pi_n(Map*(Y_l, G))`, fully
/// computed as `pi_{n+4} ⊕ pi_{n+3} ⊕ pi_{n+7}` when `l ≡ 0 mod 12`.
pub fn pi_pointed_gauge_m0(g: LieGroupId, l: i64, _k: i64, n: u32) -> Result<PiResult> {
    require_pi6_vanishes(g)?;
    let t = twist_class(l);
    let degrees: &[u32] = if t == 0 {
        &[n + 4, n + 3, n + 7]
    } else {
        &[n + 4]
    };
    let provenance = degrees
        .iter()
        .map(|&i| lookup(g, i))
        .collect::<Result<Vec<_>>>()?;
    let group = AbGroup::sum_all(provenance.iter().map(|e| &e.group), Locality::Integral)?;
    let symbolic = if t == 0 {
        Vec::new()
    } else {
        vec![format!("π_{n}(Map*(Y_{t},{g}))")]
    };
    Ok(PiResult {
        group,
        symbolic,
        extension_assumed_split: false,
        provenance,
        theorem: tags::PI_POINTED_TORSION_FREE,
    })
}

/// Path components of `G^k(M_{l,0})` for `l ≡ 0 mod 12`, as tabulated from
/// the homotopy groups of Lie groups.
pub fn pi0_unpointed_gauge_m0(g: LieGroupId, l: i64) -> Result<AbGroup> {
    if l.rem_euclid(12) != 0 {
        return Err(out_of_scope(format!(
            "path components are tabulated only for l ≡ 0 mod 12, got l = {l}"
        )));
    }
    require_pi6_vanishes(g)?;
    let c = g.canonical();
    let row = match (c.family(), c.n()) {
        (Family::Spin, Some(8)) => (3, &[][..]),
        (Family::Sp, Some(_)) => (2, &[2u64][..]),
        (Family::SU, Some(_)) | (Family::Spin, Some(_)) => (2, &[][..]),
        (Family::F4 | Family::E6 | Family::E7 | Family::E8, _) => (1, &[][..]),
        _ => {
            return Err(Error::Unknown(format!(
                "no tabulated path components for {g}"
            )))
        }
    };
    AbGroup::new(row.0, row.1)
}

/// `pi_i(G; Z_{p^r})` with the flag set when both ends of the
/// universal-coefficient sequence are nonzero, where a split extension is assumed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoefficientGroup {
    pub group: AbGroup,
    pub extension_assumed_split: bool,
    pub provenance: Vec<TableEntry>,
}

fn coefficient_group(g: LieGroupId, i: u32, q: u64) -> Result<CoefficientGroup> {
    if i == 0 {
        return Err(invalid("homotopy with coefficients needs degree >= 1"));
    }
    if q == 1 {
        return Ok(CoefficientGroup {
            group: AbGroup::trivial(),
            extension_assumed_split: false,
            provenance: Vec::new(),
        });
    }
    let top = lookup(g, i)?;
    let below = lookup(g, i - 1)?;
    let tensor = top.group.tensor_with_cyclic(q)?;
    let tor = below.group.tor_with_cyclic(q)?;
    Ok(CoefficientGroup {
        extension_assumed_split: !tensor.is_trivial() && !tor.is_trivial(),
        group: tensor.direct_sum(&tor)?,
        provenance: vec![top, below],
    })
}

/// `pi_i(G; Z_{p^r})` for `p >= 5`.
pub fn pi_with_coefficients(g: LieGroupId, i: u32, p: Prime, r: u32) -> Result<CoefficientGroup> {
    require_prime_at_least_5(p)?;
    coefficient_group(g, i, p.pow(r)?)
}

/// `p`-local homotopy groups of the pointed gauge group over `M_{l,m}`, `m >= 2`:
/// for `k = 0`, `pi_{n+3}(G; Z_{p^r}) ⊕ pi_{n+7}(G)_(p)`; looped, for any `k`,
/// `pi_{n+4}(G; Z_{p^r}) ⊕ pi_{n+8}(G)_(p)`.
pub fn pi_pointed_gauge_plocal(
    g: LieGroupId,
    m: u64,
    k: i64,
    n: u32,
    p: Prime,
    looped: bool,
) -> Result<PiResult> {
    require_pi6_vanishes(g)?;
    require_prime_at_least_5(p)?;
    if m < 2 {
        return Err(invalid(format!(
            "p-local homotopy groups need m >= 2, got m = {m}"
        )));
    }
    let k = (k as i128).rem_euclid(m as i128);
    if !looped && k != 0 {
        return Err(out_of_scope(format!(
            "for k = {k} ≠ 0 only the loop space of the pointed gauge group is described"
        )));
    }
    let shift = if looped { 1 } else { 0 };
    let r = vp(m, p)?;
    let coeff = coefficient_group(g, n + 3 + shift, p.pow(r)?)?;
    let free = lookup(g, n + 7 + shift)?;
    let group = coeff
        .group
        .localize(p)?
        .direct_sum(&free.group.localize(p)?)?;
    let mut provenance = coeff.provenance;
    provenance.push(free);
    Ok(PiResult {
        group,
        symbolic: Vec::new(),
        extension_assumed_split: coeff.extension_assumed_split,
        provenance,
        theorem: tags::PI_POINTED_PLOCAL,
    })
}

/// `pi_0` of the `p`-local unpointed gauge group over `M_{l,m}`; only `k = 0` is known.
pub fn pi0_unpointed_gauge_plocal(g: LieGroupId, m: u64, k: i64, p: Prime) -> Result<PiResult> {
    if m >= 2 && (k as i128).rem_euclid(m as i128) != 0 {
        return Err(Error::Unknown(format!(
            "path components of the p-local gauge group are not known for k ≢ 0 mod {m}"
        )));
    }
    let mut res = pi_pointed_gauge_plocal(g, m, 0, 0, p, false)?;
    res.theorem = tags::PI0_PLOCAL;
    Ok(res)
}

/// `n`-th homotopy group of a product of Lie groups, loop spaces and spheres.
///
/// Wedges and opaque atoms are rejected. A localized expression yields a
/// group local at that prime.
pub fn homotopy_group_of_expr(expr: &SpaceExpr, n: u32) -> Result<AbGroup> {
    match expr {
        SpaceExpr::Point => Ok(AbGroup::trivial()),
        SpaceExpr::Localized { prime, inner } => homotopy_group_of_expr(inner, n)?.localize(*prime),
        SpaceExpr::Product { factors } => {
            let groups = factors
                .iter()
                .map(|f| homotopy_group_of_expr(f, n))
                .collect::<Result<Vec<_>>>()?;
            AbGroup::sum_all(&groups, Locality::Integral)
        }
        SpaceExpr::Wedge { .. } => Err(Error::Unknown(format!(
            "homotopy groups of the wedge {expr} are not computed"
        ))),
        SpaceExpr::Atom { atom } => match atom {
            Atom::Lie { group } => Ok(lookup(*group, n)?.group),
            Atom::Sphere { dim } => tables::pi_sphere(*dim, n),
            Atom::Loop {
                n: j,
                base_component,
                modulus,
                group,
            } => {
                if *base_component && n == 0 {
                    return Ok(AbGroup::trivial());
                }
                match modulus {
                    None => Ok(lookup(*group, n + j)?.group),
                    Some(q) => Ok(coefficient_group(*group, n + j, *q)?.group),
                }
            }
            other => Err(Error::Unknown(format!(
                "homotopy groups of {other} are not computed"
            ))),
        },
    }
}

/// The statement behind a theorem tag.
pub fn citation(tag: &str) -> &'static str {
    match tag {
        tags::UNPOINTED_TORSION_FREE => {
            "G^k(M_{l,0}) ≃ G^k(S^4) × Map*(Y_l,G) when π₆(G) = 0; Map*(Y_l,G) ≃ Ω³G × Ω⁷G if l ≡ 0 mod 12"
        }
        tags::POINTED_TORSION_FREE => "G^k_*(M_{l,0}) ≃ Ω⁴G × Map*(Y_l,G) for all k when π₆(G) = 0",
        tags::UNPOINTED_PLOCAL => {
            "for p ≥ 5, r = v_p(m): G^0(M_{l,m}) ≃_(p) Ω⁷G × G if r = 0; ΩG^k(M_{l,m}) ≃_(p) Ω⁸₀G × X_k if r ≥ 1"
        }
        tags::POINTED_PLOCAL => {
            "for p ≥ 5, r = v_p(m): G^0_*(M_{l,m}) ≃_(p) Ω³G{p^r} × Ω⁷G and ΩG^k_*(M_{l,m}) ≃_(p) Ω⁴G{p^r} × Ω⁸G"
        }
        tags::PI_POINTED_TORSION_FREE => {
            "π_n(G^k_*(M_{l,0})) ≅ π_{n+4}(G) ⊕ π_n(Map*(Y_l,G)), = π_{n+4} ⊕ π_{n+3} ⊕ π_{n+7} if l ≡ 0 mod 12"
        }
        tags::PI_POINTED_PLOCAL => {
            "π_n(G^0_*(M_{l,m}))_(p) ≅ π_{n+3}(G;ℤ_{p^r}) ⊕ π_{n+7}(G)_(p); π_n(ΩG^k_*(M_{l,m}))_(p) ≅ π_{n+4}(G;ℤ_{p^r}) ⊕ π_{n+8}(G)_(p)"
        }
        tags::PI0_TORSION_FREE => "π₀(G^k(M_{l,0})) ≅ π₀(G^k_*(M_{l,0})) ≅ π₄(G) ⊕ π₃(G) ⊕ π₇(G) for l ≡ 0 mod 12",
        tags::PI0_PLOCAL => "π₀(G^0(M_{l,m}))_(p) ≅ π₃(G;ℤ_{p^r}) ⊕ π₇(G)_(p)",
        tags::COEFFICIENTS => "0 → π_i(G) ⊗ ℤ_q → π_i(G;ℤ_q) → Tor(π_{i-1}(G), ℤ_q) → 0",
        tags::S7 => {
            "G^k(S^7) ≃ G^{k'}(S^7) iff (3,k) = (3,k'): integrally for SU(2), rationally or at any prime for G2, rationally or at p ≥ 3 for SU(3)"
        }
        tags::SU5 => "if (120,k) = (120,k') then G^k(M_{l,0}) ≃ G^{k'}(M_{l,0}) rationally and at every prime for G = SU(5)",
        _ => "",
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum S7Decision {
    Equivalent,
    NotEquivalent,
    OutOfScope,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct S7Verdict {
    pub decision: S7Decision,
    pub reason: String,
    /// `O^7[G] x G` when there is a single bundle.
    pub decomposition: Option<SpaceExpr>,
}

/// Homotopy equivalence of the gauge groups `G^k(S^7)` and `G^{k'}(S^7)`.
pub fn s7_gauge_equivalent(g: LieGroupId, k: i64, k2: i64, locality: Localization) -> S7Verdict {
    let order = pi6(g).order().unwrap_or(1) as i64;
    let (k, k2) = (k.rem_euclid(order) as u64, k2.rem_euclid(order) as u64);
    let (a, b) = (gcd(3, k), gcd(3, k2));
    let same = a == b;
    let gcd_reason = format!("(3,{k}) = {a}, (3,{k2}) = {b}");
    let verdict = |decision, reason: String| S7Verdict {
        decision,
        reason,
        decomposition: None,
    };
    let c = g.canonical();
    if k == k2 && order > 1 {
        return verdict(
            S7Decision::Equivalent,
            format!("k ≡ k' mod {order}: the same bundle"),
        );
    }
    match (c.family(), c.n()) {
        (Family::SU, Some(2)) => match (locality, same) {
            (Localization::Integral, true) | (_, true) => verdict(
                S7Decision::Equivalent,
                format!("{gcd_reason}; equal gcds give an integral equivalence"),
            ),
            (Localization::Integral, false) => verdict(
                S7Decision::NotEquivalent,
                format!("{gcd_reason}; gcds differ"),
            ),
            (_, false) => verdict(
                S7Decision::OutOfScope,
                format!("{gcd_reason}; only the integral classification is known for {g}"),
            ),
        },
        (Family::G2, _) | (Family::SU, Some(3)) => {
            let covered = match (c.family(), locality) {
                (_, Localization::Rational) => true,
                (Family::G2, Localization::AtPrime(_)) => true,
                (_, Localization::AtPrime(p)) => p.value() >= 3,
                (_, Localization::Integral) => false,
            };
            match (covered, same) {
                (true, true) => verdict(S7Decision::Equivalent, format!("{gcd_reason}; equal gcds ({locality})")),
                (true, false) => verdict(S7Decision::NotEquivalent, format!("{gcd_reason}; gcds differ ({locality})")),
                // an integral equivalence would survive localization at 3
                (false, false) if locality == Localization::Integral => verdict(
                    S7Decision::NotEquivalent,
                    format!("{gcd_reason}; gcds differ, so not even 3-locally equivalent"),
                ),
                (false, _) => verdict(
                    S7Decision::OutOfScope,
                    format!("{gcd_reason}; {g} is classified only rationally or at the covered primes, not {locality}"),
                ),
            }
        }
        _ => S7Verdict {
            decision: S7Decision::Equivalent,
            reason: format!("π₆({g}) = 0, so there is a single bundle over S^7"),
            decomposition: Some(SpaceExpr::product([lp(7, g), SpaceExpr::lie(g)])),
        },
    }
}

/// `G^0(S^7) ≃ O^7[G] x G` when `pi_6(G) = 0`.
pub fn s7_decompose_trivial(g: LieGroupId) -> Result<SpaceExpr> {
    require_pi6_vanishes(g)?;
    Ok(SpaceExpr::product([lp(7, g), SpaceExpr::lie(g)]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Su5Decision {
    EquivalentLocally,
    Undecided,
}

/// `SU(5)`-gauge groups over `S^3 x S^4` or a twisted product: equal
/// `(120, k)` gives equivalence rationally and at every prime. No converse is known.
pub fn su5_gauge_equivalent_m0(k: i64, k2: i64) -> (Su5Decision, String) {
    let (a, b) = (gcd(120, k.unsigned_abs()), gcd(120, k2.unsigned_abs()));
    if a == b {
        (
            Su5Decision::EquivalentLocally,
            format!("(120,{k}) = (120,{k2}) = {a}; equivalent rationally and at every prime"),
        )
    } else {
        (
            Su5Decision::Undecided,
            format!("(120,{k}) = {a} ≠ (120,{k2}) = {b}; no converse is known"),
        )
    }
}
