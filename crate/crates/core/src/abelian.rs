//! Finitely generated abelian groups in canonical form.
//!
//! A group is stored as a free rank plus an invariant-factor chain
//! `d_1 | d_2 | ... | d_s` with every `d_i >= 2`. Two groups are isomorphic
//! exactly when their canonical forms are equal, so `==` is isomorphism for
//! groups of the same locality.
//!
//! A group may be tagged as local at a prime `p`. Its free summands are then
//! copies of `Z_(p)` and its torsion is `p`-primary. Groups of different
//! locality are never combined.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{invalid, Error, Result};

/// A rational prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Prime(u64);

impl Prime {
    pub fn new(value: u64) -> Result<Self> {
        if is_prime(value) {
            Ok(Prime(value))
        } else {
            Err(invalid(format!("{value} is not prime")))
        }
    }

    pub fn value(self) -> u64 {
        self.0
    }

    /// `p^e`, failing on overflow.
    pub fn pow(self, e: u32) -> Result<u64> {
        self.0
            .checked_pow(e)
            .ok_or_else(|| Error::Overflow(format!("{}^{e}", self.0)))
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization by trial division, as `(p, e)` pairs in increasing `p`.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// The `p`-adic valuation of `m`. Zero has no valuation here.
pub fn vp(m: u64, p: Prime) -> Result<u32> {
    if m == 0 {
        return Err(invalid("v_p(0) is undefined"));
    }
    let mut m = m;
    let mut e = 0;
    while m.is_multiple_of(p.0) {
        m /= p.0;
        e += 1;
    }
    Ok(e)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum Locality {
    #[default]
    Integral,
    Local(Prime),
}

impl fmt::Display for Locality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Locality::Integral => write!(f, "integral"),
            Locality::Local(p) => write!(f, "local at {p}"),
        }
    }
}

impl Serialize for Locality {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Locality::Integral => s.serialize_str("integral"),
            Locality::Local(p) => s.serialize_u64(p.0),
        }
    }
}

/// A finitely generated abelian group, up to isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AbGroup {
    free_rank: u32,
    factors: Vec<u64>,
    locality: Locality,
}

/// Merge torsion orders into an ascending invariant-factor chain.
fn invariant_factors(torsion: &[u64]) -> Result<Vec<u64>> {
    let mut primary: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for &t in torsion {
        if t < 2 {
            return Err(invalid(format!("torsion order {t} must be at least 2")));
        }
        for (p, e) in factorize(t) {
            primary.entry(p).or_default().push(e);
        }
    }
    let len = primary.values().map(Vec::len).max().unwrap_or(0);
    let mut out = vec![1u64; len];
    for (p, mut exps) in primary {
        exps.sort_unstable_by(|a, b| b.cmp(a));
        for (i, e) in exps.into_iter().enumerate() {
            let pe = p
                .checked_pow(e)
                .ok_or_else(|| Error::Overflow(format!("{p}^{e}")))?;
            out[i] = out[i]
                .checked_mul(pe)
                .ok_or_else(|| Error::Overflow("invariant factor".into()))?;
        }
    }
    out.reverse();
    Ok(out)
}

impl AbGroup {
    /// The trivial integral group.
    pub fn trivial() -> Self {
        AbGroup::default()
    }

    /// The integers.
    pub fn z() -> Self {
        AbGroup {
            free_rank: 1,
            ..AbGroup::default()
        }
    }

    /// `Z_n` with the conventions `Z_0 = Z` and `Z_1 = 0`.
    pub fn cyclic(n: u64) -> Self {
        match n {
            0 => AbGroup::z(),
            1 => AbGroup::trivial(),
            _ => AbGroup {
                free_rank: 0,
                factors: vec![n],
                locality: Locality::Integral,
            },
        }
    }

    /// Canonical integral group `Z^free_rank + Z_t1 + Z_t2 + ...`.
    pub fn new(free_rank: u32, torsion: &[u64]) -> Result<Self> {
        Ok(AbGroup {
            free_rank,
            factors: invariant_factors(torsion)?,
            locality: Locality::Integral,
        })
    }

    /// Canonical `p`-local group; every torsion entry must be a power of `p`.
    pub fn new_local(free_rank: u32, torsion: &[u64], p: Prime) -> Result<Self> {
        if let Some(&bad) = torsion
            .iter()
            .find(|&&t| t < 2 || factorize(t).iter().any(|&(q, _)| q != p.0))
        {
            return Err(invalid(format!("{bad} is not a positive power of {p}")));
        }
        Ok(AbGroup {
            free_rank,
            factors: invariant_factors(torsion)?,
            locality: Locality::Local(p),
        })
    }

    pub fn free_rank(&self) -> u32 {
        self.free_rank
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn locality(&self) -> Locality {
        self.locality
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.factors.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Order of a finite group; `None` if the group is infinite or the order overflows.
    pub fn order(&self) -> Option<u64> {
        if self.free_rank > 0 {
            return None;
        }
        self.factors
            .iter()
            .try_fold(1u64, |acc, &d| acc.checked_mul(d))
    }

    /// Torsion subgroup, same locality.
    pub fn torsion(&self) -> AbGroup {
        AbGroup {
            free_rank: 0,
            factors: self.factors.clone(),
            locality: self.locality,
        }
    }

    /// Same group with the locality tag replaced. The caller guarantees the
    /// torsion is compatible.
    fn with_locality(mut self, locality: Locality) -> Self {
        self.locality = locality;
        self
    }

    fn check_same_locality(&self, other: &AbGroup) -> Result<()> {
        if self.locality != other.locality {
            return Err(Error::MixedLocality(
                self.locality.to_string(),
                other.locality.to_string(),
            ));
        }
        Ok(())
    }

    pub fn is_isomorphic(&self, other: &AbGroup) -> Result<bool> {
        self.check_same_locality(other)?;
        Ok(self == other)
    }

    pub fn direct_sum(&self, other: &AbGroup) -> Result<AbGroup> {
        self.check_same_locality(other)?;
        let torsion: Vec<u64> = self.factors.iter().chain(&other.factors).copied().collect();
        Ok(AbGroup {
            free_rank: self
                .free_rank
                .checked_add(other.free_rank)
                .ok_or_else(|| Error::Overflow("free rank".into()))?,
            factors: invariant_factors(&torsion)?,
            locality: self.locality,
        })
    }

    /// Direct sum of a list of groups of one locality; `locality` is used for the empty sum.
    pub fn sum_all<'a, I>(groups: I, locality: Locality) -> Result<AbGroup>
    where
        I: IntoIterator<Item = &'a AbGroup>,
    {
        groups
            .into_iter()
            .try_fold(AbGroup::trivial().with_locality(locality), |acc, g| {
                acc.direct_sum(g)
            })
    }

    /// Localization at `p`: free summands become `Z_(p)`, each `Z_n` becomes `Z_{p^{v_p(n)}}`.
    pub fn localize(&self, p: Prime) -> Result<AbGroup> {
        match self.locality {
            Locality::Local(q) if q == p => return Ok(self.clone()),
            Locality::Local(q) => {
                return Err(invalid(format!(
                    "group is already local at {q}, cannot localize at {p}"
                )))
            }
            Locality::Integral => {}
        }
        let mut torsion = Vec::new();
        for &d in &self.factors {
            let e = vp(d, p)?;
            if e > 0 {
                torsion.push(p.pow(e)?);
            }
        }
        Ok(AbGroup {
            free_rank: self.free_rank,
            factors: invariant_factors(&torsion)?,
            locality: Locality::Local(p),
        })
    }

    fn cyclic_op(&self, q: u64, free_term: Option<u64>) -> Result<AbGroup> {
        if q == 0 {
            return Err(invalid("coefficient order must be positive"));
        }
        let mut torsion: Vec<u64> = self
            .factors
            .iter()
            .map(|&d| gcd(d, q))
            .filter(|&g| g > 1)
            .collect();
        if let Some(t) = free_term.filter(|&t| t > 1) {
            torsion.extend(std::iter::repeat_n(t, self.free_rank as usize));
        }
        let integral = AbGroup::new(0, &torsion)?;
        match self.locality {
            Locality::Integral => Ok(integral),
            Locality::Local(p) => integral.localize(p),
        }
    }

    /// `A (x) Z_q`.
    pub fn tensor_with_cyclic(&self, q: u64) -> Result<AbGroup> {
        self.cyclic_op(q, Some(q))
    }

    /// `Tor(A, Z_q)`.
    pub fn tor_with_cyclic(&self, q: u64) -> Result<AbGroup> {
        self.cyclic_op(q, None)
    }

    /// Display with mathematical symbols, e.g. `ℤ²⊕ℤ₂` or `ℤ₍₅₎⊕ℤ₂₅`.
    pub fn to_unicode(&self) -> String {
        if self.is_trivial() {
            return "0".into();
        }
        let mut terms = Vec::new();
        if self.free_rank > 0 {
            let base = match self.locality {
                Locality::Integral => "ℤ".to_string(),
                Locality::Local(p) => format!("ℤ₍{}₎", subscript(p.0)),
            };
            if self.free_rank == 1 {
                terms.push(base);
            } else {
                terms.push(format!("{base}{}", superscript(self.free_rank as u64)));
            }
        }
        for &d in &self.factors {
            terms.push(format!("ℤ{}", subscript(d)));
        }
        terms.join("⊕")
    }
}

fn map_digits(n: u64, table: &[char; 10]) -> String {
    n.to_string()
        .chars()
        .map(|c| table[c.to_digit(10).unwrap() as usize])
        .collect()
}

fn subscript(n: u64) -> String {
    map_digits(n, &['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'])
}

fn superscript(n: u64) -> String {
    map_digits(n, &['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'])
}

impl fmt::Display for AbGroup {
    /// ASCII canonical form: `0`, `Z`, `Z + Z_2 + Z_12`, `Z_(5) + Z_25`, `Z_25 @ (5)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = Vec::new();
        let free = match self.locality {
            Locality::Integral => "Z".to_string(),
            Locality::Local(p) => format!("Z_({p})"),
        };
        terms.extend(std::iter::repeat_n(free, self.free_rank as usize));
        terms.extend(self.factors.iter().map(|d| format!("Z_{d}")));
        if terms.is_empty() {
            terms.push("0".into());
        }
        write!(f, "{}", terms.join(" + "))?;
        if let (Locality::Local(p), 0) = (self.locality, self.free_rank) {
            write!(f, " @ ({p})")?;
        }
        Ok(())
    }
}

impl FromStr for AbGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let perr = |m: &str| Error::Parse(format!("{m} in group '{s}'"));
        let (body, mut locality) = match s.split_once('@') {
            Some((body, tail)) => {
                let p = tail
                    .trim()
                    .strip_prefix('(')
                    .and_then(|t| t.strip_suffix(')'))
                    .ok_or_else(|| perr("malformed locality suffix"))?;
                let p: u64 = p.trim().parse().map_err(|_| perr("bad prime"))?;
                (body, Some(Prime::new(p)?))
            }
            None => (s, None),
        };
        let mut integral_free = 0u32;
        let mut local_free = 0u32;
        let mut torsion = Vec::new();
        for term in body.split('+').map(str::trim) {
            match term {
                "0" => {}
                "Z" => integral_free += 1,
                "" => return Err(perr("empty term")),
                _ => {
                    let rest = term
                        .strip_prefix("Z_")
                        .ok_or_else(|| perr("unknown term"))?;
                    if let Some(p) = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
                        let p = Prime::new(p.parse().map_err(|_| perr("bad prime"))?)?;
                        if locality.is_some_and(|q| q != p) {
                            return Err(perr("conflicting primes"));
                        }
                        locality = Some(p);
                        local_free += 1;
                    } else {
                        let n: u64 = rest.parse().map_err(|_| perr("bad order"))?;
                        torsion.push(n);
                    }
                }
            }
        }
        match locality {
            Some(_) if integral_free > 0 => Err(perr("mixes Z with a local summand")),
            Some(p) => AbGroup::new_local(local_free, &torsion, p),
            None => AbGroup::new(integral_free, &torsion),
        }
    }
}

impl Serialize for AbGroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("AbGroup", 4)?;
        st.serialize_field("text", &self.to_string())?;
        st.serialize_field("free_rank", &self.free_rank)?;
        st.serialize_field("invariant_factors", &self.factors)?;
        st.serialize_field("locality", &self.locality)?;
        st.end()
    }
}
