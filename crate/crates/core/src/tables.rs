//! Cited homotopy groups of spheres and Lie groups.
//!
//! Values come from a line-oriented data file (`data/homotopy.tbl`, embedded at
//! build time). Each record is `key | degree | group | source`. Nothing is
//! computed or extrapolated: a query outside the file is [`Error::Unknown`].
//! Setting `SPHERE_GAUGE_TABLE` to a path replaces the embedded file.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;

use crate::abelian::{gcd, vp, AbGroup, Locality, Prime};
use crate::error::{invalid, Error, Result};

pub const BUILTIN_TABLE: &str = include_str!("../data/homotopy.tbl");
pub const TABLE_ENV: &str = "SPHERE_GAUGE_TABLE";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Family {
    SU,
    Sp,
    Spin,
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl Family {
    fn is_classical(self) -> bool {
        matches!(self, Family::SU | Family::Sp | Family::Spin)
    }

    fn min_rank(self) -> u32 {
        match self {
            Family::SU => 2,
            Family::Sp => 1,
            Family::Spin => 5,
            _ => 0,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Family::SU => "SU",
            Family::Sp => "Sp",
            Family::Spin => "Spin",
            Family::G2 => "G2",
            Family::F4 => "F4",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
        }
    }
}

/// A simply connected simple compact Lie group.
///
/// `SU(2)` and `Sp(1)` are different identifiers; [`LieGroupId::canonical`]
/// resolves the low-rank coincidences `Sp(1) = SU(2)`, `Spin(5) = Sp(2)`,
/// `Spin(6) = SU(4)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LieGroupId {
    family: Family,
    n: u32,
}

impl LieGroupId {
    pub fn new(family: Family, n: u32) -> Result<Self> {
        if family.is_classical() {
            if n < family.min_rank() {
                return Err(invalid(format!(
                    "{}({n}) is outside the supported range n >= {}",
                    family.name(),
                    family.min_rank()
                )));
            }
            Ok(LieGroupId { family, n })
        } else {
            Ok(LieGroupId { family, n: 0 })
        }
    }

    pub fn su(n: u32) -> Result<Self> {
        Self::new(Family::SU, n)
    }

    pub fn sp(n: u32) -> Result<Self> {
        Self::new(Family::Sp, n)
    }

    pub fn spin(n: u32) -> Result<Self> {
        Self::new(Family::Spin, n)
    }

    pub fn exceptional(family: Family) -> Result<Self> {
        if family.is_classical() {
            return Err(invalid(format!("{} needs a rank", family.name())));
        }
        Self::new(family, 0)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Rank parameter of a classical family.
    pub fn n(&self) -> Option<u32> {
        self.family.is_classical().then_some(self.n)
    }

    pub fn canonical(&self) -> LieGroupId {
        match (self.family, self.n) {
            (Family::Sp, 1) => LieGroupId {
                family: Family::SU,
                n: 2,
            },
            (Family::Spin, 5) => LieGroupId {
                family: Family::Sp,
                n: 2,
            },
            (Family::Spin, 6) => LieGroupId {
                family: Family::SU,
                n: 4,
            },
            _ => *self,
        }
    }

    pub fn is_isomorphic_to(&self, other: &LieGroupId) -> bool {
        self.canonical() == other.canonical()
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical() == *self
    }

    /// Whether `pi_6` vanishes, the standing hypothesis of the bundle and
    /// gauge-group statements for manifolds with `m != 1`.
    pub fn pi6_vanishes(&self) -> bool {
        pi6(*self).is_trivial()
    }
}

impl fmt::Display for LieGroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family.is_classical() {
            write!(f, "{}({})", self.family.name(), self.n)
        } else {
            write!(f, "{}", self.family.name())
        }
    }
}

impl Serialize for LieGroupId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for LieGroupId {
    type Err = Error;

    /// Accepts `SU4`, `SU(4)`, `Sp2`, `Spin8`, `G2`, `F4`, `E6`, `E7`, `E8`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let lower = t.to_ascii_lowercase();
        for (name, fam) in [
            ("g2", Family::G2),
            ("f4", Family::F4),
            ("e6", Family::E6),
            ("e7", Family::E7),
            ("e8", Family::E8),
        ] {
            if lower == name {
                return LieGroupId::exceptional(fam);
            }
        }
        let (fam, rest) = if let Some(r) = lower.strip_prefix("spin") {
            (Family::Spin, r)
        } else if let Some(r) = lower.strip_prefix("su") {
            (Family::SU, r)
        } else if let Some(r) = lower.strip_prefix("sp") {
            (Family::Sp, r)
        } else {
            return Err(Error::Parse(format!("unknown Lie group '{t}'")));
        };
        let rest = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(rest);
        let n: u32 = rest
            .parse()
            .map_err(|_| Error::Parse(format!("bad rank in Lie group '{t}'")))?;
        LieGroupId::new(fam, n)
    }
}

/// `pi_6(G)`: `Z_12` for `SU(2) = Sp(1)`, `Z_6` for `SU(3)`, `Z_3` for `G2`, else 0.
pub fn pi6(g: LieGroupId) -> AbGroup {
    let c = g.canonical();
    match (c.family, c.n) {
        (Family::SU, 2) => AbGroup::cyclic(12),
        (Family::SU, 3) => AbGroup::cyclic(6),
        (Family::G2, _) => AbGroup::cyclic(3),
        _ => AbGroup::trivial(),
    }
}

/// `pi_6` of the Moore space `P^4(m)` (Sasao), split on `v_2(m)`.
pub fn pi6_moore(m: u64) -> Result<AbGroup> {
    if m < 2 {
        return Err(invalid(format!("Moore space order {m} must be at least 2")));
    }
    let two = Prime::new(2)?;
    let d = gcd(m, 12);
    let double = m
        .checked_mul(2)
        .ok_or_else(|| Error::Overflow(format!("2*{m}")))?;
    let orders: Vec<u64> = match vp(m, two)? {
        0 => vec![d, m],
        1..=2 => vec![d / 2, double, 2],
        _ => vec![d, m, 2],
    };
    let torsion: Vec<u64> = orders.into_iter().filter(|&o| o > 1).collect();
    AbGroup::new(0, &torsion)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum KeyPattern {
    Sphere(u32),
    Group {
        family: Family,
        lo: u32,
        hi: Option<u32>,
    },
}

impl KeyPattern {
    fn matches(&self, key: &SpaceKey) -> bool {
        match (self, key) {
            (KeyPattern::Sphere(a), SpaceKey::Sphere(b)) => a == b,
            (KeyPattern::Group { family, lo, hi }, SpaceKey::Lie(g)) => {
                let g = g.canonical();
                g.family == *family && g.n >= *lo && hi.is_none_or(|h| g.n <= h)
            }
            _ => false,
        }
    }

    fn overlaps(&self, other: &KeyPattern) -> bool {
        match (self, other) {
            (KeyPattern::Sphere(a), KeyPattern::Sphere(b)) => a == b,
            (
                KeyPattern::Group {
                    family: f1,
                    lo: l1,
                    hi: h1,
                },
                KeyPattern::Group {
                    family: f2,
                    lo: l2,
                    hi: h2,
                },
            ) => f1 == f2 && h1.is_none_or(|h| *l2 <= h) && h2.is_none_or(|h| *l1 <= h),
            _ => false,
        }
    }

    fn parse(s: &str) -> std::result::Result<Self, String> {
        if let Some(n) = s.strip_prefix("S^") {
            let n: u32 = n.parse().map_err(|_| format!("bad sphere key '{s}'"))?;
            if n == 0 {
                return Err("S^0 is not tabulated".into());
            }
            return Ok(KeyPattern::Sphere(n));
        }
        if let Some((name, rest)) = s.split_once('(') {
            let range = rest
                .strip_suffix(')')
                .ok_or_else(|| format!("unterminated key '{s}'"))?;
            let family = match name {
                "SU" => Family::SU,
                "Sp" => Family::Sp,
                "Spin" => Family::Spin,
                _ => return Err(format!("unknown family in key '{s}'")),
            };
            let (lo, hi) = parse_range(range).ok_or_else(|| format!("bad range in key '{s}'"))?;
            let pattern = KeyPattern::Group { family, lo, hi };
            // every parameter covered must be a valid, canonical identifier
            let alias_free = match family {
                Family::SU => lo >= 2,
                Family::Sp => lo >= 2,
                Family::Spin => lo >= 7,
                _ => true,
            };
            if !alias_free {
                return Err(format!(
                    "key '{s}' covers an aliased or invalid group; use the canonical key"
                ));
            }
            return Ok(pattern);
        }
        let family = match s {
            "G2" => Family::G2,
            "F4" => Family::F4,
            "E6" => Family::E6,
            "E7" => Family::E7,
            "E8" => Family::E8,
            _ => return Err(format!("unknown key '{s}'")),
        };
        Ok(KeyPattern::Group {
            family,
            lo: 0,
            hi: Some(0),
        })
    }
}

fn parse_range(s: &str) -> Option<(u32, Option<u32>)> {
    match s.split_once("..") {
        None => {
            let n = s.trim().parse().ok()?;
            Some((n, Some(n)))
        }
        Some((a, "")) => Some((a.trim().parse().ok()?, None)),
        Some((a, b)) => {
            let (a, b): (u32, u32) = (a.trim().parse().ok()?, b.trim().parse().ok()?);
            (a <= b).then_some((a, Some(b)))
        }
    }
}

impl fmt::Display for KeyPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            KeyPattern::Sphere(n) => write!(f, "S^{n}"),
            KeyPattern::Group { family, .. } if !family.is_classical() => {
                write!(f, "{}", family.name())
            }
            KeyPattern::Group {
                family,
                lo,
                hi: Some(h),
            } if h == lo => {
                write!(f, "{}({lo})", family.name())
            }
            KeyPattern::Group {
                family,
                lo,
                hi: Some(h),
            } => {
                write!(f, "{}({lo}..{h})", family.name())
            }
            KeyPattern::Group {
                family,
                lo,
                hi: None,
            } => write!(f, "{}({lo}..)", family.name()),
        }
    }
}

/// A space whose homotopy groups can be looked up.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpaceKey {
    Sphere(u32),
    Lie(LieGroupId),
}

impl fmt::Display for SpaceKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceKey::Sphere(n) => write!(f, "S^{n}"),
            SpaceKey::Lie(g) => write!(f, "{g}"),
        }
    }
}

impl FromStr for SpaceKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some(n) = t.strip_prefix("S^").or_else(|| t.strip_prefix('S')) {
            if let Ok(n) = n.parse::<u32>() {
                if n == 0 {
                    return Err(invalid("S^0 is not supported"));
                }
                return Ok(SpaceKey::Sphere(n));
            }
        }
        Ok(SpaceKey::Lie(t.parse()?))
    }
}

/// One line of the data file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRecord {
    key: KeyPattern,
    degrees: (u32, u32),
    group: AbGroup,
    source: String,
    line: usize,
}

impl TableRecord {
    fn parse(text: &str, line: usize) -> Result<Self> {
        let err = |msg: String| Error::TableData { line, msg };
        let fields: Vec<&str> = text.split('|').map(str::trim).collect();
        let [key, deg, group, source] = fields[..] else {
            return Err(err(format!("expected 4 fields, found {}", fields.len())));
        };
        let key = KeyPattern::parse(key).map_err(err)?;
        let degrees = match parse_range(deg) {
            Some((a, Some(b))) => (a, b),
            _ => return Err(err(format!("bad degree '{deg}'"))),
        };
        let group: AbGroup = group.parse().map_err(|e: Error| err(e.to_string()))?;
        if group.locality() != Locality::Integral {
            return Err(err("table groups must be integral".into()));
        }
        if source.is_empty() {
            return Err(err("missing source".into()));
        }
        Ok(TableRecord {
            key,
            degrees,
            group,
            source: source.to_string(),
            line,
        })
    }

    /// The record in data-file syntax.
    pub fn to_line(&self) -> String {
        let deg = if self.degrees.0 == self.degrees.1 {
            self.degrees.0.to_string()
        } else {
            format!("{}..{}", self.degrees.0, self.degrees.1)
        };
        format!("{} | {} | {} | {}", self.key, deg, self.group, self.source)
    }

    pub fn group(&self) -> &AbGroup {
        &self.group
    }

    pub fn source(&self) -> &str {
        &self.source
    }
}

/// A looked-up homotopy group with its citation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableEntry {
    pub space: String,
    pub degree: u32,
    pub group: AbGroup,
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiTable {
    records: Vec<TableRecord>,
}

impl PiTable {
    pub fn parse(text: &str) -> Result<Self> {
        let mut records: Vec<TableRecord> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let rec = TableRecord::parse(line, i + 1)?;
            if let Some(prev) = records.iter().find(|r| {
                r.key.overlaps(&rec.key)
                    && r.degrees.0 <= rec.degrees.1
                    && rec.degrees.0 <= r.degrees.1
            }) {
                return Err(Error::TableData {
                    line: i + 1,
                    msg: format!("overlaps the record on line {}", prev.line),
                });
            }
            records.push(rec);
        }
        Ok(PiTable { records })
    }

    pub fn builtin() -> &'static PiTable {
        static TABLE: OnceLock<PiTable> = OnceLock::new();
        TABLE.get_or_init(|| PiTable::parse(BUILTIN_TABLE).expect("embedded table is valid"))
    }

    pub fn records(&self) -> &[TableRecord] {
        &self.records
    }

    /// All records in data-file syntax, one per line.
    pub fn to_data_string(&self) -> String {
        self.records.iter().map(|r| r.to_line() + "\n").collect()
    }

    pub fn lookup(&self, key: SpaceKey, degree: u32) -> Result<TableEntry> {
        self.records
            .iter()
            .find(|r| r.key.matches(&key) && r.degrees.0 <= degree && degree <= r.degrees.1)
            .map(|r| TableEntry {
                space: key.to_string(),
                degree,
                group: r.group.clone(),
                source: r.source.clone(),
            })
            .ok_or_else(|| Error::Unknown(format!("pi_{degree}({key}) is not in the table")))
    }

    pub fn pi_sphere(&self, n: u32, i: u32) -> Result<AbGroup> {
        if n == 0 {
            return Err(invalid("S^0 is not supported"));
        }
        Ok(self.lookup(SpaceKey::Sphere(n), i)?.group)
    }

    pub fn pi_lie(&self, g: LieGroupId, i: u32) -> Result<AbGroup> {
        Ok(self.lookup(SpaceKey::Lie(g), i)?.group)
    }
}

/// The table in effect: the file named by `SPHERE_GAUGE_TABLE` if set,
/// otherwise the embedded one. Loaded once.
pub fn active() -> Result<&'static PiTable> {
    static ACTIVE: OnceLock<Result<PiTable>> = OnceLock::new();
    let loaded = ACTIVE.get_or_init(|| match std::env::var_os(TABLE_ENV) {
        Some(path) => std::fs::read_to_string(&path)
            .map_err(|e| invalid(format!("cannot read {}: {e}", path.to_string_lossy())))
            .and_then(|text| PiTable::parse(&text)),
        None => Ok(PiTable::builtin().clone()),
    });
    loaded.as_ref().map_err(Clone::clone)
}

pub fn pi_sphere(n: u32, i: u32) -> Result<AbGroup> {
    active()?.pi_sphere(n, i)
}

pub fn pi_lie(g: LieGroupId, i: u32) -> Result<AbGroup> {
    active()?.pi_lie(g, i)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> &'static PiTable {
        PiTable::builtin()
    }

    fn g(s: &str) -> LieGroupId {
        s.parse().unwrap()
    }

    #[test]
    fn sphere_examples() {
        assert_eq!(table().pi_sphere(3, 6).unwrap(), AbGroup::cyclic(12));
        assert_eq!(table().pi_sphere(3, 9).unwrap(), AbGroup::cyclic(3));
        assert_eq!(table().pi_sphere(4, 6).unwrap(), AbGroup::cyclic(2));
        assert!(matches!(table().pi_sphere(3, 40), Err(Error::Unknown(_))));
        assert!(matches!(table().pi_sphere(11, 11), Err(Error::Unknown(_))));
    }

    #[test]
    fn lie_examples() {
        let sp2 = g("Sp2");
        assert_eq!(table().pi_lie(sp2, 3).unwrap(), AbGroup::z());
        assert_eq!(table().pi_lie(sp2, 4).unwrap(), AbGroup::cyclic(2));
        assert_eq!(table().pi_lie(sp2, 7).unwrap(), AbGroup::z());
        assert_eq!(
            table().pi_lie(g("Spin8"), 7).unwrap(),
            AbGroup::new(2, &[]).unwrap()
        );
        assert!(matches!(table().pi_lie(sp2, 10), Err(Error::Unknown(_))));
    }

    #[test]
    fn pi2_vanishes_everywhere() {
        for s in [
            "SU2", "SU3", "SU4", "SU9", "Sp1", "Sp2", "Sp7", "Spin5", "Spin6", "Spin7", "Spin8",
            "Spin9", "Spin10", "Spin16", "G2", "F4", "E6", "E7", "E8",
        ] {
            assert!(table().pi_lie(g(s), 2).unwrap().is_trivial(), "{s}");
        }
    }

    #[test]
    fn aliases_resolve() {
        assert_ne!(g("SU2"), g("Sp1"));
        assert!(g("SU2").is_isomorphic_to(&g("Sp1")));
        assert!(g("Spin5").is_isomorphic_to(&g("Sp2")));
        assert!(g("Spin6").is_isomorphic_to(&g("SU(4)")));
        assert!(!g("Spin7").is_isomorphic_to(&g("Sp3")));
        assert_eq!(table().pi_lie(g("Sp1"), 6).unwrap(), AbGroup::cyclic(12));
        assert_eq!(table().pi_lie(g("Spin6"), 8).unwrap(), AbGroup::cyclic(24));
    }

    #[test]
    fn group_parsing_bounds() {
        assert!("SU1".parse::<LieGroupId>().is_err());
        assert!("Sp0".parse::<LieGroupId>().is_err());
        assert!("Spin4".parse::<LieGroupId>().is_err());
        assert!("H3".parse::<LieGroupId>().is_err());
        assert_eq!(g("spin(8)").to_string(), "Spin(8)");
        assert_eq!(g("e8").to_string(), "E8");
    }

    #[test]
    fn pi6_table_one() {
        assert_eq!(pi6(g("SU2")), AbGroup::cyclic(12));
        assert_eq!(pi6(g("Sp1")), AbGroup::cyclic(12));
        assert_eq!(pi6(g("SU3")), AbGroup::cyclic(6));
        assert_eq!(pi6(g("G2")), AbGroup::cyclic(3));
        assert_eq!(pi6(g("E8")), AbGroup::trivial());
        assert!(g("SU4").pi6_vanishes() && !g("G2").pi6_vanishes());
    }

    #[test]
    fn pi6_agrees_with_data_file() {
        for s in [
            "SU2", "Sp1", "SU3", "SU4", "SU5", "SU12", "Sp2", "Sp5", "Spin5", "Spin6", "Spin7",
            "Spin8", "Spin9", "Spin10", "Spin11", "Spin20", "G2", "F4", "E6", "E7", "E8",
        ] {
            assert_eq!(pi6(g(s)), table().pi_lie(g(s), 6).unwrap(), "{s}");
        }
    }

    #[test]
    fn sasao_examples() {
        assert_eq!(pi6_moore(5).unwrap(), AbGroup::cyclic(5));
        assert_eq!(pi6_moore(2).unwrap(), AbGroup::new(0, &[4, 2]).unwrap());
        assert_eq!(pi6_moore(8).unwrap(), AbGroup::new(0, &[4, 8, 2]).unwrap());
        assert!(pi6_moore(1).is_err());
    }

    #[test]
    fn data_file_round_trip() {
        let records: Vec<&str> = BUILTIN_TABLE
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .collect();
        let serialized = table().to_data_string();
        assert_eq!(serialized.lines().collect::<Vec<_>>(), records);
        assert_eq!(
            &PiTable::parse(&serialized).unwrap().records.len(),
            &records.len()
        );
        assert_eq!(
            PiTable::parse(&serialized).unwrap().to_data_string(),
            serialized
        );
    }

    #[test]
    fn loader_rejects_bad_data() {
        let overlap = "SU(5..) | 3 | Z | a\nSU(7..9) | 3 | Z | b\n";
        assert!(matches!(
            PiTable::parse(overlap),
            Err(Error::TableData { line: 2, .. })
        ));
        assert!(PiTable::parse("Sp(1..) | 3 | Z | a").is_err());
        assert!(PiTable::parse("Spin(5) | 3 | Z | a").is_err());
        assert!(PiTable::parse("S^3 | 3 | Z_(5) | a").is_err());
        assert!(PiTable::parse("S^3 | 3 | Z").is_err());
        assert!(PiTable::parse("S^3 | 3 | Z | ").is_err());
        assert!(PiTable::parse("S^3 | 4..3 | Z | a").is_err());
    }
}
