//! Canonical symbolic homotopy types.
//!
//! A [`SpaceExpr`] is built from atoms with products, wedges and
//! localization. Constructors flatten nested products and wedges, drop the
//! point (the unit of both), and sort operands, so two decompositions are the
//! same exactly when their expressions compare equal.
//!
//! Text grammar of the rendering:
//!
//! ```text
//! expr     = factor { " x " factor } | factor { " v " factor } | local
//! local    = operand " @ (" prime ")"
//! factor   = atom | "(" expr ")"
//! atom     = "*" | "S^" n | "P^" n "(" m ")" | group
//!          | "O^" n ["_0"] "[" group "]" [ "{" m "}" ]
//!          | "Map*(Y_" t "," group ")" | "G^" k "(S^4)" | "Susp(Y_" t ")" | "X_" k
//! ```

use std::fmt;

use serde::Serialize;

use crate::abelian::Prime;
use crate::tables::LieGroupId;

/// A basic space. Variant order is the canonical sort order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "atom", rename_all = "snake_case")]
pub enum Atom {
    /// Suspension of the cofibre `Y_t` of `t` times a generator of `pi_6(S^3)`.
    SuspendedCofibre {
        t: u8,
    },
    /// `P^dim(order)`, the cofibre of a degree `order` self-map of `S^(dim-1)`.
    Moore {
        dim: u32,
        order: u64,
    },
    Sphere {
        dim: u32,
    },
    /// The gauge group over `S^4` of the bundle classified by `k`.
    GaugeS4 {
        k: i64,
        group: LieGroupId,
    },
    /// `O^n[G]`, optionally the base-point component `O^n_0[G]`, optionally
    /// with mod-`m` coefficients `O^n[G]{m}`.
    Loop {
        n: u32,
        base_component: bool,
        modulus: Option<u64>,
        group: LieGroupId,
    },
    /// `Map_*(Y_t, G)`.
    MapStar {
        t: u8,
        group: LieGroupId,
    },
    /// The space `X_k`, known only through a fibration `O^4_0[G]{m} -> X_k -> O[G]`.
    OpaqueFiber {
        k: u64,
        m: u64,
        group: LieGroupId,
    },
    Lie {
        group: LieGroupId,
    },
}

impl Atom {
    pub fn loop_space(n: u32, group: LieGroupId) -> Atom {
        Atom::Loop {
            n,
            base_component: false,
            modulus: None,
            group,
        }
    }

    pub fn loop_component0(n: u32, group: LieGroupId) -> Atom {
        Atom::Loop {
            n,
            base_component: true,
            modulus: None,
            group,
        }
    }

    pub fn mod_loop(n: u32, group: LieGroupId, m: u64) -> Atom {
        Atom::Loop {
            n,
            base_component: false,
            modulus: Some(m),
            group,
        }
    }

    pub fn mod_loop_component0(n: u32, group: LieGroupId, m: u64) -> Atom {
        Atom::Loop {
            n,
            base_component: true,
            modulus: Some(m),
            group,
        }
    }

    /// Atoms the library cannot expand further.
    pub fn is_opaque(&self) -> bool {
        matches!(
            self,
            Atom::GaugeS4 { .. } | Atom::MapStar { .. } | Atom::OpaqueFiber { .. }
        )
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::SuspendedCofibre { t } => write!(f, "Susp(Y_{t})"),
            Atom::Moore { dim, order } => write!(f, "P^{dim}({order})"),
            Atom::Sphere { dim } => write!(f, "S^{dim}"),
            Atom::GaugeS4 { k, .. } => write!(f, "G^{k}(S^4)"),
            Atom::Loop {
                n,
                base_component,
                modulus,
                group,
            } => {
                write!(f, "O^{n}")?;
                if *base_component {
                    write!(f, "_0")?;
                }
                write!(f, "[{group}]")?;
                if let Some(m) = modulus {
                    write!(f, "{{{m}}}")?;
                }
                Ok(())
            }
            Atom::MapStar { t, group } => write!(f, "Map*(Y_{t},{group})"),
            Atom::OpaqueFiber { k, .. } => write!(f, "X_{k}"),
            Atom::Lie { group } => write!(f, "{group}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SpaceExpr {
    Point,
    Atom { atom: Atom },
    Product { factors: Vec<SpaceExpr> },
    Wedge { summands: Vec<SpaceExpr> },
    Localized { prime: Prime, inner: Box<SpaceExpr> },
}

impl From<Atom> for SpaceExpr {
    fn from(atom: Atom) -> Self {
        SpaceExpr::Atom { atom }
    }
}

impl SpaceExpr {
    pub fn atom(atom: Atom) -> Self {
        atom.into()
    }

    pub fn sphere(dim: u32) -> Self {
        assert!(dim > 0, "S^0 is not representable");
        Atom::Sphere { dim }.into()
    }

    /// `P^dim(order)`; order 1 is contractible, order 0 is `S^(dim-1) v S^dim`.
    pub fn moore(dim: u32, order: u64) -> Self {
        match order {
            0 => SpaceExpr::wedge([SpaceExpr::sphere(dim - 1), SpaceExpr::sphere(dim)]),
            1 => SpaceExpr::Point,
            _ => Atom::Moore { dim, order }.into(),
        }
    }

    pub fn lie(group: LieGroupId) -> Self {
        Atom::Lie { group }.into()
    }

    pub fn product<I: IntoIterator<Item = SpaceExpr>>(parts: I) -> Self {
        let mut factors = Vec::new();
        for p in parts {
            match p {
                SpaceExpr::Point => {}
                SpaceExpr::Product { factors: inner } => factors.extend(inner),
                other => factors.push(other),
            }
        }
        factors.sort();
        match factors.len() {
            0 => SpaceExpr::Point,
            1 => factors.pop().unwrap(),
            _ => SpaceExpr::Product { factors },
        }
    }

    pub fn wedge<I: IntoIterator<Item = SpaceExpr>>(parts: I) -> Self {
        let mut summands = Vec::new();
        for p in parts {
            match p {
                SpaceExpr::Point => {}
                SpaceExpr::Wedge { summands: inner } => summands.extend(inner),
                other => summands.push(other),
            }
        }
        summands.sort();
        match summands.len() {
            0 => SpaceExpr::Point,
            1 => summands.pop().unwrap(),
            _ => SpaceExpr::Wedge { summands },
        }
    }

    pub fn localized(prime: Prime, inner: SpaceExpr) -> Self {
        match inner {
            SpaceExpr::Point => SpaceExpr::Point,
            SpaceExpr::Localized { prime: q, inner } if q == prime => {
                SpaceExpr::Localized { prime, inner }
            }
            other => SpaceExpr::Localized {
                prime,
                inner: Box::new(other),
            },
        }
    }

    /// All atoms, left to right.
    pub fn atoms(&self) -> Vec<&Atom> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut Vec<&'a Atom>) {
        match self {
            SpaceExpr::Point => {}
            SpaceExpr::Atom { atom } => out.push(atom),
            SpaceExpr::Product { factors: xs } | SpaceExpr::Wedge { summands: xs } => {
                xs.iter().for_each(|x| x.collect_atoms(out))
            }
            SpaceExpr::Localized { inner, .. } => inner.collect_atoms(out),
        }
    }

    pub fn has_opaque_atom(&self) -> bool {
        self.atoms().iter().any(|a| a.is_opaque())
    }

    fn is_compound(&self) -> bool {
        matches!(
            self,
            SpaceExpr::Product { .. } | SpaceExpr::Wedge { .. } | SpaceExpr::Localized { .. }
        )
    }

    fn fmt_operand(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_compound() {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

impl fmt::Display for SpaceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceExpr::Point => write!(f, "*"),
            SpaceExpr::Atom { atom } => write!(f, "{atom}"),
            SpaceExpr::Product { factors: xs } | SpaceExpr::Wedge { summands: xs } => {
                let sep = if matches!(self, SpaceExpr::Product { .. }) {
                    " x "
                } else {
                    " v "
                };
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        write!(f, "{sep}")?;
                    }
                    x.fmt_operand(f)?;
                }
                Ok(())
            }
            SpaceExpr::Localized { prime, inner } => {
                match **inner {
                    SpaceExpr::Localized { .. } => inner.fmt_operand(f)?,
                    _ => write!(f, "{inner}")?,
                }
                write!(f, " @ ({prime})")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn su4() -> LieGroupId {
        "SU4".parse().unwrap()
    }

    #[test]
    fn rendering_examples() {
        let e = SpaceExpr::product([
            Atom::loop_space(7, su4()).into(),
            Atom::GaugeS4 { k: 1, group: su4() }.into(),
            Atom::loop_space(3, su4()).into(),
        ]);
        assert_eq!(e.to_string(), "G^1(S^4) x O^3[SU(4)] x O^7[SU(4)]");
        let w = SpaceExpr::wedge([SpaceExpr::sphere(7), SpaceExpr::sphere(4)]);
        assert_eq!(w.to_string(), "S^4 v S^7");
        let p5 = Prime::new(5).unwrap();
        let l = SpaceExpr::localized(
            p5,
            SpaceExpr::wedge([SpaceExpr::sphere(8), SpaceExpr::moore(5, 25)]),
        );
        assert_eq!(l.to_string(), "P^5(25) v S^8 @ (5)");
        let m = SpaceExpr::product([
            Atom::mod_loop_component0(4, su4(), 25).into(),
            Atom::loop_component0(8, su4()).into(),
        ]);
        assert_eq!(m.to_string(), "O^4_0[SU(4)]{25} x O^8_0[SU(4)]");
        let nested = SpaceExpr::product([w.clone(), SpaceExpr::sphere(2)]);
        assert_eq!(nested.to_string(), "S^2 x (S^4 v S^7)");
    }

    #[test]
    fn units_and_degenerate_moore() {
        assert_eq!(SpaceExpr::moore(4, 1), SpaceExpr::Point);
        assert_eq!(
            SpaceExpr::wedge([SpaceExpr::Point, SpaceExpr::sphere(8)]),
            SpaceExpr::sphere(8)
        );
        assert_eq!(SpaceExpr::product(Vec::new()), SpaceExpr::Point);
        assert_eq!(
            SpaceExpr::moore(5, 0),
            SpaceExpr::wedge([SpaceExpr::sphere(4), SpaceExpr::sphere(5)])
        );
        assert_eq!(SpaceExpr::Point.to_string(), "*");
    }

    #[test]
    fn json_tree_shape() {
        let e = SpaceExpr::product([SpaceExpr::lie(su4()), Atom::loop_space(7, su4()).into()]);
        let v = serde_json::to_value(&e).unwrap();
        assert_eq!(v["kind"], "product");
        assert_eq!(v["factors"][0]["atom"]["atom"], "loop");
        assert_eq!(v["factors"][1]["atom"]["group"], "SU(4)");
    }

    fn arb_atom() -> impl Strategy<Value = SpaceExpr> {
        prop_oneof![
            (1u32..10).prop_map(SpaceExpr::sphere),
            (2u32..8, 2u64..30).prop_map(|(d, m)| SpaceExpr::moore(d, m)),
            (0u32..9).prop_map(|n| Atom::loop_space(n, "Sp2".parse().unwrap()).into()),
        ]
    }

    proptest! {
        #[test]
        fn product_is_order_independent(mut xs in prop::collection::vec(arb_atom(), 0..6), seed in any::<u64>()) {
            let a = SpaceExpr::product(xs.clone());
            let k = xs.len().max(1);
            xs.rotate_left((seed as usize) % k);
            xs.reverse();
            prop_assert_eq!(&a, &SpaceExpr::product(xs.clone()));
            // flattening: grouping does not matter
            let (l, r) = xs.split_at(xs.len() / 2);
            let grouped = SpaceExpr::product([SpaceExpr::product(l.to_vec()), SpaceExpr::product(r.to_vec())]);
            prop_assert_eq!(&a, &grouped);
        }

        #[test]
        fn wedge_is_order_independent(xs in prop::collection::vec(arb_atom(), 0..6)) {
            let mut ys = xs.clone();
            ys.reverse();
            prop_assert_eq!(SpaceExpr::wedge(xs), SpaceExpr::wedge(ys));
        }
    }
}
