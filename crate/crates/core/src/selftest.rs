//! Built-in checks run by `sphere-gauge selftest`.
//!
//! Each check sweeps a fixed grid (or a seeded random sample) and reports
//! the first counterexample it finds.

use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::abelian::{vp, AbGroup, Prime};
use crate::bundles::classify_bundles;
use crate::expr::SpaceExpr;
use crate::gauge::{
    decompose_plocal, homotopy_group_of_expr, pi0_unpointed_gauge_m0, pi_pointed_gauge_m0,
    pi_pointed_gauge_plocal, pi_with_coefficients, s7_gauge_equivalent, Localization,
    PlocalVariant, S7Decision,
};
use crate::manifold::{homology, is_homotopy_equivalent, normalize, suspension, suspension_plocal};
use crate::oracle::{complex_for_manifold, homology_of};
use crate::tables::{pi6_moore, LieGroupId};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Outcome = std::result::Result<String, String>;

/// Groups with `pi_6 = 0` covered by the path-component tables.
pub const TABULATED: &[&str] = &[
    "SU4", "SU5", "SU6", "SU7", "Sp2", "Sp3", "Sp4", "Spin5", "Spin6", "Spin7", "Spin8", "Spin9",
    "Spin10", "Spin11", "Spin12", "F4", "E6", "E7", "E8",
];

fn group(name: &str) -> LieGroupId {
    name.parse().expect("built-in group name")
}

fn prime(p: u64) -> Prime {
    Prime::new(p).expect("built-in prime")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn oracle_grid() -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    for l in -24..=24 {
        for m in 0..=24 {
            let spec = normalize(l, m).map_err(|e| e.to_string())?;
            let oracle = homology_of(&complex_for_manifold(m as u64)).map_err(|e| e.to_string())?;
            let closed = homology(&spec);
            ensure(oracle[..] == closed[..], || {
                format!("homology differs at (l, m) = ({l}, {m})")
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} cases in {:.2?}", start.elapsed()))
}

/// Expected path-component row, by family.
fn pi0_row(name: &str) -> &'static str {
    match name {
        "Spin8" => "ℤ³",
        n if n.starts_with("Sp") && !n.starts_with("Spin") || n == "Spin5" => "ℤ²⊕ℤ₂",
        n if n.starts_with("SU") || n.starts_with("Spin") => "ℤ²",
        _ => "ℤ",
    }
}

fn pi0_table() -> Outcome {
    for name in TABULATED {
        for l in [0, 12, -24] {
            let got = pi0_unpointed_gauge_m0(group(name), l).map_err(|e| e.to_string())?;
            ensure(got.to_unicode() == pi0_row(name), || {
                format!(
                    "{name}, l = {l}: got {}, expected {}",
                    got.to_unicode(),
                    pi0_row(name)
                )
            })?;
        }
    }
    Ok(format!("{} groups", TABULATED.len()))
}

fn plocal_pi0_table() -> Outcome {
    let mut cases = 0;
    for name in TABULATED {
        let free = match pi0_row(name) {
            "ℤ³" => 2,
            "ℤ" => 0,
            _ => 1,
        };
        for p in [5, 7, 11] {
            let p = prime(p);
            for r in 1..=3 {
                let q = p.pow(r).map_err(|e| e.to_string())?;
                let expected = AbGroup::new_local(free, &[q], p).map_err(|e| e.to_string())?;
                for m in [q, 6 * q] {
                    let got = pi_pointed_gauge_plocal(group(name), m, 0, 0, p, false)
                        .map_err(|e| e.to_string())?;
                    ensure(got.group == expected, || {
                        format!(
                            "{name}, m = {m}, p = {p}: got {}, expected {expected}",
                            got.group
                        )
                    })?;
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("{cases} cases"))
}

fn classification() -> Outcome {
    for name in TABULATED {
        let g = group(name);
        let c = classify_bundles(g, &normalize(1, 0).unwrap()).map_err(|e| e.to_string())?;
        ensure(c.set == AbGroup::z() && c.size.is_none(), || {
            format!("{name}, m = 0: {}", c.set)
        })?;
        for m in 2..=50u64 {
            let c =
                classify_bundles(g, &normalize(1, m as i64).unwrap()).map_err(|e| e.to_string())?;
            ensure(c.set == AbGroup::cyclic(m) && c.size == Some(m), || {
                format!("{name}, m = {m}: {}", c.set)
            })?;
        }
    }
    for (name, order) in [
        ("SU2", 12),
        ("SU3", 6),
        ("G2", 3),
        ("Sp2", 1),
        ("E8", 1),
        ("SU5", 1),
    ] {
        let c =
            classify_bundles(group(name), &normalize(1, 1).unwrap()).map_err(|e| e.to_string())?;
        ensure(c.set == AbGroup::cyclic(order), || {
            format!("{name}, m = 1: {}", c.set)
        })?;
    }
    Ok("m = 0, 1, 2..=50".into())
}

fn check_equivalence<T: Copy>(
    items: &[T],
    related: impl Fn(T, T) -> bool,
    label: impl Fn(T) -> String,
) -> std::result::Result<(), String> {
    for &a in items {
        ensure(related(a, a), || format!("not reflexive at {}", label(a)))?;
        for &b in items {
            let ab = related(a, b);
            ensure(ab == related(b, a), || {
                format!("not symmetric at {}, {}", label(a), label(b))
            })?;
            if !ab {
                continue;
            }
            for &c in items {
                ensure(!related(b, c) || related(a, c), || {
                    format!("not transitive at {}, {}, {}", label(a), label(b), label(c))
                })?;
            }
        }
    }
    Ok(())
}

pub fn s7_localities() -> Vec<Localization> {
    let mut out = vec![Localization::Integral, Localization::Rational];
    out.extend([2, 3, 5, 7].map(|p| Localization::AtPrime(prime(p))));
    out
}

fn equivalence_laws() -> Outcome {
    for m in 0..=24i64 {
        let specs: Vec<_> = (-24..=24).map(|l| normalize(l, m).unwrap()).collect();
        check_equivalence(
            &specs,
            |a, b| is_homotopy_equivalent(&a, &b).equivalent,
            |s| s.to_string(),
        )?;
    }
    let ks: Vec<i64> = (0..12).collect();
    for name in ["SU2", "SU3", "G2", "Sp1", "Sp2", "E8"] {
        for loc in s7_localities() {
            let g = group(name);
            check_equivalence(
                &ks,
                |a, b| s7_gauge_equivalent(g, a, b, loc).decision == S7Decision::Equivalent,
                |k| format!("{name}, {loc}, k = {k}"),
            )?;
            for &a in &ks {
                for &b in &ks {
                    let d = s7_gauge_equivalent(g, a, b, loc).decision;
                    ensure(d == s7_gauge_equivalent(g, b, a, loc).decision, || {
                        format!("{name}, {loc}: decision not symmetric at {a}, {b}")
                    })?;
                }
            }
        }
    }
    Ok("manifolds over |l| ≤ 24, m ≤ 24; S^7 gauge groups over k ≤ 11".into())
}

/// Blocks of the partition of `ks` generated by the equivalence decisions.
pub fn s7_partition(g: LieGroupId, ks: &[i64], loc: Localization) -> Vec<Vec<i64>> {
    let mut blocks: Vec<Vec<i64>> = Vec::new();
    for &k in ks {
        match blocks
            .iter_mut()
            .find(|b| s7_gauge_equivalent(g, b[0], k, loc).decision == S7Decision::Equivalent)
        {
            Some(b) => b.push(k),
            None => blocks.push(vec![k]),
        }
    }
    blocks
}

fn s7_decision_table() -> Outcome {
    let split = |ks: &[i64]| -> Vec<Vec<i64>> {
        let (a, b): (Vec<i64>, Vec<i64>) = ks.iter().partition(|&&k| k % 3 == 0);
        vec![a, b]
    };
    let mut cases: Vec<(&str, Vec<i64>, Vec<Localization>)> = vec![
        ("SU2", (0..12).collect(), vec![Localization::Integral]),
        ("G2", (0..3).collect(), vec![Localization::Rational]),
        ("SU3", (0..6).collect(), vec![Localization::Rational]),
    ];
    cases[1]
        .2
        .extend([2, 3, 5, 7].map(|p| Localization::AtPrime(prime(p))));
    cases[2]
        .2
        .extend([3, 5, 7].map(|p| Localization::AtPrime(prime(p))));
    for (name, ks, locs) in cases {
        for loc in locs {
            let got = s7_partition(group(name), &ks, loc);
            ensure(got == split(&ks), || {
                format!("{name}, {loc}: partition {got:?}")
            })?;
        }
    }
    Ok("SU(2), G2, SU(3)".into())
}

fn suspension_invariance() -> Outcome {
    for l in -36..=36i64 {
        for l2 in -36..=36i64 {
            let related = (l - l2) % 12 == 0 || (l + l2) % 12 == 0;
            let a = suspension(&normalize(l, 0).unwrap()).map_err(|e| e.to_string())?;
            let b = suspension(&normalize(l2, 0).unwrap()).map_err(|e| e.to_string())?;
            ensure((a == b) == related, || {
                format!("suspensions of l = {l}, {l2}: {a} vs {b}")
            })?;
        }
    }
    let s0 = suspension(&normalize(0, 0).unwrap()).map_err(|e| e.to_string())?;
    let expected = SpaceExpr::wedge([8, 4, 5].map(SpaceExpr::sphere));
    ensure(s0 == expected, || format!("suspension at l = 0: {s0}"))?;
    let s50 = suspension_plocal(&normalize(1, 50).unwrap(), prime(5)).map_err(|e| e.to_string())?;
    let expected = SpaceExpr::localized(
        prime(5),
        SpaceExpr::wedge([SpaceExpr::moore(5, 25), SpaceExpr::sphere(8)]),
    );
    ensure(s50 == expected, || {
        format!("p-local suspension at m = 50: {s50}")
    })?;
    Ok(format!("{s0}; {s50}"))
}

fn moore_consistency() -> Outcome {
    for m in 2..=200u64 {
        for p in [5, 7, 11, 13] {
            let p = prime(p);
            let local = pi6_moore(m)
                .and_then(|g| g.localize(p))
                .map_err(|e| e.to_string())?;
            let q = p.pow(vp(m, p).unwrap()).unwrap();
            let expected = AbGroup::cyclic(q).localize(p).unwrap();
            ensure(local == expected, || format!("m = {m}, p = {p}: {local}"))?;
        }
    }
    Ok("m in 2..=200, p in {5, 7, 11, 13}".into())
}

fn cross_formula() -> Outcome {
    for name in TABULATED {
        let g = group(name);
        let corollary = pi_pointed_gauge_m0(g, 0, 0, 0)
            .map_err(|e| e.to_string())?
            .group;
        let table = pi0_unpointed_gauge_m0(g, 0).map_err(|e| e.to_string())?;
        ensure(corollary.is_isomorphic(&table) == Ok(true), || {
            format!("{name}: {corollary} vs table {table}")
        })?;
        for p in [5, 7, 11] {
            for r in 1..=3 {
                let m = prime(p).pow(r).unwrap();
                let coeff = pi_with_coefficients(g, 4, prime(p), r).map_err(|e| e.to_string())?;
                let formula = pi_pointed_gauge_plocal(g, m, 1, 0, prime(p), true)
                    .map_err(|e| e.to_string())?
                    .group;
                let decomposition =
                    decompose_plocal(g, 0, m, 1, prime(p), PlocalVariant::PointedLooped)
                        .map_err(|e| e.to_string())?;
                let expanded =
                    homotopy_group_of_expr(&decomposition.expr, 0).map_err(|e| e.to_string())?;
                ensure(
                    formula == expanded && !coeff.extension_assumed_split,
                    || format!("{name}, p = {p}, r = {r}: {formula} vs {expanded}"),
                )?;
            }
        }
    }
    Ok(format!("{} groups", TABULATED.len()))
}

fn random_group(rng: &mut StdRng) -> AbGroup {
    let free = rng.random_range(0..3);
    let n = rng.random_range(0..4);
    let torsion: Vec<u64> = (0..n).map(|_| rng.random_range(2..60)).collect();
    AbGroup::new(free, &torsion).expect("small factors")
}

const PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

fn localization_algebra() -> Outcome {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let trials = 10_000;
    for i in 0..trials {
        let (a, b, c) = (
            random_group(&mut rng),
            random_group(&mut rng),
            random_group(&mut rng),
        );
        let p = prime(PRIMES[rng.random_range(0..PRIMES.len())]);
        let q = rng.random_range(1..40u64);
        let (x, y) = (rng.random_range(1..5000u64), rng.random_range(1..5000u64));
        let fail = |what: &str| {
            format!("trial {i}: {what} fails for a = {a}, b = {b}, c = {c}, p = {p}, q = {q}")
        };
        let ab = a.direct_sum(&b).unwrap();
        ensure(ab == b.direct_sum(&a).unwrap(), || fail("commutativity"))?;
        ensure(
            ab.direct_sum(&c).unwrap() == a.direct_sum(&b.direct_sum(&c).unwrap()).unwrap(),
            || fail("associativity"),
        )?;
        ensure(a.direct_sum(&AbGroup::trivial()).unwrap() == a, || {
            fail("unit")
        })?;
        ensure(
            ab.localize(p).unwrap()
                == a.localize(p)
                    .unwrap()
                    .direct_sum(&b.localize(p).unwrap())
                    .unwrap(),
            || fail("localization of sums"),
        )?;
        ensure(
            ab.tensor_with_cyclic(q).unwrap()
                == a.tensor_with_cyclic(q)
                    .unwrap()
                    .direct_sum(&b.tensor_with_cyclic(q).unwrap())
                    .unwrap(),
            || fail("tensor of sums"),
        )?;
        ensure(
            ab.tor_with_cyclic(q).unwrap()
                == a.tor_with_cyclic(q)
                    .unwrap()
                    .direct_sum(&b.tor_with_cyclic(q).unwrap())
                    .unwrap(),
            || fail("tor of sums"),
        )?;
        let free = AbGroup::new(a.free_rank(), &[]).unwrap();
        ensure(free.tor_with_cyclic(q).unwrap().is_trivial(), || {
            fail("tor of free")
        })?;
        ensure(a.to_string().parse::<AbGroup>().as_ref() == Ok(&a), || {
            fail("canonical round trip")
        })?;
        ensure(
            vp(x * y, p).unwrap() == vp(x, p).unwrap() + vp(y, p).unwrap(),
            || format!("trial {i}: v_{p}({x}·{y})"),
        )?;
    }
    Ok(format!("{trials} trials in {:.2?}", start.elapsed()))
}

/// Statements checked, in order.
type NamedCheck = (&'static str, fn() -> Outcome);

pub const CHECKS: [NamedCheck; 10] = [
    ("oracle homology equals closed form", oracle_grid),
    ("path components, l ≡ 0 mod 12", pi0_table),
    ("p-local path components", plocal_pi0_table),
    ("bundle classification", classification),
    ("equivalence relation laws", equivalence_laws),
    ("gauge groups over S^7", s7_decision_table),
    ("suspension invariance", suspension_invariance),
    ("Moore space pi_6 localization", moore_consistency),
    ("cross-formula consistency", cross_formula),
    ("localization algebra", localization_algebra),
];

pub fn run_all() -> Vec<Check> {
    CHECKS
        .iter()
        .enumerate()
        .map(|(i, (name, f))| {
            let (passed, detail) = match f() {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            Check {
                id: i as u8 + 1,
                name,
                passed,
                detail,
            }
        })
        .collect()
}

/// One line per check: `[PASS] 1 name: detail`.
pub fn render(checks: &[Check]) -> String {
    checks
        .iter()
        .map(|c| {
            format!(
                "[{}] {:>2} {}: {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.id,
                c.name,
                c.detail
            )
        })
        .collect::<Vec<_>>()
        .join("\n")
}
