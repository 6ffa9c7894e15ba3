use proptest::prelude::*;

use sphere_gauge::manifold::{suspension, suspension_plocal};
use sphere_gauge::oracle::{
    cohomology_from_homology, complex_for_manifold, homology_of, homology_of_expr, ChainComplex,
    IntMatrix,
};
use sphere_gauge::{normalize, AbGroup, Prime};

fn suspended_manifold_homology(m: u64) -> Vec<AbGroup> {
    homology_of(&complex_for_manifold(m).suspension().unwrap()).unwrap()
}

#[test]
fn integral_suspensions_have_the_oracle_homology() {
    for l in -24..=24 {
        for m in [0i64, 1] {
            let expr = suspension(&normalize(l, m).unwrap()).unwrap();
            assert_eq!(
                homology_of_expr(&expr).unwrap(),
                suspended_manifold_homology(m as u64),
                "l = {l}, m = {m}: {expr}"
            );
        }
    }
}

#[test]
fn plocal_suspensions_have_the_localized_oracle_homology() {
    for m in 2..=200u64 {
        for p in [5, 7, 11, 13] {
            let p = Prime::new(p).unwrap();
            let expr = suspension_plocal(&normalize(1, m as i64).unwrap(), p).unwrap();
            let oracle: Vec<AbGroup> = suspended_manifold_homology(m)
                .iter()
                .map(|g| g.localize(p).unwrap())
                .collect();
            assert_eq!(homology_of_expr(&expr).unwrap(), oracle, "m = {m}, p = {p}");
        }
    }
}

#[test]
fn fourth_cohomology_is_the_reduction_mod_m() {
    for m in 0..=60u64 {
        let h = homology_of(&complex_for_manifold(m)).unwrap();
        let h4 = &cohomology_from_homology(&h).unwrap()[4];
        let expected = if m == 0 {
            AbGroup::z()
        } else {
            AbGroup::cyclic(m)
        };
        assert_eq!(h4, &expected, "m = {m}");
    }
}

fn det(a: &[Vec<i64>]) -> i64 {
    match a.len() {
        0 => 1,
        1 => a[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = a[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, &v)| v)
                            .collect()
                    })
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * a[0][j] * det(&minor)
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    (k - 1..n)
        .flat_map(|last| {
            subsets(last, k - 1).into_iter().map(move |mut s| {
                s.push(last);
                s
            })
        })
        .collect()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Rank and the gcd of the maximal nonzero minors, by brute force.
fn rank_and_divisor(a: &[Vec<i64>]) -> (usize, i64) {
    let (rows, cols) = (a.len(), a.first().map_or(0, Vec::len));
    for k in (1..=rows.min(cols)).rev() {
        let mut g = 0;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<i64>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| a[r][c]).collect())
                    .collect();
                g = gcd(g, det(&minor));
            }
        }
        if g != 0 {
            return (k, g);
        }
    }
    (0, 1)
}

proptest! {
    /// H_0 of `Z^c1 -> Z^c0` has free rank `c0 - rank` and torsion of order
    /// equal to the gcd of the maximal minors; H_1 has rank `c1 - rank`.
    #[test]
    fn random_two_term_complexes(c0 in 1usize..4, c1 in 0usize..4, seed in prop::collection::vec(-4i64..5, 9)) {
        let rows: Vec<Vec<i64>> = (0..c0).map(|i| (0..c1).map(|j| seed[i * 3 + j]).collect()).collect();
        let complex = ChainComplex::new(vec![c0, c1], vec![(1, IntMatrix::from_rows(&rows).unwrap())]).unwrap();
        let h = homology_of(&complex).unwrap();
        let (rank, divisor) = rank_and_divisor(&rows);
        prop_assert_eq!(h[0].free_rank() as usize, c0 - rank);
        prop_assert_eq!(h[0].torsion().order().unwrap() as i64, divisor);
        prop_assert_eq!(h[1].free_rank() as usize, c1 - rank);
        prop_assert!(h[1].torsion().is_trivial());
    }
}
