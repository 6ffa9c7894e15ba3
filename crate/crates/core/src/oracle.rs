//! Cellular homology by Smith normal form.
//!
//! This module builds chain complexes directly from cell structures and
//! shares nothing with [`crate::manifold`] except [`AbGroup`], so it can be
//! used to check the closed-form homology there.
//!
//! Text format for user complexes:
//!
//! ```text
//! # cells in degrees 0, 1, 2, ...
//! cells 1 0 0 1 1 0 0 1
//! # boundary from degree 4 to degree 3: rows(c_3) lines of c_4 integers
//! d 4
//! 6
//! ```
//!
//! Omitted boundaries are zero.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::abelian::AbGroup;
use crate::error::{invalid, Error, Result};
use crate::expr::{Atom, SpaceExpr};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(invalid("matrix rows have different lengths"));
        }
        let entries = rows.iter().flatten().cloned().map(Into::into).collect();
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    fn get_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(invalid(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    *out.get_mut(i, j) += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.entries.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] -= q * row[src]
    fn row_sub(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let v = self.get(src, j) * q;
            *self.get_mut(dst, j) -= v;
        }
    }

    fn col_sub(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, src) * q;
            *self.get_mut(i, dst) -= v;
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Nonzero diagonal entries `d_1 | d_2 | ...` of the Smith normal form.
/// The rank of the matrix is the length of the result.
pub fn smith_normal_form(a: &IntMatrix) -> Vec<BigInt> {
    let mut m = a.clone();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < m.rows.min(m.cols) {
        // pivot on the smallest nonzero absolute value in the remaining block
        let pivot = (t..m.rows)
            .flat_map(|i| (t..m.cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !m.get(i, j).is_zero())
            .min_by(|&(a, b), &(c, d)| m.get(a, b).abs().cmp(&m.get(c, d).abs()));
        let Some((pi, pj)) = pivot else { break };
        m.swap_rows(t, pi);
        m.swap_cols(t, pj);
        let p = m.get(t, t).clone();
        let mut clean = true;
        for i in t + 1..m.rows {
            let q = m.get(i, t).div_floor(&p);
            if !q.is_zero() {
                m.row_sub(i, t, &q);
            }
            clean &= m.get(i, t).is_zero();
        }
        for j in t + 1..m.cols {
            let q = m.get(t, j).div_floor(&p);
            if !q.is_zero() {
                m.col_sub(j, t, &q);
            }
            clean &= m.get(t, j).is_zero();
        }
        if !clean {
            continue;
        }
        // enforce divisibility: fold an offending row into the pivot row
        let offending =
            (t + 1..m.rows).find(|&i| (t + 1..m.cols).any(|j| !m.get(i, j).is_multiple_of(&p)));
        if let Some(i) = offending {
            let minus_one = BigInt::from(-1);
            m.row_sub(t, i, &minus_one);
            continue;
        }
        diag.push(p.abs());
        t += 1;
    }
    diag
}

/// Cells per degree and boundary maps `d_n : C_n -> C_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplex {
    cells: Vec<usize>,
    /// `boundaries[n]` has `cells[n-1]` rows and `cells[n]` columns; index 0 is empty.
    boundaries: Vec<IntMatrix>,
}

impl ChainComplex {
    /// Missing boundaries default to zero. Checks shapes and `d ∘ d = 0`.
    pub fn new(cells: Vec<usize>, boundaries: Vec<(usize, IntMatrix)>) -> Result<Self> {
        let mut ds: Vec<IntMatrix> = (0..cells.len())
            .map(|n| IntMatrix::zeros(if n == 0 { 0 } else { cells[n - 1] }, cells[n]))
            .collect();
        for (n, d) in boundaries {
            if n == 0 || n >= cells.len() {
                return Err(invalid(format!("no boundary map in degree {n}")));
            }
            if (d.rows, d.cols) != (cells[n - 1], cells[n]) {
                return Err(invalid(format!(
                    "d_{n} must be {}x{}, got {}x{}",
                    cells[n - 1],
                    cells[n],
                    d.rows,
                    d.cols
                )));
            }
            ds[n] = d;
        }
        for n in 2..cells.len() {
            if !ds[n - 1].mul(&ds[n])?.is_zero() {
                return Err(invalid(format!("d_{} ∘ d_{n} is not zero", n - 1)));
            }
        }
        Ok(ChainComplex {
            cells,
            boundaries: ds,
        })
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    pub fn boundary(&self, n: usize) -> Option<&IntMatrix> {
        self.boundaries.get(n)
    }

    pub fn top_degree(&self) -> usize {
        self.cells.len().saturating_sub(1)
    }

    /// Reduced suspension; needs a single 0-cell.
    pub fn suspension(&self) -> Result<ChainComplex> {
        if self.cells.first() != Some(&1) {
            return Err(invalid("suspension needs exactly one 0-cell"));
        }
        let mut cells = vec![1, 0];
        cells.extend_from_slice(&self.cells[1..]);
        let boundaries = (2..self.cells.len())
            .map(|n| (n + 1, self.boundaries[n].clone()))
            .collect();
        ChainComplex::new(cells, boundaries)
    }

    /// Wedge at the 0-cell of complexes with a single 0-cell each.
    pub fn wedge(parts: &[ChainComplex]) -> Result<ChainComplex> {
        if parts.iter().any(|c| c.cells.first() != Some(&1)) {
            return Err(invalid("wedge summands need exactly one 0-cell"));
        }
        let top = parts
            .iter()
            .map(ChainComplex::top_degree)
            .max()
            .unwrap_or(0);
        let mut cells = vec![0usize; top + 1];
        cells[0] = 1;
        for c in parts {
            for n in 1..c.cells.len() {
                cells[n] += c.cells[n];
            }
        }
        let mut boundaries = Vec::new();
        for n in 2..=top {
            let mut d = IntMatrix::zeros(cells[n - 1], cells[n]);
            let (mut r0, mut c0) = (0, 0);
            for c in parts {
                if n < c.cells.len() {
                    let b = &c.boundaries[n];
                    for i in 0..b.rows {
                        for j in 0..b.cols {
                            *d.get_mut(r0 + i, c0 + j) = b.get(i, j).clone();
                        }
                    }
                    c0 += c.cells[n];
                }
                if n - 1 < c.cells.len() {
                    r0 += c.cells[n - 1];
                }
            }
            boundaries.push((n, d));
        }
        ChainComplex::new(cells, boundaries)
    }

    pub fn parse(text: &str) -> Result<ChainComplex> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let bad = |line: usize, msg: String| Error::TableData { line, msg };
        let parse_ints = |line: usize, s: &str| -> Result<Vec<BigInt>> {
            s.split_whitespace()
                .map(|t| {
                    t.parse::<BigInt>()
                        .map_err(|_| bad(line, format!("not an integer: '{t}'")))
                })
                .collect()
        };
        let (n0, first) = lines.next().ok_or_else(|| bad(0, "empty complex".into()))?;
        let cells: Vec<usize> = match first.strip_prefix("cells") {
            Some(rest) => rest
                .split_whitespace()
                .map(|t| {
                    t.parse()
                        .map_err(|_| bad(n0, format!("bad cell count '{t}'")))
                })
                .collect::<Result<_>>()?,
            None => return Err(bad(n0, "expected 'cells <c0> <c1> ...'".into())),
        };
        let mut boundaries = Vec::new();
        while let Some((ln, line)) = lines.next() {
            let n: usize = line
                .strip_prefix("d ")
                .and_then(|s| s.trim().parse().ok())
                .ok_or_else(|| bad(ln, format!("expected 'd <degree>', got '{line}'")))?;
            if n == 0 || n >= cells.len() {
                return Err(bad(ln, format!("no boundary map in degree {n}")));
            }
            let mut rows = Vec::new();
            for _ in 0..cells[n - 1] {
                let (rl, row) = lines
                    .next()
                    .ok_or_else(|| bad(ln, format!("d {n} needs {} rows", cells[n - 1])))?;
                let row = parse_ints(rl, row)?;
                if row.len() != cells[n] {
                    return Err(bad(rl, format!("row of d {n} needs {} entries", cells[n])));
                }
                rows.push(row);
            }
            let d = IntMatrix {
                rows: cells[n - 1],
                cols: cells[n],
                entries: rows.concat(),
            };
            boundaries.push((n, d));
        }
        ChainComplex::new(cells, boundaries)
    }
}

impl fmt::Display for ChainComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.cells.iter().map(ToString::to_string).collect();
        writeln!(f, "cells {}", cells.join(" "))?;
        for n in 1..self.cells.len() {
            let d = &self.boundaries[n];
            if !d.is_zero() {
                writeln!(f, "d {n}")?;
                write!(f, "{d}")?;
            }
        }
        Ok(())
    }
}

fn to_u64(d: &BigInt) -> Result<u64> {
    d.to_u64()
        .ok_or_else(|| Error::Overflow(format!("torsion coefficient {d} does not fit in 64 bits")))
}

/// `H_n` for `n` in `0..=top degree`.
pub fn homology_of(complex: &ChainComplex) -> Result<Vec<AbGroup>> {
    let top = complex.top_degree();
    let snf: Vec<Vec<BigInt>> = (0..=top + 1)
        .map(|n| match complex.boundaries.get(n) {
            Some(d) => smith_normal_form(d),
            None => Vec::new(),
        })
        .collect();
    (0..=top)
        .map(|n| {
            let kernel = complex.cells[n] - snf[n].len();
            let image = &snf[n + 1];
            let free = kernel - image.len();
            let torsion = image
                .iter()
                .filter(|d| !d.is_one_abs())
                .map(to_u64)
                .collect::<Result<Vec<_>>>()?;
            AbGroup::new(free as u32, &torsion)
        })
        .collect()
}

trait AbsOne {
    fn is_one_abs(&self) -> bool;
}

impl AbsOne for BigInt {
    fn is_one_abs(&self) -> bool {
        self.magnitude() == &num_bigint::BigUint::from(1u8)
    }
}

/// `H^n = Hom(H_n, Z) ⊕ Ext(H_{n-1}, Z)` from the homology.
pub fn cohomology_from_homology(h: &[AbGroup]) -> Result<Vec<AbGroup>> {
    (0..h.len())
        .map(|n| {
            let free = AbGroup::new(h[n].free_rank(), &[])?;
            match n {
                0 => Ok(free),
                _ => free.direct_sum(&h[n - 1].torsion()),
            }
        })
        .collect()
}

/// `S^n` with one 0-cell and one `n`-cell.
pub fn sphere_complex(n: usize) -> Result<ChainComplex> {
    if n == 0 {
        return Err(invalid("sphere dimension must be positive"));
    }
    let mut cells = vec![0; n + 1];
    cells[0] = 1;
    cells[n] = 1;
    ChainComplex::new(cells, Vec::new())
}

/// `P^n(m)`: cells in degrees 0, `n-1`, `n` with `d_n = (m)`.
pub fn moore_complex(n: usize, m: u64) -> Result<ChainComplex> {
    if n < 2 {
        return Err(invalid("Moore space dimension must be at least 2"));
    }
    let mut cells = vec![0; n + 1];
    cells[0] = 1;
    cells[n - 1] += 1;
    cells[n] += 1;
    let d = IntMatrix::from_rows(&[vec![BigInt::from(m)]])?;
    ChainComplex::new(cells, vec![(n, d)])
}

/// `S^3 ∪ e^4 ∪ e^7` with the 4-cell attached by a degree-`m` map; the
/// twist `l` does not enter the cellular chain complex.
pub fn complex_for_manifold(m: u64) -> ChainComplex {
    let cells = vec![1, 0, 0, 1, 1, 0, 0, 1];
    let d4 = IntMatrix {
        rows: 1,
        cols: 1,
        entries: vec![BigInt::from(m)],
    };
    ChainComplex::new(cells, vec![(4, d4)]).expect("the manifold complex is well formed")
}

/// Cell structure of a wedge of spheres, Moore spaces and `Susp(Y_t)`.
pub fn complex_for_expr(expr: &SpaceExpr) -> Result<ChainComplex> {
    match expr {
        SpaceExpr::Point => ChainComplex::new(vec![1], Vec::new()),
        SpaceExpr::Wedge { summands } => {
            let parts = summands
                .iter()
                .map(complex_for_expr)
                .collect::<Result<Vec<_>>>()?;
            ChainComplex::wedge(&parts)
        }
        SpaceExpr::Atom { atom } => match atom {
            Atom::Sphere { dim } => sphere_complex(*dim as usize),
            Atom::Moore { dim, order } => moore_complex(*dim as usize, *order),
            // Y_t = S^3 ∪ e^7
            Atom::SuspendedCofibre { .. } => {
                ChainComplex::wedge(&[sphere_complex(4)?, sphere_complex(8)?])
            }
            other => Err(invalid(format!("no cell structure for {other}"))),
        },
        other => Err(invalid(format!("no cell structure for {other}"))),
    }
}

/// Homology of a wedge expression; localized expressions give local groups.
pub fn homology_of_expr(expr: &SpaceExpr) -> Result<Vec<AbGroup>> {
    match expr {
        SpaceExpr::Localized { prime, inner } => homology_of_expr(inner)?
            .iter()
            .map(|g| g.localize(*prime))
            .collect(),
        _ => homology_of(&complex_for_expr(expr)?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn snf(rows: &[Vec<i64>]) -> Vec<i64> {
        smith_normal_form(&IntMatrix::from_rows(rows).unwrap())
            .iter()
            .map(|d| d.to_i64().unwrap())
            .collect()
    }

    fn render(h: &[AbGroup]) -> Vec<String> {
        h.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn snf_examples() {
        assert_eq!(snf(&[vec![6]]), vec![6]);
        assert_eq!(snf(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(snf(&[vec![0, 0], vec![0, 0]]), Vec::<i64>::new());
        assert_eq!(
            snf(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]),
            vec![2, 6, 12]
        );
        assert_eq!(snf(&[vec![-4]]), vec![4]);
        assert_eq!(snf(&[vec![4, 6]]), vec![2]);
    }

    #[test]
    fn manifold_complex_examples() {
        let h = homology_of(&complex_for_manifold(0)).unwrap();
        assert_eq!(render(&h), ["Z", "0", "0", "Z", "Z", "0", "0", "Z"]);
        let h = homology_of(&complex_for_manifold(6)).unwrap();
        assert_eq!(h[3], AbGroup::cyclic(6));
        let h = homology_of(&complex_for_manifold(1)).unwrap();
        assert_eq!(render(&h), ["Z", "0", "0", "0", "0", "0", "0", "Z"]);
    }

    #[test]
    fn sphere_and_moore() {
        let h = homology_of(&sphere_complex(5).unwrap()).unwrap();
        assert_eq!(render(&h), ["Z", "0", "0", "0", "0", "Z"]);
        let h = homology_of(&moore_complex(4, 12).unwrap()).unwrap();
        assert_eq!(render(&h), ["Z", "0", "0", "Z_12", "0"]);
        let h = homology_of(&moore_complex(4, 12).unwrap().suspension().unwrap()).unwrap();
        assert_eq!(render(&h), ["Z", "0", "0", "0", "Z_12", "0"]);
    }

    #[test]
    fn cohomology_detects_reduction_mod_m() {
        for (m, h4) in [(0u64, "Z"), (1, "0"), (6, "Z_6"), (25, "Z_25")] {
            let h = homology_of(&complex_for_manifold(m)).unwrap();
            assert_eq!(cohomology_from_homology(&h).unwrap()[4].to_string(), h4);
        }
    }

    #[test]
    fn rejects_bad_complexes() {
        let d1 = IntMatrix::from_rows(&[vec![1]]).unwrap();
        let d2 = IntMatrix::from_rows(&[vec![1]]).unwrap();
        assert!(ChainComplex::new(vec![1, 1, 1], vec![(1, d1), (2, d2)]).is_err());
        let wrong_shape = IntMatrix::from_rows(&[vec![1, 2]]).unwrap();
        assert!(ChainComplex::new(vec![1, 1], vec![(1, wrong_shape)]).is_err());
    }

    #[test]
    fn text_format_round_trip() {
        let text = "# M_{3,6}\ncells 1 0 0 1 1 0 0 1\nd 4\n6\n";
        let c = ChainComplex::parse(text).unwrap();
        assert_eq!(c, complex_for_manifold(6));
        assert_eq!(ChainComplex::parse(&c.to_string()).unwrap(), c);
        let rp2 = "cells 1 1 1\nd 1\n0\nd 2\n2\n";
        let h = homology_of(&ChainComplex::parse(rp2).unwrap()).unwrap();
        assert_eq!(render(&h), ["Z", "Z_2", "0"]);
        assert!(ChainComplex::parse("cells 1 1\nd 1\n1 2\n").is_err());
        assert!(ChainComplex::parse("d 1\n").is_err());
        assert!(ChainComplex::parse("cells 1 x\n").is_err());
    }

    #[test]
    fn expr_complexes() {
        let e = SpaceExpr::wedge([4, 5, 8].map(SpaceExpr::sphere));
        let h = homology_of_expr(&e).unwrap();
        assert_eq!(render(&h), ["Z", "0", "0", "0", "Z", "Z", "0", "0", "Z"]);
        let e = SpaceExpr::wedge([SpaceExpr::moore(5, 25), SpaceExpr::sphere(8)]);
        assert_eq!(homology_of_expr(&e).unwrap()[4], AbGroup::cyclic(25));
    }

    /// Rank of a matrix with at most two rows, from its 2x2 minors.
    fn rank_small(rows: &[Vec<i64>]) -> usize {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().flatten().all(|&x| x == 0) {
            return 0;
        }
        for i in 0..r {
            for j in i + 1..r {
                for k in 0..c {
                    for l in k + 1..c {
                        if rows[i][k] * rows[j][l] - rows[i][l] * rows[j][k] != 0 {
                            return 2;
                        }
                    }
                }
            }
        }
        1
    }

    proptest! {
        #[test]
        fn snf_is_divisibility_chain(rows in prop::collection::vec(prop::collection::vec(-20i64..20, 3), 1..4)) {
            let d = snf(&rows);
            for w in d.windows(2) {
                prop_assert_eq!(w[1] % w[0], 0);
            }
            prop_assert!(d.iter().all(|&x| x > 0));
        }

        #[test]
        fn snf_invariant_under_permutation(
            rows in prop::collection::vec(prop::collection::vec(-20i64..20, 3), 3),
            row_perm in Just(vec![0usize, 1, 2]).prop_shuffle(),
            col_perm in Just(vec![0usize, 1, 2]).prop_shuffle(),
        ) {
            let permuted: Vec<Vec<i64>> = row_perm
                .iter()
                .map(|&i| col_perm.iter().map(|&j| rows[i][j]).collect())
                .collect();
            prop_assert_eq!(snf(&rows), snf(&permuted));
        }

        #[test]
        fn rank_matches_minors(rows in prop::collection::vec(prop::collection::vec(-5i64..5, 2), 2)) {
            prop_assert_eq!(snf(&rows).len(), rank_small(&rows));
        }

        #[test]
        fn determinant_is_product_of_factors(rows in prop::collection::vec(prop::collection::vec(-9i64..9, 2), 2)) {
            let det = (rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]).abs();
            let d = snf(&rows);
            if det != 0 {
                prop_assert_eq!(d.iter().product::<i64>(), det);
            }
        }
    }
}
