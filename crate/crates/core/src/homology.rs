//! Exact linear algebra for the graph complexes.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coboundary::delta;
use crate::enumerate::{basis, framed_basis};
use crate::error::{GraphError, Result};
use crate::framed::{delta_framed, delta_underline};
use crate::graph::{DecoratedGraph, Parity};
use crate::vector::{GraphVector, Rational};

/// Which coboundary a complex uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Differential {
    Delta,
    /// Skips arcs joining the ends of a short chord (odd only).
    Underline,
    /// Framed complex with crosses (odd only).
    Framed,
}

impl Differential {
    pub fn as_str(self) -> &'static str {
        match self {
            Differential::Delta => "delta",
            Differential::Underline => "underline",
            Differential::Framed => "framed",
        }
    }

    pub fn apply(self, g: &DecoratedGraph) -> Result<GraphVector> {
        match self {
            Differential::Delta => delta(g),
            Differential::Underline => delta_underline(g),
            Differential::Framed => delta_framed(g),
        }
    }

    pub fn basis(self, parity: Parity, k: i64, m: i64) -> Result<Vec<DecoratedGraph>> {
        self.check(parity)?;
        Ok(match self {
            Differential::Framed => framed_basis(k, m),
            _ => basis(parity, k, m),
        })
    }

    fn check(self, parity: Parity) -> Result<()> {
        if self != Differential::Delta && parity != Parity::Odd {
            return Err(GraphError::WrongParity(Parity::Odd));
        }
        Ok(())
    }
}

/// Column-major sparse matrix with exact entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseRationalMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<BTreeMap<usize, Rational>>,
}

impl SparseRationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseRationalMatrix { rows, cols, columns: vec![BTreeMap::new(); cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.columns[j].get(&i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_to(&mut self, i: usize, j: usize, x: &Rational) {
        assert!(i < self.rows && j < self.cols, "entry ({i}, {j}) out of range");
        let slot = self.columns[j].entry(i).or_insert_with(Rational::zero);
        *slot += x;
        if slot.is_zero() {
            self.columns[j].remove(&i);
        }
    }

    pub fn column(&self, j: usize) -> &BTreeMap<usize, Rational> {
        &self.columns[j]
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(BTreeMap::is_empty)
    }

    /// Nonzero entries as `(row, col, value)`, column by column.
    pub fn triplets(&self) -> Vec<(usize, usize, Rational)> {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |(&i, x)| (i, j, x.clone())))
            .collect()
    }

    /// `self * rhs`.
    pub fn mul(&self, rhs: &SparseRationalMatrix) -> SparseRationalMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = SparseRationalMatrix::zeros(self.rows, rhs.cols);
        for (j, col) in rhs.columns.iter().enumerate() {
            for (&k, y) in col {
                for (&i, x) in &self.columns[k] {
                    out.add_to(i, j, &(x * y));
                }
            }
        }
        out
    }

    /// Integer rows, each scaled by the lcm of its denominators.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        let mut rows: Vec<Vec<Rational>> = vec![vec![Rational::zero(); self.cols]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (&i, x) in col {
                rows[i][j] = x.clone();
            }
        }
        rows.into_iter().map(|r| clear_denominators(&r)).collect()
    }

    pub fn rank(&self) -> usize {
        reduce(self.integer_rows(), self.cols).1.len()
    }

    /// Basis of the null space, one vector per free column, each scaled so
    /// that its first nonzero entry is 1.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let (rows, pivots) = reduce(self.integer_rows(), self.cols);
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &c in &pivots {
                v[c] = true;
            }
            v
        };
        let mut out = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut x = vec![Rational::zero(); self.cols];
            x[f] = Rational::one();
            for (row, &c) in rows.iter().zip(&pivots) {
                if !row[f].is_zero() {
                    x[c] = -Rational::new(row[f].clone(), row[c].clone());
                }
            }
            out.push(normalize_first(x));
        }
        out
    }
}

fn normalize_first(x: Vec<Rational>) -> Vec<Rational> {
    match x.iter().find(|c| !c.is_zero()).cloned() {
        None => x,
        Some(lead) => x.into_iter().map(|c| c / &lead).collect(),
    }
}

fn clear_denominators(row: &[Rational]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

fn content_normalize(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
}

/// Fraction-free Gauss-Jordan elimination with first-nonzero pivots. Every
/// combination step keeps integer rows and divides out the row content.
/// Returns the nonzero reduced rows and their pivot columns.
fn reduce(mut rows: Vec<Vec<BigInt>>, ncols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        if rows[r][c].is_negative() {
            for x in rows[r].iter_mut() {
                *x = -x.clone();
            }
        }
        content_normalize(&mut rows[r]);
        let (before, rest) = rows.split_at_mut(r);
        let (prow, after) = rest.split_first_mut().expect("pivot row");
        let pv = prow[c].clone();
        for row in before.iter_mut().chain(after.iter_mut()) {
            if row[c].is_zero() {
                continue;
            }
            let a = row[c].clone();
            for (x, y) in row.iter_mut().zip(prow.iter()) {
                *x = &*x * &pv - &a * y;
            }
            content_normalize(row);
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Rank of a family of vectors of equal length.
pub fn rank_of(vectors: &[Vec<Rational>]) -> usize {
    let ncols = vectors.first().map_or(0, Vec::len);
    let rows = vectors.iter().map(|v| clear_denominators(v)).collect();
    reduce(rows, ncols).1.len()
}

/// Matrix of `diff` from the `(k, m)` basis to the `(k, m + 1)` basis.
pub fn differential_matrix(
    diff: Differential,
    source: &[DecoratedGraph],
    target: &[DecoratedGraph],
) -> Result<SparseRationalMatrix> {
    let index: HashMap<&DecoratedGraph, usize> = target.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let columns: Vec<Result<BTreeMap<usize, Rational>>> = source
        .par_iter()
        .map(|g| {
            let image = diff.apply(g)?;
            let mut col = BTreeMap::new();
            for (h, c) in image.iter() {
                let i = *index.get(h).ok_or_else(|| GraphError::NotInBasis(h.to_string()))?;
                col.insert(i, c.clone());
            }
            Ok(col)
        })
        .collect();
    let mut m = SparseRationalMatrix::zeros(target.len(), source.len());
    for (j, col) in columns.into_iter().enumerate() {
        m.columns[j] = col?;
    }
    Ok(m)
}

/// Matrix of the plain coboundary `D^{k,m} -> D^{k,m+1}`.
pub fn delta_matrix(parity: Parity, k: i64, m: i64) -> Result<SparseRationalMatrix> {
    let src = basis(parity, k, m);
    let tgt = basis(parity, k, m + 1);
    differential_matrix(Differential::Delta, &src, &tgt)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyReport {
    pub parity: Parity,
    pub differential: Differential,
    pub k: i64,
    pub m: i64,
    pub basis: Vec<DecoratedGraph>,
    pub dim_kernel: usize,
    pub rank_previous: usize,
    pub dim_h: usize,
    /// Kernel basis.
    pub cocycles: Vec<GraphVector>,
    /// Kernel vectors independent modulo the image; one per class.
    pub representatives: Vec<GraphVector>,
}

pub fn cohomology(parity: Parity, k: i64, m: i64) -> Result<CohomologyReport> {
    cohomology_with(Differential::Delta, parity, k, m)
}

pub fn cohomology_with(diff: Differential, parity: Parity, k: i64, m: i64) -> Result<CohomologyReport> {
    let prev = diff.basis(parity, k, m - 1)?;
    let here = diff.basis(parity, k, m)?;
    let next = diff.basis(parity, k, m + 1)?;
    cohomology_on(diff, parity, k, m, &prev, here, &next)
}

/// Same as [`cohomology_with`] on bases supplied by the caller (degrees
/// `m - 1`, `m`, `m + 1`); the report keeps the given order of `here`.
pub fn cohomology_on(
    diff: Differential,
    parity: Parity,
    k: i64,
    m: i64,
    prev: &[DecoratedGraph],
    here: Vec<DecoratedGraph>,
    next: &[DecoratedGraph],
) -> Result<CohomologyReport> {
    diff.check(parity)?;
    let d_here = differential_matrix(diff, &here, next)?;
    let d_prev = differential_matrix(diff, prev, &here)?;

    let kernel = d_here.kernel();
    let rank_previous = d_prev.rank();
    let dim_kernel = kernel.len();

    // greedy complement of the image inside the kernel
    let mut span: Vec<Vec<Rational>> = (0..d_prev.cols())
        .map(|j| dense_column(&d_prev, j))
        .filter(|v| v.iter().any(|x| !x.is_zero()))
        .collect();
    let mut current = rank_of(&span);
    let mut representatives = Vec::new();
    for v in &kernel {
        span.push(v.clone());
        let r = rank_of(&span);
        if r > current {
            current = r;
            representatives.push(to_vector(parity, &here, v));
        } else {
            span.pop();
        }
    }

    Ok(CohomologyReport {
        parity,
        differential: diff,
        k,
        m,
        dim_kernel,
        rank_previous,
        dim_h: dim_kernel - rank_previous,
        cocycles: kernel.iter().map(|v| to_vector(parity, &here, v)).collect(),
        representatives,
        basis: here,
    })
}

fn dense_column(m: &SparseRationalMatrix, j: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); m.rows()];
    for (&i, x) in m.column(j) {
        v[i] = x.clone();
    }
    v
}

/// Combination of basis graphs with the given coordinates.
pub fn to_vector(parity: Parity, basis: &[DecoratedGraph], coords: &[Rational]) -> GraphVector {
    let mut out = GraphVector::zero(parity);
    for (g, c) in basis.iter().zip(coords) {
        out.add_canonical(c, g.clone());
    }
    out
}

/// Coordinates of `v` in `basis`; errors if a term is missing.
pub fn coordinates(v: &GraphVector, basis: &[DecoratedGraph]) -> Result<Vec<Rational>> {
    let index: HashMap<&DecoratedGraph, usize> = basis.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let mut out = vec![Rational::zero(); basis.len()];
    for (g, c) in v.iter() {
        let i = *index.get(g).ok_or_else(|| GraphError::NotInBasis(g.to_string()))?;
        out[i] = c.clone();
    }
    Ok(out)
}

/// True iff `v` is homogeneous and its coboundary vanishes exactly.
pub fn verify_cocycle(v: &GraphVector) -> Result<bool> {
    verify_cocycle_with(Differential::Delta, v)
}

pub fn verify_cocycle_with(diff: Differential, v: &GraphVector) -> Result<bool> {
    v.bidegree()?;
    diff.check(v.parity())?;
    let mut out = GraphVector::zero(v.parity());
    for (g, c) in v.iter() {
        out.add_scaled(c, &diff.apply(g)?)?;
    }
    Ok(out.is_zero())
}

/// Terms whose graph is a chord diagram.
pub fn chord_part(v: &GraphVector) -> GraphVector {
    v.filter(DecoratedGraph::is_chord_diagram)
}

/// Rank of the chord-diagram projection of `vectors`.
pub fn chord_part_rank(vectors: &[GraphVector]) -> usize {
    let mut chords: Vec<DecoratedGraph> =
        vectors.iter().flat_map(|v| chord_part(v).iter().map(|(g, _)| g.clone()).collect::<Vec<_>>()).collect();
    chords.sort();
    chords.dedup();
    let rows: Vec<Vec<Rational>> = vectors
        .iter()
        .map(|v| chords.iter().map(|g| v.coefficient(g)).collect())
        .collect();
    if chords.is_empty() {
        return 0;
    }
    rank_of(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vector::{int, rat};

    fn mat(rows: usize, cols: usize, entries: &[(usize, usize, i64)]) -> SparseRationalMatrix {
        let mut m = SparseRationalMatrix::zeros(rows, cols);
        for &(i, j, x) in entries {
            m.add_to(i, j, &int(x));
        }
        m
    }

    #[test]
    fn rank_and_kernel_of_small_matrix() {
        // [[1, 2, 3], [2, 4, 6]] has rank 1 and a 2-dimensional kernel
        let m = mat(2, 3, &[(0, 0, 1), (0, 1, 2), (0, 2, 3), (1, 0, 2), (1, 1, 4), (1, 2, 6)]);
        assert_eq!(m.rank(), 1);
        let ker = m.kernel();
        assert_eq!(ker.len(), 2);
        for v in &ker {
            let s: Rational = (0..3).map(|j| m.get(0, j) * &v[j]).sum();
            assert!(s.is_zero());
            assert_eq!(v.iter().find(|x| !x.is_zero()).unwrap(), &Rational::one());
        }
        assert_eq!(ker[0], vec![int(1), rat(-1, 2), int(0)]);
    }

    #[test]
    fn rational_entries_are_exact() {
        let mut m = SparseRationalMatrix::zeros(1, 2);
        m.add_to(0, 0, &rat(1, 3));
        m.add_to(0, 1, &rat(1, 4));
        assert_eq!(m.kernel(), vec![vec![int(1), rat(-4, 3)]]);
    }

    #[test]
    fn product_and_triplets() {
        let a = mat(2, 2, &[(0, 0, 1), (1, 0, 1)]);
        let b = mat(2, 1, &[(0, 0, 3), (1, 0, 5)]);
        let p = a.mul(&b);
        assert_eq!(p.triplets(), vec![(0, 0, int(3)), (1, 0, int(3))]);
        assert_eq!(p.nnz(), 2);
    }

    #[test]
    fn cancelling_entries_are_dropped() {
        let mut m = SparseRationalMatrix::zeros(1, 1);
        m.add_to(0, 0, &int(2));
        m.add_to(0, 0, &int(-2));
        assert!(m.is_zero());
    }
}
