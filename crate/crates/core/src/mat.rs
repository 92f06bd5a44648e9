//! Dense exact matrices over [`Rat`] and row-space utilities.
//!
//! Rank, kernel and solving go through fraction-free (Bareiss) elimination
//! on a denominator-cleared integer copy, so intermediate entries stay
//! integer-sized. Pivoting is deterministic: the first nonzero entry in
//! column order wins, which keeps every downstream basis reproducible.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rat::Rat;

/// A dense `rows x cols` matrix over the rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Mat {
            rows,
            cols,
            entries,
        }
    }

    /// Column vector from a slice.
    pub fn column(v: &[Rat]) -> Self {
        Mat {
            rows: v.len(),
            cols: 1,
            entries: v.to_vec(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col_vec(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rat::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - other.get(i, j))
    }

    pub fn neg(&self) -> Mat {
        Mat::from_fn(self.rows, self.cols, |i, j| -self.get(i, j))
    }

    pub fn scale(&self, k: &Rat) -> Mat {
        Mat::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * k)
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(
            self.cols, other.rows,
            "dimension mismatch in matrix product"
        );
        let mut out = Mat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    let prod = a * b;
                    out.entries[idx] += &prod;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for j in 0..self.cols {
                    if !v[j].is_zero() && !self.get(i, j).is_zero() {
                        let p = self.get(i, j) * &v[j];
                        acc += &p;
                    }
                }
                acc
            })
            .collect()
    }

    /// `[self | other]` side by side.
    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        Mat::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    /// `self` on top of `other`.
    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        Mat::from_fn(self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self.get(i, j).clone()
            } else {
                other.get(i - self.rows, j).clone()
            }
        })
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Mat) -> Mat {
        Mat::from_fn(
            self.rows + other.rows,
            self.cols + other.cols,
            |i, j| match (i < self.rows, j < self.cols) {
                (true, true) => self.get(i, j).clone(),
                (false, false) => other.get(i - self.rows, j - self.cols).clone(),
                _ => Rat::zero(),
            },
        )
    }

    /// Kronecker product: `(self ⊗ other)[(i p + k), (j q + l)] = self[i][j] · other[k][l]`.
    pub fn kron(&self, other: &Mat) -> Mat {
        let (p, q) = (other.rows, other.cols);
        Mat::from_fn(self.rows * p, self.cols * q, |i, j| {
            self.get(i / p, j / q) * other.get(i % p, j % q)
        })
    }

    /// Rank over the rationals by fraction-free elimination.
    pub fn rank(&self) -> usize {
        let (_, pivots) = bareiss_echelon(self.to_cleared_int());
        pivots.len()
    }

    /// Basis of the right null space. Each vector is a primitive integer
    /// vector whose entry at its defining free column is positive; the
    /// basis is ordered by free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let (ech, pivots) = bareiss_echelon(self.to_cleared_int());
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let mut out = Vec::new();
        for f in 0..self.cols {
            if pivot_cols.contains(&f) {
                continue;
            }
            let mut x = vec![Rat::zero(); self.cols];
            x[f] = Rat::one();
            for &(r, pc) in pivots.iter().rev() {
                if pc > f {
                    continue;
                }
                let mut acc = Rat::zero();
                for j in (pc + 1)..self.cols {
                    if !x[j].is_zero() && !ech[r][j].is_zero() {
                        let p = &big_to_rat(&ech[r][j]) * &x[j];
                        acc += &p;
                    }
                }
                x[pc] = -(&acc / &big_to_rat(&ech[r][pc]));
            }
            out.push(primitive_integer(&x));
        }
        out
    }

    /// Some `x` with `self · x = b`, free coordinates set to zero, or `None`
    /// when `b` is outside the column space. Panics on a length mismatch.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(self.rows, b.len(), "right-hand side has wrong length");
        let aug = self.hstack(&Mat::column(b));
        let (ech, pivots) = bareiss_echelon(aug.to_cleared_int());
        if pivots.iter().any(|&(_, c)| c == self.cols) {
            return None;
        }
        let mut x = vec![Rat::zero(); self.cols];
        for &(r, pc) in pivots.iter().rev() {
            let mut acc = big_to_rat(&ech[r][self.cols]);
            for j in (pc + 1)..self.cols {
                if !x[j].is_zero() && !ech[r][j].is_zero() {
                    let p = &big_to_rat(&ech[r][j]) * &x[j];
                    acc -= &p;
                }
            }
            x[pc] = &acc / &big_to_rat(&ech[r][pc]);
        }
        Some(x)
    }

    /// Columnwise [`Mat::solve`]; `None` if any column is unsolvable.
    pub fn solve_mat(&self, rhs: &Mat) -> Option<Mat> {
        assert_eq!(self.rows, rhs.rows);
        let mut cols = Vec::with_capacity(rhs.cols);
        for c in 0..rhs.cols {
            cols.push(self.solve(&rhs.col_vec(c))?);
        }
        let mut out = Mat::zero(self.cols, rhs.cols);
        for (c, col) in cols.iter().enumerate() {
            for r in 0..self.cols {
                out.set(r, c, col[r].clone());
            }
        }
        Some(out)
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() || self.rank() != self.rows {
            return None;
        }
        self.solve_mat(&Mat::identity(self.rows))
    }

    /// Reduced row echelon form with its pivot columns, by plain rational
    /// Gauss-Jordan. This is the canonicalization path, kept separate from
    /// the fraction-free one.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pr = 0usize;
        for col in 0..m.cols {
            if pr == m.rows {
                break;
            }
            let Some(pivot_row) = (pr..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if pivot_row != pr {
                for j in 0..m.cols {
                    let a = m.get(pr, j).clone();
                    let b = m.get(pivot_row, j).clone();
                    m.set(pr, j, b);
                    m.set(pivot_row, j, a);
                }
            }
            let inv = m.get(pr, col).recip();
            for j in col..m.cols {
                let v = m.get(pr, j) * &inv;
                m.set(pr, j, v);
            }
            for r in 0..m.rows {
                if r == pr || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for j in col..m.cols {
                    let v = m.get(r, j) - &(&factor * m.get(pr, j));
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            pr += 1;
        }
        (m, pivots)
    }

    fn to_cleared_int(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| {
                let mut lcm = BigInt::one();
                for v in self.row(r) {
                    lcm = lcm.lcm(v.denom());
                }
                let mut row: Vec<BigInt> = self
                    .row(r)
                    .iter()
                    .map(|v| v.numer() * (&lcm / v.denom()))
                    .collect();
                let mut g = BigInt::zero();
                for v in &row {
                    g = g.gcd(v);
                }
                if g > BigInt::one() {
                    for v in &mut row {
                        *v /= &g;
                    }
                }
                row
            })
            .collect()
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  [")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Bareiss fraction-free forward elimination on an integer matrix.
/// Returns the echelon matrix and the pivot positions `(row, col)` in order.
fn bareiss_echelon(mut m: Vec<Vec<BigInt>>) -> (Vec<Vec<BigInt>>, Vec<(usize, usize)>) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut pr = 0usize;
    for col in 0..cols {
        if pr == rows {
            break;
        }
        let Some(pivot_row) = (pr..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pr, pivot_row);
        for i in (pr + 1)..rows {
            for j in (col + 1)..cols {
                let t = &m[pr][col] * &m[i][j] - &m[i][col] * &m[pr][j];
                // exact by the Bareiss minor identity
                m[i][j] = t / &prev;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[pr][col].clone();
        pivots.push((pr, col));
        pr += 1;
    }
    (m, pivots)
}

fn big_to_rat(n: &BigInt) -> Rat {
    Rat::new(n.clone(), BigInt::one())
}

/// Clears denominators and divides by the content; the first nonzero entry
/// keeps its sign, so callers wanting a sign convention fix it themselves.
fn primitive_integer(v: &[Rat]) -> Vec<Rat> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        g = BigInt::one();
    }
    ints.iter()
        .map(|x| Rat::new(x / &g, BigInt::one()))
        .collect()
}

/// A subspace of `Q^ambient` held as a reduced-row-echelon basis, so two
/// equal subspaces have identical representations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RowSpace {
    ambient: usize,
    basis: Mat,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn from_rows(rows: &Mat) -> Self {
        let (rref, pivots) = rows.rref();
        let basis = Mat::from_fn(pivots.len(), rows.cols(), |i, j| rref.get(i, j).clone());
        RowSpace {
            ambient: rows.cols(),
            basis,
            pivots,
        }
    }

    pub fn zero(ambient: usize) -> Self {
        RowSpace {
            ambient,
            basis: Mat::zero(0, ambient),
            pivots: Vec::new(),
        }
    }

    /// Like [`RowSpace::from_rows`] but safe for an empty generating set,
    /// where the ambient dimension cannot be inferred.
    pub fn from_vectors(ambient: usize, vectors: Vec<Vec<Rat>>) -> Self {
        if vectors.is_empty() {
            return RowSpace::zero(ambient);
        }
        assert!(vectors.iter().all(|v| v.len() == ambient));
        RowSpace::from_rows(&Mat::from_rows(vectors))
    }

    pub fn full(ambient: usize) -> Self {
        RowSpace::from_rows(&Mat::identity(ambient))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Basis vectors as rows of a matrix.
    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    /// Basis vectors as the columns of an `ambient x dim` matrix.
    pub fn basis_cols(&self) -> Mat {
        self.basis.transpose()
    }

    /// Residual of `v` after eliminating all pivot coordinates; zero iff
    /// `v` lies in the subspace.
    pub fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.ambient);
        let mut w = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if w[p].is_zero() {
                continue;
            }
            let factor = w[p].clone();
            for j in 0..self.ambient {
                let t = &factor * self.basis.get(i, j);
                w[j] -= &t;
            }
        }
        w
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.reduce(v).iter().all(Rat::is_zero)
    }

    pub fn contains_space(&self, other: &RowSpace) -> bool {
        (0..other.dim()).all(|i| self.contains(other.basis.row(i)))
    }

    /// Coordinates of `v` in the echelon basis, or `None` when outside.
    pub fn express(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(v.len(), self.ambient);
        let coords: Vec<Rat> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut check = v.to_vec();
        for (i, c) in coords.iter().enumerate() {
            for j in 0..self.ambient {
                let t = c * self.basis.get(i, j);
                check[j] -= &t;
            }
        }
        check.iter().all(Rat::is_zero).then_some(coords)
    }

    pub fn sum(&self, other: &RowSpace) -> RowSpace {
        assert_eq!(self.ambient, other.ambient);
        RowSpace::from_rows(&self.basis.vstack(&other.basis))
    }

    /// The ambient coordinates not used as pivots; the corresponding
    /// standard basis vectors span a complement.
    pub fn complement_cols(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    /// Coordinates of the class of `v` in the quotient by this subspace,
    /// w.r.t. the classes of the complement columns.
    pub fn quotient_coords(&self, v: &[Rat]) -> Vec<Rat> {
        let w = self.reduce(v);
        self.complement_cols()
            .iter()
            .map(|&c| w[c].clone())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64) -> Rat {
        Rat::from_int(n)
    }

    fn mat(rows: &[&[i64]]) -> Mat {
        Mat::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&n| r(n)).collect())
                .collect(),
        )
    }

    /// Naive rational Gaussian elimination; the independent rank oracle.
    fn naive_rank(m: &Mat) -> usize {
        let mut rows: Vec<Vec<Rat>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
        let cols = m.cols();
        let mut rank = 0usize;
        for col in 0..cols {
            let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, p);
            let inv = rows[rank][col].recip();
            for j in 0..cols {
                rows[rank][j] = &rows[rank][j] * &inv;
            }
            for i in 0..rows.len() {
                if i != rank && !rows[i][col].is_zero() {
                    let f = rows[i][col].clone();
                    for j in 0..cols {
                        let t = &f * &rows[rank][j];
                        rows[i][j] -= &t;
                    }
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Mat::identity(2).rank(), 2);
        assert_eq!(Mat::zero(2, 2).rank(), 0);
        assert_eq!(mat(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(Mat::identity(3).kernel_basis().is_empty());
        assert_eq!(Mat::zero(2, 3).kernel_basis().len(), 3);
        let k = mat(&[&[1, 2], &[2, 4]]).kernel_basis();
        assert_eq!(k.len(), 1);
        // proportional to (2, -1): primitive with positive free coordinate
        assert_eq!(k[0], vec![r(-2), r(1)]);
        let m = mat(&[&[1, 2], &[2, 4]]);
        assert!(m.mul_vec(&k[0]).iter().all(Rat::is_zero));
    }

    #[test]
    fn solve_examples() {
        let id = Mat::identity(2);
        let b = vec![r(5), r(-3)];
        assert_eq!(id.solve(&b).unwrap(), b);
        assert_eq!(Mat::zero(2, 2).solve(&[r(1), r(0)]), None);
        let m = mat(&[&[1, 2], &[2, 4]]);
        let x = m.solve(&[r(1), r(2)]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![r(1), r(2)]);
    }

    #[test]
    fn inverse_round_trip() {
        let m = mat(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(2));
        assert!(mat(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn row_space_basics() {
        let s = RowSpace::from_rows(&mat(&[&[1, 2, 0], &[2, 4, 0], &[0, 0, 1]]));
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&[r(3), r(6), r(-7)]));
        assert!(!s.contains(&[r(1), r(0), r(0)]));
        assert_eq!(s.complement_cols(), vec![1]);
        let q = s.quotient_coords(&[r(0), r(1), r(0)]);
        assert_eq!(q.len(), 1);
        assert!(!q[0].is_zero());
    }

    fn small_mat() -> impl Strategy<Value = Mat> {
        (1usize..=12, 1usize..=12).prop_flat_map(|(r0, c0)| {
            proptest::collection::vec(-6i64..=6, r0 * c0).prop_map(move |vals| {
                Mat::from_fn(r0, c0, |i, j| Rat::from_int(vals[i * c0 + j]))
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn bareiss_agrees_with_naive_gauss(m in small_mat()) {
            prop_assert_eq!(m.rank(), naive_rank(&m));
        }

        #[test]
        fn rank_nullity(m in small_mat()) {
            prop_assert_eq!(m.rank() + m.kernel_basis().len(), m.cols());
        }

        #[test]
        fn kernel_vectors_annihilate(m in small_mat()) {
            for v in m.kernel_basis() {
                prop_assert!(m.mul_vec(&v).iter().all(Rat::is_zero));
            }
        }

        #[test]
        fn kron_rank_multiplicative(
            a in (1usize..=4, 1usize..=4).prop_flat_map(|(r0, c0)| {
                proptest::collection::vec(-3i64..=3, r0 * c0)
                    .prop_map(move |v| Mat::from_fn(r0, c0, |i, j| Rat::from_int(v[i * c0 + j])))
            }),
            b in (1usize..=4, 1usize..=4).prop_flat_map(|(r0, c0)| {
                proptest::collection::vec(-3i64..=3, r0 * c0)
                    .prop_map(move |v| Mat::from_fn(r0, c0, |i, j| Rat::from_int(v[i * c0 + j])))
            }),
        ) {
            prop_assert_eq!(a.kron(&b).rank(), a.rank() * b.rank());
        }
    }
}
