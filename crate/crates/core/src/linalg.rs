//! Exact linear algebra over ℤ and ℚ.
//!
//! Everything here is arbitrary precision. The canonical form of an integer
//! lattice is the row-style Hermite normal form: nonzero rows first, pivot
//! columns strictly increasing, pivots positive, and every entry above a pivot
//! reduced into `[0, pivot)`. Two bases span the same lattice exactly when
//! their Hermite forms coincide.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(v: &BigInt) -> Rat {
    Rat::from_integer(v.clone())
}

/// Greatest common divisor of all entries (zero for the zero vector).
pub fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Least common multiple of the denominators of `v`.
pub fn denominator_lcm(v: &[Rat]) -> BigInt {
    v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()))
}

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if rows * cols != data.len() {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from row vectors; every row must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Dimension(format!("row {i} has {} entries, expected {cols}", row.len())));
            }
            data.extend(row);
        }
        Ok(IntMatrix { rows: nrows, cols, data })
    }

    /// Convenience constructor for small literal matrices. Panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        Self::from_rows(cols, rows).expect("ragged matrix literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        IntMatrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
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
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product `self · v`.
    pub fn apply(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!("vector of length {} against {} columns", v.len(), self.cols)));
        }
        Ok((0..self.rows).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect())
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// Determinant by fraction-free elimination. Square matrices only.
    pub fn det(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.row_vectors();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(BigInt::zero());
            };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        Ok(if n == 0 { BigInt::one() } else { sign * &a[n - 1][n - 1] })
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().map(|d| d.abs().is_one()).unwrap_or(false)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

fn to_matrix(cols: usize, rows: Vec<Vec<BigInt>>) -> IntMatrix {
    IntMatrix::from_rows(cols, rows).expect("internal rows are rectangular")
}

fn row_axpy(target: &mut [BigInt], q: &BigInt, source: &[BigInt]) {
    for (t, s) in target.iter_mut().zip(source) {
        *t += q * s;
    }
}

/// Row-style Hermite normal form. Returns `(h, u)` with `u` unimodular and `u·m = h`.
pub fn hnf(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.row_vectors();
    let mut u = IntMatrix::identity(rows).row_vectors();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        for i in r + 1..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let (ar, ai) = (a[r][c].clone(), a[i][c].clone());
            let eg = ar.extended_gcd(&ai);
            let (x, y, g) = (eg.x, eg.y, eg.gcd);
            let (p, q) = (&ai / &g, &ar / &g);
            // [x y; -p q] has determinant x·q + y·p = 1
            let new_r: Vec<BigInt> = a[r].iter().zip(&a[i]).map(|(s, t)| &x * s + &y * t).collect();
            let new_i: Vec<BigInt> = a[r].iter().zip(&a[i]).map(|(s, t)| -&p * s + &q * t).collect();
            a[r] = new_r;
            a[i] = new_i;
            let new_ur: Vec<BigInt> = u[r].iter().zip(&u[i]).map(|(s, t)| &x * s + &y * t).collect();
            let new_ui: Vec<BigInt> = u[r].iter().zip(&u[i]).map(|(s, t)| -&p * s + &q * t).collect();
            u[r] = new_ur;
            u[i] = new_ui;
        }
        if a[r][c].is_zero() {
            continue;
        }
        if a[r][c].is_negative() {
            a[r].iter_mut().for_each(|x| *x = -&*x);
            u[r].iter_mut().for_each(|x| *x = -&*x);
        }
        let pivot = a[r][c].clone();
        for i in 0..r {
            let q = -a[i][c].div_floor(&pivot);
            if q.is_zero() {
                continue;
            }
            let (src_a, src_u) = (a[r].clone(), u[r].clone());
            row_axpy(&mut a[i], &q, &src_a);
            row_axpy(&mut u[i], &q, &src_u);
        }
        r += 1;
    }
    (to_matrix(cols, a), to_matrix(rows, u))
}

/// Smith normal form together with the inverse of the column transform.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SmithForm {
    /// The nonzero invariant factors `d_1 | d_2 | …`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d.get(i, i).clone()).take_while(|x| !x.is_zero()).collect()
    }
}

/// Smith normal form: `u·m·v = d` with `d` diagonal, `d_1 | d_2 | …`, all `d_i ≥ 0`.
pub fn snf(m: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let s = smith_form(m);
    (s.d, s.u, s.v)
}

pub fn smith_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.row_vectors();
    let mut u = IntMatrix::identity(rows).row_vectors();
    let mut v = IntMatrix::identity(cols).row_vectors();
    let mut vinv = IntMatrix::identity(cols).row_vectors();

    'diag: for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if a[i][j].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break 'diag };
            a.swap(t, pi);
            u.swap(t, pi);
            if pj != t {
                for row in a.iter_mut().chain(v.iter_mut()) {
                    row.swap(t, pj);
                }
                vinv.swap(t, pj);
            }

            let mut clean = true;
            for i in t + 1..rows {
                let q = &a[i][t] / &a[t][t];
                if !q.is_zero() {
                    let neg = -q;
                    let (src_a, src_u) = (a[t].clone(), u[t].clone());
                    row_axpy(&mut a[i], &neg, &src_a);
                    row_axpy(&mut u[i], &neg, &src_u);
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                let q = &a[t][j] / &a[t][t];
                if !q.is_zero() {
                    for row in a.iter_mut().chain(v.iter_mut()) {
                        let sub = &q * &row[t];
                        row[j] -= sub;
                    }
                    let src = vinv[j].clone();
                    row_axpy(&mut vinv[t], &q, &src);
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            let pivot = a[t][t].clone();
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&pivot)));
            if let Some(i) = bad {
                let (src_a, src_u) = (a[i].clone(), u[i].clone());
                row_axpy(&mut a[t], &BigInt::one(), &src_a);
                row_axpy(&mut u[t], &BigInt::one(), &src_u);
                continue;
            }
            break;
        }
        if a[t][t].is_negative() {
            a[t].iter_mut().for_each(|x| *x = -&*x);
            u[t].iter_mut().for_each(|x| *x = -&*x);
        }
    }
    SmithForm { d: to_matrix(cols, a), u: to_matrix(rows, u), v: to_matrix(cols, v), v_inv: to_matrix(cols, vinv) }
}

/// A sublattice of ℤⁿ, stored by its Hermite basis (zero rows removed).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lattice {
    ambient_dim: usize,
    basis: IntMatrix,
}

impl Lattice {
    pub fn from_generators(ambient_dim: usize, gens: &[Vec<BigInt>]) -> Result<Self> {
        let m = IntMatrix::from_rows(ambient_dim, gens.to_vec())?;
        Ok(Self::from_matrix(&m))
    }

    /// Lattice spanned by the rows of `m`.
    pub fn from_matrix(m: &IntMatrix) -> Self {
        let (h, _) = hnf(m);
        let rows = h.row_vectors().into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect();
        Lattice { ambient_dim: m.cols(), basis: to_matrix(m.cols(), rows) }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Lattice { ambient_dim, basis: IntMatrix::zeros(0, ambient_dim) }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Lattice { ambient_dim, basis: IntMatrix::identity(ambient_dim) }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    /// Integer coordinates of `v` in the stored basis, if `v` lies in the lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        if v.len() != self.ambient_dim {
            return None;
        }
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        for i in 0..self.rank() {
            let row = self.basis.row(i);
            let p = row.iter().position(|x| !x.is_zero()).expect("basis rows are nonzero");
            if rest[..p].iter().any(|x| !x.is_zero()) {
                return None;
            }
            let (q, r) = rest[p].div_rem(&row[p]);
            if !r.is_zero() {
                return None;
            }
            let neg = -&q;
            row_axpy(&mut rest, &neg, row);
            coords.push(q);
        }
        rest.iter().all(|x| x.is_zero()).then_some(coords)
    }

    pub fn contains_vector(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Lattice) -> bool {
        other.ambient_dim == self.ambient_dim && (0..other.rank()).all(|i| self.contains_vector(other.basis.row(i)))
    }

    pub fn is_saturated(&self) -> bool {
        saturate(self) == *self
    }

    pub fn basis_rows(&self) -> Vec<Vec<BigInt>> {
        self.basis.row_vectors()
    }
}

/// `{v ∈ ℤⁿ : k·v ∈ l for some k > 0}`.
pub fn saturate(l: &Lattice) -> Lattice {
    if l.rank() == 0 {
        return l.clone();
    }
    let s = smith_form(&l.basis);
    let k = s.invariant_factors().len();
    let rows = (0..k).map(|i| s.v_inv.row(i).to_vec()).collect::<Vec<_>>();
    Lattice::from_matrix(&to_matrix(l.ambient_dim, rows))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeIndex {
    Finite(BigInt),
    Infinite,
}

/// Index `[sup : sub]`; errors unless `sub ⊆ sup`.
pub fn lattice_index(sub: &Lattice, sup: &Lattice) -> Result<LatticeIndex> {
    if sub.ambient_dim != sup.ambient_dim {
        return Err(Error::Dimension("lattices in different ambient spaces".into()));
    }
    let coords: Option<Vec<Vec<BigInt>>> = (0..sub.rank()).map(|i| sup.coordinates(sub.basis.row(i))).collect();
    let coords = coords.ok_or(Error::NotSublattice)?;
    if sub.rank() != sup.rank() {
        return Ok(LatticeIndex::Infinite);
    }
    let m = to_matrix(sup.rank(), coords);
    let s = smith_form(&m);
    Ok(LatticeIndex::Finite(s.invariant_factors().iter().product()))
}

/// Reduced row echelon form in place; zero rows are dropped. Returns the pivot columns.
pub fn rref(rows: &mut Vec<Vec<Rat>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        rows[r].iter_mut().for_each(|x| *x *= &inv);
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            let src = rows[r].clone();
            for (x, s) in rows[i].iter_mut().zip(&src) {
                *x -= &f * s;
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank_rat(rows: &[Vec<Rat>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

pub fn to_rat_vec(v: &[BigInt]) -> Vec<Rat> {
    v.iter().map(rat_int).collect()
}

/// A particular solution and a kernel basis of a rational linear system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    pub point: Vec<Rat>,
    pub kernel: Vec<Vec<Rat>>,
}

/// Solves `a·x = b` over ℚ for `x ∈ ℚ^ncols`. `None` when inconsistent.
pub fn solve_affine_rational(ncols: usize, a: &[Vec<Rat>], b: &[Rat]) -> Result<Option<AffineSolution>> {
    if a.len() != b.len() || a.iter().any(|r| r.len() != ncols) {
        return Err(Error::Dimension("linear system shape".into()));
    }
    let mut aug: Vec<Vec<Rat>> =
        a.iter().zip(b).map(|(row, rhs)| row.iter().cloned().chain(std::iter::once(rhs.clone())).collect()).collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&ncols) {
        return Ok(None);
    }
    let mut point = vec![Rat::zero(); ncols];
    for (row, &p) in aug.iter().zip(&pivots) {
        point[p] = row[ncols].clone();
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let kernel = free
        .iter()
        .map(|&f| {
            let mut k = vec![Rat::zero(); ncols];
            k[f] = Rat::one();
            for (row, &p) in aug.iter().zip(&pivots) {
                k[p] = -row[f].clone();
            }
            k
        })
        .collect();
    Ok(Some(AffineSolution { point, kernel }))
}

/// Coordinates of `v` in terms of the linearly independent vectors `basis`.
pub fn express_in_basis(basis: &[Vec<Rat>], v: &[Rat]) -> Option<Vec<Rat>> {
    let k = basis.len();
    let eqs: Vec<Vec<Rat>> = (0..v.len()).map(|j| basis.iter().map(|b| b[j].clone()).collect()).collect();
    solve_affine_rational(k, &eqs, v).ok().flatten().map(|s| s.point)
}

/// Scales a rational vector to a primitive integer vector with the same sign.
pub fn primitive_integer(v: &[Rat]) -> Vec<BigInt> {
    let l = denominator_lcm(v);
    let ints: Vec<BigInt> = v.iter().map(|x| (x * rat_int(&l)).to_integer()).collect();
    let g = content(&ints);
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}
