//! Exact dense linear algebra over a prime field F_p.
//!
//! Everything downstream (Hom spaces, radicals, pullbacks) reduces to the
//! operations here. Matrices are dense, row-major, with entries reduced
//! mod p. Subspaces are always handed around as *canonical* column bases
//! (the reduced column echelon form), so two subspaces are equal exactly
//! when their basis matrices are identical.

use crate::error::{Error, Result};

/// The prime field F_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    // deterministic Miller-Rabin, valid for all u64 with these bases
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= 1 << 62 {
            return Err(Error::Unsupported(format!("modulus {p} too large")));
        }
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn reduce(&self, a: u64) -> u64 {
        a % self.p
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b % self.p) % self.p
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a % self.p) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.p)
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0, "inverse of zero");
        pow_mod(a, self.p - 2, self.p)
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        pow_mod(a, e, self.p)
    }
}

/// Dense matrix over F_p, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl Matrix {
    pub fn new(field: PrimeField, rows: usize, cols: usize, data: Vec<u64>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count mismatch");
        let data = data.into_iter().map(|x| field.reduce(x)).collect();
        Matrix { field, rows, cols, data }
    }

    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: PrimeField, rows: &[Vec<u64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend_from_slice(row);
        }
        Self::new(field, r, c, data)
    }

    /// Column vector from a slice.
    pub fn col_vec(field: PrimeField, v: &[u64]) -> Self {
        Self::new(field, v.len(), 1, v.to_vec())
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = self.field.reduce(v);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn entries(&self) -> &[u64] {
        &self.data
    }

    pub fn column(&self, c: usize) -> Vec<u64> {
        (0..self.rows).map(|r| self.at(r, c)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.at(r, c));
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.field, other.field, "field mismatch");
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let p = self.field.p;
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let cur = out.at(r, c);
                    let v = (cur as u128 + a as u128 * other.at(k, c) as u128) % p as u128;
                    out.data[r * out.cols + c] = v as u64;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.field, other.field, "field mismatch");
        assert!(self.rows == other.rows && self.cols == other.cols, "shape mismatch in add");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| self.field.add(a, b))
            .collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.scale(self.field.p - 1))
    }

    pub fn scale(&self, k: u64) -> Matrix {
        let k = self.field.reduce(k);
        let data = self.data.iter().map(|&a| self.field.mul(a, k)).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    /// Horizontal concatenation [self | other].
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.field, other.field, "field mismatch");
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        let mut out = Matrix::zeros(self.field, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.at(r, c));
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.at(r, c));
            }
        }
        out
    }

    /// Vertical concatenation [self; other].
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.field, other.field, "field mismatch");
        assert_eq!(self.cols, other.cols, "col mismatch in vstack");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn block_diag(field: PrimeField, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            assert_eq!(b.field, field, "field mismatch");
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out.set(ro + r, co + c, b.at(r, c));
                }
            }
            ro += b.rows;
            co += b.cols;
        }
        out
    }

    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Matrix {
        assert!(r0 <= r1 && r1 <= self.rows && c0 <= c1 && c1 <= self.cols);
        let mut out = Matrix::zeros(self.field, r1 - r0, c1 - c0);
        for r in r0..r1 {
            for c in c0..c1 {
                out.set(r - r0, c - c0, self.at(r, c));
            }
        }
        out
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let p = m.field;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| m.at(r, col) != 0) else {
                continue;
            };
            if pr != row {
                for c in 0..m.cols {
                    let (a, b) = (m.at(row, c), m.at(pr, c));
                    m.set(row, c, b);
                    m.set(pr, c, a);
                }
            }
            let inv = p.inv(m.at(row, col));
            for c in col..m.cols {
                m.set(row, c, p.mul(m.at(row, c), inv));
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let f = m.at(r, col);
                if f == 0 {
                    continue;
                }
                for c in col..m.cols {
                    let v = p.sub(m.at(r, c), p.mul(f, m.at(row, c)));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Solves self * X = rhs, returning any solution.
    pub fn solve_right(&self, rhs: &Matrix) -> Result<Option<Matrix>> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch(self.field.p, rhs.field.p));
        }
        if self.rows != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "solve_right: lhs has {} rows, rhs has {}",
                self.rows, rhs.rows
            )));
        }
        let aug = self.hstack(rhs);
        let (red, pivots) = aug.rref();
        // any pivot in the rhs block means an inconsistent system
        if pivots.iter().any(|&c| c >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.field, self.cols, rhs.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            for c in 0..rhs.cols {
                x.set(pc, c, red.at(r, self.cols + c));
            }
        }
        debug_assert_eq!(self.mul(&x), *rhs);
        Ok(Some(x))
    }

    /// Inverse, if the matrix is square and invertible.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let id = Matrix::identity(self.field, self.rows);
        match self.solve_right(&id) {
            Ok(Some(inv)) => {
                if inv.mul(self) == id {
                    Some(inv)
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Canonical basis of the column space: the unique reduced column
    /// echelon form, so equal column spaces give identical matrices.
    pub fn column_space_basis(&self) -> Matrix {
        let (red, pivots) = self.transpose().rref();
        let r = pivots.len();
        red.submatrix(0, r, 0, red.cols).transpose()
    }

    /// Canonical basis of the null space, columns spanning {x : self*x = 0}.
    pub fn kernel_basis(&self) -> Matrix {
        let (red, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Matrix::zeros(self.field, self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            k.set(f, j, 1);
            for (r, &pc) in pivots.iter().enumerate() {
                k.set(pc, j, self.field.neg(red.at(r, f)));
            }
        }
        debug_assert!(self.mul(&k).is_zero());
        k.column_space_basis()
    }

    /// Canonical basis of the column space (image of the matrix as a map).
    pub fn image_basis(&self) -> Matrix {
        self.column_space_basis()
    }
}

/// A canonical column basis with membership/coordinate queries.
///
/// The basis matrix is kept in reduced column echelon form; coordinates of
/// a member vector are read off the pivot rows.
#[derive(Debug, Clone)]
pub struct CanonicalBasis {
    mat: Matrix,
    pivots: Vec<usize>,
}

impl CanonicalBasis {
    /// Canonicalizes the span of the columns of `gens`.
    pub fn from_span(gens: &Matrix) -> CanonicalBasis {
        let mat = gens.column_space_basis();
        let (_, pivots) = mat.transpose().rref();
        CanonicalBasis { mat, pivots }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.mat
    }

    pub fn dim(&self) -> usize {
        self.mat.cols()
    }

    pub fn ambient_dim(&self) -> usize {
        self.mat.rows()
    }

    /// Coordinates of `v` in this basis, or None if `v` is outside the span.
    pub fn coordinates(&self, v: &Matrix) -> Option<Vec<u64>> {
        assert_eq!(v.cols(), 1, "coordinates expects a column vector");
        assert_eq!(v.rows(), self.mat.rows(), "ambient dimension mismatch");
        let coords: Vec<u64> = self.pivots.iter().map(|&r| v.at(r, 0)).collect();
        let rebuilt = self.mat.mul(&Matrix::col_vec(v.field(), &coords));
        if &rebuilt == v {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &Matrix) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Matrix) -> bool {
        (0..other.cols()).all(|c| self.contains(&Matrix::col_vec(other.field(), &other.column(c))))
    }
}

/// Membership of a column vector in the span of `basis`' columns.
pub fn subspace_membership(basis: &Matrix, v: &Matrix) -> Result<bool> {
    if basis.field() != v.field() {
        return Err(Error::FieldMismatch(basis.field().p, v.field().p));
    }
    if basis.rows() != v.rows() || v.cols() != 1 {
        return Err(Error::DimensionMismatch(format!(
            "membership: basis is {}x{}, vector is {}x{}",
            basis.rows(),
            basis.cols(),
            v.rows(),
            v.cols()
        )));
    }
    Ok(basis.solve_right(v)?.is_some())
}

/// Canonical basis of span(b1) + span(b2).
pub fn subspace_sum(b1: &Matrix, b2: &Matrix) -> Result<Matrix> {
    if b1.field() != b2.field() {
        return Err(Error::FieldMismatch(b1.field().p, b2.field().p));
    }
    if b1.rows() != b2.rows() {
        return Err(Error::DimensionMismatch(format!(
            "subspace_sum: ambient {} vs {}",
            b1.rows(),
            b2.rows()
        )));
    }
    Ok(b1.hstack(b2).column_space_basis())
}

/// Canonical basis of span(b1) ∩ span(b2).
pub fn subspace_intersection(b1: &Matrix, b2: &Matrix) -> Result<Matrix> {
    if b1.field() != b2.field() {
        return Err(Error::FieldMismatch(b1.field().p, b2.field().p));
    }
    if b1.rows() != b2.rows() {
        return Err(Error::DimensionMismatch(format!(
            "subspace_intersection: ambient {} vs {}",
            b1.rows(),
            b2.rows()
        )));
    }
    // kernel of [b1 | -b2]; the b1-part of each kernel vector hits the intersection
    let stacked = b1.hstack(&b2.scale(b1.field().p - 1));
    let ker = stacked.kernel_basis();
    let mut gens = Matrix::zeros(b1.field(), b1.rows(), ker.cols());
    for j in 0..ker.cols() {
        let x = ker.submatrix(0, b1.cols(), j, j + 1);
        let v = b1.mul(&x);
        for r in 0..v.rows() {
            gens.set(r, j, v.at(r, 0));
        }
    }
    Ok(gens.column_space_basis())
}

/// All subspaces of F_p^n, each as a canonical column basis.
///
/// Enumerates reduced column echelon forms directly; intended for small
/// (n, p) only, as in exhaustive submodule sweeps.
pub fn enumerate_subspaces(field: PrimeField, n: usize) -> Vec<Matrix> {
    let p = field.p();
    let mut out = vec![Matrix::zeros(field, n, 0)];
    for rank in 1..=n {
        // choose pivot rows, then fill free entries
        let mut pivot_sets = Vec::new();
        enumerate_combinations(n, rank, &mut Vec::new(), &mut pivot_sets);
        for pivots in pivot_sets {
            // free entries: position (r, j) with r not a pivot row and r > pivots[j]
            // is free only if r is not below a later pivot... standard echelon count:
            // entry (r, j) free iff r > pivots[j] and r not in pivots.
            let mut free_pos = Vec::new();
            for j in 0..rank {
                for r in (pivots[j] + 1)..n {
                    if !pivots.contains(&r) {
                        free_pos.push((r, j));
                    }
                }
            }
            let total = free_pos.len();
            let count = (p as u128).checked_pow(total as u32).expect("subspace count overflow");
            assert!(count <= 1 << 24, "subspace enumeration too large");
            for idx in 0..count as u64 {
                let mut m = Matrix::zeros(field, n, rank);
                for (j, &pr) in pivots.iter().enumerate() {
                    m.set(pr, j, 1);
                }
                let mut k = idx;
                for &(r, j) in &free_pos {
                    m.set(r, j, k % p);
                    k /= p;
                }
                out.push(m.column_space_basis());
            }
        }
    }
    out.sort_by(|a, b| (a.cols(), a.entries()).cmp(&(b.cols(), b.entries())));
    out.dedup();
    out
}

fn enumerate_combinations(n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    let start = cur.last().map_or(0, |&x| x + 1);
    for i in start..n {
        cur.push(i);
        enumerate_combinations(n, k, cur, out);
        cur.pop();
    }
}
