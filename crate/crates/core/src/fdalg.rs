//! Finite-dimensional associative algebras given by structure constants:
//! Jacobson radical, quotients, locality, idempotent search and lifting.
//!
//! The radical is the kernel of the trace bilinear form of the regular
//! representation. That kernel always contains the radical; we certify the
//! computation by checking the kernel is nilpotent as an ideal, which makes
//! the answer unconditionally correct whenever it is returned. The
//! certificate fails exactly when the form degenerates modulo the radical
//! (composition-factor multiplicities of the regular module vanishing
//! mod p; impossible for p > dim), and then we refuse with a clean error
//! rather than ever returning a wrong radical.

use crate::error::{Error, Result};
use crate::linalg::{CanonicalBasis, Matrix, PrimeField};
use crate::poly::{analyse, roots, Poly, SplitOutcome};

/// An associative unital algebra over F_p with a distinguished basis.
///
/// `left_mul[i]` is the matrix of left multiplication by the i-th basis
/// element; column j holds the coordinates of  b_i * b_j.
#[derive(Debug, Clone)]
pub struct FDAlgebra {
    field: PrimeField,
    dim: usize,
    left_mul: Vec<Matrix>,
    unit: Vec<u64>,
}

impl FDAlgebra {
    /// Builds and validates an algebra: associativity on all basis triples
    /// and the unit law.
    pub fn new(field: PrimeField, dim: usize, left_mul: Vec<Matrix>, unit: Vec<u64>) -> Result<FDAlgebra> {
        let a = Self::new_unchecked(field, dim, left_mul, unit);
        a.validate()?;
        Ok(a)
    }

    pub fn new_unchecked(field: PrimeField, dim: usize, left_mul: Vec<Matrix>, unit: Vec<u64>) -> FDAlgebra {
        assert_eq!(left_mul.len(), dim);
        for m in &left_mul {
            assert_eq!((m.rows(), m.cols()), (dim, dim), "structure constant shape");
        }
        assert_eq!(unit.len(), dim);
        let unit = unit.into_iter().map(|x| field.reduce(x)).collect();
        FDAlgebra { field, dim, left_mul, unit }
    }

    /// Associativity on all basis triples and the unit law.
    pub fn validate(&self) -> Result<()> {
        let e = self.unit_element();
        for i in 0..self.dim {
            let b = self.basis_element(i);
            if self.mul(&e, &b) != b || self.mul(&b, &e) != b {
                return Err(Error::InvalidAlgebra("unit law fails".into()));
            }
            for j in 0..self.dim {
                let bj = self.basis_element(j);
                let ij = self.mul(&b, &bj);
                for k in 0..self.dim {
                    let bk = self.basis_element(k);
                    let left = self.mul(&ij, &bk);
                    let right = self.mul(&b, &self.mul(&bj, &bk));
                    if left != right {
                        return Err(Error::InvalidAlgebra(format!(
                            "associativity fails on basis triple ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit_element(&self) -> Matrix {
        Matrix::col_vec(self.field, &self.unit)
    }

    pub fn zero_element(&self) -> Matrix {
        Matrix::zeros(self.field, self.dim, 1)
    }

    pub fn basis_element(&self, i: usize) -> Matrix {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        Matrix::col_vec(self.field, &v)
    }

    /// Matrix of left multiplication by the element x.
    pub fn left_mul_matrix(&self, x: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.dim, self.dim);
        for i in 0..self.dim {
            let c = x.at(i, 0);
            if c == 0 {
                continue;
            }
            out = out.add(&self.left_mul[i].scale(c));
        }
        out
    }

    pub fn mul(&self, x: &Matrix, y: &Matrix) -> Matrix {
        self.left_mul_matrix(x).mul(y)
    }

    pub fn pow(&self, x: &Matrix, mut e: u64) -> Matrix {
        let mut acc = self.unit_element();
        let mut base = x.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn is_commutative(&self) -> bool {
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let bi = self.basis_element(i);
                let bj = self.basis_element(j);
                if self.mul(&bi, &bj) != self.mul(&bj, &bi) {
                    return false;
                }
            }
        }
        true
    }

    /// Minimal polynomial of x acting on the algebra, via the coordinate
    /// sequence of its powers.
    pub fn minimal_polynomial(&self, x: &Matrix) -> Poly {
        if self.dim == 0 {
            return Poly::constant(self.field, 1);
        }
        let mut powers = self.unit_element();
        let mut cur = self.unit_element();
        loop {
            cur = self.mul(&cur, x);
            // does cur lie in the span of the previous powers?
            if let Some(sol) = powers.solve_right(&cur).expect("shapes agree") {
                let mut coeffs: Vec<u64> = (0..sol.rows()).map(|i| self.field.neg(sol.at(i, 0))).collect();
                coeffs.push(1);
                return Poly::new(self.field, coeffs);
            }
            powers = powers.hstack(&cur);
            assert!(powers.cols() <= self.dim + 1, "minimal polynomial search overran dimension");
        }
    }

    /// Evaluates a polynomial at an algebra element.
    pub fn eval_poly(&self, f: &Poly, x: &Matrix) -> Matrix {
        let mut acc = self.zero_element();
        for &c in f.coeffs.iter().rev() {
            acc = self.mul(&acc, x);
            if c != 0 {
                acc = acc.add(&self.unit_element().scale(c));
            }
        }
        acc
    }

    /// Canonical basis of the Jacobson radical.
    ///
    /// Kernel of the trace form, certified nilpotent. Errors when the
    /// certificate fails, which happens exactly when the form degenerates
    /// modulo the radical and never when p > dim.
    pub fn radical(&self) -> Result<Matrix> {
        if self.dim == 0 {
            return Ok(Matrix::zeros(self.field, 0, 0));
        }
        let mut gram = Matrix::zeros(self.field, self.dim, self.dim);
        for i in 0..self.dim {
            for j in i..self.dim {
                let prod = self.left_mul[i].mul(&self.left_mul[j]);
                let mut tr = 0u64;
                for k in 0..self.dim {
                    tr = self.field.add(tr, prod.at(k, k));
                }
                gram.set(i, j, tr);
                gram.set(j, i, tr);
            }
        }
        let k = gram.kernel_basis();
        // certify nilpotency of the ideal spanned by k
        let mut power = k.clone();
        for _ in 0..=self.dim {
            if power.cols() == 0 {
                return Ok(k);
            }
            let mut next = Matrix::zeros(self.field, self.dim, 0);
            for a in 0..power.cols() {
                let xa = Matrix::col_vec(self.field, &power.column(a));
                for b in 0..k.cols() {
                    let xb = Matrix::col_vec(self.field, &k.column(b));
                    next = next.hstack(&self.mul(&xa, &xb));
                }
            }
            let next = next.column_space_basis();
            if next.cols() == power.cols() && next == power {
                break; // stabilised nonzero: not nilpotent
            }
            power = next;
        }
        if power.cols() == 0 {
            Ok(k)
        } else {
            Err(Error::CharTooSmall { p: self.field.p(), dim: self.dim })
        }
    }

    /// The quotient by a nilpotent ideal, with the projection onto the
    /// quotient coordinates and a linear section back.
    pub fn quotient_by_ideal(&self, ideal: &Matrix) -> Result<AlgebraQuotient> {
        let basis = CanonicalBasis::from_span(ideal);
        // complement spanned by the standard vectors away from pivot rows
        let pivot_rows: Vec<usize> = {
            let (_, piv) = basis.matrix().transpose().rref();
            piv
        };
        let comp_rows: Vec<usize> =
            (0..self.dim).filter(|r| !pivot_rows.contains(r)).collect();
        let qdim = comp_rows.len();
        let mut section = Matrix::zeros(self.field, self.dim, qdim);
        for (j, &r) in comp_rows.iter().enumerate() {
            section.set(r, j, 1);
        }
        // change of basis [ideal | section] and the projection = bottom rows
        // of its inverse
        let change = basis.matrix().hstack(&section);
        let inv = change
            .inverse()
            .ok_or_else(|| Error::Internal("ideal basis plus complement is singular".into()))?;
        let proj = inv.submatrix(basis.dim(), self.dim, 0, self.dim);
        let mut left_mul = Vec::with_capacity(qdim);
        for j in 0..qdim {
            let bj = Matrix::col_vec(self.field, &section.column(j));
            let mut lm = Matrix::zeros(self.field, qdim, qdim);
            for k in 0..qdim {
                let bk = Matrix::col_vec(self.field, &section.column(k));
                let prod = proj.mul(&self.mul(&bj, &bk));
                for r in 0..qdim {
                    lm.set(r, k, prod.at(r, 0));
                }
            }
            left_mul.push(lm);
        }
        let unit = proj.mul(&self.unit_element());
        let quotient = FDAlgebra::new_unchecked(
            self.field,
            qdim,
            left_mul,
            unit.column(0),
        );
        Ok(AlgebraQuotient { quotient, projection: proj, section })
    }

    /// The centre as a canonical subspace basis.
    pub fn center(&self) -> Matrix {
        if self.dim == 0 {
            return Matrix::zeros(self.field, 0, 0);
        }
        // stack the maps x -> b_i x - x b_i
        let mut rows = Matrix::zeros(self.field, 0, self.dim);
        for i in 0..self.dim {
            let li = &self.left_mul[i];
            // right multiplication by b_i: columns are b_j * b_i
            let mut ri = Matrix::zeros(self.field, self.dim, self.dim);
            for j in 0..self.dim {
                let prod = self.mul(&self.basis_element(j), &self.basis_element(i));
                for r in 0..self.dim {
                    ri.set(r, j, prod.at(r, 0));
                }
            }
            rows = rows.vstack(&li.sub(&ri));
        }
        rows.kernel_basis()
    }
}

/// A quotient algebra together with coordinate maps.
pub struct AlgebraQuotient {
    pub quotient: FDAlgebra,
    /// dim(quotient) x dim(parent): coordinates of the residue class
    pub projection: Matrix,
    /// dim(parent) x dim(quotient): a linear section of the projection
    pub section: Matrix,
}

/// Basis of the Jacobson radical.
pub fn radical(a: &FDAlgebra) -> Result<Matrix> {
    a.radical()
}

/// Whether the algebra is local: no idempotents other than 0 and 1 in the
/// semisimple quotient. The zero algebra is not local.
pub fn is_local(a: &FDAlgebra) -> Result<bool> {
    if a.dim == 0 {
        return Ok(false);
    }
    let j = a.radical()?;
    let q = a.quotient_by_ideal(&j)?;
    let s = &q.quotient;
    if !s.is_commutative() {
        // a finite division ring is commutative, so a noncommutative
        // semisimple quotient cannot be one
        return Ok(false);
    }
    Ok(simple_component_count(s) == 1)
}

/// Number of simple components of a commutative semisimple algebra over
/// F_p: the dimension of the fixed space of the Frobenius.
fn simple_component_count(s: &FDAlgebra) -> usize {
    assert!(s.is_commutative());
    if s.dim == 0 {
        return 0;
    }
    let p = s.field.p();
    let mut frob = Matrix::zeros(s.field, s.dim, s.dim);
    for j in 0..s.dim {
        let bp = s.pow(&s.basis_element(j), p);
        for r in 0..s.dim {
            frob.set(r, j, bp.at(r, 0));
        }
    }
    let fixed = frob.sub(&Matrix::identity(s.field, s.dim));
    fixed.kernel_basis().cols()
}

/// A nontrivial idempotent (e^2 = e, e not 0 or 1), if one exists.
///
/// Search order: a central idempotent from the Frobenius-fixed space of the
/// centre of the semisimple quotient; otherwise a sweep over basis elements
/// and pairwise sums, splitting minimal polynomials into coprime factors or
/// exploiting nilpotent elements; finally an exhaustive pass when the
/// quotient has at most 2^16 elements. Exhausting all of these without an
/// answer on a provably non-local algebra is reported as an internal error.
pub fn find_nontrivial_idempotent(a: &FDAlgebra) -> Result<Option<Matrix>> {
    if a.dim <= 1 {
        return Ok(None);
    }
    let j = a.radical()?;
    let q = a.quotient_by_ideal(&j)?;
    let s = &q.quotient;
    if s.dim == 1 {
        return Ok(None);
    }
    let found = idempotent_in_semisimple(s)?;
    match found {
        None => Ok(None),
        Some(ebar) => {
            let rep = q.section.mul(&ebar);
            let e = lift_idempotent(a, &rep)?;
            debug_assert_eq!(a.mul(&e, &e), e);
            debug_assert!(!e.is_zero() && e != a.unit_element());
            Ok(Some(e))
        }
    }
}

/// Nontrivial idempotent in a semisimple algebra, or None when it is a
/// division ring (hence, over a finite field, a field).
fn idempotent_in_semisimple(s: &FDAlgebra) -> Result<Option<Matrix>> {
    let center = s.center();
    let zdim = center.cols();
    // centre as its own algebra: restrict multiplication
    let zalg = subalgebra_on(s, &center)?;
    let r = simple_component_count(&zalg);
    if r >= 2 {
        // some Frobenius-fixed central element has a split minimal
        // polynomial with distinct roots in F_p
        let e = central_idempotent(s, &zalg, &center)?;
        return Ok(Some(e));
    }
    if zdim == s.dim {
        return Ok(None); // commutative with one component: a field
    }
    // simple but noncommutative: matrix algebra of size >= 2
    let mut sweep: Vec<Matrix> = (0..s.dim).map(|i| s.basis_element(i)).collect();
    for i in 0..s.dim {
        for j in (i + 1)..s.dim {
            sweep.push(s.basis_element(i).add(&s.basis_element(j)));
        }
    }
    for x in &sweep {
        if let Some(e) = idempotent_from_element(s, x)? {
            return Ok(Some(e));
        }
    }
    // exhaustive fallback over small quotients
    let size = (s.field.p() as u128).checked_pow(s.dim as u32);
    if let Some(size) = size {
        if size <= 1 << 16 {
            let p = s.field.p();
            for code in 0..size as u64 {
                let mut v = vec![0u64; s.dim];
                let mut k = code;
                for slot in v.iter_mut() {
                    *slot = k % p;
                    k /= p;
                }
                let e = Matrix::col_vec(s.field, &v);
                if e.is_zero() || e == s.unit_element() {
                    continue;
                }
                if s.mul(&e, &e) == e {
                    return Ok(Some(e));
                }
            }
            return Err(Error::Internal(
                "exhaustive idempotent search failed on a non-local semisimple algebra".into(),
            ));
        }
    }
    Err(Error::Internal("idempotent sweep exhausted without a split".into()))
}

/// Restricts the algebra structure to a unital subalgebra spanned by the
/// given canonical basis (must contain the unit and be closed under
/// multiplication).
fn subalgebra_on(s: &FDAlgebra, basis: &Matrix) -> Result<FDAlgebra> {
    let can = CanonicalBasis::from_span(basis);
    let d = can.dim();
    let mut left_mul = Vec::with_capacity(d);
    for i in 0..d {
        let bi = Matrix::col_vec(s.field, &can.matrix().column(i));
        let mut lm = Matrix::zeros(s.field, d, d);
        for j in 0..d {
            let bj = Matrix::col_vec(s.field, &can.matrix().column(j));
            let prod = s.mul(&bi, &bj);
            let coords = can
                .coordinates(&prod)
                .ok_or_else(|| Error::Internal("subspace not closed under multiplication".into()))?;
            for r in 0..d {
                lm.set(r, j, coords[r]);
            }
        }
        left_mul.push(lm);
    }
    let unit = can
        .coordinates(&s.unit_element())
        .ok_or_else(|| Error::Internal("subalgebra does not contain the unit".into()))?;
    Ok(FDAlgebra::new_unchecked(s.field, d, left_mul, unit))
}

/// Central idempotent from a Frobenius-fixed element of the centre with at
/// least two eigenvalues.
fn central_idempotent(s: &FDAlgebra, zalg: &FDAlgebra, center: &Matrix) -> Result<Matrix> {
    let p = zalg.field.p();
    let mut frob = Matrix::zeros(zalg.field, zalg.dim, zalg.dim);
    for j in 0..zalg.dim {
        let bp = zalg.pow(&zalg.basis_element(j), p);
        for r in 0..zalg.dim {
            frob.set(r, j, bp.at(r, 0));
        }
    }
    let fixed = frob.sub(&Matrix::identity(zalg.field, zalg.dim)).kernel_basis();
    for c in 0..fixed.cols() {
        let xz = Matrix::col_vec(zalg.field, &fixed.column(c));
        // lift the centre coordinates into the ambient algebra
        let x = center.mul(&xz);
        let m = s.minimal_polynomial(&x);
        if m.deg() < 2 {
            continue;
        }
        // fixed elements have split squarefree minimal polynomials
        let rs = if p <= 1 << 16 {
            roots(&m, 1 << 16)
        } else {
            continue;
        };
        if rs.len() < 2 {
            continue;
        }
        let c0 = rs[0];
        // e = g(x)/g(c0) where m = (t - c0) g
        let lin = Poly::new(s.field, vec![s.field.neg(c0), 1]);
        let g = m.div_exact(&lin);
        let denom = g.eval(c0);
        let e = s.eval_poly(&g, &x).scale(s.field.inv(denom));
        debug_assert_eq!(s.mul(&e, &e), e);
        if !e.is_zero() && e != s.unit_element() {
            return Ok(e);
        }
    }
    Err(Error::Internal("no splitting element found in the Frobenius-fixed centre".into()))
}

/// Idempotent from a single element via its minimal polynomial: a coprime
/// factor split gives one directly; an irreducible power gives a nilpotent
/// element whose right ideal is generated by one.
fn idempotent_from_element(s: &FDAlgebra, x: &Matrix) -> Result<Option<Matrix>> {
    let m = s.minimal_polynomial(x);
    if m.deg() < 2 {
        return Ok(None);
    }
    match analyse(&m) {
        SplitOutcome::Coprime(a, b) => {
            // Bezout: u a + v b = 1, e = (u a)(x)
            let (g, u, _v) = poly_extended_gcd(&a, &b);
            debug_assert_eq!(g.deg(), 0);
            let ua = u.mul(&a).rem(&m).scale(s.field.inv(g.coeffs[0]));
            let e = s.eval_poly(&ua, x);
            debug_assert_eq!(s.mul(&e, &e), e);
            if e.is_zero() || e == s.unit_element() {
                return Ok(None);
            }
            Ok(Some(e))
        }
        SplitOutcome::PrimePower(g, _e) => {
            let y = s.eval_poly(&g, x);
            if y.is_zero() {
                return Ok(None);
            }
            idempotent_from_right_ideal(s, &y)
        }
        _ => Ok(None),
    }
}

/// For a nonzero non-invertible y in a semisimple algebra, the right ideal
/// yS is generated by an idempotent: solve for a left identity on yS.
fn idempotent_from_right_ideal(s: &FDAlgebra, y: &Matrix) -> Result<Option<Matrix>> {
    let mut gens = Matrix::zeros(s.field, s.dim, 0);
    for j in 0..s.dim {
        gens = gens.hstack(&s.mul(y, &s.basis_element(j)));
    }
    let basis = CanonicalBasis::from_span(&gens);
    if basis.dim() == 0 || basis.dim() == s.dim {
        return Ok(None);
    }
    let e = right_ideal_generator(s, &basis)?;
    if e.is_zero() || e == s.unit_element() {
        return Ok(None);
    }
    Ok(Some(e))
}

/// Idempotent generator of a right ideal of a semisimple algebra, found as
/// a left identity on the ideal.
pub(crate) fn right_ideal_generator(s: &FDAlgebra, basis: &CanonicalBasis) -> Result<Matrix> {
    let d = basis.dim();
    assert!(d > 0, "zero ideal has no generator");
    // unknown e = basis * c ; equations: e * r_i = r_i for each basis vector
    let mut system = Matrix::zeros(s.field, 0, d);
    let mut rhs = Matrix::zeros(s.field, 0, 1);
    for i in 0..d {
        let ri = Matrix::col_vec(s.field, &basis.matrix().column(i));
        // e * r_i as a function of c: columns are (basis_k) * r_i
        let mut block = Matrix::zeros(s.field, s.dim, d);
        for k in 0..d {
            let bk = Matrix::col_vec(s.field, &basis.matrix().column(k));
            let prod = s.mul(&bk, &ri);
            for r in 0..s.dim {
                block.set(r, k, prod.at(r, 0));
            }
        }
        system = system.vstack(&block);
        rhs = rhs.vstack(&ri);
    }
    let Some(c) = system.solve_right(&rhs)? else {
        return Err(Error::Internal("right ideal of a semisimple algebra has no generator".into()));
    };
    let e = basis.matrix().mul(&c);
    debug_assert_eq!(s.mul(&e, &e), e);
    Ok(e)
}

fn poly_extended_gcd(a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
    let field = a.field;
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (Poly::constant(field, 1), Poly::zero(field));
    let (mut t0, mut t1) = (Poly::zero(field), Poly::constant(field, 1));
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let s = s0.sub(&q.mul(&s1));
        let t = t0.sub(&q.mul(&t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    (r0, s0, t0)
}

/// Lifts an element idempotent modulo the radical to an exact idempotent
/// via the iteration e <- 3e^2 - 2e^3.
pub fn lift_idempotent(a: &FDAlgebra, e0: &Matrix) -> Result<Matrix> {
    let mut e = e0.clone();
    for _ in 0..64 {
        let e2 = a.mul(&e, &e);
        if e2 == e {
            return Ok(e);
        }
        let e3 = a.mul(&e2, &e);
        e = e2.scale(3).sub(&e3.scale(2));
    }
    Err(Error::Internal("idempotent lifting did not converge; input not idempotent mod radical".into()))
}

/// Convenience: the radical of a quotient, used by tests to confirm the
/// quotient is semisimple.
pub fn quotient_is_semisimple(a: &FDAlgebra) -> Result<bool> {
    let j = a.radical()?;
    let q = a.quotient_by_ideal(&j)?;
    Ok(q.quotient.radical()?.cols() == 0)
}

/// Canonical subspace basis of a two-sided ideal power chain, exposed for
/// tests of nilpotency.
pub fn ideal_power(a: &FDAlgebra, ideal: &Matrix, e: usize) -> Matrix {
    let mut power = ideal.column_space_basis();
    for _ in 1..e {
        let mut next = Matrix::zeros(a.field(), a.dim(), 0);
        for i in 0..power.cols() {
            let xi = Matrix::col_vec(a.field(), &power.column(i));
            for j in 0..ideal.cols() {
                let yj = Matrix::col_vec(a.field(), &ideal.column(j));
                next = next.hstack(&a.mul(&xi, &yj));
            }
        }
        power = next.column_space_basis();
        if power.cols() == 0 {
            break;
        }
    }
    power
}

/// Builds the n x n upper triangular matrix algebra over F_p (test helper
/// and a convenient example algebra).
pub fn upper_triangular_algebra(field: PrimeField, n: usize) -> FDAlgebra {
    // basis: matrix units e_{rc} with r <= c, ordered row-major
    let mut units = Vec::new();
    for r in 0..n {
        for c in r..n {
            units.push((r, c));
        }
    }
    let d = units.len();
    let idx = |r: usize, c: usize| units.iter().position(|&u| u == (r, c)).unwrap();
    let mut left_mul = Vec::with_capacity(d);
    for &(r1, c1) in &units {
        let mut lm = Matrix::zeros(field, d, d);
        for (j, &(r2, c2)) in units.iter().enumerate() {
            if c1 == r2 {
                lm.set(idx(r1, c2), j, 1);
            }
        }
        left_mul.push(lm);
    }
    let mut unit = vec![0u64; d];
    for r in 0..n {
        unit[idx(r, r)] = 1;
    }
    FDAlgebra::new(field, d, left_mul, unit).expect("matrix units are associative")
}

/// The product algebra F_p x ... x F_p (test helper).
pub fn split_torus(field: PrimeField, n: usize) -> FDAlgebra {
    let mut left_mul = Vec::with_capacity(n);
    for i in 0..n {
        let mut lm = Matrix::zeros(field, n, n);
        lm.set(i, i, 1);
        left_mul.push(lm);
    }
    FDAlgebra::new(field, n, left_mul, vec![1; n]).expect("diagonal algebra is associative")
}

/// Full n x n matrix algebra over F_p (test helper).
pub fn full_matrix_algebra(field: PrimeField, n: usize) -> FDAlgebra {
    let d = n * n;
    let idx = |r: usize, c: usize| r * n + c;
    let mut left_mul = Vec::with_capacity(d);
    for r1 in 0..n {
        for c1 in 0..n {
            let mut lm = Matrix::zeros(field, d, d);
            for r2 in 0..n {
                for c2 in 0..n {
                    if c1 == r2 {
                        lm.set(idx(r1, c2), idx(r2, c2), 1);
                    }
                }
            }
            left_mul.push(lm);
        }
    }
    let mut unit = vec![0u64; d];
    for r in 0..n {
        unit[idx(r, r)] = 1;
    }
    FDAlgebra::new(field, d, left_mul, unit).expect("matrix units are associative")
}

/// Two-sided ideal check helper for tests: sums of products of ideal and
/// algebra basis elements stay inside the ideal span.
pub fn is_two_sided_ideal(a: &FDAlgebra, ideal: &Matrix) -> bool {
    let can = CanonicalBasis::from_span(ideal);
    for i in 0..ideal.cols() {
        let x = Matrix::col_vec(a.field(), &ideal.column(i));
        for j in 0..a.dim() {
            let b = a.basis_element(j);
            if !can.contains(&a.mul(&x, &b)) || !can.contains(&a.mul(&b, &x)) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> PrimeField {
        PrimeField::new(5).unwrap()
    }

    #[test]
    fn field_is_semisimple() {
        let a = split_torus(f5(), 1);
        assert_eq!(a.radical().unwrap().cols(), 0);
        assert!(is_local(&a).unwrap());
        assert!(find_nontrivial_idempotent(&a).unwrap().is_none());
    }

    #[test]
    fn torus_has_idempotents() {
        let a = split_torus(f5(), 2);
        assert_eq!(a.radical().unwrap().cols(), 0);
        assert!(!is_local(&a).unwrap());
        let e = find_nontrivial_idempotent(&a).unwrap().unwrap();
        assert_eq!(a.mul(&e, &e), e);
        assert!(!e.is_zero() && e != a.unit_element());
    }

    #[test]
    fn upper_triangular_radical() {
        // 2x2 upper triangular: radical is the strictly upper part
        let a = upper_triangular_algebra(f5(), 2);
        let j = a.radical().unwrap();
        assert_eq!(j.cols(), 1);
        // the strictly upper unit e_{01} is basis index 1
        assert_eq!(j.column(0), vec![0, 1, 0]);
        assert!(is_two_sided_ideal(&a, &j));
        assert_eq!(ideal_power(&a, &j, 2).cols(), 0); // J^2 = 0
        assert!(!is_local(&a).unwrap());
        assert!(quotient_is_semisimple(&a).unwrap());
    }

    #[test]
    fn full_matrix_algebra_idempotent() {
        let a = full_matrix_algebra(f5(), 2);
        assert_eq!(a.radical().unwrap().cols(), 0);
        assert!(!is_local(&a).unwrap());
        let e = find_nontrivial_idempotent(&a).unwrap().unwrap();
        assert_eq!(a.mul(&e, &e), e);
        assert!(!e.is_zero() && e != a.unit_element());
    }

    #[test]
    fn matrix_algebra_radical_small_char() {
        // dim 9 over F_5: the blanket p > dim test would refuse, but the
        // nilpotency certificate accepts the (correct) zero radical
        let a = full_matrix_algebra(f5(), 3);
        assert_eq!(a.radical().unwrap().cols(), 0);
    }

    #[test]
    fn lift_fixes_perturbed_idempotent() {
        // 3x3 upper triangular, basis (0,0),(0,1),(0,2),(1,1),(1,2),(2,2);
        // e00 + e12 is idempotent mod J but not exactly
        let a = upper_triangular_algebra(f5(), 3);
        let mut v = a.zero_element();
        v.set(0, 0, 1);
        v.set(4, 0, 2);
        assert_ne!(a.mul(&v, &v), v);
        let e = lift_idempotent(&a, &v).unwrap();
        assert_eq!(a.mul(&e, &e), e);
        // congruent to e00 modulo the radical: difference has no diagonal part
        let j = a.radical().unwrap();
        let diff = e.sub(&Matrix::col_vec(f5(), &[1, 0, 0, 0, 0, 0]));
        assert!(crate::linalg::subspace_membership(&j, &diff).unwrap());
    }

    #[test]
    fn lift_keeps_idempotents() {
        let a = split_torus(f5(), 2);
        let e = Matrix::col_vec(f5(), &[1, 0]);
        assert_eq!(lift_idempotent(&a, &e).unwrap(), e);
        let z = a.zero_element();
        assert_eq!(lift_idempotent(&a, &z).unwrap(), z);
    }

    #[test]
    fn radical_nilpotent_upper3() {
        let a = upper_triangular_algebra(f5(), 3);
        let j = a.radical().unwrap();
        assert_eq!(j.cols(), 3);
        assert_eq!(ideal_power(&a, &j, 3).cols(), 0);
        assert_ne!(ideal_power(&a, &j, 2).cols(), 0);
    }

    #[test]
    fn local_iff_no_idempotent() {
        for a in [
            split_torus(f5(), 1),
            split_torus(f5(), 2),
            split_torus(f5(), 3),
            upper_triangular_algebra(f5(), 2),
            upper_triangular_algebra(f5(), 3),
            full_matrix_algebra(f5(), 2),
        ] {
            let local = is_local(&a).unwrap();
            let idem = find_nontrivial_idempotent(&a).unwrap();
            assert_eq!(local, idem.is_none(), "dim {}", a.dim());
        }
    }

    #[test]
    fn degenerate_trace_form_is_refused() {
        // M_2(F_2): the trace form vanishes identically (char divides the
        // block size), the kernel is everything and not nilpotent, so the
        // certificate must fail rather than report a wrong radical
        let f2 = PrimeField::new(2).unwrap();
        let a = full_matrix_algebra(f2, 2);
        assert!(matches!(a.radical(), Err(Error::CharTooSmall { p: 2, dim: 4 })));
    }

    #[test]
    fn small_char_radical_still_certifies() {
        // dim 6 over F_5: a blanket p > dim rule would refuse, but the
        // trace form stays nondegenerate on the quotient (the simples
        // occur with multiplicities 3, 2, 1 in the regular module, none
        // divisible by 5), so the certificate accepts
        let a = upper_triangular_algebra(f5(), 3);
        let j = a.radical().unwrap();
        assert_eq!(j.cols(), 3);
        assert_eq!(ideal_power(&a, &j, 3).cols(), 0);
        // over F_3 the first multiplicity vanishes mod p, the kernel picks
        // up an idempotent direction and certification must refuse
        let f3 = PrimeField::new(3).unwrap();
        let b = upper_triangular_algebra(f3, 3);
        assert!(matches!(b.radical(), Err(Error::CharTooSmall { p: 3, dim: 6 })));
    }

    #[test]
    fn zero_algebra_edge() {
        let a = FDAlgebra::new_unchecked(f5(), 0, vec![], vec![]);
        assert_eq!(a.radical().unwrap().cols(), 0);
        assert!(!is_local(&a).unwrap());
        assert!(find_nontrivial_idempotent(&a).unwrap().is_none());
    }

    #[test]
    fn minimal_polynomial_of_nilpotent() {
        let a = upper_triangular_algebra(f5(), 2);
        let x = a.basis_element(1); // strictly upper unit, squares to zero
        let m = a.minimal_polynomial(&x);
        assert_eq!(m.coeffs, vec![0, 0, 1]); // t^2
    }
}
