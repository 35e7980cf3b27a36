//! Univariate polynomial arithmetic over F_p, enough to analyse minimal
//! polynomials: gcds, squarefree parts, distinct-degree splitting and
//! coprime factor splits. Coefficients are stored low degree first.

use crate::linalg::PrimeField;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    pub field: PrimeField,
    pub coeffs: Vec<u64>, // trimmed, coeffs[deg] != 0 unless zero poly
}

impl Poly {
    pub fn new(field: PrimeField, mut coeffs: Vec<u64>) -> Poly {
        for c in coeffs.iter_mut() {
            *c = field.reduce(*c);
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: PrimeField) -> Poly {
        Poly { field, coeffs: vec![] }
    }

    pub fn constant(field: PrimeField, c: u64) -> Poly {
        Poly::new(field, vec![c])
    }

    pub fn x(field: PrimeField) -> Poly {
        Poly::new(field, vec![0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg(&self) -> usize {
        assert!(!self.is_zero(), "degree of zero polynomial");
        self.coeffs.len() - 1
    }

    pub fn lead(&self) -> u64 {
        *self.coeffs.last().expect("lead of zero polynomial")
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.lead());
        Poly::new(self.field, self.coeffs.iter().map(|&c| self.field.mul(c, inv)).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0; n];
        for (i, o) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *o = self.field.add(a, b);
        }
        Poly::new(self.field, out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(self.field.p() - 1))
    }

    pub fn scale(&self, k: u64) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|&c| self.field.mul(c, k)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = self.field.add(out[i + j], self.field.mul(a, b));
            }
        }
        Poly::new(self.field, out)
    }

    /// (quotient, remainder) of division by a nonzero polynomial.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let f = self.field;
        let mut rem = self.coeffs.clone();
        if rem.len() < d.coeffs.len() {
            return (Poly::zero(f), self.clone());
        }
        let mut quo = vec![0u64; rem.len() - d.coeffs.len() + 1];
        let dl_inv = f.inv(d.lead());
        for i in (0..quo.len()).rev() {
            let top = rem[i + d.coeffs.len() - 1];
            if top == 0 {
                continue;
            }
            let q = f.mul(top, dl_inv);
            quo[i] = q;
            for (j, &dc) in d.coeffs.iter().enumerate() {
                rem[i + j] = f.sub(rem[i + j], f.mul(q, dc));
            }
        }
        (Poly::new(f, quo), Poly::new(f, rem))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).1
    }

    pub fn div_exact(&self, d: &Poly) -> Poly {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero(self.field);
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.field.mul(c, (i as u64) % self.field.p()))
            .collect();
        Poly::new(self.field, out)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0;
        for &c in self.coeffs.iter().rev() {
            acc = self.field.add(self.field.mul(acc, x), c);
        }
        acc
    }

    /// self^e mod m, by repeated squaring.
    pub fn pow_mod(&self, mut e: u64, m: &Poly) -> Poly {
        let mut base = self.rem(m);
        let mut acc = Poly::constant(self.field, 1).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    /// x^(p^k) mod m, iterating the Frobenius.
    pub fn frobenius_power_mod(m: &Poly, k: usize) -> Poly {
        let mut h = Poly::x(m.field).rem(m);
        for _ in 0..k {
            h = h.pow_mod(m.field.p(), m);
        }
        h
    }
}

/// Product of the distinct irreducible factors of `f` (the radical of f).
pub fn squarefree_part(f: &Poly) -> Poly {
    let f = f.monic();
    if f.is_zero() || f.deg() == 0 {
        return f;
    }
    let d = f.derivative();
    if d.is_zero() {
        // f(t) = g(t^p); over F_p the coefficients are their own p-th roots
        let p = f.field.p() as usize;
        let g: Vec<u64> = f.coeffs.iter().step_by(p).copied().collect();
        return squarefree_part(&Poly::new(f.field, g));
    }
    let g = f.gcd(&d);
    if g.deg() == 0 {
        return f;
    }
    let part = f.div_exact(&g);
    // factors with multiplicity divisible by p hide entirely inside g
    let rest = squarefree_part(&g);
    let common = part.gcd(&rest);
    part.mul(&rest.div_exact(&common)).monic()
}

/// The outcome of analysing a minimal polynomial.
pub enum SplitOutcome {
    /// f = a*b with gcd(a,b) = 1, both nonconstant.
    Coprime(Poly, Poly),
    /// f = g^e with g irreducible and e >= 2.
    PrimePower(Poly, usize),
    Irreducible,
    /// squarefree with several same-degree irreducible factors that the
    /// deterministic pass could not separate
    Unsplit,
}

/// Tries to split `f` into two nonconstant coprime factors, or recognise
/// it as irreducible / a prime power. Deterministic; may give up
/// (`Unsplit`) on products of same-degree irreducibles when the shifted
/// gcd sweep fails.
pub fn analyse(f: &Poly) -> SplitOutcome {
    let f = f.monic();
    assert!(!f.is_zero() && f.deg() >= 1);
    if f.deg() == 1 {
        return SplitOutcome::Irreducible;
    }
    let s = squarefree_part(&f);
    if s.deg() < f.deg() {
        // pull the factors of s out of f with full multiplicity
        match split_squarefree(&s) {
            Some((a, _)) => {
                let fa = saturate(&f, &a);
                if fa.deg() < f.deg() {
                    let fb = f.div_exact(&fa);
                    return SplitOutcome::Coprime(fa, fb);
                }
                SplitOutcome::Unsplit
            }
            None => {
                if is_irreducible(&s) {
                    let e = f.deg() / s.deg();
                    SplitOutcome::PrimePower(s, e)
                } else {
                    SplitOutcome::Unsplit
                }
            }
        }
    } else {
        match split_squarefree(&f) {
            Some((a, b)) => SplitOutcome::Coprime(a, b),
            None => {
                if is_irreducible(&f) {
                    SplitOutcome::Irreducible
                } else {
                    SplitOutcome::Unsplit
                }
            }
        }
    }
}

/// Largest divisor of f all of whose irreducible factors divide a.
fn saturate(f: &Poly, a: &Poly) -> Poly {
    let mut acc = Poly::constant(f.field, 1);
    let mut rest = f.clone();
    loop {
        let g = rest.gcd(a);
        if g.deg() == 0 {
            return acc.monic();
        }
        acc = acc.mul(&g);
        rest = rest.div_exact(&g);
        if rest.deg() == 0 {
            return acc.monic();
        }
    }
}

pub fn is_irreducible(f: &Poly) -> bool {
    let f = f.monic();
    let n = f.deg();
    if n == 1 {
        return true;
    }
    // x^(p^n) ≡ x mod f, and x^(p^(n/q)) - x coprime to f for prime q | n
    let x = Poly::x(f.field);
    let h = Poly::frobenius_power_mod(&f, n);
    if !h.sub(&x).rem(&f).is_zero() {
        return false;
    }
    let mut m = n;
    let mut primes = vec![];
    let mut q = 2;
    while q * q <= m {
        if m % q == 0 {
            primes.push(q);
            while m % q == 0 {
                m /= q;
            }
        }
        q += 1;
    }
    if m > 1 {
        primes.push(m);
    }
    for q in primes {
        let h = Poly::frobenius_power_mod(&f, n / q);
        if f.gcd(&h.sub(&x)).deg() != 0 {
            return false;
        }
    }
    true
}

/// Splits a squarefree monic polynomial into two coprime nonconstant
/// factors, when the deterministic distinct-degree pass (plus a bounded
/// shifted-gcd sweep for same-degree products) finds one.
fn split_squarefree(f: &Poly) -> Option<(Poly, Poly)> {
    let field = f.field;
    let x = Poly::x(field);
    // distinct-degree: peel off, for d = 1, 2, ..., the product of all
    // irreducible factors of degree d
    let mut h = x.clone().rem(f);
    let mut rest = f.monic();
    let mut parts: Vec<(usize, Poly)> = Vec::new();
    let mut d = 0;
    while rest.deg() >= 1 {
        d += 1;
        if 2 * d > rest.deg() {
            // what remains is a single irreducible factor
            parts.push((rest.deg(), rest.clone()));
            break;
        }
        h = h.pow_mod(field.p(), &rest);
        let g = rest.gcd(&h.sub(&x));
        if g.deg() > 0 {
            parts.push((d, g.monic()));
            rest = rest.div_exact(&g).monic();
            if rest.deg() >= 1 {
                h = h.rem(&rest);
            }
        }
    }
    if parts.len() >= 2 {
        let a = parts[0].1.monic();
        let b = f.monic().div_exact(&a).monic();
        return Some((a, b));
    }
    // single distinct-degree part: k >= 1 factors of equal degree d
    let (d, g) = parts.pop()?;
    if g.deg() == d {
        return None; // irreducible
    }
    equal_degree_split(&g, d)
}

/// Bounded deterministic sweep splitting a product of >= 2 irreducible
/// factors of the same degree d.
fn equal_degree_split(g: &Poly, d: usize) -> Option<(Poly, Poly)> {
    let field = g.field;
    let p = field.p();
    if p == 2 {
        // trace map over F_2: T(h) = h + h^2 + ... + h^(2^(d-1)), swept over
        // candidate polynomials encoded by the bits of a counter
        let max = 1u64 << g.deg().min(16);
        for code in 1..max {
            let coeffs: Vec<u64> = (0..g.deg()).map(|i| (code >> i) & 1).collect();
            let base = Poly::new(field, coeffs);
            if base.is_zero() {
                continue;
            }
            let mut t = base.rem(g);
            let mut sq = base.rem(g);
            for _ in 1..d {
                sq = sq.mul(&sq).rem(g);
                t = t.add(&sq);
            }
            let a = g.gcd(&t);
            if a.deg() > 0 && a.deg() < g.deg() {
                return Some((a.clone(), g.div_exact(&a).monic()));
            }
        }
        return None;
    }
    // odd p: gcd(g, (x+c)^((p^d-1)/2) - 1) for a sweep of shifts c
    let mut e: u128 = 1;
    for _ in 0..d {
        e = e.saturating_mul(p as u128);
    }
    let e = (e - 1) / 2;
    if e > u64::MAX as u128 {
        return None;
    }
    let e = e as u64;
    for c in 0..p.min(256) {
        let base = Poly::new(field, vec![c, 1]);
        let h = pow_mod_u128_safe(&base, e, g);
        let probe = h.sub(&Poly::constant(field, 1));
        let a = g.gcd(&probe);
        if a.deg() > 0 && a.deg() < g.deg() {
            return Some((a.clone(), g.div_exact(&a).monic()));
        }
    }
    None
}

fn pow_mod_u128_safe(base: &Poly, e: u64, m: &Poly) -> Poly {
    base.pow_mod(e, m)
}

/// All roots of f in F_p, by direct evaluation (desk-scale p), returned
/// in increasing order.
pub fn roots(f: &Poly, limit: u64) -> Vec<u64> {
    let p = f.field.p();
    assert!(p <= limit, "root sweep only supported for small p");
    (0..p).filter(|&c| f.eval(c) == 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> PrimeField {
        PrimeField::new(5).unwrap()
    }

    #[test]
    fn div_rem_roundtrip() {
        let f = Poly::new(f5(), vec![1, 0, 2, 3]); // 3t^3 + 2t^2 + 1
        let d = Poly::new(f5(), vec![2, 1]); // t + 2
        let (q, r) = f.div_rem(&d);
        assert_eq!(q.mul(&d).add(&r), f);
    }

    #[test]
    fn gcd_of_coprime() {
        let a = Poly::new(f5(), vec![4, 1]); // t + 4 = t - 1
        let b = Poly::new(f5(), vec![1, 1]); // t + 1
        assert_eq!(a.gcd(&b).deg(), 0);
    }

    #[test]
    fn squarefree_strips_powers() {
        let g = Poly::new(f5(), vec![1, 1]); // t + 1
        let f = g.mul(&g).mul(&g); // (t+1)^3
        assert_eq!(squarefree_part(&f), g.monic());
    }

    #[test]
    fn analyse_split_product() {
        // t(t-1) over F_5
        let f = Poly::new(f5(), vec![0, 4, 1]);
        match analyse(&f) {
            SplitOutcome::Coprime(a, b) => {
                assert_eq!(a.mul(&b).monic(), f.monic());
                assert_eq!(a.gcd(&b).deg(), 0);
            }
            _ => panic!("expected a coprime split"),
        }
    }

    #[test]
    fn analyse_prime_power() {
        let g = Poly::new(f5(), vec![2, 1]);
        let f = g.mul(&g);
        match analyse(&f) {
            SplitOutcome::PrimePower(b, e) => {
                assert_eq!(b, g.monic());
                assert_eq!(e, 2);
            }
            _ => panic!("expected prime power"),
        }
    }

    #[test]
    fn irreducible_quadratic() {
        // t^2 + 2 has no roots mod 5 -> irreducible
        let f = Poly::new(f5(), vec![2, 0, 1]);
        assert!(is_irreducible(&f));
        assert!(matches!(analyse(&f), SplitOutcome::Irreducible));
    }

    #[test]
    fn roots_by_sweep() {
        // t^2 - 1 = (t-1)(t+1)
        let f = Poly::new(f5(), vec![4, 0, 1]);
        assert_eq!(roots(&f, 1 << 16), vec![1, 4]);
    }

    #[test]
    fn split_same_degree_over_f2() {
        // the two irreducible cubics over F_2
        let f2 = PrimeField::new(2).unwrap();
        let a = Poly::new(f2, vec![1, 1, 0, 1]);
        let b = Poly::new(f2, vec![1, 0, 1, 1]);
        assert!(is_irreducible(&a) && is_irreducible(&b));
        let f = a.mul(&b);
        match analyse(&f) {
            SplitOutcome::Coprime(x, y) => {
                assert_eq!(x.mul(&y).monic(), f.monic());
                assert_eq!(x.gcd(&y).deg(), 0);
            }
            _ => panic!("expected an equal-degree split over F_2"),
        }
    }

    #[test]
    fn split_same_degree_product() {
        // product of two irreducible quadratics over F_5: (t^2+2)(t^2+3)
        let a = Poly::new(f5(), vec![2, 0, 1]);
        let b = Poly::new(f5(), vec![3, 0, 1]);
        let f = a.mul(&b);
        match analyse(&f) {
            SplitOutcome::Coprime(x, y) => {
                assert_eq!(x.mul(&y).monic(), f.monic());
                assert_eq!(x.gcd(&y).deg(), 0);
            }
            _ => panic!("expected same-degree split"),
        }
    }
}
