//! Brute-force cross-checks for the determination machinery: exhaustive
//! families of small representations, refutation of determination claims
//! by direct search, and seeded random representations.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::determined::{factors_through, image_hom};
use crate::error::{Error, Result};
use crate::linalg::{CanonicalBasis, Matrix};
use crate::quiver::BoundQuiverAlgebra;
use crate::rep::{is_isomorphic, HomSpace, RepMorphism, Representation};

pub const DEFAULT_FAMILY_CAP: usize = 200_000;
pub const DEFAULT_MORPHISM_CAP: usize = 10_000;

/// All representations with vertex dimensions bounded by `max_dims`,
/// deduplicated up to isomorphism. Deterministic order.
pub fn enumerate_test_modules(
    alg: &Arc<BoundQuiverAlgebra>,
    max_dims: &[usize],
    cap: usize,
) -> Result<Vec<Representation>> {
    let q = alg.quiver();
    let nv = q.vertex_count();
    if max_dims.len() != nv {
        return Err(Error::DimensionMismatch(format!(
            "expected {} dimension bounds, got {}",
            nv,
            max_dims.len()
        )));
    }
    let p = alg.field().p();
    let mut out: Vec<Representation> = Vec::new();
    let mut seen_raw: usize = 0;
    // iterate dimension vectors in mixed radix
    let mut dims = vec![0usize; nv];
    loop {
        // all arrow map assignments for this dimension vector
        let entry_counts: Vec<usize> = (0..q.arrow_count())
            .map(|a| dims[q.arrow_target(a)] * dims[q.arrow_source(a)])
            .collect();
        let total_entries: usize = entry_counts.iter().sum();
        let remaining = cap.saturating_sub(seen_raw);
        let combos = match (p as u128).checked_pow(total_entries as u32) {
            Some(c) if c <= remaining as u128 => c as usize,
            _ => return Err(Error::EnumerationOverflow { cap }),
        };
        for code in 0..combos {
            seen_raw += 1;
            let mut k = code as u64;
            let mut maps = Vec::with_capacity(q.arrow_count());
            for a in 0..q.arrow_count() {
                let rows = dims[q.arrow_target(a)];
                let cols = dims[q.arrow_source(a)];
                let mut data = Vec::with_capacity(rows * cols);
                for _ in 0..rows * cols {
                    data.push(k % p);
                    k /= p;
                }
                maps.push(Matrix::new(alg.field(), rows, cols, data));
            }
            let Ok(rep) = Representation::new(Arc::clone(alg), dims.clone(), maps) else {
                continue; // relations not satisfied
            };
            let mut duplicate = false;
            for kept in &out {
                if kept.dims() == rep.dims() && is_isomorphic(kept, &rep)?.is_some() {
                    duplicate = true;
                    break;
                }
            }
            if !duplicate {
                out.push(rep);
            }
        }
        // advance the dimension vector
        let mut i = 0;
        loop {
            if i == nv {
                return Ok(out);
            }
            if dims[i] < max_dims[i] {
                dims[i] += 1;
                break;
            }
            dims[i] = 0;
            i += 1;
        }
    }
}

/// Searches the family for a morphism α': X' -> Y that satisfies the
/// composite condition against `a` but does not factor through it. Finding
/// one refutes right C-determination of `a`; finding none proves nothing
/// beyond the family and the per-pair enumeration cap.
pub fn refute_determination(
    a: &RepMorphism,
    c: &Representation,
    family: &[Representation],
    morphism_cap: usize,
) -> Result<Option<RepMorphism>> {
    let target_image = image_hom(c, a)?;
    let target_span = CanonicalBasis::from_span(target_image.coords());
    let y = a.target();
    for x_prime in family {
        let hom = HomSpace::compute(x_prime, y)?;
        let d = hom.dim();
        if d == 0 {
            continue;
        }
        let p = a.source().algebra().field().p();
        let total = (p as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
        let count = total.min(morphism_cap as u128) as u64;
        let hom_cx = HomSpace::compute(c, x_prime)?;
        for code in 0..count {
            if code == 0 {
                continue; // the zero morphism always factors
            }
            let mut coords = vec![0u64; d];
            let mut k = code;
            for slot in coords.iter_mut() {
                *slot = k % p;
                k /= p;
            }
            let alpha_prime = hom.from_coords(&coords);
            // condition (2): image of Hom(C, α') inside image of Hom(C, a)
            let mut inside = true;
            for psi in hom_cx.basis() {
                let comp = alpha_prime.compose(psi);
                let co = target_image
                    .hom()
                    .coordinates(&comp)
                    .ok_or_else(|| Error::Internal("composite left Hom(C,Y)".into()))?;
                let v = Matrix::col_vec(a.source().algebra().field(), &co);
                if !target_span.contains(&v) {
                    inside = false;
                    break;
                }
            }
            if !inside {
                continue;
            }
            if factors_through(&alpha_prime, a)?.is_none() {
                return Ok(Some(alpha_prime));
            }
        }
    }
    Ok(None)
}

/// A seeded random representation of a relation-free algebra.
pub fn random_representation(
    alg: &Arc<BoundQuiverAlgebra>,
    dims: &[usize],
    seed: u64,
) -> Result<Representation> {
    if !alg.relations().is_empty() {
        return Err(Error::Unsupported(
            "random representations are only generated for relation-free algebras".into(),
        ));
    }
    let q = alg.quiver();
    if dims.len() != q.vertex_count() {
        return Err(Error::DimensionMismatch(format!(
            "expected {} dimensions, got {}",
            q.vertex_count(),
            dims.len()
        )));
    }
    let p = alg.field().p();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let maps = (0..q.arrow_count())
        .map(|a| {
            let rows = dims[q.arrow_target(a)];
            let cols = dims[q.arrow_source(a)];
            let data: Vec<u64> = (0..rows * cols).map(|_| rng.gen_range(0..p)).collect();
            Matrix::new(alg.field(), rows, cols, data)
        })
        .collect();
    Representation::new(Arc::clone(alg), dims.to_vec(), maps)
}

/// A seeded random morphism between two representations, as a random
/// combination of the canonical Hom basis.
pub fn random_morphism(
    x: &Representation,
    y: &Representation,
    seed: u64,
) -> Result<RepMorphism> {
    let hom = HomSpace::compute(x, y)?;
    let p = x.algebra().field().p();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coords: Vec<u64> = (0..hom.dim()).map(|_| rng.gen_range(0..p)).collect();
    Ok(hom.from_coords(&coords))
}
