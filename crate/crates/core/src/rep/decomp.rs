//! Right minimalization, decomposition into indecomposables, isomorphism
//! testing and add-membership. All splittings go through idempotents of
//! endomorphism algebras.

use crate::error::{Error, Result};
use crate::fdalg::{self, FDAlgebra};
use crate::linalg::{CanonicalBasis, Matrix};

use super::{end_algebra, HomSpace, RepMorphism, Representation};

/// Result of right-minimalizing a morphism f: X -> Y: a decomposition
/// X = X' + X'' with f restricted to X' right minimal and f zero on X''.
pub struct RightMinimalization {
    /// the right minimal morphism X' -> Y
    pub minimal: RepMorphism,
    /// X' -> X
    pub embed_minimal: RepMorphism,
    /// the dead summand X''
    pub dead: Representation,
    /// X'' -> X
    pub embed_dead: RepMorphism,
}

/// Coordinates (in the canonical End(X) basis) of the annihilator
/// {phi in End(X) : f o phi = 0}, together with the End Hom space.
pub fn hom_annihilator(f: &RepMorphism) -> Result<(Matrix, HomSpace)> {
    let hom = HomSpace::compute(f.source(), f.source())?;
    let field = f.source().algebra().field();
    let n = f.vectorize().rows();
    let mut cols = Matrix::zeros(field, n, 0);
    for b in hom.basis() {
        cols = cols.hstack(&f.compose(b).vectorize());
    }
    Ok((cols.kernel_basis(), hom))
}

/// Splits off a maximal direct summand on which the morphism vanishes,
/// leaving a right minimal restriction.
pub fn right_minimalize(f: &RepMorphism) -> Result<RightMinimalization> {
    let alg = f.source().algebra().clone();
    let original = f.source().clone();
    let mut cur = f.clone();
    let mut embed = RepMorphism::identity(original.clone());
    // dead summands with their embeddings into the original source
    let mut dead: Vec<(Representation, RepMorphism)> = Vec::new();

    loop {
        if cur.is_zero() && !cur.source().is_zero() {
            // everything is dead
            dead.push((cur.source().clone(), embed.clone()));
            let zero = Representation::zero(&alg);
            cur = RepMorphism::zero(zero.clone(), f.target().clone());
            embed = RepMorphism::zero(zero, original.clone());
            break;
        }
        let (ann, hom) = hom_annihilator(&cur)?;
        if ann.cols() == 0 {
            break;
        }
        let (end, _) = end_algebra(cur.source())?;
        let j = end.radical()?;
        if CanonicalBasis::from_span(&j).contains_subspace(&ann) {
            break; // annihilator inside the radical: already right minimal
        }
        let eps = split_idempotent(&end, &j, &ann)?;
        let eps_mor = hom.from_coords(&column_vec(&eps));
        debug_assert!(f_kills(&cur, &eps_mor));
        // X = im(eps) + ker(eps); the image is dead, continue on the kernel
        let dead_bases: Vec<Matrix> = eps_mor.maps().iter().map(|m| m.image_basis()).collect();
        let live_bases: Vec<Matrix> = eps_mor.maps().iter().map(|m| m.kernel_basis()).collect();
        let (dead_rep, dead_incl) = cur.source().subrepresentation(&dead_bases)?;
        let (live_rep, live_incl) = cur.source().subrepresentation(&live_bases)?;
        debug_assert!(dead_rep.total_dim() > 0);
        debug_assert_eq!(
            dead_rep.total_dim() + live_rep.total_dim(),
            cur.source().total_dim()
        );
        dead.push((dead_rep, embed.compose(&dead_incl)));
        cur = cur.compose(&live_incl);
        embed = embed.compose(&live_incl);
    }

    let dead_reps: Vec<&Representation> = dead.iter().map(|(r, _)| r).collect();
    let (dead_sum, _, projs) = Representation::direct_sum_with_maps(&alg, &dead_reps);
    let mut embed_dead = RepMorphism::zero(dead_sum.clone(), original.clone());
    for ((_, emb), proj) in dead.iter().zip(&projs) {
        embed_dead = embed_dead.add(&emb.compose(proj));
    }
    debug_assert!(f.compose(&embed_dead).is_zero());
    debug_assert!(splitting_is_iso(&embed, &embed_dead));
    Ok(RightMinimalization {
        minimal: cur,
        embed_minimal: embed,
        dead: dead_sum,
        embed_dead,
    })
}

fn column_vec(m: &Matrix) -> Vec<u64> {
    m.column(0)
}

fn f_kills(f: &RepMorphism, eps: &RepMorphism) -> bool {
    f.compose(eps).is_zero()
}

fn splitting_is_iso(a: &RepMorphism, b: &RepMorphism) -> bool {
    a.maps()
        .iter()
        .zip(b.maps())
        .all(|(ma, mb)| ma.hstack(mb).is_invertible())
}

/// An exact idempotent inside the annihilator right ideal whose class in
/// End/J is nonzero.
fn split_idempotent(end: &FDAlgebra, radical: &Matrix, ann: &Matrix) -> Result<Matrix> {
    let q = end.quotient_by_ideal(radical)?;
    let s = &q.quotient;
    // image of the annihilator in the semisimple quotient: a right ideal
    let imapped = q.projection.mul(ann);
    let bar = CanonicalBasis::from_span(&imapped);
    debug_assert!(bar.dim() > 0, "annihilator not inside the radical");
    let ebar = fdalg::right_ideal_generator(s, &bar)?;
    debug_assert!(!ebar.is_zero());
    // representative inside the annihilator: solve (proj * ann) c = ebar
    let proj_ann = q.projection.mul(ann);
    let c = proj_ann
        .solve_right(&ebar)?
        .ok_or_else(|| Error::Internal("idempotent class has no representative in the annihilator".into()))?;
    let rep = ann.mul(&c);
    // the lifting iteration stays inside the annihilator (a right ideal)
    let e = fdalg::lift_idempotent(end, &rep)?;
    debug_assert!(!q.projection.mul(&e).is_zero());
    Ok(e)
}

/// One indecomposable summand of a decomposition, with the structural maps.
pub struct SummandData {
    pub rep: Representation,
    /// rep -> m
    pub inclusion: RepMorphism,
    /// m -> rep
    pub projection: RepMorphism,
}

/// Decomposition into indecomposable summands, ordered by fingerprint.
/// Each summand comes with its inclusion and projection; the sum of
/// inclusion o projection over all summands is the identity.
pub fn indecomposable_decomposition(m: &Representation) -> Result<Vec<SummandData>> {
    let mut out = Vec::new();
    let id = RepMorphism::identity(m.clone());
    decompose_into(m, &id, &id, &mut out)?;
    out.sort_by(|a, b| a.rep.fingerprint().cmp(&b.rep.fingerprint()));
    Ok(out)
}

fn decompose_into(
    piece: &Representation,
    incl: &RepMorphism,  // piece -> original
    proj: &RepMorphism,  // original -> piece
    out: &mut Vec<SummandData>,
) -> Result<()> {
    if piece.is_zero() {
        return Ok(());
    }
    let (end, hom) = end_algebra(piece)?;
    match fdalg::find_nontrivial_idempotent(&end)? {
        None => {
            debug_assert!(fdalg::is_local(&end)?, "summand End algebra must be local");
            out.push(SummandData {
                rep: piece.clone(),
                inclusion: incl.clone(),
                projection: proj.clone(),
            });
            Ok(())
        }
        Some(e) => {
            let eps = hom.from_coords(&column_vec(&e));
            let a_bases: Vec<Matrix> = eps.maps().iter().map(|mt| mt.image_basis()).collect();
            let b_bases: Vec<Matrix> = eps.maps().iter().map(|mt| mt.kernel_basis()).collect();
            let (a_rep, a_incl) = piece.subrepresentation(&a_bases)?;
            let (b_rep, b_incl) = piece.subrepresentation(&b_bases)?;
            debug_assert!(a_rep.total_dim() > 0 && b_rep.total_dim() > 0);
            // projections of piece onto the two halves along each other
            let (a_proj, b_proj) = split_projections(piece, &a_bases, &b_bases)?;
            decompose_into(&a_rep, &incl.compose(&a_incl), &a_proj.compose(proj), out)?;
            decompose_into(&b_rep, &incl.compose(&b_incl), &b_proj.compose(proj), out)?;
            Ok(())
        }
    }
}

/// Projections onto two complementary invariant subspaces given by bases.
fn split_projections(
    piece: &Representation,
    a_bases: &[Matrix],
    b_bases: &[Matrix],
) -> Result<(RepMorphism, RepMorphism)> {
    let nv = piece.dims().len();
    let mut a_maps = Vec::with_capacity(nv);
    let mut b_maps = Vec::with_capacity(nv);
    for v in 0..nv {
        let change = a_bases[v].hstack(&b_bases[v]);
        let inv = change
            .inverse()
            .ok_or_else(|| Error::Internal("summand bases do not split the space".into()))?;
        a_maps.push(inv.submatrix(0, a_bases[v].cols(), 0, inv.cols()));
        b_maps.push(inv.submatrix(a_bases[v].cols(), inv.rows(), 0, inv.cols()));
    }
    let a_rep = piece.subrepresentation(a_bases)?.0;
    let b_rep = piece.subrepresentation(b_bases)?.0;
    let a_proj = RepMorphism::new(piece.clone(), a_rep, a_maps)?;
    let b_proj = RepMorphism::new(piece.clone(), b_rep, b_maps)?;
    Ok((a_proj, b_proj))
}

/// Isomorphism test for indecomposables: non-isomorphisms between
/// indecomposables form a subspace, so if an isomorphism exists some
/// canonical basis element of the Hom space is one.
fn indec_iso(m: &Representation, n: &Representation) -> Result<Option<RepMorphism>> {
    if m.dims() != n.dims() {
        return Ok(None);
    }
    if m.is_zero() {
        return Ok(Some(RepMorphism::zero(m.clone(), n.clone())));
    }
    for b in HomSpace::compute(m, n)?.basis() {
        if b.is_iso() {
            return Ok(Some(b.clone()));
        }
    }
    Ok(None)
}

/// An isomorphism m -> n when one exists.
///
/// First sweeps the Hom basis and pairwise sums for an invertible element;
/// if that misses, decomposes both sides and matches indecomposable
/// summands, which is a complete decision procedure.
pub fn is_isomorphic(m: &Representation, n: &Representation) -> Result<Option<RepMorphism>> {
    if !m.same_algebra(n) {
        return Err(Error::AlgebraMismatch);
    }
    if m.dims() != n.dims() {
        return Ok(None);
    }
    if m.is_zero() {
        return Ok(Some(RepMorphism::zero(m.clone(), n.clone())));
    }
    let hom = HomSpace::compute(m, n)?;
    for b in hom.basis() {
        if b.is_iso() {
            return Ok(Some(b.clone()));
        }
    }
    for i in 0..hom.dim() {
        for j in (i + 1)..hom.dim() {
            let cand = hom.basis()[i].add(&hom.basis()[j]);
            if cand.is_iso() {
                return Ok(Some(cand));
            }
        }
    }
    // complete path: match indecomposable summands
    let md = indecomposable_decomposition(m)?;
    let nd = indecomposable_decomposition(n)?;
    if md.len() != nd.len() {
        return Ok(None);
    }
    let mut used = vec![false; nd.len()];
    let mut iso = RepMorphism::zero(m.clone(), n.clone());
    for ms in &md {
        let mut matched = false;
        for (k, ns) in nd.iter().enumerate() {
            if used[k] {
                continue;
            }
            if let Some(phi) = indec_iso(&ms.rep, &ns.rep)? {
                used[k] = true;
                matched = true;
                iso = iso.add(&ns.inclusion.compose(&phi).compose(&ms.projection));
                break;
            }
        }
        if !matched {
            return Ok(None);
        }
    }
    if iso.is_iso() {
        Ok(Some(iso))
    } else {
        Err(Error::Internal("matched summands did not assemble to an isomorphism".into()))
    }
}

/// Whether every indecomposable summand of m is isomorphic to a summand
/// of c (so m lies in add c). Multiplicities are irrelevant.
pub fn add_member(m: &Representation, c: &Representation) -> Result<bool> {
    if !m.same_algebra(c) {
        return Err(Error::AlgebraMismatch);
    }
    if m.is_zero() {
        return Ok(true);
    }
    let md = indecomposable_decomposition(m)?;
    let cd = indecomposable_decomposition(c)?;
    for ms in &md {
        let mut found = false;
        for cs in &cd {
            if indec_iso(&ms.rep, &cs.rep)?.is_some() {
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}
