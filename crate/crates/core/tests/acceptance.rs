//! Acceptance suite: one test per criterion, each printing a PASS line
//! with its runtime once every assertion inside has held.
//!
//! The suites cross-check the constructive machinery against independent
//! ground truth: interval-module combinatorics of linear quivers, the
//! classical mesh structure of their Auslander-Reiten quivers, exhaustive
//! brute-force searches over small module families, and the raw
//! definition of determination in finite posets.

use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use detmor::determined::{
    check_auslander_claim, construct_determined, construct_determined_with_order,
    factors_through, image_hom, is_right_determined, minimal_determinator,
    minimal_determinator_from_candidates, sufficient_determinator, GammaSubmodule,
};
use detmor::fdalg;
use detmor::linalg::{enumerate_subspaces, CanonicalBasis, Matrix, PrimeField};
use detmor::oracle::{enumerate_test_modules, random_representation, refute_determination};
use detmor::poset::FinitePoset;
use detmor::quiver::{indec_injective, indec_projective, BoundQuiverAlgebra, Quiver};
use detmor::rep::{
    add_member, dualize, end_algebra, hom_annihilator, hom_basis, injective_via_duality,
    is_isomorphic, kernel, projective_cover, right_minimalize, tau, HomSpace, RepMorphism,
    Representation,
};

fn linear_quiver(n: usize, p: u64) -> Arc<BoundQuiverAlgebra> {
    let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let arrows: Vec<(String, String, String)> = (1..n)
        .map(|i| (format!("a{i}"), i.to_string(), (i + 1).to_string()))
        .collect();
    let q = Quiver::new(vertices, arrows).unwrap();
    BoundQuiverAlgebra::new(PrimeField::new(p).unwrap(), q, vec![]).unwrap()
}

/// Interval module of a linear quiver supported on lo..=hi (1-based):
/// the independent description of the indecomposables of kA_n.
fn interval(alg: &Arc<BoundQuiverAlgebra>, lo: usize, hi: usize) -> Representation {
    let q = alg.quiver();
    let n = q.vertex_count();
    let mut dims = vec![0usize; n];
    for v in (lo - 1)..hi {
        dims[v] = 1;
    }
    let maps = (0..q.arrow_count())
        .map(|a| {
            let (u, w) = (q.arrow_source(a), q.arrow_target(a));
            let mut m = Matrix::zeros(alg.field(), dims[w], dims[u]);
            if dims[u] == 1 && dims[w] == 1 {
                m.set(0, 0, 1);
            }
            m
        })
        .collect();
    Representation::new(Arc::clone(alg), dims, maps).unwrap()
}

fn all_intervals(alg: &Arc<BoundQuiverAlgebra>) -> Vec<(usize, usize, Representation)> {
    let n = alg.quiver().vertex_count();
    let mut out = Vec::new();
    for lo in 1..=n {
        for hi in lo..=n {
            out.push((lo, hi, interval(alg, lo, hi)));
        }
    }
    out
}

fn mutually_isomorphic_over(a: &RepMorphism, b: &RepMorphism) -> bool {
    let (Ok(Some(to)), Ok(Some(from))) = (factors_through(a, b), factors_through(b, a)) else {
        return false;
    };
    from.compose(&to).is_iso() && to.compose(&from).is_iso()
}

#[test]
fn criterion_1_uniqueness_suite() {
    let start = Instant::now();
    for n in [2usize, 3] {
        let alg = linear_quiver(n, 5);
        let indecs = all_intervals(&alg);
        for (_, _, c) in &indecs {
            for (_, _, y) in &indecs {
                let hom = HomSpace::compute(c, y).unwrap();
                let mut constructed: Vec<(GammaSubmodule, RepMorphism)> = Vec::new();
                for subspace in enumerate_subspaces(alg.field(), hom.dim()) {
                    let h = match GammaSubmodule::from_coords(c, y, &subspace) {
                        Ok(h) => h,
                        Err(detmor::Error::NotGammaClosed) => continue,
                        Err(e) => panic!("unexpected error: {e}"),
                    };
                    let alpha = construct_determined(&h).unwrap();
                    // right minimal: nothing splits off
                    let rm = right_minimalize(&alpha).unwrap();
                    assert!(rm.dead.is_zero(), "constructed morphism must be right minimal");
                    // image is exactly H, bit-exact canonical coordinates
                    let img = image_hom(c, &alpha).unwrap();
                    assert_eq!(img.coords(), h.coords());
                    // a permuted functional basis gives an isomorphic morphism
                    let m = hom.dim() - h.dim();
                    if m > 1 {
                        let perm: Vec<usize> = (0..m).rev().collect();
                        let beta = construct_determined_with_order(&h, Some(&perm)).unwrap();
                        assert!(
                            mutually_isomorphic_over(&alpha, &beta),
                            "permuted functionals changed the isomorphism class"
                        );
                    }
                    // and the morphism is right C-determined by construction
                    assert!(is_right_determined(&alpha, c).unwrap());
                    constructed.push((h, alpha));
                }
                // monotonicity: containment of submodules forces factorization
                for (h1, a1) in &constructed {
                    for (h2, a2) in &constructed {
                        if h2.contains_submodule(h1) {
                            assert!(
                                factors_through(a1, a2).unwrap().is_some(),
                                "smaller image must factor through the larger one"
                            );
                        }
                    }
                }
            }
        }
        // decomposable targets give Hom spaces of dimension >= 2, so the
        // functional-basis permutation acts nontrivially there
        for (_, _, c) in &indecs {
            for (i, (_, _, y1)) in indecs.iter().enumerate() {
                for (_, _, y2) in indecs.iter().skip(i) {
                    let y = Representation::direct_sum(&alg, &[y1, y2]);
                    let hom = HomSpace::compute(c, &y).unwrap();
                    if hom.dim() < 2 {
                        continue;
                    }
                    for subspace in enumerate_subspaces(alg.field(), hom.dim()) {
                        let Ok(h) = GammaSubmodule::from_coords(c, &y, &subspace) else {
                            continue;
                        };
                        let alpha = construct_determined(&h).unwrap();
                        assert_eq!(image_hom(c, &alpha).unwrap().coords(), h.coords());
                        let m = hom.dim() - h.dim();
                        if m > 1 {
                            let perm: Vec<usize> = (0..m).rev().collect();
                            let beta = construct_determined_with_order(&h, Some(&perm)).unwrap();
                            assert!(mutually_isomorphic_over(&alpha, &beta));
                        }
                    }
                }
            }
        }
    }
    println!(
        "acceptance 1 (uniqueness over kA2/kA3, all (C,Y,H)): PASS in {:.1?}",
        start.elapsed()
    );
}

#[test]
fn criterion_2_almost_split_suite() {
    let start = Instant::now();
    for n in [2usize, 3, 4] {
        let alg = linear_quiver(n, 5);
        let indecs = all_intervals(&alg);
        // the classical count of indecomposables for A_n
        assert_eq!(indecs.len(), n * (n + 1) / 2);
        for (i, (_, _, a)) in indecs.iter().enumerate() {
            let (end, _) = end_algebra(a).unwrap();
            assert!(fdalg::is_local(&end).unwrap(), "interval modules are indecomposable");
            for (_, _, b) in indecs.iter().skip(i + 1) {
                assert!(is_isomorphic(a, b).unwrap().is_none());
            }
        }
        for (lo, hi, z) in &indecs {
            if *hi == n {
                continue; // projective: P(v) = [v, n]
            }
            let asp = detmor::determined::almost_split_ending_at(z).unwrap();
            // epimorphism with kernel tau(Z)
            for (v, m) in asp.morphism.maps().iter().enumerate() {
                assert_eq!(m.rank(), z.dims()[v], "almost split map must be epi");
            }
            let seq = asp.sequence.expect("non-projective ending term");
            let expected_tau = interval(&alg, lo + 1, hi + 1);
            assert!(is_isomorphic(&seq.kernel, &expected_tau).unwrap().is_some());
            let t = tau(z).unwrap();
            assert!(is_isomorphic(&seq.kernel, &t).unwrap().is_some());
            // the classical mesh: middle term [lo+1, hi] + [lo, hi+1]
            let mut parts: Vec<Representation> = Vec::new();
            if lo + 1 <= *hi {
                parts.push(interval(&alg, lo + 1, *hi));
            }
            parts.push(interval(&alg, *lo, hi + 1));
            let refs: Vec<&Representation> = parts.iter().collect();
            let mesh_middle = Representation::direct_sum(&alg, &refs);
            assert!(
                is_isomorphic(asp.morphism.source(), &mesh_middle).unwrap().is_some(),
                "A{n} mesh middle for [{lo},{hi}]"
            );
        }
    }
    println!(
        "acceptance 2 (almost split / AR quiver of kA2, kA3, kA4): PASS in {:.1?}",
        start.elapsed()
    );
}

/// All morphisms between indecomposables of kA2 up to scalar: the zero
/// morphism for every ordered pair plus one generator of each nonzero
/// Hom space (they are at most one-dimensional).
fn a2_test_morphisms(alg: &Arc<BoundQuiverAlgebra>) -> Vec<RepMorphism> {
    let indecs = all_intervals(alg);
    let mut out = Vec::new();
    for (_, _, x) in &indecs {
        for (_, _, y) in &indecs {
            out.push(RepMorphism::zero(x.clone(), y.clone()));
            let basis = hom_basis(x, y).unwrap();
            assert!(basis.len() <= 1, "Hom spaces of kA2 indecomposables are thin");
            out.extend(basis);
        }
    }
    out
}

#[test]
fn criterion_3_decision_oracle_consistency() {
    let start = Instant::now();
    let alg = linear_quiver(2, 5);
    let family = enumerate_test_modules(&alg, &[2, 2], 1 << 20).unwrap();
    assert_eq!(family.len(), 14, "iso classes of kA2 modules with dims <= (2,2)");
    let indecs = all_intervals(&alg);
    for a in a2_test_morphisms(&alg) {
        for (_, _, c) in &indecs {
            let verdict = is_right_determined(&a, c).unwrap();
            let refutation = refute_determination(&a, c, &family, 10_000).unwrap();
            if verdict {
                assert!(
                    refutation.is_none(),
                    "oracle contradicts a positive determination verdict"
                );
            } else {
                let w = refutation.expect("every negative verdict needs a witness");
                // the witness satisfies the composite condition but does not factor
                let wi = image_hom(c, &w).unwrap();
                let ai = image_hom(c, &a).unwrap();
                assert!(ai.contains_submodule(&wi));
                assert!(factors_through(&w, &a).unwrap().is_none());
            }
        }
    }
    println!(
        "acceptance 3 (decision vs oracle on kA2, dims <= (2,2)): PASS in {:.1?}",
        start.elapsed()
    );
}

/// Seeded random morphisms over kA3/F_5 with dimension vectors bounded
/// by (2,2,2); skips nothing, zero morphisms included.
fn seeded_a3_morphisms(alg: &Arc<BoundQuiverAlgebra>, count: usize) -> Vec<RepMorphism> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xA3);
    let mut out = Vec::new();
    while out.len() < count {
        let xd: Vec<usize> = (0..3).map(|_| rng.gen_range(0..=2)).collect();
        let yd: Vec<usize> = (0..3).map(|_| rng.gen_range(0..=2)).collect();
        let x = random_representation(alg, &xd, rng.gen()).unwrap();
        let y = random_representation(alg, &yd, rng.gen()).unwrap();
        let hom = HomSpace::compute(&x, &y).unwrap();
        let coords: Vec<u64> = (0..hom.dim()).map(|_| rng.gen_range(0..5)).collect();
        out.push(hom.from_coords(&coords));
    }
    out
}

#[test]
fn criterion_4_minimal_determinator_suite() {
    let start = Instant::now();
    let alg = linear_quiver(3, 5);
    let indecs = all_intervals(&alg);
    let morphisms = seeded_a3_morphisms(&alg, 20);
    let mut rng = ChaCha8Rng::seed_from_u64(0xD0);
    for a in &morphisms {
        let min = minimal_determinator(a).unwrap();
        let min_refs: Vec<&Representation> = min.iter().collect();
        let min_rep = Representation::direct_sum(&alg, &min_refs);
        // pruning order invariance: three shuffled candidate orders
        let base = detmor::determined::dedup_indecomposables(&sufficient_determinator(a).unwrap())
            .unwrap();
        for _ in 0..3 {
            let mut shuffled = base.clone();
            for i in (1..shuffled.len()).rev() {
                let j = rng.gen_range(0..=i);
                shuffled.swap(i, j);
            }
            let other = minimal_determinator_from_candidates(a, shuffled).unwrap();
            assert_eq!(other.len(), min.len(), "pruning order changed the result size");
            for o in &other {
                assert!(
                    min.iter().any(|m| is_isomorphic(m, o).unwrap().is_some()),
                    "pruning order changed the result up to isomorphism"
                );
            }
        }
        // the minimal determinator characterises all determinators among
        // the indecomposables
        for (_, _, c) in &indecs {
            let lhs = is_right_determined(a, c).unwrap();
            let rhs = add_member(&min_rep, c).unwrap();
            assert_eq!(lhs, rhs, "pr-min equivalence failed");
        }
    }
    println!(
        "acceptance 4 (minimal determinators, 20 seeded kA3 morphisms): PASS in {:.1?}",
        start.elapsed()
    );
}

#[test]
fn criterion_5_safe_determinator_assertion() {
    let start = Instant::now();
    // the runtime assertion inside sufficient_determinator must hold on
    // every morphism exercised by suites 3 and 4
    let a2 = linear_quiver(2, 5);
    for a in a2_test_morphisms(&a2) {
        sufficient_determinator(&a).unwrap();
    }
    let a3 = linear_quiver(3, 5);
    for a in seeded_a3_morphisms(&a3, 20) {
        sufficient_determinator(&a).unwrap();
    }
    println!(
        "acceptance 5 (safe determinator certification never trips): PASS in {:.1?}",
        start.elapsed()
    );
}

#[test]
fn criterion_6_poset_suite() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x60);
    let mut checked = 0usize;
    for _ in 0..200 {
        let n = rng.gen_range(2..=6);
        let elements: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if rng.gen_bool(0.4) {
                    pairs.push((format!("e{i}"), format!("e{j}")));
                }
            }
        }
        // relations only go up the index order, so antisymmetry holds and
        // validation plus transitive closure must succeed
        let p = FinitePoset::new(elements, &pairs).unwrap();
        for x in 0..p.len() {
            for y in 0..p.len() {
                if !p.le(x, y) {
                    continue;
                }
                for c in 0..p.len() {
                    // object_determines internally compares the inf
                    // criterion with the exhaustive definition and errors
                    // on disagreement
                    p.object_determines(x, y, c).unwrap();
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 1000, "the random poset sweep must actually exercise triples");
    // ten-element chain: every morphism is determined, by the successor
    let chain = FinitePoset::chain(10);
    for x in 0..10 {
        for y in x..10 {
            if x == y {
                for c in 0..10 {
                    assert!(chain.object_determines(x, y, c).unwrap());
                }
            } else {
                for c in 0..10 {
                    assert_eq!(chain.object_determines(x, y, c).unwrap(), c == x + 1);
                }
            }
        }
    }
    println!(
        "acceptance 6 (poset criterion vs definition, {checked} triples + chain): PASS in {:.1?}",
        start.elapsed()
    );
}

/// A seeded random acyclic quiver (arrows only increase the vertex index)
/// over F_5, optionally with one monomial relation when a composable pair
/// of arrows exists.
fn seeded_quiver(seed: u64, with_relation: bool) -> Arc<BoundQuiverAlgebra> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=4);
    let vertices: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let mut arrows = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            if rng.gen_bool(0.6) {
                arrows.push((format!("x{i}_{j}"), format!("v{i}"), format!("v{j}")));
            }
        }
    }
    if arrows.is_empty() {
        arrows.push(("x1_2".to_string(), "v1".to_string(), "v2".to_string()));
    }
    let mut relations: Vec<Vec<String>> = Vec::new();
    if with_relation {
        'outer: for (n1, _, t1) in &arrows {
            for (n2, s2, _) in &arrows {
                if t1 == s2 {
                    relations.push(vec![n1.clone(), n2.clone()]);
                    break 'outer;
                }
            }
        }
    }
    let q = Quiver::new(vertices, arrows.clone()).unwrap();
    BoundQuiverAlgebra::new(PrimeField::new(5).unwrap(), q, relations).unwrap()
}

#[test]
fn criterion_7_structural_identities() {
    let start = Instant::now();
    for seed in 0..10u64 {
        let alg = seeded_quiver(seed, seed >= 5);
        let nv = alg.quiver().vertex_count();
        for v in 0..nv {
            // the Nakayama correspondence on objects, via the duality route
            let via_duality = injective_via_duality(&alg, v).unwrap();
            let direct = indec_injective(&alg, v);
            assert!(is_isomorphic(&via_duality, &direct).unwrap().is_some());
            // translates kill projectives
            assert!(tau(&indec_projective(&alg, v)).unwrap().is_zero());
        }
    }
    // double duality and right-minimalization post-condition on seeded data
    let mut rng = ChaCha8Rng::seed_from_u64(0x77);
    let mut minimalized = 0usize;
    while minimalized < 50 {
        let alg = seeded_quiver(rng.gen_range(0..5), false);
        let nv = alg.quiver().vertex_count();
        let xd: Vec<usize> = (0..nv).map(|_| rng.gen_range(0..=2)).collect();
        let yd: Vec<usize> = (0..nv).map(|_| rng.gen_range(0..=2)).collect();
        let x = random_representation(&alg, &xd, rng.gen()).unwrap();
        let y = random_representation(&alg, &yd, rng.gen()).unwrap();
        // D(D(M)) is M again
        let dd = dualize(&dualize(&x).unwrap()).unwrap().rehome(&alg);
        assert!(is_isomorphic(&x, &dd).unwrap().is_some());
        let hom = HomSpace::compute(&x, &y).unwrap();
        let coords: Vec<u64> = (0..hom.dim()).map(|_| rng.gen_range(0..5)).collect();
        let f = hom.from_coords(&coords);
        let rm = right_minimalize(&f).unwrap();
        // the annihilator of the minimal part sits inside rad End
        let (ann, _) = hom_annihilator(&rm.minimal).unwrap();
        let (end, _) = end_algebra(rm.minimal.source()).unwrap();
        let rad = end.radical().unwrap();
        assert!(CanonicalBasis::from_span(&rad).contains_subspace(&ann));
        // and the split-off part is genuinely dead
        assert!(f.compose(&rm.embed_dead).is_zero());
        minimalized += 1;
    }
    println!(
        "acceptance 7 (structural identities on seeded quivers): PASS in {:.1?}",
        start.elapsed()
    );
}

#[test]
fn criterion_8_auslander_claim_experiment() {
    let start = Instant::now();
    let a2 = linear_quiver(2, 5);
    let mut agreements = 0usize;
    let mut total = 0usize;
    for a in a2_test_morphisms(&a2) {
        let report = check_auslander_claim(&a).unwrap();
        total += 1;
        if report.claim_sufficient {
            agreements += 1;
        }
        // internal consistency: the claim summands and minimal summands
        // both determine the morphism when sufficiency is reported
        if report.claim_sufficient {
            let refs: Vec<&Representation> = report.claim_summands.iter().collect();
            let claim_rep = Representation::direct_sum(&a2, &refs);
            assert!(is_right_determined(&a, &claim_rep).unwrap());
        }
    }
    let a3 = linear_quiver(3, 5);
    for a in seeded_a3_morphisms(&a3, 20) {
        let report = check_auslander_claim(&a).unwrap();
        total += 1;
        if report.claim_sufficient {
            agreements += 1;
        }
    }
    println!(
        "acceptance 8 (claim experiment, {agreements}/{total} agree, no truth asserted): PASS in {:.1?}",
        start.elapsed()
    );
}

/// The projective cover of a simple is right minimal and the kernel
/// embeds: a smoke check that the suite's independent interval oracle
/// agrees with the library's own projectives.
#[test]
fn interval_oracle_matches_library_projectives() {
    for n in [2usize, 3, 4] {
        let alg = linear_quiver(n, 5);
        for v in 0..n {
            let p = indec_projective(&alg, v);
            let expected = interval(&alg, v + 1, n);
            assert!(is_isomorphic(&p, &expected).unwrap().is_some());
            let i = indec_injective(&alg, v);
            let expected = interval(&alg, 1, v + 1);
            assert!(is_isomorphic(&i, &expected).unwrap().is_some());
            let cover = projective_cover(&Representation::simple(&alg, v));
            let (ker, _) = kernel(&cover.map);
            if v + 1 < n {
                assert!(!ker.is_zero());
            }
        }
    }
}
