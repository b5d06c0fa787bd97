//! Cross-module verification: the explicit map families checked end to
//! end against the degree machinery.

use caylab::constructions::{
    g2_candidate, g2_projection_spec, rank_one_candidate, sln_full_candidate,
    sln_projection_spec,
};
use caylab::engine::{
    brute_force_degree, product_map, projection_degree, IsogenySpec, MapCandidate,
    DEFAULT_BRUTE_CAP, DEFAULT_FIBER_THRESHOLD, DEFAULT_SAMPLES,
};
use caylab::field::{find_prime_with_root, Field, SampleStream};
use caylab::weyl::BuiltinPair;

fn q() -> Field {
    Field::Rationals
}

#[test]
fn sln_candidates_verify_and_project_to_expected_degree() {
    for n in 3..=6usize {
        let p = find_prime_with_root(n as u64, 211).unwrap();
        let candidate = sln_full_candidate(n, p, 1).unwrap();
        assert!(
            candidate.check_target_containment().unwrap(),
            "containment at n = {n}"
        );
        let mut stream = SampleStream::new(0);
        let eq = candidate
            .check_equivariance(candidate.pair().generators(), &mut stream)
            .unwrap();
        assert!(eq.all_pass(), "equivariance at n = {n}");
        assert!(
            candidate.check_dominance(p, 8, &mut stream).unwrap(),
            "dominance at n = {n}"
        );
        let spec = sln_projection_spec(n, p, 1).unwrap();
        let report = projection_degree(&spec, p, DEFAULT_SAMPLES, &mut stream).unwrap();
        assert_eq!(report.degree, n - 2, "degree at n = {n}");
    }
}

#[test]
fn projection_samples_are_stable_on_builtin_specs() {
    // all line samples agree at the default sample count
    for n in 3..=6usize {
        let p = find_prime_with_root(n as u64, 211).unwrap();
        let spec = sln_projection_spec(n, p, 1).unwrap();
        let mut stream = SampleStream::new(0);
        let report = projection_degree(&spec, p, DEFAULT_SAMPLES, &mut stream).unwrap();
        assert_eq!(report.unanimous, Some(true), "sl({n}) spec");
    }
    let spec = g2_projection_spec(q()).unwrap();
    let mut stream = SampleStream::new(0);
    let report = projection_degree(&spec, 1009, DEFAULT_SAMPLES, &mut stream).unwrap();
    assert_eq!(report.unanimous, Some(true), "rank-2 spec");
    assert_eq!(report.degree, 2);
}

#[test]
fn generator_equivariance_extends_to_the_full_closure() {
    // exhaustive check for every closure element on the small groups
    let sl3 = sln_full_candidate(3, 211, 1).unwrap();
    let sl4 = sln_full_candidate(4, 229, 1).unwrap();
    let g2 = g2_candidate(q()).unwrap();
    for (name, candidate, order) in [
        ("sl3", &sl3, 6usize),
        ("sl4", &sl4, 24),
        ("g2", &g2, 12),
    ] {
        let closure = candidate.pair().closure(100).unwrap();
        assert_eq!(closure.order(), order, "{name} closure order");
        let mut stream = SampleStream::new(0);
        let report = candidate
            .check_equivariance(closure.elements(), &mut stream)
            .unwrap();
        assert!(report.all_pass(), "{name} full-closure equivariance");
    }
}

#[test]
fn brute_force_agrees_with_structural_projection() {
    // degree 1 for the birational n = 3 map
    let sl3 = sln_full_candidate(3, 211, 1).unwrap();
    let brute = brute_force_degree(&sl3, 211, DEFAULT_BRUTE_CAP, DEFAULT_FIBER_THRESHOLD).unwrap();
    let spec = sln_projection_spec(3, 211, 1).unwrap();
    let mut stream = SampleStream::new(0);
    let structural = projection_degree(&spec, 211, DEFAULT_SAMPLES, &mut stream).unwrap();
    assert_eq!(brute.degree, structural.degree);
    assert_eq!(brute.degree, 1);

    // degree 2 for the rank-2 candidate, at a small prime for speed
    let g2 = g2_candidate(q()).unwrap();
    let brute = brute_force_degree(&g2, 211, DEFAULT_BRUTE_CAP, DEFAULT_FIBER_THRESHOLD).unwrap();
    let spec = g2_projection_spec(q()).unwrap();
    let structural = projection_degree(&spec, 211, DEFAULT_SAMPLES, &mut stream).unwrap();
    assert_eq!(brute.degree, structural.degree);
    assert_eq!(brute.degree, 2);
}

#[test]
fn histograms_are_invariant_under_weyl_translation() {
    // precomposing with a group element relabels the fibers only
    let g2 = g2_candidate(q()).unwrap();
    let base = brute_force_degree(&g2, 211, DEFAULT_BRUTE_CAP, DEFAULT_FIBER_THRESHOLD).unwrap();
    let closure = g2.pair().closure(100).unwrap();
    for g in [&closure.elements()[1], &closure.elements()[5]] {
        let translated = MapCandidate::new(
            g2.pair().clone(),
            g.act_on_torus(g2.components()).unwrap(),
        )
        .unwrap();
        let moved =
            brute_force_degree(&translated, 211, DEFAULT_BRUTE_CAP, DEFAULT_FIBER_THRESHOLD)
                .unwrap();
        assert_eq!(moved.histogram, base.histogram);
        assert_eq!(moved.samples, base.samples);
    }
}

#[test]
fn isogeny_composition_multiplies_degree() {
    // rank 1: squaring doubles the degree
    let base = rank_one_candidate(&BuiltinPair::Sl2, q()).unwrap();
    let squared = base
        .compose_with_isogeny(&IsogenySpec::new(vec![vec![2]]).unwrap())
        .unwrap();
    let d0 = brute_force_degree(&base, 101, DEFAULT_BRUTE_CAP, DEFAULT_FIBER_THRESHOLD)
        .unwrap()
        .degree;
    let d2 = brute_force_degree(&squared, 101, DEFAULT_BRUTE_CAP, DEFAULT_FIBER_THRESHOLD)
        .unwrap()
        .degree;
    assert_eq!(d0, 1);
    assert_eq!(d2, 2);

    // rank 2: block diag(2, 2) has kernel order 4
    let pgl2 = rank_one_candidate(&BuiltinPair::Pgl2, q()).unwrap();
    let prod = product_map(&base, &pgl2).unwrap();
    let iso = IsogenySpec::new(vec![vec![2, 0], vec![0, 2]]).unwrap();
    assert_eq!(iso.kernel_order(), 4);
    let composed = prod.compose_with_isogeny(&iso).unwrap();
    let d4 = brute_force_degree(&composed, 101, DEFAULT_BRUTE_CAP, DEFAULT_FIBER_THRESHOLD)
        .unwrap()
        .degree;
    assert_eq!(d4, 4);
}

#[test]
fn product_degree_is_multiplicative() {
    let sl2 = rank_one_candidate(&BuiltinPair::Sl2, q()).unwrap();
    let pgl2 = rank_one_candidate(&BuiltinPair::Pgl2, q()).unwrap();
    let squared = sl2
        .compose_with_isogeny(&IsogenySpec::new(vec![vec![2]]).unwrap())
        .unwrap();
    let degree = |c: &MapCandidate| {
        brute_force_degree(c, 101, DEFAULT_BRUTE_CAP, DEFAULT_FIBER_THRESHOLD)
            .unwrap()
            .degree
    };
    let cases = [
        (product_map(&sl2, &pgl2).unwrap(), 1usize),
        (product_map(&squared, &pgl2).unwrap(), 2),
        (product_map(&squared, &squared).unwrap(), 4),
    ];
    for (i, (prod, expected)) in cases.iter().enumerate() {
        assert_eq!(degree(prod), *expected, "product case {i}");
    }
}

#[test]
fn degree_set_over_all_roots_is_a_singleton() {
    // every admissible center choice gives the same structural degree
    for n in [3usize, 4, 5] {
        let p = find_prime_with_root(n as u64, 211).unwrap();
        let mut degrees = std::collections::BTreeSet::new();
        for zeta_index in 1..n {
            let spec = sln_projection_spec(n, p, zeta_index).unwrap();
            let mut stream = SampleStream::new(0);
            let report = projection_degree(&spec, p, DEFAULT_SAMPLES, &mut stream).unwrap();
            degrees.insert(report.degree);
        }
        assert_eq!(degrees.len(), 1, "n = {n}");
        assert!(degrees.contains(&(n - 2)), "n = {n}");
    }
}
