//! Statements checked across the whole built-in corpus and the cyclic family.

mod common;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use simplicial_ubc::corpus::{generate, standard_corpus, NamedComplexSpec};
use simplicial_ubc::cyclic::{cyclic_h, gale_facets, neighborliness, CyclicSpec};
use simplicial_ubc::homology::{betti_numbers, classify, is_homology_sphere, Flag};
use simplicial_ubc::vectors::{
    h_from_f, h_via_short_h, lower_bound_coeff, reconstruction_coeff, short_h_coefficient,
    short_h_from_f, short_h_from_links, FVector, Rational,
};
use simplicial_ubc::verifier::{
    check_lemma_hh, check_lower_bounds, check_ubc_hypotheses, verify_ubc, HypothesisMode, Outcome,
};
use simplicial_ubc::SimplicialComplex;

fn corpus() -> Vec<(String, SimplicialComplex)> {
    standard_corpus().unwrap()
}

fn cyclic(d: usize, n: usize) -> SimplicialComplex {
    gale_facets(CyclicSpec::new(d, n).unwrap())
}

#[test]
fn corpus_spans_dimensions() {
    let dims: std::collections::BTreeSet<i32> = corpus().iter().map(|(_, c)| c.dim()).collect();
    for d in 1..=4 {
        assert!(dims.contains(&d), "missing dimension {d}");
    }
    assert!(corpus().iter().all(|(_, c)| c.is_pure()));
}

#[test]
fn eulerian_implies_palindromic_h() {
    for (name, c) in corpus() {
        let report = classify(&c);
        if report.eulerian.holds() {
            assert!(h_from_f(&FVector::of(&c)).is_palindromic(), "{name}");
        }
    }
}

#[test]
fn odd_dimensional_manifolds_and_semi_eulerian_complexes_are_eulerian() {
    let mut manifolds = 0;
    let mut semi = 0;
    for (name, c) in corpus() {
        if c.dim() % 2 == 0 {
            continue;
        }
        let report = classify(&c);
        if report.homology_manifold.holds() && c.dim() <= 3 {
            manifolds += 1;
            assert!(report.eulerian.holds(), "{name}");
        }
        if report.semi_eulerian.holds() {
            semi += 1;
            assert!(
                report.eulerian.holds(),
                "{name}: semi-Eulerian but not Eulerian"
            );
        }
    }
    assert!(manifolds >= 5 && semi >= 5);
}

#[test]
fn false_flags_carry_witnesses() {
    for (name, c) in corpus() {
        let r = classify(&c);
        for v in [
            &r.eulerian,
            &r.semi_eulerian,
            &r.homology_sphere,
            &r.homology_manifold,
            &r.orientable,
            &r.pseudomanifold,
            &r.oriented_pseudomanifold,
            &r.cohen_macaulay,
            &r.buchsbaum,
        ] {
            if v.flag == Flag::False {
                assert!(v.witness.is_some(), "{name}");
            }
        }
    }
}

#[test]
fn cones_over_corpus_are_acyclic() {
    for (name, c) in corpus() {
        let b = betti_numbers(&c.cone());
        assert!(b.entries().iter().all(|&x| x == 0), "{name}: {b}");
    }
}

#[test]
fn gale_complexes_match_the_hull_oracle() {
    for (d, n) in [(2, 5), (3, 5), (3, 6), (4, 6), (4, 7), (5, 7)] {
        let gale: Vec<Vec<u32>> = cyclic(d, n)
            .facets()
            .iter()
            .map(|f| f.vertices().to_vec())
            .collect();
        assert_eq!(gale, common::moment_curve_hull_facets(d, n), "C_{d}({n})");
    }
}

#[test]
fn cyclic_family_properties() {
    for d in 2..=6 {
        for n in d + 1..=10 {
            let c = cyclic(d, n);
            assert!(c.is_pure());
            assert_eq!(c.dim(), d as i32 - 1);
            assert_eq!(c.num_vertices(), n);
            if n >= d + 2 {
                assert_eq!(neighborliness(&c), d / 2, "C_{d}({n})");
            }
        }
    }
    for (d, n) in [(2, 6), (3, 6), (4, 7), (4, 8), (5, 8), (6, 9)] {
        let r = classify(&cyclic(d, n));
        assert!(
            r.homology_sphere.holds() && r.eulerian.holds(),
            "C_{d}({n})"
        );
    }
}

#[test]
fn vertex_links_of_even_cyclic_polytopes() {
    // h̃_i(C_{2k+2}(n)) = n · h_i(C_{2k+1}(n-1)) for 0 <= i <= k+1
    assert_eq!(
        short_h_from_links(&cyclic(4, 7)).unwrap().get(2),
        &BigInt::from(21)
    );
    for k in 1..=2 {
        let d = 2 * k + 2;
        for n in d + 1..=10 {
            let sh = short_h_from_links(&cyclic(d, n)).unwrap();
            let link_spec = CyclicSpec::new(2 * k + 1, n - 1).unwrap();
            for i in 0..=k + 1 {
                assert_eq!(
                    sh.get(i),
                    &(BigInt::from(n) * cyclic_h(link_spec, i).unwrap()),
                    "k = {k}, n = {n}, i = {i}"
                );
            }
        }
    }
}

#[test]
fn ubc_soundness_sweep() {
    let mut met = 0;
    for (name, c) in corpus() {
        if c.dim() < 3 || c.dim() % 2 == 0 || c.num_vertices() <= c.dim() as usize + 1 {
            continue;
        }
        let k = (c.dim() as usize - 1) / 2;
        let report = verify_ubc(&c).unwrap();
        if !report.hypotheses_met() {
            continue;
        }
        met += 1;
        assert_eq!(
            report.overall,
            Outcome::Pass,
            "{name}:\n{}",
            report.to_json()
        );
        // every h̃ inequality of the proof holds
        assert!(report
            .conclusion
            .iter()
            .filter(|c| c.instance.starts_with("h~"))
            .all(|c| c.holds));
        for &v in c.vertices() {
            let lemma = check_lemma_hh(&c.vertex_link(v).unwrap(), k).unwrap();
            assert_eq!(lemma.overall, Outcome::Pass, "{name}, link of {v}");
        }
    }
    assert!(met >= 5, "only {met} corpus complexes met the hypotheses");
}

#[test]
fn corollary_hypotheses_imply_theorem_hypotheses() {
    for (name, c) in corpus() {
        if c.dim() < 3 || c.dim() % 2 == 0 {
            continue;
        }
        let cor = check_ubc_hypotheses(&c, HypothesisMode::Corollary).unwrap();
        if cor.iter().all(|h| h.status == Flag::True) {
            let thm = check_ubc_hypotheses(&c, HypothesisMode::Theorem).unwrap();
            assert!(thm.iter().all(|h| h.status == Flag::True), "{name}");
        }
    }
}

#[test]
fn lower_bounds_for_buchsbaum_corpus() {
    let mut seen = 0;
    for (name, c) in corpus() {
        let r = check_lower_bounds(&c).unwrap();
        if r.hypotheses_met() {
            seen += 1;
            assert_eq!(r.overall, Outcome::Pass, "{name}");
        }
    }
    assert!(seen >= 10);
}

#[test]
fn short_h_expression_reproduces_h() {
    for (name, c) in corpus() {
        let dim = c.dim();
        if dim < 1 || dim % 2 == 0 {
            continue;
        }
        let k = (dim as usize - 1) / 2;
        let f = FVector::of(&c);
        let h = h_from_f(&f);
        let sh = short_h_from_f(&f);
        for r in 0..=2 * k + 2 {
            let via = h_via_short_h(&sh, k, r).unwrap();
            assert_eq!(
                via,
                Rational::from_integer(h.get(r).clone()),
                "{name}, r = {r}"
            );
        }
    }
}

#[test]
fn coefficient_signs() {
    for k in 0..=4 {
        for r in 1..=2 * k + 2 {
            for i in 0..r {
                let c = short_h_coefficient(k, r, i).unwrap();
                if !c.is_zero() {
                    let expected_positive = (r - i - 1) % 2 == 0;
                    assert_eq!(
                        c.is_positive(),
                        expected_positive,
                        "k = {k}, r = {r}, i = {i}"
                    );
                }
            }
        }
    }
    for d in 1..=12 {
        for j in 0..d {
            for i in 0..=j {
                assert!(!reconstruction_coeff(d, i, j).is_negative());
            }
        }
    }
}

#[test]
fn lower_bound_coefficient_chain() {
    for d in 1..=12usize {
        let top = (d - 1) / 2;
        for i in 0..=top {
            for l in 0..=i {
                assert!(!lower_bound_coeff(d, i, l).unwrap().is_negative());
                // (1/(j+1)) C(d-1-l, d-1-j) is non-increasing as j runs from i down to l
                let term = |j: usize| {
                    Rational::new(common::pascal(d - 1 - l, d - 1 - j), BigInt::from(j + 1))
                };
                for j in (l + 1..=i).rev() {
                    assert!(term(j) >= term(j - 1), "d = {d}, i = {i}, l = {l}, j = {j}");
                }
            }
        }
    }
}

#[test]
fn generated_spheres_are_spheres() {
    for spec in [
        "icosahedron",
        "join boundary-simplex 2 boundary-simplex 2",
        "suspension suspension boundary-simplex 3",
        "cross-polytope 5",
    ] {
        let c = generate(&NamedComplexSpec::parse(spec).unwrap()).unwrap();
        assert!(is_homology_sphere(&c).holds(), "{spec}");
    }
}
