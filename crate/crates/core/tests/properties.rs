//! Property tests over randomly generated small complexes.

mod common;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use proptest::prelude::*;
use simplicial_ubc::complex::{Face, SimplicialComplex, Vertex};
use simplicial_ubc::homology::betti_numbers;
use simplicial_ubc::linalg::IntMatrix;
use simplicial_ubc::vectors::{
    f_from_h, f_from_short_h, h_from_f, short_h_from_f, short_h_from_links, FVector,
};

const MAX_VERTEX: u32 = 7;

fn face_strategy(max_size: usize) -> impl Strategy<Value = Vec<Vertex>> {
    prop::collection::btree_set(0..MAX_VERTEX, 1..=max_size).prop_map(|s| s.into_iter().collect())
}

fn complex_strategy() -> impl Strategy<Value = SimplicialComplex> {
    prop::collection::vec(face_strategy(4), 1..7)
        .prop_map(|faces| SimplicialComplex::from_faces(faces).unwrap())
}

/// Pure complexes: every generating face has the same size.
fn pure_complex_strategy() -> impl Strategy<Value = SimplicialComplex> {
    (1usize..=4).prop_flat_map(|size| {
        prop::collection::vec(
            prop::collection::btree_set(0..MAX_VERTEX, size)
                .prop_map(|s| s.into_iter().collect::<Vec<_>>()),
            1..7,
        )
        .prop_map(|faces| SimplicialComplex::from_faces(faces).unwrap())
    })
}

fn all_vertex_subsets(c: &SimplicialComplex) -> Vec<Face> {
    let vs = c.vertices();
    (0u32..(1 << vs.len()))
        .map(|mask| {
            Face::new(
                vs.iter()
                    .enumerate()
                    .filter(|&(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect(),
            )
            .unwrap()
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn h_round_trip(c in complex_strategy()) {
        let f = FVector::of(&c);
        prop_assert_eq!(f_from_h(&h_from_f(&f)).unwrap(), f);
    }

    #[test]
    fn short_h_round_trip(c in complex_strategy()) {
        let f = FVector::of(&c);
        prop_assert_eq!(f_from_short_h(&short_h_from_f(&f)).unwrap(), f);
    }

    #[test]
    fn short_h_definition_matches_formula(c in pure_complex_strategy()) {
        prop_assert_eq!(short_h_from_links(&c).unwrap(), short_h_from_f(&FVector::of(&c)));
    }

    #[test]
    fn vertex_link_face_counts(c in complex_strategy()) {
        let counts = c.face_counts();
        for j in 0..=c.dim() {
            let total: usize = c
                .vertices()
                .iter()
                .map(|&v| c.vertex_link(v).unwrap().faces(j - 1).len())
                .sum();
            prop_assert_eq!(total, (j as usize + 1) * counts[j as usize + 1]);
        }
    }

    #[test]
    fn link_membership(c in complex_strategy()) {
        let subsets = all_vertex_subsets(&c);
        for face in c.all_faces() {
            let link = c.link(face).unwrap();
            for g in &subsets {
                let expected = g.is_disjoint(face) && c.contains_face(&g.union(face));
                prop_assert_eq!(link.contains_face(g), expected, "F = {}, G = {}", face, g);
            }
        }
    }

    #[test]
    fn skeleton_keeps_low_faces(c in complex_strategy()) {
        for j in -1..=c.dim() {
            let s = c.skeleton(j).unwrap();
            prop_assert!(s.dim() <= j);
            for i in -1..=j {
                prop_assert_eq!(s.faces(i), c.faces(i));
            }
        }
        prop_assert_eq!(c.skeleton(c.dim()).unwrap(), c.clone());
    }

    #[test]
    fn euler_characteristics(c in complex_strategy()) {
        prop_assert_eq!(c.chi_partial(c.dim()).unwrap(), c.euler_characteristic());
        let betti = betti_numbers(&c);
        prop_assert_eq!(betti.reduced_euler_characteristic(), c.euler_characteristic() - 1);
    }

    #[test]
    fn cones_are_acyclic(c in complex_strategy()) {
        let betti = betti_numbers(&c.cone());
        prop_assert!(betti.entries().iter().all(|&b| b == 0), "{}", betti);
    }

    #[test]
    fn homology_ignores_labels(c in complex_strategy(), perm in Just((0..MAX_VERTEX).collect::<Vec<_>>()).prop_shuffle(), offset in 0u32..100) {
        let relabeled = c.relabel(|v| perm[v as usize] * 3 + offset).unwrap();
        prop_assert_eq!(betti_numbers(&relabeled), betti_numbers(&c));
        prop_assert_eq!(relabeled.face_counts(), c.face_counts());
    }

    #[test]
    fn bareiss_rank_matches_rational_rank(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 0..6)) {
        let cols = 5;
        let m = if rows.is_empty() { IntMatrix::zeros(0, cols) } else { IntMatrix::from_rows(&rows) };
        prop_assert_eq!(m.rank(), common::rational_rank(&rows));
    }

    #[test]
    fn canonical_form_is_order_free(faces in prop::collection::vec(face_strategy(4), 1..7)) {
        let mut reversed = faces.clone();
        reversed.reverse();
        let a = SimplicialComplex::from_faces(faces).unwrap();
        let b = SimplicialComplex::from_faces(reversed).unwrap();
        // no facet contains another
        for f in a.facets() {
            for g in a.facets() {
                prop_assert!(f == g || !f.is_subset_of(g));
            }
        }
        let vertex_set: BTreeSet<Vertex> = a.facets().iter().flat_map(|f| f.vertices().to_vec()).collect();
        prop_assert_eq!(vertex_set.into_iter().collect::<Vec<_>>(), a.vertices().to_vec());
        prop_assert_eq!(a, b);
    }
}

#[test]
fn pascal_oracle_agrees_with_binomial() {
    for n in 0..15 {
        for k in 0..=n + 1 {
            assert_eq!(
                simplicial_ubc::vectors::binomial(n as i64, k as i64),
                common::pascal(n, k),
                "C({n}, {k})"
            );
        }
    }
    assert_eq!(simplicial_ubc::vectors::binomial(3, 5), BigInt::from(0));
}
