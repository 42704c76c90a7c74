//! Reduced rational homology and the link-based classifiers.
//!
//! Betti numbers come from the augmented boundary matrices (the empty face
//! spans chain level -1), so every number produced here is a *reduced* Betti
//! number over ℚ. Ranks are exact, see [`crate::linalg`].
//!
//! Classifiers scan faces from the highest dimension down, lexicographically
//! within a dimension, and the empty face last; the first failing face is the
//! witness. Link computations are independent and run on the rayon pool, but
//! the scan order never depends on scheduling.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// `β̃_{-1}, β̃_0, …, β̃_{dim}` over ℚ.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct BettiVector(Vec<usize>);

impl BettiVector {
    /// `β̃_i`; zero outside the stored range.
    pub fn get(&self, i: i32) -> usize {
        usize::try_from(i + 1)
            .ok()
            .and_then(|idx| self.0.get(idx).copied())
            .unwrap_or(0)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// Highest stored index, i.e. the dimension of the complex.
    pub fn top(&self) -> i32 {
        self.0.len() as i32 - 2
    }

    /// `Σ (-1)^i β̃_i` over `i >= -1`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(idx, &b)| if idx % 2 == 1 { b as i64 } else { -(b as i64) })
            .sum()
    }

    /// Reduced homology of the `m`-sphere (`m = -1` is `{∅}`).
    pub fn is_sphere(&self, m: i32) -> bool {
        (-1..=self.top().max(m)).all(|i| self.get(i) == usize::from(i == m))
    }

    /// `β̃_i = 0` for every `i < below`.
    pub fn vanishes_below(&self, below: i32) -> bool {
        (-1..below).all(|i| self.get(i) == 0)
    }

    /// Unreduced `β_i`.
    pub fn unreduced(&self, i: i32) -> usize {
        self.get(i) + usize::from(i == 0)
    }
}

impl fmt::Display for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, b) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str(")")
    }
}

/// Reduced rational Betti numbers `β̃_i = nullity(∂_i) - rank(∂_{i+1})`.
///
/// # Panics
///
/// If the Euler–Poincaré identity `Σ(-1)^i β̃_i = χ - 1` fails, which would
/// mean a rank computation is wrong.
pub fn betti_numbers(complex: &SimplicialComplex) -> BettiVector {
    let levels = complex.faces_by_dim();
    // ranks[k] = rank of the boundary map from level k to level k-1
    let mut ranks: Vec<usize> = (0..levels.len())
        .into_par_iter()
        .map(|k| {
            if k == 0 {
                0
            } else {
                boundary_matrix(&levels[k - 1], &levels[k]).rank()
            }
        })
        .collect();
    ranks.push(0);
    let betti: Vec<usize> = (0..levels.len())
        .map(|k| levels[k].len() - ranks[k] - ranks[k + 1])
        .collect();
    let betti = BettiVector(betti);
    assert_eq!(
        betti.reduced_euler_characteristic(),
        complex.euler_characteristic() - 1,
        "Euler-Poincare identity violated for Betti numbers {betti}"
    );
    betti
}

/// Rows: `lower` faces, columns: `upper` faces; the entry for `σ` minus its
/// `p`-th vertex is `(-1)^p`. Both slices must be sorted.
fn boundary_matrix(lower: &[Face], upper: &[Face]) -> IntMatrix {
    let mut m = IntMatrix::zeros(lower.len(), upper.len());
    for (col, sigma) in upper.iter().enumerate() {
        for (p, tau) in sigma.boundary().enumerate() {
            let row = lower
                .binary_search(&tau)
                .expect("boundary of a face is a face");
            m.set(row, col, if p % 2 == 0 { 1 } else { -1 });
        }
    }
    m
}

/// Tri-state outcome of a classifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Flag {
    #[serde(rename = "true")]
    True,
    #[serde(rename = "false")]
    False,
    #[serde(rename = "n/a")]
    NotApplicable,
}

impl Flag {
    pub fn is_true(self) -> bool {
        self == Flag::True
    }
}

impl From<bool> for Flag {
    fn from(b: bool) -> Self {
        if b {
            Flag::True
        } else {
            Flag::False
        }
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flag::True => "true",
            Flag::False => "false",
            Flag::NotApplicable => "n/a",
        })
    }
}

/// The face at which a condition failed, and why.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    #[serde(serialize_with = "serialize_face")]
    pub face: Option<Face>,
    pub reason: String,
}

fn serialize_face<S: serde::Serializer>(face: &Option<Face>, s: S) -> Result<S::Ok, S::Error> {
    match face {
        Some(f) => s.collect_seq(f.vertices()),
        None => s.serialize_none(),
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.face {
            Some(face) => write!(f, "at {face}: {}", self.reason),
            None => f.write_str(&self.reason),
        }
    }
}

/// A flag plus a witness whenever the flag is false.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub flag: Flag,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn yes() -> Self {
        Verdict {
            flag: Flag::True,
            witness: None,
        }
    }

    pub fn no(face: Option<Face>, reason: impl Into<String>) -> Self {
        Verdict {
            flag: Flag::False,
            witness: Some(Witness {
                face,
                reason: reason.into(),
            }),
        }
    }

    pub fn not_applicable(reason: impl Into<String>) -> Self {
        Verdict {
            flag: Flag::NotApplicable,
            witness: Some(Witness {
                face: None,
                reason: reason.into(),
            }),
        }
    }

    pub fn holds(&self) -> bool {
        self.flag.is_true()
    }
}

/// Homology data of the link of one face.
#[derive(Debug, Clone)]
pub struct LinkProfile {
    pub face: Face,
    pub link_dim: i32,
    pub chi: i64,
    pub betti: BettiVector,
}

/// Link data for every face, in classifier scan order (descending dimension,
/// lexicographic, empty face last).
pub fn link_profiles(complex: &SimplicialComplex) -> Vec<LinkProfile> {
    let faces: Vec<&Face> = complex.faces_by_dim().iter().rev().flatten().collect();
    faces
        .into_par_iter()
        .map(|face| {
            let link = complex.link(face).expect("enumerated face");
            LinkProfile {
                face: face.clone(),
                link_dim: link.dim(),
                chi: link.euler_characteristic(),
                betti: betti_numbers(&link),
            }
        })
        .collect()
}

fn sphere_chi(dim: i32) -> i64 {
    if dim.rem_euclid(2) == 0 {
        2
    } else {
        0
    }
}

fn eulerian_scan(
    complex: &SimplicialComplex,
    profiles: &[LinkProfile],
    skip_empty: bool,
) -> Verdict {
    if !complex.is_pure() {
        return Verdict::not_applicable("complex is not pure");
    }
    for p in profiles {
        if skip_empty && p.face.is_empty() {
            continue;
        }
        let expected = sphere_chi(p.link_dim);
        if p.chi != expected {
            return Verdict::no(
                Some(p.face.clone()),
                format!(
                    "link has dimension {} and Euler characteristic {}, expected {}",
                    p.link_dim, p.chi, expected
                ),
            );
        }
    }
    Verdict::yes()
}

/// `χ(lk F) = 1 + (-1)^{dim lk F}` for every face, the empty face included.
pub fn is_eulerian(complex: &SimplicialComplex) -> Verdict {
    eulerian_scan(complex, &link_profiles(complex), false)
}

/// The Eulerian condition on nonempty faces only.
pub fn is_semi_eulerian(complex: &SimplicialComplex) -> Verdict {
    eulerian_scan(complex, &link_profiles(complex), true)
}

/// Outcome of the homology-manifold test, with orientability over ℚ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ManifoldVerdict {
    pub manifold: Verdict,
    pub orientable: Verdict,
}

fn orientability(complex: &SimplicialComplex, betti: &BettiVector) -> Verdict {
    let dim = complex.dim();
    let components = complex.components().len();
    let top = betti.unreduced(dim);
    if top == components {
        Verdict::yes()
    } else {
        Verdict::no(
            None,
            format!("top Betti number {top} differs from the {components} connected component(s)"),
        )
    }
}

fn manifold_scan(
    complex: &SimplicialComplex,
    profiles: &[LinkProfile],
    betti: &BettiVector,
) -> ManifoldVerdict {
    if !complex.is_pure() {
        return ManifoldVerdict {
            manifold: Verdict::not_applicable("complex is not pure"),
            orientable: Verdict::not_applicable("complex is not pure"),
        };
    }
    let dim = complex.dim();
    for p in profiles.iter().filter(|p| !p.face.is_empty()) {
        let m = dim - p.face.dim() - 1;
        if !p.betti.is_sphere(m) {
            return ManifoldVerdict {
                manifold: Verdict::no(
                    Some(p.face.clone()),
                    format!(
                        "link has reduced Betti numbers {}, not those of a {m}-sphere",
                        p.betti
                    ),
                ),
                orientable: Verdict::not_applicable("not a homology manifold"),
            };
        }
    }
    ManifoldVerdict {
        manifold: Verdict::yes(),
        orientable: orientability(complex, betti),
    }
}

/// Closed rational homology manifold test: every nonempty face `F` has a
/// link with the reduced homology of a `(dim - dim F - 1)`-sphere.
/// Orientable means the top Betti number equals the number of components.
pub fn is_homology_manifold(complex: &SimplicialComplex) -> ManifoldVerdict {
    manifold_scan(complex, &link_profiles(complex), &betti_numbers(complex))
}

fn sphere_scan(
    complex: &SimplicialComplex,
    manifold: &ManifoldVerdict,
    betti: &BettiVector,
) -> Verdict {
    if !complex.is_pure() {
        return Verdict::no(None, "complex is not pure");
    }
    if let Some(w) = manifold
        .manifold
        .witness
        .clone()
        .filter(|_| !manifold.manifold.holds())
    {
        return Verdict {
            flag: Flag::False,
            witness: Some(w),
        };
    }
    let dim = complex.dim();
    if !betti.is_sphere(dim) {
        return Verdict::no(
            Some(Face::empty()),
            format!("reduced Betti numbers {betti} are not those of a {dim}-sphere"),
        );
    }
    Verdict::yes()
}

/// Homology manifold with the reduced rational homology of a sphere.
pub fn is_homology_sphere(complex: &SimplicialComplex) -> Verdict {
    let betti = betti_numbers(complex);
    let manifold = manifold_scan(complex, &link_profiles(complex), &betti);
    sphere_scan(complex, &manifold, &betti)
}

/// Pure, every ridge in exactly two facets, and every connected component
/// strongly connected through ridges. Orientability as for manifolds.
pub fn is_pseudomanifold(complex: &SimplicialComplex) -> ManifoldVerdict {
    pseudomanifold_scan(complex, &betti_numbers(complex))
}

fn pseudomanifold_scan(complex: &SimplicialComplex, betti: &BettiVector) -> ManifoldVerdict {
    let na = |why: &str| ManifoldVerdict {
        manifold: Verdict::not_applicable(why),
        orientable: Verdict::not_applicable(why),
    };
    let not = |v: Verdict| ManifoldVerdict {
        manifold: v,
        orientable: Verdict::not_applicable("not a pseudomanifold"),
    };
    if !complex.is_pure() {
        return na("complex is not pure");
    }
    let dim = complex.dim();
    if dim < 0 {
        return na("the empty complex has no facets of positive size");
    }
    let facets = complex.facets();
    let mut parent: Vec<usize> = (0..facets.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let ridges = complex.faces(dim - 1);
    let mut cofaces: Vec<Vec<usize>> = vec![Vec::new(); ridges.len()];
    for (fi, facet) in facets.iter().enumerate() {
        for ridge in facet.boundary() {
            let r = ridges.binary_search(&ridge).expect("ridge is a face");
            cofaces[r].push(fi);
        }
    }
    for (ridge, incident) in ridges.iter().zip(&cofaces) {
        if incident.len() != 2 {
            return not(Verdict::no(
                Some(ridge.clone()),
                format!("ridge lies in {} facets, expected 2", incident.len()),
            ));
        }
        let (a, b) = (
            find(&mut parent, incident[0]),
            find(&mut parent, incident[1]),
        );
        parent[a] = b;
    }
    if dim >= 1 {
        let strong = (0..facets.len())
            .filter(|&i| find(&mut parent, i) == i)
            .count();
        let components = complex.components();
        if strong != components.len() {
            // report a vertex where two strong components meet
            let mut owner: std::collections::BTreeMap<u32, usize> = Default::default();
            let mut pinch = None;
            for (fi, facet) in facets.iter().enumerate() {
                let root = find(&mut parent, fi);
                for &v in facet.vertices() {
                    match owner.get(&v) {
                        Some(&o) if o != root => {
                            pinch.get_or_insert(v);
                        }
                        _ => {
                            owner.insert(v, root);
                        }
                    }
                }
            }
            return not(Verdict::no(
                pinch.map(|v| Face::from_sorted(vec![v])),
                format!(
                    "{strong} strongly connected piece(s) but {} connected component(s)",
                    components.len()
                ),
            ));
        }
    }
    ManifoldVerdict {
        manifold: Verdict::yes(),
        orientable: orientability(complex, betti),
    }
}

/// `β_k ≤ 2β_{k-1} + 2 Σ_{i=0}^{k-3} β_i` with reduced Betti numbers, for a
/// `2k`-dimensional complex and `k >= 1`.
pub fn satisfies_beta_condition(complex: &SimplicialComplex, k: usize) -> Result<bool> {
    Ok(beta_condition_values(complex, &betti_numbers(complex), k)?.0)
}

/// `(holds, left, right)` of the Betti inequality.
pub(crate) fn beta_condition_values(
    complex: &SimplicialComplex,
    betti: &BettiVector,
    k: usize,
) -> Result<(bool, usize, usize)> {
    if k == 0 {
        return Err(Error::Precondition(
            "the Betti inequality is only stated for k >= 1".into(),
        ));
    }
    if complex.dim() != 2 * k as i32 {
        return Err(Error::Precondition(format!(
            "the Betti inequality with k = {k} needs a {}-dimensional complex, got dimension {}",
            2 * k,
            complex.dim()
        )));
    }
    let k = k as i32;
    let left = betti.get(k);
    let tail: usize = (0..=k - 3).map(|i| betti.get(i)).sum();
    let right = 2 * betti.get(k - 1) + 2 * tail;
    Ok((left <= right, left, right))
}

fn reisner_failure(p: &LinkProfile) -> Option<i32> {
    (-1..p.link_dim).find(|&i| p.betti.get(i) != 0)
}

fn cm_scan(profiles: &[LinkProfile]) -> Verdict {
    for p in profiles {
        if let Some(i) = reisner_failure(p) {
            return Verdict::no(
                Some(p.face.clone()),
                format!(
                    "link has dimension {} but reduced Betti number b_{i} = {}",
                    p.link_dim,
                    p.betti.get(i)
                ),
            );
        }
    }
    Verdict::yes()
}

fn buchsbaum_scan(complex: &SimplicialComplex, profiles: &[LinkProfile]) -> Verdict {
    if !complex.is_pure() {
        return Verdict::no(None, "complex is not pure");
    }
    // lk_{lk v}(G) = lk(G ∪ v): every vertex link is Cohen-Macaulay exactly
    // when Reisner's condition holds at every nonempty face.
    for p in profiles.iter().filter(|p| !p.face.is_empty()) {
        if let Some(i) = reisner_failure(p) {
            let v = p.face.vertices()[0];
            return Verdict::no(
                Some(p.face.clone()),
                format!(
                    "link has dimension {} but reduced Betti number b_{i} = {}, so the link of vertex {v} is not Cohen-Macaulay",
                    p.link_dim,
                    p.betti.get(i)
                ),
            );
        }
    }
    Verdict::yes()
}

/// Reisner's criterion over ℚ: `β̃_i(lk F) = 0` for `i < dim lk F`, for every
/// face `F` including the empty one.
pub fn is_cohen_macaulay(complex: &SimplicialComplex) -> Verdict {
    cm_scan(&link_profiles(complex))
}

/// Pure with every vertex link Cohen–Macaulay.
pub fn is_buchsbaum(complex: &SimplicialComplex) -> Verdict {
    buchsbaum_scan(complex, &link_profiles(complex))
}

/// All classifier outcomes for one complex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub dim: i32,
    pub pure: bool,
    pub euler_characteristic: i64,
    pub betti: BettiVector,
    pub eulerian: Verdict,
    pub semi_eulerian: Verdict,
    pub homology_sphere: Verdict,
    pub homology_manifold: Verdict,
    pub orientable: Verdict,
    pub pseudomanifold: Verdict,
    pub oriented_pseudomanifold: Verdict,
    pub cohen_macaulay: Verdict,
    pub buchsbaum: Verdict,
}

/// Runs every classifier, sharing one pass of link homology.
pub fn classify(complex: &SimplicialComplex) -> ClassificationReport {
    let profiles = link_profiles(complex);
    let betti = betti_numbers(complex);
    let manifold = manifold_scan(complex, &profiles, &betti);
    let pseudo = pseudomanifold_scan(complex, &betti);
    ClassificationReport {
        dim: complex.dim(),
        pure: complex.is_pure(),
        euler_characteristic: complex.euler_characteristic(),
        eulerian: eulerian_scan(complex, &profiles, false),
        semi_eulerian: eulerian_scan(complex, &profiles, true),
        homology_sphere: sphere_scan(complex, &manifold, &betti),
        homology_manifold: manifold.manifold,
        orientable: manifold.orientable,
        pseudomanifold: pseudo.manifold,
        oriented_pseudomanifold: pseudo.orientable,
        cohen_macaulay: cm_scan(&profiles),
        buchsbaum: buchsbaum_scan(complex, &profiles),
        betti,
    }
}
