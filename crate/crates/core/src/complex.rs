//! Finite abstract simplicial complexes given by their facets.
//!
//! A [`SimplicialComplex`] stores its inclusion-maximal faces in canonical
//! (sorted) form. The full face lattice is enumerated on first request and
//! cached; the cache is a [`OnceLock`], so concurrent first access is safe and
//! every reader observes the same enumeration.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Vertex label. Any non-negative integer is allowed.
pub type Vertex = u32;

/// A face: a sorted, duplicate-free set of vertices. The empty face has
/// dimension -1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Face(Vec<Vertex>);

impl Face {
    pub fn empty() -> Self {
        Face(Vec::new())
    }

    /// Canonicalises `vertices`; fails on a repeated vertex.
    pub fn new(mut vertices: Vec<Vertex>) -> Result<Self> {
        vertices.sort_unstable();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex {
                index: 0,
                face: vertices.clone(),
                vertex: w[0],
            });
        }
        Ok(Face(vertices))
    }

    /// Builds a face from data already known to be sorted and duplicate-free.
    pub(crate) fn from_sorted(vertices: Vec<Vertex>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Face(vertices)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> i32 {
        self.0.len() as i32 - 1
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Face) -> bool {
        // both sorted: merge walk
        let mut it = other.0.iter();
        'outer: for v in &self.0 {
            for w in it.by_ref() {
                if w == v {
                    continue 'outer;
                }
                if w > v {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn is_disjoint(&self, other: &Face) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn union(&self, other: &Face) -> Face {
        let mut v: Vec<Vertex> = self.0.iter().chain(&other.0).copied().collect();
        v.sort_unstable();
        v.dedup();
        Face(v)
    }

    pub fn difference(&self, other: &Face) -> Face {
        Face(
            self.0
                .iter()
                .copied()
                .filter(|v| !other.contains(*v))
                .collect(),
        )
    }

    /// The codimension-one faces, in the order of the omitted vertex.
    pub fn boundary(&self) -> impl Iterator<Item = Face> + '_ {
        (0..self.0.len()).map(move |skip| {
            Face(
                self.0
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v)
                    .collect(),
            )
        })
    }

    fn subsets(&self) -> impl Iterator<Item = Face> + '_ {
        let n = self.0.len();
        assert!(n < 64, "facet with {n} vertices is too large to enumerate");
        (0u64..(1u64 << n)).map(move |mask| {
            Face(
                self.0
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect(),
            )
        })
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("{}");
        }
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl From<Face> for Vec<Vertex> {
    fn from(face: Face) -> Self {
        face.0
    }
}

/// A finite simplicial complex. Immutable after construction.
#[derive(Debug)]
pub struct SimplicialComplex {
    vertices: Vec<Vertex>,
    facets: Vec<Face>,
    faces: OnceLock<Vec<Vec<Face>>>,
}

impl Clone for SimplicialComplex {
    fn clone(&self) -> Self {
        let faces = OnceLock::new();
        if let Some(cached) = self.faces.get() {
            let _ = faces.set(cached.clone());
        }
        SimplicialComplex {
            vertices: self.vertices.clone(),
            facets: self.facets.clone(),
            faces,
        }
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    /// Generates the complex spanned by `faces`. Non-maximal entries are
    /// absorbed. `[[]]` gives the empty complex `{∅}`; `[]` is rejected.
    pub fn from_faces<I, F>(faces: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = Vertex>,
    {
        let mut canonical = Vec::new();
        for (index, face) in faces.into_iter().enumerate() {
            let face = Face::new(face.into_iter().collect()).map_err(|e| match e {
                Error::DuplicateVertex { face, vertex, .. } => Error::DuplicateVertex {
                    index,
                    face,
                    vertex,
                },
                other => other,
            })?;
            canonical.push(face);
        }
        if canonical.is_empty() {
            return Err(Error::VoidComplex);
        }
        Ok(Self::from_canonical(canonical))
    }

    /// Same as [`from_faces`](Self::from_faces) for faces already validated.
    pub(crate) fn from_canonical(mut faces: Vec<Face>) -> Self {
        assert!(!faces.is_empty());
        // Larger faces first, so a face only needs checking against kept ones.
        faces.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        faces.dedup();
        let mut facets: Vec<Face> = Vec::with_capacity(faces.len());
        for face in faces {
            if !facets
                .iter()
                .any(|g| g.len() > face.len() && face.is_subset_of(g))
            {
                facets.push(face);
            }
        }
        facets.sort_unstable();
        let vertices: BTreeSet<Vertex> = facets.iter().flat_map(|f| f.0.iter().copied()).collect();
        SimplicialComplex {
            vertices: vertices.into_iter().collect(),
            facets,
            faces: OnceLock::new(),
        }
    }

    /// The empty complex `{∅}`.
    pub fn empty() -> Self {
        Self::from_canonical(vec![Face::empty()])
    }

    /// The full simplex on `vertices`.
    pub fn simplex(vertices: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        Self::from_faces([vertices.into_iter().collect::<Vec<_>>()])
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn dim(&self) -> i32 {
        self.facets.iter().map(Face::dim).max().unwrap_or(-1)
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dim();
        self.facets.iter().all(|f| f.dim() == d)
    }

    /// All faces grouped by dimension: `faces_by_dim()[k]` holds the
    /// `(k-1)`-dimensional faces in lexicographic order.
    pub fn faces_by_dim(&self) -> &[Vec<Face>] {
        self.faces.get_or_init(|| {
            let levels = (self.dim() + 2) as usize;
            let mut sets: Vec<BTreeSet<Face>> = vec![BTreeSet::new(); levels];
            for facet in &self.facets {
                for sub in facet.subsets() {
                    sets[sub.len()].insert(sub);
                }
            }
            sets.into_iter().map(|s| s.into_iter().collect()).collect()
        })
    }

    /// Faces of dimension `dim` (`-1 ..= self.dim()`); empty outside that range.
    pub fn faces(&self, dim: i32) -> &[Face] {
        let idx = dim + 1;
        self.faces_by_dim()
            .get(usize::try_from(idx).unwrap_or(usize::MAX))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// Every face, ordered by dimension and then lexicographically.
    pub fn all_faces(&self) -> impl Iterator<Item = &Face> {
        self.faces_by_dim().iter().flatten()
    }

    pub fn contains_face(&self, face: &Face) -> bool {
        self.facets.iter().any(|g| face.is_subset_of(g))
    }

    /// Face counts `f_{-1}, f_0, …, f_{dim}` as machine integers.
    pub fn face_counts(&self) -> Vec<usize> {
        self.faces_by_dim().iter().map(Vec::len).collect()
    }

    /// `lk F = { G : G ∩ F = ∅, G ∪ F ∈ Δ }`.
    pub fn link(&self, face: &Face) -> Result<SimplicialComplex> {
        if face.is_empty() {
            return Ok(self.clone());
        }
        let pieces: Vec<Face> = self
            .facets
            .iter()
            .filter(|g| face.is_subset_of(g))
            .map(|g| g.difference(face))
            .collect();
        if pieces.is_empty() {
            return Err(Error::NotAFace { face: face.clone() });
        }
        Ok(Self::from_canonical(pieces))
    }

    pub fn vertex_link(&self, v: Vertex) -> Result<SimplicialComplex> {
        self.link(&Face(vec![v]))
    }

    /// The subcomplex of faces of dimension at most `i`, for `-1 <= i <= dim`.
    pub fn skeleton(&self, i: i32) -> Result<SimplicialComplex> {
        let dim = self.dim();
        if i < -1 || i > dim {
            return Err(Error::DimensionOutOfRange {
                requested: i.into(),
                min: -1,
                max: dim.into(),
            });
        }
        let mut pieces: Vec<Face> = self.faces(i).to_vec();
        pieces.extend(self.facets.iter().filter(|f| f.dim() < i).cloned());
        Ok(Self::from_canonical(pieces))
    }

    /// `χ_i = Σ_{j=0}^{i} (-1)^j f_j`, for `0 <= i <= dim`.
    pub fn chi_partial(&self, i: i32) -> Result<i64> {
        let dim = self.dim();
        if i < 0 || i > dim {
            return Err(Error::DimensionOutOfRange {
                requested: i.into(),
                min: 0,
                max: dim.into(),
            });
        }
        Ok(self.alternating_sum(i))
    }

    /// Non-reduced Euler characteristic `Σ_{j>=0} (-1)^j f_j`.
    pub fn euler_characteristic(&self) -> i64 {
        self.alternating_sum(self.dim())
    }

    fn alternating_sum(&self, upto: i32) -> i64 {
        (0..=upto)
            .map(|j| {
                let n = self.faces(j).len() as i64;
                if j % 2 == 0 {
                    n
                } else {
                    -n
                }
            })
            .sum()
    }

    /// Connected components of the underlying space, as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let index: BTreeMap<Vertex, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i))
            .collect();
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for facet in &self.facets {
            if let Some((&first, rest)) = facet.0.split_first() {
                let a = find(&mut parent, index[&first]);
                for v in rest {
                    let b = find(&mut parent, index[v]);
                    parent[b] = a;
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<Vertex>> = BTreeMap::new();
        for (i, &v) in self.vertices.iter().enumerate() {
            let root = find(&mut parent, i);
            groups.entry(root).or_default().push(v);
        }
        let mut out: Vec<Vec<Vertex>> = groups.into_values().collect();
        out.sort();
        out
    }

    /// Applies an injective vertex relabelling.
    pub fn relabel(&self, map: impl Fn(Vertex) -> Vertex) -> Result<SimplicialComplex> {
        let mut seen = BTreeMap::new();
        for &v in &self.vertices {
            let w = map(v);
            if seen.insert(w, v).is_some() {
                return Err(Error::NonInjectiveRelabel(w));
            }
        }
        let facets = self
            .facets
            .iter()
            .map(|f| {
                let mut v: Vec<Vertex> = f.0.iter().map(|&x| map(x)).collect();
                v.sort_unstable();
                Face(v)
            })
            .collect();
        Ok(Self::from_canonical(facets))
    }

    /// Relabels to `0..n` preserving vertex order.
    pub fn normalized(&self) -> SimplicialComplex {
        let index: BTreeMap<Vertex, Vertex> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i as Vertex))
            .collect();
        self.relabel(|v| index[&v])
            .expect("order-preserving map is injective")
    }

    fn next_free_vertex(&self) -> Vertex {
        self.vertices.last().map_or(0, |v| v + 1)
    }

    /// Join `Δ * Γ`; the vertices of `other` are shifted past those of `self`.
    pub fn join(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let shift = self.next_free_vertex();
        let shifted = other
            .relabel(|v| v + shift)
            .expect("translation is injective");
        let mut facets = Vec::with_capacity(self.facets.len() * shifted.facets.len());
        for f in &self.facets {
            for g in &shifted.facets {
                facets.push(f.union(g));
            }
        }
        Self::from_canonical(facets)
    }

    /// Cone with a fresh apex.
    pub fn cone(&self) -> SimplicialComplex {
        self.join(&SimplicialComplex::from_canonical(vec![Face(vec![0])]))
    }

    /// Suspension with two fresh apices.
    pub fn suspension(&self) -> SimplicialComplex {
        self.join(&SimplicialComplex::from_canonical(vec![
            Face(vec![0]),
            Face(vec![1]),
        ]))
    }

    /// Disjoint union; the vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let shift = self.next_free_vertex();
        let shifted = other
            .relabel(|v| v + shift)
            .expect("translation is injective");
        let facets = self.facets.iter().chain(&shifted.facets).cloned().collect();
        Self::from_canonical(facets)
    }

    /// One-point union identifying vertex `at_self` of `self` with vertex
    /// `at_other` of `other`. The remaining vertices of `other` get fresh ids.
    pub fn wedge(
        &self,
        other: &SimplicialComplex,
        at_self: Vertex,
        at_other: Vertex,
    ) -> Result<SimplicialComplex> {
        for (complex, v) in [(self, at_self), (other, at_other)] {
            if complex.vertices.binary_search(&v).is_err() {
                return Err(Error::NotAFace {
                    face: Face(vec![v]),
                });
            }
        }
        let first_free = self.next_free_vertex();
        let fresh: BTreeMap<Vertex, Vertex> = other
            .vertices
            .iter()
            .filter(|&&v| v != at_other)
            .enumerate()
            .map(|(i, &v)| (v, first_free + i as Vertex))
            .collect();
        let glued = other.relabel(|v| if v == at_other { at_self } else { fresh[&v] })?;
        let facets = self.facets.iter().chain(&glued.facets).cloned().collect();
        Ok(Self::from_canonical(facets))
    }
}
