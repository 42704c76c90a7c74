//! Boundary complexes of cyclic polytopes.
//!
//! `C_d(n)` is built combinatorially from Gale's evenness condition; no
//! coordinates are involved.

use itertools::Itertools;
use num_bigint::BigInt;

use crate::complex::{Face, SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::vectors::binomial;

/// Dimension and vertex count of a cyclic polytope, `n > d >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CyclicSpec {
    d: usize,
    n: usize,
}

impl CyclicSpec {
    pub fn new(d: usize, n: usize) -> Result<Self> {
        if d < 2 || n <= d {
            return Err(Error::InvalidCyclic { d, n });
        }
        Ok(CyclicSpec { d, n })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Name used when the complex is written to a facet file.
    pub fn name(&self) -> String {
        format!("cyclic-{}-{}", self.d, self.n)
    }
}

/// True when every gap between two consecutive non-members of `0..n` holds an
/// even number of members of `subset`.
fn gale_even(subset: &[usize], n: usize) -> bool {
    let mut inside = 0usize;
    let mut seen_outsider = false;
    let mut members = subset.iter().peekable();
    for x in 0..n {
        if members.peek() == Some(&&x) {
            members.next();
            inside += 1;
        } else {
            if seen_outsider && inside % 2 == 1 {
                return false;
            }
            seen_outsider = true;
            inside = 0;
        }
    }
    true
}

/// Facets of `∂C_d(n)` on vertices `0..n`: the `d`-subsets satisfying Gale's
/// evenness condition.
pub fn gale_facets(spec: CyclicSpec) -> SimplicialComplex {
    let facets: Vec<Face> = (0..spec.n)
        .combinations(spec.d)
        .filter(|s| gale_even(s, spec.n))
        .map(|s| Face::from_sorted(s.into_iter().map(|v| v as Vertex).collect()))
        .collect();
    SimplicialComplex::from_canonical(facets)
}

/// `h_i(C_d(n))`: `C(n-d+i-1, i)` for `i <= ⌊d/2⌋`, extended by `h_i = h_{d-i}`.
pub fn cyclic_h(spec: CyclicSpec, i: usize) -> Result<BigInt> {
    let d = spec.d;
    if i > d {
        return Err(Error::IndexOutOfRange {
            index: i as i64,
            min: 0,
            max: d as i64,
        });
    }
    let i = if i <= d / 2 { i } else { d - i } as i64;
    Ok(binomial(spec.n as i64 - d as i64 + i - 1, i))
}

/// The whole h-vector `(h_0, …, h_d)` of `C_d(n)`.
pub fn cyclic_h_vector(spec: CyclicSpec) -> Vec<BigInt> {
    (0..=spec.d)
        .map(|i| cyclic_h(spec, i).expect("index within 0..=d"))
        .collect()
}

/// Largest `l` such that every `l`-subset of the vertices is a face.
pub fn neighborliness(complex: &SimplicialComplex) -> usize {
    let n = complex.num_vertices() as i64;
    let counts = complex.face_counts();
    // counts[l] = number of faces with l vertices
    (1..counts.len())
        .take_while(|&l| BigInt::from(counts[l]) == binomial(n, l as i64))
        .last()
        .unwrap_or(0)
}
