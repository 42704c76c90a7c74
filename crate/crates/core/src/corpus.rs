//! Named complex generators and the built-in test corpus.
//!
//! Specs are written in prefix form. Parentheses and commas are accepted as
//! separators, so `suspension torus-7` and `join(boundary-simplex 2,
//! boundary-simplex 2)` both parse.
//!
//! | generator                  | result                                        |
//! |----------------------------|-----------------------------------------------|
//! | `simplex D`                | solid `D`-simplex                             |
//! | `boundary-simplex D`       | boundary of the `D`-simplex, `D >= 1`         |
//! | `cross-polytope D`         | boundary of the `D`-dimensional cross-polytope|
//! | `cyclic D N`               | boundary of `C_D(N)`                          |
//! | `torus-7`, `rp2-6`         | minimal torus and projective plane            |
//! | `icosahedron`              | boundary of the icosahedron                   |
//! | `cone X`, `suspension X`   |                                               |
//! | `join X Y`, `disjoint X Y` |                                               |
//! | `wedge X Y`                | glued at the smallest vertex of each          |
//! | `wedge-at A B X Y`         | glued at vertex `A` of `X` and `B` of `Y`     |

use std::fmt;

use itertools::Itertools;

use crate::complex::{SimplicialComplex, Vertex};
use crate::cyclic::{gale_facets, CyclicSpec};
use crate::error::{Error, Result};
use crate::homology::{betti_numbers, is_cohen_macaulay, is_homology_manifold, is_homology_sphere};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum NamedComplexSpec {
    Simplex(usize),
    BoundarySimplex(usize),
    CrossPolytope(usize),
    Cyclic(usize, usize),
    Torus7,
    Rp2Six,
    Icosahedron,
    Cone(Box<NamedComplexSpec>),
    Suspension(Box<NamedComplexSpec>),
    Join(Box<NamedComplexSpec>, Box<NamedComplexSpec>),
    Disjoint(Box<NamedComplexSpec>, Box<NamedComplexSpec>),
    Wedge {
        left: Box<NamedComplexSpec>,
        right: Box<NamedComplexSpec>,
        at: Option<(Vertex, Vertex)>,
    },
}

impl NamedComplexSpec {
    /// Parses a whole spec, e.g. `"wedge boundary-simplex 4 boundary-simplex 4"`.
    pub fn parse(text: &str) -> Result<Self> {
        let tokens: Vec<&str> = text
            .split(|c: char| c.is_whitespace() || c == '(' || c == ')' || c == ',')
            .filter(|t| !t.is_empty())
            .collect();
        Self::parse_tokens(&tokens)
    }

    /// Parses pre-split tokens (as received from a command line).
    pub fn parse_tokens<S: AsRef<str>>(tokens: &[S]) -> Result<Self> {
        let joined = tokens.iter().map(AsRef::as_ref).join(" ");
        let split: Vec<&str> = joined
            .split(|c: char| c.is_whitespace() || c == '(' || c == ')' || c == ',')
            .filter(|t| !t.is_empty())
            .collect();
        let mut cursor = split.iter().copied();
        let spec = Self::parse_one(&mut cursor)?;
        let rest: Vec<&str> = cursor.collect();
        if !rest.is_empty() {
            return Err(Error::BadSpec(format!(
                "unexpected trailing input `{}`",
                rest.join(" ")
            )));
        }
        Ok(spec)
    }

    fn parse_one<'a>(tokens: &mut impl Iterator<Item = &'a str>) -> Result<Self> {
        let head = tokens
            .next()
            .ok_or_else(|| Error::BadSpec("expected a generator name".into()))?;
        let mut int = |what: &str| -> Result<usize> {
            let t = tokens
                .next()
                .ok_or_else(|| Error::BadSpec(format!("`{head}` expects {what}")))?;
            t.parse().map_err(|_| {
                Error::BadSpec(format!(
                    "`{head}`: {what} must be a non-negative integer, got `{t}`"
                ))
            })
        };
        use NamedComplexSpec::*;
        Ok(match head {
            "simplex" => Simplex(int("a dimension")?),
            "boundary-simplex" => BoundarySimplex(int("a dimension")?),
            "cross-polytope" => CrossPolytope(int("a dimension")?),
            "cyclic" => {
                let d = int("a dimension")?;
                let n = int("a vertex count")?;
                Cyclic(d, n)
            }
            "torus-7" => Torus7,
            "rp2-6" => Rp2Six,
            "icosahedron" => Icosahedron,
            "cone" => Cone(Box::new(Self::parse_one(tokens)?)),
            "suspension" => Suspension(Box::new(Self::parse_one(tokens)?)),
            "join" => {
                let x = Self::parse_one(tokens)?;
                Join(Box::new(x), Box::new(Self::parse_one(tokens)?))
            }
            "disjoint" => {
                let x = Self::parse_one(tokens)?;
                Disjoint(Box::new(x), Box::new(Self::parse_one(tokens)?))
            }
            "wedge" => {
                let x = Self::parse_one(tokens)?;
                Wedge {
                    left: Box::new(x),
                    right: Box::new(Self::parse_one(tokens)?),
                    at: None,
                }
            }
            "wedge-at" => {
                let a = int("a vertex of the first complex")? as Vertex;
                let b = int("a vertex of the second complex")? as Vertex;
                let x = Self::parse_one(tokens)?;
                Wedge {
                    left: Box::new(x),
                    right: Box::new(Self::parse_one(tokens)?),
                    at: Some((a, b)),
                }
            }
            other => return Err(Error::UnknownGenerator(other.to_string())),
        })
    }

    /// Name used in facet files, e.g. `cyclic-4-9` or `suspension(torus-7)`.
    pub fn name(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for NamedComplexSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use NamedComplexSpec::*;
        match self {
            Simplex(d) => write!(f, "simplex-{d}"),
            BoundarySimplex(d) => write!(f, "boundary-simplex-{d}"),
            CrossPolytope(d) => write!(f, "cross-polytope-{d}"),
            Cyclic(d, n) => write!(f, "cyclic-{d}-{n}"),
            Torus7 => f.write_str("torus-7"),
            Rp2Six => f.write_str("rp2-6"),
            Icosahedron => f.write_str("icosahedron"),
            Cone(x) => write!(f, "cone({x})"),
            Suspension(x) => write!(f, "suspension({x})"),
            Join(x, y) => write!(f, "join({x},{y})"),
            Disjoint(x, y) => write!(f, "disjoint({x},{y})"),
            Wedge {
                left,
                right,
                at: None,
            } => write!(f, "wedge({left},{right})"),
            Wedge {
                left,
                right,
                at: Some((a, b)),
            } => write!(f, "wedge-at-{a}-{b}({left},{right})"),
        }
    }
}

/// Builds the complex described by `spec`. Output is deterministic.
pub fn generate(spec: &NamedComplexSpec) -> Result<SimplicialComplex> {
    use NamedComplexSpec::*;
    match spec {
        Simplex(d) => SimplicialComplex::simplex(0..=*d as Vertex),
        BoundarySimplex(d) => boundary_simplex(*d),
        CrossPolytope(d) => cross_polytope(*d),
        Cyclic(d, n) => Ok(gale_facets(CyclicSpec::new(*d, *n)?)),
        Torus7 => torus_7(),
        Rp2Six => rp2_6(),
        Icosahedron => icosahedron(),
        Cone(x) => Ok(generate(x)?.cone()),
        Suspension(x) => Ok(generate(x)?.suspension()),
        Join(x, y) => Ok(generate(x)?.join(&generate(y)?)),
        Disjoint(x, y) => Ok(generate(x)?.disjoint_union(&generate(y)?)),
        Wedge { left, right, at } => {
            let (x, y) = (generate(left)?, generate(right)?);
            let (a, b) = match at {
                Some(pair) => *pair,
                None => {
                    let first = |c: &SimplicialComplex| {
                        c.vertices().first().copied().ok_or_else(|| {
                            Error::BadSpec("cannot wedge a complex without vertices".into())
                        })
                    };
                    (first(&x)?, first(&y)?)
                }
            };
            x.wedge(&y, a, b).map_err(|_| {
                Error::BadSpec(format!("wedge vertices {a} and {b} are not both present"))
            })
        }
    }
}

/// Boundary of the `d`-simplex on vertices `0..=d`, `d >= 1`.
pub fn boundary_simplex(d: usize) -> Result<SimplicialComplex> {
    if d == 0 {
        return Err(Error::BadSpec("boundary-simplex needs d >= 1".into()));
    }
    SimplicialComplex::from_faces((0..=d as Vertex).combinations(d))
}

/// Boundary of the `d`-dimensional cross-polytope; vertices `2i` and `2i+1`
/// are antipodal.
pub fn cross_polytope(d: usize) -> Result<SimplicialComplex> {
    if d == 0 {
        return Err(Error::BadSpec("cross-polytope needs d >= 1".into()));
    }
    let facets = (0..d as Vertex)
        .map(|i| [2 * i, 2 * i + 1])
        .multi_cartesian_product();
    SimplicialComplex::from_faces(facets)
}

const TORUS_7: [[Vertex; 3]; 14] = [
    [0, 1, 3],
    [1, 2, 4],
    [2, 3, 5],
    [3, 4, 6],
    [0, 4, 5],
    [1, 5, 6],
    [0, 2, 6],
    [0, 2, 3],
    [1, 3, 4],
    [2, 4, 5],
    [3, 5, 6],
    [0, 4, 6],
    [0, 1, 5],
    [1, 2, 6],
];

const RP2_6: [[Vertex; 3]; 10] = [
    [0, 1, 3],
    [0, 1, 5],
    [0, 2, 4],
    [0, 2, 5],
    [0, 3, 4],
    [1, 2, 3],
    [1, 2, 4],
    [1, 4, 5],
    [2, 3, 5],
    [3, 4, 5],
];

fn corrupt(name: &'static str, reason: impl Into<String>) -> Error {
    Error::CorruptEmbedded {
        name,
        reason: reason.into(),
    }
}

/// Minimal 7-vertex torus, checked on load to be an orientable homology
/// manifold with `β̃ = (0, 0, 2, 1)`.
pub fn torus_7() -> Result<SimplicialComplex> {
    let c = SimplicialComplex::from_faces(TORUS_7)?;
    let m = is_homology_manifold(&c);
    if !m.manifold.holds() || !m.orientable.holds() {
        return Err(corrupt("torus-7", "not an orientable homology manifold"));
    }
    let betti = betti_numbers(&c);
    if betti.entries() != [0, 0, 2, 1] || c.facets().len() != 14 || c.num_vertices() != 7 {
        return Err(corrupt(
            "torus-7",
            format!("unexpected Betti numbers {betti}"),
        ));
    }
    Ok(c)
}

/// Minimal 6-vertex real projective plane, checked on load: `χ = 1`, rational
/// homology of a point, Cohen–Macaulay over ℚ, homology manifold.
pub fn rp2_6() -> Result<SimplicialComplex> {
    let c = SimplicialComplex::from_faces(RP2_6)?;
    if c.euler_characteristic() != 1 || c.facets().len() != 10 {
        return Err(corrupt("rp2-6", "Euler characteristic is not 1"));
    }
    if betti_numbers(&c).entries().iter().any(|&b| b != 0) {
        return Err(corrupt("rp2-6", "rational homology is not trivial"));
    }
    if !is_cohen_macaulay(&c).holds() || !is_homology_manifold(&c).manifold.holds() {
        return Err(corrupt("rp2-6", "not a Cohen-Macaulay homology manifold"));
    }
    Ok(c)
}

/// Icosahedron boundary: apex 0, upper ring 1..=5, lower ring 6..=10, apex 11.
pub fn icosahedron() -> Result<SimplicialComplex> {
    let mut facets = Vec::with_capacity(20);
    for j in 0..5 as Vertex {
        let (u, u1) = (1 + j, 1 + (j + 1) % 5);
        let (l, l1) = (6 + j, 6 + (j + 1) % 5);
        facets.push(vec![0, u, u1]);
        facets.push(vec![u, u1, l]);
        facets.push(vec![u1, l, l1]);
        facets.push(vec![11, l, l1]);
    }
    let c = SimplicialComplex::from_faces(facets)?;
    if !is_homology_sphere(&c).holds() || c.face_counts() != [1, 12, 30, 20] {
        return Err(corrupt(
            "icosahedron",
            "not a 2-sphere with f = (1,12,30,20)",
        ));
    }
    Ok(c)
}

/// Specs of the built-in corpus: pure complexes of dimension 0 through 5,
/// covering spheres, manifolds, pseudomanifolds and singular spaces.
pub fn standard_specs() -> Vec<NamedComplexSpec> {
    [
        "simplex 0",
        "boundary-simplex 1",
        "boundary-simplex 2",
        "cyclic 2 5",
        "disjoint simplex 1 simplex 1",
        "simplex 2",
        "boundary-simplex 3",
        "cross-polytope 3",
        "icosahedron",
        "torus-7",
        "rp2-6",
        "cyclic 3 7",
        "wedge simplex 2 simplex 2",
        "wedge boundary-simplex 3 boundary-simplex 3",
        "disjoint boundary-simplex 3 boundary-simplex 3",
        "suspension boundary-simplex 2",
        "boundary-simplex 4",
        "cross-polytope 4",
        "cyclic 4 7",
        "cyclic 4 9",
        "wedge boundary-simplex 4 boundary-simplex 4",
        "join boundary-simplex 2 boundary-simplex 2",
        "suspension torus-7",
        "suspension rp2-6",
        "cone torus-7",
        "simplex 3",
        "boundary-simplex 5",
        "cross-polytope 5",
        "cyclic 5 8",
        "cyclic 6 8",
        "suspension suspension boundary-simplex 3",
        "join boundary-simplex 1 torus-7",
    ]
    .iter()
    .map(|s| NamedComplexSpec::parse(s).expect("built-in spec parses"))
    .collect()
}

/// The built-in corpus as `(name, complex)` pairs.
pub fn standard_corpus() -> Result<Vec<(String, SimplicialComplex)>> {
    standard_specs()
        .into_iter()
        .map(|s| Ok((s.name(), generate(&s)?)))
        .collect()
}
