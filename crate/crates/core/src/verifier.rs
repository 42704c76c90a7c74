//! Executable upper- and lower-bound statements.
//!
//! Each check returns a [`VerificationReport`]. Conclusions are evaluated
//! even when hypotheses fail; they are then flagged `vacuous` and the overall
//! outcome is [`Outcome::HypothesesNotMet`]. [`Outcome::Fail`] therefore
//! always means a counterexample (or a bug).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{Face, SimplicialComplex};
use crate::cyclic::{cyclic_h, gale_facets, CyclicSpec};
use crate::error::{Error, Result};
use crate::homology::{
    beta_condition_values, betti_numbers, classify, is_buchsbaum, is_eulerian,
    is_homology_manifold, is_homology_sphere, Flag, Verdict, Witness,
};
use crate::vectors::{h_from_f, serialize_bigint, short_h_from_f, FVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    HypothesesNotMet,
}

impl Outcome {
    /// Process exit status: pass 0, fail 1, hypotheses not met 2.
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Pass => 0,
            Outcome::Fail => 1,
            Outcome::HypothesesNotMet => 2,
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::HypothesesNotMet => "hypotheses-not-met",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub condition: String,
    pub status: Flag,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Hypothesis {
    fn from_verdict(condition: impl Into<String>, verdict: Verdict) -> Self {
        Hypothesis {
            condition: condition.into(),
            status: verdict.flag,
            note: None,
            witness: verdict.witness.filter(|_| verdict.flag != Flag::True),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    AtMost,
    #[serde(rename = "=")]
    Equal,
    #[serde(rename = ">=")]
    AtLeast,
}

impl Relation {
    fn holds(self, left: &BigInt, right: &BigInt) -> bool {
        match self {
            Relation::AtMost => left <= right,
            Relation::Equal => left == right,
            Relation::AtLeast => left >= right,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::AtMost => "<=",
            Relation::Equal => "=",
            Relation::AtLeast => ">=",
        })
    }
}

/// One evaluated instance such as `f_3: 10 <= 27`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Inequality {
    pub instance: String,
    #[serde(serialize_with = "serialize_bigint")]
    pub left: BigInt,
    pub relation: Relation,
    #[serde(serialize_with = "serialize_bigint")]
    pub right: BigInt,
    pub holds: bool,
    pub vacuous: bool,
}

impl Inequality {
    fn new(instance: impl Into<String>, left: BigInt, relation: Relation, right: BigInt) -> Self {
        let holds = relation.holds(&left, &right);
        Inequality {
            instance: instance.into(),
            left,
            relation,
            right,
            holds,
            vacuous: false,
        }
    }
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} {} {} [{}{}]",
            self.instance,
            self.left,
            self.relation,
            self.right,
            if self.holds { "ok" } else { "violated" },
            if self.vacuous { ", vacuous" } else { "" }
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub statement: Statement,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subject: Option<String>,
    pub hypotheses: Vec<Hypothesis>,
    pub conclusion: Vec<Inequality>,
    /// Evaluated for information only; never affects `overall`.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub observations: Vec<Inequality>,
    pub overall: Outcome,
}

impl VerificationReport {
    fn assemble(
        statement: Statement,
        hypotheses: Vec<Hypothesis>,
        mut conclusion: Vec<Inequality>,
        observations: Vec<Inequality>,
    ) -> Self {
        let met = hypotheses.iter().all(|h| h.status == Flag::True);
        for c in &mut conclusion {
            c.vacuous = !met;
        }
        let overall = if !met {
            Outcome::HypothesesNotMet
        } else if conclusion.iter().all(|c| c.holds) {
            Outcome::Pass
        } else {
            Outcome::Fail
        };
        VerificationReport {
            statement,
            subject: None,
            hypotheses,
            conclusion,
            observations,
            overall,
        }
    }

    pub fn with_subject(mut self, name: impl Into<String>) -> Self {
        self.subject = Some(name.into());
        self
    }

    pub fn hypotheses_met(&self) -> bool {
        self.hypotheses.iter().all(|h| h.status == Flag::True)
    }

    /// Stable pretty-printed JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// The statements the verifier knows how to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Statement {
    /// Upper bound for odd-dimensional complexes with admissible vertex links.
    Ubc,
    /// The oriented-pseudomanifold variant of the upper bound.
    UbcCorollary,
    /// `h_i(K) <= h_i(C_{2k+1}(r))` for `0 <= i <= k+1`.
    LemmaHh,
    /// `h_i(K) <= h_i(C_d(n))` for homology spheres.
    SphereUbc,
    DehnSommerville,
    LowerBounds,
}

impl Statement {
    pub const ALL: [Statement; 6] = [
        Statement::Ubc,
        Statement::UbcCorollary,
        Statement::LemmaHh,
        Statement::SphereUbc,
        Statement::DehnSommerville,
        Statement::LowerBounds,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Statement::Ubc => "ubc",
            Statement::UbcCorollary => "ubc-corollary",
            Statement::LemmaHh => "lemma-hh",
            Statement::SphereUbc => "sphere-ubc",
            Statement::DehnSommerville => "dehn-sommerville",
            Statement::LowerBounds => "lower-bounds",
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Statement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Statement::ALL
            .into_iter()
            .find(|st| st.id() == s)
            .ok_or_else(|| Error::UnknownStatement(s.to_string()))
    }
}

/// Runs `statement` on `complex`. For `lemma-hh` the parameter `k` is
/// `dim / 2`.
pub fn verify(statement: Statement, complex: &SimplicialComplex) -> Result<VerificationReport> {
    match statement {
        Statement::Ubc => verify_ubc(complex),
        Statement::UbcCorollary => verify_ubc_with(complex, HypothesisMode::Corollary),
        Statement::LemmaHh => {
            let dim = complex.dim();
            if dim < 2 || dim % 2 != 0 {
                return Err(Error::Precondition(format!(
                    "lemma-hh needs an even dimension 2k >= 2, got {dim}"
                )));
            }
            check_lemma_hh(complex, dim as usize / 2)
        }
        Statement::SphereUbc => check_sphere_ubc(complex),
        Statement::DehnSommerville => Ok(check_dehn_sommerville(complex)),
        Statement::LowerBounds => check_lower_bounds(complex),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HypothesisMode {
    /// Every vertex link is a homology manifold with `χ = 2`, or an oriented
    /// one satisfying the Betti inequality; homology-sphere links are also
    /// accepted.
    Theorem,
    /// Oriented pseudomanifold whose vertex links are homology manifolds with
    /// vanishing middle homology or `(-1)^k (χ - 2) <= 0`.
    Corollary,
}

fn odd_dimension_k(complex: &SimplicialComplex) -> Result<usize> {
    if !complex.is_pure() {
        return Err(Error::NotPure);
    }
    let dim = complex.dim();
    if dim < 3 || dim % 2 == 0 {
        return Err(Error::Precondition(format!(
            "the upper bound is stated for pure complexes of odd dimension 2k+1 >= 3, got dimension {dim}"
        )));
    }
    Ok((dim as usize - 1) / 2)
}

fn vertex_hypothesis(
    complex: &SimplicialComplex,
    v: u32,
    k: usize,
    mode: HypothesisMode,
) -> Hypothesis {
    let face = Face::new(vec![v]).expect("single vertex");
    let link = complex.vertex_link(v).expect("vertex of the complex");
    let condition = format!("link of {face} is admissible");
    let fail = |reason: String| Hypothesis {
        condition: condition.clone(),
        status: Flag::False,
        note: None,
        witness: Some(Witness {
            face: Some(face.clone()),
            reason,
        }),
    };
    let pass = |note: String| Hypothesis {
        condition: condition.clone(),
        status: Flag::True,
        note: Some(note),
        witness: None,
    };
    let manifold = is_homology_manifold(&link);
    if !manifold.manifold.holds() {
        let inner = manifold
            .manifold
            .witness
            .map(|w| w.to_string())
            .unwrap_or_default();
        return fail(format!("link is not a homology manifold ({inner})"));
    }
    let betti = betti_numbers(&link);
    let chi = link.euler_characteristic();
    let oriented = manifold.orientable.holds();
    match mode {
        HypothesisMode::Theorem => {
            if betti.is_sphere(link.dim()) {
                return pass("link is a homology sphere".into());
            }
            if chi == 2 {
                return pass("link is a homology manifold with Euler characteristic 2".into());
            }
            let (beta_ok, left, right) =
                beta_condition_values(&link, &betti, k).expect("link has dimension 2k, k >= 1");
            if oriented && beta_ok {
                return pass(format!(
                    "link is an oriented homology manifold with b_{k} = {left} <= {right}"
                ));
            }
            fail(format!(
                "link has Euler characteristic {chi}, orientable = {oriented}, b_{k} = {left} vs 2b_{} + 2(b_0 + ... + b_{}) = {right}",
                k - 1,
                k as i64 - 3
            ))
        }
        HypothesisMode::Corollary => {
            let middle = betti.get(k as i32);
            let sign = if k.is_multiple_of(2) { 1 } else { -1 };
            let signed = sign * (chi - 2);
            if middle == 0 {
                return pass(format!("link has vanishing middle homology b_{k} = 0"));
            }
            if signed <= 0 {
                return pass(format!("(-1)^{k} (chi - 2) = {signed} <= 0"));
            }
            fail(format!(
                "link has b_{k} = {middle} and (-1)^{k} (chi - 2) = {signed} > 0"
            ))
        }
    }
}

/// Hypotheses of the upper bound, one entry per vertex in ascending order
/// (preceded by the oriented-pseudomanifold condition in corollary mode).
pub fn check_ubc_hypotheses(
    complex: &SimplicialComplex,
    mode: HypothesisMode,
) -> Result<Vec<Hypothesis>> {
    let k = odd_dimension_k(complex)?;
    let mut out = Vec::new();
    if mode == HypothesisMode::Corollary {
        let report = classify(complex);
        let oriented = if !report.pseudomanifold.holds() {
            report.pseudomanifold
        } else {
            report.oriented_pseudomanifold
        };
        out.push(Hypothesis::from_verdict(
            "oriented pseudomanifold",
            oriented,
        ));
    }
    let per_vertex: Vec<Hypothesis> = complex
        .vertices()
        .par_iter()
        .map(|&v| vertex_hypothesis(complex, v, k, mode))
        .collect();
    out.extend(per_vertex);
    Ok(out)
}

/// `f_i(Δ) <= f_i(C_{2k+2}(n))` for `1 <= i <= 2k+1`, plus the intermediate
/// `h̃_i(Δ) <= h̃_i(C_{2k+2}(n))` for `0 <= i <= k+1`.
pub fn verify_ubc(complex: &SimplicialComplex) -> Result<VerificationReport> {
    verify_ubc_with(complex, HypothesisMode::Theorem)
}

pub fn verify_ubc_with(
    complex: &SimplicialComplex,
    mode: HypothesisMode,
) -> Result<VerificationReport> {
    let k = odd_dimension_k(complex)?;
    let d = 2 * k + 2;
    let n = complex.num_vertices();
    let spec = CyclicSpec::new(d, n).map_err(|_| {
        Error::Precondition(format!(
            "comparison with C_{d}(n) needs n > {d} vertices, got {n}"
        ))
    })?;
    let hypotheses = check_ubc_hypotheses(complex, mode)?;

    let f = FVector::of(complex);
    let f_cyclic = FVector::of(&gale_facets(spec));
    let mut conclusion: Vec<Inequality> = (1..=(2 * k + 1) as i64)
        .map(|i| {
            Inequality::new(
                format!("f_{i}"),
                f.get(i),
                Relation::AtMost,
                f_cyclic.get(i),
            )
        })
        .collect();
    let sh = short_h_from_f(&f);
    let sh_cyclic = short_h_from_f(&f_cyclic);
    conclusion.extend((0..=k + 1).map(|i| {
        Inequality::new(
            format!("h~_{i}"),
            sh.get(i).clone(),
            Relation::AtMost,
            sh_cyclic.get(i).clone(),
        )
    }));

    // whether h itself obeys the bound is left open; reported only
    let h = h_from_f(&f);
    let observations = (0..=k + 1)
        .map(|i| {
            Inequality::new(
                format!("h_{i}"),
                h.get(i).clone(),
                Relation::AtMost,
                cyclic_h(spec, i).expect("i <= d"),
            )
        })
        .collect();
    let statement = match mode {
        HypothesisMode::Theorem => Statement::Ubc,
        HypothesisMode::Corollary => Statement::UbcCorollary,
    };
    Ok(VerificationReport::assemble(
        statement,
        hypotheses,
        conclusion,
        observations,
    ))
}

/// For a `2k`-dimensional `K` on `r` vertices: if `K` is a homology manifold
/// with `χ = 2`, or an oriented one satisfying the Betti inequality, then
/// `h_i(K) <= h_i(C_{2k+1}(r))` for `0 <= i <= k+1`.
pub fn check_lemma_hh(complex: &SimplicialComplex, k: usize) -> Result<VerificationReport> {
    if k == 0 || complex.dim() != 2 * k as i32 {
        return Err(Error::Precondition(format!(
            "lemma-hh with k = {k} needs a complex of dimension 2k >= 2, got {}",
            complex.dim()
        )));
    }
    let r = complex.num_vertices();
    let spec = CyclicSpec::new(2 * k + 1, r).map_err(|_| {
        Error::Precondition(format!(
            "comparison with C_{}(r) needs r > {} vertices, got {r}",
            2 * k + 1,
            2 * k + 1
        ))
    })?;
    let manifold = is_homology_manifold(complex);
    let betti = betti_numbers(complex);
    let chi = complex.euler_characteristic();
    let mut hypotheses = vec![Hypothesis::from_verdict(
        "homology manifold",
        manifold.manifold.clone(),
    )];
    let (beta_ok, left, right) = beta_condition_values(complex, &betti, k)?;
    let second = if chi == 2 {
        Hypothesis {
            condition: "Euler characteristic 2, or oriented with the Betti inequality".into(),
            status: Flag::True,
            note: Some("Euler characteristic is 2".into()),
            witness: None,
        }
    } else if manifold.orientable.holds() && beta_ok {
        Hypothesis {
            condition: "Euler characteristic 2, or oriented with the Betti inequality".into(),
            status: Flag::True,
            note: Some(format!("oriented with b_{k} = {left} <= {right}")),
            witness: None,
        }
    } else {
        Hypothesis {
            condition: "Euler characteristic 2, or oriented with the Betti inequality".into(),
            status: Flag::False,
            note: None,
            witness: Some(Witness {
                face: None,
                reason: format!(
                    "Euler characteristic {chi}, orientable = {}, b_{k} = {left} > {right}",
                    manifold.orientable.flag
                ),
            }),
        }
    };
    hypotheses.push(second);
    let h = h_from_f(&FVector::of(complex));
    let conclusion = (0..=k + 1)
        .map(|i| {
            Inequality::new(
                format!("h_{i}"),
                h.get(i).clone(),
                Relation::AtMost,
                cyclic_h(spec, i).expect("i <= d"),
            )
        })
        .collect();
    Ok(VerificationReport::assemble(
        Statement::LemmaHh,
        hypotheses,
        conclusion,
        Vec::new(),
    ))
}

/// For a `(d-1)`-dimensional homology sphere on `n` vertices:
/// `h_i(K) <= h_i(C_d(n))` for `0 <= i <= d-1`.
pub fn check_sphere_ubc(complex: &SimplicialComplex) -> Result<VerificationReport> {
    let d = (complex.dim() + 1).max(0) as usize;
    let n = complex.num_vertices();
    let spec = CyclicSpec::new(d, n).map_err(|_| {
        Error::Precondition(format!(
            "comparison with C_d(n) needs n > d >= 2, got d = {d}, n = {n}"
        ))
    })?;
    let hypotheses = vec![Hypothesis::from_verdict(
        "homology sphere",
        is_homology_sphere(complex),
    )];
    let h = h_from_f(&FVector::of(complex));
    let conclusion = (0..d)
        .map(|i| {
            Inequality::new(
                format!("h_{i}"),
                h.get(i).clone(),
                Relation::AtMost,
                cyclic_h(spec, i).expect("i <= d"),
            )
        })
        .collect();
    Ok(VerificationReport::assemble(
        Statement::SphereUbc,
        hypotheses,
        conclusion,
        Vec::new(),
    ))
}

/// For Eulerian complexes, `h_i = h_{d-i}`.
pub fn check_dehn_sommerville(complex: &SimplicialComplex) -> VerificationReport {
    let hypotheses = vec![Hypothesis::from_verdict("Eulerian", is_eulerian(complex))];
    let h = h_from_f(&FVector::of(complex));
    let d = h.d();
    let conclusion = (0..=d / 2)
        .map(|i| {
            Inequality::new(
                format!("h_{i} = h_{}", d - i),
                h.get(i).clone(),
                Relation::Equal,
                h.get(d - i).clone(),
            )
        })
        .collect();
    VerificationReport::assemble(
        Statement::DehnSommerville,
        hypotheses,
        conclusion,
        Vec::new(),
    )
}

/// For Buchsbaum complexes, `(-1)^i χ_i >= 0` for `0 <= i <= ⌊(d-1)/2⌋`.
pub fn check_lower_bounds(complex: &SimplicialComplex) -> Result<VerificationReport> {
    if !complex.is_pure() {
        return Err(Error::NotPure);
    }
    let d = complex.dim() + 1;
    let top = (d - 1).div_euclid(2);
    let hypotheses = vec![Hypothesis::from_verdict("Buchsbaum", is_buchsbaum(complex))];
    let conclusion = (0..=top)
        .map(|i| {
            let chi = complex.chi_partial(i).expect("i <= dim");
            let signed = if i % 2 == 0 { chi } else { -chi };
            Inequality::new(
                format!("(-1)^{i} chi_{i}"),
                BigInt::from(signed),
                Relation::AtLeast,
                BigInt::zero(),
            )
        })
        .collect();
    Ok(VerificationReport::assemble(
        Statement::LowerBounds,
        hypotheses,
        conclusion,
        Vec::new(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{boundary_simplex, cross_polytope, torus_7};

    fn values(report: &VerificationReport) -> Vec<(i64, i64)> {
        report
            .conclusion
            .iter()
            .map(|c| {
                (
                    (&c.left).try_into().unwrap(),
                    (&c.right).try_into().unwrap(),
                )
            })
            .collect()
    }

    #[test]
    fn simplex_boundary_is_the_equality_case() {
        let r = verify_ubc(&boundary_simplex(4).unwrap()).unwrap();
        assert_eq!(r.overall, Outcome::Pass);
        assert!(values(&r).iter().all(|(l, r)| l == r));
    }

    #[test]
    fn wedge_meets_the_hypotheses() {
        let s = boundary_simplex(4).unwrap();
        let w = s.wedge(&s, 0, 0).unwrap();
        let hyps = check_ubc_hypotheses(&w, HypothesisMode::Theorem).unwrap();
        assert!(hyps.iter().all(|h| h.status == Flag::True));
        let r = verify_ubc(&w).unwrap();
        assert_eq!(r.overall, Outcome::Pass);
        let f3 = r.conclusion.iter().find(|c| c.instance == "f_3").unwrap();
        assert_eq!((f3.left.clone(), f3.right.clone()), (10.into(), 27.into()));
        // not a pseudomanifold, so the corollary route does not apply
        let c = verify_ubc_with(&w, HypothesisMode::Corollary).unwrap();
        assert_eq!(c.overall, Outcome::HypothesesNotMet);
    }

    #[test]
    fn torus_suspension_fails_hypotheses() {
        let s = torus_7().unwrap().suspension();
        let r = verify_ubc(&s).unwrap();
        assert_eq!(r.overall, Outcome::HypothesesNotMet);
        assert!(r.conclusion.iter().all(|c| c.vacuous));
        let bad: Vec<_> = r
            .hypotheses
            .iter()
            .filter(|h| h.status == Flag::False)
            .collect();
        assert_eq!(bad.len(), 2, "both apices have torus links");
        assert_eq!(r.overall.exit_code(), 2);
    }

    #[test]
    fn preconditions() {
        assert!(verify_ubc(&boundary_simplex(3).unwrap()).is_err());
        assert!(verify_ubc(&SimplicialComplex::simplex(0..4).unwrap()).is_err());
        let impure = SimplicialComplex::from_faces(vec![vec![0, 1, 2, 3], vec![4, 5]]).unwrap();
        assert_eq!(verify_ubc(&impure), Err(Error::NotPure));
        assert_eq!(check_lower_bounds(&impure), Err(Error::NotPure));
        assert!(check_lemma_hh(&boundary_simplex(3).unwrap(), 0).is_err());
        assert!(check_lemma_hh(&boundary_simplex(4).unwrap(), 1).is_err());
        assert!(check_sphere_ubc(&boundary_simplex(1).unwrap()).is_err());
    }

    #[test]
    fn lemma_on_small_surfaces() {
        let r = check_lemma_hh(&cross_polytope(3).unwrap(), 1).unwrap();
        assert_eq!(r.overall, Outcome::Pass);
        assert_eq!(values(&r), vec![(1, 1), (3, 3), (3, 3)]);
        let t = check_lemma_hh(&torus_7().unwrap(), 1).unwrap();
        assert_eq!(t.overall, Outcome::HypothesesNotMet);
        let h2 = &t.conclusion[2];
        assert!(!h2.holds && h2.vacuous);
        assert_eq!(values(&t)[2], (10, 4));
    }

    #[test]
    fn dehn_sommerville_and_lower_bounds() {
        let r = check_dehn_sommerville(&boundary_simplex(4).unwrap());
        assert_eq!(r.overall, Outcome::Pass);
        let bowtie = SimplicialComplex::from_faces(vec![vec![0, 1, 2], vec![0, 3, 4]]).unwrap();
        assert_eq!(
            check_dehn_sommerville(&bowtie).overall,
            Outcome::HypothesesNotMet
        );
        let r = check_lower_bounds(&torus_7().unwrap()).unwrap();
        assert_eq!(r.overall, Outcome::Pass);
        assert_eq!(values(&r), vec![(7, 0), (14, 0)]);
        let point = SimplicialComplex::simplex([0]).unwrap();
        assert_eq!(values(&check_lower_bounds(&point).unwrap()), vec![(1, 0)]);
    }

    #[test]
    fn statement_ids_round_trip() {
        for st in Statement::ALL {
            assert_eq!(st.id().parse::<Statement>().unwrap(), st);
        }
        assert!(matches!(
            "ubt".parse::<Statement>(),
            Err(Error::UnknownStatement(_))
        ));
    }

    #[test]
    fn report_json_is_stable() {
        let r = check_dehn_sommerville(&cross_polytope(3).unwrap()).with_subject("octahedron");
        let json = r.to_json();
        assert_eq!(json, r.clone().to_json());
        let statement_at = json.find("\"statement\"").unwrap();
        let overall_at = json.find("\"overall\"").unwrap();
        assert!(statement_at < overall_at);
        assert!(json.contains("\"overall\": \"pass\""));
    }
}
