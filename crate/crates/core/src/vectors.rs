//! Exact f-, h- and short simplicial h-vector transforms.
//!
//! Everything here is integer or rational arithmetic on [`BigInt`]; there is
//! no floating point. Binomial coefficients `C(a, b)` vanish outside
//! `0 <= b <= a`, which keeps every summation range uniform.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// Exact rational in lowest terms with positive denominator.
pub type Rational = BigRational;

/// `C(a, b)`, zero unless `0 <= b <= a`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 || a < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for t in 0..b {
        acc = acc * BigInt::from(a - t) / BigInt::from(t + 1);
    }
    acc
}

fn sign(exp: i64) -> BigInt {
    if exp.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn factorial(n: i64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

fn write_tuple(f: &mut fmt::Formatter<'_>, entries: &[BigInt]) -> fmt::Result {
    f.write_str("(")?;
    for (i, x) in entries.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

/// Serializes a big integer as a JSON number when it fits in `i64`, and as a
/// decimal string otherwise.
pub(crate) fn serialize_bigint<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match x.to_i64() {
        Some(v) => s.serialize_i64(v),
        None => s.serialize_str(&x.to_string()),
    }
}

fn serialize_bigints<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    struct Entry<'a>(&'a BigInt);
    impl Serialize for Entry<'_> {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            serialize_bigint(self.0, s)
        }
    }
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        seq.serialize_element(&Entry(x))?;
    }
    seq.end()
}

/// `(f_{-1}, f_0, …, f_{d-1})` with `f_{-1} = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FVector(Vec<BigInt>);

impl FVector {
    pub fn new(entries: Vec<BigInt>) -> Result<Self> {
        if entries.first() != Some(&BigInt::one()) {
            return Err(Error::Precondition(format!(
                "f-vector must start with f_-1 = 1, got {entries:?}"
            )));
        }
        if let Some(bad) = entries.iter().find(|x| x.is_negative()) {
            return Err(Error::Precondition(format!(
                "f-vector entries must be non-negative, got {bad}"
            )));
        }
        Ok(FVector(entries))
    }

    pub fn from_counts(counts: &[usize]) -> Result<Self> {
        Self::new(counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn of(complex: &SimplicialComplex) -> Self {
        FVector(
            complex
                .face_counts()
                .into_iter()
                .map(BigInt::from)
                .collect(),
        )
    }

    /// `d = dim + 1`.
    pub fn d(&self) -> usize {
        self.0.len() - 1
    }

    /// `f_j` for `-1 <= j <= d-1`; zero elsewhere.
    pub fn get(&self, j: i64) -> BigInt {
        usize::try_from(j + 1)
            .ok()
            .and_then(|idx| self.0.get(idx).cloned())
            .unwrap_or_default()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl Serialize for FVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serialize_bigints(&self.0, s)
    }
}

/// `(h_0, …, h_d)`. Entries may be negative for complexes that are not
/// Cohen–Macaulay.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HVector(Vec<BigInt>);

impl HVector {
    pub fn new(entries: Vec<BigInt>) -> Result<Self> {
        if entries.first() != Some(&BigInt::one()) {
            return Err(Error::Precondition(format!(
                "h-vector must start with h_0 = 1, got {entries:?}"
            )));
        }
        Ok(HVector(entries))
    }

    pub fn d(&self) -> usize {
        self.0.len() - 1
    }

    pub fn get(&self, i: usize) -> &BigInt {
        &self.0[i]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_palindromic(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl Serialize for HVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serialize_bigints(&self.0, s)
    }
}

/// `(h̃_0, …, h̃_{d-1})`: the vertexwise sum of link h-vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShortHVector(Vec<BigInt>);

impl ShortHVector {
    pub fn new(entries: Vec<BigInt>) -> Self {
        ShortHVector(entries)
    }

    pub fn d(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, i: usize) -> &BigInt {
        &self.0[i]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }
}

impl fmt::Display for ShortHVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl Serialize for ShortHVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serialize_bigints(&self.0, s)
    }
}

/// `h_i = Σ_{j=0}^{i} (-1)^{i-j} C(d-j, d-i) f_{j-1}` for `i = 0..=d`.
pub fn h_from_f(f: &FVector) -> HVector {
    let d = f.d() as i64;
    let h = (0..=d)
        .map(|i| {
            (0..=i)
                .map(|j| sign(i - j) * binomial(d - j, d - i) * f.get(j - 1))
                .sum()
        })
        .collect();
    HVector(h)
}

/// `f_{j-1} = Σ_{i=0}^{j} C(d-i, d-j) h_i` for `j = 0..=d`.
///
/// Fails only when `h` is not the h-vector of any complex (a negative count
/// comes out).
pub fn f_from_h(h: &HVector) -> Result<FVector> {
    let d = h.d() as i64;
    let f = (0..=d)
        .map(|j| {
            (0..=j)
                .map(|i| binomial(d - i, d - j) * h.get(i as usize))
                .sum()
        })
        .collect();
    FVector::new(f)
}

/// Sum of `h(lk v)` over all vertices. Requires a pure complex, so that every
/// vertex link has the same dimension.
pub fn short_h_from_links(complex: &SimplicialComplex) -> Result<ShortHVector> {
    if !complex.is_pure() {
        return Err(Error::NotPure);
    }
    let d = (complex.dim() + 1) as usize;
    let mut acc = vec![BigInt::zero(); d];
    for &v in complex.vertices() {
        let h = h_from_f(&FVector::of(&complex.vertex_link(v)?));
        debug_assert_eq!(h.0.len(), d);
        for (slot, x) in acc.iter_mut().zip(h.0) {
            *slot += x;
        }
    }
    Ok(ShortHVector(acc))
}

/// `h̃_i = Σ_{j=0}^{i} (-1)^{i-j} (j+1) C(d-1-j, d-1-i) f_j` for `0 <= i <= d-1`.
pub fn short_h_from_f(f: &FVector) -> ShortHVector {
    let d = f.d() as i64;
    let h = (0..d)
        .map(|i| {
            (0..=i)
                .map(|j| {
                    sign(i - j) * BigInt::from(j + 1) * binomial(d - 1 - j, d - 1 - i) * f.get(j)
                })
                .sum()
        })
        .collect();
    ShortHVector(h)
}

/// Coefficient `C(d-1-i, d-1-j) / (j+1)` of `h̃_i` in the expansion of `f_j`.
pub fn reconstruction_coeff(d: usize, i: usize, j: usize) -> Rational {
    let (d, i, j) = (d as i64, i as i64, j as i64);
    Rational::new(binomial(d - 1 - i, d - 1 - j), BigInt::from(j + 1))
}

/// `f_j = (j+1)^{-1} Σ_{i=0}^{j} C(d-1-i, d-1-j) h̃_i`, with `f_{-1} = 1`.
///
/// The division must be exact; a remainder means `h̃` is not the short
/// h-vector of any pure complex and is reported as an error.
pub fn f_from_short_h(short_h: &ShortHVector) -> Result<FVector> {
    let d = short_h.d() as i64;
    let mut f = vec![BigInt::one()];
    for j in 0..d {
        let weighted: BigInt = (0..=j)
            .map(|i| binomial(d - 1 - i, d - 1 - j) * short_h.get(i as usize))
            .sum();
        let (q, r) = weighted.div_rem(&BigInt::from(j + 1));
        if !r.is_zero() {
            return Err(Error::NonIntegralFace {
                entries: short_h.0.iter().map(ToString::to_string).collect(),
                j: j as usize,
                numerator: weighted.to_string(),
                denominator: (j + 1) as usize,
            });
        }
        f.push(q);
    }
    FVector::new(f)
}

/// `∫_0^1 x^i (x-1)^{r-i-1} dx` for `0 <= i < r`, evaluated as the finite sum
/// `Σ_{j=i+1}^{r} (1/j) (-1)^{r-j} C(r-i-1, r-j)`.
///
/// The result is checked against the Beta-function closed form.
pub fn beta_integral(i: usize, r: usize) -> Result<Rational> {
    if i >= r {
        return Err(Error::IndexOutOfRange {
            index: i as i64,
            min: 0,
            max: r as i64 - 1,
        });
    }
    let (i, r) = (i as i64, r as i64);
    let sum = (i + 1..=r)
        .map(|j| Rational::new(sign(r - j) * binomial(r - i - 1, r - j), BigInt::from(j)))
        .fold(Rational::zero(), |acc, x| acc + x);
    assert_eq!(
        sum,
        beta_closed_form(i, r),
        "finite sum and closed form of the integral disagree at i = {i}, r = {r}"
    );
    Ok(sum)
}

/// `(-1)^{r-i-1} i! (r-i-1)! / r!`.
fn beta_closed_form(i: i64, r: i64) -> Rational {
    Rational::new(
        sign(r - i - 1) * factorial(i) * factorial(r - i - 1),
        factorial(r),
    )
}

/// Coefficient of `h̃_i` in the expression of `h_r` of a `(2k+1)`-dimensional
/// complex: `C(2k+1-i, 2k+2-r) · ∫_0^1 x^i (x-1)^{r-i-1} dx`, for `0 <= i < r`.
pub fn short_h_coefficient(k: usize, r: usize, i: usize) -> Result<Rational> {
    let d = 2 * k as i64 + 2;
    if r as i64 > d {
        return Err(Error::IndexOutOfRange {
            index: r as i64,
            min: 0,
            max: d,
        });
    }
    let integral = beta_integral(i, r)?;
    Ok(Rational::from_integer(binomial(d - 1 - i as i64, d - r as i64)) * integral)
}

/// `h_r` of a `(2k+1)`-dimensional complex recovered from its short h-vector:
/// `(-1)^r C(2k+2, r) + Σ_{i<r} h̃_i · short_h_coefficient(k, r, i)`.
pub fn h_via_short_h(short_h: &ShortHVector, k: usize, r: usize) -> Result<Rational> {
    let d = 2 * k + 2;
    if short_h.d() != d {
        return Err(Error::Precondition(format!(
            "short h-vector of length {} does not belong to a {}-dimensional complex",
            short_h.d(),
            2 * k + 1
        )));
    }
    if r > d {
        return Err(Error::IndexOutOfRange {
            index: r as i64,
            min: 0,
            max: d as i64,
        });
    }
    let mut acc = Rational::from_integer(sign(r as i64) * binomial(d as i64, r as i64));
    for i in 0..r {
        acc += Rational::from_integer(short_h.get(i).clone()) * short_h_coefficient(k, r, i)?;
    }
    Ok(acc)
}

/// `c(i, l, d) = Σ_{j=l}^{i} (-1)^{i-j} (j+1)^{-1} C(d-1-l, d-1-j)`: the
/// coefficient of `h̃_l` in `(-1)^i χ_i`, for `0 <= l <= i <= d-1`.
pub fn lower_bound_coeff(d: usize, i: usize, l: usize) -> Result<Rational> {
    if d == 0 || i > d - 1 {
        return Err(Error::IndexOutOfRange {
            index: i as i64,
            min: l as i64,
            max: d as i64 - 1,
        });
    }
    if l > i {
        return Err(Error::IndexOutOfRange {
            index: l as i64,
            min: 0,
            max: i as i64,
        });
    }
    let (d, i, l) = (d as i64, i as i64, l as i64);
    Ok((l..=i)
        .map(|j| {
            Rational::new(
                sign(i - j) * binomial(d - 1 - l, d - 1 - j),
                BigInt::from(j + 1),
            )
        })
        .fold(Rational::zero(), |acc, x| acc + x))
}
