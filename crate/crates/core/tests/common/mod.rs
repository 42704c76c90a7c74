//! Test-only oracles, independent of the library code paths they check.

#![allow(dead_code, clippy::needless_range_loop)]

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Determinant by Gaussian elimination over ℚ.
pub fn det(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut acc = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            m.swap(p, c);
            acc = -acc;
        }
        let pivot = m[c][c].clone();
        acc *= &pivot;
        for r in c + 1..n {
            let factor = &m[r][c] / &pivot;
            for j in c..n {
                let delta = &factor * &m[c][j];
                m[r][j] -= delta;
            }
        }
    }
    acc
}

/// Rank over ℚ by plain Gaussian elimination with rational entries.
pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect()
        })
        .collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..nrows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(p, rank);
        for r in 0..nrows {
            if r != rank && !m[r][c].is_zero() {
                let factor = &m[r][c] / &m[rank][c];
                for j in c..ncols {
                    let delta = &factor * &m[rank][j];
                    m[r][j] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Facets of the convex hull of `(t, t², …, t^d)` for `t = 1..=n`, found by
/// brute force: a `d`-subset spans a facet iff every other point lies
/// strictly on one side of its affine hull. Vertex `t` is labelled `t - 1`.
pub fn moment_curve_hull_facets(d: usize, n: usize) -> Vec<Vec<u32>> {
    let point = |t: usize| -> Vec<BigRational> {
        (1..=d)
            .map(|e| BigRational::from_integer(BigInt::from(t).pow(e as u32)))
            .collect()
    };
    let points: Vec<Vec<BigRational>> = (1..=n).map(point).collect();
    let row = |p: &[BigRational]| -> Vec<BigRational> {
        std::iter::once(BigRational::one())
            .chain(p.iter().cloned())
            .collect()
    };
    let mut facets: Vec<Vec<u32>> = (0..n)
        .combinations(d)
        .filter(|subset| {
            let base: Vec<Vec<BigRational>> = subset.iter().map(|&i| row(&points[i])).collect();
            let signs: Vec<i8> = (0..n)
                .filter(|q| !subset.contains(q))
                .map(|q| {
                    let mut m = base.clone();
                    m.push(row(&points[q]));
                    let value = det(m);
                    if value.is_positive() {
                        1
                    } else if value.is_negative() {
                        -1
                    } else {
                        0
                    }
                })
                .collect();
            signs.iter().all(|&s| s != 0 && s == signs[0])
        })
        .map(|subset| subset.into_iter().map(|i| i as u32).collect())
        .collect();
    facets.sort();
    facets
}

/// Brute-force `C(n, k)` via Pascal's triangle.
pub fn pascal(n: usize, k: usize) -> BigInt {
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = vec![BigInt::one(); row.len() + 1];
        for i in 1..row.len() {
            next[i] = &row[i - 1] + &row[i];
        }
        row = next;
    }
    row.get(k).cloned().unwrap_or_default()
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// `∫_0^1 x^i (x-1)^{r-i-1} dx` from the Beta function.
pub fn beta_closed_form(i: usize, r: usize) -> BigRational {
    let m = r - i - 1;
    let sign = if m.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    BigRational::new(sign * factorial(i) * factorial(m), factorial(r))
}
