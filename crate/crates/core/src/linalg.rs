//! Exact rank of integer matrices by fraction-free (Bareiss) elimination.
//!
//! Elimination first runs on `i64` with checked arithmetic and falls back to
//! [`BigInt`] if any intermediate minor overflows. The pivot in each column
//! is the nonzero entry of least magnitude, ties broken by row index.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: i64) {
        self.data[r * self.cols + c] = value;
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let mut small: Vec<Vec<i64>> = self.data.chunks(self.cols).map(<[i64]>::to_vec).collect();
        if let Some(rank) = bareiss_rank(&mut small) {
            return rank;
        }
        let mut big: Vec<Vec<BigInt>> = self
            .data
            .chunks(self.cols)
            .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        bareiss_rank(&mut big).expect("arbitrary-precision elimination cannot overflow")
    }
}

trait Scalar: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn magnitude_lt(&self, other: &Self) -> bool;
    /// `(a * pivot - b * c) / prev`, exact; `None` on overflow.
    fn bareiss(a: &Self, pivot: &Self, b: &Self, c: &Self, prev: &Self) -> Option<Self>;
}

impl Scalar for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn magnitude_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn bareiss(a: &Self, pivot: &Self, b: &Self, c: &Self, prev: &Self) -> Option<Self> {
        let num = a.checked_mul(*pivot)?.checked_sub(b.checked_mul(*c)?)?;
        debug_assert_eq!(num % prev, 0);
        num.checked_div(*prev)
    }
}

impl Scalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn magnitude_lt(&self, other: &Self) -> bool {
        self.abs() < other.abs()
    }
    fn bareiss(a: &Self, pivot: &Self, b: &Self, c: &Self, prev: &Self) -> Option<Self> {
        Some((a * pivot - b * c) / prev)
    }
}

fn bareiss_rank<T: Scalar>(m: &mut [Vec<T>]) -> Option<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = T::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let mut best: Option<usize> = None;
        for r in rank..rows {
            let x = &m[r][col];
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|b| x.magnitude_lt(&m[b][col])) {
                best = Some(r);
            }
        }
        let Some(p) = best else { continue };
        m.swap(rank, p);
        let (head, tail) = m.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let pivot = pivot_row[col].clone();
        for row in tail.iter_mut() {
            let lead = row[col].clone();
            for j in col + 1..cols {
                row[j] = T::bareiss(&row[j], &pivot, &lead, &pivot_row[j], &prev)?;
            }
            row[col] = T::zero();
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}
