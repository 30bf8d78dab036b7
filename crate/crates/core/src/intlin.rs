//! Exact integer linear algebra.
//!
//! Matrices store `i64` entries. Normal forms and determinants run on
//! arbitrary-precision integers internally and convert back with a checked
//! conversion, so an entry that does not fit aborts with a panic instead of
//! wrapping. Ranks use a fraction-free `i128` elimination with checked
//! arithmetic and fall back to big integers on overflow.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// A lattice vector.
pub type IntVec = Vec<i64>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IntLinError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("no rational solution")]
    NoRationalSolution,
    #[error("kernel vector does not match the matrix: {0}")]
    KernelMismatch(String),
}

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMat{:?}", self.to_rows())
    }
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from rows. All rows must have length `cols`.
    pub fn from_rows<R: AsRef<[i64]>>(cols: usize, rows: &[R]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged matrix row");
            data.extend_from_slice(r);
        }
        IntMat {
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols<C: AsRef<[i64]>>(rows: usize, cols: &[C]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            let c = c.as_ref();
            assert_eq!(c.len(), rows, "ragged matrix column");
            for (i, &x) in c.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: i64) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> IntVec {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<IntVec> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> IntMat {
        let mut t = IntMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Matrix product. Panics on overflow.
    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = IntMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.get(i, j);
                    let v = checked_mul_add(cur, a, other.get(k, j));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Matrix-vector product. Panics on overflow.
    pub fn mul_vec(&self, v: &[i64]) -> IntVec {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0i64, |acc, (&a, &b)| checked_mul_add(acc, a, b))
            })
            .collect()
    }

    pub fn neg(&self) -> IntMat {
        IntMat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|x| x.checked_neg().expect("integer overflow in negation"))
                .collect(),
        }
    }

    pub fn select_cols(&self, idx: &[usize]) -> IntMat {
        let cols: Vec<IntVec> = idx.iter().map(|&j| self.col(j)).collect();
        IntMat::from_cols(self.rows, &cols)
    }

    pub fn select_rows(&self, idx: &[usize]) -> IntMat {
        let rows: Vec<&[i64]> = idx.iter().map(|&i| self.row(i)).collect();
        IntMat::from_rows(self.cols, &rows)
    }

    pub fn remove_col(&self, j: usize) -> IntMat {
        let keep: Vec<usize> = (0..self.cols).filter(|&c| c != j).collect();
        self.select_cols(&keep)
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hcat(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.rows, other.rows, "hcat row mismatch");
        let mut out = IntMat::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j));
            }
        }
        out
    }

    fn to_big(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    fn from_big(rows: usize, cols: usize, m: &[Vec<BigInt>]) -> IntMat {
        let mut out = IntMat::zeros(rows, cols);
        for (i, r) in m.iter().enumerate() {
            for (j, x) in r.iter().enumerate() {
                out.set(i, j, big_to_i64(x));
            }
        }
        out
    }
}

#[inline]
fn checked_mul_add(acc: i64, a: i64, b: i64) -> i64 {
    a.checked_mul(b)
        .and_then(|p| acc.checked_add(p))
        .expect("integer overflow in matrix arithmetic")
}

fn big_to_i64(x: &BigInt) -> i64 {
    x.to_i64()
        .unwrap_or_else(|| panic!("integer {x} does not fit in i64"))
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    assert_eq!(a.len(), b.len(), "dot product dimension mismatch");
    a.iter()
        .zip(b)
        .fold(0i64, |acc, (&x, &y)| checked_mul_add(acc, x, y))
}

pub fn gcd_slice(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| g.gcd(&x))
}

// ---------------------------------------------------------------------------
// Row operations on big-integer matrices.

fn swap_rows(m: &mut [Vec<BigInt>], a: usize, b: usize) {
    m.swap(a, b);
}

/// row[dst] -= q * row[src]
fn sub_row(m: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let (d, s) = if dst < src {
        let (lo, hi) = m.split_at_mut(src);
        (&mut lo[dst], &hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(dst);
        (&mut hi[0], &lo[src])
    };
    for (x, y) in d.iter_mut().zip(s.iter()) {
        *x -= q * y;
    }
}

fn negate_row(m: &mut [Vec<BigInt>], r: usize) {
    for x in m[r].iter_mut() {
        *x = -x.clone();
    }
}

fn swap_cols(m: &mut [Vec<BigInt>], a: usize, b: usize) {
    for r in m.iter_mut() {
        r.swap(a, b);
    }
}

/// col[dst] -= q * col[src]
fn sub_col(m: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for r in m.iter_mut() {
        let t = q * &r[src];
        r[dst] -= t;
    }
}

fn identity_big(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Hermite normal form

/// Row-style Hermite normal form: returns `(H, U)` with `U` unimodular and
/// `U * A = H`. Pivots are positive and entries above a pivot lie in
/// `[0, pivot)`. Zero rows sit at the bottom.
pub fn hermite_normal_form(a: &IntMat) -> (IntMat, IntMat) {
    let (rows, cols) = (a.rows, a.cols);
    let mut h = a.to_big();
    let mut u = identity_big(rows);
    let mut pr = 0;
    for c in 0..cols {
        if pr == rows {
            break;
        }
        loop {
            // smallest nonzero |entry| at or below pr in column c
            let piv = (pr..rows)
                .filter(|&i| !h[i][c].is_zero())
                .min_by(|&i, &j| h[i][c].abs().cmp(&h[j][c].abs()));
            let Some(p) = piv else { break };
            swap_rows(&mut h, pr, p);
            swap_rows(&mut u, pr, p);
            let mut done = true;
            for i in pr + 1..rows {
                if h[i][c].is_zero() {
                    continue;
                }
                let q = h[i][c].div_floor(&h[pr][c]);
                sub_row(&mut h, i, pr, &q);
                sub_row(&mut u, i, pr, &q);
                if !h[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[pr][c].is_zero() {
            continue;
        }
        if h[pr][c].is_negative() {
            negate_row(&mut h, pr);
            negate_row(&mut u, pr);
        }
        for i in 0..pr {
            let q = h[i][c].div_floor(&h[pr][c]);
            sub_row(&mut h, i, pr, &q);
            sub_row(&mut u, i, pr, &q);
        }
        pr += 1;
    }
    (
        IntMat::from_big(rows, cols, &h),
        IntMat::from_big(rows, rows, &u),
    )
}

// ---------------------------------------------------------------------------
// Smith normal form

/// `U * A * V = S` with `S` diagonal, nonnegative and each diagonal entry
/// dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub u: IntMat,
    pub s: IntMat,
    pub v: IntMat,
}

impl SnfResult {
    /// Nonzero diagonal entries of `S`.
    pub fn invariant_factors(&self) -> Vec<i64> {
        (0..self.s.rows.min(self.s.cols))
            .map(|i| self.s.get(i, i))
            .filter(|&x| x != 0)
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

pub fn smith_normal_form(a: &IntMat) -> SnfResult {
    let (rows, cols) = (a.rows, a.cols);
    let mut s = a.to_big();
    let mut u = identity_big(rows);
    let mut v = identity_big(cols);
    let mut t = 0;
    while t < rows.min(cols) {
        // pick the smallest nonzero entry in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if s[i][j].is_zero() {
                    continue;
                }
                if best.map_or(true, |(bi, bj)| s[i][j].abs() < s[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        swap_rows(&mut s, t, pi);
        swap_rows(&mut u, t, pi);
        swap_cols(&mut s, t, pj);
        swap_cols(&mut v, t, pj);
        loop {
            let mut changed = false;
            for i in t + 1..rows {
                if s[i][t].is_zero() {
                    continue;
                }
                let q = s[i][t].div_floor(&s[t][t]);
                sub_row(&mut s, i, t, &q);
                sub_row(&mut u, i, t, &q);
                if !s[i][t].is_zero() {
                    changed = true;
                }
            }
            for j in t + 1..cols {
                if s[t][j].is_zero() {
                    continue;
                }
                let q = s[t][j].div_floor(&s[t][t]);
                sub_col(&mut s, j, t, &q);
                sub_col(&mut v, j, t, &q);
                if !s[t][j].is_zero() {
                    changed = true;
                }
            }
            if changed {
                // move the smallest remainder in row/column t to the pivot
                let mut best = (t, t);
                for i in t + 1..rows {
                    if !s[i][t].is_zero() && s[i][t].abs() < s[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..cols {
                    if !s[t][j].is_zero() && s[t][j].abs() < s[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                if best.0 != t {
                    swap_rows(&mut s, t, best.0);
                    swap_rows(&mut u, t, best.0);
                }
                if best.1 != t {
                    swap_cols(&mut s, t, best.1);
                    swap_cols(&mut v, t, best.1);
                }
                continue;
            }
            // row and column clear; enforce divisibility of the trailing block
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !s[i][j].is_multiple_of(&s[t][t]));
            match bad {
                Some((i, _)) => {
                    let minus_one = -BigInt::one();
                    sub_row(&mut s, t, i, &minus_one);
                    sub_row(&mut u, t, i, &minus_one);
                }
                None => break,
            }
        }
        if s[t][t].is_negative() {
            negate_row(&mut s, t);
            negate_row(&mut u, t);
        }
        t += 1;
    }
    SnfResult {
        u: IntMat::from_big(rows, rows, &u),
        s: IntMat::from_big(rows, cols, &s),
        v: IntMat::from_big(cols, cols, &v),
    }
}

// ---------------------------------------------------------------------------
// Rank and determinant

/// Rank over the rationals.
pub fn rank(a: &IntMat) -> usize {
    rank_i128(a).unwrap_or_else(|| rank_big(a))
}

fn rank_i128(a: &IntMat) -> Option<usize> {
    let (rows, cols) = (a.rows, a.cols);
    let mut m: Vec<Vec<i128>> = (0..rows)
        .map(|i| a.row(i).iter().map(|&x| x as i128).collect())
        .collect();
    let mut r = 0;
    let mut prev: i128 = 1;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let x = m[i][j]
                    .checked_mul(m[r][c])?
                    .checked_sub(m[i][c].checked_mul(m[r][j])?)?;
                m[i][j] = x.checked_div(prev)?;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        r += 1;
    }
    Some(r)
}

fn rank_big(a: &IntMat) -> usize {
    let (rows, cols) = (a.rows, a.cols);
    let mut m = a.to_big();
    let mut r = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let x = &m[i][j] * &m[r][c] - &m[i][c] * &m[r][j];
                m[i][j] = x / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

/// Determinant of a square matrix (fraction-free elimination).
pub fn determinant(a: &IntMat) -> i64 {
    assert_eq!(a.rows, a.cols, "determinant of a non-square matrix");
    let n = a.rows;
    if n == 0 {
        return 1;
    }
    let mut m = a.to_big();
    let mut sign = 1i64;
    let mut prev = BigInt::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return 0;
        };
        if p != c {
            m.swap(c, p);
            sign = -sign;
        }
        for i in c + 1..n {
            for j in c + 1..n {
                let x = &m[i][j] * &m[c][c] - &m[i][c] * &m[c][j];
                m[i][j] = x / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[c][c].clone();
    }
    big_to_i64(&(m[n - 1][n - 1].clone() * sign))
}

// ---------------------------------------------------------------------------
// Kernels, cokernels, solving

/// Saturated basis of the integer kernel `{x : A x = 0}`, in Hermite normal
/// form (one vector per row of the HNF).
pub fn kernel_basis(a: &IntMat) -> Vec<IntVec> {
    let (h, u) = hermite_normal_form(&a.transpose());
    let basis: Vec<IntVec> = (0..h.rows)
        .filter(|&i| h.row(i).iter().all(|&x| x == 0))
        .map(|i| u.row(i).to_vec())
        .collect();
    if basis.is_empty() {
        return basis;
    }
    let (hk, _) = hermite_normal_form(&IntMat::from_rows(a.cols, &basis));
    hk.to_rows()
        .into_iter()
        .filter(|r| r.iter().any(|&x| x != 0))
        .collect()
}

/// Presentation of `Z^b / im(A)` for a `b x a` matrix `A`.
///
/// `grading` has one row per cyclic summand. Rows with invariant `d > 0`
/// describe a torsion summand `Z/d` (entries reduced mod `d`), rows with
/// invariant `0` span the free part and are in Hermite normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cokernel {
    pub grading: IntMat,
    pub invariants: Vec<i64>,
}

impl Cokernel {
    pub fn free_rank(&self) -> usize {
        self.invariants.iter().filter(|&&d| d == 0).count()
    }

    pub fn is_free(&self) -> bool {
        self.invariants.iter().all(|&d| d == 0)
    }
}

pub fn cokernel_map(a: &IntMat) -> Cokernel {
    let b = a.rows;
    let snf = smith_normal_form(a);
    let factors = snf.invariant_factors();
    let rank = factors.len();
    let mut rows: Vec<IntVec> = Vec::new();
    let mut invariants = Vec::new();
    for (i, &d) in factors.iter().enumerate() {
        if d > 1 {
            rows.push(snf.u.row(i).iter().map(|x| x.rem_euclid(d)).collect());
            invariants.push(d);
        }
    }
    let free: Vec<IntVec> = (rank..b).map(|i| snf.u.row(i).to_vec()).collect();
    if !free.is_empty() {
        let (h, _) = hermite_normal_form(&IntMat::from_rows(b, &free));
        for r in h.to_rows() {
            rows.push(r);
            invariants.push(0);
        }
    }
    Cokernel {
        grading: IntMat::from_rows(b, &rows),
        invariants,
    }
}

/// Some integer solution of `A x = b`, or `None`. Deterministic.
pub fn solve_integer(a: &IntMat, b: &[i64]) -> Option<IntVec> {
    assert_eq!(a.rows, b.len(), "right-hand side dimension mismatch");
    let snf = smith_normal_form(a);
    let ub = snf.u.mul_vec(b);
    let factors = snf.invariant_factors();
    let mut y = vec![0i64; a.cols];
    for (i, &x) in ub.iter().enumerate() {
        if i < factors.len() {
            if x % factors[i] != 0 {
                return None;
            }
            y[i] = x / factors[i];
        } else if x != 0 {
            return None;
        }
    }
    Some(snf.v.mul_vec(&y))
}

/// Whether `A x = b` has a rational solution.
pub fn has_rational_solution(a: &IntMat, b: &[i64]) -> bool {
    let aug = a.hcat(&IntMat::from_cols(a.rows, &[b]));
    rank(a) == rank(&aug)
}

/// Nonnegative integer solution of `A x = e` when the integer kernel of `A`
/// is spanned by `k` (or is trivial, with `k` the zero vector).
///
/// All integer solutions are `x0 + t k`; among the feasible `t` the smallest
/// is returned when the range is bounded below, otherwise the largest.
pub fn solve_nonneg_line(a: &IntMat, e: &[i64], k: &[i64]) -> Result<Option<IntVec>, IntLinError> {
    if e.len() != a.rows || k.len() != a.cols {
        return Err(IntLinError::Dimension(format!(
            "A is {}x{}, e has {}, k has {}",
            a.rows,
            a.cols,
            e.len(),
            k.len()
        )));
    }
    if a.mul_vec(k).iter().any(|&x| x != 0) {
        return Err(IntLinError::KernelMismatch("A k != 0".into()));
    }
    let k_zero = k.iter().all(|&x| x == 0);
    let expected_rank = if k_zero { a.cols } else { a.cols - 1 };
    if rank(a) != expected_rank {
        return Err(IntLinError::KernelMismatch(format!(
            "kernel has dimension {}, expected {}",
            a.cols - rank(a),
            a.cols - expected_rank
        )));
    }
    if !k_zero && gcd_slice(k) != 1 {
        return Err(IntLinError::KernelMismatch("k is not primitive".into()));
    }
    if !has_rational_solution(a, e) {
        return Err(IntLinError::NoRationalSolution);
    }
    let Some(x0) = solve_integer(a, e) else {
        return Ok(None);
    };
    let mut lo: Option<i64> = None;
    let mut hi: Option<i64> = None;
    for (&x, &d) in x0.iter().zip(k) {
        match d.signum() {
            0 => {
                if x < 0 {
                    return Ok(None);
                }
            }
            1 => {
                // x + t d >= 0  <=>  t >= ceil(-x / d)
                let b = Integer::div_ceil(&(-x), &d);
                lo = Some(lo.map_or(b, |l| l.max(b)));
            }
            _ => {
                // t <= floor(x / -d)
                let b = Integer::div_floor(&x, &(-d));
                hi = Some(hi.map_or(b, |h| h.min(b)));
            }
        }
    }
    let t = match (lo, hi) {
        (Some(l), Some(h)) if l > h => return Ok(None),
        (Some(l), _) => l,
        (None, Some(h)) => h,
        (None, None) => 0,
    };
    Ok(Some(
        x0.iter()
            .zip(k)
            .map(|(&x, &d)| checked_mul_add(x, t, d))
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMat {
        IntMat::from_rows(rows.first().map_or(0, |r| r.len()), rows)
    }

    fn is_hnf(h: &IntMat) -> bool {
        let mut last_pivot: Option<usize> = None;
        let mut seen_zero = false;
        for i in 0..h.rows() {
            let Some(p) = h.row(i).iter().position(|&x| x != 0) else {
                seen_zero = true;
                continue;
            };
            if seen_zero || last_pivot.is_some_and(|lp| p <= lp) || h.get(i, p) <= 0 {
                return false;
            }
            for r in 0..i {
                let x = h.get(r, p);
                if x < 0 || x >= h.get(i, p) {
                    return false;
                }
            }
            last_pivot = Some(p);
        }
        true
    }

    #[test]
    fn hnf_identity() {
        let (h, u) = hermite_normal_form(&IntMat::identity(2));
        assert_eq!(h, IntMat::identity(2));
        assert_eq!(u, IntMat::identity(2));
    }

    #[test]
    fn hnf_preserves_determinant() {
        let a = m(&[&[2, 4], &[1, 3]]);
        let (h, u) = hermite_normal_form(&a);
        assert_eq!(u.mul(&a), h);
        assert_eq!(determinant(&h).abs(), 2);
        assert_eq!(determinant(&u).abs(), 1);
        assert!(is_hnf(&h));
    }

    #[test]
    fn hnf_of_hirzebruch_rays_has_rank_two() {
        let p = m(&[&[1, 0, -1, 0], &[0, 1, 2, -1]]);
        let (h, u) = hermite_normal_form(&p);
        assert_eq!(u.mul(&p), h);
        assert!(is_hnf(&h));
        let nonzero = (0..h.rows()).filter(|&i| h.row(i).iter().any(|&x| x != 0)).count();
        assert_eq!(nonzero, 2);
    }

    #[test]
    fn snf_examples() {
        let z = IntMat::zeros(2, 3);
        let r = smith_normal_form(&z);
        assert!(r.s.is_zero());
        assert_eq!(r.u, IntMat::identity(2));
        assert_eq!(r.v, IntMat::identity(3));

        let d = m(&[&[2, 0], &[0, 3]]);
        let r = smith_normal_form(&d);
        assert_eq!(r.invariant_factors(), vec![1, 6]);
        assert_eq!(r.u.mul(&d).mul(&r.v), r.s);

        let pt = m(&[&[1, 0], &[0, 1], &[-1, 2], &[0, -1]]);
        let r = smith_normal_form(&pt);
        assert_eq!(r.invariant_factors(), vec![1, 1]);
        let ck = cokernel_map(&pt);
        assert!(ck.is_free());
        assert_eq!(ck.free_rank(), 2);
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&IntMat::identity(3)).is_empty());
        assert_eq!(kernel_basis(&m(&[&[-1, -1]])), vec![vec![1, -1]]);
        // a non-saturated rational kernel must still give a primitive vector
        assert_eq!(kernel_basis(&m(&[&[2, 4]])), vec![vec![2, -1]]);
    }

    #[test]
    fn cokernel_of_hirzebruch_transpose() {
        for n in 0..6 {
            let pt = m(&[&[1, 0], &[0, 1], &[-1, n], &[0, -1]]);
            let ck = cokernel_map(&pt);
            assert_eq!(ck.grading, m(&[&[1, 0, 1, n], &[0, 1, 0, 1]]));
            assert!(ck.grading.mul(&pt).is_zero());
        }
        let id = cokernel_map(&IntMat::identity(3));
        assert_eq!(id.grading.rows(), 0);
        assert!(id.invariants.is_empty());
    }

    #[test]
    fn cokernel_with_torsion() {
        let a = m(&[&[2], &[0]]);
        let ck = cokernel_map(&a);
        assert_eq!(ck.invariants, vec![2, 0]);
        // torsion row vanishes mod 2 on the image
        let img = ck.grading.mul(&a);
        assert_eq!(img.get(0, 0).rem_euclid(2), 0);
        assert_eq!(img.get(1, 0), 0);
    }

    #[test]
    fn determinant_small() {
        assert_eq!(determinant(&m(&[&[1, 2], &[3, 4]])), -2);
        assert_eq!(determinant(&m(&[&[0, 1], &[1, 0]])), -1);
        assert_eq!(determinant(&m(&[&[2, 0, 0], &[0, 3, 0], &[1, 1, 1]])), 6);
        assert_eq!(determinant(&IntMat::zeros(0, 0)), 1);
    }

    #[test]
    fn rank_big_fallback_agrees() {
        let a = m(&[
            &[i64::MAX / 3, 1, 0],
            &[i64::MAX / 5, 7, 1],
            &[i64::MAX / 7, 3, 11],
        ]);
        assert_eq!(rank_big(&a), 3);
        assert_eq!(rank(&a), 3);
        let b = m(&[&[1, 2, 3], &[2, 4, 6], &[0, 0, 1]]);
        assert_eq!(rank(&b), 2);
        assert_eq!(rank_i128(&b), Some(2));
    }

    #[test]
    fn solve_integer_and_rational() {
        let a = m(&[&[2, 0], &[0, 3]]);
        assert_eq!(solve_integer(&a, &[4, 9]), Some(vec![2, 3]));
        assert_eq!(solve_integer(&a, &[1, 0]), None);
        assert!(has_rational_solution(&a, &[1, 0]));
        let b = m(&[&[1, 1], &[1, 1]]);
        assert!(!has_rational_solution(&b, &[1, 2]));
    }

    fn hirzebruch_nu(n: i64, alpha: i64) -> IntMat {
        m(&[
            &[0, 1, 0, alpha, 0],
            &[0, 0, 1, 1, 0],
            &[0, 0, n - alpha, 0, 1],
            &[1, 0, 0, 0, 0],
        ])
    }

    #[test]
    fn kernel_of_hirzebruch_nu() {
        for (n, alpha) in [(2, 1), (3, 1), (3, 2), (5, 2)] {
            let nu = hirzebruch_nu(n, alpha);
            let k = kernel_basis(&nu);
            assert_eq!(k, vec![vec![0, alpha, 1, -1, -(n - alpha)]]);
            assert!(nu.mul_vec(&k[0]).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn nonneg_line_examples() {
        let nu = hirzebruch_nu(2, 1);
        let k = kernel_basis(&nu).remove(0);
        assert_eq!(solve_nonneg_line(&nu, &[0, 0, 0, 0], &k), Ok(Some(vec![0; 5])));
        assert_eq!(
            solve_nonneg_line(&nu, &[1, 1, 0, 0], &k),
            Ok(Some(vec![0, 0, 0, 1, 0]))
        );
        assert_eq!(
            solve_nonneg_line(&nu, &[5, 2, 0, 0], &k),
            Ok(Some(vec![0, 3, 0, 2, 0]))
        );
        assert_eq!(solve_nonneg_line(&nu, &[0, 0, 0, -1], &k), Ok(None));
        let thin = m(&[&[1, 1], &[1, 1]]);
        assert_eq!(
            solve_nonneg_line(&thin, &[1, 2], &[1, -1]),
            Err(IntLinError::NoRationalSolution)
        );
    }

    #[test]
    fn nonneg_line_rejects_bad_kernel() {
        let nu = hirzebruch_nu(2, 1);
        assert!(matches!(
            solve_nonneg_line(&nu, &[0, 0, 0, 0], &[1, 0, 0, 0, 0]),
            Err(IntLinError::KernelMismatch(_))
        ));
    }
}
