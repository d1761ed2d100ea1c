//! Small exact matrix helpers over `ℤ` and `ℚ`.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

pub type Q = Ratio<i64>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

/// Formats a rational as `n` or `n/d`.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().ok()?;
            let d: i64 = d.trim().parse().ok()?;
            if d == 0 {
                None
            } else {
                Some(Q::new(n, d))
            }
        }
        None => s.parse::<i64>().ok().map(q),
    }
}

/// Dense square or rectangular integer matrix, row-major.
pub type IMat = Vec<Vec<i64>>;
pub type QMat = Vec<Vec<Q>>;

pub fn identity(n: usize) -> IMat {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub fn transpose<T: Clone>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

pub fn mat_mul(a: &IMat, b: &IMat) -> IMat {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    let mut out = vec![vec![0i64; m]; n];
    for i in 0..n {
        for l in 0..k {
            let x = a[i][l];
            if x == 0 {
                continue;
            }
            for j in 0..m {
                out[i][j] += x * b[l][j];
            }
        }
    }
    out
}

pub fn mat_vec(a: &IMat, v: &[i64]) -> Vec<i64> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

pub fn qmat_vec(a: &QMat, v: &[Q]) -> Vec<Q> {
    a.iter()
        .map(|row| row.iter().zip(v).fold(Q::zero(), |acc, (x, y)| acc + x * y))
        .collect()
}

/// `v^T a` for a row vector `v`.
pub fn vec_mat(v: &[i64], a: &IMat) -> Vec<i64> {
    let m = if a.is_empty() { 0 } else { a[0].len() };
    (0..m)
        .map(|j| v.iter().zip(a).map(|(x, row)| x * row[j]).sum())
        .collect()
}

pub fn qvec_qmat(v: &[Q], a: &QMat) -> Vec<Q> {
    let m = if a.is_empty() { 0 } else { a[0].len() };
    (0..m)
        .map(|j| {
            v.iter()
                .zip(a)
                .fold(Q::zero(), |acc, (x, row)| acc + x * row[j])
        })
        .collect()
}

pub fn to_q(m: &IMat) -> QMat {
    m.iter()
        .map(|r| r.iter().map(|&x| q(x)).collect())
        .collect()
}

pub fn qvec(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

/// Returns the integer vector if every entry is integral.
pub fn integral(v: &[Q]) -> Option<Vec<i64>> {
    v.iter()
        .map(|x| {
            if x.is_integer() {
                Some(x.to_integer())
            } else {
                None
            }
        })
        .collect()
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn qdot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

/// Inverse of a square rational matrix by Gauss-Jordan elimination.
/// Returns `None` for singular input.
pub fn inverse(m: &QMat) -> Option<QMat> {
    let n = m.len();
    let mut a: QMat = m.to_vec();
    let mut inv: QMat = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Q::one() } else { Q::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..n {
                    let t = a[col][j] * f;
                    a[r][j] -= t;
                    let t = inv[col][j] * f;
                    inv[r][j] -= t;
                }
            }
        }
    }
    Some(inv)
}

pub fn determinant(m: &IMat) -> i64 {
    let n = m.len();
    let mut a = to_q(m);
    let mut det = Q::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return 0;
        };
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        let p = a[col][col];
        det *= p;
        for r in col + 1..n {
            let f = a[r][col] / p;
            for j in col..n {
                let t = a[col][j] * f;
                a[r][j] -= t;
            }
        }
    }
    det.to_integer()
}

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

pub fn lcm(a: i64, b: i64) -> i64 {
    a.lcm(&b)
}

pub fn is_nonneg(v: &[i64]) -> bool {
    v.iter().all(|x| *x >= 0)
}

pub fn abs_q(x: Q) -> Q {
    x.abs()
}
