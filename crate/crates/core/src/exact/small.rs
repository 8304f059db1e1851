//! Machine-integer kernels for lattice coordinates. Entries are small at the
//! scales this crate targets, so products are accumulated in `i128` with
//! checked arithmetic and fall back to `BigInt` when a check trips.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::IntMatrix;

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale(a: &[i64], k: i64) -> Vec<i64> {
    a.iter().map(|x| x * k).collect()
}

pub fn make_primitive(v: &mut [i64]) {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g > 1 {
        v.iter_mut().for_each(|x| *x /= g);
    }
}

fn det_i128(rows: &[Vec<i64>]) -> Option<i128> {
    let n = rows.len();
    if n == 0 {
        return Some(1);
    }
    let mut a: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return Some(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let lhs = a[i][j].checked_mul(a[k][k])?;
                let rhs = a[i][k].checked_mul(a[k][j])?;
                a[i][j] = lhs.checked_sub(rhs)? / prev;
            }
        }
        prev = a[k][k];
    }
    sign.checked_mul(a[n - 1][n - 1])
}

/// Determinant of a square integer matrix given by rows.
pub fn det(rows: &[Vec<i64>]) -> BigInt {
    match det_i128(rows) {
        Some(d) => BigInt::from(d),
        None => IntMatrix::from_rows(rows).det(),
    }
}

/// Primitive normal of the hyperplane through `k` points of `Z^k`, via signed
/// maximal minors of the difference matrix. Zero if the points are affinely
/// dependent.
pub fn hyperplane_normal(points: &[&[i64]]) -> Vec<i64> {
    let k = points.len();
    let base = points[0];
    let diffs: Vec<Vec<i64>> = points[1..].iter().map(|p| sub(p, base)).collect();
    let mut normal = Vec::with_capacity(k);
    for j in 0..k {
        let minor: Vec<Vec<i64>> = diffs
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
            .collect();
        let d = det(&minor);
        let d = if j % 2 == 0 { d } else { -d };
        normal.push(d.to_i64().expect("hyperplane normal overflows i64"));
    }
    make_primitive(&mut normal);
    normal
}

/// Rank of a set of integer vectors.
pub fn rank(vectors: &[Vec<i64>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    match rank_i128(vectors) {
        Some(r) => r,
        None => rank_big(vectors),
    }
}

fn rank_i128(vectors: &[Vec<i64>]) -> Option<usize> {
    let cols = vectors[0].len();
    let mut a: Vec<Vec<i128>> =
        vectors.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, p);
        for i in r + 1..a.len() {
            if a[i][c] == 0 {
                continue;
            }
            let (pv, f) = (a[r][c], a[i][c]);
            let mut g = 0i128;
            for j in c..cols {
                a[i][j] = a[i][j].checked_mul(pv)?.checked_sub(a[r][j].checked_mul(f)?)?;
                g = g.gcd(&a[i][j]);
            }
            if g > 1 {
                a[i].iter_mut().for_each(|x| *x /= g);
            }
        }
        r += 1;
        if r == a.len() {
            break;
        }
    }
    Some(r)
}

fn rank_big(vectors: &[Vec<i64>]) -> usize {
    let cols = vectors[0].len();
    let mut a: Vec<Vec<BigInt>> =
        vectors.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in r + 1..a.len() {
            if a[i][c].is_zero() {
                continue;
            }
            let (pv, f) = (a[r][c].clone(), a[i][c].clone());
            for j in c..cols {
                a[i][j] = &a[i][j] * &pv - &a[r][j] * &f;
            }
        }
        r += 1;
        if r == a.len() {
            break;
        }
    }
    r
}

/// Affine rank (dimension of the affine hull) of a point set.
pub fn affine_rank(points: &[&[i64]]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let diffs: Vec<Vec<i64>> = points[1..].iter().map(|p| sub(p, points[0])).collect();
    rank(&diffs)
}
