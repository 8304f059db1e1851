//! Lattice points of fundamental parallelepipeds and of dilated simplices.

use std::collections::HashSet;

use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::exact::{hnf, IntMatrix, IntVector};

/// Lattice points of the half-open parallelepiped `{ sum l_i g_i : 0 <= l_i < 1 }`
/// spanned by `m` linearly independent generators of `Z^m`. There are exactly
/// `|det|` of them; the origin is always first.
pub(crate) fn parallelepiped_points(gens: &[IntVector]) -> Vec<IntVector> {
    let m = gens.len();
    if m == 0 {
        return vec![Vec::new()];
    }
    let cols = IntMatrix::from_columns(gens, m);
    let inv = cols.to_rational().inverse().expect("generators must be independent");
    let det = cols.det();
    // adjugate = det * inverse, integral
    let adj: Vec<Vec<i128>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    (&inv[(i, j)] * num_rational::BigRational::from_integer(det.clone()))
                        .to_integer()
                        .to_i128()
                        .expect("adjugate fits")
                })
                .collect()
        })
        .collect();
    let det = det.to_i128().expect("determinant fits");

    // the rows of the HNF of the generator rows form a triangular basis of the
    // same lattice; its diagonal box is a transversal of Z^m / lattice
    let rows = IntMatrix::from_rows(gens);
    let (h, _) = hnf(&rows);
    let diag: Vec<i64> = (0..m).map(|i| h[(i, i)].to_i64().expect("diagonal fits")).collect();

    let mut out = Vec::with_capacity(det.unsigned_abs() as usize);
    let mut y = vec![0i64; m];
    loop {
        // reduce y into the parallelepiped: y - sum floor(l_i) g_i
        let mut p: Vec<i64> = y.clone();
        for i in 0..m {
            let num: i128 = (0..m).map(|j| adj[i][j] * y[j] as i128).sum();
            let fl = Integer::div_floor(&num, &det) as i64;
            if fl != 0 {
                for (pj, gj) in p.iter_mut().zip(&gens[i]) {
                    *pj -= fl * gj;
                }
            }
        }
        out.push(p);
        // odometer over the box
        let mut i = m;
        loop {
            if i == 0 {
                return finish(out);
            }
            i -= 1;
            y[i] += 1;
            if y[i] < diag[i] {
                break;
            }
            y[i] = 0;
        }
    }
}

fn finish(mut pts: Vec<IntVector>) -> Vec<IntVector> {
    let origin = pts.iter().position(|p| p.iter().all(|&x| x == 0)).expect("origin present");
    pts.swap(0, origin);
    pts[1..].sort();
    pts
}

/// Parallelepiped data of the cone over a lattice simplex `(v_i, 1)`.
#[derive(Clone, Debug)]
pub(crate) struct SimplexCone {
    pub vertices: Vec<IntVector>,
    /// parallelepiped points of the homogenized cone, last coordinate = height
    pub box_points: Vec<IntVector>,
}

impl SimplexCone {
    pub fn new(vertices: Vec<IntVector>) -> Self {
        let gens: Vec<IntVector> = vertices
            .iter()
            .map(|v| {
                let mut g = v.clone();
                g.push(1);
                g
            })
            .collect();
        let box_points = parallelepiped_points(&gens);
        Self { vertices, box_points }
    }

    /// Inserts every lattice point of `c * simplex` into `out`.
    pub fn dilated_points(&self, c: i64, out: &mut HashSet<IntVector>) {
        let k = self.vertices.len();
        let dim = k - 1;
        for b in &self.box_points {
            let h = b[dim];
            if h > c {
                continue;
            }
            let base: IntVector = b[..dim].to_vec();
            let rest = (c - h) as usize;
            compositions(k, rest, &mut |counts| {
                let mut p = base.clone();
                for (v, &n) in self.vertices.iter().zip(counts) {
                    if n > 0 {
                        for (pi, vi) in p.iter_mut().zip(v) {
                            *pi += n as i64 * vi;
                        }
                    }
                }
                out.insert(p);
            });
        }
    }
}

/// Calls `f` with every vector of `parts` nonnegative integers summing to `total`.
pub(crate) fn compositions(parts: usize, total: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(i: usize, left: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if i + 1 == cur.len() {
            cur[i] = left;
            f(cur);
            return;
        }
        for n in 0..=left {
            cur[i] = n;
            go(i + 1, left - n, cur, f);
        }
    }
    if parts == 0 {
        if total == 0 {
            f(&[]);
        }
        return;
    }
    let mut cur = vec![0; parts];
    go(0, total, &mut cur, f);
}
