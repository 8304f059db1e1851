//! Seeded random inputs for experiments and the acceptance run.

use latcover::cones::is_very_ample;
use latcover::ellipsoid::{ellipsoid_lattice_points, Ellipsoid};
use latcover::exact::{rat, AffineLattice, IntVector, RatMatrix, RatVector};
use latcover::normality::is_normal;
use latcover::polytope::LatticePolytope;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// An ellipsoid `(M^T M + I) / r` in space holding 4 to 40 points of `Z^3`
/// that span space. With `half`, the center lies in `(1/2) Z^3`.
pub fn ellipsoid_3d(rng: &mut ChaCha8Rng, half: bool) -> Ellipsoid {
    loop {
        let m: Vec<Vec<i64>> = (0..3).map(|_| (0..3).map(|_| rng.gen_range(-2..=2)).collect()).collect();
        let r = rng.gen_range(2..=30);
        let rows = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| {
                        let s: i64 = (0..3).map(|k| m[k][i] * m[k][j]).sum::<i64>() + i64::from(i == j);
                        rat(s, r)
                    })
                    .collect()
            })
            .collect();
        let center = if half {
            (0..3).map(|_| rat(rng.gen_range(-2..=2), 2)).collect()
        } else {
            (0..3).map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=5))).collect()
        };
        let e = Ellipsoid::new(RatMatrix::from_rows(rows).expect("square"), center).expect("positive definite");
        let pts = ellipsoid_lattice_points(&e, &AffineLattice::standard(3), true);
        if !(4..=40).contains(&pts.len()) {
            continue;
        }
        if LatticePolytope::new(&pts, &AffineLattice::standard(3)).is_ok_and(|p| p.dim() == 3) {
            return e;
        }
    }
}

/// The hull of `points` random points of `[0, side]^3`, full-dimensional
/// with at most 40 lattice points.
pub fn polytope_3d(rng: &mut ChaCha8Rng, side: i64, points: usize) -> LatticePolytope {
    loop {
        let coords: Vec<IntVector> =
            (0..points).map(|_| (0..3).map(|_| rng.gen_range(0..=side)).collect()).collect();
        let p = LatticePolytope::from_coords(AffineLattice::standard(3), coords).expect("nonempty");
        if p.dim() == 3 && p.num_lattice_points() <= 40 {
            return p;
        }
    }
}

/// A random normal 3-polytope with at most 40 lattice points.
pub fn normal_polytope_3d(rng: &mut ChaCha8Rng) -> LatticePolytope {
    loop {
        let count = rng.gen_range(4..=8);
        let p = polytope_3d(rng, 3, count);
        if is_normal(&p).is_normal {
            return p;
        }
    }
}

/// A random lattice tetrahedron that is not very ample.
pub fn non_very_ample_3d(rng: &mut ChaCha8Rng) -> LatticePolytope {
    loop {
        let p = polytope_3d(rng, 4, 4);
        if !is_very_ample(&p).is_very_ample {
            return p;
        }
    }
}

/// A planar ellipse whose hull contains a lattice triangle, and a random
/// translation vector.
pub fn ellipse_with_triangle(rng: &mut ChaCha8Rng) -> (Ellipsoid, RatVector) {
    loop {
        let (a, b, c) = (rng.gen_range(1..=6), rng.gen_range(-3..=3), rng.gen_range(1..=6));
        let r = rng.gen_range(1..=8);
        if a * c <= b * b {
            continue;
        }
        let m = RatMatrix::from_rows(vec![vec![rat(a, r), rat(b, r)], vec![rat(b, r), rat(c, r)]]).expect("square");
        let center = vec![rat(rng.gen_range(-5..=5), 3), rat(rng.gen_range(-5..=5), 3)];
        let e = Ellipsoid::new(m, center).expect("positive definite");
        let pts = ellipsoid_lattice_points(&e, &AffineLattice::standard(2), true);
        if LatticePolytope::new(&pts, &AffineLattice::standard(2)).is_ok_and(|p| p.dim() == 2) {
            let v = vec![rat(rng.gen_range(-99..=99), 37), rat(rng.gen_range(-99..=99), 41)];
            return (e, v);
        }
    }
}
