//! Seeded generators shared by the integration tests.
#![allow(dead_code)]

use latcover::ellipsoid::{ellipsoid_lattice_points, Ellipsoid};
use latcover::exact::{rat, AffineLattice, IntVector, RatMatrix};
use latcover::polytope::LatticePolytope;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// A positive-definite form `(M^T M + I) / r` with a random center, kept if
/// it holds between 4 and 40 lattice points spanning space. Centers are in
/// `(1/2) Z^3` when `half` is set.
pub fn random_ellipsoid_3d(rng: &mut ChaCha8Rng, half: bool) -> Ellipsoid {
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
        let e = Ellipsoid::new(RatMatrix::from_rows(rows).unwrap(), center).unwrap();
        let pts = ellipsoid_lattice_points(&e, &AffineLattice::standard(3), true);
        if !(4..=40).contains(&pts.len()) {
            continue;
        }
        let p = LatticePolytope::new(&pts, &AffineLattice::standard(3)).unwrap();
        if p.dim() == 3 {
            return e;
        }
    }
}

/// Hull of a few random points in a small box, full-dimensional and with at
/// most 40 lattice points.
pub fn random_polytope_3d(rng: &mut ChaCha8Rng, side: i64, points: usize) -> LatticePolytope {
    loop {
        let coords: Vec<IntVector> =
            (0..points).map(|_| (0..3).map(|_| rng.gen_range(0..=side)).collect()).collect();
        let p = LatticePolytope::from_coords(AffineLattice::standard(3), coords).unwrap();
        if p.dim() == 3 && p.num_lattice_points() <= 40 {
            return p;
        }
    }
}
