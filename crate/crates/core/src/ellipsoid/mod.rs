//! Ellipsoids with rational quadratic forms, their lattice points, and
//! ellipsoidal sets.

mod qd;
mod set;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use qd::{
    build_qd_family, corner_inequality_solutions, half_integer_ray_contains, half_integer_ray_range, lattice_isomorphism_to_standard, verify_counterexample,
    CounterexampleReport, QdFamily,
};
pub use set::{descent_chain, find_extremal_point, peel, stack, stack_squared_semi_axis, EllipsoidalSet};

use crate::error::{Error, Result};
use crate::exact::{int, AffineLattice, ExactScalar, IntVector, RatMatrix, RatVector};
use crate::polytope::LatticePolytope;

/// The solid `{ x : (x - center)^T A (x - center) <= 1 }` for a symmetric
/// positive-definite rational `A`; its surface is where the form equals one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ellipsoid {
    a: RatMatrix,
    center: RatVector,
}

impl Ellipsoid {
    pub fn new(a: RatMatrix, center: RatVector) -> Result<Self> {
        if a.rows() != a.cols() || a.rows() != center.len() {
            return Err(Error::DimensionMismatch { expected: center.len(), actual: a.rows() });
        }
        if !a.is_symmetric() || !a.leading_minors().iter().all(Signed::is_positive) {
            return Err(Error::NotPositiveDefinite);
        }
        Ok(Self { a, center })
    }

    /// The ball `|x - center|^2 <= radius_sq`.
    pub fn ball(center: RatVector, radius_sq: ExactScalar) -> Result<Self> {
        if !radius_sq.is_positive() {
            return Err(Error::NotPositiveDefinite);
        }
        let d = center.len();
        Self::new(RatMatrix::identity(d).scale(&(BigRational::one() / radius_sq)), center)
    }

    pub fn dim(&self) -> usize {
        self.center.len()
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.a
    }

    pub fn center(&self) -> &RatVector {
        &self.center
    }

    /// `(x - center)^T A (x - center)`.
    pub fn form(&self, x: &[ExactScalar]) -> ExactScalar {
        let u: RatVector = x.iter().zip(&self.center).map(|(a, b)| a - b).collect();
        crate::exact::dot_rat(&u, &self.a.mul_vec(&u))
    }

    pub fn contains(&self, x: &[ExactScalar]) -> bool {
        self.form(x) <= BigRational::one()
    }

    pub fn on_surface(&self, x: &[ExactScalar]) -> bool {
        self.form(x).is_one()
    }

    /// Image under the homothety with the given factor centred at `p`.
    pub fn homothety(&self, p: &[ExactScalar], factor: &ExactScalar) -> Self {
        let center = p.iter().zip(&self.center).map(|(pi, ci)| pi + factor * (ci - pi)).collect();
        let a = self.a.scale(&(BigRational::one() / (factor * factor)));
        Self { a, center }
    }

    pub fn translate(&self, v: &[ExactScalar]) -> Self {
        Self { a: self.a.clone(), center: self.center.iter().zip(v).map(|(c, x)| c + x).collect() }
    }

    /// The same solid with the form divided by `k`, i.e. scaled by `sqrt(k)`
    /// about the center.
    pub fn scale_form(&self, k: &ExactScalar) -> Self {
        Self { a: self.a.scale(&(BigRational::one() / k)), center: self.center.clone() }
    }
}

/// Points of `lattice` in the solid (or only on the surface), in lattice
/// coordinates, sorted by ambient position.
///
/// Exact Fincke-Pohst enumeration: the form in lattice coordinates is
/// written as `sum_i q_ii (u_i + sum_{j>i} q_ij u_j)^2` and coordinates are
/// fixed from the last to the first, each ranging over the integers whose
/// partial sum stays within the budget. Interval ends are found by stepping
/// outward from the conditional center, so no square roots are taken.
pub(crate) fn lattice_point_coords(e: &Ellipsoid, lattice: &AffineLattice, solid: bool) -> Vec<IntVector> {
    let n = e.dim();
    assert_eq!(lattice.dim(), n, "lattice and ellipsoid dimensions differ");
    let b = lattice.basis();
    let g = b.transpose().mul(&e.a).mul(b);
    let y0 = lattice.rational_coords(&e.center);

    let mut q: Vec<Vec<ExactScalar>> = g.row_vecs();
    for i in 0..n {
        for j in i + 1..n {
            q[j][i] = q[i][j].clone();
            q[i][j] = &q[i][j] / &q[i][i];
        }
        for k in i + 1..n {
            for l in k..n {
                let t = &q[k][i] * &q[i][l];
                q[k][l] -= t;
            }
        }
    }

    struct Walk<'a> {
        q: &'a [Vec<ExactScalar>],
        y0: &'a [ExactScalar],
        solid: bool,
        y: Vec<i64>,
        out: Vec<IntVector>,
    }
    impl Walk<'_> {
        fn level(&mut self, i: usize, budget: ExactScalar) {
            let n = self.y.len();
            let mut center = self.y0[i].clone();
            for j in i + 1..n {
                center -= &self.q[i][j] * (int(self.y[j]) - &self.y0[j]);
            }
            let qii = &self.q[i][i];
            let cost = |v: i64| {
                let t = int(v) - &center;
                qii * &t * &t
            };
            let start = center.floor().to_integer();
            let start: i64 = num_traits::ToPrimitive::to_i64(&start).expect("coordinate fits");
            for dir in [-1i64, 1] {
                let mut v = if dir < 0 { start } else { start + 1 };
                loop {
                    let c = cost(v);
                    if c > budget {
                        break;
                    }
                    self.y[i] = v;
                    let rest = &budget - c;
                    if i == 0 {
                        if self.solid || rest.is_zero() {
                            self.out.push(self.y.clone());
                        }
                    } else {
                        self.level(i - 1, rest);
                    }
                    v += dir;
                }
            }
        }
    }

    let mut walk = Walk { q: &q, y0: &y0, solid, y: vec![0; n], out: Vec::new() };
    if n > 0 {
        walk.level(n - 1, BigRational::one());
    }
    let mut out = walk.out;
    out.sort_by_cached_key(|y| lattice.from_coords(y));
    out
}

/// All points of `lattice` in the solid ellipsoid (or exactly on its
/// surface when `solid` is false), sorted lexicographically.
pub fn ellipsoid_lattice_points(e: &Ellipsoid, lattice: &AffineLattice, solid: bool) -> Vec<RatVector> {
    lattice_point_coords(e, lattice, solid).iter().map(|y| lattice.from_coords(y)).collect()
}

/// The convex hull of the lattice points in the solid ellipsoid.
pub fn hull_of_ellipsoid(e: &Ellipsoid, lattice: &AffineLattice) -> Result<LatticePolytope> {
    let pts = lattice_point_coords(e, lattice, true);
    if pts.is_empty() {
        return Err(Error::EmptyEllipsoid);
    }
    LatticePolytope::from_lattice_points(lattice.clone(), pts)
}
