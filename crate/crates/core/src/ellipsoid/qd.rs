use num_rational::BigRational;
use num_traits::Zero;

use super::set::{peel, EllipsoidalSet};
use super::{lattice_point_coords, Ellipsoid};
use crate::error::{Error, Result};
use crate::exact::{int, lcm_of_denominators, rat, small, to_i64, AffineLattice, IntVector, RatMatrix, RatVector};
use crate::normality::{is_normal, Sumsets};
use crate::polytope::{LatticePolytope, Simplex};

/// The half-integer family in dimension `d`: the lattice
/// `Z^d + Z (1/2, ..., 1/2)`, the ball through the vertices of the unit cube,
/// the hull `P` of its lattice points, the hull `Q` of those points without
/// the all-ones vector, the simplex `Delta` spanned by the all-ones vector
/// with one coordinate zeroed, and its barycenter `beta`.
#[derive(Clone, Debug)]
pub struct QdFamily {
    pub d: usize,
    pub lattice: AffineLattice,
    pub ball: Ellipsoid,
    pub p: LatticePolytope,
    pub q: LatticePolytope,
    pub delta: Simplex,
    pub beta: RatVector,
    /// `Delta` spans a facet of `Q`
    pub delta_is_facet: bool,
    /// the lattice points of `Q` on that facet are exactly the vertices of `Delta`
    pub delta_is_empty: bool,
}

impl QdFamily {
    pub fn all_ones(&self) -> RatVector {
        vec![int(1); self.d]
    }

    /// `Q(d) ∩ Λ(d)` as an ellipsoidal set, by peeling the all-ones point
    /// off the lattice points of the ball.
    pub fn q_set(&self) -> Result<EllipsoidalSet> {
        let full = EllipsoidalSet::from_ellipsoid(self.ball.clone(), &self.lattice);
        peel(&full, &self.all_ones())
    }
}

/// The outer normal `(1, ..., 1)` of `Delta` in lattice coordinates, cleared
/// of denominators, with the matching offset.
fn delta_inequality(lattice: &AffineLattice, d: usize) -> Result<(IntVector, i64)> {
    let b = lattice.basis();
    let normal: RatVector = (0..d).map(|j| b.column(j).iter().sum()).collect();
    let den = BigRational::from_integer(lcm_of_denominators(&normal));
    let normal = normal.iter().map(|x| to_i64(&(x * &den).to_integer())).collect::<Result<_>>()?;
    let offset = to_i64(&(int(d as i64 - 1) * &den).to_integer())?;
    Ok((normal, offset))
}

/// Builds the family for `d >= 5` and checks that `Delta` is a facet of `Q`
/// whose only lattice points are its vertices.
pub fn build_qd_family(d: usize) -> Result<QdFamily> {
    if d < 5 {
        return Err(Error::DimensionTooSmall(d));
    }
    let lattice = AffineLattice::half_integer(d);
    let ball = Ellipsoid::ball(vec![rat(1, 2); d], rat(d as i64, 4))?;
    let pts = lattice_point_coords(&ball, &lattice, true);
    let ones = lattice.to_coords(&vec![int(1); d])?;
    let rest: Vec<IntVector> = pts.iter().filter(|y| **y != ones).cloned().collect();
    let p = LatticePolytope::from_lattice_points(lattice.clone(), pts)?;
    let q = LatticePolytope::from_lattice_points(lattice.clone(), rest)?;

    let delta_vertices: Vec<IntVector> = (0..d)
        .map(|i| {
            let v: RatVector = (0..d).map(|j| if i == j { int(0) } else { int(1) }).collect();
            lattice.to_coords(&v)
        })
        .collect::<Result<_>>()?;
    let delta = Simplex::from_coords(lattice.clone(), delta_vertices.clone())?;
    let beta = vec![rat(d as i64 - 1, d as i64); d];

    let (normal, offset) = delta_inequality(&lattice, d)?;
    let delta_is_facet = q.is_facet_inequality(&normal, offset);
    let delta_is_empty = match q.tight_generators(&normal, offset) {
        Some(mut tight) => {
            let mut expected = delta_vertices;
            tight.sort();
            expected.sort();
            tight == expected
        }
        None => false,
    };
    Ok(QdFamily { d, lattice, ball, p, q, delta, beta, delta_is_facet, delta_is_empty })
}

/// Integer vectors `a` with `|a|^2 <= d/4` and `sum a >= d/2 - 1`, found by
/// enumerating the ball of squared radius `d/4`.
pub fn corner_inequality_solutions(d: usize) -> Vec<IntVector> {
    let ball = Ellipsoid::ball(vec![int(0); d], rat(d as i64, 4)).expect("positive radius");
    lattice_point_coords(&ball, &AffineLattice::standard(d), true)
        .into_iter()
        .filter(|a| 2 * a.iter().sum::<i64>() >= d as i64 - 2)
        .collect()
}

/// The integers `k` with `(1/2, ..., 1/2) + k e_i` in the ball (hence in
/// `P(d) ∩ Λ(d)`), as an inclusive range. Independent of `i` by symmetry,
/// which the caller may confirm with [`half_integer_ray_contains`].
pub fn half_integer_ray_range(d: usize) -> (i64, i64) {
    let inside = |k: i64| half_integer_ray_contains(d, 0, k);
    let mut lo = 0;
    while inside(lo - 1) {
        lo -= 1;
    }
    let mut hi = 0;
    while inside(hi + 1) {
        hi += 1;
    }
    (lo, hi)
}

/// Whether `(1/2, ..., 1/2) + k e_i` lies in the ball of the family.
pub fn half_integer_ray_contains(d: usize, i: usize, k: i64) -> bool {
    let ball = Ellipsoid::ball(vec![rat(1, 2); d], rat(d as i64, 4)).expect("positive radius");
    let mut x = vec![rat(1, 2); d];
    x[i] += int(k);
    ball.contains(&x)
}

/// Findings of [`verify_counterexample`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounterexampleReport {
    pub d: usize,
    /// `#(Q(d) ∩ Λ(d))`
    pub lattice_points: usize,
    /// number of summands, `d/2`
    pub c: i64,
    /// `(d/2) beta`
    pub target: RatVector,
    /// the target is a lattice point of `(d/2) Q(d)`
    pub target_in_dilate: bool,
    /// the target is a sum of `d/2` lattice points of `Q(d)`
    pub representable: bool,
    /// `gp(Q(d))` is the whole lattice
    pub gp_is_lattice: bool,
    pub is_normal: bool,
    pub witness: Option<(i64, RatVector)>,
    /// the full normality test was run (only for `d <= 6`); otherwise the
    /// verdict rests on the target alone
    pub normality_exhaustive: bool,
}

/// Whether `target` is a sum of `c` of the `generators`, by meeting in the
/// middle of two sumsets.
pub(crate) fn is_sum_of(generators: &[IntVector], c: i64, target: &[i64]) -> bool {
    let left_terms = c / 2;
    let right_terms = c - left_terms;
    let mut right = Sumsets::new(generators);
    for _ in 1..right_terms {
        right.step();
    }
    if left_terms == 0 {
        return right.contains(target);
    }
    let mut left = Sumsets::new(generators);
    for _ in 1..left_terms {
        left.step();
    }
    let found = left.iter().any(|s| right.contains(&small::sub(target, s)));
    found
}

/// Checks the non-normality certificate of `Q(d)` for even `d >= 6`: the
/// point `(d/2) beta` lies in `(d/2) Q(d)` but is no sum of `d/2` lattice
/// points of `Q(d)`, while `gp(Q(d))` is the full lattice.
pub fn verify_counterexample(d: usize) -> Result<CounterexampleReport> {
    if d < 6 || d % 2 == 1 {
        return Err(Error::DimensionNotEvenAtLeast6(d));
    }
    let fam = build_qd_family(d)?;
    let c = (d / 2) as i64;
    let target: RatVector = fam.beta.iter().map(|b| b * int(c)).collect();
    let lattice = &fam.lattice;

    // beta is the barycenter of the vertices of Delta, which are lattice
    // points of Q, so c * beta is in c * Q whenever it is a lattice point
    let gens = fam.q.lattice_point_coords();
    let vertices_in_q = fam.delta.vertex_coords().iter().all(|v| gens.contains(v));
    let mut barycenter = vec![BigRational::zero(); d];
    for v in fam.delta.vertices() {
        for (b, x) in barycenter.iter_mut().zip(v) {
            *b += x / int(d as i64);
        }
    }
    let target_in_dilate = vertices_in_q && barycenter == fam.beta && lattice.contains(&target);

    // the dilate's shift is c * shift, which vanishes for this lattice
    let target_coords = lattice.to_coords(&target)?;
    let representable = is_sum_of(gens, c, &target_coords);
    let gp_is_lattice = fam.q.gp().is_parent();

    let (is_normal_verdict, witness, exhaustive) = if d <= 6 {
        let r = is_normal(&fam.q);
        (r.is_normal, r.witness, true)
    } else if target_in_dilate && !representable {
        (false, Some((c, target.clone())), false)
    } else {
        (true, None, false)
    };
    Ok(CounterexampleReport {
        d,
        lattice_points: gens.len(),
        c,
        target,
        target_in_dilate,
        representable,
        gp_is_lattice,
        is_normal: is_normal_verdict,
        witness,
        normality_exhaustive: exhaustive,
    })
}

/// The exact linear map taking `lattice` onto `Z^d`.
pub fn lattice_isomorphism_to_standard(lattice: &AffineLattice) -> Result<RatMatrix> {
    lattice.isomorphism_to_standard()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_vec;

    #[test]
    fn family_in_dimension_six() {
        let f = build_qd_family(6).unwrap();
        assert_eq!(f.p.num_lattice_points(), 77);
        assert_eq!(f.q.num_lattice_points(), 76);
        assert!(f.delta_is_facet);
        assert!(f.delta_is_empty);
        assert_eq!(f.delta.vertex_coords().len(), 6);
    }

    #[test]
    fn small_dimensions_are_rejected() {
        assert_eq!(build_qd_family(4).unwrap_err(), Error::DimensionTooSmall(4));
        assert_eq!(verify_counterexample(7).unwrap_err(), Error::DimensionNotEvenAtLeast6(7));
    }

    #[test]
    fn ray_ranges() {
        assert_eq!(half_integer_ray_range(5), (-1, 1));
        assert_eq!(half_integer_ray_range(4), (-1, 1));
        assert_eq!(half_integer_ray_range(9), (-1, 1));
        assert_eq!(half_integer_ray_range(16), (-2, 2));
    }

    #[test]
    fn corner_inequality_has_no_solutions() {
        for d in 5..=8 {
            assert!(corner_inequality_solutions(d).is_empty());
        }
        assert!(!corner_inequality_solutions(4).is_empty());
    }

    #[test]
    fn sums() {
        let g = vec![vec![0, 0], vec![1, 0], vec![0, 1]];
        assert!(is_sum_of(&g, 3, &[1, 1]));
        assert!(!is_sum_of(&g, 3, &[2, 2]));
        assert!(is_sum_of(&g, 1, &[0, 1]));
    }

    #[test]
    fn standard_isomorphism() {
        let t = lattice_isomorphism_to_standard(&AffineLattice::half_integer(2)).unwrap();
        assert_eq!(t.mul_vec(&rat_vec(&[1, 0])), rat_vec(&[1, 0]));
        assert_eq!(t.mul_vec(&[rat(1, 2), rat(1, 2)]), rat_vec(&[0, 1]));
    }
}
