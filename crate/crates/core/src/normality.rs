//! Normality of lattice polytopes, one-point containment steps, and lifting
//! covers to unimodular pyramids.

use std::collections::HashSet;

use num_rational::BigRational;

use crate::cones::{hilbert_basis, RationalCone};
use crate::error::{Error, Result};
use crate::exact::small;
use crate::exact::{IntVector, RatVector};
use crate::polytope::{is_unimodular_pyramid, LatticePolytope, Simplex};

/// Outcome of a normality test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalityReport {
    pub is_normal: bool,
    /// `(c, x)`: a lattice point `x` of `cP` (ambient coordinates) that is
    /// not a sum of `c` lattice points of `P`
    pub witness: Option<(i64, RatVector)>,
}

/// Largest dilation factor examined by [`is_normal`].
pub fn degree_bound(p: &LatticePolytope) -> i64 {
    (p.dim() as i64 - 1).max(2)
}

/// Ambient position of a point of coordinate space `c * P`: the sum of `c`
/// lattice points has shift `c * shift`.
pub(crate) fn ambient_of_sum(p: &LatticePolytope, c: i64, y: &[i64]) -> RatVector {
    let l = p.lattice();
    let lin: RatVector = y.iter().map(|&v| crate::exact::int(v)).collect();
    l.direction_from_coords(&lin)
        .into_iter()
        .zip(l.shift())
        .map(|(a, s)| a + s * BigRational::from_integer(c.into()))
        .collect()
}

/// The set of sums of `c` lattice points, for `c = 1, 2, ...`, built
/// incrementally.
pub(crate) struct Sumsets<'a> {
    generators: &'a [IntVector],
    current: HashSet<IntVector>,
    pub c: i64,
}

impl<'a> Sumsets<'a> {
    pub fn new(generators: &'a [IntVector]) -> Self {
        Self { generators, current: generators.iter().cloned().collect(), c: 1 }
    }

    pub fn step(&mut self) {
        let mut next = HashSet::with_capacity(self.current.len() * 4);
        for a in &self.current {
            for g in self.generators {
                next.insert(small::add(a, g));
            }
        }
        self.current = next;
        self.c += 1;
    }

    pub fn contains(&self, y: &[i64]) -> bool {
        self.current.contains(y)
    }

    pub fn iter(&self) -> impl Iterator<Item = &IntVector> {
        self.current.iter()
    }
}

/// Normality test: every lattice point of `cP` must be a sum of `c` lattice
/// points of `P`, checked for `2 <= c <= max(2, dim P - 1)`.
///
/// The witness is the lexicographically smallest (ambient order) offending
/// point of the smallest offending dilation.
pub fn is_normal(p: &LatticePolytope) -> NormalityReport {
    let pts = p.lattice_point_coords();
    let mut sums = Sumsets::new(pts);
    for c in 2..=degree_bound(p) {
        sums.step();
        let missing: Vec<IntVector> =
            p.dilated_point_coords(c).into_iter().filter(|y| !sums.contains(y)).collect();
        if let Some(x) = missing.iter().map(|y| ambient_of_sum(p, c, y)).min() {
            return NormalityReport { is_normal: false, witness: Some((c, x)) };
        }
    }
    NormalityReport { is_normal: true, witness: None }
}

/// Independent normality test through the Hilbert basis of the cone over
/// `P x {1}`: the polytope is normal iff every Hilbert basis element has
/// height one.
pub fn is_normal_by_hilbert_basis(p: &LatticePolytope) -> bool {
    let gens: Vec<IntVector> = p
        .vertex_coords()
        .iter()
        .map(|v| {
            let mut g = v.clone();
            g.push(1);
            g
        })
        .collect();
    let cone = RationalCone::new(&p.lattice().times_integers(), &gens).expect("cone over a polytope is pointed");
    let hb = hilbert_basis(&cone).expect("pointed cone");
    hb.elements.iter().all(|h| *h.last().expect("nonempty") == 1)
}

/// `Q <= P`: `Q` is contained in `P` and `P` has exactly one more lattice point.
pub fn is_elementary_relation(q: &LatticePolytope, p: &LatticePolytope) -> bool {
    q.lattice().same_lattice(p.lattice())
        && q.vertex_coords().iter().all(|v| p.contains_coords(v))
        && p.num_lattice_points() == q.num_lattice_points() + 1
}

/// Lifts a unimodular cover of the base of a unimodular pyramid `P` with the
/// given apex to a cover of `P` by joining every simplex with the apex.
pub fn pyramid_cover_lift(
    base_cover: &[Simplex],
    p: &LatticePolytope,
    apex: &[crate::exact::ExactScalar],
) -> Result<Vec<Simplex>> {
    let apex = p.lattice().to_coords(apex).map_err(|_| Error::NotUnimodularPyramid)?;
    pyramid_lift_coords(base_cover, p, &apex)
}

pub(crate) fn pyramid_lift_coords(
    base_cover: &[Simplex],
    p: &LatticePolytope,
    apex: &[i64],
) -> Result<Vec<Simplex>> {
    if !p.vertex_coords().iter().any(|v| v == apex) {
        return Err(Error::NotUnimodularPyramid);
    }
    let rest: Vec<IntVector> = p.vertex_coords().iter().filter(|v| *v != apex).cloned().collect();
    if rest.is_empty() {
        return Err(Error::NotUnimodularPyramid);
    }
    let q = LatticePolytope::from_coords(p.lattice().clone(), rest)?;
    if !is_unimodular_pyramid(p, &q) {
        return Err(Error::NotUnimodularPyramid);
    }
    base_cover
        .iter()
        .map(|s| {
            if s.dim() != q.dim() || !s.vertex_coords().iter().all(|v| q.contains_coords(v)) {
                return Err(Error::PreconditionUnmet("cover simplex is not a full simplex of the base".into()));
            }
            let mut verts = s.vertex_coords().to_vec();
            verts.push(apex.to_vec());
            let lifted = Simplex::from_coords(p.lattice().clone(), verts)?;
            if !lifted.is_unimodular() {
                return Err(Error::NotUnimodularPyramid);
            }
            Ok(lifted)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat_vec, AffineLattice};

    fn poly(pts: &[&[i64]]) -> LatticePolytope {
        let d = pts[0].len();
        LatticePolytope::from_coords(AffineLattice::standard(d), pts.iter().map(|p| p.to_vec()).collect())
            .unwrap()
    }

    fn cube() -> LatticePolytope {
        let pts: Vec<IntVector> = (0..8).map(|i| vec![i & 1, (i >> 1) & 1, (i >> 2) & 1]).collect();
        LatticePolytope::from_coords(AffineLattice::standard(3), pts).unwrap()
    }

    #[test]
    fn cube_is_normal() {
        let r = is_normal(&cube());
        assert!(r.is_normal);
        assert_eq!(r.witness, None);
        assert!(is_normal_by_hilbert_basis(&cube()));
    }

    #[test]
    fn reeve_simplex_is_not_normal() {
        let reeve = poly(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 2]]);
        let r = is_normal(&reeve);
        assert!(!r.is_normal);
        assert_eq!(r.witness, Some((2, rat_vec(&[1, 1, 1]))));
        assert!(!is_normal_by_hilbert_basis(&reeve));
    }

    #[test]
    fn elementary_relations() {
        let q = poly(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]);
        let p = poly(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert!(is_elementary_relation(&q, &p));
        assert!(!is_elementary_relation(&p, &p));
        let square = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let bigger = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1], &[2, 0]]);
        assert!(is_elementary_relation(&square, &bigger));
        assert!(!is_elementary_relation(&bigger, &square));
    }

    #[test]
    fn pyramid_lifts() {
        let l = AffineLattice::standard(3);
        let p = poly(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1]]);
        let t1 = Simplex::from_coords(l.clone(), vec![vec![0, 0, 0], vec![1, 0, 0], vec![1, 1, 0]]).unwrap();
        let t2 = Simplex::from_coords(l.clone(), vec![vec![0, 0, 0], vec![0, 1, 0], vec![1, 1, 0]]).unwrap();
        let lifted = pyramid_cover_lift(&[t1, t2], &p, &rat_vec(&[0, 0, 1])).unwrap();
        assert_eq!(lifted.len(), 2);
        assert!(lifted.iter().all(|s| s.dim() == 3 && s.is_unimodular()));

        let l2 = AffineLattice::standard(2);
        let tri = poly(&[&[0, 0], &[1, 0], &[0, 1]]);
        let seg = Simplex::from_coords(l2, vec![vec![0, 0], vec![1, 0]]).unwrap();
        assert_eq!(pyramid_cover_lift(&[seg], &tri, &rat_vec(&[0, 1])).unwrap().len(), 1);

        let l1 = AffineLattice::standard(1);
        let unit = poly(&[&[0], &[1]]);
        let pt = Simplex::from_coords(l1, vec![vec![0]]).unwrap();
        let lifted = pyramid_cover_lift(&[pt], &unit, &rat_vec(&[1])).unwrap();
        assert_eq!(lifted.len(), 1);

        let tall = poly(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 2]]);
        assert_eq!(pyramid_cover_lift(&[], &tall, &rat_vec(&[0, 0, 2])), Err(Error::NotUnimodularPyramid));
    }
}
