//! Pointed rational cones: corner cones of polytopes, Hilbert bases, the
//! very-ample test and unimodular Hilbert triangulations of 3-cones.

mod hilbert;
mod sebo;

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::exact::small;
use crate::exact::{AffineLattice, ExactScalar, IntVector, RatVector};
use crate::polytope::{AffineFrame, LatticePolytope};

pub use hilbert::{hilbert_basis, HilbertBasis};
pub use sebo::{sebo_triangulation, vertex_cover_simplices, SeboTriangulation};
pub(crate) use sebo::vertex_cover_coords;

/// A pointed cone generated by lattice vectors, stored in lattice coordinates.
#[derive(Clone, Debug)]
pub struct RationalCone {
    lattice: AffineLattice,
    rays: Vec<IntVector>,
    supports: Vec<IntVector>,
    frame: AffineFrame,
    local_rays: Vec<IntVector>,
    local_supports: Vec<IntVector>,
    hilbert: OnceLock<Vec<IntVector>>,
}

impl PartialEq for RationalCone {
    fn eq(&self, other: &Self) -> bool {
        self.lattice == other.lattice && self.rays == other.rays
    }
}

impl RationalCone {
    /// The cone generated by `generators` (lattice coordinates of `lattice`).
    /// Generators are made primitive and redundant ones are dropped.
    pub fn new(lattice: &AffineLattice, generators: &[IntVector]) -> Result<Self> {
        let n = lattice.dim();
        if generators.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            if g.len() != n {
                return Err(Error::DimensionMismatch { expected: n, actual: g.len() });
            }
            gens.push(crate::exact::primitive(g)?);
        }
        gens.sort();
        gens.dedup();

        let mut pts = vec![vec![0; n]];
        pts.extend(gens.iter().cloned());
        let frame = AffineFrame::new(&pts);
        let k = frame.dim();
        let local: Vec<IntVector> =
            gens.iter().map(|g| frame.local_direction(g).expect("generator in its span")).collect();

        // the cone is pointed iff the origin is a vertex of conv(0, generators)
        let mut hull_pts = vec![vec![0; k]];
        hull_pts.extend(local.iter().cloned());
        let hull = LatticePolytope::from_coords(AffineLattice::standard(k), hull_pts)
            .expect("nonempty point set");
        let zero = vec![0; k];
        if !hull.vertex_coords().contains(&zero) {
            return Err(Error::NotPointed);
        }
        let mut local_supports: Vec<IntVector> = hull
            .facets()
            .iter()
            .filter(|f| f.offset == 0)
            .map(|f| small::scale(&f.normal, -1))
            .collect();
        local_supports.sort();

        let mut rays = Vec::new();
        let mut local_rays = Vec::new();
        for (g, z) in gens.iter().zip(&local) {
            let tight: Vec<IntVector> =
                local_supports.iter().filter(|s| small::dot(s, z) == 0).cloned().collect();
            let extreme = if k == 1 { true } else { small::rank(&tight) == k - 1 };
            if extreme {
                rays.push(g.clone());
                local_rays.push(z.clone());
            }
        }
        let supports = local_supports.iter().map(|s| frame.pull_back(s)).collect();
        Ok(Self {
            lattice: lattice.translations(),
            rays,
            supports,
            frame,
            local_rays,
            local_supports,
            hilbert: OnceLock::new(),
        })
    }

    /// The corner cone `R_+(P - v)` at a vertex `v` of `p`.
    pub fn corner(p: &LatticePolytope, v: &[ExactScalar]) -> Result<Self> {
        let y = p.lattice().to_coords(v).map_err(|_| Error::NotAVertex)?;
        Self::corner_at_coords(p, &y)
    }

    pub(crate) fn corner_at_coords(p: &LatticePolytope, y: &[i64]) -> Result<Self> {
        if !p.vertex_coords().iter().any(|w| w == y) {
            return Err(Error::NotAVertex);
        }
        if p.num_vertices() == 1 {
            return Err(Error::EmptyPointSet);
        }
        let gens: Vec<IntVector> =
            p.vertex_coords().iter().filter(|w| *w != y).map(|w| small::sub(w, y)).collect();
        Self::new(p.lattice(), &gens)
    }

    pub fn lattice(&self) -> &AffineLattice {
        &self.lattice
    }

    pub fn dim(&self) -> usize {
        self.frame.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.lattice.dim()
    }

    /// Primitive extreme rays in lattice coordinates, sorted.
    pub fn rays(&self) -> &[IntVector] {
        &self.rays
    }

    /// Support forms: the cone is `{ y : s . y >= 0 }` inside its linear span.
    pub fn supports(&self) -> &[IntVector] {
        &self.supports
    }

    /// Equations `row . y = 0` cutting out the linear span.
    pub fn equations(&self) -> Vec<IntVector> {
        self.frame.equations().into_iter().map(|(r, _)| r).collect()
    }

    pub(crate) fn frame(&self) -> &AffineFrame {
        &self.frame
    }

    pub(crate) fn local_rays(&self) -> &[IntVector] {
        &self.local_rays
    }

    pub(crate) fn local_supports(&self) -> &[IntVector] {
        &self.local_supports
    }

    pub fn contains_coords(&self, y: &[i64]) -> bool {
        match self.frame.local_direction(y) {
            Some(z) => self.contains_local(&z),
            None => false,
        }
    }

    pub(crate) fn contains_local(&self, z: &[i64]) -> bool {
        self.local_supports.iter().all(|s| small::dot(s, z) >= 0)
    }

    /// Ambient vectors of the rays.
    pub fn ambient_rays(&self) -> Vec<RatVector> {
        self.rays
            .iter()
            .map(|r| {
                let y: RatVector = r.iter().map(|&x| crate::exact::int(x)).collect();
                self.lattice.direction_from_coords(&y)
            })
            .collect()
    }

    /// Multiplicity of a simplicial cone: `|det|` of its rays in the lattice
    /// of its span. `None` for non-simplicial cones.
    pub fn multiplicity(&self) -> Option<num_bigint::BigInt> {
        if self.local_rays.len() != self.dim() {
            return None;
        }
        Some(num_traits::Signed::abs(&small::det(&self.local_rays)))
    }

    pub fn is_unimodular(&self) -> bool {
        self.multiplicity().is_some_and(|m| num_traits::One::is_one(&m))
    }
}

/// The cone `R_+(P - v)` at a vertex `v` (ambient coordinates).
pub fn corner_cone(p: &LatticePolytope, v: &[ExactScalar]) -> Result<RationalCone> {
    RationalCone::corner(p, v)
}

/// Outcome of the very-ample test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VeryAmpleReport {
    pub is_very_ample: bool,
    /// a vertex `v` (ambient) and a Hilbert basis element `h` of its corner
    /// cone (lattice coordinates) with `v + h` outside the polytope
    pub witness: Option<(RatVector, IntVector)>,
}

impl VeryAmpleReport {
    pub fn into_result(self) -> Result<()> {
        match self.witness {
            None => Ok(()),
            Some((vertex, hilbert)) => Err(Error::NotVeryAmple { vertex, hilbert }),
        }
    }
}

/// Tests whether every corner Hilbert basis lies in the shifted polytope.
pub fn is_very_ample(p: &LatticePolytope) -> VeryAmpleReport {
    for v in p.vertex_coords() {
        if let Some(h) = escaping_hilbert_element(p, v) {
            return VeryAmpleReport {
                is_very_ample: false,
                witness: Some((p.lattice().from_coords(v), h)),
            };
        }
    }
    VeryAmpleReport { is_very_ample: true, witness: None }
}

/// The first corner Hilbert element at `v` with `v + h` outside `p`.
pub(crate) fn escaping_hilbert_element(p: &LatticePolytope, v: &[i64]) -> Option<IntVector> {
    if p.num_vertices() == 1 {
        return None;
    }
    let cone = RationalCone::corner_at_coords(p, v).expect("v is a vertex");
    let hb = hilbert_basis(&cone).expect("corner cones are pointed");
    hb.elements.into_iter().find(|h| !p.contains_coords(&small::add(v, h)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_vec;

    fn std_cone(gens: &[&[i64]]) -> Result<RationalCone> {
        let d = gens[0].len();
        RationalCone::new(&AffineLattice::standard(d), &gens.iter().map(|g| g.to_vec()).collect::<Vec<_>>())
    }

    fn poly(pts: &[&[i64]]) -> LatticePolytope {
        let d = pts[0].len();
        LatticePolytope::from_coords(AffineLattice::standard(d), pts.iter().map(|p| p.to_vec()).collect())
            .unwrap()
    }

    pub(crate) fn cube() -> LatticePolytope {
        poly(&[
            &[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 0],
            &[0, 0, 1], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1],
        ])
    }

    #[test]
    fn cones_drop_redundant_generators() {
        let c = std_cone(&[&[1, 0], &[2, 2], &[0, 3], &[1, 1]]).unwrap();
        assert_eq!(c.rays(), &[vec![0, 1], vec![1, 0]]);
        assert_eq!(c.supports().len(), 2);
        assert!(c.contains_coords(&[3, 1]));
        assert!(!c.contains_coords(&[-1, 1]));
        assert_eq!(std_cone(&[&[1, 0], &[-1, 0]]).unwrap_err(), Error::NotPointed);
        assert_eq!(std_cone(&[&[1, 0], &[0, 1], &[-1, -1]]).unwrap_err(), Error::NotPointed);
        assert_eq!(std_cone(&[&[0, 0]]).unwrap_err(), Error::ZeroVector);
    }

    #[test]
    fn lower_dimensional_cones() {
        let c = std_cone(&[&[1, 0, 1], &[0, 1, 1]]).unwrap();
        assert_eq!(c.dim(), 2);
        assert!(c.is_unimodular());
        assert!(c.contains_coords(&[1, 1, 2]));
        assert!(!c.contains_coords(&[1, 1, 1]));
        let ray = std_cone(&[&[2, 4]]).unwrap();
        assert_eq!(ray.rays(), &[vec![1, 2]]);
    }

    #[test]
    fn corner_cones() {
        let c = corner_cone(&cube(), &rat_vec(&[0, 0, 0])).unwrap();
        assert_eq!(c.rays(), &[vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
        let reeve = poly(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 2]]);
        let c = corner_cone(&reeve, &rat_vec(&[0, 0, 0])).unwrap();
        assert_eq!(c.rays(), &[vec![0, 1, 0], vec![1, 0, 0], vec![1, 1, 2]]);
        assert_eq!(c.multiplicity(), Some(2.into()));
        let tri = poly(&[&[0, 0], &[1, 0], &[0, 1]]);
        let c = corner_cone(&tri, &rat_vec(&[1, 0])).unwrap();
        assert_eq!(c.rays(), &[vec![-1, 0], vec![-1, 1]]);
        assert_eq!(corner_cone(&tri, &[crate::exact::rat(1, 2), crate::exact::int(0)]), Err(Error::NotAVertex));
        assert_eq!(corner_cone(&cube(), &rat_vec(&[2, 0, 0])).unwrap_err(), Error::NotAVertex);
    }

    #[test]
    fn very_ample() {
        assert!(is_very_ample(&cube()).is_very_ample);
        let reeve = poly(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 2]]);
        let r = is_very_ample(&reeve);
        assert!(!r.is_very_ample);
        assert_eq!(r.witness, Some((rat_vec(&[0, 0, 0]), vec![1, 1, 1])));
        assert!(matches!(r.into_result(), Err(Error::NotVeryAmple { .. })));
    }

    #[test]
    fn cube_times_polygon_is_very_ample() {
        // unit square times a normal hexagon-like polygon, in 4D
        let polygon: [[i64; 2]; 5] = [[0, 0], [2, 0], [3, 1], [1, 2], [0, 1]];
        let mut pts = Vec::new();
        for a in 0..2 {
            for b in 0..2 {
                for p in &polygon {
                    pts.push(vec![a, b, p[0], p[1]]);
                }
            }
        }
        let p = LatticePolytope::from_coords(AffineLattice::standard(4), pts).unwrap();
        assert!(is_very_ample(&p).is_very_ample);
    }
}
