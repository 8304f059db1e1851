//! Lattice polytopes over an [`AffineLattice`]: exact hulls, faces, lattice
//! points of dilations and the difference group `gp(P)`.
//!
//! All geometry runs in lattice coordinates, and inside the saturated affine
//! hull of the generating points when the polytope is not full-dimensional.

mod enumerate;
mod frame;
mod simplex;
mod triangulate;

use std::collections::{BTreeSet, HashSet};
use std::sync::OnceLock;

use num_rational::BigRational;
use num_traits::Zero;

pub use simplex::{is_unimodular_pyramid, is_unimodular_simplex, Simplex};

pub(crate) use enumerate::{parallelepiped_points, SimplexCone};
pub(crate) use frame::AffineFrame;
pub(crate) use triangulate::placing;

use crate::error::{Error, Result};
use crate::exact::small;
use crate::exact::{AffineLattice, ExactScalar, IntVector, LatticeSubgroup, RatVector};

/// A facet inequality `normal . y <= offset` in lattice coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Facet {
    pub normal: IntVector,
    pub offset: i64,
}

/// A nonempty face, given by the facets containing it and its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceHandle {
    /// indices into [`LatticePolytope::facets`]; empty for the polytope itself
    pub facets: Vec<usize>,
    /// indices into [`LatticePolytope::vertex_coords`]
    pub vertices: Vec<usize>,
    pub dim: usize,
}

#[derive(Clone, Debug)]
struct Hull {
    vertices: Vec<IntVector>,
    vertex_local: Vec<IntVector>,
    local_facets: Vec<(IntVector, i64)>,
    facets: Vec<Facet>,
    facet_vertices: Vec<Vec<usize>>,
    /// simplices of a triangulation, in local coordinates
    simplices: Vec<Vec<IntVector>>,
}

/// The convex hull of finitely many lattice points.
#[derive(Clone, Debug)]
pub struct LatticePolytope {
    lattice: AffineLattice,
    generators: Vec<IntVector>,
    frame: AffineFrame,
    hull: OnceLock<Hull>,
    points: OnceLock<Vec<IntVector>>,
    cones: OnceLock<Vec<SimplexCone>>,
}

/// Convex hull of ambient points, all of which must lie in `lattice`.
pub fn convex_hull(points: &[RatVector], lattice: &AffineLattice) -> Result<LatticePolytope> {
    LatticePolytope::new(points, lattice)
}

fn sort_ambient(lattice: &AffineLattice, pts: &mut Vec<IntVector>) {
    pts.sort_by_cached_key(|y| lattice.from_coords(y));
    pts.dedup();
}

fn dot_rational(n: &[i64], z: &[ExactScalar]) -> ExactScalar {
    n.iter().zip(z).fold(BigRational::zero(), |acc, (&a, b)| acc + BigRational::from_integer(a.into()) * b)
}

impl LatticePolytope {
    pub fn new(points: &[RatVector], lattice: &AffineLattice) -> Result<Self> {
        let coords = points.iter().map(|p| lattice.to_coords(p)).collect::<Result<Vec<_>>>()?;
        Self::from_coords(lattice.clone(), coords)
    }

    /// Hull of points given in lattice coordinates.
    pub fn from_coords(lattice: AffineLattice, coords: Vec<IntVector>) -> Result<Self> {
        let p = Self::lazy(lattice, coords)?;
        p.hull();
        Ok(p)
    }

    fn lazy(lattice: AffineLattice, mut coords: Vec<IntVector>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        if let Some(bad) = coords.iter().find(|c| c.len() != lattice.dim()) {
            return Err(Error::DimensionMismatch { expected: lattice.dim(), actual: bad.len() });
        }
        sort_ambient(&lattice, &mut coords);
        let frame = AffineFrame::new(&coords);
        Ok(Self {
            lattice,
            generators: coords,
            frame,
            hull: OnceLock::new(),
            points: OnceLock::new(),
            cones: OnceLock::new(),
        })
    }

    /// Hull of a point set that is already known to be the full set of
    /// lattice points of its convex hull. The facet description is only
    /// computed if asked for, which keeps high-dimensional instances cheap.
    pub(crate) fn from_lattice_points(lattice: AffineLattice, coords: Vec<IntVector>) -> Result<Self> {
        let p = Self::lazy(lattice, coords)?;
        let _ = p.points.set(p.generators.clone());
        Ok(p)
    }

    pub fn lattice(&self) -> &AffineLattice {
        &self.lattice
    }

    /// Affine dimension.
    pub fn dim(&self) -> usize {
        self.frame.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.lattice.dim()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.frame.is_full()
    }

    pub(crate) fn frame(&self) -> &AffineFrame {
        &self.frame
    }

    /// The generating points, in lattice coordinates.
    pub fn generator_coords(&self) -> &[IntVector] {
        &self.generators
    }

    fn hull(&self) -> &Hull {
        self.hull.get_or_init(|| self.compute_hull())
    }

    fn compute_hull(&self) -> Hull {
        let k = self.frame.dim();
        let local: Vec<IntVector> = self
            .generators
            .iter()
            .map(|y| self.frame.local(y).expect("generator lies in its affine hull"))
            .collect();
        if k == 0 {
            return Hull {
                vertices: vec![self.generators[0].clone()],
                vertex_local: vec![Vec::new()],
                local_facets: Vec::new(),
                facets: Vec::new(),
                facet_vertices: Vec::new(),
                simplices: vec![vec![Vec::new()]],
            };
        }
        let tri = placing(&local);
        let local_facets: Vec<(IntVector, i64)> = tri
            .boundary
            .iter()
            .map(|f| (f.normal.clone(), f.offset))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        debug_assert!(local
            .iter()
            .all(|z| local_facets.iter().all(|(n, o)| small::dot(n, z) <= *o)));

        let mut vertices = Vec::new();
        let mut vertex_local = Vec::new();
        for (y, z) in self.generators.iter().zip(&local) {
            let tight: Vec<IntVector> = local_facets
                .iter()
                .filter(|(n, o)| small::dot(n, z) == *o)
                .map(|(n, _)| n.clone())
                .collect();
            if tight.len() >= k && small::rank(&tight) == k {
                vertices.push(y.clone());
                vertex_local.push(z.clone());
            }
        }
        let facet_vertices: Vec<Vec<usize>> = local_facets
            .iter()
            .map(|(n, o)| {
                (0..vertex_local.len()).filter(|&i| small::dot(n, &vertex_local[i]) == *o).collect()
            })
            .collect();
        let facets = local_facets
            .iter()
            .map(|(n, o)| {
                let normal = self.frame.pull_back(n);
                let offset = o + small::dot(&normal, &self.frame.origin);
                Facet { normal, offset }
            })
            .collect();
        let simplices = tri
            .simplices
            .iter()
            .map(|s| s.iter().map(|&i| local[i].clone()).collect())
            .collect();
        Hull { vertices, vertex_local, local_facets, facets, facet_vertices, simplices }
    }

    /// Vertices in lattice coordinates, sorted by their ambient position.
    pub fn vertex_coords(&self) -> &[IntVector] {
        &self.hull().vertices
    }

    /// Vertices in ambient coordinates, sorted lexicographically.
    pub fn vertices(&self) -> Vec<RatVector> {
        self.vertex_coords().iter().map(|y| self.lattice.from_coords(y)).collect()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_coords().len()
    }

    /// Facet inequalities in lattice coordinates. Together with
    /// [`equations`](Self::equations) they describe the polytope.
    pub fn facets(&self) -> &[Facet] {
        &self.hull().facets
    }

    /// Indices of the vertices on facet `i`.
    pub fn facet_vertices(&self, i: usize) -> &[usize] {
        &self.hull().facet_vertices[i]
    }

    /// Equations `row . y = value` cutting out the affine hull.
    pub fn equations(&self) -> Vec<(IntVector, i64)> {
        self.frame.equations()
    }

    /// Facet inequalities `normal . x <= offset` in ambient coordinates.
    pub fn ambient_facets(&self) -> Vec<(RatVector, ExactScalar)> {
        let basis = self.lattice.basis();
        let shift = self.lattice.shift();
        let inv = basis.inverse().expect("lattice basis is nonsingular");
        self.facets()
            .iter()
            .map(|f| {
                let n: RatVector = f.normal.iter().map(|&a| BigRational::from_integer(a.into())).collect();
                let normal = inv.transpose().mul_vec(&n);
                let offset = BigRational::from_integer(f.offset.into())
                    + crate::exact::dot_rat(&normal, shift);
                (normal, offset)
            })
            .collect()
    }

    pub(crate) fn local_facets(&self) -> &[(IntVector, i64)] {
        &self.hull().local_facets
    }

    pub(crate) fn vertex_local(&self) -> &[IntVector] {
        &self.hull().vertex_local
    }

    /// Simplices of a triangulation of the polytope, in local coordinates.
    pub(crate) fn local_triangulation(&self) -> &[Vec<IntVector>] {
        &self.hull().simplices
    }

    /// Simplices of a triangulation of the polytope, in lattice coordinates.
    pub fn triangulation_coords(&self) -> Vec<Vec<IntVector>> {
        self.local_triangulation()
            .iter()
            .map(|s| s.iter().map(|z| self.frame.global(z)).collect())
            .collect()
    }

    pub fn contains(&self, x: &[ExactScalar]) -> bool {
        x.len() == self.ambient_dim() && self.contains_rational_coords(&self.lattice.rational_coords(x))
    }

    /// Membership of a point given in (rational) lattice coordinates.
    pub fn contains_rational_coords(&self, y: &[ExactScalar]) -> bool {
        match self.frame.local_rational(y) {
            Some(z) => self
                .local_facets()
                .iter()
                .all(|(n, o)| dot_rational(n, &z) <= BigRational::from_integer((*o).into())),
            None => false,
        }
    }

    pub fn contains_coords(&self, y: &[i64]) -> bool {
        match self.frame.local(y) {
            Some(z) => self.local_facets().iter().all(|(n, o)| small::dot(n, &z) <= *o),
            None => false,
        }
    }

    /// Lattice points in lattice coordinates, sorted by ambient position.
    pub fn lattice_point_coords(&self) -> &[IntVector] {
        self.points.get_or_init(|| {
            let mut pts = self.dilated_point_coords(1);
            sort_ambient(&self.lattice, &mut pts);
            pts
        })
    }

    /// All lattice points, exact and sorted lexicographically.
    pub fn lattice_points(&self) -> Vec<RatVector> {
        self.lattice_point_coords().iter().map(|y| self.lattice.from_coords(y)).collect()
    }

    pub fn num_lattice_points(&self) -> usize {
        self.lattice_point_coords().len()
    }

    fn simplex_cones(&self) -> &[SimplexCone] {
        self.cones.get_or_init(|| {
            self.local_triangulation().iter().map(|s| SimplexCone::new(s.clone())).collect()
        })
    }

    /// Integer points of `c` times the polytope in lattice coordinates, that
    /// is, the candidates for sums of `c` lattice points. Sorted
    /// lexicographically.
    pub fn dilated_point_coords(&self, c: i64) -> Vec<IntVector> {
        assert!(c >= 0);
        if c == 0 {
            return vec![vec![0; self.ambient_dim()]];
        }
        let mut local = HashSet::new();
        for cone in self.simplex_cones() {
            cone.dilated_points(c, &mut local);
        }
        let shift = small::scale(&self.frame.origin, c - 1);
        let mut out: Vec<IntVector> =
            local.into_iter().map(|w| small::add(&self.frame.global(&w), &shift)).collect();
        out.sort();
        out
    }

    /// The dilation `c P`. Its lattice has the same translations, shifted by
    /// `c` times the original shift (so unshifted lattices are preserved).
    pub fn dilate(&self, c: i64) -> Result<LatticePolytope> {
        if c <= 0 {
            return Err(Error::PreconditionUnmet(format!("dilation factor must be positive, got {c}")));
        }
        let shift: RatVector =
            self.lattice.shift().iter().map(|s| s * BigRational::from_integer(c.into())).collect();
        let lattice = AffineLattice::new(self.lattice.basis().clone(), shift)?;
        let verts = self.vertex_coords().iter().map(|v| small::scale(v, c)).collect();
        let p = Self::from_coords(lattice, verts)?;
        let mut pts = self.dilated_point_coords(c);
        sort_ambient(&p.lattice, &mut pts);
        let _ = p.points.set(pts);
        Ok(p)
    }

    /// `gp(P)`: the subgroup generated by differences of lattice points, with
    /// an HNF basis in lattice coordinates.
    pub fn gp(&self) -> LatticeSubgroup {
        let pts = self.lattice_point_coords();
        let diffs: Vec<IntVector> = pts[1..].iter().map(|p| small::sub(p, &pts[0])).collect();
        LatticeSubgroup::from_generators(&self.lattice, &diffs)
    }

    /// The generators on the hyperplane `normal . y = offset`, if the
    /// inequality `normal . y <= offset` (lattice coordinates) holds on the
    /// whole polytope.
    pub fn tight_generators(&self, normal: &[i64], offset: i64) -> Option<Vec<IntVector>> {
        let mut tight = Vec::new();
        for g in &self.generators {
            let v = small::dot(normal, g);
            if v > offset {
                return None;
            }
            if v == offset {
                tight.push(g.clone());
            }
        }
        Some(tight)
    }

    /// True iff `normal . y <= offset` is valid and cuts out a facet.
    pub fn is_facet_inequality(&self, normal: &[i64], offset: i64) -> bool {
        match self.tight_generators(normal, offset) {
            Some(tight) if !tight.is_empty() && tight.len() < self.generators.len() => {
                let refs: Vec<&[i64]> = tight.iter().map(Vec::as_slice).collect();
                self.dim() >= 1 && small::affine_rank(&refs) + 1 == self.dim()
            }
            _ => false,
        }
    }

    fn face_from_vertices(&self, vertices: Vec<usize>) -> FaceHandle {
        let hull = self.hull();
        let facets = (0..hull.facet_vertices.len())
            .filter(|&i| vertices.iter().all(|v| hull.facet_vertices[i].binary_search(v).is_ok()))
            .collect();
        let pts: Vec<&[i64]> = vertices.iter().map(|&i| hull.vertex_local[i].as_slice()).collect();
        let dim = small::affine_rank(&pts);
        FaceHandle { facets, vertices, dim }
    }

    /// All nonempty faces, including the polytope itself, ordered by
    /// dimension and then by vertex indices.
    pub fn faces(&self) -> Vec<FaceHandle> {
        let hull = self.hull();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        seen.insert((0..hull.vertices.len()).collect());
        let mut queue: Vec<Vec<usize>> = hull.facet_vertices.clone();
        while let Some(f) = queue.pop() {
            if f.is_empty() || !seen.insert(f.clone()) {
                continue;
            }
            for g in &hull.facet_vertices {
                let h: Vec<usize> = f.iter().copied().filter(|v| g.binary_search(v).is_ok()).collect();
                if !h.is_empty() && !seen.contains(&h) {
                    queue.push(h);
                }
            }
        }
        let mut faces: Vec<FaceHandle> = seen.into_iter().map(|v| self.face_from_vertices(v)).collect();
        faces.sort_by(|a, b| (a.dim, &a.vertices).cmp(&(b.dim, &b.vertices)));
        faces
    }

    /// The unique minimal face containing an ambient point.
    pub fn minimal_face_containing(&self, x: &[ExactScalar]) -> Result<FaceHandle> {
        if x.len() != self.ambient_dim() {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim(), actual: x.len() });
        }
        self.minimal_face_of_coords(&self.lattice.rational_coords(x))
    }

    pub(crate) fn minimal_face_of_coords(&self, y: &[ExactScalar]) -> Result<FaceHandle> {
        let z = self.frame.local_rational(y).ok_or(Error::PointOutsidePolytope)?;
        let hull = self.hull();
        let mut tight = Vec::new();
        for (i, (n, o)) in hull.local_facets.iter().enumerate() {
            let v = dot_rational(n, &z);
            let o = BigRational::from_integer((*o).into());
            if v > o {
                return Err(Error::PointOutsidePolytope);
            }
            if v == o {
                tight.push(i);
            }
        }
        let vertices: Vec<usize> = (0..hull.vertices.len())
            .filter(|v| tight.iter().all(|&f| hull.facet_vertices[f].binary_search(v).is_ok()))
            .collect();
        Ok(self.face_from_vertices(vertices))
    }

    /// True iff an ambient point lies in the relative boundary.
    pub fn on_boundary(&self, x: &[ExactScalar]) -> Result<bool> {
        let f = self.minimal_face_containing(x)?;
        Ok(f.dim < self.dim())
    }

    pub fn face_polytope(&self, face: &FaceHandle) -> LatticePolytope {
        let verts = face.vertices.iter().map(|&i| self.vertex_coords()[i].clone()).collect();
        Self::from_coords(self.lattice.clone(), verts).expect("faces are nonempty")
    }
}
