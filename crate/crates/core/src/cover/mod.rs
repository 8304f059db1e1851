//! Unimodular covers: triangulated faces, joins near boundary points,
//! boundary neighbourhoods of very ample 3-polytopes, covers of lattice
//! points in 3-dimensional ellipsoids, and an exact cover verifier.

mod verify;

use std::collections::{BTreeSet, HashMap};

use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub use verify::{
    cell_cap, verify_boundary_neighbourhood, verify_cover, verify_cover_by_subdivision,
    verify_cover_or_subdivide, verify_cover_with_cap, CoverVerdict, VerifyMethod, DEFAULT_CELL_CAP,
};

use crate::cones::{is_very_ample, vertex_cover_coords};
use crate::ellipsoid::{descent_chain, ellipsoid_lattice_points, Ellipsoid, EllipsoidalSet};
use crate::error::{Error, Result};
use crate::exact::{int, rat, small, AffineLattice, ExactScalar, IntVector, RatVector};
use crate::normality::{is_normal, pyramid_lift_coords};
use crate::polytope::{FaceHandle, LatticePolytope, Simplex};

/// What part of the target a cover is claimed to cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoverScope {
    Full,
    BoundaryNeighbourhood,
}

/// A family of unimodular simplices inside a lattice polytope.
#[derive(Clone, Debug)]
pub struct UnimodularCover {
    pub target: LatticePolytope,
    /// sorted by vertex coordinates, without repetitions
    pub simplices: Vec<Simplex>,
    pub scope: CoverScope,
    /// certified by the exact verifier for the claimed scope
    pub verified: bool,
    /// simplices added after the construction to close verifier gaps
    pub repairs: usize,
}

impl UnimodularCover {
    fn from_coords(
        target: &LatticePolytope,
        simplices: impl IntoIterator<Item = Vec<IntVector>>,
        scope: CoverScope,
    ) -> Result<Self> {
        let set: BTreeSet<Vec<IntVector>> = simplices
            .into_iter()
            .map(|mut s| {
                s.sort();
                s
            })
            .collect();
        let simplices = set
            .into_iter()
            .map(|s| Simplex::from_coords(target.lattice().clone(), s))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { target: target.clone(), simplices, scope, verified: false, repairs: 0 })
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Unimodularity and containment of every simplex.
    pub fn simplices_are_valid(&self) -> bool {
        self.simplices.iter().all(|s| {
            s.is_unimodular() && s.vertex_coords().iter().all(|v| self.target.contains_coords(v))
        })
    }
}

fn cross2(o: &[i64], a: &[i64], b: &[i64]) -> i64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

fn in_triangle(t: &[IntVector], x: &[i64]) -> bool {
    let s = cross2(&t[0], &t[1], &t[2]).signum();
    (0..3).all(|i| cross2(&t[i], &t[(i + 1) % 3], x) * s >= 0)
}

/// Unimodular triangulation of a lattice polytope of dimension at most two,
/// in lattice coordinates. Segments split at their lattice points and points
/// stay as they are.
pub(crate) fn unimodular_triangulation_coords(f: &LatticePolytope) -> Result<Vec<Vec<IntVector>>> {
    let frame = f.frame();
    let mut pts: Vec<IntVector> =
        f.lattice_point_coords().iter().map(|y| frame.local(y).expect("point of the polytope")).collect();
    pts.sort();
    let local: Vec<Vec<IntVector>> = match f.dim() {
        0 => vec![pts],
        1 => pts.windows(2).map(|w| w.to_vec()).collect(),
        2 => {
            let mut tris: Vec<Vec<IntVector>> = f.local_triangulation().to_vec();
            for x in &pts {
                if tris.iter().any(|t| t.contains(x)) {
                    continue;
                }
                let mut next = Vec::with_capacity(tris.len() + 2);
                for t in tris {
                    if !in_triangle(&t, x) {
                        next.push(t);
                        continue;
                    }
                    for k in 0..3 {
                        let (a, b) = (&t[(k + 1) % 3], &t[(k + 2) % 3]);
                        if cross2(a, b, x) != 0 {
                            next.push(vec![a.clone(), b.clone(), x.clone()]);
                        }
                    }
                }
                tris = next;
            }
            tris
        }
        d => return Err(Error::PreconditionUnmet(format!("expected a polygon, got dimension {d}"))),
    };
    let out: Vec<Vec<IntVector>> =
        local.iter().map(|s| s.iter().map(|z| frame.global(z)).collect()).collect();
    Ok(out)
}

/// A triangulation of a lattice polygon (or segment, or point) into
/// unimodular simplices.
pub fn facet_triangulation(f: &LatticePolytope) -> Result<Vec<Simplex>> {
    unimodular_triangulation_coords(f)?
        .into_iter()
        .map(|s| {
            let simplex = Simplex::from_coords(f.lattice().clone(), s)?;
            if simplex.is_unimodular() {
                Ok(simplex)
            } else {
                Err(Error::VerificationFailed("triangulation produced a non-unimodular simplex".into()))
            }
        })
        .collect()
}

struct VertexCovers<'a> {
    p: &'a LatticePolytope,
    cache: HashMap<IntVector, Vec<Vec<IntVector>>>,
}

impl VertexCovers<'_> {
    fn at(&mut self, v: &IntVector) -> Result<&Vec<Vec<IntVector>>> {
        if !self.cache.contains_key(v) {
            let cover = vertex_cover_coords(self.p, v)?;
            self.cache.insert(v.clone(), cover);
        }
        Ok(&self.cache[v])
    }
}

/// Joins of a unimodular cover of the face with the far faces of the
/// corner simplices at its first vertex that meet the face fully.
fn join_face(p: &LatticePolytope, face: &FaceHandle, covers: &mut VertexCovers) -> Result<Vec<Vec<IntVector>>> {
    let fp = p.face_polytope(face);
    let v = p.vertex_coords()[face.vertices[0]].clone();
    let t_f = unimodular_triangulation_coords(&fp)?;
    let mut out = Vec::new();
    for s in covers.at(&v)? {
        let (inside, opposite): (Vec<&IntVector>, Vec<&IntVector>) = s.iter().partition(|y| fp.contains_coords(y));
        if inside.len() != face.dim + 1 {
            continue;
        }
        for tau in &t_f {
            let mut verts: Vec<IntVector> = opposite.iter().map(|y| (*y).clone()).collect();
            verts.extend(tau.iter().cloned());
            let joined = Simplex::from_coords(p.lattice().clone(), verts.clone())?;
            if !joined.is_unimodular() || !verts.iter().all(|y| p.contains_coords(y)) {
                return Err(Error::VerificationFailed("a join simplex is not unimodular".into()));
            }
            out.push(verts);
        }
    }
    Ok(out)
}

/// Unimodular simplices covering a neighbourhood of the boundary point `x`
/// of a very ample 3-polytope: joins of a cover of the minimal face through
/// `x` with the far faces of a vertex cover at one of its vertices.
pub fn join_cover(x: &[ExactScalar], p: &LatticePolytope) -> Result<Vec<Simplex>> {
    if p.dim() != 3 {
        return Err(Error::DimensionNot3(p.dim()));
    }
    let face = p.minimal_face_containing(x)?;
    if face.dim == p.dim() {
        return Err(Error::PointNotOnBoundary);
    }
    let mut covers = VertexCovers { p, cache: HashMap::new() };
    join_face(p, &face, &mut covers)?
        .into_iter()
        .map(|s| Simplex::from_coords(p.lattice().clone(), s))
        .collect()
}

fn boundary_cover_coords(p: &LatticePolytope) -> Result<Vec<Vec<IntVector>>> {
    if p.dim() != 3 {
        return Err(Error::DimensionNot3(p.dim()));
    }
    is_very_ample(p).into_result()?;
    let mut covers = VertexCovers { p, cache: HashMap::new() };
    let mut out = Vec::new();
    for face in p.faces().iter().filter(|f| f.dim < 3) {
        out.extend(join_face(p, face, &mut covers)?);
    }
    Ok(out)
}

/// A cover of a neighbourhood of the boundary of a 3-polytope, which exists
/// exactly when the polytope is very ample. Otherwise the error carries a
/// vertex and a Hilbert basis element of its corner cone escaping the
/// polytope.
///
/// Gaps the verifier finds in the sampled neighbourhoods are closed with
/// further unimodular simplices of `p`; `verified` is false when a gap lies
/// in no unimodular simplex at all.
pub fn boundary_cover(p: &LatticePolytope) -> Result<UnimodularCover> {
    let mut simplices: BTreeSet<Vec<IntVector>> = boundary_cover_coords(p)?
        .into_iter()
        .map(|mut s| {
            s.sort();
            s
        })
        .collect();
    let mut repairs = 0;
    loop {
        let cover = UnimodularCover::from_coords(p, simplices.iter().cloned(), CoverScope::BoundaryNeighbourhood)?;
        let verdict = verify_boundary_neighbourhood(p, &cover.simplices, &rat(15, 16))?;
        let repair = match verdict.witness {
            Some(w) if !verdict.covered => unimodular_simplices_through(p, &w)?.into_iter().next(),
            _ => None,
        };
        match repair {
            Some(mut s) if repairs < BOUNDARY_REPAIR_CAP => {
                s.sort();
                if !simplices.insert(s) {
                    return Err(Error::VerificationFailed("boundary repair repeated a simplex".into()));
                }
                repairs += 1;
            }
            _ => return Ok(UnimodularCover { verified: verdict.covered, repairs, ..cover }),
        }
    }
}

const BOUNDARY_REPAIR_CAP: usize = 256;

/// All unimodular full-dimensional simplices on the lattice points of `p`
/// that contain the local point `w` (given in ambient coordinates).
fn unimodular_simplices_through(p: &LatticePolytope, w: &[ExactScalar]) -> Result<Vec<Vec<IntVector>>> {
    let pts = p.lattice_point_coords();
    let k = p.dim();
    let mut out = Vec::new();
    let mut pick: Vec<usize> = (0..=k).collect();
    if pts.len() <= k {
        return Ok(out);
    }
    loop {
        let verts: Vec<IntVector> = pick.iter().map(|&i| pts[i].clone()).collect();
        let local: Vec<IntVector> = verts.iter().map(|y| p.frame().local(y).expect("inside")).collect();
        let edges: Vec<IntVector> = local[1..].iter().map(|z| small::sub(z, &local[0])).collect();
        if small::det(&edges).abs() == num_bigint::BigInt::from(1) {
            let s = Simplex::from_coords(p.lattice().clone(), verts.clone())?;
            if s.contains(w) {
                out.push(verts);
            }
        }
        // next combination
        let n = pts.len();
        let mut i = k + 1;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if pick[i] < n - (k + 1 - i) {
                break;
            }
        }
        pick[i] += 1;
        for j in i + 1..=k {
            pick[j] = pick[j - 1] + 1;
        }
    }
}

/// Verifies a full cover and closes any gap the verifier reports with a
/// unimodular simplex through the witness, until the verifier certifies it.
fn certify_full(p: &LatticePolytope, mut simplices: BTreeSet<Vec<IntVector>>) -> Result<UnimodularCover> {
    let mut repairs = 0;
    loop {
        let cover = UnimodularCover::from_coords(p, simplices.iter().cloned(), CoverScope::Full)?;
        let verdict = verify_cover_or_subdivide(p, &cover.simplices)?;
        if verdict.covered {
            return Ok(UnimodularCover { verified: true, repairs, ..cover });
        }
        let Some(w) = verdict.witness else {
            return Err(Error::VerificationFailed("cover could not be decided".into()));
        };
        let through = unimodular_simplices_through(p, &w)?;
        let Some(mut s) = through.into_iter().next() else {
            return Err(Error::VerificationFailed(format!("no unimodular simplex contains {w:?}")));
        };
        s.sort();
        simplices.insert(s);
        repairs += 1;
    }
}

/// Report of the chain construction for an ellipsoid.
#[derive(Clone, Debug)]
pub struct ChainCoverReport {
    pub cover: UnimodularCover,
    /// `(#points, dim)` of each chain polytope, from the singleton upwards
    pub chain: Vec<(usize, usize)>,
}

/// A unimodular cover of the hull of the lattice points of a 3-dimensional
/// ellipsoid, built along a descending chain of ellipsoidal sets.
///
/// Ascending the chain, lower-dimensional hulls are triangulated, the first
/// solid hull is the pyramid over the preceding polygon, and every further
/// step adds a boundary cover of the new hull. The result is certified by
/// the exact verifier.
pub fn ellipsoid_cover_3d(e: &Ellipsoid) -> Result<UnimodularCover> {
    Ok(ellipsoid_cover_3d_report(e)?.cover)
}

pub fn ellipsoid_cover_3d_report(e: &Ellipsoid) -> Result<ChainCoverReport> {
    if e.dim() != 3 {
        return Err(Error::DimensionNot3(e.dim()));
    }
    let lattice = AffineLattice::standard(3);
    let set = EllipsoidalSet::from_ellipsoid(e.clone(), &lattice);
    if set.is_empty() {
        return Err(Error::EmptyEllipsoid);
    }
    let mut chain = descent_chain(&set)?;
    chain.reverse();

    let mut summary = Vec::with_capacity(chain.len());
    let mut cover: BTreeSet<Vec<IntVector>> = BTreeSet::new();
    let mut prev: Option<LatticePolytope> = None;
    for step in &chain {
        let p = step.hull()?;
        if !is_normal(&p).is_normal {
            return Err(Error::ChainStepNotNormal(step.len()));
        }
        summary.push((step.len(), p.dim()));
        match (&prev, p.dim()) {
            (_, d) if d < 3 => {
                cover = unimodular_triangulation_coords(&p)?.into_iter().collect();
            }
            (Some(q), 3) if q.dim() < 3 => {
                let apex = step
                    .point_coords()
                    .iter()
                    .find(|y| !q.contains_coords(y))
                    .expect("the new point lies off the base")
                    .clone();
                let base = cover
                    .iter()
                    .map(|s| Simplex::from_coords(lattice.clone(), s.clone()))
                    .collect::<Result<Vec<_>>>()?;
                cover = pyramid_lift_coords(&base, &p, &apex)?
                    .iter()
                    .map(|s| s.vertex_coords().to_vec())
                    .collect();
            }
            _ => {
                cover.extend(boundary_cover_coords(&p)?.into_iter().map(|mut s| {
                    s.sort();
                    s
                }));
            }
        }
        prev = Some(p);
    }
    let p = prev.expect("chain is nonempty");
    let cover = certify_full(&p, cover)?;
    Ok(ChainCoverReport { cover, chain: summary })
}

fn is_half_integral(x: &ExactScalar) -> bool {
    (x * int(2)).is_integer()
}

/// Outward primitive normal and offset of the plane of a lattice triangle,
/// oriented so that `side` is on the positive side.
fn plane_toward(tri: &[IntVector], side: &[ExactScalar]) -> Option<(IntVector, i64)> {
    let refs: Vec<&[i64]> = tri.iter().map(Vec::as_slice).collect();
    let mut n = small::hyperplane_normal(&refs);
    let h = small::dot(&n, &tri[0]);
    let s: BigRational =
        n.iter().zip(side).fold(BigRational::zero(), |acc, (&a, x)| acc + x * int(a)) - int(h);
    if s.is_zero() {
        return None;
    }
    if s.is_negative() {
        n.iter_mut().for_each(|x| *x = -*x);
        return Some((n, -h));
    }
    Some((n, h))
}

/// The lattice point of `p` at height one above the triangle towards `side`
/// closest to the triangle's centroid (ties broken lexicographically).
fn height_one_apex(p: &LatticePolytope, tri: &[IntVector], side: &[ExactScalar]) -> Option<IntVector> {
    let (n, h) = plane_toward(tri, side)?;
    let c: RatVector =
        (0..3).map(|i| tri.iter().fold(BigRational::zero(), |a, v| a + int(v[i])) / int(3)).collect();
    p.lattice_point_coords()
        .iter()
        .filter(|z| small::dot(&n, z) == h + 1)
        .min_by(|a, b| {
            let d = |z: &IntVector| -> BigRational { z.iter().zip(&c).map(|(&zi, ci)| (int(zi) - ci).pow(2)).sum() };
            d(a).cmp(&d(b)).then_with(|| a.cmp(b))
        })
        .cloned()
}

/// Maximum number of repair rounds of [`symmetric_cover_3d`].
pub const SYMMETRIC_DEPTH_CAP: usize = 32;

/// A unimodular cover for an ellipsoid centred in `(1/2) Z^3`: every
/// boundary triangle is coned to a lattice point at height one towards the
/// center, and so is every new facet that has the center strictly on its far
/// side, so the cones advance inward until they reach the center. Gaps reported by the verifier are closed by walking from the
/// uncovered point away from the center to the first covered point and
/// coning the triangle met there in the same way.
pub fn symmetric_cover_3d(e: &Ellipsoid) -> Result<UnimodularCover> {
    if e.dim() != 3 {
        return Err(Error::DimensionNot3(e.dim()));
    }
    if !e.center().iter().all(is_half_integral) {
        return Err(Error::CenterNotHalfIntegral);
    }
    let lattice = AffineLattice::standard(3);
    let p = crate::ellipsoid::hull_of_ellipsoid(e, &lattice)?;
    if p.dim() != 3 {
        return Err(Error::PreconditionUnmet("the hull is not 3-dimensional".into()));
    }
    let center = e.center().clone();
    let mut cover: BTreeSet<Vec<IntVector>> = BTreeSet::new();
    let mut seen: BTreeSet<Vec<IntVector>> = BTreeSet::new();
    let mut queue: Vec<Vec<IntVector>> = Vec::new();
    for face in p.faces().iter().filter(|f| f.dim == 2) {
        for mut tri in unimodular_triangulation_coords(&p.face_polytope(face))? {
            tri.sort();
            if seen.insert(tri.clone()) {
                queue.push(tri);
            }
        }
    }
    while let Some(tri) = queue.pop() {
        let Some(z) = height_one_apex(&p, &tri, &center) else {
            continue;
        };
        let mut s = tri.clone();
        s.push(z.clone());
        s.sort();
        if !cover.insert(s) {
            continue;
        }
        // facets through the new apex that face away from the center
        for skip in 0..3 {
            let mut next: Vec<IntVector> = (0..3).filter(|&j| j != skip).map(|j| tri[j].clone()).collect();
            next.push(z.clone());
            next.sort();
            let Some((n, h)) = plane_toward(&next, &center) else {
                continue;
            };
            if small::dot(&n, &tri[skip]) < h && seen.insert(next.clone()) {
                queue.push(next);
            }
        }
    }
    for round in 0..=SYMMETRIC_DEPTH_CAP {
        let current = UnimodularCover::from_coords(&p, cover.iter().cloned(), CoverScope::Full)?;
        let verdict = verify_cover_or_subdivide(&p, &current.simplices)?;
        if verdict.covered {
            return Ok(UnimodularCover { verified: true, repairs: round, ..current });
        }
        if round == SYMMETRIC_DEPTH_CAP {
            break;
        }
        let w = verdict.witness.ok_or_else(|| Error::VerificationFailed("undecided cover".into()))?;
        let s = cone_at_first_hit(&p, &current.simplices, &w, &center)?;
        if !cover.insert(s) {
            return Err(Error::VerificationFailed("the repair simplex is already in the cover".into()));
        }
    }
    Err(Error::VerificationFailed(format!("not covered after {SYMMETRIC_DEPTH_CAP} repair rounds")))
}

/// Small steps in general position used to move a witness and its ray off
/// special positions.
const NUDGES: [[i64; 3]; 4] = [[7, 3, 1], [-2, 5, 11], [13, -1, 4], [3, 17, -6]];

/// From an uncovered point, walks away from the center to the first covered
/// point `x`, which lies in the relative interior of a facet triangle of a
/// cover simplex, and cones that triangle to the lattice point at height one
/// on the uncovered side. Witness and direction are nudged into general
/// position first.
fn cone_at_first_hit(
    p: &LatticePolytope,
    simplices: &[Simplex],
    w: &[ExactScalar],
    center: &[ExactScalar],
) -> Result<Vec<IntVector>> {
    let uncovered = |x: &[ExactScalar]| p.contains(x) && !simplices.iter().any(|s| s.contains(x));
    for nudge in NUDGES {
        let mut scale = rat(1, 64);
        let w2 = loop {
            let cand: RatVector = w.iter().zip(nudge).map(|(a, k)| a + &scale * int(k)).collect();
            if uncovered(&cand) {
                break cand;
            }
            scale /= int(2);
            if scale < rat(1, 1 << 40) {
                return Err(Error::VerificationFailed("witness has no uncovered neighbourhood".into()));
            }
        };
        let mut dir: RatVector = w2.iter().zip(center).map(|(a, b)| a - b).collect();
        if dir.iter().all(Zero::is_zero) {
            dir = nudge.iter().map(|&k| int(k)).collect();
        }
        let dir: RatVector = dir.iter().zip(nudge).map(|(d, k)| d + rat(k, 1000)).collect();
        if let Some(tri) = first_hit_triangle(simplices, &w2, &dir) {
            let Some(z) = height_one_apex(p, &tri, &w2) else {
                return Err(Error::VerificationFailed("no lattice point at height one above a triangle".into()));
            };
            let mut s = tri;
            s.push(z);
            s.sort();
            return Ok(s);
        }
    }
    Err(Error::VerificationFailed("every nudged ray met a simplex along an edge".into()))
}

/// The facet through which the ray `w + t dir`, `t > 0`, first enters a
/// simplex, provided the entry point is in the relative interior of that
/// facet.
fn first_hit_triangle(simplices: &[Simplex], w: &[ExactScalar], dir: &[ExactScalar]) -> Option<Vec<IntVector>> {
    let mut best: Option<(BigRational, Vec<IntVector>, usize)> = None;
    for s in simplices {
        let verts = s.vertex_coords();
        let mut lo = BigRational::zero();
        let mut hi: Option<BigRational> = None;
        let mut crossings: Vec<(BigRational, usize)> = Vec::new();
        let mut empty = false;
        for i in 0..4 {
            let tri: Vec<IntVector> = (0..4).filter(|&j| j != i).map(|j| verts[j].clone()).collect();
            let opposite: RatVector = verts[i].iter().map(|&v| int(v)).collect();
            let (n, h) = plane_toward(&tri, &opposite)?;
            // inside: n . x >= h
            let at = |x: &[ExactScalar]| n.iter().zip(x).fold(BigRational::zero(), |a, (&ni, xi)| a + xi * int(ni));
            let slack = at(w) - int(h);
            let rate = at(dir);
            if rate.is_zero() {
                empty |= slack.is_negative();
            } else {
                let t = -&slack / &rate;
                if rate.is_positive() {
                    crossings.push((t.clone(), i));
                    lo = lo.max(t);
                } else if hi.as_ref().is_none_or(|x| t < *x) {
                    hi = Some(t);
                }
            }
        }
        if empty || hi.as_ref().is_some_and(|x| *x <= lo) || !lo.is_positive() {
            continue;
        }
        let tight: Vec<usize> = crossings.iter().filter(|(t, _)| *t == lo).map(|&(_, i)| i).collect();
        if best.as_ref().is_none_or(|(t, _, _)| lo < *t) {
            let tri = (0..4).filter(|&j| j != tight[0]).map(|j| verts[j].clone()).collect();
            best = Some((lo, tri, tight.len()));
        }
    }
    match best {
        Some((_, tri, 1)) => Some(tri),
        _ => None,
    }
}

/// A lattice point of `conv(e) + v` for a planar ellipse whose hull contains
/// a lattice triangle, the lexicographically smallest one.
pub fn johnson_witness(e: &Ellipsoid, lattice: &AffineLattice, v: &[ExactScalar]) -> Result<RatVector> {
    if e.dim() != 2 || lattice.dim() != 2 {
        return Err(Error::PreconditionUnmet("a planar ellipse is required".into()));
    }
    let inside = ellipsoid_lattice_points(e, lattice, true);
    let coords: Vec<IntVector> = inside.iter().map(|x| lattice.to_coords(x)).collect::<Result<_>>()?;
    let refs: Vec<&[i64]> = coords.iter().map(Vec::as_slice).collect();
    if coords.len() < 3 || small::affine_rank(&refs) < 2 {
        return Err(Error::PreconditionUnmet("the ellipse contains no lattice triangle".into()));
    }
    ellipsoid_lattice_points(&e.translate(v), lattice, true)
        .into_iter()
        .min()
        .ok_or_else(|| Error::VerificationFailed("translate misses the lattice".into()))
}
