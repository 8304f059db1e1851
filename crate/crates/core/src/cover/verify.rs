use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{int, rat, small, IntVector, RatVector};
use crate::polytope::{LatticePolytope, Simplex};

type Q = BigRational;

/// Default bound on the number of facet traces and interval pieces examined
/// by the exact verifier.
pub const DEFAULT_CELL_CAP: usize = 1_000_000;

const PUSH_HALVINGS: u32 = 128;

/// How a verdict was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VerifyMethod {
    /// exact decision over the arrangement of simplex facets, examined facet
    /// by facet
    Arrangement,
    /// bisection of a triangulation of the target down to a bounded depth
    Subdivision,
}

/// Outcome of a cover check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverVerdict {
    pub covered: bool,
    /// false only for a subdivision run that hit its depth bound
    pub resolved: bool,
    /// ambient point of the target outside every simplex
    pub witness: Option<RatVector>,
    pub method: VerifyMethod,
}

impl CoverVerdict {
    fn from_gap(gap: Option<RatVector>, method: VerifyMethod) -> Self {
        Self { covered: gap.is_none(), resolved: true, witness: gap, method }
    }
}

/// The work cap, overridable through `LATCOVER_CELL_CAP`.
pub fn cell_cap() -> usize {
    std::env::var("LATCOVER_CELL_CAP").ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_CELL_CAP)
}

pub(crate) struct Work {
    used: usize,
    cap: usize,
}

impl Work {
    pub fn new(cap: usize) -> Self {
        Self { used: 0, cap }
    }

    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.cap {
            return Err(Error::TooManyCells(self.cap));
        }
        Ok(())
    }
}

fn q(x: i64) -> Q {
    int(x)
}

fn dot_iq(a: &[i64], x: &[Q]) -> Q {
    a.iter().zip(x).fold(Q::zero(), |acc, (&ai, xi)| acc + xi * q(ai))
}

fn dot_qq(a: &[Q], x: &[Q]) -> Q {
    a.iter().zip(x).fold(Q::zero(), |acc, (ai, xi)| acc + ai * xi)
}

fn to_q(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

fn centroid(points: &[Vec<Q>]) -> Vec<Q> {
    let n = Q::from_integer((points.len() as i64).into());
    let mut c = vec![Q::zero(); points[0].len()];
    for p in points {
        for (ci, pi) in c.iter_mut().zip(p) {
            *ci += pi;
        }
    }
    c.into_iter().map(|x| x / &n).collect()
}

/// A full-dimensional lattice simplex in local coordinates with outward
/// facet inequalities; facet `i` is opposite vertex `i`.
#[derive(Clone, Debug)]
pub(crate) struct Cell {
    pub verts: Vec<IntVector>,
    pub facets: Vec<(IntVector, i64)>,
}

impl Cell {
    pub fn new(verts: Vec<IntVector>) -> Self {
        let k = verts.len() - 1;
        let facets = (0..=k)
            .map(|i| {
                if k == 0 {
                    return (Vec::new(), 0);
                }
                let others: Vec<&[i64]> =
                    verts.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, v)| v.as_slice()).collect();
                let mut n = small::hyperplane_normal(&others);
                let off = small::dot(&n, others[0]);
                if small::dot(&n, &verts[i]) > off {
                    n.iter_mut().for_each(|x| *x = -*x);
                    return (n, -off);
                }
                (n, off)
            })
            .collect();
        Self { verts, facets }
    }

    fn contains(&self, x: &[Q]) -> bool {
        if self.verts.len() == 1 {
            return to_q(&self.verts[0]) == x;
        }
        self.facets.iter().all(|(n, o)| dot_iq(n, x) <= q(*o))
    }

    fn contains_int(&self, y: &[i64]) -> bool {
        self.facets.iter().all(|(n, o)| small::dot(n, y) <= *o)
    }
}

/// A convex region of `R^k` by inequalities `a . x <= b` and vertices.
#[derive(Clone, Debug)]
pub(crate) struct Region {
    pub halfspaces: Vec<(Vec<Q>, Q)>,
    pub vertices: Vec<Vec<Q>>,
}

impl Region {
    pub fn of_polytope(p: &LatticePolytope) -> Self {
        Self {
            halfspaces: p.local_facets().iter().map(|(n, o)| (to_q(n), q(*o))).collect(),
            vertices: p.vertex_local().iter().map(|v| to_q(v)).collect(),
        }
    }

    fn contains(&self, x: &[Q]) -> bool {
        self.halfspaces.iter().all(|(a, b)| dot_qq(a, x) <= *b)
    }

    /// `x + lambda (R - x)`.
    pub fn shrink_toward(&self, x: &[Q], lambda: &Q) -> Self {
        let keep = Q::one() - lambda;
        Self {
            halfspaces: self
                .halfspaces
                .iter()
                .map(|(a, b)| (a.clone(), b * lambda + dot_qq(a, x) * &keep))
                .collect(),
            vertices: self
                .vertices
                .iter()
                .map(|v| v.iter().zip(x).map(|(vi, xi)| xi + (vi - xi) * lambda).collect())
                .collect(),
        }
    }

    /// Drops cells lying strictly outside one of the inequalities.
    fn relevant<'a>(&self, cells: &'a [Cell]) -> Vec<&'a Cell> {
        cells
            .iter()
            .filter(|c| {
                !self.halfspaces.iter().any(|(a, b)| c.verts.iter().all(|v| dot_iq(v, a) > *b))
            })
            .collect()
    }
}

// ---- planar kernel ----------------------------------------------------------

type P2 = [Q; 2];

fn cross(o: &P2, a: &P2, b: &P2) -> Q {
    (&a[0] - &o[0]) * (&b[1] - &o[1]) - (&a[1] - &o[1]) * (&b[0] - &o[0])
}

fn area2(poly: &[P2]) -> Q {
    let n = poly.len();
    (0..n).fold(Q::zero(), |acc, i| {
        let (a, b) = (&poly[i], &poly[(i + 1) % n]);
        acc + &a[0] * &b[1] - &a[1] * &b[0]
    })
}

/// Clips a counter-clockwise convex polygon by `a . x <= b`.
fn clip(poly: &[P2], a: &P2, b: &Q) -> Vec<P2> {
    let val = |p: &P2| &a[0] * &p[0] + &a[1] * &p[1] - b;
    let n = poly.len();
    let mut out: Vec<P2> = Vec::with_capacity(n + 1);
    for i in 0..n {
        let (p, r) = (&poly[i], &poly[(i + 1) % n]);
        let (vp, vr) = (val(p), val(r));
        if !vp.is_positive() {
            out.push(p.clone());
        }
        if (vp.is_negative() && vr.is_positive()) || (vp.is_positive() && vr.is_negative()) {
            let t = &vp / (&vp - &vr);
            out.push([&p[0] + (&r[0] - &p[0]) * &t, &p[1] + (&r[1] - &p[1]) * &t]);
        }
    }
    out.dedup();
    if out.len() > 1 && out.first() == out.last() {
        out.pop();
    }
    out
}

fn is_proper(poly: &[P2]) -> bool {
    poly.len() >= 3 && area2(poly).is_positive()
}

fn in_polygon(poly: &[P2], x: &P2) -> bool {
    let n = poly.len();
    (0..n).all(|i| !cross(&poly[i], &poly[(i + 1) % n], x).is_negative())
}

fn in_polygon_interior(poly: &[P2], x: &P2) -> bool {
    let n = poly.len();
    (0..n).all(|i| cross(&poly[i], &poly[(i + 1) % n], x).is_positive())
}

/// Counter-clockwise convex hull (monotone chain).
pub(crate) fn hull2(points: &[P2]) -> Vec<P2> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<P2> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && !cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive() {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<P2> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && !cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive() {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn centroid2(poly: &[P2]) -> P2 {
    let v: Vec<Vec<Q>> = poly.iter().map(|p| p.to_vec()).collect();
    let c = centroid(&v);
    [c[0].clone(), c[1].clone()]
}

/// Moves `y` off a boundary by `eps * dir`, halving `eps` until `ok` holds.
fn push_off<F: Fn(&[Q]) -> bool>(y: &[Q], dir: &[Q], ok: F) -> Result<Vec<Q>> {
    let mut eps = rat(1, 2);
    for _ in 0..PUSH_HALVINGS {
        let z: Vec<Q> = y.iter().zip(dir).map(|(a, d)| a + d * &eps).collect();
        if ok(&z) {
            return Ok(z);
        }
        eps /= int(2);
    }
    Err(Error::VerificationFailed("could not isolate an uncovered point".into()))
}

/// First uncovered point of `[0, 1]` given closed intervals, as an open gap.
fn interval_gap(mut intervals: Vec<(Q, Q)>) -> Option<(Q, Q)> {
    intervals.sort();
    let mut reach = Q::zero();
    for (lo, hi) in intervals {
        if lo > reach {
            return Some((reach, lo));
        }
        if hi > reach {
            reach = hi;
        }
    }
    (reach < Q::one()).then(|| (reach, Q::one()))
}

/// Parameter interval of `a + t (b - a)` inside a ccw convex polygon.
fn segment_in_polygon(a: &P2, b: &P2, poly: &[P2]) -> Option<(Q, Q)> {
    let (mut lo, mut hi) = (Q::zero(), Q::one());
    let n = poly.len();
    for i in 0..n {
        let (p, r) = (&poly[i], &poly[(i + 1) % n]);
        // cross(p, r, a + t (b - a)) >= 0 is affine in t
        let c0 = cross(p, r, a);
        let c1 = cross(p, r, b) - &c0;
        if c1.is_zero() {
            if c0.is_negative() {
                return None;
            }
        } else {
            let t = -&c0 / &c1;
            if c1.is_positive() {
                lo = lo.max(t);
            } else {
                hi = hi.min(t);
            }
        }
    }
    (lo <= hi).then_some((lo, hi))
}

/// An uncovered interior point of a convex polygon covered by convex pieces
/// contained in it, or `None` if the pieces cover it.
fn gap2(face: &[P2], pieces: &[Vec<P2>], work: &mut Work) -> Result<Option<P2>> {
    let c = centroid2(face);
    if !pieces.iter().any(|g| in_polygon(g, &c)) {
        return Ok(Some(c));
    }
    let outside = |z: &[Q]| {
        let z: P2 = [z[0].clone(), z[1].clone()];
        in_polygon_interior(face, &z) && !pieces.iter().any(|g| in_polygon(g, &z))
    };
    for (gi, g) in pieces.iter().enumerate() {
        let n = g.len();
        for e in 0..n {
            let (a, b) = (&g[e], &g[(e + 1) % n]);
            if face.iter().all(|p| !cross(a, b, p).is_negative()) {
                continue;
            }
            let beyond = |h: &Vec<P2>| h.iter().any(|p| cross(a, b, p).is_negative());
            if pieces.iter().enumerate().any(|(hi, h)| hi != gi && beyond(h) && in_polygon(h, a) && in_polygon(h, b)) {
                continue;
            }
            let mut intervals = Vec::new();
            for (hi, h) in pieces.iter().enumerate() {
                if hi == gi || !beyond(h) {
                    continue;
                }
                work.tick()?;
                if let Some(iv) = segment_in_polygon(a, b, h) {
                    intervals.push(iv);
                }
            }
            if let Some((lo, hi)) = interval_gap(intervals) {
                let t = (lo + hi) / int(2);
                let y = vec![&a[0] + (&b[0] - &a[0]) * &t, &a[1] + (&b[1] - &a[1]) * &t];
                let out = vec![&b[1] - &a[1], &a[0] - &b[0]];
                let z = push_off(&y, &out, outside)?;
                return Ok(Some([z[0].clone(), z[1].clone()]));
            }
        }
    }
    Ok(None)
}

// ---- solid kernel -----------------------------------------------------------

/// Coordinates on the plane `n . x = off` obtained by dropping the
/// coordinate where `n` is largest.
struct PlaneChart<'a> {
    n: &'a [i64],
    off: i64,
    drop: usize,
}

impl PlaneChart<'_> {
    fn project(&self, x: &[Q]) -> P2 {
        let mut it = (0..3).filter(|&i| i != self.drop).map(|i| x[i].clone());
        [it.next().expect("two coordinates"), it.next().expect("two coordinates")]
    }

    fn lift(&self, y: &P2) -> Vec<Q> {
        let keep: Vec<usize> = (0..3).filter(|&i| i != self.drop).collect();
        let mut x = vec![Q::zero(); 3];
        x[keep[0]] = y[0].clone();
        x[keep[1]] = y[1].clone();
        let rest = &x[keep[0]] * q(self.n[keep[0]]) + &x[keep[1]] * q(self.n[keep[1]]);
        x[self.drop] = (q(self.off) - rest) / q(self.n[self.drop]);
        x
    }

    /// `a . x <= b` restricted to the plane, in chart coordinates.
    fn restrict(&self, a: &[Q], b: &Q) -> (P2, Q) {
        let j = self.drop;
        let nj = q(self.n[j]);
        let keep: Vec<usize> = (0..3).filter(|&i| i != j).collect();
        let coef = |i: usize| &a[i] - &a[j] * q(self.n[i]) / &nj;
        ([coef(keep[0]), coef(keep[1])], b - &a[j] * q(self.off) / &nj)
    }
}

fn ccw(mut poly: Vec<P2>) -> Vec<P2> {
    if area2(&poly).is_negative() {
        poly.reverse();
    }
    poly
}

fn gap3(target: &Region, cells: &[&Cell], work: &mut Work) -> Result<Option<Vec<Q>>> {
    let c = centroid(&target.vertices);
    if !cells.iter().any(|s| s.contains(&c)) {
        return Ok(Some(c));
    }
    let uncovered = |z: &[Q]| target.contains(z) && !cells.iter().any(|s| s.contains(z));
    for (si, s) in cells.iter().enumerate() {
        for fi in 0..4 {
            let (n, off) = (&s.facets[fi], s.facets[fi].1);
            let n = &n.0;
            if target.vertices.iter().all(|t| dot_iq(n, t) <= q(off)) {
                continue;
            }
            let tri: Vec<&IntVector> = (0..4).filter(|&i| i != fi).map(|i| &s.verts[i]).collect();
            let beyond = |t: &Cell| t.verts.iter().any(|v| small::dot(n, v) > off);
            if cells.iter().any(|t| beyond(t) && tri.iter().all(|v| t.contains_int(v))) {
                continue;
            }
            let drop = (0..3).max_by_key(|&i| n[i].abs()).expect("three coordinates");
            let chart = PlaneChart { n, off, drop };
            let mut face = ccw(tri.iter().map(|v| chart.project(&to_q(v))).collect());
            for (a, b) in &target.halfspaces {
                let (a2, b2) = chart.restrict(a, b);
                face = clip(&face, &a2, &b2);
            }
            if !is_proper(&face) {
                continue;
            }
            let mut pieces = Vec::new();
            for (ti, t) in cells.iter().enumerate() {
                if ti == si || !beyond(t) || t.verts.iter().all(|v| small::dot(n, v) > off) {
                    continue;
                }
                work.tick()?;
                let mut poly = face.clone();
                for (tn, to) in &t.facets {
                    let (a2, b2) = chart.restrict(&to_q(tn), &q(*to));
                    poly = clip(&poly, &a2, &b2);
                    if poly.is_empty() {
                        break;
                    }
                }
                if is_proper(&poly) {
                    pieces.push(poly);
                }
            }
            if let Some(y) = gap2(&face, &pieces, work)? {
                let z = push_off(&chart.lift(&y), &to_q(n), uncovered)?;
                return Ok(Some(z));
            }
        }
    }
    Ok(None)
}

fn polygon_of(region: &Region) -> Vec<P2> {
    let pts: Vec<P2> = region.vertices.iter().map(|v| [v[0].clone(), v[1].clone()]).collect();
    hull2(&pts)
}

fn gap_in(target: &Region, cells: &[&Cell], work: &mut Work) -> Result<Option<Vec<Q>>> {
    let k = target.vertices.first().map_or(0, Vec::len);
    match k {
        0 => Ok((cells.is_empty()).then(Vec::new)),
        1 => {
            let lo = target.vertices.iter().map(|v| v[0].clone()).min().expect("nonempty");
            let hi = target.vertices.iter().map(|v| v[0].clone()).max().expect("nonempty");
            let len = &hi - &lo;
            let intervals: Vec<(Q, Q)> = cells
                .iter()
                .map(|s| {
                    let a = (q(s.verts[0][0]) - &lo) / &len;
                    let b = (q(s.verts[1][0]) - &lo) / &len;
                    if a <= b { (a, b) } else { (b, a) }
                })
                .collect();
            Ok(interval_gap(intervals).map(|(a, b)| vec![&lo + (a + b) / int(2) * &len]))
        }
        2 => {
            let face = polygon_of(target);
            let pieces: Vec<Vec<P2>> = cells
                .iter()
                .map(|s| ccw(s.verts.iter().map(|v| [q(v[0]), q(v[1])]).collect()))
                .filter_map(|tri| {
                    let mut poly = tri;
                    for (a, b) in &target.halfspaces {
                        poly = clip(&poly, &[a[0].clone(), a[1].clone()], b);
                    }
                    is_proper(&poly).then_some(poly)
                })
                .collect();
            Ok(gap2(&face, &pieces, work)?.map(|p| p.to_vec()))
        }
        3 => gap3(target, cells, work),
        _ => Err(Error::PreconditionUnmet("exact cover verification needs dimension at most 3".into())),
    }
}

/// Local cells of cover simplices, after checking they are full-dimensional
/// and lie in the target.
pub(crate) fn local_cells(p: &LatticePolytope, simplices: &[Simplex]) -> Result<Vec<Cell>> {
    simplices
        .iter()
        .map(|s| {
            if !s.lattice().same_lattice(p.lattice()) {
                return Err(Error::PreconditionUnmet("simplex lives in another lattice".into()));
            }
            if s.dim() != p.dim() {
                return Err(Error::PreconditionUnmet("cover simplices must be full-dimensional".into()));
            }
            let verts = s
                .vertex_coords()
                .iter()
                .map(|y| {
                    if !p.contains_coords(y) {
                        return Err(Error::PreconditionUnmet("cover simplex leaves the polytope".into()));
                    }
                    Ok(p.frame().local(y).expect("inside the polytope"))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Cell::new(verts))
        })
        .collect()
}

fn ambient_of_local(p: &LatticePolytope, z: &[Q]) -> RatVector {
    p.lattice().rational_from_coords(&p.frame().global_rational(z))
}

pub(crate) fn region_gap(
    p: &LatticePolytope,
    region: &Region,
    cells: &[Cell],
    cap: usize,
) -> Result<Option<RatVector>> {
    let relevant = region.relevant(cells);
    let mut work = Work::new(cap);
    Ok(gap_in(region, &relevant, &mut work)?.map(|z| ambient_of_local(p, &z)))
}

/// Exact decision whether the simplices cover `p`, with the work cap from
/// [`cell_cap`].
///
/// The uncovered part of `p` is relatively open, so if it is nonempty it
/// either contains the centroid or is bounded inside `p` by some simplex
/// facet along a piece of positive area. The check therefore examines, for
/// every simplex facet not on the boundary of `p`, whether the traces of the
/// simplices reaching across it cover it, and recurses one dimension down
/// for those traces. Any gap is pushed off the facet into an exact witness.
pub fn verify_cover(p: &LatticePolytope, simplices: &[Simplex]) -> Result<CoverVerdict> {
    verify_cover_with_cap(p, simplices, cell_cap())
}

pub fn verify_cover_with_cap(p: &LatticePolytope, simplices: &[Simplex], cap: usize) -> Result<CoverVerdict> {
    let cells = local_cells(p, simplices)?;
    let gap = region_gap(p, &Region::of_polytope(p), &cells, cap)?;
    Ok(CoverVerdict::from_gap(gap, VerifyMethod::Arrangement))
}

/// Bisection fallback: each simplex of a triangulation of `p` is split along
/// its longest edge until every piece lies in a single cover simplex, a
/// piece's centroid is uncovered, or `max_depth` is reached.
pub fn verify_cover_by_subdivision(
    p: &LatticePolytope,
    simplices: &[Simplex],
    max_depth: u32,
) -> Result<CoverVerdict> {
    let cells = local_cells(p, simplices)?;
    let mut unresolved = false;
    for s in p.local_triangulation() {
        let piece: Vec<Vec<Q>> = s.iter().map(|v| to_q(v)).collect();
        if let Some(z) = bisect(&piece, &cells, max_depth, &mut unresolved) {
            return Ok(CoverVerdict::from_gap(Some(ambient_of_local(p, &z)), VerifyMethod::Subdivision));
        }
    }
    Ok(CoverVerdict { covered: !unresolved, resolved: !unresolved, witness: None, method: VerifyMethod::Subdivision })
}

fn bisect(piece: &[Vec<Q>], cells: &[Cell], depth: u32, unresolved: &mut bool) -> Option<Vec<Q>> {
    let near: Vec<&Cell> = cells
        .iter()
        .filter(|c| !c.facets.iter().any(|(n, o)| piece.iter().all(|v| dot_iq(n, v) > q(*o))))
        .collect();
    if near.iter().any(|c| piece.iter().all(|v| c.contains(v))) {
        return None;
    }
    let mid = centroid(piece);
    if !near.iter().any(|c| c.contains(&mid)) {
        return Some(mid);
    }
    if depth == 0 {
        *unresolved = true;
        return None;
    }
    let mut best = (0, 1, Q::zero());
    for i in 0..piece.len() {
        for j in i + 1..piece.len() {
            let d: Q = piece[i].iter().zip(&piece[j]).map(|(a, b)| (a - b) * (a - b)).sum();
            if d > best.2 {
                best = (i, j, d);
            }
        }
    }
    let (i, j, _) = best;
    let m: Vec<Q> = piece[i].iter().zip(&piece[j]).map(|(a, b)| (a + b) / int(2)).collect();
    for replace in [i, j] {
        let mut half = piece.to_vec();
        half[replace] = m.clone();
        if let Some(z) = bisect(&half, cells, depth - 1, unresolved) {
            return Some(z);
        }
    }
    None
}

/// Exact verdict, falling back to subdivision when the work cap is hit.
pub fn verify_cover_or_subdivide(p: &LatticePolytope, simplices: &[Simplex]) -> Result<CoverVerdict> {
    match verify_cover(p, simplices) {
        Err(Error::TooManyCells(_)) => verify_cover_by_subdivision(p, simplices, 16),
        other => other,
    }
}

/// Sample points in the relative interior of every proper face (vertex
/// averages), in local coordinates.
pub(crate) fn boundary_samples(p: &LatticePolytope) -> Vec<Vec<Q>> {
    p.faces()
        .iter()
        .filter(|f| f.dim < p.dim())
        .map(|f| centroid(&f.vertices.iter().map(|&i| to_q(&p.vertex_local()[i])).collect::<Vec<_>>()))
        .collect()
}

/// Checks that the simplices cover the neighbourhoods `x + (1 - factor)(P - x)`
/// of sample points `x` in the relative interior of every proper face.
pub fn verify_boundary_neighbourhood(
    p: &LatticePolytope,
    simplices: &[Simplex],
    factor: &Q,
) -> Result<CoverVerdict> {
    let cells = local_cells(p, simplices)?;
    let region = Region::of_polytope(p);
    let lambda = Q::one() - factor;
    for x in boundary_samples(p) {
        let near = region.shrink_toward(&x, &lambda);
        if let Some(w) = region_gap(p, &near, &cells, cell_cap())? {
            return Ok(CoverVerdict::from_gap(Some(w), VerifyMethod::Arrangement));
        }
    }
    Ok(CoverVerdict::from_gap(None, VerifyMethod::Arrangement))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::AffineLattice;

    fn poly(pts: &[&[i64]]) -> LatticePolytope {
        let d = pts[0].len();
        LatticePolytope::from_coords(AffineLattice::standard(d), pts.iter().map(|p| p.to_vec()).collect())
            .unwrap()
    }

    fn simplex(pts: &[&[i64]]) -> Simplex {
        let d = pts[0].len();
        Simplex::from_coords(AffineLattice::standard(d), pts.iter().map(|p| p.to_vec()).collect()).unwrap()
    }

    fn cube() -> LatticePolytope {
        let pts: Vec<IntVector> = (0..8).map(|i| vec![i & 1, (i >> 1) & 1, (i >> 2) & 1]).collect();
        LatticePolytope::from_coords(AffineLattice::standard(3), pts).unwrap()
    }

    fn five_tetrahedra() -> Vec<Simplex> {
        vec![
            simplex(&[&[0, 0, 0], &[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]),
            simplex(&[&[1, 0, 0], &[0, 0, 0], &[1, 1, 0], &[1, 0, 1]]),
            simplex(&[&[0, 1, 0], &[0, 0, 0], &[1, 1, 0], &[0, 1, 1]]),
            simplex(&[&[0, 0, 1], &[0, 0, 0], &[1, 0, 1], &[0, 1, 1]]),
            simplex(&[&[1, 1, 1], &[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]),
        ]
    }

    #[test]
    fn squares() {
        let sq = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let t1 = simplex(&[&[0, 0], &[1, 0], &[1, 1]]);
        let t2 = simplex(&[&[0, 0], &[0, 1], &[1, 1]]);
        assert!(verify_cover(&sq, &[t1.clone(), t2]).unwrap().covered);
        let v = verify_cover(&sq, &[t1.clone()]).unwrap();
        assert!(!v.covered);
        let w = v.witness.unwrap();
        assert!(sq.contains(&w) && !t1.contains(&w));
    }

    #[test]
    fn cube_decompositions() {
        let c = cube();
        let t = five_tetrahedra();
        assert!(verify_cover(&c, &t).unwrap().covered);
        for skip in 0..5 {
            let fewer: Vec<Simplex> = t.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, s)| s.clone()).collect();
            let v = verify_cover(&c, &fewer).unwrap();
            assert!(!v.covered, "missing piece {skip}");
            let w = v.witness.unwrap();
            assert!(c.contains(&w) && fewer.iter().all(|s| !s.contains(&w)));
            assert!(t[skip].contains(&w));
        }
        let sub = verify_cover_by_subdivision(&c, &t, 10).unwrap();
        assert!(!sub.covered || sub.resolved);
        assert!(sub.witness.is_none());
    }

    #[test]
    fn overlapping_covers() {
        // the six-tetrahedra triangulation around the main diagonal plus the
        // five-piece decomposition
        let c = cube();
        let mut all = five_tetrahedra();
        let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        for p in perms {
            let mut verts = vec![vec![0, 0, 0]];
            let mut cur = vec![0, 0, 0];
            for &axis in &p {
                cur[axis] = 1;
                verts.push(cur.clone());
            }
            all.push(Simplex::from_coords(AffineLattice::standard(3), verts).unwrap());
        }
        assert!(verify_cover(&c, &all).unwrap().covered);
        assert!(verify_cover(&c, &all[5..]).unwrap().covered);
        let v = verify_cover(&c, &all[6..]).unwrap();
        assert!(!v.covered);
    }

    #[test]
    fn preconditions_and_caps() {
        let c = cube();
        let outside = simplex(&[&[0, 0, 0], &[2, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert!(matches!(verify_cover(&c, &[outside]), Err(Error::PreconditionUnmet(_))));
        let flat = simplex(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]);
        assert!(matches!(verify_cover(&c, &[flat]), Err(Error::PreconditionUnmet(_))));
        let rect = poly(&[&[0, 0], &[2, 0], &[0, 1], &[2, 1]]);
        let crossing = [
            simplex(&[&[0, 0], &[2, 0], &[0, 1]]),
            simplex(&[&[0, 1], &[2, 1], &[2, 0]]),
            simplex(&[&[0, 0], &[1, 1], &[0, 1]]),
        ];
        assert!(verify_cover(&rect, &crossing).unwrap().covered);
        assert_eq!(verify_cover_with_cap(&rect, &crossing, 0), Err(Error::TooManyCells(0)));
        assert!(!verify_cover_or_subdivide(&c, &[]).unwrap().covered);
    }

    #[test]
    fn segments() {
        let seg = poly(&[&[0], &[3]]);
        let pieces = [simplex(&[&[0], &[1]]), simplex(&[&[1], &[2]]), simplex(&[&[2], &[3]])];
        assert!(verify_cover(&seg, &pieces).unwrap().covered);
        let v = verify_cover(&seg, &pieces[..2]).unwrap();
        assert_eq!(v.witness, Some(vec![rat(5, 2)]));
    }

    #[test]
    fn neighbourhoods() {
        let c = cube();
        let t = five_tetrahedra();
        assert!(verify_boundary_neighbourhood(&c, &t, &rat(15, 16)).unwrap().covered);
        let v = verify_boundary_neighbourhood(&c, &t[1..], &rat(15, 16)).unwrap();
        assert!(!v.covered);
    }
}
