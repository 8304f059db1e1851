use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{lattice_point_coords, Ellipsoid};
use crate::error::{Error, Result};
use crate::exact::{int, rat, AffineLattice, ExactScalar, IntVector, RatMatrix, RatVector};
use crate::polytope::LatticePolytope;

const MAX_HALVINGS: u32 = 64;

/// A set of lattice points cut out by a solid ellipsoid, together with the
/// certifying ellipsoid and the points on its surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllipsoidalSet {
    lattice: AffineLattice,
    points: Vec<IntVector>,
    certificate: Ellipsoid,
    extremal: Vec<IntVector>,
}

impl EllipsoidalSet {
    /// The lattice points of the solid ellipsoid.
    pub fn from_ellipsoid(certificate: Ellipsoid, lattice: &AffineLattice) -> Self {
        let points = lattice_point_coords(&certificate, lattice, true);
        let extremal = lattice_point_coords(&certificate, lattice, false);
        Self { lattice: lattice.clone(), points, certificate, extremal }
    }

    /// Checks that `certificate` cuts out exactly `points`.
    pub fn with_certificate(
        points: &[RatVector],
        certificate: Ellipsoid,
        lattice: &AffineLattice,
    ) -> Result<Self> {
        let mut coords = points.iter().map(|p| lattice.to_coords(p)).collect::<Result<Vec<_>>>()?;
        coords.sort_by_cached_key(|y| lattice.from_coords(y));
        coords.dedup();
        let set = Self::from_ellipsoid(certificate, lattice);
        if set.points != coords {
            return Err(Error::CertificateMismatch);
        }
        Ok(set)
    }

    pub fn lattice(&self) -> &AffineLattice {
        &self.lattice
    }

    pub fn dim(&self) -> usize {
        self.lattice.dim()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn certificate(&self) -> &Ellipsoid {
        &self.certificate
    }

    /// Points in lattice coordinates, sorted by ambient position.
    pub fn point_coords(&self) -> &[IntVector] {
        &self.points
    }

    pub fn points(&self) -> Vec<RatVector> {
        self.points.iter().map(|y| self.lattice.from_coords(y)).collect()
    }

    pub fn extremal_coords(&self) -> &[IntVector] {
        &self.extremal
    }

    pub fn extremal_points(&self) -> Vec<RatVector> {
        self.extremal.iter().map(|y| self.lattice.from_coords(y)).collect()
    }

    pub fn contains_coords(&self, y: &[i64]) -> bool {
        self.points.iter().any(|p| p == y)
    }

    /// Re-enumerates the certificate and compares.
    pub fn verify(&self) -> bool {
        lattice_point_coords(&self.certificate, &self.lattice, true) == self.points
            && lattice_point_coords(&self.certificate, &self.lattice, false) == self.extremal
    }

    /// The convex hull of the set; its lattice points are the set itself.
    pub fn hull(&self) -> Result<LatticePolytope> {
        if self.points.is_empty() {
            return Err(Error::EmptyEllipsoid);
        }
        LatticePolytope::from_lattice_points(self.lattice.clone(), self.points.clone())
    }
}

/// An extremal point of the set, with a certificate on whose surface it lies.
///
/// If no point is on the surface of the current certificate, the certificate
/// is contracted about its center by the exact factor that brings the
/// farthest points onto the surface. A set consisting of the center alone
/// gets a small ball through that point instead.
pub fn find_extremal_point(s: &EllipsoidalSet) -> Result<(RatVector, EllipsoidalSet)> {
    if s.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    if let Some(v) = s.extremal.first() {
        return Ok((s.lattice.from_coords(v), s.clone()));
    }
    let e = &s.certificate;
    let pts = s.points();
    let m = pts.iter().map(|x| e.form(x)).max().expect("nonempty");
    let cert = if m.is_positive() {
        e.scale_form(&m)
    } else {
        // the single point is the center: a ball of half the size touching it
        let a00 = e.matrix()[(0, 0)].clone();
        let mut t = BigRational::one();
        while &t * &t * &a00 > rat(1, 4) {
            t /= int(2);
        }
        let scale = &t * &t * &a00;
        let mut shift = vec![BigRational::zero(); e.dim()];
        shift[0] = t;
        e.translate(&shift).scale_form(&scale)
    };
    let next = EllipsoidalSet::from_ellipsoid(cert, &s.lattice);
    if next.points != s.points || next.extremal.is_empty() {
        return Err(Error::CertificateMismatch);
    }
    let v = next.lattice.from_coords(&next.extremal[0]);
    Ok((v, next))
}

/// Removes an extremal point `v`: the certificate is enlarged by a homothety
/// with factor `1 + eps` about `v`, so that `v` is the only surface point,
/// and then pushed by `delta (center - v)`. Both parameters start at `1/2`
/// and are halved until full enumeration confirms the step.
pub fn peel(s: &EllipsoidalSet, v: &[ExactScalar]) -> Result<EllipsoidalSet> {
    let y = s.lattice.to_coords(v).map_err(|_| Error::NotExtremal)?;
    if !s.extremal.contains(&y) {
        return Err(Error::NotExtremal);
    }
    let lattice = &s.lattice;
    let mut eps = rat(1, 2);
    let mut grown = None;
    for _ in 0..MAX_HALVINGS {
        let e1 = s.certificate.homothety(v, &(BigRational::one() + &eps));
        if lattice_point_coords(&e1, lattice, false) == [y.clone()]
            && lattice_point_coords(&e1, lattice, true) == s.points
        {
            grown = Some(e1);
            break;
        }
        eps /= int(2);
    }
    let e1 = grown.ok_or(Error::SearchExhausted(MAX_HALVINGS))?;

    let remaining: Vec<IntVector> = s.points.iter().filter(|p| **p != y).cloned().collect();
    let away: RatVector = e1.center().iter().zip(v).map(|(c, x)| c - x).collect();
    let mut delta = rat(1, 2);
    for _ in 0..MAX_HALVINGS {
        let shift: RatVector = away.iter().map(|a| a * &delta).collect();
        let e2 = e1.translate(&shift);
        let next = EllipsoidalSet::from_ellipsoid(e2, lattice);
        if next.points == remaining {
            return Ok(next);
        }
        delta /= int(2);
    }
    Err(Error::SearchExhausted(MAX_HALVINGS))
}

/// A chain of ellipsoidal sets from `s` down to a single point, removing one
/// extremal point at each step. The first entry is `s` itself.
pub fn descent_chain(s: &EllipsoidalSet) -> Result<Vec<EllipsoidalSet>> {
    if s.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let mut chain = vec![s.clone()];
    while chain.last().expect("nonempty").len() > 1 {
        let (v, touching) = find_extremal_point(chain.last().expect("nonempty"))?;
        chain.push(peel(&touching, &v)?);
    }
    Ok(chain)
}

/// `a^2 = 4b^2 / (4b^2 - 1)`.
pub fn stack_squared_semi_axis(b: &ExactScalar) -> ExactScalar {
    let four_b2 = int(4) * b * b;
    &four_b2 / (&four_b2 - BigRational::one())
}

/// `S x {0, 1}` as an ellipsoidal set over `L x Z`, for `1/2 < b < 3/2`.
///
/// With the certificate form `q`, the new certificate is
/// `q(x) / a^2 + (t - 1/2)^2 / b^2 <= 1`, which meets the slices `t = 0, 1`
/// exactly in the original solid and misses every other integer slice.
pub fn stack(s: &EllipsoidalSet, b: &ExactScalar) -> Result<EllipsoidalSet> {
    if *b <= rat(1, 2) || *b >= rat(3, 2) {
        return Err(Error::BOutOfRange);
    }
    let d = s.dim();
    let a2 = stack_squared_semi_axis(b);
    let inner = s.certificate.matrix().scale(&(BigRational::one() / &a2));
    let mut m = RatMatrix::zeros(d + 1, d + 1);
    for i in 0..d {
        for j in 0..d {
            m[(i, j)] = inner[(i, j)].clone();
        }
    }
    m[(d, d)] = BigRational::one() / (b * b);
    let mut center = s.certificate.center().clone();
    center.push(rat(1, 2));
    let cert = Ellipsoid::new(m, center)?;
    let lattice = s.lattice.times_integers();
    let next = EllipsoidalSet::from_ellipsoid(cert, &lattice);
    let mut expected: Vec<IntVector> = Vec::with_capacity(2 * s.len());
    for t in [0, 1] {
        for p in &s.points {
            let mut q = p.clone();
            q.push(t);
            expected.push(q);
        }
    }
    expected.sort_by_cached_key(|y| lattice.from_coords(y));
    if next.points != expected {
        return Err(Error::CertificateMismatch);
    }
    Ok(next)
}
