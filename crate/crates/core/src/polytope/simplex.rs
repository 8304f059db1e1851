use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::{AffineFrame, LatticePolytope};
use crate::error::{Error, Result};
use crate::exact::normal_form::elementary_divisors;
use crate::exact::small;
use crate::exact::{AffineLattice, ExactScalar, IntMatrix, IntVector, RatMatrix, RatVector};

/// A lattice simplex: affinely independent lattice points.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Simplex {
    lattice: AffineLattice,
    vertices: Vec<IntVector>,
}

impl Simplex {
    pub fn new(lattice: &AffineLattice, vertices: &[RatVector]) -> Result<Self> {
        let coords = vertices.iter().map(|v| lattice.to_coords(v)).collect::<Result<Vec<_>>>()?;
        Self::from_coords(lattice.clone(), coords)
    }

    pub fn from_coords(lattice: AffineLattice, vertices: Vec<IntVector>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        if let Some(bad) = vertices.iter().find(|v| v.len() != lattice.dim()) {
            return Err(Error::DimensionMismatch { expected: lattice.dim(), actual: bad.len() });
        }
        let refs: Vec<&[i64]> = vertices.iter().map(Vec::as_slice).collect();
        if small::affine_rank(&refs) + 1 != vertices.len() {
            return Err(Error::AffinelyDependent);
        }
        Ok(Self { lattice, vertices })
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn lattice(&self) -> &AffineLattice {
        &self.lattice
    }

    pub fn vertex_coords(&self) -> &[IntVector] {
        &self.vertices
    }

    pub fn vertices(&self) -> Vec<RatVector> {
        self.vertices.iter().map(|v| self.lattice.from_coords(v)).collect()
    }

    /// Edge vectors `x_i - x_0` in lattice coordinates.
    pub fn edges(&self) -> Vec<IntVector> {
        self.vertices[1..].iter().map(|v| small::sub(v, &self.vertices[0])).collect()
    }

    /// Index of the edge lattice in the lattice points of its linear span;
    /// for a full-dimensional simplex this is `|det|` of the edges.
    pub fn multiplicity(&self) -> BigInt {
        if self.dim() == 0 {
            return BigInt::one();
        }
        let m = IntMatrix::from_columns(&self.edges(), self.lattice.dim());
        elementary_divisors(&m).iter().map(|x| x.abs()).product()
    }

    pub fn is_unimodular(&self) -> bool {
        self.multiplicity().is_one()
    }

    pub fn to_polytope(&self) -> LatticePolytope {
        LatticePolytope::from_coords(self.lattice.clone(), self.vertices.clone())
            .expect("simplex is nonempty")
    }

    /// Barycentric coordinates of a point given in rational lattice
    /// coordinates, for a full-dimensional simplex.
    pub fn barycentric(&self, y: &[ExactScalar]) -> Option<RatVector> {
        let n = self.lattice.dim();
        if self.dim() != n {
            return None;
        }
        let cols: Vec<RatVector> = self
            .edges()
            .iter()
            .map(|e| e.iter().map(|&x| BigRational::from_integer(x.into())).collect())
            .collect();
        let inv = RatMatrix::from_columns(&cols).inverse()?;
        let rel: RatVector = y
            .iter()
            .zip(&self.vertices[0])
            .map(|(a, &b)| a - BigRational::from_integer(b.into()))
            .collect();
        let tail = inv.mul_vec(&rel);
        let first = tail.iter().fold(BigRational::one(), |acc, t| acc - t);
        let mut out = vec![first];
        out.extend(tail);
        Some(out)
    }

    /// Exact membership of an ambient point, for full-dimensional simplices.
    pub fn contains(&self, x: &[ExactScalar]) -> bool {
        let y = self.lattice.rational_coords(x);
        match self.barycentric(&y) {
            Some(b) => b.iter().all(|t| !t.is_negative()),
            None => self.to_polytope().contains(x),
        }
    }
}

/// True iff the edge vectors of `s` extend to a basis of its lattice.
pub fn is_unimodular_simplex(s: &Simplex) -> bool {
    s.is_unimodular()
}

/// True iff `p = conv(v, q)` for a single apex `v` at lattice height one
/// above `q` inside the affine hull of `p`.
pub fn is_unimodular_pyramid(p: &LatticePolytope, q: &LatticePolytope) -> bool {
    pyramid_apex(p, q).is_some()
}

/// The apex of `p` over `q` if `p` is a unimodular pyramid over `q`.
pub(crate) fn pyramid_apex(p: &LatticePolytope, q: &LatticePolytope) -> Option<IntVector> {
    if !p.lattice().same_lattice(q.lattice()) || p.dim() != q.dim() + 1 {
        return None;
    }
    if !q.vertex_coords().iter().all(|v| p.contains_coords(v)) {
        return None;
    }
    let outside: Vec<&IntVector> = p.vertex_coords().iter().filter(|v| !q.contains_coords(v)).collect();
    let [apex] = outside.as_slice() else { return None };
    let frame = p.frame();
    let base: Vec<IntVector> =
        q.vertex_coords().iter().map(|v| frame.local(v).expect("base lies in the pyramid")).collect();
    let apex_local = frame.local(apex).expect("apex lies in the pyramid");
    let eqs = AffineFrame::new(&base).equations();
    debug_assert_eq!(eqs.len(), 1);
    let (row, off) = &eqs[0];
    let height = (small::dot(row, &apex_local) - off).abs();
    (height == 1).then(|| (*apex).clone())
}
