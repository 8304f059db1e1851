use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::normal_form::{elementary_divisors, hnf};
use super::{int, rat, ExactScalar, IntMatrix, IntVector, RatMatrix, RatVector};
use crate::error::{Error, Result};

/// A full-rank affine lattice `shift + basis * Z^d` in `R^d`.
///
/// Basis vectors are the columns of `basis`. Membership is decided exactly by
/// checking that `basis^-1 (x - shift)` is integral.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineLattice {
    basis: RatMatrix,
    inverse: RatMatrix,
    shift: RatVector,
}

impl AffineLattice {
    pub fn new(basis: RatMatrix, shift: RatVector) -> Result<Self> {
        if basis.rows() != basis.cols() {
            return Err(Error::DimensionMismatch { expected: basis.rows(), actual: basis.cols() });
        }
        if shift.len() != basis.rows() {
            return Err(Error::DimensionMismatch { expected: basis.rows(), actual: shift.len() });
        }
        let inverse = basis.inverse().ok_or(Error::SingularBasis)?;
        Ok(Self { basis, inverse, shift })
    }

    pub fn standard(d: usize) -> Self {
        Self {
            basis: RatMatrix::identity(d),
            inverse: RatMatrix::identity(d),
            shift: vec![ExactScalar::zero(); d],
        }
    }

    /// `Z^d + Z (1/2, ..., 1/2)`, with basis `e_1, ..., e_{d-1}, (1/2, ..., 1/2)`.
    pub fn half_integer(d: usize) -> Self {
        assert!(d >= 1);
        let mut cols: Vec<RatVector> = (0..d - 1)
            .map(|i| (0..d).map(|j| if i == j { int(1) } else { int(0) }).collect())
            .collect();
        cols.push(vec![rat(1, 2); d]);
        Self::new(RatMatrix::from_columns(&cols), vec![int(0); d]).expect("nonsingular")
    }

    pub fn dim(&self) -> usize {
        self.shift.len()
    }

    pub fn basis(&self) -> &RatMatrix {
        &self.basis
    }

    pub fn shift(&self) -> &RatVector {
        &self.shift
    }

    pub fn has_zero_shift(&self) -> bool {
        self.shift.iter().all(Zero::is_zero)
    }

    pub fn translations(&self) -> AffineLattice {
        Self {
            basis: self.basis.clone(),
            inverse: self.inverse.clone(),
            shift: vec![ExactScalar::zero(); self.dim()],
        }
    }

    /// Rational coordinates `basis^-1 (x - shift)`.
    pub fn rational_coords(&self, x: &[ExactScalar]) -> RatVector {
        let diff: RatVector = x.iter().zip(&self.shift).map(|(a, b)| a - b).collect();
        self.inverse.mul_vec(&diff)
    }

    pub fn to_coords(&self, x: &[ExactScalar]) -> Result<IntVector> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), actual: x.len() });
        }
        self.rational_coords(x)
            .iter()
            .map(|c| {
                if !c.is_integer() {
                    return Err(Error::PointNotInLattice);
                }
                c.to_integer().to_i64().ok_or(Error::CoordinateOverflow)
            })
            .collect()
    }

    pub fn from_coords(&self, y: &[i64]) -> RatVector {
        let yr: RatVector = y.iter().map(|&v| int(v)).collect();
        self.basis.mul_vec(&yr).into_iter().zip(&self.shift).map(|(a, b)| a + b).collect()
    }

    pub fn rational_from_coords(&self, y: &[ExactScalar]) -> RatVector {
        self.basis.mul_vec(y).into_iter().zip(&self.shift).map(|(a, b)| a + b).collect()
    }

    /// Ambient vector of a translation given in lattice coordinates.
    pub fn direction_from_coords(&self, y: &[ExactScalar]) -> RatVector {
        self.basis.mul_vec(y)
    }

    pub fn direction_to_coords(&self, v: &[ExactScalar]) -> RatVector {
        self.inverse.mul_vec(v)
    }

    pub fn contains(&self, x: &[ExactScalar]) -> bool {
        x.len() == self.dim() && self.rational_coords(x).iter().all(BigRational::is_integer)
    }

    /// Same point set, possibly with a different basis or shift representative.
    pub fn same_lattice(&self, other: &AffineLattice) -> bool {
        if self.dim() != other.dim() {
            return false;
        }
        let t = self.inverse.mul(&other.basis);
        match t.to_integer() {
            Some(t) if t.det().abs().is_one() => self.contains(&other.shift),
            _ => false,
        }
    }

    /// `L x Z` in one more dimension.
    pub fn times_integers(&self) -> AffineLattice {
        let d = self.dim();
        let mut b = RatMatrix::zeros(d + 1, d + 1);
        for i in 0..d {
            for j in 0..d {
                b[(i, j)] = self.basis[(i, j)].clone();
            }
        }
        b[(d, d)] = int(1);
        let mut shift = self.shift.clone();
        shift.push(int(0));
        AffineLattice::new(b, shift).expect("nonsingular")
    }

    /// Exact linear map `T` with `T * L = Z^d` (the inverse basis), for zero-shift lattices.
    pub fn isomorphism_to_standard(&self) -> Result<RatMatrix> {
        if !self.has_zero_shift() {
            return Err(Error::ShiftNotZero);
        }
        Ok(self.inverse.clone())
    }
}

/// A subgroup of the translation lattice of an [`AffineLattice`], stored as
/// HNF generator rows in the parent's lattice coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeSubgroup {
    parent: AffineLattice,
    generators: IntMatrix,
}

impl LatticeSubgroup {
    pub fn from_generators(parent: &AffineLattice, gens: &[IntVector]) -> Self {
        let d = parent.dim();
        let rows: Vec<Vec<i64>> = if gens.is_empty() { vec![vec![0; d]] } else { gens.to_vec() };
        let (h, _) = hnf(&IntMatrix::from_rows(&rows));
        let nonzero: Vec<usize> =
            (0..h.rows()).filter(|&i| h.row(i).iter().any(|x| !x.is_zero())).collect();
        let mut data = Vec::new();
        for &i in &nonzero {
            data.extend(h.row(i).iter().cloned());
        }
        Self {
            parent: parent.translations(),
            generators: IntMatrix::from_big(nonzero.len(), d, data),
        }
    }

    pub fn rank(&self) -> usize {
        self.generators.rows()
    }

    pub fn parent(&self) -> &AffineLattice {
        &self.parent
    }

    /// HNF basis rows in parent lattice coordinates.
    pub fn hnf_basis(&self) -> &IntMatrix {
        &self.generators
    }

    pub fn ambient_basis(&self) -> Vec<RatVector> {
        (0..self.rank())
            .map(|i| {
                let y: RatVector =
                    self.generators.row(i).iter().map(|x| BigRational::from_integer(x.clone())).collect();
                self.parent.direction_from_coords(&y)
            })
            .collect()
    }

    /// Index in the parent lattice; `None` if the rank is deficient.
    pub fn index_in_parent(&self) -> Option<BigInt> {
        if self.rank() != self.parent.dim() {
            return None;
        }
        Some(self.generators.det().abs())
    }

    pub fn is_parent(&self) -> bool {
        self.index_in_parent().is_some_and(|i| i.is_one())
    }

    /// True iff the subgroup is a direct summand of the parent lattice.
    pub fn is_saturated(&self) -> bool {
        elementary_divisors(&self.generators).iter().all(One::is_one)
    }
}

/// Index `[super : sub]` for zero-shift lattices with `sub ⊆ super`.
pub fn lattice_index(sub: &AffineLattice, sup: &AffineLattice) -> Result<BigInt> {
    if !sub.has_zero_shift() || !sup.has_zero_shift() {
        return Err(Error::ShiftNotZero);
    }
    if sub.dim() != sup.dim() {
        return Err(Error::DimensionMismatch { expected: sup.dim(), actual: sub.dim() });
    }
    let t = sup.inverse.mul(&sub.basis).to_integer().ok_or(Error::NotSublattice)?;
    Ok(t.det().abs())
}

/// True iff the subgroup of `Z^d` generated by `gens` is a direct summand.
pub fn is_direct_summand(gens: &[IntVector], d: usize) -> bool {
    if gens.is_empty() {
        return true;
    }
    debug_assert!(gens.iter().all(|g| g.len() == d));
    let m = IntMatrix::from_columns(gens, d);
    elementary_divisors(&m).iter().all(One::is_one)
}

pub fn primitive(v: &[i64]) -> Result<IntVector> {
    let mut out = v.to_vec();
    if out.iter().all(|&x| x == 0) {
        return Err(Error::ZeroVector);
    }
    super::small::make_primitive(&mut out);
    Ok(out)
}

/// Smith-form data of the lattice spanned by integer columns: the saturated
/// basis of their span (first `rank` columns of a unimodular completion) and
/// the completion's inverse, whose first `rank` rows give coordinates.
pub(crate) struct SpanFrame {
    pub rank: usize,
    /// columns of a unimodular matrix; the first `rank` span the saturation
    pub completion: IntMatrix,
    /// inverse of `completion`
    pub coordinates: IntMatrix,
}

pub(crate) fn span_frame(vectors: &[IntVector], d: usize) -> SpanFrame {
    if vectors.is_empty() || vectors.iter().all(|v| v.iter().all(|&x| x == 0)) {
        return SpanFrame {
            rank: 0,
            completion: IntMatrix::identity(d),
            coordinates: IntMatrix::identity(d),
        };
    }
    let m = IntMatrix::from_columns(vectors, d);
    let (s, u, _) = super::snf(&m);
    let rank = (0..s.rows().min(s.cols())).filter(|&i| !s[(i, i)].is_zero()).count();
    let uinv = u
        .to_rational()
        .inverse()
        .and_then(|x| x.to_integer())
        .expect("unimodular transform has an integral inverse");
    SpanFrame { rank, completion: uinv, coordinates: u }
}
