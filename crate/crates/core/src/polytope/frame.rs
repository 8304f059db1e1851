use num_rational::BigRational;
use num_traits::Zero;

use crate::exact::small;
use crate::exact::{ExactScalar, IntVector, RatVector};

/// Integral affine coordinates on the affine hull of a point set.
///
/// `origin + basis * Z^k` is exactly the set of lattice points in the affine
/// hull; `coords` is the inverse of a unimodular completion of `basis`, so its
/// first `k` rows produce local coordinates and the remaining rows are the
/// equations of the hull.
#[derive(Clone, Debug)]
pub(crate) struct AffineFrame {
    pub origin: IntVector,
    pub basis: Vec<IntVector>,
    pub coords: Vec<IntVector>,
}

impl AffineFrame {
    pub fn new(points: &[IntVector]) -> Self {
        let origin = points[0].clone();
        let n = origin.len();
        let diffs: Vec<IntVector> = points[1..].iter().map(|p| small::sub(p, &origin)).collect();
        let frame = crate::exact::lattice::span_frame(&diffs, n);
        let completion = frame.completion.to_i64_rows().expect("frame fits in i64");
        let basis = (0..frame.rank).map(|j| (0..n).map(|i| completion[i][j]).collect()).collect();
        let coords = frame.coordinates.to_i64_rows().expect("frame fits in i64");
        Self { origin, basis, coords }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.origin.len()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    pub fn local(&self, y: &[i64]) -> Option<IntVector> {
        let d = small::sub(y, &self.origin);
        self.local_direction(&d)
    }

    pub fn local_direction(&self, d: &[i64]) -> Option<IntVector> {
        let k = self.dim();
        let w: Vec<i64> = self.coords.iter().map(|r| small::dot(r, d)).collect();
        if w[k..].iter().any(|&x| x != 0) {
            return None;
        }
        Some(w[..k].to_vec())
    }

    /// Local coordinates of a rational point; `None` if it leaves the affine hull.
    pub fn local_rational(&self, y: &[ExactScalar]) -> Option<RatVector> {
        let k = self.dim();
        let d: RatVector =
            y.iter().zip(&self.origin).map(|(a, &b)| a - BigRational::from_integer(b.into())).collect();
        let w: RatVector = self
            .coords
            .iter()
            .map(|r| {
                r.iter().zip(&d).fold(BigRational::zero(), |acc, (&a, b)| {
                    acc + BigRational::from_integer(a.into()) * b
                })
            })
            .collect();
        if w[k..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(w[..k].to_vec())
    }

    pub fn global(&self, z: &[i64]) -> IntVector {
        let mut y = self.origin.clone();
        for (b, &c) in self.basis.iter().zip(z) {
            for (yi, bi) in y.iter_mut().zip(b) {
                *yi += bi * c;
            }
        }
        y
    }

    pub fn global_rational(&self, z: &[ExactScalar]) -> RatVector {
        let mut y: RatVector =
            self.origin.iter().map(|&o| BigRational::from_integer(o.into())).collect();
        for (b, c) in self.basis.iter().zip(z) {
            for (yi, &bi) in y.iter_mut().zip(b) {
                *yi += BigRational::from_integer(bi.into()) * c;
            }
        }
        y
    }

    /// Pulls a local linear functional back to the ambient lattice coordinates:
    /// `normal . local(y) = pulled . (y - origin)`.
    pub fn pull_back(&self, normal: &[i64]) -> IntVector {
        let n = self.ambient_dim();
        (0..n)
            .map(|j| normal.iter().zip(&self.coords).map(|(&a, row)| a * row[j]).sum())
            .collect()
    }

    /// The equations cutting out the affine hull, as rows with offsets.
    pub fn equations(&self) -> Vec<(IntVector, i64)> {
        self.coords[self.dim()..]
            .iter()
            .map(|r| (r.clone(), small::dot(r, &self.origin)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frame_of_a_plane() {
        let pts = vec![vec![0, 0, 1], vec![1, 0, 1], vec![0, 1, 1], vec![2, 3, 1]];
        let f = AffineFrame::new(&pts);
        assert_eq!(f.dim(), 2);
        for p in &pts {
            let z = f.local(p).unwrap();
            assert_eq!(&f.global(&z), p);
        }
        assert!(f.local(&[0, 0, 2]).is_none());
        let eq = f.equations();
        assert_eq!(eq.len(), 1);
        let (row, off) = &eq[0];
        for p in &pts {
            assert_eq!(small::dot(row, p), *off);
        }
    }

    #[test]
    fn saturated_frame_of_sparse_points() {
        // points along a line with step 2: the frame must still be saturated
        let pts = vec![vec![0, 0], vec![2, 2], vec![4, 4]];
        let f = AffineFrame::new(&pts);
        assert_eq!(f.dim(), 1);
        assert_eq!(f.local(&[2, 2]).map(|z| z[0].abs()), Some(2));
        assert_eq!(f.local(&[1, 1]).map(|z| z[0].abs()), Some(1));
    }
}
