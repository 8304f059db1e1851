use std::collections::BTreeSet;

use super::RationalCone;
use crate::error::Result;
use crate::exact::small;
use crate::exact::IntVector;
use crate::polytope::{parallelepiped_points, placing};

/// The minimal generating set of the monoid of lattice points of a cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertBasis {
    /// lattice coordinates, sorted lexicographically
    pub elements: Vec<IntVector>,
}

impl HilbertBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, y: &[i64]) -> bool {
        self.elements.binary_search_by(|e| e.as_slice().cmp(y)).is_ok()
    }

    /// Checks that every element lies in the cone and that no element is the
    /// sum of two nonzero lattice points of the cone.
    pub fn verify(&self, cone: &RationalCone) -> bool {
        self.elements.iter().all(|h| cone.contains_coords(h))
            && self.elements.iter().all(|x| {
                self.elements
                    .iter()
                    .all(|y| y == x || !cone.contains_coords(&small::sub(x, y)))
            })
    }
}

/// Simplicial cones covering `cone`, each given by `k` local ray vectors:
/// the cones over the boundary facets of `conv(0, rays)` missing the origin.
pub(crate) fn simplicial_pieces(cone: &RationalCone) -> Vec<Vec<IntVector>> {
    let k = cone.dim();
    let mut pts = vec![vec![0; k]];
    pts.extend(cone.local_rays().iter().cloned());
    let tri = placing(&pts);
    tri.boundary
        .iter()
        .filter(|f| !f.vertices.contains(&0))
        .map(|f| f.vertices.iter().map(|&i| pts[i].clone()).collect())
        .collect()
}

/// Hilbert basis of a pointed cone.
///
/// Every lattice point of a simplicial piece is a parallelepiped point plus
/// a nonnegative combination of the piece's rays, so those points generate
/// the monoid; the irreducible ones among them form the Hilbert basis.
pub fn hilbert_basis(cone: &RationalCone) -> Result<HilbertBasis> {
    let local = cone.hilbert.get_or_init(|| local_hilbert_basis(cone));
    let mut elements: Vec<IntVector> = local.iter().map(|z| cone.frame().global(z)).collect();
    elements.sort();
    Ok(HilbertBasis { elements })
}

/// Hilbert basis in the cone's local coordinates, sorted.
pub(crate) fn local_hilbert(cone: &RationalCone) -> &[IntVector] {
    cone.hilbert.get_or_init(|| local_hilbert_basis(cone))
}

fn local_hilbert_basis(cone: &RationalCone) -> Vec<IntVector> {
    let mut candidates: BTreeSet<IntVector> = cone.local_rays().iter().cloned().collect();
    for piece in simplicial_pieces(cone) {
        candidates.extend(parallelepiped_points(&piece).into_iter().skip(1));
        candidates.extend(piece);
    }
    let candidates: Vec<IntVector> = candidates.into_iter().collect();
    candidates
        .iter()
        .filter(|x| {
            candidates.iter().all(|y| y == *x || !cone.contains_local(&small::sub(x, y)))
        })
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::AffineLattice;

    fn cone(gens: &[&[i64]]) -> RationalCone {
        let d = gens[0].len();
        RationalCone::new(&AffineLattice::standard(d), &gens.iter().map(|g| g.to_vec()).collect::<Vec<_>>())
            .unwrap()
    }

    #[test]
    fn orthant_and_small_cones() {
        let hb = hilbert_basis(&cone(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])).unwrap();
        assert_eq!(hb.elements, vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
        let hb = hilbert_basis(&cone(&[&[1, 0], &[1, 2]])).unwrap();
        assert_eq!(hb.elements, vec![vec![1, 0], vec![1, 1], vec![1, 2]]);
        let c = cone(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 2]]);
        let hb = hilbert_basis(&c).unwrap();
        assert!(hb.contains(&[1, 1, 1]));
        assert_eq!(hb.len(), 4);
        assert!(hb.verify(&c));
    }

    #[test]
    fn two_dimensional_continued_fraction_cone() {
        // cone over (1,0) and (1,5): every (1,j) is needed
        let hb = hilbert_basis(&cone(&[&[1, 0], &[1, 5]])).unwrap();
        assert_eq!(hb.len(), 6);
        // cone over (0,1) and (3,-2): Hilbert basis (0,1),(1,0),(2,-1),(3,-2)
        let hb = hilbert_basis(&cone(&[&[0, 1], &[3, -2]])).unwrap();
        assert_eq!(hb.elements, vec![vec![0, 1], vec![1, 0], vec![2, -1], vec![3, -2]]);
    }

    #[test]
    fn cone_in_a_plane_of_space() {
        let c = cone(&[&[1, 0, 1], &[1, 2, 1]]);
        let hb = hilbert_basis(&c).unwrap();
        assert_eq!(hb.elements, vec![vec![1, 0, 1], vec![1, 1, 1], vec![1, 2, 1]]);
    }

    #[test]
    fn non_simplicial_cone() {
        // cone over the unit square at height 1: normal, so height-1 points suffice
        let c = cone(&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1]]);
        assert_eq!(hilbert_basis(&c).unwrap().len(), 4);
        // cone over the square [0,2]^2 at height 1 has 9 generators
        let c = cone(&[&[0, 0, 1], &[2, 0, 1], &[0, 2, 1], &[2, 2, 1]]);
        assert_eq!(hilbert_basis(&c).unwrap().len(), 9);
    }
}
