use std::collections::BTreeSet;

use super::hilbert::local_hilbert;
use super::{escaping_hilbert_element, RationalCone};
use crate::error::{Error, Result};
use crate::exact::small;
use crate::exact::{AffineLattice, ExactScalar, IntVector};
use crate::polytope::{LatticePolytope, Simplex};

const NODE_LIMIT: usize = 500_000;

/// A triangulation of a 3-cone into unimodular cones whose rays are Hilbert
/// basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeboTriangulation {
    lattice: AffineLattice,
    /// rays used by the pieces, lattice coordinates, sorted
    pub rays: Vec<IntVector>,
    /// index triples into `rays`, each sorted, the list sorted
    pub pieces: Vec<[usize; 3]>,
}

impl SeboTriangulation {
    pub fn cones(&self) -> Vec<RationalCone> {
        self.pieces
            .iter()
            .map(|p| {
                let gens: Vec<IntVector> = p.iter().map(|&i| self.rays[i].clone()).collect();
                RationalCone::new(&self.lattice, &gens).expect("pieces are pointed")
            })
            .collect()
    }

    pub fn piece_rays(&self, i: usize) -> [&IntVector; 3] {
        self.pieces[i].map(|j| &self.rays[j])
    }
}

fn det3(a: &[i64], b: &[i64], c: &[i64]) -> i64 {
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
}

struct Search<'a> {
    h: &'a [IntVector],
    front: BTreeSet<(usize, usize)>,
    triangles: Vec<[usize; 3]>,
    nodes: usize,
}

impl Search<'_> {
    /// Positively oriented triangles never overlap in their interiors iff
    /// some edge line separates them.
    fn separated(&self, t: [usize; 3], u: [usize; 3]) -> bool {
        let h = self.h;
        let splits = |s: [usize; 3], o: [usize; 3]| {
            (0..3).any(|i| {
                let (a, b) = (&h[s[i]], &h[s[(i + 1) % 3]]);
                o.iter().all(|&x| det3(a, b, &h[x]) <= 0)
            })
        };
        splits(t, u) || splits(u, t)
    }

    fn candidates(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.h.len())
            .filter(|&c| det3(&self.h[a], &self.h[b], &self.h[c]) == 1)
            .filter(|&c| self.triangles.iter().all(|&t| self.separated([a, b, c], t)))
            .collect()
    }

    fn toggle(&mut self, x: usize, y: usize, log: &mut Vec<((usize, usize), bool)>) {
        if self.front.remove(&(x, y)) {
            log.push(((x, y), false));
        } else {
            self.front.insert((y, x));
            log.push(((y, x), true));
        }
    }

    fn run(&mut self) -> Option<bool> {
        if self.front.is_empty() {
            return Some(true);
        }
        self.nodes += 1;
        if self.nodes > NODE_LIMIT {
            return None;
        }
        let mut best: Option<((usize, usize), Vec<usize>)> = None;
        for &(a, b) in &self.front {
            let c = self.candidates(a, b);
            if c.is_empty() {
                return Some(false);
            }
            if best.as_ref().is_none_or(|(_, bc)| c.len() < bc.len()) {
                best = Some(((a, b), c));
            }
        }
        let ((a, b), cands) = best.expect("front is nonempty");
        for c in cands {
            let mut log = Vec::new();
            self.triangles.push([a, b, c]);
            self.toggle(a, b, &mut log);
            self.toggle(b, c, &mut log);
            self.toggle(c, a, &mut log);
            match self.run() {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
            self.triangles.pop();
            for (e, inserted) in log.into_iter().rev() {
                if inserted {
                    self.front.remove(&e);
                } else {
                    self.front.insert(e);
                }
            }
        }
        Some(false)
    }
}

/// A unimodular Hilbert triangulation of a pointed 3-dimensional cone.
///
/// Works in a cross-section: starting from the boundary edges between
/// consecutive Hilbert basis elements on each facet, triangles of
/// determinant one are attached to an advancing front, always expanding the
/// front edge with the fewest admissible apexes and backtracking on dead
/// ends. Candidates are tried in lexicographic order.
pub fn sebo_triangulation(cone: &RationalCone) -> Result<SeboTriangulation> {
    if cone.dim() != 3 {
        return Err(Error::DimensionNot3(cone.dim()));
    }
    let h = local_hilbert(cone);
    let w = cone.local_rays().iter().fold(vec![0i64; 3], |acc, r| small::add(&acc, r));

    let mut front = BTreeSet::new();
    for s in cone.local_supports() {
        let mut on_facet: Vec<usize> = (0..h.len()).filter(|&i| small::dot(s, &h[i]) == 0).collect();
        on_facet.sort_by(|&x, &y| 0.cmp(&det3(&h[x], &h[y], &w)));
        for pair in on_facet.windows(2) {
            front.insert((pair[0], pair[1]));
        }
    }
    let mut search = Search { h, front, triangles: Vec::new(), nodes: 0 };
    match search.run() {
        Some(true) => {}
        Some(false) => {
            return Err(Error::VerificationFailed("no unimodular Hilbert triangulation found".into()))
        }
        None => return Err(Error::SearchLimit(NODE_LIMIT)),
    }

    let used: BTreeSet<IntVector> =
        search.triangles.iter().flatten().map(|&i| cone.frame().global(&h[i])).collect();
    let rays: Vec<IntVector> = used.into_iter().collect();
    let index = |z: &IntVector| {
        let y = cone.frame().global(z);
        rays.binary_search(&y).expect("ray is used")
    };
    let mut pieces: Vec<[usize; 3]> = search
        .triangles
        .iter()
        .map(|t| {
            let mut p = t.map(|i| index(&h[i]));
            p.sort_unstable();
            p
        })
        .collect();
    pieces.sort_unstable();
    Ok(SeboTriangulation { lattice: cone.lattice().clone(), rays, pieces })
}

/// The unimodular simplices `conv(v, v + a, v + b, v + c)` over the pieces of
/// a unimodular Hilbert triangulation of the corner cone at `v`. Together
/// they form a neighbourhood of `v` in `p`.
pub fn vertex_cover_simplices(p: &LatticePolytope, v: &[ExactScalar]) -> Result<Vec<Simplex>> {
    let y = p.lattice().to_coords(v).map_err(|_| Error::NotAVertex)?;
    vertex_cover_coords(p, &y)?
        .into_iter()
        .map(|s| Simplex::from_coords(p.lattice().clone(), s))
        .collect()
}

pub(crate) fn vertex_cover_coords(p: &LatticePolytope, y: &[i64]) -> Result<Vec<Vec<IntVector>>> {
    if p.dim() != 3 {
        return Err(Error::DimensionNot3(p.dim()));
    }
    let cone = RationalCone::corner_at_coords(p, y)?;
    if let Some(h) = escaping_hilbert_element(p, y) {
        return Err(Error::NotVeryAmple { vertex: p.lattice().from_coords(y), hilbert: h });
    }
    let tri = sebo_triangulation(&cone)?;
    Ok(tri
        .pieces
        .iter()
        .map(|piece| {
            let mut s = vec![y.to_vec()];
            s.extend(piece.iter().map(|&i| small::add(y, &tri.rays[i])));
            s
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_vec;

    fn cone(gens: &[&[i64]]) -> RationalCone {
        RationalCone::new(&AffineLattice::standard(3), &gens.iter().map(|g| g.to_vec()).collect::<Vec<_>>())
            .unwrap()
    }

    fn check(c: &RationalCone, t: &SeboTriangulation) {
        let hb = super::super::hilbert_basis(c).unwrap();
        for r in &t.rays {
            assert!(hb.contains(r));
        }
        for cone in t.cones() {
            assert!(cone.is_unimodular());
        }
    }

    #[test]
    fn unimodular_cone_is_its_own_triangulation() {
        let c = cone(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let t = sebo_triangulation(&c).unwrap();
        assert_eq!(t.pieces.len(), 1);
        check(&c, &t);
    }

    #[test]
    fn stellar_split_of_the_reeve_cone() {
        let c = cone(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 2]]);
        let t = sebo_triangulation(&c).unwrap();
        assert_eq!(t.pieces.len(), 3);
        assert!(t.rays.contains(&vec![1, 1, 1]));
        for i in 0..3 {
            let [a, b, c] = t.piece_rays(i);
            assert_eq!(det3(a, b, c).abs(), 1);
        }
    }

    #[test]
    fn non_simplicial_cone() {
        let c = cone(&[&[0, 0, 1], &[3, 0, 1], &[0, 2, 1], &[2, 3, 1]]);
        let t = sebo_triangulation(&c).unwrap();
        check(&c, &t);
    }

    #[test]
    fn lower_dimensional_cones_are_rejected() {
        let c = cone(&[&[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(sebo_triangulation(&c).unwrap_err(), Error::DimensionNot3(2));
    }

    #[test]
    fn vertex_covers() {
        let pts: Vec<IntVector> = (0..8).map(|i| vec![i & 1, (i >> 1) & 1, (i >> 2) & 1]).collect();
        let cube = LatticePolytope::from_coords(AffineLattice::standard(3), pts).unwrap();
        let s = vertex_cover_simplices(&cube, &rat_vec(&[1, 1, 1])).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s[0].is_unimodular());
        let reeve = LatticePolytope::from_coords(
            AffineLattice::standard(3),
            vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 2]],
        )
        .unwrap();
        assert!(matches!(
            vertex_cover_simplices(&reeve, &rat_vec(&[0, 0, 0])),
            Err(Error::NotVeryAmple { .. })
        ));
        // the Reeve corner cone inside a large box: three tetrahedra
        let big = LatticePolytope::from_coords(
            AffineLattice::standard(3),
            vec![vec![0, 0, 0], vec![4, 0, 0], vec![0, 4, 0], vec![4, 4, 8]],
        )
        .unwrap();
        let s = vertex_cover_simplices(&big, &rat_vec(&[0, 0, 0])).unwrap();
        assert_eq!(s.len(), 3);
        assert!(s.iter().all(Simplex::is_unimodular));
    }
}
