//! Placing (beneath-beyond) triangulation of a full-dimensional point set in
//! `Z^k`, with exact integer orientation tests.

use std::collections::HashMap;

use crate::exact::small;
use crate::exact::IntVector;

#[derive(Clone, Debug)]
pub(crate) struct BoundaryFacet {
    /// sorted point indices, `k` of them
    pub vertices: Vec<usize>,
    /// outward primitive normal: the hull satisfies `normal . x <= offset`
    pub normal: IntVector,
    pub offset: i64,
}

#[derive(Clone, Debug)]
pub(crate) struct Triangulation {
    pub simplices: Vec<Vec<usize>>,
    pub boundary: Vec<BoundaryFacet>,
}

/// Triangulates `conv(points)`, inserting points in the given order. The
/// points must affinely span `Z^k` where `k` is their length.
pub(crate) fn placing(points: &[IntVector]) -> Triangulation {
    let k = points.first().map_or(0, Vec::len);
    if k == 0 {
        return Triangulation { simplices: vec![vec![0]], boundary: Vec::new() };
    }
    let mut initial = vec![0usize];
    for i in 1..points.len() {
        if initial.len() == k + 1 {
            break;
        }
        let mut trial: Vec<&[i64]> = initial.iter().map(|&j| points[j].as_slice()).collect();
        trial.push(&points[i]);
        if small::affine_rank(&trial) == initial.len() {
            initial.push(i);
        }
    }
    assert_eq!(initial.len(), k + 1, "points do not span the ambient space");

    // (k+1) times the centroid of the first simplex, an interior point of every later hull
    let mut inner = vec![0i64; k];
    for &i in &initial {
        for (a, b) in inner.iter_mut().zip(&points[i]) {
            *a += b;
        }
    }
    let scale = (k + 1) as i64;
    let oriented = |vertices: Vec<usize>| -> BoundaryFacet {
        let pts: Vec<&[i64]> = vertices.iter().map(|&i| points[i].as_slice()).collect();
        let mut normal = small::hyperplane_normal(&pts);
        let mut offset = small::dot(&normal, pts[0]);
        if small::dot(&normal, &inner) > scale * offset {
            normal.iter_mut().for_each(|x| *x = -*x);
            offset = -offset;
        }
        debug_assert!(small::dot(&normal, &inner) < scale * offset);
        BoundaryFacet { vertices, normal, offset }
    };

    let mut simplices = vec![initial.clone()];
    let mut boundary: Vec<BoundaryFacet> = (0..=k)
        .map(|skip| {
            let f: Vec<usize> =
                initial.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &v)| v).collect();
            oriented(f)
        })
        .collect();

    for p in 0..points.len() {
        if initial.contains(&p) {
            continue;
        }
        let x = &points[p];
        let visible: Vec<bool> =
            boundary.iter().map(|f| small::dot(&f.normal, x) > f.offset).collect();
        if !visible.iter().any(|&v| v) {
            continue;
        }
        let mut ridges: HashMap<Vec<usize>, usize> = HashMap::new();
        for (f, _) in boundary.iter().zip(&visible).filter(|(_, &v)| v) {
            let mut s = f.vertices.clone();
            s.push(p);
            simplices.push(s);
            for skip in 0..f.vertices.len() {
                let ridge: Vec<usize> = f
                    .vertices
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != skip)
                    .map(|(_, &v)| v)
                    .collect();
                *ridges.entry(ridge).or_insert(0) += 1;
            }
        }
        let mut next: Vec<BoundaryFacet> = boundary
            .into_iter()
            .zip(&visible)
            .filter(|(_, &v)| !v)
            .map(|(f, _)| f)
            .collect();
        let mut horizon: Vec<Vec<usize>> =
            ridges.into_iter().filter(|&(_, c)| c == 1).map(|(r, _)| r).collect();
        horizon.sort();
        for mut r in horizon {
            r.push(p);
            r.sort_unstable();
            next.push(oriented(r));
        }
        boundary = next;
    }
    for s in &mut simplices {
        s.sort_unstable();
    }
    Triangulation { simplices, boundary }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn volume(points: &[IntVector], t: &Triangulation) -> num_bigint::BigInt {
        t.simplices
            .iter()
            .map(|s| {
                let rows: Vec<Vec<i64>> =
                    s[1..].iter().map(|&i| small::sub(&points[i], &points[s[0]])).collect();
                small::det(&rows).abs()
            })
            .sum()
    }

    #[test]
    fn cube_triangulates_with_volume_six() {
        let mut pts = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    pts.push(vec![x, y, z]);
                }
            }
        }
        let t = placing(&pts);
        assert_eq!(volume(&pts, &t), 6.into());
        // boundary: 6 square facets, 2 triangles each
        assert_eq!(t.boundary.len(), 12);
    }

    #[test]
    fn segment_and_interior_points() {
        let pts = vec![vec![0], vec![3], vec![1], vec![-2]];
        let t = placing(&pts);
        assert_eq!(volume(&pts, &t), 5.into());
        assert_eq!(t.boundary.len(), 2);
    }

    #[test]
    fn square_with_center() {
        let pts = vec![vec![0, 0], vec![2, 0], vec![0, 2], vec![1, 1], vec![2, 2]];
        let t = placing(&pts);
        assert_eq!(volume(&pts, &t), 8.into());
    }
}
