//! Hulls, lattice-point counts and normality against brute-force oracles.

mod common;

use latcover::ellipsoid::{descent_chain, find_extremal_point, peel, stack, Ellipsoid, EllipsoidalSet};
use latcover::exact::{int, rat, AffineLattice, IntVector, RatMatrix};
use latcover::normality::{is_normal, is_normal_by_hilbert_basis};
use latcover::polytope::LatticePolytope;
use num_integer::Integer;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn cross(a: &[i64], b: &[i64]) -> [i64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Facets of the hull of full-dimensional points in space: every plane
/// through three input points with all points weakly on one side, as a
/// primitive outer normal and offset.
fn brute_facets(pts: &[IntVector]) -> Vec<(Vec<i64>, i64)> {
    let mut out = Vec::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            for k in j + 1..pts.len() {
                let n = cross(&sub(&pts[j], &pts[i]), &sub(&pts[k], &pts[i]));
                if n == [0, 0, 0] {
                    continue;
                }
                let g = n.iter().fold(0i64, |g, &x| g.gcd(&x));
                let mut n: Vec<i64> = n.iter().map(|x| x / g).collect();
                let h = dot(&n, &pts[i]);
                let vals: Vec<i64> = pts.iter().map(|p| dot(&n, p) - h).collect();
                if vals.iter().all(|&v| v <= 0) {
                    out.push((n, h));
                } else if vals.iter().all(|&v| v >= 0) {
                    n.iter_mut().for_each(|x| *x = -*x);
                    out.push((n, -h));
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Lattice points of `c` times the hull, by scanning a bounding box against
/// the brute-force facets.
fn brute_dilate_points(pts: &[IntVector], c: i64) -> Vec<IntVector> {
    let facets = brute_facets(pts);
    let lo: Vec<i64> = (0..3).map(|i| pts.iter().map(|p| p[i]).min().unwrap() * c).collect();
    let hi: Vec<i64> = (0..3).map(|i| pts.iter().map(|p| p[i]).max().unwrap() * c).collect();
    let mut out = Vec::new();
    for x in lo[0]..=hi[0] {
        for y in lo[1]..=hi[1] {
            for z in lo[2]..=hi[2] {
                let v = vec![x, y, z];
                if facets.iter().all(|(n, h)| dot(n, &v) <= c * h) {
                    out.push(v);
                }
            }
        }
    }
    out
}

fn random_points(rng: &mut ChaCha8Rng) -> LatticePolytope {
    common::random_polytope_3d(rng, 3, 6)
}

#[test]
fn facets_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..30 {
        let p = random_points(&mut rng);
        let pts = p.lattice_point_coords().to_vec();
        let mut facets: Vec<(Vec<i64>, i64)> = p
            .ambient_facets()
            .iter()
            .map(|(n, h)| {
                let den = BigRational::from_integer(n.iter().fold(h.denom().clone(), |a, x| a.lcm(x.denom())));
                let whole = |x: &BigRational| -> i64 { (x * &den).to_integer().try_into().unwrap() };
                let scaled: Vec<i64> = n.iter().map(whole).collect();
                let g = scaled.iter().fold(0i64, |g, &x| g.gcd(&x));
                (scaled.iter().map(|x| x / g).collect(), whole(h) / g)
            })
            .collect();
        facets.sort();
        assert_eq!(facets, brute_facets(&pts));
        for v in p.vertex_coords() {
            assert!(pts.contains(v));
        }
    }
}

#[test]
fn ehrhart_counts_match_box_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..15 {
        let p = random_points(&mut rng);
        let pts = p.lattice_point_coords().to_vec();
        let mut direct = p.lattice_point_coords().to_vec();
        direct.sort();
        assert_eq!(direct, brute_dilate_points(&pts, 1));
        for c in 2..=3 {
            assert_eq!(p.dilated_point_coords(c), brute_dilate_points(&pts, c), "dilate {c}");
        }
    }
}

#[test]
fn ehrhart_of_boxes_and_corner_simplices() {
    for (a, b, c) in [(1, 1, 1), (2, 1, 3), (3, 2, 2)] {
        let box_pts = (0..8).map(|i| vec![(i & 1) * a, ((i >> 1) & 1) * b, ((i >> 2) & 1) * c]).collect();
        let bx = LatticePolytope::from_coords(AffineLattice::standard(3), box_pts).unwrap();
        for t in 1..=3 {
            assert_eq!(bx.dilated_point_coords(t).len() as i64, (t * a + 1) * (t * b + 1) * (t * c + 1));
        }
        let simplex = LatticePolytope::from_coords(
            AffineLattice::standard(3),
            vec![vec![0, 0, 0], vec![a, 0, 0], vec![0, b, 0], vec![0, 0, c]],
        )
        .unwrap();
        for t in 1..=3 {
            let mut count = 0;
            for x in 0..=t * a {
                for y in 0..=t * b {
                    for z in 0..=t * c {
                        if x * b * c + y * a * c + z * a * b <= t * a * b * c {
                            count += 1;
                        }
                    }
                }
            }
            assert_eq!(simplex.dilated_point_coords(t).len(), count);
        }
    }
}

#[test]
fn both_normality_routes_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    let mut seen = [0usize; 2];
    for _ in 0..40 {
        let p = common::random_polytope_3d(&mut rng, 3, 4);
        let fast = is_normal(&p);
        assert_eq!(fast.is_normal, is_normal_by_hilbert_basis(&p), "{:?}", p.vertex_coords());
        if let Some((c, x)) = &fast.witness {
            let y = p.lattice().to_coords(x).unwrap();
            assert!(brute_dilate_points(p.lattice_point_coords(), *c).contains(&y));
        }
        seen[usize::from(fast.is_normal)] += 1;
    }
    assert!(seen[0] > 0 && seen[1] > 0, "{seen:?}");
}

fn set_from(diag: [i64; 3], r: i64, center: [i64; 3]) -> EllipsoidalSet {
    let rows = (0..3).map(|i| (0..3).map(|j| if i == j { rat(diag[i], r) } else { int(0) }).collect()).collect();
    let c = center.iter().map(|&x| rat(x, 3)).collect();
    let e = Ellipsoid::new(RatMatrix::from_rows(rows).unwrap(), c).unwrap();
    EllipsoidalSet::from_ellipsoid(e, &AffineLattice::standard(3))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn peeling_removes_exactly_one_point(
        diag in prop::array::uniform3(1i64..5), r in 2i64..12, center in prop::array::uniform3(-3i64..4)
    ) {
        let s = set_from(diag, r, center);
        prop_assume!(s.len() >= 2);
        let (v, on_surface) = find_extremal_point(&s).unwrap();
        prop_assert!(on_surface.certificate().on_surface(&v));
        let peeled = peel(&on_surface, &v).unwrap();
        prop_assert!(peeled.verify());
        prop_assert_eq!(peeled.len() + 1, s.len());
        let y: IntVector = s.lattice().to_coords(&v).unwrap();
        prop_assert!(!peeled.contains_coords(&y));
        for p in peeled.point_coords() {
            prop_assert!(s.contains_coords(p));
        }
    }

    #[test]
    fn descent_chains_shrink_one_point_at_a_time(
        diag in prop::array::uniform3(1i64..5), r in 2i64..8, center in prop::array::uniform3(-3i64..4)
    ) {
        let s = set_from(diag, r, center);
        prop_assume!(!s.is_empty());
        let chain = descent_chain(&s).unwrap();
        prop_assert_eq!(chain.len(), s.len());
        for (k, step) in chain.iter().enumerate() {
            prop_assert!(step.verify());
            prop_assert_eq!(step.len(), s.len() - k);
        }
    }

    #[test]
    fn stacking_doubles_and_certifies(
        diag in prop::array::uniform3(1i64..5), r in 2i64..8, center in prop::array::uniform3(-3i64..4),
        b in 4i64..9
    ) {
        let s = set_from(diag, r, center);
        prop_assume!(!s.is_empty());
        let t = stack(&s, &rat(b, 6)).unwrap();
        prop_assert!(t.verify());
        prop_assert_eq!(t.len(), 2 * s.len());
        for y in s.point_coords() {
            for h in [0, 1] {
                let mut z = y.clone();
                z.push(h);
                prop_assert!(t.contains_coords(&z));
            }
        }
    }
}
