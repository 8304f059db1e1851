//! The half-integer ball family: counts, facet structure, the non-normal
//! dilate point and the stacked set, checked against independent oracles.

use latcover::ellipsoid::{
    build_qd_family, corner_inequality_solutions, half_integer_ray_contains, stack, stack_squared_semi_axis,
    verify_counterexample,
};
use latcover::exact::{int, rat};
use latcover::normality::{is_normal, is_normal_by_hilbert_basis};

/// Shell count of `(Z^d ∪ (Z^d + h)) ∩ B(d)` with `h = (1/2, ..., 1/2)`,
/// done in doubled coordinates `2x` where the ball is `|2x - 1|^2 <= d`.
fn shell_count(d: usize) -> usize {
    // integer points: 2x_i - 1 is odd, so each |2x_i - 1| >= 1 and the
    // bound forces every coordinate into {0, 1}
    let cube = 1usize << d;
    // half-integer points: 2x_i - 1 = 2m_i is even; count m with 4|m|^2 <= d
    let mut half = 0usize;
    let r = 2i64;
    let mut m = vec![-r; d];
    loop {
        if 4 * m.iter().map(|v| v * v).sum::<i64>() <= d as i64 {
            half += 1;
        }
        let mut i = 0;
        while i < d {
            m[i] += 1;
            if m[i] <= r {
                break;
            }
            m[i] = -r;
            i += 1;
        }
        if i == d {
            break;
        }
    }
    cube + half
}

#[test]
fn lattice_point_counts_match_the_shell_oracle() {
    for d in 5..=8 {
        let f = build_qd_family(d).unwrap();
        assert_eq!(f.p.num_lattice_points(), shell_count(d), "d = {d}");
        assert_eq!(f.q.num_lattice_points(), shell_count(d) - 1);
    }
    assert_eq!(shell_count(6), 77);
}

#[test]
fn delta_is_an_empty_facet() {
    for d in 5..=8 {
        let f = build_qd_family(d).unwrap();
        assert!(f.delta_is_facet && f.delta_is_empty, "d = {d}");
        assert!(corner_inequality_solutions(d).is_empty());
    }
}

#[test]
fn ray_points_satisfy_the_squared_radius_bound() {
    for d in 1..=8usize {
        for i in 0..d {
            for k in -4..=4i64 {
                assert_eq!(half_integer_ray_contains(d, i, k), 4 * k * k <= d as i64);
            }
        }
    }
}

#[test]
fn counterexample_in_dimension_six() {
    let r = verify_counterexample(6).unwrap();
    assert_eq!(r.lattice_points, 76);
    assert_eq!(r.target, vec![rat(5, 2); 6]);
    assert!(r.target_in_dilate);
    assert!(!r.representable);
    assert!(r.gp_is_lattice);
    assert!(!r.is_normal);
    assert_eq!(r.witness.as_ref().map(|w| w.0), Some(3));
}

#[test]
fn q5_is_normal() {
    let f = build_qd_family(5).unwrap();
    assert!(is_normal(&f.q).is_normal);
    assert!(is_normal_by_hilbert_basis(&f.q));
}

#[test]
fn stacking_q6() {
    let f = build_qd_family(6).unwrap();
    let s = f.q_set().unwrap();
    assert_eq!(s.len(), 76);
    let t = stack(&s, &int(1)).unwrap();
    assert_eq!(t.len(), 152);
    assert!(t.verify());
    assert_eq!(stack_squared_semi_axis(&int(1)), rat(4, 3));
}
